//! Strong-field ionization of a one-dimensional zero-range atom in a
//! half-cycle laser pulse, in Hartree atomic units throughout.
//!
//! The crate computes photoelectron momentum distributions (PMD) from the
//! strong-field approximation with and without under-the-barrier
//! rescattering, both by direct oscillatory quadrature and by complex
//! saddle-point analysis, and turns them into tunneling-time observables:
//! peak momentum shifts, attoclock deflection angles, and exit-time
//! distributions obtained by backpropagating the asymptotic wave packet.
//! A 3D short-range variant, a quasistatic Wigner-delay estimate, and an
//! independent grid TDSE cross-check are included.
//!
//! Entry points:
//! * [`model`] — pulse shape, vector potential, derived parameters,
//! * [`amplitudes`] — numeric SFA ionization amplitudes,
//! * [`saddle`] — quantum-orbit saddle points and SPA amplitudes,
//! * [`observables`] — PMD, peak shifts, angles, delay scans,
//! * [`backprop`] — asymptotic wave function and exit-time distributions,
//! * [`model3d`] — 3D short-range estimate along the polarization axis,
//! * [`tdse`] — split-operator grid propagation used as an oracle,
//! * [`cli`] — the command-line driver behind the `attoclock` binary.
//!
//! Each major capability also has a runnable demo under `examples/`.

pub mod amplitudes;
pub mod backprop;
pub mod cli;
mod dd;
pub mod error;
pub mod model;
pub mod model3d;
pub mod observables;
pub(crate) mod quad;
pub mod saddle;
pub mod specfun;
pub mod tdse;

pub use error::{Error, Result};
pub use model::{DerivedParams, ModelParams};

/// Shorthand used across the crate for complex double precision.
pub type C64 = num_complex::Complex64;
