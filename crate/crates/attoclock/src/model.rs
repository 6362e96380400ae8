//! Atom/pulse parameterization: the half-cycle field E(t) = -E0 cos²(ωt),
//! its vector potential, closed-form Volkov integrals, and derived scalars.
//!
//! Everything is in Hartree atomic units. All functions here are pure and
//! reentrant; the closed forms accept complex time by analytic continuation
//! of the in-pulse expressions (used by the saddle-point solvers).

use crate::error::{Error, Result};
use crate::C64;

/// Atom and pulse parameters: κ = √(2 I_p), peak field E0, frequency ω.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Bound-state decay constant κ (inverse length).
    pub kappa: f64,
    /// Peak field strength E0.
    pub e0: f64,
    /// Angular frequency ω of the cos² envelope.
    pub omega: f64,
}

/// Quantities derived from [`ModelParams`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    /// Half pulse duration t_f = π/(2ω); the pulse lives on [-t_f, t_f].
    pub t_f: f64,
    /// Effective frequency ω̃ = √2·ω of the cos² pulse.
    pub omega_eff: f64,
    /// Keldysh parameter γ = ω̃κ/E0.
    pub gamma: f64,
    /// Atomic field E_a = κ³.
    pub e_atomic: f64,
    /// Barrier-suppression threshold E_th = (16/27)κ³ of the 1D zero-range atom.
    pub e_threshold: f64,
}

impl ModelParams {
    pub fn new(kappa: f64, e0: f64, omega: f64) -> Result<Self> {
        let p = ModelParams { kappa, e0, omega };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.kappa > 0.0) || !self.kappa.is_finite() {
            return Err(Error::Config(format!("kappa must be positive, got {}", self.kappa)));
        }
        if !(self.e0 > 0.0) || !self.e0.is_finite() {
            return Err(Error::Config(format!("E0 must be positive, got {}", self.e0)));
        }
        if !(self.omega > 0.0) || !self.omega.is_finite() {
            return Err(Error::Config(format!("omega must be positive, got {}", self.omega)));
        }
        Ok(())
    }

    /// Ionization potential I_p = κ²/2.
    pub fn ionization_potential(&self) -> f64 {
        0.5 * self.kappa * self.kappa
    }

    pub fn t_f(&self) -> f64 {
        std::f64::consts::FRAC_PI_2 / self.omega
    }
}

/// Populate all derived scalars. Rejects non-positive inputs.
pub fn derive_params(p: &ModelParams) -> Result<DerivedParams> {
    p.validate()?;
    let e_atomic = p.kappa.powi(3);
    let omega_eff = std::f64::consts::SQRT_2 * p.omega;
    Ok(DerivedParams {
        t_f: p.t_f(),
        omega_eff,
        gamma: omega_eff * p.kappa / p.e0,
        e_atomic,
        e_threshold: 16.0 / 27.0 * e_atomic,
    })
}

/// Barrier-suppression threshold for a Coulomb system of effective charge Z,
/// E_th/E_a = (κ/Z)(2/27), tunneling along the parabolic coordinate.
pub fn threshold_field_coulomb(kappa: f64, z_eff: f64) -> Result<f64> {
    if !(kappa > 0.0) {
        return Err(Error::Config(format!("kappa must be positive, got {kappa}")));
    }
    if !(z_eff > 0.0) {
        return Err(Error::Config(format!("effective charge must be positive, got {z_eff}")));
    }
    Ok(2.0 / 27.0 * (kappa / z_eff) * kappa.powi(3))
}

/// Electric field E(t) = -E0 cos²(ωt) inside |t| ≤ t_f, zero outside.
pub fn electric_field(t: f64, p: &ModelParams) -> f64 {
    let t_f = p.t_f();
    if t.abs() > t_f {
        0.0
    } else {
        let c = (p.omega * t).cos();
        -p.e0 * c * c
    }
}

/// Analytic continuation of the in-pulse field; valid for saddle roots with
/// |Re t| < t_f.
pub fn electric_field_c(t: C64, p: &ModelParams) -> C64 {
    let c = (p.omega * t).cos();
    -p.e0 * c * c
}

/// dE/dt continued to complex time (in-pulse form).
pub fn electric_field_deriv_c(t: C64, p: &ModelParams) -> C64 {
    // E'(t) = E0 ω sin(2ωt)
    p.e0 * p.omega * (2.0 * p.omega * t).sin()
}

/// Vector potential A(t) = -∫_{t_f}^{t} E ds. Constant outside the pulse:
/// 0 for t > t_f and -E0·t_f for t < -t_f, so post-pulse motion is strictly
/// field-free. Monotone nondecreasing.
pub fn vector_potential(t: f64, p: &ModelParams) -> f64 {
    let t_f = p.t_f();
    if t >= t_f {
        0.0
    } else if t <= -t_f {
        -p.e0 * t_f
    } else {
        -p.e0 * (0.5 * (t_f - t) - (2.0 * p.omega * t).sin() / (4.0 * p.omega))
    }
}

/// In-pulse closed form of A continued to complex time.
pub fn vector_potential_c(t: C64, p: &ModelParams) -> C64 {
    let t_f = p.t_f();
    -p.e0 * (0.5 * (t_f - t) - (2.0 * p.omega * t).sin() / (4.0 * p.omega))
}

/// A(0) = -E0·t_f/2 = -E0 π/(4ω); the direct-only PMD peaks at p = -A(0).
pub fn a0(p: &ModelParams) -> f64 {
    -0.5 * p.e0 * p.t_f()
}

/// Exact antiderivatives (∫_t^{t_f} A dτ, ∫_t^{t_f} A² dτ) of the in-pulse
/// vector potential. Both vanish at t = t_f; d/dt of the first equals -A(t).
/// Requires |t| ≤ t_f for real arguments.
pub fn field_integrals(t: f64, p: &ModelParams) -> (f64, f64) {
    let (ia, ia2) = field_integrals_c(C64::new(t, 0.0), p);
    (ia.re, ia2.re)
}

/// Complex-time version of [`field_integrals`] (analytic continuation of the
/// in-pulse closed forms).
pub fn field_integrals_c(t: C64, p: &ModelParams) -> (C64, C64) {
    let w = p.omega;
    let t_f = p.t_f();
    let dt = t_f - t;
    let s2 = (2.0 * w * t).sin();
    let c2 = (2.0 * w * t).cos();
    let s4 = (4.0 * w * t).sin();

    let ia = -p.e0 * (dt * dt / 4.0 - (1.0 + c2) / (8.0 * w * w));

    let e0sq = p.e0 * p.e0;
    let ia2 = e0sq
        * (dt * dt * dt / 12.0 - (dt * c2 / (2.0 * w) + s2 / (4.0 * w * w)) / (4.0 * w)
            + (dt / 2.0 + s4 / (8.0 * w)) / (16.0 * w * w));
    (ia, ia2)
}
