//! Quadrature kernels: runtime Gauss–Legendre rules and an adaptive
//! complex-valued integrator with worst-interval-first refinement.
//!
//! The SFA time integrals are smooth but highly oscillatory; an embedded
//! GL(15)/GL(31) pair with bisection refinement resolves them to the
//! requested absolute tolerance without any precomputed tables.

use crate::error::{Error, Result};
use crate::C64;
use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

/// Gauss–Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GlRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Nodes/weights by Newton iteration on P_n (Numerical-Recipes style gauleg).
pub fn gauss_legendre(n: usize) -> GlRule {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-based initial guess for the i-th root
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut pp = 0.0;
        for _ in 0..100 {
            // evaluate P_n(x) and its derivative by upward recurrence
            let mut p1 = 1.0;
            let mut p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j as f64 + 1.0) * x * p2 - j as f64 * p3) / (j as f64 + 1.0);
            }
            pp = n as f64 * (x * p1 - p2) / (x * x - 1.0);
            let dx = p1 / pp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    GlRule { nodes, weights }
}

fn rule_15() -> &'static GlRule {
    static R: OnceLock<GlRule> = OnceLock::new();
    R.get_or_init(|| gauss_legendre(15))
}

fn rule_31() -> &'static GlRule {
    static R: OnceLock<GlRule> = OnceLock::new();
    R.get_or_init(|| gauss_legendre(31))
}

pub fn rule_32() -> &'static GlRule {
    static R: OnceLock<GlRule> = OnceLock::new();
    R.get_or_init(|| gauss_legendre(32))
}

/// Fixed-rule integral of a complex integrand over [a, b].
pub fn gl_integrate<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64, rule: &GlRule) -> C64 {
    let xm = 0.5 * (a + b);
    let xr = 0.5 * (b - a);
    let mut acc = C64::new(0.0, 0.0);
    for (x, w) in rule.nodes.iter().zip(rule.weights.iter()) {
        acc += *w * f(xm + xr * x);
    }
    xr * acc
}

#[derive(Debug)]
struct Panel {
    a: f64,
    b: f64,
    value: C64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.partial_cmp(&other.err).unwrap_or(Ordering::Equal)
    }
}

fn eval_panel<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64) -> Panel {
    let coarse = gl_integrate(f, a, b, rule_15());
    let fine = gl_integrate(f, a, b, rule_31());
    Panel { a, b, value: fine, err: (fine - coarse).norm() }
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: C64,
    pub err_estimate: f64,
    pub panels: usize,
}

/// Adaptive integration of a complex integrand over [a, b] to an absolute
/// tolerance. `context` tags non-convergence errors with the calling site.
pub fn integrate_adaptive<F: Fn(f64) -> C64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    max_panels: usize,
    context: &'static str,
) -> Result<QuadResult> {
    if a == b {
        return Ok(QuadResult { value: C64::new(0.0, 0.0), err_estimate: 0.0, panels: 0 });
    }
    let mut heap = BinaryHeap::new();
    // seed with a handful of panels so long oscillatory ranges start resolved
    let seed = 8.min(max_panels.max(1));
    let h = (b - a) / seed as f64;
    for i in 0..seed {
        heap.push(eval_panel(f, a + i as f64 * h, a + (i + 1) as f64 * h));
    }
    let mut n = seed;
    loop {
        let total_err: f64 = heap.iter().map(|p| p.err).sum();
        if total_err <= abs_tol {
            break;
        }
        if n >= max_panels {
            return Err(Error::QuadratureFailure {
                context,
                achieved: total_err,
                requested: abs_tol,
            });
        }
        let worst = heap.pop().expect("non-empty heap");
        if worst.b - worst.a < 1e-14 * (b - a).abs() {
            // interval exhausted; accept what we have
            heap.push(worst);
            break;
        }
        let mid = 0.5 * (worst.a + worst.b);
        heap.push(eval_panel(f, worst.a, mid));
        heap.push(eval_panel(f, mid, worst.b));
        n += 1;
    }
    let mut value = C64::new(0.0, 0.0);
    let mut err = 0.0;
    for p in heap.iter() {
        value += p.value;
        err += p.err;
    }
    Ok(QuadResult { value, err_estimate: err, panels: n })
}
