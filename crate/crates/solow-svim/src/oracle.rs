//! Independent numerical oracles for validating the series method.
//!
//! Three routes that never touch the transform/Adomian machinery:
//!
//! - [`solve_classical`]: fixed-step classical fourth-order Runge-Kutta
//!   for α = 1, global error O(h⁴) in the smooth regime.
//! - [`solve_caputo`]: Adams-Bashforth-Moulton predictor-corrector for the
//!   Caputo initial value problem, with product-rectangle predictor and
//!   product-trapezoidal corrector weights over the full history (one
//!   corrector pass, no short-memory truncation). At α = 1 it reduces to a
//!   trapezoidal two-step scheme of order 2.
//! - [`taylor_coefficients`]: exact recursive differentiation of
//!   `k' = p·k^μ − q·k` at t = 0, which settles the third-order
//!   coefficient independently of both solvers.
//!
//! Non-integer μ makes the right-hand side derivative unbounded at k = 0,
//! so any step that produces a negative capital value is a hard error, not
//! something to clamp.

use crate::error::{Error, Result};
use crate::model::rhs;
use crate::solver::SolowParams;
use crate::special::gamma;

/// Which integrator produced a trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMethod {
    ClassicalRk4,
    FractionalPece,
}

impl OracleMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            OracleMethod::ClassicalRk4 => "classical-rk4",
            OracleMethod::FractionalPece => "fractional-pece",
        }
    }
}

/// A sampled numerical solution `(tᵢ, kᵢ)` on a uniform grid from t = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    samples: Vec<(f64, f64)>,
    method: OracleMethod,
    step: f64,
}

impl Trajectory {
    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    pub fn method(&self) -> OracleMethod {
        self.method
    }

    /// The step actually used (the requested step rounded down so the grid
    /// lands exactly on t_end).
    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn terminal(&self) -> (f64, f64) {
        *self.samples.last().expect("trajectory is never empty")
    }
}

fn validate_grid(t_end: f64, h: f64) -> Result<usize> {
    if !(t_end.is_finite() && t_end > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "t_end must be positive, got {t_end}"
        )));
    }
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "step h must be positive, got {h}"
        )));
    }
    if h > t_end {
        return Err(Error::InvalidParameter(format!(
            "step h = {h} exceeds t_end = {t_end}"
        )));
    }
    Ok((t_end / h - 1e-9).ceil().max(1.0) as usize)
}

fn rhs_guarded(params: &SolowParams, k: f64) -> Result<f64> {
    if k < 0.0 {
        return Err(Error::Domain(format!(
            "integration produced negative capital k = {k}"
        )));
    }
    rhs(params, k)
}

/// Classical RK4 integration of the α = 1 model on `[0, t_end]`.
pub fn solve_classical(params: &SolowParams, t_end: f64, h: f64) -> Result<Trajectory> {
    if params.alpha() != 1.0 {
        return Err(Error::Domain(format!(
            "solve_classical requires alpha = 1, got {}",
            params.alpha()
        )));
    }
    let n = validate_grid(t_end, h)?;
    let h_eff = t_end / n as f64;
    let mut samples = Vec::with_capacity(n + 1);
    let mut k = params.k0();
    samples.push((0.0, k));
    for i in 0..n {
        let s1 = rhs_guarded(params, k)?;
        let s2 = rhs_guarded(params, k + 0.5 * h_eff * s1)?;
        let s3 = rhs_guarded(params, k + 0.5 * h_eff * s2)?;
        let s4 = rhs_guarded(params, k + h_eff * s3)?;
        k += h_eff / 6.0 * (s1 + 2.0 * s2 + 2.0 * s3 + s4);
        if k < 0.0 {
            return Err(Error::Domain(format!(
                "integration produced negative capital k = {k}"
            )));
        }
        let t = t_end * (i + 1) as f64 / n as f64;
        samples.push((t, k));
    }
    Ok(Trajectory {
        samples,
        method: OracleMethod::ClassicalRk4,
        step: h_eff,
    })
}

/// Adams-Bashforth-Moulton predictor-corrector for the Caputo problem
/// `D^α k = p·k^μ − q·k`, `k(0) = k0`, on `[0, t_end]`.
///
/// Per step:
///
/// ```text
/// k⁽ᴾ⁾_{n+1} = k0 + h^α/Γ(α+1) · Σ_{j≤n} [(n+1−j)^α − (n−j)^α]·g_j
/// k_{n+1}    = k0 + h^α/Γ(α+2) · [ a_{0,n}·g_0 + Σ_{1≤j≤n} a_{j,n}·g_j
///                                   + g(k⁽ᴾ⁾_{n+1}) ]
/// ```
///
/// with the product-trapezoidal weights
/// `a_{0,n} = n^{α+1} − (n−α)(n+1)^α` and
/// `a_{j,n} = (n−j+2)^{α+1} + (n−j)^{α+1} − 2(n−j+1)^{α+1}`.
/// The full history is kept (O(n²) work), which is fine at desk scale.
pub fn solve_caputo(params: &SolowParams, t_end: f64, h: f64) -> Result<Trajectory> {
    let alpha = params.alpha();
    let n = validate_grid(t_end, h)?;
    let h_eff = t_end / n as f64;
    let h_alpha = h_eff.powf(alpha);
    let pred_factor = h_alpha / gamma(alpha + 1.0)?;
    let corr_factor = h_alpha / gamma(alpha + 2.0)?;

    // pow_a[m] = m^α, pow_a1[m] = m^{α+1}, extended as the grid grows.
    let mut pow_a = vec![0.0, 1.0];
    let mut pow_a1 = vec![0.0, 1.0];
    let mut g_hist = vec![rhs_guarded(params, params.k0())?];
    let mut samples = Vec::with_capacity(n + 1);
    samples.push((0.0, params.k0()));

    for step in 0..n {
        let m_new = step + 2;
        pow_a.push((m_new as f64).powf(alpha));
        pow_a1.push((m_new as f64).powf(alpha + 1.0));

        // Predictor: product-rectangle weights.
        let mut acc = 0.0;
        for (j, g) in g_hist.iter().enumerate() {
            acc += (pow_a[step + 1 - j] - pow_a[step - j]) * g;
        }
        let predicted = params.k0() + pred_factor * acc;
        let g_pred = rhs_guarded(params, predicted)?;

        // Corrector: product-trapezoidal weights.
        let nf = step as f64;
        let mut acc = (nf.powf(alpha + 1.0) - (nf - alpha) * pow_a[step + 1]) * g_hist[0];
        for (j, g) in g_hist.iter().enumerate().skip(1) {
            let m = step - j; // n − j
            acc += (pow_a1[m + 2] + pow_a1[m] - 2.0 * pow_a1[m + 1]) * g;
        }
        acc += g_pred;
        let k_next = params.k0() + corr_factor * acc;
        if k_next < 0.0 {
            return Err(Error::Domain(format!(
                "integration produced negative capital k = {k_next}"
            )));
        }
        g_hist.push(rhs_guarded(params, k_next)?);
        let t = t_end * (step + 1) as f64 / n as f64;
        samples.push((t, k_next));
    }
    Ok(Trajectory {
        samples,
        method: OracleMethod::FractionalPece,
        step: h_eff,
    })
}

/// Cap on [`taylor_coefficients`]: expression growth beyond this order
/// buys nothing at double precision.
pub const MAX_TAYLOR_ORDER: usize = 12;

/// Derivatives `k(0), k'(0), …, k^{(order)}(0)` of the α = 1 solution,
/// obtained by exact recursive differentiation of `k' = p·k^μ − q·k`.
///
/// Each derivative is a finite sum `Σ c·k^e` (real exponents, possibly
/// negative for μ < 1); differentiating maps `c·k^e` to
/// `c·e·(p·k^{e+μ−1} − q·k^e)` and the result is evaluated at `k0`.
/// Coefficient n of the solution series is `k^{(n)}(0)/n!`.
pub fn taylor_coefficients(params: &SolowParams, order: usize) -> Result<Vec<f64>> {
    if params.alpha() != 1.0 {
        return Err(Error::Domain(format!(
            "taylor_coefficients requires alpha = 1, got {}",
            params.alpha()
        )));
    }
    if order == 0 || order > MAX_TAYLOR_ORDER {
        return Err(Error::InvalidParameter(format!(
            "taylor order must lie in 1..={MAX_TAYLOR_ORDER}, got {order}"
        )));
    }
    let (p, q, mu, k0) = (params.p(), params.q(), params.mu(), params.k0());

    // Generalized monomials (coeff, exponent) in the state variable k.
    let merge = |mut terms: Vec<(f64, f64)>| -> Vec<(f64, f64)> {
        terms.sort_by(|a, b| a.1.total_cmp(&b.1));
        let mut out: Vec<(f64, f64)> = Vec::with_capacity(terms.len());
        for (c, e) in terms {
            match out.last_mut() {
                Some(last) if (e - last.1).abs() <= 1e-12 => last.0 += c,
                _ => out.push((c, e)),
            }
        }
        out.retain(|&(c, _)| c.abs() >= 1e-300);
        out
    };

    let mut derivs = vec![params.k0()];
    let mut expr = vec![(p, mu), (-q, 1.0)]; // k'
    for _ in 1..=order {
        derivs.push(expr.iter().map(|&(c, e)| c * k0.powf(e)).sum());
        let mut next = Vec::with_capacity(expr.len() * 2);
        for &(c, e) in &expr {
            if e == 0.0 {
                continue;
            }
            next.push((c * e * p, e + mu - 1.0));
            next.push((-c * e * q, e));
        }
        expr = merge(next);
    }
    derivs.truncate(order + 1);
    Ok(derivs)
}
