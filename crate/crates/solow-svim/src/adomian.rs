//! Adomian polynomials for the power nonlinearity `N[k] = k^μ`.
//!
//! Decomposing `k = Σ wᵢ` and `N[k] = Σ Aᵢ`, the polynomials are
//!
//! ```text
//! A_n = (1/n!)·dⁿ/dxⁿ [ f(Σᵢ wᵢ·xⁱ) ] at x = 0,
//! ```
//!
//! so `A_n` is the coefficient of `xⁿ` in the formal composition
//! `Σᵢ f⁽ⁱ⁾(w₀)/i! · (Σ_{j≥1} wⱼ·xʲ)ⁱ`. The first few are
//!
//! ```text
//! A₀ = f(w₀)
//! A₁ = w₁·f'(w₀)
//! A₂ = w₂·f'(w₀) + (w₁²/2!)·f''(w₀)
//! A₃ = w₃·f'(w₀) + w₁w₂·f''(w₀) + (w₁³/3!)·f'''(w₀)
//! ```
//!
//! with `A_n` depending only on `w₀…w_n`. The generator computes the
//! composition by coefficient extraction rather than hard-coding closed
//! forms, which scales to any order and cross-checks the table above.

use crate::error::{Error, Result};
use crate::series::FracPowerSeries;

/// The nonlinearity `f(k) = k^μ` together with its expansion point `k0`.
///
/// `k0 > 0` keeps every required power `k0^{μ−i}` on the positive real
/// branch; `μ` may be any positive real, integer or not.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerNonlinearity {
    mu: f64,
    k0: f64,
}

impl PowerNonlinearity {
    pub fn new(mu: f64, k0: f64) -> Result<Self> {
        if !(mu.is_finite() && mu > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "power nonlinearity requires mu > 0, got {mu}"
            )));
        }
        if !(k0.is_finite() && k0 > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "power nonlinearity requires k0 > 0, got {k0}"
            )));
        }
        Ok(Self { mu, k0 })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn k0(&self) -> f64 {
        self.k0
    }

    /// `f⁽ⁱ⁾(k0) = [∏_{j=0}^{i−1}(μ−j)]·k0^{μ−i}`.
    pub fn derivative_at(&self, i: usize) -> f64 {
        let mut factor = 1.0;
        for j in 0..i {
            factor *= self.mu - j as f64;
        }
        factor * self.k0.powf(self.mu - i as f64)
    }
}

/// The ordered polynomials `A₀…A_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct AdomianSequence {
    polys: Vec<FracPowerSeries>,
}

impl AdomianSequence {
    pub fn polys(&self) -> &[FracPowerSeries] {
        &self.polys
    }

    /// Number of polynomials, `N + 1`.
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn into_polys(self) -> Vec<FracPowerSeries> {
        self.polys
    }
}

/// Multiply two polynomials in the auxiliary variable `x` (series-valued
/// coefficients), truncating at degree `max_deg`.
fn poly_mul_trunc(
    a: &[FracPowerSeries],
    b: &[FracPowerSeries],
    max_deg: usize,
) -> Vec<FracPowerSeries> {
    let mut out = vec![FracPowerSeries::zero(); max_deg + 1];
    for (da, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (db, cb) in b.iter().enumerate() {
            if da + db > max_deg {
                break;
            }
            if cb.is_zero() {
                continue;
            }
            out[da + db] = out[da + db].add(&ca.multiply(cb));
        }
    }
    out
}

/// Generate `A₀…A_n` for the power nonlinearity with components `w`.
///
/// Requires `w.len() >= n + 1` and `w[0]` equal to the constant series
/// `k0` of the nonlinearity's expansion point.
pub fn adomian_polynomials(
    f: &PowerNonlinearity,
    w: &[FracPowerSeries],
    n: usize,
) -> Result<AdomianSequence> {
    if w.len() < n + 1 {
        return Err(Error::InvalidParameter(format!(
            "adomian_polynomials needs {} components, got {}",
            n + 1,
            w.len()
        )));
    }
    if !w[0].is_constant() {
        return Err(Error::InvalidParameter(
            "w[0] must be a constant series".into(),
        ));
    }
    if w[0].constant_coeff() != f.k0() {
        return Err(Error::InvalidParameter(format!(
            "w[0] = {} does not match the expansion point k0 = {}",
            w[0].constant_coeff(),
            f.k0()
        )));
    }

    let mut polys = vec![FracPowerSeries::zero(); n + 1];
    polys[0] = FracPowerSeries::constant(f.derivative_at(0));

    // W(x) = Σ_{j=1}^{n} w_j·x^j; W^i starts at degree i, so orders above
    // n never contribute.
    let mut w_poly = vec![FracPowerSeries::zero(); n + 1];
    w_poly[1..=n].clone_from_slice(&w[1..=n]);

    // taylor_i = f^{(i)}(k0)/i!, accumulated by the generalized binomial
    // recursion taylor_i = taylor_{i-1}·(μ-i+1)/(i·k0).
    let mut taylor = f.derivative_at(0);
    let mut power = {
        let mut p = vec![FracPowerSeries::zero(); n + 1];
        p[0] = FracPowerSeries::constant(1.0);
        p
    };
    for i in 1..=n {
        taylor *= (f.mu() - (i as f64 - 1.0)) / (i as f64 * f.k0());
        power = poly_mul_trunc(&power, &w_poly, n);
        if power.iter().all(FracPowerSeries::is_zero) {
            break;
        }
        for (deg, poly) in polys.iter_mut().enumerate().take(n + 1).skip(i) {
            *poly = poly.add(&power[deg].scale(taylor));
        }
    }

    Ok(AdomianSequence { polys })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fps(terms: &[(f64, f64)]) -> FracPowerSeries {
        FracPowerSeries::from_terms(terms.iter().copied()).unwrap()
    }

    fn close(a: f64, b: f64, rtol: f64) -> bool {
        (a - b).abs() <= rtol * b.abs().max(a.abs()).max(1e-30)
    }

    #[test]
    fn derivative_at_examples() {
        let f = PowerNonlinearity::new(2.0, 3.0).unwrap();
        assert_eq!(f.derivative_at(0), 9.0);
        assert_eq!(f.derivative_at(1), 6.0);
        let g = PowerNonlinearity::new(0.5, 1.0).unwrap();
        assert!(close(g.derivative_at(2), -0.25, 1e-15));
    }

    #[test]
    fn a0_is_k0_to_the_mu() {
        let f = PowerNonlinearity::new(1.7, 2.2).unwrap();
        let w = vec![FracPowerSeries::constant(2.2), fps(&[(1.0, 1.0)])];
        let seq = adomian_polynomials(&f, &w, 1).unwrap();
        assert!(seq.polys()[0].is_constant());
        assert!(close(seq.polys()[0].constant_coeff(), 2.2f64.powf(1.7), 1e-14));
    }

    #[test]
    fn a1_for_square_nonlinearity() {
        // μ = 2, k0 = 3, w1 = t: A1 = w1·f'(k0) = 6t
        let f = PowerNonlinearity::new(2.0, 3.0).unwrap();
        let w = vec![FracPowerSeries::constant(3.0), fps(&[(1.0, 1.0)])];
        let seq = adomian_polynomials(&f, &w, 1).unwrap();
        assert_eq!(seq.polys()[1], fps(&[(6.0, 1.0)]));
    }

    #[test]
    fn a2_for_square_nonlinearity() {
        // μ = 2, k0 = 3, w1 = t, w2 = 0: A2 = w1²·f''(k0)/2 = t²
        let f = PowerNonlinearity::new(2.0, 3.0).unwrap();
        let w = vec![
            FracPowerSeries::constant(3.0),
            fps(&[(1.0, 1.0)]),
            FracPowerSeries::zero(),
        ];
        let seq = adomian_polynomials(&f, &w, 2).unwrap();
        assert_eq!(seq.polys()[2], fps(&[(1.0, 2.0)]));
    }

    #[test]
    fn closed_forms_through_a3() {
        // Generic series components against the displayed table:
        // A3 = w3·f' + w1w2·f'' + w1³·f'''/3!.
        let f = PowerNonlinearity::new(1.3, 0.8).unwrap();
        let w1 = fps(&[(0.7, 0.4)]);
        let w2 = fps(&[(-0.3, 0.8)]);
        let w3 = fps(&[(0.11, 1.2)]);
        let w = vec![FracPowerSeries::constant(0.8), w1.clone(), w2.clone(), w3.clone()];
        let seq = adomian_polynomials(&f, &w, 3).unwrap();

        let d1 = f.derivative_at(1);
        let d2 = f.derivative_at(2);
        let d3 = f.derivative_at(3);
        let want1 = w1.scale(d1);
        let want2 = w2.scale(d1).add(&w1.multiply(&w1).scale(d2 / 2.0));
        let want3 = w3
            .scale(d1)
            .add(&w1.multiply(&w2).scale(d2))
            .add(&w1.multiply(&w1).multiply(&w1).scale(d3 / 6.0));

        for (got, want) in [(&seq.polys()[1], &want1), (&seq.polys()[2], &want2), (&seq.polys()[3], &want3)] {
            assert_eq!(got.terms().len(), want.terms().len());
            for (g, w) in got.terms().iter().zip(want.terms()) {
                assert!(close(g.coeff, w.coeff, 1e-13), "{got:?} vs {want:?}");
                assert!((g.exponent - w.exponent).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn a_n_ignores_higher_components() {
        let f = PowerNonlinearity::new(0.6, 1.4).unwrap();
        let base = vec![
            FracPowerSeries::constant(1.4),
            fps(&[(0.5, 0.6)]),
            fps(&[(0.2, 1.2)]),
            fps(&[(0.9, 1.8)]),
        ];
        let mut perturbed = base.clone();
        perturbed[3] = fps(&[(123.0, 1.8)]);
        let a2 = adomian_polynomials(&f, &base, 2).unwrap();
        let b2 = adomian_polynomials(&f, &perturbed, 2).unwrap();
        assert_eq!(a2.polys()[2], b2.polys()[2]);
        // ... and A3 responds linearly through w3·f'(k0).
        let a3 = adomian_polynomials(&f, &perturbed, 3).unwrap();
        assert!(!a3.polys()[3].is_zero());
    }

    #[test]
    fn rejects_malformed_input() {
        let f = PowerNonlinearity::new(0.5, 1.0).unwrap();
        let w = vec![FracPowerSeries::constant(1.0)];
        assert!(adomian_polynomials(&f, &w, 1).is_err());

        let w = vec![fps(&[(1.0, 0.5)]), fps(&[(1.0, 1.0)])];
        assert!(adomian_polynomials(&f, &w, 1).is_err());

        let w = vec![FracPowerSeries::constant(2.0), fps(&[(1.0, 1.0)])];
        assert!(adomian_polynomials(&f, &w, 1).is_err());
    }

    #[test]
    fn nonlinearity_validation() {
        assert!(PowerNonlinearity::new(0.0, 1.0).is_err());
        assert!(PowerNonlinearity::new(0.5, 0.0).is_err());
        assert!(PowerNonlinearity::new(0.5, -1.0).is_err());
    }
}
