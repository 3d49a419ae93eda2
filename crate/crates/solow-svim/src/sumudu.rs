//! Term-wise Sumudu transform, its inverse, derivative-residual rules,
//! and the convolution product.
//!
//! The Sumudu transform `S[k](u) = ∫₀^∞ k(tu)·e^{−t} dt` is unit- and
//! scale-preserving; on a monomial it acts as
//!
//! ```text
//! S[c·t^β] = c·Γ(β+1)·u^β,        S⁻¹[c·u^β] = (c/Γ(β+1))·t^β,
//! ```
//!
//! so on finite generalized power series the transform pair is exact and
//! no quadrature is involved. The transform is defined over functions of
//! exponential order (|k(t)| < Q·e^{|t|/ηⱼ} for some Q, η₁, η₂ > 0); those
//! admissibility constants play no operational role in the term-wise
//! calculus and are not represented.
//!
//! First-derivative and Caputo-derivative images become exponent shifts:
//!
//! ```text
//! S[k'](u)        = (K(u) − k(0))/u,
//! S[D^α k](u)     = u^{−α}·(K(u) − k(0)),   0 < α ≤ 1,
//! S[(ψ*ζ)(t)](u)  = u·S[ψ](u)·S[ζ](u).
//! ```
//!
//! t-domain values ([`FracPowerSeries`]) and u-domain values
//! ([`SumuduImage`]) are distinct types; accidentally mixing the two
//! domains is the most likely implementation bug in this method, and the
//! type split makes it unrepresentable.

use crate::error::{Error, Result};
use crate::series::{
    add_terms, evaluate_terms, mul_terms, normalize_terms, render_terms, scale_terms,
    FracPowerSeries, Term, DEFAULT_EXPONENT_EPS,
};
use crate::special::gamma;

/// A finite sum `Σ cᵢ·u^{βᵢ}` over the Sumudu variable `u`.
///
/// Same structural invariants as [`FracPowerSeries`]: exponents strictly
/// increasing, no zero coefficients, all exponents ≥ 0.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SumuduImage {
    terms: Vec<Term>,
}

impl SumuduImage {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self {
            terms: normalize_terms(
                vec![Term {
                    coeff: c,
                    exponent: 0.0,
                }],
                DEFAULT_EXPONENT_EPS,
            ),
        }
    }

    /// A single `coeff·u^exponent` term; the exponent must be finite and
    /// non-negative.
    pub fn monomial(coeff: f64, exponent: f64) -> Result<Self> {
        if !coeff.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "image coefficient must be finite, got {coeff}"
            )));
        }
        if !exponent.is_finite() || exponent < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "image exponent must be finite and >= 0, got {exponent}"
            )));
        }
        Ok(Self {
            terms: normalize_terms(vec![Term { coeff, exponent }], DEFAULT_EXPONENT_EPS),
        })
    }

    pub fn from_terms<I: IntoIterator<Item = (f64, f64)>>(terms: I) -> Result<Self> {
        let mut acc = Self::zero();
        for (coeff, exponent) in terms {
            acc = acc.add(&Self::monomial(coeff, exponent)?);
        }
        Ok(acc)
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_coeff(&self) -> f64 {
        match self.terms.first() {
            Some(t) if t.exponent == 0.0 => t.coeff,
            _ => 0.0,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            terms: add_terms(&self.terms, &other.terms, DEFAULT_EXPONENT_EPS),
        }
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            terms: scale_terms(&self.terms, c, DEFAULT_EXPONENT_EPS),
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        Self {
            terms: mul_terms(&self.terms, &other.terms, DEFAULT_EXPONENT_EPS),
        }
    }

    /// Multiply by `u^delta` (`delta >= 0`): add `delta` to every exponent.
    pub fn shift_up(&self, delta: f64) -> Result<Self> {
        if !delta.is_finite() || delta < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "shift_up requires delta >= 0, got {delta}"
            )));
        }
        Ok(Self {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff,
                    exponent: t.exponent + delta,
                })
                .collect(),
        })
    }

    /// Divide by `u^delta`: subtract `delta` from every exponent. A term
    /// that would end up with a negative exponent is a hard error — it
    /// signals a malformed iterate, never something to truncate silently.
    pub fn shift_down(&self, delta: f64) -> Result<Self> {
        if !delta.is_finite() || delta < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "shift_down requires delta >= 0, got {delta}"
            )));
        }
        let mut shifted = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let exponent = t.exponent - delta;
            if exponent < -DEFAULT_EXPONENT_EPS {
                return Err(Error::NegativeExponent(format!(
                    "shifting u^{} down by {delta} leaves a negative exponent",
                    t.exponent
                )));
            }
            shifted.push(Term {
                coeff: t.coeff,
                exponent: exponent.max(0.0),
            });
        }
        Ok(Self {
            terms: normalize_terms(shifted, DEFAULT_EXPONENT_EPS),
        })
    }

    /// Evaluate at `u >= 0` (diagnostic use).
    pub fn evaluate(&self, u: f64) -> Result<f64> {
        if !u.is_finite() || u < 0.0 {
            return Err(Error::Domain(format!(
                "image evaluation requires u >= 0, got {u}"
            )));
        }
        Ok(evaluate_terms(&self.terms, u))
    }

    /// Diagnostic rendering with 17 significant digits.
    pub fn render(&self) -> String {
        render_terms(&self.terms, "u")
    }
}

/// Sumudu transform of a generalized power series: `c·t^β ↦ c·Γ(β+1)·u^β`.
pub fn st(f: &FracPowerSeries) -> Result<SumuduImage> {
    let mut terms = Vec::with_capacity(f.terms().len());
    for t in f.terms() {
        terms.push(Term {
            coeff: t.coeff * gamma(t.exponent + 1.0)?,
            exponent: t.exponent,
        });
    }
    Ok(SumuduImage {
        terms: normalize_terms(terms, DEFAULT_EXPONENT_EPS),
    })
}

/// Inverse Sumudu transform: `c·u^β ↦ (c/Γ(β+1))·t^β`. Term-for-term exact
/// inverse of [`st`].
pub fn inverse_st(image: &SumuduImage) -> Result<FracPowerSeries> {
    let mut pairs = Vec::with_capacity(image.terms().len());
    for t in image.terms() {
        pairs.push((t.coeff / gamma(t.exponent + 1.0)?, t.exponent));
    }
    FracPowerSeries::from_terms(pairs)
}

/// Image of the first derivative: `(K(u) − k0)/u`.
///
/// Subtracts `k0` from the exponent-0 coefficient, then shifts every
/// exponent down by 1. Errors if the constant residual does not vanish or
/// any exponent would become negative.
pub fn st_first_derivative_residual(image: &SumuduImage, k0: f64) -> Result<SumuduImage> {
    image.add(&SumuduImage::constant(-k0)).shift_down(1.0)
}

/// Image of the Caputo derivative of order `alpha` in (0, 1]:
/// `u^{−α}·(K(u) − k0)`. Reduces to [`st_first_derivative_residual`] at
/// `alpha = 1`.
pub fn st_caputo_residual(image: &SumuduImage, k0: f64, alpha: f64) -> Result<SumuduImage> {
    if !alpha.is_finite() || alpha <= 0.0 || alpha > 1.0 {
        return Err(Error::Domain(format!(
            "Caputo order must lie in (0, 1], got {alpha}"
        )));
    }
    image.add(&SumuduImage::constant(-k0)).shift_down(alpha)
}

/// Convolution product `(f*g)(t) = ∫₀^t f(t−x)g(x) dx` on series, via the
/// term rule `t^a * t^b = [Γ(a+1)Γ(b+1)/Γ(a+b+2)]·t^{a+b+1}` extended
/// bilinearly. Satisfies `S[f*g] = u·S[f]·S[g]`.
pub fn convolve(f: &FracPowerSeries, g: &FracPowerSeries) -> Result<FracPowerSeries> {
    let mut pairs = Vec::with_capacity(f.terms().len() * g.terms().len());
    for ta in f.terms() {
        for tb in g.terms() {
            let exponent = ta.exponent + tb.exponent + 1.0;
            let coeff = ta.coeff * tb.coeff * gamma(ta.exponent + 1.0)?
                * gamma(tb.exponent + 1.0)?
                / gamma(exponent + 1.0)?;
            pairs.push((coeff, exponent));
        }
    }
    FracPowerSeries::from_terms(pairs)
}
