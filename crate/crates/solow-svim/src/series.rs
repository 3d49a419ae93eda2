//! Finite generalized power series `Σ cᵢ·t^{βᵢ}` with real exponents
//! `βᵢ ≥ 0`.
//!
//! Every iterate, Adomian polynomial, and assembled solution in this crate
//! is a value of this type: the fractional method only ever produces
//! monomials `t^{nα}/Γ(nα+1)` and finite combinations of them. The
//! representation is a dense exponent-ordered list, which is the access
//! pattern every operation needs at desk-scale lengths.

use crate::error::{Error, Result};

/// Default tolerance for coalescing nearly-equal exponents. Exponents are
/// exact multiples of α generated by identical arithmetic, so this only
/// guards accumulated rounding.
pub const DEFAULT_EXPONENT_EPS: f64 = 1e-12;

/// Coefficients below this magnitude are dropped during normalization;
/// they are denormal noise far below every tolerance in the kit.
pub const COEFF_FLOOR: f64 = 1e-300;

/// One `c·t^β` term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub coeff: f64,
    pub exponent: f64,
}

/// Tolerance within which two exponents are treated as the same monomial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentTolerance {
    eps: f64,
}

impl ExponentTolerance {
    /// Requires `eps` in (0, 1e-6].
    pub fn new(eps: f64) -> Result<Self> {
        if !(eps > 0.0 && eps <= 1e-6) {
            return Err(Error::InvalidParameter(format!(
                "ExponentTolerance eps must lie in (0, 1e-6], got {eps}"
            )));
        }
        Ok(Self { eps })
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }
}

impl Default for ExponentTolerance {
    fn default() -> Self {
        Self {
            eps: DEFAULT_EXPONENT_EPS,
        }
    }
}

// ---------------------------------------------------------------------------
// Raw term-list kernel, shared with the u-domain wrapper in `sumudu`.
// ---------------------------------------------------------------------------

/// Sort by exponent, coalesce exponents within `eps`, drop negligible
/// coefficients. Idempotent.
pub(crate) fn normalize_terms(mut terms: Vec<Term>, eps: f64) -> Vec<Term> {
    terms.retain(|t| t.coeff != 0.0);
    terms.sort_by(|a, b| a.exponent.total_cmp(&b.exponent));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if (t.exponent - last.exponent).abs() <= eps => {
                last.coeff += t.coeff;
            }
            _ => out.push(t),
        }
    }
    out.retain(|t| t.coeff.abs() >= COEFF_FLOOR);
    out
}

pub(crate) fn add_terms(a: &[Term], b: &[Term], eps: f64) -> Vec<Term> {
    let mut all = Vec::with_capacity(a.len() + b.len());
    all.extend_from_slice(a);
    all.extend_from_slice(b);
    normalize_terms(all, eps)
}

pub(crate) fn scale_terms(a: &[Term], c: f64, eps: f64) -> Vec<Term> {
    let scaled = a
        .iter()
        .map(|t| Term {
            coeff: t.coeff * c,
            exponent: t.exponent,
        })
        .collect();
    normalize_terms(scaled, eps)
}

pub(crate) fn mul_terms(a: &[Term], b: &[Term], eps: f64) -> Vec<Term> {
    let mut prod = Vec::with_capacity(a.len() * b.len());
    for ta in a {
        for tb in b {
            prod.push(Term {
                coeff: ta.coeff * tb.coeff,
                exponent: ta.exponent + tb.exponent,
            });
        }
    }
    normalize_terms(prod, eps)
}

pub(crate) fn evaluate_terms(terms: &[Term], x: f64) -> f64 {
    // powf(0, 0) = 1 gives the 0⁰ := 1 convention for the constant term.
    terms.iter().map(|t| t.coeff * x.powf(t.exponent)).sum()
}

pub(crate) fn render_terms(terms: &[Term], var: &str) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let pieces: Vec<String> = terms
        .iter()
        .map(|t| {
            if t.exponent == 0.0 {
                format!("{:.16e}", t.coeff)
            } else {
                format!("{:.16e}*{var}^{}", t.coeff, t.exponent)
            }
        })
        .collect();
    pieces.join(" + ")
}

fn validate_term(coeff: f64, exponent: f64) -> Result<()> {
    if !coeff.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "series coefficient must be finite, got {coeff}"
        )));
    }
    if !exponent.is_finite() || exponent < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "series exponent must be finite and >= 0, got {exponent}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Time-domain series
// ---------------------------------------------------------------------------

/// A finite sum `Σ cᵢ·t^{βᵢ}` over the time variable, kept normalized:
/// exponents strictly increasing, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FracPowerSeries {
    terms: Vec<Term>,
}

impl FracPowerSeries {
    /// The zero series (no terms).
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    /// The constant series `c`.
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

    /// A single `coeff·t^exponent` term; the exponent must be finite
    /// and non-negative.
    pub fn monomial(coeff: f64, exponent: f64) -> Result<Self> {
        validate_term(coeff, exponent)?;
        Ok(Self {
            terms: normalize_terms(vec![Term { coeff, exponent }], DEFAULT_EXPONENT_EPS),
        })
    }

    /// Build from `(coeff, exponent)` pairs, normalizing with the default
    /// exponent tolerance.
    pub fn from_terms<I: IntoIterator<Item = (f64, f64)>>(terms: I) -> Result<Self> {
        let mut v = Vec::new();
        for (coeff, exponent) in terms {
            validate_term(coeff, exponent)?;
            v.push(Term { coeff, exponent });
        }
        Ok(Self {
            terms: normalize_terms(v, DEFAULT_EXPONENT_EPS),
        })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the exponent-0 term (0 when absent).
    pub fn constant_coeff(&self) -> f64 {
        match self.terms.first() {
            Some(t) if t.exponent == 0.0 => t.coeff,
            _ => 0.0,
        }
    }

    /// Largest exponent present, if any.
    pub fn max_exponent(&self) -> Option<f64> {
        self.terms.last().map(|t| t.exponent)
    }

    /// True when the series is a constant (zero or a single exponent-0 term).
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].exponent == 0.0)
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

    /// Full Cauchy product over exponent sums.
    pub fn multiply(&self, other: &Self) -> Self {
        Self {
            terms: mul_terms(&self.terms, &other.terms, DEFAULT_EXPONENT_EPS),
        }
    }

    /// Drop all terms with exponent greater than `max_exponent`.
    pub fn truncate(&self, max_exponent: f64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .copied()
                .filter(|t| t.exponent <= max_exponent)
                .collect(),
        }
    }

    /// Evaluate at `t >= 0`; `t = 0` yields the constant coefficient
    /// (by the 0⁰ := 1 convention). Negative `t` is a domain error since
    /// fractional powers of negative reals are undefined here.
    pub fn evaluate(&self, t: f64) -> Result<f64> {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::Domain(format!(
                "series evaluation requires t >= 0, got {t}"
            )));
        }
        Ok(evaluate_terms(&self.terms, t))
    }

    /// Re-normalize under an explicit exponent tolerance.
    pub fn normalized_with(&self, tol: ExponentTolerance) -> Self {
        Self {
            terms: normalize_terms(self.terms.clone(), tol.eps()),
        }
    }

    /// Diagnostic rendering `c0 + c1*t^b1 + ...` with 17 significant digits.
    pub fn render(&self) -> String {
        render_terms(&self.terms, "t")
    }
}
