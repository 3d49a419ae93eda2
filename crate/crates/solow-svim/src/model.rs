//! The capital-accumulation model itself: right-hand side, equilibria and
//! their stability, and reconstruction of aggregate capital `K = k·L`.
//!
//! The equation `dk/dt = k·(p·k^{μ−1} − q)` has equilibria at `k = 0` and
//! `k* = (p/q)^{1/(1−μ)}` (for μ ≠ 1). For 0 < μ < 1 the origin repels and
//! `k*` attracts. For μ > 1 the computed signs reverse: near the origin the
//! right-hand side is ≈ −q·k < 0, so `k = 0` is locally attracting and `k*`
//! repels; the report states the computed signs. With μ = 1 the equation is
//! linear, the nontrivial equilibrium is undefined, and the origin is
//! classified by the sign of p − q.
//!
//! `k*` depends on p and q only through their ratio, so jointly rescaling
//! both leaves the equilibrium unchanged.

use crate::error::{Error, Result};
use crate::solver::{SeriesSolution, SolowParams};

/// Exponential labour supply `L(t) = L0·e^{ψt}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabourParams {
    l0: f64,
    psi: f64,
}

impl LabourParams {
    /// Requires `l0 > 0`; the growth rate `psi` may have either sign.
    pub fn new(l0: f64, psi: f64) -> Result<Self> {
        if !(l0.is_finite() && l0 > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "L0 must be positive and finite, got {l0}"
            )));
        }
        if !psi.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "psi must be finite, got {psi}"
            )));
        }
        Ok(Self { l0, psi })
    }

    pub fn l0(&self) -> f64 {
        self.l0
    }

    pub fn psi(&self) -> f64 {
        self.psi
    }

    /// `L(t) = L0·e^{ψt}`.
    pub fn labour_at(&self, t: f64) -> f64 {
        self.l0 * (self.psi * t).exp()
    }
}

/// Local stability of an equilibrium point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Stable,
    Unstable,
    /// Degenerate case (μ = 1 nontrivial point, or p = q with μ = 1).
    Undefined,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Stable => "stable",
            Classification::Unstable => "unstable",
            Classification::Undefined => "undefined",
        }
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One equilibrium with its classification. At `k*` the right-hand side
/// attains its extremum, so trajectories through it have an inflexion
/// point; `inflexion_marker` records that.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquilibriumPoint {
    /// Equilibrium value of k; NaN for the undefined μ = 1 nontrivial point.
    pub k: f64,
    pub classification: Classification,
    pub inflexion_marker: bool,
}

/// All equilibria of the model for one parameter set.
#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumReport {
    points: Vec<EquilibriumPoint>,
}

impl EquilibriumReport {
    pub fn points(&self) -> &[EquilibriumPoint] {
        &self.points
    }

    /// The nontrivial equilibrium `k* = (p/q)^{1/(1−μ)}`, when defined.
    pub fn nontrivial(&self) -> Option<&EquilibriumPoint> {
        self.points.iter().find(|p| p.k != 0.0 && !p.k.is_nan())
    }
}

/// Sampled joint path of capital per labour, labour, and aggregate capital.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathSample {
    pub t: f64,
    pub k: f64,
    pub labour: f64,
    /// Aggregate capital `K = k·L`.
    pub capital: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CapitalLabourPath {
    samples: Vec<PathSample>,
}

impl CapitalLabourPath {
    pub fn samples(&self) -> &[PathSample] {
        &self.samples
    }
}

/// Right-hand side `p·k^μ − q·k` with the convention `0^μ = 0` for μ > 0.
pub fn rhs(params: &SolowParams, k: f64) -> Result<f64> {
    if !k.is_finite() || k < 0.0 {
        return Err(Error::Domain(format!(
            "rhs requires k >= 0, got {k}"
        )));
    }
    Ok(params.p() * k.powf(params.mu()) - params.q() * k)
}

/// Equilibria of the model and their computed stability.
pub fn equilibria(params: &SolowParams) -> EquilibriumReport {
    let (p, q, mu) = (params.p(), params.q(), params.mu());
    if mu == 1.0 {
        // Linear case: rhs = (p − q)·k, only the origin remains.
        let origin_class = if p > q {
            Classification::Unstable
        } else if p < q {
            Classification::Stable
        } else {
            Classification::Undefined
        };
        return EquilibriumReport {
            points: vec![
                EquilibriumPoint {
                    k: 0.0,
                    classification: origin_class,
                    inflexion_marker: false,
                },
                EquilibriumPoint {
                    k: f64::NAN,
                    classification: Classification::Undefined,
                    inflexion_marker: false,
                },
            ],
        };
    }
    let k_star = (p / q).powf(1.0 / (1.0 - mu));
    // Near 0 the rhs behaves like p·k^μ for μ < 1 (repelling) and like
    // −q·k for μ > 1 (attracting); the derivative diverges at 0 for μ < 1,
    // so the limiting sign of the rhs classifies the origin.
    let origin_class = if mu < 1.0 {
        Classification::Unstable
    } else {
        Classification::Stable
    };
    // d(rhs)/dk at k* is q·(μ − 1).
    let star_class = if mu < 1.0 {
        Classification::Stable
    } else {
        Classification::Unstable
    };
    EquilibriumReport {
        points: vec![
            EquilibriumPoint {
                k: 0.0,
                classification: origin_class,
                inflexion_marker: false,
            },
            EquilibriumPoint {
                k: k_star,
                classification: star_class,
                inflexion_marker: true,
            },
        ],
    }
}

/// Sample `k`, `L`, and `K = k·L` on a sorted non-negative time grid.
pub fn reconstruct_capital(
    sol: &SeriesSolution,
    labour: &LabourParams,
    grid: &[f64],
) -> Result<CapitalLabourPath> {
    let mut prev = f64::NEG_INFINITY;
    for &t in grid {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::Domain(format!(
                "time grid entries must be >= 0, got {t}"
            )));
        }
        if t < prev {
            return Err(Error::InvalidParameter(
                "time grid must be sorted ascending".into(),
            ));
        }
        prev = t;
    }
    let mut samples = Vec::with_capacity(grid.len());
    for &t in grid {
        let k = sol.evaluate(t)?;
        let labour_v = labour.labour_at(t);
        samples.push(PathSample {
            t,
            k,
            labour: labour_v,
            capital: k * labour_v,
        });
    }
    Ok(CapitalLabourPath { samples })
}
