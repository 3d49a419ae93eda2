//! Series solver kit for the Solow-Swan capital-accumulation equation
//!
//! ```text
//! dk/dt = k·(p·k^{μ−1} − q),          k(0) = k0,          (classical)
//! D^α k = k·(p·k^{μ−1} − q),          0 < α ≤ 1,          (Caputo)
//! ```
//!
//! built around a Sumudu-transform variational-iteration scheme with
//! Adomian decomposition of the power nonlinearity. The crate provides:
//!
//! - [`series`]: arithmetic on finite generalized power series
//!   `Σ cᵢ·t^{βᵢ}` with real exponents — the universal value type.
//! - [`special`]: Gamma and Mittag-Leffler evaluations.
//! - [`sumudu`]: the term-wise Sumudu transform pair, derivative-residual
//!   rules, and the convolution product.
//! - [`adomian`]: Adomian polynomials of `k^μ` by formal composition.
//! - [`solver`]: the iteration engine assembling `Σ w_n`, plus a
//!   validity-window estimate for the truncation.
//! - [`model`]: right-hand side, equilibria with stability, and
//!   reconstruction of aggregate capital `K = k·L`.
//! - [`oracle`]: independent RK4 / fractional predictor-corrector
//!   integrators and a symbolic Taylor-coefficient generator used to
//!   cross-check the series.
//!
//! Everything is a pure function over immutable values; sharing any of
//! the types across threads is safe, and parameter sweeps parallelize
//! with no coordination.

pub mod adomian;
pub mod error;
pub mod model;
pub mod oracle;
pub mod series;
pub mod solver;
pub mod special;
pub mod sumudu;

pub use adomian::{adomian_polynomials, AdomianSequence, PowerNonlinearity};
pub use error::{Error, Result};
pub use model::{
    equilibria, reconstruct_capital, rhs, CapitalLabourPath, Classification, EquilibriumPoint,
    EquilibriumReport, LabourParams, PathSample,
};
pub use oracle::{solve_caputo, solve_classical, taylor_coefficients, OracleMethod, Trajectory};
pub use series::{ExponentTolerance, FracPowerSeries, Term};
pub use solver::{
    svim_caputo, svim_integer, SeriesSolution, SolowParams, ValidityWindow, WindowCriterion,
    DEFAULT_ORDER, MAX_ORDER,
};
pub use special::{gamma, mittag_leffler, EvalPolicy};
pub use sumudu::{
    convolve, inverse_st, st, st_caputo_residual, st_first_derivative_residual, SumuduImage,
};
