//! Exact computation and verification of divisor-function convolution sums
//! `W_{a,b}(n) = Σ_{al+bm=n} σ(l)σ(m)` through weight-4 modular forms of level 28.
//!
//! Everything is computed in exact rational arithmetic:
//!
//! - [`arith`]: divisor sums `σ_k` with zero extension off the positive integers.
//! - [`qseries`]: truncated power series in `q`.
//! - [`eta`]: eta quotient expansions, the Ligozat criterion, and the cusp forms `C_1..C_9`.
//! - [`eisenstein`]: `L(q)`, `M(q)` and their dilations.
//! - [`modforms`]: basis of `M₄(Γ₀(28))`, Sturm bounds, exact decomposition.
//! - [`convolution`]: `W_{a,b}(n)` by summation and by closed form.
//! - [`representations`]: `r₄(n)` and `R₇(n)` by enumeration and by formula.
//! - [`deltaforms`]: level-7 and level-14 cusp forms as eta quotients.
//! - [`suite`]: the identity verification suite behind the `verify` command.

pub mod arith;
pub mod convolution;
pub mod deltaforms;
pub mod eisenstein;
pub mod eta;
pub mod linalg;
pub mod modforms;
pub mod qseries;
pub mod representations;
pub mod suite;
pub mod tables;

pub use arith::{Natural, Rational};
pub use convolution::{w_brute, w_formula, w_reduce, ConvolutionError, PairId};
pub use eta::{c_series, ligozat_check, CuspProvider, CuspTable, EtaQuotientSpec, LigozatReport};
pub use modforms::{decompose, sturm_bound, Basis28, CoeffVector};
pub use qseries::{QSeries, SeriesError};
