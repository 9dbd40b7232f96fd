//! The space `M₄(Γ₀(28))`: its fifteen-element basis, Sturm bounds and exact
//! decomposition of a q-expansion onto the basis.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::arith::{ceil, factorize, rat, Rational};
use crate::eisenstein::{l_combination, m_series};
use crate::eta::CuspTable;
use crate::linalg::{self, SolveError};
use crate::qseries::{QSeries, SeriesError};
use crate::tables::{SquaredCombination, EISENSTEIN_DILATIONS, SQUARED_COMBINATIONS};

/// dim E₄(Γ₀(28)).
pub const EISENSTEIN_DIM: usize = 6;
/// dim S₄(Γ₀(28)).
pub const CUSP_DIM: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModformError {
    #[error("series order {available} is below the required {needed}")]
    OrderTooSmall { needed: usize, available: usize },
    #[error("target is not in the span of the basis (equation for q^{row} fails)")]
    Inconsistent { row: usize },
    #[error("basis coefficients up to the bound have rank {rank} < 15")]
    Underdetermined { rank: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Sturm bound for weight 4 on `Γ₀(N)`: `⌈(N/3) Π_{p|N} (1 + 1/p)⌉`.
pub fn sturm_bound(level: u64) -> u64 {
    assert!(level >= 1, "level must be positive");
    let mut value = rat(level as i64, 3);
    for (p, _) in factorize(level) {
        value *= rat(p as i64 + 1, p as i64);
    }
    u64::try_from(ceil(&value)).expect("sturm bound fits in u64")
}

/// `M(q^t)` for t ∈ {1,2,4,7,14,28} followed by `C_1..C_9`.
#[derive(Debug, Clone)]
pub struct Basis28 {
    eisenstein: Vec<QSeries>,
    cusp: Vec<QSeries>,
    order: usize,
}

impl Basis28 {
    pub fn new(order: usize) -> Result<Self, ModformError> {
        let needed = sturm_bound(28) as usize;
        if order < needed {
            return Err(ModformError::OrderTooSmall { needed, available: order });
        }
        let m = m_series(order);
        let eisenstein =
            EISENSTEIN_DILATIONS.iter().map(|&t| m.substitute_power(t as usize)).collect();
        let table = CuspTable::new(order);
        let cusp = (1..=CUSP_DIM).map(|j| table.series(j)).collect();
        Ok(Basis28 { eisenstein, cusp, order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn eisenstein_parts(&self) -> &[QSeries] {
        &self.eisenstein
    }

    pub fn cusp_parts(&self) -> &[QSeries] {
        &self.cusp
    }

    /// All fifteen basis series, Eisenstein part first.
    pub fn elements(&self) -> impl Iterator<Item = &QSeries> {
        self.eisenstein.iter().chain(self.cusp.iter())
    }

    /// Matrix whose row `n` holds the `q^n` coefficient of each basis element.
    pub fn coefficient_rows(&self, n_max: usize) -> Vec<Vec<Rational>> {
        (0..=n_max)
            .map(|n| self.elements().map(|s| s.get(n).clone()).collect())
            .collect()
    }

    /// Rank of the 15 × (n_max+1) coefficient matrix.
    pub fn rank(&self, n_max: usize) -> usize {
        linalg::rank(&self.coefficient_rows(n_max.min(self.order)))
    }
}

/// Coefficients of a form on [`Basis28`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffVector {
    /// Keyed by dilation t of `M(q^t)`.
    pub x: BTreeMap<u64, Rational>,
    /// Coefficients of `C_1..C_9`.
    pub y: Vec<Rational>,
}

impl CoeffVector {
    pub fn from_flat(values: &[Rational]) -> Self {
        assert_eq!(values.len(), EISENSTEIN_DIM + CUSP_DIM);
        let x = EISENSTEIN_DILATIONS
            .iter()
            .zip(&values[..EISENSTEIN_DIM])
            .map(|(&t, v)| (t, v.clone()))
            .collect();
        CoeffVector { x, y: values[EISENSTEIN_DIM..].to_vec() }
    }

    pub fn flat(&self) -> Vec<Rational> {
        EISENSTEIN_DILATIONS
            .iter()
            .map(|t| self.x.get(t).cloned().unwrap_or_else(Rational::zero))
            .chain(self.y.iter().cloned())
            .collect()
    }

    pub fn from_table(table: &SquaredCombination) -> Self {
        let flat: Vec<Rational> = table
            .eisenstein
            .iter()
            .chain(table.cusp.iter())
            .map(|&(p, q)| rat(p, q))
            .collect();
        Self::from_flat(&flat)
    }

    /// `Σ x_t M(q^t) + Σ y_j C_j` at the basis order.
    pub fn reconstruct(&self, basis: &Basis28) -> QSeries {
        let coeffs = self.flat();
        let mut acc = QSeries::zero(basis.order());
        for (c, s) in coeffs.iter().zip(basis.elements()) {
            if !c.is_zero() {
                acc = acc.add(&s.scale(c));
            }
        }
        acc
    }

    /// Indices `j` (1-based) with `y_j ≠ 0`.
    pub fn cusp_support(&self) -> Vec<usize> {
        self.y
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Solves `target = Σ x_t M(q^t) + Σ y_j C_j` from the coefficients of
/// `q^0..=q^n_max`. Every equation must hold, so `n_max > 14` makes the system
/// overdetermined.
pub fn decompose(
    target: &QSeries,
    basis: &Basis28,
    n_max: usize,
) -> Result<CoeffVector, ModformError> {
    let needed = sturm_bound(28) as usize;
    if n_max < needed {
        return Err(ModformError::OrderTooSmall { needed, available: n_max });
    }
    for available in [target.order(), basis.order()] {
        if available < n_max {
            return Err(ModformError::OrderTooSmall { needed: n_max, available });
        }
    }
    let rows = basis.coefficient_rows(n_max);
    let rhs: Vec<Rational> = target.coeffs()[..=n_max].to_vec();
    match linalg::solve(&rows, &rhs) {
        Ok(x) => Ok(CoeffVector::from_flat(&x)),
        Err(SolveError::Inconsistent { row }) => Err(ModformError::Inconsistent { row }),
        Err(SolveError::Underdetermined { rank, .. }) => Err(ModformError::Underdetermined { rank }),
        Err(SolveError::Shape) => unreachable!("basis rows are built with uniform width"),
    }
}

/// Sturm-bound verdict for `lhs = rhs` as weight-4 forms of the given level.
pub fn verify_identity(lhs: &QSeries, rhs: &QSeries, level: u64) -> Result<bool, SeriesError> {
    lhs.equal_up_to(rhs, sturm_bound(level) as usize)
}

/// Outcome of an identity check at the Sturm bound and at the full common order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub level: u64,
    pub sturm_bound: usize,
    pub holds_at_sturm_bound: bool,
    pub checked_order: usize,
    pub holds_at_checked_order: bool,
    pub first_mismatch: Option<usize>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.holds_at_sturm_bound && self.holds_at_checked_order
    }
}

pub fn check_identity(lhs: &QSeries, rhs: &QSeries, level: u64) -> Result<IdentityCheck, SeriesError> {
    let holds_at_sturm_bound = verify_identity(lhs, rhs, level)?;
    let checked_order = lhs.order().min(rhs.order());
    let first_mismatch = lhs.first_mismatch(rhs);
    Ok(IdentityCheck {
        level,
        sturm_bound: sturm_bound(level) as usize,
        holds_at_sturm_bound,
        checked_order,
        holds_at_checked_order: first_mismatch.is_none(),
        first_mismatch,
    })
}

/// `(a·L(q^a) − b·L(q^b))²` through `q^order`.
pub fn squared_combination(a: u64, b: u64, order: usize) -> QSeries {
    l_combination(a as usize, b as usize, order).pow(2)
}

/// Published decomposition of `(a·L(q^a) − b·L(q^b))²`, for the five tabulated pairs.
pub fn published_decomposition(a: u64, b: u64) -> Option<CoeffVector> {
    SQUARED_COMBINATIONS
        .iter()
        .find(|t| t.a == a && t.b == b)
        .map(CoeffVector::from_table)
}
