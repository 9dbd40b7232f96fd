//! Dedekind eta quotients `Π_{δ|N} η(δz)^{r_δ}`.
//!
//! Expansions are computed over the integers: each factor
//! `Π_{n≥1} (1 - q^{δn})^{r_δ}` is applied in place, and the fractional
//! prefactor `q^{Σ δ r_δ / 24}` is tracked separately as `offset24` until the
//! caller asks for a plain [`QSeries`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{divisors, factorize, gcd, is_rational_square, Rational};
use crate::qseries::QSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EtaError {
    #[error("level must be at least 1")]
    ZeroLevel,
    #[error("{delta} does not divide level {level}")]
    NotADivisor { delta: u64, level: u64 },
    #[error("eta quotient has no nonzero exponent")]
    Trivial,
    #[error("malformed eta quotient spec: {0}")]
    Parse(String),
    #[error("q-exponent {offset24}/24 is not an integer")]
    FractionalExponent { offset24: i64 },
    #[error("q-exponent {offset24}/24 is negative")]
    NegativeValuation { offset24: i64 },
}

/// An eta quotient at a given level, exponents keyed by divisor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EtaQuotientSpec {
    level: u64,
    exponents: BTreeMap<u64, i64>,
}

impl EtaQuotientSpec {
    /// Zero exponents are dropped; every remaining key must divide `level`.
    pub fn new<I>(level: u64, exponents: I) -> Result<Self, EtaError>
    where
        I: IntoIterator<Item = (u64, i64)>,
    {
        if level == 0 {
            return Err(EtaError::ZeroLevel);
        }
        let mut map = BTreeMap::new();
        for (delta, r) in exponents {
            if delta == 0 || level % delta != 0 {
                return Err(EtaError::NotADivisor { delta, level });
            }
            *map.entry(delta).or_insert(0) += r;
        }
        map.retain(|_, r| *r != 0);
        if map.is_empty() {
            return Err(EtaError::Trivial);
        }
        Ok(EtaQuotientSpec { level, exponents: map })
    }

    /// Parses `"δ:r,δ:r,..."`, e.g. `"1:5,2:-1,7:5,14:-1"`.
    pub fn parse(level: u64, text: &str) -> Result<Self, EtaError> {
        let mut pairs = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (d, r) = item
                .split_once(':')
                .ok_or_else(|| EtaError::Parse(format!("expected delta:exponent, got {item:?}")))?;
            let d = u64::from_str(d.trim())
                .map_err(|_| EtaError::Parse(format!("bad divisor {d:?}")))?;
            let r = i64::from_str(r.trim())
                .map_err(|_| EtaError::Parse(format!("bad exponent {r:?}")))?;
            pairs.push((d, r));
        }
        Self::new(level, pairs)
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exponents
    }

    /// `Σ δ·r_δ`, the q-exponent of the leading term times 24.
    pub fn offset24(&self) -> i64 {
        self.exponents.iter().map(|(&d, &r)| d as i64 * r).sum()
    }

    /// Pointwise sum of exponent maps at the lcm of the two levels.
    pub fn product(&self, other: &Self) -> Result<Self, EtaError> {
        let level = self.level / gcd(self.level, other.level) * other.level;
        let merged = self
            .exponents
            .iter()
            .chain(other.exponents.iter())
            .map(|(&d, &r)| (d, r));
        Self::new(level, merged)
    }
}

impl fmt::Display for EtaQuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(|(d, r)| format!("{d}:{r}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `q^{offset24/24} · body`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaExpansion {
    pub offset24: i64,
    pub body: QSeries,
}

impl EtaExpansion {
    /// Shifts the body into a plain series; only valid for integral exponents.
    pub fn into_series(self) -> Result<QSeries, EtaError> {
        let offset24 = self.offset24;
        if offset24 % 24 != 0 {
            return Err(EtaError::FractionalExponent { offset24 });
        }
        if offset24 < 0 {
            return Err(EtaError::NegativeValuation { offset24 });
        }
        let shift = (offset24 / 24) as usize;
        let order = self.body.order();
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, c) in self.body.into_coeffs().into_iter().enumerate() {
            if i + shift > order {
                break;
            }
            coeffs[i + shift] = c;
        }
        Ok(QSeries::from_coeffs(coeffs))
    }
}

/// Multiplies `coeffs` in place by `Π_{n≥1} (1 - q^{δn})^r`, truncated.
fn apply_eta_factor(coeffs: &mut [BigInt], delta: u64, r: i64) {
    let order = coeffs.len() - 1;
    let delta = delta as usize;
    let mut m = delta;
    while m <= order {
        if r > 0 {
            for _ in 0..r {
                for i in (m..=order).rev() {
                    let (lo, hi) = coeffs.split_at_mut(i);
                    if !lo[i - m].is_zero() {
                        hi[0] -= &lo[i - m];
                    }
                }
            }
        } else {
            // 1/(1 - q^m) is the running sum with stride m
            for _ in 0..(-r) {
                for i in m..=order {
                    let (lo, hi) = coeffs.split_at_mut(i);
                    if !lo[i - m].is_zero() {
                        hi[0] += &lo[i - m];
                    }
                }
            }
        }
        m += delta;
    }
}

fn body_integers(exponents: &BTreeMap<u64, i64>, order: usize) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::one();
    for (&delta, &r) in exponents {
        apply_eta_factor(&mut coeffs, delta, r);
    }
    coeffs
}

/// `η(δz)^r` as `q^{δr/24} Π (1 - q^{δn})^r`, body truncated at `order`.
pub fn eta_factor(delta: u64, r: i64, order: usize) -> EtaExpansion {
    assert!(delta >= 1, "eta argument scale must be positive");
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::one();
    apply_eta_factor(&mut coeffs, delta, r);
    EtaExpansion { offset24: delta as i64 * r, body: QSeries::from_integers(coeffs) }
}

/// Integer coefficients of the eta quotient through `q^order`.
pub fn expand_integers(spec: &EtaQuotientSpec, order: usize) -> Result<Vec<BigInt>, EtaError> {
    let offset24 = spec.offset24();
    if offset24 % 24 != 0 {
        return Err(EtaError::FractionalExponent { offset24 });
    }
    if offset24 < 0 {
        return Err(EtaError::NegativeValuation { offset24 });
    }
    let shift = (offset24 / 24) as usize;
    let mut out = vec![BigInt::zero(); order + 1];
    if shift <= order {
        let body = body_integers(&spec.exponents, order - shift);
        for (i, c) in body.into_iter().enumerate() {
            out[i + shift] = c;
        }
    }
    Ok(out)
}

/// Full q-expansion of the eta quotient through `q^order`.
pub fn expand(spec: &EtaQuotientSpec, order: usize) -> Result<QSeries, EtaError> {
    expand_integers(spec, order).map(QSeries::from_integers)
}

/// Outcome of each Ligozat condition for one eta quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LigozatReport {
    pub weight_k: Rational,
    pub s_value: Rational,
    pub cond_i: bool,
    pub cond_ii: bool,
    pub cusp_orders: BTreeMap<u64, Rational>,
    pub cond_iii: bool,
    pub cond_iii_strict: bool,
    pub cond_iv: bool,
    pub cond_v: bool,
    pub is_modular: bool,
    pub is_cusp: bool,
}

pub fn ligozat_check(spec: &EtaQuotientSpec) -> LigozatReport {
    let level = spec.level;
    let exps = &spec.exponents;

    let sum_r: i64 = exps.values().sum();
    let weight_k = Rational::new(BigInt::from(sum_r), BigInt::from(2));

    let cond_i = spec.offset24().rem_euclid(24) == 0;
    let dual: i64 = exps.iter().map(|(&d, &r)| (level / d) as i64 * r).sum();
    let cond_ii = dual.rem_euclid(24) == 0;

    let cusp_orders: BTreeMap<u64, Rational> = divisors(level)
        .into_iter()
        .map(|d| {
            let total = exps.iter().fold(Rational::zero(), |acc, (&delta, &r)| {
                let g = gcd(d, delta);
                acc + Rational::new(BigInt::from(g * g) * r, BigInt::from(delta))
            });
            (d, total)
        })
        .collect();
    let cond_iii = cusp_orders.values().all(|v| !v.is_negative());
    let cond_iii_strict = cusp_orders.values().all(|v| v.is_positive());

    let cond_iv = sum_r % 4 == 0;

    // s = Π δ^{r_δ}: accumulate prime exponents so negative r_δ stay exact.
    let mut prime_exps: BTreeMap<u64, i64> = BTreeMap::new();
    for (&delta, &r) in exps {
        for (p, e) in factorize(delta) {
            *prime_exps.entry(p).or_insert(0) += e as i64 * r;
        }
    }
    let mut s_value = Rational::one();
    for (&p, &e) in &prime_exps {
        let pe = BigInt::from(p).pow(e.unsigned_abs() as u32);
        if e >= 0 {
            s_value *= Rational::from_integer(pe);
        } else {
            s_value /= Rational::from_integer(pe);
        }
    }
    let cond_v = prime_exps.values().all(|e| e % 2 == 0);
    debug_assert_eq!(cond_v, is_rational_square(&s_value));

    let is_modular = cond_i && cond_ii && cond_iii && cond_iv && cond_v;
    let is_cusp = is_modular && cond_iii_strict;
    LigozatReport {
        weight_k,
        s_value,
        cond_i,
        cond_ii,
        cusp_orders,
        cond_iii,
        cond_iii_strict,
        cond_iv,
        cond_v,
        is_modular,
        is_cusp,
    }
}

/// Exponent maps of the nine level-28 weight-4 cusp forms `C_1..C_9`.
const CUSP_EXPONENTS: [&[(u64, i64)]; 9] = [
    &[(1, 5), (2, -1), (7, 5), (14, -1)],
    &[(1, 2), (2, 2), (7, 2), (14, 2)],
    &[(1, 6), (2, -2), (7, -2), (14, 6)],
    &[(1, -2), (2, 6), (7, 6), (14, -2)],
    &[(4, 2), (14, 4), (28, 2)],
    &[(2, 6), (4, -2), (14, -2), (28, 6)],
    &[(2, 4), (4, -2), (28, 6)],
    &[(1, 1), (2, 1), (7, 1), (14, -3), (28, 8)],
    &[(2, 1), (4, 1), (14, -3), (28, 9)],
];

/// Spec of `C_j` for `j ∈ 1..=9`, at level 28.
pub fn c_spec(j: usize) -> EtaQuotientSpec {
    assert!((1..=9).contains(&j), "cusp generator index must be in 1..=9");
    EtaQuotientSpec::new(28, CUSP_EXPONENTS[j - 1].iter().copied())
        .expect("built-in cusp generator spec is valid")
}

/// q-expansion of `C_j(q)` through `q^order`.
pub fn c_series(j: usize, order: usize) -> QSeries {
    expand(&c_spec(j), order).expect("cusp generators have integral positive valuation")
}

/// Source of cusp-form coefficients `c_j(n)`.
pub trait CuspProvider {
    /// `c_j(n)` for `j ∈ 1..=9`, `n ≥ 0`.
    fn c(&self, j: usize, n: u64) -> Rational;

    /// `c_j(n/d)` when `d | n`, otherwise zero.
    fn c_scaled(&self, j: usize, n: u64, d: u64) -> Rational {
        if n % d == 0 {
            self.c(j, n / d)
        } else {
            Rational::zero()
        }
    }
}

/// Precomputed integer coefficients of `C_1..C_9` through a fixed order.
#[derive(Debug, Clone)]
pub struct CuspTable {
    order: usize,
    rows: Vec<Vec<BigInt>>,
}

impl CuspTable {
    pub fn new(order: usize) -> Self {
        let rows = (1..=9)
            .map(|j| expand_integers(&c_spec(j), order).expect("valid cusp spec"))
            .collect();
        CuspTable { order, rows }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn integer(&self, j: usize, n: u64) -> &BigInt {
        assert!(
            n as usize <= self.order,
            "c_{j}({n}) requested beyond table order {}",
            self.order
        );
        &self.rows[j - 1][n as usize]
    }

    pub fn series(&self, j: usize) -> QSeries {
        QSeries::from_integers(self.rows[j - 1].iter().cloned())
    }
}

impl CuspProvider for CuspTable {
    fn c(&self, j: usize, n: u64) -> Rational {
        Rational::from_integer(self.integer(j, n).clone())
    }
}
