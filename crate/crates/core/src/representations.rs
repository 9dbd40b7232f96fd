//! Representation counts: `r₄(n)` for `x₁²+x₂²+x₃²+x₄²` and `R₇(n)` for
//! `x₁²+x₂²+x₃²+x₄² + 7(x₅²+x₆²+x₇²+x₈²)`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{as_natural, isqrt, rat, render, sigma_scaled, Natural, Rational};
use crate::convolution::{w_formula, ConvolutionError, PairId};
use crate::eta::{CuspProvider, CuspTable};
use crate::modforms::{check_identity, IdentityCheck};
use crate::qseries::QSeries;
use crate::tables::{CUSP_SHIFT_BY_FOUR, R7_CUSP, R7_CUSP_UNREDUCED, R7_QUARTER_TAIL, R7_SIGMA3};

fn nat(v: Natural) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn to_natural(value: Rational, what: &str, n: u64) -> Result<Natural, ConvolutionError> {
    as_natural(&value).ok_or_else(|| ConvolutionError::NonIntegralResult {
        what: what.to_string(),
        n,
        value: render(&value),
    })
}

/// Jacobi: `r₄(0) = 1`, `r₄(n) = 8σ(n) − 32σ(n/4)`.
pub fn r4_jacobi(n: u64) -> Natural {
    if n == 0 {
        return Natural::from(1u32);
    }
    sigma_scaled(1, n, 1) * 8u32 - sigma_scaled(1, n, 4) * 32u32
}

/// Number of `(x₁,..,x₄) ∈ ℤ⁴` with `Σxᵢ² = n`, by enumeration over `|xᵢ| ≤ √n`.
pub fn r4_enumerate(n: u64) -> Natural {
    let s = isqrt(n) as i64;
    let mut count: u64 = 0;
    for x1 in -s..=s {
        let r1 = n as i64 - x1 * x1;
        for x2 in -s..=s {
            let r2 = r1 - x2 * x2;
            if r2 < 0 {
                continue;
            }
            for x3 in -s..=s {
                let r3 = r2 - x3 * x3;
                if r3 < 0 {
                    continue;
                }
                let x4 = isqrt(r3 as u64) as i64;
                if x4 * x4 == r3 {
                    count += if x4 == 0 { 1 } else { 2 };
                }
            }
        }
    }
    Natural::from(count)
}

/// `r₄(0..=n_max)` by enumeration.
pub fn r4_table(n_max: u64) -> Vec<Natural> {
    (0..=n_max).map(r4_enumerate).collect()
}

/// `R₇(n) = Σ_{v=0}^{⌊n/7⌋} r₄(n − 7v)·r₄(v)`, each `r₄` enumerated.
pub fn r7_enumerate(n: u64) -> Natural {
    let r4 = r4_table(n);
    r7_from_table(&r4, n)
}

/// As [`r7_enumerate`], reading `r₄` from a table covering `0..=n`.
pub fn r7_from_table(r4: &[Natural], n: u64) -> Natural {
    (0..=n / 7).map(|v| &r4[(n - 7 * v) as usize] * &r4[v as usize]).sum()
}

/// `Σ_{l+7m=n; l,m ≥ 1} r₄(l)·r₄(m)` from a table of `r₄`.
pub fn r4_pair_sum(r4: &[Natural], n: u64) -> Natural {
    (1..)
        .take_while(|m| 7 * m < n)
        .map(|m| &r4[(n - 7 * m) as usize] * &r4[m as usize])
        .sum()
}

/// `64W₁,₇(n) + 1024W₁,₇(n/4) − 256(W₄,₇(n) + W₁,₂₈(n))`, with `W₁,₇(n/4) = 0` when `4 ∤ n`.
pub fn w_part_of_r7(n: u64, cusp: &dyn CuspProvider) -> Result<Rational, ConvolutionError> {
    let w = |a, b, m| w_formula(PairId::new(a, b), m, cusp).map(nat);
    let quarter = if n % 4 == 0 { w(1, 7, n / 4)? } else { Rational::zero() };
    Ok(rat(64, 1) * w(1, 7, n)? + rat(1024, 1) * quarter - rat(256, 1) * (w(4, 7, n)? + w(1, 28, n)?))
}

/// `R₇(n)` from `r₄` and the convolution sums `W₁,₇`, `W₄,₇`, `W₁,₂₈`.
pub fn r7_via_w(n: u64, cusp: &dyn CuspProvider) -> Result<Natural, ConvolutionError> {
    assert!(n >= 1, "R7 via convolution sums is stated for n >= 1");
    let s = |d| nat(sigma_scaled(1, n, d));
    let value = rat(8, 1) * s(1) - rat(32, 1) * s(4) + rat(8, 1) * s(7) - rat(32, 1) * s(28)
        + w_part_of_r7(n, cusp)?;
    to_natural(value, "R7 via W", n)
}

fn r7_sigma3_part(n: u64) -> Rational {
    R7_SIGMA3
        .iter()
        .map(|&(d, (p, q))| rat(p, q) * nat(sigma_scaled(3, n, d)))
        .sum()
}

fn cusp_part(coeffs: &[(i64, i64); 9], n: u64, cusp: &dyn CuspProvider) -> Rational {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, &(p, _))| p != 0)
        .map(|(j, &(p, q))| rat(p, q) * cusp.c(j + 1, n))
        .sum()
}

/// Closed form of `R₇(n)` in `σ₃(n/d)` and `c_1(n)..c_9(n)`.
pub fn r7_closed(n: u64, cusp: &dyn CuspProvider) -> Result<Natural, ConvolutionError> {
    assert!(n >= 1, "closed form of R7 is stated for n >= 1");
    let value = r7_sigma3_part(n) + cusp_part(&R7_CUSP, n, cusp);
    to_natural(value, "R7 closed form", n)
}

/// The closed form before `c_1(n/4) + 4c_2(n/4)` is rewritten at level 28.
pub fn r7_unreduced(n: u64, cusp: &dyn CuspProvider) -> Result<Natural, ConvolutionError> {
    assert!(n >= 1, "closed form of R7 is stated for n >= 1");
    let (p, q) = R7_QUARTER_TAIL;
    let tail = rat(p, q) * (cusp.c_scaled(1, n, 4) + rat(4, 1) * cusp.c_scaled(2, n, 4));
    let value = r7_sigma3_part(n) + cusp_part(&R7_CUSP_UNREDUCED, n, cusp) + tail;
    to_natural(value, "R7 unreduced form", n)
}

/// Published coefficients `κ_1..κ_9` of `C_1(q⁴) + 4C_2(q⁴) = Σ κ_j C_j(q)`.
pub fn cusp_shift_coefficients() -> Vec<Rational> {
    CUSP_SHIFT_BY_FOUR.iter().map(|&(p, q)| rat(p, q)).collect()
}

/// Both sides of `C_1(q⁴) + 4C_2(q⁴) = Σ κ_j C_j(q)` through `q^order`.
pub fn cusp_shift_sides_with(coefficients: &[Rational], order: usize) -> (QSeries, QSeries) {
    assert_eq!(coefficients.len(), 9, "one coefficient per cusp generator");
    let table = CuspTable::new(order);
    let lhs = table
        .series(1)
        .add(&table.series(2).scale(&rat(4, 1)))
        .substitute_power(4);
    let mut rhs = QSeries::zero(order);
    for (j, c) in coefficients.iter().enumerate() {
        if !c.is_zero() {
            rhs = rhs.add(&table.series(j + 1).scale(c));
        }
    }
    (lhs, rhs)
}

pub fn cusp_shift_sides(order: usize) -> (QSeries, QSeries) {
    cusp_shift_sides_with(&cusp_shift_coefficients(), order)
}

/// Checks the level-56 identity at its Sturm bound (32) and through `order`.
pub fn check_cusp_shift_identity(order: usize) -> IdentityCheck {
    assert!(order >= 32, "identity lives in weight 4, level 56; need order >= 32");
    let (lhs, rhs) = cusp_shift_sides(order);
    check_identity(&lhs, &rhs, 56).expect("both sides share the requested order")
}

pub fn verify_cusp_shift_identity(order: usize) -> bool {
    check_cusp_shift_identity(order).passed()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn n(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn r4_examples() {
        assert_eq!(r4_jacobi(0), n(1));
        assert_eq!(r4_jacobi(1), n(8));
        assert_eq!(r4_jacobi(4), n(24));
        assert_eq!(r4_enumerate(0), n(1));
        assert_eq!(r4_enumerate(1), n(8));
        assert_eq!(r4_enumerate(7), n(64));
        assert_eq!(r4_enumerate(4), n(24));
    }

    #[test]
    fn r4_enumeration_matches_raw_four_fold_loop() {
        for m in 0..=40u64 {
            let s = isqrt(m) as i64;
            let mut count = 0u64;
            for a in -s..=s {
                for b in -s..=s {
                    for c in -s..=s {
                        for d in -s..=s {
                            if (a * a + b * b + c * c + d * d) as u64 == m {
                                count += 1;
                            }
                        }
                    }
                }
            }
            assert_eq!(r4_enumerate(m), n(count), "m = {m}");
        }
    }

    #[test]
    fn jacobi_matches_enumeration() {
        for m in 0..=300 {
            assert_eq!(r4_jacobi(m), r4_enumerate(m), "m = {m}");
        }
    }

    #[test]
    fn r7_examples() {
        let cusp = CuspTable::new(40);
        assert_eq!(r7_enumerate(0), n(1));
        assert_eq!(r7_enumerate(1), n(8));
        assert_eq!(r7_enumerate(7), n(72));
        assert_eq!(r7_enumerate(8), n(88));
        assert_eq!(r7_via_w(1, &cusp).unwrap(), n(8));
        assert_eq!(r7_via_w(7, &cusp).unwrap(), n(72));
        assert_eq!(r7_via_w(8, &cusp).unwrap(), n(88));
        assert_eq!(r7_closed(1, &cusp).unwrap(), n(8));
        assert_eq!(r7_closed(7, &cusp).unwrap(), n(72));
        assert_eq!(r7_closed(28, &cusp).unwrap(), r7_enumerate(28));
    }

    #[test]
    fn r7_routes_agree() {
        let n_max = 120;
        let cusp = CuspTable::new(n_max as usize);
        let r4 = r4_table(n_max);
        for m in 1..=n_max {
            let direct = r7_from_table(&r4, m);
            assert_eq!(r7_via_w(m, &cusp).unwrap(), direct, "via W, n = {m}");
            assert_eq!(r7_closed(m, &cusp).unwrap(), direct, "closed, n = {m}");
            assert_eq!(r7_unreduced(m, &cusp).unwrap(), direct, "unreduced, n = {m}");
        }
    }

    #[test]
    fn pair_sum_replays_w_expansion() {
        let n_max = 120;
        let cusp = CuspTable::new(n_max as usize);
        let r4 = r4_table(n_max);
        for m in 1..=n_max {
            assert_eq!(nat(r4_pair_sum(&r4, m)), w_part_of_r7(m, &cusp).unwrap(), "n = {m}");
        }
    }

    #[test]
    fn cusp_shift_identity() {
        assert!(verify_cusp_shift_identity(32));
        assert!(verify_cusp_shift_identity(100));
        let (lhs, rhs) = cusp_shift_sides(10);
        assert_eq!(lhs.coefficient(1).unwrap(), &int(0));
        assert_eq!(rhs.coefficient(1).unwrap(), &int(0));
        let check = check_cusp_shift_identity(40);
        assert_eq!(check.sturm_bound, 32);
        assert_eq!(check.checked_order, 40);
    }
}
