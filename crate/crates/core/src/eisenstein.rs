//! Eisenstein series `L(q) = 1 - 24 Σ σ(n) qⁿ` (weight 2) and
//! `M(q) = 1 + 240 Σ σ₃(n) qⁿ` (weight 4), with their dilations.

use num_bigint::BigInt;

use crate::arith::{Rational, SigmaTable};
use crate::qseries::QSeries;

fn sigma_series(k: u32, scale: i64, order: usize) -> QSeries {
    let table = SigmaTable::new(k, order as u64);
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Rational::from_integer(BigInt::from(1)));
    for n in 1..=order as u64 {
        let s: BigInt = table.get(n).clone().into();
        coeffs.push(Rational::from_integer(s * scale));
    }
    QSeries::from_coeffs(coeffs)
}

pub fn l_series(order: usize) -> QSeries {
    sigma_series(1, -24, order)
}

pub fn m_series(order: usize) -> QSeries {
    sigma_series(3, 240, order)
}

/// `M(q^t)` truncated at `order`.
pub fn m_dilated(t: usize, order: usize) -> QSeries {
    m_series(order).substitute_power(t)
}

/// `a·L(q^a) - b·L(q^b)`. Both dilations share one `L` expansion.
pub fn l_combination(a: usize, b: usize, order: usize) -> QSeries {
    assert!(a >= 1 && b >= 1, "dilations must be positive");
    let l = l_series(order);
    let la = l.substitute_power(a).scale(&Rational::from_integer(BigInt::from(a)));
    let lb = l.substitute_power(b).scale(&Rational::from_integer(BigInt::from(b)));
    la.sub(&lb)
}
