//! Truncated formal power series in `q` over exact rationals.
//!
//! A [`QSeries`] of order `N` stores the coefficients of `q^0..=q^N`. Binary
//! operations truncate to the smaller operand order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{render, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("cube root requires leading term q^{index} with coefficient 1 and 3 | {index}")]
    BadLeadingTerm { index: usize },
    #[error("coefficient index {index} exceeds truncation order {order}")]
    OutOfRange { index: usize, order: usize },
}

/// Dense truncated power series `Σ_{n=0}^{order} a_n q^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// Builds a series from coefficients `a_0..=a_order`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series holds at least the constant term");
        QSeries { coeffs }
    }

    pub fn from_integers<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_coeffs(coeffs.into_iter().map(|c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero(order: usize) -> Self {
        QSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c·q^exponent`, or zero if `exponent > order`.
    pub fn monomial(c: Rational, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `q^n`.
    pub fn coefficient(&self, n: usize) -> Result<&Rational, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::OutOfRange { index: n, order: self.order() })
    }

    /// Coefficient of `q^n`, zero when `n` is past the stored order. Only for
    /// callers that already sized the series correctly.
    pub(crate) fn get(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops all coefficients above `order`. Never extends.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        QSeries { coeffs: self.coeffs[..=keep].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        QSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        QSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QSeries { coeffs: out }
    }

    /// `self^e` by repeated squaring; `self^0 = 1` at the same order.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multiplicative inverse via `b_0 = 1/a_0`, `b_n = -(Σ_{i=1}^{n} a_i b_{n-i}) / a_0`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv_a0 = a0.recip();
        let order = self.order();
        let mut b: Vec<Rational> = Vec::with_capacity(order + 1);
        b.push(inv_a0.clone());
        for n in 1..=order {
            let mut acc = Rational::zero();
            for i in 1..=n {
                let ai = &self.coeffs[i];
                if !ai.is_zero() {
                    acc += ai * &b[n - i];
                }
            }
            b.push(-acc * &inv_a0);
        }
        Ok(QSeries { coeffs: b })
    }

    /// `a(q^t)`, kept at the original order.
    pub fn substitute_power(&self, t: usize) -> Self {
        assert!(t >= 1, "substitution power must be positive");
        let order = self.order();
        let mut out = vec![Rational::zero(); order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            let target = i * t;
            if target > order {
                break;
            }
            out[target] = c.clone();
        }
        QSeries { coeffs: out }
    }

    /// Cube root of a series whose first nonzero term is `q^leading_index`
    /// with coefficient 1 and `3 | leading_index`.
    ///
    /// Writing `self = q^{3m} A` and `b = q^m B`, the coefficients of `B` are
    /// solved one at a time from `(B^3)_n = A_n`. `B` is determined up to index
    /// `order - 3m`, so the returned series has order `order - 2m`; its cube
    /// agrees with `self` through `self.order()`.
    pub fn cube_root(&self, leading_index: usize) -> Result<Self, SeriesError> {
        let bad = SeriesError::BadLeadingTerm { index: leading_index };
        if leading_index % 3 != 0 || leading_index > self.order() {
            return Err(bad);
        }
        if self.coeffs[..leading_index].iter().any(|c| !c.is_zero())
            || !self.coeffs[leading_index].is_one()
        {
            return Err(bad);
        }
        let m = leading_index / 3;
        let body = &self.coeffs[leading_index..];
        let len = body.len();
        // b holds B, sq holds B^2; both grow together.
        let mut b: Vec<Rational> = Vec::with_capacity(len);
        let mut sq: Vec<Rational> = Vec::with_capacity(len);
        b.push(Rational::one());
        sq.push(Rational::one());
        let three = Rational::from_integer(BigInt::from(3));
        for n in 1..len {
            // Contributions to (B^2)_n and (B^3)_n from b_1..b_{n-1}.
            let mut sq_rest = Rational::zero();
            for i in 1..n {
                sq_rest += &b[i] * &b[n - i];
            }
            let mut cube_rest = Rational::zero();
            for i in 1..n {
                cube_rest += &b[i] * &sq[n - i];
            }
            // (B^3)_n = 3 b_n + sq_rest + cube_rest
            let bn = (&body[n] - &sq_rest - &cube_rest) / &three;
            sq.push(Rational::from_integer(BigInt::from(2)) * &bn + sq_rest);
            b.push(bn);
        }
        let out_order = self.order() - 2 * m;
        let mut coeffs = vec![Rational::zero(); out_order + 1];
        for (i, c) in b.into_iter().enumerate() {
            if i + m > out_order {
                break;
            }
            coeffs[i + m] = c;
        }
        Ok(QSeries { coeffs })
    }

    /// True iff coefficients `0..=bound` agree exactly.
    pub fn equal_up_to(&self, other: &Self, bound: usize) -> Result<bool, SeriesError> {
        let order = self.order().min(other.order());
        if bound > order {
            return Err(SeriesError::OutOfRange { index: bound, order });
        }
        Ok(self.coeffs[..=bound] == other.coeffs[..=bound])
    }

    /// First index at which the two series differ, within their common order.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&i| self.coeffs[i] != other.coeffs[i])
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", render(c))?;
        }
        write!(f, "; O(q^{})]", self.order() + 1)
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries::add(self, rhs)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries::sub(self, rhs)
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        QSeries::mul(self, rhs)
    }
}

impl Mul<&QSeries> for &Rational {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        rhs.scale(self)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Linear combination `Σ c_i · s_i`, truncated to the smallest order.
pub fn linear_combination<'a, I>(terms: I, order: usize) -> QSeries
where
    I: IntoIterator<Item = (&'a Rational, &'a QSeries)>,
{
    let mut acc = QSeries::zero(order);
    for (c, s) in terms {
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&s.scale(c));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, sigma};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> QSeries {
        QSeries::from_integers(v.iter().copied())
    }

    fn l_by_hand(order: usize) -> QSeries {
        let mut c = vec![int(1)];
        for n in 1..=order {
            c.push(int(-24) * Rational::from_integer(sigma(1, n as i64).into()));
        }
        QSeries::from_coeffs(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(ints(&[1, -24]).add(&QSeries::zero(1)), ints(&[1, -24]));
        assert_eq!(ints(&[1, 1]).add(&ints(&[1, -1])), ints(&[2, 0]));
        let l = l_by_hand(50);
        let mut sig = vec![int(0)];
        for n in 1..=50 {
            sig.push(int(24) * Rational::from_integer(sigma(1, n).into()));
        }
        assert_eq!(l.add(&QSeries::from_coeffs(sig)), QSeries::one(50));
    }

    #[test]
    fn add_truncates_to_min_order() {
        assert_eq!(ints(&[1, 2, 3]).add(&ints(&[1])).order(), 0);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(ints(&[1, 1, 0]).mul(&ints(&[1, -1, 0])), ints(&[1, 0, -1]));
        let l = l_by_hand(5);
        // 240σ₃(1) − 288σ(1)
        assert_eq!(l.mul(&l).coefficient(1).unwrap(), &int(-48));
        assert_eq!(ints(&[0, 1]).mul(&ints(&[0, 1])), ints(&[0, 0]));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(ints(&[1, 1, 0]).pow(2), ints(&[1, 2, 1]));
        assert_eq!(ints(&[5, 7, 9]).pow(0), QSeries::one(2));
        assert_eq!(ints(&[1, -1, 0, 0]).pow(3).coefficient(2).unwrap(), &int(3));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(ints(&[1, -1, 0, 0]).inverse().unwrap(), ints(&[1, 1, 1, 1]));
        assert_eq!(ints(&[2]).inverse().unwrap(), QSeries::constant(rat(1, 2), 0));
        let a = QSeries::one(10).sub(&QSeries::monomial(int(1), 2, 10));
        assert_eq!(a.inverse().unwrap().mul(&a), QSeries::one(10));
        assert_eq!(ints(&[0, 1]).inverse(), Err(SeriesError::ZeroConstantTerm));
    }

    #[test]
    fn substitute_power_examples() {
        let a = QSeries::one(30).add(&QSeries::monomial(int(1), 1, 30));
        let expect = QSeries::one(30).add(&QSeries::monomial(int(1), 28, 30));
        assert_eq!(a.substitute_power(28), expect);
        let l28 = l_by_hand(60).substitute_power(28);
        assert_eq!(l28.coefficient(28).unwrap(), &int(-24));
        assert_eq!(l28.coefficient(29).unwrap(), &int(0));
        assert_eq!(l28.coefficient(56).unwrap(), &int(-72));
        assert_eq!(a.substitute_power(1), a);
    }

    #[test]
    fn cube_root_examples() {
        assert_eq!(ints(&[1, 3, 3, 1]).cube_root(0).unwrap(), ints(&[1, 1, 0, 0]));
        // q^3 at order 3: root is q, kept to order 1
        assert_eq!(ints(&[0, 0, 0, 1]).cube_root(3).unwrap(), ints(&[0, 1]));
        assert_eq!(
            ints(&[0, 0, 1, 0]).cube_root(2),
            Err(SeriesError::BadLeadingTerm { index: 2 })
        );
        assert_eq!(
            ints(&[2, 0, 0]).cube_root(0),
            Err(SeriesError::BadLeadingTerm { index: 0 })
        );
        assert_eq!(
            ints(&[0, 1, 0, 1]).cube_root(3),
            Err(SeriesError::BadLeadingTerm { index: 3 })
        );
    }

    #[test]
    fn coefficient_examples() {
        let s = ints(&[1, -24]);
        assert_eq!(s.coefficient(1).unwrap(), &int(-24));
        assert_eq!(s.coefficient(0).unwrap(), &int(1));
        assert_eq!(ints(&[0, 0, 1]).coefficient(2).unwrap(), &int(1));
        assert_eq!(s.coefficient(2), Err(SeriesError::OutOfRange { index: 2, order: 1 }));
    }

    #[test]
    fn equal_up_to_examples() {
        let a = ints(&[3, 1, 4, 1, 5]);
        assert!(a.equal_up_to(&a, 4).unwrap());
        let one = QSeries::one(17);
        let bumped = one.add(&QSeries::monomial(int(1), 17, 17));
        assert!(one.equal_up_to(&bumped, 16).unwrap());
        assert!(!one.equal_up_to(&bumped, 17).unwrap());
        assert!(!QSeries::one(1).equal_up_to(&ints(&[1, 1]), 1).unwrap());
        assert!(a.equal_up_to(&a, 5).is_err());
    }

    fn series(order: usize) -> impl Strategy<Value = QSeries> {
        proptest::collection::vec((-50i64..50, 1i64..6), order + 1)
            .prop_map(|v| QSeries::from_coeffs(v.into_iter().map(|(p, q)| rat(p, q)).collect()))
    }

    fn unit_series(order: usize) -> impl Strategy<Value = QSeries> {
        (series(order), 1i64..9, proptest::bool::ANY).prop_map(|(s, c, neg)| {
            let mut v = s.into_coeffs();
            v[0] = if neg { rat(-c, 1) } else { rat(c, 1) };
            QSeries::from_coeffs(v)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn ring_laws(a in series(30), b in series(30), c in series(30)) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn inverse_round_trip(a in unit_series(30)) {
            prop_assert_eq!(a.mul(&a.inverse().unwrap()), QSeries::one(30));
        }

        #[test]
        fn cube_root_round_trip(s in series(20), shift in 0usize..3) {
            let mut v = s.into_coeffs();
            v[0] = int(1);
            let body = QSeries::from_coeffs(v);
            // shift the unit series by q^{3·shift}
            let lead = 3 * shift;
            let a = QSeries::monomial(int(1), lead, 20).mul(&body);
            let root = a.cube_root(lead).unwrap();
            prop_assert_eq!(root.order(), 20 - 2 * shift);
            let cubed = root.pow(3);
            prop_assert!(cubed.equal_up_to(&a, cubed.order().min(20)).unwrap());
        }

        #[test]
        fn substitution_is_a_ring_map(a in series(24), b in series(24), t in 1usize..5) {
            prop_assert_eq!(
                a.mul(&b).substitute_power(t),
                a.substitute_power(t).mul(&b.substitute_power(t))
            );
        }
    }
}
