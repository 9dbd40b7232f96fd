//! Exact integers, rationals and divisor sums.
//!
//! `sigma` follows the convention that `σ_k(n) = 0` whenever `n` is not a
//! positive integer, so formula evaluators can write `σ(n/d)` without
//! branching on divisibility (see [`sigma_scaled`]).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Nonnegative arbitrary-precision integer.
pub type Natural = BigUint;

/// Exact fraction, always held in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds `num/den` in canonical form. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Lifts an integer into the rationals.
pub fn int<T: Into<BigInt>>(value: T) -> Rational {
    Rational::from_integer(value.into())
}

/// Returns the integer value of `r` if its denominator is one.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.numer().clone())
}

/// Returns `r` as a natural number if it is a nonnegative integer.
pub fn as_natural(r: &Rational) -> Option<Natural> {
    as_integer(r).and_then(|i| i.to_biguint())
}

/// Renders `r` as `"p/q"`, or `"p"` when integral.
pub fn render(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"` into a canonical rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            (!q.is_zero()).then(|| Rational::new(p, q))
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// The divisor function `σ_k(n) = Σ_{d|n} d^k`, zero for `n ≤ 0`.
///
/// Divisors are found by trial division up to `√n`.
pub fn sigma(k: u32, n: i64) -> Natural {
    if n <= 0 {
        return Natural::zero();
    }
    let n = n as u64;
    let mut total = Natural::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            total += Natural::from(d).pow(k);
            let e = n / d;
            if e != d {
                total += Natural::from(e).pow(k);
            }
        }
        d += 1;
    }
    total
}

/// `σ_k(n/d)` when `d | n`, otherwise zero.
pub fn sigma_scaled(k: u32, n: u64, d: u64) -> Natural {
    assert!(d >= 1, "divisor scale must be positive");
    if n % d == 0 {
        sigma(k, (n / d) as i64)
    } else {
        Natural::zero()
    }
}

/// Table of `σ_k(n)` for `0 ≤ n ≤ n_max` built by a divisor sieve.
///
/// Index 0 holds 0. Used by callers that need every value up to a bound.
#[derive(Debug, Clone)]
pub struct SigmaTable {
    k: u32,
    values: Vec<Natural>,
}

impl SigmaTable {
    pub fn new(k: u32, n_max: u64) -> Self {
        let len = n_max as usize + 1;
        let mut values = vec![Natural::zero(); len];
        for d in 1..len {
            let term = Natural::from(d).pow(k);
            for m in (d..len).step_by(d) {
                values[m] += &term;
            }
        }
        SigmaTable { k, values }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n_max(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    /// `σ_k(n)`; zero for `n == 0`. Panics above the table bound.
    pub fn get(&self, n: u64) -> &Natural {
        &self.values[n as usize]
    }

    /// `σ_k(n/d)` with zero extension.
    pub fn scaled(&self, n: u64, d: u64) -> Natural {
        if n % d == 0 {
            self.values[(n / d) as usize].clone()
        } else {
            Natural::zero()
        }
    }
}

/// Prime factorisation by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Largest integer `s` with `s*s ≤ n`.
pub fn isqrt(n: u64) -> u64 {
    let mut s = (n as f64).sqrt() as u64;
    while s * s > n {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= n {
        s += 1;
    }
    s
}

/// Smallest integer not below `r`.
pub fn ceil(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

/// True iff `r` is the square of a rational number.
pub fn is_rational_square(r: &Rational) -> bool {
    if r.is_negative() {
        return false;
    }
    if r.is_zero() {
        return true;
    }
    is_perfect_square(r.numer()) && is_perfect_square(r.denom())
}

fn is_perfect_square(n: &BigInt) -> bool {
    let root = n.sqrt();
    &(&root * &root) == n
}

/// `gcd(a, b)` for machine integers.
pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Converts a small natural to `u64`, panicking on overflow.
pub fn natural_to_u64(n: &Natural) -> u64 {
    n.to_u64().expect("value exceeds u64")
}

/// `1` as a rational.
pub fn one() -> Rational {
    Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_sigma(k: u32, n: u64) -> u128 {
        (1..=n).filter(|d| n % d == 0).map(|d| (d as u128).pow(k)).sum()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(1, 1), Natural::from(1u32));
        assert_eq!(sigma(3, 2), Natural::from(9u32));
        assert_eq!(sigma(1, 0), Natural::zero());
        assert_eq!(sigma(3, -5), Natural::zero());
    }

    #[test]
    fn sigma_scaled_examples() {
        assert_eq!(sigma_scaled(3, 28, 28), Natural::from(1u32));
        assert_eq!(sigma_scaled(1, 29, 28), Natural::zero());
        // σ₃(2) = 1 + 8
        assert_eq!(sigma_scaled(3, 56, 28), Natural::from(naive_sigma(3, 2) as u64));
    }

    #[test]
    fn sigma_matches_trial_division_oracle() {
        for n in 1..=10_000u64 {
            assert_eq!(sigma(1, n as i64), Natural::from(naive_sigma(1, n)), "n = {n}");
        }
        for n in 1..=2_000u64 {
            assert_eq!(sigma(3, n as i64), Natural::from(naive_sigma(3, n)), "n = {n}");
        }
    }

    #[test]
    fn sigma_table_matches_direct() {
        let t1 = SigmaTable::new(1, 3000);
        let t3 = SigmaTable::new(3, 3000);
        for n in 0..=3000u64 {
            assert_eq!(t1.get(n), &sigma(1, n as i64));
            assert_eq!(t3.get(n), &sigma(3, n as i64));
        }
        assert_eq!(t3.scaled(56, 28), Natural::from(9u32));
        assert_eq!(t1.scaled(29, 28), Natural::zero());
    }

    #[test]
    fn sigma_is_multiplicative_on_coprime_pairs() {
        for m in 1..=1000u64 {
            for n in 1..=(1000 / m) {
                if gcd(m, n) == 1 {
                    for k in [1, 3] {
                        assert_eq!(
                            sigma(k, (m * n) as i64),
                            sigma(k, m as i64) * sigma(k, n as i64),
                            "k={k} m={m} n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn divisor_helpers() {
        assert_eq!(divisors(28), vec![1, 2, 4, 7, 14, 28]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(factorize(56), vec![(2, 3), (7, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(isqrt(48), 6);
        assert_eq!(isqrt(49), 7);
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(render(&rat(-21, 125)), "-21/125");
        assert_eq!(render(&rat(504, 2)), "252");
        assert_eq!(parse_rational("6/-4"), Some(rat(-3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert!(is_rational_square(&rat(49, 4)));
        assert!(!is_rational_square(&rat(7, 4)));
        assert!(!is_rational_square(&rat(-1, 1)));
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..200).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a + (-&a), Rational::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * a.recip(), Rational::one());
            }
            // canonical form makes equality structural
            prop_assert!(a.denom().is_positive());
            prop_assert_eq!(a.numer().gcd(a.denom()).abs(), if a.is_zero() { a.denom().clone() } else { BigInt::one() });
        }
    }
}
