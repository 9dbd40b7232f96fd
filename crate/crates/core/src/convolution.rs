//! The convolution sum `W_{a,b}(n) = Σ_{al+bm=n} σ(l)σ(m)` over positive
//! `l, m`: a direct summation, the gcd reduction, and closed forms for the
//! pairs (1,28), (4,7), (1,14), (2,7), (1,7).

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::arith::{as_natural, gcd, rat, sigma_scaled, Natural, Rational, SigmaTable};
use crate::eta::CuspProvider;
use crate::tables::{ConvolutionFormula, CONVOLUTION_FORMULAS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConvolutionError {
    #[error("convolution arguments must be positive (a={a}, b={b}, n={n})")]
    ZeroArgument { a: u64, b: u64, n: u64 },
    #[error("no closed form for W({a},{b})")]
    UnknownPair { a: u64, b: u64 },
    #[error("closed form for {what} at n={n} evaluated to {value}, not a nonnegative integer")]
    NonIntegralResult { what: String, n: u64, value: String },
}

/// An unordered coefficient pair, stored with `a ≤ b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairId {
    a: u64,
    b: u64,
}

impl PairId {
    /// The pairs with closed forms.
    pub const CLOSED_FORMS: [PairId; 5] = [
        PairId { a: 1, b: 28 },
        PairId { a: 4, b: 7 },
        PairId { a: 1, b: 14 },
        PairId { a: 2, b: 7 },
        PairId { a: 1, b: 7 },
    ];

    pub fn new(a: u64, b: u64) -> Self {
        assert!(a >= 1 && b >= 1, "pair entries must be positive");
        PairId { a: a.min(b), b: a.max(b) }
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn has_closed_form(&self) -> bool {
        self.formula().is_some()
    }

    fn formula(&self) -> Option<&'static ConvolutionFormula> {
        CONVOLUTION_FORMULAS.iter().find(|f| f.a == self.a && f.b == self.b)
    }
}

impl fmt::Display for PairId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// `W_{a,b}(n)` by direct summation, using a prebuilt `σ` table covering `n`.
pub fn w_brute_with(sigma: &SigmaTable, a: u64, b: u64, n: u64) -> Natural {
    assert_eq!(sigma.k(), 1, "convolution needs the σ₁ table");
    let mut total = Natural::zero();
    let mut m = 1;
    while b * m < n {
        let rest = n - b * m;
        if rest % a == 0 {
            total += sigma.get(rest / a) * sigma.get(m);
        }
        m += 1;
    }
    total
}

/// `W_{a,b}(n)` by direct summation over `m = 1..⌊(n-a)/b⌋`.
pub fn w_brute(a: u64, b: u64, n: u64) -> Natural {
    assert!(a >= 1 && b >= 1, "convolution coefficients must be positive");
    w_brute_with(&SigmaTable::new(1, n), a, b, n)
}

/// Exact value of the closed form, before the integrality check.
pub fn w_formula_rational(pair: PairId, n: u64, cusp: &dyn CuspProvider) -> Result<Rational, ConvolutionError> {
    let formula = pair.formula().ok_or(ConvolutionError::UnknownPair { a: pair.a, b: pair.b })?;
    let nat = |v: Natural| Rational::from_integer(BigInt::from(v));
    let n_rat = Rational::from_integer(BigInt::from(n));
    let one_24 = rat(1, 24);

    let mut total = Rational::zero();
    for &(d, (p, q)) in formula.sigma3 {
        total += rat(p, q) * nat(sigma_scaled(3, n, d));
    }
    for &(d, (p, q)) in formula.sigma1 {
        total += (&one_24 - rat(p, q) * &n_rat) * nat(sigma_scaled(1, n, d));
    }
    for (j, &(p, q)) in formula.cusp.iter().enumerate() {
        if p != 0 {
            total += rat(p, q) * cusp.c(j + 1, n);
        }
    }
    Ok(total)
}

/// `W_{a,b}(n)` from its closed form; errors unless the value is a nonnegative integer.
pub fn w_formula(pair: PairId, n: u64, cusp: &dyn CuspProvider) -> Result<Natural, ConvolutionError> {
    let value = w_formula_rational(pair, n, cusp)?;
    as_natural(&value).ok_or_else(|| ConvolutionError::NonIntegralResult {
        what: format!("W{pair}"),
        n,
        value: crate::arith::render(&value),
    })
}

/// `W_{a,b}(n)` after dividing out `g = gcd(a,b)`: zero unless `g | n`, then the
/// closed form of the reduced pair when one exists, else direct summation.
pub fn w_reduce(a: u64, b: u64, n: u64, cusp: &dyn CuspProvider) -> Result<Natural, ConvolutionError> {
    if a == 0 || b == 0 || n == 0 {
        return Err(ConvolutionError::ZeroArgument { a, b, n });
    }
    let g = gcd(a, b);
    if n % g != 0 {
        return Ok(Natural::zero());
    }
    let reduced = PairId::new(a / g, b / g);
    let m = n / g;
    if reduced.has_closed_form() {
        w_formula(reduced, m, cusp)
    } else {
        Ok(w_brute(reduced.a, reduced.b, m))
    }
}
