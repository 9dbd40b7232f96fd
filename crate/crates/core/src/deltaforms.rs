//! Weight-4 cusp forms of levels 7 and 14 written as eta quotients, and the
//! older convolution formulas for `W₁,₇` and `W₁,₁₄` stated in terms of them.
//!
//! `Δ_{4,7}` has two constructions here: the cube root of
//! `η¹⁶(z)η⁸(7z) + 13η¹²(z)η¹²(7z) + 49η⁸(z)η¹⁶(7z)`, and `C_1 + 4C_2`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{as_natural, rat, render, sigma_scaled, Natural, Rational};
use crate::convolution::ConvolutionError;
use crate::eta::{expand, CuspTable, EtaQuotientSpec};
use crate::qseries::QSeries;
use crate::tables::{LEMIRE_TAU, ROYER_TAU};

/// Which level-14 form: `Δ_{4,14,1} = −C_3 + C_4` or `Δ_{4,14,2} = −4C_2 + C_3 + C_4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level14Form {
    First,
    Second,
}

/// The three weight-12 level-7 eta products under the cube root, with their multipliers.
pub fn bracket_terms() -> [(i64, EtaQuotientSpec); 3] {
    let spec = |a, b| EtaQuotientSpec::new(7, [(1, a), (7, b)]).expect("valid level-7 spec");
    [(1, spec(16, 8)), (13, spec(12, 12)), (49, spec(8, 16))]
}

/// `η¹⁶(z)η⁸(7z) + 13η¹²(z)η¹²(7z) + 49η⁸(z)η¹⁶(7z)` through `q^order`.
pub fn cube_bracket(order: usize) -> QSeries {
    let mut acc = QSeries::zero(order);
    for (c, spec) in bracket_terms() {
        let term = expand(&spec, order).expect("bracket terms have integral valuation");
        acc = acc.add(&term.scale(&rat(c, 1)));
    }
    acc
}

/// `Δ_{4,7}` as the cube root of [`cube_bracket`], through `q^order`.
pub fn delta_4_7_cuberoot(order: usize) -> QSeries {
    assert!(order >= 3, "the bracket starts at q^3");
    // the root of a series starting at q^3 loses two orders
    cube_bracket(order + 2)
        .cube_root(3)
        .expect("bracket has unit leading term at q^3")
}

fn delta_4_7_from(table: &CuspTable) -> QSeries {
    table.series(1).add(&table.series(2).scale(&rat(4, 1)))
}

fn delta_4_14_from(table: &CuspTable, which: Level14Form) -> QSeries {
    let c2 = table.series(2);
    let c3 = table.series(3);
    let c4 = table.series(4);
    match which {
        Level14Form::First => c4.sub(&c3),
        Level14Form::Second => c3.add(&c4).sub(&c2.scale(&rat(4, 1))),
    }
}

/// `Δ_{4,7} = C_1 + 4C_2`.
pub fn delta_4_7_eta(order: usize) -> QSeries {
    delta_4_7_from(&CuspTable::new(order))
}

pub fn delta_4_14(which: Level14Form, order: usize) -> QSeries {
    delta_4_14_from(&CuspTable::new(order), which)
}

/// All three forms expanded once at a common order.
#[derive(Debug, Clone)]
pub struct DeltaForms {
    order: usize,
    tau_4_7: QSeries,
    tau_4_7_cuberoot: QSeries,
    tau_4_14_1: QSeries,
    tau_4_14_2: QSeries,
}

impl DeltaForms {
    pub fn new(order: usize) -> Self {
        let table = CuspTable::new(order);
        DeltaForms {
            order,
            tau_4_7: delta_4_7_from(&table),
            tau_4_7_cuberoot: delta_4_7_cuberoot(order.max(3)).truncate(order),
            tau_4_14_1: delta_4_14_from(&table, Level14Form::First),
            tau_4_14_2: delta_4_14_from(&table, Level14Form::Second),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn delta_4_7(&self) -> &QSeries {
        &self.tau_4_7
    }

    pub fn delta_4_7_cuberoot(&self) -> &QSeries {
        &self.tau_4_7_cuberoot
    }

    pub fn delta_4_14(&self, which: Level14Form) -> &QSeries {
        match which {
            Level14Form::First => &self.tau_4_14_1,
            Level14Form::Second => &self.tau_4_14_2,
        }
    }

    fn at(series: &QSeries, n: u64, d: u64) -> Rational {
        if n % d == 0 {
            series.coefficient((n / d) as usize).expect("n within forms order").clone()
        } else {
            Rational::zero()
        }
    }
}

fn finish(value: Rational, what: &str, n: u64) -> Result<Natural, ConvolutionError> {
    as_natural(&value).ok_or_else(|| ConvolutionError::NonIntegralResult {
        what: what.to_string(),
        n,
        value: render(&value),
    })
}

fn nat(v: Natural) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `W₁,₁₄(n)` written with `τ_{4,7}(n)`, `τ_{4,7}(n/2)`, `τ_{4,14,1}(n)`, `τ_{4,14,2}(n)`.
pub fn w_1_14_royer(n: u64, forms: &DeltaForms) -> Result<Natural, ConvolutionError> {
    assert!(n >= 1, "convolution sums are defined for n >= 1");
    let s3 = |d| nat(sigma_scaled(3, n, d));
    let s1 = |d| nat(sigma_scaled(1, n, d));
    let n_r = rat(n as i64, 1);
    let mut value = rat(1, 600) * s3(1) + rat(1, 150) * s3(2) + rat(49, 600) * s3(7)
        + rat(49, 150) * s3(14)
        + (rat(1, 24) - &n_r * rat(1, 56)) * s1(1)
        + (rat(1, 24) - &n_r * rat(1, 4)) * s1(14);
    let taus = [
        DeltaForms::at(&forms.tau_4_7, n, 1),
        DeltaForms::at(&forms.tau_4_7, n, 2),
        DeltaForms::at(&forms.tau_4_14_1, n, 1),
        DeltaForms::at(&forms.tau_4_14_2, n, 1),
    ];
    for (&(p, q), tau) in ROYER_TAU.iter().zip(taus) {
        value += rat(p, q) * tau;
    }
    finish(value, "W(1,14) via level-14 forms", n)
}

/// `W₁,₇(n)` written with `u(n)`, the coefficients of the cube-root form.
pub fn w_1_7_lemire(n: u64, forms: &DeltaForms) -> Result<Natural, ConvolutionError> {
    assert!(n >= 1, "convolution sums are defined for n >= 1");
    let n_r = rat(n as i64, 1);
    let (p, q) = LEMIRE_TAU;
    let value = rat(1, 120) * nat(sigma_scaled(3, n, 1))
        + rat(49, 120) * nat(sigma_scaled(3, n, 7))
        + (rat(1, 24) - &n_r * rat(1, 28)) * nat(sigma_scaled(1, n, 1))
        + (rat(1, 24) - &n_r * rat(1, 4)) * nat(sigma_scaled(1, n, 7))
        + rat(p, q) * DeltaForms::at(&forms.tau_4_7_cuberoot, n, 1);
    finish(value, "W(1,7) via cube-root form", n)
}
