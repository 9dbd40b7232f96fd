//! The identity verification suite: every published modular identity is
//! rebuilt from its coefficient table and compared against an independent
//! computation.

use serde::Serialize;

use crate::arith::{render, Rational, SigmaTable};
use crate::convolution::{w_brute_with, w_formula, PairId};
use crate::deltaforms::{cube_bracket, DeltaForms};
use crate::eta::CuspTable;
use crate::modforms::{
    check_identity, decompose, squared_combination, sturm_bound, Basis28, CoeffVector, IdentityCheck,
};
use crate::representations::{cusp_shift_coefficients, cusp_shift_sides_with};
use crate::tables::SQUARED_COMBINATIONS;

/// The coefficient tables the suite checks. [`Catalog::published`] holds the
/// published values; tests alter a copy to confirm failures are detected.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub squared_combinations: Vec<(u64, u64, CoeffVector)>,
    pub cusp_shift: Vec<Rational>,
}

impl Catalog {
    pub fn published() -> Self {
        Catalog {
            squared_combinations: SQUARED_COMBINATIONS
                .iter()
                .map(|t| (t.a, t.b, CoeffVector::from_table(t)))
                .collect(),
            cusp_shift: cusp_shift_coefficients(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityResult {
    pub name: String,
    /// Level whose weight-4 Sturm bound certifies the identity, if any.
    pub level: Option<u64>,
    pub sturm_bound: Option<usize>,
    pub verified_order: usize,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub order: usize,
    pub identities: Vec<IdentityResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.identities.iter().all(|r| r.passed)
    }

    pub fn first_failure(&self) -> Option<&IdentityResult> {
        self.identities.iter().find(|r| !r.passed)
    }
}

fn from_check(name: String, check: &IdentityCheck, detail: String) -> IdentityResult {
    let detail = match check.first_mismatch {
        Some(n) if !detail.is_empty() => format!("{detail}; series differ at q^{n}"),
        Some(n) => format!("series differ at q^{n}"),
        None => detail,
    };
    IdentityResult {
        name,
        level: Some(check.level),
        sturm_bound: Some(check.sturm_bound),
        verified_order: check.checked_order,
        passed: check.passed(),
        detail,
    }
}

fn squared_combination_identity(
    a: u64,
    b: u64,
    claimed: &CoeffVector,
    basis: &Basis28,
    order: usize,
) -> IdentityResult {
    let name = format!("({a}L(q^{a}) - {b}L(q^{b}))^2 on the M4(G0(28)) basis");
    let target = squared_combination(a, b, order);
    let solved = decompose(&target, basis, sturm_bound(28) as usize);
    let mut detail = String::new();
    let recovered = match &solved {
        Ok(v) if v == claimed => true,
        Ok(v) => {
            let (i, (got, want)) = v
                .flat()
                .into_iter()
                .zip(claimed.flat())
                .enumerate()
                .find(|(_, (g, w))| g != w)
                .expect("vectors differ somewhere");
            detail = format!("coefficient {i} solves to {} but table has {}", render(&got), render(&want));
            false
        }
        Err(e) => {
            detail = e.to_string();
            false
        }
    };
    let rhs = claimed.reconstruct(basis);
    let check = check_identity(&target, &rhs, 28).expect("orders match");
    let mut result = from_check(name, &check, detail);
    result.passed &= recovered;
    result
}

/// Runs every identity through `q^order` (raised to each identity's Sturm bound when smaller).
pub fn run(catalog: &Catalog, order: usize) -> SuiteReport {
    let mut identities = Vec::new();
    let order28 = order.max(sturm_bound(28) as usize);
    let basis = Basis28::new(order28).expect("order at least the Sturm bound");

    for (a, b, claimed) in &catalog.squared_combinations {
        identities.push(squared_combination_identity(*a, *b, claimed, &basis, order28));
    }

    let order56 = order.max(sturm_bound(56) as usize);
    let (lhs, rhs) = cusp_shift_sides_with(&catalog.cusp_shift, order56);
    let check = check_identity(&lhs, &rhs, 56).expect("orders match");
    identities.push(from_check("C1(q^4) + 4C2(q^4) in terms of C1..C9".into(), &check, String::new()));

    let forms = DeltaForms::new(order28);
    let check = check_identity(forms.delta_4_7_cuberoot(), forms.delta_4_7(), 28).expect("orders match");
    identities.push(from_check("cube-root form equals C1 + 4C2".into(), &check, String::new()));

    let cubed = forms.delta_4_7_cuberoot().pow(3);
    let bracket = cube_bracket(order28);
    let mismatch = cubed.first_mismatch(&bracket);
    identities.push(IdentityResult {
        name: "cube of C1 + 4C2 equals the weight-12 eta bracket".into(),
        level: None,
        sturm_bound: None,
        verified_order: order28,
        passed: mismatch.is_none(),
        detail: mismatch.map(|n| format!("series differ at q^{n}")).unwrap_or_default(),
    });

    let cusp = CuspTable::new(order28);
    let sigma = SigmaTable::new(1, order28 as u64);
    for pair in PairId::CLOSED_FORMS {
        let bad = (1..=order28 as u64).find(|&n| {
            w_formula(pair, n, &cusp).ok() != Some(w_brute_with(&sigma, pair.a(), pair.b(), n))
        });
        identities.push(range_result(format!("W{pair} closed form equals direct sum"), order28, bad));
    }

    let bad = (1..=order28 as u64).find(|&n| {
        crate::deltaforms::w_1_14_royer(n, &forms).ok() != Some(w_brute_with(&sigma, 1, 14, n))
    });
    identities.push(range_result(
        "W(1,14) via level-14 eta-quotient forms equals direct sum".into(),
        order28,
        bad,
    ));
    let bad = (1..=order28 as u64).find(|&n| {
        crate::deltaforms::w_1_7_lemire(n, &forms).ok() != w_formula(PairId::new(1, 7), n, &cusp).ok()
    });
    identities.push(range_result("W(1,7) via cube-root form equals closed form".into(), order28, bad));

    SuiteReport { order, identities }
}

fn range_result(name: String, order: usize, bad: Option<u64>) -> IdentityResult {
    IdentityResult {
        name,
        level: None,
        sturm_bound: None,
        verified_order: order,
        passed: bad.is_none(),
        detail: bad.map(|n| format!("first disagreement at n = {n}")).unwrap_or_default(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn published_catalog_verifies_at_sturm_minimum() {
        let report = run(&Catalog::published(), 16);
        assert!(report.all_passed(), "{:?}", report.first_failure());
        assert!(report.identities.len() >= 8);
        let shift = &report.identities[5];
        assert_eq!(shift.sturm_bound, Some(32));
        assert_eq!(shift.verified_order, 32);
    }

    #[test]
    fn corrupted_decomposition_is_reported() {
        let mut catalog = Catalog::published();
        catalog.squared_combinations[1].2.y[4] += rat(1, 25);
        let report = run(&catalog, 20);
        let failure = report.first_failure().expect("corruption must be caught");
        assert!(failure.name.starts_with("(4L(q^4) - 7L(q^7))^2"), "{failure:?}");
        assert!(failure.detail.contains("coefficient 10"), "{}", failure.detail);
    }

    #[test]
    fn corrupted_cusp_shift_is_reported() {
        let mut catalog = Catalog::published();
        catalog.cusp_shift[6] = rat(-2, 1);
        let report = run(&catalog, 40);
        let failure = report.first_failure().expect("corruption must be caught");
        assert!(failure.name.starts_with("C1(q^4)"));
        assert!(!failure.passed);
    }
}
