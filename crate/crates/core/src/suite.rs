//! Bundled checks: everything that can be verified about one relation or one
//! algebra, as a list of reports.

use serde::Serialize;

use crate::error::Result;
use crate::heyting::SetLattice;
use crate::nelson::{
    self, check_j_conditions, check_kleene, check_nelson, representation_condition,
    strong_negation_from_g, t_table, NelsonAlgebra, PairElement, Provenance, Representation,
};
use crate::relations::{PointSet, QuasiOrder};
use crate::report::Report;
use crate::roughsets::{
    complete_sublattice_check, drs_construct, effective_carrier_formulas, effectiveness_criteria,
    equivalence_specialization, irs_characterization, irs_direct, irs_drs_bijection,
    irs_join_irreducibles, poset_effectiveness,
};

/// Seed for sampled sublattice checks.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Runs `f` and names its report `name`; an error becomes a failed report.
fn step(name: &str, f: impl FnOnce() -> Result<Report>) -> Report {
    match f() {
        Ok(mut r) => {
            r.name = name.to_string();
            r
        }
        Err(e) => {
            let mut r = Report::new(name);
            r.tick();
            r.fail("error", &[], e.to_string());
            r
        }
    }
}

/// A yes/no check as a report.
fn assertion(name: &str, holds: Result<bool>, detail: &str) -> Report {
    step(name, || {
        let mut r = Report::new(name);
        r.tick();
        if !holds? {
            r.fail(name, &[], detail);
        }
        Ok(r)
    })
}

/// Properties of T on an effective algebra: closure, fixing 0 and 1,
/// idempotence, monotonicity, fixing pairs with regular components, and
/// both rule schemata `(∼x → 0) → T(x) = 1` and `(x → 0) → ∼T(x) = 1`.
pub fn t_properties(a: &NelsonAlgebra) -> Result<Report> {
    let t = t_table(a, false)?;
    let mut r = Report::new("t-operator");
    r.tick();
    if t[a.zero()] != a.zero() || t[a.one()] != a.one() {
        r.fail("bounds", &[], "T moves 0 or 1");
    }
    let h: Option<SetLattice> = match a.provenance() {
        Provenance::Sendlewski { heyting, .. } => Some(heyting.clone()),
        Provenance::RoughSets { relation, .. } => Some(crate::approx::lower_topology(relation)),
        Provenance::Direct => None,
    };
    let full = PointSet::full(a.universe());
    for x in 0..a.len() {
        r.tick();
        if t[t[x]] != t[x] {
            r.fail("idempotence", &[x], "T(T(x)) ≠ T(x)");
        }
        let weak_strong = a.implication(a.strong_negation(x), a.zero());
        if a.implication(weak_strong, t[x]) != a.one() {
            r.fail("rule-positive", &[x], "(∼x → 0) → T(x) ≠ 1");
        }
        let weak = a.implication(x, a.zero());
        if a.implication(weak, a.strong_negation(t[x])) != a.one() {
            r.fail("rule-negative", &[x], "(x → 0) → ∼T(x) ≠ 1");
        }
        if let Some(h) = &h {
            let p = a.element(x);
            let disjoint = match a.representation() {
                Representation::Increasing => PairElement::new(p.left, full - p.right),
                _ => p,
            };
            let regular = h.double_pseudocomplement(disjoint.left)? == disjoint.left
                && h.double_pseudocomplement(disjoint.right)? == disjoint.right;
            if regular && t[x] != x {
                r.fail(
                    "regular-fixed",
                    &[x],
                    "T moves a pair with regular components",
                );
            }
        }
        for y in 0..a.len() {
            r.tick();
            if a.le(x, y) && !a.le(t[x], t[y]) {
                r.fail("monotonicity", &[x, y], "x ≤ y but T(x) ≰ T(y)");
            }
        }
    }
    Ok(r)
}

/// Checks that apply to any algebra, however it was obtained.
pub fn check_algebra(a: &NelsonAlgebra) -> Vec<Report> {
    let mut out = vec![check_kleene(a), check_nelson(a)];
    out.push(step("j-conditions", || check_j_conditions(a)));
    out.push(step("strong-negation-from-g", || {
        strong_negation_from_g(a)?;
        let mut r = Report::new("strong-negation-from-g");
        r.tick();
        Ok(r)
    }));
    if a.is_effective() {
        out.push(step("t-operator", || t_properties(a)));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub irs_size: usize,
    pub effective: bool,
    pub semi_simple: bool,
    pub reports: Vec<Report>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }
}

/// Every structural check on the rough-set algebras of `r`.
pub fn check_relation(r: &QuasiOrder, seed: u64) -> Result<RelationCheck> {
    let irs = irs_direct(r)?;
    let mut reports = Vec::new();
    reports.push(Report {
        name: "irs-kleene".into(),
        ..check_kleene(&irs)
    });
    reports.push(Report {
        name: "irs-nelson".into(),
        ..check_nelson(&irs)
    });
    reports.push(step("irs-characterization", || {
        irs_characterization(r, &irs)?;
        let mut rep = Report::new("irs-characterization");
        rep.tick();
        Ok(rep)
    }));
    let drs = drs_construct(r);
    match &drs {
        Ok(drs) => {
            let mut rep = Report::new("drs-triple-agreement");
            rep.tick();
            reports.push(rep);
            reports.push(Report {
                name: "drs-kleene".into(),
                ..check_kleene(drs)
            });
            reports.push(Report {
                name: "drs-nelson".into(),
                ..check_nelson(drs)
            });
            reports.push(step("irs-drs-isomorphism", || {
                Ok(irs_drs_bijection(&irs, drs)?.1)
            }));
        }
        Err(e) => {
            let mut rep = Report::new("drs-triple-agreement");
            rep.tick();
            rep.fail("error", &[], e.to_string());
            reports.push(rep);
        }
    }
    reports.push(step("complete-sublattice", || {
        complete_sublattice_check(&irs, seed)
    }));
    reports.push(step("join-irreducibles", || {
        irs_join_irreducibles(r, &irs)?;
        let mut rep = Report::new("join-irreducibles");
        rep.tick();
        Ok(rep)
    }));
    reports.push(step("j-conditions", || check_j_conditions(&irs)));
    reports.push(step("strong-negation-from-g", || {
        strong_negation_from_g(&irs)?;
        let mut rep = Report::new("strong-negation-from-g");
        rep.tick();
        Ok(rep)
    }));
    let cofinal = r.is_cofinal(r.closed_points());
    reports.push(assertion(
        "representation-condition",
        representation_condition(&irs).map(|c| c == cofinal),
        "representation condition disagrees with cofinality of the closed points",
    ));
    let effectiveness = effectiveness_criteria(r);
    reports.push(step("effectiveness-agreement", || {
        effectiveness.clone()?;
        let mut rep = Report::new("effectiveness-agreement");
        rep.tick();
        Ok(rep)
    }));
    let effective = effectiveness.map(|e| e.effective()).unwrap_or(false);
    if effective {
        reports.push(step("effective-carrier-formulas", || {
            effective_carrier_formulas(r)
        }));
        reports.push(step("t-operator-irs", || t_properties(&irs)));
        if let Ok(drs) = &drs {
            reports.push(step("t-operator-drs", || t_properties(drs)));
        }
    }
    if r.is_antisymmetric() {
        reports.push(assertion(
            "poset-effectiveness",
            poset_effectiveness(r),
            "a finite poset is not effective",
        ));
    }
    if r.is_symmetric() {
        reports.push(assertion(
            "equivalence-specialization",
            equivalence_specialization(r).map(|e| e.passed()),
            "equivalence properties fail",
        ));
    }
    Ok(RelationCheck {
        relation: r.to_text(),
        irs_size: irs.len(),
        effective,
        semi_simple: nelson::is_semi_simple(&irs),
        reports,
    })
}
