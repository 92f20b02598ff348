//! Deliberately broken algebras. Each one must be rejected by a specific
//! checker with a concrete witness.

use crate::error::Result;
use crate::nelson::{NelsonAlgebra, PairElement, Provenance};
use crate::relations::{PointSet, QuasiOrder};
use crate::roughsets::irs_direct;

/// Fixture names paired with the law their checker must report.
pub const FIXTURES: &[(&str, &str)] = &[
    ("chain-fixed-negation", "K2"),
    ("chain-material-implication", "N1"),
    ("crown-kleene", "J4"),
    ("corrupted-implication", "N1"),
];

fn three_chain() -> NelsonAlgebra {
    let full = QuasiOrder::full(2).expect("n = 2");
    let mut a = irs_direct(&full).expect("rough-set algebra");
    a.set_provenance(Provenance::Direct);
    a
}

/// The 3-element chain with `∼` fixing every element.
pub fn chain_fixed_negation() -> NelsonAlgebra {
    let mut a = three_chain();
    let (_, _, _, strong, _) = a.tables_mut();
    for (i, s) in strong.iter_mut().enumerate() {
        *s = i;
    }
    a
}

/// The 3-element chain with `a → b := ∼a ∨ b`.
pub fn chain_material_implication() -> NelsonAlgebra {
    let mut a = three_chain();
    let m = a.len();
    let zero = a.zero();
    let join = a.join_table().clone();
    let strong = a.strong_negation_table().to_vec();
    let (_, _, imp, _, weak) = a.tables_mut();
    for (x, &sx) in strong.iter().enumerate() {
        for y in 0..m {
            imp.set(x, y, join.get(sx, y));
        }
    }
    for (x, w) in weak.iter_mut().enumerate() {
        *w = imp.get(x, zero);
    }
    a
}

/// Down-sets of the crown `x, y < a, b` with `g` swapping `x ↔ a` and
/// `y ↔ b`. J1–J3 hold but `x, y` have no interpolant below `a` and `b`.
/// Elements are down-sets as bit masks over `x = 0, y = 1, a = 2, b = 3`.
pub fn crown_kleene() -> NelsonAlgebra {
    let below: [u64; 4] = [0b0001, 0b0010, 0b0111, 0b1011];
    let g = [2usize, 3, 0, 1];
    let masks: Vec<u64> = (0u64..16)
        .filter(|&s| (0..4).all(|j| s >> j & 1 == 0 || below[j] & !s == 0))
        .collect();
    let carrier: Vec<PairElement> = masks
        .iter()
        .map(|&s| PairElement::new(PointSet(s), PointSet::EMPTY))
        .collect();
    let strong: Vec<usize> = masks
        .iter()
        .map(|&s| {
            let image = (0..4)
                .filter(|&j| s >> g[j] & 1 == 0)
                .fold(0u64, |acc, j| acc | 1 << j);
            masks.iter().position(|&t| t == image).expect("down-set")
        })
        .collect();
    NelsonAlgebra::from_order_and_involution(
        4,
        carrier,
        |i, j| masks[i] & !masks[j] == 0,
        strong,
        Provenance::Direct,
    )
    .expect("crown down-sets form a lattice")
}

/// The antichain-poset IRS algebra with one implication cell overwritten:
/// `({1},{0,1}) → ({1},{0,1})` is set to `({1},{0,1})` instead of 1.
pub fn corrupted_implication() -> NelsonAlgebra {
    let r = QuasiOrder::from_pairs(3, [(0, 1), (0, 2)]).expect("poset");
    let mut a = irs_direct(&r).expect("rough-set algebra");
    a.set_provenance(Provenance::Direct);
    let x = a
        .index_of(PairElement::new(
            PointSet::singleton(1),
            PointSet::from_points([0, 1]),
        ))
        .expect("in carrier");
    let (_, _, imp, _, _) = a.tables_mut();
    imp.set(x, x, x);
    a
}

pub fn by_name(name: &str) -> Result<NelsonAlgebra> {
    match name {
        "chain-fixed-negation" => Ok(chain_fixed_negation()),
        "chain-material-implication" => Ok(chain_material_implication()),
        "crown-kleene" => Ok(crown_kleene()),
        "corrupted-implication" => Ok(corrupted_implication()),
        other => Err(crate::Error::Precondition(format!(
            "unknown fixture `{other}`"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nelson::{check_j_conditions, check_kleene, check_nelson};

    #[test]
    fn fixed_negation_breaks_k2_only() {
        let a = chain_fixed_negation();
        let r = check_kleene(&a);
        assert_eq!(r.violations_of("K1").count(), 0);
        let w = r.violations_of("K2").next().expect("K2 witness");
        assert_eq!(w.witness.len(), 2);
    }

    #[test]
    fn material_implication_breaks_n1() {
        let a = chain_material_implication();
        assert!(check_kleene(&a).passed());
        let r = check_nelson(&a);
        assert!(r.violations_of("N1").count() > 0);
        assert_eq!(r.violations_of("weak-negation").count(), 0);
    }

    #[test]
    fn crown_breaks_j4_only() {
        let a = crown_kleene();
        assert_eq!(a.len(), 7);
        assert!(check_kleene(&a).passed());
        let r = check_j_conditions(&a).unwrap();
        for law in ["J1", "J2", "J3"] {
            assert_eq!(r.violations_of(law).count(), 0, "{law}");
        }
        let w = r.violations_of("J4").next().expect("J4 witness");
        let labels: Vec<u64> = w
            .witness
            .iter()
            .map(|&i| a.element(i).left.bits())
            .collect();
        assert!(labels == [0b0001, 0b0010] || labels == [0b0010, 0b0001]);
    }

    #[test]
    fn corrupted_cell_breaks_n1() {
        let a = corrupted_implication();
        assert!(check_kleene(&a).passed());
        assert!(check_nelson(&a).violations_of("N1").count() > 0);
    }
}
