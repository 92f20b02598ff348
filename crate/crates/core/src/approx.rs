//! Rough approximations and the two Alexandrov topologies of a quasiorder.

use std::collections::BTreeSet;

use crate::heyting::SetLattice;
use crate::relations::{PointSet, QuasiOrder};

/// `X_R = { x | R(x) ⊆ X }`.
pub fn lower(r: &QuasiOrder, x: PointSet) -> PointSet {
    PointSet::from_points((0..r.size()).filter(|&p| r.successors(p).is_subset(x)))
}

/// `X^R = { x | R(x) ∩ X ≠ ∅ }`.
pub fn upper(r: &QuasiOrder, x: PointSet) -> PointSet {
    PointSet::from_points((0..r.size()).filter(|&p| r.successors(p).intersects(x)))
}

/// All `R`-closed sets, i.e. every `X_R`. Generated as the unions of the
/// principal neighbourhoods `R(x)`, never by scanning `2^n` subsets.
pub fn lower_topology(r: &QuasiOrder) -> SetLattice {
    SetLattice::from_parts(r.clone(), unions_of(r.rows()))
}

/// All upper approximations `X^R`, obtained by complementing the lower topology.
/// Its interior operator is the lower approximation of the converse relation.
pub fn upper_topology(r: &QuasiOrder) -> SetLattice {
    let u = r.universe();
    let elements = lower_topology(r)
        .elements()
        .iter()
        .map(|&x| u.complement(x))
        .collect();
    SetLattice::from_parts(r.converse(), elements)
}

fn unions_of(generators: &[PointSet]) -> BTreeSet<PointSet> {
    let mut family = BTreeSet::from([PointSet::EMPTY]);
    for &g in generators {
        let extended: Vec<PointSet> = family.iter().map(|&s| s | g).collect();
        family.extend(extended);
    }
    family
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    fn antichain() -> QuasiOrder {
        QuasiOrder::from_pairs(3, [(0, 1), (0, 2)]).unwrap()
    }

    fn two_classes() -> QuasiOrder {
        QuasiOrder::from_pairs(3, [(0, 1), (1, 0)]).unwrap()
    }

    #[test]
    fn lower_examples() {
        let u = PointSet::full(3);
        assert_eq!(lower(&antichain(), u), u);
        assert_eq!(lower(&antichain(), set(&[0, 1])), set(&[1]));
        assert_eq!(lower(&two_classes(), set(&[0])), PointSet::EMPTY);
    }

    #[test]
    fn upper_examples() {
        assert_eq!(upper(&antichain(), PointSet::EMPTY), PointSet::EMPTY);
        assert_eq!(upper(&antichain(), set(&[1])), set(&[0, 1]));
        assert_eq!(upper(&two_classes(), set(&[0])), set(&[0, 1]));
    }

    #[test]
    fn topology_examples() {
        let id = QuasiOrder::identity(2).unwrap();
        assert_eq!(lower_topology(&id).len(), 4);
        assert_eq!(upper_topology(&id).len(), 4);

        let t = lower_topology(&antichain());
        assert_eq!(
            t.elements(),
            &[
                set(&[]),
                set(&[1]),
                set(&[2]),
                set(&[1, 2]),
                set(&[0, 1, 2])
            ]
        );
        let up = upper_topology(&antichain());
        assert_eq!(
            up.elements(),
            &[
                set(&[]),
                set(&[0]),
                set(&[0, 1]),
                set(&[0, 2]),
                set(&[0, 1, 2])
            ]
        );

        assert_eq!(
            lower_topology(&two_classes()).elements(),
            &[set(&[]), set(&[0, 1]), set(&[2]), set(&[0, 1, 2])]
        );
    }

    #[test]
    fn topologies_match_approximation_images() {
        let r = antichain();
        let u = r.universe();
        let lowers: BTreeSet<PointSet> = u.subsets().map(|x| lower(&r, x)).collect();
        let uppers: BTreeSet<PointSet> = u.subsets().map(|x| upper(&r, x)).collect();
        assert_eq!(
            lower_topology(&r).elements(),
            lowers.into_iter().collect::<Vec<_>>()
        );
        assert_eq!(
            upper_topology(&r).elements(),
            uppers.into_iter().collect::<Vec<_>>()
        );
    }
}
