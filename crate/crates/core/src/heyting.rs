//! Heyting structure on finite families of sets, and congruences on them.
//!
//! A [`SetLattice`] is an Alexandrov topology: its members are exactly the
//! sets closed under some quasiorder, and the lower approximation of that
//! quasiorder is its interior operator. The relative pseudocomplement is
//! `X ⇒ Y = (−X ∪ Y)_R`, the pseudocomplement `X* = (−X)_R`.

use std::collections::BTreeSet;
use std::fmt;

use crate::approx;
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::relations::{PointSet, QuasiOrder, Universe};

type BinaryOp = fn(&SetLattice, PointSet, PointSet) -> PointSet;

#[derive(Clone, PartialEq, Eq)]
pub struct SetLattice {
    relation: QuasiOrder,
    elements: Vec<PointSet>,
}

impl fmt::Debug for SetLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elements.iter()).finish()
    }
}

impl SetLattice {
    /// `relation` supplies the interior operator; `elements` must be its closed sets.
    pub(crate) fn from_parts(relation: QuasiOrder, elements: BTreeSet<PointSet>) -> Self {
        SetLattice {
            relation,
            elements: elements.into_iter().collect(),
        }
    }

    pub fn universe(&self) -> Universe {
        self.relation.universe()
    }

    /// The quasiorder whose lower approximation is this lattice's interior.
    pub fn interior_relation(&self) -> &QuasiOrder {
        &self.relation
    }

    /// Members in ascending mask order; indices into this slice are the
    /// canonical element indices used by [`Congruence`].
    pub fn elements(&self) -> &[PointSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, x: PointSet) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    pub fn contains(&self, x: PointSet) -> bool {
        self.index_of(x).is_some()
    }

    fn require(&self, x: PointSet) -> Result<usize> {
        self.index_of(x)
            .ok_or_else(|| Error::NotInLattice(x.to_string()))
    }

    pub fn bottom(&self) -> PointSet {
        PointSet::EMPTY
    }

    pub fn top(&self) -> PointSet {
        self.universe().full()
    }

    pub fn interior(&self, x: PointSet) -> PointSet {
        approx::lower(&self.relation, x)
    }

    /// `X ⇒ Y = (−X ∪ Y)_R`.
    pub fn rpc(&self, x: PointSet, y: PointSet) -> Result<PointSet> {
        self.require(x)?;
        self.require(y)?;
        Ok(self.interior(self.universe().complement(x) | y))
    }

    /// The greatest member `Z` with `X ∩ Z ⊆ Y`, found by scanning the family.
    pub fn rpc_by_search(&self, x: PointSet, y: PointSet) -> Result<PointSet> {
        self.require(x)?;
        self.require(y)?;
        let z = self
            .elements
            .iter()
            .filter(|&&z| (x & z).is_subset(y))
            .fold(PointSet::EMPTY, |acc, &z| acc | z);
        self.require(z)
            .map_err(|_| Error::InvariantBreach(format!("union of candidates {z} not a member")))?;
        Ok(z)
    }

    /// `X* = X ⇒ ∅`.
    pub fn pseudocomplement(&self, x: PointSet) -> Result<PointSet> {
        self.rpc(x, PointSet::EMPTY)
    }

    pub fn double_pseudocomplement(&self, x: PointSet) -> Result<PointSet> {
        self.pseudocomplement(self.pseudocomplement(x)?)
    }

    pub fn dense_elements(&self) -> DenseElements {
        let dense: Vec<PointSet> = self
            .elements
            .iter()
            .copied()
            .filter(|&x| self.pseudocomplement(x).expect("member").is_empty())
            .collect();
        let meet = dense.iter().fold(self.top(), |acc, &d| acc & d);
        let least = dense.contains(&meet).then_some(meet);
        DenseElements { dense, least }
    }

    /// True iff every member has a complement inside the family.
    pub fn is_complemented(&self) -> bool {
        let u = self.universe();
        self.elements
            .iter()
            .all(|&x| self.contains(u.complement(x)))
    }

    /// The principal filter `{ X | a ⊆ X }`.
    pub fn principal_filter(&self, a: PointSet) -> Result<Vec<PointSet>> {
        self.require(a)?;
        Ok(self
            .elements
            .iter()
            .copied()
            .filter(|&x| a.is_subset(x))
            .collect())
    }

    /// The same family as an abstract lattice ordered by inclusion.
    pub fn as_finite_lattice(&self) -> FiniteLattice {
        let e = &self.elements;
        FiniteLattice::from_order(e.len(), |i, j| e[i].is_subset(e[j]))
            .expect("set families closed under union and intersection are lattices")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseElements {
    pub dense: Vec<PointSet>,
    /// `⋂ D` when it is itself dense (always the case for finite lattices).
    pub least: Option<PointSet>,
}

/// A partition of a [`SetLattice`]'s elements, stored as class ids over the
/// canonical element order. Ids are numbered by first appearance, so two
/// congruences are equal exactly when they partition the same way.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    class_of: Vec<usize>,
}

impl Congruence {
    /// Groups element indices by a key; elements with equal keys share a class.
    pub fn from_key<K: PartialEq>(len: usize, key: impl Fn(usize) -> K) -> Self {
        let keys: Vec<K> = (0..len).map(&key).collect();
        Self::from_predicate(len, |i, j| keys[i] == keys[j])
    }

    fn from_predicate(len: usize, same: impl Fn(usize, usize) -> bool) -> Self {
        let mut class_of = vec![usize::MAX; len];
        let mut reps: Vec<usize> = Vec::new();
        for (i, class) in class_of.iter_mut().enumerate() {
            match reps.iter().position(|&r| same(r, i)) {
                Some(c) => *class = c,
                None => {
                    *class = reps.len();
                    reps.push(i);
                }
            }
        }
        Congruence { class_of }
    }

    /// Builds from an arbitrary relation matrix, checking that it is an equivalence.
    pub fn from_relation(len: usize, related: impl Fn(usize, usize) -> bool) -> Result<Self> {
        for i in 0..len {
            if !related(i, i) {
                return Err(Error::NotACongruence(format!("not reflexive at {i}")));
            }
            for j in 0..len {
                if related(i, j) != related(j, i) {
                    return Err(Error::NotACongruence(format!(
                        "not symmetric at ({i}, {j})"
                    )));
                }
                for k in 0..len {
                    if related(i, j) && related(j, k) && !related(i, k) {
                        return Err(Error::NotACongruence(format!(
                            "not transitive at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(Self::from_predicate(len, related))
    }

    pub fn from_class_ids(class_of: Vec<usize>) -> Self {
        // renumber by first appearance
        Self::from_key(class_of.len(), |i| class_of[i])
    }

    pub fn identity(len: usize) -> Self {
        Congruence {
            class_of: (0..len).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class_of
    }

    pub fn same(&self, i: usize, j: usize) -> bool {
        self.class_of[i] == self.class_of[j]
    }

    pub fn num_classes(&self) -> usize {
        self.class_of.iter().max().map_or(0, |m| m + 1)
    }

    /// Classes as sorted index lists, in class-id order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (i, &c) in self.class_of.iter().enumerate() {
            out[c].push(i);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.num_classes() == self.len()
    }

    fn check_len(&self, l: &SetLattice) -> Result<()> {
        if self.len() != l.len() {
            return Err(Error::NotACongruence(format!(
                "{} class entries for a lattice of {} elements",
                self.len(),
                l.len()
            )));
        }
        Ok(())
    }

    /// Exhaustively checks compatibility with `∪`, `∩` and `⇒`.
    pub fn check_compatible(&self, l: &SetLattice) -> Result<()> {
        self.check_len(l)?;
        let e = l.elements();
        let idx = |x: PointSet| l.index_of(x).expect("closed family");
        for a in 0..e.len() {
            for b in 0..e.len() {
                if !self.same(a, b) {
                    continue;
                }
                for c in 0..e.len() {
                    let ops: [(&str, BinaryOp); 3] = [
                        ("join", |_, x, y| x | y),
                        ("meet", |_, x, y| x & y),
                        ("rpc", |l, x, y| l.rpc(x, y).expect("members")),
                    ];
                    for (name, op) in ops {
                        let left = (idx(op(l, e[a], e[c])), idx(op(l, e[b], e[c])));
                        let right = (idx(op(l, e[c], e[a])), idx(op(l, e[c], e[b])));
                        if !self.same(left.0, left.1) || !self.same(right.0, right.1) {
                            return Err(Error::NotACongruence(format!(
                                "{name} separates {} ~ {} when combined with {}",
                                e[a], e[b], e[c]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// A class with no complement in the quotient, if any.
    pub fn boolean_witness(&self, l: &SetLattice) -> Result<Option<usize>> {
        self.check_len(l)?;
        let e = l.elements();
        let idx = |x: PointSet| l.index_of(x).expect("closed family");
        let bottom = self.class_of(idx(l.bottom()));
        let top = self.class_of(idx(l.top()));
        for (c, members) in self.classes().iter().enumerate() {
            let x = e[members[0]];
            let has_complement = e
                .iter()
                .any(|&y| self.class_of(idx(x | y)) == top && self.class_of(idx(x & y)) == bottom);
            if !has_complement {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }

    /// True iff the quotient is complemented, decided by searching for complements.
    pub fn is_boolean(&self, l: &SetLattice) -> Result<bool> {
        Ok(self.boolean_witness(l)?.is_none())
    }

    /// Classes rendered as sets of sets, for reports.
    pub fn describe(&self, l: &SetLattice) -> Vec<Vec<PointSet>> {
        self.classes()
            .into_iter()
            .map(|c| c.into_iter().map(|i| l.elements()[i]).collect())
            .collect()
    }
}

/// `θ(F)` together with its Boolean-ness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterCongruence {
    pub congruence: Congruence,
    pub boolean: bool,
}

/// `θ(F) = {(x, y) | x ∩ z = y ∩ z for some z ∈ F}`.
pub fn theta_filter(l: &SetLattice, filter: &[PointSet]) -> Result<FilterCongruence> {
    check_filter(l, filter)?;
    let e = l.elements();
    let congruence =
        Congruence::from_relation(e.len(), |i, j| filter.iter().any(|&z| e[i] & z == e[j] & z))?;
    let boolean = congruence.is_boolean(l)?;
    Ok(FilterCongruence {
        congruence,
        boolean,
    })
}

fn check_filter(l: &SetLattice, filter: &[PointSet]) -> Result<()> {
    if filter.is_empty() {
        return Err(Error::NotAFilter("empty".into()));
    }
    for &x in filter {
        if !l.contains(x) {
            return Err(Error::NotAFilter(format!("{x} is not a lattice element")));
        }
        for &y in filter {
            if !filter.contains(&(x & y)) {
                return Err(Error::NotAFilter(format!("{x} ∩ {y} missing")));
            }
        }
        for &y in l.elements() {
            if x.is_subset(y) && !filter.contains(&y) {
                return Err(Error::NotAFilter(format!("{y} above {x} missing")));
            }
        }
    }
    Ok(())
}

/// `≅_a`: identifies elements with the same trace on `a`. Requires `a` below
/// every dense element, which makes the congruence Boolean.
pub fn cong_a(l: &SetLattice, a: PointSet) -> Result<Congruence> {
    l.require(a)?;
    if let Some(d) = l
        .dense_elements()
        .dense
        .into_iter()
        .find(|&d| !a.is_subset(d))
    {
        return Err(Error::NotBelowDense(format!("{a} (not inside dense {d})")));
    }
    let e = l.elements();
    Ok(Congruence::from_key(e.len(), |i| e[i] & a))
}

/// The Glivenko congruence: elements with equal pseudocomplements.
///
/// Cross-checked against `θ(D)` for the filter of dense elements.
pub fn glivenko(l: &SetLattice) -> Result<Congruence> {
    let e = l.elements();
    let pc: Vec<PointSet> = e
        .iter()
        .map(|&x| l.pseudocomplement(x))
        .collect::<Result<_>>()?;
    let gamma = Congruence::from_key(e.len(), |i| pc[i]);
    let via_filter = theta_filter(l, &l.dense_elements().dense)?;
    if via_filter.congruence != gamma {
        return Err(Error::InvariantBreach(
            "pseudocomplement fibres differ from θ(D)".into(),
        ));
    }
    Ok(gamma)
}

/// Completely join-irreducible members, by lower-cover count.
pub fn join_irreducibles(l: &SetLattice) -> Vec<PointSet> {
    l.as_finite_lattice()
        .join_irreducibles()
        .into_iter()
        .map(|i| l.elements()[i])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::lower_topology;

    fn set(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    fn antichain_topology() -> SetLattice {
        lower_topology(&QuasiOrder::from_pairs(3, [(0, 1), (0, 2)]).unwrap())
    }

    fn two_classes_topology() -> SetLattice {
        lower_topology(&QuasiOrder::from_pairs(3, [(0, 1), (1, 0)]).unwrap())
    }

    fn classes(c: &Congruence, l: &SetLattice) -> Vec<Vec<PointSet>> {
        let mut out = c.describe(l);
        out.sort();
        out
    }

    #[test]
    fn rpc_examples() {
        let l = antichain_topology();
        let u = l.top();
        assert_eq!(l.rpc(set(&[1]), set(&[1])).unwrap(), u);
        assert_eq!(l.rpc(set(&[1]), set(&[])).unwrap(), set(&[2]));
        assert_eq!(l.rpc(u, set(&[1, 2])).unwrap(), set(&[1, 2]));
        assert!(matches!(l.rpc(set(&[0]), u), Err(Error::NotInLattice(_))));
    }

    #[test]
    fn rpc_agrees_with_search() {
        let l = antichain_topology();
        for &x in l.elements() {
            for &y in l.elements() {
                assert_eq!(l.rpc(x, y).unwrap(), l.rpc_by_search(x, y).unwrap());
            }
        }
    }

    #[test]
    fn pseudocomplement_examples() {
        let l = antichain_topology();
        assert_eq!(l.pseudocomplement(PointSet::EMPTY).unwrap(), l.top());
        assert_eq!(l.pseudocomplement(set(&[1, 2])).unwrap(), PointSet::EMPTY);
        assert_eq!(l.pseudocomplement(set(&[1])).unwrap(), set(&[2]));
    }

    #[test]
    fn dense_examples() {
        let id = lower_topology(&QuasiOrder::identity(3).unwrap());
        assert_eq!(id.dense_elements().dense, vec![id.top()]);

        let l = antichain_topology();
        let d = l.dense_elements();
        assert_eq!(d.dense, vec![set(&[1, 2]), l.top()]);
        assert_eq!(d.least, Some(set(&[1, 2])));

        let e = two_classes_topology();
        assert_eq!(e.dense_elements().dense, vec![e.top()]);
    }

    #[test]
    fn theta_filter_examples() {
        let l = antichain_topology();
        let top_only = theta_filter(&l, &[l.top()]).unwrap();
        assert!(top_only.congruence.is_identity());
        assert!(!top_only.boolean);

        let f = l.principal_filter(set(&[1, 2])).unwrap();
        let th = theta_filter(&l, &f).unwrap();
        assert!(th.boolean);
        assert_eq!(
            classes(&th.congruence, &l),
            vec![
                vec![set(&[])],
                vec![set(&[1])],
                vec![set(&[2])],
                vec![set(&[1, 2]), l.top()],
            ]
        );
        assert!(matches!(
            theta_filter(&l, &[set(&[1])]),
            Err(Error::NotAFilter(_))
        ));
        assert!(matches!(theta_filter(&l, &[]), Err(Error::NotAFilter(_))));
    }

    #[test]
    fn cong_a_examples() {
        let l = antichain_topology();
        let s = set(&[1, 2]);
        let c = cong_a(&l, s).unwrap();
        let f = theta_filter(&l, &l.principal_filter(s).unwrap()).unwrap();
        assert_eq!(c, f.congruence);
        c.check_compatible(&l).unwrap();
        assert!(c.is_boolean(&l).unwrap());

        let e = two_classes_topology();
        let c = cong_a(&e, set(&[2])).unwrap();
        assert_eq!(
            classes(&c, &e),
            vec![vec![set(&[]), set(&[0, 1])], vec![set(&[2]), e.top()]]
        );
    }

    #[test]
    fn cong_a_rejects_element_above_least_dense() {
        let l = antichain_topology();
        // dense elements are {1,2} and U; U is not below {1,2}
        assert!(matches!(cong_a(&l, l.top()), Err(Error::NotBelowDense(_))));
        let chain = lower_topology(&QuasiOrder::from_pairs(2, [(0, 1)]).unwrap());
        assert!(matches!(
            cong_a(&chain, chain.top()),
            Err(Error::NotBelowDense(_))
        ));
    }

    #[test]
    fn glivenko_examples() {
        let id = lower_topology(&QuasiOrder::identity(3).unwrap());
        assert!(glivenko(&id).unwrap().is_identity());

        let l = antichain_topology();
        let g = glivenko(&l).unwrap();
        assert_eq!(g, cong_a(&l, set(&[1, 2])).unwrap());

        let chain = lower_topology(&QuasiOrder::from_pairs(2, [(0, 1)]).unwrap());
        assert_eq!(
            classes(&glivenko(&chain).unwrap(), &chain),
            vec![vec![set(&[])], vec![set(&[1]), chain.top()]]
        );
    }

    #[test]
    fn join_irreducibles_of_topologies() {
        let id = lower_topology(&QuasiOrder::identity(2).unwrap());
        assert_eq!(join_irreducibles(&id), vec![set(&[0]), set(&[1])]);
        let chain = lower_topology(&QuasiOrder::from_pairs(2, [(0, 1)]).unwrap());
        assert_eq!(join_irreducibles(&chain), vec![set(&[1]), chain.top()]);
    }
}
