//! Finite Nelson algebras of pairs.
//!
//! Every algebra carries materialized operation tables over a canonically
//! sorted carrier, so the law checkers are plain table scans and exports are
//! byte-for-byte reproducible. The order is read off the meet table
//! (`a ≤ b` iff `a ∧ b = a`), never from the pair components.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::approx;
use crate::error::{Error, Result};
use crate::heyting::{glivenko, Congruence, SetLattice};
use crate::lattice::FiniteLattice;
use crate::relations::{PointSet, QuasiOrder, Universe};
use crate::report::Report;

/// One rough set, or more generally one element of a pair algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairElement {
    pub left: PointSet,
    pub right: PointSet,
}

impl PairElement {
    pub fn new(left: PointSet, right: PointSet) -> Self {
        PairElement { left, right }
    }
}

impl fmt::Debug for PairElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

impl fmt::Display for PairElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

/// How the two components of a [`PairElement`] are to be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    /// `(X_R, X^R)`: left ⊆ right.
    Increasing,
    /// `(X_R, −X^R)`: left ∩ right = ∅.
    Disjoint,
    /// Labels only; components carry no set-theoretic meaning.
    Abstract,
}

/// Where an algebra came from. T needs the underlying Heyting algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Direct,
    Sendlewski {
        heyting: SetLattice,
        congruence: Congruence,
        /// The congruence is the Glivenko congruence of `heyting`.
        glivenko: bool,
    },
    RoughSets {
        relation: QuasiOrder,
        /// `≅_S` coincides with the Glivenko congruence of `T_R(U)`.
        effective: bool,
    },
}

/// A square operation table over carrier indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    size: usize,
    cells: Vec<usize>,
}

impl Table {
    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut cells = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                cells.push(f(i, j));
            }
        }
        Table { size, cells }
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::MalformedAlgebra("table is not square".into()));
        }
        Ok(Table {
            size,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: usize) {
        self.cells[i * self.size + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.size.max(1))
            .map(<[usize]>::to_vec)
            .collect()
    }
}

/// Raw material for [`NelsonAlgebra::from_tables`].
#[derive(Debug, Clone)]
pub struct AlgebraParts {
    pub universe: usize,
    pub representation: Representation,
    pub carrier: Vec<PairElement>,
    pub join: Table,
    pub meet: Table,
    pub implication: Table,
    pub strong_negation: Vec<usize>,
    pub weak_negation: Vec<usize>,
    pub zero: usize,
    pub one: usize,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NelsonAlgebra {
    universe: usize,
    representation: Representation,
    carrier: Vec<PairElement>,
    join: Table,
    meet: Table,
    implication: Table,
    strong_negation: Vec<usize>,
    weak_negation: Vec<usize>,
    zero: usize,
    one: usize,
    provenance: Provenance,
}

impl NelsonAlgebra {
    /// Assembles an algebra from explicit tables. Only shape is validated
    /// (sorted distinct carrier, in-range indices); the laws are the business
    /// of [`check_kleene`] and [`check_nelson`].
    pub fn from_tables(parts: AlgebraParts) -> Result<Self> {
        let m = parts.carrier.len();
        if m == 0 {
            return Err(Error::MalformedAlgebra("empty carrier".into()));
        }
        if parts.carrier.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedAlgebra(
                "carrier must be strictly ascending by (left, right)".into(),
            ));
        }
        let shape_ok = |p: &PairElement| match parts.representation {
            Representation::Increasing => p.left.is_subset(p.right),
            Representation::Disjoint => !p.left.intersects(p.right),
            Representation::Abstract => true,
        };
        if let Some(p) = parts.carrier.iter().find(|p| !shape_ok(p)) {
            return Err(Error::MalformedAlgebra(format!(
                "{p} violates the {:?} representation",
                parts.representation
            )));
        }
        for (name, t) in [
            ("join", &parts.join),
            ("meet", &parts.meet),
            ("implication", &parts.implication),
        ] {
            if t.size != m || t.cells.iter().any(|&c| c >= m) {
                return Err(Error::MalformedAlgebra(format!(
                    "{name} table shape or range"
                )));
            }
        }
        for (name, v) in [
            ("strong_negation", &parts.strong_negation),
            ("weak_negation", &parts.weak_negation),
        ] {
            if v.len() != m || v.iter().any(|&c| c >= m) {
                return Err(Error::MalformedAlgebra(format!(
                    "{name} table shape or range"
                )));
            }
        }
        if parts.zero >= m || parts.one >= m {
            return Err(Error::MalformedAlgebra("constant out of range".into()));
        }
        Ok(NelsonAlgebra {
            universe: parts.universe,
            representation: parts.representation,
            carrier: parts.carrier,
            join: parts.join,
            meet: parts.meet,
            implication: parts.implication,
            strong_negation: parts.strong_negation,
            weak_negation: parts.weak_negation,
            zero: parts.zero,
            one: parts.one,
            provenance: parts.provenance,
        })
    }

    /// Tabulates element-level operations over `carrier` (sorted here). Fails
    /// if an operation leaves the carrier. `¬a` is tabulated as `a → 0`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_operations(
        universe: usize,
        representation: Representation,
        mut carrier: Vec<PairElement>,
        zero: PairElement,
        one: PairElement,
        provenance: Provenance,
        join: impl Fn(PairElement, PairElement) -> PairElement,
        meet: impl Fn(PairElement, PairElement) -> PairElement,
        implication: impl Fn(PairElement, PairElement) -> PairElement,
        strong_negation: impl Fn(PairElement) -> PairElement,
    ) -> Result<Self> {
        carrier.sort_unstable();
        carrier.dedup();
        let find = |p: PairElement, op: &str| -> Result<usize> {
            carrier
                .binary_search(&p)
                .map_err(|_| Error::InvariantBreach(format!("{op} yields {p} outside the carrier")))
        };
        let m = carrier.len();
        let mut tables = Vec::new();
        for (name, op) in [
            (
                "join",
                &join as &dyn Fn(PairElement, PairElement) -> PairElement,
            ),
            ("meet", &meet),
            ("implication", &implication),
        ] {
            let mut cells = Vec::with_capacity(m * m);
            for &a in &carrier {
                for &b in &carrier {
                    cells.push(find(op(a, b), name)?);
                }
            }
            tables.push(Table { size: m, cells });
        }
        let strong = carrier
            .iter()
            .map(|&a| find(strong_negation(a), "strong negation"))
            .collect::<Result<Vec<_>>>()?;
        let zero = find(zero, "zero")?;
        let one = find(one, "one")?;
        let implication_table = tables.pop().expect("three tables");
        let meet_table = tables.pop().expect("three tables");
        let join_table = tables.pop().expect("three tables");
        let weak = (0..m).map(|a| implication_table.get(a, zero)).collect();
        Self::from_tables(AlgebraParts {
            universe,
            representation,
            carrier,
            join: join_table,
            meet: meet_table,
            implication: implication_table,
            strong_negation: strong,
            weak_negation: weak,
            zero,
            one,
            provenance,
        })
    }

    /// Builds a Kleene-style algebra from a lattice order and an involution,
    /// with `a → b := a ⇒ (∼a ∨ b)` found by definitional search. The result
    /// is a Nelson algebra only when the interpolation property holds; the
    /// checkers decide.
    pub fn from_order_and_involution(
        universe: usize,
        carrier: Vec<PairElement>,
        le: impl Fn(usize, usize) -> bool,
        strong_negation: Vec<usize>,
        provenance: Provenance,
    ) -> Result<Self> {
        let m = carrier.len();
        if carrier.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedAlgebra(
                "carrier must be strictly ascending by (left, right)".into(),
            ));
        }
        let lattice = FiniteLattice::from_order(m, le)?;
        let join = Table::from_fn(m, |i, j| lattice.join(i, j));
        let meet = Table::from_fn(m, |i, j| lattice.meet(i, j));
        let mut implication = Table::from_fn(m, |_, _| 0);
        for (a, &na) in strong_negation.iter().enumerate() {
            for b in 0..m {
                let target = lattice.join(na, b);
                let r = lattice.rpc(a, target).ok_or_else(|| {
                    Error::MalformedAlgebra(format!("no relative pseudocomplement for ({a}, {b})"))
                })?;
                implication.set(a, b, r);
            }
        }
        let zero = lattice.bottom();
        let weak_negation = (0..m).map(|a| implication.get(a, zero)).collect();
        Self::from_tables(AlgebraParts {
            universe,
            representation: Representation::Abstract,
            carrier,
            join,
            meet,
            implication,
            strong_negation,
            weak_negation,
            zero,
            one: lattice.top(),
            provenance,
        })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn representation(&self) -> Representation {
        self.representation
    }

    pub fn carrier(&self) -> &[PairElement] {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn element(&self, i: usize) -> PairElement {
        self.carrier[i]
    }

    pub fn index_of(&self, p: PairElement) -> Option<usize> {
        self.carrier.binary_search(&p).ok()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join.get(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet.get(a, b)
    }

    pub fn implication(&self, a: usize, b: usize) -> usize {
        self.implication.get(a, b)
    }

    pub fn strong_negation(&self, a: usize) -> usize {
        self.strong_negation[a]
    }

    pub fn weak_negation(&self, a: usize) -> usize {
        self.weak_negation[a]
    }

    pub fn join_table(&self) -> &Table {
        &self.join
    }

    pub fn meet_table(&self) -> &Table {
        &self.meet
    }

    pub fn implication_table(&self) -> &Table {
        &self.implication
    }

    pub fn strong_negation_table(&self) -> &[usize] {
        &self.strong_negation
    }

    pub fn weak_negation_table(&self) -> &[usize] {
        &self.weak_negation
    }

    /// `a ≤ b` iff `a ∧ b = a`.
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == a
    }

    /// The lattice order as a [`FiniteLattice`]; fails if the meet table does
    /// not induce a lattice order.
    pub fn order(&self) -> Result<FiniteLattice> {
        FiniteLattice::from_order(self.len(), |a, b| self.le(a, b))
    }

    /// True when the provenance licenses T.
    pub fn is_effective(&self) -> bool {
        match &self.provenance {
            Provenance::Sendlewski { glivenko, .. } => *glivenko,
            Provenance::RoughSets { effective, .. } => *effective,
            Provenance::Direct => false,
        }
    }

    /// Mutable access for building deliberately broken fixtures.
    pub(crate) fn tables_mut(
        &mut self,
    ) -> (
        &mut Table,
        &mut Table,
        &mut Table,
        &mut Vec<usize>,
        &mut Vec<usize>,
    ) {
        (
            &mut self.join,
            &mut self.meet,
            &mut self.implication,
            &mut self.strong_negation,
            &mut self.weak_negation,
        )
    }

    pub(crate) fn set_provenance(&mut self, provenance: Provenance) {
        self.provenance = provenance;
    }
}

/// `N_Θ(H) = {(a, b) | a ∩ b = ∅ and (a ∪ b) Θ U}` with the pair operations
/// `∨ = (a∪c, b∩d)`, `∧ = (a∩c, b∪d)`, `→ = (a⇒c, a∩d)`, `∼(a,b) = (b,a)`.
/// Result is in disjoint representation with `0 = (∅, U)` and `1 = (U, ∅)`.
pub fn sendlewski(h: &SetLattice, theta: &Congruence) -> Result<NelsonAlgebra> {
    theta.check_compatible(h)?;
    if let Some(c) = theta.boolean_witness(h)? {
        return Err(Error::NotBoolean(c));
    }
    let u = h.universe();
    let e = h.elements();
    let idx = |x: PointSet| h.index_of(x).expect("closed family");
    let top_class = theta.class_of(idx(u.full()));
    let mut carrier = Vec::new();
    for &a in e {
        for &b in e {
            if !a.intersects(b) && theta.class_of(idx(a | b)) == top_class {
                carrier.push(PairElement::new(a, b));
            }
        }
    }
    let is_glivenko = glivenko(h)? == *theta;
    let rpc = |x, y| h.rpc(x, y).expect("members");
    NelsonAlgebra::from_operations(
        u.size(),
        Representation::Disjoint,
        carrier,
        PairElement::new(PointSet::EMPTY, u.full()),
        PairElement::new(u.full(), PointSet::EMPTY),
        Provenance::Sendlewski {
            heyting: h.clone(),
            congruence: theta.clone(),
            glivenko: is_glivenko,
        },
        |x, y| PairElement::new(x.left | y.left, x.right & y.right),
        |x, y| PairElement::new(x.left & y.left, x.right | y.right),
        |x, y| PairElement::new(rpc(x.left, y.left), x.left & y.right),
        |x| PairElement::new(x.right, x.left),
    )
}

/// Bounded distributive lattice laws plus K1–K3, every instance.
pub fn check_kleene(a: &NelsonAlgebra) -> Report {
    let mut r = Report::new("kleene");
    let m = a.len();
    let (zero, one) = (a.zero(), a.one());
    for x in 0..m {
        r.tick();
        if a.join(x, x) != x || a.meet(x, x) != x {
            r.fail("idempotence", &[x], "x ∨ x or x ∧ x differs from x");
        }
        if a.meet(zero, x) != zero || a.join(zero, x) != x {
            r.fail("bounds", &[x], "0 is not the least element");
        }
        if a.meet(one, x) != x || a.join(one, x) != one {
            r.fail("bounds", &[x], "1 is not the greatest element");
        }
        let nn = a.strong_negation(a.strong_negation(x));
        if nn != x {
            r.fail("K1", &[x], format!("∼∼x = {nn}"));
        }
        for y in 0..m {
            r.tick();
            if a.join(x, y) != a.join(y, x) {
                r.fail("join-commutativity", &[x, y], "x ∨ y ≠ y ∨ x");
            }
            if a.meet(x, y) != a.meet(y, x) {
                r.fail("meet-commutativity", &[x, y], "x ∧ y ≠ y ∧ x");
            }
            if a.join(x, a.meet(x, y)) != x || a.meet(x, a.join(x, y)) != x {
                r.fail("absorption", &[x, y], "absorption fails");
            }
            let (nx, ny) = (a.strong_negation(x), a.strong_negation(y));
            if a.le(x, y) != a.le(ny, nx) {
                r.fail("K2", &[x, y], "x ≤ y and ∼y ≤ ∼x disagree");
            }
            if !a.le(a.meet(x, nx), a.join(y, ny)) {
                r.fail("K3", &[x, y], "x ∧ ∼x ≰ y ∨ ∼y");
            }
            for z in 0..m {
                r.tick();
                if a.join(a.join(x, y), z) != a.join(x, a.join(y, z)) {
                    r.fail("join-associativity", &[x, y, z], "");
                }
                if a.meet(a.meet(x, y), z) != a.meet(x, a.meet(y, z)) {
                    r.fail("meet-associativity", &[x, y, z], "");
                }
                if a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z)) {
                    r.fail(
                        "distributivity",
                        &[x, y, z],
                        "x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)",
                    );
                }
            }
        }
    }
    r
}

/// N1 and N2 over all triples, and `¬a = a → 0` against the stored table.
pub fn check_nelson(a: &NelsonAlgebra) -> Report {
    let mut r = Report::new("nelson");
    let m = a.len();
    for x in 0..m {
        r.tick();
        if a.weak_negation(x) != a.implication(x, a.zero()) {
            r.fail("weak-negation", &[x], "¬x differs from x → 0");
        }
        for y in 0..m {
            let bound = a.join(a.strong_negation(x), y);
            let imp = a.implication(x, y);
            for z in 0..m {
                r.tick();
                if a.le(a.meet(x, z), bound) != a.le(z, imp) {
                    r.fail(
                        "N1",
                        &[x, y, z],
                        "a ∧ c ≤ ∼a ∨ b and c ≤ a → b disagree (witness a, b, c)",
                    );
                }
                let lhs = a.implication(a.meet(x, y), z);
                let rhs = a.implication(x, a.implication(y, z));
                if lhs != rhs {
                    r.fail(
                        "N2",
                        &[x, y, z],
                        format!("(a∧b)→c = {lhs}, a→(b→c) = {rhs}"),
                    );
                }
            }
        }
    }
    r
}

/// An element `a` with `a ∨ ¬a ≠ 1`, if any.
pub fn semi_simple_witness(a: &NelsonAlgebra) -> Option<usize> {
    (0..a.len()).find(|&x| a.join(x, a.weak_negation(x)) != a.one())
}

pub fn is_semi_simple(a: &NelsonAlgebra) -> bool {
    semi_simple_witness(a).is_none()
}

/// The Heyting algebra over which the disjoint form of `a` lives, if known.
fn underlying_heyting(a: &NelsonAlgebra) -> Option<SetLattice> {
    match a.provenance() {
        Provenance::Sendlewski { heyting, .. } => Some(heyting.clone()),
        Provenance::RoughSets { relation, .. } => Some(approx::lower_topology(relation)),
        Provenance::Direct => None,
    }
}

/// `T((a, b)) = (a**, b**)` for every carrier element, as an index table.
///
/// Only effective lattices qualify unless `force` is set. In increasing
/// representation the pair is moved to disjoint form and back. A result
/// outside the carrier is reported as [`Error::TOutsideCarrier`].
pub fn t_table(a: &NelsonAlgebra, force: bool) -> Result<Vec<usize>> {
    if !a.is_effective() && !force {
        return Err(Error::NotEffective);
    }
    if a.representation() == Representation::Abstract {
        return Err(Error::Precondition("T needs a pair representation".into()));
    }
    let h = underlying_heyting(a)
        .ok_or_else(|| Error::Precondition("T needs an underlying Heyting algebra".into()))?;
    let u: Universe = h.universe();
    let increasing = a.representation() == Representation::Increasing;
    a.carrier()
        .iter()
        .map(|&p| {
            let (left, right) = if increasing {
                (p.left, u.complement(p.right))
            } else {
                (p.left, p.right)
            };
            let l = h.double_pseudocomplement(left)?;
            let r = h.double_pseudocomplement(right)?;
            let image = if increasing {
                PairElement::new(l, u.complement(r))
            } else {
                PairElement::new(l, r)
            };
            a.index_of(image).ok_or_else(|| {
                Error::TOutsideCarrier(format!("T{p} = {image} is not in the carrier"))
            })
        })
        .collect()
}

/// T applied to one element.
pub fn t_operator(a: &NelsonAlgebra, x: PairElement, force: bool) -> Result<PairElement> {
    let i = a
        .index_of(x)
        .ok_or_else(|| Error::Precondition(format!("{x} is not in the carrier")))?;
    Ok(a.element(t_table(a, force)?[i]))
}

/// Elements whose lattice pseudocomplement is 0, and the least of them.
pub fn dense_elements(a: &NelsonAlgebra) -> Result<(Vec<usize>, Option<usize>)> {
    let lattice = a.order()?;
    let bottom = lattice.bottom();
    let mut dense = Vec::new();
    for x in 0..a.len() {
        let star = lattice
            .rpc(x, bottom)
            .ok_or_else(|| Error::MalformedAlgebra(format!("no pseudocomplement for {x}")))?;
        if star == bottom {
            dense.push(x);
        }
    }
    let meet = lattice.meet_all(dense.iter().copied());
    let least = dense.contains(&meet).then_some(meet);
    Ok((dense, least))
}

/// The involution `g(j) = ⋀{x | x ≰ ∼j}` on completely join-irreducible elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMap {
    /// Join-irreducible carrier indices, ascending.
    pub irreducibles: Vec<usize>,
    /// `images[k] = g(irreducibles[k])` as a carrier index.
    pub images: Vec<usize>,
}

impl GMap {
    pub fn apply(&self, j: usize) -> Option<usize> {
        self.irreducibles
            .iter()
            .position(|&x| x == j)
            .map(|k| self.images[k])
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.irreducibles
            .iter()
            .zip(&self.images)
            .filter(|(j, g)| j == g)
            .map(|(&j, _)| j)
            .collect()
    }
}

pub fn g_map(a: &NelsonAlgebra) -> Result<GMap> {
    let lattice = a.order()?;
    let irreducibles = lattice.join_irreducibles();
    let mut images = Vec::with_capacity(irreducibles.len());
    for &j in &irreducibles {
        let nj = a.strong_negation(j);
        let g = lattice.meet_all((0..a.len()).filter(|&x| !a.le(x, nj)));
        if irreducibles.binary_search(&g).is_err() {
            return Err(Error::InvariantBreach(format!(
                "g({}) = {} is not join-irreducible",
                a.element(j),
                a.element(g)
            )));
        }
        images.push(g);
    }
    Ok(GMap {
        irreducibles,
        images,
    })
}

/// J1–J4 over all join-irreducibles.
pub fn check_j_conditions(a: &NelsonAlgebra) -> Result<Report> {
    let g = g_map(a)?;
    let mut r = Report::new("j-conditions");
    let js = &g.irreducibles;
    let gi = |x: usize| g.apply(x).expect("irreducible");
    for &x in js {
        r.tick();
        if gi(gi(x)) != x {
            r.fail("J2", &[x], "g(g(x)) ≠ x");
        }
        if !a.le(x, gi(x)) && !a.le(gi(x), x) {
            r.fail("J3", &[x], "x and g(x) incomparable");
        }
        for &y in js {
            r.tick();
            if a.le(x, y) && !a.le(gi(y), gi(x)) {
                r.fail("J1", &[x, y], "x ≤ y but g(y) ≰ g(x)");
            }
            let below = |z: usize| a.le(z, gi(x)) && a.le(z, gi(y));
            let above = |z: usize| a.le(x, z) && a.le(y, z);
            if below(x) && below(y) && !js.iter().any(|&z| above(z) && below(z)) {
                r.fail("J4", &[x, y], "no interpolant z with x, y ≤ z ≤ g(x), g(y)");
            }
        }
    }
    Ok(r)
}

/// True iff every join-irreducible is comparable with some fixed point of g.
pub fn representation_condition(a: &NelsonAlgebra) -> Result<bool> {
    let g = g_map(a)?;
    let fixed = g.fixed_points();
    Ok(g.irreducibles
        .iter()
        .all(|&j| fixed.iter().any(|&k| a.le(j, k) || a.le(k, j))))
}

/// Reconstructs `∼x = ⋁{j ∈ J | g(j) ≰ x}` and checks it against the table.
pub fn strong_negation_from_g(a: &NelsonAlgebra) -> Result<Vec<usize>> {
    let g = g_map(a)?;
    let lattice = a.order()?;
    let rebuilt: Vec<usize> = (0..a.len())
        .map(|x| {
            lattice.join_all(
                g.irreducibles
                    .iter()
                    .zip(&g.images)
                    .filter(|(_, &gj)| !a.le(gj, x))
                    .map(|(&j, _)| j),
            )
        })
        .collect();
    if let Some(x) = (0..a.len()).find(|&x| rebuilt[x] != a.strong_negation(x)) {
        return Err(Error::InvariantBreach(format!(
            "∼{} is {} in the table but {} from g",
            a.element(x),
            a.element(a.strong_negation(x)),
            a.element(rebuilt[x])
        )));
    }
    Ok(rebuilt)
}
