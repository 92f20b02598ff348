//! Finite universes, point sets and quasiorders.
//!
//! Points are the indices `0..n` with `n <= 64`; a [`PointSet`] is a 64-bit
//! mask. A [`QuasiOrder`] stores one successor set per point, so `rows[i]` is
//! the neighbourhood `R(i)`.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on `n` for exhaustive enumeration when nothing else is configured.
pub const DEFAULT_ENUMERATION_BOUND: usize = 5;

/// Largest `n` whose off-diagonal pairs fit the 64-bit encoding.
pub const MAX_ENCODABLE: usize = 8;

/// Environment variable overriding [`DEFAULT_ENUMERATION_BOUND`].
pub const BOUND_ENV: &str = "NELSON_FORGE_MAX_N";

/// The enumeration bound in effect: `NELSON_FORGE_MAX_N` when set and valid,
/// otherwise the default. Never above [`MAX_ENCODABLE`].
pub fn enumeration_bound() -> usize {
    std::env::var(BOUND_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|b| b.clamp(1, MAX_ENCODABLE))
        .unwrap_or(DEFAULT_ENUMERATION_BOUND)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Universe {
    n: usize,
}

impl Universe {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::UniverseSize(n));
        }
        Ok(Universe { n })
    }

    pub fn size(self) -> usize {
        self.n
    }

    pub fn full(self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn complement(self, x: PointSet) -> PointSet {
        PointSet(!x.0 & self.full().0)
    }

    /// Every subset of the universe, in increasing mask order. Only sensible for small `n`.
    pub fn subsets(self) -> impl Iterator<Item = PointSet> {
        let count: u64 = if self.n >= 64 {
            u64::MAX
        } else {
            1u64 << self.n
        };
        (0..count).map(PointSet)
    }
}

/// A subset of `0..n`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointSet(pub u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn full(n: usize) -> PointSet {
        if n >= 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> PointSet {
        PointSet(1u64 << x)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> PointSet {
        points
            .into_iter()
            .fold(PointSet::EMPTY, |acc, x| acc | PointSet::singleton(x))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, x: usize) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: PointSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(x)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 | rhs.0)
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 & rhs.0)
    }
}

impl Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// A reflexive, transitive relation on a finite universe.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuasiOrder {
    n: usize,
    rows: Vec<PointSet>,
}

impl fmt::Debug for QuasiOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "QuasiOrder(n={}, pairs={:?})",
            self.n,
            self.off_diagonal_pairs()
        )
    }
}

/// Which relations [`enumerate_quasiorders`] yields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationFilter {
    All,
    PartialOrders,
    Equivalences,
    CofinalClosedPoints,
}

impl QuasiOrder {
    /// The identity relation (discrete order).
    pub fn identity(n: usize) -> Result<Self> {
        let u = Universe::new(n)?;
        Ok(QuasiOrder {
            n: u.size(),
            rows: (0..n).map(PointSet::singleton).collect(),
        })
    }

    /// The full relation `U × U`.
    pub fn full(n: usize) -> Result<Self> {
        let u = Universe::new(n)?;
        Ok(QuasiOrder {
            n,
            rows: vec![u.full(); n],
        })
    }

    /// Smallest quasiorder containing `pairs`.
    pub fn closure<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = Self::raw_rows(n, pairs)?;
        // iterate R <- R ∪ R∘R until nothing changes
        loop {
            let mut changed = false;
            for i in 0..n {
                let next = rows[i].iter().fold(rows[i], |acc, j| acc | rows[j]);
                if next != rows[i] {
                    rows[i] = next;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Ok(QuasiOrder { n, rows })
    }

    /// Builds a quasiorder from `pairs` plus the diagonal, rejecting input that
    /// is not already transitive. The error names one missing pair.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let rows = Self::raw_rows(n, pairs)?;
        if let Some((a, b, c)) = first_transitivity_gap(&rows) {
            return Err(Error::NotTransitive(a, b, c));
        }
        Ok(QuasiOrder { n, rows })
    }

    /// Builds from successor rows (`rows[i] = R(i)`), validating the invariants.
    pub fn from_rows(rows: Vec<PointSet>) -> Result<Self> {
        let n = rows.len();
        Universe::new(n)?;
        let full = PointSet::full(n);
        for (i, r) in rows.iter().enumerate() {
            if !r.is_subset(full) {
                return Err(Error::PointOutOfRange {
                    point: 63 - (r.0 & !full.0).leading_zeros() as usize,
                    n,
                });
            }
            if !r.contains(i) {
                return Err(Error::Precondition(format!(
                    "relation is not reflexive at {i}"
                )));
            }
        }
        if let Some((a, b, c)) = first_transitivity_gap(&rows) {
            return Err(Error::NotTransitive(a, b, c));
        }
        Ok(QuasiOrder { n, rows })
    }

    fn raw_rows<I>(n: usize, pairs: I) -> Result<Vec<PointSet>>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Universe::new(n)?;
        let mut rows: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for (i, j) in pairs {
            for p in [i, j] {
                if p >= n {
                    return Err(Error::PointOutOfRange { point: p, n });
                }
            }
            rows[i].insert(j);
        }
        Ok(rows)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn universe(&self) -> Universe {
        Universe { n: self.n }
    }

    pub fn rows(&self) -> &[PointSet] {
        &self.rows
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    /// `R(x)`.
    pub fn successors(&self, x: usize) -> PointSet {
        self.rows[x]
    }

    /// `R(X) = { y | x R y for some x ∈ X }`.
    pub fn neighborhood(&self, x: PointSet) -> PointSet {
        x.iter().fold(PointSet::EMPTY, |acc, i| acc | self.rows[i])
    }

    /// The set `S` of points whose neighbourhood is the point itself.
    pub fn closed_points(&self) -> PointSet {
        PointSet::from_points((0..self.n).filter(|&x| self.rows[x] == PointSet::singleton(x)))
    }

    /// True iff every point has an `R`-successor in `x`.
    pub fn is_cofinal(&self, x: PointSet) -> bool {
        self.rows.iter().all(|r| r.intersects(x))
    }

    pub fn converse(&self) -> QuasiOrder {
        let mut rows = vec![PointSet::EMPTY; self.n];
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.iter() {
                rows[j].insert(i);
            }
        }
        QuasiOrder { n: self.n, rows }
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetry_witness().is_none()
    }

    pub fn antisymmetry_witness(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .find(|&(i, j)| self.related(i, j) && self.related(j, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_witness().is_none()
    }

    pub fn symmetry_witness(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .find(|&(i, j)| self.related(i, j) && !self.related(j, i))
    }

    pub fn is_identity(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| *r == PointSet::singleton(i))
    }

    /// All non-diagonal pairs in row-major order.
    pub fn off_diagonal_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| {
                self.rows[i]
                    .iter()
                    .filter(move |&j| j != i)
                    .map(move |j| (i, j))
            })
            .collect()
    }

    /// Bit `k` is set iff the `k`-th off-diagonal pair (row-major) is related.
    /// Enumeration order is ascending in this value. `None` when `n > 8`.
    pub fn encoding(&self) -> Option<u64> {
        if self.n > MAX_ENCODABLE {
            return None;
        }
        let mut code = 0u64;
        for (k, (i, j)) in off_diagonal_slots(self.n).into_iter().enumerate() {
            if self.related(i, j) {
                code |= 1u64 << k;
            }
        }
        Some(code)
    }

    /// Relation obtained by renaming point `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> QuasiOrder {
        let mut rows = vec![PointSet::EMPTY; self.n];
        for (i, r) in self.rows.iter().enumerate() {
            rows[perm[i]] = PointSet::from_points(r.iter().map(|j| perm[j]));
        }
        QuasiOrder { n: self.n, rows }
    }

    /// True iff no renaming of the points gives a smaller encoding.
    pub fn is_canonical(&self) -> Result<bool> {
        if self.n > 5 {
            return Err(Error::BoundExceeded {
                requested: self.n,
                bound: 5,
            });
        }
        let own = self.encoding().expect("n <= 5");
        let mut canonical = true;
        for_each_permutation(self.n, |perm| {
            if self.permuted(perm).encoding().expect("n <= 5") < own {
                canonical = false;
            }
        });
        Ok(canonical)
    }

    pub fn passes(&self, filter: RelationFilter) -> bool {
        match filter {
            RelationFilter::All => true,
            RelationFilter::PartialOrders => self.is_antisymmetric(),
            RelationFilter::Equivalences => self.is_symmetric(),
            RelationFilter::CofinalClosedPoints => self.is_cofinal(self.closed_points()),
        }
    }

    /// Serializes to the relation text format (size line, then one `i j` per
    /// non-diagonal pair).
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (i, j) in self.off_diagonal_pairs() {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }
}

fn first_transitivity_gap(rows: &[PointSet]) -> Option<(usize, usize, usize)> {
    for (a, ra) in rows.iter().enumerate() {
        for b in ra.iter() {
            if let Some(c) = (rows[b] - *ra).iter().next() {
                return Some((a, b, c));
            }
        }
    }
    None
}

fn off_diagonal_slots(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect()
}

fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    // Heap's algorithm
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Result of loading the relation text format.
#[derive(Debug, Clone)]
pub struct LoadedRelation {
    pub relation: QuasiOrder,
    /// Pairs added by reflexive-transitive completion (empty in strict mode).
    pub added: Vec<(usize, usize)>,
}

/// Parses the relation text format. With `closure` false the listed pairs
/// (plus the diagonal) must already be transitive.
pub fn parse_relation(text: &str, closure: bool) -> Result<LoadedRelation> {
    let mut n: Option<usize> = None;
    let mut pairs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: String| Error::RelationSyntax {
            line: lineno + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(syntax("expected the universe size".into()));
                }
                let size = fields[0]
                    .parse::<usize>()
                    .map_err(|e| syntax(format!("bad size `{}`: {e}", fields[0])))?;
                Universe::new(size)?;
                n = Some(size);
            }
            Some(size) => {
                if fields.len() != 2 {
                    return Err(syntax(format!("expected `i j`, found `{line}`")));
                }
                let point = |s: &str| -> Result<usize> {
                    let p = s
                        .parse::<usize>()
                        .map_err(|e| syntax(format!("bad point `{s}`: {e}")))?;
                    if p >= size {
                        return Err(syntax(format!("point {p} outside universe of size {size}")));
                    }
                    Ok(p)
                };
                let i = point(fields[0])?;
                let j = point(fields[1])?;
                pairs.push((i, j));
            }
        }
    }
    let n = n.ok_or(Error::RelationSyntax {
        line: 0,
        message: "missing universe size".into(),
    })?;
    if closure {
        let relation = QuasiOrder::closure(n, pairs.iter().copied())?;
        let listed = QuasiOrder::raw_rows(n, pairs)?;
        let added = relation
            .off_diagonal_pairs()
            .into_iter()
            .filter(|&(i, j)| !listed[i].contains(j))
            .collect();
        Ok(LoadedRelation { relation, added })
    } else {
        Ok(LoadedRelation {
            relation: QuasiOrder::from_pairs(n, pairs)?,
            added: Vec::new(),
        })
    }
}

/// Lazily enumerates every quasiorder on `n` labelled points in ascending
/// encoding order, by backtracking over off-diagonal pairs from the most
/// significant bit down and pruning as soon as a decided triple breaks
/// transitivity.
pub struct QuasiOrderIter {
    n: usize,
    slots: Vec<(usize, usize)>,
    value: Vec<u64>,
    known: Vec<u64>,
    choices: Vec<u8>,
    backtrack: bool,
    finished: bool,
    filter: RelationFilter,
    canonical_only: bool,
}

impl QuasiOrderIter {
    fn slot_for_depth(&self, depth: usize) -> (usize, usize) {
        self.slots[self.slots.len() - 1 - depth]
    }

    fn set(&mut self, (i, j): (usize, usize), v: bool) {
        self.known[i] |= 1 << j;
        if v {
            self.value[i] |= 1 << j;
        } else {
            self.value[i] &= !(1 << j);
        }
    }

    fn unset(&mut self, (i, j): (usize, usize)) {
        self.known[i] &= !(1 << j);
        self.value[i] &= !(1 << j);
    }

    fn get(&self, i: usize, j: usize) -> Option<bool> {
        if self.known[i] >> j & 1 == 1 {
            Some(self.value[i] >> j & 1 == 1)
        } else {
            None
        }
    }

    /// Checks every fully decided triple that involves the pair `(i, j)`.
    fn consistent(&self, (i, j): (usize, usize)) -> bool {
        for k in 0..self.n {
            if k == i || k == j {
                continue;
            }
            // (i,j),(j,k) => (i,k)
            if let (Some(true), Some(true), Some(false)) =
                (self.get(i, j), self.get(j, k), self.get(i, k))
            {
                return false;
            }
            // (k,i),(i,j) => (k,j)
            if let (Some(true), Some(true), Some(false)) =
                (self.get(k, i), self.get(i, j), self.get(k, j))
            {
                return false;
            }
            // (i,k),(k,j) => (i,j)
            if let (Some(true), Some(true), Some(false)) =
                (self.get(i, k), self.get(k, j), self.get(i, j))
            {
                return false;
            }
        }
        true
    }

    fn current(&self) -> QuasiOrder {
        QuasiOrder {
            n: self.n,
            rows: self.value.iter().map(|&r| PointSet(r)).collect(),
        }
    }

    fn step(&mut self) -> Option<QuasiOrder> {
        if self.finished {
            return None;
        }
        loop {
            if self.backtrack {
                loop {
                    let Some(c) = self.choices.pop() else {
                        self.finished = true;
                        return None;
                    };
                    let slot = self.slot_for_depth(self.choices.len());
                    self.unset(slot);
                    if c == 0 {
                        self.set(slot, true);
                        self.choices.push(1);
                        if self.consistent(slot) {
                            self.backtrack = false;
                            break;
                        }
                    }
                }
            }
            if self.choices.len() == self.slots.len() {
                self.backtrack = true;
                return Some(self.current());
            }
            let slot = self.slot_for_depth(self.choices.len());
            self.set(slot, false);
            self.choices.push(0);
            if !self.consistent(slot) {
                self.backtrack = true;
            }
        }
    }
}

impl Iterator for QuasiOrderIter {
    type Item = QuasiOrder;

    fn next(&mut self) -> Option<QuasiOrder> {
        loop {
            let q = self.step()?;
            if !q.passes(self.filter) {
                continue;
            }
            if self.canonical_only && !q.is_canonical().unwrap_or(true) {
                continue;
            }
            return Some(q);
        }
    }
}

/// Every quasiorder of the requested kind on `n` labelled points, ascending by
/// [`QuasiOrder::encoding`]. Fails when `n` exceeds [`enumeration_bound`].
pub fn enumerate_quasiorders(n: usize, filter: RelationFilter) -> Result<QuasiOrderIter> {
    enumerate_quasiorders_with(n, filter, false, enumeration_bound())
}

/// As [`enumerate_quasiorders`] with an explicit bound; `canonical_only` keeps
/// one representative per isomorphism class (the minimal encoding, `n <= 5`).
pub fn enumerate_quasiorders_with(
    n: usize,
    filter: RelationFilter,
    canonical_only: bool,
    bound: usize,
) -> Result<QuasiOrderIter> {
    Universe::new(n)?;
    let bound = bound.min(MAX_ENCODABLE);
    if n > bound {
        return Err(Error::BoundExceeded {
            requested: n,
            bound,
        });
    }
    if canonical_only && n > 5 {
        return Err(Error::BoundExceeded {
            requested: n,
            bound: 5,
        });
    }
    let diag: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    Ok(QuasiOrderIter {
        n,
        slots: off_diagonal_slots(n),
        value: diag.clone(),
        known: diag,
        choices: Vec::new(),
        backtrack: false,
        finished: false,
        filter,
        canonical_only,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn antichain() -> QuasiOrder {
        QuasiOrder::from_pairs(3, [(0, 1), (0, 2)]).unwrap()
    }

    fn two_classes() -> QuasiOrder {
        QuasiOrder::from_pairs(3, [(0, 1), (1, 0)]).unwrap()
    }

    #[test]
    fn closure_examples() {
        let q = QuasiOrder::closure(3, []).unwrap();
        assert!(q.is_identity());
        let q = QuasiOrder::closure(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(q.off_diagonal_pairs(), vec![(0, 1), (0, 2), (1, 2)]);
        let q = QuasiOrder::closure(3, [(0, 1), (0, 2)]).unwrap();
        assert_eq!(q, antichain());
    }

    #[test]
    fn closure_is_idempotent() {
        let q = QuasiOrder::closure(4, [(0, 1), (1, 2), (2, 0), (3, 1)]).unwrap();
        let again = QuasiOrder::closure(4, q.off_diagonal_pairs()).unwrap();
        assert_eq!(q, again);
    }

    #[test]
    fn strict_constructor_names_missing_pair() {
        let err = QuasiOrder::from_pairs(3, [(0, 1), (1, 2)]).unwrap_err();
        assert_eq!(err, Error::NotTransitive(0, 1, 2));
        assert!(QuasiOrder::from_pairs(3, [(0, 5)]).is_err());
        assert!(QuasiOrder::from_pairs(0, []).is_err());
    }

    #[test]
    fn neighborhood_examples() {
        let id = QuasiOrder::identity(3).unwrap();
        assert_eq!(
            id.neighborhood(PointSet::singleton(1)),
            PointSet::singleton(1)
        );
        let r = antichain();
        assert_eq!(r.neighborhood(PointSet::singleton(0)), PointSet::full(3));
        assert_eq!(
            r.neighborhood(PointSet::singleton(2)),
            PointSet::singleton(2)
        );
    }

    #[test]
    fn closed_points_examples() {
        assert_eq!(
            QuasiOrder::identity(3).unwrap().closed_points(),
            PointSet::full(3)
        );
        assert_eq!(antichain().closed_points(), PointSet::from_points([1, 2]));
        assert_eq!(two_classes().closed_points(), PointSet::singleton(2));
    }

    #[test]
    fn cofinality_examples() {
        let r = antichain();
        assert!(r.is_cofinal(PointSet::full(3)));
        assert!(r.is_cofinal(PointSet::from_points([1, 2])));
        assert!(!two_classes().is_cofinal(PointSet::singleton(2)));
    }

    #[test]
    fn small_enumeration_counts() {
        let count = |n, f| enumerate_quasiorders(n, f).unwrap().count();
        assert_eq!(count(1, RelationFilter::All), 1);
        assert_eq!(count(2, RelationFilter::All), 4);
        assert_eq!(count(3, RelationFilter::All), 29);
        assert_eq!(count(3, RelationFilter::PartialOrders), 19);
        assert_eq!(count(3, RelationFilter::Equivalences), 5);
    }

    #[test]
    fn enumeration_is_sorted_by_encoding() {
        let codes: Vec<u64> = enumerate_quasiorders(3, RelationFilter::All)
            .unwrap()
            .map(|q| q.encoding().unwrap())
            .collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(codes[0], 0);
    }

    #[test]
    fn enumeration_respects_bound() {
        assert!(matches!(
            enumerate_quasiorders_with(4, RelationFilter::All, false, 3),
            Err(Error::BoundExceeded {
                requested: 4,
                bound: 3
            })
        ));
    }

    #[test]
    fn canonical_filter_counts_unlabelled_classes() {
        // unlabelled preorders on 3 points: 9; unlabelled posets on 3 points: 5
        let count = |f| enumerate_quasiorders_with(3, f, true, 5).unwrap().count();
        assert_eq!(count(RelationFilter::All), 9);
        assert_eq!(count(RelationFilter::PartialOrders), 5);
    }

    #[test]
    fn relation_text_round_trip_and_errors() {
        let text = "# antichain over a bottom\n3\n0 1\n0 2 # second\n";
        let loaded = parse_relation(text, false).unwrap();
        assert_eq!(loaded.relation, antichain());
        assert!(loaded.added.is_empty());
        let again = parse_relation(&loaded.relation.to_text(), false).unwrap();
        assert_eq!(again.relation, loaded.relation);

        let chain = "3\n0 1\n1 2\n";
        assert_eq!(
            parse_relation(chain, false).unwrap_err(),
            Error::NotTransitive(0, 1, 2)
        );
        let closed = parse_relation(chain, true).unwrap();
        assert_eq!(closed.added, vec![(0, 2)]);

        assert!(matches!(
            parse_relation("3\n0 7\n", false),
            Err(Error::RelationSyntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_relation("", false),
            Err(Error::RelationSyntax { .. })
        ));
    }

    #[test]
    fn point_set_basics() {
        let x = PointSet::from_points([0, 2, 5]);
        assert_eq!(x.len(), 3);
        assert_eq!(x.to_vec(), vec![0, 2, 5]);
        assert_eq!(format!("{x}"), "{0,2,5}");
        let u = Universe::new(6).unwrap();
        assert_eq!(u.complement(x), PointSet::from_points([1, 3, 4]));
        assert_eq!(PointSet::full(64).len(), 64);
    }
}
