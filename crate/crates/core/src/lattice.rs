//! Order-theoretic helpers for a finite lattice given only by its order.
//!
//! Elements are indices `0..m`. Joins and meets are found by searching the
//! order, which keeps this independent of any operation table.

use crate::error::{Error, Result};

/// Size above which the subset-based join-irreducibility check refuses to run.
pub const DEFINITIONAL_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    m: usize,
    leq: Vec<bool>,
}

impl FiniteLattice {
    /// Builds from an order predicate; fails if the order is not a lattice order.
    pub fn from_order(m: usize, le: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut leq = vec![false; m * m];
        for i in 0..m {
            for j in 0..m {
                leq[i * m + j] = le(i, j);
            }
        }
        let lattice = FiniteLattice { m, leq };
        lattice.validate()?;
        Ok(lattice)
    }

    fn validate(&self) -> Result<()> {
        let m = self.m;
        if m == 0 {
            return Err(Error::MalformedAlgebra("empty carrier".into()));
        }
        for i in 0..m {
            if !self.le(i, i) {
                return Err(Error::MalformedAlgebra(format!(
                    "order not reflexive at {i}"
                )));
            }
            for j in 0..m {
                if i != j && self.le(i, j) && self.le(j, i) {
                    return Err(Error::MalformedAlgebra(format!(
                        "order not antisymmetric at ({i}, {j})"
                    )));
                }
                for k in 0..m {
                    if self.le(i, j) && self.le(j, k) && !self.le(i, k) {
                        return Err(Error::MalformedAlgebra(format!(
                            "order not transitive at ({i}, {j}, {k})"
                        )));
                    }
                }
                if self.try_join(i, j).is_none() || self.try_meet(i, j).is_none() {
                    return Err(Error::MalformedAlgebra(format!(
                        "elements {i} and {j} lack a join or meet"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.m + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le(i, j)
    }

    fn try_join(&self, i: usize, j: usize) -> Option<usize> {
        let ubs: Vec<usize> = (0..self.m)
            .filter(|&k| self.le(i, k) && self.le(j, k))
            .collect();
        ubs.iter()
            .copied()
            .find(|&k| ubs.iter().all(|&u| self.le(k, u)))
    }

    fn try_meet(&self, i: usize, j: usize) -> Option<usize> {
        let lbs: Vec<usize> = (0..self.m)
            .filter(|&k| self.le(k, i) && self.le(k, j))
            .collect();
        lbs.iter()
            .copied()
            .find(|&k| lbs.iter().all(|&l| self.le(l, k)))
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.try_join(i, j).expect("validated lattice")
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.try_meet(i, j).expect("validated lattice")
    }

    pub fn bottom(&self) -> usize {
        (0..self.m)
            .find(|&b| (0..self.m).all(|x| self.le(b, x)))
            .expect("validated lattice")
    }

    pub fn top(&self) -> usize {
        (0..self.m)
            .find(|&t| (0..self.m).all(|x| self.le(x, t)))
            .expect("validated lattice")
    }

    /// Join of an arbitrary family; the empty join is the bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items
            .into_iter()
            .fold(self.bottom(), |acc, x| self.join(acc, x))
    }

    /// Meet of an arbitrary family; the empty meet is the top.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items
            .into_iter()
            .fold(self.top(), |acc, x| self.meet(acc, x))
    }

    /// Elements covered by `x`.
    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        (0..self.m)
            .filter(|&y| self.lt(y, x) && !(0..self.m).any(|z| self.lt(y, z) && self.lt(z, x)))
            .collect()
    }

    /// Covering pairs `(lower, upper)` in ascending index order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.m {
            for y in self.lower_covers(x) {
                out.push((y, x));
            }
        }
        out.sort_unstable();
        out
    }

    /// Completely join-irreducible elements: exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.m)
            .filter(|&x| self.lower_covers(x).len() == 1)
            .collect()
    }

    /// Join-irreducibles straight from the definition: `x` qualifies iff every
    /// subset whose join is `x` contains `x`. Exponential; limited to
    /// [`DEFINITIONAL_LIMIT`] elements.
    pub fn join_irreducibles_by_definition(&self) -> Result<Vec<usize>> {
        if self.m > DEFINITIONAL_LIMIT {
            return Err(Error::BoundExceeded {
                requested: self.m,
                bound: DEFINITIONAL_LIMIT,
            });
        }
        let mut joins = vec![self.bottom() as u8; 1 << self.m];
        let mut reducible = vec![false; self.m];
        for mask in 1usize..(1 << self.m) {
            let low = mask.trailing_zeros() as usize;
            let j = self.join(joins[mask & (mask - 1)] as usize, low);
            joins[mask] = j as u8;
            if mask >> j & 1 == 0 {
                reducible[j] = true;
            }
        }
        // the empty family joins to the bottom
        reducible[self.bottom()] = true;
        Ok((0..self.m).filter(|&x| !reducible[x]).collect())
    }

    /// Definitional relative pseudocomplement: the greatest `z` with `x ∧ z ≤ y`.
    pub fn rpc(&self, x: usize, y: usize) -> Option<usize> {
        let candidates: Vec<usize> = (0..self.m)
            .filter(|&z| self.le(self.meet(x, z), y))
            .collect();
        candidates
            .iter()
            .copied()
            .find(|&z| candidates.iter().all(|&c| self.le(c, z)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean_square() -> FiniteLattice {
        // 0 = bottom, 1 and 2 atoms, 3 = top (bitmask order)
        FiniteLattice::from_order(4, |i, j| i & !j == 0).unwrap()
    }

    fn chain(m: usize) -> FiniteLattice {
        FiniteLattice::from_order(m, |i, j| i <= j).unwrap()
    }

    #[test]
    fn boolean_join_irreducibles_are_atoms() {
        let l = boolean_square();
        assert_eq!(l.join_irreducibles(), vec![1, 2]);
        assert_eq!(l.join_irreducibles_by_definition().unwrap(), vec![1, 2]);
        assert_eq!(l.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn chain_join_irreducibles_are_non_bottom() {
        let l = chain(3);
        assert_eq!(l.join_irreducibles(), vec![1, 2]);
        assert_eq!(l.join_irreducibles_by_definition().unwrap(), vec![1, 2]);
    }

    #[test]
    fn rejects_non_lattice_orders() {
        // two incomparable maximal elements: no top, so {1,2} has no join
        assert!(FiniteLattice::from_order(3, |i, j| i == j || i == 0).is_err());
        assert!(FiniteLattice::from_order(2, |_, _| true).is_err());
    }

    #[test]
    fn definitional_rpc_in_chain() {
        let l = chain(3);
        assert_eq!(l.rpc(2, 1), Some(1));
        assert_eq!(l.rpc(1, 2), Some(2));
        assert_eq!(l.rpc(1, 0), Some(0));
        assert_eq!(l.join_all([]), 0);
        assert_eq!(l.meet_all([]), 2);
    }
}
