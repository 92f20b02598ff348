//! Brute-force oracles written straight from the definitions, on raw bit
//! masks. Nothing here calls the library's approximation, lattice or
//! enumeration code; results are converted only for the final comparison.

#![allow(dead_code)]

use std::collections::BTreeSet;

use nelson_forge::logic::Formula;
use nelson_forge::{PointSet, QuasiOrder};

/// Successor rows: bit `j` of `rows[i]` means `i R j`.
pub type Rows = Vec<u64>;

fn related(rows: &Rows, i: usize, j: usize) -> bool {
    rows[i] >> j & 1 == 1
}

/// Every reflexive transitive relation on `n` points, by filtering all
/// `2^(n(n-1))` relations that contain the diagonal.
pub fn all_quasiorders(n: usize) -> Vec<Rows> {
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for bits in 0u64..(1 << slots.len()) {
        let mut rows: Rows = (0..n).map(|i| 1 << i).collect();
        for (k, &(i, j)) in slots.iter().enumerate() {
            if bits >> k & 1 == 1 {
                rows[i] |= 1 << j;
            }
        }
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n)
                    .all(|c| !related(&rows, a, b) || !related(&rows, b, c) || related(&rows, a, c))
            })
        });
        if transitive {
            out.push(rows);
        }
    }
    out
}

pub fn is_antisymmetric(rows: &Rows) -> bool {
    let n = rows.len();
    (0..n).all(|i| (0..n).all(|j| i == j || !(related(rows, i, j) && related(rows, j, i))))
}

pub fn is_symmetric(rows: &Rows) -> bool {
    let n = rows.len();
    (0..n).all(|i| (0..n).all(|j| related(rows, i, j) == related(rows, j, i)))
}

pub fn to_quasiorder(rows: &Rows) -> QuasiOrder {
    QuasiOrder::from_rows(rows.iter().map(|&r| PointSet(r)).collect()).expect("quasiorder")
}

pub fn from_quasiorder(r: &QuasiOrder) -> Rows {
    r.rows().iter().map(|p| p.bits()).collect()
}

pub fn full(n: usize) -> u64 {
    (1u64 << n) - 1
}

/// `{x | R(x) ⊆ X}`
pub fn lower(rows: &Rows, x: u64) -> u64 {
    (0..rows.len())
        .filter(|&p| rows[p] & !x == 0)
        .fold(0, |acc, p| acc | 1 << p)
}

/// `{x | R(x) ∩ X ≠ ∅}`
pub fn upper(rows: &Rows, x: u64) -> u64 {
    (0..rows.len())
        .filter(|&p| rows[p] & x != 0)
        .fold(0, |acc, p| acc | 1 << p)
}

/// Points whose only successor is themselves.
pub fn closed_points(rows: &Rows) -> u64 {
    (0..rows.len())
        .filter(|&p| rows[p] == 1 << p)
        .fold(0, |acc, p| acc | 1 << p)
}

/// Every point has a successor in `x`.
pub fn cofinal(rows: &Rows, x: u64) -> bool {
    rows.iter().all(|&r| r & x != 0)
}

/// `{(X_R, X^R) | X ⊆ U}`, ascending.
pub fn irs_carrier(rows: &Rows) -> Vec<(u64, u64)> {
    let n = rows.len();
    let set: BTreeSet<(u64, u64)> = (0..=full(n))
        .map(|x| (lower(rows, x), upper(rows, x)))
        .collect();
    set.into_iter().collect()
}

/// `{(X_R, −X^R) | X ⊆ U}`, ascending.
pub fn drs_carrier(rows: &Rows) -> Vec<(u64, u64)> {
    let n = rows.len();
    let set: BTreeSet<(u64, u64)> = (0..=full(n))
        .map(|x| (lower(rows, x), full(n) & !upper(rows, x)))
        .collect();
    set.into_iter().collect()
}

/// The lower topology as the image of the lower approximation.
pub fn lower_sets(rows: &Rows) -> Vec<u64> {
    let n = rows.len();
    let set: BTreeSet<u64> = (0..=full(n)).map(|x| lower(rows, x)).collect();
    set.into_iter().collect()
}

/// Largest member of the topology disjoint from `x`, by search.
pub fn pseudocomplement(rows: &Rows, x: u64) -> u64 {
    lower_sets(rows)
        .into_iter()
        .filter(|&z| z & x == 0)
        .fold(0, |acc, z| acc | z)
}

fn pair_le(a: (u64, u64), b: (u64, u64)) -> bool {
    a.0 & !b.0 == 0 && a.1 & !b.1 == 0
}

/// Join-irreducibles of a finite family ordered componentwise by inclusion:
/// elements that are not the least upper bound of the elements strictly below them.
pub fn join_irreducibles(carrier: &[(u64, u64)]) -> Vec<(u64, u64)> {
    let lub = |below: &[(u64, u64)]| -> Option<(u64, u64)> {
        let ubs: Vec<(u64, u64)> = carrier
            .iter()
            .copied()
            .filter(|&u| below.iter().all(|&b| pair_le(b, u)))
            .collect();
        ubs.iter()
            .copied()
            .find(|&u| ubs.iter().all(|&v| pair_le(u, v)))
    };
    carrier
        .iter()
        .copied()
        .filter(|&e| {
            let below: Vec<(u64, u64)> = carrier
                .iter()
                .copied()
                .filter(|&b| b != e && pair_le(b, e))
                .collect();
            lub(&below) != Some(e)
        })
        .collect()
}

/// Table-free evaluation in `IRS_R(U)` straight from the pair formulas.
/// `T` goes through the disjoint form with pseudocomplements found by search.
pub fn eval_irs(rows: &Rows, f: &Formula, v: &dyn Fn(&str) -> (u64, u64)) -> (u64, u64) {
    let u = full(rows.len());
    let e = |g: &Formula| eval_irs(rows, g, v);
    match f {
        Formula::Atom(a) => v(a),
        Formula::Zero => (0, 0),
        Formula::One => (u, u),
        Formula::Strong(x) => {
            let (a, b) = e(x);
            (u & !b, u & !a)
        }
        Formula::Weak(x) => {
            let (a, _) = e(x);
            (lower(rows, u & !a), u & !a)
        }
        Formula::And(x, y) => {
            let ((a, b), (c, d)) = (e(x), e(y));
            (a & c, b & d)
        }
        Formula::Or(x, y) => {
            let ((a, b), (c, d)) = (e(x), e(y));
            (a | c, b | d)
        }
        Formula::Imp(x, y) => {
            let ((a, _), (c, d)) = (e(x), e(y));
            (lower(rows, (u & !a) | c), (u & !a) | d)
        }
        Formula::T(x) => {
            let (a, b) = e(x);
            let right = u & !b;
            let star2 = |s| pseudocomplement(rows, pseudocomplement(rows, s));
            (star2(a), u & !star2(right))
        }
    }
}

pub fn pair(p: (u64, u64)) -> nelson_forge::nelson::PairElement {
    nelson_forge::nelson::PairElement::new(PointSet(p.0), PointSet(p.1))
}
