//! JSON exchange format for algebras and Graphviz output for their Hasse diagrams.
//!
//! Carriers are written as `[[left members], [right members]]` pairs, tables
//! as index matrices. Output is deterministic: the same algebra always
//! serializes to the same bytes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::approx::lower_topology;
use crate::error::{Error, Result};
use crate::heyting::Congruence;
use crate::nelson::{
    g_map, AlgebraParts, NelsonAlgebra, PairElement, Provenance, Representation, Table,
};
use crate::relations::{PointSet, QuasiOrder};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub n: usize,
    /// Off-diagonal pairs in row-major order.
    pub pairs: Vec<[usize; 2]>,
}

impl RelationJson {
    pub fn from_relation(r: &QuasiOrder) -> Self {
        RelationJson {
            n: r.size(),
            pairs: r
                .off_diagonal_pairs()
                .into_iter()
                .map(|(i, j)| [i, j])
                .collect(),
        }
    }

    pub fn to_relation(&self) -> Result<QuasiOrder> {
        QuasiOrder::from_pairs(self.n, self.pairs.iter().map(|p| (p[0], p[1])))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ProvenanceJson {
    Direct,
    Sendlewski {
        /// The Heyting algebra is the lattice of sets closed under this relation.
        interior_relation: RelationJson,
        heyting: Vec<Vec<usize>>,
        congruence: Vec<usize>,
        glivenko: bool,
    },
    RoughSets {
        relation: RelationJson,
        effective: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub universe: usize,
    pub representation: Representation,
    pub carrier: Vec<[Vec<usize>; 2]>,
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
    pub implication: Vec<Vec<usize>>,
    pub strong_negation: Vec<usize>,
    pub weak_negation: Vec<usize>,
    pub zero: usize,
    pub one: usize,
    pub provenance: ProvenanceJson,
}

fn set_from(points: &[usize], n: usize) -> Result<PointSet> {
    if let Some(&p) = points.iter().find(|&&p| p >= n.max(1) || p >= 64) {
        return Err(Error::PointOutOfRange { point: p, n });
    }
    Ok(PointSet::from_points(points.iter().copied()))
}

impl AlgebraJson {
    pub fn from_algebra(a: &NelsonAlgebra) -> Self {
        let provenance = match a.provenance() {
            Provenance::Direct => ProvenanceJson::Direct,
            Provenance::Sendlewski {
                heyting,
                congruence,
                glivenko,
            } => ProvenanceJson::Sendlewski {
                interior_relation: RelationJson::from_relation(heyting.interior_relation()),
                heyting: heyting.elements().iter().map(|x| x.to_vec()).collect(),
                congruence: congruence.class_ids().to_vec(),
                glivenko: *glivenko,
            },
            Provenance::RoughSets {
                relation,
                effective,
            } => ProvenanceJson::RoughSets {
                relation: RelationJson::from_relation(relation),
                effective: *effective,
            },
        };
        AlgebraJson {
            universe: a.universe(),
            representation: a.representation(),
            carrier: a
                .carrier()
                .iter()
                .map(|p| [p.left.to_vec(), p.right.to_vec()])
                .collect(),
            join: a.join_table().rows(),
            meet: a.meet_table().rows(),
            implication: a.implication_table().rows(),
            strong_negation: a.strong_negation_table().to_vec(),
            weak_negation: a.weak_negation_table().to_vec(),
            zero: a.zero(),
            one: a.one(),
            provenance,
        }
    }

    pub fn to_algebra(&self) -> Result<NelsonAlgebra> {
        let n = self.universe;
        let carrier = self
            .carrier
            .iter()
            .map(|[l, r]| Ok(PairElement::new(set_from(l, n)?, set_from(r, n)?)))
            .collect::<Result<Vec<_>>>()?;
        let provenance = match &self.provenance {
            ProvenanceJson::Direct => Provenance::Direct,
            ProvenanceJson::Sendlewski {
                interior_relation,
                heyting,
                congruence,
                glivenko,
            } => {
                let h = lower_topology(&interior_relation.to_relation()?);
                let listed = heyting
                    .iter()
                    .map(|x| set_from(x, n))
                    .collect::<Result<Vec<_>>>()?;
                if listed != h.elements() {
                    return Err(Error::MalformedAlgebra(
                        "heyting elements do not match the interior relation".into(),
                    ));
                }
                if congruence.len() != h.len() {
                    return Err(Error::MalformedAlgebra("congruence length".into()));
                }
                Provenance::Sendlewski {
                    heyting: h,
                    congruence: Congruence::from_class_ids(congruence.clone()),
                    glivenko: *glivenko,
                }
            }
            ProvenanceJson::RoughSets {
                relation,
                effective,
            } => Provenance::RoughSets {
                relation: relation.to_relation()?,
                effective: *effective,
            },
        };
        NelsonAlgebra::from_tables(AlgebraParts {
            universe: n,
            representation: self.representation,
            carrier,
            join: Table::from_rows(self.join.clone())?,
            meet: Table::from_rows(self.meet.clone())?,
            implication: Table::from_rows(self.implication.clone())?,
            strong_negation: self.strong_negation.clone(),
            weak_negation: self.weak_negation.clone(),
            zero: self.zero,
            one: self.one,
            provenance,
        })
    }
}

/// Compact JSON with a trailing newline.
pub fn to_json_string(a: &NelsonAlgebra) -> String {
    let mut s = serde_json::to_string(&AlgebraJson::from_algebra(a))
        .expect("algebra JSON is always serializable");
    s.push('\n');
    s
}

pub fn from_json_str(text: &str) -> Result<NelsonAlgebra> {
    serde_json::from_str::<AlgebraJson>(text)?.to_algebra()
}

fn other_form(a: &NelsonAlgebra, p: PairElement) -> Option<(&'static str, PairElement)> {
    let full = PointSet::full(a.universe());
    match a.representation() {
        Representation::Increasing => Some(("DRS", PairElement::new(p.left, full - p.right))),
        Representation::Disjoint => Some(("IRS", PairElement::new(p.left, full - p.right))),
        Representation::Abstract => None,
    }
}

/// Covering pairs as a DOT digraph, edges pointing upward. Join-irreducible
/// nodes are boxes; fixed points of g are additionally filled.
pub fn hasse_dot(a: &NelsonAlgebra) -> Result<String> {
    let lattice = a.order()?;
    let irreducibles = lattice.join_irreducibles();
    let fixed = g_map(a).map(|g| g.fixed_points()).unwrap_or_default();
    let this = match a.representation() {
        Representation::Increasing => "IRS",
        Representation::Disjoint => "DRS",
        Representation::Abstract => "",
    };
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=ellipse];\n");
    for (i, &p) in a.carrier().iter().enumerate() {
        let mut label = if this.is_empty() {
            p.to_string()
        } else {
            format!("{this} {p}")
        };
        if let Some((name, q)) = other_form(a, p) {
            let _ = write!(label, "\\n{name} {q}");
        }
        let mut attrs = format!("label=\"{label}\"");
        if irreducibles.contains(&i) {
            attrs.push_str(", shape=box");
        }
        if fixed.contains(&i) {
            attrs.push_str(", style=filled, fillcolor=lightgray");
        }
        let _ = writeln!(out, "  n{i} [{attrs}];");
    }
    for (lo, hi) in lattice.covers() {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heyting::glivenko;
    use crate::nelson::sendlewski;
    use crate::roughsets::{drs_construct, irs_direct};

    fn antichain() -> QuasiOrder {
        QuasiOrder::from_pairs(3, [(0, 1), (0, 2)]).unwrap()
    }

    #[test]
    fn round_trip_is_exact() {
        let r = antichain();
        let h = lower_topology(&r);
        for a in [
            irs_direct(&r).unwrap(),
            drs_construct(&r).unwrap(),
            sendlewski(&h, &glivenko(&h).unwrap()).unwrap(),
            crate::fixtures::crown_kleene(),
        ] {
            let text = to_json_string(&a);
            let back = from_json_str(&text).unwrap();
            assert_eq!(back, a);
            assert_eq!(to_json_string(&back), text);
        }
    }

    #[test]
    fn import_rejects_bad_shapes() {
        let a = irs_direct(&antichain()).unwrap();
        let mut j = AlgebraJson::from_algebra(&a);
        j.join[0][0] = 17;
        assert!(j.to_algebra().is_err());
        let mut j = AlgebraJson::from_algebra(&a);
        j.carrier[1] = [vec![0], vec![]];
        assert!(matches!(j.to_algebra(), Err(Error::MalformedAlgebra(_))));
        assert!(matches!(from_json_str("{"), Err(Error::Json(_))));
    }

    #[test]
    fn hasse_counts() {
        let a = irs_direct(&antichain()).unwrap();
        let dot = hasse_dot(&a).unwrap();
        assert_eq!(dot.matches(" [label=").count(), 6);
        // bottom, atom, square, top: 1 + 4 + 1 covers
        let brute = (0..a.len())
            .flat_map(|x| (0..a.len()).map(move |y| (x, y)))
            .filter(|&(x, y)| {
                x != y
                    && a.le(x, y)
                    && !(0..a.len()).any(|z| z != x && z != y && a.le(x, z) && a.le(z, y))
            })
            .count();
        assert_eq!(brute, 6);
        assert_eq!(dot.matches(" -> ").count(), brute);
        let dot = hasse_dot(&irs_direct(&QuasiOrder::identity(2).unwrap()).unwrap()).unwrap();
        assert_eq!(dot.matches(" -> ").count(), 4);
        let dot = hasse_dot(&irs_direct(&QuasiOrder::identity(1).unwrap()).unwrap()).unwrap();
        assert_eq!(dot.matches(" [label=").count(), 2);
        assert_eq!(dot.matches(" -> ").count(), 1);
    }
}
