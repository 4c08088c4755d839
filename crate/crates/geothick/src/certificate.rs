//! Certificate verification: geometric thickness, simultaneous embeddings,
//! and sunflower structure.
//!
//! Malformed inputs are reported as errors, distinct from geometric rejection,
//! which is reported through a [`Verdict`].

use crate::geom::{point_in_interior, SegRel};
use crate::model::{
    conflict_pairs, Drawing, EdgeColoring, Multigraph, ModelError, VertexId,
};
use crate::verdict::{Verdict, Violation};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CertificateError {
    #[error("{0}")]
    Model(#[from] ModelError),
    #[error("coloring is not total: edge {edge} copy {copy} has no color")]
    ColoringNotTotal { edge: u32, copy: u32 },
    #[error("color {color} on edge {edge} copy {copy} is out of range 1..={t}")]
    ColorOutOfRange { edge: u32, copy: u32, color: u32, t: u32 },
    #[error("t must be positive")]
    InvalidT,
    #[error("graph {index} in family is not simple: duplicate edge ({u},{v})")]
    NotSimple { index: usize, u: VertexId, v: VertexId },
    #[error("graph {index} references vertex {v} outside the shared vertex set")]
    ForeignVertex { index: usize, v: VertexId },
}

/// Verifies a geometric-thickness certificate: a drawing plus a t-coloring of
/// all edge instances with no two same-colored instances sharing a point in
/// their relative interiors.
pub fn verify_thickness(
    g: &Multigraph,
    d: &Drawing,
    c: &EdgeColoring,
    t: u32,
) -> Result<Verdict, CertificateError> {
    if t == 0 {
        return Err(CertificateError::InvalidT);
    }
    g.check()?;
    d.check_for(g)?;
    for (i, e) in g.edges.iter().enumerate() {
        for copy in 0..e.multiplicity {
            match c.get(i as u32, copy) {
                None => return Err(CertificateError::ColoringNotTotal { edge: i as u32, copy }),
                Some(color) if color == 0 || color > t => {
                    return Err(CertificateError::ColorOutOfRange {
                        edge: i as u32,
                        copy,
                        color,
                        t,
                    })
                }
                Some(_) => {}
            }
        }
    }

    let mut verdict = Verdict::accept();

    // Copies of one class must carry pairwise distinct colors; this is also
    // caught by the conflict scan below (copies overlap), but reported with a
    // dedicated kind to keep rejections readable.
    for (i, e) in g.edges.iter().enumerate() {
        let mut seen: BTreeMap<u32, u32> = BTreeMap::new();
        for copy in 0..e.multiplicity {
            let color = c.get(i as u32, copy).unwrap();
            if let Some(&other) = seen.get(&color) {
                verdict.push(Violation::new(
                    "duplicate_color_on_multiedge",
                    vec![format!("e{i}#{other}"), format!("e{i}#{copy}")],
                    None,
                ));
            }
            seen.insert(color, copy);
        }
    }

    for conflict in conflict_pairs(g, d)? {
        let ca = c.get(conflict.a.edge, conflict.a.copy).unwrap();
        let cb = c.get(conflict.b.edge, conflict.b.copy).unwrap();
        if ca == cb {
            if conflict.a.edge == conflict.b.edge {
                // Already reported as duplicate_color_on_multiedge.
                continue;
            }
            let (kind, witness) = match &conflict.relation {
                SegRel::ProperCross(p) => ("monochromatic_crossing", Some(p.clone())),
                SegRel::CollinearOverlap => ("monochromatic_overlap", None),
                SegRel::EndpointTouchInterior(p) => {
                    ("monochromatic_endpoint_touch", Some(p.clone()))
                }
                _ => unreachable!("non-conflicting relation in conflict list"),
            };
            verdict.push(Violation::new(
                kind,
                vec![
                    format!("e{}#{}", conflict.a.edge, conflict.a.copy),
                    format!("e{}#{}", conflict.b.edge, conflict.b.copy),
                ],
                witness,
            ));
        }
    }

    // A bare vertex sitting on a foreign edge's interior is reported as a
    // warning only; the definition constrains edges, not vertex placement.
    let mut warnings = Vec::new();
    for (&v, p) in &d.points {
        for (i, e) in g.edges.iter().enumerate() {
            if e.u == v || e.v == v {
                continue;
            }
            let s = d.segment_of(e);
            if point_in_interior(&s, p) {
                warnings.push(Violation::new(
                    "vertex_on_foreign_edge",
                    vec![format!("v{v}"), format!("e{i}")],
                    Some(p.clone()),
                ));
            }
        }
    }

    Ok(verdict.with_warnings(warnings))
}

/// A family of simple graphs over one shared vertex set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphFamily {
    pub vertices: Vec<VertexId>,
    /// Each member is a set of undirected edges (u < v).
    pub members: Vec<Vec<(VertexId, VertexId)>>,
}

impl GraphFamily {
    pub fn check(&self) -> Result<(), CertificateError> {
        let vset: BTreeSet<VertexId> = self.vertices.iter().copied().collect();
        for (index, member) in self.members.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &(u, v) in member {
                if !vset.contains(&u) {
                    return Err(CertificateError::ForeignVertex { index, v: u });
                }
                if !vset.contains(&v) {
                    return Err(CertificateError::ForeignVertex { index, v });
                }
                let key = (u.min(v), u.max(v));
                if u == v || !seen.insert(key) {
                    return Err(CertificateError::NotSimple { index, u, v });
                }
            }
        }
        Ok(())
    }

    fn member_graph(&self, index: usize) -> Multigraph {
        let edges = self.members[index]
            .iter()
            .map(|&(u, v)| crate::model::EdgeClass {
                u,
                v,
                multiplicity: 1,
                role: crate::model::EdgeRole::Plain,
            })
            .collect();
        Multigraph { vertices: self.vertices.clone(), edges }
    }
}

/// Accepts iff each member graph is individually plane under `d`.
pub fn verify_sge(f: &GraphFamily, d: &Drawing) -> Result<Verdict, CertificateError> {
    f.check()?;
    let mut verdict = Verdict::accept();
    for (index, _) in f.members.iter().enumerate() {
        let g = f.member_graph(index);
        d.check_for(&g)?;
        for conflict in conflict_pairs(&g, &d.clone())? {
            let (eu, ev) = (g.edges[conflict.a.edge as usize].clone(), g.edges[conflict.b.edge as usize].clone());
            let witness = match &conflict.relation {
                SegRel::ProperCross(p) | SegRel::EndpointTouchInterior(p) => Some(p.clone()),
                _ => None,
            };
            verdict.push(Violation::new(
                "member_not_plane",
                vec![
                    format!("g{index}"),
                    format!("({},{})", eu.u, eu.v),
                    format!("({},{})", ev.u, ev.v),
                ],
                witness,
            ));
        }
    }
    Ok(verdict)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SunflowerKind {
    /// Every edge is private to exactly one member.
    EmptySunflower,
    /// Public edges exist; every edge is in all members or in exactly one.
    SunflowerWithCenter,
    NotSunflower,
}

/// Classifies a family per the sunflower definitions.
pub fn verify_sunflower(f: &GraphFamily) -> Result<SunflowerKind, CertificateError> {
    f.check()?;
    let k = f.members.len();
    let mut counts: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for member in &f.members {
        for &(u, v) in member {
            *counts.entry((u.min(v), u.max(v))).or_insert(0) += 1;
        }
    }
    let mut any_public = false;
    for (_, count) in counts {
        if count == 1 {
            continue;
        }
        if count == k && k > 1 {
            any_public = true;
        } else {
            return Ok(SunflowerKind::NotSunflower);
        }
    }
    Ok(if any_public {
        SunflowerKind::SunflowerWithCenter
    } else {
        SunflowerKind::EmptySunflower
    })
}
