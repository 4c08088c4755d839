//! Shared data model: multigraphs with role-tagged edge classes, exact
//! straight-line drawings, and edge-instance colorings.

use crate::geom::{segment_relation, Point, SegRel, Segment};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

pub type VertexId = u32;
pub type EdgeId = u32;

/// Structural role an edge class plays in a reduction instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeRole {
    LongEdge,
    CrossingBox,
    TunnelBoundary,
    Blocker,
    Connector,
    Plain,
}

impl EdgeRole {
    pub fn as_str(&self) -> &'static str {
        match self {
            EdgeRole::LongEdge => "long_edge",
            EdgeRole::CrossingBox => "crossing_box",
            EdgeRole::TunnelBoundary => "tunnel_boundary",
            EdgeRole::Blocker => "blocker",
            EdgeRole::Connector => "connector",
            EdgeRole::Plain => "plain",
        }
    }

    pub fn parse(s: &str) -> Option<EdgeRole> {
        Some(match s {
            "long_edge" => EdgeRole::LongEdge,
            "crossing_box" => EdgeRole::CrossingBox,
            "tunnel_boundary" => EdgeRole::TunnelBoundary,
            "blocker" => EdgeRole::Blocker,
            "connector" => EdgeRole::Connector,
            "plain" => EdgeRole::Plain,
            _ => return None,
        })
    }
}

/// A bundle of parallel edges between two vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeClass {
    pub u: VertexId,
    pub v: VertexId,
    pub multiplicity: u32,
    pub role: EdgeRole,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeClass>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("edge {0} references undeclared vertex {1}")]
    UndeclaredVertex(EdgeId, VertexId),
    #[error("edge {0} is a self-loop at vertex {1}")]
    SelfLoop(EdgeId, VertexId),
    #[error("edge {0} has multiplicity 0")]
    ZeroMultiplicity(EdgeId),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
    #[error("drawing is missing vertex {0}")]
    MissingVertex(VertexId),
    #[error("drawing places vertices {0} and {1} at the same point")]
    CoincidentVertices(VertexId, VertexId),
}

impl Multigraph {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<EdgeClass>) -> Result<Self, ModelError> {
        let g = Multigraph { vertices, edges };
        g.check()?;
        Ok(g)
    }

    pub fn check(&self) -> Result<(), ModelError> {
        let mut seen = BTreeSet::new();
        for &v in &self.vertices {
            if !seen.insert(v) {
                return Err(ModelError::DuplicateVertex(v));
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            let id = i as EdgeId;
            if e.u == e.v {
                return Err(ModelError::SelfLoop(id, e.u));
            }
            if !seen.contains(&e.u) {
                return Err(ModelError::UndeclaredVertex(id, e.u));
            }
            if !seen.contains(&e.v) {
                return Err(ModelError::UndeclaredVertex(id, e.v));
            }
            if e.multiplicity == 0 {
                return Err(ModelError::ZeroMultiplicity(id));
            }
        }
        Ok(())
    }

    /// Total number of edge instances, counting multiplicity.
    pub fn instance_count(&self) -> u64 {
        self.edges.iter().map(|e| e.multiplicity as u64).sum()
    }

    /// Simple graph on the same vertices: one edge per adjacent pair.
    pub fn simple_edge_set(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.edges
            .iter()
            .map(|e| (e.u.min(e.v), e.u.max(e.v)))
            .collect()
    }
}

/// Exact vertex placement.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Drawing {
    pub points: BTreeMap<VertexId, Point>,
}

impl Drawing {
    pub fn new(points: BTreeMap<VertexId, Point>) -> Self {
        Drawing { points }
    }

    /// Check totality over `g`'s vertices and pairwise distinctness.
    pub fn check_for(&self, g: &Multigraph) -> Result<(), ModelError> {
        for &v in &g.vertices {
            if !self.points.contains_key(&v) {
                return Err(ModelError::MissingVertex(v));
            }
        }
        let mut by_point: BTreeMap<&Point, VertexId> = BTreeMap::new();
        for (&v, p) in &self.points {
            if let Some(&w) = by_point.get(p) {
                return Err(ModelError::CoincidentVertices(w, v));
            }
            by_point.insert(p, v);
        }
        Ok(())
    }

    pub fn segment_of(&self, e: &EdgeClass) -> Segment {
        Segment::new(self.points[&e.u].clone(), self.points[&e.v].clone())
    }
}

/// Identifies one parallel copy of an edge class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeInstance {
    pub edge: EdgeId,
    pub copy: u32,
}

/// Coloring of edge instances with colors 1..=t.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub colors: BTreeMap<EdgeInstance, u32>,
}

impl EdgeColoring {
    pub fn get(&self, edge: EdgeId, copy: u32) -> Option<u32> {
        self.colors.get(&EdgeInstance { edge, copy }).copied()
    }

    pub fn set(&mut self, edge: EdgeId, copy: u32, color: u32) {
        self.colors.insert(EdgeInstance { edge, copy }, color);
    }

    pub fn max_color(&self) -> u32 {
        self.colors.values().copied().max().unwrap_or(0)
    }
}

/// A geometric conflict between two edge instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conflict {
    pub a: EdgeInstance,
    pub b: EdgeInstance,
    pub relation: SegRel,
}

/// Every unordered pair of edge instances whose segments share a point other
/// than a common endpoint. Copies of one class always conflict (they overlap).
/// Output is sorted, independent of input order and parallel schedule.
pub fn conflict_pairs(g: &Multigraph, d: &Drawing) -> Result<Vec<Conflict>, ModelError> {
    g.check()?;
    d.check_for(g)?;

    let segs: Vec<Segment> = g.edges.iter().map(|e| d.segment_of(e)).collect();
    let boxes: Vec<(Point, Point)> = segs
        .iter()
        .map(|s| {
            let lo = Point::new(
                s.a.x.clone().min(s.b.x.clone()),
                s.a.y.clone().min(s.b.y.clone()),
            );
            let hi = Point::new(
                s.a.x.clone().max(s.b.x.clone()),
                s.a.y.clone().max(s.b.y.clone()),
            );
            (lo, hi)
        })
        .collect();

    let n = g.edges.len();
    let class_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();

    let mut conflicts: Vec<Conflict> = class_pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let mut local = Vec::new();
            if i == j {
                // Parallel copies of one class occupy the same segment and are
                // mutual overlap conflicts.
                let m = g.edges[i].multiplicity;
                for c1 in 0..m {
                    for c2 in (c1 + 1)..m {
                        local.push(Conflict {
                            a: EdgeInstance { edge: i as EdgeId, copy: c1 },
                            b: EdgeInstance { edge: j as EdgeId, copy: c2 },
                            relation: SegRel::CollinearOverlap,
                        });
                    }
                }
                return local.into_iter();
            }
            // Bounding-box rejection.
            let (alo, ahi) = &boxes[i];
            let (blo, bhi) = &boxes[j];
            if ahi.x < blo.x || bhi.x < alo.x || ahi.y < blo.y || bhi.y < alo.y {
                return Vec::new().into_iter();
            }
            let rel = segment_relation(&segs[i], &segs[j]).expect("nondegenerate by distinctness");
            let conflicting = !matches!(rel, SegRel::Disjoint | SegRel::SharedEndpoint);
            if conflicting {
                for c1 in 0..g.edges[i].multiplicity {
                    for c2 in 0..g.edges[j].multiplicity {
                        local.push(Conflict {
                            a: EdgeInstance { edge: i as EdgeId, copy: c1 },
                            b: EdgeInstance { edge: j as EdgeId, copy: c2 },
                            relation: rel.clone(),
                        });
                    }
                }
            }
            local.into_iter()
        })
        .collect();

    conflicts.sort_by_key(|c| (c.a, c.b));
    Ok(conflicts)
}

/// Convenience: K_n on the given points.
pub fn complete_graph(points: Vec<Point>) -> (Multigraph, Drawing) {
    let n = points.len() as u32;
    let vertices: Vec<VertexId> = (0..n).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push(EdgeClass { u, v, multiplicity: 1, role: EdgeRole::Plain });
        }
    }
    let drawing = Drawing::new(vertices.iter().cloned().zip(points).collect());
    (Multigraph { vertices, edges }, drawing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat_int;

    #[test]
    fn k4_convex_has_one_crossing_pair() {
        let (g, d) = complete_graph(vec![
            Point::ints(0, 0),
            Point::ints(4, 0),
            Point::ints(4, 4),
            Point::ints(0, 4),
        ]);
        let conflicts = conflict_pairs(&g, &d).unwrap();
        assert_eq!(conflicts.len(), 1);
        assert!(matches!(conflicts[0].relation, SegRel::ProperCross(_)));
    }

    #[test]
    fn path_no_conflicts() {
        let g = Multigraph::new(
            vec![0, 1, 2],
            vec![
                EdgeClass { u: 0, v: 1, multiplicity: 1, role: EdgeRole::Plain },
                EdgeClass { u: 1, v: 2, multiplicity: 1, role: EdgeRole::Plain },
            ],
        )
        .unwrap();
        let d = Drawing::new(
            [(0, Point::ints(0, 0)), (1, Point::ints(1, 2)), (2, Point::ints(2, 1))]
                .into_iter()
                .collect(),
        );
        assert!(conflict_pairs(&g, &d).unwrap().is_empty());
    }

    #[test]
    fn parallel_copies_conflict() {
        let g = Multigraph::new(
            vec![0, 1],
            vec![EdgeClass { u: 0, v: 1, multiplicity: 2, role: EdgeRole::Plain }],
        )
        .unwrap();
        let d = Drawing::new(
            [(0, Point::ints(0, 0)), (1, Point::ints(1, 0))].into_iter().collect(),
        );
        let conflicts = conflict_pairs(&g, &d).unwrap();
        assert_eq!(conflicts.len(), 1);
        assert_eq!(conflicts[0].relation, SegRel::CollinearOverlap);
    }

    #[test]
    fn scaling_invariance() {
        let (g, d) = complete_graph(vec![
            Point::ints(0, 0),
            Point::ints(4, 0),
            Point::ints(4, 4),
            Point::ints(0, 4),
            Point::ints(2, 1),
        ]);
        let before = conflict_pairs(&g, &d).unwrap();
        let scale = rat_int(10).pow(50);
        let scaled = Drawing::new(
            d.points
                .iter()
                .map(|(&v, p)| (v, Point::new(&p.x * &scale, &p.y * &scale)))
                .collect(),
        );
        let after = conflict_pairs(&g, &scaled).unwrap();
        assert_eq!(before.len(), after.len());
        for (x, y) in before.iter().zip(after.iter()) {
            assert_eq!((x.a, x.b), (y.a, y.b));
        }
    }
}
