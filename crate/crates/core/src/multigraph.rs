//! Undirected multigraphs with loops and parallel edges.
//!
//! Every edge carries a stable [`EdgeId`] so that splitting, pinching and
//! deletion sequences can be replayed exactly. Iteration over vertices and
//! edges is always in ascending id order.
//!
//! Cut conventions: a loop adds 2 to the degree of its vertex but is never
//! counted by [`MultiGraph::cross_degree`] or [`MultiGraph::cut_degree`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vset::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An edge with endpoints stored as `u <= v`; `u == v` is a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn new(id: EdgeId, a: VertexId, b: VertexId) -> Self {
        Edge {
            id,
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn is_incident(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite to `x`, or `None` if `x` is not an endpoint.
    pub fn other(&self, x: VertexId) -> Option<VertexId> {
        if self.u == x {
            Some(self.v)
        } else if self.v == x {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }
}

#[derive(Debug, Clone, Default)]
pub struct MultiGraph {
    vertices: VertexSet,
    edges: BTreeMap<EdgeId, Edge>,
    next_edge: u32,
}

/// Structural equality: same vertex ids and same edges with the same ids.
impl PartialEq for MultiGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for MultiGraph {}

impl MultiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// A graph on vertices `0..n` and no edges.
    pub fn with_vertices(n: u32) -> Self {
        MultiGraph {
            vertices: (0..n).map(VertexId).collect(),
            ..Self::default()
        }
    }

    /// Builds a graph on `0..n` from an edge list; edge ids follow list order.
    pub fn from_edges(n: u32, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = Self::with_vertices(n);
        for &(a, b) in edges {
            g.add_edge(VertexId(a), VertexId(b))?;
        }
        Ok(g)
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(v)
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.values()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.get(&id)
    }

    /// Smallest id larger than every vertex id in use.
    pub fn fresh_vertex_id(&self) -> VertexId {
        VertexId(self.vertices.iter().last().map_or(0, |v| v.0 + 1))
    }

    pub fn add_vertex(&mut self, v: VertexId) -> Result<()> {
        if !self.vertices.insert(v) {
            return Err(Error::DuplicateVertex(v));
        }
        Ok(())
    }

    pub fn add_fresh_vertex(&mut self) -> VertexId {
        let v = self.fresh_vertex_id();
        self.vertices.insert(v);
        v
    }

    /// Adds an edge with the next unused edge id.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<EdgeId> {
        self.require(a)?;
        self.require(b)?;
        let id = EdgeId(self.next_edge);
        self.next_edge += 1;
        self.edges.insert(id, Edge::new(id, a, b));
        Ok(id)
    }

    /// Re-inserts an edge under its own id, e.g. to undo a removal.
    pub fn insert_edge(&mut self, edge: Edge) -> Result<()> {
        self.require(edge.u)?;
        self.require(edge.v)?;
        if self.edges.contains_key(&edge.id) {
            return Err(Error::DuplicateEdge(edge.id));
        }
        self.next_edge = self.next_edge.max(edge.id.0 + 1);
        self.edges
            .insert(edge.id, Edge::new(edge.id, edge.u, edge.v));
        Ok(())
    }

    pub fn remove_edge(&mut self, id: EdgeId) -> Result<Edge> {
        self.edges.remove(&id).ok_or(Error::UnknownEdge(id))
    }

    /// Removes `v` together with its incident edges, which are returned in
    /// ascending id order.
    pub fn delete_vertex(&mut self, v: VertexId) -> Result<Vec<Edge>> {
        self.require(v)?;
        let incident: Vec<EdgeId> = self
            .edges
            .values()
            .filter(|e| e.is_incident(v))
            .map(|e| e.id)
            .collect();
        let removed = incident
            .into_iter()
            .filter_map(|id| self.edges.remove(&id))
            .collect();
        self.vertices.remove(v);
        Ok(removed)
    }

    pub fn without_vertex(&self, v: VertexId) -> Result<Self> {
        let mut g = self.clone();
        g.delete_vertex(v)?;
        Ok(g)
    }

    pub fn without_edge(&self, id: EdgeId) -> Result<Self> {
        let mut g = self.clone();
        g.remove_edge(id)?;
        Ok(g)
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.require(v)?;
        Ok(self
            .edges
            .values()
            .map(|e| match (e.u == v, e.v == v) {
                (true, true) => 2,
                (true, false) | (false, true) => 1,
                _ => 0,
            })
            .sum())
    }

    /// Number of edges joining `a` and `b`; for `a == b`, the number of loops.
    pub fn multiplicity(&self, a: VertexId, b: VertexId) -> usize {
        let (u, v) = (a.min(b), a.max(b));
        self.edges.values().filter(|e| e.u == u && e.v == v).count()
    }

    /// Ids of the edges joining `a` and `b`, ascending.
    pub fn edges_between(&self, a: VertexId, b: VertexId) -> Vec<EdgeId> {
        let (u, v) = (a.min(b), a.max(b));
        self.edges
            .values()
            .filter(|e| e.u == u && e.v == v)
            .map(|e| e.id)
            .collect()
    }

    /// Neighbours of `v` other than `v` itself.
    pub fn neighbors(&self, v: VertexId) -> VertexSet {
        self.edges
            .values()
            .filter(|e| !e.is_loop())
            .filter_map(|e| e.other(v))
            .collect()
    }

    /// Edges with one end in `U \ W` and the other in `W \ U`.
    pub fn cross_degree(&self, us: &VertexSet, ws: &VertexSet) -> Result<usize> {
        self.require_subset(us)?;
        self.require_subset(ws)?;
        let a = us.difference(ws);
        let b = ws.difference(us);
        Ok(self
            .edges
            .values()
            .filter(|e| {
                (a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u))
            })
            .count())
    }

    /// Number of edges leaving `U`; `U` must be a proper nonempty subset.
    pub fn cut_degree(&self, us: &VertexSet) -> Result<usize> {
        self.require_subset(us)?;
        if us.is_empty() || us.len() == self.vertices.len() {
            return Err(Error::TrivialSet);
        }
        self.cross_degree(us, &self.vertices.difference(us))
    }

    /// Edges as sorted endpoint pairs, ignoring ids.
    pub fn edge_multiset(&self) -> Vec<(VertexId, VertexId)> {
        let mut pairs: Vec<_> = self.edges.values().map(Edge::endpoints).collect();
        pairs.sort_unstable();
        pairs
    }

    /// Parses the text format: a header `n m`, then `m` lines `u v` over
    /// vertices `0..n`. `#` starts a comment. Edge ids follow line order.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header `n m`".into(),
        })?;
        let (n, m) = parse_pair(hline, header, "header")?;
        let mut g = Self::with_vertices(n);
        for (line, body) in lines {
            let (u, v) = parse_pair(line, body, "edge")?;
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("endpoint out of range 0..{n} in `{body}`"),
                });
            }
            if g.edge_count() == m as usize {
                return Err(Error::Parse {
                    line,
                    message: format!("more than the declared {m} edges"),
                });
            }
            g.add_edge(VertexId(u), VertexId(v))?;
        }
        if g.edge_count() != m as usize {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                message: format!("declared {m} edges, found {}", g.edge_count()),
            });
        }
        Ok(g)
    }

    /// Renders the text format. Vertex ids are compacted to `0..n` in
    /// ascending order and edges are sorted by (min endpoint, max endpoint,
    /// edge id).
    pub fn to_text(&self) -> String {
        let index: BTreeMap<VertexId, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let mut rows: Vec<(usize, usize, EdgeId)> = self
            .edges
            .values()
            .map(|e| (index[&e.u], index[&e.v], e.id))
            .collect();
        rows.sort_unstable();
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v, _) in rows {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub(crate) fn require(&self, v: VertexId) -> Result<()> {
        if self.vertices.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub(crate) fn require_subset(&self, s: &VertexSet) -> Result<()> {
        match s.difference(&self.vertices).first() {
            Some(v) => Err(Error::UnknownVertex(v)),
            None => Ok(()),
        }
    }
}

fn parse_pair(line: usize, body: &str, what: &str) -> Result<(u32, u32)> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    let bad = || Error::Parse {
        line,
        message: format!("malformed {what} `{body}`, expected two non-negative integers"),
    };
    if fields.len() != 2 {
        return Err(bad());
    }
    let a = fields[0].parse().map_err(|_| bad())?;
    let b = fields[1].parse().map_err(|_| bad())?;
    Ok((a, b))
}
