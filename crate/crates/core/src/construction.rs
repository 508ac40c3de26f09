//! Building (2k,k)-connected graphs for even `k`.
//!
//! Every (2k,k)-connected graph with even `k` arises from `kK3` (a triangle
//! with `k` parallel edges per side) by two operations:
//!
//! * add an edge (possibly a loop);
//! * pinch a set `F` of `k` edges with `d_F(v) ≤ k` for every vertex: each
//!   edge of `F` is subdivided and the subdivision points are merged into one
//!   new vertex of degree `2k`.
//!
//! [`generate`] applies random steps from a seed. [`decompose`] runs the
//! other direction, deleting removable edges and undoing pinches by complete
//! splittings at degree-2k vertices, and returns a trace that rebuilds the
//! input from `kK3`.
//!
//! Traces are JSON lines, one step per line:
//!
//! ```text
//! {"op":"add","u":0,"v":2}
//! {"op":"pinch","edges":[0,3],"new":3}
//! ```
//!
//! Edge ids in a pinch refer to the graph at that point of the replay. When
//! the base triangle is not on vertices `0, 1, 2`, a first line
//! `{"op":"base","vertices":[a,b,c]}` names it.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::connectivity::{self, ConnParams};
use crate::error::{Error, Result};
use crate::multigraph::{Edge, EdgeId, MultiGraph, VertexId};
use crate::splitting::{complete_splitting, SplitOutcome};

/// Random pinch sets are drawn at most this many times per step before the
/// step falls back to adding an edge.
pub const PINCH_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum ConstructionStep {
    #[serde(rename = "add")]
    AddEdge { u: VertexId, v: VertexId },
    Pinch {
        edges: Vec<EdgeId>,
        #[serde(rename = "new")]
        new_vertex: VertexId,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub k: ConnParams,
    /// Vertex ids of the starting triangle.
    pub base: [VertexId; 3],
    pub steps: Vec<ConstructionStep>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
enum TraceLine {
    Base {
        vertices: [VertexId; 3],
    },
    #[serde(untagged)]
    Step(ConstructionStep),
}

pub const DEFAULT_BASE: [VertexId; 3] = [VertexId(0), VertexId(1), VertexId(2)];

impl ConstructionTrace {
    pub fn new(k: ConnParams) -> Self {
        ConstructionTrace {
            k,
            base: DEFAULT_BASE,
            steps: Vec::new(),
        }
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        if self.base != DEFAULT_BASE {
            let line = TraceLine::Base {
                vertices: self.base,
            };
            out.push_str(&serde_json::to_string(&line).expect("serializable"));
            out.push('\n');
        }
        for step in &self.steps {
            out.push_str(&serde_json::to_string(step).expect("serializable"));
            out.push('\n');
        }
        out
    }

    /// Parses JSON lines; blank lines are skipped and a `base` line may only
    /// come first.
    pub fn from_jsonl(text: &str, k: ConnParams) -> Result<Self> {
        let mut trace = ConstructionTrace::new(k);
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let parsed: TraceLine = serde_json::from_str(line).map_err(|e| Error::Parse {
                line: i + 1,
                message: e.to_string(),
            })?;
            match parsed {
                TraceLine::Base { vertices } if trace.steps.is_empty() => trace.base = vertices,
                TraceLine::Base { .. } => {
                    return Err(Error::Parse {
                        line: i + 1,
                        message: "base line must precede all steps".into(),
                    })
                }
                TraceLine::Step(step) => trace.steps.push(step),
            }
        }
        Ok(trace)
    }
}

/// `kK3` on vertices 0, 1, 2 with edges ordered 01, 02, 12.
pub fn k_k3(p: ConnParams) -> MultiGraph {
    k_k3_on(p, DEFAULT_BASE).expect("distinct default labels")
}

fn k_k3_on(p: ConnParams, base: [VertexId; 3]) -> Result<MultiGraph> {
    let mut g = MultiGraph::new();
    for v in base {
        g.add_vertex(v)?;
    }
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        for _ in 0..p.k() {
            g.add_edge(base[a], base[b])?;
        }
    }
    Ok(g)
}

/// What a pinch changed, so that it can be undone exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinchRecord {
    pub new_vertex: VertexId,
    /// Each pinched edge with the ids of its two halves.
    pub halves: Vec<(Edge, EdgeId, EdgeId)>,
}

pub fn apply_step(g: &MultiGraph, p: ConnParams, step: &ConstructionStep) -> Result<MultiGraph> {
    match step {
        ConstructionStep::AddEdge { u, v } => {
            let mut h = g.clone();
            h.add_edge(*u, *v)?;
            Ok(h)
        }
        ConstructionStep::Pinch { edges, new_vertex } => {
            pinch(g, p, edges, *new_vertex).map(|(h, _)| h)
        }
    }
}

/// Subdivides each edge of `edges` through `new_vertex`. Edge `xy` becomes
/// `new–x` then `new–y`, both with fresh ids, in the order given.
pub fn pinch(
    g: &MultiGraph,
    p: ConnParams,
    edges: &[EdgeId],
    new_vertex: VertexId,
) -> Result<(MultiGraph, PinchRecord)> {
    if edges.len() != p.k() as usize {
        return Err(Error::pre(format!(
            "a pinch takes exactly k = {} edges, got {}",
            p.k(),
            edges.len()
        )));
    }
    let mut chosen = Vec::with_capacity(edges.len());
    for (i, &id) in edges.iter().enumerate() {
        if edges[..i].contains(&id) {
            return Err(Error::pre(format!("edge {id} listed twice")));
        }
        chosen.push(*g.edge(id).ok_or(Error::UnknownEdge(id))?);
    }
    if let Some(v) = pinch_overload(&chosen, p.k()) {
        return Err(Error::pre(format!("d_F({v}) exceeds k = {}", p.k())));
    }
    let mut h = g.clone();
    h.add_vertex(new_vertex)?;
    let mut halves = Vec::with_capacity(chosen.len());
    for e in chosen {
        h.remove_edge(e.id)?;
        let a = h.add_edge(new_vertex, e.u)?;
        let b = h.add_edge(new_vertex, e.v)?;
        halves.push((e, a, b));
    }
    Ok((h, PinchRecord { new_vertex, halves }))
}

/// Undoes [`pinch`]: splits the halves back together under their old ids
/// and removes the pinch vertex.
pub fn unpinch(g: &MultiGraph, record: &PinchRecord) -> Result<MultiGraph> {
    let mut h = g.clone();
    for &(e, a, b) in &record.halves {
        h.remove_edge(a)?;
        h.remove_edge(b)?;
        h.insert_edge(e)?;
    }
    let rest = h.delete_vertex(record.new_vertex)?;
    if !rest.is_empty() {
        return Err(Error::pre("pinch vertex has edges outside the record"));
    }
    Ok(h)
}

/// First vertex with `d_F(v) > k`, loops counting twice.
fn pinch_overload(f: &[Edge], k: u32) -> Option<VertexId> {
    let mut load: std::collections::BTreeMap<VertexId, u32> = Default::default();
    for e in f {
        *load.entry(e.u).or_default() += 1;
        *load.entry(e.v).or_default() += 1;
    }
    load.into_iter().find(|&(_, d)| d > k).map(|(v, _)| v)
}

pub fn replay(p: ConnParams, trace: &ConstructionTrace) -> Result<MultiGraph> {
    let mut g = k_k3_on(p, trace.base)?;
    for step in &trace.steps {
        g = apply_step(&g, p, step)?;
    }
    Ok(g)
}

fn require_even(p: ConnParams) -> Result<()> {
    if p.k() % 2 == 1 {
        return Err(Error::OddK { k: p.k() });
    }
    Ok(())
}

/// Starts from `kK3` and applies `steps` random steps. Each step is an edge
/// addition or a pinch with equal probability; pinch sets are sampled
/// uniformly among `k`-subsets of the edges until `d_F(v) ≤ k` holds.
pub fn generate(p: ConnParams, steps: usize, seed: u64) -> Result<(MultiGraph, ConstructionTrace)> {
    require_even(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = k_k3(p);
    let mut trace = ConstructionTrace::new(p);
    for _ in 0..steps {
        let step = if rng.gen_bool(0.5) {
            random_pinch(&g, p, &mut rng)
        } else {
            None
        };
        let step = step.unwrap_or_else(|| {
            let vs = g.vertices().to_vec();
            let u = vs[rng.gen_range(0..vs.len())];
            let v = vs[rng.gen_range(0..vs.len())];
            ConstructionStep::AddEdge { u, v }
        });
        g = apply_step(&g, p, &step)?;
        trace.steps.push(step);
    }
    Ok((g, trace))
}

fn random_pinch(g: &MultiGraph, p: ConnParams, rng: &mut ChaCha8Rng) -> Option<ConstructionStep> {
    let all: Vec<Edge> = g.edges().copied().collect();
    let k = p.k() as usize;
    for _ in 0..PINCH_ATTEMPTS {
        let mut idx = sample(rng, all.len(), k).into_vec();
        idx.sort_unstable();
        let f: Vec<Edge> = idx.iter().map(|&i| all[i]).collect();
        if pinch_overload(&f, p.k()).is_none() {
            return Some(ConstructionStep::Pinch {
                edges: f.iter().map(|e| e.id).collect(),
                new_vertex: g.fresh_vertex_id(),
            });
        }
    }
    None
}

/// A step recorded while taking the graph apart.
enum Reverse {
    Deleted(VertexId, VertexId),
    Split {
        vertex: VertexId,
        pairs: Vec<(VertexId, VertexId)>,
    },
}

/// Reduces a (2k,k)-connected graph to `kK3` and returns the trace that
/// rebuilds it.
///
/// Removable edges are deleted in ascending id order; in the resulting
/// minimal graph the degree-2k vertices are tried in ascending order until
/// one admits a complete admissible splitting, which undoes a pinch. For
/// even `k` such a vertex always exists, so failing to find one is a
/// [`Error::Defect`]. Replaying the trace gives the same vertex ids and the
/// same edge multiset; edge ids follow the replay's own numbering.
pub fn decompose(g: &MultiGraph, p: ConnParams) -> Result<ConstructionTrace> {
    require_even(p)?;
    let verdict = connectivity::check(g, p);
    if !verdict.ok {
        return Err(Error::pre("input is not (2k,k)-connected"));
    }
    let mut cur = g.clone();
    let mut reverse = Vec::new();
    loop {
        // Deleting edges only lowers f, so an edge kept once stays needed.
        let ids: Vec<EdgeId> = cur.edges().map(|e| e.id).collect();
        for id in ids {
            let without = cur.without_edge(id)?;
            if connectivity::is_connected(&without, None, p) {
                let e = cur.edge(id).expect("listed");
                reverse.push(Reverse::Deleted(e.u, e.v));
                cur = without;
            }
        }
        if cur.vertex_count() == 3 {
            break;
        }
        let (vertex, trace) = split_some_vertex(&cur, p)?;
        let pairs: Vec<(VertexId, VertexId)> =
            trace.pairs().iter().map(|pr| (pr.u, pr.v)).collect();
        reverse.push(Reverse::Split { vertex, pairs });
        cur = trace.final_graph;
    }
    let base: Vec<VertexId> = cur.vertices().to_vec();
    let base = [base[0], base[1], base[2]];
    if cur.edge_multiset() != k_k3_on(p, base)?.edge_multiset() {
        return Err(Error::defect("minimal graph on three vertices is not kK3"));
    }
    forward_trace(p, base, reverse)
}

fn split_some_vertex(
    cur: &MultiGraph,
    p: ConnParams,
) -> Result<(VertexId, crate::splitting::SplitTrace)> {
    let two_k = p.target() as usize;
    for v in cur.vertices().iter() {
        if cur.degree(v)? != two_k {
            continue;
        }
        if let SplitOutcome::Complete(trace) = complete_splitting(cur, v, p)? {
            for u in cur.neighbors(v).iter() {
                if cur.multiplicity(v, u) > p.k() as usize {
                    return Err(Error::defect(format!(
                        "vertex {v} of degree 2k has more than k edges to {u}"
                    )));
                }
            }
            return Ok((v, trace));
        }
    }
    Err(Error::defect(
        "no degree-2k vertex of a minimal graph admits a complete splitting",
    ))
}

/// Replays the reversed record on `kK3`, naming for every pinch the
/// lowest-id unused edges with the required endpoints.
fn forward_trace(
    p: ConnParams,
    base: [VertexId; 3],
    mut reverse: Vec<Reverse>,
) -> Result<ConstructionTrace> {
    reverse.reverse();
    let mut g = k_k3_on(p, base)?;
    let mut trace = ConstructionTrace {
        k: p,
        base,
        steps: Vec::with_capacity(reverse.len()),
    };
    for r in reverse {
        let step = match r {
            Reverse::Deleted(u, v) => ConstructionStep::AddEdge { u, v },
            Reverse::Split { vertex, pairs } => {
                let mut edges: Vec<EdgeId> = Vec::with_capacity(pairs.len());
                for (u, v) in pairs {
                    let id = g
                        .edges_between(u, v)
                        .into_iter()
                        .find(|id| !edges.contains(id))
                        .ok_or_else(|| Error::defect("pinch edge missing during replay"))?;
                    edges.push(id);
                }
                ConstructionStep::Pinch {
                    edges,
                    new_vertex: vertex,
                }
            }
        };
        g = apply_step(&g, p, &step)?;
        trace.steps.push(step);
    }
    Ok(trace)
}
