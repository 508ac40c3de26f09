//! The bi-set functional `f(X) = d̂(X) + k·|w(X)|` and (2k,k)-connectivity.
//!
//! A graph on at least three vertices is (2k,k)-connected exactly when
//! `f(X) ≥ 2k` for every non-trivial bi-set `X` of its vertex set. A bi-set
//! with two or more wall vertices already has `f ≥ 2k`, so only walls of size
//! zero or one ever need inspecting. Both checkers below rely on that.
//!
//! * [`check`] and [`check_in_v`] decide with max-flow: `λ(u,v) ≥ 2k` for
//!   all pairs and `λ_{G-w}(u,v) ≥ k` for every deleted vertex `w`. A root
//!   is fixed and flows are run to every other terminal, which finds the
//!   minimum over all separating sets.
//! * [`check_bruteforce`] walks every candidate bi-set literally.
//!
//! With a designated vertex `s` ("connected in V"), bi-sets range over
//! `V = vertices - s` while `s` still carries edges; it behaves as a Steiner
//! node that may fall on either side of a cut.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::biset::BiSet;
use crate::error::{Error, Result};
use crate::flow::Dense;
use crate::multigraph::{MultiGraph, VertexId};
use crate::vset::VertexSet;

/// Default vertex bound for exhaustive bi-set enumeration.
pub const BRUTE_FORCE_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConnParams {
    k: u32,
}

impl ConnParams {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::pre("k must be at least 1"));
        }
        Ok(ConnParams { k })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The bound `2k` every non-trivial bi-set must reach.
    pub fn target(&self) -> u32 {
        2 * self.k
    }
}

/// Outcome of a connectivity check.
///
/// A failed check carries a violating non-trivial bi-set and its `f` value,
/// except on graphs with fewer than three vertices, which fail by definition
/// without any violating bi-set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityVerdict {
    pub ok: bool,
    pub witness: Option<BiSet>,
    pub f: Option<u32>,
    pub k: u32,
}

impl ConnectivityVerdict {
    fn pass(k: u32) -> Self {
        ConnectivityVerdict {
            ok: true,
            witness: None,
            f: None,
            k,
        }
    }

    fn too_small(k: u32) -> Self {
        ConnectivityVerdict {
            ok: false,
            witness: None,
            f: None,
            k,
        }
    }

    fn fail(k: u32, witness: BiSet, f: u32) -> Self {
        ConnectivityVerdict {
            ok: false,
            witness: Some(witness),
            f: Some(f),
            k,
        }
    }
}

/// Which bi-sets a checker ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroundMode {
    /// All vertices of the graph.
    Plain,
    /// All vertices except the designated one.
    InV(VertexId),
}

impl GroundMode {
    fn special(self) -> Option<VertexId> {
        match self {
            GroundMode::Plain => None,
            GroundMode::InV(s) => Some(s),
        }
    }
}

/// Number of edges `uv` with `u ∉ X_O` and `v ∈ X_I`. Vertices of `g`
/// outside the ground of `x` count as outside `X_O`.
pub fn entering_degree(g: &MultiGraph, x: &BiSet) -> Result<usize> {
    if !x.ground().is_subset(g.vertices()) {
        return Err(Error::GroundMismatch);
    }
    let (inner, outer) = (x.inner(), x.outer());
    Ok(g.edges()
        .filter(|e| {
            (inner.contains(e.v) && !outer.contains(e.u))
                || (inner.contains(e.u) && !outer.contains(e.v))
        })
        .count())
}

pub fn f_value(g: &MultiGraph, p: ConnParams, x: &BiSet) -> Result<usize> {
    Ok(entering_degree(g, x)? + p.k() as usize * x.wall().len())
}

/// Whether `x` meets the connectivity bound with equality.
pub fn is_tight(g: &MultiGraph, p: ConnParams, x: &BiSet) -> Result<bool> {
    if x.is_trivial() {
        return Err(Error::TrivialBiSet);
    }
    Ok(f_value(g, p, x)? == p.target() as usize)
}

/// Maximum number of edge-disjoint `u`–`v` paths.
pub fn local_edge_connectivity(g: &MultiGraph, u: VertexId, v: VertexId) -> Result<usize> {
    g.require(u)?;
    g.require(v)?;
    if u == v {
        return Err(Error::pre(
            "local edge connectivity needs two distinct vertices",
        ));
    }
    let d = Dense::new(g);
    let cap = g.edge_count() as u32 + 1;
    Ok(d.min_cut(&[d.idx(u)], &[d.idx(v)], None, cap).value as usize)
}

/// Flow-based (2k,k)-connectivity of `g`.
pub fn check(g: &MultiGraph, p: ConnParams) -> ConnectivityVerdict {
    if g.vertex_count() < 3 {
        return ConnectivityVerdict::too_small(p.k());
    }
    flow_verdict(g, None, p)
}

/// Flow-based (2k,k)-connectivity in `V = vertices - s`.
pub fn check_in_v(h: &MultiGraph, s: VertexId, p: ConnParams) -> Result<ConnectivityVerdict> {
    h.require(s)?;
    if h.vertex_count() < 4 {
        return Err(Error::pre("connectivity in V needs |V| ≥ 3"));
    }
    Ok(flow_verdict(h, Some(s), p))
}

/// Literal check over every non-trivial bi-set with a wall of size at most
/// one, reporting the first violation in enumeration order: empty wall
/// first, then singleton walls by ascending id; inner sets in binary-counter
/// order over the ground sorted by id.
pub fn check_bruteforce(
    g: &MultiGraph,
    p: ConnParams,
    mode: GroundMode,
) -> Result<ConnectivityVerdict> {
    check_bruteforce_with_limit(g, p, mode, BRUTE_FORCE_LIMIT)
}

pub fn check_bruteforce_with_limit(
    g: &MultiGraph,
    p: ConnParams,
    mode: GroundMode,
    limit: usize,
) -> Result<ConnectivityVerdict> {
    let space = SmallBiSets::new(g, mode.special(), limit)?;
    if space.ground.len() < 3 {
        return Ok(ConnectivityVerdict::too_small(p.k()));
    }
    let target = p.target();
    let found = space.walk(p.k(), |inner, wall, f| {
        if f < target {
            ControlFlow::Break((inner, wall, f))
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(match found {
        Some((inner, wall, f)) => ConnectivityVerdict::fail(p.k(), space.biset(inner, wall), f),
        None => ConnectivityVerdict::pass(p.k()),
    })
}

/// Fast yes/no used by the search procedures.
pub(crate) fn is_connected(g: &MultiGraph, s: Option<VertexId>, p: ConnParams) -> bool {
    let need = if s.is_some() { 4 } else { 3 };
    g.vertex_count() >= need && flow_violation(&Dense::new(g), s, p.k()).is_none()
}

fn flow_verdict(g: &MultiGraph, s: Option<VertexId>, p: ConnParams) -> ConnectivityVerdict {
    let d = Dense::new(g);
    match flow_violation(&d, s, p.k()) {
        None => ConnectivityVerdict::pass(p.k()),
        Some(v) => {
            let mut ground = g.vertices().clone();
            if let Some(s) = s {
                ground.remove(s);
            }
            let inner = d.to_set(&v.inner);
            let x = match v.wall {
                None => BiSet::set(ground, inner),
                Some(w) => BiSet::with_wall(ground, inner, d.ids[w]),
            }
            .expect("witness is a valid bi-set");
            ConnectivityVerdict::fail(p.k(), x, v.f)
        }
    }
}

struct Violation {
    inner: Vec<bool>,
    wall: Option<usize>,
    f: u32,
}

fn flow_violation(d: &Dense, s: Option<VertexId>, k: u32) -> Option<Violation> {
    let s = s.map(|s| d.idx(s));
    let terminals: Vec<usize> = (0..d.n).filter(|&i| Some(i) != s).collect();

    let root = terminals[0];
    for &v in &terminals[1..] {
        let cut = d.min_cut(&[root], &[v], None, 2 * k);
        if cut.value < 2 * k {
            let side = cut.source_side.expect("side below limit");
            return Some(Violation {
                inner: inner_side(side, s, None),
                wall: None,
                f: cut.value,
            });
        }
    }
    for &w in &terminals {
        let rest: Vec<usize> = terminals.iter().copied().filter(|&x| x != w).collect();
        let root = rest[0];
        for &v in &rest[1..] {
            let cut = d.min_cut(&[root], &[v], Some(w), k);
            if cut.value < k {
                let side = cut.source_side.expect("side below limit");
                return Some(Violation {
                    inner: inner_side(side, s, Some(w)),
                    wall: Some(w),
                    f: cut.value + k,
                });
            }
        }
    }
    None
}

/// Turns a cut side into the inner set of a bi-set of `V`: if the side holds
/// `s`, the opposite side (minus the wall) is used instead.
fn inner_side(mut side: Vec<bool>, s: Option<usize>, wall: Option<usize>) -> Vec<bool> {
    if let Some(s) = s.filter(|&s| side[s]) {
        for (i, x) in side.iter_mut().enumerate() {
            *x = !*x && Some(i) != wall && i != s;
        }
    }
    side
}

/// Exhaustive walk over the bi-sets with wall size ≤ 1 of a small ground.
pub(crate) struct SmallBiSets {
    d: Dense,
    /// Dense indices of the ground members, ascending by vertex id.
    pub ground: Vec<usize>,
    ground_set: VertexSet,
    rowsum: Vec<u32>,
}

impl SmallBiSets {
    pub fn new(g: &MultiGraph, s: Option<VertexId>, limit: usize) -> Result<Self> {
        if let Some(s) = s {
            g.require(s)?;
        }
        let d = Dense::new(g);
        let ground: Vec<usize> = (0..d.n).filter(|&i| s != Some(d.ids[i])).collect();
        if ground.len() > limit.min(63) {
            return Err(Error::TooLarge {
                what: "ground set",
                size: ground.len(),
                limit: limit.min(63),
            });
        }
        let rowsum = (0..d.n)
            .map(|i| (0..d.n).map(|j| d.m(i, j)).sum())
            .collect();
        let ground_set = ground.iter().map(|&i| d.ids[i]).collect();
        Ok(SmallBiSets {
            d,
            ground,
            ground_set,
            rowsum,
        })
    }

    /// Entering degree of `(inner + wall, inner)`, masks over ground positions.
    pub fn entering(&self, inner: u64, wall: Option<usize>) -> u32 {
        let mut outer_idx: Vec<usize> = self.members(inner).collect();
        if let Some(w) = wall {
            outer_idx.push(self.ground[w]);
        }
        self.members(inner)
            .map(|i| self.rowsum[i] - outer_idx.iter().map(|&j| self.d.m(i, j)).sum::<u32>())
            .sum()
    }

    fn members(&self, mask: u64) -> impl Iterator<Item = usize> + '_ {
        self.ground
            .iter()
            .enumerate()
            .filter(move |(p, _)| mask >> p & 1 == 1)
            .map(|(_, &i)| i)
    }

    /// Visits `(inner mask, wall position, f)` for every non-trivial bi-set
    /// with at most one wall vertex, in the documented order.
    pub fn walk<B>(
        &self,
        k: u32,
        mut visit: impl FnMut(u64, Option<usize>, u32) -> ControlFlow<B>,
    ) -> Option<B> {
        let n = self.ground.len();
        let full = (1u64 << n) - 1;
        for mask in 1..full {
            if let ControlFlow::Break(b) = visit(mask, None, self.entering(mask, None)) {
                return Some(b);
            }
        }
        for w in 0..n {
            let others = full & !(1 << w);
            // binary counter over the positions other than w
            let free: Vec<usize> = (0..n).filter(|&p| p != w).collect();
            for code in 1..(1u64 << free.len()) {
                let inner = free
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| code >> b & 1 == 1)
                    .fold(0u64, |m, (_, &p)| m | 1 << p);
                if inner == others {
                    continue; // outer would be the whole ground
                }
                let f = self.entering(inner, Some(w)) + k;
                if let ControlFlow::Break(b) = visit(inner, Some(w), f) {
                    return Some(b);
                }
            }
        }
        None
    }

    pub fn biset(&self, inner: u64, wall: Option<usize>) -> BiSet {
        let inner_set: VertexSet = self.members(inner).map(|i| self.d.ids[i]).collect();
        match wall {
            None => BiSet::set(self.ground_set.clone(), inner_set),
            Some(w) => BiSet::with_wall(
                self.ground_set.clone(),
                inner_set,
                self.d.ids[self.ground[w]],
            ),
        }
        .expect("enumerated bi-set is valid")
    }
}
