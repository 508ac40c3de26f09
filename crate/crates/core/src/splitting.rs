//! Splitting-off at a designated vertex `s`.
//!
//! Splitting the pair `(su, sv)` replaces those two edges by one edge `uv`.
//! The pair is *admissible* when the graph stays (2k,k)-connected in
//! `V = vertices - s`. A non-admissible pair always has a *blocking* bi-set
//! of `V`:
//!
//! * dangerous: `u, v ∈ X_I` and `f(X) ≤ 2k + 1`;
//! * critical: one of `u, v` in `X_I`, the other the single wall vertex, and
//!   `f(X) ≤ 2k`.
//!
//! Either way the wall has at most one vertex and `f(X) - 2k ≤ d(s, X_I) - 1`.
//!
//! A *t-star obstacle* is a neighbour `t` of `s` with odd `d(s,t)` together
//! with pairwise innerly-disjoint critical pairs of wall `{t}` whose inner
//! sets cover every other neighbour of `s`. For `k ≥ 2` and even `d(s) ≥ 4`
//! a complete admissible splitting exists exactly when no obstacle does, and
//! [`complete_splitting`] returns one or the other.
//!
//! Loops at `s` enter no bi-set of `V` and play no part in splitting; they
//! are dropped together with `s`.

use std::fmt;

use serde::ser::{SerializeStruct, SerializeTuple, Serializer};
use serde::Serialize;

use crate::biset::BiSet;
use crate::connectivity::{self, f_value, ConnParams, BRUTE_FORCE_LIMIT};
use crate::error::{Error, Result};
use crate::flow::Dense;
use crate::multigraph::{Edge, EdgeId, MultiGraph, VertexId};
use crate::vset::VertexSet;

/// An unordered pair of `s`-neighbours, stored as `u <= v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplitPair {
    pub u: VertexId,
    pub v: VertexId,
}

impl SplitPair {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        SplitPair {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn contains(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

impl Serialize for SplitPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.u)?;
        t.serialize_element(&self.v)?;
        t.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    Dangerous,
    Critical,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockingBiSet {
    pub biset: BiSet,
    pub kind: BlockKind,
    pub f: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstacle {
    pub t: VertexId,
    pub members: Vec<BiSet>,
}

impl Serialize for Obstacle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Obstacle", 2)?;
        st.serialize_field("t", &self.t)?;
        st.serialize_field("members", &self.members)?;
        st.end()
    }
}

/// What one split changed, enough to undo it exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitRecord {
    pub pair: SplitPair,
    pub removed: [Edge; 2],
    pub added: Edge,
}

/// A complete splitting-off at `s`: the pairs in the order they were split,
/// and the resulting graph with `s` deleted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitTrace {
    pub s: VertexId,
    pub records: Vec<SplitRecord>,
    pub final_graph: MultiGraph,
}

impl SplitTrace {
    pub fn pairs(&self) -> Vec<SplitPair> {
        self.records.iter().map(|r| r.pair).collect()
    }

    /// Ids, in `final_graph`, of the edges created by the splits.
    pub fn added_edges(&self) -> Vec<EdgeId> {
        self.records.iter().map(|r| r.added.id).collect()
    }

    /// Re-applies the pairs to `h` and deletes `s`.
    pub fn replay(&self, h: &MultiGraph) -> Result<MultiGraph> {
        let mut g = h.clone();
        for r in &self.records {
            g = split_pair(&g, self.s, r.pair)?;
        }
        g.delete_vertex(self.s)?;
        Ok(g)
    }
}

impl Serialize for SplitTrace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SplitTrace", 2)?;
        st.serialize_field("s", &self.s)?;
        st.serialize_field("pairs", &self.pairs())?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitOutcome {
    Complete(SplitTrace),
    Obstacle(Obstacle),
}

/// Why a family fails to be a t-star obstacle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstacleViolation {
    NotConnectedInV,
    OddDegree { degree: usize },
    HubNotNeighbor,
    HubEvenMultiplicity { multiplicity: usize },
    WrongGround { member: usize },
    WrongWall { member: usize },
    NotCritical { member: usize },
    NotInnerlyDisjoint { first: usize, second: usize },
    Uncovered { vertex: VertexId },
    TooFewMembers { count: usize },
    HubEdgeNotRemovable,
}

impl fmt::Display for ObstacleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ObstacleViolation::*;
        match self {
            NotConnectedInV => write!(f, "graph is not (2k,k)-connected in V"),
            OddDegree { degree } => write!(f, "d(s) = {degree} is odd"),
            HubNotNeighbor => write!(f, "t is not a neighbour of s"),
            HubEvenMultiplicity { multiplicity } => write!(f, "d(s,t) = {multiplicity} is even"),
            WrongGround { member } => write!(f, "member {member} is not a bi-set of V"),
            WrongWall { member } => write!(f, "member {member} does not have wall {{t}}"),
            NotCritical { member } => write!(f, "member {member} is not a critical pair"),
            NotInnerlyDisjoint { first, second } => {
                write!(f, "members {first} and {second} share inner vertices")
            }
            Uncovered { vertex } => write!(f, "neighbour {vertex} of s is in no inner set"),
            TooFewMembers { count } => write!(f, "only {count} members, at least 3 required"),
            HubEdgeNotRemovable => write!(f, "removing one st edge breaks connectivity in V"),
        }
    }
}

/// Replaces the lowest-id `su` and `sv` edges by a new edge `uv` (a loop
/// when `u == v`). All other edges keep their ids.
pub fn split_pair(h: &MultiGraph, s: VertexId, pair: SplitPair) -> Result<MultiGraph> {
    split_pair_recorded(h, s, pair).map(|(g, _)| g)
}

pub fn split_pair_recorded(
    h: &MultiGraph,
    s: VertexId,
    pair: SplitPair,
) -> Result<(MultiGraph, SplitRecord)> {
    h.require(s)?;
    h.require(pair.u)?;
    h.require(pair.v)?;
    if pair.contains(s) {
        return Err(Error::pre("a split pair cannot use s itself"));
    }
    let at_u = h.edges_between(s, pair.u);
    let at_v = h.edges_between(s, pair.v);
    let (eu, ev) = if pair.u == pair.v {
        if at_u.len() < 2 {
            return Err(Error::pre(format!("need two s-{} edges", pair.u)));
        }
        (at_u[0], at_u[1])
    } else {
        match (at_u.first(), at_v.first()) {
            (Some(&a), Some(&b)) => (a, b),
            _ => {
                return Err(Error::pre(format!(
                    "need edges s-{} and s-{}",
                    pair.u, pair.v
                )))
            }
        }
    };
    let mut g = h.clone();
    let removed = [g.remove_edge(eu)?, g.remove_edge(ev)?];
    let id = g.add_edge(pair.u, pair.v)?;
    let added = *g.edge(id).expect("just added");
    Ok((
        g,
        SplitRecord {
            pair,
            removed,
            added,
        },
    ))
}

/// Inverse of [`split_pair_recorded`].
pub fn unsplit(g: &MultiGraph, record: &SplitRecord) -> Result<MultiGraph> {
    let mut h = g.clone();
    h.remove_edge(record.added.id)?;
    for e in record.removed {
        h.insert_edge(e)?;
    }
    Ok(h)
}

pub fn is_admissible(h: &MultiGraph, s: VertexId, p: ConnParams, pair: SplitPair) -> Result<bool> {
    require_connected_in_v(h, s, p)?;
    let g = split_pair(h, s, pair)?;
    Ok(connectivity::is_connected(&g, Some(s), p))
}

/// Classifies `x` as blocking `pair`, if it does.
pub fn blocking_kind(
    h: &MultiGraph,
    s: VertexId,
    p: ConnParams,
    pair: SplitPair,
    x: &BiSet,
) -> Result<Option<BlockKind>> {
    if x.ground() != &ground_of(h, s) {
        return Err(Error::GroundMismatch);
    }
    if x.is_trivial() || x.wall().len() > 1 {
        return Ok(None);
    }
    let f = f_value(h, p, x)? as u32;
    let (inner, wall) = (x.inner(), x.wall_vertex());
    let (u, v) = (pair.u, pair.v);
    if inner.contains(u) && inner.contains(v) && f <= p.target() + 1 {
        return Ok(Some(BlockKind::Dangerous));
    }
    let crit = (inner.contains(u) && wall == Some(v)) || (inner.contains(v) && wall == Some(u));
    if crit && f <= p.target() {
        return Ok(Some(BlockKind::Critical));
    }
    Ok(None)
}

/// A bi-set of `V` blocking `pair`, or `None` exactly when the pair is
/// admissible.
///
/// Candidates are found by minimum cuts: for each wall `W` (empty, or one
/// vertex) the cheapest inner set holding the required endpoints and
/// avoiding some vertex `x` and `s` is a minimum `{u,v}`–`{x,s}` cut in
/// `H - W`. With `maximal`, the result is then grown until no strictly
/// larger blocking bi-set exists. Above [`BRUTE_FORCE_LIMIT`] vertices the
/// growth uses single-vertex moves and is only locally maximal.
pub fn find_blocking_biset(
    h: &MultiGraph,
    s: VertexId,
    p: ConnParams,
    pair: SplitPair,
    maximal: bool,
) -> Result<Option<BlockingBiSet>> {
    require_connected_in_v(h, s, p)?;
    split_pair(h, s, pair)?; // validates the pair
    let Some(found) = blocking_by_cuts(h, s, p, pair) else {
        return Ok(None);
    };
    if !maximal {
        return Ok(Some(found));
    }
    grow_blocking(h, s, p, pair, found).map(Some)
}

fn blocking_by_cuts(
    h: &MultiGraph,
    s: VertexId,
    p: ConnParams,
    pair: SplitPair,
) -> Option<BlockingBiSet> {
    let d = Dense::new(h);
    let si = d.idx(s);
    let (ui, vi) = (d.idx(pair.u), d.idx(pair.v));
    let ground = ground_of(h, s);
    let k = p.k();
    let vs: Vec<usize> = (0..d.n).filter(|&i| i != si).collect();

    let mut walls: Vec<Option<usize>> = vec![None];
    walls.extend(vs.iter().map(|&w| Some(w)));
    for wall in walls {
        // (sources, cut threshold, kind) applicable for this wall
        let mut tries: Vec<(Vec<usize>, u32, BlockKind)> = Vec::new();
        let wall_cost = if wall.is_some() { k } else { 0 };
        if wall != Some(ui) && wall != Some(vi) {
            let sources = if ui == vi { vec![ui] } else { vec![ui, vi] };
            tries.push((sources, p.target() + 1 - wall_cost, BlockKind::Dangerous));
        } else if ui != vi {
            let inside = if wall == Some(vi) { ui } else { vi };
            tries.push((vec![inside], p.target() - wall_cost, BlockKind::Critical));
        }
        for (sources, threshold, kind) in tries {
            for &x in &vs {
                if Some(x) == wall || sources.contains(&x) {
                    continue;
                }
                let cut = d.min_cut(&sources, &[x, si], wall, threshold + 1);
                if cut.value <= threshold {
                    let inner = d.to_set(&cut.source_side.expect("below limit"));
                    let biset = match wall {
                        None => BiSet::set(ground.clone(), inner),
                        Some(w) => BiSet::with_wall(ground.clone(), inner, d.ids[w]),
                    }
                    .expect("cut side is a bi-set of V");
                    return Some(BlockingBiSet {
                        biset,
                        kind,
                        f: cut.value + wall_cost,
                    });
                }
            }
        }
    }
    None
}

fn grow_blocking(
    h: &MultiGraph,
    s: VertexId,
    p: ConnParams,
    pair: SplitPair,
    mut cur: BlockingBiSet,
) -> Result<BlockingBiSet> {
    let ground = ground_of(h, s);
    let exhaustive = ground.len() <= BRUTE_FORCE_LIMIT;
    loop {
        let candidates = if exhaustive {
            supersets_with_small_wall(&cur.biset)
        } else {
            single_step_growth(&cur.biset)
        };
        let mut next = None;
        for y in candidates {
            if let Some(kind) = blocking_kind(h, s, p, pair, &y)? {
                let f = f_value(h, p, &y)? as u32;
                next = Some(BlockingBiSet { biset: y, kind, f });
                break;
            }
        }
        match next {
            Some(n) => cur = n,
            None => return Ok(cur),
        }
    }
}

/// All bi-sets strictly above `x` (for ⊑) with at most one wall vertex.
fn supersets_with_small_wall(x: &BiSet) -> Vec<BiSet> {
    let ground = x.ground();
    let free: Vec<VertexId> = ground.difference(x.inner()).to_vec();
    let mut out = Vec::new();
    // each free vertex: outside, wall, or inside; at most one in the wall
    let n = free.len();
    let mut wall_choices: Vec<Option<usize>> = vec![None];
    wall_choices.extend((0..n).map(Some));
    for wall in wall_choices {
        for mask in 0u64..(1 << n) {
            if let Some(w) = wall {
                if mask >> w & 1 == 1 {
                    continue;
                }
            }
            let mut inner = x.inner().clone();
            for (i, &v) in free.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    inner.insert(v);
                }
            }
            let mut outer = inner.clone();
            if let Some(w) = wall {
                outer.insert(free[w]);
            }
            if !x.outer().is_subset(&outer) {
                continue;
            }
            let y = BiSet::new(ground.clone(), outer, inner).expect("valid");
            if &y != x {
                out.push(y);
            }
        }
    }
    out
}

fn single_step_growth(x: &BiSet) -> Vec<BiSet> {
    let ground = x.ground();
    let mut out = Vec::new();
    if let Some(w) = x.wall_vertex() {
        let mut inner = x.inner().clone();
        inner.insert(w);
        out.push(BiSet::set(ground.clone(), inner).expect("valid"));
    }
    for z in ground.difference(x.outer()).iter() {
        let mut inner = x.inner().clone();
        inner.insert(z);
        let mut outer = x.outer().clone();
        outer.insert(z);
        out.push(BiSet::new(ground.clone(), outer.clone(), inner).expect("valid"));
        if x.is_set() {
            out.push(BiSet::new(ground.clone(), outer, x.inner().clone()).expect("valid"));
        }
    }
    out
}

/// Checks the t-star obstacle conditions in order, then the two derived
/// facts `|C| ≥ 3` and "H - st stays connected in V".
pub fn verify_obstacle(
    h: &MultiGraph,
    s: VertexId,
    p: ConnParams,
    ob: &Obstacle,
) -> std::result::Result<(), ObstacleViolation> {
    obstacle_conditions(h, s, p, ob.t, &ob.members, true)?;
    if ob.members.len() < 3 {
        return Err(ObstacleViolation::TooFewMembers {
            count: ob.members.len(),
        });
    }
    let st = h.edges_between(s, ob.t)[0];
    let reduced = h.without_edge(st).expect("edge exists");
    if !connectivity::is_connected(&reduced, Some(s), p) {
        return Err(ObstacleViolation::HubEdgeNotRemovable);
    }
    Ok(())
}

fn obstacle_conditions(
    h: &MultiGraph,
    s: VertexId,
    p: ConnParams,
    t: VertexId,
    members: &[BiSet],
    disjoint: bool,
) -> std::result::Result<(), ObstacleViolation> {
    use ObstacleViolation::*;
    if !h.contains_vertex(s) || !connectivity::is_connected(h, Some(s), p) {
        return Err(NotConnectedInV);
    }
    let degree = h.degree(s).expect("s exists");
    if degree % 2 == 1 {
        return Err(OddDegree { degree });
    }
    let nbrs = h.neighbors(s);
    if !nbrs.contains(t) {
        return Err(HubNotNeighbor);
    }
    let multiplicity = h.multiplicity(s, t);
    if multiplicity % 2 == 0 {
        return Err(HubEvenMultiplicity { multiplicity });
    }
    let ground = ground_of(h, s);
    for (i, x) in members.iter().enumerate() {
        if x.ground() != &ground {
            return Err(WrongGround { member: i });
        }
        if x.wall_vertex() != Some(t) {
            return Err(WrongWall { member: i });
        }
        let blocks_some = x.inner().intersection(&nbrs).iter().any(|u| {
            blocking_kind(h, s, p, SplitPair::new(u, t), x) == Ok(Some(BlockKind::Critical))
        });
        if !blocks_some {
            return Err(NotCritical { member: i });
        }
    }
    if disjoint {
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                if !members[i].is_innerly_disjoint(&members[j]) {
                    return Err(NotInnerlyDisjoint {
                        first: i,
                        second: j,
                    });
                }
            }
        }
    }
    let covered = members
        .iter()
        .fold(VertexSet::new(), |acc, x| acc.union(x.inner()));
    let mut need = nbrs;
    need.remove(t);
    if let Some(vertex) = need.difference(&covered).first() {
        return Err(Uncovered { vertex });
    }
    Ok(())
}

/// Turns a family of critical pairs with wall `{t}` covering `N(s) - t`
/// into a t-star obstacle by uncrossing.
///
/// While two members `X`, `Y` share inner vertices: if one is included in
/// the other the smaller is dropped, otherwise both are replaced by those of
/// `X ⊓ Y`, `X ⊓ Ȳ`, `X̄ ⊓ Y` whose inner sets meet `N(s)`. Those are tight
/// with wall `{t}` and their inner sets partition `X_I ∪ Y_I`, so the total
/// inner size strictly drops.
pub fn uncross_family(
    h: &MultiGraph,
    s: VertexId,
    p: ConnParams,
    t: VertexId,
    family: Vec<BiSet>,
) -> Result<Obstacle> {
    obstacle_conditions(h, s, p, t, &family, false)
        .map_err(|v| Error::pre(format!("family is not obstacle-like: {v}")))?;
    let nbrs = h.neighbors(s);
    let mut members = family;
    dedup(&mut members);
    let size = |m: &[BiSet]| m.iter().map(|x| x.inner().len()).sum::<usize>();
    while let Some((i, j)) = crossing_pair(&members) {
        let before = size(&members);
        let (x, y) = (members[i].clone(), members[j].clone());
        if x.is_included(&y) {
            members.remove(i);
        } else if y.is_included(&x) {
            members.remove(j);
        } else {
            let parts = [
                x.meet(&y)?,
                x.meet(&y.complement())?,
                x.complement().meet(&y)?,
            ];
            members.remove(j);
            members.remove(i);
            for part in parts {
                if part.inner().is_disjoint(&nbrs) {
                    continue;
                }
                if part.wall_vertex() != Some(t) || !connectivity::is_tight(h, p, &part)? {
                    return Err(Error::defect(format!(
                        "uncrossing produced a non-tight part {part:?}"
                    )));
                }
                members.push(part);
            }
            dedup(&mut members);
        }
        if size(&members) >= before {
            return Err(Error::defect("uncrossing did not shrink the family"));
        }
    }
    members.sort_by_key(|x| x.inner().to_vec());
    let ob = Obstacle { t, members };
    verify_obstacle(h, s, p, &ob)
        .map_err(|v| Error::defect(format!("uncrossed family is not an obstacle: {v}")))?;
    Ok(ob)
}

fn dedup(members: &mut Vec<BiSet>) {
    let mut seen = Vec::with_capacity(members.len());
    members.retain(|x| {
        if seen.contains(x) {
            false
        } else {
            seen.push(x.clone());
            true
        }
    });
}

fn crossing_pair(members: &[BiSet]) -> Option<(usize, usize)> {
    (0..members.len())
        .flat_map(|i| (i + 1..members.len()).map(move |j| (i, j)))
        .find(|&(i, j)| !members[i].is_innerly_disjoint(&members[j]))
}

/// Finds a t-star obstacle at `s`, preferring the smallest hub `t`.
///
/// For a candidate hub `t`, each uncovered neighbour `u` gets the smallest
/// critical pair with wall `{t}` containing it, via a minimum `u`–`{x,s}`
/// cut in `H - t`; if every neighbour is covered the family is uncrossed.
/// The search is exact: an obstacle at `t` supplies such a pair for every
/// neighbour, and any covering family uncrosses into an obstacle.
pub fn find_obstacle(h: &MultiGraph, s: VertexId, p: ConnParams) -> Result<Option<Obstacle>> {
    require_splittable(h, s, p)?;
    obstacle_search(h, s, p)
}

fn obstacle_search(h: &MultiGraph, s: VertexId, p: ConnParams) -> Result<Option<Obstacle>> {
    let nbrs = h.neighbors(s);
    let d = Dense::new(h);
    let si = d.idx(s);
    let ground = ground_of(h, s);
    'hub: for t in nbrs.iter() {
        if h.multiplicity(s, t) % 2 == 0 {
            continue;
        }
        let ti = d.idx(t);
        let mut family: Vec<BiSet> = Vec::new();
        for u in nbrs.iter().filter(|&u| u != t) {
            if family.iter().any(|x| x.inner().contains(u)) {
                continue;
            }
            let ui = d.idx(u);
            let found = (0..d.n)
                .filter(|&x| x != si && x != ti && x != ui)
                .find_map(|x| {
                    let cut = d.min_cut(&[ui], &[x, si], Some(ti), p.k() + 1);
                    cut.source_side.filter(|_| cut.value <= p.k())
                });
            match found {
                Some(side) => family.push(
                    BiSet::with_wall(ground.clone(), d.to_set(&side), t).expect("valid pair"),
                ),
                None => continue 'hub,
            }
        }
        return uncross_family(h, s, p, t, family).map(Some);
    }
    Ok(None)
}

/// A complete admissible splitting-off at `s`, or an obstacle proving that
/// none exists.
///
/// Pairs are taken in lexicographic order. Each chosen pair is admissible
/// and leaves no obstacle behind, so the graph stays splittable throughout;
/// when the first admissible pair does leave one, the recovery follows the
/// two cases of the pinching-up argument: with the hub among the pair's
/// endpoints the pair `(st, st)` is used, otherwise either `H` itself has an
/// obstacle or some admissible `(st, sw)` leaves none. An outcome ruled out
/// by those results is reported as [`Error::Defect`].
///
/// With `d(s) = 2` the single pair is always admissible, so the trace is
/// returned without any obstacle search.
pub fn complete_splitting(h: &MultiGraph, s: VertexId, p: ConnParams) -> Result<SplitOutcome> {
    require_splittable(h, s, p)?;
    let mut cur = drop_loops_at(h, s);
    let mut records = Vec::new();
    loop {
        let degree = cur.degree(s)?;
        if degree == 0 {
            break;
        }
        let step = if degree == 2 {
            let nb: Vec<VertexId> = cur
                .edges()
                .filter(|e| e.is_incident(s))
                .filter_map(|e| e.other(s))
                .collect();
            let pair = SplitPair::new(nb[0], nb[1]);
            if !admissible(&cur, s, p, pair)? {
                return Err(Error::defect("the last pair at s is not admissible"));
            }
            Step::Split(pair)
        } else {
            next_step(&cur, s, p)?
        };
        match step {
            Step::Split(pair) => {
                let (next, record) = split_pair_recorded(&cur, s, pair)?;
                records.push(record);
                cur = next;
            }
            Step::Obstacle(ob) if records.is_empty() => return Ok(SplitOutcome::Obstacle(ob)),
            Step::Obstacle(_) => {
                return Err(Error::defect(
                    "an obstacle appeared after a split chosen to avoid one",
                ))
            }
        }
    }
    cur.delete_vertex(s)?;
    if !connectivity::is_connected(&cur, None, p) {
        return Err(Error::defect("complete splitting lost connectivity"));
    }
    Ok(SplitOutcome::Complete(SplitTrace {
        s,
        records,
        final_graph: cur,
    }))
}

enum Step {
    Split(SplitPair),
    Obstacle(Obstacle),
}

fn next_step(cur: &MultiGraph, s: VertexId, p: ConnParams) -> Result<Step> {
    let degree = cur.degree(s)?;
    let Some(pair) = first_admissible(cur, s, p)? else {
        if degree != 4 {
            return Err(Error::defect(format!(
                "no admissible pair although d(s) = {degree} ≠ 4"
            )));
        }
        return obstacle_search(cur, s, p)?
            .map(Step::Obstacle)
            .ok_or_else(|| Error::defect("no admissible pair and no obstacle at s"));
    };
    if degree == 4 {
        return Ok(Step::Split(pair));
    }
    let after = split_pair(cur, s, pair)?;
    let Some(ob) = obstacle_search(&after, s, p)? else {
        return Ok(Step::Split(pair));
    };
    let t = ob.t;
    let obstacle_here = || {
        obstacle_search(cur, s, p)?
            .map(Step::Obstacle)
            .ok_or_else(|| Error::defect("expected an obstacle in the current graph"))
    };
    if pair.contains(t) {
        let tt = SplitPair::new(t, t);
        if cur.multiplicity(s, t) < 2 || !admissible(cur, s, p, tt)? {
            return Err(Error::defect(
                "(st, st) is not admissible after a hub split",
            ));
        }
        if obstacle_search(&split_pair(cur, s, tt)?, s, p)?.is_none() {
            return Ok(Step::Split(tt));
        }
        return obstacle_here();
    }
    if let Some(ob) = obstacle_search(cur, s, p)? {
        return Ok(Step::Obstacle(ob));
    }
    for w in cur.neighbors(s).iter() {
        let tw = SplitPair::new(t, w);
        if w == t && cur.multiplicity(s, t) < 2 {
            continue;
        }
        if admissible(cur, s, p, tw)? && obstacle_search(&split_pair(cur, s, tw)?, s, p)?.is_none()
        {
            return Ok(Step::Split(tw));
        }
    }
    Err(Error::defect(
        "no admissible (st, sw) leaves an obstacle-free graph",
    ))
}

/// Candidate pairs at `s` in lexicographic order.
pub fn candidate_pairs(h: &MultiGraph, s: VertexId) -> Vec<SplitPair> {
    let nbrs = h.neighbors(s).to_vec();
    let mut out = Vec::new();
    for (i, &u) in nbrs.iter().enumerate() {
        if h.multiplicity(s, u) >= 2 {
            out.push(SplitPair::new(u, u));
        }
        for &v in &nbrs[i + 1..] {
            out.push(SplitPair::new(u, v));
        }
    }
    out
}

fn first_admissible(h: &MultiGraph, s: VertexId, p: ConnParams) -> Result<Option<SplitPair>> {
    for pair in candidate_pairs(h, s) {
        if admissible(h, s, p, pair)? {
            return Ok(Some(pair));
        }
    }
    Ok(None)
}

fn admissible(h: &MultiGraph, s: VertexId, p: ConnParams, pair: SplitPair) -> Result<bool> {
    Ok(connectivity::is_connected(
        &split_pair(h, s, pair)?,
        Some(s),
        p,
    ))
}

/// Exhaustive search over all pairings at `s`, pruning non-admissible
/// prefixes. Splitting never increases `f` on bi-sets of `V`, so a prefix
/// that breaks connectivity can never be completed. Exponential in `d(s)`.
pub fn exhaustive_splitting(
    h: &MultiGraph,
    s: VertexId,
    p: ConnParams,
) -> Result<Option<SplitTrace>> {
    require_connected_in_v(h, s, p)?;
    let degree = h.degree(s)? - 2 * h.multiplicity(s, s);
    if degree % 2 == 1 {
        return Err(Error::pre("d(s) must be even"));
    }
    let start = drop_loops_at(h, s);
    let mut records = Vec::new();
    if !pairing_search(&start, s, p, &mut records)? {
        return Ok(None);
    }
    let mut g = start.clone();
    for r in &records {
        g = split_pair(&g, s, r.pair)?;
    }
    g.delete_vertex(s)?;
    Ok(Some(SplitTrace {
        s,
        records,
        final_graph: g,
    }))
}

fn pairing_search(
    g: &MultiGraph,
    s: VertexId,
    p: ConnParams,
    records: &mut Vec<SplitRecord>,
) -> Result<bool> {
    let nbrs = g.neighbors(s);
    let Some(u) = nbrs.first() else {
        return Ok(true);
    };
    for v in nbrs.iter() {
        if v == u && g.multiplicity(s, u) < 2 {
            continue;
        }
        let (next, record) = split_pair_recorded(g, s, SplitPair::new(u, v))?;
        if connectivity::is_connected(&next, Some(s), p) {
            records.push(record);
            if pairing_search(&next, s, p, records)? {
                return Ok(true);
            }
            records.pop();
        }
    }
    Ok(false)
}

fn drop_loops_at(h: &MultiGraph, s: VertexId) -> MultiGraph {
    let mut g = h.clone();
    for id in h.edges_between(s, s) {
        g.remove_edge(id).expect("loop exists");
    }
    g
}

pub(crate) fn ground_of(h: &MultiGraph, s: VertexId) -> VertexSet {
    let mut ground = h.vertices().clone();
    ground.remove(s);
    ground
}

fn require_connected_in_v(h: &MultiGraph, s: VertexId, p: ConnParams) -> Result<()> {
    if !connectivity::check_in_v(h, s, p)?.ok {
        return Err(Error::pre("graph is not (2k,k)-connected in V"));
    }
    Ok(())
}

fn require_splittable(h: &MultiGraph, s: VertexId, p: ConnParams) -> Result<()> {
    if p.k() < 2 {
        return Err(Error::pre("splitting-off needs k ≥ 2"));
    }
    require_connected_in_v(h, s, p)?;
    let degree = h.degree(s)?;
    if degree % 2 == 1 {
        return Err(Error::pre(format!("d(s) = {degree} is odd")));
    }
    Ok(())
}
