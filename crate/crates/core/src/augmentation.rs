//! Adding the fewest edges that make a graph (2k,k)-connected.
//!
//! The lower bound comes from families of non-trivial, pairwise
//! innerly-disjoint bi-sets: every bi-set `X` needs `2k - f(X)` new edges
//! entering it, and one new edge enters at most two members. So at least
//! `⌈Σ (2k - f(X)) / 2⌉` edges are needed, and this many suffice:
//!
//! 1. attach a new vertex `s` by as few edges as keep the graph
//!    (2k,k)-connected in `V` (a *minimal s-extension*); its size equals the
//!    best family value;
//! 2. if that size is odd, double one `s–u` edge with `d(s,u)` odd;
//! 3. split off `s` completely. No obstacle can arise here.

use serde::ser::{Serialize, SerializeStruct, SerializeTuple, Serializer};

use crate::biset::BiSet;
use crate::connectivity::{self, f_value, ConnParams, SmallBiSets};
use crate::error::{Error, Result};
use crate::multigraph::{Edge, MultiGraph, VertexId};
use crate::splitting::{complete_splitting, SplitOutcome};
use crate::vset::VertexSet;

/// Largest ground for [`certificate_bruteforce`]; the search is `O(3^n)`.
pub const CERTIFICATE_LIMIT: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub host: MultiGraph,
    pub s: VertexId,
    pub new_edges: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateFamily {
    pub members: Vec<BiSet>,
    pub value: u32,
    /// False when the value was taken from a minimal extension rather than
    /// found by search; `members` is then empty.
    pub exhaustive: bool,
}

impl Serialize for CertificateFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CertificateFamily", 3)?;
        st.serialize_field("value", &self.value)?;
        st.serialize_field("members", &self.members)?;
        st.serialize_field("exhaustive", &self.exhaustive)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentationResult {
    pub k: u32,
    pub added: Vec<(VertexId, VertexId)>,
    pub certificate: CertificateFamily,
    pub augmented: MultiGraph,
}

impl AugmentationResult {
    pub fn alpha(&self) -> usize {
        self.added.len()
    }
}

struct PairJson((VertexId, VertexId));

impl Serialize for PairJson {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.0 .0)?;
        t.serialize_element(&self.0 .1)?;
        t.end()
    }
}

impl Serialize for AugmentationResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let added: Vec<PairJson> = self.added.iter().copied().map(PairJson).collect();
        let mut st = serializer.serialize_struct("AugmentationResult", 4)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("alpha", &self.alpha())?;
        st.serialize_field("added", &added)?;
        st.serialize_field("certificate", &self.certificate)?;
        st.end()
    }
}

/// Attaches `s` (the next free vertex id) by `2k` edges to every vertex,
/// then deletes them greedily in ascending vertex order while the host stays
/// (2k,k)-connected in `V`.
///
/// One pass suffices: deleting edges never raises `f`, so an edge that could
/// not go earlier cannot go later either. The same argument lets the scan
/// stop at a vertex as soon as one of its copies is needed.
pub fn minimal_extension(g: &MultiGraph, p: ConnParams) -> Result<Extension> {
    if g.vertex_count() < 3 {
        return Err(Error::pre("augmentation needs at least three vertices"));
    }
    let mut host = g.clone();
    let s = host.add_fresh_vertex();
    for v in g.vertices().iter() {
        for _ in 0..p.target() {
            host.add_edge(s, v)?;
        }
    }
    for v in g.vertices().iter() {
        for id in host.edges_between(s, v) {
            let without = host.without_edge(id)?;
            if !connectivity::is_connected(&without, Some(s), p) {
                break;
            }
            host = without;
        }
    }
    let new_edges = host.edges().filter(|e| e.is_incident(s)).copied().collect();
    Ok(Extension { host, s, new_edges })
}

/// DP cell choice: the inner mask taken and its best wall position, if any.
type Choice = Option<(u64, Option<usize>)>;

/// Best family of pairwise innerly-disjoint non-trivial bi-sets.
///
/// Only deficient bi-sets (`f < 2k`, so at most one wall vertex) can
/// contribute. For each inner set the most deficient bi-set is kept, and a
/// subset dynamic program packs disjoint inner sets.
pub fn certificate_bruteforce(g: &MultiGraph, p: ConnParams) -> Result<CertificateFamily> {
    let space = SmallBiSets::new(g, None, CERTIFICATE_LIMIT)?;
    let n = space.ground.len();
    let full = (1usize << n) - 1;
    let mut best: Vec<(u32, Choice)> = vec![(0, None); full + 1];
    space.walk(p.k(), |inner, wall, f| {
        if f < p.target() {
            let gain = p.target() - f;
            let slot = &mut best[inner as usize];
            if gain > slot.0 {
                *slot = (gain, Some((inner, wall)));
            }
        }
        std::ops::ControlFlow::<()>::Continue(())
    });
    // value[m]: best packing inside mask m; choice[m]: block holding m's lowest bit
    let mut value = vec![0u32; full + 1];
    let mut choice = vec![0usize; full + 1];
    for m in 1..=full {
        let low = m & m.wrapping_neg();
        let rest = m & !low;
        value[m] = value[rest];
        choice[m] = 0;
        let mut sub = rest;
        loop {
            let block = sub | low;
            let cand = best[block].0 + value[m & !block];
            if best[block].0 > 0 && cand > value[m] {
                value[m] = cand;
                choice[m] = block;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let mut members = Vec::new();
    let mut m = full;
    while m != 0 {
        let block = choice[m];
        if block == 0 {
            m &= m - 1;
            continue;
        }
        let (inner, wall) = best[block].1.expect("chosen blocks are deficient");
        members.push(space.biset(inner, wall));
        m &= !block;
    }
    members.sort_by_key(|x| x.inner().to_vec());
    Ok(CertificateFamily {
        members,
        value: value[full],
        exhaustive: true,
    })
}

/// `Σ max(0, 2k - f(X))` over a family, after checking that the members are
/// non-trivial bi-sets of `V(g)` with pairwise disjoint inner sets.
pub fn verify_certificate(g: &MultiGraph, p: ConnParams, members: &[BiSet]) -> Result<u32> {
    let mut seen = VertexSet::new();
    let mut total = 0u32;
    for x in members {
        if x.ground() != g.vertices() {
            return Err(Error::GroundMismatch);
        }
        if x.is_trivial() {
            return Err(Error::TrivialBiSet);
        }
        if !seen.is_disjoint(x.inner()) {
            return Err(Error::pre("certificate members share inner vertices"));
        }
        seen = seen.union(x.inner());
        total += p.target().saturating_sub(f_value(g, p, x)? as u32);
    }
    Ok(total)
}

/// A minimum set of new edges making `g` (2k,k)-connected.
pub fn augment(g: &MultiGraph, p: ConnParams) -> Result<AugmentationResult> {
    if p.k() < 2 {
        return Err(Error::pre("augmentation is implemented for k ≥ 2"));
    }
    let ext = minimal_extension(g, p)?;
    let needed = ext.new_edges.len() as u32;
    let s = ext.s;
    let mut host = ext.host;
    if needed % 2 == 1 {
        let u = g
            .vertices()
            .iter()
            .find(|&u| host.multiplicity(s, u) % 2 == 1)
            .ok_or_else(|| Error::defect("odd d(s) without a vertex of odd d(s,u)"))?;
        host.add_edge(s, u)?;
    }
    let trace = match complete_splitting(&host, s, p)? {
        SplitOutcome::Complete(trace) => trace,
        SplitOutcome::Obstacle(ob) => {
            return Err(Error::defect(format!(
                "obstacle with hub {} at the extension vertex",
                ob.t
            )))
        }
    };
    let added: Vec<(VertexId, VertexId)> = trace.pairs().iter().map(|pr| (pr.u, pr.v)).collect();
    let certificate = if g.vertex_count() <= CERTIFICATE_LIMIT {
        let c = certificate_bruteforce(g, p)?;
        if c.value != needed {
            return Err(Error::defect(format!(
                "minimal extension has {needed} edges but the best family is worth {}",
                c.value
            )));
        }
        c
    } else {
        CertificateFamily {
            members: Vec::new(),
            value: needed,
            exhaustive: false,
        }
    };
    if added.len() as u32 != needed.div_ceil(2) {
        return Err(Error::defect("split count differs from the bound"));
    }
    Ok(AugmentationResult {
        k: p.k(),
        added,
        certificate,
        augmented: trace.final_graph,
    })
}
