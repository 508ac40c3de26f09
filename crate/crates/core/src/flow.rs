//! Dense multiplicity matrices and a capped augmenting-path max-flow.
//!
//! Edge multiplicities are the capacities; loops are dropped since they
//! cross no cut. Flows stop as soon as they reach the caller's limit, which
//! is all a threshold test such as "λ ≥ 2k" needs.

use std::collections::VecDeque;

use crate::multigraph::{MultiGraph, VertexId};
use crate::vset::VertexSet;

#[derive(Debug, Clone)]
pub(crate) struct Dense {
    pub ids: Vec<VertexId>,
    index: Vec<u32>,
    pub n: usize,
    pub mult: Vec<u32>,
}

const ABSENT: u32 = u32::MAX;

impl Dense {
    pub fn new(g: &MultiGraph) -> Self {
        let ids = g.vertices().to_vec();
        let n = ids.len();
        let top = ids.last().map_or(0, |v| v.0 as usize + 1);
        let mut index = vec![ABSENT; top];
        for (i, v) in ids.iter().enumerate() {
            index[v.0 as usize] = i as u32;
        }
        let mut mult = vec![0u32; n * n];
        for e in g.edges().filter(|e| !e.is_loop()) {
            let (a, b) = (
                index[e.u.0 as usize] as usize,
                index[e.v.0 as usize] as usize,
            );
            mult[a * n + b] += 1;
            mult[b * n + a] += 1;
        }
        Dense {
            ids,
            index,
            n,
            mult,
        }
    }

    pub fn idx(&self, v: VertexId) -> usize {
        let i = self.index[v.0 as usize];
        debug_assert_ne!(i, ABSENT, "vertex {v} not in dense view");
        i as usize
    }

    #[inline]
    pub fn m(&self, a: usize, b: usize) -> u32 {
        self.mult[a * self.n + b]
    }

    pub fn to_set(&self, side: &[bool]) -> VertexSet {
        side.iter()
            .zip(&self.ids)
            .filter(|(&inside, _)| inside)
            .map(|(_, &v)| v)
            .collect()
    }

    /// Minimum cut between `sources` and `sinks` with `removed` deleted,
    /// computed only up to `limit`.
    ///
    /// When the value is below `limit` the flow is maximum and the returned
    /// side is the set reachable from the sources in the residual graph, the
    /// unique inclusion-minimal minimum cut side.
    pub fn min_cut(
        &self,
        sources: &[usize],
        sinks: &[usize],
        removed: Option<usize>,
        limit: u32,
    ) -> Cut {
        let n = self.n;
        let mut residual = self.mult.clone();
        let mut is_sink = vec![false; n];
        for &t in sinks {
            is_sink[t] = true;
        }
        let mut flow = 0u32;
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::with_capacity(n);
        loop {
            if flow >= limit {
                return Cut {
                    value: limit,
                    source_side: None,
                };
            }
            seen.iter_mut().for_each(|x| *x = false);
            queue.clear();
            for &s in sources {
                seen[s] = true;
                parent[s] = usize::MAX;
                queue.push_back(s);
            }
            if let Some(r) = removed {
                seen[r] = true;
            }
            let mut hit = None;
            'bfs: while let Some(a) = queue.pop_front() {
                let row = &residual[a * n..(a + 1) * n];
                for (b, &cap) in row.iter().enumerate() {
                    if cap > 0 && !seen[b] {
                        seen[b] = true;
                        parent[b] = a;
                        if is_sink[b] {
                            hit = Some(b);
                            break 'bfs;
                        }
                        queue.push_back(b);
                    }
                }
            }
            let Some(t) = hit else {
                if let Some(r) = removed {
                    seen[r] = false;
                }
                return Cut {
                    value: flow,
                    source_side: Some(seen),
                };
            };
            let mut push = limit - flow;
            let mut b = t;
            while parent[b] != usize::MAX {
                let a = parent[b];
                push = push.min(residual[a * n + b]);
                b = a;
            }
            let mut b = t;
            while parent[b] != usize::MAX {
                let a = parent[b];
                residual[a * n + b] -= push;
                residual[b * n + a] += push;
                b = a;
            }
            flow += push;
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Cut {
    pub value: u32,
    pub source_side: Option<Vec<bool>>,
}
