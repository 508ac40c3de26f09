//! Bi-sets: nested pairs `(outer, inner)` over an explicit ground set.
//!
//! A bi-set generalises a vertex subset. Its wall `outer \ inner` holds
//! the vertices that are neither inside nor outside; in the connectivity
//! functional each wall vertex is charged `k`.
//!
//! The ground set is stored with each value. Graphs with a designated vertex
//! `s` work over the ground `V = vertices - s`, and mixing grounds by accident
//! is an error rather than a silent miscount.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::multigraph::VertexId;
use crate::vset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiSet {
    inner: VertexSet,
    outer: VertexSet,
    ground: VertexSet,
}

impl BiSet {
    /// Checks `inner ⊆ outer ⊆ ground`.
    pub fn new(ground: VertexSet, outer: VertexSet, inner: VertexSet) -> Result<Self> {
        if !inner.is_subset(&outer) || !outer.is_subset(&ground) {
            return Err(Error::InvalidBiSet);
        }
        Ok(BiSet {
            inner,
            outer,
            ground,
        })
    }

    /// The bi-set `(x, x)`, which has an empty wall.
    pub fn set(ground: VertexSet, x: VertexSet) -> Result<Self> {
        Self::new(ground, x.clone(), x)
    }

    /// The bi-set `(inner + w, inner)` with wall `{w}`.
    pub fn with_wall(ground: VertexSet, inner: VertexSet, w: VertexId) -> Result<Self> {
        if inner.contains(w) {
            return Err(Error::InvalidBiSet);
        }
        let mut outer = inner.clone();
        outer.insert(w);
        Self::new(ground, outer, inner)
    }

    pub fn inner(&self) -> &VertexSet {
        &self.inner
    }

    pub fn outer(&self) -> &VertexSet {
        &self.outer
    }

    pub fn ground(&self) -> &VertexSet {
        &self.ground
    }

    pub fn wall(&self) -> VertexSet {
        self.outer.difference(&self.inner)
    }

    /// The single wall vertex, if the wall has exactly one element.
    pub fn wall_vertex(&self) -> Option<VertexId> {
        let w = self.wall();
        if w.len() == 1 {
            w.first()
        } else {
            None
        }
    }

    pub fn is_set(&self) -> bool {
        self.inner == self.outer
    }

    /// Empty inner set or full outer set.
    pub fn is_trivial(&self) -> bool {
        self.inner.is_empty() || self.outer == self.ground
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        Ok(BiSet {
            inner: self.inner.intersection(&other.inner),
            outer: self.outer.intersection(&other.outer),
            ground: self.ground.clone(),
        })
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        Ok(BiSet {
            inner: self.inner.union(&other.inner),
            outer: self.outer.union(&other.outer),
            ground: self.ground.clone(),
        })
    }

    /// `(ground \ inner, ground \ outer)`; keeps the wall.
    pub fn complement(&self) -> Self {
        BiSet {
            inner: self.ground.difference(&self.outer),
            outer: self.ground.difference(&self.inner),
            ground: self.ground.clone(),
        }
    }

    pub fn is_innerly_disjoint(&self, other: &Self) -> bool {
        self.inner.is_disjoint(&other.inner)
    }

    /// `self ⊑ other`: both the outer and the inner sets are contained.
    pub fn is_included(&self, other: &Self) -> bool {
        self.outer.is_subset(&other.outer) && self.inner.is_subset(&other.inner)
    }

    fn same_ground(&self, other: &Self) -> Result<()> {
        if self.ground == other.ground {
            Ok(())
        } else {
            Err(Error::GroundMismatch)
        }
    }
}

impl Serialize for BiSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("BiSet", 2)?;
        st.serialize_field("inner", &self.inner)?;
        st.serialize_field("outer", &self.outer)?;
        st.end()
    }
}

/// Every bi-set over `ground`, as `(outer, inner)` assignments of each
/// vertex to outside / wall / inside. Intended for small grounds.
pub fn all_bisets(ground: &VertexSet) -> Vec<BiSet> {
    let members = ground.to_vec();
    let total = 3usize.pow(members.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut inner = VertexSet::new();
            let mut outer = VertexSet::new();
            for &v in &members {
                match code % 3 {
                    1 => {
                        outer.insert(v);
                    }
                    2 => {
                        outer.insert(v);
                        inner.insert(v);
                    }
                    _ => {}
                }
                code /= 3;
            }
            BiSet {
                inner,
                outer,
                ground: ground.clone(),
            }
        })
        .collect()
}
