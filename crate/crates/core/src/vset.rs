use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};
use smallvec::SmallVec;

use crate::multigraph::VertexId;

/// A finite set of vertex ids stored as a bitset indexed by id.
///
/// Trailing zero words are never stored, so equality is extensional.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(v: VertexId) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        let (w, b) = Self::slot(v);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let had = self.words[w] & b != 0;
        self.words[w] |= b;
        !had
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        let (w, b) = Self::slot(v);
        if w >= self.words.len() {
            return false;
        }
        let had = self.words[w] & b != 0;
        self.words[w] &= !b;
        self.trim();
        had
    }

    pub fn contains(&self, v: VertexId) -> bool {
        let (w, b) = Self::slot(v);
        self.words.get(w).is_some_and(|x| x & b != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn union(&self, other: &Self) -> Self {
        let n = self.words.len().max(other.words.len());
        let words = (0..n)
            .map(|i| self.word(i) | other.word(i))
            .collect::<SmallVec<_>>();
        Self::from_words(words)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let n = self.words.len().min(other.words.len());
        let words = (0..n)
            .map(|i| self.word(i) & other.word(i))
            .collect::<SmallVec<_>>();
        Self::from_words(words)
    }

    pub fn difference(&self, other: &Self) -> Self {
        let words = (0..self.words.len())
            .map(|i| self.word(i) & !other.word(i))
            .collect::<SmallVec<_>>();
        Self::from_words(words)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        (0..self.words.len()).all(|i| self.word(i) & !other.word(i) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        let n = self.words.len().min(other.words.len());
        (0..n).all(|i| self.word(i) & other.word(i) == 0)
    }

    /// Members in ascending id order.
    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros();
                rest &= rest - 1;
                Some(VertexId(i as u32 * 64 + b))
            })
        })
    }

    pub fn first(&self) -> Option<VertexId> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }

    fn slot(v: VertexId) -> (usize, u64) {
        ((v.0 / 64) as usize, 1u64 << (v.0 % 64))
    }

    fn from_words(words: SmallVec<[u64; 2]>) -> Self {
        let mut s = Self { words };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<const N: usize> From<[u32; N]> for VertexSet {
    fn from(ids: [u32; N]) -> Self {
        ids.into_iter().map(VertexId).collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v.0)?;
        }
        seq.end()
    }
}
