//! A small bitset over `usize` indices, used for vertex sets and
//! rejected-edge sets. Sets of up to 64 elements stay on the stack.

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;
use std::fmt;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitSet {
    // Invariant: no trailing zero words, so Eq/Hash are canonical.
    words: SmallVec<[u64; 1]>,
}

impl BitSet {
    pub fn new() -> Self {
        BitSet::default()
    }

    pub fn singleton(index: usize) -> Self {
        let mut s = BitSet::new();
        s.insert(index);
        s
    }

    /// The set {0, 1, ..., n-1}.
    pub fn all_below(n: usize) -> Self {
        let mut s = BitSet::new();
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, index: usize) {
        let word = index / 64;
        if word >= self.words.len() {
            self.words.resize(word + 1, 0);
        }
        self.words[word] |= 1u64 << (index % 64);
    }

    pub fn remove(&mut self, index: usize) {
        let word = index / 64;
        if word < self.words.len() {
            self.words[word] &= !(1u64 << (index % 64));
            self.trim();
        }
    }

    pub fn contains(&self, index: usize) -> bool {
        let word = index / 64;
        word < self.words.len() && self.words[word] & (1u64 << (index % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn intersect(&self, other: &BitSet) -> BitSet {
        let k = self.words.len().min(other.words.len());
        let mut words: SmallVec<[u64; 1]> =
            (0..k).map(|i| self.words[i] & other.words[i]).collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        BitSet { words }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (i, w) in other.words.iter().enumerate() {
            self.words[i] |= w;
        }
    }

    /// {0..n-1} minus self.
    pub fn complement_below(&self, n: usize) -> BitSet {
        let mut out = BitSet::new();
        for i in 0..n {
            if !self.contains(i) {
                out.insert(i);
            }
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = BitSet::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for BitSet {
    fn from(items: [usize; N]) -> Self {
        items.into_iter().collect()
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for BitSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for BitSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = BitSet;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a sequence of indices")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<BitSet, A::Error> {
                let mut s = BitSet::new();
                while let Some(v) = seq.next_element::<usize>()? {
                    s.insert(v);
                }
                Ok(s)
            }
        }
        deserializer.deserialize_seq(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_contains() {
        let mut s = BitSet::new();
        s.insert(3);
        s.insert(70);
        assert!(s.contains(3) && s.contains(70) && !s.contains(4));
        assert_eq!(s.len(), 2);
        s.remove(70);
        assert!(!s.contains(70));
        // Removing the high bit must restore canonical form.
        assert_eq!(s, BitSet::singleton(3));
    }

    #[test]
    fn subset_and_intersect() {
        let a = BitSet::from([1, 2, 5]);
        let b = BitSet::from([1, 2, 5, 9]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.intersect(&b), a);
        assert_eq!(a.intersect(&BitSet::from([2, 9])), BitSet::singleton(2));
    }

    #[test]
    fn complement_and_iter() {
        let a = BitSet::from([0, 2]);
        assert_eq!(a.complement_below(4).to_vec(), vec![1, 3]);
        assert_eq!(a.to_vec(), vec![0, 2]);
        assert_eq!(format!("{a}"), "{0,2}");
    }

    #[test]
    fn empty_is_canonical() {
        let mut s = BitSet::singleton(80);
        s.remove(80);
        assert!(s.is_empty());
        assert_eq!(s, BitSet::new());
    }
}
