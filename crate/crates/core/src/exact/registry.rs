use std::collections::HashMap;
use std::hash::Hash;

use super::{Rational, SparseVec};

/// Deterministic index for a set of basis keys: keys are sorted, so the
/// column assigned to an object does not depend on discovery order.
#[derive(Clone, Debug)]
pub struct BasisRegistry<K> {
    keys: Vec<K>,
    index: HashMap<K, usize>,
}

impl<K: Ord + Hash + Clone> BasisRegistry<K> {
    pub fn new(keys: impl IntoIterator<Item = K>) -> Self {
        let mut keys: Vec<K> = keys.into_iter().collect();
        keys.sort();
        keys.dedup();
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        BasisRegistry { keys, index }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[K] {
        &self.keys
    }

    pub fn key(&self, i: usize) -> &K {
        &self.keys[i]
    }

    pub fn index_of(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }

    /// Vector of a combination of keys; panics on an unregistered key.
    pub fn vector<'a>(&self, terms: impl IntoIterator<Item = (&'a K, &'a Rational)>) -> SparseVec
    where
        K: 'a,
    {
        SparseVec::from_pairs(terms.into_iter().map(|(k, c)| {
            (self.index_of(k).expect("key registered in basis"), c.clone())
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_independent() {
        let a = BasisRegistry::new(["c", "a", "b"]);
        let b = BasisRegistry::new(["b", "c", "a", "a"]);
        assert_eq!(a.keys(), b.keys());
        assert_eq!(a.index_of(&"c"), Some(2));
    }
}
