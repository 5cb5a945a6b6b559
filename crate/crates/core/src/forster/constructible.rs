use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::exactmath::is_prime_u64;

/// A finite or cofinite set of primes: the locally closed subsets of `Max Z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstructibleSet {
    Finite(#[serde(with = "crate::format::dec::seq")] BTreeSet<u64>),
    /// All primes except the listed ones.
    Cofinite(#[serde(with = "crate::format::dec::seq")] BTreeSet<u64>),
}

use ConstructibleSet::{Cofinite, Finite};

impl ConstructibleSet {
    pub fn empty() -> Self {
        Finite(BTreeSet::new())
    }

    pub fn everything() -> Self {
        Cofinite(BTreeSet::new())
    }

    pub fn finite(primes: impl IntoIterator<Item = u64>) -> Self {
        Finite(primes.into_iter().collect())
    }

    pub fn cofinite(excluded: impl IntoIterator<Item = u64>) -> Self {
        Cofinite(excluded.into_iter().collect())
    }

    pub fn contains(&self, p: u64) -> bool {
        match self {
            Finite(s) => s.contains(&p),
            Cofinite(x) => is_prime_u64(p) && !x.contains(&p),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Finite(s) if s.is_empty())
    }

    /// Krull dimension: `None` for the empty set, 0 for finite, 1 for cofinite.
    pub fn dim(&self) -> Option<u8> {
        match self {
            Finite(s) if s.is_empty() => None,
            Finite(_) => Some(0),
            Cofinite(_) => Some(1),
        }
    }

    pub fn complement(&self) -> Self {
        match self {
            Finite(s) => Cofinite(s.clone()),
            Cofinite(x) => Finite(x.clone()),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a | b),
            (Cofinite(x), Cofinite(y)) => Cofinite(x & y),
            (Finite(a), Cofinite(x)) | (Cofinite(x), Finite(a)) => Cofinite(x - a),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a & b),
            (Cofinite(x), Cofinite(y)) => Cofinite(x | y),
            (Finite(a), Cofinite(x)) | (Cofinite(x), Finite(a)) => Finite(a - x),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    /// The smallest prime in the set.
    pub fn smallest(&self) -> Option<u64> {
        match self {
            Finite(s) => s.first().copied(),
            Cofinite(x) => (2..).find(|&p| is_prime_u64(p) && !x.contains(&p)),
        }
    }

    /// Representatives meeting every irreducible component: all points of a
    /// finite set, the smallest prime of a cofinite one.
    pub fn representatives(&self) -> Vec<u64> {
        match self {
            Finite(s) => s.iter().copied().collect(),
            Cofinite(_) => self.smallest().into_iter().collect(),
        }
    }

    /// The `k` smallest primes in the set (fewer if it is smaller).
    pub fn first_primes(&self, k: usize) -> Vec<u64> {
        match self {
            Finite(s) => s.iter().take(k).copied().collect(),
            Cofinite(x) => (2..).filter(|&p| is_prime_u64(p) && !x.contains(&p)).take(k).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

    fn arb_set() -> impl Strategy<Value = ConstructibleSet> {
        (any::<bool>(), proptest::sample::subsequence(PRIMES.to_vec(), 0..=8)).prop_map(|(fin, v)| {
            if fin {
                ConstructibleSet::finite(v)
            } else {
                ConstructibleSet::cofinite(v)
            }
        })
    }

    #[test]
    fn dimensions() {
        assert_eq!(ConstructibleSet::empty().dim(), None);
        assert_eq!(ConstructibleSet::finite([2]).dim(), Some(0));
        assert_eq!(ConstructibleSet::everything().dim(), Some(1));
        assert_eq!(ConstructibleSet::cofinite([2, 3]).smallest(), Some(5));
        let d = ConstructibleSet::cofinite([2]).difference(&ConstructibleSet::cofinite([2, 3, 5]));
        assert_eq!(d, ConstructibleSet::finite([3, 5]));
    }

    proptest! {
        #[test]
        fn boolean_ops_agree_pointwise(a in arb_set(), b in arb_set()) {
            // 23 lies outside every generated excluded set.
            for p in PRIMES.iter().copied().chain([23]) {
                prop_assert_eq!(a.union(&b).contains(p), a.contains(p) || b.contains(p));
                prop_assert_eq!(a.intersection(&b).contains(p), a.contains(p) && b.contains(p));
                prop_assert_eq!(a.difference(&b).contains(p), a.contains(p) && !b.contains(p));
            }
        }
    }
}
