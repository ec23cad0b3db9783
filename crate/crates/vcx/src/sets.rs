//! Ground sets, single-word set representation, and set families.
//!
//! Elements are `1..=n` with `n <= 64`; element `e` occupies bit `e - 1`,
//! so every subset of the ground set is one `u64` and colexicographic
//! order on sets coincides with numeric order on bitmasks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground set `[n] = {1, ..., n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundSet {
    n: u32,
}

impl GroundSet {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::GroundSetSize(n as u64));
        }
        Ok(GroundSet { n })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Bitmask with all `n` element bits set.
    #[inline]
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn contains_mask(&self, bits: u64) -> bool {
        bits & !self.full_mask() == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        1..=self.n
    }
}

/// A subset of the ground set as a bitmask; cardinality is `popcount(bits)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KSet(u64);

impl KSet {
    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        KSet(bits)
    }

    /// Builds a set from 1-based elements; duplicates collapse.
    pub fn from_elements(elements: &[u32]) -> Result<Self> {
        let mut bits = 0u64;
        for &e in elements {
            if e == 0 || e > 64 {
                return Err(Error::OutOfRange { element: e, n: 64 });
            }
            bits |= 1u64 << (e - 1);
        }
        Ok(KSet(bits))
    }

    pub const EMPTY: KSet = KSet(0);

    #[inline]
    pub fn bits(&self) -> u64 {
        self.0
    }

    #[inline]
    pub fn card(&self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub fn contains(&self, element: u32) -> bool {
        debug_assert!((1..=64).contains(&element));
        self.0 & (1u64 << (element - 1)) != 0
    }

    #[inline]
    pub fn intersect(&self, other: KSet) -> KSet {
        KSet(self.0 & other.0)
    }

    #[inline]
    pub fn union(&self, other: KSet) -> KSet {
        KSet(self.0 | other.0)
    }

    #[inline]
    pub fn minus(&self, other: KSet) -> KSet {
        KSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(&self, other: KSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ascending 1-based elements.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() + 1;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// Relabels elements through `perm`, where `perm[i]` is the image of
    /// element `i + 1`.
    pub fn relabel(&self, perm: &[u32]) -> KSet {
        let mut out = 0u64;
        for e in self.elements() {
            out |= 1u64 << (perm[(e - 1) as usize] - 1);
        }
        KSet(out)
    }
}

impl fmt::Display for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// An ordered, duplicate-free collection of subsets of a shared ground set.
///
/// Members are stored in colexicographic (numeric bitmask) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    ground: GroundSet,
    members: Vec<KSet>,
    uniform_k: Option<u32>,
}

impl Family {
    pub fn new(ground: GroundSet, mut members: Vec<KSet>) -> Result<Self> {
        for m in &members {
            if !ground.contains_mask(m.bits()) {
                let element = 64 - m.bits().leading_zeros();
                return Err(Error::OutOfRange {
                    element,
                    n: ground.n(),
                });
            }
        }
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateMember(w[0]));
            }
        }
        let uniform_k = match members.split_first() {
            None => None,
            Some((first, rest)) => {
                let k = first.card();
                for m in rest {
                    if m.card() != k {
                        return Err(Error::NotUniform {
                            first: k,
                            other: m.card(),
                        });
                    }
                }
                Some(k)
            }
        };
        Ok(Family {
            ground,
            members,
            uniform_k,
        })
    }

    /// Builds a family from 1-based element lists.
    pub fn from_element_lists(n: u32, lists: &[&[u32]]) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let mut members = Vec::with_capacity(lists.len());
        for list in lists {
            let s = KSet::from_elements(list)?;
            if !ground.contains_mask(s.bits()) {
                return Err(Error::OutOfRange {
                    element: *list.iter().max().unwrap_or(&0),
                    n,
                });
            }
            members.push(s);
        }
        Family::new(ground, members)
    }

    #[inline]
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    #[inline]
    pub fn members(&self) -> &[KSet] {
        &self.members
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn uniform_k(&self) -> Option<u32> {
        self.uniform_k
    }

    pub fn contains(&self, s: KSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    /// Number of members containing `element`.
    pub fn degree(&self, element: u32) -> usize {
        self.members.iter().filter(|m| m.contains(element)).count()
    }

    /// Applies a relabeling permutation of `[n]` to every member.
    pub fn relabel(&self, perm: &[u32]) -> Result<Family> {
        if perm.len() != self.ground.n() as usize {
            return Err(Error::InvalidParameter(format!(
                "permutation length {} does not match n = {}",
                perm.len(),
                self.ground.n()
            )));
        }
        let members = self.members.iter().map(|m| m.relabel(perm)).collect();
        Family::new(self.ground, members)
    }

    /// Union of all members.
    pub fn support(&self) -> KSet {
        KSet(self.members.iter().fold(0u64, |acc, m| acc | m.bits()))
    }
}

/// All k-subsets of `[n]` in colexicographic order.
pub fn all_ksets(n: u32, k: u32) -> Vec<KSet> {
    assert!(n <= 64);
    let mut out = Vec::new();
    if k == 0 {
        out.push(KSet::EMPTY);
        return out;
    }
    if k > n {
        return out;
    }
    // Gosper's hack, staying within n bits.
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut v = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    loop {
        out.push(KSet(v));
        let c = v & v.wrapping_neg();
        let r = match v.checked_add(c) {
            Some(r) => r,
            None => break,
        };
        v = (((r ^ v) >> 2) / c) | r;
        if v > limit {
            break;
        }
    }
    out
}

/// Binomial coefficient with saturation-free exact arithmetic for the
/// small parameters used here.
pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
