//! Shattering tests and VC-dimension computation.

use std::collections::HashSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::sets::{Family, KSet};

/// Compresses a submask of `mask` to its index among the `2^|mask|`
/// possible patterns (software PEXT).
#[inline]
pub fn pattern_index(sub: u64, mask: u64) -> u64 {
    debug_assert_eq!(sub & !mask, 0);
    let mut idx = 0u64;
    let mut out_bit = 0u32;
    let mut m = mask;
    while m != 0 {
        let low = m & m.wrapping_neg();
        if sub & low != 0 {
            idx |= 1u64 << out_bit;
        }
        out_bit += 1;
        m &= m - 1;
    }
    idx
}

/// Realized intersection patterns of `family` on a target set.
#[derive(Debug, Clone)]
pub struct ShatterWitnessTable {
    pub target: KSet,
    pub realized: HashSet<u64>,
}

impl ShatterWitnessTable {
    pub fn compute(family: &Family, target: KSet) -> ShatterWitnessTable {
        let realized = family
            .members()
            .iter()
            .map(|f| f.bits() & target.bits())
            .collect();
        ShatterWitnessTable { target, realized }
    }

    pub fn is_shattered(&self) -> bool {
        let t = self.target.card();
        t < 64 && self.realized.len() as u64 == 1u64 << t
    }
}

/// Does `family` realize every subset of `s` as an intersection pattern?
///
/// The empty family shatters nothing, including the empty set.
pub fn shatters(family: &Family, s: KSet) -> Result<bool> {
    if !family.ground().contains_mask(s.bits()) {
        let element = 64 - s.bits().leading_zeros();
        return Err(Error::OutOfRange {
            element,
            n: family.ground().n(),
        });
    }
    if family.is_empty() {
        return Ok(false);
    }
    let t = s.card();
    if t <= 6 {
        // pattern set fits one machine word
        let mut seen = 0u64;
        let full = if t == 0 { 1 } else { (1u64 << (1u64 << t)) - 1 };
        for f in family.members() {
            seen |= 1u64 << pattern_index(f.bits() & s.bits(), s.bits());
            if seen == full {
                return Ok(true);
            }
        }
        Ok(seen == full)
    } else {
        Ok(ShatterWitnessTable::compute(family, s).is_shattered())
    }
}

/// Largest `|S|` over shattered `S`, by increasing-size sweep with early
/// exit. For a k-uniform family the sweep is capped at `k`.
pub fn vc_dimension(family: &Family) -> Result<u32> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let n = family.ground().n();
    let cap = family
        .members()
        .iter()
        .map(|m| m.card())
        .max()
        .unwrap()
        .min(n);
    let mut dim = 0u32;
    for t in 1..=cap {
        let mut any = false;
        for combo in (1..=n).combinations(t as usize) {
            let s = KSet::from_elements(&combo)?;
            if shatters(family, s)? {
                any = true;
                break;
            }
        }
        if !any {
            // shattering is downward closed, so no larger set is shattered
            return Ok(dim);
        }
        dim = t;
    }
    Ok(dim)
}

/// Fast check that a (d+1)-uniform family has VC-dimension at most d:
/// only the members themselves can be shattered at size d+1.
pub fn uniform_vc_at_most(family: &Family, d: u32) -> Result<bool> {
    check_uniform(family, d)?;
    if d >= 6 {
        return Err(Error::Capability(format!(
            "uniform check supports d <= 5, got {d}"
        )));
    }
    for f in family.members() {
        if member_shattered(family, *f) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_uniform(family: &Family, d: u32) -> Result<()> {
    match family.uniform_k() {
        None if family.is_empty() => Ok(()),
        Some(k) if k == d + 1 => Ok(()),
        other => Err(Error::UniformityMismatch {
            expected: d + 1,
            found: other,
        }),
    }
}

fn member_shattered(family: &Family, f: KSet) -> bool {
    let k = f.card();
    debug_assert!(k <= 6);
    let full = (1u64 << (1u64 << k)) - 1;
    let mut seen = 0u64;
    for g in family.members() {
        seen |= 1u64 << pattern_index(g.bits() & f.bits(), f.bits());
        if seen == full {
            return true;
        }
    }
    false
}

/// Per-member realized-pattern masks for a (d+1)-uniform family, kept
/// incrementally during search. Requires `k <= 6` so each member's
/// pattern set fits one word.
#[derive(Debug, Clone)]
pub struct ShatterCache {
    k: u32,
    full: u64,
    members: Vec<u64>,
    realized: Vec<u64>,
    // one undo frame per push: masks overwritten in `realized`
    undo: Vec<Vec<(usize, u64)>>,
}

impl ShatterCache {
    pub fn new(k: u32) -> Result<ShatterCache> {
        if k == 0 || k > 6 {
            return Err(Error::Capability(format!(
                "incremental shatter cache supports 1 <= k <= 6, got {k}"
            )));
        }
        Ok(ShatterCache {
            k,
            full: (1u64 << (1u64 << k)) - 1,
            members: Vec::new(),
            realized: Vec::new(),
            undo: Vec::new(),
        })
    }

    pub fn from_family(family: &Family) -> Result<ShatterCache> {
        let k = family.uniform_k().ok_or(Error::EmptyFamily)?;
        let mut cache = ShatterCache::new(k)?;
        for m in family.members() {
            if !cache.try_push(m.bits()) {
                return Err(Error::MemberShattered { member: *m });
            }
        }
        Ok(cache)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Would adding `cand` keep VC-dimension at most k-1?
    pub fn admits(&self, cand: u64) -> bool {
        debug_assert_eq!(cand.count_ones(), self.k);
        // (a) does cand itself become shattered? cand ∩ cand realizes the
        // full pattern on cand, so start from that bit.
        let mut own = 1u64 << ((1u64 << self.k) - 1);
        for &m in &self.members {
            own |= 1u64 << pattern_index(m & cand, cand);
        }
        if own == self.full {
            return false;
        }
        // (b) does the new pattern complete any existing member's powerset?
        for (i, &m) in self.members.iter().enumerate() {
            let p = 1u64 << pattern_index(cand & m, m);
            if self.realized[i] | p == self.full {
                return false;
            }
        }
        true
    }

    /// Adds `cand` if the extended family still has VC-dimension < k;
    /// returns whether it was added.
    pub fn try_push(&mut self, cand: u64) -> bool {
        if !self.admits(cand) {
            return false;
        }
        self.push_unchecked(cand);
        true
    }

    pub fn push_unchecked(&mut self, cand: u64) {
        let mut own = 1u64 << ((1u64 << self.k) - 1);
        let mut frame = Vec::new();
        for (i, &m) in self.members.iter().enumerate() {
            own |= 1u64 << pattern_index(m & cand, cand);
            let bit = 1u64 << pattern_index(cand & m, m);
            if self.realized[i] & bit == 0 {
                frame.push((i, self.realized[i]));
                self.realized[i] |= bit;
            }
        }
        self.members.push(cand);
        self.realized.push(own);
        self.undo.push(frame);
    }

    /// Removes the most recently added member, restoring the pattern
    /// masks it contributed to.
    pub fn pop(&mut self) {
        self.members.pop().expect("pop on empty cache");
        self.realized.pop();
        let frame = self.undo.pop().expect("undo frame missing");
        for (i, mask) in frame {
            self.realized[i] = mask;
        }
    }
}

/// Incremental test that `family ∪ {candidate}` still has VC-dimension
/// at most `d`, given per-member realized-pattern caches for `family`.
pub fn incremental_vc_check(
    family: &Family,
    candidate: KSet,
    d: u32,
    cache: &ShatterCache,
) -> Result<bool> {
    check_uniform(family, d)?;
    if candidate.card() != d + 1 {
        return Err(Error::UniformityMismatch {
            expected: d + 1,
            found: Some(candidate.card()),
        });
    }
    if !family.ground().contains_mask(candidate.bits()) {
        let element = 64 - candidate.bits().leading_zeros();
        return Err(Error::OutOfRange {
            element,
            n: family.ground().n(),
        });
    }
    if family.contains(candidate) {
        return Err(Error::CandidateInFamily(candidate));
    }
    debug_assert_eq!(cache.len(), family.len());
    Ok(cache.admits(candidate.bits()))
}
