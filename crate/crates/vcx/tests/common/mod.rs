#![allow(dead_code)] // each test target uses a different slice of this module

//! Independent brute-force oracles and seeded random-family generation,
//! shared by the integration test suites. Everything here recomputes from
//! first principles (no reuse of the library's fast paths) so the fast
//! paths can be validated against it.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vcx::sets::{all_ksets, Family, GroundSet, KSet};

/// Naive shattering test: enumerate every subset of `s` and look for a
/// member realizing it.
pub fn naive_shatters(members: &[u64], s: u64) -> bool {
    if members.is_empty() {
        return false;
    }
    let mut sub = s;
    loop {
        if !members.iter().any(|&m| m & s == sub) {
            return false;
        }
        if sub == 0 {
            return true;
        }
        sub = (sub - 1) & s;
    }
}

/// Naive VC dimension: scan all subsets of [n] (largest shattered wins).
pub fn naive_vc_dimension(family: &Family) -> u32 {
    let n = family.ground().n();
    let members: Vec<u64> = family.members().iter().map(|m| m.bits()).collect();
    let mut best = 0u32;
    for s in 0..(1u64 << n) {
        if s.count_ones() > best && naive_shatters(&members, s) {
            best = s.count_ones();
        }
    }
    best
}

/// Naive transversal number by subset enumeration in increasing size.
pub fn naive_tau(family: &Family) -> usize {
    let n = family.ground().n();
    let members: Vec<u64> = family.members().iter().map(|m| m.bits()).collect();
    for size in 0..=n {
        for t in all_ksets(n, size) {
            if members.iter().all(|&m| m & t.bits() != 0) {
                return size as usize;
            }
        }
    }
    unreachable!("the full ground set is always a transversal");
}

/// Naive per-member witness: maximum-cardinality proper submask that no
/// member realizes as an intersection, smallest bitmask on ties.
pub fn naive_witness(family: &Family, member: KSet) -> Option<u64> {
    let f = member.bits();
    let mut best: Option<u64> = None;
    let mut sub = f;
    loop {
        sub = (sub - 1) & f; // proper submasks only
        let realized = family.members().iter().any(|g| g.bits() & f == sub);
        if !realized {
            best = match best {
                None => Some(sub),
                Some(b) if sub.count_ones() > b.count_ones() => Some(sub),
                Some(b) if sub.count_ones() == b.count_ones() && sub < b => Some(sub),
                keep => keep,
            };
        }
        if sub == 0 {
            return best;
        }
    }
}

/// Naive linear-triangle scan over all member triples.
pub fn naive_linear_triangle(family: &Family) -> Option<[u64; 3]> {
    let m: Vec<u64> = family.members().iter().map(|s| s.bits()).collect();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            for l in j + 1..m.len() {
                let ij = m[i] & m[j];
                let il = m[i] & m[l];
                let jl = m[j] & m[l];
                let singles =
                    ij.count_ones() == 1 && il.count_ones() == 1 && jl.count_ones() == 1;
                let distinct = ij != il && ij != jl && il != jl;
                if singles && distinct && (m[i] | m[j] | m[l]).count_ones() == 6 {
                    return Some([m[i], m[j], m[l]]);
                }
            }
        }
    }
    None
}

/// A random 3-uniform family on [n] with VC-dimension <= 2, built by
/// shuffling the candidate triples and greedily keeping those that pass
/// the naive VC test. Deterministic per seed.
pub fn random_vc2_family(n: u32, max_size: usize, rng: &mut ChaCha8Rng) -> Family {
    let mut cands = all_ksets(n, 3);
    cands.shuffle(rng);
    let target = rng.gen_range(1..=max_size);
    let mut members: Vec<u64> = Vec::new();
    for c in cands {
        members.push(c.bits());
        let ok = all_ksets(n, 3)
            .iter()
            .all(|s| !naive_shatters(&members, s.bits()));
        if !ok {
            members.pop();
        }
        if members.len() == target {
            break;
        }
    }
    let ground = GroundSet::new(n).unwrap();
    Family::new(ground, members.into_iter().map(KSet::from_bits).collect()).unwrap()
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Proper supersets of `sub` strictly inside `full`.
pub fn all_supersets_within(sub: u64, full: u64) -> Vec<u64> {
    let free = full & !sub;
    let mut out = Vec::new();
    let mut add = free;
    while add != 0 {
        let s = sub | add;
        if s != full {
            out.push(s);
        }
        add = (add - 1) & free;
    }
    out
}

/// The seeded random-family property suite: generates `cases` random
/// 3-uniform VC<=2 families on n in 5..=8 and validates the incremental
/// check, the uniform specialization, witness properties, and the
/// count identities against the oracles above. Panics on any violation.
pub fn property_suite(seed: u64, cases: usize) {
    use rand::Rng;
    use vcx::shatter::{
        incremental_vc_check, uniform_vc_at_most, vc_dimension, ShatterCache,
    };
    use vcx::witness::{blc_summary, witness_assignment};

    let mut rng = seeded_rng(seed);
    for case in 0..cases {
        let n = rng.gen_range(5..=8);
        let family = random_vc2_family(n, 15, &mut rng);
        let members: Vec<u64> = family.members().iter().map(|m| m.bits()).collect();

        // (b) the uniform specialization agrees with the real VC dimension
        let naive_dim = naive_vc_dimension(&family);
        assert!(naive_dim <= 2, "case {case}: generator broke its own invariant");
        assert_eq!(vc_dimension(&family).unwrap(), naive_dim, "case {case}");
        assert!(uniform_vc_at_most(&family, 2).unwrap(), "case {case}");

        // (a) incremental check vs the naive oracle on the extended family
        // (n = 5 can produce the full ([5] choose 3), leaving no candidate)
        let cache = ShatterCache::from_family(&family).unwrap();
        let cands = all_ksets(n, 3);
        let spare = cands.len() - family.len();
        for _ in 0..5.min(spare) {
            let cand = loop {
                let c = cands[rng.gen_range(0..cands.len())];
                if !family.contains(c) {
                    break c;
                }
            };
            let fast = incremental_vc_check(&family, cand, 2, &cache).unwrap();
            let mut ext = members.clone();
            ext.push(cand.bits());
            let slow = cands.iter().all(|s| !naive_shatters(&ext, s.bits()));
            assert_eq!(fast, slow, "case {case}: candidate {cand}");
        }

        // (c) witness defining property, maximality, pair distinctness
        let wa = witness_assignment(&family).unwrap();
        let mut pair_witnesses = Vec::new();
        for (f, w) in family.members().iter().zip(&wa.witnesses) {
            assert!(w.is_subset_of(*f) && w.bits() != f.bits(), "case {case}");
            assert!(
                !family.members().iter().any(|g| g.bits() & f.bits() == w.bits()),
                "case {case}: witness {w} of {f} is realized"
            );
            for sup in all_supersets_within(w.bits(), f.bits()) {
                assert!(
                    family.members().iter().any(|g| g.bits() & f.bits() == sup),
                    "case {case}: witness {w} of {f} is not maximal"
                );
            }
            if w.card() == 2 {
                assert!(
                    !pair_witnesses.contains(&w.bits()),
                    "case {case}: duplicate pair witness {w}"
                );
                pair_witnesses.push(w.bits());
            }
        }

        // (d) count identity with multiplicity, and the B/L/C identity
        // exactly when singleton multiplicities are 1
        let s = blc_summary(&family, &wa);
        let size1: usize = s.singleton_multiplicities.values().sum();
        assert_eq!(s.m, s.b + size1 + s.c, "case {case}");
        let distinct_singletons = s.singleton_multiplicities.values().all(|&m| m == 1);
        assert_eq!(
            s.identity_holds,
            distinct_singletons && s.m == s.b + s.l + s.c,
            "case {case}"
        );
    }
}
