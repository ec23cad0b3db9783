//! Structural predicates: transversal numbers, intersection properties,
//! linear triangles, link graphs, and canonical forms for isomorphism
//! rejection.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sets::{Family, KSet};

/// Exact minimum transversal size with all size-tau transversals.
///
/// Every size-tau transversal is automatically minimal: a proper subset
/// would be a smaller transversal, contradicting minimality of tau.
#[derive(Debug, Clone, Serialize)]
pub struct TransversalCertificate {
    pub tau: usize,
    pub minimum: Vec<u32>,
    pub all_minimum: Vec<Vec<u32>>,
}

/// Branch and bound over elements: pick an uncovered member, branch on
/// its elements.
pub fn transversal_number(family: &Family) -> Result<TransversalCertificate> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let members: Vec<u64> = family.members().iter().map(|m| m.bits()).collect();

    fn first_uncovered(members: &[u64], chosen: u64) -> Option<u64> {
        members.iter().copied().find(|m| m & chosen == 0)
    }

    fn best_tau(members: &[u64], chosen: u64, size: usize, best: &mut usize) {
        if size >= *best {
            return;
        }
        match first_uncovered(members, chosen) {
            None => *best = size,
            Some(m) => {
                let mut bits = m;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    best_tau(members, chosen | low, size + 1, best);
                    bits &= bits - 1;
                }
            }
        }
    }

    let mut best = members.len().min(64) + 1;
    best_tau(&members, 0, 0, &mut best);
    let tau = best;

    // collect every transversal of size exactly tau; the same branching is
    // complete because an uncovered member must contribute an element
    fn collect(members: &[u64], chosen: u64, size: usize, tau: usize, out: &mut BTreeSet<u64>) {
        match first_uncovered(members, chosen) {
            None => {
                // size < tau would contradict the minimality of tau
                debug_assert_eq!(size, tau);
                out.insert(chosen);
            }
            Some(m) => {
                if size == tau {
                    return;
                }
                let mut bits = m;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    collect(members, chosen | low, size + 1, tau, out);
                    bits &= bits - 1;
                }
            }
        }
    }

    let mut all = BTreeSet::new();
    collect(&members, 0, 0, tau, &mut all);
    let all_minimum: Vec<Vec<u32>> = all
        .iter()
        .map(|&t| KSet::from_bits(t).elements().collect())
        .collect();
    let minimum = all_minimum[0].clone();
    Ok(TransversalCertificate {
        tau,
        minimum,
        all_minimum,
    })
}

pub fn is_intersecting(family: &Family) -> bool {
    let m = family.members();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if m[i].bits() & m[j].bits() == 0 {
                return false;
            }
        }
    }
    true
}

pub fn is_2_intersecting(family: &Family) -> bool {
    let m = family.members();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if (m[i].bits() & m[j].bits()).count_ones() < 2 {
                return false;
            }
        }
    }
    true
}

pub fn are_cross_intersecting(f1: &Family, f2: &Family) -> bool {
    f1.members()
        .iter()
        .all(|a| f2.members().iter().all(|b| a.bits() & b.bits() != 0))
}

/// Three members pairwise meeting in single, distinct elements with a
/// 6-element union.
pub fn find_linear_triangle(family: &Family) -> Result<Option<[KSet; 3]>> {
    match family.uniform_k() {
        Some(3) | None => {}
        other => {
            return Err(Error::UniformityMismatch {
                expected: 3,
                found: other,
            })
        }
    }
    let m = family.members();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            let ij = m[i].bits() & m[j].bits();
            if ij.count_ones() != 1 {
                continue;
            }
            for l in j + 1..m.len() {
                let il = m[i].bits() & m[l].bits();
                let jl = m[j].bits() & m[l].bits();
                if il.count_ones() != 1 || jl.count_ones() != 1 {
                    continue;
                }
                let distinct = ij != il && ij != jl && il != jl;
                let union = m[i].bits() | m[j].bits() | m[l].bits();
                if distinct && union.count_ones() == 6 {
                    return Ok(Some([m[i], m[j], m[l]]));
                }
            }
        }
    }
    Ok(None)
}

/// The link graph at `z`: edges `F \ {z}` over 3-element members
/// containing `z`.
#[derive(Debug, Clone)]
pub struct LinkGraph {
    pub center: u32,
    pub graph: Graph,
}

pub fn link_graph(family: &Family, z: u32) -> Result<LinkGraph> {
    if z == 0 || z > family.ground().n() {
        return Err(Error::OutOfRange {
            element: z,
            n: family.ground().n(),
        });
    }
    let mut graph = Graph::new(family.ground());
    let zbit = 1u64 << (z - 1);
    for f in family.members() {
        if f.card() == 3 && f.bits() & zbit != 0 {
            graph.insert_edge_mask(f.bits() & !zbit);
        }
    }
    Ok(LinkGraph { center: z, graph })
}

/// Canonical byte string: lexicographically minimal sorted member-bitmask
/// sequence over all n! relabelings of `[n]`, prefixed with `n`.
pub fn canonical_form(family: &Family) -> Result<Vec<u8>> {
    let n = family.ground().n();
    if n > 10 {
        return Err(Error::Capability(format!(
            "exhaustive canonicalization is gated at n <= 10 (got n = {n}); \
             use the invariant fingerprint instead"
        )));
    }
    let masks: Vec<u64> = family.members().iter().map(|m| m.bits()).collect();
    let mut best: Option<Vec<u64>> = None;

    // perm[i] = 1-based image of element i+1
    let mut perm: Vec<u32> = (1..=n).collect();
    permute_all(&mut perm, 0, &mut |p| {
        let mut relabeled: Vec<u64> = masks
            .iter()
            .map(|&m| {
                let mut out = 0u64;
                let mut bits = m;
                while bits != 0 {
                    let e = bits.trailing_zeros() as usize;
                    out |= 1u64 << (p[e] - 1);
                    bits &= bits - 1;
                }
                out
            })
            .collect();
        relabeled.sort_unstable();
        match &best {
            Some(b) if *b <= relabeled => {}
            _ => best = Some(relabeled),
        }
    });

    let best = best.unwrap_or_default();
    let mut out = Vec::with_capacity(1 + best.len() * 8);
    out.push(n as u8);
    for m in best {
        out.extend_from_slice(&m.to_le_bytes());
    }
    Ok(out)
}

fn permute_all(perm: &mut [u32], i: usize, f: &mut impl FnMut(&[u32])) {
    if i == perm.len() {
        f(perm);
        return;
    }
    for j in i..perm.len() {
        perm.swap(i, j);
        permute_all(perm, i + 1, f);
        perm.swap(i, j);
    }
}

pub fn are_isomorphic(f1: &Family, f2: &Family) -> Result<bool> {
    if f1.ground().n() != f2.ground().n() || f1.len() != f2.len() {
        return Ok(false);
    }
    if fingerprint(f1) != fingerprint(f2) {
        return Ok(false);
    }
    Ok(canonical_form(f1)? == canonical_form(f2)?)
}

/// Cheap isomorphism-invariant vector: member count, sorted degree
/// sequence, sorted pair-degree multiset.
pub fn fingerprint(family: &Family) -> Vec<u64> {
    let n = family.ground().n();
    let mut out = vec![family.len() as u64];
    let mut degrees: Vec<u64> = (1..=n).map(|x| family.degree(x) as u64).collect();
    degrees.sort_unstable();
    out.extend(degrees);
    let mut pair_degrees = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            let pair = (1u64 << (a - 1)) | (1u64 << (b - 1));
            let d = family
                .members()
                .iter()
                .filter(|m| m.bits() & pair == pair)
                .count() as u64;
            pair_degrees.push(d);
        }
    }
    pair_degrees.sort_unstable();
    out.extend(pair_degrees);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::star_family;

    #[test]
    fn linear_triangle_transversals_match_the_six_pairs() {
        let f = Family::from_element_lists(6, &[&[1, 4, 2], &[2, 6, 3], &[1, 5, 3]]).unwrap();
        let cert = transversal_number(&f).unwrap();
        assert_eq!(cert.tau, 2);
        let expected: BTreeSet<Vec<u32>> = [
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
            vec![1, 6],
            vec![2, 5],
            vec![3, 4],
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<Vec<u32>> = cert.all_minimum.into_iter().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn star_has_transversal_number_one() {
        let f = star_family(6, 3, 1).unwrap();
        assert_eq!(transversal_number(&f).unwrap().tau, 1);
    }

    #[test]
    fn intersection_properties() {
        let ground = crate::sets::GroundSet::new(4).unwrap();
        let all43 = Family::new(ground, crate::sets::all_ksets(4, 3)).unwrap();
        assert!(is_2_intersecting(&all43));
        let f = Family::from_element_lists(5, &[&[1, 2, 3], &[1, 4, 5]]).unwrap();
        assert!(is_intersecting(&f));
        assert!(!is_2_intersecting(&f));
        let g5 = crate::sets::GroundSet::new(5).unwrap();
        let all53 = Family::new(g5, crate::sets::all_ksets(5, 3)).unwrap();
        assert!(is_intersecting(&all53));
    }

    #[test]
    fn linear_triangle_found_and_absent() {
        let f = Family::from_element_lists(6, &[&[1, 4, 2], &[2, 6, 3], &[1, 5, 3]]).unwrap();
        assert!(find_linear_triangle(&f).unwrap().is_some());
        let star = star_family(7, 3, 1).unwrap();
        assert!(find_linear_triangle(&star).unwrap().is_none());
    }

    #[test]
    fn stars_at_different_centers_are_isomorphic() {
        let s1 = star_family(6, 3, 1).unwrap();
        let s2 = star_family(6, 3, 2).unwrap();
        assert_eq!(
            canonical_form(&s1).unwrap(),
            canonical_form(&s2).unwrap()
        );
        assert!(are_isomorphic(&s1, &s2).unwrap());
    }

    #[test]
    fn canonicalization_gated_above_n_10() {
        let f = Family::from_element_lists(11, &[&[1, 2, 3]]).unwrap();
        assert!(matches!(canonical_form(&f), Err(Error::Capability(_))));
    }
}
