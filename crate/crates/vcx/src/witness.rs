//! Maximal witness subsets and the B / L / C decomposition.
//!
//! For each member F_i, the witness is a maximum-cardinality proper
//! subset B_i of F_i that no member realizes as an intersection with
//! F_i. Size-2 witnesses form the pair graph B, singleton witnesses
//! collect into L, and members with empty witness form C.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sets::{binom, Family, KSet};
use crate::shatter::pattern_index;

#[derive(Debug, Clone)]
pub struct WitnessAssignment {
    /// Witness per member, parallel to `family.members()`.
    pub witnesses: Vec<KSet>,
    /// The pair graph B: size-2 witnesses as edges on `[n]`.
    pub pair_graph: Graph,
    /// Multiplicity ledger of singleton-witness elements (L).
    pub singleton_multiplicities: BTreeMap<u32, usize>,
    /// Indices into the family of members with empty witness (C).
    pub empty_members: Vec<usize>,
    /// Indices of members whose witness has cardinality >= 3 (only
    /// possible for k >= 4).
    pub large_witness_members: Vec<usize>,
}

impl WitnessAssignment {
    /// The sub-family C.
    pub fn empty_witness_family(&self, family: &Family) -> Family {
        let members = self
            .empty_members
            .iter()
            .map(|&i| family.members()[i])
            .collect();
        Family::new(family.ground(), members).expect("C is a sub-family")
    }

    /// Elements of L.
    pub fn singleton_elements(&self) -> Vec<u32> {
        self.singleton_multiplicities.keys().copied().collect()
    }
}

/// Computes the deterministic maximal witness assignment.
///
/// Among all proper subsets of a member that no member's intersection
/// realizes, picks one of maximum cardinality, ties broken by smallest
/// bitmask value.
pub fn witness_assignment(family: &Family) -> Result<WitnessAssignment> {
    let k = family.uniform_k().ok_or(Error::EmptyFamily)?;
    if k > 6 {
        return Err(Error::Capability(format!(
            "witness assignment supports k <= 6, got {k}"
        )));
    }
    let mut witnesses = Vec::with_capacity(family.len());
    let mut pair_graph = Graph::new(family.ground());
    let mut singleton_multiplicities: BTreeMap<u32, usize> = BTreeMap::new();
    let mut empty_members = Vec::new();
    let mut large_witness_members = Vec::new();

    for (i, f) in family.members().iter().enumerate() {
        // realized patterns on f, indexed by compressed submask
        let mut realized = 0u64;
        for g in family.members() {
            realized |= 1u64 << pattern_index(g.bits() & f.bits(), f.bits());
        }
        // proper submasks of f by descending size, ascending bitmask value
        let mut found = None;
        'search: for size in (0..k).rev() {
            let mut sub = f.bits();
            // enumerate submasks in ascending numeric order
            let mut candidates: Vec<u64> = Vec::new();
            loop {
                if sub.count_ones() == size {
                    candidates.push(sub);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f.bits();
            }
            candidates.sort_unstable();
            for c in candidates {
                if realized & (1u64 << pattern_index(c, f.bits())) == 0 {
                    found = Some(KSet::from_bits(c));
                    break 'search;
                }
            }
        }
        let b = found.ok_or(Error::MemberShattered { member: *f })?;
        match b.card() {
            0 => empty_members.push(i),
            1 => {
                let e = b.elements().next().unwrap();
                *singleton_multiplicities.entry(e).or_insert(0) += 1;
            }
            2 => pair_graph.insert_edge_mask(b.bits()),
            _ => large_witness_members.push(i),
        }
        witnesses.push(b);
    }

    Ok(WitnessAssignment {
        witnesses,
        pair_graph,
        singleton_multiplicities,
        empty_members,
        large_witness_members,
    })
}

/// Counts for the |F| = |B| + |L| + |C| identity.
#[derive(Debug, Clone, Serialize)]
pub struct BlcSummary {
    pub m: usize,
    pub b: usize,
    pub l: usize,
    pub c: usize,
    pub singleton_multiplicities: BTreeMap<u32, usize>,
    /// Witnesses of size >= 3 (empty for 3-uniform families).
    pub larger: usize,
    pub identity_holds: bool,
}

pub fn blc_summary(family: &Family, wa: &WitnessAssignment) -> BlcSummary {
    let m = family.len();
    let b = wa.pair_graph.edge_count();
    let l = wa.singleton_multiplicities.len();
    let c = wa.empty_members.len();
    let larger = wa.large_witness_members.len();
    BlcSummary {
        m,
        b,
        l,
        c,
        singleton_multiplicities: wa.singleton_multiplicities.clone(),
        larger,
        identity_holds: m == b + l + c,
    }
}

/// Diagnostic replay of one of the published structural claims on
/// concrete data: the hypothesis and the conclusion are evaluated
/// separately, never asserted.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimStatus {
    pub name: String,
    pub hypothesis_met: bool,
    pub conclusion_holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    /// m >= binom(n-1,2) + 2, the density regime all four claims assume.
    pub density_hypothesis: bool,
    pub degrees: BTreeMap<u32, usize>,
    pub claims: Vec<ClaimStatus>,
}

/// Evaluates the structural claims (element degrees, pair-graph degrees
/// of L, missing pairs around C, |L ∩ F| for F in C) on a concrete
/// family.
pub fn claim_predicates(family: &Family, wa: &WitnessAssignment) -> ClaimReport {
    let n = family.ground().n();
    let m = family.len() as u64;
    let density = m >= binom(n as u64 - 1, 2) + 2;

    let degrees: BTreeMap<u32, usize> = family
        .ground()
        .elements()
        .map(|x| (x, family.degree(x)))
        .collect();

    let mut claims = Vec::new();

    // every element appears in at least n-1 members
    let min_degree_ok = degrees.values().all(|&d| d as u64 >= n as u64 - 1);
    claims.push(ClaimStatus {
        name: "element_degree_at_least_n_minus_1".into(),
        hypothesis_met: density,
        conclusion_holds: min_degree_ok,
        detail: format!(
            "min degree {}, n-1 = {}",
            degrees.values().min().copied().unwrap_or(0),
            n - 1
        ),
    });

    // every x in L has pair-graph degree at most n-4
    let l_elements = wa.singleton_elements();
    let l_degree_ok = l_elements
        .iter()
        .all(|&x| wa.pair_graph.degree(x) as u64 + 4 <= n as u64);
    claims.push(ClaimStatus {
        name: "singleton_witness_degree_in_b_at_most_n_minus_4".into(),
        hypothesis_met: density,
        conclusion_holds: l_degree_ok,
        detail: format!("|L| = {}", l_elements.len()),
    });

    // for F in C and v outside F, at least two of the pairs {v,.} into F
    // are missing from B
    let mut miss_two_ok = true;
    let mut miss_two_worst = 0usize;
    for &ci in &wa.empty_members {
        let f = family.members()[ci];
        for v in family.ground().elements() {
            if f.contains(v) {
                continue;
            }
            let present = f
                .elements()
                .filter(|&u| wa.pair_graph.contains_edge(v, u))
                .count();
            miss_two_worst = miss_two_worst.max(present);
            if present > 1 {
                miss_two_ok = false;
            }
        }
    }
    claims.push(ClaimStatus {
        name: "at_most_one_pair_from_outside_vertex_into_c_member".into(),
        hypothesis_met: density,
        conclusion_holds: miss_two_ok,
        detail: format!(
            "|C| = {}, max pairs present = {}",
            wa.empty_members.len(),
            miss_two_worst
        ),
    });

    // |L ∩ F| <= 2 for every F in C
    let mut l_mask = 0u64;
    for &x in &l_elements {
        l_mask |= 1u64 << (x - 1);
    }
    let mut l_cap_ok = true;
    let mut l_cap_worst = 0u32;
    for &ci in &wa.empty_members {
        let f = family.members()[ci];
        let cap = (f.bits() & l_mask).count_ones();
        l_cap_worst = l_cap_worst.max(cap);
        if cap >= 3 {
            l_cap_ok = false;
        }
    }
    claims.push(ClaimStatus {
        name: "l_meets_c_member_in_at_most_two_elements".into(),
        hypothesis_met: density,
        conclusion_holds: l_cap_ok,
        detail: format!("max |L ∩ F| over C = {l_cap_worst}"),
    });

    ClaimReport {
        density_hypothesis: density,
        degrees,
        claims,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::star_family;

    #[test]
    fn star5_witnesses_are_the_noncenter_pairs() {
        let f = star_family(5, 3, 1).unwrap();
        let wa = witness_assignment(&f).unwrap();
        for (m, w) in f.members().iter().zip(&wa.witnesses) {
            assert_eq!(w.bits(), m.bits() & !1); // member minus the center
            assert_eq!(w.card(), 2);
        }
        let s = blc_summary(&f, &wa);
        assert_eq!((s.b, s.l, s.c), (6, 0, 0));
        assert!(s.identity_holds);
    }

    #[test]
    fn two_member_family_tie_breaks_to_smallest_bitmask() {
        let f = Family::from_element_lists(5, &[&[1, 2, 3], &[1, 4, 5]]).unwrap();
        let wa = witness_assignment(&f).unwrap();
        let w123 = wa.witnesses[f
            .members()
            .iter()
            .position(|m| m.bits() == 0b111)
            .unwrap()];
        assert_eq!(w123, KSet::from_elements(&[1, 2]).unwrap());
        let s = blc_summary(&f, &wa);
        assert_eq!((s.b, s.l, s.c), (2, 0, 0));
        assert!(s.identity_holds);
    }

    #[test]
    fn shattered_member_is_an_error() {
        let ground = crate::sets::GroundSet::new(6).unwrap();
        let f = Family::new(ground, crate::sets::all_ksets(6, 3)).unwrap();
        assert!(matches!(
            witness_assignment(&f),
            Err(Error::MemberShattered { .. })
        ));
    }

    #[test]
    fn star6_degree_report() {
        let f = star_family(6, 3, 1).unwrap();
        let wa = witness_assignment(&f).unwrap();
        let report = claim_predicates(&f, &wa);
        assert_eq!(report.degrees[&1], 10);
        for x in 2..=6 {
            assert_eq!(report.degrees[&x], 4);
        }
    }
}
