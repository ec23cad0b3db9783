//! Generators for named families, the embedded extremal fixtures, the
//! lower-bound table, and verified extension of extremal families.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::search::{decide_family_exists, SearchConfig, SearchMode};
use crate::sets::{binom, Family, GroundSet, KSet};
use crate::shatter::uniform_vc_at_most;

/// The 13-member 3-uniform family on [6] with VC-dimension 2.
pub const F6_13: [[u32; 3]; 13] = [
    [1, 2, 6],
    [1, 3, 5],
    [1, 4, 5],
    [1, 4, 6],
    [1, 5, 6],
    [2, 3, 4],
    [2, 4, 5],
    [2, 4, 6],
    [2, 5, 6],
    [3, 4, 5],
    [3, 4, 6],
    [3, 5, 6],
    [4, 5, 6],
];

/// The 16-member extremal family on [7] with transversal number 3.
pub const F7_16: [[u32; 3]; 16] = [
    [1, 2, 3],
    [1, 2, 4],
    [1, 3, 4],
    [2, 3, 4],
    [1, 2, 5],
    [1, 3, 5],
    [2, 3, 5],
    [1, 4, 5],
    [1, 2, 6],
    [1, 3, 6],
    [2, 3, 6],
    [2, 4, 6],
    [3, 5, 6],
    [1, 2, 7],
    [1, 3, 7],
    [2, 3, 7],
];

/// The 45-member 4-uniform family on [8] with VC-dimension 3.
pub const F8_45: [[u32; 4]; 45] = [
    [1, 2, 3, 4],
    [1, 2, 3, 5],
    [1, 2, 4, 5],
    [1, 3, 4, 5],
    [2, 3, 4, 5],
    [1, 2, 3, 6],
    [1, 2, 4, 6],
    [1, 3, 4, 6],
    [2, 3, 4, 6],
    [1, 2, 5, 6],
    [1, 3, 5, 6],
    [2, 3, 5, 6],
    [1, 4, 5, 6],
    [2, 4, 5, 6],
    [3, 4, 5, 6],
    [1, 2, 3, 7],
    [1, 2, 4, 7],
    [1, 3, 4, 7],
    [2, 3, 4, 7],
    [1, 2, 5, 7],
    [1, 3, 5, 7],
    [2, 3, 5, 7],
    [1, 4, 5, 7],
    [2, 4, 5, 7],
    [3, 4, 5, 7],
    [1, 2, 6, 7],
    [1, 3, 6, 7],
    [2, 3, 6, 7],
    [1, 2, 3, 8],
    [1, 2, 4, 8],
    [1, 3, 4, 8],
    [2, 3, 4, 8],
    [1, 2, 5, 8],
    [1, 3, 5, 8],
    [2, 3, 5, 8],
    [1, 4, 5, 8],
    [3, 4, 5, 8],
    [1, 4, 6, 8],
    [2, 4, 6, 8],
    [3, 4, 6, 8],
    [1, 5, 6, 8],
    [2, 5, 7, 8],
    [3, 5, 7, 8],
    [4, 5, 7, 8],
    [2, 4, 5, 8],
];

/// SHA-256 of the canonical serialization of each fixture (n, then each
/// member's sorted elements), pinned so loader tests catch accidental
/// edits to the data constants.
pub const F6_13_SHA256: &str = "62fba05486fc103b56f7cdb42b91c38615852693a16462338d32c3dc2675ebf5";
pub const F7_16_SHA256: &str = "aaa6dbf0763270d10c57bc63a77ab05254f923ee9f64a092b7f9f54859bc50de";
pub const F8_45_SHA256: &str = "36bb28aa0245cb874727605f4464dd07e1fc269b68752a999d7ca843c19cce9f";

/// Canonical fixture serialization fed to the checksum.
pub fn fixture_digest(family: &Family) -> String {
    let mut h = Sha256::new();
    h.update([family.ground().n() as u8]);
    for m in family.members() {
        let elems: Vec<u8> = m.elements().map(|e| e as u8).collect();
        h.update(&elems);
    }
    format!("{:x}", h.finalize())
}

/// All k-sets through a fixed center; size binom(n-1, k-1).
pub fn star_family(n: u32, k: u32, center: u32) -> Result<Family> {
    let ground = GroundSet::new(n)?;
    if center == 0 || center > n {
        return Err(Error::OutOfRange { element: center, n });
    }
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "k = {k} must satisfy 1 <= k <= n = {n}"
        )));
    }
    let center_bit = 1u64 << (center - 1);
    let members: Vec<KSet> = crate::sets::all_ksets(n, k)
        .into_iter()
        .filter(|s| s.bits() & center_bit != 0)
        .collect();
    debug_assert_eq!(members.len() as u64, binom(n as u64 - 1, k as u64 - 1));
    Family::new(ground, members)
}

/// Embedded extremal fixtures by name: `f6_13`, `f7_16`, `f8_45`.
pub fn fixture_family(name: &str) -> Result<Family> {
    match name {
        "f6_13" => {
            let lists: Vec<&[u32]> = F6_13.iter().map(|m| m.as_slice()).collect();
            Family::from_element_lists(6, &lists)
        }
        "f7_16" => {
            let lists: Vec<&[u32]> = F7_16.iter().map(|m| m.as_slice()).collect();
            Family::from_element_lists(7, &lists)
        }
        "f8_45" => {
            let lists: Vec<&[u32]> = F8_45.iter().map(|m| m.as_slice()).collect();
            Family::from_element_lists(8, &lists)
        }
        other => Err(Error::InvalidParameter(format!(
            "unknown construction name {other:?}; known: star, f6_13, f7_16, f8_45"
        ))),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundRow {
    pub n: u64,
    /// binom(n-1, d), the star construction.
    pub star: u64,
    /// binom(n-1, d) + binom(n-4, d-2), the Ahlswede-Khachatrian value.
    pub ak: u64,
    /// Exact maximum where known (d = 2 only).
    pub known_max: Option<u64>,
}

/// Lower-bound table for (d+1)-uniform families with VC-dimension <= d.
pub fn bound_table(n_from: u64, n_to: u64, d: u64) -> Result<Vec<BoundRow>> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("d must be >= 2, got {d}")));
    }
    let mut rows = Vec::new();
    for n in n_from..=n_to {
        let star = binom(n.saturating_sub(1), d);
        let ak = star + binom(n.saturating_sub(4), d - 2);
        let known_max = if d == 2 {
            Some(match n {
                0..=5 => binom(n, 3),
                6 => 13,
                _ => binom(n - 1, 2) + 1,
            })
        } else {
            None
        };
        rows.push(BoundRow {
            n,
            star,
            ak,
            known_max,
        });
    }
    Ok(rows)
}

/// Outcome of a verified extremal extension.
#[derive(Debug, Clone)]
pub enum ExtensionOutcome {
    /// The star-through-the-new-vertex candidate verified directly.
    Direct(Family),
    /// The candidate failed verification; decision search found a
    /// verified family of the extremal size instead.
    Fallback(Family),
}

impl ExtensionOutcome {
    pub fn family(&self) -> &Family {
        match self {
            ExtensionOutcome::Direct(f) | ExtensionOutcome::Fallback(f) => f,
        }
    }
}

/// Extends a 3-uniform extremal-size family on [n-1] to the extremal
/// size binom(n-1,2)+1 on [n] by adding `{center, new_vertex, u}` for
/// every other old element, verifying the result; on verification
/// failure falls back to decision search seeded with the input.
///
/// Never returns an unverified family.
pub fn extend_extremal(family: &Family, new_vertex: u32, center: u32) -> Result<ExtensionOutcome> {
    let old_n = family.ground().n();
    if new_vertex != old_n + 1 {
        return Err(Error::InvalidParameter(format!(
            "new vertex must be {} (one past the current ground set), got {new_vertex}",
            old_n + 1
        )));
    }
    if center == 0 || center > old_n {
        return Err(Error::OutOfRange {
            element: center,
            n: old_n,
        });
    }
    if family.uniform_k() != Some(3) {
        return Err(Error::UniformityMismatch {
            expected: 3,
            found: family.uniform_k(),
        });
    }
    let required = binom(old_n as u64 - 1, 2) + 1;
    if (family.len() as u64) < required {
        return Err(Error::InvalidParameter(format!(
            "input family has {} members; extremal extension needs at least binom({},2)+1 = {}",
            family.len(),
            old_n - 1,
            required
        )));
    }
    if !uniform_vc_at_most(family, 2)? {
        return Err(Error::InvalidParameter(
            "input family has VC-dimension greater than 2".into(),
        ));
    }

    let n = old_n + 1;
    let target = (binom(n as u64 - 1, 2) + 1) as usize;
    let ground = GroundSet::new(n)?;
    let mut members = family.members().to_vec();
    for u in 1..=old_n {
        if u != center {
            members.push(KSet::from_elements(&[center, new_vertex, u])?);
        }
    }
    let candidate = Family::new(ground, members)?;
    if candidate.len() == target && uniform_vc_at_most(&candidate, 2)? {
        return Ok(ExtensionOutcome::Direct(candidate));
    }

    // fallback: decision search for the extremal size, trying extensions
    // of the input first
    let seed = Family::new(ground, family.members().to_vec())?;
    let cfg = SearchConfig {
        n,
        k: 3,
        d: 2,
        mode: SearchMode::Decide { target },
        seed_prefix: Some(seed),
        ..SearchConfig::new(n, 3, 2)
    };
    let report = decide_family_exists(&cfg)?;
    match report.certificate {
        Some(f) if uniform_vc_at_most(&f, 2)? && f.len() == target => {
            Ok(ExtensionOutcome::Fallback(f))
        }
        _ => Err(Error::Capability(format!(
            "extension to n = {n} failed: candidate unverified and decision search \
             found no family of size {target} within budget"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shatter::vc_dimension;

    #[test]
    fn star_sizes() {
        assert_eq!(star_family(6, 3, 1).unwrap().len(), 10);
        assert_eq!(star_family(5, 3, 2).unwrap().len(), 6);
        assert_eq!(star_family(8, 4, 1).unwrap().len(), 35);
        assert!(star_family(6, 3, 7).is_err());
        assert!(star_family(3, 4, 1).is_err());
    }

    #[test]
    fn star_6_3_has_vc_dimension_two() {
        let f = star_family(6, 3, 1).unwrap();
        assert_eq!(vc_dimension(&f).unwrap(), 2);
        assert!(uniform_vc_at_most(&f, 2).unwrap());
    }

    #[test]
    fn fixtures_load_with_expected_sizes_and_checksums() {
        let f6 = fixture_family("f6_13").unwrap();
        assert_eq!(f6.len(), 13);
        assert_eq!(fixture_digest(&f6), F6_13_SHA256);

        let f7 = fixture_family("f7_16").unwrap();
        assert_eq!(f7.len(), 16);
        assert_eq!(fixture_digest(&f7), F7_16_SHA256);

        let f8 = fixture_family("f8_45").unwrap();
        assert_eq!(f8.len(), 45);
        assert_eq!(f8.uniform_k(), Some(4));
        assert_eq!(fixture_digest(&f8), F8_45_SHA256);

        assert!(fixture_family("nope").is_err());
    }

    #[test]
    fn bound_table_values() {
        let rows = bound_table(6, 8, 2).unwrap();
        assert_eq!(rows[0].ak, 11);
        assert_eq!(rows[0].known_max, Some(13));
        assert_eq!(rows[1].ak, 16);
        assert_eq!(rows[1].known_max, Some(16));
        assert_eq!(rows[2].known_max, Some(22));
        let d3 = bound_table(8, 8, 3).unwrap();
        assert_eq!(d3[0].ak, 39);
        assert!(d3[0].known_max.is_none());
    }

    #[test]
    fn undersized_input_is_a_precondition_error() {
        let star = star_family(6, 3, 1).unwrap(); // 10 < binom(5,2)+1 = 11
        assert!(extend_extremal(&star, 7, 1).is_err());
    }
}
