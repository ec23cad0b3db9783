//! Simple graphs on `[n]`, used for the witness pair graph and link graphs.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::sets::{GroundSet, KSet};

/// A simple graph on the ground set; edges are 2-element bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: GroundSet,
    edges: BTreeSet<u64>,
}

impl Graph {
    pub fn new(vertices: GroundSet) -> Graph {
        Graph {
            vertices,
            edges: BTreeSet::new(),
        }
    }

    pub fn vertices(&self) -> GroundSet {
        self.vertices
    }

    /// Inserts an edge; loops are rejected, re-insertion is a no-op.
    pub fn insert_edge(&mut self, u: u32, v: u32) {
        assert!(u != v, "loops are not allowed");
        assert!(u >= 1 && v >= 1 && u <= self.vertices.n() && v <= self.vertices.n());
        self.edges.insert((1u64 << (u - 1)) | (1u64 << (v - 1)));
    }

    pub fn insert_edge_mask(&mut self, mask: u64) {
        assert_eq!(mask.count_ones(), 2);
        assert!(self.vertices.contains_mask(mask));
        self.edges.insert(mask);
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = KSet> + '_ {
        self.edges.iter().map(|&m| KSet::from_bits(m))
    }

    pub fn contains_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.edges.contains(&((1u64 << (u - 1)) | (1u64 << (v - 1))))
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors(&self, v: u32) -> u64 {
        let bit = 1u64 << (v - 1);
        self.edges
            .iter()
            .filter(|&&e| e & bit != 0)
            .fold(0u64, |acc, &e| acc | (e & !bit))
    }

    pub fn degree(&self, v: u32) -> u32 {
        self.neighbors(v).count_ones()
    }

    /// Vertices incident to at least one edge, as a bitmask.
    pub fn support(&self) -> u64 {
        self.edges.iter().fold(0u64, |acc, &e| acc | e)
    }

    /// Degree of each element of `[n]`, indexed by element - 1.
    pub fn degree_sequence(&self) -> Vec<u32> {
        (1..=self.vertices.n()).map(|v| self.degree(v)).collect()
    }
}

/// Exact maximum matching size by branching over edges; graphs here are tiny.
pub fn matching_number(g: &Graph) -> usize {
    let edges: Vec<u64> = g.edges.iter().copied().collect();
    fn rec(edges: &[u64], used: u64) -> usize {
        match edges.split_first() {
            None => 0,
            Some((&e, rest)) => {
                let skip = rec(rest, used);
                if e & used == 0 {
                    skip.max(1 + rec(rest, used | e))
                } else {
                    skip
                }
            }
        }
    }
    rec(&edges, 0)
}

pub fn max_degree(g: &Graph) -> u32 {
    g.degree_sequence().into_iter().max().unwrap_or(0)
}

/// True iff two distinct vertices share at least two common neighbors.
pub fn has_k22(g: &Graph) -> bool {
    let n = g.vertices.n();
    let nbrs: Vec<u64> = (1..=n).map(|v| g.neighbors(v)).collect();
    for a in 0..n as usize {
        for b in a + 1..n as usize {
            if (nbrs[a] & nbrs[b]).count_ones() >= 2 {
                return true;
            }
        }
    }
    false
}

/// All unordered vertex pairs (within the edge support) covering every edge.
pub fn two_element_transversals(g: &Graph) -> Vec<KSet> {
    let support: Vec<u32> = KSet::from_bits(g.support()).elements().collect();
    let mut out = Vec::new();
    for i in 0..support.len() {
        for j in i + 1..support.len() {
            let pair = (1u64 << (support[i] - 1)) | (1u64 << (support[j] - 1));
            if g.edges.iter().all(|&e| e & pair != 0) {
                out.push(KSet::from_bits(pair));
            }
        }
    }
    out
}

/// Structural summary used in link-graph reports.
#[derive(Debug, Clone, Serialize)]
pub struct GraphProperties {
    pub edge_count: usize,
    pub matching_number: usize,
    pub max_degree: u32,
    pub has_k22: bool,
    pub two_element_transversals: Vec<Vec<u32>>,
}

pub fn graph_properties(g: &Graph) -> GraphProperties {
    GraphProperties {
        edge_count: g.edge_count(),
        matching_number: matching_number(g),
        max_degree: max_degree(g),
        has_k22: has_k22(g),
        two_element_transversals: two_element_transversals(g)
            .iter()
            .map(|p| p.elements().collect())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: u32, edges: &[(u32, u32)]) -> Graph {
        let mut g = Graph::new(GroundSet::new(n).unwrap());
        for &(u, v) in edges {
            g.insert_edge(u, v);
        }
        g
    }

    #[test]
    fn path_properties() {
        let g = graph(3, &[(1, 2), (2, 3)]);
        assert_eq!(matching_number(&g), 1);
        assert_eq!(max_degree(&g), 2);
        assert!(!has_k22(&g));
        let pairs = two_element_transversals(&g);
        assert_eq!(pairs.len(), 3); // {1,2},{1,3},{2,3}
    }

    #[test]
    fn four_cycle_properties() {
        let g = graph(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert!(has_k22(&g)); // 1 and 3 share neighbors 2 and 4
        assert_eq!(matching_number(&g), 2);
    }

    #[test]
    fn star_k13_properties() {
        let g = graph(4, &[(1, 2), (1, 3), (1, 4)]);
        assert_eq!(matching_number(&g), 1);
        assert_eq!(max_degree(&g), 3);
        assert!(!has_k22(&g));
    }
}
