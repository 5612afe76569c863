//! Syllable network representation.
//!
//! Nodes are syllable labels, stored sorted so that equal node sets get
//! equal ids regardless of insertion order. Edges are kept sorted by
//! (source, target); in undirected networks each edge is stored once
//! with source <= target. Self-loops never occur. Weights count edge
//! occurrences; unweighted networks store every weight as 1.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// How words contribute edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Linking {
    /// Every pair of distinct syllables within a word is linked.
    CoOccurrence,
    /// Only neighbouring syllables within a word are linked.
    FirstNeighbour,
}

impl Linking {
    pub fn as_str(self) -> &'static str {
        match self {
            Linking::CoOccurrence => "co_occurrence",
            Linking::FirstNeighbour => "first_neighbour",
        }
    }
}

impl FromStr for Linking {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "co" | "co_occurrence" => Ok(Linking::CoOccurrence),
            "fn" | "first_neighbour" => Ok(Linking::FirstNeighbour),
            other => Err(Error::Config(format!(
                "unknown linking {other:?} (expected \"co\" or \"fn\")"
            ))),
        }
    }
}

impl fmt::Display for Linking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One of the eight network variants: linking x directedness x
/// weightedness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NetworkVariant {
    pub linking: Linking,
    pub directed: bool,
    pub weighted: bool,
}

impl NetworkVariant {
    pub const ALL: [NetworkVariant; 8] = {
        let mut all = [NetworkVariant {
            linking: Linking::CoOccurrence,
            directed: false,
            weighted: false,
        }; 8];
        let mut i = 0;
        while i < 8 {
            all[i] = NetworkVariant {
                linking: if i < 4 { Linking::CoOccurrence } else { Linking::FirstNeighbour },
                directed: (i / 2) % 2 == 1,
                weighted: i % 2 == 1,
            };
            i += 1;
        }
        all
    };

    pub fn new(linking: Linking, directed: bool, weighted: bool) -> Self {
        NetworkVariant { linking, directed, weighted }
    }
}

impl fmt::Display for NetworkVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{}/{}",
            self.linking,
            if self.directed { "directed" } else { "undirected" },
            if self.weighted { "weighted" } else { "unweighted" },
        )
    }
}

impl FromStr for NetworkVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split('/');
        let linking = parts.next().unwrap_or("").parse()?;
        let directed = match parts.next() {
            Some("directed") => true,
            Some("undirected") => false,
            other => {
                return Err(Error::Config(format!(
                    "unknown directedness {other:?} in variant {s:?}"
                )))
            }
        };
        let weighted = match parts.next() {
            Some("weighted") => true,
            Some("unweighted") => false,
            other => {
                return Err(Error::Config(format!(
                    "unknown weightedness {other:?} in variant {s:?}"
                )))
            }
        };
        if parts.next().is_some() {
            return Err(Error::Config(format!("trailing junk in variant {s:?}")));
        }
        Ok(NetworkVariant { linking, directed, weighted })
    }
}

/// One edge between node ids. The weight is 1 in unweighted networks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub source: u32,
    pub target: u32,
    pub weight: u64,
}

/// An immutable syllable network.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyllableNetwork {
    variant: NetworkVariant,
    labels: Vec<String>,
    edges: Vec<Edge>,
    provenance: Vec<String>,
}

impl SyllableNetwork {
    /// Builds a network from parts, normalizing order: labels are
    /// sorted (ids in `edges` refer to the order given and get
    /// remapped), undirected edges are flipped to source <= target, and
    /// edges are sorted. Rejects duplicate labels, ids out of range,
    /// self-loops, duplicate edges, zero weights, and weights other
    /// than 1 in unweighted networks.
    pub fn from_edge_list(
        variant: NetworkVariant,
        labels: Vec<String>,
        edges: Vec<Edge>,
        provenance: Vec<String>,
    ) -> Result<Self> {
        let mut order: Vec<u32> = (0..labels.len() as u32).collect();
        order.sort_by(|&a, &b| labels[a as usize].cmp(&labels[b as usize]));
        for pair in order.windows(2) {
            if labels[pair[0] as usize] == labels[pair[1] as usize] {
                return Err(Error::Config(format!(
                    "duplicate node label {:?}",
                    labels[pair[0] as usize]
                )));
            }
        }
        // remap[old id] = new id in sorted label order
        let mut remap = vec![0u32; labels.len()];
        for (new_id, &old_id) in order.iter().enumerate() {
            remap[old_id as usize] = new_id as u32;
        }
        let sorted_labels: Vec<String> =
            order.iter().map(|&i| labels[i as usize].clone()).collect();

        let n = sorted_labels.len() as u32;
        let mut normalized = Vec::with_capacity(edges.len());
        for edge in edges {
            if edge.source >= n || edge.target >= n {
                return Err(Error::Config(format!(
                    "edge ({}, {}) out of range for {} nodes",
                    edge.source, edge.target, n
                )));
            }
            if edge.source == edge.target {
                return Err(Error::Config(format!(
                    "self-loop on {:?}",
                    sorted_labels[remap[edge.source as usize] as usize]
                )));
            }
            if edge.weight == 0 {
                return Err(Error::Config("edge weight 0".into()));
            }
            if !variant.weighted && edge.weight != 1 {
                return Err(Error::Config(format!(
                    "weight {} in an unweighted network",
                    edge.weight
                )));
            }
            let (mut source, mut target) =
                (remap[edge.source as usize], remap[edge.target as usize]);
            if !variant.directed && source > target {
                std::mem::swap(&mut source, &mut target);
            }
            normalized.push(Edge { source, target, weight: edge.weight });
        }
        normalized.sort_unstable();
        for pair in normalized.windows(2) {
            if pair[0].source == pair[1].source && pair[0].target == pair[1].target {
                return Err(Error::Config(format!(
                    "duplicate edge {:?} -> {:?}",
                    sorted_labels[pair[0].source as usize],
                    sorted_labels[pair[0].target as usize]
                )));
            }
        }

        let mut provenance = provenance;
        provenance.sort_unstable();
        provenance.dedup();

        Ok(SyllableNetwork { variant, labels: sorted_labels, edges: normalized, provenance })
    }

    /// Internal constructor for parts already in canonical form.
    pub(crate) fn from_canonical_parts(
        variant: NetworkVariant,
        labels: Vec<String>,
        edges: Vec<Edge>,
        provenance: Vec<String>,
    ) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges
            .iter()
            .all(|e| e.source != e.target && (variant.directed || e.source <= e.target)));
        SyllableNetwork { variant, labels, edges, provenance }
    }

    pub fn variant(&self) -> NetworkVariant {
        self.variant
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, id: u32) -> &str {
        &self.labels[id as usize]
    }

    pub fn node_id(&self, label: &str) -> Option<u32> {
        self.labels
            .binary_search_by(|probe| probe.as_str().cmp(label))
            .ok()
            .map(|i| i as u32)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Corpus source labels this network was built from, sorted.
    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    /// Number of incident edges per node, ignoring weights. In directed
    /// networks this is in-degree + out-degree.
    pub fn degrees(&self) -> Vec<u64> {
        let mut degrees = vec![0u64; self.labels.len()];
        for edge in &self.edges {
            degrees[edge.source as usize] += 1;
            degrees[edge.target as usize] += 1;
        }
        degrees
    }

    /// Sorted adjacency lists ignoring direction and weights. A pair
    /// connected in both directions appears once.
    pub(crate) fn undirected_neighbors(&self) -> Vec<Vec<u32>> {
        let mut adjacency = vec![Vec::new(); self.labels.len()];
        for edge in &self.edges {
            adjacency[edge.source as usize].push(edge.target);
            adjacency[edge.target as usize].push(edge.source);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        adjacency
    }

    /// Sorted out-adjacency lists: edge direction is respected in
    /// directed networks; undirected edges go both ways.
    pub(crate) fn out_neighbors(&self) -> Vec<Vec<u32>> {
        if !self.variant.directed {
            return self.undirected_neighbors();
        }
        let mut adjacency = vec![Vec::new(); self.labels.len()];
        for edge in &self.edges {
            adjacency[edge.source as usize].push(edge.target);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        adjacency
    }
}
