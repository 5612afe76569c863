//! Network construction from syllabified words.
//!
//! Co-occurrence linking connects every pair of distinct syllables in a
//! word; first-neighbour linking connects only neighbouring syllables.
//! Directed co-occurrence edges run from the syllable that appears
//! first to the one that appears later; directed first-neighbour edges
//! follow reading order. Weights count contributing word occurrences
//! (per pair for co-occurrence, per adjacent position for
//! first-neighbour). A syllable never links to itself, so words like
//! "mama" contribute a node but no edge. Single-syllable words
//! contribute isolated nodes.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::network::{Edge, Linking, NetworkVariant, SyllableNetwork};
use crate::syllabifier::SyllabifiedWord;

/// Streaming edge-count accumulator. Feed words (possibly from several
/// corpora, possibly in parallel shards merged afterwards), then
/// [`finish`](EdgeAccumulator::finish) into a canonical network.
#[derive(Debug, Clone)]
pub struct EdgeAccumulator {
    variant: NetworkVariant,
    labels: Vec<String>,
    index: HashMap<String, u32>,
    // Key ids refer to `labels`; for undirected variants the smaller id
    // comes first.
    counts: HashMap<(u32, u32), u64>,
    provenance: BTreeSet<String>,
}

impl EdgeAccumulator {
    pub fn new(variant: NetworkVariant) -> Self {
        EdgeAccumulator {
            variant,
            labels: Vec::new(),
            index: HashMap::new(),
            counts: HashMap::new(),
            provenance: BTreeSet::new(),
        }
    }

    pub fn variant(&self) -> NetworkVariant {
        self.variant
    }

    fn intern(&mut self, label: &str) -> u32 {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = self.labels.len() as u32;
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        id
    }

    fn bump(&mut self, a: u32, b: u32) {
        debug_assert_ne!(a, b);
        let key = if !self.variant.directed && a > b { (b, a) } else { (a, b) };
        *self.counts.entry(key).or_insert(0) += 1;
    }

    /// Records one word occurrence.
    pub fn add_word(&mut self, word: &SyllabifiedWord) {
        let ids: Vec<u32> =
            word.syllables.iter().map(|s| self.intern(s.as_str())).collect();
        match self.variant.linking {
            Linking::CoOccurrence => {
                // Distinct syllables in first-occurrence order, so the
                // directed edge runs from the earlier one.
                let mut seen: Vec<u32> = Vec::with_capacity(ids.len());
                for id in ids {
                    if !seen.contains(&id) {
                        seen.push(id);
                    }
                }
                for i in 0..seen.len() {
                    for j in i + 1..seen.len() {
                        self.bump(seen[i], seen[j]);
                    }
                }
            }
            Linking::FirstNeighbour => {
                for pair in ids.windows(2) {
                    if pair[0] != pair[1] {
                        self.bump(pair[0], pair[1]);
                    }
                }
            }
        }
    }

    /// Records where the words came from (one corpus source label).
    pub fn add_provenance(&mut self, source_label: &str) {
        self.provenance.insert(source_label.to_owned());
    }

    /// Folds another accumulator of the same variant into this one.
    pub fn merge(&mut self, other: EdgeAccumulator) -> Result<()> {
        if other.variant != self.variant {
            return Err(Error::VariantMismatch { left: self.variant, right: other.variant });
        }
        let remap: Vec<u32> =
            other.labels.iter().map(|label| self.intern(label)).collect();
        for ((a, b), count) in other.counts {
            let (a, b) = (remap[a as usize], remap[b as usize]);
            let key = if !self.variant.directed && a > b { (b, a) } else { (a, b) };
            *self.counts.entry(key).or_insert(0) += count;
        }
        self.provenance.extend(other.provenance);
        Ok(())
    }

    /// Produces the canonical network: labels sorted, ids remapped,
    /// edges sorted. Unweighted variants flatten every count to 1.
    pub fn finish(self) -> SyllableNetwork {
        let mut order: Vec<u32> = (0..self.labels.len() as u32).collect();
        order.sort_by(|&a, &b| self.labels[a as usize].cmp(&self.labels[b as usize]));
        let mut remap = vec![0u32; self.labels.len()];
        for (new_id, &old_id) in order.iter().enumerate() {
            remap[old_id as usize] = new_id as u32;
        }
        let labels: Vec<String> =
            order.iter().map(|&i| self.labels[i as usize].clone()).collect();

        let mut edges: Vec<Edge> = self
            .counts
            .into_iter()
            .map(|((a, b), count)| {
                let (mut source, mut target) = (remap[a as usize], remap[b as usize]);
                if !self.variant.directed && source > target {
                    std::mem::swap(&mut source, &mut target);
                }
                let weight = if self.variant.weighted { count } else { 1 };
                Edge { source, target, weight }
            })
            .collect();
        edges.sort_unstable();

        SyllableNetwork::from_canonical_parts(
            self.variant,
            labels,
            edges,
            self.provenance.into_iter().collect(),
        )
    }
}

/// Builds one network over a word stream.
pub fn build_network(words: &[SyllabifiedWord], variant: NetworkVariant) -> SyllableNetwork {
    let mut accumulator = EdgeAccumulator::new(variant);
    for word in words {
        accumulator.add_word(word);
    }
    accumulator.finish()
}

/// Collapses a network to its undirected unweighted form: a pair of
/// nodes connected in either or both directions gets exactly one edge
/// of weight 1. Nodes, including isolated ones, are preserved.
pub fn to_undirected_unweighted(network: &SyllableNetwork) -> SyllableNetwork {
    let variant = NetworkVariant {
        linking: network.variant().linking,
        directed: false,
        weighted: false,
    };
    let pairs: BTreeSet<(u32, u32)> = network
        .edges()
        .iter()
        .map(|e| if e.source <= e.target { (e.source, e.target) } else { (e.target, e.source) })
        .collect();
    let edges: Vec<Edge> = pairs
        .into_iter()
        .map(|(source, target)| Edge { source, target, weight: 1 })
        .collect();
    SyllableNetwork::from_canonical_parts(
        variant,
        network.labels().to_vec(),
        edges,
        network.provenance().to_vec(),
    )
}

/// Drops nodes with fewer than `k_min` incident edges (in-degree plus
/// out-degree in directed networks), together with their edges.
/// `k_min == 0` returns the network unchanged. With `iterative` set the
/// filter repeats until stable, yielding the k-core: removals can push
/// other nodes below the threshold.
pub fn filter_min_degree(
    network: &SyllableNetwork,
    k_min: u64,
    iterative: bool,
) -> SyllableNetwork {
    if k_min == 0 {
        return network.clone();
    }

    let mut keep = vec![true; network.node_count()];
    let mut edges: Vec<Edge> = network.edges().to_vec();
    loop {
        let mut degrees = vec![0u64; network.node_count()];
        for edge in &edges {
            degrees[edge.source as usize] += 1;
            degrees[edge.target as usize] += 1;
        }
        let mut changed = false;
        for id in 0..network.node_count() {
            if keep[id] && degrees[id] < k_min {
                keep[id] = false;
                changed = true;
            }
        }
        if changed {
            edges.retain(|e| keep[e.source as usize] && keep[e.target as usize]);
        }
        if !changed || !iterative {
            break;
        }
    }

    // Monotone id remap keeps label order, edge canonical form and edge
    // sort order intact.
    let mut remap = vec![u32::MAX; network.node_count()];
    let mut labels = Vec::new();
    for (id, kept) in keep.iter().enumerate() {
        if *kept {
            remap[id] = labels.len() as u32;
            labels.push(network.label(id as u32).to_owned());
        }
    }
    let edges: Vec<Edge> = edges
        .into_iter()
        .map(|e| Edge {
            source: remap[e.source as usize],
            target: remap[e.target as usize],
            weight: e.weight,
        })
        .collect();

    SyllableNetwork::from_canonical_parts(
        network.variant(),
        labels,
        edges,
        network.provenance().to_vec(),
    )
}
