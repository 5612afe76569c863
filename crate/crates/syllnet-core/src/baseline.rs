//! Random-graph baselines: Erdős–Rényi G(n, M) samples matched to a
//! real network's node and edge counts, and side-by-side comparison
//! reports.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::{MetricsOptions, NetworkMetrics};
use crate::network::{Edge, Linking, NetworkVariant, SyllableNetwork};

/// Size and sampling parameters for an ER ensemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ERConfig {
    pub n: usize,
    pub k: usize,
    pub samples: usize,
    pub seed: u64,
}

impl ERConfig {
    pub fn validate(&self) -> Result<()> {
        let max = max_edges(self.n);
        if self.k as u64 > max {
            return Err(Error::TooManyEdges { nodes: self.n, edges: self.k, max });
        }
        if self.samples == 0 {
            return Err(Error::Config("sample count must be at least 1".into()));
        }
        Ok(())
    }
}

fn max_edges(n: usize) -> u64 {
    let n = n as u64;
    if n < 2 { 0 } else { n * (n - 1) / 2 }
}

/// Pairs (a, b) with a < b < n, ordered lexicographically; row a starts
/// at this offset.
fn row_offset(a: u64, n: u64) -> u64 {
    a * (2 * n - a - 1) / 2
}

/// Inverse of the lexicographic pair numbering.
fn decode_pair(index: u64, n: u64) -> (u32, u32) {
    debug_assert!(index < row_offset(n - 1, n));
    // Largest a with row_offset(a) <= index.
    let mut low = 0u64;
    let mut high = n - 1;
    while low < high {
        let mid = (low + high + 1) / 2;
        if row_offset(mid, n) <= index {
            low = mid;
        } else {
            high = mid - 1;
        }
    }
    let a = low;
    let b = a + 1 + (index - row_offset(a, n));
    (a as u32, b as u32)
}

/// Draws one G(n, M) sample: exactly `config.k` distinct edges chosen
/// uniformly among all unordered pairs, no self-loops. Deterministic in
/// (seed, sample_index). Nodes get anonymous zero-padded decimal
/// labels.
pub fn generate_er(config: &ERConfig, sample_index: usize) -> Result<SyllableNetwork> {
    config.validate()?;
    let n = config.n as u64;
    let total_pairs = max_edges(config.n);

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(sample_index as u64);

    // Partial Fisher-Yates over the pair-index space, with a sparse
    // swap table standing in for the virtual array 0..total_pairs.
    let mut swapped: HashMap<u64, u64> = HashMap::new();
    let mut picked: Vec<u64> = Vec::with_capacity(config.k);
    for i in 0..config.k as u64 {
        let j = rng.gen_range(i..total_pairs);
        let value_at_j = swapped.get(&j).copied().unwrap_or(j);
        let value_at_i = swapped.get(&i).copied().unwrap_or(i);
        picked.push(value_at_j);
        swapped.insert(j, value_at_i);
    }

    let mut edges: Vec<Edge> = picked
        .into_iter()
        .map(|index| {
            let (source, target) = decode_pair(index, n);
            Edge { source, target, weight: 1 }
        })
        .collect();
    edges.sort_unstable();

    let width = config.n.saturating_sub(1).to_string().len();
    let labels: Vec<String> = (0..config.n).map(|i| format!("{i:0width$}")).collect();

    Ok(SyllableNetwork::from_canonical_parts(
        NetworkVariant::new(Linking::CoOccurrence, false, false),
        labels,
        edges,
        vec![format!(
            "er:n={},k={},seed={},sample={}",
            config.n, config.k, config.seed, sample_index
        )],
    ))
}

/// Analytic expectation of the clustering coefficient of G(n, M): the
/// edge probability p = 2K / (N(N-1)).
pub fn expected_er_clustering(n: usize, k: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Undefined("ER clustering expectation needs at least two nodes"));
    }
    Ok(2.0 * k as f64 / (n as f64 * (n as f64 - 1.0)))
}

/// Mean or spread of the per-sample measures of an ER ensemble.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricAggregate {
    pub avg_degree: f64,
    pub avg_path_length: f64,
    pub diameter: f64,
    pub avg_clustering: f64,
    pub components: f64,
    pub giant_fraction: f64,
}

impl MetricAggregate {
    fn from_samples(samples: &[NetworkMetrics]) -> (MetricAggregate, MetricAggregate) {
        let fields: [fn(&NetworkMetrics) -> f64; 6] = [
            |m| m.avg_degree,
            |m| m.avg_path_length,
            |m| m.diameter as f64,
            |m| m.avg_clustering,
            |m| m.components as f64,
            |m| m.giant_fraction,
        ];
        let count = samples.len() as f64;
        let mut means = [0.0f64; 6];
        let mut stddevs = [0.0f64; 6];
        for (slot, field) in fields.iter().enumerate() {
            let mean = samples.iter().map(|m| field(m)).sum::<f64>() / count;
            means[slot] = mean;
            // Sample standard deviation; zero for a single sample.
            stddevs[slot] = if samples.len() < 2 {
                0.0
            } else {
                let ss: f64 = samples.iter().map(|m| (field(m) - mean).powi(2)).sum();
                (ss / (count - 1.0)).sqrt()
            };
        }
        let build = |v: [f64; 6]| MetricAggregate {
            avg_degree: v[0],
            avg_path_length: v[1],
            diameter: v[2],
            avg_clustering: v[3],
            components: v[4],
            giant_fraction: v[5],
        };
        (build(means), build(stddevs))
    }
}

/// A real network next to its size-matched ER ensemble.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub real: NetworkMetrics,
    pub er_config: ERConfig,
    pub er_mean: MetricAggregate,
    pub er_stddev: MetricAggregate,
    /// Real average clustering over the ER ensemble mean. Infinite
    /// when the ensemble mean is zero but the real value is not (JSON
    /// renders that as null); 1 when both are zero.
    pub clustering_ratio: f64,
}

/// Measures `network` and `samples` ER graphs with the network's node
/// and edge counts, then aggregates.
pub fn compare_with_er(
    network: &SyllableNetwork,
    samples: usize,
    seed: u64,
    options: MetricsOptions,
) -> Result<ComparisonReport> {
    let real = NetworkMetrics::compute(network, options)?;
    let er_config = ERConfig {
        n: network.node_count(),
        k: network.edge_count(),
        samples,
        seed,
    };
    er_config.validate()?;

    let mut per_sample = Vec::with_capacity(samples);
    for sample_index in 0..samples {
        let graph = generate_er(&er_config, sample_index)?;
        per_sample.push(NetworkMetrics::compute(&graph, options)?);
    }
    let (er_mean, er_stddev) = MetricAggregate::from_samples(&per_sample);

    let clustering_ratio = if er_mean.avg_clustering == 0.0 {
        if real.avg_clustering == 0.0 { 1.0 } else { f64::INFINITY }
    } else {
        real.avg_clustering / er_mean.avg_clustering
    };

    Ok(ComparisonReport { real, er_config, er_mean, er_stddev, clustering_ratio })
}
