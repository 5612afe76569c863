//! Topological network measures: average degree, shortest-path
//! statistics, clustering coefficients, degree distributions and
//! component structure.
//!
//! All measures here are unweighted. Distance and component measures
//! ignore edge direction; clustering operations reject directed input
//! outright, so callers collapse directed networks first (see
//! [`crate::netbuild::to_undirected_unweighted`]).
//! [`NetworkMetrics::compute`] does that collapse itself and records it
//! in the conventions block.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::netbuild::to_undirected_unweighted;
use crate::network::SyllableNetwork;

/// How the average path length is normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PathConvention {
    /// Mean distance over unordered connected pairs of distinct nodes
    /// in the largest component.
    #[default]
    UnorderedConnectedPairs,
    /// Mean over all ordered pairs of the largest component, self
    /// pairs included as zero: per-node averages divide by the
    /// component size, and so does their mean. A path a-b-c scores 4/3
    /// under the default and 8/9 here.
    OrderedPairsWithSelf,
}

impl PathConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            PathConvention::UnorderedConnectedPairs => "unordered_connected_pairs",
            PathConvention::OrderedPairsWithSelf => "ordered_pairs_with_self",
        }
    }
}

impl std::str::FromStr for PathConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "connected-pairs" | "unordered_connected_pairs" => {
                Ok(PathConvention::UnorderedConnectedPairs)
            }
            "ordered-with-self" | "ordered_pairs_with_self" => {
                Ok(PathConvention::OrderedPairsWithSelf)
            }
            other => Err(Error::Config(format!(
                "unknown path normalization {other:?} (expected \"connected-pairs\" or \"ordered-with-self\")"
            ))),
        }
    }
}

/// What nodes with fewer than two neighbours contribute to the average
/// clustering coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LowDegreePolicy {
    /// They count as zero (the average runs over all nodes).
    #[default]
    Zero,
    /// They are left out of the average entirely.
    Excluded,
}

impl LowDegreePolicy {
    pub fn as_str(self) -> &'static str {
        match self {
            LowDegreePolicy::Zero => "zero",
            LowDegreePolicy::Excluded => "excluded",
        }
    }
}

impl std::str::FromStr for LowDegreePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zero" => Ok(LowDegreePolicy::Zero),
            "excluded" => Ok(LowDegreePolicy::Excluded),
            other => Err(Error::Config(format!(
                "unknown low-degree clustering policy {other:?} (expected \"zero\" or \"excluded\")"
            ))),
        }
    }
}

/// Options shared by the metric computations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MetricsOptions {
    pub path_convention: PathConvention,
    pub low_degree: LowDegreePolicy,
}

/// Average degree: 2K/N for undirected networks, K/N (the mean
/// out-degree, which equals the mean in-degree) for directed ones.
pub fn average_degree(network: &SyllableNetwork) -> Result<f64> {
    let n = network.node_count();
    if n == 0 {
        return Err(Error::EmptyNetwork);
    }
    let k = network.edge_count() as f64;
    Ok(if network.variant().directed { k / n as f64 } else { 2.0 * k / n as f64 })
}

/// Hop distances from `source` (a node label) to every node, following
/// edge direction in directed networks. `None` marks unreachable nodes.
pub fn shortest_paths_from(network: &SyllableNetwork, source: &str) -> Result<Vec<Option<u64>>> {
    let id = network
        .node_id(source)
        .ok_or_else(|| Error::NodeNotFound(source.to_owned()))?;
    let adjacency = network.out_neighbors();
    Ok(bfs_distances(&adjacency, id)
        .into_iter()
        .map(|d| if d == u32::MAX { None } else { Some(d as u64) })
        .collect())
}

fn bfs_distances(adjacency: &[Vec<u32>], source: u32) -> Vec<u32> {
    let mut distance = vec![u32::MAX; adjacency.len()];
    distance[source as usize] = 0;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(source);
    while let Some(node) = queue.pop_front() {
        let next = distance[node as usize] + 1;
        for &neighbour in &adjacency[node as usize] {
            if distance[neighbour as usize] == u32::MAX {
                distance[neighbour as usize] = next;
                queue.push_back(neighbour);
            }
        }
    }
    distance
}

/// Connected components (weak connectivity in directed networks),
/// largest first; equal sizes order by smallest member. Node lists are
/// ascending.
pub fn connected_components(network: &SyllableNetwork) -> Vec<Vec<u32>> {
    let adjacency = network.undirected_neighbors();
    let mut component_of = vec![usize::MAX; adjacency.len()];
    let mut components: Vec<Vec<u32>> = Vec::new();
    for start in 0..adjacency.len() as u32 {
        if component_of[start as usize] != usize::MAX {
            continue;
        }
        let index = components.len();
        let mut members = vec![start];
        component_of[start as usize] = index;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(node) = queue.pop_front() {
            for &neighbour in &adjacency[node as usize] {
                if component_of[neighbour as usize] == usize::MAX {
                    component_of[neighbour as usize] = index;
                    members.push(neighbour);
                    queue.push_back(neighbour);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    components
}

/// Distance statistics over the largest component, edge directions
/// ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceSummary {
    /// Component sizes, largest first.
    pub component_sizes: Vec<usize>,
    /// Nodes of the analyzed (largest) component, ascending.
    pub nodes: Vec<u32>,
    /// Per node, the sum of hop distances to every other component
    /// member, aligned with `nodes`.
    pub per_node_sum: Vec<u64>,
    /// Largest hop distance in the component.
    pub max_distance: u64,
}

impl DistanceSummary {
    /// Average distance of the `index`-th component node to the rest.
    pub fn per_node_average(&self, index: usize, convention: PathConvention) -> f64 {
        let n = self.nodes.len() as f64;
        match convention {
            PathConvention::UnorderedConnectedPairs => self.per_node_sum[index] as f64 / (n - 1.0),
            PathConvention::OrderedPairsWithSelf => self.per_node_sum[index] as f64 / n,
        }
    }

    /// Average path length of the component.
    pub fn average(&self, convention: PathConvention) -> f64 {
        let total: u64 = self.per_node_sum.iter().sum();
        let n = self.nodes.len() as u64;
        let pairs = match convention {
            PathConvention::UnorderedConnectedPairs => n * (n - 1),
            PathConvention::OrderedPairsWithSelf => n * n,
        };
        total as f64 / pairs as f64
    }
}

/// Runs breadth-first searches from every node of the largest
/// component. Errors: [`Error::EmptyNetwork`] on zero nodes,
/// [`Error::Undefined`] when no two nodes are connected.
pub fn distance_summary(network: &SyllableNetwork) -> Result<DistanceSummary> {
    if network.node_count() == 0 {
        return Err(Error::EmptyNetwork);
    }
    let components = connected_components(network);
    let component_sizes: Vec<usize> = components.iter().map(Vec::len).collect();
    let nodes = components.into_iter().next().unwrap_or_default();
    if nodes.len() < 2 {
        return Err(Error::Undefined("path statistics need two connected nodes"));
    }

    let adjacency = network.undirected_neighbors();
    // One BFS per component node, in parallel; indexed collect keeps
    // the reduction order fixed.
    let per_source: Vec<(u64, u64)> = nodes
        .par_iter()
        .map(|&source| {
            let distance = bfs_distances(&adjacency, source);
            let mut sum = 0u64;
            let mut max = 0u64;
            for &other in &nodes {
                let d = distance[other as usize];
                debug_assert_ne!(d, u32::MAX, "component members must be mutually reachable");
                sum += d as u64;
                max = max.max(d as u64);
            }
            (sum, max)
        })
        .collect();

    let per_node_sum: Vec<u64> = per_source.iter().map(|&(sum, _)| sum).collect();
    let max_distance = per_source.iter().map(|&(_, max)| max).max().unwrap_or(0);
    Ok(DistanceSummary { component_sizes, nodes, per_node_sum, max_distance })
}

/// Average path length over the largest component.
pub fn average_path_length(
    network: &SyllableNetwork,
    convention: PathConvention,
) -> Result<f64> {
    Ok(distance_summary(network)?.average(convention))
}

/// Longest shortest path (in hops) within the largest component.
pub fn diameter(network: &SyllableNetwork) -> Result<u64> {
    Ok(distance_summary(network)?.max_distance)
}

/// Clustering figures for one node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeClustering {
    pub node: u32,
    /// Number of neighbours.
    pub degree: u64,
    /// Edges among those neighbours.
    pub neighbour_edges: u64,
    /// 2 * neighbour_edges / (degree * (degree - 1)); zero below
    /// degree 2.
    pub coefficient: f64,
}

fn clustering_by_id(adjacency: &[Vec<u32>], node: u32) -> NodeClustering {
    let neighbours = &adjacency[node as usize];
    let degree = neighbours.len() as u64;
    let mut neighbour_edges = 0u64;
    for &u in neighbours {
        // Count each neighbour pair once: only partners above u.
        let candidates = &adjacency[u as usize];
        let (mut i, mut j) = (0usize, 0usize);
        while i < neighbours.len() && j < candidates.len() {
            match neighbours[i].cmp(&candidates[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if neighbours[i] > u {
                        neighbour_edges += 1;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    let coefficient = if degree < 2 {
        0.0
    } else {
        2.0 * neighbour_edges as f64 / (degree * (degree - 1)) as f64
    };
    NodeClustering { node, degree, neighbour_edges, coefficient }
}

fn require_undirected(network: &SyllableNetwork) -> Result<()> {
    if network.variant().directed {
        return Err(Error::RequiresUndirected);
    }
    Ok(())
}

/// Local clustering coefficient of the node with the given label.
/// Rejects directed networks; weights are ignored.
pub fn clustering_local(network: &SyllableNetwork, node: &str) -> Result<NodeClustering> {
    require_undirected(network)?;
    let id = network
        .node_id(node)
        .ok_or_else(|| Error::NodeNotFound(node.to_owned()))?;
    Ok(clustering_by_id(&network.undirected_neighbors(), id))
}

/// Mean local clustering coefficient. Rejects directed networks;
/// weights are ignored.
pub fn clustering_average(network: &SyllableNetwork, policy: LowDegreePolicy) -> Result<f64> {
    require_undirected(network)?;
    let n = network.node_count();
    if n == 0 {
        return Err(Error::EmptyNetwork);
    }
    let adjacency = network.undirected_neighbors();
    let locals: Vec<NodeClustering> = (0..n as u32)
        .into_par_iter()
        .map(|node| clustering_by_id(&adjacency, node))
        .collect();
    match policy {
        LowDegreePolicy::Zero => {
            Ok(locals.iter().map(|c| c.coefficient).sum::<f64>() / n as f64)
        }
        LowDegreePolicy::Excluded => {
            let eligible: Vec<f64> = locals
                .iter()
                .filter(|c| c.degree >= 2)
                .map(|c| c.coefficient)
                .collect();
            if eligible.is_empty() {
                return Err(Error::Undefined(
                    "clustering with low-degree nodes excluded needs a node of degree 2",
                ));
            }
            Ok(eligible.iter().sum::<f64>() / eligible.len() as f64)
        }
    }
}

/// Least-squares line fit, with the coefficient of determination.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OlsFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

impl OlsFit {
    /// Fits y = slope * x + intercept. Needs two distinct x values.
    pub fn fit(points: &[(f64, f64)]) -> Option<OlsFit> {
        if points.len() < 2 {
            return None;
        }
        let n = points.len() as f64;
        let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
        let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
        let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
        if sxx == 0.0 {
            return None;
        }
        let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
        let slope = sxy / sxx;
        let intercept = mean_y - slope * mean_x;
        let ss_res: f64 = points
            .iter()
            .map(|p| (p.1 - (slope * p.0 + intercept)).powi(2))
            .sum();
        let ss_tot: f64 = points.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
        let r_squared = if ss_tot == 0.0 {
            1.0
        } else {
            1.0 - ss_res / ss_tot
        };
        Some(OlsFit { slope, intercept, r_squared })
    }
}

/// Degree histogram with its log-log projection.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeDistribution {
    /// degree -> node count; counts sum to N.
    pub histogram: BTreeMap<u64, u64>,
    /// (ln degree, ln count) for bins with degree > 0, ascending by
    /// degree.
    pub loglog_points: Vec<(f64, f64)>,
    /// Straight-line fit through the log-log points; indicative only.
    pub fit: Option<OlsFit>,
}

/// Histogram of incident-edge counts (in + out for directed networks).
pub fn degree_distribution(network: &SyllableNetwork) -> DegreeDistribution {
    let mut histogram = BTreeMap::new();
    for degree in network.degrees() {
        *histogram.entry(degree).or_insert(0u64) += 1;
    }
    let loglog_points: Vec<(f64, f64)> = histogram
        .iter()
        .filter(|(&degree, _)| degree > 0)
        .map(|(&degree, &count)| ((degree as f64).ln(), (count as f64).ln()))
        .collect();
    let fit = OlsFit::fit(&loglog_points);
    DegreeDistribution { histogram, loglog_points, fit }
}

/// The `k` highest-degree nodes: descending degree, lexicographic
/// label on ties.
pub fn top_k_by_degree(network: &SyllableNetwork, k: usize) -> Vec<(String, u64)> {
    let mut ranked: Vec<(String, u64)> = network
        .degrees()
        .into_iter()
        .enumerate()
        .map(|(id, degree)| (network.label(id as u32).to_owned(), degree))
        .collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    ranked.truncate(k);
    ranked
}

/// Which readings produced the numbers in a [`NetworkMetrics`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    /// "2k_over_n" for undirected input, "k_over_n_out_degree" for
    /// directed.
    pub avg_degree: String,
    pub path_length: String,
    pub low_degree_clustering: String,
    /// True when the input was directed or weighted and the distance,
    /// component and clustering figures come from its undirected
    /// unweighted collapse.
    pub transformed_to_undirected: bool,
}

/// The summary row for one network. `n`, `k` and `avg_degree` describe
/// the input as given; the remaining measures are computed on its
/// undirected unweighted form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkMetrics {
    pub n: usize,
    pub k: usize,
    pub avg_degree: f64,
    pub avg_path_length: f64,
    pub diameter: u64,
    pub avg_clustering: f64,
    pub components: usize,
    pub giant_fraction: f64,
    pub conventions: Conventions,
}

impl NetworkMetrics {
    pub fn compute(network: &SyllableNetwork, options: MetricsOptions) -> Result<NetworkMetrics> {
        if network.node_count() == 0 {
            return Err(Error::EmptyNetwork);
        }
        let variant = network.variant();
        let transformed = variant.directed || variant.weighted;
        let collapsed;
        let view = if transformed {
            collapsed = to_undirected_unweighted(network);
            &collapsed
        } else {
            network
        };

        let summary = distance_summary(view)?;
        let avg_clustering = clustering_average(view, options.low_degree)?;
        Ok(NetworkMetrics {
            n: network.node_count(),
            k: network.edge_count(),
            avg_degree: average_degree(network)?,
            avg_path_length: summary.average(options.path_convention),
            diameter: summary.max_distance,
            avg_clustering,
            components: summary.component_sizes.len(),
            giant_fraction: summary.nodes.len() as f64 / network.node_count() as f64,
            conventions: Conventions {
                avg_degree: if variant.directed { "k_over_n_out_degree" } else { "2k_over_n" }
                    .to_owned(),
                path_length: options.path_convention.as_str().to_owned(),
                low_degree_clustering: options.low_degree.as_str().to_owned(),
                transformed_to_undirected: transformed,
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{Edge, Linking, NetworkVariant};

    fn undirected(labels: &[&str], edges: &[(u32, u32)]) -> SyllableNetwork {
        SyllableNetwork::from_edge_list(
            NetworkVariant::new(Linking::CoOccurrence, false, false),
            labels.iter().map(|s| s.to_string()).collect(),
            edges
                .iter()
                .map(|&(source, target)| Edge { source, target, weight: 1 })
                .collect(),
            vec![],
        )
        .unwrap()
    }

    fn directed(labels: &[&str], edges: &[(u32, u32)]) -> SyllableNetwork {
        SyllableNetwork::from_edge_list(
            NetworkVariant::new(Linking::CoOccurrence, true, false),
            labels.iter().map(|s| s.to_string()).collect(),
            edges
                .iter()
                .map(|&(source, target)| Edge { source, target, weight: 1 })
                .collect(),
            vec![],
        )
        .unwrap()
    }

    fn triangle() -> SyllableNetwork {
        undirected(&["a", "b", "c"], &[(0, 1), (1, 2), (0, 2)])
    }

    fn path3() -> SyllableNetwork {
        undirected(&["a", "b", "c"], &[(0, 1), (1, 2)])
    }

    /// Square 1-2-3-4 with the chord 1-3 (zero-indexed labels a-d).
    fn square_with_chord() -> SyllableNetwork {
        undirected(&["a", "b", "c", "d"], &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    }

    #[test]
    fn average_degree_follows_directedness() {
        assert_eq!(average_degree(&triangle()).unwrap(), 2.0);
        assert_eq!(average_degree(&undirected(&["a"], &[])).unwrap(), 0.0);
        let network = directed(&["a", "b", "c"], &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(average_degree(&network).unwrap(), 1.0);
        let empty = undirected(&[], &[]);
        assert!(matches!(average_degree(&empty), Err(Error::EmptyNetwork)));
    }

    #[test]
    fn average_degree_at_reference_size() {
        let mut labels: Vec<String> = (0..2000).map(|i| format!("{i:04}")).collect();
        labels.sort();
        // 36202 edges on 2000 nodes: fill pairs row by row.
        let mut edges = Vec::new();
        'outer: for a in 0..2000u32 {
            for b in a + 1..2000u32 {
                if edges.len() == 36202 {
                    break 'outer;
                }
                edges.push(Edge { source: a, target: b, weight: 1 });
            }
        }
        let network = SyllableNetwork::from_edge_list(
            NetworkVariant::new(Linking::CoOccurrence, false, false),
            labels,
            edges,
            vec![],
        )
        .unwrap();
        let got = average_degree(&network).unwrap();
        assert!((got - 36.202).abs() < 1e-12);
    }

    #[test]
    fn bfs_distances_on_path() {
        let distances = shortest_paths_from(&path3(), "a").unwrap();
        assert_eq!(distances, [Some(0), Some(1), Some(2)]);
    }

    #[test]
    fn bfs_marks_unreachable() {
        let network = undirected(&["a", "b", "c", "d"], &[(0, 1), (2, 3)]);
        let distances = shortest_paths_from(&network, "a").unwrap();
        assert_eq!(distances, [Some(0), Some(1), None, None]);
    }

    #[test]
    fn bfs_follows_direction() {
        let network = directed(&["a", "b"], &[(0, 1)]);
        assert_eq!(shortest_paths_from(&network, "a").unwrap(), [Some(0), Some(1)]);
        assert_eq!(shortest_paths_from(&network, "b").unwrap(), [None, Some(0)]);
    }

    #[test]
    fn bfs_unknown_source() {
        assert!(matches!(
            shortest_paths_from(&path3(), "zz"),
            Err(Error::NodeNotFound(label)) if label == "zz"
        ));
    }

    #[test]
    fn path_length_conventions() {
        let network = path3();
        let default =
            average_path_length(&network, PathConvention::UnorderedConnectedPairs).unwrap();
        assert!((default - 4.0 / 3.0).abs() < 1e-15);
        let literal = average_path_length(&network, PathConvention::OrderedPairsWithSelf).unwrap();
        assert!((literal - 8.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn path_length_ignores_smaller_components() {
        // A triangle plus an isolated edge: only the triangle counts.
        let network = undirected(&["a", "b", "c", "d", "e"], &[(0, 1), (1, 2), (0, 2), (3, 4)]);
        let got =
            average_path_length(&network, PathConvention::UnorderedConnectedPairs).unwrap();
        assert_eq!(got, 1.0);
        assert_eq!(diameter(&network).unwrap(), 1);
    }

    #[test]
    fn path_length_needs_a_connected_pair() {
        let isolated = undirected(&["a", "b"], &[]);
        assert!(matches!(
            average_path_length(&isolated, PathConvention::UnorderedConnectedPairs),
            Err(Error::Undefined(_))
        ));
        let empty = undirected(&[], &[]);
        assert!(matches!(
            average_path_length(&empty, PathConvention::UnorderedConnectedPairs),
            Err(Error::EmptyNetwork)
        ));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&path3()).unwrap(), 2);
        assert_eq!(diameter(&triangle()).unwrap(), 1);
    }

    #[test]
    fn per_node_distance_averages() {
        let summary = distance_summary(&path3()).unwrap();
        assert_eq!(summary.nodes, [0, 1, 2]);
        assert_eq!(summary.per_node_sum, [3, 2, 3]);
        let middle = summary.per_node_average(1, PathConvention::UnorderedConnectedPairs);
        assert_eq!(middle, 1.0);
        let literal = summary.per_node_average(1, PathConvention::OrderedPairsWithSelf);
        assert!((literal - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn clustering_of_named_shapes() {
        // Star centre: no neighbour pair is linked.
        let star = undirected(&["c", "x", "y", "z"], &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(clustering_local(&star, "c").unwrap().coefficient, 0.0);
        assert_eq!(clustering_average(&star, LowDegreePolicy::Zero).unwrap(), 0.0);

        for node in ["a", "b", "c"] {
            assert_eq!(clustering_local(&triangle(), node).unwrap().coefficient, 1.0);
        }
        assert_eq!(clustering_average(&triangle(), LowDegreePolicy::Zero).unwrap(), 1.0);
    }

    #[test]
    fn clustering_square_with_chord() {
        let network = square_with_chord();
        let a = clustering_local(&network, "a").unwrap();
        assert_eq!(a.degree, 3);
        assert_eq!(a.neighbour_edges, 2);
        assert!((a.coefficient - 2.0 / 3.0).abs() < 1e-15);
        let average = clustering_average(&network, LowDegreePolicy::Zero).unwrap();
        assert!((average - 5.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn clustering_rejects_directed() {
        let network = directed(&["a", "b", "c"], &[(0, 1), (1, 2)]);
        assert!(matches!(clustering_local(&network, "a"), Err(Error::RequiresUndirected)));
        assert!(matches!(
            clustering_average(&network, LowDegreePolicy::Zero),
            Err(Error::RequiresUndirected)
        ));
    }

    #[test]
    fn clustering_low_degree_policies_differ() {
        // Star plus one edge between two leaves.
        let network = undirected(&["c", "x", "y", "z"], &[(0, 1), (0, 2), (0, 3), (1, 2)]);
        let zero = clustering_average(&network, LowDegreePolicy::Zero).unwrap();
        assert!((zero - 7.0 / 12.0).abs() < 1e-15);
        let excluded = clustering_average(&network, LowDegreePolicy::Excluded).unwrap();
        assert!((excluded - 7.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn clustering_excluded_needs_eligible_nodes() {
        let network = undirected(&["a", "b"], &[(0, 1)]);
        assert!(matches!(
            clustering_average(&network, LowDegreePolicy::Excluded),
            Err(Error::Undefined(_))
        ));
    }

    #[test]
    fn components_partition_and_order() {
        let two_triangles = undirected(
            &["a", "b", "c", "d", "e", "f"],
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        );
        let components = connected_components(&two_triangles);
        assert_eq!(components, vec![vec![0, 1, 2], vec![3, 4, 5]]);

        assert_eq!(connected_components(&path3()), vec![vec![0, 1, 2]]);

        // Weak connectivity: opposing directed edges still connect.
        let network = directed(&["a", "b", "c"], &[(1, 0), (1, 2)]);
        assert_eq!(connected_components(&network).len(), 1);
    }

    #[test]
    fn degree_distribution_shapes() {
        let distribution = degree_distribution(&triangle());
        assert_eq!(distribution.histogram, BTreeMap::from([(2, 3)]));

        let star = undirected(&["c", "w", "x", "y", "z"], &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let distribution = degree_distribution(&star);
        assert_eq!(distribution.histogram, BTreeMap::from([(1, 4), (4, 1)]));
        assert_eq!(distribution.loglog_points.len(), 2);

        let with_isolated = undirected(&["a", "b", "c"], &[(0, 1)]);
        let distribution = degree_distribution(&with_isolated);
        assert_eq!(distribution.histogram, BTreeMap::from([(0, 1), (1, 2)]));
        // Zero-degree bins stay out of the log-log projection.
        assert_eq!(distribution.loglog_points.len(), 1);
        let total: u64 = distribution.histogram.values().sum();
        assert_eq!(total as usize, with_isolated.node_count());
    }

    #[test]
    fn ols_fit_recovers_a_perfect_line() {
        let points: Vec<(f64, f64)> =
            (1..=4).map(|k| ((k as f64).ln(), 8.0f64.ln() - (k as f64).ln())).collect();
        let fit = OlsFit::fit(&points).unwrap();
        assert!((fit.slope - -1.0).abs() < 1e-12);
        assert!((fit.intercept - 8.0f64.ln()).abs() < 1e-12);
        assert!((fit.r_squared - 1.0).abs() < 1e-12);
        assert!(OlsFit::fit(&points[..1]).is_none());
    }

    #[test]
    fn top_k_orders_by_degree_then_label() {
        let star = undirected(&["c", "w", "x", "y", "z"], &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(top_k_by_degree(&star, 1), [("c".to_owned(), 4)]);
        assert_eq!(
            top_k_by_degree(&star, 3),
            [("c".to_owned(), 4), ("w".to_owned(), 1), ("x".to_owned(), 1)]
        );
        assert_eq!(top_k_by_degree(&star, 99).len(), 5);
    }

    #[test]
    fn metrics_summary_on_square_with_chord() {
        let metrics =
            NetworkMetrics::compute(&square_with_chord(), MetricsOptions::default()).unwrap();
        assert_eq!(metrics.n, 4);
        assert_eq!(metrics.k, 5);
        assert_eq!(metrics.avg_degree, 2.5);
        assert!((metrics.avg_path_length - 7.0 / 6.0).abs() < 1e-15);
        assert_eq!(metrics.diameter, 2);
        assert!((metrics.avg_clustering - 5.0 / 6.0).abs() < 1e-15);
        assert_eq!(metrics.components, 1);
        assert_eq!(metrics.giant_fraction, 1.0);
        assert!(!metrics.conventions.transformed_to_undirected);
        assert_eq!(metrics.conventions.avg_degree, "2k_over_n");
    }

    #[test]
    fn metrics_collapse_directed_input() {
        // a->b, b->a, b->c: collapses to the path a-b-c.
        let network = directed(&["a", "b", "c"], &[(0, 1), (1, 0), (1, 2)]);
        let metrics = NetworkMetrics::compute(&network, MetricsOptions::default()).unwrap();
        assert_eq!(metrics.n, 3);
        assert_eq!(metrics.k, 3);
        assert_eq!(metrics.avg_degree, 1.0);
        assert!((metrics.avg_path_length - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(metrics.diameter, 2);
        assert_eq!(metrics.avg_clustering, 0.0);
        assert!(metrics.conventions.transformed_to_undirected);
        assert_eq!(metrics.conventions.avg_degree, "k_over_n_out_degree");
    }

    #[test]
    fn metrics_conventions_round_trip_as_json() {
        let metrics =
            NetworkMetrics::compute(&square_with_chord(), MetricsOptions::default()).unwrap();
        let json = serde_json::to_string_pretty(&metrics).unwrap();
        let back: NetworkMetrics = serde_json::from_str(&json).unwrap();
        assert_eq!(back, metrics);
        for field in
            ["\"n\"", "\"k\"", "\"avg_degree\"", "\"avg_path_length\"", "\"diameter\"",
             "\"avg_clustering\"", "\"components\"", "\"giant_fraction\"", "\"conventions\""]
        {
            assert!(json.contains(field), "missing {field} in {json}");
        }
    }

    #[test]
    fn conventions_parse_from_flags() {
        assert_eq!(
            "connected-pairs".parse::<PathConvention>().unwrap(),
            PathConvention::UnorderedConnectedPairs
        );
        assert_eq!(
            "ordered-with-self".parse::<PathConvention>().unwrap(),
            PathConvention::OrderedPairsWithSelf
        );
        assert_eq!("excluded".parse::<LowDegreePolicy>().unwrap(), LowDegreePolicy::Excluded);
        assert!("sometimes".parse::<LowDegreePolicy>().is_err());
    }
}
