//! Independent reference implementations and seeded generators for
//! testing. Everything here recomputes results from first principles
//! (distance matrices, exhaustive pair enumeration, union-find) and
//! deliberately shares no algorithmic code with the main crate.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use syllnet_core::corpus::Token;
use syllnet_core::network::{Edge, Linking, NetworkVariant, SyllableNetwork};
use syllnet_core::syllabifier::{Syllable, SyllabifiedWord};

/// All-pairs hop distances by Floyd-Warshall over the undirected view;
/// `None` marks unreachable pairs.
pub fn matrix_distances(network: &SyllableNetwork) -> Vec<Vec<Option<u64>>> {
    let n = network.node_count();
    let mut distance = vec![vec![None; n]; n];
    for i in 0..n {
        distance[i][i] = Some(0);
    }
    for edge in network.edges() {
        distance[edge.source as usize][edge.target as usize] = Some(1);
        distance[edge.target as usize][edge.source as usize] = Some(1);
    }
    for mid in 0..n {
        for from in 0..n {
            let Some(a) = distance[from][mid] else { continue };
            for to in 0..n {
                let Some(b) = distance[mid][to] else { continue };
                let through = a + b;
                if distance[from][to].map_or(true, |direct| through < direct) {
                    distance[from][to] = Some(through);
                }
            }
        }
    }
    distance
}

/// Connected components by union-find over the undirected view,
/// ordered largest first (ties by smallest member), members ascending.
pub fn union_find_components(network: &SyllableNetwork) -> Vec<Vec<u32>> {
    let n = network.node_count();
    let mut parent: Vec<u32> = (0..n as u32).collect();
    fn find(parent: &mut [u32], x: u32) -> u32 {
        let mut root = x;
        while parent[root as usize] != root {
            root = parent[root as usize];
        }
        let mut cursor = x;
        while parent[cursor as usize] != root {
            let next = parent[cursor as usize];
            parent[cursor as usize] = root;
            cursor = next;
        }
        root
    }
    for edge in network.edges() {
        let a = find(&mut parent, edge.source);
        let b = find(&mut parent, edge.target);
        if a != b {
            parent[a.max(b) as usize] = a.min(b);
        }
    }
    let mut groups: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for node in 0..n as u32 {
        groups.entry(find(&mut parent, node)).or_default().push(node);
    }
    let mut components: Vec<Vec<u32>> = groups.into_values().collect();
    components.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    components
}

/// Distance statistics recomputed from the full matrix: average path
/// length over unordered connected pairs of the largest component, the
/// same under ordered-pairs-with-self normalization, and the diameter.
/// `None` when no two nodes are connected.
pub fn matrix_path_stats(network: &SyllableNetwork) -> Option<(f64, f64, u64)> {
    let components = union_find_components(network);
    let giant = components.first()?;
    if giant.len() < 2 {
        return None;
    }
    let matrix = matrix_distances(network);
    let mut sum = 0u64;
    let mut max = 0u64;
    for &a in giant {
        for &b in giant {
            if a < b {
                let d = matrix[a as usize][b as usize]
                    .expect("members of one component must be connected");
                sum += d;
                max = max.max(d);
            }
        }
    }
    let n = giant.len() as f64;
    let unordered_pairs = n * (n - 1.0) / 2.0;
    let connected_mean = sum as f64 / unordered_pairs;
    let ordered_with_self = (2 * sum) as f64 / (n * n);
    Some((connected_mean, ordered_with_self, max))
}

/// Local clustering by exhaustive neighbour-pair enumeration:
/// (degree, edges among neighbours, coefficient).
pub fn exhaustive_local_clustering(network: &SyllableNetwork, node: u32) -> (u64, u64, f64) {
    let mut pair_set: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut neighbours: BTreeSet<u32> = BTreeSet::new();
    for edge in network.edges() {
        let (a, b) = (edge.source.min(edge.target), edge.source.max(edge.target));
        pair_set.insert((a, b));
        if edge.source == node {
            neighbours.insert(edge.target);
        }
        if edge.target == node {
            neighbours.insert(edge.source);
        }
    }
    let neighbours: Vec<u32> = neighbours.into_iter().collect();
    let degree = neighbours.len() as u64;
    let mut linked_pairs = 0u64;
    for (i, &u) in neighbours.iter().enumerate() {
        for &v in &neighbours[i + 1..] {
            if pair_set.contains(&(u.min(v), u.max(v))) {
                linked_pairs += 1;
            }
        }
    }
    let coefficient = if degree < 2 {
        0.0
    } else {
        2.0 * linked_pairs as f64 / (degree * (degree - 1)) as f64
    };
    (degree, linked_pairs, coefficient)
}

/// Mean local clustering; `exclude_low_degree` drops nodes with fewer
/// than two neighbours from the average (`None` if nothing remains).
pub fn exhaustive_average_clustering(
    network: &SyllableNetwork,
    exclude_low_degree: bool,
) -> Option<f64> {
    let mut values = Vec::new();
    for node in 0..network.node_count() as u32 {
        let (degree, _, coefficient) = exhaustive_local_clustering(network, node);
        if exclude_low_degree && degree < 2 {
            continue;
        }
        values.push(coefficient);
    }
    if values.is_empty() {
        return None;
    }
    Some(values.iter().sum::<f64>() / values.len() as f64)
}

/// Network construction by direct nested-loop enumeration of syllable
/// index pairs, deduplicated per word occurrence through a pair set.
pub fn naive_build(words: &[SyllabifiedWord], variant: NetworkVariant) -> SyllableNetwork {
    let mut label_set: BTreeSet<String> = BTreeSet::new();
    for word in words {
        for syllable in &word.syllables {
            label_set.insert(syllable.as_str().to_owned());
        }
    }
    let labels: Vec<String> = label_set.into_iter().collect();
    let id_of = |label: &str| -> u32 {
        labels.binary_search_by(|probe| probe.as_str().cmp(label)).unwrap() as u32
    };

    let mut weights: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for word in words {
        let ids: Vec<u32> = word.syllables.iter().map(|s| id_of(s.as_str())).collect();
        match variant.linking {
            Linking::CoOccurrence => {
                // The first index pair that exhibits an unordered
                // syllable pair also fixes the directed orientation:
                // its first element occurred earlier in the word.
                let mut counted: BTreeSet<(u32, u32)> = BTreeSet::new();
                for i in 0..ids.len() {
                    for j in i + 1..ids.len() {
                        let (a, b) = (ids[i], ids[j]);
                        if a == b || !counted.insert((a.min(b), a.max(b))) {
                            continue;
                        }
                        let key = if variant.directed { (a, b) } else { (a.min(b), a.max(b)) };
                        *weights.entry(key).or_insert(0) += 1;
                    }
                }
            }
            Linking::FirstNeighbour => {
                for i in 0..ids.len().saturating_sub(1) {
                    let (a, b) = (ids[i], ids[i + 1]);
                    if a == b {
                        continue;
                    }
                    let key = if variant.directed { (a, b) } else { (a.min(b), a.max(b)) };
                    *weights.entry(key).or_insert(0) += 1;
                }
            }
        }
    }

    let edges: Vec<Edge> = weights
        .into_iter()
        .map(|((source, target), weight)| Edge {
            source,
            target,
            weight: if variant.weighted { weight } else { 1 },
        })
        .collect();
    SyllableNetwork::from_edge_list(variant, labels, edges, vec![])
        .expect("naive construction yields a valid network")
}

/// A random simple graph with 2..=max_n nodes and at least one edge,
/// deterministic in `seed`. Undirected unweighted, labels "n00"…
pub fn random_simple_graph(seed: u64, max_n: usize) -> SyllableNetwork {
    random_network(
        seed,
        max_n,
        NetworkVariant { linking: Linking::CoOccurrence, directed: false, weighted: false },
    )
}

/// A random network of the given variant: unordered pairs for
/// undirected, ordered for directed, weights 1..=5 when weighted, at
/// least one edge.
pub fn random_network(seed: u64, max_n: usize, variant: NetworkVariant) -> SyllableNetwork {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_n as u32);
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            pairs.push((a, b));
            if variant.directed {
                pairs.push((b, a));
            }
        }
    }
    pairs.shuffle(&mut rng);
    let k = rng.gen_range(1..=pairs.len());
    let edges: Vec<Edge> = pairs[..k]
        .iter()
        .map(|&(source, target)| Edge {
            source,
            target,
            weight: if variant.weighted { rng.gen_range(1..=5) } else { 1 },
        })
        .collect();
    let labels: Vec<String> = (0..n).map(|i| format!("n{i:02}")).collect();
    SyllableNetwork::from_edge_list(variant, labels, edges, vec![])
        .expect("random network construction is valid")
}

/// A random syllabified corpus of up to `max_words` words over a small
/// syllable pool, deterministic in `seed`.
pub fn random_corpus(seed: u64, max_words: usize) -> Vec<SyllabifiedWord> {
    const POOL: [&str; 12] =
        ["ma", "te", "ti", "ka", "na", "po", "lo", "ri", "du", "sa", "vr", "je"];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let word_count = rng.gen_range(0..=max_words);
    (0..word_count)
        .map(|index| {
            let length = rng.gen_range(1..=6);
            let syllables: Vec<Syllable> = (0..length)
                .map(|_| Syllable::new(POOL[rng.gen_range(0..POOL.len())]))
                .collect();
            let surface: String = syllables.iter().map(Syllable::as_str).collect();
            SyllabifiedWord {
                token: Token { surface, doc_id: format!("gen{index}") },
                syllables,
            }
        })
        .collect()
}
