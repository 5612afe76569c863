use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use syllnet_bench::{sample_tokens, sample_words};
use syllnet_core::{
    build_network, generate_er, syllabify_all, ERConfig, Linking, MetricsOptions, NetworkMetrics,
    NetworkVariant, RuleSet,
};

fn bench_syllabify(c: &mut Criterion) {
    let rules = RuleSet::default();
    let mut group = c.benchmark_group("syllabify_all");
    for count in [1_000usize, 10_000] {
        let tokens = sample_tokens(count, 1);
        group.throughput(Throughput::Elements(count as u64));
        group.bench_with_input(BenchmarkId::from_parameter(count), &tokens, |b, tokens| {
            b.iter(|| syllabify_all(black_box(tokens), &rules));
        });
    }
    group.finish();
}

fn bench_build(c: &mut Criterion) {
    let words = sample_words(10_000, 2);
    let mut group = c.benchmark_group("build_network_10k_words");
    for (name, linking) in
        [("co_occurrence", Linking::CoOccurrence), ("first_neighbour", Linking::FirstNeighbour)]
    {
        let variant = NetworkVariant { linking, directed: false, weighted: true };
        group.bench_function(name, |b| b.iter(|| build_network(black_box(&words), variant)));
    }
    group.finish();
}

fn bench_metrics(c: &mut Criterion) {
    let words = sample_words(10_000, 3);
    let variant =
        NetworkVariant { linking: Linking::CoOccurrence, directed: false, weighted: false };
    let network = build_network(&words, variant);
    let id = format!("network_metrics_n{}_k{}", network.node_count(), network.edge_count());
    c.bench_function(&id, |b| {
        b.iter(|| NetworkMetrics::compute(black_box(&network), MetricsOptions::default()).unwrap());
    });
}

fn bench_er(c: &mut Criterion) {
    let config = ERConfig { n: 1000, k: 9051, samples: 1, seed: 42 };
    c.bench_function("generate_er_n1000_k9051", |b| {
        let mut sample_index = 0;
        b.iter(|| {
            sample_index += 1;
            generate_er(black_box(&config), sample_index).unwrap()
        });
    });
}

criterion_group!(benches, bench_syllabify, bench_build, bench_metrics, bench_er);
criterion_main!(benches);
