//! Property tests: any network survives a render/parse cycle in every
//! format, and the canonical renderings are deterministic.

use std::path::Path;

use proptest::prelude::*;

use syllnet_core::graph_io::{parse_graph, render_graph, GraphFileFormat};
use syllnet_core::network::NetworkVariant;
use syllnet_testutil::random_network;

const FORMATS: [GraphFileFormat; 3] =
    [GraphFileFormat::GraphML, GraphFileFormat::Gexf, GraphFileFormat::EdgeCsv];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn render_parse_is_identity(seed in 0u64..10_000, variant_index in 0usize..8) {
        let variant = NetworkVariant::ALL[variant_index];
        let network = random_network(seed, 16, variant);
        for format in FORMATS {
            let text = render_graph(&network, format);
            let parsed = parse_graph(&text, format, Path::new("mem")).unwrap();
            prop_assert_eq!(&parsed, &network, "format {:?}", format);
        }
    }

    #[test]
    fn rendering_is_deterministic(seed in 0u64..10_000, variant_index in 0usize..8) {
        let variant = NetworkVariant::ALL[variant_index];
        let network = random_network(seed, 16, variant);
        for format in FORMATS {
            let first = render_graph(&network, format);
            let second = render_graph(&network, format);
            prop_assert_eq!(first, second);
        }
    }
}
