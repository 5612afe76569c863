//! Network serialization: GraphML 1.0, GEXF 1.2 and edge CSV.
//!
//! Node identifiers in all three formats are the syllable surfaces.
//! Every writer emits deterministic bytes (nodes and edges already
//! arrive in canonical order) and records the full variant, so that
//! import(export(net)) == net holds including directedness,
//! weightedness and provenance. Edge CSV keeps its pinned
//! "source,target,weight" header; variant metadata travels in a leading
//! `#` comment, isolated nodes as rows with empty target and weight.
//! Plain headers without the comment import too, defaulting to
//! undirected and inferring weightedness from the weights present.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use quick_xml::escape::escape;
use quick_xml::events::{BytesStart, Event};
use quick_xml::Reader;

use crate::error::{Error, Result};
use crate::network::{Edge, Linking, NetworkVariant, SyllableNetwork};

/// Supported graph file formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFileFormat {
    GraphML,
    Gexf,
    EdgeCsv,
}

impl GraphFileFormat {
    /// Guesses the format from a file extension.
    pub fn from_path(path: &Path) -> Option<GraphFileFormat> {
        match path.extension()?.to_str()? {
            "graphml" | "xml" => Some(GraphFileFormat::GraphML),
            "gexf" => Some(GraphFileFormat::Gexf),
            "csv" => Some(GraphFileFormat::EdgeCsv),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GraphFileFormat::GraphML => "graphml",
            GraphFileFormat::Gexf => "gexf",
            GraphFileFormat::EdgeCsv => "csv",
        }
    }
}

impl FromStr for GraphFileFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graphml" => Ok(GraphFileFormat::GraphML),
            "gexf" => Ok(GraphFileFormat::Gexf),
            "csv" | "edge_csv" => Ok(GraphFileFormat::EdgeCsv),
            other => Err(Error::Config(format!(
                "unknown graph format {other:?} (expected \"graphml\", \"gexf\" or \"csv\")"
            ))),
        }
    }
}

/// Renders a network in the given format.
pub fn render_graph(network: &SyllableNetwork, format: GraphFileFormat) -> String {
    match format {
        GraphFileFormat::GraphML => render_graphml(network),
        GraphFileFormat::Gexf => render_gexf(network),
        GraphFileFormat::EdgeCsv => render_edge_csv(network),
    }
}

/// Writes a network to `path`.
pub fn export_graph(
    network: &SyllableNetwork,
    format: GraphFileFormat,
    path: &Path,
) -> Result<()> {
    fs::write(path, render_graph(network, format)).map_err(|e| Error::io(path, e))
}

/// Reads a network from `path`.
pub fn import_graph(path: &Path, format: GraphFileFormat) -> Result<SyllableNetwork> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_graph(&text, format, path)
}

/// Parses serialized network text; `path` is only used in error
/// messages.
pub fn parse_graph(
    text: &str,
    format: GraphFileFormat,
    path: &Path,
) -> Result<SyllableNetwork> {
    if text.trim().is_empty() {
        return Err(parse_error(path, "file", "empty input"));
    }
    match format {
        GraphFileFormat::GraphML => parse_graphml(text, path),
        GraphFileFormat::Gexf => parse_gexf(text, path),
        GraphFileFormat::EdgeCsv => parse_edge_csv(text, path),
    }
}

fn parse_error(path: &Path, context: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        context: context.into(),
        message: message.into(),
    }
}

fn line_of(text: &str, byte_position: usize) -> usize {
    let end = byte_position.min(text.len());
    text.as_bytes()[..end].iter().filter(|&&b| b == b'\n').count() + 1
}

fn join_provenance(network: &SyllableNetwork) -> String {
    network.provenance().join(";")
}

fn split_provenance(text: &str) -> Vec<String> {
    text.split(';')
        .filter(|part| !part.is_empty())
        .map(|part| part.to_owned())
        .collect()
}

// --- GraphML ---------------------------------------------------------

fn render_graphml(network: &SyllableNetwork) -> String {
    let variant = network.variant();
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str("<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n");
    out.push_str("  <key id=\"w\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n");
    out.push_str("  <key id=\"lk\" for=\"graph\" attr.name=\"linking\" attr.type=\"string\"/>\n");
    out.push_str("  <key id=\"wt\" for=\"graph\" attr.name=\"weighted\" attr.type=\"string\"/>\n");
    out.push_str("  <key id=\"pv\" for=\"graph\" attr.name=\"provenance\" attr.type=\"string\"/>\n");
    let _ = writeln!(
        out,
        "  <graph id=\"G\" edgedefault=\"{}\">",
        if variant.directed { "directed" } else { "undirected" }
    );
    let _ = writeln!(out, "    <data key=\"lk\">{}</data>", variant.linking);
    let _ = writeln!(out, "    <data key=\"wt\">{}</data>", variant.weighted);
    let _ = writeln!(out, "    <data key=\"pv\">{}</data>", escape(&join_provenance(network)));
    for label in network.labels() {
        let _ = writeln!(out, "    <node id=\"{}\"/>", escape(label));
    }
    for edge in network.edges() {
        let source = escape(network.label(edge.source));
        let target = escape(network.label(edge.target));
        if edge.weight == 1 {
            let _ = writeln!(out, "    <edge source=\"{source}\" target=\"{target}\"/>");
        } else {
            let _ = writeln!(
                out,
                "    <edge source=\"{source}\" target=\"{target}\"><data key=\"w\">{}</data></edge>",
                edge.weight
            );
        }
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

/// Shared accumulator for the two XML formats.
#[derive(Default)]
struct ParsedGraph {
    directed: Option<bool>,
    linking: Option<Linking>,
    weighted: Option<bool>,
    provenance: Vec<String>,
    labels: Vec<String>,
    edges: Vec<(String, String, u64)>,
}

impl ParsedGraph {
    fn into_network(self, path: &Path) -> Result<SyllableNetwork> {
        let directed = self
            .directed
            .ok_or_else(|| parse_error(path, "graph", "no graph element found"))?;
        // Files without explicit metadata: weighted when any weight
        // differs from 1.
        let weighted = self
            .weighted
            .unwrap_or_else(|| self.edges.iter().any(|&(_, _, weight)| weight != 1));
        let variant = NetworkVariant {
            linking: self.linking.unwrap_or(Linking::CoOccurrence),
            directed,
            weighted,
        };

        let mut labels = self.labels;
        let mut index = std::collections::HashMap::new();
        for (id, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), id as u32).is_some() {
                return Err(parse_error(path, "node", format!("duplicate node id {label:?}")));
            }
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for (source, target, weight) in self.edges {
            let mut resolve = |label: String| -> u32 {
                *index.entry(label.clone()).or_insert_with(|| {
                    labels.push(label);
                    (labels.len() - 1) as u32
                })
            };
            let source = resolve(source);
            let target = resolve(target);
            edges.push(Edge { source, target, weight });
        }
        SyllableNetwork::from_edge_list(variant, labels, edges, self.provenance)
            .map_err(|e| parse_error(path, "validation", e.to_string()))
    }
}

fn xml_attr(
    element: &BytesStart<'_>,
    name: &str,
    text: &str,
    position: usize,
    path: &Path,
) -> Result<String> {
    let context = || {
        format!(
            "line {}, element {}",
            line_of(text, position),
            String::from_utf8_lossy(element.name().as_ref())
        )
    };
    let attribute = element
        .try_get_attribute(name)
        .map_err(|e| parse_error(path, context(), e.to_string()))?
        .ok_or_else(|| parse_error(path, context(), format!("missing attribute {name:?}")))?;
    let value = attribute
        .unescape_value()
        .map_err(|e| parse_error(path, context(), e.to_string()))?;
    Ok(value.into_owned())
}

fn parse_graphml(text: &str, path: &Path) -> Result<SyllableNetwork> {
    let mut reader = Reader::from_str(text);
    reader.trim_text(true);

    let mut graph = ParsedGraph::default();
    // key id -> attr.name, so data elements resolve robustly.
    let mut key_names: std::collections::HashMap<String, String> = std::collections::HashMap::new();
    let mut pending_edge: Option<(String, String, u64)> = None;
    let mut pending_data_key: Option<String> = None;

    loop {
        let event = reader.read_event();
        // Position after the event (or failed read): its closing line.
        let position = reader.buffer_position();
        let xml_err = |e: quick_xml::Error| {
            parse_error(path, format!("line {}", line_of(text, position)), e.to_string())
        };
        let event = event.map_err(xml_err)?;
        match event {
            Event::Start(ref element) | Event::Empty(ref element) => {
                let is_empty = matches!(event, Event::Empty(_));
                match element.name().as_ref() {
                    b"key" => {
                        let id = xml_attr(element, "id", text, position, path)?;
                        let name = xml_attr(element, "attr.name", text, position, path)?;
                        key_names.insert(id, name);
                    }
                    b"graph" => {
                        let default = xml_attr(element, "edgedefault", text, position, path)?;
                        graph.directed = Some(match default.as_str() {
                            "directed" => true,
                            "undirected" => false,
                            other => {
                                return Err(parse_error(
                                    path,
                                    format!("line {}, element graph", line_of(text, position)),
                                    format!("unknown edgedefault {other:?}"),
                                ))
                            }
                        });
                    }
                    b"node" => {
                        graph.labels.push(xml_attr(element, "id", text, position, path)?);
                    }
                    b"edge" => {
                        let source = xml_attr(element, "source", text, position, path)?;
                        let target = xml_attr(element, "target", text, position, path)?;
                        if is_empty {
                            graph.edges.push((source, target, 1));
                        } else {
                            pending_edge = Some((source, target, 1));
                        }
                    }
                    b"data" if !is_empty => {
                        let key = xml_attr(element, "key", text, position, path)?;
                        pending_data_key =
                            Some(key_names.get(&key).cloned().unwrap_or(key));
                    }
                    _ => {}
                }
            }
            Event::Text(ref content) => {
                if let Some(key) = pending_data_key.as_deref() {
                    let value = content
                        .unescape()
                        .map_err(xml_err)?
                        .into_owned();
                    match (key, pending_edge.as_mut()) {
                        ("weight", Some(edge)) => {
                            edge.2 = value.parse().map_err(|_| {
                                parse_error(
                                    path,
                                    format!("line {}, element data", line_of(text, position)),
                                    format!("weight {value:?} is not a non-negative integer"),
                                )
                            })?;
                        }
                        ("linking", None) => {
                            graph.linking = Some(value.parse().map_err(|e: Error| {
                                parse_error(
                                    path,
                                    format!("line {}, element data", line_of(text, position)),
                                    e.to_string(),
                                )
                            })?);
                        }
                        ("weighted", None) => graph.weighted = Some(value == "true"),
                        ("provenance", None) => graph.provenance = split_provenance(&value),
                        _ => {}
                    }
                }
            }
            Event::End(ref element) => match element.name().as_ref() {
                b"edge" => {
                    if let Some(edge) = pending_edge.take() {
                        graph.edges.push(edge);
                    }
                }
                b"data" => pending_data_key = None,
                _ => {}
            },
            Event::Eof => break,
            _ => {}
        }
    }
    graph.into_network(path)
}

// --- GEXF ------------------------------------------------------------

fn render_gexf(network: &SyllableNetwork) -> String {
    let variant = network.variant();
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str("<gexf xmlns=\"http://www.gexf.net/1.2draft\" version=\"1.2\">\n");
    out.push_str("  <meta>\n");
    let _ = writeln!(
        out,
        "    <keywords>linking={};weighted={}</keywords>",
        variant.linking, variant.weighted
    );
    let _ = writeln!(out, "    <description>{}</description>", escape(&join_provenance(network)));
    out.push_str("  </meta>\n");
    let _ = writeln!(
        out,
        "  <graph defaultedgetype=\"{}\">",
        if variant.directed { "directed" } else { "undirected" }
    );
    out.push_str("    <nodes>\n");
    for label in network.labels() {
        let escaped = escape(label);
        let _ = writeln!(out, "      <node id=\"{escaped}\" label=\"{escaped}\"/>");
    }
    out.push_str("    </nodes>\n    <edges>\n");
    for (id, edge) in network.edges().iter().enumerate() {
        let _ = writeln!(
            out,
            "      <edge id=\"{id}\" source=\"{}\" target=\"{}\" weight=\"{}\"/>",
            escape(network.label(edge.source)),
            escape(network.label(edge.target)),
            edge.weight
        );
    }
    out.push_str("    </edges>\n  </graph>\n</gexf>\n");
    out
}

fn parse_gexf(text: &str, path: &Path) -> Result<SyllableNetwork> {
    let mut reader = Reader::from_str(text);
    reader.trim_text(true);

    let mut graph = ParsedGraph::default();
    let mut in_keywords = false;
    let mut in_description = false;

    loop {
        let event = reader.read_event();
        let position = reader.buffer_position();
        let xml_err = |e: quick_xml::Error| {
            parse_error(path, format!("line {}", line_of(text, position)), e.to_string())
        };
        let event = event.map_err(xml_err)?;
        match event {
            Event::Start(ref element) | Event::Empty(ref element) => {
                match element.name().as_ref() {
                    b"graph" => {
                        let kind = xml_attr(element, "defaultedgetype", text, position, path)?;
                        graph.directed = Some(match kind.as_str() {
                            "directed" => true,
                            "undirected" => false,
                            other => {
                                return Err(parse_error(
                                    path,
                                    format!("line {}, element graph", line_of(text, position)),
                                    format!("unknown defaultedgetype {other:?}"),
                                ))
                            }
                        });
                    }
                    b"node" => {
                        graph.labels.push(xml_attr(element, "id", text, position, path)?);
                    }
                    b"edge" => {
                        let source = xml_attr(element, "source", text, position, path)?;
                        let target = xml_attr(element, "target", text, position, path)?;
                        let weight = match element
                            .try_get_attribute("weight")
                            .map_err(|e| {
                                parse_error(
                                    path,
                                    format!("line {}, element edge", line_of(text, position)),
                                    e.to_string(),
                                )
                            })? {
                            Some(attr) => {
                                let value = attr.unescape_value().map_err(xml_err)?;
                                value.parse().map_err(|_| {
                                    parse_error(
                                        path,
                                        format!("line {}, element edge", line_of(text, position)),
                                        format!("weight {value:?} is not a non-negative integer"),
                                    )
                                })?
                            }
                            None => 1,
                        };
                        graph.edges.push((source, target, weight));
                    }
                    b"keywords" => in_keywords = true,
                    b"description" => in_description = true,
                    _ => {}
                }
            }
            Event::Text(ref content) => {
                let value = content.unescape().map_err(xml_err)?;
                if in_keywords {
                    for pair in value.split(';') {
                        match pair.split_once('=') {
                            Some(("linking", linking)) => {
                                graph.linking = Some(linking.parse().map_err(|e: Error| {
                                    parse_error(
                                        path,
                                        format!("line {}, element keywords", line_of(text, position)),
                                        e.to_string(),
                                    )
                                })?);
                            }
                            Some(("weighted", flag)) => graph.weighted = Some(flag == "true"),
                            _ => {}
                        }
                    }
                } else if in_description {
                    graph.provenance = split_provenance(&value);
                }
            }
            Event::End(ref element) => match element.name().as_ref() {
                b"keywords" => in_keywords = false,
                b"description" => in_description = false,
                _ => {}
            },
            Event::Eof => break,
            _ => {}
        }
    }
    graph.into_network(path)
}

// --- edge CSV --------------------------------------------------------

const CSV_HEADER: &str = "source,target,weight";

fn render_edge_csv(network: &SyllableNetwork) -> String {
    let mut out = String::new();
    let provenance = join_provenance(network);
    if provenance.is_empty() {
        let _ = writeln!(out, "# variant={}", network.variant());
    } else {
        let _ = writeln!(out, "# variant={} provenance={provenance}", network.variant());
    }
    out.push_str(CSV_HEADER);
    out.push('\n');

    let mut has_edge = vec![false; network.node_count()];
    for edge in network.edges() {
        has_edge[edge.source as usize] = true;
        has_edge[edge.target as usize] = true;
        let source = network.label(edge.source);
        let target = network.label(edge.target);
        for label in [source, target] {
            assert!(
                !label.contains([',', '"', '\n']),
                "node label {label:?} cannot be written as CSV"
            );
        }
        let _ = writeln!(out, "{source},{target},{}", edge.weight);
    }
    // Isolated nodes round-trip as rows with empty target and weight.
    for (id, connected) in has_edge.iter().enumerate() {
        if !connected {
            let label = network.label(id as u32);
            assert!(
                !label.contains([',', '"', '\n']),
                "node label {label:?} cannot be written as CSV"
            );
            let _ = writeln!(out, "{label},,");
        }
    }
    out
}

fn parse_edge_csv(text: &str, path: &Path) -> Result<SyllableNetwork> {
    let mut lines = text.lines().enumerate().peekable();

    let mut variant = None;
    let mut provenance = Vec::new();
    if let Some(&(_, line)) = lines.peek() {
        if let Some(rest) = line.strip_prefix("# variant=") {
            lines.next();
            let (variant_text, provenance_text) = match rest.split_once(" provenance=") {
                Some((v, p)) => (v, Some(p)),
                None => (rest, None),
            };
            variant = Some(variant_text.parse::<NetworkVariant>().map_err(|e| {
                parse_error(path, "line 1", e.to_string())
            })?);
            if let Some(p) = provenance_text {
                provenance = split_provenance(p);
            }
        }
    }

    match lines.next() {
        Some((_, line)) if line == CSV_HEADER => {}
        Some((index, line)) => {
            return Err(parse_error(
                path,
                format!("line {}", index + 1),
                format!("expected header {CSV_HEADER:?}, found {line:?}"),
            ))
        }
        None => return Err(parse_error(path, "file", "missing header")),
    }

    let mut labels: Vec<String> = Vec::new();
    let mut index_map: std::collections::HashMap<String, u32> = std::collections::HashMap::new();
    let mut intern = |label: &str, labels: &mut Vec<String>| -> u32 {
        if let Some(&id) = index_map.get(label) {
            return id;
        }
        let id = labels.len() as u32;
        labels.push(label.to_owned());
        index_map.insert(label.to_owned(), id);
        id
    };

    let mut edges = Vec::new();
    for (index, line) in lines {
        if line.is_empty() {
            continue;
        }
        let context = || format!("line {}", index + 1);
        let mut fields = line.split(',');
        let (source, target, weight) =
            match (fields.next(), fields.next(), fields.next(), fields.next()) {
                (Some(s), Some(t), Some(w), None) => (s, t, w),
                _ => {
                    return Err(parse_error(
                        path,
                        context(),
                        format!("expected 3 comma-separated fields, found {line:?}"),
                    ))
                }
            };
        if source.is_empty() {
            return Err(parse_error(path, context(), "empty source field"));
        }
        if target.is_empty() {
            if !weight.is_empty() {
                return Err(parse_error(
                    path,
                    context(),
                    "isolated-node row must leave the weight empty",
                ));
            }
            intern(source, &mut labels);
            continue;
        }
        let weight: u64 = weight.parse().map_err(|_| {
            parse_error(path, context(), format!("weight {weight:?} is not a non-negative integer"))
        })?;
        let source = intern(source, &mut labels);
        let target = intern(target, &mut labels);
        edges.push(Edge { source, target, weight });
    }

    let variant = variant.unwrap_or_else(|| NetworkVariant {
        linking: Linking::CoOccurrence,
        directed: false,
        weighted: edges.iter().any(|e| e.weight != 1),
    });
    SyllableNetwork::from_edge_list(variant, labels, edges, provenance)
        .map_err(|e| parse_error(path, "validation", e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netbuild::build_network;
    use crate::syllabifier::{syllabify, RuleSet};
    use crate::corpus::Token;

    fn sample_network(variant: NetworkVariant) -> SyllableNetwork {
        let rules = RuleSet::croatian();
        let words: Vec<_> = "matematika mama grad telefon"
            .split_whitespace()
            .map(|surface| {
                let token = Token { surface: surface.into(), doc_id: "doc".into() };
                syllabify(&token, &rules).unwrap()
            })
            .collect();
        build_network(&words, variant)
    }

    fn dummy_path() -> &'static Path {
        Path::new("test-input")
    }

    #[test]
    fn every_format_round_trips_every_variant() {
        for variant in NetworkVariant::ALL {
            let network = sample_network(variant);
            for format in
                [GraphFileFormat::GraphML, GraphFileFormat::Gexf, GraphFileFormat::EdgeCsv]
            {
                let rendered = render_graph(&network, format);
                let back = parse_graph(&rendered, format, dummy_path())
                    .unwrap_or_else(|e| panic!("{variant} via {format:?}: {e}"));
                assert_eq!(back, network, "{variant} via {format:?}");
            }
        }
    }

    #[test]
    fn triangle_csv_has_three_data_rows() {
        let network = SyllableNetwork::from_edge_list(
            NetworkVariant::new(Linking::CoOccurrence, false, false),
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                Edge { source: 0, target: 1, weight: 1 },
                Edge { source: 1, target: 2, weight: 1 },
                Edge { source: 0, target: 2, weight: 1 },
            ],
            vec![],
        )
        .unwrap();
        let rendered = render_edge_csv(&network);
        let lines: Vec<&str> = rendered.lines().collect();
        assert_eq!(
            lines,
            ["# variant=co_occurrence/undirected/unweighted", CSV_HEADER, "a,b,1", "a,c,1", "b,c,1"]
        );
    }

    #[test]
    fn plain_header_csv_imports_with_defaults() {
        let text = "source,target,weight\na,b,1\nb,c,1\na,c,1\n";
        let network = parse_edge_csv(text, dummy_path()).unwrap();
        assert_eq!(network.node_count(), 3);
        assert_eq!(network.edge_count(), 3);
        assert!(!network.variant().directed);
        assert!(!network.variant().weighted);

        let weighted = parse_edge_csv("source,target,weight\na,b,5\n", dummy_path()).unwrap();
        assert!(weighted.variant().weighted);
    }

    #[test]
    fn isolated_nodes_survive_csv() {
        let network = sample_network(NetworkVariant::new(Linking::CoOccurrence, false, true));
        assert!(network.node_id("grad").is_some());
        let rendered = render_edge_csv(&network);
        assert!(rendered.contains("grad,,\n"));
        let back = parse_edge_csv(&rendered, dummy_path()).unwrap();
        assert_eq!(back, network);
    }

    #[test]
    fn empty_network_round_trips() {
        let empty = build_network(&[], NetworkVariant::new(Linking::FirstNeighbour, true, true));
        for format in [GraphFileFormat::GraphML, GraphFileFormat::Gexf, GraphFileFormat::EdgeCsv] {
            let rendered = render_graph(&empty, format);
            let back = parse_graph(&rendered, format, dummy_path()).unwrap();
            assert_eq!(back.node_count(), 0);
            assert_eq!(back.variant(), empty.variant(), "{format:?}");
        }
    }

    #[test]
    fn empty_input_is_a_parse_error() {
        for format in [GraphFileFormat::GraphML, GraphFileFormat::Gexf, GraphFileFormat::EdgeCsv] {
            assert!(matches!(
                parse_graph("", format, dummy_path()),
                Err(Error::Parse { .. })
            ));
        }
    }

    #[test]
    fn malformed_xml_reports_line_context() {
        let garbled = "<?xml version=\"1.0\"?>\n<graphml>\n  <graph edgedefault=\"sideways\">\n";
        let err = parse_graphml(garbled, dummy_path()).unwrap_err();
        match err {
            Error::Parse { context, message, .. } => {
                assert!(context.contains("line 3"), "context {context:?}");
                assert!(message.contains("sideways"), "message {message:?}");
            }
            other => panic!("expected Parse, got {other:?}"),
        }
    }

    #[test]
    fn malformed_csv_reports_line_context() {
        let text = "source,target,weight\na,b,1\na,b\n";
        let err = parse_edge_csv(text, dummy_path()).unwrap_err();
        match err {
            Error::Parse { context, .. } => assert!(context.contains("line 3")),
            other => panic!("expected Parse, got {other:?}"),
        }
        let bad_weight = "source,target,weight\na,b,heavy\n";
        assert!(parse_edge_csv(bad_weight, dummy_path()).is_err());
    }

    #[test]
    fn duplicate_edges_rejected_on_import() {
        let text = "source,target,weight\na,b,1\nb,a,1\n";
        let err = parse_edge_csv(text, dummy_path()).unwrap_err();
        match err {
            Error::Parse { context, .. } => assert_eq!(context, "validation"),
            other => panic!("expected Parse, got {other:?}"),
        }
    }

    #[test]
    fn format_guessing_from_extensions() {
        assert_eq!(
            GraphFileFormat::from_path(Path::new("x/net.graphml")),
            Some(GraphFileFormat::GraphML)
        );
        assert_eq!(GraphFileFormat::from_path(Path::new("net.gexf")), Some(GraphFileFormat::Gexf));
        assert_eq!(GraphFileFormat::from_path(Path::new("net.csv")), Some(GraphFileFormat::EdgeCsv));
        assert_eq!(GraphFileFormat::from_path(Path::new("net.dot")), None);
        assert_eq!(GraphFileFormat::from_path(Path::new("net")), None);
    }

    #[test]
    fn graphml_weight_data_only_when_weighted() {
        let weighted = sample_network(NetworkVariant::new(Linking::FirstNeighbour, false, true));
        let rendered = render_graphml(&weighted);
        // ma-te occurs twice in "matematika" (ma-te, te-ma collapse).
        assert!(rendered.contains("<data key=\"w\">2</data>"), "{rendered}");

        let unweighted = sample_network(NetworkVariant::new(Linking::FirstNeighbour, false, false));
        let rendered = render_graphml(&unweighted);
        assert!(!rendered.contains("key=\"w\">"), "{rendered}");
    }

    #[test]
    fn rendering_is_deterministic() {
        let network = sample_network(NetworkVariant::new(Linking::CoOccurrence, true, true));
        for format in [GraphFileFormat::GraphML, GraphFileFormat::Gexf, GraphFileFormat::EdgeCsv] {
            assert_eq!(render_graph(&network, format), render_graph(&network, format));
        }
    }

    #[test]
    fn export_and_import_through_files() {
        let dir = tempfile::tempdir().unwrap();
        let network = sample_network(NetworkVariant::new(Linking::CoOccurrence, false, true));
        let path = dir.path().join("net.gexf");
        export_graph(&network, GraphFileFormat::Gexf, &path).unwrap();
        let back = import_graph(&path, GraphFileFormat::Gexf).unwrap();
        assert_eq!(back, network);

        let missing = import_graph(&dir.path().join("absent.gexf"), GraphFileFormat::Gexf);
        assert!(matches!(missing, Err(Error::Io { .. })));
    }
}
