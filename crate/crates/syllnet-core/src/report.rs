//! Report emission: summary tables, degree-distribution files and the
//! JSON renderings of metrics and comparisons.
//!
//! Numbers follow one precision style throughout: counts as integers,
//! average degree to two decimals, path length and clustering to three,
//! diameter as an integer (ensemble means keep one decimal when
//! fractional).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::baseline::ComparisonReport;
use crate::error::{Error, Result};
use crate::metrics::{DegreeDistribution, NetworkMetrics};
use crate::network::SyllableNetwork;

/// The four summary tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableSpec {
    /// Node and edge counts per network.
    Table1Counts,
    /// Full measures per network next to its ER ensemble.
    Table2Metrics,
    /// First-neighbour networks: directed vs undirected vs ER.
    Table3FnMetrics,
    /// Highest-degree syllables.
    Table4TopSyllables,
}

impl FromStr for TableSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table1" | "counts" => Ok(TableSpec::Table1Counts),
            "table2" | "metrics" => Ok(TableSpec::Table2Metrics),
            "table3" | "fn-metrics" => Ok(TableSpec::Table3FnMetrics),
            "table4" | "top-syllables" => Ok(TableSpec::Table4TopSyllables),
            other => Err(Error::Config(format!(
                "unknown table {other:?} (expected \"table1\" through \"table4\")"
            ))),
        }
    }
}

/// Everything a table emission might draw on; fill in what the chosen
/// table needs.
#[derive(Default)]
pub struct TableInputs<'a> {
    /// Named networks (table1).
    pub networks: Vec<(&'a str, &'a SyllableNetwork)>,
    /// Named real-vs-ER comparisons (table2).
    pub comparisons: Vec<(&'a str, &'a ComparisonReport)>,
    /// Measures of the directed first-neighbour network (table3).
    pub fn_directed: Option<&'a NetworkMetrics>,
    /// Comparison of the undirected first-neighbour network (table3).
    pub fn_undirected: Option<&'a ComparisonReport>,
    /// (syllable, degree) ranking (table4).
    pub top: Option<Vec<(String, u64)>>,
}

/// One table in both serializations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRendering {
    pub csv: String,
    pub text: String,
}

fn fmt_avg(x: f64) -> String {
    format!("{x:.2}")
}

fn fmt_long(x: f64) -> String {
    format!("{x:.3}")
}

fn fmt_diameter_mean(x: f64) -> String {
    if x.fract() == 0.0 {
        format!("{}", x as i64)
    } else {
        format!("{x:.1}")
    }
}

fn render_cells(cells: &[Vec<String>]) -> Result<TableRendering> {
    for row in cells {
        for cell in row {
            if cell.contains([',', '\n']) {
                return Err(Error::Config(format!(
                    "table cell {cell:?} contains a delimiter"
                )));
            }
        }
    }
    let csv = cells
        .iter()
        .map(|row| row.join(","))
        .collect::<Vec<_>>()
        .join("\n")
        + "\n";

    let columns = cells.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in cells {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut text = String::new();
    for row in cells {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            let pad = widths[i] - cell.chars().count();
            if i == 0 {
                // Label column left-aligned, number columns right-aligned.
                line.push_str(cell);
                line.push_str(&" ".repeat(pad));
            } else {
                line.push_str(&" ".repeat(pad));
                line.push_str(cell);
            }
        }
        text.push_str(line.trim_end());
        text.push('\n');
    }
    Ok(TableRendering { csv, text })
}

/// Renders one summary table. Errors with [`Error::MissingInput`]
/// naming the first absent input.
pub fn emit_table(spec: TableSpec, inputs: &TableInputs<'_>) -> Result<TableRendering> {
    let cells = match spec {
        TableSpec::Table1Counts => {
            if inputs.networks.is_empty() {
                return Err(Error::MissingInput("networks"));
            }
            let mut header = vec!["measure".to_owned()];
            let mut row_n = vec!["N".to_owned()];
            let mut row_k = vec!["K".to_owned()];
            for (name, network) in &inputs.networks {
                header.push((*name).to_owned());
                row_n.push(network.node_count().to_string());
                row_k.push(network.edge_count().to_string());
            }
            vec![header, row_n, row_k]
        }
        TableSpec::Table2Metrics => {
            if inputs.comparisons.is_empty() {
                return Err(Error::MissingInput("comparisons"));
            }
            let mut header = vec!["measure".to_owned()];
            let mut rows: Vec<Vec<String>> = ["N", "<k>", "K/N", "D", "L", "C"]
                .iter()
                .map(|label| vec![label.to_string()])
                .collect();
            for (name, comparison) in &inputs.comparisons {
                header.push((*name).to_owned());
                header.push(format!("ER({name})"));
                let real = &comparison.real;
                let er = &comparison.er_mean;
                let er_config = &comparison.er_config;
                rows[0].push(real.n.to_string());
                rows[0].push(er_config.n.to_string());
                rows[1].push(fmt_avg(real.avg_degree));
                rows[1].push(fmt_avg(er.avg_degree));
                rows[2].push(fmt_avg(real.k as f64 / real.n as f64));
                rows[2].push(fmt_avg(er_config.k as f64 / er_config.n as f64));
                rows[3].push(real.diameter.to_string());
                rows[3].push(fmt_diameter_mean(er.diameter));
                rows[4].push(fmt_long(real.avg_path_length));
                rows[4].push(fmt_long(er.avg_path_length));
                rows[5].push(fmt_long(real.avg_clustering));
                rows[5].push(fmt_long(er.avg_clustering));
            }
            let mut cells = vec![header];
            cells.extend(rows);
            cells
        }
        TableSpec::Table3FnMetrics => {
            let directed = inputs.fn_directed.ok_or(Error::MissingInput("fn_directed"))?;
            let comparison =
                inputs.fn_undirected.ok_or(Error::MissingInput("fn_undirected"))?;
            let undirected = &comparison.real;
            let er = &comparison.er_mean;
            let er_config = &comparison.er_config;
            vec![
                vec!["measure".into(), "directed".into(), "undirected".into(), "ER".into()],
                vec![
                    "N".into(),
                    directed.n.to_string(),
                    undirected.n.to_string(),
                    er_config.n.to_string(),
                ],
                vec![
                    "K".into(),
                    directed.k.to_string(),
                    undirected.k.to_string(),
                    er_config.k.to_string(),
                ],
                vec![
                    "D".into(),
                    directed.diameter.to_string(),
                    undirected.diameter.to_string(),
                    fmt_diameter_mean(er.diameter),
                ],
                vec![
                    "C".into(),
                    fmt_long(directed.avg_clustering),
                    fmt_long(undirected.avg_clustering),
                    fmt_long(er.avg_clustering),
                ],
            ]
        }
        TableSpec::Table4TopSyllables => {
            let top = inputs.top.as_ref().ok_or(Error::MissingInput("top"))?;
            let mut cells = vec![vec!["syllable".to_owned(), "degree".to_owned()]];
            for (syllable, degree) in top {
                cells.push(vec![syllable.clone(), degree.to_string()]);
            }
            cells
        }
    };
    render_cells(&cells)
}

/// The two degree-distribution files as strings: the histogram TSV and
/// its log-log companion with the straight-line fit footer.
pub fn render_degree_distribution(distribution: &DegreeDistribution) -> (String, String) {
    let mut histogram = String::from("degree\tcount\n");
    for (degree, count) in &distribution.histogram {
        let _ = writeln!(histogram, "{degree}\t{count}");
    }

    let mut loglog = String::from("ln_degree\tln_count\n");
    for (x, y) in &distribution.loglog_points {
        let _ = writeln!(loglog, "{x}\t{y}");
    }
    match &distribution.fit {
        Some(fit) => {
            let _ = writeln!(
                loglog,
                "# ols_slope={} r_squared={} (indicative only)",
                fit.slope, fit.r_squared
            );
        }
        None => {
            loglog.push_str("# ols_slope=na r_squared=na (indicative only)\n");
        }
    }
    (histogram, loglog)
}

/// Where the log-log companion of a distribution file lives:
/// "dist.tsv" pairs with "dist.loglog.tsv".
pub fn loglog_companion_path(path: &Path) -> PathBuf {
    match (path.file_stem(), path.extension()) {
        (Some(stem), Some(extension)) => path.with_file_name(format!(
            "{}.loglog.{}",
            stem.to_string_lossy(),
            extension.to_string_lossy()
        )),
        _ => {
            let mut name = path.as_os_str().to_owned();
            name.push(".loglog");
            PathBuf::from(name)
        }
    }
}

/// Writes the histogram TSV to `path` and the log-log points next to
/// it.
pub fn emit_degree_distribution(distribution: &DegreeDistribution, path: &Path) -> Result<()> {
    let (histogram, loglog) = render_degree_distribution(distribution);
    std::fs::write(path, histogram).map_err(|e| Error::io(path, e))?;
    let companion = loglog_companion_path(path);
    std::fs::write(&companion, loglog).map_err(|e| Error::io(companion.as_path(), e))
}

/// Pretty JSON with a trailing newline.
pub fn metrics_json(metrics: &NetworkMetrics) -> String {
    serde_json::to_string_pretty(metrics).expect("metrics serialize") + "\n"
}

/// Pretty JSON with a trailing newline.
pub fn comparison_json(report: &ComparisonReport) -> String {
    serde_json::to_string_pretty(report).expect("comparison serialize") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baseline::{compare_with_er, generate_er, ERConfig};
    use crate::metrics::{degree_distribution, top_k_by_degree, MetricsOptions};
    use crate::network::{Edge, Linking, NetworkVariant, SyllableNetwork};

    fn star(leaves: u32) -> SyllableNetwork {
        let mut labels = vec!["centre".to_owned()];
        let mut edges = Vec::new();
        for leaf in 1..=leaves {
            labels.push(format!("leaf{leaf}"));
            edges.push(Edge { source: 0, target: leaf, weight: 1 });
        }
        SyllableNetwork::from_edge_list(
            NetworkVariant::new(Linking::CoOccurrence, false, false),
            labels,
            edges,
            vec![],
        )
        .unwrap()
    }

    fn triangle() -> SyllableNetwork {
        SyllableNetwork::from_edge_list(
            NetworkVariant::new(Linking::CoOccurrence, false, false),
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                Edge { source: 0, target: 1, weight: 1 },
                Edge { source: 1, target: 2, weight: 1 },
                Edge { source: 0, target: 2, weight: 1 },
            ],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn table1_is_a_counts_grid() {
        let triangle = triangle();
        let star = star(4);
        let inputs = TableInputs {
            networks: vec![("co", &triangle), ("fn", &star)],
            ..TableInputs::default()
        };
        let rendered = emit_table(TableSpec::Table1Counts, &inputs).unwrap();
        assert_eq!(rendered.csv, "measure,co,fn\nN,3,5\nK,3,4\n");
        assert_eq!(rendered.text, "measure  co  fn\nN         3   5\nK         3   4\n");
    }

    #[test]
    fn table2_triangle_against_its_er_twin() {
        // The ER twin of a triangle is forced to be the same triangle.
        let triangle = triangle();
        let comparison = compare_with_er(&triangle, 1, 1, MetricsOptions::default()).unwrap();
        let inputs = TableInputs {
            comparisons: vec![("tri", &comparison)],
            ..TableInputs::default()
        };
        let rendered = emit_table(TableSpec::Table2Metrics, &inputs).unwrap();
        let lines: Vec<&str> = rendered.csv.lines().collect();
        assert_eq!(
            lines,
            [
                "measure,tri,ER(tri)",
                "N,3,3",
                "<k>,2.00,2.00",
                "K/N,1.00,1.00",
                "D,1,1",
                "L,1.000,1.000",
                "C,1.000,1.000",
            ]
        );
    }

    #[test]
    fn table3_shapes_directed_against_undirected() {
        let directed_net = SyllableNetwork::from_edge_list(
            NetworkVariant::new(Linking::FirstNeighbour, true, false),
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                Edge { source: 0, target: 1, weight: 1 },
                Edge { source: 1, target: 0, weight: 1 },
                Edge { source: 1, target: 2, weight: 1 },
            ],
            vec![],
        )
        .unwrap();
        let directed = NetworkMetrics::compute(&directed_net, MetricsOptions::default()).unwrap();
        let undirected_net = crate::netbuild::to_undirected_unweighted(&directed_net);
        let comparison =
            compare_with_er(&undirected_net, 2, 3, MetricsOptions::default()).unwrap();
        let inputs = TableInputs {
            fn_directed: Some(&directed),
            fn_undirected: Some(&comparison),
            ..TableInputs::default()
        };
        let rendered = emit_table(TableSpec::Table3FnMetrics, &inputs).unwrap();
        let lines: Vec<&str> = rendered.csv.lines().collect();
        assert_eq!(lines[0], "measure,directed,undirected,ER");
        assert_eq!(lines[1], "N,3,3,3");
        assert_eq!(lines[2], "K,3,2,2");
        assert!(lines[3].starts_with("D,2,2,"));
    }

    #[test]
    fn table4_lists_top_syllables() {
        let star = star(5);
        let inputs = TableInputs {
            top: Some(top_k_by_degree(&star, 3)),
            ..TableInputs::default()
        };
        let rendered = emit_table(TableSpec::Table4TopSyllables, &inputs).unwrap();
        assert_eq!(rendered.csv, "syllable,degree\ncentre,5\nleaf1,1\nleaf2,1\n");
    }

    #[test]
    fn missing_inputs_are_named() {
        let inputs = TableInputs::default();
        for (spec, field) in [
            (TableSpec::Table1Counts, "networks"),
            (TableSpec::Table2Metrics, "comparisons"),
            (TableSpec::Table3FnMetrics, "fn_directed"),
            (TableSpec::Table4TopSyllables, "top"),
        ] {
            match emit_table(spec, &inputs).unwrap_err() {
                Error::MissingInput(name) => assert_eq!(name, field),
                other => panic!("expected MissingInput, got {other:?}"),
            }
        }
    }

    #[test]
    fn table_names_with_delimiters_are_rejected() {
        let triangle = triangle();
        let inputs = TableInputs {
            networks: vec![("a,b", &triangle)],
            ..TableInputs::default()
        };
        assert!(matches!(
            emit_table(TableSpec::Table1Counts, &inputs),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn table_spec_parses() {
        assert_eq!("table1".parse::<TableSpec>().unwrap(), TableSpec::Table1Counts);
        assert_eq!("top-syllables".parse::<TableSpec>().unwrap(), TableSpec::Table4TopSyllables);
        assert!("table9".parse::<TableSpec>().is_err());
    }

    #[test]
    fn degree_distribution_files() {
        let (histogram, loglog) = render_degree_distribution(&degree_distribution(&triangle()));
        assert_eq!(histogram, "degree\tcount\n2\t3\n");
        assert!(loglog.starts_with("ln_degree\tln_count\n"));
        assert!(loglog.contains("# ols_slope=na r_squared=na (indicative only)"));

        let (histogram, loglog) = render_degree_distribution(&degree_distribution(&star(4)));
        assert_eq!(histogram, "degree\tcount\n1\t4\n4\t1\n");
        assert!(loglog.contains("# ols_slope="));
        assert!(!loglog.contains("na"));
    }

    #[test]
    fn distribution_files_reparse_to_n() {
        let dir = tempfile::tempdir().unwrap();
        let network = generate_er(&ERConfig { n: 40, k: 90, samples: 1, seed: 5 }, 0).unwrap();
        let path = dir.path().join("dist.tsv");
        emit_degree_distribution(&degree_distribution(&network), &path).unwrap();

        let text = std::fs::read_to_string(&path).unwrap();
        let total: u64 = text
            .lines()
            .skip(1)
            .map(|line| line.split('\t').nth(1).unwrap().parse::<u64>().unwrap())
            .sum();
        assert_eq!(total as usize, network.node_count());
        assert!(dir.path().join("dist.loglog.tsv").is_file());
    }

    #[test]
    fn companion_path_insertion() {
        assert_eq!(
            loglog_companion_path(Path::new("out/dist.tsv")),
            PathBuf::from("out/dist.loglog.tsv")
        );
        assert_eq!(loglog_companion_path(Path::new("dist")), PathBuf::from("dist.loglog"));
    }

    #[test]
    fn json_renderings_end_with_newline() {
        let triangle = triangle();
        let metrics = NetworkMetrics::compute(&triangle, MetricsOptions::default()).unwrap();
        assert!(metrics_json(&metrics).ends_with("}\n"));
        let comparison = compare_with_er(&triangle, 1, 1, MetricsOptions::default()).unwrap();
        assert!(comparison_json(&comparison).ends_with("}\n"));
    }
}
