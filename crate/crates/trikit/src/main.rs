//! `trikit`: exact combinatorics of triangular partitions.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use trikit::json as render;
use trikit::{dot, verify};
use trikit_core::{
    bizley_count, count_dyck, delta_enumerator, dominance_sorted, enumerate_triangular,
    expand_schur, hasse_graph, is_integral, join, meet, parking_bizley_count,
    parking_bizley_variant, parking_count, parking_enumerator, q_area_enumerator, qt_enumerator,
    Partition,
};

#[derive(Parser)]
#[command(
    name = "trikit",
    version,
    about = "Exact combinatorics of triangular partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format (default json; dot applies to `poset hasse` only,
    /// verify prints plain text unless json is requested).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a partition: triangularity, slope interval, integrality,
    /// and a cutting line when one exists.
    Classify {
        /// Comma-separated parts; "-" for the empty partition.
        partition: String,
    },
    /// List the triangular partitions of one size, ascending.
    List {
        #[arg(long)]
        size: u32,
        /// Keep only partitions not cut out by any integral line.
        #[arg(long)]
        non_integral: bool,
    },
    /// Containment-order structure.
    Poset {
        #[command(subcommand)]
        command: PosetCommand,
    },
    /// Lattice-path enumeration.
    Dyck {
        #[command(subcommand)]
        command: DyckCommand,
    },
    /// Parking-function enumeration.
    Park {
        #[command(subcommand)]
        command: ParkCommand,
    },
    /// Run oracle cross-check suites and report findings.
    Verify {
        /// Suite: all, geometry, poset, dyck, schur, or park.
        #[arg(default_value = "all")]
        suite: String,
        /// Override the headline sweep bound of each criterion.
        #[arg(long)]
        max_size: Option<u32>,
        /// Write the findings report as JSON to this file.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Also run the non-gating large-scale statistics.
        #[arg(long)]
        extended: bool,
    },
}

#[derive(Subcommand)]
enum PosetCommand {
    /// The Hasse diagram of all triangular partitions up to a size.
    Hasse {
        #[arg(long, default_value_t = 6)]
        max_size: u32,
    },
    /// Smallest triangular partition containing both arguments.
    Join { a: String, b: String },
    /// Largest triangular partition contained in both arguments.
    Meet { a: String, b: String },
    /// The triangular partitions of one size in dominance order.
    Dominance {
        #[arg(long)]
        size: u32,
    },
}

#[derive(Subcommand)]
enum DyckCommand {
    /// Number of paths (subpartitions) of a triangular partition.
    Count { partition: String },
    /// Area enumerator A(q).
    Qpoly { partition: String },
    /// Area/sim enumerator A(q,t).
    Qtpoly { partition: String },
    /// Two-row Schur expansion of A(q,t).
    Schur { partition: String },
    /// Path count of the (m,n) grid line by the cycle-index formula.
    Bizley {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// Descent-sum enumerator for n rows and k chosen positions.
    Delta { n: u32, k: u32 },
}

#[derive(Subcommand)]
enum ParkCommand {
    /// Number of parking functions below a partition at a height.
    Count {
        partition: String,
        #[arg(long)]
        height: u32,
    },
    /// Parking enumerator in the elementary basis.
    Enumerator {
        partition: String,
        #[arg(long)]
        height: u32,
    },
    /// Parking count of the (m,n) grid line by the counting formula,
    /// alongside the alternative printed normalization.
    Bizley {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = u8::from(e.use_stderr());
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cli: Cli) -> Result<u8, String> {
    let format = cli.format.unwrap_or(Format::Json);
    let out = &cli.out;
    match cli.command {
        Command::Classify { partition } => {
            let p = parse_partition(&partition)?;
            let value = render::classify_value(&p);
            emit(out, &data_payload(&value, format, "classify")?)?;
        }
        Command::List { size, non_integral } => {
            let items: Vec<Partition> = enumerate_triangular(size)
                .into_iter()
                .filter(|p| !non_integral || is_integral(p).is_none())
                .collect();
            emit(out, &partition_list_payload(&items, format, "list")?)?;
        }
        Command::Poset { command } => dispatch_poset(command, format, out)?,
        Command::Dyck { command } => dispatch_dyck(command, format, out)?,
        Command::Park { command } => dispatch_park(command, format, out)?,
        Command::Verify {
            suite,
            max_size,
            report,
            extended,
        } => return run_verify(&suite, max_size, report, extended, cli.format, out),
    }
    Ok(0)
}

fn dispatch_poset(
    command: PosetCommand,
    format: Format,
    out: &Option<PathBuf>,
) -> Result<(), String> {
    match command {
        PosetCommand::Hasse { max_size } => {
            let g = hasse_graph(max_size);
            let payload = match format {
                Format::Json => render::hasse_value(&g, max_size).to_string(),
                Format::Dot => dot::hasse_dot(&g),
                Format::Csv => {
                    let mut rows = Vec::new();
                    for (id, node) in g.nodes.iter().enumerate() {
                        let (px, py) = dot::embed(&node.x, &node.y);
                        rows.push(vec![
                            "node".to_string(),
                            id.to_string(),
                            node.partition.to_string(),
                            node.partition.size().to_string(),
                            node.x.to_string(),
                            node.y.to_string(),
                            format!("{px:.6}"),
                            format!("{py:.6}"),
                        ]);
                    }
                    for &(l, u) in &g.edges {
                        rows.push(vec!["edge".to_string(), l.to_string(), u.to_string()]);
                    }
                    csv_rows(rows)
                }
            };
            emit(out, &payload)
        }
        PosetCommand::Join { a, b } => {
            let r =
                join(&parse_partition(&a)?, &parse_partition(&b)?).map_err(|e| e.to_string())?;
            emit(out, &scalar_string_payload(&r.to_string(), format, "join")?)
        }
        PosetCommand::Meet { a, b } => {
            let r =
                meet(&parse_partition(&a)?, &parse_partition(&b)?).map_err(|e| e.to_string())?;
            emit(out, &scalar_string_payload(&r.to_string(), format, "meet")?)
        }
        PosetCommand::Dominance { size } => {
            let items = dominance_sorted(&enumerate_triangular(size));
            emit(out, &partition_list_payload(&items, format, "dominance")?)
        }
    }
}

fn dispatch_dyck(
    command: DyckCommand,
    format: Format,
    out: &Option<PathBuf>,
) -> Result<(), String> {
    match command {
        DyckCommand::Count { partition } => {
            let p = parse_partition(&partition)?;
            let n = count_dyck(&p).map_err(|e| e.to_string())?;
            emit(out, &scalar_payload(&n.to_string(), format, "count")?)
        }
        DyckCommand::Qpoly { partition } => {
            let p = parse_partition(&partition)?;
            let poly = q_area_enumerator(&p).map_err(|e| e.to_string())?;
            let payload = match format {
                Format::Json => render::qpoly_value(&p, &poly).to_string(),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = poly
                        .coeffs()
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                        .map(|(k, c)| vec![render::qt_monomial(k as u32, 0), c.to_string()])
                        .collect();
                    csv_rows(rows)
                }
                Format::Dot => return Err(no_dot("qpoly")),
            };
            emit(out, &payload)
        }
        DyckCommand::Qtpoly { partition } => {
            let p = parse_partition(&partition)?;
            let poly = qt_enumerator(&p).map_err(|e| e.to_string())?;
            let payload = match format {
                Format::Json => render::qtpoly_value(&p, &poly).to_string(),
                Format::Csv => csv_rows(
                    poly.terms()
                        .map(|(&(a, b), c)| vec![render::qt_monomial(a, b), c.to_string()])
                        .collect(),
                ),
                Format::Dot => return Err(no_dot("qtpoly")),
            };
            emit(out, &payload)
        }
        DyckCommand::Schur { partition } => {
            let p = parse_partition(&partition)?;
            let exp = expand_schur(&qt_enumerator(&p).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let value = render::schur_value(&exp);
            let payload = match format {
                Format::Json => value.to_string(),
                Format::Csv => csv_rows(
                    value
                        .as_object()
                        .expect("term map")
                        .iter()
                        .map(|(k, v)| vec![k.clone(), v.to_string()])
                        .collect(),
                ),
                Format::Dot => return Err(no_dot("schur")),
            };
            emit(out, &payload)
        }
        DyckCommand::Bizley { m, n } => {
            let c = bizley_count(m, n).map_err(|e| e.to_string())?;
            emit(out, &scalar_payload(&c.to_string(), format, "bizley")?)
        }
        DyckCommand::Delta { n, k } => {
            let poly = delta_enumerator(n, k).map_err(|e| e.to_string())?;
            let payload = match format {
                Format::Json => render::delta_value(n, k, &poly).to_string(),
                Format::Csv => csv_rows(
                    poly.terms()
                        .map(|(&(a, b), c)| vec![render::qt_monomial(a, b), c.to_string()])
                        .collect(),
                ),
                Format::Dot => return Err(no_dot("delta")),
            };
            emit(out, &payload)
        }
    }
}

fn dispatch_park(
    command: ParkCommand,
    format: Format,
    out: &Option<PathBuf>,
) -> Result<(), String> {
    match command {
        ParkCommand::Count { partition, height } => {
            let p = parse_partition(&partition)?;
            let n = parking_count(&p, height).map_err(|e| e.to_string())?;
            emit(out, &scalar_payload(&n.to_string(), format, "count")?)
        }
        ParkCommand::Enumerator { partition, height } => {
            let p = parse_partition(&partition)?;
            let e = parking_enumerator(&p, height).map_err(|e| e.to_string())?;
            let value = render::evector_value(&e);
            let payload = match format {
                Format::Json => value.to_string(),
                Format::Csv => csv_rows(
                    value
                        .as_object()
                        .expect("term map")
                        .iter()
                        .map(|(k, v)| {
                            vec![
                                k.clone(),
                                v.as_str().expect("polynomial string").to_string(),
                            ]
                        })
                        .collect(),
                ),
                Format::Dot => return Err(no_dot("enumerator")),
            };
            emit(out, &payload)
        }
        ParkCommand::Bizley { m, n } => {
            let count = parking_bizley_count(m, n).map_err(|e| e.to_string())?;
            let variant = parking_bizley_variant(m, n).map_err(|e| e.to_string())?;
            let agree = variant == num_rational::BigRational::from_integer(count.clone());
            let payload = match format {
                Format::Json => serde_json::json!({
                    "schema": render::SCHEMA,
                    "m": m,
                    "n": n,
                    "count": render::bigint_value(&count),
                    "variant": variant.to_string(),
                    "agree": agree,
                })
                .to_string(),
                Format::Csv => csv_rows(vec![
                    vec!["m".into(), m.to_string()],
                    vec!["n".into(), n.to_string()],
                    vec!["count".into(), count.to_string()],
                    vec!["variant".into(), variant.to_string()],
                    vec!["agree".into(), agree.to_string()],
                ]),
                Format::Dot => return Err(no_dot("bizley")),
            };
            emit(out, &payload)
        }
    }
}

fn run_verify(
    suite: &str,
    max_size: Option<u32>,
    report: Option<PathBuf>,
    extended: bool,
    format: Option<Format>,
    out: &Option<PathBuf>,
) -> Result<u8, String> {
    let results = verify::run_suite(suite, max_size).ok_or_else(|| {
        format!("unknown suite {suite:?} (expected all, geometry, poset, dyck, schur, or park)")
    })?;
    let ext = extended.then(verify::extended_checks);
    let ext_summary = ext.map(|(ok, s)| {
        if ok {
            format!("extended: {s}")
        } else {
            format!("extended: {s} [outside expectation]")
        }
    });
    let code = verify::exit_code(&results);
    let payload = match format {
        None => {
            let mut text = String::new();
            for r in &results {
                text.push_str(&r.render());
                text.push('\n');
            }
            if let Some(e) = &ext_summary {
                text.push_str(e);
                text.push('\n');
            }
            text.push_str(&format!(
                "verify {suite}: {} (exit {code})",
                if code == 0 { "PASS" } else { "FAIL" }
            ));
            text
        }
        Some(Format::Json) => serde_json::to_string_pretty(&verify::report_json(
            suite,
            &results,
            ext_summary.as_deref(),
        ))
        .expect("report serializes"),
        Some(_) => return Err("verify output is plain text or --format json".into()),
    };
    emit(out, &payload)?;
    if let Some(path) = report {
        let value = verify::report_json(suite, &results, ext_summary.as_deref());
        let text = serde_json::to_string_pretty(&value).expect("report serializes");
        fs::write(&path, text + "\n")
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(code)
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse()
        .map_err(|e| format!("invalid partition {s:?}: {e}"))
}

/// JSON object payload, or its field/value rows as CSV.
fn data_payload(value: &Value, format: Format, what: &str) -> Result<String, String> {
    match format {
        Format::Json => Ok(value.to_string()),
        Format::Csv => {
            let rows = value
                .as_object()
                .expect("object payload")
                .iter()
                .map(|(k, v)| vec![k.clone(), scalar_of(v)])
                .collect();
            Ok(csv_rows(rows))
        }
        Format::Dot => Err(no_dot(what)),
    }
}

fn partition_list_payload(
    items: &[Partition],
    format: Format,
    what: &str,
) -> Result<String, String> {
    match format {
        Format::Json => Ok(render::list_value(items).to_string()),
        Format::Csv => Ok(csv_rows(
            items.iter().map(|p| vec![p.to_string()]).collect(),
        )),
        Format::Dot => Err(no_dot(what)),
    }
}

/// A bare number: identical raw digits in JSON and CSV.
fn scalar_payload(digits: &str, format: Format, what: &str) -> Result<String, String> {
    match format {
        Format::Json | Format::Csv => Ok(digits.to_string()),
        Format::Dot => Err(no_dot(what)),
    }
}

/// A bare string: quoted in JSON, raw in CSV.
fn scalar_string_payload(s: &str, format: Format, what: &str) -> Result<String, String> {
    match format {
        Format::Json => Ok(Value::String(s.to_string()).to_string()),
        Format::Csv => Ok(csv_escape(s)),
        Format::Dot => Err(no_dot(what)),
    }
}

fn no_dot(what: &str) -> String {
    format!("dot output is only available for poset hasse, not {what}")
}

fn scalar_of(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_rows(rows: Vec<Vec<String>>) -> String {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|f| csv_escape(f))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    let mut text = content.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
