//! The `wordgraph` command line.
//!
//! Exit codes: 0 success or predicate true, 1 predicate false, 2 usage or
//! input error, 3 verification mismatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::connectivity::{bridges, edge_connectivity, scc_decomposition, strongly_connected, weakly_connected};
use crate::enumeration::{render_csv, scc_histogram, CountTable, DEFAULT_ENUMERATION_CAP};
use crate::error::Error;
use crate::factorization::finest_disjoint_factorization;
use crate::graph::{build_graph_with_labels, from_json, to_dot, to_json, Digraph};
use crate::representability::synthesize_word;
use crate::verify::{self, VerifyConfig};
use crate::word::parse_word_with_symbols;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    False = 1,
    Usage = 2,
    Mismatch = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Parser, Debug)]
#[command(name = "wordgraph", version, about = "Word-graphs: build, check, count and verify")]
struct Cli {
    /// Add human-readable commentary to the output.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Render the word-graph of a word.
    Build {
        word: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Connectivity report for a word's graph; exits 0 iff strongly connected.
    Check { word: String },
    /// Number of strongly connected word-graphs among ℓ-words over n letters.
    Count {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        alphabet: usize,
        /// Print T(ℓ, n), the count of irreducible partitions, instead of φ.
        #[arg(long)]
        partitions: bool,
    },
    /// CSV of S, T and φ for all n ≤ ℓ within the bounds.
    Table {
        #[arg(long)]
        max_length: usize,
        #[arg(long)]
        max_alphabet: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively check the recurrence and the connectivity equivalences.
    Verify {
        #[arg(long)]
        max_length: usize,
        #[arg(long)]
        max_alphabet: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u128,
        /// Corrupt the memoized T(L, N) before checking.
        #[arg(long, hide = true, value_name = "L,N", value_parser = parse_pair)]
        inject_fault: Option<(usize, usize)>,
    },
    /// Find a word representing a JSON digraph; exits 1 if none exists.
    Represent {
        #[arg(long)]
        input: PathBuf,
    },
    /// Canonical words per strong-component count, as `k,count` lines.
    Histogram {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        alphabet: usize,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u128,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected L,N")?;
    let a = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((a, b))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                ExitStatus::Usage
            } else {
                let _ = out.write_all(rendered.as_bytes());
                ExitStatus::Success
            };
        }
    };
    match execute(&cli, out) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            ExitStatus::Usage
        }
    }
}

type CmdResult = Result<ExitStatus, Box<dyn std::error::Error>>;

fn execute(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Build { word, format } => {
            let (w, symbols) = parse_word_with_symbols(word)?;
            let g = build_graph_with_labels(&w, &symbols)?;
            match format {
                Format::Dot => out.write_all(to_dot(&g).as_bytes())?,
                Format::Json => writeln!(out, "{}", to_json(&g))?,
            }
            Ok(ExitStatus::Success)
        }
        Command::Check { word } => check(word, cli.verbose, out),
        Command::Count {
            length,
            alphabet,
            partitions,
        } => {
            if *length == 0 || *alphabet == 0 {
                return Err(Error::InvalidArgument("--length and --alphabet must be at least 1".into()).into());
            }
            let table = CountTable::new();
            let value = if *partitions {
                table.irreducible(*length, *alphabet)?
            } else {
                table.strong_word_graphs(*length, *alphabet)?
            };
            writeln!(out, "{value}")?;
            Ok(ExitStatus::Success)
        }
        Command::Table {
            max_length,
            max_alphabet,
            out: path,
        } => {
            if *max_length == 0 || *max_alphabet == 0 {
                return Err(Error::InvalidArgument("bounds must be at least 1".into()).into());
            }
            let csv = render_csv(&CountTable::new().rows(*max_length, *max_alphabet));
            match path {
                Some(path) => {
                    std::fs::write(path, &csv).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    if cli.verbose {
                        writeln!(out, "wrote {} rows to {}", csv.lines().count() - 1, path.display())?;
                    }
                }
                None => out.write_all(csv.as_bytes())?,
            }
            Ok(ExitStatus::Success)
        }
        Command::Verify {
            max_length,
            max_alphabet,
            cap,
            inject_fault,
        } => {
            let config = VerifyConfig {
                max_length: *max_length,
                max_alphabet: *max_alphabet,
                cap: *cap,
                fault: *inject_fault,
            };
            let report = verify::run(&config)?;
            for c in &report.checks {
                match &c.failure {
                    None => writeln!(out, "check={} checked={} skipped={} status=pass", c.name, c.checked, c.skipped)?,
                    Some(f) => writeln!(out, "check={} checked={} skipped={} status=fail {f}", c.name, c.checked, c.skipped)?,
                }
            }
            if report.passed() {
                writeln!(out, "result=pass")?;
                Ok(ExitStatus::Success)
            } else {
                writeln!(out, "result=fail")?;
                Ok(ExitStatus::Mismatch)
            }
        }
        Command::Represent { input } => {
            let text =
                std::fs::read_to_string(input).map_err(|e| format!("cannot read {}: {e}", input.display()))?;
            let g = from_json(&text)?;
            match synthesize_word(&g) {
                Ok(w) => {
                    writeln!(out, "{}", render_walk(&g, w.letters()))?;
                    Ok(ExitStatus::Success)
                }
                Err(Error::NotRepresentable) => {
                    writeln!(out, "not representable")?;
                    Ok(ExitStatus::False)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Histogram { length, alphabet, cap } => match scc_histogram(*length, *alphabet, *cap) {
            Ok(buckets) => {
                for (k, count) in buckets {
                    writeln!(out, "{k},{count}")?;
                }
                Ok(ExitStatus::Success)
            }
            Err(e @ Error::ComponentMismatch { .. }) => {
                writeln!(out, "mismatch {e}")?;
                Ok(ExitStatus::Mismatch)
            }
            Err(e) => Err(e.into()),
        },
    }
}

/// Vertex labels along the walk: concatenated when every label is a single
/// lowercase letter, comma-separated otherwise.
fn render_walk(g: &Digraph, walk: &[u32]) -> String {
    let labels = g.labels();
    let letters = labels
        .iter()
        .all(|l| l.len() == 1 && l.as_bytes()[0].is_ascii_lowercase());
    let sep = if letters { "" } else { "," };
    walk.iter()
        .map(|&v| labels[v as usize].as_str())
        .collect::<Vec<_>>()
        .join(sep)
}

fn check(word: &str, verbose: bool, out: &mut dyn Write) -> CmdResult {
    let (w, symbols) = parse_word_with_symbols(word)?;
    let g = build_graph_with_labels(&w, &symbols)?;
    let strong = strongly_connected(&g)?;
    let weak = weakly_connected(&g)?;
    let lambda = edge_connectivity(&g)?.map_or_else(|| "n/a".to_string(), |l| l.to_string());
    let bridge_list = bridges(&g)
        .iter()
        .map(|&(u, v)| format!("({},{})", g.label(u), g.label(v)))
        .collect::<Vec<_>>()
        .join(",");
    let factorization = finest_disjoint_factorization(&w);
    let factors = factorization.render(&w, |i| symbols[i].clone());
    let sccs = scc_decomposition(&g)?.len();

    writeln!(out, "word={}", word.trim())?;
    writeln!(out, "length={}", w.len())?;
    writeln!(out, "alphabet={}", w.alphabet_size())?;
    writeln!(out, "strong={strong}")?;
    writeln!(out, "weak={weak}")?;
    writeln!(out, "lambda={lambda}")?;
    writeln!(out, "bridges=[{bridge_list}]")?;
    writeln!(out, "factors={factors}")?;
    writeln!(out, "k={}", factorization.len())?;
    writeln!(out, "sccs={sccs}")?;
    if verbose {
        if strong {
            writeln!(out, "# no split point: every edge lies on a cycle, so the graph is strongly connected")?;
        } else {
            writeln!(
                out,
                "# {} disjoint factors joined by {} bridges; each factor is one strong component",
                factorization.len(),
                factorization.len() - 1
            )?;
        }
    }
    Ok(if strong { ExitStatus::Success } else { ExitStatus::False })
}
