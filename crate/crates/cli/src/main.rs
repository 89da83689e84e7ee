use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use rank2::classification::{distinct_hvectors, h_of_partition, is_matroid_hvector, total_labeled_big};
use rank2::ideals::{
    complex_of_set_partition, hilbert_function, set_partitions_subordinate, socle_and_purity, stanley_reisner,
    witness_ideal,
};
use rank2::matroid::{construct_from_partition, extract_partition, is_matroid};
use rank2::oracle::crosscheck_report;
use rank2::partition::partitions_of;
use rank2::tables::{table1, table2};
use rank2::{HVector, MatroidTest, MembershipMode, Partition, SimplicialComplex};

/// Labeled listings grow like the Bell numbers; B(10) = 115975 lines.
const LABELED_LIMIT: usize = 10;

#[derive(Parser)]
#[command(name = "rank2", version, about = "Matroid complexes of dimension at most one")]
struct Cli {
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the complex of a partition as JSON.
    Construct { partition: Partition },
    /// Decide whether a complex is a matroid; report its partition and h-vector.
    Classify { complex: PathBuf },
    /// h-vector of a partition or of a complex file.
    Hvector { input: String },
    /// Decide whether an h-vector such as 1,4,7 belongs to a matroid.
    Member {
        #[arg(value_parser = parse_short_hvector)]
        hvector: HVector,
        /// List every partition realising it.
        #[arg(long)]
        witnesses: bool,
    },
    /// Stanley–Reisner ideal of a partition or of a complex file.
    Ideal {
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Witness ideal of a partition with its Hilbert function and socle.
    Witness {
        partition: Partition,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Isomorphism classes on n vertices.
    Enumerate {
        n: usize,
        /// Also list every labeled complex in each class.
        #[arg(long)]
        labeled: bool,
    },
    /// Class, h-vector and labeled counts on n vertices.
    Count { n: usize },
    /// Which (1, n-2, h2) are matroid h-vectors.
    Table1 {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Partitions grouped by h-vector.
    Table2 {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exhaustive cross-check of every graph on n vertices.
    Oracle { n: usize },
}

fn parse_short_hvector(s: &str) -> std::result::Result<HVector, String> {
    let h: HVector = s.parse().map_err(|e: rank2::Error| e.to_string())?;
    if !(2..=3).contains(&h.len()) {
        return Err(format!("expected 2 or 3 entries, got {}", h.len()));
    }
    if h.entries().iter().any(|&x| x < 0) {
        return Err("entries must be nonnegative".into());
    }
    Ok(h)
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::InvalidValue, msg).exit()
}

fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    SimplicialComplex::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

/// A partition, or a path to a complex in JSON form.
fn complex_or_partition(input: &str) -> Result<SimplicialComplex> {
    let path = Path::new(input);
    if path.exists() || input.ends_with(".json") {
        return read_complex(path);
    }
    match input.parse::<Partition>() {
        Ok(lambda) => Ok(construct_from_partition(&lambda)?),
        Err(e) => usage_error(format!("{input:?} is neither a file nor a partition: {e}")),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(command: Command) -> Result<(String, bool)> {
    let mut out = String::new();
    let mut ok = true;
    match command {
        Command::Construct { partition } => {
            writeln!(out, "{}", construct_from_partition(&partition)?.to_json())?;
        }
        Command::Classify { complex } => {
            let c = read_complex(&complex)?;
            let matroid = c.dim() <= 1 && is_matroid(&c, MatroidTest::Fast)?
                || c.dim() > 1 && is_matroid(&c, MatroidTest::Definitional)?;
            writeln!(out, "matroid: {}", yes_no(matroid))?;
            if c.dim() <= 1 && matroid {
                writeln!(out, "partition: {}", extract_partition(&c)?)?;
            }
            writeln!(out, "h-vector: {}", c.h_vector())?;
        }
        Command::Hvector { input } => {
            writeln!(out, "{}", complex_or_partition(&input)?.h_vector())?;
        }
        Command::Member { hvector, witnesses } => {
            let answer = is_matroid_hvector(&hvector, MembershipMode::Closed)?;
            if answer.is_matroid && witnesses {
                let list: Vec<String> = answer.witnesses.iter().map(|p| p.to_string()).collect();
                writeln!(out, "yes: {}", list.join(", "))?;
            } else {
                writeln!(out, "{}", yes_no(answer.is_matroid))?;
            }
        }
        Command::Ideal { input, format } => {
            let ideal = stanley_reisner(&complex_or_partition(&input)?)?;
            match format {
                Format::Json => writeln!(out, "{}", ideal.to_json())?,
                _ => out.push_str(&ideal.to_text()),
            }
        }
        Command::Witness { partition, format } => {
            let ideal = witness_ideal(&partition);
            let hilbert = hilbert_function(&ideal)?;
            let socle = socle_and_purity(&ideal)?;
            match format {
                Format::Json => {
                    let value = serde_json::json!({
                        "partition": partition,
                        "ideal": ideal,
                        "hilbert_function": hilbert,
                        "socle": socle.socle.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                        "socle_degrees": socle.socle_degrees,
                        "pure": socle.is_pure,
                        "level": socle.is_level,
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
                }
                _ => {
                    writeln!(out, "variables: {}", ideal.vars())?;
                    writeln!(out, "generators:")?;
                    for g in ideal.gens() {
                        writeln!(out, "  {g}")?;
                    }
                    let h: Vec<String> = hilbert.iter().map(|x| x.to_string()).collect();
                    writeln!(out, "hilbert function: ({})", h.join(","))?;
                    let s: Vec<String> = socle.socle.iter().map(|m| m.to_string()).collect();
                    writeln!(out, "socle: {}", s.join(", "))?;
                    let d: Vec<String> = socle.socle_degrees.iter().map(|x| x.to_string()).collect();
                    writeln!(out, "socle degrees: {}", d.join(", "))?;
                    writeln!(out, "pure: {}", yes_no(socle.is_pure))?;
                    writeln!(out, "level: {}", yes_no(socle.is_level))?;
                }
            }
        }
        Command::Enumerate { n, labeled } => {
            if n == 0 {
                usage_error("n must be positive");
            }
            if labeled && n > LABELED_LIMIT {
                anyhow::bail!(rank2::Error::TooLarge(n, LABELED_LIMIT));
            }
            for lambda in partitions_of(n) {
                let sps = set_partitions_subordinate(&lambda);
                writeln!(out, "{lambda}\t{}\t{}", h_of_partition(&lambda), sps.len())?;
                if labeled {
                    for sp in &sps {
                        writeln!(out, "  {}", complex_of_set_partition(sp).to_json())?;
                    }
                }
            }
        }
        Command::Count { n } => {
            if n == 0 {
                usage_error("n must be positive");
            }
            let classes = partitions_of(n).filter(|l| l.len() >= 2).count();
            writeln!(
                out,
                "classes: {classes}, distinct h-vectors: {}, labeled: {}",
                distinct_hvectors(n).len(),
                total_labeled_big(n)
            )?;
        }
        Command::Table1 { max_n, format } => {
            if max_n < 2 {
                usage_error("--max-n must be at least 2");
            }
            let t = table1(max_n);
            out.push_str(&match format {
                Format::Text => t.to_text(),
                Format::Csv => t.to_csv(),
                Format::Json => t.to_json() + "\n",
            });
        }
        Command::Table2 { max_n, format } => {
            if max_n < 2 {
                usage_error("--max-n must be at least 2");
            }
            let t = table2(max_n);
            out.push_str(&match format {
                Format::Text => t.to_text(),
                Format::Csv => t.to_csv(),
                Format::Json => t.to_json() + "\n",
            });
        }
        Command::Oracle { n } => {
            let report = crosscheck_report(n)?;
            out.push_str(&report.to_text());
            ok = report.all_passed();
        }
    }
    Ok((out, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, ok)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text).with_context(|| format!("writing {}", path.display())),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
