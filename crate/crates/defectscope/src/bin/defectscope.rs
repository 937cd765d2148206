use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use defectscope::classify::{self, Method, Verdict};
use defectscope::dade;

#[derive(Parser)]
#[command(name = "defectscope", about = "p-block invariants of finite permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TableArgs {
    /// group spec: a preset like sym(5), alt(4), dihedral(8), quaternion8,
    /// sl23, gl32, psl33, or a path to a generator JSON file
    #[arg(long)]
    group: String,
    /// table construction method
    #[arg(long, default_value = "auto")]
    method: String,
    /// character table JSON, for --method ingest
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute and print a character table
    Chartab {
        #[command(flatten)]
        table: TableArgs,
        #[arg(long)]
        json: bool,
    },
    /// Print the p-block partition with defects and defect groups
    Blocks {
        #[command(flatten)]
        table: TableArgs,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// Classify every p-block as StronglyKD, KD, or Exotic
    Classify {
        #[command(flatten)]
        table: TableArgs,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// Dade's cyclic-defect prediction table
    Dade {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u32,
        /// inertial index; all divisors of p-1 when omitted
        #[arg(long)]
        e: Option<u64>,
    },
    /// Run the pipeline over a corpus file
    Scan {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn run() -> defectscope::Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Chartab { table, json } => {
            let (t, method) = classify::table_for(
                &table.group,
                Method::parse(&table.method)?,
                table.table.as_deref(),
            )?;
            if json {
                println!("{}", serde_json::to_string(&t.to_json()).expect("serializes"));
            } else {
                println!("group {} (method {method}): order {}, exponent {}, k = {}",
                    table.group, t.order, t.exponent, t.k());
                print!("class sizes: ");
                println!("{}", t.classes.iter().map(|c| c.size.to_string()).collect::<Vec<_>>().join(" "));
                for row in &t.values {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|v| match v.as_rational() {
                            Some(r) => r.to_string(),
                            None => serde_json::to_string(v).expect("serializes"),
                        })
                        .collect();
                    println!("{}", cells.join("\t"));
                }
            }
        }
        Command::Blocks { table, p, json } | Command::Classify { table, p, json } => {
            let rep = classify::analyze(
                &table.group,
                p,
                Method::parse(&table.method)?,
                table.table.as_deref(),
            )?;
            if json {
                println!("{}", serde_json::to_string(&rep).expect("serializes"));
            } else {
                println!(
                    "{} at p = {p} (method {}): |G| = {}, k(G) = {}, {} block(s){}",
                    rep.group,
                    rep.method,
                    rep.order,
                    rep.k,
                    rep.blocks.len(),
                    if rep.exotic { " — EXOTIC" } else { "" }
                );
                for (i, b) in rep.blocks.iter().enumerate() {
                    let role = if i == 0 { "principal" } else { "block" };
                    let verdict = match b.verdict {
                        Verdict::StronglyKD => "StronglyKD",
                        Verdict::KD => "KD",
                        Verdict::Exotic => "Exotic",
                    };
                    let dade = match (b.e, b.dade_k) {
                        (Some(e), Some(k)) => format!(", e = {e}, Dade k = {k}"),
                        _ => String::new(),
                    };
                    println!(
                        "  {role} {i}: k(B) = {}, d = {}, k0 = {}, |D| = {}, k(D) = {}, {}{} -> {verdict}{dade}",
                        b.kB,
                        b.d,
                        b.k0B,
                        b.defect_group.order,
                        b.defect_group.k_D,
                        if b.defect_group.abelian { "abelian" } else { "non-abelian" },
                        if b.defect_group.cyclic { " cyclic" } else { "" },
                    );
                }
            }
        }
        Command::Dade { p, d, e } => {
            let es: Vec<u64> = match e {
                Some(e) => vec![e],
                None => (1..=p.saturating_sub(1)).filter(|e| (p - 1) % e == 0).collect(),
            };
            println!("p = {p}, d = {d}: k(D) = p^d = {}", p.pow(d));
            for e in es {
                let pred = dade::dade_k(p, d, e)?;
                let strong = dade::classify_cyclic_strong(p, d, e)?;
                let cong = dade::classify_cyclic_congruent(p, d, e)?;
                println!(
                    "  e = {e}: k(B) = {}, strongly k(D): {strong}, congruence: {cong}",
                    pred.predicted_k
                );
            }
        }
        Command::Scan {
            corpus,
            jobs,
            checkpoint,
            json,
        } => {
            let text = std::fs::read_to_string(&corpus)?;
            let report = classify::scan(&text, jobs, checkpoint.as_deref())?;
            if json {
                println!("{}", serde_json::to_string(&report).expect("serializes"));
            } else {
                for rec in &report.reports {
                    match &rec.result {
                        Ok(rep) => {
                            let verdicts: Vec<&str> = rep
                                .blocks
                                .iter()
                                .map(|b| match b.verdict {
                                    Verdict::StronglyKD => "StronglyKD",
                                    Verdict::KD => "KD",
                                    Verdict::Exotic => "Exotic",
                                })
                                .collect();
                            println!("{} @ {}: {}", rec.group, rec.p, verdicts.join(", "));
                        }
                        Err(e) => println!("{} @ {}: error: {e}", rec.group, rec.p),
                    }
                }
                println!("totals: {:?}; errors: {}", report.counts, report.errors);
                if !report.exotic_groups.is_empty() {
                    println!("exotic: {}", report.exotic_groups.join("; "));
                }
            }
            if report.errors > 0 {
                return Err(defectscope::Error::ValidationError(format!(
                    "{} scan job(s) failed",
                    report.errors
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
