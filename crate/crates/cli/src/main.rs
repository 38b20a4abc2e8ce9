use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nakloc_core::arcs;
use nakloc_core::battery;
use nakloc_core::hasse;
use nakloc_core::localise;
use nakloc_core::subcats::{self, Subcat};
use nakloc_core::tautilt::{self, SupportTauTilting};
use nakloc_core::verify::{self, Options};
use nakloc_core::NakayamaAlgebra;

#[derive(Parser)]
#[command(name = "nakloc", version, about = "Universal localisations and support τ-tilting modules of Nakayama algebras")]
struct Cli {
    /// Print elapsed time to stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Localise an algebra at a list of modules and print the full report.
    Localise {
        #[arg(short = 'A', long)]
        algebra: String,
        /// Comma-separated modules, e.g. "M(2,1),P3"; empty for the identity.
        #[arg(short = 'S', long, default_value = "")]
        sigma: String,
    },
    /// Stream every object of one kind as JSON lines, then a count line.
    Enumerate {
        #[arg(short = 'A', long)]
        algebra: String,
        #[arg(long, value_enum)]
        what: What,
        /// Memoise the output in this directory.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Hasse quiver of support τ-tilting modules or of localisations.
    Hasse {
        #[arg(short = 'A', long)]
        algebra: String,
        #[arg(long, value_enum)]
        what: HasseWhat,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Run every invariant over A_n^h and Ã_n^h for n <= NMAX, h <= HMAX and
    /// the fixed non-uniform series.
    Verify {
        nmax: usize,
        hmax: usize,
        /// Include the linear-algebra sweeps.
        #[arg(long)]
        oracle: bool,
        /// Skip the non-uniform series.
        #[arg(long)]
        uniform_only: bool,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Arc diagrams of a uniform algebra.
    Arcs {
        #[arg(short = 'A', long)]
        algebra: String,
        /// Print the number of diagrams.
        #[arg(long, conflicts_with = "of_sigma")]
        count: bool,
        /// Draw the diagram of the localisation at these modules.
        #[arg(long)]
        of_sigma: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// List support τ-tilting modules, or describe one.
    Stt {
        #[arg(short = 'A', long)]
        algebra: String,
        /// A module such as "P1+P3+S1 | support:{}".
        #[arg(short = 'T', long)]
        of: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Uniloc,
    Stt,
    Torsion,
    Wide,
    Orth,
    Arcs,
    Homological,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HasseWhat {
    Stt,
    Uniloc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Ascii,
    Text,
}

enum Failure {
    Input(String),
    Verification,
}

impl From<nakloc_core::Error> for Failure {
    fn from(e: nakloc_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Out<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let res = run(cli.command);
    if cli.timing {
        eprintln!("elapsed: {:.3} ms", start.elapsed().as_secs_f64() * 1e3);
    }
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Out {
    let mut out = io::stdout().lock();
    match cmd {
        Command::Localise { algebra, sigma } => {
            let a = NakayamaAlgebra::parse(&algebra)?;
            let sigma: Subcat = a.parse_modules(&sigma)?.into_iter().collect();
            let loc = localise::canonicalise(&a, &sigma)?;
            let report = json!({
                "command": "localise",
                "algebra": a.to_spec_string(),
                "result": loc.to_json(),
                "B_spec": loc.b.to_spec_string(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"))?;
        }
        Command::Enumerate { algebra, what, cache } => {
            let a = NakayamaAlgebra::parse(&algebra)?;
            let file = cache.as_ref().map(|d| d.join(cache_name(&a, what)));
            if let Some(f) = file.as_ref().filter(|f| f.exists()) {
                out.write_all(&fs::read(f)?)?;
                return Ok(());
            }
            let lines = enumerate(&a, what)?;
            let mut text = String::new();
            for l in &lines {
                text.push_str(&l.to_string());
                text.push('\n');
            }
            text.push_str(&json!({ "count": lines.len() }).to_string());
            text.push('\n');
            if let (Some(dir), Some(f)) = (cache, file) {
                fs::create_dir_all(dir)?;
                fs::write(f, &text)?;
            }
            out.write_all(text.as_bytes())?;
        }
        Command::Hasse { algebra, what, format } => {
            let a = NakayamaAlgebra::parse(&algebra)?;
            let q = match what {
                HasseWhat::Stt => hasse::hasse_stt(&a),
                HasseWhat::Uniloc => hasse::hasse_uniloc(&a)?,
            };
            let name = match what {
                HasseWhat::Stt => "stt",
                HasseWhat::Uniloc => "uniloc",
            };
            match format {
                Format::Dot => write!(out, "{}", q.to_dot(name))?,
                Format::Json => writeln!(out, "{}", q.to_json())?,
                _ => return Err(Failure::Input("hasse supports --format dot or json".into())),
            }
        }
        Command::Verify { nmax, hmax, oracle, uniform_only, seed } => {
            if nmax < 1 || hmax < 2 {
                return Err(Failure::Input("need NMAX >= 1 and HMAX >= 2".into()));
            }
            let family = battery::battery(nmax, hmax, !uniform_only);
            let reports = verify::verify_battery(&family, Options { oracle, seed });
            writeln!(out, "{:<32} {:>4} {:>7} {:>8} {:>8} {:>6}", "algebra", "n", "uniloc", "checks", "oracle", "fails")?;
            for r in &reports {
                writeln!(
                    out,
                    "{:<32} {:>4} {:>7} {:>8} {:>8} {:>6}",
                    r.algebra,
                    r.n,
                    r.uniloc,
                    r.checks,
                    r.oracle_pairs,
                    r.failures.len()
                )?;
            }
            let failures: Vec<&verify::Failure> = reports.iter().flat_map(|r| &r.failures).collect();
            for f in &failures {
                writeln!(out, "FAIL {} [{}] {}", f.algebra, f.invariant, f.detail)?;
            }
            let checks: usize = reports.iter().map(|r| r.checks).sum();
            let extra: usize = reports.iter().map(|r| r.beta_extra_sweeps).sum();
            writeln!(
                out,
                "{} algebras, {checks} checks, {} failures, {extra} torsion closures needing a second sweep",
                reports.len(),
                failures.len()
            )?;
            if !failures.is_empty() {
                return Err(Failure::Verification);
            }
        }
        Command::Arcs { algebra, count, of_sigma, format } => {
            let a = NakayamaAlgebra::parse(&algebra)?;
            let (shape, n, h) = if let Some((n, h)) = a.as_uniform_cycle() {
                (arcs::ArcShape::Circle, n, h)
            } else if let Some((n, h)) = a.as_uniform_line() {
                (arcs::ArcShape::Line, n, h)
            } else {
                return Err(nakloc_core::Error::NotUniformFamily.into());
            };
            if let Some(sigma) = of_sigma {
                let sigma: Subcat = a.parse_modules(&sigma)?.into_iter().collect();
                let loc = localise::canonicalise(&a, &sigma)?;
                let d = arcs::to_arc_diagram(&a, &loc.w_tilde)?;
                match format {
                    Format::Ascii => write!(out, "{}", d.ascii())?,
                    _ => writeln!(out, "{}", serde_json::to_string(&d).expect("json"))?,
                }
            } else if count {
                let c = arcs::count_noncrossing(shape, n, h);
                match format {
                    Format::Json => writeln!(out, "{}", json!({ "shape": shape, "n": n, "h": h, "count": c }))?,
                    _ => writeln!(out, "{c}")?,
                }
            } else {
                for d in arcs::enumerate_diagrams(shape, n, h) {
                    match format {
                        Format::Ascii => writeln!(out, "{}", d.ascii())?,
                        _ => writeln!(out, "{}", serde_json::to_string(&d).expect("json"))?,
                    }
                }
            }
        }
        Command::Stt { algebra, of, format } => {
            let a = NakayamaAlgebra::parse(&algebra)?;
            match of {
                Some(text) => {
                    let s = SupportTauTilting::parse(&a, &text)?;
                    let gen = tautilt::torsion_from_stt(&a, &s);
                    if tautilt::stt_from_torsion(&a, &gen).ok().as_ref() != Some(&s) {
                        return Err(Failure::Input(format!("{} is not support τ-tilting", s.display(&a))));
                    }
                    let loc = tautilt::psi(&a, &s)?;
                    let sp: Vec<String> = tautilt::sigma_prime(&a, &s).iter().map(|&x| a.name(x)).collect();
                    let report = json!({
                        "stt": s.display(&a),
                        "tau_tilting": s.is_tau_tilting(),
                        "sigma_prime": sp,
                        "localisation": loc.to_json(),
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"))?;
                }
                None => {
                    let mut all = tautilt::enumerate_stt(&a);
                    all.sort_by_key(|s| s.display(&a));
                    for s in &all {
                        match format {
                            Format::Json => writeln!(out, "{}", s.to_json(&a))?,
                            _ => writeln!(out, "{}", s.display(&a))?,
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn module_list(a: &NakayamaAlgebra, s: &Subcat) -> Value {
    json!(s.iter().map(|&x| a.name(x)).collect::<Vec<_>>())
}

fn enumerate(a: &NakayamaAlgebra, what: What) -> Out<Vec<Value>> {
    Ok(match what {
        What::Uniloc => localise::enumerate_uniloc(a)?.iter().map(|l| l.to_json()).collect(),
        What::Homological => localise::enumerate_uniloc(a)?
            .iter()
            .filter(|l| l.flags.homological)
            .map(|l| l.to_json())
            .collect(),
        What::Stt => {
            let mut all = tautilt::enumerate_stt(a);
            all.sort_by_key(|s| s.display(a));
            all.iter().map(|s| s.to_json(a)).collect()
        }
        What::Torsion => subcats::enumerate_torsion_classes(a).iter().map(|t| module_list(a, t)).collect(),
        What::Wide => subcats::enumerate_wide(a).iter().map(|t| module_list(a, t)).collect(),
        What::Orth => subcats::enumerate_orth_collections(a).iter().map(|t| module_list(a, t)).collect(),
        What::Arcs => {
            let mut ds = localise::enumerate_uniloc(a)?
                .iter()
                .map(|l| arcs::to_arc_diagram(a, &l.w_tilde))
                .collect::<Result<Vec<_>, _>>()?;
            ds.sort();
            ds.iter().map(|d| serde_json::to_value(d).expect("json")).collect()
        }
    })
}

fn cache_name(a: &NakayamaAlgebra, what: What) -> String {
    let alg: String = a
        .to_spec_string()
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    let w = what.to_possible_value().expect("named").get_name().to_string();
    format!("{alg}.{w}.jsonl")
}
