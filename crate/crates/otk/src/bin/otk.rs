//! Command-line front end: input parsing, subcommand dispatch, and
//! report rendering (human tables and JSON).
//!
//! Exit codes: 0 pass, 1 check failure, 2 parse error, 3 invalid
//! configuration.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use otk::algebras::{
    build_aot, build_j0, build_j1, build_ot, build_oth, build_qh, build_sr, build_toric_i1,
    Presentation,
};
use otk::groebner::hilbert_series_quotient;
use otk::matroid::{ComplexKind, VectorConfig};
use otk::polyring::MonomialOrder;
use otk::verify::{
    build_psi, default_degree_bound, kernel_dimensions, square_config, tp1_config,
    triangle_config, verify_all, verify_tp1, VerificationReport, VerifyOptions, CHECK_NAMES,
};

#[derive(Parser)]
#[command(name = "otk", about = "Exact verification of hypertoric ring presentations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the input assumptions (full rank, no co-loops, unimodular, simple)
    Validate {
        /// Input JSON path or built-in name (tp1 | triangle | square)
        #[arg(long)]
        input: String,
        /// Emit JSON instead of a table (to the given file, or stdout with "-")
        #[arg(long)]
        json: Option<String>,
    },
    /// List circuits, signed circuits, broken circuits, and f/h-vectors
    Circuits {
        #[arg(long)]
        input: String,
        #[arg(long)]
        json: Option<String>,
    },
    /// Print the generators of every ring presentation
    Presentations {
        #[arg(long)]
        input: String,
        #[arg(long)]
        json: Option<String>,
    },
    /// Print Hilbert series of the graded quotients
    Hilbert {
        #[arg(long)]
        input: String,
        #[arg(long)]
        json: Option<String>,
    },
    /// Per-degree dimensions of the graded map and its kernel
    PsiReport {
        #[arg(long)]
        input: String,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long)]
        json: Option<String>,
    },
    /// Run the full theorem-checking pipeline
    VerifyAll {
        #[arg(long)]
        input: String,
        #[arg(long)]
        max_degree: Option<u32>,
        /// Number of random order samples when n! is too large
        #[arg(long, default_value_t = 20)]
        orders: usize,
        /// Seed for random order sampling
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip a named check (repeatable); one of the pipeline check groups
        #[arg(long)]
        skip: Vec<String>,
        #[arg(long)]
        json: Option<String>,
    },
    /// Golden example: the cotangent bundle of the projective line
    Tp1 {
        #[arg(long)]
        json: Option<String>,
    },
}

fn load_config(input: &str) -> Result<VectorConfig, (u8, String)> {
    match input {
        "tp1" => return Ok(tp1_config()),
        "triangle" => return Ok(triangle_config()),
        "square" => return Ok(square_config()),
        _ => {}
    }
    let src = std::fs::read_to_string(input)
        .map_err(|e| (2, format!("cannot read {input}: {e}")))?;
    VectorConfig::from_json(&src).map_err(|e| (2, format!("{input}: {e}")))
}

/// Validation gate shared by the theorem-checking subcommands.
fn require_valid(config: &VectorConfig) -> Result<(), (u8, String)> {
    let report = config.validate_linear();
    if report.all_ok() {
        Ok(())
    } else {
        Err((3, report.violations.join("\n")))
    }
}

fn emit_json<T: Serialize>(value: &T, target: &str) -> Result<(), (u8, String)> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    if target == "-" {
        println!("{text}");
        Ok(())
    } else {
        std::fs::write(target, text + "\n").map_err(|e| (2, format!("cannot write {target}: {e}")))
    }
}

fn print_presentation(p: &Presentation) {
    let vars: Vec<&str> = p.ring.names().iter().map(|s| s.as_str()).collect();
    println!("{} in k[{}]:", p.name.label(), vars.join(", "));
    if p.ideal.is_zero() {
        println!("  (zero ideal)");
    }
    for g in p.ideal.generators() {
        println!("  {g}");
    }
}

fn all_presentations(config: &VectorConfig) -> Result<Vec<Presentation>, otk::Error> {
    Ok(vec![
        build_j0(config)?,
        build_qh(config)?,
        build_j1(config)?,
        build_oth(config)?,
        build_ot(config)?,
        build_sr(config, false),
        build_sr(config, true),
        build_aot(config, false)?,
        build_aot(config, true)?,
        build_toric_i1(config)?,
    ])
}

#[derive(Serialize)]
struct CircuitsOut {
    circuits: Vec<Vec<usize>>,
    signed: Vec<SignedOut>,
    broken_circuits: Vec<Vec<usize>>,
    independence_f: Vec<u64>,
    independence_h: Vec<i64>,
    broken_circuit_f: Vec<u64>,
    broken_circuit_h: Vec<i64>,
}

#[derive(Serialize)]
struct SignedOut {
    circuit: Vec<usize>,
    plus: Vec<usize>,
    minus: Vec<usize>,
}

#[derive(Serialize)]
struct PsiRow {
    internal_degree: u32,
    cohomological_degree: u32,
    dim_source: usize,
    dim_target: usize,
    dim_kernel: usize,
}

fn one_based(s: &[usize]) -> Vec<usize> {
    s.iter().map(|&i| i + 1).collect()
}

fn run() -> Result<(), (u8, String)> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Validate { input, json } => {
            let config = load_config(&input)?;
            let report = config.validate_linear();
            if let Some(target) = json {
                emit_json(&report, &target)?;
            } else {
                println!("full rank:   {}", report.full_rank);
                println!("no co-loops: {}", report.no_coloops);
                println!("unimodular:  {}", report.unimodular);
                println!("simple:      {}", report.simple);
                for v in &report.violations {
                    println!("violation: {v}");
                }
            }
            if report.all_ok() {
                Ok(())
            } else {
                Err((3, "configuration fails the input assumptions".to_string()))
            }
        }
        Cmd::Circuits { input, json } => {
            let config = load_config(&input)?;
            let circuits = config.circuits();
            let signed: Vec<SignedOut> = if config.theta.is_some() {
                config
                    .signed_circuits()
                    .map_err(|e| (3, e.to_string()))?
                    .iter()
                    .map(|sc| SignedOut {
                        circuit: one_based(&sc.circuit),
                        plus: one_based(&sc.plus),
                        minus: one_based(&sc.minus),
                    })
                    .collect()
            } else {
                Vec::new()
            };
            let ind = config.complex_summary(ComplexKind::Independence);
            let bc = config.complex_summary(ComplexKind::BrokenCircuit);
            let out = CircuitsOut {
                circuits: circuits.iter().map(|c| one_based(c)).collect(),
                signed,
                broken_circuits: config.broken_circuits().iter().map(|c| one_based(c)).collect(),
                independence_f: ind.f_vector.clone(),
                independence_h: ind.h_vector.clone(),
                broken_circuit_f: bc.f_vector.clone(),
                broken_circuit_h: bc.h_vector.clone(),
            };
            if let Some(target) = json {
                emit_json(&out, &target)?;
            } else {
                println!("circuits: {:?}", out.circuits);
                for s in &out.signed {
                    println!("signed: {:?} = +{:?} -{:?}", s.circuit, s.plus, s.minus);
                }
                println!("broken circuits: {:?}", out.broken_circuits);
                println!("independence  f = {:?}, h = {:?}", out.independence_f, out.independence_h);
                println!("broken-circuit f = {:?}, h = {:?}", out.broken_circuit_f, out.broken_circuit_h);
            }
            Ok(())
        }
        Cmd::Presentations { input, json } => {
            let config = load_config(&input)?;
            let pres = all_presentations(&config).map_err(|e| (3, e.to_string()))?;
            if let Some(target) = json {
                let out: BTreeMap<String, Vec<String>> = pres
                    .iter()
                    .map(|p| {
                        (
                            p.name.label().to_string(),
                            p.ideal.generators().iter().map(|g| g.to_string()).collect(),
                        )
                    })
                    .collect();
                emit_json(&out, &target)?;
            } else {
                for p in &pres {
                    print_presentation(p);
                }
            }
            Ok(())
        }
        Cmd::Hilbert { input, json } => {
            let config = load_config(&input)?;
            let n = config.n();
            let mut series: BTreeMap<String, String> = BTreeMap::new();
            let order_u = MonomialOrder::deglex(n);
            let order_uh = MonomialOrder::deglex(n + 1);
            let entries: Vec<(&str, Presentation, &MonomialOrder)> = vec![
                ("OT", build_ot(&config).map_err(|e| (3, e.to_string()))?, &order_u),
                ("OTh", build_oth(&config).map_err(|e| (3, e.to_string()))?, &order_uh),
                ("SRind", build_sr(&config, false), &order_u),
                ("SRbc", build_sr(&config, true), &order_u),
                ("H", build_j0(&config).map_err(|e| (3, e.to_string()))?, &order_uh),
            ];
            for (label, p, order) in &entries {
                let hs = hilbert_series_quotient(&p.ideal, order)
                    .map_err(|e| (3, e.to_string()))?;
                series.insert(label.to_string(), hs.display());
            }
            if let Some(target) = json {
                emit_json(&series, &target)?;
            } else {
                for (label, s) in &series {
                    println!("{label}: {s}");
                }
            }
            Ok(())
        }
        Cmd::PsiReport { input, max_degree, json } => {
            let config = load_config(&input)?;
            require_valid(&config)?;
            let bound = max_degree.unwrap_or_else(|| default_degree_bound(&config));
            let map = build_psi(&config, bound).map_err(|e| (1, e.to_string()))?;
            let dims = kernel_dimensions(&map);
            let rows: Vec<PsiRow> = map
                .degrees
                .iter()
                .zip(&dims)
                .map(|(slice, &k)| PsiRow {
                    internal_degree: slice.degree,
                    cohomological_degree: 2 * slice.degree,
                    dim_source: slice.source_basis.len(),
                    dim_target: slice.target_basis.len(),
                    dim_kernel: k,
                })
                .collect();
            if let Some(target) = json {
                emit_json(&rows, &target)?;
            } else {
                println!("deg  2*deg  dim H  dim R'  dim Ker");
                for r in &rows {
                    println!(
                        "{:>3}  {:>5}  {:>5}  {:>6}  {:>7}",
                        r.internal_degree,
                        r.cohomological_degree,
                        r.dim_source,
                        r.dim_target,
                        r.dim_kernel
                    );
                }
            }
            Ok(())
        }
        Cmd::VerifyAll { input, max_degree, orders, seed, skip, json } => {
            let config = load_config(&input)?;
            require_valid(&config)?;
            for s in &skip {
                if !CHECK_NAMES.contains(&s.as_str()) {
                    return Err((2, format!("unknown check `{s}`; known: {CHECK_NAMES:?}")));
                }
            }
            let opts = VerifyOptions {
                max_degree,
                order_samples: orders,
                seed,
                skip,
            };
            let report = verify_all(&config, &opts).map_err(|e| (1, e.to_string()))?;
            render_report(&report, json.as_deref())?;
            if report.all_pass() {
                Ok(())
            } else {
                Err((1, "verification failed".to_string()))
            }
        }
        Cmd::Tp1 { json } => {
            let config = tp1_config();
            let report = verify_tp1().map_err(|e| (1, e.to_string()))?;
            if json.is_none() {
                for p in all_presentations(&config).map_err(|e| (3, e.to_string()))? {
                    print_presentation(&p);
                }
            }
            render_report(&report, json.as_deref())?;
            if report.all_pass() {
                println!("PASS");
                Ok(())
            } else {
                Err((1, "verification failed".to_string()))
            }
        }
    }
}

fn render_report(report: &VerificationReport, json: Option<&str>) -> Result<(), (u8, String)> {
    if let Some(target) = json {
        emit_json(report, target)
    } else {
        for c in &report.checks {
            let extra = match &c.witness {
                Some(w) => format!("  [{w}]"),
                None => String::new(),
            };
            let degs = match &c.degrees {
                Some(d) if !d.is_empty() => {
                    format!(" (internal degrees 0..{}, cohomological 0..{})",
                        d.last().unwrap(), 2 * d.last().unwrap())
                }
                _ => String::new(),
            };
            println!("{:<42} {}{}{} ({} ms)", c.name, c.status, degs, extra, c.millis);
        }
        for (label, s) in &report.series {
            println!("Hilb({label}) = {s}");
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
