use clap::{Parser, Subcommand};
use crystarr::arrangement::{enumerate_chambers, RootSet};
use crystarr::axioms::{arrangement_equivalence, check_additive, check_crystallographic};
use crystarr::catalog;
use crystarr::io::{
    axiom_report_to_json, chamber_graph_to_json, root_set_from_json, root_set_to_json,
    scheme_to_json, verification_flags,
};
use crystarr::scheme::{
    build_scheme, is_connected, is_simply_connected, scheme_equivalence, verify_root_system,
    verify_scheme_axioms,
};
use serde_json::json;
use std::process::ExitCode;

const EXIT_PASS: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "crystarr",
    about = "Verify crystallographic simplicial arrangements and build their Weyl groupoids",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the crystallographic axiom (I) and the additive axiom (A)
    Verify {
        /// Input file or catalog:NAME
        input: String,
        /// Emit the reports as JSON
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all chambers and dump the chamber graph as JSON
    Chambers {
        input: String,
    },
    /// Build the Cartan scheme and dump it with verification flags
    Scheme {
        input: String,
        /// Base chamber id (default: seed chamber 0)
        #[arg(long, default_value_t = 0)]
        chamber: usize,
        /// Basis ordering as comma-separated 0-based positions, e.g. 1,0,2
        #[arg(long)]
        ordering: Option<String>,
    },
    /// Decide arrangement and scheme equivalence of two inputs
    Equiv {
        input1: String,
        input2: String,
        #[arg(long)]
        json: bool,
    },
    /// Print a built-in root set as JSON
    Catalog {
        name: String,
    },
}

fn load_input(spec: &str) -> Result<RootSet, String> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        return catalog::lookup(name)
            .map(|e| e.roots)
            .map_err(|e| e.to_string());
    }
    let text = std::fs::read_to_string(spec).map_err(|e| format!("{}: {}", spec, e))?;
    root_set_from_json(&text).map_err(|e| e.to_string())
}

fn parse_ordering(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| e.to_string()))
        .collect()
}

fn run() -> Result<u8, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { input, json } => {
            let roots = load_input(&input)?;
            let graph = enumerate_chambers(&roots).map_err(|e| e.to_string())?;
            let cryst = check_crystallographic(&roots, &graph).map_err(|e| e.to_string())?;
            let additive = check_additive(&roots, &graph).map_err(|e| e.to_string())?;
            let passed = cryst.passed && additive.passed;
            if json {
                let out = json!({
                    "crystallographic": axiom_report_to_json(&cryst),
                    "additive": axiom_report_to_json(&additive),
                    "passed": passed,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                for report in [&cryst, &additive] {
                    let verdict = if report.passed { "pass" } else { "FAIL" };
                    println!("axiom ({}): {}", report.axiom.letter(), verdict);
                    for w in &report.witnesses {
                        match &w.coefficients {
                            Some(cs) => {
                                let rendered: Vec<String> =
                                    cs.iter().map(|c| c.to_string()).collect();
                                println!(
                                    "  chamber {} [{}]: root {} has coefficients ({})",
                                    w.chamber_id,
                                    w.sign_vector,
                                    w.root,
                                    rendered.join(", ")
                                );
                            }
                            None => println!(
                                "  chamber {} [{}]: root {} is not a sum of two positive roots",
                                w.chamber_id, w.sign_vector, w.root
                            ),
                        }
                    }
                }
            }
            Ok(if passed { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Chambers { input } => {
            let roots = load_input(&input)?;
            let graph = enumerate_chambers(&roots).map_err(|e| e.to_string())?;
            let out = chamber_graph_to_json(&roots, &graph);
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(EXIT_PASS)
        }
        Command::Scheme {
            input,
            chamber,
            ordering,
        } => {
            let roots = load_input(&input)?;
            let graph = enumerate_chambers(&roots).map_err(|e| e.to_string())?;
            let ordering = match ordering {
                Some(text) => Some(parse_ordering(&text)?),
                None => None,
            };
            let scheme = build_scheme(&roots, &graph, chamber, ordering.as_deref())
                .map_err(|e| e.to_string())?;
            let axiom_report = verify_scheme_axioms(&scheme);
            let rs_report = verify_root_system(&scheme);
            let connected = is_connected(&scheme);
            let (sc, _) = is_simply_connected(&scheme);
            let flags = verification_flags(&axiom_report, &rs_report, connected, sc);
            let out = scheme_to_json(&scheme, &flags);
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            let all_pass = flags.values().all(|&v| v);
            Ok(if all_pass { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Equiv {
            input1,
            input2,
            json,
        } => {
            let r1 = load_input(&input1)?;
            let r2 = load_input(&input2)?;
            let psi = arrangement_equivalence(&r1, &r2).map_err(|e| e.to_string())?;
            let scheme_pair = {
                let g1 = enumerate_chambers(&r1).map_err(|e| e.to_string())?;
                let g2 = enumerate_chambers(&r2).map_err(|e| e.to_string())?;
                let s1 = build_scheme(&r1, &g1, 0, None).map_err(|e| e.to_string())?;
                let s2 = build_scheme(&r2, &g2, 0, None).map_err(|e| e.to_string())?;
                scheme_equivalence(&s1, &s2)
            };
            let equivalent = psi.is_some();
            if json {
                let psi_json = psi.as_ref().map(|m| {
                    (0..m.dim())
                        .map(|i| {
                            (0..m.dim())
                                .map(|j| crystarr::io::rational_to_value(m.entry(i, j)))
                                .collect::<Vec<_>>()
                        })
                        .collect::<Vec<_>>()
                });
                let out = json!({
                    "arrangement_equivalent": equivalent,
                    "psi": psi_json,
                    "scheme_equivalent": scheme_pair.is_some(),
                    "phi0": scheme_pair.as_ref().map(|(p0, _)| p0),
                    "phi1": scheme_pair.as_ref().map(|(_, p1)| p1),
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!(
                    "arrangements: {}",
                    if equivalent { "equivalent" } else { "not equivalent" }
                );
                println!(
                    "schemes: {}",
                    if scheme_pair.is_some() {
                        "equivalent"
                    } else {
                        "not equivalent"
                    }
                );
            }
            Ok(if equivalent && scheme_pair.is_some() {
                EXIT_PASS
            } else {
                EXIT_FAIL
            })
        }
        Command::Catalog { name } => {
            let entry = catalog::lookup(&name).map_err(|e| e.to_string())?;
            let out = root_set_to_json(&entry.roots);
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(EXIT_PASS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {}", message);
            ExitCode::from(EXIT_ERROR)
        }
    }
}
