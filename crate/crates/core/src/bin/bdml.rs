//! Command-line front end: prove/check/search/experiment/fixtures.
//!
//! Exit codes: 0 = affirmative verdict or pass, 1 = negative verdict or
//! fail, 2 = usage or parse error, 3 = budget exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bd_modal::formula::{parse, parse_sequent, Input};
use bd_modal::harness::{self, fixtures, ExperimentConfig};
use bd_modal::oracle::{find_countermodel, valid_on_frame, EnumerationBudget, OracleError, Validity};
use bd_modal::semantics::{eval, parse_model, print_model};
use bd_modal::tableau::{prove_with_limits, Limits, TableauError, Verdict};

#[derive(Parser)]
#[command(
    name = "bdml",
    version,
    about = "Four-valued Kripke model checking, analytic-cut proving and validity experiments"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Prove or refute a sequent in the [*]/I calculus.
    Prove {
        /// Sequent such as "Ip & Iq |- I(p | q)"; @path reads a file.
        sequent: String,
        /// Cap on rule applications before giving up.
        #[arg(long)]
        max_steps: Option<u64>,
        /// Print the closed proof tree on success.
        #[arg(long)]
        emit_proof: bool,
        /// Print the countermodel in the model text format on refutation.
        #[arg(long)]
        emit_model: bool,
    },
    /// Evaluate a formula at a world of a model. Exit 0 iff it is
    /// T-supported there.
    Check {
        /// Model text; @path reads a file.
        model: String,
        /// World name, e.g. w0.
        world: String,
        /// Formula; @path reads a file.
        formula: String,
    },
    /// Brute-force countermodel search; with --frame, a decision procedure
    /// on that frame.
    Search {
        /// Sequent; @path reads a file.
        sequent: String,
        #[arg(long, default_value_t = 3)]
        max_worlds: usize,
        /// Comma-separated atom list; defaults to the sequent's atoms.
        #[arg(long)]
        atoms: Option<String>,
        /// Restrict to the frame of this model file (decides validity on it).
        #[arg(long)]
        frame: Option<String>,
        /// Skip isomorphic duplicate frames.
        #[arg(long)]
        modulo_iso: bool,
        /// Cap on valuations per frame.
        #[arg(long, default_value_t = 1 << 32)]
        model_cap: u64,
    },
    /// Run one of the named experiments, or "all".
    Experiment {
        /// One of: figures, no-validities, duality, knowledge, ignorance,
        /// definability, separations, remarks, agreement — or "all".
        name: String,
        #[arg(long, default_value_t = 3)]
        max_worlds: usize,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 500)]
        formula_samples: usize,
        #[arg(long, default_value_t = 100)]
        rule_samples: usize,
        /// Sample this many sequents in the agreement sweep instead of the
        /// full battery.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0xBD)]
        seed: u64,
        /// Emit the machine-readable report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print the reference models, or write them as .model files.
    Fixtures {
        /// Print only this fixture.
        name: Option<String>,
        /// Write one <name>.model file per fixture into this directory.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

fn load_arg(arg: &str) -> Result<String, String> {
    if let Some(path) = arg.strip_prefix('@') {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    } else {
        Ok(arg.to_string())
    }
}

fn usage_err(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn budget_err(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("budget exceeded: {msg}");
    ExitCode::from(3)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Prove { sequent, max_steps, emit_proof, emit_model } => {
            let text = match load_arg(&sequent) {
                Ok(t) => t,
                Err(e) => return usage_err(e),
            };
            let seq = match parse_sequent(text.trim()) {
                Ok(s) => s,
                Err(e) => return usage_err(e),
            };
            let mut limits = Limits::default();
            if let Some(n) = max_steps {
                limits.max_steps = n;
            }
            match prove_with_limits(&seq, &limits) {
                Ok(Verdict::Proved(tree)) => {
                    println!("proved: {seq}");
                    if emit_proof {
                        print!("{}", tree.render());
                    }
                    ExitCode::SUCCESS
                }
                Ok(Verdict::Refuted(r)) => {
                    let m = &r.countermodel;
                    println!(
                        "refuted: {seq} — countermodel with {} worlds, evaluate at w{}",
                        m.model.world_count(),
                        m.world
                    );
                    if emit_model {
                        print!("{}", print_model(&m.model));
                    }
                    ExitCode::from(1)
                }
                Err(TableauError::Unsupported { connective }) => usage_err(format!(
                    "`{connective}` is outside the calculus; use `bdml search` for such sequents"
                )),
                Err(TableauError::ResourceLimit { steps, .. }) => {
                    budget_err(format!("gave up after {steps} steps"))
                }
                Err(e) => usage_err(e),
            }
        }
        Cmd::Check { model, world, formula } => {
            let text = match load_arg(&model) {
                Ok(t) => t,
                Err(e) => return usage_err(e),
            };
            let m = match parse_model(&text) {
                Ok(m) => m,
                Err(e) => return usage_err(e),
            };
            let Some(w) = m.frame().world_by_name(&world) else {
                return usage_err(format!("unknown world `{world}`"));
            };
            let ftext = match load_arg(&formula) {
                Ok(t) => t,
                Err(e) => return usage_err(e),
            };
            let f = match parse(ftext.trim()) {
                Ok(Input::Formula(f)) => f,
                Ok(Input::Sequent(_)) => return usage_err("expected a formula, got a sequent"),
                Err(e) => return usage_err(e),
            };
            let st = eval(&m, w, &f).expect("world checked");
            println!("{} (sup_t={}, sup_f={})", st.value(), st.sup_t, st.sup_f);
            if st.sup_t {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Cmd::Search { sequent, max_worlds, atoms, frame, modulo_iso, model_cap } => {
            let text = match load_arg(&sequent) {
                Ok(t) => t,
                Err(e) => return usage_err(e),
            };
            let seq = match parse_sequent(text.trim()) {
                Ok(s) => s,
                Err(e) => return usage_err(e),
            };
            let atom_vec: Vec<String> = match &atoms {
                Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
                None => seq.atoms(),
            };
            if let Some(frame_arg) = frame {
                let text = match load_arg(&frame_arg) {
                    Ok(t) => t,
                    Err(e) => return usage_err(e),
                };
                let fm = match parse_model(&text) {
                    Ok(m) => m,
                    Err(e) => return usage_err(e),
                };
                return match valid_on_frame(fm.frame(), &seq, &atom_vec, model_cap) {
                    Ok(Validity::Valid) => {
                        println!("valid on the given frame: {seq}");
                        ExitCode::SUCCESS
                    }
                    Ok(Validity::Refuted(pm)) => {
                        println!("refuted at w{}:", pm.world);
                        print!("{}", print_model(&pm.model));
                        ExitCode::from(1)
                    }
                    Err(e @ OracleError::Overflow { .. }) => budget_err(e),
                    Err(e) => usage_err(e),
                };
            }
            let budget = EnumerationBudget {
                max_worlds,
                atoms: atom_vec,
                modulo_iso,
                model_cap,
                ..EnumerationBudget::default()
            };
            match find_countermodel(&seq, &budget) {
                Ok(Some(pm)) => {
                    println!("countermodel at w{}:", pm.world);
                    print!("{}", print_model(&pm.model));
                    ExitCode::from(1)
                }
                Ok(None) => {
                    println!("none up to budget (max {max_worlds} worlds): {seq}");
                    ExitCode::SUCCESS
                }
                Err(e @ OracleError::Overflow { .. }) => budget_err(e),
                Err(e @ OracleError::TooManyWorlds { .. }) => budget_err(e),
            }
        }
        Cmd::Experiment {
            name,
            max_worlds,
            max_size,
            trials,
            formula_samples,
            rule_samples,
            sample,
            seed,
            json,
        } => {
            let cfg = ExperimentConfig {
                max_worlds,
                max_size,
                trials,
                formula_samples,
                rule_samples,
                agreement_sample: sample,
                seed,
                model_cap: 1 << 32,
            };
            let reports = if name == "all" {
                harness::run_all(&cfg)
            } else {
                match harness::run_experiment(&name, &cfg) {
                    Some(r) => vec![r],
                    None => {
                        return usage_err(format!(
                            "unknown experiment `{name}`; known: {} or all",
                            harness::EXPERIMENT_NAMES.join(", ")
                        ))
                    }
                }
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&reports).expect("serializable"));
            } else {
                for r in &reports {
                    print!("{}", r.render());
                }
            }
            if reports.iter().all(|r| r.passed()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Cmd::Fixtures { name, dir } => {
            let all = fixtures::all();
            let selected: Vec<_> = match &name {
                Some(n) => match all.iter().find(|f| f.name == *n) {
                    Some(f) => vec![f.clone()],
                    None => return usage_err(format!("unknown fixture `{n}`")),
                },
                None => all.clone(),
            };
            if let Some(dir) = dir {
                if let Err(e) = fs::create_dir_all(&dir) {
                    return usage_err(e);
                }
                for f in &selected {
                    let path = dir.join(format!("{}.model", f.name));
                    if let Err(e) = fs::write(&path, f.text) {
                        return usage_err(e);
                    }
                    println!("wrote {}", path.display());
                }
            } else {
                for f in &selected {
                    println!("# {}", f.name);
                    print!("{}", f.text);
                    println!();
                }
            }
            ExitCode::SUCCESS
        }
    }
}
