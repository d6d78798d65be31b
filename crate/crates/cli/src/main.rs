mod dsl;

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use axgroup_core::axioms::{axiom, axiom_set_kinds, AxiomKind, FastVerifier};
use axgroup_core::efgame::{ef_game, EfConfig, EfError};
use axgroup_core::fol::{evaluate_counted, parse, Assignment, Budget, EvalError, Formula};
use axgroup_core::groups::{canonical_primes, DEFAULT_SEARCH_NODES, SAMPLING_SEED};
use axgroup_core::structure::{
    centralizer, classify_with_budget, commutator_set, derived_subgroup, involutive_automorphisms,
    reconstruct_with_budget, schur_zassenhaus_complement, StructureError,
};
use axgroup_core::transform::relativize;
use axgroup_core::{build_group, Elem, ElemSet, FiniteGroup, GroupError, OddPrime};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Finite dihedral products, first-order sentences about groups, and the
/// reconstruction of `∏ D_p` from its axioms.
#[derive(Parser)]
#[command(name = "axgroup", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Evaluation steps, search nodes or game positions, depending on the command.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Seed for sampled checks (associativity of large table files).
    #[arg(long, global = true, default_value_t = SAMPLING_SEED)]
    seed: u64,
    /// Include elapsed times in the report.
    #[arg(long, global = true)]
    timing: bool,
    /// Run generic evaluation even when it is expected to be slow.
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Fast,
    Generic,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula in a group.
    Eval {
        #[arg(long)]
        group: String,
        /// Formula text, or `@path`.
        #[arg(long)]
        formula: String,
        /// Values of free variables as element indices, e.g. `x=1`.
        #[arg(long = "assign", value_name = "VAR=INDEX")]
        assign: Vec<String>,
    },
    /// Relativize a sentence to the commutator set.
    Relativize {
        #[arg(long)]
        formula: String,
    },
    /// Print the axiom sentences for a set of primes.
    Axioms {
        #[arg(long, default_value = "3,5,7")]
        primes: String,
    },
    /// Check the axioms in a group.
    VerifyAxioms {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "3,5,7")]
        primes: String,
        #[arg(long, value_enum, default_value_t = Mode::Fast)]
        mode: Mode,
    },
    /// The set of commutators `{[a,b]}`.
    Commutators {
        #[arg(long)]
        group: String,
    },
    /// Centralizer of a set of elements (default: the commutator set).
    Centralizer {
        #[arg(long)]
        group: String,
        /// Comma-separated element indices.
        #[arg(long)]
        elements: Option<String>,
    },
    /// Involutive automorphisms of an abelian group.
    Inv {
        #[arg(long)]
        group: String,
    },
    /// Schur–Zassenhaus complement of a normal Hall subgroup (default: the
    /// commutator set).
    Complement {
        #[arg(long)]
        group: String,
        /// Comma-separated element indices of the normal subgroup.
        #[arg(long)]
        normal: Option<String>,
    },
    /// Recognize `∏_{p ∈ S} D_p` step by step.
    Reconstruct {
        #[arg(long, default_value = "3,5,7")]
        primes: String,
        #[arg(long)]
        group: String,
    },
    /// Screen every `C_S ⋊ (Z/2)^|S|` with the axioms.
    Classify {
        #[arg(long, default_value = "3,5,7")]
        primes: String,
    },
    /// Bounded-rank Ehrenfeucht–Fraïssé game.
    Ef {
        #[arg(long)]
        group_a: String,
        #[arg(long)]
        group_b: String,
        #[arg(long)]
        rank: usize,
    },
}

enum Failure {
    Input(String),
    Budget(String),
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::BudgetExceeded(_) => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<StructureError> for Failure {
    fn from(e: StructureError) -> Self {
        match e {
            StructureError::Group(g) => g.into(),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::BudgetExceeded(_) => Failure::Budget(e.to_string()),
            EvalError::Unbound(_) => Failure::Input(e.to_string()),
        }
    }
}

impl From<EfError> for Failure {
    fn from(e: EfError) -> Self {
        match e {
            EfError::BudgetExceeded(_) => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn input(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

/// A finished command: JSON report, text rendering and verdict.
struct Report {
    json: Value,
    text: String,
    holds: bool,
}

/// Rank at which generic evaluation of large groups needs `--force`.
const GENERIC_RANK_LIMIT: usize = 4;
const GENERIC_ORDER_LIMIT: usize = 20;

struct Ctx {
    budget: Option<u64>,
    seed: u64,
    timing: bool,
    force: bool,
}

impl Ctx {
    fn group(&self, text: &str) -> Result<FiniteGroup, Failure> {
        let descriptor = dsl::parse_descriptor(text, self.seed).map_err(input)?;
        Ok(build_group(&descriptor)?.with_name(descriptor.to_string()))
    }

    fn eval_budget(&self) -> Budget {
        self.budget.map_or(Budget::DEFAULT, Budget)
    }

    fn search_nodes(&self) -> u64 {
        self.budget.unwrap_or(DEFAULT_SEARCH_NODES)
    }

    fn guard_generic(&self, group: &FiniteGroup, formula: &Formula) -> Result<(), Failure> {
        let rank = formula.quantifier_rank();
        if !self.force && group.order() > GENERIC_ORDER_LIMIT && rank >= GENERIC_RANK_LIMIT {
            return Err(Failure::Input(format!(
                "generic evaluation of a rank-{rank} sentence on a group of order {} is refused \
                 without --force",
                group.order()
            )));
        }
        Ok(())
    }
}

fn read_formula(text: &str) -> Result<Formula, Failure> {
    let source = match text.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| input(format!("cannot read `{path}`: {e}")))?,
        None => text.to_string(),
    };
    parse(source.trim()).map_err(input)
}

fn read_primes(text: &str) -> Result<Vec<OddPrime>, Failure> {
    let values = text
        .split(',')
        .map(|s| s.trim().parse::<u32>().map_err(|_| input(format!("`{s}` is not a prime"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(canonical_primes(&values)?)
}

fn read_elements(group: &FiniteGroup, text: &str) -> Result<ElemSet, Failure> {
    let mut elems = Vec::new();
    for s in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let i: u32 = s.parse().map_err(|_| input(format!("`{s}` is not an element index")))?;
        if i as usize >= group.order() {
            return Err(input(format!("element {i} is out of range for order {}", group.order())));
        }
        elems.push(Elem(i));
    }
    Ok(ElemSet::new(group.order(), elems))
}

fn labels(group: &FiniteGroup, set: impl IntoIterator<Item = Elem>) -> Vec<String> {
    set.into_iter().map(|x| group.label(x)).collect()
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let ctx = Ctx { budget: cli.budget, seed: cli.seed, timing: cli.timing, force: cli.force };
    match &cli.command {
        Command::Eval { group, formula, assign } => {
            let g = ctx.group(group)?;
            let phi = read_formula(formula)?;
            let mut assignment = Assignment::new();
            for a in assign {
                let (var, value) = a.split_once('=').ok_or_else(|| input(format!("bad assignment `{a}`")))?;
                let set = read_elements(&g, value)?;
                let [x] = set.as_slice() else {
                    return Err(input(format!("bad assignment `{a}`")));
                };
                assignment.insert(var.trim().to_string(), *x);
            }
            ctx.guard_generic(&g, &phi)?;
            let (value, steps) = evaluate_counted(&g, &phi, &assignment, ctx.eval_budget())?;
            Ok(Report {
                json: json!({
                    "group": g.name(),
                    "formula": phi.to_string(),
                    "quantifier_rank": phi.quantifier_rank(),
                    "value": value,
                    "steps": steps,
                }),
                text: format!("{value}"),
                holds: value,
            })
        }
        Command::Relativize { formula } => {
            let phi = read_formula(formula)?;
            let psi = relativize(&phi).map_err(input)?;
            Ok(Report {
                json: json!({
                    "input": phi.to_string(),
                    "output": psi.to_string(),
                    "input_bound_variables": phi.bound_variable_count(),
                    "output_bound_variables": psi.bound_variable_count(),
                }),
                text: psi.to_string(),
                holds: true,
            })
        }
        Command::Axioms { primes } => {
            let kinds = axiom_set_kinds(&read_primes(primes)?).map_err(input)?;
            let rows: Vec<(AxiomKind, Formula)> = kinds.into_iter().map(|k| (k, axiom(k))).collect();
            Ok(Report {
                json: json!({
                    "axioms": rows.iter().map(|(k, f)| json!({
                        "axiom": k.name(),
                        "sentence": f.to_string(),
                        "quantifier_rank": f.quantifier_rank(),
                    })).collect::<Vec<_>>(),
                }),
                text: rows.iter().map(|(_, f)| f.to_string()).collect::<Vec<_>>().join("\n"),
                holds: true,
            })
        }
        Command::VerifyAxioms { group, primes, mode } => {
            let g = ctx.group(group)?;
            let kinds = axiom_set_kinds(&read_primes(primes)?).map_err(input)?;
            let mode_name = match mode {
                Mode::Fast => "fast",
                Mode::Generic => "generic",
            };
            if *mode == Mode::Generic {
                for &kind in &kinds {
                    ctx.guard_generic(&g, &axiom(kind))?;
                }
            }
            let verifier = (*mode == Mode::Fast).then(|| FastVerifier::new(&g));
            let mut results = Vec::new();
            let mut lines = Vec::new();
            let mut all = true;
            for kind in kinds {
                let start = Instant::now();
                let value = match &verifier {
                    Some(v) => v.verify(kind),
                    None => evaluate_counted(&g, &axiom(kind), &Assignment::new(), ctx.eval_budget())?.0,
                };
                all &= value;
                let mut row = json!({ "axiom": kind.name(), "mode": mode_name, "value": value });
                if ctx.timing {
                    row["elapsed"] = json!(start.elapsed().as_secs_f64());
                }
                results.push(row);
                lines.push(format!("{}: {value}", kind.name()));
            }
            Ok(Report {
                json: json!({ "group": g.name(), "mode": mode_name, "results": results, "all_hold": all }),
                text: lines.join("\n"),
                holds: all,
            })
        }
        Command::Commutators { group } => {
            let g = ctx.group(group)?;
            let k = commutator_set(&g);
            let derived = derived_subgroup(&g);
            let closed = k == derived;
            Ok(Report {
                json: json!({
                    "group": g.name(),
                    "commutators": labels(&g, k.iter()),
                    "size": k.len(),
                    "derived_subgroup_size": derived.len(),
                    "is_subgroup": closed,
                }),
                text: format!("{} commutators: {}", k.len(), labels(&g, k.iter()).join(" ")),
                holds: true,
            })
        }
        Command::Centralizer { group, elements } => {
            let g = ctx.group(group)?;
            let set = match elements {
                Some(text) => read_elements(&g, text)?,
                None => commutator_set(&g),
            };
            let c = centralizer(&g, &set);
            Ok(Report {
                json: json!({
                    "group": g.name(),
                    "set": labels(&g, set.iter()),
                    "centralizer": labels(&g, c.iter()),
                    "self_centralizing": c == set,
                }),
                text: labels(&g, c.iter()).join(" "),
                holds: true,
            })
        }
        Command::Inv { group } => {
            let g = ctx.group(group)?;
            let inv = involutive_automorphisms(&g, ctx.search_nodes())?;
            let maps: Vec<Value> = inv
                .automorphisms
                .iter()
                .map(|a| json!(a.mapping().iter().map(|x| x.0).collect::<Vec<_>>()))
                .collect();
            let text = match &inv.units {
                Some(units) => {
                    units.iter().map(|u| format!("x -> x^{u}")).collect::<Vec<_>>().join("\n")
                }
                None => maps.iter().map(Value::to_string).collect::<Vec<_>>().join("\n"),
            };
            Ok(Report {
                json: json!({
                    "group": g.name(),
                    "count": inv.len(),
                    "units": inv.units,
                    "mappings": maps,
                }),
                text,
                holds: true,
            })
        }
        Command::Complement { group, normal } => {
            let g = ctx.group(group)?;
            let n = match normal {
                Some(text) => read_elements(&g, text)?,
                None => commutator_set(&g),
            };
            match schur_zassenhaus_complement(&g, &n) {
                Ok(h) => Ok(Report {
                    json: json!({
                        "group": g.name(),
                        "normal": labels(&g, n.iter()),
                        "complement": labels(&g, h.subgroup.iter()),
                        "section": labels(&g, h.section.iter().copied()),
                        "coset_representatives": labels(&g, h.quotient.representatives.iter().copied()),
                    }),
                    text: labels(&g, h.subgroup.iter()).join(" "),
                    holds: true,
                }),
                Err(
                    e @ (StructureError::NotNormal
                    | StructureError::NotAbelian
                    | StructureError::NotCoprime { .. }),
                ) => Ok(Report {
                    json: json!({
                        "group": g.name(),
                        "normal": labels(&g, n.iter()),
                        "complement": Value::Null,
                        "reason": e.to_string(),
                    }),
                    text: format!("no complement: {e}"),
                    holds: false,
                }),
                Err(e) => Err(e.into()),
            }
        }
        Command::Reconstruct { primes, group } => {
            let g = ctx.group(group)?;
            let report = reconstruct_with_budget(&read_primes(primes)?, &g, ctx.search_nodes());
            if report.budget_exhausted {
                return Err(Failure::Budget(format!(
                    "isomorphism search budget exhausted at {:?}",
                    report.failed_step
                )));
            }
            let text = match report.failed_step {
                None => "isomorphic: true".to_string(),
                Some(step) => format!("isomorphic: false (failed at {step:?})"),
            };
            Ok(Report { json: json!(report), text, holds: report.isomorphic })
        }
        Command::Classify { primes } => {
            let rows = classify_with_budget(&read_primes(primes)?, ctx.search_nodes())?;
            let passing = rows.iter().filter(|r| r.axioms_passed).count();
            let agree = rows.iter().all(|r| r.axioms_passed == r.isomorphic);
            let text = rows
                .iter()
                .map(|r| format!("{}: axioms {}, isomorphic {}", r.description, r.axioms_passed, r.isomorphic))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Report {
                json: json!({
                    "rows": rows,
                    "homomorphisms": rows.len(),
                    "passing": passing,
                    "axioms_match_isomorphism": agree,
                }),
                text,
                holds: agree,
            })
        }
        Command::Ef { group_a, group_b, rank } => {
            let (a, b) = (ctx.group(group_a)?, ctx.group(group_b)?);
            let mut config = EfConfig::default();
            if let Some(n) = ctx.budget {
                config.max_positions = n;
            }
            let outcome = ef_game(&a, &b, *rank, &config)?;
            Ok(Report {
                json: json!(outcome),
                text: format!("{}", outcome.equivalent),
                holds: outcome.equivalent,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            match cli.format {
                Format::Json => {
                    if cli.timing {
                        report.json["elapsed"] = json!(start.elapsed().as_secs_f64());
                    }
                    // serde_json's map is ordered by key, so output is stable.
                    println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable"));
                }
                Format::Text => {
                    println!("{}", report.text);
                    if cli.timing {
                        println!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
                    }
                }
            }
            ExitCode::from(if report.holds { 0 } else { 1 })
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(message)) => {
            eprintln!("budget exceeded: {message}");
            ExitCode::from(3)
        }
    }
}
