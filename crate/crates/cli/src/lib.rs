//! Command-line front end: verification suites and one-shot computations
//! with machine-readable reports.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use modbraid::braid::parse_word;
use modbraid::burau::burau_matrix;
use modbraid::chain::{check_chain_map, check_closed_forms, Cell2};
use modbraid::coset::{todd_coxeter, EnumStatus};
use modbraid::ext::{
    bar_cocycle, ext_mul, normal_generators_b4, omega_splitting_check, schreier_bound,
    search_splitting_zn, verify_relation_table, elem_from_word, ExtElement, RelationReport,
    RingTag, TableId,
};
use modbraid::perm::Permutation;
use modbraid::presentation::{
    build_presentation, enumerate_zn, parse_presentation, Builtin, Presentation,
};
use modbraid::burau::in_level;
use modbraid::strand::PairVector;

pub const SCHEMA_VERSION: u32 = 1;
const DEFAULT_COSET_LIMIT: usize = 1_000_000;

#[derive(Parser)]
#[command(name = "modbraid", version, about = "braid-group quotient computations and verifications")]
struct Cli {
    /// Write the machine-readable report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; exit 0 only if every case passes.
    Verify {
        #[command(subcommand)]
        suite: VerifyCmd,
    },
    /// Evaluate a single object and print it as JSON.
    Compute {
        #[command(subcommand)]
        what: ComputeCmd,
    },
    /// Coset enumeration over the trivial subgroup.
    CosetEnum(CosetEnumArgs),
    /// Elementwise enumeration.
    Enumerate {
        #[command(subcommand)]
        what: EnumerateCmd,
    },
    /// Closed-form bounds.
    Bound {
        #[command(subcommand)]
        what: BoundCmd,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// All relation-table rows over all index tuples.
    Tables {
        #[arg(long)]
        n: usize,
        /// Scale for the t-twisted table; all of 1, 2, 3 when omitted.
        #[arg(long)]
        t: Option<i64>,
    },
    /// Associativity of the group law on section triples plus cocycle
    /// normalization (the operational cocycle condition).
    Cocycle {
        #[arg(long)]
        n: usize,
    },
    /// The comparison chain map commutes with the differentials.
    Chainmap {
        #[arg(long)]
        n: usize,
    },
    /// Closed forms phi and kappa against the section cocycle, and the mod 2
    /// reduction identity.
    ClosedForms {
        #[arg(long)]
        n: usize,
    },
    /// The explicit splitting of the t-scaled extension for even t.
    Split {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: i64,
    },
    /// Exhaustive non-splitting search for the mod 4 braid group.
    Nonsplit {
        #[arg(long)]
        n: usize,
    },
    /// The normal generators of the level 4 congruence subgroup die mod 4
    /// and lie in the Burau kernel.
    B4Generators {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum ComputeCmd {
    /// Integral cocycle value on one 2-cell.
    Phi {
        #[arg(long, value_name = "CELL")]
        cell: String,
        #[arg(long)]
        n: usize,
    },
    /// Mod 2 cocycle value on one 2-cell.
    Kappa {
        #[arg(long, value_name = "CELL")]
        cell: String,
        #[arg(long)]
        n: usize,
    },
    /// Bar cocycle of the normalized section at a pair of permutations.
    Cocycle {
        /// One-line image notation, e.g. [2,3,1].
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[arg(long)]
        n: usize,
        /// Integral scale; ignored under --z2.
        #[arg(long, default_value_t = 1)]
        t: i64,
        /// Evaluate in the mod 2 kernel instead.
        #[arg(long)]
        z2: bool,
    },
    /// Burau image at t = -1 of a braid word.
    Burau {
        #[arg(long, value_name = "W")]
        word: String,
        #[arg(long)]
        n: usize,
        /// Modulus; 0 means exact integers.
        #[arg(long = "mod", value_name = "M", default_value_t = 0)]
        modulus: u64,
    },
}

#[derive(Args)]
struct CosetEnumArgs {
    /// Presentation file in the DSL.
    #[arg(long, value_name = "FILE", conflicts_with = "builtin")]
    pres: Option<PathBuf>,
    /// Built-in presentation, e.g. pres11:4, table3:3, table2:3:2, sn4:4.
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
    /// Maximum number of coset-table rows before aborting.
    #[arg(long, value_name = "K")]
    limit: Option<usize>,
}

#[derive(Subcommand)]
enum EnumerateCmd {
    /// Order of the mod 4 braid group by closure under the group law.
    Zn {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum BoundCmd {
    /// Schreier-index bound on generating sets of the level 4 subgroup.
    Schreier {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Serialize, Debug)]
pub struct Case {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Serialize, Debug)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Serialize, Debug)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<i64>,
    pub cases: Vec<Case>,
    pub summary: Summary,
    pub version: String,
}

impl VerificationReport {
    fn new(suite: &str, n: Option<usize>, t: Option<i64>, cases: Vec<Case>) -> Self {
        let passed = cases.iter().filter(|c| c.pass).count();
        let failed = cases.len() - passed;
        VerificationReport {
            schema: SCHEMA_VERSION,
            suite: suite.to_string(),
            n,
            t,
            cases,
            summary: Summary {
                total: passed + failed,
                passed,
                failed,
            },
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }
}

fn cases_of(report: &RelationReport) -> Vec<Case> {
    report
        .rows
        .iter()
        .map(|r| Case {
            id: format!("{} [{} @ {}]", report.table, r.relation, r.indices),
            pass: r.pass,
            detail: if r.pass {
                String::new()
            } else {
                format!("lhs={} rhs={}", r.lhs, r.rhs)
            },
        })
        .collect()
}

/// Errors that indicate misuse of the command line rather than a failed
/// verification.
#[derive(Debug)]
struct UsageError(String);

type RunOutcome = Result<(VerificationReport, String), UsageError>;

fn usage<T: std::fmt::Display>(e: T) -> UsageError {
    UsageError(e.to_string())
}

/// Degrees outside 1..=50 are rejected up front; every computation here is
/// meant for small n and the internal types assume modest indices.
fn check_degree(n: usize) -> Result<(), UsageError> {
    if (1..=50).contains(&n) {
        Ok(())
    } else {
        Err(usage(format!("degree n={n} out of the supported range 1..=50")))
    }
}

/// Entry point shared by the binary and the tests: returns the process exit
/// code (0 all green, 1 verification failure, 2 usage error).
pub fn run(args: &[&str]) -> i32 {
    let mut argv = vec!["modbraid"];
    argv.extend(args);
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with zero exit.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = dispatch(&cli.command);
    match outcome {
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            2
        }
        Ok((report, stdout_text)) => {
            if !stdout_text.is_empty() {
                println!("{stdout_text}");
            }
            for case in report.cases.iter().filter(|c| !c.pass) {
                println!("FAIL {}: {}", case.id, case.detail);
            }
            println!(
                "{}: {} cases, {} passed, {} failed",
                report.suite, report.summary.total, report.summary.passed, report.summary.failed
            );
            if let Some(path) = &cli.json {
                let body = serde_json::to_string_pretty(&report)
                    .expect("report serialization is infallible");
                if let Err(e) = fs::write(path, body) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
            }
            if report.all_pass() {
                0
            } else {
                1
            }
        }
    }
}

fn dispatch(command: &Command) -> RunOutcome {
    match command {
        Command::Verify { suite } => verify(suite),
        Command::Compute { what } => compute(what),
        Command::CosetEnum(args) => coset_enum(args),
        Command::Enumerate {
            what: EnumerateCmd::Zn { n },
        } => {
            check_degree(*n)?;
            let order = enumerate_zn(*n).map_err(usage)?;
            let report = VerificationReport::new(
                "enumerate-zn",
                Some(*n),
                None,
                vec![Case {
                    id: format!("order of the mod 4 braid group, n={n}"),
                    pass: true,
                    detail: order.to_string(),
                }],
            );
            Ok((report, order.to_string()))
        }
        Command::Bound {
            what: BoundCmd::Schreier { n },
        } => {
            if !(2..=13).contains(n) {
                return Err(usage(
                    "the bound is stated for n >= 2 and exceeds 128 bits past n = 13",
                ));
            }
            let bound = schreier_bound(*n);
            let report = VerificationReport::new(
                "bound-schreier",
                Some(*n),
                None,
                vec![Case {
                    id: format!("schreier bound, n={n}"),
                    pass: true,
                    detail: bound.to_string(),
                }],
            );
            Ok((report, bound.to_string()))
        }
    }
}

fn verify(cmd: &VerifyCmd) -> RunOutcome {
    match cmd {
        VerifyCmd::Tables { n, t } => {
            check_degree(*n)?;
            let n = *n;
            let scales: Vec<i64> = match t {
                Some(t) if *t >= 1 => vec![*t],
                Some(t) => return Err(usage(format!("scale must be positive, got {t}"))),
                None => vec![1, 2, 3],
            };
            let mut cases = cases_of(&verify_relation_table(TableId::One, n));
            for t in &scales {
                cases.extend(cases_of(&verify_relation_table(TableId::Two { t: *t }, n)));
            }
            cases.extend(cases_of(&verify_relation_table(TableId::Three, n)));
            Ok((
                VerificationReport::new("verify-tables", Some(n), *t, cases),
                String::new(),
            ))
        }
        VerifyCmd::Cocycle { n } => {
            check_degree(*n)?;
            let n = *n;
            if n > 4 {
                return Err(usage(format!(
                    "associativity sweep is exhaustive over S_n^3; n={n} exceeds the n<=4 guard"
                )));
            }
            let mut cases = Vec::new();
            let id = Permutation::identity(n);
            for ring in [RingTag::GN, RingTag::Z2] {
                let mut normalized = true;
                for p in Permutation::all(n) {
                    normalized &= bar_cocycle(&p, &id, ring).map_err(usage)?.is_zero();
                    normalized &= bar_cocycle(&id, &p, ring).map_err(usage)?.is_zero();
                }
                cases.push(Case {
                    id: format!("cocycle normalized, ring {ring}"),
                    pass: normalized,
                    detail: String::new(),
                });
                let elems: Vec<ExtElement> = Permutation::all(n)
                    .into_iter()
                    .map(|p| ExtElement {
                        perm: p,
                        vec: PairVector::zero(n, ring.kernel_ring()),
                        ring,
                    })
                    .collect();
                let mut ok = 0u64;
                let mut bad = 0u64;
                for a in &elems {
                    for b in &elems {
                        let ab = ext_mul(a, b).map_err(usage)?;
                        for c in &elems {
                            let lhs = ext_mul(&ab, c).map_err(usage)?;
                            let rhs = ext_mul(a, &ext_mul(b, c).map_err(usage)?).map_err(usage)?;
                            if lhs == rhs {
                                ok += 1;
                            } else {
                                bad += 1;
                            }
                        }
                    }
                }
                cases.push(Case {
                    id: format!("associativity on section triples, ring {ring}"),
                    pass: bad == 0,
                    detail: format!("{ok} triples pass, {bad} fail"),
                });
            }
            Ok((
                VerificationReport::new("verify-cocycle", Some(n), None, cases),
                String::new(),
            ))
        }
        VerifyCmd::Chainmap { n } => {
            check_degree(*n)?;
            let report = check_chain_map(*n);
            Ok((
                VerificationReport::new("verify-chainmap", Some(*n), None, cases_of(&report)),
                String::new(),
            ))
        }
        VerifyCmd::ClosedForms { n } => {
            check_degree(*n)?;
            let report = check_closed_forms(*n);
            Ok((
                VerificationReport::new("verify-closed-forms", Some(*n), None, cases_of(&report)),
                String::new(),
            ))
        }
        VerifyCmd::Split { n, t } => {
            check_degree(*n)?;
            let report = omega_splitting_check(*n, *t).map_err(usage)?;
            Ok((
                VerificationReport::new("verify-split", Some(*n), Some(*t), cases_of(&report)),
                String::new(),
            ))
        }
        VerifyCmd::Nonsplit { n } => {
            check_degree(*n)?;
            let found = search_splitting_zn(*n).map_err(usage)?;
            let pass = found.is_none() || *n <= 1;
            let case = Case {
                id: format!("no homomorphic lift assignment exists, n={n}"),
                pass,
                detail: match &found {
                    None => "exhausted all assignments".to_string(),
                    Some(a) if *n <= 1 => format!("trivial splitting: {:?}", a.vecs),
                    Some(a) => format!("unexpected splitting: {:?}", a.vecs),
                },
            };
            Ok((
                VerificationReport::new("verify-nonsplit", Some(*n), None, vec![case]),
                String::new(),
            ))
        }
        VerifyCmd::B4Generators { n } => {
            check_degree(*n)?;
            let mut cases = Vec::new();
            for w in normal_generators_b4(*n) {
                let trivial = elem_from_word(&w, RingTag::Z2)
                    .map(|e| e.is_identity())
                    .unwrap_or(false);
                let level = in_level(&w, 4);
                cases.push(Case {
                    id: format!("generator {w}"),
                    pass: trivial && level,
                    detail: format!("trivial mod 4: {trivial}, in level 4: {level}"),
                });
            }
            Ok((
                VerificationReport::new("verify-b4-generators", Some(*n), None, cases),
                String::new(),
            ))
        }
    }
}

fn compute(cmd: &ComputeCmd) -> RunOutcome {
    match cmd {
        ComputeCmd::Phi { cell, n } | ComputeCmd::Kappa { cell, n } => {
            check_degree(*n)?;
            let parsed: Cell2 = cell.parse().map_err(usage)?;
            if parsed.max_index() > *n {
                return Err(usage(format!("cell {cell} exceeds degree {n}")));
            }
            let mod2 = matches!(cmd, ComputeCmd::Kappa { .. });
            let value = if mod2 {
                modbraid::chain::kappa(&parsed, *n)
            } else {
                modbraid::chain::phi(&parsed, *n)
            };
            let text = serde_json::to_string(&value).expect("pair vectors serialize");
            let report = VerificationReport::new(
                if mod2 { "compute-kappa" } else { "compute-phi" },
                Some(*n),
                None,
                vec![Case {
                    id: cell.clone(),
                    pass: true,
                    detail: text.clone(),
                }],
            );
            Ok((report, text))
        }
        ComputeCmd::Cocycle { p, q, n, t, z2 } => {
            check_degree(*n)?;
            let p: Permutation = p.parse().map_err(usage)?;
            let q: Permutation = q.parse().map_err(usage)?;
            if p.degree() != *n || q.degree() != *n {
                return Err(usage("permutation degrees must match --n"));
            }
            let ring = if *z2 {
                RingTag::Z2
            } else {
                if *t < 1 {
                    return Err(usage("scale must be at least 1"));
                }
                RingTag::Z { scale: *t }
            };
            let value = bar_cocycle(&p, &q, ring).map_err(usage)?;
            let text = serde_json::to_string(&value).expect("pair vectors serialize");
            let report = VerificationReport::new(
                "compute-cocycle",
                Some(*n),
                if *z2 { None } else { Some(*t) },
                vec![Case {
                    id: format!("c({p}, {q})"),
                    pass: true,
                    detail: text.clone(),
                }],
            );
            Ok((report, text))
        }
        ComputeCmd::Burau { word, n, modulus } => {
            check_degree(*n)?;
            let w = parse_word(word, *n).map_err(usage)?;
            let m = burau_matrix(&w, *modulus);
            let text = serde_json::to_string(&m).expect("matrices serialize");
            let report = VerificationReport::new(
                "compute-burau",
                Some(*n),
                None,
                vec![Case {
                    id: word.clone(),
                    pass: true,
                    detail: text.clone(),
                }],
            );
            Ok((report, text))
        }
    }
}

fn parse_builtin(name: &str) -> Result<Presentation, UsageError> {
    let parts: Vec<&str> = name.split(':').collect();
    let arity = |k: usize| -> Result<(), UsageError> {
        if parts.len() == k + 1 {
            Ok(())
        } else {
            Err(usage(format!("builtin {name:?} expects {k} parameter(s)")))
        }
    };
    let num = |i: usize| -> Result<usize, UsageError> {
        parts[i]
            .parse::<usize>()
            .map_err(|_| usage(format!("bad number in builtin {name:?}")))
    };
    if parts.len() >= 2 {
        check_degree(
            parts[1]
                .parse::<usize>()
                .map_err(|_| usage(format!("bad number in builtin {name:?}")))?,
        )?;
    }
    let built = match parts[0] {
        "sn3" => {
            arity(1)?;
            Builtin::Sn3 { n: num(1)? }
        }
        "sn4" => {
            arity(1)?;
            Builtin::Sn4 { n: num(1)? }
        }
        "artin2" => {
            arity(1)?;
            Builtin::Artin2 { n: num(1)? }
        }
        "bn5" => {
            arity(1)?;
            Builtin::Bn5 { n: num(1)? }
        }
        "table1" => {
            arity(1)?;
            Builtin::Table1 { n: num(1)? }
        }
        "table2" => {
            arity(2)?;
            let t = num(2)? as i64;
            if t < 1 {
                return Err(usage("table2 scale must be at least 1"));
            }
            Builtin::Table2 { n: num(1)?, t }
        }
        "table3" => {
            arity(1)?;
            Builtin::Table3 { n: num(1)? }
        }
        "pres11" => {
            arity(1)?;
            Builtin::Pres11 { n: num(1)? }
        }
        other => return Err(usage(format!("unknown builtin {other:?}"))),
    };
    Ok(build_presentation(built))
}

fn coset_enum(args: &CosetEnumArgs) -> RunOutcome {
    let pres = match (&args.pres, &args.builtin) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            parse_presentation(&text).map_err(usage)?
        }
        (None, Some(name)) => parse_builtin(name)?,
        _ => return Err(usage("exactly one of --pres or --builtin is required")),
    };
    let limit = args
        .limit
        .or_else(|| {
            std::env::var("MODBRAID_COSET_LIMIT")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_COSET_LIMIT);
    let result = todd_coxeter(&pres, limit).map_err(usage)?;
    let (pass, detail, text) = match result.order {
        Some(order) => (
            true,
            format!("order {order}"),
            format!("order: {order}"),
        ),
        None => (
            false,
            format!("aborted at coset limit {limit}"),
            format!("aborted: coset limit {limit} exceeded"),
        ),
    };
    debug_assert!(matches!(
        result.table.status,
        EnumStatus::Complete | EnumStatus::Aborted
    ));
    let report = VerificationReport::new(
        "coset-enum",
        None,
        None,
        vec![Case {
            id: "enumeration completed".to_string(),
            pass,
            detail,
        }],
    );
    Ok((report, text))
}
