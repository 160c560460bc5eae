//! Command-line front end for `finsemi-core`.
//!
//! Exit statuses: 0 success, 1 usage/input error, 2 capability bound
//! exceeded, 3 counterexample or anomaly found by `scan-conjecture`.

pub mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use finsemi_core::algebra::{element_report, verify_semiring};
use finsemi_core::congruence::{all_congruences, is_congruence_simple};
use finsemi_core::constructions::{
    box_product, end1, g_of, subsemiring, subsemiring_generated, two_element, v_of, y_of,
};
use finsemi_core::enumeration::{
    classify, conjecture_scan_with, CaseLabel, ConjectureStatus, Enumerator, SearchConstraints,
};
use finsemi_core::format::{parse_algebra, AlgebraFile};
use finsemi_core::ideals::{is_bi_ideal_simple, is_ideal_simple};
use finsemi_core::{Error, FiniteSemiring};

pub use report::{Payload, Report, SemiringTables, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAPABILITY: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "finsemi", version, about = "Finite semiring toolkit")]
struct Cli {
    /// Print the structured report as JSON on standard output.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sub {
    /// Subsemiring generated by the maps with at most two values.
    Y,
    /// Maps above some map with at most two values.
    G,
    /// All of End1(L).
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify the semiring axioms and report special elements.
    Check { file: PathBuf },
    /// List all congruences (order <= 8).
    Congruences { file: PathBuf },
    /// Congruence-, ideal- and bi-ideal-simplicity.
    Simple { file: PathBuf },
    /// Classify a congruence-simple, nilpotent-free semiring with an
    /// absorbing element.
    Classify { file: PathBuf },
    /// Build a semiring: t<k>, v <semigroup>, box <s1> <s2>, end1 <semilattice>.
    Construct {
        what: String,
        inputs: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "all")]
        sub: Sub,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Enumerate semirings of a given order up to isomorphism.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        absorbing: bool,
        #[arg(long)]
        no_nilpotents: bool,
        #[arg(long)]
        congruence_simple: bool,
        #[arg(long)]
        commutative: bool,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        jobs: Option<usize>,
        /// Lift the default order bounds.
        #[arg(long)]
        allow_long_runs: bool,
    },
    /// Classify every instance up to the given order.
    ScanConjecture {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        allow_long_runs: bool,
    },
}

/// Result of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Option<Report>,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capability { .. } => EXIT_CAPABILITY,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Runs one command line; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == EXIT_OK {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Outcome {
                code,
                report: None,
                stdout,
                stderr,
            };
        }
    };

    let start = Instant::now();
    let result = execute(&cli.command);
    let elapsed = start.elapsed().as_millis() as u64;
    let (code, report, mut stderr) = match result {
        Ok((code, report)) => (code, Some(report), String::new()),
        Err(f) => (f.code, None, format!("error: {}\n", f.message)),
    };
    let report = report.map(|mut r| {
        if cli.timings {
            r.timings_ms = Some(elapsed);
        }
        r
    });
    let stdout = match &report {
        Some(r) if cli.json => r.to_json() + "\n",
        Some(r) => r.render_human(),
        None => String::new(),
    };
    if code == EXIT_COUNTEREXAMPLE {
        stderr.push_str("counterexample or anomaly found\n");
    }
    Outcome {
        code,
        report,
        stdout,
        stderr,
    }
}

fn read_algebra(path: &Path) -> Result<AlgebraFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_algebra(&text).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })
}

fn read_semiring(path: &Path) -> Result<FiniteSemiring, Failure> {
    Ok(read_algebra(path)?.into_semiring()?)
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

fn execute(command: &Command) -> Result<(i32, Report), Failure> {
    match command {
        Command::Check { file } => check(file),
        Command::Congruences { file } => {
            let s = read_semiring(file)?;
            let all = all_congruences(&s)?;
            let simple = is_congruence_simple(&s);
            let mut verdicts = vec![
                Verdict::new("congruences", all.len()),
                Verdict::new("congruence-simple", simple),
            ];
            for p in &all {
                verdicts.push(Verdict::new("blocks", format!("{:?}", p.blocks())));
            }
            Ok((
                EXIT_OK,
                Report {
                    command: vec!["congruences".into(), file.display().to_string()],
                    verdicts,
                    timings_ms: None,
                    payload: Payload::Congruences {
                        order: s.order(),
                        congruences: all.iter().map(|p| p.labels().to_vec()).collect(),
                        congruence_simple: simple,
                    },
                },
            ))
        }
        Command::Simple { file } => {
            let s = read_semiring(file)?;
            let (c, i, b) = (
                is_congruence_simple(&s),
                is_ideal_simple(&s),
                is_bi_ideal_simple(&s),
            );
            Ok((
                EXIT_OK,
                Report {
                    command: vec!["simple".into(), file.display().to_string()],
                    verdicts: vec![
                        Verdict::new("congruence-simple", c),
                        Verdict::new("ideal-simple", i),
                        Verdict::new("bi-ideal-simple", b),
                    ],
                    timings_ms: None,
                    payload: Payload::Simple {
                        congruence_simple: c,
                        ideal_simple: i,
                        bi_ideal_simple: b,
                    },
                },
            ))
        }
        Command::Classify { file } => {
            let s = read_semiring(file)?;
            let verdict = classify(&s)?;
            let mut verdicts: Vec<Verdict> = verdict
                .case_labels
                .iter()
                .map(|l| Verdict::new("case", describe_case(l)))
                .collect();
            verdicts.push(Verdict::new(
                "conjecture",
                describe_status(&verdict.conjecture_status),
            ));
            for n in &verdict.notes {
                verdicts.push(Verdict::new("note", n));
            }
            Ok((
                EXIT_OK,
                Report {
                    command: vec!["classify".into(), file.display().to_string()],
                    verdicts,
                    timings_ms: None,
                    payload: Payload::Classify { verdict },
                },
            ))
        }
        Command::Construct {
            what,
            inputs,
            sub,
            out,
        } => construct(what, inputs, *sub, out.as_deref()),
        Command::Enumerate {
            order,
            absorbing,
            no_nilpotents,
            congruence_simple,
            commutative,
            count_only,
            jobs,
            allow_long_runs,
        } => {
            let constraints = SearchConstraints {
                require_mult_absorbing: *absorbing,
                forbid_nontrivial_nilpotents: *no_nilpotents,
                require_congruence_simple: *congruence_simple,
                require_commutative_mul: *commutative,
            };
            let found = Enumerator::new(*order, constraints)
                .jobs(*jobs)
                .allow_long_runs(*allow_long_runs)
                .run()?;
            let mut command = vec!["enumerate".to_string(), "--order".into(), order.to_string()];
            for (flag, on) in [
                ("--absorbing", *absorbing),
                ("--no-nilpotents", *no_nilpotents),
                ("--congruence-simple", *congruence_simple),
                ("--commutative", *commutative),
                ("--count-only", *count_only),
                ("--allow-long-runs", *allow_long_runs),
            ] {
                if on {
                    command.push(flag.into());
                }
            }
            let semirings = (!count_only).then(|| {
                found
                    .iter()
                    .map(|s| SemiringTables {
                        add: s.add_table().clone(),
                        mul: s.mul_table().clone(),
                    })
                    .collect()
            });
            Ok((
                EXIT_OK,
                Report {
                    command,
                    verdicts: vec![Verdict::new("count", found.len())],
                    timings_ms: None,
                    payload: Payload::Enumerate {
                        order: *order,
                        constraints,
                        count: found.len(),
                        semirings,
                    },
                },
            ))
        }
        Command::ScanConjecture {
            max_order,
            jobs,
            allow_long_runs,
        } => {
            let report = conjecture_scan_with(*max_order, *jobs, *allow_long_runs)?;
            let mut verdicts = Vec::new();
            for o in &report.orders {
                verdicts.push(Verdict::new(
                    format!("order {}", o.order),
                    format!(
                        "{} instances: T4 {}, T8 {}, fields {}, V(G) {}, counterexamples {}",
                        o.total, o.t4, o.t8, o.fields, o.v_of_groups, o.counterexamples
                    ),
                ));
            }
            for i in &report.instances {
                verdicts.push(Verdict::new(
                    "instance",
                    format!(
                        "order {} add {:?} mul {:?}: {}",
                        i.order,
                        i.add.rows(),
                        i.mul.rows(),
                        describe_status(&i.verdict.conjecture_status)
                    ),
                ));
            }
            verdicts.push(Verdict::new(
                "counterexamples",
                if report.has_counterexample() {
                    report.counterexamples.len().to_string()
                } else {
                    "none".into()
                },
            ));
            let anomalies = report
                .instances
                .iter()
                .filter(|i| !i.verdict.notes.is_empty())
                .count();
            verdicts.push(Verdict::new("anomalies", anomalies));
            let code = if report.has_counterexample() || anomalies > 0 {
                EXIT_COUNTEREXAMPLE
            } else {
                EXIT_OK
            };
            let mut command = vec![
                "scan-conjecture".to_string(),
                "--max-order".into(),
                max_order.to_string(),
            ];
            if *allow_long_runs {
                command.push("--allow-long-runs".into());
            }
            Ok((
                code,
                Report {
                    command,
                    verdicts,
                    timings_ms: None,
                    payload: Payload::Scan { report },
                },
            ))
        }
    }
}

fn check(file: &Path) -> Result<(i32, Report), Failure> {
    let (add, mul) = match read_algebra(file)? {
        AlgebraFile::Semiring { add, mul } => (add, mul),
        other => {
            return Err(Failure {
                code: EXIT_USAGE,
                message: format!("expected a semiring file, found a {}", other.kind()),
            })
        }
    };
    let axioms = verify_semiring(&add, &mul)?;
    let mut verdicts = vec![Verdict::new(
        "axioms",
        if axioms.ok { "ok" } else { "violated" },
    )];
    for v in &axioms.violations {
        verdicts.push(Verdict::new(
            "violation",
            format!("{} at {:?}", v.axiom, v.witness),
        ));
    }
    let elements = if axioms.ok {
        let s = FiniteSemiring::new(add.clone(), mul)?;
        let r = element_report(&s);
        verdicts.extend([
            Verdict::new("w", opt(r.mult_absorbing)),
            Verdict::new("additively absorbing", opt(r.add_absorbing)),
            Verdict::new("o_S", opt(r.bi_absorbing)),
            Verdict::new("0_S", opt(r.zero)),
            Verdict::new("multiplicative identity", opt(r.mult_neutral)),
            Verdict::new("additive identity", opt(r.add_neutral)),
            Verdict::new(
                "non-trivial nilpotents",
                match &r.nilpotents {
                    None => "n/a (no absorbing element)".to_string(),
                    Some(v) if v.is_empty() => "none".into(),
                    Some(v) => format!("{v:?}"),
                },
            ),
            Verdict::new("additively idempotent", r.add_idempotent),
            Verdict::new("additively cancellative", r.add_cancellative),
            Verdict::new("ring", r.is_ring),
        ]);
        Some(r)
    } else {
        None
    };
    Ok((
        EXIT_OK,
        Report {
            command: vec!["check".into(), file.display().to_string()],
            verdicts,
            timings_ms: None,
            payload: Payload::Check {
                order: add.order(),
                axioms,
                elements,
            },
        },
    ))
}

fn construct(
    what: &str,
    inputs: &[PathBuf],
    sub: Sub,
    out: Option<&Path>,
) -> Result<(i32, Report), Failure> {
    let usage = |m: &str| Failure {
        code: EXIT_USAGE,
        message: m.to_string(),
    };
    let arity = |k: usize| {
        if inputs.len() == k {
            Ok(())
        } else {
            Err(usage(&format!("construct {what} takes {k} input file(s)")))
        }
    };
    let mut command = vec!["construct".to_string(), what.to_string()];
    command.extend(inputs.iter().map(|p| p.display().to_string()));
    let mut maps = None;
    let semiring = match what {
        "v" => {
            arity(1)?;
            v_of(&read_algebra(&inputs[0])?.into_semigroup()?)?
        }
        "box" => {
            arity(2)?;
            box_product(&read_semiring(&inputs[0])?, &read_semiring(&inputs[1])?)?
        }
        "end1" => {
            arity(1)?;
            let e = end1(&read_algebra(&inputs[0])?.into_semilattice()?)?;
            command.push(format!(
                "--sub={}",
                match sub {
                    Sub::Y => "y",
                    Sub::G => "g",
                    Sub::All => "all",
                }
            ));
            let (s, elements) = match sub {
                Sub::All => (e.semiring.clone(), (0..e.maps.len()).collect()),
                Sub::Y => {
                    let r = subsemiring_generated(&e.semiring, &y_of(&e))?;
                    (r.semiring, r.elements)
                }
                Sub::G => {
                    let r = subsemiring(&e.semiring, &g_of(&e))?;
                    (r.semiring, r.elements)
                }
            };
            maps = Some(elements.iter().map(|&i| e.maps[i].clone()).collect());
            s
        }
        t if t.starts_with('t') => {
            arity(0)?;
            let k: usize = t[1..]
                .parse()
                .map_err(|_| usage(&format!("unknown construction {t}")))?;
            two_element(k)?
        }
        other => return Err(usage(&format!("unknown construction {other}"))),
    };
    let text = AlgebraFile::from(&semiring).to_text();
    if let Some(path) = out {
        std::fs::write(path, &text).map_err(|e| usage(&format!("{}: {e}", path.display())))?;
    }
    let axioms_ok = verify_semiring(semiring.add_table(), semiring.mul_table())?.ok;
    let mut verdicts = vec![
        Verdict::new("order", semiring.order()),
        Verdict::new("axioms", if axioms_ok { "ok" } else { "violated" }),
        Verdict::new("o_S", opt(semiring.bi_absorbing())),
    ];
    if out.is_none() {
        verdicts.push(Verdict::new("algebra", format!("\n{}", text.trim_end())));
    }
    Ok((
        EXIT_OK,
        Report {
            command,
            verdicts,
            timings_ms: None,
            payload: Payload::Construct {
                algebra: text,
                order: semiring.order(),
                axioms_ok,
                bi_absorbing: semiring.bi_absorbing(),
                maps,
            },
        },
    ))
}

fn describe_case(l: &CaseLabel) -> String {
    match l {
        CaseLabel::T4OrT8 => "isomorphic to T4 or T8".into(),
        CaseLabel::FiniteField { q } => format!("FiniteField({q})"),
        CaseLabel::SimpleRingNoZeroDivisors => "simple ring without zero divisors".into(),
        CaseLabel::AddIdempotentBiAbsorbing => {
            "additively idempotent with bi-absorbing w and no zero divisors".into()
        }
        CaseLabel::Case5Preconditions => "S + S = S, 2x = o_S, no zero divisors".into(),
    }
}

fn describe_status(s: &ConjectureStatus) -> String {
    match s {
        ConjectureStatus::InListT4 => "T4".into(),
        ConjectureStatus::InListT8 => "T8".into(),
        ConjectureStatus::InListField { q } => format!("Field({q})"),
        ConjectureStatus::InListVG { group, abelian } => format!(
            "V(G), G a{} group of order {}",
            if *abelian {
                "n abelian"
            } else {
                " non-abelian"
            },
            group.order()
        ),
        ConjectureStatus::Counterexample => "counterexample".into(),
    }
}
