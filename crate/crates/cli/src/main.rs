//! `weakid`: verify, normalize, enumerate and certify weak G-identities.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;
use weakid_core::certify::{certify_basis_with, verify_instances, CertifyOptions, IdentityResult, Suite};
use weakid_core::group::Mat2Const;
use weakid_core::rewrite::{normalize_with, NormalizeOptions};
use weakid_core::{
    cyc_embed, enumerate_b, parse, quotient_dimension_oracle, rules_for, CycNum, Error, GPolynomial, GroupAction,
    GroupKind, GroupSpec, Multidegree,
};

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(name = "weakid", version, about = "Exact checks of weak G-identities for (M2(C), sl2(C))")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that expressions or a named suite evaluate to zero.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Suite name: lemma6, z2, prop6-graded, lemma9, lemma13 (aliases cyc, z2, graded, dih, eps).
        #[arg(long)]
        suite: Option<String>,
        /// Also check under random conjugations by invertible matrices over Q(i).
        #[arg(long)]
        seed: Option<u64>,
        /// Number of random conjugations when --seed is given.
        #[arg(long, default_value_t = 10)]
        trials: u32,
        expressions: Vec<String>,
    },
    /// Rewrite an expression to its normal form.
    Normalize {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1_000_000)]
        step_budget: u64,
        expression: String,
    },
    /// List the normal-form monomials of one multidegree.
    Enumerate {
        #[command(flatten)]
        common: Common,
        /// Variable indices with multiplicity, e.g. 1,1,2.
        #[arg(long, value_parser = parse_multidegree)]
        multidegree: Multidegree,
    },
    /// Certify the normal-form basis up to a degree bound.
    Certify {
        #[command(flatten)]
        common: Common,
        /// Degree bound; 4 for cyclic groups of order at most 6, otherwise 3.
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long, default_value_t = 1_000_000)]
        step_budget: u64,
        /// Check every rewrite step by evaluation.
        #[arg(long)]
        check_steps: bool,
        /// Write the JSON certificate to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Brute-force dimension of one multihomogeneous component.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_multidegree)]
        multidegree: Multidegree,
    },
}

#[derive(Args)]
struct Common {
    /// Zn:<n>, Dn:<n> (n >= 3), A4, S4 or A5.
    #[arg(long, value_parser = parse_group)]
    group: GroupSpec,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_group(s: &str) -> Result<GroupSpec, String> {
    s.parse::<GroupSpec>().map_err(|e| e.to_string())
}

fn parse_multidegree(s: &str) -> Result<Multidegree, String> {
    let vars: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
    match vars {
        Ok(v) if !v.is_empty() && v.iter().all(|&x| x > 0) => Ok(Multidegree::from_vars(v)),
        _ => Err(format!("expected a comma list of positive variable indices, got `{s}`")),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::UnknownOperator { .. }
        | Error::OutsideAlphabet { .. }
        | Error::InvalidGroup(_)
        | Error::UnsupportedGroup { .. }
        | Error::UnknownSuite(_) => EXIT_USAGE,
        Error::StepBudget { .. } | Error::Budget(_) => EXIT_BUDGET,
        _ => EXIT_INTERNAL,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cmd: Command) -> weakid_core::Result<u8> {
    match cmd {
        Command::Verify { common, suite, seed, trials, expressions } => {
            verify(&common, suite.as_deref(), seed, trials, &expressions)
        }
        Command::Normalize { common, step_budget, expression } => {
            let sp = common.group;
            let f = parse(&expression, &sp)?;
            let opts = NormalizeOptions { step_budget, ..Default::default() };
            let nf = normalize_with(&f, &rules_for(&sp), opts)?;
            match common.format {
                Format::Text => println!("{nf}"),
                Format::Json => println!(
                    "{}",
                    json!({"group": sp.to_string(), "input": expression, "normal_form": nf.to_string()})
                ),
            }
            Ok(0)
        }
        Command::Enumerate { common, multidegree } => {
            let sp = common.group;
            let b = enumerate_b(&sp, &multidegree);
            match common.format {
                Format::Text => {
                    for m in &b {
                        println!("{m}");
                    }
                    eprintln!("{} monomials", b.len());
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "group": sp.to_string(),
                        "degree": multidegree.to_list(),
                        "count": b.len(),
                        "monomials": b.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    })
                ),
            }
            Ok(0)
        }
        Command::Certify { common, degree, step_budget, check_steps, output } => {
            let sp = common.group;
            let bound = degree.unwrap_or(match sp.kind {
                GroupKind::Cyclic(n) if n <= 6 => 4,
                _ => 3,
            });
            let opts = CertifyOptions { step_budget, check_soundness: check_steps, ..Default::default() };
            let cert = certify_basis_with(&sp, bound, &opts)?;
            if let Some(path) = &output {
                if let Err(e) = std::fs::write(path, cert.to_json() + "\n") {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return Ok(EXIT_INTERNAL);
                }
            }
            match common.format {
                Format::Json => println!("{}", cert.to_json()),
                Format::Text => {
                    println!("group {} (conductor {}), degree <= {}", cert.group, cert.conductor, bound);
                    let bad_ids: Vec<&str> =
                        cert.identities.iter().filter(|r| !r.ok).map(|r| r.tag.as_str()).collect();
                    println!("identities: {} checked, {} failed", cert.identities.len(), bad_ids.len());
                    for r in &cert.multidegrees {
                        println!(
                            "  {:?}: |B| = {}, rank = {}, oracle = {}, spanning {}{}",
                            r.degree,
                            r.b_count,
                            r.rank,
                            r.oracle_dim,
                            if r.spanning_ok { "ok" } else { "FAILED" },
                            r.witness.as_deref().map(|w| format!(" ({w})")).unwrap_or_default()
                        );
                    }
                    println!("verdict: {} ({} ms)", cert.verdict, cert.runtime_ms);
                }
            }
            Ok(if cert.passed() { 0 } else { EXIT_FALSE })
        }
        Command::Oracle { common, multidegree } => {
            let sp = common.group;
            let d = quotient_dimension_oracle(&sp, &multidegree)?;
            match common.format {
                Format::Text => println!("{d}"),
                Format::Json => println!(
                    "{}",
                    json!({"group": sp.to_string(), "degree": multidegree.to_list(), "dimension": d})
                ),
            }
            Ok(0)
        }
    }
}

fn verify(
    common: &Common,
    suite: Option<&str>,
    seed: Option<u64>,
    trials: u32,
    expressions: &[String],
) -> weakid_core::Result<u8> {
    let sp = common.group;
    let mut instances: Vec<(String, GPolynomial)> = Vec::new();
    if let Some(name) = suite {
        instances.extend(name.parse::<Suite>()?.instances(&sp)?);
    }
    for (k, e) in expressions.iter().enumerate() {
        instances.push((format!("expr.{}", k + 1), parse(e, &sp)?));
    }
    if suite.is_none() && expressions.is_empty() {
        for s in Suite::defaults(&sp) {
            instances.extend(s.instances(&sp)?);
        }
    }
    let results = verify_instances(&instances, GroupAction::get(&sp))?;
    let mut conj_failures = Vec::new();
    if let Some(seed) = seed {
        let big = sp.with_conductor(lcm(sp.conductor, 4))?;
        let lifted: Vec<(String, GPolynomial)> =
            instances.iter().map(|(t, f)| (t.clone(), lift(f, big.conductor))).collect();
        let mut rng = StdRng::seed_from_u64(seed);
        for trial in 0..trials {
            let b = random_b(&mut rng, big.conductor);
            let action = GroupAction::get(&big).conjugated(&b)?;
            for r in verify_instances(&lifted, &action)? {
                if !r.ok {
                    conj_failures.push(format!("trial {trial}: {}", r.tag));
                }
            }
        }
    }
    let ok = results.iter().all(|r| r.ok) && conj_failures.is_empty();
    match common.format {
        Format::Text => {
            for r in &results {
                match &r.nonzero_entry {
                    None => println!("ok    {}", r.tag),
                    Some(e) => println!("FAIL  {}  entry {e}", r.tag),
                }
            }
            if let Some(seed) = seed {
                println!("conjugation check (seed {seed}, {trials} trials): {} failures", conj_failures.len());
                for f in &conj_failures {
                    println!("FAIL  {f}");
                }
            }
            println!("{}", if ok { "all identities hold" } else { "some checks failed" });
        }
        Format::Json => {
            let list: Vec<_> = results.iter().map(result_json).collect();
            println!(
                "{}",
                json!({"group": sp.to_string(), "results": list, "conjugation_failures": conj_failures, "ok": ok})
            );
        }
    }
    Ok(if ok { 0 } else { EXIT_FALSE })
}

fn result_json(r: &IdentityResult) -> serde_json::Value {
    json!({"tag": r.tag, "ok": r.ok, "nonzero_entry": r.nonzero_entry})
}

fn lcm(a: u32, b: u32) -> u32 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// The same polynomial with coefficients embedded into `Q(zeta_m)`.
fn lift(f: &GPolynomial, m: u32) -> GPolynomial {
    let n = f.conductor();
    let embed = |c: &CycNum| {
        c.coeffs().iter().enumerate().fold(CycNum::zero(m), |acc, (k, r)| {
            &acc + &cyc_embed(n, k as i64, m).expect("conductor divides").scale(r)
        })
    };
    GPolynomial::from_terms(m, f.terms().iter().map(|(w, c)| (w.clone(), embed(c))))
}

fn random_b(rng: &mut StdRng, n: u32) -> Mat2Const {
    let i = CycNum::zeta_pow(n, n as i64 / 4);
    loop {
        let mut e = || {
            let re = CycNum::from_int(n, rng.gen_range(-3..=3));
            let im = CycNum::from_int(n, rng.gen_range(-3..=3));
            &re + &(&im * &i)
        };
        let b = [[e(), e()], [e(), e()]];
        let det = &(&b[0][0] * &b[1][1]) - &(&b[0][1] * &b[1][0]);
        if !det.is_zero() {
            return b;
        }
    }
}
