//! The `gct` command line: JSON in, JSON out, one subcommand per operation.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use gct_core::characters::{
    kronecker_coefficient, plethysm_constant, plethysm_decomposition, schur_polynomial, specht_rank, CharacterTable,
};
use gct_core::combinatorics::Partition;
use gct_core::crystals::lr_via_crystals;
use gct_core::grassmannian::{straighten, vdw_syzygy, BracketPolynomial};
use gct_core::lattice::{quasipolynomial_index, smith_normal_form, to_int_matrix, z2_feasible_affine, z2_feasible_polytope};
use gct_core::lr::{
    decide_nonvanishing, fit_stretching, lr_count, lr_polytope, run_corpus, stretch_lr, stretching_kmax, CorpusOptions,
    LRInstance,
};
use gct_core::polyhedra::{ehrhart_quasipolynomial, ehrhart_series, AffineSubspace, RationalPolytope};
use gct_core::poly::Poly;
use gct_core::rational::{format_rational, int, Rational};
use gct_core::stability::{kempf_optimal, molien_series, reynolds, torus_nullcone, FiniteMatrixGroup, WeightVector};
use gct_core::Error;

#[derive(Parser, Debug)]
#[command(name = "gct", version, about = "Exact computations for LR coefficients, polytopes, crystals and invariants")]
pub struct Cli {
    /// Read the JSON payload from this file instead of standard input.
    #[arg(long = "in", global = true)]
    pub input: Option<PathBuf>,
    /// Write the JSON result to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub max_size: Option<usize>,
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    #[arg(long, global = true)]
    pub degree_cap: Option<usize>,
    #[arg(long, global = true)]
    pub period_cap: Option<u64>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Omit the timestamp field from reports.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// LR coefficient by the LR rule, with nonvanishing and stretching polynomial.
    Lr,
    /// The LR polytope of a triple.
    LrPolytope,
    /// Nonvanishing of an LR coefficient by linear programming.
    Nonvanish,
    /// Stretched LR coefficients and the fitted stretching polynomial.
    Stretch,
    /// Ehrhart quasipolynomial and series of a polytope.
    Ehrhart,
    /// Index of the Ehrhart quasipolynomial from the Smith form.
    Index,
    /// Existence of a point with odd denominators in a polytope or affine space.
    Z2,
    /// Smith normal form of an integer matrix.
    Snf,
    /// Character table of a symmetric group.
    CharTable,
    /// Schur polynomial.
    Schur,
    /// Kronecker coefficient.
    Kron,
    /// Plethysm constants.
    Plethysm,
    /// Rank of the span of Specht polynomials.
    SpechtRank,
    /// LR coefficient as a count of highest-weight crystal pairs.
    CrystalLr,
    /// A van der Waerden syzygy.
    Syzygy,
    /// Straightening into standard monomials.
    Straighten,
    /// Molien series of a finite matrix group.
    Molien,
    /// Reynolds operator of a finite matrix group.
    Reynolds,
    /// Kempf's optimal one-parameter subgroup of the torus.
    Kempf,
    /// Torus null-cone test.
    Nullcone,
    /// Cross-engine LR sweep.
    Corpus,
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    match execute(&cli, stdin) {
        Ok(value) => {
            let text = serde_json::to_string_pretty(&value).expect("JSON values always serialize") + "\n";
            let written = match &cli.out {
                Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    1
                }
            }
        }
        Err(e) => {
            let (kind, msg) = match &e {
                CliError::Usage(m) => ("usage error", m),
                CliError::Domain(m) => ("error", m),
            };
            let _ = writeln!(stderr, "{kind}: {msg}");
            e.exit_code()
        }
    }
}

fn read_payload(cli: &Cli, stdin: &mut dyn Read) -> CliResult<Value> {
    let text = match &cli.input {
        Some(path) => fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("malformed JSON payload: {e}")))
}

fn decode<T: DeserializeOwned>(v: &Value) -> CliResult<T> {
    T::deserialize(v).map_err(|e| CliError::Usage(format!("payload does not match the schema: {e}")))
}

fn rat_str(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("library types serialize to JSON")
}

#[derive(Deserialize)]
struct PartitionTriple {
    lambda: Partition,
    mu: Partition,
    #[serde(default)]
    pi: Option<Partition>,
    #[serde(default)]
    n: Option<usize>,
}

#[derive(Deserialize)]
struct LambdaPayload {
    lambda: Partition,
    #[serde(default)]
    n: Option<usize>,
}

#[derive(Deserialize)]
struct StretchPayload {
    #[serde(flatten)]
    instance: LRInstance,
    #[serde(default)]
    kmax: Option<usize>,
}

#[derive(Deserialize)]
struct SyzygyPayload {
    s: usize,
    alpha: Vec<u32>,
    beta: Vec<u32>,
    gamma: Vec<u32>,
    n: usize,
    d: usize,
}

#[derive(Deserialize)]
struct GroupPayload {
    generators: Vec<RationalMatrix>,
    #[serde(default)]
    polynomial: Option<Poly>,
}

#[derive(Deserialize)]
struct RationalMatrix(#[serde(with = "gct_core::rational::serde_mat")] Vec<Vec<Rational>>);

#[derive(Deserialize)]
struct SupportPayload {
    support: Vec<WeightVector>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SnfPayload {
    Wrapped { matrix: Vec<Vec<i64>> },
    Bare(Vec<Vec<i64>>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum StraightenPayload {
    Monomial(Vec<Vec<u32>>),
    Wrapped { polynomial: BracketPolynomial },
    Bare(BracketPolynomial),
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> CliResult<Value> {
    if cli.command == Command::Corpus {
        return corpus(cli);
    }
    let payload = read_payload(cli, stdin)?;
    match cli.command {
        Command::Lr => {
            let inst: LRInstance = decode(&payload)?;
            let c = lr_count(&inst);
            let mut out = json!({ "c": c, "nonzero": decide_nonvanishing(&inst) });
            if inst.is_well_posed() {
                let kmax = cli.degree_cap.map(|d| d + 2).unwrap_or(stretching_kmax(&inst)?).max(3);
                out["stretch"] = to_value(&fit_stretching(&inst, kmax)?);
            }
            Ok(out)
        }
        Command::LrPolytope => {
            let inst: LRInstance = decode(&payload)?;
            Ok(to_value(&lr_polytope(&inst, cli.rank)?))
        }
        Command::Nonvanish => {
            let inst: LRInstance = decode(&payload)?;
            Ok(json!({ "nonzero": decide_nonvanishing(&inst) }))
        }
        Command::Stretch => {
            let p: StretchPayload = decode(&payload)?;
            let kmax = match p.kmax.or(cli.degree_cap.map(|d| d + 2)) {
                Some(k) => k,
                None => stretching_kmax(&p.instance)?.max(3),
            };
            let values: Vec<u64> = (1..=kmax).map(|k| stretch_lr(&p.instance, k)).collect();
            let q = fit_stretching(&p.instance, kmax)?;
            Ok(json!({ "values": values, "polynomial": to_value(&q), "positive": q.is_positive() }))
        }
        Command::Ehrhart => {
            let p: RationalPolytope = decode(&payload)?;
            let q = ehrhart_quasipolynomial(&p, cli.period_cap.unwrap_or(gct_core::polyhedra::ehrhart::DEFAULT_PERIOD_CAP))?;
            let mut out = json!({
                "quasipolynomial": to_value(&q),
                "index": q.index(),
                "saturated": q.is_saturated(),
                "positive": q.is_positive(),
            });
            if let Some(cap) = cli.degree_cap {
                out["series"] = to_value(&ehrhart_series(&q, p.dim(), cap)?);
            }
            Ok(out)
        }
        Command::Index => {
            let p: RationalPolytope = decode(&payload)?;
            Ok(json!({ "index": quasipolynomial_index(&p)?.to_string() }))
        }
        Command::Z2 => {
            let feasible = if payload.get("A").is_some() {
                z2_feasible_polytope(&decode::<RationalPolytope>(&payload)?)?
            } else {
                let aff: AffineSubspace = decode(&payload)?;
                z2_feasible_affine(&aff.c, &aff.d, aff.dim)?
            };
            Ok(json!({ "feasible": feasible }))
        }
        Command::Snf => {
            let m = match decode::<SnfPayload>(&payload)? {
                SnfPayload::Wrapped { matrix } | SnfPayload::Bare(matrix) => matrix,
            };
            let width = m.first().map_or(0, |r| r.len());
            if m.iter().any(|r| r.len() != width) {
                return Err(CliError::Usage("matrix rows have different lengths".into()));
            }
            let snf = smith_normal_form(&to_int_matrix(&m));
            let invariants: Vec<String> = snf.invariant_factors().iter().map(|x| x.to_string()).collect();
            let mut out = to_value(&snf.to_json()?);
            out["invariant_factors"] = json!(invariants);
            Ok(out)
        }
        Command::CharTable => {
            #[derive(Deserialize)]
            struct N {
                n: usize,
            }
            let N { n } = decode(&payload)?;
            if n == 0 {
                return Err(CliError::Domain("n must be at least 1".into()));
            }
            Ok(to_value(&CharacterTable::compute(n)?))
        }
        Command::Schur => {
            let p: LambdaPayload = decode(&payload)?;
            let n = p.n.or(cli.rank).unwrap_or(p.lambda.height());
            Ok(to_value(&schur_polynomial(&p.lambda, n).into_poly()))
        }
        Command::Kron => {
            let p: PartitionTriple = decode(&payload)?;
            let pi = p.pi.ok_or_else(|| CliError::Usage("missing field `pi`".into()))?;
            Ok(json!({ "kronecker": kronecker_coefficient(&p.lambda, &p.mu, &pi)? }))
        }
        Command::Plethysm => {
            let p: PartitionTriple = decode(&payload)?;
            let n = p.n.or(cli.rank).ok_or_else(|| CliError::Usage("missing number of variables `n`".into()))?;
            match p.pi {
                Some(pi) => Ok(json!({ "constant": plethysm_constant(&p.lambda, &p.mu, &pi, n)? })),
                None => {
                    let dec = plethysm_decomposition(&p.lambda, &p.mu, n)?;
                    let terms: Vec<Value> = dec.iter().map(|(pi, c)| json!({ "pi": pi, "multiplicity": c })).collect();
                    Ok(json!({ "decomposition": terms }))
                }
            }
        }
        Command::SpechtRank => {
            let p: LambdaPayload = decode(&payload)?;
            Ok(json!({
                "rank": specht_rank(&p.lambda)?,
                "standard_tableaux": p.lambda.standard_tableaux_count(),
            }))
        }
        Command::CrystalLr => {
            let inst: LRInstance = decode(&payload)?;
            let rank = cli.rank.unwrap_or(inst.max_height());
            Ok(json!({ "c": lr_via_crystals(&inst.alpha, &inst.beta, &inst.gamma, rank)? }))
        }
        Command::Syzygy => {
            let p: SyzygyPayload = decode(&payload)?;
            Ok(to_value(&vdw_syzygy(p.s, &p.alpha, &p.beta, &p.gamma, p.n, p.d)?))
        }
        Command::Straighten => {
            let poly = match decode::<StraightenPayload>(&payload)? {
                StraightenPayload::Monomial(m) => BracketPolynomial::monomial(&m, int(1)),
                StraightenPayload::Wrapped { polynomial } | StraightenPayload::Bare(polynomial) => polynomial,
            };
            let out = straighten(&poly)?;
            let verified = verify_straightening(&poly, &out, cli.seed.unwrap_or(0))?;
            Ok(json!({ "polynomial": to_value(&out), "standard": out.is_standard(), "evaluation_checks": verified }))
        }
        Command::Molien => {
            let p: GroupPayload = decode(&payload)?;
            let g = FiniteMatrixGroup::new(p.generators.into_iter().map(|m| m.0).collect())?;
            let series = molien_series(&g, cli.degree_cap.unwrap_or(10))?;
            Ok(json!({ "order": g.order(), "series": series.iter().map(rat_str).collect::<Vec<_>>() }))
        }
        Command::Reynolds => {
            let p: GroupPayload = decode(&payload)?;
            let poly = p.polynomial.ok_or_else(|| CliError::Usage("missing field `polynomial`".into()))?;
            let g = FiniteMatrixGroup::new(p.generators.into_iter().map(|m| m.0).collect())?;
            Ok(json!({ "order": g.order(), "polynomial": to_value(&reynolds(&g, &poly)?) }))
        }
        Command::Kempf => {
            let p: SupportPayload = decode(&payload)?;
            Ok(match kempf_optimal(&p.support)? {
                Some(r) => json!({ "witnessed": true, "result": to_value(&r) }),
                None => json!({ "witnessed": false }),
            })
        }
        Command::Nullcone => {
            let p: SupportPayload = decode(&payload)?;
            let lambda = torus_nullcone(&p.support)?;
            Ok(json!({ "in_nullcone": lambda.is_some(), "lambda": lambda }))
        }
        Command::Corpus => unreachable!(),
    }
}

/// Number of random matrices on which input and output agreed.
fn verify_straightening(input: &BracketPolynomial, output: &BracketPolynomial, seed: u64) -> CliResult<usize> {
    let brackets = input.terms().keys().flatten();
    let d = brackets.clone().map(|b| b.len()).max().unwrap_or(0);
    let n = brackets.flatten().copied().max().unwrap_or(0) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const TRIALS: usize = 5;
    for _ in 0..TRIALS {
        let m: Vec<Vec<i64>> = (0..d).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        if input.evaluate(&m)? != output.evaluate(&m)? {
            return Err(CliError::Domain("straightened polynomial differs from the input on a random matrix".into()));
        }
    }
    Ok(TRIALS)
}

fn corpus(cli: &Cli) -> CliResult<Value> {
    let opts = CorpusOptions {
        max_size: cli.max_size.unwrap_or(8),
        max_height: cli.rank.unwrap_or(4),
        stretch: true,
        ..CorpusOptions::default()
    };
    let report = run_corpus(&opts)?;
    let mut out = json!({
        "max_size": opts.max_size,
        "max_height": opts.max_height,
        "summary": {
            "triples": report.triples,
            "nonzero": report.nonzero,
            "engine_mismatches": report.engine_mismatches.len(),
            "nonvanishing_mismatches": report.nonvanishing_mismatches.len(),
            "saturation_checked": report.saturation_checked,
            "saturation_counterexamples": report.saturation_counterexamples.len(),
            "stretch_fitted": report.stretch_fitted,
            "stretch_failures": report.stretch_failures.len(),
            "stretch_with_negative_coefficients": report.stretch_negative.len(),
            "max_stretch_degree": report.max_stretch_degree,
            "clean": report.is_clean(),
        },
        "details": to_value(&report),
    });
    if !cli.no_timestamp {
        let secs = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        out["timestamp"] = json!(secs);
    }
    if !report.is_clean() {
        return Err(CliError::Domain(format!("corpus sweep found discrepancies: {}", out["summary"])));
    }
    Ok(out)
}
