//! Command-line experiments for ℓ0 low-rank approximation: instance
//! generation, solving, solution evaluation, and read-count benchmarks.
//!
//! Reports go to stdout as JSON (or CSV for `bench`) and are byte-identical
//! for identical (command, seed); timing goes to stderr.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigRational;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use l0lra::boolean::{
    boolean_exhaustive_oracle, solve_boolean_combined, solve_boolean_exact_fpt,
    solve_boolean_smallopt, BooleanSolution, CountMode, SmallOptConfig,
};
use l0lra::instances::{
    gen_gaussian_identity, gen_identity_plus_ones, gen_planted_boolean, gen_planted_rank1_real,
    gen_planted_rankk, gen_sample_lb_hard, InstanceSidecar, PlantedFactors,
};
use l0lra::market;
use l0lra::matrix::{residual_exact, residual_outer, AccessSnapshot, SparseMatrix};
use l0lra::rank1::{
    detect_exact_rank1, solve_rank1, solve_rank1_baseline, solve_rank1_boolean, Rank1Config,
};
use l0lra::rankk::{
    certify_column_selection, residual_rankk_exact, solve_rankk_basic, solve_rankk_bicriteria,
    BicriteriaConfig, RankKSolution,
};
use l0lra::{Error, Result};

#[derive(Parser)]
#[command(
    name = "l0lra",
    version,
    about = "Entrywise l0 low-rank approximation toolkit"
)]
struct Cli {
    /// RNG seed; falls back to the L0LRA_SEED environment variable, then 0.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance (MatrixMarket file plus JSON sidecar).
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run a solver on a MatrixMarket file and print a JSON report.
    Solve(SolveArgs),
    /// Recompute the exact cost of a solution file against a matrix.
    Eval { matrix: PathBuf, solution: PathBuf },
    /// Read-count experiments; prints a CSV table.
    Bench(BenchArgs),
}

#[derive(Subcommand)]
enum GenKind {
    /// Planted real rank-1 instance with s disagreements.
    PlantedReal {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        density: f64,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Planted boolean instance with supports alpha x beta and s flips.
    PlantedBool {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Planted rank-k instance with s disagreements.
    PlantedRankk {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The I + J rank-1 lower-bound instance.
    IdentityPlusOnes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The Gaussian-over-identity column-selection gap instance.
    GaussianIdentity {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The read-complexity hard instance with hidden row biases.
    SampleLbHard {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        phi: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CountModeArg {
    Exact,
    Sampled,
}

impl From<CountModeArg> for CountMode {
    fn from(m: CountModeArg) -> Self {
        match m {
            CountModeArg::Exact => CountMode::Exact,
            CountModeArg::Sampled => CountMode::Sampled,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Rank1Baseline,
    Rank1,
    Rank1Bool,
    BoolSmallopt,
    BoolCombined,
    BoolExact,
    RankkBasic,
    RankkBicriteria,
    Certify,
}

impl Algorithm {
    fn name(&self) -> &'static str {
        match self {
            Algorithm::Rank1Baseline => "rank1-baseline",
            Algorithm::Rank1 => "rank1",
            Algorithm::Rank1Bool => "rank1-bool",
            Algorithm::BoolSmallopt => "bool-smallopt",
            Algorithm::BoolCombined => "bool-combined",
            Algorithm::BoolExact => "bool-exact",
            Algorithm::RankkBasic => "rankk-basic",
            Algorithm::RankkBicriteria => "rankk-bicriteria",
            Algorithm::Certify => "certify",
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(value_enum)]
    algorithm: Algorithm,
    matrix: PathBuf,
    /// Relative error for the sampling solvers.
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
    /// Error-ratio bound for bool-smallopt.
    #[arg(long)]
    phi: Option<f64>,
    /// Target rank for the rank-k solvers.
    #[arg(long)]
    k: Option<usize>,
    /// Counting mode for the boolean pruning algorithm.
    #[arg(long, value_enum, default_value = "exact")]
    mode: CountModeArg,
    /// Enumeration cap for bool-exact.
    #[arg(long, default_value_t = 22)]
    cap: usize,
    /// Sidecar with planted factors (required by certify).
    #[arg(long)]
    factors: Option<PathBuf>,
    /// Answer with the exhaustive boolean oracle instead of the chosen
    /// algorithm (binary matrices with min(m, n) <= 20 only).
    #[arg(long)]
    oracle: bool,
    /// Write the solution to this JSON file.
    #[arg(long)]
    solution: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Planted-boolean sweep sizes (m = n).
    #[arg(long, value_delimiter = ',', default_value = "500,1000,2000")]
    sizes: Vec<usize>,
    /// Hard-instance phi sweep.
    #[arg(long, value_delimiter = ',', default_value = "0.01,0.005,0.0025")]
    phis: Vec<f64>,
    /// Hard-instance dimension.
    #[arg(long, default_value_t = 2000)]
    n: usize,
    /// Error ratio for the planted sweep.
    #[arg(long, default_value_t = 0.01)]
    phi: f64,
}

/// One solve report; stdout JSON. Identical (command, seed) gives identical
/// bytes, so timing lives on stderr instead.
#[derive(Serialize)]
struct RunReport {
    algorithm: &'static str,
    parameters: ReportParams,
    cost_exact: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    cost_estimate: Option<f64>,
    rank: usize,
    entry_reads: u64,
    adjacency_reads: u64,
    nonzero_samples: u64,
}

#[derive(Serialize)]
struct ReportParams {
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    phi: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
}

/// Solution file schema: rank-1 solutions carry f64 coefficients, rank-k
/// solutions carry exact rationals rendered as strings.
#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
enum SolutionFile {
    Rank1 {
        #[serde(skip_serializing_if = "Option::is_none")]
        column: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        u: Option<Vec<f64>>,
        coeffs: Vec<f64>,
    },
    Rankk {
        #[serde(rename = "J")]
        j: Vec<usize>,
        #[serde(rename = "Z")]
        z: Vec<Vec<String>>,
    },
}

impl SolutionFile {
    fn from_rankk(sol: &RankKSolution) -> Self {
        SolutionFile::Rankk {
            j: sol.columns.clone(),
            z: sol
                .coeffs
                .iter()
                .map(|row| row.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
    }

    fn from_boolean(sol: &BooleanSolution) -> Self {
        SolutionFile::Rank1 {
            column: None,
            u: Some(sol.u.iter().map(|&b| if b { 1.0 } else { 0.0 }).collect()),
            coeffs: sol.v.iter().map(|&b| if b { 1.0 } else { 0.0 }).collect(),
        }
    }

    fn cost_on(&self, a: &SparseMatrix) -> Result<u64> {
        match self {
            SolutionFile::Rank1 {
                column: Some(j),
                coeffs,
                ..
            } => residual_exact(a, *j, coeffs),
            SolutionFile::Rank1 {
                column: None,
                u: Some(u),
                coeffs,
            } => residual_outer(a, u, coeffs),
            SolutionFile::Rank1 {
                column: None,
                u: None,
                ..
            } => Err(Error::Parse(
                "rank1 solution needs a column or an explicit u".into(),
            )),
            SolutionFile::Rankk { j, z } => {
                let mut coeffs = Vec::with_capacity(z.len());
                for row in z {
                    let mut parsed = Vec::with_capacity(row.len());
                    for s in row {
                        parsed.push(
                            BigRational::from_str(s)
                                .map_err(|e| Error::Parse(format!("bad rational {s}: {e}")))?,
                        );
                    }
                    coeffs.push(parsed);
                }
                residual_rankk_exact(a, j, &coeffs)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = l0lra::par::set_thread_count(t) {
            eprintln!("warning: could not size the thread pool: {e}");
        }
    }
    let seed = cli.seed.or_else(|| {
        std::env::var("L0LRA_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    let seed = seed.unwrap_or(0);

    let outcome = match cli.command {
        Command::Gen { kind } => cmd_gen(kind, seed),
        Command::Solve(args) => cmd_solve(args, seed),
        Command::Eval { matrix, solution } => cmd_eval(&matrix, &solution),
        Command::Bench(args) => cmd_bench(args, seed),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_precondition() {
                ExitCode::from(2)
            } else {
                ExitCode::from(3)
            }
        }
    }
}

fn sidecar_path(mtx: &Path) -> PathBuf {
    mtx.with_extension("json")
}

fn write_instance(matrix: &SparseMatrix, sidecar: &InstanceSidecar, out: PathBuf) -> Result<()> {
    market::write_file(matrix, &out)?;
    let text = serde_json::to_string_pretty(sidecar)
        .map_err(|e| Error::Parse(format!("sidecar serialization: {e}")))?;
    std::fs::write(sidecar_path(&out), text + "\n")?;
    println!("{}", out.display());
    Ok(())
}

fn cmd_gen(kind: GenKind, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        GenKind::PlantedReal {
            m,
            n,
            density,
            s,
            out,
        } => {
            let inst = gen_planted_rank1_real(m, n, density, s, &mut rng)?;
            let PlantedFactors::Rank1Real { u, v } = &inst.factors else {
                unreachable!()
            };
            let sidecar = InstanceSidecar::PlantedRank1Real {
                m,
                n,
                support_density: density,
                flips: inst.flips,
                seed,
                u: u.clone(),
                v: v.clone(),
                psi_bound: inst.psi_bound,
            };
            write_instance(
                &inst.matrix,
                &sidecar,
                out.unwrap_or_else(|| "planted-real.mtx".into()),
            )
        }
        GenKind::PlantedBool {
            m,
            n,
            alpha,
            beta,
            s,
            out,
        } => {
            let inst = gen_planted_boolean(m, n, alpha, beta, s, &mut rng)?;
            let PlantedFactors::Boolean { u, v } = &inst.factors else {
                unreachable!()
            };
            let sidecar = InstanceSidecar::PlantedBoolean {
                m,
                n,
                alpha,
                beta,
                flips: inst.flips,
                seed,
                u_support: (0..m).filter(|&i| u[i]).collect(),
                v_support: (0..n).filter(|&j| v[j]).collect(),
                psi_bound: inst.psi_bound,
            };
            write_instance(
                &inst.matrix,
                &sidecar,
                out.unwrap_or_else(|| "planted-bool.mtx".into()),
            )
        }
        GenKind::PlantedRankk { m, n, k, s, out } => {
            let inst = gen_planted_rankk(m, n, k, s, &mut rng)?;
            let PlantedFactors::RankK { u, v } = &inst.factors else {
                unreachable!()
            };
            let sidecar = InstanceSidecar::PlantedRankK {
                m,
                n,
                k,
                flips: inst.flips,
                seed,
                u: u.clone(),
                v: v.clone(),
                psi_bound: inst.psi_bound,
            };
            write_instance(
                &inst.matrix,
                &sidecar,
                out.unwrap_or_else(|| "planted-rankk.mtx".into()),
            )
        }
        GenKind::IdentityPlusOnes { n, out } => {
            let matrix = gen_identity_plus_ones(n)?;
            let sidecar = InstanceSidecar::IdentityPlusOnes { n };
            write_instance(
                &matrix,
                &sidecar,
                out.unwrap_or_else(|| "identity-plus-ones.mtx".into()),
            )
        }
        GenKind::GaussianIdentity { n, k, out } => {
            let matrix = gen_gaussian_identity(n, k, &mut rng)?;
            let sidecar = InstanceSidecar::GaussianIdentity { n, k, seed };
            write_instance(
                &matrix,
                &sidecar,
                out.unwrap_or_else(|| "gaussian-identity.mtx".into()),
            )
        }
        GenKind::SampleLbHard { n, phi, out } => {
            let inst = gen_sample_lb_hard(n, phi, &mut rng)?;
            let sidecar = InstanceSidecar::SampleLbHard {
                n,
                phi,
                phi_prime: inst.phi_prime,
                pairs: inst.pairs,
                seed,
                plus_blocks: (0..inst.pairs).filter(|&b| inst.labels[b]).collect(),
            };
            write_instance(
                &inst.matrix,
                &sidecar,
                out.unwrap_or_else(|| "sample-lb-hard.mtx".into()),
            )
        }
    }
}

fn load_factors(path: &Path) -> Result<(Vec<Vec<f64>>, Vec<Vec<f64>>)> {
    let text = std::fs::read_to_string(path)?;
    let sidecar: InstanceSidecar =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("sidecar: {e}")))?;
    match sidecar {
        InstanceSidecar::PlantedRankK { u, v, .. } => Ok((u, v)),
        InstanceSidecar::PlantedRank1Real { u, v, .. } => {
            let uk: Vec<Vec<f64>> = u.iter().map(|&x| vec![x]).collect();
            Ok((uk, vec![v]))
        }
        InstanceSidecar::PlantedBoolean {
            u_support,
            v_support,
            m,
            n,
            ..
        } => {
            let mut u = vec![0.0; m];
            for i in u_support {
                u[i] = 1.0;
            }
            let mut v = vec![0.0; n];
            for j in v_support {
                v[j] = 1.0;
            }
            Ok((u.iter().map(|&x| vec![x]).collect(), vec![v]))
        }
        _ => Err(Error::Precondition(
            "sidecar has no planted factors for certify".into(),
        )),
    }
}

fn cmd_solve(args: SolveArgs, seed: u64) -> Result<()> {
    let a = market::read_file(&args.matrix)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let started = Instant::now();
    a.reset_stats();

    let (solution, cost_estimate, rank): (SolutionFile, Option<f64>, usize) = if args.oracle {
        let sol = boolean_exhaustive_oracle(&a)?;
        (SolutionFile::from_boolean(&sol), None, 1)
    } else {
        match args.algorithm {
            Algorithm::Rank1Baseline => {
                let sol = solve_rank1_baseline(&a);
                (rank1_solution_file(&sol), None, 1)
            }
            Algorithm::Rank1 => {
                if let Some((u, v)) = detect_exact_rank1(&a) {
                    (
                        SolutionFile::Rank1 {
                            column: None,
                            u: Some(u),
                            coeffs: v,
                        },
                        Some(0.0),
                        1,
                    )
                } else {
                    let sol = solve_rank1(&a, args.epsilon, &mut rng, &Rank1Config::default())?;
                    let est = sol.cost_estimate;
                    (rank1_solution_file(&sol), est, 1)
                }
            }
            Algorithm::Rank1Bool => {
                if let Some((u, v)) = detect_exact_rank1(&a) {
                    (
                        SolutionFile::Rank1 {
                            column: None,
                            u: Some(u),
                            coeffs: v,
                        },
                        Some(0.0),
                        1,
                    )
                } else {
                    let sol =
                        solve_rank1_boolean(&a, args.epsilon, &mut rng, &Rank1Config::default())?;
                    let est = sol.cost_estimate;
                    (rank1_solution_file(&sol), est, 1)
                }
            }
            Algorithm::BoolSmallopt => {
                let phi = args
                    .phi
                    .ok_or_else(|| Error::Precondition("bool-smallopt requires --phi".into()))?;
                let sol = solve_boolean_smallopt(
                    &a,
                    phi,
                    args.mode.into(),
                    &mut rng,
                    &SmallOptConfig::default(),
                )?;
                (SolutionFile::from_boolean(&sol), None, 1)
            }
            Algorithm::BoolCombined => {
                let sol = solve_boolean_combined(
                    &a,
                    args.mode.into(),
                    &mut rng,
                    &SmallOptConfig::default(),
                )?;
                (SolutionFile::from_boolean(&sol), None, 1)
            }
            Algorithm::BoolExact => {
                let sol =
                    solve_boolean_exact_fpt(&a, &mut rng, args.cap, &SmallOptConfig::default())?;
                (SolutionFile::from_boolean(&sol), None, 1)
            }
            Algorithm::RankkBasic => {
                let k = args
                    .k
                    .ok_or_else(|| Error::Precondition("rankk-basic requires --k".into()))?;
                let sol = solve_rankk_basic(&a, k, &mut rng, None, 100_000)?;
                let rank = sol.columns.len();
                (SolutionFile::from_rankk(&sol), None, rank)
            }
            Algorithm::RankkBicriteria => {
                let k = args
                    .k
                    .ok_or_else(|| Error::Precondition("rankk-bicriteria requires --k".into()))?;
                let sol = solve_rankk_bicriteria(&a, k, &mut rng, &BicriteriaConfig::default())?;
                let rank = sol.columns.len();
                (SolutionFile::from_rankk(&sol), None, rank)
            }
            Algorithm::Certify => {
                let path = args.factors.as_ref().ok_or_else(|| {
                    Error::Precondition("certify requires --factors <sidecar.json>".into())
                })?;
                let (u, v) = load_factors(path)?;
                let sol = certify_column_selection(&a, &u, &v)?;
                let rank = sol.columns.len();
                (SolutionFile::from_rankk(&sol), None, rank)
            }
        }
    };

    let reads: AccessSnapshot = a.stats();
    let cost_exact = solution.cost_on(&a)?;
    let elapsed = started.elapsed();

    if let Some(path) = &args.solution {
        let text = serde_json::to_string_pretty(&solution)
            .map_err(|e| Error::Parse(format!("solution serialization: {e}")))?;
        std::fs::write(path, text + "\n")?;
    }

    let report = RunReport {
        algorithm: args.algorithm.name(),
        parameters: ReportParams {
            seed,
            epsilon: matches!(args.algorithm, Algorithm::Rank1 | Algorithm::Rank1Bool)
                .then_some(args.epsilon),
            phi: args.phi,
            k: args.k,
        },
        cost_exact,
        cost_estimate,
        rank,
        entry_reads: reads.entry_reads,
        adjacency_reads: reads.adjacency_reads,
        nonzero_samples: reads.nonzero_samples,
    };
    println!(
        "{}",
        serde_json::to_string(&report).map_err(|e| Error::Parse(e.to_string()))?
    );
    eprintln!("solved in {:.1} ms", elapsed.as_secs_f64() * 1e3);
    Ok(())
}

fn rank1_solution_file(sol: &l0lra::rank1::RankOneSolution) -> SolutionFile {
    SolutionFile::Rank1 {
        column: sol.column,
        u: sol.u.clone(),
        coeffs: sol.coeffs.clone(),
    }
}

fn cmd_eval(matrix: &Path, solution: &Path) -> Result<()> {
    let a = market::read_file(matrix)?;
    let text = std::fs::read_to_string(solution)?;
    let sol: SolutionFile =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("solution: {e}")))?;
    let cost = sol.cost_on(&a)?;
    println!("{{\"cost_exact\":{cost}}}");
    Ok(())
}

fn csv_row(
    family: &str,
    mode: &str,
    a: &SparseMatrix,
    phi: f64,
    cost: u64,
    reads: &AccessSnapshot,
) -> String {
    format!(
        "{family},{mode},{},{},{phi},{},{cost},{},{},{},{}",
        a.nrows(),
        a.ncols(),
        a.total_nnz(),
        reads.entry_reads,
        reads.adjacency_reads,
        reads.nonzero_samples,
        reads.probes(),
    )
}

fn cmd_bench(args: BenchArgs, seed: u64) -> Result<()> {
    println!(
        "family,mode,m,n,phi,nnz,cost,entry_reads,adjacency_reads,nonzero_samples,probe_reads"
    );
    let cfg = SmallOptConfig::default();

    for (idx, &n) in args.sizes.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(idx as u64));
        let alpha = n / 2;
        let s = ((args.phi * (alpha * alpha) as f64).round() as usize).max(1);
        let inst = gen_planted_boolean(n, n, alpha, alpha, s, &mut rng)?;
        let phi = inst.psi_bound.min(1.0 / 80.0);
        for mode in [CountMode::Exact, CountMode::Sampled] {
            let mut rng_run = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1000 + idx as u64));
            inst.matrix.reset_stats();
            let sol = solve_boolean_smallopt(&inst.matrix, phi, mode, &mut rng_run, &cfg)?;
            let reads = inst.matrix.stats();
            let label = match mode {
                CountMode::Exact => "exact",
                CountMode::Sampled => "sampled",
            };
            println!(
                "{}",
                csv_row("planted-bool", label, &inst.matrix, phi, sol.cost, &reads)
            );
        }
    }

    for (idx, &phi) in args.phis.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(5000 + idx as u64));
        let hard = gen_sample_lb_hard(args.n, phi, &mut rng)?;
        let mut rng_run = ChaCha8Rng::seed_from_u64(seed.wrapping_add(6000 + idx as u64));
        hard.matrix.reset_stats();
        let sol =
            solve_boolean_smallopt(&hard.matrix, phi, CountMode::Sampled, &mut rng_run, &cfg)?;
        let reads = hard.matrix.stats();
        // Score bias recovery against the hidden labels: the solution
        // should pick exactly the high-bias row of each pair.
        let mut correct = 0usize;
        for (block, &plus) in hard.labels.iter().enumerate() {
            let picked_hi = sol.u[2 * block + 1] && !sol.u[2 * block];
            let picked_lo = sol.u[2 * block] && !sol.u[2 * block + 1];
            if (plus && picked_hi) || (!plus && picked_lo) {
                correct += 1;
            }
        }
        println!(
            "{}",
            csv_row("hard", "sampled", &hard.matrix, phi, sol.cost, &reads)
        );
        eprintln!(
            "hard n={} phi={}: recovered {}/{} block biases",
            args.n, phi, correct, hard.pairs
        );
    }
    Ok(())
}
