use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclic_lrc::bounds::{
    f4_hamming_size_bound, lrc_singleton_bound, thm1_dimension_bound, thm2_dimension_bound, KParity,
};
use cyclic_lrc::distance::{DEFAULT_BUDGET, DEFAULT_ITERATIONS, DEFAULT_SEED};
use cyclic_lrc::report::{SearchOutcome, SearchResult};
use cyclic_lrc::{
    analyze, construct, find_low_weight_duals, repair_all, search, AnalysisConfig, AnalysisReport,
    BinaryPolynomial, BitVec, CodeFile, CyclicCode, DistanceConfig, ErasurePattern, Family,
    GaloisField, RepairTrace, SearchConfig,
};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "cyclic-lrc",
    version,
    about = "Binary cyclic locally repairable codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct SearchKnobs {
    /// Enumeration budget (codewords) per distance computation.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Random information-set iterations when enumeration is out of budget.
    #[arg(long, default_value_t = DEFAULT_ITERATIONS)]
    iterations: usize,
}

impl SearchKnobs {
    fn config(&self, default_budget: u64) -> DistanceConfig {
        DistanceConfig {
            budget: self.budget.unwrap_or(default_budget),
            seed: self.seed,
            iterations: self.iterations,
            ..DistanceConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a code from one of the constructions and write its code file.
    Construct {
        family: Family,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: Option<usize>,
        /// Primitive polynomial as a hex mask, e.g. 43 for x^6 + x + 1.
        #[arg(long)]
        primitive_poly: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distance, locality, availability, GF(4) image and bound verdicts.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Availability to certify; by default the largest is reported.
        #[arg(long)]
        t: Option<usize>,
        #[command(flatten)]
        knobs: SearchKnobs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the closed-form bounds for length 2^m - 1.
    Bounds {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 2)]
        r: usize,
    },
    /// Erase coordinates of a seeded random codeword and repair them.
    Repair {
        file: PathBuf,
        /// Comma-separated erased coordinates.
        #[arg(long, value_delimiter = ',', required = true)]
        erase: Vec<usize>,
        /// Coordinates that may not be read by local repairs.
        #[arg(long, value_delimiter = ',')]
        busy: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Analyze every 2-closed defining set of length 2^m - 1.
    Search {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long)]
        require_locality: bool,
        /// Stop after this many defining sets and flag the output as partial.
        #[arg(long, default_value_t = 4096)]
        max_sets: u64,
        #[arg(long)]
        primitive_poly: Option<String>,
        #[command(flatten)]
        knobs: SearchKnobs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Violation,
    Runtime(String),
}

impl From<cyclic_lrc::Error> for Failure {
    fn from(e: cyclic_lrc::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn field_for(m: u32, poly: Option<&str>) -> Result<GaloisField, Failure> {
    Ok(match poly {
        Some(hex) => GaloisField::with_polynomial(m, BinaryPolynomial::from_hex(hex)?)?,
        None => GaloisField::new(m)?,
    })
}

fn load_code(path: &PathBuf) -> Result<CyclicCode, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(CyclicCode::from_file(&CodeFile::from_json(&text)?)?)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Outcome {
    match out {
        Some(p) => fs::write(p, format!("{text}\n"))
            .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", p.display()))),
        None => say(text),
    }
}

/// Writes one line to stdout; a closed pipe ends output quietly.
fn say(text: &str) -> Outcome {
    match writeln!(io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure::Runtime(e.to_string())),
        _ => Ok(()),
    }
}

fn json<T: Serialize>(value: &T, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("serializable")
    } else {
        serde_json::to_string(value).expect("serializable")
    }
}

fn cmd_construct(
    family: Family,
    m: u32,
    r: Option<usize>,
    poly: Option<&str>,
    out: Option<&PathBuf>,
) -> Outcome {
    let built = construct(family, m, r)?;
    let code = match poly {
        Some(_) => CyclicCode::new(field_for(m, poly)?, built.code.defining_set().clone())?,
        None => built.code,
    };
    emit(&code.to_file().to_json(), out)?;
    eprintln!(
        "{family}: [{}, {}, {}{}, {}, {}]",
        code.n(),
        code.k(),
        match built.claimed_distance {
            cyclic_lrc::ClaimedDistance::Exact(_) => "",
            cyclic_lrc::ClaimedDistance::AtLeast(_) => ">=",
        },
        built.claimed_distance.value(),
        built.locality_r,
        built.availability_t
    );
    Ok(())
}

fn analysis_table(rep: &AnalysisReport) -> String {
    let v = &rep.bounds.verdicts;
    let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
    [
        format!("code          [{}, {}], m = {}", rep.n, rep.k, rep.m),
        format!(
            "distance      {}..={}{} (BCH {})",
            rep.distance.lower,
            rep.distance.upper,
            if rep.distance.exact { " exact" } else { "" },
            rep.bch_bound
        ),
        format!(
            "locality      r = {} certified = {}",
            rep.locality.r, rep.locality.certified
        ),
        format!(
            "groups        {}",
            opt(rep
                .disjoint_groups
                .as_ref()
                .map(|g| format!("{} disjoint", g.len())))
        ),
        format!(
            "availability  t = {} certified = {}",
            rep.availability.t, rep.availability.certified
        ),
        format!(
            "gf4 image     {}",
            opt(rep.f4_image.as_ref().map(|f| format!(
                "length {} log2 size {} distance {}",
                f.length,
                f.log2_size,
                opt(f.distance.map(|d| d.to_string()))
            )))
        ),
        format!(
            "singleton     {:?} {:?}",
            rep.bounds.singleton_d_max, v.singleton
        ),
        format!("dim (d>=6)    {:?} {:?}", rep.bounds.thm1_k_max, v.thm1),
        format!("dim (d>=10)   {:?} {:?}", rep.bounds.thm2_k_max, v.thm2),
        format!(
            "gf4 packing   {:?} {:?}",
            rep.bounds.f4_hamming_k_max, v.f4_hamming
        ),
        format!("seed {:#x} budget {}", rep.seeds.distance, rep.budget),
    ]
    .join("\n")
}

fn cmd_analyze(
    file: &PathBuf,
    r: usize,
    t: Option<usize>,
    knobs: &SearchKnobs,
    format: Format,
    out: Option<&PathBuf>,
) -> Outcome {
    let code = load_code(file)?;
    let cfg = AnalysisConfig {
        r,
        t,
        distance: knobs.config(DEFAULT_BUDGET),
    };
    let rep = analyze(&code, &cfg);
    let text = match format {
        Format::Json => json(&rep, true),
        Format::Table => analysis_table(&rep),
    };
    emit(&text, out)?;
    eprintln!(
        "[{}, {}, {}{}] r={} {} t={}{}",
        rep.n,
        rep.k,
        if rep.distance.exact { "" } else { ">=" },
        rep.distance.lower,
        r,
        if rep.locality.certified {
            "certified"
        } else {
            "not certified"
        },
        rep.availability.t,
        if rep.any_violation() {
            ", BOUND VIOLATED"
        } else {
            ""
        }
    );
    if rep.any_violation() {
        Err(Failure::Violation)
    } else {
        Ok(())
    }
}

#[derive(Serialize)]
struct BoundsOutput {
    m: u32,
    n: usize,
    k: Option<usize>,
    r: usize,
    singleton_d_max: Option<i64>,
    thm1_k_max: Option<usize>,
    thm2_k_max: Option<usize>,
    thm2_k_max_any_parity: Option<usize>,
    f4_hamming_k_max_d3: Option<i64>,
    f4_hamming_k_max_d5: Option<i64>,
}

fn cmd_bounds(m: u32, k: Option<usize>, r: usize) -> Outcome {
    if !(2..=16).contains(&m) {
        return Err(cyclic_lrc::Error::UnsupportedDegree(m).into());
    }
    let n = (1usize << m) - 1;
    if let Some(k) = k {
        if k == 0 || k > n || r == 0 {
            return Err(Failure::Usage(format!("need 1 <= k <= {n} and r >= 1")));
        }
    }
    let f4 = |d| {
        n.is_multiple_of(3)
            .then(|| f4_hamming_size_bound(n / 3, d).ok())
            .flatten()
    };
    let report = BoundsOutput {
        m,
        n,
        k,
        r,
        singleton_d_max: k.map(|k| lrc_singleton_bound(n, k, r)),
        thm1_k_max: thm1_dimension_bound(m).ok(),
        thm2_k_max: thm2_dimension_bound(m, KParity::Even).ok(),
        thm2_k_max_any_parity: thm2_dimension_bound(m, KParity::Any).ok(),
        f4_hamming_k_max_d3: f4(3),
        f4_hamming_k_max_d5: f4(5),
    };
    say(&json(&report, true))?;
    Ok(())
}

#[derive(Serialize)]
struct TraceLine<'a> {
    #[serde(flatten)]
    trace: &'a RepairTrace,
    correct: bool,
    seed: u64,
}

fn cmd_repair(file: &PathBuf, erase: &[usize], busy: &[usize], r: usize, seed: u64) -> Outcome {
    let code = load_code(file)?;
    let n = code.n();
    let erased = ErasurePattern::new(n, erase.iter().copied())?;
    let busy: BTreeSet<usize> = busy.iter().copied().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let message = BitVec::from_bools(
        &(0..code.k())
            .map(|_| rng.random::<bool>())
            .collect::<Vec<_>>(),
    );
    let codeword = code.encode(&message);
    let mut damaged = codeword.clone();
    for i in erased.iter() {
        damaged.set(i, false);
    }
    let checks: Vec<_> = find_low_weight_duals(&code, r + 1)
        .into_iter()
        .filter(|c| c.support().iter().all(|j| !busy.contains(j)))
        .collect();
    let (restored, traces) = repair_all(&code, &damaged, &erased, &checks)
        .map_err(|e| Failure::Runtime(e.to_string()))?;
    for t in &traces {
        let line = TraceLine {
            trace: t,
            correct: t.value == codeword.get(t.coordinate),
            seed,
        };
        say(&json(&line, false))?;
    }
    let local = traces
        .iter()
        .filter(|t| t.method == cyclic_lrc::repair::RepairMethod::Local)
        .count();
    eprintln!(
        "repaired {} erasures ({} local, {} global), codeword {}",
        traces.len(),
        local,
        traces.len() - local,
        if restored == codeword {
            "restored"
        } else {
            "MISMATCH"
        }
    );
    if restored == codeword {
        Ok(())
    } else {
        Err(Failure::Runtime(
            "repaired word differs from the original".into(),
        ))
    }
}

fn search_row(x: &SearchResult) -> String {
    format!(
        "{:>4} {:>4} {:>4} {:>4} {:>5} {:>3} {:>6} {:?}",
        x.n,
        x.k,
        x.distance.lower,
        x.distance.upper,
        x.locality_r.map_or("-".into(), |r| r.to_string()),
        x.availability_t,
        if x.pareto { "yes" } else { "" },
        x.zeros
    )
}

fn cmd_search(
    m: u32,
    r: usize,
    require_locality: bool,
    max_sets: u64,
    poly: Option<&str>,
    knobs: &SearchKnobs,
    format: Format,
) -> Outcome {
    let field = field_for(m, poly)?;
    let cfg = SearchConfig {
        r,
        require_locality,
        distance: knobs.config(SearchConfig::default().distance.budget),
        max_sets,
    };
    let SearchOutcome {
        results,
        examined,
        total,
        partial,
    } = search(&field, &cfg)?;
    match format {
        Format::Json => {
            for x in &results {
                say(&json(x, false))?;
            }
        }
        Format::Table => {
            say("   n    k  d_lo d_hi     r   t pareto zeros")?;
            for x in &results {
                say(&search_row(x))?;
            }
        }
    }
    eprintln!(
        "examined {examined} of {total} defining sets, {} listed{}",
        results.len(),
        if partial { " (partial)" } else { "" }
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Construct {
            family,
            m,
            r,
            primitive_poly,
            out,
        } => cmd_construct(*family, *m, *r, primitive_poly.as_deref(), out.as_ref()),
        Command::Analyze {
            file,
            r,
            t,
            knobs,
            format,
            out,
        } => cmd_analyze(file, *r, *t, knobs, *format, out.as_ref()),
        Command::Bounds { m, k, r } => cmd_bounds(*m, *k, *r),
        Command::Repair {
            file,
            erase,
            busy,
            r,
            seed,
        } => cmd_repair(file, erase, busy, *r, *seed),
        Command::Search {
            m,
            r,
            require_locality,
            max_sets,
            primitive_poly,
            knobs,
            format,
        } => cmd_search(
            *m,
            *r,
            *require_locality,
            *max_sets,
            primitive_poly.as_deref(),
            knobs,
            *format,
        ),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation) => ExitCode::from(1),
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
