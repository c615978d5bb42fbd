//! Command-line front end for the `hqmm` library.
//!
//! Every command taking a `FILE` also accepts the name of a bundled model
//! (see [`bundled::MODELS`]) when no such file exists.
//!
//! Exit codes: 0 on success, 1 when a model fails to load, validate or
//! evaluate, 2 on usage errors.

pub mod bundled;
pub mod io;

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hqmm::analysis::{
    block_entropy, default_hankel_words, enumerate_distribution, hankel_block, sample_trajectory, WordDistribution,
};
use hqmm::cluster::{cluster_kraus, MeasurementBasis};
use hqmm::quantum::{embed_classical, pure_from_reversible};
use hqmm::{Alphabet, ComplexMatrix, DensityMatrix, HmmModel, HqmmModel, Process, Word};

use crate::io::{parse_model, serialize_model, Model, ModelFile};

#[derive(Parser, Debug)]
#[command(name = "hqmm", version, about = "Hidden Markov and hidden quantum Markov generators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a model file
    Validate { file: PathBuf },
    /// Print the stationary state
    Steady { file: PathBuf },
    /// Probability of one word
    Wordprob {
        file: PathBuf,
        word: String,
        /// steady | mixed | plus | basis:K | diag:p0,p1,...
        #[arg(long)]
        initial: Option<String>,
    },
    /// All word probabilities of one length
    Dist {
        file: PathBuf,
        #[arg(short)]
        n: usize,
        /// Write `word,probability` rows here instead of stdout
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Block entropy in bits
    Entropy {
        file: PathBuf,
        #[arg(short)]
        n: usize,
    },
    /// Hankel block and its numerical rank
    Hankel {
        file: PathBuf,
        /// Words separated by ';' with '-' for the empty word, or upto:K
        #[arg(long, allow_hyphen_values = true)]
        rows: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        cols: Option<String>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Convert a classical model into an HQMM
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
        #[arg(short)]
        o: PathBuf,
    },
    /// Cluster-state readout in the basis (phi, xi)
    Cluster {
        #[arg(long, allow_negative_numbers = true)]
        phi: f64,
        #[arg(long, allow_negative_numbers = true)]
        xi: f64,
        #[command(subcommand)]
        action: ClusterAction,
    },
    /// H3 of the cluster readout over phi in [0, pi], xi in [0, 2 pi]
    ScanEntropy {
        #[arg(long)]
        phi_steps: usize,
        #[arg(long)]
        xi_steps: usize,
        #[arg(short)]
        o: PathBuf,
    },
    /// Draw one trajectory
    Sample {
        file: PathBuf,
        #[arg(short)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    HqmmEmbed,
    HqmmPure,
}

#[derive(Subcommand, Debug)]
enum ClusterAction {
    /// Print the two Kraus operators
    Kraus,
    /// Stationary length-n distribution
    Dist {
        #[arg(short)]
        n: usize,
    },
    /// Stationary block entropy of length 3
    H3,
}

enum Failure {
    Usage(String),
    Model(String),
}

impl From<hqmm::Error> for Failure {
    fn from(e: hqmm::Error) -> Self {
        Failure::Model(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Model(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Runs one command; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Model(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

/// `{:.12}` without a sign on zero.
pub fn fmt_real(x: f64) -> String {
    let s = format!("{x:.12}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

pub fn fmt_complex(z: hqmm::algebra::Complex64) -> String {
    let im = fmt_real(z.im);
    if im.bytes().all(|b| b == b'0' || b == b'.') {
        fmt_real(z.re)
    } else if im.starts_with('-') {
        format!("{}{}i", fmt_real(z.re), im)
    } else {
        format!("{}+{}i", fmt_real(z.re), im)
    }
}

fn write_matrix(out: &mut dyn Write, m: &ComplexMatrix) -> std::io::Result<()> {
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| fmt_complex(m[(i, j)])).collect();
        writeln!(out, "{}", row.join(" "))?;
    }
    Ok(())
}

fn load(path: &Path) -> Result<ModelFile, Failure> {
    match std::fs::read_to_string(path) {
        Ok(text) => parse_model(&text).map_err(|e| Failure::Model(format!("{}: {e}", path.display()))),
        Err(e) => {
            let name = path.to_string_lossy();
            match bundled::text(&name) {
                Some(text) => Ok(parse_model(text)?),
                None => Err(Failure::Model(format!("cannot read {}: {e}", path.display()))),
            }
        }
    }
}

enum Loaded {
    Classical(HmmModel),
    Quantum(HqmmModel),
}

fn resolve(file: &ModelFile) -> Result<Loaded, Failure> {
    Ok(match &file.model {
        Model::Hmm(m) => Loaded::Classical(m.clone()),
        other => Loaded::Quantum(other.quantum()?.expect("quantum kind")),
    })
}

fn usage(msg: impl Display) -> Failure {
    Failure::Usage(msg.to_string())
}

fn parse_word(alphabet: &Alphabet, text: &str) -> Result<Word, Failure> {
    alphabet.parse_word(text).map_err(usage)
}

/// Word list syntax for `hankel`: `upto:K`, or words separated by `;` with
/// `-` for the empty word.
fn parse_word_list(alphabet: &Alphabet, spec: Option<&str>) -> Result<Vec<Word>, Failure> {
    let Some(spec) = spec else {
        return Ok(default_hankel_words(alphabet));
    };
    if let Some(k) = spec.strip_prefix("upto:") {
        let k: usize = k.parse().map_err(|_| usage(format!("bad word list {spec:?}")))?;
        return Ok(alphabet.words_up_to(k));
    }
    spec.split(';')
        .map(|w| {
            let w = w.trim();
            if w == "-" {
                Ok(Word::new())
            } else {
                parse_word(alphabet, w)
            }
        })
        .collect()
}

fn parse_probs(list: &str, d: usize) -> Result<Vec<f64>, Failure> {
    let p = list
        .split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|_| usage(format!("bad probability {x:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if p.len() != d {
        return Err(usage(format!("{} entries for dimension {d}", p.len())));
    }
    Ok(p)
}

fn parse_basis_index(k: &str, d: usize) -> Result<usize, Failure> {
    k.parse::<usize>()
        .ok()
        .filter(|&k| k < d)
        .ok_or_else(|| usage(format!("basis index {k:?} out of range for dimension {d}")))
}

fn classical_initial(m: &HmmModel, spec: &str) -> Result<Vec<f64>, Failure> {
    let d = m.dim();
    let p = match spec {
        "steady" => m.steady_state()?.state.entries().to_vec(),
        "mixed" => vec![1.0 / d as f64; d],
        _ if spec.starts_with("basis:") => {
            let k = parse_basis_index(&spec[6..], d)?;
            (0..d).map(|i| if i == k { 1.0 } else { 0.0 }).collect()
        }
        _ if spec.starts_with("diag:") => parse_probs(&spec[5..], d)?,
        _ => return Err(usage(format!("initial state {spec:?} is not available for a classical model"))),
    };
    Ok(hqmm::ProbVector::new(p).map_err(usage)?.entries().to_vec())
}

fn quantum_initial(m: &HqmmModel, spec: &str) -> Result<ComplexMatrix, Failure> {
    let d = m.dim();
    let rho = match spec {
        "steady" => m.steady_state()?.state,
        "mixed" => DensityMatrix::maximally_mixed(d),
        "plus" => DensityMatrix::plus(d),
        _ if spec.starts_with("basis:") => DensityMatrix::basis(d, parse_basis_index(&spec[6..], d)?)?,
        _ if spec.starts_with("diag:") => {
            let p = hqmm::ProbVector::new(parse_probs(&spec[5..], d)?).map_err(usage)?;
            DensityMatrix::diagonal(&p)
        }
        _ => return Err(usage(format!("unknown initial state {spec:?}"))),
    };
    Ok(rho.into_matrix())
}

fn print_distribution(out: &mut dyn Write, d: &WordDistribution) -> std::io::Result<()> {
    let a = d.alphabet();
    for (w, p) in d.iter() {
        writeln!(out, "{} {}", a.format_word(&w), fmt_real(p))?;
    }
    Ok(())
}

fn csv_distribution(d: &WordDistribution) -> String {
    let a = d.alphabet();
    let mut s = String::from("word,probability\n");
    for (w, p) in d.iter() {
        let word = a.format_word(&w);
        let word = if word.contains(',') { format!("\"{word}\"") } else { word };
        s.push_str(&format!("{word},{}\n", fmt_real(p)));
    }
    s
}

fn hankel_output<P: Process>(
    out: &mut dyn Write,
    m: &P,
    rows: Option<&str>,
    cols: Option<&str>,
    tol: Option<f64>,
) -> Outcome {
    let r = parse_word_list(m.alphabet(), rows)?;
    let c = parse_word_list(m.alphabet(), cols)?;
    let h = hankel_block(m, &r, &c, None)?;
    for i in 0..r.len() {
        let row: Vec<String> = (0..c.len()).map(|j| fmt_real(h.get(i, j))).collect();
        writeln!(out, "{}", row.join(" "))?;
    }
    writeln!(out, "rank = {}", h.rank(tol))?;
    Ok(())
}

/// Stationary block entropy of length 3 of the cluster readout.
pub fn cluster_h3(basis: MeasurementBasis) -> hqmm::Result<f64> {
    Ok(block_entropy(&enumerate_distribution(&cluster_kraus(basis), 3, None)?))
}

/// `(φ, ξ, H3)` on an inclusive grid over `[0, π] × [0, 2π]`, rows ordered by
/// φ first. A single step samples the lower end.
pub fn h3_grid(phi_steps: usize, xi_steps: usize) -> hqmm::Result<Vec<(f64, f64, f64)>> {
    use std::f64::consts::PI;
    let axis = |steps: usize, hi: f64| -> Vec<f64> {
        match steps {
            0 => Vec::new(),
            1 => vec![0.0],
            _ => (0..steps).map(|k| hi * k as f64 / (steps - 1) as f64).collect(),
        }
    };
    let xis = axis(xi_steps, 2.0 * PI);
    let phis = axis(phi_steps, PI);
    std::thread::scope(|scope| {
        let handles: Vec<_> = phis
            .iter()
            .map(|&phi| {
                let xis = &xis;
                scope.spawn(move || {
                    xis.iter()
                        .map(|&xi| Ok((phi, xi, cluster_h3(MeasurementBasis::new(phi, xi))?)))
                        .collect::<hqmm::Result<Vec<_>>>()
                })
            })
            .collect();
        let mut rows = Vec::with_capacity(phis.len() * xis.len());
        for h in handles {
            rows.extend(h.join().expect("grid worker panicked")?);
        }
        Ok(rows)
    })
}

fn execute(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Validate { file } => {
            let f = load(&file)?;
            let m = &f.model;
            let name = f.name.as_deref().map(|n| format!(" ({n})")).unwrap_or_default();
            writeln!(
                out,
                "ok: {} model{name}, {} symbols, dimension {}",
                m.kind(),
                m.alphabet().len(),
                m.dim()
            )?;
        }
        Command::Steady { file } => match resolve(&load(&file)?)? {
            Loaded::Classical(m) => {
                let s = m.steady_state()?;
                writeln!(out, "unique: {}", s.unique)?;
                for p in s.state.entries() {
                    writeln!(out, "{}", fmt_real(*p))?;
                }
            }
            Loaded::Quantum(m) => {
                let s = m.steady_state()?;
                writeln!(out, "unique: {}", s.unique)?;
                write_matrix(out, s.state.matrix())?;
            }
        },
        Command::Wordprob { file, word, initial } => {
            let p = match resolve(&load(&file)?)? {
                Loaded::Classical(m) => {
                    let w = parse_word(m.alphabet(), &word)?;
                    let start = match &initial {
                        Some(spec) => classical_initial(&m, spec)?,
                        None => m.default_state()?,
                    };
                    m.raw_word_weight(&w, &start)?
                }
                Loaded::Quantum(m) => {
                    let w = parse_word(m.alphabet(), &word)?;
                    let start = match &initial {
                        Some(spec) => quantum_initial(&m, spec)?,
                        None => m.default_state()?,
                    };
                    m.raw_word_weight(&w, &start)?
                }
            };
            writeln!(out, "{}", fmt_real(p.clamp(0.0, 1.0)))?;
        }
        Command::Dist { file, n, csv } => {
            let d = match resolve(&load(&file)?)? {
                Loaded::Classical(m) => enumerate_distribution(&m, n, None)?,
                Loaded::Quantum(m) => enumerate_distribution(&m, n, None)?,
            };
            match csv {
                Some(path) => {
                    std::fs::write(&path, csv_distribution(&d))?;
                    writeln!(out, "wrote {} rows to {}", d.probabilities().len(), path.display())?;
                }
                None => print_distribution(out, &d)?,
            }
        }
        Command::Entropy { file, n } => {
            let d = match resolve(&load(&file)?)? {
                Loaded::Classical(m) => enumerate_distribution(&m, n, None)?,
                Loaded::Quantum(m) => enumerate_distribution(&m, n, None)?,
            };
            writeln!(out, "{}", fmt_real(block_entropy(&d)))?;
        }
        Command::Hankel { file, rows, cols, tol } => match resolve(&load(&file)?)? {
            Loaded::Classical(m) => hankel_output(out, &m, rows.as_deref(), cols.as_deref(), tol)?,
            Loaded::Quantum(m) => hankel_output(out, &m, rows.as_deref(), cols.as_deref(), tol)?,
        },
        Command::Convert { file, to, o } => {
            let f = load(&file)?;
            let Model::Hmm(m) = &f.model else {
                return Err(Failure::Model(format!("convert expects an hmm model, found {}", f.model.kind())));
            };
            let (q, how) = match to {
                Target::HqmmEmbed => (embed_classical(m)?, "embedded"),
                Target::HqmmPure => (pure_from_reversible(m)?, "pure"),
            };
            let converted = ModelFile {
                name: f.name.as_ref().map(|n| format!("{n} ({how})")),
                source: f.source.clone(),
                model: Model::Hqmm(q),
            };
            std::fs::write(&o, serialize_model(&converted))?;
            writeln!(out, "wrote {}", o.display())?;
        }
        Command::Cluster { phi, xi, action } => {
            let basis = MeasurementBasis::try_new(phi, xi).map_err(usage)?;
            match action {
                ClusterAction::Kraus => {
                    let m = cluster_kraus(basis);
                    for s in 0..2 {
                        writeln!(out, "K_{s}:")?;
                        write_matrix(out, &m.kraus(s)[0])?;
                    }
                }
                ClusterAction::Dist { n } => {
                    print_distribution(out, &enumerate_distribution(&cluster_kraus(basis), n, None)?)?;
                }
                ClusterAction::H3 => writeln!(out, "{}", fmt_real(cluster_h3(basis)?))?,
            }
        }
        Command::ScanEntropy { phi_steps, xi_steps, o } => {
            if phi_steps == 0 || xi_steps == 0 {
                return Err(usage("grid needs at least one step along each axis"));
            }
            let grid = h3_grid(phi_steps, xi_steps)?;
            let mut csv = String::from("phi,xi,H3\n");
            let mut best = (f64::NEG_INFINITY, 0.0, 0.0);
            for &(phi, xi, h) in &grid {
                csv.push_str(&format!("{},{},{}\n", fmt_real(phi), fmt_real(xi), fmt_real(h)));
                if h > best.0 {
                    best = (h, phi, xi);
                }
            }
            std::fs::write(&o, csv)?;
            writeln!(out, "wrote {} rows to {}", grid.len(), o.display())?;
            writeln!(
                out,
                "max H3 = {} at phi = {}, xi = {}",
                fmt_real(best.0),
                fmt_real(best.1),
                fmt_real(best.2)
            )?;
        }
        Command::Sample { file, n, seed } => {
            let (a, w) = match resolve(&load(&file)?)? {
                Loaded::Classical(m) => (m.alphabet().clone(), sample_trajectory(&m, n, seed, None)?),
                Loaded::Quantum(m) => (m.alphabet().clone(), sample_trajectory(&m, n, seed, None)?),
            };
            writeln!(out, "{}", a.format_word(&w))?;
        }
    }
    Ok(())
}
