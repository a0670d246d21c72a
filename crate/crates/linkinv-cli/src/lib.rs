//! Command-line front end for the `linkinv` engines.

pub mod acceptance;

use clap::Parser;
use linkinv::diagram::{braid_closure, cut_open, parse_braid, parse_input, DiagramError, SliceDiagram};
use linkinv::quantumrep::{eval_closed_rt, eval_tangle_rt};
use linkinv::ring::{GroundElem, RationalQ};
use linkinv::schur::{eval_closed_schur, eval_tangle_schur};
use linkinv::skein;
use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Help(String),
    #[error("{0}")]
    Usage(String),
    #[error("incompatible job: {0}")]
    IncompatibleJob(String),
    #[error("bad input: {0}")]
    Input(#[from] DiagramError),
    #[error("cannot read {path}: {msg}")]
    Io { path: PathBuf, msg: String },
    #[error("computation failed: {0}")]
    Compute(String),
    #[error("engines disagree:\n{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Help(_) => 0,
            CliError::Usage(_) | CliError::IncompatibleJob(_) | CliError::Input(_) | CliError::Io { .. } => 1,
            CliError::Compute(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }
}

fn compute<E: fmt::Display>(e: E) -> CliError {
    CliError::Compute(e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Invariant {
    Homfly,
    Jones,
    Sln(usize),
    Alexander,
    Glmn(usize, usize),
}

impl Invariant {
    /// The β specialization, or `None` for the generic value.
    fn beta(self) -> Option<i32> {
        match self {
            Invariant::Homfly => None,
            Invariant::Jones => Some(2),
            Invariant::Sln(n) => Some(n as i32),
            Invariant::Alexander => Some(0),
            Invariant::Glmn(m, n) => Some(m as i32 - n as i32),
        }
    }

    /// The (m, n) used by the RT engine.
    fn rt_pair(self) -> Option<(usize, usize)> {
        match self {
            Invariant::Homfly => None,
            Invariant::Jones => Some((2, 0)),
            Invariant::Sln(n) => Some((n, 0)),
            Invariant::Alexander => Some((1, 1)),
            Invariant::Glmn(m, n) => Some((m, n)),
        }
    }

    fn schur_rank(self) -> Option<usize> {
        match self {
            Invariant::Jones => Some(2),
            Invariant::Sln(n) => Some(n),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Engine {
    Skein,
    Rt,
    Schur,
    All,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Engine::Skein => "skein",
            Engine::Rt => "rt",
            Engine::Schur => "schur",
            Engine::All => "all",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct Job {
    pub diagram: SliceDiagram,
    pub invariant: Invariant,
    pub engine: Engine,
    pub normalized: bool,
    pub reduced: bool,
}

#[derive(Debug)]
pub enum Command {
    Run(Job),
    Selftest,
}

#[derive(Parser, Debug)]
#[command(name = "linkinv", about = "Exact quantum invariants of framed links and tangles")]
struct Args {
    /// Braid word, e.g. "1 -2 1"; needs --strands.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "file")]
    braid: Option<String>,
    #[arg(long, requires = "braid")]
    strands: Option<usize>,
    /// Slice diagram file, or a file holding a `braid <n>: <letters>` line.
    #[arg(long)]
    file: Option<PathBuf>,
    /// homfly | jones | sln <n> | alexander | glmn <m> <n>
    #[arg(long, num_args = 1..=3, value_names = ["NAME", "ARGS"])]
    invariant: Vec<String>,
    #[arg(long, value_enum, default_value_t = Engine::Skein)]
    engine: Engine,
    #[arg(long)]
    reduced: bool,
    #[arg(long)]
    normalized: bool,
    #[arg(long)]
    selftest: bool,
}

fn parse_invariant(v: &[String]) -> Result<Invariant, CliError> {
    let num = |s: &String| s.parse::<usize>().map_err(|_| CliError::Usage(format!("bad number '{}'", s)));
    let inv = match v.iter().map(String::as_str).collect::<Vec<_>>().as_slice() {
        [] | ["homfly"] => Invariant::Homfly,
        ["jones"] => Invariant::Jones,
        ["alexander"] => Invariant::Alexander,
        ["sln", _] => Invariant::Sln(num(&v[1])?),
        ["glmn", _, _] => Invariant::Glmn(num(&v[1])?, num(&v[2])?),
        _ => return Err(CliError::Usage(format!("unknown invariant '{}'", v.join(" ")))),
    };
    match inv {
        Invariant::Sln(0) => Err(CliError::Usage("sln needs n >= 1".into())),
        Invariant::Glmn(0, 0) => Err(CliError::Usage("glmn needs m + n >= 1".into())),
        _ => Ok(inv),
    }
}

pub fn parse_args<I, T>(args: I) -> Result<Command, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let a = Args::try_parse_from(args).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CliError::Help(e.to_string()),
        _ => CliError::Usage(e.to_string().trim_start_matches("error: ").trim_end().to_string()),
    })?;
    if a.selftest {
        return Ok(Command::Selftest);
    }
    let diagram = match (&a.braid, &a.file) {
        (Some(w), None) => {
            let n = a.strands.ok_or_else(|| CliError::Usage("--braid needs --strands".into()))?;
            braid_closure(&parse_braid(w, n)?)
        }
        (None, Some(p)) => {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Io { path: p.clone(), msg: e.to_string() })?;
            parse_input(&text)?
        }
        _ => return Err(CliError::Usage("give --braid/--strands or --file".into())),
    };
    let job = Job {
        diagram,
        invariant: parse_invariant(&a.invariant)?,
        engine: a.engine,
        normalized: a.normalized,
        reduced: a.reduced,
    };
    job.engines()?;
    Ok(Command::Run(job))
}

/// A computed invariant in canonical rendering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Generic(GroundElem),
    Special(RationalQ),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Generic(g) => write!(f, "{}", g),
            Value::Special(r) => write!(f, "{}", r),
        }
    }
}

impl Job {
    /// Alexander values are always reduced: the closed value vanishes.
    fn is_reduced(&self) -> bool {
        self.reduced || self.invariant == Invariant::Alexander
    }

    /// Engines this job runs, in order.
    pub fn engines(&self) -> Result<Vec<Engine>, CliError> {
        let inv = self.invariant;
        let supports = |e: Engine| match e {
            Engine::Skein => true,
            Engine::Rt => inv.rt_pair().is_some(),
            Engine::Schur => inv.schur_rank().is_some(),
            Engine::All => false,
        };
        if !self.diagram.is_closed() {
            return Err(CliError::IncompatibleJob("input must be a closed diagram".into()));
        }
        match self.engine {
            Engine::All => Ok([Engine::Skein, Engine::Rt, Engine::Schur].into_iter().filter(|&e| supports(e)).collect()),
            e if supports(e) => Ok(vec![e]),
            e => Err(CliError::IncompatibleJob(match e {
                Engine::Rt => "the rt engine needs a specialized invariant".to_string(),
                _ => "the schur engine needs jones or sln <n>".to_string(),
            })),
        }
    }

    pub fn evaluate(&self, engine: Engine) -> Result<Value, CliError> {
        let d = &self.diagram;
        let inv = self.invariant;
        let reduced = self.is_reduced();
        let cut = || -> Result<SliceDiagram, CliError> {
            if d.slices.is_empty() {
                return Err(CliError::Compute("the empty diagram has no component to cut".into()));
            }
            Ok(cut_open(d, 0)?)
        };
        let raw = match (engine, inv.beta()) {
            (Engine::Skein, None) => Value::Generic(if reduced {
                skein::reduced_generic(d).map_err(compute)?
            } else {
                skein::eval_closed(d).map_err(compute)?
            }),
            (Engine::Skein, Some(b)) => Value::Special(if reduced {
                skein::reduced_generic(d).map_err(compute)?.specialize_beta(b)
            } else {
                skein::rt_sln(d, b).map_err(compute)?
            }),
            (Engine::Rt, _) => {
                let (m, n) = inv.rt_pair().expect("checked by engines()");
                Value::Special(if reduced {
                    let t = eval_tangle_rt(&cut()?, m, n).map_err(compute)?;
                    t.scalar().ok_or_else(|| CliError::Compute("cut-open tangle is not scalar".into()))?
                } else {
                    eval_closed_rt(d, m, n).map_err(compute)?
                })
            }
            (Engine::Schur, _) => {
                let m = inv.schur_rank().expect("checked by engines()");
                Value::Special(if reduced {
                    let t = eval_tangle_schur(&cut()?, m).map_err(compute)?;
                    t.scalar().ok_or_else(|| CliError::Compute("cut-open tangle is not scalar".into()))?
                } else {
                    eval_closed_schur(d, m).map_err(compute)?
                })
            }
            (Engine::All, _) => unreachable!("expanded by engines()"),
        };
        if !self.normalized {
            return Ok(raw);
        }
        let w = d.writhe()?;
        Ok(match raw {
            Value::Generic(g) => Value::Generic(skein::framing_normalize(&g, w)),
            Value::Special(r) => Value::Special(r.shift(inv.beta().unwrap() * w)),
        })
    }
}

/// Evaluates the job; in `all` mode every compatible engine must agree.
/// Returns the rendered value followed by a newline.
pub fn run(job: &Job) -> Result<String, CliError> {
    let engines = job.engines()?;
    let values: Vec<(Engine, Value)> =
        engines.iter().map(|&e| job.evaluate(e).map(|v| (e, v))).collect::<Result<_, _>>()?;
    let first = &values[0].1;
    if values.iter().any(|(_, v)| v != first) {
        let lines: Vec<String> = values.iter().map(|(e, v)| format!("  {}: {}", e, v)).collect();
        return Err(CliError::Mismatch(lines.join("\n")));
    }
    Ok(format!("{}\n", first))
}

/// Runs the acceptance suite and diagnostics, writing a table. True when
/// everything passed.
pub fn selftest(out: &mut dyn Write) -> std::io::Result<bool> {
    let mut ok = true;
    for c in acceptance::all() {
        writeln!(out, "{}", c)?;
        ok &= c.pass;
    }
    let m = acceptance::mutation_detected();
    writeln!(out, "{}", m)?;
    ok &= m.pass;
    let t = acceptance::memo_timing();
    writeln!(
        out,
        "memo timing on {}: {:.2} ms with cache ({} nodes), {:.2} ms without ({} nodes), speedup {:.1}x",
        t.diagram,
        t.with.as_secs_f64() * 1e3,
        t.nodes_with,
        t.without.as_secs_f64() * 1e3,
        t.nodes_without,
        t.speedup()
    )?;
    Ok(ok)
}

/// Full command-line behaviour; returns the exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = parse_args(args).and_then(|cmd| match cmd {
        Command::Selftest => match selftest(out) {
            Ok(true) => Ok(None),
            Ok(false) => Ok(Some(3)),
            Err(e) => Err(CliError::Compute(e.to_string())),
        },
        Command::Run(job) => {
            let s = run(&job)?;
            out.write_all(s.as_bytes()).map_err(compute)?;
            Ok(None)
        }
    });
    match result {
        Ok(None) => 0,
        Ok(Some(code)) => code,
        Err(CliError::Help(h)) => {
            let _ = write!(out, "{}", h);
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            e.exit_code()
        }
    }
}
