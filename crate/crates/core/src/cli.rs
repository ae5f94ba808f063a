//! The `lc` command line tool.
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O or parse error, 3 degenerate
//! input or exhausted retries, 4 a checked property does not hold.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::congruences::{build_asymptotic_pair, crossratio_audit, is_w_congruence, LineCongruence};
use crate::cycles::{
    construct_cycle_from_axes, diagonal_congruences, extract_axes, generate_cycle, verify_cycle, LaplaceCycle,
};
use crate::error::{Error, Vertex};
use crate::float::nonplanar_faces;
use crate::io::{from_json, read_document, to_json, Document};
use crate::nets::{asymptotically_related, axis_congruence, is_conjugate, laplace_sequence, Dir, DiscreteNet, NetWindow};
use crate::obj::{export_cycle, export_obj, ObjOptions, ObjPart};
use crate::report::Report;
use crate::scalar::scalar_from_str;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "lc", version, about = "Exact conjugate nets, Laplace transforms and period-four cycles")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Backend {
    Exact,
    Float,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Generate a random verified cycle of period four.
    GenCycle {
        #[arg(long)]
        seed: u64,
        /// Window as i0,i1,j0,j1; at least 3×3 vertices.
        #[arg(long, value_parser = parse_window)]
        window: NetWindow,
        #[arg(long, default_value_t = 100)]
        max_attempts: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the defining identities of a cycle, net, congruence or pair.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Backend::Exact)]
        backend: Backend,
        /// Relative tolerance of the float backend, as a rational.
        #[arg(long)]
        tolerance: Option<String>,
    },
    /// Apply `steps` Laplace transforms in one direction.
    Laplace {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        dir: u8,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Axis congruence of a net.
    Axis {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Test whether a congruence is a W-congruence.
    Wtest { file: PathBuf },
    /// Build an asymptotically related pair on a W-congruence.
    BuildAsym {
        file: PathBuf,
        /// Seeds file, or the seeds document given inline.
        #[arg(long)]
        seed_points: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Extract axes data from a cycle, using its diagonal congruence `f ∨ g`.
    ExtractAxes {
        file: PathBuf,
        #[arg(long, value_parser = parse_vertex, default_value = "0,0")]
        origin: Vertex,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rebuild a cycle from axes data.
    CycleFromAxes {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cross-ratios of two asymptotic pairs on a shared congruence.
    CrossratioAudit { f: PathBuf, g: PathBuf, f2: PathBuf, g2: PathBuf, a: PathBuf },
    /// Export nets and congruences as OBJ.
    ExportObj {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Homogeneous coordinate used as denominator.
        #[arg(long, default_value_t = 3)]
        chart: usize,
        /// Clip box as xmin,ymin,zmin,xmax,ymax,zmax.
        #[arg(long, value_parser = parse_box)]
        clip_box: Option<[f64; 6]>,
    },
}

fn parse_ints(s: &str, n: usize) -> Result<Vec<i64>, String> {
    let v: Vec<i64> = s.split(',').map(|x| x.trim().parse::<i64>().map_err(|e| e.to_string())).collect::<Result<_, _>>()?;
    if v.len() != n {
        return Err(format!("expected {n} comma separated integers"));
    }
    Ok(v)
}

fn parse_window(s: &str) -> Result<NetWindow, String> {
    let v = parse_ints(s, 4)?;
    NetWindow::new(v[0], v[1], v[2], v[3]).map_err(|e| e.to_string())
}

fn parse_vertex(s: &str) -> Result<Vertex, String> {
    let v = parse_ints(s, 2)?;
    Ok((v[0], v[1]))
}

fn parse_box(s: &str) -> Result<[f64; 6], String> {
    let v: Vec<f64> = s.split(',').map(|x| x.trim().parse::<f64>().map_err(|e| e.to_string())).collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| "expected six comma separated numbers".to_string())
}

/// A failed command: exit code and message.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(exit_code(&e), e.to_string())
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    use Error::*;
    match e {
        Io(_) | Parse(_) => EXIT_IO,
        BadSeedParity => EXIT_USAGE,
        NotConjugate(_) | NotAnAnet(_) | NotWCongruence(_) | SeedOffLine(_) | PlaneOffLine(_) | RouteMismatch(_)
        | NotOnCommonCongruence(_) | SuitabilityViolated { .. } | F11OffQuadric | CoincidentOpposites(_) => {
            EXIT_VIOLATION
        }
        _ => EXIT_DEGENERATE,
    }
}

type CmdResult = Result<(), Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn say(&mut self, s: &str) {
        let _ = writeln!(self.out, "{s}");
    }

    fn log(&mut self, s: &str) {
        let _ = writeln!(self.err, "{s}");
    }

    fn emit(&mut self, output: &Option<PathBuf>, d: &Document) -> CmdResult {
        let s = to_json(d);
        match output {
            Some(p) => std::fs::write(p, s).map_err(|e| Failure(EXIT_IO, format!("{}: {e}", p.display()))),
            None => {
                let _ = self.out.write_all(s.as_bytes());
                Ok(())
            }
        }
    }
}

fn load(p: &Path) -> Result<Document, Failure> {
    Ok(read_document(p)?)
}

fn wrong(p: &Path, want: &str, got: &Document) -> Failure {
    Failure(EXIT_IO, format!("{}: expected a {want}, found a {}", p.display(), got.kind()))
}

fn load_net(p: &Path) -> Result<DiscreteNet, Failure> {
    match load(p)? {
        Document::Net(n) => Ok(n),
        Document::Cycle(c) => Ok(c.f),
        d => Err(wrong(p, "net", &d)),
    }
}

fn load_congruence(p: &Path) -> Result<LineCongruence, Failure> {
    match load(p)? {
        Document::Congruence(a) => Ok(a),
        d => Err(wrong(p, "congruence", &d)),
    }
}

fn load_cycle(p: &Path) -> Result<LaplaceCycle, Failure> {
    match load(p)? {
        Document::Cycle(c) => Ok(c),
        d => Err(wrong(p, "cycle", &d)),
    }
}

#[derive(Serialize)]
struct ReportLine<'a> {
    kind: &'a str,
    clean: bool,
    #[serde(flatten)]
    report: &'a Report,
}

/// Prints the report in text and as one JSON line; nonzero exit unless clean.
fn finish(io: &mut Io<'_>, kind: &str, r: &Report) -> CmdResult {
    io.say(&r.to_string().trim_end().to_string());
    if let Some(f) = r.first_failure() {
        io.say(&format!("first failure: {} at ({}, {})", f.check, f.at.0, f.at.1));
    }
    let line = ReportLine { kind, clean: r.is_clean(), report: r };
    io.say(&serde_json::to_string(&line).expect("report serializes"));
    if r.is_clean() {
        Ok(())
    } else {
        Err(Failure(EXIT_VIOLATION, format!("{kind}: verification failed")))
    }
}

fn vertex_report(name: &str, bad: &[Vertex], total: usize) -> Report {
    let mut r = Report::new();
    r.checked = total;
    for v in bad {
        r.fail(name, *v);
    }
    r
}

fn verify(io: &mut Io<'_>, file: &Path, backend: Backend, tolerance: Option<&str>) -> CmdResult {
    let doc = load(file)?;
    if backend == Backend::Float || tolerance.is_some() {
        let Document::Net(f) = &doc else {
            return Err(Failure(EXIT_USAGE, "the float backend only verifies nets".into()));
        };
        let tol = match tolerance {
            Some(t) => num_traits::ToPrimitive::to_f64(&scalar_from_str(t)?).unwrap_or(f64::NAN),
            None => crate::float::DEFAULT_TOLERANCE,
        };
        let bad = nonplanar_faces(f, tol);
        let faces = f.window().shrink().map_or(0, |w| w.len());
        return finish(io, "net", &vertex_report("planar face", &bad, faces));
    }
    match &doc {
        Document::Cycle(c) => finish(io, "cycle", &verify_cycle(c)),
        Document::Net(f) => {
            let faces = f.window().shrink().map_or(0, |w| w.len());
            finish(io, "net", &vertex_report("planar face", &is_conjugate(f)?, faces))
        }
        Document::Congruence(a) => finish(io, "congruence", &is_w_congruence(a)?),
        Document::Pair(f, g) => {
            let mut r = Report::new();
            r.check(asymptotically_related(f, g), "asymptotically related", (f.window().i0, f.window().j0));
            finish(io, "pair", &r)
        }
        d => Err(wrong(file, "cycle, net, congruence or pair", d)),
    }
}

fn run_cmd(cmd: Cmd, io: &mut Io<'_>) -> CmdResult {
    match cmd {
        Cmd::GenCycle { seed, window, max_attempts, output } => {
            if window.width() < 3 || window.height() < 3 {
                return Err(Failure(EXIT_USAGE, "the window needs at least 3×3 vertices".into()));
            }
            let (c, rejected) = generate_cycle(seed, &window, max_attempts)?;
            if rejected > 0 {
                io.log(&format!("rejected {rejected} degenerate draws"));
            }
            let r = verify_cycle(&c);
            if !r.is_clean() {
                return Err(Failure(EXIT_VIOLATION, format!("generated cycle failed verification\n{r}")));
            }
            io.emit(&output, &Document::Cycle(c))
        }
        Cmd::Verify { file, backend, tolerance } => verify(io, &file, backend, tolerance.as_deref()),
        Cmd::Laplace { dir, steps, file, output } => {
            let f = load_net(&file)?;
            let dir = Dir::try_from(dir)?;
            io.emit(&output, &Document::Net(laplace_sequence(&f, dir, steps)?))
        }
        Cmd::Axis { file, output } => {
            let f = load_net(&file)?;
            io.emit(&output, &Document::Congruence(axis_congruence(&f)?))
        }
        Cmd::Wtest { file } => match load(&file)? {
            Document::Congruence(a) => finish(io, "congruence", &is_w_congruence(&a)?),
            Document::Cycle(c) => {
                let (k, l) = diagonal_congruences(&c)?;
                let mut r = is_w_congruence(&k)?;
                r.merge(is_w_congruence(&l)?);
                finish(io, "congruence", &r)
            }
            d => Err(wrong(&file, "congruence", &d)),
        },
        Cmd::BuildAsym { file, seed_points, output } => {
            let a = load_congruence(&file)?;
            let doc = if seed_points.trim_start().starts_with('{') {
                from_json(&seed_points)?
            } else {
                load(Path::new(&seed_points))?
            };
            let Document::Seeds(seeds) = doc else {
                return Err(wrong(Path::new(&seed_points), "seeds", &doc));
            };
            let (f, g) = build_asymptotic_pair(&a, &seeds).map_err(|e| match e {
                Error::BadSeedParity => Failure(
                    EXIT_USAGE,
                    "seed vertices must cover the four parity classes (even-even, odd-odd, even-odd, odd-even) once each"
                        .into(),
                ),
                e => e.into(),
            })?;
            io.emit(&output, &Document::Pair(f, g))
        }
        Cmd::ExtractAxes { file, origin, output } => {
            let c = load_cycle(&file)?;
            let (k, _) = diagonal_congruences(&c)?;
            io.emit(&output, &Document::Axes(extract_axes(&c.f, &k, origin)?))
        }
        Cmd::CycleFromAxes { file, output } => {
            let d = match load(&file)? {
                Document::Axes(d) => d,
                d => return Err(wrong(&file, "axes", &d)),
            };
            let r = construct_cycle_from_axes(&d)?;
            io.log(&format!("{} vertices checked along two routes", r.routes_compared));
            if !r.report.is_clean() {
                return Err(Failure(EXIT_VIOLATION, format!("rebuilt cycle failed verification\n{}", r.report)));
            }
            io.emit(&output, &Document::Cycle(r.cycle))
        }
        Cmd::CrossratioAudit { f, g, f2, g2, a } => {
            let audit = crossratio_audit(&load_net(&f)?, &load_net(&g)?, &load_net(&f2)?, &load_net(&g2)?, &load_congruence(&a)?)?;
            let show = |x: &Option<crate::scalar::ProjParam>| x.as_ref().map_or("none".to_string(), |p| p.to_string());
            io.say(&format!("black: {}", show(&audit.black)));
            io.say(&format!("white: {}", show(&audit.white)));
            finish(io, "crossratio", &audit.report)
        }
        Cmd::ExportObj { file, output, chart, clip_box } => {
            let mut opt = ObjOptions { chart, ..Default::default() };
            if let Some(b) = clip_box {
                opt.clip_min = [b[0], b[1], b[2]];
                opt.clip_max = [b[3], b[4], b[5]];
            }
            let s = match load(&file)? {
                Document::Cycle(c) => export_cycle(&c, &opt)?,
                Document::Net(f) => export_obj(&[ObjPart::Net("f", &f)], &opt)?,
                Document::Congruence(a) => export_obj(&[ObjPart::Lines("A", &a)], &opt)?,
                Document::Pair(f, g) => export_obj(&[ObjPart::Net("f", &f), ObjPart::Net("g", &g)], &opt)?,
                d => return Err(wrong(&file, "cycle, net, congruence or pair", &d)),
            };
            match output {
                Some(p) => std::fs::write(&p, s).map_err(|e| Failure(EXIT_IO, format!("{}: {e}", p.display()))),
                None => {
                    let _ = io.out.write_all(s.as_bytes());
                    Ok(())
                }
            }
        }
    }
}

/// Runs the tool on the given arguments (including the program name) and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
            } else {
                let _ = write!(out, "{}", e.render());
            }
            return code;
        }
    };
    let mut io = Io { out, err };
    match run_cmd(cli.cmd, &mut io) {
        Ok(()) => EXIT_OK,
        Err(Failure(code, msg)) => {
            io.log(&format!("error: {msg}"));
            code
        }
    }
}
