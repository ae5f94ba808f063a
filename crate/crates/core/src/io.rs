//! JSON files.
//!
//! Every file is an object with a `"type"` tag. Coordinates are arrays of
//! rational strings such as `"3"` or `"-7/2"`; grids are stored row by row
//! (`j` outer, `i` inner) over an explicit window.
//!
//! ```json
//! {"type": "net", "window": {"i0": 0, "i1": 1, "j0": 0, "j1": 0},
//!  "points": [["1", "0", "0", "0"], ["1", "1", "0", "0"]]}
//! ```
//!
//! Congruences store `"lines"` with six Plücker coordinates
//! `(p01, p02, p03, p23, p31, p12)` or `null` where undefined.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::congruences::LineCongruence;
use crate::cycles::{AxesData, LaplaceCycle};
use crate::error::{Error, Result, Vertex};
use crate::nets::{DiscreteNet, NetWindow};
use crate::plucker::{PluckerLine, Quadric};
use crate::projective::HomPoint;
use crate::scalar::{clear_denominators, scalar_from_str};

type Coords = Vec<String>;

#[derive(Serialize, Deserialize)]
struct WindowFile {
    i0: i64,
    i1: i64,
    j0: i64,
    j1: i64,
}

#[derive(Serialize, Deserialize)]
struct NetFile {
    window: WindowFile,
    points: Vec<Coords>,
}

#[derive(Serialize, Deserialize)]
struct CongruenceFile {
    window: WindowFile,
    lines: Vec<Option<Coords>>,
}

#[derive(Serialize, Deserialize)]
struct CycleFile {
    f: NetFile,
    h: NetFile,
    g: NetFile,
    k: NetFile,
    alignments: BTreeMap<String, [i64; 2]>,
}

#[derive(Serialize, Deserialize)]
struct AxesFile {
    window: WindowFile,
    origin: [i64; 2],
    f_row: Vec<Coords>,
    f_col: Vec<Coords>,
    #[serde(rename = "A_row")]
    a_row: Vec<Coords>,
    #[serde(rename = "A_col")]
    a_col: Vec<Coords>,
    f11: Coords,
}

#[derive(Serialize, Deserialize)]
struct SeedFile {
    at: [i64; 2],
    point: Coords,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum File {
    Net(NetFile),
    Congruence(CongruenceFile),
    Cycle(CycleFile),
    Axes(AxesFile),
    Quadric { coefficients: Coords },
    Pair { f: NetFile, g: NetFile },
    Seeds { seeds: Vec<SeedFile> },
}

/// Anything that can be stored in a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Net(DiscreteNet),
    Congruence(LineCongruence),
    Cycle(LaplaceCycle),
    Axes(AxesData),
    Quadric(Quadric),
    /// An asymptotically related pair `(f, g)`.
    Pair(DiscreteNet, DiscreteNet),
    /// Seed points for the asymptotic-pair construction.
    Seeds(Vec<(Vertex, HomPoint)>),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Net(_) => "net",
            Document::Congruence(_) => "congruence",
            Document::Cycle(_) => "cycle",
            Document::Axes(_) => "axes",
            Document::Quadric(_) => "quadric",
            Document::Pair(..) => "pair",
            Document::Seeds(_) => "seeds",
        }
    }
}

fn ints_out(v: &[BigInt]) -> Coords {
    v.iter().map(|x| x.to_string()).collect()
}

fn ints_in<const N: usize>(c: &[String]) -> Result<[BigInt; N]> {
    if c.len() != N {
        return Err(Error::Parse(format!("expected {N} coordinates, found {}", c.len())));
    }
    let s = c.iter().map(|x| scalar_from_str(x)).collect::<Result<Vec<_>>>()?;
    let v = clear_denominators(&s);
    Ok(v.try_into().expect("length checked"))
}

fn point_in(c: &[String]) -> Result<HomPoint> {
    HomPoint::new(ints_in(c)?).map_err(|e| Error::Parse(format!("invalid point: {e}")))
}

fn line_in(c: &[String]) -> Result<PluckerLine> {
    PluckerLine::new(ints_in(c)?).map_err(|e| Error::Parse(format!("invalid line: {e}")))
}

fn window_out(w: &NetWindow) -> WindowFile {
    WindowFile { i0: w.i0, i1: w.i1, j0: w.j0, j1: w.j1 }
}

fn window_in(w: &WindowFile) -> Result<NetWindow> {
    NetWindow::new(w.i0, w.i1, w.j0, w.j1).map_err(|e| Error::Parse(format!("invalid window: {e}")))
}

fn net_out(n: &DiscreteNet) -> NetFile {
    NetFile { window: window_out(n.window()), points: n.points().iter().map(|p| ints_out(p.coords())).collect() }
}

fn net_in(n: &NetFile) -> Result<DiscreteNet> {
    let w = window_in(&n.window)?;
    let pts = n.points.iter().map(|c| point_in(c)).collect::<Result<Vec<_>>>()?;
    DiscreteNet::new(w, pts).map_err(|e| Error::Parse(format!("invalid net: {e}")))
}

fn congruence_out(a: &LineCongruence) -> CongruenceFile {
    CongruenceFile {
        window: window_out(a.window()),
        lines: a.lines().iter().map(|l| l.as_ref().map(|l| ints_out(l.coords()))).collect(),
    }
}

fn congruence_in(a: &CongruenceFile) -> Result<LineCongruence> {
    let w = window_in(&a.window)?;
    let lines = a.lines.iter().map(|l| l.as_deref().map(line_in).transpose()).collect::<Result<Vec<_>>>()?;
    LineCongruence::new(w, lines).map_err(|e| Error::Parse(format!("invalid congruence: {e}")))
}

fn cycle_out(c: &LaplaceCycle) -> CycleFile {
    CycleFile {
        f: net_out(&c.f),
        h: net_out(&c.h),
        g: net_out(&c.g),
        k: net_out(&c.k),
        alignments: c.alignments.iter().map(|a| (a.key(), [a.shift.0, a.shift.1])).collect(),
    }
}

fn cycle_in(c: &CycleFile) -> Result<LaplaceCycle> {
    let mut alignments = Vec::new();
    for (key, s) in &c.alignments {
        let mut a: crate::cycles::Alignment = key.parse()?;
        a.shift = (s[0], s[1]);
        alignments.push(a);
    }
    alignments.sort_by_key(|a| a.key());
    Ok(LaplaceCycle { f: net_in(&c.f)?, h: net_in(&c.h)?, g: net_in(&c.g)?, k: net_in(&c.k)?, alignments })
}

fn axes_out(d: &AxesData) -> AxesFile {
    let pts = |v: &[HomPoint]| v.iter().map(|p| ints_out(p.coords())).collect();
    let lns = |v: &[PluckerLine]| v.iter().map(|l| ints_out(l.coords())).collect();
    AxesFile {
        window: window_out(&d.window),
        origin: [d.origin.0, d.origin.1],
        f_row: pts(&d.f_row),
        f_col: pts(&d.f_col),
        a_row: lns(&d.a_row),
        a_col: lns(&d.a_col),
        f11: ints_out(d.f11.coords()),
    }
}

fn axes_in(d: &AxesFile) -> Result<AxesData> {
    let pts = |v: &[Coords]| v.iter().map(|c| point_in(c)).collect::<Result<Vec<_>>>();
    let lns = |v: &[Coords]| v.iter().map(|c| line_in(c)).collect::<Result<Vec<_>>>();
    Ok(AxesData {
        window: window_in(&d.window)?,
        origin: (d.origin[0], d.origin[1]),
        f_row: pts(&d.f_row)?,
        f_col: pts(&d.f_col)?,
        a_row: lns(&d.a_row)?,
        a_col: lns(&d.a_col)?,
        f11: point_in(&d.f11)?,
    })
}

fn to_file(d: &Document) -> File {
    match d {
        Document::Net(n) => File::Net(net_out(n)),
        Document::Congruence(a) => File::Congruence(congruence_out(a)),
        Document::Cycle(c) => File::Cycle(cycle_out(c)),
        Document::Axes(x) => File::Axes(axes_out(x)),
        Document::Quadric(q) => File::Quadric { coefficients: ints_out(q.upper()) },
        Document::Pair(f, g) => File::Pair { f: net_out(f), g: net_out(g) },
        Document::Seeds(s) => File::Seeds {
            seeds: s.iter().map(|(v, p)| SeedFile { at: [v.0, v.1], point: ints_out(p.coords()) }).collect(),
        },
    }
}

fn from_file(f: File) -> Result<Document> {
    Ok(match f {
        File::Net(n) => Document::Net(net_in(&n)?),
        File::Congruence(a) => Document::Congruence(congruence_in(&a)?),
        File::Cycle(c) => Document::Cycle(cycle_in(&c)?),
        File::Axes(x) => Document::Axes(axes_in(&x)?),
        File::Quadric { coefficients } => {
            Document::Quadric(Quadric::new(ints_in(&coefficients)?).map_err(|e| Error::Parse(e.to_string()))?)
        }
        File::Pair { f, g } => Document::Pair(net_in(&f)?, net_in(&g)?),
        File::Seeds { seeds } => Document::Seeds(
            seeds.iter().map(|s| Ok(((s.at[0], s.at[1]), point_in(&s.point)?))).collect::<Result<_>>()?,
        ),
    })
}

/// Pretty-printed JSON with a trailing newline. Output depends only on the
/// document, so equal documents give identical bytes.
pub fn to_json(d: &Document) -> String {
    let mut s = serde_json::to_string_pretty(&to_file(d)).expect("plain data serializes");
    s.push('\n');
    s
}

/// Parses a document; syntax errors carry line and column.
pub fn from_json(s: &str) -> Result<Document> {
    let f: File = serde_json::from_str(s)
        .map_err(|e| Error::Parse(format!("{} at line {} column {}", e, e.line(), e.column())))?;
    from_file(f)
}

pub fn read_document(path: &Path) -> Result<Document> {
    let s = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    from_json(&s)
}

pub fn write_document(path: &Path, d: &Document) -> Result<()> {
    fs::write(path, to_json(d)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
