//! Discrete line congruences, W-congruences and the nets they carry.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result, Vertex};
use crate::nets::{DiscreteNet, NetWindow};
use crate::plucker::{in_regulus, join_line_point, lines_meet, meet_line_plane, PluckerLine};
use crate::projective::{coplanar, cross_ratio, HomPlane, HomPoint};
use crate::report::Report;
use crate::scalar::ProjParam;

/// A map from a window to lines, with undefined entries allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineCongruence {
    window: NetWindow,
    lines: Vec<Option<PluckerLine>>,
}

impl LineCongruence {
    pub fn new(window: NetWindow, lines: Vec<Option<PluckerLine>>) -> Result<Self> {
        if lines.len() != window.len() {
            return Err(Error::WindowMismatch);
        }
        Ok(Self { window, lines })
    }

    pub fn from_fn(window: NetWindow, mut f: impl FnMut(Vertex) -> Result<PluckerLine>) -> Result<Self> {
        let lines = window.vertices().map(|v| f(v).map(Some)).collect::<Result<Vec<_>>>()?;
        Ok(Self { window, lines })
    }

    pub fn window(&self) -> &NetWindow {
        &self.window
    }

    pub fn lines(&self) -> &[Option<PluckerLine>] {
        &self.lines
    }

    /// `None` outside the window, `Some(None)` at an undefined entry.
    pub fn get(&self, v: Vertex) -> Option<Option<&PluckerLine>> {
        self.window.index(v).map(|k| self.lines[k].as_ref())
    }

    /// The defined line at `v`.
    pub fn line(&self, v: Vertex) -> Result<&PluckerLine> {
        match self.get(v) {
            None => Err(Error::OutOfWindow(v)),
            Some(None) => Err(Error::UndefinedEntry(v)),
            Some(Some(l)) => Ok(l),
        }
    }

    pub fn is_total(&self) -> bool {
        self.lines.iter().all(Option::is_some)
    }

    pub fn restrict(&self, w: &NetWindow) -> Result<Self> {
        if self.window.intersect(w) != Some(*w) {
            return Err(Error::WindowMismatch);
        }
        let lines = w.vertices().map(|v| self.get(v).flatten().cloned()).collect();
        Self::new(*w, lines)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    EvenEven,
    EvenOdd,
    OddEven,
    OddOdd,
}

impl Parity {
    pub fn of((i, j): Vertex) -> Self {
        match (i.rem_euclid(2), j.rem_euclid(2)) {
            (0, 0) => Parity::EvenEven,
            (0, _) => Parity::EvenOdd,
            (_, 0) => Parity::OddEven,
            _ => Parity::OddOdd,
        }
    }

    pub fn is_black(self) -> bool {
        matches!(self, Parity::EvenEven | Parity::OddOdd)
    }
}

pub fn is_black(v: Vertex) -> bool {
    Parity::of(v).is_black()
}

/// Checks that the four lines of every elementary face lie in a regulus.
pub fn is_w_congruence(a: &LineCongruence) -> Result<Report> {
    let mut r = Report::new();
    for (i, j) in a.window().faces() {
        let l0 = a.line((i, j))?;
        let l1 = a.line((i + 1, j))?;
        let l2 = a.line((i + 1, j + 1))?;
        let l3 = a.line((i, j + 1))?;
        r.check(in_regulus(l0, l1, l2, l3), "regulus", (i, j));
    }
    Ok(r)
}

fn require_w(a: &LineCongruence) -> Result<()> {
    let r = is_w_congruence(a)?;
    match r.first_failure() {
        Some(x) => Err(Error::NotWCongruence(x.at)),
        None => Ok(()),
    }
}

const AXIS_STEPS: [Vertex; 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
const DIAGONALS: [Vertex; 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];

fn add(v: Vertex, d: Vertex) -> Vertex {
    (v.0 + d.0, v.1 + d.1)
}

/// `(x ∨ A_center) ∩ A_to`. Only the center has to be skew to the other two
/// lines; lines two steps apart may meet without harming the map.
fn project(a: &LineCongruence, center: Vertex, from: Vertex, to: Vertex, x: &HomPoint) -> Result<HomPoint> {
    let (c, src, dst) = (a.line(center)?, a.line(from)?, a.line(to)?);
    if lines_meet(c, src) || lines_meet(c, dst) {
        return Err(Error::DegenerateProjection(to));
    }
    if !src.contains(x) {
        return Err(Error::PointNotOnLine);
    }
    let plane = join_line_point(c, x).map_err(|_| Error::DegenerateProjection(to))?;
    meet_line_plane(dst, &plane).map_err(|_| Error::DegenerateProjection(to))
}

/// Builds the asymptotically related pair `(f, g)` with axis congruence `a`
/// from the values of `f` at four vertices of pairwise different parity.
///
/// Each parity class of `f` is filled by two-step projections
/// `f_{i+2}^j = (f_i^j ∨ A_{i+1}^j) ∩ A_{i+2}^j` and their analogues; `g`
/// comes from diagonal projections such as
/// `g_{i+1}^{j+1} = (f_i^j ∨ A_{i+1}^j) ∩ A_{i+1}^{j+1}`. Every alternative
/// route is recomputed and must agree.
pub fn build_asymptotic_pair(a: &LineCongruence, seeds: &[(Vertex, HomPoint)]) -> Result<(DiscreteNet, DiscreteNet)> {
    let w = *a.window();
    if seeds.len() != 4 {
        return Err(Error::BadSeedParity);
    }
    let mut classes: Vec<Parity> = seeds.iter().map(|(v, _)| Parity::of(*v)).collect();
    classes.sort();
    classes.dedup();
    if classes.len() != 4 {
        return Err(Error::BadSeedParity);
    }
    for (v, x) in seeds {
        if !a.line(*v)?.contains(x) {
            return Err(Error::SeedOffLine(*v));
        }
    }
    require_w(a)?;

    let mut f: BTreeMap<Vertex, HomPoint> = BTreeMap::new();
    let mut queue: VecDeque<Vertex> = VecDeque::new();
    for (v, x) in seeds {
        f.insert(*v, x.clone());
        queue.push_back(*v);
    }
    while let Some(v) = queue.pop_front() {
        let x = f[&v].clone();
        for d in AXIS_STEPS {
            let mid = add(v, d);
            let to = add(mid, d);
            if !w.contains(to) || f.contains_key(&to) {
                continue;
            }
            f.insert(to, project(a, mid, v, to, &x)?);
            queue.push_back(to);
        }
    }
    // every two-step edge, in particular both routes around each 2×2 loop
    for v in w.vertices() {
        for d in [(1, 0), (0, 1)] {
            let mid = add(v, d);
            let to = add(mid, d);
            if w.contains(to) && project(a, mid, v, to, &f[&v])? != f[&to] {
                return Err(Error::RouteMismatch(to));
            }
        }
    }

    let mut g: BTreeMap<Vertex, HomPoint> = BTreeMap::new();
    for v in w.vertices() {
        let mut value: Option<HomPoint> = None;
        for d in DIAGONALS {
            let src = add(v, d);
            if !w.contains(src) {
                continue;
            }
            for center in [(src.0, v.1), (v.0, src.1)] {
                let y = project(a, center, src, v, &f[&src])?;
                match &value {
                    None => value = Some(y),
                    Some(prev) if prev != &y => return Err(Error::RouteMismatch(v)),
                    Some(_) => {}
                }
            }
        }
        g.insert(v, value.ok_or(Error::WindowTooSmall)?);
    }
    let fnet = DiscreteNet::from_fn(w, |v| Ok(f[&v].clone()))?;
    let gnet = DiscreteNet::from_fn(w, |v| Ok(g[&v].clone()))?;
    Ok((fnet, gnet))
}

/// Seed of an A-net on a W-congruence: a tangent plane at one black and at
/// one white vertex, each containing the congruence line there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnetSeed {
    pub black: (Vertex, HomPlane),
    pub white: (Vertex, HomPlane),
}

enum Item {
    Plane(HomPlane),
    Point(HomPoint),
}

/// Propagates from one tangent plane: planes on vertices of the start color,
/// points on the others. `f_w = A_w ∩ τ_v` and `τ_v = A_v ∨ f_w` for
/// neighbors `v`, `w`.
fn anet_chain(a: &LineCongruence, start: Vertex, plane: &HomPlane) -> Result<BTreeMap<Vertex, Item>> {
    let w = *a.window();
    let mut known: BTreeMap<Vertex, Item> = BTreeMap::new();
    known.insert(start, Item::Plane(plane.clone()));
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for d in AXIS_STEPS {
            let u = add(v, d);
            if !w.contains(u) {
                continue;
            }
            let line = a.line(u)?;
            let new = match &known[&v] {
                Item::Plane(p) => Item::Point(meet_line_plane(line, p).map_err(|_| Error::DegenerateProjection(u))?),
                Item::Point(x) => Item::Plane(join_line_point(line, x).map_err(|_| Error::DegenerateProjection(u))?),
            };
            match known.get(&u) {
                None => {
                    known.insert(u, new);
                    queue.push_back(u);
                }
                Some(Item::Point(x)) if matches!(&new, Item::Point(y) if y == x) => {}
                Some(Item::Plane(p)) if matches!(&new, Item::Plane(q) if q == p) => {}
                Some(_) => return Err(Error::RouteMismatch(u)),
            }
        }
    }
    Ok(known)
}

/// The A-net on `a` with the prescribed tangent planes at one black and one
/// white vertex.
pub fn build_anet(a: &LineCongruence, seed: &AnetSeed) -> Result<DiscreteNet> {
    let (bv, bp) = &seed.black;
    let (wv, wp) = &seed.white;
    if !is_black(*bv) || is_black(*wv) {
        return Err(Error::BadSeedParity);
    }
    for (v, p) in [(bv, bp), (wv, wp)] {
        if !a.line(*v)?.lies_in(p) {
            return Err(Error::PlaneOffLine(*v));
        }
    }
    require_w(a)?;
    let from_black = anet_chain(a, *bv, bp)?;
    let from_white = anet_chain(a, *wv, wp)?;
    DiscreteNet::from_fn(*a.window(), |v| {
        let chain = if is_black(v) { &from_white } else { &from_black };
        match chain.get(&v) {
            Some(Item::Point(x)) => Ok(x.clone()),
            _ => Err(Error::DegenerateProjection(v)),
        }
    })
}

/// Two A-nets on the same W-congruence. Their connecting lines are the
/// congruence lines, which lie in both tangent planes.
pub fn build_anet_pair(a: &LineCongruence, f_seed: &AnetSeed, g_seed: &AnetSeed) -> Result<(DiscreteNet, DiscreteNet)> {
    Ok((build_anet(a, f_seed)?, build_anet(a, g_seed)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossRatioAudit {
    pub black: Option<ProjParam>,
    pub white: Option<ProjParam>,
    pub report: Report,
}

/// `CR(f, f'; g, g')` at every vertex, grouped by color.
pub fn crossratio_audit(
    f: &DiscreteNet,
    g: &DiscreteNet,
    f2: &DiscreteNet,
    g2: &DiscreteNet,
    a: &LineCongruence,
) -> Result<CrossRatioAudit> {
    let w = *a.window();
    let mut black: Option<ProjParam> = None;
    let mut white: Option<ProjParam> = None;
    let mut report = Report::new();
    for v in w.vertices() {
        let line = a.line(v)?;
        let pts = [f.at(v)?, f2.at(v)?, g.at(v)?, g2.at(v)?];
        if !pts.iter().all(|x| line.contains(x)) {
            return Err(Error::NotOnCommonCongruence(v));
        }
        let cr = cross_ratio(pts[0], pts[1], pts[2], pts[3])?;
        let slot = if is_black(v) { &mut black } else { &mut white };
        match slot {
            None => {
                *slot = Some(cr);
                report.check(true, "cross-ratio", v);
            }
            Some(c) => report.check(c == &cr, "cross-ratio", v),
        }
    }
    Ok(CrossRatioAudit { black, white, report })
}

/// The eight incidences `a_i ∈ b_j ∨ b_k ∨ b_l`, `b_i ∈ a_j ∨ a_k ∨ a_l`.
pub fn moebius_conditions(a: &[HomPoint; 4], b: &[HomPoint; 4]) -> [bool; 8] {
    let others = |i: usize| -> [usize; 3] {
        let mut o = [0; 3];
        let mut k = 0;
        for j in 0..4 {
            if j != i {
                o[k] = j;
                k += 1;
            }
        }
        o
    };
    std::array::from_fn(|n| {
        let (x, y) = if n < 4 { (a, b) } else { (b, a) };
        let i = n % 4;
        let [p, q, r] = others(i);
        coplanar(&x[i], &y[p], &y[q], &y[r])
    })
}

/// Möbius conditions for the face at `(i, j)` with
/// `a = (f_{00}, f_{10}, g_{01}, g_{11})` and `b = (f_{11}, f_{01}, g_{10}, g_{00})`.
pub fn moebius_check(f: &DiscreteNet, g: &DiscreteNet, (i, j): Vertex) -> Result<[bool; 8]> {
    let fv = |di: i64, dj: i64| f.at((i + di, j + dj)).cloned();
    let gv = |di: i64, dj: i64| g.at((i + di, j + dj)).cloned();
    let a = [fv(0, 0)?, fv(1, 0)?, gv(0, 1)?, gv(1, 1)?];
    let b = [fv(1, 1)?, fv(0, 1)?, gv(1, 0)?, gv(0, 0)?];
    Ok(moebius_conditions(&a, &b))
}
