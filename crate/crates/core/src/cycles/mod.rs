//! Laplace cycles of period four.
//!
//! A cycle stores the four nets `f, h, g, k` together with the index
//! alignments relating them. An alignment `target = L_d source` with shift
//! `(a, b)` means `target(i + a, j + b) = L_d source(i, j)` wherever both
//! sides are defined. The cycles built here use
//!
//! ```text
//! h = L₁f, k = L₂f, k = L₁g, h = L₂g                     (no shift)
//! g = L₁h, f = L₂h, f = L₁k, g = L₂k                     (shift (1, 1))
//! ```
//!
//! so that `g(i+1, j+1) = L₁₁f(i, j) = L₂₂f(i, j)` and four Laplace steps in
//! either direction move `f` by `(2, 2)`.

mod axes;
mod lemmas;
mod pointwise;

use std::fmt;
use std::str::FromStr;

pub use axes::{construct_cycle_from_axes, extract_axes, lemma21_check, lemma21_transport, AxesData, AxesRebuild};
pub use lemmas::{lemma18_check, lemma19_construct, Lemma18, Lemma19};
pub use pointwise::{construct_cycle_pointwise, generate_cycle, random_seed, CycleSeed, Slot};

use crate::congruences::LineCongruence;
use crate::error::{Error, Result, Vertex};
use crate::nets::{laplace_point, osculating_plane, Dir, DiscreteNet, NetWindow};
use crate::plucker::{line_from_planes, line_from_points};
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NetName {
    F,
    G,
    H,
    K,
}

impl NetName {
    pub const ALL: [NetName; 4] = [NetName::F, NetName::G, NetName::H, NetName::K];

    pub fn letter(self) -> char {
        match self {
            NetName::F => 'f',
            NetName::G => 'g',
            NetName::H => 'h',
            NetName::K => 'k',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Self::ALL.into_iter().find(|n| n.letter() == c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alignment {
    pub target: NetName,
    pub dir: Dir,
    pub source: NetName,
    pub shift: Vertex,
}

impl Alignment {
    /// Key used in files, e.g. `h=L1f`.
    pub fn key(&self) -> String {
        let d = match self.dir {
            Dir::First => 1,
            Dir::Second => 2,
        };
        format!("{}=L{}{}", self.target.letter(), d, self.source.letter())
    }
}

impl fmt::Display for Alignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} shift ({}, {})", self.key(), self.shift.0, self.shift.1)
    }
}

impl FromStr for Alignment {
    type Err = Error;

    /// Parses a key such as `g=L1h`; the shift is set to zero.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid alignment key {s:?}"));
        let c: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if c.len() != 5 || c[1] != '=' || c[2] != 'L' {
            return Err(bad());
        }
        let dir = match c[3] {
            '1' => Dir::First,
            '2' => Dir::Second,
            _ => return Err(bad()),
        };
        Ok(Alignment {
            target: NetName::from_letter(c[0]).ok_or_else(bad)?,
            dir,
            source: NetName::from_letter(c[4]).ok_or_else(bad)?,
            shift: (0, 0),
        })
    }
}

/// The eight alignments of a cycle, sorted by key.
pub fn standard_alignments() -> Vec<Alignment> {
    use NetName::*;
    let a = |target, dir, source, shift| Alignment { target, dir, source, shift };
    let mut v = vec![
        a(H, Dir::First, F, (0, 0)),
        a(K, Dir::Second, F, (0, 0)),
        a(K, Dir::First, G, (0, 0)),
        a(H, Dir::Second, G, (0, 0)),
        a(G, Dir::First, H, (1, 1)),
        a(F, Dir::Second, H, (1, 1)),
        a(F, Dir::First, K, (1, 1)),
        a(G, Dir::Second, K, (1, 1)),
    ];
    v.sort_by_key(|a| a.key());
    v
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplaceCycle {
    pub f: DiscreteNet,
    pub h: DiscreteNet,
    pub g: DiscreteNet,
    pub k: DiscreteNet,
    pub alignments: Vec<Alignment>,
}

impl LaplaceCycle {
    pub fn net(&self, n: NetName) -> &DiscreteNet {
        match n {
            NetName::F => &self.f,
            NetName::G => &self.g,
            NetName::H => &self.h,
            NetName::K => &self.k,
        }
    }
}

fn check_alignment(c: &LaplaceCycle, a: &Alignment, r: &mut Report) {
    let src = c.net(a.source);
    let tgt = c.net(a.target);
    let Some(faces) = src.window().shrink() else {
        return;
    };
    let name = a.key();
    for v in faces.vertices() {
        let t = (v.0 + a.shift.0, v.1 + a.shift.1);
        let Some(expected) = tgt.get(t) else {
            continue;
        };
        match laplace_point(src, a.dir, v) {
            Ok(x) => r.check(&x == expected, &name, t),
            Err(_) => r.check(false, &format!("{name} undefined"), v),
        }
    }
}

fn laplace_pointwise(f: &DiscreteNet, dir: Dir) -> Option<DiscreteNet> {
    let w = f.window().shrink()?;
    DiscreteNet::from_fn(w, |v| laplace_point(f, dir, v)).ok()
}

fn check_period_four(f: &DiscreteNet, r: &mut Report) {
    let a = laplace_pointwise(f, Dir::First).and_then(|x| laplace_pointwise(&x, Dir::First));
    let b = laplace_pointwise(f, Dir::Second).and_then(|x| laplace_pointwise(&x, Dir::Second));
    match (a, b) {
        (Some(a), Some(b)) => {
            for v in a.window().vertices() {
                r.check(a.get(v) == b.get(v), "L11f=L22f", v);
            }
        }
        _ => {
            if f.window().i1 - f.window().i0 >= 2 && f.window().j1 - f.window().j0 >= 2 {
                r.fail("L11f=L22f undefined", (f.window().i0, f.window().j0));
            }
        }
    }
}

/// Checks `𝒪₁x = 𝒪₂y`, `𝒪₂x = 𝒪₁y` and equality of the axis lines, and
/// that the joining line `x ∨ y` is the axis.
fn check_opposite(x: &DiscreteNet, y: &DiscreteNet, tag: &str, r: &mut Report) {
    let Some(w) = x.window().intersect(y.window()).and_then(|w| w.interior()) else {
        return;
    };
    for v in w.vertices() {
        let planes = |n: &DiscreteNet| {
            Some((osculating_plane(n, Dir::First, v).ok()?, osculating_plane(n, Dir::Second, v).ok()?))
        };
        let (Some((x1, x2)), Some((y1, y2))) = (planes(x), planes(y)) else {
            r.fail(&format!("{tag} osculating planes undefined"), v);
            continue;
        };
        r.check(x1 == y2, &format!("{tag} O1=O2"), v);
        r.check(x2 == y1, &format!("{tag} O2=O1"), v);
        let ax = line_from_planes(&x1, &x2).ok();
        let ay = line_from_planes(&y1, &y2).ok();
        r.check(ax.is_some() && ax == ay, &format!("{tag} common axis"), v);
        let join = line_from_points(x.at(v).expect("in window"), y.at(v).expect("in window")).ok();
        r.check(join.is_some() && join == ax, &format!("{tag} join is axis"), v);
    }
}

/// Verifies every stored alignment, `L₁₁f = L₂₂f`, and that opposite nets
/// are asymptotically related with the diagonal lines as common axes.
pub fn verify_cycle(c: &LaplaceCycle) -> Report {
    let mut r = Report::new();
    for a in &c.alignments {
        check_alignment(c, a, &mut r);
    }
    check_period_four(&c.f, &mut r);
    check_opposite(&c.f, &c.g, "f,g", &mut r);
    check_opposite(&c.h, &c.k, "h,k", &mut r);
    r
}

/// `K = f ∨ g` and `L = h ∨ k` on the common windows.
pub fn diagonal_congruences(c: &LaplaceCycle) -> Result<(LineCongruence, LineCongruence)> {
    let join = |x: &DiscreteNet, y: &DiscreteNet| -> Result<LineCongruence> {
        let w = x.window().intersect(y.window()).ok_or(Error::WindowMismatch)?;
        LineCongruence::from_fn(w, |v| line_from_points(x.at(v)?, y.at(v)?).map_err(|_| Error::CoincidentOpposites(v)))
    };
    Ok((join(&c.f, &c.g)?, join(&c.h, &c.k)?))
}

/// Window on which all four nets of a cycle built on `w` are defined.
pub fn common_window(c: &LaplaceCycle) -> Option<NetWindow> {
    c.f.window().intersect(c.g.window())?.intersect(c.h.window())?.intersect(c.k.window())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alignment_keys_round_trip() {
        for a in standard_alignments() {
            let b: Alignment = a.key().parse().unwrap();
            assert_eq!((b.target, b.dir, b.source), (a.target, a.dir, a.source));
        }
        assert!("h=L3f".parse::<Alignment>().is_err());
        assert!("x=L1f".parse::<Alignment>().is_err());
    }
}
