//! Discrete nets on finite windows of the integer grid.
//!
//! Windows are inclusive rectangles. A Laplace transform shrinks both extents
//! by one: the transform at `(i, j)` is computed from the face with lower
//! left corner `(i, j)`.

use serde::{Deserialize, Serialize};

use crate::congruences::LineCongruence;
use crate::error::{Error, Result, Vertex};
use crate::plucker::{line_from_planes, line_from_points, meet_lines};
use crate::projective::{collinear, coplanar, join_plane, point_rank, HomPlane, HomPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NetWindow {
    pub i0: i64,
    pub i1: i64,
    pub j0: i64,
    pub j1: i64,
}

impl NetWindow {
    pub fn new(i0: i64, i1: i64, j0: i64, j1: i64) -> Result<Self> {
        if i0 > i1 || j0 > j1 {
            return Err(Error::WindowTooSmall);
        }
        Ok(Self { i0, i1, j0, j1 })
    }

    /// The square `[0, n-1]²`.
    pub fn square(n: i64) -> Self {
        Self { i0: 0, i1: n - 1, j0: 0, j1: n - 1 }
    }

    pub fn contains(&self, (i, j): Vertex) -> bool {
        self.i0 <= i && i <= self.i1 && self.j0 <= j && j <= self.j1
    }

    pub fn width(&self) -> usize {
        (self.i1 - self.i0 + 1) as usize
    }

    pub fn height(&self) -> usize {
        (self.j1 - self.j0 + 1) as usize
    }

    pub fn len(&self) -> usize {
        self.width() * self.height()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Row-major index (`j` outer, `i` inner).
    pub fn index(&self, (i, j): Vertex) -> Option<usize> {
        self.contains((i, j))
            .then(|| ((j - self.j0) as usize) * self.width() + (i - self.i0) as usize)
    }

    /// Vertices in row-major order.
    pub fn vertices(self) -> impl Iterator<Item = Vertex> {
        (self.j0..=self.j1).flat_map(move |j| (self.i0..=self.i1).map(move |i| (i, j)))
    }

    /// Lower left corners of all elementary faces.
    pub fn faces(self) -> impl Iterator<Item = Vertex> {
        (self.j0..self.j1).flat_map(move |j| (self.i0..self.i1).map(move |i| (i, j)))
    }

    /// The window of a Laplace transform.
    pub fn shrink(&self) -> Option<Self> {
        (self.i1 > self.i0 && self.j1 > self.j0)
            .then(|| Self { i0: self.i0, i1: self.i1 - 1, j0: self.j0, j1: self.j1 - 1 })
    }

    /// Vertices with both neighbors in each direction.
    pub fn interior(&self) -> Option<Self> {
        (self.i1 - self.i0 >= 2 && self.j1 - self.j0 >= 2)
            .then(|| Self { i0: self.i0 + 1, i1: self.i1 - 1, j0: self.j0 + 1, j1: self.j1 - 1 })
    }

    pub fn intersect(&self, o: &Self) -> Option<Self> {
        Self::new(self.i0.max(o.i0), self.i1.min(o.i1), self.j0.max(o.j0), self.j1.min(o.j1)).ok()
    }

    pub fn shifted(&self, di: i64, dj: i64) -> Self {
        Self { i0: self.i0 + di, i1: self.i1 + di, j0: self.j0 + dj, j1: self.j1 + dj }
    }
}

/// Grid direction: `First` steps `i`, `Second` steps `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dir {
    First,
    Second,
}

impl Dir {
    pub fn step(self) -> Vertex {
        match self {
            Dir::First => (1, 0),
            Dir::Second => (0, 1),
        }
    }

    pub fn other(self) -> Self {
        match self {
            Dir::First => Dir::Second,
            Dir::Second => Dir::First,
        }
    }
}

impl TryFrom<u8> for Dir {
    type Error = Error;

    fn try_from(d: u8) -> Result<Self> {
        match d {
            1 => Ok(Dir::First),
            2 => Ok(Dir::Second),
            _ => Err(Error::pre(format!("direction must be 1 or 2, got {d}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteNet {
    window: NetWindow,
    points: Vec<HomPoint>,
}

impl DiscreteNet {
    /// Takes points in row-major order.
    pub fn new(window: NetWindow, points: Vec<HomPoint>) -> Result<Self> {
        if points.len() != window.len() {
            return Err(Error::WindowMismatch);
        }
        Ok(Self { window, points })
    }

    pub fn from_fn(window: NetWindow, mut f: impl FnMut(Vertex) -> Result<HomPoint>) -> Result<Self> {
        let points = window.vertices().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(Self { window, points })
    }

    pub fn window(&self) -> &NetWindow {
        &self.window
    }

    pub fn points(&self) -> &[HomPoint] {
        &self.points
    }

    pub fn get(&self, v: Vertex) -> Option<&HomPoint> {
        self.window.index(v).map(|k| &self.points[k])
    }

    pub fn at(&self, v: Vertex) -> Result<&HomPoint> {
        self.get(v).ok_or(Error::OutOfWindow(v))
    }

    pub fn set(&mut self, v: Vertex, x: HomPoint) -> Result<()> {
        let k = self.window.index(v).ok_or(Error::OutOfWindow(v))?;
        self.points[k] = x;
        Ok(())
    }

    /// Same points, with every index moved by `(di, dj)`.
    pub fn shifted(&self, di: i64, dj: i64) -> Self {
        Self { window: self.window.shifted(di, dj), points: self.points.clone() }
    }

    pub fn restrict(&self, w: &NetWindow) -> Result<Self> {
        if self.window.intersect(w) != Some(*w) {
            return Err(Error::WindowMismatch);
        }
        Self::from_fn(*w, |v| self.at(v).cloned())
    }

    /// Pointwise equality on the common window; false if there is none.
    pub fn agrees_with(&self, other: &Self) -> bool {
        match self.window.intersect(&other.window) {
            Some(w) => w.vertices().all(|v| self.get(v) == other.get(v)),
            None => false,
        }
    }

    fn face(&self, (i, j): Vertex) -> Result<[&HomPoint; 4]> {
        Ok([self.at((i, j))?, self.at((i + 1, j))?, self.at((i + 1, j + 1))?, self.at((i, j + 1))?])
    }
}

fn add(v: Vertex, d: Vertex) -> Vertex {
    (v.0 + d.0, v.1 + d.1)
}

fn sub(v: Vertex, d: Vertex) -> Vertex {
    (v.0 - d.0, v.1 - d.1)
}

/// Faces whose four vertices are not coplanar.
pub fn is_conjugate(f: &DiscreteNet) -> Result<Vec<Vertex>> {
    let w = f.window();
    if w.i1 == w.i0 || w.j1 == w.j0 {
        return Err(Error::WindowTooSmall);
    }
    let mut bad = Vec::new();
    for v in w.faces() {
        let [a, b, c, d] = f.face(v)?;
        if !coplanar(a, b, c, d) {
            bad.push(v);
        }
    }
    Ok(bad)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    /// Vertices whose osculating triple in the given direction (1 or 2) is collinear.
    pub collinear_triples: Vec<(Vertex, u8)>,
    /// Faces whose four vertices are collinear.
    pub collinear_faces: Vec<Vertex>,
}

impl RegularityReport {
    pub fn is_regular(&self) -> bool {
        self.collinear_triples.is_empty() && self.collinear_faces.is_empty()
    }
}

pub fn is_regular(f: &DiscreteNet) -> RegularityReport {
    let mut r = RegularityReport::default();
    let w = *f.window();
    for v in w.vertices() {
        for (dir, tag) in [(Dir::First, 1u8), (Dir::Second, 2u8)] {
            let s = dir.step();
            if let (Some(a), Some(b), Some(c)) = (f.get(sub(v, s)), f.get(v), f.get(add(v, s))) {
                if collinear(a, b, c) {
                    r.collinear_triples.push((v, tag));
                }
            }
        }
    }
    for v in w.faces() {
        let q = f.face(v).expect("face inside window");
        if point_rank(&q) <= 2 {
            r.collinear_faces.push(v);
        }
    }
    r
}

pub fn osculating_plane(f: &DiscreteNet, dir: Dir, (i, j): Vertex) -> Result<HomPlane> {
    let s = dir.step();
    let v = (i, j);
    join_plane(f.at(sub(v, s))?, f.at(v)?, f.at(add(v, s))?)
}

/// `L₁f(i,j) = (f_i^j ∨ f_{i+1}^j) ∩ (f_i^{j+1} ∨ f_{i+1}^{j+1})` and the
/// analogue with the roles of the directions exchanged.
pub fn laplace(f: &DiscreteNet, dir: Dir) -> Result<DiscreteNet> {
    let w = f.window().shrink().ok_or(Error::WindowTooSmall)?;
    DiscreteNet::from_fn(w, |v| laplace_point(f, dir, v))
}

pub(crate) fn laplace_point(f: &DiscreteNet, dir: Dir, v: Vertex) -> Result<HomPoint> {
    let s = dir.step();
    let t = dir.other().step();
    let a = f.at(v)?;
    let b = f.at(add(v, s))?;
    let c = f.at(add(v, t))?;
    let d = f.at(add(add(v, s), t))?;
    if !coplanar(a, b, c, d) {
        return Err(Error::NotConjugate(v));
    }
    let l = line_from_points(a, b).map_err(|_| Error::SingularFace(v))?;
    let m = line_from_points(c, d).map_err(|_| Error::SingularFace(v))?;
    meet_lines(&l, &m).map_err(|_| Error::SingularFace(v))
}

pub fn laplace_sequence(f: &DiscreteNet, dir: Dir, l: usize) -> Result<DiscreteNet> {
    let mut cur = f.clone();
    for step in 0..l {
        if cur.window().shrink().is_none() {
            return Err(Error::WindowExhausted(step));
        }
        cur = laplace(&cur, dir)?;
    }
    Ok(cur)
}

/// `L₁₁f = L₂₂f` on the common window.
pub fn is_period_four(f: &DiscreteNet) -> Result<bool> {
    let w = f.window();
    if w.i1 - w.i0 < 2 || w.j1 - w.j0 < 2 {
        return Err(Error::WindowTooSmall);
    }
    let a = laplace_sequence(f, Dir::First, 2)?;
    let b = laplace_sequence(f, Dir::Second, 2)?;
    Ok(a == b)
}

/// The common osculating plane at an A-net vertex.
pub fn tangent_plane(f: &DiscreteNet, v: Vertex) -> Result<HomPlane> {
    let p = osculating_plane(f, Dir::First, v)?;
    let q = osculating_plane(f, Dir::Second, v)?;
    if p != q {
        return Err(Error::NotAnAnet(v));
    }
    Ok(p)
}

pub fn is_anet(f: &DiscreteNet) -> bool {
    match f.window().interior() {
        Some(w) => w.vertices().all(|v| tangent_plane(f, v).is_ok()),
        None => false,
    }
}

/// `𝒪₁f ∩ 𝒪₂f` at interior vertices; undefined where the planes agree or
/// do not exist.
pub fn axis_congruence(f: &DiscreteNet) -> Result<LineCongruence> {
    let w = f.window().interior().ok_or(Error::WindowTooSmall)?;
    let lines = w
        .vertices()
        .map(|v| {
            let p = osculating_plane(f, Dir::First, v).ok()?;
            let q = osculating_plane(f, Dir::Second, v).ok()?;
            line_from_planes(&p, &q).ok()
        })
        .collect();
    LineCongruence::new(w, lines)
}

/// `𝒪₁f = 𝒪₂g` and `𝒪₂f = 𝒪₁g` at every common interior vertex.
pub fn asymptotically_related(f: &DiscreteNet, g: &DiscreteNet) -> bool {
    let Some(w) = f.window().intersect(g.window()).and_then(|w| w.interior()) else {
        return false;
    };
    w.vertices().all(|v| {
        let planes = |n: &DiscreteNet| {
            Some((osculating_plane(n, Dir::First, v).ok()?, osculating_plane(n, Dir::Second, v).ok()?))
        };
        match (planes(f), planes(g)) {
            (Some((f1, f2)), Some((g1, g2))) => f1 == g2 && f2 == g1,
            _ => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn net(w: NetWindow, f: impl Fn(i64, i64) -> [i64; 4]) -> DiscreteNet {
        DiscreteNet::from_fn(w, |(i, j)| HomPoint::from_i64(f(i, j))).unwrap()
    }

    fn p(c: [i64; 4]) -> HomPoint {
        HomPoint::from_i64(c).unwrap()
    }

    fn combo(a: &HomPoint, b: &HomPoint, c: &HomPoint, k: [i64; 3]) -> HomPoint {
        let v: [BigInt; 4] = std::array::from_fn(|n| {
            &a.coords()[n] * k[0] + &b.coords()[n] * k[1] + &c.coords()[n] * k[2]
        });
        HomPoint::new(v).unwrap()
    }

    /// A generic conjugate net: twisted-cubic boundary rows, each further
    /// point an irregular combination of the three known face vertices.
    pub(crate) fn sample_net(w: NetWindow) -> DiscreteNet {
        let mut f = DiscreteNet::from_fn(w, |(i, j)| {
            let (x, y) = (i - w.i0, j - w.j0);
            if y == 0 {
                HomPoint::from_i64([1, x, x * x, x * x * x + 1])
            } else {
                HomPoint::from_i64([y * y * y + 2, y * y, 1, y - 1])
            }
        })
        .unwrap();
        for (i, j) in w.faces() {
            let k = [-1 - (i * j).rem_euclid(3), 2 + j.rem_euclid(4), 1 + (i + 2 * j).rem_euclid(5)];
            let x = combo(f.at((i, j)).unwrap(), f.at((i + 1, j)).unwrap(), f.at((i, j + 1)).unwrap(), k);
            f.set((i + 1, j + 1), x).unwrap();
        }
        f
    }

    #[test]
    fn window_bookkeeping() {
        let w = NetWindow::new(0, 3, -1, 2).unwrap();
        assert_eq!(w.len(), 16);
        assert_eq!(w.index((0, -1)), Some(0));
        assert_eq!(w.index((1, -1)), Some(1));
        assert_eq!(w.index((0, 0)), Some(4));
        assert_eq!(w.shrink().unwrap(), NetWindow::new(0, 2, -1, 1).unwrap());
        assert!(NetWindow::new(2, 1, 0, 0).is_err());
        assert_eq!(w.vertices().count(), 16);
        assert_eq!(w.faces().count(), 9);
    }

    #[test]
    fn conjugacy_examples() {
        let w = NetWindow::square(4);
        assert!(is_conjugate(&net(w, |i, j| [1, i, j, i + j])).unwrap().is_empty());
        let bad = is_conjugate(&net(w, |i, j| [1, i, j, i * j])).unwrap();
        assert!(bad.contains(&(0, 0)));
        let thin = NetWindow::new(0, 0, 0, 5).unwrap();
        assert_eq!(is_conjugate(&net(thin, |i, j| [1, i, j, 0])), Err(Error::WindowTooSmall));
    }

    #[test]
    fn regularity() {
        let w = NetWindow::square(4);
        assert!(is_regular(&sample_net(w)).is_regular());
        // rows of (1:i:j:i+j) are straight lines
        let flat = is_regular(&net(w, |i, j| [1, i, j, i + j]));
        assert!(flat.collinear_triples.contains(&((1, 1), 1)));
        // planar but with no collinear triples
        let planar = net(w, |i, j| [1, i + 2 * j * j, j + i * i, 0]);
        let r = is_regular(&planar);
        assert!(r.is_regular(), "{r:?}");
    }

    #[test]
    fn osculating_planes() {
        let f = net(NetWindow::square(4), |i, j| [1, i, j, i + j]);
        assert_eq!(osculating_plane(&f, Dir::First, (1, 1)), Err(Error::DegenerateSpan));
        let g = sample_net(NetWindow::square(4));
        let pl = osculating_plane(&g, Dir::First, (1, 1)).unwrap();
        for i in 0..3 {
            assert!(g.at((i, 1)).unwrap().lies_on(&pl));
        }
        assert_eq!(osculating_plane(&g, Dir::First, (0, 1)), Err(Error::OutOfWindow((-1, 1))));
    }

    #[test]
    fn laplace_examples() {
        let f = net(NetWindow::square(4), |i, j| [1, i, j, i + j]);
        let h = laplace(&f, Dir::First).unwrap();
        assert_eq!(h.window(), &NetWindow::square(3));
        assert_eq!(h.at((0, 0)).unwrap(), &p([0, 1, 0, 1]));
        let planar = net(NetWindow::square(4), |i, j| [1, i, j, 0]);
        let hp = laplace(&planar, Dir::First).unwrap();
        assert!(hp.points().iter().all(|x| x == &p([0, 1, 0, 0])));
        let bad = net(NetWindow::square(3), |i, j| [1, i, j, i * j]);
        assert_eq!(laplace(&bad, Dir::First), Err(Error::NotConjugate((0, 0))));
    }

    #[test]
    fn mixed_laplace_is_a_shift() {
        let f = sample_net(NetWindow::square(5));
        let a = laplace(&laplace(&f, Dir::First).unwrap(), Dir::Second).unwrap();
        let b = laplace(&laplace(&f, Dir::Second).unwrap(), Dir::First).unwrap();
        assert_eq!(a, b);
        for v in a.window().vertices() {
            assert_eq!(a.at(v).unwrap(), f.at((v.0 + 1, v.1 + 1)).unwrap());
        }
    }

    #[test]
    fn sequences() {
        let f = sample_net(NetWindow::square(5));
        assert_eq!(laplace_sequence(&f, Dir::First, 0).unwrap(), f);
        assert_eq!(
            laplace_sequence(&f, Dir::First, 2).unwrap(),
            laplace(&laplace(&f, Dir::First).unwrap(), Dir::First).unwrap()
        );
        assert_eq!(laplace_sequence(&f, Dir::First, 5), Err(Error::WindowExhausted(4)));
    }

    #[test]
    fn laplace_output_lies_in_osculating_planes() {
        let f = sample_net(NetWindow::square(5));
        for dir in [Dir::First, Dir::Second] {
            let h = laplace(&f, dir).unwrap();
            for (i, j) in NetWindow::new(0, 2, 0, 2).unwrap().faces() {
                let pl = osculating_plane(&f, dir, (i + 1, j + 1)).unwrap();
                for v in [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)] {
                    assert!(h.at(v).unwrap().lies_on(&pl));
                }
            }
        }
    }

    #[test]
    fn generic_net_is_not_period_four() {
        assert!(!is_period_four(&sample_net(NetWindow::square(5))).unwrap());
    }

    #[test]
    fn anet_predicates() {
        let f = sample_net(NetWindow::square(4));
        assert!(!is_anet(&f));
        assert_eq!(tangent_plane(&f, (1, 1)), Err(Error::NotAnAnet((1, 1))));
    }

    #[test]
    fn axis_lines_lie_in_both_planes() {
        let f = sample_net(NetWindow::square(5));
        let a = axis_congruence(&f).unwrap();
        for v in a.window().vertices() {
            let l = a.get(v).unwrap().expect("defined");
            assert!(l.lies_in(&osculating_plane(&f, Dir::First, v).unwrap()));
            assert!(l.lies_in(&osculating_plane(&f, Dir::Second, v).unwrap()));
        }
        assert!(!asymptotically_related(&f, &f));
    }
}
