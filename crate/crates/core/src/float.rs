//! Floating point predicates with a relative tolerance.
//!
//! Everything else in the crate is exact. This module exists for numeric
//! experiments such as watching asymptotically related pairs converge to
//! A-nets, where exact comparison is meaningless because the sequence never
//! reaches its limit.

use num_traits::ToPrimitive;

use crate::error::Vertex;
use crate::nets::DiscreteNet;
use crate::projective::HomPoint;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A point as a unit vector of `R⁴`, defined up to sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatPoint(pub [f64; 4]);

impl FloatPoint {
    pub fn new(c: [f64; 4]) -> Self {
        let n = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        Self(c.map(|x| x / n))
    }

    /// Angular distance to another point, in `[0, 1]`.
    pub fn distance(&self, o: &Self) -> f64 {
        let diff: f64 = (0..4).map(|k| (self.0[k] - o.0[k]).powi(2)).sum::<f64>().sqrt();
        let sum: f64 = (0..4).map(|k| (self.0[k] + o.0[k]).powi(2)).sum::<f64>().sqrt();
        diff.min(sum)
    }
}

impl From<&HomPoint> for FloatPoint {
    fn from(p: &HomPoint) -> Self {
        // Scale by the largest entry first so huge integers do not overflow.
        let c = p.coords();
        let m = c.iter().map(|x| x.magnitude().clone()).max().unwrap_or_default();
        let bits = m.bits().saturating_sub(60);
        let v: [f64; 4] = std::array::from_fn(|k| (&c[k] >> bits).to_f64().unwrap_or(0.0));
        Self::new(v)
    }
}

fn det4(r: [&[f64; 4]; 4]) -> f64 {
    let m = |a: usize, b: usize, c: usize, d: usize, e: usize, f: usize| r[a][d] * (r[b][e] * r[c][f] - r[b][f] * r[c][e]);
    let minor = |cols: [usize; 3]| {
        let [d, e, f] = cols;
        m(1, 2, 3, d, e, f) - m(2, 1, 3, d, e, f) + m(3, 1, 2, d, e, f)
    };
    r[0][0] * minor([1, 2, 3]) - r[0][1] * minor([0, 2, 3]) + r[0][2] * minor([0, 1, 3]) - r[0][3] * minor([0, 1, 2])
}

pub fn same_point(a: &FloatPoint, b: &FloatPoint, tol: f64) -> bool {
    a.distance(b) <= tol
}

/// The determinant of four unit vectors, compared with the tolerance.
pub fn coplanar(a: &FloatPoint, b: &FloatPoint, c: &FloatPoint, d: &FloatPoint, tol: f64) -> bool {
    det4([&a.0, &b.0, &c.0, &d.0]).abs() <= tol
}

pub fn net_to_float(f: &DiscreteNet) -> Vec<FloatPoint> {
    f.points().iter().map(FloatPoint::from).collect()
}

/// Faces that fail the planarity test at the given tolerance.
pub fn nonplanar_faces(f: &DiscreteNet, tol: f64) -> Vec<Vertex> {
    let w = *f.window();
    let pts = net_to_float(f);
    let at = |v: Vertex| pts[w.index(v).expect("in window")];
    w.faces()
        .filter(|&(i, j)| !coplanar(&at((i, j)), &at((i + 1, j)), &at((i + 1, j + 1)), &at((i, j + 1)), tol))
        .collect()
}

/// Largest pointwise distance between two nets on the same window.
pub fn max_distance(f: &DiscreteNet, g: &DiscreteNet) -> f64 {
    net_to_float(f).iter().zip(net_to_float(g)).map(|(a, b)| a.distance(&b)).fold(0.0, f64::max)
}
