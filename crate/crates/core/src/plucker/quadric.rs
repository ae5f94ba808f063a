use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{line_from_points, lines_meet, PluckerLine};
use crate::error::{Error, Result};
use crate::linalg::nullspace;
use crate::projective::{HomPlane, HomPoint};
use crate::scalar::{canonical_ints, Scalar};

/// Index pairs of the stored upper triangle, in storage order.
pub(crate) const UPPER: [(usize, usize); 10] =
    [(0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)];

/// A quadric surface `xᵀ Q x = 0` with `Q` symmetric, stored as the ten
/// upper-triangle entries `q00, q01, q02, q03, q11, q12, q13, q22, q23, q33`
/// in canonical integer form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quadric {
    q: [BigInt; 10],
}

impl Quadric {
    pub fn new(q: [BigInt; 10]) -> Result<Self> {
        let q = canonical_ints(q).ok_or(Error::DegenerateQuadric)?;
        Ok(Self { q })
    }

    pub fn from_i64(q: [i64; 10]) -> Result<Self> {
        Self::new(q.map(BigInt::from))
    }

    pub fn upper(&self) -> &[BigInt; 10] {
        &self.q
    }

    pub fn matrix(&self) -> [[BigInt; 4]; 4] {
        let mut m: [[BigInt; 4]; 4] = Default::default();
        for (k, &(i, j)) in UPPER.iter().enumerate() {
            m[i][j] = self.q[k].clone();
            m[j][i] = self.q[k].clone();
        }
        m
    }

    pub fn bilinear(&self, x: &HomPoint, y: &HomPoint) -> BigInt {
        let m = self.matrix();
        let (a, b) = (x.coords(), y.coords());
        let mut s = BigInt::zero();
        for i in 0..4 {
            for j in 0..4 {
                s += &a[i] * &m[i][j] * &b[j];
            }
        }
        s
    }

    pub fn value(&self, x: &HomPoint) -> BigInt {
        self.bilinear(x, x)
    }

    pub fn contains(&self, x: &HomPoint) -> bool {
        self.value(x).is_zero()
    }

    /// The polar vector `Q x`; for `x` on the quadric, its tangent plane.
    pub(crate) fn polar_vector(&self, x: &HomPoint) -> [BigInt; 4] {
        let m = self.matrix();
        let c = x.coords();
        std::array::from_fn(|i| (0..4).map(|j| &m[i][j] * &c[j]).sum())
    }

    pub fn tangent_plane(&self, x: &HomPoint) -> Result<HomPlane> {
        if !self.contains(x) {
            return Err(Error::PointNotOnQuadric);
        }
        HomPlane::new(self.polar_vector(x)).map_err(|_| Error::DegenerateQuadric)
    }

    pub fn contains_line(&self, l: &PluckerLine) -> bool {
        l.sample_points().iter().all(|x| self.contains(x))
    }

    /// `Q(y)·z − 2B(z, y)·y`: the second point of the quadric on the line
    /// `z ∨ y`, given that `z` is on the quadric. Zero when the whole line
    /// lies on the quadric.
    pub(crate) fn residual_vector(&self, z: &HomPoint, y: &HomPoint) -> [BigInt; 4] {
        let qy = self.value(y);
        let b2 = self.bilinear(z, y) * 2;
        let (zc, yc) = (z.coords(), y.coords());
        std::array::from_fn(|k| &qy * &zc[k] - &b2 * &yc[k])
    }
}

impl fmt::Debug for Quadric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.q.iter().map(|x| x.to_string()).collect();
        write!(f, "Quadric[{}]", parts.join(", "))
    }
}

fn condition_row(x: &HomPoint) -> Vec<Scalar> {
    let c = x.coords();
    UPPER
        .iter()
        .map(|&(i, j)| {
            let v = &c[i] * &c[j];
            Scalar::from_integer(if i == j { v } else { v * 2 })
        })
        .collect()
}

/// The unique quadric containing three pairwise skew lines.
pub fn quadric_through_three_lines(a: &PluckerLine, b: &PluckerLine, c: &PluckerLine) -> Result<Quadric> {
    if lines_meet(a, b) || lines_meet(a, c) || lines_meet(b, c) {
        return Err(Error::NotPairwiseSkew);
    }
    let rows: Vec<Vec<Scalar>> =
        [a, b, c].iter().flat_map(|l| l.sample_points()).map(|x| condition_row(&x)).collect();
    let ns = nullspace(&rows, 10);
    if ns.len() != 1 {
        return Err(Error::RankDeficient);
    }
    let q: [BigInt; 10] = ns[0].clone().try_into().expect("ten coefficients");
    Quadric::new(q)
}

/// The generator through `x` other than `known`.
pub fn ruling_through_point(q: &Quadric, x: &HomPoint, known: &PluckerLine) -> Result<PluckerLine> {
    if !q.contains(x) {
        return Err(Error::PointNotOnQuadric);
    }
    if !known.contains(x) || !q.contains_line(known) {
        return Err(Error::GeneratorInvalid);
    }
    let tangent = q.tangent_plane(x)?;
    let (u, v) = known.span_points();
    let k = if &u != x { u } else { v };
    for y in tangent.points() {
        if known.contains(&y) {
            continue;
        }
        if q.contains(&y) {
            return line_from_points(x, &y);
        }
        if let Ok(r) = HomPoint::new(q.residual_vector(&k, &y)) {
            if &r != x && !known.contains(&r) {
                return line_from_points(x, &r);
            }
        }
    }
    Err(Error::DegenerateQuadric)
}
