//! Points and planes of projective three-space over the rationals.
//!
//! Both kinds of element are stored in canonical form: coprime integer
//! coordinates whose first nonzero entry is positive. Equality of canonical
//! forms is equality of projective elements.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Clause, Error, Result};
use crate::linalg::{det3, det4, rank};
use crate::scalar::{canonical_ints, clear_denominators, ProjParam, Scalar};

fn canon4(v: [BigInt; 4]) -> Result<[BigInt; 4]> {
    canonical_ints(v).ok_or(Error::ZeroVector)
}

fn ints4(v: [i64; 4]) -> [BigInt; 4] {
    v.map(BigInt::from)
}

fn dot4(a: &[BigInt; 4], b: &[BigInt; 4]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Generalized cross product: the vector orthogonal to three 4-vectors.
/// Zero iff the three are linearly dependent.
pub(crate) fn cross3(a: &[BigInt; 4], b: &[BigInt; 4], c: &[BigInt; 4]) -> [BigInt; 4] {
    let rows: [&[BigInt]; 3] = [a, b, c];
    [
        det3(rows, [1, 2, 3]),
        -det3(rows, [0, 2, 3]),
        det3(rows, [0, 1, 3]),
        -det3(rows, [0, 1, 2]),
    ]
}

macro_rules! hom4 {
    ($name:ident, $what:literal) => {
        #[doc = concat!("A ", $what, " of projective three-space in canonical homogeneous coordinates.")]
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name {
            c: [BigInt; 4],
        }

        impl $name {
            pub fn new(c: [BigInt; 4]) -> Result<Self> {
                Ok(Self { c: canon4(c)? })
            }

            pub fn from_i64(c: [i64; 4]) -> Result<Self> {
                Self::new(ints4(c))
            }

            pub fn from_scalars(c: &[Scalar; 4]) -> Result<Self> {
                let v = clear_denominators(c);
                Self::new([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()])
            }

            pub fn coords(&self) -> &[BigInt; 4] {
                &self.c
            }

            pub fn to_scalars(&self) -> [Scalar; 4] {
                self.c.clone().map(Scalar::from_integer)
            }

            /// `s·self + t·other`.
            pub fn combine(&self, s: &BigInt, other: &Self, t: &BigInt) -> Result<Self> {
                let v: [BigInt; 4] = std::array::from_fn(|k| s * &self.c[k] + t * &other.c[k]);
                Self::new(v)
            }

            /// Point `u + λ v` of the pencil spanned by `self = u` and `other = v`.
            pub fn pencil(&self, other: &Self, lambda: &ProjParam) -> Result<Self> {
                match lambda {
                    ProjParam::Infinity => Ok(other.clone()),
                    ProjParam::Finite(l) => self.combine(l.denom(), other, l.numer()),
                }
            }

            /// Largest absolute coordinate, for coefficient growth diagnostics.
            pub fn height(&self) -> BigInt {
                self.c.iter().map(|x| x.abs()).max().unwrap_or_default()
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "({}:{}:{}:{})", self.c[0], self.c[1], self.c[2], self.c[3])
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Debug::fmt(self, f)
            }
        }
    };
}

hom4!(HomPoint, "point");
hom4!(HomPlane, "plane");

impl HomPoint {
    pub fn lies_on(&self, plane: &HomPlane) -> bool {
        dot4(&self.c, &plane.c).is_zero()
    }

    pub fn pairing(&self, plane: &HomPlane) -> BigInt {
        dot4(&self.c, &plane.c)
    }

    /// The standard basis point `e_k`.
    pub fn basis(k: usize) -> Self {
        let mut c: [BigInt; 4] = Default::default();
        c[k] = BigInt::one();
        Self { c }
    }
}

impl HomPlane {
    pub fn contains(&self, p: &HomPoint) -> bool {
        p.lies_on(self)
    }

    pub fn basis(k: usize) -> Self {
        let mut c: [BigInt; 4] = Default::default();
        c[k] = BigInt::one();
        Self { c }
    }

    /// A spanning set of points of the plane (nonzero vectors only).
    pub fn points(&self) -> Vec<HomPoint> {
        let c = &self.c;
        let mut out = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                let mut v: [BigInt; 4] = Default::default();
                v[i] = c[j].clone();
                v[j] = -c[i].clone();
                if let Ok(p) = HomPoint::new(v) {
                    if !out.contains(&p) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    /// Three independent points spanning the plane.
    pub fn basis_points(&self) -> [HomPoint; 3] {
        let pts = self.points();
        let mut chosen: Vec<HomPoint> = Vec::with_capacity(3);
        for p in pts {
            let mut rows: Vec<Vec<BigInt>> = chosen.iter().map(|q| q.c.to_vec()).collect();
            rows.push(p.c.to_vec());
            if rank(&rows) == rows.len() {
                chosen.push(p);
                if chosen.len() == 3 {
                    break;
                }
            }
        }
        [chosen[0].clone(), chosen[1].clone(), chosen[2].clone()]
    }
}

/// The plane spanned by three non-collinear points.
pub fn join_plane(a: &HomPoint, b: &HomPoint, c: &HomPoint) -> Result<HomPlane> {
    HomPlane::new(cross3(&a.c, &b.c, &c.c)).map_err(|_| Error::DegenerateSpan)
}

/// The point common to three planes not in a pencil.
pub fn meet_planes(p: &HomPlane, q: &HomPlane, r: &HomPlane) -> Result<HomPoint> {
    HomPoint::new(cross3(&p.c, &q.c, &r.c)).map_err(|_| Error::DegenerateMeet)
}

pub fn collinear(a: &HomPoint, b: &HomPoint, c: &HomPoint) -> bool {
    cross3(&a.c, &b.c, &c.c).iter().all(Zero::is_zero)
}

pub fn coplanar(a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> bool {
    det4([&a.c, &b.c, &c.c, &d.c]).is_zero()
}

/// Four planes through a common point.
pub fn copunctal(a: &HomPlane, b: &HomPlane, c: &HomPlane, d: &HomPlane) -> bool {
    det4([&a.c, &b.c, &c.c, &d.c]).is_zero()
}

/// Rank of the coordinate matrix of a set of points.
pub fn point_rank(pts: &[&HomPoint]) -> usize {
    rank(&pts.iter().map(|p| p.c.to_vec()).collect::<Vec<_>>())
}

/// Coordinates of `x = α a + β b` as the integer pair `(α, β)` up to a common
/// factor. Requires `a ≠ b` and `x` on `a ∨ b`.
pub(crate) fn pencil_coords(a: &HomPoint, b: &HomPoint, x: &HomPoint) -> (BigInt, BigInt) {
    let (a, b, x) = (&a.c, &b.c, &x.c);
    for k in 0..4 {
        for l in k + 1..4 {
            let d = &a[k] * &b[l] - &a[l] * &b[k];
            if !d.is_zero() {
                let alpha = &x[k] * &b[l] - &x[l] * &b[k];
                let beta = &a[k] * &x[l] - &a[l] * &x[k];
                return (alpha, beta);
            }
        }
    }
    (BigInt::zero(), BigInt::zero())
}

/// Cross-ratio `CR(a, b; c, d)`.
///
/// Writing `c ~ a + λ_c b` and `d ~ a + λ_d b`, the value is `λ_c / λ_d`.
/// It does not depend on the representatives chosen for `a` and `b`. The
/// result is `INFINITY` when `λ_d = 0` or `λ_c = ∞`.
pub fn cross_ratio(a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> Result<ProjParam> {
    let pts = [a, b, c, d];
    if a == b {
        return Err(Error::TooManyCoincident);
    }
    for i in 0..4 {
        let same = pts.iter().filter(|p| **p == pts[i]).count();
        if same >= 3 {
            return Err(Error::TooManyCoincident);
        }
    }
    if point_rank(&pts) > 2 {
        return Err(Error::NotCollinear);
    }
    let (ac, bc) = pencil_coords(a, b, c);
    let (ad, bd) = pencil_coords(a, b, d);
    let num = &bc * &ad;
    let den = &ac * &bd;
    Ok(ProjParam::from_ratio(Scalar::from_integer(num), Scalar::from_integer(den)))
}

/// A perspective collineation: fixes a plane pointwise and every line
/// through its center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollineationMap {
    m: [[BigInt; 4]; 4],
}

impl CollineationMap {
    pub fn identity() -> Self {
        Self {
            m: std::array::from_fn(|i| std::array::from_fn(|j| if i == j { BigInt::one() } else { BigInt::zero() })),
        }
    }

    pub fn apply(&self, x: &HomPoint) -> HomPoint {
        let v: [BigInt; 4] = std::array::from_fn(|i| dot4(&self.m[i], &x.c));
        // M is invertible by construction, so the image is never zero.
        HomPoint::new(v).expect("collineation matrix is invertible")
    }

    pub fn matrix(&self) -> &[[BigInt; 4]; 4] {
        &self.m
    }
}

/// The perspective collineation with the given center and fixed plane that
/// sends `a0` to `b0`.
pub fn perspective_collineation(
    center: &HomPoint,
    axis_plane: &HomPlane,
    a0: &HomPoint,
    b0: &HomPoint,
) -> Result<CollineationMap> {
    let bad = |m: &str| Error::InvalidPerspectivity(Clause(m.into()));
    let pc = center.pairing(axis_plane);
    if pc.is_zero() {
        return Err(bad("center lies on the axis plane"));
    }
    let pa = a0.pairing(axis_plane);
    if pa.is_zero() || b0.lies_on(axis_plane) {
        return Err(bad("a0 or b0 lies on the axis plane"));
    }
    if a0 == b0 {
        return Ok(CollineationMap::identity());
    }
    if a0 == center || b0 == center || !collinear(a0, b0, center) {
        return Err(bad("a0, b0 and the center must be distinct and collinear"));
    }
    let (alpha, beta) = pencil_coords(a0, center, b0);
    let diag = &alpha * &pa;
    let m = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut v = &beta * &center.c[i] * &axis_plane.c[j];
            if i == j {
                v += &diag;
            }
            v
        })
    });
    Ok(CollineationMap { m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn p(c: [i64; 4]) -> HomPoint {
        HomPoint::from_i64(c).unwrap()
    }
    fn pl(c: [i64; 4]) -> HomPlane {
        HomPlane::from_i64(c).unwrap()
    }

    #[test]
    fn canonical_equality() {
        assert_eq!(p([2, 0, 0, 0]), p([1, 0, 0, 0]));
        assert_eq!(p([-2, 4, 0, 6]), p([1, -2, 0, -3]));
        assert!(HomPoint::from_i64([0, 0, 0, 0]).is_err());
    }

    #[test]
    fn join_plane_examples() {
        assert_eq!(join_plane(&p([1, 0, 0, 0]), &p([0, 1, 0, 0]), &p([0, 0, 1, 0])).unwrap(), pl([0, 0, 0, 1]));
        let pi = join_plane(&p([1, 0, 0, 0]), &p([1, 1, 0, 0]), &p([1, 0, 1, 0])).unwrap();
        assert_eq!(pi, pl([0, 0, 0, 1]));
        for q in [p([1, 0, 0, 0]), p([1, 1, 0, 0]), p([1, 0, 1, 0])] {
            assert!(q.lies_on(&pi));
        }
        assert_eq!(
            join_plane(&p([1, 0, 0, 0]), &p([2, 0, 0, 0]), &p([0, 1, 0, 0])),
            Err(Error::DegenerateSpan)
        );
    }

    #[test]
    fn meet_planes_examples() {
        assert_eq!(meet_planes(&pl([1, 0, 0, 0]), &pl([0, 1, 0, 0]), &pl([0, 0, 1, 0])).unwrap(), p([0, 0, 0, 1]));
        assert_eq!(
            meet_planes(&pl([1, 0, 0, 0]), &pl([0, 1, 0, 0]), &pl([1, 1, 0, 0])),
            Err(Error::DegenerateMeet)
        );
        let x = meet_planes(&pl([0, 0, 0, 1]), &pl([0, 0, 1, 0]), &pl([1, -1, 0, 0])).unwrap();
        assert_eq!(x, p([1, 1, 0, 0]));
    }

    #[test]
    fn incidence_predicates() {
        assert!(collinear(&p([1, 0, 0, 0]), &p([0, 1, 0, 0]), &p([1, 1, 0, 0])));
        assert!(coplanar(&p([1, 0, 0, 0]), &p([1, 1, 0, 1]), &p([1, 0, 1, 1]), &p([1, 1, 1, 2])));
        assert!(!coplanar(&p([1, 0, 0, 0]), &p([1, 1, 0, 0]), &p([1, 0, 1, 0]), &p([1, 1, 1, 1])));
    }

    #[test]
    fn cross_ratio_examples() {
        // Affine parameters 0, ∞, 1, -1 on the line x2 = x3 = 0.
        let a = p([1, 0, 0, 0]);
        let b = p([0, 1, 0, 0]);
        let c = p([1, 1, 0, 0]);
        let d = p([1, -1, 0, 0]);
        assert_eq!(cross_ratio(&a, &b, &c, &d).unwrap(), ProjParam::from_int(-1));
        assert_eq!(cross_ratio(&a, &b, &c, &c).unwrap(), ProjParam::from_int(1));
        assert_eq!(cross_ratio(&a, &b, &b, &d).unwrap(), ProjParam::Infinity);
        assert_eq!(cross_ratio(&a, &b, &a, &d).unwrap(), ProjParam::Finite(int(0)));
        assert_eq!(cross_ratio(&a, &a, &c, &d), Err(Error::TooManyCoincident));
        assert_eq!(cross_ratio(&a, &b, &b, &b), Err(Error::TooManyCoincident));
        assert_eq!(cross_ratio(&a, &b, &c, &p([0, 0, 1, 0])), Err(Error::NotCollinear));
    }

    #[test]
    fn cross_ratio_ignores_representatives() {
        let a = p([1, 2, 0, 1]);
        let b = p([0, 1, 1, 1]);
        let c = a.combine(&BigInt::from(3), &b, &BigInt::from(2)).unwrap();
        let d = a.combine(&BigInt::from(1), &b, &BigInt::from(-5)).unwrap();
        let a2 = p([3, 6, 0, 3]);
        assert_eq!(cross_ratio(&a, &b, &c, &d).unwrap(), cross_ratio(&a2, &b, &c, &d).unwrap());
        // λ_c / λ_d = (2/3) / (-5)
        assert_eq!(cross_ratio(&a, &b, &c, &d).unwrap(), ProjParam::Finite(Scalar::new((-2).into(), 15.into())));
    }

    #[test]
    fn collineation_identity_and_fixed_plane() {
        let center = p([1, 1, 1, 1]);
        let axis = pl([0, 0, 0, 1]);
        let a0 = p([1, 2, 3, 1]);
        let id = perspective_collineation(&center, &axis, &a0, &a0).unwrap();
        for x in [p([1, 0, 0, 0]), p([3, -1, 2, 5]), a0.clone()] {
            assert_eq!(id.apply(&x), x);
        }
        let b0 = a0.combine(&BigInt::from(1), &center, &BigInt::from(2)).unwrap();
        let s = perspective_collineation(&center, &axis, &a0, &b0).unwrap();
        assert_eq!(s.apply(&a0), b0);
        assert_eq!(s.apply(&center), center);
        for x in axis.points() {
            assert_eq!(s.apply(&x), x);
        }
        // Lines through the center are fixed.
        let y = p([2, -1, 0, 3]);
        assert!(collinear(&y, &s.apply(&y), &center));
    }

    #[test]
    fn collineation_errors() {
        let axis = pl([0, 0, 0, 1]);
        let on_axis = p([1, 0, 0, 0]);
        assert!(perspective_collineation(&on_axis, &axis, &p([1, 1, 1, 1]), &p([1, 1, 1, 2])).is_err());
        // a0, b0, center not collinear
        assert!(perspective_collineation(&p([0, 0, 0, 1]), &axis, &p([1, 0, 0, 1]), &p([0, 1, 0, 1])).is_err());
    }

    #[test]
    fn plane_points_span() {
        let pi = pl([1, 2, -3, 0]);
        let pts = pi.basis_points();
        for q in &pts {
            assert!(q.lies_on(&pi));
        }
        assert_eq!(point_rank(&[&pts[0], &pts[1], &pts[2]]), 3);
    }
}
