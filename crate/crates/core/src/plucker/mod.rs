//! Line geometry of projective three-space.
//!
//! Lines carry Plücker coordinates ordered `(p01, p02, p03, p23, p31, p12)`
//! with `p_ij = a_i b_j - a_j b_i` for a line through `a` and `b`. In this
//! order the Plücker relation reads `p01 p23 + p02 p31 + p03 p12 = 0` and the
//! Klein bilinear form is a permuted dot product.

mod conic;
mod quadric;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

pub use conic::{conic_section, project_between_conics, second_intersection, Conic};
pub use quadric::{quadric_through_three_lines, ruling_through_point, Quadric};

use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::projective::{HomPlane, HomPoint};
use crate::scalar::canonical_ints;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PluckerLine {
    p: [BigInt; 6],
}

/// Image of a line on the Klein quadric of P⁵.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KleinPoint(pub [BigInt; 6]);

impl KleinPoint {
    pub fn on_klein_quadric(&self) -> bool {
        klein_form(&self.0, &self.0).is_zero()
    }
}

fn klein_form(p: &[BigInt; 6], q: &[BigInt; 6]) -> BigInt {
    &p[0] * &q[3] + &p[1] * &q[4] + &p[2] * &q[5] + &p[3] * &q[0] + &p[4] * &q[1] + &p[5] * &q[2]
}

/// Antisymmetric 4×4 matrix from six coordinates in `(01, 02, 03, 23, 31, 12)` order.
fn antisym(p: &[BigInt; 6]) -> [[BigInt; 4]; 4] {
    let mut m: [[BigInt; 4]; 4] = Default::default();
    let mut set = |i: usize, j: usize, v: &BigInt| {
        m[i][j] = v.clone();
        m[j][i] = -v.clone();
    };
    set(0, 1, &p[0]);
    set(0, 2, &p[1]);
    set(0, 3, &p[2]);
    set(2, 3, &p[3]);
    set(3, 1, &p[4]);
    set(1, 2, &p[5]);
    m
}

fn wedge(a: &[BigInt; 4], b: &[BigInt; 4]) -> [BigInt; 6] {
    let w = |i: usize, j: usize| &a[i] * &b[j] - &a[j] * &b[i];
    [w(0, 1), w(0, 2), w(0, 3), w(2, 3), w(3, 1), w(1, 2)]
}

impl PluckerLine {
    /// Builds a line from raw coordinates, checking the Plücker relation.
    pub fn new(p: [BigInt; 6]) -> Result<Self> {
        if !klein_form(&p, &p).is_zero() {
            return Err(Error::Parse("coordinates violate the Plücker relation".into()));
        }
        let p = canonical_ints(p).ok_or(Error::ZeroVector)?;
        Ok(Self { p })
    }

    pub fn coords(&self) -> &[BigInt; 6] {
        &self.p
    }

    /// Coordinates of the same line in dual (plane) Plücker coordinates.
    fn dual(&self) -> [BigInt; 6] {
        let p = &self.p;
        [p[3].clone(), p[4].clone(), p[5].clone(), p[0].clone(), p[1].clone(), p[2].clone()]
    }

    pub fn klein_map(&self) -> KleinPoint {
        KleinPoint(self.p.clone())
    }

    pub fn contains(&self, x: &HomPoint) -> bool {
        self.join_vector(x).iter().all(Zero::is_zero)
    }

    pub fn lies_in(&self, plane: &HomPlane) -> bool {
        self.meet_vector(plane).iter().all(Zero::is_zero)
    }

    fn meet_vector(&self, plane: &HomPlane) -> [BigInt; 4] {
        let m = antisym(&self.p);
        let pi = plane.coords();
        std::array::from_fn(|j| (0..4).map(|i| &pi[i] * &m[j][i]).sum())
    }

    fn join_vector(&self, x: &HomPoint) -> [BigInt; 4] {
        let m = antisym(&self.dual());
        let c = x.coords();
        std::array::from_fn(|j| (0..4).map(|i| &c[i] * &m[j][i]).sum())
    }

    /// Two distinct points spanning the line, found deterministically as
    /// intersections with the coordinate planes.
    pub fn span_points(&self) -> (HomPoint, HomPoint) {
        let mut found: Vec<HomPoint> = Vec::with_capacity(2);
        for k in 0..4 {
            if let Ok(x) = HomPoint::new(self.meet_vector(&HomPlane::basis(k))) {
                if !found.contains(&x) {
                    found.push(x);
                    if found.len() == 2 {
                        break;
                    }
                }
            }
        }
        (found[0].clone(), found[1].clone())
    }

    /// Points `u`, `v`, `u + v` on the canonical span.
    pub fn sample_points(&self) -> [HomPoint; 3] {
        let (u, v) = self.span_points();
        let one = BigInt::from(1);
        let w = u.combine(&one, &v, &one).expect("distinct span points");
        [u, v, w]
    }
}

impl fmt::Debug for PluckerLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.p;
        write!(f, "[{}, {}, {}, {}, {}, {}]", p[0], p[1], p[2], p[3], p[4], p[5])
    }
}

pub fn line_from_points(a: &HomPoint, b: &HomPoint) -> Result<PluckerLine> {
    let p = canonical_ints(wedge(a.coords(), b.coords())).ok_or(Error::CoincidentPoints)?;
    Ok(PluckerLine { p })
}

/// The line common to two distinct planes.
pub fn line_from_planes(u: &HomPlane, v: &HomPlane) -> Result<PluckerLine> {
    let q = wedge(u.coords(), v.coords());
    let p = [q[3].clone(), q[4].clone(), q[5].clone(), q[0].clone(), q[1].clone(), q[2].clone()];
    let p = canonical_ints(p).ok_or(Error::DegenerateMeet)?;
    Ok(PluckerLine { p })
}

pub fn klein_map(l: &PluckerLine) -> KleinPoint {
    l.klein_map()
}

pub fn lines_meet(l: &PluckerLine, m: &PluckerLine) -> bool {
    klein_form(&l.p, &m.p).is_zero()
}

pub fn skew(l: &PluckerLine, m: &PluckerLine) -> bool {
    !lines_meet(l, m)
}

pub fn meet_line_plane(l: &PluckerLine, plane: &HomPlane) -> Result<HomPoint> {
    HomPoint::new(l.meet_vector(plane)).map_err(|_| Error::LineInPlane)
}

pub fn join_line_point(l: &PluckerLine, x: &HomPoint) -> Result<HomPlane> {
    HomPlane::new(l.join_vector(x)).map_err(|_| Error::PointOnLine)
}

/// Intersection point of two distinct coplanar lines.
pub fn meet_lines(l: &PluckerLine, m: &PluckerLine) -> Result<HomPoint> {
    if l == m || !lines_meet(l, m) {
        return Err(Error::LinesDoNotMeet);
    }
    for k in 0..4 {
        let Ok(sigma) = join_line_point(m, &HomPoint::basis(k)) else {
            continue;
        };
        if let Ok(x) = meet_line_plane(l, &sigma) {
            return Ok(x);
        }
    }
    Err(Error::LinesDoNotMeet)
}

/// The plane spanned by two distinct intersecting lines.
pub fn join_lines(l: &PluckerLine, m: &PluckerLine) -> Result<HomPlane> {
    if l == m || !lines_meet(l, m) {
        return Err(Error::LinesDoNotMeet);
    }
    let (u, v) = m.span_points();
    let x = if l.contains(&u) { v } else { u };
    join_line_point(l, &x)
}

fn pairwise_skew(lines: &[&PluckerLine]) -> bool {
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if lines_meet(lines[i], lines[j]) {
                return false;
            }
        }
    }
    true
}

/// Projection of the point `a ∈ A` onto `B` from the center line `C`:
/// `(a ∨ C) ∩ B`.
pub fn project_between_lines(
    center: &PluckerLine,
    from: &PluckerLine,
    to: &PluckerLine,
    a: &HomPoint,
) -> Result<HomPoint> {
    if !pairwise_skew(&[center, from, to]) {
        return Err(Error::NotPairwiseSkew);
    }
    if !from.contains(a) {
        return Err(Error::PointNotOnLine);
    }
    let sigma = join_line_point(center, a)?;
    meet_line_plane(to, &sigma)
}

/// The unique line through `x` meeting the skew lines `a` and `b`.
pub fn transversal_through_point(x: &HomPoint, a: &PluckerLine, b: &PluckerLine) -> Result<PluckerLine> {
    if a.contains(x) || b.contains(x) {
        return Err(Error::DegenerateTransversal);
    }
    let s1 = join_line_point(a, x)?;
    let s2 = join_line_point(b, x)?;
    if s1 == s2 {
        return Err(Error::DegenerateTransversal);
    }
    line_from_planes(&s1, &s2)
}

/// Four pairwise skew lines whose Klein images span a plane of P⁵.
pub fn in_regulus(l1: &PluckerLine, l2: &PluckerLine, l3: &PluckerLine, l4: &PluckerLine) -> bool {
    if !pairwise_skew(&[l1, l2, l3, l4]) {
        return false;
    }
    let rows: Vec<Vec<BigInt>> = [l1, l2, l3, l4].iter().map(|l| l.p.to_vec()).collect();
    rank(&rows) == 3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::collinear;

    fn p(c: [i64; 4]) -> HomPoint {
        HomPoint::from_i64(c).unwrap()
    }
    fn pl(c: [i64; 4]) -> HomPlane {
        HomPlane::from_i64(c).unwrap()
    }
    fn ln(a: [i64; 4], b: [i64; 4]) -> PluckerLine {
        line_from_points(&p(a), &p(b)).unwrap()
    }
    fn ints(v: [i64; 6]) -> [BigInt; 6] {
        v.map(BigInt::from)
    }

    /// Generator `t` of the quadric x1 x2 = x0 x3: points (1:t:u:tu).
    pub(crate) fn gen_t(t: i64) -> PluckerLine {
        ln([1, t, 0, 0], [0, 0, 1, t])
    }

    #[test]
    fn line_from_points_examples() {
        let x = ln([1, 0, 0, 0], [0, 1, 0, 0]);
        assert_eq!(x.coords(), &ints([1, 0, 0, 0, 0, 0]));
        assert_eq!(ln([1, 0, 0, 0], [1, 1, 0, 0]), x);
        let l = ln([1, 0, 1, 0], [0, 1, 0, 1]);
        // p01 = 1, p02 = 0, p03 = 1, p23 = 1, p31 = 0, p12 = -1
        assert_eq!(l.coords(), &ints([1, 0, 1, 1, 0, -1]));
        assert!(l.klein_map().on_klein_quadric());
        assert_eq!(line_from_points(&p([1, 2, 3, 4]), &p([2, 4, 6, 8])), Err(Error::CoincidentPoints));
    }

    #[test]
    fn meeting_and_skew() {
        let x_axis = ln([1, 0, 0, 0], [0, 1, 0, 0]);
        let y_axis = ln([1, 0, 0, 0], [0, 0, 1, 0]);
        assert!(lines_meet(&x_axis, &y_axis));
        let m = ln([0, 0, 1, 0], [0, 0, 0, 1]);
        let l = ln([1, 0, 0, 0], [0, 1, 0, 0]);
        assert!(!lines_meet(&l, &m));
        assert!(lines_meet(&l, &l));
    }

    #[test]
    fn line_plane_incidence() {
        // x-axis as the affine line {(1, t, 0, 0)}; plane x = 1 is x1 - x0 = 0.
        let x_axis = ln([1, 0, 0, 0], [0, 1, 0, 0]);
        assert_eq!(meet_line_plane(&x_axis, &pl([-1, 1, 0, 0])).unwrap(), p([1, 1, 0, 0]));
        assert_eq!(join_line_point(&x_axis, &p([0, 0, 1, 0])).unwrap(), pl([0, 0, 0, 1]));
        assert_eq!(meet_line_plane(&x_axis, &pl([0, 0, 0, 1])), Err(Error::LineInPlane));
        assert_eq!(join_line_point(&x_axis, &p([3, 1, 0, 0])), Err(Error::PointOnLine));
    }

    #[test]
    fn planes_and_points_agree() {
        let a = p([1, 2, -1, 3]);
        let b = p([0, 1, 4, -2]);
        let l = line_from_points(&a, &b).unwrap();
        let c = p([5, 0, 1, 1]);
        let d = p([-1, 3, 0, 2]);
        let s1 = join_line_point(&l, &c).unwrap();
        let s2 = join_line_point(&l, &d).unwrap();
        for q in [&a, &b, &c] {
            assert!(q.lies_on(&s1));
        }
        assert_eq!(line_from_planes(&s1, &s2).unwrap(), l);
        assert!(l.contains(&a) && l.contains(&b) && !l.contains(&c));
        let (u, v) = l.span_points();
        assert!(collinear(&a, &u, &v));
    }

    #[test]
    fn meet_of_lines() {
        let a = p([1, 1, 1, 1]);
        let l = line_from_points(&a, &p([0, 1, 2, 3])).unwrap();
        let m = line_from_points(&a, &p([2, -1, 0, 5])).unwrap();
        assert_eq!(meet_lines(&l, &m).unwrap(), a);
        assert_eq!(meet_lines(&l, &l), Err(Error::LinesDoNotMeet));
        let skew = ln([0, 0, 1, 0], [0, 0, 0, 1]);
        assert_eq!(meet_lines(&ln([1, 0, 0, 0], [0, 1, 0, 0]), &skew), Err(Error::LinesDoNotMeet));
    }

    #[test]
    fn projection_example() {
        let a_line = ln([1, 0, 0, 0], [0, 1, 0, 0]);
        let b_line = ln([0, 0, 1, 0], [0, 0, 0, 1]);
        let c_line = ln([1, 0, 1, 0], [0, 1, 0, 1]);
        let b = project_between_lines(&c_line, &a_line, &b_line, &p([1, 1, 0, 0])).unwrap();
        assert_eq!(b, p([0, 0, 1, 1]));
        let back = project_between_lines(&c_line, &b_line, &a_line, &b).unwrap();
        assert_eq!(back, p([1, 1, 0, 0]));
        assert_eq!(
            project_between_lines(&c_line, &a_line, &b_line, &p([0, 0, 1, 0])),
            Err(Error::PointNotOnLine)
        );
        assert_eq!(
            project_between_lines(&a_line, &a_line, &b_line, &p([1, 1, 0, 0])),
            Err(Error::NotPairwiseSkew)
        );
    }

    #[test]
    fn transversal_example() {
        let a_line = ln([1, 0, 0, 0], [0, 1, 0, 0]);
        let b_line = ln([0, 0, 1, 0], [0, 0, 0, 1]);
        let t = transversal_through_point(&p([1, 1, 1, 1]), &a_line, &b_line).unwrap();
        assert_eq!(t, ln([1, 1, 0, 0], [0, 0, 1, 1]));
        assert!(transversal_through_point(&p([1, 0, 0, 0]), &a_line, &b_line).is_err());
    }

    #[test]
    fn regulus_membership() {
        assert!(in_regulus(&gen_t(0), &gen_t(1), &gen_t(2), &gen_t(3)));
        let off = ln([1, 0, 0, 1], [0, 1, 1, 0]);
        assert!(!in_regulus(&gen_t(0), &gen_t(1), &gen_t(2), &off));
        assert!(!in_regulus(&gen_t(0), &gen_t(1), &gen_t(1), &gen_t(3)));
    }

    #[test]
    fn plucker_relation_is_checked_on_input() {
        assert!(PluckerLine::new(ints([1, 0, 0, 1, 0, 0])).is_err());
        assert!(PluckerLine::new(ints([2, 0, 0, 0, 0, 0])).is_ok());
    }
}
