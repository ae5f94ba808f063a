use num_bigint::BigInt;

use super::{join_lines, line_from_planes, meet_line_plane, PluckerLine, Quadric};
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::projective::{HomPlane, HomPoint};

/// Plane section of a quadric, possibly split into two lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conic {
    pub quadric: Quadric,
    pub plane: HomPlane,
    pub degenerate: bool,
}

pub fn conic_section(q: &Quadric, plane: &HomPlane) -> Result<Conic> {
    let basis = plane.basis_points();
    let m = q.matrix();
    let mut restricted: Vec<Vec<BigInt>> = vec![vec![BigInt::default(); 3]; 3];
    for (a, pa) in basis.iter().enumerate() {
        for (b, pb) in basis.iter().enumerate() {
            let (x, y) = (pa.coords(), pb.coords());
            let mut s = BigInt::default();
            for i in 0..4 {
                for j in 0..4 {
                    s += &x[i] * &m[i][j] * &y[j];
                }
            }
            restricted[a][b] = s;
        }
    }
    let r = rank(&restricted);
    if r == 0 {
        return Err(Error::DegenerateQuadric);
    }
    Ok(Conic { quadric: q.clone(), plane: plane.clone(), degenerate: r < 3 })
}

impl Conic {
    pub fn contains(&self, x: &HomPoint) -> bool {
        x.lies_on(&self.plane) && self.quadric.contains(x)
    }

    /// Tangent line at `z`. For a line pair this is the component through
    /// `z`; at the double point it is undefined.
    pub fn tangent(&self, z: &HomPoint) -> Result<PluckerLine> {
        if !self.contains(z) {
            return Err(Error::PointNotOnConic);
        }
        let polar = HomPlane::new(self.quadric.polar_vector(z))
            .map_err(|_| Error::pre("point is a singular point of the quadric"))?;
        if polar == self.plane {
            return Err(Error::pre("point is the double point of a degenerate conic"));
        }
        line_from_planes(&self.plane, &polar)
    }
}

/// The intersection of `l` with the conic other than `z`; `z` itself when
/// `l` is tangent there.
pub fn second_intersection(c: &Conic, l: &PluckerLine, z: &HomPoint) -> Result<HomPoint> {
    if !c.contains(z) {
        return Err(Error::PointNotOnConic);
    }
    if !l.lies_in(&c.plane) {
        return Err(Error::LineNotInPlane);
    }
    if !l.contains(z) {
        return Err(Error::PointNotOnLine);
    }
    let (u, v) = l.span_points();
    let y = if &u != z { u } else { v };
    HomPoint::new(c.quadric.residual_vector(z, &y)).map_err(|_| Error::LineInConic)
}

/// Projection of the conic `C` onto `D` from the center line `Z`, which
/// passes through their common point `z`.
pub fn project_between_conics(zl: &PluckerLine, c: &Conic, d: &Conic, x: &HomPoint) -> Result<HomPoint> {
    if zl.lies_in(&c.plane) {
        return Err(Error::pre("center lies in the plane of C"));
    }
    if zl.lies_in(&d.plane) {
        return Err(Error::pre("center lies in the plane of D"));
    }
    let z = meet_line_plane(zl, &c.plane)?;
    if !c.contains(&z) || !d.contains(&z) {
        return Err(Error::pre("C and D do not share a point on the center"));
    }
    if !c.contains(x) {
        return Err(Error::pre("x is not on C"));
    }
    let tc = c.tangent(&z)?;
    let td = d.tangent(&z)?;
    let gamma = join_lines(zl, &tc)?;
    let delta = join_lines(zl, &td)?;
    let (cc, dd) = if gamma == delta {
        (z.clone(), z.clone())
    } else {
        let cc = second_intersection(c, &line_from_planes(&delta, &c.plane)?, &z)?;
        let dd = second_intersection(d, &line_from_planes(&gamma, &d.plane)?, &z)?;
        (cc, dd)
    };
    if x == &z {
        return Ok(dd);
    }
    if x == &cc {
        return Ok(z);
    }
    let sigma = super::join_line_point(zl, x)?;
    let m = line_from_planes(&sigma, &d.plane)?;
    second_intersection(d, &m, &z)
}
