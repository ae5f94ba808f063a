use crate::error::{Error, Result};
use crate::plucker::{
    in_regulus, join_lines, line_from_points, meet_line_plane, meet_lines, project_between_lines,
    transversal_through_point, PluckerLine,
};
use crate::projective::{
    copunctal, coplanar, join_plane, meet_planes, perspective_collineation, CollineationMap, HomPlane, HomPoint,
};

/// Both sides of the quadrilateral equivalence, and the perspectivity when
/// they hold.
#[derive(Debug, Clone)]
pub struct Lemma18 {
    /// `f_i = (a_i ∨ a_{i+1}) ∩ (b_i ∨ b_{i+1})`.
    pub f: [HomPoint; 4],
    /// `φ_i = (a_i ∨ a_{i+1}) ∨ (b_i ∨ b_{i+1})`.
    pub planes: [HomPlane; 4],
    pub points_coplanar: bool,
    pub planes_copunctal: bool,
    /// Center, axis plane and collineation taking `a_i` to `b_i`.
    pub perspectivity: Option<(HomPoint, HomPlane, CollineationMap)>,
}

impl Lemma18 {
    pub fn split(&self) -> bool {
        self.points_coplanar != self.planes_copunctal
    }
}

pub fn lemma18_check(a: &[HomPoint; 4], b: &[HomPoint; 4]) -> Result<Lemma18> {
    let mut f: Vec<HomPoint> = Vec::with_capacity(4);
    let mut planes: Vec<HomPlane> = Vec::with_capacity(4);
    for i in 0..4 {
        let n = (i + 1) % 4;
        let bad = |_| Error::EdgeConditionViolated(i);
        let ea = line_from_points(&a[i], &a[n]).map_err(bad)?;
        let eb = line_from_points(&b[i], &b[n]).map_err(bad)?;
        f.push(meet_lines(&ea, &eb).map_err(bad)?);
        planes.push(join_lines(&ea, &eb).map_err(bad)?);
    }
    let f: [HomPoint; 4] = f.try_into().expect("four edges");
    let planes: [HomPlane; 4] = planes.try_into().expect("four edges");
    let points_coplanar = coplanar(&f[0], &f[1], &f[2], &f[3]);
    let planes_copunctal = copunctal(&planes[0], &planes[1], &planes[2], &planes[3]);
    let mut perspectivity = None;
    if points_coplanar && planes_copunctal {
        let center = meet_planes(&planes[0], &planes[1], &planes[2])
            .or_else(|_| meet_planes(&planes[0], &planes[1], &planes[3]))
            .or_else(|_| meet_planes(&planes[0], &planes[2], &planes[3]))
            .or_else(|_| meet_planes(&planes[1], &planes[2], &planes[3]));
        let axis = join_plane(&f[0], &f[1], &f[2])
            .or_else(|_| join_plane(&f[0], &f[1], &f[3]))
            .or_else(|_| join_plane(&f[0], &f[2], &f[3]))
            .or_else(|_| join_plane(&f[1], &f[2], &f[3]));
        if let (Ok(center), Ok(axis)) = (center, axis) {
            if let Ok(m) = perspective_collineation(&center, &axis, &a[0], &b[0]) {
                perspectivity = Some((center, axis, m));
            }
        }
    }
    Ok(Lemma18 { f, planes, points_coplanar, planes_copunctal, perspectivity })
}

#[derive(Debug, Clone)]
pub struct Lemma19 {
    /// `f_i = φ ∩ A_i`.
    pub f: [HomPoint; 4],
    /// `g_{i+2} = A_{i+2} ∩ (f_i ∨ A_{i+1})`.
    pub g: [HomPoint; 4],
    /// Second generators `B_i` through `f_i`.
    pub b_lines: [PluckerLine; 4],
    /// Quadrilaterals `(A₀∩B₁, B₁∩A₂, A₂∩B₃, B₃∩A₀)` and
    /// `(B₀∩A₁, A₁∩B₂, B₂∩A₃, A₃∩B₀)` whose edges meet in the `f_i`.
    pub quad_a: [HomPoint; 4],
    pub quad_b: [HomPoint; 4],
}

impl Lemma19 {
    pub fn g_coplanar(&self) -> bool {
        coplanar(&self.g[0], &self.g[1], &self.g[2], &self.g[3])
    }
}

pub fn lemma19_construct(lines: &[PluckerLine; 4], phi: &HomPlane) -> Result<Lemma19> {
    if !in_regulus(&lines[0], &lines[1], &lines[2], &lines[3]) {
        return Err(Error::NotARegulus);
    }
    let mut f = Vec::with_capacity(4);
    for (i, l) in lines.iter().enumerate() {
        f.push(meet_line_plane(l, phi).map_err(|_| Error::PlaneIncident(i))?);
    }
    let f: [HomPoint; 4] = f.try_into().expect("four lines");
    let mut g: [Option<HomPoint>; 4] = Default::default();
    for i in 0..4 {
        let (c, t) = ((i + 1) % 4, (i + 2) % 4);
        g[t] = Some(project_between_lines(&lines[c], &lines[i], &lines[t], &f[i])?);
    }
    let g = g.map(|x| x.expect("all filled"));
    let mut b_lines = Vec::with_capacity(4);
    for i in 0..4 {
        let (p, q) = ((i + 1) % 4, (i + 2) % 4);
        b_lines.push(transversal_through_point(&f[i], &lines[p], &lines[q])?);
    }
    let b: [PluckerLine; 4] = b_lines.try_into().expect("four lines");
    let a = lines;
    let m = |x: &PluckerLine, y: &PluckerLine| meet_lines(x, y);
    let quad_a = [m(&a[0], &b[1])?, m(&b[1], &a[2])?, m(&a[2], &b[3])?, m(&b[3], &a[0])?];
    let quad_b = [m(&b[0], &a[1])?, m(&a[1], &b[2])?, m(&b[2], &a[3])?, m(&a[3], &b[0])?];
    let out = Lemma19 { f, g, b_lines: b, quad_a, quad_b };
    if !out.g_coplanar() {
        return Err(Error::pre("the g points are not coplanar"));
    }
    Ok(out)
}
