use std::collections::BTreeMap;

use super::{standard_alignments, verify_cycle, LaplaceCycle};
use crate::congruences::LineCongruence;
use crate::error::{Error, Result, Vertex};
use crate::nets::{laplace, Dir, DiscreteNet, NetWindow};
use crate::plucker::{
    conic_section, lines_meet, meet_line_plane, meet_lines, project_between_conics, quadric_through_three_lines,
    ruling_through_point, transversal_through_point, Conic, PluckerLine, Quadric,
};
use crate::projective::{join_plane, HomPoint};
use crate::report::Report;

/// Values of `f` and `A` along the two axes through `origin`, plus the point
/// of `f` at `origin + (1, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxesData {
    pub window: NetWindow,
    pub origin: Vertex,
    /// `f(i, origin.1)` for `i = i0..=i1`.
    pub f_row: Vec<HomPoint>,
    /// `f(origin.0, j)` for `j = j0..=j1`.
    pub f_col: Vec<HomPoint>,
    pub a_row: Vec<PluckerLine>,
    pub a_col: Vec<PluckerLine>,
    pub f11: HomPoint,
}

#[derive(Debug, Clone)]
pub struct AxesRebuild {
    pub f: DiscreteNet,
    pub a: LineCongruence,
    pub cycle: LaplaceCycle,
    /// Verification of the assembled cycle.
    pub report: Report,
    /// Number of vertices at which two independent routes were compared.
    pub routes_compared: usize,
}

pub fn extract_axes(f: &DiscreteNet, a: &LineCongruence, origin: Vertex) -> Result<AxesData> {
    let w = f.window().intersect(a.window()).ok_or(Error::WindowMismatch)?;
    let (oi, oj) = origin;
    if !w.contains(origin) || !w.contains((oi + 1, oj + 1)) {
        return Err(Error::OutOfWindow((oi + 1, oj + 1)));
    }
    let row = |i| (i, oj);
    let col = |j| (oi, j);
    Ok(AxesData {
        window: w,
        origin,
        f_row: (w.i0..=w.i1).map(|i| f.at(row(i)).cloned()).collect::<Result<_>>()?,
        f_col: (w.j0..=w.j1).map(|j| f.at(col(j)).cloned()).collect::<Result<_>>()?,
        a_row: (w.i0..=w.i1).map(|i| a.line(row(i)).cloned()).collect::<Result<_>>()?,
        a_col: (w.j0..=w.j1).map(|j| a.line(col(j)).cloned()).collect::<Result<_>>()?,
        f11: f.at((oi + 1, oj + 1))?.clone(),
    })
}

fn quadric(a: &PluckerLine, b: &PluckerLine, c: &PluckerLine) -> Result<Quadric> {
    quadric_through_three_lines(a, b, c).map_err(|_| Error::DegenerateQuadric)
}

struct Known {
    f: BTreeMap<Vertex, HomPoint>,
    a: BTreeMap<Vertex, PluckerLine>,
}

impl Known {
    fn has(&self, v: Vertex) -> bool {
        self.f.contains_key(&v) && self.a.contains_key(&v)
    }

    fn pt(&self, v: Vertex) -> &HomPoint {
        &self.f[&v]
    }

    fn ln(&self, v: Vertex) -> &PluckerLine {
        &self.a[&v]
    }

    /// Section of the quadric through the lines at `b`, `p`, `q` by the
    /// plane through their points.
    fn conic(&self, b: Vertex, p: Vertex, q: Vertex) -> Result<Conic> {
        let qd = quadric(self.ln(b), self.ln(p), self.ln(q))?;
        let plane = join_plane(self.pt(b), self.pt(p), self.pt(q))?;
        conic_section(&qd, &plane)
    }
}

fn add(v: Vertex, d: Vertex) -> Vertex {
    (v.0 + d.0, v.1 + d.1)
}

/// Every route to the vertex `t` whose inputs are known, evaluated.
///
/// With `b = t - (si, sj)` the target point lies on the conic
/// `D = Q(A_b, A_{b+si·e1}, A_{b+sj·e2}) ∩ (f_b ∨ f_{b+si·e1} ∨ f_{b+sj·e2})`
/// and is the conic projection of a neighbouring quadrant corner onto `D`.
fn routes(k: &Known, origin: Vertex, t: Vertex) -> Vec<Result<HomPoint>> {
    let si = (t.0 - origin.0).signum();
    let sj = (t.1 - origin.1).signum();
    let b = add(t, (-si, -sj));
    let (bi, bj) = (add(b, (si, 0)), add(b, (0, sj)));
    let mut out = Vec::new();
    if !(k.has(b) && k.has(bi) && k.has(bj)) {
        return out;
    }
    let d = k.conic(b, bi, bj);
    let row_back = add(b, (-si, 0));
    let row_x = add(row_back, (0, sj));
    if k.has(row_back) && k.f.contains_key(&row_x) {
        out.push(d.clone().and_then(|d| {
            let c = k.conic(b, row_back, bj)?;
            project_between_conics(k.ln(bj), &c, &d, k.pt(row_x))
        }));
    }
    let col_back = add(b, (0, -sj));
    let col_x = add(col_back, (si, 0));
    if k.has(col_back) && k.f.contains_key(&col_x) {
        out.push(d.and_then(|d| {
            let c = k.conic(b, bi, col_back)?;
            project_between_conics(k.ln(bi), &c, &d, k.pt(col_x))
        }));
    }
    out
}

/// The generator through `x` in the regulus of the lines at `b`, `b+si·e1`,
/// `b+sj·e2`.
fn axis_line(k: &Known, origin: Vertex, t: Vertex, x: &HomPoint) -> Result<PluckerLine> {
    let si = (t.0 - origin.0).signum();
    let sj = (t.1 - origin.1).signum();
    let b = add(t, (-si, -sj));
    let (bi, bj) = (add(b, (si, 0)), add(b, (0, sj)));
    let q = quadric(k.ln(b), k.ln(bi), k.ln(bj))?;
    let other = transversal_through_point(x, k.ln(b), k.ln(bi))?;
    ruling_through_point(&q, x, &other)
}

fn check_suitable(d: &AxesData) -> Result<()> {
    let w = d.window;
    let (oi, oj) = d.origin;
    if d.f_row.len() != w.width() || d.a_row.len() != w.width() || d.f_col.len() != w.height() || d.a_col.len() != w.height() {
        return Err(Error::WindowMismatch);
    }
    if !w.contains(d.origin) || !w.contains((oi + 1, oj + 1)) {
        return Err(Error::OutOfWindow((oi + 1, oj + 1)));
    }
    let ri = (oi - w.i0) as usize;
    let cj = (oj - w.j0) as usize;
    if d.f_row[ri] != d.f_col[cj] || d.a_row[ri] != d.a_col[cj] {
        return Err(Error::pre("row and column disagree at the origin"));
    }
    for (pts, lines, start) in [(&d.f_row, &d.a_row, w.i0), (&d.f_col, &d.a_col, w.j0)] {
        let n = pts.len();
        for m in 0..n {
            let index = start + m as i64;
            if m + 1 < n && lines_meet(&lines[m], &lines[m + 1]) {
                return Err(Error::SuitabilityViolated { bullet: 1, index });
            }
            if m > 0 && m + 1 < n {
                let ok = join_plane(&pts[m - 1], &pts[m], &pts[m + 1]).is_ok_and(|p| lines[m].lies_in(&p));
                if !ok {
                    return Err(Error::SuitabilityViolated { bullet: 2, index });
                }
            }
            if !lines[m].contains(&pts[m]) {
                return Err(Error::SuitabilityViolated { bullet: 3, index });
            }
        }
    }
    let q = quadric(&d.a_row[ri], &d.a_row[ri + 1], &d.a_col[cj + 1])?;
    let plane = join_plane(&d.f_row[ri], &d.f_row[ri + 1], &d.f_col[cj + 1])?;
    if !q.contains(&d.f11) || !d.f11.lies_on(&plane) {
        return Err(Error::F11OffQuadric);
    }
    Ok(())
}

/// Rebuilds `f` and its axis congruence from axes data by conic
/// projections, checks every alternative route, and completes the cycle
/// with `h = L₁f`, `k = L₂f` and `g(i+1, j+1) = L₁h(i, j)`.
pub fn construct_cycle_from_axes(d: &AxesData) -> Result<AxesRebuild> {
    check_suitable(d)?;
    let w = d.window;
    let o = d.origin;
    let mut k = Known { f: BTreeMap::new(), a: BTreeMap::new() };
    for (m, i) in (w.i0..=w.i1).enumerate() {
        k.f.insert((i, o.1), d.f_row[m].clone());
        k.a.insert((i, o.1), d.a_row[m].clone());
    }
    for (m, j) in (w.j0..=w.j1).enumerate() {
        k.f.insert((o.0, j), d.f_col[m].clone());
        k.a.insert((o.0, j), d.a_col[m].clone());
    }
    let t11 = (o.0 + 1, o.1 + 1);
    let a11 = axis_line(&k, o, t11, &d.f11).map_err(|_| Error::DegenerateTransport(t11))?;
    k.f.insert(t11, d.f11.clone());
    k.a.insert(t11, a11);

    loop {
        let mut progress = false;
        for t in w.vertices() {
            if k.has(t) {
                continue;
            }
            let Some(first) = routes(&k, o, t).into_iter().next() else {
                continue;
            };
            let x = first.map_err(|_| Error::DegenerateTransport(t))?;
            let l = axis_line(&k, o, t, &x).map_err(|_| Error::DegenerateTransport(t))?;
            k.f.insert(t, x);
            k.a.insert(t, l);
            progress = true;
        }
        if !progress {
            break;
        }
    }
    if let Some(t) = w.vertices().find(|t| !k.has(*t)) {
        return Err(Error::DegenerateTransport(t));
    }

    let mut routes_compared = 0;
    for t in w.vertices() {
        if t.0 == o.0 || t.1 == o.1 {
            continue;
        }
        let all = routes(&k, o, t);
        for r in &all {
            let x = r.clone().map_err(|_| Error::DegenerateTransport(t))?;
            if &x != k.pt(t) {
                return Err(Error::RouteMismatch(t));
            }
        }
        if all.len() >= 2 {
            routes_compared += 1;
        }
    }

    let f = DiscreteNet::from_fn(w, |v| Ok(k.pt(v).clone()))?;
    let a = LineCongruence::from_fn(w, |v| Ok(k.ln(v).clone()))?;
    let h = laplace(&f, Dir::First)?;
    let kk = laplace(&f, Dir::Second)?;
    let g = laplace(&h, Dir::First)?.shifted(1, 1);
    let cycle = LaplaceCycle { f: f.clone(), h, g, k: kk, alignments: standard_alignments() };
    let report = verify_cycle(&cycle);
    Ok(AxesRebuild { f, a, cycle, report, routes_compared })
}

/// Star of five lines and points, ordered `(0,0), (1,0), (-1,0), (0,1), (0,-1)`.
struct Star<'a> {
    a: &'a [PluckerLine; 5],
    f: &'a [HomPoint; 5],
}

impl Star<'_> {
    fn idx(s: i64, t: i64) -> usize {
        match (s, t) {
            (0, 0) => 0,
            (1, 0) => 1,
            (-1, 0) => 2,
            (0, 1) => 3,
            (0, -1) => 4,
            _ => unreachable!("not a star index"),
        }
    }

    fn line(&self, s: i64, t: i64) -> &PluckerLine {
        &self.a[Self::idx(s, t)]
    }

    fn point(&self, s: i64, t: i64) -> &HomPoint {
        &self.f[Self::idx(s, t)]
    }

    fn conic(&self, s: i64, t: i64) -> Result<Conic> {
        let q = quadric(self.line(0, 0), self.line(s, 0), self.line(0, t))?;
        let plane = join_plane(self.point(0, 0), self.point(s, 0), self.point(0, t))?;
        conic_section(&q, &plane)
    }

    /// The quadrant cycle `(-1,-1) → (1,-1) → (1,1) → (-1,1) → (-1,-1)`,
    /// with the center line shared by consecutive quadrants.
    fn compose(&self, x: &HomPoint, start: usize) -> Result<HomPoint> {
        let quads = [(-1, -1), (1, -1), (1, 1), (-1, 1)];
        let centers = [(0, -1), (1, 0), (0, 1), (-1, 0)];
        let mut cur = x.clone();
        for n in 0..4 {
            let m = (start + n) % 4;
            let (from, to) = (quads[m], quads[(m + 1) % 4]);
            let z = self.line(centers[m].0, centers[m].1);
            cur = project_between_conics(z, &self.conic(from.0, from.1)?, &self.conic(to.0, to.1)?, &cur)?;
        }
        Ok(cur)
    }

    fn validate(&self) -> Result<()> {
        for n in 0..5 {
            if !self.a[n].contains(&self.f[n]) {
                return Err(Error::PointNotOnLine);
            }
        }
        Ok(())
    }
}

/// Points of the conic in quadrant `(s, t)`: each line through a point of
/// `A₀₀` meeting `A_{s,0}` and `A_{0,t}` lies on the quadric and meets the
/// conic's plane in a point of the conic.
fn conic_samples(star: &Star<'_>, s: i64, t: i64, count: usize) -> Result<Vec<HomPoint>> {
    let c = star.conic(s, t)?;
    let (u, v) = star.line(0, 0).span_points();
    let mut out = Vec::new();
    for n in 0..(4 * count as i64) {
        let y = u.combine(&1.into(), &v, &(n - 2).into())?;
        let Ok(beta) = transversal_through_point(&y, star.line(s, 0), star.line(0, t)) else {
            continue;
        };
        if let Ok(x) = meet_line_plane(&beta, &c.plane) {
            if !out.contains(&x) {
                out.push(x);
            }
        }
        if out.len() == count {
            break;
        }
    }
    Ok(out)
}

/// Whether the four-fold conic projection around the star fixes sampled
/// points of the conic in quadrant `(-1, -1)`.
pub fn lemma21_check(a: &[PluckerLine; 5], f: &[HomPoint; 5]) -> Result<bool> {
    let star = Star { a, f };
    star.validate()?;
    for x in conic_samples(&star, -1, -1, 8)? {
        if star.compose(&x, 0)? != x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Transports the corner point `f11` of quadrant `(1,1)` around the star
/// and returns, for each quadrant in the order `(1,1), (-1,1), (-1,-1),
/// (1,-1)`, the point where the second generator through its corner meets
/// `A₀₀`.
pub fn lemma21_transport(a: &[PluckerLine; 5], f: &[HomPoint; 5], f11: &HomPoint) -> Result<[HomPoint; 4]> {
    let star = Star { a, f };
    star.validate()?;
    let quads = [(1, 1), (-1, 1), (-1, -1), (1, -1)];
    let centers = [(0, 1), (-1, 0), (0, -1)];
    let mut corners = vec![f11.clone()];
    for n in 0..3 {
        let (from, to) = (quads[n], quads[n + 1]);
        let z = star.line(centers[n].0, centers[n].1);
        let next = project_between_conics(z, &star.conic(from.0, from.1)?, &star.conic(to.0, to.1)?, &corners[n])?;
        corners.push(next);
    }
    let mut out = Vec::with_capacity(4);
    for (n, (s, _)) in quads.iter().enumerate() {
        let beta = transversal_through_point(&corners[n], star.line(0, 0), star.line(*s, 0))?;
        out.push(meet_lines(&beta, star.line(0, 0))?);
    }
    Ok(out.try_into().expect("four quadrants"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{diagonal_congruences, generate_cycle};
    use crate::random::Sampler;

    fn random_star(s: &mut Sampler) -> ([PluckerLine; 5], [HomPoint; 5]) {
        let a = [0; 5].map(|_| s.line(4));
        let f = a.clone().map(|l| s.point_on_line(&l, 3));
        (a, f)
    }

    #[test]
    fn star_projections_compose() {
        let mut s = Sampler::new(21);
        let mut done = 0;
        while done < 5 {
            let (a, f) = random_star(&mut s);
            match lemma21_check(&a, &f) {
                Ok(ok) => {
                    assert!(ok);
                    done += 1;
                }
                Err(_) => continue,
            }
        }
    }

    #[test]
    fn b_points_agree() {
        let mut s = Sampler::new(22);
        let mut done = 0;
        while done < 5 {
            let (a, f) = random_star(&mut s);
            let y = s.point_on_line(&a[0], 3);
            let Ok(beta) = transversal_through_point(&y, &a[1], &a[3]) else { continue };
            let Ok(plane) = join_plane(&f[0], &f[1], &f[3]) else { continue };
            let Ok(f11) = meet_line_plane(&beta, &plane) else { continue };
            let Ok(b) = lemma21_transport(&a, &f, &f11) else { continue };
            assert!(b.iter().all(|x| x == &y), "{b:?} vs {y:?}");
            done += 1;
        }
    }

    #[test]
    fn round_trip_from_a_method_one_cycle() {
        let w = NetWindow::square(4);
        let (c, _) = generate_cycle(3, &w, 30).unwrap();
        let (kc, _) = diagonal_congruences(&c).unwrap();
        let data = extract_axes(&c.f, &kc, (0, 0)).unwrap();
        let r = construct_cycle_from_axes(&data).unwrap();
        assert_eq!(r.f, c.f);
        assert_eq!(r.a, kc);
        assert!(r.report.is_clean(), "{}", r.report);
    }

    #[test]
    fn interior_origin_round_trip() {
        let w = NetWindow::square(5);
        let (c, _) = generate_cycle(4, &w, 30).unwrap();
        let (kc, _) = diagonal_congruences(&c).unwrap();
        let data = extract_axes(&c.f, &kc, (2, 2)).unwrap();
        let r = construct_cycle_from_axes(&data).unwrap();
        assert_eq!(r.f, c.f);
        assert_eq!(r.a, kc);
        assert!(r.routes_compared > 0);
    }

    #[test]
    fn f11_off_quadric() {
        let w = NetWindow::square(3);
        let (c, _) = generate_cycle(5, &w, 30).unwrap();
        let (kc, _) = diagonal_congruences(&c).unwrap();
        let mut data = extract_axes(&c.f, &kc, (0, 0)).unwrap();
        data.f11 = c.g.at((1, 1)).unwrap().clone();
        assert_eq!(construct_cycle_from_axes(&data).unwrap_err(), Error::F11OffQuadric);
        let mut bad = extract_axes(&c.f, &kc, (0, 0)).unwrap();
        bad.f_row[1] = c.f.at((1, 1)).unwrap().clone();
        assert!(matches!(construct_cycle_from_axes(&bad), Err(Error::SuitabilityViolated { .. })));
    }
}
