use std::collections::BTreeMap;
use std::fmt;

use super::{diagonal_congruences, standard_alignments, verify_cycle, LaplaceCycle, NetName};
use crate::error::{Error, Result, Vertex};
use crate::nets::{DiscreteNet, NetWindow};
use crate::plucker::{line_from_points, lines_meet, meet_lines};
use crate::projective::{collinear, coplanar, HomPoint};
use crate::random::Sampler;
use crate::scalar::ProjParam;

/// One free choice of the construction: the point of net `net` at `at`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub net: NetName,
    pub at: Vertex,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.net.letter(), self.at.0, self.at.1)
    }
}

/// Base points at the window corner and one pencil parameter for every
/// point on the bottom row and left column other than the corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSeed {
    pub f0: HomPoint,
    pub g0: HomPoint,
    pub h0: HomPoint,
    pub k0: HomPoint,
    pub params: BTreeMap<Slot, ProjParam>,
}

/// Slots needing a parameter on window `w`, in construction order.
pub fn seed_slots(w: &NetWindow) -> Vec<Slot> {
    let order = [NetName::F, NetName::G, NetName::H, NetName::K];
    let mut out = Vec::new();
    for i in w.i0 + 1..=w.i1 {
        out.extend(order.map(|net| Slot { net, at: (i, w.j0) }));
    }
    for j in w.j0 + 1..=w.j1 {
        out.extend(order.map(|net| Slot { net, at: (w.i0, j) }));
    }
    out
}

struct Builder<'a> {
    seed: &'a CycleSeed,
    pts: BTreeMap<(NetName, Vertex), HomPoint>,
}

impl Builder<'_> {
    fn get(&self, n: NetName, v: Vertex) -> &HomPoint {
        &self.pts[&(n, v)]
    }

    /// `u + λ v` with `u` the previous point of the same net.
    fn choose(&mut self, net: NetName, at: Vertex, u: (NetName, Vertex), v: (NetName, Vertex)) -> Result<()> {
        let slot = Slot { net, at };
        let bad = || Error::DegenerateChoice { face: at, slot: slot.to_string() };
        let lambda = self.seed.params.get(&slot).ok_or_else(|| Error::MissingParameter(slot.to_string()))?;
        let (pu, pv) = (self.get(u.0, u.1), self.get(v.0, v.1));
        if pu == pv {
            return Err(bad());
        }
        let x = pu.pencil(pv, lambda).map_err(|_| bad())?;
        if &x == pu || &x == pv {
            return Err(bad());
        }
        self.pts.insert((net, at), x);
        Ok(())
    }

    /// `(a ∨ b) ∩ (c ∨ d)` for the point of `net` at `at`; `face` names the
    /// elementary quadrilateral being filled.
    fn meet(&mut self, net: NetName, at: Vertex, face: Vertex, l: [(NetName, Vertex); 4]) -> Result<()> {
        let bad = || Error::DegenerateChoice { face, slot: Slot { net, at }.to_string() };
        let p = l.map(|(n, v)| self.get(n, v).clone());
        if !coplanar(&p[0], &p[1], &p[2], &p[3]) {
            return Err(bad());
        }
        let a = line_from_points(&p[0], &p[1]).map_err(|_| bad())?;
        let b = line_from_points(&p[2], &p[3]).map_err(|_| bad())?;
        let x = meet_lines(&a, &b).map_err(|_| bad())?;
        self.pts.insert((net, at), x);
        Ok(())
    }
}

/// Builds the four nets face by face. The bottom row and left column carry
/// four free choices per vertex:
///
/// ```text
/// row:    f_i ∈ f_{i-1} ∨ h_{i-1},  g_i ∈ g_{i-1} ∨ k_{i-1},
///         h_i ∈ h_{i-1} ∨ g_i,      k_i ∈ k_{i-1} ∨ f_i
/// column: f^j ∈ f^{j-1} ∨ k^{j-1},  g^j ∈ g^{j-1} ∨ h^{j-1},
///         h^j ∈ h^{j-1} ∨ f^j,      k^j ∈ k^{j-1} ∨ g^j
/// ```
///
/// and everything else is determined by
///
/// ```text
/// f_{i+1}^{j+1} = (f_{i+1}^j ∨ k_i^j) ∩ (f_i^{j+1} ∨ h_i^j)
/// g_{i+1}^{j+1} = (g_{i+1}^j ∨ h_i^j) ∩ (g_i^{j+1} ∨ k_i^j)
/// h_{i+1}^{j+1} = (h_{i+1}^j ∨ f_{i+1}^{j+1}) ∩ (h_i^{j+1} ∨ g_{i+1}^{j+1})
/// k_{i+1}^{j+1} = (k_{i+1}^j ∨ g_{i+1}^{j+1}) ∩ (k_i^{j+1} ∨ f_{i+1}^{j+1})
/// ```
pub fn construct_cycle_pointwise(seed: &CycleSeed, w: &NetWindow) -> Result<LaplaceCycle> {
    use NetName::*;
    if w.i1 == w.i0 || w.j1 == w.j0 {
        return Err(Error::WindowTooSmall);
    }
    let o = (w.i0, w.j0);
    let mut b = Builder { seed, pts: BTreeMap::new() };
    for (n, p) in [(F, &seed.f0), (G, &seed.g0), (H, &seed.h0), (K, &seed.k0)] {
        b.pts.insert((n, o), p.clone());
    }
    for i in w.i0 + 1..=w.i1 {
        let (v, prev) = ((i, w.j0), (i - 1, w.j0));
        b.choose(F, v, (F, prev), (H, prev))?;
        b.choose(G, v, (G, prev), (K, prev))?;
        b.choose(H, v, (H, prev), (G, v))?;
        b.choose(K, v, (K, prev), (F, v))?;
    }
    for j in w.j0 + 1..=w.j1 {
        let (v, prev) = ((w.i0, j), (w.i0, j - 1));
        b.choose(F, v, (F, prev), (K, prev))?;
        b.choose(G, v, (G, prev), (H, prev))?;
        b.choose(H, v, (H, prev), (F, v))?;
        b.choose(K, v, (K, prev), (G, v))?;
    }
    for (i, j) in w.faces() {
        let t = (i + 1, j + 1);
        let (r, u, c) = ((i + 1, j), (i, j + 1), (i, j));
        b.meet(F, t, c, [(F, r), (K, c), (F, u), (H, c)])?;
        b.meet(G, t, c, [(G, r), (H, c), (G, u), (K, c)])?;
        b.meet(H, t, c, [(H, r), (F, t), (H, u), (G, t)])?;
        b.meet(K, t, c, [(K, r), (G, t), (K, u), (F, t)])?;
    }
    let net = |n: NetName| DiscreteNet::from_fn(*w, |v| Ok(b.get(n, v).clone()));
    Ok(LaplaceCycle { f: net(F)?, h: net(H)?, g: net(G)?, k: net(K)?, alignments: standard_alignments() })
}

fn general_position(pts: &[&HomPoint]) -> bool {
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            for c in b + 1..pts.len() {
                if collinear(pts[a], pts[b], pts[c]) {
                    return false;
                }
            }
        }
    }
    pts.len() < 4 || !coplanar(pts[0], pts[1], pts[2], pts[3])
}

/// Random base points in general position and small rational parameters.
pub fn random_seed(s: &mut Sampler, w: &NetWindow) -> CycleSeed {
    let [f0, g0, h0, k0] = loop {
        let p = [0; 4].map(|_| s.point(3));
        if general_position(&p.iter().collect::<Vec<_>>()) {
            break p;
        }
    };
    let params = seed_slots(w).into_iter().map(|slot| (slot, s.param(3))).collect();
    CycleSeed { f0, g0, h0, k0, params }
}

/// Every elementary face of both diagonal congruences has four pairwise
/// skew lines. Small random parameters occasionally produce faces whose
/// Klein images are coplanar but whose lines intersect; such draws are not
/// in general position.
fn generic_diagonals(c: &LaplaceCycle) -> bool {
    let Ok((k, l)) = diagonal_congruences(c) else {
        return false;
    };
    [k, l].iter().all(|a| {
        a.window().faces().all(|(i, j)| {
            let ls: Vec<_> = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
                .iter()
                .map(|v| a.line(*v).expect("total congruence"))
                .collect();
            (0..4).all(|x| (x + 1..4).all(|y| !lines_meet(ls[x], ls[y])))
        })
    })
}

/// Draws seeds until the construction succeeds, verifies clean, and the
/// diagonal congruences are in general position. Returns the cycle and the
/// number of rejected draws.
pub fn generate_cycle(seed: u64, w: &NetWindow, max_attempts: usize) -> Result<(LaplaceCycle, usize)> {
    let mut s = Sampler::new(seed);
    for attempt in 0..max_attempts {
        let cs = random_seed(&mut s, w);
        let Ok(c) = construct_cycle_pointwise(&cs, w) else {
            continue;
        };
        if verify_cycle(&c).is_clean() && generic_diagonals(&c) {
            return Ok((c, attempt));
        }
    }
    Err(Error::RetriesExhausted(max_attempts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruences::is_w_congruence;
    use crate::nets::is_period_four;

    #[test]
    fn generated_cycles_verify() {
        let w = NetWindow::square(4);
        for seed in 0..3 {
            let (c, _) = generate_cycle(seed, &w, 20).unwrap();
            let r = verify_cycle(&c);
            assert!(r.is_clean(), "{r}");
            assert!(is_period_four(&c.f).unwrap());
            let (k, l) = diagonal_congruences(&c).unwrap();
            assert!(is_w_congruence(&k).unwrap().is_clean());
            assert!(is_w_congruence(&l).unwrap().is_clean());
        }
    }

    #[test]
    fn raw_seed_construction_verifies() {
        let w = NetWindow::square(3);
        let mut s = Sampler::new(11);
        let mut clean = 0;
        for _ in 0..5 {
            if let Ok(c) = construct_cycle_pointwise(&random_seed(&mut s, &w), &w) {
                let r = verify_cycle(&c);
                assert!(r.is_clean(), "{r}");
                clean += 1;
            }
        }
        assert!(clean > 0);
    }

    #[test]
    fn zero_parameter_is_a_degenerate_choice() {
        let w = NetWindow::square(3);
        let mut seed = random_seed(&mut Sampler::new(5), &w);
        seed.params.insert(Slot { net: NetName::F, at: (1, 0) }, ProjParam::from_int(0));
        assert_eq!(
            construct_cycle_pointwise(&seed, &w),
            Err(Error::DegenerateChoice { face: (1, 0), slot: "f(1,0)".into() })
        );
    }

    #[test]
    fn missing_parameter() {
        let w = NetWindow::square(3);
        let mut seed = random_seed(&mut Sampler::new(5), &w);
        seed.params.remove(&Slot { net: NetName::K, at: (0, 2) });
        assert_eq!(construct_cycle_pointwise(&seed, &w), Err(Error::MissingParameter("k(0,2)".into())));
    }

    #[test]
    fn first_face_matches_the_displayed_formulas() {
        let w = NetWindow::square(2);
        let (c, _) = generate_cycle(9, &w, 20).unwrap();
        let at = |n: &DiscreteNet, v| n.at(v).unwrap().clone();
        let meet = |a: HomPoint, b: HomPoint, x: HomPoint, y: HomPoint| {
            meet_lines(&line_from_points(&a, &b).unwrap(), &line_from_points(&x, &y).unwrap()).unwrap()
        };
        let f11 = meet(at(&c.f, (1, 0)), at(&c.k, (0, 0)), at(&c.f, (0, 1)), at(&c.h, (0, 0)));
        assert_eq!(f11, at(&c.f, (1, 1)));
        let h11 = meet(at(&c.h, (1, 0)), at(&c.f, (1, 1)), at(&c.h, (0, 1)), at(&c.g, (1, 1)));
        assert_eq!(h11, at(&c.h, (1, 1)));
        let k11 = meet(at(&c.k, (1, 0)), at(&c.g, (1, 1)), at(&c.k, (0, 1)), at(&c.f, (1, 1)));
        assert_eq!(k11, at(&c.k, (1, 1)));
        assert!(collinear(&at(&c.f, (0, 0)), &at(&c.h, (0, 0)), &at(&c.f, (1, 0))));
        assert!(collinear(&at(&c.f, (0, 0)), &at(&c.k, (0, 0)), &at(&c.f, (0, 1))));
        assert!(collinear(&at(&c.g, (0, 0)), &at(&c.k, (0, 0)), &at(&c.g, (1, 0))));
        assert!(collinear(&at(&c.g, (0, 0)), &at(&c.h, (0, 0)), &at(&c.g, (0, 1))));
    }
}
