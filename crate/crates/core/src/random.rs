//! Seeded generation of generic inputs.
//!
//! The generator is ChaCha8 seeded with `seed_from_u64`; all sampling goes
//! through `next_u64` with rejection, so a seed names the same stream on
//! every platform.

use num_bigint::BigInt;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::Result;
use crate::nets::{DiscreteNet, NetWindow};
use crate::plucker::{join_line_point, line_from_points, PluckerLine};
use crate::projective::{coplanar, HomPlane, HomPoint};
use crate::scalar::{ratio, ProjParam};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Uniform integer in `[lo, hi]`.
    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        let zone = u64::MAX - u64::MAX % span;
        loop {
            let x = self.rng.next_u64();
            if x < zone {
                return lo + (x % span) as i64;
            }
        }
    }

    pub fn nonzero(&mut self, bound: i64) -> i64 {
        loop {
            let x = self.int(-bound, bound);
            if x != 0 {
                return x;
            }
        }
    }

    pub fn coin(&mut self) -> bool {
        self.rng.next_u64() & 1 == 1
    }

    pub fn point(&mut self, bound: i64) -> HomPoint {
        loop {
            let c = [0; 4].map(|_| self.int(-bound, bound));
            if let Ok(p) = HomPoint::from_i64(c) {
                return p;
            }
        }
    }

    pub fn plane(&mut self, bound: i64) -> HomPlane {
        loop {
            let c = [0; 4].map(|_| self.int(-bound, bound));
            if let Ok(p) = HomPlane::from_i64(c) {
                return p;
            }
        }
    }

    pub fn line(&mut self, bound: i64) -> PluckerLine {
        loop {
            let (a, b) = (self.point(bound), self.point(bound));
            if let Ok(l) = line_from_points(&a, &b) {
                return l;
            }
        }
    }

    /// A small nonzero rational `p/q`.
    pub fn param(&mut self, bound: i64) -> ProjParam {
        let p = self.nonzero(bound);
        let q = self.int(1, bound.max(1));
        ProjParam::Finite(ratio(p, q))
    }

    /// A point of `l` other than its two canonical spanning points.
    pub fn point_on_line(&mut self, l: &PluckerLine, bound: i64) -> HomPoint {
        let (u, v) = l.span_points();
        loop {
            let s = BigInt::from(self.nonzero(bound));
            let t = BigInt::from(self.nonzero(bound));
            if let Ok(x) = u.combine(&s, &v, &t) {
                return x;
            }
        }
    }

    /// A plane through `l`.
    pub fn plane_through_line(&mut self, l: &PluckerLine, bound: i64) -> HomPlane {
        loop {
            if let Ok(p) = join_line_point(l, &self.point(bound)) {
                return p;
            }
        }
    }

    /// A point of the plane spanned by three points, as a combination
    /// with nonzero coefficients.
    pub fn point_in_span(&mut self, a: &HomPoint, b: &HomPoint, c: &HomPoint, bound: i64) -> HomPoint {
        loop {
            let k = [0; 3].map(|_| BigInt::from(self.nonzero(bound)));
            let v: [BigInt; 4] =
                std::array::from_fn(|n| &a.coords()[n] * &k[0] + &b.coords()[n] * &k[1] + &c.coords()[n] * &k[2]);
            if let Ok(x) = HomPoint::new(v) {
                return x;
            }
        }
    }
}

/// A random conjugate net: free boundary row and column, and every further
/// vertex a random combination of the three known vertices of its face.
/// The combination coefficients are drawn from `[-20, 20]`; with very small
/// coefficients the Laplace transforms of the result are often singular.
/// A new vertex that coincides with a known one is resampled.
pub fn random_conjugate_net(s: &mut Sampler, w: NetWindow, bound: i64) -> Result<DiscreteNet> {
    let mut f = DiscreteNet::from_fn(w, |_| Ok(s.point(bound)))?;
    for (i, j) in w.faces() {
        let a = f.at((i, j))?.clone();
        let b = f.at((i + 1, j))?.clone();
        let c = f.at((i, j + 1))?.clone();
        let x = loop {
            let x = s.point_in_span(&a, &b, &c, 20);
            if x != a && x != b && x != c {
                break x;
            }
        };
        debug_assert!(coplanar(&a, &b, &c, &x));
        f.set((i + 1, j + 1), x)?;
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nets::is_conjugate;

    #[test]
    fn streams_are_reproducible() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        let xs: Vec<i64> = (0..50).map(|_| a.int(-5, 5)).collect();
        let ys: Vec<i64> = (0..50).map(|_| b.int(-5, 5)).collect();
        assert_eq!(xs, ys);
        assert!(xs.iter().all(|x| (-5..=5).contains(x)));
        let mut c = Sampler::new(8);
        let zs: Vec<i64> = (0..50).map(|_| c.int(-5, 5)).collect();
        assert_ne!(xs, zs);
    }

    #[test]
    fn samples_are_incident() {
        let mut s = Sampler::new(1);
        for _ in 0..20 {
            let l = s.line(4);
            assert!(l.contains(&s.point_on_line(&l, 4)));
            assert!(l.lies_in(&s.plane_through_line(&l, 4)));
        }
    }

    #[test]
    fn random_nets_are_conjugate() {
        let mut s = Sampler::new(3);
        let f = random_conjugate_net(&mut s, NetWindow::square(4), 5).unwrap();
        assert!(is_conjugate(&f).unwrap().is_empty());
    }
}
