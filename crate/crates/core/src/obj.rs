//! Wavefront OBJ export.
//!
//! Points are sent to affine space by dividing by the chart coordinate
//! (default: the last one) and keeping the other three in order. Nets
//! become quad meshes, congruences become segments clipped to a box.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::congruences::LineCongruence;
use crate::cycles::{diagonal_congruences, LaplaceCycle};
use crate::error::{Error, Result, Vertex};
use crate::nets::DiscreteNet;
use crate::plucker::PluckerLine;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjOptions {
    /// Homogeneous coordinate used as the denominator, `0..=3`.
    pub chart: usize,
    pub clip_min: [f64; 3],
    pub clip_max: [f64; 3],
}

impl Default for ObjOptions {
    fn default() -> Self {
        Self { chart: 3, clip_min: [-10.0; 3], clip_max: [10.0; 3] }
    }
}

pub enum ObjPart<'a> {
    Net(&'a str, &'a DiscreteNet),
    Lines(&'a str, &'a LineCongruence),
}

fn ratio_f64(n: &BigInt, d: &BigInt) -> f64 {
    Scalar::new(n.clone(), d.clone()).to_f64().unwrap_or(f64::NAN)
}

fn affine(c: &[BigInt; 4], chart: usize) -> Option<[f64; 3]> {
    let d = &c[chart];
    if d.is_zero() {
        return None;
    }
    let mut out = [0.0; 3];
    for (slot, k) in (0..4).filter(|k| *k != chart).enumerate() {
        out[slot] = ratio_f64(&c[k], d);
    }
    Some(out)
}

fn direction(c: &[BigInt; 4], chart: usize) -> [f64; 3] {
    let mut out = [0.0; 3];
    for (slot, k) in (0..4).filter(|k| *k != chart).enumerate() {
        out[slot] = c[k].to_f64().unwrap_or(f64::NAN);
    }
    out
}

/// Affine point and direction of a line, or `None` if the line lies in the
/// ideal plane of the chart.
fn affine_line(l: &PluckerLine, chart: usize) -> Option<([f64; 3], [f64; 3])> {
    let (u, v) = l.span_points();
    let (u, v) = (u.coords(), v.coords());
    let (uk, vk) = (&u[chart], &v[chart]);
    if uk.is_zero() && vk.is_zero() {
        return None;
    }
    let (base, ideal): (&[BigInt; 4], [BigInt; 4]) = if uk.is_zero() {
        (v, u.clone())
    } else if vk.is_zero() {
        (u, v.clone())
    } else {
        (u, std::array::from_fn(|n| &u[n] * vk - &v[n] * uk))
    };
    Some((affine(base, chart)?, direction(&ideal, chart)))
}

/// Liang–Barsky clipping of `p + t d` to the box.
fn clip(p: [f64; 3], d: [f64; 3], lo: [f64; 3], hi: [f64; 3]) -> Option<([f64; 3], [f64; 3])> {
    let (mut t0, mut t1) = (f64::NEG_INFINITY, f64::INFINITY);
    for k in 0..3 {
        if d[k] == 0.0 {
            if p[k] < lo[k] || p[k] > hi[k] {
                return None;
            }
            continue;
        }
        let (a, b) = ((lo[k] - p[k]) / d[k], (hi[k] - p[k]) / d[k]);
        t0 = t0.max(a.min(b));
        t1 = t1.min(a.max(b));
    }
    if t0 > t1 {
        return None;
    }
    let at = |t: f64| std::array::from_fn(|k| p[k] + t * d[k]);
    Some((at(t0), at(t1)))
}

fn vertex_line(out: &mut String, x: [f64; 3]) {
    let _ = writeln!(out, "v {} {} {}", x[0], x[1], x[2]);
}

/// Writes the parts in order. Vertex numbering is global and follows the
/// row-major order of each window.
pub fn export_obj(parts: &[ObjPart<'_>], opt: &ObjOptions) -> Result<String> {
    if opt.chart > 3 {
        return Err(Error::pre("chart index must be in 0..=3"));
    }
    let mut out = String::new();
    let mut next = 1usize;
    for part in parts {
        match part {
            ObjPart::Net(name, f) => {
                let _ = writeln!(out, "o {name}");
                let w = *f.window();
                for v in w.vertices() {
                    let x = affine(f.at(v)?.coords(), opt.chart)
                        .ok_or(Error::IdealPoint { vertex: v, chart: opt.chart })?;
                    vertex_line(&mut out, x);
                }
                let id = |v: Vertex| next + w.index(v).expect("in window");
                for (i, j) in w.faces() {
                    let _ = writeln!(out, "f {} {} {} {}", id((i, j)), id((i + 1, j)), id((i + 1, j + 1)), id((i, j + 1)));
                }
                next += w.len();
            }
            ObjPart::Lines(name, a) => {
                let _ = writeln!(out, "o {name}");
                for v in a.window().vertices() {
                    let Some(Some(l)) = a.get(v) else { continue };
                    let Some((p, d)) = affine_line(l, opt.chart) else { continue };
                    let Some((s, e)) = clip(p, d, opt.clip_min, opt.clip_max) else { continue };
                    vertex_line(&mut out, s);
                    vertex_line(&mut out, e);
                    let _ = writeln!(out, "l {} {}", next, next + 1);
                    next += 2;
                }
            }
        }
    }
    Ok(out)
}

/// The four nets as quad meshes and the two diagonal congruences as line
/// sets.
pub fn export_cycle(c: &LaplaceCycle, opt: &ObjOptions) -> Result<String> {
    let (kc, lc) = diagonal_congruences(c)?;
    export_obj(
        &[
            ObjPart::Net("f", &c.f),
            ObjPart::Net("h", &c.h),
            ObjPart::Net("g", &c.g),
            ObjPart::Net("k", &c.k),
            ObjPart::Lines("K", &kc),
            ObjPart::Lines("L", &lc),
        ],
        opt,
    )
}
