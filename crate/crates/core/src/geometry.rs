//! Exact integer predicates on lattice segments in any dimension.
//!
//! Nothing here rounds: lattice coverage uses the gcd rule and intersection
//! solves the two-line system with Cramer's rule in `i128`, comparing
//! cross-multiplied numerators instead of dividing.

use num_integer::Integer;

use crate::grid::{GridPoint, Segment};

/// Number of lattice points on the closed segment, `gcd(|d_1|, ..., |d_k|) + 1`.
pub fn lattice_points_on_segment(seg: &Segment) -> u64 {
    lattice_count(&seg.a().0, &seg.b().0)
}

pub(crate) fn lattice_count(a: &[i64], b: &[i64]) -> u64 {
    step_gcd(a, b).unsigned_abs() + 1
}

fn step_gcd(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).fold(0i64, |g, (x, y)| g.gcd(&(y - x)))
}

/// Lattice points on the closed segment, ordered from `a` to `b`.
pub fn lattice_points(seg: &Segment) -> impl Iterator<Item = GridPoint> + '_ {
    let a = &seg.a().0;
    let g = step_gcd(a, &seg.b().0);
    let step: Vec<i64> = seg.delta().iter().map(|d| d / g).collect();
    (0..=g).map(move |i| GridPoint(a.iter().zip(&step).map(|(x, s)| x + i * s).collect()))
}

/// Primitive direction of `a -> b` (componentwise divided by the gcd).
pub(crate) fn primitive_direction(a: &[i64], b: &[i64]) -> Vec<i64> {
    let g = step_gcd(a, b);
    a.iter().zip(b).map(|(x, y)| (y - x) / g).collect()
}

/// `true` when `u` and `v` are parallel (every 2x2 minor vanishes).
fn parallel(u: &[i128], v: &[i128]) -> bool {
    let k = u.len();
    for i in 0..k {
        for j in i + 1..k {
            if u[i] * v[j] - u[j] * v[i] != 0 {
                return false;
            }
        }
    }
    true
}

fn dot(u: &[i128], v: &[i128]) -> i128 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Do the closed segments `p0p1` and `q0q1` share at least one point (lattice
/// or not)? Touching and collinear overlap both count.
pub fn segments_touch(p0: &[i64], p1: &[i64], q0: &[i64], q1: &[i64]) -> bool {
    let k = p0.len();
    debug_assert!(p1.len() == k && q0.len() == k && q1.len() == k);

    // bounding-box rejection
    for i in 0..k {
        let (plo, phi) = (p0[i].min(p1[i]), p0[i].max(p1[i]));
        let (qlo, qhi) = (q0[i].min(q1[i]), q0[i].max(q1[i]));
        if phi < qlo || qhi < plo {
            return false;
        }
    }

    let u: Vec<i128> = (0..k).map(|i| (p1[i] - p0[i]) as i128).collect();
    let v: Vec<i128> = (0..k).map(|i| (q1[i] - q0[i]) as i128).collect();
    let w: Vec<i128> = (0..k).map(|i| (q0[i] - p0[i]) as i128).collect();

    if parallel(&u, &v) {
        if !parallel(&u, &w) {
            return false;
        }
        // collinear: project q0 and q1 onto the p axis, scaled by |u|^2
        let uu = dot(&u, &u);
        let s0 = dot(&w, &u);
        let s1 = s0 + dot(&v, &u);
        let (lo, hi) = (s0.min(s1), s0.max(s1));
        return hi >= 0 && lo <= uu;
    }

    // p0 + s u = q0 + t v  <=>  s u - t v = w
    let (i, j, det) = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, u[i] * v[j] - u[j] * v[i]))
        .find(|&(_, _, d)| d != 0)
        .expect("non-parallel directions have a non-zero minor");
    let mut s_num = w[i] * v[j] - v[i] * w[j];
    let mut t_num = u[j] * w[i] - u[i] * w[j];
    let mut den = det;
    if den < 0 {
        den = -den;
        s_num = -s_num;
        t_num = -t_num;
    }
    if s_num < 0 || s_num > den || t_num < 0 || t_num > den {
        return false;
    }
    // the solution must satisfy every coordinate, not just the chosen pair
    (0..k).all(|m| s_num * u[m] - t_num * v[m] == w[m] * den)
}

/// Segment-level wrapper of [`segments_touch`].
pub fn intersects(s1: &Segment, s2: &Segment) -> bool {
    segments_touch(&s1.a().0, &s1.b().0, &s2.a().0, &s2.b().0)
}
