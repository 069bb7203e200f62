//! Spiral upper bounds: planar, three-dimensional with savings, and the
//! lift to k dimensions.
//!
//! In three dimensions with `n1 <= n2 <= n3` and `d = n3 - n2` the pure
//! plane-by-plane spiral spends `2*n1*n2 - 1` segments. Reordering the planes
//! lets connectors run through the innermost spiral cells of later planes,
//! which saves segments once `n1 >= 2d + 3`:
//!
//! * `n1 <  2d + 3`: no savings, `c = 1`;
//! * `n1 == 2d + 3`: exactly one plane saves a segment, `c = 2`;
//! * `n1 >= 2d + 4`: the closed form below, cross-checked against the
//!   term-by-term shell summation in [`upper_3d_summation`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::scalar::{cast, ck, lit, Checked, Int};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperMethod {
    /// Zero- or one-dimensional grid after collapsing unit axes.
    Trivial,
    /// `2*n1 - 1` on the smaller side of a rectangle.
    Planar,
    /// `2*n1*n2 - c` with `c` in {1, 2}.
    SimpleC,
    /// Closed form with `j_max` and two branches.
    ClosedForm,
    /// `(t + 1) * prod(n_1..n_{k-3}) - 1` for `k >= 4`.
    KLift,
}

/// Which branch of the closed form applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    First,
    Second,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperBoundBreakdown<T> {
    pub h_u: T,
    pub method: UpperMethod,
    /// Savings constant of the 3D block (`2*n1*n2 - t`).
    pub c: Option<T>,
    pub j_max: Option<T>,
    pub branch: Option<Branch>,
    /// Residual-plane term of the shell summation.
    pub b_term: Option<T>,
    /// Bound of the trailing 3D block.
    pub t: Option<T>,
}

impl<T: Int> UpperBoundBreakdown<T> {
    fn bare(h_u: T, method: UpperMethod) -> Self {
        UpperBoundBreakdown { h_u, method, c: None, j_max: None, branch: None, b_term: None, t: None }
    }
}

/// `2*n1 - 1` for an `n1 x n2` rectangle, `n1` the smaller side.
pub fn planar_upper<T: Int>(spec: &GridSpec) -> Result<UpperBoundBreakdown<T>> {
    let norm = spec.normalized();
    if norm.k() != 2 {
        return Err(Error::Unsupported(format!("planar bound needs two sides of length >= 2, got {}", spec)));
    }
    let short = cast::<T>(norm.dims[0])?;
    let h = (ck(short) * lit::<T>(2) - T::one()).get()?;
    Ok(UpperBoundBreakdown::bare(h, UpperMethod::Planar))
}

fn sorted3<T: Int>(n1: T, n2: T, n3: T) -> Result<(T, T, T)> {
    let mut v = [n1, n2, n3];
    v.sort();
    if v[0] < lit(2) {
        return Err(Error::Unsupported(format!("3D bounds need every side >= 2, got ({n1}, {n2}, {n3})")));
    }
    Ok((v[0], v[1], v[2]))
}

fn require_closed_form<T: Int>(n1: T, n2: T, n3: T) -> Result<()> {
    let d = n3 - n2;
    if n1 < (ck(d) * lit::<T>(2) + lit::<T>(4)).get()? {
        return Err(Error::NotApplicable(format!("closed form needs n1 >= 2(n3 - n2) + 4, got ({n1}, {n2}, {n3})")));
    }
    Ok(())
}

/// Planes consumed by shells `0..=j`: `2(j+1)(d+j+2)`.
fn shell_planes<T: Int>(j: T, d: T) -> Checked<T> {
    ck(j + T::one()) * lit::<T>(2) * (ck(d) + j + lit::<T>(2))
}

/// Largest `j >= 0` with `n1 >= 2(j+1)(d+j+2)`, by linear scan.
pub fn jmax_scan<T: Int>(n1: T, n2: T, n3: T) -> Result<T> {
    let (n1, n2, n3) = sorted3(n1, n2, n3)?;
    require_closed_form(n1, n2, n3)?;
    let d = n3 - n2;
    let mut j = T::zero();
    while n1 >= shell_planes(j + T::one(), d).get()? {
        j = j + T::one();
    }
    Ok(j)
}

/// `floor((isqrt((d+1)^2 + 2*n1) - d - 3) / 2)`.
pub fn jmax<T: Int>(n1: T, n2: T, n3: T) -> Result<T> {
    let (n1, n2, n3) = sorted3(n1, n2, n3)?;
    require_closed_form(n1, n2, n3)?;
    let d = n3 - n2;
    let radicand = ((ck(d) + T::one()).pow(2) + ck(n1) * lit::<T>(2)).get()?;
    // floor of a real quotient equals the floor taken on floor(sqrt)
    (ck(radicand.sqrt()) - d - lit::<T>(3)).div_floor(lit(2))
}

/// Residual term `b` for the planes left after the last full shell.
fn residual_b<T: Int>(n1: T, n2: T, d: T, j: T) -> Result<T> {
    let two = lit::<T>(2);
    let rest = (ck(n1) - shell_planes(j, d)).get()?;
    let cap = (ck(d) * two + ck(j + two) * two).get()?;
    let full = (ck(n2) * two - ck(j) * two - lit::<T>(3)).get()?;
    if rest <= cap {
        (ck(rest) * full).get()
    } else {
        (ck(cap) * full + (ck(rest) - cap) * (ck(full) - T::one())).get()
    }
}

/// Result of the term-by-term shell summation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Summation<T> {
    pub h_u: T,
    pub j_max: T,
    pub b_term: T,
}

/// `n1 - 1 + sum_{j=0}^{j_max} [(2n2-2j-1)(2d+2(j+1)) + 2(j+1)(2n2-2(j+1))] + b`,
/// evaluated term by term with `j_max` from the scan.
pub fn upper_3d_summation<T: Int>(n1: T, n2: T, n3: T) -> Result<Summation<T>> {
    let (n1, n2, n3) = sorted3(n1, n2, n3)?;
    let j_max = jmax_scan(n1, n2, n3)?;
    let d = n3 - n2;
    let two = lit::<T>(2);
    let mut h = ck(n1) - T::one();
    let mut j = T::zero();
    while j <= j_max {
        let wide_planes = ck(d) * two + ck(j + T::one()) * two;
        let wide_cost = ck(n2) * two - ck(j) * two - T::one();
        let narrow_planes = ck(j + T::one()) * two;
        let narrow_cost = ck(n2) * two - ck(j + T::one()) * two;
        h = h + wide_cost * wide_planes + narrow_planes * narrow_cost;
        j = j + T::one();
    }
    let b_term = residual_b(n1, n2, d, j_max)?;
    Ok(Summation { h_u: (h + b_term).get()?, j_max, b_term })
}

/// Closed form for `n1 >= 2d + 4`, divided by 3 exactly.
fn closed_form<T: Int>(n1: T, n2: T, d: T, j: T) -> Result<(T, Branch)> {
    let l = |v: i64| lit::<T>(v);
    let threshold = (ck(j).pow(2) + ck(d + l(4)) * j + ck(d) * l(2) + l(4)) * l(2);
    let j3 = ck(j).pow(3) * l(4);
    let (branch, thrice) = if n1 <= threshold.get()? {
        let thrice = j3
            + (ck(d) * l(2) + l(7)) * l(3) * ck(j).pow(2)
            + ((ck(d) * l(6) - ck(n1) * l(2)) * l(3) + l(35)) * j
            + (ck(d) * l(4) + ck(n1) * l(2) * (n2 - T::one()) + l(5)) * l(3);
        (Branch::First, thrice)
    } else {
        let thrice = j3
            + (ck(d) * l(2) + l(9)) * l(3) * ck(j).pow(2)
            + ((ck(d) * l(8) - ck(n1) * l(2)) * l(3) + l(59)) * j
            + (ck(d) * l(8) + ck(n1) * (ck(n2) * l(2) - l(3)) + l(13)) * l(3);
        (Branch::Second, thrice)
    };
    Ok((thrice.div_exact(l(3), "closed-form upper bound")?, branch))
}

/// Best 3D spiral bound, dispatching on the savings regime.
pub fn upper_3d<T: Int>(n1: T, n2: T, n3: T) -> Result<UpperBoundBreakdown<T>> {
    let (n1, n2, n3) = sorted3(n1, n2, n3)?;
    let d = n3 - n2;
    let two = lit::<T>(2);
    let pure = (ck(n1) * n2 * two).get()?;
    let boundary = (ck(d) * two + lit::<T>(3)).get()?;

    let mut out = if n1 <= boundary {
        let c = if n1 < boundary { T::one() } else { two };
        let mut b = UpperBoundBreakdown::bare(pure - c, UpperMethod::SimpleC);
        b.c = Some(c);
        b
    } else {
        let j = jmax(n1, n2, n3)?;
        let (h, branch) = closed_form(n1, n2, d, j)?;
        UpperBoundBreakdown {
            h_u: h,
            method: UpperMethod::ClosedForm,
            c: Some(pure - h),
            j_max: Some(j),
            branch: Some(branch),
            b_term: Some(residual_b(n1, n2, d, j)?),
            t: None,
        }
    };
    out.t = Some(out.h_u);
    Ok(out)
}

/// `h_u = (t + 1) * prod_{j<=k-3} n_j - 1` with `t` the bound of the three
/// largest sides. At `k = 3` this is [`upper_3d`].
pub fn upper_kd<T: Int>(spec: &GridSpec) -> Result<UpperBoundBreakdown<T>> {
    let norm = spec.normalized();
    let k = norm.k();
    if k < 3 {
        return Err(Error::Unsupported(format!("k-dimensional bound needs at least three sides >= 2, got {spec}")));
    }
    let dims = norm.dims.iter().map(|&n| cast::<T>(n)).collect::<Result<Vec<T>>>()?;
    let block = upper_3d(dims[k - 3], dims[k - 2], dims[k - 1])?;
    if k == 3 {
        return Ok(block);
    }
    let t = block.h_u;
    let prefix = dims[..k - 3].iter().fold(ck(T::one()), |acc, &n| acc * n);
    let h = ((ck(t) + T::one()) * prefix.get()? - T::one()).get()?;
    Ok(UpperBoundBreakdown { h_u: h, method: UpperMethod::KLift, t: Some(t), ..block })
}

/// Upper bound for any grid: 0 or 1 segments for degenerate grids, the planar
/// spiral for rectangles, [`upper_kd`] otherwise.
pub fn best_upper<T: Int>(spec: &GridSpec) -> Result<UpperBoundBreakdown<T>> {
    let norm = spec.normalized();
    match norm.k() {
        0 => Ok(UpperBoundBreakdown::bare(T::zero(), UpperMethod::Trivial)),
        1 => Ok(UpperBoundBreakdown::bare(T::one(), UpperMethod::Trivial)),
        2 => planar_upper(spec),
        _ => upper_kd(spec),
    }
}
