//! Counting lower bounds for `k >= 3`.
//!
//! The capacity model: the first two segments reach `n_k + n_{k-1} - 1`
//! points, `2 * sum_{j<=k-2}(n_j - 1)` segments are tied up connecting the
//! lower-dimensional slices, and every further segment adds at most a fixed
//! per-segment capacity `w`. The smallest `h` whose capacity reaches the
//! point count is the bound.
//!
//! Two capacities are in use, with `a = n_k + n_{k-1}`:
//!
//! * exact: `w = floor((a - 1) / 2)`, i.e. `a/2 - 1` for even `a` and
//!   `(a - 1)/2` for odd `a`; its closed form is the two-branch bound
//!   [`lower_kd`];
//! * relaxed: `w = (a - 1) / 2` as a rational, giving the single uniform
//!   bound [`lower_relaxed`], never larger than the exact one.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::scalar::{cast, ck, lit, Checked, Int};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    /// `n_k + n_{k-1}` even.
    EvenSum,
    OddSum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CapacityModel {
    Exact,
    Relaxed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Int + Serialize", deserialize = "T: Int + Deserialize<'de>"))]
pub struct LowerBoundBreakdown<T: Int> {
    pub h_l: T,
    pub parity: Parity,
    pub per_segment_capacity: Ratio<T>,
    pub relaxed: bool,
}

/// Sorted sides, all `>= 2`, `k >= 3`.
struct Sides<T> {
    dims: Vec<T>,
}

impl<T: Int> Sides<T> {
    fn of(spec: &GridSpec) -> Result<Self> {
        let norm = spec.normalized();
        if norm.k() < 3 {
            return Err(Error::NotApplicable(format!("lower bounds need at least three sides >= 2, got {spec}")));
        }
        let dims = norm.dims.iter().map(|&n| cast::<T>(n)).collect::<Result<_>>()?;
        Ok(Sides { dims })
    }

    fn k(&self) -> usize {
        self.dims.len()
    }

    fn largest(&self) -> T {
        self.dims[self.k() - 1]
    }

    fn second(&self) -> T {
        self.dims[self.k() - 2]
    }

    /// Sides `n_1 .. n_{k-2}`.
    fn lower(&self) -> &[T] {
        &self.dims[..self.k() - 2]
    }

    fn pair_sum(&self) -> Result<T> {
        (ck(self.largest()) + self.second()).get()
    }

    fn parity(&self) -> Result<Parity> {
        Ok(if self.pair_sum()?.is_even() { Parity::EvenSum } else { Parity::OddSum })
    }

    fn points(&self) -> Checked<T> {
        self.dims.iter().fold(ck(T::one()), |acc, &n| acc * n)
    }

    fn width(&self, model: CapacityModel) -> Result<Ratio<T>> {
        let a_minus_1 = self.pair_sum()? - T::one();
        let two = lit::<T>(2);
        Ok(match model {
            CapacityModel::Exact => Ratio::from_integer(a_minus_1.div_floor(&two)),
            CapacityModel::Relaxed => Ratio::new(a_minus_1, two),
        })
    }

    /// `sum_{j<=k-2}(n_j - 1)`.
    fn connector_sum(&self) -> Checked<T> {
        self.lower().iter().fold(ck(T::zero()), |acc, &n| acc + (n - T::one()))
    }

    /// Fewest segments the model allows: `2 * connector_sum + 1`.
    fn floor_h(&self) -> Result<T> {
        (self.connector_sum() * lit::<T>(2) + T::one()).get()
    }
}

/// Points coverable by `h` segments under the counting model.
pub fn capacity<T: Int>(spec: &GridSpec, h: T, model: CapacityModel) -> Result<Ratio<T>> {
    let sides = Sides::<T>::of(spec)?;
    let floor = sides.floor_h()?;
    if h < floor {
        return Err(Error::NotApplicable(format!("capacity needs h >= {floor}, got {h}")));
    }
    let nk = sides.largest();
    let s = sides.connector_sum().get()?;
    let squares = sides.lower().iter().fold(ck(T::zero()), |acc, &n| acc + ck(n - T::one()).pow(2));
    let base = (ck(nk) + squares.get()? + ck(nk - T::one()) * s).get()?;
    let extra = Ratio::from_integer(h - floor) * sides.width(model)?;
    checked_ratio_add(Ratio::from_integer(base), extra)
}

fn checked_ratio_add<T: Int>(a: Ratio<T>, b: Ratio<T>) -> Result<Ratio<T>> {
    // denominators are 1 or 2 here, so the naive cross-multiplication is fine
    let num = (ck(*a.numer()) * *b.denom() + ck(*b.numer()) * *a.denom()).get()?;
    let den = (ck(*a.denom()) * *b.denom()).get()?;
    Ok(Ratio::new(num, den))
}

/// Smallest `h` whose capacity reaches the point count, by direct scan.
pub fn lower_min_h<T: Int>(spec: &GridSpec, model: CapacityModel) -> Result<T> {
    let sides = Sides::<T>::of(spec)?;
    let target = Ratio::from_integer(sides.points().get()?);
    let mut h = sides.floor_h()?;
    while capacity(spec, h, model)? < target {
        h = h + T::one();
    }
    Ok(h)
}

/// `ceil(2 * N / den) + 1` with the shared bracket of both closed forms.
fn closed_form_bound<T: Int>(sides: &Sides<T>, relaxed_bracket: bool) -> Result<T> {
    let k = cast::<T>(sides.k() as i64)?;
    let sum = sides.lower().iter().fold(ck(T::zero()), |acc, &n| acc + n);
    let sum_sq = sides.lower().iter().fold(ck(T::zero()), |acc, &n| acc + ck(n).pow(2));
    let a = sides.pair_sum()?;
    let common = ck(sides.second()) * (sum - k + lit::<T>(2)) - sides.largest();
    let (bracket, den) = if relaxed_bracket {
        (sides.points() - sum_sq + sum * lit::<T>(2) + common - k + lit::<T>(2), a - T::one())
    } else {
        (sides.points() - sum_sq + sum + common, a - lit::<T>(2))
    };
    Ok((bracket * lit::<T>(2)).div_ceil(den)? + T::one())
}

/// Parity-matched two-branch bound.
pub fn lower_kd<T: Int>(spec: &GridSpec) -> Result<LowerBoundBreakdown<T>> {
    let sides = Sides::<T>::of(spec)?;
    let parity = sides.parity()?;
    Ok(LowerBoundBreakdown {
        h_l: closed_form_bound(&sides, parity == Parity::OddSum)?,
        parity,
        per_segment_capacity: sides.width(CapacityModel::Exact)?,
        relaxed: false,
    })
}

/// Uniform bound valid for every tuple; equals [`lower_kd`] for odd sums.
pub fn lower_relaxed<T: Int>(spec: &GridSpec) -> Result<LowerBoundBreakdown<T>> {
    let sides = Sides::<T>::of(spec)?;
    Ok(LowerBoundBreakdown {
        h_l: closed_form_bound(&sides, true)?,
        parity: sides.parity()?,
        per_segment_capacity: sides.width(CapacityModel::Relaxed)?,
        relaxed: true,
    })
}

/// Three-dimensional specialization, written out directly.
pub fn lower_3d<T: Int>(n1: T, n2: T, n3: T) -> Result<T> {
    let mut v = [n1, n2, n3];
    v.sort();
    let [n1, n2, n3] = v;
    if n1 < lit(2) {
        return Err(Error::NotApplicable(format!("sides must be >= 2, got ({n1}, {n2}, {n3})")));
    }
    let l = |x: i64| lit::<T>(x);
    let prod = ck(n1) * n2 * n3;
    let h = if (n2 + n3).is_even() {
        let num = (prod - ck(n1).pow(2) + ck(n1) * n2 + n1 - n2 - n3) * l(2);
        num.div_ceil(n3 + n2 - l(2))?
    } else {
        let num = (prod - ck(n1).pow(2) + ck(n1) * n2 + ck(n1) * l(2) - n2 - n3 - T::one()) * l(2);
        num.div_ceil(n3 + n2 - T::one())?
    };
    (ck(h) + T::one()).get()
}

/// Cube specialization `n^2 + n + 1`.
pub fn lower_cube<T: Int>(n: T) -> Result<T> {
    (ck(n).pow(2) + n + T::one()).get()
}
