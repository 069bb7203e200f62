//! Published values for cubic grids `n x n x ... x n`, quoted as formulas.
//!
//! These refer to the unconstrained problem (lines may leave the box and
//! cross), so they are reported alongside, never mixed into, the constrained
//! bounds of this crate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::scalar::{cast, ck, lit, Int};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiteratureBounds<T> {
    pub n: T,
    pub k: usize,
    pub cubic_upper: T,
    /// Known optimum, available for `n = 2` and `n = 3`.
    pub exact: Option<T>,
}

/// `(floor(3n^2/2) - floor((n-1)/4) + floor((n+1)/4) - floor((n+2)/4) + floor(n/4) + n - 1) * n^(k-3) - 1`.
pub fn cubic_upper<T: Int>(n: T, k: usize) -> Result<T> {
    let l = |v: i64| lit::<T>(v);
    let q = |v: T, d: i64| v.div_floor(&l(d));
    let three_halves = (ck(n).pow(2) * l(3)).div_floor(l(2))?;
    let base = ck(three_halves) - q(n - T::one(), 4) + q(n + T::one(), 4) - q(n + l(2), 4) + q(n, 4) + n - T::one();
    (base * ck(n).pow((k - 3) as u32) - T::one()).get()
}

/// `3 * 2^(k-2)` for `n = 2`, `(3^k - 1)/2` for `n = 3`.
pub fn exact_value<T: Int>(n: T, k: usize) -> Result<Option<T>> {
    if n == lit(2) {
        return Ok(Some((ck(lit::<T>(2)).pow((k - 2) as u32) * lit::<T>(3)).get()?));
    }
    if n == lit(3) {
        let v = (ck(lit::<T>(3)).pow(k as u32) - T::one()).div_exact(lit(2), "(3^k - 1)/2")?;
        return Ok(Some(v));
    }
    Ok(None)
}

/// Literature values for a cubic grid with `k >= 3` sides `>= 2`.
pub fn literature_bounds<T: Int>(spec: &GridSpec) -> Result<LiteratureBounds<T>> {
    let norm = spec.normalized();
    let k = norm.k();
    if k < 3 || norm.dims.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::NotApplicable(format!("literature values need a cubic grid with k >= 3, got {spec}")));
    }
    let n = cast::<T>(norm.dims[0])?;
    Ok(LiteratureBounds { n, k, cubic_upper: cubic_upper(n, k)?, exact: exact_value(n, k)? })
}
