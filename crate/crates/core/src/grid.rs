//! Grid, point and segment types.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Axis-aligned lattice grid `{0..n_1-1} x ... x {0..n_k-1}` with unit spacing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct GridSpec {
    dims: Vec<i64>,
}

impl GridSpec {
    pub fn new(dims: Vec<i64>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidSpec("at least one dimension is required".into()));
        }
        if let Some(bad) = dims.iter().find(|&&n| n < 1) {
            return Err(Error::InvalidSpec(format!("dimension {bad} is not a positive integer")));
        }
        dims.iter()
            .try_fold(1i64, |acc, &n| acc.checked_mul(n))
            .ok_or_else(|| Error::InvalidSpec("point count overflows 64 bits".into()))?;
        Ok(GridSpec { dims })
    }

    pub fn dims(&self) -> &[i64] {
        &self.dims
    }

    pub fn k(&self) -> usize {
        self.dims.len()
    }

    /// Total number of lattice points. Checked at construction.
    pub fn point_count(&self) -> i64 {
        self.dims.iter().product()
    }

    pub fn contains(&self, coords: &[i64]) -> bool {
        coords.len() == self.dims.len() && coords.iter().zip(&self.dims).all(|(&c, &n)| (0..n).contains(&c))
    }

    /// Row-major index of an in-box point.
    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        if !self.contains(coords) {
            return None;
        }
        let mut idx = 0i64;
        for (&c, &n) in coords.iter().zip(&self.dims) {
            idx = idx * n + c;
        }
        Some(idx as usize)
    }

    /// All lattice points in row-major order.
    pub fn points(&self) -> GridPoints<'_> {
        GridPoints { dims: &self.dims, next: Some(vec![0; self.dims.len()]) }
    }

    /// Sorted, size-1-collapsed view of this grid.
    pub fn normalized(&self) -> NormalizedSpec {
        let mut axes: Vec<usize> = (0..self.dims.len()).filter(|&i| self.dims[i] > 1).collect();
        // stable: equal sides keep their original axis order
        axes.sort_by_key(|&i| self.dims[i]);
        NormalizedSpec { dims: axes.iter().map(|&i| self.dims[i]).collect(), axes, original_k: self.dims.len() }
    }
}

impl TryFrom<Vec<i64>> for GridSpec {
    type Error = Error;
    fn try_from(dims: Vec<i64>) -> Result<Self> {
        GridSpec::new(dims)
    }
}

impl From<GridSpec> for Vec<i64> {
    fn from(spec: GridSpec) -> Self {
        spec.dims
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_dims(&self.dims))
    }
}

/// `2x3x4` rendering used in reports and CSV rows.
pub fn join_dims(dims: &[i64]) -> String {
    dims.iter().map(i64::to_string).collect::<Vec<_>>().join("x")
}

pub struct GridPoints<'a> {
    dims: &'a [i64],
    next: Option<Vec<i64>>,
}

impl Iterator for GridPoints<'_> {
    type Item = GridPoint;

    fn next(&mut self) -> Option<GridPoint> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut axis = succ.len();
        loop {
            if axis == 0 {
                break;
            }
            axis -= 1;
            succ[axis] += 1;
            if succ[axis] < self.dims[axis] {
                self.next = Some(succ);
                break;
            }
            succ[axis] = 0;
        }
        Some(GridPoint(cur))
    }
}

/// A grid sorted ascending with size-1 axes dropped. `axes[i]` is the original
/// axis carried by normalized axis `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedSpec {
    pub dims: Vec<i64>,
    pub axes: Vec<usize>,
    pub original_k: usize,
}

impl NormalizedSpec {
    pub fn k(&self) -> usize {
        self.dims.len()
    }

    /// Maps normalized coordinates back into the original axis order;
    /// collapsed axes get coordinate 0.
    pub fn lift(&self, coords: &[i64]) -> GridPoint {
        debug_assert_eq!(coords.len(), self.dims.len());
        let mut out = vec![0; self.original_k];
        for (&axis, &c) in self.axes.iter().zip(coords) {
            out[axis] = c;
        }
        GridPoint(out)
    }

    /// Inverse of [`lift`](Self::lift) for points of the original grid.
    pub fn project(&self, point: &GridPoint) -> Vec<i64> {
        self.axes.iter().map(|&axis| point.0[axis]).collect()
    }

    pub fn spec(&self) -> Result<GridSpec> {
        GridSpec::new(self.dims.clone())
    }
}

/// Integer lattice point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GridPoint(pub Vec<i64>);

impl GridPoint {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }
}

impl From<Vec<i64>> for GridPoint {
    fn from(v: Vec<i64>) -> Self {
        GridPoint(v)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Closed straight segment between two distinct lattice points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    a: GridPoint,
    b: GridPoint,
}

impl Segment {
    pub fn new(a: GridPoint, b: GridPoint) -> Result<Self> {
        if a.k() != b.k() {
            return Err(Error::Structural(format!("endpoints {a} and {b} differ in dimension")));
        }
        if a == b {
            return Err(Error::Structural(format!("degenerate segment at {a}")));
        }
        Ok(Segment { a, b })
    }

    pub fn a(&self) -> &GridPoint {
        &self.a
    }

    pub fn b(&self) -> &GridPoint {
        &self.b
    }

    pub fn delta(&self) -> Vec<i64> {
        self.b.0.iter().zip(&self.a.0).map(|(b, a)| b - a).collect()
    }

    pub fn squared_length(&self) -> i64 {
        self.delta().iter().map(|d| d * d).sum()
    }
}
