//! Rectangular spiral covering paths.
//!
//! Both constructions are built as a sequence of unit steps through every
//! lattice point (a Hamiltonian path of the grid graph) and then compressed
//! into turning points. A unit-step path that visits each point exactly once
//! is automatically a legal covering path: axis-parallel segments with
//! lattice endpoints can only meet at lattice points, so any forbidden
//! contact would show up as a repeated point.
//!
//! Conventions: the path starts at the origin corner, the first segment runs
//! along the longest axis, in-plane turns are counterclockwise and every
//! other plane (or block) is traversed in reverse.
//!
//! The savings construction for three dimensions (`n1 <= n2 <= n3`) orders
//! the `n1` planes from both faces inwards, `0, n1-1, n1-2, 1, 2, n1-3, ...`.
//! Let `q_1, q_2, ...` be the cells of the planar spiral counted from its
//! end. The two planes at depth `t` are joined through `q_{t+1}` by a
//! connector along the `n1` axis; this connector covers `q_{t+1}` in every
//! deeper plane, so a plane at depth `t` only walks the spiral up to
//! `q_{t+1}` and skips every spiral segment lying inside `q_1..q_t`. The
//! planes joined at their shared corner are adjacent, so those connectors
//! cover nothing else.

use serde::{Deserialize, Serialize};

use crate::bounds::upper_3d;
use crate::error::{Error, Result};
use crate::grid::{GridPoint, GridSpec, NormalizedSpec};
use crate::path::CoveringPath;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpiralMode {
    Pure,
    Saving3d,
}

/// What a construction is expected to produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpiralPlan {
    pub mode: SpiralMode,
    pub spec: GridSpec,
    pub predicted_count: i64,
}

impl SpiralPlan {
    pub fn new(spec: &GridSpec, mode: SpiralMode) -> Result<Self> {
        let norm = spec.normalized();
        let predicted_count = match mode {
            SpiralMode::Pure => pure_count(&norm.dims)?,
            SpiralMode::Saving3d => {
                let [n1, n2, n3] = three_sides(&norm)?;
                upper_3d::<i64>(n1, n2, n3)?.h_u
            }
        };
        Ok(SpiralPlan { mode, spec: spec.clone(), predicted_count })
    }

    pub fn generate(&self) -> Result<CoveringPath> {
        match self.mode {
            SpiralMode::Pure => gen_pure_spiral(&self.spec),
            SpiralMode::Saving3d => gen_saving_spiral_3d(&self.spec),
        }
    }
}

/// `0`, `1`, `2*n1 - 1`, or `2 * prod(n_1..n_{k-1}) - 1` segments.
fn pure_count(dims: &[i64]) -> Result<i64> {
    Ok(match dims.len() {
        0 => 0,
        1 => 1,
        k => {
            let prod = dims[..k - 1].iter().try_fold(2i64, |acc, &n| acc.checked_mul(n)).ok_or(Error::Overflow)?;
            prod - 1
        }
    })
}

fn three_sides(norm: &NormalizedSpec) -> Result<[i64; 3]> {
    match norm.dims[..] {
        [a, b, c] => Ok([a, b, c]),
        _ => Err(Error::Unsupported(format!("savings spiral needs exactly three sides >= 2, got {:?}", norm.dims))),
    }
}

/// Inward spiral over a `rows x cols` rectangle (`rows <= cols`), first run
/// along the columns.
fn plane_spiral(rows: i64, cols: i64) -> Vec<[i64; 2]> {
    let mut cells = Vec::with_capacity((rows * cols) as usize);
    let (mut top, mut bottom, mut left, mut right) = (0i64, rows - 1, 0i64, cols - 1);
    while top <= bottom && left <= right {
        for z in left..=right {
            cells.push([top, z]);
        }
        top += 1;
        for y in top..=bottom {
            cells.push([y, right]);
        }
        right -= 1;
        if top <= bottom {
            for z in (left..=right).rev() {
                cells.push([bottom, z]);
            }
            bottom -= 1;
        }
        if left <= right {
            for y in (top..=bottom).rev() {
                cells.push([y, left]);
            }
            left += 1;
        }
    }
    cells
}

/// Boustrophedon stacking of the lower-dimensional spiral along the smallest axis.
fn pure_cells(dims: &[i64]) -> Vec<Vec<i64>> {
    match dims.len() {
        0 => vec![vec![]],
        1 => (0..dims[0]).map(|i| vec![i]).collect(),
        2 => plane_spiral(dims[0], dims[1]).into_iter().map(|c| c.to_vec()).collect(),
        _ => {
            let inner = pure_cells(&dims[1..]);
            let mut out = Vec::with_capacity(inner.len() * dims[0] as usize);
            for layer in 0..dims[0] {
                let block: Box<dyn Iterator<Item = &Vec<i64>>> =
                    if layer % 2 == 0 { Box::new(inner.iter()) } else { Box::new(inner.iter().rev()) };
                for cell in block {
                    let mut c = Vec::with_capacity(dims.len());
                    c.push(layer);
                    c.extend_from_slice(cell);
                    out.push(c);
                }
            }
            out
        }
    }
}

fn saving_cells(n1: i64, n2: i64, n3: i64) -> Vec<Vec<i64>> {
    let plane = plane_spiral(n2, n3);
    let len = plane.len();
    let mut out = Vec::with_capacity(len * n1 as usize);
    let at = |x: i64, c: [i64; 2]| vec![x, c[0], c[1]];

    for depth in 0..(n1 as usize).div_ceil(2) {
        let near = if depth % 2 == 0 { depth as i64 } else { n1 - 1 - depth as i64 };
        let far = n1 - 1 - near;
        // depth-t planes skip q_1..q_t and stop at q_{t+1}
        let walk = &plane[..len - depth];
        out.extend(walk.iter().map(|&c| at(near, c)));
        if near == far {
            break;
        }
        let hinge = walk[walk.len() - 1];
        let step = if far > near { 1 } else { -1 };
        let mut x = near + step;
        while x != far {
            out.push(at(x, hinge));
            x += step;
        }
        out.extend(walk.iter().rev().map(|&c| at(far, c)));
    }
    out
}

/// Checks that consecutive cells are unit steps and every grid point appears
/// exactly once.
fn check_hamiltonian(cells: &[Vec<i64>], dims: &[i64]) -> Result<()> {
    let total: i64 = dims.iter().product();
    if cells.len() as i64 != total {
        return Err(Error::Construction(format!("{} cells for {total} points", cells.len())));
    }
    let mut seen = vec![false; total as usize];
    for (i, c) in cells.iter().enumerate() {
        let mut idx = 0i64;
        for (&v, &n) in c.iter().zip(dims) {
            if !(0..n).contains(&v) {
                return Err(Error::Construction(format!("cell {c:?} outside the grid")));
            }
            idx = idx * n + v;
        }
        if std::mem::replace(&mut seen[idx as usize], true) {
            return Err(Error::Construction(format!("cell {c:?} visited twice")));
        }
        if i > 0 {
            let dist: i64 = c.iter().zip(&cells[i - 1]).map(|(a, b)| (a - b).abs()).sum();
            if dist != 1 {
                return Err(Error::Construction(format!("jump between {:?} and {c:?}", cells[i - 1])));
            }
        }
    }
    Ok(())
}

/// Keeps the first and last cell plus every cell where the direction changes.
fn turning_points(cells: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out = vec![cells[0].clone()];
    let dir = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| y - x).collect() };
    for i in 1..cells.len() - 1 {
        if dir(&cells[i - 1], &cells[i]) != dir(&cells[i], &cells[i + 1]) {
            out.push(cells[i].clone());
        }
    }
    if cells.len() > 1 {
        out.push(cells[cells.len() - 1].clone());
    }
    out
}

fn finish(spec: &GridSpec, norm: &NormalizedSpec, cells: Vec<Vec<i64>>, expect: i64) -> Result<CoveringPath> {
    check_hamiltonian(&cells, &norm.dims)?;
    let vertices: Vec<GridPoint> = turning_points(&cells).iter().map(|c| norm.lift(c)).collect();
    let path = CoveringPath::new(spec.clone(), vertices)?;
    if path.segment_count() as i64 != expect {
        return Err(Error::Construction(format!(
            "{} segments generated, {expect} predicted for {spec}",
            path.segment_count()
        )));
    }
    Ok(path)
}

/// Pure plane-by-plane spiral for any dimension. Coordinates follow the
/// axis order of `spec`; unit axes stay at 0.
pub fn gen_pure_spiral(spec: &GridSpec) -> Result<CoveringPath> {
    let norm = spec.normalized();
    let expect = pure_count(&norm.dims)?;
    finish(spec, &norm, pure_cells(&norm.dims), expect)
}

/// Three-dimensional spiral whose segment count equals [`upper_3d`]. Falls
/// back to the pure spiral when there are no savings (`c = 1`).
pub fn gen_saving_spiral_3d(spec: &GridSpec) -> Result<CoveringPath> {
    let norm = spec.normalized();
    let [n1, n2, n3] = three_sides(&norm)?;
    let bound = upper_3d::<i64>(n1, n2, n3)?;
    if bound.c == Some(1) {
        return gen_pure_spiral(spec);
    }
    finish(spec, &norm, saving_cells(n1, n2, n3), bound.h_u)
}
