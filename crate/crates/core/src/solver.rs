//! Exhaustive search for the fewest segments on tiny grids, with turning
//! points restricted to lattice points.
//!
//! Iterative deepening on the segment count. Every segment joins two lattice
//! points in any direction and covers all lattice points on it; partial
//! paths are extended only while no point is revisited and no segment
//! touches a non-adjacent one. The first segment is taken up to the
//! symmetries of the box (axis reflections and permutations of equal sides),
//! and the canonical first moves are searched in parallel.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{lattice_points, primitive_direction, segments_touch};
use crate::grid::{GridPoint, GridSpec, Segment};
use crate::path::CoveringPath;

pub const MAX_POINTS: i64 = 12;
pub const MODEL: &str = "lattice-turn restricted";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub optimal_count: usize,
    pub witness: CoveringPath,
    pub nodes_explored: u64,
    pub model: &'static str,
}

struct Board {
    points: Vec<Vec<i64>>,
    /// `line[i][j]`: bitmask of lattice points on the segment `i -> j`.
    line: Vec<Vec<u64>>,
    dir: Vec<Vec<Vec<i64>>>,
    max_gain: u32,
    full: u64,
}

impl Board {
    fn new(spec: &GridSpec) -> Self {
        let points: Vec<Vec<i64>> = spec.points().map(|p| p.0).collect();
        let n = points.len();
        let mut line = vec![vec![0u64; n]; n];
        let mut dir = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let seg =
                    Segment::new(GridPoint(points[i].clone()), GridPoint(points[j].clone())).expect("distinct points");
                line[i][j] = lattice_points(&seg)
                    .map(|p| 1u64 << spec.index_of(p.coords()).expect("inside the box"))
                    .fold(0, |a, b| a | b);
                dir[i][j] = primitive_direction(&points[i], &points[j]);
            }
        }
        let max_gain = line.iter().flatten().map(|m| m.count_ones().saturating_sub(1)).max().unwrap_or(0);
        Board { points, line, dir, max_gain, full: (1u64 << n) - 1 }
    }

    /// Whether `from -> to` may extend a path ending in `trail` (vertex indices).
    fn can_extend(&self, trail: &[usize], covered: u64, to: usize) -> bool {
        let from = *trail.last().unwrap();
        if to == from || self.line[from][to] & !(1 << from) & covered != 0 {
            return false;
        }
        if trail.len() >= 2 && self.dir[trail[trail.len() - 2]][from] == self.dir[from][to] {
            return false;
        }
        let (p, q) = (&self.points[from], &self.points[to]);
        trail.windows(2).rev().skip(1).all(|w| !segments_touch(&self.points[w[0]], &self.points[w[1]], p, q))
    }

    fn dfs(&self, trail: &mut Vec<usize>, covered: u64, left: usize, nodes: &mut u64) -> bool {
        *nodes += 1;
        if covered == self.full {
            return true;
        }
        let missing = (self.full & !covered).count_ones();
        if left == 0 || missing > left as u32 * self.max_gain {
            return false;
        }
        let from = *trail.last().unwrap();
        for to in 0..self.points.len() {
            if !self.can_extend(trail, covered, to) {
                continue;
            }
            trail.push(to);
            if self.dfs(trail, covered | self.line[from][to], left - 1, nodes) {
                return true;
            }
            trail.pop();
        }
        false
    }
}

/// Box symmetries as `(axis permutation, reflected axes)`.
fn symmetries(dims: &[i64]) -> Vec<(Vec<usize>, Vec<bool>)> {
    use itertools::Itertools;
    let k = dims.len();
    let perms: Vec<Vec<usize>> =
        (0..k).permutations(k).filter(|p| p.iter().enumerate().all(|(i, &j)| dims[i] == dims[j])).collect();
    let flips: Vec<Vec<bool>> = (0..1usize << k).map(|m| (0..k).map(|i| m >> i & 1 == 1).collect()).collect();
    perms.into_iter().cartesian_product(flips).collect()
}

fn apply(sym: &(Vec<usize>, Vec<bool>), dims: &[i64], x: &[i64]) -> Vec<i64> {
    sym.0.iter().enumerate().map(|(i, &j)| if sym.1[i] { dims[i] - 1 - x[j] } else { x[j] }).collect()
}

fn canonical_first_moves(board: &Board, dims: &[i64]) -> Vec<(usize, usize)> {
    let syms = symmetries(dims);
    let n = board.points.len();
    let mut moves = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if s == t {
                continue;
            }
            let (ps, pt) = (&board.points[s], &board.points[t]);
            let minimal = syms.iter().all(|g| (apply(g, dims, ps), apply(g, dims, pt)) >= (ps.clone(), pt.clone()));
            if minimal {
                moves.push((s, t));
            }
        }
    }
    moves
}

/// Minimum segment count up to `max_segments`, with a witness path.
pub fn solve_restricted(spec: &GridSpec, max_segments: usize) -> Result<SolveResult> {
    let total = spec.point_count();
    if total > MAX_POINTS {
        return Err(Error::Oversized { points: total, cap: MAX_POINTS });
    }
    let board = Board::new(spec);
    let origin = vec![GridPoint(board.points[0].clone())];
    if total == 1 {
        let witness = CoveringPath::new(spec.clone(), origin)?;
        return Ok(SolveResult { optimal_count: 0, witness, nodes_explored: 1, model: MODEL });
    }
    if max_segments == 0 {
        return Err(Error::BudgetExceeded { max_segments });
    }

    let first = canonical_first_moves(&board, spec.dims());
    let mut nodes_explored = 0u64;
    for depth in 1..=max_segments {
        let runs: Vec<(Option<Vec<usize>>, u64)> = first
            .par_iter()
            .map(|&(s, t)| {
                let mut nodes = 0;
                let mut trail = vec![s, t];
                let found = board.dfs(&mut trail, board.line[s][t], depth - 1, &mut nodes);
                (found.then_some(trail), nodes)
            })
            .collect();
        nodes_explored += runs.iter().map(|r| r.1).sum::<u64>();
        if let Some(trail) = runs.into_iter().find_map(|r| r.0) {
            let vertices = trail.iter().map(|&i| GridPoint(board.points[i].clone())).collect();
            let witness = CoveringPath::new(spec.clone(), vertices)?;
            return Ok(SolveResult { optimal_count: depth, witness, nodes_explored, model: MODEL });
        }
    }
    Err(Error::BudgetExceeded { max_segments })
}
