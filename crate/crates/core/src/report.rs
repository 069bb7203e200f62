//! Bounds reports and sweep tables.

use std::fmt::Write;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{best_upper, literature_bounds, lower_kd, lower_relaxed};
use crate::error::{Error, Result};
use crate::grid::{join_dims, GridSpec};
use crate::{Literature, LowerBound, UpperBound};

pub const CSV_HEADER: &str = "dims,h_l_eq9,h_l_eq12,h_u,c,jmax,exact";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
    Csv,
}

/// The interval `[h_l, h_u]` for one grid, with derivation traces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsRange {
    pub given: Vec<i64>,
    pub normalized: Vec<i64>,
    /// Best lower bound, the larger of the parity-matched and relaxed ones.
    pub h_l: Option<i64>,
    pub h_l_parity: Option<i64>,
    pub h_l_relaxed: Option<i64>,
    pub h_u: i64,
    pub upper: UpperBound,
    pub lower: Option<LowerBound>,
    pub relaxed: Option<LowerBound>,
    pub exact: Option<i64>,
    /// Values for the unconstrained problem on cubic grids, shown for reference only.
    pub literature: Option<Literature>,
    pub notes: Vec<String>,
}

impl BoundsRange {
    pub fn new(spec: &GridSpec) -> Result<Self> {
        let norm = spec.normalized();
        let upper = best_upper::<i64>(spec)?;
        let h_u = upper.h_u;
        let mut notes = Vec::new();
        let (mut lower, mut relaxed) = (None, None);
        let mut h_l = None;
        match norm.k() {
            0 | 1 => {
                h_l = Some(h_u);
                notes.push("degenerate grid: a single line (or none) is optimal".to_string());
            }
            2 => notes.push("no lower bound is available for planar grids".to_string()),
            _ => {
                let parity = lower_kd::<i64>(spec)?;
                let uniform = lower_relaxed::<i64>(spec)?;
                h_l = Some(parity.h_l.max(uniform.h_l));
                lower = Some(parity);
                relaxed = Some(uniform);
            }
        }
        let literature = match literature_bounds::<i64>(spec) {
            Ok(lit) => {
                notes.push("literature values solve the unconstrained problem and are not compared".to_string());
                Some(lit)
            }
            Err(Error::NotApplicable(_)) => None,
            Err(e) => return Err(e),
        };
        if let Some(l) = h_l {
            if l > h_u {
                notes.push(format!("empty interval: lower bound {l} exceeds upper bound {h_u}"));
            }
        }
        Ok(BoundsRange {
            given: spec.dims().to_vec(),
            normalized: norm.dims.clone(),
            h_l,
            h_l_parity: lower.as_ref().map(|b| b.h_l),
            h_l_relaxed: relaxed.as_ref().map(|b| b.h_l),
            h_u,
            upper,
            lower,
            relaxed,
            exact: h_l.filter(|&l| l == h_u),
            literature,
            notes,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "grid: {} (normalized {})", join_dims(&self.given), join_dims(&self.normalized));
        match self.h_l {
            Some(l) => {
                let _ = writeln!(out, "range: {l} ≤ h ≤ {}", self.h_u);
            }
            None => {
                let _ = writeln!(out, "range: h ≤ {}", self.h_u);
            }
        }
        if let Some(h) = self.exact {
            let _ = writeln!(out, "exact: h = {h}");
        }
        let u = &self.upper;
        let _ = write!(out, "upper: h_u = {} via {}", self.h_u, serde_plain(&u.method));
        for (name, v) in [("c", u.c), ("j_max", u.j_max), ("b", u.b_term), ("t", u.t)] {
            if let Some(v) = v {
                let _ = write!(out, ", {name} = {v}");
            }
        }
        if let Some(b) = u.branch {
            let _ = write!(out, ", branch = {}", serde_plain(&b));
        }
        out.push('\n');
        for (label, b) in [("lower", &self.lower), ("relaxed", &self.relaxed)] {
            if let Some(b) = b {
                let _ = writeln!(
                    out,
                    "{label}: {} ≤ h ≤ {} ({}, per-segment capacity {})",
                    b.h_l,
                    self.h_u,
                    serde_plain(&b.parity),
                    b.per_segment_capacity
                );
            }
        }
        if let Some(lit) = &self.literature {
            let _ = write!(
                out,
                "literature (unconstrained, n = {}, k = {}): cubic upper {}",
                lit.n, lit.k, lit.cubic_upper
            );
            if let Some(e) = lit.exact {
                let _ = write!(out, ", exact {e}");
            }
            out.push('\n');
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        out
    }

    pub fn csv_row(&self) -> String {
        let opt = |v: Option<i64>| v.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{}",
            join_dims(&self.normalized),
            opt(self.h_l_parity),
            opt(self.h_l_relaxed),
            self.h_u,
            opt(self.upper.c),
            opt(self.upper.j_max),
            opt(self.exact)
        )
    }
}

fn serde_plain<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default()
}

pub fn run_bounds_report(dims: &[i64], format: ReportFormat) -> Result<String> {
    let range = BoundsRange::new(&GridSpec::new(dims.to_vec())?)?;
    Ok(match format {
        ReportFormat::Text => range.to_text(),
        ReportFormat::Json => serde_json::to_string_pretty(&range)? + "\n",
        ReportFormat::Csv => format!("{CSV_HEADER}\n{}\n", range.csv_row()),
    })
}

/// One row per sorted `k`-tuple with sides in `min..=max`, lexicographic.
pub fn sweep_table(k: usize, min: i64, max: i64) -> Result<String> {
    if !(3..=5).contains(&k) {
        return Err(Error::InvalidSpec(format!("sweep needs 3 <= k <= 5, got {k}")));
    }
    if min < 2 || min > max {
        return Err(Error::InvalidSpec(format!("sweep needs 2 <= min <= max, got {min}..{max}")));
    }
    let tuples: Vec<Vec<i64>> = (min..=max).combinations_with_replacement(k).collect();
    let rows = tuples
        .par_iter()
        .map(|dims| Ok(BoundsRange::new(&GridSpec::new(dims.clone())?)?.csv_row()))
        .collect::<Result<Vec<String>>>()?;
    let mut out = String::with_capacity(rows.len() * 32);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn range(d: &[i64]) -> BoundsRange {
        BoundsRange::new(&GridSpec::new(d.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn worked_examples() {
        let r = range(&[15, 10, 13]);
        assert_eq!((r.h_l_relaxed, r.h_l_parity, r.h_u), (Some(147), Some(152), 253));
        assert_eq!(r.normalized, vec![10, 13, 15]);
        let text = r.to_text();
        assert!(text.contains("147 ≤ h ≤ 253"), "{text}");
        assert!(text.contains("range: 152 ≤ h ≤ 253"), "{text}");
        assert_eq!(range(&[3, 3, 27]).exact, Some(17));
        assert_eq!(range(&[2, 2, 2, 10]).exact, Some(15));
    }

    #[test]
    fn planar_has_no_lower_bound() {
        let r = range(&[5, 5]);
        assert_eq!((r.h_l, r.h_u, r.exact), (None, 9, None));
        assert!(r.to_text().contains("no lower bound"));
    }

    #[test]
    fn json_round_trip() {
        for d in [&[10i64, 13, 15][..], &[3, 3, 3], &[4, 4], &[1, 5], &[10, 16, 18, 48]] {
            let r = range(d);
            let back: BoundsRange = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
            assert_eq!(back, r);
        }
    }

    #[test]
    fn sweep_rows() {
        let csv = sweep_table(3, 2, 3).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(
            lines[1..].iter().map(|l| l.split(',').next().unwrap()).collect::<Vec<_>>(),
            ["2x2x2", "2x2x3", "2x3x3", "3x3x3"]
        );
        assert_eq!(lines[1], "2x2x2,7,6,7,1,,7");
        assert_eq!(lines[4], "3x3x3,13,12,16,2,,");
        assert!(sweep_table(2, 2, 3).is_err());
        assert!(sweep_table(3, 4, 3).is_err());
    }
}
