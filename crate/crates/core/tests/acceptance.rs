//! Acceptance suite. Each criterion prints one PASS/FAIL line.
//!
//! All checks compare integers exactly (tolerance 0); each criterion also
//! has a wall-clock budget.

use std::time::{Duration, Instant};

use itertools::Itertools;
use ninedots::bounds::{
    best_upper, jmax, jmax_scan, literature_bounds, lower_3d, lower_kd, lower_min_h, lower_relaxed, upper_3d,
    upper_3d_summation, upper_kd, CapacityModel,
};
use ninedots::report::sweep_table;
use ninedots::{
    gen_pure_spiral, gen_saving_spiral_3d, path_length, run_bounds_report, solve_restricted, verify_path, BoundsRange,
    GridSpec, ReportFormat,
};

const TOLERANCE: i64 = 0;

fn spec(d: &[i64]) -> GridSpec {
    GridSpec::new(d.to_vec()).unwrap()
}

fn same(a: i64, b: i64) -> bool {
    (a - b).abs() <= TOLERANCE
}

/// Runs `body`, prints the verdict line and fails the test on any failure.
fn criterion(id: u32, name: &str, budget: Duration, body: impl FnOnce() -> Vec<String>) {
    let start = Instant::now();
    let failures = body();
    let took = start.elapsed();
    let ok = failures.is_empty() && took < budget;
    println!(
        "{} criterion {id}: {name} ({:.2?} of {:?} budget{})",
        if ok { "PASS" } else { "FAIL" },
        took,
        budget,
        if failures.is_empty() { String::new() } else { format!(", {} failures", failures.len()) }
    );
    for f in failures.iter().take(20) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed: {failures:?}");
    assert!(took < budget, "criterion {id} took {took:?}, budget {budget:?}");
}

macro_rules! check {
    ($fails:expr, $cond:expr, $($msg:tt)+) => {
        if !$cond {
            $fails.push(format!($($msg)+));
        }
    };
}

#[test]
fn c1_worked_examples() {
    criterion(1, "worked examples reproduced", Duration::from_secs(1), || {
        let mut f = Vec::new();
        for (dims, lo, hi) in
            [(&[10i64, 13, 15][..], 147, 253), (&[10, 21, 174], 378, 419), (&[10, 16, 18, 48], 4257, 5759)]
        {
            let r = BoundsRange::new(&spec(dims)).unwrap();
            check!(
                f,
                r.h_l_relaxed.is_some_and(|l| same(l, lo)) && same(r.h_u, hi),
                "{dims:?}: {:?}..{}",
                r.h_l_relaxed,
                r.h_u
            );
            let text = run_bounds_report(dims, ReportFormat::Text).unwrap();
            check!(f, text.contains(&format!("{lo} ≤ h ≤ {hi}")), "{dims:?} text lacks interval:\n{text}");
        }
        let ex3 = upper_kd::<i64>(&spec(&[10, 16, 18, 48])).unwrap();
        check!(f, ex3.t == Some(575), "t = {:?}", ex3.t);
        check!(f, same(upper_3d::<i64>(5, 6, 9).unwrap().h_u, 59), "(5,6,9)");
        let b = upper_3d::<i64>(11, 12, 13).unwrap();
        check!(f, same(b.h_u, 251) && b.c == Some(13), "(11,12,13): {b:?}");
        f
    });
}

#[test]
fn c2_terminal_cases() {
    criterion(2, "terminal cases are exact", Duration::from_secs(1), || {
        let mut f = Vec::new();
        for (base, from, want) in [(&[3i64, 3][..], 27, 17), (&[3, 4], 56, 23), (&[2, 2, 2], 10, 15)] {
            for last in from..from + 40 {
                let mut dims = base.to_vec();
                dims.push(last);
                let r = BoundsRange::new(&spec(&dims)).unwrap();
                check!(f, r.exact == Some(want), "{dims:?}: exact {:?}, range {:?}..{}", r.exact, r.h_l, r.h_u);
            }
        }
        f
    });
}

#[test]
fn c3_closed_form_matches_summation() {
    criterion(3, "closed form equals shell summation, j_max closed form equals scan", Duration::from_secs(30), || {
        let mut f = Vec::new();
        let mut cases = 0;
        for n1 in 2..=40i64 {
            for n2 in n1..=40 {
                for n3 in n2..=40 {
                    if n1 < 2 * (n3 - n2) + 4 {
                        continue;
                    }
                    cases += 1;
                    let closed = upper_3d::<i64>(n1, n2, n3).unwrap();
                    let sum = upper_3d_summation::<i64>(n1, n2, n3).unwrap();
                    check!(f, same(closed.h_u, sum.h_u), "({n1},{n2},{n3}): {} vs {}", closed.h_u, sum.h_u);
                    let (a, b) = (jmax::<i64>(n1, n2, n3).unwrap(), jmax_scan::<i64>(n1, n2, n3).unwrap());
                    check!(f, a == b, "j_max ({n1},{n2},{n3}): {a} vs {b}");
                }
            }
        }
        check!(f, cases > 1000, "only {cases} cases in sweep");
        f
    });
}

#[test]
fn c4_lower_bound_oracle() {
    criterion(4, "lower bounds equal minimal h of the capacity model", Duration::from_secs(60), || {
        let mut f = Vec::new();
        for k in 3..=5 {
            for dims in (2..=12i64).combinations_with_replacement(k) {
                let s = spec(&dims);
                let exact = lower_kd::<i64>(&s).unwrap().h_l;
                let relaxed = lower_relaxed::<i64>(&s).unwrap().h_l;
                let scan_exact = lower_min_h::<i64>(&s, CapacityModel::Exact).unwrap();
                let scan_relaxed = lower_min_h::<i64>(&s, CapacityModel::Relaxed).unwrap();
                check!(f, same(exact, scan_exact), "{dims:?} exact {exact} vs scan {scan_exact}");
                check!(f, same(relaxed, scan_relaxed), "{dims:?} relaxed {relaxed} vs scan {scan_relaxed}");
                check!(f, relaxed <= exact, "{dims:?} relaxed {relaxed} > {exact}");
            }
        }
        f
    });
}

#[test]
fn c5_specializations() {
    criterion(5, "three-dimensional and cubic specializations", Duration::from_secs(5), || {
        let mut f = Vec::new();
        for dims in (2..=12i64).combinations_with_replacement(3) {
            let general = lower_kd::<i64>(&spec(&dims)).unwrap().h_l;
            let three = lower_3d::<i64>(dims[0], dims[1], dims[2]).unwrap();
            check!(f, general == three, "{dims:?}: {general} vs {three}");
        }
        for n in 2..=12i64 {
            let h = lower_kd::<i64>(&spec(&[n, n, n])).unwrap().h_l;
            check!(f, h == n * n + n + 1, "cube {n}: {h}");
        }
        let lit = |n| literature_bounds::<i64>(&spec(&[n, n, n])).unwrap().exact;
        check!(f, lit(2) == Some(6) && lit(3) == Some(13), "literature {:?} {:?}", lit(2), lit(3));
        f
    });
}

#[test]
fn c6_pure_spirals_are_valid() {
    criterion(6, "pure spirals verify with predicted count and length", Duration::from_secs(60), || {
        let mut f = Vec::new();
        for k in 1..=4 {
            for dims in (1..=6i64).combinations_with_replacement(k) {
                // also exercise an unsorted axis order
                for given in [dims.clone(), dims.iter().rev().copied().collect()] {
                    let s = spec(&given);
                    let path = gen_pure_spiral(&s).unwrap();
                    let r = verify_path(&path);
                    check!(f, r.valid, "{given:?}: {:?}", r.violations);
                    let norm = s.normalized().dims;
                    let want = match norm.len() {
                        0 => 0,
                        1 => 1,
                        m => 2 * norm[..m - 1].iter().product::<i64>() - 1,
                    };
                    check!(f, same(path.segment_count() as i64, want), "{given:?}: {} segments", path.segment_count());
                    let len = path_length(&path).as_integer();
                    check!(f, len == Some(s.point_count() - 1), "{given:?}: length {len:?}");
                    check!(f, r.covered_points as i64 == s.point_count(), "{given:?}: covered {}", r.covered_points);
                }
            }
        }
        f
    });
}

#[test]
fn c7_saving_spirals_are_valid() {
    criterion(7, "savings spirals verify and meet the three-dimensional bound", Duration::from_secs(120), || {
        let mut f = Vec::new();
        let mut specs: Vec<Vec<i64>> = (2..=8i64).combinations_with_replacement(3).collect();
        specs.push(vec![11, 12, 13]);
        for dims in specs {
            let path = match gen_saving_spiral_3d(&spec(&dims)) {
                Ok(p) => p,
                Err(e) => {
                    f.push(format!("{dims:?}: {e}"));
                    continue;
                }
            };
            let r = verify_path(&path);
            let h_u = upper_3d::<i64>(dims[0], dims[1], dims[2]).unwrap().h_u;
            check!(f, r.valid, "{dims:?}: {:?}", r.violations);
            check!(f, same(path.segment_count() as i64, h_u), "{dims:?}: {} vs {h_u}", path.segment_count());
        }
        let big = gen_saving_spiral_3d(&spec(&[11, 12, 13])).unwrap();
        check!(f, big.segment_count() == 251, "(11,12,13): {}", big.segment_count());
        f
    });
}

#[test]
fn c8_solver_sandwich() {
    criterion(8, "exhaustive optimum lies below the spiral bound", Duration::from_secs(600), || {
        let mut f = Vec::new();
        check!(f, solve_restricted(&spec(&[2, 2]), 3).unwrap().optimal_count == 3, "(2,2)");
        check!(f, solve_restricted(&spec(&[3, 3]), 5).unwrap().optimal_count == 5, "(3,3)");
        let mut specs = Vec::new();
        for k in 1..=3 {
            for dims in (2..=12i64).combinations_with_replacement(k) {
                if dims.iter().product::<i64>() <= 12 {
                    specs.push(dims);
                }
            }
        }
        for dims in specs {
            let s = spec(&dims);
            let h_u = best_upper::<i64>(&s).unwrap().h_u;
            let r = match solve_restricted(&s, h_u as usize) {
                Ok(r) => r,
                Err(e) => {
                    f.push(format!("{dims:?}: {e}"));
                    continue;
                }
            };
            let opt = r.optimal_count as i64;
            check!(f, opt <= h_u, "{dims:?}: opt {opt} > h_u {h_u}");
            check!(
                f,
                verify_path(&r.witness).valid && r.witness.segment_count() == r.optimal_count,
                "{dims:?} witness"
            );
            let lower = if s.normalized().k() >= 3 { Some(lower_kd::<i64>(&s).unwrap().h_l) } else { None };
            let tag = match lower {
                Some(l) if opt < l => format!("DISCREPANCY opt {opt} < h_l {l}"),
                Some(l) => format!("h_l {l} ≤ opt"),
                None => "no lower bound".to_string(),
            };
            println!("    solver {dims:?}: opt {opt}, h_u {h_u}, {tag}, {} nodes", r.nodes_explored);
        }
        f
    });
}

#[test]
fn c9_determinism() {
    criterion(9, "sweep CSV and path JSON are byte-identical across runs", Duration::from_secs(60), || {
        let mut f = Vec::new();
        for k in 3..=4 {
            let (a, b) = (sweep_table(k, 2, 7).unwrap(), sweep_table(k, 2, 7).unwrap());
            check!(f, a == b, "sweep k={k} differs");
        }
        for dims in [&[11i64, 12, 13][..], &[4, 3, 5], &[2, 3, 2, 3]] {
            let s = spec(dims);
            let (a, b) = (gen_pure_spiral(&s).unwrap().to_json(), gen_pure_spiral(&s).unwrap().to_json());
            check!(f, a == b, "pure {dims:?}");
            if dims.len() == 3 {
                let (a, b) = (gen_saving_spiral_3d(&s).unwrap().to_json(), gen_saving_spiral_3d(&s).unwrap().to_json());
                check!(f, a == b, "saving {dims:?}");
            }
        }
        f
    });
}
