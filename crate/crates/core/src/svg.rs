//! SVG 1.1 drawings of planar and three-dimensional covering paths.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::path::CoveringPath;

pub const DEFAULT_SCALE: f64 = 24.0;

const COS30: f64 = 0.866_025_403_784_438_6;

/// Maps lattice coordinates to the drawing plane. Three-dimensional grids use
/// a fixed isometric view with the last axis pointing up.
fn project(c: &[i64]) -> (f64, f64) {
    match *c {
        [x, y] => (y as f64, x as f64),
        [x, y, z] => ((x - y) as f64 * COS30, (x + y) as f64 * 0.5 - z as f64),
        _ => unreachable!("checked by caller"),
    }
}

pub fn render_svg(path: &CoveringPath, scale: f64) -> Result<String> {
    let k = path.spec().k();
    if !(2..=3).contains(&k) {
        return Err(Error::Render(format!("only 2- and 3-dimensional paths can be drawn, got k = {k}")));
    }
    if !(scale.is_finite() && scale > 0.0) {
        return Err(Error::Render(format!("scale must be positive, got {scale}")));
    }
    let points: Vec<(f64, f64)> = path.spec().points().map(|p| project(p.coords())).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &points {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let margin = 1.0;
    let to_px = |(x, y): (f64, f64)| ((x - x0 + margin) * scale, (y - y0 + margin) * scale);
    let width = (x1 - x0 + 2.0 * margin) * scale;
    let height = (y1 - y0 + 2.0 * margin) * scale;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(out, "<title>covering path, {} segments, grid {}</title>", path.segment_count(), path.spec());
    let _ = writeln!(out, r##"<g fill="#444">"##);
    let r = (scale * 0.12).max(1.0);
    for p in points {
        let (x, y) = to_px(p);
        let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="{r:.2}"/>"#);
    }
    let _ = writeln!(out, "</g>");
    let coords: Vec<String> = path
        .vertices()
        .iter()
        .map(|v| {
            let (x, y) = to_px(project(v.coords()));
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        out,
        r##"<polyline fill="none" stroke="#c0392b" stroke-width="{:.2}" stroke-linejoin="round" points="{}"/>"##,
        (scale * 0.08).max(1.0),
        coords.join(" ")
    );
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;
    use crate::spiral::gen_pure_spiral;

    #[test]
    fn square_spiral() {
        let p = gen_pure_spiral(&GridSpec::new(vec![2, 2]).unwrap()).unwrap();
        let svg = render_svg(&p, DEFAULT_SCALE).unwrap();
        assert_eq!(svg.matches("<circle").count(), 4);
        assert_eq!(svg.matches("<polyline").count(), 1);
        let pts = svg.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
        assert_eq!(pts.split(' ').count(), 4);
    }

    #[test]
    fn rejects_other_dimensions() {
        let p = gen_pure_spiral(&GridSpec::new(vec![2, 2, 2, 2]).unwrap()).unwrap();
        assert!(matches!(render_svg(&p, 24.0), Err(Error::Render(_))));
        let p = gen_pure_spiral(&GridSpec::new(vec![3]).unwrap()).unwrap();
        assert!(render_svg(&p, 24.0).is_err());
    }
}
