//! Covering paths, their JSON form, and the exact verifier.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{lattice_points, primitive_direction, segments_touch};
use crate::grid::{GridPoint, GridSpec, Segment};

/// Polyline through lattice turning points. `m + 1` vertices define `m`
/// segments; a single vertex is the 0-segment path of a one-point grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringPath {
    spec: GridSpec,
    vertices: Vec<GridPoint>,
}

/// On-disk layout: `{"dims": [..], "vertices": [[..], ..]}`.
#[derive(Serialize, Deserialize)]
struct PathFile {
    dims: Vec<i64>,
    vertices: Vec<Vec<i64>>,
}

impl CoveringPath {
    /// Rejects empty paths, arity mismatches and repeated consecutive
    /// vertices. Out-of-box vertices are accepted here and reported by
    /// [`verify_path`].
    pub fn new(spec: GridSpec, vertices: Vec<GridPoint>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Structural("path has no vertices".into()));
        }
        if let Some(v) = vertices.iter().find(|v| v.k() != spec.k()) {
            return Err(Error::Structural(format!("vertex {v} has {} coordinates, grid has {}", v.k(), spec.k())));
        }
        if let Some(w) = vertices.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::Structural(format!("vertices {w} and {} coincide at {}", w + 1, vertices[w])));
        }
        Ok(CoveringPath { spec, vertices })
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn vertices(&self) -> &[GridPoint] {
        &self.vertices
    }

    pub fn segment_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.vertices.windows(2).map(|w| Segment::new(w[0].clone(), w[1].clone()).expect("validated at construction"))
    }

    /// Merges runs of consecutive collinear, same-direction segments into
    /// single strokes.
    pub fn merged(&self) -> CoveringPath {
        let mut out: Vec<GridPoint> = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            if out.len() >= 2 {
                let a = &out[out.len() - 2].0;
                let b = &out[out.len() - 1].0;
                if primitive_direction(a, b) == primitive_direction(b, &v.0) {
                    out.pop();
                }
            }
            out.push(v.clone());
        }
        CoveringPath { spec: self.spec.clone(), vertices: out }
    }

    pub fn to_json(&self) -> String {
        let file =
            PathFile { dims: self.spec.dims().to_vec(), vertices: self.vertices.iter().map(|v| v.0.clone()).collect() };
        serde_json::to_string(&file).expect("path serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PathFile = serde_json::from_str(text)?;
        let spec = GridSpec::new(file.dims)?;
        CoveringPath::new(spec, file.vertices.into_iter().map(GridPoint).collect())
    }
}

/// Exact sum of square roots, kept as `sum_b coeff_b * sqrt(b)` over
/// square-free radicands `b`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExactLength {
    terms: BTreeMap<i64, i64>,
}

impl ExactLength {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Adds `sqrt(squared)`.
    pub fn add_sqrt(&mut self, squared: i64) {
        assert!(squared >= 0);
        if squared == 0 {
            return;
        }
        let (outside, inside) = split_square(squared);
        let slot = self.terms.entry(inside).or_insert(0);
        *slot += outside;
    }

    /// `Some(n)` when the length is the integer `n`.
    pub fn as_integer(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&1).copied(),
            _ => None,
        }
    }

    pub fn approx<F: Float>(&self) -> F {
        self.terms.iter().fold(F::zero(), |acc, (&radicand, &coeff)| {
            let c = F::from(coeff).expect("coefficient representable");
            let r = F::from(radicand).expect("radicand representable");
            acc + c * r.sqrt()
        })
    }
}

/// Serialized as `{"exact": "3 + 3√2", "approx": 7.24..}`.
impl Serialize for ExactLength {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("ExactLength", 2)?;
        st.serialize_field("exact", &self.to_string())?;
        st.serialize_field("approx", &self.approx::<f64>())?;
        st.end()
    }
}

impl fmt::Display for ExactLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&radicand, &coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match (radicand, coeff) {
                (1, c) => write!(f, "{c}")?,
                (r, 1) => write!(f, "√{r}")?,
                (r, c) => write!(f, "{c}√{r}")?,
            }
        }
        Ok(())
    }
}

/// `n = outside^2 * inside` with `inside` square-free.
fn split_square(mut n: i64) -> (i64, i64) {
    let mut outside = 1;
    let mut f = 2;
    while f * f <= n {
        while n % (f * f) == 0 {
            n /= f * f;
            outside *= f;
        }
        f += 1;
    }
    (outside, n)
}

/// Euclidean length of the path; an integer whenever all segments are axis-parallel.
pub fn path_length(path: &CoveringPath) -> ExactLength {
    let mut len = ExactLength::zero();
    for s in path.segments() {
        len.add_sqrt(s.squared_length());
    }
    len
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// Grid point on no segment.
    CoverageMiss { point: Vec<i64> },
    /// Grid point on more segments than allowed.
    Revisit { point: Vec<i64>, segments: usize },
    /// Two segments share a point they may not share.
    Crossing { first: usize, second: usize },
    /// Segment `index + 1` continues segment `index` in the same direction.
    CollinearConsecutive { index: usize },
    /// Vertex outside the bounding box.
    OutOfBox { vertex: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CoverageMiss { point } => write!(f, "coverage-miss: {}", GridPoint(point.clone())),
            Violation::Revisit { point, segments } => {
                write!(f, "revisit: {} lies on {segments} segments", GridPoint(point.clone()))
            }
            Violation::Crossing { first, second } => {
                write!(f, "crossing: segments {first} and {second} share a point")
            }
            Violation::CollinearConsecutive { index } => {
                write!(f, "collinear-consecutive: segments {index} and {}", index + 1)
            }
            Violation::OutOfBox { vertex } => write!(f, "out-of-box: vertex {vertex}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub segment_count: usize,
    pub covered_points: u64,
    pub euclidean_length: ExactLength,
    pub violations: Vec<Violation>,
}

/// Checks a path against the constrained problem: full coverage, each point
/// visited once (turning points on exactly their two segments), no shared
/// point between non-adjacent segments, adjacent segments meeting only at
/// their turning point, no straight continuation, everything inside the box.
pub fn verify_path(path: &CoveringPath) -> VerificationReport {
    let spec = path.spec();
    let verts = path.vertices();
    let mut violations = Vec::new();

    for (i, v) in verts.iter().enumerate() {
        if !spec.contains(&v.0) {
            violations.push(Violation::OutOfBox { vertex: i });
        }
    }

    // lattice coverage by enumeration; segments are only enumerated when both
    // ends are in the box, so every visited point has an index
    let boxed = violations.is_empty();
    let mut hits: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut covered_new = 0u64;
    if boxed {
        if verts.len() == 1 {
            hits.insert(verts[0].0.clone(), 1);
            covered_new = 1;
        }
        for seg in path.segments() {
            for p in lattice_points(&seg) {
                let n = hits.entry(p.0).or_insert(0);
                if *n == 0 {
                    covered_new += 1;
                }
                *n += 1;
            }
        }

        // allowed multiplicity: 2 for interior turning points, 1 otherwise
        let mut allowed: HashMap<&[i64], usize> = HashMap::new();
        for (i, v) in verts.iter().enumerate() {
            let inner = i > 0 && i + 1 < verts.len();
            *allowed.entry(&v.0).or_insert(0) += if inner { 2 } else { 1 };
        }
        for p in spec.points() {
            let n = hits.get(&p.0).copied().unwrap_or(0);
            if n == 0 {
                violations.push(Violation::CoverageMiss { point: p.0 });
                continue;
            }
            let cap = match allowed.get(p.0.as_slice()) {
                // a turning point listed twice is itself a revisit
                Some(&a) if a <= 2 => a,
                Some(_) => 0,
                None => 1,
            };
            if n > cap {
                violations.push(Violation::Revisit { point: p.0, segments: n });
            }
        }
    }

    let segs: Vec<(&[i64], &[i64])> = verts.windows(2).map(|w| (&w[0].0[..], &w[1].0[..])).collect();
    for i in 1..segs.len() {
        let d0 = primitive_direction(segs[i - 1].0, segs[i - 1].1);
        let d1 = primitive_direction(segs[i].0, segs[i].1);
        if d0 == d1 {
            violations.push(Violation::CollinearConsecutive { index: i - 1 });
        } else if d0.iter().zip(&d1).all(|(a, b)| *a == -*b) {
            // folds back over itself
            violations.push(Violation::Crossing { first: i - 1, second: i });
        }
    }
    for i in 0..segs.len() {
        for j in i + 2..segs.len() {
            let (p0, p1) = segs[i];
            let (q0, q1) = segs[j];
            if segments_touch(p0, p1, q0, q1) {
                violations.push(Violation::Crossing { first: i, second: j });
            }
        }
    }

    VerificationReport {
        valid: violations.is_empty(),
        segment_count: path.segment_count(),
        covered_points: covered_new,
        euclidean_length: path_length(path),
        violations,
    }
}
