//! Shadows: images of a polytope under orthogonal projection to a plane.
//!
//! The generic shadow of a polytope is a convex polygon whose vertices are
//! projections of polytope vertices. [`shadow`] computes that polygon for
//! one frame; [`estimate_shadow_size`] averages the vertex count over
//! many independently sampled frames, in parallel, with one dedicated
//! random substream per trial so results do not depend on thread count.
//!
//! Zonotopes get a separate, exact path: the shadow of a zonotope is a 2D
//! zonotope whose vertex count is twice the number of parallel classes
//! for almost every frame, and whose polygon can be built directly from
//! the projected generators without any hull computation.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geom::{self, Frame2, Point2};
use crate::hull;
use crate::polytope::Zonotope;
use crate::rng::Rng;
use crate::tol;

/// The shadow polygon of a vertex list under one frame.
#[derive(Debug, Clone)]
pub struct ShadowPolygon {
    /// Hull points in counterclockwise order starting at the
    /// lexicographic minimum.
    pub points: Vec<Point2>,
    /// For each hull point, the index of an original vertex projecting
    /// there (the smallest such index if several coincide).
    pub vertex_indices: Vec<usize>,
    /// True when distinct original vertices collapsed onto one hull
    /// point, i.e. the frame is non-generic for this polytope.
    pub preimage_tie: bool,
}

impl ShadowPolygon {
    /// Number of shadow vertices.
    pub fn size(&self) -> usize {
        self.points.len()
    }

    /// A shadow is degenerate when it is not a full-dimensional polygon
    /// with uniquely projected vertices.
    pub fn is_degenerate(&self) -> bool {
        self.points.len() < 3 || self.preimage_tie
    }
}

/// Project every vertex and take the planar hull.
pub fn shadow(vertices: &[Vec<f64>], frame: &Frame2) -> Result<ShadowPolygon> {
    if vertices.is_empty() {
        return Err(Error::EmptyInput("vertex list".into()));
    }
    let projected: Vec<Point2> = vertices
        .iter()
        .map(|v| geom::project(frame, v))
        .collect::<Result<_>>()?;
    let info = hull::hull2d_full(&projected, tol::DEDUP_TOL)?;
    let points = info.indices.iter().map(|&i| projected[i]).collect();
    Ok(ShadowPolygon {
        points,
        vertex_indices: info.indices,
        preimage_tie: info.preimage_tie,
    })
}

/// Indices of the vertices whose projections form the upper chain of the
/// shadow, walked from the lexicographic minimum to the lexicographic
/// maximum. Errors when the shadow has fewer than three hull points.
pub fn shadow_path(vertices: &[Vec<f64>], frame: &Frame2) -> Result<Vec<usize>> {
    let poly = shadow(vertices, frame)?;
    if poly.points.len() < 3 {
        return Err(Error::DegenerateShadow(format!(
            "hull has {} points; a path needs a full polygon",
            poly.points.len()
        )));
    }
    // CCW from lexmin: [lexmin, ...lower chain..., lexmax, ...upper chain...].
    // The upper chain from lexmin to lexmax is the reversed tail after
    // lexmax, bracketed by the two extremes.
    let pos = (0..poly.points.len())
        .max_by(|&a, &b| {
            let pa = poly.points[a];
            let pb = poly.points[b];
            (pa.x, pa.y).partial_cmp(&(pb.x, pb.y)).unwrap()
        })
        .expect("nonempty hull");
    let mut path = Vec::with_capacity(poly.points.len() - pos + 1);
    path.push(poly.vertex_indices[0]);
    for k in ((pos + 1)..poly.points.len()).rev() {
        path.push(poly.vertex_indices[k]);
    }
    path.push(poly.vertex_indices[pos]);
    Ok(path)
}

/// The shadow of a zonotope, built directly from projected generators.
#[derive(Debug, Clone)]
pub struct ZonotopeShadow {
    /// Polygon vertices in counterclockwise order starting at the
    /// lexicographic minimum.
    pub points: Vec<Point2>,
    /// True when a parallel class projected to (near) zero length or two
    /// classes became parallel under projection — the measure-zero frames
    /// where the vertex count drops below its generic value.
    pub degenerate: bool,
}

impl ZonotopeShadow {
    pub fn size(&self) -> usize {
        self.points.len()
    }
}

/// Generic shadow vertex count of a zonotope: two vertices per parallel
/// class, independent of the frame (for almost every frame).
pub fn zonotope_shadow_size_exact(z: &Zonotope) -> usize {
    2 * z.parallel_classes().len()
}

/// Shadow polygon of a zonotope under one frame.
///
/// Projected class span vectors, normalized to the upper half-plane and
/// sorted by angle, trace the polygon boundary: up one side, back down
/// the other.
pub fn zonotope_shadow(z: &Zonotope, frame: &Frame2) -> Result<ZonotopeShadow> {
    if frame.dim() != z.dim() {
        return Err(Error::DimensionMismatch {
            expected: z.dim(),
            got: frame.dim(),
        });
    }
    let classes = z.parallel_classes();
    let mut anchor = geom::project(frame, z.base())?;
    let mut upper: Vec<Point2> = Vec::with_capacity(classes.len());
    let mut degenerate = false;
    let mut scale = 0.0f64;
    for class in &classes {
        let n = geom::project(frame, &class.negative_sum)?;
        let w = geom::project(frame, &class.span_vector())?;
        anchor.x += n.x;
        anchor.y += n.y;
        scale = scale.max(w.x.abs()).max(w.y.abs());
        upper.push(w);
    }
    let thresh = tol::DEDUP_TOL * scale.max(1.0);
    let mut kept: Vec<Point2> = Vec::with_capacity(upper.len());
    for mut w in upper {
        if w.x.abs() <= thresh && w.y.abs() <= thresh {
            degenerate = true; // class vanished under projection
            continue;
        }
        // flip into the closed upper half-plane, with the positive x-axis
        // included and the negative excluded
        if w.y < 0.0 || (w.y == 0.0 && w.x < 0.0) {
            anchor.x += w.x;
            anchor.y += w.y;
            w = Point2 { x: -w.x, y: -w.y };
        }
        kept.push(w);
    }
    kept.sort_by(|a, b| {
        let ta = a.y.atan2(a.x);
        let tb = b.y.atan2(b.x);
        ta.partial_cmp(&tb).unwrap()
    });
    // merge classes that became parallel under projection
    let mut merged: Vec<Point2> = Vec::new();
    for w in kept {
        if let Some(last) = merged.last_mut() {
            let cross = last.x * w.y - last.y * w.x;
            if cross.abs() <= thresh * (geom::norm(&[w.x, w.y]) + geom::norm(&[last.x, last.y])) {
                last.x += w.x;
                last.y += w.y;
                degenerate = true;
                continue;
            }
        }
        merged.push(w);
    }
    if merged.is_empty() {
        return Ok(ZonotopeShadow {
            points: vec![anchor],
            degenerate: true,
        });
    }
    // walk up along the sorted vectors, then back down
    let mut points = Vec::with_capacity(2 * merged.len());
    let mut cur = anchor;
    points.push(cur);
    for w in &merged {
        cur = Point2 {
            x: cur.x + w.x,
            y: cur.y + w.y,
        };
        points.push(cur);
    }
    for w in merged.iter().take(merged.len() - 1) {
        cur = Point2 {
            x: cur.x - w.x,
            y: cur.y - w.y,
        };
        points.push(cur);
    }
    // rotate the cycle so it starts at the lexicographic minimum; the
    // construction is already counterclockwise
    let start = (0..points.len())
        .min_by(|&a, &b| {
            (points[a].x, points[a].y)
                .partial_cmp(&(points[b].x, points[b].y))
                .unwrap()
        })
        .expect("nonempty polygon");
    points.rotate_left(start);
    Ok(ZonotopeShadow { points, degenerate })
}

/// One Monte Carlo trial: the shadow vertex count under an independently
/// sampled frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShadowTrial {
    pub index: u64,
    pub size: usize,
    pub degenerate: bool,
}

/// Aggregate of a Monte Carlo run.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ShadowEstimate {
    pub trials: u64,
    pub mean: f64,
    /// Standard error of the mean (sample standard deviation over
    /// `sqrt(trials)`).
    pub std_err: f64,
    pub min: usize,
    pub max: usize,
    pub degenerate_trials: u64,
}

/// Reduce per-trial outcomes to an estimate.
pub fn estimate_from_trials(trials: &[ShadowTrial]) -> Result<ShadowEstimate> {
    if trials.is_empty() {
        return Err(Error::EmptyInput("trial list".into()));
    }
    let n = trials.len() as f64;
    let mean = trials.iter().map(|t| t.size as f64).sum::<f64>() / n;
    let var = if trials.len() > 1 {
        trials
            .iter()
            .map(|t| (t.size as f64 - mean).powi(2))
            .sum::<f64>()
            / (n - 1.0)
    } else {
        0.0
    };
    Ok(ShadowEstimate {
        trials: trials.len() as u64,
        mean,
        std_err: (var / n).sqrt(),
        min: trials.iter().map(|t| t.size).min().expect("nonempty"),
        max: trials.iter().map(|t| t.size).max().expect("nonempty"),
        degenerate_trials: trials.iter().filter(|t| t.degenerate).count() as u64,
    })
}

fn run_trials<F>(trials: u64, rng: &Rng, trial: F) -> Result<Vec<ShadowTrial>>
where
    F: Fn(&mut Rng) -> Result<(usize, bool)> + Sync,
{
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be positive".into()));
    }
    (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut r = rng.substream(i);
            let (size, degenerate) = trial(&mut r)?;
            Ok(ShadowTrial {
                index: i,
                size,
                degenerate,
            })
        })
        .collect()
}

/// Per-trial shadow sizes of a vertex-list polytope under independent
/// uniform frames. Trial `i` uses `rng.substream(i)`, so the output is a
/// pure function of the master seed and stream, whatever the thread count.
pub fn shadow_trials(vertices: &[Vec<f64>], trials: u64, rng: &Rng) -> Result<Vec<ShadowTrial>> {
    if vertices.is_empty() {
        return Err(Error::EmptyInput("vertex list".into()));
    }
    let n = vertices[0].len();
    run_trials(trials, rng, |r| {
        let frame = geom::sample_frame(r, n)?;
        let poly = shadow(vertices, &frame)?;
        Ok((poly.size(), poly.is_degenerate()))
    })
}

/// Monte Carlo estimate of the expected shadow vertex count.
pub fn estimate_shadow_size(
    vertices: &[Vec<f64>],
    trials: u64,
    rng: &Rng,
) -> Result<ShadowEstimate> {
    estimate_from_trials(&shadow_trials(vertices, trials, rng)?)
}

/// Per-trial shadow sizes of a zonotope, via the projected-generator
/// polygon (no vertex enumeration, so this scales to many generators).
pub fn zonotope_shadow_trials(z: &Zonotope, trials: u64, rng: &Rng) -> Result<Vec<ShadowTrial>> {
    let n = z.dim();
    run_trials(trials, rng, |r| {
        let frame = geom::sample_frame(r, n)?;
        let s = zonotope_shadow(z, &frame)?;
        Ok((s.size(), s.degenerate))
    })
}

/// Monte Carlo estimate of the expected shadow vertex count of a
/// zonotope.
pub fn estimate_zonotope_shadow_size(
    z: &Zonotope,
    trials: u64,
    rng: &Rng,
) -> Result<ShadowEstimate> {
    estimate_from_trials(&zonotope_shadow_trials(z, trials, rng)?)
}
