//! Planar convex hulls of point sets that may contain duplicates and
//! near-collinear runs.

use crate::error::{Error, Result};
use crate::geom::Point2;

/// Hull output plus the degeneracy facts the shadow engine needs.
#[derive(Debug, Clone)]
pub struct HullInfo {
    /// Counterclockwise indices of the extreme points, starting from the
    /// lexicographically smallest.
    pub indices: Vec<usize>,
    /// True when some hull vertex had two or more input points within
    /// tolerance of it.
    pub preimage_tie: bool,
}

/// Convex hull by Andrew's monotone chain.
///
/// Returns counterclockwise indices of the extreme points; duplicate points
/// (within `tol * scale`, `scale` the largest coordinate magnitude) collapse
/// to the member with the smallest index, and collinear points are excluded.
///
/// # Examples
///
/// ```
/// use shadowlab::geom::Point2;
/// use shadowlab::hull::hull2d;
///
/// let pts = vec![
///     Point2::new(0.0, 0.0),
///     Point2::new(1.0, 0.0),
///     Point2::new(1.0, 1.0),
///     Point2::new(0.0, 1.0),
///     Point2::new(0.5, 0.5),
/// ];
/// assert_eq!(hull2d(&pts, 1e-9).unwrap(), vec![0, 1, 2, 3]);
/// ```
pub fn hull2d(points: &[Point2], tol: f64) -> Result<Vec<usize>> {
    Ok(hull2d_full(points, tol)?.indices)
}

/// As [`hull2d`], also reporting preimage ties.
pub fn hull2d_full(points: &[Point2], tol: f64) -> Result<HullInfo> {
    if points.is_empty() {
        return Err(Error::EmptyInput("hull2d needs at least 1 point".into()));
    }
    if points.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
        return Err(Error::NonFinite("hull2d input".into()));
    }
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Error::InvalidParameter("hull tolerance must be >= 0".into()));
    }
    let scale = points
        .iter()
        .map(|p| p.x.abs().max(p.y.abs()))
        .fold(0.0f64, f64::max);
    let thresh = tol * scale;

    // cluster coincident points; cluster anchor is lexicographically first,
    // representative index is the smallest original index
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_unstable_by(|&a, &b| {
        (points[a].x, points[a].y)
            .partial_cmp(&(points[b].x, points[b].y))
            .unwrap()
            .then(a.cmp(&b))
    });
    let mut reps: Vec<usize> = Vec::new();
    let mut sizes: Vec<usize> = Vec::new();
    let mut anchor: Option<Point2> = None;
    for &i in &order {
        match anchor {
            Some(a) if points[i].dist(&a) <= thresh => {
                let last = reps.len() - 1;
                reps[last] = reps[last].min(i);
                sizes[last] += 1;
            }
            _ => {
                anchor = Some(points[i]);
                reps.push(i);
                sizes.push(1);
            }
        }
    }

    let hull = match reps.len() {
        1 => vec![0usize],
        2 => vec![0, 1],
        _ => monotone_chain(points, &reps, thresh),
    };
    let preimage_tie = hull.iter().any(|&k| sizes[k] > 1);
    Ok(HullInfo {
        indices: hull.into_iter().map(|k| reps[k]).collect(),
        preimage_tie,
    })
}

fn cross(o: Point2, a: Point2, b: Point2) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Indices into `reps`; `reps` is already sorted lexicographically.
fn monotone_chain(points: &[Point2], reps: &[usize], thresh: f64) -> Vec<usize> {
    let p = |k: usize| points[reps[k]];
    let mut lower: Vec<usize> = Vec::new();
    for k in 0..reps.len() {
        while lower.len() >= 2
            && cross(p(lower[lower.len() - 2]), p(lower[lower.len() - 1]), p(k)) <= thresh
        {
            lower.pop();
        }
        lower.push(k);
    }
    let mut upper: Vec<usize> = Vec::new();
    for k in (0..reps.len()).rev() {
        while upper.len() >= 2
            && cross(p(upper[upper.len() - 2]), p(upper[upper.len() - 1]), p(k)) <= thresh
        {
            upper.pop();
        }
        upper.push(k);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}
