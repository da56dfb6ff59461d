//! Vectors, random 2-frames, projections, and planar measurements.
//!
//! Everything downstream reduces to a handful of primitives: sample an
//! orthonormal pair `(u, v)` uniformly at random, project points onto it,
//! and measure the resulting planar sets. Vectors are plain `&[f64]` slices;
//! constructors of the structured types validate finiteness and shape.

use crate::error::{Error, Result};
use crate::rng::Rng;
use crate::tol;
use rand::Rng as _;
use rand_distr::StandardNormal;

/// A point in the projection plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn dist(&self, other: &Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// An ordered orthonormal pair spanning a plane in `R^n`, `n >= 2`.
///
/// Invariants checked on construction: both vectors unit length and mutually
/// orthogonal to within `1e-12`, all entries finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame2 {
    u: Vec<f64>,
    v: Vec<f64>,
}

impl Frame2 {
    pub fn new(u: Vec<f64>, v: Vec<f64>) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::DimensionMismatch {
                expected: u.len(),
                got: v.len(),
            });
        }
        if u.len() < 2 {
            return Err(Error::InvalidDimension(format!(
                "frame needs ambient dimension >= 2, got {}",
                u.len()
            )));
        }
        validate_finite(&u, "frame vector u")?;
        validate_finite(&v, "frame vector v")?;
        let tol = tol::DEDUP_TOL;
        if (norm(&u) - 1.0).abs() > tol || (norm(&v) - 1.0).abs() > tol {
            return Err(Error::InvalidParameter(
                "frame vectors must be unit length".into(),
            ));
        }
        if dot(&u, &v).abs() > tol {
            return Err(Error::InvalidParameter(
                "frame vectors must be orthogonal".into(),
            ));
        }
        Ok(Frame2 { u, v })
    }

    pub fn u(&self) -> &[f64] {
        &self.u
    }

    pub fn v(&self) -> &[f64] {
        &self.v
    }

    pub fn dim(&self) -> usize {
        self.u.len()
    }
}

/// `n` i.i.d. standard normal draws.
pub fn sample_gaussian_vector(rng: &mut Rng, n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::InvalidDimension("gaussian vector needs n >= 1".into()));
    }
    Ok((0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect())
}

/// A uniformly random orthonormal 2-frame in `R^n`.
///
/// Gram-Schmidt applied to two independent gaussian vectors; rotation
/// invariance of the gaussian makes the result Haar-distributed. Degenerate
/// draws (numerically dependent pair) are resampled.
pub fn sample_frame(rng: &mut Rng, n: usize) -> Result<Frame2> {
    if n < 2 {
        return Err(Error::InvalidDimension(format!(
            "random 2-frame needs n >= 2, got {n}"
        )));
    }
    loop {
        let g1 = sample_gaussian_vector(rng, n)?;
        let g2 = sample_gaussian_vector(rng, n)?;
        let n1 = norm(&g1);
        if n1 < 1e-12 {
            continue;
        }
        let u: Vec<f64> = g1.iter().map(|x| x / n1).collect();
        let c = dot(&g2, &u);
        let mut w: Vec<f64> = g2.iter().zip(&u).map(|(x, ui)| x - c * ui).collect();
        // second orthogonalization pass: when g2 is nearly parallel to u the
        // first pass leaves a residual component of order eps·|g2| that the
        // upcoming normalization would amplify past the frame tolerance
        let c2 = dot(&w, &u);
        for (wi, ui) in w.iter_mut().zip(&u) {
            *wi -= c2 * ui;
        }
        let n2 = norm(&w);
        if n2 < 1e-9 * norm(&g2) {
            continue;
        }
        for x in &mut w {
            *x /= n2;
        }
        return Frame2::new(u, w);
    }
}

/// Orthogonal projection of `x` onto the frame plane: `(u . x, v . x)`.
pub fn project(f: &Frame2, x: &[f64]) -> Result<Point2> {
    if x.len() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: x.len(),
        });
    }
    Ok(Point2::new(dot(f.u(), x), dot(f.v(), x)))
}

/// Perimeter of a closed traversal of `poly` in the given order.
///
/// A two-point polygon is traversed there and back, so a segment of length
/// `L` has perimeter `2L`.
pub fn perimeter(poly: &[Point2]) -> Result<f64> {
    if poly.len() < 2 {
        return Err(Error::EmptyInput(
            "perimeter needs at least 2 points".into(),
        ));
    }
    let mut total = 0.0;
    for i in 0..poly.len() {
        let j = (i + 1) % poly.len();
        total += poly[i].dist(&poly[j]);
    }
    Ok(total)
}

/// Geometric diameter: the largest pairwise distance. Exhaustive scan.
pub fn gdiam(points: &[Vec<f64>]) -> Result<f64> {
    if points.is_empty() {
        return Err(Error::EmptyInput("gdiam needs at least 1 point".into()));
    }
    let mut best = 0.0f64;
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let d = dist(&points[i], &points[j]);
            if d > best {
                best = d;
            }
        }
    }
    Ok(best)
}

/// Largest pairwise distance among planar points.
pub fn gdiam2(points: &[Point2]) -> Result<f64> {
    if points.is_empty() {
        return Err(Error::EmptyInput("gdiam needs at least 1 point".into()));
    }
    let mut best = 0.0f64;
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            best = best.max(points[i].dist(&points[j]));
        }
    }
    Ok(best)
}

/// Distance from `x` to the hyperplane through the origin with the given
/// normal: `|normal . x| / ||normal||`.
pub fn dist_point_hyperplane(x: &[f64], normal: &[f64]) -> Result<f64> {
    if x.len() != normal.len() {
        return Err(Error::DimensionMismatch {
            expected: normal.len(),
            got: x.len(),
        });
    }
    let nn = norm(normal);
    if nn < 1e-300 {
        return Err(Error::InvalidParameter(
            "hyperplane normal must be nonzero".into(),
        ));
    }
    Ok(dot(x, normal).abs() / nn)
}

// --- small dense linear algebra -------------------------------------------

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn validate_finite(v: &[f64], what: &str) -> Result<()> {
    if v.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite(what.into()));
    }
    Ok(())
}

/// Solve `A x = b` for square dense `A` by Gaussian elimination with
/// partial pivoting. Errors on rank deficiency.
pub fn solve_system(a: &[Vec<f64>], b: &[f64]) -> Result<Vec<f64>> {
    let n = a.len();
    if n == 0 || a.iter().any(|row| row.len() != n) || b.len() != n {
        return Err(Error::InvalidParameter(
            "solve_system needs a square system".into(),
        ));
    }
    let mut m: Vec<Vec<f64>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let scale = m
        .iter()
        .flat_map(|r| r.iter().take(n))
        .fold(0.0f64, |acc, x| acc.max(x.abs()));
    let pivot_tol = tol::DEDUP_TOL * scale.max(1.0);
    for col in 0..n {
        let (pivot_row, pivot_val) = (col..n)
            .map(|r| (r, m[r][col].abs()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if pivot_val <= pivot_tol {
            return Err(Error::RankDeficient(format!(
                "pivot {pivot_val:e} at column {col}"
            )));
        }
        m.swap(col, pivot_row);
        for r in (col + 1)..n {
            let factor = m[r][col] / m[col][col];
            if factor != 0.0 {
                for c in col..=n {
                    m[r][c] -= factor * m[col][c];
                }
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = m[row][n];
        for c in (row + 1)..n {
            acc -= m[row][c] * x[c];
        }
        x[row] = acc / m[row][row];
    }
    Ok(x)
}

/// Orthonormal basis of the span of `vectors`, by modified Gram-Schmidt with
/// greedy pivoting: the largest remaining residual joins the basis first.
/// Residuals below `tol * max_initial_norm` are treated as dependent.
pub fn orthonormal_basis(vectors: &[Vec<f64>], tol: f64) -> Vec<Vec<f64>> {
    let mut residuals: Vec<Vec<f64>> = vectors.to_vec();
    let scale = residuals.iter().map(|v| norm(v)).fold(0.0f64, f64::max);
    let cutoff = tol * scale.max(1.0);
    let mut basis: Vec<Vec<f64>> = Vec::new();
    loop {
        let best = residuals
            .iter()
            .enumerate()
            .map(|(i, v)| (i, norm(v)))
            .max_by(|a, b| a.1.total_cmp(&b.1));
        let (idx, len) = match best {
            Some(pair) => pair,
            None => break,
        };
        if len <= cutoff {
            break;
        }
        let b: Vec<f64> = residuals[idx].iter().map(|x| x / len).collect();
        for v in &mut residuals {
            let c = dot(v, &b);
            for (vi, bi) in v.iter_mut().zip(&b) {
                *vi -= c * bi;
            }
        }
        basis.push(b);
    }
    basis
}

/// Norm of `x - proj_span(x)` where the span is given by an orthonormal
/// basis. Computed from the explicit residual for stability.
pub fn residual_norm(x: &[f64], basis: &[Vec<f64>]) -> f64 {
    let mut r = x.to_vec();
    for b in basis {
        let c = dot(&r, b);
        for (ri, bi) in r.iter_mut().zip(b) {
            *ri -= c * bi;
        }
    }
    norm(&r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_vector_is_deterministic_per_stream() {
        let mut a = Rng::with_stream(3, 11);
        let mut b = Rng::with_stream(3, 11);
        assert_eq!(
            sample_gaussian_vector(&mut a, 5).unwrap(),
            sample_gaussian_vector(&mut b, 5).unwrap()
        );
    }

    #[test]
    fn gaussian_vector_rejects_n0_and_has_sane_moments() {
        let mut rng = Rng::new(0);
        assert!(sample_gaussian_vector(&mut rng, 0).is_err());
        let draws = 100_000;
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for _ in 0..draws {
            let v = sample_gaussian_vector(&mut rng, 3).unwrap();
            for x in v {
                sum += x;
                sumsq += x * x;
            }
        }
        let k = (3 * draws) as f64;
        let mean = sum / k;
        let var = sumsq / k - mean * mean;
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - 1.0).abs() < 0.02, "var {var}");
    }

    #[test]
    fn frames_are_orthonormal() {
        let mut rng = Rng::new(1);
        for n in [2usize, 3, 7, 40] {
            for _ in 0..50 {
                let f = sample_frame(&mut rng, n).unwrap();
                assert!((norm(f.u()) - 1.0).abs() < 1e-12);
                assert!((norm(f.v()) - 1.0).abs() < 1e-12);
                assert!(dot(f.u(), f.v()).abs() < 1e-12);
            }
        }
        assert!(sample_frame(&mut rng, 1).is_err());
    }

    #[test]
    fn frame_in_r2_is_a_rotation() {
        // in R^2 the frame plane is everything, so projection is an isometry
        let mut rng = Rng::new(4);
        let f = sample_frame(&mut rng, 2).unwrap();
        let a = [0.3, -1.2];
        let b = [2.0, 0.5];
        let pa = project(&f, &a).unwrap();
        let pb = project(&f, &b).unwrap();
        assert!((pa.dist(&pb) - dist(&a, &b)).abs() < 1e-12);
    }

    #[test]
    fn project_matches_basis_rows() {
        let f = Frame2::new(vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]).unwrap();
        let p = project(&f, &[3.0, -2.0, 9.0]).unwrap();
        assert_eq!((p.x, p.y), (3.0, -2.0));
        assert!(project(&f, &[1.0, 2.0]).is_err());
    }

    #[test]
    fn project_is_linear() {
        let mut rng = Rng::new(9);
        let f = sample_frame(&mut rng, 6).unwrap();
        let x = sample_gaussian_vector(&mut rng, 6).unwrap();
        let y = sample_gaussian_vector(&mut rng, 6).unwrap();
        let z: Vec<f64> = x.iter().zip(&y).map(|(a, b)| 2.5 * a - 0.7 * b).collect();
        let px = project(&f, &x).unwrap();
        let py = project(&f, &y).unwrap();
        let pz = project(&f, &z).unwrap();
        assert!((pz.x - (2.5 * px.x - 0.7 * py.x)).abs() < 1e-12);
        assert!((pz.y - (2.5 * px.y - 0.7 * py.y)).abs() < 1e-12);
    }

    #[test]
    fn perimeter_square_and_segment() {
        let square = [
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ];
        assert!((perimeter(&square).unwrap() - 4.0).abs() < 1e-12);
        let seg = [Point2::new(0.0, 0.0), Point2::new(3.0, 0.0)];
        assert!((perimeter(&seg).unwrap() - 6.0).abs() < 1e-12);
        assert!(perimeter(&[Point2::new(0.0, 0.0)]).is_err());
    }

    #[test]
    fn perimeter_and_gdiam_are_rotation_invariant() {
        let pts = [
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 1.0),
            Point2::new(0.0, 1.0),
        ];
        let theta: f64 = 0.83;
        let rot: Vec<Point2> = pts
            .iter()
            .map(|p| {
                Point2::new(
                    p.x * theta.cos() - p.y * theta.sin(),
                    p.x * theta.sin() + p.y * theta.cos(),
                )
            })
            .collect();
        let p0 = perimeter(&pts).unwrap();
        let p1 = perimeter(&rot).unwrap();
        assert!((p0 - p1).abs() <= 1e-9 * p0);
        let d0 = gdiam2(&pts).unwrap();
        let d1 = gdiam2(&rot).unwrap();
        assert!((d0 - d1).abs() <= 1e-9 * d0);
    }

    #[test]
    fn gdiam_unit_cube_and_singleton() {
        let mut cube = Vec::new();
        for m in 0..8u32 {
            cube.push(vec![
                (m & 1) as f64,
                ((m >> 1) & 1) as f64,
                ((m >> 2) & 1) as f64,
            ]);
        }
        assert!((gdiam(&cube).unwrap() - 3.0f64.sqrt()).abs() < 1e-12);
        assert_eq!(gdiam(&[vec![5.0, 5.0]]).unwrap(), 0.0);
    }

    #[test]
    fn dist_point_hyperplane_examples() {
        let d = dist_point_hyperplane(&[1.0, 1.0], &[1.0, 0.0]).unwrap();
        assert!((d - 1.0).abs() < 1e-12);
        let d = dist_point_hyperplane(&[1.0, 1.0, 1.0], &[1.0, 1.0, 1.0]).unwrap();
        assert!((d - 3.0f64.sqrt()).abs() < 1e-12);
        let d = dist_point_hyperplane(&[2.0, 0.0], &[3.0, 0.0]).unwrap();
        assert!((d - 2.0).abs() < 1e-12);
        assert!(dist_point_hyperplane(&[1.0], &[0.0]).is_err());
    }

    #[test]
    fn solve_system_and_basis_helpers() {
        let a = vec![vec![2.0, 1.0], vec![1.0, 3.0]];
        let x = solve_system(&a, &[5.0, 10.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 3.0).abs() < 1e-12);
        let singular = vec![vec![1.0, 2.0], vec![2.0, 4.0]];
        assert!(solve_system(&singular, &[1.0, 2.0]).is_err());

        let basis = orthonormal_basis(
            &[
                vec![1.0, 1.0, 0.0],
                vec![2.0, 2.0, 0.0],
                vec![0.0, 1.0, 0.0],
            ],
            1e-9,
        );
        assert_eq!(basis.len(), 2);
        let r = residual_norm(&[0.0, 0.0, 5.0], &basis);
        assert!((r - 5.0).abs() < 1e-12);
        let r = residual_norm(&[3.0, 3.0, 0.0], &basis);
        assert!(r < 1e-12);
    }
}
