//! Shadow counting on the dual side, plus the thinness geometry of
//! normal cones.
//!
//! A planar objective `c(θ) = cosθ·u + sinθ·v` sweeps the unit circle of
//! the frame plane. The set of angles where a fixed vertex maximizes
//! `c(θ)ᵀx` over the vertex set is an open arc, and the number of
//! nonempty arcs equals the number of shadow vertices — this counts
//! shadows without ever building a hull. The same normal-fan picture
//! drives two quantitative questions handled here: how far each unit
//! cone ray stays from the span of its cone's other rays (the δ
//! parameter), and how the distance from a random point of a cone to the
//! spanned hyperplanes behaves (rejection samplers and Monte Carlo
//! checks for the closed-form tail and mean bounds).

use crate::error::{Error, Result};
use crate::geom::{self, Frame2};
use crate::polytope::VPolytope;
use crate::rng::Rng;
use crate::tol;
use rand::Rng as _;
use rand_distr::StandardNormal;
use std::f64::consts::{PI, TAU};

/// One maximizer arc: for angles in `(start, end)` the objective
/// `c(θ) = cosθ·u + sinθ·v` attains its maximum over the vertex set at
/// `vertex`. `start ∈ [0, 2π)` and `0 < end − start ≤ 2π`; an arc
/// crossing angle zero is unwrapped, so `end` may exceed 2π.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc {
    pub vertex: usize,
    pub start: f64,
    pub end: f64,
}

impl Arc {
    pub fn width(&self) -> f64 {
        self.end - self.start
    }
}

/// The unit circle of planar objectives cut into maximizer arcs, ordered
/// counterclockwise by start angle.
#[derive(Debug, Clone)]
pub struct ArcDecomposition {
    pub frame: Frame2,
    pub arcs: Vec<Arc>,
}

impl ArcDecomposition {
    /// Number of arcs = number of shadow vertices.
    pub fn count(&self) -> usize {
        self.arcs.len()
    }

    pub fn total_measure(&self) -> f64 {
        self.arcs.iter().map(Arc::width).sum()
    }

    /// Verify the arcs tile the circle: cyclically consecutive arcs meet
    /// within `gap_tol`, neighbors belong to distinct vertices, and the
    /// total measure is 2π within 1e-6.
    pub fn validate_partition(&self, gap_tol: f64) -> Result<()> {
        if self.arcs.is_empty() {
            return Err(Error::Internal("empty arc decomposition".into()));
        }
        let n = self.arcs.len();
        for i in 0..n {
            let cur = &self.arcs[i];
            let next = &self.arcs[(i + 1) % n];
            let gap = if i + 1 == n {
                next.start + TAU - cur.end
            } else {
                next.start - cur.end
            };
            if gap.abs() > gap_tol {
                return Err(Error::Internal(format!(
                    "arc boundary mismatch after arc {i}: gap {gap:e}"
                )));
            }
            if n > 1 && cur.vertex == next.vertex {
                return Err(Error::Internal(format!(
                    "adjacent arcs share vertex {}",
                    cur.vertex
                )));
            }
        }
        let measure = self.total_measure();
        if (measure - TAU).abs() > 1e-6 {
            return Err(Error::Internal(format!(
                "arc measure {measure} differs from 2π"
            )));
        }
        Ok(())
    }
}

/// Intersection of open half-circles centered at the given sorted
/// angles: nonempty iff the largest circular gap between centers exceeds
/// π (+ padding); the resulting arc sits opposite the gap's midpoint
/// with width gap − π.
fn half_circle_intersection(sorted_centers: &[f64]) -> Option<(f64, f64)> {
    let m = sorted_centers.len();
    let mut gap = sorted_centers[0] + TAU - sorted_centers[m - 1];
    let mut gap_lo = sorted_centers[m - 1];
    for k in 1..m {
        let g = sorted_centers[k] - sorted_centers[k - 1];
        if g > gap {
            gap = g;
            gap_lo = sorted_centers[k - 1];
        }
    }
    if gap <= PI + tol::ARC_PAD {
        return None;
    }
    let mid = gap_lo + gap / 2.0 + PI;
    let width = gap - PI;
    let start = (mid - width / 2.0).rem_euclid(TAU);
    Some((start, start + width))
}

/// Cut the circle of planar objectives by which vertex maximizes.
///
/// Vertex `v` wins at angle θ iff `c(θ)ᵀ(v − w) > 0` for every other
/// vertex `w`; each such constraint is the open half-circle centered at
/// the angle of the projected difference `v − w`, so the winning set is
/// a single open arc (or empty). Differences whose projection is shorter
/// than 1e-12 are skipped as non-binding: the two vertices shadow onto
/// the same point, which is measure-zero for random frames.
pub fn arc_decomposition(p: &VPolytope, frame: &Frame2) -> Result<ArcDecomposition> {
    if p.num_vertices() < 2 {
        return Err(Error::InvalidParameter(
            "arc decomposition needs at least 2 vertices".into(),
        ));
    }
    if frame.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: frame.dim(),
        });
    }
    let verts = p.vertices();
    let mut arcs = Vec::new();
    let mut centers: Vec<f64> = Vec::with_capacity(verts.len() - 1);
    for (i, v) in verts.iter().enumerate() {
        centers.clear();
        for (j, w) in verts.iter().enumerate() {
            if j == i {
                continue;
            }
            let d = geom::sub(v, w);
            let a = geom::dot(frame.u(), &d);
            let b = geom::dot(frame.v(), &d);
            if a.hypot(b) < tol::DEDUP_TOL {
                continue;
            }
            centers.push(b.atan2(a));
        }
        let arc = if centers.is_empty() {
            // unconstrained: this vertex wins the whole circle
            Some((0.0, TAU))
        } else {
            centers.sort_unstable_by(f64::total_cmp);
            half_circle_intersection(&centers)
        };
        if let Some((start, end)) = arc {
            arcs.push(Arc {
                vertex: i,
                start,
                end,
            });
        }
    }
    if arcs.is_empty() {
        return Err(Error::Internal(
            "no vertex maximizes any planar objective; inconsistent vertex data".into(),
        ));
    }
    arcs.sort_by(|x, y| x.start.total_cmp(&y.start));
    Ok(ArcDecomposition {
        frame: frame.clone(),
        arcs,
    })
}

/// Number of shadow vertices, counted without a hull.
pub fn arc_count(p: &VPolytope, frame: &Frame2) -> Result<usize> {
    Ok(arc_decomposition(p, frame)?.count())
}

/// The thinness parameter of a normal fan, with the cone and ray
/// attaining it.
#[derive(Debug, Clone)]
pub struct DeltaReport {
    /// Minimum over cones and rays of the distance from the unit ray to
    /// the span of the cone's other rays. Always in (0, 1].
    pub delta: f64,
    /// `(vertex index, ray index)` where the minimum is attained.
    pub witness: (usize, usize),
    /// Per-cone minima, indexed like [`VPolytope::normal_cones`].
    pub per_cone_minima: Vec<f64>,
}

/// Scan every normal cone of a simple polytope for its least
/// ray-to-other-rays distance.
pub fn delta_of_polytope(p: &VPolytope) -> Result<DeltaReport> {
    let cones = p.normal_cones()?;
    let mut delta = f64::INFINITY;
    let mut witness = (0, 0);
    let mut per_cone_minima = Vec::with_capacity(cones.len());
    for cone in &cones {
        let mut cone_min = f64::INFINITY;
        for j in 0..cone.rays.len() {
            let others: Vec<Vec<f64>> = cone
                .rays
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != j)
                .map(|(_, r)| r.clone())
                .collect();
            let basis = geom::orthonormal_basis(&others, tol::DEDUP_TOL);
            if basis.len() != others.len() {
                return Err(Error::RankDeficient(format!(
                    "normal cone at vertex {} is not simplicial",
                    cone.vertex
                )));
            }
            // a unit vector is within distance 1 of any linear subspace;
            // clamp the rounding excess
            let d = geom::residual_norm(&cone.rays[j], &basis).min(1.0);
            if d <= 1e-12 {
                return Err(Error::RankDeficient(format!(
                    "ray {j} of the cone at vertex {} lies in the span of the others",
                    cone.vertex
                )));
            }
            if d < cone_min {
                cone_min = d;
            }
            if d < delta {
                delta = d;
                witness = (cone.vertex, j);
            }
        }
        per_cone_minima.push(cone_min);
    }
    Ok(DeltaReport {
        delta,
        witness,
        per_cone_minima,
    })
}

/// Closed form for `delta_of_polytope(augmented_permutahedron(n))`:
/// `min(1, min_{1 ≤ k < n} sqrt(n / (2k(n−k))))`.
///
/// At any vertex the cone rays are, up to coordinate permutation and the
/// two segment orientations, the normalizations of
/// `r_k = e_[k] − (k/n)·ones` for `k < n` together with `ones/√n`, where
/// `e_[k]` sums the first `k` basis vectors. The span of all rays except
/// `r_k` has unit normal `(e_{k+1} − e_k)/√2`, and with
/// `⟨r_k, e_{k+1} − e_k⟩ = −1` and `‖r_k‖² = k(n−k)/n` the ray-to-span
/// distance comes out to `sqrt(n/(2k(n−k)))`. The `ones/√n` ray is
/// orthogonal to all the others, at distance exactly 1.
pub fn augmented_permutahedron_delta(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidDimension(format!(
            "closed form needs n >= 2, got {n}"
        )));
    }
    let nf = n as f64;
    let mut best = 1.0f64;
    for k in 1..n {
        let kf = k as f64;
        best = best.min((nf / (2.0 * kf * (nf - kf))).sqrt());
    }
    Ok(best)
}

/// Sampled cone points plus the rejection acceptance rate that produced
/// them.
#[derive(Debug, Clone)]
pub struct ConeSample {
    pub points: Vec<Vec<f64>>,
    pub acceptance_rate: f64,
}

#[derive(Clone, Copy)]
enum Proposal {
    Ball,
    Sphere,
}

/// Orthonormal basis of the rays' span plus each ray in basis
/// coordinates; errors unless the rays are linearly independent (the
/// cone must be simplicial).
fn cone_coordinates(rays: &[Vec<f64>]) -> Result<(Vec<Vec<f64>>, Vec<Vec<f64>>)> {
    if rays.is_empty() {
        return Err(Error::EmptyInput("cone rays".into()));
    }
    let n = rays[0].len();
    for r in rays {
        if r.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: r.len(),
            });
        }
        geom::validate_finite(r, "cone ray")?;
        if geom::norm(r) < tol::DEDUP_TOL {
            return Err(Error::InvalidParameter("zero cone ray".into()));
        }
    }
    let basis = geom::orthonormal_basis(rays, tol::DEDUP_TOL);
    if basis.len() != rays.len() {
        return Err(Error::RankDeficient(format!(
            "{} cone rays span only {} dimensions",
            rays.len(),
            basis.len()
        )));
    }
    let coords = rays
        .iter()
        .map(|r| basis.iter().map(|b| geom::dot(r, b)).collect())
        .collect();
    Ok((basis, coords))
}

/// Square matrix whose columns are the rays in span coordinates, as rows
/// for the solver.
fn ray_matrix(coords: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let k = coords.len();
    (0..k)
        .map(|i| (0..k).map(|j| coords[j][i]).collect())
        .collect()
}

fn in_cone(matrix: &[Vec<f64>], point: &[f64]) -> Result<bool> {
    let lambda = geom::solve_system(matrix, point)?;
    Ok(lambda.iter().all(|&l| l >= -tol::CONE_MEMBER_TOL))
}

fn sample_cone(
    rays: &[Vec<f64>],
    rng: &mut Rng,
    count: usize,
    kind: Proposal,
) -> Result<ConeSample> {
    if count == 0 {
        return Err(Error::InvalidParameter(
            "cone sampling needs count >= 1".into(),
        ));
    }
    let (basis, coords) = cone_coordinates(rays)?;
    let matrix = ray_matrix(&coords);
    let k = rays.len();
    let ambient = rays[0].len();
    let mut points = Vec::with_capacity(count);
    let mut proposals: u64 = 0;
    let mut accepted: u64 = 0;
    while points.len() < count {
        if proposals >= tol::CONE_MAX_PROPOSALS
            && (accepted as f64) < tol::CONE_RATE_FLOOR * proposals as f64
        {
            return Err(Error::TooThinCone {
                floor: tol::CONE_RATE_FLOOR,
                proposals,
            });
        }
        proposals += 1;
        let mut g: Vec<f64> = (0..k).map(|_| rng.sample(StandardNormal)).collect();
        let norm = geom::norm(&g);
        if norm < 1e-300 {
            continue;
        }
        let radius = match kind {
            Proposal::Ball => rng.gen_range(0.0f64..1.0).powf(1.0 / k as f64),
            Proposal::Sphere => 1.0,
        };
        for x in &mut g {
            *x *= radius / norm;
        }
        if in_cone(&matrix, &g)? {
            accepted += 1;
            let mut p = vec![0.0; ambient];
            for (c, b) in g.iter().zip(&basis) {
                for (pi, bi) in p.iter_mut().zip(b) {
                    *pi += c * bi;
                }
            }
            points.push(p);
        }
    }
    Ok(ConeSample {
        points,
        acceptance_rate: accepted as f64 / proposals as f64,
    })
}

/// Uniform samples from cone ∩ unit ball (the ball of the rays' span),
/// by rejection: Gaussian direction times radius^(1/k) proposals,
/// accepted when the ray-coordinate solve is componentwise ≥ −1e-12.
/// Errors as too-thin when the acceptance rate is still below 1e-6
/// after 10⁷ proposals.
pub fn sample_cone_ball(rays: &[Vec<f64>], rng: &mut Rng, count: usize) -> Result<ConeSample> {
    sample_cone(rays, rng, count, Proposal::Ball)
}

/// Uniform samples from cone ∩ unit sphere, by rejection from normalized
/// Gaussian proposals in the rays' span. Same error policy as
/// [`sample_cone_ball`].
pub fn sample_cone_sphere(rays: &[Vec<f64>], rng: &mut Rng, count: usize) -> Result<ConeSample> {
    sample_cone(rays, rng, count, Proposal::Sphere)
}

fn unit(v: &[f64]) -> Vec<f64> {
    let n = geom::norm(v);
    v.iter().map(|x| x / n).collect()
}

/// Empirical tail probability against its closed-form ceiling.
#[derive(Debug, Clone, Copy)]
pub struct TailCheck {
    /// Fraction of cone∩ball samples within `eps` of the hyperplane.
    pub empirical: f64,
    /// Binomial standard error of `empirical`.
    pub std_error: f64,
    /// The ceiling `((1+eps)^k − 1)/h`.
    pub bound: f64,
    /// Distance from the excluded unit ray to the others' span.
    pub h: f64,
}

/// Probability that a uniform point of cone ∩ ball lies within `eps` of
/// the hyperplane spanned by all rays except `excluded`, reported next
/// to the ceiling `((1+eps)^k − 1)/h` where `h` is the excluded unit
/// ray's distance to that span.
pub fn near_hyperplane_probability(
    rays: &[Vec<f64>],
    excluded: usize,
    eps: f64,
    trials: usize,
    rng: &mut Rng,
) -> Result<TailCheck> {
    if rays.len() < 2 {
        return Err(Error::InvalidParameter(
            "need at least 2 rays so the spanned hyperplane is nontrivial".into(),
        ));
    }
    if excluded >= rays.len() {
        return Err(Error::InvalidParameter(format!(
            "excluded ray {excluded} out of range (k = {})",
            rays.len()
        )));
    }
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::InvalidParameter(format!("need eps > 0, got {eps}")));
    }
    if trials == 0 {
        return Err(Error::InvalidParameter("need trials >= 1".into()));
    }
    let others: Vec<Vec<f64>> = rays
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != excluded)
        .map(|(_, r)| r.clone())
        .collect();
    let basis = geom::orthonormal_basis(&others, tol::DEDUP_TOL);
    if basis.len() != others.len() {
        return Err(Error::RankDeficient(
            "hyperplane-spanning rays are dependent".into(),
        ));
    }
    let h = geom::residual_norm(&unit(&rays[excluded]), &basis).min(1.0);
    let k = rays.len() as i32;
    let sample = sample_cone_ball(rays, rng, trials)?;
    let hits = sample
        .points
        .iter()
        .filter(|p| geom::residual_norm(p, &basis) <= eps)
        .count();
    let empirical = hits as f64 / trials as f64;
    Ok(TailCheck {
        empirical,
        std_error: (empirical * (1.0 - empirical) / trials as f64).sqrt(),
        bound: ((1.0 + eps).powi(k) - 1.0) / h,
        h,
    })
}

/// Empirical mean distance against its closed-form floor.
#[derive(Debug, Clone, Copy)]
pub struct MeanDistanceCheck {
    /// Mean over samples of the least distance to any spanned hyperplane.
    pub empirical: f64,
    /// Standard error of `empirical`.
    pub std_error: f64,
    /// The floor `h/(8k²)`.
    pub bound: f64,
    /// Min over rays of the unit ray's distance to the others' span.
    pub h: f64,
}

fn arrangement_distance(
    rays: &[Vec<f64>],
    trials: usize,
    rng: &mut Rng,
    kind: Proposal,
) -> Result<MeanDistanceCheck> {
    if rays.len() < 2 {
        return Err(Error::InvalidParameter(
            "the hyperplane arrangement needs at least 2 rays".into(),
        ));
    }
    if trials == 0 {
        return Err(Error::InvalidParameter("need trials >= 1".into()));
    }
    let k = rays.len();
    let mut bases = Vec::with_capacity(k);
    let mut h = f64::INFINITY;
    for j in 0..k {
        let others: Vec<Vec<f64>> = rays
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != j)
            .map(|(_, r)| r.clone())
            .collect();
        let basis = geom::orthonormal_basis(&others, tol::DEDUP_TOL);
        if basis.len() != others.len() {
            return Err(Error::RankDeficient(
                "arrangement-spanning rays are dependent".into(),
            ));
        }
        h = h.min(geom::residual_norm(&unit(&rays[j]), &basis).min(1.0));
        bases.push(basis);
    }
    let sample = sample_cone(rays, rng, trials, kind)?;
    let mut sum = 0.0;
    let mut sumsq = 0.0;
    for p in &sample.points {
        let d = bases
            .iter()
            .map(|b| geom::residual_norm(p, b))
            .fold(f64::INFINITY, f64::min);
        sum += d;
        sumsq += d * d;
    }
    let nf = trials as f64;
    let mean = sum / nf;
    let var = if trials > 1 {
        ((sumsq - nf * mean * mean) / (nf - 1.0)).max(0.0)
    } else {
        0.0
    };
    Ok(MeanDistanceCheck {
        empirical: mean,
        std_error: (var / nf).sqrt(),
        bound: h / (8.0 * (k * k) as f64),
        h,
    })
}

/// Mean distance from a uniform point of cone ∩ sphere to the union of
/// the k hyperplanes each spanned by all-but-one ray, reported next to
/// the floor `h/(8k²)`. `h` is recomputed from the ray geometry so the
/// hypothesis and the measurement cannot drift apart.
pub fn mean_arrangement_distance_sphere(
    rays: &[Vec<f64>],
    trials: usize,
    rng: &mut Rng,
) -> Result<MeanDistanceCheck> {
    arrangement_distance(rays, trials, rng, Proposal::Sphere)
}

/// Ball version of [`mean_arrangement_distance_sphere`]. The sphere mean
/// dominates this one, because the min-distance grows along rays and so
/// is maximized on the boundary sphere.
pub fn mean_arrangement_distance_ball(
    rays: &[Vec<f64>],
    trials: usize,
    rng: &mut Rng,
) -> Result<MeanDistanceCheck> {
    arrangement_distance(rays, trials, rng, Proposal::Ball)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::geom::Point2;
    use crate::lp;
    use crate::shadow;

    fn e(i: usize, n: usize) -> Vec<f64> {
        let mut v = vec![0.0; n];
        v[i] = 1.0;
        v
    }

    /// Composition of plane rotations; orthogonal by construction.
    fn rotate(points: &[Vec<f64>], plane_angles: &[(usize, usize, f64)]) -> Vec<Vec<f64>> {
        points
            .iter()
            .map(|p| {
                let mut q = p.clone();
                for &(i, j, t) in plane_angles {
                    let (c, s) = (t.cos(), t.sin());
                    let (a, b) = (q[i], q[j]);
                    q[i] = c * a - s * b;
                    q[j] = s * a + c * b;
                }
                q
            })
            .collect()
    }

    #[test]
    fn segment_splits_the_circle_into_two_half_arcs() {
        let p = VPolytope::from_points(&[vec![0.0, 0.0, 0.0], vec![1.0, 2.0, 2.0]]).unwrap();
        let mut rng = Rng::new(5);
        let f = geom::sample_frame(&mut rng, 3).unwrap();
        let dec = arc_decomposition(&p, &f).unwrap();
        assert_eq!(dec.count(), 2);
        for arc in &dec.arcs {
            assert!((arc.width() - PI).abs() < 1e-9, "width {}", arc.width());
        }
        dec.validate_partition(1e-9).unwrap();
    }

    #[test]
    fn arc_count_matches_hull_count_on_the_cube() {
        let p = families::hypercube(3).unwrap().to_vpolytope().unwrap();
        let mut rng = Rng::new(21);
        for _ in 0..50 {
            let f = geom::sample_frame(&mut rng, 3).unwrap();
            let dual = arc_count(&p, &f).unwrap();
            let primal = shadow::shadow(p.vertices(), &f).unwrap().size();
            assert_eq!(dual, primal);
        }
    }

    #[test]
    fn thickened_permutahedron_always_counts_its_generators() {
        let p = families::augmented_permutahedron(3)
            .unwrap()
            .to_vpolytope()
            .unwrap();
        let mut rng = Rng::new(22);
        for _ in 0..25 {
            let f = geom::sample_frame(&mut rng, 3).unwrap();
            assert_eq!(arc_count(&p, &f).unwrap(), 8);
            assert_eq!(shadow::shadow(p.vertices(), &f).unwrap().size(), 8);
        }
    }

    #[test]
    fn arcs_tile_the_circle_and_inscribe_inside_it() {
        let cube = families::hypercube(4).unwrap().to_vpolytope().unwrap();
        let b3 = families::birkhoff(3).unwrap();
        let mut rng = Rng::new(23);
        for p in [&cube, &b3] {
            for _ in 0..10 {
                let f = geom::sample_frame(&mut rng, p.dim()).unwrap();
                let dec = arc_decomposition(p, &f).unwrap();
                dec.validate_partition(1e-9).unwrap();
                assert!((dec.total_measure() - TAU).abs() < 1e-6);
                // polygon inscribed in the unit circle at the arc
                // boundaries: its perimeter cannot exceed the circle's
                let pts: Vec<Point2> = dec
                    .arcs
                    .iter()
                    .map(|a| Point2::new(a.start.cos(), a.start.sin()))
                    .collect();
                assert!(pts.len() >= 3);
                assert!(geom::perimeter(&pts).unwrap() <= TAU + 1e-9);
            }
        }
    }

    #[test]
    fn orthogonal_fans_have_unit_delta() {
        for n in [3usize, 5] {
            let p = families::hypercube(n).unwrap().to_vpolytope().unwrap();
            let rep = delta_of_polytope(&p).unwrap();
            assert!((rep.delta - 1.0).abs() < 1e-12, "n={n}: {}", rep.delta);
            assert_eq!(rep.per_cone_minima.len(), 1 << n);
            assert!(rep.per_cone_minima.iter().all(|&d| (d - 1.0).abs() < 1e-12));
            assert!(rep.witness.0 < p.num_vertices());
            assert!(rep.witness.1 < n);
        }
    }

    #[test]
    fn polygon_delta_is_the_smallest_interior_angle_sine() {
        // square with one corner cut at 45 degrees: two 135-degree
        // vertices, sine 1/sqrt(2)
        let pentagon = VPolytope::from_points(&[
            vec![0.0, 0.0],
            vec![2.0, 0.0],
            vec![2.0, 1.0],
            vec![1.0, 2.0],
            vec![0.0, 2.0],
        ])
        .unwrap();
        let rep = delta_of_polytope(&pentagon).unwrap();
        assert!((rep.delta - 1.0 / 2.0f64.sqrt()).abs() < 1e-9, "{}", rep.delta);

        // right triangle with legs 1 and 2: sharpest angle has sine 1/sqrt(5)
        let tri =
            VPolytope::from_points(&[vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 2.0]]).unwrap();
        let rep = delta_of_polytope(&tri).unwrap();
        assert!((rep.delta - 1.0 / 5.0f64.sqrt()).abs() < 1e-9, "{}", rep.delta);
    }

    #[test]
    fn simplex_delta_is_inverse_sqrt_dimension() {
        let p = VPolytope::from_points(&[vec![0.0; 3], e(0, 3), e(1, 3), e(2, 3)]).unwrap();
        let rep = delta_of_polytope(&p).unwrap();
        assert!((rep.delta - 1.0 / 3.0f64.sqrt()).abs() < 1e-9, "{}", rep.delta);
    }

    #[test]
    fn closed_form_delta_matches_the_geometric_scan() {
        let expected = [
            (2usize, 1.0),
            (3, 3.0f64.sqrt() / 2.0),
            (4, 1.0 / 2.0f64.sqrt()),
        ];
        for (n, want) in expected {
            let formula = augmented_permutahedron_delta(n).unwrap();
            assert!((formula - want).abs() < 1e-12, "n={n}: {formula}");
            let p = families::augmented_permutahedron(n)
                .unwrap()
                .to_vpolytope()
                .unwrap();
            let geometric = delta_of_polytope(&p).unwrap().delta;
            assert!(
                (geometric - formula).abs() < 1e-9,
                "n={n}: geometric {geometric} vs formula {formula}"
            );
        }
        assert!(augmented_permutahedron_delta(1).is_err());
    }

    #[test]
    fn rotated_body_keeps_its_delta() {
        let pts = vec![vec![0.0; 3], e(0, 3), e(1, 3), e(2, 3)];
        let base = delta_of_polytope(&VPolytope::from_points(&pts).unwrap())
            .unwrap()
            .delta;
        let rotated = rotate(&pts, &[(0, 1, 0.7), (1, 2, 1.1), (0, 2, 0.4)]);
        let turned = delta_of_polytope(&VPolytope::from_points(&rotated).unwrap())
            .unwrap()
            .delta;
        assert!((base - turned).abs() < 1e-9, "{base} vs {turned}");
    }

    #[test]
    fn every_direction_lands_in_some_cone() {
        let bodies = [
            families::hypercube(3).unwrap().to_vpolytope().unwrap(),
            VPolytope::from_points(&[vec![0.0; 3], e(0, 3), e(1, 3), e(2, 3)]).unwrap(),
        ];
        let mut rng = Rng::new(31);
        for p in &bodies {
            let cones = p.normal_cones().unwrap();
            let matrices: Vec<Vec<Vec<f64>>> = cones
                .iter()
                .map(|c| {
                    let coords: Vec<Vec<f64>> = c.rays.clone();
                    ray_matrix(&coords)
                })
                .collect();
            for _ in 0..500 {
                let g = unit(&geom::sample_gaussian_vector(&mut rng, 3).unwrap());
                let covered = matrices
                    .iter()
                    .any(|m| {
                        geom::solve_system(m, &g)
                            .map(|l| l.iter().all(|&x| x >= -1e-9))
                            .unwrap_or(false)
                    });
                assert!(covered, "direction {g:?} missed by every cone");
            }
        }
    }

    #[test]
    fn ball_sampler_respects_the_cone_and_its_rate() {
        let rays = vec![e(0, 2), e(1, 2)];
        let mut rng = Rng::new(41);
        let sample = sample_cone_ball(&rays, &mut rng, 4000).unwrap();
        assert_eq!(sample.points.len(), 4000);
        assert!(
            (sample.acceptance_rate - 0.25).abs() < 0.02,
            "rate {}",
            sample.acceptance_rate
        );
        let (mut sx, mut sy, mut sxx, mut syy) = (0.0, 0.0, 0.0, 0.0);
        for p in &sample.points {
            assert!(geom::norm(p) <= 1.0 + 1e-12);
            assert!(p.iter().all(|&c| c >= -1e-12), "{p:?}");
            sx += p[0];
            sy += p[1];
            sxx += p[0] * p[0];
            syy += p[1] * p[1];
        }
        let n = 4000.0f64;
        let (mx, my) = (sx / n, sy / n);
        let vx = (sxx / n - mx * mx).max(0.0);
        let vy = (syy / n - my * my).max(0.0);
        let se = ((vx + vy) / n).sqrt();
        assert!((mx - my).abs() <= 3.0 * se, "mx {mx} my {my} se {se}");
    }

    #[test]
    fn sphere_sampler_stays_on_the_sphere_at_octant_rate() {
        let rays = vec![e(0, 3), e(1, 3), e(2, 3)];
        let mut rng = Rng::new(42);
        let sample = sample_cone_sphere(&rays, &mut rng, 4000).unwrap();
        for p in &sample.points {
            assert!((geom::norm(p) - 1.0).abs() <= 1e-12);
            assert!(p.iter().all(|&c| c >= -1e-12));
        }
        assert!(
            (sample.acceptance_rate - 0.125).abs() < 0.02,
            "rate {}",
            sample.acceptance_rate
        );
    }

    #[test]
    fn sampler_is_deterministic_per_seed() {
        let rays = vec![e(0, 2), vec![1.0 / 2.0f64.sqrt(); 2]];
        let mut a = Rng::new(43);
        let mut b = Rng::new(43);
        let sa = sample_cone_ball(&rays, &mut a, 50).unwrap();
        let sb = sample_cone_ball(&rays, &mut b, 50).unwrap();
        assert_eq!(sa.points, sb.points);
    }

    #[test]
    fn skewed_cone_samples_are_certified_by_lp() {
        let rays = vec![e(0, 2), vec![1.0 / 2.0f64.sqrt(); 2]];
        let mut rng = Rng::new(44);
        let sample = sample_cone_ball(&rays, &mut rng, 60).unwrap();
        for p in &sample.points {
            // lambda >= 0 with sum_j lambda_j ray_j = p
            let mut cons = Vec::new();
            for i in 0..2 {
                cons.push(lp::Constraint::new(
                    vec![rays[0][i], rays[1][i]],
                    lp::Relation::Eq,
                    p[i],
                ));
            }
            for j in 0..2 {
                cons.push(lp::Constraint::new(e(j, 2), lp::Relation::Ge, -1e-9));
            }
            let out = lp::solve(&lp::LinearProgram {
                objective: None,
                constraints: cons,
                num_vars: 2,
            })
            .unwrap();
            assert!(out.is_feasible(), "{p:?} not in cone");
        }
    }

    #[test]
    fn dependent_rays_are_rejected() {
        let rays = vec![e(0, 2), e(0, 2)];
        let mut rng = Rng::new(45);
        assert!(matches!(
            sample_cone_ball(&rays, &mut rng, 1),
            Err(Error::RankDeficient(_))
        ));
        let rays = vec![e(0, 2), e(1, 2), vec![1.0, 1.0]];
        assert!(matches!(
            sample_cone_sphere(&rays, &mut rng, 1),
            Err(Error::RankDeficient(_))
        ));
    }

    #[test]
    fn sliver_cone_reports_too_thin() {
        let rays = vec![e(0, 2), unit(&[1.0, 1e-9])];
        let mut rng = Rng::new(46);
        match sample_cone_ball(&rays, &mut rng, 5) {
            Err(Error::TooThinCone { floor, proposals }) => {
                assert_eq!(floor, tol::CONE_RATE_FLOOR);
                assert!(proposals >= tol::CONE_MAX_PROPOSALS);
            }
            other => panic!("expected too-thin error, got {other:?}"),
        }
    }

    #[test]
    fn near_hyperplane_probability_respects_its_ceiling() {
        let rays = vec![e(0, 2), e(1, 2)];
        let mut rng = Rng::new(47);
        let chk = near_hyperplane_probability(&rays, 0, 0.1, 4000, &mut rng).unwrap();
        assert!((chk.h - 1.0).abs() < 1e-12);
        assert!((chk.bound - 0.21).abs() < 1e-12, "bound {}", chk.bound);
        assert!(chk.empirical > 0.0);
        assert!(
            chk.empirical <= chk.bound + 3.0 * chk.std_error,
            "{} vs {}",
            chk.empirical,
            chk.bound
        );

        // eps >= 1 makes the ceiling vacuous (a probability is at most 1)
        let chk = near_hyperplane_probability(&rays, 0, 1.0, 10, &mut rng).unwrap();
        assert!((chk.bound - 3.0).abs() < 1e-12);

        // shrinking eps drives the tail to zero
        let chk = near_hyperplane_probability(&rays, 0, 1e-3, 4000, &mut rng).unwrap();
        assert!(chk.empirical < 0.01, "{}", chk.empirical);

        assert!(near_hyperplane_probability(&rays, 2, 0.1, 10, &mut rng).is_err());
        assert!(near_hyperplane_probability(&rays, 0, 0.0, 10, &mut rng).is_err());
    }

    #[test]
    fn arrangement_distance_exceeds_its_floor() {
        let mut rng = Rng::new(48);
        let fixtures: Vec<Vec<Vec<f64>>> = vec![
            vec![e(0, 2), e(1, 2)],
            vec![e(0, 2), unit(&[1.0, 1.0])],
            vec![e(0, 3), e(1, 3), e(2, 3)],
        ];
        for rays in &fixtures {
            let k = rays.len();
            let sphere = mean_arrangement_distance_sphere(rays, 4000, &mut rng).unwrap();
            let ball = mean_arrangement_distance_ball(rays, 4000, &mut rng).unwrap();
            assert!((sphere.bound - sphere.h / (8.0 * (k * k) as f64)).abs() < 1e-15);
            assert!(
                sphere.empirical >= sphere.bound - 3.0 * sphere.std_error,
                "sphere {} vs {}",
                sphere.empirical,
                sphere.bound
            );
            assert!(
                ball.empirical >= ball.bound - 3.0 * ball.std_error,
                "ball {} vs {}",
                ball.empirical,
                ball.bound
            );
            // the min-distance grows along rays, so the sphere dominates
            assert!(
                sphere.empirical + 3.0 * (sphere.std_error + ball.std_error)
                    >= ball.empirical,
                "sphere {} < ball {}",
                sphere.empirical,
                ball.empirical
            );
        }
        let orthogonal = &fixtures[0];
        let chk = mean_arrangement_distance_sphere(orthogonal, 100, &mut rng).unwrap();
        assert!((chk.bound - 1.0 / 32.0).abs() < 1e-15);
    }
}
