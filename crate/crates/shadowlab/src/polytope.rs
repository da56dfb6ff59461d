//! Vertex-list polytopes and zonotopes.
//!
//! A [`VPolytope`] is the convex hull of an explicit vertex list; its edge
//! graph is computed lazily, one feasibility LP per vertex pair, and cached.
//! A [`Zonotope`] is a Minkowski sum of segments; its combinatorics come
//! from sign vectors over parallel classes of generators, which is both
//! faster and exact, so zonotope routines avoid the LP path entirely where
//! they can.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::geom;
use crate::lp;
use crate::tol;

/// Hard cap on parallel classes for zonotope vertex enumeration
/// (`2^(K-1)` feasibility LPs).
pub const MAX_ENUM_CLASSES: usize = 20;
/// Hard cap on parallel classes for the sign-vector diameter scan.
pub const MAX_DIAMETER_CLASSES: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeStats {
    /// Number of edges.
    pub count: usize,
    /// Shortest edge length.
    pub min_len: f64,
    /// Longest edge length.
    pub max_len: f64,
}

/// The normal cone of a polytope at a simple vertex, expressed in an
/// orthonormal coordinate system for the polytope's affine hull. The rays
/// are unit vectors and there are exactly as many as the polytope's
/// intrinsic dimension.
#[derive(Debug, Clone)]
pub struct NormalCone {
    pub vertex: usize,
    pub rays: Vec<Vec<f64>>,
}

/// Convex hull of an explicit vertex list.
#[derive(Debug)]
pub struct VPolytope {
    vertices: Vec<Vec<f64>>,
    dim: usize,
    edges: OnceLock<Vec<(usize, usize)>>,
}

impl Clone for VPolytope {
    fn clone(&self) -> Self {
        let edges = OnceLock::new();
        if let Some(e) = self.edges.get() {
            let _ = edges.set(e.clone());
        }
        VPolytope {
            vertices: self.vertices.clone(),
            dim: self.dim,
            edges,
        }
    }
}

fn validate_point_list(points: &[Vec<f64>]) -> Result<usize> {
    if points.is_empty() {
        return Err(Error::EmptyInput("point list".into()));
    }
    let n = points[0].len();
    if n == 0 {
        return Err(Error::InvalidDimension("points must have dimension >= 1".into()));
    }
    for p in points {
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.len(),
            });
        }
        geom::validate_finite(p, "point list")?;
    }
    Ok(n)
}

impl VPolytope {
    /// Build from an arbitrary point cloud: exact duplicates are merged and
    /// non-extreme points are removed (each survivor carries an LP
    /// certificate of extremality).
    pub fn from_points(points: &[Vec<f64>]) -> Result<Self> {
        validate_point_list(points)?;
        let scale = points
            .iter()
            .flat_map(|p| p.iter())
            .fold(0.0f64, |a, x| a.max(x.abs()));
        let merge_tol = tol::DEDUP_TOL * scale.max(1.0);
        let mut dedup: Vec<Vec<f64>> = Vec::new();
        for p in points {
            if !dedup.iter().any(|q| geom::dist(q, p) <= merge_tol) {
                dedup.push(p.clone());
            }
        }
        let mut vertices = Vec::new();
        for i in 0..dedup.len() {
            if lp::is_extreme(&dedup, i)? {
                vertices.push(dedup[i].clone());
            }
        }
        Self::from_vertices_unchecked(vertices)
    }

    /// Build from points already known to be vertices (no extremality
    /// check). Finiteness and dimension consistency are still validated.
    pub fn from_vertices_unchecked(vertices: Vec<Vec<f64>>) -> Result<Self> {
        let dim = validate_point_list(&vertices)?;
        Ok(VPolytope {
            vertices,
            dim,
            edges: OnceLock::new(),
        })
    }

    /// Build with a caller-supplied edge list. Indices are validated and
    /// normalized to `(min, max)` order, but the edges themselves are
    /// trusted — a wrong list yields wrong downstream statistics, which is
    /// exactly what the consistency checks are there to catch.
    pub fn with_edges(vertices: Vec<Vec<f64>>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let p = Self::from_vertices_unchecked(vertices)?;
        let nv = p.vertices.len();
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, j) in edges {
            if i == j || i >= nv || j >= nv {
                return Err(Error::InvalidParameter(format!(
                    "edge ({i}, {j}) is not a pair of distinct vertex indices below {nv}"
                )));
            }
            normalized.push((i.min(j), i.max(j)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        let _ = p.edges.set(normalized);
        Ok(p)
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Edge list as index pairs `(i, j)` with `i < j`, computed on first
    /// use by one feasibility LP per vertex pair and cached.
    pub fn edges(&self) -> Result<&[(usize, usize)]> {
        if let Some(e) = self.edges.get() {
            return Ok(e);
        }
        let nv = self.vertices.len();
        let mut found = Vec::new();
        for i in 0..nv {
            for j in (i + 1)..nv {
                if lp::is_edge(&self.vertices, i, j)? {
                    found.push((i, j));
                }
            }
        }
        let _ = self.edges.set(found);
        Ok(self.edges.get().expect("just set"))
    }

    /// Shortest/longest edge length and edge count.
    pub fn edge_stats(&self) -> Result<EdgeStats> {
        let edges = self.edges()?;
        if edges.is_empty() {
            return Err(Error::EmptyInput(
                "polytope has no edges (single vertex)".into(),
            ));
        }
        let mut min_len = f64::INFINITY;
        let mut max_len = 0.0f64;
        for &(i, j) in edges {
            let l = geom::dist(&self.vertices[i], &self.vertices[j]);
            min_len = min_len.min(l);
            max_len = max_len.max(l);
        }
        Ok(EdgeStats {
            count: edges.len(),
            min_len,
            max_len,
        })
    }

    /// Geometric diameter: the largest pairwise vertex distance.
    pub fn gdiam(&self) -> Result<f64> {
        geom::gdiam(&self.vertices)
    }

    /// Orthonormal basis of the affine hull's direction space, with the
    /// first vertex as origin.
    fn affine_basis(&self) -> Vec<Vec<f64>> {
        let dirs: Vec<Vec<f64>> = self.vertices[1..]
            .iter()
            .map(|v| geom::sub(v, &self.vertices[0]))
            .collect();
        geom::orthonormal_basis(&dirs, tol::DEDUP_TOL)
    }

    /// Intrinsic (affine) dimension.
    pub fn affine_dim(&self) -> usize {
        self.affine_basis().len()
    }

    /// Normal cones at every vertex, in affine-hull coordinates.
    ///
    /// Requires the polytope to be simple: each vertex must have exactly
    /// `affine_dim` neighbors. At such a vertex with incident edge
    /// directions `d_1..d_k` the cone is simplicial, generated by the rays
    /// `r_j` with `r_j . d_i = -[i == j]`; those are returned normalized.
    pub fn normal_cones(&self) -> Result<Vec<NormalCone>> {
        let basis = self.affine_basis();
        let d = basis.len();
        if d == 0 {
            return Err(Error::InvalidDimension(
                "normal cones need a polytope with at least one edge".into(),
            ));
        }
        let edges = self.edges()?;
        let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
        for &(i, j) in edges {
            neighbors[i].push(j);
            neighbors[j].push(i);
        }
        let reduce = |x: &[f64]| -> Vec<f64> {
            basis
                .iter()
                .map(|b| {
                    b.iter()
                        .zip(x.iter().zip(&self.vertices[0]))
                        .map(|(bi, (xi, oi))| bi * (xi - oi))
                        .sum()
                })
                .collect()
        };
        let mut cones = Vec::with_capacity(self.vertices.len());
        for (v, nbrs) in neighbors.iter().enumerate() {
            if nbrs.len() != d {
                return Err(Error::NotSimple {
                    vertex: v,
                    degree: nbrs.len(),
                    expected: d,
                });
            }
            let here = reduce(&self.vertices[v]);
            let dirs: Vec<Vec<f64>> = nbrs
                .iter()
                .map(|&w| geom::sub(&reduce(&self.vertices[w]), &here))
                .collect();
            let mut rays = Vec::with_capacity(d);
            for j in 0..d {
                let mut rhs = vec![0.0; d];
                rhs[j] = -1.0;
                let r = geom::solve_system(&dirs, &rhs)?;
                let n = geom::norm(&r);
                if n <= 0.0 {
                    return Err(Error::RankDeficient(format!(
                        "degenerate edge directions at vertex {v}"
                    )));
                }
                rays.push(r.into_iter().map(|x| x / n).collect());
            }
            cones.push(NormalCone { vertex: v, rays });
        }
        Ok(cones)
    }
}

/// Minkowski sum of segments `[0, g_i]` translated by `base`.
#[derive(Debug, Clone)]
pub struct Zonotope {
    generators: Vec<Vec<f64>>,
    base: Vec<f64>,
}

/// One parallel class of generators: indices of all generators parallel
/// (up to sign) to the representative, plus the aligned/anti-aligned sums
/// used when reading vertices off a sign vector.
#[derive(Debug, Clone)]
pub struct ParallelClass {
    pub members: Vec<usize>,
    /// Sum of members aligned with the representative direction.
    pub positive_sum: Vec<f64>,
    /// Sum of members pointing against it.
    pub negative_sum: Vec<f64>,
}

impl ParallelClass {
    /// Displacement across the class: the edge vector this class
    /// contributes, `positive_sum - negative_sum`.
    pub fn span_vector(&self) -> Vec<f64> {
        geom::sub(&self.positive_sum, &self.negative_sum)
    }
}

impl Zonotope {
    pub fn new(generators: Vec<Vec<f64>>, base: Vec<f64>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyInput("zonotope generators".into()));
        }
        let n = validate_point_list(&generators)?;
        if base.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: base.len(),
            });
        }
        geom::validate_finite(&base, "zonotope base")?;
        for (i, g) in generators.iter().enumerate() {
            if geom::norm(g) == 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "generator {i} is the zero vector"
                )));
            }
        }
        Ok(Zonotope { generators, base })
    }

    pub fn generators(&self) -> &[Vec<f64>] {
        &self.generators
    }

    pub fn base(&self) -> &[f64] {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.len()
    }

    /// Group generators into parallel classes (parallel up to sign, within
    /// a relative tolerance).
    pub fn parallel_classes(&self) -> Vec<ParallelClass> {
        let n = self.dim();
        let mut classes: Vec<(Vec<f64>, ParallelClass)> = Vec::new(); // (unit rep, class)
        for (i, g) in self.generators.iter().enumerate() {
            let norm = geom::norm(g);
            let unit: Vec<f64> = g.iter().map(|x| x / norm).collect();
            let mut placed = false;
            for (rep, class) in classes.iter_mut() {
                let d = geom::dot(&unit, rep);
                let residual: f64 = unit
                    .iter()
                    .zip(rep.iter())
                    .map(|(u, r)| (u - d * r) * (u - d * r))
                    .sum::<f64>()
                    .sqrt();
                if residual <= tol::DEDUP_TOL.max(1e-12) {
                    class.members.push(i);
                    let target = if d > 0.0 {
                        &mut class.positive_sum
                    } else {
                        &mut class.negative_sum
                    };
                    for (t, gi) in target.iter_mut().zip(g.iter()) {
                        *t += gi;
                    }
                    placed = true;
                    break;
                }
            }
            if !placed {
                classes.push((
                    unit,
                    ParallelClass {
                        members: vec![i],
                        positive_sum: g.clone(),
                        negative_sum: vec![0.0; n],
                    },
                ));
            }
        }
        classes.into_iter().map(|(_, c)| c).collect()
    }

    /// The vertex selected by a full sign vector over the parallel
    /// classes: aligned members are included for `+1` classes,
    /// anti-aligned members for `-1` classes.
    fn vertex_of_signs(&self, classes: &[ParallelClass], signs: &[i8]) -> Vec<f64> {
        let mut v = self.base.clone();
        for (class, &s) in classes.iter().zip(signs) {
            let add = if s > 0 {
                &class.positive_sum
            } else {
                &class.negative_sum
            };
            for (vi, ai) in v.iter_mut().zip(add) {
                *vi += ai;
            }
        }
        v
    }

    /// Representative unit direction per class (the span vector,
    /// normalized).
    fn class_directions(classes: &[ParallelClass]) -> Vec<Vec<f64>> {
        classes
            .iter()
            .map(|c| {
                let w = c.span_vector();
                let n = geom::norm(&w);
                w.into_iter().map(|x| x / n).collect()
            })
            .collect()
    }

    /// All realizable sign vectors with their vertices. A sign vector is a
    /// vertex exactly when some direction `c` satisfies
    /// `sign_k * (c . u_k) > 0` for every class `k`; that is decided by a
    /// feasibility LP. Antipodal symmetry halves the enumeration.
    fn enumerate_sign_vertices(&self) -> Result<(Vec<ParallelClass>, Vec<(Vec<i8>, Vec<f64>)>)> {
        let classes = self.parallel_classes();
        let k = classes.len();
        if k > MAX_ENUM_CLASSES {
            return Err(Error::SizeCap(format!(
                "zonotope has {k} parallel classes; vertex enumeration is capped at {MAX_ENUM_CLASSES}"
            )));
        }
        let dirs = Self::class_directions(&classes);
        let n = self.dim();
        let mut out = Vec::new();
        let mut signs = vec![1i8; k];
        for mask in 0u64..(1u64 << (k.saturating_sub(1))) {
            signs[0] = 1;
            for (b, s) in signs.iter_mut().enumerate().skip(1) {
                *s = if (mask >> (b - 1)) & 1 == 1 { -1 } else { 1 };
            }
            let constraints: Vec<lp::Constraint> = dirs
                .iter()
                .zip(&signs)
                .map(|(u, &s)| {
                    let coeffs: Vec<f64> = u.iter().map(|x| f64::from(s) * x).collect();
                    lp::Constraint::new(coeffs, lp::Relation::Ge, 1.0)
                })
                .collect();
            let feasible = lp::solve(&lp::LinearProgram {
                objective: None,
                constraints,
                num_vars: n,
            })?
            .is_feasible();
            if feasible {
                out.push((signs.clone(), self.vertex_of_signs(&classes, &signs)));
                let flipped: Vec<i8> = signs.iter().map(|s| -s).collect();
                let v = self.vertex_of_signs(&classes, &flipped);
                out.push((flipped, v));
            }
        }
        Ok((classes, out))
    }

    /// Vertex list via sign-vector enumeration.
    pub fn vertices(&self) -> Result<Vec<Vec<f64>>> {
        Ok(self
            .enumerate_sign_vertices()?
            .1
            .into_iter()
            .map(|(_, v)| v)
            .collect())
    }

    /// Convert to a vertex-list polytope with the edge graph read off the
    /// sign vectors: two vertices are adjacent exactly when their sign
    /// vectors differ in a single parallel class.
    pub fn to_vpolytope(&self) -> Result<VPolytope> {
        let (_, sv) = self.enumerate_sign_vertices()?;
        let vertices: Vec<Vec<f64>> = sv.iter().map(|(_, v)| v.clone()).collect();
        let mut edges = Vec::new();
        for i in 0..sv.len() {
            for j in (i + 1)..sv.len() {
                let diff = sv[i]
                    .0
                    .iter()
                    .zip(&sv[j].0)
                    .filter(|(a, b)| a != b)
                    .count();
                if diff == 1 {
                    edges.push((i, j));
                }
            }
        }
        VPolytope::with_edges(vertices, edges)
    }

    /// Exact edge statistics without vertex enumeration: every parallel
    /// class contributes edges that are translates of its span vector, so
    /// the edge lengths are exactly the span-vector norms.
    pub fn edge_lengths(&self) -> Vec<f64> {
        self.parallel_classes()
            .iter()
            .map(|c| geom::norm(&c.span_vector()))
            .collect()
    }

    /// Geometric diameter by a Gray-code scan over sign vectors of the
    /// centrally symmetric difference body: `max |sum_k s_k * w_k|` over
    /// `s in {-1,+1}^K`, `w_k` the class span vectors.
    pub fn diameter(&self) -> Result<f64> {
        let classes = self.parallel_classes();
        let k = classes.len();
        if k > MAX_DIAMETER_CLASSES {
            return Err(Error::SizeCap(format!(
                "zonotope has {k} parallel classes; the diameter scan is capped at {MAX_DIAMETER_CLASSES}"
            )));
        }
        let spans: Vec<Vec<f64>> = classes.iter().map(|c| c.span_vector()).collect();
        let n = self.dim();
        // start at all +1; Gray code flips one sign per step, fixing the
        // last class by antipodal symmetry
        let mut current: Vec<f64> = vec![0.0; n];
        for w in &spans {
            for (c, wi) in current.iter_mut().zip(w) {
                *c += wi;
            }
        }
        let mut signs = vec![1.0f64; k];
        let mut best = geom::norm(&current);
        let steps = if k >= 2 { (1u64 << (k - 1)) - 1 } else { 0 };
        for step in 1..=steps {
            let flip = step.trailing_zeros() as usize; // standard reflected Gray order
            let delta = -2.0 * signs[flip];
            signs[flip] += delta;
            for (c, wi) in current.iter_mut().zip(&spans[flip]) {
                *c += delta * wi;
            }
            best = best.max(geom::norm(&current));
        }
        Ok(best)
    }
}
