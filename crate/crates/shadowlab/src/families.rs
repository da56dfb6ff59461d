//! Named polytope families used throughout the experiments.
//!
//! Everything that is a zonotope is built as one ([`Zonotope`] carries
//! exact combinatorics); the Birkhoff polytopes are vertex lists with
//! their classical edge criterion precomputed.

use crate::error::{Error, Result};
use crate::geom;
use crate::polytope::{VPolytope, Zonotope};
use crate::rng::Rng;
use rand::Rng as _;
use rand_distr::StandardNormal;

/// `[0, 1]^n` as a zonotope on the standard basis. `1 <= n <= 16`.
pub fn hypercube(n: usize) -> Result<Zonotope> {
    if n == 0 || n > 16 {
        return Err(Error::InvalidDimension(format!(
            "hypercube supports 1 <= n <= 16, got {n}"
        )));
    }
    let gens = (0..n)
        .map(|i| {
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            e
        })
        .collect();
    Zonotope::new(gens, vec![0.0; n])
}

/// Permutahedron: convex hull of all permutations of `(1, 2, ..., n)`,
/// realized as the zonotope with generators `e_i - e_j` (i < j) based at
/// `(1, 2, ..., n)`. `2 <= n <= 7`.
pub fn permutahedron(n: usize) -> Result<Zonotope> {
    if !(2..=7).contains(&n) {
        return Err(Error::InvalidDimension(format!(
            "permutahedron supports 2 <= n <= 7, got {n}"
        )));
    }
    let mut gens = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut g = vec![0.0; n];
            g[i] = 1.0;
            g[j] = -1.0;
            gens.push(g);
        }
    }
    let base = (1..=n).map(|i| i as f64).collect();
    Zonotope::new(gens, base)
}

/// Permutahedron thickened along the all-ones direction: the same
/// generators plus one unit generator `1/sqrt(n)`, which makes the body
/// full-dimensional (the plain permutahedron lives in a hyperplane).
/// `2 <= n <= 7`.
pub fn augmented_permutahedron(n: usize) -> Result<Zonotope> {
    let base = permutahedron(n)?;
    let mut gens = base.generators().to_vec();
    let s = (n as f64).sqrt();
    gens.push(vec![1.0 / s; n]);
    Zonotope::new(gens, base.base().to_vec())
}

/// Integer facet description of [`augmented_permutahedron`], one row per
/// facet. The two prism caps have normals `±(1,…,1)`; each side facet
/// extends a permutahedron facet `Σ_{i∈S} x_i ≤ const` along the prism
/// axis, so its normal is the projection `e_S − (|S|/n)·1`, made a
/// primitive integer row by scaling with `n/gcd(n, |S|)`. Only the
/// directions matter for minor bounds, so the cap offsets being
/// irrational is irrelevant.
pub fn augmented_permutahedron_facet_normals(n: usize) -> Result<Vec<Vec<i64>>> {
    if !(2..=7).contains(&n) {
        return Err(Error::InvalidDimension(format!(
            "augmented permutahedron supports 2 <= n <= 7, got {n}"
        )));
    }
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(1 << n);
    for mask in 1u32..((1 << n) - 1) {
        let size = i64::from(mask.count_ones());
        let g = gcd(n as i64, size);
        let row = (0..n)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    (n as i64 - size) / g
                } else {
                    -size / g
                }
            })
            .collect();
        rows.push(row);
    }
    rows.push(vec![1; n]);
    rows.push(vec![-1; n]);
    Ok(rows)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    // lexicographic backtracking; n <= 5 so brute force is plenty
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// Is the permutation `p . q^-1` a single cycle on its non-fixed points?
/// That is the classical adjacency criterion for permutation matrices.
fn single_cycle(p: &[usize], q: &[usize]) -> bool {
    let n = p.len();
    // r = p o q^-1
    let mut qinv = vec![0usize; n];
    for (i, &qi) in q.iter().enumerate() {
        qinv[qi] = i;
    }
    let r: Vec<usize> = (0..n).map(|i| p[qinv[i]]).collect();
    let moved: Vec<usize> = (0..n).filter(|&i| r[i] != i).collect();
    if moved.is_empty() {
        return false; // identical permutations
    }
    let mut seen = 1usize;
    let mut at = r[moved[0]];
    while at != moved[0] {
        seen += 1;
        at = r[at];
    }
    seen == moved.len()
}

/// Birkhoff polytope: convex hull of the `n!` permutation matrices in
/// `R^(n^2)` (row-major flattening), with the single-cycle edge criterion
/// precomputed. `2 <= n <= 5`.
pub fn birkhoff(n: usize) -> Result<VPolytope> {
    if !(2..=5).contains(&n) {
        return Err(Error::InvalidDimension(format!(
            "birkhoff supports 2 <= n <= 5, got {n}"
        )));
    }
    let perms = permutations(n);
    let vertices: Vec<Vec<f64>> = perms
        .iter()
        .map(|p| {
            let mut m = vec![0.0; n * n];
            for (row, &col) in p.iter().enumerate() {
                m[row * n + col] = 1.0;
            }
            m
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..perms.len() {
        for j in (i + 1)..perms.len() {
            if single_cycle(&perms[i], &perms[j]) {
                edges.push((i, j));
            }
        }
    }
    VPolytope::with_edges(vertices, edges)
}

fn uniform_in_orthogonal_ball(rng: &mut Rng, axis: usize, n: usize, eps: f64) -> Vec<f64> {
    // uniform point in the eps-ball of the hyperplane orthogonal to e_axis
    if n <= 1 {
        return vec![0.0; n]; // the orthogonal hyperplane is trivial
    }
    loop {
        let mut p: Vec<f64> = (0..n)
            .map(|i| {
                if i == axis {
                    0.0
                } else {
                    rng.sample(StandardNormal)
                }
            })
            .collect();
        let norm = geom::norm(&p);
        if norm == 0.0 {
            continue;
        }
        let d = (n - 1) as f64;
        let r = eps * rng.gen_range(0.0f64..1.0).powf(1.0 / d);
        for x in &mut p {
            *x *= r / norm;
        }
        return p;
    }
}

/// `k` unit generators drawn near-parallel to `e_1`: each is
/// `normalize(e_1 + p)` with `p` uniform in the `eps`-ball of the
/// hyperplane orthogonal to `e_1`. Ambient dimension is `max(k, 2)`;
/// `0 < eps <= 0.1` keeps the generators pairwise distinct in practice
/// while the body stays segment-like.
pub fn zn_parallel(k: usize, eps: f64, rng: &mut Rng) -> Result<Zonotope> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "zn_parallel needs at least one generator".into(),
        ));
    }
    if !(eps > 0.0 && eps <= 0.1) {
        return Err(Error::InvalidParameter(format!(
            "zn_parallel needs 0 < eps <= 0.1, got {eps}"
        )));
    }
    let n = k.max(2);
    let gens = (0..k)
        .map(|_| {
            let mut g = uniform_in_orthogonal_ball(rng, 0, n, eps);
            g[0] = 1.0;
            let norm = geom::norm(&g);
            g.into_iter().map(|x| x / norm).collect()
        })
        .collect();
    Zonotope::new(gens, vec![0.0; n])
}

/// The standard basis generators, optionally doubled by perturbed unit
/// copies: for `eps > 0` each `e_i` is joined by
/// `normalize(e_i + p_i)` with `p_i` uniform in the `eps`-ball of the
/// hyperplane orthogonal to `e_i`; for `eps == 0` the result is the cube
/// on the plain basis. `2 <= n <= 10`, `0 <= eps <= 0.1`.
pub fn zn_basis(n: usize, eps: f64, rng: &mut Rng) -> Result<Zonotope> {
    if !(2..=10).contains(&n) {
        return Err(Error::InvalidDimension(format!(
            "zn_basis supports 2 <= n <= 10, got {n}"
        )));
    }
    if !(0.0..=0.1).contains(&eps) {
        return Err(Error::InvalidParameter(format!(
            "zn_basis needs 0 <= eps <= 0.1, got {eps}"
        )));
    }
    let mut gens: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            e
        })
        .collect();
    if eps > 0.0 {
        for i in 0..n {
            let mut g = uniform_in_orthogonal_ball(rng, i, n, eps);
            g[i] = 1.0;
            let norm = geom::norm(&g);
            gens.push(g.into_iter().map(|x| x / norm).collect());
        }
    }
    Zonotope::new(gens, vec![0.0; n])
}
