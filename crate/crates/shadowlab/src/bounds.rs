//! Closed-form constants and two-sided bounds for the expected number
//! of shadow vertices, each one checked against measurement.
//!
//! The load-bearing constant is `E|B₁|`, the expected absolute first
//! coordinate of a uniform point on the unit sphere: a random segment of
//! length ℓ casts a shadow of expected length `2·E|B₁|·ℓ`, and summing
//! that over edges against the shadow's perimeter yields the sandwich
//! `2·gdiam/M ≤ E[shadow vertices] ≤ π·gdiam/(C·m)` with `m, M` the
//! extreme edge lengths and `C` the expected planar projection norm of a
//! unit vector. Everything downstream (standard-form, lattice, rational
//! bounds, and the δ ≥ 1/(nΔ²) floor) specializes that sandwich with
//! coarser but checkable surrogates for `gdiam` and `m`.

use crate::error::{Error, Result};
use crate::fan;
use crate::polytope::{VPolytope, Zonotope};
use crate::rng::Rng;
use crate::shadow::{self, ShadowEstimate};
use statrs::function::gamma::ln_gamma;
use std::f64::consts::PI;

/// Γ(n/2) / Γ((n−1)/2), via log-gamma so large n stays finite.
fn gamma_ratio(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidDimension(format!(
            "sphere-coordinate constants need n >= 2, got {n}"
        )));
    }
    let nf = n as f64;
    Ok((ln_gamma(nf / 2.0) - ln_gamma((nf - 1.0) / 2.0)).exp())
}

/// `E|B₁|` for a uniform point of the unit sphere in ℝⁿ:
/// `(2/(n−1)) · Γ(n/2)/(√π · Γ((n−1)/2))`.
///
/// The normalization keeps the coordinate density integrating to 1 and
/// reproduces the analytic special cases (`2/π` at n = 2, exactly `1/2`
/// at n = 3 by the hat-box theorem).
pub fn expected_abs_coordinate(n: usize) -> Result<f64> {
    Ok(2.0 / ((n as f64 - 1.0) * PI.sqrt()) * gamma_ratio(n)?)
}

/// Two-sided enclosure of [`expected_abs_coordinate`] from the classical
/// gamma-ratio estimates `√(x − 1/4) ≤ Γ(x + 1/2)/Γ(x) ≤ (2x−1)/√(4x−3)`
/// at `x = (n−1)/2`, i.e. `√(2n−3)/2 ≤ Γ(n/2)/Γ((n−1)/2) ≤ (n−2)/√(2n−5)`.
/// At n = 2 the classical upper estimate does not apply and the trivial
/// `Γ(1)/Γ(1/2) = 1/√π ≤ 1` takes its place.
pub fn expected_abs_coordinate_bracket(n: usize) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::InvalidDimension(format!(
            "bracket needs n >= 2, got {n}"
        )));
    }
    let nf = n as f64;
    let scale = 2.0 / ((nf - 1.0) * PI.sqrt());
    let lo = (2.0 * nf - 3.0).sqrt() / 2.0;
    let hi = if n == 2 {
        1.0
    } else {
        (nf - 2.0) / (2.0 * nf - 5.0).sqrt()
    };
    Ok((scale * lo, scale * hi))
}

/// Density of one coordinate of a uniform point on the unit sphere in
/// ℝⁿ: `Γ(n/2)/(√π·Γ((n−1)/2)) · (1−t²)^((n−3)/2)` for |t| ≤ 1, zero
/// outside. At t = ±1 this is the two-sided limit (+∞ when n = 2, where
/// the density has an integrable endpoint singularity).
pub fn coordinate_density(n: usize, t: f64) -> Result<f64> {
    let c = gamma_ratio(n)? / PI.sqrt();
    if t.abs() > 1.0 {
        return Ok(0.0);
    }
    Ok(c * (1.0 - t * t).powf((n as f64 - 3.0) / 2.0))
}

/// ∫₋₁¹ of [`coordinate_density`] by Simpson's rule after substituting
/// t = sin φ, which rewrites the integrand as `c·cos^(n−2)φ` on
/// [−π/2, π/2] and removes the n = 2 endpoint singularity. Equals 1 to
/// quadrature accuracy when the normalization constant is right.
pub fn density_quadrature(n: usize) -> Result<f64> {
    let c = gamma_ratio(n)? / PI.sqrt();
    let f = |phi: f64| c * phi.cos().powi(n as i32 - 2);
    Ok(simpson(-PI / 2.0, PI / 2.0, 20_000, f))
}

/// Simpson's rule with `steps` (even) subintervals.
fn simpson(a: f64, b: f64, steps: usize, f: impl Fn(f64) -> f64) -> f64 {
    debug_assert!(steps % 2 == 0);
    let h = (b - a) / steps as f64;
    let mut sum = f(a) + f(b);
    for i in 1..steps {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(a + h * i as f64);
    }
    sum * h / 3.0
}

/// `E‖(B₁,B₂)‖₂` for a uniform point of the unit sphere: the expected
/// shadow length of a unit segment under a random frame. Exact form
/// `Γ(3/2)·Γ(n/2)/Γ((n+1)/2)`; equals 1 at n = 2 (the projection is the
/// identity up to rotation), π/4 at n = 3, 2/3 at n = 4.
pub fn projection_norm_constant(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidDimension(format!(
            "projection constant needs n >= 2, got {n}"
        )));
    }
    let nf = n as f64;
    Ok((ln_gamma(1.5) + ln_gamma(nf / 2.0) - ln_gamma((nf + 1.0) / 2.0)).exp())
}

/// Bracket `[√2·E|B₁|, 2·E|B₁|]` for [`projection_norm_constant`], from
/// the planar norm sandwich `‖·‖₁/√2 ≤ ‖·‖₂ ≤ ‖·‖₁` and
/// `E‖(B₁,B₂)‖₁ = 2·E|B₁|`. Upper bounds built from the bracket's lower
/// end stay valid without knowing the constant exactly.
pub fn projection_norm_bracket(n: usize) -> Result<(f64, f64)> {
    let e = expected_abs_coordinate(n)?;
    Ok((2.0f64.sqrt() * e, 2.0 * e))
}

/// A convex body given either by its vertices or by zonotope generators.
#[derive(Debug, Clone)]
pub enum Body {
    Polytope(VPolytope),
    Zonotope(Zonotope),
}

impl Body {
    pub fn dim(&self) -> usize {
        match self {
            Body::Polytope(p) => p.dim(),
            Body::Zonotope(z) => z.dim(),
        }
    }

    /// Largest pairwise vertex distance.
    pub fn gdiam(&self) -> Result<f64> {
        match self {
            Body::Polytope(p) => p.gdiam(),
            Body::Zonotope(z) => z.diameter(),
        }
    }

    /// (shortest, longest) edge length.
    pub fn edge_range(&self) -> Result<(f64, f64)> {
        match self {
            Body::Polytope(p) => {
                let s = p.edge_stats()?;
                Ok((s.min_len, s.max_len))
            }
            Body::Zonotope(z) => {
                let lens = z.edge_lengths();
                let min = lens.iter().cloned().fold(f64::INFINITY, f64::min);
                let max = lens.iter().cloned().fold(0.0f64, f64::max);
                if !min.is_finite() {
                    return Err(Error::EmptyInput("zonotope edge lengths".into()));
                }
                Ok((min, max))
            }
        }
    }

    /// Monte Carlo estimate of the expected shadow vertex count.
    pub fn estimate_shadow(&self, trials: u64, rng: &Rng) -> Result<ShadowEstimate> {
        match self {
            Body::Polytope(p) => shadow::estimate_shadow_size(p.vertices(), trials, rng),
            Body::Zonotope(z) => shadow::estimate_zonotope_shadow_size(z, trials, rng),
        }
    }

    /// Vertex representation (enumerates zonotope vertices; capped).
    pub fn to_vpolytope(&self) -> Result<VPolytope> {
        match self {
            Body::Polytope(p) => Ok(p.clone()),
            Body::Zonotope(z) => z.to_vpolytope(),
        }
    }
}

/// A two-sided bound pinched around a measurement.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub lower: f64,
    pub estimate: f64,
    pub std_error: f64,
    pub upper: f64,
    /// `lower − 3·std_error ≤ estimate ≤ upper + 3·std_error`.
    pub satisfied: bool,
    /// estimate/lower: how loose the lower end is.
    pub slack_lower: f64,
    /// upper/estimate: how loose the upper end is.
    pub slack_upper: f64,
}

fn bound_report(name: &str, lower: f64, upper: f64, est: &ShadowEstimate) -> BoundReport {
    let satisfied =
        lower - 3.0 * est.std_err <= est.mean && est.mean <= upper + 3.0 * est.std_err;
    BoundReport {
        name: name.to_owned(),
        lower,
        estimate: est.mean,
        std_error: est.std_err,
        upper,
        satisfied,
        slack_lower: est.mean / lower,
        slack_upper: upper / est.mean,
    }
}

/// The deterministic ends of the sandwich on the expected shadow size:
/// `(2·gdiam/M, π·gdiam/(C_low·m))`. `C_low` is the conservative lower
/// end of [`projection_norm_bracket`], so the upper end is a guarantee
/// rather than a point-estimate comparison.
pub fn shadow_sandwich_bounds(body: &Body) -> Result<(f64, f64)> {
    let gd = body.gdiam()?;
    let (m, big_m) = body.edge_range()?;
    let (c_low, _) = projection_norm_bracket(body.dim())?;
    Ok((2.0 * gd / big_m, PI * gd / (c_low * m)))
}

/// Wrap an already-measured estimate in the sandwich verdict.
pub fn shadow_sandwich_report(body: &Body, est: &ShadowEstimate) -> Result<BoundReport> {
    let (lower, upper) = shadow_sandwich_bounds(body)?;
    Ok(bound_report("shadow-sandwich", lower, upper, est))
}

/// The sandwich `2·gdiam/M ≤ E[shadow vertices] ≤ π·gdiam/(C_low·m)`,
/// with the estimate measured by the shadow engine.
pub fn check_shadow_sandwich(body: &Body, trials: u64, rng: &Rng) -> Result<BoundReport> {
    let est = body.estimate_shadow(trials, rng)?;
    shadow_sandwich_report(body, &est)
}

/// Extreme nonzero vertex coordinates of a standard-form polytope.
#[derive(Debug, Clone, Copy)]
pub struct KmParameters {
    /// Largest nonzero vertex coordinate.
    pub gamma: f64,
    /// Smallest nonzero vertex coordinate.
    pub delta_km: f64,
}

/// Scan the nonzero vertex coordinates (threshold 1e-12) of a
/// componentwise-nonnegative polytope.
pub fn km_parameters(p: &VPolytope) -> Result<KmParameters> {
    let mut gamma = 0.0f64;
    let mut delta_km = f64::INFINITY;
    for v in p.vertices() {
        for &x in v {
            if x < -1e-12 {
                return Err(Error::NotStandardForm(format!(
                    "vertex coordinate {x} is negative"
                )));
            }
            if x > 1e-12 {
                gamma = gamma.max(x);
                delta_km = delta_km.min(x);
            }
        }
    }
    if !delta_km.is_finite() {
        return Err(Error::NotStandardForm(
            "every vertex coordinate is zero".into(),
        ));
    }
    Ok(KmParameters { gamma, delta_km })
}

/// Surrogate upper bound `π·√n·γ/(C_low·δ_km)` for a standard-form
/// polytope — `gdiam ≤ √n·γ` since the body fits in `[0,γ]ⁿ`, and
/// `δ_km` stands in for the shortest edge — reported as a sandwich with
/// the always-valid lower `2·gdiam/M`.
pub fn check_km_surrogate(p: &VPolytope, trials: u64, rng: &Rng) -> Result<BoundReport> {
    let km = km_parameters(p)?;
    let stats = p.edge_stats()?;
    let gd = p.gdiam()?;
    let (c_low, _) = projection_norm_bracket(p.dim())?;
    let est = shadow::estimate_shadow_size(p.vertices(), trials, rng)?;
    let upper = PI * (p.dim() as f64).sqrt() * km.gamma / (c_low * km.delta_km);
    Ok(bound_report(
        "km-surrogate",
        2.0 * gd / stats.max_len,
        upper,
        &est,
    ))
}

/// Upper bound `π·√n·k/C_low` for a lattice polytope with vertices in
/// `[0,k]ⁿ ∩ ℤⁿ`: `gdiam ≤ √n·k` and every edge of a lattice polytope
/// has length ≥ 1.
pub fn check_lattice_bound(p: &VPolytope, k: u32, trials: u64, rng: &Rng) -> Result<BoundReport> {
    if k == 0 {
        return Err(Error::InvalidParameter("lattice box size k must be >= 1".into()));
    }
    for v in p.vertices() {
        for &x in v {
            let r = x.round();
            if (x - r).abs() > 1e-9 {
                return Err(Error::NotLattice(format!(
                    "vertex coordinate {x} is not an integer"
                )));
            }
            if r < 0.0 || r > k as f64 {
                return Err(Error::NotLattice(format!(
                    "vertex coordinate {x} lies outside [0, {k}]"
                )));
            }
        }
    }
    let gd = p.gdiam()?;
    let stats = p.edge_stats()?;
    let (c_low, _) = projection_norm_bracket(p.dim())?;
    let upper = PI * (p.dim() as f64).sqrt() * k as f64 / c_low;
    let est = shadow::estimate_shadow_size(p.vertices(), trials, rng)?;
    Ok(bound_report("lattice", 2.0 * gd / stats.max_len, upper, &est))
}

/// Best rational approximation to `x` with denominator ≤ `max_den`, via
/// continued-fraction convergents. Returns `(numerator, denominator)`
/// with the denominator ≥ 1; the caller decides whether the residual is
/// acceptable.
fn rational_approx(x: f64, max_den: i64) -> (i64, i64) {
    let a0 = x.floor();
    let (mut h_prev, mut k_prev) = (1i64, 0i64);
    let (mut h, mut k) = (a0 as i64, 1i64);
    let mut frac = x - a0;
    for _ in 0..64 {
        if frac.abs() < 1e-15 {
            break;
        }
        let inv = 1.0 / frac;
        let a = inv.floor();
        frac = inv - a;
        if a > i64::MAX as f64 {
            break;
        }
        let a = a as i64;
        let (Some(h_next), Some(k_next)) = (
            a.checked_mul(h).and_then(|v| v.checked_add(h_prev)),
            a.checked_mul(k).and_then(|v| v.checked_add(k_prev)),
        ) else {
            break;
        };
        if k_next > max_den {
            break;
        }
        (h_prev, k_prev) = (h, k);
        (h, k) = (h_next, k_next);
    }
    (h, k)
}

/// Upper bound `π·√n·α·β²/C_low` for a rational polytope whose vertex
/// coordinates are fractions `p/q` with `0 ≤ p ≤ α` and `1 ≤ q ≤ β`
/// (validated by rational reconstruction): the body fits in `[0,α]ⁿ` and
/// its shortest edge has length ≥ `1/β²`.
pub fn check_rational_bound(
    p: &VPolytope,
    alpha: u32,
    beta: u32,
    trials: u64,
    rng: &Rng,
) -> Result<BoundReport> {
    if alpha == 0 || beta == 0 {
        return Err(Error::InvalidParameter(
            "rational caps alpha and beta must be >= 1".into(),
        ));
    }
    for v in p.vertices() {
        for &x in v {
            let (num, den) = rational_approx(x, beta as i64);
            if (x - num as f64 / den as f64).abs() > 1e-9 {
                return Err(Error::RationalReconstruction(format!(
                    "no fraction with denominator <= {beta} within 1e-9 of {x}"
                )));
            }
            if num < 0 || num > alpha as i64 {
                return Err(Error::RationalReconstruction(format!(
                    "coordinate {x} = {num}/{den} has numerator outside [0, {alpha}]"
                )));
            }
        }
    }
    let gd = p.gdiam()?;
    let stats = p.edge_stats()?;
    let (c_low, _) = projection_norm_bracket(p.dim())?;
    let upper =
        PI * (p.dim() as f64).sqrt() * alpha as f64 * (beta as f64).powi(2) / c_low;
    let est = shadow::estimate_shadow_size(p.vertices(), trials, rng)?;
    Ok(bound_report("rational", 2.0 * gd / stats.max_len, upper, &est))
}

/// C(n, r) with saturation, for cap checks.
fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    acc
}

/// Visit all r-subsets of 0..n in lexicographic order.
fn for_each_combination<F: FnMut(&[usize])>(n: usize, r: usize, mut f: F) {
    if r == 0 || r > n {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        f(&idx);
        let mut i = r;
        while i > 0 && idx[i - 1] == n - r + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination: every
/// division below is exact in integers.
fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for col in 0..n.saturating_sub(1) {
        if m[col][col] == 0 {
            let Some(p) = (col + 1..n).find(|&r| m[r][col] != 0) else {
                return 0;
            };
            m.swap(col, p);
            sign = -sign;
        }
        for i in col + 1..n {
            for j in col + 1..n {
                m[i][j] = (m[i][j] * m[col][col] - m[i][col] * m[col][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[col][col];
    }
    sign * m[n - 1][n - 1]
}

/// Largest |det| over all square submatrices of an integer matrix, by
/// exhaustive enumeration with exact arithmetic. The total submatrix
/// count is capped at 10⁶.
pub fn max_abs_subdeterminant(a: &[Vec<i64>]) -> Result<i128> {
    if a.is_empty() || a[0].is_empty() {
        return Err(Error::EmptyInput("integer matrix".into()));
    }
    let rows = a.len();
    let cols = a[0].len();
    if a.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch {
            expected: cols,
            got: a.iter().map(Vec::len).find(|&l| l != cols).unwrap_or(cols),
        });
    }
    let mut total: u128 = 0;
    for r in 1..=rows.min(cols) {
        total = total.saturating_add(binomial(rows, r).saturating_mul(binomial(cols, r)));
    }
    if total > 1_000_000 {
        return Err(Error::SizeCap(format!(
            "matrix has {total} square submatrices; enumeration is capped at 10^6"
        )));
    }
    let mut best: i128 = 0;
    for r in 1..=rows.min(cols) {
        let mut row_sets: Vec<Vec<usize>> = Vec::new();
        for_each_combination(rows, r, |c| row_sets.push(c.to_vec()));
        let mut col_sets: Vec<Vec<usize>> = Vec::new();
        for_each_combination(cols, r, |c| col_sets.push(c.to_vec()));
        for rs in &row_sets {
            for cs in &col_sets {
                let sub: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| a[i][j] as i128).collect())
                    .collect();
                best = best.max(bareiss_det(sub).abs());
            }
        }
    }
    Ok(best)
}

/// δ against its integer-programming floor.
#[derive(Debug, Clone, Copy)]
pub struct DeltaMinorReport {
    pub delta: f64,
    /// Δ: the largest |minor| of the facet-normal matrix.
    pub max_minor: i128,
    /// `1/(n·Δ²)`.
    pub floor: f64,
    pub satisfied: bool,
}

/// Check `δ ≥ 1/(n·Δ²)` with δ measured on the normal fan and Δ taken
/// from the polytope's integer facet-normal matrix.
pub fn check_delta_minor_floor(p: &VPolytope, facet_normals: &[Vec<i64>]) -> Result<DeltaMinorReport> {
    if facet_normals.iter().any(|r| r.len() != p.dim()) {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: facet_normals
                .iter()
                .map(Vec::len)
                .find(|&l| l != p.dim())
                .unwrap_or(p.dim()),
        });
    }
    let delta = fan::delta_of_polytope(p)?.delta;
    let max_minor = max_abs_subdeterminant(facet_normals)?;
    let floor = 1.0 / (p.dim() as f64 * (max_minor * max_minor) as f64);
    Ok(DeltaMinorReport {
        delta,
        max_minor,
        floor,
        satisfied: delta >= floor,
    })
}
