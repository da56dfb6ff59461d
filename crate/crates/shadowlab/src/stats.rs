//! Distribution-free statistical tests for the paired quantities a
//! random shadow produces per edge: the projected length `L` and the
//! indicator `X` of the edge surviving onto the shadow boundary.
//!
//! The geometric claim under test is that `L` and `X` are independent;
//! `L` is Beta-derived rather than Gaussian, so inference here is
//! permutation- and rank-based instead of parametric.

use crate::error::{Error, Result};
use crate::geom;
use crate::polytope::VPolytope;
use crate::rng::Rng;
use crate::shadow;
use rand::Rng as _;
use rayon::prelude::*;
use statrs::distribution::{ContinuousCDF, Normal};

/// Number of label shuffles behind each permutation p-value.
const SHUFFLES: u64 = 10_000;

/// Per-trial projected edge lengths paired with on-boundary flags.
#[derive(Debug, Clone)]
pub struct PairedSample {
    pub l_values: Vec<f64>,
    pub x_flags: Vec<bool>,
}

impl PairedSample {
    pub fn new(l_values: Vec<f64>, x_flags: Vec<bool>) -> Result<Self> {
        if l_values.is_empty() {
            return Err(Error::EmptyInput("paired sample".into()));
        }
        if l_values.len() != x_flags.len() {
            return Err(Error::DimensionMismatch {
                expected: l_values.len(),
                got: x_flags.len(),
            });
        }
        Ok(Self { l_values, x_flags })
    }

    pub fn len(&self) -> usize {
        self.l_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.l_values.is_empty()
    }
}

/// Watch one edge across random frames: per trial, `L` is the projected
/// edge length and `X` records whether the projected endpoints sit as
/// consecutive vertices of the shadow polygon.
pub fn collect_edge_sample(
    p: &VPolytope,
    edge: (usize, usize),
    trials: u64,
    rng: &Rng,
) -> Result<PairedSample> {
    let is_edge = p
        .edges()?
        .iter()
        .any(|&(a, b)| (a, b) == edge || (b, a) == edge);
    if !is_edge {
        return Err(Error::NotAnEdge {
            i: edge.0,
            j: edge.1,
        });
    }
    if trials == 0 {
        return Err(Error::InvalidParameter("need trials >= 1".into()));
    }
    let n = p.dim();
    let verts = p.vertices();
    let pairs: Vec<(f64, bool)> = (0..trials)
        .into_par_iter()
        .map(|t| -> Result<(f64, bool)> {
            let mut r = rng.substream(t);
            let f = geom::sample_frame(&mut r, n)?;
            let a = geom::project(&f, &verts[edge.0])?;
            let b = geom::project(&f, &verts[edge.1])?;
            let s = shadow::shadow(verts, &f)?;
            let idx = &s.vertex_indices;
            let m = idx.len();
            let x = m >= 2
                && (0..m).any(|q| {
                    let pair = (idx[q], idx[(q + 1) % m]);
                    pair == edge || (pair.1, pair.0) == edge
                });
            Ok((a.dist(&b), x))
        })
        .collect::<Result<_>>()?;
    let (l_values, x_flags) = pairs.into_iter().unzip();
    PairedSample::new(l_values, x_flags)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The sample cannot decide the question (one flag class empty, or
    /// the correlation is undefined because `L` is constant).
    Inconclusive,
}

/// Outcome of the two-pronged independence test.
#[derive(Debug, Clone)]
pub struct IndependenceReport {
    pub verdict: Verdict,
    /// Pearson correlation of `L` with the 0/1 flag, when defined.
    pub correlation: Option<f64>,
    /// Two-sided permutation p-value for the correlation.
    pub correlation_p: Option<f64>,
    /// Two-sample Kolmogorov–Smirnov statistic between the flagged and
    /// unflagged `L` values.
    pub ks_statistic: Option<f64>,
    pub ks_p: Option<f64>,
    pub alpha: f64,
}

/// Test independence of `L` and `X` two ways — a permutation test on the
/// Pearson correlation (10⁴ label shuffles on derived seeds, so the
/// p-value does not depend on thread count) and a two-sample KS test
/// between the two conditional `L` distributions. Passes iff both
/// p-values are ≥ `alpha`; degenerate samples come back Inconclusive
/// rather than failing.
pub fn independence_test(s: &PairedSample, alpha: f64, rng: &Rng) -> Result<IndependenceReport> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "alpha must be in (0, 1), got {alpha}"
        )));
    }
    let n = s.len();
    let n1 = s.x_flags.iter().filter(|&&x| x).count();
    let n0 = n - n1;
    if n1 == 0 || n0 == 0 {
        return Ok(IndependenceReport {
            verdict: Verdict::Inconclusive,
            correlation: None,
            correlation_p: None,
            ks_statistic: None,
            ks_p: None,
            alpha,
        });
    }

    let flagged: Vec<f64> = s
        .l_values
        .iter()
        .zip(&s.x_flags)
        .filter(|&(_, &x)| x)
        .map(|(&l, _)| l)
        .collect();
    let unflagged: Vec<f64> = s
        .l_values
        .iter()
        .zip(&s.x_flags)
        .filter(|&(_, &x)| !x)
        .map(|(&l, _)| l)
        .collect();
    let (ks_statistic, ks_p) = two_sample_ks(&flagged, &unflagged)?;

    let nf = n as f64;
    let mean_l = s.l_values.iter().sum::<f64>() / nf;
    let ss_l = s.l_values.iter().map(|l| (l - mean_l) * (l - mean_l)).sum::<f64>();
    if ss_l <= 0.0 {
        // constant L: the correlation is 0/0, so only KS speaks
        return Ok(IndependenceReport {
            verdict: Verdict::Inconclusive,
            correlation: None,
            correlation_p: None,
            ks_statistic: Some(ks_statistic),
            ks_p: Some(ks_p),
            alpha,
        });
    }

    // with a binary flag, the correlation is a deterministic function of
    // the flagged-class sum, which is all a label shuffle changes
    let denom = (ss_l * (n1 as f64) * (n0 as f64) / nf).sqrt();
    let r_of_sum = |t1: f64| (t1 - n1 as f64 * mean_l) / denom;
    let observed = r_of_sum(flagged.iter().sum());

    let exceed: u64 = (0..SHUFFLES)
        .into_par_iter()
        .map_init(
            || Vec::with_capacity(n),
            |idx, shuffle| {
                let mut r = rng.substream(shuffle);
                idx.clear();
                idx.extend(0..n);
                let mut t1 = 0.0;
                for i in 0..n1 {
                    let j = r.gen_range(i..n);
                    idx.swap(i, j);
                    t1 += s.l_values[idx[i]];
                }
                u64::from(r_of_sum(t1).abs() >= observed.abs() - 1e-12)
            },
        )
        .sum();
    let correlation_p = (exceed + 1) as f64 / (SHUFFLES + 1) as f64;

    let verdict = if correlation_p >= alpha && ks_p >= alpha {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(IndependenceReport {
        verdict,
        correlation: Some(observed),
        correlation_p: Some(correlation_p),
        ks_statistic: Some(ks_statistic),
        ks_p: Some(ks_p),
        alpha,
    })
}

/// Two-sample Kolmogorov–Smirnov test: the sup-distance between the
/// empirical CDFs and its asymptotic p-value.
pub fn two_sample_ks(a: &[f64], b: &[f64]) -> Result<(f64, f64)> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput("KS sample".into()));
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable_by(f64::total_cmp);
    b.sort_unstable_by(f64::total_cmp);
    let (na, nb) = (a.len(), b.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < na && j < nb {
        let x = a[i].min(b[j]);
        while i < na && a[i] <= x {
            i += 1;
        }
        while j < nb && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na as f64 - j as f64 / nb as f64).abs());
    }
    let ne = (na * nb) as f64 / (na + nb) as f64;
    let lambda = (ne.sqrt() + 0.12 + 0.11 / ne.sqrt()) * d;
    Ok((d, kolmogorov_tail(lambda)))
}

/// Q(λ) = 2·Σ_{k≥1} (−1)^{k−1} e^{−2k²λ²}, the asymptotic KS tail. The
/// series converges slowly only for tiny λ, where the tail is 1 anyway.
fn kolmogorov_tail(lambda: f64) -> f64 {
    let mut sum = 0.0;
    let mut sign = 1.0;
    for k in 1..=200 {
        let term = (-2.0 * (k as f64 * lambda).powi(2)).exp();
        sum += sign * term;
        if term < 1e-14 {
            return (2.0 * sum).clamp(0.0, 1.0);
        }
        sign = -sign;
    }
    1.0
}

/// CLT confidence interval: `(mean, half_width)` at the given two-sided
/// confidence level.
pub fn mean_ci(values: &[f64], confidence: f64) -> Result<(f64, f64)> {
    if values.len() < 2 {
        return Err(Error::InvalidParameter(
            "confidence interval needs at least 2 values".into(),
        ));
    }
    if !(confidence > 0.0 && confidence < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "confidence must be in (0, 1), got {confidence}"
        )));
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    let z = Normal::new(0.0, 1.0)
        .map_err(|e| Error::Internal(e.to_string()))?
        .inverse_cdf(0.5 + confidence / 2.0);
    Ok((mean, z * (var / n).sqrt()))
}
