//! Per-edge shadow statistics: projected length vs. boundary survival.
//!
//! Fix one edge of the cube and project with many random frames. Per
//! frame, record L = the edge's projected length and X = whether the
//! edge survives as a shadow boundary edge. Symmetry says the cube's
//! survival rate is (2n shadow edges) / (n 2^(n-1) edges) and predicts
//! E[L] as the projection constant; the deeper claim is that L and X are
//! independent, tested here by permutation correlation and a two-sample
//! Kolmogorov–Smirnov test.

use shadowlab::{bounds, families, stats, Rng};

fn main() -> shadowlab::Result<()> {
    let n = 4usize;
    let trials = 4000u64;
    let p = families::hypercube(n)?.to_vpolytope()?;
    let edge = p.edges()?[0];

    let sample = stats::collect_edge_sample(&p, edge, trials, &Rng::new(41))?;

    let survive = sample.x_flags.iter().filter(|&&x| x).count() as f64 / trials as f64;
    let expected_rate = 2.0 * n as f64 / (n as f64 * 2f64.powi(n as i32 - 1));
    println!("edge ({}, {}) of the {n}-cube, {trials} random frames", edge.0, edge.1);
    println!("  survival rate {survive:.4} (symmetry predicts {expected_rate:.4})");

    let (mean_l, half) = stats::mean_ci(&sample.l_values, 0.99)?;
    let exact = bounds::projection_norm_constant(n)?;
    println!("  mean projected length {mean_l:.4} +/- {half:.4} (constant {exact:.4})");

    let report = stats::independence_test(&sample, 0.01, &Rng::new(42))?;
    println!(
        "  correlation {:+.4} (permutation p = {:.3})",
        report.correlation.unwrap(),
        report.correlation_p.unwrap()
    );
    println!(
        "  KS distance {:.4} between survivor/non-survivor lengths (p = {:.3})",
        report.ks_statistic.unwrap(),
        report.ks_p.unwrap()
    );
    println!("  verdict at alpha = 0.01: {:?}", report.verdict);
    assert_eq!(report.verdict, stats::Verdict::Pass);

    // contrast: manufacture dependence by flagging the longest projections
    let median = {
        let mut v = sample.l_values.clone();
        v.sort_unstable_by(f64::total_cmp);
        v[v.len() / 2]
    };
    let rigged = stats::PairedSample::new(
        sample.l_values.clone(),
        sample.l_values.iter().map(|&l| l > median).collect(),
    )?;
    let caught = stats::independence_test(&rigged, 0.01, &Rng::new(43))?;
    println!("\nrigged flags (X = L above median): verdict {:?}", caught.verdict);
    assert_eq!(caught.verdict, stats::Verdict::Fail);

    Ok(())
}
