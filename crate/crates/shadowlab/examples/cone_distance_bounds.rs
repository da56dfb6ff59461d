//! Distance-to-hyperplane statistics inside simplicial cones.
//!
//! Two rejection samplers draw uniform points from a cone's intersection
//! with the unit ball or sphere. Two kinds of bounds are then checked
//! empirically: the chance of landing within eps of the hyperplane
//! spanned by all-but-one ray is at most ((1+eps)^k - 1)/h, and the mean
//! distance to the nearest such hyperplane is at least h/(8k²), where h
//! measures how far the excluded unit ray sticks out of the others' span.

use shadowlab::{fan, Rng};

fn main() -> shadowlab::Result<()> {
    let mut rng = Rng::new(31);
    let trials = 30_000;

    // the positive quadrant: h = 1, so the tail ceiling is explicit
    let quadrant = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
    println!("quadrant tail Pr[dist(x, axis) <= eps], cone ∩ ball:");
    for eps in [0.001, 0.1, 1.0] {
        let t = fan::near_hyperplane_probability(&quadrant, 0, eps, trials, &mut rng)?;
        println!(
            "  eps = {eps:>5}: empirical {:>8.5} +/- {:>7.5}  ceiling {:>7.4}",
            t.empirical, t.std_error, t.bound
        );
        assert!(t.empirical <= t.bound + 3.0 * t.std_error);
    }

    // mean distance to the nearest spanned hyperplane, sphere vs. ball
    let cones: Vec<(&str, Vec<Vec<f64>>)> = vec![
        ("orthogonal 2-ray", vec![vec![1.0, 0.0], vec![0.0, 1.0]]),
        (
            "skewed 2-ray",
            vec![vec![1.0, 0.0], {
                let s = 2f64.sqrt() / 2.0;
                vec![s, s]
            }],
        ),
        (
            "orthogonal 3-ray",
            vec![
                vec![1.0, 0.0, 0.0],
                vec![0.0, 1.0, 0.0],
                vec![0.0, 0.0, 1.0],
            ],
        ),
    ];
    println!("\nmean nearest-hyperplane distance, floor h/(8k^2):");
    for (label, rays) in cones {
        let sphere = fan::mean_arrangement_distance_sphere(&rays, trials, &mut rng)?;
        let ball = fan::mean_arrangement_distance_ball(&rays, trials, &mut rng)?;
        println!(
            "  {label:<18} sphere {:>7.4}  ball {:>7.4}  floor {:>7.4}  (h = {:.4})",
            sphere.empirical, ball.empirical, sphere.bound, sphere.h
        );
        assert!(sphere.empirical >= sphere.bound - 3.0 * sphere.std_error);
        assert!(ball.empirical >= ball.bound - 3.0 * ball.std_error);
        // radial growth of the min-distance puts the sphere mean on top
        assert!(
            sphere.empirical + 3.0 * (sphere.std_error + ball.std_error) >= ball.empirical
        );
    }

    println!("\nAll empirical values respect their bounds.");
    Ok(())
}
