//! The two-sided bound on expected shadow size, across families.
//!
//! For any polytope with geometric diameter gdiam, longest edge M and
//! shortest edge m, the expected number of vertices of a uniformly
//! random 2D shadow is sandwiched:
//!
//!     2·gdiam/M  <=  E[shadow vertices]  <=  pi·gdiam/(C_low·m)
//!
//! where C_low is a proven lower bound on the projection constant C_n.
//! The near-parallel zonotope family presses the lower end (slack close
//! to 1); the cube presses the upper end within a dimension-free factor.

use shadowlab::bounds::{check_shadow_sandwich, Body};
use shadowlab::polytope::VPolytope;
use shadowlab::{families, Rng};

fn main() -> shadowlab::Result<()> {
    let rng = Rng::new(1234);
    let trials = 3000;

    let mut gen_rng = Rng::new(88);
    let mut fixtures: Vec<(String, Body)> = vec![
        ("hypercube(3)".into(), Body::Zonotope(families::hypercube(3)?)),
        ("hypercube(5)".into(), Body::Zonotope(families::hypercube(5)?)),
        ("hypercube(7)".into(), Body::Zonotope(families::hypercube(7)?)),
        ("birkhoff(3)".into(), Body::Polytope(families::birkhoff(3)?)),
        (
            "zn_parallel(6)".into(),
            Body::Zonotope(families::zn_parallel(6, 0.05, &mut gen_rng)?),
        ),
        (
            "zn_basis(4)".into(),
            Body::Zonotope(families::zn_basis(4, 0.05, &mut gen_rng)?),
        ),
    ];

    // one lattice polytope in [0,3]^3: hull of a few integer points
    let lattice = VPolytope::from_points(&[
        vec![0.0, 0.0, 0.0],
        vec![3.0, 0.0, 0.0],
        vec![0.0, 3.0, 0.0],
        vec![0.0, 0.0, 3.0],
        vec![3.0, 3.0, 1.0],
        vec![2.0, 3.0, 3.0],
        vec![3.0, 1.0, 3.0],
    ])?;
    fixtures.push(("lattice [0,3]^3".into(), Body::Polytope(lattice)));

    println!(
        "{:<17} {:>9} {:>9} {:>8} {:>9} {:>7} {:>7}  {}",
        "body", "lower", "mean", "se", "upper", "sl_lo", "sl_up", "ok"
    );
    for (i, (label, body)) in fixtures.iter().enumerate() {
        let r = check_shadow_sandwich(body, trials, &rng.substream(i as u64))?;
        println!(
            "{label:<17} {:>9.3} {:>9.3} {:>8.3} {:>9.3} {:>7.3} {:>7.3}  {}",
            r.lower, r.estimate, r.std_error, r.upper, r.slack_lower, r.slack_upper, r.satisfied
        );
        assert!(r.satisfied, "{label} escaped the sandwich");
    }

    // tightness at the lower end: nearly parallel generators
    println!("\nnear-parallel zonotopes hug the lower bound:");
    for k in [4usize, 8] {
        let z = families::zn_parallel(k, 0.05, &mut gen_rng)?;
        let r = check_shadow_sandwich(&Body::Zonotope(z), trials, &rng.substream(100 + k as u64))?;
        println!("  k = {k}: slack_lower = {:.4}", r.slack_lower);
        assert!(r.slack_lower < 1.2);
    }

    Ok(())
}
