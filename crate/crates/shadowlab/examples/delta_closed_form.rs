//! The cone-thickness parameter δ, measured and in closed form.
//!
//! δ is the minimum, over normal cones and over rays, of the distance
//! from a unit ray to the span of its cone's other rays; it measures how
//! far the polytope is from having degenerate corners. For the box every
//! cone is orthogonal, so δ = 1. For the augmented permutahedron δ has
//! the closed form min(1, min_k sqrt(n / (2 k (n-k)))), which the
//! geometric computation reproduces to machine precision.

use shadowlab::polytope::VPolytope;
use shadowlab::{families, fan};

fn main() -> shadowlab::Result<()> {
    for n in 3..=5usize {
        let p = families::hypercube(n)?.to_vpolytope()?;
        let d = fan::delta_of_polytope(&p)?;
        println!("hypercube n={n}: delta = {:.12}", d.delta);
        assert!((d.delta - 1.0).abs() < 1e-12);
    }
    println!();

    println!("{:>3} {:>18} {:>18} {:>12}", "n", "measured", "closed form", "|diff|");
    for n in 3..=6usize {
        let p = families::augmented_permutahedron(n)?.to_vpolytope()?;
        let measured = fan::delta_of_polytope(&p)?.delta;
        let closed = fan::augmented_permutahedron_delta(n)?;
        let diff = (measured - closed).abs();
        println!("{n:>3} {measured:>18.12} {closed:>18.12} {diff:>12.2e}");
        assert!(diff <= 1e-9);
    }
    println!();

    // in the plane, delta is the sine of the sharpest vertex angle:
    // cutting a square's corner at 45 degrees gives delta = sin(135°)…
    let pentagon = VPolytope::from_points(&[
        vec![0.0, 0.0],
        vec![2.0, 0.0],
        vec![2.0, 1.0],
        vec![1.0, 2.0],
        vec![0.0, 2.0],
    ])?;
    let d = fan::delta_of_polytope(&pentagon)?;
    println!(
        "cut-corner pentagon: delta = {:.12} (1/sqrt(2) = {:.12})",
        d.delta,
        std::f64::consts::FRAC_1_SQRT_2
    );
    assert!((d.delta - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);

    Ok(())
}
