//! The constants behind the shadow bounds, with their brackets.
//!
//! A Haar-random 2-frame in R^n projects the unit segment to expected
//! length C_n. Exactly, C_n = Γ(3/2) Γ(n/2) / Γ((n+1)/2); it is bracketed
//! by [√2·E, 2·E] where E = E|B_1| is the expected absolute single
//! coordinate, which in turn is pinched by explicit Gamma-ratio bounds.
//! All three layers are checked here against Monte Carlo and quadrature.

use shadowlab::{bounds, geom, Rng};

fn main() -> shadowlab::Result<()> {
    let rng = Rng::new(5150);
    let frames = 20_000u64;

    println!(
        "{:>4} {:>10} {:>22} {:>10} {:>22} {:>10} {:>8}",
        "n", "E|coord|", "coord bracket", "C_n", "C_n bracket", "MC C_n", "quad"
    );
    for n in [2usize, 3, 4, 5, 10, 50] {
        let e = bounds::expected_abs_coordinate(n)?;
        let (elo, ehi) = bounds::expected_abs_coordinate_bracket(n)?;
        assert!(elo <= e && e <= ehi);

        let c = bounds::projection_norm_constant(n)?;
        let (clo, chi) = bounds::projection_norm_bracket(n)?;
        assert!(clo <= c && c <= chi);

        // Monte Carlo: mean projected length of e_1 over random frames
        let mut acc = 0.0;
        let origin = geom::Point2::new(0.0, 0.0);
        let mut e1 = vec![0.0; n];
        e1[0] = 1.0;
        for t in 0..frames {
            let mut r = rng.substream(n as u64 * 100_000 + t);
            let f = geom::sample_frame(&mut r, n)?;
            acc += geom::project(&f, &e1)?.dist(&origin);
        }
        let mc = acc / frames as f64;
        assert!((mc - c).abs() < 0.01, "MC drifted from the exact constant");

        let quad = bounds::density_quadrature(n)?;
        assert!((quad - 1.0).abs() <= 1e-9);

        println!(
            "{n:>4} {e:>10.6} [{elo:>9.6}, {ehi:>9.6}] {c:>10.6} [{clo:>9.6}, {chi:>9.6}] {mc:>10.6} {quad:>8.6}"
        );
    }

    // spot values with hand-derived closed forms
    assert!((bounds::expected_abs_coordinate(3)? - 0.5).abs() < 1e-12);
    assert!((bounds::projection_norm_constant(3)? - std::f64::consts::PI / 4.0).abs() < 1e-12);
    assert!((bounds::projection_norm_constant(4)? - 2.0 / 3.0).abs() < 1e-12);
    println!("\nE|coord|(3) = 1/2, C_3 = pi/4, C_4 = 2/3 — all reproduced.");

    Ok(())
}
