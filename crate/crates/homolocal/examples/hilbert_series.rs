//! Hilbert functions of truncated graded quotient rings.
//!
//! Builds three quotients of F_7[x, y, z] and tabulates dim_k R_d side by
//! side, then prints the Loewy length and a Krull dimension estimate for
//! each. Run with `cargo run --example hilbert_series`.

use homolocal::criteria::krull_dim_estimate;
use homolocal::{FieldSpec, GradedRing, Result};

fn main() -> Result<()> {
    let field = FieldSpec::new(7)?;
    let vars = || vec![("x".into(), 1), ("y".into(), 1), ("z".into(), 1)];

    // full polynomial ring, a hypersurface, and an Artinian monomial quotient
    let poly = GradedRing::new(field, vars(), &[], 8)?;
    let hyper = GradedRing::new(field, vars(), &["x^2 + y*z".into()], 8)?;
    let artin = GradedRing::new(
        field,
        vars(),
        &["x^2".into(), "y^2".into(), "z^2".into(), "x*y".into()],
        8,
    )?;

    println!("{:>3} {:>6} {:>6} {:>6}", "d", "poly", "hyper", "artin");
    for d in 0..=8 {
        println!(
            "{:>3} {:>6} {:>6} {:>6}",
            d,
            poly.hilbert(d)?,
            hyper.hilbert(d)?,
            artin.hilbert(d)?
        );
    }

    for (name, ring) in [("poly", &poly), ("hyper", &hyper), ("artin", &artin)] {
        let dim = match krull_dim_estimate(ring) {
            Some(v) => v.to_string(),
            None => "?".into(),
        };
        println!(
            "{name}: edim {} loewy {:?} dim {dim}",
            ring.edim(),
            ring.loewy_length()
        );
    }
    Ok(())
}
