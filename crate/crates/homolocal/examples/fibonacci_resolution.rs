//! Minimal free resolutions with Fibonacci Betti numbers.
//!
//! Over R = F_101[x, y]/(x^2, xy) the residue field k has Betti sequence
//! 1, 2, 3, 5, 8, ... and the cyclic module R/(x) picks up the same
//! recursion one step later. Both come out of the same resolution routine;
//! the run also shows where each level places its generators.

use homolocal::resolution::minimal_resolution;
use homolocal::{FieldSpec, GradedModule, GradedRing, Result};

fn main() -> Result<()> {
    let ring = GradedRing::new(
        FieldSpec::new(101)?,
        vec![("x".into(), 1), ("y".into(), 1)],
        &["x^2".into(), "x*y".into()],
        20,
    )?;

    let k = GradedModule::residue_field(ring.clone());
    let fk = minimal_resolution(&k, 10, 2)?;

    let x = ring.parse_element("x")?;
    let rx = GradedModule::from_presentation(ring.clone(), vec![0], &[vec![x]])?;
    let frx = minimal_resolution(&rx, 10, 2)?;

    println!("{:>3} {:>8} {:>8}   k's level-n generators", "n", "b(k)", "b(R/x)");
    for n in 0..=10 {
        let degs = fk.gen_degrees(n);
        println!(
            "{:>3} {:>8} {:>8}   {} in degree {}",
            n,
            fk.betti(n).unwrap(),
            frx.betti(n).unwrap(),
            degs.len(),
            degs[0]
        );
    }

    // infinite resolutions: every level is certified complete, none is final
    assert!(!fk.is_finite());
    assert!((0..=10).all(|n| fk.level_complete(n)));
    println!("pd k = {:?} (unresolved within the window)", fk.projective_dimension());
    Ok(())
}
