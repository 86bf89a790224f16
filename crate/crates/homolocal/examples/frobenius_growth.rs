//! Betti numbers over the Frobenius endomorphism, and what their growth
//! says about the ring.
//!
//! Over a complete intersection the numbers grow polynomially; over the
//! short Golod ring F_2[x,y]/m^2 they double every step. The asymptotic
//! estimator turns the window into a complexity (degree of polynomial
//! growth, or none) and a curvature (exponential base).

use homolocal::phi::{asymptotic_estimate, betti_over, LocalHom};
use homolocal::{FieldSpec, GradedModule, GradedRing, Result};

fn main() -> Result<()> {
    let field = FieldSpec::new(2)?;
    let two = || vec![("x".into(), 1), ("y".into(), 1)];

    let ci = GradedRing::new(field, two(), &["x^2".into(), "y^2".into()], 10)?;
    let golod = GradedRing::new(field, two(), &["x^2".into(), "x*y".into(), "y^2".into()], 10)?;

    for (label, ring) in [("complete intersection", ci), ("short Golod", golod)] {
        let phi = LocalHom::frobenius(ring.clone(), 1)?;
        assert!(phi.is_contracting()?);
        let free = GradedModule::free_module(ring.clone(), vec![0])?;
        let s = betti_over(&phi, &free, 12, 2)?;
        let est = asymptotic_estimate(&s.values)?;
        println!("{label}: {:?}", s.values);
        println!(
            "  certified {}  complexity {:?}  curvature {:.3}",
            s.all_certified(),
            est.complexity,
            est.curvature
        );
    }
    Ok(())
}
