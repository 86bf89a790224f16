//! Rational generating functions against computed Betti tables.
//!
//! For a complete intersection R = F_3[x,y,z]/(f,g) the residue field has
//! Poincare series (1+t)^d / (1-t)^c with c the number of relations and
//! d = edim - c. The polynomial layer expands such quotients to a window;
//! here the expansion is checked coefficient by coefficient against a
//! freshly computed resolution, then reversed to show the Matlis symmetry
//! of the numerator.

use homolocal::resolution::minimal_resolution;
use homolocal::series::ZPoly;
use homolocal::{FieldSpec, GradedModule, GradedRing, Result};

fn main() -> Result<()> {
    let ring = GradedRing::new(
        FieldSpec::new(3)?,
        vec![("x".into(), 1), ("y".into(), 1), ("z".into(), 1)],
        &["x^2".into(), "y^2 + x*z".into()],
        14,
    )?;
    let c = ring.relations().len() as i64;
    let d = ring.edim() as i64 - c;

    // (1+t)^d / (1-t)^c expanded through t^10
    let numer = ZPoly::one_plus_t().pow(d as u32);
    let denom = ZPoly::one_minus_t().pow(c as u32);
    let expansion = numer.expand_div(&denom, 0, 10);

    let k = GradedModule::residue_field(ring.clone());
    let f = minimal_resolution(&k, 10, 2)?;

    println!("{:>3} {:>10} {:>10}", "n", "series", "betti");
    for n in 0..=10i64 {
        let predicted = expansion.get(n);
        let computed = f.betti(n as usize).unwrap() as i64;
        assert_eq!(predicted, computed);
        println!("{:>3} {:>10} {:>10}", n, predicted, computed);
    }

    // the numerator is its own reversal: socle symmetry in polynomial form
    let rev = numer.reverse_at(d);
    println!("numerator {:?} reversed at {d}: {:?}", numer.coeffs(), rev.coeffs());
    assert_eq!(numer, rev);
    Ok(())
}
