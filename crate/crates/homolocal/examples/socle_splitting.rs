//! Socle escape: a sufficient test for extremal modules.
//!
//! After cutting a module down by a regular set, a socle element of the
//! quotient that survives outside the maximal ideal's image forces the
//! residue field to split off through the map, which makes the module as
//! homologically large as possible. The test reports where the escaping
//! element was found, or stays undetermined when no escape is visible.

use homolocal::criteria::socle_extremality;
use homolocal::phi::LocalHom;
use homolocal::{Error, FieldSpec, GradedModule, GradedRing, Result};

fn main() -> Result<()> {
    let field = FieldSpec::new(2)?;

    // the cubic line under its square endomorphism: the socle x^2 maps
    // through the generator x, escaping m times the image
    let cubic = GradedRing::new(field, vec![("x".into(), 1)], &["x^3".into()], 10)?;
    let fr = LocalHom::frobenius(cubic.clone(), 1)?;
    let free = GradedModule::free_module(cubic.clone(), vec![0])?;
    let v = socle_extremality(&fr, &free, &[], 10, 2)?;
    println!("cubic line over Frobenius: {}", v.summary_line());
    println!("  witness {}", v.witness);

    // over the polynomial ring the variables form a regular set; cutting by
    // them leaves k, whose socle escapes on the spot
    let plane = GradedRing::new(field, vec![("x".into(), 1), ("y".into(), 1)], &[], 8)?;
    let id = LocalHom::identity(plane.clone());
    let pfree = GradedModule::free_module(plane.clone(), vec![0])?;
    let cut = [plane.parse_element("x")?, plane.parse_element("y")?];
    let v = socle_extremality(&id, &pfree, &cut, 8, 2)?;
    println!("plane cut by x, y: {}", v.summary_line());

    // a repeated element is rejected before any socle is inspected
    let bad = [plane.parse_element("x")?, plane.parse_element("x")?];
    match socle_extremality(&id, &pfree, &bad, 8, 2) {
        Err(Error::NotRegularSet(n)) => println!("cut x, x: rejected, homology at step {n}"),
        other => panic!("expected a regular-set rejection, got {other:?}"),
    }
    Ok(())
}
