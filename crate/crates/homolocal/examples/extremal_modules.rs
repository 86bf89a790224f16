//! Extremal modules: matching the residue field's growth over Frobenius.
//!
//! A module is extremal over a contracting endomorphism when its numbers
//! grow exactly as fast as the residue field's classical resolution, in
//! both the polynomial degree and the exponential base. Over a complete
//! intersection every nonzero module should land there; the comparison
//! below also shows the two growth profiles the verdict is built from.

use homolocal::phi::{extremality, LocalHom};
use homolocal::{FieldSpec, GradedModule, GradedRing, Result};

fn main() -> Result<()> {
    let ring = GradedRing::new(
        FieldSpec::new(2)?,
        vec![("x".into(), 1), ("y".into(), 1)],
        &["x^2".into(), "y^2".into()],
        12,
    )?;
    let phi = LocalHom::frobenius(ring.clone(), 1)?;

    let x = ring.parse_element("x")?;
    let modules = [
        ("k", GradedModule::residue_field(ring.clone())),
        ("R/(x)", GradedModule::from_presentation(ring.clone(), vec![0], &[vec![x]])?),
        ("R", GradedModule::free_module(ring.clone(), vec![0])?),
        ("R(-1) + k", GradedModule::free_module(ring.clone(), vec![1])?
            .direct_sum(&GradedModule::residue_field(ring.clone()))?),
    ];

    for (label, m) in &modules {
        let rep = extremality(&phi, m, 13, 2)?;
        println!(
            "{label}: extremal {}  module cx {:?} curv {:.2}  field cx {:?} curv {:.2}  certified {}",
            rep.extremal,
            rep.subject.complexity,
            rep.subject.curvature,
            rep.reference.complexity,
            rep.reference.curvature,
            rep.certified
        );
    }
    Ok(())
}
