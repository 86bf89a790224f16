//! Bass numbers along the identity: injective dimension and the
//! Gorenstein dichotomy for Artinian quotients.
//!
//! A ring with one-dimensional socle is its own injective hull, so its
//! Bass sequence is 0, ..., 0, 1 ending at the Krull dimension; anything
//! with a fatter socle has strictly growing Bass numbers. Both behaviours
//! fall out of the Hom side of the base-change machinery applied to the
//! identity map.

use homolocal::phi::{bass_over, LocalHom, PhiDimension};
use homolocal::{FieldSpec, GradedModule, GradedRing, Result};

fn main() -> Result<()> {
    let field = FieldSpec::new(2)?;
    let two = || vec![("x".into(), 1), ("y".into(), 1)];

    // Gorenstein: the monomial complete intersection
    let gor = GradedRing::new(field, two(), &["x^2".into(), "y^2".into()], 10)?;
    // not Gorenstein: socle has rank two
    let fat = GradedRing::new(field, two(), &["x^2".into(), "x*y".into(), "y^2".into()], 10)?;

    for (label, ring) in [("F_2[x,y]/(x^2,y^2)", gor), ("F_2[x,y]/m^2", fat)] {
        let phi = LocalHom::identity(ring.clone());
        let free = GradedModule::free_module(ring.clone(), vec![0])?;
        let s = bass_over(&phi, &free, 8, 2)?;
        println!("{label}");
        println!("  bass {:?}  certified {}", s.values, s.all_certified());
        match s.homological_dimension() {
            PhiDimension::Finite(v) => println!("  injective dimension {v}"),
            PhiDimension::MinusInfinity => println!("  zero module"),
            PhiDimension::Undetermined => println!("  injective dimension unresolved in window"),
        }
    }
    Ok(())
}
