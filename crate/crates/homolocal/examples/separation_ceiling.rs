//! The coefficientwise ceiling on Betti numbers over a local map.
//!
//! Padding the numbers of a module by (1+t) up to the target embedding
//! dimension always stays below the residue-field series times the
//! module's Koszul polynomial. Equality is the separated case; a strict
//! drop means the resolution genuinely interleaves with the module
//! structure. Over Frobenius on a small ring everything separates, while
//! the identity map on F_2[x,y]/m^2 already shows a strict drop at n = 1.

use homolocal::phi::{separation_report, LocalHom};
use homolocal::{FieldSpec, GradedModule, GradedRing, Result};

fn main() -> Result<()> {
    let field = FieldSpec::new(2)?;
    let two = || vec![("x".into(), 1), ("y".into(), 1)];
    let ci = GradedRing::new(field, two(), &["x^2".into(), "y^2".into()], 12)?;
    let fat = GradedRing::new(field, two(), &["x^2".into(), "x*y".into(), "y^2".into()], 12)?;

    println!("Frobenius on F_2[x,y]/(x^2,y^2):");
    let phi = LocalHom::frobenius(ci.clone(), 1)?;
    let x = ci.parse_element("x")?;
    for (label, m) in [
        ("k", GradedModule::residue_field(ci.clone())),
        ("R/(x)", GradedModule::from_presentation(ci.clone(), vec![0], &[vec![x]])?),
        ("R", GradedModule::free_module(ci.clone(), vec![0])?),
    ] {
        print_line(label, &separation_report(&phi, &m, 10, 2)?);
    }

    println!("identity on F_2[x,y]/m^2:");
    let id = LocalHom::identity(fat.clone());
    let x = fat.parse_element("x")?;
    for (label, m) in [
        ("k", GradedModule::residue_field(fat.clone())),
        ("R/(x)", GradedModule::from_presentation(fat.clone(), vec![0], &[vec![x]])?),
    ] {
        print_line(label, &separation_report(&id, &m, 10, 2)?);
    }
    Ok(())
}

fn print_line(label: &str, rep: &homolocal::phi::SeparationReport) {
    println!(
        "  {label}: ceiling {}  separated {}  first strict {:?}  through n = {}  certified {}",
        rep.ceiling_holds, rep.separated, rep.first_strict, rep.compared_through, rep.certified
    );
    assert!(rep.ceiling_holds);
}
