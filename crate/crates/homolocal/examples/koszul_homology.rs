//! Koszul homology as a depth and type detector.
//!
//! The Koszul complex on the variables measures how far a module is from
//! being free: homology concentrated in degree zero means a regular
//! sequence, anything higher cuts the depth. The invariants bundle returns
//! the homology ranks as a polynomial plus depth, type and spread read off
//! from it.

use homolocal::koszul::koszul_invariants;
use homolocal::{FieldSpec, GradedModule, GradedRing, Result};

fn main() -> Result<()> {
    let field = FieldSpec::new(5)?;

    // the ambient polynomial ring in two variables: depth 2, a free module
    let ambient = GradedRing::new(field, vec![("x".into(), 1), ("y".into(), 1)], &[], 12)?;
    let free = GradedModule::free_module(ambient.clone(), vec![0])?;
    report("F_5[x,y]", koszul_invariants(&free, 2)?);

    // an Artinian complete intersection: depth 0, type 1 (Gorenstein)
    let ci = GradedRing::new(
        field,
        vec![("x".into(), 1), ("y".into(), 1)],
        &["x^2".into(), "y^3".into()],
        12,
    )?;
    let ci_free = GradedModule::free_module(ci.clone(), vec![0])?;
    report("F_5[x,y]/(x^2,y^3)", koszul_invariants(&ci_free, 2)?);

    // killing the whole square of the maximal ideal: type jumps to 2
    let fat = GradedRing::new(
        field,
        vec![("x".into(), 1), ("y".into(), 1)],
        &["x^2".into(), "x*y".into(), "y^2".into()],
        12,
    )?;
    let fat_free = GradedModule::free_module(fat.clone(), vec![0])?;
    report("F_5[x,y]/m^2", koszul_invariants(&fat_free, 2)?);

    // a non-free module over the polynomial ring still has positive depth
    let x = ambient.parse_element("x")?;
    let cut = GradedModule::from_presentation(ambient, vec![0], &[vec![x]])?;
    report("F_5[x,y]/(x) as module", koszul_invariants(&cut, 2)?);
    Ok(())
}

fn report(label: &str, inv: homolocal::koszul::KoszulInvariants) {
    println!("{label}");
    println!("  homology ranks {:?}", inv.polynomial.coeffs());
    println!(
        "  depth {:?}  type {:?}  spread {:?}  certified {}",
        inv.depth, inv.cm_type, inv.spread, inv.certified
    );
}
