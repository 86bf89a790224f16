//! Regularity and complete-intersection detection through Frobenius.
//!
//! A contracting endomorphism is flat exactly over a regular ring, so the
//! Betti numbers over Frobenius vanish eventually iff the ring is regular.
//! One step weaker, polynomial growth of those numbers detects complete
//! intersections. Each check returns a verdict plus the witness data it
//! was decided on.

use homolocal::criteria::{ci_curvature_test, kunz_regularity_test};
use homolocal::{FieldSpec, GradedRing, Result};

fn main() -> Result<()> {
    let field = FieldSpec::new(2)?;
    let rings = [
        ("regular line", GradedRing::new(field, vec![("x".into(), 1)], &[], 10)?),
        (
            "cusp point",
            GradedRing::new(field, vec![("x".into(), 1)], &["x^3".into()], 10)?,
        ),
        (
            "monomial CI",
            GradedRing::new(
                field,
                vec![("x".into(), 1), ("y".into(), 1)],
                &["x^2".into(), "y^2".into()],
                10,
            )?,
        ),
        (
            "fat point",
            GradedRing::new(
                field,
                vec![("x".into(), 1), ("y".into(), 1)],
                &["x^2".into(), "x*y".into(), "y^2".into()],
                10,
            )?,
        ),
    ];

    for (label, ring) in &rings {
        let reg = kunz_regularity_test(ring, 1, 12, 2)?;
        let ci = ci_curvature_test(ring, 1, 12, 2)?;
        println!("{label}:");
        println!("  {}", reg.summary_line());
        println!("  {}", ci.summary_line());
    }
    Ok(())
}
