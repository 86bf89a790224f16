//! Koszul complexes by iterated mapping cones, and the numerical data they
//! carry: the Koszul polynomial, depth, type, and spread.

use crate::complex::{mapping_cone, EvaluatedComplex, HomologyProfile};
use crate::error::{Error, Result};
use crate::module::GradedModule;
use crate::ring::RingElement;
use crate::series::ZPoly;

/// Koszul complex on the given homogeneous elements with coefficients in a
/// module, built as an iterated cone of multiplication maps.
pub fn koszul_complex(module: &GradedModule, elements: &[RingElement]) -> Result<EvaluatedComplex> {
    let mut c = EvaluatedComplex::from_module(module);
    for v in elements {
        if v.is_zero() {
            return Err(Error::Validation(
                "Koszul elements must be nonzero; drop zero entries first".into(),
            ));
        }
        let (s, _) = v
            .homogeneous_part()
            .ok_or_else(|| Error::NonHomogeneousElement(format!("{v:?}")))?;
        if s < 1 {
            return Err(Error::Validation(
                "Koszul elements must have positive degree".into(),
            ));
        }
        let prev = c;
        c = mapping_cone(&prev, &prev, s, &|n, d| prev.element_op(v, n, d - s))?;
    }
    Ok(c)
}

/// Koszul complex on all ring variables. Its homology is killed by the
/// maximal ideal, so certified totals are exact.
pub fn koszul_on_variables(module: &GradedModule) -> Result<EvaluatedComplex> {
    let ring = module.ring();
    let vars: Vec<RingElement> = (0..ring.num_vars()).map(|v| ring.var(v)).collect();
    koszul_complex(module, &vars)
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct KoszulInvariants {
    /// Coefficient of t^i is the total rank of the i-th Koszul homology.
    pub polynomial: ZPoly,
    /// Whether every homology total carries a clean certification.
    pub certified: bool,
    /// edim minus the top nonzero homology index; None for the zero module.
    pub depth: Option<i64>,
    /// Rank of the top nonzero homology.
    pub cm_type: Option<u64>,
    /// One more than the top internal degree carrying homology; None for
    /// the zero module.
    pub spread: Option<i64>,
    pub profiles: Vec<HomologyProfile>,
}

/// Homology of the Koszul complex on all variables, condensed into the
/// standard invariants.
pub fn koszul_invariants(module: &GradedModule, guard: i64) -> Result<KoszulInvariants> {
    let ring = module.ring();
    let edim = ring.edim() as i64;
    let k = koszul_on_variables(module)?;
    let profiles = k.homology_table(0, edim, guard)?;
    let certified = profiles.iter().all(|p| p.certified);
    let poly = ZPoly::new(
        0,
        profiles.iter().map(|p| p.total as i64).collect::<Vec<_>>(),
    );
    let sup = profiles.iter().rev().find(|p| p.total > 0).map(|p| p.n);
    let depth = sup.map(|s| edim - s);
    let cm_type = sup.map(|s| profiles[(s) as usize].total as u64);
    let spread = profiles
        .iter()
        .flat_map(|p| p.by_degree.iter().map(|&(d, _)| d))
        .max()
        .map(|d| d + 1);
    Ok(KoszulInvariants { polynomial: poly, certified, depth, cm_type, spread, profiles })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::ring::GradedRing;
    use std::sync::Arc;

    fn ring(p: u64, rels: &[&str], d: i64) -> Arc<GradedRing> {
        GradedRing::new(
            FieldSpec::new(p).unwrap(),
            vec![("x".into(), 1), ("y".into(), 1)],
            &rels.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            d,
        )
        .unwrap()
    }

    #[test]
    fn square_free_complete_intersection() {
        let r = ring(2, &["x^2", "y^2"], 8);
        let m = GradedModule::free_module(r, vec![0]).unwrap();
        let inv = koszul_invariants(&m, 2).unwrap();
        assert!(inv.certified);
        assert_eq!(inv.polynomial, ZPoly::new(0, vec![1, 2, 1]));
        assert_eq!(inv.depth, Some(0));
        assert_eq!(inv.cm_type, Some(1));
        // homology sits in internal degrees 0, 2, 4
        assert_eq!(inv.spread, Some(5));
    }

    #[test]
    fn fibonacci_ring_over_itself() {
        let r = ring(101, &["x^2", "x*y"], 12);
        let m = GradedModule::free_module(r, vec![0]).unwrap();
        let inv = koszul_invariants(&m, 3).unwrap();
        assert!(inv.certified);
        assert_eq!(inv.polynomial, ZPoly::new(0, vec![1, 2, 1]));
        assert_eq!(inv.depth, Some(0));
        assert_eq!(inv.cm_type, Some(1));
        assert_eq!(inv.spread, Some(4));
    }

    #[test]
    fn regular_ring_is_depth_two() {
        let r = ring(101, &[], 10);
        let m = GradedModule::free_module(r, vec![0]).unwrap();
        let inv = koszul_invariants(&m, 3).unwrap();
        assert!(inv.certified);
        assert_eq!(inv.polynomial, ZPoly::new(0, vec![1]));
        assert_eq!(inv.depth, Some(2));
        assert_eq!(inv.cm_type, Some(1));
        assert_eq!(inv.spread, Some(1));
    }

    #[test]
    fn residue_field_koszul_is_exterior() {
        let r = ring(2, &["x^2", "x*y", "y^2"], 8);
        let k = GradedModule::residue_field(r);
        let inv = koszul_invariants(&k, 2).unwrap();
        assert_eq!(inv.polynomial, ZPoly::new(0, vec![1, 2, 1]));
        assert_eq!(inv.depth, Some(0));
        assert_eq!(inv.spread, Some(3));
    }

    #[test]
    fn zero_module_has_empty_invariants() {
        let r = ring(2, &["x^2", "x*y", "y^2"], 8);
        let z = GradedModule::zero_module(r);
        let inv = koszul_invariants(&z, 2).unwrap();
        assert!(inv.polynomial.is_zero());
        assert_eq!(inv.depth, None);
        assert_eq!(inv.spread, None);
    }

    #[test]
    fn koszul_polynomial_of_matlis_dual_reverses() {
        // for a finite length module: polynomial of the dual is the
        // reversal at the embedding dimension
        let r = ring(2, &["x^2", "x*y", "y^2"], 8);
        let m = GradedModule::from_presentation(r.clone(), vec![0, 1], &[vec![r.var(1), r.zero()]])
            .unwrap();
        let inv = koszul_invariants(&m, 2).unwrap();
        let dual = m.matlis_dual().unwrap();
        let inv_dual = koszul_invariants(&dual, 2).unwrap();
        assert_eq!(inv_dual.polynomial, inv.polynomial.reverse_at(2));
    }
}
