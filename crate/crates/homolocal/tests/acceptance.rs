//! Acceptance gate: twelve end-to-end checks with fixed expected values.
//! Each test prints one verdict line; tolerances are zero unless a check
//! explicitly concerns a floating-point growth estimate.

use std::sync::Arc;

use homolocal::input::parse_workspace;
use homolocal::koszul::{koszul_complex, koszul_invariants};
use homolocal::phi::{
    asymptotic_estimate, base_change_tensor, bass_over, betti_over, betti_over_with,
    complexity_estimate, curvature_estimate, extremality, is_module_finite, restrict_scalars,
    separation_report, LocalHom,
};
use homolocal::complex::mapping_cone;
use homolocal::criteria::{
    ab_depth_check, bass_equality_check, ci_curvature_test, frobenius_ci_closed_form,
    kunz_regularity_test, peskine_szpiro_check, socle_extremality, Verdict,
};
use homolocal::report::Format;
use homolocal::resolution::minimal_resolution;
use homolocal::series::ZPoly;
use homolocal::tasks::run_workspace;
use homolocal::{Error, FieldSpec, GradedModule, GradedRing};

fn ring(p: u64, vars: &[(&str, u32)], rels: &[&str], d: i64) -> Arc<GradedRing> {
    GradedRing::new(
        FieldSpec::new(p).unwrap(),
        vars.iter().map(|(n, w)| (n.to_string(), *w)).collect(),
        &rels.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        d,
    )
    .unwrap()
}

fn pass(n: u32, what: &str) {
    println!("criterion {n:02}: PASS  {what}");
}

#[derive(serde::Deserialize)]
struct CorpusLabel {
    file: String,
    ring: String,
    module: String,
    hom: String,
    ci: bool,
    edim: i64,
    module_mingens: i64,
    module_type: u64,
    module_depth: i64,
    koszul_poly: Vec<i64>,
    module_finite_pair: bool,
}

fn corpus() -> Vec<(CorpusLabel, homolocal::input::Workspace)> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/corpus");
    let labels: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(format!("{dir}/labels.json")).unwrap())
            .unwrap();
    labels["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            let label: CorpusLabel = serde_json::from_value(e.clone()).unwrap();
            let text = std::fs::read_to_string(format!("{dir}/{}", label.file)).unwrap();
            let ws = parse_workspace(&text).unwrap();
            (label, ws)
        })
        .collect()
}

#[test]
fn criterion_01_fibonacci_betti_table() {
    let r = ring(101, &[("x", 1), ("y", 1)], &["x^2", "x*y"], 20);
    let k = GradedModule::residue_field(r.clone());
    let n = GradedModule::from_presentation(r.clone(), vec![0], &[vec![r.parse_element("x").unwrap()]])
        .unwrap();

    let fk = minimal_resolution(&k, 10, 2).unwrap();
    let want_k: [u64; 11] = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144];
    for (i, &w) in want_k.iter().enumerate() {
        assert_eq!(fk.betti(i), Some(w), "residue field at level {i}");
        assert!(fk.level_complete(i));
    }

    let fn_ = minimal_resolution(&n, 10, 2).unwrap();
    let want_n: [u64; 11] = [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89];
    for (i, &w) in want_n.iter().enumerate() {
        assert_eq!(fn_.betti(i), Some(w), "cyclic module at level {i}");
    }
    assert_eq!(fn_.betti(1), fn_.betti(0), "one generator, one relation");

    // the separated verdict through the task layer, as the file format says it
    let ws = parse_workspace(
        "ring R { char=101 vars=[x, y] relations=[\"x^2\", \"x*y\"] truncate=20 }\n\
         module N over R { gens=[0] relations_matrix=[[\"x\"]] }\n\
         hom id from R to R { images=[x, y] scale=1 }\n\
         defaults { nmax=10 guard=2 }\n\
         task separated { hom=id module=N }\n",
    )
    .unwrap();
    let rep = run_workspace(&ws, None);
    assert!(rep.results[0].ok, "{:?}", rep.results[0].error);
    assert_eq!(rep.results[0].data["verdict"], "separated-up-to-10");
    pass(1, "Fibonacci Betti tables, separated verdict, sharp first step");
}

#[test]
fn criterion_02_doubling_growth_and_curvature() {
    let r = ring(2, &[("x", 1), ("y", 1)], &["x^2", "x*y", "y^2"], 8);
    let k = GradedModule::residue_field(r.clone());
    let f = minimal_resolution(&k, 12, 2).unwrap();
    let values: Vec<u64> = (0..=12).map(|i| f.betti(i).unwrap()).collect();
    for (n, &v) in values.iter().enumerate() {
        assert_eq!(v, 1u64 << n, "doubling at level {n}");
        assert!(f.level_complete(n));
    }
    let curv = curvature_estimate(&values).unwrap();
    assert!((1.9..=2.0).contains(&curv), "curvature estimate {curv}");
    pass(2, "exact doubling through level 12, curvature in [1.9, 2.0]");
}

#[test]
fn criterion_03_frobenius_closed_form_on_two_squares() {
    let r = ring(2, &[("x", 1), ("y", 1)], &["x^2", "y^2"], 10);
    let phi = LocalHom::frobenius(r.clone(), 1).unwrap();
    let free = GradedModule::free_module(r.clone(), vec![0]).unwrap();

    let s = betti_over(&phi, &free, 12, 2).unwrap();
    assert!(s.all_certified());
    assert_eq!(s.values[0], 1);
    for n in 1..=12usize {
        assert_eq!(s.values[n], 4 * n as u64, "4n law at {n}");
    }

    // independent expansion of the rational form
    let numer = ZPoly::one_plus_t().pow(2);
    let denom = ZPoly::one_minus_t().pow(2);
    let expansion = numer.expand_div(&denom, 0, 12);
    for n in 0..=12i64 {
        assert_eq!(expansion.get(n), s.values[n as usize] as i64);
    }

    let v = frobenius_ci_closed_form(&r, &free, 1, 12, 2).unwrap();
    assert_eq!(v.verdict, Verdict::Pass);

    assert_eq!(complexity_estimate(&s.values).unwrap(), Some(2), "codimension two");
    let ext = extremality(&phi, &free, 12, 2).unwrap();
    assert!(ext.extremal && ext.certified);
    pass(3, "1, 4n series matches the expanded closed form; complexity 2; extremal");
}

#[test]
fn criterion_04_shift_endomorphism_complexity_ladder() {
    let r = ring(2, &[("x1", 1), ("x2", 1), ("x3", 1)], &["x1^2", "x2^2", "x3^2"], 8);
    let shift = LocalHom::new(
        r.clone(),
        r.clone(),
        vec![r.parse_element("x2").unwrap(), r.parse_element("x3").unwrap(), r.zero()],
        1,
    )
    .unwrap();
    assert!(shift.is_contracting().unwrap());
    let free = GradedModule::free_module(r.clone(), vec![0]).unwrap();
    for j in 1..=3u32 {
        let pj = shift.iterate(j).unwrap();
        let s = betti_over(&pj, &free, 12, 2).unwrap();
        assert!(s.all_certified());
        assert_eq!(
            complexity_estimate(&s.values).unwrap(),
            Some(j),
            "complexity of the {j}-th iterate"
        );
    }
    pass(4, "shift endomorphism iterates have complexity 1, 2, 3");
}

#[test]
fn criterion_05_regularity_detection() {
    let line = ring(2, &[("x", 1)], &[], 10);
    let plane = ring(2, &[("x", 1), ("y", 1)], &[], 10);
    let cusp = ring(2, &[("x", 1)], &["x^3"], 10);

    assert_eq!(kunz_regularity_test(&line, 1, 12, 2).unwrap().verdict, Verdict::Pass);
    assert_eq!(kunz_regularity_test(&plane, 1, 12, 2).unwrap().verdict, Verdict::Pass);
    let v = kunz_regularity_test(&cusp, 1, 12, 2).unwrap();
    assert_eq!(v.verdict, Verdict::Fail);

    // the failing ring has nonzero numbers all the way out
    let phi = LocalHom::frobenius(cusp.clone(), 1).unwrap();
    let free = GradedModule::free_module(cusp, vec![0]).unwrap();
    let s = betti_over(&phi, &free, 10, 2).unwrap();
    assert!(s.values.iter().all(|&v| v > 0));
    assert!(s.all_certified());
    pass(5, "regular rings pass, the cubic point fails with an everywhere-positive tail");
}

#[test]
fn criterion_06_polynomial_extension_collapse() {
    let r = ring(2, &[("u", 1)], &["u^2"], 8);
    let s = ring(2, &[("u", 1), ("y", 1)], &["u^2"], 8);
    let phi = LocalHom::new(r, s.clone(), vec![s.parse_element("u").unwrap()], 1).unwrap();
    let n = GradedModule::from_presentation(s.clone(), vec![0], &[vec![s.parse_element("y").unwrap()]])
        .unwrap();
    let b = betti_over(&phi, &n, 6, 2).unwrap();
    let m = bass_over(&phi, &n, 6, 2).unwrap();
    assert!(b.all_certified() && m.all_certified());
    assert_eq!(b.values, vec![1, 1, 0, 0, 0, 0, 0]);
    assert_eq!(m.values, vec![1, 1, 0, 0, 0, 0, 0]);
    pass(6, "numbers over the extension collapse to 1, 1, 0, ...");
}

// exact division by (1+t); panics if division leaves a remainder
fn divide_one_plus_t(coeffs: &[i64]) -> Vec<i64> {
    let mut q = Vec::with_capacity(coeffs.len().saturating_sub(1));
    let mut carry = 0i64;
    for (i, &a) in coeffs.iter().enumerate() {
        if i + 1 == coeffs.len() {
            assert_eq!(a, carry, "remainder after dividing by 1+t");
            break;
        }
        let qi = a - carry;
        q.push(qi);
        carry = qi;
    }
    q
}

#[test]
fn criterion_07_koszul_polynomial_laws_on_corpus() {
    for (label, ws) in corpus() {
        let n = ws.module(&label.module).unwrap();
        let inv = koszul_invariants(n, 2).unwrap();
        assert!(inv.certified, "{}: uncertified invariants", label.file);

        let got: Vec<i64> = inv.polynomial.coeffs().to_vec();
        assert_eq!(got, label.koszul_poly, "{}: golden polynomial", label.file);

        // order and first coefficient
        assert_eq!(inv.polynomial.min_support(), Some(0), "{}", label.file);
        assert_eq!(inv.polynomial.get(0), label.module_mingens, "{}: generators", label.file);

        // degree and top coefficient
        let s = label.edim - label.module_depth;
        assert_eq!(inv.polynomial.max_support(), Some(s), "{}: degree", label.file);
        assert_eq!(inv.polynomial.get(s), label.module_type as i64, "{}: type", label.file);
        assert_eq!(inv.depth, Some(label.module_depth), "{}", label.file);
        assert_eq!(inv.cm_type, Some(label.module_type), "{}", label.file);

        // none of the corpus rings is regular: (1+t) divides exactly,
        // non-negatively, and the quotient starts at the generator count
        let q = divide_one_plus_t(&got);
        assert!(q.iter().all(|&c| c >= 0), "{}: negative quotient", label.file);
        assert_eq!(q[0], label.module_mingens, "{}: quotient start", label.file);

        // duality: the polynomial of the dual module is the reversal
        let dual = n.matlis_dual().unwrap();
        let dinv = koszul_invariants(&dual, 2).unwrap();
        assert_eq!(
            dinv.polynomial,
            inv.polynomial.reverse_at(s),
            "{}: dual reversal",
            label.file
        );
    }
    pass(7, "order, degree, divisibility and duality laws hold exactly on all ten entries");
}

#[test]
fn criterion_08_ceiling_and_padding_on_corpus() {
    for (label, ws) in corpus() {
        let n = ws.module(&label.module).unwrap();
        let phi = ws.hom(&label.hom).unwrap();

        let rep = separation_report(phi, n, 10, 2).unwrap();
        assert!(rep.ceiling_holds, "{}: ceiling violated", label.file);
        assert!(rep.certified, "{}: ceiling uncertified", label.file);
        assert!(rep.compared_through >= 10, "{}: window too short", label.file);

        // one extra Koszul element multiplies the series by exactly (1+t)
        let x = phi.target().var(0);
        let base = betti_over(phi, n, 10, 2).unwrap();
        let padded = betti_over_with(phi, n, &[x], 10, 2).unwrap();
        assert!(base.all_certified() && padded.all_certified(), "{}", label.file);
        for i in 0..=10usize {
            let want = base.values[i] + if i > 0 { base.values[i - 1] } else { 0 };
            assert_eq!(padded.values[i], want, "{}: padding at {i}", label.file);
        }
    }
    pass(8, "coefficient ceiling and exact (1+t) padding on every corpus pair through n = 10");
}

#[test]
fn criterion_09_series_identities_on_corpus() {
    for (label, ws) in corpus() {
        let n = ws.module(&label.module).unwrap();
        let phi = ws.hom(&label.hom).unwrap();
        let target = phi.target();

        // cutting by the whole variable list scales by (1+t)^edim
        let vars: Vec<_> = (0..target.num_vars()).map(|v| target.var(v)).collect();
        let base = betti_over(phi, n, 8, 2).unwrap();
        let cut = betti_over_with(phi, n, &vars, 8, 2).unwrap();
        let pad = ZPoly::one_plus_t().pow(vars.len() as u32);
        let expect = base.to_series().mul_poly(&pad);
        for i in 0..=8i64 {
            assert_eq!(
                cut.values[i as usize] as i64,
                expect.get(i).unwrap_or(0) as i64,
                "{}: power padding at {i}",
                label.file
            );
        }
    }

    // additivity on three cheap pairs
    for file in ["c01_dual_numbers.hl", "c03_two_squares.hl", "c05_mixed_degrees.hl"] {
        let (label, ws) = corpus().into_iter().find(|(l, _)| l.file == file).unwrap();
        let n = ws.module(&label.module).unwrap();
        let phi = ws.hom(&label.hom).unwrap();
        let k = GradedModule::residue_field(phi.target().clone());
        let sum = n.direct_sum(&k).unwrap();
        let pn = betti_over(phi, n, 8, 2).unwrap();
        let pk = betti_over(phi, &k, 8, 2).unwrap();
        let ps = betti_over(phi, &sum, 8, 2).unwrap();
        for i in 0..=8usize {
            assert_eq!(ps.values[i], pn.values[i] + pk.values[i], "{file}: additivity at {i}");
        }
    }
    pass(9, "Koszul-cut padding and direct-sum additivity are exact on corpus pairs");
}

#[test]
fn criterion_10_module_finite_growth_agreement() {
    let designated: Vec<_> = corpus()
        .into_iter()
        .filter(|(l, _)| l.module_finite_pair)
        .collect();
    assert_eq!(designated.len(), 3);
    for (label, ws) in designated {
        let n = ws.module(&label.module).unwrap();
        let phi = ws.hom(&label.hom).unwrap();
        assert!(is_module_finite(phi).unwrap(), "{}", label.file);

        let over_phi = betti_over(phi, n, 12, 2).unwrap();
        assert!(over_phi.all_certified());
        let restricted = restrict_scalars(phi, n).unwrap();
        let id = LocalHom::identity(phi.source().clone());
        let classical = betti_over(&id, &restricted, 12, 2).unwrap();
        assert!(classical.all_certified());

        let a = asymptotic_estimate(&over_phi.values).unwrap();
        let b = asymptotic_estimate(&classical.values).unwrap();
        assert_eq!(a.complexity, b.complexity, "{}: complexity differs", label.file);
        assert!(
            (a.curvature - b.curvature).abs() <= 0.1,
            "{}: curvature {} vs {}",
            label.file,
            a.curvature,
            b.curvature
        );
    }
    pass(10, "growth over the map equals classical growth on the three module-finite pairs");
}

#[test]
fn criterion_11_criteria_examples_and_negative_controls() {
    // complete-intersection detection ladder
    let ci = ring(2, &[("x", 1), ("y", 1)], &["x^2", "y^2"], 10);
    let golod = ring(2, &[("x", 1), ("y", 1)], &["x^2", "x*y", "y^2"], 10);
    let regular = ring(2, &[("x", 1), ("y", 1)], &[], 10);
    assert_eq!(ci_curvature_test(&ci, 1, 12, 2).unwrap().verdict, Verdict::Pass);
    assert_eq!(ci_curvature_test(&golod, 1, 12, 2).unwrap().verdict, Verdict::Fail);
    assert_eq!(ci_curvature_test(&regular, 1, 12, 2).unwrap().verdict, Verdict::Pass);

    // closed form on the dual numbers with N = k: (1+t)/(1-t) expands to 1, 2, 2, ...
    let dual = ring(2, &[("x", 1)], &["x^2"], 10);
    let k = GradedModule::residue_field(dual.clone());
    let v = frobenius_ci_closed_form(&dual, &k, 1, 10, 2).unwrap();
    assert_eq!(v.verdict, Verdict::Pass);
    let computed: Vec<i64> =
        v.witness["computed_betti"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
    assert_eq!(computed[0], 1);
    assert!(computed[1..].iter().all(|&c| c == 2));
    // on a ring that is not a complete intersection the criterion refuses
    let free_g = GradedModule::free_module(golod.clone(), vec![0]).unwrap();
    assert!(matches!(
        frobenius_ci_closed_form(&golod, &free_g, 1, 10, 2),
        Err(Error::NotCI(_))
    ));

    // socle escape: sufficient condition and its rejections
    let cubic = ring(2, &[("x", 1)], &["x^3"], 10);
    let fr = LocalHom::frobenius(cubic.clone(), 1).unwrap();
    let free_c = GradedModule::free_module(cubic, vec![0]).unwrap();
    let v = socle_extremality(&fr, &free_c, &[], 10, 2).unwrap();
    assert_eq!(v.verdict, Verdict::Pass);
    assert_eq!(v.witness["source_socle_escape_degree"], serde_json::json!(1));
    let idci = LocalHom::identity(ci.clone());
    let kci = GradedModule::residue_field(ci.clone());
    let v = socle_extremality(&idci, &kci, &[], 8, 2).unwrap();
    assert_eq!(v.verdict, Verdict::Pass);
    assert_eq!(v.witness["target_socle_escape_degree"], serde_json::json!(0));
    let idr = LocalHom::identity(regular.clone());
    let free_r = GradedModule::free_module(regular.clone(), vec![0]).unwrap();
    let cut = [regular.var(0), regular.var(1)];
    assert_eq!(socle_extremality(&idr, &free_r, &cut, 8, 2).unwrap().verdict, Verdict::Pass);
    let bad = [regular.var(0), regular.var(0)];
    assert!(matches!(
        socle_extremality(&idr, &free_r, &bad, 8, 2),
        Err(Error::NotRegularSet(_))
    ));

    // injective dimension equalities and their negative control
    let id_dual = LocalHom::identity(dual.clone());
    let free_d = GradedModule::free_module(dual.clone(), vec![0]).unwrap();
    let v = bass_equality_check(&id_dual, &free_d, 6, 2).unwrap();
    assert_eq!(v.verdict, Verdict::Pass);
    assert_eq!(v.witness["injective_dimension"], serde_json::json!(0));

    let line = ring(2, &[("x", 1)], &[], 10);
    let idl = LocalHom::identity(line.clone());
    let lmod = GradedModule::from_presentation(
        line.clone(),
        vec![0],
        &[vec![line.parse_element("x^2").unwrap()]],
    )
    .unwrap();
    let v = bass_equality_check(&idl, &lmod, 8, 2).unwrap();
    assert_eq!(v.verdict, Verdict::Pass);
    assert_eq!(v.witness["injective_dimension"], serde_json::json!(1));

    let noncm = ring(101, &[("x", 1), ("y", 1)], &["x^2", "x*y"], 12);
    let idn = LocalHom::identity(noncm.clone());
    let free_n = GradedModule::free_module(noncm, vec![0]).unwrap();
    assert_eq!(bass_equality_check(&idn, &free_n, 8, 2).unwrap().verdict, Verdict::Undetermined);

    // depth arithmetic along flat extension and surjection
    let plane = ring(2, &[("x", 1), ("y", 1)], &[], 10);
    let flat = LocalHom::new(line.clone(), plane.clone(), vec![plane.var(0)], 1).unwrap();
    let free_p = GradedModule::free_module(plane.clone(), vec![0]).unwrap();
    let v = ab_depth_check(&flat, &free_p, 8, 2).unwrap();
    assert_eq!(v.verdict, Verdict::Pass);
    assert_eq!(v.witness["module_depth"], serde_json::json!(2));
    assert_eq!(v.witness["projective_dimension"], serde_json::json!(-1));

    let hsurf = ring(2, &[("x", 1), ("y", 1)], &["x^2"], 10);
    let onto = LocalHom::new(plane.clone(), hsurf.clone(), vec![hsurf.var(0), hsurf.var(1)], 1)
        .unwrap();
    let free_h = GradedModule::free_module(hsurf.clone(), vec![0]).unwrap();
    let v = ab_depth_check(&onto, &free_h, 8, 2).unwrap();
    assert_eq!(v.verdict, Verdict::Pass);
    assert_eq!(v.witness["module_depth"], serde_json::json!(1));
    assert_eq!(v.witness["projective_dimension"], serde_json::json!(1));

    // finite self-injective-dimension forces the source to be nice
    let v = peskine_szpiro_check(&id_dual, 8, 2).unwrap();
    assert_eq!(v.verdict, Verdict::Pass);
    let surj = LocalHom::new(line.clone(), dual.clone(), vec![dual.var(0)], 1).unwrap();
    let v = peskine_szpiro_check(&surj, 8, 2).unwrap();
    assert_eq!(v.verdict, Verdict::Pass);
    let idg = LocalHom::identity(golod.clone());
    let v = peskine_szpiro_check(&idg, 8, 2).unwrap();
    assert_eq!(v.verdict, Verdict::Undetermined);

    pass(11, "all stated criterion examples pass; negative controls fail or stay undetermined");
}

#[test]
fn criterion_12_structural_and_randomized_checks() {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);

    // d compose d = 0 after base change, on every corpus pair
    for (label, ws) in corpus() {
        let n = ws.module(&label.module).unwrap();
        let phi = ws.hom(&label.hom).unwrap();
        let gens = phi.residual_generators().unwrap();
        let x = koszul_complex(n, &gens).unwrap();
        let kk = GradedModule::residue_field(phi.source().clone());
        let f = minimal_resolution(&kk, 6, 2).unwrap();
        let t = base_change_tensor(&f, phi, &x, 6).unwrap();
        t.check_complex().unwrap_or_else(|e| panic!("{}: {e}", label.file));
    }

    // sandwich bounds for fifty seeded nilpotent-multiplication cones
    let pool = [
        ring(2, &[("x", 1)], &["x^3"], 8),
        ring(3, &[("x", 1), ("y", 1)], &["x^2", "y^2"], 8),
        ring(2, &[("x", 1), ("y", 1)], &["x^2", "x*y", "y^2"], 8),
        ring(5, &[("x", 1)], &["x^4"], 8),
    ];
    for trial in 0..50 {
        let r = &pool[rng.random_range(0..pool.len())];
        // a random cyclic quotient, sometimes the full ring
        let m = if rng.random_range(0..3) == 0 {
            GradedModule::free_module(r.clone(), vec![0]).unwrap()
        } else {
            let v = r.var(rng.random_range(0..r.num_vars()));
            let pow = rng.random_range(1..=2u32);
            let e = r.power(&v, pow).unwrap();
            if e.is_zero() {
                GradedModule::free_module(r.clone(), vec![0]).unwrap()
            } else {
                GradedModule::from_presentation(r.clone(), vec![0], &[vec![e]]).unwrap()
            }
        };
        let vars: Vec<_> = (0..r.num_vars()).map(|v| r.var(v)).collect();
        let x = koszul_complex(&m, &vars).unwrap();
        assert!(x.is_closed_top(), "trial {trial}: open window");

        // z nilpotent of explicit order v
        let z = r.var(rng.random_range(0..r.num_vars()));
        let mut v_ord = 1u32;
        while !r.power(&z, v_ord).unwrap().is_zero() {
            v_ord += 1;
        }
        let shift = 1i64;
        let theta = |nn: i64, dd: i64| x.element_op(&z, nn, dd - shift);
        let c = mapping_cone(&x, &x, shift, &theta).unwrap();
        c.check_complex().unwrap();

        let hx = x.homology_table(x.n_lo(), x.n_hi(), 2).unwrap();
        let hc = c.homology_table(c.n_lo(), c.n_hi(), 2).unwrap();
        let rank_x = |nn: i64| {
            hx.iter().find(|p| p.n == nn).map(|p| p.total as u64).unwrap_or(0)
        };
        for p in &hc {
            let bound = rank_x(p.n) + rank_x(p.n - 1);
            assert!(p.total as u64 <= bound, "trial {trial}: upper bound at n = {}", p.n);
            assert!(
                v_ord as u64 * p.total as u64 >= bound,
                "trial {trial}: lower bound at n = {} (order {v_ord})",
                p.n
            );
        }
    }

    // determinism: the serialized report is byte-identical across runs
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/fibonacci.hl"
    ))
    .unwrap();
    let ws1 = parse_workspace(&text).unwrap();
    let ws2 = parse_workspace(&text).unwrap();
    let a = run_workspace(&ws1, None).emit(Format::Json);
    let b = run_workspace(&ws2, Some(2)).emit(Format::Json);
    assert_eq!(a, b, "parallel and serial runs must serialize identically");

    pass(12, "base-change complexes close, cone sandwich holds on 50 seeded trials, reports are byte-stable");
}
