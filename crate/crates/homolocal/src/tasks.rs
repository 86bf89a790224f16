//! Task schemas, validation and execution for parsed workspaces. Each task
//! kind has a fixed argument schema checked at load time, so a workspace
//! that parses will only fail at run time for computational reasons
//! (window exhaustion, hypothesis failures), which are recorded per block.

use crate::criteria::{
    ab_depth_check, bass_equality_check, ci_curvature_test, frobenius_ci_closed_form,
    kunz_regularity_test, peskine_szpiro_check, socle_extremality,
};
use crate::error::{Error, Result};
use crate::input::{TaskSpec, Value, Workspace};
use crate::koszul::koszul_invariants;
use crate::module::GradedModule;
use crate::phi::{
    asymptotic_estimate, bass_over, betti_over, extremality, is_module_finite,
    phi_invariant_report, separation_report, LocalHom, PhiDimension,
};
use crate::report::{Report, SeriesBlock, TaskResult, SCHEMA};
use crate::resolution::minimal_resolution_cached;
use crate::ring::{GradedRing, RingElement};
use rayon::prelude::*;
use serde_json::json;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArgKind {
    Ring,
    Module,
    Hom,
    Int,
    /// List of polynomial strings, parsed in the relevant ring at run time.
    Elements,
}

#[derive(Debug, Clone, Copy)]
pub struct ArgSpec {
    pub key: &'static str,
    pub kind: ArgKind,
    pub required: bool,
}

const fn req(key: &'static str, kind: ArgKind) -> ArgSpec {
    ArgSpec { key, kind, required: true }
}

const fn opt(key: &'static str, kind: ArgKind) -> ArgSpec {
    ArgSpec { key, kind, required: false }
}

#[derive(Debug, Clone, Copy)]
pub struct TaskSchema {
    pub kind: &'static str,
    pub args: &'static [ArgSpec],
    pub brief: &'static str,
    pub detail: &'static str,
}

pub const SCHEMAS: &[TaskSchema] = &[
    TaskSchema {
        kind: "hilbert",
        args: &[req("ring", ArgKind::Ring)],
        brief: "dimension of every graded slice of a ring",
        detail: "Emits dim_k R_d for d = 0..D, where D is the ring's truncation \
                 degree. Exact by construction: each slice is spanned by the \
                 monomials surviving reduction by the relations.",
    },
    TaskSchema {
        kind: "koszul",
        args: &[req("module", ArgKind::Module), opt("guard", ArgKind::Int)],
        brief: "Koszul homology polynomial, depth, type and spread of a module",
        detail: "Builds the Koszul complex on all ring variables with \
                 coefficients in the module and totals its homology. The \
                 polynomial has coefficient rank H_i at t^i; depth is edim \
                 minus the top nonzero index, type is the top nonzero rank, \
                 spread is one more than the top internal degree carrying \
                 homology. The guard controls tail certification.",
    },
    TaskSchema {
        kind: "betti",
        args: &[req("module", ArgKind::Module), opt("nmax", ArgKind::Int), opt("guard", ArgKind::Int)],
        brief: "classical Betti numbers from a minimal free resolution",
        detail: "Computes a degreewise-minimal free resolution of the module \
                 to level nmax and reports the ranks. A level is certified \
                 when the generator search provably saw every generator \
                 inside the truncation window.",
    },
    TaskSchema {
        kind: "betti_over",
        args: &[req("hom", ArgKind::Hom), req("module", ArgKind::Module), opt("nmax", ArgKind::Int), opt("guard", ArgKind::Int)],
        brief: "Betti numbers of a target module over a homomorphism",
        detail: "beta_n = rank of H_n(F tensor K), where F is a minimal free \
                 resolution of the source residue field and K is the Koszul \
                 complex on generators of the target maximal ideal modulo the \
                 image. For the identity these are the classical Betti \
                 numbers; for Frobenius they measure the singularity.",
    },
    TaskSchema {
        kind: "bass_over",
        args: &[req("hom", ArgKind::Hom), req("module", ArgKind::Module), opt("nmax", ArgKind::Int), opt("guard", ArgKind::Int)],
        brief: "Bass numbers of a target module over a homomorphism",
        detail: "mu^n = rank of H_(e-n) of the map complex Hom(F, K), with F \
                 a minimal free resolution of the source residue field, K the \
                 Koszul complex on e residual generators of the target \
                 maximal ideal. For the identity these are the classical Bass \
                 numbers; a settled zero tail pins the injective dimension.",
    },
    TaskSchema {
        kind: "phi_report",
        args: &[req("hom", ArgKind::Hom), req("module", ArgKind::Module), opt("nmax", ArgKind::Int), opt("guard", ArgKind::Int)],
        brief: "full invariant report over a homomorphism",
        detail: "One pass over both number sequences: Betti and Bass numbers \
                 over the map, projective and injective dimension flags, \
                 growth estimates (complexity and curvature) on both sides, \
                 the ceiling comparison with the residue-field series, and \
                 the extremality comparison.",
    },
    TaskSchema {
        kind: "separated",
        args: &[req("hom", ArgKind::Hom), req("module", ArgKind::Module), opt("nmax", ArgKind::Int), opt("guard", ArgKind::Int)],
        brief: "padded-series ceiling and equality comparison",
        detail: "Compares P(t) * (1+t)^(edim S - edim phi) against P_k(t) * \
                 kappa(t) coefficientwise, where P is the module's series \
                 over the map, P_k the source residue-field series, kappa the \
                 module's Koszul polynomial. The product side always \
                 dominates; equality through the window is the separated \
                 verdict.",
    },
    TaskSchema {
        kind: "extremal",
        args: &[req("hom", ArgKind::Hom), req("module", ArgKind::Module), opt("nmax", ArgKind::Int), opt("guard", ArgKind::Int)],
        brief: "growth comparison against the residue field",
        detail: "Estimates complexity and curvature of the module's numbers \
                 over the map and of the source residue field over the source \
                 ring. Extremal means both growth scales agree: equal \
                 complexity class and matching curvature within 0.1.",
    },
    TaskSchema {
        kind: "growth",
        args: &[req("hom", ArgKind::Hom), req("module", ArgKind::Module), opt("nmax", ArgKind::Int), opt("guard", ArgKind::Int)],
        brief: "complexity and curvature estimates over a homomorphism",
        detail: "Complexity: smallest c such that beta_n / n^(c-1) is \
                 non-increasing over the trailing half-window (0 for a zero \
                 tail, none when nothing polynomial fits). Curvature: max of \
                 beta_n^(1/n) over the tail. Both are heuristic window \
                 estimates, reported with the window.",
    },
    TaskSchema {
        kind: "contracting",
        args: &[req("hom", ArgKind::Hom)],
        brief: "contraction and module-finiteness tests for an endomorphism",
        detail: "An endomorphism is contracting when some iterate bounded by \
                 the embedding dimension pushes every variable into the \
                 square of the maximal ideal; Frobenius is the model case. \
                 Module-finiteness checks that the target is finite over the \
                 image ideal.",
    },
    TaskSchema {
        kind: "kunz_regularity",
        args: &[req("ring", ArgKind::Ring), opt("power", ArgKind::Int), opt("nmax", ArgKind::Int), opt("guard", ArgKind::Int)],
        brief: "regularity test via the Frobenius endomorphism",
        detail: "The ring is regular exactly when its Betti numbers over a \
                 Frobenius power vanish in a rigid tail. Pass and fail both \
                 come from certified finite data; short windows return \
                 undetermined.",
    },
    TaskSchema {
        kind: "ci_curvature",
        args: &[req("ring", ArgKind::Ring), opt("power", ArgKind::Int), opt("nmax", ArgKind::Int), opt("guard", ArgKind::Int)],
        brief: "complete-intersection test via Frobenius growth",
        detail: "Complete intersections are the rings whose Betti numbers \
                 over Frobenius grow polynomially; all other rings grow \
                 exponentially. Pass on a polynomial envelope, fail on \
                 certified growth with curvature at least 1.3.",
    },
    TaskSchema {
        kind: "frobenius_closed_form",
        args: &[req("ring", ArgKind::Ring), opt("module", ArgKind::Module), opt("power", ArgKind::Int), opt("nmax", ArgKind::Int), opt("guard", ArgKind::Int)],
        brief: "closed-form check for Betti numbers over Frobenius on a complete intersection",
        detail: "For a ring presented by a regular relation sequence (checked \
                 by Koszul homology concentration in the ambient polynomial \
                 ring), the series over Frobenius must equal kappa(t) * \
                 (1+t)^dim / (1-t)^codim coefficientwise; on Artinian rings \
                 the Bass side must equal the reversed Koszul polynomial over \
                 (1-t)^codim. The module defaults to the ring itself.",
    },
    TaskSchema {
        kind: "socle_extremality",
        args: &[req("hom", ArgKind::Hom), req("module", ArgKind::Module), opt("cut", ArgKind::Elements), opt("nmax", ArgKind::Int), opt("guard", ArgKind::Int)],
        brief: "sufficient socle condition for extremality",
        detail: "After cutting the module by a regular set (verified by \
                 Koszul concentration), checks whether the socle escapes the \
                 maximal ideal times the module, either over the target ring \
                 or over the source acting through the map (the latter needs \
                 a module-finite map). Pass asserts extremality; silence is \
                 undetermined, never fail, because the condition is \
                 sufficient only.",
    },
    TaskSchema {
        kind: "bass_equality",
        args: &[req("hom", ArgKind::Hom), req("module", ArgKind::Module), opt("nmax", ArgKind::Int), opt("guard", ArgKind::Int)],
        brief: "finite injective dimension forces depth = dimension",
        detail: "When the Bass numbers over the map settle to a finite \
                 injective dimension, that dimension must equal both the \
                 depth and the Krull dimension of the source ring. Depth \
                 comes from Koszul homology, dimension from the Hilbert tail.",
    },
    TaskSchema {
        kind: "ab_depth",
        args: &[req("hom", ArgKind::Hom), req("module", ArgKind::Module), opt("nmax", ArgKind::Int), opt("guard", ArgKind::Int)],
        brief: "depth bookkeeping across a homomorphism",
        detail: "When the projective dimension over the map is finite, the \
                 module's depth over the target equals the source depth minus \
                 that dimension. Both depths come from Koszul homology.",
    },
    TaskSchema {
        kind: "peskine_szpiro",
        args: &[req("hom", ArgKind::Hom), opt("nmax", ArgKind::Int), opt("guard", ArgKind::Int)],
        brief: "finite injective dimension of the target forces a Gorenstein source",
        detail: "If the target ring has finite injective dimension over the \
                 map, the flat side must settle too and the source ring must \
                 be Gorenstein (depth = dimension and Koszul type 1).",
    },
    TaskSchema {
        kind: "check_suite",
        args: &[req("ring", ArgKind::Ring), opt("module", ArgKind::Module), opt("power", ArgKind::Int), opt("nmax", ArgKind::Int), opt("guard", ArgKind::Int)],
        brief: "every ring criterion in one run",
        detail: "Runs the regularity test and the complete-intersection test \
                 over Frobenius, the closed-form check when the relation set \
                 is regular (skipped with a reason otherwise), the socle \
                 condition over Frobenius, and the Bass equality, depth \
                 bookkeeping and Gorenstein checks over the identity. One \
                 verdict block per criterion.",
    },
];

pub fn task_schema(kind: &str) -> Option<&'static TaskSchema> {
    SCHEMAS.iter().find(|s| s.kind == kind)
}

pub fn known_kinds() -> Vec<&'static str> {
    SCHEMAS.iter().map(|s| s.kind).collect()
}

/// Text for `explain KIND`: what the task computes and how to invoke it.
pub fn explain(kind: &str) -> Option<String> {
    let s = task_schema(kind)?;
    let mut out = format!("{}: {}\n\n{}\n\nsettings:\n", s.kind, s.brief, s.detail);
    for a in s.args {
        let need = if a.required { "required" } else { "optional" };
        let ty = match a.kind {
            ArgKind::Ring => "ring name",
            ArgKind::Module => "module name",
            ArgKind::Hom => "hom name",
            ArgKind::Int => "integer",
            ArgKind::Elements => "list of polynomial strings",
        };
        out.push_str(&format!("  {} = <{}> ({})\n", a.key, ty, need));
    }
    Some(out)
}

fn arg_err(t: &TaskSpec, msg: String) -> Error {
    Error::Parse { line: t.line, col: 1, msg: format!("task {}: {msg}", t.kind) }
}

/// Load-time schema check: kinds known, keys known, required keys present
/// and well-typed, references resolving, rings matching.
pub fn validate_tasks(ws: &Workspace) -> Result<()> {
    for t in &ws.tasks {
        let schema = task_schema(&t.kind).ok_or_else(|| {
            arg_err(t, format!("unknown task kind (known kinds: {})", known_kinds().join(", ")))
        })?;
        for key in t.args.keys() {
            if !schema.args.iter().any(|a| a.key == key) {
                return Err(arg_err(t, format!("unknown setting `{key}`")));
            }
        }
        for a in schema.args {
            let v = t.args.get(a.key);
            if v.is_none() {
                if a.required {
                    return Err(arg_err(t, format!("missing `{}`", a.key)));
                }
                continue;
            }
            let v = v.unwrap();
            match a.kind {
                ArgKind::Int => {
                    let Value::Int(n) = v else {
                        return Err(arg_err(t, format!("`{}` must be an integer", a.key)));
                    };
                    if *n < 0 {
                        return Err(arg_err(t, format!("`{}` must be non-negative", a.key)));
                    }
                    if a.key == "power" && *n < 1 {
                        return Err(arg_err(t, "`power` must be at least 1".into()));
                    }
                }
                ArgKind::Elements => {
                    if t.arg_strings(a.key).is_none() {
                        return Err(arg_err(
                            t,
                            format!("`{}` must be a list of quoted polynomials", a.key),
                        ));
                    }
                }
                ArgKind::Ring | ArgKind::Module | ArgKind::Hom => {
                    let Some(name) = t.arg_name(a.key) else {
                        return Err(arg_err(t, format!("`{}` must name an object", a.key)));
                    };
                    let found = match a.kind {
                        ArgKind::Ring => ws.ring(name).is_some(),
                        ArgKind::Module => ws.module(name).is_some(),
                        ArgKind::Hom => ws.hom(name).is_some(),
                        _ => unreachable!(),
                    };
                    if !found {
                        return Err(Error::UnknownReference {
                            name: name.to_string(),
                            line: t.line,
                        });
                    }
                }
            }
        }
        // ring compatibility between referenced objects
        if let (Some(h), Some(m)) = (ref_hom(ws, t), ref_module(ws, t)) {
            if m.ring().structural_key() != h.target().structural_key() {
                return Err(arg_err(t, "`module` must live over the hom's target ring".into()));
            }
        }
        if let (Some(r), Some(m)) = (ref_ring(ws, t), ref_module(ws, t)) {
            if m.ring().structural_key() != r.structural_key() {
                return Err(arg_err(t, "`module` must live over `ring`".into()));
            }
        }
        if t.kind == "socle_extremality" {
            if let (Some(h), Some(texts)) = (ref_hom(ws, t), t.arg_strings("cut")) {
                for s in &texts {
                    h.target().parse_element(s).map_err(|e| {
                        arg_err(t, format!("`cut` entry `{s}` does not parse: {e}"))
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn ref_ring<'a>(ws: &'a Workspace, t: &TaskSpec) -> Option<&'a Arc<GradedRing>> {
    t.arg_name("ring").and_then(|n| ws.ring(n))
}

fn ref_module<'a>(ws: &'a Workspace, t: &TaskSpec) -> Option<&'a GradedModule> {
    t.arg_name("module").and_then(|n| ws.module(n))
}

fn ref_hom<'a>(ws: &'a Workspace, t: &TaskSpec) -> Option<&'a LocalHom> {
    t.arg_name("hom").and_then(|n| ws.hom(n))
}

pub fn run_workspace(ws: &Workspace, jobs: Option<usize>) -> Report {
    let results = match jobs {
        Some(n) if n >= 1 => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| exec_all(ws)),
            Err(_) => exec_all(ws),
        },
        _ => exec_all(ws),
    };
    Report { schema: SCHEMA, results }
}

fn exec_all(ws: &Workspace) -> Vec<TaskResult> {
    ws.tasks.par_iter().map(|t| run_task(ws, t)).collect()
}

fn run_task(ws: &Workspace, t: &TaskSpec) -> TaskResult {
    match exec(ws, t) {
        Ok((data, series)) => TaskResult {
            task: t.label.clone(),
            kind: t.kind.clone(),
            ok: true,
            error: None,
            data,
            series,
        },
        Err(e) => TaskResult::failed(&t.label, &t.kind, e.to_string()),
    }
}

fn need_ring<'a>(ws: &'a Workspace, t: &TaskSpec) -> Result<&'a Arc<GradedRing>> {
    ref_ring(ws, t).ok_or_else(|| arg_err(t, "missing `ring`".into()))
}

fn need_module<'a>(ws: &'a Workspace, t: &TaskSpec) -> Result<&'a GradedModule> {
    ref_module(ws, t).ok_or_else(|| arg_err(t, "missing `module`".into()))
}

fn need_hom<'a>(ws: &'a Workspace, t: &TaskSpec) -> Result<&'a LocalHom> {
    ref_hom(ws, t).ok_or_else(|| arg_err(t, "missing `hom`".into()))
}

fn dim_json(d: PhiDimension) -> serde_json::Value {
    match d {
        PhiDimension::Finite(v) => json!(v),
        PhiDimension::MinusInfinity => json!("-infinity"),
        PhiDimension::Undetermined => serde_json::Value::Null,
    }
}

fn series_block(name: &str, values: &[u64], certified: &[bool]) -> SeriesBlock {
    SeriesBlock::new(
        name,
        0,
        values.iter().map(|&v| v as i64).collect(),
        certified.to_vec(),
    )
}

type TaskOutput = (serde_json::Value, Vec<SeriesBlock>);

fn exec(ws: &Workspace, t: &TaskSpec) -> Result<TaskOutput> {
    let nmax = t.arg_int("nmax").map(|v| v as usize).unwrap_or(ws.defaults.nmax);
    let guard = t.arg_int("guard").unwrap_or(ws.defaults.guard);
    let power = t.arg_int("power").map(|v| v as u32).unwrap_or(1);

    match t.kind.as_str() {
        "hilbert" => {
            let r = need_ring(ws, t)?;
            let values: Vec<i64> = (0..=r.truncation()).map(|d| r.dim_at(d) as i64).collect();
            let data = json!({
                "char": r.field().p(),
                "edim": r.edim(),
                "truncation": r.truncation(),
            });
            Ok((data, vec![SeriesBlock::uniform("hilbert", 0, values, true)]))
        }
        "koszul" => {
            let m = need_module(ws, t)?;
            let inv = koszul_invariants(m, guard)?;
            let edim = m.ring().edim() as i64;
            let values: Vec<i64> = (0..=edim).map(|i| inv.polynomial.get(i)).collect();
            let data = json!({
                "depth": inv.depth,
                "cm_type": inv.cm_type,
                "spread": inv.spread,
                "certified": inv.certified,
            });
            Ok((data, vec![SeriesBlock::uniform("koszul_polynomial", 0, values, inv.certified)]))
        }
        "betti" => {
            let m = need_module(ws, t)?;
            let f = minimal_resolution_cached(m, nmax, guard)?;
            let values: Vec<i64> = (0..=nmax).map(|n| f.betti(n).unwrap_or(0) as i64).collect();
            let certified: Vec<bool> = (0..=nmax).map(|n| f.level_complete(n)).collect();
            let data = json!({
                "projective_dimension": f.projective_dimension(),
                "finite": f.is_finite(),
            });
            Ok((data, vec![SeriesBlock::new("betti", 0, values, certified)]))
        }
        "betti_over" => {
            let h = need_hom(ws, t)?;
            let m = need_module(ws, t)?;
            let s = betti_over(h, m, nmax, guard)?;
            let data = json!({
                "edim_phi": s.residual_count,
                "projective_dimension": dim_json(s.homological_dimension()),
            });
            Ok((data, vec![series_block("betti_over", &s.values, &s.certified)]))
        }
        "bass_over" => {
            let h = need_hom(ws, t)?;
            let m = need_module(ws, t)?;
            let s = bass_over(h, m, nmax, guard)?;
            let data = json!({
                "edim_phi": s.residual_count,
                "injective_dimension": dim_json(s.homological_dimension()),
            });
            Ok((data, vec![series_block("bass_over", &s.values, &s.certified)]))
        }
        "phi_report" => {
            let h = need_hom(ws, t)?;
            let m = need_module(ws, t)?;
            let rep = phi_invariant_report(h, m, nmax, guard)?;
            let series = vec![
                series_block("betti_over", &rep.betti, &rep.betti_certified),
                series_block("bass_over", &rep.bass, &rep.bass_certified),
            ];
            Ok((serde_json::to_value(&rep).expect("report serializes"), series))
        }
        "separated" => {
            let h = need_hom(ws, t)?;
            let m = need_module(ws, t)?;
            let r = separation_report(h, m, nmax, guard)?;
            let verdict = if !r.certified {
                "undetermined".to_string()
            } else if r.separated {
                format!("separated-up-to-{}", r.compared_through)
            } else {
                format!("violated-at-{}", r.first_strict.unwrap_or(-1))
            };
            let data = json!({
                "verdict": verdict,
                "report": serde_json::to_value(&r).expect("report serializes"),
            });
            Ok((data, Vec::new()))
        }
        "extremal" => {
            let h = need_hom(ws, t)?;
            let m = need_module(ws, t)?;
            let r = extremality(h, m, nmax, guard)?;
            let verdict = if !r.certified {
                "undetermined"
            } else if r.extremal {
                "extremal"
            } else {
                "not-extremal"
            };
            let data = json!({
                "verdict": verdict,
                "report": serde_json::to_value(&r).expect("report serializes"),
            });
            Ok((data, Vec::new()))
        }
        "growth" => {
            let h = need_hom(ws, t)?;
            let m = need_module(ws, t)?;
            let s = betti_over(h, m, nmax, guard)?;
            let est = asymptotic_estimate(&s.values)?;
            let data = json!({
                "complexity": est.complexity,
                "curvature": est.curvature,
                "certified": s.all_certified(),
                "window": nmax,
            });
            Ok((data, vec![series_block("betti_over", &s.values, &s.certified)]))
        }
        "contracting" => {
            let h = need_hom(ws, t)?;
            let data = json!({
                "contracting": h.is_contracting()?,
                "module_finite": is_module_finite(h)?,
                "edim_phi": h.residual_edim()?,
                "scale": h.scale(),
            });
            Ok((data, Vec::new()))
        }
        "kunz_regularity" => {
            let r = need_ring(ws, t)?;
            let v = kunz_regularity_test(r, power, nmax, guard)?;
            Ok((serde_json::to_value(&v).expect("verdict serializes"), Vec::new()))
        }
        "ci_curvature" => {
            let r = need_ring(ws, t)?;
            let v = ci_curvature_test(r, power, nmax, guard)?;
            Ok((serde_json::to_value(&v).expect("verdict serializes"), Vec::new()))
        }
        "frobenius_closed_form" => {
            let r = need_ring(ws, t)?;
            let owned;
            let m = match ref_module(ws, t) {
                Some(m) => m,
                None => {
                    owned = GradedModule::free_module(r.clone(), vec![0])?;
                    &owned
                }
            };
            let v = frobenius_ci_closed_form(r, m, power, nmax, guard)?;
            Ok((serde_json::to_value(&v).expect("verdict serializes"), Vec::new()))
        }
        "socle_extremality" => {
            let h = need_hom(ws, t)?;
            let m = need_module(ws, t)?;
            let cut: Vec<RingElement> = t
                .arg_strings("cut")
                .unwrap_or_default()
                .iter()
                .map(|s| h.target().parse_element(s))
                .collect::<Result<_>>()?;
            let v = socle_extremality(h, m, &cut, nmax, guard)?;
            Ok((serde_json::to_value(&v).expect("verdict serializes"), Vec::new()))
        }
        "bass_equality" => {
            let h = need_hom(ws, t)?;
            let m = need_module(ws, t)?;
            let v = bass_equality_check(h, m, nmax, guard)?;
            Ok((serde_json::to_value(&v).expect("verdict serializes"), Vec::new()))
        }
        "ab_depth" => {
            let h = need_hom(ws, t)?;
            let m = need_module(ws, t)?;
            let v = ab_depth_check(h, m, nmax, guard)?;
            Ok((serde_json::to_value(&v).expect("verdict serializes"), Vec::new()))
        }
        "peskine_szpiro" => {
            let h = need_hom(ws, t)?;
            let v = peskine_szpiro_check(h, nmax, guard)?;
            Ok((serde_json::to_value(&v).expect("verdict serializes"), Vec::new()))
        }
        "check_suite" => {
            let r = need_ring(ws, t)?;
            let owned;
            let m = match ref_module(ws, t) {
                Some(m) => m,
                None => {
                    owned = GradedModule::free_module(r.clone(), vec![0])?;
                    &owned
                }
            };
            run_suite(r, m, power, nmax, guard)
        }
        other => Err(arg_err(t, format!("unknown task kind `{other}`"))),
    }
}

/// All criteria on one ring: hypothesis failures (non-regular relation or
/// cut sets) are recorded as skips, anything else aborts the suite task.
fn run_suite(
    ring: &Arc<GradedRing>,
    module: &GradedModule,
    power: u32,
    nmax: usize,
    guard: i64,
) -> Result<TaskOutput> {
    let mut verdicts = Vec::new();
    let mut skipped = Vec::new();
    let push = |res: Result<crate::criteria::CriterionVerdict>,
                    name: &str,
                    verdicts: &mut Vec<serde_json::Value>,
                    skipped: &mut Vec<serde_json::Value>|
     -> Result<()> {
        match res {
            Ok(v) => {
                verdicts.push(serde_json::to_value(&v).expect("verdict serializes"));
                Ok(())
            }
            Err(Error::NotCI(n)) => {
                skipped.push(json!({
                    "name": name,
                    "reason": format!("relation set is not a regular sequence (homology at {n})"),
                }));
                Ok(())
            }
            Err(Error::NotRegularSet(n)) => {
                skipped.push(json!({
                    "name": name,
                    "reason": format!("cut set is not regular (homology at {n})"),
                }));
                Ok(())
            }
            Err(e) => Err(e),
        }
    };

    let frob = LocalHom::frobenius(ring.clone(), power)?;
    let id = LocalHom::identity(ring.clone());
    let free = GradedModule::free_module(ring.clone(), vec![0])?;

    push(kunz_regularity_test(ring, power, nmax, guard), "kunz_regularity", &mut verdicts, &mut skipped)?;
    push(ci_curvature_test(ring, power, nmax, guard), "ci_curvature", &mut verdicts, &mut skipped)?;
    push(
        frobenius_ci_closed_form(ring, module, power, nmax, guard),
        "frobenius_closed_form",
        &mut verdicts,
        &mut skipped,
    )?;
    push(
        socle_extremality(&frob, module, &[], nmax, guard),
        "socle_extremality",
        &mut verdicts,
        &mut skipped,
    )?;
    push(bass_equality_check(&id, &free, nmax, guard), "bass_equality", &mut verdicts, &mut skipped)?;
    push(ab_depth_check(&id, module, nmax, guard), "ab_depth", &mut verdicts, &mut skipped)?;
    push(peskine_szpiro_check(&id, nmax, guard), "peskine_szpiro", &mut verdicts, &mut skipped)?;

    let data = json!({
        "verdicts": verdicts,
        "skipped": skipped,
    });
    Ok((data, Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_workspace;

    fn run_text(text: &str) -> Report {
        let ws = parse_workspace(text).unwrap();
        run_workspace(&ws, Some(2))
    }

    #[test]
    fn independent_tasks_report_in_declaration_order() {
        let rep = run_text(
            "ring R { char=101 vars=[x, y] relations=[\"x^2\", \"x*y\"] truncate=20 }\n\
             module k over R { gens=[0] relations_matrix=[[\"x\"], [\"y\"]] }\n\
             defaults { nmax=6 }\n\
             task betti { module=k }\n\
             task hilbert { ring=R }\n\
             task koszul { module=k }\n",
        );
        assert_eq!(rep.results.len(), 3);
        assert!(rep.results.iter().all(|r| r.ok));
        assert_eq!(rep.results[0].kind, "betti");
        assert_eq!(rep.results[1].kind, "hilbert");
        assert_eq!(rep.results[2].kind, "koszul");
        // the Fibonacci resolution over the fiber-product ring
        assert_eq!(rep.results[0].series[0].values, vec![1, 2, 3, 5, 8, 13, 21]);
    }

    #[test]
    fn failing_task_does_not_abort_siblings() {
        let rep = run_text(
            "ring R { char=2 vars=[x] relations=[\"x^2\"] truncate=3 }\n\
             module N over R { gens=[0] }\n\
             hom f from R to R { frobenius=1 }\n\
             task bass_over { hom=f module=N nmax=9 }\n\
             task hilbert { ring=R }\n",
        );
        assert_eq!(rep.results.len(), 2);
        assert!(!rep.results[0].ok, "tiny window must fail: {:?}", rep.results[0]);
        assert!(rep.results[0].error.is_some());
        assert!(rep.results[1].ok);
    }

    #[test]
    fn unknown_kind_and_bad_reference_fail_at_load() {
        let err = parse_workspace(
            "ring R { char=2 vars=[x] truncate=6 }\ntask frobnicate { ring=R }\n",
        )
        .unwrap_err();
        assert!(err.to_string().contains("unknown task kind"));

        let err = parse_workspace(
            "ring R { char=2 vars=[x] truncate=6 }\ntask hilbert { ring=S }\n",
        )
        .unwrap_err();
        assert!(matches!(err, Error::UnknownReference { .. }));
    }

    #[test]
    fn check_suite_emits_one_verdict_block_per_criterion() {
        let rep = run_text(
            "ring R { char=2 vars=[x] relations=[\"x^2\"] truncate=10 }\n\
             defaults { nmax=12 }\n\
             task check_suite { ring=R }\n",
        );
        assert!(rep.results[0].ok, "{:?}", rep.results[0].error);
        let verdicts = rep.results[0].data["verdicts"].as_array().unwrap();
        assert_eq!(verdicts.len(), 7);
        for v in verdicts {
            assert!(v["verdict"].is_string());
        }
        // dual numbers: regularity fails, everything else passes
        let by_name: std::collections::BTreeMap<&str, &str> = verdicts
            .iter()
            .map(|v| (v["name"].as_str().unwrap(), v["verdict"].as_str().unwrap()))
            .collect();
        assert_eq!(by_name["kunz_regularity"], "fail");
        assert_eq!(by_name["ci_curvature"], "pass");
        assert_eq!(by_name["frobenius_ci_closed_form"], "pass");
        assert_eq!(by_name["bass_equality"], "pass");
        assert_eq!(by_name["peskine_szpiro"], "pass");
    }

    #[test]
    fn golod_suite_skips_the_closed_form() {
        let rep = run_text(
            "ring G { char=2 vars=[x, y] relations=[\"x^2\", \"x*y\", \"y^2\"] truncate=8 }\n\
             defaults { nmax=12 }\n\
             task check_suite { ring=G }\n",
        );
        assert!(rep.results[0].ok);
        let skipped = rep.results[0].data["skipped"].as_array().unwrap();
        assert_eq!(skipped.len(), 1);
        assert_eq!(skipped[0]["name"], "frobenius_closed_form");
    }

    #[test]
    fn explain_covers_every_kind() {
        for s in SCHEMAS {
            let text = explain(s.kind).unwrap();
            assert!(text.contains(s.kind));
            assert!(text.contains("settings:"));
        }
        assert!(explain("frobnicate").is_none());
    }
}
