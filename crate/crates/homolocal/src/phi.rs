//! Graded homomorphisms of local rings and the homological invariants
//! computed over them: Betti and Bass numbers over a map, projective and
//! injective dimension, growth estimates, separation and extremality.
//!
//! Every invariant runs through the same pipeline. A homomorphism carries a
//! minimal generating set x of the target maximal ideal modulo the extended
//! source ideal; the module is replaced by the Koszul complex on x; and the
//! source-side minimal resolution of the residue field is tensored over, or
//! mapped into, that complex. Homology totals of the result are the numbers.

use crate::complex::{EvaluatedComplex, HomologyProfile};
use crate::error::{Error, Result};
use crate::koszul::{koszul_complex, koszul_invariants};
use crate::matrix::{Matrix, SpanBuilder};
use crate::module::GradedModule;
use crate::resolution::{minimal_resolution_cached, FreeComplex};
use crate::ring::{GradedRing, RingElement};
use crate::series::{TruncatedSeries, ZPoly};
use std::collections::HashMap;
use std::sync::Arc;

/// A degree-scaling homomorphism between two graded local rings: variable
/// images are homogeneous of degree scale times the variable degree, and
/// every source relation maps to zero.
#[derive(Debug, Clone)]
pub struct LocalHom {
    source: Arc<GradedRing>,
    target: Arc<GradedRing>,
    images: Vec<RingElement>,
    scale: i64,
}

impl LocalHom {
    pub fn new(
        source: Arc<GradedRing>,
        target: Arc<GradedRing>,
        images: Vec<RingElement>,
        scale: i64,
    ) -> Result<LocalHom> {
        if scale < 1 {
            return Err(Error::IncompatibleDegreeScale(format!(
                "degree scale must be at least 1, got {scale}"
            )));
        }
        if source.p() != target.p() {
            return Err(Error::Validation(format!(
                "source and target live over different primes: {} vs {}",
                source.p(),
                target.p()
            )));
        }
        if images.len() != source.num_vars() {
            return Err(Error::Validation(format!(
                "need {} variable images, got {}",
                source.num_vars(),
                images.len()
            )));
        }
        for (v, img) in images.iter().enumerate() {
            if img.is_zero() {
                continue;
            }
            let want = scale * source.var_degree(v);
            match img.homogeneous_part() {
                Some((d, _)) if d == want => {}
                Some((d, _)) => {
                    return Err(Error::IncompatibleDegreeScale(format!(
                        "image of variable {} has degree {d}, expected {want}",
                        source.vars()[v].0
                    )));
                }
                None => {
                    return Err(Error::NonHomogeneousElement(format!(
                        "image of variable {}",
                        source.vars()[v].0
                    )));
                }
            }
        }
        let hom = LocalHom { source, target, images, scale };
        for (k, rel) in hom.source.relations().iter().enumerate() {
            let mut acc = hom.target.zero();
            for (c, exps) in rel {
                let cc = hom.target.field().reduce_i64(*c);
                if cc == 0 {
                    continue;
                }
                let m = hom.eval_monomial(exps)?;
                acc = hom.target.add_elements(&acc, &hom.target.scale_element(&m, cc));
            }
            if !acc.is_zero() {
                return Err(Error::RelationNotKilled { relation: format!("relation {k}") });
            }
        }
        Ok(hom)
    }

    pub fn identity(ring: Arc<GradedRing>) -> LocalHom {
        let images = (0..ring.num_vars()).map(|v| ring.var(v)).collect();
        LocalHom { source: ring.clone(), target: ring, images, scale: 1 }
    }

    /// The p^i-th power endomorphism. Fails when a variable power is alive
    /// past the truncation, since the image would not be representable.
    pub fn frobenius(ring: Arc<GradedRing>, i: u32) -> Result<LocalHom> {
        let q = ring
            .p()
            .checked_pow(i)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or_else(|| Error::Validation(format!("p^{i} overflows the power range")))?;
        let images = (0..ring.num_vars())
            .map(|v| ring.power(&ring.var(v), q as u32))
            .collect::<Result<Vec<_>>>()?;
        LocalHom::new(ring.clone(), ring, images, q as i64)
    }

    pub fn source(&self) -> &Arc<GradedRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedRing> {
        &self.target
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn images(&self) -> &[RingElement] {
        &self.images
    }

    pub fn is_endomorphism(&self) -> bool {
        Arc::ptr_eq(&self.source, &self.target)
            || self.source.structural_key() == self.target.structural_key()
    }

    fn eval_monomial(&self, exps: &[u32]) -> Result<RingElement> {
        let mut acc = self.target.one();
        for (v, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                if acc.is_zero() {
                    return Ok(acc);
                }
                acc = self.target.multiply(&acc, &self.images[v])?;
            }
        }
        Ok(acc)
    }

    /// Image of a source element, expanded through the variable images.
    pub fn apply(&self, a: &RingElement) -> Result<RingElement> {
        let mut out = self.target.zero();
        for (d, coords) in a.components() {
            let monos = self.source.basis_monomials(d)?;
            for (k, &c) in coords.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let m = self.eval_monomial(&monos[k])?;
                out = self.target.add_elements(&out, &self.target.scale_element(&m, c));
            }
        }
        Ok(out)
    }

    /// Composition: self followed by `next`.
    pub fn then(&self, next: &LocalHom) -> Result<LocalHom> {
        if self.target.structural_key() != next.source.structural_key() {
            return Err(Error::Validation(
                "composition needs matching middle rings".into(),
            ));
        }
        let images = self
            .images
            .iter()
            .map(|im| next.apply(im))
            .collect::<Result<Vec<_>>>()?;
        Ok(LocalHom {
            source: self.source.clone(),
            target: next.target.clone(),
            images,
            scale: self.scale * next.scale,
        })
    }

    /// Iterated self-composition of an endomorphism.
    pub fn iterate(&self, times: u32) -> Result<LocalHom> {
        if !self.is_endomorphism() {
            return Err(Error::Validation("iteration needs an endomorphism".into()));
        }
        let mut acc = LocalHom::identity(self.source.clone());
        for _ in 0..times {
            acc = acc.then(self)?;
        }
        Ok(acc)
    }

    /// Whether iterating to the embedding dimension drives the maximal ideal
    /// into its own square.
    pub fn is_contracting(&self) -> Result<bool> {
        if !self.is_endomorphism() {
            return Err(Error::Validation("contraction test needs an endomorphism".into()));
        }
        let e = self.source.edim() as u32;
        let ph = self.iterate(e)?;
        for img in &ph.images {
            for (d, coords) in img.components() {
                if !self.target.m_squared_slice(d)?.contains(coords) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Minimal generators of the target maximal ideal modulo its square and
    /// the extended source ideal. Variables span this quotient, so the
    /// result is a subset of the target variables, chosen greedily.
    pub fn residual_generators(&self) -> Result<Vec<RingElement>> {
        let t = &self.target;
        let field = t.field();
        let mut degrees: Vec<i64> = (0..t.num_vars()).map(|v| t.var_degree(v)).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let mut gens = Vec::new();
        for &d in &degrees {
            let mut span = SpanBuilder::new(field, t.dim_at(d));
            let sq = t.m_squared_slice(d)?;
            let basis = sq.basis();
            for r in 0..basis.rows() {
                let row: Vec<u64> = (0..basis.cols()).map(|c| basis.get(r, c)).collect();
                span.insert(&row);
            }
            for img in &self.images {
                let Some((e, _)) = img.homogeneous_part() else { continue };
                if e > d {
                    continue;
                }
                let act = t.element_action(img, d - e)?;
                for c in 0..act.cols() {
                    let col: Vec<u64> = (0..act.rows()).map(|r| act.get(r, c)).collect();
                    span.insert(&col);
                }
            }
            for v in 0..t.num_vars() {
                if t.var_degree(v) != d {
                    continue;
                }
                let var = t.var(v);
                let (_, coords) = var.homogeneous_part().expect("variables are homogeneous");
                if span.insert(coords) {
                    gens.push(var);
                }
            }
            debug_assert_eq!(span.dim(), t.dim_at(d), "variables must span degree {d}");
        }
        Ok(gens)
    }

    /// Number of residual generators.
    pub fn residual_edim(&self) -> Result<usize> {
        Ok(self.residual_generators()?.len())
    }
}

/// The Koszul complex on the residual generators with coefficients in the
/// module: the standard replacement making modules finite over the source.
pub fn section_complex(phi: &LocalHom, module: &GradedModule) -> Result<EvaluatedComplex> {
    if module.ring().structural_key() != phi.target().structural_key() {
        return Err(Error::Validation("module must live over the target ring".into()));
    }
    koszul_complex(module, &phi.residual_generators()?)
}

/// Whether the target is a finitely generated module over the source image:
/// the quotient by the extended ideal has certified finite length.
pub fn is_module_finite(phi: &LocalHom) -> Result<bool> {
    let free = GradedModule::free_module(phi.target().clone(), vec![0])?;
    let nonzero: Vec<RingElement> =
        phi.images().iter().filter(|im| !im.is_zero()).cloned().collect();
    let q = free.quotient_by_elements(&nonzero)?;
    Ok(q.is_certified_finite_length())
}

/// A target module viewed as a source module through the homomorphism.
/// Only degree scale 1 keeps the grading intact.
pub fn restrict_scalars(phi: &LocalHom, m: &GradedModule) -> Result<GradedModule> {
    if m.ring().structural_key() != phi.target().structural_key() {
        return Err(Error::Validation("module must live over the target ring".into()));
    }
    if phi.scale() != 1 {
        return Err(Error::IncompatibleDegreeScale(format!(
            "restriction keeps the grading only at degree scale 1, got {}",
            phi.scale()
        )));
    }
    let r = phi.source().clone();
    let lo = m.lo();
    let hi = m.hi().min(r.truncation() + m.inf_degree().unwrap_or(lo));
    if hi < lo {
        return Ok(GradedModule::zero_module(r));
    }
    let dims: Vec<usize> = (lo..=hi).map(|d| m.dim_at(d)).collect();
    let mut actions = Vec::new();
    for v in 0..r.num_vars() {
        let w = r.var_degree(v);
        let img = &phi.images()[v];
        let table = (lo..=hi)
            .map(|d| {
                if d + w > hi {
                    Ok(None)
                } else {
                    let act = m.element_action(img, d)?;
                    // a zero image comes back size 0; pad to the slice shape
                    if act.rows() != m.dim_at(d + w) {
                        Ok(Some(Matrix::zero(r.field(), m.dim_at(d + w), m.dim_at(d))))
                    } else {
                        Ok(Some(act))
                    }
                }
            })
            .collect::<Result<Vec<_>>>()?;
        actions.push(table);
    }
    let probe = GradedModule::from_parts(r.clone(), lo, hi, dims.clone(), actions.clone(), vec![])?;
    let mut gen_degrees = Vec::new();
    for d in lo..=hi {
        for _ in 0..probe.min_gens_at(d) {
            gen_degrees.push(d);
        }
    }
    GradedModule::from_parts(r, lo, hi, dims, actions, gen_degrees)
}

/// Betti or Bass numbers over a homomorphism, with their certification
/// state. `settle` is the homological index past which vanishing is rigid.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SeriesOverHom {
    pub values: Vec<u64>,
    pub certified: Vec<bool>,
    pub residual_count: usize,
    pub settle: i64,
    pub profiles: Vec<HomologyProfile>,
}

impl SeriesOverHom {
    pub fn all_certified(&self) -> bool {
        self.certified.iter().all(|&c| c)
    }

    pub fn to_series(&self) -> TruncatedSeries {
        TruncatedSeries::new(0, self.values.clone())
    }

    pub fn to_poly(&self) -> ZPoly {
        ZPoly::new(0, self.values.iter().map(|&v| v as i64).collect())
    }

    pub fn sup_nonzero(&self) -> Option<usize> {
        self.values.iter().rposition(|&v| v != 0)
    }

    /// Dimension read off the series: the top nonzero index minus the
    /// residual count. Needs a certified zero past the settle index (where
    /// vanishing once means vanishing forever) and a solid series below it.
    pub fn homological_dimension(&self) -> PhiDimension {
        let e = self.residual_count as i64;
        let mut cut = None;
        for (i, (&v, &c)) in self.values.iter().zip(&self.certified).enumerate() {
            if (i as i64) > self.settle && v == 0 && c {
                cut = Some(i);
                break;
            }
        }
        let Some(cut) = cut else { return PhiDimension::Undetermined };
        if self.values[cut..].iter().any(|&v| v != 0) {
            return PhiDimension::Undetermined;
        }
        if !self.certified[..cut].iter().all(|&c| c) {
            return PhiDimension::Undetermined;
        }
        match self.values[..cut].iter().rposition(|&v| v != 0) {
            Some(sup) => PhiDimension::Finite(sup as i64 - e),
            None => PhiDimension::MinusInfinity,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum PhiDimension {
    Finite(i64),
    /// The replaced complex was exact: nothing to resolve.
    MinusInfinity,
    /// The window does not pin the tail down.
    Undetermined,
}

fn check_base_change_inputs(
    f: &FreeComplex,
    phi: &LocalHom,
    x: &EvaluatedComplex,
) -> Result<()> {
    if f.ring().structural_key() != phi.source().structural_key() {
        return Err(Error::Validation("resolution must live over the source ring".into()));
    }
    if x.ring().structural_key() != phi.target().structural_key() {
        return Err(Error::Validation("complex must live over the target ring".into()));
    }
    if !x.has_ops() {
        return Err(Error::Validation(
            "base change needs variable actions on the coefficient complex".into(),
        ));
    }
    Ok(())
}

fn require_levels(f: &FreeComplex, needed: i64) -> Result<()> {
    if needed >= f.levels() as i64 && !f.is_finite() {
        return Err(Error::Validation(format!(
            "resolution computed to level {} but level {} is needed",
            f.levels() as i64 - 1,
            needed
        )));
    }
    for n in 0..f.levels().min((needed.max(0) as usize) + 1) {
        if !f.level_complete(n) {
            return Err(Error::Validation(format!(
                "resolution level {n} is not certified complete; raise the truncation"
            )));
        }
    }
    Ok(())
}

/// Images of the sparse resolution columns under the homomorphism:
/// out[n][j] lists (target row, nonzero image entry).
fn image_columns(
    f: &FreeComplex,
    phi: &LocalHom,
    levels: usize,
) -> Result<Vec<Vec<Vec<(usize, RingElement)>>>> {
    let mut out = Vec::with_capacity(levels);
    for n in 0..levels.min(f.levels()) {
        let width = f.gen_degrees(n).len();
        let mut per = Vec::with_capacity(width);
        for j in 0..width {
            let mut col = Vec::new();
            if n > 0 {
                for (i, e) in f.column(n, j) {
                    let fe = phi.apply(e)?;
                    if !fe.is_zero() {
                        col.push((*i, fe));
                    }
                }
            }
            per.push(col);
        }
        out.push(per);
    }
    Ok(out)
}

/// The derived tensor of a source-side free resolution with a target-side
/// complex, over the homomorphism. Cell (m, d) stacks the X-slices indexed
/// by the free generators of all levels up to m, with internal degrees
/// shifted by scale times the generator degree.
pub fn base_change_tensor(
    f: &FreeComplex,
    phi: &LocalHom,
    x: &EvaluatedComplex,
    m_max: usize,
) -> Result<EvaluatedComplex> {
    check_base_change_inputs(f, phi, x)?;
    require_levels(f, m_max as i64)?;
    let ring = x.ring().clone();
    let field = ring.field();
    let p = field.p();
    let scale = phi.scale();
    let levels = f.levels().min(m_max + 1);
    let pcols = image_columns(f, phi, levels)?;

    let mut g_min = i64::MAX;
    let mut g_max = i64::MIN;
    for n in 0..levels {
        for &g in f.gen_degrees(n) {
            g_min = g_min.min(g);
            g_max = g_max.max(g);
        }
    }
    if g_max == i64::MIN {
        // resolving the zero module: the tensor is zero
        let nspan = m_max + 1;
        return EvaluatedComplex::from_parts(
            ring.clone(),
            0,
            m_max as i64,
            0,
            0,
            false,
            true,
            vec![vec![0]; nspan],
            vec![vec![Matrix::zero(field, 0, 0)]; nspan],
            vec![],
        );
    }

    let closed = x.is_closed_top();
    let d_lo = x.d_lo() + scale * g_min;
    let d_hi = if closed { x.d_hi() + scale * g_max } else { x.d_hi() + scale * g_min };
    let mut open_top = x.is_open_top();
    match f.projective_dimension() {
        Some(pd) => {
            if (m_max as i64) < pd + x.n_hi() {
                open_top = true;
            }
        }
        None => open_top = true,
    }

    // summand layout per homological index: (level, generator, gen degree)
    let mut summ: Vec<Vec<(usize, usize, i64)>> = Vec::with_capacity(m_max + 1);
    let mut offs: Vec<Vec<usize>> = Vec::with_capacity(m_max + 1);
    for m in 0..=m_max {
        let mut list = Vec::new();
        let mut off = Vec::new();
        for n in 0..levels.min(m + 1) {
            off.push(list.len());
            for (j, &g) in f.gen_degrees(n).iter().enumerate() {
                list.push((n, j, g));
            }
        }
        summ.push(list);
        offs.push(off);
    }

    let nspan = m_max + 1;
    let dspan = (d_hi - d_lo + 1) as usize;
    let cell_dims = |m: usize, d: i64| -> Vec<usize> {
        summ[m]
            .iter()
            .map(|&(n, _, g)| x.dim((m - n) as i64, d - scale * g))
            .collect()
    };

    let mut dims = vec![vec![0usize; dspan]; nspan];
    for (m, row) in dims.iter_mut().enumerate() {
        for (dj, slot) in row.iter_mut().enumerate() {
            *slot = cell_dims(m, d_lo + dj as i64).iter().sum();
        }
    }

    let mut diffs = Vec::with_capacity(nspan);
    for m in 0..nspan {
        let mut per_degree = Vec::with_capacity(dspan);
        for dj in 0..dspan {
            let d = d_lo + dj as i64;
            if m == 0 {
                per_degree.push(Matrix::zero(field, 0, dims[0][dj]));
                continue;
            }
            let col_dims = cell_dims(m, d);
            let row_dims = cell_dims(m - 1, d);
            let mut blocks = Vec::new();
            for (ci, &(n, j, g)) in summ[m].iter().enumerate() {
                if col_dims[ci] == 0 {
                    continue;
                }
                let xi = (m - n) as i64;
                let sd = d - scale * g;
                if n <= m - 1 {
                    let dm = x.diff(xi, sd);
                    if dm.rows() > 0 {
                        let signed = if n % 2 == 1 { dm.scale(p - 1) } else { dm };
                        blocks.push((offs[m - 1][n] + j, ci, signed));
                    }
                }
                for (i, fe) in &pcols[n][j] {
                    let op = x.element_op(fe, xi, sd)?;
                    if op.rows() > 0 {
                        blocks.push((offs[m - 1][n - 1] + i, ci, op));
                    }
                }
            }
            per_degree.push(Matrix::block(field, &row_dims, &col_dims, &blocks));
        }
        diffs.push(per_degree);
    }

    let mut ops = Vec::new();
    for v in 0..ring.num_vars() {
        let w = ring.var_degree(v);
        let mut table = Vec::with_capacity(nspan);
        for m in 0..nspan {
            let mut row = Vec::with_capacity(dspan);
            for dj in 0..dspan {
                let d = d_lo + dj as i64;
                if d + w > d_hi {
                    row.push(None);
                    continue;
                }
                let col_dims = cell_dims(m, d);
                let row_dims = cell_dims(m, d + w);
                let mut blocks = Vec::new();
                for (ci, &(n, _, g)) in summ[m].iter().enumerate() {
                    if col_dims[ci] == 0 || row_dims[ci] == 0 {
                        continue;
                    }
                    let xi = (m - n) as i64;
                    let sd = d - scale * g;
                    let act = x
                        .op(v, xi, sd)
                        .cloned()
                        .unwrap_or_else(|| Matrix::zero(field, row_dims[ci], col_dims[ci]));
                    blocks.push((ci, ci, act));
                }
                row.push(Some(Matrix::block(field, &row_dims, &col_dims, &blocks)));
            }
            table.push(row);
        }
        ops.push(table);
    }

    EvaluatedComplex::from_parts(
        ring, 0, m_max as i64, d_lo, d_hi, open_top, closed, dims, diffs, ops,
    )
}

/// Shared state for the mapping-in direction of base change.
struct HomBuilder<'a> {
    f: &'a FreeComplex,
    phi: &'a LocalHom,
    x: &'a EvaluatedComplex,
    /// by_row[n][row j] = (column j2 one level up, image of its entry at j)
    by_row: Vec<Vec<Vec<(usize, RingElement)>>>,
}

impl<'a> HomBuilder<'a> {
    fn new(
        f: &'a FreeComplex,
        phi: &'a LocalHom,
        x: &'a EvaluatedComplex,
        levels: usize,
    ) -> Result<HomBuilder<'a>> {
        check_base_change_inputs(f, phi, x)?;
        let top = levels.min(f.levels());
        let pcols = image_columns(f, phi, top)?;
        let mut by_row = Vec::with_capacity(top);
        for n in 0..top {
            let mut tab = vec![Vec::new(); f.gen_degrees(n).len()];
            if n + 1 < top {
                for (j2, col) in pcols[n + 1].iter().enumerate() {
                    for (i, fe) in col {
                        tab[*i].push((j2, fe.clone()));
                    }
                }
            }
            by_row.push(tab);
        }
        Ok(HomBuilder { f, phi, x, by_row })
    }

    /// Cells of the mapping complex in one homological column.
    fn layout(&self, tt: i64) -> Vec<(usize, usize, i64)> {
        let mut v = Vec::new();
        for n in 0..self.f.levels() {
            let xi = n as i64 + tt;
            if xi < self.x.n_lo() || xi > self.x.n_hi() {
                continue;
            }
            for (j, &g) in self.f.gen_degrees(n).iter().enumerate() {
                v.push((n, j, g));
            }
        }
        v
    }

    /// Homology of the mapping complex at homological index t: rank of the
    /// degree-t maps that are cycles modulo boundaries.
    fn profile(&self, t: i64, guard: i64) -> Result<HomologyProfile> {
        let x = self.x;
        let ring = x.ring().clone();
        let field = ring.field();
        let p = field.p();
        let scale = self.phi.scale();
        require_levels(self.f, x.n_hi() - (t - 1))?;

        let cols: [Vec<(usize, usize, i64)>; 3] =
            [self.layout(t - 1), self.layout(t), self.layout(t + 1)];
        let mut g_min = i64::MAX;
        let mut g_max = i64::MIN;
        for l in &cols {
            for &(_, _, g) in l {
                g_min = g_min.min(g);
                g_max = g_max.max(g);
            }
        }
        let empty = HomologyProfile {
            n: t,
            by_degree: vec![],
            total: 0,
            certified: true,
            top_new_cycle_degree: None,
        };
        if g_max == i64::MIN {
            return Ok(empty);
        }
        let closed = x.is_closed_top();
        let d_lo = x.d_lo() - scale * g_max;
        let d_hi = if closed { x.d_hi() - scale * g_min } else { x.d_hi() - scale * g_max };
        if d_hi < d_lo {
            return Ok(empty);
        }
        let dspan = (d_hi - d_lo + 1) as usize;

        let offsets = |lst: &[(usize, usize, i64)]| -> HashMap<usize, usize> {
            let mut m = HashMap::new();
            for (idx, &(n, j, _)) in lst.iter().enumerate() {
                if j == 0 {
                    m.insert(n, idx);
                }
            }
            m
        };
        let cell = |lst: &[(usize, usize, i64)], tt: i64, d: i64| -> Vec<usize> {
            lst.iter().map(|&(n, _, g)| x.dim(n as i64 + tt, d + scale * g)).collect()
        };

        let mut dims = vec![vec![0usize; dspan]; 3];
        for k in 0..3 {
            let tt = t - 1 + k as i64;
            for dj in 0..dspan {
                dims[k][dj] = cell(&cols[k], tt, d_lo + dj as i64).iter().sum();
            }
        }

        let mut diffs: Vec<Vec<Matrix>> = Vec::with_capacity(3);
        diffs.push((0..dspan).map(|dj| Matrix::zero(field, 0, dims[0][dj])).collect());
        for k in 1..3 {
            let tt = t - 1 + k as i64;
            let src = &cols[k];
            let dst = &cols[k - 1];
            let dst_off = offsets(dst);
            let mut per_degree = Vec::with_capacity(dspan);
            for dj in 0..dspan {
                let d = d_lo + dj as i64;
                let col_dims = cell(src, tt, d);
                let row_dims = cell(dst, tt - 1, d);
                let mut blocks = Vec::new();
                for (ci, &(n, j, g)) in src.iter().enumerate() {
                    if col_dims[ci] == 0 {
                        continue;
                    }
                    let xi = n as i64 + tt;
                    let sd = d + scale * g;
                    if xi - 1 >= x.n_lo() {
                        if let Some(&base) = dst_off.get(&n) {
                            let dm = x.diff(xi, sd);
                            if dm.rows() > 0 {
                                blocks.push((base + j, ci, dm));
                            }
                        }
                    }
                    for (j2, fe) in &self.by_row[n][j] {
                        if let Some(&base) = dst_off.get(&(n + 1)) {
                            let op = x.element_op(fe, xi, sd)?;
                            if op.rows() > 0 {
                                let signed = if tt.rem_euclid(2) == 0 { op.scale(p - 1) } else { op };
                                blocks.push((base + j2, ci, signed));
                            }
                        }
                    }
                }
                per_degree.push(Matrix::block(field, &row_dims, &col_dims, &blocks));
            }
            diffs.push(per_degree);
        }

        let mut ops = Vec::new();
        for v in 0..ring.num_vars() {
            let w = ring.var_degree(v);
            let mut table = Vec::with_capacity(3);
            for k in 0..3 {
                let tt = t - 1 + k as i64;
                let lst = &cols[k];
                let mut rowt = Vec::with_capacity(dspan);
                for dj in 0..dspan {
                    let d = d_lo + dj as i64;
                    if d + w > d_hi {
                        rowt.push(None);
                        continue;
                    }
                    let col_dims = cell(lst, tt, d);
                    let row_dims = cell(lst, tt, d + w);
                    let mut blocks = Vec::new();
                    for (ci, &(n, _, g)) in lst.iter().enumerate() {
                        if col_dims[ci] == 0 || row_dims[ci] == 0 {
                            continue;
                        }
                        let xi = n as i64 + tt;
                        let sd = d + scale * g;
                        let act = x
                            .op(v, xi, sd)
                            .cloned()
                            .unwrap_or_else(|| Matrix::zero(field, row_dims[ci], col_dims[ci]));
                        blocks.push((ci, ci, act));
                    }
                    rowt.push(Some(Matrix::block(field, &row_dims, &col_dims, &blocks)));
                }
                table.push(rowt);
            }
            ops.push(table);
        }

        let mini = EvaluatedComplex::from_parts(
            ring,
            t - 1,
            t + 1,
            d_lo,
            d_hi,
            true,
            closed,
            dims,
            diffs,
            ops,
        )?;
        let mut profs = mini.homology_table(t, t, guard)?;
        Ok(profs.pop().expect("single requested row"))
    }
}

/// One homology rank of the mapping-in base change at homological index t.
pub fn base_change_hom_profile(
    f: &FreeComplex,
    phi: &LocalHom,
    x: &EvaluatedComplex,
    t: i64,
    guard: i64,
) -> Result<HomologyProfile> {
    let levels = ((x.n_hi() - (t - 1)).max(0) as usize) + 1;
    HomBuilder::new(f, phi, x, levels.max(f.levels()))?.profile(t, guard)
}

/// Betti numbers of a target module over the homomorphism, through index
/// nmax: homology totals of the source residue-field resolution tensored
/// with the Koszul section of the module.
pub fn betti_over(
    phi: &LocalHom,
    module: &GradedModule,
    nmax: usize,
    guard: i64,
) -> Result<SeriesOverHom> {
    betti_over_with(phi, module, &[], nmax, guard)
}

/// Same computation with extra elements adjoined to the Koszul section,
/// replacing the module by its Koszul complex on those elements. Each
/// extra element multiplies the resulting series by (1 + t).
pub fn betti_over_with(
    phi: &LocalHom,
    module: &GradedModule,
    extra: &[RingElement],
    nmax: usize,
    guard: i64,
) -> Result<SeriesOverHom> {
    let mut gens = phi.residual_generators()?;
    let e = gens.len();
    gens.extend_from_slice(extra);
    let x = koszul_complex(module, &gens)?;
    let kk = GradedModule::residue_field(phi.source().clone());
    let f = minimal_resolution_cached(&kk, nmax + 1, guard)?;
    let t = base_change_tensor(&f, phi, &x, nmax + 1)?;
    let profiles = t.homology_table(0, nmax as i64, guard)?;
    Ok(SeriesOverHom {
        values: profiles.iter().map(|p| p.total as u64).collect(),
        certified: profiles.iter().map(|p| p.certified).collect(),
        residual_count: e,
        settle: x.n_hi(),
        profiles,
    })
}

/// Bass numbers of a target module over the homomorphism, through index
/// mmax: homology totals of maps from the residue-field resolution into the
/// Koszul section.
pub fn bass_over(
    phi: &LocalHom,
    module: &GradedModule,
    mmax: usize,
    guard: i64,
) -> Result<SeriesOverHom> {
    let gens = phi.residual_generators()?;
    let e = gens.len() as i64;
    let x = koszul_complex(module, &gens)?;
    let kk = GradedModule::residue_field(phi.source().clone());
    let f = minimal_resolution_cached(&kk, mmax + 1, guard)?;
    let builder = HomBuilder::new(&f, phi, &x, f.levels())?;
    let mut values = Vec::with_capacity(mmax + 1);
    let mut certified = Vec::with_capacity(mmax + 1);
    let mut profiles = Vec::with_capacity(mmax + 1);
    for m in 0..=mmax {
        let prof = builder.profile(e - m as i64, guard)?;
        values.push(prof.total as u64);
        certified.push(prof.certified);
        profiles.push(prof);
    }
    Ok(SeriesOverHom {
        values,
        certified,
        residual_count: gens.len(),
        settle: x.n_hi(),
        profiles,
    })
}

/// Betti numbers over the homomorphism by the product shortcut, available
/// when the image ideal kills the module: every number is a convolution of
/// source residue-field Betti numbers with Koszul homology totals.
/// Returns None when the shortcut does not apply.
pub fn betti_over_split(
    phi: &LocalHom,
    module: &GradedModule,
    nmax: usize,
    guard: i64,
) -> Result<Option<SeriesOverHom>> {
    if module.certified_top().is_err() {
        return Ok(None);
    }
    for img in phi.images() {
        if img.is_zero() {
            continue;
        }
        let Some((e, _)) = img.homogeneous_part() else { return Ok(None) };
        for d in module.lo()..=module.hi() - e {
            if !module.element_action(img, d)?.is_zero() {
                return Ok(None);
            }
        }
    }
    let gens = phi.residual_generators()?;
    let x = koszul_complex(module, &gens)?;
    let hx = x.homology_table(0, x.n_hi(), guard)?;
    let kk = GradedModule::residue_field(phi.source().clone());
    let f = minimal_resolution_cached(&kk, nmax, guard)?;
    let mut values = Vec::with_capacity(nmax + 1);
    let mut certified = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let mut acc = 0u64;
        let mut cert = true;
        for (b, hp) in hx.iter().enumerate() {
            if b > n {
                break;
            }
            let a = n - b;
            let Some(beta) = f.betti(a) else {
                cert = false;
                continue;
            };
            acc += beta * hp.total as u64;
            cert = cert && hp.certified && f.level_complete(a);
        }
        values.push(acc);
        certified.push(cert);
    }
    Ok(Some(SeriesOverHom {
        values,
        certified,
        residual_count: gens.len(),
        settle: x.n_hi(),
        profiles: hx,
    }))
}

/// Growth profile of a Betti or Bass sequence over the trailing half of the
/// computed window. Estimates only: the window never proves an asymptote.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct AsymptoticEstimate {
    /// Smallest c with values[n] / n^(c-1) non-increasing across the tail;
    /// 0 for an eventually zero tail, None when no low-degree polynomial
    /// envelope fits.
    pub complexity: Option<u32>,
    /// n-th root of the deepest positive tail value; 0 for a dead tail.
    /// The deepest point carries the least constant-factor bias, so two
    /// sequences with the same exponential base agree closely even when
    /// their leading constants differ.
    pub curvature: f64,
}

/// Highest polynomial degree the envelope search will try. Short windows
/// would let any exponential pass as a high-degree polynomial; the cap
/// keeps the polynomial verdict meaningful.
const COMPLEXITY_CAP: u32 = 8;

pub fn complexity_estimate(values: &[u64]) -> Result<Option<u32>> {
    let tail_from = values.len() / 2;
    let tail = &values[tail_from..];
    if tail.len() < 6 {
        return Err(Error::WindowTooSmall { needed: 6, got: tail.len() });
    }
    if tail.iter().all(|&v| v == 0) {
        return Ok(Some(0));
    }
    'degree: for c in 1..=COMPLEXITY_CAP {
        let mut prev = f64::INFINITY;
        for (k, &v) in tail.iter().enumerate() {
            let n = (tail_from + k) as f64;
            let ratio = v as f64 / n.powi(c as i32 - 1);
            if ratio > prev * (1.0 + 1e-9) + 1e-12 {
                continue 'degree;
            }
            prev = ratio;
        }
        return Ok(Some(c));
    }
    Ok(None)
}

pub fn curvature_estimate(values: &[u64]) -> Result<f64> {
    let tail_from = values.len() / 2;
    if values.len() - tail_from < 6 {
        return Err(Error::WindowTooSmall { needed: 6, got: values.len() - tail_from });
    }
    Ok(values
        .iter()
        .enumerate()
        .skip(tail_from.max(1))
        .rev()
        .find(|&(_, &v)| v > 0)
        .map(|(n, &v)| (v as f64).powf(1.0 / n as f64))
        .unwrap_or(0.0))
}

pub fn asymptotic_estimate(values: &[u64]) -> Result<AsymptoticEstimate> {
    Ok(AsymptoticEstimate {
        complexity: complexity_estimate(values)?,
        curvature: curvature_estimate(values)?,
    })
}

/// Compares the growth of the module's numbers over the homomorphism with
/// the worst case, the source residue field over the source ring.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ExtremalityReport {
    pub extremal: bool,
    pub subject: AsymptoticEstimate,
    pub reference: AsymptoticEstimate,
    pub certified: bool,
}

pub fn extremality(
    phi: &LocalHom,
    module: &GradedModule,
    nmax: usize,
    guard: i64,
) -> Result<ExtremalityReport> {
    let s = betti_over(phi, module, nmax, guard)?;
    let kk = GradedModule::residue_field(phi.source().clone());
    let f = minimal_resolution_cached(&kk, nmax, guard)?;
    let reference_values: Vec<u64> = (0..=nmax).map(|n| f.betti(n).unwrap_or(0)).collect();
    let subject = asymptotic_estimate(&s.values)?;
    let reference = asymptotic_estimate(&reference_values)?;
    let extremal = subject.complexity == reference.complexity
        && ((subject.curvature - reference.curvature).abs() <= 0.1
            || (subject.complexity.is_some() && reference.complexity.is_some()));
    Ok(ExtremalityReport {
        extremal,
        subject,
        reference,
        certified: s.all_certified() && (0..=nmax).all(|n| f.level_complete(n)),
    })
}

/// Tests the padded series identity: the module's numbers over the map,
/// padded by (1+t) to the target embedding dimension, against the source
/// residue-field series times the module's Koszul polynomial. The product
/// side always dominates; equality is the separated case.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SeparationReport {
    pub ceiling_holds: bool,
    pub separated: bool,
    pub first_violation: Option<i64>,
    pub first_strict: Option<i64>,
    pub compared_through: i64,
    pub certified: bool,
}

pub fn separation_report(
    phi: &LocalHom,
    module: &GradedModule,
    nmax: usize,
    guard: i64,
) -> Result<SeparationReport> {
    let s = betti_over(phi, module, nmax, guard)?;
    let e = s.residual_count as i64;
    let sdim = phi.target().edim() as i64;
    let kinv = koszul_invariants(module, guard)?;
    let kk = GradedModule::residue_field(phi.source().clone());
    let f = minimal_resolution_cached(&kk, nmax, guard)?;
    let pk = TruncatedSeries::new(0, (0..=nmax).map(|n| f.betti(n).unwrap_or(0)).collect());
    let pad = ZPoly::one_plus_t().pow((sdim - e).max(0) as u32);
    let lhs = s.to_series().mul_poly(&pad);
    let rhs = pk.mul_poly(&kinv.polynomial);
    let compared_through = lhs.window_hi().min(rhs.window_hi());
    let (ceiling_holds, first_violation) = match lhs.leq(&rhs) {
        Ok(_) => (true, None),
        Err(i) => (false, Some(i)),
    };
    let (separated, first_strict) = match lhs.eq_window(&rhs) {
        Ok(_) => (true, None),
        Err(i) => (false, Some(i)),
    };
    Ok(SeparationReport {
        ceiling_holds,
        separated,
        first_violation,
        first_strict,
        compared_through,
        certified: s.all_certified()
            && kinv.certified
            && (0..=nmax).all(|n| f.level_complete(n)),
    })
}

/// Everything the homomorphism invariants say about one module, in one
/// pass: both number sequences, both dimensions, growth on each side,
/// the ceiling comparison and the extremality comparison.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PhiInvariantReport {
    pub edim_phi: usize,
    pub betti: Vec<u64>,
    pub betti_certified: Vec<bool>,
    pub bass: Vec<u64>,
    pub bass_certified: Vec<bool>,
    pub pd: PhiDimension,
    pub id: PhiDimension,
    /// None when the window is too short for the estimators.
    pub betti_growth: Option<AsymptoticEstimate>,
    pub bass_growth: Option<AsymptoticEstimate>,
    pub separation: SeparationReport,
    pub extremality: ExtremalityReport,
    pub nmax: usize,
}

pub fn phi_invariant_report(
    phi: &LocalHom,
    module: &GradedModule,
    nmax: usize,
    guard: i64,
) -> Result<PhiInvariantReport> {
    let b = betti_over(phi, module, nmax, guard)?;
    let m = bass_over(phi, module, nmax, guard)?;
    let betti_growth = asymptotic_estimate(&b.values).ok();
    let bass_growth = asymptotic_estimate(&m.values).ok();
    let separation = separation_report(phi, module, nmax, guard)?;
    let ext = extremality(phi, module, nmax, guard)?;
    Ok(PhiInvariantReport {
        edim_phi: b.residual_count,
        pd: b.homological_dimension(),
        id: m.homological_dimension(),
        betti: b.values,
        betti_certified: b.certified,
        bass: m.values,
        bass_certified: m.certified,
        betti_growth,
        bass_growth,
        separation,
        extremality: ext,
        nmax,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn ring(p: u64, vars: &[(&str, u32)], rels: &[&str], d: i64) -> Arc<GradedRing> {
        GradedRing::new(
            FieldSpec::new(p).unwrap(),
            vars.iter().map(|&(n, w)| (n.to_string(), w)).collect(),
            &rels.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            d,
        )
        .unwrap()
    }

    #[test]
    fn identity_hom_recovers_classical_betti_numbers() {
        let r = ring(101, &[("x", 1), ("y", 1)], &[], 10);
        let id = LocalHom::identity(r.clone());
        assert_eq!(id.residual_edim().unwrap(), 0);
        let k = GradedModule::residue_field(r);
        let s = betti_over(&id, &k, 6, 2).unwrap();
        assert_eq!(s.values, vec![1, 2, 1, 0, 0, 0, 0]);
        assert!(s.all_certified());
        assert_eq!(s.homological_dimension(), PhiDimension::Finite(2));
    }

    #[test]
    fn identity_hom_bass_numbers_of_gorenstein_ring() {
        let r = ring(2, &[("x", 1)], &["x^2"], 8);
        let id = LocalHom::identity(r.clone());
        let m = GradedModule::free_module(r, vec![0]).unwrap();
        let s = bass_over(&id, &m, 4, 2).unwrap();
        assert_eq!(s.values, vec![1, 0, 0, 0, 0]);
        assert!(s.all_certified());
        assert_eq!(s.homological_dimension(), PhiDimension::Finite(0));
    }

    #[test]
    fn frobenius_on_truncated_line_is_small() {
        let r = ring(2, &[("x", 1)], &[], 9);
        let fr = LocalHom::frobenius(r.clone(), 1).unwrap();
        assert_eq!(fr.scale(), 2);
        assert_eq!(fr.residual_edim().unwrap(), 1);
        let m = GradedModule::free_module(r, vec![0]).unwrap();
        let s = betti_over(&fr, &m, 5, 2).unwrap();
        assert_eq!(s.values, vec![1, 1, 0, 0, 0, 0]);
        assert!(s.all_certified());
        assert_eq!(s.homological_dimension(), PhiDimension::Finite(0));
    }

    #[test]
    fn frobenius_on_cusp_ring_never_settles() {
        let r = ring(2, &[("x", 1)], &["x^3"], 12);
        let fr = LocalHom::frobenius(r.clone(), 1).unwrap();
        assert!(fr.is_contracting().unwrap());
        let m = GradedModule::free_module(r, vec![0]).unwrap();
        let s = betti_over(&fr, &m, 6, 2).unwrap();
        assert!(s.values.iter().all(|&v| v > 0));
        assert!(s.all_certified());
        assert_eq!(s.homological_dimension(), PhiDimension::Undetermined);
    }

    #[test]
    fn flat_extension_has_negative_dimension() {
        let r = ring(2, &[("x", 1)], &[], 10);
        let s = ring(2, &[("x", 1), ("y", 1)], &[], 10);
        let phi = LocalHom::new(r, s.clone(), vec![s.var(0)], 1).unwrap();
        assert_eq!(phi.residual_edim().unwrap(), 1);
        let free = GradedModule::free_module(s, vec![0]).unwrap();
        let series = betti_over(&phi, &free, 5, 2).unwrap();
        assert_eq!(series.values, vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(series.homological_dimension(), PhiDimension::Finite(-1));
    }

    #[test]
    fn finite_extension_of_dual_numbers() {
        // source F2[u]/(u^2) mapping onto the u-line of F2[u,y]/(u^2),
        // module the y-quotient: both number sequences are 1, 1, 0, ...
        let r = ring(2, &[("u", 1)], &["u^2"], 8);
        let s = ring(2, &[("u", 1), ("y", 1)], &["u^2"], 8);
        let phi = LocalHom::new(r, s.clone(), vec![s.var(0)], 1).unwrap();
        let n = GradedModule::from_presentation(s.clone(), vec![0], &[vec![s.var(1)]]).unwrap();
        let b = betti_over(&phi, &n, 5, 2).unwrap();
        assert_eq!(b.values, vec![1, 1, 0, 0, 0, 0]);
        assert!(b.all_certified());
        let mu = bass_over(&phi, &n, 5, 2).unwrap();
        assert_eq!(mu.values, vec![1, 1, 0, 0, 0, 0]);
        assert!(mu.all_certified());
    }

    #[test]
    fn split_shortcut_matches_tensor_path() {
        // the source image kills the module, so the convolution shortcut
        // applies and must agree with the generic tensor computation
        let r = ring(2, &[("u", 1)], &["u^2"], 8);
        let s = ring(2, &[("y", 1)], &["y^2"], 8);
        let zero_img = s.zero();
        let phi = LocalHom::new(r, s.clone(), vec![zero_img], 1).unwrap();
        let m = GradedModule::free_module(s, vec![0]).unwrap();
        let fast = betti_over_split(&phi, &m, 6, 2).unwrap().expect("shortcut applies");
        let slow = betti_over(&phi, &m, 6, 2).unwrap();
        assert_eq!(fast.values, slow.values);
        assert_eq!(fast.values, vec![1, 2, 2, 2, 2, 2, 2]);
        assert!(slow.all_certified());
    }

    #[test]
    fn bass_equals_betti_of_dual_for_finite_length() {
        let r = ring(2, &[("x", 1), ("y", 1)], &["x^2", "y^2"], 8);
        let fr = LocalHom::frobenius(r.clone(), 1).unwrap();
        let m = GradedModule::from_presentation(r.clone(), vec![0], &[vec![r.var(0)]]).unwrap();
        let dual = m.matlis_dual().unwrap();
        let mu = bass_over(&fr, &m, 4, 2).unwrap();
        let beta = betti_over(&fr, &dual, 4, 2).unwrap();
        assert_eq!(mu.values, beta.values);
        assert!(mu.all_certified() && beta.all_certified());
    }

    #[test]
    fn swap_automorphism_restricts_scalars() {
        let r = ring(2, &[("x", 1), ("y", 1)], &["x^2", "y^2"], 8);
        let swap = LocalHom::new(r.clone(), r.clone(), vec![r.var(1), r.var(0)], 1).unwrap();
        let n = GradedModule::from_presentation(r.clone(), vec![0], &[vec![r.var(0)]]).unwrap();
        let restricted = restrict_scalars(&swap, &n).unwrap();
        // through the swap, x now acts the way y did: the module becomes
        // the x-line quotient, whose resolution is periodic with all ones
        let res = crate::resolution::minimal_resolution(&restricted, 5, 2).unwrap();
        for n in 0..=5 {
            assert_eq!(res.betti(n), Some(1));
        }
    }

    #[test]
    fn module_finiteness_detection() {
        let r = ring(2, &[("x", 1)], &[], 10);
        let s = ring(2, &[("x", 1), ("y", 1)], &[], 10);
        let flat = LocalHom::new(r.clone(), s.clone(), vec![s.var(0)], 1).unwrap();
        assert!(!is_module_finite(&flat).unwrap());
        let id = LocalHom::identity(r);
        assert!(is_module_finite(&id).unwrap());
    }

    #[test]
    fn growth_estimates_on_model_sequences() {
        let constant: Vec<u64> = vec![1; 14];
        let a = asymptotic_estimate(&constant).unwrap();
        assert_eq!(a.complexity, Some(1));
        assert_eq!(a.curvature, 1.0);

        let linear: Vec<u64> = (0..14).map(|n| n + 1).collect();
        let a = asymptotic_estimate(&linear).unwrap();
        assert_eq!(a.complexity, Some(2));
        assert!(a.curvature > 1.0 && a.curvature < 1.4);

        let doubling: Vec<u64> = (0..14).map(|n| 1u64 << n).collect();
        let a = asymptotic_estimate(&doubling).unwrap();
        assert_eq!(a.complexity, None);
        assert!(a.curvature > 1.9 && a.curvature <= 2.0);

        let dead: Vec<u64> = vec![1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0];
        let a = asymptotic_estimate(&dead).unwrap();
        assert_eq!(a.complexity, Some(0));
        assert_eq!(a.curvature, 0.0);

        assert!(asymptotic_estimate(&[1, 2, 3]).is_err());
    }

    #[test]
    fn frobenius_extremality_on_complete_intersection() {
        let r = ring(2, &[("x", 1), ("y", 1)], &["x^2", "y^2"], 8);
        let fr = LocalHom::frobenius(r.clone(), 1).unwrap();
        let m = GradedModule::free_module(r.clone(), vec![0]).unwrap();
        let s = betti_over(&fr, &m, 13, 2).unwrap();
        let want: Vec<u64> = (0..=13).map(|n| if n == 0 { 1 } else { 4 * n }).collect();
        assert_eq!(s.values, want);
        assert!(s.all_certified());
        let rep = extremality(&fr, &m, 13, 2).unwrap();
        assert!(rep.extremal);
        assert_eq!(rep.subject.complexity, Some(2));
        assert_eq!(rep.reference.complexity, Some(2));
        assert!(rep.certified);
    }

    #[test]
    fn separation_equality_for_regular_identity() {
        let r = ring(101, &[("x", 1)], &[], 10);
        let id = LocalHom::identity(r.clone());
        let k = GradedModule::residue_field(r);
        let rep = separation_report(&id, &k, 6, 2).unwrap();
        assert!(rep.ceiling_holds);
        assert!(rep.separated);
        assert!(rep.certified);
    }

    #[test]
    fn ceiling_strict_for_finite_extension() {
        let r = ring(2, &[("u", 1)], &["u^2"], 8);
        let s = ring(2, &[("u", 1), ("y", 1)], &["u^2"], 8);
        let phi = LocalHom::new(r, s.clone(), vec![s.var(0)], 1).unwrap();
        let n = GradedModule::from_presentation(s.clone(), vec![0], &[vec![s.var(1)]]).unwrap();
        let rep = separation_report(&phi, &n, 8, 2).unwrap();
        assert!(rep.ceiling_holds);
        assert!(!rep.separated);
        assert!(rep.first_strict.is_some());
    }

    #[test]
    fn contracting_rejects_swap() {
        let r = ring(2, &[("x", 1), ("y", 1)], &["x^2", "y^2"], 8);
        let swap = LocalHom::new(r.clone(), r.clone(), vec![r.var(1), r.var(0)], 1).unwrap();
        assert!(!swap.is_contracting().unwrap());
        let fr = LocalHom::frobenius(r, 1).unwrap();
        assert!(fr.is_contracting().unwrap());
    }

    #[test]
    fn relation_survival_is_rejected() {
        // x |-> x is no homomorphism from the square-zero line to the free
        // line, since x^2 survives
        let r = ring(2, &[("x", 1)], &["x^2"], 8);
        let s = ring(2, &[("x", 1)], &[], 8);
        let err = LocalHom::new(r, s.clone(), vec![s.var(0)], 1);
        assert!(matches!(err, Err(Error::RelationNotKilled { .. })));
    }
}
