//! Chain complexes of exact graded slices.
//!
//! A complex stores, for every homological index n and internal degree d in
//! its window, the slice dimension and the degree-preserving differential
//! C_{n,d} -> C_{n-1,d}, plus (optionally) the action of every ring variable
//! on each slice. Variable actions make two things possible: building
//! multiplication maps for mapping cones, and certifying that homology dies
//! above the window by watching where cycle generators appear.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, RowSpace};
use crate::module::GradedModule;
use crate::ring::{GradedRing, RingElement};
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct EvaluatedComplex {
    ring: Arc<GradedRing>,
    n_lo: i64,
    n_hi: i64,
    d_lo: i64,
    d_hi: i64,
    /// True when homological indices above n_hi were cut off rather than
    /// being genuinely zero; homology at n_hi is then not computable.
    open_top: bool,
    /// True when every cell above d_hi is provably zero, so the degree
    /// window captures the whole complex and homology totals are exact.
    closed_top: bool,
    /// dims[n_idx][d_idx]
    dims: Vec<Vec<usize>>,
    /// diffs[n_idx][d_idx]: C_{n,d} -> C_{n-1,d}; at n_lo the target is 0.
    diffs: Vec<Vec<Matrix>>,
    /// ops[v][n_idx][d_idx]: x_v: C_{n,d} -> C_{n,d+w_v}; None above window.
    /// Empty when the complex carries no module structure.
    ops: Vec<Vec<Vec<Option<Matrix>>>>,
}

/// Homology of one homological index, degree by degree across the window.
#[derive(Debug, Clone, serde::Serialize)]
pub struct HomologyProfile {
    pub n: i64,
    /// (internal degree, rank), nonzero entries only.
    pub by_degree: Vec<(i64, usize)>,
    pub total: usize,
    /// No new cycle generators appeared in the top `guard` degrees of the
    /// window. When homology is killed by the maximal ideal this pins the
    /// total exactly; the flag itself is purely observational.
    pub certified: bool,
    pub top_new_cycle_degree: Option<i64>,
}

impl EvaluatedComplex {
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        ring: Arc<GradedRing>,
        n_lo: i64,
        n_hi: i64,
        d_lo: i64,
        d_hi: i64,
        open_top: bool,
        closed_top: bool,
        dims: Vec<Vec<usize>>,
        diffs: Vec<Vec<Matrix>>,
        ops: Vec<Vec<Vec<Option<Matrix>>>>,
    ) -> Result<EvaluatedComplex> {
        if n_hi < n_lo || d_hi < d_lo {
            return Err(Error::Dimension("empty complex window".into()));
        }
        let nspan = (n_hi - n_lo + 1) as usize;
        let dspan = (d_hi - d_lo + 1) as usize;
        if dims.len() != nspan || diffs.len() != nspan {
            return Err(Error::Dimension("complex table length mismatch".into()));
        }
        for (i, (dr, fr)) in dims.iter().zip(&diffs).enumerate() {
            if dr.len() != dspan || fr.len() != dspan {
                return Err(Error::Dimension(format!("row {i} has wrong degree span")));
            }
            for (j, m) in fr.iter().enumerate() {
                let target = if i == 0 { 0 } else { dims[i - 1][j] };
                if m.rows() != target || m.cols() != dr[j] {
                    return Err(Error::Dimension(format!(
                        "differential at n={}, d={}: got {}x{}, want {}x{}",
                        n_lo + i as i64,
                        d_lo + j as i64,
                        m.rows(),
                        m.cols(),
                        target,
                        dr[j]
                    )));
                }
            }
        }
        if !ops.is_empty() && ops.len() != ring.num_vars() {
            return Err(Error::Dimension("need one action table per variable".into()));
        }
        for (v, table) in ops.iter().enumerate() {
            let w = ring.var_degree(v);
            if table.len() != nspan {
                return Err(Error::Dimension(format!("action table {v} length mismatch")));
            }
            for (i, row) in table.iter().enumerate() {
                if row.len() != dspan {
                    return Err(Error::Dimension(format!("action table {v} degree span mismatch")));
                }
                for (j, slot) in row.iter().enumerate() {
                    let d = d_lo + j as i64;
                    match slot {
                        Some(m) => {
                            if d + w > d_hi
                                || m.cols() != dims[i][j]
                                || m.rows() != dims[i][(d + w - d_lo) as usize]
                            {
                                return Err(Error::Dimension(format!(
                                    "action {v} shape mismatch at n={}, d={d}",
                                    n_lo + i as i64
                                )));
                            }
                        }
                        None => {
                            if d + w <= d_hi {
                                return Err(Error::Dimension(format!(
                                    "action {v} missing inside window at n={}, d={d}",
                                    n_lo + i as i64
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(EvaluatedComplex { ring, n_lo, n_hi, d_lo, d_hi, open_top, closed_top, dims, diffs, ops })
    }

    /// A module viewed as a complex concentrated in homological index 0.
    /// When the module has a certified top, the window is marked closed:
    /// slices above it are provably zero.
    pub fn from_module(m: &GradedModule) -> EvaluatedComplex {
        let ring = m.ring().clone();
        let field = ring.field();
        let (lo, hi) = (m.lo(), m.hi());
        let dspan = (hi - lo + 1) as usize;
        let dims = vec![(0..dspan).map(|j| m.dim_at(lo + j as i64)).collect::<Vec<_>>()];
        let diffs = vec![(0..dspan)
            .map(|j| Matrix::zero(field, 0, m.dim_at(lo + j as i64)))
            .collect::<Vec<_>>()];
        let ops = (0..ring.num_vars())
            .map(|v| {
                let w = ring.var_degree(v);
                vec![(0..dspan)
                    .map(|j| {
                        let d = lo + j as i64;
                        (d + w <= hi).then(|| m.var_action(v, d))
                    })
                    .collect::<Vec<_>>()]
            })
            .collect();
        EvaluatedComplex {
            ring,
            n_lo: 0,
            n_hi: 0,
            d_lo: lo,
            d_hi: hi,
            open_top: false,
            closed_top: m.certified_top().is_ok(),
            dims,
            diffs,
            ops,
        }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn n_lo(&self) -> i64 {
        self.n_lo
    }

    pub fn n_hi(&self) -> i64 {
        self.n_hi
    }

    pub fn d_lo(&self) -> i64 {
        self.d_lo
    }

    pub fn d_hi(&self) -> i64 {
        self.d_hi
    }

    pub fn is_open_top(&self) -> bool {
        self.open_top
    }

    pub fn is_closed_top(&self) -> bool {
        self.closed_top
    }

    pub fn has_ops(&self) -> bool {
        !self.ops.is_empty()
    }

    fn ni(&self, n: i64) -> Option<usize> {
        (n >= self.n_lo && n <= self.n_hi).then(|| (n - self.n_lo) as usize)
    }

    fn di(&self, d: i64) -> usize {
        assert!(d <= self.d_hi, "degree {d} above complex window {}", self.d_hi);
        (d - self.d_lo) as usize
    }

    pub fn dim(&self, n: i64, d: i64) -> usize {
        if d < self.d_lo || (self.closed_top && d > self.d_hi) {
            return 0;
        }
        match self.ni(n) {
            Some(i) => self.dims[i][self.di(d)],
            None => 0,
        }
    }

    /// Differential C_{n,d} -> C_{n-1,d}, synthesizing zero maps at the
    /// window edges.
    pub fn diff(&self, n: i64, d: i64) -> Matrix {
        let field = self.ring.field();
        if d < self.d_lo || (self.closed_top && d > self.d_hi) {
            return Matrix::zero(field, 0, 0);
        }
        match self.ni(n) {
            Some(i) if i > 0 => self.diffs[i][self.di(d)].clone(),
            Some(i) => {
                // n == n_lo: target index is outside, dim 0
                Matrix::zero(field, 0, self.dims[i][self.di(d)])
            }
            None => Matrix::zero(field, self.dim(n - 1, d), 0),
        }
    }

    pub fn op(&self, v: usize, n: i64, d: i64) -> Option<&Matrix> {
        let i = self.ni(n)?;
        if d < self.d_lo || d > self.d_hi {
            return None;
        }
        self.ops.get(v)?[i][self.di(d)].as_ref()
    }

    /// Multiplication by a homogeneous ring element on slice (n, d),
    /// composed from the per-variable actions.
    pub fn element_op(&self, a: &RingElement, n: i64, d: i64) -> Result<Matrix> {
        let field = self.ring.field();
        let src = self.dim(n, d);
        if a.is_zero() {
            return Ok(Matrix::zero(field, 0, src));
        }
        let (e, coords) = a
            .homogeneous_part()
            .ok_or_else(|| Error::NonHomogeneousElement(format!("{a:?}")))?;
        if d + e > self.d_hi && !self.closed_top {
            return Err(Error::truncation("complex element action", d + e, self.d_hi));
        }
        let dst = self.dim(n, d + e);
        let mut out = Matrix::zero(field, dst, src);
        if src == 0 || dst == 0 || self.ni(n).is_none() {
            return Ok(out);
        }
        let monos = self.ring.basis_monomials(e)?;
        for (k, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut cur = Matrix::identity(field, src);
            let mut cur_deg = d;
            for (v, &ev) in monos[k].iter().enumerate() {
                let w = self.ring.var_degree(v);
                for _ in 0..ev {
                    let step = self.op(v, n, cur_deg).ok_or_else(|| {
                        Error::truncation("complex element action", cur_deg + w, self.d_hi)
                    })?;
                    cur = step.mul(&cur);
                    cur_deg += w;
                }
            }
            out = out.add_matrix(&cur.scale(c));
        }
        Ok(out)
    }

    /// Verifies d compose d = 0 on every cell.
    pub fn check_complex(&self) -> Result<()> {
        for n in self.n_lo + 1..=self.n_hi {
            for d in self.d_lo..=self.d_hi {
                let a = self.diff(n - 1, d);
                let b = self.diff(n, d);
                if a.rows() > 0 && !a.mul(&b).is_zero() {
                    return Err(Error::NotAComplex);
                }
            }
        }
        Ok(())
    }

    /// Homology profiles for n_from..=n_to, with cycle-generator based
    /// certification. `guard` is the number of top window degrees that must
    /// be free of new cycle generators.
    pub fn homology_table(&self, n_from: i64, n_to: i64, guard: i64) -> Result<Vec<HomologyProfile>> {
        if self.open_top && n_to >= self.n_hi {
            return Err(Error::Validation(format!(
                "homology at n={} needs the differential from n={}, which lies above the built window",
                self.n_hi,
                self.n_hi + 1
            )));
        }
        let field = self.ring.field();
        let dspan = (self.d_hi - self.d_lo + 1) as usize;

        // kernels for rows n_from..=n_to+1
        let rows: Vec<i64> = (n_from..=n_to + 1).collect();
        let mut zbases: Vec<Vec<Matrix>> = Vec::with_capacity(rows.len());
        for &n in &rows {
            let mut per_degree = Vec::with_capacity(dspan);
            for j in 0..dspan {
                let d = self.d_lo + j as i64;
                per_degree.push(self.diff(n, d).kernel_basis());
            }
            zbases.push(per_degree);
        }
        // complex check on the pairs we are about to use
        for (k, &n) in rows.iter().enumerate() {
            if k == 0 {
                continue;
            }
            for j in 0..dspan {
                let d = self.d_lo + j as i64;
                let low = self.diff(n - 1, d);
                if low.rows() > 0 && !low.mul(&self.diff(n, d)).is_zero() {
                    return Err(Error::NotAComplex);
                }
            }
        }

        let mut out = Vec::new();
        for (k, &n) in rows.iter().enumerate() {
            if n > n_to {
                break;
            }
            let mut by_degree = Vec::new();
            let mut total = 0usize;
            let mut top_new: Option<i64> = None;
            let mut guard_clean = true;
            for j in 0..dspan {
                let d = self.d_lo + j as i64;
                let zdim = zbases[k][j].cols();
                let next_dim = self.dim(n + 1, d);
                let next_z = if k + 1 < zbases.len() {
                    zbases[k + 1][j].cols()
                } else {
                    self.diff(n + 1, d).kernel_basis().cols()
                };
                let bdim = next_dim - next_z;
                if zdim < bdim {
                    return Err(Error::NotAComplex);
                }
                let rank = zdim - bdim;
                if rank > 0 {
                    by_degree.push((d, rank));
                    total += rank;
                }

                // new cycle generators: cycles not reachable from lower
                // degrees through the variable actions
                let new_gens = if self.ops.is_empty() {
                    zdim
                } else {
                    let mut reach: Vec<Vec<u64>> = Vec::new();
                    for v in 0..self.ring.num_vars() {
                        let w = self.ring.var_degree(v);
                        let src_d = d - w;
                        if src_d < self.d_lo {
                            continue;
                        }
                        let src_j = (src_d - self.d_lo) as usize;
                        let zb = &zbases[k][src_j];
                        if zb.cols() == 0 {
                            continue;
                        }
                        if let Some(act) = self.op(v, n, src_d) {
                            let img = act.mul(zb);
                            for c in 0..img.cols() {
                                reach.push((0..img.rows()).map(|r| img.get(r, c)).collect());
                            }
                        }
                    }
                    let span =
                        RowSpace::from_rows(&Matrix::from_rows(field, self.dim(n, d), reach));
                    zdim - span.dim()
                };
                if new_gens > 0 {
                    top_new = Some(d);
                    if d > self.d_hi - guard {
                        guard_clean = false;
                    }
                }
            }
            out.push(HomologyProfile {
                n,
                by_degree,
                total,
                certified: self.closed_top || guard_clean,
                top_new_cycle_degree: top_new,
            });
        }
        Ok(out)
    }
}

/// Mapping cone of a chain map theta: X -> Y that raises internal degree by
/// `shift`. Cell (n, d) is Y_{n,d} plus X_{n-1,d-shift}; the differential
/// sends (y, x) to (dy + theta x, -dx). `theta(n, d)` must give the matrix
/// X_{n,d-shift} -> Y_{n,d}.
pub fn mapping_cone(
    y: &EvaluatedComplex,
    x: &EvaluatedComplex,
    shift: i64,
    theta: &dyn Fn(i64, i64) -> Result<Matrix>,
) -> Result<EvaluatedComplex> {
    if !Arc::ptr_eq(&y.ring, &x.ring) && y.ring.structural_key() != x.ring.structural_key() {
        return Err(Error::Validation("mapping cone requires a common ring".into()));
    }
    let ring = y.ring.clone();
    let field = ring.field();
    let p = field.p();
    let n_lo = y.n_lo.min(x.n_lo + 1);
    let n_hi = y.n_hi.max(x.n_hi + 1);
    let d_lo = y.d_lo.min(x.d_lo + shift);
    // with closed windows the out-of-window slices are genuine zeros, so the
    // cone can cover the union; otherwise only the overlap is trustworthy
    let closed_top = y.closed_top && x.closed_top;
    let d_hi = if closed_top {
        y.d_hi.max(x.d_hi + shift)
    } else {
        y.d_hi.min(x.d_hi + shift)
    };
    if d_hi < d_lo {
        return Err(Error::Dimension("cone windows do not overlap".into()));
    }
    let open_top = y.open_top || x.open_top;
    let nspan = (n_hi - n_lo + 1) as usize;
    let dspan = (d_hi - d_lo + 1) as usize;

    let mut dims = vec![vec![0usize; dspan]; nspan];
    for i in 0..nspan {
        let n = n_lo + i as i64;
        for j in 0..dspan {
            let d = d_lo + j as i64;
            dims[i][j] = y.dim(n, d) + x.dim(n - 1, d - shift);
        }
    }

    let mut diffs = Vec::with_capacity(nspan);
    for i in 0..nspan {
        let n = n_lo + i as i64;
        let mut per_degree = Vec::with_capacity(dspan);
        for j in 0..dspan {
            let d = d_lo + j as i64;
            let row_dims = if i == 0 {
                vec![0, 0]
            } else {
                vec![y.dim(n - 1, d), x.dim(n - 2, d - shift)]
            };
            let col_dims = vec![y.dim(n, d), x.dim(n - 1, d - shift)];
            let mut blocks = Vec::new();
            if i > 0 {
                let dy = y.diff(n, d);
                if dy.rows() > 0 && dy.cols() > 0 {
                    blocks.push((0, 0, dy));
                }
                let th = theta(n - 1, d)?;
                if th.rows() != row_dims[0] || th.cols() != col_dims[1] {
                    return Err(Error::NotAChainMap { n: n - 1, degree: d });
                }
                if th.rows() > 0 && th.cols() > 0 {
                    blocks.push((0, 1, th));
                }
                let dx = x.diff(n - 1, d - shift);
                if dx.rows() > 0 && dx.cols() > 0 {
                    blocks.push((1, 1, dx.scale(p - 1)));
                }
            }
            per_degree.push(Matrix::block(field, &row_dims, &col_dims, &blocks));
        }
        diffs.push(per_degree);
    }

    let mut ops = Vec::new();
    if !y.ops.is_empty() && !x.ops.is_empty() {
        for v in 0..ring.num_vars() {
            let w = ring.var_degree(v);
            let mut table = Vec::with_capacity(nspan);
            for i in 0..nspan {
                let n = n_lo + i as i64;
                let mut row = Vec::with_capacity(dspan);
                for j in 0..dspan {
                    let d = d_lo + j as i64;
                    if d + w > d_hi {
                        row.push(None);
                        continue;
                    }
                    let ay = y
                        .op(v, n, d)
                        .cloned()
                        .unwrap_or_else(|| Matrix::zero(field, y.dim(n, d + w), y.dim(n, d)));
                    let ax = x.op(v, n - 1, d - shift).cloned().unwrap_or_else(|| {
                        Matrix::zero(field, x.dim(n - 1, d - shift + w), x.dim(n - 1, d - shift))
                    });
                    row.push(Some(Matrix::block(
                        field,
                        &[ay.rows(), ax.rows()],
                        &[ay.cols(), ax.cols()],
                        &[(0, 0, ay), (1, 1, ax)],
                    )));
                }
                table.push(row);
            }
            ops.push(table);
        }
    }

    EvaluatedComplex::from_parts(ring, n_lo, n_hi, d_lo, d_hi, open_top, closed_top, dims, diffs, ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn square_zero_ring() -> Arc<GradedRing> {
        GradedRing::new(
            FieldSpec::new(2).unwrap(),
            vec![("x".into(), 1), ("y".into(), 1)],
            &["x^2".into(), "y^2".into()],
            8,
        )
        .unwrap()
    }

    #[test]
    fn module_as_complex_has_module_homology() {
        let r = square_zero_ring();
        let m = GradedModule::free_module(r, vec![0]).unwrap();
        let c = EvaluatedComplex::from_module(&m);
        c.check_complex().unwrap();
        let h = c.homology_table(0, 0, 2).unwrap();
        assert_eq!(h[0].total, 4); // 1 + 2 + 1
        assert!(h[0].certified);
    }

    #[test]
    fn cone_of_identity_is_exact() {
        let r = square_zero_ring();
        let m = GradedModule::free_module(r.clone(), vec![0]).unwrap();
        let c = EvaluatedComplex::from_module(&m);
        let cone = mapping_cone(&c, &c, 0, &|n, d| {
            Ok(Matrix::identity(r.field(), c.dim(n, d)))
        })
        .unwrap();
        cone.check_complex().unwrap();
        let h = cone.homology_table(0, 1, 2).unwrap();
        assert_eq!(h[0].total, 0);
        assert_eq!(h[1].total, 0);
    }

    #[test]
    fn cone_of_zero_map_is_direct_sum() {
        let r = square_zero_ring();
        let m = GradedModule::free_module(r.clone(), vec![0]).unwrap();
        let c = EvaluatedComplex::from_module(&m);
        let cone = mapping_cone(&c, &c, 1, &|n, d| {
            Ok(Matrix::zero(r.field(), c.dim(n, d), c.dim(n, d - 1)))
        })
        .unwrap();
        let h = cone.homology_table(0, 1, 2).unwrap();
        assert_eq!(h[0].total, 4);
        assert_eq!(h[1].total, 4);
    }

    #[test]
    fn element_op_matches_multiplication_square() {
        let r = square_zero_ring();
        let m = GradedModule::free_module(r.clone(), vec![0]).unwrap();
        let c = EvaluatedComplex::from_module(&m);
        let xy = r.parse_element("x*y").unwrap();
        let act = c.element_op(&xy, 0, 0).unwrap();
        assert_eq!((act.rows(), act.cols()), (1, 1));
        assert_eq!(act.get(0, 0), 1);
        let x2 = r.var(0);
        let sq = c.element_op(&x2, 0, 1).unwrap();
        // x * x = 0 and x * y = xy: one nonzero column
        assert_eq!(sq.rows(), 1);
        assert_eq!(sq.cols(), 2);
    }

    #[test]
    fn open_top_homology_refused_at_edge() {
        let r = square_zero_ring();
        let m = GradedModule::free_module(r, vec![0]).unwrap();
        let mut c = EvaluatedComplex::from_module(&m);
        c.open_top = true;
        assert!(c.homology_table(0, 0, 2).is_err());
    }
}
