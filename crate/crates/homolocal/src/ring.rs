//! Truncated standard-graded quotient rings R = F_p[x_1..x_n]/I.
//!
//! Every degree d <= D gets an explicit monomial basis: the degree-d slice
//! I_d of the relation ideal is the row space of {m * g} over all relations g
//! and monomials m of complementary degree, and the standard monomials are
//! the non-pivot columns of its reduced row echelon form. No Groebner bases:
//! the truncation degree D is the only approximation surface, and any access
//! past it fails loudly with `TruncationExceeded`.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::{Matrix, QuotientSpace, RowSpace};
use crate::poly::{parse_poly, RawPoly};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

#[derive(Debug)]
pub struct GradedRing {
    field: FieldSpec,
    vars: Vec<(String, u32)>,
    relations: Vec<RawPoly>,
    truncation: i64,
    /// monomials[d]: exponent vectors of weighted degree d, lex sorted.
    monomials: Vec<Vec<Vec<u32>>>,
    /// basis[d]: positions into monomials[d] of the standard monomials.
    basis: Vec<Vec<usize>>,
    /// nf[d][j]: normal form of monomials[d][j] over basis[d].
    nf: Vec<Vec<Vec<u64>>>,
}

/// Homogeneous-component representation of a ring element: coordinates over
/// the standard-monomial basis, one vector per internal degree. Zero
/// components are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    comps: BTreeMap<i64, Vec<u64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum LoewyLength {
    Certified(i64),
    /// The window ran out while the ring was still alive; the true value is
    /// at least this bound.
    ExceedsWindow { lower_bound: i64 },
}

fn monomials_of_degree(weights: &[u32], d: i64) -> Vec<Vec<u32>> {
    fn rec(weights: &[u32], pos: usize, left: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if pos + 1 == weights.len() {
            let w = weights[pos] as i64;
            if left % w == 0 {
                cur.push((left / w) as u32);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let w = weights[pos] as i64;
        let mut e = 0i64;
        while e * w <= left {
            cur.push(e as u32);
            rec(weights, pos + 1, left - e * w, cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    if d >= 0 {
        rec(weights, 0, d, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

impl GradedRing {
    /// Builds the ring, computing bases and normal-form tables for every
    /// degree up to `truncation`.
    pub fn new(
        field: FieldSpec,
        vars: Vec<(String, u32)>,
        relation_texts: &[String],
        truncation: i64,
    ) -> Result<Arc<GradedRing>> {
        if vars.is_empty() {
            return Err(Error::Validation("a ring needs at least one variable".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for (name, deg) in &vars {
            if !seen.insert(name.clone()) {
                return Err(Error::Validation(format!("duplicate variable `{name}`")));
            }
            if *deg == 0 {
                return Err(Error::Validation(format!("variable `{name}` must have positive degree")));
            }
        }
        if truncation < 0 {
            return Err(Error::Validation("truncation degree must be >= 0".into()));
        }
        let names: Vec<String> = vars.iter().map(|(n, _)| n.clone()).collect();
        let weights: Vec<u32> = vars.iter().map(|(_, d)| *d).collect();

        let mut relations = Vec::new();
        for text in relation_texts {
            let rp = parse_poly(text, &names)?;
            let mut deg: Option<i64> = None;
            for (_, exps) in &rp {
                let d: i64 = exps.iter().zip(&weights).map(|(&e, &w)| e as i64 * w as i64).sum();
                match deg {
                    None => deg = Some(d),
                    Some(prev) if prev != d => {
                        return Err(Error::NonHomogeneousRelation(text.clone()));
                    }
                    _ => {}
                }
            }
            // reduce coefficients mod p; a relation that collapses to zero is dropped
            let reduced: RawPoly = rp
                .into_iter()
                .filter_map(|(c, e)| {
                    let r = field.reduce_i64(c);
                    (r != 0).then_some((r as i64, e))
                })
                .collect();
            if reduced.is_empty() {
                continue;
            }
            let d = {
                let (_, exps) = &reduced[0];
                exps.iter().zip(&weights).map(|(&e, &w)| e as i64 * w as i64).sum::<i64>()
            };
            if d < 2 {
                return Err(Error::RelationDegreeTooLow { got: d });
            }
            relations.push(reduced);
        }

        let mut ring = GradedRing {
            field,
            vars,
            relations,
            truncation,
            monomials: Vec::new(),
            basis: Vec::new(),
            nf: Vec::new(),
        };
        ring.build_tables();
        Ok(Arc::new(ring))
    }

    fn build_tables(&mut self) {
        let weights: Vec<u32> = self.vars.iter().map(|(_, d)| *d).collect();
        for d in 0..=self.truncation {
            let monos = monomials_of_degree(&weights, d);
            let ncols = monos.len();
            let mut rows: Vec<Vec<u64>> = Vec::new();
            for rel in &self.relations {
                let rel_deg: i64 = rel[0]
                    .1
                    .iter()
                    .zip(&weights)
                    .map(|(&e, &w)| e as i64 * w as i64)
                    .sum();
                if rel_deg > d {
                    continue;
                }
                for m in monomials_of_degree(&weights, d - rel_deg) {
                    let mut row = vec![0u64; ncols];
                    for (c, exps) in rel {
                        let prod: Vec<u32> = m.iter().zip(exps).map(|(a, b)| a + b).collect();
                        let idx = monos.binary_search(&prod).expect("product monomial missing");
                        row[idx] = self.field.add(row[idx], self.field.reduce_i64(*c));
                    }
                    rows.push(row);
                }
            }
            let mat = Matrix::from_rows(self.field, ncols, rows);
            let space = RowSpace::from_rows(&mat);
            let q = QuotientSpace::new(space);
            let basis: Vec<usize> = q.free_cols().to_vec();
            let mut nf = Vec::with_capacity(ncols);
            for j in 0..ncols {
                let mut unit = vec![0u64; ncols];
                unit[j] = 1;
                nf.push(q.project(&unit));
            }
            self.monomials.push(monos);
            self.basis.push(basis);
            self.nf.push(nf);
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn truncation(&self) -> i64 {
        self.truncation
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    /// Embedding dimension: the number of variables. Minimal because
    /// relations are required to have degree >= 2.
    pub fn edim(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[(String, u32)] {
        &self.vars
    }

    pub fn var_names(&self) -> Vec<String> {
        self.vars.iter().map(|(n, _)| n.clone()).collect()
    }

    pub fn var_degree(&self, v: usize) -> i64 {
        self.vars[v].1 as i64
    }

    pub fn max_var_degree(&self) -> i64 {
        self.vars.iter().map(|(_, d)| *d as i64).max().unwrap()
    }

    pub fn is_standard_graded(&self) -> bool {
        self.vars.iter().all(|(_, d)| *d == 1)
    }

    pub fn relations(&self) -> &[RawPoly] {
        &self.relations
    }

    fn check_degree(&self, d: i64, context: &str) -> Result<()> {
        if d > self.truncation {
            return Err(Error::truncation(context, d, self.truncation));
        }
        Ok(())
    }

    pub fn hilbert(&self, d: i64) -> Result<usize> {
        if d < 0 {
            return Ok(0);
        }
        self.check_degree(d, "hilbert function")?;
        Ok(self.basis[d as usize].len())
    }

    pub fn dim_at(&self, d: i64) -> usize {
        if d < 0 || d > self.truncation {
            0
        } else {
            self.basis[d as usize].len()
        }
    }

    /// Exponent vectors of the standard monomials in degree d.
    pub fn basis_monomials(&self, d: i64) -> Result<Vec<Vec<u32>>> {
        self.check_degree(d, "basis monomials")?;
        let d = d as usize;
        Ok(self.basis[d].iter().map(|&j| self.monomials[d][j].clone()).collect())
    }

    fn mono_degree(&self, exps: &[u32]) -> i64 {
        exps.iter()
            .zip(&self.vars)
            .map(|(&e, (_, w))| e as i64 * *w as i64)
            .sum()
    }

    /// Normal form of an arbitrary monomial (given by exponents) as a
    /// coordinate vector over the standard basis of its degree.
    pub fn mono_nf(&self, exps: &[u32]) -> Result<(i64, Vec<u64>)> {
        let d = self.mono_degree(exps);
        self.check_degree(d, "monomial normal form")?;
        let du = d as usize;
        let idx = self.monomials[du]
            .binary_search(&exps.to_vec())
            .expect("exponent vector not found");
        Ok((d, self.nf[du][idx].clone()))
    }

    pub fn zero(&self) -> RingElement {
        RingElement { comps: BTreeMap::new() }
    }

    pub fn one(&self) -> RingElement {
        let mut comps = BTreeMap::new();
        comps.insert(0, vec![1u64; 1]);
        RingElement { comps }
    }

    pub fn var(&self, v: usize) -> RingElement {
        let mut exps = vec![0u32; self.vars.len()];
        exps[v] = 1;
        let (d, nfv) = self.mono_nf(&exps).expect("variable degree exceeds truncation");
        let mut el = RingElement { comps: BTreeMap::new() };
        if nfv.iter().any(|&c| c != 0) {
            el.comps.insert(d, nfv);
        }
        el
    }

    pub fn element_from_poly(&self, p: &RawPoly) -> Result<RingElement> {
        let mut comps: BTreeMap<i64, Vec<u64>> = BTreeMap::new();
        for (c, exps) in p {
            let coef = self.field.reduce_i64(*c);
            if coef == 0 {
                continue;
            }
            let (d, nfv) = self.mono_nf(exps)?;
            let entry = comps.entry(d).or_insert_with(|| vec![0; self.dim_at(d)]);
            for (slot, v) in entry.iter_mut().zip(&nfv) {
                *slot = self.field.add(*slot, self.field.mul(coef, *v));
            }
        }
        comps.retain(|_, v| v.iter().any(|&c| c != 0));
        Ok(RingElement { comps })
    }

    pub fn parse_element(&self, text: &str) -> Result<RingElement> {
        let p = parse_poly(text, &self.var_names())?;
        self.element_from_poly(&p)
    }

    pub fn add_elements(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let mut comps = a.comps.clone();
        for (d, vb) in &b.comps {
            let entry = comps.entry(*d).or_insert_with(|| vec![0; vb.len()]);
            for (slot, v) in entry.iter_mut().zip(vb) {
                *slot = self.field.add(*slot, *v);
            }
        }
        comps.retain(|_, v| v.iter().any(|&c| c != 0));
        RingElement { comps }
    }

    pub fn scale_element(&self, a: &RingElement, c: u64) -> RingElement {
        let c = c % self.p();
        let mut comps = BTreeMap::new();
        for (d, va) in &a.comps {
            let v: Vec<u64> = va.iter().map(|&x| self.field.mul(x, c)).collect();
            if v.iter().any(|&x| x != 0) {
                comps.insert(*d, v);
            }
        }
        RingElement { comps }
    }

    /// Product in normal form. Errors with `TruncationExceeded` if a nonzero
    /// component pairing lands above the truncation degree.
    pub fn multiply(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        let mut out = self.zero();
        for (&da, va) in &a.comps {
            for (&db, vb) in &b.comps {
                let d = da + db;
                self.check_degree(d, "product")?;
                let basis_a = &self.basis[da as usize];
                let basis_b = &self.basis[db as usize];
                let mut acc = vec![0u64; self.dim_at(d)];
                for (ia, &ca) in va.iter().enumerate() {
                    if ca == 0 {
                        continue;
                    }
                    let ma = &self.monomials[da as usize][basis_a[ia]];
                    for (ib, &cb) in vb.iter().enumerate() {
                        if cb == 0 {
                            continue;
                        }
                        let mb = &self.monomials[db as usize][basis_b[ib]];
                        let prod: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                        let (_, nfv) = self.mono_nf(&prod)?;
                        let c = self.field.mul(ca, cb);
                        for (slot, v) in acc.iter_mut().zip(&nfv) {
                            *slot = self.field.add(*slot, self.field.mul(c, *v));
                        }
                    }
                }
                if acc.iter().any(|&x| x != 0) {
                    let entry = out.comps.entry(d).or_insert_with(|| vec![0; self.dim_at(d)]);
                    for (slot, v) in entry.iter_mut().zip(&acc) {
                        *slot = self.field.add(*slot, *v);
                    }
                }
            }
        }
        out.comps.retain(|_, v| v.iter().any(|&c| c != 0));
        Ok(out)
    }

    /// a^e with an early exit: once a power vanishes, so do all higher ones,
    /// no matter how far past the window the nominal degree sits.
    pub fn power(&self, a: &RingElement, e: u32) -> Result<RingElement> {
        let mut acc = self.one();
        for _ in 0..e {
            if acc.is_zero() {
                return Ok(acc);
            }
            acc = self.multiply(&acc, a)?;
        }
        Ok(acc)
    }

    /// Matrix of multiplication by x_v from R_d to R_{d + deg x_v}, over the
    /// standard bases.
    pub fn var_action(&self, v: usize, d: i64) -> Result<Matrix> {
        let w = self.var_degree(v);
        self.check_degree(d + w, "variable action")?;
        let src = self.dim_at(d);
        let dst = self.dim_at(d + w);
        let mut m = Matrix::zero(self.field, dst, src);
        if d < 0 {
            return Ok(m);
        }
        for (col, &bi) in self.basis[d as usize].iter().enumerate() {
            let mut exps = self.monomials[d as usize][bi].clone();
            exps[v] += 1;
            let (_, nfv) = self.mono_nf(&exps)?;
            for (row, &c) in nfv.iter().enumerate() {
                if c != 0 {
                    m.set(row, col, c);
                }
            }
        }
        Ok(m)
    }

    /// Matrix of multiplication by a homogeneous element from R_d to
    /// R_{d + deg a}.
    pub fn element_action(&self, a: &RingElement, d: i64) -> Result<Matrix> {
        let (e, coords) = match a.homogeneous_part() {
            Some(x) => x,
            None => {
                if a.is_zero() {
                    return Ok(Matrix::zero(self.field, 0, self.dim_at(d)));
                }
                return Err(Error::NonHomogeneousElement(format!("{a:?}")));
            }
        };
        self.check_degree(d + e, "element action")?;
        let src = self.dim_at(d);
        let dst = self.dim_at(d + e);
        let mut m = Matrix::zero(self.field, dst, src);
        if d < 0 || src == 0 || dst == 0 {
            return Ok(m);
        }
        for (col, &bi) in self.basis[d as usize].iter().enumerate() {
            let mono = &self.monomials[d as usize][bi];
            for (k, &c) in coords.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let me = &self.monomials[e as usize][self.basis[e as usize][k]];
                let prod: Vec<u32> = mono.iter().zip(me).map(|(x, y)| x + y).collect();
                let (_, nfv) = self.mono_nf(&prod)?;
                for (row, &nv) in nfv.iter().enumerate() {
                    if nv != 0 {
                        let cur = m.get(row, col);
                        m.set(row, col, self.field.add(cur, self.field.mul(c, nv)));
                    }
                }
            }
        }
        Ok(m)
    }

    /// Degree-d slice of m^2 as a row space in the standard basis of R_d.
    pub fn m_squared_slice(&self, d: i64) -> Result<RowSpace> {
        self.check_degree(d, "m^2 slice")?;
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for v in 0..self.num_vars() {
            let w = self.var_degree(v);
            let src = d - w;
            if src < 1 {
                continue;
            }
            let act = self.var_action(v, src)?;
            for col in 0..act.cols() {
                rows.push((0..act.rows()).map(|r| act.get(r, col)).collect());
            }
        }
        let dim = self.dim_at(d);
        Ok(RowSpace::from_rows(&Matrix::from_rows(self.field, dim, rows)))
    }

    /// Splits the idx-th standard monomial of degree d as x_v * rest,
    /// choosing the first variable with a positive exponent, and returns v
    /// together with the normal form of the rest one degree down.
    pub fn factor_basis_monomial(&self, d: i64, idx: usize) -> Result<(usize, Vec<u64>)> {
        self.check_degree(d, "monomial factoring")?;
        if d < 1 {
            return Err(Error::Validation("cannot factor a degree-0 monomial".into()));
        }
        let du = d as usize;
        let exps = &self.monomials[du][self.basis[du][idx]];
        let v = exps
            .iter()
            .position(|&e| e > 0)
            .expect("positive-degree monomial has a positive exponent");
        let mut rest = exps.clone();
        rest[v] -= 1;
        let (_, coords) = self.mono_nf(&rest)?;
        Ok((v, coords))
    }

    /// Smallest i with R_d = 0 for all i <= d <= D. Certified whenever the
    /// observed zero run is at least as long as the largest variable degree:
    /// past that, every monomial factors through an already dead degree.
    pub fn loewy_length(&self) -> LoewyLength {
        let d_top = self.truncation;
        let mut first_dead = d_top + 1;
        for d in (0..=d_top).rev() {
            if self.dim_at(d) != 0 {
                break;
            }
            first_dead = d;
        }
        let run = d_top - first_dead + 1;
        if first_dead <= d_top && run >= self.max_var_degree() {
            LoewyLength::Certified(first_dead)
        } else if first_dead == 0 {
            // the zero ring
            LoewyLength::Certified(0)
        } else {
            LoewyLength::ExceedsWindow { lower_bound: d_top + 1 }
        }
    }

    /// Stable identity string used as a cache key.
    pub fn structural_key(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "p{};D{};v", self.p(), self.truncation);
        for (n, d) in &self.vars {
            let _ = write!(s, "{n}:{d},");
        }
        let mut rels: Vec<String> = self.relations.iter().map(|r| format!("{r:?}")).collect();
        rels.sort();
        let _ = write!(s, ";r{}", rels.join("|"));
        s
    }
}

impl RingElement {
    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (i64, &[u64])> {
        self.comps.iter().map(|(&d, v)| (d, v.as_slice()))
    }

    /// Some((degree, coords)) when the element is homogeneous and nonzero.
    pub fn homogeneous_part(&self) -> Option<(i64, &[u64])> {
        if self.comps.len() == 1 {
            let (&d, v) = self.comps.iter().next().unwrap();
            Some((d, v.as_slice()))
        } else {
            None
        }
    }

    pub fn degree(&self) -> Option<i64> {
        self.homogeneous_part().map(|(d, _)| d)
    }

    /// True when every homogeneous component has positive degree.
    pub fn in_maximal_ideal(&self) -> bool {
        self.comps.keys().all(|&d| d > 0)
    }

    pub(crate) fn from_component(d: i64, coords: Vec<u64>) -> RingElement {
        let mut comps = BTreeMap::new();
        if coords.iter().any(|&c| c != 0) {
            comps.insert(d, coords);
        }
        RingElement { comps }
    }
}
