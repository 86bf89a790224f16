//! Exact linear algebra over F_p.
//!
//! Matrices act on column vectors: an `r x c` matrix is a map F_p^c -> F_p^r.
//! Small matrices are dense row-major; above [`SPARSE_COL_THRESHOLD`] columns
//! they switch to coordinate-sparse rows. Row reduction always produces the
//! canonical reduced row echelon form, so results are representation
//! independent and bit-reproducible.

use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Column count at which construction switches to the sparse representation.
pub const SPARSE_COL_THRESHOLD: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Dense(Vec<u64>),
    /// Each row: sorted (column, nonzero value) pairs.
    Sparse(Vec<Vec<(u32, u64)>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    repr: Repr,
}

/// target - coef * src over sorted sparse rows.
fn axpy(f: FieldSpec, target: &[(u32, u64)], coef: u64, src: &[(u32, u64)]) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(target.len() + src.len());
    let (mut a, mut b) = (0usize, 0usize);
    while a < target.len() || b < src.len() {
        match (target.get(a), src.get(b)) {
            (Some(&(ca, va)), Some(&(cb, vb))) if ca == cb => {
                let v = f.sub(va, f.mul(coef, vb));
                if v != 0 {
                    out.push((ca, v));
                }
                a += 1;
                b += 1;
            }
            (Some(&(ca, va)), Some(&(cb, _))) if ca < cb => {
                out.push((ca, va));
                a += 1;
            }
            (Some(_), Some(&(cb, vb))) => {
                let v = f.neg(f.mul(coef, vb));
                if v != 0 {
                    out.push((cb, v));
                }
                b += 1;
            }
            (Some(&(ca, va)), None) => {
                out.push((ca, va));
                a += 1;
            }
            (None, Some(&(cb, vb))) => {
                let v = f.neg(f.mul(coef, vb));
                if v != 0 {
                    out.push((cb, v));
                }
                b += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        let repr = if cols >= SPARSE_COL_THRESHOLD {
            Repr::Sparse(vec![Vec::new(); rows])
        } else {
            Repr::Dense(vec![0; rows * cols])
        };
        Matrix { field, rows, cols, repr }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from dense row data; entries are reduced modulo p.
    pub fn from_rows(field: FieldSpec, cols: usize, data: Vec<Vec<u64>>) -> Self {
        let rows = data.len();
        let mut m = Matrix::zero(field, rows, cols);
        for (i, row) in data.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "row length mismatch");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v % field.p());
            }
        }
        m
    }

    pub fn from_entries(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        entries: &[(usize, usize, u64)],
    ) -> Self {
        let mut m = Matrix::zero(field, rows, cols);
        for &(i, j, v) in entries {
            let cur = m.get(i, j);
            m.set(i, j, field.add(cur, v % field.p()));
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        debug_assert!(i < self.rows && j < self.cols);
        match &self.repr {
            Repr::Dense(d) => d[i * self.cols + j],
            Repr::Sparse(rows) => rows[i]
                .binary_search_by_key(&(j as u32), |e| e.0)
                .map(|k| rows[i][k].1)
                .unwrap_or(0),
        }
    }

    /// Construction-time mutation; all public operations treat matrices as
    /// immutable values.
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(i < self.rows && j < self.cols);
        let v = v % self.field.p();
        match &mut self.repr {
            Repr::Dense(d) => d[i * self.cols + j] = v,
            Repr::Sparse(rows) => {
                let row = &mut rows[i];
                match row.binary_search_by_key(&(j as u32), |e| e.0) {
                    Ok(k) => {
                        if v == 0 {
                            row.remove(k);
                        } else {
                            row[k].1 = v;
                        }
                    }
                    Err(k) => {
                        if v != 0 {
                            row.insert(k, (j as u32, v));
                        }
                    }
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Dense(d) => d.iter().all(|&v| v == 0),
            Repr::Sparse(rows) => rows.iter().all(|r| r.is_empty()),
        }
    }

    fn row_sparse(&self, i: usize) -> Vec<(u32, u64)> {
        match &self.repr {
            Repr::Dense(d) => {
                let base = i * self.cols;
                (0..self.cols)
                    .filter_map(|j| {
                        let v = d[base + j];
                        (v != 0).then_some((j as u32, v))
                    })
                    .collect()
            }
            Repr::Sparse(rows) => rows[i].clone(),
        }
    }

    pub fn row_dense(&self, i: usize) -> Vec<u64> {
        match &self.repr {
            Repr::Dense(d) => d[i * self.cols..(i + 1) * self.cols].to_vec(),
            Repr::Sparse(rows) => {
                let mut out = vec![0; self.cols];
                for &(j, v) in &rows[i] {
                    out[j as usize] = v;
                }
                out
            }
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for (j, v) in self.row_sparse(i) {
                out.set(j as usize, i, v);
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        assert_eq!(self.field, other.field);
        let f = self.field;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        let mut buf = vec![0u64; other.cols];
        for i in 0..self.rows {
            buf.iter_mut().for_each(|v| *v = 0);
            let mut touched = false;
            for (k, a) in self.row_sparse(i) {
                if a == 0 {
                    continue;
                }
                touched = true;
                for (j, b) in other.row_sparse(k as usize) {
                    let j = j as usize;
                    buf[j] = f.add(buf[j], f.mul(a, b));
                }
            }
            if touched {
                for (j, &v) in buf.iter().enumerate() {
                    if v != 0 {
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                self.row_sparse(i)
                    .into_iter()
                    .fold(0u64, |acc, (j, a)| f.add(acc, f.mul(a, v[j as usize])))
            })
            .collect()
    }

    /// Vertical stack: rows of `self` above rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.field, other.field);
        let mut out = Matrix::zero(self.field, self.rows + other.rows, self.cols);
        for i in 0..self.rows {
            for (j, v) in self.row_sparse(i) {
                out.set(i, j as usize, v);
            }
        }
        for i in 0..other.rows {
            for (j, v) in other.row_sparse(i) {
                out.set(self.rows + i, j as usize, v);
            }
        }
        out
    }

    /// Assembles a block matrix. `row_dims`/`col_dims` give the block grid;
    /// `blocks` maps grid cells to matrices of the matching shape.
    pub fn block(
        field: FieldSpec,
        row_dims: &[usize],
        col_dims: &[usize],
        blocks: &[(usize, usize, Matrix)],
    ) -> Matrix {
        let rows: usize = row_dims.iter().sum();
        let cols: usize = col_dims.iter().sum();
        let row_off: Vec<usize> = row_dims
            .iter()
            .scan(0, |acc, &d| {
                let o = *acc;
                *acc += d;
                Some(o)
            })
            .collect();
        let col_off: Vec<usize> = col_dims
            .iter()
            .scan(0, |acc, &d| {
                let o = *acc;
                *acc += d;
                Some(o)
            })
            .collect();
        let mut out = Matrix::zero(field, rows, cols);
        for (bi, bj, m) in blocks {
            assert_eq!(m.rows(), row_dims[*bi], "block row dim mismatch");
            assert_eq!(m.cols(), col_dims[*bj], "block col dim mismatch");
            for i in 0..m.rows() {
                for (j, v) in m.row_sparse(i) {
                    out.set(row_off[*bi] + i, col_off[*bj] + j as usize, v);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: u64) -> Matrix {
        let f = self.field;
        let c = c % f.p();
        let mut out = Matrix::zero(f, self.rows, self.cols);
        for i in 0..self.rows {
            for (j, v) in self.row_sparse(i) {
                out.set(i, j as usize, f.mul(v, c));
            }
        }
        out
    }

    pub fn add_matrix(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let mut out = self.clone();
        for i in 0..other.rows {
            for (j, v) in other.row_sparse(i) {
                let j = j as usize;
                let cur = out.get(i, j);
                out.set(i, j, f.add(cur, v));
            }
        }
        out
    }

    /// Canonical reduced row echelon form plus the list of pivot columns
    /// (strictly increasing). RREF is unique, so dense and sparse paths
    /// agree bit for bit.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        match &self.repr {
            Repr::Dense(_) => self.rref_dense(),
            Repr::Sparse(_) => self.rref_sparse(),
        }
    }

    fn rref_dense(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let p = f.p();
        let mut data: Vec<Vec<u64>> = (0..self.rows).map(|i| self.row_dense(i)).collect();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            // leftmost-nonzero pivoting: first row at or below r with a
            // nonzero entry in column c
            let Some(sel) = (r..self.rows).find(|&i| data[i][c] != 0) else {
                continue;
            };
            data.swap(r, sel);
            let inv = f.inv(data[r][c]);
            if inv != 1 {
                for v in data[r][c..].iter_mut() {
                    *v = (*v * inv) % p;
                }
            }
            for i in 0..self.rows {
                if i != r && data[i][c] != 0 {
                    let factor = data[i][c];
                    let (head, tail) = data.split_at_mut(r.max(i));
                    let (ri, rr) = if i < r {
                        (&mut head[i], &tail[0])
                    } else {
                        (&mut tail[0], &head[r])
                    };
                    for (a, b) in ri[c..].iter_mut().zip(rr[c..].iter()) {
                        *a = f.sub(*a, f.mul(factor, *b));
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        let m = Matrix::from_rows(f, self.cols, data);
        (m, pivots)
    }

    fn rref_sparse(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut reduced: Vec<Vec<(u32, u64)>> = Vec::new();
        let mut pivot_row: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
        for i in 0..self.rows {
            let mut row = self.row_sparse(i);
            loop {
                let Some(&(lead, lv)) = row.first() else { break };
                let Some(&ri) = pivot_row.get(&lead) else { break };
                row = axpy(f, &row, lv, &reduced[ri]);
            }
            if let Some(&(lead, lv)) = row.first() {
                if lv != 1 {
                    let inv = f.inv(lv);
                    for e in row.iter_mut() {
                        e.1 = f.mul(e.1, inv);
                    }
                }
                pivot_row.insert(lead, reduced.len());
                reduced.push(row);
            }
        }
        // full back substitution: clear every entry sitting over a pivot
        let mut order: Vec<usize> = (0..reduced.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(reduced[i][0].0));
        for &i in &order {
            let mut row = std::mem::take(&mut reduced[i]);
            loop {
                let hit = row
                    .iter()
                    .skip(1)
                    .find_map(|&(c, v)| pivot_row.get(&c).map(|&ri| (ri, v)));
                match hit {
                    Some((ri, v)) => row = axpy(f, &row, v, &reduced[ri]),
                    None => break,
                }
            }
            reduced[i] = row;
        }
        let mut rows_sorted: Vec<Vec<(u32, u64)>> = reduced;
        rows_sorted.sort_by_key(|r| r[0].0);
        let pivots: Vec<usize> = rows_sorted.iter().map(|r| r[0].0 as usize).collect();
        let nrows = rows_sorted.len();
        // canonical form keeps only the nonzero rows
        let repr = Repr::Sparse(rows_sorted);
        (
            Matrix {
                field: f,
                rows: nrows,
                cols: self.cols,
                repr,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, one basis vector per column of the result.
    /// Basis vectors are indexed by the free (non pivot) columns in
    /// increasing order, each with a 1 in its free coordinate.
    pub fn kernel_basis(&self) -> Matrix {
        let f = self.field;
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row_idx, &c) in pivots.iter().enumerate() {
                v[c] = Some(row_idx);
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|c| pivot_set[*c].is_none()).collect();
        let mut out = Matrix::zero(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, 1);
            for (row_idx, &pc) in pivots.iter().enumerate() {
                let v = if r.rows() > row_idx { r.get(row_idx, fc) } else { 0 };
                if v != 0 {
                    out.set(pc, k, f.neg(v));
                }
            }
        }
        out
    }
}

/// Incremental span of vectors with forward elimination only. Insertion
/// order is fixed by the caller, so accepted-vector selection is
/// deterministic; used to pick minimal generating sets.
#[derive(Debug)]
pub struct SpanBuilder {
    field: FieldSpec,
    cols: usize,
    /// pivot column -> row normalized to a unit leading entry
    rows: std::collections::BTreeMap<u32, Vec<(u32, u64)>>,
}

impl SpanBuilder {
    pub fn new(field: FieldSpec, cols: usize) -> SpanBuilder {
        SpanBuilder { field, cols, rows: std::collections::BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn reduce(&self, v: &[u64]) -> Vec<(u32, u64)> {
        let f = self.field;
        let mut row: Vec<(u32, u64)> = v
            .iter()
            .enumerate()
            .filter_map(|(j, &x)| (x != 0).then_some((j as u32, x)))
            .collect();
        while let Some(&(lead, lv)) = row.first() {
            match self.rows.get(&lead) {
                Some(pivot_row) => row = axpy(f, &row, lv, pivot_row),
                None => break,
            }
        }
        row
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span. Returns true when the rank grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.cols, "span vector length mismatch");
        let f = self.field;
        let mut row = self.reduce(v);
        match row.first().copied() {
            None => false,
            Some((lead, lv)) => {
                if lv != 1 {
                    let inv = f.inv(lv);
                    for e in row.iter_mut() {
                        e.1 = f.mul(e.1, inv);
                    }
                }
                self.rows.insert(lead, row);
                true
            }
        }
    }
}

/// rank of H = ker(d_out) / im(d_in), for consecutive differentials
/// d_in: C_next -> C, d_out: C -> C_prev.
pub fn homology_rank(d_in: &Matrix, d_out: &Matrix) -> Result<usize> {
    if d_in.rows() != d_out.cols() {
        return Err(Error::Dimension(format!(
            "homology_rank: d_in target has dim {}, d_out source has dim {}",
            d_in.rows(),
            d_out.cols()
        )));
    }
    if !d_out.mul(d_in).is_zero() {
        return Err(Error::NotAComplex);
    }
    let ker = d_out.cols() - d_out.rank();
    let im = d_in.rank();
    Ok(ker - im)
}

/// Row space with a canonical (RREF) basis; supports membership tests and
/// canonical projection onto the complement coordinates.
#[derive(Debug, Clone)]
pub struct RowSpace {
    field: FieldSpec,
    cols: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn from_rows(m: &Matrix) -> RowSpace {
        let (basis, pivots) = m.rref();
        RowSpace {
            field: m.field(),
            cols: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn empty(field: FieldSpec, cols: usize) -> RowSpace {
        RowSpace {
            field,
            cols,
            basis: Matrix::zero(field, 0, cols),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn free_cols(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.cols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Eliminates the pivot coordinates of `v`; the residual is supported on
    /// free columns and is zero exactly when v lies in the space.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        let mut out = v.to_vec();
        for (row_idx, &c) in self.pivots.iter().enumerate() {
            let coef = out[c];
            if coef != 0 {
                for (j, b) in self.basis.row_sparse(row_idx) {
                    let j = j as usize;
                    out[j] = f.sub(out[j], f.mul(coef, b));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_space(&self, other: &RowSpace) -> bool {
        (0..other.basis.rows()).all(|i| self.contains(&other.basis.row_dense(i)))
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
}

/// Quotient V/W of a full coordinate space by a row space, with canonical
/// coordinates given by the free columns of W.
#[derive(Debug, Clone)]
pub struct QuotientSpace {
    space: RowSpace,
    free: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(space: RowSpace) -> QuotientSpace {
        let free = space.free_cols();
        QuotientSpace { space, free }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.cols()
    }

    pub fn free_cols(&self) -> &[usize] {
        &self.free
    }

    /// Image of an ambient vector in quotient coordinates.
    pub fn project(&self, v: &[u64]) -> Vec<u64> {
        let r = self.space.reduce(v);
        self.free.iter().map(|&c| r[c]).collect()
    }

    /// Canonical section: quotient coordinates back to an ambient vector.
    pub fn lift(&self, q: &[u64]) -> Vec<u64> {
        assert_eq!(q.len(), self.free.len());
        let mut out = vec![0; self.space.cols()];
        for (k, &c) in self.free.iter().enumerate() {
            out[c] = q[k];
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn rref_identity_f2() {
        let m = Matrix::identity(f(2), 2);
        let (r, piv) = m.rref();
        assert_eq!(r, m);
        assert_eq!(piv, vec![0, 1]);
    }

    #[test]
    fn rref_zero() {
        let m = Matrix::zero(f(2), 3, 3);
        let (r, piv) = m.rref();
        assert!(piv.is_empty());
        assert!(r.is_zero());
    }

    #[test]
    fn rref_rank_one_f101() {
        let m = Matrix::from_rows(f(101), 2, vec![vec![1, 2], vec![2, 4]]);
        let (_, piv) = m.rref();
        assert_eq!(piv, vec![0]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_identity_empty() {
        let m = Matrix::identity(f(5), 4);
        assert_eq!(m.kernel_basis().cols(), 0);
    }

    #[test]
    fn kernel_zero_map_full() {
        let m = Matrix::zero(f(2), 1, 3);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 3);
        assert_eq!(k.rows(), 3);
    }

    #[test]
    fn kernel_sum_f2() {
        let m = Matrix::from_rows(f(2), 2, vec![vec![1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!((k.get(0, 0), k.get(1, 0)), (1, 1));
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn homology_rank_zero_maps() {
        let d = Matrix::zero(f(2), 0, 4);
        let din = Matrix::zero(f(2), 4, 0);
        assert_eq!(homology_rank(&din, &d).unwrap(), 4);
    }

    #[test]
    fn homology_exact_pair() {
        // F_5^1 ->(include) F_5^2 ->(project) F_5^1, exact in the middle
        let d_in = Matrix::from_rows(f(5), 1, vec![vec![1], vec![0]]);
        let d_out = Matrix::from_rows(f(5), 2, vec![vec![0, 1]]);
        assert_eq!(homology_rank(&d_in, &d_out).unwrap(), 0);
    }

    #[test]
    fn homology_not_a_complex() {
        let id = Matrix::identity(f(2), 2);
        assert_eq!(homology_rank(&id, &id), Err(Error::NotAComplex));
    }

    #[test]
    fn sparse_dense_rref_agree() {
        let rows = vec![
            vec![1, 2, 3, 4, 0],
            vec![2, 4, 6, 8, 1],
            vec![0, 1, 1, 0, 0],
            vec![1, 3, 4, 4, 0],
        ];
        let dense = Matrix::from_rows(f(101), 5, rows.clone());
        let mut sparse = Matrix {
            field: f(101),
            rows: 4,
            cols: 5,
            repr: Repr::Sparse(vec![Vec::new(); 4]),
        };
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                sparse.set(i, j, v);
            }
        }
        let (rd, pd) = dense.rref();
        let (rs, ps) = sparse.rref();
        assert_eq!(pd, ps);
        for i in 0..pd.len() {
            assert_eq!(rd.row_dense(i), rs.row_dense(i), "row {i}");
        }
    }

    #[test]
    fn rref_idempotent() {
        let m = Matrix::from_rows(f(7), 4, vec![vec![1, 2, 3, 4], vec![5, 6, 0, 1], vec![6, 1, 3, 5]]);
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        assert_eq!(p1, p2);
        for i in 0..p1.len() {
            assert_eq!(r1.row_dense(i), r2.row_dense(i));
        }
    }

    #[test]
    fn quotient_project_lift() {
        // W = span{(1,1,0)} in F_2^3; free cols {1,2}
        let w = RowSpace::from_rows(&Matrix::from_rows(f(2), 3, vec![vec![1, 1, 0]]));
        let q = QuotientSpace::new(w);
        assert_eq!(q.dim(), 2);
        assert_eq!(q.project(&[1, 0, 1]), vec![1, 1]); // (1,0,1) = (1,1,0) + (0,1,1)
        let v = q.lift(&[1, 1]);
        assert_eq!(q.project(&v), vec![1, 1]);
    }
}
