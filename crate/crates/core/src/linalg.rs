//! Dense exact matrices, subspaces, quotients and tensor wiring.
//!
//! A linear map `V -> W` is stored as a `dim W x dim V` matrix whose column
//! `j` is the image of basis vector `j`. Tensor products use the
//! left-factor-major ordering: `e_i (x) f_j` sits at index `i * dim W + j`.

use std::fmt;

use crate::scalar::{FieldSpec, Scalar};
use crate::Error;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from row-major entries, checking the field of each.
    pub fn from_rows(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        data: Vec<Scalar>,
    ) -> Result<Self, Error> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {rows}x{cols} = {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|s| !field.contains(s)) {
            return Err(Error::InvalidScalar(format!(
                "{bad:?} does not lie in {field}"
            )));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Small integer matrices, mostly for tests and built-in tables.
    pub fn from_ints(field: FieldSpec, rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix {
            field,
            rows,
            cols,
            data: data.iter().map(|&n| field.from_i64(n)).collect(),
        }
    }

    pub fn column_vector(field: FieldSpec, entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        Matrix {
            field,
            rows: n,
            cols: 1,
            data: entries,
        }
    }

    pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Self {
        let mut m = Self::zeros(field, n, 1);
        m.set(i, 0, field.one());
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn entries_mut(&mut self) -> &mut [Scalar] {
        &mut self.data
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn same_field(&self, other: &Matrix) {
        assert_eq!(self.field, other.field, "matrices over different fields");
    }

    /// Matrix product `self * rhs`, i.e. the composite "first rhs, then self".
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        self.same_field(rhs);
        assert_eq!(
            self.cols,
            rhs.rows,
            "shape mismatch in product {:?} * {:?}",
            self.shape(),
            rhs.shape()
        );
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let rrow = rhs.row(k);
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, b) in orow.iter_mut().zip(rrow) {
                    if !b.is_zero() {
                        o.add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        self.same_field(rhs);
        assert_eq!(self.shape(), rhs.shape());
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.same_field(rhs);
        assert_eq!(self.shape(), rhs.shape());
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    /// Kronecker product, the matrix of `self (x) rhs`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        self.same_field(rhs);
        let (r2, c2) = rhs.shape();
        let mut out = Matrix::zeros(self.field, self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * r2 + k, j * c2 + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        self.same_field(rhs);
        assert_eq!(self.rows, rhs.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |i, j| {
            self.get(i, cols[j]).clone()
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |i, j| {
            self.get(rows[i], j).clone()
        })
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].inv().expect("nonzero pivot");
            for x in rows[r].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            let pivot_row = rows[r].clone();
            let support: Vec<usize> = (c..self.cols)
                .filter(|&k| !pivot_row[k].is_zero())
                .collect();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = -&row[c];
                for &k in &support {
                    row[k].add_mul(&f, &pivot_row[k]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let data = rows.into_iter().flatten().collect();
        (
            Matrix {
                field: self.field,
                rows: self.rows,
                cols: self.cols,
                data,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self * x = 0}` as the columns of the result.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.field, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, self.field.one());
            for (row, &p) in pivots.iter().enumerate() {
                out.set(p, k, -r.get(row, f));
            }
        }
        out
    }

    /// Some `X` with `self * X = rhs`, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        let (r, pivots) = self.hstack(rhs).rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut out = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                out.set(p, j, r.get(row, self.cols + j).clone());
            }
        }
        Some(out)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let inv = self.solve(&Matrix::identity(self.field, self.rows))?;
        (self.rank() == self.rows).then_some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Basis for the column space, extracted as a subset of the columns.
    pub fn column_space(&self) -> Subspace {
        let (_, pivots) = self.rref();
        Subspace::from_independent(self.select_columns(&pivots))
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// The flip `V (x) W -> W (x) V`.
    pub fn flip(field: FieldSpec, v: usize, w: usize) -> Matrix {
        permutation(field, &[v, w], &[1, 0])
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|s| !s.is_zero()).count()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Splits a flat tensor index into per-factor indices.
pub fn decode_index(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
    out
}

pub fn encode_index(parts: &[usize], dims: &[usize]) -> usize {
    parts.iter().zip(dims).fold(0, |acc, (&p, &d)| acc * d + p)
}

/// The map `V_0 (x) ... (x) V_{n-1} -> V_{perm[0]} (x) ... (x) V_{perm[n-1]}`.
pub fn permutation(field: FieldSpec, dims: &[usize], perm: &[usize]) -> Matrix {
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut m = Matrix::zeros(field, total, total);
    for idx in 0..total {
        let parts = decode_index(idx, dims);
        let moved: Vec<usize> = perm.iter().map(|&p| parts[p]).collect();
        m.set(encode_index(&moved, &out_dims), idx, field.one());
    }
    m
}

/// A subspace given by a basis (the columns of `basis`), with a cached left
/// inverse for computing coordinates.
#[derive(Clone, Debug)]
pub struct Subspace {
    basis: Matrix,
    coords: Matrix,
}

impl Subspace {
    /// `basis` must have linearly independent columns.
    pub fn from_independent(basis: Matrix) -> Self {
        let (_, rows) = basis.transpose().rref();
        debug_assert_eq!(rows.len(), basis.cols());
        let square = basis.select_rows(&rows);
        let inv = square.inverse().expect("independent columns");
        let mut select = Matrix::zeros(basis.field(), rows.len(), basis.rows());
        for (k, &r) in rows.iter().enumerate() {
            select.set(k, r, basis.field().one());
        }
        let coords = inv.mul(&select);
        Subspace { basis, coords }
    }

    pub fn kernel_of(map: &Matrix) -> Self {
        Self::from_independent(map.kernel())
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    /// Inclusion into the ambient space.
    pub fn inclusion(&self) -> &Matrix {
        &self.basis
    }

    /// A left inverse of the inclusion; exact on vectors of the subspace.
    pub fn coordinates(&self) -> &Matrix {
        &self.coords
    }

    /// Coordinates of `vectors` (columns), or `None` if some column leaves the subspace.
    pub fn try_coordinates(&self, vectors: &Matrix) -> Option<Matrix> {
        let c = self.coords.mul(vectors);
        (self.basis.mul(&c) == *vectors).then_some(c)
    }
}

/// The quotient of an ambient space by a subspace of relations.
///
/// The retained coordinates are the non-pivot coordinates of the reduced
/// relation matrix; `section` sends a class to its canonical representative.
#[derive(Clone, Debug)]
pub struct Quotient {
    ambient: usize,
    projection: Matrix,
    section: Matrix,
    relations: Matrix,
}

impl Quotient {
    /// `relations` holds spanning vectors as columns (need not be independent).
    pub fn new(relations: &Matrix) -> Self {
        let field = relations.field();
        let n = relations.rows();
        let (r, pivots) = relations.transpose().rref();
        let kept: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut projection = Matrix::zeros(field, kept.len(), n);
        for (k, &c) in kept.iter().enumerate() {
            projection.set(k, c, field.one());
        }
        // A pivot coordinate e_p equals -(rest of its rref row) modulo relations.
        for (row, &p) in pivots.iter().enumerate() {
            for (k, &c) in kept.iter().enumerate() {
                let v = r.get(row, c);
                if !v.is_zero() {
                    projection.set(k, p, -v);
                }
            }
        }
        let mut section = Matrix::zeros(field, n, kept.len());
        for (k, &c) in kept.iter().enumerate() {
            section.set(c, k, field.one());
        }
        Quotient {
            ambient: n,
            projection,
            section,
            relations: relations.clone(),
        }
    }

    pub fn trivial(field: FieldSpec, n: usize) -> Self {
        Self::new(&Matrix::zeros(field, n, 0))
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    /// Pushes a map defined on the ambient space down to the quotient,
    /// failing if it does not vanish on the relations.
    pub fn descend(&self, map: &Matrix) -> Option<Matrix> {
        map.mul(&self.relations)
            .is_zero()
            .then(|| map.mul(&self.section))
    }

    /// Like [`Quotient::descend`] for a map out of a tensor product whose
    /// factor `at` (of `dims`) is this quotient's ambient space.
    pub fn descend_factor(&self, map: &Matrix, dims: &[usize], at: usize) -> Option<Matrix> {
        map.precompose_factor(dims, at, &self.relations)
            .is_zero()
            .then(|| map.precompose_factor(dims, at, &self.section))
    }
}

/// Tracks a linear map from a fixed domain into a tensor product of factor
/// dimensions, and lets maps act on contiguous runs of factors or permute
/// factors without materialising Kronecker products. Columns are sparse.
#[derive(Clone, Debug)]
pub struct Wiring {
    field: FieldSpec,
    dims: Vec<usize>,
    columns: Vec<Vec<(usize, Scalar)>>,
}

impl Wiring {
    pub fn identity(field: FieldSpec, dims: &[usize]) -> Self {
        let n: usize = dims.iter().product();
        let columns = (0..n).map(|i| vec![(i, field.one())]).collect();
        Wiring {
            field,
            dims: dims.to_vec(),
            columns,
        }
    }

    /// Starts from an arbitrary map into `dims`.
    pub fn from_map(map: &Matrix, dims: &[usize]) -> Self {
        assert_eq!(map.rows(), dims.iter().product::<usize>());
        let columns = (0..map.cols())
            .map(|c| {
                (0..map.rows())
                    .filter(|&r| !map.get(r, c).is_zero())
                    .map(|r| (r, map.get(r, c).clone()))
                    .collect()
            })
            .collect();
        Wiring {
            field: map.field(),
            dims: dims.to_vec(),
            columns,
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Applies `f` to the factors `at .. at + span`, replacing them with `out`.
    pub fn apply(self, at: usize, span: usize, f: &Matrix, out: &[usize]) -> Self {
        let mid: usize = self.dims[at..at + span].iter().product();
        let right: usize = self.dims[at + span..].iter().product();
        let out_mid: usize = out.iter().product();
        assert_eq!(
            f.cols(),
            mid,
            "map input does not match factors {at}..{}",
            at + span
        );
        assert_eq!(
            f.rows(),
            out_mid,
            "map output does not match declared factors"
        );
        let fcols: Vec<Vec<(usize, Scalar)>> = (0..mid)
            .map(|m| {
                (0..out_mid)
                    .filter(|&o| !f.get(o, m).is_zero())
                    .map(|o| (o, f.get(o, m).clone()))
                    .collect()
            })
            .collect();
        let left: usize = self.dims[..at].iter().product();
        let total = left * out_mid * right;
        let mut scratch = vec![self.field.zero(); total];
        let mut touched = vec![false; total];
        let mut list = Vec::new();
        let columns = self
            .columns
            .into_iter()
            .map(|col| {
                for (row, v) in &col {
                    let (lm, r) = (row / right, row % right);
                    let (l, m) = (lm / mid, lm % mid);
                    for (o, fv) in &fcols[m] {
                        let dst = (l * out_mid + o) * right + r;
                        if !touched[dst] {
                            touched[dst] = true;
                            list.push(dst);
                        }
                        scratch[dst].add_mul(fv, v);
                    }
                }
                list.sort_unstable();
                let mut out_col = Vec::with_capacity(list.len());
                for &d in &list {
                    touched[d] = false;
                    let v = std::mem::replace(&mut scratch[d], self.field.zero());
                    if !v.is_zero() {
                        out_col.push((d, v));
                    }
                }
                list.clear();
                out_col
            })
            .collect();
        let mut dims = self.dims[..at].to_vec();
        dims.extend_from_slice(out);
        dims.extend_from_slice(&self.dims[at + span..]);
        Wiring {
            field: self.field,
            dims,
            columns,
        }
    }

    /// Reorders factors: new factor `k` is old factor `perm[k]`.
    pub fn permute(self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.dims.len());
        let new_dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let dims = self.dims;
        let columns = self
            .columns
            .into_iter()
            .map(|col| {
                let mut moved: Vec<(usize, Scalar)> = col
                    .into_iter()
                    .map(|(row, v)| {
                        let parts = decode_index(row, &dims);
                        let p: Vec<usize> = perm.iter().map(|&k| parts[k]).collect();
                        (encode_index(&p, &new_dims), v)
                    })
                    .collect();
                moved.sort_unstable_by_key(|e| e.0);
                moved
            })
            .collect();
        Wiring {
            field: self.field,
            dims: new_dims,
            columns,
        }
    }

    pub fn finish(self) -> Matrix {
        let rows: usize = self.dims.iter().product();
        let mut m = Matrix::zeros(self.field, rows, self.columns.len());
        for (c, col) in self.columns.into_iter().enumerate() {
            for (r, v) in col {
                m.set(r, c, v);
            }
        }
        m
    }
}

impl Matrix {
    /// `self ∘ (id ⊗ g ⊗ id)` where `g` lands in domain factor `at` of `dims`.
    pub fn precompose_factor(&self, dims: &[usize], at: usize, g: &Matrix) -> Matrix {
        assert_eq!(self.cols, dims.iter().product::<usize>());
        assert_eq!(g.rows(), dims[at]);
        let left: usize = dims[..at].iter().product();
        let right: usize = dims[at + 1..].iter().product();
        let (mid, new_mid) = (dims[at], g.cols());
        let gcols: Vec<Vec<(usize, &Scalar)>> = (0..new_mid)
            .map(|j| {
                (0..mid)
                    .map(|a| (a, g.get(a, j)))
                    .filter(|e| !e.1.is_zero())
                    .collect()
            })
            .collect();
        let new_cols = left * new_mid * right;
        let mut out = Matrix::zeros(self.field, self.rows, new_cols);
        for l in 0..left {
            for (j, gcol) in gcols.iter().enumerate() {
                for r in 0..right {
                    let dst = (l * new_mid + j) * right + r;
                    for &(a, gv) in gcol {
                        let src = (l * mid + a) * right + r;
                        for i in 0..self.rows {
                            let v = self.get(i, src);
                            if !v.is_zero() {
                                out.data[i * new_cols + dst].add_mul(gv, v);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// `f_1 (x) f_2 (x) ... ` applied factorwise.
pub fn tensor_maps(maps: &[&Matrix]) -> Matrix {
    let field = maps[0].field();
    let mut acc = Matrix::identity(field, 1);
    for m in maps {
        acc = acc.kron(m);
    }
    acc
}
