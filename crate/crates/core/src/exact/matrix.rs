use super::{ExactError, Field};

/// Dense row-major matrix over an exact field.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::Shape("ragged rows".into()));
        }
        Ok(Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(field: &F, rows: &[&[i64]]) -> Self {
        let c = rows.first().map_or(0, |r| r.len());
        Self::from_fn(field, rows.len(), c, |i, j| field.from_i64(rows[i][j]))
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: &F, rows: usize, cols: &[Vec<F::Elem>]) -> Self {
        Self::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    /// The 1x1 matrix `[c]`.
    pub fn scalar(field: &F, c: F::Elem) -> Self {
        Matrix {
            field: field.clone(),
            rows: 1,
            cols: 1,
            data: vec![c],
        }
    }

    /// Permutation matrix of the flip `X (x) Y -> Y (x) X`.
    pub fn flip(field: &F, dim_x: usize, dim_y: usize) -> Self {
        let n = dim_x * dim_y;
        let mut m = Self::zeros(field, n, n);
        for x in 0..dim_x {
            for y in 0..dim_y {
                m.data[(y * dim_x + x) * n + x * dim_y + y] = field.one();
            }
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &F::Elem) {
        let k = i * self.cols + j;
        self.data[k] = self.field.add(&self.data[k], v);
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Nonzero entries of column `j` as `(row, value)`.
    pub fn column_sparse(&self, j: usize) -> Vec<(usize, F::Elem)> {
        (0..self.rows)
            .filter_map(|i| {
                let v = self.get(i, j);
                (!self.field.is_zero(v)).then(|| (i, v.clone()))
            })
            .collect()
    }

    /// All columns in sparse form.
    pub fn sparse_columns(&self) -> Vec<Vec<(usize, F::Elem)>> {
        let mut cols = vec![Vec::new(); self.cols];
        for i in 0..self.rows {
            for (j, col) in cols.iter_mut().enumerate() {
                let v = &self.data[i * self.cols + j];
                if !self.field.is_zero(v) {
                    col.push((i, v.clone()));
                }
            }
        }
        cols
    }

    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }

    fn check_field(&self, other: &Self) -> Result<(), ExactError> {
        if self.field != other.field {
            Err(ExactError::FieldMismatch)
        } else {
            Ok(())
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(ExactError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(orow) {
                    if !f.is_zero(b) {
                        *d = f.add(d, &f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::Shape(format!(
                "vector of length {} for {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        self.zip_with(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.zip_with(other, |f, a, b| f.sub(a, b))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&F, &F::Elem, &F::Elem) -> F::Elem) -> Result<Self, ExactError> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ExactError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| op(&self.field, a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| self.field.mul(a, c)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Kronecker product with `(i, j) -> i * dim(B) + j` on both sides.
    pub fn kron(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_field(other)?;
        let f = &self.field;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(f, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !f.is_zero(b) {
                            out.data[(i * other.rows + k) * cols + j * other.cols + l] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(ExactError::Shape("hstack row mismatch".into()));
        }
        Ok(Self::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(ExactError::Shape("vstack column mismatch".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.field.is_zero(a))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        self.field.is_one(v)
                    } else {
                        self.field.is_zero(v)
                    }
                })
            })
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let k = r * m.cols + j;
                m.data[k] = f.mul(&m.data[k], &inv);
            }
            let pivot_row: Vec<F::Elem> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..m.cols {
                    let pv = &pivot_row[j];
                    if f.is_zero(pv) {
                        continue;
                    }
                    let k = i * m.cols + j;
                    m.data[k] = f.sub(&m.data[k], &f.mul(&factor, pv));
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column, in the
    /// standard reduced form (free coordinate 1, other free coordinates 0).
    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        (0..self.cols)
            .filter(|&c| is_pivot[c].is_none())
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(row, free));
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        if !self.is_square() {
            return Err(ExactError::Shape(format!(
                "inverse of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(&self.field, n))?;
        let (r, pivots) = aug.rref();
        let rank = pivots.iter().filter(|&&c| c < n).count();
        if rank < n {
            return Err(ExactError::Singular { rank });
        }
        Ok(Self::from_fn(&self.field, n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// One solution of `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>, ExactError> {
        if b.len() != self.rows {
            return Err(ExactError::Shape("right-hand side length".into()));
        }
        let f = &self.field;
        let col = Self::from_columns(f, self.rows, &[b.to_vec()]);
        let aug = self.hstack(&col)?;
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn determinant(&self) -> Result<F::Elem, ExactError> {
        if !self.is_square() {
            return Err(ExactError::Shape("determinant of non-square matrix".into()));
        }
        let f = &self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !f.is_zero(m.get(i, c))) else {
                return Ok(f.zero());
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = f.neg(&det);
            }
            let piv = m.get(c, c).clone();
            det = f.mul(&det, &piv);
            let inv = f.inv(&piv).expect("nonzero pivot");
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..n {
                    let v = f.mul(&factor, m.get(c, j));
                    let k = i * n + j;
                    m.data[k] = f.sub(&m.data[k], &v);
                }
            }
        }
        Ok(det)
    }
}

/// Coordinates of vectors with respect to a full-column-rank basis.
#[derive(Clone, Debug)]
pub struct SubspaceBasis<F: Field> {
    basis: Matrix<F>,
    /// left inverse restricted to pivot rows: coords = solve on these rows
    pivot_rows: Vec<usize>,
    pivot_inverse: Matrix<F>,
}

impl<F: Field> SubspaceBasis<F> {
    /// `vectors` must be linearly independent, all of length `ambient`.
    pub fn new(field: &F, ambient: usize, vectors: &[Vec<F::Elem>]) -> Result<Self, ExactError> {
        let basis = Matrix::from_columns(field, ambient, vectors);
        let (_, pivots) = basis.transpose().rref();
        if pivots.len() != vectors.len() {
            return Err(ExactError::Singular { rank: pivots.len() });
        }
        let square = Matrix::from_fn(field, pivots.len(), vectors.len(), |i, j| basis.get(pivots[i], j).clone());
        let pivot_inverse = square.inverse()?;
        Ok(SubspaceBasis {
            basis,
            pivot_rows: pivots,
            pivot_inverse,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn vector(&self, i: usize) -> Vec<F::Elem> {
        self.basis.column(i)
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let rhs: Vec<F::Elem> = self.pivot_rows.iter().map(|&r| v[r].clone()).collect();
        let coords = self.pivot_inverse.apply(&rhs).ok()?;
        let back = self.basis.apply(&coords).ok()?;
        (back == v).then_some(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{PrimeField, Rationals};

    #[test]
    fn kernel_examples() {
        let q = Rationals;
        let z = Matrix::zeros(&q, 0, 3);
        assert_eq!(z.kernel().len(), 3);
        assert!(Matrix::identity(&q, 4).kernel().is_empty());
        let m = Matrix::from_i64_rows(&q, &[&[1, 1], &[1, 1]]);
        let k = m.kernel();
        assert_eq!(k, vec![vec![q.from_i64(-1), q.from_i64(1)]]);
    }

    #[test]
    fn inverse_examples() {
        let q = Rationals;
        let i3 = Matrix::identity(&q, 3);
        assert_eq!(i3.inverse().unwrap(), i3);
        let p = Matrix::from_i64_rows(&q, &[&[0, 1], &[1, 0]]);
        assert_eq!(p.inverse().unwrap(), p);
        let s = Matrix::from_i64_rows(&q, &[&[1, 2], &[2, 4]]);
        assert!(matches!(s.inverse(), Err(ExactError::Singular { rank: 1 })));
    }

    #[test]
    fn kron_examples() {
        let f = PrimeField::new(13).unwrap();
        let i2 = Matrix::identity(&f, 2);
        let i3 = Matrix::identity(&f, 3);
        assert_eq!(i2.kron(&i3).unwrap(), Matrix::identity(&f, 6));
        let a = Matrix::from_i64_rows(&f, &[&[1, 2], &[3, 4]]);
        let c = Matrix::scalar(&f, 5);
        assert_eq!(a.kron(&c).unwrap(), a.scale(&5));
    }

    #[test]
    fn flip_is_involution() {
        let f = PrimeField::new(13).unwrap();
        let t23 = Matrix::flip(&f, 2, 3);
        let t32 = Matrix::flip(&f, 3, 2);
        assert!(t32.mul(&t23).unwrap().is_identity());
    }

    #[test]
    fn field_mismatch() {
        let a = Matrix::identity(&PrimeField::new(13).unwrap(), 2);
        let b = Matrix::identity(&PrimeField::new(5).unwrap(), 2);
        assert!(matches!(a.mul(&b), Err(ExactError::FieldMismatch)));
        assert!(matches!(a.kron(&b), Err(ExactError::FieldMismatch)));
    }

    #[test]
    fn solve_and_determinant() {
        let q = Rationals;
        let m = Matrix::from_i64_rows(&q, &[&[2, 1], &[1, 3]]);
        assert_eq!(m.determinant().unwrap(), q.from_i64(5));
        let x = m.solve(&[q.from_i64(3), q.from_i64(4)]).unwrap().unwrap();
        assert_eq!(m.apply(&x).unwrap(), vec![q.from_i64(3), q.from_i64(4)]);
        let s = Matrix::from_i64_rows(&q, &[&[1, 1], &[1, 1]]);
        assert!(s.solve(&[q.from_i64(1), q.from_i64(0)]).unwrap().is_none());
    }

    #[test]
    fn subspace_coordinates() {
        let q = Rationals;
        let v1 = vec![q.from_i64(1), q.from_i64(0), q.from_i64(1)];
        let v2 = vec![q.from_i64(0), q.from_i64(1), q.from_i64(1)];
        let sb = SubspaceBasis::new(&q, 3, &[v1, v2]).unwrap();
        let w = vec![q.from_i64(2), q.from_i64(3), q.from_i64(5)];
        assert_eq!(sb.coordinates(&w).unwrap(), vec![q.from_i64(2), q.from_i64(3)]);
        let outside = vec![q.from_i64(1), q.from_i64(0), q.from_i64(0)];
        assert!(sb.coordinates(&outside).is_none());
    }
}
