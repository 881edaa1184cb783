//! Dense exact linear algebra over any [`Field`].

use std::fmt;

use thiserror::Error;

use crate::exact::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Shape("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn diagonal(d: Vec<F>) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in d.into_iter().enumerate() {
            m[(i, i)] = v;
        }
        m
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

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<Matrix<G>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    /// Reduced row echelon form and the pivot columns. Pivots are the first
    /// nonzero entry in column order.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].mul(&inv);
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let d = f.mul(&m[(r, j)]);
                    m[(i, j)] = m[(i, j)].sub(&d);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space `{x : Mx = 0}`, one vector per free column,
    /// with a 1 in that column and 0 in the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis: Vec<Vec<F>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = r[(row, f)].neg();
                }
                v
            })
            .collect();
        debug_assert_eq!(pivots.len() + basis.len(), self.cols);
        basis
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.neg();
            }
            let piv = m[(c, c)].clone();
            det = det.mul(&piv);
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].mul(&inv);
                for j in c..n {
                    let d = f.mul(&m[(c, j)]);
                    m[(i, j)] = m[(i, j)].sub(&d);
                }
            }
        }
        det
    }

    /// Division-free determinant by cofactor expansion. Used where the entries
    /// live in a ring-like subset (polynomials) that elimination would leave.
    pub fn determinant_expansion(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let idx: Vec<usize> = (0..self.cols).collect();
        self.minor_det(0, &idx)
    }

    fn minor_det(&self, row: usize, cols: &[usize]) -> F {
        if cols.is_empty() {
            return F::one();
        }
        let mut acc = F::zero();
        for (k, &c) in cols.iter().enumerate() {
            let a = &self[(row, c)];
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a.mul(&self.minor_det(row + 1, &rest));
            acc = if k % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(LinalgError::Singular);
        }
        Ok(Self::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{t, Cyclo8, Scalar, TRational};
    use proptest::prelude::*;

    fn q(v: i64) -> Cyclo8 {
        Cyclo8::from_i64(v)
    }

    fn m(rows: &[&[i64]]) -> Matrix<Cyclo8> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::<Cyclo8>::identity(4).kernel_basis().is_empty());
        assert_eq!(Matrix::<Cyclo8>::zeros(2, 2).kernel_basis().len(), 2);
        let k = m(&[&[1, 1], &[1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![q(-1), q(1)]]);
    }

    #[test]
    fn inverse_examples() {
        let id = Matrix::<Cyclo8>::identity(3);
        assert_eq!(id.inverse().unwrap(), id);
        let one = TRational::one();
        let d = Matrix::diagonal(vec![one.clone(), t(), t()]);
        let inv_t = t().inv().unwrap();
        assert_eq!(
            d.inverse().unwrap(),
            Matrix::diagonal(vec![one, inv_t.clone(), inv_t])
        );
        let sing = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(sing.inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn determinant_examples() {
        let one = TRational::one();
        let d = Matrix::diagonal(vec![one.clone(), one.clone(), one, t()]);
        assert_eq!(d.determinant(), t());
        assert_eq!(d.determinant_expansion(), t());
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), q(-1));
    }

    #[test]
    fn symbolic_entries() {
        let l = Scalar::lambda();
        let a = Matrix::from_rows(vec![
            vec![Scalar::one(), l.clone()],
            vec![l.clone(), Scalar::one()],
        ])
        .unwrap();
        let det = a.determinant();
        assert_eq!(det, Scalar::one().sub(&l.mul(&l)));
        assert!(a.mul(&a.inverse().unwrap()).is_identity());
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Matrix<Cyclo8>> {
        prop::collection::vec(prop::array::uniform4(-3i64..=3), n * n).prop_map(move |v| {
            let mut it = v
                .into_iter()
                .map(|a| Cyclo8::from_ints([a[0], a[1], a[2] % 2, 0]));
            Matrix::from_fn(n, n, |_, _| it.next().unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn inverse_roundtrip(a in small_matrix(3)) {
            match a.inverse() {
                Ok(ai) => {
                    prop_assert!(a.mul(&ai).is_identity());
                    prop_assert_eq!(ai.inverse().unwrap(), a.clone());
                    prop_assert!(a.determinant().mul(&ai.determinant()).is_one());
                }
                Err(_) => prop_assert!(a.determinant().is_zero()),
            }
        }

        #[test]
        fn kernel_vectors_vanish(a in small_matrix(3), drop in 0usize..3) {
            // force a dependency some of the time
            let mut b = a.clone();
            for j in 0..3 {
                b[(drop, j)] = a[((drop + 1) % 3, j)].clone();
            }
            let ker = b.kernel_basis();
            prop_assert_eq!(ker.len() + b.rank(), 3);
            for v in &ker {
                prop_assert!(b.mul_vec(v).iter().all(Field::is_zero));
            }
        }

        #[test]
        fn rank_is_permutation_invariant(a in small_matrix(4), s in 0usize..4) {
            let p = Matrix::from_fn(4, 4, |i, j| if (i + s) % 4 == j { q(1) } else { q(0) });
            prop_assert_eq!(p.mul(&a).rank(), a.rank());
            prop_assert_eq!(a.mul(&p).rank(), a.rank());
        }

        #[test]
        fn expansion_matches_elimination(a in small_matrix(3)) {
            prop_assert_eq!(a.determinant_expansion(), a.determinant());
        }
    }
}
