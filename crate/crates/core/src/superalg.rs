//! Superalgebras as points of structure-constant space.
//!
//! A point of dimension `n` stores `alpha[(k*n + i)*n + j]`, the coefficient
//! of `e_k` in `e_i e_j`, and `gamma[j*n + i]`, the coefficient of `e_j` in
//! `sigma(e_i)`. Indices are 0-based here; basis vector 0 is the unit.
//! Read as a matrix, `gamma` is the matrix `S` of `sigma` acting on column
//! coordinate vectors.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exact::{Field, Scalar};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SuperalgError {
    #[error("sigma is not an involution")]
    NotAnInvolution,
    #[error("basis change is not in G_n: {0}")]
    NotInGroup(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("structure constants violate the axioms: {0}")]
    Axioms(AxiomReport),
    #[error("malformed constants: {0}")]
    Shape(String),
}

/// Which equations a point must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomMode {
    /// Unit laws, associativity, `sigma(1) = 1`, `sigma` multiplicative and
    /// `sigma^2 = id`: equations 1 to 6.
    UnitalSuperalgebra,
    /// Associativity, `sigma` multiplicative and `sigma^2 = id` only.
    NonUnital,
}

/// Violated index tuples per equation family, keyed 1 to 6. Tuples hold the
/// 0-based free indices of the equation in alphabetical order of the index
/// letters: `(i, j)` for 1, 2 and 6 (`(i, k)`), `(j)` for 4, `(i, j, k, m)`
/// for 3, `(i, j, m)` for 5.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: BTreeMap<u8, Vec<Vec<usize>>>,
}

impl AxiomReport {
    pub fn is_pass(&self) -> bool {
        self.violations.values().all(Vec::is_empty)
    }

    fn record(&mut self, eq: u8, idx: Vec<usize>) {
        self.violations.entry(eq).or_default().push(idx);
    }

    pub fn count(&self) -> usize {
        self.violations.values().map(Vec::len).sum()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pass() {
            return write!(f, "all equations hold");
        }
        let parts: Vec<String> = self
            .violations
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(eq, v)| format!("({eq}) fails at {} index tuple(s), first {:?}", v.len(), v[0]))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Multiplication table of an algebra, same `alpha` layout as
/// [`StructureConstants`].
#[derive(Clone, PartialEq)]
pub struct AlgebraConstants<F = Scalar> {
    n: usize,
    alpha: Vec<F>,
}

impl<F: Field> AlgebraConstants<F> {
    pub fn new(n: usize, alpha: Vec<F>) -> Result<Self, SuperalgError> {
        if alpha.len() != n * n * n {
            return Err(SuperalgError::Shape(format!(
                "alpha has {} entries, want {}",
                alpha.len(),
                n * n * n
            )));
        }
        Ok(AlgebraConstants { n, alpha })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self, k: usize, i: usize, j: usize) -> &F {
        &self.alpha[(k * self.n + i) * self.n + j]
    }

    pub fn alpha_entries(&self) -> &[F] {
        &self.alpha
    }

    pub fn mul_vec(&self, x: &[F], y: &[F]) -> Vec<F> {
        mul_coords(self.n, &self.alpha, x, y)
    }

    /// Transport along the basis change whose columns are the new basis.
    pub fn transport(&self, g: &GroupElement<F>) -> Self {
        AlgebraConstants {
            n: self.n,
            alpha: transport_alpha(self.n, &self.alpha, g),
        }
    }

    /// Associativity and the unit laws.
    pub fn is_unital_associative(&self) -> bool {
        let sc = StructureConstants::from_parts(self.n, self.alpha.clone(), identity_gamma(self.n));
        sc.check_axioms(AxiomMode::UnitalSuperalgebra).is_pass()
    }
}

impl<F: Field> fmt::Debug for AlgebraConstants<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraConstants(n={}, alpha={:?})", self.n, self.alpha)
    }
}

/// A point `(alpha, gamma)`.
///
/// Equality compares entries only; the validation flag is bookkeeping.
#[derive(Clone)]
pub struct StructureConstants<F = Scalar> {
    n: usize,
    alpha: Vec<F>,
    gamma: Vec<F>,
    validated: bool,
}

impl<F: Field> PartialEq for StructureConstants<F> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.alpha == other.alpha && self.gamma == other.gamma
    }
}

impl<F: Field> fmt::Debug for StructureConstants<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "StructureConstants(n={}, alpha={:?}, gamma={:?})",
            self.n, self.alpha, self.gamma
        )
    }
}

fn identity_gamma<F: Field>(n: usize) -> Vec<F> {
    (0..n * n)
        .map(|x| if x / n == x % n { F::one() } else { F::zero() })
        .collect()
}

fn delta<F: Field>(a: usize, b: usize) -> F {
    if a == b {
        F::one()
    } else {
        F::zero()
    }
}

impl<F: Field> StructureConstants<F> {
    /// Unvalidated point; fails only on wrong lengths.
    pub fn new(n: usize, alpha: Vec<F>, gamma: Vec<F>) -> Result<Self, SuperalgError> {
        if alpha.len() != n * n * n || gamma.len() != n * n {
            return Err(SuperalgError::Shape(format!(
                "n = {n} needs {} alpha and {} gamma entries, got {} and {}",
                n * n * n,
                n * n,
                alpha.len(),
                gamma.len()
            )));
        }
        Ok(Self::from_parts(n, alpha, gamma))
    }

    fn from_parts(n: usize, alpha: Vec<F>, gamma: Vec<F>) -> Self {
        StructureConstants {
            n,
            alpha,
            gamma,
            validated: false,
        }
    }

    /// Checks equations 1 to 6 and marks the point validated.
    pub fn validate(mut self) -> Result<Self, SuperalgError> {
        if self.validated {
            return Ok(self);
        }
        let report = self.check_axioms(AxiomMode::UnitalSuperalgebra);
        if !report.is_pass() {
            return Err(SuperalgError::Axioms(report));
        }
        self.validated = true;
        Ok(self)
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficient of `e_k` in `e_i e_j`.
    pub fn alpha(&self, k: usize, i: usize, j: usize) -> &F {
        &self.alpha[(k * self.n + i) * self.n + j]
    }

    /// Coefficient of `e_j` in `sigma(e_i)`.
    pub fn gamma(&self, j: usize, i: usize) -> &F {
        &self.gamma[j * self.n + i]
    }

    pub fn alpha_entries(&self) -> &[F] {
        &self.alpha
    }

    pub fn gamma_entries(&self) -> &[F] {
        &self.gamma
    }

    /// The matrix `S` of `sigma`, `S[j][i] = gamma^j_i`.
    pub fn grading_matrix(&self) -> Matrix<F> {
        Matrix::from_fn(self.n, self.n, |j, i| self.gamma(j, i).clone())
    }

    /// Product of two coordinate vectors.
    pub fn mul_vec(&self, x: &[F], y: &[F]) -> Vec<F> {
        mul_coords(self.n, &self.alpha, x, y)
    }

    /// Image of a coordinate vector under `sigma`.
    pub fn sigma_vec(&self, x: &[F]) -> Vec<F> {
        self.grading_matrix().mul_vec(x)
    }

    pub fn check_axioms(&self, mode: AxiomMode) -> AxiomReport {
        let n = self.n;
        let a = |k, i, j| self.alpha(k, i, j);
        let g = |j, i| self.gamma(j, i);
        let mut rep = AxiomReport::default();
        for eq in [1u8, 2, 3, 4, 5, 6] {
            rep.violations.insert(eq, Vec::new());
        }
        if mode == AxiomMode::UnitalSuperalgebra {
            for i in 0..n {
                for j in 0..n {
                    if *a(j, 0, i) != delta(j, i) {
                        rep.record(1, vec![i, j]);
                    }
                    if *a(j, i, 0) != delta(j, i) {
                        rep.record(2, vec![i, j]);
                    }
                }
            }
            for j in 0..n {
                if *g(j, 0) != delta(j, 0) {
                    rep.record(4, vec![j]);
                }
            }
        } else {
            rep.violations.remove(&1);
            rep.violations.remove(&2);
            rep.violations.remove(&4);
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for m in 0..n {
                        let mut s = F::zero();
                        for l in 0..n {
                            s = s.add(&a(l, i, j).mul(a(m, l, k)));
                            s = s.sub(&a(m, i, l).mul(a(l, j, k)));
                        }
                        if !s.is_zero() {
                            rep.record(3, vec![i, j, k, m]);
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for m in 0..n {
                    let mut s = F::zero();
                    for k in 0..n {
                        s = s.add(&a(k, i, j).mul(g(m, k)));
                    }
                    for k in 0..n {
                        let gki = g(k, i);
                        if gki.is_zero() {
                            continue;
                        }
                        for l in 0..n {
                            s = s.sub(&gki.mul(g(l, j)).mul(a(m, k, l)));
                        }
                    }
                    if !s.is_zero() {
                        rep.record(5, vec![i, j, m]);
                    }
                }
            }
        }
        for i in 0..n {
            for k in 0..n {
                let mut s = F::zero();
                for j in 0..n {
                    s = s.add(&g(j, i).mul(g(k, j)));
                }
                if s != delta(k, i) {
                    rep.record(6, vec![i, k]);
                }
            }
        }
        rep
    }

    /// Splits the space into the `+1` and `-1` eigenspaces of `sigma`.
    pub fn grading_split(&self) -> Result<GradedSplit<F>, SuperalgError> {
        let n = self.n;
        let s = self.grading_matrix();
        let id = Matrix::identity(n);
        if !s.mul(&s).is_identity() {
            return Err(SuperalgError::NotAnInvolution);
        }
        let basis0 = s.sub(&id).kernel_basis();
        let basis1 = s.add(&id).kernel_basis();
        if basis0.len() + basis1.len() != n {
            return Err(SuperalgError::NotAnInvolution);
        }
        let i = basis0.len();
        let trace = (0..n).fold(F::zero(), |acc, k| acc.add(&s[(k, k)]));
        debug_assert_eq!(trace, F::from_i64(2 * i as i64 - n as i64));
        debug_assert_eq!(
            s.determinant(),
            if (n - i).is_multiple_of(2) {
                F::one()
            } else {
                F::one().neg()
            }
        );
        Ok(GradedSplit { basis0, basis1, i })
    }

    /// Transport of structure along `g`: the new basis vector `e'_i` is column
    /// `i` of `g`.
    pub fn transport(&self, g: &GroupElement<F>) -> Result<Self, SuperalgError> {
        if g.matrix().rows() != self.n {
            return Err(SuperalgError::Shape("basis change has the wrong size".into()));
        }
        let out = self.transport_unchecked(g);
        if self.validated {
            out.validate()
        } else {
            Ok(out)
        }
    }

    /// Transport without re-validating the result.
    pub fn transport_unchecked(&self, g: &GroupElement<F>) -> Self {
        let alpha = transport_alpha(self.n, &self.alpha, g);
        let gamma_m = g.inverse().mul(&self.grading_matrix()).mul(g.matrix());
        let gamma = gamma_m.entries().to_vec();
        Self::from_parts(self.n, alpha, gamma)
    }

    /// The forgetful map to the underlying algebra.
    pub fn forget_u(&self) -> AlgebraConstants<F> {
        AlgebraConstants {
            n: self.n,
            alpha: self.alpha.clone(),
        }
    }

    /// The algebra with the trivial grading.
    pub fn embed_i(alg: &AlgebraConstants<F>) -> Self {
        Self::from_parts(alg.n, alg.alpha.clone(), identity_gamma(alg.n))
    }

    /// Maps every entry into another field. The validation flag is kept: field
    /// embeddings preserve the equations.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> StructureConstants<G> {
        StructureConstants {
            n: self.n,
            alpha: self.alpha.iter().map(&f).collect(),
            gamma: self.gamma.iter().map(&f).collect(),
            validated: self.validated,
        }
    }

    /// Maps every entry through a partial function (for example a
    /// specialization); the result is not validated.
    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<StructureConstants<G>, E> {
        Ok(StructureConstants {
            n: self.n,
            alpha: self.alpha.iter().map(&f).collect::<Result<_, _>>()?,
            gamma: self.gamma.iter().map(&f).collect::<Result<_, _>>()?,
            validated: false,
        })
    }

    /// Every entry as `(name, value)`, names 1-based: `alpha^k_ij`,
    /// `gamma^j_i`. Used to report the first offending entry.
    pub fn named_entries(&self) -> Vec<(String, &F)> {
        let n = self.n;
        let mut out = Vec::with_capacity(n * n * n + n * n);
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    out.push((format!("alpha^{}_{}{}", k + 1, i + 1, j + 1), self.alpha(k, i, j)));
                }
            }
        }
        for j in 0..n {
            for i in 0..n {
                out.push((format!("gamma^{}_{}", j + 1, i + 1), self.gamma(j, i)));
            }
        }
        out
    }
}

fn mul_coords<F: Field>(n: usize, alpha: &[F], x: &[F], y: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() {
                continue;
            }
            let c = x[i].mul(&y[j]);
            for (k, o) in out.iter_mut().enumerate() {
                let a = &alpha[(k * n + i) * n + j];
                if !a.is_zero() {
                    *o = o.add(&c.mul(a));
                }
            }
        }
    }
    out
}

fn transport_alpha<F: Field>(n: usize, alpha: &[F], g: &GroupElement<F>) -> Vec<F> {
    let cols: Vec<Vec<F>> = (0..n).map(|i| g.matrix().column(i)).collect();
    let nu = g.inverse();
    let mut out = vec![F::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let prod = nu.mul_vec(&mul_coords(n, alpha, &cols[i], &cols[j]));
            for (k, v) in prod.into_iter().enumerate() {
                out[(k * n + i) * n + j] = v;
            }
        }
    }
    out
}

/// The `+1` and `-1` eigenspaces of `sigma`, as coordinate vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedSplit<F = Scalar> {
    pub basis0: Vec<Vec<F>>,
    pub basis1: Vec<Vec<F>>,
    /// `dim A_0`.
    pub i: usize,
}

/// An invertible basis change fixing the unit: first column `(1, 0, ..., 0)`.
#[derive(Clone, PartialEq)]
pub struct GroupElement<F = Scalar> {
    m: Matrix<F>,
    inv: Matrix<F>,
}

impl<F: Field> GroupElement<F> {
    pub fn new(m: Matrix<F>) -> Result<Self, SuperalgError> {
        if !m.is_square() || m.rows() == 0 {
            return Err(SuperalgError::NotInGroup("matrix is not square".into()));
        }
        let first_col_ok = (0..m.rows()).all(|r| m[(r, 0)] == delta(r, 0));
        if !first_col_ok {
            return Err(SuperalgError::NotInGroup(
                "first column is not (1, 0, ..., 0)".into(),
            ));
        }
        let inv = m
            .inverse()
            .map_err(|_| SuperalgError::NotInGroup("matrix is singular".into()))?;
        Ok(GroupElement { m, inv })
    }

    pub fn identity(n: usize) -> Self {
        GroupElement {
            m: Matrix::identity(n),
            inv: Matrix::identity(n),
        }
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.m
    }

    pub fn inverse(&self) -> &Matrix<F> {
        &self.inv
    }

    /// `self` followed by `other`: the basis `other` is written in the basis
    /// `self`, so the composite matrix is `self * other`.
    pub fn compose(&self, other: &Self) -> Self {
        GroupElement {
            m: self.m.mul(&other.m),
            inv: other.inv.mul(&self.inv),
        }
    }
}

impl<F: Field> fmt::Debug for GroupElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement({:?})", self.m)
    }
}

/// Dimension of `G_n`.
pub fn group_dim(n: usize) -> usize {
    n * n - n
}

/// `C_n(i)`: the square-zero extension `k[X_1..X_{n-1}]/(X_1..X_{n-1})^2`
/// with `1, X_1, ..., X_{i-1}` even and the rest odd.
pub fn cn_structure<F: Field>(n: usize, i: usize) -> Result<StructureConstants<F>, SuperalgError> {
    if n == 0 || i == 0 || i > n {
        return Err(SuperalgError::OutOfRange(format!("C_{n}({i}) needs 1 <= i <= n")));
    }
    let mut alpha = vec![F::zero(); n * n * n];
    for x in 0..n {
        alpha[(x * n) * n + x] = F::one(); // 1 * e_x
        alpha[(x * n + x) * n] = F::one(); // e_x * 1
    }
    let gamma = (0..n * n)
        .map(|p| {
            let (j, c) = (p / n, p % n);
            match (j == c, c < i) {
                (true, true) => F::one(),
                (true, false) => F::one().neg(),
                _ => F::zero(),
            }
        })
        .collect();
    StructureConstants::new(n, alpha, gamma)?.validate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Cyclo8;

    fn s(v: i64) -> Scalar {
        Scalar::from_i64(v)
    }

    /// 2x2 matrices with basis 1, E11, E12, E21 and the checkerboard grading,
    /// constants recomputed from matrix products.
    fn m2() -> StructureConstants {
        // coordinates of a 2x2 matrix [[a, b], [c, d]] in 1, E11, E12, E21
        let coords = |m: [[i64; 2]; 2]| vec![s(m[1][1]), s(m[0][0] - m[1][1]), s(m[0][1]), s(m[1][0])];
        let basis = [
            [[1, 0], [0, 1]],
            [[1, 0], [0, 0]],
            [[0, 1], [0, 0]],
            [[0, 0], [1, 0]],
        ];
        let mm = |a: [[i64; 2]; 2], b: [[i64; 2]; 2]| {
            let mut c = [[0; 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
                }
            }
            c
        };
        let mut alpha = vec![s(0); 64];
        for i in 0..4 {
            for j in 0..4 {
                for (k, v) in coords(mm(basis[i], basis[j])).into_iter().enumerate() {
                    alpha[(k * 4 + i) * 4 + j] = v;
                }
            }
        }
        let gamma = Matrix::diagonal(vec![s(1), s(1), s(-1), s(-1)])
            .entries()
            .to_vec();
        StructureConstants::new(4, alpha, gamma).unwrap()
    }

    #[test]
    fn matrix_algebra_passes() {
        let a = m2();
        assert!(a.check_axioms(AxiomMode::UnitalSuperalgebra).is_pass());
        assert_eq!(a.validate().unwrap().grading_split().unwrap().i, 2);
    }

    #[test]
    fn perturbation_breaks_associativity() {
        let c: StructureConstants = cn_structure(4, 4).unwrap();
        let mut alpha = c.alpha_entries().to_vec();
        // alpha^1_22 = 1, i.e. e_2 e_2 = 1; index (k*4 + i)*4 + j with k = 0
        alpha[4 + 1] = s(1);
        let bad = StructureConstants::new(4, alpha, c.gamma_entries().to_vec()).unwrap();
        let rep = bad.check_axioms(AxiomMode::UnitalSuperalgebra);
        assert!(!rep.violations[&3].is_empty());
        assert!(rep.violations[&1].is_empty());
    }

    #[test]
    fn one_dimensional_field() {
        let k = StructureConstants::new(1, vec![s(1)], vec![s(1)]).unwrap();
        assert!(k.check_axioms(AxiomMode::UnitalSuperalgebra).is_pass());
    }

    #[test]
    fn non_unital_mode_skips_unit_laws() {
        let zero = StructureConstants::new(2, vec![s(0); 8], vec![s(1), s(0), s(0), s(1)]).unwrap();
        assert!(zero.check_axioms(AxiomMode::NonUnital).is_pass());
        assert!(!zero.check_axioms(AxiomMode::UnitalSuperalgebra).is_pass());
    }

    #[test]
    fn transport_identity_and_scaling() {
        let c: StructureConstants = cn_structure(4, 2).unwrap();
        assert_eq!(c.transport(&GroupElement::identity(4)).unwrap(), c);
        let g = GroupElement::new(Matrix::diagonal(vec![s(1), s(7), s(7), s(7)])).unwrap();
        assert_eq!(c.transport(&g).unwrap(), c);
        assert_eq!(c.grading_split().unwrap().i, 2);
    }

    #[test]
    fn transport_swap_of_odd_vectors() {
        let a = m2().validate().unwrap();
        let mut p = Matrix::<Scalar>::zeros(4, 4);
        for (r, c) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
            p[(r, c)] = s(1);
        }
        let b = a.transport(&GroupElement::new(p).unwrap()).unwrap();
        let perm = [0, 1, 3, 2];
        for k in 0..4 {
            for i in 0..4 {
                for j in 0..4 {
                    assert_eq!(b.alpha(k, i, j), a.alpha(perm[k], perm[i], perm[j]));
                }
            }
        }
    }

    #[test]
    fn group_membership() {
        let mut m = Matrix::<Scalar>::identity(3);
        m[(1, 0)] = s(1);
        assert!(GroupElement::new(m).is_err());
        assert!(GroupElement::new(Matrix::diagonal(vec![s(1), s(0), s(1)])).is_err());
    }

    #[test]
    fn forget_and_embed() {
        let a = m2().validate().unwrap();
        let u = a.forget_u();
        let ia = StructureConstants::embed_i(&u).validate().unwrap();
        assert_eq!(ia.forget_u(), u);
        assert_eq!(ia.grading_split().unwrap().i, 4);
        assert!(ia.grading_matrix().determinant().is_one());
        let c4: StructureConstants = cn_structure(4, 4).unwrap();
        assert_eq!(StructureConstants::embed_i(&c4.forget_u()), c4);
    }

    #[test]
    fn sqrt2_basis_change() {
        let c = m2().validate().unwrap();
        let r2 = Scalar::Const(Cyclo8::sqrt2());
        let g = GroupElement::new(Matrix::diagonal(vec![s(1), s(1), r2.clone(), r2])).unwrap();
        let b = c.transport(&g).unwrap();
        // E12 E21 = E11 has alpha^2_34 = 1 before and 2 after scaling both by sqrt 2
        assert_eq!(b.alpha(1, 2, 3), &s(2));
    }

    #[test]
    fn cn_range() {
        assert!(cn_structure::<Scalar>(4, 0).is_err());
        assert!(cn_structure::<Scalar>(4, 5).is_err());
        for i in 1..=4 {
            let c: StructureConstants = cn_structure(4, i).unwrap();
            assert_eq!(c.grading_split().unwrap().i, i);
        }
    }
}
