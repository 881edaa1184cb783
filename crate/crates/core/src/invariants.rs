//! Orbit invariants: derivations, orbit dimension, radicals and the closed
//! sets used as obstructions.

use serde::Serialize;
use thiserror::Error;

use crate::exact::Field;
use crate::linalg::Matrix;
use crate::superalg::{group_dim, StructureConstants, SuperalgError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InvariantError {
    #[error("the given vectors do not span a subalgebra")]
    NotClosed,
    #[error("closed set {set} needs dim A_0 = 2, found {dim0}")]
    WrongComponent { set: ClosedSet, dim0: usize },
    #[error(transparent)]
    Superalg(#[from] SuperalgError),
}

/// The closed `G_n`-stable sets used as degeneration obstructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClosedSet {
    /// `A_1 A_1 = 0`.
    A,
    /// `A_0` commutative.
    B,
    /// `dim J(A_0) = 1`.
    C,
    /// C and `J(A_0) A_1 = 0`.
    D,
    /// C and `A_1 J(A_0) = 0`.
    E,
}

impl std::fmt::Display for ClosedSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Dimension of the Lie algebra of even derivations: maps `D` with
/// `D(xy) = D(x)y + xD(y)` commuting with `sigma`.
pub fn stabilizer_dim<F: Field>(sc: &StructureConstants<F>) -> usize {
    derivation_system(sc).nullity()
}

/// The linear system in the `n^2` unknowns `d[p][l]` (`D e_l = sum_p d[p][l] e_p`,
/// unknown index `p*n + l`) cutting out graded derivations.
pub fn derivation_system<F: Field>(sc: &StructureConstants<F>) -> Matrix<F> {
    let n = sc.n();
    let var = |p: usize, l: usize| p * n + l;
    let mut rows: Vec<Vec<F>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![F::zero(); n * n];
                for l in 0..n {
                    let c = sc.alpha(l, i, j);
                    if !c.is_zero() {
                        row[var(k, l)] = row[var(k, l)].add(c);
                    }
                }
                for p in 0..n {
                    let c = sc.alpha(k, p, j);
                    if !c.is_zero() {
                        row[var(p, i)] = row[var(p, i)].sub(c);
                    }
                    let c = sc.alpha(k, i, p);
                    if !c.is_zero() {
                        row[var(p, j)] = row[var(p, j)].sub(c);
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let s = sc.grading_matrix();
    for a in 0..n {
        for b in 0..n {
            let mut row = vec![F::zero(); n * n];
            for c in 0..n {
                row[var(a, c)] = row[var(a, c)].add(&s[(c, b)]);
                row[var(c, b)] = row[var(c, b)].sub(&s[(a, c)]);
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Matrix::zeros(0, n * n);
    }
    Matrix::from_rows(rows).expect("rows have equal length")
}

/// `dim G_n - stabilizer_dim`.
pub fn orbit_dim<F: Field>(sc: &StructureConstants<F>) -> usize {
    group_dim(sc.n()) - stabilizer_dim(sc)
}

/// Coordinates of `v` in terms of the linearly independent `basis`, if `v`
/// lies in their span.
fn coordinates_in<F: Field>(basis: &[Vec<F>], v: &[F]) -> Option<Vec<F>> {
    let m = basis.len();
    let n = v.len();
    let aug = Matrix::from_fn(
        n,
        m + 1,
        |r, c| if c < m { basis[c][r].clone() } else { v[r].clone() },
    );
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&m) {
        return None;
    }
    let mut x = vec![F::zero(); m];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, m)].clone();
    }
    Some(x)
}

/// Jacobson radical of the subalgebra spanned by `basis`, computed in
/// characteristic 0 as the kernel of the trace form `(x, y) -> tr L_{xy}`.
/// Returned vectors are coordinates in the full space.
pub fn radical_basis<F: Field>(
    sc: &StructureConstants<F>,
    basis: &[Vec<F>],
) -> Result<Vec<Vec<F>>, InvariantError> {
    let m = basis.len();
    // c[a][b] = coordinates of b_a b_b in the sub-basis
    let mut table: Vec<Vec<Vec<F>>> = Vec::with_capacity(m);
    for x in basis {
        let mut row = Vec::with_capacity(m);
        for y in basis {
            let p = sc.mul_vec(x, y);
            row.push(coordinates_in(basis, &p).ok_or(InvariantError::NotClosed)?);
        }
        table.push(row);
    }
    // tr L_{b_c}: sum over d of the coefficient of b_d in b_c b_d
    let tr_l: Vec<F> = (0..m)
        .map(|c| (0..m).fold(F::zero(), |acc, d| acc.add(&table[c][d][d])))
        .collect();
    // form[a][b] = tr L_{b_a b_b}
    let form = Matrix::from_fn(m, m, |a, b| {
        table[a][b]
            .iter()
            .zip(&tr_l)
            .fold(F::zero(), |acc, (c, t)| acc.add(&c.mul(t)))
    });
    // x = sum x_a b_a is radical iff sum_a x_a form[a][b] = 0 for every b
    let ker = form.transpose().kernel_basis();
    Ok(ker
        .into_iter()
        .map(|x| {
            let mut v = vec![F::zero(); sc.n()];
            for (xa, ba) in x.iter().zip(basis) {
                for (vi, bi) in v.iter_mut().zip(ba) {
                    *vi = vi.add(&xa.mul(bi));
                }
            }
            v
        })
        .collect())
}

/// Square-zero elements of a 2-dimensional unital subalgebra `span(1, u)`:
/// writing `u^2 = p + q u`, `(a + b u)^2 = 0` with `(a, b) != 0` forces
/// `a = -bq/2` and `q^2 + 4p = 0`. Returns a spanning vector when the set is
/// a line, `None` when it is `{0}`.
pub fn square_zero_dim2<F: Field>(
    sc: &StructureConstants<F>,
    basis: &[Vec<F>],
) -> Result<Option<Vec<F>>, InvariantError> {
    let n = sc.n();
    let one: Vec<F> = (0..n)
        .map(|k| if k == 0 { F::one() } else { F::zero() })
        .collect();
    if basis.len() != 2 {
        return Err(InvariantError::NotClosed);
    }
    let u = basis
        .iter()
        .find(|b| b.iter().skip(1).any(|x| !x.is_zero()))
        .ok_or(InvariantError::NotClosed)?
        .clone();
    let pair = [one.clone(), u.clone()];
    let c = coordinates_in(&pair, &sc.mul_vec(&u, &u)).ok_or(InvariantError::NotClosed)?;
    let (p, q) = (&c[0], &c[1]);
    let disc = q.mul(q).add(&F::from_i64(4).mul(p));
    if !disc.is_zero() {
        return Ok(None);
    }
    let half_q = q.div(&F::from_i64(2)).expect("2 is invertible");
    Ok(Some(
        u.iter()
            .zip(&one)
            .map(|(ui, oi)| ui.sub(&half_q.mul(oi)))
            .collect(),
    ))
}

fn products_vanish<F: Field>(sc: &StructureConstants<F>, xs: &[Vec<F>], ys: &[Vec<F>]) -> bool {
    xs.iter()
        .all(|x| ys.iter().all(|y| sc.mul_vec(x, y).iter().all(Field::is_zero)))
}

/// Basis vectors as coordinate columns.
type Vectors<F> = Vec<Vec<F>>;

/// Radical of `A_0` and a basis of `A_1`, when `dim A_0 = 2`.
fn even_radical<F: Field>(
    sc: &StructureConstants<F>,
    set: ClosedSet,
) -> Result<(Vectors<F>, Vectors<F>), InvariantError> {
    let split = sc.grading_split()?;
    if split.i != 2 {
        return Err(InvariantError::WrongComponent { set, dim0: split.i });
    }
    Ok((radical_basis(sc, &split.basis0)?, split.basis1))
}

/// Membership in one of the closed sets.
pub fn closed_set_member<F: Field>(
    sc: &StructureConstants<F>,
    set: ClosedSet,
) -> Result<bool, InvariantError> {
    match set {
        ClosedSet::A => {
            let s = sc.grading_split()?;
            Ok(products_vanish(sc, &s.basis1, &s.basis1))
        }
        ClosedSet::B => {
            let s = sc.grading_split()?;
            Ok(s.basis0
                .iter()
                .all(|x| s.basis0.iter().all(|y| sc.mul_vec(x, y) == sc.mul_vec(y, x))))
        }
        ClosedSet::C => Ok(even_radical(sc, set)?.0.len() == 1),
        ClosedSet::D => {
            let (j, odd) = even_radical(sc, set)?;
            Ok(j.len() == 1 && products_vanish(sc, &j, &odd))
        }
        ClosedSet::E => {
            let (j, odd) = even_radical(sc, set)?;
            Ok(j.len() == 1 && products_vanish(sc, &odd, &j))
        }
    }
}

/// Transport-invariant summary of a superalgebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub n: usize,
    pub dim0: usize,
    pub orbit_dim: usize,
    pub stab_dim: usize,
    pub flag_a: bool,
    pub flag_b: bool,
    /// `dim J(A_0)`, present only when `dim A_0 = 2`.
    pub dim_j: Option<usize>,
    pub flag_d: Option<bool>,
    pub flag_e: Option<bool>,
    /// Dimension of the span of all products of odd vectors.
    pub dim_a1a1: usize,
    /// Dimension of the radical of the whole algebra.
    pub dim_radical: usize,
}

pub fn fingerprint<F: Field>(sc: &StructureConstants<F>) -> Result<Fingerprint, InvariantError> {
    let n = sc.n();
    let split = sc.grading_split()?;
    let stab = stabilizer_dim(sc);
    let (dim_j, flag_d, flag_e) = if split.i == 2 {
        let (j, _) = even_radical(sc, ClosedSet::C)?;
        debug_assert_eq!(
            square_zero_dim2(sc, &split.basis0)
                .ok()
                .map(|v| usize::from(v.is_some())),
            Some(j.len())
        );
        (
            Some(j.len()),
            Some(closed_set_member(sc, ClosedSet::D)?),
            Some(closed_set_member(sc, ClosedSet::E)?),
        )
    } else {
        (None, None, None)
    };
    let odd_products: Vec<Vec<F>> = split
        .basis1
        .iter()
        .flat_map(|x| split.basis1.iter().map(move |y| sc.mul_vec(x, y)))
        .collect();
    let dim_a1a1 = if odd_products.is_empty() {
        0
    } else {
        Matrix::from_rows(odd_products).expect("equal lengths").rank()
    };
    let all: Vec<Vec<F>> = (0..n)
        .map(|k| {
            (0..n)
                .map(|p| if p == k { F::one() } else { F::zero() })
                .collect()
        })
        .collect();
    Ok(Fingerprint {
        n,
        dim0: split.i,
        orbit_dim: group_dim(n) - stab,
        stab_dim: stab,
        flag_a: closed_set_member(sc, ClosedSet::A)?,
        flag_b: closed_set_member(sc, ClosedSet::B)?,
        dim_j,
        flag_d,
        flag_e,
        dim_a1a1,
        dim_radical: radical_basis(sc, &all)?.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Scalar;
    use crate::superalg::cn_structure;

    fn s(v: i64) -> Scalar {
        Scalar::from_i64(v)
    }

    /// k x k with both factors even, and odd part k^2 square-zero: a
    /// 4-dimensional test algebra built by hand. Basis 1, e, x, y with
    /// e idempotent, e x = x, x e = 0, y e = y, e y = 0, all odd products 0.
    fn hand_built() -> StructureConstants {
        let n = 4;
        let mut alpha = vec![s(0); 64];
        let mut set = |k: usize, i: usize, j: usize| alpha[(k * n + i) * n + j] = s(1);
        for x in 0..4 {
            set(x, 0, x);
            set(x, x, 0);
        }
        set(1, 1, 1);
        set(2, 1, 2);
        set(3, 3, 1);
        let gamma = Matrix::diagonal(vec![s(1), s(1), s(-1), s(-1)])
            .entries()
            .to_vec();
        StructureConstants::new(4, alpha, gamma)
            .unwrap()
            .validate()
            .unwrap()
    }

    #[test]
    fn closed_orbit_dims() {
        // C_4(i): every basis change fixing 1 stabilizes when all products vanish
        for i in 1..=4 {
            let c: StructureConstants = cn_structure(4, i).unwrap();
            let expect_stab = (i - 1) * (i - 1) + (4 - i) * (4 - i);
            assert_eq!(stabilizer_dim(&c), expect_stab);
            assert_eq!(orbit_dim(&c), 12 - expect_stab);
        }
    }

    #[test]
    fn hand_built_invariants() {
        let a = hand_built();
        let fp = fingerprint(&a).unwrap();
        assert_eq!(fp.dim0, 2);
        assert_eq!(fp.dim_j, Some(0));
        assert_eq!(fp.flag_d, Some(false));
        assert!(fp.flag_a);
        assert!(fp.flag_b);
        assert_eq!(fp.dim_a1a1, 0);
        assert_eq!(fp.dim_radical, 2);
        assert_eq!(fp.orbit_dim + fp.stab_dim, 12);
    }

    #[test]
    fn square_zero_even_part() {
        // C_4(2): A_0 = span(1, X1) with X1^2 = 0, J = span(X1)
        let c: StructureConstants = cn_structure(4, 2).unwrap();
        let split = c.grading_split().unwrap();
        let j = radical_basis(&c, &split.basis0).unwrap();
        assert_eq!(j.len(), 1);
        assert!(square_zero_dim2(&c, &split.basis0).unwrap().is_some());
        assert!(closed_set_member(&c, ClosedSet::D).unwrap());
        assert!(closed_set_member(&c, ClosedSet::E).unwrap());
    }

    #[test]
    fn wrong_component() {
        let c: StructureConstants = cn_structure(4, 3).unwrap();
        assert!(matches!(
            closed_set_member(&c, ClosedSet::C),
            Err(InvariantError::WrongComponent { dim0: 3, .. })
        ));
    }

    #[test]
    fn not_closed() {
        let a = hand_built();
        // e (x + y) = x leaves span(e, x + y)
        let v = vec![vec![s(0), s(1), s(0), s(0)], vec![s(0), s(0), s(1), s(1)]];
        assert_eq!(radical_basis(&a, &v), Err(InvariantError::NotClosed));
    }
}
