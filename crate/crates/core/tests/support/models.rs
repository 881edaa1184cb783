//! Explicit matrix models of every catalog entry. Each entry is a list of
//! basis matrices (unit first) and the sign of each basis vector under the
//! grading. Structure constants are recomputed here by multiplying matrices
//! and solving for coordinates, independently of the stored catalog.

#![allow(dead_code)]

use superdegen::exact::{Field, Scalar};
use superdegen::linalg::Matrix;
use superdegen::superalg::StructureConstants;

pub type M = Matrix<Scalar>;

pub struct Model {
    pub label: &'static str,
    pub basis: Vec<M>,
    pub signs: [i64; 4],
}

fn s(v: i64) -> Scalar {
    Scalar::from_i64(v)
}

/// Matrix unit `E_ij`, 1-based.
pub fn e(n: usize, i: usize, j: usize) -> M {
    Matrix::from_fn(n, n, |r, c| if (r, c) == (i - 1, j - 1) { s(1) } else { s(0) })
}

pub fn id(n: usize) -> M {
    Matrix::identity(n)
}

fn diag(v: &[i64]) -> M {
    Matrix::diagonal(v.iter().map(|&x| s(x)).collect())
}

/// Block diagonal matrix.
fn blk(blocks: &[M]) -> M {
    let n: usize = blocks.iter().map(Matrix::rows).sum();
    let mut out = Matrix::zeros(n, n);
    let mut at = 0;
    for b in blocks {
        let k = b.rows();
        out = out.add(&Matrix::from_fn(n, n, |r, c| {
            if (at..at + k).contains(&r) && (at..at + k).contains(&c) {
                b[(r - at, c - at)].clone()
            } else {
                s(0)
            }
        }));
        at += k;
    }
    out
}

/// Nilpotent Jordan block: `sum E_{k+1,k}`.
fn jordan(m: usize) -> M {
    Matrix::from_fn(m, m, |r, c| if r == c + 1 { s(1) } else { s(0) })
}

fn one(v: i64) -> M {
    diag(&[v])
}

fn sc(m: &M, v: i64) -> M {
    m.scale(&s(v))
}

fn lin(terms: &[(i64, &M)]) -> M {
    let n = terms[0].1.rows();
    terms
        .iter()
        .fold(Matrix::zeros(n, n), |acc, (c, m)| acc.add(&sc(m, *c)))
}

/// `X = E21 + E43`, `Y = E31 + mu E42`: the model shared by (7), (12), (16)
/// and (18) with `YX = mu XY`.
fn xy(mu: Scalar) -> (M, M) {
    let x = e(4, 2, 1).add(&e(4, 4, 3));
    let y = e(4, 3, 1).add(&e(4, 4, 2).scale(&mu));
    (x, y)
}

const EVEN: [i64; 4] = [1, 1, 1, 1];
const ODD1: [i64; 4] = [1, 1, 1, -1];
const ODD2: [i64; 4] = [1, 1, -1, -1];
const ODD3: [i64; 4] = [1, -1, -1, -1];

pub fn models() -> Vec<Model> {
    let mut out = Vec::new();
    let mut add =
        |label: &'static str, basis: Vec<M>, signs: [i64; 4]| out.push(Model { label, basis, signs });

    // (1) k^4
    add(
        "(1|0)",
        vec![
            diag(&[1, 1, 1, 1]),
            diag(&[1, 0, 0, 0]),
            diag(&[0, 1, 0, 0]),
            diag(&[0, 0, 1, 0]),
        ],
        EVEN,
    );
    add(
        "(1|1)",
        vec![
            diag(&[1, 1, 1, 1]),
            diag(&[1, 0, 0, 0]),
            diag(&[0, 0, 1, 1]),
            diag(&[0, 0, 1, -1]),
        ],
        ODD1,
    );
    add(
        "(1|2)",
        vec![
            diag(&[1, 1, 1, 1]),
            diag(&[1, 1, 0, 0]),
            diag(&[1, -1, 0, 0]),
            diag(&[0, 0, 1, -1]),
        ],
        ODD2,
    );

    // (2) k x k x k[X]/X^2
    let el2 = |a: i64, b: i64, c: i64, x: i64| blk(&[one(a), one(b), lin(&[(c, &id(2)), (x, &jordan(2))])]);
    let b2 = vec![el2(1, 1, 1, 0), el2(1, 0, 0, 0), el2(0, 1, 0, 0), el2(0, 0, 0, 1)];
    add("(2|0)", b2.clone(), EVEN);
    add("(2|1)", b2, ODD1);
    add(
        "(2|2)",
        vec![
            el2(1, 1, 1, 0),
            el2(1, 1, 0, 0),
            el2(0, 0, 0, 1),
            el2(1, -1, 0, 0),
        ],
        ODD1,
    );
    add(
        "(2|3)",
        vec![
            el2(1, 1, 1, 0),
            el2(1, 1, 0, 0),
            el2(1, -1, 0, 0),
            el2(0, 0, 0, 1),
        ],
        ODD2,
    );

    // (3) k[X]/X^2 x k[Y]/Y^2
    let el3 = |a: i64, x: i64, b: i64, y: i64| {
        blk(&[
            lin(&[(a, &id(2)), (x, &jordan(2))]),
            lin(&[(b, &id(2)), (y, &jordan(2))]),
        ])
    };
    let b3 = vec![el3(1, 0, 1, 0), el3(1, 0, 0, 0), el3(0, 1, 0, 0), el3(0, 0, 0, 1)];
    add("(3|0)", b3.clone(), EVEN);
    add("(3|1)", b3.clone(), ODD1);
    add("(3|2)", b3, ODD2);
    add(
        "(3|3)",
        vec![
            el3(1, 0, 1, 0),
            el3(0, 1, 0, 1),
            el3(1, 0, -1, 0),
            el3(0, 1, 0, -1),
        ],
        ODD2,
    );

    // (4) k x k[X]/X^3
    let j3 = jordan(3);
    let el4 =
        |a: i64, b: i64, x: i64, x2: i64| blk(&[one(a), lin(&[(b, &id(3)), (x, &j3), (x2, &j3.mul(&j3))])]);
    add(
        "(4|0)",
        vec![el4(1, 1, 0, 0), el4(1, 0, 0, 0), el4(0, 0, 1, 0), el4(0, 0, 0, 1)],
        EVEN,
    );
    add(
        "(4|1)",
        vec![el4(1, 1, 0, 0), el4(1, 0, 0, 0), el4(0, 0, 0, 1), el4(0, 0, 1, 0)],
        ODD1,
    );

    // (5) k[X]/X^4
    let x = jordan(4);
    let (x2, x3) = (x.mul(&x), x.mul(&x).mul(&x));
    add("(5|0)", vec![id(4), x.clone(), x2.clone(), x3.clone()], EVEN);
    add("(5|1)", vec![id(4), x2, x, x3], ODD2);

    // (6) k x k[X,Y]/(X,Y)^2
    let el6 = |a: i64, b: i64, x: i64, y: i64| {
        blk(&[one(a), lin(&[(b, &id(3)), (x, &e(3, 2, 1)), (y, &e(3, 3, 1))])])
    };
    let b6 = vec![el6(1, 1, 0, 0), el6(1, 0, 0, 0), el6(0, 0, 1, 0), el6(0, 0, 0, 1)];
    add("(6|0)", b6.clone(), EVEN);
    add("(6|1)", b6.clone(), ODD1);
    add("(6|2)", b6, ODD2);

    // (7) k<X,Y>/(X^2, Y^2, YX - XY)
    let (x, y) = xy(s(1));
    let p = x.mul(&y);
    add("(7|0)", vec![id(4), x.clone(), y.clone(), p.clone()], EVEN);
    add("(7|1)", vec![id(4), x.add(&y), p.clone(), x.sub(&y)], ODD1);
    add("(7|2)", vec![id(4), x.clone(), y.clone(), p.clone()], ODD2);
    add("(7|3)", vec![id(4), p, x, y], ODD2);

    // (8) k[X,Y]/(X^3, XY, Y^2)
    let x = e(4, 2, 1).add(&e(4, 3, 2));
    let y = e(4, 4, 1);
    let x2 = x.mul(&x);
    add("(8|0)", vec![id(4), x.clone(), x2.clone(), y.clone()], EVEN);
    add("(8|1)", vec![id(4), x.clone(), x2.clone(), y.clone()], ODD1);
    add("(8|2)", vec![id(4), x2.clone(), y.clone(), x.clone()], ODD1);
    add("(8|3)", vec![id(4), x2, x, y], ODD2);

    // (9) k[X,Y,Z]/(X,Y,Z)^2
    let b9 = vec![id(4), e(4, 2, 1), e(4, 3, 1), e(4, 4, 1)];
    add("(9|0)", b9.clone(), EVEN);
    add("(9|1)", b9.clone(), ODD1);
    add("(9|2)", b9.clone(), ODD2);
    add("(9|3)", b9, ODD3);

    // (10) M_2
    let b10 = vec![id(2), e(2, 1, 1), e(2, 1, 2), e(2, 2, 1)];
    add("(10|0)", b10.clone(), EVEN);
    add("(10|1)", b10, ODD2);

    // (11) inside M_4
    let a = e(4, 1, 1).add(&e(4, 2, 2));
    let b = e(4, 3, 3).add(&e(4, 4, 4));
    let (c, d) = (e(4, 3, 1), e(4, 2, 4));
    let b11 = vec![id(4), a.clone(), d.clone(), c.clone()];
    add("(11|0)", b11.clone(), EVEN);
    add("(11|1)", b11.clone(), ODD1);
    add("(11|2)", b11, ODD2);
    add("(11|3)", vec![id(4), d.add(&c), a.sub(&b), c.sub(&d)], ODD2);

    // (12) YX = -XY
    let (x, y) = xy(s(-1));
    let p = x.mul(&y);
    add("(12|0)", vec![id(4), x.clone(), y.clone(), p.clone()], EVEN);
    add("(12|1)", vec![id(4), x.clone(), y.clone(), p.clone()], ODD2);
    add("(12|2)", vec![id(4), p, x, y], ODD2);

    // (13) k x upper triangular 2 x 2
    let el13 = |a: i64, b: i64, c: i64, dd: i64| {
        blk(&[
            one(a),
            Matrix::from_rows(vec![vec![s(b), s(c)], vec![s(0), s(dd)]]).unwrap(),
        ])
    };
    let b13 = vec![
        el13(1, 1, 0, 1),
        el13(0, 1, 0, 0),
        el13(0, 0, 0, 1),
        el13(0, 0, 1, 0),
    ];
    add("(13|0)", b13.clone(), EVEN);
    add("(13|1)", b13, ODD1);

    // (14), (15), (17) inside M_3
    let a = e(3, 1, 1).add(&e(3, 2, 2));
    add("(14|0)", vec![id(3), a.clone(), e(3, 2, 1), e(3, 3, 1)], EVEN);
    add("(14|1)", vec![id(3), a.clone(), e(3, 3, 1), e(3, 2, 1)], ODD1);
    add("(14|2)", vec![id(3), a.clone(), e(3, 2, 1), e(3, 3, 1)], ODD1);
    add("(14|3)", vec![id(3), a.clone(), e(3, 2, 1), e(3, 3, 1)], ODD2);
    add("(15|0)", vec![id(3), a.clone(), e(3, 1, 2), e(3, 1, 3)], EVEN);
    add("(15|1)", vec![id(3), a.clone(), e(3, 1, 3), e(3, 1, 2)], ODD1);
    add("(15|2)", vec![id(3), a.clone(), e(3, 1, 2), e(3, 1, 3)], ODD1);
    add("(15|3)", vec![id(3), a.clone(), e(3, 1, 2), e(3, 1, 3)], ODD2);

    // (16) YX = 0
    let (x, y) = xy(s(0));
    let p = x.mul(&y);
    add("(16|0)", vec![id(4), x.clone(), y.clone(), p.clone()], EVEN);
    add("(16|1)", vec![id(4), x.clone(), y.clone(), p.clone()], ODD2);
    add("(16|2)", vec![id(4), y.clone(), x.clone(), p.clone()], ODD2);
    add("(16|3)", vec![id(4), p, x, y], ODD2);

    let b17 = vec![id(3), a, e(3, 3, 1), e(3, 3, 2)];
    add("(17|0)", b17.clone(), EVEN);
    add("(17|1)", b17.clone(), ODD1);
    add("(17|2)", b17, ODD2);

    // (18; l) YX = l XY
    let (x, y) = xy(Scalar::lambda());
    let p = x.mul(&y);
    add("(18;λ|0)", vec![id(4), x.clone(), y.clone(), p.clone()], EVEN);
    add("(18;λ|1)", vec![id(4), x.clone(), y.clone(), p.clone()], ODD2);
    add("(18;λ|2)", vec![id(4), p, x, y], ODD2);

    // (19)
    let x = lin(&[(1, &e(4, 2, 1)), (1, &e(4, 4, 2)), (1, &e(4, 4, 3))]);
    let y = e(4, 3, 1).sub(&e(4, 4, 2));
    let p = x.mul(&y);
    add("(19|0)", vec![id(4), x.clone(), y.clone(), p.clone()], EVEN);
    add("(19|1)", vec![id(4), p, x, y], ODD2);

    out
}

/// Coordinates of `m` in `basis`; panics when `m` is outside the span.
pub fn coords(basis: &[M], m: &M) -> Vec<Scalar> {
    let k = basis.len();
    let cells = m.rows() * m.cols();
    let aug = Matrix::from_fn(cells, k + 1, |r, c| {
        if c < k {
            basis[c].entries()[r].clone()
        } else {
            m.entries()[r].clone()
        }
    });
    let (red, pivots) = aug.rref();
    assert!(!pivots.contains(&k), "matrix outside the span");
    assert_eq!(pivots.len(), k, "basis is linearly dependent");
    let mut out = vec![Scalar::zero(); k];
    for (row, &p) in pivots.iter().enumerate() {
        out[p] = red[(row, k)].clone();
    }
    out
}

/// Structure constants of a model in its listed basis.
pub fn constants(model: &Model) -> StructureConstants {
    let n = model.basis.len();
    let mut alpha = vec![Scalar::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let c = coords(&model.basis, &model.basis[i].mul(&model.basis[j]));
            for (k, v) in c.into_iter().enumerate() {
                alpha[(k * n + i) * n + j] = v;
            }
        }
    }
    let gamma = Matrix::diagonal(model.signs.iter().map(|&x| s(x)).collect())
        .entries()
        .to_vec();
    StructureConstants::new(n, alpha, gamma).unwrap()
}

/// Family index of a label: `(14|2)` gives `14`.
pub fn family(label: &str) -> &str {
    label[1..].rsplit_once('|').unwrap().0
}
