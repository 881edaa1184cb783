//! Checking certificates against the catalog.

use std::collections::BTreeSet;

use serde::Serialize;

use super::cert::{Cert, Expected, Method, ObstructionCert, SpecializationCert};
use super::DegenError;
use crate::catalog::{Catalog, CatalogEntry, FORBIDDEN_LAMBDA};
use crate::exact::{display_t, t, Field, Order, Poly, Scalar, TRational};
use crate::invariants::{closed_set_member, orbit_dim, ClosedSet, InvariantError};
use crate::linalg::Matrix;
use crate::superalg::{GroupElement, StructureConstants};

/// Where a curve certificate stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    /// `det g(t)` vanishes identically.
    CurveNotGeneric,
    /// `g(t)` does not fix the unit.
    NotInGroup,
    /// The parameter substitution is forbidden or has a pole.
    Substitution,
    /// A transported constant has a pole at `t = 0`.
    Pole,
    /// The limit differs from the target.
    LimitMismatch,
    /// The obstruction's predicate does not separate the pair.
    Obstruction,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Verified {
        detail: String,
    },
    NotVerified {
        stage: Stage,
        detail: String,
    },
    Undetermined {
        detail: String,
    },
    Unsupported {
        detail: String,
    },
    /// The certificate could not be checked at all (unknown label, wrong
    /// component, malformed data).
    Error {
        detail: String,
    },
}

impl Verdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verdict::Verified { .. })
    }

    /// Short status word used in reports.
    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Verified { .. } => "verified",
            Verdict::NotVerified { .. } => "not_verified",
            Verdict::Undetermined { .. } => "undetermined",
            Verdict::Unsupported { .. } => "unsupported",
            Verdict::Error { .. } => "error",
        }
    }

    pub fn detail(&self) -> &str {
        match self {
            Verdict::Verified { detail }
            | Verdict::NotVerified { detail, .. }
            | Verdict::Undetermined { detail }
            | Verdict::Unsupported { detail }
            | Verdict::Error { detail } => detail,
        }
    }

    fn failed(stage: Stage, detail: impl Into<String>) -> Self {
        Verdict::NotVerified {
            stage,
            detail: detail.into(),
        }
    }
}

/// A certificate together with its verdict.
#[derive(Debug, Clone)]
pub struct Checked {
    pub cert: Cert,
    pub verdict: Verdict,
}

impl Checked {
    /// False when the file promised a verification that did not happen, or
    /// when the certificate could not be checked.
    pub fn meets_expectation(&self) -> bool {
        match (&self.verdict, self.cert.expected()) {
            (Verdict::Error { .. }, _) => false,
            (v, Expected::Verified) => v.is_verified(),
            _ => true,
        }
    }
}

/// Algebra-level non-degeneration facts, keyed by underlying family index
/// (the part of a label before `|`).
#[derive(Debug, Clone, Default)]
pub struct UnderlyingTable {
    pairs: BTreeSet<(String, String)>,
}

impl UnderlyingTable {
    pub fn from_pairs<I, S>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (S, S)>,
        S: Into<String>,
    {
        UnderlyingTable {
            pairs: pairs.into_iter().map(|(a, b)| (a.into(), b.into())).collect(),
        }
    }

    pub fn asserts(&self, source_family: &str, target_family: &str) -> bool {
        self.pairs
            .contains(&(source_family.to_string(), target_family.to_string()))
    }
}

fn family_of(e: &CatalogEntry) -> &str {
    e.label_parts().map_or(e.label.as_str(), |(f, _)| f)
}

/// Substitutes `l := lambda` in the coefficients of a rational function of `t`.
fn substitute_in_t(x: &TRational, lambda: &TRational) -> Option<TRational> {
    let part = |p: &Poly<Scalar>| -> Option<TRational> {
        let mut acc = TRational::zero();
        let mut tk = TRational::one();
        for c in p.coeffs() {
            acc = acc.add(&c.substitute_lambda_t(lambda)?.mul(&tk));
            tk = tk.mul(&t());
        }
        Some(acc)
    };
    part(x.numer())?.div(&part(x.denom())?)
}

/// Transported constants along a curve certificate before taking the limit.
pub struct CurvePoint {
    pub curve: GroupElement<TRational>,
    pub constants: StructureConstants<TRational>,
}

/// Stage (i): composes the curve and transports the source along it, with
/// the family parameter substituted for a family limit.
pub fn transport_along(
    catalog: &Catalog,
    cert: &SpecializationCert,
) -> Result<Result<CurvePoint, Verdict>, DegenError> {
    let src = catalog.entry(&cert.source)?;
    let n = src.n;
    if cert.pre_change.matrix().rows() != n {
        return Err(DegenError::Malformed {
            id: cert.id.clone(),
            reason: format!("basis change is not {n} x {n}"),
        });
    }
    let lift = |s: &Scalar| TRational::constant(s.clone());
    let (constants, pre, curve) = match &cert.lambda {
        None => (
            src.constants.map(lift),
            cert.pre_change.matrix().map(lift),
            cert.curve.clone(),
        ),
        Some(lam) => {
            if !src.parametric {
                return Err(DegenError::Malformed {
                    id: cert.id.clone(),
                    reason: format!("{} is not a family", src.label),
                });
            }
            let bad_coeff = lam
                .numer()
                .coeffs()
                .iter()
                .chain(lam.denom().coeffs())
                .any(Scalar::depends_on_lambda);
            if bad_coeff {
                return Err(DegenError::Malformed {
                    id: cert.id.clone(),
                    reason: "lambda(t) must not involve l".into(),
                });
            }
            if let Some(c) = lam.as_constant() {
                if FORBIDDEN_LAMBDA.iter().any(|&f| c == Scalar::from_i64(f)) {
                    return Ok(Err(Verdict::failed(
                        Stage::Substitution,
                        format!("lambda(t) = {c} is excluded from the family"),
                    )));
                }
            }
            let sub = |s: &Scalar| s.substitute_lambda_t(lam).ok_or(());
            let Ok(constants) = src.constants.try_map(sub) else {
                return Ok(Err(Verdict::failed(
                    Stage::Substitution,
                    format!("the family constants have a pole at l = {}", display_t(lam)),
                )));
            };
            let Ok(pre) = cert.pre_change.matrix().try_map(sub) else {
                return Ok(Err(Verdict::failed(Stage::Substitution, "pre_change has a pole")));
            };
            let Ok(curve) = cert.curve.try_map(|x| substitute_in_t(x, lam).ok_or(())) else {
                return Ok(Err(Verdict::failed(Stage::Substitution, "curve has a pole")));
            };
            (constants, pre, curve)
        }
    };
    let g = pre.mul(&curve);
    if g.determinant().is_zero() {
        return Ok(Err(Verdict::failed(
            Stage::CurveNotGeneric,
            "det g(t) is identically zero",
        )));
    }
    let g = match GroupElement::new(g) {
        Ok(g) => g,
        Err(e) => return Ok(Err(Verdict::failed(Stage::NotInGroup, e.to_string()))),
    };
    let constants = constants.transport_unchecked(&g);
    Ok(Ok(CurvePoint { curve: g, constants }))
}

/// Stages (ii) and (iii) of a curve: the limit at `t = 0` after the
/// optional post change, or the failing verdict.
pub fn specialization_limit(
    catalog: &Catalog,
    cert: &SpecializationCert,
) -> Result<Result<StructureConstants, Verdict>, DegenError> {
    let point = match transport_along(catalog, cert)? {
        Ok(p) => p,
        Err(v) => return Ok(Err(v)),
    };
    for (name, x) in point.constants.named_entries() {
        if let Order::Finite(k) = x.order_at_zero() {
            if k < 0 {
                return Ok(Err(Verdict::failed(
                    Stage::Pole,
                    format!("{name} = {} has a pole of order {} at t = 0", display_t(x), -k),
                )));
            }
        }
    }
    let limit = point
        .constants
        .try_map(|x| x.eval_at_zero().ok_or(()))
        .expect("regular entries evaluate");
    Ok(Ok(match &cert.post_change {
        Some(q) => limit.transport_unchecked(q),
        None => limit,
    }))
}

/// Checks a specialization or family-limit certificate.
pub fn verify_specialization(catalog: &Catalog, cert: &SpecializationCert) -> Result<Verdict, DegenError> {
    let target = catalog.entry(&cert.target)?;
    let limit = match specialization_limit(catalog, cert)? {
        Ok(l) => l,
        Err(v) => return Ok(v),
    };
    if limit.n() != target.n {
        return Err(DegenError::Malformed {
            id: cert.id.clone(),
            reason: "source and target have different dimensions".into(),
        });
    }
    let got = limit.named_entries();
    let want = target.constants.named_entries();
    for ((name, g), (_, w)) in got.iter().zip(&want) {
        if g != w {
            return Ok(Verdict::failed(
                Stage::LimitMismatch,
                format!("{name}: limit {g}, target {w}"),
            ));
        }
    }
    let how = if cert.lambda.is_some() {
        "family limit equals target"
    } else {
        "limit equals target"
    };
    Ok(Verdict::Verified { detail: how.into() })
}

/// Orbit dimension, with one extra dimension for a family.
pub fn effective_orbit_dim(e: &CatalogEntry) -> usize {
    orbit_dim(&e.constants) + usize::from(e.parametric)
}

fn closed_set_of(m: Method) -> Option<ClosedSet> {
    Some(match m {
        Method::A => ClosedSet::A,
        Method::B => ClosedSet::B,
        Method::C => ClosedSet::C,
        Method::D => ClosedSet::D,
        Method::E => ClosedSet::E,
        _ => return None,
    })
}

/// Whether `method` separates `source` from `target`, i.e. proves that the
/// source does not degenerate to the target. `None` for `UNDERLYING`.
pub fn separates(
    source: &CatalogEntry,
    target: &CatalogEntry,
    method: Method,
) -> Result<Option<(bool, String)>, InvariantError> {
    Ok(Some(match method {
        Method::Dim0 => (
            source.component != target.component,
            format!("dim A_0: {} vs {}", source.component, target.component),
        ),
        Method::Od => {
            let (a, b) = (effective_orbit_dim(source), effective_orbit_dim(target));
            let fam = if source.parametric {
                " (+ family parameter)"
            } else {
                ""
            };
            (
                source.label != target.label && a <= b,
                format!("orbit dims {a}{fam} vs {b}"),
            )
        }
        Method::Underlying => return Ok(None),
        m => {
            let set = closed_set_of(m).expect("closed-set method");
            let a = closed_set_member(&source.constants, set)?;
            let b = closed_set_member(&target.constants, set)?;
            (a && !b, format!("in {set}: source {a}, target {b}"))
        }
    }))
}

/// Checks a non-degeneration certificate.
pub fn verify_obstruction(
    catalog: &Catalog,
    cert: &ObstructionCert,
    underlying: Option<&UnderlyingTable>,
) -> Result<Verdict, DegenError> {
    let s = catalog.entry(&cert.source)?;
    let t = catalog.entry(&cert.target)?;
    if cert.method != Method::Dim0 && s.component != t.component {
        return Err(DegenError::WrongComponent {
            id: cert.id.clone(),
            detail: format!(
                "{} has dim A_0 = {} and {} has {}; use DIM0",
                s.label, s.component, t.label, t.component
            ),
        });
    }
    if cert.method == Method::Underlying {
        let Some(table) = underlying else {
            return Ok(Verdict::Unsupported {
                detail: "no algebra-level degeneration table supplied".into(),
            });
        };
        let (a, b) = (family_of(s), family_of(t));
        return Ok(if table.asserts(a, b) {
            Verdict::Verified {
                detail: format!("table asserts ({a}) does not degenerate to ({b})"),
            }
        } else {
            Verdict::failed(Stage::Obstruction, format!("table has no entry ({a}) -> ({b})"))
        });
    }
    let (ok, detail) = separates(s, t, cert.method)
        .map_err(|e| DegenError::WrongComponent {
            id: cert.id.clone(),
            detail: e.to_string(),
        })?
        .expect("not UNDERLYING");
    Ok(if ok {
        Verdict::Verified { detail }
    } else {
        Verdict::failed(Stage::Obstruction, detail)
    })
}

/// Label of the closed orbit in the component with `dim A_0 = i`.
pub fn closed_orbit_label(n: usize, component: usize) -> String {
    format!("(9|{})", n - component)
}

/// The universal degeneration `1 -> 1, e_j -> t e_j` to the closed orbit of
/// the entry's component.
pub fn scaling_cert(catalog: &Catalog, label: &str) -> Result<SpecializationCert, DegenError> {
    let e = catalog.entry(label)?;
    let curve = Matrix::diagonal(
        (0..e.n)
            .map(|k| if k == 0 { TRational::one() } else { t() })
            .collect(),
    );
    Ok(SpecializationCert {
        id: format!("scale{}", e.label),
        source: e.label.clone(),
        target: closed_orbit_label(e.n, e.component),
        lambda: None,
        pre_change: GroupElement::identity(e.n),
        curve,
        post_change: None,
        expected: Expected::Verified,
    })
}

/// Checks one certificate of any kind; errors become `Verdict::Error`.
pub fn verify(catalog: &Catalog, cert: &Cert, underlying: Option<&UnderlyingTable>) -> Verdict {
    let r = match cert {
        Cert::Specialization(c) => verify_specialization(catalog, c),
        Cert::Obstruction(c) => verify_obstruction(catalog, c, underlying),
        Cert::Undetermined(u) => catalog
            .entry(&u.source)
            .and(catalog.entry(&u.target))
            .map(|_| Verdict::Undetermined {
                detail: "registered as open".into(),
            })
            .map_err(DegenError::from),
    };
    r.unwrap_or_else(|e| Verdict::Error {
        detail: e.to_string(),
    })
}

/// Checks certificates on all available cores; results keep input order.
pub fn verify_all(catalog: &Catalog, certs: Vec<Cert>, underlying: Option<&UnderlyingTable>) -> Vec<Checked> {
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(certs.len().max(1));
    let mut verdicts: Vec<Option<Verdict>> = vec![None; certs.len()];
    std::thread::scope(|s| {
        let chunk = certs.len().div_ceil(workers).max(1);
        for (cs, vs) in certs.chunks(chunk).zip(verdicts.chunks_mut(chunk)) {
            s.spawn(move || {
                for (c, v) in cs.iter().zip(vs.iter_mut()) {
                    *v = Some(verify(catalog, c, underlying));
                }
            });
        }
    });
    certs
        .into_iter()
        .zip(verdicts)
        .map(|(cert, v)| Checked {
            cert,
            verdict: v.expect("every certificate checked"),
        })
        .collect()
}
