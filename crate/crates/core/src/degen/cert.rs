//! Certificate types and their JSON form.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::DegenError;
use crate::catalog::normalize_label;
use crate::exact::{parse_rational, parse_scalar, parse_tpoly, Field, Scalar, TRational};
use crate::linalg::Matrix;
use crate::superalg::GroupElement;

/// What a certificate file claims about one certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Verified,
    NotVerified,
    Undetermined,
    Unsupported,
}

/// How a non-degeneration is argued.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Method {
    /// Orbit dimension must drop strictly.
    #[serde(rename = "OD")]
    Od,
    A,
    B,
    C,
    D,
    E,
    /// Different `dim A_0`.
    #[serde(rename = "DIM0")]
    Dim0,
    /// The underlying algebras do not degenerate.
    Underlying,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Od => "OD",
            Method::A => "A",
            Method::B => "B",
            Method::C => "C",
            Method::D => "D",
            Method::E => "E",
            Method::Dim0 => "DIM0",
            Method::Underlying => "UNDERLYING",
        };
        f.write_str(s)
    }
}

type Lits = Vec<Vec<String>>;

/// One certificate as written in a file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RawCert {
    Specialization {
        id: String,
        source: String,
        target: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pre_change: Option<Lits>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        curve: Option<Lits>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        post_change: Option<Lits>,
        #[serde(default = "verified")]
        expected: Expected,
    },
    FamilyLimit {
        id: String,
        source: String,
        target: String,
        lambda: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pre_change: Option<Lits>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        curve: Option<Lits>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        post_change: Option<Lits>,
        #[serde(default = "verified")]
        expected: Expected,
    },
    Obstruction {
        id: String,
        source: String,
        target: String,
        method: Method,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        reference: Option<String>,
        #[serde(default = "verified")]
        expected: Expected,
    },
    Undetermined {
        id: String,
        source: String,
        target: String,
        #[serde(default = "undetermined")]
        expected: Expected,
    },
}

fn verified() -> Expected {
    Expected::Verified
}

fn undetermined() -> Expected {
    Expected::Undetermined
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertFile {
    pub schema: String,
    pub certificates: Vec<RawCert>,
}

/// A degeneration along a curve `g(t) = pre_change * curve(t)`, optionally
/// through the family with `l := lambda(t)`, followed at `t = 0` by the
/// constant `post_change`.
#[derive(Debug, Clone)]
pub struct SpecializationCert {
    pub id: String,
    pub source: String,
    pub target: String,
    /// `Some` for a family limit.
    pub lambda: Option<TRational>,
    /// Working basis written in the catalog basis of the source.
    pub pre_change: GroupElement<Scalar>,
    /// Curve basis written in the working basis; polynomial entries.
    pub curve: Matrix<TRational>,
    pub post_change: Option<GroupElement<Scalar>>,
    pub expected: Expected,
}

impl SpecializationCert {
    pub fn is_family_limit(&self) -> bool {
        self.lambda.is_some()
    }
}

#[derive(Debug, Clone)]
pub struct ObstructionCert {
    pub id: String,
    pub source: String,
    pub target: String,
    pub method: Method,
    pub reference: Option<String>,
    pub expected: Expected,
}

/// A pair whose status is registered as open.
#[derive(Debug, Clone)]
pub struct UndeterminedPair {
    pub id: String,
    pub source: String,
    pub target: String,
}

#[derive(Debug, Clone)]
pub enum Cert {
    Specialization(SpecializationCert),
    Obstruction(ObstructionCert),
    Undetermined(UndeterminedPair),
}

impl Cert {
    pub fn id(&self) -> &str {
        match self {
            Cert::Specialization(c) => &c.id,
            Cert::Obstruction(c) => &c.id,
            Cert::Undetermined(c) => &c.id,
        }
    }

    pub fn source(&self) -> &str {
        match self {
            Cert::Specialization(c) => &c.source,
            Cert::Obstruction(c) => &c.source,
            Cert::Undetermined(c) => &c.source,
        }
    }

    pub fn target(&self) -> &str {
        match self {
            Cert::Specialization(c) => &c.target,
            Cert::Obstruction(c) => &c.target,
            Cert::Undetermined(c) => &c.target,
        }
    }

    pub fn expected(&self) -> Expected {
        match self {
            Cert::Specialization(c) => c.expected,
            Cert::Obstruction(c) => c.expected,
            Cert::Undetermined(_) => Expected::Undetermined,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Cert::Specialization(c) if c.is_family_limit() => "family_limit",
            Cert::Specialization(_) => "specialization",
            Cert::Obstruction(_) => "obstruction",
            Cert::Undetermined(_) => "undetermined",
        }
    }
}

fn malformed(id: &str, reason: impl Into<String>) -> DegenError {
    DegenError::Malformed {
        id: id.to_string(),
        reason: reason.into(),
    }
}

fn square<T>(id: &str, what: &str, rows: Vec<Vec<T>>) -> Result<Matrix<T>, DegenError>
where
    T: Field,
{
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(malformed(id, format!("{what} is not square")));
    }
    Matrix::from_rows(rows).map_err(|e| malformed(id, format!("{what}: {e}")))
}

fn constant_matrix(id: &str, what: &str, lits: &Lits) -> Result<Matrix<Scalar>, DegenError> {
    let rows = lits
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| parse_scalar(s).map_err(|e| malformed(id, format!("{what}: {e}"))))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    square(id, what, rows)
}

fn group(id: &str, what: &str, lits: &Lits) -> Result<GroupElement<Scalar>, DegenError> {
    GroupElement::new(constant_matrix(id, what, lits)?).map_err(|e| malformed(id, format!("{what}: {e}")))
}

fn curve_matrix(id: &str, lits: &Lits) -> Result<Matrix<TRational>, DegenError> {
    let rows = lits
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| {
                    parse_tpoly(s)
                        .map(TRational::from_poly)
                        .map_err(|e| malformed(id, format!("curve: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let m = square(id, "curve", rows)?;
    let first_col_ok = (0..m.rows()).all(|r| {
        let want = if r == 0 {
            TRational::one()
        } else {
            TRational::zero()
        };
        m[(r, 0)] == want
    });
    if !first_col_ok {
        return Err(malformed(id, "curve: first column is not (1, 0, ..., 0)"));
    }
    Ok(m)
}

#[allow(clippy::too_many_arguments)]
fn curve_cert(
    id: String,
    source: String,
    target: String,
    lambda: Option<&str>,
    pre: Option<Lits>,
    curve: Option<Lits>,
    post: Option<Lits>,
    expected: Expected,
) -> Result<SpecializationCert, DegenError> {
    let pre_change = pre.as_ref().map(|l| group(&id, "pre_change", l)).transpose()?;
    let curve = curve.as_ref().map(|l| curve_matrix(&id, l)).transpose()?;
    let n = match (&pre_change, &curve) {
        (Some(p), _) => p.matrix().rows(),
        (None, Some(c)) => c.rows(),
        (None, None) => return Err(malformed(&id, "needs pre_change or curve")),
    };
    let pre_change = pre_change.unwrap_or_else(|| GroupElement::identity(n));
    let curve = curve.unwrap_or_else(|| Matrix::identity(n));
    if curve.rows() != n {
        return Err(malformed(&id, "pre_change and curve differ in size"));
    }
    let post_change = post.as_ref().map(|l| group(&id, "post_change", l)).transpose()?;
    if post_change.as_ref().is_some_and(|p| p.matrix().rows() != n) {
        return Err(malformed(&id, "post_change has the wrong size"));
    }
    let lambda = lambda
        .map(|s| parse_rational(s).map_err(|e| malformed(&id, format!("lambda: {e}"))))
        .transpose()?;
    Ok(SpecializationCert {
        id,
        source: normalize_label(&source),
        target: normalize_label(&target),
        lambda,
        pre_change,
        curve,
        post_change,
        expected,
    })
}

impl RawCert {
    /// Parses literals and checks the shape invariants.
    pub fn parse(self) -> Result<Cert, DegenError> {
        Ok(match self {
            RawCert::Specialization {
                id,
                source,
                target,
                pre_change,
                curve,
                post_change,
                expected,
            } => Cert::Specialization(curve_cert(
                id,
                source,
                target,
                None,
                pre_change,
                curve,
                post_change,
                expected,
            )?),
            RawCert::FamilyLimit {
                id,
                source,
                target,
                lambda,
                pre_change,
                curve,
                post_change,
                expected,
            } => Cert::Specialization(curve_cert(
                id,
                source,
                target,
                Some(&lambda),
                pre_change,
                curve,
                post_change,
                expected,
            )?),
            RawCert::Obstruction {
                id,
                source,
                target,
                method,
                reference,
                expected,
            } => Cert::Obstruction(ObstructionCert {
                id,
                source: normalize_label(&source),
                target: normalize_label(&target),
                method,
                reference,
                expected,
            }),
            RawCert::Undetermined {
                id, source, target, ..
            } => Cert::Undetermined(UndeterminedPair {
                id,
                source: normalize_label(&source),
                target: normalize_label(&target),
            }),
        })
    }
}

pub fn parse_cert_file(text: &str) -> Result<Vec<Cert>, DegenError> {
    let file: CertFile = serde_json::from_str(text).map_err(|e| DegenError::Json {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    file.certificates.into_iter().map(RawCert::parse).collect()
}

pub fn load_cert_file(path: impl AsRef<Path>) -> Result<Vec<Cert>, DegenError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| DegenError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    parse_cert_file(&text)
}

/// The certificate files shipped with the crate, by name.
pub const SHIPPED: [(&str, &str); 6] = [
    ("spec_dim3", include_str!("../../data/spec_dim3.json")),
    ("spec_dim2", include_str!("../../data/spec_dim2.json")),
    ("family_limits", include_str!("../../data/family_limits.json")),
    (
        "obstructions_dim3",
        include_str!("../../data/obstructions_dim3.json"),
    ),
    (
        "obstructions_dim2",
        include_str!("../../data/obstructions_dim2.json"),
    ),
    ("undetermined", include_str!("../../data/undetermined.json")),
];

/// One of the shipped files, parsed.
pub fn shipped(name: &str) -> Result<Vec<Cert>, DegenError> {
    let (_, text) = SHIPPED
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| DegenError::Io {
            path: name.to_string(),
            msg: "no shipped certificate file of that name".into(),
        })?;
    parse_cert_file(text)
}

/// Every shipped certificate.
pub fn shipped_all() -> Result<Vec<Cert>, DegenError> {
    let mut out = Vec::new();
    for (name, _) in SHIPPED {
        out.extend(shipped(name)?);
    }
    Ok(out)
}
