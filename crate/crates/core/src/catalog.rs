//! The classification of 4-dimensional superalgebras as data: structure
//! constants in a fixed basis per entry, expected stabilizer and orbit
//! dimensions, and a loader that validates everything on the way in.
//!
//! The default catalog is compiled in from `data/catalog.json`; the format is
//! documented in `data/SCHEMA.md`.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{parse_scalar, Field, ParseError, Scalar};
use crate::invariants::{fingerprint, orbit_dim, stabilizer_dim, Fingerprint};
use crate::superalg::{group_dim, StructureConstants, SuperalgError};

/// The compiled-in catalog text.
pub const DEFAULT_CATALOG: &str = include_str!("../data/catalog.json");

/// Parameter values excluded from the family.
pub const FORBIDDEN_LAMBDA: [i64; 3] = [-1, 0, 1];

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("catalog is not valid JSON at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error("{label}: field `{field}`[{index}]: {source}")]
    Literal {
        label: String,
        field: &'static str,
        index: usize,
        source: ParseError,
    },
    #[error("{label}: {reason}")]
    Validation { label: String, reason: String },
    #[error("duplicate label {0}")]
    Duplicate(String),
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("{label}: lambda = {value} is excluded from the family")]
    ForbiddenParameter { label: String, value: String },
    #[error("{label}: {reason}")]
    Parameter { label: String, reason: String },
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
}

/// One entry exactly as it appears in the file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawEntry {
    pub label: String,
    pub n: usize,
    pub component: usize,
    pub parametric: bool,
    #[serde(default)]
    pub basis_doc: Vec<String>,
    pub alpha: Vec<String>,
    pub gamma: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_stab_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_orbit_dim: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawCatalog {
    pub schema: String,
    #[serde(default)]
    pub index_convention: String,
    pub entries: Vec<RawEntry>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawTop {
    Document(RawCatalog),
    List(Vec<RawEntry>),
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub label: String,
    pub n: usize,
    /// `dim A_0`.
    pub component: usize,
    pub parametric: bool,
    pub basis_doc: Vec<String>,
    pub constants: StructureConstants,
    pub expected_stab_dim: Option<usize>,
    pub expected_orbit_dim: Option<usize>,
}

impl CatalogEntry {
    /// Family index and grading index parsed from the label, e.g. `("14", 2)`.
    pub fn label_parts(&self) -> Option<(&str, usize)> {
        label_parts(&self.label)
    }
}

fn label_parts(label: &str) -> Option<(&str, usize)> {
    let inner = label.strip_prefix('(')?.strip_suffix(')')?;
    let (fam, grading) = inner.rsplit_once('|')?;
    Some((fam, grading.parse().ok()?))
}

/// Canonical spelling of a label: parentheses added when missing and the
/// family parameter written `λ`, so `18;l|1` and `(18;lambda|1)` both become
/// `(18;λ|1)`.
pub fn normalize_label(label: &str) -> String {
    let s = label.trim();
    let s = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(s);
    let s = s.replace(";lambda|", ";λ|").replace(";l|", ";λ|");
    format!("({s})")
}

/// Outcome of comparing a family member with a fixed entry.
#[derive(Debug, Clone, Serialize)]
pub struct Coincidence {
    pub family: String,
    pub lambda: i64,
    pub other: String,
    /// `entrywise` or `fingerprint`.
    pub comparison: &'static str,
    pub expected: bool,
    pub observed: bool,
}

impl Coincidence {
    pub fn pass(&self) -> bool {
        self.expected == self.observed
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    index: BTreeMap<String, usize>,
}

impl Catalog {
    /// The compiled-in catalog, parsed and validated once.
    pub fn embedded() -> &'static Catalog {
        static CAT: OnceLock<Catalog> = OnceLock::new();
        CAT.get_or_init(|| Catalog::from_json(DEFAULT_CATALOG).expect("embedded catalog is valid"))
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Catalog, CatalogError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| CatalogError::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        Catalog::from_json(&text)
    }

    /// Parses and validates a catalog document. Accepts either the full
    /// document with header fields or a bare list of entries.
    pub fn from_json(text: &str) -> Result<Catalog, CatalogError> {
        let top: RawTop = serde_json::from_str(text).map_err(|e| CatalogError::Parse {
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        })?;
        let raw = match top {
            RawTop::Document(d) => d.entries,
            RawTop::List(l) => l,
        };
        Catalog::from_raw(raw)
    }

    pub fn from_raw(raw: Vec<RawEntry>) -> Result<Catalog, CatalogError> {
        let mut entries = Vec::with_capacity(raw.len());
        let mut index = BTreeMap::new();
        for r in raw {
            let e = build_entry(r)?;
            if index.insert(e.label.clone(), entries.len()).is_some() {
                return Err(CatalogError::Duplicate(e.label));
            }
            entries.push(e);
        }
        Ok(Catalog { entries, index })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(&normalize_label(label))
    }

    pub fn entry(&self, label: &str) -> Result<&CatalogEntry, CatalogError> {
        let key = normalize_label(label);
        self.index
            .get(&key)
            .map(|&i| &self.entries[i])
            .ok_or(CatalogError::UnknownLabel(key))
    }

    /// Entries with `dim A_0 = component`, in file order.
    pub fn component(&self, component: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.component == component)
    }

    /// Constants of an entry; for a family, `lambda` must be given and is
    /// substituted. The result is re-validated.
    pub fn get(&self, label: &str, lambda: Option<&Scalar>) -> Result<StructureConstants, CatalogError> {
        let e = self.entry(label)?;
        match (e.parametric, lambda) {
            (false, None) => Ok(e.constants.clone()),
            (false, Some(_)) => Err(CatalogError::Parameter {
                label: e.label.clone(),
                reason: "entry has no parameter".into(),
            }),
            (true, None) => Err(CatalogError::Parameter {
                label: e.label.clone(),
                reason: "a value for lambda is required".into(),
            }),
            (true, Some(v)) => {
                if FORBIDDEN_LAMBDA.iter().any(|&f| *v == Scalar::from_i64(f)) {
                    return Err(CatalogError::ForbiddenParameter {
                        label: e.label.clone(),
                        value: v.to_string(),
                    });
                }
                let sc = substitute(&e.constants, v).ok_or_else(|| CatalogError::Parameter {
                    label: e.label.clone(),
                    reason: format!("an entry has a pole at lambda = {v}"),
                })?;
                sc.validate().map_err(|err| validation(&e.label, err))
            }
        }
    }

    /// Constants of every family member and fixed entry named in the known
    /// coincidences at `lambda = 0` and `lambda = 1`, compared entrywise or by
    /// fingerprint. The substitution bypasses the forbidden-value guard on
    /// purpose: these members lie outside the family.
    pub fn coincidence_check(&self) -> Result<Vec<Coincidence>, CatalogError> {
        const CASES: [(&str, i64, &str, &str, bool); 7] = [
            ("(18;λ|0)", 0, "(16|0)", "entrywise", true),
            ("(18;λ|1)", 0, "(16|1)", "entrywise", true),
            ("(18;λ|2)", 0, "(16|3)", "entrywise", true),
            ("(18;λ|1)", 0, "(16|2)", "entrywise", false),
            ("(18;λ|0)", 1, "(7|0)", "fingerprint", true),
            ("(18;λ|1)", 1, "(7|2)", "fingerprint", true),
            ("(18;λ|2)", 1, "(7|3)", "fingerprint", true),
        ];
        let mut out = Vec::new();
        for (fam, lam, other, how, expected) in CASES {
            let f = self.entry(fam)?;
            let member =
                substitute(&f.constants, &Scalar::from_i64(lam)).ok_or_else(|| CatalogError::Parameter {
                    label: fam.into(),
                    reason: format!("pole at lambda = {lam}"),
                })?;
            let target = &self.entry(other)?.constants;
            let observed = if how == "entrywise" {
                &member == target
            } else {
                let a = fingerprint(&member).map_err(|e| CatalogError::Validation {
                    label: fam.into(),
                    reason: e.to_string(),
                })?;
                let b = fingerprint(target).map_err(|e| CatalogError::Validation {
                    label: other.into(),
                    reason: e.to_string(),
                })?;
                a == b
            };
            out.push(Coincidence {
                family: fam.into(),
                lambda: lam,
                other: other.into(),
                comparison: how,
                expected,
                observed,
            });
        }
        Ok(out)
    }

    /// Pairs of distinct entries in one component with equal fingerprints.
    /// These are reported, not errors: the invariants are not complete.
    pub fn fingerprint_collisions(&self) -> Vec<(String, String)> {
        let fps: Vec<(usize, &str, Option<Fingerprint>)> = self
            .entries
            .iter()
            .map(|e| (e.component, e.label.as_str(), fingerprint(&e.constants).ok()))
            .collect();
        let mut out = Vec::new();
        for (a, (ca, la, fa)) in fps.iter().enumerate() {
            for (cb, lb, fb) in &fps[a + 1..] {
                if ca == cb && fa.is_some() && fa == fb {
                    out.push((la.to_string(), lb.to_string()));
                }
            }
        }
        out
    }
}

/// Substitutes `l := value` in every entry.
pub fn substitute(sc: &StructureConstants, value: &Scalar) -> Option<StructureConstants> {
    sc.try_map(|x| x.substitute_lambda(value).ok_or(())).ok()
}

fn validation(label: &str, err: impl std::fmt::Display) -> CatalogError {
    CatalogError::Validation {
        label: label.to_string(),
        reason: err.to_string(),
    }
}

fn parse_field(label: &str, field: &'static str, lits: &[String]) -> Result<Vec<Scalar>, CatalogError> {
    lits.iter()
        .enumerate()
        .map(|(index, s)| {
            parse_scalar(s).map_err(|source| CatalogError::Literal {
                label: label.to_string(),
                field,
                index,
                source,
            })
        })
        .collect()
}

fn build_entry(r: RawEntry) -> Result<CatalogEntry, CatalogError> {
    let label = normalize_label(&r.label);
    if label_parts(&label).is_none() {
        return Err(validation(&label, "label is not of the form (family|grading)"));
    }
    let alpha = parse_field(&label, "alpha", &r.alpha)?;
    let gamma = parse_field(&label, "gamma", &r.gamma)?;
    let sc = StructureConstants::new(r.n, alpha, gamma).map_err(|e| validation(&label, e))?;

    let uses_lambda = sc
        .alpha_entries()
        .iter()
        .chain(sc.gamma_entries())
        .any(Scalar::depends_on_lambda);
    match (r.parametric, uses_lambda) {
        (true, false) => {
            return Err(validation(
                &label,
                "declared parametric but no entry involves lambda",
            ))
        }
        (false, true) => {
            return Err(validation(
                &label,
                "entries involve lambda but parametric is false",
            ))
        }
        _ => {}
    }
    if r.parametric != label.contains('λ') {
        return Err(validation(&label, "parametric flag disagrees with the label"));
    }

    let sc = sc.validate().map_err(|e| match e {
        SuperalgError::Axioms(rep) => validation(&label, format!("axioms fail: {rep}")),
        other => validation(&label, other),
    })?;
    let split = sc.grading_split().map_err(|e| validation(&label, e))?;
    if split.i != r.component {
        return Err(validation(
            &label,
            format!("declared component {} but dim A_0 = {}", r.component, split.i),
        ));
    }
    if r.expected_stab_dim.is_some() || r.expected_orbit_dim.is_some() {
        let stab = stabilizer_dim(&sc);
        let orbit = orbit_dim(&sc);
        if let Some(s) = r.expected_stab_dim {
            if s != stab {
                return Err(validation(
                    &label,
                    format!("declared stabilizer dimension {s}, computed {stab}"),
                ));
            }
        }
        if let Some(o) = r.expected_orbit_dim {
            if o != orbit {
                return Err(validation(
                    &label,
                    format!("declared orbit dimension {o}, computed {orbit}"),
                ));
            }
        }
        debug_assert_eq!(stab + orbit, group_dim(r.n));
    }
    Ok(CatalogEntry {
        label,
        n: r.n,
        component: r.component,
        parametric: r.parametric,
        basis_doc: r.basis_doc,
        constants: sc,
        expected_stab_dim: r.expected_stab_dim,
        expected_orbit_dim: r.expected_orbit_dim,
    })
}
