//! The sparse JSON file format shared by every command.
//!
//! A file stores one or more named tensors ("parts") as a list of nonzero
//! entries with reduced-fraction values. Writers emit entries in layout
//! order (parts first, then row-major index), so serialization is canonical.

use crate::error::{CliError, Result};
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::path::Path;
use tlz_core::algebra::{BinaryAlgebra, CommAssocAlgebra, TernaryAlgebra};
use tlz_core::deform::DeformationData;
use tlz_core::modrep::{BinaryBimodule, Cocycle, Representation, TernaryBimodule};
use tlz_core::scalar::{format as format_scalar, parse_reduced};
use tlz_core::{Matrix, Scalar, Tensor};

/// Largest accepted dimension; keeps `n⁴`-sized tensors small.
pub const MAX_DIM: usize = 32;
/// Largest accepted tensor size per part.
pub const MAX_CELLS: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FileKind {
    Binary,
    Ternary,
    CommAssoc,
    Bimodule,
    Representation,
    Operator,
    Cocycle,
    Deformation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub part: Option<String>,
    pub idx: Vec<usize>,
    pub val: String,
}

/// The checker a shipped fixture is expected to satisfy. Inputs are paths
/// relative to the fixture's directory; `self` names the fixture itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureCheck {
    pub kind: String,
    pub inputs: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
    #[serde(default = "default_expect")]
    pub expect: String,
}

fn default_expect() -> String {
    "pass".to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    #[serde(default)]
    pub name: String,
    #[serde(default)]
    pub notes: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<FixtureCheck>,
}

impl Meta {
    pub fn named(name: impl Into<String>) -> Self {
        Meta {
            name: name.into(),
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub kind: FileKind,
    pub dims: Vec<usize>,
    /// Bimodules only: 2 for binary, 3 for ternary.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arity: Option<usize>,
    pub entries: Vec<Entry>,
    #[serde(default)]
    pub meta: Meta,
}

/// A parsed file.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Binary(BinaryAlgebra),
    Ternary(TernaryAlgebra),
    CommAssoc(CommAssocAlgebra),
    BinaryBimodule(BinaryBimodule),
    TernaryBimodule(TernaryBimodule),
    Representation(Representation),
    Operator(Matrix),
    Cocycle(Cocycle),
    Deformation(Box<DeformationData>),
}

const DEFORMATION_PARTS: [&str; 8] = ["w1", "w2", "lambda1", "mu1", "rho1", "lambda2", "mu2", "rho2"];

/// Part names and tensor shapes in canonical order.
fn layout(kind: FileKind, dims: &[usize], arity: Option<usize>) -> Result<Vec<(Option<&'static str>, Vec<usize>)>> {
    let want = |k: usize| -> Result<()> {
        if dims.len() != k {
            return Err(CliError::format(format!(
                "kind {kind:?} needs {k} dims, found {}",
                dims.len()
            )));
        }
        Ok(())
    };
    let layout = match kind {
        FileKind::Binary | FileKind::CommAssoc => {
            want(1)?;
            vec![(None, vec![dims[0]; 3])]
        }
        FileKind::Ternary => {
            want(1)?;
            vec![(None, vec![dims[0]; 4])]
        }
        FileKind::Operator => {
            want(2)?;
            vec![(None, vec![dims[0], dims[1]])]
        }
        FileKind::Cocycle => {
            want(2)?;
            let (n, m) = (dims[0], dims[1]);
            vec![(None, vec![n, n, n, m])]
        }
        FileKind::Bimodule => {
            want(2)?;
            let (n, m) = (dims[0], dims[1]);
            match arity {
                Some(2) => vec![(Some("l"), vec![n, m, m]), (Some("r"), vec![m, n, m])],
                Some(3) => vec![
                    (Some("l1"), vec![m, n, n, m]),
                    (Some("l2"), vec![n, m, n, m]),
                    (Some("l3"), vec![n, n, m, m]),
                ],
                other => {
                    return Err(CliError::format(format!(
                        "bimodule arity must be 2 or 3, found {other:?}"
                    )))
                }
            }
        }
        FileKind::Representation => {
            want(2)?;
            let (n, m) = (dims[0], dims[1]);
            ["lambda", "mu", "rho"]
                .iter()
                .map(|p| (Some(*p), vec![n, n, m, m]))
                .collect()
        }
        FileKind::Deformation => {
            want(2)?;
            let (n, m) = (dims[0], dims[1]);
            DEFORMATION_PARTS
                .iter()
                .map(|p| {
                    (
                        Some(*p),
                        if p.starts_with('w') {
                            vec![n; 4]
                        } else {
                            vec![n, n, m, m]
                        },
                    )
                })
                .collect()
        }
    };
    if kind != FileKind::Bimodule && arity.is_some() {
        return Err(CliError::format("`arity` is only meaningful for bimodules"));
    }
    for (_, shape) in &layout {
        if shape.iter().any(|&d| d == 0 || d > MAX_DIM) {
            return Err(CliError::format(format!("dimensions must lie in 1..={MAX_DIM}")));
        }
        if shape.iter().product::<usize>() > MAX_CELLS {
            return Err(CliError::format("tensor too large"));
        }
    }
    Ok(layout)
}

impl AlgebraFile {
    pub fn parse_str(text: &str, path: &Path) -> Result<Self> {
        serde_json::from_str(text).map_err(|source| CliError::Json {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse_str(&text, path)
    }

    /// Canonical text: one line per top-level field and per entry, with a
    /// trailing newline.
    pub fn to_json(&self) -> String {
        let mut lines = vec![
            format!("  \"kind\": {}", compact(&self.kind)),
            format!("  \"dims\": {}", compact(&self.dims)),
        ];
        if let Some(a) = self.arity {
            lines.push(format!("  \"arity\": {a}"));
        }
        let entries = if self.entries.is_empty() {
            "  \"entries\": []".to_string()
        } else {
            let body = self.entries.iter().map(|e| format!("    {}", compact(e))).join(",\n");
            format!("  \"entries\": [\n{body}\n  ]")
        };
        lines.push(entries);
        lines.push(format!("  \"meta\": {}", compact(&self.meta)));
        format!("{{\n{}\n}}\n", lines.join(",\n"))
    }

    /// The dense tensors of every part, in layout order.
    pub fn tensors(&self) -> Result<Vec<Tensor>> {
        let layout = layout(self.kind, &self.dims, self.arity)?;
        let mut seen = HashSet::new();
        let mut filled: Vec<Vec<(Vec<usize>, Scalar)>> = vec![Vec::new(); layout.len()];
        for e in &self.entries {
            let slot = layout
                .iter()
                .position(|(p, _)| *p == e.part.as_deref())
                .ok_or_else(|| match &e.part {
                    Some(p) => CliError::format(format!("unknown part `{p}` for kind {:?}", self.kind)),
                    None => CliError::format(format!("kind {:?} needs a `part` on every entry", self.kind)),
                })?;
            let shape = &layout[slot].1;
            if e.idx.len() != shape.len() || e.idx.iter().zip(shape).any(|(i, d)| i >= d) {
                return Err(CliError::format(format!(
                    "index {:?} out of range for shape {shape:?}",
                    e.idx
                )));
            }
            if !seen.insert((slot, e.idx.clone())) {
                return Err(CliError::format(format!("duplicate entry {:?}", e.idx)));
            }
            let val = parse_reduced(&e.val)
                .ok_or_else(|| CliError::format(format!("`{}` is not a reduced fraction", e.val)))?;
            filled[slot].push((e.idx.clone(), val));
        }
        layout
            .into_iter()
            .zip(filled)
            .map(|((_, shape), entries)| Tensor::from_entries(shape, entries).map_err(CliError::from))
            .collect()
    }

    pub fn document(&self) -> Result<Document> {
        let mut t = self.tensors()?.into_iter();
        let mut next = || t.next().expect("layout size");
        Ok(match self.kind {
            FileKind::Binary => Document::Binary(BinaryAlgebra::new(next())?),
            FileKind::Ternary => Document::Ternary(TernaryAlgebra::new(next())?),
            FileKind::CommAssoc => Document::CommAssoc(CommAssocAlgebra::new(next())?),
            FileKind::Operator => {
                let m = next();
                Document::Operator(Matrix::new(self.dims[0], self.dims[1], m.data().to_vec())?)
            }
            FileKind::Cocycle => Document::Cocycle(Cocycle::new(next())?),
            FileKind::Bimodule if self.arity == Some(2) => {
                let (l, r) = (next(), next());
                Document::BinaryBimodule(BinaryBimodule::new(l, r)?)
            }
            FileKind::Bimodule => {
                let (a, b, c) = (next(), next(), next());
                Document::TernaryBimodule(TernaryBimodule::new(a, b, c)?)
            }
            FileKind::Representation => {
                let (a, b, c) = (next(), next(), next());
                Document::Representation(Representation::new(a, b, c)?)
            }
            FileKind::Deformation => {
                let parts: Vec<Tensor> = (0..8).map(|_| next()).collect();
                let [w1, w2, l1, m1, r1, l2, m2, r2]: [Tensor; 8] = parts.try_into().expect("eight parts");
                Document::Deformation(Box::new(DeformationData {
                    w1,
                    w2,
                    wl1: l1,
                    wm1: m1,
                    wr1: r1,
                    wl2: l2,
                    wm2: m2,
                    wr2: r2,
                }))
            }
        })
    }

    /// Canonical file for a document.
    pub fn from_document(doc: &Document, meta: Meta) -> Self {
        let (kind, dims, arity, parts): (FileKind, Vec<usize>, Option<usize>, Vec<Tensor>) = match doc {
            Document::Binary(b) => (FileKind::Binary, vec![b.dim()], None, vec![b.tensor().clone()]),
            Document::Ternary(t) => (FileKind::Ternary, vec![t.dim()], None, vec![t.tensor().clone()]),
            Document::CommAssoc(a) => (FileKind::CommAssoc, vec![a.dim()], None, vec![a.tensor().clone()]),
            Document::Operator(m) => {
                let t = Tensor::new(vec![m.rows(), m.cols()], m.data().to_vec()).expect("matrix shape");
                (FileKind::Operator, vec![m.rows(), m.cols()], None, vec![t])
            }
            Document::Cocycle(c) => {
                let d = c.w.dims();
                (FileKind::Cocycle, vec![d[0], d[3]], None, vec![c.w.clone()])
            }
            Document::BinaryBimodule(m) => (
                FileKind::Bimodule,
                vec![m.algebra_dim(), m.module_dim()],
                Some(2),
                vec![m.l.clone(), m.r.clone()],
            ),
            Document::TernaryBimodule(m) => (
                FileKind::Bimodule,
                vec![m.algebra_dim(), m.module_dim()],
                Some(3),
                vec![m.l1.clone(), m.l2.clone(), m.l3.clone()],
            ),
            Document::Representation(r) => (
                FileKind::Representation,
                vec![r.algebra_dim(), r.module_dim()],
                None,
                vec![r.lambda.clone(), r.mu.clone(), r.rho.clone()],
            ),
            Document::Deformation(d) => {
                let dims = vec![d.w1.dims()[0], d.wl1.dims()[2]];
                let parts = [&d.w1, &d.w2, &d.wl1, &d.wm1, &d.wr1, &d.wl2, &d.wm2, &d.wr2];
                (FileKind::Deformation, dims, None, parts.into_iter().cloned().collect())
            }
        };
        let names = layout(kind, &dims, arity).expect("document shapes are valid");
        let entries = names
            .iter()
            .zip(&parts)
            .flat_map(|((part, _), t)| {
                t.nonzero_entries().map(move |(idx, v)| Entry {
                    part: part.map(str::to_string),
                    idx,
                    val: format_scalar(v),
                })
            })
            .collect_vec();
        AlgebraFile {
            kind,
            dims,
            arity,
            entries,
            meta,
        }
    }
}

impl Document {
    pub fn describe(&self) -> &'static str {
        match self {
            Document::Binary(_) => "binary algebra",
            Document::Ternary(_) => "ternary algebra",
            Document::CommAssoc(_) => "commutative associative algebra",
            Document::BinaryBimodule(_) => "binary bimodule",
            Document::TernaryBimodule(_) => "ternary bimodule",
            Document::Representation(_) => "representation",
            Document::Operator(_) => "operator",
            Document::Cocycle(_) => "cocycle",
            Document::Deformation(_) => "deformation",
        }
    }
}

/// Reads and decodes a file.
pub fn load(path: &Path) -> Result<Document> {
    AlgebraFile::read(path)?
        .document()
        .map_err(|e| CliError::format(format!("{}: {e}", path.display())))
}

fn compact<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("value serializes")
}
