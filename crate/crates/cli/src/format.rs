//! On-disk format: JSON whose scalars are `"p/q"` strings, never floats.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "kind": "pre-algebra",
//!   "dimension": 2,
//!   "basis_names": ["e1", "e2"],
//!   "tensors": { "prec": [...], "succ": [...] }
//! }
//! ```
//!
//! `dimension` is the length of `basis_names`, which name the whole space
//! the object lives on: `A ⊕ V` for a bimodule, `A ⊕ B` for a matched pair,
//! the domain for a linear map. Tensors are indexed `t[i][j][k]` with the
//! output coordinate last; map families are lists of matrices.

use std::collections::BTreeMap;
use std::path::Path;

use antiflex_algebra::{Algebra, PreAlgebra};
use antiflex_bialgebra::{Bialgebra, Comultiplication};
use antiflex_coboundary::RPair;
use antiflex_linear::{format_scalar, parse_scalar, Matrix, Scalar, Tensor3};
use antiflex_matched_pair::PreMatchedPair;
use antiflex_representation::{AfBimodule, MapFamily, PreBimodule};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Algebra,
    PreAlgebra,
    Bimodule,
    MatchedPair,
    Bialgebra,
    RElement,
    LinearMap,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::PreAlgebra => "pre-algebra",
            Kind::Bimodule => "bimodule",
            Kind::MatchedPair => "matched-pair",
            Kind::Bialgebra => "bialgebra",
            Kind::RElement => "r-element",
            Kind::LinearMap => "linear-map",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

/// The file exactly as stored.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub format_version: u32,
    pub kind: Kind,
    pub dimension: usize,
    pub basis_names: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
    pub tensors: BTreeMap<String, Value>,
}

/// `r` alone, or a pair `(r_≺, r_≻)` for the coboundary construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RElement {
    Single(Matrix),
    Pair(RPair),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Algebra(Algebra),
    PreAlgebra(PreAlgebra),
    PreBimodule(PreBimodule),
    AfBimodule(AfBimodule),
    MatchedPair(PreMatchedPair),
    Bialgebra(Bialgebra),
    RElement(RElement),
    LinearMap(Matrix),
}

impl Object {
    pub fn kind(&self) -> Kind {
        match self {
            Object::Algebra(_) => Kind::Algebra,
            Object::PreAlgebra(_) => Kind::PreAlgebra,
            Object::PreBimodule(_) | Object::AfBimodule(_) => Kind::Bimodule,
            Object::MatchedPair(_) => Kind::MatchedPair,
            Object::Bialgebra(_) => Kind::Bialgebra,
            Object::RElement(_) => Kind::RElement,
            Object::LinearMap(_) => Kind::LinearMap,
        }
    }

    fn default_names(&self) -> Vec<String> {
        let numbered = |prefix: &str, n: usize| (1..=n).map(|i| format!("{prefix}{i}")).collect::<Vec<_>>();
        let with_space = |names: &[String], m: usize| {
            let mut v = names.to_vec();
            v.extend(numbered("v", m));
            v
        };
        match self {
            Object::Algebra(a) => a.basis_names.clone(),
            Object::PreAlgebra(p) => p.basis_names.clone(),
            Object::PreBimodule(bm) => with_space(&bm.base.basis_names, bm.space_dim),
            Object::AfBimodule(bm) => with_space(&bm.base.basis_names, bm.space_dim),
            Object::MatchedPair(mp) => [mp.palg_a.basis_names.clone(), mp.palg_b.basis_names.clone()].concat(),
            Object::Bialgebra(b) => b.palg.basis_names.clone(),
            Object::RElement(RElement::Single(r)) => numbered("e", r.rows()),
            Object::RElement(RElement::Pair(rp)) => numbered("e", rp.dimension()),
            Object::LinearMap(m) => numbered("e", m.cols()),
        }
    }
}

/// A typed object together with the naming and metadata of its file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub object: Object,
    pub basis_names: Vec<String>,
    pub metadata: Option<Metadata>,
}

impl Document {
    pub fn new(object: Object) -> Self {
        let basis_names = object.default_names();
        Document { object, basis_names, metadata: None }
    }

    pub fn named(object: Object, name: impl Into<String>, provenance: impl Into<String>) -> Self {
        let mut d = Document::new(object);
        d.metadata = Some(Metadata { name: Some(name.into()), provenance: Some(provenance.into()) });
        d
    }

    pub fn kind(&self) -> Kind {
        self.object.kind()
    }
}

fn err(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn scalar_value(x: &Scalar) -> Value {
    Value::String(format_scalar(x))
}

fn matrix_value(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|row| Value::Array(row.iter().map(scalar_value).collect())).collect())
}

fn tensor_value(t: &Tensor3) -> Value {
    Value::Array(t.slices().iter().map(matrix_value).collect())
}

fn family_value(f: &[Matrix]) -> Value {
    Value::Array(f.iter().map(matrix_value).collect())
}

fn array_of<'a>(v: &'a Value, path: &str, len: usize) -> Result<&'a Vec<Value>, CliError> {
    let a = v.as_array().ok_or_else(|| err(format!("shape mismatch at {path}: expected an array")))?;
    if a.len() != len {
        return Err(err(format!("shape mismatch at {path}: expected {len} entries, found {}", a.len())));
    }
    Ok(a)
}

fn scalar_from(v: &Value, path: &str) -> Result<Scalar, CliError> {
    let s = v.as_str().ok_or_else(|| err(format!("{path}: expected a \"p/q\" string, found {v}")))?;
    parse_scalar(s).map_err(|_| err(format!("{path}: malformed scalar {s:?}")))
}

fn matrix_from(v: &Value, path: &str, rows: usize, cols: usize) -> Result<Matrix, CliError> {
    let mut out = Vec::with_capacity(rows);
    for (i, row) in array_of(v, path, rows)?.iter().enumerate() {
        let p = format!("{path}[{i}]");
        let entries = array_of(row, &p, cols)?;
        out.push(entries.iter().enumerate().map(|(j, x)| scalar_from(x, &format!("{p}[{j}]"))).collect::<Result<Vec<_>, _>>()?);
    }
    if rows == 0 {
        return Ok(Matrix::zeros(0, cols));
    }
    Matrix::from_rows(out).map_err(|e| err(format!("{path}: {e}")))
}

fn family_from(v: &Value, path: &str, count: usize, rows: usize, cols: usize) -> Result<MapFamily, CliError> {
    array_of(v, path, count)?.iter().enumerate().map(|(i, m)| matrix_from(m, &format!("{path}[{i}]"), rows, cols)).collect()
}

fn tensor_from(v: &Value, path: &str, dims: [usize; 3]) -> Result<Tensor3, CliError> {
    let slices = family_from(v, path, dims[0], dims[1], dims[2])?;
    Ok(Tensor3::from_fn(dims, |i, j, k| slices[i][(j, k)].clone()))
}

/// Outer length of a payload, used to split a total dimension.
fn outer_len(v: &Value, path: &str) -> Result<usize, CliError> {
    v.as_array().map(Vec::len).ok_or_else(|| err(format!("shape mismatch at {path}: expected an array")))
}

struct Payload<'a> {
    kind: Kind,
    tensors: &'a BTreeMap<String, Value>,
}

impl Payload<'_> {
    fn has(&self, key: &str) -> bool {
        self.tensors.contains_key(key)
    }

    /// Rejects keys outside `allowed` and reports the first missing one.
    fn expect_keys(&self, allowed: &[&str]) -> Result<(), CliError> {
        if let Some(k) = self.tensors.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(err(format!("tensors.{k}: unknown field for kind {}", self.kind.name())));
        }
        if let Some(k) = allowed.iter().find(|k| !self.has(k)) {
            return Err(err(format!("tensors.{k}: missing for kind {}", self.kind.name())));
        }
        Ok(())
    }

    fn get(&self, key: &str) -> &Value {
        &self.tensors[key]
    }

    fn cube(&self, key: &str, n: usize) -> Result<Tensor3, CliError> {
        tensor_from(self.get(key), &format!("tensors.{key}"), [n; 3])
    }

    fn family(&self, key: &str, count: usize, m: usize) -> Result<MapFamily, CliError> {
        family_from(self.get(key), &format!("tensors.{key}"), count, m, m)
    }

    fn matrix(&self, key: &str, rows: usize, cols: usize) -> Result<Matrix, CliError> {
        matrix_from(self.get(key), &format!("tensors.{key}"), rows, cols)
    }

    fn outer(&self, key: &str) -> Result<usize, CliError> {
        outer_len(self.get(key), &format!("tensors.{key}"))
    }
}

fn split(total: usize, first: usize, what: &str) -> Result<usize, CliError> {
    if first == 0 || first > total {
        return Err(err(format!("shape mismatch: {what} has dimension {first}, file dimension is {total}")));
    }
    Ok(total - first)
}

fn lin(e: antiflex_linear::Error) -> CliError {
    err(e.to_string())
}

impl AlgebraFile {
    pub fn into_document(self) -> Result<Document, CliError> {
        if self.format_version != FORMAT_VERSION {
            return Err(err(format!("format_version: unsupported version {}", self.format_version)));
        }
        let total = self.dimension;
        if self.basis_names.len() != total {
            return Err(err(format!(
                "basis_names: expected {total} names, found {}",
                self.basis_names.len()
            )));
        }
        if total == 0 {
            return Err(err("dimension: must be positive"));
        }
        let names = &self.basis_names;
        let p = Payload { kind: self.kind, tensors: &self.tensors };
        let pre = |prec: &str, succ: &str, n: usize, names: &[String]| -> Result<PreAlgebra, CliError> {
            PreAlgebra::with_names(p.cube(prec, n)?, p.cube(succ, n)?, names.to_vec()).map_err(lin)
        };
        let object = match self.kind {
            Kind::Algebra => {
                p.expect_keys(&["product"])?;
                Object::Algebra(Algebra::with_names(p.cube("product", total)?, names.clone()).map_err(lin)?)
            }
            Kind::PreAlgebra => {
                p.expect_keys(&["prec", "succ"])?;
                Object::PreAlgebra(pre("prec", "succ", total, names)?)
            }
            Kind::Bimodule if p.has("product") => {
                p.expect_keys(&["product", "l", "r"])?;
                let n = p.outer("product")?;
                let m = split(total, n, "the base algebra")?;
                let base = Algebra::with_names(p.cube("product", n)?, names[..n].to_vec()).map_err(lin)?;
                Object::AfBimodule(AfBimodule::new(base, m, p.family("l", n, m)?, p.family("r", n, m)?).map_err(lin)?)
            }
            Kind::Bimodule => {
                p.expect_keys(&["prec", "succ", "l_succ", "r_succ", "l_prec", "r_prec"])?;
                let n = p.outer("prec")?;
                let m = split(total, n, "the base algebra")?;
                let base = pre("prec", "succ", n, &names[..n])?;
                let f = |k: &str| p.family(k, n, m);
                Object::PreBimodule(
                    PreBimodule::new(base, m, f("l_succ")?, f("r_succ")?, f("l_prec")?, f("r_prec")?).map_err(lin)?,
                )
            }
            Kind::MatchedPair => {
                p.expect_keys(&[
                    "a_prec", "a_succ", "b_prec", "b_succ", "l_succ_a", "r_succ_a", "l_prec_a", "r_prec_a", "l_succ_b",
                    "r_succ_b", "l_prec_b", "r_prec_b",
                ])?;
                let n = p.outer("a_prec")?;
                let m = split(total, n, "A")?;
                if m == 0 {
                    return Err(err("shape mismatch: B has dimension 0"));
                }
                let fa = |k: &str| p.family(k, n, m);
                let fb = |k: &str| p.family(k, m, n);
                Object::MatchedPair(PreMatchedPair {
                    palg_a: pre("a_prec", "a_succ", n, &names[..n])?,
                    palg_b: pre("b_prec", "b_succ", m, &names[n..])?,
                    l_succ_a: fa("l_succ_a")?,
                    r_succ_a: fa("r_succ_a")?,
                    l_prec_a: fa("l_prec_a")?,
                    r_prec_a: fa("r_prec_a")?,
                    l_succ_b: fb("l_succ_b")?,
                    r_succ_b: fb("r_succ_b")?,
                    l_prec_b: fb("l_prec_b")?,
                    r_prec_b: fb("r_prec_b")?,
                })
            }
            Kind::Bialgebra => {
                p.expect_keys(&["prec", "succ", "delta_prec", "delta_succ"])?;
                let dp = Comultiplication::new(p.cube("delta_prec", total)?).map_err(lin)?;
                let ds = Comultiplication::new(p.cube("delta_succ", total)?).map_err(lin)?;
                Object::Bialgebra(Bialgebra::new(pre("prec", "succ", total, names)?, dp, ds).map_err(lin)?)
            }
            Kind::RElement if p.has("r") => {
                p.expect_keys(&["r"])?;
                Object::RElement(RElement::Single(p.matrix("r", total, total)?))
            }
            Kind::RElement => {
                p.expect_keys(&["r_prec", "r_succ"])?;
                let rp = RPair::new(p.matrix("r_prec", total, total)?, p.matrix("r_succ", total, total)?).map_err(lin)?;
                Object::RElement(RElement::Pair(rp))
            }
            Kind::LinearMap => {
                p.expect_keys(&["map"])?;
                let rows = p.outer("map")?;
                Object::LinearMap(p.matrix("map", rows, total)?)
            }
        };
        Ok(Document { object, basis_names: self.basis_names, metadata: self.metadata })
    }

    pub fn from_document(doc: &Document) -> Self {
        let mut t = BTreeMap::new();
        let mut put = |k: &str, v: Value| {
            t.insert(k.to_string(), v);
        };
        match &doc.object {
            Object::Algebra(a) => put("product", tensor_value(&a.product)),
            Object::PreAlgebra(p) => {
                put("prec", tensor_value(&p.prec));
                put("succ", tensor_value(&p.succ));
            }
            Object::AfBimodule(bm) => {
                put("product", tensor_value(&bm.base.product));
                put("l", family_value(&bm.l));
                put("r", family_value(&bm.r));
            }
            Object::PreBimodule(bm) => {
                put("prec", tensor_value(&bm.base.prec));
                put("succ", tensor_value(&bm.base.succ));
                put("l_succ", family_value(&bm.l_succ));
                put("r_succ", family_value(&bm.r_succ));
                put("l_prec", family_value(&bm.l_prec));
                put("r_prec", family_value(&bm.r_prec));
            }
            Object::MatchedPair(mp) => {
                put("a_prec", tensor_value(&mp.palg_a.prec));
                put("a_succ", tensor_value(&mp.palg_a.succ));
                put("b_prec", tensor_value(&mp.palg_b.prec));
                put("b_succ", tensor_value(&mp.palg_b.succ));
                put("l_succ_a", family_value(&mp.l_succ_a));
                put("r_succ_a", family_value(&mp.r_succ_a));
                put("l_prec_a", family_value(&mp.l_prec_a));
                put("r_prec_a", family_value(&mp.r_prec_a));
                put("l_succ_b", family_value(&mp.l_succ_b));
                put("r_succ_b", family_value(&mp.r_succ_b));
                put("l_prec_b", family_value(&mp.l_prec_b));
                put("r_prec_b", family_value(&mp.r_prec_b));
            }
            Object::Bialgebra(b) => {
                put("prec", tensor_value(&b.palg.prec));
                put("succ", tensor_value(&b.palg.succ));
                put("delta_prec", tensor_value(&b.delta_prec.coeffs));
                put("delta_succ", tensor_value(&b.delta_succ.coeffs));
            }
            Object::RElement(RElement::Single(r)) => put("r", matrix_value(r)),
            Object::RElement(RElement::Pair(rp)) => {
                put("r_prec", matrix_value(&rp.r_prec));
                put("r_succ", matrix_value(&rp.r_succ));
            }
            Object::LinearMap(m) => put("map", matrix_value(m)),
        }
        AlgebraFile {
            format_version: FORMAT_VERSION,
            kind: doc.kind(),
            dimension: doc.basis_names.len(),
            basis_names: doc.basis_names.clone(),
            metadata: doc.metadata.clone(),
            tensors: t,
        }
    }
}

/// Parses file text; serde diagnostics carry line and column.
pub fn parse_document(text: &str) -> Result<Document, CliError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| err(format!("parse error: {e}")))?;
    file.into_document()
}

/// Canonical text: keys sorted, rows of scalars on one line, trailing newline.
pub fn serialize_document(doc: &Document) -> String {
    let value = serde_json::to_value(AlgebraFile::from_document(doc)).expect("file is plain data");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

pub fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| " ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, child)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                out.push_str(&serde_json::to_string(k).expect("string key"));
                out.push_str(": ");
                write_value(child, indent + 2, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, child) in items.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                write_value(child, indent + 2, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(|x| serde_json::to_string(x).expect("scalar")).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        other => out.push_str(&serde_json::to_string(other).expect("scalar")),
    }
}

pub fn load(path: &Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| err(format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| err(format!("{}: {e}", path.display())))
}

pub fn save(path: &Path, doc: &Document) -> Result<(), CliError> {
    std::fs::write(path, serialize_document(doc)).map_err(|e| err(format!("{}: {e}", path.display())))
}
