//! JSON algebra files: loading into core structures and emitting them back.
//!
//! Every structure tensor is a list of sparse entries, indices first and the
//! scalar last, scalars written as strings:
//!
//! * `mult`      `[i, j, k, s]`: `e_i e_j` has coefficient `s` at `e_k`
//! * `unit`      `[k, s]`
//! * `comult`    `[i, j, k, s]`: `Delta(e_i)` has coefficient `s` at `e_j (x) e_k`
//! * `counit`    `[i, s]`
//! * `antipode`  `[i, j, s]`: `S(e_i)` has coefficient `s` at `e_j`
//! * `rmatrix`   `[i, j, s]`: `R` has coefficient `s` at `e_i (x) e_j`
//! * `action`    `[h, m, m', s]`: `h . e_m` has coefficient `s` at `e_m'`
//! * `coaction`  `[m, m', h, s]`: `rho(e_m)` has coefficient `s` at `e_m' (x) h`
//! * `carrier`   `[l, m, m', s]`: action of the ambient Hopf algebra `L`
//!
//! `ambient` holds `L` (with its `rmatrix`) when the structure lives in a
//! braided category of `L`-modules; `over` holds the Hopf algebra that acts or
//! coacts.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use hopf_galois::braiding::{Category, Module, RMatrix};
use hopf_galois::families::HndParams;
use hopf_galois::hopf::{FDAlgebra, FDCoalgebra, FDHopf};
use hopf_galois::modcat::{BraidedHopf, ComoduleAlgebra, ModuleAlgebra};
use hopf_galois::{Field, Matrix, PrimeField, Rationals};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid file: {0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] hopf_galois::Error),
}

impl From<hopf_galois::exact::ExactError> for FileError {
    fn from(e: hopf_galois::exact::ExactError) -> Self {
        FileError::Core(e.into())
    }
}

impl From<hopf_galois::hopf::HopfError> for FileError {
    fn from(e: hopf_galois::hopf::HopfError) -> Self {
        FileError::Core(e.into())
    }
}

pub type Entries = Vec<Vec<Value>>;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldJson {
    Prime {
        p: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        omega_order: Option<u64>,
    },
    Rational,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FamilyJson {
    pub n: usize,
    pub m: usize,
    pub d: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
}

impl FamilyJson {
    pub fn params(&self) -> HndParams {
        HndParams::new(self.n, self.m, self.d.clone())
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct InvariantJson {
    pub a: String,
    pub alpha: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldJson,
    pub name: String,
    pub dim: usize,
    pub mult: Entries,
    pub unit: Entries,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rmatrix: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<Box<AlgebraFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub over: Option<Box<AlgebraFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariant: Option<InvariantJson>,
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, FileError> {
        let text = std::fs::read_to_string(path).map_err(|source| FileError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    /// Canonical text: objects indented, each sparse entry on one line.
    pub fn to_json(&self) -> String {
        let mut s = String::new();
        layout(&serde_json::to_value(self).expect("serializable"), 0, &mut s);
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> Result<(), FileError> {
        std::fs::write(path, self.to_json()).map_err(|source| FileError::Io {
            path: path.display().to_string(),
            source,
        })
    }

    /// Family metadata of this file or of the algebra it lives over.
    pub fn family_metadata(&self) -> Option<&FamilyJson> {
        self.family.as_ref().or_else(|| self.over.as_ref().and_then(|o| o.family.as_ref()))
    }
}

fn layout(v: &Value, indent: usize, out: &mut String) {
    let pad = |k: usize| "  ".repeat(k);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                layout(x, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                layout(x, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

/// Reads the field header into a prime field; checks `omega_order | p - 1`.
pub fn prime_field(fj: &FieldJson) -> Result<PrimeField, FileError> {
    match fj {
        FieldJson::Prime { p, omega_order } => {
            let f = PrimeField::new(*p)?;
            if let Some(k) = omega_order {
                if *k == 0 || (p - 1) % k != 0 {
                    return Err(FileError::Invalid(format!("F_{p} has no root of unity of order {k}")));
                }
            }
            Ok(f)
        }
        FieldJson::Rational => Err(FileError::Invalid("expected a prime field".into())),
    }
}

pub fn rational_field(fj: &FieldJson) -> Result<Rationals, FileError> {
    match fj {
        FieldJson::Rational => Ok(Rationals),
        FieldJson::Prime { .. } => Err(FileError::Invalid("expected the rational field".into())),
    }
}

fn same_field(a: &FieldJson, b: &FieldJson) -> bool {
    match (a, b) {
        (FieldJson::Rational, FieldJson::Rational) => true,
        (FieldJson::Prime { p, .. }, FieldJson::Prime { p: q, .. }) => p == q,
        _ => false,
    }
}

/// Reads and writes files over one field.
#[derive(Clone, Debug)]
pub struct Codec<F: Field> {
    field: F,
    header: FieldJson,
}

impl<F: Field> Codec<F> {
    pub fn new(field: F, header: FieldJson) -> Self {
        Codec { field, header }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn header(&self) -> &FieldJson {
        &self.header
    }

    pub fn check_field(&self, file: &AlgebraFile) -> Result<(), FileError> {
        if same_field(&self.header, &file.field) {
            Ok(())
        } else {
            Err(FileError::Invalid(format!("{}: field differs from {:?}", file.name, self.header)))
        }
    }

    pub fn scalar(&self, v: &Value) -> Result<F::Elem, FileError> {
        let text = match v {
            Value::String(s) => s.clone(),
            Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
            other => return Err(FileError::Invalid(format!("bad scalar {other}"))),
        };
        Ok(self.field.parse(&text)?)
    }

    fn entries(&self, what: &str, e: &Entries, bounds: &[usize]) -> Result<BTreeMap<Vec<usize>, F::Elem>, FileError> {
        let f = &self.field;
        let mut out: BTreeMap<Vec<usize>, F::Elem> = BTreeMap::new();
        for row in e {
            if row.len() != bounds.len() + 1 {
                return Err(FileError::Invalid(format!(
                    "{what}: entries need {} indices and a scalar",
                    bounds.len()
                )));
            }
            let mut idx = Vec::with_capacity(bounds.len());
            for (v, &b) in row.iter().zip(bounds) {
                let i = v
                    .as_u64()
                    .ok_or_else(|| FileError::Invalid(format!("{what}: bad index {v}")))? as usize;
                if i >= b {
                    return Err(FileError::Invalid(format!("{what}: index {i} out of range {b}")));
                }
                idx.push(i);
            }
            let s = self.scalar(&row[bounds.len()])?;
            let slot = out.entry(idx).or_insert_with(|| f.zero());
            *slot = f.add(slot, &s);
        }
        Ok(out)
    }

    fn required<'a>(file: &'a AlgebraFile, what: &str, e: &'a Option<Entries>) -> Result<&'a Entries, FileError> {
        e.as_ref()
            .ok_or_else(|| FileError::Invalid(format!("{}: missing `{what}`", file.name)))
    }

    pub fn algebra(&self, file: &AlgebraFile) -> Result<FDAlgebra<F>, FileError> {
        self.check_field(file)?;
        let n = file.dim;
        if n == 0 {
            return Err(FileError::Invalid("dim must be positive".into()));
        }
        let mut mult = Matrix::zeros(&self.field, n, n * n);
        for (idx, s) in self.entries("mult", &file.mult, &[n, n, n])? {
            mult.set(idx[2], idx[0] * n + idx[1], s);
        }
        let mut unit = vec![self.field.zero(); n];
        for (idx, s) in self.entries("unit", &file.unit, &[n])? {
            unit[idx[0]] = s;
        }
        Ok(FDAlgebra::new(mult, unit)?)
    }

    pub fn hopf(&self, file: &AlgebraFile) -> Result<FDHopf<F>, FileError> {
        let alg = self.algebra(file)?;
        let n = file.dim;
        let f = &self.field;
        let mut comult = Matrix::zeros(f, n * n, n);
        for (idx, s) in self.entries("comult", Self::required(file, "comult", &file.comult)?, &[n, n, n])? {
            comult.set(idx[1] * n + idx[2], idx[0], s);
        }
        let mut counit = Matrix::zeros(f, 1, n);
        for (idx, s) in self.entries("counit", Self::required(file, "counit", &file.counit)?, &[n])? {
            counit.set(0, idx[0], s);
        }
        let mut antipode = Matrix::zeros(f, n, n);
        for (idx, s) in self.entries("antipode", Self::required(file, "antipode", &file.antipode)?, &[n, n])? {
            antipode.set(idx[1], idx[0], s);
        }
        Ok(FDHopf::new(alg, FDCoalgebra::new(comult, counit)?, antipode)?)
    }

    /// `R` as a vector in `H (x) H`.
    pub fn rmatrix_element(&self, file: &AlgebraFile) -> Result<Vec<F::Elem>, FileError> {
        let n = file.dim;
        let mut r = vec![self.field.zero(); n * n];
        for (idx, s) in self.entries("rmatrix", Self::required(file, "rmatrix", &file.rmatrix)?, &[n, n])? {
            r[idx[0] * n + idx[1]] = s;
        }
        Ok(r)
    }

    /// The ambient category; plain vector spaces when `ambient` is absent.
    pub fn category(&self, file: &AlgebraFile) -> Result<Arc<Category<F>>, FileError> {
        match &file.ambient {
            None => Ok(Arc::new(Category::vect(&self.field))),
            Some(amb) => {
                let l = self.hopf(amb)?;
                let r = RMatrix::new(&l, self.rmatrix_element(amb)?)?;
                Ok(Arc::new(Category::new(l, r)?))
            }
        }
    }

    /// The `L`-module underlying `file`; trivial when `carrier` is absent.
    pub fn carrier(&self, file: &AlgebraFile, cat: &Category<F>) -> Result<Module<F>, FileError> {
        let n = file.dim;
        let ld = cat.hopf().dim();
        match &file.carrier {
            None => Ok(cat.trivial_object(n)),
            Some(e) => {
                let mut acts = vec![Matrix::zeros(&self.field, n, n); ld];
                for (idx, s) in self.entries("carrier", e, &[ld, n, n])? {
                    acts[idx[0]].set(idx[2], idx[1], s);
                }
                let m = Module::new(n, acts)?;
                cat.check_object(&m)?;
                Ok(m)
            }
        }
    }

    /// A Hopf algebra in its ambient category; no axioms are checked here.
    pub fn braided_hopf(&self, file: &AlgebraFile) -> Result<BraidedHopf<F>, FileError> {
        let cat = self.category(file)?;
        let h = self.hopf(file)?;
        let carrier = self.carrier(file, &cat)?;
        Ok(BraidedHopf::from_parts(cat, h, carrier)?)
    }

    /// The Hopf algebra a file lives over: `explicit` if given, else the nested `over`.
    pub fn over(&self, file: &AlgebraFile, explicit: Option<&AlgebraFile>) -> Result<BraidedHopf<F>, FileError> {
        match explicit.or(file.over.as_deref()) {
            Some(o) => self.braided_hopf(o),
            None => Err(FileError::Invalid(format!("{}: no Hopf algebra to work over", file.name))),
        }
    }

    pub fn module_algebra(&self, file: &AlgebraFile, h: &BraidedHopf<F>) -> Result<ModuleAlgebra<F>, FileError> {
        let algebra = self.algebra(file)?;
        let carrier = self.carrier(file, h.cat())?;
        let (n, hd) = (file.dim, h.dim());
        let mut action = Matrix::zeros(&self.field, n, hd * n);
        for (idx, s) in self.entries("action", Self::required(file, "action", &file.action)?, &[hd, n, n])? {
            action.set(idx[2], idx[0] * n + idx[1], s);
        }
        Ok(ModuleAlgebra { algebra, carrier, action })
    }

    pub fn comodule_algebra(&self, file: &AlgebraFile, h: &BraidedHopf<F>) -> Result<ComoduleAlgebra<F>, FileError> {
        let algebra = self.algebra(file)?;
        let carrier = self.carrier(file, h.cat())?;
        let (n, hd) = (file.dim, h.dim());
        let mut coaction = Matrix::zeros(&self.field, n * hd, n);
        for (idx, s) in self.entries("coaction", Self::required(file, "coaction", &file.coaction)?, &[n, n, hd])? {
            coaction.set(idx[1] * hd + idx[2], idx[0], s);
        }
        Ok(ComoduleAlgebra { algebra, carrier, coaction })
    }

    fn entry(&self, idx: &[usize], s: &F::Elem) -> Vec<Value> {
        let mut row: Vec<Value> = idx.iter().map(|&i| Value::from(i as u64)).collect();
        row.push(Value::String(self.field.format(s)));
        row
    }

    /// Nonzero entries of `m`, with `key(row, col)` giving the file indices;
    /// sorted so that output is canonical.
    fn emit_matrix(&self, m: &Matrix<F>, key: impl Fn(usize, usize) -> Vec<usize>) -> Entries {
        let mut rows: Vec<(Vec<usize>, F::Elem)> = Vec::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let v = m.get(i, j);
                if !self.field.is_zero(v) {
                    rows.push((key(i, j), v.clone()));
                }
            }
        }
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        rows.iter().map(|(k, v)| self.entry(k, v)).collect()
    }

    fn bare(&self, name: &str, a: &FDAlgebra<F>) -> AlgebraFile {
        let n = a.dim();
        let unit = a
            .unit()
            .iter()
            .enumerate()
            .filter(|(_, s)| !self.field.is_zero(s))
            .map(|(k, s)| self.entry(&[k], s))
            .collect();
        AlgebraFile {
            field: self.header.clone(),
            name: name.to_string(),
            dim: n,
            mult: self.emit_matrix(a.mult(), |k, c| vec![c / n, c % n, k]),
            unit,
            comult: None,
            counit: None,
            antipode: None,
            rmatrix: None,
            action: None,
            coaction: None,
            carrier: None,
            ambient: None,
            over: None,
            family: None,
            invariant: None,
        }
    }

    pub fn emit_algebra(&self, name: &str, a: &FDAlgebra<F>) -> AlgebraFile {
        self.bare(name, a)
    }

    pub fn emit_hopf(&self, name: &str, h: &FDHopf<F>) -> AlgebraFile {
        let n = h.dim();
        let mut file = self.bare(name, h.algebra());
        file.comult = Some(self.emit_matrix(h.comult(), |r, c| vec![c, r / n, r % n]));
        file.counit = Some(self.emit_matrix(h.counit(), |_, c| vec![c]));
        file.antipode = Some(self.emit_matrix(h.antipode(), |r, c| vec![c, r]));
        file
    }

    pub fn emit_rmatrix(&self, file: &mut AlgebraFile, r: &[F::Elem]) {
        let n = file.dim;
        let m = Matrix::from_fn(&self.field, 1, r.len(), |_, j| r[j].clone());
        file.rmatrix = Some(self.emit_matrix(&m, |_, c| vec![c / n, c % n]));
    }

    /// Attaches the category and the carrier, unless the category is plain vector spaces.
    fn place(&self, file: &mut AlgebraFile, cat: &Category<F>, carrier: &Module<F>) {
        if cat.is_vect() {
            return;
        }
        let mut amb = self.emit_hopf("L", cat.hopf());
        self.emit_rmatrix(&mut amb, cat.rmatrix().element());
        file.ambient = Some(Box::new(amb));
        file.carrier = Some(self.emit_carrier(carrier));
    }

    fn emit_carrier(&self, carrier: &Module<F>) -> Entries {
        let mut rows: Vec<(Vec<usize>, F::Elem)> = Vec::new();
        for (l, act) in carrier.actions().iter().enumerate() {
            for (j, col) in act.sparse_columns().into_iter().enumerate() {
                for (i, v) in col {
                    rows.push((vec![l, j, i], v));
                }
            }
        }
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        rows.iter().map(|(k, v)| self.entry(k, v)).collect()
    }

    pub fn emit_braided(&self, name: &str, b: &BraidedHopf<F>) -> AlgebraFile {
        let mut file = self.emit_hopf(name, b.hopf());
        self.place(&mut file, b.cat(), b.carrier());
        file
    }

    pub fn emit_comodule_algebra(&self, name: &str, a: &ComoduleAlgebra<F>, over: &AlgebraFile) -> AlgebraFile {
        let hd = over.dim;
        let mut file = self.bare(name, &a.algebra);
        file.coaction = Some(self.emit_matrix(&a.coaction, |r, c| vec![c, r / hd, r % hd]));
        if over.ambient.is_some() {
            file.carrier = Some(self.emit_carrier(&a.carrier));
        }
        file.over = Some(Box::new(over.clone()));
        file
    }

    pub fn emit_module_algebra(&self, name: &str, a: &ModuleAlgebra<F>, over: &AlgebraFile) -> AlgebraFile {
        let n = a.dim();
        let mut file = self.bare(name, &a.algebra);
        file.action = Some(self.emit_matrix(&a.action, |r, c| vec![c / n, c % n, r]));
        if over.ambient.is_some() {
            file.carrier = Some(self.emit_carrier(&a.carrier));
        }
        file.over = Some(Box::new(over.clone()));
        file
    }
}
