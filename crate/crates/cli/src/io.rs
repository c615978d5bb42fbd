//! Model files.
//!
//! A model file is a JSON object with a `kind` (`hmm`, `hqmm`, `vn` or `mps`),
//! an `alphabet` of symbol names, the hidden `dimension` (the bond dimension
//! for `mps`) and kind-specific matrices. Matrices are arrays of rows; an entry
//! is either a number or a `[re, im]` pair. Per-symbol data is an object keyed
//! by symbol name.
//!
//! | kind   | required                              | optional  |
//! |--------|---------------------------------------|-----------|
//! | `hmm`  | `transitions: {s: T_s}`               | `prior`   |
//! | `hqmm` | `kraus: {s: [K, ...]}`                | `initial` |
//! | `vn`   | `projectors: {s: P_s}`, `unitary`     | `initial` |
//! | `mps`  | `tensors: [V^0, ...]`, `projectors`   | `initial` |
//!
//! `name` and `source` are free-form metadata.
//!
//! ```json
//! {
//!   "kind": "hmm",
//!   "alphabet": ["0", "1"],
//!   "dimension": 2,
//!   "transitions": {
//!     "0": [[0.5, 0], [0, 0]],
//!     "1": [[0, 1], [0.5, 0]]
//!   }
//! }
//! ```

use std::fmt::Write as _;

use hqmm::algebra::Complex64;
use hqmm::mps::mps_to_hqmm;
use hqmm::quantum::vn_generator;
use hqmm::{Alphabet, ComplexMatrix, DensityMatrix, Error, HmmModel, HqmmModel, MpsModel, ProbVector, Result};
use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq)]
pub struct VnModel {
    pub projectors: Vec<ComplexMatrix>,
    pub unitary: ComplexMatrix,
    pub hqmm: HqmmModel,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Model {
    Hmm(HmmModel),
    Hqmm(HqmmModel),
    Vn(VnModel),
    Mps(MpsModel),
}

impl Model {
    pub fn kind(&self) -> &'static str {
        match self {
            Model::Hmm(_) => "hmm",
            Model::Hqmm(_) => "hqmm",
            Model::Vn(_) => "vn",
            Model::Mps(_) => "mps",
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Model::Hmm(m) => m.alphabet(),
            Model::Hqmm(m) => m.alphabet(),
            Model::Vn(m) => m.hqmm.alphabet(),
            Model::Mps(m) => m.alphabet(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Model::Hmm(m) => m.dim(),
            Model::Hqmm(m) => m.dim(),
            Model::Vn(m) => m.hqmm.dim(),
            Model::Mps(m) => m.bond_dim(),
        }
    }

    /// The HQMM realized by a quantum model; `None` for `hmm`.
    pub fn quantum(&self) -> Result<Option<HqmmModel>> {
        Ok(match self {
            Model::Hmm(_) => None,
            Model::Hqmm(m) => Some(m.clone()),
            Model::Vn(m) => Some(m.hqmm.clone()),
            Model::Mps(m) => Some(mps_to_hqmm(m)?),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModelFile {
    pub name: Option<String>,
    pub source: Option<String>,
    pub model: Model,
}

impl ModelFile {
    pub fn new(model: Model) -> Self {
        Self {
            name: None,
            source: None,
            model,
        }
    }
}

fn field_error(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Format(format!("field `{path}`: {msg}"))
}

struct Fields<'a> {
    obj: &'a Map<String, Value>,
}

impl<'a> Fields<'a> {
    fn get(&self, key: &str) -> Option<&'a Value> {
        self.obj.get(key)
    }

    fn require(&self, key: &str) -> Result<&'a Value> {
        self.get(key).ok_or_else(|| field_error(key, "missing"))
    }
}

fn as_array<'v>(v: &'v Value, path: &str) -> Result<&'v Vec<Value>> {
    v.as_array().ok_or_else(|| field_error(path, format!("expected an array, found {}", type_name(v))))
}

fn as_object<'v>(v: &'v Value, path: &str) -> Result<&'v Map<String, Value>> {
    v.as_object().ok_or_else(|| field_error(path, format!("expected an object, found {}", type_name(v))))
}

fn type_name(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

fn parse_real(v: &Value, path: &str) -> Result<f64> {
    v.as_f64().ok_or_else(|| field_error(path, format!("expected a number, found {}", type_name(v))))
}

fn parse_complex(v: &Value, path: &str) -> Result<Complex64> {
    match v {
        Value::Number(_) => Ok(Complex64::new(parse_real(v, path)?, 0.0)),
        Value::Array(pair) if pair.len() == 2 => Ok(Complex64::new(
            parse_real(&pair[0], &format!("{path}[0]"))?,
            parse_real(&pair[1], &format!("{path}[1]"))?,
        )),
        _ => Err(field_error(path, format!("expected a number or [re, im], found {}", type_name(v)))),
    }
}

fn parse_matrix(v: &Value, path: &str, shape: (usize, usize)) -> Result<ComplexMatrix> {
    let rows = as_array(v, path)?;
    if rows.len() != shape.0 {
        return Err(field_error(path, format!("expected {} rows, found {}", shape.0, rows.len())));
    }
    let mut data = Vec::with_capacity(shape.0 * shape.1);
    for (i, row) in rows.iter().enumerate() {
        let rpath = format!("{path}[{i}]");
        let row = as_array(row, &rpath)?;
        if row.len() != shape.1 {
            return Err(field_error(&rpath, format!("expected {} entries, found {}", shape.1, row.len())));
        }
        for (j, x) in row.iter().enumerate() {
            data.push(parse_complex(x, &format!("{rpath}[{j}]"))?);
        }
    }
    ComplexMatrix::from_row_major(shape.0, shape.1, data).map_err(|e| field_error(path, e))
}

/// Per-symbol object: every symbol present, nothing else.
fn per_symbol<'v>(v: &'v Value, path: &str, alphabet: &Alphabet) -> Result<Vec<(&'v Value, String)>> {
    let obj = as_object(v, path)?;
    for key in obj.keys() {
        if alphabet.index_of(key).is_err() {
            return Err(field_error(&format!("{path}.{key}"), "not a symbol of the alphabet"));
        }
    }
    alphabet
        .symbols()
        .iter()
        .map(|s| {
            let p = format!("{path}.{s}");
            obj.get(s).map(|x| (x, p.clone())).ok_or_else(|| field_error(&p, "missing"))
        })
        .collect()
}

fn parse_initial(f: &Fields, d: usize) -> Result<Option<DensityMatrix>> {
    f.get("initial")
        .map(|v| {
            let m = parse_matrix(v, "initial", (d, d))?;
            DensityMatrix::new(m).map_err(|e| field_error("initial", e))
        })
        .transpose()
}

const COMMON: [&str; 5] = ["kind", "name", "source", "alphabet", "dimension"];

/// Parses and validates a model file.
pub fn parse_model(text: &str) -> Result<ModelFile> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let obj = as_object(&root, "<root>")?;
    let f = Fields { obj };
    let kind = f
        .require("kind")?
        .as_str()
        .ok_or_else(|| field_error("kind", "expected a string"))?;
    let specific: &[&str] = match kind {
        "hmm" => &["transitions", "prior"],
        "hqmm" => &["kraus", "initial"],
        "vn" => &["projectors", "unitary", "initial"],
        "mps" => &["tensors", "projectors", "initial"],
        other => return Err(field_error("kind", format!("unknown model kind `{other}`"))),
    };
    for key in obj.keys() {
        if !COMMON.contains(&key.as_str()) && !specific.contains(&key.as_str()) {
            return Err(field_error(key, format!("unknown field for kind `{kind}`")));
        }
    }
    let meta = |key: &str| -> Result<Option<String>> {
        f.get(key)
            .map(|v| v.as_str().map(str::to_owned).ok_or_else(|| field_error(key, "expected a string")))
            .transpose()
    };
    let (name, source) = (meta("name")?, meta("source")?);

    let names = as_array(f.require("alphabet")?, "alphabet")?
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_str()
                .map(str::to_owned)
                .ok_or_else(|| field_error(&format!("alphabet[{i}]"), "expected a string"))
        })
        .collect::<Result<Vec<_>>>()?;
    let alphabet = Alphabet::new(names).map_err(|e| field_error("alphabet", e))?;
    let d = f
        .require("dimension")?
        .as_u64()
        .filter(|&d| d > 0)
        .ok_or_else(|| field_error("dimension", "expected a positive integer"))? as usize;

    let model = match kind {
        "hmm" => {
            let transitions = per_symbol(f.require("transitions")?, "transitions", &alphabet)?
                .into_iter()
                .map(|(v, p)| parse_matrix(v, &p, (d, d)))
                .collect::<Result<Vec<_>>>()?;
            let prior = f
                .get("prior")
                .map(|v| {
                    let xs = as_array(v, "prior")?;
                    if xs.len() != d {
                        return Err(field_error("prior", format!("expected {d} entries, found {}", xs.len())));
                    }
                    let p = xs
                        .iter()
                        .enumerate()
                        .map(|(i, x)| parse_real(x, &format!("prior[{i}]")))
                        .collect::<Result<Vec<_>>>()?;
                    ProbVector::new(p).map_err(|e| field_error("prior", e))
                })
                .transpose()?;
            Model::Hmm(HmmModel::new(alphabet, transitions, prior)?)
        }
        "hqmm" => {
            let ops = per_symbol(f.require("kraus")?, "kraus", &alphabet)?
                .into_iter()
                .map(|(v, p)| {
                    as_array(v, &p)?
                        .iter()
                        .enumerate()
                        .map(|(i, k)| parse_matrix(k, &format!("{p}[{i}]"), (d, d)))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let initial = parse_initial(&f, d)?;
            Model::Hqmm(HqmmModel::new(alphabet, d, ops, initial)?)
        }
        "vn" => {
            let projectors = per_symbol(f.require("projectors")?, "projectors", &alphabet)?
                .into_iter()
                .map(|(v, p)| parse_matrix(v, &p, (d, d)))
                .collect::<Result<Vec<_>>>()?;
            let unitary = parse_matrix(f.require("unitary")?, "unitary", (d, d))?;
            let initial = parse_initial(&f, d)?;
            let hqmm = vn_generator(&projectors, &unitary, alphabet)?.with_initial(initial)?;
            Model::Vn(VnModel {
                projectors,
                unitary,
                hqmm,
            })
        }
        "mps" => {
            let tensors_v = as_array(f.require("tensors")?, "tensors")?;
            if tensors_v.is_empty() {
                return Err(field_error("tensors", "no tensors"));
            }
            let tensors = tensors_v
                .iter()
                .enumerate()
                .map(|(i, v)| parse_matrix(v, &format!("tensors[{i}]"), (d, d)))
                .collect::<Result<Vec<_>>>()?;
            let phys = tensors.len();
            let projectors = per_symbol(f.require("projectors")?, "projectors", &alphabet)?
                .into_iter()
                .map(|(v, p)| parse_matrix(v, &p, (phys, phys)))
                .collect::<Result<Vec<_>>>()?;
            let initial = parse_initial(&f, d)?;
            Model::Mps(MpsModel::new(tensors, alphabet, projectors, initial)?)
        }
        _ => unreachable!("kind checked above"),
    };
    Ok(ModelFile { name, source, model })
}

fn write_number(out: &mut String, x: f64) {
    // Shortest exact representation; `-0` would reparse as an integer.
    if x == 0.0 && x.is_sign_negative() {
        out.push_str("-0.0");
    } else {
        write!(out, "{x}").unwrap();
    }
}

fn write_entry(out: &mut String, z: Complex64) {
    if z.im == 0.0 && !z.im.is_sign_negative() {
        write_number(out, z.re);
    } else {
        out.push('[');
        write_number(out, z.re);
        out.push_str(", ");
        write_number(out, z.im);
        out.push(']');
    }
}

fn write_matrix(out: &mut String, m: &ComplexMatrix, indent: usize) {
    let pad = " ".repeat(indent);
    out.push_str("[\n");
    for i in 0..m.rows() {
        out.push_str(&pad);
        out.push_str("  [");
        for j in 0..m.cols() {
            if j > 0 {
                out.push_str(", ");
            }
            write_entry(out, m[(i, j)]);
        }
        out.push(']');
        if i + 1 < m.rows() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str(&pad);
    out.push(']');
}

fn write_symbol_map<T>(out: &mut String, key: &str, alphabet: &Alphabet, items: &[T], mut f: impl FnMut(&mut String, &T)) {
    writeln!(out, "  {}: {{", json_string(key)).unwrap();
    for (s, item) in items.iter().enumerate() {
        write!(out, "    {}: ", json_string(alphabet.name(s))).unwrap();
        f(out, item);
        out.push_str(if s + 1 < items.len() { ",\n" } else { "\n" });
    }
    out.push_str("  }");
}

fn json_string(s: &str) -> String {
    Value::String(s.to_owned()).to_string()
}

/// Serializes a model in the layout accepted by [`parse_model`].
pub fn serialize_model(file: &ModelFile) -> String {
    let mut out = String::from("{\n");
    let mut fields: Vec<String> = Vec::new();
    fields.push(format!("  \"kind\": {}", json_string(file.model.kind())));
    if let Some(n) = &file.name {
        fields.push(format!("  \"name\": {}", json_string(n)));
    }
    if let Some(s) = &file.source {
        fields.push(format!("  \"source\": {}", json_string(s)));
    }
    let alphabet = file.model.alphabet();
    let names: Vec<String> = alphabet.symbols().iter().map(|s| json_string(s)).collect();
    fields.push(format!("  \"alphabet\": [{}]", names.join(", ")));
    fields.push(format!("  \"dimension\": {}", file.model.dim()));

    let mut push = |f: &dyn Fn(&mut String)| {
        let mut s = String::new();
        f(&mut s);
        fields.push(s);
    };
    let initial_field = |s: &mut String, rho: &DensityMatrix| {
        s.push_str("  \"initial\": ");
        write_matrix(s, rho.matrix(), 2);
    };
    match &file.model {
        Model::Hmm(m) => {
            push(&|s| write_symbol_map(s, "transitions", alphabet, m.transitions(), |s, t| write_matrix(s, t, 4)));
            if let Some(p) = m.prior() {
                push(&|s| {
                    s.push_str("  \"prior\": [");
                    for (i, x) in p.entries().iter().enumerate() {
                        if i > 0 {
                            s.push_str(", ");
                        }
                        write_number(s, *x);
                    }
                    s.push(']');
                });
            }
        }
        Model::Hqmm(m) => {
            push(&|s| {
                write_symbol_map(s, "kraus", alphabet, m.operations(), |s, ops| {
                    s.push_str("[\n");
                    for (i, k) in ops.iter().enumerate() {
                        s.push_str("      ");
                        write_matrix(s, k, 6);
                        s.push_str(if i + 1 < ops.len() { ",\n" } else { "\n" });
                    }
                    s.push_str("    ]");
                })
            });
            if let Some(rho) = m.initial() {
                push(&|s| initial_field(s, rho));
            }
        }
        Model::Vn(m) => {
            push(&|s| write_symbol_map(s, "projectors", alphabet, &m.projectors, |s, p| write_matrix(s, p, 4)));
            push(&|s| {
                s.push_str("  \"unitary\": ");
                write_matrix(s, &m.unitary, 2);
            });
            if let Some(rho) = m.hqmm.initial() {
                push(&|s| initial_field(s, rho));
            }
        }
        Model::Mps(m) => {
            push(&|s| {
                s.push_str("  \"tensors\": [\n");
                for (i, v) in m.tensors().iter().enumerate() {
                    s.push_str("    ");
                    write_matrix(s, v, 4);
                    s.push_str(if i + 1 < m.tensors().len() { ",\n" } else { "\n" });
                }
                s.push_str("  ]");
            });
            push(&|s| write_symbol_map(s, "projectors", alphabet, m.projectors(), |s, p| write_matrix(s, p, 4)));
            if let Some(rho) = m.initial() {
                push(&|s| initial_field(s, rho));
            }
        }
    }
    out.push_str(&fields.join(",\n"));
    out.push_str("\n}\n");
    out
}
