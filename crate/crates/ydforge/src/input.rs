//! The JSON input format.
//!
//! A document fixes one ground field and defines named structures by their
//! structure-constant matrices. Matrices are row-major arrays of scalar
//! strings. A map `V -> W` is a `dim W x dim V` matrix whose column `j` is the
//! image of basis vector `j`. Tensor bases are ordered lexicographically:
//! `eᵢ ⊗ fⱼ` has index `i * dim W + j`.
//!
//! | structure | matrices |
//! |---|---|
//! | algebra (n) | `mult`: n x n², `unit`: n x 1 |
//! | Hopf algebra (n) | algebra plus `comult`: n² x n, `counit`: 1 x n, optional `antipode`: n x n |
//! | automorphism of `hopf` | `matrix`: n x n |
//! | (H, K)-bicomodule algebra (a) | `mult`, `unit`, `left`: (h·a) x a, `right`: (a·k) x a |
//! | (K, H)-bimodule coalgebra (c) | `comult`, `counit`, `left`: c x (k·c), `right`: c x (c·h) |
//! | YD datum | `algebra` and `coalgebra` by name |
//! | YD module (m) over a datum | `action`: m x (a·m), `coaction`: (m·c) x m |
//! | half-braid (m) over a datum | `action`, `component`: (m·c) x (h·m), the braiding with `H` |

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use ydforge_core::hopf::{Algebra, Bialgebra, Coalgebra};
use ydforge_core::rep::{BicomoduleAlgebra, BimoduleCoalgebra};
use ydforge_core::yd::{HalfBraid, YdDatum, YdModule};
use ydforge_core::{FieldSpec, Matrix};

pub const SCHEMA_VERSION: u32 = 1;

/// An input error located by a JSON pointer into the document.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{}: {message}", if pointer.is_empty() { "(document)" } else { pointer.as_str() })]
pub struct InputError {
    pub pointer: String,
    pub message: String,
}

impl InputError {
    pub fn new(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        InputError {
            pointer: pointer.into(),
            message: message.into(),
        }
    }
}

pub type RawMatrix = Vec<Vec<String>>;

macro_rules! structure {
    ($(#[$doc:meta])* $name:ident { refs: [$($r:ident),*], mats: [$($m:ident),*] $(, opt: [$($o:ident),*])? }) => {
        $(#[$doc])*
        #[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
        #[serde(deny_unknown_fields)]
        pub struct $name<M = Matrix> {
            $(pub $r: String,)*
            $(pub $m: M,)*
            $($(#[serde(default, skip_serializing_if = "Option::is_none")] pub $o: Option<M>,)*)?
        }

        impl<M> $name<M> {
            fn try_map<N, E>(self, mut f: impl FnMut(&'static str, M) -> Result<N, E>) -> Result<$name<N>, E> {
                Ok($name {
                    $($r: self.$r,)*
                    $($m: f(stringify!($m), self.$m)?,)*
                    $($($o: match self.$o { Some(x) => Some(f(stringify!($o), x)?), None => None },)*)?
                })
            }

            fn map_ref<N>(&self, mut f: impl FnMut(&M) -> N) -> $name<N> {
                $name {
                    $($r: self.$r.clone(),)*
                    $($m: f(&self.$m),)*
                    $($($o: self.$o.as_ref().map(&mut f),)*)?
                }
            }
        }
    };
}

structure!(AlgebraDef {
    refs: [],
    mats: [mult, unit]
});
structure!(HopfDef {
    refs: [],
    mats: [mult, unit, comult, counit],
    opt: [antipode]
});
structure!(AutomorphismDef {
    refs: [hopf],
    mats: [matrix]
});
structure!(BicomoduleAlgebraDef {
    refs: [h, k],
    mats: [mult, unit, left, right]
});
structure!(BimoduleCoalgebraDef {
    refs: [k, h],
    mats: [comult, counit, left, right]
});
structure!(YdModuleDef {
    refs: [datum],
    mats: [action, coaction]
});
structure!(HalfBraidDef {
    refs: [datum],
    mats: [action, component]
});

/// A YD datum `(H, K, A, C)`, with `H` and `K` read off `A` and `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct YdDatumDef {
    pub algebra: String,
    pub coalgebra: String,
}

/// `"rationals"` or `{"prime_field": p}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum RawField {
    Named(String),
    Prime { prime_field: u64 },
}

/// The whole document, generic over how the field and the matrices are held.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document<F, M> {
    pub schema_version: u32,
    pub field: F,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraDef<M>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub hopf_algebras: BTreeMap<String, HopfDef<M>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub automorphisms: BTreeMap<String, AutomorphismDef<M>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bicomodule_algebras: BTreeMap<String, BicomoduleAlgebraDef<M>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bimodule_coalgebras: BTreeMap<String, BimoduleCoalgebraDef<M>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub yd_data: BTreeMap<String, YdDatumDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub yd_modules: BTreeMap<String, YdModuleDef<M>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub half_braids: BTreeMap<String, HalfBraidDef<M>>,
}

/// A parsed document: every reference resolves and every matrix has the
/// shape its structure requires.
pub type InputDocument = Document<FieldSpec, Matrix>;

impl InputDocument {
    pub fn new(field: FieldSpec) -> Self {
        Document {
            schema_version: SCHEMA_VERSION,
            field,
            algebras: BTreeMap::new(),
            hopf_algebras: BTreeMap::new(),
            automorphisms: BTreeMap::new(),
            bicomodule_algebras: BTreeMap::new(),
            bimodule_coalgebras: BTreeMap::new(),
            yd_data: BTreeMap::new(),
            yd_modules: BTreeMap::new(),
            half_braids: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let raw_matrix = |m: &Matrix| -> RawMatrix {
            (0..m.rows())
                .map(|i| m.row(i).iter().map(ToString::to_string).collect())
                .collect()
        };
        let field = match self.field {
            FieldSpec::Rationals => RawField::Named("rationals".into()),
            FieldSpec::PrimeField(p) => RawField::Prime { prime_field: p },
        };
        let raw = Document {
            schema_version: self.schema_version,
            field,
            algebras: map_section(&self.algebras, |d| d.map_ref(raw_matrix)),
            hopf_algebras: map_section(&self.hopf_algebras, |d| d.map_ref(raw_matrix)),
            automorphisms: map_section(&self.automorphisms, |d| d.map_ref(raw_matrix)),
            bicomodule_algebras: map_section(&self.bicomodule_algebras, |d| d.map_ref(raw_matrix)),
            bimodule_coalgebras: map_section(&self.bimodule_coalgebras, |d| d.map_ref(raw_matrix)),
            yd_data: self.yd_data.clone(),
            yd_modules: map_section(&self.yd_modules, |d| d.map_ref(raw_matrix)),
            half_braids: map_section(&self.half_braids, |d| d.map_ref(raw_matrix)),
        };
        let value = serde_json::to_value(&raw).expect("plain data serializes");
        let mut out = String::new();
        write_compact_rows(&value, 0, &mut out);
        out.push('\n');
        out
    }

    /// Instantiates the library objects. Hopf algebras sharing a name share
    /// one `Arc`, so their antipodes are computed once.
    pub fn build(&self) -> Structures {
        let hopf: BTreeMap<String, Arc<Bialgebra>> = self
            .hopf_algebras
            .iter()
            .map(|(name, d)| {
                let algebra =
                    Algebra::new(d.mult.clone(), d.unit.clone()).expect("validated shapes");
                let coalgebra =
                    Coalgebra::new(d.comult.clone(), d.counit.clone()).expect("validated shapes");
                (
                    name.clone(),
                    Arc::new(Bialgebra::new(algebra, coalgebra).expect("validated shapes")),
                )
            })
            .collect();
        let algebras = self
            .algebras
            .iter()
            .map(|(name, d)| {
                (
                    name.clone(),
                    Algebra::new(d.mult.clone(), d.unit.clone()).expect("validated shapes"),
                )
            })
            .collect();
        let bicomodule_algebras: BTreeMap<String, BicomoduleAlgebra> = self
            .bicomodule_algebras
            .iter()
            .map(|(name, d)| {
                let algebra =
                    Algebra::new(d.mult.clone(), d.unit.clone()).expect("validated shapes");
                let a = BicomoduleAlgebra::new(
                    hopf[&d.h].clone(),
                    hopf[&d.k].clone(),
                    algebra,
                    d.left.clone(),
                    d.right.clone(),
                );
                (name.clone(), a.expect("validated shapes"))
            })
            .collect();
        let bimodule_coalgebras: BTreeMap<String, BimoduleCoalgebra> = self
            .bimodule_coalgebras
            .iter()
            .map(|(name, d)| {
                let coalgebra =
                    Coalgebra::new(d.comult.clone(), d.counit.clone()).expect("validated shapes");
                let c = BimoduleCoalgebra::new(
                    hopf[&d.k].clone(),
                    hopf[&d.h].clone(),
                    coalgebra,
                    d.left.clone(),
                    d.right.clone(),
                );
                (name.clone(), c.expect("validated shapes"))
            })
            .collect();
        let data: BTreeMap<String, Arc<YdDatum>> = self
            .yd_data
            .iter()
            .map(|(name, d)| {
                let datum = YdDatum::new(
                    bicomodule_algebras[&d.algebra].clone(),
                    bimodule_coalgebras[&d.coalgebra].clone(),
                );
                (name.clone(), Arc::new(datum.expect("validated references")))
            })
            .collect();
        let yd_modules = self
            .yd_modules
            .iter()
            .map(|(name, d)| {
                let m = YdModule::new(
                    data[&d.datum].clone(),
                    d.action.rows(),
                    d.action.clone(),
                    d.coaction.clone(),
                );
                (name.clone(), m.expect("validated shapes"))
            })
            .collect();
        let half_braids = self
            .half_braids
            .iter()
            .map(|(name, d)| {
                let hb = HalfBraid {
                    datum: data[&d.datum].clone(),
                    action: d.action.clone(),
                    component: d.component.clone(),
                };
                (name.clone(), hb)
            })
            .collect();
        Structures {
            algebras,
            hopf,
            bicomodule_algebras,
            bimodule_coalgebras,
            data,
            yd_modules,
            half_braids,
        }
    }
}

/// Library objects instantiated from an [`InputDocument`].
#[derive(Clone, Debug)]
pub struct Structures {
    pub algebras: BTreeMap<String, Algebra>,
    pub hopf: BTreeMap<String, Arc<Bialgebra>>,
    pub bicomodule_algebras: BTreeMap<String, BicomoduleAlgebra>,
    pub bimodule_coalgebras: BTreeMap<String, BimoduleCoalgebra>,
    pub data: BTreeMap<String, Arc<YdDatum>>,
    pub yd_modules: BTreeMap<String, YdModule>,
    pub half_braids: BTreeMap<String, HalfBraid>,
}

/// Pretty-prints JSON with each matrix row on a single line.
fn write_compact_rows(v: &serde_json::Value, indent: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_compact_rows(x, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_compact_rows(x, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn map_section<A, B>(section: &BTreeMap<String, A>, f: impl Fn(&A) -> B) -> BTreeMap<String, B> {
    section.iter().map(|(k, v)| (k.clone(), f(v))).collect()
}

/// Escapes one JSON pointer reference token.
pub fn pointer_token(s: &str) -> String {
    s.replace('~', "~0").replace('/', "~1")
}

fn join(base: &str, token: impl fmt::Display) -> String {
    format!("{base}/{}", pointer_token(&token.to_string()))
}

/// Parses and validates a UTF-8 JSON document, stopping at the first error.
pub fn parse_input(bytes: &[u8]) -> Result<InputDocument, InputError> {
    let text =
        std::str::from_utf8(bytes).map_err(|e| InputError::new("", format!("not UTF-8: {e}")))?;
    let mut de = serde_json::Deserializer::from_str(text);
    let raw: Document<RawField, RawMatrix> =
        serde_path_to_error::deserialize(&mut de).map_err(|e| {
            let pointer = path_pointer(e.path());
            let inner = e.into_inner();
            InputError::new(pointer, inner.to_string())
        })?;
    de.end().map_err(|e| InputError::new("", e.to_string()))?;
    validate(raw)
}

fn path_pointer(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        match seg {
            Segment::Seq { index } => out = join(&out, index),
            Segment::Map { key } => out = join(&out, key),
            Segment::Enum { variant } => out = join(&out, variant),
            Segment::Unknown => {}
        }
    }
    out
}

fn validate(raw: Document<RawField, RawMatrix>) -> Result<InputDocument, InputError> {
    if raw.schema_version != SCHEMA_VERSION {
        return Err(InputError::new(
            "/schema_version",
            format!(
                "unsupported schema version {} (expected {SCHEMA_VERSION})",
                raw.schema_version
            ),
        ));
    }
    let field = match raw.field {
        RawField::Named(s) if s == "rationals" => FieldSpec::Rationals,
        RawField::Named(s) => {
            return Err(InputError::new("/field", format!("unknown field {s:?}")))
        }
        RawField::Prime { prime_field } => FieldSpec::prime(prime_field)
            .map_err(|e| InputError::new("/field/prime_field", e.to_string()))?,
    };
    let p = Parser { field };
    let mut doc = InputDocument::new(field);

    for (name, def) in raw.algebras {
        let at = join("/algebras", &name);
        let def = def.try_map(|key, m| p.matrix(&join(&at, key), m))?;
        let n = def.unit.rows();
        p.shape(&at, "unit", &def.unit, n, 1)?;
        p.shape(&at, "mult", &def.mult, n, n * n)?;
        doc.algebras.insert(name, def);
    }
    for (name, def) in raw.hopf_algebras {
        let at = join("/hopf_algebras", &name);
        let def = def.try_map(|key, m| p.matrix(&join(&at, key), m))?;
        let n = def.unit.rows();
        p.shape(&at, "unit", &def.unit, n, 1)?;
        p.shape(&at, "mult", &def.mult, n, n * n)?;
        p.shape(&at, "comult", &def.comult, n * n, n)?;
        p.shape(&at, "counit", &def.counit, 1, n)?;
        if let Some(s) = &def.antipode {
            p.shape(&at, "antipode", s, n, n)?;
        }
        doc.hopf_algebras.insert(name, def);
    }
    let hopf_dim =
        |doc: &InputDocument, at: &str, key: &str, name: &str| -> Result<usize, InputError> {
            doc.hopf_algebras
                .get(name)
                .map(|d| d.unit.rows())
                .ok_or_else(|| {
                    InputError::new(join(at, key), format!("unknown Hopf algebra {name:?}"))
                })
        };
    for (name, def) in raw.automorphisms {
        let at = join("/automorphisms", &name);
        let n = hopf_dim(&doc, &at, "hopf", &def.hopf)?;
        let def = def.try_map(|key, m| p.matrix(&join(&at, key), m))?;
        p.shape(&at, "matrix", &def.matrix, n, n)?;
        doc.automorphisms.insert(name, def);
    }
    for (name, def) in raw.bicomodule_algebras {
        let at = join("/bicomodule_algebras", &name);
        let h = hopf_dim(&doc, &at, "h", &def.h)?;
        let k = hopf_dim(&doc, &at, "k", &def.k)?;
        let def = def.try_map(|key, m| p.matrix(&join(&at, key), m))?;
        let n = def.unit.rows();
        p.shape(&at, "unit", &def.unit, n, 1)?;
        p.shape(&at, "mult", &def.mult, n, n * n)?;
        p.shape(&at, "left", &def.left, h * n, n)?;
        p.shape(&at, "right", &def.right, n * k, n)?;
        doc.bicomodule_algebras.insert(name, def);
    }
    for (name, def) in raw.bimodule_coalgebras {
        let at = join("/bimodule_coalgebras", &name);
        let k = hopf_dim(&doc, &at, "k", &def.k)?;
        let h = hopf_dim(&doc, &at, "h", &def.h)?;
        let def = def.try_map(|key, m| p.matrix(&join(&at, key), m))?;
        let n = def.counit.cols();
        p.shape(&at, "counit", &def.counit, 1, n)?;
        p.shape(&at, "comult", &def.comult, n * n, n)?;
        p.shape(&at, "left", &def.left, n, k * n)?;
        p.shape(&at, "right", &def.right, n, n * h)?;
        doc.bimodule_coalgebras.insert(name, def);
    }
    for (name, def) in raw.yd_data {
        let at = join("/yd_data", &name);
        let a = doc.bicomodule_algebras.get(&def.algebra).ok_or_else(|| {
            InputError::new(
                join(&at, "algebra"),
                format!("unknown bicomodule algebra {:?}", def.algebra),
            )
        })?;
        let c = doc.bimodule_coalgebras.get(&def.coalgebra).ok_or_else(|| {
            InputError::new(
                join(&at, "coalgebra"),
                format!("unknown bimodule coalgebra {:?}", def.coalgebra),
            )
        })?;
        if a.h != c.h || a.k != c.k {
            return Err(InputError::new(
                join(&at, "coalgebra"),
                format!(
                    "the algebra is over ({}, {}) but the coalgebra is over ({}, {})",
                    a.h, a.k, c.k, c.h
                ),
            ));
        }
        doc.yd_data.insert(
            name,
            YdDatumDef {
                algebra: def.algebra,
                coalgebra: def.coalgebra,
            },
        );
    }
    let datum_dims =
        |doc: &InputDocument, at: &str, name: &str| -> Result<(usize, usize, usize), InputError> {
            let d = doc.yd_data.get(name).ok_or_else(|| {
                InputError::new(join(at, "datum"), format!("unknown YD datum {name:?}"))
            })?;
            let a = &doc.bicomodule_algebras[&d.algebra];
            let c = &doc.bimodule_coalgebras[&d.coalgebra];
            Ok((
                doc.hopf_algebras[&a.h].unit.rows(),
                a.unit.rows(),
                c.counit.cols(),
            ))
        };
    for (name, def) in raw.yd_modules {
        let at = join("/yd_modules", &name);
        let (_, a, c) = datum_dims(&doc, &at, &def.datum)?;
        let def = def.try_map(|key, m| p.matrix(&join(&at, key), m))?;
        let m = def.action.rows();
        p.shape(&at, "action", &def.action, m, a * m)?;
        p.shape(&at, "coaction", &def.coaction, m * c, m)?;
        doc.yd_modules.insert(name, def);
    }
    for (name, def) in raw.half_braids {
        let at = join("/half_braids", &name);
        let (h, a, c) = datum_dims(&doc, &at, &def.datum)?;
        let def = def.try_map(|key, m| p.matrix(&join(&at, key), m))?;
        let m = def.action.rows();
        p.shape(&at, "action", &def.action, m, a * m)?;
        p.shape(&at, "component", &def.component, m * c, h * m)?;
        doc.half_braids.insert(name, def);
    }
    Ok(doc)
}

struct Parser {
    field: FieldSpec,
}

impl Parser {
    fn matrix(&self, at: &str, raw: RawMatrix) -> Result<Matrix, InputError> {
        let rows = raw.len();
        let cols = raw.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(InputError::new(at, "empty matrix"));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for (i, row) in raw.into_iter().enumerate() {
            if row.len() != cols {
                return Err(InputError::new(
                    join(at, i),
                    format!("row has {} entries, expected {cols}", row.len()),
                ));
            }
            for (j, s) in row.iter().enumerate() {
                let x = self
                    .field
                    .parse(s)
                    .map_err(|e| InputError::new(join(&join(at, i), j), e.to_string()))?;
                data.push(x);
            }
        }
        Ok(Matrix::from_rows(self.field, rows, cols, data).expect("rectangular"))
    }

    fn shape(
        &self,
        at: &str,
        key: &str,
        m: &Matrix,
        rows: usize,
        cols: usize,
    ) -> Result<(), InputError> {
        if m.shape() != (rows, cols) {
            let (r, c) = m.shape();
            return Err(InputError::new(
                join(at, key),
                format!("dimension mismatch: matrix is {r}x{c}, expected {rows}x{cols}"),
            ));
        }
        Ok(())
    }
}
