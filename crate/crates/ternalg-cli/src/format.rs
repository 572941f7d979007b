//! JSON structure files.
//!
//! Indices are 1-based, scalars are strings in the literal grammar of
//! [`QuadScalar::parse`], and omitted entries are zero. Serialization is
//! canonical: entries sorted by index, zero entries dropped, scalars in
//! canonical form.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use ternalg::{
    BihomModule, MatchedPairData, Matrix, QuadScalar, Tensor4, TernaryAlgebra, TernaryBialgebra,
    TernaryCoalgebra, TrimoduleActions,
};

use crate::error::CliError;

type Rows = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub args: [usize; 3],
    pub out: BTreeMap<usize, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoproductTerm {
    pub into: [usize; 3],
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoproductEntry {
    pub arg: usize,
    pub out: Vec<CoproductTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radicand: Option<u32>,
    pub mu: Vec<ProductEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha1: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha2: Option<Rows>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radicand: Option<u32>,
    pub delta: Vec<CoproductEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha1: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha2: Option<Rows>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radicand: Option<u32>,
    pub mu: Vec<ProductEntry>,
    pub delta: Vec<CoproductEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha1: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha2: Option<Rows>,
}

/// Left, middle and right actions; `args` follow the stored slot order
/// `(a, a, v)`, `(a, v, a)` and `(v, a, a)`, `out` indexes the module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionsRepr {
    #[serde(rename = "L", default)]
    pub left: Vec<ProductEntry>,
    #[serde(rename = "M", default)]
    pub middle: Vec<ProductEntry>,
    #[serde(rename = "R", default)]
    pub right: Vec<ProductEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub dim: usize,
    pub dim_v: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radicand: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta1: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta2: Option<Rows>,
    #[serde(rename = "L", default)]
    pub left: Vec<ProductEntry>,
    #[serde(rename = "M", default)]
    pub middle: Vec<ProductEntry>,
    #[serde(rename = "R", default)]
    pub right: Vec<ProductEntry>,
}

/// `act_a` is `a` acting on `b`, `act_b` the reverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchedPairRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radicand: Option<u32>,
    pub a: AlgebraRepr,
    pub b: AlgebraRepr,
    pub act_a: ActionsRepr,
    pub act_b: ActionsRepr,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radicand: Option<u32>,
    pub matrix: Rows,
}

/// The per-kind records; each carries its own `kind` field.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum FileRepr {
    Algebra(AlgebraRepr),
    Coalgebra(CoalgebraRepr),
    Bialgebra(BialgebraRepr),
    Module(ModuleRepr),
    MatchedPair(MatchedPairRepr),
    Map(MapRepr),
}

/// A module together with the actions of an algebra of dimension `dim_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleData {
    pub module: BihomModule,
    pub actions: TrimoduleActions,
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Algebra(TernaryAlgebra),
    Coalgebra(TernaryCoalgebra),
    Bialgebra(TernaryBialgebra),
    Module(ModuleData),
    MatchedPair(MatchedPairData),
    Map(Matrix),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Algebra(_) => "algebra",
            Structure::Coalgebra(_) => "coalgebra",
            Structure::Bialgebra(_) => "bialgebra",
            Structure::Module(_) => "module",
            Structure::MatchedPair(_) => "matched_pair",
            Structure::Map(_) => "map",
        }
    }
}

fn format_err(msg: impl Into<String>) -> CliError {
    CliError::Format(msg.into())
}

/// Reads a structure file.
pub fn parse(text: &str) -> Result<Structure, CliError> {
    #[derive(Deserialize)]
    struct Peek {
        kind: String,
    }
    let kind = json::<Peek>(text)?.kind;
    let repr = match kind.as_str() {
        "algebra" => FileRepr::Algebra(json(text)?),
        "coalgebra" => FileRepr::Coalgebra(json(text)?),
        "bialgebra" => FileRepr::Bialgebra(json(text)?),
        "module" => FileRepr::Module(json(text)?),
        "matched_pair" => FileRepr::MatchedPair(json(text)?),
        "map" => FileRepr::Map(json(text)?),
        other => return Err(format_err(format!("unknown kind {other:?}"))),
    };
    from_repr(&repr)
}

fn json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Json {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })
}

fn kind(k: &str) -> Option<String> {
    Some(k.to_string())
}

/// Writes a structure file in canonical form.
pub fn serialize(s: &Structure) -> String {
    let value = serde_json::to_value(to_repr(s)).expect("structure files are plain JSON");
    let mut out = String::new();
    write_value(&mut out, &value, 0);
    out.push('\n');
    out
}

fn radicand(r: Option<u32>) -> Result<u32, CliError> {
    let d = r.unwrap_or(1);
    ternalg::scalar::check_radicand(d).map_err(CliError::Library)
}

fn scalar(s: &str, d: u32, at: &str) -> Result<QuadScalar, CliError> {
    QuadScalar::parse(s, d).map_err(|e| format_err(format!("{at}: {e}")))
}

fn index(i: usize, extent: usize, at: &str) -> Result<usize, CliError> {
    if i == 0 || i > extent {
        return Err(format_err(format!("{at}: index {i} outside 1..={extent}")));
    }
    Ok(i - 1)
}

fn matrix(rows: &Option<Rows>, n: usize, d: u32, at: &str) -> Result<Matrix, CliError> {
    let Some(rows) = rows else {
        return Ok(Matrix::identity(n, d));
    };
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(format_err(format!("{at}: expected a {n}x{n} row list")));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(k, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| scalar(x, d, &format!("{at}[{}][{}]", k + 1, j + 1)))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(rows, d).map_err(CliError::Library)
}

fn products(entries: &[ProductEntry], dims: [usize; 4], d: u32, at: &str) -> Result<Tensor4, CliError> {
    let mut t = Tensor4::zeros(dims, d);
    let mut seen = std::collections::BTreeSet::new();
    for (n, e) in entries.iter().enumerate() {
        let here = format!("{at}[{n}]");
        if !seen.insert(e.args) {
            return Err(format_err(format!("{here}: duplicate entry for args {:?}", e.args)));
        }
        let [i, j, k] = e.args;
        let (i, j, k) = (
            index(i, dims[1], &here)?,
            index(j, dims[2], &here)?,
            index(k, dims[3], &here)?,
        );
        for (&o, x) in &e.out {
            let o = index(o, dims[0], &here)?;
            t.set(o, i, j, k, scalar(x, d, &format!("{here}.out.{}", o + 1))?);
        }
    }
    Ok(t)
}

fn coproducts(entries: &[CoproductEntry], n: usize, d: u32) -> Result<Tensor4, CliError> {
    let mut t = Tensor4::cube(n, d);
    let mut seen = std::collections::BTreeSet::new();
    for (p, e) in entries.iter().enumerate() {
        let here = format!("delta[{p}]");
        let l = index(e.arg, n, &here)?;
        for term in &e.out {
            if !seen.insert((e.arg, term.into)) {
                return Err(format_err(format!(
                    "{here}: duplicate term {:?} for arg {}",
                    term.into, e.arg
                )));
            }
            let [r, s, u] = term.into;
            let (r, s, u) = (index(r, n, &here)?, index(s, n, &here)?, index(u, n, &here)?);
            t.set(l, r, s, u, scalar(&term.coeff, d, &here)?);
        }
    }
    Ok(t)
}

fn algebra(a: &AlgebraRepr, d: u32) -> Result<TernaryAlgebra, CliError> {
    if let Some(k) = a.kind.as_deref().filter(|&k| k != "algebra") {
        return Err(format_err(format!("expected kind \"algebra\", found {k:?}")));
    }
    let n = a.dim;
    let mu = products(&a.mu, [n; 4], d, "mu")?;
    let alpha1 = matrix(&a.alpha1, n, d, "alpha1")?;
    let alpha2 = matrix(&a.alpha2, n, d, "alpha2")?;
    TernaryAlgebra::new(mu, alpha1, alpha2).map_err(CliError::Library)
}

fn actions(r: &ActionsRepr, a: usize, v: usize, d: u32) -> Result<TrimoduleActions, CliError> {
    TrimoduleActions::new(
        products(&r.left, [v, a, a, v], d, "L")?,
        products(&r.middle, [v, a, v, a], d, "M")?,
        products(&r.right, [v, v, a, a], d, "R")?,
    )
    .map_err(CliError::Library)
}

fn nested_radicand(inner: Option<u32>, d: u32, what: &str) -> Result<(), CliError> {
    match inner {
        Some(x) if x != d => Err(format_err(format!(
            "{what}: radicand {x} differs from the file radicand {d}"
        ))),
        _ => Ok(()),
    }
}

pub fn from_repr(repr: &FileRepr) -> Result<Structure, CliError> {
    Ok(match repr {
        FileRepr::Algebra(a) => Structure::Algebra(algebra(a, radicand(a.radicand)?)?),
        FileRepr::Coalgebra(c) => {
            let d = radicand(c.radicand)?;
            let n = c.dim;
            let delta = coproducts(&c.delta, n, d)?;
            let c = TernaryCoalgebra::new(
                delta,
                matrix(&c.alpha1, n, d, "alpha1")?,
                matrix(&c.alpha2, n, d, "alpha2")?,
            );
            Structure::Coalgebra(c.map_err(CliError::Library)?)
        }
        FileRepr::Bialgebra(b) => {
            let d = radicand(b.radicand)?;
            let n = b.dim;
            let alpha1 = matrix(&b.alpha1, n, d, "alpha1")?;
            let alpha2 = matrix(&b.alpha2, n, d, "alpha2")?;
            let mu = products(&b.mu, [n; 4], d, "mu")?;
            let delta = coproducts(&b.delta, n, d)?;
            let alg = TernaryAlgebra::new(mu, alpha1.clone(), alpha2.clone());
            let coalg = TernaryCoalgebra::new(delta, alpha1, alpha2);
            let b = TernaryBialgebra::new(alg.map_err(CliError::Library)?, coalg.map_err(CliError::Library)?);
            Structure::Bialgebra(b.map_err(CliError::Library)?)
        }
        FileRepr::Module(m) => {
            let d = radicand(m.radicand)?;
            let module = BihomModule::new(
                matrix(&m.beta1, m.dim_v, d, "beta1")?,
                matrix(&m.beta2, m.dim_v, d, "beta2")?,
            )
            .map_err(CliError::Library)?;
            let acts = ActionsRepr {
                left: m.left.clone(),
                middle: m.middle.clone(),
                right: m.right.clone(),
            };
            let actions = actions(&acts, m.dim, m.dim_v, d)?;
            Structure::Module(ModuleData { module, actions })
        }
        FileRepr::MatchedPair(p) => {
            let d = radicand(p.radicand)?;
            nested_radicand(p.a.radicand, d, "a")?;
            nested_radicand(p.b.radicand, d, "b")?;
            let a = algebra(&p.a, d).map_err(|e| e.context("a"))?;
            let b = algebra(&p.b, d).map_err(|e| e.context("b"))?;
            let act_a = actions(&p.act_a, a.dim(), b.dim(), d).map_err(|e| e.context("act_a"))?;
            let act_b = actions(&p.act_b, b.dim(), a.dim(), d).map_err(|e| e.context("act_b"))?;
            let mp = MatchedPairData::new(a, b, act_a, act_b).map_err(CliError::Library)?;
            Structure::MatchedPair(mp)
        }
        FileRepr::Map(m) => {
            let d = radicand(m.radicand)?;
            Structure::Map(matrix(&Some(m.matrix.clone()), m.dim, d, "matrix")?)
        }
    })
}

fn rows_of(m: &Matrix) -> Rows {
    m.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

fn product_entries(t: &Tensor4) -> Vec<ProductEntry> {
    let mut by_args: BTreeMap<[usize; 3], BTreeMap<usize, String>> = BTreeMap::new();
    for ([o, i, j, k], x) in t.support() {
        by_args
            .entry([i + 1, j + 1, k + 1])
            .or_default()
            .insert(o + 1, x.to_string());
    }
    by_args.into_iter().map(|(args, out)| ProductEntry { args, out }).collect()
}

fn coproduct_entries(t: &Tensor4) -> Vec<CoproductEntry> {
    let mut by_arg: BTreeMap<usize, Vec<CoproductTerm>> = BTreeMap::new();
    for ([l, r, s, u], x) in t.support() {
        by_arg.entry(l + 1).or_default().push(CoproductTerm {
            into: [r + 1, s + 1, u + 1],
            coeff: x.to_string(),
        });
    }
    by_arg.into_iter().map(|(arg, out)| CoproductEntry { arg, out }).collect()
}

fn algebra_repr(a: &TernaryAlgebra, radicand: Option<u32>) -> AlgebraRepr {
    AlgebraRepr {
        kind: radicand.and(kind("algebra")),
        dim: a.dim(),
        radicand,
        mu: product_entries(a.mu()),
        alpha1: Some(rows_of(a.alpha1())),
        alpha2: Some(rows_of(a.alpha2())),
    }
}

fn actions_repr(act: &TrimoduleActions) -> ActionsRepr {
    ActionsRepr {
        left: product_entries(act.left()),
        middle: product_entries(act.middle()),
        right: product_entries(act.right()),
    }
}

pub fn to_repr(s: &Structure) -> FileRepr {
    match s {
        Structure::Algebra(a) => FileRepr::Algebra(algebra_repr(a, Some(a.radicand()))),
        Structure::Coalgebra(c) => FileRepr::Coalgebra(CoalgebraRepr {
            kind: kind("coalgebra"),
            dim: c.dim(),
            radicand: Some(c.radicand()),
            delta: coproduct_entries(c.delta()),
            alpha1: Some(rows_of(c.alpha1())),
            alpha2: Some(rows_of(c.alpha2())),
        }),
        Structure::Bialgebra(b) => FileRepr::Bialgebra(BialgebraRepr {
            kind: kind("bialgebra"),
            dim: b.dim(),
            radicand: Some(b.radicand()),
            mu: product_entries(b.alg().mu()),
            delta: coproduct_entries(b.coalg().delta()),
            alpha1: Some(rows_of(b.alpha1())),
            alpha2: Some(rows_of(b.alpha2())),
        }),
        Structure::Module(m) => {
            let acts = actions_repr(&m.actions);
            FileRepr::Module(ModuleRepr {
                kind: kind("module"),
                dim: m.actions.dim_a(),
                dim_v: m.module.dim(),
                radicand: Some(m.module.radicand()),
                beta1: Some(rows_of(m.module.beta1())),
                beta2: Some(rows_of(m.module.beta2())),
                left: acts.left,
                middle: acts.middle,
                right: acts.right,
            })
        }
        Structure::MatchedPair(p) => FileRepr::MatchedPair(MatchedPairRepr {
            kind: kind("matched_pair"),
            radicand: Some(p.a().radicand()),
            a: algebra_repr(p.a(), None),
            b: algebra_repr(p.b(), None),
            act_a: actions_repr(p.act_a()),
            act_b: actions_repr(p.act_b()),
        }),
        Structure::Map(m) => FileRepr::Map(MapRepr {
            kind: kind("map"),
            dim: m.dim(),
            radicand: Some(m.radicand()),
            matrix: rows_of(m),
        }),
    }
}

/// Objects are expanded one key per line; arrays of scalars stay on one
/// line, other arrays get one compact element per line.
fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent + 1);
    let close = "  ".repeat(indent);
    match v {
        Value::Object(map) if !map.is_empty() && map.values().any(|x| x.is_object() || x.is_array()) => {
            out.push_str("{\n");
            for (n, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, indent + 1);
                if n + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&close);
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            out.push_str("[\n");
            for (n, x) in items.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&compact(x));
                if n + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&close);
            out.push(']');
        }
        _ => out.push_str(&compact(v)),
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(compact).collect();
            format!("[{}]", inner.join(", "))
        }
        Value::Object(map) => {
            let inner: Vec<String> = map
                .iter()
                .map(|(k, x)| format!("{}: {}", Value::String(k.clone()), compact(x)))
                .collect();
            format!("{{{}}}", inner.join(", "))
        }
        _ => v.to_string(),
    }
}
