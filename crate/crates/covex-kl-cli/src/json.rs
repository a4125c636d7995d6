//! JSON input and output of `compute` (schema in `docs/json-schema.md`).

use covex_kl::capacity_tree::PairKind;
use covex_kl::pipeline::Case;
use covex_kl::triples::{ABMatrix, MatrixData, Triple};
use covex_kl::weyl::{LieType, WeylElement};
use serde_json::{json, Map, Value};

use crate::{CliError, Method, Outcome};

/// A case read from JSON; `v` and `method` are optional.
pub struct ParsedRequest {
    pub triple: Triple,
    pub v: Option<WeylElement>,
    pub method: Option<Method>,
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Validation(format!("--input: {}", msg.into()))
}

fn int_list(obj: &Map<String, Value>, key: &str) -> Result<Vec<i64>, CliError> {
    let arr =
        obj.get(key).and_then(Value::as_array).ok_or_else(|| bad(format!("`{key}` must be an array of integers")))?;
    arr.iter().map(|x| x.as_i64().ok_or_else(|| bad(format!("`{key}` must contain integers only")))).collect()
}

/// Reads a triple object `{"type","n","k","p","q"}` with optional `"v"`
/// (array or window string) and `"method"`; the emitted output of
/// `compute --emit json` is accepted too (its `"input"` member is used).
pub fn parse_request(text: &str) -> Result<ParsedRequest, CliError> {
    let root: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let obj = root.as_object().ok_or_else(|| bad("expected a JSON object"))?;
    let obj = match obj.get("input") {
        Some(Value::Object(inner)) => inner,
        _ => obj,
    };
    let t: LieType = obj
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("`type` must be one of \"A\", \"B\", \"C\", \"D\""))?
        .parse()
        .map_err(|e: covex_kl::weyl::WeylError| bad(e.to_string()))?;
    let n =
        obj.get("n").and_then(Value::as_u64).filter(|&n| n >= 1).ok_or_else(|| bad("`n` must be a positive integer"))?
            as usize;
    let triple = Triple::new(t, n, int_list(obj, "k")?, int_list(obj, "p")?, int_list(obj, "q")?);
    let v = match obj.get("v") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(Value::Array(_)) => Some(int_list(obj, "v")?.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")),
        Some(_) => return Err(bad("`v` must be an array of integers or a window string")),
    };
    let v = match v {
        Some(text) => {
            let w = WeylElement::parse(t, &text).map_err(|e| bad(format!("`v`: {e}")))?;
            if w.n() != n {
                return Err(bad(format!("`v` has {} entries, expected n = {n}", w.n())));
            }
            Some(w)
        }
        None => None,
    };
    let method = match obj.get("method") {
        None | Some(Value::Null) => None,
        Some(m) => Some(
            m.as_str()
                .and_then(Method::parse)
                .ok_or_else(|| bad("`method` must be one of trees, inductive, oracle, all"))?,
        ),
    };
    Ok(ParsedRequest { triple, v, method })
}

fn window(w: &WeylElement) -> Value {
    json!(w.window())
}

fn matrix(m: &ABMatrix) -> Value {
    json!({ "a": m.a, "b": m.b })
}

fn matrix_data(d: &MatrixData) -> Value {
    json!({ "a": d.matrix.a, "b": d.matrix.b, "nu": d.nu, "nu_t": d.nu_t, "lambda": d.lambda })
}

fn tree_shape(case: &Case) -> Result<Value, CliError> {
    let (m, c, total) = case.tree_input();
    let word = case.word()?;
    let tree = case.tree()?;
    let edges: Vec<Value> = tree
        .edges
        .iter()
        .map(|e| {
            let kind = match e.pair.kind {
                PairKind::AlphaBeta => "alpha-beta",
                PairKind::AlphaAlpha => "alpha-alpha",
                PairKind::Terminal => "terminal",
            };
            json!({
                "open": e.pair.open,
                "close": e.pair.close,
                "kind": kind,
                "plus": e.plus,
                "bound": e.capacity_bound,
                "parent": e.parent,
            })
        })
        .collect();
    Ok(json!({
        "matrix": matrix(&m),
        "capacity": c.c,
        "word_length": total,
        "word": word.bracketed(),
        "edges": edges,
    }))
}

/// The full `compute --emit json` document.
pub fn render_compute(case: &Case, method: Method, outcome: &Outcome) -> Result<String, CliError> {
    let t = &case.triple;
    let (x, y) = case.oracle_pair();
    let mut results = Map::new();
    for (m, p) in &outcome.results {
        results.insert(m.as_str().to_string(), Value::String(p.to_string()));
    }
    let skipped: Map<String, Value> =
        outcome.skipped.iter().map(|(m, why)| (m.as_str().to_string(), Value::String(why.clone()))).collect();
    let verdict = match outcome.verdict() {
        Some(true) => json!("MATCH"),
        Some(false) => json!("MISMATCH"),
        None => Value::Null,
    };
    let doc = json!({
        "input": {
            "type": t.lie_type.to_string(),
            "n": t.n,
            "k": t.k,
            "p": t.p,
            "q": t.q,
            "v": window(&case.v),
            "method": method.as_str(),
        },
        "intermediates": {
            "w": window(&case.w),
            "weak_triple": { "k": case.weak.k, "p": case.weak.p, "q": case.weak.q },
            "h": matrix_data(&case.h),
            "k_matrix": matrix_data(&case.k),
            "capacity": case.capacity.c,
            "side_condition_violations":
                case.side_violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "oracle_pair": { "x": window(&x), "y": window(&y) },
            "tree": tree_shape(case)?,
        },
        "results": results,
        "skipped": skipped,
        "verdict": verdict,
    });
    Ok(serde_json::to_string_pretty(&doc).expect("JSON values always serialize"))
}
