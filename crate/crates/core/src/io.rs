//! JSON documents: hypergroup tables, recurrence specs, function specs and the
//! reports written by the command-line tool.
//!
//! Rationals are strings `"p/q"`, floats are JSON numbers and complex values
//! are `[re, im]` pairs. [`to_canonical_string`] writes objects with sorted
//! keys and floats with 17 significant digits, so equal inputs give
//! byte-identical output.

use std::fmt::Write as _;

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::error::{ParseError, RecurrenceError};
use crate::hypergroup::{AxiomOutcome, AxiomReport, FiniteMeasure, HFunction, Hypergroup};
use crate::polynomial::{
    additive_fn, exponential_fn, sine_fn, Coefficients, CounterexampleReport, Recurrence, RecurrenceKind,
};
use crate::scalar::{parse_rational, ratio_string, Real, Scalar, Values};
use crate::solutions::{ClassificationResult, Residual};

fn schema(msg: impl Into<String>) -> ParseError {
    ParseError::Schema(msg.into())
}

/// Parses a JSON document.
pub fn parse_json(text: &str) -> Result<Value, ParseError> {
    serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))
}

/// Serializes with sorted keys, integers as integers and other numbers as
/// `d.dddddddddddddddde±x`. Non-finite floats become `null`.
pub fn to_canonical_string(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, value, 0);
    out.push('\n');
    out
}

fn write_value(out: &mut String, value: &Value, indent: usize) {
    match value {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if n.is_i64() || n.is_u64() {
                out.push_str(&n.to_string());
            } else {
                out.push_str(&format_float(n.as_f64().unwrap_or(f64::NAN)));
            }
        }
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(items) => {
            if items.iter().all(|v| !v.is_array() && !v.is_object()) {
                out.push('[');
                for (k, item) in items.iter().enumerate() {
                    if k > 0 {
                        out.push_str(", ");
                    }
                    write_value(out, item, indent);
                }
                out.push(']');
                return;
            }
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                pad(out, indent + 1);
                write_value(out, item, indent + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (k, key) in keys.iter().enumerate() {
                pad(out, indent + 1);
                let _ = write!(out, "{}: ", Value::String((*key).clone()));
                write_value(out, &map[*key], indent + 1);
                out.push_str(if k + 1 < keys.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push('}');
        }
    }
}

fn pad(out: &mut String, indent: usize) {
    for _ in 0..indent {
        out.push_str("  ");
    }
}

/// 17 significant digits in scientific notation.
pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

fn float_value(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

fn real_value(r: &Real) -> Value {
    match r {
        Real::Rational(q) => Value::String(ratio_string(q)),
        Real::Float(x) => float_value(*x),
    }
}

/// `[re, im]`, with `"p/q"` strings in exact mode.
pub fn scalar_value(s: &Scalar) -> Value {
    match s {
        Scalar::Exact(z) => json!([ratio_string(&z.re), ratio_string(&z.im)]),
        Scalar::Float(z) => json!([float_value(z.re), float_value(z.im)]),
    }
}

fn real_component(v: &Value, what: &str) -> Result<Real, ParseError> {
    match v {
        Value::String(s) => parse_rational(s)
            .map(Real::Rational)
            .ok_or_else(|| ParseError::Complex(s.clone())),
        Value::Number(n) => match (n.as_i64(), n.as_f64()) {
            (Some(i), _) => Ok(Real::Rational(BigRational::from_integer(i.into()))),
            (None, Some(x)) => Ok(Real::Float(x)),
            _ => Err(schema(format!("{what}: unrepresentable number"))),
        },
        _ => Err(schema(format!("{what}: expected a number or a \"p/q\" string"))),
    }
}

/// Accepts `[re, im]`, a complex literal string, or a number. Strings and
/// integers are exact; other JSON numbers are floats.
pub fn parse_scalar(v: &Value, what: &str) -> Result<Scalar, ParseError> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(_) => Ok(real_pair(real_component(v, what)?, Real::Rational(BigRational::default()))),
        Value::Array(parts) if parts.len() == 2 => {
            Ok(real_pair(real_component(&parts[0], what)?, real_component(&parts[1], what)?))
        }
        _ => Err(schema(format!("{what}: expected [re, im], \"p/q\" or a number"))),
    }
}

fn real_pair(re: Real, im: Real) -> Scalar {
    match (re, im) {
        (Real::Rational(re), Real::Rational(im)) => Scalar::Exact(num_complex::Complex::new(re, im)),
        (re, im) => Scalar::float(re.to_f64(), im.to_f64()),
    }
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value, ParseError> {
    obj.get(key).ok_or_else(|| schema(format!("{what}: missing \"{key}\"")))
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>, ParseError> {
    v.as_object().ok_or_else(|| schema(format!("{what}: expected an object")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize, ParseError> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| schema(format!("{what}: expected a nonnegative integer")))
}

fn rational_field(v: &Value, what: &str) -> Result<BigRational, ParseError> {
    match real_component(v, what)? {
        Real::Rational(q) => Ok(q),
        Real::Float(_) => Err(schema(format!("{what}: expected an exact rational"))),
    }
}

// Recurrence specs.

pub fn recurrence_to_json(r: &Recurrence) -> Value {
    let mut obj = Map::new();
    obj.insert("name".into(), r.name().into());
    obj.insert("x0".into(), ratio_string(r.x0()).into());
    match r.kind() {
        RecurrenceKind::Chebyshev => {
            obj.insert("kind".into(), "chebyshev".into());
        }
        RecurrenceKind::Cartier { q } => {
            obj.insert("kind".into(), "cartier".into());
            obj.insert("params".into(), json!({ "q": q }));
        }
        RecurrenceKind::Explicit(rows) => {
            obj.insert("kind".into(), "explicit".into());
            let coeffs = rows
                .iter()
                .map(|c| json!([ratio_string(&c.a), ratio_string(&c.b), ratio_string(&c.c)]))
                .collect();
            obj.insert("coeffs".into(), Value::Array(coeffs));
        }
    }
    Value::Object(obj)
}

/// Reads a recurrence spec. Presets use the stated `x0`, which must match the
/// preset's own normalization.
pub fn recurrence_from_json(v: &Value) -> Result<Recurrence, ParseError> {
    let what = "recurrence";
    let obj = as_object(v, what)?;
    let x0 = rational_field(get(obj, "x0", what)?, "x0")?;
    let kind = get(obj, "kind", what)?
        .as_str()
        .ok_or_else(|| schema("kind: expected a string"))?;
    let name = obj.get("name").and_then(Value::as_str);
    let invalid = |e: RecurrenceError| schema(format!("recurrence: {e}"));
    let recurrence = match kind {
        "chebyshev" => {
            let preset = Recurrence::chebyshev();
            match name {
                Some(n) => Recurrence::new(n, x0, RecurrenceKind::Chebyshev).map_err(invalid)?,
                None => Recurrence::new(preset.name(), x0, RecurrenceKind::Chebyshev).map_err(invalid)?,
            }
        }
        "cartier" => {
            let params = as_object(get(obj, "params", what)?, "params")?;
            let q = get(params, "q", "params")?
                .as_u64()
                .ok_or_else(|| schema("params.q: expected a positive integer"))?;
            let preset = Recurrence::cartier(q).map_err(invalid)?;
            Recurrence::new(name.unwrap_or(preset.name()), x0, RecurrenceKind::Cartier { q }).map_err(invalid)?
        }
        "explicit" => {
            let coeffs = get(obj, "coeffs", what)?
                .as_array()
                .ok_or_else(|| schema("coeffs: expected an array"))?;
            let rows = coeffs
                .iter()
                .enumerate()
                .map(|(n, row)| match row.as_array().map(Vec::as_slice) {
                    Some([a, b, c]) => Ok(Coefficients {
                        a: rational_field(a, &format!("coeffs[{n}][0]"))?,
                        b: rational_field(b, &format!("coeffs[{n}][1]"))?,
                        c: rational_field(c, &format!("coeffs[{n}][2]"))?,
                    }),
                    _ => Err(schema(format!("coeffs[{n}]: expected [a_n, b_n, c_n]"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Recurrence::new(name.unwrap_or("explicit"), x0, RecurrenceKind::Explicit(rows)).map_err(invalid)?
        }
        other => return Err(schema(format!("unknown recurrence kind {other:?}"))),
    };
    Ok(recurrence)
}

// Hypergroup tables.

/// Table document with rows for `x <= y`. The optional `recurrence` is
/// embedded so family function specs can be resolved against the file.
pub fn table_to_json(h: &Hypergroup, recurrence: Option<&Recurrence>) -> Value {
    let rows: Vec<Value> = h
        .pairs()
        .iter()
        .filter(|(x, y)| x <= y)
        .map(|&(x, y)| {
            let mu = h.convolve(x, y).expect("tabulated pair");
            let measure: Vec<Value> = mu.atoms().iter().map(|(e, w)| json!([e, real_value(w)])).collect();
            json!({ "x": x, "y": y, "measure": measure })
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("nmax".into(), h.nmax().into());
    obj.insert("identity".into(), h.identity().into());
    obj.insert("rows".into(), Value::Array(rows));
    if !h.provenance().is_empty() {
        obj.insert("provenance".into(), h.provenance().into());
    }
    if let Some(r) = recurrence {
        obj.insert("recurrence".into(), recurrence_to_json(r));
    }
    Value::Object(obj)
}

/// A table document together with its embedded recurrence, if any.
pub struct TableFile {
    pub hypergroup: Hypergroup,
    pub recurrence: Option<Recurrence>,
}

pub fn table_from_json(v: &Value) -> Result<TableFile, ParseError> {
    let what = "table";
    let obj = as_object(v, what)?;
    let nmax = as_usize(get(obj, "nmax", what)?, "nmax")?;
    let identity = as_usize(get(obj, "identity", what)?, "identity")?;
    let rows = get(obj, "rows", what)?
        .as_array()
        .ok_or_else(|| schema("rows: expected an array"))?;
    let mut parsed = Vec::with_capacity(rows.len());
    for (idx, row) in rows.iter().enumerate() {
        let ctx = format!("rows[{idx}]");
        let row = as_object(row, &ctx)?;
        let x = as_usize(get(row, "x", &ctx)?, "x")?;
        let y = as_usize(get(row, "y", &ctx)?, "y")?;
        let atoms = get(row, "measure", &ctx)?
            .as_array()
            .ok_or_else(|| schema(format!("{ctx}.measure: expected an array")))?
            .iter()
            .map(|atom| match atom.as_array().map(Vec::as_slice) {
                Some([e, w]) => Ok((as_usize(e, "measure element")?, real_component(w, "measure weight")?)),
                _ => Err(schema(format!("{ctx}.measure: expected [element, weight] pairs"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        parsed.push((x, y, FiniteMeasure::new(atoms)));
    }
    let provenance = obj.get("provenance").and_then(Value::as_str).unwrap_or("file").to_string();
    let hypergroup = Hypergroup::new(nmax, identity, parsed, provenance).map_err(|e| schema(e.to_string()))?;
    let recurrence = obj.get("recurrence").map(recurrence_from_json).transpose()?;
    Ok(TableFile { hypergroup, recurrence })
}

// Function specs.

/// A value table: exact values as `"p/q"` pairs, floats as numbers.
pub fn values_to_json(values: &Values) -> Value {
    let items = (0..values.len())
        .map(|k| scalar_value(&values.get(k).expect("index in range")))
        .collect();
    json!({ "kind": "table", "values": Value::Array(items) })
}

/// Function spec holding the values of `f` on `0..len`.
pub fn function_to_json(f: &HFunction, len: usize) -> Result<Value, ParseError> {
    let values = f.values(len).map_err(|e| schema(e.to_string()))?;
    Ok(values_to_json(&values))
}

/// Reads a function spec. Family specs need a recurrence, given inline under
/// `"recurrence"` or by the caller (usually the one embedded in the table).
pub fn function_from_json(v: &Value, recurrence: Option<&Recurrence>) -> Result<HFunction, ParseError> {
    let what = "function";
    let obj = as_object(v, what)?;
    let kind = get(obj, "kind", what)?
        .as_str()
        .ok_or_else(|| schema("kind: expected a string"))?;
    match kind {
        "table" => {
            let items = get(obj, "values", what)?
                .as_array()
                .ok_or_else(|| schema("values: expected an array"))?;
            let scalars = items
                .iter()
                .enumerate()
                .map(|(k, item)| parse_scalar(item, &format!("values[{k}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let label = obj.get("label").and_then(Value::as_str).unwrap_or("table");
            Ok(HFunction::table(label, scalars_to_values(&scalars)))
        }
        "family" => {
            let family = get(obj, "family", what)?
                .as_str()
                .ok_or_else(|| schema("family: expected a string"))?;
            if family == "constant" {
                let value = obj
                    .get("const")
                    .or_else(|| obj.get("lambda"))
                    .ok_or_else(|| schema("constant family: missing \"const\""))?;
                return Ok(HFunction::constant(parse_scalar(value, "const")?));
            }
            let inline = obj.get("recurrence").map(recurrence_from_json).transpose()?;
            let r = inline
                .as_ref()
                .or(recurrence)
                .ok_or_else(|| schema("family spec needs a recurrence (inline or from the table)"))?;
            let lambda = || parse_scalar(get(obj, "lambda", what)?, "lambda");
            match family {
                "exponential" => Ok(exponential_fn(r, lambda()?)),
                "sine" => Ok(sine_fn(r, lambda()?)),
                "additive" => {
                    let c = match obj.get("const") {
                        Some(c) => parse_scalar(c, "const")?,
                        None => Scalar::int(1),
                    };
                    Ok(additive_fn(r, c))
                }
                other => Err(schema(format!("unknown family {other:?}"))),
            }
        }
        other => Err(schema(format!("unknown function kind {other:?}"))),
    }
}

/// Exact if every value is exact, float otherwise.
pub fn scalars_to_values(scalars: &[Scalar]) -> Values {
    let exact: Option<Vec<_>> = scalars
        .iter()
        .map(|s| match s {
            Scalar::Exact(z) => Some(z.clone()),
            Scalar::Float(_) => None,
        })
        .collect();
    match exact {
        Some(v) => Values::Exact(v),
        None => Values::Float(scalars.iter().map(Scalar::to_c64).collect()),
    }
}

// Reports.

fn outcome_json(o: &AxiomOutcome) -> Value {
    let witnesses: Vec<Value> = o
        .witnesses
        .iter()
        .map(|w| json!({ "indices": w.indices, "detail": w.detail }))
        .collect();
    json!({ "pass": o.pass(), "checked": o.checked, "failures": o.failures, "witnesses": witnesses })
}

pub fn axiom_report_json(r: &AxiomReport) -> Value {
    let mut obj = Map::new();
    for (name, outcome) in r.axioms() {
        obj.insert(name.into(), outcome_json(outcome));
    }
    obj.insert("pass".into(), r.all_pass().into());
    obj.insert("mode".into(), r.mode.as_str().into());
    obj.insert("depth".into(), r.depth.into());
    Value::Object(obj)
}

pub fn residual_json(r: &Residual) -> Value {
    json!({
        "equation": r.equation.as_str(),
        "max_residual": float_value(r.max_abs),
        "max_relative": float_value(r.max_rel),
        "pass": r.pass,
        "worst_pair": r.worst_pair.map(|(x, y)| json!([x, y])),
        "mode": r.mode.as_str(),
        "pairs_checked": r.pairs_checked,
    })
}

/// Classification report. `len` is the number of values written for the
/// recovered exponentials.
pub fn classification_json(r: &ClassificationResult, len: usize) -> Result<Value, ParseError> {
    let mut params = Map::new();
    let scalars = [("c", &r.c), ("lambda", &r.lambda), ("d", &r.d)];
    for (key, value) in scalars {
        if let Some(v) = value {
            params.insert(key.into(), scalar_value(v));
        }
    }
    if let Some(sign) = r.sign {
        params.insert("sign".into(), sign.into());
    }
    for (key, f, fit) in [("M", &r.m, &r.m_lambda), ("N", &r.n, &r.n_lambda)] {
        if let Some(f) = f {
            let mut spec = function_to_json(f, len)?;
            if let Some(lambda) = fit {
                spec["lambda_fit"] = scalar_value(lambda);
            }
            params.insert(key.into(), spec);
        }
    }
    Ok(json!({
        "case": r.case.as_str(),
        "mode": r.mode.as_str(),
        "params": Value::Object(params),
        "residual_input": float_value(r.residual_input.max_abs),
        "worst_pair": r.residual_input.worst_pair.map(|(x, y)| json!([x, y])),
        "residual_reconstruction": r.residual_reconstruction.map(float_value),
        "notes": r.notes,
    }))
}

pub fn counterexample_json(r: &CounterexampleReport) -> Value {
    let deviations: Vec<Value> = r
        .deviations
        .iter()
        .map(|d| json!({ "n": d.n, "difference": scalar_value(&d.difference), "modulus": float_value(d.modulus) }))
        .collect();
    json!({
        "recurrence": r.recurrence,
        "lambda": scalar_value(&r.lambda),
        "nmax": r.nmax,
        "mode": r.mode.as_str(),
        "constant": scalar_value(&r.constant),
        "fit": r.fit.as_str(),
        "deviations": deviations,
        "max_deviation": float_value(r.max_deviation),
        "argmax": r.argmax,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::linearization_table;

    #[test]
    fn floats_have_seventeen_digits() {
        assert_eq!(format_float(0.1), "1.0000000000000001e-1");
        assert_eq!(format_float(6.0), "6.0000000000000000e0");
        let text = to_canonical_string(&json!({"b": 1, "a": [0.5, "x"]}));
        assert_eq!(text, "{\n  \"a\": [5.0000000000000000e-1, \"x\"],\n  \"b\": 1\n}\n");
        assert!(parse_json(&text).is_ok());
    }

    #[test]
    fn table_round_trip() {
        let r = Recurrence::chebyshev();
        let h = linearization_table(&r, 8).unwrap().to_hypergroup();
        let doc = table_to_json(&h, Some(&r));
        let rows = doc["rows"].as_array().unwrap();
        // pairs n <= m with n + m <= 8
        assert_eq!(rows.len(), 25);
        assert_eq!(rows[1]["measure"], json!([[1, "1/1"]]));
        let back = table_from_json(&parse_json(&to_canonical_string(&doc)).unwrap()).unwrap();
        assert_eq!(back.recurrence.as_ref(), Some(&r));
        for &(x, y) in h.pairs() {
            assert_eq!(h.convolve(x, y).unwrap(), back.hypergroup.convolve(x, y).unwrap());
        }
    }

    #[test]
    fn recurrence_specs() {
        let cartier = parse_json(r#"{"name": "c2", "x0": "1/1", "kind": "cartier", "params": {"q": 2}}"#).unwrap();
        let r = recurrence_from_json(&cartier).unwrap();
        assert_eq!(r.kind(), &RecurrenceKind::Cartier { q: 2 });
        let missing = parse_json(r#"{"name": "c", "kind": "chebyshev"}"#).unwrap();
        assert!(matches!(recurrence_from_json(&missing), Err(ParseError::Schema(_))));
        let explicit = parse_json(r#"{"name": "e", "x0": "1", "kind": "explicit", "coeffs": [["1", "0", "0"], ["1/2", "0", "1/2"]]}"#).unwrap();
        let e = recurrence_from_json(&explicit).unwrap();
        assert_eq!(e.rows_available(), Some(2));
        assert_eq!(recurrence_from_json(&recurrence_to_json(&e)).unwrap(), e);
    }

    #[test]
    fn function_specs() {
        let r = Recurrence::chebyshev();
        let spec = parse_json(r#"{"kind": "family", "family": "exponential", "lambda": "2"}"#).unwrap();
        let f = function_from_json(&spec, Some(&r)).unwrap();
        assert_eq!(f.eval(2).unwrap(), Scalar::int(7));
        assert!(function_from_json(&spec, None).is_err());
        let table = parse_json(r#"{"kind": "table", "values": [["1", "0"], [0.5, 0]]}"#).unwrap();
        let t = function_from_json(&table, None).unwrap();
        assert_eq!(t.mode(), crate::scalar::Mode::Float);
        let exact = parse_json(r#"{"kind": "table", "values": [["1", "0"], ["1/2", "-3"]]}"#).unwrap();
        let t = function_from_json(&exact, None).unwrap();
        assert_eq!(t.eval(1).unwrap(), Scalar::complex_ratio((1, 2), (-3, 1)));
        let constant = parse_json(r#"{"kind": "family", "family": "constant", "const": [1, 0]}"#).unwrap();
        assert_eq!(function_from_json(&constant, None).unwrap().eval(5).unwrap(), Scalar::int(1));
    }
}
