//! JSON input parsing and the text/JSON renderings of results.
//!
//! Integers and rationals travel as decimal strings (`"-3"`, `"13/6"`); bare
//! JSON integers are accepted on input.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use zc_core::almkvist::W0Element;
use zc_core::dynamics::{matrix_from_value, FiniteDynSystem, HomologyAction};
use zc_core::exact::{IntMatrix, IntPoly, TruncSeries};
use zc_core::hadamard::LinRecSeq;
use zc_core::motive::{MotivePoly, TorifiedVariety};
use zc_core::witt::WittElement;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Core(zc_core::Error),
}

impl CliError {
    /// 3 for budget and truncation-order failures, 2 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(zc_core::Error::BudgetExceeded { .. } | zc_core::Error::InsufficientOrder { .. }) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<zc_core::Error> for CliError {
    fn from(e: zc_core::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn input_err<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Input(msg.into()))
}

pub fn parse_json(text: &str, what: &str) -> CliResult<Value> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("{what}: {e}")))
}

pub fn read_file(path: &str) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

fn rational(v: &Value) -> CliResult<BigRational> {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(BigRational::from_integer(BigInt::from_str(&n.to_string()).unwrap())),
        Value::String(s) => {
            let s = s.trim();
            let parsed = match s.split_once('/') {
                Some((p, q)) => match (BigInt::from_str(p.trim()), BigInt::from_str(q.trim())) {
                    (Ok(p), Ok(q)) if q != BigInt::from(0) => Some(BigRational::new(p, q)),
                    _ => None,
                },
                None => BigInt::from_str(s).ok().map(BigRational::from_integer),
            };
            parsed.ok_or_else(|| CliError::Input(format!("not an exact rational: {s:?}")))
        }
        _ => input_err(format!("expected an integer or \"p/q\" string, got {v}")),
    }
}

fn integer(v: &Value) -> CliResult<BigInt> {
    let r = rational(v)?;
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        input_err(format!("expected an integer, got {r}"))
    }
}

fn list<'a>(v: &'a Value, what: &str) -> CliResult<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| CliError::Input(format!("{what} must be a JSON list")))
}

pub fn rationals(v: &Value, what: &str) -> CliResult<Vec<BigRational>> {
    list(v, what)?.iter().map(rational).collect()
}

pub fn integers(v: &Value, what: &str) -> CliResult<Vec<BigInt>> {
    list(v, what)?.iter().map(integer).collect()
}

pub fn int_poly(v: &Value, what: &str) -> CliResult<IntPoly> {
    Ok(IntPoly::new(integers(v, what)?))
}

/// A series `[c_0, c_1, ..]`, or `1/q` for `q = [q_0, q_1, ..]` when `inverse`.
pub fn series(text: &str, order: usize, inverse: bool) -> CliResult<TruncSeries> {
    let v = parse_json(text, "series")?;
    if inverse {
        let q = int_poly(&v, "denominator")?;
        Ok(TruncSeries::from_int_fraction(&IntPoly::one(), &q, order)?)
    } else {
        Ok(TruncSeries::new(rationals(&v, "series")?, order))
    }
}

pub fn witt(text: &str, order: usize, inverse: bool) -> CliResult<WittElement> {
    Ok(WittElement::new(series(text, order, inverse)?)?)
}

pub fn matrix(v: &Value) -> CliResult<IntMatrix> {
    Ok(matrix_from_value(v)?)
}

/// `{"num": [..], "den": [..]}` or `{"matrix": [[..], ..]}`.
pub fn w0(text: &str) -> CliResult<W0Element> {
    let v = parse_json(text, "W0 element")?;
    if let Some(m) = v.get("matrix") {
        return Ok(zc_core::almkvist::w0_from_matrix(&matrix(m)?));
    }
    match (v.get("num"), v.get("den")) {
        (Some(n), Some(d)) => Ok(W0Element::from_fraction(int_poly(n, "num")?, int_poly(d, "den")?)?),
        _ => input_err("W0 element needs \"num\" and \"den\" (or \"matrix\")"),
    }
}

/// `{"init": [..], "charpoly": [..]}`; any `"terms"` entry is ignored.
pub fn lrs(text: &str) -> CliResult<LinRecSeq> {
    let v = parse_json(text, "sequence")?;
    match (v.get("init"), v.get("charpoly")) {
        (Some(i), Some(c)) => Ok(LinRecSeq::new(integers(i, "init")?, int_poly(c, "charpoly")?)?),
        _ => input_err("sequence needs \"init\" and \"charpoly\""),
    }
}

pub fn tori(text: &str) -> CliResult<TorifiedVariety> {
    let v = parse_json(text, "tori")?;
    let dims = list(&v, "tori")?
        .iter()
        .map(|d| {
            d.as_u64()
                .and_then(|d| u32::try_from(d).ok())
                .ok_or_else(|| CliError::Input(format!("torus dimension must be a small non-negative integer, got {d}")))
        })
        .collect::<CliResult<_>>()?;
    Ok(TorifiedVariety::new(dims))
}

pub fn motive(tori_text: Option<&str>, poly_text: Option<&str>) -> CliResult<MotivePoly> {
    match (tori_text, poly_text) {
        (Some(t), None) => Ok(zc_core::motive::motive_of_torified(&tori(t)?)),
        (None, Some(p)) => Ok(MotivePoly(int_poly(&parse_json(p, "motive")?, "motive")?)),
        _ => input_err("give exactly one of --tori or --poly"),
    }
}

pub fn system(map_text: Option<&str>, file: Option<&str>) -> CliResult<FiniteDynSystem> {
    let v = match (map_text, file) {
        (Some(m), None) => parse_json(m, "map")?,
        (None, Some(f)) => parse_json(&read_file(f)?, f)?,
        _ => return input_err("give exactly one of --map or --file"),
    };
    let v = v.get("map").cloned().unwrap_or(v);
    let map = list(&v, "map")?
        .iter()
        .map(|x| {
            x.as_u64()
                .and_then(|x| usize::try_from(x).ok())
                .ok_or_else(|| CliError::Input(format!("map entries must be non-negative integers, got {x}")))
        })
        .collect::<CliResult<_>>()?;
    Ok(FiniteDynSystem::new(map)?)
}

pub fn homology(file: Option<&str>, matrix_text: Option<&str>) -> CliResult<HomologyAction> {
    match (file, matrix_text) {
        (Some(f), None) => Ok(HomologyAction::from_json(&read_file(f)?)?),
        (None, Some(m)) => Ok(HomologyAction::new(vec![matrix(&parse_json(m, "matrix")?)?])),
        _ => input_err("give exactly one of --file or --matrix"),
    }
}

/// A result with its two renderings.
pub struct Output {
    pub text: String,
    pub json: Value,
}

impl Output {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json }
    }
}

pub fn strs<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

pub fn joined<T: ToString>(xs: &[T]) -> String {
    strs(xs).join(", ")
}

pub fn witt_out(w: &WittElement) -> Output {
    Output::new(joined(w.coeffs()), json!(strs(w.coeffs())))
}

pub fn rational_list_out(xs: &[BigRational]) -> Output {
    Output::new(joined(xs), json!(strs(xs)))
}

pub fn integer_list_out(xs: &[BigInt]) -> Output {
    Output::new(joined(xs), json!(strs(xs)))
}

pub fn w0_json(w: &W0Element) -> Value {
    json!({ "num": strs(w.num().coeffs()), "den": strs(w.den().coeffs()) })
}

pub fn w0_out(w: &W0Element) -> Output {
    Output::new(w.to_string(), w0_json(w))
}

pub fn detected_out(w: Option<W0Element>, max_deg: usize) -> Output {
    match w {
        Some(w) => {
            let mut j = w0_json(&w);
            j["rational"] = json!(true);
            Output::new(w.to_string(), j)
        }
        None => Output::new(
            format!("not rational with numerator and denominator of degree <= {max_deg}"),
            json!({ "rational": false }),
        ),
    }
}

pub fn lrs_json(a: &LinRecSeq, count: usize) -> Value {
    json!({
        "init": strs(a.init()),
        "charpoly": strs(a.charpoly().coeffs()),
        "terms": strs(&a.terms(count)),
    })
}

pub fn lrs_out(a: &LinRecSeq, count: usize) -> Output {
    let text = format!("{}\ncharpoly: {}", joined(&a.terms(count)), a.charpoly());
    Output::new(text, lrs_json(a, count))
}

pub fn motive_out(p: &MotivePoly) -> Output {
    Output::new(p.to_string(), json!(strs(p.poly().coeffs())))
}
