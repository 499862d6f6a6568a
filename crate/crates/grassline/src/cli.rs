//! Command-line front end: requests from flags or stdin JSON, dispatch, and
//! canonical JSON reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::adhm::{
    chern_number, framing_a, framing_d, quiver_dim_a, quiver_dim_d, sample_datum_a, sample_datum_d,
    tau_multiplicities_a, tau_multiplicities_d, theta_psi_a, theta_psi_d, v_from_lambda, vd_from_xi, xi_enumerate,
    AdhmDatumA, AdhmDatumD, DimVectorA, DimVectorD, FoldedMaps, SampleOptions, XiClass,
};
use crate::exactalg::{
    format_matrix, format_qmatrix, parse_matrix, parse_rational, LaurentMatrix1, LaurentMatrix2, QMatrix,
};
use crate::loopgroup::{classify_fixed, factorize, stratum, Coweight, Factorization, LoopElement};
use crate::report::{Check, CheckReport};
use crate::selftest::{run_suite, SUITES};
use crate::transitions::{
    build_quad, build_triple, extract_quad, extract_triple, verify_quad, verify_triple, SplitOptions, TransitionQuad,
    TransitionTriple,
};

/// Truncation overrides, from `GRASSLINE_BOUNDS` or `--bounds`, as
/// `split_max_order=N,sample_retries=N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub split_max_order: Option<usize>,
    pub sample_retries: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            split_max_order: None,
            sample_retries: SampleOptions::default().retries,
        }
    }
}

impl FromStr for Bounds {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, UsageError> {
        let mut b = Bounds::default();
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| UsageError(format!("bounds entry {item:?} is not key=value")))?;
            let n: usize = value
                .trim()
                .parse()
                .map_err(|_| UsageError(format!("bounds value {value:?} is not a nonnegative integer")))?;
            match key.trim() {
                "split_max_order" => b.split_max_order = Some(n),
                "sample_retries" => b.sample_retries = n,
                other => return Err(UsageError(format!("unknown bound {other:?}"))),
            }
        }
        Ok(b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Stratum,
    Classify,
    Factorize,
    Xi,
    Dims,
    Quad,
    Triple,
    Extract,
    AdhmSample,
    AdhmToLoop,
    Selftest,
}

impl Command {
    pub const ALL: [Command; 11] = [
        Command::Stratum,
        Command::Classify,
        Command::Factorize,
        Command::Xi,
        Command::Dims,
        Command::Quad,
        Command::Triple,
        Command::Extract,
        Command::AdhmSample,
        Command::AdhmToLoop,
        Command::Selftest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Stratum => "stratum",
            Command::Classify => "classify",
            Command::Factorize => "factorize",
            Command::Xi => "xi",
            Command::Dims => "dims",
            Command::Quad => "quad",
            Command::Triple => "triple",
            Command::Extract => "extract",
            Command::AdhmSample => "adhm-sample",
            Command::AdhmToLoop => "adhm-to-loop",
            Command::Selftest => "selftest",
        }
    }
}

impl FromStr for Command {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, UsageError> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| UsageError(format!("unknown command {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Request {
    pub command: Command,
    pub payload: Value,
    pub seed: Option<u64>,
    pub bounds: Bounds,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Outcome of [`execute`].
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub ok: bool,
    pub result: Value,
    pub checks: CheckReport,
    /// Module error code when the computation itself failed.
    pub error: Option<(String, String)>,
    /// Extra human-readable lines, printed before the JSON.
    pub summary: Vec<String>,
}

impl Report {
    fn new(result: Value, checks: CheckReport) -> Self {
        Report {
            ok: checks.all_pass(),
            result,
            checks,
            error: None,
            summary: Vec::new(),
        }
    }

    fn failed(code: &str, message: String) -> Self {
        Report {
            ok: false,
            result: Value::Null,
            checks: CheckReport::new(),
            error: Some((code.to_string(), message)),
            summary: Vec::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("ok".into(), json!(self.ok));
        m.insert("result".into(), self.result.clone());
        m.insert(
            "checks".into(),
            Value::Array(self.checks.checks.iter().map(Check::to_json).collect()),
        );
        if let Some((code, message)) = &self.error {
            m.insert("error".into(), json!({"code": code, "message": message}));
        }
        Value::Object(m)
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "grassline",
    about = "Exact computations on the opposite big cell of the affine Grassmannian"
)]
struct Cli {
    /// Read {"command", "payload", "seed", "bounds"} from stdin.
    #[arg(long)]
    stdin: bool,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// split_max_order=N,sample_retries=N
    #[arg(long, global = true)]
    bounds: Option<String>,
    #[command(subcommand)]
    command: Option<Sub>,
}

#[derive(Args, Debug, Default)]
struct GammaArgs {
    /// Matrix of polynomial strings in t.
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long)]
    payload: Option<String>,
}

#[derive(Args, Debug, Default)]
struct BuildArgs {
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long)]
    q1: Option<String>,
    #[arg(long)]
    q2: Option<String>,
    #[arg(long)]
    payload: Option<String>,
}

#[derive(Args, Debug, Default)]
struct LambdaArgs {
    /// Integer array, e.g. [3,0,0,-3].
    #[arg(long)]
    lambda: Option<String>,
    /// {"lambda": [...], "m_plus": k, "m_minus": l}
    #[arg(long)]
    xi: Option<String>,
    #[arg(long)]
    payload: Option<String>,
}

#[derive(Args, Debug, Default)]
struct ExtractArgs {
    #[arg(long)]
    quad: Option<String>,
    #[arg(long)]
    triple: Option<String>,
    #[arg(long)]
    payload: Option<String>,
}

#[derive(Args, Debug, Default)]
struct DatumArgs {
    #[arg(long)]
    datum: Option<String>,
    #[arg(long)]
    payload: Option<String>,
}

#[derive(Args, Debug, Default)]
struct SuiteArgs {
    /// One of the suite names; all suites when omitted.
    #[arg(long)]
    suite: Option<String>,
    #[arg(long)]
    payload: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Dominant coweight of the stratum containing gamma.
    Stratum(GammaArgs),
    /// (lambda, m_plus, m_minus) of an iota-fixed gamma.
    Classify(GammaArgs),
    /// gamma = q1 t^lambda q2.
    Factorize(GammaArgs),
    /// Admissible (m_plus, m_minus) for lambda.
    Xi(LambdaArgs),
    /// Dimension vectors and quiver-variety dimensions.
    Dims(LambdaArgs),
    /// Transition quadruple of gamma.
    Quad(BuildArgs),
    /// Transition triple of gamma.
    Triple(BuildArgs),
    /// Loop element of a quadruple or triple.
    Extract(ExtractArgs),
    /// Random stable costable ADHM datum.
    AdhmSample(LambdaArgs),
    /// Loop element of an ADHM datum.
    AdhmToLoop(DatumArgs),
    /// Run the self-test suites.
    Selftest(SuiteArgs),
}

fn flag_value(raw: &str) -> Value {
    serde_json::from_str(raw).unwrap_or_else(|_| Value::String(raw.to_string()))
}

fn collect_payload(payload: &Option<String>, fields: &[(&str, &Option<String>)]) -> Result<Value, UsageError> {
    let mut m = match payload {
        Some(p) => match serde_json::from_str(p) {
            Ok(Value::Object(m)) => m,
            _ => return Err(UsageError("--payload must be a JSON object".into())),
        },
        None => Map::new(),
    };
    for (name, value) in fields {
        if let Some(v) = value {
            m.insert(name.to_string(), flag_value(v));
        }
    }
    Ok(Value::Object(m))
}

/// Builds a [`Request`] from argv (without the program name in position 0 being
/// significant), an optional `GRASSLINE_BOUNDS` value and a stdin reader.
pub fn parse(
    args: &[String],
    env_bounds: Option<&str>,
    read_stdin: impl FnOnce() -> std::io::Result<String>,
) -> Result<Request, UsageError> {
    let cli = Cli::try_parse_from(args).map_err(|e| UsageError(e.to_string()))?;
    let mut bounds = match env_bounds {
        Some(s) => s.parse()?,
        None => Bounds::default(),
    };
    if cli.stdin {
        if cli.command.is_some() {
            return Err(UsageError("--stdin takes no subcommand".into()));
        }
        let text = read_stdin().map_err(|e| UsageError(format!("reading stdin: {e}")))?;
        let v: Value = serde_json::from_str(&text).map_err(|e| UsageError(format!("stdin is not JSON: {e}")))?;
        let command: Command = v
            .get("command")
            .and_then(Value::as_str)
            .ok_or_else(|| UsageError("missing \"command\"".into()))?
            .parse()?;
        let payload = v.get("payload").cloned().unwrap_or_else(|| json!({}));
        if !payload.is_object() {
            return Err(UsageError("\"payload\" must be an object".into()));
        }
        let seed = match v.get("seed") {
            None | Some(Value::Null) => cli.seed,
            Some(s) => Some(
                s.as_u64()
                    .ok_or_else(|| UsageError("\"seed\" must be a nonnegative integer".into()))?,
            ),
        };
        match v.get("bounds") {
            None | Some(Value::Null) => {}
            Some(Value::String(s)) => bounds = s.parse()?,
            Some(_) => return Err(UsageError("\"bounds\" must be a string".into())),
        }
        if let Some(b) = &cli.bounds {
            bounds = b.parse()?;
        }
        return Ok(Request {
            command,
            payload,
            seed,
            bounds,
        });
    }
    if let Some(b) = &cli.bounds {
        bounds = b.parse()?;
    }
    let sub = cli
        .command
        .ok_or_else(|| UsageError("missing command; see --help".into()))?;
    let (command, payload) = match &sub {
        Sub::Stratum(a) => (Command::Stratum, collect_payload(&a.payload, &[("gamma", &a.gamma)])?),
        Sub::Classify(a) => (Command::Classify, collect_payload(&a.payload, &[("gamma", &a.gamma)])?),
        Sub::Factorize(a) => (Command::Factorize, collect_payload(&a.payload, &[("gamma", &a.gamma)])?),
        Sub::Xi(a) => (
            Command::Xi,
            collect_payload(&a.payload, &[("lambda", &a.lambda), ("xi", &a.xi)])?,
        ),
        Sub::Dims(a) => (
            Command::Dims,
            collect_payload(&a.payload, &[("lambda", &a.lambda), ("xi", &a.xi)])?,
        ),
        Sub::Quad(a) => (
            Command::Quad,
            collect_payload(&a.payload, &[("gamma", &a.gamma), ("q1", &a.q1), ("q2", &a.q2)])?,
        ),
        Sub::Triple(a) => (
            Command::Triple,
            collect_payload(&a.payload, &[("gamma", &a.gamma), ("q1", &a.q1), ("q2", &a.q2)])?,
        ),
        Sub::Extract(a) => (
            Command::Extract,
            collect_payload(&a.payload, &[("quad", &a.quad), ("triple", &a.triple)])?,
        ),
        Sub::AdhmSample(a) => (
            Command::AdhmSample,
            collect_payload(&a.payload, &[("lambda", &a.lambda), ("xi", &a.xi)])?,
        ),
        Sub::AdhmToLoop(a) => (
            Command::AdhmToLoop,
            collect_payload(&a.payload, &[("datum", &a.datum)])?,
        ),
        Sub::Selftest(a) => (Command::Selftest, collect_payload(&a.payload, &[("suite", &a.suite)])?),
    };
    Ok(Request {
        command,
        payload,
        seed: cli.seed,
        bounds,
    })
}

// ---- payload decoding ----

fn field<'a>(p: &'a Value, name: &str) -> Result<&'a Value, UsageError> {
    p.get(name)
        .ok_or_else(|| UsageError(format!("payload is missing {name:?}")))
}

fn string_rows(v: &Value, what: &str) -> Result<Vec<Vec<String>>, UsageError> {
    let bad = || UsageError(format!("{what} must be an array of arrays of strings or integers"));
    let rows = v.as_array().ok_or_else(bad)?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| match x {
                    Value::String(s) => Ok(s.clone()),
                    Value::Number(n) if n.is_i64() => Ok(n.to_string()),
                    _ => Err(bad()),
                })
                .collect()
        })
        .collect()
}

fn decode_m1(v: &Value, what: &str) -> Result<LaurentMatrix1, UsageError> {
    let rows = string_rows(v, what)?;
    let m: LaurentMatrix1 = parse_matrix(&rows, &["t"]).map_err(|e| UsageError(format!("{what}: {e}")))?;
    Ok(m)
}

fn decode_m2(v: &Value, what: &str, vars: [&str; 2]) -> Result<LaurentMatrix2, UsageError> {
    let rows = string_rows(v, what)?;
    parse_matrix(&rows, &vars).map_err(|e| UsageError(format!("{what}: {e}")))
}

fn decode_q(v: &Value, what: &str) -> Result<QMatrix, UsageError> {
    let rows = string_rows(v, what)?;
    let entries = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| UsageError(format!("{what}: {e}")))?;
    if entries.is_empty() {
        return Err(UsageError(format!(
            "{what}: empty matrix; give its shape with \"{what}_shape\""
        )));
    }
    QMatrix::from_rows(entries).map_err(|e| UsageError(format!("{what}: {e}")))
}

fn decode_gamma(p: &Value) -> Result<LoopElement, UsageError> {
    let m = decode_m1(field(p, "gamma")?, "gamma")?;
    LoopElement::new(m).map_err(|e| UsageError(format!("gamma: {e}")))
}

fn decode_lambda(v: &Value) -> Result<Coweight, UsageError> {
    let bad = || UsageError("lambda must be an array of integers".into());
    let entries = v
        .as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|x| x.as_i64().ok_or_else(bad))
        .collect::<Result<Vec<_>, _>>()?;
    Coweight::new(entries).map_err(|e| UsageError(format!("lambda: {e}")))
}

fn decode_xi(v: &Value) -> Result<XiClass, UsageError> {
    let lambda = decode_lambda(field(v, "lambda")?)?;
    let count = |name: &str| -> Result<usize, UsageError> {
        field(v, name)?
            .as_u64()
            .map(|x| x as usize)
            .ok_or_else(|| UsageError(format!("{name} must be a nonnegative integer")))
    };
    XiClass::new(lambda, count("m_plus")?, count("m_minus")?).map_err(|e| UsageError(format!("xi: {e}")))
}

fn usize_of(v: &Value, what: &str) -> Result<usize, UsageError> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| UsageError(format!("{what} must be a nonnegative integer")))
}

fn decode_dims_a(v: &Value) -> Result<DimVectorA, UsageError> {
    let obj = v
        .as_object()
        .ok_or_else(|| UsageError("dims must be an object".into()))?;
    let mut out = BTreeMap::new();
    for (k, d) in obj {
        let i: i64 = k
            .parse()
            .map_err(|_| UsageError(format!("dims key {k:?} is not an integer")))?;
        out.insert(i, usize_of(d, "dims entry")?);
    }
    Ok(DimVectorA::new(out))
}

fn decode_dims_d(v: &Value) -> Result<DimVectorD, UsageError> {
    let obj = v
        .as_object()
        .ok_or_else(|| UsageError("dims must be an object".into()))?;
    let mut plus = 0;
    let mut minus = 0;
    let mut rest = BTreeMap::new();
    for (k, d) in obj {
        let d = usize_of(d, "dims entry")?;
        match k.as_str() {
            "0+" => plus = d,
            "0-" => minus = d,
            _ => {
                let i: usize = k
                    .parse()
                    .ok()
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| UsageError(format!("dims key {k:?}")))?;
                rest.insert(i, d);
            }
        }
    }
    let top = rest.keys().max().copied().unwrap_or(0);
    let v = (1..=top).map(|i| rest.get(&i).copied().unwrap_or(0)).collect();
    Ok(DimVectorD::new(plus, minus, v))
}

/// A possibly empty matrix: `{"rows": n, "cols": m, "entries": [...]}` or a plain array.
fn decode_q_shaped(v: Option<&Value>, rows: usize, cols: usize, what: &str) -> Result<QMatrix, UsageError> {
    let m = match v {
        None | Some(Value::Null) => QMatrix::zeros(rows, cols),
        Some(x) if rows == 0 || cols == 0 => {
            if x.as_array()
                .is_some_and(|a| a.iter().all(|r| r.as_array().is_some_and(Vec::is_empty)))
            {
                QMatrix::zeros(rows, cols)
            } else {
                return Err(UsageError(format!("{what} must be {rows}x{cols}")));
            }
        }
        Some(x) => decode_q(x, what)?,
    };
    if m.rows() != rows || m.cols() != cols {
        return Err(UsageError(format!("{what} must be {rows}x{cols}")));
    }
    Ok(m)
}

fn graded_maps(
    v: Option<&Value>,
    what: &str,
    shape: impl Fn(i64) -> (usize, usize),
) -> Result<BTreeMap<i64, QMatrix>, UsageError> {
    let mut out = BTreeMap::new();
    let Some(v) = v else { return Ok(out) };
    let obj = v
        .as_object()
        .ok_or_else(|| UsageError(format!("{what} must be an object keyed by grade")))?;
    for (k, m) in obj {
        let i: i64 = k
            .parse()
            .map_err(|_| UsageError(format!("{what} key {k:?} is not an integer")))?;
        let (r, c) = shape(i);
        out.insert(i, decode_q_shaped(Some(m), r, c, &format!("{what}[{k}]"))?);
    }
    Ok(out)
}

enum Datum {
    A(AdhmDatumA),
    D(AdhmDatumD),
}

fn decode_datum(v: &Value) -> Result<Datum, UsageError> {
    let r = usize_of(field(v, "r")?, "r")?;
    let kind = field(v, "type")?.as_str().unwrap_or_default();
    let adhm = |e: crate::adhm::AdhmError| UsageError(format!("datum: {e}"));
    match kind {
        "A" => {
            let dims = decode_dims_a(field(v, "dims")?)?;
            let b1 = graded_maps(v.get("B1"), "B1", |k| (dims.get(k - 1), dims.get(k)))?;
            let b2 = graded_maps(v.get("B2"), "B2", |k| (dims.get(k + 1), dims.get(k)))?;
            let i = decode_q_shaped(v.get("i"), dims.get(0), r, "i")?;
            let j = decode_q_shaped(v.get("j"), r, dims.get(0), "j")?;
            Ok(Datum::A(AdhmDatumA::new(r, dims, b1, b2, i, j).map_err(adhm)?))
        }
        "D" => {
            let dims = decode_dims_d(field(v, "dims")?)?;
            let (p, m, v1) = (dims.v0_plus, dims.v0_minus, dims.get(1));
            let pos =
                |name: &str, shape: &dyn Fn(usize) -> (usize, usize)| -> Result<BTreeMap<usize, QMatrix>, UsageError> {
                    let g = graded_maps(v.get(name), name, |k| shape(k.max(0) as usize))?;
                    g.into_iter()
                        .map(|(k, x)| {
                            if k >= 1 {
                                Ok((k as usize, x))
                            } else {
                                Err(UsageError(format!("{name} keys start at 1")))
                            }
                        })
                        .collect()
                };
            let maps = FoldedMaps {
                b1_plus: Some(decode_q_shaped(v.get("B1_plus"), p, v1, "B1_plus")?),
                b1_minus: Some(decode_q_shaped(v.get("B1_minus"), m, v1, "B1_minus")?),
                b2_plus: Some(decode_q_shaped(v.get("B2_plus"), v1, p, "B2_plus")?),
                b2_minus: Some(decode_q_shaped(v.get("B2_minus"), v1, m, "B2_minus")?),
                b1: pos("B1", &|k| (dims.get(k), dims.get(k + 1)))?,
                b2: pos("B2", &|k| (dims.get(k + 1), dims.get(k)))?,
                i_map: Some(decode_q_shaped(v.get("i"), p, r, "i")?),
                j_map: Some(decode_q_shaped(v.get("j"), r, p, "j")?),
            };
            Ok(Datum::D(AdhmDatumD::new(r, dims, maps).map_err(adhm)?))
        }
        _ => Err(UsageError("datum type must be \"A\" or \"D\"".into())),
    }
}

// ---- encoding ----

fn enc_m1(m: &LaurentMatrix1) -> Value {
    json!(format_matrix(m, &["t"]))
}

fn enc_q(m: &QMatrix) -> Value {
    json!(format_qmatrix(m))
}

fn enc_lambda(l: &Coweight) -> Value {
    json!(l.entries())
}

fn enc_dims_a(v: &DimVectorA) -> Value {
    Value::Object(v.entries().iter().map(|(k, d)| (k.to_string(), json!(d))).collect())
}

fn enc_dims_d(v: &DimVectorD) -> Value {
    let mut m = Map::new();
    m.insert("0+".into(), json!(v.v0_plus));
    m.insert("0-".into(), json!(v.v0_minus));
    for (k, d) in v.positive().iter().enumerate() {
        m.insert((k + 1).to_string(), json!(d));
    }
    Value::Object(m)
}

pub fn encode_quad(q: &TransitionQuad) -> Value {
    let v = ["t", "u"];
    json!({
        "g01_00": format_matrix(&q.g01_00, &v),
        "g10_00": format_matrix(&q.g10_00, &v),
        "g11_01": format_matrix(&q.g11_01, &v),
        "g11_10": format_matrix(&q.g11_10, &v),
    })
}

pub fn encode_triple(tr: &TransitionTriple) -> Value {
    let v = ["s1", "s2"];
    json!({
        "g1_0": format_matrix(&tr.g1_0, &v),
        "g2_0": format_matrix(&tr.g2_0, &v),
        "g2_1": format_matrix(&tr.g2_1, &v),
    })
}

pub fn encode_datum_a(d: &AdhmDatumA) -> Value {
    let dims = d.dims();
    let mut b1 = Map::new();
    let mut b2 = Map::new();
    for &k in dims.entries().keys() {
        if dims.get(k - 1) > 0 {
            b1.insert(k.to_string(), enc_q(&d.b1(k)));
        }
        if dims.get(k + 1) > 0 {
            b2.insert(k.to_string(), enc_q(&d.b2(k)));
        }
    }
    json!({
        "type": "A",
        "r": d.r(),
        "dims": enc_dims_a(dims),
        "B1": b1,
        "B2": b2,
        "i": enc_q(d.i_map()),
        "j": enc_q(d.j_map()),
    })
}

pub fn encode_datum_d(d: &AdhmDatumD) -> Value {
    let maps = d.maps();
    let opt = |m: &Option<QMatrix>| m.as_ref().map(enc_q).unwrap_or(Value::Null);
    let graded = |g: &BTreeMap<usize, QMatrix>| -> Map<String, Value> {
        g.iter()
            .filter(|(_, m)| m.rows() > 0 && m.cols() > 0)
            .map(|(k, m)| (k.to_string(), enc_q(m)))
            .collect()
    };
    json!({
        "type": "D",
        "r": d.r(),
        "dims": enc_dims_d(d.dims()),
        "B1_plus": opt(&maps.b1_plus),
        "B1_minus": opt(&maps.b1_minus),
        "B2_plus": opt(&maps.b2_plus),
        "B2_minus": opt(&maps.b2_minus),
        "B1": graded(&maps.b1),
        "B2": graded(&maps.b2),
        "i": enc_q(d.i_map()),
        "j": enc_q(d.j_map()),
    })
}

// ---- dispatch ----

enum Failure {
    Usage(UsageError),
    Module(&'static str, String),
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e)
    }
}

macro_rules! module_error {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::Module(e.code(), e.to_string())
            }
        }
    )*};
}

module_error!(
    crate::loopgroup::LoopError,
    crate::transitions::TransitionError,
    crate::adhm::AdhmError
);

/// Result of a request: a report, or a usage error (exit code 2).
pub fn execute(req: &Request) -> Result<Report, UsageError> {
    match run(req) {
        Ok(r) => Ok(r),
        Err(Failure::Usage(u)) => Err(u),
        Err(Failure::Module(code, msg)) => Ok(Report::failed(code, msg)),
    }
}

fn split_opts(req: &Request) -> SplitOptions {
    SplitOptions {
        max_order: req.bounds.split_max_order,
    }
}

fn sample_opts(req: &Request) -> SampleOptions {
    SampleOptions {
        retries: req.bounds.sample_retries,
    }
}

fn build_factorization(p: &Value) -> Result<(Factorization, CheckReport), Failure> {
    let gamma = decode_gamma(p)?;
    let mut checks = CheckReport::new();
    let f = match (p.get("q1"), p.get("q2")) {
        (Some(q1), Some(q2)) => {
            let f = Factorization {
                q1: decode_m1(q1, "q1")?,
                lambda: stratum(&gamma)?,
                q2: decode_m1(q2, "q2")?,
            };
            checks.push(Check::from_bool("factorization", f.is_factorization_of(&gamma), || {
                "q1 t^lambda q2 differs from gamma".into()
            }));
            f
        }
        (None, None) => factorize(&gamma)?,
        _ => return Err(UsageError("give both q1 and q2 or neither".into()).into()),
    };
    Ok((f, checks))
}

fn run(req: &Request) -> Result<Report, Failure> {
    let p = &req.payload;
    match req.command {
        Command::Stratum => {
            let g = decode_gamma(p)?;
            Ok(Report::new(
                json!({"lambda": enc_lambda(&stratum(&g)?)}),
                CheckReport::new(),
            ))
        }
        Command::Classify => {
            let g = decode_gamma(p)?;
            let c = classify_fixed(&g)?;
            Ok(Report::new(
                json!({"lambda": enc_lambda(&c.lambda), "m_plus": c.m_plus, "m_minus": c.m_minus}),
                CheckReport::new(),
            ))
        }
        Command::Factorize => {
            let g = decode_gamma(p)?;
            let f = factorize(&g)?;
            let mut checks = CheckReport::new();
            checks.push(Check::from_bool("reconstruct", f.is_factorization_of(&g), String::new));
            Ok(Report::new(
                json!({"q1": enc_m1(&f.q1), "lambda": enc_lambda(&f.lambda), "q2": enc_m1(&f.q2)}),
                checks,
            ))
        }
        Command::Xi => {
            let lam = decode_lambda(field(p, "lambda")?)?;
            let pairs: Vec<Value> = xi_enumerate(&lam)
                .iter()
                .map(|x| json!([x.m_plus, x.m_minus]))
                .collect();
            Ok(Report::new(Value::Array(pairs), CheckReport::new()))
        }
        Command::Dims => {
            if let Some(xi) = p.get("xi") {
                let xi = decode_xi(xi)?;
                let r = xi.lambda.rank();
                let result = match vd_from_xi(&xi)? {
                    None => json!({"empty": true}),
                    Some(vd) => json!({
                        "empty": false,
                        "v": enc_dims_d(&vd),
                        "tau": enc_dims_d(&tau_multiplicities_d(&vd, r)?),
                        "quiver_dim": quiver_dim_d(&vd, &framing_d(r)),
                    }),
                };
                return Ok(Report::new(result, CheckReport::new()));
            }
            let lam = decode_lambda(field(p, "lambda")?)?;
            let r = lam.rank();
            let v = v_from_lambda(&lam);
            let tau: Map<String, Value> = tau_multiplicities_a(&v, r)?
                .iter()
                .map(|(k, m)| (k.to_string(), json!(m)))
                .collect();
            Ok(Report::new(
                json!({
                    "v": enc_dims_a(&v),
                    "tau": tau,
                    "chern": chern_number(&v),
                    "quiver_dim": quiver_dim_a(&v, &framing_a(r)),
                }),
                CheckReport::new(),
            ))
        }
        Command::Quad => {
            let (f, mut checks) = build_factorization(p)?;
            if !checks.all_pass() {
                return Ok(Report::new(Value::Null, checks));
            }
            let q = build_quad(&f)?;
            checks.extend(verify_quad(&q));
            Ok(Report::new(encode_quad(&q), checks))
        }
        Command::Triple => {
            let (f, mut checks) = build_factorization(p)?;
            if !checks.all_pass() {
                return Ok(Report::new(Value::Null, checks));
            }
            let tr = build_triple(&f)?;
            checks.extend(verify_triple(&tr));
            Ok(Report::new(encode_triple(&tr), checks))
        }
        Command::Extract => {
            if let Some(q) = p.get("quad") {
                let tu = ["t", "u"];
                let quad = TransitionQuad {
                    g01_00: decode_m2(field(q, "g01_00")?, "g01_00", tu)?,
                    g10_00: decode_m2(field(q, "g10_00")?, "g10_00", tu)?,
                    g11_01: decode_m2(field(q, "g11_01")?, "g11_01", tu)?,
                    g11_10: decode_m2(field(q, "g11_10")?, "g11_10", tu)?,
                };
                let checks = verify_quad(&quad);
                let g = extract_quad(&quad, split_opts(req))?;
                Ok(Report::new(json!({"gamma": enc_m1(g.body())}), checks))
            } else {
                let t = field(p, "triple")?;
                let s = ["s1", "s2"];
                let tr = TransitionTriple {
                    g1_0: decode_m2(field(t, "g1_0")?, "g1_0", s)?,
                    g2_0: decode_m2(field(t, "g2_0")?, "g2_0", s)?,
                    g2_1: decode_m2(field(t, "g2_1")?, "g2_1", s)?,
                };
                let checks = verify_triple(&tr);
                let g = extract_triple(&tr)?;
                Ok(Report::new(json!({"gamma": enc_m1(g.body())}), checks))
            }
        }
        Command::AdhmSample => {
            let seed = req.seed.unwrap_or(0);
            if let Some(xi) = p.get("xi") {
                let xi = decode_xi(xi)?;
                let d = sample_datum_d(&xi, seed, sample_opts(req))?;
                let mut checks = d.validate();
                let (s, c) = d.stability();
                checks.push(Check::from_bool("stable", s, String::new));
                checks.push(Check::from_bool("costable", c, String::new));
                return Ok(Report::new(encode_datum_d(&d), checks));
            }
            let lam = decode_lambda(field(p, "lambda")?)?;
            let d = sample_datum_a(&lam, seed, sample_opts(req))?;
            let mut checks = d.validate();
            let (s, c) = d.stability();
            checks.push(Check::from_bool("stable", s, String::new));
            checks.push(Check::from_bool("costable", c, String::new));
            Ok(Report::new(encode_datum_a(&d), checks))
        }
        Command::AdhmToLoop => match decode_datum(field(p, "datum")?)? {
            Datum::A(d) => {
                let checks = d.validate();
                let g = theta_psi_a(&d)?;
                Ok(Report::new(
                    json!({"gamma": enc_m1(g.body()), "lambda": enc_lambda(&stratum(&g)?)}),
                    checks,
                ))
            }
            Datum::D(d) => {
                let checks = d.validate();
                let g = theta_psi_d(&d)?;
                let c = classify_fixed(&g)?;
                Ok(Report::new(
                    json!({
                        "gamma": enc_m1(g.body()),
                        "lambda": enc_lambda(&c.lambda),
                        "m_plus": c.m_plus,
                        "m_minus": c.m_minus,
                    }),
                    checks,
                ))
            }
        },
        Command::Selftest => {
            let names: Vec<&str> = match p.get("suite") {
                None | Some(Value::Null) => SUITES.to_vec(),
                Some(Value::String(s)) => match SUITES.iter().find(|n| **n == s.as_str()) {
                    Some(n) => vec![*n],
                    None => {
                        return Err(
                            UsageError(format!("unknown suite {s:?}; expected one of {}", SUITES.join(", "))).into(),
                        )
                    }
                },
                Some(_) => return Err(UsageError("suite must be a string".into()).into()),
            };
            let mut checks = CheckReport::new();
            let mut summary = Vec::new();
            let mut result = Map::new();
            for name in names {
                let rep = run_suite(name, &req.bounds).expect("known suite");
                let failed = rep.failures().count();
                let total = rep.checks.len();
                summary.push(format!(
                    "{name}: {} ({}/{} checks passed)",
                    if failed == 0 { "pass" } else { "FAIL" },
                    total - failed,
                    total
                ));
                result.insert(name.to_string(), json!({"passed": total - failed, "failed": failed}));
                for c in rep.checks {
                    checks.push(Check {
                        name: format!("{name}/{}", c.name),
                        ..c
                    });
                }
            }
            let mut rep = Report::new(Value::Object(result), checks);
            rep.summary = summary;
            Ok(rep)
        }
    }
}

/// Canonical JSON text (sorted keys, one line) and the exit code.
pub fn emit(rep: &Report) -> (String, i32) {
    let text = serde_json::to_string(&rep.to_json()).expect("serializable");
    (text, if rep.ok { 0 } else { 1 })
}

/// Full pipeline: `(stdout, stderr, exit code)`.
pub fn main_with(
    args: &[String],
    env_bounds: Option<&str>,
    read_stdin: impl FnOnce() -> std::io::Result<String>,
) -> (String, String, i32) {
    let usage = |e: UsageError| {
        let body = json!({"ok": false, "error": {"code": "UsageError", "message": e.0}});
        (serde_json::to_string(&body).expect("serializable"), e.0.clone(), 2)
    };
    if let Err(e) = Cli::try_parse_from(args) {
        use clap::error::ErrorKind;
        if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
            return (e.to_string(), String::new(), 0);
        }
    }
    let req = match parse(args, env_bounds, read_stdin) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    match execute(&req) {
        Ok(rep) => {
            let (out, code) = emit(&rep);
            (out, rep.summary.join("\n"), code)
        }
        Err(e) => usage(e),
    }
}
