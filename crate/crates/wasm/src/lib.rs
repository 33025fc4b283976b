//! WebAssembly bindings for the demo page in `www/`.
//!
//! Every export takes the code as text in the `pauli_strings` or
//! `binary_matrix` format and returns a JSON string.

use serde::Serialize;
use stabcode::channel::{build_table, run_with_table, PauliChannel, SimOptions};
use stabcode::codefile::parse_code;
use stabcode::degeneracy::{classify_with, ClassifyOptions, ScanMode};
use stabcode::{codes, PauliOperator, StabilizerCode};
use wasm_bindgen::prelude::*;

/// Largest error set the page will enumerate.
const CLASSIFY_BUDGET: u64 = 2_000_000;
const MAX_CURVE_POINTS: usize = 64;

#[derive(Serialize)]
struct CodeInfo {
    n: usize,
    k: usize,
    label: Option<String>,
    css: bool,
    generators: Vec<String>,
}

#[derive(Serialize)]
struct SyndromeView {
    syndrome: String,
    violated: Vec<usize>,
    correction: Option<PauliOperator>,
    /// Whether correcting with the table entry restores the code state.
    recovered: Option<bool>,
}

#[derive(Serialize)]
struct CurvePoint {
    p: f64,
    rate: f64,
    lo: f64,
    hi: f64,
}

fn load(text: &str) -> Result<StabilizerCode, String> {
    parse_code(text).map_err(|e| e.to_string())
}

fn to_json(v: &impl Serialize) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

pub fn builtin_code_text(name: &str) -> Result<String, String> {
    let gens: &[&str] = match name {
        "steane" => &codes::STEANE,
        "shor" => &codes::SHOR,
        "five-qubit" => &codes::FIVE_QUBIT,
        "bit-flip" => &codes::BIT_FLIP,
        _ => return Err(format!("unknown code {name:?}")),
    };
    Ok(gens.join("\n"))
}

pub fn code_info_json(text: &str) -> Result<String, String> {
    let code = load(text)?;
    to_json(&CodeInfo {
        n: code.n(),
        k: code.k(),
        label: code.label().map(str::to_owned),
        css: code.is_css().is_some(),
        generators: code
            .check_matrix()
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect(),
    })
}

pub fn syndrome_json(text: &str, error: &str) -> Result<String, String> {
    let code = load(text)?;
    let e: PauliOperator = error.parse().map_err(|e: stabcode::Error| e.to_string())?;
    let s = code.syndrome(&e).map_err(|e| e.to_string())?;
    let (correction, recovered) = if code.num_generators() <= 16 {
        let table = build_table(&code, None);
        let r = table.get(&s).cloned();
        let ok = r.as_ref().map(|r| {
            let residual = r.product(&e).expect("same length");
            code.in_stabilizer(&residual).expect("same length")
        });
        (r, ok)
    } else {
        (None, None)
    };
    to_json(&SyndromeView {
        syndrome: s.bits().to_bit_string(),
        violated: s.bits().iter_ones().map(|j| j + 1).collect(),
        correction,
        recovered,
    })
}

pub fn classify_json(text: &str, t: usize) -> Result<String, String> {
    let code = load(text)?;
    let opts = ClassifyOptions {
        mode: ScanMode::Exhaustive,
        run_criteria: true,
        budget: CLASSIFY_BUDGET,
    };
    let report = classify_with(&code, t, &opts).map_err(|e| e.to_string())?;
    to_json(&report)
}

pub fn rate_curve_json(
    text: &str,
    p_max: f64,
    points: usize,
    trials: u64,
    seed: u64,
) -> Result<String, String> {
    let code = load(text)?;
    if !(2..=MAX_CURVE_POINTS).contains(&points) {
        return Err(format!("points must be between 2 and {MAX_CURVE_POINTS}"));
    }
    if !(p_max > 0.0 && p_max <= 1.0) {
        return Err("p_max must be in (0, 1]".into());
    }
    let table = build_table(&code, None);
    let opts = SimOptions::default();
    let mut curve = Vec::with_capacity(points);
    for i in 1..=points {
        let p = p_max * i as f64 / points as f64;
        let ch = PauliChannel::depolarizing(p).map_err(|e| e.to_string())?;
        let r =
            run_with_table(&code, &table, &ch, trials, seed, &opts).map_err(|e| e.to_string())?;
        curve.push(CurvePoint {
            p,
            rate: r.rate,
            lo: r.ci95.0,
            hi: r.ci95.1,
        });
    }
    to_json(&curve)
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = builtinCode)]
pub fn builtin_code(name: &str) -> Result<String, JsError> {
    js(builtin_code_text(name))
}

#[wasm_bindgen(js_name = codeInfo)]
pub fn code_info(text: &str) -> Result<String, JsError> {
    js(code_info_json(text))
}

#[wasm_bindgen]
pub fn syndrome(text: &str, error: &str) -> Result<String, JsError> {
    js(syndrome_json(text, error))
}

#[wasm_bindgen]
pub fn classify(text: &str, t: usize) -> Result<String, JsError> {
    js(classify_json(text, t))
}

/// Logical error rate at `points` evenly spaced depolarizing strengths up
/// to `p_max`, each from `trials` trials.
#[wasm_bindgen(js_name = rateCurve)]
pub fn rate_curve(
    text: &str,
    p_max: f64,
    points: usize,
    trials: u32,
    seed: u32,
) -> Result<String, JsError> {
    js(rate_curve_json(
        text,
        p_max,
        points,
        u64::from(trials),
        u64::from(seed),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn steane() -> String {
        builtin_code_text("steane").unwrap()
    }

    #[test]
    fn info() {
        let v: Value = serde_json::from_str(&code_info_json(&steane()).unwrap()).unwrap();
        assert_eq!(v["n"], 7);
        assert_eq!(v["k"], 1);
        assert_eq!(v["css"], true);
    }

    #[test]
    fn syndrome_view() {
        let v: Value = serde_json::from_str(&syndrome_json(&steane(), "IIIIIIX").unwrap()).unwrap();
        assert_eq!(v["syndrome"], "000111");
        assert_eq!(v["violated"], serde_json::json!([4, 5, 6]));
        assert_eq!(v["correction"], "IIIIIIX");
        assert_eq!(v["recovered"], true);
        let v: Value = serde_json::from_str(&syndrome_json(&steane(), "XXIIIII").unwrap()).unwrap();
        assert_eq!(v["recovered"], false);
    }

    #[test]
    fn classify_view() {
        let shor = builtin_code_text("shor").unwrap();
        let v: Value = serde_json::from_str(&classify_json(&shor, 1).unwrap()).unwrap();
        assert_eq!(v["verdict"], "degenerate");
        assert_eq!(v["exhaustive"], true);
    }

    #[test]
    fn curve_is_increasing_at_the_ends() {
        let v: Vec<Value> =
            serde_json::from_str(&rate_curve_json(&steane(), 0.2, 4, 4000, 1).unwrap()).unwrap();
        assert_eq!(v.len(), 4);
        assert!(v[0]["rate"].as_f64().unwrap() < v[3]["rate"].as_f64().unwrap());
    }

    #[test]
    fn errors_are_messages() {
        assert!(code_info_json("XQ").unwrap_err().contains("line 1"));
        assert!(syndrome_json(&steane(), "XX").is_err());
        assert!(rate_curve_json(&steane(), 0.2, 1, 10, 1).is_err());
        assert!(builtin_code_text("toric").is_err());
    }
}
