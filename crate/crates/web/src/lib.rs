//! wasm-bindgen bindings for the static demo page in `www/`.
//!
//! Every export takes plain strings/numbers and returns a JSON string; errors
//! come back as thrown JS strings.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use brauer::coeffs::{format_rational, parse_rational};
use brauer::diagrams::BrauerDiagram;
use brauer::repform::build_representation;
use brauer::shapes::{branch, enumerate_o, YoungDiagram};

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Basis paths, Jucys-Murphy eigenvalues and generator matrices of `V(λ,n)`.
pub fn rep_json(lambda: &str, n: usize, big_n: &str) -> Result<Value, String> {
    if n == 0 || n > 8 {
        return Err("n must be between 1 and 8".into());
    }
    let lambda = YoungDiagram::parse(lambda).map_err(err)?;
    let big_n = parse_rational(big_n).map_err(err)?;
    let r = build_representation(&lambda, n, &big_n).map_err(err)?;
    if r.basis.dim() > 200 {
        return Err(format!("dimension {} is too large to display", r.basis.dim()));
    }
    let dense = |m: &brauer::repform::RepMatrix| -> Vec<Vec<String>> {
        m.to_dense().iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect()
    };
    let x: Vec<Vec<String>> = (0..r.basis.dim())
        .map(|i| r.x.iter().map(|col| format_rational(&col[i])).collect())
        .collect();
    Ok(json!({
        "lambda": lambda.to_string(),
        "dim": r.basis.dim(),
        "paths": r.basis.paths.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "x": x,
        "s": r.s.iter().map(dense).collect::<Vec<_>>(),
        "sbar": r.sbar.iter().map(dense).collect::<Vec<_>>(),
    }))
}

/// Levels `0..=n` of the Bratteli diagram at integer `N`: vertices with path
/// counts and the edges between consecutive levels.
pub fn bratteli_json(n: usize, big_n: u64) -> Result<Value, String> {
    if big_n == 0 || n > 10 {
        return Err("need N ≥ 1 and n ≤ 10".into());
    }
    let mut levels = vec![vec![(YoungDiagram::empty(), 1u64)]];
    let mut edges = Vec::new();
    for k in 1..=n {
        let shapes = enumerate_o(k, big_n);
        let mut counts = vec![0u64; shapes.len()];
        let mut e = Vec::new();
        for (i, (mu, c)) in levels[k - 1].iter().enumerate() {
            for nu in branch(mu, k, big_n) {
                if let Some(j) = shapes.iter().position(|s| *s == nu) {
                    counts[j] += c;
                    e.push([i, j]);
                }
            }
        }
        edges.push(e);
        levels.push(shapes.into_iter().zip(counts).collect());
    }
    let levels: Vec<Vec<Value>> = levels
        .iter()
        .map(|l| l.iter().map(|(s, c)| json!({"shape": s.to_string(), "paths": c})).collect())
        .collect();
    Ok(json!({"levels": levels, "edges": edges}))
}

/// Product `a·b` of two diagram specs (edge lists or generator words).
pub fn product_json(n: usize, a: &str, b: &str) -> Result<Value, String> {
    if n == 0 || n > 12 {
        return Err("n must be between 1 and 12".into());
    }
    let x = BrauerDiagram::parse_spec(n, a).map_err(err)?;
    let y = BrauerDiagram::parse_spec(n, b).map_err(err)?;
    let p = x.multiply(&y).map_err(err)?;
    let side = |e: &brauer::diagrams::AlgebraElement| -> Value {
        e.terms().map(|(d, c)| json!({"coeff": c.to_string(), "edges": d.edges()})).collect()
    };
    Ok(json!({"n": n, "a": side(&x), "b": side(&y), "product": side(&p)}))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn representation(lambda: &str, n: usize, big_n: &str) -> Result<String, JsValue> {
    to_js(rep_json(lambda, n, big_n))
}

#[wasm_bindgen]
pub fn bratteli(n: usize, big_n: u32) -> Result<String, JsValue> {
    to_js(bratteli_json(n, big_n as u64))
}

#[wasm_bindgen]
pub fn product(n: usize, a: &str, b: &str) -> Result<String, JsValue> {
    to_js(product_json(n, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rep_of_one_box() {
        let v = rep_json("1", 3, "3").unwrap();
        assert_eq!(v["dim"], 3);
        assert_eq!(v["s"].as_array().unwrap().len(), 2);
        assert!(rep_json("1", 0, "3").is_err());
        assert!(rep_json("x", 2, "3").is_err());
    }

    #[test]
    fn bratteli_counts_match_dimensions() {
        let v = bratteli_json(3, 3).unwrap();
        let top = v["levels"][3].as_array().unwrap();
        let total: u64 = top.iter().map(|s| s["paths"].as_u64().unwrap().pow(2)).sum();
        // dim B(3) = 5!! = 15
        assert_eq!(total, 15);
        assert_eq!(v["edges"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn product_with_loop() {
        let v = product_json(2, "sbar1", "sbar1").unwrap();
        assert_eq!(v["product"][0]["coeff"], "N");
        assert!(product_json(2, "s3", "s1").is_err());
    }
}
