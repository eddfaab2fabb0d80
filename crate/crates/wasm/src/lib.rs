//! Browser bindings for the strictification of pointed finite sets.
//!
//! Every exported function takes and returns JSON strings so the page needs
//! no generated glue beyond `wasm-bindgen`'s. Failures come back as
//! `{"error": "..."}`.
//!
//! Polynomials are written as lists of monomials, each a list of sizes:
//! `[[2,3],[2]]` is `⟨2⟩∧⟨3⟩ ∨ ⟨2⟩`.

use biperm::checks::SamplerConfig;
use biperm::indexcalc::{sorting_perm, IndexFn};
use biperm::instances::{Fsk, FskMor, FskObj};
use biperm::sample::Bounds;
use biperm::transport::{eta, LeftAdjoint, SymBimonoidalFunctor};
use biperm::verify::{run, Instance};
use biperm::{Bipermutative, BsObj, Strictified};
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

type Poly = BsObj<FskObj>;

/// Largest polynomial the page accepts, to keep the drawings legible.
const MAX_POINTS: usize = 64;

fn parse_poly(text: &str) -> Result<Poly, String> {
    let raw: Vec<Vec<usize>> = serde_json::from_str(text).map_err(|e| format!("polynomial: {e}"))?;
    let poly = BsObj::new(raw.into_iter().map(|m| m.into_iter().map(FskObj).collect()).collect());
    let size = LeftAdjoint::new(Fsk).map_obj(&poly).0;
    if size > MAX_POINTS {
        return Err(format!(
            "polynomial evaluates to ⟨{size}⟩; at most ⟨{MAX_POINTS}⟩ is drawn"
        ));
    }
    Ok(poly)
}

#[derive(Serialize)]
struct Monomial {
    letters: Vec<usize>,
    value: usize,
}

fn monomials(bs: &Strictified<Fsk>, a: &Poly) -> Vec<Monomial> {
    a.monomials()
        .iter()
        .map(|m| Monomial {
            letters: m.iter().map(|x| x.0).collect(),
            value: bs.eval_monomial(m).0,
        })
        .collect()
}

/// Monomial values of `a`, `L(a)`, and the unit `η_a : a → RL(a)`.
pub fn evaluate_poly(poly: &str) -> Result<String, String> {
    let a = parse_poly(poly)?;
    let bs = Strictified::new(Fsk);
    let unit = eta(&bs, &a).map_err(|e| e.to_string())?;
    let out = json!({
        "monomials": monomials(&bs, &a),
        "additive_len": a.additive_len(),
        "value": LeftAdjoint::new(Fsk).map_obj(&a).0,
        "eta": {
            "reindex": unit.reindex().values(),
            "components": unit.components().iter().map(FskMor::images).collect::<Vec<_>>(),
            "invertible": bs.invert(&unit).is_some(),
        },
    });
    Ok(out.to_string())
}

/// The morphism `(φ; 1)` out of `a` whose codomain collapses each fiber of φ
/// to a single letter, and its image under `L`: the block permutation that
/// sorts summands by φ-value.
pub fn reindex_poly(poly: &str, phi: &str, cod_len: usize) -> Result<String, String> {
    let a = parse_poly(poly)?;
    let values: Vec<usize> = serde_json::from_str(phi).map_err(|e| format!("φ: {e}"))?;
    if values.len() != a.additive_len() {
        return Err(format!(
            "φ has {} values but the polynomial has {} monomials",
            values.len(),
            a.additive_len()
        ));
    }
    let phi = IndexFn::new(cod_len, values).map_err(|e| e.to_string())?;
    let bs = Strictified::new(Fsk);
    let fiber_values: Vec<usize> = phi.fibers().iter().map(|fib| bs.eval_fiber(&a, fib).0).collect();
    let cod = BsObj::new(fiber_values.iter().map(|&n| vec![FskObj(n)]).collect());
    let components = fiber_values.iter().map(|&n| FskMor::identity(n)).collect();
    let f = bs
        .mor(a.clone(), cod.clone(), phi.clone(), components)
        .map_err(|e| e.to_string())?;
    let image = LeftAdjoint::new(Fsk).map_mor(&f).map_err(|e| e.to_string())?;
    let out = json!({
        "monomials": monomials(&bs, &a),
        "fibers": phi.fibers(),
        "sorting": sorting_perm(&phi).images(),
        "codomain": monomials(&bs, &cod),
        "image": image.images(),
    });
    Ok(out.to_string())
}

/// Runs one suite single-threaded and returns the report as JSON, with its
/// text rendering under `"text"`.
pub fn check_suite(instance: &str, suite: &str, seed: u64, samples: usize) -> Result<String, String> {
    let instance = match instance {
        "fsk" | "bool-semiring" => Instance::parse(instance).map_err(|e| e.to_string())?,
        other => return Err(format!("unknown instance `{other}`")),
    };
    let config = SamplerConfig {
        seed,
        bounds: Bounds {
            max_size: 2,
            max_add: 2,
            max_mul: 1,
        },
        samples: samples.clamp(1, 2000),
        exhaustive: false,
    };
    let report = run(&instance, &[suite.to_string()], &config).map_err(|e| e.to_string())?;
    let mut value = serde_json::to_value(&report).map_err(|e| e.to_string())?;
    value["text"] = report.to_text().into();
    Ok(value.to_string())
}

fn respond(outcome: Result<String, String>) -> String {
    outcome.unwrap_or_else(|e| json!({ "error": e }).to_string())
}

#[wasm_bindgen]
pub fn evaluate(poly: &str) -> String {
    respond(evaluate_poly(poly))
}

#[wasm_bindgen]
pub fn reindex(poly: &str, phi: &str, cod_len: usize) -> String {
    respond(reindex_poly(poly, phi, cod_len))
}

#[wasm_bindgen]
pub fn check(instance: &str, suite: &str, seed: u32, samples: u32) -> String {
    respond(check_suite(instance, suite, seed.into(), samples as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn evaluate_reports_values_and_unit() {
        let v = parse(evaluate("[[2,3],[2]]"));
        assert_eq!(v["value"], 8);
        assert_eq!(v["monomials"][0]["value"], 6);
        assert_eq!(v["eta"]["reindex"], json!([1, 1]));
        assert_eq!(v["eta"]["invertible"], false);
        let v = parse(evaluate("[[2,3]]"));
        assert_eq!(v["eta"]["invertible"], true);
    }

    #[test]
    fn reindex_sorts_blocks() {
        // ⟨1⟩ ∨ ⟨2⟩ with φ = (2, 1): the second block moves in front
        let v = parse(reindex("[[1],[2]]", "[2,1]", 2));
        assert_eq!(v["sorting"], json!([2, 1]));
        assert_eq!(v["image"], json!([3, 1, 2]));
        assert_eq!(
            v["codomain"],
            json!([{"letters": [2], "value": 2}, {"letters": [1], "value": 1}])
        );
    }

    #[test]
    fn errors_are_json() {
        assert!(parse(evaluate("not json"))["error"].is_string());
        assert!(parse(reindex("[[1]]", "[1,1]", 1))["error"].is_string());
        assert!(parse(reindex("[[1]]", "[3]", 2))["error"].is_string());
        assert!(parse(evaluate("[[9,9]]"))["error"].is_string());
        assert!(parse(check("foo", "adjunction", 0, 10))["error"].is_string());
        assert!(parse(check("fsk", "nope", 0, 10))["error"].is_string());
    }

    #[test]
    fn check_runs_a_suite() {
        let v = parse(check("fsk", "adjunction", 3, 20));
        assert_eq!(v["pass"], true);
        assert!(v["text"].as_str().unwrap().ends_with("PASS\n"));
    }
}
