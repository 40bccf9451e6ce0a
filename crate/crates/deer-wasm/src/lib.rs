//! Browser demo bindings: parse a word, embed it as a geometric braid on
//! `r+1` strands, decide equality, and classify periodic elements. Each
//! entry point returns a JSON string so the page stays framework-free.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use deer_core::artin::{BraidWord, Sign};
use deer_core::deer::{is_member, DeerParams};
use deer_core::parse::{parse_artin_word, parse_atilde_word, parse_deer_word};
use deer_core::periodic::{is_periodic, lambda_periodic};

#[derive(Serialize)]
struct ErrorOut {
    error: String,
}

fn err_json(message: impl ToString) -> String {
    serde_json::to_string(&ErrorOut {
        error: message.to_string(),
    })
    .expect("error serializes")
}

fn params(d: u32, e: u32, r: u32) -> Result<DeerParams, String> {
    DeerParams::new(d, e, r).map_err(|e| e.to_string())
}

fn parse_to_braid(word: &str, alphabet: &str, p: DeerParams) -> Result<BraidWord, String> {
    match alphabet {
        "deer" => Ok(parse_deer_word(word, p).map_err(|e| e.to_string())?.embed()),
        "atilde" => Ok(parse_atilde_word(word, p)
            .map_err(|e| e.to_string())?
            .embed()),
        "artin" => parse_artin_word(word, p.strands()).map_err(|e| e.to_string()),
        other => Err(format!("unknown alphabet `{other}`")),
    }
}

#[derive(Serialize)]
struct Crossing {
    index: usize,
    sign: i8,
}

#[derive(Serialize)]
struct DiagramOut {
    strands: usize,
    crossings: Vec<Crossing>,
    permutation: Vec<usize>,
    one_pure: bool,
    winding: Option<i64>,
    member: bool,
    normal_form: String,
    canonical_length: usize,
}

/// Parse a word and return everything the page needs to draw its braid
/// diagram and report the membership data.
#[wasm_bindgen]
pub fn braid_diagram(d: u32, e: u32, r: u32, alphabet: &str, word: &str) -> String {
    let p = match params(d, e, r) {
        Ok(p) => p,
        Err(m) => return err_json(m),
    };
    let braid = match parse_to_braid(word, alphabet, p) {
        Ok(b) => b,
        Err(m) => return err_json(m),
    };
    let one: std::collections::BTreeSet<usize> = std::iter::once(1).collect();
    let one_pure = braid.is_pure(&one).expect("strand 1 always exists");
    let winding = braid.winding().ok();
    let member = is_member(&braid, p).unwrap_or(false);
    let nf = braid.normal_form();
    let out = DiagramOut {
        strands: braid.strands(),
        crossings: braid
            .letters()
            .iter()
            .map(|l| Crossing {
                index: l.index,
                sign: if l.sign == Sign::Pos { 1 } else { -1 },
            })
            .collect(),
        permutation: braid.permutation().one_line(),
        one_pure,
        winding,
        member,
        normal_form: nf.to_string(),
        canonical_length: nf.canonical_length(),
    };
    serde_json::to_string(&out).expect("diagram serializes")
}

#[derive(Serialize)]
struct EqualityOut {
    equal: bool,
    left_normal_form: String,
    right_normal_form: String,
}

/// Exact equality of two words (same alphabet), via the normal form.
#[wasm_bindgen]
pub fn check_equality(d: u32, e: u32, r: u32, alphabet: &str, left: &str, right: &str) -> String {
    let p = match params(d, e, r) {
        Ok(p) => p,
        Err(m) => return err_json(m),
    };
    let (a, b) = match (
        parse_to_braid(left, alphabet, p),
        parse_to_braid(right, alphabet, p),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(m), _) | (_, Err(m)) => return err_json(m),
    };
    let out = EqualityOut {
        equal: a.equal(&b).expect("same strand count"),
        left_normal_form: a.normal_form().to_string(),
        right_normal_form: b.normal_form().to_string(),
    };
    serde_json::to_string(&out).expect("equality serializes")
}

#[derive(Serialize)]
struct PeriodicOut {
    periodic: bool,
    p: Option<i64>,
    q: Option<i64>,
    lambda: String,
}

/// Periodicity verdict for a word over `{z, t_i, s_j}`, with the rotation
/// word `λ` for reference.
#[wasm_bindgen]
pub fn classify_periodic(d: u32, e: u32, r: u32, word: &str) -> String {
    let p = match params(d, e, r) {
        Ok(p) => p,
        Err(m) => return err_json(m),
    };
    let w = match parse_deer_word(word, p) {
        Ok(w) => w,
        Err(m) => return err_json(m),
    };
    let v = is_periodic(&w);
    let out = PeriodicOut {
        periodic: v.periodic,
        p: v.epsilon_power,
        q: v.lambda_power,
        lambda: lambda_periodic(p).to_string(),
    };
    serde_json::to_string(&out).expect("verdict serializes")
}

/// The rotation word `λ` for the current parameters, handy as a sample input.
#[wasm_bindgen]
pub fn lambda_word(d: u32, e: u32, r: u32) -> String {
    match params(d, e, r) {
        Ok(p) => lambda_periodic(p).to_string(),
        Err(m) => err_json(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagram_reports_membership_data() {
        let out = braid_diagram(2, 2, 3, "deer", "z t[1]");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["strands"], 4);
        assert_eq!(v["winding"], 2);
        assert_eq!(v["member"], true);
        assert_eq!(v["one_pure"], true);
        assert_eq!(v["crossings"].as_array().unwrap().len(), 4 + 5);
    }

    #[test]
    fn equality_and_errors() {
        let out = check_equality(2, 2, 3, "deer", "t[1] t[0]", "t[2] t[1]");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["equal"], true);
        let out = check_equality(2, 2, 3, "deer", "t[", "t[0]");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(v["error"].as_str().unwrap().contains("offset"));
    }

    #[test]
    fn periodic_classification() {
        let out = classify_periodic(2, 2, 3, &lambda_word(2, 2, 3));
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["periodic"], true);
        assert_eq!(v["p"], 2);
        assert_eq!(v["q"], 1);
        let out = classify_periodic(2, 2, 3, "t[0]");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["periodic"], false);
    }
}
