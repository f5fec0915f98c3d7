//! Browser bindings: three operations over the core library, each taking
//! and returning plain strings.

use vexil::io::{render_schubert, render_vexillary, OutputFormat, VexillaryData};
use vexil::schubert::{schubert, vexillary_polynomial};
use vexil::triples::triple_of_w;
use vexil::{SignedPermutation, Triple, WeylType};
use wasm_bindgen::prelude::*;

/// Largest rank computed in the browser.
pub const MAX_RANK: usize = 4;
/// Largest `|λ|` whose formula is expanded.
pub const MAX_EXPAND_WEIGHT: u32 = 12;

fn parse_type(ty: &str) -> Result<WeylType, String> {
    ty.parse().map_err(|e| format!("{e}"))
}

fn parse_w(w: &str, ty: WeylType) -> Result<SignedPermutation, String> {
    let w: SignedPermutation = w.parse().map_err(|e| format!("cannot parse {w:?}: {e}"))?;
    if ty == WeylType::A && !w.is_unsigned() {
        return Err(format!("{w} has barred entries but the type is A"));
    }
    if w.n() > MAX_RANK {
        return Err(format!("the demo is limited to rank {MAX_RANK}"));
    }
    Ok(w)
}

fn parse_format(format: &str) -> Result<OutputFormat, String> {
    format.parse().map_err(|e| format!("{e}"))
}

fn describe(t: &Triple, format: OutputFormat) -> Result<String, String> {
    let w = t.w().map_err(|e| e.to_string())?;
    let lambda = t.lambda().map_err(|e| e.to_string())?.parts();
    let poly = if lambda.iter().sum::<u32>() <= MAX_EXPAND_WEIGHT {
        Some(vexillary_polynomial(t).map_err(|e| e.to_string())?)
    } else {
        None
    };
    Ok(render_vexillary(t.ty, &w, Some(VexillaryData { triple: t, lambda: &lambda, polynomial: poly.as_ref() }), format))
}

/// The double Schubert polynomial of `w`.
pub fn schubert_text(ty: &str, w: &str, format: &str) -> Result<String, String> {
    let ty = parse_type(ty)?;
    let w = parse_w(w, ty)?;
    let n = w.n().max(if ty == WeylType::D { 2 } else { 1 });
    let s = schubert(&w, ty, n).map_err(|e| e.to_string())?;
    Ok(render_schubert(&s, parse_format(format)?))
}

/// The triple, λ and formula of `w`, or a not-vexillary message.
pub fn vexillary_text(ty: &str, w: &str, format: &str) -> Result<String, String> {
    let ty = parse_type(ty)?;
    let format = parse_format(format)?;
    let w = parse_w(w, ty)?;
    match triple_of_w(&w, ty) {
        Some(t) => describe(&t, format),
        None => Ok(render_vexillary(ty, &w, None, format)),
    }
}

/// `w(τ)`, λ and the formula of a triple `k=..;p=..;q=..;type=..`.
pub fn triple_text(triple: &str, format: &str) -> Result<String, String> {
    let t: Triple = triple.parse().map_err(|e: vexil::triples::TripleError| e.to_string())?;
    let t = t.reduce_redundant().map_err(|e| e.to_string())?;
    describe(&t, parse_format(format)?)
}

#[wasm_bindgen(js_name = schubertPolynomial)]
pub fn schubert_polynomial(ty: &str, w: &str, format: &str) -> Result<String, JsValue> {
    schubert_text(ty, w, format).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = recoverTriple)]
pub fn recover_triple(ty: &str, w: &str, format: &str) -> Result<String, JsValue> {
    vexillary_text(ty, w, format).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = tripleToPermutation)]
pub fn triple_to_permutation(triple: &str, format: &str) -> Result<String, JsValue> {
    triple_text(triple, format).map_err(|e| JsValue::from_str(&e))
}
