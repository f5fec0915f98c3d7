//! Serialisation: the JSON term schema and plain/LaTeX renderings.
//!
//! A JSON term is `{"q": [λ], "coeff": {"num": "…", "log2den": k},
//! "mono": {"x1": e, …}}`, meaning `num / 2^k · x^e · Q_λ`. Numerators are
//! strings so arbitrary precision survives any JSON parser.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::gamma::{Basis, GammaElement, StrictPartition};
use crate::polycore::{Dyadic, Family, Monomial, Polynomial, Var};
use crate::schubert::SchubertPolynomial;
use crate::triples::Triple;
use crate::weyl::{SignedPermutation, WeylType};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("bad variable name {0:?}")]
    Variable(String),
    #[error("bad numerator {0:?}")]
    Number(String),
    #[error("{0:?} is not a strict partition")]
    Partition(Vec<u32>),
    #[error("unknown format {0:?} (expected json, latex or plain)")]
    Format(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Json,
    Latex,
    #[default]
    Plain,
}

impl FromStr for OutputFormat {
    type Err = IoError;
    fn from_str(s: &str) -> Result<Self, IoError> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "latex" | "tex" => Ok(OutputFormat::Latex),
            "plain" | "text" => Ok(OutputFormat::Plain),
            _ => Err(IoError::Format(s.into())),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Latex => "latex",
            OutputFormat::Plain => "plain",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCoeff {
    pub num: String,
    pub log2den: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub q: Vec<u32>,
    pub coeff: JsonCoeff,
    pub mono: BTreeMap<String, i32>,
}

pub fn dyadic_to_json(d: &Dyadic) -> JsonCoeff {
    JsonCoeff { num: d.num().to_string(), log2den: d.log2den() }
}

pub fn dyadic_from_json(c: &JsonCoeff) -> Result<Dyadic, IoError> {
    let num = BigInt::from_str(&c.num).map_err(|_| IoError::Number(c.num.clone()))?;
    Ok(Dyadic::new(num, c.log2den))
}

pub fn parse_var(s: &str) -> Result<Var, IoError> {
    let mut chars = s.chars();
    let family = chars.next().and_then(Family::from_letter).ok_or_else(|| IoError::Variable(s.into()))?;
    let index: u32 = chars.as_str().parse().map_err(|_| IoError::Variable(s.into()))?;
    Ok(Var::new(family, index))
}

/// One JSON term per `(λ, monomial)` pair, in canonical order.
pub fn gamma_to_terms(e: &GammaElement) -> Vec<JsonTerm> {
    let mut out = Vec::new();
    for (lambda, coef) in e.terms() {
        for (m, c) in coef.terms() {
            out.push(JsonTerm {
                q: lambda.parts().to_vec(),
                coeff: dyadic_to_json(c),
                mono: m.pairs().iter().map(|(v, e)| (v.to_string(), *e)).collect(),
            });
        }
    }
    out
}

pub fn gamma_from_terms(terms: &[JsonTerm]) -> Result<GammaElement, IoError> {
    let mut out = GammaElement::zero();
    for t in terms {
        let lambda = StrictPartition::new(t.q.clone()).map_err(|_| IoError::Partition(t.q.clone()))?;
        let pairs = t.mono.iter().map(|(k, &e)| parse_var(k).map(|v| (v, e))).collect::<Result<Vec<_>, _>>()?;
        let c = dyadic_from_json(&t.coeff)?;
        out.add_term(lambda, &Polynomial::term(Monomial::from_pairs(pairs), c));
    }
    Ok(out)
}

pub fn gamma_to_json(e: &GammaElement) -> String {
    serde_json::to_string(&gamma_to_terms(e)).expect("plain data serialises")
}

pub fn gamma_from_json(s: &str) -> Result<GammaElement, IoError> {
    let terms: Vec<JsonTerm> = serde_json::from_str(s).map_err(|e| IoError::Json(e.to_string()))?;
    gamma_from_terms(&terms)
}

/// The JSON document for a Schubert polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertDocument {
    #[serde(rename = "type")]
    pub ty: WeylType,
    pub w: String,
    pub degree: i64,
    pub terms: Vec<JsonTerm>,
}

impl SchubertDocument {
    pub fn new(s: &SchubertPolynomial) -> Self {
        SchubertDocument { ty: s.ty, w: s.w.to_string(), degree: s.w.length(s.ty) as i64, terms: gamma_to_terms(&s.value) }
    }

    pub fn to_schubert(&self) -> Result<SchubertPolynomial, IoError> {
        let w: SignedPermutation = self.w.parse().map_err(|_| IoError::Json(format!("bad permutation {:?}", self.w)))?;
        Ok(SchubertPolynomial { value: gamma_from_terms(&self.terms)?, ty: self.ty, w })
    }
}

/// `w` in one-line notation with bars, for LaTeX.
pub fn latex_word(w: &SignedPermutation) -> String {
    w.values()
        .iter()
        .map(|&v| if v < 0 { format!("\\bar{{{}}}", -v) } else { v.to_string() })
        .collect::<Vec<_>>()
        .join("\\,")
}

fn schubert_symbol(ty: WeylType) -> &'static str {
    match ty {
        WeylType::A => "S",
        WeylType::B => "B",
        WeylType::C => "C",
        WeylType::D => "D",
    }
}

pub fn render_schubert(s: &SchubertPolynomial, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(&SchubertDocument::new(s)).expect("plain data serialises"),
        OutputFormat::Latex => {
            format!("\\mathfrak{{{}}}_{{{}}} = {}", schubert_symbol(s.ty), latex_word(&s.w), s.render(true))
        }
        OutputFormat::Plain => s.render(false),
    }
}

/// The JSON document for a vexillary lookup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VexillaryDocument {
    #[serde(rename = "type")]
    pub ty: WeylType,
    pub w: String,
    pub vexillary: bool,
    pub triple: Option<Triple>,
    pub lambda: Option<Vec<u32>>,
    pub formula: Option<String>,
    pub polynomial: Option<Vec<JsonTerm>>,
}

/// A vexillary element's data for [`render_vexillary`]; the expanded
/// polynomial is optional because large Pfaffians are not expanded.
pub struct VexillaryData<'a> {
    pub triple: &'a Triple,
    pub lambda: &'a [u32],
    pub polynomial: Option<&'a SchubertPolynomial>,
}

fn prod_factor(letter: char, m: u32, latex: bool) -> String {
    match (m, latex) {
        (0, _) => String::new(),
        (_, false) => format!("prod_{{j<={m}}}(1+{letter}_j)"),
        (_, true) => format!("\\prod_{{j\\le {m}}}(1+{letter}_j)"),
    }
}

fn row_series_text(t: &Triple, i: usize, latex: bool) -> String {
    let (p, q) = (t.p[i], t.q[i]);
    let dot = if latex { "\\cdot " } else { "*" };
    let parts: Vec<String> = match t.ty {
        WeylType::A => {
            let num = prod_factor('x', p, latex);
            let num = if num.is_empty() { "1".to_string() } else { num };
            let den = prod_factor('y', q, latex);
            return match (den.is_empty(), latex) {
                (true, _) => num,
                (false, false) => format!("{num} / {den}"),
                (false, true) => format!("\\frac{{{num}}}{{{den}}}"),
            };
        }
        WeylType::B | WeylType::C => vec!["Q".into(), prod_factor('x', p - 1, latex), prod_factor('y', q - 1, latex)],
        WeylType::D => vec![prod_factor('x', p, latex), prod_factor('y', q, latex)],
    };
    let parts: Vec<String> = parts.into_iter().filter(|s| !s.is_empty()).collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(dot)
    }
}

/// The Pfaffian or determinant formula of a triple, with its row series
/// grouped by the term of the triple that governs them.
pub fn render_formula(t: &Triple, lambda: &[u32], latex: bool) -> String {
    let r = lambda.len();
    if r == 0 {
        return "1".into();
    }
    let name = if t.ty == WeylType::A { "a" } else { "c" };
    let args = match (r, t.ty) {
        (1, WeylType::D) => format!("{name}(1)|d(1)"),
        (1, _) => format!("{name}(1)"),
        (_, WeylType::D) => format!("{name}(1)|d(1),...,{name}({r})|d({r})"),
        _ => format!("{name}(1),...,{name}({r})"),
    };
    let op = match (t.ty, latex) {
        (WeylType::A, false) => "det",
        (WeylType::A, true) => "\\det",
        (_, false) => "Pf",
        (_, true) => "\\mathrm{Pf}",
    };
    let prefix = match (t.ty, latex) {
        (WeylType::B | WeylType::D, false) => format!("2^-{} ", lambda.iter().filter(|&&l| l > 0 || t.ty == WeylType::D).count()),
        (WeylType::B | WeylType::D, true) => format!("2^{{-{}}}", lambda.iter().filter(|&&l| l > 0 || t.ty == WeylType::D).count()),
        _ => String::new(),
    };
    let mut out = if latex {
        format!("{prefix}{op}_{{({})}}({args})", join(lambda))
    } else {
        format!("{prefix}{op}_({})({args})", join(lambda))
    };
    let mut prev = 0;
    for i in 0..t.len() {
        let range = if t.k[i] == prev + 1 { t.k[i].to_string() } else { format!("{}..{}", prev + 1, t.k[i]) };
        let series = row_series_text(t, i, latex);
        let sep = if latex { ",\\ " } else { "; " };
        out.push_str(&format!("{sep}{name}({range}) = {series}"));
        if t.ty == WeylType::D {
            out.push_str(&format!("{sep}d({range}) = Q{}{name}({range})", if latex { "\\cdot " } else { "*" }));
        }
        prev = t.k[i];
    }
    out
}

pub fn render_vexillary(ty: WeylType, w: &SignedPermutation, found: Option<VexillaryData<'_>>, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let doc = VexillaryDocument {
                ty,
                w: w.to_string(),
                vexillary: found.is_some(),
                triple: found.as_ref().map(|f| f.triple.clone()),
                lambda: found.as_ref().map(|f| f.lambda.to_vec()),
                formula: found.as_ref().map(|f| render_formula(f.triple, f.lambda, false)),
                polynomial: found.as_ref().and_then(|f| f.polynomial.map(|p| gamma_to_terms(&p.value))),
            };
            serde_json::to_string_pretty(&doc).expect("plain data serialises")
        }
        OutputFormat::Latex => match found {
            None => format!("{} \\text{{ is not vexillary in type }} {}", latex_word(w), ty),
            Some(f) => {
                let t = f.triple;
                let mut out = format!(
                    "\\tau = ({};\\, {};\\, {}),\\quad \\lambda = ({}),\\quad {}",
                    join(&t.k),
                    join(&t.p),
                    join(&t.q),
                    join(f.lambda),
                    render_formula(t, f.lambda, true)
                );
                if let Some(p) = f.polynomial {
                    out.push_str(&format!("\n{}", render_schubert(p, OutputFormat::Latex)));
                }
                out
            }
        },
        OutputFormat::Plain => match found {
            None => format!("{w}: not vexillary (type {ty})"),
            Some(f) => {
                let mut out = format!(
                    "w: {w}\ntriple: {}\nlambda: ({})\nformula: {}",
                    f.triple,
                    join(f.lambda),
                    render_formula(f.triple, f.lambda, false)
                );
                if let Some(p) = f.polynomial {
                    out.push_str(&format!("\npolynomial: {}", p.render(false)));
                }
                out
            }
        },
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Renders a single element in the requested basis.
pub fn render_gamma(e: &GammaElement, basis: Basis, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => gamma_to_json(e),
        OutputFormat::Latex => e.render(basis, true),
        OutputFormat::Plain => e.render(basis, false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::q_lambda;
    use crate::polycore::{h, x, y};

    #[test]
    fn json_round_trip() {
        let l = StrictPartition::new(vec![3, 1]).unwrap();
        let c = &Polynomial::var(x(1)).scale(&Dyadic::new(3, 2)) - &Polynomial::var(y(10));
        let e = &q_lambda(&l).scale(&c) + &GammaElement::from_polynomial(Polynomial::term(Monomial::from_pairs([(h(2), -3)]), 5));
        let s = gamma_to_json(&e);
        assert_eq!(gamma_from_json(&s).unwrap(), e);
        assert!(s.contains(r#""coeff":{"num":"3","log2den":2}"#));
    }

    #[test]
    fn huge_numerators_survive() {
        let big = BigInt::from(3).pow(200);
        let e = GammaElement::from_polynomial(Polynomial::constant(Dyadic::new(big.clone(), 7)));
        let back = gamma_from_json(&gamma_to_json(&e)).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn bad_input() {
        assert!(matches!(gamma_from_json("[{\"q\":[1,1],\"coeff\":{\"num\":\"1\",\"log2den\":0},\"mono\":{}}]"), Err(IoError::Partition(_))));
        assert!(matches!(parse_var("w3"), Err(IoError::Variable(_))));
        assert!(gamma_from_json("{").is_err());
        assert_eq!("LaTeX".parse::<OutputFormat>().unwrap(), OutputFormat::Latex);
    }

    #[test]
    fn formulas() {
        let t: Triple = "k=2,3,5,8;p=8,6,6,2;q=6,5,2,2;type=C".parse().unwrap();
        let lambda = t.lambda().unwrap().parts();
        let f = render_formula(&t, &lambda, false);
        assert!(f.starts_with("Pf_(14,13,10,8,7,5,4,3)(c(1),...,c(8)); c(1..2) = Q*prod_{j<=7}(1+x_j)*prod_{j<=5}(1+y_j)"), "{f}");
        let a: Triple = "k=1;p=1;q=1;type=A".parse().unwrap();
        assert_eq!(render_formula(&a, &[1], false), "det_(1)(a(1)); a(1) = prod_{j<=1}(1+x_j) / prod_{j<=1}(1+y_j)");
        let d: Triple = "k=1;p=1;q=0;type=D".parse().unwrap();
        assert_eq!(render_formula(&d, &[1], false), "2^-1 Pf_(1)(c(1)|d(1)); c(1) = prod_{j<=1}(1+x_j); d(1) = Q*c(1)");
    }

    #[test]
    fn schubert_document() {
        let s = crate::schubert::schubert(&"-2 1".parse().unwrap(), WeylType::C, 2).unwrap();
        let doc = SchubertDocument::new(&s);
        let text = serde_json::to_string(&doc).unwrap();
        let back: SchubertDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_schubert().unwrap(), s);
        assert_eq!(latex_word(&s.w), "\\bar{2}\\,1");
        assert!(render_schubert(&s, OutputFormat::Latex).starts_with("\\mathfrak{C}_{\\bar{2}\\,1} = Q_{2}"));
    }
}
