//! Reports produced by the command-line front end.
//!
//! A [`Report`] holds the echoed inputs and a command-specific payload as
//! JSON values. Integers are always decimal strings, so the JSON form never
//! contains a JSON number. The text form is rendered from the same values
//! and therefore carries identical numeric content.

use num_bigint::BigInt;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bounds::{self, PolarizedInvariants};
use crate::catalog::{self, EntryFilter};
use crate::chern::{sym_top_chern, sym_top_chern_oracle, sym_top_chern_paper, ChernPolynomial};
use crate::error::Result;
use crate::fano_ci::analyze;
use crate::lines::{count_lines, line_family_through_point, CompleteIntersection};

pub const GENERICITY_CAVEAT: &str = "line counts are expected counts with multiplicity for a \
                                     generic complete intersection with these degrees";

const CITE_LINES_ZEROS: &str =
    "lines on X are the common zeros of the induced sections of Sym^{d_i} F on G(2, N+1)";
const CITE_LINES_CRITERION: &str =
    "the product of top Chern classes is nonzero iff sum d_i <= 2N - 2 - r";
const CITE_FAMILY_THROUGH_POINT: &str =
    "if N > sum d_i, lines through a general point form a family of dimension N - sum d_i - 1";
const CITE_JET_ORDER: &str = "-K_X = O_X(N+1-sum d_i) is (N+1-sum d_i)-jet ample but not \
                              (N+2-sum d_i)-spanned for Fano complete intersections other than conics";
const CITE_CONTAINS_LINE: &str = "a Fano complete intersection of dimension >= 2 contains a line";
const CITE_BOUNDS: &str =
    "k-very ample with k >= 2 implies L^n >= 2^n + k - 2 and h0(L) >= 2n + k - 1";
const CITE_BORDERLINE: &str = "h0(L) = 2n + k - 1 implies L^n = 2^n + k - 2";
const CITE_NEFVALUE: &str = "the nefvalue of a k-very ample pair satisfies tau <= (n+1)/k";
const CITE_CATALOG: &str =
    "classification of Fano threefolds with -K_X k-very ample, k >= 2, and of k-very ample \
     Mukai varieties of dimension >= 4";
const CITE_DOUBLE_COVER: &str =
    "for the double cover of P3 branched along a quartic, -K_X is 2-very ample but not 2-jet ample";
const CITE_ADJUNCTION: &str =
    "adjunction structure (first and second reduction) of k-very ample pairs, k >= 2";
const CITE_SPLITTING: &str = "splitting principle: Sym^d F has Chern roots t x + (d-t) y";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub citations: Vec<String>,
    #[serde(default)]
    pub caveats: Vec<String>,
}

impl Report {
    fn new(command: &str, inputs: Value, result: Value, citations: &[&str]) -> Self {
        Self {
            command: command.into(),
            inputs,
            result,
            citations: citations.iter().map(|c| c.to_string()).collect(),
            caveats: Vec::new(),
        }
    }

    fn with_caveat(mut self, caveat: &str) -> Self {
        self.caveats.push(caveat.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `key.path: value` lines.
    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        flatten("inputs", &self.inputs, &mut out);
        flatten("result", &self.result, &mut out);
        for c in &self.citations {
            out.push_str(&format!("cite: {c}\n"));
        }
        for c in &self.caveats {
            out.push_str(&format!("caveat: {c}\n"));
        }
        out
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&format!("{prefix}.{k}"), x, out);
            }
        }
        Value::Array(items) if items.iter().all(|x| x.is_string()) => {
            let parts: Vec<&str> = items.iter().filter_map(Value::as_str).collect();
            out.push_str(&format!("{prefix}: [{}]\n", parts.join(", ")));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
        Value::Null => out.push_str(&format!("{prefix}: none\n")),
        other => out.push_str(&format!("{prefix}: {other}\n")),
    }
}

fn ci_inputs(ci: &CompleteIntersection) -> Value {
    serde_json::to_value(ci).expect("serializes")
}

/// Degrees are sorted first, so their order never affects the output.
fn canonical(ci: &CompleteIntersection) -> Result<CompleteIntersection> {
    let mut degrees = ci.degrees().to_vec();
    degrees.sort_unstable();
    CompleteIntersection::new(ci.ambient(), degrees)
}

pub fn lines(ci: &CompleteIntersection) -> Result<Report> {
    let ci = canonical(ci)?;
    let count = count_lines(&ci)?;
    let through_point = line_family_through_point(&ci)?;
    let result = json!({
        "line_count": count,
        "summary": count.to_string(),
        "expected_dimension": ci.expected_line_dim().to_string(),
        "family_through_point": through_point.map(|d| d.to_string()),
    });
    Ok(Report::new(
        "lines",
        ci_inputs(&ci),
        result,
        &[CITE_LINES_ZEROS, CITE_LINES_CRITERION, CITE_FAMILY_THROUGH_POINT],
    )
    .with_caveat(GENERICITY_CAVEAT))
}

pub fn fano_ci(ci: &CompleteIntersection) -> Result<Report> {
    let ci = canonical(ci)?;
    let report = analyze(&ci)?;
    let mut result = serde_json::to_value(&report).expect("serializes");
    let summary = match (report.jet_order, report.not_spanned_order) {
        (Some(k), Some(k1)) => format!("-K_X is {k}-jet ample, not {k1}-spanned"),
        _ if report.curve_exception => "plane conic: excluded from the jet-order statement".into(),
        _ => "not Fano".into(),
    };
    result["summary"] = Value::String(summary);
    let mut out = Report::new(
        "fano-ci",
        ci_inputs(&ci),
        result,
        &[CITE_JET_ORDER, CITE_CONTAINS_LINE, CITE_LINES_CRITERION],
    )
    .with_caveat(GENERICITY_CAVEAT);
    if report.formula_extrapolated {
        out = out.with_caveat("curve: jet order extrapolated from the general formula");
    }
    Ok(out)
}

pub fn bounds(n: u32, k: u32, degree: Option<BigInt>, h0: Option<BigInt>) -> Result<Report> {
    let min_degree = bounds::min_degree(n, k)?;
    let min_sections = bounds::min_sections(n, k)?;
    let inputs = json!({
        "n": n.to_string(),
        "k": k.to_string(),
        "degree": degree.as_ref().map(BigInt::to_string),
        "h0": h0.as_ref().map(BigInt::to_string),
    });
    let verdict = match &degree {
        Some(d) => {
            let inv = PolarizedInvariants::new(n, k, d.clone(), h0.clone())?;
            Some(bounds::check(&inv)?)
        }
        None => None,
    };
    let nefvalue = bounds::nefvalue_bound(n, k).ok().map(ratio_string);
    let result = json!({
        "min_degree": min_degree.to_string(),
        "min_sections": min_sections.to_string(),
        "sections_ok": h0.as_ref().map(|h| *h >= min_sections),
        "verdict": verdict,
        "nefvalue_bound": nefvalue,
        "curve_degree_floor": bounds::curve_degree_floor(k).to_string(),
    });
    Ok(Report::new(
        "bounds",
        inputs,
        result,
        &[CITE_BOUNDS, CITE_BORDERLINE, CITE_NEFVALUE],
    ))
}

fn ratio_string(r: Ratio<u64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn catalog(filter: &EntryFilter) -> Report {
    let items = catalog::entries(filter);
    let inputs = json!({
        "dim": filter.dim.map(|n| n.to_string()),
        "k": filter.k_very_ample.map(|k| k.to_string()),
        "id": filter.id,
    });
    Report::new(
        "catalog",
        inputs,
        json!({ "count": items.len().to_string(), "entries": catalog::to_json(&items) }),
        &[CITE_CATALOG, CITE_DOUBLE_COVER],
    )
}

pub fn catalog_verify() -> Report {
    let report = catalog::verify_all();
    let mut result = serde_json::to_value(&report).expect("serializes");
    result["passed"] = Value::Bool(report.passed());
    Report::new(
        "catalog verify",
        json!({}),
        result,
        &[CITE_CATALOG, CITE_BOUNDS, CITE_JET_ORDER, CITE_DOUBLE_COVER],
    )
}

pub fn adjunction(n: u32, k: u32) -> Result<Report> {
    let cases = catalog::adjunction_cases(n, k)?;
    let nefvalue = bounds::nefvalue_bound(n, k)?;
    let result = json!({
        "outcomes": cases,
        "nefvalue_bound": ratio_string(nefvalue),
        "mukai_admissible": nefvalue >= Ratio::from_integer(u64::from(n) - 2),
    });
    Ok(Report::new(
        "adjunction",
        json!({ "n": n.to_string(), "k": k.to_string() }),
        result,
        &[CITE_ADJUNCTION, CITE_NEFVALUE],
    ))
}

fn poly_terms(p: &ChernPolynomial) -> Value {
    Value::Array(
        p.terms()
            .map(|(&(i, j), c)| {
                json!({ "c1_exp": i.to_string(), "c2_exp": j.to_string(), "coef": c.to_string() })
            })
            .collect(),
    )
}

pub fn chern(d: u32, paper_formula: bool) -> Result<Report> {
    let top = sym_top_chern(d)?;
    let oracle = sym_top_chern_oracle(d)?;
    let mut result = json!({
        "rank": (d + 1).to_string(),
        "top_chern_class": top.to_string(),
        "terms": poly_terms(&top),
        "oracle_agrees": top == oracle,
    });
    if paper_formula {
        let printed = sym_top_chern_paper(d)?;
        let ratio = Ratio::new(u64::from(d + 1).pow(2), u64::from(d).pow(2));
        let consistent = printed.scale(&BigInt::from(d).pow(2)) == top.scale(&BigInt::from(d + 1).pow(2));
        result["printed_formula"] = Value::String(printed.to_string());
        result["printed_formula_terms"] = poly_terms(&printed);
        result["printed_over_true"] = Value::String(ratio_string(ratio));
        result["printed_is_constant_multiple"] = Value::Bool(consistent);
    }
    Ok(Report::new(
        "chern",
        json!({ "sym": d.to_string(), "paper_formula": paper_formula }),
        result,
        &[CITE_SPLITTING],
    ))
}
