//! Text and JSON renderers. Both modes expose the same facts; JSON
//! layouts match the schema files shipped under `schemas/`. Ordering is
//! fixed everywhere so identical inputs produce byte-identical output.

use serde_json::{json, Value};

use sempoly::expr;
use sempoly::factor::{Factorization, IrreducibilityCertificate};
use sempoly::s0::RewriteBudget;
use sempoly::semiring::axioms::AxiomReport;
use sempoly::semiring::{Registry, Verdict};
use sempoly::theorem::{NonUfdReport, TheoremVerdict};

pub fn list_text(registry: &Registry) -> String {
    let mut out = String::new();
    for d in registry.descriptors() {
        let caps = d.capabilities();
        out.push_str(&format!(
            "{:<18} units_enumerable={:<5} coefficients_enumerable_bounded={:<5} \
             equality_complete={}\n",
            d.id(),
            caps.units_enumerable,
            caps.coefficients_enumerable_bounded,
            caps.equality_complete
        ));
    }
    out
}

pub fn list_json(registry: &Registry) -> Value {
    Value::Array(
        registry
            .descriptors()
            .iter()
            .map(|d| {
                let caps = d.capabilities();
                json!({
                    "id": d.id(),
                    "flags": {
                        "units_enumerable": caps.units_enumerable,
                        "coefficients_enumerable_bounded": caps.coefficients_enumerable_bounded,
                        "equality_complete": caps.equality_complete,
                    },
                })
            })
            .collect(),
    )
}

pub enum EvalResult {
    Rendered(String),
    Compared(Verdict),
}

pub fn eval_text(result: &EvalResult) -> String {
    match result {
        EvalResult::Rendered(text) => format!("{text}\n"),
        EvalResult::Compared(verdict) => format!("{}\n", verdict.label()),
    }
}

pub fn eval_json(semiring: &str, inputs: &[String], result: &EvalResult) -> Value {
    let (rendered, verdict) = match result {
        EvalResult::Rendered(text) => (Value::String(text.clone()), Value::Null),
        EvalResult::Compared(v) => (Value::Null, Value::String(v.label().to_owned())),
    };
    json!({
        "semiring": semiring,
        "inputs": inputs,
        "result": rendered,
        "verdict": verdict,
    })
}

pub fn factorizations_text(input: &str, bound: u64, factorizations: &[Factorization]) -> String {
    let mut out = format!("input: {input}\nbound: {bound}\n");
    out.push_str(&format!("factorizations: {}\n", factorizations.len()));
    for f in factorizations {
        out.push_str("  ");
        out.push_str(
            &f.rendered_factors()
                .iter()
                .map(|t| format!("({t})"))
                .collect::<Vec<_>>()
                .join(" * "),
        );
        out.push('\n');
    }
    out
}

pub fn factorizations_json(
    semiring: &str,
    input: &str,
    bound: u64,
    factorizations: &[Factorization],
) -> Value {
    json!({
        "semiring": semiring,
        "input": input,
        "mode": "exhaustive",
        "bound": bound,
        "factorizations": factorizations
            .iter()
            .map(|f| json!({
                "unit": f.unit.to_string(),
                "factors": f.rendered_factors(),
            }))
            .collect::<Vec<_>>(),
        "certificate": Value::Null,
    })
}

fn certificate_value(certificate: &IrreducibilityCertificate) -> Value {
    json!({
        "verdict": certificate.verdict.label(),
        "reason": certificate.reason.label(),
        "witness": certificate
            .witness
            .as_ref()
            .map(|(a, b)| json!([expr::render(a), expr::render(b)]))
            .unwrap_or(Value::Null),
        "detail": certificate.detail,
    })
}

pub fn certificate_text(input: &str, certificate: &IrreducibilityCertificate) -> String {
    let mut out = format!(
        "input: {input}\nverdict: {} ({})\n",
        certificate.verdict.label(),
        certificate.reason.label()
    );
    if let Some((a, b)) = &certificate.witness {
        out.push_str(&format!("witness: ({}) * ({})\n", expr::render(a), expr::render(b)));
    }
    out.push_str(&format!("detail: {}\n", certificate.detail));
    out
}

pub fn certificate_json(
    semiring: &str,
    input: &str,
    certificate: &IrreducibilityCertificate,
) -> Value {
    json!({
        "semiring": semiring,
        "input": input,
        "mode": "certificate",
        "bound": Value::Null,
        "factorizations": Value::Null,
        "certificate": certificate_value(certificate),
    })
}

fn degree_set_text(degrees: &[usize]) -> String {
    format!(
        "{{{}}}",
        degrees.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    )
}

pub fn report_text(report: &NonUfdReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("semiring: {}\n", report.semiring));
    match report.case.partner() {
        None => out.push_str("case: no-partner\n"),
        Some(p) => out.push_str(&format!("case: partner({})\n", p.value)),
    }
    out.push_str(&format!("product: {}\n", expr::render(&report.product)));
    for (label, fact) in
        [("factorization A", &report.factorization_a), ("factorization B", &report.factorization_b)]
    {
        out.push_str(&format!(
            "{label}: {}\n",
            fact.rendered_factors()
                .iter()
                .map(|t| format!("({t})"))
                .collect::<Vec<_>>()
                .join(" * ")
        ));
    }
    out.push_str(&format!(
        "degree multisets: {} vs {}\n",
        degree_set_text(&report.degree_multisets.0),
        degree_set_text(&report.degree_multisets.1)
    ));
    out.push_str("certificates:\n");
    for (factor_poly, certificate) in &report.certificates {
        out.push_str(&format!(
            "  {}: {} ({})\n",
            expr::render(factor_poly),
            certificate.verdict.label(),
            certificate.reason.label()
        ));
    }
    out.push_str(&format!("axiom report hash: {}\n", report.axiom_fingerprint));
    match &report.verdict {
        TheoremVerdict::NotUfd => out.push_str("verdict: not-ufd\n"),
        TheoremVerdict::Inconclusive { failing_check } => {
            out.push_str(&format!("verdict: inconclusive (failing check: {failing_check})\n"))
        }
    }
    out
}

pub fn report_json(report: &NonUfdReport, seed: u64, samples: u32) -> Value {
    let failing = match &report.verdict {
        TheoremVerdict::NotUfd => Value::Null,
        TheoremVerdict::Inconclusive { failing_check } => Value::String(failing_check.clone()),
    };
    json!({
        "semiring": report.semiring,
        "case": report.case.label(),
        "partner_witness": report
            .case
            .partner()
            .map(|p| Value::String(p.value.to_string()))
            .unwrap_or(Value::Null),
        "product": expr::render(&report.product),
        "factorizations": [
            report.factorization_a.rendered_factors(),
            report.factorization_b.rendered_factors(),
        ],
        "degree_multisets": [report.degree_multisets.0, report.degree_multisets.1],
        "certificates": report
            .certificates
            .iter()
            .map(|(factor_poly, certificate)| json!({
                "factor": expr::render(factor_poly),
                "verdict": certificate.verdict.label(),
                "reason": certificate.reason.label(),
            }))
            .collect::<Vec<_>>(),
        "verdict": report.verdict.label(),
        "failing_check": failing,
        "axiom_report_hash": report.axiom_fingerprint,
        "axiom_seed": seed,
        "axiom_samples": samples,
    })
}

pub fn axioms_text(report: &AxiomReport) -> String {
    let mut out = format!(
        "semiring: {}\nseed: {}\nsamples: {}\n",
        report.semiring, report.seed, report.samples
    );
    for check in &report.checks {
        out.push_str(&format!(
            "  {:<26} passed={:<6} failed={:<3} unknown={}\n",
            check.name, check.passed, check.failed, check.unknown
        ));
    }
    out.push_str(&format!(
        "all passed: {}\nunknown verdicts: {}\nhash: {}\n",
        report.all_passed(),
        report.unknown_total(),
        report.fingerprint()
    ));
    out
}

pub fn axioms_json(report: &AxiomReport, budget: &RewriteBudget) -> Value {
    json!({
        "semiring": report.semiring,
        "seed": report.seed,
        "samples": report.samples,
        "budget": { "max_nodes": budget.max_nodes, "max_depth": budget.max_depth },
        "checks": report
            .checks
            .iter()
            .map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "failed": c.failed,
                "unknown": c.unknown,
            }))
            .collect::<Vec<_>>(),
        "all_passed": report.all_passed(),
        "unknown_total": report.unknown_total(),
        "hash": report.fingerprint(),
    })
}
