use std::f64::consts::LN_2;

use hypchaos::{
    strong_entropy, verify_inequalities, weak_entropy, Hyperbolic, HyperbolicDistribution,
};
use serde_json::json;

fn scale(bits: bool) -> f64 {
    if bits {
        1.0 / LN_2
    } else {
        1.0
    }
}

pub fn entropy_text(d: &HyperbolicDistribution, bits: bool) -> String {
    let k = scale(bits);
    let unit = if bits { "bits" } else { "nats" };
    let fmt = |x: Hyperbolic| format!("{:.12} e1 + {:.12} e2", x.e1_part() * k, x.e2_part() * k);
    let mut lines = vec![
        format!(
            "{:<14}{} entries, {} mode, {unit}",
            "distribution",
            d.len(),
            d.mode()
        ),
        format!("{:<14}{}", "h_strong", fmt(strong_entropy(d))),
        format!("{:<14}{}", "h_weak", fmt(weak_entropy(d))),
    ];
    match verify_inequalities(d) {
        Ok(r) => {
            lines.push(format!("{:<14}{:.12}", "h_q", r.h_q * k));
            lines.push(format!("{:<14}{}", "h_k", fmt(r.h_k)));
            lines.push(format!("{:<14}{}", "ineq_q", r.ineq_q_holds));
            lines.push(format!("{:<14}{}", "ineq_k", r.ineq_k_holds));
        }
        Err(e) => lines.push(format!("{:<14}n/a ({e})", "inequalities")),
    }
    lines.join("\n")
}

pub fn entropy_json(d: &HyperbolicDistribution, bits: bool) -> String {
    let k = scale(bits);
    let s = strong_entropy(d);
    let w = weak_entropy(d);
    let report = verify_inequalities(d).ok();
    let v = json!({
        "h_strong_e1": s.e1_part() * k,
        "h_strong_e2": s.e2_part() * k,
        "h_weak_e1": w.e1_part() * k,
        "h_weak_e2": w.e2_part() * k,
        "h_q": report.map(|r| r.h_q * k),
        "h_k_e1": report.map(|r| r.h_k.e1_part() * k),
        "h_k_e2": report.map(|r| r.h_k.e2_part() * k),
        "ineq_q": report.map(|r| r.ineq_q_holds),
        "ineq_k": report.map(|r| r.ineq_k_holds),
    });
    v.to_string()
}
