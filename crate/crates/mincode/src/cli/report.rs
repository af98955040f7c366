//! Report rendering: a human-readable text block and a machine-readable
//! JSON document with stable key order. Identical inputs produce
//! byte-identical output.

use std::fmt::Write as _;

use crate::analysis::{CodeReport, MinimalityVerdict};
use crate::codes::WeightDistribution;

/// Construction provenance attached to reports of derived codes.
#[derive(Clone, Debug, Default)]
pub struct Provenance {
    pub construction: Option<String>,
    pub n_prime: Option<usize>,
    pub pad: Option<usize>,
    pub predicted: Option<WeightDistribution>,
    /// Simplex-complement minimality threshold verdict
    /// (h > log_q(w_max) - k + 2).
    pub threshold_met: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct ReportDocument {
    pub report: CodeReport,
    pub provenance: Provenance,
}

pub fn render_text(doc: &ReportDocument) -> String {
    let r = &doc.report;
    let p = &doc.provenance;
    let mut s = String::new();
    if let Some(c) = &p.construction {
        let _ = writeln!(s, "construction: {c}");
    }
    let _ = writeln!(s, "code: [{},{},{}]_{}", r.n, r.k, r.d, r.q);
    let _ = writeln!(s, "maximum weight: {}", r.w_max);
    let _ = writeln!(s, "weight enumerator: {}", r.distribution);
    let verdict = if r.ab_satisfied {
        "satisfied"
    } else {
        "violated"
    };
    let _ = writeln!(
        s,
        "Ashikhmin-Barg: w_min/w_max = {}/{} vs (q-1)/q = {}/{} -> {}",
        r.ab_ratio.0,
        r.ab_ratio.1,
        r.q - 1,
        r.q,
        verdict
    );
    match &r.minimality {
        MinimalityVerdict::Minimal => {
            let _ = writeln!(s, "minimal: yes");
        }
        MinimalityVerdict::NonMinimal(w) => {
            let _ = writeln!(s, "minimal: no");
            let _ = writeln!(s, "  witness covering: {}", join(&w.covering));
            let _ = writeln!(s, "  witness covered:  {}", join(&w.covered));
        }
        MinimalityVerdict::Skipped => {
            let _ = writeln!(s, "minimal: skipped");
        }
    }
    let _ = writeln!(s, "projective: {}", yes_no(r.projective));
    let _ = writeln!(s, "self-orthogonal: {}", yes_no(r.self_orthogonal));
    if let Some(de) = r.doubly_even {
        let _ = writeln!(s, "doubly even: {}", yes_no(de));
    }
    let _ = writeln!(
        s,
        "Griesmer: g_{}({},{}) = {}, defect {}",
        r.q, r.k, r.d, r.griesmer_length, r.griesmer_defect
    );
    if let Some(np) = p.n_prime {
        let _ = writeln!(s, "n': {np}");
    }
    if let Some(pad) = p.pad {
        let _ = writeln!(s, "pad: {pad}");
    }
    if let Some(pred) = &p.predicted {
        let matched = if *pred == r.distribution {
            "matches measured"
        } else {
            "MISMATCH with measured"
        };
        let _ = writeln!(s, "predicted enumerator: {pred} ({matched})");
    }
    if let Some(t) = p.threshold_met {
        let _ = writeln!(
            s,
            "complement minimality threshold h > log_q(w_max) - k + 2: {}",
            if t { "satisfied" } else { "not satisfied" }
        );
    }
    s
}

pub fn render_json(doc: &ReportDocument) -> String {
    let r = &doc.report;
    let p = &doc.provenance;
    let mut s = String::from("{");
    let _ = write!(s, "\"q\":{}", r.q);
    let _ = write!(s, ",\"n\":{}", r.n);
    let _ = write!(s, ",\"k\":{}", r.k);
    let _ = write!(s, ",\"d\":{}", r.d);
    let _ = write!(s, ",\"w_max\":{}", r.w_max);
    let _ = write!(s, ",\"distribution\":{}", dist_json(&r.distribution));
    let _ = write!(s, ",\"ab_ratio\":[{},{}]", r.ab_ratio.0, r.ab_ratio.1);
    let _ = write!(s, ",\"ab_satisfied\":{}", r.ab_satisfied);
    match &r.minimality {
        MinimalityVerdict::Minimal => s.push_str(",\"minimal\":true"),
        MinimalityVerdict::NonMinimal(w) => {
            s.push_str(",\"minimal\":false");
            let _ = write!(
                s,
                ",\"witness\":{{\"covering\":{},\"covered\":{}}}",
                vec_json(&w.covering),
                vec_json(&w.covered)
            );
        }
        MinimalityVerdict::Skipped => s.push_str(",\"minimal\":\"skipped\""),
    }
    let _ = write!(s, ",\"projective\":{}", r.projective);
    let _ = write!(s, ",\"self_orthogonal\":{}", r.self_orthogonal);
    if let Some(de) = r.doubly_even {
        let _ = write!(s, ",\"doubly_even\":{de}");
    }
    let _ = write!(s, ",\"griesmer_defect\":{}", r.griesmer_defect);
    if let Some(np) = p.n_prime {
        let _ = write!(s, ",\"n_prime\":{np}");
    }
    if let Some(pad) = p.pad {
        let _ = write!(s, ",\"pad\":{pad}");
    }
    if let Some(pred) = &p.predicted {
        let _ = write!(s, ",\"predicted_distribution\":{}", dist_json(pred));
    }
    if let Some(t) = p.threshold_met {
        let _ = write!(s, ",\"complement_threshold_met\":{t}");
    }
    if let Some(c) = &p.construction {
        let _ = write!(s, ",\"construction\":\"{}\"", c.replace('"', "'"));
    }
    s.push('}');
    s
}

fn dist_json(d: &WeightDistribution) -> String {
    let mut s = String::from("[");
    for (i, (w, c)) in d.counts().iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "[{w},{c}]");
    }
    s.push(']');
    s
}

fn vec_json(v: &[u16]) -> String {
    let mut s = String::from("[");
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{x}");
    }
    s.push(']');
    s
}

fn join(v: &[u16]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
