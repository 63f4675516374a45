use std::fmt::Write;

use crate::document::*;

pub fn to_json(doc: &ReportDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> serde_json::Result<ReportDocument> {
    serde_json::from_str(text)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn to_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let g = &doc.group;
    let _ = writeln!(out, "{} {} {}", doc.tool, doc.version, doc.command);
    let _ = writeln!(out, "group {} of order {} on {} points, generators {}", g.label, g.order, g.degree, g.generators.join("; "));
    let _ = writeln!(out, "{} subgroups in {} classes, P = {}", g.subgroups, g.classes.len(), doc.primes);
    for c in &g.classes {
        let _ = writeln!(out, "  {:<8} order {:<4} size {:<3} {}{}", c.label, c.order, c.size, c.generators, if c.normal { " (normal)" } else { "" });
    }
    out.push('\n');
    match &doc.payload {
        Payload::Marks(m) => marks(&mut out, m),
        Payload::Idempotents(p) => idempotents(&mut out, p),
        Payload::Norm(n) => norm(&mut out, n),
        Payload::TheoremA(t) => theorem_a(&mut out, t),
        Payload::IndexingSystems(s) => indexing_systems(&mut out, s),
        Payload::Splitting(s) => out.push_str(&s.render_text()),
        Payload::Report(r) => {
            marks(&mut out, &r.marks);
            out.push('\n');
            idempotents(&mut out, &r.idempotents);
            out.push('\n');
            theorem_a(&mut out, &r.theorem_a);
            out.push('\n');
            indexing_systems(&mut out, &r.indexing_systems);
            out.push('\n');
            out.push_str(&r.splitting.render_text());
        }
    }
    out
}

fn marks(out: &mut String, m: &MarksPayload) {
    let _ = writeln!(out, "table of marks (row G/H, column fixed by K)");
    let _ = write!(out, "{:<8}", "");
    for c in &m.classes {
        let _ = write!(out, " {c:>6}");
    }
    out.push('\n');
    for row in &m.rows {
        let _ = write!(out, "{:<8}", row.orbit);
        for v in &row.marks {
            let _ = write!(out, " {v:>6}");
        }
        out.push('\n');
    }
}

fn idempotents(out: &mut String, p: &IdempotentsPayload) {
    let _ = writeln!(out, "P-perfect classes: {}", p.perfect_classes.join(" "));
    let _ = writeln!(out, "classes: {}", p.classes.join(" "));
    for e in &p.idempotents {
        let _ = writeln!(out, "e_L for L = {} [{}]{}", e.l, e.generators, if e.normal { " (normal)" } else { "" });
        let _ = writeln!(out, "  marks:       {}", e.marks.join(" "));
        let _ = writeln!(out, "  orbit basis: {}", e.orbit_coefficients.join(" "));
        let _ = writeln!(out, "  P-local: {}", yes_no(e.p_local));
    }
}

fn norm(out: &mut String, n: &NormPayload) {
    let _ = writeln!(
        out,
        "norm from {} [{}] to {} [{}], conjugated by {}",
        n.from.subgroup, n.from.generators, n.to.subgroup, n.to.generators, n.conjugator
    );
    let _ = writeln!(out, "marks over {}", n.target_classes.join(" "));
    for image in &n.images {
        let _ = writeln!(out, "  N(K/{}) marks: {}", image.orbit, image.norm_marks.join(" "));
        let _ = writeln!(out, "  {:width$} orbit basis: {}", "", image.norm_orbit_coefficients.join(" "), width = image.orbit.len() + 2);
    }
    let _ = writeln!(out, "{:<8} {:>5} {:>8} {:>9}", "L", "star", "diamond", "division");
    for d in &n.descent {
        let _ = writeln!(out, "{:<8} {:>5} {:>8} {:>9}", d.l, yes_no(d.star), yes_no(d.diamond), yes_no(d.division));
    }
    let _ = writeln!(out, "verdict: {}", if n.verdict { "ok" } else { "FAILED" });
}

fn factor(out: &mut String, f: &FactorPairs) {
    let admitted: Vec<String> = f.pairs.iter().filter(|p| p.admissible).map(|p| format!("{} <= {}", p.k_subgroup, p.h_subgroup)).collect();
    let kind = match (f.complete, f.minimal) {
        (true, _) => " (complete)",
        (_, true) => " (trivial)",
        _ => "",
    };
    let _ = writeln!(
        out,
        "I_{}{}: {}",
        f.l,
        kind,
        if admitted.is_empty() { "no proper pairs".to_string() } else { admitted.join(", ") }
    );
}

fn theorem_a(out: &mut String, t: &TheoremAPayload) {
    out.push_str(&t.report.render_text());
    for f in &t.admissible {
        factor(out, f);
    }
}

fn indexing_systems(out: &mut String, s: &IndexingSystemsPayload) {
    let _ = writeln!(out, "admissible proper pairs up to conjugacy");
    for f in &s.systems {
        factor(out, f);
    }
    factor(out, &s.shared);
}
