use std::fmt::Write;

use troot_core::bds::{BdsDoc, MaximalDoc};
use troot_core::levi::TRootSystemDoc;
use troot_core::rootsys::RootSystemDoc;
use troot_core::series::SeriesDoc;
use troot_core::slnx::SlnDoc;
use troot_core::verify::CheckDoc;

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(cell);
            if i + 1 < cells.len() {
                s.extend(std::iter::repeat_n(' ', w - cell.chars().count()));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    out += &line(widths.iter().map(|&w| "-".repeat(w)).collect());
    for row in rows {
        out += &line(row);
    }
    out
}

fn nodes(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn roots(doc: &RootSystemDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "type {}  rank {}  positive roots {}", doc.simple_type, doc.d.len(), doc.positives.len());
    let _ = writeln!(out, "highest root {}  marks {:?}  d {:?}", doc.psi, doc.marks, doc.d);
    out.push_str("cartan\n");
    for row in doc.cartan.entries() {
        let cells: Vec<String> = row.iter().map(|a| format!("{a:>3}")).collect();
        let _ = writeln!(out, " {}", cells.join(""));
    }
    out.push('\n');
    let rows = doc
        .positives
        .iter()
        .enumerate()
        .map(|(i, r)| vec![(i + 1).to_string(), r.height().to_string(), r.to_string()])
        .collect();
    out + &table(&["#", "height", "coefficients"], rows)
}

pub fn troots(doc: &TRootSystemDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "type {}  keep {}  delete {}", doc.simple_type, nodes(&doc.kept), nodes(&doc.deleted));
    let simples: Vec<String> = doc.simples.iter().map(|k| k.to_string()).collect();
    let _ = writeln!(out, "t-roots {}  simple {}", doc.spaces.len(), simples.join(" "));
    let _ = writeln!(out, "delta_n {}", doc.delta_n);
    out.push('\n');
    let rows = doc
        .spaces
        .iter()
        .map(|s| {
            vec![s.key.to_string(), s.dim.to_string(), s.highest.to_string(), s.lowest.to_string(), s.vec.to_string()]
        })
        .collect();
    out + &table(&["key", "dim", "highest", "lowest", "vector"], rows)
}

pub fn series(doc: &SeriesDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "type {}  keep {}  delete {}", doc.simple_type, nodes(&doc.kept), nodes(&doc.deleted));
    let _ = writeln!(out, "nilpotency length {}", doc.k_cent);
    out.push('\n');
    let rows = doc
        .levels
        .iter()
        .map(|(k, keys)| {
            let keys: Vec<String> = keys.iter().map(|t| t.to_string()).collect();
            vec![k.to_string(), keys.len().to_string(), keys.join(" ")]
        })
        .collect();
    out += &table(&["level", "t-roots", "keys"], rows);
    out.push('\n');
    let rows = (0..doc.upper.len().max(doc.lower.len()))
        .map(|i| {
            let size = |v: &Vec<Vec<_>>| v.get(i).map_or(String::new(), |s| s.len().to_string());
            vec![(i + 1).to_string(), size(&doc.upper), size(&doc.lower)]
        })
        .collect();
    out + &table(&["i", "dim U_i", "dim L_i"], rows)
}

pub fn bds(doc: &BdsDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "type {}  marks {:?}", doc.simple_type, doc.marks);
    out.push('\n');
    let rows = doc
        .nodes
        .iter()
        .map(|n| {
            let dims: Vec<String> = n.residue_dims.iter().map(|(k, d)| format!("{k}:{d}")).collect();
            vec![
                n.node.to_string(),
                n.mark.to_string(),
                if n.prime { "yes" } else { "no" }.to_string(),
                n.subalgebra_class.to_string(),
                n.subalgebra_roots.to_string(),
                dims.join(" "),
            ]
        })
        .collect();
    out + &table(&["node", "mark", "prime", "subalgebra", "roots", "residue dims"], rows)
}

pub fn maximal(doc: &MaximalDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "type {}", doc.simple_type);
    if doc.entries.is_empty() {
        out.push_str("no node has prime mark\n");
        return out;
    }
    out.push('\n');
    let rows = doc
        .entries
        .iter()
        .map(|e| vec![e.node.to_string(), e.mark.to_string(), e.class.to_string()])
        .collect();
    out + &table(&["node", "mark", "subalgebra"], rows)
}

pub fn sln(doc: &SlnDoc) -> String {
    let mut out = String::new();
    let parts: Vec<String> = doc.composition.parts().iter().map(|d| d.to_string()).collect();
    let _ = writeln!(out, "composition ({})  type {}  delete {}", parts.join(","), doc.simple_type, nodes(&doc.deleted));
    let status = if doc.crosscheck.passed() { "agrees" } else { "DISAGREES" };
    let _ = writeln!(out, "cross-check {status} ({} checks)", doc.crosscheck.checked);
    for f in &doc.crosscheck.failures {
        let _ = writeln!(out, "  {f}");
    }
    out.push('\n');
    let rows = doc
        .table
        .entries
        .iter()
        .map(|e| {
            let engine = doc.levi_dims.get(&format!("{},{}", e.r, e.s)).map_or("-".to_string(), |d| d.to_string());
            vec![e.r.to_string(), e.s.to_string(), e.dim.to_string(), engine, nodes(&e.acting)]
        })
        .collect();
    out + &table(&["r", "s", "dim", "engine dim", "acting blocks"], rows)
}

pub fn check(doc: &CheckDoc) -> String {
    let mut out = String::new();
    let scope = if doc.all_parabolics { "all parabolics" } else { "Borel and maximal parabolics" };
    let _ = writeln!(out, "scope: {scope}");
    for t in &doc.types {
        let _ = writeln!(out, "\n{}  ({} designations)  {}", t.simple_type, t.designations, if t.passed { "PASS" } else { "FAIL" });
        let rows = t
            .laws
            .iter()
            .map(|l| {
                vec![
                    l.law.name().to_string(),
                    l.tally.checked.to_string(),
                    l.tally.failed.to_string(),
                    if l.passed { "pass" } else { "FAIL" }.to_string(),
                ]
            })
            .collect();
        out += &table(&["law", "checked", "failed", "status"], rows);
        for l in t.laws.iter().filter(|l| !l.passed) {
            for e in &l.tally.examples {
                let _ = writeln!(out, "  {}: {e}", l.law.name());
            }
        }
    }
    let _ = writeln!(out, "\noverall: {}", if doc.passed { "PASS" } else { "FAIL" });
    out
}
