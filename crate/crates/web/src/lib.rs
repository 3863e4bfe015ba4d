//! Browser bindings: Hasse diagrams, quantale enumeration and the
//! totally-below relation for small named lattices.

use std::fmt::Write as _;

use serde_json::json;
use wasm_bindgen::prelude::*;

use quantlat::enumerate::quantales::resolve_element;
use quantlat::enumerate::{enumerate_quantales, Constraint, EnumOptions};
use quantlat::io::{entry_json, render_table};
use quantlat::named::{self, Pattern};
use quantlat::order::{distributivity_report, extend_lattice, totally_below};
use quantlat::Lattice;

/// Enumeration in the page is capped here to keep it interactive.
pub const MAX_ENUMERATION_SIZE: usize = 7;

/// `M3`, `extN5`, `chain:4`, `boolean:2`, ..., optionally extended at `gamma`.
pub fn lattice_from(shape: &str, gamma: &str) -> Result<Lattice, String> {
    let shape = shape.trim();
    let base = if let Ok(p) = shape.parse::<Pattern>() {
        p.model()
    } else if let Some(n) = shape.strip_prefix("chain:") {
        let n: usize = n.parse().map_err(|_| format!("bad chain length {n:?}"))?;
        if !(1..=10).contains(&n) {
            return Err("chain length must be between 1 and 10".into());
        }
        Lattice::chain(n).map_err(|e| e.to_string())?
    } else if let Some(k) = shape.strip_prefix("boolean:") {
        let k: usize = k.parse().map_err(|_| format!("bad exponent {k:?}"))?;
        if k > 3 {
            return Err("boolean:K needs K ≤ 3".into());
        }
        named::boolean(k)
    } else {
        return Err(format!("unknown lattice {shape:?}"));
    };
    let gamma = gamma.trim();
    if gamma.is_empty() {
        return Ok(base);
    }
    let g = resolve_element(&base, gamma)?;
    if g == base.top() {
        return Err("gamma must differ from the top element".into());
    }
    Ok(extend_lattice(&base, g).lattice)
}

/// Length of the longest chain from the bottom to each element.
fn heights(l: &Lattice) -> Vec<usize> {
    let mut order: Vec<usize> = l.elements().collect();
    order.sort_by_key(|&x| l.down_set(x).len());
    let mut h = vec![0; l.size()];
    for &x in &order {
        h[x] = l.elements().filter(|&y| l.lt(y, x)).map(|y| h[y] + 1).max().unwrap_or(0);
    }
    h
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Layered Hasse diagram; elements sit at their height, left to right by index.
pub fn hasse_svg_for(l: &Lattice) -> String {
    const DX: f64 = 90.0;
    const DY: f64 = 70.0;
    const PAD: f64 = 40.0;
    let h = heights(l);
    let levels = h.iter().max().map_or(1, |m| m + 1);
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); levels];
    for x in l.elements() {
        rows[h[x]].push(x);
    }
    let widest = rows.iter().map(Vec::len).max().unwrap_or(1);
    let width = PAD * 2.0 + DX * (widest.max(1) - 1) as f64;
    let height = PAD * 2.0 + DY * (levels - 1) as f64;
    let mut pos = vec![(0.0, 0.0); l.size()];
    for (level, row) in rows.iter().enumerate() {
        let span = DX * (row.len().max(1) - 1) as f64;
        for (i, &x) in row.iter().enumerate() {
            pos[x] = (width / 2.0 - span / 2.0 + DX * i as f64, height - PAD - DY * level as f64);
        }
    }
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    for (a, b) in l.covers() {
        let ((x1, y1), (x2, y2)) = (pos[a], pos[b]);
        let _ = writeln!(s, r##"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#555" stroke-width="1.5"/>"##);
    }
    for x in l.elements() {
        let (cx, cy) = pos[x];
        let name = escape(l.name(x));
        let _ = writeln!(
            s,
            r##"  <g class="node" data-name="{name}"><circle cx="{cx}" cy="{cy}" r="6" fill="#fff" stroke="#222" stroke-width="1.5"/><text x="{}" y="{}" font-size="13" font-family="sans-serif">{name}</text></g>"##,
            cx + 9.0,
            cy - 6.0
        );
    }
    s.push_str("</svg>\n");
    s
}

/// Counts plus one record per isomorphism class, as a single JSON object.
pub fn enumerate_for(shape: &str, gamma: &str, constraint: &str) -> Result<String, String> {
    let l = lattice_from(shape, gamma)?;
    if l.size() > MAX_ENUMERATION_SIZE {
        return Err(format!("enumeration in the page is limited to {MAX_ENUMERATION_SIZE} elements"));
    }
    let c = Constraint::parse(constraint, &l)?;
    let entries = enumerate_quantales(&l, c, EnumOptions { threads: Some(1) });
    let records: Vec<_> = entries
        .iter()
        .map(|e| {
            let mut v = entry_json(e);
            v["table"] = json!(render_table(&e.quantale));
            v
        })
        .collect();
    let unital = entries.iter().filter(|e| e.profile.unit.is_some()).count();
    let commutative = entries.iter().filter(|e| e.profile.commutative).count();
    Ok(json!({
        "constraint": c.display(&l),
        "total": entries.len(),
        "unital": unital,
        "commutative": commutative,
        "entries": records,
    })
    .to_string())
}

/// `{names, matrix, approximable, completelyDistributive}` with `matrix[b][a] = b ◁ a`.
pub fn totally_below_for(shape: &str, gamma: &str) -> Result<String, String> {
    let l = lattice_from(shape, gamma)?;
    let matrix: Vec<Vec<bool>> =
        l.elements().map(|b| l.elements().map(|a| totally_below(&l, b, a)).collect()).collect();
    let r = distributivity_report(&l);
    Ok(json!({
        "names": l.names(),
        "matrix": matrix,
        "approximable": r.approximable,
        "completelyDistributive": r.completely_distributive,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn hasse_svg(shape: &str, gamma: &str) -> Result<String, JsValue> {
    lattice_from(shape, gamma).map(|l| hasse_svg_for(&l)).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn enumerate(shape: &str, gamma: &str, constraint: &str) -> Result<String, JsValue> {
    enumerate_for(shape, gamma, constraint).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn totally_below_matrix(shape: &str, gamma: &str) -> Result<String, JsValue> {
    totally_below_for(shape, gamma).map_err(|e| JsValue::from_str(&e))
}
