//! Multiplication tables on a fixed lattice, one per isomorphism class.
//!
//! A join-preserving multiplication is determined by its values on pairs of
//! join-irreducible elements, so the search assigns those cells only (row
//! major, candidates in index order) and reads every other product as
//! `x∗y = ⋁{j∗k : j ≤ x, k ≤ y}`. Partial assignments are pruned by
//! monotonicity, by the join-preservation identities whose cells are all
//! known, and by associativity on join-irreducible triples. Complete
//! assignments are validated in full.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::extension::{check_extension_conditions, unitally_nondistributive};
use crate::iso::automorphisms;
use crate::lattice::Lattice;
use crate::quantale::{check_table, Quantale, QuantaleProfile};

/// Extra conditions on the enumerated tables. Parameters are element indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "element", rename_all = "camelCase")]
pub enum Constraint {
    None,
    /// the given element is the unit
    UnitalAt(usize),
    /// `(γ∗α) ∨ (α∗γ) ≤ α` for all `α`
    PropA(usize),
    Unital,
    NonUnital,
    SemiUnital,
}

impl Constraint {
    pub fn parameter(self) -> Option<usize> {
        match self {
            Constraint::UnitalAt(x) | Constraint::PropA(x) => Some(x),
            _ => None,
        }
    }

    /// Parses `none`, `unital`, `nonUnital`, `semiUnital`, `propA(x)` and
    /// `unitalAt(x)`, where `x` is an element name of `l` (Greek letters and
    /// `⊥`/`⊤` are accepted for `alpha`, `beta`, `gamma`, `bot`, `top`).
    pub fn parse(s: &str, l: &Lattice) -> Result<Constraint, String> {
        let s = s.trim();
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "none" => return Ok(Constraint::None),
            "unital" => return Ok(Constraint::Unital),
            "nonunital" | "non-unital" => return Ok(Constraint::NonUnital),
            "semiunital" | "semi-unital" => return Ok(Constraint::SemiUnital),
            _ => {}
        }
        let (head, rest) = s.split_once('(').ok_or_else(|| format!("unknown constraint {s:?}"))?;
        let arg = rest.strip_suffix(')').ok_or_else(|| format!("missing ')' in {s:?}"))?.trim();
        let x = resolve_element(l, arg)?;
        match head.trim().to_ascii_lowercase().as_str() {
            "propa" => Ok(Constraint::PropA(x)),
            "unitalat" => Ok(Constraint::UnitalAt(x)),
            other => Err(format!("unknown constraint {other:?}")),
        }
    }

    pub fn display(self, l: &Lattice) -> String {
        match self {
            Constraint::None => "none".into(),
            Constraint::UnitalAt(x) => format!("unitalAt({})", l.name(x)),
            Constraint::PropA(x) => format!("propA({})", l.name(x)),
            Constraint::Unital => "unital".into(),
            Constraint::NonUnital => "nonUnital".into(),
            Constraint::SemiUnital => "semiUnital".into(),
        }
    }
}

/// Element by name, with Greek-letter aliases.
pub fn resolve_element(l: &Lattice, name: &str) -> Result<usize, String> {
    let alias = match name {
        "α" => "alpha",
        "β" => "beta",
        "γ" => "gamma",
        "⊥" => "bot",
        "⊤" => "top",
        "⊤̄" => "topbar",
        other => other,
    };
    l.index_of(alias).or_else(|| l.index_of(name)).ok_or_else(|| format!("unknown element {name:?}"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogueEntry {
    pub quantale: Quantale,
    pub canonical: String,
    pub profile: QuantaleProfile,
    pub flags: BTreeMap<String, bool>,
}

impl fmt::Display for CatalogueEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumOptions {
    /// Worker count; `None` uses the global pool, `Some(1)` runs inline.
    pub threads: Option<usize>,
}

impl FromStr for EnumOptions {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let n: usize = s.parse().map_err(|e| format!("bad thread count {s:?}: {e}"))?;
        if n == 0 {
            return Err("thread count must be positive".into());
        }
        Ok(EnumOptions { threads: Some(n) })
    }
}

/// The automorphisms that fix the constraint parameter, if any.
pub fn symmetry_group(l: &Lattice, constraint: Constraint) -> Vec<Vec<usize>> {
    let all = automorphisms(l);
    match constraint.parameter() {
        Some(x) => all.into_iter().filter(|p| p[x] == x).collect(),
        None => all,
    }
}

fn encode(x: usize) -> char {
    char::from_digit(x as u32, 36).expect("fewer than 36 elements")
}

/// `n:order:table`, minimised over `group`; also returns the minimising table.
pub fn canonical_table(l: &Lattice, mul: &[usize], group: &[Vec<usize>]) -> (String, Vec<usize>) {
    let n = l.size();
    let mut best: Option<Vec<usize>> = None;
    let mut buf = vec![0; n * n];
    for perm in group {
        for a in 0..n {
            for b in 0..n {
                buf[perm[a] * n + perm[b]] = perm[mul[a * n + b]];
            }
        }
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
    }
    let table = best.unwrap_or_else(|| mul.to_vec());
    let code: String = table.iter().map(|&x| encode(x)).collect();
    (format!("{n}:{}:{code}", l.order_code()), table)
}

struct Search<'a> {
    l: &'a Lattice,
    /// join-irreducible elements in index order
    ji: Vec<usize>,
    /// positions in `ji` of the join-irreducibles below each element
    below: Vec<Vec<usize>>,
    /// candidate values per cell `p * m + q`, cells in row-major order
    cands: Vec<Vec<usize>>,
    /// pairs `(y, z)` whose join has join-irreducibles below neither
    join_pairs: Vec<(usize, usize)>,
}

impl<'a> Search<'a> {
    fn new(l: &'a Lattice, bound: Option<usize>, unit: Option<usize>) -> Search<'a> {
        let ji: Vec<usize> = l.join_irreducibles().iter().collect();
        let m = ji.len();
        let below: Vec<Vec<usize>> = l.elements().map(|x| (0..m).filter(|&p| l.leq(ji[p], x)).collect()).collect();
        let mut cands = Vec::with_capacity(m * m);
        for p in 0..m {
            for q in 0..m {
                let (j, k) = (ji[p], ji[q]);
                let mut c: Vec<usize> = l.elements().collect();
                if let Some(g) = bound {
                    // j ≤ g gives j∗k ≤ g∗k ≤ k, and symmetrically
                    if l.leq(j, g) {
                        c.retain(|&v| l.leq(v, k));
                    }
                    if l.leq(k, g) {
                        c.retain(|&v| l.leq(v, j));
                    }
                }
                if let Some(u) = unit {
                    if l.leq(u, j) {
                        c.retain(|&v| l.leq(k, v));
                    }
                    if l.leq(u, k) {
                        c.retain(|&v| l.leq(j, v));
                    }
                    if j == u {
                        c.retain(|&v| v == k);
                    }
                    if k == u {
                        c.retain(|&v| v == j);
                    }
                }
                cands.push(c);
            }
        }
        let mut join_pairs = Vec::new();
        for y in l.elements() {
            for z in y + 1..l.size() {
                let j = l.join(y, z);
                if below[j].iter().any(|p| !below[y].contains(p) && !below[z].contains(p)) {
                    join_pairs.push((y, z));
                }
            }
        }
        Search { l, ji, below, cands, join_pairs }
    }

    fn m(&self) -> usize {
        self.ji.len()
    }

    fn eval(&self, f: &[Option<usize>], x: usize, y: usize) -> Option<usize> {
        let m = self.m();
        let mut acc = self.l.bottom();
        for &p in &self.below[x] {
            for &q in &self.below[y] {
                acc = self.l.join(acc, f[p * m + q]?);
            }
        }
        Some(acc)
    }

    fn consistent(&self, f: &[Option<usize>], cell: usize) -> bool {
        let l = self.l;
        let m = self.m();
        let (p, q) = (cell / m, cell % m);
        let v = f[cell].expect("cell just assigned");
        let (j, k) = (self.ji[p], self.ji[q]);
        for (other, w) in f.iter().enumerate() {
            let Some(w) = *w else { continue };
            let (j2, k2) = (self.ji[other / m], self.ji[other % m]);
            if l.leq(j2, j) && l.leq(k2, k) && !l.leq(w, v) {
                return false;
            }
            if l.leq(j, j2) && l.leq(k, k2) && !l.leq(v, w) {
                return false;
            }
        }
        for &(y, z) in &self.join_pairs {
            let yz = l.join(y, z);
            for &r in &self.ji {
                if let (Some(a), Some(b), Some(c)) = (self.eval(f, yz, r), self.eval(f, y, r), self.eval(f, z, r)) {
                    if a != l.join(b, c) {
                        return false;
                    }
                }
                if let (Some(a), Some(b), Some(c)) = (self.eval(f, r, yz), self.eval(f, r, y), self.eval(f, r, z)) {
                    if a != l.join(b, c) {
                        return false;
                    }
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                let Some(ab) = f[a * m + b] else { continue };
                for c in 0..m {
                    let Some(bc) = f[b * m + c] else { continue };
                    let lhs = self.eval(f, ab, self.ji[c]);
                    let rhs = self.eval(f, self.ji[a], bc);
                    if let (Some(x), Some(y)) = (lhs, rhs) {
                        if x != y {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn table(&self, f: &[Option<usize>]) -> Vec<usize> {
        let n = self.l.size();
        (0..n * n).map(|i| self.eval(f, i / n, i % n).expect("complete assignment")).collect()
    }

    fn dfs(&self, f: &mut Vec<Option<usize>>, cell: usize, leaf: &mut dyn FnMut(Vec<usize>)) {
        if cell == f.len() {
            let t = self.table(f);
            if check_table(self.l, &t).is_ok() {
                leaf(t);
            }
            return;
        }
        for &v in &self.cands[cell] {
            f[cell] = Some(v);
            if self.consistent(f, cell) {
                self.dfs(f, cell + 1, leaf);
            }
        }
        f[cell] = None;
    }

    /// Runs the subtree under each first-cell value, possibly in parallel.
    fn run<T: Send>(&self, threads: Option<usize>, collect: impl Fn(Vec<usize>, &mut Vec<T>) + Sync) -> Vec<T> {
        let m = self.m();
        if m == 0 {
            // the one-point lattice
            let mut out = Vec::new();
            let t = vec![self.l.bottom(); self.l.size() * self.l.size()];
            if check_table(self.l, &t).is_ok() {
                collect(t, &mut out);
            }
            return out;
        }
        let subtree = |v: usize| {
            let mut f = vec![None; m * m];
            f[0] = Some(v);
            let mut out = Vec::new();
            if self.consistent(&f, 0) {
                self.dfs(&mut f, 1, &mut |t| collect(t, &mut out));
            }
            out
        };
        let firsts = &self.cands[0];
        let parts: Vec<Vec<T>> = match threads {
            Some(1) => firsts.iter().map(|&v| subtree(v)).collect(),
            Some(k) => rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .expect("thread pool")
                .install(|| firsts.par_iter().map(|&v| subtree(v)).collect()),
            None => firsts.par_iter().map(|&v| subtree(v)).collect(),
        };
        parts.into_iter().flatten().collect()
    }
}

fn search_params(constraint: Constraint, unit: Option<usize>) -> (Option<usize>, Option<usize>) {
    match constraint {
        Constraint::PropA(g) => (Some(g), None),
        Constraint::UnitalAt(u) => (Some(u), Some(u)),
        _ => (unit, unit),
    }
}

fn accepts(l: &Lattice, constraint: Constraint, mul: &[usize]) -> bool {
    let q = Quantale::from_checked(l.clone(), mul.to_vec(), None);
    match constraint {
        Constraint::None => true,
        Constraint::UnitalAt(u) => q.unit() == Some(u),
        Constraint::PropA(g) => l.elements().all(|a| l.leq(l.join(q.mul(g, a), q.mul(a, g)), a)),
        Constraint::Unital => q.unit().is_some(),
        Constraint::NonUnital => q.unit().is_none(),
        Constraint::SemiUnital => q.is_semi_unital(),
    }
}

/// Every valid table satisfying the constraint, without isomorphism reduction,
/// in search order.
pub fn enumerate_tables(l: &Lattice, constraint: Constraint) -> Vec<Vec<usize>> {
    let units: Vec<Option<usize>> = match constraint {
        Constraint::Unital => l.elements().map(Some).collect(),
        _ => vec![None],
    };
    let mut out = Vec::new();
    for u in units {
        let (bound, unit) = search_params(constraint, u);
        let s = Search::new(l, bound, unit);
        out.extend(s.run(Some(1), |t, acc| {
            if accepts(l, constraint, &t) {
                acc.push(t);
            }
        }));
    }
    out
}

/// One entry per isomorphism class under [`symmetry_group`], sorted by
/// canonical string. The output does not depend on `opts.threads`.
pub fn enumerate_quantales(l: &Lattice, constraint: Constraint, opts: EnumOptions) -> Vec<CatalogueEntry> {
    let group = symmetry_group(l, constraint);
    // for `Unital`, one unit per automorphism orbit is enough
    let units: Vec<Option<usize>> = match constraint {
        Constraint::Unital => {
            let mut seen = BTreeSet::new();
            l.elements()
                .filter(|&u| {
                    let orbit: BTreeSet<usize> = group.iter().map(|p| p[u]).collect();
                    let fresh = !seen.contains(&u);
                    seen.extend(orbit);
                    fresh
                })
                .map(Some)
                .collect()
        }
        _ => vec![None],
    };
    let mut found: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for u in units {
        let (bound, unit) = search_params(constraint, u);
        let s = Search::new(l, bound, unit);
        let hits = s.run(opts.threads, |t, acc| {
            if accepts(l, constraint, &t) {
                acc.push(canonical_table(l, &t, &group));
            }
        });
        found.extend(hits);
    }
    found.into_iter().map(|(canonical, mul)| entry(l, constraint, canonical, mul)).collect()
}

fn entry(l: &Lattice, constraint: Constraint, canonical: String, mul: Vec<usize>) -> CatalogueEntry {
    let quantale = Quantale::from_checked(l.clone(), mul, None);
    let profile = quantale.profile();
    let mut flags = BTreeMap::new();
    if let Some(g) = constraint.parameter() {
        if g != l.top() {
            let c = check_extension_conditions(&quantale, g).expect("parameter is not the top");
            flags.insert("propA".to_string(), c.prop_a);
            flags.insert("propAA".to_string(), c.prop_aa);
            flags.insert("propB".to_string(), c.prop_b);
        }
    }
    flags.insert("und".to_string(), unitally_nondistributive(&quantale).is_some());
    CatalogueEntry { quantale, canonical, profile, flags }
}

/// Attaches the label of an isomorphic reference table where one exists.
/// With `fixing`, only isomorphisms that fix that element count.
pub fn attach_labels(entries: &mut [CatalogueEntry], references: &[Quantale], fixing: Option<usize>) {
    for e in entries.iter_mut() {
        let found =
            references.iter().find(|r| crate::quantale::quantale_isomorphic_fixing(r, &e.quantale, fixing).is_some());
        if let Some(r) = found {
            e.quantale = e.quantale.clone().with_label(r.label().map(str::to_string));
        }
    }
}
