//! Reference implementations used only to cross-check the library.
#![allow(dead_code)]

use std::collections::BTreeSet;

use quantlat::enumerate::canonical_lattice;
use quantlat::enumerate::quantales::canonical_table;
use quantlat::quantale::check_table;
use quantlat::{ElemSet, Lattice, Quantale};

pub fn subsets(n: usize) -> impl Iterator<Item = ElemSet> {
    (0u64..1 << n).map(ElemSet::from_bits)
}

/// `b ◁ a` straight from the definition: every `A` with `a ≤ ⋁A` has a member above `b`.
pub fn totally_below_brute(l: &Lattice, b: usize, a: usize) -> bool {
    subsets(l.size()).filter(|&s| l.leq(a, l.join_all(s))).all(|s| s.iter().any(|g| l.leq(b, g)))
}

/// `φ(α) = ⋃{A : α ≤ ⋀A}`, by listing every subset.
pub fn embed_brute(l: &Lattice, a: usize) -> ElemSet {
    subsets(l.size()).filter(|&s| l.leq(a, l.meet_all(s))).fold(ElemSet::EMPTY, ElemSet::union)
}

fn all_permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in all_permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Lattices on `n ≤ 6` elements by trying every order relation on the middle
/// elements and rejecting isomorphic copies by brute-force relabelling.
pub fn lattices_by_relation_filter(n: usize) -> Vec<Lattice> {
    assert!((1..=6).contains(&n));
    if n == 1 {
        return vec![Lattice::chain(1).unwrap()];
    }
    let m = n - 2;
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    let mut kept: Vec<Lattice> = Vec::new();
    for bits in 0u64..1 << pairs.len() {
        let mut order = vec![vec![false; n]; n];
        order[0] = vec![true; n];
        for (i, row) in order.iter_mut().enumerate() {
            row[i] = true;
            row[n - 1] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if bits >> k & 1 == 1 {
                order[i + 1][j + 1] = true;
            }
        }
        let Ok(l) = Lattice::new(order, (0..n).map(|i| i.to_string()).collect()) else {
            continue;
        };
        let middle: Vec<usize> = (1..n - 1).collect();
        let seen = kept.iter().any(|k| {
            all_permutations(&middle).into_iter().any(|p| {
                let mut map = vec![0; n];
                map[n - 1] = n - 1;
                for (i, &x) in p.iter().enumerate() {
                    map[i + 1] = x;
                }
                (0..n).all(|a| (0..n).all(|b| l.leq(a, b) == k.leq(map[a], map[b])))
            })
        });
        if !seen {
            kept.push(l);
        }
    }
    kept
}

pub fn canonical_codes(ls: &[Lattice]) -> BTreeSet<String> {
    ls.iter().map(|l| canonical_lattice(l).0).collect()
}

/// Every quantale table on `l` obtained by choosing all join-irreducible
/// cells freely (no pruning) and extending by joins, filtered by the full
/// axiom check. Distinct choices can give the same table; duplicates are dropped.
pub fn naive_tables(l: &Lattice) -> BTreeSet<Vec<usize>> {
    let ji: Vec<usize> = l.join_irreducibles().iter().collect();
    let m = ji.len();
    let n = l.size();
    let cells = m * m;
    let total = n.pow(cells as u32);
    let mut out = BTreeSet::new();
    let mut f = vec![0; cells];
    for code in 0..total {
        let mut c = code;
        for slot in f.iter_mut() {
            *slot = c % n;
            c /= n;
        }
        let table: Vec<usize> = (0..n * n)
            .map(|k| {
                let (x, y) = (k / n, k % n);
                let mut acc = l.bottom();
                for p in 0..m {
                    for q in 0..m {
                        if l.leq(ji[p], x) && l.leq(ji[q], y) {
                            acc = l.join(acc, f[p * m + q]);
                        }
                    }
                }
                acc
            })
            .collect();
        if check_table(l, &table).is_ok() {
            out.insert(table);
        }
    }
    out
}

/// Canonical strings of `tables` under `group`.
pub fn canonical_set<'a>(
    l: &Lattice,
    tables: impl IntoIterator<Item = &'a Vec<usize>>,
    group: &[Vec<usize>],
) -> BTreeSet<String> {
    tables.into_iter().map(|t| canonical_table(l, t, group).0).collect()
}

/// `e∧(⋁A) ≰ ⋁(e∧α)` over every subset `A`, first in numeric mask order.
pub fn und_subset_brute(q: &Quantale) -> Option<ElemSet> {
    let l = q.lattice();
    let e = q.unit()?;
    if !l.leq(e, l.join_all(l.elements().filter(|&b| totally_below_brute(l, b, e)).collect())) {
        return None;
    }
    subsets(l.size()).find(|&a| {
        let lhs = l.meet(e, l.join_all(a));
        let rhs = l.join_all(a.iter().map(|x| l.meet(e, x)).collect());
        !l.leq(lhs, rhs)
    })
}
