//! Unlabelled bounded lattices on `n ≤ 8` elements.
//!
//! The middle elements are added one at a time in a natural labelling: each
//! new element sits above a down-set of the elements placed so far and below
//! none of them. Elements placed later are never below earlier ones, so the
//! common lower bounds of two placed elements are final and meets can be
//! checked as soon as both exist. A finite bounded poset with all binary
//! meets is a lattice, so no separate join check is needed.

use std::collections::BTreeMap;

use crate::iso::invariants;
use crate::lattice::Lattice;
use crate::set::ElemSet;

use super::EnumError;

pub const MAX_LATTICE_SIZE: usize = 8;

/// One lattice per isomorphism class, sorted by canonical order code.
pub fn enumerate_lattices(n: usize) -> Result<Vec<Lattice>, EnumError> {
    if n == 0 {
        return Err(EnumError::Empty);
    }
    if n > MAX_LATTICE_SIZE {
        return Err(EnumError::TooLarge { size: n, max: MAX_LATTICE_SIZE });
    }
    if n == 1 {
        return Ok(vec![canonical_names(Lattice::chain(1).expect("one point"))]);
    }
    let m = n - 2;
    let mut found: BTreeMap<String, Lattice> = BTreeMap::new();
    let mut below = Vec::with_capacity(m);
    grow(m, &mut below, &mut |below| {
        let l = close(n, below);
        let (code, canon) = canonical_lattice(&l);
        found.entry(code).or_insert(canon);
    });
    Ok(found.into_values().collect())
}

/// `below[i]` is the strict down-set of middle element `i` among the middle
/// elements (indices `0..m`).
fn grow(m: usize, below: &mut Vec<ElemSet>, emit: &mut impl FnMut(&[ElemSet])) {
    let k = below.len();
    if k == m {
        emit(below);
        return;
    }
    for bits in 0u64..1 << k {
        let down = ElemSet::from_bits(bits);
        if !down.iter().all(|x| below[x].is_subset(down)) {
            continue;
        }
        // meets between the new element and every earlier one
        let ok = (0..k).all(|x| {
            let common = below[x].with(x).intersection(down);
            has_greatest(below, common)
        });
        if ok {
            below.push(down);
            grow(m, below, emit);
            below.pop();
        }
    }
}

/// Empty sets have the outer bottom as greatest lower bound.
fn has_greatest(below: &[ElemSet], set: ElemSet) -> bool {
    set.is_empty() || set.iter().any(|g| below[g].with(g) == set)
}

fn close(n: usize, below: &[ElemSet]) -> Lattice {
    let top = n - 1;
    let order = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i == j || i == 0 || j == top || (i != top && j != 0 && below[j - 1].contains(i - 1)))
                .collect()
        })
        .collect();
    Lattice::new(order, (0..n).map(|i| i.to_string()).collect()).expect("meet-closed bounded poset")
}

fn canonical_names(l: Lattice) -> Lattice {
    let n = l.size();
    let names = (0..n)
        .map(|i| match i {
            0 => "bot".to_string(),
            i if i == n - 1 => "top".to_string(),
            i => format!("x{i}"),
        })
        .collect();
    l.renamed(names).expect("distinct names")
}

/// All permutations `perm` (element `i` goes to `perm[i]`) that send elements
/// to positions sorted by invariant, trying every order inside each class.
fn class_permutations(l: &Lattice) -> Vec<Vec<usize>> {
    let inv = invariants(l);
    let mut order: Vec<usize> = l.elements().collect();
    order.sort_by_key(|&x| inv[x]);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &x in &order {
        match classes.last_mut() {
            Some(c) if inv[c[0]] == inv[x] => c.push(x),
            _ => classes.push(vec![x]),
        }
    }
    let mut out = Vec::new();
    let mut perm = vec![0; l.size()];
    fill(&classes, 0, 0, &mut perm, &mut out);
    out
}

fn fill(classes: &[Vec<usize>], ci: usize, start: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if ci == classes.len() {
        out.push(perm.clone());
        return;
    }
    let class = &classes[ci];
    for arrangement in permutations(class.len()) {
        for (slot, &k) in arrangement.iter().enumerate() {
            perm[class[k]] = start + slot;
        }
        fill(classes, ci + 1, start + class.len(), perm, out);
    }
}

/// All permutations of `0..k` in lexicographic order.
pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).expect("a larger element exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Minimum order code over invariant-respecting relabellings, and the lattice
/// relabelled accordingly with names `bot`, `x1`, ..., `top`.
pub fn canonical_lattice(l: &Lattice) -> (String, Lattice) {
    let mut best: Option<(String, Vec<usize>)> = None;
    for perm in class_permutations(l) {
        let code = l.permuted(&perm).order_code();
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            best = Some((code, perm));
        }
    }
    let (code, perm) = best.expect("at least the sorted arrangement");
    (code, canonical_names(l.permuted(&perm)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::lattice_isomorphic;
    use crate::named;

    #[test]
    fn permutations_are_lexicographic() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_lattices(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5, 15]);
    }

    #[test]
    fn canonical_form_is_labelling_independent() {
        let l = named::l7();
        let shuffled = l.permuted(&[0, 5, 2, 4, 1, 3, 6]);
        assert_eq!(canonical_lattice(&l).0, canonical_lattice(&shuffled).0);
        assert_ne!(canonical_lattice(&named::m3()).0, canonical_lattice(&named::n5()).0);
    }

    #[test]
    fn five_element_lattices_include_diamond_and_pentagon() {
        let all = enumerate_lattices(5).unwrap();
        assert!(all.iter().any(|l| lattice_isomorphic(l, &named::m3()).is_some()));
        assert!(all.iter().any(|l| lattice_isomorphic(l, &named::n5()).is_some()));
        for l in &all {
            assert_eq!(l.name(l.bottom()), "bot");
            assert_eq!(l.name(l.top()), "top");
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(enumerate_lattices(0), Err(EnumError::Empty));
        assert_eq!(enumerate_lattices(9), Err(EnumError::TooLarge { size: 9, max: 8 }));
    }
}
