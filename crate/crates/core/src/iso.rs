//! Order isomorphisms between finite lattices.

use std::ops::ControlFlow;

use crate::lattice::Lattice;

/// Per-element isomorphism invariant: `(|↓x|, |↑x|, atom, coatom, join-irreducible)`.
pub type Invariant = (usize, usize, bool, bool, bool);

pub fn invariants(l: &Lattice) -> Vec<Invariant> {
    l.elements()
        .map(|x| (l.down_set(x).len(), l.up_set(x).len(), l.is_atom(x), l.is_coatom(x), l.is_join_irreducible(x)))
        .collect()
}

/// Calls `visit` with every order isomorphism `l1 → l2` (as an image vector),
/// in lexicographic order of the image vectors, until it breaks.
pub fn for_each_isomorphism<F>(l1: &Lattice, l2: &Lattice, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = l1.size();
    if n != l2.size() {
        return;
    }
    let inv1 = invariants(l1);
    let inv2 = invariants(l2);
    let mut sorted1 = inv1.clone();
    let mut sorted2 = inv2.clone();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return;
    }
    let candidates: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| inv1[i] == inv2[j]).collect()).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let _ = extend(l1, l2, &candidates, 0, &mut map, &mut used, &mut visit);
}

fn extend<F>(
    l1: &Lattice,
    l2: &Lattice,
    candidates: &[Vec<usize>],
    i: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if i == map.len() {
        return visit(map);
    }
    for &img in &candidates[i] {
        if used[img] {
            continue;
        }
        let consistent = (0..i).all(|k| l1.leq(i, k) == l2.leq(img, map[k]) && l1.leq(k, i) == l2.leq(map[k], img));
        if !consistent {
            continue;
        }
        map[i] = img;
        used[img] = true;
        let flow = extend(l1, l2, candidates, i + 1, map, used, visit);
        used[img] = false;
        map[i] = usize::MAX;
        flow?;
    }
    ControlFlow::Continue(())
}

/// First isomorphism `l1 → l2`, if any.
pub fn lattice_isomorphic(l1: &Lattice, l2: &Lattice) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_isomorphism(l1, l2, |m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    found
}

pub fn lattice_isomorphisms(l1: &Lattice, l2: &Lattice) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    for_each_isomorphism(l1, l2, |m| {
        all.push(m.to_vec());
        ControlFlow::Continue(())
    });
    all
}

/// All automorphisms; the identity comes first.
pub fn automorphisms(l: &Lattice) -> Vec<Vec<usize>> {
    lattice_isomorphisms(l, l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::order::extend_lattice;

    #[test]
    fn diamond_and_pentagon_differ() {
        assert_eq!(lattice_isomorphic(&named::m3(), &named::n5()), None);
    }

    #[test]
    fn diamond_has_six_automorphisms() {
        let auts = automorphisms(&named::m3());
        assert_eq!(auts.len(), 6);
        assert_eq!(auts[0], vec![0, 1, 2, 3, 4]);
        for a in &auts {
            assert_eq!((a[0], a[4]), (0, 4));
        }
    }

    #[test]
    fn computed_extensions_match_drawn_ones() {
        for (base, ext) in [
            (named::n5(), named::ext_n5()),
            (named::m3(), named::ext_m3()),
            (named::l6(), named::ext_l6()),
            (named::l7(), named::ext_l7()),
        ] {
            let g = base.index_of("gamma").unwrap();
            let built = extend_lattice(&base, g).lattice;
            assert!(lattice_isomorphic(&built, &ext).is_some());
        }
    }

    #[test]
    fn isomorphism_preserves_order() {
        let l = named::l7();
        let shuffled = l.permuted(&[3, 0, 6, 1, 5, 2, 4]);
        let m = lattice_isomorphic(&l, &shuffled).unwrap();
        for a in l.elements() {
            for b in l.elements() {
                assert_eq!(l.leq(a, b), shuffled.leq(m[a], m[b]));
            }
        }
    }
}
