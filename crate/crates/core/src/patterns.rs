//! Search for the extended diamond, pentagon, `L̄6` and `L̄7` as complete
//! sublattices.
//!
//! A complete sublattice here is a subset that contains the bottom and is
//! closed under the ambient binary join; its meets are recomputed inside the
//! subset and need not agree with the ambient ones.

use serde::Serialize;

use crate::iso::lattice_isomorphic;
use crate::lattice::Lattice;
use crate::named::Pattern;
use crate::set::ElemSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternMatch {
    pub pattern: Pattern,
    pub subset: ElemSet,
    /// `map[i]` is the element of the scanned lattice playing the role of
    /// element `i` of the pattern model.
    pub map: Vec<usize>,
}

/// `S ∋ ⊥` and `S` is closed under binary joins.
pub fn is_join_closed(l: &Lattice, subset: ElemSet) -> bool {
    subset.contains(l.bottom()) && subset.iter().all(|a| subset.iter().all(|b| subset.contains(l.join(a, b))))
}

/// First match among the four forbidden shapes, smallest subsets first, then
/// lexicographically by members, then in the order extM3, extN5, extL6, extL7.
pub fn pattern_scan(l: &Lattice) -> Option<PatternMatch> {
    scan_for(l, &Pattern::FORBIDDEN)
}

pub fn scan_for(l: &Lattice, patterns: &[Pattern]) -> Option<PatternMatch> {
    let models: Vec<(Pattern, Lattice)> = patterns.iter().map(|&p| (p, p.model())).collect();
    let mut sizes: Vec<usize> = models.iter().map(|(_, m)| m.size()).collect();
    sizes.sort_unstable();
    sizes.dedup();
    let others: Vec<usize> = l.elements().filter(|&x| x != l.bottom()).collect();
    for k in sizes {
        if k == 0 || k > l.size() {
            continue;
        }
        let mut found = None;
        for_each_combination(others.len(), k - 1, |picked| {
            let subset: ElemSet = picked.iter().map(|&i| others[i]).collect::<ElemSet>().with(l.bottom());
            if !is_join_closed(l, subset) {
                return false;
            }
            let sub = l.induced(subset).expect("join-closed subsets with bottom are lattices");
            let members: Vec<usize> = subset.iter().collect();
            for (p, model) in models.iter().filter(|(_, m)| m.size() == k) {
                if let Some(iso) = lattice_isomorphic(model, &sub) {
                    let map = iso.iter().map(|&i| members[i]).collect();
                    found = Some(PatternMatch { pattern: *p, subset, map });
                    return true;
                }
            }
            false
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Visits k-combinations of `0..n` in lexicographic order until `f` returns true.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn combinations_in_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            false
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        for_each_combination(3, 0, |_| {
            count += 1;
            false
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn extended_diamond_matches_itself() {
        let l = named::ext_m3();
        let m = pattern_scan(&l).unwrap();
        assert_eq!(m.pattern, Pattern::ExtM3);
        assert_eq!(m.subset, l.all());
    }

    #[test]
    fn extended_l6_is_its_own_pattern() {
        let l = named::ext_l6();
        let m = pattern_scan(&l).unwrap();
        assert_eq!(m.pattern, Pattern::ExtL6);
        assert_eq!(m.subset, l.all());
    }

    #[test]
    fn cube_has_no_pattern() {
        assert_eq!(pattern_scan(&named::boolean(3)), None);
    }

    #[test]
    fn match_map_is_an_order_embedding() {
        let l = named::ext_l7();
        let m = pattern_scan(&l).unwrap();
        let model = m.pattern.model();
        for a in model.elements() {
            for b in model.elements() {
                assert_eq!(model.leq(a, b), l.leq(m.map[a], m.map[b]));
            }
        }
    }
}
