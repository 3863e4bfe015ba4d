mod common;

use std::collections::BTreeSet;

use common::*;
use quantlat::enumerate::quantales::{canonical_table, symmetry_group};
use quantlat::enumerate::{enumerate_lattices, enumerate_quantales, enumerate_tables, Constraint, EnumOptions};
use quantlat::extension::{subset_violates, und_witness_from_subset, unitally_nondistributive};
use quantlat::named;
use quantlat::order::{embed_completely_distributive, totally_below};
use quantlat::ElemSet;

#[test]
fn lattice_counts_match_relation_filter() {
    for n in 1..=6 {
        let fast = enumerate_lattices(n).unwrap();
        let slow = lattices_by_relation_filter(n);
        assert_eq!(fast.len(), slow.len(), "n = {n}");
        assert_eq!(canonical_codes(&fast), canonical_codes(&slow), "n = {n}");
    }
}

#[test]
fn five_element_lattices_have_two_nondistributive() {
    let slow = lattices_by_relation_filter(5);
    let nondist = slow.iter().filter(|l| quantlat::order::distributivity_report(l).nondist_witness.is_some()).count();
    assert_eq!(nondist, 2);
}

#[test]
fn totally_below_matches_subset_oracle_up_to_eight() {
    for n in 1..=8 {
        for l in enumerate_lattices(n).unwrap() {
            for a in l.elements() {
                for b in l.elements() {
                    assert_eq!(totally_below(&l, b, a), totally_below_brute(&l, b, a), "{l:?} b={b} a={a}");
                }
            }
        }
    }
}

#[test]
fn embedding_matches_subset_union() {
    for n in 1..=7 {
        for l in enumerate_lattices(n).unwrap() {
            let phi = embed_completely_distributive(&l).unwrap();
            for a in l.elements() {
                assert_eq!(phi[a], embed_brute(&l, a));
            }
        }
    }
}

fn pruned_equals_naive(l: &quantlat::Lattice) {
    let naive = naive_tables(l);
    let raw = enumerate_tables(l, Constraint::None);
    let distinct: BTreeSet<&Vec<usize>> = raw.iter().collect();
    assert_eq!(naive.iter().collect::<BTreeSet<_>>(), distinct);
    assert_eq!(distinct.len(), raw.len(), "no duplicates in the pruned search");
    let group = symmetry_group(l, Constraint::None);
    let emitted: BTreeSet<String> =
        enumerate_quantales(l, Constraint::None, EnumOptions::default()).into_iter().map(|e| e.canonical).collect();
    assert_eq!(canonical_set(l, &naive, &group), emitted);
}

#[test]
fn pruned_search_matches_naive_filter_on_diamond() {
    pruned_equals_naive(&named::m3());
}

#[test]
fn pruned_search_matches_naive_filter_on_pentagon() {
    pruned_equals_naive(&named::n5());
}

#[test]
fn every_discarded_table_maps_to_an_emitted_one() {
    for l in [named::m3(), named::n5()] {
        let g = l.index_of("gamma").unwrap();
        for c in [Constraint::PropA(g), Constraint::None] {
            let group = symmetry_group(&l, c);
            let emitted: BTreeSet<String> =
                enumerate_quantales(&l, c, EnumOptions::default()).into_iter().map(|e| e.canonical).collect();
            for t in enumerate_tables(&l, c) {
                let (code, _) = canonical_table(&l, &t, &group);
                assert!(emitted.contains(&code));
            }
        }
    }
}

#[test]
fn pair_witness_agrees_with_subset_oracle_on_seven_element_lattices() {
    for l in enumerate_lattices(7).unwrap() {
        for e in enumerate_quantales(&l, Constraint::Unital, EnumOptions::default()) {
            let q = &e.quantale;
            let brute = und_subset_brute(q);
            let pair = unitally_nondistributive(q);
            assert_eq!(brute.is_some(), pair.is_some(), "{q:?}");
            if let Some(a) = brute {
                let u = q.unit().unwrap();
                let (x, y) = und_witness_from_subset(q, u, a).expect("reduction succeeds");
                assert!(subset_violates(q, u, ElemSet::singleton(x).with(y)));
                if totally_below(&l, u, u) {
                    assert!(!l.leq(u, l.join(x, y)));
                }
            }
        }
    }
}
