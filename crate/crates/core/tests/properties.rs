//! Randomised invariants over the lattice census and the reference tables.

use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::{select, Index};

use quantlat::catalogue::TABLES;
use quantlat::enumerate::quantales::{canonical_table, symmetry_group};
use quantlat::enumerate::{enumerate_lattices, Constraint};
use quantlat::iso::automorphisms;
use quantlat::order::{
    approximable, distributivity_report, embed_completely_distributive, extend_lattice, is_strict_triple,
    isolated_info, totally_below, violates_distributivity,
};
use quantlat::{ElemSet, Lattice};

fn census() -> &'static [Lattice] {
    static CENSUS: OnceLock<Vec<Lattice>> = OnceLock::new();
    CENSUS.get_or_init(|| (1..=7).flat_map(|n| enumerate_lattices(n).unwrap()).collect())
}

fn lattice() -> impl Strategy<Value = Lattice> {
    select(census())
}

fn shuffle(n: usize, idx: &[Index]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for (i, ix) in idx.iter().enumerate().take(n) {
        perm.swap(i, i + ix.index(n - i));
    }
    perm
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn join_prime_elements_are_approximable(l in lattice()) {
        for a in l.elements().filter(|&a| a != l.bottom()) {
            if totally_below(&l, a, a) {
                prop_assert!(approximable(&l, a));
            }
        }
    }

    #[test]
    fn report_witnesses_are_consistent(l in lattice()) {
        let r = distributivity_report(&l);
        if r.strict_witness.is_some() {
            prop_assert!(r.nondist_witness.is_some());
            prop_assert!(l.size() >= 7);
        }
        if r.completely_distributive {
            prop_assert!(r.nondist_witness.is_none() && r.strict_witness.is_none());
        }
    }

    #[test]
    fn extension_adds_an_isolated_join_prime_point(l in lattice(), g in any::<Index>()) {
        prop_assume!(l.size() >= 2);
        let gamma = g.index(l.size() - 1);
        prop_assume!(gamma != l.top());
        let x = extend_lattice(&l, gamma);
        let xl = &x.lattice;
        let info = isolated_info(xl, x.isolated).unwrap();
        prop_assert_eq!((info.lower, info.upper), (gamma, x.new_top));
        prop_assert!(totally_below(xl, x.isolated, x.isolated));
        for a in l.elements() {
            for b in l.elements() {
                if violates_distributivity(&l, a, b, gamma) {
                    prop_assert!(is_strict_triple(xl, a, b, x.isolated));
                }
            }
        }
    }

    #[test]
    fn extension_keeps_joins_and_nonempty_meets(l in lattice(), g in any::<Index>(), bits in any::<u64>()) {
        let gamma = g.index(l.size());
        prop_assume!(gamma != l.top());
        let x = extend_lattice(&l, gamma);
        let subset = ElemSet::from_bits(bits).intersection(l.all());
        prop_assert_eq!(x.lattice.join_all(subset), l.join_all(subset));
        if !subset.is_empty() {
            prop_assert_eq!(x.lattice.meet_all(subset), l.meet_all(subset));
        }
    }

    #[test]
    fn embedding_is_injective_and_join_preserving(l in lattice()) {
        let phi = embed_completely_distributive(&l).unwrap();
        prop_assert_eq!(phi[l.bottom()], l.all());
        for a in l.elements() {
            for b in l.elements() {
                prop_assert_eq!(a == b, phi[a] == phi[b]);
                prop_assert_eq!(phi[l.join(a, b)], phi[a].intersection(phi[b]));
            }
        }
    }

    #[test]
    fn canonical_form_ignores_automorphic_relabelling(t in select(TABLES), k in any::<Index>()) {
        let q = t.quantale();
        let l = q.lattice();
        let auts = automorphisms(l);
        let p = &auts[k.index(auts.len())];
        let group = symmetry_group(l, Constraint::None);
        prop_assert_eq!(canonical_table(l, q.flat(), &group).0, canonical_table(l, q.permuted(p).flat(), &group).0);
    }

    #[test]
    fn residuals_are_adjoint(t in select(TABLES), a in 0usize..5, b in 0usize..5) {
        let q = t.quantale();
        let l = q.lattice();
        let (r, s) = q.residuals(a, b);
        for c in l.elements() {
            prop_assert_eq!(l.leq(q.mul(a, c), b), l.leq(c, r));
            prop_assert_eq!(l.leq(q.mul(c, a), b), l.leq(c, s));
        }
    }

    #[test]
    fn relabelled_lattices_keep_their_report(l in lattice(), idx in proptest::collection::vec(any::<Index>(), 7)) {
        let perm = shuffle(l.size(), &idx);
        let m = l.permuted(&perm);
        let (r, s) = (distributivity_report(&l), distributivity_report(&m));
        prop_assert_eq!(r.completely_distributive, s.completely_distributive);
        prop_assert_eq!(r.strict_witness.is_some(), s.strict_witness.is_some());
        prop_assert_eq!(r.nondist_witness.is_some(), s.nondist_witness.is_some());
    }
}
