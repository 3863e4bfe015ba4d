//! The totally-below relation, distributivity witnesses, isolated elements and
//! the one-point-plus-new-top extension `L̄^γ`.

use serde::Serialize;
use thiserror::Error;

use crate::lattice::Lattice;
use crate::set::ElemSet;

/// `b ◁ a`: every subset whose join lies above `a` contains an element above `b`.
///
/// `{c : b ≰ c}` is the largest subset with no element above `b`, so it is
/// enough to test whether its join covers `a`.
pub fn totally_below(l: &Lattice, b: usize, a: usize) -> bool {
    let avoid = l.all().difference(l.up_set(b));
    !l.leq(a, l.join_all(avoid))
}

/// `{b : b ◁ a}`
pub fn totally_below_set(l: &Lattice, a: usize) -> ElemSet {
    l.elements().filter(|&b| totally_below(l, b, a)).collect()
}

/// `a ≤ ⋁{b : b ◁ a}`
pub fn approximable(l: &Lattice, a: usize) -> bool {
    l.leq(a, l.join_all(totally_below_set(l, a)))
}

/// Every element other than the bottom is approximable.
pub fn completely_distributive(l: &Lattice) -> bool {
    l.elements().filter(|&a| a != l.bottom()).all(|a| approximable(l, a))
}

/// `x ∧ (α ∨ β) ≰ (x ∧ α) ∨ (x ∧ β)`
pub fn violates_distributivity(l: &Lattice, alpha: usize, beta: usize, x: usize) -> bool {
    let lhs = l.meet(x, l.join(alpha, beta));
    let rhs = l.join(l.meet(x, alpha), l.meet(x, beta));
    !l.leq(lhs, rhs)
}

/// Nondistributivity together with `x ≰ α ∨ β`.
pub fn is_strict_triple(l: &Lattice, alpha: usize, beta: usize, x: usize) -> bool {
    !l.leq(x, l.join(alpha, beta)) && violates_distributivity(l, alpha, beta, x)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistributivityReport {
    pub approximable: Vec<bool>,
    pub completely_distributive: bool,
    /// First `(α, β, γ)` in lexicographic order with `γ∧(α∨β) ≰ (γ∧α)∨(γ∧β)`.
    pub nondist_witness: Option<(usize, usize, usize)>,
    /// First `(α, β, x)` that is nondistributive and has `x ≰ α∨β`.
    pub strict_witness: Option<(usize, usize, usize)>,
}

impl DistributivityReport {
    pub fn is_strictly_nondistributive(&self) -> bool {
        self.strict_witness.is_some()
    }
}

fn first_triple(l: &Lattice, pred: impl Fn(usize, usize, usize) -> bool) -> Option<(usize, usize, usize)> {
    for a in l.elements() {
        for b in l.elements() {
            for x in l.elements() {
                if pred(a, b, x) {
                    return Some((a, b, x));
                }
            }
        }
    }
    None
}

pub fn distributivity_report(l: &Lattice) -> DistributivityReport {
    let approximable: Vec<bool> = l.elements().map(|a| approximable(l, a)).collect();
    let completely_distributive = l.elements().filter(|&a| a != l.bottom()).all(|a| approximable[a]);
    DistributivityReport {
        approximable,
        completely_distributive,
        nondist_witness: first_triple(l, |a, b, x| violates_distributivity(l, a, b, x)),
        strict_witness: first_triple(l, |a, b, x| is_strict_triple(l, a, b, x)),
    }
}

/// An isolated element with its unique lower and upper neighbours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IsolationInfo {
    pub element: usize,
    pub lower: usize,
    pub upper: usize,
}

/// `x ∉ {⊥, ⊤}` with `(↓x)∖{x} = ↓x⁻` and `(↑x)∖{x} = ↑x⁺`.
pub fn isolated_info(l: &Lattice, x: usize) -> Option<IsolationInfo> {
    if x == l.bottom() || x == l.top() {
        return None;
    }
    // the strict down-set is a down-set, so it is principal iff it holds its own join
    let below = l.down_set(x).without(x);
    let above = l.up_set(x).without(x);
    let lower = l.join_all(below);
    let upper = l.meet_all(above);
    (below.contains(lower) && above.contains(upper)).then_some(IsolationInfo { element: x, lower, upper })
}

/// Result of [`extend_lattice`]: the new lattice and the indices of the added
/// isolated element and the new top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub lattice: Lattice,
    pub isolated: usize,
    pub new_top: usize,
}

/// Builds `L̄^γ = L ∪ {e, ⊤̄}`.
///
/// The original elements keep their indices; `e` gets index `n` and `⊤̄`
/// index `n + 1`. Below `e` sit exactly the elements of `↓γ`, everything else
/// of `L` is incomparable with `e`, and `⊤̄` is the new top.
pub fn extend_lattice(l: &Lattice, gamma: usize) -> Extension {
    extend_lattice_named(l, gamma, "e", "topbar")
}

pub fn extend_lattice_named(l: &Lattice, gamma: usize, isolated: &str, new_top: &str) -> Extension {
    let n = l.size();
    let (e, t) = (n, n + 1);
    let mut order = vec![vec![false; n + 2]; n + 2];
    for a in l.elements() {
        for b in l.elements() {
            order[a][b] = l.leq(a, b);
        }
        order[a][e] = l.leq(a, gamma);
        order[a][t] = true;
    }
    order[e][e] = true;
    order[e][t] = true;
    order[t][t] = true;
    let mut names: Vec<String> = l.names().to_vec();
    names.push(fresh_name(l, isolated));
    names.push(fresh_name(l, new_top));
    let lattice = Lattice::new(order, names).expect("the isolated-element extension of a lattice is a lattice");
    Extension { lattice, isolated: e, new_top: t }
}

fn fresh_name(l: &Lattice, base: &str) -> String {
    let mut name = base.to_string();
    while l.index_of(&name).is_some() {
        name.push('\'');
    }
    name
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("powerset embedding refused for {0} elements (limit 12)")]
    TooLarge(usize),
}

pub const EMBED_LIMIT: usize = 12;

/// `φ(α) = ⋃{A ⊆ L : α ≤ ⋀A}` into the dual powerset `P(L)^op`.
///
/// A subset `A` satisfies `α ≤ ⋀A` exactly when `A ⊆ ↑α`, so the union is `↑α`.
pub fn embed_completely_distributive(l: &Lattice) -> Result<Vec<ElemSet>, EmbedError> {
    if l.size() > EMBED_LIMIT {
        return Err(EmbedError::TooLarge(l.size()));
    }
    Ok(l.elements().map(|a| l.up_set(a)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn subsets(n: usize) -> impl Iterator<Item = ElemSet> {
        (0u64..1 << n).map(ElemSet::from_bits)
    }

    fn totally_below_brute(l: &Lattice, b: usize, a: usize) -> bool {
        subsets(l.size()).filter(|&s| l.leq(a, l.join_all(s))).all(|s| s.iter().any(|g| l.leq(b, g)))
    }

    #[test]
    fn closed_form_matches_subset_oracle_on_named_lattices() {
        for l in [named::m3(), named::n5(), named::l6(), named::l7(), named::ext_m3(), named::ext_l7()] {
            for a in l.elements() {
                for b in l.elements() {
                    assert_eq!(totally_below(&l, b, a), totally_below_brute(&l, b, a), "{l:?} {b} {a}");
                }
            }
        }
    }

    #[test]
    fn bottom_is_never_totally_below_itself() {
        let l = named::m3();
        assert!(!totally_below(&l, l.bottom(), l.bottom()));
    }

    #[test]
    fn diamond_atom_not_totally_below_top() {
        let l = named::m3();
        let (g, t) = (l.index_of("gamma").unwrap(), l.top());
        assert!(!totally_below(&l, g, t));
    }

    #[test]
    fn added_element_is_completely_join_prime() {
        for base in [named::m3(), named::n5(), named::l6(), named::l7(), Lattice::chain(3).unwrap()] {
            for g in base.elements() {
                let ext = extend_lattice(&base, g);
                assert!(totally_below(&ext.lattice, ext.isolated, ext.isolated));
            }
        }
    }

    #[test]
    fn diamond_report() {
        let l = named::m3();
        let r = distributivity_report(&l);
        let idx = |s| l.index_of(s).unwrap();
        assert_eq!(r.nondist_witness, Some((idx("alpha"), idx("beta"), idx("gamma"))));
        assert_eq!(r.strict_witness, None);
        assert!(!r.completely_distributive);
    }

    #[test]
    fn chain_report() {
        let r = distributivity_report(&Lattice::chain(3).unwrap());
        assert!(r.completely_distributive);
        assert_eq!(r.nondist_witness, None);
        assert_eq!(r.strict_witness, None);
    }

    #[test]
    fn extended_diamond_report() {
        let l = named::ext_m3();
        let r = distributivity_report(&l);
        let idx = |s| l.index_of(s).unwrap();
        assert_eq!(r.strict_witness, Some((idx("alpha"), idx("beta"), idx("e"))));
        let (a, b, e) = r.strict_witness.unwrap();
        assert_eq!(l.meet(e, l.join(a, b)), idx("gamma"));
    }

    #[test]
    fn isolation_examples() {
        let l = named::ext_m3();
        let e = l.index_of("e").unwrap();
        let info = isolated_info(&l, e).unwrap();
        assert_eq!((info.lower, info.upper), (l.index_of("gamma").unwrap(), l.index_of("topbar").unwrap()));
        assert_eq!(isolated_info(&l, l.top()), None);
        assert_eq!(isolated_info(&l, l.bottom()), None);

        let n5 = named::n5();
        let g = n5.index_of("gamma").unwrap();
        let info = isolated_info(&n5, g).unwrap();
        assert_eq!((info.lower, info.upper), (n5.index_of("alpha").unwrap(), n5.top()));
        // atoms of M3 are isolated (x⁻ = ⊥, x⁺ = ⊤)
        let m3 = named::m3();
        let a = m3.index_of("alpha").unwrap();
        assert_eq!(isolated_info(&m3, a).map(|i| (i.lower, i.upper)), Some((m3.bottom(), m3.top())));
        // old top inside M̄3: strict down-set {⊥,α,β,γ} is not principal
        assert_eq!(isolated_info(&l, l.index_of("top").unwrap()), None);
    }

    #[test]
    fn extension_of_two_chain_at_top_is_a_chain() {
        let c = Lattice::chain(2).unwrap();
        let ext = extend_lattice(&c, 1);
        let l = &ext.lattice;
        assert!(l.leq(0, 1) && l.leq(1, ext.isolated) && l.leq(ext.isolated, ext.new_top));
        assert_eq!(l.covers().len(), 3);
    }

    #[test]
    fn pentagon_extension_top_incomparable_with_new_element() {
        let n5 = named::n5();
        let g = n5.index_of("gamma").unwrap();
        let ext = extend_lattice(&n5, g);
        assert!(!ext.lattice.comparable(n5.top(), ext.isolated));
    }

    #[test]
    fn embedding_examples() {
        let l = named::m3();
        let phi = embed_completely_distributive(&l).unwrap();
        assert_eq!(phi[l.bottom()], l.all());
        assert_eq!(phi[l.top()], ElemSet::singleton(l.top()));
        // the defining union, taken over every subset
        for a in l.elements() {
            let union = subsets(l.size()).filter(|&s| l.leq(a, l.meet_all(s))).fold(ElemSet::EMPTY, ElemSet::union);
            assert_eq!(phi[a], union);
        }
        for a in l.elements() {
            for b in l.elements() {
                if a != b {
                    assert_ne!(phi[a], phi[b]);
                }
                assert_eq!(phi[l.join(a, b)], phi[a].intersection(phi[b]));
            }
        }
        assert_eq!(embed_completely_distributive(&Lattice::chain(13).unwrap()), Err(EmbedError::TooLarge(13)));
    }
}
