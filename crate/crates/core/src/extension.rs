//! Extending a quantale by an isolated unit, and detecting unitally
//! nondistributive quantales.

use serde::Serialize;

use crate::order::{approximable, extend_lattice, isolated_info, violates_distributivity};
use crate::quantale::{Condition, Quantale, QuantaleError};
use crate::set::ElemSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExtensionConditions {
    /// `(γ∗α) ∨ (α∗γ) ≤ α` for all `α`.
    pub prop_a: bool,
    /// `⊤∗α ≤ (β∗α) ∨ α` and `α∗⊤ ≤ (α∗β) ∨ α` for all `α` and `β ≰ γ`.
    pub prop_aa: bool,
    /// `γ∧(α∨β) ≰ (γ∧α)∨(γ∧β)` for some pair.
    pub prop_b: bool,
}

/// First `α` with `(γ∗α) ∨ (α∗γ) ≰ α`.
pub fn prop_a_witness(q: &Quantale, gamma: usize) -> Option<usize> {
    let l = q.lattice();
    l.elements().find(|&a| !l.leq(l.join(q.mul(gamma, a), q.mul(a, gamma)), a))
}

/// First `(α, β)` with `β ≰ γ` breaking one of the two inequalities.
pub fn prop_aa_witness(q: &Quantale, gamma: usize) -> Option<(usize, usize)> {
    let l = q.lattice();
    let t = l.top();
    for a in l.elements() {
        for b in l.elements().filter(|&b| !l.leq(b, gamma)) {
            let left = l.leq(q.mul(t, a), l.join(q.mul(b, a), a));
            let right = l.leq(q.mul(a, t), l.join(q.mul(a, b), a));
            if !(left && right) {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn prop_b_witness(q: &Quantale, gamma: usize) -> Option<(usize, usize)> {
    let l = q.lattice();
    l.elements().flat_map(|a| l.elements().map(move |b| (a, b))).find(|&(a, b)| violates_distributivity(l, a, b, gamma))
}

fn check_gamma(q: &Quantale, gamma: usize) -> Result<(), QuantaleError> {
    if gamma >= q.size() {
        return Err(QuantaleError::BadElement(gamma));
    }
    if gamma == q.lattice().top() {
        return Err(QuantaleError::GammaIsTop);
    }
    Ok(())
}

pub fn check_extension_conditions(q: &Quantale, gamma: usize) -> Result<ExtensionConditions, QuantaleError> {
    check_gamma(q, gamma)?;
    Ok(ExtensionConditions {
        prop_a: prop_a_witness(q, gamma).is_none(),
        prop_aa: prop_aa_witness(q, gamma).is_none(),
        prop_b: prop_b_witness(q, gamma).is_some(),
    })
}

/// The quantale on `L̄^γ` with unit `e` containing `q` as a subquantale.
///
/// Indices follow [`extend_lattice`]: `e` is `n`, `⊤̄` is `n + 1`.
pub fn extend_quantale(q: &Quantale, gamma: usize) -> Result<Quantale, QuantaleError> {
    check_gamma(q, gamma)?;
    if let Some(alpha) = prop_a_witness(q, gamma) {
        return Err(QuantaleError::ConditionsFail { condition: Condition::PropA, alpha, beta: None });
    }
    if let Some((alpha, beta)) = prop_aa_witness(q, gamma) {
        return Err(QuantaleError::ConditionsFail { condition: Condition::PropAA, alpha, beta: Some(beta) });
    }
    let base = q.lattice();
    let ext = extend_lattice(base, gamma);
    let (e, tb) = (ext.isolated, ext.new_top);
    let m = ext.lattice.size();
    let t = base.top();
    let mut mul = vec![0; m * m];
    for x in 0..m {
        for y in 0..m {
            mul[x * m + y] = if x == e {
                y
            } else if y == e {
                x
            } else if x == tb && y == tb {
                tb
            } else if x == tb {
                base.join(q.mul(t, y), y)
            } else if y == tb {
                base.join(q.mul(x, t), x)
            } else {
                q.mul(x, y)
            };
        }
    }
    let label = q.label().map(|s| format!("ext({s})"));
    Quantale::from_flat(ext.lattice, mul, label)
}

/// Certificate that a quantale is unitally nondistributive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct UndWitness {
    /// `e∧(⋁A) ≰ ⋁{e∧α : α ∈ A}`
    pub subset_a: ElemSet,
    /// `e∧(α∨β) ≰ (e∧α)∨(e∧β)` and `e ≰ α∨β`
    pub pair: (usize, usize),
}

/// Does `A` break meet-distributivity of the unit over its join?
pub fn subset_violates(q: &Quantale, e: usize, subset: ElemSet) -> bool {
    let l = q.lattice();
    let lhs = l.meet(e, l.join_all(subset));
    let rhs = l.join_all(subset.iter().map(|a| l.meet(e, a)).collect());
    !l.leq(lhs, rhs)
}

/// Chain reduction: with `A = {α_1 < … < α_n}` (index order) and
/// `β_i = α_i ∨ … ∨ α_n`, returns `(α_i, β_{i+1})` for the first `i` with
/// `e∧β_i ≰ (e∧α_i)∨(e∧β_{i+1})`.
pub fn und_witness_from_subset(q: &Quantale, e: usize, subset: ElemSet) -> Option<(usize, usize)> {
    let l = q.lattice();
    let alphas: Vec<usize> = subset.iter().collect();
    let n = alphas.len();
    let mut betas = vec![l.bottom(); n + 1];
    for i in (0..n).rev() {
        betas[i] = l.join(alphas[i], betas[i + 1]);
    }
    (0..n.saturating_sub(1)).find_map(|i| {
        let rhs = l.join(l.meet(e, alphas[i]), l.meet(e, betas[i + 1]));
        (!l.leq(l.meet(e, betas[i]), rhs)).then_some((alphas[i], betas[i + 1]))
    })
}

/// Present iff `q` is unital, its unit is ◁-approximable, and the unit fails
/// to distribute over some join. Only pairs are searched; on a finite lattice
/// any violating subset reduces to a violating pair.
pub fn unitally_nondistributive(q: &Quantale) -> Option<UndWitness> {
    let e = q.unit()?;
    let l = q.lattice();
    if !approximable(l, e) {
        return None;
    }
    for a in l.elements() {
        for b in a + 1..l.size() {
            let subset = ElemSet::singleton(a).with(b);
            if subset_violates(q, e, subset) {
                let pair = und_witness_from_subset(q, e, subset).expect("a violating pair reduces to itself");
                return Some(UndWitness { subset_a: subset, pair });
            }
        }
    }
    None
}

/// For a quantale on `L̄^γ` with isolated unit `e`, the base carrier
/// `L̄^γ ∖ {e, ⊤̄}` as a subquantale, together with `γ = e⁻` and the
/// original indices of the base elements.
pub fn restrict_to_base(q: &Quantale) -> Result<(Quantale, usize, Vec<usize>), QuantaleError> {
    let l = q.lattice();
    let e = q.unit().ok_or_else(|| QuantaleError::NotClosed("no unit".into()))?;
    let info = isolated_info(l, e).ok_or_else(|| QuantaleError::NotClosed("unit is not isolated".into()))?;
    let carrier = l.all().without(e).without(l.top());
    let (sub, members) = q.restrict(carrier)?;
    let gamma = members.iter().position(|&x| x == info.lower).expect("e⁻ lies in the base");
    Ok((sub, gamma, members))
}
