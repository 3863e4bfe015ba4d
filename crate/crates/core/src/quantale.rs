//! Multiplication tables on finite lattices: validation, residuals, the
//! structural profile and isomorphism.

use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;
use thiserror::Error;

use crate::iso::for_each_isomorphism;
use crate::lattice::{Lattice, LatticeError};
use crate::set::ElemSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Which hypothesis of the extension construction failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Condition {
    /// `(γ∗α) ∨ (α∗γ) ≤ α`
    PropA,
    /// `⊤∗α ≤ (β∗α) ∨ α` and `α∗⊤ ≤ (α∗β) ∨ α` for `β ≰ γ`
    PropAA,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NucleusLaw {
    Range(usize),
    Monotone(usize, usize),
    Inflationary(usize),
    Idempotent(usize),
    /// `c(x)∗c(y) ≰ c(x∗y)`
    LaxProduct(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuantaleError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("table shape mismatch: {0}")]
    Shape(String),
    #[error("entry ({row}, {col}) = {value} is not an element")]
    BadEntry { row: usize, col: usize, value: usize },
    #[error("bottom does not annihilate on the {side}: element {element}")]
    BottomNotAnnihilating { side: Side, element: usize },
    #[error("not join-preserving in the {side} variable: x={x}, y={y}, z={z}")]
    NotJoinPreserving { side: Side, x: usize, y: usize, z: usize },
    #[error("not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("gamma must differ from the top element")]
    GammaIsTop,
    #[error("extension condition {condition:?} fails at alpha={alpha}{}", .beta.map(|b| format!(", beta={b}")).unwrap_or_default())]
    ConditionsFail { condition: Condition, alpha: usize, beta: Option<usize> },
    #[error("not a nucleus: {0:?}")]
    NotANucleus(NucleusLaw),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("subset is not closed: {0}")]
    NotClosed(String),
    #[error("element index {0} out of range")]
    BadElement(usize),
}

/// A finite quantale: a lattice plus an associative multiplication that
/// preserves joins in each variable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quantale {
    lattice: Lattice,
    mul: Vec<usize>,
    label: Option<String>,
}

impl fmt::Debug for Quantale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Quantale {:?} on {:?}", self.label, self.lattice)?;
        let l = &self.lattice;
        for a in l.elements() {
            let row: Vec<&str> = l.elements().map(|b| l.name(self.mul(a, b))).collect();
            writeln!(f, "  {:>8} | {}", l.name(a), row.join(" "))?;
        }
        Ok(())
    }
}

/// Checks the quantale axioms on a row-major table.
///
/// On a finite lattice, preserving binary joins and annihilating with the
/// bottom already gives preservation of arbitrary joins.
pub fn check_table(l: &Lattice, mul: &[usize]) -> Result<(), QuantaleError> {
    let n = l.size();
    if mul.len() != n * n {
        return Err(QuantaleError::Shape(format!("{} entries for {n} elements", mul.len())));
    }
    if let Some(k) = mul.iter().position(|&v| v >= n) {
        return Err(QuantaleError::BadEntry { row: k / n, col: k % n, value: mul[k] });
    }
    let m = |a: usize, b: usize| mul[a * n + b];
    let bot = l.bottom();
    for z in l.elements() {
        if m(bot, z) != bot {
            return Err(QuantaleError::BottomNotAnnihilating { side: Side::Left, element: z });
        }
    }
    for z in l.elements() {
        if m(z, bot) != bot {
            return Err(QuantaleError::BottomNotAnnihilating { side: Side::Right, element: z });
        }
    }
    for x in l.elements() {
        for y in x + 1..n {
            let xy = l.join(x, y);
            for z in l.elements() {
                if m(xy, z) != l.join(m(x, z), m(y, z)) {
                    return Err(QuantaleError::NotJoinPreserving { side: Side::Left, x, y, z });
                }
            }
        }
    }
    for x in l.elements() {
        for y in x + 1..n {
            let xy = l.join(x, y);
            for z in l.elements() {
                if m(z, xy) != l.join(m(z, x), m(z, y)) {
                    return Err(QuantaleError::NotJoinPreserving { side: Side::Right, x, y, z });
                }
            }
        }
    }
    for a in l.elements() {
        for b in l.elements() {
            let ab = m(a, b);
            for c in l.elements() {
                if m(ab, c) != m(a, m(b, c)) {
                    return Err(QuantaleError::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(())
}

impl Quantale {
    /// Validates `table[i][j] = i ∗ j`.
    pub fn new(lattice: Lattice, table: Vec<Vec<usize>>, label: Option<String>) -> Result<Quantale, QuantaleError> {
        let n = lattice.size();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(QuantaleError::Shape(format!("table is not {n}x{n}")));
        }
        Self::from_flat(lattice, table.concat(), label)
    }

    pub fn from_flat(lattice: Lattice, mul: Vec<usize>, label: Option<String>) -> Result<Quantale, QuantaleError> {
        check_table(&lattice, &mul)?;
        Ok(Quantale { lattice, mul, label })
    }

    /// Caller guarantees `mul` already passed [`check_table`] on `lattice`.
    pub(crate) fn from_checked(lattice: Lattice, mul: Vec<usize>, label: Option<String>) -> Quantale {
        debug_assert!(check_table(&lattice, &mul).is_ok());
        Quantale { lattice, mul, label }
    }

    /// Builds a table from element names; `rows[i][j]` names `i ∗ j`.
    pub fn from_names(lattice: Lattice, rows: &[Vec<&str>], label: Option<String>) -> Result<Quantale, QuantaleError> {
        let table = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| {
                        lattice.index_of(s).ok_or_else(|| QuantaleError::Shape(format!("unknown element name {s:?}")))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Quantale::new(lattice, table, label)
    }

    /// `⊤∗⊤ = ⊥`: every product is the bottom.
    pub fn trivial(lattice: Lattice) -> Quantale {
        let n = lattice.size();
        let mul = vec![lattice.bottom(); n * n];
        Quantale { lattice, mul, label: Some("trivial".into()) }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size() + b]
    }

    pub fn flat(&self) -> &[usize] {
        &self.mul
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.size()).map(|r| r.to_vec()).collect()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: Option<String>) -> Quantale {
        self.label = label;
        self
    }

    /// `a ∗ b` computed in the opposite quantale.
    pub fn opposite(&self) -> Quantale {
        let n = self.size();
        let mul = (0..n * n).map(|k| self.mul(k % n, k / n)).collect();
        Quantale { lattice: self.lattice.clone(), mul, label: self.label.as_ref().map(|l| format!("{l}^op")) }
    }

    /// Relabels elements: element `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Quantale {
        let n = self.size();
        let lattice = self.lattice.permuted(perm);
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        Quantale { lattice, mul, label: self.label.clone() }
    }

    /// The subquantale carried by `subset`, which must contain the bottom and
    /// be closed under joins and multiplication.
    pub fn restrict(&self, subset: ElemSet) -> Result<(Quantale, Vec<usize>), QuantaleError> {
        let l = &self.lattice;
        if !subset.contains(l.bottom()) {
            return Err(QuantaleError::NotClosed("bottom missing".into()));
        }
        for a in subset.iter() {
            for b in subset.iter() {
                if !subset.contains(l.join(a, b)) {
                    return Err(QuantaleError::NotClosed(format!("join of {a} and {b}")));
                }
                if !subset.contains(self.mul(a, b)) {
                    return Err(QuantaleError::NotClosed(format!("product of {a} and {b}")));
                }
            }
        }
        let members: Vec<usize> = subset.iter().collect();
        let mut pos = vec![usize::MAX; l.size()];
        for (k, &a) in members.iter().enumerate() {
            pos[a] = k;
        }
        let lattice = l.induced(subset)?;
        let mul = members
            .iter()
            .flat_map(|&a| members.iter().map(move |&b| (a, b)))
            .map(|(a, b)| pos[self.mul(a, b)])
            .collect();
        Ok((Quantale::from_flat(lattice, mul, self.label.clone())?, members))
    }

    /// `(a↘b, b↙a)`: the largest `c` with `a∗c ≤ b`, and the largest `c` with `c∗a ≤ b`.
    pub fn residuals(&self, a: usize, b: usize) -> (usize, usize) {
        let l = &self.lattice;
        let right: ElemSet = l.elements().filter(|&c| l.leq(self.mul(a, c), b)).collect();
        let left: ElemSet = l.elements().filter(|&c| l.leq(self.mul(c, a), b)).collect();
        (l.join_all(right), l.join_all(left))
    }

    /// `a↘b`
    pub fn right_implication(&self, a: usize, b: usize) -> usize {
        self.residuals(a, b).0
    }

    /// `b↙a`
    pub fn left_implication(&self, b: usize, a: usize) -> usize {
        self.residuals(a, b).1
    }

    pub fn unit(&self) -> Option<usize> {
        self.lattice.elements().find(|&e| self.lattice.elements().all(|a| self.mul(e, a) == a && self.mul(a, e) == a))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `α ≤ ⊤∗α` and `α ≤ α∗⊤` for all `α`.
    pub fn is_semi_unital(&self) -> bool {
        let (l, t) = (&self.lattice, self.lattice.top());
        l.elements().all(|a| l.leq(a, self.mul(t, a)) && l.leq(a, self.mul(a, t)))
    }

    /// `⊤∗α ≤ α` and `α∗⊤ ≤ α`.
    pub fn is_two_sided_element(&self, a: usize) -> bool {
        let (l, t) = (&self.lattice, self.lattice.top());
        l.leq(self.mul(t, a), a) && l.leq(self.mul(a, t), a)
    }

    /// `δ↙(α↘δ) = α = (δ↙α)↘δ` for all `α`.
    pub fn is_dualizing(&self, d: usize) -> bool {
        self.lattice.elements().all(|a| {
            self.left_implication(d, self.right_implication(a, d)) == a
                && self.right_implication(self.left_implication(d, a), d) == a
        })
    }

    /// Multiplication distributes over binary (hence all nonempty) meets in each variable.
    pub fn is_meet_distributive(&self) -> bool {
        let l = &self.lattice;
        l.elements().all(|a| {
            l.elements().all(|b| {
                l.elements().all(|c| {
                    let bc = l.meet(b, c);
                    self.mul(a, bc) == l.meet(self.mul(a, b), self.mul(a, c))
                        && self.mul(bc, a) == l.meet(self.mul(b, a), self.mul(c, a))
                })
            })
        })
    }

    pub fn profile(&self) -> QuantaleProfile {
        quantale_profile(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QuantaleProfile {
    pub unit: Option<usize>,
    pub semi_unital: bool,
    pub two_sided_elements: ElemSet,
    pub two_sided: bool,
    pub integral: bool,
    pub commutative: bool,
    pub dualizing: ElemSet,
    pub meet_distributive_mul: bool,
}

pub fn quantale_profile(q: &Quantale) -> QuantaleProfile {
    let l = q.lattice();
    let unit = q.unit();
    let two_sided_elements: ElemSet = l.elements().filter(|&a| q.is_two_sided_element(a)).collect();
    QuantaleProfile {
        unit,
        semi_unital: q.is_semi_unital(),
        two_sided: two_sided_elements == l.all(),
        two_sided_elements,
        integral: unit == Some(l.top()),
        commutative: q.is_commutative(),
        dualizing: l.elements().filter(|&d| q.is_dualizing(d)).collect(),
        meet_distributive_mul: q.is_meet_distributive(),
    }
}

/// Is `map` (as element images) a lattice isomorphism that also preserves the
/// multiplication?
pub fn is_homomorphic_bijection(q1: &Quantale, q2: &Quantale, map: &[usize]) -> bool {
    let n = q1.size();
    (0..n).all(|a| (0..n).all(|b| map[q1.mul(a, b)] == q2.mul(map[a], map[b])))
}

/// First order isomorphism of the lattices that is also multiplicative.
pub fn quantale_isomorphic(q1: &Quantale, q2: &Quantale) -> Option<Vec<usize>> {
    quantale_isomorphic_fixing(q1, q2, None)
}

/// Like [`quantale_isomorphic`], restricted to maps sending `fixed` to itself.
pub fn quantale_isomorphic_fixing(q1: &Quantale, q2: &Quantale, fixed: Option<usize>) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_isomorphism(q1.lattice(), q2.lattice(), |m| {
        if fixed.is_none_or(|x| m[x] == x) && is_homomorphic_bijection(q1, q2, m) {
            found = Some(m.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

impl Serialize for Quantale {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let l = self.lattice();
        let mut st = s.serialize_struct("Quantale", 3)?;
        st.serialize_field("names", l.names())?;
        st.serialize_field("mul", &self.table())?;
        st.serialize_field("label", &self.label())?;
        st.end()
    }
}
