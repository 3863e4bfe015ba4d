//! Finite bounded lattices given by their order matrix.

use std::collections::HashSet;

use thiserror::Error;

use crate::set::{ElemSet, MAX_ELEMENTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("{size} elements exceeds the supported maximum of {max}")]
    TooLarge { size: usize, max: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("order is not reflexive at element {0}")]
    NotReflexive(usize),
    #[error("order is not antisymmetric: {0} <= {1} and {1} <= {0}")]
    NotAntisymmetric(usize, usize),
    #[error("order is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("elements {0} and {1} have no least upper bound")]
    NoJoin(usize, usize),
    #[error("elements {0} and {1} have no greatest lower bound")]
    NoMeet(usize, usize),
    #[error("order has no bottom or no top element")]
    NoBounds,
}

/// A finite bounded lattice.
///
/// Elements are the indices `0..size()`. Indices carry no meaning: the bounds
/// are located by scanning the order. Binary joins and meets are tabulated at
/// construction, so every query is a table lookup.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    names: Vec<String>,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let covers: Vec<String> =
            self.covers().into_iter().map(|(a, b)| format!("{}<{}", self.names[a], self.names[b])).collect();
        f.debug_struct("Lattice").field("names", &self.names).field("covers", &covers).finish()
    }
}

impl serde::Serialize for Lattice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Lattice", 2)?;
        st.serialize_field("names", &self.names)?;
        st.serialize_field("leq", &self.order_matrix())?;
        st.end()
    }
}

impl Lattice {
    /// Validates an order matrix (`order[i][j]` iff `i <= j`) as a bounded lattice.
    pub fn new(order: Vec<Vec<bool>>, names: Vec<String>) -> Result<Lattice, LatticeError> {
        let n = order.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(LatticeError::TooLarge { size: n, max: MAX_ELEMENTS });
        }
        if names.len() != n {
            return Err(LatticeError::Shape(format!("{} names for {} rows", names.len(), n)));
        }
        if let Some((i, row)) = order.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(LatticeError::Shape(format!("row {i} has {} entries, expected {n}", row.len())));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(LatticeError::DuplicateName(name.clone()));
            }
        }
        let up: Vec<ElemSet> = order.iter().map(|row| (0..n).filter(|&j| row[j]).collect()).collect();
        Self::from_up_sets(up, names)
    }

    /// Builds a lattice from up-sets (`up[i]` = elements above `i`).
    pub(crate) fn from_up_sets(up: Vec<ElemSet>, names: Vec<String>) -> Result<Lattice, LatticeError> {
        let n = up.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(LatticeError::TooLarge { size: n, max: MAX_ELEMENTS });
        }
        for (i, u) in up.iter().enumerate() {
            if !u.contains(i) {
                return Err(LatticeError::NotReflexive(i));
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(LatticeError::NotAntisymmetric(i.min(j), i.max(j)));
                }
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if let Some(k) = up[j].difference(up[i]).first() {
                    return Err(LatticeError::NotTransitive(i, j, k));
                }
            }
        }
        let mut down = vec![ElemSet::EMPTY; n];
        for (i, u) in up.iter().enumerate() {
            for j in u.iter() {
                down[j].insert(i);
            }
        }
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let uppers = up[a].intersection(up[b]);
                let j = uppers.iter().find(|&c| uppers.is_subset(up[c])).ok_or(LatticeError::NoJoin(a, b))?;
                let lowers = down[a].intersection(down[b]);
                let m = lowers.iter().find(|&c| lowers.is_subset(down[c])).ok_or(LatticeError::NoMeet(a, b))?;
                join[a * n + b] = j;
                join[b * n + a] = j;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
            }
        }
        let full = ElemSet::full(n);
        let bottom = (0..n).find(|&i| up[i] == full).ok_or(LatticeError::NoBounds)?;
        let top = (0..n).find(|&i| down[i] == full).ok_or(LatticeError::NoBounds)?;
        Ok(Lattice { names, up, down, join, meet, bottom, top })
    }

    /// Builds a lattice from named elements and covering pairs `(lower, upper)`;
    /// the order is the reflexive-transitive closure of the pairs.
    pub fn from_covers(names: &[&str], covers: &[(&str, &str)]) -> Result<Lattice, LatticeError> {
        let n = names.len();
        let idx = |s: &str| {
            names
                .iter()
                .position(|&x| x == s)
                .ok_or_else(|| LatticeError::Shape(format!("unknown element {s:?} in cover list")))
        };
        let mut order = vec![vec![false; n]; n];
        for (i, row) in order.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in covers {
            order[idx(a)?][idx(b)?] = true;
        }
        for k in 0..n {
            let through = order[k].clone();
            for row in order.iter_mut().filter(|row| row[k]) {
                for (cell, &t) in row.iter_mut().zip(&through) {
                    *cell |= t;
                }
            }
        }
        Lattice::new(order, names.iter().map(|s| s.to_string()).collect())
    }

    /// The `n`-element chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Result<Lattice, LatticeError> {
        let order = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
        Lattice::new(order, (0..n).map(|i| format!("c{i}")).collect())
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.size())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b]
    }

    /// `↑a`
    pub fn up_set(&self, a: usize) -> ElemSet {
        self.up[a]
    }

    /// `↓a`
    pub fn down_set(&self, a: usize) -> ElemSet {
        self.down[a]
    }

    /// Join of a set; the empty join is the bottom.
    pub fn join_all(&self, set: ElemSet) -> usize {
        set.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a set; the empty meet is the top.
    pub fn meet_all(&self, set: ElemSet) -> usize {
        set.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// `(⋁A, ⋀A)`.
    pub fn bounds(&self, set: ElemSet) -> (usize, usize) {
        (self.join_all(set), self.meet_all(set))
    }

    pub fn order_matrix(&self) -> Vec<Vec<bool>> {
        self.elements().map(|i| self.elements().map(|j| self.leq(i, j)).collect()).collect()
    }

    /// Covering pairs `(a, b)` with `a ⋖ b`, in lexicographic order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in self.elements() {
            let strict_up = self.up[a].without(a);
            for b in strict_up.iter() {
                let between = strict_up.intersection(self.down[b]).without(b);
                if between.is_empty() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// `x ≠ ⊥` and `x` is not the join of the elements strictly below it.
    pub fn is_join_irreducible(&self, x: usize) -> bool {
        x != self.bottom && self.join_all(self.down[x].without(x)) != x
    }

    pub fn join_irreducibles(&self) -> ElemSet {
        self.elements().filter(|&x| self.is_join_irreducible(x)).collect()
    }

    pub fn is_atom(&self, x: usize) -> bool {
        x != self.bottom && self.down[x] == ElemSet::singleton(x).with(self.bottom)
    }

    pub fn is_coatom(&self, x: usize) -> bool {
        x != self.top && self.up[x] == ElemSet::singleton(x).with(self.top)
    }

    pub fn atoms(&self) -> ElemSet {
        self.elements().filter(|&x| self.is_atom(x)).collect()
    }

    /// The sub-poset on `subset` with the induced order, renumbered in index
    /// order. Fails unless the induced order is itself a lattice.
    pub fn induced(&self, subset: ElemSet) -> Result<Lattice, LatticeError> {
        let members: Vec<usize> = subset.iter().collect();
        let up = members
            .iter()
            .map(|&a| members.iter().enumerate().filter(|&(_, &b)| self.leq(a, b)).map(|(k, _)| k).collect())
            .collect();
        let names = members.iter().map(|&a| self.names[a].clone()).collect();
        Lattice::from_up_sets(up, names)
    }

    /// Returns a copy with different display names.
    pub fn renamed(&self, names: Vec<String>) -> Result<Lattice, LatticeError> {
        if names.len() != self.size() {
            return Err(LatticeError::Shape(format!("{} names for {} elements", names.len(), self.size())));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(LatticeError::DuplicateName(name.clone()));
            }
        }
        Ok(Lattice { names, ..self.clone() })
    }

    /// Relabels elements: element `i` of `self` becomes element `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Lattice {
        let n = self.size();
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let up = (0..n).map(|p| self.up[inv[p]].iter().map(|j| perm[j]).collect()).collect();
        let names = (0..n).map(|p| self.names[inv[p]].clone()).collect();
        Lattice::from_up_sets(up, names).expect("relabeling preserves the lattice axioms")
    }

    /// Row-major bitstring of the order matrix, used in canonical codes.
    pub fn order_code(&self) -> String {
        let mut s = String::with_capacity(self.size() * self.size());
        for i in self.elements() {
            for j in self.elements() {
                s.push(if self.leq(i, j) { '1' } else { '0' });
            }
        }
        s
    }
}
