//! Nuclei and quotient quantales, plus the lift of a diamond quantale to `L7`
//! whose extension collapses back onto the extended diamond.

use crate::named;
use crate::quantale::{NucleusLaw, Quantale, QuantaleError};
use crate::set::ElemSet;

/// A closure operator `c` with `c(x)∗c(y) ≤ c(x∗y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nucleus {
    map: Vec<usize>,
}

impl Nucleus {
    pub fn new(q: &Quantale, map: Vec<usize>) -> Result<Nucleus, QuantaleError> {
        let l = q.lattice();
        let n = l.size();
        if map.len() != n {
            return Err(QuantaleError::Shape(format!("nucleus has {} entries for {n} elements", map.len())));
        }
        if let Some(x) = map.iter().position(|&v| v >= n) {
            return Err(QuantaleError::NotANucleus(NucleusLaw::Range(x)));
        }
        for x in 0..n {
            for y in 0..n {
                if l.leq(x, y) && !l.leq(map[x], map[y]) {
                    return Err(QuantaleError::NotANucleus(NucleusLaw::Monotone(x, y)));
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| !l.leq(x, map[x])) {
            return Err(QuantaleError::NotANucleus(NucleusLaw::Inflationary(x)));
        }
        if let Some(x) = (0..n).find(|&x| map[map[x]] != map[x]) {
            return Err(QuantaleError::NotANucleus(NucleusLaw::Idempotent(x)));
        }
        for x in 0..n {
            for y in 0..n {
                if !l.leq(q.mul(map[x], map[y]), map[q.mul(x, y)]) {
                    return Err(QuantaleError::NotANucleus(NucleusLaw::LaxProduct(x, y)));
                }
            }
        }
        Ok(Nucleus { map })
    }

    pub fn identity(q: &Quantale) -> Nucleus {
        Nucleus { map: q.lattice().elements().collect() }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn fixed_points(&self) -> ElemSet {
        (0..self.map.len()).filter(|&x| self.map[x] == x).collect()
    }
}

/// The quotient on the fixed points of `c`, with `x ∗_c y = c(x∗y)`.
///
/// Fixed points are renumbered in increasing index order; the second
/// component lists their original indices.
pub fn quotient_by_nucleus(q: &Quantale, c: &Nucleus) -> Result<(Quantale, Vec<usize>), QuantaleError> {
    let fixed = c.fixed_points();
    let members: Vec<usize> = fixed.iter().collect();
    let mut pos = vec![usize::MAX; q.size()];
    for (k, &x) in members.iter().enumerate() {
        pos[x] = k;
    }
    let lattice = q.lattice().induced(fixed)?;
    let mul = members
        .iter()
        .flat_map(|&a| members.iter().map(move |&b| (a, b)))
        .map(|(a, b)| pos[c.apply(q.mul(a, b))])
        .collect();
    let label = q.label().map(|s| format!("{s}/c"));
    Ok((Quantale::from_flat(lattice, mul, label)?, members))
}

/// Lifts a quantale on `M3` with `⊤∗γ = ⊥ = γ∗⊤` to `L7` by letting `α∨γ`
/// act as `α` and `β∨γ` act as `β`.
///
/// The result is validated; the lift is not assumed to be a quantale.
pub fn lift_diamond_to_l7(q: &Quantale) -> Result<Quantale, QuantaleError> {
    let m3 = named::m3();
    if q.lattice() != &m3 {
        return Err(QuantaleError::Shape("expected the diamond in its standard labelling".into()));
    }
    let l7 = named::l7();
    let idx = |l: &crate::lattice::Lattice, s: &str| l.index_of(s).expect("named element");
    // element of L7 -> element of M3 it acts as
    let proj: Vec<usize> = l7
        .elements()
        .map(|x| match l7.name(x) {
            "alpha_gamma" => idx(&m3, "alpha"),
            "beta_gamma" => idx(&m3, "beta"),
            other => idx(&m3, other),
        })
        .collect();
    let embed: Vec<usize> = m3.elements().map(|x| idx(&l7, m3.name(x))).collect();
    let n = l7.size();
    let mul = (0..n * n).map(|k| embed[q.mul(proj[k / n], proj[k % n])]).collect();
    let label = q.label().map(|s| format!("{s}^L7"));
    Quantale::from_flat(l7, mul, label)
}

/// On `L̄7` (named elements), `c(α∨γ) = ⊤ = c(β∨γ)` and the identity elsewhere.
pub fn l7_collapse_map(ext_l7: &crate::lattice::Lattice) -> Vec<usize> {
    let top = ext_l7.index_of("top").expect("L7 top");
    ext_l7
        .elements()
        .map(|x| match ext_l7.name(x) {
            "alpha_gamma" | "beta_gamma" => top,
            _ => x,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;
    use crate::extension::extend_quantale;
    use crate::quantale::quantale_isomorphic;

    #[test]
    fn identity_quotient_is_same_quantale() {
        let q = catalogue::by_label("5.3.229").unwrap().quantale();
        let (r, members) = quotient_by_nucleus(&q, &Nucleus::identity(&q)).unwrap();
        assert_eq!(members, vec![0, 1, 2, 3, 4]);
        assert_eq!(r.flat(), q.flat());
    }

    #[test]
    fn non_idempotent_map_rejected() {
        // on the 3-chain, 0 -> 1 -> 2 is monotone and inflationary but not idempotent
        let l = crate::lattice::Lattice::chain(3).unwrap();
        let q = Quantale::trivial(l);
        assert_eq!(Nucleus::new(&q, vec![1, 2, 2]), Err(QuantaleError::NotANucleus(NucleusLaw::Idempotent(0))));
        assert_eq!(Nucleus::new(&q, vec![0, 0, 2]), Err(QuantaleError::NotANucleus(NucleusLaw::Inflationary(1))));
    }

    #[test]
    fn lax_product_law_checked() {
        // on the 5.2.42 table, c(β)∗c(β) = ⊤ but c(β∗β) = c(α) = α
        let q = catalogue::by_label("5.2.42").unwrap().quantale();
        let c = vec![0, 1, 4, 4, 4];
        assert!(matches!(Nucleus::new(&q, c), Err(QuantaleError::NotANucleus(_))));
    }

    #[test]
    fn collapse_recovers_extended_diamond() {
        for label in ["5.2.1", "5.2.2", "5.2.3", "5.2.4"] {
            let q = catalogue::by_label(label).unwrap().quantale();
            let lifted = lift_diamond_to_l7(&q).unwrap();
            let ext = extend_quantale(&lifted, 3).unwrap();
            let c = Nucleus::new(&ext, l7_collapse_map(ext.lattice())).unwrap();
            let (quot, _) = quotient_by_nucleus(&ext, &c).unwrap();
            let target = extend_quantale(&q, 3).unwrap();
            assert!(quantale_isomorphic(&quot, &target).is_some(), "{label}");
        }
    }
}
