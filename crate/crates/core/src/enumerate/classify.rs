//! Seven-element classification and the census of strictly nondistributive
//! lattices.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::extension::{extend_quantale, restrict_to_base, unitally_nondistributive};
use crate::iso::{automorphisms, lattice_isomorphic};
use crate::lattice::Lattice;
use crate::named::Pattern;
use crate::order::{approximable, distributivity_report, isolated_info};
use crate::quantale::Quantale;

use super::lattices::enumerate_lattices;
use super::quantales::{enumerate_quantales, CatalogueEntry, Constraint, EnumOptions};
use super::EnumError;

/// The named shape a lattice is isomorphic to, if any.
pub fn identify(l: &Lattice) -> Option<Pattern> {
    Pattern::ALL.into_iter().find(|p| p.model().size() == l.size() && lattice_isomorphic(&p.model(), l).is_some())
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeClassification {
    pub lattice: Lattice,
    pub pattern: Option<Pattern>,
    /// unit candidates tried, one per automorphism orbit
    pub units: Vec<usize>,
    pub entries: Vec<CatalogueEntry>,
    pub non_commutative: usize,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassifyReport {
    pub lattices: Vec<LatticeClassification>,
    pub total: usize,
    pub non_commutative: usize,
    /// every entry equals the extension of its restriction to the base
    pub round_trip: bool,
}

/// Isolated, ◁-approximable elements, one per orbit of the automorphism group.
pub fn unit_candidates(l: &Lattice) -> Vec<usize> {
    let auts = automorphisms(l);
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for u in l.elements() {
        if seen.contains(&u) || isolated_info(l, u).is_none() || !approximable(l, u) {
            continue;
        }
        seen.extend(auts.iter().map(|p| p[u]));
        reps.push(u);
    }
    reps
}

/// Restricts to `L ∖ {e, ⊤̄}` and extends again at `e⁻`; true when the
/// result is `q` itself, matched element by element.
pub fn round_trips(q: &Quantale) -> bool {
    let Ok((base, gamma, members)) = restrict_to_base(q) else {
        return false;
    };
    let Ok(ext) = extend_quantale(&base, gamma) else {
        return false;
    };
    let e = q.unit().expect("restriction succeeded, so q is unital");
    let mut map = members.clone();
    map.push(e);
    map.push(q.lattice().top());
    let (l, xl) = (q.lattice(), ext.lattice());
    xl.elements().all(|a| {
        xl.elements().all(|b| l.leq(map[a], map[b]) == xl.leq(a, b) && q.mul(map[a], map[b]) == map[ext.mul(a, b)])
    })
}

/// Unitally nondistributive quantales on each lattice of `lattices` with an
/// isolated ◁-approximable unit.
pub fn classify_lattices(lattices: &[Lattice], opts: EnumOptions) -> ClassifyReport {
    let mut out = Vec::new();
    for l in lattices {
        let units = unit_candidates(l);
        let mut entries = Vec::new();
        for &u in &units {
            let found = enumerate_quantales(l, Constraint::UnitalAt(u), opts);
            entries.extend(found.into_iter().filter(|e| unitally_nondistributive(&e.quantale).is_some()));
        }
        entries.sort_by(|a, b| a.canonical.cmp(&b.canonical));
        let non_commutative = entries.iter().filter(|e| !e.profile.commutative).count();
        out.push(LatticeClassification { lattice: l.clone(), pattern: identify(l), units, entries, non_commutative });
    }
    let total = out.iter().map(|c| c.entries.len()).sum();
    let non_commutative = out.iter().map(|c| c.non_commutative).sum();
    let round_trip = out.iter().flat_map(|c| &c.entries).all(|e| round_trips(&e.quantale));
    ClassifyReport { lattices: out, total, non_commutative, round_trip }
}

/// Classification over all strictly nondistributive 7-element lattices.
pub fn classify_seven(opts: EnumOptions) -> ClassifyReport {
    let strict: Vec<Lattice> = enumerate_lattices(7)
        .expect("7 is in range")
        .into_iter()
        .filter(|l| distributivity_report(l).is_strictly_nondistributive())
        .collect();
    classify_lattices(&strict, opts)
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusRow {
    pub n: usize,
    pub lattices: usize,
    pub nondistributive: usize,
    pub strict: usize,
    pub representatives: Vec<(Lattice, Option<Pattern>)>,
}

pub fn census_strict(max_n: usize) -> Result<Vec<CensusRow>, EnumError> {
    (1..=max_n)
        .map(|n| {
            let all = enumerate_lattices(n)?;
            let reports: Vec<_> = all.iter().map(distributivity_report).collect();
            let representatives: Vec<(Lattice, Option<Pattern>)> = all
                .iter()
                .zip(&reports)
                .filter(|(_, r)| r.is_strictly_nondistributive())
                .map(|(l, _)| (l.clone(), identify(l)))
                .collect();
            Ok(CensusRow {
                n,
                lattices: all.len(),
                nondistributive: reports.iter().filter(|r| r.nondist_witness.is_some()).count(),
                strict: representatives.len(),
                representatives,
            })
        })
        .collect()
}
