//! The small lattices that appear throughout: the diamond, the pentagon, the
//! six- and seven-element lattices `L6`, `L7`, and their isolated-element
//! extensions, written out cover by cover.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::lattice::Lattice;

fn build(names: &[&str], covers: &[(&str, &str)]) -> Lattice {
    Lattice::from_covers(names, covers).expect("named lattice is valid")
}

const M3_COVERS: &[(&str, &str)] =
    &[("bot", "alpha"), ("bot", "beta"), ("bot", "gamma"), ("alpha", "top"), ("beta", "top"), ("gamma", "top")];

const N5_COVERS: &[(&str, &str)] =
    &[("bot", "alpha"), ("alpha", "gamma"), ("gamma", "top"), ("bot", "beta"), ("beta", "top")];

const L6_COVERS: &[(&str, &str)] = &[
    ("bot", "alpha"),
    ("bot", "beta"),
    ("bot", "gamma"),
    ("alpha", "alpha_gamma"),
    ("gamma", "alpha_gamma"),
    ("alpha_gamma", "top"),
    ("beta", "top"),
];

const L7_COVERS: &[(&str, &str)] = &[
    ("bot", "alpha"),
    ("bot", "beta"),
    ("bot", "gamma"),
    ("alpha", "alpha_gamma"),
    ("gamma", "alpha_gamma"),
    ("beta", "beta_gamma"),
    ("gamma", "beta_gamma"),
    ("alpha_gamma", "top"),
    ("beta_gamma", "top"),
];

const EXT_COVERS: &[(&str, &str)] = &[("gamma", "e"), ("top", "topbar"), ("e", "topbar")];

const M3_NAMES: &[&str] = &["bot", "alpha", "beta", "gamma", "top"];
const N5_NAMES: &[&str] = &["bot", "alpha", "beta", "gamma", "top"];
const L6_NAMES: &[&str] = &["bot", "alpha", "beta", "gamma", "alpha_gamma", "top"];
const L7_NAMES: &[&str] = &["bot", "alpha", "beta", "gamma", "alpha_gamma", "beta_gamma", "top"];

fn extended(names: &[&str], covers: &[(&str, &str)]) -> Lattice {
    let mut all_names = names.to_vec();
    all_names.extend(["e", "topbar"]);
    let mut all_covers = covers.to_vec();
    all_covers.extend_from_slice(EXT_COVERS);
    build(&all_names, &all_covers)
}

/// Diamond with three atoms `α, β, γ`.
pub fn m3() -> Lattice {
    build(M3_NAMES, M3_COVERS)
}

/// Pentagon `⊥ < α < γ < ⊤`, `⊥ < β < ⊤`.
pub fn n5() -> Lattice {
    build(N5_NAMES, N5_COVERS)
}

pub fn l6() -> Lattice {
    build(L6_NAMES, L6_COVERS)
}

pub fn l7() -> Lattice {
    build(L7_NAMES, L7_COVERS)
}

pub fn ext_m3() -> Lattice {
    extended(M3_NAMES, M3_COVERS)
}

pub fn ext_n5() -> Lattice {
    extended(N5_NAMES, N5_COVERS)
}

pub fn ext_l6() -> Lattice {
    extended(L6_NAMES, L6_COVERS)
}

pub fn ext_l7() -> Lattice {
    extended(L7_NAMES, L7_COVERS)
}

/// The Boolean lattice of subsets of a `k`-element set.
pub fn boolean(k: usize) -> Lattice {
    let n = 1usize << k;
    let order = (0..n).map(|i| (0..n).map(|j| i & !j == 0).collect()).collect();
    let names = (0..n)
        .map(|i| {
            let members: Vec<String> = (0..k).filter(|b| i >> b & 1 == 1).map(|b| b.to_string()).collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    Lattice::new(order, names).expect("powerset order is a lattice")
}

/// The eight named shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pattern {
    M3,
    N5,
    L6,
    L7,
    #[serde(rename = "extM3")]
    ExtM3,
    #[serde(rename = "extN5")]
    ExtN5,
    #[serde(rename = "extL6")]
    ExtL6,
    #[serde(rename = "extL7")]
    ExtL7,
}

impl Pattern {
    pub const ALL: [Pattern; 8] = [
        Pattern::M3,
        Pattern::N5,
        Pattern::L6,
        Pattern::L7,
        Pattern::ExtM3,
        Pattern::ExtN5,
        Pattern::ExtL6,
        Pattern::ExtL7,
    ];

    /// The shapes every strictly nondistributive lattice must contain one of.
    pub const FORBIDDEN: [Pattern; 4] = [Pattern::ExtM3, Pattern::ExtN5, Pattern::ExtL6, Pattern::ExtL7];

    pub fn model(self) -> Lattice {
        match self {
            Pattern::M3 => m3(),
            Pattern::N5 => n5(),
            Pattern::L6 => l6(),
            Pattern::L7 => l7(),
            Pattern::ExtM3 => ext_m3(),
            Pattern::ExtN5 => ext_n5(),
            Pattern::ExtL6 => ext_l6(),
            Pattern::ExtL7 => ext_l7(),
        }
    }

    /// The base shape and the element `γ` it is extended at.
    pub fn base(self) -> Option<(Pattern, &'static str)> {
        match self {
            Pattern::ExtM3 => Some((Pattern::M3, "gamma")),
            Pattern::ExtN5 => Some((Pattern::N5, "gamma")),
            Pattern::ExtL6 => Some((Pattern::L6, "gamma")),
            Pattern::ExtL7 => Some((Pattern::L7, "gamma")),
            _ => None,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Pattern::M3 => "M3",
            Pattern::N5 => "N5",
            Pattern::L6 => "L6",
            Pattern::L7 => "L7",
            Pattern::ExtM3 => "extM3",
            Pattern::ExtN5 => "extN5",
            Pattern::ExtL6 => "extL6",
            Pattern::ExtL7 => "extL7",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Pattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Pattern::ALL
            .into_iter()
            .find(|p| p.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown lattice shape {s:?}"))
    }
}
