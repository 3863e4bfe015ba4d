//! Reference multiplication tables on the diamond and the pentagon, all
//! satisfying `(γ∗α) ∨ (α∗γ) ≤ α`.
//!
//! Rows and columns run over `α, β, γ, ⊤`; the `⊥` row and column are
//! omitted. Symbols: `0` = ⊥, `a` = α, `b` = β, `g` = γ, `T` = ⊤. Labels are
//! opaque identifiers from an external catalogue of small quantales.

use serde::Serialize;

use crate::named::{m3, n5};
use crate::quantale::Quantale;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// diamond, `γ∗γ = γ`
    DiamondUnital,
    /// diamond, `γ∗γ = ⊥`
    DiamondNonUnital,
    PentagonUnital,
    PentagonSemiUnital,
    /// pentagon, not semi-unital, `γ∗γ = α`
    PentagonGammaSquareAlpha,
    /// pentagon, not semi-unital, `γ∗γ = ⊥`
    PentagonGammaSquareBottom,
}

impl Family {
    pub fn on_diamond(self) -> bool {
        matches!(self, Family::DiamondUnital | Family::DiamondNonUnital)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoldenTable {
    pub label: &'static str,
    pub family: Family,
    pub rows: [&'static str; 4],
}

impl GoldenTable {
    /// The validated quantale; panics if the transcription is not a quantale.
    pub fn quantale(&self) -> Quantale {
        self.try_quantale().unwrap_or_else(|e| panic!("table {}: {e}", self.label))
    }

    pub fn try_quantale(&self) -> Result<Quantale, crate::quantale::QuantaleError> {
        let lattice = if self.family.on_diamond() { m3() } else { n5() };
        // named lattices list bot, alpha, beta, gamma, top in that order
        let mut table = vec![vec![0; 5]; 5];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, sym) in row.split_whitespace().enumerate() {
                table[i + 1][j + 1] = match sym {
                    "0" => 0,
                    "a" => 1,
                    "b" => 2,
                    "g" => 3,
                    "T" => 4,
                    other => panic!("bad symbol {other:?} in table {}", self.label),
                };
            }
        }
        Quantale::new(lattice, table, Some(self.label.to_string()))
    }
}

const fn t(label: &'static str, family: Family, rows: [&'static str; 4]) -> GoldenTable {
    GoldenTable { label, family, rows }
}

use Family::*;

/// Every table in print order. `5.2.22` is printed twice among the unital
/// diamond tables, so that family has seven distinct entries here.
pub const TABLES: &[GoldenTable] = &[
    t("5.2.11", DiamondUnital, ["0 a a a", "a g b T", "a b g T", "a T T T"]),
    t("5.2.12", DiamondUnital, ["0 a a a", "a T b T", "a b g T", "a T T T"]),
    // printed with β∗⊤ = ⊤∗β = ⊤; join-preservation forces β∗⊤ = (β∗α)∨(β∗β) = β
    t("5.2.19", DiamondUnital, ["a 0 a a", "0 b b b", "a b g T", "a b T T"]),
    t("5.2.22", DiamondUnital, ["a a a a", "a g b T", "a b g T", "a T T T"]),
    t("5.2.23", DiamondUnital, ["a a a a", "a T b T", "a b g T", "a T T T"]),
    t("5.2.42", DiamondUnital, ["b g a T", "g a b T", "a b g T", "T T T T"]),
    t("5.2.43", DiamondUnital, ["b T a T", "T T b T", "a b g T", "T T T T"]),
    t("5.2.22", DiamondUnital, ["a a a a", "a g b T", "a b g T", "a T T T"]),
    t("5.2.1", DiamondNonUnital, ["0 0 0 0", "0 0 0 0", "0 0 0 0", "0 0 0 0"]),
    t("5.2.3", DiamondNonUnital, ["a a 0 a", "a a 0 a", "0 0 0 0", "a a 0 a"]),
    t("5.2.2", DiamondNonUnital, ["g g 0 g", "g g 0 g", "0 0 0 0", "g g 0 g"]),
    t("5.2.4", DiamondNonUnital, ["T T 0 T", "T T 0 T", "0 0 0 0", "T T 0 T"]),
    t("5.3.17", PentagonUnital, ["a b a T", "b 0 b b", "a b g T", "T b T T"]),
    t("5.3.35", PentagonUnital, ["a 0 a a", "0 b b b", "a b g T", "a b T T"]),
    t("5.3.42", PentagonUnital, ["a b a T", "b b b b", "a b g T", "T b T T"]),
    t("5.3.184", PentagonUnital, ["a b a T", "b a b T", "a b g T", "T T T T"]),
    t("5.3.229", PentagonUnital, ["a b a T", "b T b T", "a b g T", "T T T T"]),
    t("5.3.16", PentagonSemiUnital, ["a b a T", "b 0 b b", "a b a T", "T b T T"]),
    t("5.3.183", PentagonSemiUnital, ["a b a T", "b a b T", "a b a T", "T T T T"]),
    t("5.3.41", PentagonSemiUnital, ["a b a T", "b b b b", "a b a T", "T b T T"]),
    t("5.3.228", PentagonSemiUnital, ["a b a T", "b T b T", "a b a T", "T T T T"]),
    t("5.3.3", PentagonGammaSquareAlpha, ["a 0 a a", "0 0 0 0", "a 0 a a", "a 0 a a"]),
    t("5.3.29", PentagonGammaSquareAlpha, ["a 0 a a", "0 b 0 b", "a 0 a a", "a b a T"]),
    t("5.3.11", PentagonGammaSquareAlpha, ["a b a T", "0 0 0 0", "a b a T", "a b a T"]),
    t("5.3.6", PentagonGammaSquareAlpha, ["a 0 a a", "b 0 b b", "a 0 a a", "T 0 T T"]),
    t("5.3.1", PentagonGammaSquareBottom, ["0 0 0 0", "0 0 0 0", "0 0 0 0", "0 0 0 0"]),
    t("5.3.178", PentagonGammaSquareBottom, ["0 0 0 0", "0 a 0 a", "0 0 0 0", "0 a 0 a"]),
    t("5.3.28", PentagonGammaSquareBottom, ["0 0 0 0", "0 b 0 b", "0 0 0 0", "0 b 0 b"]),
    t("5.3.189", PentagonGammaSquareBottom, ["0 0 0 0", "0 g 0 g", "0 0 0 0", "0 g 0 g"]),
    t("5.3.207", PentagonGammaSquareBottom, ["0 0 0 0", "0 T 0 T", "0 0 0 0", "0 T 0 T"]),
];

pub fn by_label(label: &str) -> Option<&'static GoldenTable> {
    TABLES.iter().find(|g| g.label == label)
}

pub fn family(f: Family) -> impl Iterator<Item = &'static GoldenTable> {
    TABLES.iter().filter(move |g| g.family == f)
}
