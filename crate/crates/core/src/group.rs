//! Group quantales `G∞ = G ∪ {⊥, ⊤}` with the elements of `G` pairwise
//! incomparable.

use crate::lattice::Lattice;
use crate::quantale::{Quantale, QuantaleError};

/// `table[i][j] = i·j` for `i, j < k`.
pub fn cyclic_group(k: usize) -> Vec<Vec<usize>> {
    (0..k).map(|i| (0..k).map(|j| (i + j) % k).collect()).collect()
}

/// `Z2 × Z2` encoded as bit pairs.
pub fn klein_four() -> Vec<Vec<usize>> {
    (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect()
}

fn not_a_group(reason: String) -> QuantaleError {
    QuantaleError::NotAGroup(reason)
}

/// Validates the Cayley table and returns its identity element.
pub fn check_group(cayley: &[Vec<usize>]) -> Result<usize, QuantaleError> {
    let k = cayley.len();
    if k == 0 {
        return Err(not_a_group("empty table".into()));
    }
    if cayley.iter().any(|r| r.len() != k) {
        return Err(not_a_group(format!("table is not {k}x{k}")));
    }
    if let Some((i, j)) = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).find(|&(i, j)| cayley[i][j] >= k) {
        return Err(not_a_group(format!("entry ({i}, {j}) is out of range")));
    }
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                    return Err(not_a_group(format!("not associative at ({a}, {b}, {c})")));
                }
            }
        }
    }
    let unit = (0..k)
        .find(|&u| (0..k).all(|a| cayley[u][a] == a && cayley[a][u] == a))
        .ok_or_else(|| not_a_group("no identity".into()))?;
    if let Some(a) = (0..k).find(|&a| !(0..k).any(|b| cayley[a][b] == unit && cayley[b][a] == unit)) {
        return Err(not_a_group(format!("element {a} has no inverse")));
    }
    Ok(unit)
}

/// `G∞`: index 0 is `⊥`, `1..=k` are the group elements `g0..g{k-1}`, and
/// `k + 1` is `⊤`. Products with `⊥` are `⊥`, other products with `⊤` are `⊤`.
pub fn group_quantale(cayley: &[Vec<usize>]) -> Result<Quantale, QuantaleError> {
    check_group(cayley)?;
    let k = cayley.len();
    let n = k + 2;
    let (bot, top) = (0, k + 1);
    let order = (0..n).map(|i| (0..n).map(|j| i == j || i == bot || j == top).collect()).collect();
    let names = std::iter::once("bot".to_string())
        .chain((0..k).map(|g| format!("g{g}")))
        .chain(std::iter::once("top".to_string()))
        .collect();
    let lattice = Lattice::new(order, names)?;
    let mut mul = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            mul[x * n + y] = if x == bot || y == bot {
                bot
            } else if x == top || y == top {
                top
            } else {
                cayley[x - 1][y - 1] + 1
            };
        }
    }
    Quantale::from_flat(lattice, mul, Some(format!("G{k}")))
}
