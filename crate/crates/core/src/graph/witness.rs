//! Extremal nonhamiltonian witness graphs.

use super::SimpleGraph;
use crate::degseq::check_nw_params;
use crate::error::{Error, Result};

fn add_clique(g: &mut SimpleGraph, vertices: std::ops::Range<usize>) {
    for u in vertices.clone() {
        for v in u + 1..vertices.end {
            g.insert(u, v);
        }
    }
}

/// `C_{n,k} = K_k ∨ (K̄_k ∪ K_{n−2k})`.
///
/// Vertices `0..k` form the joined clique, `k..2k` the independent set, and
/// `2k..n` the remaining clique.
pub fn build_cnk(n: usize, k: usize) -> Result<SimpleGraph> {
    if k < 1 || 2 * k + 1 > n {
        return Err(Error::InvalidParams(format!(
            "need 1 <= k <= (n-1)/2, got n = {n}, k = {k}"
        )));
    }
    let mut g = SimpleGraph::empty(n)?;
    add_clique(&mut g, 0..k);
    add_clique(&mut g, 2 * k..n);
    for u in 0..k {
        for v in k..n {
            g.insert(u, v);
        }
    }
    Ok(g)
}

/// The two nonhamiltonian closures left over for a Nash-Williams `(n, k)`
/// shape: `K_1 ∨ (K_k ∪ K_{n−k−1})` for `j = 1` and `C_{n,k}` for `j = k`.
///
/// For `j = 1`, vertex 0 is the cut vertex, `1..=k` the small clique.
pub fn build_exception_graph(n: usize, k: usize, j: usize) -> Result<SimpleGraph> {
    check_nw_params(n, k)?;
    if j == k {
        return build_cnk(n, k);
    }
    if j != 1 {
        return Err(Error::InvalidParams(format!(
            "j must be 1 or k = {k}, got {j}"
        )));
    }
    let mut g = SimpleGraph::empty(n)?;
    add_clique(&mut g, 1..k + 1);
    add_clique(&mut g, k + 1..n);
    for v in 1..n {
        g.insert(0, v);
    }
    Ok(g)
}
