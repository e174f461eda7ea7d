//! Brute-force oracles shared by the integration tests. None of these reuse
//! the library's search code.

#![allow(dead_code)]

use forcible::{DegreeSequence, SimpleGraph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Every nondecreasing sequence of length `n` over `[0, n − 1]`.
pub fn all_sequences(n: usize) -> Vec<DegreeSequence> {
    fn rec(n: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<DegreeSequence>) {
        if cur.len() == n {
            out.push(DegreeSequence::from_degrees(cur.clone()).unwrap());
            return;
        }
        for d in from..n {
            cur.push(d);
            rec(n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, &mut Vec::new(), &mut out);
    out
}

pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Every labeled graph on `n ≤ 7` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    (0..1u64 << pair_count(n)).map(move |m| SimpleGraph::from_pair_mask(n, m).unwrap())
}

pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, edges).unwrap()
}

/// All edge subsets whose degree vector equals `targets` exactly.
pub fn brute_realizations(targets: &[usize]) -> Vec<SimpleGraph> {
    let n = targets.len();
    all_graphs(n).filter(|g| g.degrees() == targets).collect()
}

/// Held–Karp over subsets containing vertex 0.
pub fn hamiltonian_dp(g: &SimpleGraph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let full = (1usize << n) - 1;
    // ends[mask] = vertices v such that a path from 0 covers mask and ends at v
    let mut ends = vec![0u64; 1 << n];
    ends[1] = 1;
    for mask in 1..=full {
        if mask & 1 == 0 || ends[mask] == 0 {
            continue;
        }
        for v in 0..n {
            if ends[mask] >> v & 1 == 0 {
                continue;
            }
            for w in 0..n {
                if mask >> w & 1 == 0 && g.has_edge(v, w) {
                    ends[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    (1..n).any(|v| ends[full] >> v & 1 == 1 && g.has_edge(v, 0))
}

/// Longest cycle by subset DP rooted at each cycle's minimum vertex.
pub fn circumference_dp(g: &SimpleGraph) -> usize {
    let n = g.n();
    let mut best = 0;
    for s in 0..n {
        let mut ends = vec![0u64; 1 << n];
        ends[1 << s] = 1 << s;
        for mask in 0..1usize << n {
            if ends[mask] == 0 {
                continue;
            }
            let len = mask.count_ones() as usize;
            for v in 0..n {
                if ends[mask] >> v & 1 == 0 {
                    continue;
                }
                if len >= 3 && g.has_edge(v, s) {
                    best = best.max(len);
                }
                for w in s + 1..n {
                    if mask >> w & 1 == 0 && g.has_edge(v, w) {
                        ends[mask | 1 << w] |= 1 << w;
                    }
                }
            }
        }
    }
    best
}

/// Closure joining a uniformly random eligible pair at each step.
pub fn closure_random_order<R: Rng>(g: &SimpleGraph, rng: &mut R) -> SimpleGraph {
    let n = g.n();
    let mut g = g.clone();
    loop {
        let eligible: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v) && g.degree(u) + g.degree(v) >= n)
            .collect();
        match eligible.choose(rng) {
            Some(&(u, v)) => {
                g.add_edge(u, v).unwrap();
            }
            None => return g,
        }
    }
}

/// Brute-force isomorphism test for small graphs.
pub fn isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    fn permute(perm: &mut Vec<usize>, k: usize, a: &SimpleGraph, b: &SimpleGraph) -> bool {
        if k == perm.len() {
            return a.edges().iter().all(|&(u, v)| b.has_edge(perm[u], perm[v]));
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            if a.degree(k) == b.degree(perm[k]) && permute(perm, k + 1, a, b) {
                return true;
            }
            perm.swap(k, i);
        }
        false
    }
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && permute(&mut (0..a.n()).collect(), 0, a, b)
}
