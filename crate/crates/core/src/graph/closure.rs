use super::{bits, full_mask, SimpleGraph};

/// Bondy–Chvátal closure: repeatedly joins a nonadjacent pair whose degree
/// sum is at least `n`.
///
/// Joins the lexicographically first eligible pair, then rescans.
pub fn closure(g: &SimpleGraph) -> SimpleGraph {
    let n = g.n();
    let mut cl = g.clone();
    let mut deg = cl.degrees();
    'rescan: loop {
        for u in 0..n {
            let later = !cl.neighbors(u) & full_mask(n) & !full_mask(u + 1);
            for v in bits(later) {
                if deg[u] + deg[v] >= n {
                    cl.insert(u, v);
                    deg[u] += 1;
                    deg[v] += 1;
                    continue 'rescan;
                }
            }
        }
        return cl;
    }
}
