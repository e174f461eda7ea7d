//! Exact cycle searches: hamiltonicity and circumference.

use super::connectivity::is_connected;
use super::{bit, bits, full_mask, SimpleGraph};

/// Whether `g` has a spanning cycle. Graphs on fewer than 3 vertices never do.
///
/// Backtracks over paths rooted at vertex 0. A partial path is abandoned
/// when some unvisited vertex has fewer than two usable neighbors, when the
/// unvisited vertices are not all reachable from the path's head, or when
/// vertex 0 has no unvisited neighbor left to close the cycle through.
pub fn is_hamiltonian(g: &SimpleGraph) -> bool {
    let n = g.n();
    if n < 3 || g.min_degree() < 2 || !is_connected(g) {
        return false;
    }
    if g.is_complete() {
        return true;
    }
    let search = PathSearch {
        g,
        full: full_mask(n),
    };
    search.extend(0, bit(0))
}

struct PathSearch<'a> {
    g: &'a SimpleGraph,
    full: u64,
}

impl PathSearch<'_> {
    fn extend(&self, head: usize, visited: u64) -> bool {
        let g = self.g;
        if visited == self.full {
            return g.neighbors(head) & bit(0) != 0;
        }
        let unvisited = self.full & !visited;
        if head != 0 && g.neighbors(0) & unvisited == 0 {
            return false;
        }
        let usable = unvisited | bit(head) | bit(0);
        for u in bits(unvisited) {
            if (g.neighbors(u) & usable).count_ones() < 2 {
                return false;
            }
        }
        if !self.unvisited_reachable(head, unvisited) {
            return false;
        }
        for next in bits(g.neighbors(head) & unvisited) {
            if self.extend(next, visited | bit(next)) {
                return true;
            }
        }
        false
    }

    fn unvisited_reachable(&self, head: usize, unvisited: u64) -> bool {
        let mut seen = self.g.neighbors(head) & unvisited;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.g.neighbors(v);
            }
            next &= unvisited & !seen;
            seen |= next;
            frontier = next;
        }
        seen == unvisited
    }
}

/// Length of a longest cycle; 0 for acyclic graphs.
///
/// Each cycle is found from its lowest-labeled vertex `s`, extending paths
/// through vertices above `s` only.
pub fn circumference(g: &SimpleGraph) -> usize {
    let n = g.n();
    let mut best = 0;
    for start in 0..n {
        if n - start <= best {
            break;
        }
        let allowed = full_mask(n) & !full_mask(start + 1);
        let mut search = CycleSearch {
            g,
            start,
            allowed,
            best,
            cap: (allowed.count_ones() + 1) as usize,
        };
        search.extend(start, bit(start), 1);
        best = search.best;
        if best == n {
            break;
        }
    }
    best
}

struct CycleSearch<'a> {
    g: &'a SimpleGraph,
    start: usize,
    allowed: u64,
    best: usize,
    cap: usize,
}

impl CycleSearch<'_> {
    /// Returns true once a cycle through every allowed vertex is found.
    fn extend(&mut self, head: usize, visited: u64, len: usize) -> bool {
        if len >= 3 && self.g.neighbors(head) & bit(self.start) != 0 && len > self.best {
            self.best = len;
            if len == self.cap {
                return true;
            }
        }
        for next in bits(self.g.neighbors(head) & self.allowed & !visited) {
            if self.extend(next, visited | bit(next), len + 1) {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamiltonian_examples() {
        assert!(is_hamiltonian(&SimpleGraph::cycle(5).unwrap()));
        assert!(is_hamiltonian(&SimpleGraph::complete(3).unwrap()));
        assert!(!is_hamiltonian(&SimpleGraph::complete(1).unwrap()));
        assert!(!is_hamiltonian(&SimpleGraph::complete(2).unwrap()));
        assert!(!is_hamiltonian(&SimpleGraph::path(4).unwrap()));
        assert!(!is_hamiltonian(
            &SimpleGraph::complete_bipartite(2, 3).unwrap()
        ));
        assert!(is_hamiltonian(
            &SimpleGraph::complete_bipartite(3, 3).unwrap()
        ));
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        let g = SimpleGraph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        assert!(!is_hamiltonian(&g));
        assert_eq!(circumference(&g), 9);
    }

    #[test]
    fn circumference_examples() {
        assert_eq!(circumference(&SimpleGraph::cycle(5).unwrap()), 5);
        assert_eq!(circumference(&SimpleGraph::path(4).unwrap()), 0);
        assert_eq!(
            circumference(&SimpleGraph::complete_bipartite(2, 3).unwrap()),
            4
        );
        assert_eq!(circumference(&SimpleGraph::complete(6).unwrap()), 6);
        let bowtie =
            SimpleGraph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert_eq!(circumference(&bowtie), 3);
    }
}
