use super::{bit, bits, full_mask, SimpleGraph};

fn reach(g: &SimpleGraph, start: usize, within: u64) -> u64 {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= g.neighbors(v);
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

pub fn is_connected(g: &SimpleGraph) -> bool {
    let all = full_mask(g.n());
    reach(g, 0, all) == all
}

/// Articulation points, ascending (Hopcroft–Tarjan low-link).
pub fn cut_vertices(g: &SimpleGraph) -> Vec<usize> {
    struct Dfs<'a> {
        g: &'a SimpleGraph,
        order: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        cut: u64,
    }

    impl Dfs<'_> {
        fn visit(&mut self, v: usize, parent: Option<usize>) {
            self.timer += 1;
            self.order[v] = self.timer;
            self.low[v] = self.timer;
            let mut children = 0;
            for w in self.g.neighbor_iter(v) {
                if Some(w) == parent {
                    continue;
                }
                if self.order[w] == 0 {
                    children += 1;
                    self.visit(w, Some(v));
                    self.low[v] = self.low[v].min(self.low[w]);
                    if parent.is_some() && self.low[w] >= self.order[v] {
                        self.cut |= bit(v);
                    }
                } else {
                    self.low[v] = self.low[v].min(self.order[w]);
                }
            }
            if parent.is_none() && children > 1 {
                self.cut |= bit(v);
            }
        }
    }

    let n = g.n();
    let mut dfs = Dfs {
        g,
        order: vec![0; n],
        low: vec![0; n],
        timer: 0,
        cut: 0,
    };
    for v in 0..n {
        if dfs.order[v] == 0 {
            dfs.visit(v, None);
        }
    }
    bits(dfs.cut).collect()
}

/// Connected, at least 3 vertices, and no cut vertex.
pub fn is_biconnected(g: &SimpleGraph) -> bool {
    g.n() >= 3 && is_connected(g) && cut_vertices(g).is_empty()
}
