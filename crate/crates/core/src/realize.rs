//! Realizations of degree sequences on labeled vertices.
//!
//! Vertex `i` is assigned the `i`-th largest degree of the sequence, so
//! vertex 0 carries the maximum degree. Enumeration ranges over all labeled
//! simple graphs with exactly that degree vector. Any graph whose degree
//! sequence is `π` is isomorphic to one of them, which is all that
//! isomorphism-invariant questions such as hamiltonicity need.

use std::ops::ControlFlow;

use crate::degseq::{graphical_nonincreasing, DegreeSequence};
use crate::error::{Error, Result};
use crate::graph::{bit, bits, full_mask, SimpleGraph, MAX_VERTICES};

/// One realization by Havel–Hakimi, or `None` if `seq` is not graphical.
///
/// Repeatedly joins the vertex of largest residual degree to the vertices
/// of next-largest residual degree.
pub fn havel_hakimi_realize(seq: &DegreeSequence) -> Option<SimpleGraph> {
    let targets = seq.nonincreasing();
    let n = targets.len();
    if n > MAX_VERTICES {
        return None;
    }
    let mut g = SimpleGraph::empty(n).ok()?;
    let mut residual = targets;
    loop {
        let mut order: Vec<usize> = (0..n).filter(|&v| residual[v] > 0).collect();
        if order.is_empty() {
            return Some(g);
        }
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let v = order[0];
        let need = residual[v];
        if need > order.len() - 1 {
            return None;
        }
        residual[v] = 0;
        for &u in &order[1..=need] {
            g.insert(v, u);
            residual[u] -= 1;
        }
    }
}

/// Exhaustive enumerator of the labeled realizations of a sequence.
///
/// The search repeatedly picks the open vertex of largest residual degree
/// (lowest label on ties), chooses its remaining neighbors among the other
/// open vertices, and closes it. Since open vertices never have edges among
/// themselves, a partial state extends to a realization exactly when the
/// residual degrees of the open vertices are graphical, and that is checked
/// after every choice. Each realization is produced exactly once.
#[derive(Debug, Clone)]
pub struct Realizations {
    root: Option<Branch>,
}

/// An independent subtree of the search.
#[derive(Debug, Clone)]
pub struct Branch {
    graph: SimpleGraph,
    residual: Vec<usize>,
    open: u64,
}

impl Realizations {
    pub fn new(seq: &DegreeSequence) -> Result<Self> {
        let n = seq.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let targets = seq.nonincreasing();
        let root = graphical_nonincreasing(&targets).then(|| Branch {
            graph: SimpleGraph::empty(n).expect("1 <= n <= 64"),
            residual: targets,
            open: full_mask(n),
        });
        Ok(Self { root })
    }

    /// Visits every realization in deterministic order until `visit` breaks.
    pub fn for_each<F>(&self, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&SimpleGraph) -> ControlFlow<()>,
    {
        match &self.root {
            Some(root) => root.clone().search(&mut visit),
            None => ControlFlow::Continue(()),
        }
    }

    /// Splits the search at its first choice. Visiting the branches in order
    /// reproduces the order of [`for_each`](Self::for_each).
    pub fn branches(&self) -> Vec<Branch> {
        let Some(root) = &self.root else {
            return Vec::new();
        };
        let mut root = root.clone();
        if root.is_complete() {
            return vec![root];
        }
        let mut out = Vec::new();
        let _ = root.for_each_child(&mut |child: &mut Branch| {
            out.push(child.clone());
            ControlFlow::Continue(())
        });
        out
    }

    pub fn collect(&self) -> Vec<SimpleGraph> {
        let mut out = Vec::new();
        let _ = self.for_each(|g| {
            out.push(g.clone());
            ControlFlow::Continue(())
        });
        out
    }

    pub fn count(&self) -> u64 {
        let mut count = 0;
        let _ = self.for_each(|_| {
            count += 1;
            ControlFlow::Continue(())
        });
        count
    }
}

impl Branch {
    /// Visits every realization in this subtree.
    pub fn for_each<F>(&self, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&SimpleGraph) -> ControlFlow<()>,
    {
        self.clone().search(&mut visit)
    }

    fn is_complete(&self) -> bool {
        bits(self.open).all(|v| self.residual[v] == 0)
    }

    fn search(
        &mut self,
        visit: &mut dyn FnMut(&SimpleGraph) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if self.is_complete() {
            return visit(&self.graph);
        }
        self.for_each_child(&mut |child: &mut Branch| child.search(visit))
    }

    fn pivot(&self) -> usize {
        let mut best = None;
        for v in bits(self.open) {
            if best.is_none_or(|b: usize| self.residual[v] > self.residual[b]) {
                best = Some(v);
            }
        }
        best.expect("an open vertex with positive residual exists")
    }

    fn for_each_child(
        &mut self,
        f: &mut dyn FnMut(&mut Branch) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let v = self.pivot();
        let need = self.residual[v];
        let candidates: Vec<usize> = bits(self.open & !bit(v))
            .filter(|&u| self.residual[u] > 0)
            .collect();
        if candidates.len() < need {
            return ControlFlow::Continue(());
        }
        self.open &= !bit(v);
        self.residual[v] = 0;
        let flow = self.choose(v, &candidates, 0, need, f);
        self.residual[v] = need;
        self.open |= bit(v);
        flow
    }

    fn choose(
        &mut self,
        v: usize,
        candidates: &[usize],
        from: usize,
        need: usize,
        f: &mut dyn FnMut(&mut Branch) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if need == 0 {
            if self.residual_graphical() {
                return f(self);
            }
            return ControlFlow::Continue(());
        }
        for i in from..=candidates.len() - need {
            let u = candidates[i];
            self.graph.insert(v, u);
            self.residual[u] -= 1;
            let flow = self.choose(v, candidates, i + 1, need - 1, f);
            self.residual[u] += 1;
            self.graph.remove(v, u);
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn residual_graphical(&self) -> bool {
        let mut rest: Vec<usize> = bits(self.open)
            .map(|u| self.residual[u])
            .filter(|&d| d > 0)
            .collect();
        rest.sort_unstable_by(|a, b| b.cmp(a));
        graphical_nonincreasing(&rest)
    }
}

/// All labeled realizations, collected.
pub fn enumerate_realizations(seq: &DegreeSequence) -> Result<Vec<SimpleGraph>> {
    Ok(Realizations::new(seq)?.collect())
}
