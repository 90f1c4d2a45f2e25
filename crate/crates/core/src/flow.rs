//! Exact integral max flow on the layered network, with a chosen set of
//! source arcs deleted first.
//!
//! Dinic's algorithm over the residual graph. Capacities here are only 1
//! and 2 and the network has four layers, so each call is cheap; the point
//! is exactness and determinism, not throughput.

use crate::reduction::LayeredNetwork;
use serde::Serialize;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlowError {
    #[error("source arc index {index} out of range for {arc_count} arcs")]
    InvalidArcIndex { index: usize, arc_count: usize },
}

/// Source-arc indices to delete before measuring flow. Stored sorted and
/// deduplicated; indices point into the network's source arcs, which match
/// the graph's edge order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct InterdictionSet {
    indices: Vec<usize>,
}

impl InterdictionSet {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        indices.sort_unstable();
        indices.dedup();
        InterdictionSet { indices }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }
}

#[derive(Clone)]
struct ResidualEdge {
    to: usize,
    cap: i32,
    rev: usize,
}

struct Dinic {
    graph: Vec<Vec<ResidualEdge>>,
}

impl Dinic {
    fn new(nodes: usize) -> Self {
        Dinic {
            graph: vec![Vec::new(); nodes],
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: i32) {
        let rev_from = self.graph[to].len();
        let rev_to = self.graph[from].len();
        self.graph[from].push(ResidualEdge {
            to,
            cap,
            rev: rev_from,
        });
        self.graph[to].push(ResidualEdge {
            to: from,
            cap: 0,
            rev: rev_to,
        });
    }

    fn bfs(&self, s: usize, t: usize, level: &mut [i32]) -> bool {
        level.fill(-1);
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for e in &self.graph[u] {
                if e.cap > 0 && level[e.to] == -1 {
                    level[e.to] = level[u] + 1;
                    queue.push_back(e.to);
                }
            }
        }
        level[t] != -1
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: i32, level: &[i32], iter: &mut [usize]) -> i32 {
        if u == t {
            return pushed;
        }
        while iter[u] < self.graph[u].len() {
            let i = iter[u];
            let (to, cap, rev) = {
                let e = &self.graph[u][i];
                (e.to, e.cap, e.rev)
            };
            if cap > 0 && level[to] == level[u] + 1 {
                let d = self.dfs(to, t, pushed.min(cap), level, iter);
                if d > 0 {
                    self.graph[u][i].cap -= d;
                    self.graph[to][rev].cap += d;
                    return d;
                }
            }
            iter[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i32 {
        let n = self.graph.len();
        let mut flow = 0;
        let mut level = vec![-1; n];
        while self.bfs(s, t, &mut level) {
            let mut iter = vec![0usize; n];
            loop {
                let pushed = self.dfs(s, t, i32::MAX, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
            }
        }
        flow
    }
}

/// Exact integral max s-t flow with the interdicted source arcs deleted.
///
/// Interdiction is arc deletion; the result is always in `0..=|V|`.
pub fn max_flow(net: &LayeredNetwork, interdicted: &InterdictionSet) -> Result<usize, FlowError> {
    let arc_count = net.source_arcs().len();
    for &index in interdicted.indices() {
        if index >= arc_count {
            return Err(FlowError::InvalidArcIndex { index, arc_count });
        }
    }
    let mut dinic = Dinic::new(net.node_count());
    for (i, a) in net.source_arcs().iter().enumerate() {
        if !interdicted.contains(i) {
            dinic.add_edge(a.from as usize, a.to as usize, a.cap as i32);
        }
    }
    for a in net.middle_arcs().iter().chain(net.sink_arcs()) {
        dinic.add_edge(a.from as usize, a.to as usize, a.cap as i32);
    }
    Ok(dinic.max_flow(net.source() as usize, net.sink() as usize) as usize)
}
