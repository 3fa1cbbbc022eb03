//! Unit-capacity maximum flow (Dinic) for linkage checks.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Edge {
    to: usize,
    cap: u32,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            edges: Vec::new(),
        }
    }

    pub(crate) fn add_edge(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.edges.len());
        self.edges.push(Edge { to, cap });
        self.adj[to].push(self.edges.len());
        self.edges.push(Edge { to: from, cap: 0 });
    }

    fn levels(&self, source: usize) -> Vec<Option<u32>> {
        let mut level = vec![None; self.adj.len()];
        level[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let lu = level[u].unwrap();
            for &e in &self.adj[u] {
                let edge = &self.edges[e];
                if edge.cap > 0 && level[edge.to].is_none() {
                    level[edge.to] = Some(lu + 1);
                    queue.push_back(edge.to);
                }
            }
        }
        level
    }

    fn augment(&mut self, u: usize, sink: usize, pushed: u32, level: &[Option<u32>], next: &mut [usize]) -> u32 {
        if u == sink {
            return pushed;
        }
        while next[u] < self.adj[u].len() {
            let e = self.adj[u][next[u]];
            let (to, cap) = (self.edges[e].to, self.edges[e].cap);
            if cap > 0 && level[to] == level[u].map(|l| l + 1) {
                let got = self.augment(to, sink, pushed.min(cap), level, next);
                if got > 0 {
                    self.edges[e].cap -= got;
                    self.edges[e ^ 1].cap += got;
                    return got;
                }
            }
            next[u] += 1;
        }
        0
    }

    pub(crate) fn max_flow(&mut self, source: usize, sink: usize) -> u32 {
        let mut total = 0;
        loop {
            let level = self.levels(source);
            if level[sink].is_none() {
                return total;
            }
            let mut next = vec![0; self.adj.len()];
            loop {
                let got = self.augment(source, sink, u32::MAX, &level, &mut next);
                if got == 0 {
                    break;
                }
                total += got;
            }
        }
    }
}
