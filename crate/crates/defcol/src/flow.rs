//! Dinic maximum flow on small integer networks.

use std::collections::VecDeque;

pub const INFINITE: i64 = i64::MAX / 4;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
    flow: i64,
}

#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    pub fn nodes(&self) -> usize {
        self.out.len()
    }

    /// Adds a directed arc and returns its id.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap, flow: 0 });
        self.arcs.push(Arc {
            to: from,
            cap: 0,
            flow: 0,
        });
        self.out[from].push(id);
        self.out[to].push(id + 1);
        id
    }

    /// Adds an undirected edge of the given capacity in both directions and returns its id.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc {
            to: v,
            cap,
            flow: 0,
        });
        self.arcs.push(Arc {
            to: u,
            cap,
            flow: 0,
        });
        self.out[u].push(id);
        self.out[v].push(id + 1);
        id
    }

    pub fn flow_on(&self, arc: usize) -> i64 {
        self.arcs[arc].flow
    }

    pub fn head(&self, arc: usize) -> usize {
        self.arcs[arc].to
    }

    pub fn tail(&self, arc: usize) -> usize {
        self.arcs[arc ^ 1].to
    }

    pub fn out_arcs(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn reset(&mut self) {
        for a in &mut self.arcs {
            a.flow = 0;
        }
    }

    fn residual(&self, id: usize) -> i64 {
        self.arcs[id].cap - self.arcs[id].flow
    }

    fn push(&mut self, id: usize, amount: i64) {
        self.arcs[id].flow += amount;
        self.arcs[id ^ 1].flow -= amount;
    }

    pub fn max_flow(&mut self, source: usize, sink: usize) -> i64 {
        let mut total = 0;
        loop {
            let Some(level) = self.levels(source, sink) else {
                return total;
            };
            let mut next = vec![0usize; self.nodes()];
            loop {
                let pushed = self.augment(source, sink, INFINITE, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn levels(&self, source: usize, sink: usize) -> Option<Vec<usize>> {
        let mut level = vec![usize::MAX; self.nodes()];
        level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &id in &self.out[v] {
                let u = self.arcs[id].to;
                if level[u] == usize::MAX && self.residual(id) > 0 {
                    level[u] = level[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        (level[sink] != usize::MAX).then_some(level)
    }

    fn augment(
        &mut self,
        v: usize,
        sink: usize,
        limit: i64,
        level: &[usize],
        next: &mut [usize],
    ) -> i64 {
        if v == sink {
            return limit;
        }
        while next[v] < self.out[v].len() {
            let id = self.out[v][next[v]];
            let u = self.arcs[id].to;
            let r = self.residual(id);
            if r > 0 && level[u] == level[v] + 1 {
                let got = self.augment(u, sink, limit.min(r), level, next);
                if got > 0 {
                    self.push(id, got);
                    return got;
                }
            }
            next[v] += 1;
        }
        0
    }

    /// Nodes reachable from `source` in the residual network after a max flow.
    pub fn source_side(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.nodes()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &id in &self.out[v] {
                let u = self.arcs[id].to;
                if !seen[u] && self.residual(id) > 0 {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen
    }
}
