//! Weighted binding graphs and their minimum cuts.

use std::collections::BTreeMap;

use super::assembly::InstanceId;

/// Undirected weighted graph over placed instances. Parallel bonds between
/// the same pair of instances are summed into one edge.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BindingGraph {
    vertex_count: usize,
    edges: BTreeMap<(InstanceId, InstanceId), u32>,
}

impl BindingGraph {
    pub fn new(vertex_count: usize) -> Self {
        BindingGraph {
            vertex_count,
            edges: BTreeMap::new(),
        }
    }

    pub fn add_bond(&mut self, a: InstanceId, b: InstanceId, strength: u32) {
        if a == b || strength == 0 {
            return;
        }
        let key = (a.min(b), a.max(b));
        *self.edges.entry(key).or_insert(0) += strength;
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (InstanceId, InstanceId, u32)> + '_ {
        self.edges.iter().map(|(&(a, b), &w)| (a, b, w))
    }

    pub fn weight(&self, a: InstanceId, b: InstanceId) -> u32 {
        self.edges.get(&(a.min(b), a.max(b))).copied().unwrap_or(0)
    }

    /// Global minimum cut weight (Stoer–Wagner). `None` for fewer than two vertices.
    pub fn min_cut(&self) -> Option<u64> {
        let n = self.vertex_count;
        if n < 2 {
            return None;
        }
        let mut w = vec![vec![0u64; n]; n];
        for (a, b, s) in self.edges() {
            w[a][b] += s as u64;
            w[b][a] += s as u64;
        }
        let mut alive: Vec<usize> = (0..n).collect();
        let mut best = u64::MAX;
        while alive.len() > 1 {
            let mut in_set = vec![false; n];
            let mut key = vec![0u64; n];
            let mut prev = alive[0];
            let mut last = alive[0];
            for step in 0..alive.len() {
                let next = *alive
                    .iter()
                    .filter(|&&v| !in_set[v])
                    .max_by_key(|&&v| (key[v], std::cmp::Reverse(v)))
                    .expect("vertex remains");
                if step == alive.len() - 1 {
                    best = best.min(key[next]);
                    prev = last;
                    last = next;
                    break;
                }
                in_set[next] = true;
                for &v in &alive {
                    if !in_set[v] {
                        key[v] += w[next][v];
                    }
                }
                last = next;
            }
            // merge `last` into `prev`
            for &v in &alive {
                w[prev][v] += w[last][v];
                w[v][prev] = w[prev][v];
            }
            w[prev][prev] = 0;
            alive.retain(|&v| v != last);
        }
        Some(best)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (a, b, _) in self.edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}
