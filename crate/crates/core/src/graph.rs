//! Small undirected graphs: girth, short cycles, isomorphism search, DOT.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::chamber::escape;

/// Two-colored vertices for DOT output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shade {
    White,
    Black,
}

#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    shades: Vec<Shade>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(labels: Vec<String>, shades: Vec<Shade>, edges: &[(usize, usize)]) -> Self {
        assert_eq!(labels.len(), shades.len());
        let mut adj = vec![Vec::new(); labels.len()];
        for &(a, b) in edges {
            if a != b && !adj[a].contains(&b) {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { labels, shades, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn shade(&self, v: usize) -> Shade {
        self.shades[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|a| self.adj[a].iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
            .collect()
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == k).then_some(k)
    }

    /// Length of a shortest cycle, `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Every cycle of length `k ≥ 3`, each once, as a vertex sequence
    /// starting at its least vertex.
    pub fn cycles(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for s in 0..self.vertex_count() {
            let mut path = vec![s];
            let mut on_path = vec![false; self.vertex_count()];
            on_path[s] = true;
            self.extend_cycle(k, &mut path, &mut on_path, &mut out);
        }
        out
    }

    fn extend_cycle(&self, k: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let s = path[0];
        let u = *path.last().expect("nonempty path");
        if path.len() == k {
            // each cycle is traced in two directions; keep one
            if self.has_edge(u, s) && path[1] < path[k - 1] {
                out.push(path.clone());
            }
            return;
        }
        for &v in &self.adj[u] {
            if v > s && !on_path[v] {
                on_path[v] = true;
                path.push(v);
                self.extend_cycle(k, path, on_path, out);
                path.pop();
                on_path[v] = false;
            }
        }
    }

    /// `graph <name>` with white/black filled vertices.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.vertex_count() {
            let style = match self.shades[v] {
                Shade::White => "shape=circle, style=filled, fillcolor=white, fontcolor=black",
                Shade::Black => "shape=circle, style=filled, fillcolor=black, fontcolor=white",
            };
            let _ = writeln!(out, "  {v} [label=\"{}\", {style}];", escape(&self.labels[v]));
        }
        for (a, b) in self.edges() {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }
}

/// A vertex bijection `f` with `a ~ b ⇔ f(a) ~ f(b)`, by backtracking in
/// BFS order so every vertex after the first has a placed neighbor.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut g_deg: Vec<usize> = g.adj.iter().map(Vec::len).collect();
    let mut h_deg: Vec<usize> = h.adj.iter().map(Vec::len).collect();
    g_deg.sort_unstable();
    h_deg.sort_unstable();
    if g_deg != h_deg {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }

    // BFS order over all components, remembering a placed neighbor
    let mut order = Vec::with_capacity(n);
    let mut anchor = vec![None; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &g.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    anchor[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if place(g, h, &order, &anchor, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn place(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    anchor: &[Option<usize>],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let candidates: Vec<usize> = match anchor[v] {
        Some(u) => h.adj[map[u]].clone(),
        None => (0..h.vertex_count()).collect(),
    };
    for x in candidates {
        if used[x] || h.adj[x].len() != g.adj[v].len() {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| g.has_edge(v, w) == h.has_edge(x, map[w]));
        if !consistent {
            continue;
        }
        map[v] = x;
        used[x] = true;
        if place(g, h, order, anchor, depth + 1, map, used) {
            return true;
        }
        used[x] = false;
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(
            (0..n).map(|i| i.to_string()).collect(),
            vec![Shade::White; n],
            &edges,
        )
    }

    #[test]
    fn cycle_graph_properties() {
        let c6 = cycle(6);
        assert_eq!(c6.girth(), Some(6));
        assert_eq!(c6.regular_degree(), Some(2));
        assert_eq!(c6.cycles(6).len(), 1);
        assert!(c6.cycles(4).is_empty());
    }

    #[test]
    fn isomorphism_search() {
        let a = cycle(6);
        let relabeled = Graph::new(
            (0..6).map(|i| i.to_string()).collect(),
            vec![Shade::Black; 6],
            &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 5), (5, 0)],
        );
        let f = find_isomorphism(&a, &relabeled).unwrap();
        for (x, y) in a.edges() {
            assert!(relabeled.has_edge(f[x], f[y]));
        }
        let two_triangles = Graph::new(
            (0..6).map(|i| i.to_string()).collect(),
            vec![Shade::White; 6],
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
        );
        assert!(find_isomorphism(&a, &two_triangles).is_none());
    }

    #[test]
    fn forest_has_no_girth() {
        let path = Graph::new(vec!["a".into(), "b".into()], vec![Shade::White; 2], &[(0, 1)]);
        assert_eq!(path.girth(), None);
    }
}
