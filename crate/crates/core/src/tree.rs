//! The building of type Ã₁: a `(q+1)`-valent tree whose chambers are edges,
//! truncated at a finite depth.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::building::WMetricBuilding;
use crate::chamber::ChamberSystem;
use crate::coxeter::{CoxeterElement, CoxeterMatrix, CoxeterSystem, Word};
use crate::error::{Error, Result};
use crate::flag::check_chamber_count;
use crate::graph::{Graph, Shade};
use crate::report::Report;

/// Vertex colors: black is color 0, white is color 1.
#[derive(Debug, Clone)]
pub struct TruncatedTree {
    q: usize,
    depth: usize,
    vertex_shades: Vec<Shade>,
    /// `(black, white)` endpoints of each edge.
    edges: Vec<(usize, usize)>,
    edge_depth: Vec<usize>,
    building: WMetricBuilding,
}

/// Edge count `1 + 2(q + q² + ⋯ + q^d)`.
pub fn tree_edge_count(q: usize, depth: usize) -> u128 {
    let mut fan = 0u128;
    let mut power = 1u128;
    for _ in 0..depth {
        power = power.saturating_mul(q as u128);
        fan = fan.saturating_add(power);
    }
    fan.saturating_mul(2).saturating_add(1)
}

/// A root edge, then `q` new edges at the far end of each edge of the
/// previous layer, `depth` times. Edges are numbered layer by layer.
pub fn build_tree(q: usize, depth: usize) -> Result<TruncatedTree> {
    if q < 2 || depth < 1 {
        return Err(Error::Invalid(format!("tree needs q >= 2 and depth >= 1, got q = {q}, depth = {depth}")));
    }
    check_chamber_count(tree_edge_count(q, depth))?;

    let mut shades = vec![Shade::Black, Shade::White];
    let mut edges = vec![(0, 1)];
    let mut edge_depth = vec![0];
    // open ends of the current layer, each the far vertex of one edge
    let mut frontier = vec![0, 1];
    for layer in 1..=depth {
        let mut next = Vec::new();
        for &v in &frontier {
            for _ in 0..q {
                let shade = match shades[v] {
                    Shade::Black => Shade::White,
                    Shade::White => Shade::Black,
                };
                let w = shades.len();
                shades.push(shade);
                edges.push(if shade == Shade::White { (v, w) } else { (w, v) });
                edge_depth.push(layer);
                next.push(w);
            }
        }
        frontier = next;
    }

    let cs = ChamberSystem::from_keys(edges.len(), vec![0, 1], |pos, e| {
        if pos == 0 {
            edges[e].0
        } else {
            edges[e].1
        }
    })
    .with_labels(
        edges
            .iter()
            .map(|&(b, w)| format!("b{b}-w{w}"))
            .collect(),
    )?;
    let system = Arc::new(CoxeterSystem::with_default_cap(CoxeterMatrix::infinite_dihedral())?);

    let n = edges.len();
    let mut delta = Vec::with_capacity(n * n);
    for c in 0..n {
        for word in crossing_words(&cs, c) {
            delta.push(system.canonical(&word));
        }
    }
    let building = WMetricBuilding::new(cs, system, delta)?;
    Ok(TruncatedTree {
        q,
        depth,
        vertex_shades: shades,
        edges,
        edge_depth,
        building,
    })
}

/// For each edge, the colors of the shared vertices along the unique
/// shortest edge path from `c`.
fn crossing_words(cs: &ChamberSystem, c: usize) -> Vec<Vec<usize>> {
    let n = cs.len();
    let mut words: Vec<Option<Vec<usize>>> = vec![None; n];
    words[c] = Some(Vec::new());
    let mut queue = VecDeque::from([c]);
    while let Some(x) = queue.pop_front() {
        for pos in 0..2 {
            for &y in cs.panel_at(x, pos) {
                if words[y].is_none() {
                    let mut w = words[x].clone().expect("visited");
                    w.push(pos);
                    words[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
    }
    words.into_iter().map(|w| w.expect("tree is connected")).collect()
}

impl TruncatedTree {
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn valence(&self) -> usize {
        self.q + 1
    }

    pub fn building(&self) -> &WMetricBuilding {
        &self.building
    }

    pub fn into_building(self) -> WMetricBuilding {
        self.building
    }

    pub fn chambers(&self) -> &ChamberSystem {
        self.building.chambers()
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        self.building.system()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_shades.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Layer of an edge; the root edge is layer 0.
    pub fn edge_depth(&self, e: usize) -> usize {
        self.edge_depth[e]
    }

    /// A vertex is interior when it has full degree `q + 1`.
    pub fn is_interior_vertex(&self, v: usize) -> bool {
        self.edges.iter().filter(|&&(b, w)| b == v || w == v).count() == self.q + 1
    }

    /// The vertex graph, black and white filled.
    pub fn graph(&self) -> Graph {
        Graph::new(
            (0..self.vertex_count()).map(|v| v.to_string()).collect(),
            self.vertex_shades.clone(),
            &self.edges,
        )
    }

    pub fn to_dot(&self) -> String {
        self.graph().to_dot("tree")
    }
}

/// `δ(c, c′)` in the infinite dihedral group.
pub fn delta_tree(t: &TruncatedTree, c: usize, c2: usize) -> Result<CoxeterElement> {
    t.building.try_delta(c, c2).cloned()
}

/// Ends of all galleries from `c` of type `word` (positions).
fn gallery_ends(cs: &ChamberSystem, c: usize, word: &[usize]) -> BTreeSet<usize> {
    let mut reach = BTreeSet::from([c]);
    for &pos in word {
        reach = reach
            .iter()
            .flat_map(|&x| cs.panel_at(x, pos).iter().copied().filter(move |&y| y != x))
            .collect();
    }
    reach
}

/// Words obtained by repeatedly turning `ii` into `i` or deleting it.
fn reductions(word: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::from([word.to_vec()]);
    let mut stack = vec![word.to_vec()];
    while let Some(w) = stack.pop() {
        for k in 1..w.len() {
            if w[k - 1] == w[k] {
                let merged = [&w[..k], &w[k + 1..]].concat();
                let deleted = [&w[..k - 1], &w[k + 1..]].concat();
                for v in [merged, deleted] {
                    if seen.insert(v.clone()) {
                        stack.push(v);
                    }
                }
            }
        }
    }
    seen
}

/// (B2) from every chamber in layers `0..=depth − margin`, over all types
/// of length at most `margin`. Such galleries never meet a truncated panel.
/// Alternating types must reach exactly the `δ`-fiber of their element;
/// other types may only reach chambers at a `δ` given by one of their
/// reductions, and strictly closer than their length.
pub fn check_b2_interior(t: &TruncatedTree, margin: usize) -> Result<Report> {
    if margin >= t.depth {
        return Err(Error::MarginTooLarge {
            margin,
            depth: t.depth,
        });
    }
    let cs = t.chambers();
    let b = &t.building;
    let sys = b.system();
    let interior: Vec<usize> = (0..b.len()).filter(|&e| t.edge_depth[e] <= t.depth - margin).collect();
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..margin {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..2).map(move |pos| {
                    let mut v = w.clone();
                    v.push(pos);
                    v
                })
            })
            .collect();
        words.extend(layer.iter().cloned());
    }
    let is_alternating = |w: &[usize]| w.windows(2).all(|p| p[0] != p[1]);
    let mut reduced = 0;
    let mut non_reduced = 0;
    let mut fibers: HashMap<(usize, CoxeterElement), BTreeSet<usize>> = HashMap::new();
    for &c in &interior {
        for d in 0..b.len() {
            fibers.entry((c, b.delta(c, d).clone())).or_default().insert(d);
        }
    }
    let mut report = Report::new("B2 interior");
    for w in &words {
        let cm = sys.matrix();
        let text = cm.format_word(&Word::new(w.clone()));
        if is_alternating(w) {
            reduced += 1;
            let element = sys.canonical(w);
            for &c in &interior {
                let reach = gallery_ends(cs, c, w);
                let fiber = fibers.get(&(c, element.clone())).cloned().unwrap_or_default();
                if reach != fiber {
                    report.violation(format!(
                        "c={c} type {text}: {} gallery ends, {} chambers at that distance",
                        reach.len(),
                        fiber.len()
                    ));
                }
            }
        } else {
            non_reduced += 1;
            let allowed: HashSet<CoxeterElement> = reductions(w)
                .iter()
                .filter(|v| is_alternating(v))
                .map(|v| sys.canonical(v))
                .collect();
            for &c in &interior {
                for d in gallery_ends(cs, c, w) {
                    let e = b.delta(c, d);
                    if !allowed.contains(e) || e.len() >= w.len() {
                        report.violation(format!("c={c} c'={d} type {text}: delta = {e} is not a reduction"));
                    }
                }
            }
        }
    }
    report.count("interior_chambers", interior.len() as u64);
    report.count("reduced_words", reduced);
    report.count("non_reduced_words", non_reduced);
    report.count("margin", margin as u64);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::{check_b1, check_b2, non_reduced_caveat_check};

fn color_of(shade: Shade) -> usize {
    match shade {
        Shade::Black => 0,
        Shade::White => 1,
    }
}

    #[test]
    fn sizes() {
        let t = build_tree(2, 1).unwrap();
        assert_eq!(t.chambers().len(), 1 + 2 * 2);
        assert_eq!(build_tree(2, 6).unwrap().chambers().len(), 253);
        assert_eq!(tree_edge_count(2, 6), 253);
        assert!(build_tree(1, 3).is_err());
        assert!(build_tree(2, 0).is_err());
        assert!(matches!(build_tree(2, 20), Err(Error::GuardExceeded(_))));
    }

    #[test]
    fn interior_panels_are_full() {
        for (q, d) in [(2, 3), (3, 2)] {
            let t = build_tree(q, d).unwrap();
            let g = t.graph();
            assert_eq!(g.girth(), None);
            for v in 0..t.vertex_count() {
                if t.is_interior_vertex(v) {
                    let pos = color_of(t.vertex_shades[v]);
                    let e = t.edges().iter().position(|&(b, w)| b == v || w == v).unwrap();
                    assert_eq!(t.chambers().panel_at(e, pos).len(), q + 1);
                }
            }
        }
    }

    #[test]
    fn coloring_is_triangle_free() {
        let t = build_tree(2, 3).unwrap();
        let cs = t.chambers();
        for c in 0..cs.len() {
            for d in (0..cs.len()).filter(|&d| d != c) {
                assert!(cs.adjacency_colors(c, d).len() <= 1);
            }
        }
    }

    #[test]
    fn delta_examples() {
        let t = build_tree(2, 3).unwrap();
        let b = t.building();
        assert!(delta_tree(&t, 5, 5).unwrap().is_identity());
        // edges 1 and 2 both hang from the root's black end
        assert_eq!(t.edges()[1].0, 0);
        assert_eq!(t.edges()[2].0, 0);
        assert_eq!(delta_tree(&t, 1, 2).unwrap().labels(), vec![0]);
        // 1 → 0 → 3 → a child of 3 crosses black, white, black
        let child = (0..t.edges().len())
            .find(|&e| t.edge_depth(e) == 2 && t.edges()[e].0 == t.edges()[3].0)
            .unwrap();
        assert_eq!(t.edges()[3].1, 1);
        assert_eq!(t.vertex_shades[t.edges()[3].0], Shade::Black);
        let path = [1, 0, 3, child];
        for w in path.windows(2) {
            assert_eq!(t.chambers().adjacency_colors(w[0], w[1]).len(), 1);
        }
        assert_eq!(b.delta(1, child).labels(), vec![0, 1, 0]);
        assert!(delta_tree(&t, 0, 999).is_err());
    }

    #[test]
    fn delta_is_alternating_path_length() {
        let t = build_tree(2, 4).unwrap();
        let b = t.building();
        let g = t.graph();
        for c in 0..b.len() {
            let words = crossing_words(t.chambers(), c);
            for d in 0..b.len() {
                let e = b.delta(c, d);
                assert!(e.labels().windows(2).all(|p| p[0] != p[1]));
                assert_eq!(e.len(), words[d].len());
                assert!(c == d || !e.is_identity());
            }
        }
        assert_eq!(g.edge_count(), b.len());
    }

    #[test]
    fn b2_on_interior_and_whole_tree() {
        let t = build_tree(2, 6).unwrap();
        let r = check_b2_interior(&t, 3).unwrap();
        assert!(r.pass, "{:?}", r.violations);
        assert_eq!(r.get("reduced_words"), 7);
        assert_eq!(r.get("non_reduced_words"), 8);
        assert_eq!(
            check_b2_interior(&t, 6).unwrap_err(),
            Error::MarginTooLarge { margin: 6, depth: 6 }
        );
        let small = build_tree(2, 3).unwrap();
        assert!(check_b2(small.building()).pass);
        // truncation breaks thickness only at the leaves
        let b1 = check_b1(small.building(), true);
        assert!(!b1.pass);
        let leaves = small.chambers().panels(0).iter().chain(small.chambers().panels(1)).filter(|p| p.len() < 3);
        for p in leaves {
            assert_eq!(p.len(), 1);
            assert_eq!(small.edge_depth(p[0]), 3);
        }
    }

    #[test]
    fn non_reduced_witness() {
        let t = build_tree(2, 6).unwrap();
        let r = non_reduced_caveat_check(t.building()).unwrap();
        assert!(r.pass);
        assert_eq!(r.get("color"), 0);
    }

    #[test]
    fn dot_fills() {
        let dot = build_tree(2, 1).unwrap().to_dot();
        assert!(dot.starts_with("graph tree {"));
        assert_eq!(dot.matches("fillcolor=black").count(), 3);
        assert_eq!(dot.matches("fillcolor=white").count(), 3);
        assert_eq!(dot.matches(" -- ").count(), 5);
    }

    #[test]
    fn reductions_of_a_square() {
        let r = reductions(&[0, 0]);
        assert_eq!(r, BTreeSet::from([vec![0, 0], vec![0], vec![]]));
    }
}
