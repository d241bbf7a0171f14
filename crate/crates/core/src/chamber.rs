//! Chamber systems over a color set `I`: one partition of the chambers per
//! color, galleries, residues, the nerve, and DOT export.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Edge colors in DOT output, cycled by color position.
pub const PALETTE: [&str; 6] = ["red", "blue", "green", "orange", "purple", "brown"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberSystem {
    len: usize,
    colors: Vec<usize>,
    /// `class_of[color][chamber]` indexes into `classes[color]`.
    class_of: Vec<Vec<usize>>,
    classes: Vec<Vec<Vec<usize>>>,
    labels: Option<Vec<String>>,
}

impl ChamberSystem {
    /// `partitions[k]` is the partition for color `colors[k]`. Classes are
    /// normalized (sorted, ordered by least member).
    pub fn from_partitions(
        len: usize,
        colors: Vec<usize>,
        partitions: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if colors.len() != partitions.len() {
            return Err(Error::Invalid(format!(
                "{} colors but {} partitions",
                colors.len(),
                partitions.len()
            )));
        }
        let mut sorted_colors = colors.clone();
        sorted_colors.sort_unstable();
        sorted_colors.dedup();
        if sorted_colors.len() != colors.len() {
            return Err(Error::Invalid("repeated color".into()));
        }
        let mut class_of = Vec::with_capacity(colors.len());
        let mut classes = Vec::with_capacity(colors.len());
        for (&color, partition) in colors.iter().zip(partitions) {
            let mut normalized: Vec<Vec<usize>> = partition
                .into_iter()
                .map(|mut class| {
                    class.sort_unstable();
                    class
                })
                .collect();
            normalized.sort();
            let mut owner = vec![usize::MAX; len];
            for (k, class) in normalized.iter().enumerate() {
                if class.is_empty() {
                    return Err(Error::Invalid(format!("empty class for color {color}")));
                }
                for &c in class {
                    if c >= len {
                        return Err(Error::OutOfRange(format!("chamber {c} of {len}")));
                    }
                    if owner[c] != usize::MAX {
                        return Err(Error::Invalid(format!(
                            "chamber {c} in two classes of color {color}"
                        )));
                    }
                    owner[c] = k;
                }
            }
            if let Some(c) = owner.iter().position(|&o| o == usize::MAX) {
                return Err(Error::Invalid(format!(
                    "chamber {c} missing from partition of color {color}"
                )));
            }
            class_of.push(owner);
            classes.push(normalized);
        }
        Ok(ChamberSystem {
            len,
            colors,
            class_of,
            classes,
            labels: None,
        })
    }

    /// Chambers `c, d` are `colors[k]`-equivalent iff `key(k, c) == key(k, d)`.
    pub fn from_keys<K, F>(len: usize, colors: Vec<usize>, key: F) -> Self
    where
        K: Hash + Eq,
        F: Fn(usize, usize) -> K,
    {
        let partitions = (0..colors.len())
            .map(|k| {
                let mut groups: HashMap<K, Vec<usize>> = HashMap::new();
                for c in 0..len {
                    groups.entry(key(k, c)).or_default().push(c);
                }
                groups.into_values().collect()
            })
            .collect();
        Self::from_partitions(len, colors, partitions).expect("key classes form partitions")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len {
            return Err(Error::Invalid(format!(
                "{} labels for {} chambers",
                labels.len(),
                self.len
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn rank(&self) -> usize {
        self.colors.len()
    }

    pub fn color_position(&self, color: usize) -> Result<usize> {
        self.colors
            .iter()
            .position(|&c| c == color)
            .ok_or_else(|| Error::OutOfRange(format!("color {color}")))
    }

    pub fn label(&self, c: usize) -> String {
        match &self.labels {
            Some(l) => l[c].clone(),
            None => c.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    fn check_chamber(&self, c: usize) -> Result<()> {
        if c < self.len {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("chamber {c} of {}", self.len)))
        }
    }

    /// All panels of the color at position `k`.
    pub fn panels(&self, k: usize) -> &[Vec<usize>] {
        &self.classes[k]
    }

    /// Panel of `c` for the color at position `k`.
    pub fn panel_at(&self, c: usize, k: usize) -> &[usize] {
        &self.classes[k][self.class_of[k][c]]
    }

    /// The `color`-panel containing `c` (including `c`).
    pub fn panel(&self, c: usize, color: usize) -> Result<&[usize]> {
        self.check_chamber(c)?;
        let k = self.color_position(color)?;
        Ok(self.panel_at(c, k))
    }

    pub fn adjacent_at(&self, c: usize, d: usize, k: usize) -> bool {
        self.class_of[k][c] == self.class_of[k][d]
    }

    /// Colors (by position) in which `c` and `d` are adjacent.
    pub fn adjacency_colors(&self, c: usize, d: usize) -> Vec<usize> {
        (0..self.rank())
            .filter(|&k| self.adjacent_at(c, d, k))
            .collect()
    }

    /// `J`-connected component of `c`, given `J` as color positions.
    pub fn residue_at(&self, c: usize, positions: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.len];
        let mut queue = VecDeque::from([c]);
        seen[c] = true;
        while let Some(x) = queue.pop_front() {
            for &k in positions {
                for &y in self.panel_at(x, k) {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        (0..self.len).filter(|&x| seen[x]).collect()
    }

    /// `J`-residue of `c`, with `J` given as color labels.
    pub fn residue(&self, c: usize, colors: &[usize]) -> Result<Vec<usize>> {
        self.check_chamber(c)?;
        let positions = colors
            .iter()
            .map(|&col| self.color_position(col))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.residue_at(c, &positions))
    }

    /// All residues over the color positions `J`, ordered by least chamber.
    pub fn residues_at(&self, positions: &[usize]) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.len];
        let mut out = Vec::new();
        for c in 0..self.len {
            if assigned[c] {
                continue;
            }
            let r = self.residue_at(c, positions);
            for &x in &r {
                assigned[x] = true;
            }
            out.push(r);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.len == 0 || self.residue_at(0, &all).len() == self.len
    }

    pub fn is_gallery(&self, g: &Gallery) -> bool {
        if g.chambers.len() != g.types.len() + 1 {
            return false;
        }
        if g.chambers.iter().any(|&c| c >= self.len) {
            return false;
        }
        g.types.iter().enumerate().all(|(j, &color)| {
            let Ok(k) = self.color_position(color) else {
                return false;
            };
            let (a, b) = (g.chambers[j], g.chambers[j + 1]);
            a != b && self.adjacent_at(a, b, k)
        })
    }

    /// Restriction to the given chambers, renumbered in the order given.
    pub fn induced(&self, keep: &[usize]) -> Result<ChamberSystem> {
        let mut new_index = vec![usize::MAX; self.len];
        for (i, &c) in keep.iter().enumerate() {
            self.check_chamber(c)?;
            if new_index[c] != usize::MAX {
                return Err(Error::Invalid(format!("chamber {c} kept twice")));
            }
            new_index[c] = i;
        }
        let partitions = (0..self.rank())
            .map(|k| {
                self.classes[k]
                    .iter()
                    .map(|class| {
                        class
                            .iter()
                            .filter(|&&c| new_index[c] != usize::MAX)
                            .map(|&c| new_index[c])
                            .collect::<Vec<_>>()
                    })
                    .filter(|class| !class.is_empty())
                    .collect()
            })
            .collect();
        let mut out = Self::from_partitions(keep.len(), self.colors.clone(), partitions)?;
        if let Some(labels) = &self.labels {
            out.labels = Some(keep.iter().map(|&c| labels[c].clone()).collect());
        }
        Ok(out)
    }

    /// Whether `map` (chambers of `self` → chambers of `other`) preserves
    /// every `i`-adjacency. Colors are matched by position.
    pub fn is_morphism(&self, other: &ChamberSystem, map: &[usize]) -> bool {
        map.len() == self.len
            && self.colors == other.colors
            && map.iter().all(|&x| x < other.len)
            && (0..self.rank()).all(|k| {
                self.classes[k].iter().all(|class| {
                    class
                        .iter()
                        .all(|&c| other.adjacent_at(map[class[0]], map[c], k))
                })
            })
    }

    /// Bijective morphism whose inverse is a morphism.
    pub fn is_isomorphism(&self, other: &ChamberSystem, map: &[usize]) -> bool {
        if map.len() != self.len || self.len != other.len {
            return false;
        }
        let mut inverse = vec![usize::MAX; other.len];
        for (c, &x) in map.iter().enumerate() {
            if x >= other.len || inverse[x] != usize::MAX {
                return false;
            }
            inverse[x] = c;
        }
        self.is_morphism(other, map) && other.is_morphism(self, &inverse)
    }
}

/// A gallery `c₀ ∼_{i₁} c₁ ∼_{i₂} ⋯ ∼_{i_k} c_k` with its type word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gallery {
    pub chambers: Vec<usize>,
    /// Color labels `i₁ … i_k`.
    pub types: Vec<usize>,
}

impl Gallery {
    pub fn trivial(c: usize) -> Self {
        Gallery {
            chambers: vec![c],
            types: vec![],
        }
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }
}

/// Abstract simplicial complex on vertices `0..vertex_count`, closed under
/// taking nonempty subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    simplices: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// Downward closure of the given faces, plus every singleton.
    pub fn from_faces(vertex_count: usize, faces: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut simplices = BTreeSet::new();
        for v in 0..vertex_count {
            simplices.insert(vec![v]);
        }
        for mut face in faces {
            face.sort_unstable();
            face.dedup();
            let k = face.len();
            for mask in 1u64..(1u64 << k) {
                let sub: Vec<usize> = (0..k)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| face[b])
                    .collect();
                simplices.insert(sub);
            }
        }
        SimplicialComplex {
            vertex_count,
            simplices,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        let mut s = simplex.to_vec();
        s.sort_unstable();
        self.simplices.contains(&s)
    }

    /// Number of simplices of each dimension (index = dimension).
    pub fn f_vector(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for s in &self.simplices {
            let d = s.len() - 1;
            if out.len() <= d {
                out.resize(d + 1, 0);
            }
            out[d] += 1;
        }
        out
    }

    pub fn maximal_simplices(&self) -> Vec<&Vec<usize>> {
        self.simplices
            .iter()
            .filter(|s| {
                !self
                    .simplices
                    .iter()
                    .any(|t| t.len() > s.len() && s.iter().all(|v| t.contains(v)))
            })
            .collect()
    }

    pub fn is_downward_closed(&self) -> bool {
        (0..self.vertex_count).all(|v| self.simplices.contains(&vec![v]))
            && self.simplices.iter().all(|s| {
                s.len() == 1
                    || (0..s.len()).all(|skip| {
                        let face: Vec<usize> = s
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != skip)
                            .map(|(_, &v)| v)
                            .collect();
                        self.simplices.contains(&face)
                    })
            })
    }
}

/// A vertex of the nerve: a residue of rank `|I| - 1`, i.e. over all colors
/// except `cotype`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NerveVertex {
    /// Position of the omitted color.
    pub cotype: usize,
    pub chambers: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Nerve {
    pub vertices: Vec<NerveVertex>,
    pub complex: SimplicialComplex,
}

/// The nerve of the covering by rank `|I| - 1` residues.
pub fn nerve(cs: &ChamberSystem) -> Nerve {
    let r = cs.rank();
    let mut vertices = Vec::new();
    // vertex_of[k][c]: nerve vertex of cotype k containing chamber c
    let mut vertex_of = vec![vec![usize::MAX; cs.len()]; r];
    for (k, slot) in vertex_of.iter_mut().enumerate() {
        let positions: Vec<usize> = (0..r).filter(|&x| x != k).collect();
        for residue in cs.residues_at(&positions) {
            for &c in &residue {
                slot[c] = vertices.len();
            }
            vertices.push(NerveVertex {
                cotype: k,
                chambers: residue,
            });
        }
    }
    // a set of residues has nonempty intersection iff some chamber lies in
    // all of them, so the chambers' residue tuples generate every simplex
    let faces = (0..cs.len()).map(|c| (0..r).map(|k| vertex_of[k][c]).collect::<Vec<_>>());
    let complex = SimplicialComplex::from_faces(vertices.len(), faces);
    Nerve { vertices, complex }
}

/// Whether every simplex `{R₀…R_k}` of the nerve has `⋂ R_i` equal to a
/// single residue over `⋂ J_i`.
pub fn residue_intersection_check(cs: &ChamberSystem) -> bool {
    let n = nerve(cs);
    let r = cs.rank();
    let ok = n.complex.simplices().all(|simplex| {
        let mut common: BTreeSet<usize> = n.vertices[simplex[0]].chambers.iter().copied().collect();
        let mut cotypes = BTreeSet::new();
        for &v in simplex {
            let members: BTreeSet<usize> = n.vertices[v].chambers.iter().copied().collect();
            common = common.intersection(&members).copied().collect();
            cotypes.insert(n.vertices[v].cotype);
        }
        let Some(&c) = common.iter().next() else {
            return false;
        };
        let j: Vec<usize> = (0..r).filter(|k| !cotypes.contains(k)).collect();
        cs.residue_at(c, &j).into_iter().collect::<BTreeSet<_>>() == common
    });
    ok
}

/// Undirected DOT graph: one vertex per chamber, one edge per unordered
/// pair of distinct chambers sharing a panel, colored by color index.
pub fn to_dot(cs: &ChamberSystem) -> String {
    let mut out = String::from("graph chambers {\n");
    for c in 0..cs.len() {
        let _ = writeln!(out, "  {c} [label=\"{}\"];", escape(&cs.label(c)));
    }
    let mut edges: BTreeMap<(usize, usize, usize), ()> = BTreeMap::new();
    for k in 0..cs.rank() {
        for panel in cs.panels(k) {
            for (i, &a) in panel.iter().enumerate() {
                for &b in &panel[i + 1..] {
                    edges.insert((a, b, k), ());
                }
            }
        }
    }
    for (a, b, k) in edges.into_keys() {
        let _ = writeln!(
            out,
            "  {a} -- {b} [color=\"{}\", label=\"{}\"];",
            PALETTE[k % PALETTE.len()],
            cs.colors()[k]
        );
    }
    out.push_str("}\n");
    out
}

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
