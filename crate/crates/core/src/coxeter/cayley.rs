use std::collections::HashMap;
use std::sync::Arc;

use super::word::{canonical_in, CoxeterElement, Word};
use super::CoxeterMatrix;
use crate::error::{Error, Result};

/// Default element cap for group enumeration.
pub const DEFAULT_CAP: usize = 10_000;

/// The right Cayley graph of a finite Coxeter group.
///
/// Elements are numbered in BFS order from the identity (index 0), which
/// is also ShortLex order of their canonical words.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    elements: Vec<Word>,
    succ: Vec<Vec<usize>>,
}

impl CayleyGraph {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Canonical (ShortLex-least) word of element `g`.
    pub fn word(&self, g: usize) -> &Word {
        &self.elements[g]
    }

    /// Index of `g · s_i`.
    pub fn succ(&self, g: usize, i: usize) -> usize {
        self.succ[g][i]
    }

    pub fn rank(&self) -> usize {
        self.succ.first().map_or(0, Vec::len)
    }

    /// `ℓ(g s_i) < ℓ(g)`.
    pub fn is_descent(&self, g: usize, i: usize) -> bool {
        self.length(self.succ[g][i]) < self.length(g)
    }

    /// Every reduced word of `g`, sorted. Their number grows quickly with
    /// the length of `g`.
    pub fn reduced_words(&self, g: usize) -> Vec<Word> {
        let mut memo: HashMap<usize, Vec<Word>> = HashMap::new();
        self.reduced_words_memo(g, &mut memo)
    }

    fn reduced_words_memo(&self, g: usize, memo: &mut HashMap<usize, Vec<Word>>) -> Vec<Word> {
        if g == 0 {
            return vec![Word::empty()];
        }
        if let Some(w) = memo.get(&g) {
            return w.clone();
        }
        let mut out = Vec::new();
        for i in 0..self.rank() {
            if self.is_descent(g, i) {
                for w in self.reduced_words_memo(self.succ[g][i], memo) {
                    out.push(w.concat(&Word::new(vec![i])));
                }
            }
        }
        out.sort();
        memo.insert(g, out.clone());
        out
    }

    pub fn length(&self, g: usize) -> usize {
        self.elements[g].len()
    }

    /// Walks `word` from the identity.
    pub fn evaluate(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |g, &i| self.succ[g][i])
    }

    /// Walks `word` from `g`: the index of `g · s_word`.
    pub fn right_multiply(&self, g: usize, word: &[usize]) -> usize {
        word.iter().fold(g, |acc, &i| self.succ[acc][i])
    }

    pub fn multiply(&self, g: usize, h: usize) -> usize {
        self.right_multiply(g, &self.elements[h])
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.evaluate(&self.elements[g].reversed())
    }
}

/// Gram matrix of the geometric representation, `B(α_i, α_j) = −cos(π/m_ij)`.
fn gram(cm: &CoxeterMatrix) -> Vec<Vec<f64>> {
    let n = cm.rank();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match cm.order(i, j) {
                    Some(1) => 1.0,
                    Some(m) => -(std::f64::consts::PI / f64::from(m)).cos(),
                    None => -1.0,
                })
                .collect()
        })
        .collect()
}

fn matrix_key(columns: &[Vec<f64>]) -> Vec<i64> {
    columns
        .iter()
        .flatten()
        .map(|x| (x * 1e6).round() as i64)
        .collect()
}

/// BFS enumeration of `W` by right multiplication. Elements are told apart
/// by their matrices in the geometric representation, held as the images
/// `g(α_j)` of the simple roots and compared after rounding.
pub fn enumerate_group(cm: &CoxeterMatrix, cap: usize) -> Result<CayleyGraph> {
    let rank = cm.rank();
    let b = gram(cm);
    let identity: Vec<Vec<f64>> = (0..rank)
        .map(|j| (0..rank).map(|i| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut lookup: HashMap<Vec<i64>, usize> = HashMap::new();
    lookup.insert(matrix_key(&identity), 0);
    let mut matrices = vec![identity];
    let mut elements = vec![Word::empty()];
    let mut succ = vec![vec![usize::MAX; rank]];

    let mut g = 0;
    while g < elements.len() {
        for s in 0..rank {
            if succ[g][s] != usize::MAX {
                continue;
            }
            // g s_s sends α_j to g(α_j) − 2B(α_s, α_j) g(α_s)
            let m = &matrices[g];
            let next: Vec<Vec<f64>> = (0..rank)
                .map(|j| {
                    (0..rank)
                        .map(|i| m[j][i] - 2.0 * b[s][j] * m[s][i])
                        .collect()
                })
                .collect();
            let key = matrix_key(&next);
            let target = match lookup.get(&key) {
                Some(&t) => t,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    let t = elements.len();
                    lookup.insert(key, t);
                    elements.push(elements[g].concat(&Word::new(vec![s])));
                    matrices.push(next);
                    succ.push(vec![usize::MAX; rank]);
                    t
                }
            };
            succ[g][s] = target;
            succ[target][s] = g;
        }
        g += 1;
    }
    Ok(CayleyGraph { elements, succ })
}

#[derive(Debug, Clone)]
enum Model {
    Finite(CayleyGraph),
    /// `m_01 = ∞`: elements are the alternating words.
    InfiniteDihedral,
}

/// A Coxeter system with a concrete model of its group: an enumerated
/// Cayley graph for finite `W`, or the exact alternating-word model for
/// the infinite dihedral group.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    matrix: Arc<CoxeterMatrix>,
    model: Model,
}

impl PartialEq for CoxeterSystem {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix, cap: usize) -> Result<Self> {
        let model = if matrix.is_infinite_dihedral() {
            Model::InfiniteDihedral
        } else {
            Model::Finite(enumerate_group(&matrix, cap)?)
        };
        Ok(CoxeterSystem {
            matrix: Arc::new(matrix),
            model,
        })
    }

    pub fn with_default_cap(matrix: CoxeterMatrix) -> Result<Self> {
        Self::new(matrix, DEFAULT_CAP)
    }

    pub fn matrix(&self) -> &Arc<CoxeterMatrix> {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.model, Model::Finite(_))
    }

    pub fn cayley(&self) -> Option<&CayleyGraph> {
        match &self.model {
            Model::Finite(c) => Some(c),
            Model::InfiniteDihedral => None,
        }
    }

    fn finite(&self) -> &CayleyGraph {
        self.cayley().expect("operation requires a finite Coxeter group")
    }

    /// `|W|`, or `None` when infinite.
    pub fn order(&self) -> Option<usize> {
        self.cayley().map(CayleyGraph::len)
    }

    pub fn identity(&self) -> CoxeterElement {
        CoxeterElement::from_canonical(Word::empty(), self.matrix.clone())
    }

    pub fn generator(&self, pos: usize) -> CoxeterElement {
        assert!(pos < self.rank());
        CoxeterElement::from_canonical(Word::new(vec![pos]), self.matrix.clone())
    }

    pub fn canonical(&self, word: &[usize]) -> CoxeterElement {
        match &self.model {
            Model::Finite(c) => self.element(c.evaluate(word)),
            Model::InfiniteDihedral => {
                canonical_in(&Word::new(word.to_vec()), &self.matrix).expect("free reduction")
            }
        }
    }

    pub fn canonical_labels(&self, labels: &[usize]) -> Result<CoxeterElement> {
        let w = self.matrix.word_from_labels(labels)?;
        Ok(self.canonical(&w))
    }

    /// Element with Cayley index `g` (finite groups only).
    pub fn element(&self, g: usize) -> CoxeterElement {
        CoxeterElement::from_canonical(self.finite().word(g).clone(), self.matrix.clone())
    }

    pub fn index_of(&self, e: &CoxeterElement) -> Option<usize> {
        self.cayley().map(|c| c.evaluate(e.word()))
    }

    pub fn multiply(&self, a: &CoxeterElement, b: &CoxeterElement) -> CoxeterElement {
        self.canonical(&a.word().concat(b.word()))
    }

    pub fn inverse(&self, a: &CoxeterElement) -> CoxeterElement {
        self.canonical(&a.word().reversed())
    }

    /// Length of the longest element, if finite.
    pub fn longest_length(&self) -> Option<usize> {
        self.cayley()
            .map(|c| (0..c.len()).map(|g| c.length(g)).max().unwrap_or(0))
    }

    /// Every reduced word of length at most `max_len`, grouped by element.
    pub fn reduced_words_up_to(&self, max_len: usize) -> Vec<(CoxeterElement, Vec<Word>)> {
        match &self.model {
            Model::Finite(c) => {
                // extend along ascents; elements come in length order
                let mut words: Vec<Vec<Word>> = vec![Vec::new(); c.len()];
                words[0].push(Word::empty());
                for g in 0..c.len() {
                    if c.length(g) >= max_len {
                        continue;
                    }
                    for i in 0..c.rank() {
                        let h = c.succ(g, i);
                        if c.length(h) > c.length(g) {
                            let grown: Vec<Word> = words[g].iter().map(|w| w.concat(&Word::new(vec![i]))).collect();
                            words[h].extend(grown);
                        }
                    }
                }
                (0..c.len())
                    .filter(|&g| c.length(g) <= max_len)
                    .map(|g| {
                        let mut ws = std::mem::take(&mut words[g]);
                        ws.sort();
                        (self.element(g), ws)
                    })
                    .collect()
            }
            Model::InfiniteDihedral => {
                let mut out = vec![(self.identity(), vec![Word::empty()])];
                for len in 1..=max_len {
                    for first in 0..2 {
                        let w = Word::new((0..len).map(|k| (first + k) % 2).collect());
                        out.push((
                            CoxeterElement::from_canonical(w.clone(), self.matrix.clone()),
                            vec![w],
                        ));
                    }
                }
                out
            }
        }
    }

    /// All elements in ShortLex order (finite groups only).
    pub fn elements(&self) -> impl Iterator<Item = CoxeterElement> + '_ {
        (0..self.finite().len()).map(|g| self.element(g))
    }
}
