use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Deref;
use std::sync::Arc;

use super::CoxeterMatrix;
use crate::error::{Error, Result};

/// Largest braid-move class explored by the closure algorithm.
pub const CLOSURE_CAP: usize = 500_000;

/// A word in the generators, stored as generator positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    fn check(&self, cm: &CoxeterMatrix) -> Result<()> {
        match self.0.iter().find(|&&i| i >= cm.rank()) {
            Some(i) => Err(Error::OutOfRange(format!(
                "generator position {i} in a rank {} system",
                cm.rank()
            ))),
            None => Ok(()),
        }
    }
}

impl Deref for Word {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// An element of `W`, held as its ShortLex-least reduced word.
#[derive(Debug, Clone)]
pub struct CoxeterElement {
    word: Word,
    matrix: Arc<CoxeterMatrix>,
}

impl CoxeterElement {
    /// Wraps a word the caller knows to be the canonical form.
    pub(crate) fn from_canonical(word: Word, matrix: Arc<CoxeterMatrix>) -> Self {
        CoxeterElement { word, matrix }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn matrix(&self) -> &Arc<CoxeterMatrix> {
        &self.matrix
    }

    /// Generator labels of the canonical word.
    pub fn labels(&self) -> Vec<usize> {
        self.matrix.word_labels(&self.word)
    }
}

impl PartialEq for CoxeterElement {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
            && (Arc::ptr_eq(&self.matrix, &other.matrix) || self.matrix == other.matrix)
    }
}

impl Eq for CoxeterElement {}

impl Hash for CoxeterElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

impl fmt::Display for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.matrix.format_word(&self.word))
    }
}

/// Words reachable from `word` by one braid move `s_i s_j s_i… → s_j s_i s_j…`.
fn braid_neighbors(word: &[usize], cm: &CoxeterMatrix) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for start in 0..word.len() {
        let a = word[start];
        for b in 0..cm.rank() {
            if b == a {
                continue;
            }
            let Some(m) = cm.order(a, b) else { continue };
            let m = m as usize;
            if start + m > word.len() {
                continue;
            }
            let alternates = (0..m).all(|k| word[start + k] == if k % 2 == 0 { a } else { b });
            if alternates {
                let mut next = word.to_vec();
                for k in 0..m {
                    next[start + k] = if k % 2 == 0 { b } else { a };
                }
                out.push(next);
            }
        }
    }
    out
}

/// Every word obtainable from `word` by braid moves alone.
pub fn braid_closure(word: &Word, cm: &CoxeterMatrix, cap: usize) -> Result<Vec<Word>> {
    word.check(cm)?;
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.0.clone());
    queue.push_back(word.0.clone());
    while let Some(w) = queue.pop_front() {
        for next in braid_neighbors(&w, cm) {
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded(cap));
                }
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Word> = seen.into_iter().map(Word).collect();
    out.sort();
    Ok(out)
}

fn free_reduce(word: &[usize]) -> Vec<usize> {
    let mut stack: Vec<usize> = Vec::with_capacity(word.len());
    for &x in word {
        if stack.last() == Some(&x) {
            stack.pop();
        } else {
            stack.push(x);
        }
    }
    stack
}

/// Tits' solution to the word problem: explore the braid class of the
/// current word; if any member has a repeated adjacent letter, cancel it
/// and start again, otherwise the class is the set of reduced words.
/// Returns the reduced words of the element, sorted (ShortLex within one length).
pub(crate) fn tits_reduced_words(word: &Word, cm: &CoxeterMatrix, cap: usize) -> Result<Vec<Word>> {
    word.check(cm)?;
    let mut current = word.0.clone();
    'restart: loop {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(current.clone());
        queue.push_back(current.clone());
        while let Some(w) = queue.pop_front() {
            if let Some(k) = (0..w.len().saturating_sub(1)).find(|&k| w[k] == w[k + 1]) {
                let mut shorter = w;
                shorter.drain(k..k + 2);
                current = shorter;
                continue 'restart;
            }
            for next in braid_neighbors(&w, cm) {
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<Word> = seen.into_iter().map(Word).collect();
        out.sort();
        return Ok(out);
    }
}

/// ShortLex-least reduced word of the element represented by `w`.
///
/// Works for any Coxeter matrix as long as the braid classes met stay
/// under [`CLOSURE_CAP`]; the infinite dihedral group uses free reduction.
pub fn canonical(w: &Word, cm: &CoxeterMatrix) -> Result<CoxeterElement> {
    let matrix = Arc::new(cm.clone());
    canonical_in(w, &matrix)
}

pub(crate) fn canonical_in(w: &Word, cm: &Arc<CoxeterMatrix>) -> Result<CoxeterElement> {
    w.check(cm)?;
    let word = if cm.is_infinite_dihedral() {
        Word(free_reduce(w))
    } else {
        tits_reduced_words(w, cm, CLOSURE_CAP)?
            .into_iter()
            .next()
            .expect("closure contains the start word")
    };
    Ok(CoxeterElement::from_canonical(word, cm.clone()))
}

pub fn words_equal(w1: &Word, w2: &Word, cm: &CoxeterMatrix) -> Result<bool> {
    // w1 = w2 iff w1 · w2⁻¹ = 1
    let probe = w1.concat(&w2.reversed());
    Ok(canonical(&probe, cm)?.is_identity())
}

pub fn is_reduced(w: &Word, cm: &CoxeterMatrix) -> Result<bool> {
    Ok(canonical(w, cm)?.len() == w.len())
}
