//! Permutations of `{1..n}`, composed right to left as maps.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::FpMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    // images[i] = π(i + 1) - 1
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From one-based images `[π(1), …, π(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
            zero_based.push(x - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x)
        });
        Permutation { images }
    }

    /// The transposition `(i, j)`, one-based.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::OutOfRange(format!("transposition ({i},{j}) in S_{n}")));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, j - 1);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `π(i)` for one-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inversions(&self) -> usize {
        let n = self.degree();
        (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }

    /// A reduced word `i₁…i_k` (one-based generator labels, `s_i = (i, i+1)`)
    /// with `s_{i₁}∘…∘s_{i_k} = self`. Peels off right descents.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut current = self.images.clone();
        let mut rev = Vec::new();
        loop {
            let Some(i) = (0..current.len().saturating_sub(1)).find(|&i| current[i] > current[i + 1])
            else {
                break;
            };
            // π = (π ∘ s_i) ∘ s_i and ℓ(π ∘ s_i) = ℓ(π) - 1
            current.swap(i, i + 1);
            rev.push(i + 1);
        }
        rev.reverse();
        rev
    }

    /// The permutation matrix `Σ_j e_{π(j), j}`.
    pub fn matrix(&self, p: u32) -> Result<FpMatrix> {
        let n = self.degree();
        let mut m = FpMatrix::zeros(n, n, p)?;
        for (j, &i) in self.images.iter().enumerate() {
            m.set(i, j, 1);
        }
        Ok(m)
    }

    /// Disjoint cycles of length ≥ 2, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// All of `S_n`, sorted.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=n).collect();
    permute(&mut current, 0, &mut out);
    out.sort();
    out
}

fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<Permutation>) {
    if k == v.len() {
        out.push(Permutation::from_images(v).expect("a permutation"));
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Composes `s_{w₁} ∘ … ∘ s_{w_k}` in `S_{n+1}`, where `s_i = (i, i+1)` and
/// the word holds labels `1..=n`.
pub fn type_a_permutation(word: &[usize], n: usize) -> Result<Permutation> {
    let mut images: Vec<usize> = (0..=n).collect();
    // right to left: the rightmost letter acts first, so fold from the left
    // by post-composing, i.e. π ← π ∘ s_i.
    for &i in word {
        if i == 0 || i > n {
            return Err(Error::OutOfRange(format!("generator s{i} with n = {n}")));
        }
        images.swap(i - 1, i);
    }
    Ok(Permutation::from_zero_based(images))
}
