//! Coxeter systems `(W, S)`.
//!
//! A [`CoxeterMatrix`] carries the generator labels and the orders
//! `m_ij`. Words are sequences of generator *positions*; labels are only
//! used for parsing and display. Two independent routes to the word
//! problem are provided: Tits' braid/nil-move closure ([`canonical`]) and
//! table lookup in an enumerated Cayley graph ([`CoxeterSystem`]).

mod cayley;
mod word;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cayley::{enumerate_group, CayleyGraph, CoxeterSystem, DEFAULT_CAP};
pub use word::{
    braid_closure, canonical, is_reduced, words_equal, CoxeterElement, Word, CLOSURE_CAP,
};

/// Label on an edge of a Coxeter symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeLabel {
    /// An unlabeled edge, `m = 3`.
    Plain,
    Finite(u32),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolEdge {
    pub i: usize,
    pub j: usize,
    pub label: EdgeLabel,
}

impl SymbolEdge {
    pub fn plain(i: usize, j: usize) -> Self {
        SymbolEdge {
            i,
            j,
            label: EdgeLabel::Plain,
        }
    }

    pub fn labeled(i: usize, j: usize, m: u32) -> Self {
        SymbolEdge {
            i,
            j,
            label: EdgeLabel::Finite(m),
        }
    }

    pub fn infinite(i: usize, j: usize) -> Self {
        SymbolEdge {
            i,
            j,
            label: EdgeLabel::Infinite,
        }
    }
}

/// The Coxeter matrix `m_ij`; `None` stands for `∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoxeterMatrix {
    labels: Vec<usize>,
    orders: Vec<Vec<Option<u32>>>,
}

impl CoxeterMatrix {
    pub fn new(labels: Vec<usize>, orders: Vec<Vec<Option<u32>>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidSymbol("no generators".into()));
        }
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted != labels {
            return Err(Error::InvalidSymbol(format!(
                "labels {labels:?} must be strictly increasing"
            )));
        }
        if orders.len() != n || orders.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidSymbol("matrix shape does not match labels".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let m = orders[i][j];
                if m != orders[j][i] {
                    return Err(Error::InvalidSymbol(format!("m[{i}][{j}] is not symmetric")));
                }
                match (i == j, m) {
                    (true, Some(1)) => {}
                    (true, _) => {
                        return Err(Error::InvalidSymbol(format!("m[{i}][{i}] must be 1")))
                    }
                    (false, Some(v)) if v < 2 => {
                        return Err(Error::InvalidSymbol(format!(
                            "m[{i}][{j}] = {v} but off-diagonal orders are at least 2"
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(CoxeterMatrix { labels, orders })
    }

    /// Type `A_n` with labels `1..=n`.
    pub fn type_a(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| SymbolEdge::plain(i, i + 1)).collect();
        symbol_to_matrix(&(1..=n).collect::<Vec<_>>(), &edges).expect("valid A_n symbol")
    }

    /// Type `B_n = C_n` with labels `1..=n` and `m_{n-1,n} = 4`.
    pub fn type_c(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n.saturating_sub(1))
            .map(|i| SymbolEdge::plain(i, i + 1))
            .collect();
        if n >= 2 {
            edges.push(SymbolEdge::labeled(n - 1, n, 4));
        }
        symbol_to_matrix(&(1..=n).collect::<Vec<_>>(), &edges).expect("valid C_n symbol")
    }

    /// Dihedral `I_2(m)` on labels `1, 2`.
    pub fn dihedral(m: u32) -> Result<Self> {
        Self::new(vec![1, 2], vec![vec![Some(1), Some(m)], vec![Some(m), Some(1)]])
    }

    /// `H_3`: path 1–2–3 with the second edge labeled 5.
    pub fn h3() -> Self {
        symbol_to_matrix(
            &[1, 2, 3],
            &[SymbolEdge::plain(1, 2), SymbolEdge::labeled(2, 3, 5)],
        )
        .expect("valid H3 symbol")
    }

    /// The affine `Ã_1` system on labels `0, 1` with `m_01 = ∞`.
    pub fn infinite_dihedral() -> Self {
        symbol_to_matrix(&[0, 1], &[SymbolEdge::infinite(0, 1)]).expect("valid symbol")
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, pos: usize) -> usize {
        self.labels[pos]
    }

    pub fn position(&self, label: usize) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    /// `m_ij` by generator position; `None` is `∞`.
    pub fn order(&self, i: usize, j: usize) -> Option<u32> {
        self.orders[i][j]
    }

    pub fn orders(&self) -> &[Vec<Option<u32>>] {
        &self.orders
    }

    /// Rank two with an infinite bond: the exact model applies.
    pub fn is_infinite_dihedral(&self) -> bool {
        self.rank() == 2 && self.orders[0][1].is_none()
    }

    /// Translates generator labels into a word over positions.
    pub fn word_from_labels(&self, labels: &[usize]) -> Result<Word> {
        labels
            .iter()
            .map(|&l| {
                self.position(l)
                    .ok_or_else(|| Error::OutOfRange(format!("no generator s{l}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    pub fn word_labels(&self, word: &Word) -> Vec<usize> {
        word.iter().map(|&i| self.labels[i]).collect()
    }

    /// `"s1 s2 s1"`, or `"e"` for the empty word.
    pub fn format_word(&self, word: &Word) -> String {
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter()
            .map(|&i| format!("s{}", self.labels[i]))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses `"s1 s2 s1"`, `"s1s2s1"` or `"e"`.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text == "e" || text.is_empty() {
            return Ok(Word::new(vec![]));
        }
        let mut labels = Vec::new();
        for part in text.split('s').map(str::trim).filter(|p| !p.is_empty()) {
            labels.push(
                part.parse::<usize>()
                    .map_err(|_| Error::Invalid(format!("bad word {text:?}")))?,
            );
        }
        if !text.trim_start().starts_with('s') {
            return Err(Error::Invalid(format!("bad word {text:?}")));
        }
        self.word_from_labels(&labels)
    }

    /// Symbol text: one `i j` / `i j m` / `i j inf` line per edge, plus a
    /// bare `i` line for every generator not on any edge.
    pub fn to_symbol_text(&self) -> String {
        let mut out = String::new();
        let n = self.rank();
        let mut on_edge = vec![false; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let (a, b) = (self.labels[i], self.labels[j]);
                let line = match self.orders[i][j] {
                    Some(2) => continue,
                    Some(3) => format!("{a} {b}\n"),
                    Some(m) => format!("{a} {b} {m}\n"),
                    None => format!("{a} {b} inf\n"),
                };
                on_edge[i] = true;
                on_edge[j] = true;
                out.push_str(&line);
            }
        }
        for i in 0..n {
            if !on_edge[i] {
                out.push_str(&format!("{}\n", self.labels[i]));
            }
        }
        out
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.orders {
            let cells: Vec<String> = row
                .iter()
                .map(|m| m.map_or("inf".to_string(), |v| v.to_string()))
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Builds the Coxeter matrix from a symbol: unlabeled edges give `m = 3`,
/// absent pairs `m = 2`. Generators are `nodes` together with every edge
/// endpoint.
pub fn symbol_to_matrix(nodes: &[usize], edges: &[SymbolEdge]) -> Result<CoxeterMatrix> {
    let mut labels: Vec<usize> = nodes.to_vec();
    for e in edges {
        if e.i == e.j {
            return Err(Error::InvalidSymbol(format!("loop at node {}", e.i)));
        }
        labels.push(e.i);
        labels.push(e.j);
    }
    labels.sort_unstable();
    labels.dedup();
    let n = labels.len();
    let pos = |l: usize| labels.binary_search(&l).expect("label collected");
    let mut orders = vec![vec![Some(2); n]; n];
    for (i, row) in orders.iter_mut().enumerate() {
        row[i] = Some(1);
    }
    let mut seen = std::collections::HashSet::new();
    for e in edges {
        let m = match e.label {
            EdgeLabel::Plain => Some(3),
            EdgeLabel::Finite(m) if m >= 4 => Some(m),
            EdgeLabel::Finite(m) => {
                return Err(Error::InvalidSymbol(format!(
                    "edge {}-{} labeled {m}: labels must be at least 4 or inf",
                    e.i, e.j
                )))
            }
            EdgeLabel::Infinite => None,
        };
        let (a, b) = (pos(e.i), pos(e.j));
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(Error::InvalidSymbol(format!("edge {}-{} listed twice", e.i, e.j)));
        }
        orders[a][b] = m;
        orders[b][a] = m;
    }
    CoxeterMatrix::new(labels, orders)
}

/// Parses the symbol text format. Blank lines and `#` comments are skipped.
pub fn parse_symbol(text: &str) -> Result<CoxeterMatrix> {
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || Error::InvalidSymbol(format!("line {}: {raw:?}", lineno + 1));
        let fields: Vec<&str> = line.split_whitespace().collect();
        let index = |s: &str| s.parse::<usize>().map_err(|_| bad());
        match fields.as_slice() {
            [i] => nodes.push(index(i)?),
            [i, j] => edges.push(SymbolEdge::plain(index(i)?, index(j)?)),
            [i, j, m] => {
                let label = if m.eq_ignore_ascii_case("inf") || *m == "∞" {
                    EdgeLabel::Infinite
                } else {
                    EdgeLabel::Finite(m.parse::<u32>().map_err(|_| bad())?)
                };
                edges.push(SymbolEdge {
                    i: index(i)?,
                    j: index(j)?,
                    label,
                });
            }
            _ => return Err(bad()),
        }
    }
    symbol_to_matrix(&nodes, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_examples() {
        let a2 = symbol_to_matrix(&[], &[SymbolEdge::plain(1, 2)]).unwrap();
        assert_eq!(a2.labels(), &[1, 2]);
        assert_eq!(a2.order(0, 1), Some(3));

        let inf = symbol_to_matrix(&[], &[SymbolEdge::infinite(0, 1)]).unwrap();
        assert_eq!(inf.order(0, 1), None);
        assert!(inf.is_infinite_dihedral());

        let h3 = CoxeterMatrix::h3();
        assert_eq!(h3.order(0, 1), Some(3));
        assert_eq!(h3.order(1, 2), Some(5));
        assert_eq!(h3.order(0, 2), Some(2));
    }

    #[test]
    fn explicit_small_labels_rejected() {
        for m in [1, 2, 3] {
            assert!(matches!(
                symbol_to_matrix(&[], &[SymbolEdge::labeled(1, 2, m)]),
                Err(Error::InvalidSymbol(_))
            ));
        }
        assert!(symbol_to_matrix(&[], &[SymbolEdge::plain(1, 1)]).is_err());
    }

    #[test]
    fn matrix_validation() {
        assert!(CoxeterMatrix::new(vec![1, 2], vec![vec![Some(1), Some(3)], vec![Some(4), Some(1)]]).is_err());
        assert!(CoxeterMatrix::new(vec![1, 2], vec![vec![Some(1), Some(1)], vec![Some(1), Some(1)]]).is_err());
        assert!(CoxeterMatrix::new(vec![2, 1], vec![vec![Some(1), Some(3)], vec![Some(3), Some(1)]]).is_err());
    }

    #[test]
    fn parse_symbol_text() {
        let cm = parse_symbol("# H3\n1 2\n2 3 5\n").unwrap();
        assert_eq!(cm, CoxeterMatrix::h3());
        let inf = parse_symbol("0 1 inf").unwrap();
        assert_eq!(inf, CoxeterMatrix::infinite_dihedral());
        let a1a1 = parse_symbol("1\n2\n").unwrap();
        assert_eq!(a1a1.order(0, 1), Some(2));
        assert!(parse_symbol("1 2 3").is_err());
        assert!(parse_symbol("1 2 x").is_err());
        assert!(parse_symbol("1 2 3 4").is_err());
    }

    #[test]
    fn symbol_text_roundtrip() {
        for cm in [
            CoxeterMatrix::type_a(3),
            CoxeterMatrix::type_c(3),
            CoxeterMatrix::h3(),
            CoxeterMatrix::infinite_dihedral(),
            parse_symbol("1\n2").unwrap(),
        ] {
            assert_eq!(parse_symbol(&cm.to_symbol_text()).unwrap(), cm);
        }
    }

    #[test]
    fn word_text() {
        let a2 = CoxeterMatrix::type_a(2);
        let w = a2.parse_word("s1 s2 s1").unwrap();
        assert_eq!(w.as_slice(), &[0, 1, 0]);
        assert_eq!(a2.format_word(&w), "s1 s2 s1");
        assert_eq!(a2.parse_word("s2s1").unwrap().as_slice(), &[1, 0]);
        assert!(a2.parse_word("e").unwrap().is_empty());
        assert!(a2.parse_word("s3").is_err());
        assert!(a2.parse_word("12").is_err());
    }
}
