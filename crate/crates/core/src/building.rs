//! W-metric buildings, the (B1)/(B2) and (B1′)/(B2′) checkers, apartments,
//! and the W-distance recovered from an apartment system.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;

use crate::chamber::{ChamberSystem, Gallery};
use crate::complex::CoxeterComplex;
use crate::coxeter::{CoxeterElement, CoxeterSystem, Word};
use crate::error::{Error, Result};
use crate::report::{Report, MAX_LISTED_VIOLATIONS};

/// A chamber system with a `W`-valued distance table.
#[derive(Debug, Clone)]
pub struct WMetricBuilding {
    cs: ChamberSystem,
    system: Arc<CoxeterSystem>,
    delta: Vec<CoxeterElement>,
}

impl WMetricBuilding {
    /// `delta` is row-major, `delta[c·N + c′] = δ(c, c′)`. Checks the
    /// diagonal, inverse and adjacency laws.
    pub fn new(
        cs: ChamberSystem,
        system: Arc<CoxeterSystem>,
        delta: Vec<CoxeterElement>,
    ) -> Result<Self> {
        let n = cs.len();
        if cs.colors() != system.matrix().labels() {
            return Err(Error::Invalid(format!(
                "chamber colors {:?} differ from generator labels {:?}",
                cs.colors(),
                system.matrix().labels()
            )));
        }
        if delta.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "delta table of {} entries for {n} chambers",
                delta.len()
            )));
        }
        let b = WMetricBuilding { cs, system, delta };
        for c in 0..n {
            if !b.delta(c, c).is_identity() {
                return Err(Error::Invalid(format!("delta({c}, {c}) is not the identity")));
            }
            for d in (c + 1)..n {
                let forward = b.delta(c, d);
                if &b.system.inverse(forward) != b.delta(d, c) {
                    return Err(Error::Invalid(format!(
                        "delta({d}, {c}) is not the inverse of delta({c}, {d})"
                    )));
                }
                let adjacent = b.cs.adjacency_colors(c, d);
                let generator = (forward.len() == 1).then(|| forward.word()[0]);
                let consistent = match generator {
                    Some(k) => adjacent == [k],
                    None => adjacent.is_empty(),
                };
                if !consistent {
                    return Err(Error::Invalid(format!(
                        "delta({c}, {d}) = {forward} but adjacency colors are {adjacent:?}"
                    )));
                }
            }
        }
        Ok(b)
    }

    pub fn from_fn<F>(cs: ChamberSystem, system: Arc<CoxeterSystem>, f: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> CoxeterElement + Sync,
    {
        let n = cs.len();
        let delta = (0..n * n)
            .into_par_iter()
            .map(|k| f(k / n, k % n))
            .collect();
        Self::new(cs, system, delta)
    }

    /// The thin building on `W` itself.
    pub fn from_complex(cc: &CoxeterComplex) -> Result<Self> {
        Self::from_fn(cc.chambers().clone(), cc.system().clone(), |g, h| {
            cc.element(cc.delta_index(g, h))
        })
    }

    pub fn chambers(&self) -> &ChamberSystem {
        &self.cs
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.system
    }

    pub fn len(&self) -> usize {
        self.cs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cs.is_empty()
    }

    pub fn delta(&self, c: usize, d: usize) -> &CoxeterElement {
        &self.delta[c * self.cs.len() + d]
    }

    pub fn try_delta(&self, c: usize, d: usize) -> Result<&CoxeterElement> {
        let n = self.len();
        if c >= n || d >= n {
            return Err(Error::OutOfRange(format!("chambers {c}, {d} of {n}")));
        }
        Ok(self.delta(c, d))
    }

    pub fn delta_table(&self) -> &[CoxeterElement] {
        &self.delta
    }

    /// Restriction to `keep` (renumbered in the order given).
    pub fn induced(&self, keep: &[usize]) -> Result<Self> {
        let cs = self.cs.induced(keep)?;
        let delta = keep
            .iter()
            .flat_map(|&c| keep.iter().map(move |&d| self.delta(c, d).clone()))
            .collect();
        Self::new(cs, self.system.clone(), delta)
    }
}

/// Fixed-width set of chamber ids.
#[derive(Clone, PartialEq, Eq)]
struct Bitset(Vec<u64>);

impl Bitset {
    fn new(n: usize) -> Self {
        Bitset(vec![0; n.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] & (1 << (i % 64)) != 0
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w & (1 << b) != 0).map(move |b| k * 64 + b)
        })
    }

    fn first_difference(&self, other: &Bitset) -> Option<usize> {
        self.0
            .iter()
            .zip(&other.0)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(k, (a, b))| k * 64 + (a ^ b).trailing_zeros() as usize)
    }
}

/// (B1): every panel has at least two chambers, or three when `thick`.
pub fn check_b1_chambers(cs: &ChamberSystem, thick: bool) -> Report {
    let mut report = Report::new(if thick { "B1-thick" } else { "B1" });
    let need = if thick { 3 } else { 2 };
    let mut sizes: BTreeMap<usize, u64> = BTreeMap::new();
    let mut panels = 0;
    for k in 0..cs.rank() {
        for panel in cs.panels(k) {
            panels += 1;
            *sizes.entry(panel.len()).or_insert(0) += 1;
            if panel.len() < need {
                report.violation(format!(
                    "panel of color {} through chamber {} has {} chamber(s)",
                    cs.colors()[k],
                    panel[0],
                    panel.len()
                ));
            }
        }
    }
    report.count("panels", panels);
    for (size, count) in sizes {
        report.count(&format!("panels_of_size_{size}"), count);
    }
    report
}

pub fn check_b1(b: &WMetricBuilding, thick: bool) -> Report {
    check_b1_chambers(b.chambers(), thick)
}

#[derive(Default)]
struct TrieNode {
    children: Vec<(usize, usize)>,
    element: Option<usize>,
    word: Word,
}

/// Prefix tree of the reduced words, each leaf or inner node tagged with
/// the element its word represents.
fn build_trie(words: &[(usize, Word)]) -> Vec<TrieNode> {
    let mut nodes = vec![TrieNode::default()];
    for (e, w) in words {
        let mut at = 0;
        for (depth, &letter) in w.iter().enumerate() {
            at = match nodes[at].children.iter().find(|&&(l, _)| l == letter) {
                Some(&(_, child)) => child,
                None => {
                    let child = nodes.len();
                    nodes.push(TrieNode {
                        word: Word::new(w[..=depth].to_vec()),
                        ..Default::default()
                    });
                    nodes[at].children.push((letter, child));
                    child
                }
            };
        }
        nodes[at].element = Some(*e);
    }
    nodes
}

/// (B2): for every pair `c, c′` and every reduced word `f`,
/// `δ(c, c′) = s_f` iff some gallery of type `f` joins `c` to `c′`.
///
/// For finite `W` every reduced word is checked. For the infinite dihedral
/// group the words run one letter past the longest distance in the table,
/// so longer types must reach nothing.
pub fn check_b2(b: &WMetricBuilding) -> Report {
    let mut report = Report::new("B2");
    let sys = b.system();
    let bound = match sys.longest_length() {
        Some(l) => l,
        None => b.delta_table().iter().map(CoxeterElement::len).max().unwrap_or(0) + 1,
    };
    let grouped = sys.reduced_words_up_to(bound);
    let elements: Vec<CoxeterElement> = grouped.iter().map(|(e, _)| e.clone()).collect();
    let lookup: HashMap<&CoxeterElement, usize> =
        elements.iter().enumerate().map(|(k, e)| (e, k)).collect();
    let words: Vec<(usize, Word)> = grouped
        .iter()
        .enumerate()
        .flat_map(|(k, (_, ws))| ws.iter().map(move |w| (k, w.clone())))
        .collect();
    let trie = build_trie(&words);
    let n = b.len();
    let cs = b.chambers();
    let cm = sys.matrix();

    let per_chamber: Vec<(Vec<String>, u64)> = (0..n)
        .into_par_iter()
        .map(|c| {
            let mut msgs = Vec::new();
            let mut bad = 0u64;
            let mut fibers = vec![Bitset::new(n); elements.len()];
            for d in 0..n {
                match lookup.get(b.delta(c, d)) {
                    Some(&e) => fibers[e].insert(d),
                    None => {
                        bad += 1;
                        msgs.push(format!(
                            "delta({c}, {d}) = {} exceeds the word bound {bound}",
                            b.delta(c, d)
                        ));
                    }
                }
            }
            let mut start = Bitset::new(n);
            start.insert(c);
            let mut stack = vec![(0usize, start)];
            while let Some((node, reach)) = stack.pop() {
                if let Some(e) = trie[node].element {
                    if let Some(d) = reach.first_difference(&fibers[e]) {
                        bad += 1;
                        if msgs.len() < MAX_LISTED_VIOLATIONS {
                            let gallery = reach.contains(d);
                            msgs.push(format!(
                                "c={c} c'={d} type {}: delta = {}, gallery of that type {}",
                                cm.format_word(&trie[node].word),
                                b.delta(c, d),
                                if gallery { "exists" } else { "missing" }
                            ));
                        }
                    }
                }
                for &(letter, child) in &trie[node].children {
                    let mut next = Bitset::new(n);
                    for x in reach.iter() {
                        for &y in cs.panel_at(x, letter) {
                            if y != x {
                                next.insert(y);
                            }
                        }
                    }
                    stack.push((child, next));
                }
            }
            (msgs, bad)
        })
        .collect();

    report.count("chambers", n as u64);
    report.count("reduced_words", words.len() as u64);
    report.count("pairs", (n * n) as u64);
    report.count("word_bound", bound as u64);
    let mut total = 0;
    for (msgs, bad) in per_chamber {
        total += bad;
        for m in msgs {
            report.violation(m);
        }
    }
    report.pass = total == 0;
    report.count("violations", total);
    report
}

/// Exhibits `c ∼_i c′` in a thick panel with a gallery `c → x → c′` of the
/// non-reduced type `i i`, while `δ(c, c′) = s_i ≠ s_i s_i`.
pub fn non_reduced_caveat_check(b: &WMetricBuilding) -> Result<Report> {
    let cs = b.chambers();
    for k in 0..cs.rank() {
        let Some(panel) = cs.panels(k).iter().find(|p| p.len() >= 3) else {
            continue;
        };
        let (c, x, d) = (panel[0], panel[1], panel[2]);
        let color = cs.colors()[k];
        let mut report = Report::new("non-reduced caveat");
        let gallery = Gallery {
            chambers: vec![c, x, d],
            types: vec![color, color],
        };
        if !cs.is_gallery(&gallery) {
            report.violation(format!("{c} -> {x} -> {d} is not a gallery"));
        }
        let s = b.system().generator(k);
        let ss = b.system().canonical(&[k, k]);
        if b.delta(c, d) != &s {
            report.violation(format!("delta({c}, {d}) = {} is not s{color}", b.delta(c, d)));
        }
        if ss == s {
            report.violation(format!("s{color} s{color} equals s{color}"));
        }
        report.count("c", c as u64);
        report.count("via", x as u64);
        report.count("c_prime", d as u64);
        report.count("color", color as u64);
        return Ok(report);
    }
    Err(Error::NoThickPanel)
}

/// An injective, adjacency-preserving map from a Coxeter complex into a
/// chamber system.
#[derive(Debug, Clone)]
pub struct ApartmentEmbedding {
    complex: Arc<CoxeterComplex>,
    map: Vec<usize>,
    preimage: HashMap<usize, usize>,
}

impl ApartmentEmbedding {
    pub fn new(complex: Arc<CoxeterComplex>, target: &ChamberSystem, map: Vec<usize>) -> Result<Self> {
        if map.len() != complex.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} chambers",
                map.len(),
                complex.len()
            )));
        }
        if target.colors() != complex.chambers().colors() {
            return Err(Error::Invalid("apartment colors differ from the target's".into()));
        }
        let mut preimage = HashMap::with_capacity(map.len());
        for (g, &c) in map.iter().enumerate() {
            if c >= target.len() {
                return Err(Error::OutOfRange(format!("chamber {c} of {}", target.len())));
            }
            if preimage.insert(c, g).is_some() {
                return Err(Error::Invalid(format!("chamber {c} hit twice")));
            }
        }
        let cayley = complex.cayley();
        for g in 0..map.len() {
            for k in 0..cayley.rank() {
                if !target.adjacent_at(map[g], map[cayley.succ(g, k)], k) {
                    return Err(Error::Invalid(format!(
                        "chambers {} and {} should be adjacent",
                        map[g],
                        map[cayley.succ(g, k)]
                    )));
                }
            }
        }
        Ok(ApartmentEmbedding {
            complex,
            map,
            preimage,
        })
    }

    pub fn complex(&self) -> &Arc<CoxeterComplex> {
        &self.complex
    }

    /// Image of the Coxeter complex chamber (Cayley index) `g`.
    pub fn map(&self, g: usize) -> usize {
        self.map[g]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn preimage(&self, c: usize) -> Option<usize> {
        self.preimage.get(&c).copied()
    }

    pub fn contains(&self, c: usize) -> bool {
        self.preimage.contains_key(&c)
    }

    /// Sorted image.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.map.clone();
        v.sort_unstable();
        v
    }
}

fn shared_complex(apartments: &[ApartmentEmbedding]) -> Result<&Arc<CoxeterComplex>> {
    let first = apartments
        .first()
        .ok_or_else(|| Error::Invalid("empty apartment system".into()))?;
    let m = first.complex.system().matrix();
    if apartments
        .iter()
        .any(|a| a.complex.system().matrix() != m)
    {
        return Err(Error::Invalid("apartments of different types".into()));
    }
    Ok(&first.complex)
}

/// (B1′): every pair of chambers lies in a common apartment.
pub fn check_b1_prime(cs: &ChamberSystem, apartments: &[ApartmentEmbedding]) -> Report {
    let mut report = Report::new("B1'");
    let n = cs.len();
    let mut covered = vec![Bitset::new(n); n];
    for a in apartments {
        for &c in &a.map {
            for &d in &a.map {
                covered[c].insert(d);
            }
        }
    }
    for (c, row) in covered.iter().enumerate() {
        for d in c..n {
            if !row.contains(d) {
                report.violation(format!("chambers {c} and {d} share no apartment"));
            }
        }
    }
    report.count("apartments", apartments.len() as u64);
    report.count("chambers", n as u64);
    report
}

/// (B2′): for apartments `α, β` with a common chamber, some isomorphism
/// `A_α → A_β` fixes `A_α ∩ A_β`. Colored isomorphisms of a Coxeter complex
/// are left translations, and a common chamber `α(g₀) = β(h₀)` pins the
/// translation to `w = h₀g₀⁻¹`, so that single candidate is tested.
pub fn check_b2_prime(apartments: &[ApartmentEmbedding]) -> Report {
    let mut report = Report::new("B2'");
    report.count("apartments", apartments.len() as u64);
    let complex = match shared_complex(apartments) {
        Ok(c) => c,
        Err(e) => {
            report.violation(e.to_string());
            return report;
        }
    };
    let cayley = complex.cayley();
    let results: Vec<(u64, Vec<String>)> = (0..apartments.len())
        .into_par_iter()
        .map(|x| {
            let alpha = &apartments[x];
            let mut overlapping = 0;
            let mut msgs = Vec::new();
            for (y, beta) in apartments.iter().enumerate() {
                if x == y {
                    continue;
                }
                let common: Vec<(usize, usize)> = alpha
                    .map
                    .iter()
                    .enumerate()
                    .filter_map(|(g, c)| beta.preimage(*c).map(|h| (g, h)))
                    .collect();
                let Some(&(g0, h0)) = common.first() else {
                    continue;
                };
                overlapping += 1;
                let w = cayley.multiply(h0, cayley.inverse(g0));
                if let Some(&(g, _)) = common.iter().find(|&&(g, h)| cayley.multiply(w, g) != h) {
                    msgs.push(format!(
                        "apartments {x} and {y}: no isomorphism found within translation class \
                         (chamber {} moves)",
                        alpha.map[g]
                    ));
                }
            }
            (overlapping, msgs)
        })
        .collect();
    let mut overlapping = 0;
    for (count, msgs) in results {
        overlapping += count;
        for m in msgs {
            report.violation(m);
        }
    }
    report.count("overlapping_ordered_pairs", overlapping);
    report
}

/// Both apartment axioms, (B1′) then (B2′).
pub fn check_apartment_axioms(cs: &ChamberSystem, apartments: &[ApartmentEmbedding]) -> (Report, Report) {
    (check_b1_prime(cs, apartments), check_b2_prime(apartments))
}

/// `δ(c, c′) = δ_W(α⁻¹c, α⁻¹c′)` for any apartment `α` containing both,
/// computed through every such apartment; they must all agree.
pub fn delta_from_apartments(
    cs: &ChamberSystem,
    apartments: &[ApartmentEmbedding],
) -> Result<WMetricBuilding> {
    let complex = shared_complex(apartments)?;
    let n = cs.len();
    let mut table: Vec<Option<usize>> = vec![None; n * n];
    for a in apartments {
        if a.map.iter().any(|&c| c >= n) {
            return Err(Error::OutOfRange("apartment leaves the chamber system".into()));
        }
        for (g, &c) in a.map.iter().enumerate() {
            for (h, &d) in a.map.iter().enumerate() {
                let w = complex.delta_index(g, h);
                match table[c * n + d] {
                    None => table[c * n + d] = Some(w),
                    Some(v) if v != w => return Err(Error::NotWellDefined(c, d)),
                    Some(_) => {}
                }
            }
        }
    }
    let mut delta = Vec::with_capacity(n * n);
    for (k, entry) in table.into_iter().enumerate() {
        match entry {
            Some(w) => delta.push(complex.element(w)),
            None => return Err(Error::NoCommonApartment(k / n, k % n)),
        }
    }
    WMetricBuilding::new(cs.clone(), complex.system().clone(), delta)
}

/// Whether `map` preserves the W-distance: `δ′(map c, map c′) = δ(c, c′)`.
pub fn is_isometry(map: &[usize], b: &WMetricBuilding, b2: &WMetricBuilding) -> bool {
    map.len() == b.len()
        && b.system().matrix() == b2.system().matrix()
        && map.iter().all(|&x| x < b2.len())
        && (0..b.len()).all(|c| {
            (0..b.len()).all(|d| b2.delta(map[c], map[d]) == b.delta(c, d))
        })
}
