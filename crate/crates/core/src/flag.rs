//! The type-A building of GF(p)^n: maximal flags, the jump-index distance,
//! and the apartments spanned by frames.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::building::{ApartmentEmbedding, WMetricBuilding};
use crate::chamber::ChamberSystem;
use crate::complex::CoxeterComplex;
use crate::coxeter::{CoxeterElement, CoxeterMatrix, CoxeterSystem, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::ff::{self, contains, enumerate_subspaces, gaussian_binomial, subspace_sum, Subspace};
use crate::permutation::{type_a_permutation, Permutation};

/// Largest chamber count materialized; the distance table is quadratic.
pub const MAX_CHAMBERS: usize = 1024;

/// A maximal flag `V₁ ⊂ ⋯ ⊂ V_{n−1}` with `dim V_i = i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    subspaces: Vec<Subspace>,
}

impl Flag {
    pub fn new(subspaces: Vec<Subspace>) -> Result<Self> {
        let Some(first) = subspaces.first() else {
            return Err(Error::Invalid("empty flag".into()));
        };
        let n = first.ambient_dim();
        if subspaces.len() + 1 != n {
            return Err(Error::Invalid(format!(
                "{} subspaces in a maximal flag of GF(p)^{n}",
                subspaces.len()
            )));
        }
        for (i, v) in subspaces.iter().enumerate() {
            if v.dim() != i + 1 {
                return Err(Error::Invalid(format!("V_{} has dimension {}", i + 1, v.dim())));
            }
            if i > 0 && !contains(v, &subspaces[i - 1])? {
                return Err(Error::Invalid(format!("V_{i} is not inside V_{}", i + 1)));
            }
        }
        Ok(Flag { subspaces })
    }

    /// The flag `L₁ ⊂ L₁+L₂ ⊂ ⋯` of an ordered list of independent lines.
    pub fn from_lines(lines: &[Subspace]) -> Result<Self> {
        let mut acc = lines
            .first()
            .cloned()
            .ok_or_else(|| Error::Invalid("no lines".into()))?;
        let mut subspaces = vec![acc.clone()];
        for line in &lines[1..lines.len() - 1] {
            acc = subspace_sum(&acc, line)?;
            subspaces.push(acc.clone());
        }
        Self::new(subspaces)
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    /// `V_i` for `0 ≤ i ≤ n`, with `V₀ = 0` and `V_n` the whole space.
    pub fn member(&self, i: usize) -> Subspace {
        let first = &self.subspaces[0];
        let (n, p) = (first.ambient_dim(), first.modulus());
        match i {
            0 => Subspace::zero(n, p).expect("prime modulus"),
            i if i == n => Subspace::whole(n, p).expect("prime modulus"),
            i => self.subspaces[i - 1].clone(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.subspaces.len() + 1
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.subspaces.iter().map(Subspace::to_string).collect();
        f.write_str(&parts.join(" < "))
    }
}

/// `δ(c, c′) = π` with `π(i) = min{j | V′_i ⊂ V′_{i−1} + V_j}`.
pub fn delta_flag(c: &Flag, c2: &Flag) -> Result<Permutation> {
    let n = c.ambient_dim();
    if c2.ambient_dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "flags in dimensions {n} and {}",
            c2.ambient_dim()
        )));
    }
    let mut images = Vec::with_capacity(n);
    for i in 1..=n {
        let target = c2.member(i);
        let below = c2.member(i - 1);
        let mut found = None;
        for j in 1..=n {
            if contains(&subspace_sum(&below, &c.member(j))?, &target)? {
                found = Some(j);
                break;
            }
        }
        images.push(found.expect("V_n is the whole space"));
    }
    Permutation::from_images(&images)
}

/// An unordered set of `n` independent lines, stored by pivot column and
/// then basis, so the standard frame lists `⟨e₁⟩, …, ⟨e_n⟩` in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frame {
    lines: Vec<Subspace>,
}

impl Frame {
    pub fn new(mut lines: Vec<Subspace>) -> Result<Self> {
        let first = lines
            .first()
            .ok_or_else(|| Error::InvalidFrame("no lines".into()))?;
        let (n, p) = (first.ambient_dim(), first.modulus());
        if lines.len() != n {
            return Err(Error::InvalidFrame(format!("{} lines in dimension {n}", lines.len())));
        }
        let mut span = Subspace::zero(n, p)?;
        for l in &lines {
            if l.dim() != 1 {
                return Err(Error::InvalidFrame(format!("{l} is not a line")));
            }
            span = subspace_sum(&span, l)?;
        }
        if span.dim() != n {
            return Err(Error::InvalidFrame("lines are dependent".into()));
        }
        lines.sort_by_key(line_key);
        Ok(Frame { lines })
    }

    pub fn standard(n: usize, p: u32) -> Result<Self> {
        let lines = (0..n)
            .map(|i| {
                let mut v = vec![0i64; n];
                v[i] = 1;
                Subspace::span(n, p, &[v])
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(lines)
    }

    pub fn lines(&self) -> &[Subspace] {
        &self.lines
    }
}

fn line_key(l: &Subspace) -> (usize, Vec<u32>) {
    let v = l.basis().row(0);
    (v.iter().position(|&x| x != 0).unwrap_or(v.len()), v.to_vec())
}

/// Every frame of GF(p)^n, each once, ordered by sorted line indices.
pub fn enumerate_frames(n: usize, p: u32) -> Result<Vec<Frame>> {
    let lines = enumerate_subspaces(n, 1, p)?;
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let zero = Subspace::zero(n, p)?;
    frames_dfs(&lines, n, 0, &zero, &mut chosen, &mut out)?;
    Ok(out)
}

fn frames_dfs(
    lines: &[Subspace],
    n: usize,
    start: usize,
    span: &Subspace,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Frame>,
) -> Result<()> {
    if chosen.len() == n {
        let mut frame: Vec<Subspace> = chosen.iter().map(|&k| lines[k].clone()).collect();
        frame.sort_by_key(line_key);
        out.push(Frame { lines: frame });
        return Ok(());
    }
    for k in start..lines.len() {
        if contains(span, &lines[k])? {
            continue;
        }
        let bigger = subspace_sum(span, &lines[k])?;
        chosen.push(k);
        frames_dfs(lines, n, k + 1, &bigger, chosen, out)?;
        chosen.pop();
    }
    Ok(())
}

/// The flag building of GF(p)^n with its type `A_{n−1}` structure.
#[derive(Debug, Clone)]
pub struct FlagBuilding {
    n: usize,
    p: u32,
    subspaces: Vec<Vec<Subspace>>,
    flags: Vec<Flag>,
    index: HashMap<Flag, usize>,
    complex: Arc<CoxeterComplex>,
    /// Permutation of each Cayley element of `A_{n−1}`.
    perms: Vec<Permutation>,
    element_of: HashMap<Permutation, usize>,
    building: WMetricBuilding,
}

/// Number of maximal flags: `∏_{k=1}^{n} [k]_p`.
pub fn flag_count(n: usize, p: u32) -> u128 {
    (1..=n)
        .map(|k| gaussian_binomial(k, 1, p as u64))
        .fold(1u128, |a, b| a.saturating_mul(b))
}

pub(crate) fn check_chamber_count(count: u128) -> Result<()> {
    if count > MAX_CHAMBERS as u128 {
        return Err(Error::GuardExceeded(format!(
            "{count} chambers exceed {MAX_CHAMBERS}"
        )));
    }
    Ok(())
}

pub fn build_flag_building(n: usize, p: u32) -> Result<FlagBuilding> {
    if n < 2 {
        return Err(Error::Invalid(format!("flag building needs n >= 2, got {n}")));
    }
    ff::guard(p, n)?;
    check_chamber_count(flag_count(n, p))?;
    let subspaces = (1..n)
        .map(|d| enumerate_subspaces(n, d, p))
        .collect::<Result<Vec<_>>>()?;

    // chains of subspace indices, lexicographic
    let mut chains: Vec<Vec<usize>> = (0..subspaces[0].len()).map(|k| vec![k]).collect();
    for d in 1..n - 1 {
        let mut next = Vec::new();
        for chain in &chains {
            let below = &subspaces[d - 1][*chain.last().expect("nonempty chain")];
            for (k, v) in subspaces[d].iter().enumerate() {
                if contains(v, below)? {
                    let mut c = chain.clone();
                    c.push(k);
                    next.push(c);
                }
            }
        }
        chains = next;
    }
    let flags: Vec<Flag> = chains
        .iter()
        .map(|chain| Flag {
            subspaces: chain
                .iter()
                .enumerate()
                .map(|(d, &k)| subspaces[d][k].clone())
                .collect(),
        })
        .collect();
    let index = flags.iter().cloned().enumerate().map(|(k, f)| (f, k)).collect();

    let colors: Vec<usize> = (1..n).collect();
    let cs = ChamberSystem::from_keys(flags.len(), colors, |k, c| {
        let mut key = chains[c].clone();
        key.remove(k);
        key
    })
    .with_labels(flags.iter().map(Flag::to_string).collect())?;

    let system = Arc::new(CoxeterSystem::new(CoxeterMatrix::type_a(n - 1), DEFAULT_CAP)?);
    let complex = Arc::new(CoxeterComplex::new(system.clone())?);
    let perms = (0..complex.len())
        .map(|g| type_a_permutation(&complex.element(g).labels(), n - 1))
        .collect::<Result<Vec<_>>>()?;
    let element_of: HashMap<Permutation, usize> =
        perms.iter().cloned().enumerate().map(|(g, p)| (p, g)).collect();

    let building = WMetricBuilding::from_fn(cs, system.clone(), |c, d| {
        let pi = delta_flag(&flags[c], &flags[d]).expect("flags of one building");
        system.element(element_of[&pi])
    })?;
    Ok(FlagBuilding {
        n,
        p,
        subspaces,
        flags,
        index,
        complex,
        perms,
        element_of,
        building,
    })
}

impl FlagBuilding {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
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

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn flag(&self, c: usize) -> &Flag {
        &self.flags[c]
    }

    pub fn index_of(&self, f: &Flag) -> Option<usize> {
        self.index.get(f).copied()
    }

    /// Subspaces of dimension `d`, `1 ≤ d < n`.
    pub fn subspaces(&self, d: usize) -> &[Subspace] {
        &self.subspaces[d - 1]
    }

    pub fn complex(&self) -> &Arc<CoxeterComplex> {
        &self.complex
    }

    pub fn element_of(&self, pi: &Permutation) -> Result<CoxeterElement> {
        self.element_of
            .get(pi)
            .map(|&g| self.complex.element(g))
            .ok_or_else(|| Error::Invalid(format!("{pi} is not in S_{}", self.n)))
    }

    pub fn permutation_of(&self, e: &CoxeterElement) -> Result<Permutation> {
        type_a_permutation(&e.labels(), self.n - 1)
    }

    pub fn delta_permutation(&self, c: usize, d: usize) -> Permutation {
        let g = self.complex.system().index_of(self.building.delta(c, d)).expect("finite");
        self.perms[g].clone()
    }

    /// The apartment `g ↦ flag(L_{g(1)}, …, L_{g(n)})` of a frame, based at
    /// the flag of its lines in sorted order.
    pub fn apartment_from_frame(&self, frame: &Frame) -> Result<ApartmentEmbedding> {
        let lines = frame.lines();
        if lines.len() != self.n || lines[0].ambient_dim() != self.n || lines[0].modulus() != self.p {
            return Err(Error::InvalidFrame("frame of a different space".into()));
        }
        let map = self
            .perms
            .iter()
            .map(|pi| {
                let ordered: Vec<Subspace> =
                    (1..=self.n).map(|i| lines[pi.apply(i) - 1].clone()).collect();
                let flag = Flag::from_lines(&ordered)?;
                self.index_of(&flag)
                    .ok_or_else(|| Error::InvalidFrame(format!("flag {flag} not in the building")))
            })
            .collect::<Result<Vec<_>>>()?;
        ApartmentEmbedding::new(self.complex.clone(), self.chambers(), map)
    }

    /// One apartment per frame, in frame order.
    pub fn frame_apartments(&self) -> Result<Vec<ApartmentEmbedding>> {
        enumerate_frames(self.n, self.p)?
            .iter()
            .map(|f| self.apartment_from_frame(f))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::{check_b1, check_b2};
    use crate::ff::subspace_intersect;

    fn line(v: &[i64], p: u32) -> Subspace {
        Subspace::span(v.len(), p, &[v]).unwrap()
    }

    /// The quotient-filtration jump index, via intersections rather than
    /// sums: the least `j` with `V′_i ∩ V_j ⊄ V′_{i−1}`.
    fn jump_index_oracle(c: &Flag, c2: &Flag) -> Vec<usize> {
        let n = c.ambient_dim();
        (1..=n)
            .map(|i| {
                let below = c2.member(i - 1);
                (0..=n)
                    .find(|&j| {
                        let piece = subspace_intersect(&c2.member(i), &c.member(j)).unwrap();
                        !contains(&below, &piece).unwrap()
                    })
                    .unwrap()
            })
            .collect()
    }

    #[test]
    fn worked_example() {
        let (l1, l2, l3) = (line(&[1, 0, 0], 2), line(&[0, 1, 0], 2), line(&[0, 0, 1], 2));
        let c = Flag::from_lines(&[l1.clone(), l2.clone(), l3.clone()]).unwrap();
        let c2 = Flag::from_lines(&[l3, l2, l1]).unwrap();
        let pi = delta_flag(&c, &c2).unwrap();
        assert_eq!(pi, Permutation::transposition(3, 1, 3).unwrap());
        assert_eq!(jump_index_oracle(&c, &c2), vec![3, 2, 1]);
        assert!(delta_flag(&c, &c).unwrap().is_identity());
    }

    #[test]
    fn sizes() {
        let b = build_flag_building(3, 2).unwrap();
        assert_eq!(b.chambers().len(), 21);
        assert!(b.chambers().panels(0).iter().all(|p| p.len() == 3));
        assert!(b.chambers().panels(1).iter().all(|p| p.len() == 3));
        let b = build_flag_building(2, 2).unwrap();
        assert_eq!(b.chambers().len(), 3);
        assert_eq!(b.chambers().panels(0).len(), 1);
        let b = build_flag_building(3, 3).unwrap();
        assert_eq!(b.chambers().len(), 52);
        assert!(b.chambers().panels(0).iter().all(|p| p.len() == 4));
        assert!(build_flag_building(1, 2).is_err());
        assert!(matches!(build_flag_building(5, 2), Err(Error::GuardExceeded(_))));
    }

    #[test]
    fn min_formula_matches_filtration_oracle() {
        for p in [2, 3] {
            let b = build_flag_building(3, p).unwrap();
            for c in b.flags() {
                for d in b.flags() {
                    let pi = delta_flag(c, d).unwrap();
                    assert_eq!(pi.images(), jump_index_oracle(c, d));
                }
            }
        }
    }

    #[test]
    fn adjacent_flags_differ_by_a_transposition() {
        let b = build_flag_building(3, 2).unwrap();
        for k in 0..2 {
            for panel in b.chambers().panels(k) {
                let pi = delta_flag(b.flag(panel[0]), b.flag(panel[1])).unwrap();
                assert_eq!(pi, Permutation::transposition(3, k + 1, k + 2).unwrap());
            }
        }
    }

    #[test]
    fn frame_counts() {
        assert_eq!(enumerate_frames(3, 2).unwrap().len(), 28);
        assert_eq!(enumerate_frames(2, 2).unwrap().len(), 3);
        assert_eq!(enumerate_frames(2, 3).unwrap().len(), 6);
        assert!(Frame::new(vec![line(&[1, 0], 2), line(&[1, 0], 2)]).is_err());
    }

    #[test]
    fn frame_apartments() {
        let b = build_flag_building(3, 2).unwrap();
        let a0 = b.apartment_from_frame(&Frame::standard(3, 2).unwrap()).unwrap();
        let c0 = b.flag(a0.map(0));
        assert_eq!(c0.to_string(), "<100> < <100,010>");
        assert_eq!(a0.image().len(), 6);
        assert_eq!(b.frame_apartments().unwrap().len(), 28);
        let b2 = build_flag_building(2, 2).unwrap();
        assert_eq!(
            b2.apartment_from_frame(&Frame::standard(2, 2).unwrap()).unwrap().image().len(),
            2
        );
    }

    #[test]
    fn axioms_small() {
        let b = build_flag_building(3, 2).unwrap();
        assert!(check_b1(b.building(), true).pass);
        assert!(check_b2(b.building()).pass);
    }
}
