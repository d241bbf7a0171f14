//! Chambers and panels of the braid arrangement `x_i = x_j` in ℝⁿ as sign
//! vectors, with the action of `S_n` by permuting coordinates.
//!
//! Hyperplanes are listed by gap `j − i`, then by `i`: for `n = 3` the order
//! is `x₁−x₂, x₂−x₃, x₁−x₃`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::chamber::ChamberSystem;
use crate::complex::CoxeterComplex;
use crate::coxeter::{CoxeterMatrix, CoxeterSystem, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::permutation::{all_permutations, type_a_permutation, Permutation};
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
    Zero,
}

impl Sign {
    fn of(x: i64) -> Sign {
        match x.signum() {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            _ => Sign::Zero,
        }
    }

    fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    signs: Vec<Sign>,
}

impl SignVector {
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn zeros(&self) -> usize {
        self.signs.iter().filter(|&&s| s == Sign::Zero).count()
    }

    pub fn is_chamber(&self) -> bool {
        self.zeros() == 0
    }

    pub fn is_panel(&self) -> bool {
        self.zeros() == 1
    }

    /// `self` is a face of the chamber `c`: equal except where `self` is 0.
    pub fn is_face_of(&self, c: &SignVector) -> bool {
        self.signs.len() == c.signs.len()
            && self
                .signs
                .iter()
                .zip(&c.signs)
                .all(|(&a, &b)| a == Sign::Zero || a == b)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            f.write_str(match s {
                Sign::Plus => "+",
                Sign::Minus => "-",
                Sign::Zero => "0",
            })?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .map(|ch| match ch {
                '+' => Ok(Sign::Plus),
                '-' | '−' => Ok(Sign::Minus),
                '0' => Ok(Sign::Zero),
                other => Err(Error::InvalidSymbol(format!("sign {other:?}"))),
            })
            .collect::<Result<_>>()?;
        Ok(SignVector { signs })
    }
}

/// The hyperplanes `(i, j)`, `i < j`, 1-based, in gap-then-`i` order.
pub fn hyperplanes(n: usize) -> Vec<(usize, usize)> {
    (1..n)
        .flat_map(|gap| (1..=n - gap).map(move |i| (i, i + gap)))
        .collect()
}

fn check_range(n: usize) -> Result<()> {
    if (2..=6).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("braid arrangement needs 2 <= n <= 6, got {n}")))
    }
}

fn sign_vector(point: &[i64]) -> SignVector {
    let signs = hyperplanes(point.len())
        .into_iter()
        .map(|(i, j)| Sign::of(point[i - 1] - point[j - 1]))
        .collect();
    SignVector { signs }
}

/// The point whose coordinate `π(k)` holds the `k`-th largest value.
fn ordering_point(pi: &Permutation) -> Vec<i64> {
    let n = pi.degree();
    let mut point = vec![0; n];
    for k in 1..=n {
        point[pi.apply(k) - 1] = (n - k) as i64;
    }
    point
}

/// Realizable sign vectors with no zero, from the `n!` generic points.
/// Sorted, so the first is `x₁ > ⋯ > x_n`, all `+`.
pub fn braid_chambers(n: usize) -> Result<Vec<SignVector>> {
    check_range(n)?;
    let set: BTreeSet<SignVector> = all_permutations(n)
        .iter()
        .map(|pi| sign_vector(&ordering_point(pi)))
        .collect();
    Ok(set.into_iter().collect())
}

/// Realizable sign vectors with exactly one zero, from points where the
/// `k`-th and `(k+1)`-th largest coordinates coincide.
pub fn braid_panels(n: usize) -> Result<Vec<SignVector>> {
    check_range(n)?;
    let mut set = BTreeSet::new();
    for pi in all_permutations(n) {
        let generic = ordering_point(&pi);
        for k in 1..n {
            let mut point = generic.clone();
            point[pi.apply(k) - 1] = point[pi.apply(k + 1) - 1];
            set.insert(sign_vector(&point));
        }
    }
    Ok(set.into_iter().collect())
}

/// Every tuple over the hyperplanes with exactly `zeros` zero entries.
pub fn candidate_tuples(n: usize, zeros: usize) -> Vec<SignVector> {
    let m = hyperplanes(n).len();
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|v: Vec<Sign>| {
                [Sign::Plus, Sign::Minus, Sign::Zero].into_iter().map(move |s| {
                    let mut w = v.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|signs| SignVector { signs })
        .filter(|v| v.zeros() == zeros)
        .collect()
}

/// `g·v` for the coordinate permutation `x ↦ x ∘ g⁻¹`.
pub fn act(g: &Permutation, v: &SignVector) -> SignVector {
    let n = g.degree();
    let inv = g.inverse();
    let position: HashMap<(usize, usize), usize> =
        hyperplanes(n).into_iter().enumerate().map(|(k, h)| (h, k)).collect();
    let signs = hyperplanes(n)
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = (inv.apply(a), inv.apply(b));
            if x < y {
                v.signs[position[&(x, y)]]
            } else {
                v.signs[position[&(y, x)]].flip()
            }
        })
        .collect();
    SignVector { signs }
}

/// Chambers adjacent across a realizable panel.
fn share_panel(a: &SignVector, b: &SignVector, panels: &BTreeSet<SignVector>) -> bool {
    let diff: Vec<usize> = (0..a.signs.len()).filter(|&k| a.signs[k] != b.signs[k]).collect();
    if diff.len() != 1 {
        return false;
    }
    let mut face = a.clone();
    face.signs[diff[0]] = Sign::Zero;
    panels.contains(&face)
}

/// `S_n` permutes the chambers simply transitively, and the chambers
/// sharing a panel with `g·c₀` are exactly the `(g s_i)·c₀`.
pub fn regular_action_check(n: usize) -> Result<Report> {
    let chambers = braid_chambers(n)?;
    let panels: BTreeSet<SignVector> = braid_panels(n)?.into_iter().collect();
    let index: HashMap<&SignVector, usize> = chambers.iter().enumerate().map(|(k, c)| (c, k)).collect();
    let group = all_permutations(n);
    let c0 = &chambers[0];
    let mut report = Report::new("regular action");
    report.count("chambers", chambers.len() as u64);
    report.count("panels", panels.len() as u64);
    report.count("group_order", group.len() as u64);

    let mut orbit = BTreeSet::new();
    for g in &group {
        orbit.insert(act(g, c0));
        for c in &chambers {
            let image = act(g, c);
            if !index.contains_key(&image) {
                report.violation(format!("{g} sends chamber {c} to non-chamber {image}"));
            } else if &image == c && !g.is_identity() {
                report.violation(format!("{g} fixes chamber {c}"));
            }
        }
    }
    if orbit.len() != chambers.len() {
        report.violation(format!("orbit of c0 has {} of {} chambers", orbit.len(), chambers.len()));
    }

    let simple: Vec<Permutation> = (1..n)
        .map(|i| Permutation::transposition(n, i, i + 1))
        .collect::<Result<_>>()?;
    for g in &group {
        let c = act(g, c0);
        let by_word: BTreeSet<SignVector> = simple.iter().map(|s| act(&g.compose(s), c0)).collect();
        let by_panel: BTreeSet<SignVector> = chambers
            .iter()
            .filter(|d| share_panel(&c, d, &panels))
            .cloned()
            .collect();
        if by_word != by_panel {
            report.violation(format!("neighbors of {c} = {g}·c0 disagree with (g s)·c0"));
        }
    }
    report.count("adjacency_checked", group.len() as u64);
    Ok(report)
}

/// Chambers of the arrangement with `c ∼_i c′` when they share the panel
/// where the `i`-th and `(i+1)`-th largest coordinates meet. Chamber `k` is
/// `braid_chambers(n)[k]`.
pub fn braid_chamber_system(n: usize) -> Result<ChamberSystem> {
    let chambers = braid_chambers(n)?;
    let index: HashMap<SignVector, usize> =
        chambers.iter().cloned().enumerate().map(|(k, c)| (c, k)).collect();
    // ordering of each chamber, from any permutation reaching it
    let mut ordering = vec![None; chambers.len()];
    for pi in all_permutations(n) {
        let k = index[&sign_vector(&ordering_point(&pi))];
        ordering[k] = Some(pi);
    }
    let ordering: Vec<Permutation> = ordering.into_iter().map(|o| o.expect("every chamber realized")).collect();
    let cs = ChamberSystem::from_keys(chambers.len(), (1..n).collect(), |pos, k| {
        let pi = &ordering[k];
        let mut point = ordering_point(pi);
        point[pi.apply(pos + 1) - 1] = point[pi.apply(pos + 2) - 1];
        sign_vector(&point)
    });
    cs.with_labels(chambers.iter().map(ToString::to_string).collect())
}

/// The map from the type `A_{n−1}` Coxeter complex, `g ↦ g·c₀`.
pub fn coxeter_map(n: usize) -> Result<(Arc<CoxeterComplex>, Vec<usize>)> {
    let chambers = braid_chambers(n)?;
    let index: HashMap<&SignVector, usize> = chambers.iter().enumerate().map(|(k, c)| (c, k)).collect();
    let system = Arc::new(CoxeterSystem::new(CoxeterMatrix::type_a(n - 1), DEFAULT_CAP)?);
    let complex = Arc::new(CoxeterComplex::new(system)?);
    let map = (0..complex.len())
        .map(|g| {
            let pi = type_a_permutation(&complex.element(g).labels(), n - 1)?;
            Ok(index[&act(&pi, &chambers[0])])
        })
        .collect::<Result<_>>()?;
    Ok((complex, map))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(v: &[SignVector]) -> BTreeSet<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn hyperplane_order() {
        assert_eq!(hyperplanes(3), vec![(1, 2), (2, 3), (1, 3)]);
        assert_eq!(hyperplanes(4).len(), 6);
    }

    #[test]
    fn rank_two_chambers_and_panels() {
        let chambers = strings(&braid_chambers(3).unwrap());
        assert_eq!(chambers.len(), 6);
        let all = strings(&candidate_tuples(3, 0));
        assert_eq!(all.len(), 8);
        let missing: BTreeSet<String> = all.difference(&chambers).cloned().collect();
        assert_eq!(missing, BTreeSet::from(["++-".to_string(), "--+".to_string()]));
        assert_eq!(braid_chambers(3).unwrap()[0].to_string(), "+++");

        let panels = braid_panels(3).unwrap();
        assert_eq!(panels.len(), 6);
        assert_eq!(candidate_tuples(3, 1).len(), 12);
        // two panels on each reflecting line
        for k in 0..3 {
            assert_eq!(panels.iter().filter(|p| p.signs()[k] == Sign::Zero).count(), 2);
        }
        assert!(panels.iter().all(SignVector::is_panel));
    }

    #[test]
    fn counts_for_small_n() {
        let mut factorial = 1;
        for n in 2..=5 {
            factorial *= n;
            assert_eq!(braid_chambers(n).unwrap().len(), factorial);
            assert_eq!(braid_panels(n).unwrap().len(), factorial * (n - 1) / 2);
        }
        assert_eq!(candidate_tuples(4, 0).len(), 64);
        assert_eq!(braid_panels(2).unwrap().len(), 1);
        assert!(braid_chambers(1).is_err());
        assert!(braid_chambers(7).is_err());
    }

    #[test]
    fn each_chamber_has_n_minus_one_panels() {
        let chambers = braid_chambers(4).unwrap();
        let panels = braid_panels(4).unwrap();
        for c in &chambers {
            assert_eq!(panels.iter().filter(|p| p.is_face_of(c)).count(), 3);
        }
        for p in &panels {
            assert_eq!(chambers.iter().filter(|c| p.is_face_of(c)).count(), 2);
        }
    }

    #[test]
    fn action_is_regular() {
        for n in 2..=4 {
            let r = regular_action_check(n).unwrap();
            assert!(r.pass, "{r:?}");
        }
        let swap = Permutation::transposition(2, 1, 2).unwrap();
        assert_eq!(act(&swap, &"+".parse().unwrap()).to_string(), "-");
    }

    #[test]
    fn action_composes() {
        let chambers = braid_chambers(4).unwrap();
        let group = all_permutations(4);
        for g in group.iter().step_by(5) {
            for h in group.iter().step_by(7) {
                for c in &chambers {
                    assert_eq!(act(g, &act(h, c)), act(&g.compose(h), c));
                }
            }
        }
    }

    #[test]
    fn isomorphic_to_coxeter_complex() {
        for n in [3, 4] {
            let cs = braid_chamber_system(n).unwrap();
            let (complex, map) = coxeter_map(n).unwrap();
            assert!(complex.chambers().is_isomorphism(&cs, &map));
            assert!(cs.panels(0).iter().all(|p| p.len() == 2));
        }
    }
}
