//! The type-C building of Sp_{2n}(GF(p)): isotropic flags, signed-frame
//! apartments and their transvection orbit, plus the Sp₄(F₂) incidence
//! graph and Sylvester's model of it.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use crate::building::{delta_from_apartments, ApartmentEmbedding, WMetricBuilding};
use crate::chamber::ChamberSystem;
use crate::complex::CoxeterComplex;
use crate::coxeter::{CoxeterMatrix, CoxeterSystem, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::ff::{self, contains, enumerate_subspaces, subspace_sum, FpMatrix, Subspace};
use crate::flag::check_chamber_count;
use crate::graph::{Graph, Shade};

/// GF(p)^{2n} with the alternating form `(u, v) = uᵀJv`,
/// `J = [[0, I_n], [−I_n, 0]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticSpace {
    n: usize,
    p: u32,
    j: FpMatrix,
}

impl SymplecticSpace {
    pub fn new(n: usize, p: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("symplectic rank must be positive".into()));
        }
        let mut j = FpMatrix::zeros(2 * n, 2 * n, p)?;
        for i in 0..n {
            j.set(i, n + i, 1);
            j.set(n + i, i, -1);
        }
        Ok(SymplecticSpace { n, p, j })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn gram(&self) -> &FpMatrix {
        &self.j
    }

    pub fn form(&self, u: &[u32], v: &[u32]) -> u32 {
        let jv = self.j.apply(v);
        let p = self.p as u64;
        (u.iter().zip(&jv).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % p) as u32
    }

    /// Whether `g` preserves the form: `gᵀJg = J`.
    pub fn preserves(&self, g: &FpMatrix) -> Result<bool> {
        Ok(g.transpose().mul(&self.j)?.mul(g)? == self.j)
    }

    /// `x ↦ x + λ(x, v)v`.
    pub fn transvect(&self, x: &[u32], v: &[u32], lambda: u32) -> Vec<u32> {
        let p = self.p as u64;
        let t = (lambda as u64 * self.form(x, v) as u64) % p;
        x.iter()
            .zip(v)
            .map(|(&a, &b)| ((a as u64 + t * b as u64) % p) as u32)
            .collect()
    }
}

pub fn is_totally_isotropic(sp: &SymplecticSpace, u: &Subspace) -> Result<bool> {
    if u.ambient_dim() != sp.dim() {
        return Err(Error::DimensionMismatch(format!(
            "subspace of GF(p)^{} in a {}-dimensional symplectic space",
            u.ambient_dim(),
            sp.dim()
        )));
    }
    if u.modulus() != sp.p {
        return Err(Error::ModulusMismatch(u.modulus(), sp.p));
    }
    let basis: Vec<&[u32]> = u.basis_vectors().collect();
    Ok(basis
        .iter()
        .enumerate()
        .all(|(i, a)| basis[i + 1..].iter().all(|b| sp.form(a, b) == 0)))
}

/// Totally isotropic subspaces of dimension `d`, in enumeration order.
pub fn isotropic_subspaces(sp: &SymplecticSpace, d: usize) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for u in enumerate_subspaces(sp.dim(), d, sp.p)? {
        if is_totally_isotropic(sp, &u)? {
            out.push(u);
        }
    }
    Ok(out)
}

/// Largest dimension of a totally isotropic subspace, by enumeration.
pub fn max_isotropic_dim(sp: &SymplecticSpace) -> Result<usize> {
    let mut best = 0;
    for d in 1..=sp.dim() {
        if !isotropic_subspaces(sp, d)?.is_empty() {
            best = d;
        }
    }
    Ok(best)
}

/// A symplectic basis `e₁…e_n, ē₁…ē_n` with `(e_i, ē_j) = δ_ij` and the
/// other pairings zero. Signed index `+k` names `e_k`, `−k` names `ē_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedFrame {
    e: Vec<Vec<u32>>,
    f: Vec<Vec<u32>>,
}

impl SignedFrame {
    pub fn new(sp: &SymplecticSpace, e: Vec<Vec<u32>>, f: Vec<Vec<u32>>) -> Result<Self> {
        let n = sp.n;
        if e.len() != n || f.len() != n {
            return Err(Error::InvalidFrame(format!("need {n} + {n} vectors")));
        }
        if e.iter().chain(&f).any(|v| v.len() != 2 * n || v.iter().any(|&x| x >= sp.p)) {
            return Err(Error::InvalidFrame("vector of the wrong shape".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let want = u32::from(i == j);
                if sp.form(&e[i], &f[j]) != want || sp.form(&e[i], &e[j]) != 0 || sp.form(&f[i], &f[j]) != 0 {
                    return Err(Error::InvalidFrame(format!(
                        "pairings of e{} and e{}/ē{} are not symplectic",
                        i + 1,
                        j + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(SignedFrame { e, f })
    }

    pub fn standard(sp: &SymplecticSpace) -> Self {
        let n = sp.n;
        let unit = |k: usize| {
            let mut v = vec![0; 2 * n];
            v[k] = 1;
            v
        };
        SignedFrame {
            e: (0..n).map(unit).collect(),
            f: (n..2 * n).map(unit).collect(),
        }
    }

    pub fn vector(&self, signed: i64) -> &[u32] {
        let k = signed.unsigned_abs() as usize - 1;
        if signed > 0 {
            &self.e[k]
        } else {
            &self.f[k]
        }
    }

    fn map(&self, f: impl Fn(&[u32]) -> Vec<u32>) -> SignedFrame {
        SignedFrame {
            e: self.e.iter().map(|v| f(v)).collect(),
            f: self.f.iter().map(|v| f(v)).collect(),
        }
    }
}

/// Signed permutation of `±1…±n` with `π(−k) = −π(k)`, stored as the images
/// of `1…n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation(Vec<i64>);

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation((1..=n as i64).collect())
    }

    /// `s_{w₁} ∘ ⋯ ∘ s_{w_k}` with `s_i = (i, i+1)(ī, ī+1)` for `i < n` and
    /// `s_n = (n, n̄)`; labels `1..=n`.
    pub fn from_word(labels: &[usize], n: usize) -> Result<Self> {
        let mut images: Vec<i64> = (1..=n as i64).collect();
        for &i in labels {
            match i {
                i if i >= 1 && i < n => images.swap(i - 1, i),
                i if i == n => images[n - 1] = -images[n - 1],
                _ => return Err(Error::OutOfRange(format!("generator s{i} of C_{n}"))),
            }
        }
        Ok(SignedPermutation(images))
    }

    pub fn apply(&self, signed: i64) -> i64 {
        let image = self.0[signed.unsigned_abs() as usize - 1];
        if signed > 0 {
            image
        } else {
            -image
        }
    }

    pub fn images(&self) -> &[i64] {
        &self.0
    }
}

/// Isotropic flags of a symplectic space and the signed-permutation model
/// of its Weyl group.
#[derive(Debug, Clone)]
struct Geometry {
    space: SymplecticSpace,
    isotropic: Vec<Vec<Subspace>>,
    chains: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    complex: Arc<CoxeterComplex>,
    signed: Vec<SignedPermutation>,
}

/// Sp_{2n}(p) building: maximal isotropic flags with type `C_n`.
#[derive(Debug, Clone)]
pub struct SpBuilding {
    geo: Geometry,
    frames: Vec<SignedFrame>,
    apartments: Vec<ApartmentEmbedding>,
    building: WMetricBuilding,
}

/// Number of maximal isotropic flags: `∏_{k=1}^{n} (p^{2k} − 1)/(p − 1)`.
pub fn sp_chamber_count(n: usize, p: u32) -> u128 {
    (1..=n)
        .map(|k| (ff::field_power(p, 2 * k) as u128 - 1) / (p as u128 - 1))
        .fold(1u128, |a, b| a.saturating_mul(b))
}

pub fn build_sp_building(n: usize, p: u32) -> Result<SpBuilding> {
    let space = SymplecticSpace::new(n, p)?;
    ff::guard(p, 2 * n)?;
    check_chamber_count(sp_chamber_count(n, p))?;
    let isotropic = (1..=n)
        .map(|d| isotropic_subspaces(&space, d))
        .collect::<Result<Vec<_>>>()?;
    let mut chains: Vec<Vec<usize>> = (0..isotropic[0].len()).map(|k| vec![k]).collect();
    for d in 1..n {
        let mut next = Vec::new();
        for chain in &chains {
            let below = &isotropic[d - 1][*chain.last().expect("nonempty")];
            for (k, v) in isotropic[d].iter().enumerate() {
                if contains(v, below)? {
                    let mut c = chain.clone();
                    c.push(k);
                    next.push(c);
                }
            }
        }
        chains = next;
    }
    let index: HashMap<Vec<usize>, usize> =
        chains.iter().cloned().enumerate().map(|(k, c)| (c, k)).collect();
    let labels = chains
        .iter()
        .map(|chain| {
            chain
                .iter()
                .enumerate()
                .map(|(d, &k)| isotropic[d][k].to_string())
                .collect::<Vec<_>>()
                .join(" < ")
        })
        .collect();
    let cs = ChamberSystem::from_keys(chains.len(), (1..=n).collect(), |k, c| {
        let mut key = chains[c].clone();
        key.remove(k);
        key
    })
    .with_labels(labels)?;

    let system = Arc::new(CoxeterSystem::new(CoxeterMatrix::type_c(n), DEFAULT_CAP)?);
    let complex = Arc::new(CoxeterComplex::new(system)?);
    let signed = (0..complex.len())
        .map(|g| SignedPermutation::from_word(&complex.element(g).labels(), n))
        .collect::<Result<Vec<_>>>()?;

    let geo = Geometry {
        space,
        isotropic,
        chains,
        index,
        complex,
        signed,
    };
    let frames = geo.transvection_orbit(&SignedFrame::standard(&geo.space))?;
    let apartments = frames
        .iter()
        .map(|f| geo.apartment(&cs, f))
        .collect::<Result<Vec<_>>>()?;
    let building = delta_from_apartments(&cs, &apartments)?;
    Ok(SpBuilding {
        geo,
        frames,
        apartments,
        building,
    })
}

impl Geometry {
    fn index_of(&self, flag: &[Subspace]) -> Option<usize> {
        let chain = flag
            .iter()
            .enumerate()
            .map(|(d, v)| self.isotropic.get(d)?.iter().position(|u| u == v))
            .collect::<Option<Vec<_>>>()?;
        self.index.get(&chain).copied()
    }

    fn line(&self, frame: &SignedFrame, signed: i64) -> Subspace {
        let v = frame.vector(signed);
        Subspace::span_raw(v.len(), self.space.p, &[v])
    }

    /// `g ↦ (L_{g(1)} ⊂ L_{g(1)} + L_{g(2)} ⊂ ⋯)` with `g` acting as a signed
    /// permutation.
    fn apartment(&self, cs: &ChamberSystem, frame: &SignedFrame) -> Result<ApartmentEmbedding> {
        let n = self.space.n;
        let checked = SignedFrame::new(&self.space, frame.e.clone(), frame.f.clone())?;
        let map = self
            .signed
            .iter()
            .map(|pi| {
                let mut acc = Subspace::zero(2 * n, self.space.p)?;
                let mut flag = Vec::with_capacity(n);
                for k in 1..=n as i64 {
                    acc = subspace_sum(&acc, &self.line(&checked, pi.apply(k)))?;
                    flag.push(acc.clone());
                }
                self.index_of(&flag)
                    .ok_or_else(|| Error::InvalidFrame("flag outside the building".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        ApartmentEmbedding::new(self.complex.clone(), cs, map)
    }

    fn frame_key(&self, frame: &SignedFrame) -> BTreeSet<Subspace> {
        let n = self.space.n as i64;
        (1..=n)
            .flat_map(|k| [k, -k])
            .map(|s| self.line(frame, s))
            .collect()
    }

    fn transvection_orbit(&self, start: &SignedFrame) -> Result<Vec<SignedFrame>> {
        let sp = &self.space;
        let vectors: Vec<Vec<u32>> = FpMatrix::all(1, sp.dim(), sp.p)?
            .map(|m| m.row(0).to_vec())
            .filter(|v| v.iter().any(|&x| x != 0))
            .collect();
        let mut seen = BTreeSet::new();
        seen.insert(self.frame_key(start));
        let mut out = vec![start.clone()];
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(frame) = queue.pop_front() {
            for v in &vectors {
                for lambda in 1..sp.p {
                    let next = frame.map(|x| sp.transvect(x, v, lambda));
                    if seen.insert(self.frame_key(&next)) {
                        out.push(next.clone());
                        queue.push_back(next);
                    }
                }
            }
        }
        Ok(out)
    }
}

impl SpBuilding {
    pub fn space(&self) -> &SymplecticSpace {
        &self.geo.space
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

    pub fn complex(&self) -> &Arc<CoxeterComplex> {
        &self.geo.complex
    }

    /// Totally isotropic subspaces of dimension `d`, `1 ≤ d ≤ n`.
    pub fn isotropic(&self, d: usize) -> &[Subspace] {
        &self.geo.isotropic[d - 1]
    }

    /// The isotropic flag of chamber `c`.
    pub fn flag(&self, c: usize) -> Vec<Subspace> {
        self.geo.chains[c]
            .iter()
            .enumerate()
            .map(|(d, &k)| self.geo.isotropic[d][k].clone())
            .collect()
    }

    pub fn index_of(&self, flag: &[Subspace]) -> Option<usize> {
        self.geo.index_of(flag)
    }

    /// Frames of the apartment system, the standard frame first.
    pub fn frames(&self) -> &[SignedFrame] {
        &self.frames
    }

    pub fn apartments(&self) -> &[ApartmentEmbedding] {
        &self.apartments
    }

    pub fn signed_frame_apartment(&self, frame: &SignedFrame) -> Result<ApartmentEmbedding> {
        self.geo.apartment(self.chambers(), frame)
    }

    /// Closure of `start` under all transvections `x ↦ x + λ(x, v)v`, one
    /// frame per distinct line set.
    pub fn transvection_orbit(&self, start: &SignedFrame) -> Result<Vec<SignedFrame>> {
        self.geo.transvection_orbit(start)
    }
}

/// The line–plane incidence graph of the Sp₄ building: lines are white
/// vertices `0..L`, planes black vertices `L..`, and chamber `c` is edge
/// `chamber_edges[c]`.
#[derive(Debug, Clone)]
pub struct IncidenceGraph {
    pub graph: Graph,
    pub chamber_edges: Vec<(usize, usize)>,
}

pub fn incidence_graph(sb: &SpBuilding) -> Result<IncidenceGraph> {
    if sb.space().n != 2 {
        return Err(Error::Invalid(format!(
            "incidence graph needs n = 2, got {}",
            sb.space().n
        )));
    }
    let lines = sb.isotropic(1);
    let planes = sb.isotropic(2);
    let offset = lines.len();
    let labels = lines.iter().chain(planes).map(Subspace::to_string).collect();
    let shades = std::iter::repeat(Shade::White)
        .take(lines.len())
        .chain(std::iter::repeat(Shade::Black).take(planes.len()))
        .collect();
    let chamber_edges: Vec<(usize, usize)> = sb
        .geo
        .chains
        .iter()
        .map(|c| (c[0], offset + c[1]))
        .collect();
    Ok(IncidenceGraph {
        graph: Graph::new(labels, shades, &chamber_edges),
        chamber_edges,
    })
}

impl IncidenceGraph {
    /// Chamber sets of all cycles of length `k`, each sorted.
    pub fn cycle_chamber_sets(&self, k: usize) -> Vec<Vec<usize>> {
        let edge_to_chamber: HashMap<(usize, usize), usize> = self
            .chamber_edges
            .iter()
            .enumerate()
            .map(|(c, &e)| (e, c))
            .collect();
        let lookup = |a: usize, b: usize| edge_to_chamber[&(a.min(b), a.max(b))];
        let mut out: Vec<Vec<usize>> = self
            .graph
            .cycles(k)
            .iter()
            .map(|cyc| {
                let mut set: Vec<usize> = (0..k).map(|i| lookup(cyc[i], cyc[(i + 1) % k])).collect();
                set.sort_unstable();
                set
            })
            .collect();
        out.sort();
        out
    }
}

/// Transpositions of `{1..6}` (white) joined to each product of three
/// disjoint transpositions (black) that has them as a factor.
pub fn sylvester_graph() -> Graph {
    let pairs: Vec<(usize, usize)> = (1..=6)
        .flat_map(|a| ((a + 1)..=6).map(move |b| (a, b)))
        .collect();
    let mut synthemes: Vec<[(usize, usize); 3]> = Vec::new();
    for &p in &pairs {
        for &q in &pairs {
            for &r in &pairs {
                let points = [p.0, p.1, q.0, q.1, r.0, r.1];
                let distinct = points.iter().collect::<BTreeSet<_>>().len() == 6;
                if distinct && p < q && q < r {
                    synthemes.push([p, q, r]);
                }
            }
        }
    }
    let mut labels: Vec<String> = pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
    labels.extend(
        synthemes
            .iter()
            .map(|s| s.iter().map(|(a, b)| format!("({a},{b})")).collect::<String>()),
    );
    let shades = std::iter::repeat(Shade::White)
        .take(pairs.len())
        .chain(std::iter::repeat(Shade::Black).take(synthemes.len()))
        .collect();
    let edges: Vec<(usize, usize)> = synthemes
        .iter()
        .enumerate()
        .flat_map(|(k, s)| {
            s.iter()
                .map(|t| (pairs.iter().position(|q| q == t).expect("a pair"), pairs.len() + k))
                .collect::<Vec<_>>()
        })
        .collect();
    Graph::new(labels, shades, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::{check_apartment_axioms, check_b1, check_b2};
    use crate::complex::residue_circuit_lengths;
    use crate::graph::find_isomorphism;

    fn sp42() -> SpBuilding {
        build_sp_building(2, 2).unwrap()
    }

    #[test]
    fn isotropy() {
        let sp = SymplecticSpace::new(2, 2).unwrap();
        for l in enumerate_subspaces(4, 1, 2).unwrap() {
            assert!(is_totally_isotropic(&sp, &l).unwrap());
        }
        let e1_f1 = Subspace::span(4, 2, &[[1, 0, 0, 0], [0, 0, 1, 0]]).unwrap();
        assert!(!is_totally_isotropic(&sp, &e1_f1).unwrap());
        assert!(is_totally_isotropic(&sp, &Subspace::zero(4, 2).unwrap()).unwrap());
        assert!(is_totally_isotropic(&sp, &Subspace::zero(3, 2).unwrap()).is_err());
        assert_eq!(isotropic_subspaces(&sp, 1).unwrap().len(), 15);
        assert_eq!(isotropic_subspaces(&sp, 2).unwrap().len(), 15);
    }

    #[test]
    fn maximal_isotropic_dimension() {
        for (n, p) in [(1, 2), (1, 3), (2, 2)] {
            let sp = SymplecticSpace::new(n, p).unwrap();
            assert_eq!(max_isotropic_dim(&sp).unwrap(), n);
        }
    }

    #[test]
    fn transvections_preserve_the_form() {
        let sp = SymplecticSpace::new(2, 3).unwrap();
        let v = [1, 2, 0, 1];
        let cols: Vec<Vec<u32>> = (0..4)
            .map(|k| {
                let mut e = vec![0; 4];
                e[k] = 1;
                sp.transvect(&e, &v, 2)
            })
            .collect();
        let mut g = FpMatrix::zeros(4, 4, 3).unwrap();
        for (c, col) in cols.iter().enumerate() {
            for (r, &x) in col.iter().enumerate() {
                g.set(r, c, x as i64);
            }
        }
        assert!(sp.preserves(&g).unwrap());
    }

    #[test]
    fn sp4_f2_counts() {
        let b = sp42();
        assert_eq!(b.chambers().len(), 45);
        for k in 0..2 {
            assert!(b.chambers().panels(k).iter().all(|p| p.len() == 3));
        }
        assert_eq!(b.apartments().len(), 90);
        assert!(b.apartments().iter().all(|a| a.image().len() == 8));
        let a0 = &b.apartments()[0];
        let c0 = b.flag(a0.map(0));
        assert_eq!(c0[0].to_string(), "<1000>");
        assert_eq!(c0[1].to_string(), "<1000,0100>");
    }

    #[test]
    fn sp4_f2_axioms() {
        let b = sp42();
        assert!(check_b1(b.building(), true).pass);
        assert!(check_b2(b.building()).pass);
        let (b1, b2) = check_apartment_axioms(b.chambers(), b.apartments());
        assert!(b1.pass && b2.pass);
        assert_eq!(residue_circuit_lengths(b.complex()), [((1, 2), 8)].into());
        let longest = b.building().delta(a_opposite(&b).0, a_opposite(&b).1);
        assert_eq!(longest.len(), 4);
    }

    /// Base chamber of A₀ and its image under the longest element.
    fn a_opposite(b: &SpBuilding) -> (usize, usize) {
        let a0 = &b.apartments()[0];
        let cayley = b.complex().cayley();
        let w0 = (0..cayley.len()).max_by_key(|&g| cayley.length(g)).unwrap();
        (a0.map(0), a0.map(w0))
    }

    #[test]
    fn rank_one() {
        let b = build_sp_building(1, 2).unwrap();
        assert_eq!(b.chambers().len(), 3);
        assert_eq!(b.apartments().len(), 3);
        assert_eq!(b.apartments()[0].image().len(), 2);
    }

    #[test]
    fn signed_frame_validation() {
        let sp = SymplecticSpace::new(2, 2).unwrap();
        let bad = SignedFrame::new(
            &sp,
            vec![vec![1, 0, 0, 0], vec![0, 0, 1, 0]],
            vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
        );
        assert!(matches!(bad, Err(Error::InvalidFrame(_))));
        let std = SignedFrame::standard(&sp);
        assert!(SignedFrame::new(&sp, std.e.clone(), std.f.clone()).is_ok());
    }

    #[test]
    fn signed_permutations() {
        let s2 = SignedPermutation::from_word(&[2], 2).unwrap();
        assert_eq!(s2.images(), &[1, -2]);
        assert_eq!(s2.apply(-2), 2);
        let w0 = SignedPermutation::from_word(&[1, 2, 1, 2], 2).unwrap();
        assert_eq!(w0.images(), &[-1, -2]);
        assert!(SignedPermutation::from_word(&[3], 2).is_err());
    }

    #[test]
    fn eight_cage() {
        let b = sp42();
        let inc = incidence_graph(&b).unwrap();
        let g = &inc.graph;
        assert_eq!(g.vertex_count(), 30);
        assert_eq!(g.edge_count(), 45);
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(g.girth(), Some(8));
        let mut images: Vec<Vec<usize>> = b.apartments().iter().map(|a| a.image()).collect();
        images.sort();
        assert_eq!(inc.cycle_chamber_sets(8), images);
        let through_first = images.iter().filter(|s| s.contains(&0)).count();
        assert_eq!(through_first, 16);
        assert!(incidence_graph(&build_sp_building(1, 2).unwrap()).is_err());
    }

    #[test]
    fn sylvester_matches_incidence() {
        let s = sylvester_graph();
        assert_eq!(s.vertex_count(), 30);
        assert_eq!(s.regular_degree(), Some(3));
        let inc = incidence_graph(&sp42()).unwrap();
        let f = find_isomorphism(&s, &inc.graph).unwrap();
        for (a, c) in s.edges() {
            assert!(inc.graph.has_edge(f[a], f[c]));
        }
        let dot = inc.graph.to_dot("incidence");
        assert_eq!(dot.matches("fillcolor=white").count(), 15);
        assert_eq!(dot.matches("fillcolor=black").count(), 15);
    }
}
