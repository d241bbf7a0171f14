//! Exact linear algebra over prime fields GF(p).
//!
//! Subspaces are stored by their reduced row echelon basis with zero rows
//! dropped, so two subspaces are equal exactly when their basis grids are
//! equal. Every flag construction in the crate is built on top of this.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest ambient size `p^n` we are willing to enumerate.
pub const ENUMERATION_GUARD: u64 = 1 << 20;

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u32) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `p^n`, saturating, for guard checks.
pub(crate) fn field_power(p: u32, n: usize) -> u64 {
    let mut acc: u64 = 1;
    for _ in 0..n {
        acc = acc.saturating_mul(p as u64);
    }
    acc
}

pub(crate) fn guard(p: u32, n: usize) -> Result<()> {
    let size = field_power(p, n);
    if size > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded(format!(
            "{p}^{n} = {size} exceeds {ENUMERATION_GUARD}"
        )));
    }
    Ok(())
}

#[inline]
fn reduce(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

#[inline]
fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn pow_mod(mut base: u32, mut exp: u32, p: u32) -> u32 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[inline]
fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// An element of GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u32,
    p: u32,
}

impl FpScalar {
    pub fn new(value: i64, p: u32) -> Result<Self> {
        check_prime(p)?;
        Ok(FpScalar {
            value: reduce(value, p),
            p,
        })
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<Self> {
        (self.value != 0).then(|| FpScalar {
            value: inv_mod(self.value, self.p),
            p: self.p,
        })
    }

    pub fn pow(self, exp: u32) -> Self {
        FpScalar {
            value: pow_mod(self.value, exp, self.p),
            p: self.p,
        }
    }
}

impl Add for FpScalar {
    type Output = FpScalar;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.p, rhs.p, "mixed moduli");
        FpScalar {
            value: (self.value + rhs.value) % self.p,
            p: self.p,
        }
    }
}

impl Sub for FpScalar {
    type Output = FpScalar;
    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.p, rhs.p, "mixed moduli");
        FpScalar {
            value: (self.value + self.p - rhs.value) % self.p,
            p: self.p,
        }
    }
}

impl Mul for FpScalar {
    type Output = FpScalar;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.p, rhs.p, "mixed moduli");
        FpScalar {
            value: mul_mod(self.value, rhs.value, self.p),
            p: self.p,
        }
    }
}

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> Self {
        FpScalar {
            value: (self.p - self.value) % self.p,
            p: self.p,
        }
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Dense row-major matrix over GF(p).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    p: u32,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u32) -> Result<Self> {
        check_prime(p)?;
        Ok(FpMatrix {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        })
    }

    pub fn identity(n: usize, p: u32) -> Result<Self> {
        let mut m = Self::zeros(n, n, p)?;
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        Ok(m)
    }

    /// Builds a matrix from integer rows, reducing every entry mod `p`.
    pub fn from_rows<R: AsRef<[i64]>>(p: u32, rows: &[R]) -> Result<Self> {
        check_prime(p)?;
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "ragged rows: {} vs {cols}",
                    row.len()
                )));
            }
            data.extend(row.iter().map(|&v| reduce(v, p)));
        }
        Ok(FpMatrix {
            rows: rows.len(),
            cols,
            p,
            data,
        })
    }

    /// Internal constructor; entries must already be reduced and `p` prime.
    pub(crate) fn from_raw(rows: usize, cols: usize, p: u32, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&v| v < p));
        FpMatrix {
            rows,
            cols,
            p,
            data,
        }
    }

    /// Parses `"1,1,0;0,1,0;0,0,1"`: rows separated by `;`, entries by `,`.
    pub fn parse(text: &str, p: u32) -> Result<Self> {
        let rows: Vec<Vec<i64>> = text
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| {
                        e.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::Invalid(format!("bad matrix entry {e:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Self::from_rows(p, &rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn scalar(&self, r: usize, c: usize) -> FpScalar {
        FpScalar {
            value: self.get(r, c),
            p: self.p,
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = reduce(v, self.p);
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut data = vec![0; self.data.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                data[c * self.rows + r] = self.get(r, c);
            }
        }
        FpMatrix::from_raw(self.cols, self.rows, self.p, data)
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p as u64;
        let mut data = vec![0u32; self.rows * other.cols];
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc += self.get(r, k) as u64 * other.get(k, c) as u64;
                }
                data[r * other.cols + c] = (acc % p) as u32;
            }
        }
        Ok(FpMatrix::from_raw(self.rows, other.cols, self.p, data))
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                let acc: u64 = (0..self.cols)
                    .map(|k| self.get(r, k) as u64 * v[k] as u64)
                    .sum();
                (acc % p) as u32
            })
            .collect()
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "stacking {} columns on {}",
                other.cols, self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FpMatrix::from_raw(
            self.rows + other.rows,
            self.cols,
            self.p,
            data,
        ))
    }

    /// Submatrix on the given row and column ranges.
    pub fn submatrix(
        &self,
        rows: std::ops::Range<usize>,
        cols: std::ops::Range<usize>,
    ) -> FpMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for r in rows.clone() {
            data.extend_from_slice(&self.row(r)[cols.clone()]);
        }
        FpMatrix::from_raw(rows.len(), cols.len(), self.p, data)
    }

    pub fn rank(&self) -> usize {
        rref(self).1
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<FpMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = vec![0u32; n * 2 * n];
        for r in 0..n {
            aug[r * 2 * n..r * 2 * n + n].copy_from_slice(self.row(r));
            aug[r * 2 * n + n + r] = 1 % self.p;
        }
        let (red, rank) = rref(&FpMatrix::from_raw(n, 2 * n, self.p, aug));
        if rank < n || (0..n).any(|i| red.get(i, i) != 1) {
            return Err(Error::Singular);
        }
        Ok(red.submatrix(0..n, n..2 * n))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|r| (0..r.min(self.cols)).all(|c| self.get(r, c) == 0))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c) == 0))
    }

    /// Exactly one nonzero entry in each row and column.
    pub fn is_monomial(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| self.row(r).iter().filter(|&&v| v != 0).count() == 1)
            && (0..self.cols).all(|c| (0..self.rows).filter(|&r| self.get(r, c) != 0).count() == 1)
    }

    /// Every matrix over GF(p) of the given shape, in lexicographic order of entries.
    pub(crate) fn all(rows: usize, cols: usize, p: u32) -> Result<impl Iterator<Item = FpMatrix>> {
        check_prime(p)?;
        guard(p, rows * cols)?;
        let len = rows * cols;
        let total = field_power(p, len);
        Ok((0..total).map(move |mut code| {
            let mut data = vec![0u32; len];
            for slot in data.iter_mut().rev() {
                *slot = (code % p as u64) as u32;
                code /= p as u64;
            }
            FpMatrix::from_raw(rows, cols, p, data)
        }))
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(";")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        Ok(())
    }
}

/// Reduced row echelon form and rank. Zero rows are kept at the bottom so
/// the result has the same shape as the input.
pub fn rref(m: &FpMatrix) -> (FpMatrix, usize) {
    let p = m.p;
    let cols = m.cols;
    let mut data = m.data.clone();
    let mut rank = 0;
    for c in 0..cols {
        if rank == m.rows {
            break;
        }
        let Some(pivot) = (rank..m.rows).find(|&r| data[r * cols + c] != 0) else {
            continue;
        };
        if pivot != rank {
            for k in 0..cols {
                data.swap(pivot * cols + k, rank * cols + k);
            }
        }
        let inv = inv_mod(data[rank * cols + c], p);
        for k in 0..cols {
            data[rank * cols + k] = mul_mod(data[rank * cols + k], inv, p);
        }
        for r in 0..m.rows {
            if r == rank {
                continue;
            }
            let factor = data[r * cols + c];
            if factor == 0 {
                continue;
            }
            for k in 0..cols {
                let sub = mul_mod(factor, data[rank * cols + k], p);
                data[r * cols + k] = (data[r * cols + k] + p - sub) % p;
            }
        }
        rank += 1;
    }
    (FpMatrix::from_raw(m.rows, cols, p, data), rank)
}

/// A subspace of GF(p)^n, held by its canonical RREF basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    n: usize,
    p: u32,
    basis: FpMatrix,
}

impl Subspace {
    pub fn zero(n: usize, p: u32) -> Result<Self> {
        Ok(Subspace {
            n,
            p,
            basis: FpMatrix::zeros(0, n, p)?,
        })
    }

    pub fn whole(n: usize, p: u32) -> Result<Self> {
        Ok(Subspace {
            n,
            p,
            basis: FpMatrix::identity(n, p)?,
        })
    }

    /// Row space of `m`.
    pub fn row_space(m: &FpMatrix) -> Subspace {
        let (red, rank) = rref(m);
        Subspace {
            n: m.cols,
            p: m.p,
            basis: red.submatrix(0..rank, 0..m.cols),
        }
    }

    /// Span of the given vectors in GF(p)^n.
    pub fn span<R: AsRef<[i64]>>(n: usize, p: u32, vectors: &[R]) -> Result<Self> {
        if vectors.is_empty() {
            return Self::zero(n, p);
        }
        let m = FpMatrix::from_rows(p, vectors)?;
        if m.cols != n {
            return Err(Error::DimensionMismatch(format!(
                "vectors of length {} in dimension {n}",
                m.cols
            )));
        }
        Ok(Self::row_space(&m))
    }

    pub(crate) fn span_raw(n: usize, p: u32, vectors: &[&[u32]]) -> Subspace {
        let mut data = Vec::with_capacity(vectors.len() * n);
        for v in vectors {
            debug_assert_eq!(v.len(), n);
            data.extend_from_slice(v);
        }
        Self::row_space(&FpMatrix::from_raw(vectors.len(), n, p, data))
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.dim()).map(move |r| self.basis.row(r))
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.n);
        let mut data = self.basis.data.clone();
        data.extend_from_slice(v);
        let (_, rank) = rref(&FpMatrix::from_raw(self.dim() + 1, self.n, self.p, data));
        rank == self.dim()
    }

    /// Image of the subspace under a linear map given as a square matrix
    /// acting on column vectors.
    pub fn image(&self, map: &FpMatrix) -> Subspace {
        let images: Vec<Vec<u32>> = self.basis_vectors().map(|v| map.apply(v)).collect();
        let refs: Vec<&[u32]> = images.iter().map(Vec::as_slice).collect();
        Subspace::span_raw(self.n, self.p, &refs)
    }

    fn compatible(&self, other: &Subspace) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.n, other.n
            )));
        }
        Ok(())
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p, self.n, self.dim(), &self.basis.data).cmp(&(
            other.p,
            other.n,
            other.dim(),
            &other.basis.data,
        ))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, v) in self.basis_vectors().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if self.p <= 10 {
                for x in v {
                    write!(f, "{x}")?;
                }
            } else {
                let parts: Vec<String> = v.iter().map(u32::to_string).collect();
                write!(f, "({})", parts.join(" "))?;
            }
        }
        f.write_str(">")
    }
}

pub fn subspace_sum(u: &Subspace, w: &Subspace) -> Result<Subspace> {
    u.compatible(w)?;
    Ok(Subspace::row_space(&u.basis.stack(&w.basis)?))
}

/// Intersection by the Zassenhaus construction: reduce `[u | u ; w | 0]`;
/// rows with vanishing left half span the intersection on the right.
pub fn subspace_intersect(u: &Subspace, w: &Subspace) -> Result<Subspace> {
    u.compatible(w)?;
    let n = u.n;
    let rows = u.dim() + w.dim();
    let mut data = Vec::with_capacity(rows * 2 * n);
    for v in u.basis_vectors() {
        data.extend_from_slice(v);
        data.extend_from_slice(v);
    }
    for v in w.basis_vectors() {
        data.extend_from_slice(v);
        data.extend(std::iter::repeat(0).take(n));
    }
    let (red, rank) = rref(&FpMatrix::from_raw(rows, 2 * n, u.p, data));
    let kept: Vec<&[u32]> = (0..rank)
        .filter(|&r| red.row(r)[..n].iter().all(|&x| x == 0))
        .map(|r| &red.row(r)[n..])
        .collect();
    Ok(Subspace::span_raw(n, u.p, &kept))
}

/// Whether `w` is a subspace of `u`.
pub fn contains(u: &Subspace, w: &Subspace) -> Result<bool> {
    u.compatible(w)?;
    if w.dim() > u.dim() {
        return Ok(false);
    }
    let (_, rank) = rref(&u.basis.stack(&w.basis)?);
    Ok(rank == u.dim())
}

/// All `k`-dimensional subspaces of GF(p)^n, sorted by their RREF grids.
pub fn enumerate_subspaces(n: usize, k: usize, p: u32) -> Result<Vec<Subspace>> {
    check_prime(p)?;
    if k > n {
        return Err(Error::DimensionMismatch(format!("k = {k} exceeds n = {n}")));
    }
    guard(p, n)?;
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(k);
    choose_pivots(n, k, 0, &mut pivots, &mut |pivots| {
        // free slots: row r, columns after its pivot that are not pivots
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| {
                ((pc + 1)..n)
                    .filter(|c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let combos = field_power(p, free.len());
        for mut code in 0..combos {
            let mut data = vec![0u32; k * n];
            for (r, &pc) in pivots.iter().enumerate() {
                data[r * n + pc] = 1;
            }
            for &(r, c) in free.iter().rev() {
                data[r * n + c] = (code % p as u64) as u32;
                code /= p as u64;
            }
            out.push(Subspace {
                n,
                p,
                basis: FpMatrix::from_raw(k, n, p, data),
            });
        }
    });
    out.sort();
    Ok(out)
}

fn choose_pivots(
    n: usize,
    k: usize,
    start: usize,
    acc: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if acc.len() == k {
        visit(acc);
        return;
    }
    for c in start..n {
        if n - c < k - acc.len() {
            break;
        }
        acc.push(c);
        choose_pivots(n, k, c + 1, acc, visit);
        acc.pop();
    }
}

/// Gaussian binomial coefficient `[n choose k]_q` by the product formula.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u32, rows: &[&[i64]]) -> FpMatrix {
        FpMatrix::from_rows(p, rows).unwrap()
    }

    fn sp(n: usize, p: u32, vs: &[&[i64]]) -> Subspace {
        Subspace::span(n, p, vs).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = FpMatrix::identity(3, 2).unwrap();
        assert_eq!(rref(&id), (id.clone(), 3));

        let z = FpMatrix::zeros(2, 2, 3).unwrap();
        assert_eq!(rref(&z), (z.clone(), 0));

        let a = m(2, &[&[1, 1, 0], &[1, 1, 1]]);
        assert_eq!(rref(&a), (m(2, &[&[1, 1, 0], &[0, 0, 1]]), 2));
    }

    #[test]
    fn non_prime_modulus_rejected() {
        assert_eq!(FpMatrix::zeros(1, 1, 4), Err(Error::NotPrime(4)));
        assert!(FpScalar::new(3, 9).is_err());
    }

    #[test]
    fn scalar_arithmetic() {
        let a = FpScalar::new(3, 5).unwrap();
        let b = FpScalar::new(4, 5).unwrap();
        assert_eq!((a + b).value(), 2);
        assert_eq!((a - b).value(), 4);
        assert_eq!((a * b).value(), 2);
        assert_eq!((-a).value(), 2);
        assert_eq!((a * a.inv().unwrap()).value(), 1);
        assert!(FpScalar::new(0, 5).unwrap().inv().is_none());
        assert_eq!(FpScalar::new(-1, 7).unwrap().value(), 6);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(3, &[&[1, 2, 0], &[0, 1, 1], &[2, 0, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), FpMatrix::identity(3, 3).unwrap());
        let sing = m(2, &[&[1, 1], &[1, 1]]);
        assert_eq!(sing.inverse(), Err(Error::Singular));
    }

    #[test]
    fn parse_and_display() {
        let a = FpMatrix::parse("1,1,0;0,1,0;0,0,1", 2).unwrap();
        assert_eq!(a.to_string(), "1,1,0;0,1,0;0,0,1");
        assert!(FpMatrix::parse("1,x", 2).is_err());
        assert!(FpMatrix::parse("1,0;1", 2).is_err());
    }

    #[test]
    fn sum_examples() {
        let u = sp(3, 2, &[&[1, 1, 0]]);
        assert_eq!(subspace_sum(&u, &u).unwrap(), u);

        let e1 = sp(3, 2, &[&[1, 0, 0]]);
        let e2 = sp(3, 2, &[&[0, 1, 0]]);
        assert_eq!(
            subspace_sum(&e1, &e2).unwrap(),
            sp(3, 2, &[&[1, 0, 0], &[0, 1, 0]])
        );

        let a = sp(3, 2, &[&[1, 1, 0]]);
        let b = sp(3, 2, &[&[0, 1, 1]]);
        let s = subspace_sum(&a, &b).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.contains_vector(&[1, 0, 1]));
    }

    #[test]
    fn intersect_examples() {
        let u = sp(3, 3, &[&[1, 2, 0], &[0, 0, 1]]);
        assert_eq!(subspace_intersect(&u, &u).unwrap(), u);

        let e1 = sp(3, 2, &[&[1, 0, 0]]);
        let e2 = sp(3, 2, &[&[0, 1, 0]]);
        assert_eq!(subspace_intersect(&e1, &e2).unwrap().dim(), 0);

        let planes = enumerate_subspaces(3, 2, 2).unwrap();
        let mut pairs = 0;
        for (i, a) in planes.iter().enumerate() {
            for b in &planes[i + 1..] {
                assert_eq!(subspace_intersect(a, b).unwrap().dim(), 1);
                pairs += 1;
            }
        }
        assert_eq!(pairs, 21);
    }

    #[test]
    fn contains_examples() {
        let plane = sp(3, 2, &[&[1, 0, 0], &[0, 1, 0]]);
        let e1 = sp(3, 2, &[&[1, 0, 0]]);
        assert!(contains(&plane, &plane).unwrap());
        assert!(contains(&plane, &e1).unwrap());
        assert!(!contains(&e1, &sp(3, 2, &[&[1, 1, 0]])).unwrap());
    }

    #[test]
    fn mismatches_are_errors() {
        let a = sp(3, 2, &[&[1, 0, 0]]);
        let b = sp(3, 3, &[&[1, 0, 0]]);
        let c = sp(2, 2, &[&[1, 0]]);
        assert_eq!(subspace_sum(&a, &b), Err(Error::ModulusMismatch(2, 3)));
        assert!(matches!(subspace_intersect(&a, &c), Err(Error::DimensionMismatch(_))));
        assert!(contains(&a, &c).is_err());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_subspaces(3, 1, 2).unwrap().len(), 7);
        assert_eq!(enumerate_subspaces(3, 2, 3).unwrap().len(), 13);
        let zero = enumerate_subspaces(4, 0, 5).unwrap();
        assert_eq!(zero, vec![Subspace::zero(4, 5).unwrap()]);
        assert!(matches!(
            enumerate_subspaces(21, 1, 2),
            Err(Error::GuardExceeded(_))
        ));
        assert!(enumerate_subspaces(2, 3, 2).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_canonical() {
        let lines = enumerate_subspaces(3, 1, 3).unwrap();
        assert!(lines.windows(2).all(|w| w[0] < w[1]));
        for l in &lines {
            assert_eq!(&Subspace::row_space(l.basis()), l);
        }
    }
}
