//! Monomial invariants of diagonal torus actions on `V^m`.
//!
//! A torus acts on `V = k^n` through a weight matrix with one integer
//! column per coordinate; `m` copies of `V` share those weights. A monomial
//! is invariant exactly when its weighted exponent sum vanishes, and the
//! invariant ring is spanned by such monomials, so separation by invariants
//! of bounded degree reduces to separation by invariant monomials.

use crate::error::{Error, Result};
use crate::finite_field::{gf, GfElem};
use crate::poly::{rat, Poly};
use num::{BigInt, BigRational, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

pub const DEFAULT_DEGREE_CAP: u32 = 12;
pub const MAX_DEGREE_CAP: u32 = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMatrix {
    /// `rank x dim` weights of the coordinates of one copy of V.
    pub weights: Vec<Vec<i64>>,
    pub dim: usize,
    pub copies: usize,
}

impl WeightMatrix {
    pub fn new(weights: Vec<Vec<i64>>, copies: usize) -> Result<Self> {
        let dim = weights.first().map_or(0, |r| r.len());
        if dim == 0 || copies == 0 || weights.iter().any(|r| r.len() != dim) {
            return Err(Error::Weights("need a non-empty rectangular weight matrix and copies >= 1".into()));
        }
        Ok(WeightMatrix { weights, dim, copies })
    }

    /// Rank `n-1` torus on `k^n`: `x_1` has weight `(1, ..., 1)` and
    /// `x_{j+1}` has weight `-exponent * e_j`; `n+1` copies.
    pub fn example(n: usize, exponent: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Weights(format!("n = {n} must be at least 2")));
        }
        let weights = (0..n - 1)
            .map(|row| {
                let mut w = vec![0i64; n];
                w[0] = 1;
                w[row + 1] = -exponent;
                w
            })
            .collect();
        Self::new(weights, n + 1)
    }

    pub fn with_copies(&self, copies: usize) -> Self {
        WeightMatrix { copies, ..self.clone() }
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    pub fn coords(&self) -> usize {
        self.dim * self.copies
    }

    pub fn coord(&self, copy: usize, j: usize) -> usize {
        copy * self.dim + j
    }

    pub fn weight(&self, row: usize, coord: usize) -> i64 {
        self.weights[row][coord % self.dim]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn one(coords: usize) -> Self {
        Monomial { exponents: vec![0; coords] }
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Total degree in each coordinate index, summed over the copies.
    pub fn multidegree(&self, dim: usize) -> Vec<u32> {
        let mut out = vec![0; dim];
        for (c, &e) in self.exponents.iter().enumerate() {
            out[c % dim] += e;
        }
        out
    }

    /// Copies (0-based) in which some exponent is positive.
    pub fn copies_used(&self, dim: usize) -> Vec<usize> {
        let mut out: Vec<usize> =
            (0..self.exponents.len()).filter(|&c| self.exponents[c] > 0).map(|c| c / dim).collect();
        out.dedup();
        out
    }

    /// Degree first, then larger exponents on earlier coordinates first.
    pub fn grlex_cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.exponents.cmp(&self.exponents))
    }

    pub fn eval<S: ExactScalar>(&self, point: &[S]) -> S {
        let mut acc = point[0].one_like();
        for (x, &e) in point.iter().zip(&self.exponents) {
            if e > 0 {
                acc = acc.mul_ref(&x.pow(e));
            }
        }
        acc
    }

    /// `x(i)_j` notation, 1-based, for a monomial on copies of a `dim`-dimensional space.
    pub fn render(&self, dim: usize) -> String {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(c, &e)| {
                let base = format!("x({})_{}", c / dim + 1, c % dim + 1);
                if e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

pub fn is_invariant(w: &WeightMatrix, m: &Monomial) -> bool {
    m.exponents.len() == w.coords()
        && (0..w.rank())
            .all(|r| m.exponents.iter().enumerate().map(|(c, &e)| w.weight(r, c) * e as i64).sum::<i64>() == 0)
}

struct KernelSearch<'a> {
    w: &'a WeightMatrix,
    allowed: Vec<usize>,
    /// Per suffix start and row: `min(0, min weight)` and `max(0, max weight)`.
    lo: Vec<Vec<i64>>,
    hi: Vec<Vec<i64>>,
    exponents: Vec<u32>,
    partial: Vec<i64>,
    out: Vec<Monomial>,
}

impl KernelSearch<'_> {
    fn feasible(&self, idx: usize, remaining: u32) -> bool {
        (0..self.w.rank()).all(|r| {
            let need = -self.partial[r];
            need >= self.lo[idx][r] * remaining as i64 && need <= self.hi[idx][r] * remaining as i64
        })
    }

    fn run(&mut self, idx: usize, remaining: u32) {
        if !self.feasible(idx, remaining) {
            return;
        }
        if idx == self.allowed.len() {
            if self.partial.iter().all(|&s| s == 0) {
                self.out.push(Monomial { exponents: self.exponents.clone() });
            }
            return;
        }
        let c = self.allowed[idx];
        for e in 0..=remaining {
            self.exponents[c] = e;
            self.run(idx + 1, remaining - e);
            for r in 0..self.w.rank() {
                self.partial[r] += self.w.weight(r, c);
            }
        }
        for r in 0..self.w.rank() {
            self.partial[r] -= self.w.weight(r, c) * (remaining as i64 + 1);
        }
        self.exponents[c] = 0;
    }
}

/// Invariant monomials of total degree at most `degree_cap` in the allowed
/// coordinates, sorted by [`Monomial::grlex_cmp`].
pub fn invariant_monomials_on(w: &WeightMatrix, degree_cap: u32, allowed: &[usize]) -> Vec<Monomial> {
    let rank = w.rank();
    let k = allowed.len();
    let mut lo = vec![vec![0i64; rank]; k + 1];
    let mut hi = vec![vec![0i64; rank]; k + 1];
    for idx in (0..k).rev() {
        for r in 0..rank {
            let wt = w.weight(r, allowed[idx]);
            lo[idx][r] = lo[idx + 1][r].min(wt);
            hi[idx][r] = hi[idx + 1][r].max(wt);
        }
    }
    let mut s = KernelSearch {
        w,
        allowed: allowed.to_vec(),
        lo,
        hi,
        exponents: vec![0; w.coords()],
        partial: vec![0; rank],
        out: Vec::new(),
    };
    s.run(0, degree_cap);
    s.out.sort_by(Monomial::grlex_cmp);
    s.out
}

fn support_coords(w: &WeightMatrix, support: Option<&[usize]>) -> Result<Vec<usize>> {
    match support {
        None => Ok((0..w.coords()).collect()),
        Some(copies) => {
            if let Some(&bad) = copies.iter().find(|&&c| c >= w.copies) {
                return Err(Error::Weights(format!("copy {bad} out of range (copies = {})", w.copies)));
            }
            Ok((0..w.coords()).filter(|c| copies.contains(&(c / w.dim))).collect())
        }
    }
}

/// Invariant monomials up to `degree_cap` involving only the given copies
/// (0-based; `None` means all copies).
pub fn invariant_monomials(w: &WeightMatrix, degree_cap: u32, support: Option<&[usize]>) -> Result<Vec<Monomial>> {
    if degree_cap > MAX_DEGREE_CAP {
        return Err(Error::InvalidParameter(format!("degree cap {degree_cap} exceeds {MAX_DEGREE_CAP}")));
    }
    Ok(invariant_monomials_on(w, degree_cap, &support_coords(w, support)?))
}

/// Exact scalars for evaluating monomials.
pub trait ExactScalar: Clone + PartialEq + fmt::Debug {
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn mul_ref(&self, other: &Self) -> Self;
    fn render(&self) -> String;

    fn pow(&self, mut e: u32) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }
}

impl ExactScalar for BigRational {
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl ExactScalar for GfElem {
    fn one_like(&self) -> Self {
        GfElem::new(self.field, 1)
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn mul_ref(&self, other: &Self) -> Self {
        GfElem::new(self.field, self.field.mul(self.value, other.value))
    }
    fn render(&self) -> String {
        self.value.to_string()
    }
}

/// An element of `Q(zeta_k)`, stored as its residue modulo the `k`-th cyclotomic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    pub order: usize,
    pub residue: Poly,
}

impl Cyclotomic {
    pub fn new(order: usize, p: Poly) -> Self {
        Cyclotomic { order, residue: p.rem(&Poly::cyclotomic(order)) }
    }

    pub fn rational(order: usize, c: BigRational) -> Self {
        Self::new(order, Poly::constant(c))
    }

    pub fn zeta(order: usize) -> Self {
        Self::new(order, Poly::x())
    }
}

impl ExactScalar for Cyclotomic {
    fn one_like(&self) -> Self {
        Cyclotomic::rational(self.order, BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }
    fn mul_ref(&self, other: &Self) -> Self {
        Cyclotomic::new(self.order, &self.residue * &other.residue)
    }
    fn render(&self) -> String {
        self.residue.to_string().replace('x', &format!("z{}", self.order))
    }
}

fn check_point<S: ExactScalar>(w: &WeightMatrix, p: &[S]) -> Result<()> {
    if p.len() != w.coords() {
        return Err(Error::Weights(format!("point has {} coordinates, expected {}", p.len(), w.coords())));
    }
    Ok(())
}

/// First invariant monomial (in [`Monomial::grlex_cmp`] order) within the cap
/// and support taking different values at `v` and `v_prime`.
///
/// Only coordinates non-zero at `v` or `v_prime` are enumerated: a monomial
/// through any other coordinate vanishes at both points.
pub fn separates<S: ExactScalar>(
    w: &WeightMatrix,
    v: &[S],
    v_prime: &[S],
    degree_cap: u32,
    support: Option<&[usize]>,
) -> Result<Option<Monomial>> {
    check_point(w, v)?;
    check_point(w, v_prime)?;
    if degree_cap > MAX_DEGREE_CAP {
        return Err(Error::InvalidParameter(format!("degree cap {degree_cap} exceeds {MAX_DEGREE_CAP}")));
    }
    let allowed: Vec<usize> =
        support_coords(w, support)?.into_iter().filter(|&c| !v[c].is_zero() || !v_prime[c].is_zero()).collect();
    Ok(invariant_monomials_on(w, degree_cap, &allowed).into_iter().find(|m| m.eval(v) != m.eval(v_prime)))
}

/// `(first * e_1, e_1, e_2, ..., e_n)` flattened into `V^{n+1}`.
pub fn example_point<S: ExactScalar>(n: usize, first: S, one: &S, zero: &S) -> Vec<S> {
    let mut p = vec![zero.clone(); n * (n + 1)];
    p[0] = first;
    p[n] = one.clone();
    for j in 1..n {
        p[(j + 1) * n + j] = one.clone();
    }
    p
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportVerdict {
    /// 1-based copy indices.
    pub support: Vec<usize>,
    pub separating_monomial: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpnessReport {
    pub n: usize,
    pub exponent: i64,
    pub field: String,
    pub degree_cap: u32,
    pub full: SupportVerdict,
    pub restricted: Vec<SupportVerdict>,
    /// Separated with all `n+1` copies and by no `n` of them.
    pub ok: bool,
}

fn verdict(w: &WeightMatrix, m: Option<Monomial>, support: Vec<usize>) -> SupportVerdict {
    SupportVerdict { support: support.iter().map(|c| c + 1).collect(), separating_monomial: m.map(|m| m.render(w.dim)) }
}

/// Separation of `(root * e_1, e_1, ..., e_n)` and `(e_1, e_1, ..., e_n)` with
/// all copies and with each choice of `n` copies.
pub fn sharpness_check<S: ExactScalar>(
    n: usize,
    exponent: i64,
    root: S,
    one: S,
    zero: S,
    field: &str,
    degree_cap: u32,
) -> Result<SharpnessReport> {
    let w = WeightMatrix::example(n, exponent)?;
    let v = example_point(n, root, &one, &zero);
    let v_prime = example_point(n, one.clone(), &one, &zero);
    let full = separates(&w, &v, &v_prime, degree_cap, None)?;
    let mut ok = full.is_some();
    let full = verdict(&w, full, (0..=n).collect());
    let mut restricted = Vec::new();
    for skip in 0..=n {
        let support: Vec<usize> = (0..=n).filter(|&c| c != skip).collect();
        let m = separates(&w, &v, &v_prime, degree_cap, Some(&support))?;
        ok &= m.is_none();
        restricted.push(verdict(&w, m, support));
    }
    Ok(SharpnessReport { n, exponent, field: field.into(), degree_cap, full, restricted, ok })
}

/// The weight `-2` example over Q with `v = (-e_1, e_1, ..., e_n)`.
pub fn sharpness(n: usize, degree_cap: u32) -> Result<SharpnessReport> {
    sharpness_check(n, 2, rat(-1), rat(1), rat(0), "Q", degree_cap)
}

/// The weight `-3` example over GF(4) with `v = (omega e_1, e_1, ..., e_n)`.
pub fn char2_variant(n: usize, degree_cap: u32) -> Result<SharpnessReport> {
    let f = gf(4)?;
    let omega = (1..4u8).find(|&a| f.order_of(a) == Some(3)).expect("GF(4)^* is cyclic of order 3");
    sharpness_check(n, 3, GfElem::new(f, omega), GfElem::new(f, 1), GfElem::new(f, 0), "GF(4)", degree_cap)
}

/// Whether every invariant monomial of the example matrix up to the cap has
/// multidegree `(exponent * d, d, ..., d)`.
pub fn multidegree_shape_holds(n: usize, exponent: i64, degree_cap: u32) -> Result<bool> {
    let w = WeightMatrix::example(n, exponent)?;
    Ok(invariant_monomials(&w, degree_cap, None)?.iter().all(|m| {
        let md = m.multidegree(n);
        let d = md[1];
        md[0] as i64 == exponent * d as i64 && md[1..].iter().all(|&x| x == d)
    }))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanReport {
    pub trials: usize,
    pub separated: usize,
    pub agreements: usize,
    pub disagreements: usize,
}

impl SpanReport {
    pub fn ok(&self) -> bool {
        self.disagreements == 0
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(-3i64..=3)), BigInt::from(rng.gen_range(1i64..=2)))
}

fn random_unit(rng: &mut ChaCha8Rng) -> BigRational {
    const UNITS: [(i64, i64); 6] = [(1, 1), (-1, 1), (2, 1), (1, 2), (-3, 1), (2, 3)];
    let (p, q) = UNITS[rng.gen_range(0..UNITS.len())];
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn det(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut d = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !Zero::is_zero(&a[r][col])) else {
            return BigRational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            d = -d;
        }
        d *= a[col][col].clone();
        for r in col + 1..n {
            let f = &a[r][col] / &a[col][col];
            let pivot_row = a[col].clone();
            for (x, p) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                *x -= &f * p;
            }
        }
    }
    d
}

/// `u_j = sum_i A_ij v_i` on each copy.
fn recombine(w: &WeightMatrix, v: &[BigRational], a: &[Vec<BigRational>]) -> Vec<BigRational> {
    let mut u = vec![BigRational::zero(); v.len()];
    for j in 0..w.copies {
        for i in 0..w.copies {
            for k in 0..w.dim {
                u[w.coord(j, k)] += &a[i][j] * &v[w.coord(i, k)];
            }
        }
    }
    u
}

fn act(w: &WeightMatrix, alpha: &[BigRational], v: &[BigRational]) -> Vec<BigRational> {
    v.iter()
        .enumerate()
        .map(|(c, x)| {
            let mut y = x.clone();
            for (r, a) in alpha.iter().enumerate() {
                let e = w.weight(r, c);
                let p = num::pow::pow(a.clone(), e.unsigned_abs() as usize);
                y = if e >= 0 { y * p } else { y / p };
            }
            y
        })
        .collect()
}

/// Randomized check that monomial separability of `(v, v')` in `V^m` agrees
/// with that of `(u, u')` whenever the pairs `v_i + v'_i` and `u_j + u'_j`
/// span the same space. The `u` are taken as random invertible integer
/// recombinations of the `v`. Pairs are drawn as: `v'` random, `v'` a torus
/// translate of `v`, `v' = v`, or `v'` equal to `v` with the first coordinate
/// negated.
pub fn span_data_respects_separation(
    w: &WeightMatrix,
    trials: usize,
    seed: u64,
    degree_cap: u32,
) -> Result<SpanReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = w.copies;
    let mut report = SpanReport::default();
    for _ in 0..trials {
        let v: Vec<BigRational> = (0..w.coords()).map(|_| random_rational(&mut rng)).collect();
        let v_prime = match rng.gen_range(0..4) {
            0 => (0..w.coords()).map(|_| random_rational(&mut rng)).collect(),
            1 => {
                let alpha: Vec<BigRational> = (0..w.rank()).map(|_| random_unit(&mut rng)).collect();
                act(w, &alpha, &v)
            }
            2 => v.clone(),
            _ => {
                let mut p = v.clone();
                p[0] = -p[0].clone();
                p
            }
        };
        let a = loop {
            let a: Vec<Vec<BigRational>> =
                (0..m).map(|_| (0..m).map(|_| rat(rng.gen_range(-2i64..=2))).collect()).collect();
            if !Zero::is_zero(&det(a.clone())) {
                break a;
            }
        };
        let u = recombine(w, &v, &a);
        let u_prime = recombine(w, &v_prime, &a);
        let s1 = separates(w, &v, &v_prime, degree_cap, None)?.is_some();
        let s2 = separates(w, &u, &u_prime, degree_cap, None)?.is_some();
        report.trials += 1;
        report.separated += s1 as usize;
        if s1 == s2 {
            report.agreements += 1;
        } else {
            report.disagreements += 1;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn displayed_monomial(n: usize) -> Monomial {
        let w = WeightMatrix::example(n, 2).unwrap();
        let mut m = Monomial::one(w.coords());
        m.exponents[w.coord(0, 0)] = 1;
        m.exponents[w.coord(1, 0)] = 1;
        for j in 1..n {
            m.exponents[w.coord(j + 1, j)] = 1;
        }
        m
    }

    #[test]
    fn invariance_examples() {
        let w = WeightMatrix::example(3, 2).unwrap();
        assert!(is_invariant(&w, &displayed_monomial(3)));
        assert!(is_invariant(&w, &Monomial::one(12)));
        let mut bare = Monomial::one(12);
        bare.exponents[0] = 1;
        assert!(!is_invariant(&w, &bare));
        assert_eq!(displayed_monomial(3).render(3), "x(1)_1 x(2)_1 x(3)_2 x(4)_3");
    }

    #[test]
    fn enumeration_matches_naive() {
        let w = WeightMatrix::example(3, 2).unwrap();
        for cap in 0..=6u32 {
            let fast: Vec<Monomial> = invariant_monomials(&w, cap, None).unwrap();
            let mut naive = Vec::new();
            for deg in 0..=cap as usize {
                for combo in (0..w.coords()).combinations_with_replacement(deg) {
                    let mut m = Monomial::one(w.coords());
                    for c in combo {
                        m.exponents[c] += 1;
                    }
                    if is_invariant(&w, &m) {
                        naive.push(m);
                    }
                }
            }
            naive.sort_by(Monomial::grlex_cmp);
            assert_eq!(fast, naive, "cap {cap}");
        }
    }

    #[test]
    fn empty_support_gives_constant_only() {
        let w = WeightMatrix::example(3, 2).unwrap();
        assert_eq!(invariant_monomials(&w, 8, Some(&[])).unwrap(), vec![Monomial::one(12)]);
    }

    #[test]
    fn three_copies_force_extreme_b() {
        let w = WeightMatrix::example(3, 2).unwrap();
        let v = example_point(3, rat(-1), &rat(1), &rat(0));
        for skip in 0..4 {
            let support: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
            for m in invariant_monomials(&w, 12, Some(&support)).unwrap() {
                if ExactScalar::is_zero(&m.eval(&v)) {
                    continue;
                }
                let d = m.multidegree(3)[1];
                let b = m.exponents[0];
                assert!(b == 0 || b == 2 * d, "{}", m.render(3));
            }
        }
    }

    #[test]
    fn sharpness_over_q() {
        for n in 2..=5 {
            let r = sharpness(n, DEFAULT_DEGREE_CAP).unwrap();
            assert!(r.ok, "{r:?}");
            assert_eq!(r.full.separating_monomial.as_deref(), Some(displayed_monomial(n).render(n).as_str()));
        }
        let w = WeightMatrix::example(3, 2).unwrap();
        let v = example_point(3, rat(-1), &rat(1), &rat(0));
        let m = displayed_monomial(3);
        assert_eq!((m.eval(&v), m.eval(&example_point(3, rat(1), &rat(1), &rat(0)))), (rat(-1), rat(1)));
        assert_eq!(separates(&w, &v, &v, 12, None).unwrap(), None);
    }

    #[test]
    fn sharpness_over_odd_finite_fields() {
        for q in [3, 5, 7, 9] {
            let f = gf(q).unwrap();
            let r = sharpness_check(3, 2, GfElem::new(f, f.neg(1)), GfElem::new(f, 1), GfElem::new(f, 0), "GF", 12)
                .unwrap();
            assert!(r.ok, "GF({q})");
        }
        // -1 = 1 in characteristic 2, so the two points coincide
        let f = gf(2).unwrap();
        let r = sharpness_check(3, 2, GfElem::new(f, 1), GfElem::new(f, 1), GfElem::new(f, 0), "GF(2)", 12).unwrap();
        assert!(r.full.separating_monomial.is_none());
    }

    #[test]
    fn char2_and_cyclotomic_variants() {
        for n in 3..=5 {
            assert!(char2_variant(n, DEFAULT_DEGREE_CAP).unwrap().ok, "n = {n}");
        }
        let r = sharpness_check(
            3,
            3,
            Cyclotomic::zeta(3),
            Cyclotomic::rational(3, rat(1)),
            Cyclotomic::rational(3, rat(0)),
            "Q(z3)",
            12,
        )
        .unwrap();
        assert!(r.ok);
        let f = gf(4).unwrap();
        let r = sharpness_check(3, 3, GfElem::new(f, 1), GfElem::new(f, 1), GfElem::new(f, 0), "GF(4)", 12).unwrap();
        assert!(r.full.separating_monomial.is_none());
    }

    #[test]
    fn cyclotomic_arithmetic() {
        let z = Cyclotomic::zeta(3);
        assert_eq!(z.pow(3), z.one_like());
        assert_ne!(z.pow(2), z.one_like());
        let i = Cyclotomic::zeta(4);
        assert_eq!(i.pow(2), Cyclotomic::rational(4, rat(-1)));
    }

    #[test]
    fn multidegree_shape() {
        assert!(multidegree_shape_holds(3, 2, 12).unwrap());
        assert!(multidegree_shape_holds(4, 3, 12).unwrap());
    }

    #[test]
    fn span_lemma_small_run() {
        let w = WeightMatrix::example(3, 2).unwrap().with_copies(3);
        let r = span_data_respects_separation(&w, 20, 11, 4).unwrap();
        assert!(r.ok(), "{r:?}");
        assert!(r.separated > 0 && r.separated < r.trials);
    }

    #[test]
    fn bad_inputs() {
        assert!(WeightMatrix::example(1, 2).is_err());
        assert!(WeightMatrix::new(vec![vec![1, 2], vec![1]], 2).is_err());
        let w = WeightMatrix::example(3, 2).unwrap();
        assert!(invariant_monomials(&w, 41, None).is_err());
        assert!(invariant_monomials(&w, 4, Some(&[7])).is_err());
        assert!(separates(&w, &[rat(1)], &[rat(1)], 4, None).is_err());
    }
}
