//! Root-multiplicity predicates for binary forms over Q.
//!
//! A form `v = sum c_i x^i y^(d-i)` is studied through `u(t) = v(t, 1)`:
//! finite roots of `u` are the linear factors `x - a y`, and the factor `y`
//! appears with multiplicity `d - deg u`. Everything is gcd based, so a
//! common root is certified in the algebraic closure without ever being
//! computed; no root coordinates appear in any output.

use crate::error::{Error, Result};
use crate::poly::{rat, Poly};
use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// `coeffs[i]` multiplies `x^i y^(d-i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<BigRational>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Form("a form needs at least one coefficient".into()));
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        BinaryForm { coeffs: coeffs.iter().map(|&c| rat(c)).collect() }
    }

    pub fn zero(d: usize) -> Self {
        BinaryForm { coeffs: vec![BigRational::zero(); d + 1] }
    }

    /// `a x + b y`
    pub fn linear(a: BigRational, b: BigRational) -> Self {
        BinaryForm { coeffs: vec![b, a] }
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn y() -> Self {
        Self::from_ints(&[1, 0])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `v(t, 1)`
    pub fn dehomogenize(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    /// The degree-`d` form whose dehomogenization is `p`.
    pub fn homogenize(p: &Poly, d: usize) -> Self {
        assert!(p.degree().is_none_or(|k| k <= d));
        BinaryForm { coeffs: (0..=d).map(|i| p.coeff(i)).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        BinaryForm { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::Form("degrees differ".into()));
        }
        Ok(BinaryForm { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BinaryForm { coeffs: out }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::from_ints(&[1]), |acc, _| acc.mul(self))
    }

    /// `v(a x + b y, c x + d y)` for the matrix `[[a, b], [c, d]]`.
    pub fn substitute(&self, m: &[[BigRational; 2]; 2]) -> Self {
        let new_x = Self::linear(m[0][0].clone(), m[0][1].clone());
        let new_y = Self::linear(m[1][0].clone(), m[1][1].clone());
        let d = self.degree();
        let mut out = Self::zero(d);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = new_x.pow(i).mul(&new_y.pow(d - i)).scale(c);
            out = out.add(&term).expect("same degree");
        }
        out
    }

    /// Whether `other = c * self` for some scalar `c` (zero forms are proportional to everything).
    pub fn is_proportional(&self, other: &Self) -> bool {
        if self.degree() != other.degree() {
            return false;
        }
        let n = self.coeffs.len();
        (0..n).all(|i| (0..n).all(|j| &self.coeffs[i] * &other.coeffs[j] == &self.coeffs[j] * &other.coeffs[i]))
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = |name: &str, k: usize| match k {
                0 => String::new(),
                1 => name.to_string(),
                _ => format!("{name}^{k}"),
            };
            let mono =
                [var("x", i), var("y", d - i)].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join("*");
            terms.push(match (mono.is_empty(), c.is_one(), *c == -BigRational::one()) {
                (true, _, _) => c.to_string(),
                (false, true, _) => mono,
                (false, _, true) => format!("-{mono}"),
                _ => format!("{c}*{mono}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryForm({self})")
    }
}

impl Serialize for BinaryForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for BinaryForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<serde_json::Value> = Vec::deserialize(d)?;
        let coeffs = raw.iter().map(parse_rational).collect::<Result<Vec<_>>>().map_err(serde::de::Error::custom)?;
        BinaryForm::new(coeffs).map_err(serde::de::Error::custom)
    }
}

/// Accepts `"p/q"`, `"p"` or a JSON integer.
pub fn parse_rational(v: &serde_json::Value) -> Result<BigRational> {
    match v {
        serde_json::Value::String(s) => {
            BigRational::from_str(s.trim()).map_err(|e| Error::Form(format!("bad rational {s:?}: {e}")))
        }
        serde_json::Value::Number(n) if n.is_i64() => Ok(BigRational::from_integer(BigInt::from(n.as_i64().unwrap()))),
        other => Err(Error::Form(format!("expected a rational, got {other}"))),
    }
}

/// Root multiplicities of a non-zero form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityProfile {
    pub degree: usize,
    /// Multiplicity of the root `y`.
    pub infinity_mult: usize,
    /// `(multiplicity, degree of the squarefree factor with exactly that multiplicity)`, ascending.
    pub finite: Vec<(usize, usize)>,
}

impl MultiplicityProfile {
    pub fn total(&self) -> usize {
        self.infinity_mult + self.finite.iter().map(|(e, k)| e * k).sum::<usize>()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.finite.iter().map(|&(e, _)| e).max().unwrap_or(0).max(self.infinity_mult)
    }

    /// Number of distinct roots over the algebraic closure.
    pub fn distinct_roots(&self) -> usize {
        (self.infinity_mult > 0) as usize + self.finite.iter().map(|&(_, k)| k).sum::<usize>()
    }
}

fn nonzero(v: &BinaryForm) -> Result<()> {
    if v.is_zero() {
        Err(Error::ZeroForm)
    } else {
        Ok(())
    }
}

/// Squarefree factors `(multiplicity, factor)` of a non-zero polynomial.
fn squarefree_decomposition(u: &Poly) -> Vec<(usize, Poly)> {
    let mut out = Vec::new();
    if u.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut g = Poly::gcd(u, &u.derivative());
    let mut w = u.exact_div(&g).monic();
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = Poly::gcd(&w, &g);
        let factor = w.exact_div(&y);
        if factor.degree().unwrap_or(0) > 0 {
            out.push((i, factor.monic()));
        }
        g = g.exact_div(&y);
        w = y;
        i += 1;
    }
    out
}

pub fn multiplicity_profile(v: &BinaryForm) -> Result<MultiplicityProfile> {
    nonzero(v)?;
    let u = v.dehomogenize();
    let deg_u = u.degree().expect("non-zero");
    let finite = squarefree_decomposition(&u).into_iter().map(|(e, f)| (e, f.degree().unwrap())).collect();
    Ok(MultiplicityProfile { degree: v.degree(), infinity_mult: v.degree() - deg_u, finite })
}

/// `max(ceil(t), 1)`: a multiplicity threshold of zero or below is read as one,
/// so non-zero constants have no roots.
pub fn effective_threshold(t: &BigRational) -> usize {
    let c = t.ceil().to_integer();
    if c < BigInt::one() {
        1
    } else {
        c.try_into().unwrap_or(usize::MAX)
    }
}

/// `d/2` as an exact rational.
pub fn half_degree(d: usize) -> BigRational {
    BigRational::new(BigInt::from(d), BigInt::from(2))
}

pub fn has_root_mult_ge(v: &BinaryForm, threshold: &BigRational) -> Result<bool> {
    let p = multiplicity_profile(v)?;
    Ok(p.max_multiplicity() >= effective_threshold(threshold))
}

/// `gcd(u, u', ..., u^(k-1))`: the product of the finite roots of multiplicity `>= k`.
fn high_part(u: &Poly, k: usize) -> Poly {
    let mut g = u.clone();
    let mut der = u.clone();
    for _ in 1..k {
        der = der.derivative();
        g = Poly::gcd(&g, &der);
    }
    g
}

/// Whether all non-zero forms share a root of multiplicity at least `threshold`.
/// Zero forms have every root with unbounded multiplicity and are skipped.
pub fn common_root_mult_ge(forms: &[BinaryForm], threshold: &BigRational) -> Result<bool> {
    let k = effective_threshold(threshold);
    let live: Vec<&BinaryForm> = forms.iter().filter(|v| !v.is_zero()).collect();
    if live.is_empty() {
        return Err(Error::ZeroForm);
    }
    let mut all_infinity = true;
    let mut g: Option<Poly> = None;
    for v in live {
        let u = v.dehomogenize();
        all_infinity &= v.degree() - u.degree().unwrap() >= k;
        let h = high_part(&u, k);
        g = Some(match g {
            None => h,
            Some(acc) => Poly::gcd(&acc, &h),
        });
    }
    Ok(all_infinity || g.is_some_and(|g| g.degree().unwrap_or(0) >= 1))
}

/// For even `d`, `v = c q^(d/2)` with `q` a quadratic form with two distinct
/// roots. The quadratic is monic in `x` unless `y` divides it, in which case
/// it is `y` times a monic linear form (or `x y`).
pub fn is_balanced_square(v: &BinaryForm) -> Result<Option<(BigRational, BinaryForm)>> {
    let d = v.degree();
    if d % 2 == 1 {
        return Err(Error::Form(format!("degree {d} is odd")));
    }
    let p = multiplicity_profile(v)?;
    let e = d / 2;
    if d == 0
        || p.distinct_roots() != 2
        || p.finite.iter().any(|&(m, _)| m != e)
        || !matches!(p.infinity_mult, 0) && p.infinity_mult != e
    {
        return Ok(None);
    }
    let u = v.dehomogenize();
    let radical = u.exact_div(&Poly::gcd(&u, &u.derivative())).monic();
    let q = BinaryForm::homogenize(&radical, 2);
    let c = u.leading();
    if q.pow(e).scale(&c) == *v {
        Ok(Some((c, q)))
    } else {
        Ok(None)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "form")]
pub enum Limit {
    NoLimit,
    Zero,
    Balanced(BinaryForm),
}

/// Limit at `z -> 0` of the one-parameter subgroup scaling `l` by `z` and `m`
/// by `z^-1`, computed from `v = sum a_i l^i m^(d-i)`.
pub fn limit_along_torus(v: &BinaryForm, l: &BinaryForm, m: &BinaryForm) -> Result<Limit> {
    if l.degree() != 1 || m.degree() != 1 {
        return Err(Error::Form("l and m must be linear forms".into()));
    }
    // [l; m] = A [x; y] with A = [[l_x, l_y], [m_x, m_y]]
    let (lx, ly, mx, my) = (&l.coeffs[1], &l.coeffs[0], &m.coeffs[1], &m.coeffs[0]);
    let det = lx * my - ly * mx;
    if det.is_zero() {
        return Err(Error::Form("l and m are linearly dependent".into()));
    }
    let inv = [[my / &det, -ly / &det], [-mx / &det, lx / &det]];
    let a = v.substitute(&inv);
    let d = v.degree();
    let Some(mult) = a.coeffs.iter().position(|c| !c.is_zero()) else {
        return Ok(Limit::Zero);
    };
    if 2 * mult > d {
        Ok(Limit::Zero)
    } else if 2 * mult == d {
        Ok(Limit::Balanced(l.mul(m).pow(d / 2).scale(&a.coeffs[mult])))
    } else {
        Ok(Limit::NoLimit)
    }
}

/// Forms of one common degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormTuple {
    pub degree: usize,
    pub forms: Vec<BinaryForm>,
}

impl FormTuple {
    pub fn new(forms: Vec<BinaryForm>) -> Result<Self> {
        let degree = forms.first().ok_or_else(|| Error::Form("empty tuple".into()))?.degree();
        if let Some(bad) = forms.iter().find(|f| f.degree() != degree) {
            return Err(Error::Form(format!("degree {} differs from {degree}", bad.degree())));
        }
        Ok(FormTuple { degree, forms })
    }

    pub fn all_zero(&self) -> bool {
        self.forms.iter().all(BinaryForm::is_zero)
    }

    fn nonzero(&self) -> impl Iterator<Item = &BinaryForm> {
        self.forms.iter().filter(|f| !f.is_zero())
    }

    pub fn substitute(&self, m: &[[BigRational; 2]; 2]) -> Self {
        FormTuple { degree: self.degree, forms: self.forms.iter().map(|f| f.substitute(m)).collect() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FlagReason {
    AllZero,
    NoHighRootComponent,
    NoCommonHighRoot,
    CommonHighRoot,
}

/// One-sided test: `closed_maximal_sufficient` certifies a closed maximal
/// orbit; `false` decides nothing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitFlags {
    pub closed_maximal_sufficient: bool,
    pub reason: FlagReason,
}

pub fn orbit_flags(t: &FormTuple) -> OrbitFlags {
    let half = half_degree(t.degree);
    let (ok, reason) = if t.all_zero() {
        (false, FlagReason::AllZero)
    } else if t.nonzero().any(|v| !has_root_mult_ge(v, &half).expect("non-zero")) {
        (true, FlagReason::NoHighRootComponent)
    } else if !common_root_mult_ge(&t.forms, &half).expect("some form is non-zero") {
        (true, FlagReason::NoCommonHighRoot)
    } else {
        (false, FlagReason::CommonHighRoot)
    };
    OrbitFlags { closed_maximal_sufficient: ok, reason }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Case {
    #[serde(rename = "ALL_ZERO")]
    AllZero,
    I,
    II,
    III,
    IV,
    V,
    VI,
    #[serde(rename = "TRIPLE_FRAME")]
    TripleFrame,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        write!(f, "{}", s.as_str().unwrap())
    }
}

/// Structural label of a single tuple, following the case order
/// ALL_ZERO, I, II, III, then (even degree only) IV, VI, V, TRIPLE_FRAME.
/// The cases of the separation argument concern a pair of tuples; this
/// labels one tuple by the same tests.
pub fn case_classify(t: &FormTuple) -> Case {
    if t.all_zero() {
        return Case::AllZero;
    }
    let d = t.degree;
    let half = half_degree(d);
    let live: Vec<&BinaryForm> = t.nonzero().collect();
    if live.iter().any(|v| !has_root_mult_ge(v, &half).expect("non-zero")) {
        return Case::I;
    }
    for (i, a) in live.iter().enumerate() {
        for b in &live[i + 1..] {
            if !common_root_mult_ge(&[(*a).clone(), (*b).clone()], &half).expect("non-zero") {
                return Case::II;
            }
        }
    }
    let e = d / 2;
    if common_root_mult_ge(&t.forms, &rat(e as i64 + 1)).expect("non-zero") {
        return Case::III;
    }
    assert!(d.is_multiple_of(2), "odd degree tuples are settled by case III");
    if live.iter().any(|v| is_balanced_square(v).expect("even, non-zero").is_none()) {
        return Case::IV;
    }
    if live.iter().all(|v| live[0].is_proportional(v)) {
        return Case::VI;
    }
    if common_root_mult_ge(&t.forms, &rat(e as i64)).expect("non-zero") {
        return Case::V;
    }
    Case::TripleFrame
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub case: Case,
    pub flags: OrbitFlags,
    pub profile: Vec<Option<MultiplicityProfile>>,
}

pub fn classify(t: &FormTuple) -> Classification {
    Classification {
        case: case_classify(t),
        flags: orbit_flags(t),
        profile: t.forms.iter().map(|f| multiplicity_profile(f).ok()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> BinaryForm {
        BinaryForm::x()
    }
    fn y() -> BinaryForm {
        BinaryForm::y()
    }
    fn lin(a: i64, b: i64) -> BinaryForm {
        BinaryForm::linear(rat(a), rat(b))
    }
    fn x2y2() -> BinaryForm {
        x().pow(2).mul(&y().pow(2))
    }
    fn x4_plus_y4() -> BinaryForm {
        BinaryForm::from_ints(&[1, 0, 0, 0, 1])
    }
    fn tuple(forms: Vec<BinaryForm>) -> FormTuple {
        FormTuple::new(forms).unwrap()
    }

    #[test]
    fn profiles() {
        let p = multiplicity_profile(&x2y2()).unwrap();
        assert_eq!((p.infinity_mult, p.finite.clone()), (2, vec![(2, 1)]));
        let p = multiplicity_profile(&x4_plus_y4()).unwrap();
        assert_eq!((p.infinity_mult, p.finite.clone()), (0, vec![(1, 4)]));
        let p = multiplicity_profile(&y().pow(5)).unwrap();
        assert_eq!((p.infinity_mult, p.finite.len()), (5, 0));
        assert!(matches!(multiplicity_profile(&BinaryForm::zero(3)), Err(Error::ZeroForm)));
    }

    #[test]
    fn single_form_thresholds() {
        let two = rat(2);
        assert!(has_root_mult_ge(&x().pow(3).mul(&y()), &two).unwrap());
        assert!(!has_root_mult_ge(&x4_plus_y4(), &two).unwrap());
        assert!(has_root_mult_ge(&x2y2(), &two).unwrap());
        assert!(!has_root_mult_ge(&BinaryForm::from_ints(&[5]), &rat(0)).unwrap());
        assert!(has_root_mult_ge(&x().pow(3), &half_degree(3)).unwrap());
        assert!(!has_root_mult_ge(
            &x().pow(1).mul(&y().pow(2)).mul(&lin(1, 1)).mul(&lin(1, -1)).mul(&lin(1, 2)),
            &half_degree(6)
        )
        .unwrap());
    }

    #[test]
    fn common_roots() {
        let two = rat(2);
        let a = x2y2();
        let b = x().pow(2).mul(&lin(1, 1).pow(2));
        let c = lin(1, 1).pow(2).mul(&lin(1, -1).pow(2));
        assert!(common_root_mult_ge(&[a.clone(), b], &two).unwrap());
        assert!(!common_root_mult_ge(&[a.clone(), c], &two).unwrap());
        assert_eq!(common_root_mult_ge(std::slice::from_ref(&a), &two).unwrap(), has_root_mult_ge(&a, &two).unwrap());
        assert!(common_root_mult_ge(&[y().pow(4), x().mul(&y().pow(3))], &two).unwrap());
        assert!(common_root_mult_ge(&[a.clone(), BinaryForm::zero(4)], &two).unwrap());
        assert!(common_root_mult_ge(&[BinaryForm::zero(4)], &two).is_err());
    }

    #[test]
    fn balanced_squares() {
        let (c, q) = is_balanced_square(&x2y2()).unwrap().unwrap();
        assert_eq!((c, q), (rat(1), x().mul(&y())));
        let v = BinaryForm::from_ints(&[-1, 0, 1]).pow(2);
        assert_eq!(is_balanced_square(&v).unwrap(), Some((rat(1), BinaryForm::from_ints(&[-1, 0, 1]))));
        assert_eq!(is_balanced_square(&x().pow(3).mul(&y())).unwrap(), None);
        let v = BinaryForm::from_ints(&[1, 0, 1]).pow(3).scale(&rat(-7));
        assert_eq!(is_balanced_square(&v).unwrap(), Some((rat(-7), BinaryForm::from_ints(&[1, 0, 1]))));
        assert!(is_balanced_square(&x().pow(3)).is_err());
        assert_eq!(is_balanced_square(&x().pow(4)).unwrap(), None);
    }

    #[test]
    fn limits() {
        let (l, m) = (x(), y());
        assert_eq!(limit_along_torus(&x().pow(3).mul(&y()), &l, &m).unwrap(), Limit::Zero);
        assert_eq!(limit_along_torus(&x2y2(), &l, &m).unwrap(), Limit::Balanced(x2y2()));
        assert_eq!(limit_along_torus(&x().mul(&y().pow(3)), &l, &m).unwrap(), Limit::NoLimit);
        assert!(limit_along_torus(&x2y2(), &x(), &x().scale(&rat(2))).is_err());
        // l = x + y, m = x - y; v = 3 l^2 m^2 + l^3 m
        let (l, m) = (lin(1, 1), lin(1, -1));
        let v = l.pow(2).mul(&m.pow(2)).scale(&rat(3)).add(&l.pow(3).mul(&m)).unwrap();
        assert_eq!(limit_along_torus(&v, &l, &m).unwrap(), Limit::Balanced(l.mul(&m).pow(2).scale(&rat(3))));
    }

    #[test]
    fn flags() {
        let f = orbit_flags(&tuple(vec![x4_plus_y4()]));
        assert!(f.closed_maximal_sufficient);
        let f = orbit_flags(&tuple(vec![x2y2(), lin(1, 1).pow(2).mul(&lin(1, -1).pow(2))]));
        assert_eq!(f, OrbitFlags { closed_maximal_sufficient: true, reason: FlagReason::NoCommonHighRoot });
        let f = orbit_flags(&tuple(vec![x().pow(3).mul(&y()), x().pow(4)]));
        assert_eq!(f, OrbitFlags { closed_maximal_sufficient: false, reason: FlagReason::CommonHighRoot });
    }

    #[test]
    fn cases() {
        assert_eq!(case_classify(&tuple(vec![x4_plus_y4(), x2y2()])), Case::I);
        let t = tuple(vec![x().pow(3).mul(&y()), x().pow(3).mul(&lin(1, 1))]);
        assert_eq!(case_classify(&t), Case::III);
        let frame = tuple(vec![x2y2(), x().pow(2).mul(&lin(1, 1).pow(2)), y().pow(2).mul(&lin(1, 1).pow(2))]);
        assert_eq!(case_classify(&frame), Case::TripleFrame);
        assert_eq!(case_classify(&tuple(vec![BinaryForm::zero(4), BinaryForm::zero(4)])), Case::AllZero);
        assert_eq!(case_classify(&tuple(vec![x2y2(), lin(1, 1).pow(2).mul(&lin(1, -1).pow(2))])), Case::II);
        assert_eq!(case_classify(&tuple(vec![x().pow(2).mul(&y()).mul(&lin(1, 1)), x2y2()])), Case::IV);
        assert_eq!(case_classify(&tuple(vec![x2y2(), x().pow(2).mul(&lin(1, 1).pow(2))])), Case::V);
        assert_eq!(case_classify(&tuple(vec![x2y2(), x2y2().scale(&rat(-3)), BinaryForm::zero(4)])), Case::VI);
        assert_eq!(case_classify(&tuple(vec![x().pow(3)])), Case::III);
        assert_eq!(case_classify(&tuple(vec![BinaryForm::from_ints(&[2])])), Case::I);
    }

    #[test]
    fn json_roundtrip() {
        let v: BinaryForm = serde_json::from_str(r#"["1/2", "-3", 4]"#).unwrap();
        assert_eq!(v.coeffs()[0], BigRational::new(1.into(), 2.into()));
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["1/2","-3","4"]"#);
        assert!(serde_json::from_str::<BinaryForm>(r#"["x"]"#).is_err());
        assert!(serde_json::from_str::<BinaryForm>("[]").is_err());
        assert_eq!(case_classify(&tuple(vec![v])).to_string(), "VI");
        assert_eq!(Case::TripleFrame.to_string(), "TRIPLE_FRAME");
    }

    #[test]
    fn substitution_composes() {
        let v = x().pow(2).mul(&lin(2, -1)).mul(&y());
        let m = [[rat(1), rat(2)], [rat(0), rat(1)]];
        let back = [[rat(1), rat(-2)], [rat(0), rat(1)]];
        assert_eq!(v.substitute(&m).substitute(&back), v);
        assert_eq!(x().mul(&y()).to_string(), "x*y");
        assert_eq!(BinaryForm::from_ints(&[-1, 0, 2]).to_string(), "2*x^2 - y^2");
    }
}
