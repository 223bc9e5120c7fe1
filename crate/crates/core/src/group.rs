//! Finite groups as immutable multiplication tables.
//!
//! Every table is produced by breadth-first closure of a generator list under
//! right multiplication, so element indices are canonical: the identity is
//! element 0 and the rest appear in order of discovery.

use crate::bitset::{ElemSet, MAX_ORDER};
use crate::error::{Error, Result};
use crate::quaternion::{QuadraticFieldScalar, Quaternion};
use num::rational::Rational64;
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

/// Index of an element in a [`GroupTable`].
pub type Elem = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolyhedralTag {
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl PolyhedralTag {
    pub fn short(self) -> &'static str {
        match self {
            PolyhedralTag::Tetrahedral => "tet",
            PolyhedralTag::Octahedral => "oct",
            PolyhedralTag::Icosahedral => "ico",
        }
    }
}

/// How a table was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Cyclic(usize),
    Dicyclic(usize),
    BinaryPolyhedral(PolyhedralTag),
    Generators(String),
}

#[derive(Clone, Debug)]
pub struct GroupTable {
    order: usize,
    product: Vec<u8>,
    inverse: Vec<u8>,
    labels: Vec<String>,
    provenance: Provenance,
}

impl GroupTable {
    /// Closes `generators` under right multiplication starting from `identity`.
    ///
    /// Fails with [`Error::ClosureOverflow`] once more than [`MAX_ORDER`]
    /// elements have been produced.
    pub fn from_generators<T, M, L>(
        generators: &[T],
        identity: T,
        mul: M,
        label: L,
        provenance: Provenance,
    ) -> Result<Self>
    where
        T: Clone + Eq + Hash,
        M: Fn(&T, &T) -> T,
        L: Fn(&T) -> String,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut head = 0;
        while head < elems.len() {
            for s in generators {
                let y = mul(&elems[head], s);
                if !index.contains_key(&y) {
                    if elems.len() == MAX_ORDER {
                        return Err(Error::ClosureOverflow { cap: MAX_ORDER });
                    }
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
            head += 1;
        }
        let n = elems.len();
        let mut product = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                let ab = index.get(&mul(a, b)).ok_or_else(|| Error::NotAGroup("product left the closure".into()))?;
                product.push(*ab as u8);
            }
        }
        let labels = elems.iter().map(label).collect();
        Self::from_table(n, product, labels, provenance)
    }

    /// Validates a raw table (identity must be element 0) and derives inverses.
    pub fn from_table(order: usize, product: Vec<u8>, labels: Vec<String>, provenance: Provenance) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::InvalidParameter(format!("order {order} not in 1..={MAX_ORDER}")));
        }
        if product.len() != order * order || labels.len() != order {
            return Err(Error::NotAGroup("table dimensions do not match the order".into()));
        }
        let mut inverse = vec![u8::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if product[a * order + b] == 0 {
                    inverse[a] = b as u8;
                }
            }
        }
        if inverse.contains(&u8::MAX) {
            return Err(Error::NotAGroup("some element has no right inverse".into()));
        }
        let g = GroupTable { order, product, inverse, labels, provenance };
        g.check_latin()?;
        Ok(g)
    }

    fn check_latin(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::NotAGroup("element 0 is not a two-sided identity".into()));
            }
            let mut row = ElemSet::empty();
            let mut col = ElemSet::empty();
            for b in 0..n {
                row.insert(self.mul(a, b));
                col.insert(self.mul(b, a));
            }
            if row.len() != n || col.len() != n {
                return Err(Error::NotAGroup(format!("row or column {a} is not a permutation")));
            }
        }
        Ok(())
    }

    /// Exhaustive associativity, unit and inverse check.
    pub fn check_axioms(&self) -> Result<()> {
        self.check_latin()?;
        let n = self.order;
        for a in 0..n {
            let ia = self.inv(a);
            if self.mul(a, ia) != 0 || self.mul(ia, a) != 0 {
                return Err(Error::NotAGroup(format!("inverse of {a} is one-sided")));
            }
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.product[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a] as usize
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order
    }

    pub fn check_element(&self, x: Elem) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { index: x, order: self.order })
        }
    }

    /// Short display name, e.g. `C6`, `Dic3`, `2I`.
    pub fn name(&self) -> String {
        match &self.provenance {
            Provenance::Cyclic(n) => format!("C{n}"),
            Provenance::Dicyclic(n) => format!("Dic{n}"),
            Provenance::BinaryPolyhedral(PolyhedralTag::Tetrahedral) => "2T".into(),
            Provenance::BinaryPolyhedral(PolyhedralTag::Octahedral) => "2O".into(),
            Provenance::BinaryPolyhedral(PolyhedralTag::Icosahedral) => "2I".into(),
            Provenance::Generators(name) => name.clone(),
        }
    }

    /// Least `k >= 1` with `x^k = 1`.
    pub fn element_order(&self, x: Elem) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Smallest subgroup containing `gens`.
    pub fn closure(&self, gens: &[Elem]) -> ElemSet {
        let mut set = ElemSet::singleton(0);
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            for &s in gens {
                let y = self.mul(x, s);
                if !set.contains(y) {
                    set.insert(y);
                    queue.push(y);
                }
            }
        }
        set
    }

    pub fn center(&self) -> ElemSet {
        self.elements().filter(|&z| self.elements().all(|x| self.mul(z, x) == self.mul(x, z))).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.order
    }

    pub fn commutator_subgroup(&self) -> ElemSet {
        let mut comms = ElemSet::empty();
        for x in self.elements() {
            for y in self.elements() {
                let c = self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)));
                comms.insert(c);
            }
        }
        self.closure(&comms.iter().collect::<Vec<_>>())
    }

    /// `|G / [G, G]|`.
    pub fn abelianization_order(&self) -> usize {
        self.order / self.commutator_subgroup().len()
    }

    /// Hex SHA-256 over the order and the product table.
    pub fn content_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.order as u32).to_le_bytes());
        h.update(&self.product);
        hex::encode(h.finalize())
    }

    /// Left multiplication `x -> g x` as a set map.
    pub fn translate(&self, g: Elem, set: &ElemSet) -> ElemSet {
        set.iter().map(|x| self.mul(g, x)).collect()
    }
}

pub fn build_cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidParameter(format!("cyclic order {n} not in 1..={MAX_ORDER}")));
    }
    GroupTable::from_generators(&[1 % n], 0usize, |a, b| (a + b) % n, |k| format!("g^{k}"), Provenance::Cyclic(n))
}

/// The dicyclic group `<a, b | b^4 = 1, a^n = b^2, b a b^-1 = a^-1>` of order `4n`.
///
/// Elements are carried in normal form `a^i b^j` with `0 <= i < 2n`, `j` in `{0, 1}`.
pub fn build_dicyclic(n: usize) -> Result<GroupTable> {
    if n < 2 || 4 * n > MAX_ORDER {
        return Err(Error::InvalidParameter(format!("dicyclic parameter {n} not in 2..={}", MAX_ORDER / 4)));
    }
    let m = 2 * n;
    let mul = move |&(i, j): &(usize, usize), &(k, l): &(usize, usize)| {
        // b a^k = a^-k b
        let k = if j == 1 { (m - k) % m } else { k };
        let mut e = (i + k) % m;
        let mut f = j + l;
        if f == 2 {
            e = (e + n) % m;
            f = 0;
        }
        (e, f)
    };
    let label = |&(i, j): &(usize, usize)| match (i, j) {
        (0, 0) => "1".to_string(),
        (i, 0) => format!("a^{i}"),
        (0, _) => "b".to_string(),
        (i, _) => format!("a^{i} b"),
    };
    GroupTable::from_generators(&[(1, 0), (0, 1)], (0, 0), mul, label, Provenance::Dicyclic(n))
}

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn scalar_label(s: &QuadraticFieldScalar) -> String {
    let mut out = String::new();
    for (c, unit) in s.0.iter().zip(["", "√2", "√5", "√10"]) {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() {
            "-"
        } else if out.is_empty() {
            ""
        } else {
            "+"
        };
        let mag = c.abs();
        let body = match (unit, mag == Rational64::from_integer(1)) {
            ("", _) => mag.to_string(),
            (u, true) => u.to_string(),
            (u, false) => format!("{mag}{u}"),
        };
        out.push_str(sign);
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn quaternion_label(x: &Quaternion) -> String {
    let parts = [(x.w, ""), (x.x, "i"), (x.y, "j"), (x.z, "k")];
    let mut out = String::new();
    for (c, unit) in parts {
        if c == QuadraticFieldScalar::zero() {
            continue;
        }
        let mut s = scalar_label(&c);
        let compound = s[1..].contains(['+', '-']);
        if !unit.is_empty() {
            if compound {
                s = format!("({s})");
            } else if s == "1" {
                s.clear();
            } else if s == "-1" {
                s = "-".into();
            }
        }
        if !out.is_empty() && !s.starts_with('-') {
            out.push('+');
        }
        out.push_str(&s);
        out.push_str(unit);
    }
    out
}

/// Binary tetrahedral (24), octahedral (48) or icosahedral (120) group,
/// closed from unit quaternions with coordinates in Q(sqrt 2, sqrt 5).
pub fn build_binary_polyhedral(tag: PolyhedralTag) -> Result<GroupTable> {
    type S = QuadraticFieldScalar;
    let half = S::rational(q(1, 2));
    let zero = S::zero();
    // (1 + i + j + k) / 2, order 6
    let hurwitz = Quaternion::new(half, half, half, half);
    let gens = match tag {
        PolyhedralTag::Tetrahedral => {
            vec![Quaternion::new(zero, S::one(), zero, zero), hurwitz]
        }
        PolyhedralTag::Octahedral => {
            // (1 + i) / sqrt 2, order 8
            let r = S::sqrt2().scale(q(1, 2));
            vec![Quaternion::new(r, r, zero, zero), hurwitz]
        }
        PolyhedralTag::Icosahedral => {
            // (phi + phi^-1 i + j) / 2 with phi = (1 + sqrt5) / 2, order 10
            let phi_half = S::new(q(1, 4), q(0, 1), q(1, 4), q(0, 1));
            let phi_inv_half = S::new(q(-1, 4), q(0, 1), q(1, 4), q(0, 1));
            vec![Quaternion::new(phi_half, phi_inv_half, half, zero), hurwitz]
        }
    };
    for g in &gens {
        debug_assert_eq!(g.norm_squared(), S::one());
    }
    GroupTable::from_generators(
        &gens,
        Quaternion::one(),
        |a, b| *a * *b,
        quaternion_label,
        Provenance::BinaryPolyhedral(tag),
    )
}

/// Permutation group on `0..degree` generated by the given image lists.
/// The product `p * q` applies `q` first.
pub fn build_permutation_group(name: &str, generators: &[Vec<u8>]) -> Result<GroupTable> {
    let degree = generators.first().map_or(0, Vec::len);
    for g in generators {
        let mut seen = vec![false; degree];
        if g.len() != degree
            || g.iter().any(|&x| (x as usize) >= degree || std::mem::replace(&mut seen[x as usize], true))
        {
            return Err(Error::InvalidParameter(format!("{g:?} is not a permutation of 0..{degree}")));
        }
    }
    let identity: Vec<u8> = (0..degree as u8).collect();
    GroupTable::from_generators(
        generators,
        identity,
        |p, q| q.iter().map(|&x| p[x as usize]).collect(),
        |p| cycle_notation(p),
        Provenance::Generators(name.to_string()),
    )
}

fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start] as usize;
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x] as usize;
        }
        let body: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// `C2 x C2` as the double transpositions of four points.
pub fn build_klein_four() -> Result<GroupTable> {
    build_permutation_group("V4", &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]])
}

pub fn build_alternating4() -> Result<GroupTable> {
    build_permutation_group("A4", &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
}

pub fn build_symmetric4() -> Result<GroupTable> {
    build_permutation_group("S4", &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]])
}

pub fn build_alternating5() -> Result<GroupTable> {
    build_permutation_group("A5", &[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]])
}

/// Parsed `--group` argument: `cyclic:n`, `dicyclic:n`, `binary:{tet,oct,ico}`,
/// `klein4`, and the permutation fixtures `alt4`, `sym4`, `alt5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dicyclic(usize),
    Binary(PolyhedralTag),
    Klein4,
    Alt4,
    Sym4,
    Alt5,
}

impl GroupSpec {
    pub fn build(&self) -> Result<GroupTable> {
        match *self {
            GroupSpec::Cyclic(n) => build_cyclic(n),
            GroupSpec::Dicyclic(n) => build_dicyclic(n),
            GroupSpec::Binary(tag) => build_binary_polyhedral(tag),
            GroupSpec::Klein4 => build_klein_four(),
            GroupSpec::Alt4 => build_alternating4(),
            GroupSpec::Sym4 => build_symmetric4(),
            GroupSpec::Alt5 => build_alternating5(),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unrecognised group `{s}`"));
        let (kind, param) = match s.split_once(':') {
            Some((k, p)) => (k, Some(p)),
            None => (s, None),
        };
        let number = |p: Option<&str>| p.and_then(|p| p.parse::<usize>().ok()).ok_or_else(bad);
        match kind {
            "cyclic" => Ok(GroupSpec::Cyclic(number(param)?)),
            "dicyclic" => Ok(GroupSpec::Dicyclic(number(param)?)),
            "binary" => match param {
                Some("tet") => Ok(GroupSpec::Binary(PolyhedralTag::Tetrahedral)),
                Some("oct") => Ok(GroupSpec::Binary(PolyhedralTag::Octahedral)),
                Some("ico") => Ok(GroupSpec::Binary(PolyhedralTag::Icosahedral)),
                _ => Err(bad()),
            },
            "klein4" if param.is_none() => Ok(GroupSpec::Klein4),
            "alt4" if param.is_none() => Ok(GroupSpec::Alt4),
            "sym4" if param.is_none() => Ok(GroupSpec::Sym4),
            "alt5" if param.is_none() => Ok(GroupSpec::Alt5),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dicyclic(n) => write!(f, "dicyclic:{n}"),
            GroupSpec::Binary(t) => write!(f, "binary:{}", t.short()),
            GroupSpec::Klein4 => write!(f, "klein4"),
            GroupSpec::Alt4 => write!(f, "alt4"),
            GroupSpec::Sym4 => write!(f, "sym4"),
            GroupSpec::Alt5 => write!(f, "alt5"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let c1 = build_cyclic(1).unwrap();
        assert_eq!(c1.order(), 1);
        assert_eq!(c1.element_order(0), 1);
        let c6 = build_cyclic(6).unwrap();
        assert!(c6.is_abelian());
        assert_eq!(c6.element_order(1), 6);
        assert_eq!(c6.label(1), "g^1");
        assert_eq!(c6.label(5), "g^5");
        assert!(build_cyclic(0).is_err());
    }

    #[test]
    fn dicyclic_relations() {
        let d3 = build_dicyclic(3).unwrap();
        assert_eq!(d3.order(), 12);
        let a = d3.labels().iter().position(|l| l == "a^1").unwrap();
        let b = d3.labels().iter().position(|l| l == "b").unwrap();
        assert_eq!(d3.element_order(a), 6);
        assert_eq!(d3.element_order(b), 4);
        // b a b^-1 = a^-1
        assert_eq!(d3.mul(d3.mul(b, a), d3.inv(b)), d3.inv(a));
        assert!(build_dicyclic(1).is_err());
        assert_eq!(build_dicyclic(2).unwrap().order(), 8);
    }

    #[test]
    fn dicyclic_center() {
        let d5 = build_dicyclic(5).unwrap();
        assert_eq!(d5.order(), 20);
        let center: Vec<&str> = d5.center().iter().map(|z| d5.label(z)).collect();
        assert_eq!(center, vec!["1", "a^5"]);
    }

    #[test]
    fn dicyclic_has_unique_involution() {
        for n in 2..=12 {
            let g = build_dicyclic(n).unwrap();
            let invols: Vec<_> = g.elements().filter(|&x| g.element_order(x) == 2).collect();
            assert_eq!(invols.len(), 1, "Dic{n}");
            assert_eq!(g.label(invols[0]), format!("a^{n}"));
        }
    }

    #[test]
    fn binary_polyhedral_orders() {
        for (tag, order, ab) in [
            (PolyhedralTag::Tetrahedral, 24, 3),
            (PolyhedralTag::Octahedral, 48, 2),
            (PolyhedralTag::Icosahedral, 120, 1),
        ] {
            let g = build_binary_polyhedral(tag).unwrap();
            assert_eq!(g.order(), order);
            assert_eq!(g.center().len(), 2);
            assert_eq!(g.abelianization_order(), ab);
        }
    }

    #[test]
    fn axioms_hold_for_fixtures() {
        for g in [
            build_cyclic(12).unwrap(),
            build_dicyclic(4).unwrap(),
            build_binary_polyhedral(PolyhedralTag::Octahedral).unwrap(),
            build_klein_four().unwrap(),
            build_symmetric4().unwrap(),
        ] {
            g.check_axioms().unwrap();
        }
    }

    #[test]
    fn permutation_fixture_orders() {
        assert_eq!(build_klein_four().unwrap().order(), 4);
        assert_eq!(build_alternating4().unwrap().order(), 12);
        assert_eq!(build_symmetric4().unwrap().order(), 24);
        assert_eq!(build_alternating5().unwrap().order(), 60);
        assert!(build_permutation_group("bad", &[vec![0, 0]]).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        // S6 has order 720
        let err = build_permutation_group("S6", &[vec![1, 2, 3, 4, 5, 0], vec![1, 0, 2, 3, 4, 5]]);
        assert_eq!(err.unwrap_err(), Error::ClosureOverflow { cap: MAX_ORDER });
    }

    #[test]
    fn group_spec_parsing() {
        for s in ["cyclic:6", "dicyclic:3", "binary:ico", "klein4", "alt5"] {
            assert_eq!(s.parse::<GroupSpec>().unwrap().to_string(), s);
        }
        for s in ["cyclic", "cyclic:x", "binary:foo", "klein4:2", "quux"] {
            assert!(s.parse::<GroupSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn quaternion_labels_are_readable() {
        let g = build_binary_polyhedral(PolyhedralTag::Tetrahedral).unwrap();
        assert_eq!(g.label(0), "1");
        assert!(g.labels().iter().any(|l| l == "-1"));
        assert!(g.labels().iter().any(|l| l == "i"));
        assert!(g.labels().iter().any(|l| l == "1/2+1/2i+1/2j+1/2k"));
    }
}
