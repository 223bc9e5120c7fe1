//! Finite fields GF(q) for prime powers q <= 9, by lookup table.
//!
//! An element is an integer in `0..q` whose base-`p` digits are the
//! coefficients of a polynomial in `t`, reduced modulo a fixed irreducible:
//! `t^2 + t + 1` for GF(4), `t^3 + t + 1` for GF(8), `t^2 + 1` for GF(9).

use crate::error::{Error, Result};
use std::fmt;
use std::sync::OnceLock;

pub struct FiniteField {
    q: usize,
    p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for FiniteField {}

fn prime_power(q: usize) -> Option<(usize, usize, Vec<usize>)> {
    // (p, k, low coefficients of the monic irreducible of degree k)
    match q {
        2 | 3 | 5 | 7 => Some((q, 1, vec![0])),
        4 => Some((2, 2, vec![1, 1])),
        8 => Some((2, 3, vec![1, 1, 0])),
        9 => Some((3, 2, vec![1, 0])),
        _ => None,
    }
}

impl FiniteField {
    fn build(q: usize) -> Option<FiniteField> {
        let (p, k, modulus) = prime_power(q)?;
        let digits = |x: usize| -> Vec<usize> { (0..k).map(|i| x / p.pow(i as u32) % p).collect() };
        let undigits = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&sum) as u8;
                let mut prod = vec![0usize; 2 * k];
                for i in 0..k {
                    for j in 0..k {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                // t^k = -(modulus low part)
                for deg in (k..2 * k).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, &m) in modulus.iter().enumerate() {
                        prod[deg - k + i] = (prod[deg - k + i] + c * (p - m)) % p;
                    }
                }
                mul[a * q + b] = undigits(&prod[..k]) as u8;
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8).collect();
        let inv =
            (0..q).map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u8 }).collect();
        Some(FiniteField { q, p, add, mul, neg, inv })
    }

    pub fn size(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: u8, mut e: u64) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The image of the integer `n` under `Z -> GF(q)`.
    pub fn from_int(&self, n: i64) -> u8 {
        n.rem_euclid(self.p as i64) as u8
    }

    /// Multiplicative order of a non-zero element.
    pub fn order_of(&self, a: u8) -> Option<usize> {
        if a == 0 {
            return None;
        }
        let mut k = 1;
        let mut x = a;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }
}

static FIELDS: [OnceLock<Option<FiniteField>>; 10] = [const { OnceLock::new() }; 10];

/// Shared table for GF(q).
pub fn gf(q: usize) -> Result<&'static FiniteField> {
    FIELDS.get(q).and_then(|cell| cell.get_or_init(|| FiniteField::build(q)).as_ref()).ok_or(Error::UnsupportedField(q))
}

/// A GF(q) element carrying its field.
#[derive(Clone, Copy)]
pub struct GfElem {
    pub field: &'static FiniteField,
    pub value: u8,
}

impl GfElem {
    pub fn new(field: &'static FiniteField, value: u8) -> Self {
        GfElem { field, value }
    }
}

impl PartialEq for GfElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.q == other.field.q && self.value == other.value
    }
}

impl Eq for GfElem {}

impl fmt::Debug for GfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@GF({})", self.value, self.field.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = gf(q).unwrap();
            for a in 0..q as u8 {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "GF({q}) inverse of {a}");
                }
                for b in 0..q as u8 {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q as u8 {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
            // the multiplicative group is cyclic of order q - 1
            assert!((1..q as u8).any(|a| f.order_of(a) == Some(q - 1)));
        }
    }

    #[test]
    fn unsupported_sizes() {
        for q in [0, 1, 6, 10, 16] {
            assert_eq!(gf(q).unwrap_err(), Error::UnsupportedField(q));
        }
    }

    #[test]
    fn gf4_primitive_cube_root() {
        let f = gf(4).unwrap();
        // omega = t satisfies t^2 + t + 1 = 0
        let omega = 2;
        assert_eq!(f.add(f.add(f.mul(omega, omega), omega), 1), 0);
        assert_eq!(f.order_of(omega), Some(3));
        assert_eq!(f.characteristic(), 2);
    }

    #[test]
    fn gf7_example_scalars() {
        let f = gf(7).unwrap();
        assert_eq!(f.order_of(2), Some(3));
        assert_eq!(f.mul(2, 2), 4);
        assert_eq!(f.from_int(-1), 6);
    }
}
