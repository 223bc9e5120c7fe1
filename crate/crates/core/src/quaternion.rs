//! Exact quaternions with coordinates in Q(sqrt 2, sqrt 5).
//!
//! Only used to build the binary polyhedral groups; once a group is closed the
//! quaternions are discarded and only the multiplication table is kept.

use num::rational::Rational64;
use num::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// `a + b*sqrt2 + c*sqrt5 + d*sqrt10` with rational coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticFieldScalar(pub [Rational64; 4]);

impl QuadraticFieldScalar {
    pub fn new(a: Rational64, b: Rational64, c: Rational64, d: Rational64) -> Self {
        QuadraticFieldScalar([a, b, c, d])
    }

    pub fn rational(a: Rational64) -> Self {
        Self::new(a, Rational64::zero(), Rational64::zero(), Rational64::zero())
    }

    pub fn zero() -> Self {
        Self::rational(Rational64::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational64::one())
    }

    pub fn sqrt2() -> Self {
        Self::new(Rational64::zero(), Rational64::one(), Rational64::zero(), Rational64::zero())
    }

    pub fn sqrt5() -> Self {
        Self::new(Rational64::zero(), Rational64::zero(), Rational64::one(), Rational64::zero())
    }

    pub fn scale(self, r: Rational64) -> Self {
        QuadraticFieldScalar(self.0.map(|x| x * r))
    }
}

impl Add for QuadraticFieldScalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut out = self.0;
        for (a, b) in out.iter_mut().zip(o.0) {
            *a += b;
        }
        QuadraticFieldScalar(out)
    }
}

impl Sub for QuadraticFieldScalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for QuadraticFieldScalar {
    type Output = Self;
    fn neg(self) -> Self {
        QuadraticFieldScalar(self.0.map(|x| -x))
    }
}

impl Mul for QuadraticFieldScalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let [a1, b1, c1, d1] = self.0;
        let [a2, b2, c2, d2] = o.0;
        let two = Rational64::from_integer(2);
        let five = Rational64::from_integer(5);
        let ten = Rational64::from_integer(10);
        // sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2 sqrt5, sqrt5*sqrt10 = 5 sqrt2
        QuadraticFieldScalar([
            a1 * a2 + two * b1 * b2 + five * c1 * c2 + ten * d1 * d2,
            a1 * b2 + b1 * a2 + five * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + two * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        ])
    }
}

/// `w + x i + y j + z k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: QuadraticFieldScalar,
    pub x: QuadraticFieldScalar,
    pub y: QuadraticFieldScalar,
    pub z: QuadraticFieldScalar,
}

impl Quaternion {
    pub fn new(
        w: QuadraticFieldScalar,
        x: QuadraticFieldScalar,
        y: QuadraticFieldScalar,
        z: QuadraticFieldScalar,
    ) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn one() -> Self {
        let o = QuadraticFieldScalar::zero();
        Quaternion::new(QuadraticFieldScalar::one(), o, o, o)
    }

    pub fn norm_squared(&self) -> QuadraticFieldScalar {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn conjugate(&self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a1, b1, c1, d1) = (self.w, self.x, self.y, self.z);
        let (a2, b2, c2, d2) = (o.w, o.x, o.y, o.z);
        Quaternion {
            w: a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            x: a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            y: a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            z: a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn field_relations() {
        let s2 = QuadraticFieldScalar::sqrt2();
        let s5 = QuadraticFieldScalar::sqrt5();
        assert_eq!(s2 * s2, QuadraticFieldScalar::rational(r(2, 1)));
        assert_eq!(s5 * s5, QuadraticFieldScalar::rational(r(5, 1)));
        let s10 = s2 * s5;
        assert_eq!(s10 * s10, QuadraticFieldScalar::rational(r(10, 1)));
        assert_eq!(s10 * s2, s5.scale(r(2, 1)));
        assert_eq!(s10 * s5, s2.scale(r(5, 1)));
    }

    #[test]
    fn quaternion_relations() {
        let o = QuadraticFieldScalar::zero();
        let l = QuadraticFieldScalar::one();
        let i = Quaternion::new(o, l, o, o);
        let j = Quaternion::new(o, o, l, o);
        let k = Quaternion::new(o, o, o, l);
        let minus_one = Quaternion::new(-l, o, o, o);
        assert_eq!(i * i, minus_one);
        assert_eq!(j * j, minus_one);
        assert_eq!(k * k, minus_one);
        assert_eq!(i * j * k, minus_one);
        assert_eq!(i * j, k);
        assert_eq!(j * i, Quaternion::new(o, o, o, -l));
        let q = Quaternion::new(l, l.scale(r(1, 2)), o, l);
        assert_eq!(q * q.conjugate(), Quaternion::new(q.norm_squared(), o, o, o));
    }
}
