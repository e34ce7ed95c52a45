//! Arithmetic modulo a runtime prime, used by the character-table backend.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::Field;

/// An element of `F_p`.
///
/// `zero()` and `one()` cannot know the modulus, so they produce an
/// unbound element (`modulus == 0`) that adopts the modulus of whatever
/// it is combined with.
#[derive(Clone, Copy, Debug)]
pub struct PrimeFieldElement {
    modulus: u64,
    value: u64,
}

impl PrimeFieldElement {
    pub fn new(modulus: u64, value: i64) -> Self {
        assert!(modulus >= 2, "modulus must be a prime");
        PrimeFieldElement {
            modulus,
            value: value.rem_euclid(modulus as i64) as u64,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn symmetric(&self) -> i64 {
        let p = self.modulus as i64;
        let v = self.value as i64;
        if p != 0 && v > p / 2 {
            v - p
        } else {
            v
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Self::one_like(self);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    fn one_like(x: &Self) -> Self {
        PrimeFieldElement {
            modulus: x.modulus,
            value: 1 % x.modulus.max(2),
        }
    }

    fn unify(a: &Self, b: &Self) -> u64 {
        match (a.modulus, b.modulus) {
            (0, m) | (m, 0) => m,
            (m, n) => {
                assert_eq!(m, n, "mixing different prime fields");
                m
            }
        }
    }

    fn reduce(modulus: u64, v: u128) -> Self {
        if modulus == 0 {
            PrimeFieldElement {
                modulus,
                value: v as u64,
            }
        } else {
            PrimeFieldElement {
                modulus,
                value: (v % modulus as u128) as u64,
            }
        }
    }
}

impl PartialEq for PrimeFieldElement {
    fn eq(&self, other: &Self) -> bool {
        let m = Self::unify(self, other);
        if m == 0 {
            return self.value == other.value;
        }
        self.value % m == other.value % m
    }
}

impl Eq for PrimeFieldElement {}

impl Add for PrimeFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let m = Self::unify(&self, &rhs);
        Self::reduce(m, self.value as u128 + rhs.value as u128)
    }
}

impl Sub for PrimeFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for PrimeFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let m = Self::unify(&self, &rhs);
        Self::reduce(m, self.value as u128 * rhs.value as u128)
    }
}

impl Neg for PrimeFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        if self.modulus == 0 {
            assert!(self.value == 0, "cannot negate an unbound non-zero element");
            return self;
        }
        PrimeFieldElement {
            modulus: self.modulus,
            value: (self.modulus - self.value % self.modulus) % self.modulus,
        }
    }
}

impl<'a> Add<&'a PrimeFieldElement> for PrimeFieldElement {
    type Output = Self;
    fn add(self, rhs: &'a Self) -> Self {
        self + *rhs
    }
}

impl<'a> Sub<&'a PrimeFieldElement> for PrimeFieldElement {
    type Output = Self;
    fn sub(self, rhs: &'a Self) -> Self {
        self - *rhs
    }
}

impl<'a> Mul<&'a PrimeFieldElement> for PrimeFieldElement {
    type Output = Self;
    fn mul(self, rhs: &'a Self) -> Self {
        self * *rhs
    }
}

impl Zero for PrimeFieldElement {
    fn zero() -> Self {
        PrimeFieldElement { modulus: 0, value: 0 }
    }

    fn is_zero(&self) -> bool {
        self.value == 0 || (self.modulus != 0 && self.value.is_multiple_of(self.modulus))
    }
}

impl One for PrimeFieldElement {
    fn one() -> Self {
        PrimeFieldElement { modulus: 0, value: 1 }
    }
}

impl Field for PrimeFieldElement {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.modulus == 0 {
            // only the unbound one is invertible without a modulus
            return (self.value == 1).then_some(*self);
        }
        Some(self.pow(self.modulus - 2))
    }

    fn from_int(n: i64) -> Self {
        assert!(n == 0 || n == 1, "from_int on an unbound prime field element");
        PrimeFieldElement {
            modulus: 0,
            value: n as u64,
        }
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A generator of the multiplicative group of `F_p`.
pub fn primitive_root(p: u64) -> u64 {
    let order = p - 1;
    let mut factors = Vec::new();
    let mut m = order;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| {
            let x = PrimeFieldElement::new(p, g as i64);
            factors.iter().all(|&q| x.pow(order / q).value != 1)
        })
        .unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_unbound_constants() {
        let a = PrimeFieldElement::new(13, 5);
        let inv = a.try_inv().unwrap();
        assert_eq!((a * inv).value(), 1);
        assert_eq!(a + PrimeFieldElement::zero(), a);
        assert_eq!(a * PrimeFieldElement::one(), a);
        assert_eq!((a - a).value(), 0);
        assert_eq!(PrimeFieldElement::new(7, -1).symmetric(), -1);
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(13), 2);
        for p in [3u64, 5, 7, 11, 13, 31, 37] {
            let g = PrimeFieldElement::new(p, primitive_root(p) as i64);
            let mut seen = std::collections::HashSet::new();
            for e in 0..p - 1 {
                seen.insert(g.pow(e).value());
            }
            assert_eq!(seen.len() as u64, p - 1);
        }
    }
}
