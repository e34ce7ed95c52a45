//! Elements of cyclotomic fields `Q(z_n)` in the power basis
//! `1, z, ..., z^(phi(n)-1)`, reduced modulo the n-th cyclotomic polynomial.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{parse_rational, rational_to_string, Field, Rational};

/// Per-conductor reduction data: `table[k]` holds `z^k` in the power basis.
struct Context {
    n: u32,
    phi: usize,
    table: Vec<Vec<i64>>,
}

fn cache() -> &'static RwLock<HashMap<u32, Arc<Context>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Context>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn context(n: u32) -> Arc<Context> {
    if let Some(ctx) = cache().read().expect("cyclotomic cache poisoned").get(&n) {
        return ctx.clone();
    }
    let ctx = Arc::new(Context::build(n));
    cache()
        .write()
        .expect("cyclotomic cache poisoned")
        .entry(n)
        .or_insert(ctx)
        .clone()
}

/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "conductor must be positive");
    // x^n - 1 divided by every Phi_d with d | n, d < n
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = divide_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact division");
    quot
}

impl Context {
    fn build(n: u32) -> Self {
        let phi_poly = cyclotomic_polynomial(n);
        let phi = phi_poly.len() - 1;
        let mut table = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            table.push(cur.clone());
            // multiply by x and reduce the overflow term
            let lead = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if lead != 0 {
                for i in 0..phi {
                    cur[i] -= lead * phi_poly[i];
                }
            }
        }
        Context { n, phi, table }
    }

    fn power(&self, k: u64) -> &[i64] {
        &self.table[(k % self.n as u64) as usize]
    }
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// An element of `Q(z_n)`.
///
/// Equality is decided after lifting both operands to the least common
/// conductor, so `z_4^2 == -1` holds even though the two sides were
/// built with different conductors.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Builds an element from arbitrary power-basis coefficients
    /// `sum coeffs[k] z_n^k`; the input may be longer than `phi(n)`.
    pub fn from_powers(conductor: u32, powers: &[Rational]) -> Self {
        let ctx = context(conductor);
        let mut coeffs = vec![Rational::zero(); ctx.phi];
        for (k, c) in powers.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            accumulate(&mut coeffs, c, ctx.power(k as u64));
        }
        Cyclotomic { conductor, coeffs }
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    /// `z_n^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let ctx = context(n);
        let e = k.rem_euclid(n as i64) as u64;
        Cyclotomic {
            conductor: n,
            coeffs: ctx.power(e).iter().map(|&c| Rational::from_integer(c.into())).collect(),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coefficients in the power basis of `Q(z_conductor)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Re-expresses the element over `Q(z_m)`; `m` must be a multiple of the conductor.
    pub fn lift(&self, m: u32) -> Self {
        assert!(
            m.is_multiple_of(self.conductor),
            "cannot lift conductor {} to {}",
            self.conductor,
            m
        );
        if m == self.conductor {
            return self.clone();
        }
        let ctx = context(m);
        let step = (m / self.conductor) as u64;
        let mut coeffs = vec![Rational::zero(); ctx.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                accumulate(&mut coeffs, c, ctx.power(k as u64 * step));
            }
        }
        Cyclotomic { conductor: m, coeffs }
    }

    /// The Galois automorphism `z_n -> z_n^k`, `k` coprime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor;
        let k = k.rem_euclid(n as i64) as u64;
        assert!(
            (k as u32).gcd(&n) == 1 || n == 1,
            "galois exponent must be a unit mod the conductor"
        );
        let ctx = context(n);
        let mut coeffs = vec![Rational::zero(); ctx.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                accumulate(&mut coeffs, c, ctx.power(i as u64 * k));
            }
        }
        Cyclotomic { conductor: n, coeffs }
    }

    /// Complex conjugation.
    pub fn conjugate(&self) -> Self {
        self.galois(self.conductor as i64 - 1)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone());
        }
        if other.is_rational() {
            let mut o = vec![Rational::zero(); self.coeffs.len()];
            o[0] = other.coeffs[0].clone();
            return (
                self.clone(),
                Cyclotomic {
                    conductor: self.conductor,
                    coeffs: o,
                },
            );
        }
        if self.is_rational() {
            let (b, a) = other.common(self);
            return (a, b);
        }
        let m = self.conductor.lcm(&other.conductor);
        (self.lift(m), other.lift(m))
    }

    fn add_ref(&self, other: &Self) -> Self {
        let (mut a, b) = self.common(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            if !y.is_zero() {
                *x += y;
            }
        }
        a
    }

    fn sub_ref(&self, other: &Self) -> Self {
        let (mut a, b) = self.common(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            if !y.is_zero() {
                *x -= y;
            }
        }
        a
    }

    fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if other.is_rational() {
            return self.scale(&other.coeffs[0]);
        }
        if self.is_rational() {
            return other.scale(&self.coeffs[0]);
        }
        let (a, b) = self.common(other);
        let ctx = context(a.conductor);
        let mut prod = vec![Rational::zero(); ctx.phi];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                accumulate(&mut prod, &(x * y), ctx.power((i + j) as u64));
            }
        }
        Cyclotomic {
            conductor: a.conductor,
            coeffs: prod,
        }
    }

    /// Inverse by solving `x * y = 1` for `y` in the power basis.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.to_rational() {
            return Some(Cyclotomic {
                conductor: self.conductor,
                coeffs: {
                    let mut c = vec![Rational::zero(); self.coeffs.len()];
                    c[0] = q.recip();
                    c
                },
            });
        }
        let ctx = context(self.conductor);
        let phi = ctx.phi;
        // column k of the multiplication matrix is x * z^k
        let mut m = vec![vec![Rational::zero(); phi + 1]; phi];
        for k in 0..phi {
            for (i, c) in self.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (r, &t) in ctx.power((i + k) as u64).iter().enumerate() {
                    if t != 0 {
                        m[r][k] += c * Rational::from_integer(t.into());
                    }
                }
            }
        }
        m[0][phi] = Rational::one();
        let sol = solve_augmented(m, phi)?;
        Some(Cyclotomic {
            conductor: self.conductor,
            coeffs: sol,
        })
    }
}

fn accumulate(acc: &mut [Rational], c: &Rational, basis: &[i64]) {
    for (a, &t) in acc.iter_mut().zip(basis) {
        match t {
            0 => {}
            1 => *a += c,
            -1 => *a -= c,
            _ => *a += c * Rational::from_integer(BigInt::from(t)),
        }
    }
}

/// Gauss-Jordan on an `n x (n+1)` augmented rational system.
fn solve_augmented(mut m: Vec<Vec<Rational>>, n: usize) -> Option<Vec<Rational>> {
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let t = &m[col][c] * &f;
                    m[r][c] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::from_rational(Rational::one())
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Cyclotomic::from_rational(q)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_rational(Rational::from_integer(n.into()))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$imp(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                self.$imp(rhs)
            }
        }
        impl<'a, 'b> $tr<&'b Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &'b Cyclotomic) -> Cyclotomic {
                self.$imp(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Field for Cyclotomic {
    fn try_inv(&self) -> Option<Self> {
        self.inverse()
    }

    fn from_int(n: i64) -> Self {
        Cyclotomic::from(n)
    }

    fn conj(&self) -> Self {
        self.conjugate()
    }
}

impl fmt::Display for Cyclotomic {
    /// `c0 + c1*z(n)^1 + ...`, omitting zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k == 0 {
                terms.push(rational_to_string(c));
            } else {
                terms.push(format!("{}*z({})^{}", rational_to_string(c), self.conductor, k));
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Cyclotomic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut acc = Cyclotomic::zero();
        for term in s.split(" + ") {
            let term = term.trim();
            let value = match term.split_once("*z(") {
                None => Cyclotomic::from_rational(
                    parse_rational(term).ok_or_else(|| format!("bad rational term {term:?}"))?,
                ),
                Some((c, rest)) => {
                    let c = parse_rational(c).ok_or_else(|| format!("bad coefficient in {term:?}"))?;
                    let (n, k) = rest
                        .split_once(")^")
                        .ok_or_else(|| format!("bad root-of-unity term {term:?}"))?;
                    let n: u32 = n.parse().map_err(|_| format!("bad conductor in {term:?}"))?;
                    let k: i64 = k.parse().map_err(|_| format!("bad exponent in {term:?}"))?;
                    if n == 0 {
                        return Err("conductor must be positive".into());
                    }
                    Cyclotomic::root_of_unity(n, k).scale(&c)
                }
            };
            acc = acc + value;
        }
        Ok(acc)
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CyclotomicRepr {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(rational_to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CyclotomicRepr::deserialize(deserializer)?;
        if repr.conductor == 0 {
            return Err(serde::de::Error::custom("conductor must be positive"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Cyclotomic::from_powers(repr.conductor, &coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn conjugation_examples() {
        let q = Cyclotomic::from_rational(rat(3, 7));
        assert_eq!(q.conjugate(), q);
        assert_eq!(z(4, 1).conjugate(), -z(4, 1));
        // z3^2 = -1 - z3
        assert_eq!(z(3, 1).conjugate(), Cyclotomic::from(-1) - z(3, 1));
        assert_eq!(z(7, 1).conjugate(), z(7, 6));
    }

    #[test]
    fn mixed_conductors_compare_canonically() {
        assert_eq!(z(4, 2), Cyclotomic::from(-1));
        assert_eq!(z(6, 2), z(3, 1));
        assert_eq!(z(12, 3), z(4, 1));
        assert_ne!(z(12, 1), z(4, 1));
    }

    #[test]
    fn inverse_of_root() {
        let x = z(5, 2) + Cyclotomic::from(3);
        let y = x.inverse().unwrap();
        assert!((x * y).is_one());
        assert!(Cyclotomic::zero().inverse().is_none());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let x = z(6, 1) * Cyclotomic::from_rational(rat(-1, 2)) + Cyclotomic::from(2);
        let s = x.to_string();
        assert_eq!(s.parse::<Cyclotomic>().unwrap(), x);
        assert_eq!(Cyclotomic::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let x = z(3, 1);
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(v["conductor"], 3);
        assert_eq!(v["coeffs"], serde_json::json!(["0", "1"]));
        let back: Cyclotomic = serde_json::from_value(v).unwrap();
        assert_eq!(back, x);
    }
}
