//! Exact fields: the rationals and prime fields `F_p`.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// Serializable description of a field, as it appears in algebra files.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime { p: u64, omega_order: Option<u64> },
}

/// A field context. Elements are plain values; all arithmetic goes through
/// the context so that prime moduli can be chosen at runtime.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    /// Deterministic element of multiplicative order exactly `order`.
    fn root_of_unity(&self, order: u64) -> Result<Self::Elem, ExactError>;
    fn parse(&self, s: &str) -> Result<Self::Elem, ExactError>;
    fn format(&self, a: &Self::Elem) -> String;
    fn spec(&self) -> FieldSpec;
    /// Every element of a finite field, `None` for infinite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    /// Maps an arbitrary 64-bit value onto a field element; used by seeded searches.
    fn from_u64_sample(&self, n: u64) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `a^e` for a possibly negative exponent; panics on `0^-k`.
    fn pow_i64(&self, a: &Self::Elem, e: i64) -> Self::Elem {
        if e >= 0 {
            self.pow(a, e as u64)
        } else {
            let ai = self.inv(a).expect("negative power of zero");
            self.pow(&ai, e.unsigned_abs())
        }
    }
}

/// The prime field `F_p`, elements stored as residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ExactError> {
        if !is_prime(p) {
            return Err(ExactError::NotPrime(p));
        }
        if p >= 1 << 32 {
            return Err(ExactError::Parse(format!("modulus {p} too large")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.elem(n)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn root_of_unity(&self, order: u64) -> Result<u64, ExactError> {
        find_root_of_unity(self.p, order)
    }
    fn parse(&self, s: &str) -> Result<u64, ExactError> {
        let n: i128 = s
            .trim()
            .parse()
            .map_err(|_| ExactError::Parse(format!("bad residue {s:?}")))?;
        Ok(n.rem_euclid(self.p as i128) as u64)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime {
            p: self.p,
            omega_order: None,
        }
    }
    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }
    fn from_u64_sample(&self, n: u64) -> u64 {
        n % self.p
    }
}

/// The rationals with arbitrary-precision numerator and denominator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn root_of_unity(&self, order: u64) -> Result<BigRational, ExactError> {
        match order {
            1 => Ok(self.one()),
            2 => Ok(-self.one()),
            _ => Err(ExactError::NoRootOfUnity { order }),
        }
    }
    fn parse(&self, s: &str) -> Result<BigRational, ExactError> {
        let s = s.trim();
        let bad = || ExactError::Parse(format!("bad rational {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(num, den))
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }
    fn from_u64_sample(&self, n: u64) -> BigRational {
        // small signed integers keep sampled determinants cheap
        let v = (n % 33) as i64 - 16;
        self.from_i64(v)
    }
}

/// Rational helper for callers that hold a denominator-free representation.
pub fn rational_is_canonical(r: &BigRational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest primitive root modulo the prime `p`.
pub fn smallest_primitive_root(p: u64) -> Result<u64, ExactError> {
    let field = PrimeField::new(p)?;
    if p == 2 {
        return Ok(1);
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|q| field.pow(&g, (p - 1) / q) != 1))
        .ok_or(ExactError::NotPrime(p))
}

/// Element of multiplicative order exactly `order` in `F_p`: the smallest
/// primitive root raised to `(p-1)/order`.
pub fn find_root_of_unity(p: u64, order: u64) -> Result<u64, ExactError> {
    if !is_prime(p) {
        return Err(ExactError::NotPrime(p));
    }
    if order == 0 || (p - 1) % order != 0 {
        return Err(ExactError::OrderNotDividing { p, order });
    }
    let g = smallest_primitive_root(p)?;
    let field = PrimeField::new(p)?;
    Ok(field.pow(&g, (p - 1) / order))
}

/// Multiplicative order of a nonzero element, by direct powering.
pub fn multiplicative_order<F: Field>(field: &F, a: &F::Elem, bound: u64) -> Option<u64> {
    if field.is_zero(a) {
        return None;
    }
    let mut acc = a.clone();
    for k in 1..=bound {
        if field.is_one(&acc) {
            return Some(k);
        }
        acc = field.mul(&acc, a);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn modpow(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    #[test]
    fn root_of_unity_examples() {
        assert_eq!(find_root_of_unity(13, 6).unwrap(), 4);
        assert_eq!(modpow(4, 3, 13), 12);
        assert_eq!(modpow(4, 6, 13), 1);
        assert_eq!(find_root_of_unity(3, 2).unwrap(), 2);
        assert_eq!(find_root_of_unity(13, 4).unwrap(), 8);
        assert_eq!(modpow(8, 2, 13), 12);
        assert_eq!(find_root_of_unity(5, 4).unwrap(), 2);
    }

    #[test]
    fn root_of_unity_errors() {
        assert!(matches!(
            find_root_of_unity(12, 2),
            Err(ExactError::NotPrime(12))
        ));
        assert!(matches!(
            find_root_of_unity(13, 5),
            Err(ExactError::OrderNotDividing { .. })
        ));
    }

    #[test]
    fn root_has_exact_order() {
        for (p, ord) in [(13u64, 6u64), (13, 4), (13, 12), (5, 4), (7, 6), (31, 10)] {
            let f = PrimeField::new(p).unwrap();
            let w = f.root_of_unity(ord).unwrap();
            assert_eq!(multiplicative_order(&f, &w, p), Some(ord));
        }
    }

    #[test]
    fn rational_parse_format() {
        let q = Rationals;
        let x = q.parse("6/-4").unwrap();
        assert_eq!(q.format(&x), "-3/2");
        assert!(rational_is_canonical(&x));
        assert_eq!(q.format(&q.parse("7").unwrap()), "7");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("abc").is_err());
        assert_eq!(q.root_of_unity(2).unwrap(), q.from_i64(-1));
        assert!(q.root_of_unity(4).is_err());
    }

    #[test]
    fn prime_parse_reduces() {
        let f = PrimeField::new(13).unwrap();
        assert_eq!(f.parse("-1").unwrap(), 12);
        assert_eq!(f.parse("27").unwrap(), 1);
        assert!(PrimeField::new(15).is_err());
    }
}
