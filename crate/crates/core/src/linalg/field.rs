use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::rat::Rat;
use crate::Error;

/// Which exact field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rationals,
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec, Error> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidInput(format!("prime {p} exceeds 2^31")));
        }
        Ok(FieldSpec::Prime { p })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime { p } => *p,
        }
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rational"),
            FieldSpec::Prime { p } => write!(f, "p{p}"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FieldSpec, Error> {
        match s {
            "rational" | "rationals" | "Q" => Ok(FieldSpec::Rationals),
            _ => {
                let digits = s
                    .strip_prefix('p')
                    .or_else(|| s.strip_prefix("F"))
                    .ok_or_else(|| Error::InvalidInput(format!("unknown field {s:?}")))?;
                let p: u64 = digits
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("unknown field {s:?}")))?;
                FieldSpec::prime(p)
            }
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field. Elements do not carry their field; every operation goes
/// through the field value, which for prime fields holds the modulus.
pub trait Field: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + Default + Debug + Display + PartialEq + Eq + Hash + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// A random element: uniform over a prime field, a uniform integer from
    /// the configured range over the rationals.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn parse(&self, s: &str) -> Result<Self::Elem, Error>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64> {
        match self.spec() {
            FieldSpec::Rationals => None,
            FieldSpec::Prime { p } => Some(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rationals {
    /// Random elements are integers in `[-range, range]`.
    pub range: i64,
}

impl Default for Rationals {
    fn default() -> Self {
        Rationals { range: 1_000_000 }
    }
}

impl Field for Rationals {
    type Elem = Rat;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> Rat {
        Rat::ZERO
    }
    fn one(&self) -> Rat {
        Rat::ONE
    }
    fn from_i64(&self, v: i64) -> Rat {
        Rat::from_i64(v)
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a.add(b)
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a.sub(b)
    }
    fn neg(&self, a: &Rat) -> Rat {
        a.neg()
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a.mul(b)
    }
    fn inv(&self, a: &Rat) -> Option<Rat> {
        a.inv()
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Rat {
        Rat::from_i64(rng.gen_range(-self.range..=self.range))
    }
    fn parse(&self, s: &str) -> Result<Rat, Error> {
        s.parse::<Rat>()
            .map_err(|e| Error::InvalidInput(e.to_string()))
    }
}

/// The prime field `F_p` for `p < 2^31`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<PrimeField, Error> {
        FieldSpec::prime(p)?;
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// All field elements in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime { p: self.p }
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
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
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (*a, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        Some(acc)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn parse(&self, s: &str) -> Result<u64, Error> {
        let r: Rat = s
            .parse()
            .map_err(|e: super::rat::ParseRatError| Error::InvalidInput(e.to_string()))?;
        let (n, d) = r
            .as_small()
            .ok_or_else(|| Error::InvalidInput(format!("entry {s:?} too large")))?;
        let d = self.from_i64(d);
        let d = self.inv(&d).ok_or_else(|| {
            Error::InvalidInput(format!("denominator of {s:?} vanishes mod {}", self.p))
        })?;
        Ok(self.mul(&self.from_i64(n), &d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.from_i64(-1), 100);
        assert_eq!(f.parse("1/2").unwrap(), 51);
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(
            "rational".parse::<FieldSpec>().unwrap(),
            FieldSpec::Rationals
        );
        assert_eq!(
            "p101".parse::<FieldSpec>().unwrap(),
            FieldSpec::Prime { p: 101 }
        );
        assert!("p100".parse::<FieldSpec>().is_err());
        assert!(PrimeField::new(1).is_err());
    }
}
