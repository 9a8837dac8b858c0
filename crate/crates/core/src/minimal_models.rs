//! Virasoro minimal models `L(c_{p,q}, 0)`: central charges, Kac tables,
//! effective central charges and recognition of `c_{p,q}` from `c`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// A coprime pair `1 < p < q` with its exact central charges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinimalModel {
    p: i64,
    q: i64,
    c: Rational,
    c_tilde: Rational,
}

impl MinimalModel {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        validate(p, q)?;
        Ok(Self { p, q, c: cpq(p, q), c_tilde: int(1) - Rational::new(BigInt::from(6), BigInt::from(p * q)) })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn central_charge(&self) -> &Rational {
        &self.c
    }

    pub fn effective_central_charge(&self) -> &Rational {
        &self.c_tilde
    }

    pub fn is_unitary(&self) -> bool {
        self.q == self.p + 1
    }

    pub fn kac_weight(&self, r: i64, s: i64) -> Result<Rational> {
        if !(1..self.p).contains(&r) || !(1..self.q).contains(&s) {
            return Err(Error::KacIndexOutOfRange { p: self.p, q: self.q, r, s });
        }
        Ok(weight(self.p, self.q, r, s))
    }

    /// Kac labels `(r, s)` in lexicographic order, one per class under
    /// `(r, s) ~ (p − r, q − s)`, keeping the smaller `r` (then smaller `s`).
    pub fn labels(&self) -> Vec<(i64, i64)> {
        let (p, q) = (self.p, self.q);
        (1..p).flat_map(|r| (1..q).map(move |s| (r, s))).filter(|&(r, s)| (r, s) <= (p - r, q - s)).collect()
    }

    pub fn kac_table(&self) -> KacTable {
        let entries: Vec<KacEntry> =
            self.labels().into_iter().map(|(r, s)| KacEntry { r, s, h: weight(self.p, self.q, r, s) }).collect();
        let lambda_min = entries.iter().map(|e| e.h.clone()).min().expect("nonempty table");
        KacTable { model: self.clone(), entries, lambda_min }
    }
}

fn validate(p: i64, q: i64) -> Result<()> {
    if p <= 1 {
        return Err(Error::InvalidModel { p, q, reason: "need p > 1" });
    }
    if q <= p {
        return Err(Error::InvalidModel { p, q, reason: "need p < q" });
    }
    if p.gcd(&q) != 1 {
        return Err(Error::InvalidModel { p, q, reason: "p and q must be coprime" });
    }
    Ok(())
}

fn cpq(p: i64, q: i64) -> Rational {
    int(1) - Rational::new(BigInt::from(6 * (p - q) * (p - q)), BigInt::from(p * q))
}

fn weight(p: i64, q: i64, r: i64, s: i64) -> Rational {
    let lam = s * p - r * q;
    Rational::new(BigInt::from(lam * lam - (p - q) * (p - q)), BigInt::from(4 * p * q))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KacEntry {
    pub r: i64,
    pub s: i64,
    pub h: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KacTable {
    pub model: MinimalModel,
    pub entries: Vec<KacEntry>,
    pub lambda_min: Rational,
}

impl KacTable {
    pub fn weights(&self) -> Vec<Rational> {
        self.entries.iter().map(|e| e.h.clone()).collect()
    }

    pub fn find(&self, h: &Rational) -> Option<&KacEntry> {
        self.entries.iter().find(|e| &e.h == h)
    }
}

pub fn central_charge(p: i64, q: i64) -> Result<Rational> {
    Ok(MinimalModel::new(p, q)?.c)
}

pub fn kac_weight(p: i64, q: i64, r: i64, s: i64) -> Result<Rational> {
    MinimalModel::new(p, q)?.kac_weight(r, s)
}

pub fn kac_table(p: i64, q: i64) -> Result<KacTable> {
    Ok(MinimalModel::new(p, q)?.kac_table())
}

pub fn effective_central_charge(p: i64, q: i64) -> Result<Rational> {
    Ok(MinimalModel::new(p, q)?.c_tilde)
}

pub fn is_unitary(p: i64, q: i64) -> Result<bool> {
    Ok(MinimalModel::new(p, q)?.is_unitary())
}

/// All minimal models with `q ≤ max_q`, ordered by `(p, q)`.
pub fn models_up_to(max_q: i64) -> Vec<MinimalModel> {
    (2..max_q)
        .flat_map(|p| ((p + 1)..=max_q).map(move |q| (p, q)))
        .filter_map(|(p, q)| MinimalModel::new(p, q).ok())
        .collect()
}

fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Returns the coprime pair `1 < p < q` with `c_{p,q} = c`, if any.
///
/// Writing `θ = p/(q − p)`, the defining relation becomes
/// `6/(1 − c) = θ(θ + 1)`, so `θ = (√D − 1)/2` with `D = 1 + 24/(1 − c)`.
/// The square-root test is exact on numerator and denominator.
pub fn recognize_central_charge(c: &Rational) -> Option<(i64, i64)> {
    let one = Rational::one();
    if c >= &one {
        return None;
    }
    let d = &one + Rational::from_integer(BigInt::from(24)) / (&one - c);
    let root = Rational::new(exact_sqrt(d.numer())?, exact_sqrt(d.denom())?);
    let theta = (root - &one) / Rational::from_integer(BigInt::from(2));
    if !theta.is_positive() {
        return None;
    }
    let x = theta.numer().clone();
    let y = theta.denom().clone();
    let p: i64 = i64::try_from(&x).ok()?;
    let q: i64 = i64::try_from(&(x + y)).ok()?;
    let model = MinimalModel::new(p, q).ok()?;
    (model.central_charge() == c).then_some((p, q))
}

/// `h` as an integer when it is a nonnegative integer.
pub fn integral_weight(h: &Rational) -> Option<u64> {
    if h.is_integer() && !h.is_negative() {
        u64::try_from(h.to_integer()).ok()
    } else {
        None
    }
}
