//! Rationals enriched with their `l`-adic structure.
//!
//! `Rational<T>` is `num_rational::Ratio<T>`: always reduced, denominator
//! positive, zero stored as `0/1`. On top of it this module supplies the
//! fixed prime ([`PrimeContext`]), valuations, the normalized `l`-adic
//! absolute value and the `l`-fractional part that canonicalization uses.

use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{self, Int};

pub type Rational<T> = Ratio<T>;

/// An `l`-adic valuation. `Infinity` is reserved for zero, so it sorts above
/// every finite value and `min` over valuations is total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    /// `self >= a`, with `Infinity` above everything.
    pub fn at_least(self, a: i64) -> bool {
        self >= Valuation::Finite(a)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

/// The fixed prime `l`, checked at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeContext<T> {
    ell: T,
    ell_u64: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
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

impl<T: Int> PrimeContext<T> {
    pub fn new(ell: u64) -> Result<Self> {
        if !is_prime(ell) {
            return Err(Error::NotPrime(ell));
        }
        let ell_t = T::from_u64(ell).ok_or_else(|| Error::OutOfRange(format!("prime {ell}")))?;
        Ok(PrimeContext { ell: ell_t, ell_u64: ell })
    }

    pub fn ell(&self) -> &T {
        &self.ell
    }

    pub fn ell_u64(&self) -> u64 {
        self.ell_u64
    }

    /// `l^a` for `a >= 0`.
    pub fn pow(&self, a: u32) -> T {
        scalar::pow(&self.ell, a)
    }

    /// `l^a` as a rational, for any sign of `a`.
    pub fn rat_pow(&self, a: i64) -> Rational<T> {
        let p = scalar::from_int(self.pow(a.unsigned_abs() as u32));
        if a >= 0 {
            p
        } else {
            p.recip()
        }
    }

    /// Splits a nonzero integer as `l^v * u` with `l` not dividing `u`.
    pub fn split(&self, n: &T) -> (u32, T) {
        debug_assert!(!n.is_zero());
        let mut v = 0;
        let mut u = n.clone();
        loop {
            let (q, r) = u.div_rem(&self.ell);
            if !r.is_zero() {
                return (v, u);
            }
            u = q;
            v += 1;
        }
    }

    /// Largest divisor of `|n|` coprime to `l`; `n` must be nonzero.
    pub fn prime_to_ell_part(&self, n: &T) -> T {
        self.split(n).1.abs()
    }

    /// Whether `q` lies in `Z[1/l]`, i.e. its denominator is a power of `l`.
    pub fn is_ell_rational(&self, q: &Rational<T>) -> bool {
        self.split(q.denom()).1.is_one()
    }

    /// Whether `q` is an `l`-adic integer (denominator coprime to `l`).
    pub fn is_ell_integral(&self, q: &Rational<T>) -> bool {
        !q.denom().is_multiple_of(&self.ell)
    }

    /// The residue `i` in `[0, l^a)` with `q ≡ i (mod l^a)`; `q` must be an
    /// `l`-adic integer.
    pub fn residue(&self, q: &Rational<T>, a: u32) -> T {
        debug_assert!(self.is_ell_integral(q));
        let modulus = self.pow(a);
        if modulus.is_one() {
            return T::zero();
        }
        let inv = mod_inverse(q.denom(), &modulus).expect("denominator coprime to l");
        (q.numer().clone() * inv).mod_floor(&modulus)
    }
}

/// Inverse of `a` modulo `m` (m >= 1) through the extended Euclidean
/// algorithm; `None` when `gcd(a, m) != 1`.
pub fn mod_inverse<T: Int>(a: &T, m: &T) -> Option<T> {
    let a = a.mod_floor(m);
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

/// `nu_l(num) - nu_l(den)`, or `Infinity` for zero.
pub fn val_ell<T: Int>(q: &Rational<T>, ctx: &PrimeContext<T>) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinity;
    }
    let (vn, _) = ctx.split(q.numer());
    let (vd, _) = ctx.split(q.denom());
    Valuation::Finite(vn as i64 - vd as i64)
}

/// `|q|_l = l^(-nu_l(q))`, with `|0|_l = 0`.
pub fn abs_ell<T: Int>(q: &Rational<T>, ctx: &PrimeContext<T>) -> Rational<T> {
    match val_ell(q, ctx) {
        Valuation::Infinity => Rational::zero(),
        Valuation::Finite(v) => ctx.rat_pow(-v),
    }
}

/// The unique `w = k / l^a` in `[0, 1)` with `q - w` an `l`-adic integer,
/// where `l^a` is the `l`-part of the denominator of `q`.
pub fn ell_fractional_part<T: Int>(q: &Rational<T>, ctx: &PrimeContext<T>) -> Rational<T> {
    let (a, unit_den) = ctx.split(q.denom());
    if a == 0 {
        return Rational::zero();
    }
    let modulus = ctx.pow(a);
    let inv = mod_inverse(&unit_den, &modulus).expect("unit part coprime to l");
    let k = (q.numer().clone() * inv).mod_floor(&modulus);
    Ratio::new(k, modulus)
}

/// Parses `a/b` or `a`, with an optional sign on `a` only.
pub fn parse_rational<T: Int>(s: &str) -> Result<Rational<T>> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let digits = num.strip_prefix(['+', '-']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse("rational", s));
    }
    let num_digits = num.strip_prefix('+').unwrap_or(num);
    let n: T = num_digits.parse().map_err(|_| Error::parse("rational", s))?;
    let d: T = match den {
        None => T::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse("rational", s));
            }
            d.parse().map_err(|_| Error::parse("rational", s))?
        }
    };
    if d.is_zero() {
        return Err(Error::ZeroDenominator(s.to_string()));
    }
    Ok(Ratio::new(n, d))
}
