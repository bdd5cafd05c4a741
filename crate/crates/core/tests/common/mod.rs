#![allow(dead_code)]

use ladic::{BigInt, BigRational, Element, Prime};
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const PRIMES: [u64; 3] = [2, 3, 5];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn ctx(ell: u64) -> Prime {
    Prime::new(ell).unwrap()
}

/// Numerator and denominator bounded by `bound` in absolute value.
pub fn rational(rng: &mut impl Rng, bound: i64) -> BigRational {
    q(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

pub fn element(rng: &mut impl Rng, c: &Prime) -> Element {
    Element::from_pair(rational(rng, 10_000), rational(rng, 10_000), c)
}

pub fn small_element(rng: &mut impl Rng, c: &Prime) -> Element {
    Element::from_pair(rational(rng, 30), rational(rng, 30), c)
}

/// A random `l`-adic integer: denominator coprime to `l`.
pub fn ell_integer(rng: &mut impl Rng, c: &Prime) -> BigRational {
    loop {
        let r = rational(rng, 1_000);
        if c.is_ell_integral(&r) {
            return r;
        }
    }
}

/// A random element of `Z[1/l]` with small exponent.
pub fn ell_rational(rng: &mut impl Rng, c: &Prime) -> BigRational {
    let e = rng.gen_range(0..4i64);
    q(rng.gen_range(-200..=200), 1) * c.rat_pow(-e)
}

/// Exponent of `ell` in a nonzero integer, computed directly.
pub fn ell_exponent(n: &BigInt, ell: u64) -> i64 {
    let ell = BigInt::from(ell);
    let mut n = n.abs();
    let mut v = 0;
    while (&n % &ell).is_zero() {
        n /= &ell;
        v += 1;
    }
    v
}

/// `|x|_l` computed by factor counting, independent of the library.
pub fn padic_norm(x: &BigRational, ell: u64) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let v = ell_exponent(x.numer(), ell) - ell_exponent(x.denom(), ell);
    let base = q(ell as i64, 1);
    let p = num_traits::pow(base, v.unsigned_abs() as usize);
    if v >= 0 {
        p.recip()
    } else {
        p
    }
}

/// Reduction modulo 1 into `[0, 1)`.
pub fn mod_one(x: &BigRational) -> BigRational {
    x - x.floor()
}

pub fn pow_ell(ell: u64, e: i64) -> BigRational {
    let p = num_traits::pow(q(ell as i64, 1), e.unsigned_abs() as usize);
    if e >= 0 {
        p
    } else {
        BigRational::one() / p
    }
}
