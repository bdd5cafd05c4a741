//! Translation-invariant distance on the solenoid.
//!
//! `|x|` is the smaller of the two candidate decompositions around the
//! standard form, `[x] + {x}` and `([x] + 1) + ({x} - 1)`:
//!
//! ```text
//! |x| = min( max(|[x]|_l, {x}), max(|[x] + 1|_l, 1 - {x}) )
//! ```
//!
//! Everything is an exact rational, so every comparison is decidable.

use num_rational::Ratio;
use num_traits::One;

use crate::element::SolenoidElement;
use crate::rational::{abs_ell, PrimeContext, Rational};
use crate::scalar::{self, Int};

/// A value of the absolute value, always in `[0, 1]`.
pub type AbsoluteValue<T> = Rational<T>;

pub fn abs<T: Int>(x: &SolenoidElement<T>) -> AbsoluteValue<T> {
    let ctx = x.ctx();
    let (whole, frac) = (x.whole(), x.frac());
    let direct = abs_ell(whole, ctx).max(frac.clone());
    let shifted = abs_ell(&(whole + Rational::one()), ctx).max(Rational::one() - frac);
    direct.min(shifted)
}

pub fn dist<T: Int>(x: &SolenoidElement<T>, y: &SolenoidElement<T>) -> AbsoluteValue<T> {
    abs(&(x - y))
}

/// A real number within `l^-n` of `x`.
pub fn approximate_real<T: Int>(x: &SolenoidElement<T>, n: u32) -> Rational<T> {
    let i = x.ctx().residue(x.whole(), n);
    scalar::from_int(i) + x.frac()
}

/// An `l`-adic number within `l^-n` of `x`: `[x]` plus the first `n` base-`l`
/// digits of `{x}`.
pub fn approximate_padic<T: Int>(x: &SolenoidElement<T>, n: u32) -> Rational<T> {
    let scale = x.ctx().pow(n);
    let truncated = Ratio::new(scalar::floor(&(x.frac() * &scale)), scale);
    x.whole() + truncated
}

/// The `l^(2k)` points `(i, j / l^k)`, `0 <= i, j < l^k`. Every element lies
/// within `l^-k` of one of them.
pub fn epsilon_net<T: Int>(k: u32, ctx: &PrimeContext<T>) -> Vec<SolenoidElement<T>> {
    let side = ctx.pow(k);
    let count = side
        .to_usize()
        .expect("net side fits in memory");
    let mut net = Vec::with_capacity(count * count);
    let mut i = T::zero();
    while i < side {
        let mut j = T::zero();
        while j < side {
            let frac = Ratio::new(j.clone(), side.clone());
            net.push(SolenoidElement::from_pair(
                scalar::from_int(i.clone()),
                frac,
                ctx,
            ));
            j = j + T::one();
        }
        i = i + T::one();
    }
    net
}

/// The net point of [`epsilon_net`] nearest to `x` at scale `k`.
pub fn net_point<T: Int>(x: &SolenoidElement<T>, k: u32) -> SolenoidElement<T> {
    let ctx = x.ctx();
    let side = ctx.pow(k);
    let i = ctx.residue(x.whole(), k);
    let j = scalar::floor(&(x.frac() * &side));
    SolenoidElement::from_pair(scalar::from_int(i), Ratio::new(j, side), ctx)
}
