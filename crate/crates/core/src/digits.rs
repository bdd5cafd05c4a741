//! Bi-infinite base-`l` digit expansions `x = sum a_n l^n`.
//!
//! Digits with `n >= 0` expand `[x]` `l`-adically, digits with `n < 0` are the
//! greedy base-`l` expansion of `{x}`. For rational coordinates both sides
//! are eventually periodic, so an expansion is a finite window plus a
//! repeating block on each side.
//!
//! Text form: `(<padic tail>)<a_{hi-1} .. a_0>.<a_{-1} .. a_lo>(<real tail>)`,
//! highest index leftmost. For `l > 10` digits inside a group are decimal
//! numbers separated by single spaces.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use num_traits::One;

use crate::element::SolenoidElement;
use crate::error::{Error, Result};
use crate::rational::{mod_inverse, PrimeContext, Rational};
use crate::scalar::{self, Int};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigitExpansion {
    ell: u64,
    lo: i64,
    hi: i64,
    /// `window[i] = a_{lo + i}`.
    window: Vec<u64>,
    /// `padic_tail[k] = a_{hi + k}`, repeated forever upward.
    padic_tail: Vec<u64>,
    /// `real_tail[k] = a_{lo - 1 - k}`, repeated forever downward.
    real_tail: Vec<u64>,
}

/// Shortest block whose repetition equals the repetition of `block`.
fn primitive(block: &[u64]) -> Vec<u64> {
    let n = block.len();
    let p = (1..=n)
        .find(|&p| n % p == 0 && (0..n).all(|i| block[i] == block[(i + p) % n]))
        .unwrap_or(n);
    block[..p].to_vec()
}

fn rotate(block: &[u64], by: usize) -> Vec<u64> {
    let by = by % block.len();
    block[by..].iter().chain(&block[..by]).copied().collect()
}

/// Runs a digit-emitting iteration until its state repeats and returns the
/// pre-period and the cycle of digits.
fn eventually_periodic<S, F>(start: S, mut step: F) -> (Vec<u64>, Vec<u64>)
where
    S: Hash + Eq + Clone,
    F: FnMut(&S) -> (u64, S),
{
    let mut seen = HashMap::new();
    let mut digits = Vec::new();
    let mut state = start;
    loop {
        if let Some(&i) = seen.get(&state) {
            let cycle = digits.split_off(i);
            return (digits, cycle);
        }
        seen.insert(state.clone(), digits.len());
        let (d, next) = step(&state);
        digits.push(d);
        state = next;
    }
}

impl DigitExpansion {
    /// Validates digits and tails. Tails are reduced to their primitive
    /// blocks; the real tail may not consist only of `l - 1`.
    pub fn new(
        ell: u64,
        lo: i64,
        hi: i64,
        window: Vec<u64>,
        padic_tail: Vec<u64>,
        real_tail: Vec<u64>,
    ) -> Result<Self> {
        if lo >= hi {
            return Err(Error::EmptyWindow { lo, hi });
        }
        if window.len() as i64 != hi - lo {
            return Err(Error::OutOfRange(format!(
                "window of {} digits for [{lo}, {hi})",
                window.len()
            )));
        }
        if padic_tail.is_empty() || real_tail.is_empty() {
            return Err(Error::EmptyTail);
        }
        if let Some(&digit) = window
            .iter()
            .chain(&padic_tail)
            .chain(&real_tail)
            .find(|&&d| d >= ell)
        {
            return Err(Error::InvalidDigit { digit, ell });
        }
        if real_tail.iter().all(|&d| d == ell - 1) {
            return Err(Error::MaxDigitRealTail);
        }
        Ok(DigitExpansion {
            ell,
            lo,
            hi,
            window,
            padic_tail: primitive(&padic_tail),
            real_tail: primitive(&real_tail),
        })
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn window(&self) -> &[u64] {
        &self.window
    }

    pub fn padic_tail(&self) -> &[u64] {
        &self.padic_tail
    }

    pub fn real_tail(&self) -> &[u64] {
        &self.real_tail
    }

    /// The digit `a_n`, for any `n`.
    pub fn digit(&self, n: i64) -> u64 {
        if n >= self.hi {
            let p = self.padic_tail.len() as i64;
            self.padic_tail[((n - self.hi) % p) as usize]
        } else if n < self.lo {
            let p = self.real_tail.len() as i64;
            self.real_tail[((self.lo - 1 - n) % p) as usize]
        } else {
            self.window[(n - self.lo) as usize]
        }
    }

    /// Same digit sequence with the window grown to `[min(lo, self.lo),
    /// max(hi, self.hi))`.
    pub fn widen(&self, lo: i64, hi: i64) -> Self {
        let lo = lo.min(self.lo);
        let hi = hi.max(self.hi);
        DigitExpansion {
            ell: self.ell,
            lo,
            hi,
            window: (lo..hi).map(|n| self.digit(n)).collect(),
            padic_tail: rotate(&self.padic_tail, (hi - self.hi) as usize),
            real_tail: rotate(&self.real_tail, (self.lo - lo) as usize),
        }
    }

    fn window_sum<T: Int>(&self, ctx: &PrimeContext<T>) -> Rational<T> {
        let digits: Vec<u64> = (self.lo..self.hi).map(|n| self.digit(n)).collect();
        scalar::from_int::<T>(horner(&digits, ctx)) * ctx.rat_pow(self.lo)
    }
}

/// `sum_k d_k l^k` for little-endian digits `d`.
fn horner<T: Int>(digits: &[u64], ctx: &PrimeContext<T>) -> T {
    digits.iter().rev().fold(T::zero(), |acc, &d| {
        acc * ctx.ell().clone() + T::from_u64(d).expect("digit below l fits")
    })
}

/// `sum_k t_k l^(-1-k)` for the repeating block `t` of a real tail.
fn real_block<T: Int>(tail: &[u64], ctx: &PrimeContext<T>) -> Rational<T> {
    let reversed: Vec<u64> = tail.iter().rev().copied().collect();
    scalar::from_int::<T>(horner(&reversed, ctx)) * ctx.rat_pow(-(tail.len() as i64))
}

/// The expansion of `x`, with a window covering at least `[lo, hi)`.
///
/// The window is widened to include index 0 and any pre-periodic digits, so
/// that both tails repeat exactly from the window edges.
pub fn expand<T: Int>(x: &SolenoidElement<T>, lo: i64, hi: i64) -> Result<DigitExpansion> {
    if lo >= hi {
        return Err(Error::EmptyWindow { lo, hi });
    }
    let ctx = x.ctx();
    let ell = ctx.ell();
    let to_digit = |d: T| d.to_u64().expect("digit below l fits");

    // both orbits keep a fixed denominator, so the numerator is the state
    let b = x.whole().denom().clone();
    let b_inv = mod_inverse(&b, ell).expect("denominator coprime to l");
    let (padic_pre, padic_cycle) = eventually_periodic(x.whole().numer().clone(), |a| {
        let d = (a.clone() * b_inv.clone()).mod_floor(ell);
        let next = (a.clone() - d.clone() * b.clone()) / ell.clone();
        (to_digit(d), next)
    });
    let b = x.frac().denom().clone();
    let (real_pre, real_cycle) = eventually_periodic(x.frac().numer().clone(), |a| {
        let (d, next) = (a.clone() * ell.clone()).div_mod_floor(&b);
        (to_digit(d), next)
    });

    let hi = hi.max(padic_pre.len() as i64);
    let lo = lo.min(-(real_pre.len() as i64));
    let padic_at = |n: usize| {
        if n < padic_pre.len() {
            padic_pre[n]
        } else {
            padic_cycle[(n - padic_pre.len()) % padic_cycle.len()]
        }
    };
    let real_at = |j: usize| {
        if j < real_pre.len() {
            real_pre[j]
        } else {
            real_cycle[(j - real_pre.len()) % real_cycle.len()]
        }
    };
    let window = (lo..hi)
        .map(|n| {
            if n >= 0 {
                padic_at(n as usize)
            } else {
                real_at((-n - 1) as usize)
            }
        })
        .collect();
    let padic_tail = rotate(&padic_cycle, hi as usize - padic_pre.len());
    let real_tail = rotate(&real_cycle, (-lo) as usize - real_pre.len());
    DigitExpansion::new(ctx.ell_u64(), lo, hi, window, padic_tail, real_tail)
}

/// The unique element whose expansion is `d`.
pub fn from_digits<T: Int>(d: &DigitExpansion, ctx: &PrimeContext<T>) -> Result<SolenoidElement<T>> {
    if d.ell != ctx.ell_u64() {
        return Err(Error::PrimeMismatch {
            expected: ctx.ell_u64(),
            found: d.ell,
        });
    }
    let one = Rational::<T>::one();

    // sum_{k>=0} t_k l^(hi+k) = l^hi * P / (1 - l^p), an l-adic value
    let period = d.padic_tail.len() as i64;
    let block: Rational<T> = scalar::from_int(horner(&d.padic_tail, ctx));
    let padic = ctx.rat_pow(d.hi) * block / (&one - ctx.rat_pow(period));

    // sum_{k>=0} t_k l^(lo-1-k) = l^lo * R / (1 - l^-p), a real value
    let period = d.real_tail.len() as i64;
    let block = real_block(&d.real_tail, ctx);
    let real = ctx.rat_pow(d.lo) * block / (&one - ctx.rat_pow(-period));

    Ok(SolenoidElement::from_pair(
        padic + d.window_sum(ctx),
        real,
        ctx,
    ))
}

/// The finite sum of the window digits (both tails replaced by zeros).
pub fn truncate_to_element<T: Int>(
    d: &DigitExpansion,
    ctx: &PrimeContext<T>,
) -> Result<SolenoidElement<T>> {
    if d.ell != ctx.ell_u64() {
        return Err(Error::PrimeMismatch {
            expected: ctx.ell_u64(),
            found: d.ell,
        });
    }
    Ok(SolenoidElement::embed_real(d.window_sum(ctx), ctx))
}

fn write_group(f: &mut fmt::Formatter<'_>, digits: &[u64], spaced: bool) -> fmt::Result {
    for (i, d) in digits.iter().enumerate() {
        if spaced && i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{d}")?;
    }
    Ok(())
}

impl fmt::Display for DigitExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.widen(0, 0);
        let spaced = d.ell > 10;
        let split = (-d.lo) as usize;
        let left: Vec<u64> = d.window[split..].iter().rev().copied().collect();
        let right: Vec<u64> = d.window[..split].iter().rev().copied().collect();
        let padic: Vec<u64> = d.padic_tail.iter().rev().copied().collect();
        f.write_str("(")?;
        write_group(f, &padic, spaced)?;
        f.write_str(")")?;
        write_group(f, &left, spaced)?;
        f.write_str(".")?;
        write_group(f, &right, spaced)?;
        f.write_str("(")?;
        write_group(f, &d.real_tail, spaced)?;
        f.write_str(")")
    }
}

fn parse_group(s: &str, ell: u64, input: &str) -> Result<Vec<u64>> {
    let bad = || Error::parse("digit string", input);
    if ell > 10 {
        s.split_whitespace()
            .map(|t| {
                if t.bytes().all(|b| b.is_ascii_digit()) {
                    t.parse::<u64>().map_err(|_| bad())
                } else {
                    Err(bad())
                }
            })
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(u64::from).ok_or_else(bad))
            .collect()
    }
}

/// Parses the text form produced by `Display`.
pub fn parse_digits(s: &str, ell: u64) -> Result<DigitExpansion> {
    let bad = || Error::parse("digit string", s);
    let t = s.trim();
    let rest = t.strip_prefix('(').ok_or_else(bad)?;
    let (padic, rest) = rest.split_once(')').ok_or_else(bad)?;
    let (left, rest) = rest.split_once('.').ok_or_else(bad)?;
    let (right, rest) = rest.split_once('(').ok_or_else(bad)?;
    let real = rest.strip_suffix(')').ok_or_else(bad)?;
    if real.contains(['(', ')']) {
        return Err(bad());
    }
    let mut padic_tail = parse_group(padic, ell, s)?;
    padic_tail.reverse();
    let left = parse_group(left, ell, s)?;
    let right = parse_group(right, ell, s)?;
    let real_tail = parse_group(real, ell, s)?;
    let hi = left.len() as i64;
    let lo = -(right.len() as i64);
    let window: Vec<u64> = right.into_iter().rev().chain(left.into_iter().rev()).collect();
    DigitExpansion::new(ell, lo, hi, window, padic_tail, real_tail)
}

/// `sum_{k < n} a_k l^(k - n)` reduced mod 1: the depth-`n` circle coordinate
/// read off the digits, including the whole real tail.
pub fn circle_digits_sum<T: Int>(d: &DigitExpansion, n: i64, ctx: &PrimeContext<T>) -> Rational<T> {
    let d = d.widen(0, n.max(0));
    let scale = ctx.rat_pow(-n);
    let digits: Vec<u64> = (d.lo..n).map(|k| d.digit(k)).collect();
    let total = scalar::from_int::<T>(horner(&digits, ctx)) * ctx.rat_pow(d.lo) * &scale;
    let period = d.real_tail.len() as i64;
    let block = real_block(&d.real_tail, ctx);
    let tail = ctx.rat_pow(d.lo) * block / (Rational::one() - ctx.rat_pow(-period));
    scalar::frac_part(&(total + tail * scale))
}

impl<T: Int> SolenoidElement<T> {
    /// Convenience for [`expand`].
    pub fn digits(&self, lo: i64, hi: i64) -> Result<DigitExpansion> {
        expand(self, lo, hi)
    }
}
