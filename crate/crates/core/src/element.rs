//! Rational-coordinate points of the solenoid and their group law.
//!
//! A point is the class of a pair `(q, r)`, `q` read `l`-adically and `r`
//! really, modulo `(q, r) ~ (q + z, r - z)` for `z` in `Z[1/l]`. Each class
//! is stored in its standard form `[x] + {x}`: an `l`-adic integer part and a
//! real part in `[0, 1)`. That form is unique, so derived `Eq`/`Hash` are
//! equality in the group.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{ell_fractional_part, parse_rational, val_ell, PrimeContext, Rational};
use crate::scalar::{self, Int};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SolenoidElement<T: Int> {
    whole: Rational<T>,
    frac: Rational<T>,
    ctx: PrimeContext<T>,
}

/// The decomposition `x = [x]_a + {x}_a` with `[x]_a` in `l^a Z_l` and
/// `{x}_a` in `[0, l^a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftedForm<T: Int> {
    pub a: i64,
    pub whole: Rational<T>,
    pub frac: Rational<T>,
}

impl<T: Int> fmt::Display for ShiftedForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{a} + {{{}}}_{a}", self.whole, self.frac, a = self.a)
    }
}

impl<T: Int> SolenoidElement<T> {
    /// Canonical form of the class of `(q, r)`.
    pub fn from_pair(q: Rational<T>, r: Rational<T>, ctx: &PrimeContext<T>) -> Self {
        let w = ell_fractional_part(&q, ctx);
        let shifted = r + &w;
        let n = scalar::from_int(scalar::floor(&shifted));
        let x = SolenoidElement {
            whole: q - w + &n,
            frac: shifted - n,
            ctx: ctx.clone(),
        };
        debug_assert!(x.is_canonical());
        x
    }

    pub fn zero(ctx: &PrimeContext<T>) -> Self {
        SolenoidElement {
            whole: Rational::zero(),
            frac: Rational::zero(),
            ctx: ctx.clone(),
        }
    }

    pub fn embed_real(r: Rational<T>, ctx: &PrimeContext<T>) -> Self {
        Self::from_pair(Rational::zero(), r, ctx)
    }

    pub fn embed_padic(q: Rational<T>, ctx: &PrimeContext<T>) -> Self {
        Self::from_pair(q, Rational::zero(), ctx)
    }

    /// The torsion element `tau(s)`, class of `(s, -s)`.
    pub fn tau(s: Rational<T>, ctx: &PrimeContext<T>) -> Self {
        let r = -s.clone();
        Self::from_pair(s, r, ctx)
    }

    /// `[x]`, an `l`-adic integer.
    pub fn whole(&self) -> &Rational<T> {
        &self.whole
    }

    /// `{x}` in `[0, 1)`; also the image of `x` on the circle `R/Z`.
    pub fn frac(&self) -> &Rational<T> {
        &self.frac
    }

    pub fn ctx(&self) -> &PrimeContext<T> {
        &self.ctx
    }

    pub fn standard_form(&self) -> (Rational<T>, Rational<T>) {
        (self.whole.clone(), self.frac.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.whole.is_zero() && self.frac.is_zero()
    }

    pub fn is_canonical(&self) -> bool {
        val_ell(&self.whole, &self.ctx).at_least(0) && scalar::is_unit_interval(&self.frac)
    }

    pub fn standard_form_at(&self, a: i64) -> ShiftedForm<T> {
        let transfer = if a >= 0 {
            // move the residue of [x] mod l^a across the cut
            -scalar::from_int(self.ctx.residue(&self.whole, a as u32))
        } else {
            let scale = self.ctx.pow((-a) as u32);
            Ratio::new(scalar::floor(&(&self.frac * &scale)), scale)
        };
        ShiftedForm {
            a,
            whole: &self.whole + &transfer,
            frac: &self.frac - transfer,
        }
    }

    /// Least `m >= 1` with `m x = 0`, or `None` when `x` has infinite order.
    pub fn torsion_order(&self) -> Option<T> {
        if !(&self.whole + &self.frac).is_zero() {
            return None;
        }
        Some(self.ctx.prime_to_ell_part(self.frac.denom()))
    }

    /// Whether `x` lies on the real line through 0 (its path component).
    pub fn in_real_line(&self) -> bool {
        self.ctx.is_ell_rational(&self.whole)
    }

    pub fn in_padic_line(&self) -> bool {
        self.ctx.is_ell_rational(&self.frac)
    }

    /// Multiplication by an element of `Z[1/l]` (the module structure).
    pub fn scale(&self, rho: &Rational<T>) -> Result<Self> {
        if !self.ctx.is_ell_rational(rho) {
            return Err(Error::NotEllRational(rho.to_string()));
        }
        Ok(Self::from_pair(rho * &self.whole, rho * &self.frac, &self.ctx))
    }

    pub fn mul_int(&self, k: &T) -> Self {
        let k = scalar::from_int(k.clone());
        Self::from_pair(&k * &self.whole, k * &self.frac, &self.ctx)
    }

    fn check_ctx(&self, other: &Self) {
        assert_eq!(
            self.ctx.ell_u64(),
            other.ctx.ell_u64(),
            "solenoid elements over different primes"
        );
    }
}

impl<T: Int> Add for &SolenoidElement<T> {
    type Output = SolenoidElement<T>;

    fn add(self, rhs: Self) -> SolenoidElement<T> {
        self.check_ctx(rhs);
        let mut whole = &self.whole + &rhs.whole;
        let mut frac = &self.frac + &rhs.frac;
        if frac >= Rational::one() {
            frac = frac - Rational::one();
            whole = whole + Rational::one();
        }
        SolenoidElement {
            whole,
            frac,
            ctx: self.ctx.clone(),
        }
    }
}

impl<T: Int> Neg for &SolenoidElement<T> {
    type Output = SolenoidElement<T>;

    fn neg(self) -> SolenoidElement<T> {
        let (whole, frac) = if self.frac.is_zero() {
            (-self.whole.clone(), Rational::zero())
        } else {
            (
                -self.whole.clone() - Rational::one(),
                Rational::one() - &self.frac,
            )
        };
        SolenoidElement {
            whole,
            frac,
            ctx: self.ctx.clone(),
        }
    }
}

impl<T: Int> Sub for &SolenoidElement<T> {
    type Output = SolenoidElement<T>;

    fn sub(self, rhs: Self) -> SolenoidElement<T> {
        self + &(-rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Int> $tr for SolenoidElement<T> {
            type Output = SolenoidElement<T>;
            fn $m(self, rhs: Self) -> SolenoidElement<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);

impl<T: Int> Neg for SolenoidElement<T> {
    type Output = SolenoidElement<T>;
    fn neg(self) -> SolenoidElement<T> {
        -&self
    }
}

impl<T: Int> fmt::Display for SolenoidElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + {{{}}}", self.whole, self.frac)
    }
}

/// Parses an element. Accepted forms:
///
/// * `padic:<q>+real:<r>`, `padic:<q>`, `real:<r>`: any pair, canonicalized;
/// * `[<w>] + {<f>}`: the canonical output form (re-canonicalized);
/// * a bare rational `<r>`: the real embedding of `r`.
pub fn parse_element<T: Int>(s: &str, ctx: &PrimeContext<T>) -> Result<SolenoidElement<T>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::parse("element", s);
    if let Some(rest) = compact.strip_prefix('[') {
        let (w, rest) = rest.split_once("]+{").ok_or_else(bad)?;
        let f = rest.strip_suffix('}').ok_or_else(bad)?;
        return Ok(SolenoidElement::from_pair(
            parse_rational(w)?,
            parse_rational(f)?,
            ctx,
        ));
    }
    if let Some(rest) = compact.strip_prefix("padic:") {
        let (q, r) = match rest.split_once("+real:") {
            Some((q, r)) => (parse_rational(q)?, parse_rational(r)?),
            None => (parse_rational(rest)?, Rational::zero()),
        };
        return Ok(SolenoidElement::from_pair(q, r, ctx));
    }
    if let Some(rest) = compact.strip_prefix("real:") {
        return Ok(SolenoidElement::embed_real(parse_rational(rest)?, ctx));
    }
    if compact.is_empty() {
        return Err(bad());
    }
    Ok(SolenoidElement::embed_real(parse_rational(&compact)?, ctx))
}
