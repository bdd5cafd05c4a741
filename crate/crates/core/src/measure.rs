//! Haar measure on cylinder sets `c + (l^n Z_l (+) [alpha, beta))`.

use std::fmt;

use num_traits::{One, Signed};

use crate::element::{parse_element, SolenoidElement};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, val_ell, PrimeContext, Rational};
use crate::scalar::{self, Int};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cylinder<T: Int> {
    center: SolenoidElement<T>,
    n: i64,
    alpha: Rational<T>,
    beta: Rational<T>,
}

impl<T: Int> Cylinder<T> {
    /// Requires `n >= 0` and `0 <= alpha <= beta <= 1`.
    pub fn new(center: SolenoidElement<T>, n: i64, alpha: Rational<T>, beta: Rational<T>) -> Result<Self> {
        if n < 0 {
            return Err(Error::InvalidCylinder(format!("level {n} is negative")));
        }
        if alpha.is_negative() || alpha > beta || beta > Rational::one() {
            return Err(Error::InvalidCylinder(format!(
                "interval [{alpha}, {beta}) is not inside [0, 1]"
            )));
        }
        Ok(Cylinder {
            center,
            n,
            alpha,
            beta,
        })
    }

    /// The whole group: `Z_l (+) [0, 1)`.
    pub fn full(ctx: &PrimeContext<T>) -> Self {
        Cylinder {
            center: SolenoidElement::zero(ctx),
            n: 0,
            alpha: scalar::rat(0, 1),
            beta: Rational::one(),
        }
    }

    pub fn center(&self) -> &SolenoidElement<T> {
        &self.center
    }

    pub fn level(&self) -> i64 {
        self.n
    }

    pub fn interval(&self) -> (&Rational<T>, &Rational<T>) {
        (&self.alpha, &self.beta)
    }

    /// `l^-n (beta - alpha)`; the center plays no role.
    pub fn haar_measure(&self) -> Rational<T> {
        self.center.ctx().rat_pow(-self.n) * (&self.beta - &self.alpha)
    }

    pub fn contains(&self, x: &SolenoidElement<T>) -> bool {
        let y = x - &self.center;
        val_ell(y.whole(), y.ctx()).at_least(self.n) && &self.alpha <= y.frac() && y.frac() < &self.beta
    }

    pub fn translate(&self, t: &SolenoidElement<T>) -> Self {
        Cylinder {
            center: &self.center + t,
            ..self.clone()
        }
    }

    /// The `l^2` pieces obtained by splitting `l^n Z_l` into its `l` cosets
    /// mod `l^(n+1)` and `[alpha, beta)` into `l` equal parts.
    pub fn refine(&self) -> Vec<Self> {
        let ctx = self.center.ctx();
        let ell = ctx.ell().clone();
        let ell_rat: Rational<T> = scalar::from_int(ell.clone());
        let step = (&self.beta - &self.alpha) / &ell_rat;
        let coset_step = ctx.pow(self.n as u32);
        let mut out = Vec::new();
        let mut i = T::zero();
        while i < ell {
            let shift = SolenoidElement::embed_padic(scalar::from_int(i.clone() * coset_step.clone()), ctx);
            let center = &self.center + &shift;
            let mut j = T::zero();
            while j < ell {
                let lo = &self.alpha + &step * scalar::from_int(j.clone());
                let hi = &lo + &step;
                out.push(Cylinder {
                    center: center.clone(),
                    n: self.n + 1,
                    alpha: lo,
                    beta: hi,
                });
                j = j + T::one();
            }
            i = i + T::one();
        }
        out
    }
}

impl<T: Int> fmt::Display for Cylinder<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cyl(center={}, n={}, [{},{}))",
            self.center, self.n, self.alpha, self.beta
        )
    }
}

/// Parses `cyl(center=<element>, n=<int>, [<alpha>,<beta>))`.
pub fn parse_cylinder<T: Int>(s: &str, ctx: &PrimeContext<T>) -> Result<Cylinder<T>> {
    let bad = || Error::parse("cylinder", s);
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let body = compact
        .strip_prefix("cyl(center=")
        .and_then(|b| b.strip_suffix("))"))
        .ok_or_else(bad)?;
    let split = body.rfind(",n=").ok_or_else(bad)?;
    let (center, rest) = (&body[..split], &body[split + 3..]);
    let (n, interval) = rest.split_once(",[").ok_or_else(bad)?;
    let (alpha, beta) = interval.split_once(',').ok_or_else(bad)?;
    let n: i64 = n.parse().map_err(|_| bad())?;
    Cylinder::new(
        parse_element(center, ctx)?,
        n,
        parse_rational(alpha)?,
        parse_rational(beta)?,
    )
}
