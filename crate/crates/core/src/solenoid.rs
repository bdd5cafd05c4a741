//! Inverse-limit coordinates: the solenoid as coherent sequences on the
//! circle.
//!
//! `x` maps to `(x_0, x_1, ...)` where `x_n` is the real part of the unique
//! `y` with `l^n y = x`. Consecutive coordinates satisfy
//! `x_n = l x_{n+1} mod 1`.

use num_rational::Ratio;
use num_traits::Float;

use crate::element::SolenoidElement;
use crate::error::{Error, Result};
use crate::rational::{PrimeContext, Rational};
use crate::scalar::{self, Int};

/// A point of `R/Z`, represented in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusPoint<T: Int>(Rational<T>);

impl<T: Int> TorusPoint<T> {
    pub fn new(value: Rational<T>) -> Result<Self> {
        if !scalar::is_unit_interval(&value) {
            return Err(Error::OutOfRange(format!("torus point {value}")));
        }
        Ok(TorusPoint(value))
    }

    /// Reduces any rational modulo 1.
    pub fn reduce(value: &Rational<T>) -> Self {
        TorusPoint(scalar::frac_part(value))
    }

    pub fn value(&self) -> &Rational<T> {
        &self.0
    }

    /// `(cos 2 pi t, sin 2 pi t)` in floating point. Display only: values
    /// whose magnitude is below `1e-15` are returned as exact zeros, which
    /// keeps quarter points clean.
    pub fn circle_form<F: Float>(&self) -> (F, F) {
        let mut t = rational_to_f64(&self.0);
        if t >= 0.5 {
            t -= 1.0;
        }
        let (s, c) = (2.0 * std::f64::consts::PI * t).sin_cos();
        let snap = |v: f64| if v.abs() < 1e-15 { 0.0 } else { v };
        (
            F::from(snap(c)).expect("cosine fits the float type"),
            F::from(snap(s)).expect("sine fits the float type"),
        )
    }
}

/// Converts a rational in `[0, 1)` to `f64` even when numerator and
/// denominator overflow a float.
fn rational_to_f64<T: Int>(q: &Rational<T>) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    let scale = scalar::pow(&scalar::int::<T>(2), 53);
    let mantissa = scalar::floor(&(q * Ratio::from_integer(scale)));
    mantissa.to_f64().unwrap_or(0.0) / 2f64.powi(53)
}

/// A finite prefix `(x_0, ..., x_N)` of a coherent sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoherentSequence<T: Int> {
    points: Vec<TorusPoint<T>>,
}

impl<T: Int> CoherentSequence<T> {
    /// Checks `x_n = l x_{n+1} mod 1` for every consecutive pair.
    pub fn new(points: Vec<TorusPoint<T>>, ctx: &PrimeContext<T>) -> Result<Self> {
        let seq = CoherentSequence { points };
        if seq.points.is_empty() || !seq.is_coherent(ctx) {
            return Err(Error::OutOfRange("incoherent torus sequence".into()));
        }
        Ok(seq)
    }

    pub fn depth(&self) -> usize {
        self.points.len() - 1
    }

    pub fn points(&self) -> &[TorusPoint<T>] {
        &self.points
    }

    pub fn is_coherent(&self, ctx: &PrimeContext<T>) -> bool {
        let ell: Rational<T> = scalar::from_int(ctx.ell().clone());
        self.points
            .windows(2)
            .all(|w| TorusPoint::reduce(&(&ell * w[1].value())) == w[0])
    }
}

/// The coordinates `x_0, ..., x_N` of `x`.
pub fn coords<T: Int>(x: &SolenoidElement<T>, depth: usize) -> CoherentSequence<T> {
    let mut points = Vec::with_capacity(depth + 1);
    let mut y = x.clone();
    for n in 0..=depth {
        points.push(TorusPoint(y.frac().clone()));
        if n < depth {
            y = y.divide_by_ell();
        }
    }
    CoherentSequence { points }
}

/// An element whose depth-`N` coordinate is `p`. It agrees with every other
/// such element modulo `l^N Z_l`.
pub fn from_coords<T: Int>(p: &TorusPoint<T>, depth: u32, ctx: &PrimeContext<T>) -> SolenoidElement<T> {
    let lift = SolenoidElement::embed_real(p.value().clone(), ctx);
    lift.scale(&ctx.rat_pow(depth as i64))
        .expect("powers of l are in Z[1/l]")
}
