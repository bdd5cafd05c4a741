//! Torsion, closed subgroups, homotheties and characters.
//!
//! The closed subgroups met here are all of the form
//! `{x : m x in l^a Z_l}` (`a` finite) or the finite `m`-torsion group
//! (`a = inf`), with `m` coprime to `l`. Continuous endomorphisms are the
//! multiplications by nonzero `rho` in `Z[1/l]`, and the characters are
//! those multiplications followed by the projection `x -> {x}` onto `R/Z`.

use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::element::SolenoidElement;
use crate::error::{Error, Result};
use crate::rational::{val_ell, PrimeContext, Rational, Valuation};
use crate::scalar::{self, Int};

/// `{x : m x in l^a Z_l}`, or the `m`-torsion subgroup when `a` is infinite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubgroupDescriptor<T> {
    m: T,
    a: Valuation,
}

impl<T: Int> SubgroupDescriptor<T> {
    pub fn new(m: T, a: Valuation, ctx: &PrimeContext<T>) -> Result<Self> {
        check_torsion_modulus(&m, ctx)?;
        Ok(SubgroupDescriptor { m, a })
    }

    pub fn m(&self) -> &T {
        &self.m
    }

    pub fn a(&self) -> Valuation {
        self.a
    }

    pub fn contains(&self, x: &SolenoidElement<T>) -> bool {
        subgroup_contains(self, x)
    }
}

impl<T: Int> fmt::Display for SubgroupDescriptor<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "subgroup(m={}, a={})", self.m, self.a)
    }
}

fn check_torsion_modulus<T: Int>(m: &T, ctx: &PrimeContext<T>) -> Result<()> {
    if !m.is_positive() {
        return Err(Error::OutOfRange(format!("m = {m}")));
    }
    if m.is_multiple_of(ctx.ell()) {
        return Err(Error::DivisibleByEll {
            m: m.to_string(),
            ell: ctx.ell_u64(),
        });
    }
    Ok(())
}

/// Shape of the closure of the cyclic group generated by an element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClosureClass<T> {
    /// A finite cyclic group of order `m`.
    Finite { m: T },
    /// `m`-torsion times `l^a Z_l`.
    ProcyclicProduct { m: T, a: i64 },
    Dense,
}

impl<T: Int> ClosureClass<T> {
    /// The closed subgroup described by this class, `None` for `Dense`.
    pub fn descriptor(&self) -> Option<SubgroupDescriptor<T>> {
        match self {
            ClosureClass::Finite { m } => Some(SubgroupDescriptor {
                m: m.clone(),
                a: Valuation::Infinity,
            }),
            ClosureClass::ProcyclicProduct { m, a } => Some(SubgroupDescriptor {
                m: m.clone(),
                a: Valuation::Finite(*a),
            }),
            ClosureClass::Dense => None,
        }
    }
}

impl<T: Int> fmt::Display for ClosureClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureClass::Finite { m } => write!(f, "finite({m})"),
            ClosureClass::ProcyclicProduct { m, a } => write!(f, "procyclic({m}, {a})"),
            ClosureClass::Dense => f.write_str("dense"),
        }
    }
}

/// The real coordinate handed to [`classify_closure`]. Irrational reals are
/// not representable, only marked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealCoordinate<T: Int> {
    Rational(Rational<T>),
    Irrational,
}

/// A nonzero element of `Z[1/l]`, used both as a homothety ratio and as the
/// index of a character.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomothetyRatio<T: Int> {
    rho: Rational<T>,
}

impl<T: Int> HomothetyRatio<T> {
    pub fn new(rho: Rational<T>, ctx: &PrimeContext<T>) -> Result<Self> {
        if rho.is_zero() {
            return Err(Error::ZeroRatio);
        }
        if !ctx.is_ell_rational(&rho) {
            return Err(Error::NotEllRational(rho.to_string()));
        }
        Ok(HomothetyRatio { rho })
    }

    pub fn value(&self) -> &Rational<T> {
        &self.rho
    }

    /// Writes `rho = sign * m * l^e` with `m` coprime to `l`; returns
    /// `(negative, m, e)`.
    pub fn decompose(&self, ctx: &PrimeContext<T>) -> (bool, T, i64) {
        let e = val_ell(&self.rho, ctx).finite().expect("rho is nonzero");
        let m = ctx.prime_to_ell_part(self.rho.numer());
        (self.rho.is_negative(), m, e)
    }
}

impl<T: Int> fmt::Display for HomothetyRatio<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rho)
    }
}

/// The unique subgroup of order `m`: `{tau(k/m) : 0 <= k < m}`, listed so
/// that entry `k` is `k * tau(1/m)`.
pub fn torsion_subgroup<T: Int>(m: &T, ctx: &PrimeContext<T>) -> Result<Vec<SolenoidElement<T>>> {
    check_torsion_modulus(m, ctx)?;
    let mut out = Vec::new();
    let mut k = T::zero();
    while &k < m {
        out.push(SolenoidElement::tau(Ratio::new(k.clone(), m.clone()), ctx));
        k = k + T::one();
    }
    Ok(out)
}

pub fn subgroup_contains<T: Int>(d: &SubgroupDescriptor<T>, x: &SolenoidElement<T>) -> bool {
    match d.a {
        Valuation::Infinity => match x.torsion_order() {
            Some(order) => d.m.is_multiple_of(&order),
            None => false,
        },
        Valuation::Finite(a) => {
            // m x lies in l^a Z_l exactly when its shifted real part vanishes
            let y = x.mul_int(&d.m);
            y.standard_form_at(a).frac.is_zero()
        }
    }
}

pub fn classify_closure<T: Int>(
    q: Rational<T>,
    r: RealCoordinate<T>,
    ctx: &PrimeContext<T>,
) -> ClosureClass<T> {
    let r = match r {
        RealCoordinate::Irrational => return ClosureClass::Dense,
        RealCoordinate::Rational(r) => r,
    };
    let x = SolenoidElement::from_pair(q, r, ctx);
    // x = tau(-{x}) + ([x] + {x}), torsion part plus l-adic part
    let m = ctx.prime_to_ell_part(x.frac().denom());
    let padic = x.whole() + x.frac();
    match val_ell(&padic, ctx) {
        Valuation::Infinity => ClosureClass::Finite { m },
        Valuation::Finite(a) => ClosureClass::ProcyclicProduct { m, a },
    }
}

pub fn scalar_mul<T: Int>(rho: &HomothetyRatio<T>, x: &SolenoidElement<T>) -> SolenoidElement<T> {
    x.scale(&rho.rho)
        .expect("homothety ratios lie in Z[1/l]")
}

/// Kernel of `x -> rho x`: the `m`-torsion subgroup, `m` the part of `rho`'s
/// numerator coprime to `l`.
pub fn homothety_kernel<T: Int>(
    rho: &HomothetyRatio<T>,
    ctx: &PrimeContext<T>,
) -> Vec<SolenoidElement<T>> {
    let (_, m, _) = rho.decompose(ctx);
    torsion_subgroup(&m, ctx).expect("m is coprime to l")
}

/// All `y` with `n y = x`. There are exactly `m` of them, `m` the part of
/// `n` coprime to `l`.
pub fn division_points<T: Int>(x: &SolenoidElement<T>, n: &T) -> Result<Vec<SolenoidElement<T>>> {
    if !n.is_positive() {
        return Err(Error::OutOfRange(format!("n = {n}")));
    }
    let ctx = x.ctx();
    let (nu, m) = ctx.split(n);
    let undo = ctx.rat_pow(-(nu as i64));
    let q = x.whole() * &undo;
    let r = x.frac() * &undo;
    let m_rat: Rational<T> = scalar::from_int(m.clone());
    let mut out = Vec::new();
    let mut k = T::zero();
    while k < m {
        let kr: Rational<T> = scalar::from_int(k.clone());
        out.push(SolenoidElement::from_pair(
            (&q + &kr) / &m_rat,
            (&r - &kr) / &m_rat,
            ctx,
        ));
        k = k + T::one();
    }
    Ok(out)
}

/// `chi_rho(x) = {rho x}`, a point of `R/Z` represented in `[0, 1)`.
pub fn character_eval<T: Int>(rho: &HomothetyRatio<T>, x: &SolenoidElement<T>) -> Rational<T> {
    scalar_mul(rho, x).frac().clone()
}

pub fn character_kernel<T: Int>(
    rho: &HomothetyRatio<T>,
    ctx: &PrimeContext<T>,
) -> SubgroupDescriptor<T> {
    let (_, m, e) = rho.decompose(ctx);
    SubgroupDescriptor {
        m,
        a: Valuation::Finite(-e),
    }
}

impl<T: Int> SolenoidElement<T> {
    /// The unique `y` with `l y = x`.
    pub fn divide_by_ell(&self) -> Self {
        let ell: Rational<T> = scalar::from_int(self.ctx().ell().clone());
        self.scale(&ell.recip()).expect("1/l is in Z[1/l]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type E = SolenoidElement<BigInt>;

    fn q(n: i64, d: i64) -> Rational<BigInt> {
        scalar::rat(n, d)
    }

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn c3() -> PrimeContext<BigInt> {
        PrimeContext::new(3).unwrap()
    }

    fn rho(n: i64, d: i64) -> HomothetyRatio<BigInt> {
        HomothetyRatio::new(q(n, d), &c3()).unwrap()
    }

    #[test]
    fn torsion_subgroups() {
        let c = c3();
        assert_eq!(torsion_subgroup(&b(1), &c).unwrap(), vec![E::zero(&c)]);
        let two = torsion_subgroup(&b(2), &c).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(two[1].standard_form(), (q(-1, 2), q(1, 2)));
        let four = torsion_subgroup(&b(4), &c).unwrap();
        assert_eq!(four.len(), 4);
        for x in &four {
            assert!(x.mul_int(&b(4)).is_zero());
        }
        assert_eq!(four[1].torsion_order(), Some(b(4)));
        assert!(matches!(
            torsion_subgroup(&b(6), &c),
            Err(Error::DivisibleByEll { .. })
        ));
        assert!(torsion_subgroup(&b(0), &c).is_err());
    }

    #[test]
    fn membership() {
        let c = c3();
        let d = SubgroupDescriptor::new(b(2), Valuation::Finite(0), &c).unwrap();
        assert!(d.contains(&E::zero(&c)));
        assert!(d.contains(&E::tau(q(1, 2), &c)));
        let d = SubgroupDescriptor::new(b(1), Valuation::Finite(1), &c).unwrap();
        assert!(d.contains(&E::embed_padic(q(9, 1), &c)));
        assert!(!d.contains(&E::embed_padic(q(1, 1), &c)));
        let d = SubgroupDescriptor::new(b(5), Valuation::Infinity, &c).unwrap();
        assert!(d.contains(&E::tau(q(2, 5), &c)));
        assert!(!d.contains(&E::tau(q(1, 2), &c)));
        assert!(!d.contains(&E::embed_real(q(1, 5), &c)));
        // negative levels: l^-1 Z_l contains the l-adic number 1/3, whose
        // standard form has a nonzero real part
        let d = SubgroupDescriptor::new(b(1), Valuation::Finite(-1), &c).unwrap();
        let third = E::embed_padic(q(1, 3), &c);
        assert_eq!(third.standard_form(), (q(0, 1), q(1, 3)));
        assert!(d.contains(&third));
        assert!(!d.contains(&E::embed_padic(q(1, 9), &c)));
        assert!(SubgroupDescriptor::new(b(3), Valuation::Finite(0), &c).is_err());
    }

    #[test]
    fn classification_examples() {
        let c = c3();
        let classify = |n: (i64, i64), r: (i64, i64)| {
            classify_closure(q(n.0, n.1), RealCoordinate::Rational(q(r.0, r.1)), &c)
        };
        assert_eq!(classify((0, 1), (0, 1)), ClosureClass::Finite { m: b(1) });
        assert_eq!(classify((1, 2), (-1, 2)), ClosureClass::Finite { m: b(2) });
        assert_eq!(
            classify((9, 1), (0, 1)),
            ClosureClass::ProcyclicProduct { m: b(1), a: 2 }
        );
        assert_eq!(
            classify((5, 6), (3, 4)),
            ClosureClass::ProcyclicProduct { m: b(4), a: -1 }
        );
        assert_eq!(
            classify_closure(q(1, 2), RealCoordinate::Irrational, &c),
            ClosureClass::Dense
        );
        assert_eq!(classify((5, 6), (3, 4)).to_string(), "procyclic(4, -1)");
        assert_eq!(ClosureClass::<BigInt>::Dense.to_string(), "dense");
    }

    #[test]
    fn homotheties() {
        let c = c3();
        let x = E::from_pair(q(5, 6), q(3, 4), &c);
        assert_eq!(scalar_mul(&rho(1, 1), &x), x);
        assert!(scalar_mul(&rho(2, 1), &E::tau(q(1, 2), &c)).is_zero());
        let y = scalar_mul(&rho(1, 3), &E::embed_padic(q(1, 2), &c));
        assert_eq!(y.standard_form(), (q(-1, 2), q(2, 3)));
        assert_eq!(HomothetyRatio::new(q(0, 1), &c), Err(Error::ZeroRatio));
        assert!(HomothetyRatio::new(q(1, 2), &c).is_err());
        assert_eq!(rho(-10, 9).decompose(&c), (true, b(10), -2));
        assert_eq!(homothety_kernel(&rho(-4, 3), &c), torsion_subgroup(&b(4), &c).unwrap());
    }

    #[test]
    fn division_examples() {
        let c = c3();
        let pts = division_points(&E::zero(&c), &b(2)).unwrap();
        assert_eq!(pts, torsion_subgroup(&b(2), &c).unwrap());

        let one = E::embed_real(q(1, 1), &c);
        let pts = division_points(&one, &b(2)).unwrap();
        let mut forms: Vec<_> = pts.iter().map(|p| p.standard_form()).collect();
        forms.sort();
        assert_eq!(forms, vec![(q(0, 1), q(1, 2)), (q(1, 2), q(0, 1))]);
        for p in &pts {
            assert_eq!(p.mul_int(&b(2)), one);
        }
        let x = E::from_pair(q(2, 7), q(1, 5), &c);
        let pts = division_points(&x, &b(27)).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].mul_int(&b(27)), x);
        assert_eq!(x.divide_by_ell().mul_int(&b(3)), x);
        assert!(division_points(&x, &b(0)).is_err());
    }

    #[test]
    fn characters() {
        let c = c3();
        let x = E::from_pair(q(3, 2), q(1, 12), &c);
        assert_eq!(character_eval(&rho(5, 9), &E::zero(&c)), q(0, 1));
        assert_eq!(character_eval(&rho(1, 1), &x), q(1, 12));
        assert_eq!(character_eval(&rho(2, 1), &E::tau(q(1, 2), &c)), q(0, 1));
        assert_eq!(
            character_kernel(&rho(1, 1), &c),
            SubgroupDescriptor::new(b(1), Valuation::Finite(0), &c).unwrap()
        );
        assert_eq!(
            character_kernel(&rho(2, 1), &c),
            SubgroupDescriptor::new(b(2), Valuation::Finite(0), &c).unwrap()
        );
        let k = character_kernel(&rho(1, 3), &c);
        assert_eq!(k.to_string(), "subgroup(m=1, a=1)");
    }
}
