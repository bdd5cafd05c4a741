//! Exact arithmetic on the `l`-adic solenoid.
//!
//! The solenoid `R_l` glues the reals and the `l`-adic numbers along
//! `Z[1/l]`: it is `(Q_l (+) R) / Z[1/l]`, a compact connected abelian group
//! containing both as dense subgroups. This crate works on its dense
//! subgroup of points with rational coordinates, where every question below
//! is decidable with exact rationals:
//!
//! * [`element`]: the standard form `[x] + {x}` and the group law;
//! * [`metric`]: the translation-invariant absolute value and distance;
//! * [`digits`]: bi-infinite base-`l` expansions with periodic tails;
//! * [`structure`]: torsion, closed subgroups, homotheties, characters;
//! * [`measure`]: Haar measure of cylinder sets;
//! * [`solenoid`]: coordinates as a coherent sequence on the circle.
//!
//! Everything is generic over the integer backing type ([`Int`]); the
//! aliases below fix it to `BigInt`.
//!
//! ```
//! use ladic::{Element, Prime, BigRational};
//!
//! let ell = Prime::new(3).unwrap();
//! let x = Element::from_pair(BigRational::new(5.into(), 6.into()), BigRational::new(3.into(), 4.into()), &ell);
//! assert_eq!(x.to_string(), "[3/2] + {1/12}");
//! assert_eq!(ladic::metric::abs(&x), BigRational::new(1.into(), 3.into()));
//! ```

pub mod cli;
pub mod digits;
pub mod element;
pub mod error;
pub mod measure;
pub mod metric;
pub mod rational;
pub mod scalar;
pub mod solenoid;
pub mod structure;

pub use digits::DigitExpansion;
pub use element::{ShiftedForm, SolenoidElement};
pub use error::{Error, Result};
pub use rational::{PrimeContext, Valuation};
pub use scalar::Int;
pub use structure::{ClosureClass, HomothetyRatio, RealCoordinate, SubgroupDescriptor};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub type Prime = PrimeContext<BigInt>;
pub type Element = SolenoidElement<BigInt>;
pub type Cylinder = measure::Cylinder<BigInt>;
pub type Homothety = HomothetyRatio<BigInt>;
pub type Descriptor = SubgroupDescriptor<BigInt>;
pub type Closure = ClosureClass<BigInt>;
pub type TorusPoint = solenoid::TorusPoint<BigInt>;
pub type CoherentSequence = solenoid::CoherentSequence<BigInt>;

/// Machine-word backing for small, overflow-free workloads.
pub type Prime64 = PrimeContext<i64>;
pub type Element64 = SolenoidElement<i64>;
