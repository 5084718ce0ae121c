//! The numerical Grothendieck lattice of `Σ_e`.
//!
//! Classes are stored as Chern vectors `(r, a, b, ch2)` in the basis
//! `{1, C₀, f, pt}` with `c₁ = a·C₀ + b·f`. The coordinate view
//! `(rank, deg_C₀, deg_f, ch₂)` used by the exceptional-collection matrices is
//! a separate type, [`Coords`], reached only through [`coords`] and
//! [`ChernVector::from_coords`].

use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::arith::{GaussianRational, Rational};
use crate::error::{Error, Result};

/// The Hirzebruch surface of degree `e`: `C₀² = −e`, `C₀·f = 1`, `f² = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Surface {
    e: u32,
}

impl Surface {
    pub fn new(e: i64) -> Result<Surface> {
        u32::try_from(e).map(|e| Surface { e }).map_err(|_| Error::NegativeSurfaceDegree(e))
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn e_rational(&self) -> Rational {
        Rational::from(self.e)
    }

    /// `e/2`, which appears in every adjoint and matrix formula.
    pub fn half_e(&self) -> Rational {
        Rational::new(self.e as i64, 2)
    }
}

/// A divisor class `a·C₀ + b·f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Divisor {
    pub a: Rational,
    pub b: Rational,
}

impl Divisor {
    pub fn new(a: Rational, b: Rational) -> Divisor {
        Divisor { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Divisor {
        Divisor::new(a.into(), b.into())
    }

    pub fn section() -> Divisor {
        Divisor::from_ints(1, 0)
    }

    pub fn fiber() -> Divisor {
        Divisor::from_ints(0, 1)
    }
}

/// Intersection number `(aC₀ + bf)·(a′C₀ + b′f) = −e·a·a′ + a·b′ + a′·b`.
pub fn intersect(s: &Surface, c: &Divisor, c2: &Divisor) -> Rational {
    -(s.e_rational() * &c.a * &c2.a) + &c.a * &c2.b + &c2.a * &c.b
}

/// A class in `K_num(Σ_e)`; no integrality is enforced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ChernVector {
    pub r: Rational,
    pub a: Rational,
    pub b: Rational,
    pub ch2: Rational,
}

impl ChernVector {
    pub fn new(r: Rational, a: Rational, b: Rational, ch2: Rational) -> ChernVector {
        ChernVector { r, a, b, ch2 }
    }

    pub fn from_ints(r: i64, a: i64, b: i64, ch2: i64) -> ChernVector {
        ChernVector::new(r.into(), a.into(), b.into(), ch2.into())
    }

    pub fn zero() -> ChernVector {
        ChernVector::default()
    }

    pub fn c1(&self) -> Divisor {
        Divisor::new(self.a.clone(), self.b.clone())
    }

    pub fn scale(&self, s: &Rational) -> ChernVector {
        ChernVector::new(&self.r * s, &self.a * s, &self.b * s, &self.ch2 * s)
    }

    /// `max{|r|, |a|, |b|, |ch₂|}`, the norm used for support-property checks.
    pub fn sup_norm(&self) -> Rational {
        [&self.r, &self.a, &self.b, &self.ch2]
            .into_iter()
            .map(Rational::abs)
            .fold(Rational::zero(), Rational::max)
    }

    /// Inverse of [`coords`]: `a = deg_f`, `b = deg_C₀ + e·deg_f`.
    pub fn from_coords(s: &Surface, c: &Coords) -> ChernVector {
        ChernVector::new(
            c.rank.clone(),
            c.deg_f.clone(),
            &c.deg_c0 + s.e_rational() * &c.deg_f,
            c.ch2.clone(),
        )
    }
}

impl Add<&ChernVector> for &ChernVector {
    type Output = ChernVector;
    fn add(self, o: &ChernVector) -> ChernVector {
        ChernVector::new(&self.r + &o.r, &self.a + &o.a, &self.b + &o.b, &self.ch2 + &o.ch2)
    }
}

impl Add for ChernVector {
    type Output = ChernVector;
    fn add(self, o: ChernVector) -> ChernVector {
        &self + &o
    }
}

impl Sub<&ChernVector> for &ChernVector {
    type Output = ChernVector;
    fn sub(self, o: &ChernVector) -> ChernVector {
        ChernVector::new(&self.r - &o.r, &self.a - &o.a, &self.b - &o.b, &self.ch2 - &o.ch2)
    }
}

impl Neg for ChernVector {
    type Output = ChernVector;
    fn neg(self) -> ChernVector {
        ChernVector::new(-self.r, -self.a, -self.b, -self.ch2)
    }
}

impl std::iter::Sum for ChernVector {
    fn sum<I: Iterator<Item = ChernVector>>(iter: I) -> ChernVector {
        iter.fold(ChernVector::zero(), |acc, v| acc + v)
    }
}

/// Mukai pairing `c₁·c₁′ − r′·ch₂ − r·ch₂′`.
pub fn mukai_pair(s: &Surface, v: &ChernVector, w: &ChernVector) -> Rational {
    intersect(s, &v.c1(), &w.c1()) - &w.r * &v.ch2 - &v.r * &w.ch2
}

/// `(rank, deg_C₀, deg_f, ch₂)`, the coordinates the exceptional-collection
/// matrices act on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Coords {
    pub rank: Rational,
    pub deg_c0: Rational,
    pub deg_f: Rational,
    pub ch2: Rational,
}

impl Coords {
    pub fn new(rank: Rational, deg_c0: Rational, deg_f: Rational, ch2: Rational) -> Coords {
        Coords { rank, deg_c0, deg_f, ch2 }
    }

    pub fn from_ints(rank: i64, deg_c0: i64, deg_f: i64, ch2: i64) -> Coords {
        Coords::new(rank.into(), deg_c0.into(), deg_f.into(), ch2.into())
    }

    pub fn to_array(&self) -> [Rational; 4] {
        [self.rank.clone(), self.deg_c0.clone(), self.deg_f.clone(), self.ch2.clone()]
    }

    pub fn from_array([rank, deg_c0, deg_f, ch2]: [Rational; 4]) -> Coords {
        Coords { rank, deg_c0, deg_f, ch2 }
    }
}

pub fn coords(s: &Surface, v: &ChernVector) -> Coords {
    let c1 = v.c1();
    Coords::new(
        v.r.clone(),
        intersect(s, &c1, &Divisor::section()),
        intersect(s, &c1, &Divisor::fiber()),
        v.ch2.clone(),
    )
}

/// Objects whose classes the library knows how to write down.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", try_from = "RawNamedObject")]
pub enum NamedObject {
    /// A skyscraper sheaf `𝒪_x`.
    SkyscraperPoint,
    /// The structure sheaf of a fiber, `𝒪_f`.
    FiberStructure,
    /// `𝒪_f(−C₀)[1]`.
    FiberTwist,
    /// `𝒪_{Σ_e}(n·C₀ + m·f)[shift]`.
    LineBundle { n: i64, m: i64, shift: i64 },
    /// `𝒪_{ℙ¹}(n)[shift]` on the base curve.
    P1LineBundle { n: i64, shift: i64 },
    DirectSum { summands: Vec<NamedObject> },
}

#[derive(Deserialize)]
#[serde(tag = "tag")]
enum RawNamedObject {
    SkyscraperPoint,
    FiberStructure,
    FiberTwist,
    LineBundle { n: i64, m: i64, shift: i64 },
    P1LineBundle { n: i64, shift: i64 },
    DirectSum { summands: Vec<NamedObject> },
}

impl TryFrom<RawNamedObject> for NamedObject {
    type Error = Error;
    fn try_from(raw: RawNamedObject) -> Result<NamedObject> {
        Ok(match raw {
            RawNamedObject::SkyscraperPoint => NamedObject::SkyscraperPoint,
            RawNamedObject::FiberStructure => NamedObject::FiberStructure,
            RawNamedObject::FiberTwist => NamedObject::FiberTwist,
            RawNamedObject::LineBundle { n, m, shift } => NamedObject::LineBundle { n, m, shift },
            RawNamedObject::P1LineBundle { n, shift } => NamedObject::P1LineBundle { n, shift },
            RawNamedObject::DirectSum { summands } => NamedObject::direct_sum(summands)?,
        })
    }
}

impl NamedObject {
    pub fn line_bundle(n: i64, m: i64, shift: i64) -> NamedObject {
        NamedObject::LineBundle { n, m, shift }
    }

    pub fn direct_sum(summands: Vec<NamedObject>) -> Result<NamedObject> {
        if summands.is_empty() {
            Err(Error::EmptyDirectSum)
        } else {
            Ok(NamedObject::DirectSum { summands })
        }
    }
}

/// Chern vector of a catalog object. Shifts act on classes by `(−1)^shift`;
/// line bundles have `ch = (1, D, D²/2)`.
///
/// `P1LineBundle` classes live on the base curve, so they are mapped through
/// the pullback `p*`: `ch(p*𝒪(n)) = (1, n·f, 0)`.
pub fn chern_of(s: &Surface, o: &NamedObject) -> ChernVector {
    match o {
        NamedObject::SkyscraperPoint => ChernVector::from_ints(0, 0, 0, 1),
        NamedObject::FiberStructure => ChernVector::from_ints(0, 0, 1, 0),
        NamedObject::FiberTwist => ChernVector::from_ints(0, 0, -1, 1),
        NamedObject::LineBundle { n, m, shift } => {
            let d = Divisor::from_ints(*n, *m);
            let ch2 = intersect(s, &d, &d) * Rational::half();
            ChernVector::new(Rational::one(), d.a, d.b, ch2).scale(&Rational::sign_power(*shift))
        }
        NamedObject::P1LineBundle { n, shift } => {
            ChernVector::from_ints(1, 0, *n, 0).scale(&Rational::sign_power(*shift))
        }
        NamedObject::DirectSum { summands } => summands.iter().map(|x| chern_of(s, x)).sum(),
    }
}

/// A class in `K_num(Σ_e) ⊗ ℂ`, components along `1, C₀, f, pt`.
///
/// Used both for `exp(B + iω)` and for the vector `π(σ)` of a stability
/// condition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ComplexClass {
    pub xi0: GaussianRational,
    pub xi1: GaussianRational,
    pub xi2: GaussianRational,
    pub xi3: GaussianRational,
}

impl ComplexClass {
    pub fn new(
        xi0: GaussianRational,
        xi1: GaussianRational,
        xi2: GaussianRational,
        xi3: GaussianRational,
    ) -> ComplexClass {
        ComplexClass { xi0, xi1, xi2, xi3 }
    }

    pub fn components(&self) -> [&GaussianRational; 4] {
        [&self.xi0, &self.xi1, &self.xi2, &self.xi3]
    }

    pub fn scale(&self, s: &Rational) -> ComplexClass {
        ComplexClass::new(self.xi0.scale(s), self.xi1.scale(s), self.xi2.scale(s), self.xi3.scale(s))
    }

    /// `⟨self, v⟩_M = c₁·(ξ₁C₀ + ξ₂f) − r·ξ₃ − ch₂·ξ₀`, complex-linear in `self`.
    pub fn mukai_pair(&self, s: &Surface, v: &ChernVector) -> GaussianRational {
        // c₁·(ξ₁C₀ + ξ₂f) = −e·a·ξ₁ + a·ξ₂ + b·ξ₁
        let c1_term = self.xi1.scale(&(&v.b - s.e_rational() * &v.a)) + self.xi2.scale(&v.a);
        c1_term - self.xi3.scale(&v.r) - self.xi0.scale(&v.ch2)
    }
}

impl Serialize for ComplexClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [&self.xi0, &self.xi1, &self.xi2, &self.xi3].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [xi0, xi1, xi2, xi3] = <[GaussianRational; 4]>::deserialize(d)?;
        Ok(ComplexClass { xi0, xi1, xi2, xi3 })
    }
}

/// `exp(B + iω)` for `B = x·C₀ + y·f`, `ω = z·C₀ + w·f`, in closed form.
pub fn exp_divisor(s: &Surface, b_field: &Divisor, omega: &Divisor) -> ComplexClass {
    let e = s.e_rational();
    let (x, y) = (&b_field.a, &b_field.b);
    let (z, w) = (&omega.a, &omega.b);
    let pt_re = Rational::half() * ((z * z - x * x) * &e + Rational::from(2) * (x * y - z * w));
    let pt_im = y * z + x * w - x * z * &e;
    ComplexClass::new(
        GaussianRational::one(),
        GaussianRational::new(x.clone(), z.clone()),
        GaussianRational::new(y.clone(), w.clone()),
        GaussianRational::new(pt_re, pt_im),
    )
}

/// Divisorial central charge `Z_{ω,B}(v) = −∫ exp(B + iω)·ch(v)`.
pub fn z_divisorial(s: &Surface, b_field: &Divisor, omega: &Divisor, v: &ChernVector) -> GaussianRational {
    let ex = exp_divisor(s, b_field, omega);
    let c1 = v.c1();
    let pairing_re = intersect(s, &c1, b_field);
    let pairing_im = intersect(s, &c1, omega);
    let integral = GaussianRational::real(v.ch2.clone())
        + GaussianRational::new(pairing_re, pairing_im)
        + ex.xi3.scale(&v.r);
    -integral
}
