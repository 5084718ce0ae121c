//! Classes of the projections `λ₁`, `ρ₂` onto the two copies of `D^b(ℙ¹)`,
//! and the conversions between Chern data and dimension vectors.

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::ktheory::{ChernVector, Coords, NamedObject, Surface};

/// `(rank, degree)` of a class on `ℙ¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct P1Class {
    pub rank: Rational,
    pub deg: Rational,
}

impl P1Class {
    pub fn new(rank: Rational, deg: Rational) -> P1Class {
        P1Class { rank, deg }
    }

    pub fn from_ints(rank: i64, deg: i64) -> P1Class {
        P1Class::new(rank.into(), deg.into())
    }

    /// Class of the point.
    pub fn point() -> P1Class {
        P1Class::from_ints(0, 1)
    }

    pub fn negate(&self) -> P1Class {
        P1Class::new(-&self.rank, -&self.deg)
    }
}

/// Dimension vector `[n₀, n₁]` of a class in the quiver heart `A(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DimVector2 {
    pub n0: Rational,
    pub n1: Rational,
}

impl DimVector2 {
    pub fn new(n0: Rational, n1: Rational) -> DimVector2 {
        DimVector2 { n0, n1 }
    }

    pub fn from_ints(n0: i64, n1: i64) -> DimVector2 {
        DimVector2::new(n0.into(), n1.into())
    }
}

/// Dimension vector `[m₀, m₁, m₂, m₃]` with respect to a full strong
/// exceptional collection of line bundles on `Σ_e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct DimVector4(pub [Rational; 4]);

impl DimVector4 {
    pub fn from_ints(m: [i64; 4]) -> DimVector4 {
        DimVector4(m.map(Rational::from))
    }
}

macro_rules! array_serde {
    ($ty:ident, $n:literal, |$v:ident| $to:expr, |$a:ident| $from:expr) => {
        impl Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let $v = self;
                let arr: [&Rational; $n] = $to;
                arr.serialize(s)
            }
        }
        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let $a = <[Rational; $n]>::deserialize(d)?;
                Ok($from)
            }
        }
    };
}

array_serde!(DimVector2, 2, |v| [&v.n0, &v.n1], |a| {
    let [n0, n1] = a;
    DimVector2 { n0, n1 }
});
array_serde!(DimVector4, 4, |v| [&v.0[0], &v.0[1], &v.0[2], &v.0[3]], |a| DimVector4(a));

/// `ch(λ₁(E)) = (−c₁·f, −ch₂ + ½e·c₁·f)`.
pub fn lambda1_class(s: &Surface, v: &ChernVector) -> P1Class {
    // c₁·f = a
    P1Class::new(-&v.a, -&v.ch2 + s.half_e() * &v.a)
}

/// `ch(ρ₂(E)) = (c₁·f + r, ch₂ + c₁·C₀ + ½e·c₁·f)`.
pub fn rho2_class(s: &Surface, v: &ChernVector) -> P1Class {
    let c1_c0 = &v.b - s.e_rational() * &v.a;
    P1Class::new(&v.a + &v.r, &v.ch2 + c1_c0 + s.half_e() * &v.a)
}

/// `C⁻¹·(r, d) = (d − k·r, d + (1 − k)·r)`.
pub fn dimvec2_of(k: i64, c: &P1Class) -> DimVector2 {
    let k = Rational::from(k);
    DimVector2::new(&c.deg - &k * &c.rank, &c.deg + (Rational::one() - k) * &c.rank)
}

/// `C·[n₀, n₁] = (n₁ − n₀, (1 − k)·n₀ + k·n₁)`.
pub fn chern2_of(k: i64, d: &DimVector2) -> P1Class {
    let k = Rational::from(k);
    P1Class::new(&d.n1 - &d.n0, (Rational::one() - &k) * &d.n0 + k * &d.n1)
}

/// The 2×2 conversion matrix `C` (dimension vector to `(rank, deg)`).
pub fn conversion_matrix(k: i64) -> Matrix<2> {
    let k = Rational::from(k);
    Matrix([
        [Rational::from(-1), Rational::one()],
        [Rational::one() - &k, k],
    ])
}

/// The 2×2 matrix `C⁻¹` (`(rank, deg)` to dimension vector).
pub fn conversion_matrix_inverse(k: i64) -> Matrix<2> {
    let k = Rational::from(k);
    Matrix([
        [-k.clone(), Rational::one()],
        [Rational::one() - k, Rational::one()],
    ])
}

/// Dense square rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<const N: usize>(pub [[Rational; N]; N]);

impl<const N: usize> Matrix<N> {
    pub fn identity() -> Matrix<N> {
        Matrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { Rational::one() } else { Rational::zero() })
        }))
    }

    pub fn mul(&self, other: &Matrix<N>) -> Matrix<N> {
        Matrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..N).map(|l| &self.0[i][l] * &other.0[l][j]).sum())
        }))
    }

    pub fn apply(&self, v: &[Rational; N]) -> [Rational; N] {
        std::array::from_fn(|i| (0..N).map(|j| &self.0[i][j] * &v[j]).sum())
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity()
    }
}

/// Which of the two exceptional collections a dimension vector refers to:
/// the collection `(𝒪(0,k−1), 𝒪(0,k), 𝒪(1,k−1+e), 𝒪(1,k+e))` or its twist by
/// `𝒪(−C₀)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Twist {
    Untwisted,
    MinusC0,
}

/// The four coordinate-change matrices between `(rank, deg_C₀, deg_f, ch₂)`
/// and dimension vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TransitionMatrix {
    /// Coordinates to dimension vector, untwisted collection.
    ToDimUntwisted,
    /// Dimension vector to coordinates, untwisted collection.
    FromDimUntwisted,
    /// Coordinates to dimension vector, `𝒪(−C₀)`-twisted collection.
    ToDimTwisted,
    /// Dimension vector to coordinates, `𝒪(−C₀)`-twisted collection.
    FromDimTwisted,
}

impl TransitionMatrix {
    pub const ALL: [TransitionMatrix; 4] = [
        TransitionMatrix::ToDimUntwisted,
        TransitionMatrix::FromDimUntwisted,
        TransitionMatrix::ToDimTwisted,
        TransitionMatrix::FromDimTwisted,
    ];

    pub fn to_dim(twist: Twist) -> TransitionMatrix {
        match twist {
            Twist::Untwisted => TransitionMatrix::ToDimUntwisted,
            Twist::MinusC0 => TransitionMatrix::ToDimTwisted,
        }
    }

    pub fn from_dim(twist: Twist) -> TransitionMatrix {
        match twist {
            Twist::Untwisted => TransitionMatrix::FromDimUntwisted,
            Twist::MinusC0 => TransitionMatrix::FromDimTwisted,
        }
    }

    pub fn inverse(self) -> TransitionMatrix {
        match self {
            TransitionMatrix::ToDimUntwisted => TransitionMatrix::FromDimUntwisted,
            TransitionMatrix::FromDimUntwisted => TransitionMatrix::ToDimUntwisted,
            TransitionMatrix::ToDimTwisted => TransitionMatrix::FromDimTwisted,
            TransitionMatrix::FromDimTwisted => TransitionMatrix::ToDimTwisted,
        }
    }

    /// Short label used in reports and fixtures.
    pub fn label(self) -> &'static str {
        match self {
            TransitionMatrix::ToDimUntwisted => "mat11",
            TransitionMatrix::FromDimUntwisted => "mat12",
            TransitionMatrix::ToDimTwisted => "mat21",
            TransitionMatrix::FromDimTwisted => "mat22",
        }
    }

    pub fn from_label(label: &str) -> Option<TransitionMatrix> {
        TransitionMatrix::ALL.into_iter().find(|m| m.label() == label)
    }

    pub fn matrix(self, s: &Surface, k: i64) -> Matrix<4> {
        let h = s.half_e();
        let e = s.e_rational();
        let k = Rational::from(k);
        let one = Rational::one();
        let r = |x: i64| Rational::from(x);
        match self {
            TransitionMatrix::ToDimUntwisted => Matrix([
                [-k.clone(), r(1), &k + &h, r(-1)],
                [&one - &k, r(1), &k - &one + &h, r(-1)],
                [r(0), r(0), -(&k + &h), r(1)],
                [r(0), r(0), &one - &k - &h, r(1)],
            ]),
            TransitionMatrix::FromDimUntwisted => Matrix([
                [r(-1), r(1), r(-1), r(1)],
                [&one - &k, k.clone(), &one - &k, k.clone()],
                [r(0), r(0), r(-1), r(1)],
                [r(0), r(0), &one - &k - &h, &k + &h],
            ]),
            TransitionMatrix::ToDimTwisted => Matrix([
                [r(0), r(0), &k + &h, r(-1)],
                [r(0), r(0), &k - &one + &h, r(-1)],
                [-(&k + &e), r(1), -(&k + &h), r(1)],
                [&one - &k - &e, r(1), &one - &k - &h, r(1)],
            ]),
            TransitionMatrix::FromDimTwisted => Matrix([
                [r(-1), r(1), r(-1), r(1)],
                [&one - &k - &e, &k + &e, &one - &k - &e, &k + &e],
                [r(1), r(-1), r(0), r(0)],
                [&k - &one + &h, -(&k + &h), r(0), r(0)],
            ]),
        }
    }
}

pub fn dimvec4_of(s: &Surface, k: i64, twist: Twist, c: &Coords) -> DimVector4 {
    DimVector4(TransitionMatrix::to_dim(twist).matrix(s, k).apply(&c.to_array()))
}

pub fn chern4_of(s: &Surface, k: i64, twist: Twist, m: &DimVector4) -> Coords {
    Coords::from_array(TransitionMatrix::from_dim(twist).matrix(s, k).apply(&m.0))
}

/// Every componentwise-smaller dimension vector other than `0` and `m`, in
/// lexicographic order.
///
/// A subobject of a heart object has a dimension vector in this list, but not
/// every listed vector is realized by a subobject.
pub fn proper_subvectors(m: &DimVector4) -> Result<Vec<DimVector4>> {
    let bounds: Vec<i64> = m
        .0
        .iter()
        .map(|x| x.to_i64().filter(|n| *n >= 0))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::NotAHeartDimension(format!("{:?}", m.0)))?;
    let total: i64 = bounds.iter().map(|b| b + 1).product();
    let mut out = Vec::new();
    let mut cur = [0i64; 4];
    for _ in 0..total {
        if cur != [0; 4] && cur.as_slice() != bounds.as_slice() {
            out.push(DimVector4::from_ints(cur));
        }
        // odometer increment, last index fastest
        for i in (0..4).rev() {
            if cur[i] < bounds[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
    }
    Ok(out)
}

/// Whether `𝒪(n)[shift]` lies in the heart `A(k)[j] = ⟨𝒪(k−1)[j+1], 𝒪(k)[j]⟩`.
///
/// Returns `false` for any object that is not a `P1LineBundle`.
pub fn p1_heart_contains(k: i64, j: i64, o: &NamedObject) -> bool {
    match o {
        NamedObject::P1LineBundle { n, shift } => (*shift == j + 1 && *n < k) || (*shift == j && *n >= k),
        _ => false,
    }
}
