//! Random parameter draws for property checks.

use rand::Rng;

use crate::adjoints::Matrix;
use crate::arith::{GaussianRational, HalfPlanePoint, Rational};
use crate::gluing::{ComponentStability, GluedType, GluingParams};
use crate::ktheory::{ChernVector, Surface};

pub const MAX_E: i64 = 5;
pub const MAX_K: i64 = 4;

/// `p/q` with `1 ≤ q ≤ 6` and `|p/q| ≤ bound`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    let q = rng.random_range(1..=6);
    Rational::new(rng.random_range(-bound * q..=bound * q), q)
}

pub fn positive_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    let q = rng.random_range(1..=6);
    Rational::new(rng.random_range(1..=bound * q), q)
}

/// A point of `ℍ`; one draw in five lands on the negative real axis.
pub fn half_plane_point<R: Rng + ?Sized>(rng: &mut R) -> HalfPlanePoint {
    if rng.random_bool(0.2) {
        negative_real(rng)
    } else {
        HalfPlanePoint::new(GaussianRational::new(rational(rng, 5), positive_rational(rng, 5))).expect("im > 0")
    }
}

pub fn negative_real<R: Rng + ?Sized>(rng: &mut R) -> HalfPlanePoint {
    HalfPlanePoint::new(GaussianRational::real(-positive_rational(rng, 5))).expect("re < 0")
}

pub fn surface<R: Rng + ?Sized>(rng: &mut R) -> Surface {
    Surface::new(rng.random_range(0..=MAX_E)).expect("e >= 0")
}

pub fn twist<R: Rng + ?Sized>(rng: &mut R) -> i64 {
    rng.random_range(-MAX_K..=MAX_K)
}

pub fn quiver<R: Rng + ?Sized>(rng: &mut R) -> ComponentStability {
    ComponentStability::quiver(twist(rng), half_plane_point(rng), half_plane_point(rng))
}

fn negative_real_quiver<R: Rng + ?Sized>(rng: &mut R) -> ComponentStability {
    ComponentStability::quiver(twist(rng), negative_real(rng), negative_real(rng))
}

pub fn glued_type<R: Rng + ?Sized>(rng: &mut R) -> GluedType {
    GluedType::from_index(rng.random_range(1..=4)).expect("index in range")
}

/// A matrix with positive determinant.
pub fn gl2_plus<R: Rng + ?Sized>(rng: &mut R) -> Matrix<2> {
    loop {
        let m = Matrix([[rational(rng, 3), rational(rng, 3)], [rational(rng, 3), rational(rng, 3)]]);
        let det = &m.0[0][0] * &m.0[1][1] - &m.0[0][1] * &m.0[1][0];
        if det.is_positive() {
            return m;
        }
    }
}

/// Random parameters of the given type; type 4 gets a random matrix `M` half
/// of the time.
pub fn params<R: Rng + ?Sized>(rng: &mut R, m: GluedType) -> GluingParams {
    let s = surface(rng);
    match m {
        GluedType::One => GluingParams::new(s, ComponentStability::Standard, quiver(rng)),
        GluedType::Two => GluingParams::new(s, quiver(rng), ComponentStability::Standard),
        GluedType::Three => GluingParams::new(s, quiver(rng), quiver(rng)),
        GluedType::Four => {
            let g = GluingParams::standard_pair(s);
            if rng.random_bool(0.5) {
                g.with_twist_matrix(gl2_plus(rng)).expect("det > 0")
            } else {
                g
            }
        }
    }
}

pub fn any_params<R: Rng + ?Sized>(rng: &mut R) -> GluingParams {
    let m = glued_type(rng);
    params(rng, m)
}

/// Parameters on the wall `per = 0`. For type 3 the second pair is built so
/// that `ζ₀′ + ζ₁′` is a positive multiple of `ζ₀ + ζ₁`; with `hit_vertex`
/// the split is chosen so that the wall meets the vertex.
pub fn wall_params<R: Rng + ?Sized>(rng: &mut R, m: GluedType, hit_vertex: bool) -> GluingParams {
    let s = surface(rng);
    match m {
        GluedType::One => GluingParams::new(s, ComponentStability::Standard, negative_real_quiver(rng)),
        GluedType::Two => GluingParams::new(s, negative_real_quiver(rng), ComponentStability::Standard),
        GluedType::Three => {
            let (z0, z1) = (half_plane_point(rng), half_plane_point(rng));
            let sum = z0.add(&z1);
            let w = sum.scale(&positive_rational(rng, 3)).expect("positive scale");
            let lambda = Rational::new(rng.random_range(1..=9), 10);
            let (w0, w1) = if w.is_negative_real() {
                (w.scale(&lambda), w.scale(&(Rational::one() - &lambda)))
            } else {
                let delta = if hit_vertex {
                    -(&z0.value().cross(z1.value()) / &sum.value().im)
                } else {
                    rational(rng, 4)
                };
                let d = GaussianRational::real(delta);
                (
                    HalfPlanePoint::new(w.value().scale(&lambda) + &d),
                    HalfPlanePoint::new(w.value().scale(&(Rational::one() - &lambda)) - d),
                )
            };
            let (w0, w1) = (w0.expect("in half-plane"), w1.expect("in half-plane"));
            GluingParams::new(s, ComponentStability::quiver(twist(rng), z0, z1), ComponentStability::quiver(twist(rng), w0, w1))
        }
        GluedType::Four => params(rng, GluedType::Four),
    }
}

pub fn chern_vector<R: Rng + ?Sized>(rng: &mut R) -> ChernVector {
    ChernVector::new(rational(rng, 6), rational(rng, 6), rational(rng, 6), rational(rng, 6))
}

pub fn integral_chern_vector<R: Rng + ?Sized>(rng: &mut R) -> ChernVector {
    let mut n = || rng.random_range(-8..=8);
    ChernVector::from_ints(n(), n(), n(), n())
}
