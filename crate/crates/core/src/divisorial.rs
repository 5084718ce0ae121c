//! The vector `π(σ)` with `Z_gl = ⟨π(σ), ·⟩_M`, its position relative to the
//! divisorial cone `S_div = {z > 0, w > ze}`, and the wall reports.

use serde::{Deserialize, Serialize};

use crate::arith::{GaussianRational, Rational};
use crate::gluing::{wall_value, ComponentStability, GluedType, GluingParams};
use crate::ktheory::ComplexClass;

pub type PiSigma = ComplexClass;

fn quiver_parts(c: &ComponentStability) -> (Rational, GaussianRational, GaussianRational) {
    match c {
        ComponentStability::Quiver { k, zeta0, zeta1 } => (Rational::from(*k), zeta0.value().clone(), zeta1.value().clone()),
        ComponentStability::Standard => unreachable!("caller checked the glued type"),
    }
}

fn re(x: Rational) -> GaussianRational {
    GaussianRational::real(x)
}

pub fn pi_sigma(g: &GluingParams) -> PiSigma {
    let h = g.surface().half_e();
    let one = Rational::one();
    let i = GaussianRational::i();
    let pi = match g.glued_type() {
        GluedType::One => {
            let (k, z0, z1) = quiver_parts(g.comp2());
            let s = &z0 + &z1;
            ComplexClass::new(
                re(one.clone()) - &s,
                s,
                re(h.clone()) + &i + z0.scale(&(&h - &k)) + z1.scale(&(&h - &k + &one)),
                z0.scale(&k) - z1.scale(&(&one - &k)),
            )
        }
        GluedType::Two => {
            let (k, z0, z1) = quiver_parts(g.comp1());
            ComplexClass::new(
                re(one.clone()) - &z0 - &z1,
                re(-&one),
                re(-&h) + &i - z0.scale(&(&h + &k)) - z1.scale(&(&h + &k - &one)),
                -i,
            )
        }
        GluedType::Three => {
            let (k, z0, z1) = quiver_parts(g.comp1());
            let (kp, w0, w1) = quiver_parts(g.comp2());
            let w = &w0 + &w1;
            ComplexClass::new(
                -(&z0 + &z1 + &w),
                w,
                -(z0.scale(&(&h + &k)) + z1.scale(&(&h + &k - &one))) + w0.scale(&(&h - &kp)) + w1.scale(&(&h - &kp + &one)),
                w0.scale(&kp) + w1.scale(&(&kp - &one)),
            )
        }
        GluedType::Four => {
            let m = g.twist_matrix();
            let [[a, b], [c, d]] = &m.0;
            ComplexClass::new(
                GaussianRational::new(&one - a, -c),
                re(-&one),
                GaussianRational::new(-(&h * &(a + &one)) - b, -(&h * c) + &one - d),
                -GaussianRational::i(),
            )
        }
    };
    pi.scale(&g.global_sign())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryTag {
    #[serde(rename = "interior")]
    InteriorCandidate,
    BoundaryZ,
    Vertex,
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryPosition {
    pub det01: Rational,
    pub det02: Rational,
    #[serde(rename = "position")]
    pub tag: BoundaryTag,
}

/// `det01 = det(ξ₀, ξ₁)`, `det02 = det(ξ₀, ξ₂)` as real 2×2 determinants. Up
/// to the positive gauge factor these are the cone coordinates `z` and `w`.
pub fn boundary_position(p: &PiSigma, e: u32) -> BoundaryPosition {
    let det01 = p.xi0.cross(&p.xi1);
    let det02 = p.xi0.cross(&p.xi2);
    let tag = match (det01.is_zero(), det02.is_zero()) {
        (true, true) => BoundaryTag::Vertex,
        (true, false) => BoundaryTag::BoundaryZ,
        (false, _) => {
            let ratio = &(&det02 - Rational::from(e) * &det01) / &det01;
            if ratio.is_positive() {
                BoundaryTag::InteriorCandidate
            } else {
                BoundaryTag::Degenerate
            }
        }
    };
    BoundaryPosition { det01, det02, tag }
}

/// `det(ζ₀, ζ₁) − det(ζ₀ + ζ₁, ζ₀′)`. On a type-3 wall this vanishes exactly
/// when the wall meets the vertex of `S_div`.
pub fn vertex_condition_m3(zeta0: &GaussianRational, zeta1: &GaussianRational, zeta0p: &GaussianRational) -> Rational {
    zeta0.cross(zeta1) - (zeta0 + zeta1).cross(zeta0p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallReport {
    pub on_wall: bool,
    #[serde(flatten)]
    pub position: BoundaryPosition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_condition: Option<Rational>,
    pub pi_sigma: PiSigma,
}

pub fn wall_boundary_report(g: &GluingParams) -> WallReport {
    let pi = pi_sigma(g);
    let position = boundary_position(&pi, g.surface().e());
    let vertex_condition = match (g.comp1(), g.comp2()) {
        (ComponentStability::Quiver { zeta0, zeta1, .. }, ComponentStability::Quiver { zeta0: w0, .. }) => {
            Some(vertex_condition_m3(zeta0.value(), zeta1.value(), w0.value()))
        }
        _ => None,
    };
    WallReport { on_wall: wall_value(g).is_zero(), position, vertex_condition, pi_sigma: pi }
}
