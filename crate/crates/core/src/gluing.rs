//! Glued stability conditions on `D^b(Σ_e) = ⟨D₁, D₂⟩`.
//!
//! The first component lives on `D₁` and is reached through `λ₁`; the second
//! lives on `D₂` and is reached through `ρ₂`. Each component is either the
//! standard condition `Z = −deg + i·rank` on `Coh(ℙ¹)` or a quiver condition
//! on `A(k) = ⟨𝒪(k−1)[1], 𝒪(k)⟩` with `Z(𝒪(k−1)[1]) = ζ₀`, `Z(𝒪(k)) = ζ₁`.
//! The glued type `m` is determined by which components are quiver.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::adjoints::{dimvec2_of, lambda1_class, rho2_class, Matrix, P1Class};
use crate::arith::{phase_approx, phase_compare, GaussianRational, HalfPlanePoint, Rational, Sign};
use crate::error::{Error, Result};
use crate::ktheory::{chern_of, ChernVector, NamedObject, Surface};

/// Stability condition on one copy of `D^b(ℙ¹)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ComponentStability {
    Standard,
    Quiver { k: i64, zeta0: HalfPlanePoint, zeta1: HalfPlanePoint },
}

impl ComponentStability {
    pub fn quiver(k: i64, zeta0: HalfPlanePoint, zeta1: HalfPlanePoint) -> ComponentStability {
        ComponentStability::Quiver { k, zeta0, zeta1 }
    }

    pub fn is_quiver(&self) -> bool {
        matches!(self, ComponentStability::Quiver { .. })
    }

    /// Charge of the point class `[1, 1]`, i.e. of `𝒪_f` or `𝒪_f(−C₀)` under
    /// this component: `−1` for standard, `ζ₀ + ζ₁` for quiver.
    pub fn point_charge(&self) -> HalfPlanePoint {
        match self {
            ComponentStability::Standard => HalfPlanePoint::from_ints(-1, 0).expect("-1 lies in the half-plane"),
            ComponentStability::Quiver { zeta0, zeta1, .. } => zeta0.add(zeta1),
        }
    }

    /// The second gluing perversity term: `1` for a standard component,
    /// `φ(ζ₁) − φ(ζ₀)` for a quiver component (reported by whether it vanishes).
    pub fn per_class(&self) -> PerClass {
        match self {
            ComponentStability::Standard => PerClass::Nonzero,
            ComponentStability::Quiver { zeta0, zeta1, .. } => match phase_compare(zeta1, zeta0) {
                Ordering::Equal => PerClass::Zero,
                _ => PerClass::Nonzero,
            },
        }
    }
}

/// `−deg + i·rank`.
pub fn z_standard(p: &P1Class) -> GaussianRational {
    GaussianRational::new(-&p.deg, p.rank.clone())
}

/// Central charge of a `ℙ¹` class under one component.
pub fn z_component(c: &ComponentStability, p: &P1Class) -> GaussianRational {
    match c {
        ComponentStability::Standard => z_standard(p),
        ComponentStability::Quiver { k, zeta0, zeta1 } => {
            let n = dimvec2_of(*k, p);
            zeta0.value().scale(&n.n0) + zeta1.value().scale(&n.n1)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GluedType {
    /// standard on `D₁`, quiver on `D₂`
    One,
    /// quiver on `D₁`, standard on `D₂`
    Two,
    /// quiver on both
    Three,
    /// standard on both
    Four,
}

impl GluedType {
    pub fn from_components(comp1: &ComponentStability, comp2: &ComponentStability) -> GluedType {
        match (comp1.is_quiver(), comp2.is_quiver()) {
            (false, true) => GluedType::One,
            (true, false) => GluedType::Two,
            (true, true) => GluedType::Three,
            (false, false) => GluedType::Four,
        }
    }

    pub fn from_index(m: i64) -> Result<GluedType> {
        match m {
            1 => Ok(GluedType::One),
            2 => Ok(GluedType::Two),
            3 => Ok(GluedType::Three),
            4 => Ok(GluedType::Four),
            _ => Err(Error::InvalidGluedType(m)),
        }
    }

    pub fn index(self) -> i64 {
        match self {
            GluedType::One => 1,
            GluedType::Two => 2,
            GluedType::Three => 3,
            GluedType::Four => 4,
        }
    }
}

/// Parameters of a glued stability condition. Valid by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GluingParamsJson", try_from = "GluingParamsJson")]
pub struct GluingParams {
    surface: Surface,
    comp1: ComponentStability,
    comp2: ComponentStability,
    shifts: (i64, i64),
    twist_matrix: Option<Matrix<2>>,
}

impl GluingParams {
    /// Shifts default to `(j₁, j₂) = (1, 0)`.
    pub fn new(surface: Surface, comp1: ComponentStability, comp2: ComponentStability) -> GluingParams {
        GluingParams { surface, comp1, comp2, shifts: (1, 0), twist_matrix: None }
    }

    /// Type `m = 4`: both components standard.
    pub fn standard_pair(surface: Surface) -> GluingParams {
        GluingParams::new(surface, ComponentStability::Standard, ComponentStability::Standard)
    }

    pub fn with_shifts(mut self, j1: i64, j2: i64) -> Result<GluingParams> {
        if j1 != j2 + 1 {
            return Err(Error::ShiftMismatch(j1, j2));
        }
        self.shifts = (j1, j2);
        Ok(self)
    }

    /// Sets the `GL⁺(2, ℚ)` matrix `M = ((a, b), (c, d))` acting on the first
    /// component of a type-4 condition.
    pub fn with_twist_matrix(mut self, m: Matrix<2>) -> Result<GluingParams> {
        if self.glued_type() != GluedType::Four {
            return Err(Error::ComponentMismatch("matrix M is only meaningful for glued type m = 4".into()));
        }
        let det = &m.0[0][0] * &m.0[1][1] - &m.0[0][1] * &m.0[1][0];
        if !det.is_positive() {
            return Err(Error::NonPositiveDeterminant(det.to_string()));
        }
        self.twist_matrix = Some(m);
        Ok(self)
    }

    pub fn surface(&self) -> &Surface {
        &self.surface
    }

    pub fn comp1(&self) -> &ComponentStability {
        &self.comp1
    }

    pub fn comp2(&self) -> &ComponentStability {
        &self.comp2
    }

    pub fn shifts(&self) -> (i64, i64) {
        self.shifts
    }

    pub fn glued_type(&self) -> GluedType {
        GluedType::from_components(&self.comp1, &self.comp2)
    }

    /// The matrix `M`, identity when unset.
    pub fn twist_matrix(&self) -> Matrix<2> {
        self.twist_matrix.clone().unwrap_or_else(Matrix::identity)
    }

    /// `(−1)^{j₂}`; the normalization `(j₁, j₂) = (1, 0)` has sign `+1`.
    pub fn global_sign(&self) -> Rational {
        Rational::sign_power(self.shifts.1)
    }

    /// Charge of `λ₁(𝒪_x) = 𝒪_f(−C₀)[1]` in the `(1, 0)` normalization.
    pub fn lambda_charge(&self) -> HalfPlanePoint {
        self.comp1.point_charge()
    }

    /// Charge of `ρ₂(𝒪_x) = 𝒪_f`.
    pub fn rho_charge(&self) -> HalfPlanePoint {
        self.comp2.point_charge()
    }
}

/// JSON form of [`GluingParams`].
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GluingParamsJson {
    pub e: i64,
    pub m: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_prime: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<[GaussianRational; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta_prime: Option<[GaussianRational; 2]>,
    #[serde(default, rename = "M", skip_serializing_if = "Option::is_none")]
    pub matrix: Option<[[Rational; 2]; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shifts: Option<[i64; 2]>,
}

fn quiver_from_json(k: Option<i64>, zeta: Option<[GaussianRational; 2]>, name: &str) -> Result<ComponentStability> {
    let k = k.ok_or_else(|| Error::ComponentMismatch(format!("quiver component needs twist {name:?}")))?;
    let [z0, z1] = zeta.ok_or_else(|| Error::ComponentMismatch(format!("quiver component with twist {name:?} needs its zeta pair")))?;
    Ok(ComponentStability::quiver(k, HalfPlanePoint::new(z0)?, HalfPlanePoint::new(z1)?))
}

impl TryFrom<GluingParamsJson> for GluingParams {
    type Error = Error;

    fn try_from(j: GluingParamsJson) -> Result<GluingParams> {
        let surface = Surface::new(j.e)?;
        let m = GluedType::from_index(j.m)?;
        let unexpected = |what: &str| Err(Error::ComponentMismatch(format!("{what} is not used by glued type m = {}", j.m)));
        let (comp1, comp2) = match m {
            GluedType::One | GluedType::Two => {
                if j.zeta_prime.is_some() || j.k_prime.is_some() {
                    return unexpected("zeta_prime/k_prime");
                }
                let q = quiver_from_json(j.k, j.zeta, "k")?;
                if m == GluedType::One {
                    (ComponentStability::Standard, q)
                } else {
                    (q, ComponentStability::Standard)
                }
            }
            GluedType::Three => {
                let q1 = quiver_from_json(j.k, j.zeta, "k")?;
                let q2 = quiver_from_json(j.k_prime.or(j.k), j.zeta_prime, "k_prime")?;
                (q1, q2)
            }
            GluedType::Four => {
                if j.zeta.is_some() || j.zeta_prime.is_some() {
                    return unexpected("zeta");
                }
                (ComponentStability::Standard, ComponentStability::Standard)
            }
        };
        if j.matrix.is_some() && m != GluedType::Four {
            return unexpected("M");
        }
        let mut g = GluingParams::new(surface, comp1, comp2);
        if let Some([j1, j2]) = j.shifts {
            g = g.with_shifts(j1, j2)?;
        }
        if let Some(mat) = j.matrix {
            g = g.with_twist_matrix(Matrix(mat))?;
        }
        Ok(g)
    }
}

impl From<GluingParams> for GluingParamsJson {
    fn from(g: GluingParams) -> GluingParamsJson {
        let split = |c: &ComponentStability| match c {
            ComponentStability::Standard => None,
            ComponentStability::Quiver { k, zeta0, zeta1 } => Some((*k, [zeta0.value().clone(), zeta1.value().clone()])),
        };
        let (q1, q2) = (split(&g.comp1), split(&g.comp2));
        let (k, zeta, k_prime, zeta_prime) = match (q1, q2) {
            (Some((k, z)), Some((kp, zp))) => (Some(k), Some(z), Some(kp), Some(zp)),
            (Some((k, z)), None) | (None, Some((k, z))) => (Some(k), Some(z), None, None),
            (None, None) => (None, None, None, None),
        };
        GluingParamsJson {
            e: g.surface.e() as i64,
            m: g.glued_type().index(),
            k,
            k_prime,
            zeta,
            zeta_prime,
            matrix: g.twist_matrix.map(|m| m.0),
            shifts: (g.shifts != (1, 0)).then_some([g.shifts.0, g.shifts.1]),
        }
    }
}

/// `Z_gl(E) = (−1)^{j₁}·Z₁(λ₁E) + (−1)^{j₂}·Z₂(ρ₂E)`.
pub fn z_glued(g: &GluingParams, v: &ChernVector) -> GaussianRational {
    let s = g.surface();
    let (j1, j2) = g.shifts();
    let first = z_component(g.comp1(), &lambda1_class(s, v)).scale(&Rational::sign_power(j1));
    let second = z_component(g.comp2(), &rho2_class(s, v)).scale(&Rational::sign_power(j2));
    first + second
}

/// Closed form of the type-4 charge: `−(2ch₂ + c₁·C₀) + i(r + 2c₁·f)`.
pub fn z_glued_m4_closed_form(s: &Surface, v: &ChernVector) -> GaussianRational {
    let c1_c0 = &v.b - s.e_rational() * &v.a;
    GaussianRational::new(-(Rational::from(2) * &v.ch2 + c1_c0), &v.r + Rational::from(2) * &v.a)
}

/// The classes `(r₁, d₁) = −ch(λ₁E)` and `(r₂, d₂) = ch(ρ₂E)` of the two
/// `ℙ¹` sheaves in the canonical sequence of a type-4 object.
pub fn m4_components(s: &Surface, v: &ChernVector) -> (P1Class, P1Class) {
    (lambda1_class(s, v).negate(), rho2_class(s, v))
}

/// Applies `M = ((a, b), (c, d))` to `z` viewed as the real vector `(Re z, Im z)`.
pub fn act_on_charge(m: &Matrix<2>, z: &GaussianRational) -> GaussianRational {
    let [re, im] = m.apply(&[z.re.clone(), z.im.clone()]);
    GaussianRational::new(re, im)
}

/// Charge of the condition glued from `σ₁·M` and `σ₂` for type 4:
/// `M·Z_st(λ₁E) + Z_st(ρ₂E)`, times the global shift sign. The matrix acts on
/// the unshifted standard charge, so `M = −I` recovers [`z_glued`]. Other types
/// carry no matrix and return [`z_glued`].
pub fn z_glued_acted(g: &GluingParams, v: &ChernVector) -> GaussianRational {
    if g.glued_type() != GluedType::Four {
        return z_glued(g, v);
    }
    let s = g.surface();
    let first = act_on_charge(&g.twist_matrix(), &z_standard(&lambda1_class(s, v)));
    (first + z_standard(&rho2_class(s, v))).scale(&g.global_sign())
}

/// Whether the second perversity term `per_i` vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PerClass {
    Zero,
    Nonzero,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PerversityReport {
    pub per_sign: Sign,
    pub per_value: f64,
    pub per1: PerClass,
    pub per2: PerClass,
    pub phase_lambda1: f64,
    pub phase_rho2: f64,
}

/// `per(σ) = φ(λ₁𝒪_x) − φ(ρ₂𝒪_x)`, with the sign decided exactly.
pub fn perversity(g: &GluingParams) -> PerversityReport {
    let (zl, zr) = (g.lambda_charge(), g.rho_charge());
    let phase_lambda1 = phase_approx(&zl);
    let phase_rho2 = phase_approx(&zr);
    PerversityReport {
        per_sign: Sign::from_ordering(phase_compare(&zl, &zr)),
        per_value: phase_lambda1 - phase_rho2,
        per1: g.comp1().per_class(),
        per2: g.comp2().per_class(),
        phase_lambda1,
        phase_rho2,
    }
}

/// `Re Z(λ₁𝒪_x)·Im Z(ρ₂𝒪_x) − Im Z(λ₁𝒪_x)·Re Z(ρ₂𝒪_x)`; zero exactly on the
/// wall `W₀`.
pub fn wall_value(g: &GluingParams) -> Rational {
    g.lambda_charge().value().cross(g.rho_charge().value())
}

/// Support-property data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SupportConstant {
    /// Type 4: `C = max{3, 1 + e/2}`.
    Exact { constant: Rational },
    /// Quiver types: the image of the quiver heart lies in the sector of
    /// phases `[θ, 1]` with `θ = min{φ(ζ₀), φ(ζ₁)}`. `theta_zeta` is the
    /// minimizing parameter; `constant` is `1/sin(πθ)`, absent when `θ = 1`.
    Sector { theta_zeta: GaussianRational, theta: f64, constant: Option<f64> },
}

pub fn support_constant(g: &GluingParams) -> SupportConstant {
    let quiver = match g.glued_type() {
        GluedType::Four => {
            let c = Rational::from(3).max(Rational::one() + g.surface().half_e());
            return SupportConstant::Exact { constant: c };
        }
        GluedType::One | GluedType::Three => g.comp2(),
        GluedType::Two => g.comp1(),
    };
    let ComponentStability::Quiver { zeta0, zeta1, .. } = quiver else {
        unreachable!("glued type implies a quiver component here")
    };
    let min = if phase_compare(zeta0, zeta1) == Ordering::Greater { zeta1 } else { zeta0 };
    let theta = phase_approx(min);
    let constant = (!min.is_negative_real()).then(|| 1.0 / (std::f64::consts::PI * theta).sin());
    SupportConstant::Sector { theta_zeta: min.value().clone(), theta, constant }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SupportCheck {
    pub object: NamedObject,
    pub norm: Rational,
    pub z_abs: f64,
    pub pass: bool,
}

/// Checks `‖ch(E)‖ ≤ C·|Z_gl(E)|` (float tolerance `1e−9`) for each object.
pub fn check_support_inequality(g: &GluingParams, objects: &[NamedObject], constant: f64) -> Result<Vec<SupportCheck>> {
    if constant.is_nan() || constant <= 0.0 {
        return Err(Error::NonPositiveConstant(constant));
    }
    Ok(objects
        .iter()
        .map(|o| {
            let v = chern_of(g.surface(), o);
            let norm = v.sup_norm();
            let z_abs = z_glued(g, &v).abs_f64();
            let pass = norm.to_f64() <= constant * z_abs + 1e-9;
            SupportCheck { object: o.clone(), norm, z_abs, pass }
        })
        .collect())
}

/// The objects checked against the type-4 support bound: `𝒪_x`, `𝒪_f`,
/// `𝒪_f(−C₀)[1]` and the line bundles `𝒪(n, m)[j]` with `|n|, |m| ≤ 3`,
/// `0 ≤ j ≤ 2`.
pub fn support_catalog() -> Vec<NamedObject> {
    let mut out = vec![NamedObject::SkyscraperPoint, NamedObject::FiberStructure, NamedObject::FiberTwist];
    for n in -3..=3 {
        for m in -3..=3 {
            for shift in 0..=2 {
                out.push(NamedObject::line_bundle(n, m, shift));
            }
        }
    }
    out
}

/// `(|d₁| ≤ |d₁ + d₂|, |d₂| ≤ 2|d₁ + d₂|)` for a type-4 decomposition.
pub fn m4_degree_bounds(d1: &Rational, r1: &Rational, d2: &Rational, r2: &Rational) -> Result<(bool, bool)> {
    let total_rank = r1 + r2;
    if !total_rank.is_positive() {
        return Err(Error::NonPositiveTotalRank(total_rank.to_string()));
    }
    let total = (d1 + d2).abs();
    Ok((d1.abs() <= total, d2.abs() <= Rational::from(2) * total))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StabilityVerdict {
    Stable,
    StrictlySemistable,
    Unstable,
}

/// Jordan–Hölder factors of `𝒪_x` (Harder–Narasimhan factors when unstable).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanHolder {
    pub verdict: StabilityVerdict,
    pub factors: Vec<NamedObject>,
}

/// `𝒪_f` refined along `0 → 𝒪(kf) → 𝒪_f → 𝒪((k−1)f)[1] → 0`.
fn fiber_factors(comp2: &ComponentStability) -> Vec<NamedObject> {
    match comp2 {
        ComponentStability::Quiver { k, .. } if comp2.per_class() == PerClass::Zero => {
            vec![NamedObject::line_bundle(0, *k, 0), NamedObject::line_bundle(0, k - 1, 1)]
        }
        _ => vec![NamedObject::FiberStructure],
    }
}

/// `𝒪_f(−C₀)[1]` refined along
/// `0 → 𝒪(−C₀+kf)[1] → 𝒪_f(−C₀)[1] → 𝒪(−C₀+(k−1)f)[2] → 0`.
fn twist_factors(comp1: &ComponentStability) -> Vec<NamedObject> {
    match comp1 {
        ComponentStability::Quiver { k, .. } if comp1.per_class() == PerClass::Zero => {
            vec![NamedObject::line_bundle(-1, *k, 1), NamedObject::line_bundle(-1, k - 1, 2)]
        }
        _ => vec![NamedObject::FiberTwist],
    }
}

pub fn skyscraper_jh(g: &GluingParams) -> JordanHolder {
    match perversity(g).per_sign {
        Sign::Positive => JordanHolder { verdict: StabilityVerdict::Stable, factors: vec![NamedObject::SkyscraperPoint] },
        Sign::Zero => {
            let mut factors = fiber_factors(g.comp2());
            factors.extend(twist_factors(g.comp1()));
            JordanHolder { verdict: StabilityVerdict::StrictlySemistable, factors }
        }
        Sign::Negative => JordanHolder {
            verdict: StabilityVerdict::Unstable,
            factors: vec![NamedObject::FiberTwist, NamedObject::FiberStructure],
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surf(e: i64) -> Surface {
        Surface::new(e).unwrap()
    }

    fn hp(re: i64, im: i64) -> HalfPlanePoint {
        HalfPlanePoint::from_ints(re, im).unwrap()
    }

    fn type1(e: i64, k: i64, z0: (i64, i64), z1: (i64, i64)) -> GluingParams {
        let q = ComponentStability::quiver(k, hp(z0.0, z0.1), hp(z1.0, z1.1));
        GluingParams::new(surf(e), ComponentStability::Standard, q)
    }

    fn type3(e: i64, k: i64, kp: i64, z: [(i64, i64); 2], zp: [(i64, i64); 2]) -> GluingParams {
        let q1 = ComponentStability::quiver(k, hp(z[0].0, z[0].1), hp(z[1].0, z[1].1));
        let q2 = ComponentStability::quiver(kp, hp(zp[0].0, zp[0].1), hp(zp[1].0, zp[1].1));
        GluingParams::new(surf(e), q1, q2)
    }

    fn pt() -> ChernVector {
        ChernVector::from_ints(0, 0, 0, 1)
    }

    #[test]
    fn component_charges() {
        assert_eq!(z_component(&ComponentStability::Standard, &P1Class::point()), GaussianRational::from_ints(-1, 0));
        let q = ComponentStability::quiver(3, hp(0, 1), hp(0, 1));
        assert_eq!(z_component(&q, &P1Class::point()), GaussianRational::from_ints(0, 2));
        for k in -3..4 {
            let q = ComponentStability::quiver(k, hp(-2, 5), hp(1, 1));
            let generator = P1Class::from_ints(-1, -(k - 1));
            assert_eq!(z_component(&q, &generator), GaussianRational::from_ints(-2, 5));
        }
    }

    #[test]
    fn glued_charge_examples() {
        let g4 = GluingParams::standard_pair(surf(2));
        assert_eq!(z_glued(&g4, &pt()), GaussianRational::from_ints(-2, 0));
        assert_eq!(z_glued(&g4, &ChernVector::from_ints(0, 0, 1, 0)), GaussianRational::from_ints(-1, 0));
        let g3 = type3(1, 2, -1, [(-1, 1), (1, 1)], [(1, 1), (-1, 1)]);
        assert_eq!(z_glued(&g3, &pt()), GaussianRational::from_ints(0, 4));
    }

    #[test]
    fn point_charges_match_generic_route() {
        let g = type3(2, 1, -2, [(-3, 1), (2, 7)], [(5, 1), (-1, 0)]);
        let s = g.surface();
        let lam = z_component(g.comp1(), &lambda1_class(s, &pt())).scale(&Rational::from(-1));
        let rho = z_component(g.comp2(), &rho2_class(s, &pt()));
        assert_eq!(&lam, g.lambda_charge().value());
        assert_eq!(&rho, g.rho_charge().value());
        assert_eq!(lam + rho, z_glued(&g, &pt()));
    }

    #[test]
    fn shifts_rescale_by_global_sign() {
        let g = type1(1, 0, (1, 2), (-3, 1));
        let shifted = g.clone().with_shifts(2, 1).unwrap();
        let v = ChernVector::from_ints(2, -1, 3, 5);
        assert_eq!(z_glued(&shifted, &v), -z_glued(&g, &v));
        assert!(matches!(g.clone().with_shifts(2, 0), Err(Error::ShiftMismatch(2, 0))));
        assert!(g.with_shifts(0, 1).is_err());
    }

    #[test]
    fn perversity_examples() {
        let p = perversity(&GluingParams::standard_pair(surf(3)));
        assert_eq!((p.per_sign, p.per1, p.per2), (Sign::Zero, PerClass::Nonzero, PerClass::Nonzero));

        let p = perversity(&type3(1, 0, 0, [(-1, 1), (1, 1)], [(1, 1), (-1, 1)]));
        assert_eq!(p.per_sign, Sign::Zero);

        let p = perversity(&type1(0, 0, (0, 1), (0, 1)));
        assert_eq!(p.phase_rho2, 0.5);
        assert_eq!(p.phase_lambda1, 1.0);
        assert_eq!(p.per_value, 0.5);
        assert_eq!(p.per_sign, Sign::Positive);
        assert_eq!(p.per2, PerClass::Zero);
    }

    #[test]
    fn wall_value_examples() {
        assert_eq!(wall_value(&GluingParams::standard_pair(surf(1))), Rational::zero());
        assert_eq!(wall_value(&type1(1, 0, (-1, 0), (-1, 0))), Rational::zero());
        assert_eq!(wall_value(&type1(1, 0, (0, 1), (0, 1))), Rational::from(-2));
    }

    #[test]
    fn support_constants() {
        let c = |e| support_constant(&GluingParams::standard_pair(surf(e)));
        assert_eq!(c(4), SupportConstant::Exact { constant: 3.into() });
        assert_eq!(c(6), SupportConstant::Exact { constant: 4.into() });
        assert_eq!(c(0), SupportConstant::Exact { constant: 3.into() });
        let q = ComponentStability::quiver(0, hp(0, 1), hp(0, 1));
        let g2 = GluingParams::new(surf(1), q, ComponentStability::Standard);
        match support_constant(&g2) {
            SupportConstant::Sector { theta, constant, .. } => {
                assert_eq!(theta, 0.5);
                assert!((constant.unwrap() - 1.0).abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
        match support_constant(&type1(0, 0, (1, 1), (-1, 1))) {
            SupportConstant::Sector { theta_zeta, .. } => assert_eq!(theta_zeta, GaussianRational::from_ints(1, 1)),
            other => panic!("{other:?}"),
        }
        match support_constant(&type1(0, 0, (-1, 0), (-2, 0))) {
            SupportConstant::Sector { theta, constant, .. } => assert_eq!((theta, constant), (1.0, None)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn support_inequality_examples() {
        let g = GluingParams::standard_pair(surf(2));
        let rows = check_support_inequality(&g, &[NamedObject::SkyscraperPoint, NamedObject::FiberStructure], 3.0).unwrap();
        assert_eq!((rows[0].norm.clone(), rows[0].z_abs, rows[0].pass), (Rational::one(), 2.0, true));
        assert_eq!((rows[1].norm.clone(), rows[1].z_abs, rows[1].pass), (Rational::one(), 1.0, true));
        assert!(check_support_inequality(&g, &[], 3.0).unwrap().is_empty());
        assert!(check_support_inequality(&g, &[], 0.0).is_err());
    }

    #[test]
    fn degree_bounds() {
        let r = |x| Rational::from(x);
        assert_eq!(m4_degree_bounds(&r(1), &r(1), &r(1), &r(1)).unwrap(), (true, true));
        assert_eq!(m4_degree_bounds(&r(2), &r(1), &r(-1), &r(1)).unwrap(), (false, true));
        assert_eq!(m4_degree_bounds(&r(0), &r(1), &r(0), &r(1)).unwrap(), (true, true));
        assert!(m4_degree_bounds(&r(0), &r(1), &r(0), &r(-1)).is_err());
    }

    #[test]
    fn skyscraper_filtrations() {
        let jh = skyscraper_jh(&GluingParams::standard_pair(surf(1)));
        assert_eq!(jh.verdict, StabilityVerdict::StrictlySemistable);
        assert_eq!(jh.factors, vec![NamedObject::FiberStructure, NamedObject::FiberTwist]);

        let g = type3(2, 1, 1, [(-1, 0), (-1, 0)], [(-2, 0), (-3, 0)]);
        let jh = skyscraper_jh(&g);
        assert_eq!(jh.verdict, StabilityVerdict::StrictlySemistable);
        assert_eq!(
            jh.factors,
            vec![
                NamedObject::line_bundle(0, 1, 0),
                NamedObject::line_bundle(0, 0, 1),
                NamedObject::line_bundle(-1, 1, 1),
                NamedObject::line_bundle(-1, 0, 2),
            ]
        );
        let total: ChernVector = jh.factors.iter().map(|o| chern_of(g.surface(), o)).sum();
        assert_eq!(total, pt());

        let jh = skyscraper_jh(&type1(0, 0, (0, 1), (0, 1)));
        assert_eq!((jh.verdict, jh.factors), (StabilityVerdict::Stable, vec![NamedObject::SkyscraperPoint]));

        let jh = skyscraper_jh(&type3(0, 0, 0, [(0, 1), (0, 1)], [(-1, 1), (-1, 1)]));
        assert_eq!(jh.verdict, StabilityVerdict::Unstable);
        assert_eq!(jh.factors, vec![NamedObject::FiberTwist, NamedObject::FiberStructure]);
    }

    #[test]
    fn mixed_type_refines_only_quiver_side() {
        let g = type1(3, 2, (-1, 0), (-4, 0));
        let jh = skyscraper_jh(&g);
        assert_eq!(
            jh.factors,
            vec![NamedObject::line_bundle(0, 2, 0), NamedObject::line_bundle(0, 1, 1), NamedObject::FiberTwist]
        );
    }

    #[test]
    fn params_json() {
        let js = r#"{"e":1,"m":3,"k":0,"k_prime":2,"zeta":[["-1","1"],["1","1"]],"zeta_prime":[["1","1"],["-1","1"]]}"#;
        let g: GluingParams = serde_json::from_str(js).unwrap();
        assert_eq!(g.glued_type(), GluedType::Three);
        assert_eq!(serde_json::to_string(&g).unwrap(), js);

        let bad = r#"{"e":1,"m":1,"k":0,"zeta":[["1","-1"],["1","1"]]}"#;
        let err = serde_json::from_str::<GluingParams>(bad).unwrap_err().to_string();
        assert!(err.contains("HalfPlanePoint"), "{err}");
        let bad = r#"{"e":-2,"m":4}"#;
        assert!(serde_json::from_str::<GluingParams>(bad).unwrap_err().to_string().contains("Surface"));
        let bad = r#"{"e":0,"m":5}"#;
        assert!(serde_json::from_str::<GluingParams>(bad).unwrap_err().to_string().contains("glued type"));
        let bad = r#"{"e":0,"m":4,"M":[["1","2"],["3","4"]]}"#;
        assert!(serde_json::from_str::<GluingParams>(bad).unwrap_err().to_string().contains("determinant"));
        let bad = r#"{"e":0,"m":2,"M":[["1","0"],["0","1"]],"k":0,"zeta":[["-1","0"],["-1","0"]]}"#;
        assert!(serde_json::from_str::<GluingParams>(bad).is_err());
        let ok = r#"{"e":0,"m":4,"M":[["2","1"],["0","1"]],"shifts":[3,2]}"#;
        let g: GluingParams = serde_json::from_str(ok).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), ok);
    }
}
