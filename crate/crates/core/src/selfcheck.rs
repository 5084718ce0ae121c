//! Seeded invariant suites, runnable at any time against the built library.
//!
//! A [`Fixture`] can corrupt one entry of a transition matrix; the matrix
//! suite must then fail. This is the negative control for the runner itself.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::adjoints::{
    chern2_of, conversion_matrix, conversion_matrix_inverse, dimvec2_of, proper_subvectors, DimVector4, Matrix,
    P1Class, TransitionMatrix,
};
use crate::arith::{Rational, Sign};
use crate::divisorial::{boundary_position, pi_sigma, vertex_condition_m3, wall_boundary_report, BoundaryTag};
use crate::gluing::{
    check_support_inequality, m4_components, perversity, skyscraper_jh, support_catalog, support_constant,
    wall_value, z_glued, z_glued_acted, z_standard, ComponentStability, GluedType, GluingParams, SupportConstant,
};
use crate::ktheory::{chern_of, ChernVector, Divisor, NamedObject, Surface};
use crate::moduli::{classify, ModuliSpace};
use crate::sampling;

/// Replaces one entry of a transition matrix wherever the suites read it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corruption {
    pub matrix: String,
    pub row: usize,
    pub col: usize,
    pub value: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    #[serde(default)]
    pub corrupt: Option<Corruption>,
}

impl Fixture {
    pub fn clean() -> Fixture {
        Fixture::default()
    }

    pub fn matrix(&self, t: TransitionMatrix, s: &Surface, k: i64) -> Matrix<4> {
        let mut m = t.matrix(s, k);
        if let Some(c) = &self.corrupt {
            if c.matrix == t.label() && c.row < 4 && c.col < 4 {
                m.0[c.row][c.col] = c.value.clone();
            }
        }
        m
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub checks: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfcheckReport {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

type Outcome = Result<usize, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn matrix_inverses(fx: &Fixture) -> Outcome {
    let mut n = 0;
    for e in 0..=6 {
        let s = Surface::new(e).expect("e >= 0");
        for k in -5..=5 {
            for t in [TransitionMatrix::ToDimUntwisted, TransitionMatrix::ToDimTwisted] {
                let prod = fx.matrix(t, &s, k).mul(&fx.matrix(t.inverse(), &s, k));
                ensure!(prod.is_identity(), "{}·{} ≠ I at e={e}, k={k}", t.label(), t.inverse().label());
                n += 1;
            }
            ensure!(conversion_matrix(k).mul(&conversion_matrix_inverse(k)).is_identity(), "C·C⁻¹ ≠ I at k={k}");
            n += 1;
        }
    }
    Ok(n)
}

fn mukai_master(rng: &mut ChaCha8Rng, draws: usize, vectors: usize) -> Outcome {
    let mut n = 0;
    for m in [GluedType::One, GluedType::Two, GluedType::Three, GluedType::Four] {
        for _ in 0..draws {
            let g = sampling::params(rng, m);
            let pi = pi_sigma(&g);
            for _ in 0..vectors {
                let v = sampling::chern_vector(rng);
                let lhs = pi.mukai_pair(g.surface(), &v);
                ensure!(lhs == z_glued_acted(&g, &v), "⟨π, v⟩ ≠ Z for m={}, v={v:?}", m.index());
                n += 1;
            }
        }
    }
    Ok(n)
}

fn ch_conservation(rng: &mut ChaCha8Rng, draws: usize) -> Outcome {
    let point = ChernVector::from_ints(0, 0, 0, 1);
    for _ in 0..draws {
        let g = if rng.random_bool(0.5) { sampling::any_params(rng) } else {
            let m = sampling::glued_type(rng);
            let hit = rng.random_bool(0.5);
            sampling::wall_params(rng, m, hit)
        };
        let jh = skyscraper_jh(&g);
        let total: ChernVector = jh.factors.iter().map(|o| chern_of(g.surface(), o)).sum();
        ensure!(total == point, "factors {:?} sum to {total:?}", jh.factors);
    }
    Ok(draws)
}

fn wall_theorems(rng: &mut ChaCha8Rng, draws: usize) -> Outcome {
    for _ in 0..draws {
        for m in [GluedType::One, GluedType::Two] {
            let p = boundary_position(&pi_sigma(&sampling::wall_params(rng, m, false)), 0);
            ensure!(p.det01.is_zero() && !p.det02.is_zero(), "type {} wall off ∂_z: {p:?}", m.index());
        }
        let hit = rng.random_bool(0.3);
        let g = sampling::wall_params(rng, GluedType::Three, hit);
        let r = wall_boundary_report(&g);
        let vc = r.vertex_condition.clone().unwrap_or_default();
        ensure!(r.position.det01.is_zero(), "type 3 wall has det01 = {}", r.position.det01);
        ensure!(r.position.det02.is_zero() == vc.is_zero(), "det02 = {} but vertex condition = {vc}", r.position.det02);
    }
    Ok(3 * draws)
}

fn m4_checks(rng: &mut ChaCha8Rng, draws: usize) -> Outcome {
    let mut n = 0;
    for e in [0, 1, 2, 4] {
        let g = GluingParams::standard_pair(Surface::new(e).expect("e >= 0"));
        let SupportConstant::Exact { constant } = support_constant(&g) else {
            return Err("type 4 support constant is not exact".into());
        };
        for row in check_support_inequality(&g, &support_catalog(), constant.to_f64()).map_err(|e| e.to_string())? {
            ensure!(row.pass, "‖ch‖ = {} > {constant}·{} for {:?}", row.norm, row.z_abs, row.object);
            n += 1;
        }
    }
    for _ in 0..draws {
        let g = GluingParams::standard_pair(sampling::surface(rng));
        let v = sampling::chern_vector(rng);
        let (e1, e2) = m4_components(g.surface(), &v);
        ensure!(z_glued(&g, &v) == z_standard(&e1) + z_standard(&e2), "type 4 factorization fails at {v:?}");
        n += 1;
    }
    Ok(n)
}

fn subobjects() -> Outcome {
    let subs = proper_subvectors(&DimVector4::from_ints([1, 1, 0, 0])).map_err(|e| e.to_string())?;
    ensure!(subs == vec![DimVector4::from_ints([0, 1, 0, 0]), DimVector4::from_ints([1, 0, 0, 0])]
        || subs == vec![DimVector4::from_ints([1, 0, 0, 0]), DimVector4::from_ints([0, 1, 0, 0])],
        "proper subvectors of [1,1,0,0]: {subs:?}");
    for k in -10..=10 {
        ensure!(chern2_of(k, &dimvec2_of(k, &P1Class::point())) == P1Class::point(), "round trip at k={k}");
        let d = dimvec2_of(k, &P1Class::point());
        ensure!(d.n0 == Rational::one() && d.n1 == Rational::one(), "point class at k={k} is {d:?}");
    }
    Ok(22)
}

fn classification(rng: &mut ChaCha8Rng, draws: usize) -> Outcome {
    for i in 0..draws {
        let m = sampling::glued_type(rng);
        let g = if i % 2 == 0 { sampling::params(rng, m) } else { sampling::wall_params(rng, m, false) };
        let per = perversity(&g);
        ensure!(wall_value(&g).is_zero() == (per.per_sign == Sign::Zero), "wall value and perversity disagree: {g:?}");
        if per.per_sign == Sign::Zero {
            let quiver = match m {
                GluedType::One => Some(g.comp2()),
                GluedType::Two => Some(g.comp1()),
                _ => None,
            };
            if let Some(ComponentStability::Quiver { zeta0, zeta1, .. }) = quiver {
                ensure!(zeta0.is_negative_real() && zeta1.is_negative_real(), "per = 0 with ζ off the negative axis: {g:?}");
            }
        }
        let v = classify(&g);
        let ok = match v.space {
            ModuliSpace::SigmaEFine => per.per_sign == Sign::Positive,
            ModuliSpace::Empty => per.per_sign == Sign::Negative && v.gr_factors.is_empty(),
            ModuliSpace::P1Coarse | ModuliSpace::Point => per.per_sign == Sign::Zero,
        };
        ensure!(ok, "verdict {:?} with perversity {:?}", v.space, per.per_sign);
    }
    Ok(draws)
}

fn cone_consistency(rng: &mut ChaCha8Rng, draws: usize) -> Outcome {
    for _ in 0..draws {
        let s = sampling::surface(rng);
        let z = sampling::positive_rational(rng, 4);
        let w = s.e_rational() * &z + sampling::positive_rational(rng, 4);
        let b = Divisor::new(sampling::rational(rng, 4), sampling::rational(rng, 4));
        let ex = crate::ktheory::exp_divisor(&s, &b, &Divisor::new(z, w));
        let tag = boundary_position(&ex, s.e()).tag;
        ensure!(tag == BoundaryTag::InteriorCandidate, "exp(B + iω) classified {tag:?}");
    }
    Ok(draws)
}

fn scaling(rng: &mut ChaCha8Rng, draws: usize) -> Outcome {
    for _ in 0..draws {
        let z: Vec<_> = (0..3).map(|_| sampling::half_plane_point(rng).into_value()).collect();
        let r = sampling::positive_rational(rng, 5);
        let lhs = vertex_condition_m3(&z[0].scale(&r), &z[1].scale(&r), &z[2].scale(&r));
        ensure!(lhs == &r * &r * vertex_condition_m3(&z[0], &z[1], &z[2]), "vertex condition is not degree 2");
    }
    Ok(draws)
}

fn json_round_trip(rng: &mut ChaCha8Rng, draws: usize) -> Outcome {
    for _ in 0..draws {
        let g = sampling::any_params(rng);
        let text = serde_json::to_string(&g).map_err(|e| e.to_string())?;
        let back: GluingParams = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        ensure!(back == g, "params do not round-trip through {text}");
        let r = wall_boundary_report(&g);
        let back: crate::divisorial::WallReport =
            serde_json::from_str(&serde_json::to_string(&r).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure!(back == r, "wall report does not round-trip");
        let o = NamedObject::line_bundle(rng.random_range(-3..=3), rng.random_range(-3..=3), rng.random_range(0..=2));
        let back: NamedObject = serde_json::from_str(&serde_json::to_string(&o).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure!(back == o, "object does not round-trip");
    }
    Ok(draws)
}

pub const SUITES: [&str; 10] = [
    "matrix_inverses",
    "mukai_master",
    "ch_conservation",
    "wall_theorems",
    "m4_support_and_factorization",
    "subobjects",
    "classification_consistency",
    "cone_consistency",
    "vertex_scaling",
    "json_round_trip",
];

/// Runs every suite; each suite gets its own generator derived from `seed`.
pub fn run(seed: u64, fixture: &Fixture) -> SelfcheckReport {
    let suites: Vec<SuiteResult> = SUITES
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((i as u64 + 1) << 32));
            let outcome = match *name {
                "matrix_inverses" => matrix_inverses(fixture),
                "mukai_master" => mukai_master(&mut rng, 60, 20),
                "ch_conservation" => ch_conservation(&mut rng, 300),
                "wall_theorems" => wall_theorems(&mut rng, 100),
                "m4_support_and_factorization" => m4_checks(&mut rng, 200),
                "subobjects" => subobjects(),
                "classification_consistency" => classification(&mut rng, 300),
                "cone_consistency" => cone_consistency(&mut rng, 200),
                "vertex_scaling" => scaling(&mut rng, 200),
                "json_round_trip" => json_round_trip(&mut rng, 100),
                _ => unreachable!(),
            };
            match outcome {
                Ok(checks) => SuiteResult { name: name.to_string(), passed: true, checks, failure: None },
                Err(msg) => SuiteResult { name: name.to_string(), passed: false, checks: 0, failure: Some(msg) },
            }
        })
        .collect();
    SelfcheckReport { seed, passed: suites.iter().all(|s| s.passed), suites }
}
