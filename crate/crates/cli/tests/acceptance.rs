//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use hirzebruch::adjoints::{
    conversion_matrix, conversion_matrix_inverse, proper_subvectors, DimVector4, TransitionMatrix,
};
use hirzebruch::arith::{GaussianRational, HalfPlanePoint, Rational, Sign};
use hirzebruch::divisorial::{pi_sigma, vertex_condition_m3, wall_boundary_report, BoundaryTag};
use hirzebruch::gluing::{
    check_support_inequality, m4_components, perversity, skyscraper_jh, support_catalog, wall_value, z_glued,
    z_standard, ComponentStability, GluedType, GluingParams,
};
use hirzebruch::ktheory::{chern_of, ChernVector, Surface};
use hirzebruch::moduli::{classify, ModuliSpace};
use hirzebruch::sampling;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

macro_rules! check {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn surf(e: i64) -> Surface {
    Surface::new(e).unwrap()
}

fn mukai_master() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut n = 0;
    for m in [GluedType::One, GluedType::Two, GluedType::Three] {
        for _ in 0..300 {
            let g = sampling::params(&mut rng, m);
            let pi = pi_sigma(&g);
            for _ in 0..50 {
                let v = sampling::chern_vector(&mut rng);
                check!(pi.mukai_pair(g.surface(), &v) == z_glued(&g, &v), "m={} {g:?} v={v:?}", m.index());
                n += 1;
            }
        }
    }
    Ok(format!("{n} exact pairings"))
}

fn matrix_inverses() -> Verdict {
    for e in 0..=6 {
        let s = surf(e);
        for k in -5..=5 {
            let p1 = TransitionMatrix::ToDimUntwisted.matrix(&s, k).mul(&TransitionMatrix::FromDimUntwisted.matrix(&s, k));
            let p2 = TransitionMatrix::ToDimTwisted.matrix(&s, k).mul(&TransitionMatrix::FromDimTwisted.matrix(&s, k));
            check!(p1.is_identity(), "mat11·mat12 at e={e}, k={k}");
            check!(p2.is_identity(), "mat21·mat22 at e={e}, k={k}");
            check!(conversion_matrix(k).mul(&conversion_matrix_inverse(k)).is_identity(), "C·C⁻¹ at k={k}");
        }
    }
    Ok("77 grid points".into())
}

fn ch_of_gr() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let point = ChernVector::from_ints(0, 0, 0, 1);
    let mut seen = [0usize; 4];
    for i in 0..2000 {
        let m = sampling::glued_type(&mut rng);
        let g = if i % 2 == 0 {
            sampling::params(&mut rng, m)
        } else {
            let hit = rng.random_bool(0.5);
            sampling::wall_params(&mut rng, m, hit)
        };
        let verdict = classify(&g);
        seen[verdict.space as usize] += 1;
        let factors = if verdict.space == ModuliSpace::Empty { skyscraper_jh(&g).factors } else { verdict.gr_factors };
        let total: ChernVector = factors.iter().map(|o| chern_of(g.surface(), o)).sum();
        check!(total == point, "{:?}: {factors:?} sums to {total:?}", verdict.space);
    }
    check!(seen.iter().all(|&c| c > 0), "not every branch reached: {seen:?}");
    Ok(format!("branches fine/coarse/point/empty = {seen:?}"))
}

fn wall_theorems() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for m in [GluedType::One, GluedType::Two] {
        for _ in 0..200 {
            let r = wall_boundary_report(&sampling::wall_params(&mut rng, m, false));
            check!(r.on_wall, "draw off the wall");
            check!(r.position.det01.is_zero() && !r.position.det02.is_zero(), "m={}: {:?}", m.index(), r.position);
            check!(r.position.tag != BoundaryTag::Vertex, "m={} hit the vertex", m.index());
        }
    }
    let mut vertices = 0;
    for i in 0..200 {
        let g = sampling::wall_params(&mut rng, GluedType::Three, i % 3 == 0);
        let r = wall_boundary_report(&g);
        let vc = r.vertex_condition.clone().ok_or("missing vertex condition")?;
        check!(r.on_wall && r.position.det01.is_zero(), "m=3 det01 = {}", r.position.det01);
        check!(r.position.det02.is_zero() == vc.is_zero(), "m=3 det02 = {} vs condition {vc}", r.position.det02);
        vertices += usize::from(vc.is_zero());
    }
    for r in [Rational::from(1), Rational::from(2), Rational::new(7, 3)] {
        let z = |re: i64, im: i64| GaussianRational::from_ints(re, im).scale(&r);
        let hp = |re, im| HalfPlanePoint::new(z(re, im)).unwrap();
        check!(vertex_condition_m3(&z(-1, 1), &z(1, 1), &z(1, 1)).is_zero(), "r={r}: condition nonzero");
        let g = GluingParams::new(
            surf(1),
            ComponentStability::quiver(0, hp(-1, 1), hp(1, 1)),
            ComponentStability::quiver(0, hp(1, 1), hp(-1, 1)),
        );
        let rep = wall_boundary_report(&g);
        check!(rep.on_wall && rep.position.tag == BoundaryTag::Vertex, "r={r}: {rep:?}");
    }
    Ok(format!("600 wall draws, {vertices} type-3 vertex hits, r-family exact"))
}

fn m4_support() -> Verdict {
    let catalog = support_catalog();
    let mut worst: f64 = 0.0;
    for e in [0, 1, 2, 4] {
        let c = 3f64.max(1.0 + e as f64 / 2.0);
        let g = GluingParams::standard_pair(surf(e));
        for row in check_support_inequality(&g, &catalog, c).map_err(|e| e.to_string())? {
            check!(row.pass, "e={e}: {:?} has ‖ch‖ = {} > {c}·{}", row.object, row.norm, row.z_abs);
            worst = worst.max(row.norm.to_f64() / (c * row.z_abs));
        }
    }
    Ok(format!("{} objects × 4 surfaces, worst ratio {worst:.3}", catalog.len()))
}

fn subobject_oracle() -> Verdict {
    let subs = proper_subvectors(&DimVector4::from_ints([1, 1, 0, 0])).map_err(|e| e.to_string())?;
    let mut expected = vec![DimVector4::from_ints([1, 0, 0, 0]), DimVector4::from_ints([0, 1, 0, 0])];
    expected.sort();
    let mut got = subs.clone();
    got.sort();
    check!(got == expected && subs.len() == 2, "proper subvectors {subs:?}");
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    for _ in 0..500 {
        let g = GluingParams::standard_pair(sampling::surface(&mut rng));
        let v = sampling::chern_vector(&mut rng);
        let (e1, e2) = m4_components(g.surface(), &v);
        check!(z_glued(&g, &v) == z_standard(&e1) + z_standard(&e2), "factorization at {v:?}");
    }
    Ok("subvectors exact, 500 factorizations".into())
}

fn classification_consistency() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    let (mut zeros, mut implications) = (0, 0);
    for i in 0..500 {
        let m = sampling::glued_type(&mut rng);
        let g = if i % 2 == 0 { sampling::params(&mut rng, m) } else { sampling::wall_params(&mut rng, m, false) };
        let per = perversity(&g).per_sign;
        check!(wall_value(&g).is_zero() == (per == Sign::Zero), "disagreement at {g:?}");
        zeros += usize::from(per == Sign::Zero);
        let quiver = match m {
            GluedType::One => Some(g.comp2()),
            GluedType::Two => Some(g.comp1()),
            _ => None,
        };
        if let (Sign::Zero, Some(ComponentStability::Quiver { zeta0, zeta1, .. })) = (per, quiver) {
            check!(zeta0.is_negative_real() && zeta1.is_negative_real(), "counterexample {g:?}");
            implications += 1;
        }
    }
    Ok(format!("500 draws, {zeros} on the wall, {implications} implication instances, 0 counterexamples"))
}

fn bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hirzebruch")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn wall_line(svg: &str) -> Option<[f64; 4]> {
    let line = svg.lines().find(|l| l.contains(r#"id="wall""#))?;
    let attr = |name: &str| -> Option<f64> {
        let start = line.find(&format!(r#" {name}=""#))? + name.len() + 3;
        line[start..].split('"').next()?.parse().ok()
    };
    Some([attr("x1")?, attr("y1")?, attr("x2")?, attr("y2")?])
}

fn cli_controls() -> Verdict {
    let dir = std::env::temp_dir().join(format!("hirzebruch-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let fixture = dir.join("corrupt.json");
    std::fs::write(&fixture, r#"{"corrupt":{"matrix":"mat11","row":1,"col":2,"value":"7"}}"#).map_err(|e| e.to_string())?;

    let (code, clean) = bin(&["selfcheck", "--seed", "42"]);
    check!(code == 0, "clean selfcheck exited {code}");
    let (_, again) = bin(&["selfcheck", "--seed", "42"]);
    check!(clean == again, "selfcheck output not reproducible");
    let (code, bad) = bin(&["selfcheck", "--seed", "42", "--fixture", fixture.to_str().unwrap()]);
    check!(code == 1, "corrupted fixture exited {code}");
    check!(bad.contains("matrix_inverses") && bad.contains("\"passed\":false"), "failure not reported: {bad}");

    let vertex = r#"{"e":1,"m":3,"k":0,"k_prime":0,"zeta":[["-1","1"],["1","1"]],"zeta_prime":[["1","1"],["-1","1"]]}"#;
    let (code, svg3) = bin(&["plot", "--params", vertex]);
    check!(code == 0, "plot exited {code}");
    check!(svg3 == bin(&["plot", "--params", vertex]).1, "plot not deterministic");
    let [x1, y1, x2, _] = wall_line(&svg3).ok_or("m=3 plot has no wall segment")?;
    check!(x1 == 80.0 && x2 == 80.0 && y1 == 560.0, "m=3 wall does not reach the origin: {x1},{y1}");

    let m1 = r#"{"e":1,"m":1,"k":0,"zeta":[["-1","0"],["-1","0"]]}"#;
    let (_, svg1) = bin(&["plot", "--params", m1]);
    let [_, y1, _, y2] = wall_line(&svg1).ok_or("m=1 plot has no wall segment")?;
    check!(y1 < 560.0 && y2 < 560.0, "m=1 wall touches the origin");
    let _ = std::fs::remove_dir_all(&dir);
    Ok("selfcheck clean=0 corrupted=1, vertex segment at origin, m=1 segment above it".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 Mukai master identity", mukai_master),
        ("2 matrix inverses", matrix_inverses),
        ("3 ch(gr(O_x)) = (0,0,0,1)", ch_of_gr),
        ("4 wall theorems", wall_theorems),
        ("5 m=4 support property", m4_support),
        ("6 subobject oracle and m=4 factorization", subobject_oracle),
        ("7 classification consistency", classification_consistency),
        ("8 CLI determinism and negative control", cli_controls),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let verdict = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match verdict {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
