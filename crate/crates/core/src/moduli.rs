//! Moduli of `σ`-semistable objects of class `[𝒪_x]`.
//!
//! The verdict depends only on the sign of the perversity and on which
//! components have vanishing `per_i`.

use serde::{Deserialize, Serialize};

use crate::arith::Sign;
use crate::gluing::{perversity, skyscraper_jh, GluingParams, PerClass};
use crate::ktheory::NamedObject;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModuliSpace {
    #[serde(rename = "SigmaE_fine")]
    SigmaEFine,
    #[serde(rename = "P1_coarse")]
    P1Coarse,
    Point,
    Empty,
}

/// Which families of objects are semistable: skyscrapers `S_p`, fiber
/// extensions `S_f`, and the line-bundle extensions `S_l`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Catalog {
    pub s_p: bool,
    pub s_f: bool,
    pub s_l: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SEquivRule {
    ByPoint,
    ByFiber,
    AllEquivalent,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliVerdict {
    pub space: ModuliSpace,
    pub semistable_catalog: Catalog,
    pub gr_factors: Vec<NamedObject>,
    pub s_equiv_rule: SEquivRule,
}

pub fn classify(g: &GluingParams) -> ModuliVerdict {
    let per = perversity(g);
    let zero1 = per.per1 == PerClass::Zero;
    let zero2 = per.per2 == PerClass::Zero;
    let (space, semistable_catalog, s_equiv_rule) = match per.per_sign {
        Sign::Positive => (ModuliSpace::SigmaEFine, Catalog { s_p: true, ..Catalog::default() }, SEquivRule::ByPoint),
        Sign::Zero if zero1 && zero2 => {
            (ModuliSpace::Point, Catalog { s_p: true, s_f: true, s_l: true }, SEquivRule::AllEquivalent)
        }
        Sign::Zero => (ModuliSpace::P1Coarse, Catalog { s_p: true, s_f: true, s_l: zero1 || zero2 }, SEquivRule::ByFiber),
        Sign::Negative => (ModuliSpace::Empty, Catalog::default(), SEquivRule::NotApplicable),
    };
    let gr_factors = match space {
        ModuliSpace::Empty => Vec::new(),
        _ => skyscraper_jh(g).factors,
    };
    ModuliVerdict { space, semistable_catalog, gr_factors, s_equiv_rule }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::HalfPlanePoint;
    use crate::gluing::ComponentStability;
    use crate::ktheory::Surface;

    fn hp(re: i64, im: i64) -> HalfPlanePoint {
        HalfPlanePoint::from_ints(re, im).unwrap()
    }

    fn type3(z: [(i64, i64); 4]) -> GluingParams {
        GluingParams::new(
            Surface::new(1).unwrap(),
            ComponentStability::quiver(0, hp(z[0].0, z[0].1), hp(z[1].0, z[1].1)),
            ComponentStability::quiver(0, hp(z[2].0, z[2].1), hp(z[3].0, z[3].1)),
        )
    }

    #[test]
    fn standard_pair_is_coarse_p1() {
        let v = classify(&GluingParams::standard_pair(Surface::new(2).unwrap()));
        assert_eq!(v.space, ModuliSpace::P1Coarse);
        assert_eq!(v.s_equiv_rule, SEquivRule::ByFiber);
        assert_eq!(v.semistable_catalog, Catalog { s_p: true, s_f: true, s_l: false });
        assert_eq!(v.gr_factors, vec![NamedObject::FiberStructure, NamedObject::FiberTwist]);
    }

    #[test]
    fn degenerate_type3_is_a_point() {
        let v = classify(&type3([(-1, 0), (-2, 0), (-1, 0), (-5, 0)]));
        assert_eq!((v.space, v.s_equiv_rule), (ModuliSpace::Point, SEquivRule::AllEquivalent));
        assert_eq!(v.gr_factors.len(), 4);
    }

    #[test]
    fn negative_perversity_is_empty() {
        let v = classify(&type3([(0, 1), (0, 1), (-1, 1), (-1, 1)]));
        assert_eq!(v.space, ModuliSpace::Empty);
        assert_eq!(v.semistable_catalog, Catalog::default());
        assert!(v.gr_factors.is_empty());
    }

    #[test]
    fn positive_perversity_is_fine() {
        let v = classify(&type3([(-1, 1), (-1, 1), (0, 1), (0, 1)]));
        assert_eq!(v.space, ModuliSpace::SigmaEFine);
        assert_eq!(v.gr_factors, vec![NamedObject::SkyscraperPoint]);
    }

    #[test]
    fn mixed_wall_flags_line_bundle_family() {
        let g = GluingParams::new(
            Surface::new(0).unwrap(),
            ComponentStability::Standard,
            ComponentStability::quiver(1, hp(-1, 0), hp(-3, 0)),
        );
        let v = classify(&g);
        assert_eq!(v.space, ModuliSpace::P1Coarse);
        assert!(v.semistable_catalog.s_l);
        let js = serde_json::to_value(&v).unwrap();
        assert_eq!(js["space"], "P1_coarse");
    }
}
