mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use origami::cli::survey::{self, Family};
use origami::curves::{aut_type, CurveEnumeration, Monodromy};
use origami::group::{build_group, GroupSpec};
use origami::matcher::{match_in, MatchQuery, Verdict};
use origami::padic::pval;

#[test]
fn curve_counts_match_oracle_beyond_small_orders() {
    for spec in [GroupSpec::Alternating(5), GroupSpec::Psl2(7)] {
        let g = build_group(&spec).unwrap();
        let e = CurveEnumeration::run(&g).unwrap();
        assert_eq!(e.curves().len(), common::oracle_curve_count(&g), "{spec}");
    }
}

#[test]
fn automorphism_oracle_counts() {
    // |Aut S3| = 6, |Aut A4| = 24, |Aut A5| = 120, |Aut C8| = 4.
    for (spec, n) in [
        (GroupSpec::Symmetric(3), 6),
        (GroupSpec::Alternating(4), 24),
        (GroupSpec::Alternating(5), 120),
        (GroupSpec::Cyclic(8), 4),
    ] {
        assert_eq!(common::all_automorphisms(&build_group(&spec).unwrap()).len(), n, "{spec}");
    }
}

#[test]
fn invariants_constant_on_larger_groups() {
    for spec in [GroupSpec::Alternating(5), GroupSpec::Psl2(7)] {
        let g = build_group(&spec).unwrap();
        let e = CurveEnumeration::run(&g).unwrap();
        for (k, c) in e.curves().iter().enumerate() {
            let mut size = 0;
            for (a, b) in e.members(k) {
                assert_eq!(g.element_order(g.commutator(a, b)), c.ramification);
                assert_eq!(aut_type(&g, Monodromy::new(&g, a, b).unwrap()).unwrap(), c.aut_type);
                size += 1;
            }
            assert_eq!(size, c.orbit_size);
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let g = build_group(&GroupSpec::Psl2(7)).unwrap();
    let first: Vec<_> = CurveEnumeration::run(&g).unwrap().into_curves();
    let second: Vec<_> = CurveEnumeration::run(&g).unwrap().into_curves();
    assert_eq!(first, second);
}

#[test]
fn dihedral_and_tetrahedral_products_match_uniquely() {
    let mut specs = Vec::new();
    for n in [3, 5, 7] {
        for m in 1..=3 {
            specs.push(GroupSpec::product(GroupSpec::Dihedral(n), GroupSpec::Cyclic(m)));
        }
    }
    for m in 1..=4 {
        specs.push(GroupSpec::product(GroupSpec::Alternating(4), GroupSpec::Cyclic(m)));
    }
    for spec in specs {
        let g = build_group(&spec).unwrap();
        let e = CurveEnumeration::run(&g).unwrap();
        let curve = &e.curves()[0];
        for aut in [None, Some(curve.aut_type)] {
            let q = MatchQuery { group: spec.clone(), ramification: curve.ramification, aut_type: aut, automorphism_order: None };
            assert_eq!(match_in(&q, &g, &e).verdict, Verdict::Unique, "{spec}");
        }
    }
}

#[test]
fn survey_flags_groups_with_several_curves() {
    let families = [Family::C, Family::D, Family::A4, Family::S4, Family::A5];
    let first = survey::run(&families, 60, 12);
    assert_eq!(first, survey::run(&families, 60, 12));
    let flagged: Vec<String> = first.rows.iter().filter(|r| r.flagged).map(|r| r.group.to_string()).collect();
    assert_eq!(flagged, ["A5"]);
    assert!(first.partial);
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-10_000i64..10_000, 1i64..10_000, 0u32..5, 0u32..5).prop_filter_map("nonzero", |(n, d, e, f)| {
        (n != 0).then(|| BigRational::new(BigInt::from(n) * BigInt::from(3).pow(e), BigInt::from(d) * BigInt::from(3).pow(f)))
    })
}

proptest! {
    #[test]
    fn pval_is_a_valuation(x in rational(), y in rational(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let (vx, vy) = (pval(&x, p).unwrap(), pval(&y, p).unwrap());
        prop_assert_eq!(vx, common::naive_pval(&x, p));
        prop_assert_eq!(pval(&(&x * &y), p).unwrap(), vx + vy);
        prop_assert_eq!(pval(&(&x / &y), p).unwrap(), vx - vy);
        let sum = &x + &y;
        if !sum.is_zero() {
            let vs = pval(&sum, p).unwrap();
            prop_assert!(vs >= vx.min(vy));
            if vx != vy {
                prop_assert_eq!(vs, vx.min(vy));
            }
        }
    }
}
