use hyperlift_core::algebra::{FqCtx, QuadInt};
use hyperlift_core::curve::{automorphism_groups, HyperCurve};
use hyperlift_core::families::{
    allowed_f_words, build_family_polys, claim_summary, reduction_report, shaska_u_invariants,
    verify_paper_claims, ClaimVerdict, FWord, FamilyCase, Variant,
};
use hyperlift_core::groups::GroupType;
use hyperlift_core::poly::{ddf_profile, squarefree_decompose, CharZeroPoly};
use hyperlift_core::rules::hyperelliptic_liftable_group;
use hyperlift_core::BigInt;

fn int(v: i64) -> QuadInt {
    QuadInt::integer(v)
}

fn coeffs(f: &CharZeroPoly) -> Vec<(usize, QuadInt)> {
    f.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

fn terms(t: &[(usize, i64)]) -> Vec<(usize, QuadInt)> {
    let mut v: Vec<_> = t.iter().map(|&(i, c)| (i, int(c))).collect();
    v.sort_by_key(|x| x.0);
    v
}

#[test]
fn icosahedral_polynomials_as_published() {
    for lam in [2i64, -7, 11] {
        let p = build_family_polys(FamilyCase::A5, Variant::Stated, &[int(lam)]).unwrap();
        assert_eq!(
            coeffs(&p.r),
            terms(&[
                (30, 1),
                (25, 522),
                (20, -10005),
                (15, -10005),
                (5, -522),
                (0, 1)
            ])
        );
        assert_eq!(
            coeffs(&p.s),
            terms(&[(20, 1), (15, -228), (10, 494), (4, 228), (0, 1)])
        );
        assert_eq!(coeffs(&p.t), terms(&[(10, 1), (1, 10), (0, 1)]));
        let g = &p.gs[0];
        let want = [
            (60, lam - 1),
            (55, -36 * (19 * lam + 29)),
            (50, 6 * (26239 * lam - 42079)),
            (45, -540 * (23199 * lam - 19343)),
            (40, 105 * (737719 * lam - 953143)),
            (35, -72 * (1815127 * lam - 145087)),
            (30, -4 * (8302981 * lam + 49913771)),
            (25, 72 * (1815127 * lam - 145087)),
            (20, 105 * (737719 * lam - 953143)),
            (15, 540 * (23199 * lam - 19343)),
            (10, 6 * (26239 * lam - 42079)),
            (5, 36 * (19 * lam + 29)),
            (0, lam - 1),
        ];
        assert_eq!(coeffs(g), terms(&want));
        assert_eq!(p.l, g.clone());
    }
}

#[test]
fn tetrahedral_and_octahedral_polynomials_as_published() {
    let lam = 5i64;
    let a4 = build_family_polys(FamilyCase::A4, Variant::Stated, &[int(lam)]).unwrap();
    assert_eq!(
        coeffs(&a4.gs[0]),
        terms(&[
            (12, 1),
            (10, -lam),
            (8, -33),
            (6, 2 * lam),
            (4, -33),
            (2, -lam),
            (0, 1)
        ])
    );
    let r = &a4.r;
    assert_eq!(r.coeff(4), int(1));
    assert_eq!(r.coeff(2), QuadInt::new(0, 2, -3).unwrap());
    assert_eq!(r.coeff(0), int(1));
    assert_eq!(coeffs(&a4.s), terms(&[(8, 1), (4, 14), (0, 1)]));
    assert_eq!(coeffs(&a4.t), terms(&[(5, 1), (1, -1)]));

    let s4 = build_family_polys(FamilyCase::S4, Variant::Stated, &[int(lam)]).unwrap();
    assert_eq!(
        coeffs(&s4.gs[0]),
        terms(&[
            (24, 1),
            (20, lam),
            (16, 759 - 4 * lam),
            (12, 2 * (3 * lam + 1288)),
            (8, 759 - 4 * lam),
            (6, 2 * lam),
            (4, lam - 33),
            (0, 1),
        ])
    );
    assert_eq!(coeffs(&s4.r), terms(&[(12, 1), (8, -33), (4, -33), (0, 1)]));
    assert_eq!(coeffs(&s4.t), terms(&[(4, 1), (0, -1)]));
    // the x^6 term breaks the x^4 pattern of the other terms and is flagged
    assert!(!s4.notes().is_empty());
}

#[test]
fn mod_three_reductions() {
    let k = FqCtx::new(3, 1).unwrap();
    let a4 = build_family_polys(FamilyCase::A4, Variant::Stated, &[int(2)]).unwrap();
    let s = squarefree_decompose(&a4.s.reduce_mod_p(&k).unwrap()).unwrap();
    assert_eq!(s.to_string(), "(x^4+1)^2");
    // R mod 3 is x^4+1 itself, which splits into two quadratics over F_3
    let r =
        a4.r.reduce_mod_p(&a4.r.reduction_field(3).unwrap())
            .unwrap();
    assert_eq!(r.to_string(), "x^4+1");
    assert_eq!(ddf_profile(&r).unwrap(), [(2, 2)]);
    let t = squarefree_decompose(&a4.t.reduce_mod_p(&k).unwrap()).unwrap();
    assert!(t.is_squarefree());
}

#[test]
fn tetrahedral_words_at_three_match_the_published_list() {
    let rep = allowed_f_words(FamilyCase::A4, 3, Variant::Stated, &[int(2)]).unwrap();
    let names: Vec<String> = rep.computed.iter().map(FWord::to_string).collect();
    assert_eq!(names, ["L", "RL", "TL", "RTL"]);
    assert!(rep.agrees());
}

#[test]
fn octahedral_words_at_three() {
    let classical = allowed_f_words(FamilyCase::S4, 3, Variant::Classical, &[int(2)]).unwrap();
    assert!(classical.agrees());
    let stated = allowed_f_words(FamilyCase::S4, 3, Variant::Stated, &[int(2)]).unwrap();
    assert!(stated.computed.is_empty());
    assert_eq!(stated.only_paper.len(), 2);
}

#[test]
fn icosahedral_words_disagree_with_the_published_lists() {
    for v in [Variant::Stated, Variant::Classical] {
        let rep = allowed_f_words(FamilyCase::A5, 3, v, &[int(2)]).unwrap();
        assert!(rep.computed.is_empty(), "{v}");
        assert_eq!(rep.outside_case, ["T"]);
        assert!(!rep.agrees());
    }
    let rep = allowed_f_words(FamilyCase::A5, 5, Variant::Classical, &[int(2)]).unwrap();
    assert_eq!(rep.unparseable, ["RSG"]);
    assert!(rep.computed.is_empty());
}

#[test]
fn claim_verdicts() {
    let three = claim_summary(&verify_paper_claims(3).unwrap());
    assert!(
        three.iter().all(|(_, v)| *v == ClaimVerdict::Pass),
        "{three:?}"
    );
    let five = claim_summary(&verify_paper_claims(5).unwrap());
    let get = |prefix: &str| {
        five.iter()
            .find(|(n, _)| n.starts_with(prefix))
            .map(|(_, v)| *v)
            .unwrap()
    };
    assert_eq!(get("A5 R mod 5"), ClaimVerdict::Pass);
    assert_eq!(get("A5 S mod 5"), ClaimVerdict::VariantDependent);
    assert_eq!(get("A5 T mod 5"), ClaimVerdict::Fail);
    assert_eq!(get("A5 G_i mod 5"), ClaimVerdict::Fail);
}

#[test]
fn gl23_sextic_reduces_well_and_lifts() {
    let (u1, u2) = shaska_u_invariants(&BigInt::from(-5), &BigInt::from(-5));
    assert_eq!((u1, u2), (BigInt::from(-250), BigInt::from(50)));

    let f0 = CharZeroPoly::from_i64s(&[1, 0, -5, 0, -5, 0, 1]);
    let rep = reduction_report(&f0, 3).unwrap();
    assert!(rep.good_reduction);
    assert_eq!(rep.fbar.to_string(), "x^6+x^4+x^2+1");

    let curve = HyperCurve::new(rep.fbar.clone()).unwrap();
    let g = automorphism_groups(&curve, 12).unwrap();
    let (ty, v) = hyperelliptic_liftable_group(&g.full_table, 3, Some(2)).unwrap();
    assert_eq!(ty, GroupType::GL2_3);
    assert!(v.liftable);
}
