use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hyperlift_core::algebra::{FqCtx, FqElem, QuadInt};
use hyperlift_core::curve::{Moebius, P1Point};
use hyperlift_core::families::{build_family_polys, reduction_report, FWord, FamilyCase, Variant};
use hyperlift_core::groups::{
    cyclic_group, dihedral_group, identify, is_isomorphic, FiniteGroup, GroupType,
};
use hyperlift_core::poly::{squarefree_decompose, CharZeroPoly, FqPoly};

const FIELDS: [(u64, usize); 6] = [(2, 3), (3, 1), (3, 2), (5, 2), (7, 1), (13, 1)];

fn field() -> impl Strategy<Value = FqCtx> {
    prop::sample::select(&FIELDS[..]).prop_map(|(p, m)| FqCtx::new(p, m).unwrap())
}

fn elem(k: &FqCtx, i: u128) -> FqElem {
    k.from_index(i % k.order())
}

fn poly(k: &FqCtx, idx: &[u128]) -> FqPoly {
    FqPoly::from_coeffs(k, idx.iter().map(|&i| elem(k, i)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms(k in field(), a in any::<u128>(), b in any::<u128>(), c in any::<u128>()) {
        let (a, b, c) = (elem(&k, a), elem(&k, b), elem(&k, c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        if let Some(i) = a.inv() {
            prop_assert!((&a * &i).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        prop_assert_eq!(a.pow(k.order()), a.clone());
        let mut f = a.clone();
        for _ in 0..k.m() {
            f = f.frobenius();
        }
        prop_assert_eq!(f, a.clone());
    }

    #[test]
    fn square_roots(k in field(), a in any::<u128>()) {
        let a = elem(&k, a);
        let sq = &a * &a;
        prop_assert!(sq.is_square());
        let (r, s) = sq.sqrt().unwrap();
        prop_assert_eq!(&r * &r, sq.clone());
        prop_assert_eq!(&s * &s, sq);
    }

    #[test]
    fn division_and_gcd(
        k in field(),
        a in prop::collection::vec(any::<u128>(), 1..9),
        b in prop::collection::vec(any::<u128>(), 1..6),
    ) {
        let (f, d) = (poly(&k, &a), poly(&k, &b));
        prop_assume!(!d.is_zero());
        let (q, r) = f.div_rem(&d);
        prop_assert_eq!(&(&q * &d) + &r, f.clone());
        prop_assert!(r.is_zero() || r.degree() < d.degree());
        let g = FqPoly::gcd(&f, &d);
        prop_assert!(f.rem(&g).is_zero());
        prop_assert!(d.rem(&g).is_zero());
        if !f.is_zero() {
            prop_assert_eq!(
                (&f * &d).degree(),
                Some(f.degree().unwrap() + d.degree().unwrap())
            );
        }
        prop_assert_eq!((&f * &d).derivative(), &(&f.derivative() * &d) + &(&f * &d.derivative()));
    }

    #[test]
    fn squarefree_decomposition_recombines(
        k in field(),
        a in prop::collection::vec(any::<u128>(), 2..5),
        b in prop::collection::vec(any::<u128>(), 2..4),
        e in 1u64..5,
    ) {
        let f = &poly(&k, &a) * &poly(&k, &b).pow(e);
        prop_assume!(f.degree().is_some_and(|d| d > 0));
        let sf = squarefree_decompose(&f).unwrap();
        prop_assert_eq!(sf.expand(), f.clone());
        for (i, (g, _)) in sf.factors.iter().enumerate() {
            prop_assert!(g.is_squarefree());
            prop_assert!(g.is_monic());
            for (h, _) in &sf.factors[i + 1..] {
                prop_assert!(FqPoly::gcd(g, h).is_one());
            }
        }
        prop_assert_eq!(sf.is_squarefree(), f.is_squarefree());
    }

    #[test]
    fn moebius_action_is_a_group_action(
        k in field(),
        m1 in prop::array::uniform4(any::<u128>()),
        m2 in prop::array::uniform4(any::<u128>()),
        x in any::<u128>(),
    ) {
        let mk = |m: [u128; 4]| Moebius::new(elem(&k, m[0]), elem(&k, m[1]), elem(&k, m[2]), elem(&k, m[3]));
        let (Ok(g), Ok(h)) = (mk(m1), mk(m2)) else {
            return Ok(());
        };
        let pts = [P1Point::Affine(elem(&k, x)), P1Point::Infinity];
        for pt in &pts {
            prop_assert_eq!(g.compose(&h).apply(pt), g.apply(&h.apply(pt)));
            prop_assert_eq!(g.inverse().apply(&g.apply(pt)), pt.clone());
        }
        let n = g.order();
        let mut pw = Moebius::identity(&k);
        for _ in 0..n {
            pw = pw.compose(&g);
        }
        prop_assert!(pw.is_identity());
        let (gh, lambda) = g.compose_scaled(&h);
        prop_assert_eq!(gh, g.compose(&h));
        prop_assert!(!lambda.is_zero());
    }

    #[test]
    fn triples_determine_maps(k in field(), m in prop::array::uniform4(any::<u128>())) {
        let Ok(h) = Moebius::new(elem(&k, m[0]), elem(&k, m[1]), elem(&k, m[2]), elem(&k, m[3])) else {
            return Ok(());
        };
        let src = [P1Point::Infinity, P1Point::Affine(k.zero()), P1Point::Affine(k.one())];
        let dst: Vec<P1Point> = src.iter().map(|p| h.apply(p)).collect();
        let back = Moebius::from_triples([&src[0], &src[1], &src[2]], [&dst[0], &dst[1], &dst[2]]);
        prop_assert_eq!(back, Some(h));
    }

    #[test]
    fn reduction_is_a_ring_homomorphism(
        p in prop::sample::select(vec![3u64, 5, 7, 11]),
        a in prop::collection::vec(-50i64..50, 1..6),
        b in prop::collection::vec(-50i64..50, 1..6),
    ) {
        let k = FqCtx::new(p, 1).unwrap();
        let (f, g) = (CharZeroPoly::from_i64s(&a), CharZeroPoly::from_i64s(&b));
        let red = |h: &CharZeroPoly| h.reduce_mod_p(&k).unwrap();
        prop_assert_eq!(red(&(&f * &g)), &red(&f) * &red(&g));
        prop_assert_eq!(red(&(&f + &g)), &red(&f) + &red(&g));
    }

    #[test]
    fn quadratic_lambdas_reduce_consistently(
        a in -20i64..20, b in -20i64..20, c in -20i64..20, e in -20i64..20,
    ) {
        // sqrt(-3) exists mod 7 and mod 13
        for p in [7u64, 13] {
            let k = FqCtx::new(p, 1).unwrap();
            let x = QuadInt::new(a, b, -3).unwrap();
            let y = QuadInt::new(c, e, -3).unwrap();
            let r = |q: &QuadInt| hyperlift_core::algebra::quad_reduce_mod_p(q, &k).unwrap();
            prop_assert_eq!(r(&(&x * &y)), &r(&x) * &r(&y));
            prop_assert_eq!(r(&(&x + &y)), &r(&x) + &r(&y));
        }
    }

    #[test]
    fn word_names_round_trip(r: bool, s: bool, t: bool, l: bool, shuffle in any::<u64>()) {
        prop_assume!(r || s || t || l);
        let w = FWord { r, s, t, l };
        let name = w.to_string();
        prop_assert_eq!(name.parse::<FWord>().unwrap(), w);
        let mut letters: Vec<char> = name.chars().collect();
        let n = letters.len();
        letters.rotate_left((shuffle as usize) % n);
        prop_assert_eq!(letters.iter().collect::<String>().parse::<FWord>().unwrap(), w);
    }

    #[test]
    fn cyclic_and_dihedral_survive_relabeling(n in 2usize..24, dihedral: bool, seed in any::<u64>()) {
        let g = if dihedral { dihedral_group(n).unwrap() } else { cyclic_group(n).unwrap() };
        let m = g.order();
        let mut perm: Vec<usize> = (0..m).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let mut inv = vec![0; m];
        for (i, &j) in perm.iter().enumerate() {
            inv[j] = i;
        }
        let table: Vec<u16> = (0..m * m)
            .map(|ij| perm[g.mul(inv[ij / m], inv[ij % m])] as u16)
            .collect();
        let h = FiniteGroup::from_table(m, table).unwrap();
        prop_assert!(is_isomorphic(&g, &h).is_some());
        let want = if dihedral { GroupType::Dihedral(n) } else { GroupType::Cyclic(n) };
        prop_assert_eq!(identify(&h).canonical(), want.canonical());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// Degree additivity of the family words, and the reduction invariants.
    #[test]
    fn family_words_and_reductions(
        case in prop::sample::select(vec![FamilyCase::A4, FamilyCase::S4, FamilyCase::A5]),
        variant in prop::sample::select(vec![Variant::Stated, Variant::Classical]),
        lambda in prop::sample::select(vec![2i64, 3, -1, 7]),
        p in prop::sample::select(vec![3u64, 5, 7]),
    ) {
        let polys = build_family_polys(case, variant, &[QuadInt::integer(lambda)]).unwrap();
        let deg = |f: &CharZeroPoly| f.degree().unwrap();
        for w in case.words() {
            let f = polys.product(w);
            let mut want = 0;
            if w.r { want += deg(&polys.r); }
            if w.s { want += deg(&polys.s); }
            if w.t { want += deg(&polys.t); }
            if w.l { want += polys.gs.iter().map(deg).sum::<usize>(); }
            prop_assert_eq!(deg(&f), want);
            let Ok(rep) = reduction_report(&f, p) else { continue };
            prop_assert_eq!(rep.factored.expand(), rep.fbar.clone());
            prop_assert!(rep.residual_branch_points <= rep.branch_points);
            prop_assert!(rep.residual_genus <= rep.genus);
            if rep.good_reduction {
                prop_assert_eq!(rep.residual_genus, rep.genus);
                prop_assert!(rep.fbar.is_squarefree());
            }
        }
    }
}
