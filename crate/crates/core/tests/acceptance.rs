//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hyperlift_core::algebra::FqCtx;
use hyperlift_core::curve::{automorphism_groups, pgl_element_order, HyperCurve, Moebius};
use hyperlift_core::families::{
    find_result, shaska_u_invariants, verify_paper_claims, ClaimOutcome, Variant,
};
use hyperlift_core::groups::{
    cyclic_group, dihedral_group, elementary_abelian, identify, quaternion_group, reference_group,
    GroupType,
};
use hyperlift_core::poly::FqPoly;
use hyperlift_core::rules::{
    check_structure, consistency_checks, hyperelliptic_liftable, hyperelliptic_liftable_group,
    oort_status, OortStatus,
};
use hyperlift_core::BigInt;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let e = t.elapsed();
    check(e < limit, format!("{what} took {e:?}, limit {limit:?}"))
}

fn gl23_curve() -> HyperCurve {
    let k = FqCtx::new(3, 1).unwrap();
    HyperCurve::new(FqPoly::from_u64s(&k, &[1, 0, 1, 0, 1, 0, 1])).unwrap()
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let curve = gl23_curve();
    let groups = automorphism_groups(&curve, 24).map_err(|e| e.to_string())?;
    let (ty, verdict) = hyperelliptic_liftable_group(&groups.full_table, 3, Some(curve.genus()))
        .map_err(|e| e.to_string())?;
    check(
        groups.full.order() == 48,
        format!("|G| = {}", groups.full.order()),
    )?;
    check(ty == GroupType::GL2_3, format!("identified as {ty}"))?;
    check(verdict.liftable, "not liftable")?;
    check(
        verdict.oort == Some(OortStatus::Oort),
        format!("oort {:?}", verdict.oort),
    )?;
    within(t, Duration::from_secs(60), "autgroup")?;
    Ok(format!(
        "|G| = 48, GL2(3), liftable, OORT in {:?}",
        t.elapsed()
    ))
}

fn criterion_2() -> Outcome {
    let (u1, u2) = shaska_u_invariants(&BigInt::from(-5), &BigInt::from(-5));
    check(
        u1 == BigInt::from(-250) && u2 == BigInt::from(50),
        format!("got ({u1}, {u2})"),
    )?;
    Ok("(-5, -5) -> (-250, 50)".into())
}

fn claim_status(
    res: &[hyperlift_core::families::ClaimResult],
    claim: &str,
    v: Variant,
) -> Result<ClaimOutcome, String> {
    find_result(res, claim, v)
        .map(|r| r.status)
        .ok_or_else(|| format!("claim `{claim}` missing"))
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let res = verify_paper_claims(3).map_err(|e| e.to_string())?;
    let claims = [
        "A4 S mod 3 = (x^4+1)^2",
        "S4 R mod 3 = (x^4+1)^3",
        "S4 S mod 3 = (x^4+1)^2",
        "A5 R mod 3 = (x^10+1)^3",
        "A5 S mod 3 = (x^10+1)^2",
        "A5 T mod 3 squarefree",
    ];
    for c in claims {
        for v in Variant::ALL {
            let s = claim_status(&res, c, v)?;
            check(s == ClaimOutcome::Pass, format!("{c} ({v}) is {s}"))?;
        }
    }
    within(t, Duration::from_secs(5), "mod 3 corpus")?;
    Ok(format!("{} claims pass under both variants", claims.len()))
}

fn criterion_4() -> Outcome {
    let res = verify_paper_claims(5).map_err(|e| e.to_string())?;
    let mut problems = Vec::new();
    for c in [
        "A5 R mod 5 = (x+2)^5(x-2)^25",
        "A5 S mod 5 = (x^2+x-1)^10",
        "A5 G_i mod 5 = (lambda-1)(x^2+x-1)^30",
    ] {
        let r = find_result(&res, c, Variant::Classical).ok_or(format!("{c} missing"))?;
        if r.status != ClaimOutcome::Pass {
            problems.push(format!("{c} (classical) fails: {}", r.detail));
        }
    }
    let t_claim = "A5 T mod 5 = (x^2-1)^5";
    for v in Variant::ALL {
        let r = find_result(&res, t_claim, v).ok_or("T claim missing")?;
        if r.status != ClaimOutcome::Fail || !r.detail.starts_with("computed ") {
            problems.push(format!(
                "T claim ({v}) not reported as a failure with factorization"
            ));
        }
    }
    if problems.is_empty() {
        Ok("R, S, G_i pass (classical); T discrepancy reported for both variants".into())
    } else {
        Err(problems.join(" | "))
    }
}

fn criterion_5() -> Outcome {
    for p in [3u64, 5, 7, 11, 13] {
        let t = Instant::now();
        let k = FqCtx::new(p, 1).unwrap();
        let h = Moebius::from_i64s(&k, [3, -1, 1, 1]).map_err(|e| e.to_string())?;
        let n = pgl_element_order(&h);
        check(n == p as usize, format!("order {n} at p = {p}"))?;
        within(t, Duration::from_secs(1), "order computation")?;
    }
    Ok("[[3,-1],[1,1]] has order p for p = 3, 5, 7, 11, 13".into())
}

fn liftable_pairs() -> Vec<(GroupType, u64)> {
    use GroupType::*;
    let mut v = Vec::new();
    for p in [3u64, 5, 7] {
        v.push((Cyclic(2 * p as usize), p));
        v.push((Dihedral(2 * p as usize), p));
    }
    v.extend([
        (GroupType::z2(A5), 5),
        (SL2_5, 5),
        (GroupType::z2(A4), 3),
        (GroupType::z2(S4), 3),
        (GroupType::z2(A5), 3),
        (SL2_3, 3),
        (GL2_3, 3),
    ]);
    v
}

fn criterion_6() -> Outcome {
    use GroupType::*;
    for (t, p) in liftable_pairs() {
        let v = hyperelliptic_liftable(&t, p).map_err(|e| e.to_string())?;
        check(v.liftable, format!("{t} at p = {p} not liftable"))?;
        if t.order() % p as usize == 0 {
            let c = consistency_checks(&v, t.order(), p, None);
            for name in ["p_divides_order", "p_squared_not_dividing_order"] {
                let e = c.get(name).ok_or(format!("{name} missing"))?;
                check(e.passed, format!("{t} at p = {p}: {name} fails"))?;
            }
        }
    }
    let negatives = [
        (W2, 3),
        (W3, 3),
        (Vn(6), 3),
        (Hn(6), 3),
        (Un(6), 3),
        (Gn(6), 3),
        (Vn(10), 5),
        (Hn(10), 5),
        (Un(10), 5),
        (Gn(10), 5),
        (GroupType::z2(Dihedral(6)), 3),
        (GroupType::z2(Dihedral(10)), 5),
    ];
    for &(ref t, p) in &negatives {
        check(
            t.order() % p as usize == 0,
            format!("{t}: p = {p} does not divide the order"),
        )?;
        let v = hyperelliptic_liftable(t, p).map_err(|e| e.to_string())?;
        check(!v.liftable, format!("{t} at p = {p} reported liftable"))?;
    }
    Ok(format!(
        "{} liftable pairs (9 shapes) and {} non-liftable groups",
        liftable_pairs().len(),
        negatives.len()
    ))
}

fn criterion_7() -> Outcome {
    let st = |g, p| oort_status(&g, p).map_err(|e| e.to_string());
    check(
        st(quaternion_group().unwrap(), 2)? == OortStatus::NotOort,
        "Q8 at 2",
    )?;
    for p in [3usize, 5] {
        let e = elementary_abelian(p, 2).unwrap();
        check(
            st(e, p as u64)? == OortStatus::NotOort,
            format!("(Z/{p})^2 at {p}"),
        )?;
    }
    for n in [1usize, 2, 6, 9, 12, 25] {
        for p in [2u64, 3, 5, 7] {
            check(
                st(cyclic_group(n).unwrap(), p)? == OortStatus::Oort,
                format!("Z({n}) at {p}"),
            )?;
        }
    }
    for p in [3usize, 5, 7] {
        check(
            st(dihedral_group(p).unwrap(), p as u64)? == OortStatus::Oort,
            format!("D({p}) at {p}"),
        )?;
    }
    for (n, p) in [(9usize, 3u64), (18, 3), (25, 5)] {
        check(
            st(dihedral_group(n).unwrap(), p)? == OortStatus::ConjecturalDpn,
            format!("D({n}) at {p}"),
        )?;
    }
    Ok("Q8, (Z/p)^2 not Oort; cyclic and D(p) Oort; D(p^2) conjectural".into())
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    for (t, p) in liftable_pairs() {
        let g = reference_group(&t).map_err(|e| e.to_string())?;
        let s = oort_status(&g, p).map_err(|e| e.to_string())?;
        if s != OortStatus::Oort {
            bad.push(format!("{t} at p = {p} is {s}"));
        }
    }
    if bad.is_empty() {
        Ok("every liftable group is an Oort group".into())
    } else {
        Err(bad.join(", "))
    }
}

/// The 50 sextics of criterion 9, drawn with a fixed seed.
fn random_sextics() -> Vec<HyperCurve> {
    let k = FqCtx::new(7, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut out = Vec::new();
    while out.len() < 50 {
        let mut c: Vec<u64> = (0..7).map(|_| rng.gen_range(0..7)).collect();
        c[6] = rng.gen_range(1..7);
        if let Ok(curve) = HyperCurve::new(FqPoly::from_u64s(&k, &c)) {
            out.push(curve);
        }
    }
    out
}

fn criterion_9() -> Outcome {
    let t = Instant::now();
    let mut orders = std::collections::BTreeMap::new();
    for curve in random_sextics() {
        let g = automorphism_groups(&curve, 24).map_err(|e| e.to_string())?;
        let n = g.full.order();
        check(n % 7 != 0, format!("|G| = {n} for y^2 = {}", curve.f()))?;
        *orders.entry(n).or_insert(0usize) += 1;
    }
    within(t, Duration::from_secs(600), "50 sextics")?;
    Ok(format!("50 sextics over F_7, group orders {orders:?}"))
}

fn criterion_10() -> Outcome {
    let mut curves = vec![gl23_curve()];
    let extra: [(u64, &[i64]); 5] = [
        (7, &[0, -1, 0, 0, 0, 1]),
        (7, &[-1, 0, 0, 0, 0, 0, 1]),
        (5, &[1, 0, 0, 0, 0, 0, 1]),
        (11, &[0, 1, 0, 0, 0, 1]),
        (13, &[1, 0, 0, 3, 0, 0, 1]),
    ];
    for (p, f) in extra {
        let k = FqCtx::new(p, 1).unwrap();
        curves.push(HyperCurve::new(FqPoly::from_i64s(&k, f)).map_err(|e| e.to_string())?);
    }
    curves.extend(random_sextics());
    let mut seen = std::collections::BTreeSet::new();
    for curve in &curves {
        let g = automorphism_groups(curve, 24).map_err(|e| e.to_string())?;
        let s =
            check_structure(&g.reduced_table, &g.full_table, g.sigma).map_err(|e| e.to_string())?;
        check(
            s.all_passed(),
            format!("y^2 = {} over F_{}: {s:?}", curve.f(), curve.ctx().p()),
        )?;
        check(
            identify(&g.full_table) == s.full_type,
            "identify is not deterministic",
        )?;
        seen.insert(format!("{}/{}", s.full_type, s.reduced_type));
    }
    Ok(format!("{} curves, group pairs {:?}", curves.len(), seen))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("GL2(3) example curve end to end", criterion_1),
        ("u-invariants", criterion_2),
        ("mod 3 claim corpus", criterion_3),
        ("mod 5 claim corpus", criterion_4),
        ("order p Moebius map", criterion_5),
        ("liftability decision table", criterion_6),
        ("Oort suite", criterion_7),
        ("liftable groups are Oort groups", criterion_8),
        ("large p sextics over F_7", criterion_9),
        ("structural invariants", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
