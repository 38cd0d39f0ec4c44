use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use hyperlift_core::algebra::QuadInt;
use hyperlift_core::curve::{automorphism_groups, HyperCurve, P1Point};
use hyperlift_core::families::{
    allowed_f_words, build_f, build_family_polys, claim_form, claim_summary, claims_for,
    cyclic_curve_equation, reduction_report, shaska_u_invariants, verify_paper_claims, ClaimMatch,
    ClaimStatus, CyclicKind, Expect, FWord, FamilyCase, FamilySpec, ReductionReport, Target,
    Variant, Z2pShape,
};
use hyperlift_core::groups::GroupType;
use hyperlift_core::poly::CharZeroPoly;
use hyperlift_core::rules::{
    check_structure, consistency_checks, hyperelliptic_liftable, hyperelliptic_liftable_group,
    large_p_verdict, oort_status, LiftFlags,
};

use crate::args::{
    Cli, Command, CurveArgs, FamilyArgs, LiftArgs, OortArgs, ReduceArgs, VerifyArgs,
};
use crate::dto::{
    checks, tool, yes_no, CheckDto, FactoredDto, PolyDto, StructureDto, Tool, VerdictDto,
};
use crate::parse::{
    parse_abstract_group, parse_bigint, parse_curve, parse_int_list, parse_lambdas, CurvePayload,
};
use crate::{CliError, CliResult, Rendered};

pub(crate) fn dispatch(cli: &Cli) -> CliResult<Rendered> {
    match &cli.command {
        Command::Autgroup(a) => autgroup(a, cli.max_ext),
        Command::Liftable(a) => liftable(a),
        Command::Oort(a) => oort(a),
        Command::Reduce(a) => reduce(a),
        Command::Families(a) => families(a),
        Command::VerifyPaper(a) => verify_paper(a),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn field_name(p: u64, m: usize) -> String {
    if m == 1 {
        format!("F_{p}")
    } else {
        format!("F_{p}^{m}")
    }
}

#[derive(Serialize)]
struct CurveRequest {
    subcommand: &'static str,
    p: u64,
    m: usize,
    f: Vec<String>,
    max_ext: usize,
}

#[derive(Serialize)]
struct CurveDto {
    f: PolyDto,
    genus: usize,
}

#[derive(Serialize)]
struct LocusDto {
    field: String,
    /// Minimal polynomial of the generator `t`, lowest degree first.
    modulus: Vec<u64>,
    points: Vec<String>,
}

#[derive(Serialize)]
struct GroupDto {
    order: usize,
    #[serde(rename = "type")]
    kind: String,
}

#[derive(Serialize)]
struct AutgroupReport {
    tool: Tool,
    request: CurveRequest,
    curve: CurveDto,
    branch_locus: LocusDto,
    reduced: GroupDto,
    order: usize,
    #[serde(rename = "type")]
    kind: String,
    /// Whether the lifts needed a quadratic extension of the locus field.
    extended_field: bool,
    liftable: &'static str,
    rule: String,
    oort: Option<&'static str>,
    flags: crate::dto::FlagsDto,
    consistency: Vec<CheckDto>,
    structure: StructureDto,
}

fn point_str(pt: &P1Point) -> String {
    pt.to_string()
}

fn autgroup(a: &CurveArgs, max_ext: usize) -> CliResult<Rendered> {
    let payload = match (&a.curve, a.p, &a.f) {
        (Some(json), _, _) => CurvePayload::from_json(json)?,
        (None, Some(p), Some(f)) => CurvePayload {
            p,
            m: a.m.unwrap_or(1),
            f: parse_int_list(f)?,
        },
        _ => return Err(usage("autgroup needs --p and --f, or --curve")),
    };
    let curve: HyperCurve = parse_curve(&payload)?;
    let groups = automorphism_groups(&curve, max_ext)?;
    let genus = curve.genus();
    let structure = check_structure(&groups.reduced_table, &groups.full_table, groups.sigma)?;
    let (full_type, verdict) =
        hyperelliptic_liftable_group(&groups.full_table, payload.p, Some(genus))?;
    let consistency =
        consistency_checks(&verdict, groups.full_table.order(), payload.p, Some(genus));
    let locus = &groups.reduced.locus;
    let report = AutgroupReport {
        tool: tool(),
        request: CurveRequest {
            subcommand: "autgroup",
            p: payload.p,
            m: payload.m,
            f: strings(&payload.f),
            max_ext,
        },
        curve: CurveDto {
            f: curve.f().into(),
            genus,
        },
        branch_locus: LocusDto {
            field: field_name(locus.field.p(), locus.field.m()),
            modulus: locus.field.modulus().to_vec(),
            points: locus.points.iter().map(point_str).collect(),
        },
        reduced: GroupDto {
            order: groups.reduced.order(),
            kind: structure.reduced_type.to_string(),
        },
        order: groups.full.order(),
        kind: full_type.to_string(),
        extended_field: groups.full.extended,
        liftable: yes_no(verdict.liftable),
        rule: verdict.rule.clone(),
        oort: verdict.oort.map(|o| o.as_str()),
        flags: (&verdict.flags).into(),
        consistency: checks(&consistency),
        structure: (&structure).into(),
    };
    let mut text = String::new();
    writeln!(
        text,
        "curve     y^2 = {} over {}",
        curve.f(),
        field_name(payload.p, payload.m)
    )
    .ok();
    writeln!(text, "genus     {genus}").ok();
    writeln!(
        text,
        "locus     {} points over {}",
        locus.points.len(),
        report.branch_locus.field
    )
    .ok();
    writeln!(
        text,
        "reduced   |H| = {} ({})",
        report.reduced.order, report.reduced.kind
    )
    .ok();
    writeln!(text, "full      |G| = {} ({})", report.order, report.kind).ok();
    writeln!(text, "liftable  {} [{}]", report.liftable, report.rule).ok();
    writeln!(text, "oort      {}", report.oort.unwrap_or("unknown")).ok();
    for c in &report.consistency {
        writeln!(text, "check     {:<30} {}", c.name, pass_word(c.passed)).ok();
    }
    writeln!(text, "structure {}", pass_word(structure.all_passed())).ok();
    Ok(Rendered::new(&report, text))
}

fn pass_word(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

#[derive(Serialize)]
struct LiftReport {
    tool: Tool,
    subcommand: &'static str,
    group: Option<String>,
    order: usize,
    p: u64,
    genus: Option<usize>,
    #[serde(flatten)]
    verdict: VerdictDto,
    consistency: Vec<CheckDto>,
}

fn liftable(a: &LiftArgs) -> CliResult<Rendered> {
    let (group, order, verdict) = match (&a.group, a.order) {
        (Some(g), _) => {
            let t: GroupType = g.parse()?;
            let mut v = hyperelliptic_liftable(&t, a.p)?;
            v.flags = LiftFlags::new(t.order(), a.p, a.g);
            (Some(t.to_string()), t.order(), v)
        }
        (None, Some(order)) => {
            let g = a.g.ok_or_else(|| usage("--order needs --g"))?;
            (None, order, large_p_verdict(g, a.p, order)?)
        }
        (None, None) => return Err(usage("liftable needs --group, or --order with --g")),
    };
    let consistency = consistency_checks(&verdict, order, a.p, a.g);
    let report = LiftReport {
        tool: tool(),
        subcommand: "liftable",
        group,
        order,
        p: a.p,
        genus: a.g,
        verdict: (&verdict).into(),
        consistency: checks(&consistency),
    };
    let mut text = String::new();
    writeln!(
        text,
        "group     {} (order {order}), p = {}",
        report.group.as_deref().unwrap_or("?"),
        a.p
    )
    .ok();
    writeln!(
        text,
        "liftable  {} [{}]",
        report.verdict.liftable, report.verdict.rule
    )
    .ok();
    writeln!(
        text,
        "oort      {}",
        report.verdict.oort.unwrap_or("unknown")
    )
    .ok();
    for c in &report.consistency {
        writeln!(text, "check     {:<30} {}", c.name, pass_word(c.passed)).ok();
    }
    Ok(Rendered::new(&report, text))
}

#[derive(Serialize)]
struct OortReport {
    tool: Tool,
    subcommand: &'static str,
    group: String,
    order: usize,
    p: u64,
    oort: &'static str,
}

fn oort(a: &OortArgs) -> CliResult<Rendered> {
    let (name, g) = parse_abstract_group(&a.group)?;
    if !hyperlift_core::algebra::is_prime(a.p) {
        return Err(hyperlift_core::Error::NotPrime(a.p).into());
    }
    let status = oort_status(&g, a.p)?;
    let report = OortReport {
        tool: tool(),
        subcommand: "oort",
        group: name,
        order: g.order(),
        p: a.p,
        oort: status.as_str(),
    };
    let text = format!(
        "{} (order {}) at p = {}: {}\n",
        report.group, report.order, a.p, report.oort
    );
    Ok(Rendered::new(&report, text))
}

#[derive(Serialize)]
struct ClaimMatchDto {
    claim: String,
    status: &'static str,
}

#[derive(Serialize)]
struct ReduceReport {
    tool: Tool,
    subcommand: &'static str,
    source: String,
    f: PolyDto,
    p: u64,
    field: String,
    fbar: PolyDto,
    factored: FactoredDto,
    genus: usize,
    residual_genus: usize,
    branch_points: usize,
    residual_branch_points: usize,
    good_reduction: bool,
    claim_matches: Vec<ClaimMatchDto>,
}

fn single_target(w: FWord) -> Option<Target> {
    match (w.r, w.s, w.t, w.l) {
        (true, false, false, false) => Some(Target::R),
        (false, true, false, false) => Some(Target::S),
        (false, false, true, false) => Some(Target::T),
        (false, false, false, true) => Some(Target::G),
        _ => None,
    }
}

fn attach_claims(rep: &mut ReductionReport, case: FamilyCase, w: FWord, lambdas: &[QuadInt]) {
    let target = single_target(w).filter(|t| *t != Target::G || lambdas.len() == 1);
    let lambda = lambdas[0].is_integer().then(|| lambdas[0].a().clone());
    let found = target
        .map(|t| claims_for(case, t, rep.p))
        .unwrap_or_default();
    if found.is_empty() {
        rep.note_unclaimed(format!("{case} {w} mod {}", rep.p));
        return;
    }
    for claim in found {
        let lam = lambda.as_ref().and_then(|l| i64::try_from(l).ok());
        match (claim.expect, lam) {
            (Expect::Squarefree, _) => {
                let ok = rep.fbar.is_squarefree();
                rep.claim_matches.push(ClaimMatch {
                    claim: claim.name.to_string(),
                    status: if ok {
                        ClaimStatus::Equal
                    } else {
                        ClaimStatus::Unequal
                    },
                });
            }
            (_, Some(l)) => {
                let form = claim_form(claim, &rep.field, l).expect("factored claim");
                rep.check_claim(claim.name, &form);
            }
            (_, None) => rep.note_unclaimed(claim.name),
        }
    }
}

fn reduce(a: &ReduceArgs) -> CliResult<Rendered> {
    let (source, f, family) = match (&a.f, &a.case) {
        (Some(f), None) => (
            "coefficients".to_string(),
            CharZeroPoly::from_bigints(&parse_int_list(f)?),
            None,
        ),
        (None, Some(case)) => {
            let case: FamilyCase = case.parse()?;
            let variant: Variant = a.variant.parse()?;
            let w: FWord = a.word.as_deref().unwrap_or("L").parse()?;
            let lambdas = parse_lambdas(&a.lambda)?;
            let polys = build_family_polys(case, variant, &lambdas)?;
            (
                format!("{case} {variant} {w}"),
                polys.product(w),
                Some((case, w, lambdas)),
            )
        }
        _ => return Err(usage("reduce needs --f, or --case with --word")),
    };
    let mut rep = reduction_report(&f, a.p)?;
    if let Some((case, w, lambdas)) = family {
        attach_claims(&mut rep, case, w, &lambdas);
    }
    let report = ReduceReport {
        tool: tool(),
        subcommand: "reduce",
        source,
        f: (&rep.f).into(),
        p: rep.p,
        field: field_name(rep.field.p(), rep.field.m()),
        fbar: (&rep.fbar).into(),
        factored: (&rep.factored).into(),
        genus: rep.genus,
        residual_genus: rep.residual_genus,
        branch_points: rep.branch_points,
        residual_branch_points: rep.residual_branch_points,
        good_reduction: rep.good_reduction,
        claim_matches: rep
            .claim_matches
            .iter()
            .map(|c| ClaimMatchDto {
                claim: c.claim.clone(),
                status: c.status.as_str(),
            })
            .collect(),
    };
    let mut text = String::new();
    writeln!(text, "F         {}", rep.f).ok();
    writeln!(
        text,
        "F mod {}   {} over {}",
        rep.p, rep.factored, report.field
    )
    .ok();
    writeln!(text, "genus     {} -> {}", rep.genus, rep.residual_genus).ok();
    writeln!(text, "good      {}", yes_no(rep.good_reduction)).ok();
    for c in &report.claim_matches {
        writeln!(text, "claim     {} : {}", c.claim, c.status).ok();
    }
    Ok(Rendered::new(&report, text))
}

#[derive(Serialize)]
struct NamedPoly {
    name: String,
    #[serde(flatten)]
    poly: PolyDto,
}

#[derive(Serialize)]
struct WordRow {
    word: String,
    good_reduction: bool,
    genus: usize,
    residual_genus: usize,
    error: Option<String>,
}

#[derive(Serialize)]
struct WordsDto {
    p: u64,
    rows: Vec<WordRow>,
    computed: Vec<String>,
    paper: Option<Vec<String>>,
    only_computed: Vec<String>,
    only_paper: Vec<String>,
    unparseable: Vec<String>,
    outside_case: Vec<String>,
    agrees: bool,
}

#[derive(Serialize)]
struct FamilyReport {
    tool: Tool,
    subcommand: &'static str,
    case: String,
    variant: &'static str,
    lambdas: Vec<String>,
    polys: Vec<NamedPoly>,
    notes: Vec<String>,
    word: Option<String>,
    f: Option<PolyDto>,
    words: Option<WordsDto>,
}

#[derive(Serialize)]
struct CyclicReport {
    tool: Tool,
    subcommand: &'static str,
    kind: String,
    p: u64,
    requested_genus: u64,
    t: u64,
    template: String,
    equation: Option<PolyDto>,
    produced_genus: Option<u64>,
    squarefree: Option<bool>,
    constraint_genera: Vec<u64>,
    genus_mismatch: bool,
}

#[derive(Serialize)]
struct UReport {
    tool: Tool,
    subcommand: &'static str,
    a1: String,
    a2: String,
    u1: String,
    u2: String,
}

fn int_params(a: &FamilyArgs) -> CliResult<Vec<BigInt>> {
    match &a.lambda {
        Some(s) => s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(parse_bigint)
            .collect(),
        None => Ok(Vec::new()),
    }
}

fn families(a: &FamilyArgs) -> CliResult<Rendered> {
    let case = a.case.trim();
    let lower = case.to_ascii_lowercase();
    if lower == "u" || lower == "u-invariants" {
        let params = int_params(a)?;
        let [a1, a2] = params.as_slice() else {
            return Err(usage("u-invariants need --lambda a1,a2"));
        };
        let (u1, u2) = shaska_u_invariants(a1, a2);
        let report = UReport {
            tool: tool(),
            subcommand: "families",
            a1: a1.to_string(),
            a2: a2.to_string(),
            u1: u1.to_string(),
            u2: u2.to_string(),
        };
        let text = format!("(a1, a2) = ({a1}, {a2}) -> (u1, u2) = ({u1}, {u2})\n");
        return Ok(Rendered::new(&report, text));
    }
    let cyclic = if let Some(n) = lower.strip_prefix("cyclic-") {
        let n: u64 = n.parse().map_err(|_| usage(format!("bad case `{case}`")))?;
        let t = a.t.ok_or_else(|| usage("cyclic-N needs --t"))?;
        Some(CyclicKind::CyclicN { n, t })
    } else {
        match lower.as_str() {
            "d2p" => Some(CyclicKind::D2p),
            "z2p-2g+2" => Some(CyclicKind::Z2p(Z2pShape::TwoGPlusTwo)),
            "z2p-2g+1" => Some(CyclicKind::Z2p(Z2pShape::TwoGPlusOne)),
            "z2p-2g" => Some(CyclicKind::Z2p(Z2pShape::TwoG)),
            "z2p" => {
                let (g, p) = (a.g.unwrap_or(0), a.p.unwrap_or(0));
                let shape = Z2pShape::detect(g, p.max(1)).ok_or_else(|| {
                    CliError::Core(hyperlift_core::Error::Precondition(format!(
                        "no admissible t for g = {g}, p = {p}"
                    )))
                })?;
                Some(CyclicKind::Z2p(shape))
            }
            _ => None,
        }
    };
    if let Some(kind) = cyclic {
        let g = a.g.ok_or_else(|| usage("equation shapes need --g"))?;
        let p = a.p.ok_or_else(|| usage("equation shapes need --p"))?;
        let eq = cyclic_curve_equation(kind, g, p, &int_params(a)?)?;
        let report = CyclicReport {
            tool: tool(),
            subcommand: "families",
            kind: eq.kind.to_string(),
            p,
            requested_genus: g,
            t: eq.t,
            template: eq.template.clone(),
            equation: eq.poly.as_ref().map(PolyDto::from),
            produced_genus: eq.produced_genus,
            squarefree: eq.squarefree,
            constraint_genera: eq.constraint_genera.clone(),
            genus_mismatch: eq.genus_mismatch,
        };
        let mut text = String::new();
        writeln!(text, "shape     {}  (t = {})", eq.template, eq.t).ok();
        if let Some(poly) = &eq.poly {
            writeln!(text, "equation  y^2 = {poly}").ok();
        }
        if let Some(pg) = eq.produced_genus {
            writeln!(text, "genus     requested {g}, produced {pg}").ok();
        }
        if !eq.constraint_genera.is_empty() {
            writeln!(text, "allowed   g in {:?}", eq.constraint_genera).ok();
        }
        writeln!(text, "mismatch  {}", yes_no(eq.genus_mismatch)).ok();
        return Ok(Rendered::new(&report, text));
    }

    let case: FamilyCase = case.parse()?;
    let variant: Variant = a.variant.parse()?;
    let lambdas = parse_lambdas(a.lambda.as_deref().unwrap_or("2"))?;
    let polys = build_family_polys(case, variant, &lambdas)?;
    let (word, f) = match &a.word {
        Some(w) => {
            let w: FWord = w.parse()?;
            let spec = FamilySpec {
                case,
                variant,
                lambdas: lambdas.clone(),
                word: w,
            };
            (Some(w.to_string()), Some(build_f(&spec)?))
        }
        None => (None, None),
    };
    let words = match a.p {
        Some(p) => {
            let r = allowed_f_words(case, p, variant, &lambdas)?;
            Some(WordsDto {
                p,
                rows: r
                    .outcomes
                    .iter()
                    .map(|o| WordRow {
                        word: o.word.to_string(),
                        good_reduction: o.good_reduction,
                        genus: o.genus,
                        residual_genus: o.residual_genus,
                        error: o.error.clone(),
                    })
                    .collect(),
                computed: strings(&r.computed),
                paper: r.paper.clone(),
                only_computed: strings(&r.only_computed),
                only_paper: strings(&r.only_paper),
                unparseable: r.unparseable.clone(),
                outside_case: r.outside_case.clone(),
                agrees: r.agrees(),
            })
        }
        None => None,
    };
    let report = FamilyReport {
        tool: tool(),
        subcommand: "families",
        case: case.to_string(),
        variant: variant.as_str(),
        lambdas: strings(&lambdas),
        polys: polys
            .named()
            .into_iter()
            .map(|(name, p)| NamedPoly {
                name,
                poly: p.into(),
            })
            .collect(),
        notes: polys.notes(),
        word,
        f: f.as_ref().map(PolyDto::from),
        words,
    };
    let mut text = String::new();
    writeln!(
        text,
        "{} ({}), lambda = {}",
        case,
        variant,
        report.lambdas.join(", ")
    )
    .ok();
    for np in &report.polys {
        writeln!(
            text,
            "  {:<4} deg {:>3}  {}",
            np.name,
            np.poly.degree.unwrap_or(0),
            np.poly.display
        )
        .ok();
    }
    for n in &report.notes {
        writeln!(text, "note: {n}").ok();
    }
    if let (Some(w), Some(f)) = (&report.word, &report.f) {
        writeln!(text, "F = {w}: degree {}", f.degree.unwrap_or(0)).ok();
    }
    if let Some(ws) = &report.words {
        writeln!(
            text,
            "good reduction at p = {}: {}",
            ws.p,
            ws.computed.join(", ")
        )
        .ok();
        match &ws.paper {
            Some(paper) => {
                writeln!(text, "published list:      {}", paper.join(", ")).ok();
                writeln!(text, "only computed:       {}", ws.only_computed.join(", ")).ok();
                writeln!(text, "only published:      {}", ws.only_paper.join(", ")).ok();
                writeln!(text, "unparseable entries: {}", ws.unparseable.join(", ")).ok();
                writeln!(text, "not forms of case:   {}", ws.outside_case.join(", ")).ok();
            }
            None => {
                writeln!(text, "no published list for this case and prime").ok();
            }
        }
    }
    Ok(Rendered::new(&report, text))
}

#[derive(Serialize)]
struct ClaimRow {
    claim: String,
    source: &'static str,
    status: &'static str,
    detail: String,
}

fn verify_paper(a: &VerifyArgs) -> CliResult<Rendered> {
    let results = verify_paper_claims(a.p)?;
    let rows: Vec<ClaimRow> = results
        .iter()
        .map(|r| ClaimRow {
            claim: r.claim.clone(),
            source: r.source.as_str(),
            status: r.status.as_str(),
            detail: r.detail.clone(),
        })
        .collect();
    let mut text = String::new();
    let width = rows.iter().map(|r| r.claim.len()).max().unwrap_or(0);
    for r in &rows {
        writeln!(
            text,
            "{:<width$}  {:<9}  {:<4}  {}",
            r.claim, r.source, r.status, r.detail
        )
        .ok();
    }
    writeln!(text).ok();
    for (claim, verdict) in claim_summary(&results) {
        writeln!(text, "{claim:<width$}  {}", verdict.as_str()).ok();
    }
    Ok(Rendered::new(&rows, text))
}
