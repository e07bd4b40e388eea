use std::collections::BTreeMap;
use std::sync::OnceLock;

use lie_grading::{two_rho_e, Cocharacter, GradedRootSets};
use lie_losev::integral_root_system;
use lie_rootsys::{qr, Series};
use proptest::prelude::*;
use rigid_ledger::{
    emit_report, parse_cases, root_system, shipped_cases, verify_all, verify_all_sequential,
    verify_case, CaseRecord, DerivedSubalgebra, Format, LedgerError, Route, Status, SHIPPED,
};

fn cases() -> &'static [CaseRecord] {
    static CACHE: OnceLock<Vec<CaseRecord>> = OnceLock::new();
    CACHE.get_or_init(|| shipped_cases().unwrap())
}

fn case(id: &str) -> CaseRecord {
    cases().iter().find(|c| c.id() == id).unwrap().clone()
}

const MINIMAL: &str = "\
[case E8/A1]
pinning = 4
tau = 0,-1,-1,2,-1,0,0,0
dim_centralizer = 190
component_group = 1
counts = 63,28
two_rho_e = 72,106,142,224,172,132,90,46
standard_levi = true
";

#[test]
fn shipped_file_has_34_records() {
    let all = cases();
    assert_eq!(all.len(), 34);
    let mut per: BTreeMap<String, usize> = BTreeMap::new();
    for c in all {
        *per.entry(c.system.to_string()).or_default() += 1;
    }
    let expected: BTreeMap<String, usize> =
        [("E6", 3), ("E7", 7), ("E8", 17), ("F4", 5), ("G2", 2)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
    assert_eq!(per, expected);
}

#[test]
fn every_shipped_case_passes() {
    for r in verify_all(cases()) {
        let failed: Vec<_> = r
            .failures()
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect();
        assert!(failed.is_empty(), "{}: {failed:?}", r.case_id);
    }
}

#[test]
fn minimal_record_parses() {
    let recs = parse_cases(MINIMAL).unwrap();
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0].counts, (63, 28));
    assert!(recs[0].candidates.is_empty());
    assert!(verify_case(&recs[0]).passed());
}

#[test]
fn odd_orbit_dimension_is_a_validation_error() {
    let text = MINIMAL.replace("dim_centralizer = 190", "dim_centralizer = 191");
    match parse_cases(&text) {
        Err(LedgerError::Validation { case, field, .. }) => {
            assert_eq!(case, "E8/A1");
            assert_eq!(field, "dim_centralizer");
        }
        other => panic!("expected a validation error, got {other:?}"),
    }
}

#[test]
fn syntax_errors_carry_line_numbers() {
    let text = MINIMAL.replace("standard_levi = true", "standard_levi true");
    assert!(matches!(
        parse_cases(&text),
        Err(LedgerError::Syntax { line: 8, .. })
    ));

    let text = MINIMAL.replace("tau = 0,-1,-1,2,-1,0,0,0", "tau = 0,-1,x,2,-1,0,0,0");
    assert!(matches!(
        parse_cases(&text),
        Err(LedgerError::Syntax { line: 3, .. })
    ));

    let text = format!("{MINIMAL}colour = red\n");
    assert!(matches!(
        parse_cases(&text),
        Err(LedgerError::Syntax { line: 9, .. })
    ));

    let text = format!("{MINIMAL}counts = 1,2\n");
    assert!(matches!(
        parse_cases(&text),
        Err(LedgerError::Syntax { line: 9, .. })
    ));

    assert!(matches!(
        parse_cases("pinning = 4\n"),
        Err(LedgerError::Syntax { line: 1, .. })
    ));
}

#[test]
fn structural_validation_names_the_field() {
    let short = MINIMAL.replace("tau = 0,-1,-1,2,-1,0,0,0", "tau = 0,-1,-1,2,-1,0,0");
    assert!(matches!(
        parse_cases(&short),
        Err(LedgerError::Validation { field, .. }) if field == "tau"
    ));

    let missing = MINIMAL.replace("standard_levi = true\n", "");
    assert!(matches!(
        parse_cases(&missing),
        Err(LedgerError::Validation { field, .. }) if field == "standard_levi"
    ));

    let pin = MINIMAL.replace("pinning = 4", "pinning = 9");
    assert!(matches!(
        parse_cases(&pin),
        Err(LedgerError::Validation { field, .. }) if field == "pinning"
    ));

    let lo2 = format!("{MINIMAL}candidate.1.weight = 1,1,1,0,1,1,1,1\ncandidate.1.route = LO2\n");
    assert!(matches!(
        parse_cases(&lo2),
        Err(LedgerError::Validation { field, .. }) if field == "candidate.1.lo2"
    ));

    let gap =
        format!("{MINIMAL}candidate.2.weight = 1,1,1,0,1,1,1,1\ncandidate.2.route = JOSEPH\n");
    assert!(matches!(
        parse_cases(&gap),
        Err(LedgerError::Validation { .. })
    ));

    let dangling = format!("{MINIMAL}weyl_identity.1 = apply ; s1 ; half_hvee ; rho\n");
    assert!(matches!(
        parse_cases(&dangling),
        Err(LedgerError::Validation { .. })
    ));
}

// Frozen from an independent enumeration of the graded positive roots.
#[test]
fn counts_and_two_rho_e_for_selected_cases() {
    let expect: [(&str, (usize, usize), &[i64]); 6] = [
        ("E8/A1", (63, 28), &[72, 106, 142, 224, 172, 132, 90, 46]),
        ("E8/A2+A1", (30, 22), &[44, 66, 86, 130, 104, 84, 54, 28]),
        ("E8/2A2+2A1", (16, 20), &[32, 46, 62, 90, 75, 57, 38, 20]),
        ("E7/A2+2A1", (10, 12), &[14, 20, 27, 38, 31, 22, 11]),
        ("F4/~A2+A1", (2, 4), &[6, 10, 14, 7]),
        ("G2/A1", (1, 2), &[6, 4]),
    ];
    for (id, counts, two) in expect {
        let r = verify_case(&case(id));
        assert_eq!(r.counts, counts, "{id}");
        assert_eq!(r.two_rho_e, two, "{id}");
    }
}

#[test]
fn misprinted_rows_are_flagged() {
    let flagged: Vec<String> = cases()
        .iter()
        .filter(|c| c.printed_two_rho_e.is_some() || c.printed_counts.is_some())
        .map(|c| c.id())
        .collect();
    assert_eq!(
        flagged,
        [
            "E8/A2+A1",
            "E8/2A2+A1",
            "E8/2A2+2A1",
            "E8/A3+2A1",
            "E8/2A3",
            "E7/A2+2A1",
            "G2/A1"
        ]
    );
    let r = verify_case(&case("E8/A3+2A1"));
    assert!(r
        .typo_flags
        .iter()
        .any(|t| t.contains("α2: printed 44, computed 45")));
    assert_eq!(case("G2/A1").table_counts(), (2, 1));
    assert_eq!(case("G2/~A1").table_counts(), (1, 1));
}

#[test]
fn two_rho_e_fault_names_the_coordinate() {
    let mut rec = case("E8/A1");
    rec.two_rho_e[2] += 1;
    let r = verify_case(&rec);
    let c = r.check("two_rho_e").unwrap();
    assert_eq!(c.status, Status::Fail);
    assert_eq!(c.detail, "α3: claimed 143, computed 142");
    assert!(!r.passed());
}

#[test]
fn count_fault_is_caught() {
    let mut rec = case("E8/A1");
    rec.counts.0 += 1;
    let r = verify_case(&rec);
    let c = r.check("counts").unwrap();
    assert_eq!(c.status, Status::Fail);
    assert_eq!(c.detail, "|Φ⁺(0)|: claimed 64, computed 63");
}

#[test]
fn candidate_fault_breaks_condition_c() {
    let mut rec = case("E8/2A3");
    rec.candidates[0].weight.0[0] += qr(1, 1);
    let r = verify_case(&rec);
    assert_eq!(
        r.check("candidate.1.condition_c").unwrap().status,
        Status::Fail
    );
}

#[test]
fn wrong_integral_type_is_caught() {
    let mut rec = case("E8/3A1");
    rec.candidates[0].integral_type = Some("D8".parse().unwrap());
    let r = verify_case(&rec);
    let c = r.check("candidate.1.integral_type").unwrap();
    assert_eq!(c.status, Status::Fail);
    assert_eq!(c.detail, "claimed D8, computed E7+A1");
}

#[test]
fn non_standard_levi_records_condition_a() {
    for id in ["E8/D4(a1)+A1", "E8/D5(a1)+A2"] {
        let r = verify_case(&case(id));
        assert_eq!(
            r.check("candidate.1.condition_a").unwrap().status,
            Status::Recorded
        );
        assert!(r.passed());
    }
}

#[test]
fn a5_a1_candidates_differ_on_beta8() {
    let r = verify_case(&case("E8/A5+A1"));
    assert_eq!(r.check("candidates_distinct").unwrap().status, Status::Pass);
    assert!(r
        .check("weyl_identity.1")
        .unwrap()
        .detail
        .ends_with("(1, 1, 1, 1, 1, 1, 2, 2)"));
    assert!(r
        .check("weyl_identity.2")
        .unwrap()
        .detail
        .ends_with("(2, 1, 1, 1, 1, 1, 1, 1)"));
}

#[test]
fn joseph_dimensions() {
    let expect = [
        ("E8/3A1", 112),
        ("E8/4A1", 128),
        ("E8/2A2+A1", 162),
        ("E8/2A2+2A1", 168),
        ("E8/2A3", 188),
        ("E8/A4+A3", 200),
        ("E8/A5+A1", 202),
        ("E6/3A1", 40),
        ("E6/2A2+A1", 54),
    ];
    for (id, dim) in expect {
        let rec = case(id);
        let rs = root_system(rec.system);
        assert_eq!(rs.dim_algebra() - rec.dim_centralizer, dim, "{id}");
        let r = verify_case(&rec);
        let c = r.check("candidate.1.dimension").unwrap();
        assert_eq!(c.status, Status::Pass, "{id}");
        assert!(
            c.detail.starts_with(&format!("2(|Φ⁺| − |Φ_λ⁺|) = {dim} ")),
            "{id}"
        );
    }
}

#[test]
fn routes_are_replayed() {
    for rec in cases() {
        for cand in &rec.candidates {
            let status = verify_case(rec)
                .check(&format!("candidate.{}.dimension", cand.index))
                .unwrap()
                .status;
            let expected = match cand.route {
                Route::Recorded => Status::Recorded,
                _ => Status::Pass,
            };
            assert_eq!(status, expected, "{}", rec.id());
        }
    }
}

#[test]
fn two_candidate_cases_match_annotations() {
    let two: Vec<String> = cases()
        .iter()
        .filter(|c| c.candidates.len() >= 2)
        .map(|c| c.id())
        .collect();
    let proper: Vec<String> = cases()
        .iter()
        .filter(|c| c.derived_subalgebra == Some(DerivedSubalgebra::Proper))
        .map(|c| c.id())
        .collect();
    let many: Vec<String> = cases()
        .iter()
        .filter(|c| c.e_count.as_deref().is_some_and(|e| e != "1"))
        .map(|c| c.id())
        .collect();
    let expected = [
        "E8/A3+A1",
        "E8/A5+A1",
        "E8/D5(a1)+A2",
        "E7/(A3+A1)'",
        "F4/~A2+A1",
        "G2/~A1",
    ];
    assert_eq!(two, expected);
    assert_eq!(proper, expected);
    assert_eq!(many, expected);
}

#[test]
fn annotation_mismatch_fails() {
    let mut rec = case("E8/A1");
    rec.derived_subalgebra = Some(DerivedSubalgebra::Proper);
    let r = verify_case(&rec);
    assert_eq!(r.check("annotations").unwrap().status, Status::Fail);
}

/// Every computable stored value is reproduced from `τ` and the weights
/// alone.
#[test]
fn self_consistency_sweep() {
    for rec in cases() {
        let rs = root_system(rec.system);
        let tau = Cocharacter::new(rs, rec.tau.clone()).unwrap();
        let counts = GradedRootSets::new(rs, &tau).counts();
        assert_eq!(counts, rec.counts, "{}", rec.id());
        assert_eq!(2 * (counts.0 + counts.1) + rs.rank(), rec.dim_centralizer);
        assert_eq!(two_rho_e(rs, &tau), rec.two_rho_e, "{}", rec.id());
        for cand in &rec.candidates {
            let sub = integral_root_system(rs, &cand.weight);
            if let Some(t) = &cand.integral_type {
                assert_eq!(&sub.cartan_type, t, "{}", rec.id());
            }
            if let Some((gl, _)) = cand.lo2 {
                assert_eq!(sub.dim_algebra(rs), gl, "{}", rec.id());
            }
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let a = emit_report(&verify_all(cases()), Format::Detail);
    let b = emit_report(&verify_all(cases()), Format::Detail);
    let c = emit_report(&verify_all_sequential(cases()), Format::Detail);
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn table_report_shape() {
    let reports = verify_all(cases());
    let table = emit_report(&reports, Format::Table);
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines.len(), 35);
    assert!(lines[1].starts_with("E8     A1"));
    assert!(lines[1].contains("(72, 106, 142, 224, 172, 132, 90, 46)"));
    assert!(lines[1..].iter().all(|l| l.ends_with("PASS")));

    let empty = emit_report(&[], Format::Table);
    assert_eq!(empty.lines().count(), 1);
    assert!(empty.starts_with("system"));
    assert_eq!(emit_report(&[], Format::Detail), "");
}

#[test]
fn shipped_text_is_embedded() {
    assert_eq!(SHIPPED.matches("[case ").count(), 34);
    assert!(cases().iter().all(|c| c.system != Series::D(4)));
}

fn perturbable() -> Vec<(usize, usize)> {
    cases()
        .iter()
        .enumerate()
        .flat_map(|(k, c)| (0..c.two_rho_e.len()).map(move |i| (k, i)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn any_two_rho_e_perturbation_fails(pick in 0usize..1000, delta in prop_oneof![-5i64..=-1, 1i64..=5]) {
        let slots = perturbable();
        let (k, i) = slots[pick % slots.len()];
        let mut rec = cases()[k].clone();
        let before = rec.two_rho_e[i];
        rec.two_rho_e[i] += delta;
        let r = verify_case(&rec);
        let c = r.check("two_rho_e").unwrap();
        prop_assert_eq!(c.status, Status::Fail);
        let witness = format!("α{}: claimed {}, computed {}", i + 1, before + delta, before);
        prop_assert_eq!(&c.detail, &witness);
        prop_assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn any_candidate_perturbation_fails(pick in 0usize..1000, coord in 0usize..8, num in 1i64..6, den in 1i64..5, neg in any::<bool>()) {
        let with: Vec<&CaseRecord> = cases().iter().filter(|c| !c.candidates.is_empty()).collect();
        let mut rec = with[pick % with.len()].clone();
        let j = pick % rec.candidates.len();
        let i = coord % rec.candidates[j].weight.0.len();
        let step = if neg { qr(-num, den) } else { qr(num, den) };
        rec.candidates[j].weight.0[i] += step;
        let r = verify_case(&rec);
        let name = format!("candidate.{}.condition_c", j + 1);
        prop_assert_eq!(r.check(&name).unwrap().status, Status::Fail);
        prop_assert!(!r.passed());
    }

    #[test]
    fn any_count_perturbation_fails(pick in 0usize..34, which in any::<bool>(), delta in 1usize..4) {
        let mut rec = cases()[pick].clone();
        if which { rec.counts.0 += delta } else { rec.counts.1 += delta }
        let r = verify_case(&rec);
        prop_assert_eq!(r.check("counts").unwrap().status, Status::Fail);
    }
}
