//! Catalog-wide checks on the default sweep grid plus pinned instances.

use genbern::harness::{run_suite, SweepConfig};
use genbern::identities::{verify, IdentityCase};
use genbern::{CaseId, GenBernTable, Rational, Status, SumSpec, VerificationResult};

/// The reading that must hold wherever an erratum case applies.
fn corrected_reading(id: CaseId) -> Option<&'static str> {
    Some(match id {
        CaseId::T24 => "r = 0",
        CaseId::K5 | CaseId::NielsenF10 => "stated",
        CaseId::Ges1 | CaseId::C1 => "half sum, base k(k-m)",
        CaseId::Cor3a => "index n+l+r",
        CaseId::Cor3b => "power n+l+r-1",
        CaseId::Cor1 => "sign and power corrected",
        CaseId::PolySum => "n x^{n-1}",
        CaseId::EvenRecurrence => "factor 1/(2n+1)",
        _ => return None,
    })
}

fn reading_holds(result: &VerificationResult, name: &str) -> bool {
    let adj = result.adjudication.as_ref().expect("erratum cases report readings");
    adj.readings.iter().any(|r| r.reading == name && r.verified)
}

fn spec(f: impl FnOnce(&mut SumSpec)) -> SumSpec {
    let mut s = SumSpec::default();
    f(&mut s);
    s
}

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn check(id: CaseId, params: SumSpec) -> VerificationResult {
    verify(&IdentityCase::new(id, params), GenBernTable::global()).unwrap()
}

#[test]
fn default_grid_has_no_counterexamples() {
    let report = run_suite(&SweepConfig::default()).unwrap();
    assert!(report.summary.verified > 0);
    for result in &report.results {
        assert_ne!(result.status, Status::Counterexample, "{:?}", result.case);
        match corrected_reading(result.case.id) {
            None => assert_ne!(result.status, Status::Adjudicated, "{:?}", result.case),
            Some(name) if result.status != Status::NotApplicable => {
                assert!(reading_holds(result, name), "{:?}", result.case)
            }
            Some(_) => {}
        }
    }
    for id in CaseId::ALL {
        assert!(
            report.results.iter().any(|r| r.case.id == *id && r.status != Status::NotApplicable),
            "{id} has no applicable instance"
        );
    }
}

#[test]
fn adjudicated_flags_match_catalog() {
    for id in CaseId::ALL {
        assert_eq!(id.is_adjudicated(), corrected_reading(*id).is_some(), "{id}");
    }
}

#[test]
fn t24_holds_only_with_r_zero() {
    let r = check(CaseId::T24, spec(|s| { s.n = Some(3); s.m = Some(2) }));
    assert_eq!(r.status, Status::Adjudicated);
    let adj = r.adjudication.unwrap();
    assert_eq!(adj.verifying.as_deref(), Some("r = 0"));
    assert!(!adj.readings[0].verified);
}

#[test]
fn k5_and_f10_hold_as_printed() {
    let k5 = check(CaseId::K5, spec(|s| s.n = Some(4)));
    assert_eq!(k5.status, Status::Verified);
    assert_eq!(k5.adjudication.unwrap().verifying.as_deref(), Some("stated"));

    let f10 = check(
        CaseId::NielsenF10,
        spec(|s| { s.n = Some(2); s.l = Some(1); s.r = Some(1); s.m = Some(3); s.beta = Some(q("1/3")) }),
    );
    assert_eq!(f10.status, Status::Verified);
    let adj = f10.adjudication.unwrap();
    assert!(adj.readings[0].verified);
    assert!(!adj.readings[1].verified, "the global sign reading should fail");
}

#[test]
fn ges1_needs_half_sum_and_flipped_base() {
    // n + (r-1)/2 odd, so the printed base k(m-k) changes sign
    let r = check(CaseId::Ges1, spec(|s| { s.n = Some(1); s.r = Some(1); s.m = Some(3) }));
    assert_eq!(r.status, Status::Adjudicated);
    let adj = r.adjudication.unwrap();
    assert_eq!(adj.verifying.as_deref(), Some("half sum, base k(k-m)"));
    assert!(!adj.readings[0].verified);
}

#[test]
fn classical_errata() {
    let bsum = check(CaseId::PolySum, spec(|s| s.n = Some(5)));
    assert_eq!(bsum.status, Status::Adjudicated);
    assert_eq!(bsum.adjudication.unwrap().verifying.as_deref(), Some("n x^{n-1}"));

    let b2n = check(CaseId::EvenRecurrence, spec(|s| s.n = Some(3)));
    assert_eq!(b2n.status, Status::Adjudicated);
    assert_eq!(b2n.adjudication.unwrap().verifying.as_deref(), Some("factor 1/(2n+1)"));
    assert_eq!(check(CaseId::EvenRecurrence, spec(|s| s.n = Some(0))).status, Status::NotApplicable);
}

#[test]
fn corollaries_agree_with_printed_form_at_r_one() {
    let base = |r| {
        spec(|s| {
            s.n = Some(2);
            s.l = Some(1);
            s.r = Some(r);
            s.x = Some(q("1/2"));
            s.y = Some(q("-1/3"));
            s.alpha = Some("symbolic".parse().unwrap());
        })
    };
    assert_eq!(check(CaseId::Cor3a, base(1)).status, Status::Verified);
    assert_eq!(check(CaseId::Cor3a, base(3)).status, Status::Adjudicated);
    assert_eq!(check(CaseId::Cor3a, base(0)).status, Status::NotApplicable);

    let t = |r| spec(|s| { s.n = Some(1); s.l = Some(2); s.r = Some(r); s.t = Some(q("2")) });
    assert_eq!(check(CaseId::Cor3b, t(1)).status, Status::Verified);
    assert_eq!(check(CaseId::Cor3b, t(2)).status, Status::Adjudicated);
}

#[test]
fn pinned_values() {
    let fi2 = check(CaseId::Fi2, spec(|s| { s.n = Some(1); s.r = Some(1) }));
    assert_eq!(fi2.status, Status::Verified);
    // at x = 0 the cor1 sum is 2^n times the fi2 sum, which equals -1/4 at n = r = 1
    let b = genbern::bernoulli::classical_bernoulli_numbers(4);
    let lhs = genbern::identities::cor1_lhs(&b, 1, 1, &Rational::zero()).unwrap();
    assert_eq!(lhs * q("1/2"), q("-1/4"));

    let cor1 = check(CaseId::Cor1, spec(|s| { s.n = Some(1); s.r = Some(1); s.x = Some(q("1")) }));
    assert_eq!(cor1.status, Status::NotApplicable);
    assert!(cor1.note.is_some());
}

#[test]
fn missing_parameters_are_errors() {
    let err = verify(&IdentityCase::new(CaseId::T3, spec(|s| s.n = Some(1))), GenBernTable::global());
    assert!(matches!(err, Err(genbern::Error::MissingParam { .. })));
}

#[test]
fn every_theorem_instance_on_a_small_grid() {
    let table = GenBernTable::global();
    for n in 0..=2 {
        for l in 0..=2 {
            for r in 0..=2 {
                for s in 0..=2 {
                    let cert = genbern::identities::lambda_certify(table, n, l, r, s);
                    assert!(cert.verified(), "({n},{l},{r},{s})");
                    assert_eq!(cert.points.len(), (n + l + 2 * r + 2) as usize);
                }
            }
        }
    }
}
