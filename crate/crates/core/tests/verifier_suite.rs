use cgraph::verifier::{run_suite, Corpus};

#[test]
fn default_suite_has_no_failures() {
    let report = run_suite(&Corpus::default_corpus(), &["all"]).unwrap();
    for r in report.failures() {
        eprintln!("FAIL {} {} {}", r.check_id, r.group, r.witness);
    }
    eprintln!("{:?}", report.summary());
    eprintln!("vacuous checks: {:?}", report.vacuous_checks());
    assert!(report.passed());
    assert!(report.vacuous_checks().is_empty());
}

