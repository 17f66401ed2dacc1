//! Each verification suite over the corpus, plus fixed values that the suites
//! only check structurally.

use sliceburn::spectrum::Localization;
use sliceburn::verify::{self, corpus_context, Options, Suite, CORPUS};
use sliceburn::RingKind;

fn run_suite(suite: Suite, skip_large: bool) {
    let opts = Options { seed: 11, ..Options::default() };
    for &(name, desc) in CORPUS {
        let ctx = corpus_context(desc).unwrap();
        if skip_large && ctx.group().order() > 24 {
            continue;
        }
        let checks = verify::run(&ctx, suite, &opts);
        assert!(!checks.is_empty(), "{name}: no {} checks ran", suite.name());
        let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect();
        assert!(failed.is_empty(), "{name} {}: {failed:#?}", suite.name());
    }
}

#[test]
fn ring_suite() {
    run_suite(Suite::Ring, false);
}

#[test]
fn galois_suite() {
    run_suite(Suite::Galois, false);
}

#[test]
fn biset_suite() {
    run_suite(Suite::Biset, true);
}

#[test]
fn spectrum_suite() {
    run_suite(Suite::Spectrum, false);
}

#[test]
fn units_suite() {
    run_suite(Suite::Units, false);
}

#[test]
fn a5_counts() {
    let ctx = corpus_context("family alternating 5").unwrap();
    assert_eq!(ctx.lattice().len(), 59);
    assert_eq!(ctx.rank(RingKind::Slice), 32);
    assert_eq!(ctx.rank(RingKind::Section), 21);
    assert_eq!(ctx.components(RingKind::Slice, Localization::Integers).unwrap().len(), 3);
    assert_eq!(ctx.components(RingKind::Section, Localization::Integers).unwrap().len(), 2);
    assert!(!ctx.lattice().is_solvable());
}

#[test]
fn unit_dimensions_of_nonabelian_groups() {
    let expected = [
        ("family symmetric 3", 6, None),
        ("family symmetric 4", 15, Some(10)),
        ("family dihedral 12", 13, Some(11)),
        ("family alternating 5", 14, Some(7)),
    ];
    for (desc, xi, gamma) in expected {
        let ctx = corpus_context(desc).unwrap();
        assert_eq!(ctx.unit_group(RingKind::Slice).unwrap().dimension, xi, "{desc} Ξ");
        if let Some(gamma) = gamma {
            assert_eq!(ctx.unit_group(RingKind::Section).unwrap().dimension, gamma, "{desc} Γ");
        }
    }
}

#[test]
fn tensor_induction_counterexample() {
    verify::tensor_counterexample().unwrap();
}

#[test]
fn suites_are_deterministic() {
    let ctx = corpus_context("family dihedral 8").unwrap();
    let opts = Options { seed: 5, ..Options::default() };
    let a: Vec<String> = verify::run(&ctx, Suite::All, &opts).into_iter().map(|c| c.detail).collect();
    let b: Vec<String> = verify::run(&ctx, Suite::All, &opts).into_iter().map(|c| c.detail).collect();
    assert_eq!(a, b);
}
