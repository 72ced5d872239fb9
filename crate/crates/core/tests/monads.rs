mod common;

use common::{
    check_euler_and_duality, check_file_round_trip, check_fixture_hilbert_functions, chern_oracle, label, load,
    FIXTURES,
};
use monadlab::monad::{fixture, FixtureParams};
use monadlab::sheafcoh::sheaf_cohomology;
use monadlab::{Error, Fp, Ring, QQ};

fn ring() -> Ring<Fp> {
    Ring::new(Fp::new(32003).unwrap())
}

#[test]
fn fixtures_validate() {
    let ring = ring();
    for f in FIXTURES {
        let m = load(&ring, f);
        let r = m.validate(true).unwrap();
        assert!(r.passed(), "{}:\n{r}", label(f));
        assert_eq!(r.stable, Some(true), "{}", label(f));
    }
}

#[test]
fn chern_classes_match_twists() {
    let ring = ring();
    let known = [
        ("null-correlation", (0, 1)),
        ("table1-row1", (0, 6)),
        ("thm34", (-1, 6)),
        ("ex32", (0, 9)),
    ];
    for f in FIXTURES {
        let m = load(&ring, f);
        let ch = m.chern_classes();
        assert_eq!((ch.c1, ch.c2), chern_oracle(&m), "{}", label(f));
        if let Some((_, v)) = known.iter().find(|(n, _)| *n == f.0) {
            assert_eq!((ch.c1, ch.c2), *v, "{}", label(f));
        }
    }
}

#[test]
fn inhomogeneous_display_is_rejected() {
    let err = fixture(&ring(), "ex32-display", FixtureParams::default()).unwrap_err();
    assert!(matches!(err, Error::InhomogeneousEntry { .. }), "{err}");
}

#[test]
fn zeroed_alpha_column_is_not_injective() {
    let ring = ring();
    let m = load(&ring, &("M0", Some(3), None));
    let mut alpha = m.alpha().clone();
    for i in 0..alpha.target().rank() {
        alpha = alpha.with_entry_unchecked(i, 0, ring.zero()).unwrap();
    }
    let r = m.with_alpha(alpha).unwrap().validate(true).unwrap();
    assert!(!r.fiber_injective);
    assert!(!r.passed());
    assert_eq!(r.stable, None);
}

#[test]
fn module_hilbert_function_matches_slices() {
    check_fixture_hilbert_functions(&ring()).unwrap();
}

#[test]
fn euler_characteristic_and_serre_duality() {
    check_euler_and_duality(&ring()).unwrap();
}

#[test]
fn spectra() {
    let ring = ring();
    let cases: &[(&str, Option<i64>, Option<i64>, &str)] = &[
        ("null-correlation", None, None, "{0}"),
        ("family2", Some(3), None, "{-2,-2,-1,-1,0,1,1,2,2}"),
        ("k3", Some(3), Some(0), "{-2,-2,-2,-1,-1,-1,0,0,0,1,1,1,2,2,2}"),
    ];
    for (name, a, b, want) in cases {
        let m = load(&ring, &(name, *a, *b));
        let s = m.spectrum().unwrap();
        assert_eq!(s.to_string(), *want, "{name}");
        assert_eq!(s.len() as i64, m.chern_classes().c2);
    }
    let half = |b| {
        load(&ring, &("k3", Some(3), Some(b)))
            .spectrum()
            .unwrap()
            .half_notation()
    };
    assert_eq!(half(0), "{0^3,1^3,2^3}");
    assert_eq!(half(1), "{0^2,1^3,2^3}");
    assert_eq!(half(2), "{0,1^2,2^3}");
}

#[test]
fn tangent_dimensions() {
    let ring = ring();
    for (f, want) in [
        (("null-correlation", None, None), 5),
        (("table1-row1", None, None), 45),
        (("thm34", None, None), 45),
    ] {
        let m = load(&ring, &f);
        let t = m.tangent_dim().unwrap();
        assert_eq!(t, want, "{}", label(&f));
        assert!(m.ext2_dim(t).unwrap() >= 0);
    }
}

#[test]
fn field_choice_does_not_change_invariants() {
    let fp = ring();
    let qq = Ring::new(QQ);
    for f in [
        ("null-correlation", None, None),
        ("M0", Some(3), None),
        ("k3", Some(3), Some(1)),
    ] {
        let a = load(&fp, &f).cohomology_bundle().unwrap();
        let b = load(&qq, &f).cohomology_bundle().unwrap();
        for d in -4..=1 {
            assert_eq!(
                sheaf_cohomology(&a, 1, d).unwrap(),
                sheaf_cohomology(&b, 1, d).unwrap(),
                "{} at {d}",
                label(&f)
            );
        }
    }
}

#[test]
fn files_round_trip() {
    check_file_round_trip(&ring()).unwrap();
}
