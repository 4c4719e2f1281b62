use std::collections::BTreeSet;

use polygb::conditions::primality_sufficient;
use polygb::families::{
    gallery, make_grid, make_subgrid, make_thin_cycle, split_p1_p2, FamilyError, GridPolyomino, GridSpec, Run,
};
use polygb::gbasis::{is_prime, GbOptions};

fn runs(text: &str) -> Vec<Run> {
    text.split_whitespace().map(|r| r.parse().unwrap()).collect()
}

#[test]
fn grids_are_prime_and_recognised() {
    let specs = [
        gallery::two_hole_spec(),
        GridSpec {
            m: 6,
            n: 6,
            x_holes: vec![(2, 3), (4, 5)],
            y_holes: vec![(2, 3), (4, 5)],
        },
        GridSpec {
            m: 7,
            n: 4,
            x_holes: vec![(2, 4), (5, 6)],
            y_holes: vec![(2, 3)],
        },
    ];
    for spec in specs {
        let g = make_grid(&spec).unwrap();
        assert_eq!(g.polyomino().holes().len(), spec.hole_count());
        assert!(is_prime(g.polyomino(), &GbOptions::default()).unwrap().prime);
        let back = GridPolyomino::recognize(g.polyomino()).expect("grid");
        assert_eq!(back.polyomino(), g.polyomino());
    }
}

#[test]
fn p1_and_p2_partition_the_grid() {
    let g = make_grid(&gallery::two_hole_spec()).unwrap();
    let (p1, p2) = split_p1_p2(&g);
    assert!(p1.is_disjoint(&p2));
    assert_eq!(p1.len() + p2.len(), g.polyomino().rank());
}

#[test]
fn double_deletions_stay_prime() {
    let g = make_grid(&gallery::two_hole_spec()).unwrap();
    let (p1, _) = split_p1_p2(&g);
    let p1: Vec<_> = p1.into_iter().collect();
    let mut checked = 0;
    for (n, a) in p1.iter().enumerate() {
        for b in &p1[n + 1..] {
            if let Ok(sub) = make_subgrid(&g, &BTreeSet::from([*a, *b])) {
                checked += 1;
                assert!(is_prime(&sub, &GbOptions::default()).unwrap().prime, "{a:?} {b:?}");
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn deleting_outside_p1_is_rejected() {
    let g = make_grid(&gallery::two_hole_spec()).unwrap();
    let (_, p2) = split_p1_p2(&g);
    let c = *p2.iter().next().unwrap();
    assert!(matches!(
        make_subgrid(&g, &BTreeSet::from([c])),
        Err(FamilyError::DeletionNotInP1(d)) if d == c
    ));
}

#[test]
fn long_run_thin_cycles_are_certified_and_prime() {
    for text in ["N3 E3 S3 W3", "N4 E3 S4 W3", "N3 E3 N3 E3 S5 W5"] {
        let t = make_thin_cycle(&runs(text)).unwrap();
        assert!(t.min_interval_length >= 3, "{text}");
        assert!(t.polyomino.is_thin_cycle(), "{text}");
        assert!(primality_sufficient(&t.polyomino).is_certified(), "{text}");
        assert!(is_prime(&t.polyomino, &GbOptions::default()).unwrap().prime, "{text}");
    }
}

#[test]
fn runs_must_close() {
    assert!(matches!(make_thin_cycle(&runs("N3 E3 S3")), Err(FamilyError::DoesNotClose(..))));
}
