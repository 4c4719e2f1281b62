use std::path::PathBuf;

use polygb::conditions::{primality_sufficient, prop21, thin_obstructions};
use polygb::families::gallery;
use polygb::gbasis::{buchberger, inner_2_minors, is_prime, is_quadratic_gb, GbOptions};
use polygb::geometry::{PatternId, Polyomino};
use polygb::io::{format_ascii, load, parse_ascii, parse_json, to_json};
use polygb::lattice::LatticeBasis;
use polygb::orders::{MonomialOrder, OrderIndex, Parity};

fn fixture(name: &str) -> Polyomino {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", "paper", name]
        .iter()
        .collect();
    load(&path).unwrap()
}

fn quadratic_under(p: &Polyomino, i: u8) -> bool {
    let order = MonomialOrder::for_polyomino(p, OrderIndex::new(i).unwrap());
    is_quadratic_gb(p, &order, &GbOptions::default()).unwrap()
}

#[test]
fn fixture_files_match_the_gallery() {
    for g in gallery::all() {
        let name = g.name().unwrap().to_string();
        let f = fixture(&name);
        assert_eq!(f, g, "{name}");
        assert_eq!(f.name(), Some(name.as_str()));
    }
}

#[test]
fn ranks_and_hole_counts() {
    let expect = [
        ("fig8a", 14, 1),
        ("fig8b", 16, 1),
        ("fig8c", 24, 1),
        ("fig9", 57, 10),
        ("fig10", 50, 3),
        ("figQ", 4, 0),
    ];
    for (name, rank, holes) in expect {
        let p = fixture(name);
        assert_eq!((p.rank(), p.holes().len()), (rank, holes), "{name}");
    }
}

#[test]
fn text_formats_round_trip_on_fixtures() {
    for g in gallery::all() {
        assert_eq!(parse_ascii(&format_ascii(&g)).unwrap(), g);
        let back = parse_json(&to_json(&g)).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.name(), g.name());
    }
}

#[test]
fn the_block_is_the_only_non_thin_tile() {
    assert!(!fixture("figQ").is_thin());
    for k in 1..=4 {
        assert!(gallery::fig7(k).is_thin());
    }
    for name in ["fig8a", "fig8b", "fig8c"] {
        let p = fixture(name);
        assert!(p.is_thin() && p.is_thin_cycle(), "{name}");
    }
}

#[test]
fn skew_panels_obstruct_their_parity() {
    for (k, parity, id) in [
        (1, Parity::Odd, PatternId::SkewI),
        (2, Parity::Odd, PatternId::SkewII),
        (3, Parity::Even, PatternId::SkewIII),
        (4, Parity::Even, PatternId::SkewIV),
    ] {
        let p = gallery::fig7(k);
        assert!(!prop21(&p, parity), "panel {k}");
        let found = thin_obstructions(&p, parity).unwrap();
        assert!(found.iter().any(|o| o.pattern == id), "panel {k}");
        let i = if parity == Parity::Odd { 1 } else { 2 };
        assert!(!quadratic_under(&p, i), "panel {k}");
    }
}

#[test]
fn subgrid_figures_have_quadratic_bases_for_every_order() {
    for name in ["fig9", "fig10"] {
        let p = fixture(name);
        for i in 1..=8 {
            assert!(quadratic_under(&p, i), "{name} order {i}");
        }
        assert_eq!(primality_sufficient(&p).certified, Some(Parity::Odd), "{name}");
    }
}

#[test]
fn thin_cycle_verdicts() {
    let opts = GbOptions::default();
    assert!(is_prime(&fixture("fig8a"), &opts).unwrap().prime);
    assert!(is_prime(&fixture("fig8c"), &opts).unwrap().prime);

    let b = fixture("fig8b");
    let report = is_prime(&b, &opts).unwrap();
    assert!(!report.prime);
    let w = report.witness.expect("non-prime verdicts carry a witness");
    assert!(w.in_lattice);
    assert!(LatticeBasis::for_polyomino(&b).binomial_in_lattice_ideal(&w.binomial).unwrap());
    let order = MonomialOrder::for_polyomino(&b, OrderIndex::new(1).unwrap());
    let ideal = buchberger(inner_2_minors(&b), &order, &opts).unwrap();
    assert!(!ideal.contains(&w.binomial));
}

#[test]
fn fig8a_has_a_length_two_interval_and_fig8c_does_not() {
    let min = |p: &Polyomino| p.maximal_inner_intervals().iter().map(|i| i.length()).min().unwrap();
    assert_eq!(min(&fixture("fig8a")), 2);
    assert_eq!(min(&fixture("fig8c")), 3);
    assert!(!primality_sufficient(&fixture("fig8a")).is_certified());
    assert!(primality_sufficient(&fixture("fig8c")).is_certified());
}
