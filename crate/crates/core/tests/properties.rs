use proptest::prelude::*;

use polygb::conditions::{pi, primality_sufficient, prop21, thin_obstructions};
use polygb::gbasis::{buchberger, inner_2_minors, is_prime, is_quadratic_gb, GbOptions};
use polygb::geometry::{Isometry, Polyomino};
use polygb::io::{format_ascii, parse_ascii};
use polygb::lattice::LatticeBasis;
use polygb::orders::{MonomialOrder, OrderIndex, Parity, VertexOrder};

/// Grows a polyomino from one cell; each step picks an existing cell and a direction.
fn grown(max_rank: usize) -> impl Strategy<Value = Polyomino> {
    prop::collection::vec((any::<u16>(), 0u8..4), 0..max_rank).prop_map(|steps| {
        let mut cells = vec![(0i64, 0i64)];
        for (pick, dir) in steps {
            let (x, y) = cells[pick as usize % cells.len()];
            let next = match dir {
                0 => (x + 1, y),
                1 => (x - 1, y),
                2 => (x, y + 1),
                _ => (x, y - 1),
            };
            if !cells.contains(&next) {
                cells.push(next);
            }
        }
        Polyomino::from_coords(cells).unwrap()
    })
}

fn order(p: &Polyomino, i: u8) -> MonomialOrder {
    MonomialOrder::for_polyomino(p, OrderIndex::new(i).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quadratic_basis_matches_the_predicate(p in grown(9), i in 1u8..=8) {
        let oi = OrderIndex::new(i).unwrap();
        prop_assert_eq!(
            is_quadratic_gb(&p, &order(&p, i), &GbOptions::default()).unwrap(),
            prop21(&p, oi.parity())
        );
    }

    #[test]
    fn even_predicate_is_the_mirrored_odd_one(p in grown(12)) {
        let mirrored = p.transform(Isometry::MIRROR_X).polyomino;
        prop_assert_eq!(prop21(&p, Parity::Even), prop21(&mirrored, Parity::Odd));
    }

    #[test]
    fn thin_predicate_is_pattern_avoidance(p in grown(10)) {
        prop_assume!(p.is_thin());
        for parity in [Parity::Odd, Parity::Even] {
            prop_assert_eq!(prop21(&p, parity), thin_obstructions(&p, parity).unwrap().is_empty());
        }
    }

    #[test]
    fn thin_vertices_never_meet_opposite_conditions(p in grown(12)) {
        prop_assume!(p.is_thin());
        for v in p.vertices() {
            prop_assert!(!(pi(&p, v, 1).unwrap() && pi(&p, v, 3).unwrap()));
            prop_assert!(!(pi(&p, v, 5).unwrap() && pi(&p, v, 7).unwrap()));
        }
    }

    #[test]
    fn basis_lies_in_the_lattice_ideal(p in grown(9), i in 1u8..=8) {
        let gb = buchberger(inner_2_minors(&p), &order(&p, i), &GbOptions::default()).unwrap();
        let lattice = LatticeBasis::for_polyomino(&p);
        for g in gb.elements() {
            prop_assert!(g.is_oriented(gb.order()));
            prop_assert!(lattice.binomial_in_lattice_ideal(g).unwrap());
        }
        for m in inner_2_minors(&p) {
            prop_assert!(gb.contains(&m));
        }
    }

    #[test]
    fn basis_text_ignores_generator_order(p in grown(9), i in 1u8..=8, seed in any::<u64>()) {
        let gens = inner_2_minors(&p);
        let mut shuffled = gens.clone();
        let n = shuffled.len();
        if n > 1 {
            shuffled.rotate_left(seed as usize % n);
            shuffled.swap(0, (seed >> 32) as usize % n);
        }
        let o = order(&p, i);
        let opts = GbOptions::default();
        prop_assert_eq!(
            buchberger(gens, &o, &opts).unwrap().to_text(),
            buchberger(shuffled, &o, &opts).unwrap().to_text()
        );
    }

    #[test]
    fn rotated_order_keeps_the_vertex_minimal(p in grown(10), i in 1u8..=8, pick in any::<usize>()) {
        let vs = p.vertices();
        let v = vs[pick % vs.len()];
        let rotated = VertexOrder::for_polyomino(&p, OrderIndex::new(i).unwrap()).rotate(v).unwrap();
        prop_assert_eq!(rotated.min(), v);
    }

    #[test]
    fn ascii_round_trip(p in grown(16)) {
        prop_assert_eq!(parse_ascii(&format_ascii(&p)).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn primality_is_isometry_invariant(p in grown(8), k in 0usize..8) {
        let opts = GbOptions::default();
        let image = p.transform(Isometry::ALL[k]).polyomino;
        prop_assert_eq!(is_prime(&p, &opts).unwrap().prime, is_prime(&image, &opts).unwrap().prime);
    }

    #[test]
    fn certified_polyominoes_are_prime(p in grown(10)) {
        prop_assume!(primality_sufficient(&p).is_certified());
        prop_assert!(is_prime(&p, &GbOptions::default()).unwrap().prime);
    }

    #[test]
    fn simple_polyominoes_are_prime(p in grown(9)) {
        prop_assume!(p.is_simple());
        prop_assert!(is_prime(&p, &GbOptions::default()).unwrap().prime);
    }
}
