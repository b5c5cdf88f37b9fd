use std::collections::BTreeSet;

use arrangement_lab::arrangement::{check_simple, CellSignature};
use arrangement_lab::constructions::random_simple_arrangement;
use arrangement_lab::exact::{binomial, Rational};
use arrangement_lab::statistics::{analyze, verify_structure};
use arrangement_lab::{Arrangement, Hyperplane};
use proptest::prelude::*;

fn signatures(arr: &Arrangement) -> BTreeSet<String> {
    analyze(arr).unwrap().cells.iter().map(|c| c.signature.to_string()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relabeling_permutes_signatures(seed in 0u64..10_000, n in 4usize..7, rot in 0usize..7) {
        let arr = random_simple_arrangement(2, n, seed, 50).unwrap();
        let perm: Vec<usize> = (0..n).map(|i| (i + rot) % n).collect();
        let moved = arr.select(&perm).unwrap();
        let a = analyze(&arr).unwrap();
        let b = analyze(&moved).unwrap();
        prop_assert_eq!(a.average_diameter(), b.average_diameter());
        prop_assert_eq!(a.class_counts(), b.class_counts());
        let mapped: BTreeSet<String> = a
            .cells
            .iter()
            .map(|c| CellSignature::new(perm.iter().map(|&i| c.signature.get(i)).collect()).unwrap().to_string())
            .collect();
        prop_assert_eq!(mapped, signatures(&moved));
    }

    #[test]
    fn positive_rescaling_changes_nothing(seed in 0u64..10_000, k in 2i64..9) {
        let arr = random_simple_arrangement(2, 5, seed, 50).unwrap();
        let scaled: Vec<Hyperplane> = arr
            .hyperplanes()
            .iter()
            .map(|h| Hyperplane::new(h.a.scale(&Rational::from(k)), &h.b * &Rational::from(k)))
            .collect();
        let scaled = Arrangement::new(2, scaled).unwrap();
        prop_assert_eq!(signatures(&arr), signatures(&scaled));
    }

    #[test]
    fn planar_universals(seed in 0u64..10_000, n in 3usize..8) {
        let arr = random_simple_arrangement(2, n, seed, 100).unwrap();
        prop_assert!(check_simple(&arr).is_simple);
        let a = analyze(&arr).unwrap();
        let r = verify_structure(&a);
        prop_assert!(r.passed(), "{:?}", r.notes);
        let i = Rational::from(a.bounded_cell_count() as i64);
        let f1 = a.bounded_face_count().unwrap() as i64;
        let rhs = Rational::new(2 * f1 - a.external_face_count().unwrap() as i64 - a.p_odd().unwrap() as i64, 2);
        prop_assert_eq!(&i * &a.average_diameter(), rhs);
        prop_assert_eq!(f1 as usize, n * (n - 2));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn spatial_universals(seed in 0u64..10_000, n in 4usize..7) {
        let arr = random_simple_arrangement(3, n, seed, 100).unwrap();
        let a = analyze(&arr).unwrap();
        let r = verify_structure(&a);
        prop_assert!(r.passed(), "{:?}", r.notes);
        prop_assert_eq!(a.bounded_face_count().unwrap() as u64, n as u64 * binomial(n as u64 - 2, 2));
        for c in &a.cells {
            prop_assert!(c.diameter < 2 * c.facet_count / 3);
        }
    }
}

#[test]
fn random_generation_is_reproducible() {
    let a = random_simple_arrangement(3, 6, 42, 100).unwrap();
    let b = random_simple_arrangement(3, 6, 42, 100).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_ne!(a.to_json(), random_simple_arrangement(3, 6, 43, 100).unwrap().to_json());
    for h in a.hyperplanes() {
        assert!(h.a.iter().chain([&h.b]).all(|q| q.is_integer() && q.abs() <= Rational::from(100)));
    }
}
