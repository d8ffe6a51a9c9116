use proptest::prelude::*;

use kschub::bijections::{partial_inverse, partial_map, phi, phi_t_fiber, tau};
use kschub::fillings::{enumerate, validate, Constraint, FillingClass};
use kschub::inflated::{enumerate_augmented, inflated_weight, AugmentedKind, TopConstraint};
use kschub::rsk::insertion_filling;
use kschub::shapes::subpartitions;
use kschub::symfunc::{change_basis, multiply, Basis, GradedExpansion};
use kschub::{Filling, Partition, SkewShape};

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn class() -> impl Strategy<Value = FillingClass> {
    prop_oneof![Just(FillingClass::Ssyt), Just(FillingClass::Tabloid), Just(FillingClass::Svt), Just(FillingClass::Rpp),]
}

/// Some filling of a random shape inside a 3x3 box, or `None` if the shape
/// has none with entries at most 3.
fn some_filling(outer: &Partition, pick: usize, class: FillingClass) -> Option<Filling> {
    let inner = if class == FillingClass::Tabloid {
        Partition::empty()
    } else {
        let subs = subpartitions(outer);
        subs[pick % subs.len()].clone()
    };
    let shape = SkewShape::new(outer.clone(), inner).unwrap();
    let all = enumerate(&shape, class, &Constraint::MaxEntry(3)).unwrap();
    (!all.is_empty()).then(|| all[pick % all.len()].clone())
}

fn expansion(basis: Basis, d: usize) -> impl Strategy<Value = GradedExpansion> {
    prop::collection::vec((partition(3, 3), -3i64..=3), 0..4).prop_map(move |terms| {
        let mut e = GradedExpansion::zero(basis, d);
        for (p, c) in terms {
            if p.size() <= d {
                e.add_term(&p, c.into());
            }
        }
        e
    })
}

fn basis() -> impl Strategy<Value = Basis> {
    prop_oneof![Just(Basis::M), Just(Basis::H), Just(Basis::S), Just(Basis::BigG), Just(Basis::SmallG)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(p in partition(6, 6)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn insertion_gives_ssyt_with_same_content(w in prop::collection::vec(1u32..=5, 0..10)) {
        let t = insertion_filling(&w);
        prop_assert!(validate(&t, FillingClass::Ssyt));
        prop_assert_eq!(t.total_entries(), w.len());
        for x in 1..=5 {
            let n = t.cells().flat_map(|(_, e)| e.iter()).filter(|&&y| y == x).count();
            prop_assert_eq!(n, w.iter().filter(|&&y| y == x).count());
        }
    }

    #[test]
    fn notation_and_json_round_trip(outer in partition(3, 3), pick in 0usize..1000, class in class()) {
        if let Some(f) = some_filling(&outer, pick, class) {
            prop_assert_eq!(Filling::from_notation(&f.to_notation()).unwrap(), f.clone());
            let text = serde_json::to_string(&f).unwrap();
            prop_assert_eq!(serde_json::from_str::<Filling>(&text).unwrap(), f);
        }
    }

    #[test]
    fn partial_map_inverts(outer in partition(3, 3), pick in 0usize..1000) {
        if let Some(r) = some_filling(&outer, pick, FillingClass::Rpp) {
            let a = partial_map(&r).unwrap();
            prop_assert_eq!(partial_inverse(&a, &inflated_weight(&a)).unwrap(), r);
        }
    }

    #[test]
    fn phi_lands_in_its_fiber(outer in partition(3, 3), pick in 0usize..1000) {
        if let Some(s) = some_filling(&outer, pick, FillingClass::Svt) {
            if s.is_straight() {
                let p = phi(&s).unwrap();
                prop_assert!(validate(&p.elegant, FillingClass::Elegant));
                let eta = s.straight_shape().unwrap();
                prop_assert!(phi_t_fiber(&p.terminal, &eta).unwrap().contains(&s));
            }
        }
    }

    #[test]
    fn tau_is_an_involution_at_size_seven(nu in partition(4, 4), pick in 0usize..100_000) {
        prop_assume!(nu.size() == 7);
        let subs = subpartitions(&nu);
        let lambda = &subs[pick % subs.len()];
        let all = enumerate_augmented(lambda, AugmentedKind::Svt, &nu, &TopConstraint::AnyShape, None).unwrap();
        prop_assume!(!all.is_empty());
        let a = &all[pick % all.len()];
        let out = tau(a).unwrap();
        prop_assert_eq!(tau(&out.result).unwrap().result, a.clone());
        prop_assert_eq!(inflated_weight(&out.result), nu);
    }

    #[test]
    fn multiplication_commutes(a in expansion(Basis::BigG, 5), b in expansion(Basis::SmallG, 5)) {
        let (ab, ba) = (multiply(&a, &b).unwrap(), multiply(&b, &a).unwrap());
        prop_assert_eq!(ab.coeffs(), ba.coeffs());
    }

    #[test]
    fn change_basis_round_trips(e in expansion(Basis::S, 5), target in basis()) {
        let there = change_basis(&e, target).unwrap();
        let back = change_basis(&there, Basis::S).unwrap();
        prop_assert_eq!(back.coeffs(), e.coeffs());
    }
}
