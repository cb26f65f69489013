use std::cmp::Ordering;

use hesitant_core::relations::{element_relation, RelationKind};
use hesitant_core::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn degree() -> impl Strategy<Value = Degree> {
    prop_oneof![
        (0u64..=100).prop_map(|n| Degree::new(n, 100).unwrap()),
        (1u64..=12).prop_flat_map(|d| (0..=d).prop_map(move |n| Degree::new(n, d).unwrap())),
    ]
}

fn hfe() -> impl Strategy<Value = Hfe> {
    prop::collection::vec(degree(), 1..7).prop_map(|d| Hfe::new(d).unwrap())
}

fn hfs(n: usize) -> impl Strategy<Value = Hfs> {
    prop::collection::vec(hfe(), n).prop_map(move |m| Hfs::from_hfes(Universe::numbered(n), m).unwrap())
}

fn kind() -> impl Strategy<Value = RelationKind> {
    prop::sample::select(RelationKind::ALL.to_vec())
}

fn ratio(d: Degree) -> BigRational {
    BigRational::new(BigInt::from(d.numer()), BigInt::from(d.denom()))
}

fn term(depth: u32) -> impl Strategy<Value = laws::Term> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["A", "B", "C"]).prop_map(|v| laws::Term::Var(v.into())),
        Just(laws::Term::FoldUnion("F".into())),
        Just(laws::Term::FoldInter("F".into())),
    ];
    leaf.prop_recursive(depth, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.cup(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.cap(b)),
            inner.prop_map(|a| a.c()),
        ]
    })
}

proptest! {
    #[test]
    fn degrees_print_and_parse_back(d in degree()) {
        prop_assert_eq!(parse_degree(&d.to_string()).unwrap(), d);
        prop_assert_eq!(d.complement().complement(), d);
    }

    #[test]
    fn union_keeps_degrees_above_both_lower_bounds(a in hfe(), b in hfe()) {
        let u = a.union(&b);
        let cut = a.lower().max(b.lower());
        prop_assert_eq!(u.lower(), cut);
        prop_assert_eq!(u.upper(), a.upper().max(b.upper()));
        for &d in a.degrees().iter().chain(b.degrees()) {
            let want = a.multiplicity(d) * usize::from(d >= cut) + b.multiplicity(d) * usize::from(d >= cut);
            prop_assert_eq!(u.multiplicity(d), want);
        }
    }

    #[test]
    fn intersection_is_dual_to_union(a in hfe(), b in hfe()) {
        let i = a.intersection(&b);
        prop_assert_eq!(i.upper(), a.upper().min(b.upper()));
        prop_assert_eq!(i.complement(), a.complement().union(&b.complement()));
        prop_assert!(i.len() <= a.len() + b.len());
    }

    #[test]
    fn mean_comparison_is_exact(a in hfe(), b in hfe()) {
        prop_assert_eq!(a.mean_cmp(&b), a.mean().cmp(&b.mean()));
        let sum: BigRational = a.degrees().iter().map(|&d| ratio(d)).sum();
        prop_assert_eq!(a.mean() * BigRational::from_integer(a.len().into()), sum);
    }

    #[test]
    fn profiles_respect_the_implication_lattice(a in hfe(), b in hfe()) {
        let p = relation_profile(&a, &b);
        prop_assert!(p.is_consistent());
        prop_assert!(!(p.t && element_relation(RelationKind::T, &b, &a)));
        prop_assert_eq!(p.m, a.mean_cmp(&b) != Ordering::Greater);
    }

    #[test]
    fn strong_equality_is_multiset_equality(a in hfe(), b in hfe()) {
        let both = element_relation(RelationKind::S, &a, &b) && element_relation(RelationKind::S, &b, &a);
        prop_assert_eq!(both, a == b);
        prop_assert!(element_relation(RelationKind::S, &a, &a));
    }

    #[test]
    fn sot_matches_best_subsequences(a in hfe(), b in hfe()) {
        let q = a.len().min(b.len());
        let best = relations::dominates(
            best_q_subsequence(&a, q).unwrap().degrees(),
            best_q_subsequence(&b, q).unwrap().degrees(),
        ).unwrap();
        prop_assert_eq!(classify_sot(&a, &b).holds(), best);
        let w = best_q_subsequence(&b, q).unwrap();
        prop_assert!(is_subsequence(&w, &b));
    }

    #[test]
    fn set_relations_are_pointwise(k in kind(), a in hfs(3), b in hfs(3)) {
        let pointwise = (0..3).all(|x| element_relation(k, a.at(x), b.at(x)));
        prop_assert_eq!(set_relation(k, &a, &b).unwrap(), pointwise);
        if k != RelationKind::T {
            prop_assert_eq!(
                set_equality(k, &a, &b).unwrap(),
                set_relation(k, &a, &b).unwrap() && set_relation(k, &b, &a).unwrap()
            );
        }
    }

    #[test]
    fn documents_round_trip(a in hfs(3), b in hfs(3)) {
        let mut doc = Document::new(Universe::numbered(3));
        doc.insert_set("A", a).unwrap();
        doc.insert_set("B", b).unwrap();
        doc.insert_family("F", vec!["A".into(), "B".into()]).unwrap();
        let text = doc.to_json();
        let back = Document::from_json(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn expressions_print_and_parse_back(t in term(4)) {
        let text = t.to_string();
        prop_assert_eq!(parse_expr(&text).unwrap(), t);
    }

    #[test]
    fn expressions_evaluate_like_library_calls(a in hfs(2), b in hfs(2), c in hfs(2)) {
        let mut doc = Document::new(Universe::numbered(2));
        for (n, s) in [("A", &a), ("B", &b), ("C", &c)] {
            doc.insert_set(n, s.clone()).unwrap();
        }
        doc.insert_family("F", vec!["A".into(), "B".into(), "C".into()]).unwrap();
        let (_, got) = eval_expr(&doc, "(A ∪ B ∩ C')ᶜ").unwrap();
        let want = a.union(&b.intersection(&c.complement()).unwrap()).unwrap().complement();
        prop_assert_eq!(got, want);
        let (_, folded) = eval_expr(&doc, "⋃F").unwrap();
        prop_assert_eq!(folded, a.union(&b).unwrap().union(&c).unwrap());
    }
}
