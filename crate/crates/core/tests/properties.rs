use std::cmp::Ordering;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ehv_core::algebra::closure_violation;
use ehv_core::indmod::{lemma_degree_check, module_axiom_check, sample_lemma_vector, sample_vector};
use ehv_core::*;

const PARAMS: [Param; 6] = [
    Param::Alpha,
    Param::Beta,
    Param::F,
    Param::Ell1,
    Param::Ell2,
    Param::Ell3,
];

fn scalar() -> impl Strategy<Value = Scalar> {
    let term = (-5i64..=5, 1i64..=4, prop::collection::vec((0usize..6, 0u32..3), 0..3));
    prop::collection::vec(term, 0..4).prop_map(|terms| {
        let mut out = Scalar::zero();
        for (num, den, powers) in terms {
            let mut t = Scalar::from_frac(num, den);
            for (p, e) in powers {
                t = &t * &Scalar::param(PARAMS[p]).pow(e);
            }
            out = &out + &t;
        }
        out
    })
}

fn bindings() -> impl Strategy<Value = Bindings> {
    prop::collection::vec((0usize..6, -4i64..=4), 0..4).prop_map(|bs| {
        let mut b = Bindings::new();
        for (p, v) in bs {
            b.insert(PARAMS[p], Scalar::from_int(v));
        }
        b
    })
}

fn vector() -> impl Strategy<Value = ExponentVector> {
    prop::collection::vec(0u32..3, 0..4).prop_map(|m| ExponentVector::from_slice(&m))
}

fn triple() -> impl Strategy<Value = Triple> {
    (vector(), vector(), vector()).prop_map(|(a, b, c)| Triple(a, b, c))
}

fn generator(w: i64) -> impl Strategy<Value = Generator> {
    (0usize..3, -w..=w).prop_map(|(k, n)| Kind::ALL[k].at(n))
}

fn word(w: i64, max: usize) -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec(generator(w), 1..=max)
}

const TRIPLE_ORDERS: [OrderKind; 3] = [
    OrderKind::PrincipalO,
    OrderKind::PrincipalOTail,
    OrderKind::PrincipalOPrime,
];

fn cmp(o: OrderKind, x: &Triple, y: &Triple) -> Ordering {
    o.compare_triples(x, y)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn substitution_is_a_ring_map(a in scalar(), b in scalar(), bind in bindings()) {
        prop_assert_eq!((&a * &b).substitute(&bind), &a.substitute(&bind) * &b.substitute(&bind));
        prop_assert_eq!((&a + &b).substitute(&bind), &a.substitute(&bind) + &b.substitute(&bind));
    }

    #[test]
    fn vector_orders_are_total(x in vector(), y in vector(), z in vector()) {
        for o in [OrderKind::Lex, OrderKind::Revlex] {
            prop_assert_eq!(o.compare_vectors(&x, &y), o.compare_vectors(&y, &x).reverse());
            prop_assert_eq!(o.compare_vectors(&x, &y) == Ordering::Equal, x == y);
            if o.compare_vectors(&x, &y) != Ordering::Less && o.compare_vectors(&y, &z) != Ordering::Less {
                prop_assert_ne!(o.compare_vectors(&x, &z), Ordering::Less);
            }
        }
    }

    #[test]
    fn triple_orders_are_total(x in triple(), y in triple(), z in triple()) {
        for o in TRIPLE_ORDERS {
            prop_assert_eq!(cmp(o, &x, &y), cmp(o, &y, &x).reverse());
            prop_assert_eq!(cmp(o, &x, &y) == Ordering::Equal, x == y);
            if cmp(o, &x, &y) != Ordering::Less && cmp(o, &y, &z) != Ordering::Less {
                prop_assert_ne!(cmp(o, &x, &z), Ordering::Less);
            }
        }
    }

    #[test]
    fn principal_order_leads_with_weight(x in triple(), y in triple(), n in 0usize..3, s in 1usize..4) {
        if cmp(OrderKind::PrincipalO, &x, &y) == Ordering::Greater {
            prop_assert!(x.total_weight() >= y.total_weight());
        }
        let mut bigger = x.clone();
        match n {
            0 => bigger.0.add_at(s, 1),
            1 => bigger.1.add_at(s, 1),
            _ => bigger.2.add_at(s, 1),
        }
        prop_assert!(bigger.total_weight() > x.total_weight());
        for o in [OrderKind::PrincipalO, OrderKind::PrincipalOTail, OrderKind::PrincipalOPrime] {
            prop_assert_eq!(cmp(o, &bigger, &x), Ordering::Greater);
        }
    }

    #[test]
    fn brackets_are_skew(x in generator(8), y in generator(8)) {
        let spec = AlgebraSpec::ehv();
        prop_assert_eq!(spec.bracket_gens(x, y).unwrap(), spec.bracket_gens(y, x).unwrap().scale(&Scalar::from_int(-1)));
    }

    #[test]
    fn shifts_compose(p in -4i64..=4, q in -4i64..=4, g in generator(6)) {
        let twice = Phi::Shift(p).apply(&Phi::Shift(q).apply_gen(g));
        prop_assert_eq!(twice, Phi::Shift(p + q).apply_gen(g));
    }

    #[test]
    fn subalgebras_are_closed(d in 0u32..3, d1 in 0u32..3, d2 in 0u32..3, k in 0i64..3, l in 0i64..3, m in 0i64..3) {
        // the positive part is only a subalgebra when beta = alpha
        let vacuum = AlgebraSpec::ehv_with(Bindings::new().with(Param::Beta, Scalar::param(Param::Alpha)));
        prop_assert!(closure_violation(&vacuum, &SubalgebraSpec::Plus, 5).unwrap().is_none());
        // and the two-threshold one needs F = 0
        let f0 = AlgebraSpec::ehv_with(Bindings::new().with(Param::F, 0));
        let bar = SubalgebraSpec::LdBar { d1, d2 };
        prop_assert!(closure_violation(&f0, &bar, 5).unwrap().is_none());
        let spec = AlgebraSpec::ehv();
        for s in [
            SubalgebraSpec::Minus,
            SubalgebraSpec::Ld { d },
            SubalgebraSpec::Fin { k, l, m },
        ] {
            let bad = closure_violation(&spec, &s, 5).unwrap();
            prop_assert!(bad.is_none(), "{} {:?}", s.name(), bad);
        }
    }

    #[test]
    fn normal_forms(w in word(4, 4)) {
        let spec = AlgebraSpec::ehv();
        let mut n31 = Normalizer::new(spec.clone(), GeneratorOrder::order_31());
        let mut n32 = Normalizer::new(spec, GeneratorOrder::order_32());
        let e = n31.normalize(&w).unwrap();
        prop_assert_eq!(n31.normalize_element(&e).unwrap(), e.clone());
        prop_assert!(e.iter().all(|(m, _)| m.len() <= w.len()));
        prop_assert!(e.iter().all(|(m, _)| n31.order().is_sorted(&m.word)));
        let there = n32.normalize_element(&e).unwrap();
        prop_assert_eq!(&there, &n32.normalize(&w).unwrap());
        prop_assert_eq!(n31.normalize_element(&there).unwrap(), e);
    }

    #[test]
    fn associativity(a in word(3, 3), b in word(3, 3), c in word(3, 3)) {
        let mut n = Normalizer::new(AlgebraSpec::ehv(), GeneratorOrder::order_31());
        let (ea, eb, ec) = (n.normalize(&a).unwrap(), n.normalize(&b).unwrap(), n.normalize(&c).unwrap());
        let ab = n.multiply(&ea, &eb).unwrap();
        let bc = n.multiply(&eb, &ec).unwrap();
        prop_assert_eq!(n.multiply(&ab, &ec).unwrap(), n.multiply(&ea, &bc).unwrap());
        let mut whole = a.clone();
        whole.extend(&b);
        whole.extend(&c);
        prop_assert_eq!(n.multiply(&ab, &ec).unwrap(), n.normalize(&whole).unwrap());
    }

    #[test]
    fn commutator_relation(x in generator(6), y in generator(6)) {
        let mut n = Normalizer::new(AlgebraSpec::ehv(), GeneratorOrder::order_32());
        let got = n.normalize(&[x, y]).unwrap().sub(&n.normalize(&[y, x]).unwrap());
        prop_assert_eq!(got, UEElement::from_lie(&AlgebraSpec::ehv().bracket_gens(x, y).unwrap()));
    }
}

fn module_kinds() -> impl Strategy<Value = ModuleKind> {
    prop_oneof![
        Just(ModuleKind::Vacuum),
        (0i64..3, 0u32..3, 1i64..4).prop_filter_map("thresholds", |(k, d, extra)| {
            let kd = k + d as i64;
            (kd > 0).then_some(ModuleKind::Universal { k, d, l: kd + extra })
        }),
        (0i64..3, 0i64..3, 0i64..3).prop_map(|(k, l, m)| ModuleKind::Restricted { k, l, m }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn module_axiom_everywhere(kind in module_kinds(), seed in any::<u64>(), g in generator(4), h in generator(4)) {
        let m = InducedModule::new(kind, Bindings::new()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cases: Vec<_> = (0..4).map(|_| (g, h, sample_vector(&m, &mut rng, 3, 2))).collect();
        let r = module_axiom_check(&m, &cases);
        prop_assert!(r.passed(), "{}", r.to_json());
    }

    #[test]
    fn lemma_rows_predict_degree(kind in module_kinds(), seed in any::<u64>()) {
        if let ModuleKind::Universal { .. } = kind {
            let m = InducedModule::new(kind, Bindings::new()).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for row in Row::ALL {
                let vs: Vec<_> = (0..5).map(|_| sample_lemma_vector(&m, row, &mut rng, 4)).collect();
                let r = lemma_degree_check(&m, row, &vs);
                prop_assert!(r.passed(), "{}", r.to_json());
            }
        }
    }
}
