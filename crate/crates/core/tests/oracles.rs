//! Values computed independently (by hand or with a separate script) and
//! frozen here.

use ehv_core::algebra::homomorphism_defects;
use ehv_core::indmod::{enumerate_basis, graded_dimension, truncated_injectivity, vacuum_degree};
use ehv_core::suites::{product_formula_dimensions, vacuum_dimension_check};
use ehv_core::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use Generator::*;

// series expansion of prod_{n>=2}(1-q^n)^-1 prod_{n>=1}(1-q^n)^-2, done by hand
const DIMS: [u64; 9] = [1, 2, 6, 13, 29, 57, 113, 208, 381];

#[test]
fn graded_dimensions() {
    assert_eq!(product_formula_dimensions(8), DIMS);
    for (n, d) in DIMS.iter().enumerate() {
        assert_eq!(graded_dimension(n as u32) as u64, *d, "degree {n}");
    }
    assert!(vacuum_dimension_check(8).passed());
}

#[test]
fn basis_words_have_their_degree_and_are_distinct() {
    for n in 0..=6 {
        let words = enumerate_basis(n);
        let set: std::collections::BTreeSet<_> = words.iter().cloned().collect();
        assert_eq!(set.len(), words.len());
        assert!(words.iter().all(|w| vacuum_degree(w) == n as i64));
    }
}

#[test]
fn flip_defect_is_m_squared_times_relation() {
    // phi_4 on (L_m, J_{-m}) misses m^2 (ell3 - 2 ell2) before the relation
    let defects = homomorphism_defects(Phi::Flip, 4, &Bindings::new()).unwrap();
    let rel = &Scalar::param(Param::Ell3) - &(&Scalar::from_int(2) * &Scalar::param(Param::Ell2));
    for m in -4..=4i64 {
        let d = defects.iter().find(|d| d.x == L(m) && d.y == J(-m)).unwrap();
        assert!(d.body.is_zero());
        assert_eq!(d.constant, &Scalar::from_int(m * m) * &rel, "m = {m}");
    }
}

#[test]
fn l1_on_a_j_prefix() {
    // L_1 J_{-2} w = J_{-2} L_1 w + 2 J_{-1} w, both J_{-1} and L_1 lying in L_d for d = 1
    let m = InducedModule::new(ModuleKind::Universal { k: 1, d: 1, l: 4 }, Bindings::new()).unwrap();
    let v = m.word_vector(&[J(-2)]).unwrap();
    let got = m.act(L(1), &v).unwrap();
    let want = m
        .word_vector(&[J(-2), L(1)])
        .unwrap()
        .add(&m.word_vector(&[J(-1)]).unwrap().scale(&Scalar::from_int(2)));
    assert_eq!(got, want);
}

#[test]
fn injectivity_ranks() {
    // the coefficient module of (1,0,2) is spanned by words in G_0, G_1, J_0, J_1, L_0, L_1, L_2;
    // words of length <= 2 number 1 + 7 + 28 = 36
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let kind = ModuleKind::Universal { k: 1, d: 0, l: 2 };
    let out = truncated_injectivity(kind, L(2), 2, &mut rng).unwrap();
    assert_eq!(out.basis_size, 36);
    assert!(out.injective());
}
