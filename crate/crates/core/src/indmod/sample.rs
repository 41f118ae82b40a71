//! Random test vectors.

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::Rng;

use super::lemmas::Row;
use super::vacuum::enumerate_basis;
use super::{IndVector, InducedModule, ModuleKind};
use crate::algebra::Generator;
use crate::exponents::{ExponentVector, Triple};
use crate::scalars::Scalar;

fn nonzero_coeff<R: Rng>(rng: &mut R) -> Scalar {
    let n = rng.gen_range(1..=4);
    Scalar::from_int(if rng.gen_bool(0.5) { n } else { -n })
}

/// A uniformly chosen vector of the given weight.
fn random_vector<R: Rng>(rng: &mut R, w: u64) -> ExponentVector {
    ExponentVector::all_of_weight(w)
        .choose(rng)
        .cloned()
        .unwrap_or_default()
}

/// A random triple of total weight `w`, with component `forced` (if any)
/// of weight at least one and components in `zero` empty.
fn random_triple<R: Rng>(rng: &mut R, w: u64, forced: Option<usize>, zero: &[usize]) -> Triple {
    let mut weights = [0u64; 3];
    let mut rem = w;
    if let Some(n) = forced {
        weights[n] = 1;
        rem -= 1;
    }
    let free: Vec<usize> = (0..3).filter(|n| !zero.contains(n)).collect();
    for _ in 0..rem {
        weights[*free.choose(rng).expect("some component is free")] += 1;
    }
    Triple(
        random_vector(rng, weights[0]),
        random_vector(rng, weights[1]),
        random_vector(rng, weights[2]),
    )
}

/// A sorted coefficient word of length at most `max_len`.
fn coefficient_word<R: Rng>(module: &InducedModule, rng: &mut R, max_len: usize) -> Vec<Generator> {
    let gens = module.coefficient_generators();
    if gens.is_empty() || matches!(module.kind(), ModuleKind::Opaque { .. }) {
        return Vec::new();
    }
    let len = rng.gen_range(0..=max_len);
    let mut w: Vec<Generator> = (0..len).map(|_| *gens.choose(rng).expect("nonempty")).collect();
    let order = module.kind().generator_order();
    w.sort_by(|a, b| order.compare(*a, *b));
    w
}

/// A random combination of up to `terms` basis vectors with prefix weight at
/// most `max_weight`.
pub fn sample_vector<R: Rng>(module: &InducedModule, rng: &mut R, max_weight: u64, terms: usize) -> IndVector {
    let mut v = IndVector::zero();
    for _ in 0..rng.gen_range(1..=terms) {
        let w = rng.gen_range(0..=max_weight);
        let t = random_triple(rng, w, None, &[]);
        let cw = coefficient_word(module, rng, 2);
        let b = module.basis_vector(&t, &cw).expect("basis vectors normalize");
        v = v.add(&b.scale(&nonzero_coeff(rng)));
    }
    if v.is_zero() {
        module.cyclic()
    } else {
        v
    }
}

/// A vector whose degree has the shape required by `row`, plus up to three
/// strictly lower terms.
pub fn sample_lemma_vector<R: Rng>(module: &InducedModule, row: Row, rng: &mut R, max_weight: u64) -> IndVector {
    let (forced, zero): (usize, &[usize]) = match row {
        Row::G => (2, &[]),
        Row::J => (1, &[2]),
        Row::L => (0, &[1, 2]),
    };
    let w = rng.gen_range(1..=max_weight);
    let lead = random_triple(rng, w, Some(forced), zero);
    let cw = coefficient_word(module, rng, 2);
    let mut v = module
        .basis_vector(&lead, &cw)
        .expect("basis vectors normalize")
        .scale(&nonzero_coeff(rng));
    let order = module.degree_order();
    let extra = rng.gen_range(0..=3);
    let mut added = 0;
    for _ in 0..40 {
        if added == extra {
            break;
        }
        let tw = rng.gen_range(0..=max_weight);
        let t = random_triple(rng, tw, None, &[]);
        if order.compare_triples(&t, &lead) != Ordering::Less {
            continue;
        }
        let cw = coefficient_word(module, rng, 2);
        let b = module.basis_vector(&t, &cw).expect("basis vectors normalize");
        v = v.add(&b.scale(&nonzero_coeff(rng)));
        added += 1;
    }
    v
}

/// A random combination of vacuum basis vectors of degree at most `max_degree`.
pub fn sample_vacuum_vector<R: Rng>(module: &InducedModule, rng: &mut R, max_degree: u32) -> IndVector {
    let mut v = IndVector::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let n = rng.gen_range(0..=max_degree);
        let basis = enumerate_basis(n);
        let word = basis.choose(rng).expect("every degree has a basis vector");
        let b = module.word_vector(word).expect("basis words normalize");
        v = v.add(&b.scale(&nonzero_coeff(rng)));
    }
    if v.is_zero() {
        module.cyclic()
    } else {
        v
    }
}
