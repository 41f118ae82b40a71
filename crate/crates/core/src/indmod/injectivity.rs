//! Injectivity of a generator on the length-truncated coefficient module,
//! certified by a rank computation modulo a large prime at a random integer
//! specialization of the parameters.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use super::{InducedModule, ModuleKind};
use crate::algebra::{Generator, Level};
use crate::error::{Error, Result};
use crate::pbw::UEMonomial;
use crate::scalars::{Bindings, Param, Scalar};

/// `2^61 - 1`.
pub const MODULUS: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, MODULUS - 2)
}

fn reduce(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(MODULUS))
        .to_u64()
        .expect("reduced below modulus")
}

fn scalar_mod(c: &Scalar) -> Result<u64> {
    let q = c
        .as_constant()
        .ok_or_else(|| Error::Invalid(format!("coefficient {c} is not a constant after specialization")))?;
    let den = reduce(q.denom());
    if den == 0 {
        return Err(Error::Invalid(format!("denominator of {q} vanishes modulo the prime")));
    }
    Ok(mul_mod(reduce(q.numer()), inv_mod(den)))
}

/// Rank of a list of sparse rows over `Z/p`.
fn rank_mod(rows: Vec<BTreeMap<usize, u64>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
    for mut row in rows {
        while let Some((&col, &val)) = row.iter().next() {
            match pivots.get(&col) {
                None => {
                    let inv = inv_mod(val);
                    for x in row.values_mut() {
                        *x = mul_mod(*x, inv);
                    }
                    pivots.insert(col, row);
                    break;
                }
                Some(p) => {
                    // row -= val * p, with p normalized to leading 1
                    for (&c, &x) in p {
                        let sub = mul_mod(val, x);
                        let e = row.entry(c).or_insert(0);
                        *e = (*e + MODULUS - sub) % MODULUS;
                        if *e == 0 {
                            row.remove(&c);
                        }
                    }
                }
            }
        }
    }
    pivots.len()
}

#[derive(Clone, Debug, Serialize)]
pub struct InjectivityOutcome {
    pub operator: String,
    pub max_len: usize,
    pub basis_size: usize,
    pub rank: usize,
    pub specialization: Bindings,
}

impl InjectivityOutcome {
    pub fn injective(&self) -> bool {
        self.rank == self.basis_size
    }
}

fn multisets(gens: &[Generator], max_len: usize) -> Vec<Vec<Generator>> {
    fn rec(gens: &[Generator], start: usize, left: usize, cur: &mut Vec<Generator>, out: &mut Vec<Vec<Generator>>) {
        out.push(cur.clone());
        if left == 0 {
            return;
        }
        for i in start..gens.len() {
            cur.push(gens[i]);
            rec(gens, i, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(gens, 0, max_len, &mut Vec::new(), &mut out);
    out
}

/// Checks that `op` (a generator of the inducing subalgebra) is injective on
/// the span of coefficient words of length at most `max_len`, for the
/// universal module `kind`.
pub fn truncated_injectivity<R: Rng>(
    kind: ModuleKind,
    op: Generator,
    max_len: usize,
    rng: &mut R,
) -> Result<InjectivityOutcome> {
    if !matches!(kind, ModuleKind::Universal { .. }) {
        return Err(Error::Invalid(
            "injectivity is checked on the universal coefficient module".into(),
        ));
    }
    let pick = |rng: &mut R| Scalar::from_int(rng.gen_range(2..1_000_000));
    let specialization = Bindings::new()
        .with(Param::Alpha, pick(rng))
        .with(Param::Beta, pick(rng))
        .with(Param::F, pick(rng));
    let level = Level::new(pick(rng), pick(rng), pick(rng));
    let module = InducedModule::with_level(kind, specialization.clone(), level, 8)?;
    if !module.in_coefficient_part(op) && !module.annihilates(op) {
        return Err(Error::Invalid(format!("{op} does not act on the coefficient module")));
    }
    let mut gens = module.coefficient_generators();
    let basis = multisets(&gens, max_len);
    gens.shuffle(rng);
    let mut columns: BTreeMap<UEMonomial, usize> = BTreeMap::new();
    let mut rows = Vec::with_capacity(basis.len());
    for word in &basis {
        let v = module.word_vector(word)?;
        let image = module.act(op, &v)?;
        let coeffs = module
            .v_part(&image)
            .ok_or_else(|| Error::Invalid(format!("{op} moved {word:?} out of the coefficient module")))?;
        let mut row = BTreeMap::new();
        for (m, c) in coeffs.iter() {
            let next = columns.len();
            let col = *columns.entry(m.clone()).or_insert(next);
            let x = scalar_mod(c)?;
            if x != 0 {
                row.insert(col, x);
            }
        }
        rows.push(row);
    }
    Ok(InjectivityOutcome {
        operator: op.to_string(),
        max_len,
        basis_size: basis.len(),
        rank: rank_mod(rows),
        specialization,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rank_of_small_matrices() {
        let row = |v: &[(usize, u64)]| v.iter().copied().collect::<BTreeMap<_, _>>();
        assert_eq!(rank_mod(vec![row(&[(0, 1), (1, 2)]), row(&[(0, 2), (1, 4)])]), 1);
        assert_eq!(rank_mod(vec![row(&[(0, 1)]), row(&[(1, 3)]), row(&[])]), 2);
        assert_eq!(inv_mod(3) * 3 % MODULUS, 1);
    }

    #[test]
    fn g_k_is_injective_to_length_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let kind = ModuleKind::Universal { k: 1, d: 0, l: 2 };
        let out = truncated_injectivity(kind, Generator::G(1), 2, &mut rng).unwrap();
        assert!(out.injective(), "{out:?}");
    }

    #[test]
    fn annihilator_is_not_injective() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let kind = ModuleKind::Universal { k: 1, d: 0, l: 2 };
        let out = truncated_injectivity(kind, Generator::G(2), 1, &mut rng).unwrap();
        assert!(!out.injective());
    }
}
