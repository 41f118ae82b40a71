//! The annihilation bound for descendants of a vector killed by
//! `L^(k,l,m)`.

use super::{InducedModule, ModuleKind};
use crate::algebra::{Generator, Kind};
use crate::error::{Error, Result};
use crate::exponents::{ExponentVector, Triple};
use crate::report::Report;

/// All prefix triples of total weight at most `max_weight`, with their words.
pub fn bound_descendants(module: &InducedModule, max_weight: u64) -> Vec<(Triple, Vec<Generator>)> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        for w0 in 0..=w {
            for w1 in 0..=w - w0 {
                let w2 = w - w0 - w1;
                for a in ExponentVector::all_of_weight(w0) {
                    for b in ExponentVector::all_of_weight(w1) {
                        for c in ExponentVector::all_of_weight(w2) {
                            let t = Triple(a.clone(), b.clone(), c);
                            let word = module.prefix_word(&t);
                            out.push((t, word));
                        }
                    }
                }
            }
        }
    }
    out
}

/// For every descendant `D v` of prefix weight `w <= max_weight`, checks
/// `L_n D v = G_n D v = J_n D v = 0` for `n` in
/// `k+l+m+w+1 ..= k+l+m+w+extra`.
pub fn annihilation_bound_check(module: &InducedModule, max_weight: u64, extra: i64) -> Result<Report> {
    let ModuleKind::Restricted { k, l, m } = module.kind() else {
        return Err(Error::Invalid("the bound concerns restricted modules".into()));
    };
    use rayon::prelude::*;
    let cases = bound_descendants(module, max_weight);
    let outcomes: Vec<Result<Vec<(String, String)>>> = cases
        .par_iter()
        .map_init(module.factory(), |md, (t, word)| {
            let v = md.word_vector(word)?;
            let bound = k + l + m + t.total_weight() as i64;
            let mut bad = Vec::new();
            for n in bound + 1..=bound + extra {
                for kind in Kind::ALL {
                    let x = kind.at(n);
                    let got = md.act(x, &v)?;
                    if !got.is_zero() {
                        bad.push((format!("{x} on {v}"), got.to_string()));
                    }
                }
            }
            Ok(bad)
        })
        .collect();
    let mut report = Report::new("check-bound")
        .with_config("k", k)
        .with_config("l", l)
        .with_config("m", m)
        .with_config("max_weight", max_weight)
        .with_config("extra", extra);
    for o in outcomes {
        let bad = o?;
        let per_case = 3 * extra as u64;
        for (inputs, got) in &bad {
            report.fail(inputs.clone(), "0", got.clone());
        }
        for _ in 0..per_case - bad.len() as u64 {
            report.pass();
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Bindings;
    use Generator::*;

    #[test]
    fn one_step_descendant() {
        let md = InducedModule::new(ModuleKind::Restricted { k: 1, l: 1, m: 1 }, Bindings::new()).unwrap();
        let v = md.word_vector(&[G(0)]).unwrap();
        // bound k+l+m+w = 4
        for x in [L(5), G(5), J(5)] {
            assert!(md.act(x, &v).unwrap().is_zero());
        }
        // below the bound the action need not vanish
        assert!(!md.act(L(0), &v).unwrap().is_zero());
    }

    #[test]
    fn small_bound_suite() {
        let md = InducedModule::new(ModuleKind::Restricted { k: 1, l: 1, m: 1 }, Bindings::new()).unwrap();
        let r = annihilation_bound_check(&md, 2, 2).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert!(r.cases_run > 0);
    }
}
