//! The generating fields `L(x)`, `J(x)`, `G(x)` on the vacuum module and the
//! identities their modes satisfy.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Generator;
use crate::error::{Error, Result};
use crate::indmod::{enumerate_basis, vacuum_degree, IndVector, InducedModule, ModuleKind};
use crate::report::Report;
use crate::scalars::{Param, Scalar};

/// One of the three generating fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FieldId {
    /// `L(x) = sum L_n x^{-n-2}`, the field of `L_{-2} 1`.
    Lfield,
    /// `J(x) = sum J_n x^{-n-1}`, the field of `J_{-1} 1`.
    Jfield,
    /// `G(x) = sum G_n x^{-n-1}`, the field of `G_{-1} 1`.
    Gfield,
}

impl FieldId {
    pub const ALL: [FieldId; 3] = [FieldId::Lfield, FieldId::Jfield, FieldId::Gfield];

    /// The generator acting as the `i`-th product with this field's state.
    pub fn mode(self, i: i64) -> Generator {
        match self {
            FieldId::Lfield => Generator::L(i - 1),
            FieldId::Jfield => Generator::J(i),
            FieldId::Gfield => Generator::G(i),
        }
    }

    /// The generator with Lie index `n` in this field's family.
    pub fn lie(self, n: i64) -> Generator {
        match self {
            FieldId::Lfield => Generator::L(n),
            FieldId::Jfield => Generator::J(n),
            FieldId::Gfield => Generator::G(n),
        }
    }

    pub fn weight(self) -> i64 {
        match self {
            FieldId::Lfield => 2,
            _ => 1,
        }
    }

    /// The state `L_{-2} 1`, `J_{-1} 1` or `G_{-1} 1`.
    pub fn state(self) -> Generator {
        match self {
            FieldId::Lfield => Generator::L(-2),
            FieldId::Jfield => Generator::J(-1),
            FieldId::Gfield => Generator::G(-1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldId::Lfield => "L",
            FieldId::Jfield => "J",
            FieldId::Gfield => "G",
        }
    }
}

fn require_vacuum(module: &InducedModule) -> Result<()> {
    if module.kind() == ModuleKind::Vacuum {
        Ok(())
    } else {
        Err(Error::Invalid(format!(
            "fields live on the vacuum module, not {}",
            module.kind().name()
        )))
    }
}

/// `a_i v`: the `i`-th product of `a`'s state with `v`.
pub fn mode_product(module: &InducedModule, a: FieldId, i: i64, v: &IndVector) -> Result<IndVector> {
    require_vacuum(module)?;
    module.act(a.mode(i), v)
}

fn delta(a: i64, b: i64) -> i64 {
    (a == b) as i64
}

/// The six product identities between generating states, for `i` in
/// `0..=max_i`: left side through [`mode_product`], right side written out.
pub fn theorem27_product_table_check(module: &InducedModule, max_i: i64) -> Result<Report> {
    require_vacuum(module)?;
    let spec = module.spec();
    let alpha = spec.alpha().clone();
    let beta = spec.beta().clone();
    let f = spec.f().clone();
    let ell = |i: usize| module.level().value(i).clone();
    let one = module.cyclic();
    let state = |a: FieldId| module.word_vector(&[a.state()]);
    let gen_vec = |g: Generator| module.word_vector(&[g]);
    let int = Scalar::from_int;
    use FieldId::*;

    let mut report = Report::new("check-vertex/products")
        .with_config("max_i", max_i)
        .with_config("bindings", spec.bindings().to_string());
    for i in 0..=max_i {
        let cases: Vec<(&str, FieldId, FieldId, IndVector)> = vec![
            (
                "(L)_i L",
                Lfield,
                Lfield,
                gen_vec(Generator::L(i - 3))?
                    .scale(&int(i + 1))
                    .add(&one.scale(&(&Scalar::from_frac(delta(i, 3) * ((i - 1).pow(3) - (i - 1)), 12) * &ell(1)))),
            ),
            (
                "(L)_i J",
                Lfield,
                Jfield,
                gen_vec(Generator::J(i - 2))?
                    .sub(&one.scale(&(&int(delta(i, 2) * ((i - 1).pow(2) + (i - 1))) * &ell(2)))),
            ),
            (
                "(L)_i G",
                Lfield,
                Gfield,
                gen_vec(Generator::G(i - 2))?.scale(&-(&(&alpha - &int(1)) + &(&int(i - 1) * &beta))),
            ),
            ("(G)_i G", Gfield, Gfield, IndVector::zero()),
            ("(J)_i J", Jfield, Jfield, one.scale(&(&int(i * delta(i, 1)) * &ell(3)))),
            ("(J)_i G", Jfield, Gfield, gen_vec(Generator::G(i - 1))?.scale(&f)),
        ];
        for (label, a, b, rhs) in cases {
            let lhs = mode_product(module, a, i, &state(b)?)?;
            report.record(
                lhs == rhs,
                || format!("{label}, i={i}"),
                || rhs.to_string(),
                || lhs.to_string(),
            );
        }
    }
    Ok(report)
}

/// Basis vectors of the vacuum module of degree at most `cap`.
pub fn basis_vectors(module: &InducedModule, cap: u32) -> Result<Vec<(u32, IndVector)>> {
    let mut out = Vec::new();
    for n in 0..=cap {
        for w in enumerate_basis(n) {
            out.push((n, module.word_vector(&w)?));
        }
    }
    Ok(out)
}

/// `[a_m, b_n] v = [X, Y] v` with `X, Y` the generators of Lie index `m`, `n`
/// in the families of `a`, `b`, over all basis `v` of degree at most `cap`.
pub fn field_commutator_check(
    module: &InducedModule,
    a: FieldId,
    b: FieldId,
    m: i64,
    n: i64,
    cap: u32,
) -> Result<Report> {
    field_commutator_suite(module, &[(a, b)], m.abs().max(n.abs()), cap, Some((m, n)))
}

/// [`field_commutator_check`] over every field pair in `pairs` and every
/// `|m|, |n| <= max_index`, or just `(m, n)` when given.
pub fn field_commutator_suite(
    module: &InducedModule,
    pairs: &[(FieldId, FieldId)],
    max_index: i64,
    cap: u32,
    only: Option<(i64, i64)>,
) -> Result<Report> {
    require_vacuum(module)?;
    let basis = basis_vectors(module, cap)?;
    let mut cases = Vec::new();
    for &(a, b) in pairs {
        for m in -max_index..=max_index {
            for n in -max_index..=max_index {
                if only.is_some_and(|o| o != (m, n)) {
                    continue;
                }
                for (deg, v) in &basis {
                    cases.push((a, b, m, n, *deg, v));
                }
            }
        }
    }
    let outcomes: Vec<Result<Option<(String, String, String)>>> = cases
        .par_iter()
        .map_init(module.factory(), |md, &(a, b, m, n, deg, v)| {
            let x = a.lie(m);
            let y = b.lie(n);
            let lhs = md.act(x, &md.act(y, v)?)?.sub(&md.act(y, &md.act(x, v)?)?);
            let mut rhs = IndVector::zero();
            for (g, c) in md.spec().bracket_gens(x, y)?.iter() {
                rhs = rhs.add(&md.act(*g, v)?.scale(c));
            }
            Ok((lhs != rhs).then(|| {
                (
                    format!("[{x}, {y}] on {v} (degree {deg})"),
                    rhs.to_string(),
                    lhs.to_string(),
                )
            }))
        })
        .collect();
    let mut report = Report::new("check-vertex/commutators")
        .with_config(
            "pairs",
            pairs
                .iter()
                .map(|(a, b)| format!("{}{}", a.name(), b.name()))
                .collect::<Vec<_>>(),
        )
        .with_config("max_index", max_index)
        .with_config("degree_cap", cap);
    for o in outcomes {
        match o? {
            None => report.pass(),
            Some((i, e, g)) => report.fail(i, e, g),
        }
    }
    Ok(report)
}

/// `a_i` maps degree `n` into degree `n + wt(a) - i - 1`, for all basis
/// vectors of degree at most `cap` and `i` in `0..=max_i`.
pub fn grading_check(module: &InducedModule, cap: u32, max_i: i64) -> Result<Report> {
    require_vacuum(module)?;
    let mut report = Report::new("check-vertex/grading")
        .with_config("degree_cap", cap)
        .with_config("max_i", max_i);
    for (deg, v) in basis_vectors(module, cap)? {
        for a in FieldId::ALL {
            for i in 0..=max_i {
                let out = mode_product(module, a, i, &v)?;
                let want = deg as i64 + a.weight() - i - 1;
                let bad = out.element().iter().find(|(m, _)| vacuum_degree(&m.word) != want);
                report.record(
                    bad.is_none(),
                    || format!("{}_{i} on {v}", a.name()),
                    || format!("degree {want}"),
                    || format!("{out}"),
                );
            }
        }
    }
    Ok(report)
}

/// With `alpha = beta = 0`, `L_0` acts on each basis vector of degree `n` as
/// multiplication by `n`.
pub fn l0_eigenvalue_check(module: &InducedModule, cap: u32) -> Result<Report> {
    require_vacuum(module)?;
    let zero = Scalar::zero();
    if module.spec().alpha() != &zero || module.spec().beta() != &zero {
        return Err(Error::Invalid("the L_0 eigenvalue check needs alpha = beta = 0".into()));
    }
    let mut report = Report::new("check-vertex/l0")
        .with_config("degree_cap", cap)
        .with_config(Param::Alpha.name(), "0");
    for (deg, v) in basis_vectors(module, cap)? {
        let got = module.act(Generator::L(0), &v)?;
        let want = v.scale(&Scalar::from_int(deg as i64));
        report.record(got == want, || v.to_string(), || want.to_string(), || got.to_string());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Bindings;

    fn vacuum() -> InducedModule {
        InducedModule::new(ModuleKind::Vacuum, Bindings::new()).unwrap()
    }

    #[test]
    fn mode_examples() {
        let m = vacuum();
        let j = m.word_vector(&[Generator::J(-1)]).unwrap();
        let got = mode_product(&m, FieldId::Jfield, 1, &j).unwrap();
        assert_eq!(got, m.cyclic().scale(&Scalar::param(Param::Ell3)));
        assert!(mode_product(&m, FieldId::Gfield, 0, &m.cyclic()).unwrap().is_zero());
        let g = m.word_vector(&[Generator::G(-1)]).unwrap();
        let got = mode_product(&m, FieldId::Jfield, 0, &g).unwrap();
        assert_eq!(got, g.scale(&Scalar::param(Param::F)));
    }

    #[test]
    fn product_table() {
        let r = theorem27_product_table_check(&vacuum(), 6).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert_eq!(r.cases_run, 7 * 6);
    }

    #[test]
    fn one_commutator() {
        let r = field_commutator_check(&vacuum(), FieldId::Lfield, FieldId::Jfield, 1, -1, 3).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert_eq!(
            r.cases_run as usize,
            (0..=3).map(crate::indmod::graded_dimension).sum::<usize>()
        );
    }

    #[test]
    fn l0_needs_alpha_zero() {
        assert!(l0_eigenvalue_check(&vacuum(), 2).is_err());
        let m = InducedModule::new(ModuleKind::Vacuum, Bindings::new().with(Param::Alpha, 0)).unwrap();
        assert!(l0_eigenvalue_check(&m, 3).unwrap().passed());
    }
}
