//! Seeded verification suites shared by the command line and the tests.
//! Each returns a single [`Report`]; the same arguments give the same report.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{
    embedding_check, homomorphism_check, jacobi_check, AlgebraSpec, Embedding, Generator, Level, Phi, Table,
};
use crate::error::{Error, Result};
use crate::exponents::{ExponentVector, Triple};
use crate::indmod::{
    annihilation_bound_check, enumerate_basis, lemma_degree_check, module_axiom_check, reduce_to_v,
    sample_lemma_vector, sample_vacuum_vector, sample_vector, truncated_injectivity, InducedModule, ModuleKind, Row,
};
use crate::pbw::{GeneratorOrder, Normalizer, UEElement};
use crate::report::Report;
use crate::scalars::{Bindings, Param, Scalar};
use crate::vertexcheck::{
    field_commutator_suite, grading_check, l0_eigenvalue_check, theorem27_product_table_check, FieldId,
};

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn summary(report: &mut Report, part: &Report) {
    let key = part.suite.rsplit('/').next().unwrap_or(&part.suite).to_string();
    report.config.insert(
        format!("{key}_cases"),
        serde_json::json!({ "run": part.cases_run, "failed": part.failure_count }),
    );
}

/// Folds `parts` into one report named `suite`, recording per-part counts.
fn combine(suite: &str, config: Vec<(&str, serde_json::Value)>, parts: Vec<Report>) -> Report {
    let mut out = Report::new(suite);
    for (k, v) in config {
        out = out.with_config(k, v);
    }
    for p in parts {
        summary(&mut out, &p);
        out.absorb(p);
    }
    out
}

/// Jacobi identity on the window, plus the same check on the corrupted
/// table, which must fail.
pub fn jacobi_suite(bindings: &Bindings, window: i64) -> Report {
    let mut report = jacobi_check(&AlgebraSpec::ehv_with(bindings.clone()), window);
    let control = jacobi_check(&AlgebraSpec::new(Table::Corrupted, bindings.clone()), window);
    report = report.with_config("negative_control_failures", control.failure_count);
    report.record(
        !control.passed(),
        || "corrupted table".into(),
        || "a nonzero Jacobi cycle".into(),
        || "none".into(),
    );
    report
}

/// `phi_1` for `p` in `shifts`, then `phi_2..phi_4`, plus the check that
/// `phi_4` fails without its level relation by a multiple of `ell3 - 2 ell2`.
pub fn iso_suite(window: i64, shifts: &[i64]) -> Result<Report> {
    let mut parts = Vec::new();
    for &p in shifts {
        parts.push(homomorphism_check(Phi::Shift(p), window)?);
    }
    for phi in [Phi::Rescale, Phi::FNormalize, Phi::Flip] {
        parts.push(homomorphism_check(phi, window)?);
    }
    let mut defect = Report::new("check-iso/flip_defect");
    let root = &Scalar::from_int(2) * &Scalar::param(Param::Ell2);
    let mut nonzero = 0;
    for d in crate::algebra::homomorphism_defects(Phi::Flip, window, &Bindings::new())? {
        if !d.body.is_zero() {
            defect.fail(format!("{}, {}", d.x, d.y), "a central defect", d.body.to_string());
            continue;
        }
        if d.constant.is_zero() {
            defect.pass();
            continue;
        }
        nonzero += 1;
        let ok = d.constant.div_linear(Param::Ell3, &root).is_some();
        defect.record(
            ok,
            || format!("{}, {}", d.x, d.y),
            || "a multiple of ell3 - 2*ell2".into(),
            || d.constant.to_string(),
        );
    }
    defect.record(
        nonzero > 0,
        || "flip without relation".into(),
        || "some nonzero defect".into(),
        || "none".into(),
    );
    parts.push(defect);
    let names: Vec<String> = shifts.iter().map(|p| Phi::Shift(*p).name()).collect();
    Ok(combine(
        "check-iso",
        vec![("window", window.into()), ("shifts", serde_json::json!(names))],
        parts,
    ))
}

/// Every comparison table against the EHV table.
pub fn embed_suite(window: i64) -> Result<Report> {
    let parts = Embedding::ALL
        .into_iter()
        .map(|e| {
            embedding_check(e, window).map(|mut r| {
                r.suite = format!("check-embed/{}", e.name());
                r
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(combine("check-embed", vec![("window", window.into())], parts))
}

fn random_word<R: Rng>(rng: &mut R, gens: &[Generator], max_len: usize) -> Vec<Generator> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| *gens.choose(rng).expect("nonempty window")).collect()
}

/// Commutators for every generator pair in the window, associativity and
/// idempotence on `samples` random words, and agreement of the two orders.
/// Random words use indices in `[-3, 3]`.
pub fn pbw_suite(bindings: &Bindings, window: i64, samples: usize, seed: u64) -> Result<Report> {
    let spec = AlgebraSpec::ehv_with(bindings.clone());
    let gens = Generator::window(-window, window);
    let o31 = || Normalizer::new(spec.clone(), GeneratorOrder::order_31());

    let pairs: Vec<(Generator, Generator)> = gens.iter().flat_map(|&x| gens.iter().map(move |&y| (x, y))).collect();
    let comm: Vec<Result<Option<(String, String, String)>>> = pairs
        .par_iter()
        .map_init(o31, |n, &(x, y)| {
            let got = n.normalize(&[x, y])?.sub(&n.normalize(&[y, x])?);
            let want = UEElement::from_lie(&n.spec().bracket_gens(x, y)?);
            Ok((got != want).then(|| (format!("[{x}, {y}]"), want.to_string(), got.to_string())))
        })
        .collect();
    let mut commutators = Report::new("check-pbw/commutators");
    for o in comm {
        match o? {
            None => commutators.pass(),
            Some((i, e, g)) => commutators.fail(i, e, g),
        }
    }

    let small = Generator::window(-3, 3);
    let mut rng = rng_for(seed, 0);
    let words: Vec<[Vec<Generator>; 3]> = (0..samples)
        .map(|_| std::array::from_fn(|_| random_word(&mut rng, &small, 3)))
        .collect();
    type Row3 = (Option<String>, Option<String>, Option<String>);
    let out: Vec<Result<Row3>> = words
        .par_iter()
        .map_init(
            || (o31(), Normalizer::new(spec.clone(), GeneratorOrder::order_32())),
            |(n31, n32), [a, b, c]| {
                let label = || format!("{a:?} {b:?} {c:?}");
                let (ea, eb, ec) = (n31.normalize(a)?, n31.normalize(b)?, n31.normalize(c)?);
                let ab = n31.multiply(&ea, &eb)?;
                let left = n31.multiply(&ab, &ec)?;
                let bc = n31.multiply(&eb, &ec)?;
                let right = n31.multiply(&ea, &bc)?;
                let assoc = (left != right).then(|| format!("{}: {left} vs {right}", label()));
                let again = n31.normalize_element(&ea)?;
                let idem = (again != ea).then(|| format!("{a:?}: {ea} vs {again}"));
                let via32 = n32.normalize_element(&ea)?;
                let direct32 = n32.normalize(a)?;
                let back = n31.normalize_element(&via32)?;
                let round = (back != ea || via32 != direct32).then(|| format!("{a:?}: {ea} -> {via32} -> {back}"));
                Ok((assoc, idem, round))
            },
        )
        .collect();
    let mut assoc = Report::new("check-pbw/associativity");
    let mut idem = Report::new("check-pbw/idempotence");
    let mut round = Report::new("check-pbw/round_trip");
    for o in out {
        let (a, i, r) = o?;
        for (rep, bad) in [(&mut assoc, a), (&mut idem, i), (&mut round, r)] {
            match bad {
                None => rep.pass(),
                Some(s) => rep.fail(s, "equal", "different"),
            }
        }
    }
    Ok(combine(
        "check-pbw",
        vec![
            ("window", window.into()),
            ("samples", samples.into()),
            ("seed", seed.into()),
            ("bindings", bindings.to_string().into()),
        ],
        vec![commutators, assoc, idem, round],
    ))
}

/// `g(hv) - h(gv) = [g,h]v` on `samples` random triples. Vacuum vectors
/// have degree at most `max_degree`, other modules prefix weight at most
/// `max_degree`; `g`, `h` have indices in `[-window, window]`.
pub fn module_axiom_suite(module: &InducedModule, samples: usize, max_degree: u32, window: i64, seed: u64) -> Report {
    let mut rng = rng_for(seed, 1);
    let gens = Generator::window(-window, window);
    let cases: Vec<(Generator, Generator, crate::indmod::IndVector)> = (0..samples)
        .map(|_| {
            let g = *gens.choose(&mut rng).expect("nonempty window");
            let h = *gens.choose(&mut rng).expect("nonempty window");
            let v = match module.kind() {
                ModuleKind::Vacuum => sample_vacuum_vector(module, &mut rng, max_degree),
                _ => sample_vector(module, &mut rng, max_degree as u64, 2),
            };
            (g, h, v)
        })
        .collect();
    module_axiom_check(module, &cases)
        .with_config("samples", samples)
        .with_config("max_degree", max_degree)
        .with_config("window", window)
        .with_config("seed", seed)
}

/// Vacuum dimensions from the product formula, by power-series expansion.
pub fn product_formula_dimensions(max: usize) -> Vec<u64> {
    // prod_{n>=2} (1-q^n)^{-1} prod_{n>=1} (1-q^n)^{-2}
    let mut c = vec![0u64; max + 1];
    c[0] = 1;
    let mut factor = |n: usize| {
        for i in n..=max {
            c[i] += c[i - n];
        }
    };
    for n in 1..=max {
        factor(n);
        factor(n);
        if n >= 2 {
            factor(n);
        }
    }
    c
}

/// Graded dimensions against the product formula and direct counting.
pub fn vacuum_dimension_check(max: u32) -> Report {
    let formula = product_formula_dimensions(max as usize);
    let mut report = Report::new("check-module-axiom/dimensions").with_config("max_degree", max);
    for n in 0..=max {
        let got = enumerate_basis(n).len() as u64;
        let brute = brute_force_dimension(n);
        report.record(
            got == formula[n as usize] && got == brute,
            || format!("degree {n}"),
            || format!("{} (formula), {brute} (count)", formula[n as usize]),
            || got.to_string(),
        );
    }
    report
}

/// Counts multisets of prefix generators of total degree `n` by recursion
/// over parts, independently of [`enumerate_basis`].
fn brute_force_dimension(n: u32) -> u64 {
    // parts: (degree, colour) with L of degree >= 2, J and G of degree >= 1
    let mut parts = Vec::new();
    for d in 1..=n {
        if d >= 2 {
            parts.push(d);
        }
        parts.push(d);
        parts.push(d);
    }
    fn count(parts: &[u32], from: usize, left: u32) -> u64 {
        if left == 0 {
            return 1;
        }
        (from..parts.len())
            .filter(|&i| parts[i] <= left)
            .map(|i| count(parts, i, left - parts[i]))
            .sum()
    }
    count(&parts, 0, n)
}

/// Every vertex-side identity on the vacuum module with `beta -> alpha`.
/// Products for `i <= max_i`, commutators for all field pairs with
/// `|m|, |n| <= max_index` on degree `<= degree_cap`, grading on the same
/// range and `L_0` eigenvalues at `alpha = 0` up to `l0_cap`.
pub fn vertex_suite(bindings: &Bindings, max_i: i64, max_index: i64, degree_cap: u32, l0_cap: u32) -> Result<Report> {
    let module = InducedModule::new(ModuleKind::Vacuum, bindings.clone())?;
    let pairs: Vec<(FieldId, FieldId)> = FieldId::ALL
        .into_iter()
        .flat_map(|a| FieldId::ALL.into_iter().map(move |b| (a, b)))
        .collect();
    let at_zero = InducedModule::new(ModuleKind::Vacuum, bindings.clone().with(Param::Alpha, 0))?;
    let parts = vec![
        theorem27_product_table_check(&module, max_i)?,
        field_commutator_suite(&module, &pairs, max_index, degree_cap, None)?,
        grading_check(&module, degree_cap, max_i)?,
        l0_eigenvalue_check(&at_zero, l0_cap)?,
    ];
    Ok(combine(
        "check-vertex",
        vec![
            ("bindings", module.spec().bindings().to_string().into()),
            ("max_i", max_i.into()),
            ("max_index", max_index.into()),
            ("degree_cap", degree_cap.into()),
            ("l0_cap", l0_cap.into()),
        ],
        parts,
    ))
}

/// `lemma_degree_check` for one row on `samples` seeded random vectors.
pub fn lemma_suite(module: &InducedModule, row: Row, samples: usize, max_weight: u64, seed: u64) -> Report {
    let mut rng = rng_for(seed, 2 + row as u64);
    let vs: Vec<_> = (0..samples)
        .map(|_| sample_lemma_vector(module, row, &mut rng, max_weight))
        .collect();
    let mut r = lemma_degree_check(module, row, &vs)
        .with_config("samples", samples)
        .with_config("max_weight", max_weight)
        .with_config("seed", seed);
    r.suite = format!("check-lemma/{row:?}");
    r
}

/// Runs [`reduce_to_v`] on `samples` random vectors of prefix weight at most
/// `max_weight`.
pub fn reduce_suite(module: &InducedModule, samples: usize, max_weight: u64, seed: u64) -> Report {
    let mut rng = rng_for(seed, 5);
    let vs: Vec<_> = (0..samples)
        .map(|_| sample_vector(module, &mut rng, max_weight, 3))
        .collect();
    let outcomes: Vec<std::result::Result<(), (String, String)>> = vs
        .par_iter()
        .map_init(module.factory(), |m, v| match reduce_to_v(m, v, 64) {
            Ok(red) if !red.value.is_zero() => Ok(()),
            Ok(_) => Err((v.to_string(), "zero".into())),
            Err(e) => Err((v.to_string(), e.to_string())),
        })
        .collect();
    let mut report = Report::new("check-lemma/reduce")
        .with_config("samples", samples)
        .with_config("max_weight", max_weight)
        .with_config("seed", seed);
    for o in outcomes {
        match o {
            Ok(()) => report.pass(),
            Err((i, g)) => report.fail(i, "a nonzero coefficient element", g),
        }
    }
    report
}

/// Stability, truncated injectivity of `G_k` and `L_l`, all three lemma rows
/// and the full reduction, for one universal module.
pub fn universal_suite(
    kind: ModuleKind,
    samples: usize,
    reductions: usize,
    max_len: usize,
    seed: u64,
) -> Result<Report> {
    let ModuleKind::Universal { k, l, .. } = kind else {
        return Err(Error::Invalid("expected a universal module".into()));
    };
    let module = InducedModule::new(kind, Bindings::new())?;
    let mut stability = Report::new("check-lemma/stability");
    match module.stability_check(8) {
        Ok(()) => stability.pass(),
        Err(e) => stability.fail(kind.name(), "stable", e.to_string()),
    }
    let mut inj = Report::new("check-lemma/injectivity").with_config("max_len", max_len);
    let mut rng = rng_for(seed, 6);
    for op in [Generator::G(k), Generator::L(l)] {
        let out = truncated_injectivity(kind, op, max_len, &mut rng)?;
        inj.record(
            out.injective(),
            || format!("{op} at {}", out.specialization),
            || format!("rank {}", out.basis_size),
            || format!("rank {}", out.rank),
        );
    }
    let mut parts = vec![stability, inj];
    for row in Row::ALL {
        parts.push(lemma_suite(&module, row, samples, 4, seed));
    }
    parts.push(reduce_suite(&module, reductions, 4, seed));
    Ok(combine(
        "check-lemma",
        vec![("module", kind.name().into()), ("seed", seed.into())],
        parts,
    ))
}

/// A vector of prefix shape suited to `row`, one unit at position 1.
fn unit_prefix(module: &InducedModule, row: Row) -> Result<crate::indmod::IndVector> {
    let e = ExponentVector::unit(1);
    let z = ExponentVector::zero;
    let t = match row {
        Row::G => Triple(z(), z(), e),
        Row::J => Triple(z(), e, z()),
        Row::L => Triple(e, z(), z()),
    };
    module.basis_vector(&t, &[])
}

/// Bindings or levels under which the lemma coefficient of `row` vanishes
/// at position 1.
fn adversarial(kind: ModuleKind, row: Row) -> (Bindings, Level) {
    let ModuleKind::Opaque { k, d1, .. } = kind else {
        unreachable!("opaque only")
    };
    let generic = Level::generic();
    match row {
        // alpha + k + 1 - beta = 0
        Row::G => (
            Bindings::new().with(Param::Alpha, -(k + 1)).with(Param::Beta, 0),
            generic,
        ),
        Row::J => (
            Bindings::new(),
            Level::new(generic.value(1).clone(), generic.value(2).clone(), Scalar::zero()),
        ),
        // alpha - (d1 + 1) + (k + d1 + 1) beta = 0
        Row::L => (
            Bindings::new().with(Param::Alpha, d1 as i64 + 1).with(Param::Beta, 0),
            generic,
        ),
    }
}

/// The three rows on the opaque module with `F = 0`, and each row's
/// coefficient guard firing under an adversarial binding.
pub fn opaque_suite(kind: ModuleKind, samples: usize, seed: u64) -> Result<Report> {
    let module = InducedModule::new(kind, Bindings::new())?;
    let mut parts = Vec::new();
    for row in Row::ALL {
        parts.push(lemma_suite(&module, row, samples, 4, seed));
    }
    let mut guards = Report::new("check-lemma/guards");
    for row in Row::ALL {
        let (b, level) = adversarial(kind, row);
        let m = InducedModule::with_level(kind, b.clone(), level, 8)?;
        let v = unit_prefix(&m, row)?;
        let got = m.lemma_reduction_step(row, &v);
        guards.record(
            matches!(got, Err(Error::VanishingCoefficient(_))),
            || format!("{row:?} row at {b}"),
            || "vanishing coefficient".into(),
            || match got {
                Ok(s) => s.result.to_string(),
                Err(e) => e.to_string(),
            },
        );
    }
    parts.push(guards);
    Ok(combine(
        "check-lemma",
        vec![("module", kind.name().into()), ("seed", seed.into())],
        parts,
    ))
}

/// The annihilation bound on a restricted module.
pub fn bound_suite(k: i64, l: i64, m: i64, max_weight: u64, extra: i64) -> Result<Report> {
    let module = InducedModule::new(ModuleKind::Restricted { k, l, m }, Bindings::new())?;
    annihilation_bound_check(&module, max_weight, extra)
}
