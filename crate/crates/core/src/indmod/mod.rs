//! Induced modules: the vacuum module, modules induced from `L_d` and
//! `L_dbar`, and the restricted cyclic modules of the characterization.
//!
//! Every module here is realized as `U ⊗_{U(A + center)} C`, where `A` is a
//! subalgebra of annihilators and the center acts by a level. Vectors are
//! PBW normal forms whose words split into a prefix (outside the inducing
//! subalgebra) and a coefficient part (inside it, outside `A`).

mod bound;
mod injectivity;
mod lemmas;
mod sample;
mod vacuum;

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{AlgebraSpec, Generator, Kind, Level, SubalgebraSpec, Table};
use crate::error::{Error, Result};
use crate::exponents::{ExponentVector, OrderKind, Triple};
use crate::pbw::{GeneratorOrder, Normalizer, UEElement, UEMonomial};
use crate::report::Report;
use crate::scalars::{Bindings, Param, Scalar};

pub use bound::{annihilation_bound_check, bound_descendants};
pub use injectivity::{truncated_injectivity, InjectivityOutcome, MODULUS};
pub use lemmas::{lemma_degree_check, reduce_to_v, Reduction, Row, Step};
pub use sample::{sample_lemma_vector, sample_vacuum_vector, sample_vector};
pub use vacuum::{enumerate_basis, graded_dimension, vacuum_degree};

/// Which module is being modelled, with its thresholds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleKind {
    /// `U ⊗_{U(L+)} C`; requires `beta = alpha`.
    Vacuum,
    /// Induced from the universal `L_d`-module with `G_{k+i}, J_{k+d+i},
    /// L_{l+i}` (`i >= 1`) acting as zero; requires `l > k + d > 0`.
    Universal { k: i64, d: u32, l: i64 },
    /// Induced from `L_dbar` with `G_{k+i}, J_{d2+i}, L_{k+d1+i}` acting as
    /// zero, `F = 0`. Coefficients are only ever a multiple of the cyclic
    /// vector before an operator is applied.
    Opaque { k: i64, d1: u32, d2: u32 },
    /// `U ⊗_{U(L^(k,l,m))} C`: a cyclic vector killed by `L^(k,l,m)`.
    Restricted { k: i64, l: i64, m: i64 },
}

impl ModuleKind {
    fn validate(&self) -> Result<()> {
        match *self {
            ModuleKind::Universal { k, d, l } => {
                if k < 0 || !(l > k + d as i64 && k + d as i64 > 0) {
                    return Err(Error::Thresholds(format!(
                        "l > k + d > 0 with k >= 0 (k={k}, d={d}, l={l})"
                    )));
                }
            }
            ModuleKind::Opaque { k, .. } => {
                if k < 0 {
                    return Err(Error::Thresholds(format!("k >= 0 (k={k})")));
                }
            }
            ModuleKind::Restricted { k, l, m } => {
                if k < 0 || l < 0 || m < 0 {
                    return Err(Error::Thresholds(format!("k, l, m >= 0 (k={k}, l={l}, m={m})")));
                }
            }
            ModuleKind::Vacuum => {}
        }
        Ok(())
    }

    /// The inducing subalgebra, if it differs from the annihilator set.
    pub fn inducing(&self) -> Option<SubalgebraSpec> {
        match *self {
            ModuleKind::Universal { d, .. } => Some(SubalgebraSpec::Ld { d }),
            ModuleKind::Opaque { d1, d2, .. } => Some(SubalgebraSpec::LdBar { d1, d2 }),
            _ => None,
        }
    }

    pub fn annihilators(&self) -> SubalgebraSpec {
        match *self {
            ModuleKind::Vacuum => SubalgebraSpec::Plus,
            ModuleKind::Universal { k, d, l } => SubalgebraSpec::Fin {
                k: k + 1,
                l: k + d as i64 + 1,
                m: l + 1,
            },
            ModuleKind::Opaque { k, d1, d2 } => SubalgebraSpec::Fin {
                k: k + 1,
                l: d2 as i64 + 1,
                m: k + d1 as i64 + 1,
            },
            ModuleKind::Restricted { k, l, m } => SubalgebraSpec::Fin { k, l, m },
        }
    }

    pub fn generator_order(&self) -> GeneratorOrder {
        let base = match self {
            ModuleKind::Universal { .. } => GeneratorOrder::order_31(),
            _ => GeneratorOrder::order_32(),
        };
        let mut tiers: Vec<SubalgebraSpec> = self.inducing().into_iter().collect();
        tiers.push(self.annihilators());
        base.with_tiers(tiers)
    }

    /// Index of the prefix generator sitting at position `s >= 1` of the
    /// exponent vector for `kind`.
    pub fn prefix_index(&self, kind: Kind, s: usize) -> i64 {
        let s = s as i64;
        match (*self, kind) {
            (ModuleKind::Vacuum, Kind::L) => -1 - s,
            (ModuleKind::Vacuum, _) => -s,
            (ModuleKind::Universal { d, .. }, Kind::G) => -(d as i64) - s,
            (ModuleKind::Universal { .. }, _) => -s,
            (ModuleKind::Opaque { d1, .. }, Kind::G) => -(d1 as i64) - s,
            (ModuleKind::Opaque { d2, .. }, Kind::J) => -(d2 as i64) - s,
            (ModuleKind::Opaque { .. }, Kind::L) => -s,
            (ModuleKind::Restricted { k, .. }, Kind::G) => k - s,
            (ModuleKind::Restricted { l, .. }, Kind::J) => l - s,
            (ModuleKind::Restricted { m, .. }, Kind::L) => m - s,
        }
    }

    /// Which triple component records generators of `kind`.
    /// `(k, i, j)` is `(L, G, J)` for the `L_d` case, every other case uses
    /// `(G, J, L)`.
    pub fn component_of(&self, kind: Kind) -> usize {
        match (self, kind) {
            (ModuleKind::Universal { .. }, Kind::L) => 0,
            (ModuleKind::Universal { .. }, Kind::G) => 1,
            (ModuleKind::Universal { .. }, Kind::J) => 2,
            (_, Kind::G) => 0,
            (_, Kind::J) => 1,
            (_, Kind::L) => 2,
        }
    }

    pub fn kind_of_component(&self, n: usize) -> Kind {
        Kind::ALL
            .into_iter()
            .find(|&k| self.component_of(k) == n)
            .expect("component in 0..3")
    }

    pub fn name(&self) -> String {
        match *self {
            ModuleKind::Vacuum => "vacuum".into(),
            ModuleKind::Universal { k, d, l } => format!("universal(k={k},d={d},l={l})"),
            ModuleKind::Opaque { k, d1, d2 } => format!("opaque(k={k},d1={d1},d2={d2})"),
            ModuleKind::Restricted { k, l, m } => format!("restricted(k={k},l={l},m={m})"),
        }
    }
}

/// An element of an induced module, as a PBW normal form applied to the
/// cyclic vector.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IndVector {
    elem: UEElement,
}

impl IndVector {
    pub fn zero() -> Self {
        IndVector::default()
    }

    pub fn element(&self) -> &UEElement {
        &self.elem
    }

    pub fn is_zero(&self) -> bool {
        self.elem.is_zero()
    }

    pub fn add(&self, other: &IndVector) -> IndVector {
        IndVector {
            elem: self.elem.add(&other.elem),
        }
    }

    pub fn sub(&self, other: &IndVector) -> IndVector {
        IndVector {
            elem: self.elem.sub(&other.elem),
        }
    }

    pub fn scale(&self, c: &Scalar) -> IndVector {
        IndVector {
            elem: self.elem.scale(c),
        }
    }

    pub fn substitute(&self, b: &Bindings) -> IndVector {
        IndVector {
            elem: self.elem.substitute(b),
        }
    }
}

impl fmt::Display for IndVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return f.write_str("0");
        }
        write!(f, "({})*w", self.elem)
    }
}

/// The serialized form of an [`IndVector`].
#[derive(Serialize)]
pub struct IndVectorJson {
    pub module: ModuleKind,
    pub subalgebra: String,
    pub bindings: Bindings,
    pub terms: Vec<IndTermJson>,
}

#[derive(Serialize)]
pub struct IndTermJson {
    pub prefix: Vec<String>,
    pub coeff_vector: BTreeMap<String, String>,
}

/// A module of one of the [`ModuleKind`]s over a fixed algebra and level.
///
/// Owns a normalizer with a memo table; clone it to get an independent copy
/// per thread.
pub struct InducedModule {
    kind: ModuleKind,
    spec: AlgebraSpec,
    level: Level,
    degree_order: OrderKind,
    nz: RefCell<Normalizer>,
}

impl Clone for InducedModule {
    fn clone(&self) -> Self {
        InducedModule::assemble(self.kind, self.spec.clone(), self.level.clone(), self.degree_order)
    }
}

impl InducedModule {
    fn assemble(kind: ModuleKind, spec: AlgebraSpec, level: Level, degree_order: OrderKind) -> Self {
        let nz = Normalizer::module(spec.clone(), kind.generator_order(), level.clone());
        InducedModule {
            kind,
            spec,
            level,
            degree_order,
            nz: RefCell::new(nz),
        }
    }

    /// Builds the module over the EHV table with `bindings`, at the generic
    /// level `C_i -> ell_i`.
    ///
    /// The vacuum module adds `beta -> alpha`, the `L_dbar` case adds `F -> 0`;
    /// a conflicting binding is an error. The `L_d` case runs the stability
    /// self-check over `window`.
    pub fn new(kind: ModuleKind, bindings: Bindings) -> Result<Self> {
        Self::with_level(kind, bindings, Level::generic(), 8)
    }

    pub fn with_level(kind: ModuleKind, bindings: Bindings, level: Level, window: i64) -> Result<Self> {
        kind.validate()?;
        let mut b = bindings;
        match kind {
            ModuleKind::Vacuum => {
                let alpha = Scalar::param(Param::Alpha).substitute(&b);
                force(&mut b, Param::Beta, alpha)?;
            }
            ModuleKind::Opaque { .. } => force(&mut b, Param::F, Scalar::zero())?,
            _ => {}
        }
        let spec = AlgebraSpec::new(Table::Ehv, b);
        let level = level.substitute(spec.bindings());
        let degree_order = match kind {
            ModuleKind::Opaque { .. } => OrderKind::PrincipalOPrime,
            _ => OrderKind::PrincipalO,
        };
        let m = InducedModule::assemble(kind, spec, level, degree_order);
        if let ModuleKind::Universal { .. } = kind {
            m.stability_check(window)?;
        }
        Ok(m)
    }

    /// A thread-safe constructor of independent copies, for parallel suites.
    pub fn factory(&self) -> impl Fn() -> InducedModule + Send + Sync {
        let (kind, spec, level, order) = (self.kind, self.spec.clone(), self.level.clone(), self.degree_order);
        move || InducedModule::assemble(kind, spec.clone(), level.clone(), order)
    }

    /// Chooses the total order used by [`InducedModule::degree`].
    pub fn with_degree_order(mut self, order: OrderKind) -> Self {
        self.degree_order = order;
        self
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn level(&self) -> &Level {
        &self.level
    }

    pub fn degree_order(&self) -> OrderKind {
        self.degree_order
    }

    pub fn annihilates(&self, g: Generator) -> bool {
        !g.is_central() && self.kind.annihilators().contains(g)
    }

    /// Generators of the coefficient part: inside the inducing subalgebra,
    /// outside the annihilators.
    pub fn in_coefficient_part(&self, g: Generator) -> bool {
        match self.kind.inducing() {
            Some(s) => !g.is_central() && s.contains(g) && !self.annihilates(g),
            None => false,
        }
    }

    pub fn in_prefix(&self, g: Generator) -> bool {
        !g.is_central() && self.kind.generator_order().tier(g) == 0
    }

    /// The finite list of coefficient-part generators (empty for the vacuum
    /// and restricted modules).
    pub fn coefficient_generators(&self) -> Vec<Generator> {
        let (lo, hi) = match self.kind {
            ModuleKind::Universal { k, d, l } => (-(d as i64), l.max(k + d as i64)),
            ModuleKind::Opaque { k, d1, d2 } => (-((d1.max(d2)) as i64), (k + d1 as i64).max(d2 as i64)),
            _ => return Vec::new(),
        };
        let order = self.kind.generator_order();
        let mut gens: Vec<Generator> = Generator::window(lo, hi)
            .into_iter()
            .filter(|g| self.in_coefficient_part(*g))
            .collect();
        gens.sort_by(|a, b| order.compare(*a, *b));
        gens
    }

    /// `[s, g]` stays inside the annihilators for every annihilator `s` and
    /// coefficient-part generator `g` with index in `[-window, window]`.
    pub fn stability_check(&self, window: i64) -> Result<()> {
        let ann: Vec<Generator> = Generator::window(-window, window)
            .into_iter()
            .filter(|g| self.annihilates(*g))
            .collect();
        let comp: Vec<Generator> = Generator::window(-window, window)
            .into_iter()
            .filter(|g| self.in_coefficient_part(*g))
            .collect();
        for &s in &ann {
            for &g in &comp {
                let br = self.spec.bracket_gens(s, g)?;
                if br.generators().any(|x| !self.annihilates(x)) {
                    return Err(Error::Unstable(s.to_string(), g.to_string(), br.to_string()));
                }
            }
        }
        Ok(())
    }

    /// The cyclic vector `1 ⊗ w`.
    pub fn cyclic(&self) -> IndVector {
        IndVector { elem: UEElement::one() }
    }

    /// `word · w`, normalized.
    pub fn word_vector(&self, word: &[Generator]) -> Result<IndVector> {
        Ok(IndVector {
            elem: self.nz.borrow_mut().normalize(word)?,
        })
    }

    /// `prefix(t) · coeff_word · w`, where `prefix(t)` is the PBW prefix with
    /// exponent triple `t`.
    pub fn basis_vector(&self, t: &Triple, coeff_word: &[Generator]) -> Result<IndVector> {
        let mut word = self.prefix_word(t);
        word.extend_from_slice(coeff_word);
        self.word_vector(&word)
    }

    /// The prefix word with exponents `t`, in sorted order.
    pub fn prefix_word(&self, t: &Triple) -> Vec<Generator> {
        let mut word = Vec::new();
        for n in 0..3 {
            let kind = self.kind.kind_of_component(n);
            for (s, mult) in t.component(n).iter() {
                for _ in 0..mult {
                    word.push(kind.at(self.kind.prefix_index(kind, s)));
                }
            }
        }
        word.sort_by(|a, b| self.kind.generator_order().compare(*a, *b));
        word
    }

    /// Applies one generator.
    pub fn act(&self, g: Generator, v: &IndVector) -> Result<IndVector> {
        if let ModuleKind::Opaque { .. } = self.kind {
            if !g.is_central() {
                if let Some((m, _)) = v.elem.iter().find(|(m, _)| !self.split(m).1.is_empty()) {
                    return Err(Error::OpaqueDepth(format!(
                        "{g} applied to a term with coefficient part {m}"
                    )));
                }
            }
        }
        Ok(IndVector {
            elem: self.nz.borrow_mut().left_mul_gen(g, &v.elem)?,
        })
    }

    /// Applies a word, rightmost letter first.
    pub fn act_word(&self, word: &[Generator], v: &IndVector) -> Result<IndVector> {
        let mut acc = v.clone();
        for &g in word.iter().rev() {
            acc = self.act(g, &acc)?;
        }
        Ok(acc)
    }

    /// Splits a normal-form word into prefix and coefficient part.
    pub fn split<'a>(&self, m: &'a UEMonomial) -> (&'a [Generator], &'a [Generator]) {
        let cut = m.word.iter().position(|g| !self.in_prefix(*g)).unwrap_or(m.word.len());
        m.word.split_at(cut)
    }

    /// Exponent triple of a sorted prefix word.
    pub fn triple_of(&self, prefix: &[Generator]) -> Triple {
        let mut comps = [ExponentVector::zero(), ExponentVector::zero(), ExponentVector::zero()];
        for g in prefix {
            let kind = g.kind().expect("prefix generators are noncentral");
            let base = self.kind.prefix_index(kind, 0);
            let s = base - g.index().expect("noncentral");
            comps[self.kind.component_of(kind)].add_at(s as usize, 1);
        }
        let [a, b, c] = comps;
        Triple(a, b, c)
    }

    /// Coefficient vectors grouped by prefix triple.
    pub fn components(&self, v: &IndVector) -> Vec<(Triple, UEElement)> {
        let mut groups: Vec<(Triple, UEElement)> = Vec::new();
        let mut index: std::collections::HashMap<Triple, usize> = Default::default();
        for (m, c) in v.elem.iter() {
            let (prefix, rest) = self.split(m);
            let t = self.triple_of(prefix);
            let slot = *index.entry(t.clone()).or_insert_with(|| {
                groups.push((t, UEElement::zero()));
                groups.len() - 1
            });
            groups[slot].1.add_term(UEMonomial::of_word(rest.to_vec()), c);
        }
        groups
    }

    /// Prefix triples with a nonzero coefficient vector.
    pub fn supp(&self, v: &IndVector) -> Vec<Triple> {
        self.components(v).into_iter().map(|(t, _)| t).collect()
    }

    /// The largest element of `supp(v)` under the module's degree order.
    pub fn degree(&self, v: &IndVector) -> Result<Triple> {
        self.supp(v)
            .into_iter()
            .max_by(|a, b| self.degree_order.compare_triples(a, b))
            .ok_or(Error::ZeroVector)
    }

    /// The coefficient vector at prefix triple `t`.
    pub fn coefficient_at(&self, v: &IndVector, t: &Triple) -> UEElement {
        self.components(v)
            .into_iter()
            .find(|(s, _)| s == t)
            .map(|(_, e)| e)
            .unwrap_or_default()
    }

    /// The coefficient-part element when `v` has no prefix, else `None`.
    pub fn v_part(&self, v: &IndVector) -> Option<UEElement> {
        let comps = self.components(v);
        match comps.as_slice() {
            [] => Some(UEElement::zero()),
            [(t, e)] if t.is_zero() => Some(e.clone()),
            _ => None,
        }
    }

    pub fn to_json(&self, v: &IndVector) -> IndVectorJson {
        let mut terms: BTreeMap<Vec<String>, BTreeMap<String, String>> = BTreeMap::new();
        for (m, c) in v.elem.iter() {
            let (prefix, rest) = self.split(m);
            let key: Vec<String> = prefix.iter().map(|g| g.to_string()).collect();
            terms
                .entry(key)
                .or_default()
                .insert(format!("{}*w", UEMonomial::of_word(rest.to_vec())), c.to_string());
        }
        IndVectorJson {
            module: self.kind,
            subalgebra: self.kind.inducing().unwrap_or_else(|| self.kind.annihilators()).name(),
            bindings: self.spec.bindings().clone(),
            terms: terms
                .into_iter()
                .map(|(prefix, coeff_vector)| IndTermJson { prefix, coeff_vector })
                .collect(),
        }
    }
}

fn force(b: &mut Bindings, p: Param, value: Scalar) -> Result<()> {
    match b.get(p) {
        Some(old) if old.substitute(b) != value.substitute(b) => Err(Error::Invalid(format!(
            "binding {p}={old} conflicts with required {p}={value}"
        ))),
        Some(_) => Ok(()),
        None => {
            b.insert(p, value);
            Ok(())
        }
    }
}

/// Checks `g(h v) - h(g v) = [g, h] v` on each sample.
pub fn module_axiom_check(module: &InducedModule, samples: &[(Generator, Generator, IndVector)]) -> Report {
    use rayon::prelude::*;
    let outcomes: Vec<Result<Option<(String, String, String)>>> = samples
        .par_iter()
        .map_init(module.factory(), |m, (g, h, v)| {
            let ghv = m.act(*g, &m.act(*h, v)?)?;
            let hgv = m.act(*h, &m.act(*g, v)?)?;
            let lhs = ghv.sub(&hgv);
            let br = m.spec().bracket_gens(*g, *h)?;
            let mut rhs = IndVector::zero();
            for (x, c) in br.iter() {
                rhs = rhs.add(&m.act(*x, v)?.scale(c));
            }
            Ok(if lhs == rhs {
                None
            } else {
                Some((format!("g={g}, h={h}, v={v}"), rhs.to_string(), lhs.to_string()))
            })
        })
        .collect();
    let mut report = Report::new("check-module-axiom")
        .with_config("module", module.kind().name())
        .with_config("bindings", module.spec().bindings().to_string());
    for o in outcomes {
        match o {
            Ok(None) => report.pass(),
            Ok(Some((i, e, g))) => report.fail(i, e, g),
            Err(e) => report.fail("", "no error", e.to_string()),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn universal(k: i64, d: u32, l: i64) -> InducedModule {
        InducedModule::new(ModuleKind::Universal { k, d, l }, Bindings::new()).unwrap()
    }

    #[test]
    fn thresholds_are_validated() {
        let bad = InducedModule::new(ModuleKind::Universal { k: 1, d: 0, l: 1 }, Bindings::new());
        assert!(matches!(bad, Err(Error::Thresholds(_))));
        let bad = InducedModule::new(ModuleKind::Universal { k: 0, d: 0, l: 3 }, Bindings::new());
        assert!(matches!(bad, Err(Error::Thresholds(_))));
    }

    #[test]
    fn universal_examples() {
        let m = universal(1, 0, 2);
        let w = m.cyclic();
        assert!(m.act(J(3), &w).unwrap().is_zero());
        let g1 = m.act(G(1), &w).unwrap();
        assert!(!g1.is_zero());
        assert_eq!(m.v_part(&g1).unwrap().to_string(), "G(1)");
        let j0w = m.act(J(0), &w).unwrap();
        assert!(m.act(L(3), &j0w).unwrap().is_zero());
    }

    #[test]
    fn central_elements_act_by_level() {
        let m = universal(1, 0, 2);
        let v = m.word_vector(&[J(-1)]).unwrap();
        assert_eq!(m.act(C3, &v).unwrap(), v.scale(&Scalar::param(Param::Ell3)));
    }

    #[test]
    fn inducing_subalgebra_acts_on_coefficients() {
        let m = universal(1, 0, 2);
        let v = m.act(L(1), &m.cyclic()).unwrap();
        assert_eq!(m.v_part(&v).unwrap().to_string(), "L(1)");
    }

    #[test]
    fn g_on_j_prefix() {
        // [G_2, J_{-1}] = -F G_1 and G_2 w = 0
        let m = universal(1, 0, 2);
        let v = m.word_vector(&[J(-1)]).unwrap();
        let got = m.act(G(2), &v).unwrap();
        let want = m.word_vector(&[G(1)]).unwrap().scale(&-Scalar::param(Param::F));
        assert_eq!(got, want);
    }

    #[test]
    fn degree_examples() {
        let m = universal(1, 0, 2);
        assert_eq!(m.degree(&m.cyclic()).unwrap(), Triple::zero());
        let v = m.word_vector(&[L(-1)]).unwrap().add(&m.word_vector(&[J(-1)]).unwrap());
        let want = Triple(ExponentVector::unit(1), ExponentVector::zero(), ExponentVector::zero());
        assert_eq!(m.degree(&v).unwrap(), want);
        assert!(matches!(m.degree(&IndVector::zero()), Err(Error::ZeroVector)));
    }

    #[test]
    fn prefix_word_round_trip() {
        let m = universal(1, 1, 4);
        let t = Triple(
            ExponentVector::from_slice(&[1, 1]),
            ExponentVector::from_slice(&[0, 2]),
            ExponentVector::unit(3),
        );
        let word = m.prefix_word(&t);
        assert_eq!(word, vec![L(-2), L(-1), G(-3), G(-3), J(-3)]);
        assert_eq!(m.triple_of(&word), t);
    }

    #[test]
    fn opaque_forces_f_zero_and_limits_depth() {
        let m = InducedModule::new(ModuleKind::Opaque { k: 1, d1: 1, d2: 0 }, Bindings::new()).unwrap();
        assert_eq!(m.spec().f(), &Scalar::zero());
        let v = m.act(G(0), &m.cyclic()).unwrap();
        assert!(matches!(m.act(L(-1), &v), Err(Error::OpaqueDepth(_))));
        let conflicting = InducedModule::new(
            ModuleKind::Opaque { k: 1, d1: 1, d2: 0 },
            Bindings::new().with(Param::F, 1),
        );
        assert!(conflicting.is_err());
    }

    #[test]
    fn universal_annihilators_are_stable() {
        for (k, d, l) in [(1, 0, 2), (0, 1, 3), (1, 1, 4)] {
            universal(k, d, l).stability_check(10).unwrap();
        }
    }

    #[test]
    fn json_shape() {
        let m = universal(1, 0, 2);
        let v = m.word_vector(&[L(-1), G(1)]).unwrap();
        let json = serde_json::to_value(m.to_json(&v)).unwrap();
        assert_eq!(json["terms"][0]["prefix"][0], "L(-1)");
        assert_eq!(json["terms"][0]["coeff_vector"]["G(1)*w"], "1");
        assert_eq!(json["module"]["kind"], "universal");
    }
}
