//! Generators, bracket tables, the isomorphisms between parameter choices and
//! subalgebra membership.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalars::{Bindings, Param, Scalar};

/// Noncentral generator families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Kind {
    L,
    J,
    G,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::L, Kind::J, Kind::G];

    pub fn at(self, n: i64) -> Generator {
        match self {
            Kind::L => Generator::L(n),
            Kind::J => Generator::J(n),
            Kind::G => Generator::G(n),
        }
    }
}

/// A basis element `L_m`, `J_m`, `G_m` or one of the central `C1..C3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    L(i64),
    J(i64),
    G(i64),
    C1,
    C2,
    C3,
}

impl Generator {
    pub fn is_central(self) -> bool {
        matches!(self, Generator::C1 | Generator::C2 | Generator::C3)
    }

    pub fn kind(self) -> Option<Kind> {
        match self {
            Generator::L(_) => Some(Kind::L),
            Generator::J(_) => Some(Kind::J),
            Generator::G(_) => Some(Kind::G),
            _ => None,
        }
    }

    pub fn index(self) -> Option<i64> {
        match self {
            Generator::L(n) | Generator::J(n) | Generator::G(n) => Some(n),
            _ => None,
        }
    }

    /// 1, 2 or 3 for the central generators.
    pub fn central_slot(self) -> Option<usize> {
        match self {
            Generator::C1 => Some(1),
            Generator::C2 => Some(2),
            Generator::C3 => Some(3),
            _ => None,
        }
    }

    pub fn central(slot: usize) -> Generator {
        match slot {
            1 => Generator::C1,
            2 => Generator::C2,
            3 => Generator::C3,
            _ => panic!("no central element C{slot}"),
        }
    }

    /// All noncentral generators with index in `lo..=hi`.
    pub fn window(lo: i64, hi: i64) -> Vec<Generator> {
        Kind::ALL
            .into_iter()
            .flat_map(|k| (lo..=hi).map(move |n| k.at(n)))
            .collect()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::L(n) => write!(f, "L({n})"),
            Generator::J(n) => write!(f, "J({n})"),
            Generator::G(n) => write!(f, "G({n})"),
            Generator::C1 => f.write_str("C1"),
            Generator::C2 => f.write_str("C2"),
            Generator::C3 => f.write_str("C3"),
        }
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Writes `coeff * body` as one summand, returning whether it is negative.
pub(crate) fn fmt_term(coeff: &Scalar, body: &str) -> (bool, String) {
    if coeff.is_compound() {
        return (false, format!("({coeff})*{body}"));
    }
    let (neg, mag) = coeff.split_sign();
    if mag.is_one() {
        (neg, body.to_string())
    } else {
        (neg, format!("{mag}*{body}"))
    }
}

/// Joins rendered summands with `+`/`-`.
pub(crate) fn join_terms(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (n, (neg, s)) in terms.into_iter().enumerate() {
        if n == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&s);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A finite linear combination of generators.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LieElement {
    terms: BTreeMap<Generator, Scalar>,
}

impl LieElement {
    pub fn zero() -> Self {
        LieElement::default()
    }

    pub fn gen(g: Generator) -> Self {
        LieElement::term(g, Scalar::one())
    }

    pub fn term(g: Generator, c: Scalar) -> Self {
        let mut e = LieElement::zero();
        e.add_term(g, &c);
        e
    }

    pub fn add_term(&mut self, g: Generator, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: Generator) -> Scalar {
        self.terms.get(&g).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, &Scalar)> {
        self.terms.iter()
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.terms.keys().copied()
    }

    pub fn scale(&self, c: &Scalar) -> LieElement {
        let mut out = LieElement::zero();
        for (g, x) in &self.terms {
            out.add_term(*g, &(x * c));
        }
        out
    }

    pub fn substitute(&self, b: &Bindings) -> LieElement {
        let mut out = LieElement::zero();
        for (g, x) in &self.terms {
            out.add_term(*g, &x.substitute(b));
        }
        out
    }

    /// Replaces each central `C_i` by the scalar `level[i]`; returns the
    /// noncentral part and the accumulated scalar.
    pub fn at_level(&self, level: &Level) -> (LieElement, Scalar) {
        let mut body = LieElement::zero();
        let mut constant = Scalar::zero();
        for (g, x) in &self.terms {
            match g.central_slot() {
                Some(i) => constant += &(x * level.value(i)),
                None => body.add_term(*g, x),
            }
        }
        (body, constant)
    }
}

impl Add<&LieElement> for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(*g, c);
        }
        out
    }
}

impl Sub<&LieElement> for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(*g, &(-c));
        }
        out
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_terms(self.terms.iter().map(|(g, c)| fmt_term(c, &g.to_string()))))
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieElement({self})")
    }
}

/// Values of the central elements on a module (or in a comparison).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level([Scalar; 3]);

impl Level {
    pub fn new(c1: Scalar, c2: Scalar, c3: Scalar) -> Self {
        Level([c1, c2, c3])
    }

    /// `C_i` acts as the formal parameter `ell_i`.
    pub fn generic() -> Self {
        Level::new(
            Scalar::param(Param::Ell1),
            Scalar::param(Param::Ell2),
            Scalar::param(Param::Ell3),
        )
    }

    pub fn value(&self, slot: usize) -> &Scalar {
        &self.0[slot - 1]
    }

    pub fn substitute(&self, b: &Bindings) -> Level {
        Level::new(
            self.0[0].substitute(b),
            self.0[1].substitute(b),
            self.0[2].substitute(b),
        )
    }
}

/// Sign distinguishing the `+` and `-` rows of the comparison tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// How the level `k` of the Bershadsky-Polyakov rows is specified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BpLevel {
    /// A rational value of `k` (`k != -3`).
    Value(BigRational),
    /// `c(k) = ell1`, `(2k+3)/6 = ell2`, `(2k+3)/3 = 2 ell2`.
    Symbolic,
}

impl BpLevel {
    pub fn value(num: i64, den: i64) -> Self {
        BpLevel::Value(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The three central constants `(c(k), (2k+3)/6, (2k+3)/3)`.
    pub fn constants(&self) -> [Scalar; 3] {
        match self {
            BpLevel::Symbolic => {
                let l2 = Scalar::param(Param::Ell2);
                [Scalar::param(Param::Ell1), l2.clone(), &Scalar::from_int(2) * &l2]
            }
            BpLevel::Value(k) => {
                let one = BigRational::from_integer(BigInt::from(1));
                let two = BigRational::from_integer(BigInt::from(2));
                let three = BigRational::from_integer(BigInt::from(3));
                let four = BigRational::from_integer(BigInt::from(4));
                let six = BigRational::from_integer(BigInt::from(6));
                assert!(
                    k + &three != BigRational::from_integer(BigInt::from(0)),
                    "k = -3 is excluded"
                );
                let twok3 = &two * k + &three;
                let c = -(&four * (k + &one) * &twok3) / (k + &three);
                [
                    Scalar::from_rational(c),
                    Scalar::from_rational(&twok3 / &six),
                    Scalar::from_rational(&twok3 / &three),
                ]
            }
        }
    }
}

/// Which bracket table to use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Table {
    /// The extended Heisenberg-Virasoro algebra.
    Ehv,
    /// The twisted Heisenberg-Virasoro algebra: no `G` generators.
    Hv,
    /// Even rows of the Ramond `N=2` algebra with one fermion flavour
    /// (`G` stands for `G^+` or `G^-`); the central charge is carried by `C1`.
    N2(Sign),
    /// Bershadsky-Polyakov rows for `L, J, G^+` or `L, J, G^-`. The table's
    /// central constants are carried by `C1`, which comparisons evaluate at 1.
    Bp(Sign, BpLevel),
    /// The EHV table with `[L_m, G_n]` perturbed by `-m^2 G_{m+n}`; a
    /// negative control that is not a Lie algebra.
    Corrupted,
}

impl Table {
    pub fn name(&self) -> String {
        match self {
            Table::Ehv => "EHV".into(),
            Table::Hv => "HV".into(),
            Table::N2(Sign::Plus) => "N2_plus".into(),
            Table::N2(Sign::Minus) => "N2_minus".into(),
            Table::Bp(Sign::Plus, _) => "BP_plus".into(),
            Table::Bp(Sign::Minus, _) => "BP_minus".into(),
            Table::Corrupted => "EHV_corrupted".into(),
        }
    }
}

/// A bracket table together with parameter bindings.
///
/// The structure constants `alpha`, `beta`, `F` are resolved once against the
/// bindings at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    table: Table,
    bindings: Bindings,
    alpha: Scalar,
    beta: Scalar,
    f: Scalar,
}

impl AlgebraSpec {
    pub fn new(table: Table, bindings: Bindings) -> Self {
        let alpha = Scalar::param(Param::Alpha).substitute(&bindings);
        let beta = Scalar::param(Param::Beta).substitute(&bindings);
        let f = Scalar::param(Param::F).substitute(&bindings);
        AlgebraSpec {
            table,
            bindings,
            alpha,
            beta,
            f,
        }
    }

    /// The EHV table with symbolic `alpha`, `beta`, `F`.
    pub fn ehv() -> Self {
        AlgebraSpec::new(Table::Ehv, Bindings::new())
    }

    pub fn ehv_with(bindings: Bindings) -> Self {
        AlgebraSpec::new(Table::Ehv, bindings)
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn bindings(&self) -> &Bindings {
        &self.bindings
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn beta(&self) -> &Scalar {
        &self.beta
    }

    pub fn f(&self) -> &Scalar {
        &self.f
    }

    /// `alpha + n + m beta`, the scalar in `[L_m, G_n] = -(alpha + n + m beta) G_{m+n}`.
    pub fn lg_coefficient(&self, m: i64, n: i64) -> Scalar {
        &(&self.alpha + &Scalar::from_int(n)) + &(&Scalar::from_int(m) * &self.beta)
    }

    /// Bracket of two generators.
    pub fn bracket_gens(&self, x: Generator, y: Generator) -> Result<LieElement> {
        use Generator::*;
        self.check_generator(x)?;
        self.check_generator(y)?;
        if x.is_central() || y.is_central() {
            return Ok(LieElement::zero());
        }
        let neg = |e: LieElement| e.scale(&Scalar::from_int(-1));
        Ok(match (x, y) {
            (L(m), L(n)) => self.ll(m, n),
            (L(m), J(n)) => self.lj(m, n),
            (J(m), L(n)) => neg(self.lj(n, m)),
            (J(m), J(n)) => self.jj(m, n),
            (L(m), G(n)) => self.lg(m, n),
            (G(m), L(n)) => neg(self.lg(n, m)),
            (J(m), G(n)) => self.jg(m, n),
            (G(m), J(n)) => neg(self.jg(n, m)),
            (G(_), G(_)) => LieElement::zero(),
            _ => unreachable!("central generators handled above"),
        })
    }

    pub fn check_generator(&self, g: Generator) -> Result<()> {
        match (&self.table, g) {
            (Table::Hv, Generator::G(_)) => Err(Error::UnknownGenerator {
                generator: g.to_string(),
                table: self.table.name(),
            }),
            (Table::N2(_) | Table::Bp(..), Generator::C2 | Generator::C3) => Err(Error::UnknownGenerator {
                generator: g.to_string(),
                table: self.table.name(),
            }),
            _ => Ok(()),
        }
    }

    fn central_unit(&self, slot: usize) -> LieElement {
        match &self.table {
            Table::Bp(_, lvl) => LieElement::term(Generator::C1, lvl.constants()[slot - 1].clone()),
            Table::N2(_) => match slot {
                1 => LieElement::gen(Generator::C1),
                3 => LieElement::term(Generator::C1, Scalar::from_frac(1, 3)),
                _ => LieElement::zero(),
            },
            _ => LieElement::gen(Generator::central(slot)),
        }
    }

    fn ll(&self, m: i64, n: i64) -> LieElement {
        let mut e = LieElement::term(Generator::L(m + n), Scalar::from_int(m - n));
        if m + n == 0 {
            let c = Scalar::from_frac(m * m * m - m, 12);
            e = &e + &self.central_unit(1).scale(&c);
        }
        e
    }

    fn lj(&self, m: i64, n: i64) -> LieElement {
        let mut e = LieElement::term(Generator::J(m + n), Scalar::from_int(-n));
        if m + n == 0 {
            e = &e + &self.central_unit(2).scale(&Scalar::from_int(-(m * m + m)));
        }
        e
    }

    fn jj(&self, m: i64, n: i64) -> LieElement {
        if m + n == 0 {
            self.central_unit(3).scale(&Scalar::from_int(m))
        } else {
            LieElement::zero()
        }
    }

    fn lg(&self, m: i64, n: i64) -> LieElement {
        let c = match &self.table {
            Table::N2(_) => Scalar::from_frac(m - 2 * n, 2),
            Table::Bp(Sign::Plus, _) => Scalar::from_int(-n),
            Table::Bp(Sign::Minus, _) => Scalar::from_int(m - n),
            Table::Corrupted => -(&self.lg_coefficient(m, n) + &Scalar::from_int(m * m)),
            _ => -self.lg_coefficient(m, n),
        };
        LieElement::term(Generator::G(m + n), c)
    }

    fn jg(&self, m: i64, n: i64) -> LieElement {
        let c = match &self.table {
            Table::N2(s) | Table::Bp(s, _) => Scalar::from_int(s.as_int()),
            _ => self.f.clone(),
        };
        LieElement::term(Generator::G(m + n), c)
    }

    /// Bilinear extension of [`AlgebraSpec::bracket_gens`].
    pub fn bracket(&self, a: &LieElement, b: &LieElement) -> Result<LieElement> {
        let mut out = LieElement::zero();
        for (x, cx) in a.iter() {
            for (y, cy) in b.iter() {
                let br = self.bracket_gens(*x, *y)?;
                if br.is_zero() {
                    continue;
                }
                out = &out + &br.scale(&(cx * cy));
            }
        }
        Ok(out)
    }
}

/// Action of `x` (an `L`, `J` or central generator) on the basis vector
/// `G_n` of the intermediate-series module.
pub fn intermediate_series_action(x: Generator, n: i64) -> Result<LieElement> {
    if let Generator::G(_) = x {
        return Err(Error::UnknownGenerator {
            generator: x.to_string(),
            table: "HV".into(),
        });
    }
    AlgebraSpec::ehv().bracket_gens(x, Generator::G(n))
}

/// Cyclic Jacobi sum `[[a,b],c] + [[b,c],a] + [[c,a],b]`.
pub fn jacobi_sum(spec: &AlgebraSpec, a: Generator, b: Generator, c: Generator) -> Result<LieElement> {
    let (ea, eb, ec) = (LieElement::gen(a), LieElement::gen(b), LieElement::gen(c));
    let t1 = spec.bracket(&spec.bracket(&ea, &eb)?, &ec)?;
    let t2 = spec.bracket(&spec.bracket(&eb, &ec)?, &ea)?;
    let t3 = spec.bracket(&spec.bracket(&ec, &ea)?, &eb)?;
    Ok(&(&t1 + &t2) + &t3)
}

fn table_generators(spec: &AlgebraSpec, lo: i64, hi: i64) -> Vec<Generator> {
    Generator::window(lo, hi)
        .into_iter()
        .filter(|g| spec.check_generator(*g).is_ok())
        .collect()
}

/// Jacobi identity over all unordered triples (with repetition) of noncentral
/// generators with index in `[-window, window]`.
pub fn jacobi_check(spec: &AlgebraSpec, window: i64) -> Report {
    use rayon::prelude::*;
    let gens = table_generators(spec, -window, window);
    let mut triples = Vec::new();
    for a in 0..gens.len() {
        for b in a..gens.len() {
            for c in b..gens.len() {
                triples.push((gens[a], gens[b], gens[c]));
            }
        }
    }
    let outcomes: Vec<Option<(String, String)>> = triples
        .par_iter()
        .map(|&(a, b, c)| match jacobi_sum(spec, a, b, c) {
            Ok(s) if s.is_zero() => None,
            Ok(s) => Some((format!("{a}, {b}, {c}"), s.to_string())),
            Err(e) => Some((format!("{a}, {b}, {c}"), e.to_string())),
        })
        .collect();
    let mut report = Report::new("check-jacobi")
        .with_config("table", spec.table().name())
        .with_config("bindings", spec.bindings().to_string())
        .with_config("window", window);
    for o in outcomes {
        match o {
            None => report.pass(),
            Some((inputs, got)) => report.fail(inputs, "0", got),
        }
    }
    report
}

/// The four isomorphisms between parameter choices of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Phi {
    /// `G_m -> G_{m-p}`: parameters `(alpha, beta, F) -> (alpha + p, beta, F)`.
    Shift(i64),
    /// `G_m -> (alpha + m) G_m`: `(alpha, 0, 0) -> (alpha, 1, 0)`, for `alpha` not an integer.
    Rescale,
    /// `J_m -> F J_m`, `C2 -> F C2`, `C3 -> F^2 C3`: `(alpha, beta, F) -> (alpha, beta, 1)`.
    FNormalize,
    /// `L_m -> L_m + m J_m`, `J_m -> -J_m + 2 delta_{m,0} C2`, `G_m -> -G_m`:
    /// `(0, 0, 1) -> (0, -1, -1)` when `C3 = 2 C2`.
    Flip,
}

impl Phi {
    /// Builds `phi_1..phi_4`; `p` is the shift of `phi_1`.
    pub fn from_index(which: u8, p: i64) -> Result<Phi> {
        match which {
            1 => Ok(Phi::Shift(p)),
            2 => Ok(Phi::Rescale),
            3 => Ok(Phi::FNormalize),
            4 => Ok(Phi::Flip),
            _ => Err(Error::UnknownIsomorphism(which)),
        }
    }

    pub fn name(self) -> String {
        match self {
            Phi::Shift(p) => format!("phi1(p={p})"),
            Phi::Rescale => "phi2".into(),
            Phi::FNormalize => "phi3".into(),
            Phi::Flip => "phi4".into(),
        }
    }

    /// Source and target algebras.
    pub fn specs(self) -> (AlgebraSpec, AlgebraSpec) {
        let a = || Scalar::param(Param::Alpha);
        match self {
            Phi::Shift(p) => (
                AlgebraSpec::ehv(),
                AlgebraSpec::ehv_with(Bindings::new().with(Param::Alpha, &a() + &Scalar::from_int(p))),
            ),
            Phi::Rescale => (
                AlgebraSpec::ehv_with(Bindings::new().with(Param::Beta, 0).with(Param::F, 0)),
                AlgebraSpec::ehv_with(Bindings::new().with(Param::Beta, 1).with(Param::F, 0)),
            ),
            Phi::FNormalize => (
                AlgebraSpec::ehv(),
                AlgebraSpec::ehv_with(Bindings::new().with(Param::F, 1)),
            ),
            Phi::Flip => (
                AlgebraSpec::ehv_with(
                    Bindings::new()
                        .with(Param::Alpha, 0)
                        .with(Param::Beta, 0)
                        .with(Param::F, 1),
                ),
                AlgebraSpec::ehv_with(
                    Bindings::new()
                        .with(Param::Alpha, 0)
                        .with(Param::Beta, -1)
                        .with(Param::F, -1),
                ),
            ),
        }
    }

    /// Side condition that is not a polynomial identity and is only recorded.
    pub fn side_condition(self) -> Option<&'static str> {
        match self {
            Phi::Rescale => Some("alpha not an integer"),
            Phi::FNormalize => Some("F nonzero"),
            Phi::Flip => Some("C3 = 2 C2"),
            Phi::Shift(_) => None,
        }
    }

    pub fn apply_gen(self, g: Generator) -> LieElement {
        use Generator::*;
        let f = || Scalar::param(Param::F);
        match (self, g) {
            (Phi::Shift(p), G(m)) => LieElement::gen(G(m - p)),
            (Phi::Rescale, G(m)) => LieElement::term(G(m), &Scalar::param(Param::Alpha) + &Scalar::from_int(m)),
            (Phi::FNormalize, C2) => LieElement::term(C2, f()),
            (Phi::FNormalize, C3) => LieElement::term(C3, f().pow(2)),
            (Phi::FNormalize, J(m)) => LieElement::term(J(m), f()),
            (Phi::Flip, L(m)) => &LieElement::gen(L(m)) + &LieElement::term(J(m), Scalar::from_int(m)),
            (Phi::Flip, J(m)) => {
                let mut e = LieElement::term(J(m), Scalar::from_int(-1));
                if m == 0 {
                    e.add_term(C2, &Scalar::from_int(2));
                }
                e
            }
            (Phi::Flip, G(m)) => LieElement::term(G(m), Scalar::from_int(-1)),
            _ => LieElement::gen(g),
        }
    }

    pub fn apply(self, e: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (g, c) in e.iter() {
            out = &out + &self.apply_gen(*g).scale(c);
        }
        out
    }
}

/// `phi(which, p, g)`.
pub fn phi(which: u8, p: i64, g: Generator) -> Result<LieElement> {
    Ok(Phi::from_index(which, p)?.apply_gen(g))
}

/// The failure of `phi` to preserve one bracket, evaluated at the generic level.
#[derive(Clone, Debug)]
pub struct Defect {
    pub x: Generator,
    pub y: Generator,
    pub body: LieElement,
    pub constant: Scalar,
}

impl Defect {
    pub fn is_zero(&self) -> bool {
        self.body.is_zero() && self.constant.is_zero()
    }
}

/// `phi([x,y]) - [phi x, phi y]` for all ordered pairs of noncentral generators
/// in the window. Central elements are evaluated at `C_i -> ell_i`, then
/// `relation` is substituted.
pub fn homomorphism_defects(phi: Phi, window: i64, relation: &Bindings) -> Result<Vec<Defect>> {
    let (src, tgt) = phi.specs();
    let level = Level::generic();
    let gens = Generator::window(-window, window);
    let mut out = Vec::new();
    for &x in &gens {
        for &y in &gens {
            let lhs = phi.apply(&src.bracket_gens(x, y)?);
            let rhs = tgt.bracket(&phi.apply_gen(x), &phi.apply_gen(y))?;
            let (body, constant) = (&lhs - &rhs).at_level(&level);
            out.push(Defect {
                x,
                y,
                body: body.substitute(relation),
                constant: constant.substitute(relation),
            });
        }
    }
    Ok(out)
}

/// The relation `ell3 -> 2 ell2` required by `phi_4`.
pub fn flip_relation() -> Bindings {
    Bindings::new().with(Param::Ell3, &Scalar::from_int(2) * &Scalar::param(Param::Ell2))
}

pub fn homomorphism_check(phi: Phi, window: i64) -> Result<Report> {
    let relation = match phi {
        Phi::Flip => flip_relation(),
        _ => Bindings::new(),
    };
    let mut report = Report::new("check-iso")
        .with_config("phi", phi.name())
        .with_config("window", window)
        .with_config("relation", relation.to_string());
    if let Some(cond) = phi.side_condition() {
        report = report.with_config("side_condition", cond);
    }
    for d in homomorphism_defects(phi, window, &relation)? {
        report.record(
            d.is_zero(),
            || format!("{}, {}", d.x, d.y),
            || "0".into(),
            || format!("{} + ({})", d.body, d.constant),
        );
    }
    Ok(report)
}

/// Which comparison table to match against the EHV table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Embedding {
    N2Plus,
    N2Minus,
    BpPlus,
    BpMinus,
}

impl Embedding {
    pub const ALL: [Embedding; 4] = [
        Embedding::N2Plus,
        Embedding::N2Minus,
        Embedding::BpPlus,
        Embedding::BpMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Embedding::N2Plus => "N2_plus",
            Embedding::N2Minus => "N2_minus",
            Embedding::BpPlus => "BP_plus",
            Embedding::BpMinus => "BP_minus",
        }
    }

    fn sign(self) -> Sign {
        match self {
            Embedding::N2Plus | Embedding::BpPlus => Sign::Plus,
            Embedding::N2Minus | Embedding::BpMinus => Sign::Minus,
        }
    }

    /// The EHV parameters `(alpha, beta, F)` the table should match.
    pub fn ehv_bindings(self) -> Bindings {
        let s = self.sign().as_int();
        match self {
            Embedding::N2Plus | Embedding::N2Minus => Bindings::new()
                .with(Param::Alpha, 0)
                .with(Param::Beta, Scalar::from_frac(-1, 2))
                .with(Param::F, s),
            Embedding::BpPlus => Bindings::new()
                .with(Param::Alpha, 0)
                .with(Param::Beta, 0)
                .with(Param::F, 1),
            Embedding::BpMinus => Bindings::new()
                .with(Param::Alpha, 0)
                .with(Param::Beta, -1)
                .with(Param::F, -1),
        }
    }
}

/// Levels at which the BP rows are compared by default: rational `k` values
/// and the symbolic level.
pub fn default_bp_levels() -> Vec<BpLevel> {
    vec![
        BpLevel::value(1, 1),
        BpLevel::value(-1, 2),
        BpLevel::value(-2, 1),
        BpLevel::value(5, 3),
        BpLevel::Symbolic,
    ]
}

/// Compares the even bracket rows of `which` with the EHV table under the
/// identification of parameters and central elements, for all pairs of
/// noncentral generators in the window.
pub fn embedding_check(which: Embedding, window: i64) -> Result<Report> {
    let mut report = Report::new("check-embed")
        .with_config("embedding", which.name())
        .with_config("window", window)
        .with_config("ehv_bindings", which.ehv_bindings().to_string());
    let ehv = AlgebraSpec::ehv_with(which.ehv_bindings());
    let gens = Generator::window(-window, window);
    let cases: Vec<(AlgebraSpec, Level, Level, String)> = match which {
        Embedding::N2Plus | Embedding::N2Minus => {
            let l1 = Scalar::param(Param::Ell1);
            vec![(
                AlgebraSpec::new(Table::N2(which.sign()), Bindings::new()),
                Level::new(l1.clone(), Scalar::zero(), Scalar::zero()),
                Level::new(l1.clone(), Scalar::zero(), &l1 * &Scalar::from_frac(1, 3)),
                "c=ell1".to_string(),
            )]
        }
        Embedding::BpPlus | Embedding::BpMinus => default_bp_levels()
            .into_iter()
            .map(|lvl| {
                let [c1, c2, c3] = lvl.constants();
                let label = match &lvl {
                    BpLevel::Value(k) => format!("k={k}"),
                    BpLevel::Symbolic => "k=symbolic".to_string(),
                };
                (
                    AlgebraSpec::new(Table::Bp(which.sign(), lvl), Bindings::new()),
                    Level::new(Scalar::one(), Scalar::zero(), Scalar::zero()),
                    Level::new(c1, c2, c3),
                    label,
                )
            })
            .collect(),
    };
    for (other, other_level, ehv_level, label) in &cases {
        for &x in &gens {
            for &y in &gens {
                let lhs = other.bracket_gens(x, y)?.at_level(other_level);
                let rhs = ehv.bracket_gens(x, y)?.at_level(ehv_level);
                report.record(
                    lhs == rhs,
                    || format!("[{x}, {y}] at {label}"),
                    || format!("{} + ({})", rhs.0, rhs.1),
                    || format!("{} + ({})", lhs.0, lhs.1),
                );
            }
        }
    }
    Ok(report)
}

/// The subalgebras used to induce modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubalgebraSpec {
    /// `C L_{-1} + sum_{n >= 0} (C L_n + C J_n + C G_n) + center`.
    Plus,
    /// `sum_{n <= -2} (C L_n + C J_n + C G_n) + C J_{-1} + C G_{-1}`.
    Minus,
    /// `sum_{i >= 0} (C L_i + C J_i + C G_{-d+i}) + center`.
    Ld { d: u32 },
    /// `sum_{i >= 0} (C G_{-d1+i} + C J_{-d2+i} + C L_i) + center`.
    LdBar { d1: u32, d2: u32 },
    /// `sum_{i >= 0} (C G_{k+i} + C J_{l+i} + C L_{m+i})`, no center.
    Fin { k: i64, l: i64, m: i64 },
}

impl SubalgebraSpec {
    pub fn contains(&self, g: Generator) -> bool {
        use Generator::*;
        let central = g.is_central();
        match *self {
            SubalgebraSpec::Plus => match g {
                L(n) => n >= -1,
                J(n) | G(n) => n >= 0,
                _ => true,
            },
            SubalgebraSpec::Minus => match g {
                L(n) => n <= -2,
                J(n) | G(n) => n <= -1,
                _ => false,
            },
            SubalgebraSpec::Ld { d } => match g {
                L(n) | J(n) => n >= 0,
                G(n) => n >= -(d as i64),
                _ => central,
            },
            SubalgebraSpec::LdBar { d1, d2 } => match g {
                G(n) => n >= -(d1 as i64),
                J(n) => n >= -(d2 as i64),
                L(n) => n >= 0,
                _ => central,
            },
            SubalgebraSpec::Fin { k, l, m } => match g {
                G(n) => n >= k,
                J(n) => n >= l,
                L(n) => n >= m,
                _ => false,
            },
        }
    }

    pub fn name(&self) -> String {
        match self {
            SubalgebraSpec::Plus => "L+".into(),
            SubalgebraSpec::Minus => "L-".into(),
            SubalgebraSpec::Ld { d } => format!("L_d(d={d})"),
            SubalgebraSpec::LdBar { d1, d2 } => format!("L_dbar(d1={d1},d2={d2})"),
            SubalgebraSpec::Fin { k, l, m } => format!("L^({k},{l},{m})"),
        }
    }
}

pub fn in_subalgebra(s: &SubalgebraSpec, g: Generator) -> bool {
    s.contains(g)
}

/// Whether `[g, h]` stays in `s` for all noncentral `g, h` of `s` in the window.
/// Returns the first offending pair.
pub fn closure_violation(
    spec: &AlgebraSpec,
    s: &SubalgebraSpec,
    window: i64,
) -> Result<Option<(Generator, Generator, LieElement)>> {
    let gens: Vec<Generator> = Generator::window(-window, window)
        .into_iter()
        .filter(|g| s.contains(*g))
        .collect();
    for &g in &gens {
        for &h in &gens {
            let br = spec.bracket_gens(g, h)?;
            if br.generators().any(|x| !s.contains(x)) {
                return Ok(Some((g, h, br)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn a() -> Scalar {
        Scalar::param(Param::Alpha)
    }
    fn b() -> Scalar {
        Scalar::param(Param::Beta)
    }

    #[test]
    fn bracket_examples() {
        let s = AlgebraSpec::ehv();
        let e = s.bracket_gens(L(2), L(-2)).unwrap();
        assert_eq!(e.to_string(), "4*L(0) + 1/2*C1");

        let e = s.bracket_gens(L(1), J(-1)).unwrap();
        let mut want = LieElement::gen(J(0));
        want.add_term(C2, &Scalar::from_int(-2));
        assert_eq!(e, want);

        assert!(s.bracket_gens(G(5), G(-3)).unwrap().is_zero());

        let e = s.bracket_gens(L(1), G(0)).unwrap();
        assert_eq!(e, LieElement::term(G(1), -(&a() + &b())));

        assert_eq!(
            s.bracket_gens(J(3), J(-3)).unwrap(),
            LieElement::term(C3, Scalar::from_int(3))
        );
    }

    #[test]
    fn intermediate_series_examples() {
        assert_eq!(
            intermediate_series_action(L(1), 0).unwrap(),
            LieElement::term(G(1), -(&a() + &b()))
        );
        assert!(intermediate_series_action(C1, 7).unwrap().is_zero());
        assert_eq!(
            intermediate_series_action(J(0), 0).unwrap(),
            LieElement::term(G(0), Scalar::param(Param::F))
        );
        assert!(intermediate_series_action(G(1), 0).is_err());
    }

    #[test]
    fn hv_table_rejects_g() {
        let s = AlgebraSpec::new(Table::Hv, Bindings::new());
        assert!(matches!(
            s.bracket_gens(L(1), G(0)),
            Err(Error::UnknownGenerator { .. })
        ));
        assert!(s.bracket_gens(L(1), J(0)).is_ok());
    }

    #[test]
    fn skew_symmetry() {
        let s = AlgebraSpec::ehv();
        for x in Generator::window(-4, 4) {
            for y in Generator::window(-4, 4) {
                let xy = s.bracket_gens(x, y).unwrap();
                let yx = s.bracket_gens(y, x).unwrap();
                assert!((&xy + &yx).is_zero(), "[{x},{y}]");
            }
        }
    }

    #[test]
    fn jacobi_single_triple() {
        let s = AlgebraSpec::ehv();
        assert!(jacobi_sum(&s, L(2), L(-2), J(0)).unwrap().is_zero());
    }

    #[test]
    fn corrupted_table_fails_jacobi() {
        let s = AlgebraSpec::new(Table::Corrupted, Bindings::new());
        let r = jacobi_check(&s, 2);
        assert!(r.failure_count > 0);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(1, 3, G(5)).unwrap(), LieElement::gen(G(2)));
        let mut want = LieElement::term(J(0), Scalar::from_int(-1));
        want.add_term(C2, &Scalar::from_int(2));
        assert_eq!(phi(4, 0, J(0)).unwrap(), want);
        assert_eq!(phi(3, 0, C2).unwrap(), LieElement::term(C2, Scalar::param(Param::F)));
        assert!(phi(5, 0, C2).is_err());
    }

    #[test]
    fn shift_composition() {
        for p in -3..=3 {
            for q in -3..=3 {
                for g in Generator::window(-4, 4) {
                    let twice = Phi::Shift(p).apply(&Phi::Shift(q).apply_gen(g));
                    assert_eq!(twice, Phi::Shift(p + q).apply_gen(g));
                }
            }
        }
    }

    #[test]
    fn flip_defect_on_l_j() {
        // Without the relation the (L_m, J_{-m}) defect is m^2 (ell3 - 2 ell2).
        let defects = homomorphism_defects(Phi::Flip, 3, &Bindings::new()).unwrap();
        let d = defects.iter().find(|d| d.x == L(2) && d.y == J(-2)).unwrap();
        assert!(d.body.is_zero());
        let want = &Scalar::from_int(4)
            * &(&Scalar::param(Param::Ell3) - &(&Scalar::from_int(2) * &Scalar::param(Param::Ell2)));
        assert_eq!(d.constant, want);
    }

    #[test]
    fn membership_examples() {
        let ld = SubalgebraSpec::Ld { d: 2 };
        assert!(ld.contains(G(-2)));
        assert!(!ld.contains(G(-3)));
        assert!(SubalgebraSpec::Plus.contains(L(-1)));
        assert!(!SubalgebraSpec::Plus.contains(J(-1)));
        let fin = SubalgebraSpec::Fin { k: 1, l: 2, m: 3 };
        assert!(fin.contains(J(2)));
        assert!(!fin.contains(J(1)));
    }

    #[test]
    fn subalgebras_are_closed() {
        let ehv = AlgebraSpec::ehv();
        let specs = [
            SubalgebraSpec::Ld { d: 0 },
            SubalgebraSpec::Ld { d: 2 },
            SubalgebraSpec::LdBar { d1: 1, d2: 0 },
            SubalgebraSpec::Fin { k: 1, l: 2, m: 3 },
            SubalgebraSpec::Fin { k: 0, l: 0, m: 0 },
        ];
        for s in specs {
            assert_eq!(closure_violation(&ehv, &s, 5).unwrap(), None, "{}", s.name());
        }
        // L+ and L- need alpha = beta: [L_{-1}, G_0] = -(alpha - beta) G_{-1}.
        assert!(closure_violation(&ehv, &SubalgebraSpec::Plus, 5).unwrap().is_some());
        let diag = AlgebraSpec::ehv_with(Bindings::new().with(Param::Beta, a()));
        assert_eq!(closure_violation(&diag, &SubalgebraSpec::Plus, 5).unwrap(), None);
        assert_eq!(closure_violation(&diag, &SubalgebraSpec::Minus, 5).unwrap(), None);
    }

    #[test]
    fn bp_constants_at_k_equal_one() {
        // c(1) = -4*2*5/4 = -10, (2k+3)/6 = 5/6, (2k+3)/3 = 5/3
        let [c1, c2, c3] = BpLevel::value(1, 1).constants();
        assert_eq!(c1, Scalar::from_int(-10));
        assert_eq!(c2, Scalar::from_frac(5, 6));
        assert_eq!(c3, Scalar::from_frac(5, 3));
    }
}
