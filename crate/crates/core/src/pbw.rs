//! The universal enveloping algebra: normal ordering of generator words into a
//! PBW basis by commutator rewriting.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use serde::Serialize;

use crate::algebra::SubalgebraSpec;
use crate::algebra::{fmt_term, join_terms, AlgebraSpec, Generator, Kind, Level, LieElement};
use crate::error::Result;
use crate::scalars::{Bindings, Scalar};

/// A total order on noncentral generators.
///
/// Generators are compared by tier first, then by kind rank, then by index
/// ascending, so in a sorted word the most negative index of a block sits
/// leftmost. The tier of `g` is the number of `tiers` containing it: with
/// nested subalgebras `tiers[0] ⊇ tiers[1] ⊇ ...`, generators outside all of
/// them come first and those inside the innermost come last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorOrder {
    name: &'static str,
    ranks: [u8; 3],
    tiers: Vec<SubalgebraSpec>,
}

impl GeneratorOrder {
    /// `L`-block, then `G`-block, then `J`-block.
    pub fn order_31() -> Self {
        GeneratorOrder {
            name: "o31",
            ranks: [0, 2, 1],
            tiers: Vec::new(),
        }
    }

    /// `G`-block, then `J`-block, then `L`-block.
    pub fn order_32() -> Self {
        GeneratorOrder {
            name: "o32",
            ranks: [2, 1, 0],
            tiers: Vec::new(),
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "o31" => Some(Self::order_31()),
            "o32" => Some(Self::order_32()),
            _ => None,
        }
    }

    pub fn with_tiers(mut self, tiers: Vec<SubalgebraSpec>) -> Self {
        self.tiers = tiers;
        self
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn tiers(&self) -> &[SubalgebraSpec] {
        &self.tiers
    }

    fn rank(&self, k: Kind) -> u8 {
        self.ranks[k as usize]
    }

    pub fn tier(&self, g: Generator) -> usize {
        self.tiers.iter().filter(|s| s.contains(g)).count()
    }

    fn key(&self, g: Generator) -> (usize, u8, i64) {
        match g.kind() {
            Some(k) => (self.tier(g), self.rank(k), g.index().unwrap_or(0)),
            None => (usize::MAX, g.central_slot().unwrap_or(0) as u8, 0),
        }
    }

    pub fn compare(&self, a: Generator, b: Generator) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn is_sorted(&self, word: &[Generator]) -> bool {
        word.windows(2).all(|w| self.compare(w[0], w[1]) != Ordering::Greater)
    }
}

/// A sorted word of noncentral generators times a monomial in `C1..C3`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct UEMonomial {
    pub word: Vec<Generator>,
    pub central: [u32; 3],
}

impl UEMonomial {
    pub fn one() -> Self {
        UEMonomial::default()
    }

    pub fn of_word(word: Vec<Generator>) -> Self {
        UEMonomial { word, central: [0; 3] }
    }

    pub fn len(&self) -> usize {
        self.word.len() + self.central.iter().sum::<u32>() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn times_central(&self, c: &[u32; 3]) -> UEMonomial {
        let mut m = self.clone();
        for (e, k) in m.central.iter_mut().zip(c) {
            *e += k;
        }
        m
    }
}

impl fmt::Display for UEMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.word.iter().map(|g| g.to_string()).collect();
        for (i, &e) in self.central.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("C{}", i + 1)),
                e => parts.push(format!("C{}^{e}", i + 1)),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

impl Serialize for UEMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A linear combination of PBW monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UEElement {
    terms: BTreeMap<UEMonomial, Scalar>,
}

impl UEElement {
    pub fn zero() -> Self {
        UEElement::default()
    }

    pub fn one() -> Self {
        UEElement::monomial(UEMonomial::one(), Scalar::one())
    }

    pub fn monomial(m: UEMonomial, c: Scalar) -> Self {
        let mut e = UEElement::zero();
        e.add_term(m, &c);
        e
    }

    /// A word taken verbatim, without sorting. Only meaningful as input to
    /// [`Normalizer::normalize_element`].
    /// A Lie element as a degree-one element of `U`.
    pub fn from_lie(e: &LieElement) -> Self {
        let mut out = UEElement::zero();
        for (g, c) in e.iter() {
            let m = match g.central_slot() {
                Some(i) => {
                    let mut m = UEMonomial::one();
                    m.central[i - 1] = 1;
                    m
                }
                None => UEMonomial::of_word(vec![*g]),
            };
            out.add_term(m, c);
        }
        out
    }

    pub fn raw_word(word: &[Generator]) -> Self {
        UEElement::monomial(UEMonomial::of_word(word.to_vec()), Scalar::one())
    }

    pub fn add_term(&mut self, m: UEMonomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &UEElement, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), &(x * c));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&UEMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &UEMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> UEElement {
        let mut out = UEElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn substitute(&self, b: &Bindings) -> UEElement {
        let mut out = UEElement::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), &x.substitute(b));
        }
        out
    }

    pub fn sub(&self, other: &UEElement) -> UEElement {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1));
        out
    }

    pub fn add(&self, other: &UEElement) -> UEElement {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }
}

impl fmt::Display for UEElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // longest words first, pure central terms last
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| {
            (a.word.is_empty(), std::cmp::Reverse(a.len()), *a).cmp(&(
                b.word.is_empty(),
                std::cmp::Reverse(b.len()),
                *b,
            ))
        });
        f.write_str(&join_terms(ts.into_iter().map(|(m, c)| {
            if m.is_empty() {
                let (neg, mag) = c.split_sign();
                if c.is_compound() {
                    (false, format!("({c})"))
                } else {
                    (neg, mag.to_string())
                }
            } else {
                fmt_term(c, &m.to_string())
            }
        })))
    }
}

impl fmt::Debug for UEElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UEElement({self})")
    }
}

/// Normal ordering engine for one algebra and one generator order.
///
/// In module mode the central elements act by a level and every sorted word
/// ending in a generator of the innermost tier is dropped. Because the
/// innermost tier `A` sorts last, such words span the left ideal `U·A`, and
/// the surviving words form a basis of `U ⊗_{U(A + center)} C`.
///
/// Holds a memo table and is meant to be owned by one thread.
pub struct Normalizer {
    spec: AlgebraSpec,
    order: GeneratorOrder,
    level: Option<Level>,
    memo: HashMap<(Generator, Vec<Generator>), Rc<UEElement>>,
}

impl Normalizer {
    pub fn new(spec: AlgebraSpec, order: GeneratorOrder) -> Self {
        Normalizer {
            spec,
            order,
            level: None,
            memo: HashMap::new(),
        }
    }

    pub fn module(spec: AlgebraSpec, order: GeneratorOrder, level: Level) -> Self {
        assert!(!order.tiers.is_empty(), "module mode needs an annihilator tier");
        Normalizer {
            spec,
            order,
            level: Some(level),
            memo: HashMap::new(),
        }
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn order(&self) -> &GeneratorOrder {
        &self.order
    }

    pub fn level(&self) -> Option<&Level> {
        self.level.as_ref()
    }

    /// True for generators that kill the cyclic vector in module mode.
    pub fn is_annihilator(&self, g: Generator) -> bool {
        self.level.is_some() && !g.is_central() && self.order.tier(g) == self.order.tiers.len()
    }

    fn word_survives(&self, word: &[Generator]) -> bool {
        match word.last() {
            Some(&g) => !self.is_annihilator(g),
            None => true,
        }
    }

    /// `g * word` in normal form, for a sorted `word` without centrals.
    fn insert(&mut self, g: Generator, word: &[Generator]) -> Result<Rc<UEElement>> {
        let key = (g, word.to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let out = self.insert_uncached(g, word)?;
        let out = Rc::new(out);
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    fn insert_uncached(&mut self, g: Generator, word: &[Generator]) -> Result<UEElement> {
        if word.is_empty() || self.order.compare(g, word[0]) != Ordering::Greater {
            let mut w = Vec::with_capacity(word.len() + 1);
            w.push(g);
            w.extend_from_slice(word);
            if !self.word_survives(&w) {
                return Ok(UEElement::zero());
            }
            return Ok(UEElement::monomial(UEMonomial::of_word(w), Scalar::one()));
        }
        // g x rest = x (g rest) + [g, x] rest
        let x = word[0];
        let rest = &word[1..];
        let mut out = UEElement::zero();
        let tail = self.insert(g, rest)?;
        let lifted = self.left_mul_gen(x, &tail)?;
        out.add_scaled(&lifted, &Scalar::one());
        let br = self.spec.bracket_gens(g, x)?;
        for (y, c) in br.iter() {
            match y.central_slot() {
                Some(i) => self.add_central_times(&mut out, i, c, rest),
                None => {
                    let t = self.insert(*y, rest)?;
                    out.add_scaled(&t, c);
                }
            }
        }
        Ok(out)
    }

    fn add_central_times(&self, out: &mut UEElement, slot: usize, c: &Scalar, word: &[Generator]) {
        if !self.word_survives(word) {
            return;
        }
        match &self.level {
            Some(level) => out.add_term(UEMonomial::of_word(word.to_vec()), &(c * level.value(slot))),
            None => {
                let mut m = UEMonomial::of_word(word.to_vec());
                m.central[slot - 1] += 1;
                out.add_term(m, c);
            }
        }
    }

    /// `g * e` for a normalized `e`.
    pub fn left_mul_gen(&mut self, g: Generator, e: &UEElement) -> Result<UEElement> {
        let mut out = UEElement::zero();
        if let Some(slot) = g.central_slot() {
            for (m, c) in e.iter() {
                match &self.level {
                    Some(level) => out.add_term(m.clone(), &(c * level.value(slot))),
                    None => {
                        let mut m = m.clone();
                        m.central[slot - 1] += 1;
                        out.add_term(m, c);
                    }
                }
            }
            return Ok(out);
        }
        self.spec.check_generator(g)?;
        for (m, c) in e.iter() {
            let t = self.insert(g, &m.word)?;
            for (tm, tc) in t.iter() {
                out.add_term(tm.times_central(&m.central), &(tc * c));
            }
        }
        Ok(out)
    }

    /// Normal form of a word of generators.
    pub fn normalize(&mut self, word: &[Generator]) -> Result<UEElement> {
        let mut acc = UEElement::one();
        for &g in word.iter().rev() {
            acc = self.left_mul_gen(g, &acc)?;
        }
        Ok(acc)
    }

    /// Normal form of an arbitrary (possibly unsorted) combination of words.
    pub fn normalize_element(&mut self, e: &UEElement) -> Result<UEElement> {
        let mut out = UEElement::zero();
        for (m, c) in e.iter() {
            let mut w = m.word.clone();
            for (i, &k) in m.central.iter().enumerate() {
                for _ in 0..k {
                    w.push(Generator::central(i + 1));
                }
            }
            let n = self.normalize(&w)?;
            out.add_scaled(&n, c);
        }
        Ok(out)
    }

    /// Product of two normalized elements.
    pub fn multiply(&mut self, a: &UEElement, b: &UEElement) -> Result<UEElement> {
        let mut out = UEElement::zero();
        for (m, c) in a.iter() {
            let mut acc = b.clone();
            for &g in m.word.iter().rev() {
                acc = self.left_mul_gen(g, &acc)?;
            }
            for (i, &k) in m.central.iter().enumerate() {
                for _ in 0..k {
                    acc = self.left_mul_gen(Generator::central(i + 1), &acc)?;
                }
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    /// A single generator as a normalized element.
    pub fn gen(&mut self, g: Generator) -> Result<UEElement> {
        self.normalize(&[g])
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }
}

/// One-shot normal form in `U` of the algebra.
pub fn normalize(spec: &AlgebraSpec, order: &GeneratorOrder, word: &[Generator]) -> Result<UEElement> {
    Normalizer::new(spec.clone(), order.clone()).normalize(word)
}

pub fn multiply(spec: &AlgebraSpec, order: &GeneratorOrder, a: &UEElement, b: &UEElement) -> Result<UEElement> {
    Normalizer::new(spec.clone(), order.clone()).multiply(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn ehv31() -> Normalizer {
        Normalizer::new(AlgebraSpec::ehv(), GeneratorOrder::order_31())
    }

    #[test]
    fn single_swap() {
        let mut n = ehv31();
        let got = n.normalize(&[L(2), L(-2)]).unwrap();
        assert_eq!(got.to_string(), "L(-2)*L(2) + 4*L(0) + 1/2*C1");
    }

    #[test]
    fn single_generator_is_fixed() {
        let mut n = ehv31();
        for g in Generator::window(-3, 3) {
            assert_eq!(n.normalize(&[g]).unwrap(), UEElement::raw_word(&[g]));
        }
    }

    #[test]
    fn g_modes_commute() {
        let mut n = ehv31();
        let a = n.normalize(&[G(1), G(2)]).unwrap();
        let b = n.normalize(&[G(2), G(1)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 1);
    }

    #[test]
    fn commutator_is_bracket() {
        let spec = AlgebraSpec::ehv();
        let mut n = ehv31();
        for x in Generator::window(-3, 3) {
            for y in Generator::window(-3, 3) {
                let xy = n.normalize(&[x, y]).unwrap();
                let yx = n.normalize(&[y, x]).unwrap();
                let want = UEElement::from_lie(&spec.bracket_gens(x, y).unwrap());
                assert_eq!(xy.sub(&yx), want, "[{x}, {y}]");
            }
        }
    }

    #[test]
    fn multiply_unit_and_commutator() {
        let mut n = ehv31();
        let l2 = n.gen(L(2)).unwrap();
        let lm2 = n.gen(L(-2)).unwrap();
        assert_eq!(n.multiply(&UEElement::one(), &l2).unwrap(), l2);
        let d = n.multiply(&l2, &lm2).unwrap().sub(&n.multiply(&lm2, &l2).unwrap());
        assert_eq!(d.to_string(), "4*L(0) + 1/2*C1");
    }

    #[test]
    fn output_words_are_sorted_and_not_longer() {
        let mut n = ehv31();
        let word = [G(2), L(1), J(-1), L(-3), G(-2)];
        let e = n.normalize(&word).unwrap();
        for (m, _) in e.iter() {
            assert!(n.order().is_sorted(&m.word));
            assert!(m.len() <= word.len());
        }
    }

    #[test]
    fn module_mode_prunes_annihilators() {
        use crate::scalars::Param;
        let spec = AlgebraSpec::ehv_with(Bindings::new().with(Param::Beta, Scalar::param(Param::Alpha)));
        let order = GeneratorOrder::order_32().with_tiers(vec![SubalgebraSpec::Plus]);
        let mut n = Normalizer::module(spec, order, Level::generic());
        assert!(n.normalize(&[G(0)]).unwrap().is_zero());
        let e = n.normalize(&[J(1), J(-1)]).unwrap();
        assert_eq!(e, UEElement::monomial(UEMonomial::one(), Scalar::param(Param::Ell3)));
    }
}
