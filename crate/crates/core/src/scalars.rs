//! Exact coefficients: sparse polynomials over the rationals in a closed
//! alphabet of formal parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Number of formal parameters in the alphabet.
pub const NPARAMS: usize = 9;

/// The formal parameters coefficients may depend on.
///
/// `Alpha`, `Beta` and `F` define the algebra, `Ell1..Ell3` are the values of
/// the central elements on a module of fixed level, and `Lambda`, `Mu`, `Nu`
/// are free scalars used when building test vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Param {
    Alpha,
    Beta,
    F,
    Ell1,
    Ell2,
    Ell3,
    Lambda,
    Mu,
    Nu,
}

impl Param {
    pub const ALL: [Param; NPARAMS] = [
        Param::Alpha,
        Param::Beta,
        Param::F,
        Param::Ell1,
        Param::Ell2,
        Param::Ell3,
        Param::Lambda,
        Param::Mu,
        Param::Nu,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::Alpha => "alpha",
            Param::Beta => "beta",
            Param::F => "F",
            Param::Ell1 => "ell1",
            Param::Ell2 => "ell2",
            Param::Ell3 => "ell3",
            Param::Lambda => "lambda",
            Param::Mu => "mu",
            Param::Nu => "nu",
        }
    }

    pub fn from_name(name: &str) -> Option<Param> {
        Param::ALL.into_iter().find(|p| p.name() == name)
    }

    /// Level parameter carried by the central element `C_{i}`, `i` in 1..=3.
    pub fn ell(i: usize) -> Param {
        match i {
            1 => Param::Ell1,
            2 => Param::Ell2,
            3 => Param::Ell3,
            _ => panic!("no central element C{i}"),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

type Exps = [u8; NPARAMS];

const ONE_EXPS: Exps = [0; NPARAMS];

/// A polynomial in [`Param`] with rational coefficients.
///
/// Terms are kept sorted by exponent vector and never hold a zero coefficient,
/// so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: Vec<(Exps, BigRational)>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`; panics on a zero denominator.
    pub fn from_frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        if q.is_zero() {
            Scalar::zero()
        } else {
            Scalar {
                terms: vec![(ONE_EXPS, q)],
            }
        }
    }

    pub fn param(p: Param) -> Self {
        let mut e = ONE_EXPS;
        e[p.index()] = 1;
        Scalar {
            terms: vec![(e, BigRational::one())],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the polynomial is not the zero polynomial. Vanishing at some
    /// specialization of the parameters is allowed.
    pub fn is_identically_nonzero(&self) -> bool {
        !self.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == ONE_EXPS && self.terms[0].1.is_one()
    }

    /// The value of a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(e, q)] if *e == ONE_EXPS => Some(q.clone()),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Parameters that occur with a nonzero exponent.
    pub fn params(&self) -> Vec<Param> {
        Param::ALL
            .into_iter()
            .filter(|p| self.terms.iter().any(|(e, _)| e[p.index()] > 0))
            .collect()
    }

    pub fn degree_in(&self, p: Param) -> u32 {
        self.terms.iter().map(|(e, _)| e[p.index()] as u32).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, q: &BigRational) -> Scalar {
        if q.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(e, c)| (*e, c * q)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Simultaneous substitution of parameters by scalars.
    pub fn substitute(&self, bindings: &Bindings) -> Scalar {
        if bindings.is_empty() || self.is_zero() {
            return self.clone();
        }
        let touched: Vec<Param> = self
            .params()
            .into_iter()
            .filter(|p| bindings.get(*p).is_some())
            .collect();
        if touched.is_empty() {
            return self.clone();
        }
        let mut powers: BTreeMap<(Param, u8), Scalar> = BTreeMap::new();
        let mut out = Accumulator::default();
        for (e, c) in &self.terms {
            let mut rest = *e;
            let mut factor = Scalar::one();
            for &p in &touched {
                let k = e[p.index()];
                if k == 0 {
                    continue;
                }
                rest[p.index()] = 0;
                let value = bindings.get(p).expect("touched parameter is bound");
                let pw = powers.entry((p, k)).or_insert_with(|| value.pow(k as u32)).clone();
                factor = &factor * &pw;
            }
            let mono = Scalar {
                terms: vec![(rest, c.clone())],
            };
            out.add_scalar(&(&mono * &factor));
        }
        out.finish()
    }

    /// Divides by `p - root`, where `root` does not involve `p`.
    ///
    /// Returns `None` when the remainder is nonzero.
    pub fn div_linear(&self, p: Param, root: &Scalar) -> Option<Scalar> {
        assert_eq!(root.degree_in(p), 0, "root must not involve the divisor variable");
        // Synthetic division on the coefficients of p^k, highest degree first.
        let deg = self.degree_in(p) as usize;
        let mut coeffs = vec![Scalar::zero(); deg + 1];
        for (e, c) in &self.terms {
            let k = e[p.index()] as usize;
            let mut rest = *e;
            rest[p.index()] = 0;
            coeffs[k] += &Scalar {
                terms: vec![(rest, c.clone())],
            };
        }
        let mut quotient = vec![Scalar::zero(); deg.max(1)];
        let mut carry = Scalar::zero();
        for k in (0..=deg).rev() {
            let cur = &coeffs[k] + &carry;
            if k == 0 {
                if !cur.is_zero() {
                    return None;
                }
            } else {
                carry = &cur * root;
                quotient[k - 1] = cur;
            }
        }
        let mut out = Scalar::zero();
        let x = Scalar::param(p);
        for (k, q) in quotient.into_iter().enumerate() {
            out += &(&q * &x.pow(k as u32));
        }
        Some(out)
    }
}

#[derive(Default)]
struct Accumulator {
    map: BTreeMap<Exps, BigRational>,
}

impl Accumulator {
    fn add_term(&mut self, e: Exps, c: BigRational) {
        use std::collections::btree_map::Entry;
        match self.map.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_scalar(&mut self, s: &Scalar) {
        for (e, c) in &s.terms {
            self.add_term(*e, c.clone());
        }
    }

    fn finish(self) -> Scalar {
        Scalar {
            terms: self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

fn merge(a: &Scalar, b: &Scalar, negate_b: bool) -> Scalar {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() || j < b.terms.len() {
        let take_a = j >= b.terms.len() || (i < a.terms.len() && a.terms[i].0 < b.terms[j].0);
        let take_b = i >= a.terms.len() || (j < b.terms.len() && b.terms[j].0 < a.terms[i].0);
        if take_a {
            out.push(a.terms[i].clone());
            i += 1;
        } else if take_b {
            let (e, c) = &b.terms[j];
            out.push((*e, if negate_b { -c } else { c.clone() }));
            j += 1;
        } else {
            let c = if negate_b {
                &a.terms[i].1 - &b.terms[j].1
            } else {
                &a.terms[i].1 + &b.terms[j].1
            };
            if !c.is_zero() {
                out.push((a.terms[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    Scalar { terms: out }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        merge(self, rhs, false)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        merge(self, rhs, true)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if let [(e, q)] = self.terms.as_slice() {
            if *e == ONE_EXPS {
                return rhs.scale(q);
            }
        }
        if let [(e, q)] = rhs.terms.as_slice() {
            if *e == ONE_EXPS {
                return self.scale(q);
            }
        }
        let mut acc = Accumulator::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb.iter()) {
                    *x = x.checked_add(*y).expect("parameter exponent overflow");
                }
                acc.add_term(e, ca * cb);
            }
        }
        acc.finish()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = merge(self, rhs, false);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = merge(self, rhs, true);
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Param> for Scalar {
    fn from(p: Param) -> Self {
        Scalar::param(p)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn fmt_monomial(e: &Exps) -> String {
    let mut parts = Vec::new();
    for p in Param::ALL {
        match e[p.index()] {
            0 => {}
            1 => parts.push(p.name().to_string()),
            k => parts.push(format!("{}^{}", p.name(), k)),
        }
    }
    parts.join("*")
}

impl Scalar {
    /// Terms in display order: higher total degree first, constant last.
    fn display_terms(&self) -> Vec<&(Exps, BigRational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().map(|&x| x as u32).sum();
            let db: u32 = b.iter().map(|&x| x as u32).sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        ts
    }

    /// True when printing needs parentheses as a factor of a product.
    pub fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }

    /// Sign-aware rendering: `(negative, magnitude)`, meaningful for
    /// single-term scalars.
    pub(crate) fn split_sign(&self) -> (bool, Scalar) {
        if self.terms.len() == 1 && self.terms[0].1.is_negative() {
            (true, -self)
        } else {
            (false, self.clone())
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.display_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if n == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mono = fmt_monomial(e);
            if mono.is_empty() {
                f.write_str(&fmt_rational(&mag))?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A partial assignment of parameters to scalars, applied simultaneously.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bindings {
    map: BTreeMap<Param, Scalar>,
}

impl Bindings {
    pub fn new() -> Self {
        Bindings::default()
    }

    pub fn with(mut self, p: Param, value: impl Into<Scalar>) -> Self {
        self.map.insert(p, value.into());
        self
    }

    pub fn insert(&mut self, p: Param, value: Scalar) {
        self.map.insert(p, value);
    }

    pub fn get(&self, p: Param) -> Option<&Scalar> {
        self.map.get(&p)
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Param, &Scalar)> {
        self.map.iter()
    }

    /// Bindings equivalent to applying `self` and then `later`.
    pub fn then(&self, later: &Bindings) -> Bindings {
        let mut map: BTreeMap<Param, Scalar> = self.map.iter().map(|(p, v)| (*p, v.substitute(later))).collect();
        for (p, v) in &later.map {
            map.entry(*p).or_insert_with(|| v.clone());
        }
        Bindings { map }
    }
}

impl fmt::Display for Bindings {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.map.iter().map(|(p, v)| format!("{p}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for Bindings {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.map.len()))?;
        for (p, v) in &self.map {
            m.serialize_entry(p.name(), &v.to_string())?;
        }
        m.end()
    }
}
