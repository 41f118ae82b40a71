//! Finitely supported exponent vectors, their weight and size, and the total
//! orders used to define the degree of a vector in an induced module.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// A finitely supported map from positions `s >= 1` to multiplicities.
///
/// Stored densely from position 1 with trailing zeros trimmed, so equality of
/// the underlying vectors is equality of maps.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExponentVector {
    entries: Vec<u32>,
}

impl ExponentVector {
    pub fn zero() -> Self {
        ExponentVector::default()
    }

    /// The unit vector with a single 1 at position `s` (`s >= 1`).
    pub fn unit(s: usize) -> Self {
        let mut v = ExponentVector::zero();
        v.add_at(s, 1);
        v
    }

    /// Builds from multiplicities listed from position 1.
    pub fn from_slice(m: &[u32]) -> Self {
        let mut v = ExponentVector { entries: m.to_vec() };
        v.trim();
        v
    }

    fn trim(&mut self) {
        while self.entries.last() == Some(&0) {
            self.entries.pop();
        }
    }

    pub fn get(&self, s: usize) -> u32 {
        assert!(s >= 1, "positions start at 1");
        self.entries.get(s - 1).copied().unwrap_or(0)
    }

    pub fn add_at(&mut self, s: usize, n: u32) {
        assert!(s >= 1, "positions start at 1");
        if self.entries.len() < s {
            self.entries.resize(s, 0);
        }
        self.entries[s - 1] += n;
        self.trim();
    }

    /// Removes one from position `s`; `None` if that entry is already zero.
    pub fn minus_unit(&self, s: usize) -> Option<Self> {
        if self.get(s) == 0 {
            return None;
        }
        let mut v = self.clone();
        v.entries[s - 1] -= 1;
        v.trim();
        Some(v)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `sum s * i_s`.
    pub fn weight(&self) -> u64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(k, &m)| (k as u64 + 1) * m as u64)
            .sum()
    }

    /// `sum i_s`.
    pub fn size(&self) -> u64 {
        self.entries.iter().map(|&m| m as u64).sum()
    }

    /// Smallest position with a nonzero entry.
    pub fn min_position(&self) -> Option<usize> {
        self.entries.iter().position(|&m| m != 0).map(|k| k + 1)
    }

    /// Largest position with a nonzero entry.
    pub fn max_position(&self) -> Option<usize> {
        if self.entries.is_empty() {
            None
        } else {
            Some(self.entries.len())
        }
    }

    /// Multiplicities from position 1 up to the last nonzero entry.
    pub fn as_slice(&self) -> &[u32] {
        &self.entries
    }

    /// Iterates `(position, multiplicity)` over nonzero entries.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != 0)
            .map(|(k, &m)| (k + 1, m))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let n = self.entries.len().max(other.entries.len());
        let entries = (0..n)
            .map(|k| self.entries.get(k).copied().unwrap_or(0) + other.entries.get(k).copied().unwrap_or(0))
            .collect();
        ExponentVector { entries }
    }

    /// Every vector of the given weight.
    pub fn all_of_weight(w: u64) -> Vec<ExponentVector> {
        // Partitions of w, read as multiplicities of parts.
        fn rec(rem: u64, max_part: u64, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
            if rem == 0 {
                out.push(ExponentVector::from_slice(cur));
                return;
            }
            for part in (1..=max_part.min(rem)).rev() {
                if cur.len() < part as usize {
                    cur.resize(part as usize, 0);
                }
                cur[part as usize - 1] += 1;
                rec(rem - part, part, cur, out);
                cur[part as usize - 1] -= 1;
            }
        }
        let mut out = Vec::new();
        rec(w, w, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|m| m.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ExponentVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

/// Lexicographic order: the highest differing position decides.
pub fn compare_lex(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    let n = a.entries.len().max(b.entries.len());
    for s in (1..=n).rev() {
        match a.get(s).cmp(&b.get(s)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Reverse lexicographic order: the lowest differing position decides, and the
/// larger entry there is the larger vector.
pub fn compare_revlex(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    let n = a.entries.len().max(b.entries.len());
    for s in 1..=n {
        match a.get(s).cmp(&b.get(s)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// An element of `M x M x M`, the exponent data of one PBW prefix.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Triple(pub ExponentVector, pub ExponentVector, pub ExponentVector);

impl Triple {
    pub fn zero() -> Self {
        Triple::default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero() && self.1.is_zero() && self.2.is_zero()
    }

    pub fn total_weight(&self) -> u64 {
        self.0.weight() + self.1.weight() + self.2.weight()
    }

    pub fn component(&self, n: usize) -> &ExponentVector {
        match n {
            0 => &self.0,
            1 => &self.1,
            2 => &self.2,
            _ => panic!("triple component {n}"),
        }
    }

    /// The same triple with one removed at position `s` of component `n`.
    pub fn minus_unit(&self, n: usize, s: usize) -> Option<Triple> {
        let mut t = self.clone();
        let slot = match n {
            0 => &mut t.0,
            1 => &mut t.1,
            2 => &mut t.2,
            _ => panic!("triple component {n}"),
        };
        *slot = slot.minus_unit(s)?;
        Some(t)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0, self.1, self.2)
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The total orders on exponent vectors and triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderKind {
    /// `>` on single vectors.
    Lex,
    /// `≻` on single vectors.
    Revlex,
    /// Order (o) on triples `(k, i, j)` of an `L^k G^i J^j` prefix: total
    /// weight, then `w(k)`, then `k`, `i`, `j` each by revlex.
    PrincipalO,
    /// The alternative reading of order (o) in which the 5-tuple is scanned
    /// from its rightmost slot: total weight, `w(k)`, then `j`, `i`, `k` by
    /// revlex.
    PrincipalOTail,
    /// Order (o') on triples `(a, b, c)` of a `G^a J^b L^c` prefix: `w(c)`,
    /// then `c` and `b` by revlex, then `a` by lex.
    PrincipalOPrime,
}

impl OrderKind {
    pub fn compare_triples(self, x: &Triple, y: &Triple) -> Ordering {
        match self {
            OrderKind::PrincipalO => compare_principal_o(x, y),
            OrderKind::PrincipalOTail => compare_principal_o_tail(x, y),
            OrderKind::PrincipalOPrime => compare_principal_o_prime(x, y),
            OrderKind::Lex | OrderKind::Revlex => {
                panic!("{self:?} orders single vectors, not triples")
            }
        }
    }

    pub fn compare_vectors(self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        match self {
            OrderKind::Lex => compare_lex(a, b),
            OrderKind::Revlex => compare_revlex(a, b),
            _ => panic!("{self:?} orders triples, not single vectors"),
        }
    }
}

pub fn compare_principal_o(x: &Triple, y: &Triple) -> Ordering {
    x.total_weight()
        .cmp(&y.total_weight())
        .then_with(|| x.0.weight().cmp(&y.0.weight()))
        .then_with(|| compare_revlex(&x.0, &y.0))
        .then_with(|| compare_revlex(&x.1, &y.1))
        .then_with(|| compare_revlex(&x.2, &y.2))
}

pub fn compare_principal_o_tail(x: &Triple, y: &Triple) -> Ordering {
    x.total_weight()
        .cmp(&y.total_weight())
        .then_with(|| x.0.weight().cmp(&y.0.weight()))
        .then_with(|| compare_revlex(&x.2, &y.2))
        .then_with(|| compare_revlex(&x.1, &y.1))
        .then_with(|| compare_revlex(&x.0, &y.0))
}

pub fn compare_principal_o_prime(x: &Triple, y: &Triple) -> Ordering {
    x.2.weight()
        .cmp(&y.2.weight())
        .then_with(|| compare_revlex(&x.2, &y.2))
        .then_with(|| compare_revlex(&x.1, &y.1))
        .then_with(|| compare_lex(&x.0, &y.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(m: &[u32]) -> ExponentVector {
        ExponentVector::from_slice(m)
    }

    fn e(s: usize) -> ExponentVector {
        ExponentVector::unit(s)
    }

    fn z() -> ExponentVector {
        ExponentVector::zero()
    }

    #[test]
    fn weight_and_size() {
        let v = ev(&[2, 1]);
        assert_eq!((v.weight(), v.size()), (4, 3));
        assert_eq!((z().weight(), z().size()), (0, 0));
        assert_eq!((e(5).weight(), e(5).size()), (5, 1));
    }

    #[test]
    fn trailing_zeros_do_not_matter() {
        assert_eq!(ev(&[1, 0, 0]), ev(&[1]));
        assert_eq!(ev(&[0, 0]), z());
    }

    #[test]
    fn lex_and_revlex_examples() {
        assert_eq!(compare_lex(&e(2), &e(1)), Ordering::Greater);
        assert_eq!(compare_revlex(&e(1), &e(2)), Ordering::Greater);
        assert_eq!(compare_lex(&ev(&[1, 2]), &ev(&[1, 2])), Ordering::Equal);
        assert_eq!(compare_revlex(&ev(&[1, 2]), &ev(&[1, 2])), Ordering::Equal);
    }

    #[test]
    fn principal_o_examples() {
        let x = Triple(z(), z(), e(1));
        let y = Triple::zero();
        assert_eq!(compare_principal_o(&x, &y), Ordering::Greater);
        let x = Triple(e(1), z(), z());
        let y = Triple(z(), e(1), z());
        assert_eq!(compare_principal_o(&x, &y), Ordering::Greater);
        assert_eq!(compare_principal_o(&x, &x.clone()), Ordering::Equal);
    }

    #[test]
    fn principal_o_prime_examples() {
        let x = Triple(z(), z(), e(2));
        let y = Triple(z(), z(), e(1));
        assert_eq!(compare_principal_o_prime(&x, &y), Ordering::Greater);
        let x = Triple(z(), e(1), e(3));
        let y = Triple(z(), z(), e(3));
        assert_eq!(compare_principal_o_prime(&x, &y), Ordering::Greater);
        assert_eq!(compare_principal_o_prime(&x, &x.clone()), Ordering::Equal);
        // a is compared by lex: the highest position decides.
        let x = Triple(e(3), z(), z());
        let y = Triple(ev(&[5, 5]), z(), z());
        assert_eq!(compare_principal_o_prime(&x, &y), Ordering::Greater);
    }

    #[test]
    fn partitions_of_weight() {
        let counts: Vec<usize> = (0..8).map(|w| ExponentVector::all_of_weight(w).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        for v in ExponentVector::all_of_weight(6) {
            assert_eq!(v.weight(), 6);
        }
    }

    fn arb_vec() -> impl Strategy<Value = ExponentVector> {
        prop::collection::vec(0u32..3, 0..5).prop_map(|m| ExponentVector::from_slice(&m))
    }

    fn arb_triple() -> impl Strategy<Value = Triple> {
        (arb_vec(), arb_vec(), arb_vec()).prop_map(|(a, b, c)| Triple(a, b, c))
    }

    fn check_total_order(
        cmp: impl Fn(&Triple, &Triple) -> Ordering,
        a: &Triple,
        b: &Triple,
        c: &Triple,
    ) -> Result<(), TestCaseError> {
        prop_assert_eq!(cmp(a, b), cmp(b, a).reverse());
        prop_assert_eq!(cmp(a, b) == Ordering::Equal, a == b);
        if cmp(a, b) != Ordering::Greater && cmp(b, c) != Ordering::Greater {
            prop_assert_ne!(cmp(a, c), Ordering::Greater);
        }
        Ok(())
    }

    proptest! {
        #[test]
        fn vector_orders_are_total(a in arb_vec(), b in arb_vec(), c in arb_vec()) {
            for cmp in [compare_lex, compare_revlex] {
                prop_assert_eq!(cmp(&a, &b), cmp(&b, &a).reverse());
                prop_assert_eq!(cmp(&a, &b) == Ordering::Equal, a == b);
                if cmp(&a, &b) != Ordering::Greater && cmp(&b, &c) != Ordering::Greater {
                    prop_assert_ne!(cmp(&a, &c), Ordering::Greater);
                }
            }
        }

        #[test]
        fn triple_orders_are_total(a in arb_triple(), b in arb_triple(), c in arb_triple()) {
            check_total_order(compare_principal_o, &a, &b, &c)?;
            check_total_order(compare_principal_o_tail, &a, &b, &c)?;
            check_total_order(compare_principal_o_prime, &a, &b, &c)?;
        }

        #[test]
        fn principal_o_leads_with_total_weight(a in arb_triple(), b in arb_triple()) {
            if compare_principal_o(&a, &b) == Ordering::Greater {
                prop_assert!(a.total_weight() >= b.total_weight());
            }
        }

        #[test]
        fn adding_a_unit_raises_the_primary_key(t in arb_triple(), n in 0usize..3, s in 1usize..5) {
            let mut bigger = t.clone();
            match n {
                0 => bigger.0.add_at(s, 1),
                1 => bigger.1.add_at(s, 1),
                _ => bigger.2.add_at(s, 1),
            }
            prop_assert!(bigger.total_weight() > t.total_weight());
            prop_assert_eq!(compare_principal_o(&bigger, &t), Ordering::Greater);
            if n == 2 {
                prop_assert!(bigger.2.weight() > t.2.weight());
                prop_assert_eq!(compare_principal_o_prime(&bigger, &t), Ordering::Greater);
            }
        }
    }
}
