//! Finitely supported exponent vectors and the extended value with ∞.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::value_groups::PrimeLabel;

/// Outcome of comparing two values in a partially ordered group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingResult {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// An element of ⊕ᵢℤ: a sparse association list of (label, exponent),
/// strictly increasing in label order, with no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ValueVector {
    entries: Vec<(PrimeLabel, i64)>,
}

impl ValueVector {
    /// The zero vector.
    pub fn zero() -> Self {
        ValueVector { entries: Vec::new() }
    }

    /// Build from arbitrary (label, exponent) pairs: duplicates are summed,
    /// zeros dropped, labels sorted canonically.
    pub fn from_entries(pairs: impl IntoIterator<Item = (PrimeLabel, i64)>) -> Self {
        let mut entries: Vec<(PrimeLabel, i64)> = Vec::new();
        for (label, exp) in pairs {
            match entries.iter_mut().find(|(l, _)| *l == label) {
                Some((_, e)) => *e += exp,
                None => entries.push((label, exp)),
            }
        }
        entries.retain(|(_, e)| *e != 0);
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        ValueVector { entries }
    }

    /// The unit vector at one label.
    pub fn unit(label: PrimeLabel) -> Self {
        Self::from_entries([(label, 1)])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(PrimeLabel, i64)] {
        &self.entries
    }

    /// The exponent at a label (0 if absent).
    pub fn exponent(&self, label: &PrimeLabel) -> i64 {
        self.entries
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &PrimeLabel> {
        self.entries.iter().map(|(l, _)| l)
    }

    /// Walk the union of supports, yielding the pair of exponents at each.
    fn merged<'a>(
        &'a self,
        other: &'a ValueVector,
    ) -> impl Iterator<Item = (&'a PrimeLabel, i64, i64)> {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() || j < other.entries.len() {
            match (self.entries.get(i), other.entries.get(j)) {
                (Some((la, ea)), Some((lb, eb))) => match la.cmp(lb) {
                    std::cmp::Ordering::Less => {
                        out.push((la, *ea, 0));
                        i += 1;
                    }
                    std::cmp::Ordering::Greater => {
                        out.push((lb, 0, *eb));
                        j += 1;
                    }
                    std::cmp::Ordering::Equal => {
                        out.push((la, *ea, *eb));
                        i += 1;
                        j += 1;
                    }
                },
                (Some((la, ea)), None) => {
                    out.push((la, *ea, 0));
                    i += 1;
                }
                (None, Some((lb, eb))) => {
                    out.push((lb, 0, *eb));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        out.into_iter()
    }

    /// Componentwise sum, the group law.
    pub fn add(&self, other: &ValueVector) -> ValueVector {
        let entries = self
            .merged(other)
            .filter_map(|(l, a, b)| {
                let s = a + b;
                (s != 0).then(|| (l.clone(), s))
            })
            .collect();
        ValueVector { entries }
    }

    /// Componentwise negation, the group inverse.
    pub fn neg(&self) -> ValueVector {
        ValueVector {
            entries: self.entries.iter().map(|(l, e)| (l.clone(), -e)).collect(),
        }
    }

    pub fn sub(&self, other: &ValueVector) -> ValueVector {
        self.add(&other.neg())
    }

    /// Componentwise partial order: `Less`/`Greater` require every
    /// component ≤/≥ with at least one strict, `Incomparable` otherwise.
    pub fn compare(&self, other: &ValueVector) -> OrderingResult {
        let mut all_le = true;
        let mut all_ge = true;
        for (_, a, b) in self.merged(other) {
            if a < b {
                all_ge = false;
            }
            if a > b {
                all_le = false;
            }
        }
        match (all_le, all_ge) {
            (true, true) => OrderingResult::Equal,
            (true, false) => OrderingResult::Less,
            (false, true) => OrderingResult::Greater,
            (false, false) => OrderingResult::Incomparable,
        }
    }

    /// Greatest lower bound: componentwise min (absent components are 0).
    pub fn meet(&self, other: &ValueVector) -> ValueVector {
        let entries = self
            .merged(other)
            .filter_map(|(l, a, b)| {
                let m = a.min(b);
                (m != 0).then(|| (l.clone(), m))
            })
            .collect();
        ValueVector { entries }
    }

    /// Least upper bound: componentwise max.
    pub fn join(&self, other: &ValueVector) -> ValueVector {
        let entries = self
            .merged(other)
            .filter_map(|(l, a, b)| {
                let m = a.max(b);
                (m != 0).then(|| (l.clone(), m))
            })
            .collect();
        ValueVector { entries }
    }

    /// True iff the vector lies in the positive cone (≥ 0 componentwise).
    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|(_, e)| *e > 0)
    }

    /// Parse the canonical display form: `{}` or `{p:2=2, p:3=-2}`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidLabel(format!("malformed value vector `{text}`"));
        let inner = text
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(bad)?
            .trim();
        if inner.is_empty() {
            return Ok(ValueVector::zero());
        }
        let mut pairs = Vec::new();
        for part in inner.split(", ") {
            let (label_text, exp_text) = part.rsplit_once('=').ok_or_else(bad)?;
            let label = PrimeLabel::parse(label_text)?;
            let exp: i64 = exp_text.parse().map_err(|_| bad())?;
            pairs.push((label, exp));
        }
        Ok(Self::from_entries(pairs))
    }
}

impl fmt::Display for ValueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (label, exp)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{label}={exp}")?;
        }
        write!(f, "}}")
    }
}

/// A value vector or the formal ∞ assigned to ν(0). ∞ is strictly above
/// every finite value and absorbs addition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtendedValue {
    Finite(ValueVector),
    Infinity,
}

impl ExtendedValue {
    pub fn zero() -> Self {
        ExtendedValue::Finite(ValueVector::zero())
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ExtendedValue::Infinity)
    }

    pub fn finite(&self) -> Option<&ValueVector> {
        match self {
            ExtendedValue::Finite(v) => Some(v),
            ExtendedValue::Infinity => None,
        }
    }

    /// Sum, with ∞ absorbing.
    pub fn add(&self, other: &ExtendedValue) -> ExtendedValue {
        match (self, other) {
            (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => {
                ExtendedValue::Finite(a.add(b))
            }
            _ => ExtendedValue::Infinity,
        }
    }

    /// Difference. ∞ − finite = ∞; subtracting ∞ is undefined and panics.
    pub fn sub(&self, other: &ExtendedValue) -> ExtendedValue {
        match (self, other) {
            (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => {
                ExtendedValue::Finite(a.sub(b))
            }
            (ExtendedValue::Infinity, ExtendedValue::Finite(_)) => ExtendedValue::Infinity,
            (_, ExtendedValue::Infinity) => panic!("cannot subtract infinity"),
        }
    }

    /// Meet, with ∞ as the top element: meet(∞, x) = x.
    pub fn meet(&self, other: &ExtendedValue) -> ExtendedValue {
        match (self, other) {
            (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => {
                ExtendedValue::Finite(a.meet(b))
            }
            (ExtendedValue::Infinity, x) => x.clone(),
            (x, ExtendedValue::Infinity) => x.clone(),
        }
    }

    /// Join; anything joined with ∞ is ∞.
    pub fn join(&self, other: &ExtendedValue) -> ExtendedValue {
        match (self, other) {
            (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => {
                ExtendedValue::Finite(a.join(b))
            }
            _ => ExtendedValue::Infinity,
        }
    }

    pub fn compare(&self, other: &ExtendedValue) -> OrderingResult {
        match (self, other) {
            (ExtendedValue::Infinity, ExtendedValue::Infinity) => OrderingResult::Equal,
            (ExtendedValue::Infinity, ExtendedValue::Finite(_)) => OrderingResult::Greater,
            (ExtendedValue::Finite(_), ExtendedValue::Infinity) => OrderingResult::Less,
            (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => a.compare(b),
        }
    }

    /// True iff the value is ≥ 0, i.e. lies in the valuation ring's cone.
    pub fn is_nonnegative(&self) -> bool {
        matches!(
            self.compare(&ExtendedValue::zero()),
            OrderingResult::Greater | OrderingResult::Equal
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        if text == "infinity" {
            Ok(ExtendedValue::Infinity)
        } else {
            Ok(ExtendedValue::Finite(ValueVector::parse(text)?))
        }
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedValue::Finite(v) => v.fmt(f),
            ExtendedValue::Infinity => write!(f, "infinity"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    label: String,
    exp: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ExtendedValueJson {
    Infinity { infinity: bool },
    Finite { entries: Vec<EntryJson> },
}

impl Serialize for ExtendedValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let json = match self {
            ExtendedValue::Infinity => ExtendedValueJson::Infinity { infinity: true },
            ExtendedValue::Finite(v) => ExtendedValueJson::Finite {
                entries: v
                    .entries()
                    .iter()
                    .map(|(l, e)| EntryJson { label: l.to_string(), exp: *e })
                    .collect(),
            },
        };
        json.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExtendedValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match ExtendedValueJson::deserialize(d)? {
            ExtendedValueJson::Infinity { infinity } => {
                if infinity {
                    Ok(ExtendedValue::Infinity)
                } else {
                    Err(D::Error::custom("\"infinity\" must be true when present"))
                }
            }
            ExtendedValueJson::Finite { entries } => {
                let mut pairs = Vec::with_capacity(entries.len());
                for e in entries {
                    let label = PrimeLabel::parse(&e.label).map_err(D::Error::custom)?;
                    pairs.push((label, e.exp));
                }
                Ok(ExtendedValue::Finite(ValueVector::from_entries(pairs)))
            }
        }
    }
}

/// A minimal element of a non-empty set of vectors from the positive cone:
/// no member of the set is strictly below the result. Among the minimal
/// candidates the one with the lexicographically least serialized form is
/// returned, so the output is deterministic.
pub fn minimal_in_set(set: &[ValueVector]) -> Result<ValueVector> {
    if set.is_empty() {
        return Err(Error::InvalidArgument(
            "minimal element of an empty set is undefined".into(),
        ));
    }
    for v in set {
        if !matches!(
            v.compare(&ValueVector::zero()),
            OrderingResult::Greater | OrderingResult::Equal
        ) {
            return Err(Error::InvalidArgument(format!(
                "element {v} is not in the positive cone"
            )));
        }
    }
    let minimal = set
        .iter()
        .filter(|candidate| {
            !set.iter()
                .any(|other| other.compare(candidate) == OrderingResult::Less)
        })
        .min_by_key(|v| v.to_string())
        .expect("a finite subset of the positive cone has a minimal element");
    Ok(minimal.clone())
}


#[cfg(test)]
mod props {
    use super::tests::p;
    use super::*;
    use proptest::prelude::*;

    fn arb_label() -> impl Strategy<Value = PrimeLabel> {
        prop_oneof![
            Just(p(2)),
            Just(p(3)),
            Just(p(5)),
            Just(p(7)),
            Just(PrimeLabel::quad_prime(2, QuadPrimeKind::Ramified, None).unwrap()),
            Just(PrimeLabel::parse("f:X^2+1").unwrap()),
        ]
    }

    use crate::value_groups::QuadPrimeKind;

    fn arb_vector() -> impl Strategy<Value = ValueVector> {
        proptest::collection::vec((arb_label(), -4i64..=4), 0..5)
            .prop_map(ValueVector::from_entries)
    }

    proptest! {
        #[test]
        fn lattice_identity(a in arb_vector(), b in arb_vector()) {
            // meet + join = a + b, the defining identity of an l-group.
            prop_assert_eq!(a.meet(&b).add(&a.join(&b)), a.add(&b));
        }

        #[test]
        fn translation_invariance(a in arb_vector(), b in arb_vector(), c in arb_vector()) {
            prop_assert_eq!(a.compare(&b), a.add(&c).compare(&b.add(&c)));
        }

        #[test]
        fn meet_is_greatest_lower_bound(a in arb_vector(), b in arb_vector(), c in arb_vector()) {
            let m = a.meet(&b);
            prop_assert!(matches!(
                m.compare(&a),
                OrderingResult::Less | OrderingResult::Equal
            ));
            prop_assert!(matches!(
                m.compare(&b),
                OrderingResult::Less | OrderingResult::Equal
            ));
            let below_a = matches!(c.compare(&a), OrderingResult::Less | OrderingResult::Equal);
            let below_b = matches!(c.compare(&b), OrderingResult::Less | OrderingResult::Equal);
            if below_a && below_b {
                prop_assert!(matches!(
                    c.compare(&m),
                    OrderingResult::Less | OrderingResult::Equal
                ));
            }
        }

        #[test]
        fn partial_order_laws(a in arb_vector(), b in arb_vector(), c in arb_vector()) {
            prop_assert_eq!(a.compare(&a), OrderingResult::Equal);
            // Antisymmetry.
            if a.compare(&b) == OrderingResult::Equal {
                prop_assert_eq!(a.clone(), b.clone());
            }
            // Transitivity of ≤ over the random triple.
            let le = |x: &ValueVector, y: &ValueVector| {
                matches!(x.compare(y), OrderingResult::Less | OrderingResult::Equal)
            };
            if le(&a, &b) && le(&b, &c) {
                prop_assert!(le(&a, &c));
            }
        }

        #[test]
        fn minimal_is_minimal(set in proptest::collection::vec(
            proptest::collection::vec((arb_label(), 0i64..=3), 0..4)
                .prop_map(ValueVector::from_entries),
            1..6
        )) {
            let m = minimal_in_set(&set).unwrap();
            // Exhaustive pairwise oracle: nothing strictly below it.
            prop_assert!(set.iter().all(|s| s.compare(&m) != OrderingResult::Less));
            prop_assert!(set.contains(&m));
        }

        #[test]
        fn serialization_roundtrip(v in arb_vector()) {
            prop_assert_eq!(ValueVector::parse(&v.to_string()).unwrap(), v.clone());
            let ext = ExtendedValue::Finite(v);
            let json = serde_json::to_string(&ext).unwrap();
            let back: ExtendedValue = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back, ext);
        }
    }
}
