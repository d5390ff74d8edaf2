//! Signed characters: `Z`-graded representations of `Z/2`, the value type of
//! the character functor.
//!
//! A [`SignedCharacter`] stores, for each weight, the multiplicity of the
//! trivial representation `k⁺` and of the sign representation `k⁻`. The
//! convolution product of perverse sheaves corresponds to [`conv`], the graded
//! tensor product, and simple characters are linearly independent, so every
//! character has a unique Jordan-Hölder content ([`jh_decompose`]).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{Map, Value};

use crate::arith::LaurentPoly;
use crate::error::{Error, Result};

mod cells;

pub use cells::{intersection_cells, standard_char_from_cells, CellDescriptor, CellKind, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `self ⊗ other` in the representation ring of `Z/2`.
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `(k⁻)^{⊗n}`.
    pub fn minus_power(n: i64) -> Sign {
        if n.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn superscript(self) -> &'static str {
        match self {
            Sign::Plus => "⁺",
            Sign::Minus => "⁻",
        }
    }

    pub fn ascii(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ascii())
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Sign> {
        match s {
            "+" | "plus" | "p" => Ok(Sign::Plus),
            "-" | "minus" | "m" => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("bad sign `{s}` (expected + or -)"))),
        }
    }
}

fn fmt_weight(w: i64) -> String {
    if w < 0 {
        format!("−{}", -w)
    } else {
        w.to_string()
    }
}

/// A finite multiset, displayed in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multiset<K: Ord> {
    counts: BTreeMap<K, usize>,
}

impl<K: Ord> Default for Multiset<K> {
    fn default() -> Self {
        Multiset { counts: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Multiset<K> {
    pub fn new() -> Self {
        Multiset::default()
    }

    pub fn insert(&mut self, k: K) {
        self.insert_n(k, 1);
    }

    pub fn insert_n(&mut self, k: K, n: usize) {
        if n > 0 {
            *self.counts.entry(k).or_insert(0) += n;
        }
    }

    pub fn count(&self, k: &K) -> usize {
        self.counts.get(k).copied().unwrap_or(0)
    }

    /// Total number of elements, with multiplicity.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Distinct elements with their counts, largest first.
    pub fn iter(&self) -> impl Iterator<Item = (&K, usize)> {
        self.counts.iter().rev().map(|(k, &c)| (k, c))
    }

    pub fn map<J: Ord + Clone, F: Fn(&K) -> J>(&self, f: F) -> Multiset<J> {
        let mut out = Multiset::new();
        for (k, c) in self.iter() {
            out.insert_n(f(k), c);
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<K> for Multiset<K> {
    fn from_iter<I: IntoIterator<Item = K>>(iter: I) -> Self {
        let mut m = Multiset::new();
        for k in iter {
            m.insert(k);
        }
        m
    }
}

/// The simple object `L(n)^±`; ordered by `n`, then `+` above `-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SimpleLabel {
    pub n: i64,
    pub sign: Sign,
}

impl SimpleLabel {
    pub fn new(n: i64, sign: Sign) -> Self {
        SimpleLabel { n, sign }
    }
}

impl Ord for SimpleLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Plus sorts above Minus at equal n
        self.n.cmp(&other.n).then(other.sign.cmp(&self.sign))
    }
}

impl PartialOrd for SimpleLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({}){}", self.n, self.sign.superscript())
    }
}

impl fmt::Display for Multiset<SimpleLabel> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_multiset(self, f)
    }
}

impl fmt::Display for Multiset<i64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(k, c)| if c == 1 { format!("L({k})") } else { format!("L({k}) ×{c}") })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

fn fmt_multiset(m: &Multiset<SimpleLabel>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if m.is_empty() {
        return write!(f, "∅");
    }
    let parts: Vec<String> = m
        .iter()
        .map(|(k, c)| if c == 1 { k.to_string() } else { format!("{k} ×{c}") })
        .collect();
    write!(f, "{}", parts.join(", "))
}

/// A `Z`-graded `Z/2`-representation with nonnegative multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SignedCharacter {
    plus: LaurentPoly<i64>,
    minus: LaurentPoly<i64>,
}

impl SignedCharacter {
    pub fn new(plus: LaurentPoly<i64>, minus: LaurentPoly<i64>) -> Result<Self> {
        for (w, &c) in plus.terms().chain(minus.terms()) {
            if c < 0 {
                return Err(Error::NotACharacter(format!(
                    "negative multiplicity {c} in weight {w}"
                )));
            }
        }
        Ok(SignedCharacter { plus, minus })
    }

    pub fn zero() -> Self {
        SignedCharacter::default()
    }

    /// `k^±(weight)`.
    pub fn k(sign: Sign, weight: i64) -> Self {
        let mut c = SignedCharacter::zero();
        c.add_weight(sign, weight, 1);
        c
    }

    pub fn plus(&self) -> &LaurentPoly<i64> {
        &self.plus
    }

    pub fn minus(&self) -> &LaurentPoly<i64> {
        &self.minus
    }

    pub fn part(&self, sign: Sign) -> &LaurentPoly<i64> {
        match sign {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }

    pub fn multiplicity(&self, sign: Sign, weight: i64) -> i64 {
        self.part(sign).coeff(weight)
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    fn add_weight(&mut self, sign: Sign, weight: i64, mult: i64) {
        match sign {
            Sign::Plus => self.plus.add_term(weight, mult),
            Sign::Minus => self.minus.add_term(weight, mult),
        }
    }

    /// Total dimension.
    pub fn dim(&self) -> i64 {
        self.plus.terms().chain(self.minus.terms()).map(|(_, &c)| c).sum()
    }

    /// Direct sum.
    pub fn sum(&self, other: &SignedCharacter) -> SignedCharacter {
        SignedCharacter { plus: &self.plus + &other.plus, minus: &self.minus + &other.minus }
    }

    /// `self - other`, failing if some multiplicity would become negative.
    pub fn checked_sub(&self, other: &SignedCharacter) -> Result<SignedCharacter> {
        SignedCharacter::new(&self.plus - &other.plus, &self.minus - &other.minus)
    }

    pub fn scaled(&self, k: i64) -> SignedCharacter {
        assert!(k >= 0);
        SignedCharacter {
            plus: self.plus.map_coeffs(|c| c * k),
            minus: self.minus.map_coeffs(|c| c * k),
        }
    }

    pub fn max_weight(&self) -> Option<i64> {
        match (self.plus.max_exp(), self.minus.max_exp()) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        }
    }

    /// Forget the `Z/2`-action.
    pub fn forget_sign(&self) -> WeightCharacter {
        WeightCharacter { poly: &self.plus + &self.minus }
    }

    /// `{"plus": {weight: mult}, "minus": {...}}` with weights in descending
    /// order.
    pub fn to_json(&self) -> Value {
        let part = |p: &LaurentPoly<i64>| {
            let mut m = Map::new();
            for (w, &c) in p.terms().rev() {
                m.insert(w.to_string(), Value::from(c));
            }
            Value::Object(m)
        };
        let mut obj = Map::new();
        obj.insert("plus".into(), part(&self.plus));
        obj.insert("minus".into(), part(&self.minus));
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> Result<SignedCharacter> {
        let part = |key: &str| -> Result<LaurentPoly<i64>> {
            let obj = v
                .get(key)
                .and_then(Value::as_object)
                .ok_or_else(|| Error::Parse(format!("missing object `{key}`")))?;
            let mut p = LaurentPoly::zero();
            for (w, c) in obj {
                let w: i64 = w.parse().map_err(|_| Error::Parse(format!("bad weight `{w}`")))?;
                let c = c.as_i64().ok_or_else(|| Error::Parse(format!("bad multiplicity at {w}")))?;
                p.add_term(w, c);
            }
            Ok(p)
        };
        SignedCharacter::new(part("plus")?, part("minus")?)
    }
}

/// Terms in descending weight, `k⁺` before `k⁻`, e.g. `k⁺(2) ⊕ 2·k⁻(0)`.
impl fmt::Display for SignedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        let lo = self.plus.min_exp().into_iter().chain(self.minus.min_exp()).min().unwrap();
        let hi = self.max_weight().unwrap();
        for w in (lo..=hi).rev() {
            for sign in [Sign::Plus, Sign::Minus] {
                let c = self.multiplicity(sign, w);
                if c == 0 {
                    continue;
                }
                let prefix = if c == 1 { String::new() } else { format!("{c}·") };
                terms.push(format!("{prefix}k{}({})", sign.superscript(), fmt_weight(w)));
            }
        }
        write!(f, "{}", terms.join(" ⊕ "))
    }
}

/// A `Z`-graded vector space: the weight multiset of a quantum or classical
/// module.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeightCharacter {
    poly: LaurentPoly<i64>,
}

impl WeightCharacter {
    pub fn new(poly: LaurentPoly<i64>) -> Result<Self> {
        if let Some((w, c)) = poly.terms().find(|&(_, &c)| c < 0) {
            return Err(Error::NotAModuleCharacter(format!(
                "negative multiplicity {c} in weight {w}"
            )));
        }
        Ok(WeightCharacter { poly })
    }

    pub fn from_weights<I: IntoIterator<Item = i64>>(weights: I) -> Self {
        WeightCharacter { poly: LaurentPoly::from_terms(weights.into_iter().map(|w| (w, 1))) }
    }

    /// Character of the classical irreducible `sl₂`-module `V(n)`:
    /// `v^n + v^{n-2} + ... + v^{-n}`.
    pub fn classical(n: i64) -> Self {
        assert!(n >= 0);
        WeightCharacter::from_weights((0..=n).map(|j| n - 2 * j))
    }

    pub fn poly(&self) -> &LaurentPoly<i64> {
        &self.poly
    }

    pub fn multiplicity(&self, weight: i64) -> i64 {
        self.poly.coeff(weight)
    }

    pub fn dim(&self) -> i64 {
        self.poly.terms().map(|(_, &c)| c).sum()
    }

    pub fn product(&self, other: &WeightCharacter) -> WeightCharacter {
        WeightCharacter { poly: &self.poly * &other.poly }
    }

    pub fn checked_sub(&self, other: &WeightCharacter) -> Result<WeightCharacter> {
        WeightCharacter::new(&self.poly - &other.poly)
    }
}

impl fmt::Display for WeightCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .poly
            .terms()
            .rev()
            .map(|(w, &c)| {
                let mono = match w {
                    0 => "1".to_string(),
                    1 => "v".to_string(),
                    _ => format!("v^{w}"),
                };
                if c == 1 { mono } else { format!("{c}·{mono}") }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Graded tensor product: weights add and `k⁻ ⊗ k⁻ = k⁺`. This is the
/// character of a convolution product.
pub fn conv(a: &SignedCharacter, b: &SignedCharacter) -> SignedCharacter {
    SignedCharacter {
        plus: &(&a.plus * &b.plus) + &(&a.minus * &b.minus),
        minus: &(&a.plus * &b.minus) + &(&a.minus * &b.plus),
    }
}

pub fn sign_twist(c: &SignedCharacter) -> SignedCharacter {
    SignedCharacter { plus: c.minus.clone(), minus: c.plus.clone() }
}

fn check_nonnegative(n: i64, what: &str) -> Result<()> {
    if n < 0 {
        return Err(Error::Domain(format!("{what} needs n >= 0, got {n}")));
    }
    Ok(())
}

/// Character of `L(n)^±`.
///
/// Even `n = 2m`: `k^±(2m) ⊕ k^±(2m-4) ⊕ ... ⊕ k^±(-2m)`. Odd `n`: every
/// weight `n, n-2, ..., -n` once, with the sign alternating from `±` at the
/// top.
pub fn simple_char(n: i64, sign: Sign) -> Result<SignedCharacter> {
    check_nonnegative(n, "simple_char")?;
    let mut c = SignedCharacter::zero();
    if n % 2 == 0 {
        for j in 0..=n / 2 {
            c.add_weight(sign, n - 4 * j, 1);
        }
    } else {
        for j in 0..=n {
            let s = if j % 2 == 0 { sign } else { sign.flip() };
            c.add_weight(s, n - 2 * j, 1);
        }
    }
    Ok(c)
}

/// Character shared by `Δ(n)^±` and `∇(n)^±`: `k⁺(n) ⊕ (k⁺ ⊕ k⁻)(n-2) ⊕ ... ⊕
/// (k⁺ ⊕ k⁻)(-n+2) ⊕ (k⁻)^{⊗n}(-n)`, sign-twisted for `-`.
pub fn standard_char(n: i64, sign: Sign) -> Result<SignedCharacter> {
    check_nonnegative(n, "standard_char")?;
    let mut c = SignedCharacter::zero();
    if n == 0 {
        c.add_weight(Sign::Plus, 0, 1);
    } else {
        c.add_weight(Sign::Plus, n, 1);
        for w in (-n + 2..=n - 2).step_by(2) {
            c.add_weight(Sign::Plus, w, 1);
            c.add_weight(Sign::Minus, w, 1);
        }
        c.add_weight(Sign::minus_power(n), -n, 1);
    }
    Ok(match sign {
        Sign::Plus => c,
        Sign::Minus => sign_twist(&c),
    })
}

/// The character-level shadow of nearby cycles: weight `w` goes to `2w`, all
/// in the trivial isotypic part.
pub fn psi_double(wc: &WeightCharacter) -> SignedCharacter {
    SignedCharacter { plus: wc.poly.scale_exponents(2), minus: LaurentPoly::zero() }
}

/// Expand `c` in the basis of simple characters by stripping the simple
/// character of the current leading term (`k⁺` before `k⁻` at equal weight).
pub fn jh_decompose(c: &SignedCharacter) -> Result<Multiset<SimpleLabel>> {
    let mut rest = c.clone();
    let mut out = Multiset::new();
    while let Some(w) = rest.max_weight() {
        let sign = if rest.multiplicity(Sign::Plus, w) > 0 { Sign::Plus } else { Sign::Minus };
        if w < 0 {
            return Err(Error::NotACharacter(format!(
                "leading weight {w} is negative; remainder {rest}"
            )));
        }
        let mult = rest.multiplicity(sign, w);
        let simple = simple_char(w, sign)?.scaled(mult);
        rest = rest.checked_sub(&simple).map_err(|_| {
            Error::NotACharacter(format!("removing {mult} copies of L({w}){} from {rest}", sign.superscript()))
        })?;
        out.insert_n(SimpleLabel::new(w, sign), mult as usize);
    }
    Ok(out)
}

/// Sum of the simple characters in a multiset.
pub fn character_of(labels: &Multiset<SimpleLabel>) -> Result<SignedCharacter> {
    let mut c = SignedCharacter::zero();
    for (l, k) in labels.iter() {
        c = c.sum(&simple_char(l.n, l.sign)?.scaled(k as i64));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    use Sign::{Minus, Plus};

    fn ch(terms: &[(Sign, i64, i64)]) -> SignedCharacter {
        let mut c = SignedCharacter::zero();
        for &(s, w, m) in terms {
            c.add_weight(s, w, m);
        }
        c
    }

    fn labels(ls: &[(i64, Sign)]) -> Multiset<SimpleLabel> {
        ls.iter().map(|&(n, s)| SimpleLabel::new(n, s)).collect()
    }

    #[test]
    fn conv_unit_and_products() {
        let c = simple_char(5, Minus).unwrap();
        assert_eq!(conv(&SignedCharacter::k(Plus, 0), &c), c);

        let l1 = simple_char(1, Plus).unwrap();
        assert_eq!(l1, ch(&[(Plus, 1, 1), (Minus, -1, 1)]));
        assert_eq!(conv(&l1, &l1), ch(&[(Plus, 2, 1), (Minus, 0, 2), (Plus, -2, 1)]));

        let l2 = simple_char(2, Plus).unwrap();
        let expected = ch(&[(Plus, 4, 1), (Plus, 0, 2), (Plus, -4, 1)]);
        assert_eq!(conv(&l2, &l2), expected);
        assert_eq!(
            expected,
            simple_char(4, Plus).unwrap().sum(&simple_char(0, Plus).unwrap())
        );
    }

    #[test]
    fn simple_char_examples() {
        assert_eq!(simple_char(0, Plus).unwrap(), ch(&[(Plus, 0, 1)]));
        assert_eq!(simple_char(2, Plus).unwrap(), ch(&[(Plus, 2, 1), (Plus, -2, 1)]));
        assert_eq!(
            simple_char(3, Plus).unwrap(),
            ch(&[(Plus, 3, 1), (Minus, 1, 1), (Plus, -1, 1), (Minus, -3, 1)])
        );
        assert!(matches!(simple_char(-1, Plus), Err(Error::Domain(_))));
    }

    #[test]
    fn standard_char_examples() {
        assert_eq!(standard_char(0, Plus).unwrap(), ch(&[(Plus, 0, 1)]));
        assert_eq!(
            standard_char(3, Plus).unwrap(),
            ch(&[(Plus, 3, 1), (Plus, 1, 1), (Minus, 1, 1), (Plus, -1, 1), (Minus, -1, 1), (Minus, -3, 1)])
        );
        assert_eq!(
            standard_char(2, Plus).unwrap(),
            ch(&[(Plus, 2, 1), (Plus, 0, 1), (Minus, 0, 1), (Plus, -2, 1)])
        );
        assert!(matches!(standard_char(-2, Minus), Err(Error::Domain(_))));
        for n in 1..=12 {
            assert_eq!(standard_char(n, Plus).unwrap().dim(), 2 * n);
            assert_eq!(standard_char(n, Minus).unwrap().dim(), 2 * n);
        }
    }

    #[test]
    fn jh_examples() {
        assert_eq!(
            jh_decompose(&standard_char(3, Plus).unwrap()).unwrap(),
            labels(&[(3, Plus), (1, Plus)])
        );
        assert_eq!(jh_decompose(&simple_char(5, Plus).unwrap()).unwrap(), labels(&[(5, Plus)]));
        assert_eq!(
            jh_decompose(&standard_char(2, Plus).unwrap()).unwrap(),
            labels(&[(2, Plus), (0, Plus), (0, Minus)])
        );
        assert!(jh_decompose(&SignedCharacter::zero()).unwrap().is_empty());
    }

    #[test]
    fn jh_rejects_non_characters() {
        // k⁺(2) alone: removing L(2)⁺ would need a k⁺(-2)
        assert!(matches!(jh_decompose(&ch(&[(Plus, 2, 1)])), Err(Error::NotACharacter(_))));
        assert!(matches!(jh_decompose(&ch(&[(Minus, -1, 1)])), Err(Error::NotACharacter(_))));
        assert!(SignedCharacter::new(LaurentPoly::monomial(0, -1), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn sign_twist_examples() {
        assert_eq!(sign_twist(&SignedCharacter::k(Plus, 0)), SignedCharacter::k(Minus, 0));
        assert_eq!(sign_twist(&simple_char(3, Plus).unwrap()), simple_char(3, Minus).unwrap());
    }

    #[test]
    fn psi_double_examples() {
        assert_eq!(psi_double(&WeightCharacter::classical(0)), SignedCharacter::k(Plus, 0));
        assert_eq!(psi_double(&WeightCharacter::classical(1)), simple_char(2, Plus).unwrap());
        assert_eq!(psi_double(&WeightCharacter::classical(2)), simple_char(4, Plus).unwrap());
    }

    #[test]
    fn clebsch_gordan_rule() {
        for n in 0..=6i64 {
            for m in 0..=6i64 {
                let prod = conv(&simple_char(2 * n, Plus).unwrap(), &simple_char(2 * m, Plus).unwrap());
                let expected: Multiset<SimpleLabel> = (0..=n.min(m))
                    .map(|k| SimpleLabel::new(2 * (n + m) - 4 * k, Plus))
                    .collect();
                assert_eq!(jh_decompose(&prod).unwrap(), expected, "n = {n}, m = {m}");
            }
        }
    }

    #[test]
    fn steinberg_convolution() {
        let l1 = simple_char(1, Plus).unwrap();
        for n in 0..=8 {
            let prod = conv(&l1, &simple_char(2 * n, Plus).unwrap());
            assert_eq!(jh_decompose(&prod).unwrap(), labels(&[(2 * n + 1, Plus)]));
        }
    }

    #[test]
    fn odd_standards_have_two_factors() {
        for n in 1..=8 {
            for s in [Plus, Minus] {
                assert_eq!(
                    jh_decompose(&standard_char(2 * n + 1, s).unwrap()).unwrap(),
                    labels(&[(2 * n + 1, s), (2 * n - 1, s)])
                );
            }
        }
    }

    #[test]
    fn json_encoding() {
        let c = standard_char(2, Plus).unwrap();
        assert_eq!(
            serde_json::to_string(&c.to_json()).unwrap(),
            r#"{"plus":{"2":1,"0":1,"-2":1},"minus":{"0":1}}"#
        );
        assert_eq!(SignedCharacter::from_json(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn text_rendering() {
        assert_eq!(simple_char(3, Plus).unwrap().to_string(), "k⁺(3) ⊕ k⁻(1) ⊕ k⁺(−1) ⊕ k⁻(−3)");
        assert_eq!(
            conv(&simple_char(1, Plus).unwrap(), &simple_char(1, Plus).unwrap()).to_string(),
            "k⁺(2) ⊕ 2·k⁻(0) ⊕ k⁺(−2)"
        );
        assert_eq!(labels(&[(3, Plus), (3, Plus), (5, Plus), (1, Plus)]).to_string(), "L(5)⁺, L(3)⁺ ×2, L(1)⁺");
    }

    fn arb_char() -> impl Strategy<Value = SignedCharacter> {
        proptest::collection::vec((any::<bool>(), -20i64..=20, 1i64..3), 0..6).prop_map(|terms| {
            let mut c = SignedCharacter::zero();
            for (p, w, m) in terms {
                c.add_weight(if p { Plus } else { Minus }, w, m);
            }
            c
        })
    }

    fn arb_labels() -> impl Strategy<Value = Multiset<SimpleLabel>> {
        proptest::collection::vec((0i64..=10, any::<bool>()), 0..6).prop_map(|v| {
            v.into_iter()
                .map(|(n, p)| SimpleLabel::new(n, if p { Plus } else { Minus }))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn conv_is_commutative_associative_unital(a in arb_char(), b in arb_char(), c in arb_char()) {
            prop_assert_eq!(conv(&a, &b), conv(&b, &a));
            prop_assert_eq!(conv(&conv(&a, &b), &c), conv(&a, &conv(&b, &c)));
            prop_assert_eq!(conv(&SignedCharacter::k(Plus, 0), &a), a.clone());
        }

        #[test]
        fn twist_is_an_involution(a in arb_char()) {
            prop_assert_eq!(sign_twist(&sign_twist(&a)), a);
        }

        #[test]
        fn jh_is_left_inverse_of_summation(ls in arb_labels()) {
            let c = character_of(&ls).unwrap();
            prop_assert_eq!(jh_decompose(&c).unwrap(), ls);
        }
    }
}
