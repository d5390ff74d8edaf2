//! The zigzag algebra on vertices `0..=N`, truncated by spanning set.
//!
//! Basis: idempotents `e_a`, loops `z_a`, arrows `x_a: a → a+1` and
//! `y_a: a → a-1`. The product `u·v` is composition with `v` applied first,
//! so it is nonzero only when `v` ends where `u` starts. Relations:
//! `z_a = x_{a-1}·y_a = y_{a+1}·x_a`, every other length-two path vanishes,
//! and `z_a` kills all arrows.
//!
//! `x_{a+1}·x_a = 0` is not among the listed relations; it is forced by
//! `Hom(P(a), P(a+2)) = 0` and is encoded the same way.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZBasis {
    E(usize),
    Z(usize),
    X(usize),
    Y(usize),
}

impl ZBasis {
    pub fn source(self) -> usize {
        match self {
            ZBasis::E(a) | ZBasis::Z(a) | ZBasis::X(a) | ZBasis::Y(a) => a,
        }
    }

    pub fn target(self) -> usize {
        match self {
            ZBasis::E(a) | ZBasis::Z(a) => a,
            ZBasis::X(a) => a + 1,
            ZBasis::Y(a) => a - 1,
        }
    }
}

impl fmt::Display for ZBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZBasis::E(a) => write!(f, "e_{a}"),
            ZBasis::Z(a) => write!(f, "z_{a}"),
            ZBasis::X(a) => write!(f, "x_{a}"),
            ZBasis::Y(a) => write!(f, "y_{a}"),
        }
    }
}

impl FromStr for ZBasis {
    type Err = Error;
    fn from_str(s: &str) -> Result<ZBasis> {
        let bad = || Error::Parse(format!("bad basis element `{s}`"));
        let (head, index) = s.split_once('_').ok_or_else(bad)?;
        let a: usize = index.parse().map_err(|_| bad())?;
        match head {
            "e" => Ok(ZBasis::E(a)),
            "z" => Ok(ZBasis::Z(a)),
            "x" => Ok(ZBasis::X(a)),
            "y" if a >= 1 => Ok(ZBasis::Y(a)),
            _ => Err(bad()),
        }
    }
}

/// An integer combination of basis elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZElement {
    terms: BTreeMap<ZBasis, i64>,
}

impl ZElement {
    pub fn zero() -> Self {
        ZElement::default()
    }

    pub fn basis(b: ZBasis) -> Self {
        ZElement::term(b, 1)
    }

    pub fn term(b: ZBasis, c: i64) -> Self {
        let mut e = ZElement::zero();
        e.add(b, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: ZBasis) -> i64 {
        self.terms.get(&b).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (ZBasis, i64)> + '_ {
        self.terms.iter().map(|(&b, &c)| (b, c))
    }

    pub fn add(&mut self, b: ZBasis, c: i64) {
        let v = self.terms.entry(b).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&b);
        }
    }

    pub fn plus(&self, other: &ZElement) -> ZElement {
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add(b, c);
        }
        out
    }
}

impl fmt::Display for ZElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (b, c) in self.terms() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag != 1 {
                write!(f, "{mag}·")?;
            }
            write!(f, "{b}")?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagAlgebra {
    n: usize,
    basis: Vec<ZBasis>,
    index: BTreeMap<ZBasis, usize>,
    table: Vec<Vec<ZElement>>,
}

/// Product of basis elements from the relations.
fn relation_product(u: ZBasis, v: ZBasis) -> ZElement {
    use ZBasis::*;
    if u.source() != v.target() {
        return ZElement::zero();
    }
    match (u, v) {
        (E(_), _) => ZElement::basis(v),
        (_, E(_)) => ZElement::basis(u),
        // y_a then x_{a-1}, or x_a then y_{a+1}: both land in z at the start vertex
        (X(_), Y(a)) => ZElement::basis(Z(a)),
        (Y(_), X(a)) => ZElement::basis(Z(a)),
        _ => ZElement::zero(),
    }
}

impl ZigzagAlgebra {
    /// Basis ordered `e_0..e_N, z_0..z_N, x_0..x_{N-1}, y_1..y_N`.
    pub fn make(n: usize) -> Self {
        let mut basis: Vec<ZBasis> = (0..=n).map(ZBasis::E).collect();
        basis.extend((0..=n).map(ZBasis::Z));
        basis.extend((0..n).map(ZBasis::X));
        basis.extend((1..=n).map(ZBasis::Y));
        let index = basis.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        let table = basis
            .iter()
            .map(|&u| basis.iter().map(|&v| relation_product(u, v)).collect())
            .collect();
        ZigzagAlgebra { n, basis, index, table }
    }

    pub fn truncation(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ZBasis] {
        &self.basis
    }

    pub fn contains(&self, b: ZBasis) -> bool {
        self.index.contains_key(&b)
    }

    pub fn product(&self, u: ZBasis, v: ZBasis) -> &ZElement {
        &self.table[self.index[&u]][self.index[&v]]
    }

    /// Overwrite one entry of the table.
    pub fn set_product(&mut self, u: ZBasis, v: ZBasis, value: ZElement) {
        let (i, j) = (self.index[&u], self.index[&v]);
        self.table[i][j] = value;
    }

    /// Bilinear extension of the table.
    pub fn multiply(&self, u: &ZElement, v: &ZElement) -> ZElement {
        let mut out = ZElement::zero();
        for (a, ca) in u.terms() {
            for (b, cb) in v.terms() {
                for (t, ct) in self.product(a, b).terms() {
                    out.add(t, ca * cb * ct);
                }
            }
        }
        out
    }

    pub fn identity(&self) -> ZElement {
        (0..=self.n).fold(ZElement::zero(), |acc, a| acc.plus(&ZElement::basis(ZBasis::E(a))))
    }

    /// Nonzero products as JSON: `{"N", "basis", "products": [{left, right, result}]}`.
    pub fn to_json(&self) -> Value {
        let mut products = Vec::new();
        for &u in &self.basis {
            for &v in &self.basis {
                let p = self.product(u, v);
                if p.is_zero() {
                    continue;
                }
                let mut result = Map::new();
                for (b, c) in p.terms() {
                    result.insert(b.to_string(), Value::from(c));
                }
                products.push(json!({"left": u.to_string(), "right": v.to_string(), "result": result}));
            }
        }
        json!({
            "N": self.n,
            "basis": self.basis.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "products": products,
        })
    }
}

impl ZigzagAlgebra {
    /// Read a table in the [`ZigzagAlgebra::to_json`] format. Products not
    /// listed are zero.
    pub fn from_json(v: &Value) -> Result<Self> {
        let n = v["N"].as_u64().ok_or_else(|| Error::Parse("missing integer field `N`".into()))? as usize;
        let mut alg = ZigzagAlgebra::make(n);
        for row in alg.table.iter_mut() {
            row.iter_mut().for_each(|p| *p = ZElement::zero());
        }
        let products = v["products"].as_array().ok_or_else(|| Error::Parse("missing array `products`".into()))?;
        let element = |x: &Value| -> Result<ZBasis> {
            let b: ZBasis = x.as_str().ok_or_else(|| Error::Parse(format!("expected a basis name, got {x}")))?.parse()?;
            if alg.contains(b) {
                Ok(b)
            } else {
                Err(Error::Parse(format!("`{b}` is not in the basis for N = {n}")))
            }
        };
        let mut entries = Vec::new();
        for p in products {
            let (u, w) = (element(&p["left"])?, element(&p["right"])?);
            let terms = p["result"].as_object().ok_or_else(|| Error::Parse(format!("bad result in {p}")))?;
            let mut value = ZElement::zero();
            for (name, c) in terms {
                let c = c.as_i64().ok_or_else(|| Error::Parse(format!("non-integer coefficient in {p}")))?;
                value.add(element(&Value::from(name.as_str()))?, c);
            }
            entries.push((u, w, value));
        }
        for (u, w, value) in entries {
            alg.set_product(u, w, value);
        }
        Ok(alg)
    }
}

/// Exhaustive check of every structural property of the table.
pub fn verify_algebra(alg: &ZigzagAlgebra) -> Report {
    use ZBasis::*;
    let n = alg.truncation();
    let mut r = Report::new();
    let zero = ZElement::zero();
    let b = ZElement::basis;
    let mul = |u: ZBasis, v: ZBasis| alg.product(u, v).clone();

    r.expect_eq("dim A = 4N + 2", &alg.dim(), &(4 * n + 2));

    for a in 0..=n {
        for c in 0..=n {
            let expected = if a == c { b(E(a)) } else { zero.clone() };
            r.expect_eq(format!("e_{a}·e_{c}"), &mul(E(a), E(c)), &expected);
        }
    }
    let one = alg.identity();
    for &u in alg.basis() {
        r.expect_eq(format!("1·{u}"), &alg.multiply(&one, &b(u)), &b(u));
        r.expect_eq(format!("{u}·1"), &alg.multiply(&b(u), &one), &b(u));
    }

    for a in 0..=n {
        if a >= 1 {
            r.expect_eq(format!("x_{}·y_{a} = z_{a}", a - 1), &mul(X(a - 1), Y(a)), &b(Z(a)));
            r.expect_eq(format!("y_{a}·z_{a} = 0"), &mul(Y(a), Z(a)), &zero);
        }
        if a < n {
            r.expect_eq(format!("y_{}·x_{a} = z_{a}", a + 1), &mul(Y(a + 1), X(a)), &b(Z(a)));
            r.expect_eq(format!("x_{a}·z_{a} = 0"), &mul(X(a), Z(a)), &zero);
        }
        r.expect_eq(format!("z_{a}·z_{a} = 0"), &mul(Z(a), Z(a)), &zero);
        if a + 1 < n {
            r.expect_eq(format!("x_{}·x_{a} = 0", a + 1), &mul(X(a + 1), X(a)), &zero);
        }
        if a >= 2 {
            r.expect_eq(format!("y_{}·y_{a} = 0", a - 1), &mul(Y(a - 1), Y(a)), &zero);
        }
    }

    // composites spanning a vertex gap of 2 or more vanish
    let mut far_ok = true;
    let mut far_detail = String::from("0");
    for &u in alg.basis() {
        for &v in alg.basis() {
            if u.source() == v.target() && u.target().abs_diff(v.source()) >= 2 && !mul(u, v).is_zero() {
                far_ok = false;
                far_detail = format!("{u}·{v} = {}", mul(u, v));
            }
        }
    }
    r.push("products across vertex gap >= 2", far_detail, "0", far_ok);

    // Hom-space dimensions: e_b A e_a is spanned by the basis elements a → b
    for a in 0..=n {
        for c in 0..=n {
            let count = alg.basis().iter().filter(|u| u.source() == a && u.target() == c).count();
            let expected = match a.abs_diff(c) {
                0 => 2,
                1 => 1,
                _ => 0,
            };
            r.expect_eq(format!("dim Hom({a}, {c})"), &count, &expected);
        }
    }

    let mut assoc_failures = Vec::new();
    for &u in alg.basis() {
        for &v in alg.basis() {
            let uv = mul(u, v);
            for &w in alg.basis() {
                let left = alg.multiply(&uv, &b(w));
                let right = alg.multiply(&b(u), &mul(v, w));
                if left != right {
                    assoc_failures.push(format!("({u}·{v})·{w} = {left} but {u}·({v}·{w}) = {right}"));
                }
            }
        }
    }
    if assoc_failures.is_empty() {
        r.push("associativity on all basis triples", "ok", "ok", true);
    } else {
        for f in assoc_failures {
            r.push("associativity", f, "equal", false);
        }
    }
    r
}
