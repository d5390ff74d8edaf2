//! Formal bookkeeping for the perverse sheaves `Δ(n)^±`, `∇(n)^±`, `L(n)^±`
//! and `P(n)^±`: characters, Jordan-Hölder content and standard filtrations,
//! with verifiers for the structural identities they satisfy.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::characters::{
    character_of, conv, jh_decompose, simple_char, standard_char, Multiset, Sign, SignedCharacter, SimpleLabel,
};
use crate::error::{Error, Result};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PervKind {
    Standard,
    Costandard,
    Simple,
    Projective,
}

impl PervKind {
    pub const ALL: [PervKind; 4] = [PervKind::Standard, PervKind::Costandard, PervKind::Simple, PervKind::Projective];

    pub fn name(self) -> &'static str {
        match self {
            PervKind::Standard => "standard",
            PervKind::Costandard => "costandard",
            PervKind::Simple => "simple",
            PervKind::Projective => "projective",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            PervKind::Standard => "Δ",
            PervKind::Costandard => "∇",
            PervKind::Simple => "L",
            PervKind::Projective => "P",
        }
    }
}

impl fmt::Display for PervKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PervKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<PervKind> {
        PervKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown kind `{s}` (expected standard, costandard, simple or projective)")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PervLabel {
    pub kind: PervKind,
    pub n: i64,
    pub sign: Sign,
}

impl fmt::Display for PervLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}){}", self.kind.symbol(), self.n, self.sign.superscript())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalPerv {
    pub label: PervLabel,
    pub character: SignedCharacter,
    pub jh: Multiset<SimpleLabel>,
    /// Standard subquotients from the top of the filtration down, as `(n, sign)` of each `Δ`.
    pub standard_filtration: Option<Vec<SimpleLabel>>,
}

fn projective_one_char() -> SignedCharacter {
    let plus = |n| standard_char(n, Sign::Plus).expect("n >= 0");
    plus(3).sum(&plus(1))
}

/// Build the formal object with the given label.
///
/// Odd projectives `P(2k+1)^±` carry the filtration `[Δ(2k+3)^±, Δ(2k+1)^±]`;
/// even projectives `P(2k)^±` get the character of `L(2k+1)^± ∗ P(1)⁺`.
pub fn formal(kind: PervKind, n: i64, sign: Sign) -> Result<FormalPerv> {
    if n < 0 {
        return Err(Error::Domain(format!("{}({n}) needs n >= 0", kind.symbol())));
    }
    let label = PervLabel { kind, n, sign };
    let (character, standard_filtration) = match kind {
        PervKind::Standard => (standard_char(n, sign)?, Some(vec![SimpleLabel::new(n, sign)])),
        PervKind::Costandard => (standard_char(n, sign)?, None),
        PervKind::Simple => (simple_char(n, sign)?, None),
        PervKind::Projective if n % 2 == 1 => {
            let filtration = vec![SimpleLabel::new(n + 2, sign), SimpleLabel::new(n, sign)];
            (filtration_character(&filtration)?, Some(filtration))
        }
        PervKind::Projective => (conv(&simple_char(n + 1, sign)?, &projective_one_char()), None),
    };
    let jh = jh_decompose(&character)?;
    Ok(FormalPerv { label, character, jh, standard_filtration })
}

fn filtration_character(filtration: &[SimpleLabel]) -> Result<SignedCharacter> {
    let mut c = SignedCharacter::zero();
    for l in filtration {
        c = c.sum(&standard_char(l.n, l.sign)?);
    }
    Ok(c)
}

impl FormalPerv {
    /// Number of times `Δ(m)^sign` occurs in the standard filtration.
    pub fn filtration_multiplicity(&self, m: i64, sign: Sign) -> usize {
        self.standard_filtration
            .as_ref()
            .map_or(0, |f| f.iter().filter(|l| l.n == m && l.sign == sign).count())
    }

    /// Character/Jordan-Hölder/filtration consistency.
    pub fn check(&self) -> Result<()> {
        if character_of(&self.jh)? != self.character {
            return Err(Error::Inconsistent(format!("{}: Jordan-Hölder content does not sum to the character", self.label)));
        }
        if let Some(f) = &self.standard_filtration {
            if filtration_character(f)? != self.character {
                return Err(Error::Inconsistent(format!("{}: standard filtration does not sum to the character", self.label)));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let label_json = |l: &SimpleLabel| json!({"n": l.n, "sign": l.sign.ascii().to_string()});
        let jh: Vec<Value> = self
            .jh
            .iter()
            .map(|(l, k)| json!({"n": l.n, "sign": l.sign.ascii().to_string(), "multiplicity": k}))
            .collect();
        json!({
            "label": {"kind": self.label.kind.name(), "n": self.label.n, "sign": self.label.sign.ascii().to_string()},
            "character": self.character.to_json(),
            "jh": jh,
            "standard_filtration": self.standard_filtration.as_ref().map(|f| f.iter().map(label_json).collect::<Vec<_>>()),
        })
    }
}

/// `0 → L(2n-1)^± → Δ(2n+1)^± → L(2n+1)^± → 0` and its dual, on characters.
pub fn verify_odd_ses(n: i64) -> Result<Report> {
    if n < 1 {
        return Err(Error::Domain(format!("verify_odd_ses needs n >= 1, got {n}")));
    }
    let mut r = Report::new();
    for sign in [Sign::Plus, Sign::Minus] {
        let s = sign.superscript();
        let top = simple_char(2 * n + 1, sign)?;
        let bottom = simple_char(2 * n - 1, sign)?;
        let delta = formal(PervKind::Standard, 2 * n + 1, sign)?.character;
        let nabla = formal(PervKind::Costandard, 2 * n + 1, sign)?.character;
        r.expect_eq(format!("ch Δ({}){s} = ch L({}){s} + ch L({}){s}", 2 * n + 1, 2 * n - 1, 2 * n + 1), &delta, &bottom.sum(&top));
        r.expect_eq(format!("ch ∇({}){s} = ch L({}){s} + ch L({}){s}", 2 * n + 1, 2 * n + 1, 2 * n - 1), &nabla, &top.sum(&bottom));
    }
    Ok(r)
}

/// `(P(2n+1)⁺ : Δ(m)^?) = [∇(m)^? : L(2n+1)⁺]` for `m ≤ 2n+5`, both equal to
/// 1 exactly when `? = +` and `m ∈ {2n+1, 2n+3}`.
pub fn verify_bgg(n: i64) -> Result<Report> {
    if n < 0 {
        return Err(Error::Domain(format!("verify_bgg needs n >= 0, got {n}")));
    }
    let p = formal(PervKind::Projective, 2 * n + 1, Sign::Plus)?;
    let target = SimpleLabel::new(2 * n + 1, Sign::Plus);
    let mut r = Report::new();
    for m in 0..=2 * n + 5 {
        for sign in [Sign::Plus, Sign::Minus] {
            let s = sign.superscript();
            let expected = usize::from(sign == Sign::Plus && (m == 2 * n + 1 || m == 2 * n + 3));
            let filtration = p.filtration_multiplicity(m, sign);
            let costandard = formal(PervKind::Costandard, m, sign)?.jh.count(&target);
            r.expect_eq(format!("(P({})⁺ : Δ({m}){s})", 2 * n + 1), &filtration, &expected);
            r.expect_eq(format!("[∇({m}){s} : L({})⁺]", 2 * n + 1), &costandard, &expected);
        }
    }
    Ok(r)
}

fn signs_of(jh: &Multiset<SimpleLabel>) -> String {
    let plus = jh.iter().any(|(l, _)| l.sign == Sign::Plus);
    let minus = jh.iter().any(|(l, _)| l.sign == Sign::Minus);
    match (plus, minus) {
        (true, true) => "mixed",
        (true, false) => "+ only",
        (false, true) => "- only",
        (false, false) => "empty",
    }
    .into()
}

/// Odd projectives up to `N` have sign-pure Jordan-Hölder content, while
/// `Δ(2)⁺` mixes signs.
pub fn verify_block_split(max: i64) -> Result<Report> {
    let mut r = Report::new();
    for n in (1..=max).step_by(2) {
        for sign in [Sign::Plus, Sign::Minus] {
            let p = formal(PervKind::Projective, n, sign)?;
            let want = if sign == Sign::Plus { "+ only" } else { "- only" };
            r.expect_eq(format!("signs in JH of {}", p.label), &signs_of(&p.jh), &want.to_string());
        }
    }
    let d2 = formal(PervKind::Standard, 2, Sign::Plus)?;
    r.expect_eq("signs in JH of Δ(2)⁺".to_string(), &signs_of(&d2.jh), &"mixed".to_string());
    let expected: Multiset<SimpleLabel> =
        [SimpleLabel::new(2, Sign::Plus), SimpleLabel::new(0, Sign::Plus), SimpleLabel::new(0, Sign::Minus)]
            .into_iter()
            .collect();
    r.expect_eq("JH of Δ(2)⁺".to_string(), &d2.jh, &expected);
    Ok(r)
}

/// `L(1)⁺ ∗ L(2n)⁺ ≅ L(2n+1)⁺` on characters.
pub fn verify_steinberg(n: i64) -> Result<Report> {
    if n < 0 {
        return Err(Error::Domain(format!("verify_steinberg needs n >= 0, got {n}")));
    }
    let got = jh_decompose(&conv(&simple_char(1, Sign::Plus)?, &simple_char(2 * n, Sign::Plus)?))?;
    let want: Multiset<SimpleLabel> = std::iter::once(SimpleLabel::new(2 * n + 1, Sign::Plus)).collect();
    let mut r = Report::new();
    r.expect_eq(format!("JH of L(1)⁺ ∗ L({})⁺", 2 * n), &got, &want);
    Ok(r)
}

/// `L(2n)⁺ ∗ L(2m)⁺ = L(2(n+m))⁺ ⊕ L(2(n+m)-4)⁺ ⊕ ... ⊕ L(2|n-m|)⁺`.
pub fn verify_clebsch_gordan(n: i64, m: i64) -> Result<Report> {
    if n < 0 || m < 0 {
        return Err(Error::Domain(format!("verify_clebsch_gordan needs n, m >= 0, got ({n}, {m})")));
    }
    let got = jh_decompose(&conv(&simple_char(2 * n, Sign::Plus)?, &simple_char(2 * m, Sign::Plus)?))?;
    let want: Multiset<SimpleLabel> =
        (0..=n.min(m)).map(|k| SimpleLabel::new(2 * (n + m) - 4 * k, Sign::Plus)).collect();
    let mut r = Report::new();
    r.expect_eq(format!("JH of L({})⁺ ∗ L({})⁺", 2 * n, 2 * m), &got, &want);
    Ok(r)
}
