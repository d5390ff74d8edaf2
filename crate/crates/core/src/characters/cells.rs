//! Intersections of semi-infinite orbits `S^m`, `T^m` with spherical orbits
//! `Gr^n`, and the standard characters assembled from them.

use std::fmt;
use std::str::FromStr;

use super::{Sign, SignedCharacter};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `S^m = N_K t^m`
    S,
    /// `T^m = N⁻_K t^m`
    T,
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Side> {
        match s {
            "S" | "s" => Ok(Side::S),
            "T" | "t" => Ok(Side::T),
            _ => Err(Error::Parse(format!("bad side `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellKind {
    /// `R^d`
    AffineSpace,
    /// `R^d - R^{d-1}`
    ComplementPair,
    /// `R^0`
    Point,
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CellDescriptor {
    pub kind: CellKind,
    pub dimension: u32,
    /// Whether `diag(1, -1)` acts on the cell by `-1` on coordinates.
    pub sign_action: bool,
}

impl CellDescriptor {
    fn affine(d: i64) -> Self {
        CellDescriptor { kind: CellKind::AffineSpace, dimension: d as u32, sign_action: d > 0 }
    }

    fn complement_pair(d: i64) -> Self {
        debug_assert!(d >= 1);
        CellDescriptor { kind: CellKind::ComplementPair, dimension: d as u32, sign_action: true }
    }

    fn point() -> Self {
        CellDescriptor { kind: CellKind::Point, dimension: 0, sign_action: false }
    }

    fn empty() -> Self {
        CellDescriptor { kind: CellKind::Empty, dimension: 0, sign_action: false }
    }

    pub fn is_empty(&self) -> bool {
        self.kind == CellKind::Empty
    }
}

impl fmt::Display for CellDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            CellKind::AffineSpace => write!(f, "R^{}", self.dimension),
            CellKind::ComplementPair => write!(f, "R^{} - R^{}", self.dimension, self.dimension - 1),
            CellKind::Point => write!(f, "R^0"),
            CellKind::Empty => write!(f, "∅"),
        }
    }
}

/// `S^m ∩ Gr^n` or `T^m ∩ Gr^n`.
///
/// For `n = 0` both special cases coincide at `m = 0`; the `m = n` case wins.
pub fn intersection_cells(m: i64, n: i64, side: Side) -> Result<CellDescriptor> {
    if n < 0 {
        return Err(Error::Domain(format!("orbit index n must be >= 0, got {n}")));
    }
    let interior = |twice_d: i64| twice_d % 2 == 0 && 0 < twice_d / 2 && twice_d / 2 < n;
    let cell = match side {
        Side::S => {
            if m == n {
                CellDescriptor::affine(n)
            } else if m == -n {
                CellDescriptor::point()
            } else if interior(n + m) {
                CellDescriptor::complement_pair((n + m) / 2)
            } else {
                CellDescriptor::empty()
            }
        }
        Side::T => {
            if m == n {
                CellDescriptor::point()
            } else if m == -n {
                CellDescriptor::affine(n)
            } else if interior(n - m) {
                CellDescriptor::complement_pair((n - m) / 2)
            } else {
                CellDescriptor::empty()
            }
        }
    };
    Ok(cell)
}

/// `ch Δ(n)⁺` assembled from the compactly supported cohomology of the cells
/// `S^m ∩ Gr^n`: an affine space gives `k⁺`, a complement pair gives the
/// regular representation `k⁺ ⊕ k⁻`, and the point at `m = -n` gives
/// `(k⁻)^{⊗n}`.
pub fn standard_char_from_cells(n: i64) -> Result<SignedCharacter> {
    if n < 0 {
        return Err(Error::Domain(format!("standard_char_from_cells needs n >= 0, got {n}")));
    }
    let mut c = SignedCharacter::zero();
    for m in -n..=n {
        match intersection_cells(m, n, Side::S)?.kind {
            CellKind::AffineSpace => c.add_weight(Sign::Plus, m, 1),
            CellKind::ComplementPair => {
                c.add_weight(Sign::Plus, m, 1);
                c.add_weight(Sign::Minus, m, 1);
            }
            CellKind::Point => c.add_weight(Sign::minus_power(n), m, 1),
            CellKind::Empty => {}
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::standard_char;

    #[test]
    fn table_examples() {
        for n in 0..6 {
            let c = intersection_cells(n, n, Side::S).unwrap();
            assert_eq!((c.kind, c.dimension), (CellKind::AffineSpace, n as u32));
        }
        for n in 1..6 {
            assert_eq!(intersection_cells(-n, n, Side::S).unwrap().kind, CellKind::Point);
        }
        let c = intersection_cells(1, 3, Side::T).unwrap();
        assert_eq!(c, CellDescriptor { kind: CellKind::ComplementPair, dimension: 1, sign_action: true });
        assert!(intersection_cells(0, 3, Side::T).unwrap().is_empty());
        assert!(intersection_cells(5, 3, Side::S).unwrap().is_empty());
        assert!(matches!(intersection_cells(0, -1, Side::S), Err(Error::Domain(_))));
    }

    #[test]
    fn descriptor_invariants() {
        for n in 0..10 {
            for m in -12..=12 {
                for side in [Side::S, Side::T] {
                    let c = intersection_cells(m, n, side).unwrap();
                    match c.kind {
                        CellKind::ComplementPair => assert!(c.dimension >= 1),
                        CellKind::Point => assert_eq!(c.dimension, 0),
                        _ => {}
                    }
                    // nonempty only for |m| <= n with m ≡ n mod 2
                    assert_eq!(!c.is_empty(), m.abs() <= n && (n - m) % 2 == 0, "m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn sides_mirror_each_other() {
        for n in 0..10 {
            for m in -n..=n {
                let s = intersection_cells(m, n, Side::S).unwrap();
                let t = intersection_cells(-m, n, Side::T).unwrap();
                if n > 0 {
                    assert_eq!((s.kind, s.dimension), (t.kind, t.dimension));
                }
            }
        }
    }

    #[test]
    fn cells_reproduce_standard_characters() {
        assert_eq!(standard_char_from_cells(0).unwrap(), SignedCharacter::k(Sign::Plus, 0));
        for n in 0..=10 {
            assert_eq!(standard_char_from_cells(n).unwrap(), standard_char(n, Sign::Plus).unwrap());
        }
    }
}
