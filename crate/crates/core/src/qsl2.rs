//! Weight modules over Lusztig's divided-power quantum `sl(2)` specialized at
//! `q = i`.
//!
//! A module is a weight vector plus the matrices of `E`, `F`, `E⁽²⁾`, `F⁽²⁾`.
//! `K` is never stored: it acts on a weight-`w` vector by `i^w`. At a fourth
//! root of unity these four operators generate every divided power, so maps
//! commuting with them and preserving weights are exactly the module maps.

use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::arith::{gauss_binomial, i_pow, qint, GaussianRational, QMatrix};
use crate::characters::WeightCharacter;
use crate::error::{Error, Result};
use crate::modtools;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    E,
    F,
    E2,
    F2,
}

impl Op {
    pub const ALL: [Op; 4] = [Op::E, Op::F, Op::E2, Op::F2];

    /// Change of weight under the operator.
    pub fn weight_shift(self) -> i64 {
        match self {
            Op::E => 2,
            Op::F => -2,
            Op::E2 => 4,
            Op::F2 => -4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Op::E => "E",
            Op::F => "F",
            Op::E2 => "E2",
            Op::F2 => "F2",
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct QMod {
    weights: Vec<i64>,
    e: QMatrix,
    f: QMatrix,
    e2: QMatrix,
    f2: QMatrix,
}

impl QMod {
    /// Assemble a module from its weights and operator matrices. Only shapes
    /// are checked here; see [`QMod::invariant_violations`].
    pub fn new(weights: Vec<i64>, e: QMatrix, f: QMatrix, e2: QMatrix, f2: QMatrix) -> Result<Self> {
        let d = weights.len();
        for (name, m) in [("E", &e), ("F", &f), ("E2", &e2), ("F2", &f2)] {
            if m.rows() != d || m.cols() != d {
                return Err(Error::Domain(format!(
                    "operator {name} is {}x{}, expected {d}x{d}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(QMod { weights, e, f, e2, f2 })
    }

    pub fn zero() -> Self {
        let z = QMatrix::zeros(0, 0);
        QMod { weights: Vec::new(), e: z.clone(), f: z.clone(), e2: z.clone(), f2: z }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn op(&self, op: Op) -> &QMatrix {
        match op {
            Op::E => &self.e,
            Op::F => &self.f,
            Op::E2 => &self.e2,
            Op::F2 => &self.f2,
        }
    }

    pub fn max_weight(&self) -> Option<i64> {
        self.weights.iter().copied().max()
    }

    /// `K^power`, diagonal with entries `i^{power·w}`.
    pub fn k_power(&self, power: i64) -> QMatrix {
        let d: Vec<GaussianRational> = self.weights.iter().map(|&w| i_pow(power * w)).collect();
        QMatrix::diagonal(&d)
    }

    fn weight_diag<F: Fn(i64) -> GaussianRational>(&self, f: F) -> QMatrix {
        let d: Vec<GaussianRational> = self.weights.iter().map(|&w| f(w)).collect();
        QMatrix::diagonal(&d)
    }

    /// Every failed module identity, described; empty when the module is valid.
    ///
    /// Checked: weight shifts of all four operators, `E² = F² = 0`,
    /// `EF - FE = [K; 0]`, `E E⁽²⁾ = E⁽²⁾ E`, `F F⁽²⁾ = F⁽²⁾ F` and
    /// `E F⁽²⁾ - F⁽²⁾ E = F [K; -1]`.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut bad = Vec::new();
        for op in Op::ALL {
            let m = self.op(op);
            for i in 0..self.dim() {
                for j in 0..self.dim() {
                    if !m[(i, j)].is_zero() && self.weights[i] != self.weights[j] + op.weight_shift() {
                        bad.push(format!(
                            "{} sends a weight-{} vector to weight {}",
                            op.name(),
                            self.weights[j],
                            self.weights[i]
                        ));
                    }
                }
            }
        }
        let (e, f, e2, f2) = (&self.e, &self.f, &self.e2, &self.f2);
        if !(e * e).is_zero() {
            bad.push("E^2 != 0".into());
        }
        if !(f * f).is_zero() {
            bad.push("F^2 != 0".into());
        }
        if &(e * f) - &(f * e) != self.weight_diag(qint) {
            bad.push("EF - FE != [K;0]".into());
        }
        if e * e2 != e2 * e {
            bad.push("E E2 != E2 E".into());
        }
        if f * f2 != f2 * f {
            bad.push("F F2 != F2 F".into());
        }
        if &(e * f2) - &(f2 * e) != f * &self.weight_diag(|w| qint(w - 1)) {
            bad.push("E F2 - F2 E != F [K;-1]".into());
        }
        bad
    }

    pub fn is_valid(&self) -> bool {
        self.invariant_violations().is_empty()
    }

    /// Restrict to the submodule spanned by the columns of `basis`, which must
    /// be weight vectors spanning an operator-stable subspace; `weights` gives
    /// the weight of each column.
    pub fn restrict(&self, basis: &QMatrix, weights: Vec<i64>) -> Result<QMod> {
        if basis.cols() == 0 {
            return Ok(QMod::zero());
        }
        let restricted = |m: &QMatrix| -> Result<QMatrix> {
            basis.solve(&(m * basis)).map_err(|_| {
                Error::Inconsistent("subspace is not stable under the operators".into())
            })
        };
        QMod::new(
            weights,
            restricted(&self.e)?,
            restricted(&self.f)?,
            restricted(&self.e2)?,
            restricted(&self.f2)?,
        )
    }

    pub fn to_json(&self) -> Value {
        let mat = |m: &QMatrix| -> Value {
            Value::Array(
                (0..m.rows())
                    .map(|i| Value::Array(m.row(i).iter().map(|x| Value::String(x.to_string())).collect()))
                    .collect(),
            )
        };
        json!({
            "dim": self.dim(),
            "weights": self.weights,
            "E": mat(&self.e),
            "F": mat(&self.f),
            "E2": mat(&self.e2),
            "F2": mat(&self.f2),
        })
    }

    pub fn from_json(v: &Value) -> Result<QMod> {
        let bad = |what: &str| Error::Parse(format!("QMod json: {what}"));
        let weights: Vec<i64> = v
            .get("weights")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("weights"))?
            .iter()
            .map(|w| w.as_i64().ok_or_else(|| bad("weight")))
            .collect::<Result<_>>()?;
        let mat = |key: &str| -> Result<QMatrix> {
            let rows = v.get(key).and_then(Value::as_array).ok_or_else(|| bad(key))?;
            let rows: Vec<Vec<GaussianRational>> = rows
                .iter()
                .map(|r| {
                    r.as_array()
                        .ok_or_else(|| bad(key))?
                        .iter()
                        .map(|x| x.as_str().ok_or_else(|| bad(key))?.parse())
                        .collect()
                })
                .collect::<Result<_>>()?;
            if rows.is_empty() {
                return Ok(QMatrix::zeros(0, 0));
            }
            Ok(QMatrix::from_rows(rows))
        };
        QMod::new(weights, mat("E")?, mat("F")?, mat("E2")?, mat("F2")?)
    }
}

impl fmt::Debug for QMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMod(dim {}, weights {:?})", self.dim(), self.weights)
    }
}

fn check_n(n: i64, what: &str) -> Result<()> {
    if n < 0 {
        return Err(Error::Domain(format!("{what} needs n >= 0, got {n}")));
    }
    Ok(())
}

/// Weyl module `Δ(n)`: basis `v_0..v_n` of weights `n - 2j` with
/// `F⁽ʳ⁾ v_j = [j+r, r] v_{j+r}` and `E⁽ʳ⁾ v_j = [n-j+r, r] v_{j-r}`.
pub fn weyl(n: i64) -> Result<QMod> {
    check_n(n, "weyl")?;
    let d = (n + 1) as usize;
    let weights: Vec<i64> = (0..=n).map(|j| n - 2 * j).collect();
    let mut ops = [QMatrix::zeros(d, d), QMatrix::zeros(d, d), QMatrix::zeros(d, d), QMatrix::zeros(d, d)];
    for j in 0..=n {
        for r in 1..=2i64 {
            let (lower, raise) = if r == 1 { (1, 0) } else { (3, 2) };
            if j + r <= n {
                ops[lower][((j + r) as usize, j as usize)] = gauss_binomial(j + r, r)?;
            }
            if j - r >= 0 {
                ops[raise][((j - r) as usize, j as usize)] = gauss_binomial(n - j + r, r)?;
            }
        }
    }
    let [e, f, e2, f2] = ops;
    QMod::new(weights, e, f, e2, f2)
}

/// Dual Weyl module `∇(n)`: the contravariant dual of `Δ(n)` under the
/// antiautomorphism swapping `E⁽ʳ⁾ ↔ F⁽ʳ⁾`, so each operator is the transpose
/// of its partner.
pub fn dual_weyl(n: i64) -> Result<QMod> {
    let w = weyl(n)?;
    QMod::new(
        w.weights.clone(),
        w.f.transpose(),
        w.e.transpose(),
        w.f2.transpose(),
        w.e2.transpose(),
    )
}

/// The intertwiner `Δ(n) → ∇(n)`, normalized to send the highest-weight
/// vector to the highest-weight vector.
pub fn canonical_map(n: i64) -> Result<QMatrix> {
    let source = weyl(n)?;
    let target = dual_weyl(n)?;
    let basis = modtools::hom(&source, &target).basis;
    if basis.len() != 1 {
        return Err(Error::Inconsistent(format!(
            "Hom(Δ({n}), ∇({n})) has dimension {}, expected 1",
            basis.len()
        )));
    }
    let phi = &basis[0];
    let top = phi[(0, 0)].clone();
    if top.is_zero() {
        return Err(Error::Inconsistent(format!("canonical map for n = {n} kills the highest weight")));
    }
    Ok(phi.scale(&top.inv().expect("nonzero")))
}

/// The simple module `L(n)`, realized as the image of [`canonical_map`] with
/// basis the images of those `v_j` that are independent. For odd `n` this
/// reproduces `weyl(n)` exactly.
pub fn simple(n: i64) -> Result<QMod> {
    let phi = canonical_map(n)?;
    let target = dual_weyl(n)?;
    let keep = phi.pivot_columns();
    let all_rows: Vec<usize> = (0..phi.rows()).collect();
    let basis = phi.select(&all_rows, &keep);
    let weights = keep.iter().map(|&j| target.weights[j]).collect();
    target.restrict(&basis, weights)
}

/// Quantum Frobenius pullback of the classical `V(m)`: weights doubled,
/// `E = F = 0`, and `E⁽²⁾`, `F⁽²⁾` act as the classical `e`, `f`.
pub fn frobenius_simple(m: i64) -> Result<QMod> {
    check_n(m, "frobenius_simple")?;
    let d = (m + 1) as usize;
    let weights = (0..=m).map(|j| 2 * m - 4 * j).collect();
    let mut e2 = QMatrix::zeros(d, d);
    let mut f2 = QMatrix::zeros(d, d);
    for j in 0..=m {
        if j >= 1 {
            e2[((j - 1) as usize, j as usize)] = GaussianRational::from_integer(m - j + 1);
        }
        if j < m {
            f2[((j + 1) as usize, j as usize)] = GaussianRational::from_integer(j + 1);
        }
    }
    QMod::new(weights, QMatrix::zeros(d, d), QMatrix::zeros(d, d), e2, f2)
}

/// `M ⊗ N` under the coproduct
/// `Δ(E) = E⊗1 + K⊗E`, `Δ(F) = F⊗K⁻¹ + 1⊗F`,
/// `Δ(E⁽²⁾) = E⁽²⁾⊗1 + q·EK⊗E + K²⊗E⁽²⁾`,
/// `Δ(F⁽²⁾) = F⁽²⁾⊗K⁻² + q·F⊗FK⁻¹ + 1⊗F⁽²⁾`.
///
/// Basis vector `m_a ⊗ n_b` sits at index `a·dim N + b`.
pub fn tensor(m: &QMod, n: &QMod) -> QMod {
    let q = GaussianRational::i();
    let (im, in_) = (QMatrix::identity(m.dim()), QMatrix::identity(n.dim()));
    let (km, kn_inv) = (m.k_power(1), n.k_power(-1));
    let e = &m.e.kron(&in_) + &km.kron(&n.e);
    let f = &m.f.kron(&n.k_power(-1)) + &im.kron(&n.f);
    let e2 = &(&m.e2.kron(&in_) + &(&m.e * &km).scale(&q).kron(&n.e)) + &m.k_power(2).kron(&n.e2);
    let f2 = &(&m.f2.kron(&n.k_power(-2)) + &m.f.scale(&q).kron(&(&n.f * &kn_inv))) + &im.kron(&n.f2);
    let weights = m
        .weights
        .iter()
        .flat_map(|&a| n.weights.iter().map(move |&b| a + b))
        .collect();
    QMod { weights, e, f, e2, f2 }
}

pub fn direct_sum(m: &QMod, n: &QMod) -> QMod {
    let mut weights = m.weights.clone();
    weights.extend_from_slice(&n.weights);
    QMod {
        weights,
        e: m.e.block_diag(&n.e),
        f: m.f.block_diag(&n.f),
        e2: m.e2.block_diag(&n.e2),
        f2: m.f2.block_diag(&n.f2),
    }
}

/// The weight multiset of `M`.
pub fn char(m: &QMod) -> WeightCharacter {
    WeightCharacter::from_weights(m.weights.iter().copied())
}

/// Whether two modules are isomorphic, decided by searching the intertwiner
/// space for an invertible element. Sufficient for the cases used here, where
/// either `Hom(M, N)` is at most one-dimensional or a generic combination is
/// tried.
pub fn is_isomorphic(m: &QMod, n: &QMod) -> bool {
    if m.dim() != n.dim() || char(m) != char(n) {
        return false;
    }
    let basis = modtools::hom(m, n).basis;
    if basis.is_empty() {
        return m.dim() == 0;
    }
    // Try the basis elements and a few fixed integer combinations; a generic
    // combination of a space containing an invertible map is invertible.
    let mut candidates: Vec<QMatrix> = basis.clone();
    for seed in 1..=3i64 {
        let mut acc = QMatrix::zeros(n.dim(), m.dim());
        for (k, b) in basis.iter().enumerate() {
            let c = GaussianRational::from_integer(1 + seed * (k as i64) * (k as i64 + 1));
            acc = &acc + &b.scale(&c);
        }
        candidates.push(acc);
    }
    candidates.iter().any(QMatrix::is_invertible)
}
