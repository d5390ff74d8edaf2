//! Module-theoretic tools over [`qsl2`](crate::qsl2): intertwiner spaces,
//! endomorphism algebras, submodule closure, Jordan-Hölder multiplicities,
//! socles and the quantum projectives `P(2n) = L(2n+1) ⊗ L(1)`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::arith::{GaussianRational, QMatrix};
use crate::characters::{Multiset, WeightCharacter};
use crate::error::{Error, Result};
use crate::qsl2::{self, Op, QMod};

/// A basis of `Hom(M, N)`; each element is a `dim N × dim M` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBasis {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<QMatrix>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `x` in this basis, or `None` if `x` is not in the span.
    pub fn coordinates(&self, x: &QMatrix) -> Option<Vec<GaussianRational>> {
        coordinates(&self.basis, x)
    }
}

/// Coordinates of `x` in the span of `basis` (all of one shape).
pub fn coordinates(basis: &[QMatrix], x: &QMatrix) -> Option<Vec<GaussianRational>> {
    if basis.is_empty() {
        return x.is_zero().then(Vec::new);
    }
    let columns: Vec<QMatrix> = basis.iter().map(QMatrix::vectorize).collect();
    let a = QMatrix::from_columns(columns[0].rows(), &columns);
    let sol = a.solve(&x.vectorize()).ok()?;
    Some((0..basis.len()).map(|k| sol[(k, 0)].clone()).collect())
}

/// Linear combination `Σ c_k b_k`.
pub fn combine(basis: &[QMatrix], coeffs: &[GaussianRational]) -> QMatrix {
    assert_eq!(basis.len(), coeffs.len());
    let mut acc = QMatrix::zeros(basis[0].rows(), basis[0].cols());
    for (b, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = &acc + &b.scale(c);
        }
    }
    acc
}

/// Row-echelon accumulator: keeps only independent equations.
struct Echelon {
    rows: Vec<(usize, Vec<GaussianRational>)>,
}

impl Echelon {
    fn push(&mut self, mut row: Vec<GaussianRational>) {
        for (p, r) in &self.rows {
            if row[*p].is_zero() {
                continue;
            }
            let factor = row[*p].clone();
            for (x, y) in row.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x -= &(&factor * y);
                }
            }
        }
        if let Some(p) = row.iter().position(|x| !x.is_zero()) {
            let inv = row[p].inv().expect("nonzero");
            for x in row.iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            self.rows.push((p, row));
        }
    }
}

/// Solve `X · op_M = op_N · X` for all four operators over weight-preserving
/// `X`.
///
/// The unknowns are the entries `X[i][j]` with `weight_N(i) = weight_M(j)`, in
/// row-major order. The kernel basis depends only on the solution space and
/// that variable order, so it agrees with the basis obtained by also imposing
/// weight preservation as equations.
pub fn hom(m: &QMod, n: &QMod) -> HomBasis {
    let (dm, dn) = (m.dim(), n.dim());
    let mut var_of = vec![vec![None; dm]; dn];
    let mut vars = Vec::new();
    for i in 0..dn {
        for j in 0..dm {
            if n.weights()[i] == m.weights()[j] {
                var_of[i][j] = Some(vars.len());
                vars.push((i, j));
            }
        }
    }
    let nv = vars.len();
    let mut eqs = Echelon { rows: Vec::new() };
    for op in Op::ALL {
        let (a, b) = (m.op(op), n.op(op));
        for r in 0..dn {
            for c in 0..dm {
                if n.weights()[r] != m.weights()[c] + op.weight_shift() {
                    continue;
                }
                let mut row = vec![GaussianRational::zero(); nv];
                let mut nonzero = false;
                for k in 0..dm {
                    if let Some(v) = var_of[r][k] {
                        if !a[(k, c)].is_zero() {
                            row[v] += &a[(k, c)];
                            nonzero = true;
                        }
                    }
                }
                for k in 0..dn {
                    if let Some(v) = var_of[k][c] {
                        if !b[(r, k)].is_zero() {
                            row[v] -= &b[(r, k)];
                            nonzero = true;
                        }
                    }
                }
                if nonzero {
                    eqs.push(row);
                }
            }
        }
    }
    let system = if eqs.rows.is_empty() {
        QMatrix::zeros(0, nv)
    } else {
        QMatrix::from_rows(eqs.rows.into_iter().map(|(_, r)| r).collect())
    };
    let basis = system
        .kernel()
        .into_iter()
        .map(|v| {
            let mut x = QMatrix::zeros(dn, dm);
            for (k, &(i, j)) in vars.iter().enumerate() {
                x[(i, j)] = v[(k, 0)].clone();
            }
            x
        })
        .collect();
    HomBasis { source_dim: dm, target_dim: dn, basis }
}

/// `End(M)` with structure constants: `b_i · b_j = Σ_k mult_table[i][j][k] b_k`
/// where `·` is composition (`b_j` applied first).
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub basis: Vec<QMatrix>,
    pub mult_table: Vec<Vec<Vec<GaussianRational>>>,
}

impl EndAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains_identity(&self) -> bool {
        self.basis.first().is_some_and(|b| coordinates(&self.basis, &QMatrix::identity(b.rows())).is_some())
    }

    /// Associativity of the structure constants on every basis triple.
    pub fn is_associative(&self) -> bool {
        let d = self.dim();
        let mul = |x: &[GaussianRational], y: &[GaussianRational]| -> Vec<GaussianRational> {
            let mut out = vec![GaussianRational::zero(); d];
            for (i, xi) in x.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                for (j, yj) in y.iter().enumerate() {
                    if yj.is_zero() {
                        continue;
                    }
                    let c = xi * yj;
                    for (k, t) in self.mult_table[i][j].iter().enumerate() {
                        if !t.is_zero() {
                            out[k] += &(&c * t);
                        }
                    }
                }
            }
            out
        };
        let unit = |i: usize| {
            let mut v = vec![GaussianRational::zero(); d];
            v[i] = GaussianRational::from_integer(1);
            v
        };
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let left = mul(&mul(&unit(a), &unit(b)), &unit(c));
                    let right = mul(&unit(a), &mul(&unit(b), &unit(c)));
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub fn end_algebra(m: &QMod) -> Result<EndAlgebra> {
    let basis = hom(m, m).basis;
    let mut mult_table = Vec::with_capacity(basis.len());
    for bi in &basis {
        let mut row = Vec::with_capacity(basis.len());
        for bj in &basis {
            let prod = bi * bj;
            let c = coordinates(&basis, &prod)
                .ok_or_else(|| Error::Inconsistent("End(M) is not closed under composition".into()))?;
            row.push(c);
        }
        mult_table.push(row);
    }
    Ok(EndAlgebra { basis, mult_table })
}

/// `P(2n) = L(2n+1) ⊗ L(1)`, the projective cover and injective hull of
/// `L(2n)`.
pub fn projective(two_n: i64) -> Result<QMod> {
    if two_n < 0 || two_n % 2 != 0 {
        return Err(Error::Domain(format!(
            "projective needs an even nonnegative highest weight, got {two_n}"
        )));
    }
    Ok(qsl2::tensor(&qsl2::simple(two_n + 1)?, &qsl2::simple(1)?))
}

/// Character of the quantum simple `L(n)`: weights `n, n-2, ..., -n` for odd
/// `n`, and `n, n-4, ..., -n` for even `n`.
pub fn quantum_simple_char(n: i64) -> WeightCharacter {
    assert!(n >= 0);
    let step = if n % 2 == 0 { 4 } else { 2 };
    WeightCharacter::from_weights((0..=n / (step / 2)).map(|j| n - step * j))
}

/// Jordan-Hölder multiplicities of `M`, read off its character by
/// leading-weight elimination.
pub fn jh(m: &QMod) -> Result<Multiset<i64>> {
    jh_of_character(&qsl2::char(m))
}

pub fn jh_of_character(c: &WeightCharacter) -> Result<Multiset<i64>> {
    let mut rest = c.clone();
    let mut out = Multiset::new();
    while let Some(w) = rest.poly().max_exp() {
        if w < 0 {
            return Err(Error::NotAModuleCharacter(format!("leading weight {w} is negative in {rest}")));
        }
        let mult = rest.multiplicity(w);
        let simple = WeightCharacter::new(quantum_simple_char(w).poly().map_coeffs(|x| x * mult))?;
        rest = rest.checked_sub(&simple).map_err(|_| {
            Error::NotAModuleCharacter(format!("cannot remove {mult} copies of L({w}) from {rest}"))
        })?;
        out.insert_n(w, mult as usize);
    }
    Ok(out)
}

/// The smallest weight-graded operator-stable subspace containing `vectors`,
/// together with its basis as the columns of a `dim M × k` matrix. The basis
/// is ordered by descending weight and canonical within each weight space.
pub fn submodule_with_inclusion(m: &QMod, vectors: &[QMatrix]) -> (QMod, QMatrix) {
    let d = m.dim();
    let mut by_weight: BTreeMap<i64, Vec<QMatrix>> = BTreeMap::new();
    let mut queue: Vec<QMatrix> = Vec::new();

    // weight components of the generators
    for v in vectors {
        assert_eq!((v.rows(), v.cols()), (d, 1), "vector does not lie in the module");
        let mut parts: BTreeMap<i64, QMatrix> = BTreeMap::new();
        for (i, &w) in m.weights().iter().enumerate() {
            if !v[(i, 0)].is_zero() {
                parts.entry(w).or_insert_with(|| QMatrix::zeros(d, 1))[(i, 0)] = v[(i, 0)].clone();
            }
        }
        queue.extend(parts.into_values());
    }

    let weight_of = |v: &QMatrix| -> i64 {
        let i = (0..d).find(|&i| !v[(i, 0)].is_zero()).expect("nonzero vector");
        m.weights()[i]
    };

    while let Some(v) = queue.pop() {
        if v.is_zero() {
            continue;
        }
        let w = weight_of(&v);
        let span = by_weight.entry(w).or_default();
        let before = span.len();
        let mut cols = span.clone();
        cols.push(v.clone());
        if QMatrix::from_columns(d, &cols).rank() == before {
            continue;
        }
        span.push(v.clone());
        for op in Op::ALL {
            let image = m.op(op) * &v;
            if !image.is_zero() {
                queue.push(image);
            }
        }
    }

    let mut basis_cols = Vec::new();
    let mut weights = Vec::new();
    for (&w, span) in by_weight.iter().rev() {
        for b in QMatrix::from_columns(d, span).image() {
            basis_cols.push(b);
            weights.push(w);
        }
    }
    let basis = QMatrix::from_columns(d, &basis_cols);
    let sub = m.restrict(&basis, weights).expect("closure is operator-stable");
    (sub, basis)
}

pub fn submodule_closure(m: &QMod, vectors: &[QMatrix]) -> QMod {
    submodule_with_inclusion(m, vectors).0
}

/// `n ↦ dim Hom(L(n), M)` for `0 <= n <= upto`.
pub fn socle_dims(m: &QMod, upto: i64) -> Result<BTreeMap<i64, usize>> {
    let parity: Option<i64> = m.weights().first().map(|w| w.rem_euclid(2));
    let top = m.max_weight().unwrap_or(-1);
    let mut out = BTreeMap::new();
    for n in 0..=upto {
        let d = if Some(n % 2) == parity && n <= top {
            hom(&qsl2::simple(n)?, m).dim()
        } else {
            0
        };
        out.insert(n, d);
    }
    Ok(out)
}

/// Whether `End(M)` is local with residue field the scalars: the traceless
/// parts of the basis must span a nilpotent ideal.
pub fn is_indecomposable_local(m: &QMod) -> Result<bool> {
    if m.dim() == 0 {
        return Ok(false);
    }
    let end = hom(m, m).basis;
    if end.len() > 4 {
        return Err(Error::Unsupported(format!(
            "End(M) has dimension {}, the local test handles at most 4",
            end.len()
        )));
    }
    let dim = GaussianRational::from_integer(m.dim() as i64);
    let id = QMatrix::identity(m.dim());
    let traceless: Vec<QMatrix> = end
        .iter()
        .map(|b| b - &id.scale(&(&b.trace() / &dim)))
        .filter(|b| !b.is_zero())
        .collect();
    let radical = span_basis(&traceless);
    let mut power = radical.clone();
    for _ in 0..=m.dim() {
        if power.is_empty() {
            return Ok(true);
        }
        let products: Vec<QMatrix> = power
            .iter()
            .flat_map(|p| radical.iter().map(move |r| p * r))
            .collect();
        power = span_basis(&products);
    }
    Ok(false)
}

/// A basis for the span of a list of equally-shaped matrices.
fn span_basis(ms: &[QMatrix]) -> Vec<QMatrix> {
    let nonzero: Vec<&QMatrix> = ms.iter().filter(|m| !m.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return Vec::new();
    };
    let (r, c) = (first.rows(), first.cols());
    let cols: Vec<QMatrix> = nonzero.iter().map(|m| m.vectorize()).collect();
    QMatrix::from_columns(r * c, &cols)
        .image()
        .into_iter()
        .map(|v| v.reshape(r, c))
        .collect()
}
