//! The divided-power coproduct checked over Z[q, q^-1] before specializing to
//! q = i: Weyl modules and their tensor products satisfy the defining
//! relations at generic q, and the specialization agrees with `qsl2::tensor`.

use num_bigint::BigInt;
use realsat::arith::{gauss_binomial_poly, qint_poly, LaurentPoly};
use realsat::qsl2::{self, Op};

type P = LaurentPoly<BigInt>;
type PMat = Vec<Vec<P>>;

fn q(e: i64) -> P {
    P::monomial(e, BigInt::from(1))
}

fn zeros(n: usize) -> PMat {
    vec![vec![P::zero(); n]; n]
}

fn identity(n: usize) -> PMat {
    diag(&vec![q(0); n])
}

fn diag(d: &[P]) -> PMat {
    let mut m = zeros(d.len());
    for (i, x) in d.iter().enumerate() {
        m[i][i] = x.clone();
    }
    m
}

fn mul(a: &PMat, b: &PMat) -> PMat {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

fn add(a: &PMat, b: &PMat) -> PMat {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(u, v)| u + v).collect()).collect()
}

fn sub(a: &PMat, b: &PMat) -> PMat {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(u, v)| u - v).collect()).collect()
}

fn scale(c: &P, a: &PMat) -> PMat {
    a.iter().map(|row| row.iter().map(|x| c * x).collect()).collect()
}

fn kron(a: &PMat, b: &PMat) -> PMat {
    let (n, m) = (a.len(), b.len());
    let mut out = zeros(n * m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

#[derive(Clone)]
struct GenericMod {
    weights: Vec<i64>,
    e: PMat,
    f: PMat,
    e2: PMat,
    f2: PMat,
}

impl GenericMod {
    fn dim(&self) -> usize {
        self.weights.len()
    }

    fn k(&self, power: i64) -> PMat {
        diag(&self.weights.iter().map(|&w| q(power * w)).collect::<Vec<_>>())
    }
}

fn weyl(n: i64) -> GenericMod {
    let d = (n + 1) as usize;
    let (mut e, mut f, mut e2, mut f2) = (zeros(d), zeros(d), zeros(d), zeros(d));
    for j in 0..d {
        let ji = j as i64;
        if j + 1 < d {
            f[j + 1][j] = gauss_binomial_poly(ji + 1, 1).unwrap();
        }
        if j + 2 < d {
            f2[j + 2][j] = gauss_binomial_poly(ji + 2, 2).unwrap();
        }
        if j >= 1 {
            e[j - 1][j] = gauss_binomial_poly(n - ji + 1, 1).unwrap();
        }
        if j >= 2 {
            e2[j - 2][j] = gauss_binomial_poly(n - ji + 2, 2).unwrap();
        }
    }
    GenericMod { weights: (0..=n).map(|j| n - 2 * j).collect(), e, f, e2, f2 }
}

fn tensor(m: &GenericMod, n: &GenericMod) -> GenericMod {
    let (im, in_) = (identity(m.dim()), identity(n.dim()));
    let e = add(&kron(&m.e, &in_), &kron(&m.k(1), &n.e));
    let f = add(&kron(&m.f, &n.k(-1)), &kron(&im, &n.f));
    let e2 = add(
        &add(&kron(&m.e2, &in_), &scale(&q(1), &kron(&mul(&m.e, &m.k(1)), &n.e))),
        &kron(&m.k(2), &n.e2),
    );
    let f2 = add(
        &add(&kron(&m.f2, &n.k(-2)), &scale(&q(1), &kron(&m.f, &mul(&n.f, &n.k(-1))))),
        &kron(&im, &n.f2),
    );
    let weights = m.weights.iter().flat_map(|&a| n.weights.iter().map(move |&b| a + b)).collect();
    GenericMod { weights, e, f, e2, f2 }
}

fn assert_relations(m: &GenericMod, name: &str) {
    let two = qint_poly(2);
    let q_minus = &q(1) - &q(-1);
    assert_eq!(mul(&m.e, &m.e), scale(&two, &m.e2), "{name}: E² = [2]E⁽²⁾");
    assert_eq!(mul(&m.f, &m.f), scale(&two, &m.f2), "{name}: F² = [2]F⁽²⁾");
    let comm = sub(&mul(&m.e, &m.f), &mul(&m.f, &m.e));
    assert_eq!(scale(&q_minus, &comm), sub(&m.k(1), &m.k(-1)), "{name}: [E, F]");
    assert_eq!(mul(&m.e, &m.e2), mul(&m.e2, &m.e), "{name}: E E⁽²⁾ = E⁽²⁾ E");
    assert_eq!(mul(&m.f, &m.f2), mul(&m.f2, &m.f), "{name}: F F⁽²⁾ = F⁽²⁾ F");
    let comm2 = sub(&mul(&m.e, &m.f2), &mul(&m.f2, &m.e));
    let rhs = mul(&m.f, &sub(&scale(&q(-1), &m.k(1)), &scale(&q(1), &m.k(-1))));
    assert_eq!(scale(&q_minus, &comm2), rhs, "{name}: [E, F⁽²⁾]");
    assert_eq!(mul(&m.k(1), &m.e), scale(&q(2), &mul(&m.e, &m.k(1))), "{name}: K E = q² E K");
    assert_eq!(mul(&m.k(1), &m.f2), scale(&q(-4), &mul(&m.f2, &m.k(1))), "{name}: K F⁽²⁾ = q⁻⁴ F⁽²⁾ K");
}

#[test]
fn weyl_modules_satisfy_relations_at_generic_q() {
    for n in 0..=6 {
        assert_relations(&weyl(n), &format!("Δ({n})"));
    }
}

#[test]
fn tensor_products_satisfy_relations_at_generic_q() {
    for a in 0..=4 {
        for b in 0..=4 {
            assert_relations(&tensor(&weyl(a), &weyl(b)), &format!("Δ({a}) ⊗ Δ({b})"));
        }
    }
    let t = tensor(&tensor(&weyl(1), &weyl(2)), &weyl(1));
    assert_relations(&t, "Δ(1) ⊗ Δ(2) ⊗ Δ(1)");
}

#[test]
fn coproduct_is_coassociative() {
    for (a, b, c) in [(1, 1, 1), (1, 2, 1), (2, 1, 3), (0, 2, 2)] {
        let (x, y, z) = (weyl(a), weyl(b), weyl(c));
        let left = tensor(&tensor(&x, &y), &z);
        let right = tensor(&x, &tensor(&y, &z));
        assert_eq!(left.weights, right.weights);
        for (l, r) in [(&left.e, &right.e), (&left.f, &right.f), (&left.e2, &right.e2), (&left.f2, &right.f2)] {
            assert_eq!(l, r, "({a}, {b}, {c})");
        }
    }
}

#[test]
fn specialization_matches_library_tensor() {
    for a in 0..=3 {
        for b in 0..=3 {
            let generic = tensor(&weyl(a), &weyl(b));
            let lib = qsl2::tensor(&qsl2::weyl(a).unwrap(), &qsl2::weyl(b).unwrap());
            assert_eq!(lib.weights(), generic.weights.as_slice());
            for (op, mat) in [(Op::E, &generic.e), (Op::F, &generic.f), (Op::E2, &generic.e2), (Op::F2, &generic.f2)] {
                for (i, row) in mat.iter().enumerate() {
                    for (j, x) in row.iter().enumerate() {
                        assert_eq!(x.eval_at_i(), lib.op(op)[(i, j)], "{op:?} at ({i}, {j}) for Δ({a}) ⊗ Δ({b})");
                    }
                }
            }
        }
    }
}
