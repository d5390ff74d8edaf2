//! Quantum integers and balanced Gaussian binomials, symbolic in `q` and
//! specialized at `q = i`.

use num_bigint::BigInt;
use num_traits::One;

use super::{GaussianRational, LaurentPoly};
use crate::error::{Error, Result};

/// `i^e` for any integer `e`.
pub fn i_pow(e: i64) -> GaussianRational {
    match e.rem_euclid(4) {
        0 => GaussianRational::from_parts(1, 0),
        1 => GaussianRational::from_parts(0, 1),
        2 => GaussianRational::from_parts(-1, 0),
        _ => GaussianRational::from_parts(0, -1),
    }
}

/// The balanced quantum integer `[n] = q^{n-1} + q^{n-3} + ... + q^{1-n}` as a
/// Laurent polynomial; `[-n] = -[n]`.
pub fn qint_poly(n: i64) -> LaurentPoly<BigInt> {
    let sign = BigInt::from(n.signum());
    let m = n.abs();
    LaurentPoly::from_terms((0..m).map(|k| (m - 1 - 2 * k, sign.clone())))
}

/// `[n]` evaluated at `q = i`: the 4-periodic sequence `0, 1, 0, -1`.
pub fn qint(n: i64) -> GaussianRational {
    let v = match n.rem_euclid(4) {
        1 => 1,
        3 => -1,
        _ => 0,
    };
    GaussianRational::from_integer(v)
}

/// The balanced Gaussian binomial `[n choose r]` in `Z[q, q^-1]`, built from
/// the recurrence `[n, r] = q^{n-r} [n-1, r-1] + q^{-r} [n-1, r]`.
pub fn gauss_binomial_poly(n: i64, r: i64) -> Result<LaurentPoly<BigInt>> {
    if n < 0 || r < 0 || r > n {
        return Err(Error::Domain(format!(
            "gauss_binomial needs 0 <= r <= n, got n = {n}, r = {r}"
        )));
    }
    let r = r as usize;
    // row[k] holds [m, k] for the current m, k <= r
    let mut row: Vec<LaurentPoly<BigInt>> = vec![LaurentPoly::zero(); r + 1];
    row[0] = LaurentPoly::one();
    for m in 1..=n {
        for k in (1..=r.min(m as usize)).rev() {
            let k_i = k as i64;
            let from_left = row[k - 1].shift(m - k_i);
            let from_above = row[k].shift(-k_i);
            row[k] = &from_left + &from_above;
        }
        // [m, 0] = 1 stays fixed
    }
    Ok(row[r].clone())
}

/// `[n choose r]` at `q = i`. Never divides quantum integers, so the vanishing
/// of `[2]` causes no trouble.
pub fn gauss_binomial(n: i64, r: i64) -> Result<GaussianRational> {
    if r == 0 && n >= 0 {
        return Ok(GaussianRational::one());
    }
    Ok(gauss_binomial_poly(n, r)?.eval_at_i())
}
