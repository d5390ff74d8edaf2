use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::GaussianRational;

/// A Laurent polynomial `Σ c_k v^k` with finitely many nonzero coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly<T> {
    coeffs: BTreeMap<i64, T>,
}

impl<T> Default for LaurentPoly<T> {
    fn default() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }
}

impl<T: Clone + Zero> LaurentPoly<T> {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn monomial(exp: i64, c: T) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, T)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `v^exp` (zero if absent).
    pub fn coeff(&self, exp: i64) -> T {
        self.coeffs.get(&exp).cloned().unwrap_or_else(T::zero)
    }

    pub fn add_term(&mut self, exp: i64, c: T) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&exp) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(exp, sum);
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &T)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiply every exponent by `factor`.
    pub fn scale_exponents(&self, factor: i64) -> Self {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e * factor, c.clone())))
    }

    /// Multiply by `v^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e + shift, c.clone())))
    }

    pub fn map_coeffs<U: Clone + Zero, F: Fn(&T) -> U>(&self, f: F) -> LaurentPoly<U> {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e, f(c))))
    }
}

impl<T: Clone + Zero + One> LaurentPoly<T> {
    pub fn one() -> Self {
        LaurentPoly::monomial(0, T::one())
    }
}

impl<T: Clone + Zero + Into<GaussianRational>> LaurentPoly<T> {
    /// Evaluate at `v = x` for a nonzero `x ∈ Q(i)`.
    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (e, c) in self.terms() {
            let c: GaussianRational = c.clone().into();
            acc += &(&c * &x.pow(e));
        }
        acc
    }

    /// Evaluate at `v = i`, using the period-4 table for powers of `i`.
    pub fn eval_at_i(&self) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (e, c) in self.terms() {
            let c: GaussianRational = c.clone().into();
            acc += &(&c * &super::i_pow(e));
        }
        acc
    }
}

impl<T: Clone + Zero + Add<Output = T>> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<T: Clone + Zero + Add<Output = T> + Neg<Output = T>> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<T: Clone + Zero + Add<Output = T> + Neg<Output = T>> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e, -c.clone())))
    }
}

impl<T: Clone + Zero + Add<Output = T> + Mul<Output = T>> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

macro_rules! forward_owned_poly {
    ($($tr:ident $method:ident [$($bound:tt)*]),*) => {$(
        impl<T: Clone + Zero + $($bound)*> $tr for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $method(self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned_poly!(
    Add add [Add<Output = T>],
    Sub sub [Add<Output = T> + Neg<Output = T>],
    Mul mul [Add<Output = T> + Mul<Output = T>]
);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly<i64> {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn no_zero_coefficients_are_stored() {
        let p = poly(&[(1, 2), (1, -2), (0, 0), (-3, 1)]);
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(1), 0);
        assert_eq!(p.min_exp(), Some(-3));
    }

    #[test]
    fn product_adds_exponents() {
        let p = poly(&[(1, 1), (-1, 1)]);
        assert_eq!(&p * &p, poly(&[(2, 1), (0, 2), (-2, 1)]));
    }

    #[test]
    fn evaluation_at_i() {
        // q + q^-1 vanishes at q = i
        let p = poly(&[(1, 1), (-1, 1)]);
        assert!(p.eval_at_i().is_zero());
        assert_eq!(p.eval(&GaussianRational::i()), p.eval_at_i());
        let p = poly(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]);
        assert_eq!(p.eval_at_i(), GaussianRational::from_integer(2));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly<i64>> {
        proptest::collection::vec((-6i64..=6, -5i64..=5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        }
    }
}
