//! Binomial coefficients with polynomial or integer upper argument, and the
//! three classical rewrites the identity's proof depends on.
//!
//! Integer conventions: `C(n, k) = 0` for `k < 0`; for `k ≥ 0` the value is
//! the falling-factorial quotient `n(n-1)…(n-k+1)/k!`, which also covers
//! negative `n` (so `C(-1, k) = (-1)^k`) and gives `0` when `0 ≤ n < k`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

pub fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// `p (p-1) … (p-k+1)`; the empty product for `k = 0` is `1`.
pub fn falling_factorial(p: &Polynomial, k: u32) -> Polynomial {
    let ring = p.ring();
    let mut acc = Polynomial::one(ring);
    for i in 0..k {
        let factor = if i == 0 {
            p.clone()
        } else {
            p - &Polynomial::from_integer(ring, i64::from(i))
        };
        acc = if i == 0 { factor } else { &acc * &factor };
    }
    acc
}

/// `C(p, k) = falling_factorial(p, k) / k!`.
pub fn binom_poly(p: &Polynomial, k: u32) -> Polynomial {
    if k == 0 {
        return Polynomial::one(p.ring());
    }
    let inv = Rational::new(BigInt::one(), factorial(k)).expect("k! > 0");
    falling_factorial(p, k).scale(&inv)
}

/// Integer binomial, total over all `(n, k)`.
pub fn binom_int(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    // symmetry keeps the loop short for large nonnegative n
    let k = if n >= 0 { k.min(n - k) } else { k };
    let n = BigInt::from(n);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= &n - i;
        den *= i + 1;
    }
    num / den
}

/// `(-1)^k C(k-1-p, k)`, the upper-negated form of `C(p, k)`.
pub fn negate_upper(p: &Polynomial, k: u32) -> Polynomial {
    let ring = p.ring();
    let flipped = &Polynomial::from_integer(ring, i64::from(k) - 1) - p;
    let b = binom_poly(&flipped, k);
    if k.is_multiple_of(2) {
        b
    } else {
        -b
    }
}

/// Checks `C(k,i) C(i,j-k) = C(k,j-k) C(2k-j, k+i-j)` for `0 ≤ i ≤ k ≤ j`.
pub fn trinomial_revision_check(j: i64, k: i64, i: i64) -> Result<bool> {
    if !(0 <= i && i <= k && k <= j) {
        return Err(Error::Precondition(format!(
            "trinomial revision needs 0 <= i <= k <= j, got (j, k, i) = ({j}, {k}, {i})"
        )));
    }
    let left = binom_int(k, i) * binom_int(i, j - k);
    let right = binom_int(k, j - k) * binom_int(2 * k - j, k + i - j);
    Ok(left == right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::ring::Ring;

    fn xy() -> (Ring, Polynomial, Polynomial) {
        let r = Ring::new(["x", "y"]).unwrap();
        let x = Polynomial::var(&r, "x").unwrap();
        let y = Polynomial::var(&r, "y").unwrap();
        (r, x, y)
    }

    #[test]
    fn falling_factorial_examples() {
        let (r, x, y) = xy();
        assert_eq!(falling_factorial(&x, 0), Polynomial::one(&r));
        assert_eq!(falling_factorial(&x, 2).render(), "x^2 - x");
        // (x+y)(x+y-1) expanded by hand
        let expected = Polynomial::from_terms(
            &r,
            [
                (vec![2, 0], Rational::one()),
                (vec![1, 1], Rational::from(2)),
                (vec![0, 2], Rational::one()),
                (vec![1, 0], Rational::from(-1)),
                (vec![0, 1], Rational::from(-1)),
            ],
        )
        .unwrap();
        assert_eq!(falling_factorial(&(&x + &y), 2), expected);
    }

    #[test]
    fn binom_poly_examples() {
        let (r, x, y) = xy();
        assert_eq!(binom_poly(&x, 0), Polynomial::one(&r));
        assert_eq!(binom_poly(&x, 2).render(), "1/2*x^2 - 1/2*x");
        assert_eq!(binom_poly(&(&x + &y), 1), &x + &y);
    }

    #[test]
    fn binom_int_examples() {
        assert_eq!(binom_int(5, 2), BigInt::from(10));
        assert_eq!(binom_int(3, 5), BigInt::zero());
        assert_eq!(binom_int(-1, 3), BigInt::from(-1));
        assert_eq!(binom_int(-1, 2), BigInt::from(1));
        assert_eq!(binom_int(4, -1), BigInt::zero());
        assert_eq!(binom_int(0, 0), BigInt::one());
        assert_eq!(binom_int(-3, 0), BigInt::one());
        assert_eq!(binom_int(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn binom_int_matches_polynomial_evaluation() {
        let r = Ring::new(["x"]).unwrap();
        let x = Polynomial::var(&r, "x").unwrap();
        for k in -2i64..=10 {
            let b = binom_poly(&x, k.max(0) as u32);
            for n in -10i64..=10 {
                let expected = if k < 0 {
                    Rational::zero()
                } else {
                    b.eval(&[("x", Rational::from(n))]).unwrap()
                };
                assert_eq!(Rational::from(binom_int(n, k)), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn negate_upper_examples() {
        let (_, x, _) = xy();
        assert_eq!(negate_upper(&x, 1), x);
        assert_eq!(negate_upper(&x, 2), binom_poly(&x, 2));
        assert_eq!(negate_upper(&x, 2).render(), "1/2*x^2 - 1/2*x");

        let r = Ring::new(["y", "z"]).unwrap();
        let y = Polynomial::var(&r, "y").unwrap();
        let z = Polynomial::var(&r, "z").unwrap();
        let one = Polynomial::one(&r);
        let two = Polynomial::from_integer(&r, 2);
        let arg = &y + &(&two * &(&z + &one));
        let direct = &(&y + &(&two * &z)) + &two;
        assert_eq!(negate_upper(&arg, 2), binom_poly(&direct, 2));
    }

    #[test]
    fn trinomial_examples() {
        assert_eq!(trinomial_revision_check(2, 1, 1), Ok(true));
        assert_eq!(trinomial_revision_check(0, 0, 0), Ok(true));
        assert_eq!(trinomial_revision_check(3, 2, 0), Ok(true));
        assert_eq!(binom_int(0, 1), BigInt::zero());
        assert_eq!(binom_int(1, -1), BigInt::zero());
    }

    #[test]
    fn trinomial_precondition() {
        assert!(trinomial_revision_check(1, 2, 0).is_err());
        assert!(trinomial_revision_check(3, 1, 2).is_err());
        assert!(trinomial_revision_check(3, 1, -1).is_err());
    }

    #[test]
    fn absorption_and_pascal() {
        let (r, x, y) = xy();
        let p = &(&x + &y) - &Polynomial::constant(&r, rat(1, 3).unwrap());
        let one = Polynomial::one(&r);
        for k in 0..=10u32 {
            let left = binom_poly(&p, k + 1).scale(&Rational::from(i64::from(k) + 1));
            let right = &(&p - &Polynomial::from_integer(&r, i64::from(k))) * &binom_poly(&p, k);
            assert_eq!(left, right, "absorption k={k}");
            if k >= 1 {
                let pm1 = &p - &one;
                assert_eq!(binom_poly(&p, k), &binom_poly(&pm1, k) + &binom_poly(&pm1, k - 1), "pascal k={k}");
            }
        }
    }
}
