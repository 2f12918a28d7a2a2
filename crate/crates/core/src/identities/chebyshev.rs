use num_bigint::BigInt;
use num_traits::One;

use super::{int, t_ring, var};
use crate::binomial::binom_int;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// Chebyshev polynomial of the second kind, `U_n(t)`, over the ring `(t)`.
///
/// Always has degree `n` and leading coefficient `2^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebyshevU {
    n: u32,
    poly: Polynomial,
}

impl ChebyshevU {
    fn new(n: u32, poly: Polynomial) -> Self {
        let (lead_mono, lead_coeff) = poly.leading_term().expect("U_n is never zero");
        assert_eq!(lead_mono.total_degree(), u64::from(n), "U_{n} has degree {n}");
        assert_eq!(
            *lead_coeff,
            Rational::from(BigInt::one() << n),
            "U_{n} has leading coefficient 2^{n}"
        );
        ChebyshevU { n, poly }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial {
        self.poly
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.poly
            .eval(&[("t", t.clone())])
            .expect("the only variable is assigned")
    }
}

/// `U_n(t) = Σ_{k=0}^{⌊n/2⌋} (-1)^k C(n-k, k) (2t)^{n-2k}`.
pub fn chebyshev_closed(n: u32) -> ChebyshevU {
    let r = t_ring();
    let two_t = var(&r, "t").scale(&Rational::from(2));
    let mut sum = Polynomial::zero(&r);
    for k in 0..=n / 2 {
        let mut c = Rational::from(binom_int(i64::from(n - k), i64::from(k)));
        if k % 2 == 1 {
            c = -c;
        }
        sum = &sum + &two_t.pow(n - 2 * k).scale(&c);
    }
    ChebyshevU::new(n, sum)
}

/// `U_0 = 1`, `U_1 = 2t`, `U_{n+1} = 2t U_n - U_{n-1}`.
pub fn chebyshev_recurrence(n: u32) -> ChebyshevU {
    let r = t_ring();
    let two_t = var(&r, "t").scale(&Rational::from(2));
    let mut prev = int(&r, 1);
    if n == 0 {
        return ChebyshevU::new(0, prev);
    }
    let mut cur = two_t.clone();
    for _ in 1..n {
        let next = &(&two_t * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    ChebyshevU::new(n, cur)
}

/// Compares `U_n(cos θ)` with `sin((n+1)θ) / sin θ` in floating point.
///
/// The polynomial side is evaluated exactly at the rational value of the
/// `f64` `cos θ` and rounded once, so cancellation among the large
/// coefficients of `U_n` does not leak into the comparison. Fails when
/// `|sin θ| ≤ 1e-6`.
pub fn chebyshev_trig_check(n: u32, theta: f64, tol: f64) -> Result<bool> {
    let s = theta.sin();
    if !theta.is_finite() || s.abs() <= 1e-6 {
        return Err(Error::Precondition(format!(
            "theta = {theta} is too close to a multiple of pi"
        )));
    }
    let t = Rational::from_f64(theta.cos()).expect("cos of a finite float is finite");
    let poly_side = chebyshev_closed(n).eval(&t).to_f64();
    let trig_side = ((f64::from(n) + 1.0) * theta).sin() / s;
    Ok((poly_side - trig_side).abs() < tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_examples() {
        assert_eq!(chebyshev_closed(0).poly().render(), "1");
        assert_eq!(chebyshev_closed(1).poly().render(), "2*t");
        assert_eq!(chebyshev_closed(4).poly().render(), "16*t^4 - 12*t^2 + 1");
        assert_eq!(chebyshev_closed(4), chebyshev_recurrence(4));
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(chebyshev_recurrence(0).poly().render(), "1");
        assert_eq!(chebyshev_recurrence(2).poly().render(), "4*t^2 - 1");
        assert_eq!(chebyshev_recurrence(6).eval(&Rational::one()), Rational::from(7));
    }

    #[test]
    fn trig_examples() {
        assert_eq!(chebyshev_trig_check(0, 1.3, 1e-9), Ok(true));
        assert_eq!(chebyshev_trig_check(3, 0.7, 1e-9), Ok(true));
        assert_eq!(chebyshev_trig_check(10, 2.0, 1e-9), Ok(true));
        assert_eq!(chebyshev_trig_check(5, 2.0, 0.0), Ok(false));
    }

    #[test]
    fn trig_rejects_poles() {
        assert!(chebyshev_trig_check(3, 0.0, 1e-9).is_err());
        assert!(chebyshev_trig_check(3, std::f64::consts::PI, 1e-9).is_err());
        assert!(chebyshev_trig_check(3, 1e-7, 1e-9).is_err());
        assert!(chebyshev_trig_check(3, f64::NAN, 1e-9).is_err());
    }
}
