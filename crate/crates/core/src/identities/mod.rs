//! Executable constructions of every expression in the identity and its
//! proof.
//!
//! Each construction sums in ascending index order. The `*_with` variants
//! take the indeterminates as arbitrary polynomials over a common ring, so
//! the same code builds the symbolic expansion (pass ring variables) or an
//! exact point value (pass constants of [`Ring::constants`]).

mod chebyshev;

pub use chebyshev::{chebyshev_closed, chebyshev_recurrence, chebyshev_trig_check, ChebyshevU};

use std::sync::OnceLock;

use crate::binomial::{binom_int, binom_poly};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ring::Ring;

fn cached(cell: &'static OnceLock<Ring>, names: &[&str]) -> Ring {
    cell.get_or_init(|| Ring::new(names.iter().copied()).expect("static ring"))
        .clone()
}

/// `(x, y, z)`: home of both sides of the main identity and of `f`.
pub fn xyz_ring() -> Ring {
    static R: OnceLock<Ring> = OnceLock::new();
    cached(&R, &["x", "y", "z"])
}

/// `(x, z)`: home of `g` and the telescoping sum.
pub fn xz_ring() -> Ring {
    static R: OnceLock<Ring> = OnceLock::new();
    cached(&R, &["x", "z"])
}

/// `(a, b, c)`: home of Jensen's convolution.
pub fn abc_ring() -> Ring {
    static R: OnceLock<Ring> = OnceLock::new();
    cached(&R, &["a", "b", "c"])
}

/// `(z)`: home of the binomial-theorem collapse.
pub fn z_ring() -> Ring {
    static R: OnceLock<Ring> = OnceLock::new();
    cached(&R, &["z"])
}

/// `(t)`: home of the Chebyshev polynomials.
pub fn t_ring() -> Ring {
    static R: OnceLock<Ring> = OnceLock::new();
    cached(&R, &["t"])
}

fn var(ring: &Ring, name: &str) -> Polynomial {
    Polynomial::var(ring, name).expect("variable belongs to its static ring")
}

fn int(ring: &Ring, n: i64) -> Polynomial {
    Polynomial::from_integer(ring, n)
}

fn signed(p: Polynomial, negative: bool) -> Polynomial {
    if negative {
        -p
    } else {
        p
    }
}

/// `Σ_{k=0}^{m} (-1)^k C(x+y+kz, m-k) C(y+k+kz, k)`.
pub fn f_def_with(x: &Polynomial, y: &Polynomial, z: &Polynomial, m: u32) -> Polynomial {
    let ring = x.ring();
    let mut sum = Polynomial::zero(ring);
    for k in 0..=m {
        let kz = z.scale(&Rational::from(i64::from(k)));
        let first = binom_poly(&(&(x + y) + &kz), m - k);
        let second = binom_poly(&(&(y + &int(ring, i64::from(k))) + &kz), k);
        sum = &sum + &signed(&first * &second, k % 2 == 1);
    }
    sum
}

pub fn f_def(m: u32) -> Polynomial {
    let r = xyz_ring();
    f_def_with(&var(&r, "x"), &var(&r, "y"), &var(&r, "z"), m)
}

/// `Σ_{j=0}^{m} C(x, m-j) (-1-z)^j`.
pub fn f_closed_with(x: &Polynomial, z: &Polynomial, m: u32) -> Polynomial {
    let base = -(&int(x.ring(), 1) + z);
    let mut sum = Polynomial::zero(x.ring());
    for j in 0..=m {
        sum = &sum + &(&binom_poly(x, m - j) * &base.pow(j));
    }
    sum
}

/// [`f_closed_with`] over `(x, y, z)`; it has no `y` term.
pub fn f_closed(m: u32) -> Polynomial {
    let r = xyz_ring();
    f_closed_with(&var(&r, "x"), &var(&r, "z"), m)
}

/// `Σ_{0≤i≤k≤m} (-1)^k C(k,i) C(x+i, m-k) (1+z)^{k+i} (1-z)^{k-i}`.
pub fn g_def_with(x: &Polynomial, z: &Polynomial, m: u32) -> Polynomial {
    let ring = x.ring();
    let one = int(ring, 1);
    let plus = &one + z;
    let minus = &one - z;
    let mut sum = Polynomial::zero(ring);
    for k in 0..=m {
        for i in 0..=k {
            let c = Rational::from(binom_int(i64::from(k), i64::from(i)));
            let upper = x + &int(ring, i64::from(i));
            let term = &(&binom_poly(&upper, m - k) * &plus.pow(k + i)) * &minus.pow(k - i);
            sum = &sum + &signed(term.scale(&c), k % 2 == 1);
        }
    }
    sum
}

pub fn g_def(m: u32) -> Polynomial {
    let r = xz_ring();
    g_def_with(&var(&r, "x"), &var(&r, "z"), m)
}

/// `Σ_{j=0}^{m} (j+1) C(x, m-j) (-1-z)^j`.
pub fn g_closed_with(x: &Polynomial, z: &Polynomial, m: u32) -> Polynomial {
    let base = -(&int(x.ring(), 1) + z);
    let mut sum = Polynomial::zero(x.ring());
    for j in 0..=m {
        let term = (&binom_poly(x, m - j) * &base.pow(j)).scale(&Rational::from(i64::from(j) + 1));
        sum = &sum + &term;
    }
    sum
}

pub fn g_closed(m: u32) -> Polynomial {
    let r = xz_ring();
    g_closed_with(&var(&r, "x"), &var(&r, "z"), m)
}

/// Left side of the main identity: `(x + (m+1)z) f(x, y, z)`.
pub fn lhs_identity(m: u32) -> Polynomial {
    let r = xyz_ring();
    let factor = &var(&r, "x") + &var(&r, "z").scale(&Rational::from(i64::from(m) + 1));
    &factor * &f_def(m)
}

/// Right side of the main identity: `z g(x, z) + (x - m) C(x, m)`, with `g`
/// embedded into `(x, y, z)`.
pub fn rhs_identity(m: u32) -> Polynomial {
    let r = xyz_ring();
    let x = var(&r, "x");
    let g = g_def(m).embed(&r).expect("(x, z) embeds into (x, y, z)");
    let tail = &(&x - &int(&r, i64::from(m))) * &binom_poly(&x, m);
    &(&var(&r, "z") * &g) + &tail
}

/// `Σ_{i=0}^{m} C(a+bi, i) C(c-bi, m-i)`.
pub fn jensen_lhs(m: u32) -> Polynomial {
    let r = abc_ring();
    let (a, b, c) = (var(&r, "a"), var(&r, "b"), var(&r, "c"));
    let mut sum = Polynomial::zero(&r);
    for i in 0..=m {
        let bi = b.scale(&Rational::from(i64::from(i)));
        sum = &sum + &(&binom_poly(&(&a + &bi), i) * &binom_poly(&(&c - &bi), m - i));
    }
    sum
}

/// `Σ_{j=0}^{m} C(a+c-j, m-j) b^j`.
pub fn jensen_rhs(m: u32) -> Polynomial {
    let r = abc_ring();
    let (a, b, c) = (var(&r, "a"), var(&r, "b"), var(&r, "c"));
    let ac = &a + &c;
    let mut sum = Polynomial::zero(&r);
    for j in 0..=m {
        let upper = &ac - &int(&r, i64::from(j));
        sum = &sum + &(&binom_poly(&upper, m - j) * &b.pow(j));
    }
    sum
}

/// `Σ_{i=0}^{k} C(2k-j, k+i-j) (1+z)^{k+i-j} (1-z)^{k-i}` over `(z)`, terms
/// with `k+i-j < 0` omitted. The result is the constant `2^{2k-j}`.
///
/// Requires `0 ≤ k ≤ j` and `2k ≥ j`; outside that range the enclosing
/// factor `C(k, j-k)` already vanishes.
pub fn binomial_collapse(j: i64, k: i64) -> Result<Polynomial> {
    if !(0 <= k && k <= j && 2 * k >= j) {
        return Err(Error::Precondition(format!(
            "collapse needs 0 <= k <= j and 2k >= j, got (j, k) = ({j}, {k})"
        )));
    }
    let r = z_ring();
    let z = var(&r, "z");
    let one = int(&r, 1);
    let plus = &one + &z;
    let minus = &one - &z;
    let mut sum = Polynomial::zero(&r);
    for i in 0..=k {
        let shifted = k + i - j;
        if shifted < 0 {
            continue;
        }
        let c = Rational::from(binom_int(2 * k - j, shifted));
        let e_plus = u32::try_from(shifted).map_err(|_| Error::Precondition("exponent overflow".into()))?;
        let e_minus = u32::try_from(k - i).map_err(|_| Error::Precondition("exponent overflow".into()))?;
        sum = &sum + &(&plus.pow(e_plus) * &minus.pow(e_minus)).scale(&c);
    }
    Ok(sum)
}

/// `Σ_{j=0}^{m} [ (1+m-j) C(x, 1+m-j) (-1-z)^j - (m-j) C(x, m-j) (-1-z)^{j+1} ]`
/// over `(x, z)`, computed term by term.
pub fn telescoped_sum(m: u32) -> Polynomial {
    let r = xz_ring();
    let x = var(&r, "x");
    let base = -(&int(&r, 1) + &var(&r, "z"));
    let mut sum = Polynomial::zero(&r);
    for j in 0..=m {
        let hi = binom_poly(&x, 1 + m - j).scale(&Rational::from(i64::from(1 + m - j)));
        let lo = binom_poly(&x, m - j).scale(&Rational::from(i64::from(m - j)));
        let term = &(&hi * &base.pow(j)) - &(&lo * &base.pow(j + 1));
        sum = &sum + &term;
    }
    sum
}

/// The two boundary forms the telescoping sum collapses to:
/// `(1+m) C(x, 1+m)` and `(x-m) C(x, m)`, both over `(x, z)`.
pub fn telescope_targets(m: u32) -> (Polynomial, Polynomial) {
    let r = xz_ring();
    let x = var(&r, "x");
    let absorbed = binom_poly(&x, m + 1).scale(&Rational::from(i64::from(m) + 1));
    let shifted = &(&x - &int(&r, i64::from(m))) * &binom_poly(&x, m);
    (absorbed, shifted)
}
