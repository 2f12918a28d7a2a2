//! Sparse multivariate polynomials over [`Rational`].
//!
//! A [`Polynomial`] is a map from [`Monomial`] to nonzero coefficient inside a
//! fixed [`Ring`]. Every constructor and operation returns the canonical form
//! (no zero coefficients), so structural equality is symbolic equality.
//!
//! The `try_*` methods report a ring mismatch as an error. The `std::ops`
//! impls on references panic on mismatch instead, the same way slice
//! operations panic on a length mismatch; they exist for building
//! expressions inside a ring the caller already controls.

use std::cell::Cell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::ring::{Monomial, Ring};

thread_local! {
    static RING_OPS: Cell<u64> = const { Cell::new(0) };
}

#[inline]
fn tick() {
    RING_OPS.with(|c| c.set(c.get() + 1));
}

/// Runs `f` and returns its result together with the number of polynomial
/// ring operations (add, sub, neg, mul, scale) it performed on this thread.
///
/// `pow` counts as the multiplications it performs. Calls nest: an outer
/// counter also sees the operations of an inner one.
pub fn count_ring_ops<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let outer = RING_OPS.with(|c| c.replace(0));
    let out = f();
    let inner = RING_OPS.with(|c| c.get());
    RING_OPS.with(|c| c.set(outer + inner));
    (out, inner)
}

/// Source of variable values for [`Polynomial::eval`].
pub trait Assignment {
    fn value(&self, var: &str) -> Option<&Rational>;
}

impl Assignment for BTreeMap<String, Rational> {
    fn value(&self, var: &str) -> Option<&Rational> {
        self.get(var)
    }
}

impl Assignment for HashMap<String, Rational> {
    fn value(&self, var: &str) -> Option<&Rational> {
        self.get(var)
    }
}

impl<S: AsRef<str>> Assignment for [(S, Rational)] {
    fn value(&self, var: &str) -> Option<&Rational> {
        self.iter().find(|(k, _)| k.as_ref() == var).map(|(_, v)| v)
    }
}

impl<S: AsRef<str>, const N: usize> Assignment for [(S, Rational); N] {
    fn value(&self, var: &str) -> Option<&Rational> {
        self.as_slice().value(var)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.len()), c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_integer(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, Rational::from(n))
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Self> {
        let idx = ring
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ring.len(), idx), Rational::one());
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs. Repeated
    /// monomials are summed and zero coefficients dropped.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut out = BTreeMap::new();
        for (exps, c) in terms {
            if exps.len() != ring.len() {
                return Err(Error::Precondition(format!(
                    "exponent vector of length {} in a ring of {} variables",
                    exps.len(),
                    ring.len()
                )));
            }
            accumulate(&mut out, Monomial::new(exps), c);
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: out,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms
            .get(&Monomial::new(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The constant value, if the polynomial has no non-constant term.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(Monomial::total_degree)
    }

    /// Highest exponent of `var` in any term (0 for the zero polynomial).
    pub fn degree_in(&self, var: &str) -> Result<u32> {
        let idx = self
            .ring
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        Ok(self
            .terms
            .keys()
            .map(|m| m.exponents()[idx])
            .max()
            .unwrap_or(0))
    }

    /// Leading term under the graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.ensure_same(&other.ring)?;
        tick();
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.ensure_same(&other.ring)?;
        tick();
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), -c);
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.ensure_same(&other.ring)?;
        tick();
        // multiply integer numerators over a common denominator per side;
        // reduction happens once per output term
        let (da, na) = integer_terms(&self.terms);
        let (db, nb) = integer_terms(&other.terms);
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(na.len().max(nb.len()));
        for (ma, ca) in &na {
            for (mb, cb) in &nb {
                let prod = ca * cb;
                acc.entry(ma.mul(mb))
                    .and_modify(|c| *c += &prod)
                    .or_insert(prod);
            }
        }
        let denom = da * db;
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m, Rational::new(c, denom.clone()).expect("denominator is positive")))
            .collect();
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        tick();
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Square-and-multiply; `p^0 = 1`.
    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        if e == 0 {
            return result;
        }
        let mut base = self.clone();
        let mut e = e;
        let mut first = true;
        loop {
            if e & 1 == 1 {
                result = if first { base.clone() } else { &result * &base };
                first = false;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = &base * &base;
        }
        result
    }

    /// Exact value at a point. Every ring variable must be assigned.
    pub fn eval<A: Assignment + ?Sized>(&self, point: &A) -> Result<Rational> {
        let values = self
            .ring
            .variables()
            .iter()
            .map(|v| {
                point
                    .value(v)
                    .cloned()
                    .ok_or_else(|| Error::MissingAssignment(v.clone()))
            })
            .collect::<Result<Vec<_>>>()?;

        let mut powers: Vec<Vec<Rational>> = values.iter().map(|v| vec![Rational::one(), v.clone()]).collect();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[i];
                while table.len() <= e as usize {
                    let next = &table[table.len() - 1] * &values[i];
                    table.push(next);
                }
                term *= &table[e as usize];
            }
            total += &term;
        }
        Ok(total)
    }

    /// Re-expresses the polynomial in a larger ring, matching variables by
    /// name. Variables absent from `self` get exponent zero.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial> {
        let map = self
            .ring
            .variables()
            .iter()
            .map(|v| {
                target
                    .index_of(v)
                    .ok_or_else(|| Error::UnknownVariable(v.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; target.len()];
                for (src, &dst) in map.iter().enumerate() {
                    e[dst] = m.exponents()[src];
                }
                (Monomial::new(e), c.clone())
            })
            .collect();
        Ok(Polynomial {
            ring: target.clone(),
            terms,
        })
    }

    /// Canonical text: terms by descending total degree, ties broken by
    /// descending exponent vector. Coefficients print as `n` or `n/d`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            let mono = self.render_monomial(m);
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&mag.to_string());
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    fn render_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (name, &e) in self.ring.variables().iter().zip(m.exponents()) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

/// Common denominator (lcm) and the matching integer numerators.
fn integer_terms(terms: &BTreeMap<Monomial, Rational>) -> (BigInt, Vec<(&Monomial, BigInt)>) {
    let denom = terms
        .values()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let numers = terms
        .iter()
        .map(|(m, c)| (m, c.numer() * (&denom / c.denom())))
        .collect();
    (denom, numers)
}

fn accumulate(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in [{}]", self.render(), self.ring)
    }
}

macro_rules! panicking_binop {
    ($Trait:ident, $method:ident, $checked:ident) => {
        impl $Trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $Trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

panicking_binop!(Add, add, try_add);
panicking_binop!(Sub, sub, try_sub);
panicking_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        tick();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ring(names: &[&str]) -> Ring {
        Ring::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn add_cancels_to_constant() {
        let r = ring(&["x"]);
        let x = Polynomial::var(&r, "x").unwrap();
        let one = Polynomial::one(&r);
        let sum = (&x + &one).try_add(&-&x).unwrap();
        assert_eq!(sum, one);
        assert_eq!(sum.render(), "1");
    }

    #[test]
    fn add_zero_and_doubling() {
        let r = ring(&["x"]);
        let x = Polynomial::var(&r, "x").unwrap();
        assert_eq!(&x + &Polynomial::zero(&r), x);
        assert_eq!((&x + &x).render(), "2*x");
    }

    #[test]
    fn mul_examples() {
        let r = ring(&["x", "y", "z"]);
        let x = Polynomial::var(&r, "x").unwrap();
        let y = Polynomial::var(&r, "y").unwrap();
        let z = Polynomial::var(&r, "z").unwrap();
        let one = Polynomial::one(&r);
        assert_eq!(((&one + &z) * (&one - &z)).render(), "-z^2 + 1");
        assert_eq!(((&x + &y) * (&x - &y)).render(), "x^2 - y^2");
        assert_eq!(&x * &one, x);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Polynomial::var(&ring(&["x"]), "x").unwrap();
        let b = Polynomial::var(&ring(&["x", "y"]), "x").unwrap();
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch { .. })));
        assert!(matches!(a.try_sub(&b), Err(Error::RingMismatch { .. })));
        assert!(matches!(a.try_mul(&b), Err(Error::RingMismatch { .. })));
    }

    #[test]
    #[should_panic(expected = "ring mismatch")]
    fn operator_panics_on_mismatch() {
        let a = Polynomial::var(&ring(&["x"]), "x").unwrap();
        let b = Polynomial::var(&ring(&["y"]), "y").unwrap();
        let _ = &a + &b;
    }

    #[test]
    fn pow_examples() {
        let r = ring(&["z"]);
        let z = Polynomial::var(&r, "z").unwrap();
        let one = Polynomial::one(&r);
        assert_eq!((&one + &z).pow(0), one);
        assert_eq!((&one + &z).pow(2).render(), "z^2 + 2*z + 1");
        // (1 - z)^3 by three explicit multiplications
        let base = &one - &z;
        let expected = &(&base * &base) * &base;
        assert_eq!(base.pow(3), expected);
        assert_eq!(base.pow(3).render(), "-z^3 + 3*z^2 - 3*z + 1");
    }

    #[test]
    fn eval_examples() {
        let r = ring(&["x"]);
        let x = Polynomial::var(&r, "x").unwrap();
        let p = &(&x * &x) - &x;
        assert_eq!(p.eval(&[("x", Rational::from(3))]).unwrap(), Rational::from(6));
        assert_eq!(
            Polynomial::one(&r).eval(&[("x", rat(-5, 3).unwrap())]).unwrap(),
            Rational::one()
        );

        let rz = ring(&["z"]);
        let z = Polynomial::var(&rz, "z").unwrap();
        let one = Polynomial::one(&rz);
        let q = (&one + &z) * (&one - &z);
        assert_eq!(q.eval(&[("z", rat(1, 2).unwrap())]).unwrap(), rat(3, 4).unwrap());
    }

    #[test]
    fn eval_missing_variable() {
        let r = ring(&["x", "y"]);
        let p = Polynomial::var(&r, "y").unwrap();
        assert_eq!(
            p.eval(&[("x", Rational::one())]),
            Err(Error::MissingAssignment("y".into()))
        );
    }

    #[test]
    fn render_examples() {
        let r = ring(&["x"]);
        let x = Polynomial::var(&r, "x").unwrap();
        assert_eq!((&(&x * &x) - &x).render(), "x^2 - x");
        assert_eq!(Polynomial::zero(&r).render(), "0");
        let half = Polynomial::constant(&r, rat(-1, 2).unwrap());
        assert_eq!((&half * &x).render(), "-1/2*x");
    }

    #[test]
    fn render_multivariate_order() {
        let r = ring(&["x", "y", "z"]);
        let p = Polynomial::from_terms(
            &r,
            [
                (vec![0, 0, 1], Rational::from(-2)),
                (vec![1, 0, 1], Rational::one()),
                (vec![0, 0, 2], Rational::from(-2)),
                (vec![2, 0, 0], Rational::one()),
                (vec![1, 0, 0], Rational::from(-1)),
            ],
        )
        .unwrap();
        assert_eq!(p.render(), "x^2 + x*z - 2*z^2 - x - 2*z");
    }

    #[test]
    fn embed_maps_by_name() {
        let small = ring(&["x", "z"]);
        let big = ring(&["x", "y", "z"]);
        let z = Polynomial::var(&small, "z").unwrap();
        let e = z.embed(&big).unwrap();
        assert_eq!(e, Polynomial::var(&big, "z").unwrap());
        assert!(Polynomial::var(&big, "y").unwrap().embed(&small).is_err());
    }

    #[test]
    fn degree_queries() {
        let r = ring(&["x", "y"]);
        let p = Polynomial::from_terms(&r, [(vec![3, 1], Rational::one()), (vec![0, 2], Rational::one())]).unwrap();
        assert_eq!(p.total_degree(), Some(4));
        assert_eq!(p.degree_in("y").unwrap(), 2);
        assert_eq!(Polynomial::zero(&r).total_degree(), None);
        assert_eq!(p.leading_term().unwrap().0.exponents(), &[3, 1]);
    }

    #[test]
    fn op_counter_nests() {
        let r = ring(&["x"]);
        let x = Polynomial::var(&r, "x").unwrap();
        let ((_, inner), outer) = count_ring_ops(|| {
            let _ = &x + &x;
            count_ring_ops(|| &x * &x)
        });
        assert_eq!(inner, 1);
        assert_eq!(outer, 2);
    }
}
