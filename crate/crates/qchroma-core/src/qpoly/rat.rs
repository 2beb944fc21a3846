//! Reduced fractions of integer polynomials in q.
//!
//! Reduction divides out the polynomial gcd (computed with a primitive
//! pseudo-remainder sequence, so everything stays in Z[q]) and the shared
//! integer content, then fixes the sign so the denominator has a positive
//! leading coefficient. The representation is canonical: equal fractions are
//! structurally equal.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::poly::QPoly;
use crate::Error;

/// A reduced fraction num/den of polynomials in q with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    /// Build and reduce num/den. Errors on a zero denominator.
    pub fn new(num: QPoly, den: QPoly) -> Result<QRat, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(QRat {
                num: QPoly::zero(),
                den: QPoly::one(),
            });
        }
        let mut n = to_dense(&num);
        let mut d = to_dense(&den);
        let g = poly_gcd(&n, &d);
        if dense_degree(&g) > 0 || !g[0].is_one() {
            n = exact_div(&n, &g);
            d = exact_div(&d, &g);
        }
        // clear shared integer content
        let c = num_integer::gcd(dense_content(&n), dense_content(&d));
        if !c.is_one() {
            for x in n.iter_mut() {
                *x /= &c;
            }
            for x in d.iter_mut() {
                *x /= &c;
            }
        }
        // positive leading coefficient on the denominator
        if d.last().map(|x| x.is_negative()).unwrap_or(false) {
            for x in n.iter_mut() {
                *x = -std::mem::take(x);
            }
            for x in d.iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        Ok(QRat {
            num: from_dense(n),
            den: from_dense(d),
        })
    }

    pub fn zero() -> QRat {
        QRat {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> QRat {
        QRat {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    pub fn from_poly(p: QPoly) -> QRat {
        QRat {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True iff the denominator is 1, i.e. the fraction is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.den == QPoly::one()
    }

    pub fn add(&self, other: &QRat) -> QRat {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        QRat::new(num, den).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &QRat) -> QRat {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QRat {
        QRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &QRat) -> QRat {
        QRat::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero denominators")
    }

    pub fn div(&self, other: &QRat) -> Result<QRat, Error> {
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        QRat::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn mul_poly(&self, p: &QPoly) -> QRat {
        QRat::new(self.num.mul(p), self.den.clone()).expect("nonzero denominator")
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

// ---- Dense helpers over Z[q] ----
//
// QRat denominators come from q-factorials and products of q-integer
// differences, so their degrees are small; dense vectors keep the gcd simple.

fn to_dense(p: &QPoly) -> Vec<BigInt> {
    let deg = p
        .degree()
        .map(|d| {
            d.to_usize()
                .expect("QRat arithmetic requires machine-size degrees")
        })
        .unwrap_or(0);
    let mut out = vec![BigInt::zero(); deg + 1];
    for (e, c) in p.iter() {
        out[e.to_usize().unwrap()] = c.clone();
    }
    out
}

fn from_dense(v: Vec<BigInt>) -> QPoly {
    let mut p = QPoly::zero();
    for (e, c) in v.into_iter().enumerate() {
        p.add_term(c, BigUint::from(e));
    }
    p
}

fn dense_trim(v: &mut Vec<BigInt>) {
    while v.len() > 1 && v.last().map(|x| x.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

fn dense_degree(v: &[BigInt]) -> usize {
    v.len() - 1
}

fn dense_is_zero(v: &[BigInt]) -> bool {
    v.iter().all(|x| x.is_zero())
}

fn dense_content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in v {
        g = num_integer::gcd(g, x.clone());
    }
    g
}

fn make_primitive(v: &mut Vec<BigInt>) {
    dense_trim(v);
    let c = dense_content(v);
    if c.is_zero() || c.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x /= &c;
    }
}

/// Pseudo-remainder of a by b: the remainder of lc(b)^(deg a - deg b + 1) * a
/// divided by b, computed fraction-free.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = dense_degree(b);
    let lb = b.last().unwrap().clone();
    while !dense_is_zero(&r) && dense_degree(&r) >= db {
        let dr = dense_degree(&r);
        let lr = r.last().unwrap().clone();
        // r <- lb*r - lr*q^(dr-db)*b
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bc;
        }
        dense_trim(&mut r);
        if dense_is_zero(&r) {
            break;
        }
    }
    r
}

/// Primitive gcd in Z[q] with a positive leading coefficient.
fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    make_primitive(&mut a);
    make_primitive(&mut b);
    if dense_is_zero(&a) {
        return b;
    }
    if dense_is_zero(&b) {
        return a;
    }
    if dense_degree(&a) < dense_degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    while !dense_is_zero(&b) {
        let mut r = pseudo_rem(&a, &b);
        make_primitive(&mut r);
        a = b;
        b = r;
    }
    if a.last().map(|x| x.is_negative()).unwrap_or(false) {
        for x in a.iter_mut() {
            *x = -std::mem::take(x);
        }
    }
    a
}

/// Exact division a/b in Z[q]; panics if the division is not exact
/// (callers only divide by a gcd).
fn exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if dense_is_zero(a) {
        return vec![BigInt::zero()];
    }
    let da = dense_degree(a);
    let db = dense_degree(b);
    assert!(da >= db, "exact_div: degree underflow");
    let lb = b.last().unwrap();
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let lead = rem[db + k].clone();
        if lead.is_zero() {
            continue;
        }
        let (q, r) = num_integer::div_rem(lead, lb.clone());
        assert!(r.is_zero(), "exact_div: inexact division");
        for (i, bc) in b.iter().enumerate() {
            rem[k + i] -= &q * bc;
        }
        quot[k] = q;
    }
    assert!(dense_is_zero(&rem), "exact_div: nonzero remainder");
    dense_trim(&mut quot);
    quot
}
