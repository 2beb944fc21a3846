//! Sparse polynomials in q with bignum coefficients and exponents.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// A sparse polynomial in q: a map from exponent to nonzero coefficient.
///
/// Terms are stored (and serialized) in ascending exponent order. Zero
/// coefficients are never stored, so structural equality is semantic equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QPoly {
    terms: BTreeMap<BigUint, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    /// The constant polynomial c.
    pub fn constant(c: i64) -> Self {
        QPoly::monomial(BigInt::from(c), BigUint::zero())
    }

    /// The monomial coeff * q^exp.
    pub fn monomial(coeff: BigInt, exp: BigUint) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        QPoly { terms }
    }

    /// Convenience for small monomials: coeff * q^exp.
    pub fn term(coeff: i64, exp: u64) -> Self {
        QPoly::monomial(BigInt::from(coeff), BigUint::from(exp))
    }

    /// Build from (coefficient, exponent) pairs, summing duplicates.
    pub fn from_terms(terms: &[(i64, u64)]) -> Self {
        let mut p = QPoly::zero();
        for &(c, e) in terms {
            p.add_term(BigInt::from(c), BigUint::from(e));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of q^exp (zero if absent).
    pub fn coeff(&self, exp: &BigUint) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<&BigUint> {
        self.terms.keys().next_back()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<&BigUint> {
        self.terms.keys().next()
    }

    /// Coefficient of the highest-degree term.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Terms in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&BigUint, &BigInt)> {
        self.terms.iter()
    }

    /// Add coeff * q^exp in place, dropping the term if it cancels.
    pub fn add_term(&mut self, coeff: BigInt, exp: BigUint) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(c.clone(), e.clone());
        }
        out
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(-c.clone(), e.clone());
        }
        out
    }

    pub fn neg(&self) -> QPoly {
        let mut out = QPoly::zero();
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }

    /// Multiply by the monomial coeff * q^exp.
    pub fn mul_monomial(&self, coeff: &BigInt, exp: &BigUint) -> QPoly {
        let mut out = QPoly::zero();
        if coeff.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            out.terms.insert(e + exp, c * coeff);
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> QPoly {
        self.mul_monomial(k, &BigUint::zero())
    }

    pub fn pow(&self, mut n: u32) -> QPoly {
        let mut result = QPoly::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Substitute q = 1, i.e. sum the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiply by q^delta where delta may be negative; errors if any exponent
    /// would become negative.
    pub fn shifted(&self, delta: &BigInt) -> Result<QPoly, Error> {
        let mut out = QPoly::zero();
        for (e, c) in &self.terms {
            let shifted = BigInt::from(e.clone()) + delta;
            if shifted.is_negative() {
                return Err(Error::NegativeExponent);
            }
            out.terms.insert(shifted.to_biguint().unwrap(), c.clone());
        }
        Ok(out)
    }

    /// True iff the coefficient of q^e equals the coefficient of q^(total - e)
    /// for every exponent e, i.e. q^total * p(1/q) = p(q).
    pub fn is_shifted_palindromic(&self, total: &BigUint) -> bool {
        for (e, c) in &self.terms {
            if e > total {
                return false;
            }
            let mirror = total - e;
            if self.coeff(&mirror) != *c {
                return false;
            }
        }
        true
    }

    /// Greatest common divisor of the coefficients (positive; zero for the
    /// zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::gcd(g, c.clone());
        }
        g
    }
}

/// The q-integer `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q = 0`.
pub fn qint(n: u64) -> QPoly {
    let mut p = QPoly::zero();
    for e in 0..n {
        p.terms.insert(BigUint::from(e), BigInt::one());
    }
    p
}

/// The q-factorial `[d]_q! = [1]_q [2]_q ... [d]_q`; empty product for d = 0.
pub fn qfactorial(d: u64) -> QPoly {
    let mut p = QPoly::one();
    for k in 1..=d {
        p = p.mul(&qint(k));
    }
    p
}

/// The Gaussian binomial coefficient [n choose k]_q, via the q-Pascal
/// recurrence `[n,k] = [n-1,k-1] + q^k [n-1,k]`. Zero when k < 0 or k > n.
pub fn qbinomial(n: i64, k: i64) -> QPoly {
    if k < 0 || k > n {
        return QPoly::zero();
    }
    let (n, k) = (n as u64, k as u64);
    // row-by-row DP over the q-Pascal triangle; row[j] = [m choose j]_q
    let mut row: Vec<QPoly> = vec![QPoly::one()];
    for m in 1..=n {
        let width = m.min(k) as usize;
        let mut next: Vec<QPoly> = Vec::with_capacity(width + 1);
        next.push(QPoly::one());
        for j in 1..=width {
            let mut val = row[j - 1].clone();
            if j < row.len() {
                val = val.add(&row[j].mul_monomial(&BigInt::one(), &BigUint::from(j as u64)));
            }
            next.push(val);
        }
        row = next;
    }
    row.into_iter().nth(k as usize).unwrap_or_else(QPoly::zero)
}

impl fmt::Display for QPoly {
    /// Terms in ascending exponent order, e.g. `2*q^3 + q^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let one_exp = e.is_zero();
            if mag.is_one() && !one_exp {
                // coefficient 1 is implicit
            } else {
                write!(f, "{mag}")?;
                if !one_exp {
                    write!(f, "*")?;
                }
            }
            if !one_exp {
                if e.is_one() {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// JSON shape: {"terms": [["exp", "coeff"], ...]} ascending by exponent, both
/// rendered as decimal strings so bignums survive any JSON parser.
#[derive(Serialize, Deserialize)]
struct QPolyRepr {
    terms: Vec<(String, String)>,
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = QPolyRepr {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.to_string(), c.to_string()))
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = QPolyRepr::deserialize(deserializer)?;
        let mut p = QPoly::zero();
        for (e, c) in repr.terms {
            let exp: BigUint = e.parse().map_err(|_| D::Error::custom("bad exponent"))?;
            let coeff: BigInt = c.parse().map_err(|_| D::Error::custom("bad coefficient"))?;
            p.add_term(coeff, exp);
        }
        Ok(p)
    }
}
