//! Numerators of rational generating functions over the standard denominator
//! (1-z)(1-qz)...(1-q^d z).

use std::collections::BTreeMap;

use super::poly::{qbinomial, QPoly};

/// The numerator N(q,z) = sum_i a_i(q) z^i of a generating function
/// N(q,z) / ((1-z)(1-qz)...(1-q^d z)).
///
/// For the all-ones linear form the nonzero a_i sit in the range
/// xi <= i <= d, where xi is the chromatic number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZNumerator {
    d: usize,
    coeffs: BTreeMap<usize, QPoly>,
}

impl ZNumerator {
    /// Empty numerator over the denominator of degree-d type.
    pub fn new(d: usize) -> Self {
        ZNumerator {
            d,
            coeffs: BTreeMap::new(),
        }
    }

    /// The implied denominator degree: the denominator is
    /// prod_{i=0}^{d} (1 - q^i z).
    pub fn d(&self) -> usize {
        self.d
    }

    /// Coefficient a_i(q) of z^i (zero if absent).
    pub fn coeff(&self, i: usize) -> QPoly {
        self.coeffs.get(&i).cloned().unwrap_or_else(QPoly::zero)
    }

    /// Add a polynomial to a_i(q).
    pub fn add_to_coeff(&mut self, i: usize, p: &QPoly) {
        let entry = self.coeffs.entry(i).or_insert_with(QPoly::zero);
        *entry = entry.add(p);
        if entry.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    /// Nonzero coefficients in ascending z-exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &QPoly)> {
        self.coeffs.iter().map(|(i, p)| (*i, p))
    }

    /// Indices with nonzero coefficients.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs.keys().copied().collect()
    }
}

/// Coefficients of z^0..z^upto of N(q,z) / prod_{i=0}^{d} (1 - q^i z),
/// using the q-binomial series
///
/// ```text
///     1 / ((1-z)(1-qz)...(1-q^d z)) = sum_{m >= 0} [d+m choose d]_q z^m.
/// ```
pub fn series_coeffs(numerator: &ZNumerator, upto: usize) -> Vec<QPoly> {
    let d = numerator.d() as i64;
    (0..=upto)
        .map(|n| {
            let mut acc = QPoly::zero();
            for (i, a) in numerator.iter() {
                if i > n {
                    break;
                }
                let m = (n - i) as i64;
                acc = acc.add(&a.mul(&qbinomial(d + m, d)));
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_series() {
        // N = q z with d = 1: chi of a single vertex is q + ... + q^n
        let mut num = ZNumerator::new(1);
        num.add_to_coeff(1, &QPoly::term(1, 1));
        let coeffs = series_coeffs(&num, 2);
        assert_eq!(coeffs[0], QPoly::zero());
        assert_eq!(coeffs[1], QPoly::term(1, 1));
        assert_eq!(coeffs[2], QPoly::from_terms(&[(1, 1), (1, 2)]));
    }

    #[test]
    fn edge_series() {
        // N = 2q^3 z^2 with d = 2: two proper 2-colorings of an edge, both
        // with color sum 3
        let mut num = ZNumerator::new(2);
        num.add_to_coeff(2, &QPoly::term(2, 3));
        let coeffs = series_coeffs(&num, 2);
        assert_eq!(
            coeffs,
            vec![QPoly::zero(), QPoly::zero(), QPoly::term(2, 3)]
        );
    }

    #[test]
    fn upto_zero_returns_a0() {
        let mut num = ZNumerator::new(3);
        num.add_to_coeff(0, &QPoly::constant(7));
        num.add_to_coeff(2, &QPoly::term(1, 1));
        assert_eq!(series_coeffs(&num, 0), vec![QPoly::constant(7)]);
    }

    #[test]
    fn matches_naive_long_division() {
        // oracle: expand the denominator prod_{i=0}^{d}(1 - q^i z) as a dense
        // polynomial in z and divide N by it as a truncated power series
        for d in 0..=4usize {
            let mut num = ZNumerator::new(d);
            // an arbitrary numerator with a spread of coefficients
            num.add_to_coeff(0, &QPoly::from_terms(&[(1, 0), (2, 3)]));
            if d >= 1 {
                num.add_to_coeff(1, &QPoly::from_terms(&[(-1, 1), (1, 2)]));
            }
            if d >= 2 {
                num.add_to_coeff(d, &QPoly::term(5, 4));
            }
            let upto = 6;
            let fast = series_coeffs(&num, upto);

            // denominator coefficients in z: D_0 + D_1 z + ... + D_{d+1} z^{d+1}
            let mut den: Vec<QPoly> = vec![QPoly::one()];
            for i in 0..=d {
                let mut next = vec![QPoly::zero(); den.len() + 1];
                for (j, c) in den.iter().enumerate() {
                    next[j] = next[j].add(c);
                    // times (-q^i z)
                    next[j + 1] = next[j + 1].sub(&c.mul(&QPoly::term(1, i as u64)));
                }
                den = next;
            }
            // long division: c_n = N_n - sum_{k=1}^{min(n, deg)} D_k c_{n-k}
            // (D_0 = 1)
            let mut slow: Vec<QPoly> = Vec::new();
            for n in 0..=upto {
                let mut c = num.coeff(n);
                for k in 1..den.len().min(n + 1) {
                    c = c.sub(&den[k].mul(&slow[n - k]));
                }
                slow.push(c);
            }
            assert_eq!(fast, slow, "d = {d}");
        }
    }
}
