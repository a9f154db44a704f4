//! The determinant `Delta_mu = det(x_i^{p_j} y_i^{q_j})`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::Result;
use crate::partition::Partition;
use crate::poly::{Monomial, Polynomial};

#[derive(Debug, Clone)]
pub struct DeltaPolynomial {
    pub value: Polynomial,
    pub mu: Partition,
    /// `(n(mu), n(mu'))`.
    pub bidegree: (usize, usize),
}

impl DeltaPolynomial {
    pub fn n(&self) -> usize {
        self.mu.n()
    }

    /// `op(d) Delta_mu`.
    pub fn derive(&self, op: &Monomial) -> Polynomial {
        self.value.apply_diff(op)
    }
}

/// Expands the determinant over all `n!` permutations. Rows are variable
/// indices, columns the biexponents in lexicographic order; the identity
/// permutation has sign `+1`.
pub fn build_delta(mu: &Partition, limit: usize) -> Result<DeltaPolynomial> {
    let n = mu.n();
    crate::check_size(n, limit)?;
    let be = mu.biexponents();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut acc: HashMap<Monomial, i64> = HashMap::new();

    let mut emit = |perm: &[usize], sign: i64| {
        let mut m = Monomial::one(n);
        for (i, &j) in perm.iter().enumerate() {
            m.x_mut()[i] = be[j].p as u8;
            m.y_mut()[i] = be[j].q as u8;
        }
        *acc.entry(m).or_insert(0) += sign;
    };

    // Heap's algorithm; every swap flips the sign.
    let mut c = vec![0usize; n];
    let mut sign = 1i64;
    emit(&perm, sign);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            emit(&perm, sign);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }

    let value = Polynomial::from_terms(n, acc.into_iter().map(|(m, c)| (m, BigInt::from(c))));
    Ok(DeltaPolynomial {
        value,
        bidegree: (mu.n_stat(), mu.conjugate().n_stat()),
        mu: mu.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_with_n;
    use crate::Error;

    fn delta(s: &str) -> DeltaPolynomial {
        build_delta(&s.parse().unwrap(), 9).unwrap()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(delta("1,1").value, parse_with_n("x2 - x1", 2).unwrap());
        assert_eq!(delta("2").value, parse_with_n("y2 - y1", 2).unwrap());
        assert_eq!(
            delta("2,1").value,
            parse_with_n("y2*x3 - y3*x2 - y1*x3 + y3*x1 + y1*x2 - y2*x1", 3).unwrap()
        );
        assert_eq!(delta("1").value, Polynomial::one(1));
    }

    #[test]
    fn size_limit() {
        assert_eq!(
            build_delta(&"2,2,1".parse().unwrap(), 4).unwrap_err(),
            Error::SizeLimit { n: 5, limit: 4 }
        );
    }

    #[test]
    fn bihomogeneous_with_bounded_exponents() {
        for n in 1..=6 {
            for mu in Partition::all(n) {
                let d = build_delta(&mu, 9).unwrap();
                let max_p = mu.len() as u8 - 1;
                let max_q = mu.parts()[0] as u8 - 1;
                assert_eq!(d.value.len(), (1..=n).product::<usize>());
                for (m, c) in d.value.terms() {
                    assert_eq!(m.bidegree(), d.bidegree);
                    assert!(m.x().iter().all(|&e| e <= max_p));
                    assert!(m.y().iter().all(|&e| e <= max_q));
                    assert!(c == &BigInt::from(1) || c == &BigInt::from(-1));
                }
            }
        }
    }

    fn swap_vars(p: &Polynomial, i: usize, j: usize) -> Polynomial {
        Polynomial::from_terms(
            p.n(),
            p.terms().map(|(m, c)| {
                let mut m = m.clone();
                m.x_mut().swap(i, j);
                m.y_mut().swap(i, j);
                (m, c.clone())
            }),
        )
    }

    #[test]
    fn antisymmetric_under_transpositions() {
        for n in 2..=6 {
            for mu in Partition::all(n) {
                let d = build_delta(&mu, 9).unwrap().value;
                for i in 0..n {
                    for j in i + 1..n {
                        assert_eq!(swap_vars(&d, i, j), -&d);
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_exchanges_alphabets() {
        for n in 1..=6 {
            for mu in Partition::all(n) {
                let d = build_delta(&mu, 9).unwrap().value;
                let dc = build_delta(&mu.conjugate(), 9).unwrap().value;
                let swapped = Polynomial::from_terms(
                    n,
                    d.terms().map(|(m, c)| (Monomial::new(m.y(), m.x()), c.clone())),
                );
                assert!(swapped == dc || swapped == -&dc, "{}", mu);
            }
        }
    }
}
