//! Integer partitions, biexponents and the statistics derived from them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonempty, weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Deserialize)]
struct RawPartition {
    parts: Vec<usize>,
}

impl TryFrom<RawPartition> for Partition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        Partition::new(raw.parts)
    }
}

/// Cell coordinates shifted to exponents: `p` is the row (x-exponent),
/// `q` the position in the row (y-exponent).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Biexponent {
    pub p: usize,
    pub q: usize,
}

/// Arm and leg of a hook `(k+1, 1^l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HookParams {
    pub k: usize,
    pub l: usize,
}

impl HookParams {
    pub fn new(k: usize, l: usize) -> Self {
        HookParams { k, l }
    }

    pub fn n(&self) -> usize {
        self.k + self.l + 1
    }

    pub fn partition(&self) -> Partition {
        let mut parts = vec![self.k + 1];
        parts.extend(std::iter::repeat_n(1, self.l));
        Partition { parts }
    }

    /// All hooks of size `n`, ordered by increasing `k`.
    pub fn all(n: usize) -> impl Iterator<Item = HookParams> {
        (0..n).map(move |k| HookParams::new(k, n - 1 - k))
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {:?}",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (0..self.parts[0])
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// All `(i-1, j-1)` over cells `(i, j)`, in lexicographic order.
    pub fn biexponents(&self) -> Vec<Biexponent> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(p, &len)| (0..len).map(move |q| Biexponent { p, q }))
            .collect()
    }

    /// `n(mu) = sum (i-1) mu_i`, the x-degree of `Delta_mu`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn hook_params(&self) -> Result<HookParams> {
        if self.parts.len() > 1 && self.parts[1] >= 2 {
            return Err(Error::NotAHook(self.to_string()));
        }
        Ok(HookParams {
            k: self.parts[0] - 1,
            l: self.parts.len() - 1,
        })
    }

    pub fn is_hook(&self) -> bool {
        self.hook_params().is_ok()
    }

    /// `mu'!`, the product of the factorials of the conjugate's parts.
    pub fn conjugate_factorial(&self) -> BigUint {
        self.conjugate()
            .parts
            .iter()
            .map(|&c| factorial(c))
            .product()
    }

    /// Expected `dim M_mu^0 = n! / mu'!`.
    pub fn zero_x_degree_dimension(&self) -> BigUint {
        factorial(self.n()) / self.conjugate_factorial()
    }

    /// The corners of the diagram as `(row, column)` of the removable cell,
    /// 0-based, ordered from the top row down.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        let k = self.parts.len();
        (0..k)
            .filter(|&i| i + 1 == k || self.parts[i + 1] < self.parts[i])
            .map(|i| (i, self.parts[i] - 1))
            .rev()
            .collect()
    }

    /// The partition with the cell in row `row` removed, or `None` when the
    /// result would be empty.
    pub fn remove_corner(&self, row: usize) -> Option<Partition> {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        if parts.is_empty() {
            None
        } else {
            Some(Partition { parts })
        }
    }

    /// Every partition of `n` in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        let parts = cleaned
            .split(',')
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {:?}", t)))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("1,1,1,1").conjugate(), p("4"));
        assert_eq!(p("2,2").conjugate(), p("2,2"));
        for n in 1..=8 {
            for mu in Partition::all(n) {
                assert_eq!(mu.conjugate().conjugate(), mu);
            }
        }
    }

    #[test]
    fn biexponent_lists() {
        let be = |s: &str| -> Vec<(usize, usize)> {
            p(s).biexponents().iter().map(|b| (b.p, b.q)).collect()
        };
        assert_eq!(be("2,1"), vec![(0, 0), (0, 1), (1, 0)]);
        assert_eq!(be("1"), vec![(0, 0)]);
        assert_eq!(be("2,2"), vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        for n in 1..=8 {
            for mu in Partition::all(n) {
                let b = mu.biexponents();
                assert_eq!(b.len(), n);
                assert!(b.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn n_statistic() {
        assert_eq!(p("2,1").n_stat(), 1);
        assert_eq!(p("1,1,1,1").n_stat(), 6);
        for k in 0..5 {
            for l in 0..5 {
                assert_eq!(HookParams::new(k, l).partition().n_stat(), l * (l + 1) / 2);
            }
        }
    }

    #[test]
    fn hooks() {
        assert_eq!(p("3,1,1").hook_params().unwrap(), HookParams::new(2, 2));
        assert_eq!(p("1").hook_params().unwrap(), HookParams::new(0, 0));
        assert!(matches!(p("2,2").hook_params(), Err(Error::NotAHook(_))));
        for n in 1..=8 {
            for mu in Partition::all(n) {
                let big = mu.parts().iter().filter(|&&x| x >= 2).count();
                assert_eq!(mu.is_hook(), big <= 1);
            }
        }
    }

    #[test]
    fn conjugate_factorials() {
        assert_eq!(p("2,1").conjugate_factorial(), BigUint::from(2u32));
        assert_eq!(p("2,2").conjugate_factorial(), BigUint::from(4u32));
        assert_eq!(p("5").conjugate_factorial(), BigUint::from(1u32));
    }

    #[test]
    fn parsing_and_json() {
        assert_eq!(p(" 3, 2 ,1 ").parts(), &[3, 2, 1]);
        assert!("".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        let json = serde_json::to_string(&p("3,2,1")).unwrap();
        assert_eq!(json, r#"{"parts":[3,2,1]}"#);
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p("3,2,1"));
        assert!(serde_json::from_str::<Partition>(r#"{"parts":[]}"#).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn corners_of_21() {
        let mu = p("2,1");
        assert_eq!(mu.corners(), vec![(1, 0), (0, 1)]);
        assert_eq!(mu.remove_corner(1).unwrap(), p("2"));
        assert_eq!(mu.remove_corner(0).unwrap(), p("1,1"));
        assert_eq!(p("1").remove_corner(0), None);
    }
}
