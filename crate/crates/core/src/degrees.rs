//! Vertex degrees and the parity conditions they must satisfy.

use crate::binomial::odd_binomial_indices;
use crate::error::{Error, Result};

/// Degrees `deg(V_1), ..., deg(V_n)`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeVector {
    degs: Vec<usize>,
}

impl DegreeVector {
    /// Validates the degree bounds and the handshake parity.
    pub fn new(degs: Vec<usize>) -> Result<Self> {
        let n = degs.len();
        if let Some(&d) = degs.iter().find(|&&d| d >= n.max(1)) {
            return Err(Error::Internal(format!(
                "degree {d} impossible on {n} vertices"
            )));
        }
        if degs.iter().sum::<usize>() % 2 != 0 {
            return Err(Error::Internal("degree sum is odd".into()));
        }
        Ok(DegreeVector { degs })
    }

    pub(crate) fn from_graph(degs: Vec<usize>) -> Self {
        debug_assert!(degs.iter().sum::<usize>() % 2 == 0);
        DegreeVector { degs }
    }

    pub fn len(&self) -> usize {
        self.degs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degs.is_empty()
    }

    /// `deg(V_i)`, 1-based.
    pub fn get(&self, i: usize) -> usize {
        self.degs[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.degs
    }

    pub fn residues(&self, modulus: usize) -> Vec<usize> {
        self.degs.iter().map(|d| d % modulus).collect()
    }

    pub fn is_regular(&self) -> bool {
        self.degs.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_regular_mod(&self, modulus: usize) -> bool {
        self.degs
            .windows(2)
            .all(|w| w[0] % modulus == w[1] % modulus)
    }

    pub fn all_even(&self) -> bool {
        self.degs.iter().all(|d| d % 2 == 0)
    }
}

/// The two parities `sum_k C(i-1,k) deg(V_{i+k+1})` and
/// `sum_k C(i-1,k) deg(V_{n-i-k})` for `1 <= i <= n/2`.
pub(crate) fn antidiagonal_sums(degs: &[usize], i: usize) -> (bool, bool) {
    let n = degs.len();
    debug_assert!(i >= 1 && 2 * i <= n);
    let deg = |v: usize| degs[v - 1] % 2 == 1;
    odd_binomial_indices(i - 1).fold((false, false), |(f, b), k| {
        (f ^ deg(i + k + 1), b ^ deg(n - i - k))
    })
}

/// True when the `floor(n/2)` parity congruences linking a degree sequence to
/// its mirror hold. Every Steinhaus graph passes; a labelled graph that fails
/// cannot be a Steinhaus graph. Vacuously true for `n < 2`.
pub fn degree_consistency(degs: &[usize]) -> bool {
    (1..=degs.len() / 2).all(|i| {
        let (f, b) = antidiagonal_sums(degs, i);
        f == b
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn consistency_examples() {
        assert!(degree_consistency(&[2, 2, 3, 2, 1]));
        // i = 1 compares V_2 with V_3 (both 0); i = 2 compares V_3 + V_4 with
        // V_2 + V_1, which differ.
        assert!(!degree_consistency(&[1, 0, 0, 0]));
        assert!(degree_consistency(&[]));
        assert!(degree_consistency(&[0]));
    }

    #[test]
    fn validation() {
        assert!(DegreeVector::new(vec![2, 2, 3, 2, 1]).is_ok());
        assert!(DegreeVector::new(vec![1, 0, 0, 0]).is_err());
        assert!(DegreeVector::new(vec![4, 0, 0, 0]).is_err());
        assert!(DegreeVector::new(vec![0]).is_ok());
    }

    #[test]
    fn regularity_predicates() {
        let d = DegreeVector::new(vec![3, 2, 4, 4, 2, 3]).unwrap();
        assert!(!d.is_regular());
        assert!(!d.is_regular_mod(4));
        assert_eq!(d.residues(4), vec![3, 2, 0, 0, 2, 3]);
        let d = DegreeVector::new(vec![2, 2, 2, 2]).unwrap();
        assert!(d.is_regular() && d.all_even());
    }
}
