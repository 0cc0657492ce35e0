//! Doubly-symmetric and multi-symmetric Steinhaus matrices.
//!
//! A matrix is *doubly-symmetric* when it is also symmetric about the
//! anti-diagonal, `a_{i,j} = a_{n-j+1,n-i+1}`, and *multi-symmetric* when in
//! addition every row of its upper triangle is a palindrome,
//! `a_{i,j} = a_{i,n-j+i+1}`.

mod parametrize;

pub use parametrize::{
    enumerate_ms, ms_count, ms_dimension, ms_from_parameters, ms_parameter_positions,
    MsParametrization, DEFAULT_ENUMERATION_CAP,
};

use crate::error::{Error, Result};
use crate::matrix::SteinhausMatrix;
use crate::sequence::is_palindrome;

pub fn is_doubly_symmetric(m: &SteinhausMatrix) -> bool {
    let n = m.size();
    (1..n).all(|i| (i + 1..=n).all(|j| m.at(i, j) == m.at(n - j + 1, n - i + 1)))
}

fn rows_palindromic(m: &SteinhausMatrix) -> bool {
    let n = m.size();
    (1..n).all(|i| (i + 1..=n).all(|j| m.at(i, j) == m.at(i, n - j + i + 1)))
}

pub fn is_multi_symmetric(m: &SteinhausMatrix) -> bool {
    is_doubly_symmetric(m) && rows_palindromic(m)
}

fn require_size(m: &SteinhausMatrix, min: usize) -> Result<()> {
    if m.size() < min {
        return Err(Error::SizeTooSmall { n: m.size(), min });
    }
    Ok(())
}

/// Three equivalent conditions for double symmetry, evaluated independently:
/// (i) full anti-diagonal symmetry, (ii) the over-diagonal is a palindrome,
/// (iii) `a_{i,n-i+1} = 0` for `1 <= i <= (n-1)/2`.
pub fn doubly_symmetric_characterizations(m: &SteinhausMatrix) -> Result<(bool, bool, bool)> {
    require_size(m, 3)?;
    let n = m.size();
    let full = is_doubly_symmetric(m);
    let over = m.over_diagonal().is_palindrome();
    let anti = (1..=(n - 1) / 2).all(|i| !m.at(i, n - i + 1));
    Ok((full, over, anti))
}

/// Three equivalent conditions for multi-symmetry:
/// (i) the definition, (ii) first row, last column and over-diagonal are
/// palindromes, (iii) `a_{i,n-i+1}`, `a_{n-2i+1,n-i+1}` and `a_{i,2i}` vanish
/// for `1 <= i <= (n-1)/2`.
pub fn multi_symmetric_characterizations(m: &SteinhausMatrix) -> Result<(bool, bool, bool)> {
    require_size(m, 3)?;
    let n = m.size();
    let def = is_multi_symmetric(m);
    let lines = m.sequence().is_palindrome()
        && m.last_column().is_palindrome()
        && m.over_diagonal().is_palindrome();
    let vanish = (1..=(n - 1) / 2)
        .all(|i| !m.at(i, n - i + 1) && !m.at(n - 2 * i + 1, n - i + 1) && !m.at(i, 2 * i));
    Ok((def, lines, vanish))
}

/// Columns of the upper triangle of a multi-symmetric matrix are palindromes:
/// `a_{i,j} = a_{j-i,j}`.
pub fn column_symmetry_holds(m: &SteinhausMatrix) -> Result<bool> {
    if !is_multi_symmetric(m) {
        return Err(Error::NotMultiSymmetric { n: m.size() });
    }
    let n = m.size();
    Ok((2..=n).all(|j| is_palindrome(j - 1, |k| m.at(k + 1, j))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::BinarySequence;

    fn m(bits: &[u8]) -> SteinhausMatrix {
        SteinhausMatrix::from_sequence(&BinarySequence::from_slice(bits))
    }

    #[test]
    fn predicates_on_examples() {
        for n in 1..8 {
            let z = SteinhausMatrix::zero(n);
            assert!(is_doubly_symmetric(&z) && is_multi_symmetric(&z));
            assert_eq!(column_symmetry_holds(&z), Ok(true));
        }
        let a = m(&[1, 1, 0, 0]);
        assert!(!is_doubly_symmetric(&a));
        assert!(!is_multi_symmetric(&a));
        let b = m(&[0, 1, 1, 1, 0]);
        assert!(is_doubly_symmetric(&b));
        assert!(is_multi_symmetric(&b));
        assert_eq!(column_symmetry_holds(&b), Ok(true));
        assert!(matches!(
            column_symmetry_holds(&a),
            Err(Error::NotMultiSymmetric { n: 5 })
        ));
    }

    #[test]
    fn characterizations_on_examples() {
        let z = SteinhausMatrix::zero(7);
        assert_eq!(
            doubly_symmetric_characterizations(&z),
            Ok((true, true, true))
        );
        assert_eq!(
            multi_symmetric_characterizations(&z),
            Ok((true, true, true))
        );
        let a = m(&[1, 1, 0, 0]);
        assert_eq!(
            doubly_symmetric_characterizations(&a),
            Ok((false, false, false))
        );
        let b = m(&[0, 1, 1, 1, 0]);
        assert_eq!(
            multi_symmetric_characterizations(&b),
            Ok((true, true, true))
        );
        assert!(matches!(
            doubly_symmetric_characterizations(&m(&[1])),
            Err(Error::SizeTooSmall { n: 2, min: 3 })
        ));
        assert!(multi_symmetric_characterizations(&m(&[])).is_err());
    }
}
