//! Bit-packed Steinhaus matrices.
//!
//! All public indices are 1-based, `1 <= i, j <= n`. Row `i` of the upper
//! triangle is stored as an `n`-bit vector whose bit `j - 1` is `a_{i,j}` for
//! `j > i`; every other bit is zero. Lower-triangle and diagonal reads are
//! synthesized from symmetry and the zero diagonal.

use std::fmt;

use crate::binomial::odd_binomial_indices;
use crate::bits::BitVec;
use crate::degrees::DegreeVector;
use crate::error::{Error, Result};
use crate::sequence::BinarySequence;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SteinhausMatrix {
    n: usize,
    rows: Vec<BitVec>,
}

/// Which boundary line a closed-form entry evaluation reads from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// `a_{i,j} = sum_k C(i-1, k) a_{1, j-k}`
    FirstRow,
    /// `a_{i,j} = sum_k C(n-j, k) a_{i+k, n}`
    LastColumn,
    /// `a_{i,j} = sum_k C(j-i-1, k) a_{i+k, i+k+1}`
    OverDiagonal,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 3] = [
        ClosedForm::FirstRow,
        ClosedForm::LastColumn,
        ClosedForm::OverDiagonal,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vertex {
    First,
    Last,
}

impl SteinhausMatrix {
    /// The unique Steinhaus matrix of size `seq.len() + 1` with first row `seq`.
    pub fn from_sequence(seq: &BinarySequence) -> Self {
        let n = seq.matrix_size();
        let mut rows = Vec::with_capacity(n);
        let mut row = BitVec::zeros(n);
        for (k, b) in seq.iter().enumerate() {
            row.set(k + 1, b);
        }
        rows.push(row.clone());
        for i in 1..n {
            // a_{i+1,j} = a_{i,j-1} + a_{i,j}; the shifted row picks up a bit
            // on the new diagonal (column i) that must be cleared.
            row.xor_shifted_up();
            row.set(i, false);
            rows.push(row.clone());
        }
        SteinhausMatrix { n, rows }
    }

    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "matrix size must be at least 1");
        Self::from_sequence(&BinarySequence::zeros(n - 1))
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    /// The generating sequence `(a_{1,2}, ..., a_{1,n})`.
    pub fn sequence(&self) -> BinarySequence {
        BinarySequence::from_bits(self.rows[0].slice(1, self.n - 1))
    }

    /// `a_{i,j}` without range checks beyond debug assertions.
    #[inline]
    pub fn at(&self, i: usize, j: usize) -> bool {
        debug_assert!(i >= 1 && j >= 1 && i <= self.n && j <= self.n);
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.rows[i - 1].get(j - 1),
            std::cmp::Ordering::Greater => self.rows[j - 1].get(i - 1),
            std::cmp::Ordering::Equal => false,
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Result<bool> {
        self.check_index(i, j)?;
        Ok(self.at(i, j))
    }

    fn check_index(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::IndexOutOfRange { i, j, n: self.n });
        }
        Ok(())
    }

    /// Upper-triangle row `i` as stored: bit `j - 1` is `a_{i,j}` for `j > i`.
    pub fn upper_row(&self, i: usize) -> &BitVec {
        &self.rows[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVec::is_zero)
    }

    /// Entries `a_{1,n}, a_{2,n}, ..., a_{n-1,n}`.
    pub fn last_column(&self) -> BinarySequence {
        let n = self.n;
        BinarySequence::from_bits(BitVec::from_bools((1..n).map(|r| self.at(r, n))))
    }

    /// Entries `a_{1,2}, a_{2,3}, ..., a_{n-1,n}`.
    pub fn over_diagonal(&self) -> BinarySequence {
        BinarySequence::from_bits(BitVec::from_bools((1..self.n).map(|r| self.at(r, r + 1))))
    }

    /// Full scan of `a_{i,j} = a_{i-1,j-1} + a_{i-1,j}` over `2 <= i < j <= n`.
    pub fn satisfies_recurrence(&self) -> bool {
        (2..=self.n).all(|i| {
            (i + 1..=self.n).all(|j| self.at(i, j) == self.at(i - 1, j - 1) ^ self.at(i - 1, j))
        })
    }

    /// `a_{i,j}` for `i < j`, evaluated from a single boundary line of the
    /// matrix with Lucas-theorem binomials instead of the stored triangle.
    pub fn entry_closed_form(&self, i: usize, j: usize, form: ClosedForm) -> Result<bool> {
        self.check_index(i, j)?;
        if i >= j {
            return Err(Error::IndexOutOfRange { i, j, n: self.n });
        }
        Ok(match form {
            ClosedForm::FirstRow => closed_form::from_first_row(&self.sequence(), i, j),
            ClosedForm::LastColumn => closed_form::from_last_column(&self.last_column(), i, j),
            ClosedForm::OverDiagonal => {
                closed_form::from_over_diagonal(&self.over_diagonal(), i, j)
            }
        })
    }

    /// Integer vertex degrees (row sums of the full symmetric matrix).
    pub fn degrees(&self) -> DegreeVector {
        let mut degs = vec![0usize; self.n];
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.iter_ones() {
                degs[r] += 1;
                degs[c] += 1;
            }
        }
        DegreeVector::from_graph(degs)
    }

    /// The triple `(a_{i,n-i+1}, sum_k C(i-1,k) deg(V_{i+k+1}), sum_k C(i-1,k)
    /// deg(V_{n-i-k}))` reduced mod 2. The three bits agree on every
    /// Steinhaus matrix.
    pub fn antidiagonal_degree_identity(&self, i: usize) -> Result<(bool, bool, bool)> {
        let n = self.n;
        if n < 2 {
            return Err(Error::SizeTooSmall { n, min: 2 });
        }
        if i == 0 || i > n / 2 {
            return Err(Error::IndexOutOfRange { i, j: n - i + 1, n });
        }
        let degs = self.degrees();
        let (forward, backward) = crate::degrees::antidiagonal_sums(degs.as_slice(), i);
        Ok((self.at(i, n - i + 1), forward, backward))
    }

    /// The size-`(n-3)` Steinhaus matrix `b_{i,j} = a_{i+1,j+2}` sitting inside
    /// the triangle: its first row is `a_{2,4}, ..., a_{2,n-1}`.
    pub fn truncate_t(&self) -> Result<Self> {
        let n = self.n;
        if n < 4 {
            return Err(Error::SizeTooSmall { n, min: 4 });
        }
        let seq = BitVec::from_bools((4..n).map(|j| self.at(2, j)));
        Ok(Self::from_sequence(&BinarySequence::from_bits(seq)))
    }

    /// The unique size-`(m+3)` matrix `M` with `M.truncate_t() == inner`,
    /// `a_{1,2} = a12`, `a_{1,j0} = a1j0` and `a_{1,n} = a1n`.
    pub fn extend_t(inner: &Self, a12: bool, j0: usize, a1j0: bool, a1n: bool) -> Result<Self> {
        let n = inner.n + 3;
        if !(3..n).contains(&j0) {
            return Err(Error::ColumnOutOfRange { j0, max: n - 1 });
        }
        // b_{1,k} for 2 <= k <= n-3; entry k - 2 of the inner sequence.
        let b = inner.sequence();
        let b1 = |k: usize| b.get(k - 1);
        let mut first = vec![false; n + 1];
        first[2] = a12;
        first[j0] = a1j0;
        first[n] = a1n;
        // a_{1,j} = a_{1,j0} + sum of b_{1,k} between j and j0.
        let mut acc = a1j0;
        for j in (3..j0).rev() {
            acc ^= b1(j - 1);
            first[j] = acc;
        }
        let mut acc = a1j0;
        for j in j0 + 1..n {
            acc ^= b1(j - 2);
            first[j] = acc;
        }
        let seq = BinarySequence::from_bits(BitVec::from_bools(first[2..=n].iter().copied()));
        Ok(Self::from_sequence(&seq))
    }

    /// Removes vertex `V_1` or `V_n`.
    pub fn delete_vertex(&self, which: Vertex) -> Result<Self> {
        let n = self.n;
        if n < 2 {
            return Err(Error::SizeTooSmall { n, min: 2 });
        }
        let seq = match which {
            Vertex::First => BinarySequence::from_bits(self.rows[1].slice(2, n - 2)),
            Vertex::Last => self.sequence().without_last(),
        };
        Ok(Self::from_sequence(&seq))
    }

    /// The submatrix `(a_{i,j})_{2 <= i,j <= n-1}`.
    pub fn interior(&self) -> Result<Self> {
        if self.n < 3 {
            return Err(Error::SizeTooSmall { n: self.n, min: 3 });
        }
        self.delete_vertex(Vertex::First)?
            .delete_vertex(Vertex::Last)
    }

    /// `n` lines of `n` characters.
    pub fn to_grid_string(&self) -> String {
        let mut out = String::with_capacity(self.n * (self.n + 1));
        for i in 1..=self.n {
            out.extend((1..=self.n).map(|j| if self.at(i, j) { '1' } else { '0' }));
            out.push('\n');
        }
        out
    }

    /// Upper rows only, left-aligned: line `i` holds `a_{i,i+1}, ..., a_{i,n}`.
    pub fn to_triangle_string(&self) -> String {
        let mut out = String::new();
        for i in 1..self.n {
            out.extend((i + 1..=self.n).map(|j| if self.at(i, j) { '1' } else { '0' }));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SteinhausMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grid_string())
    }
}

impl fmt::Debug for SteinhausMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SteinhausMatrix(n={}, s={})", self.n, self.sequence())
    }
}

/// Entry evaluation from boundary lines alone.
///
/// Each function takes the boundary as a 1-based line: element `r` of
/// `first_row` is `a_{1,r+1}`, of `last_column` is `a_{r,n}`, of
/// `over_diagonal` is `a_{r,r+1}`. Requires `1 <= i < j <= n` where
/// `n = line.len() + 1`.
pub mod closed_form {
    use super::*;

    pub fn from_first_row(first_row: &BinarySequence, i: usize, j: usize) -> bool {
        debug_assert!(1 <= i && i < j && j <= first_row.len() + 1);
        odd_binomial_indices(i - 1).fold(false, |acc, k| acc ^ first_row.get(j - k - 1))
    }

    pub fn from_last_column(last_column: &BinarySequence, i: usize, j: usize) -> bool {
        let n = last_column.len() + 1;
        debug_assert!(1 <= i && i < j && j <= n);
        odd_binomial_indices(n - j).fold(false, |acc, k| acc ^ last_column.get(i + k))
    }

    pub fn from_over_diagonal(over_diagonal: &BinarySequence, i: usize, j: usize) -> bool {
        debug_assert!(1 <= i && i < j && j <= over_diagonal.len() + 1);
        odd_binomial_indices(j - i - 1).fold(false, |acc, k| acc ^ over_diagonal.get(i + k))
    }
}
