//! Free parameters of multi-symmetric Steinhaus matrices.
//!
//! A size-`n` Steinhaus matrix is multi-symmetric exactly when the entries
//! `a_{i,n-i+1}`, `a_{n-2i+1,n-i+1}` and `a_{i,2i}` vanish for
//! `1 <= i <= (n-1)/2`. Those conditions are linear in the first row, so the
//! multi-symmetric matrices form a subspace of dimension `ceil(n/6)` (even
//! `n`) or `ceil((n-3)/6)` (odd `n`), coordinatized by the entries at
//! [`ms_parameter_positions`].

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::gf2::{eliminate, LinearForm, LinearSystem, SymbolicMatrix};
use crate::matrix::SteinhausMatrix;

/// Enumeration refuses more than `2^24` matrices unless told otherwise.
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Number of free parameters of a multi-symmetric matrix of size `n`.
pub fn ms_dimension(n: usize) -> usize {
    assert!(n >= 1);
    let n = n as i64;
    let d = if n % 2 == 0 {
        ceil_div(n, 6)
    } else {
        ceil_div(n - 3, 6)
    };
    d.max(0) as usize
}

/// `MS(n)`, or `None` when it does not fit in a `u128`.
pub fn ms_count(n: usize) -> Option<u128> {
    1u128.checked_shl(ms_dimension(n) as u32)
}

/// Canonical parameter entries `(row, col)`, 1-based.
///
/// Even `n`: `(1, n/2+1)` followed by `(2i, 4i+1)` for `1 <= i < ceil(n/6)`.
/// Odd `n`: `(2i+1, (n+1)/2+i)` for `0 <= i < ceil((n-3)/6)`.
pub fn ms_parameter_positions(n: usize) -> Vec<(usize, usize)> {
    let d = ms_dimension(n);
    if n.is_multiple_of(2) {
        std::iter::once((1, n / 2 + 1))
            .chain((1..d).map(|i| (2 * i, 4 * i + 1)))
            .collect()
    } else {
        (0..d).map(|i| (2 * i + 1, n.div_ceil(2) + i)).collect()
    }
}

/// The vanishing entries that characterize multi-symmetry, deduplicated.
pub(crate) fn vanishing_entries(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n.saturating_sub(1) / 2 {
        out.push((i, n - i + 1));
        out.push((n - 2 * i + 1, n - i + 1));
        out.push((i, 2 * i));
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Linear bijection between parameter vectors and the first rows of
/// multi-symmetric matrices of one size.
#[derive(Debug, Clone)]
pub struct MsParametrization {
    n: usize,
    positions: Vec<(usize, usize)>,
    /// `images[k]`: first row (as `n - 1` bits) of the matrix with only
    /// parameter `k` set.
    images: Vec<BitVec>,
    symbolic: SymbolicMatrix,
}

impl MsParametrization {
    /// Solves the vanishing conditions together with "entry at position `k`
    /// equals parameter `k`" in one elimination. Variables are the `n - 1`
    /// first-row bits followed by the `d` parameters; pivoting on the lowest
    /// index first leaves exactly the parameters free iff the coordinate map
    /// is a bijection.
    pub fn new(n: usize) -> Result<Self> {
        assert!(n >= 1, "matrix size must be at least 1");
        let positions = ms_parameter_positions(n);
        let d = positions.len();
        let row_bits = n - 1;
        let m = row_bits + d;
        let sym = SymbolicMatrix::embedded(n, m);
        let mut sys = LinearSystem::new(m);
        for (i, j) in vanishing_entries(n) {
            sys.push(sym.entry(i, j));
        }
        for (k, &(i, j)) in positions.iter().enumerate() {
            let mut f = sym.entry(i, j);
            f.xor_assign(&LinearForm::var(m, row_bits + k));
            sys.push(f);
        }
        let space = eliminate(&sys);
        let expected_free: Vec<usize> = (row_bits..m).collect();
        if space.is_empty() || space.free_params() != expected_free {
            return Err(Error::Internal(format!(
                "multi-symmetric coordinate map for n={n} is singular: free parameters {:?}, expected {:?}",
                space.free_params(),
                expected_free
            )));
        }
        let images: Vec<BitVec> = space.basis().iter().map(|v| v.slice(0, row_bits)).collect();
        let first_row = (0..row_bits)
            .map(|t| LinearForm::new(BitVec::from_bools(images.iter().map(|v| v.get(t))), false))
            .collect();
        let symbolic = if row_bits == 0 {
            SymbolicMatrix::embedded(1, 0)
        } else {
            SymbolicMatrix::from_first_row(first_row)
        };
        Ok(MsParametrization {
            n,
            positions,
            images,
            symbolic,
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.positions.len()
    }

    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    /// Matrix entries as forms over the parameters.
    pub fn symbolic(&self) -> &SymbolicMatrix {
        &self.symbolic
    }

    /// First row of the matrix with only parameter `k` set.
    pub fn image(&self, k: usize) -> &BitVec {
        &self.images[k]
    }

    pub fn matrix(&self, params: &BitVec) -> Result<SteinhausMatrix> {
        if params.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                expected: self.dimension(),
                got: params.len(),
            });
        }
        Ok(self.symbolic.evaluate(params))
    }

    /// Entries of `m` at the canonical positions.
    pub fn read_parameters(&self, m: &SteinhausMatrix) -> BitVec {
        BitVec::from_bools(self.positions.iter().map(|&(i, j)| m.at(i, j)))
    }
}

/// The multi-symmetric matrix of size `n` whose canonical entries are `bits`.
pub fn ms_from_parameters(n: usize, bits: &[bool]) -> Result<SteinhausMatrix> {
    let p = MsParametrization::new(n)?;
    p.matrix(&BitVec::from_bools(bits.iter().copied()))
}

/// Every multi-symmetric matrix of size `n`, in Gray-code order of the
/// parameter vector starting from the zero matrix.
pub fn enumerate_ms(n: usize, cap: usize) -> Result<impl Iterator<Item = SteinhausMatrix>> {
    let p = MsParametrization::new(n)?;
    let d = p.dimension();
    if d > cap || d >= 64 {
        return Err(Error::CapExceeded {
            what: "multi-symmetric enumeration",
            dim: d,
            cap,
        });
    }
    let mut params = BitVec::zeros(d);
    let mut step = 0u64;
    Ok(std::iter::from_fn(move || {
        if step >= 1u64 << d {
            return None;
        }
        if step > 0 {
            params.flip(step.trailing_zeros() as usize);
        }
        step += 1;
        Some(p.symbolic.evaluate(&params))
    }))
}
