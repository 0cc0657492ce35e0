//! Exhaustive search over all `2^(n-1)` generating sequences.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::SteinhausMatrix;
use crate::sequence::BinarySequence;

/// Largest order accepted by [`brute_force_regular`] unless overridden.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeParity {
    Any,
    Odd,
    Even,
}

impl DegreeParity {
    fn accepts(self, d: u32) -> bool {
        match self {
            DegreeParity::Any => true,
            DegreeParity::Odd => d % 2 == 1,
            DegreeParity::Even => d.is_multiple_of(2),
        }
    }
}

/// Generating sequences of all regular Steinhaus graphs on `n` vertices whose
/// common degree has the requested parity, in increasing numeric order of
/// the sequence read with `a_1` as the least significant bit.
pub fn brute_force_regular(
    n: usize,
    parity: DegreeParity,
    cap: usize,
) -> Result<Vec<BinarySequence>> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n, min: 1 });
    }
    let limit = cap.min(63);
    if n > limit {
        return Err(Error::CapExceeded {
            what: "brute-force order",
            dim: n,
            cap: limit,
        });
    }
    let total = 1u64 << (n - 1);
    let chunk = 1u64 << 12;
    let mut found: Vec<u64> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .flat_map_iter(|c| {
            (c * chunk..((c + 1) * chunk).min(total))
                .filter(move |&v| is_regular_word(v, n, parity))
        })
        .collect();
    found.sort_unstable();
    Ok(found
        .into_iter()
        .map(|v| BinarySequence::from_u64(v, n - 1))
        .collect())
}

/// Row-by-row regularity test on a single machine word per row.
///
/// Bit `c` of a row word is column `c + 1`. Only rows `1..i` contribute to
/// column `i`, so `deg(V_i)` is final once row `i` is built and the scan can
/// stop at the first vertex whose degree differs from `deg(V_1)`.
fn is_regular_word(seq: u64, n: usize, parity: DegreeParity) -> bool {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut row = (seq << 1) & full;
    let target = row.count_ones();
    if !parity.accepts(target) {
        return false;
    }
    let mut column = [0u32; 64];
    for i in 0..n {
        if column[i] + row.count_ones() != target {
            return false;
        }
        let mut bits = row;
        while bits != 0 {
            column[bits.trailing_zeros() as usize] += 1;
            bits &= bits - 1;
        }
        // Next row: a_{i+1,j} = a_{i,j-1} + a_{i,j}, minus its diagonal bit.
        row = (row ^ (row << 1)) & full;
        if i + 1 < 64 {
            row &= !(1u64 << (i + 1));
        }
    }
    true
}

/// Slow reference used in tests: builds each matrix and compares degrees.
pub fn brute_force_regular_reference(n: usize, parity: DegreeParity) -> Vec<BinarySequence> {
    (0..1u64 << (n - 1))
        .map(|v| BinarySequence::from_u64(v, n - 1))
        .filter(|s| {
            let d = SteinhausMatrix::from_sequence(s).degrees();
            d.is_regular() && parity.accepts(d.get(1) as u32)
        })
        .collect()
}
