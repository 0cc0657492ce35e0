#![allow(dead_code, clippy::needless_range_loop)]

use steinhaus::BinarySequence;

/// Full symmetric 0/1 matrix built from the recurrence on plain vectors,
/// 0-based.
pub fn naive_matrix(seq: &[u8]) -> Vec<Vec<u8>> {
    let n = seq.len() + 1;
    let mut a = vec![vec![0u8; n]; n];
    a[0][1..].copy_from_slice(seq);
    for i in 1..n {
        for j in i + 1..n {
            a[i][j] = a[i - 1][j - 1] ^ a[i - 1][j];
        }
    }
    for i in 0..n {
        for j in 0..i {
            a[i][j] = a[j][i];
        }
    }
    a
}

pub fn naive_degrees(a: &[Vec<u8>]) -> Vec<usize> {
    a.iter()
        .map(|r| r.iter().map(|&x| x as usize).sum())
        .collect()
}

/// Pascal's triangle mod 2 up to row `rows - 1`.
pub fn pascal_mod2(rows: usize) -> Vec<Vec<u8>> {
    let mut t = vec![vec![0u8; rows]; rows];
    for r in 0..rows {
        t[r][0] = 1;
        for k in 1..=r {
            t[r][k] = t[r - 1][k - 1] ^ t[r - 1][k];
        }
    }
    t
}

pub fn bits_of(v: u64, len: usize) -> Vec<u8> {
    (0..len).map(|k| ((v >> k) & 1) as u8).collect()
}

pub fn seq(bits: &[u8]) -> BinarySequence {
    BinarySequence::from_slice(bits)
}

/// Every sequence of length `n - 1`, `a_1` as the least significant bit.
pub fn all_sequences(n: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..1u64 << (n - 1)).map(move |v| bits_of(v, n - 1))
}

pub fn naive_is_multi_symmetric(a: &[Vec<u8>]) -> bool {
    let n = a.len();
    (0..n).all(|i| (0..n).all(|j| a[i][j] == a[n - 1 - j][n - 1 - i]))
        && (0..n).all(|i| (i + 1..n).all(|j| a[i][j] == a[i][n - 1 - j + i + 1]))
}
