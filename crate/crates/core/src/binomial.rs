//! Binomial coefficients modulo 2.
//!
//! By Lucas' theorem `C(top, k)` is odd exactly when every bit set in `k` is
//! also set in `top`, i.e. `k & !top == 0`.

/// `C(top, k) mod 2`. Zero when `k > top`.
#[inline]
pub fn binomial_mod2(top: usize, k: usize) -> bool {
    k & !top == 0
}

/// All `k` with `C(top, k)` odd, in increasing order.
///
/// These are the submasks of `top`; there are `2^popcount(top)` of them.
pub fn odd_binomial_indices(top: usize) -> impl Iterator<Item = usize> {
    // Walks submasks upward: next = (k - top) & top, wrapping.
    let mut next = Some(0usize);
    std::iter::from_fn(move || {
        let k = next?;
        next = if k == top {
            None
        } else {
            Some(k.wrapping_sub(top) & top)
        };
        Some(k)
    })
}
