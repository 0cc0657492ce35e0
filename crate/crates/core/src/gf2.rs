//! Affine algebra over GF(2) on a fixed set of `m` parameter bits.
//!
//! Matrix entries are carried symbolically as [`LinearForm`]s so that
//! constraints on a Steinhaus matrix become a [`LinearSystem`] whose solution
//! set is an [`AffineSpace`].

use crate::binomial::odd_binomial_indices;
use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::matrix::SteinhausMatrix;
use crate::sequence::BinarySequence;

/// `x -> coeffs . x + constant` over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: BitVec,
    constant: bool,
}

impl LinearForm {
    pub fn zero(m: usize) -> Self {
        LinearForm {
            coeffs: BitVec::zeros(m),
            constant: false,
        }
    }

    /// The form picking out parameter `k`.
    pub fn var(m: usize, k: usize) -> Self {
        let mut f = Self::zero(m);
        f.coeffs.set(k, true);
        f
    }

    pub fn new(coeffs: BitVec, constant: bool) -> Self {
        LinearForm { coeffs, constant }
    }

    pub fn num_params(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &BitVec {
        &self.coeffs
    }

    pub fn constant(&self) -> bool {
        self.constant
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn xor_assign(&mut self, other: &LinearForm) {
        self.coeffs.xor_assign(&other.coeffs);
        self.constant ^= other.constant;
    }

    pub fn add_constant(&mut self, c: bool) {
        self.constant ^= c;
    }

    pub fn eval(&self, x: &BitVec) -> bool {
        self.coeffs.dot(x) ^ self.constant
    }
}

impl std::ops::BitXor for &LinearForm {
    type Output = LinearForm;

    fn bitxor(self, rhs: &LinearForm) -> LinearForm {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

impl std::fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut terms: Vec<String> = self.coeffs.iter_ones().map(|k| format!("x{k}")).collect();
        if self.constant || terms.is_empty() {
            terms.push(if self.constant { "1" } else { "0" }.into());
        }
        f.write_str(&terms.join(" + "))
    }
}

/// Forms over `m` parameters, each asserted equal to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    m: usize,
    forms: Vec<LinearForm>,
}

impl LinearSystem {
    pub fn new(m: usize) -> Self {
        LinearSystem {
            m,
            forms: Vec::new(),
        }
    }

    pub fn num_params(&self) -> usize {
        self.m
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// Adds the equation `form = 0`.
    pub fn push(&mut self, form: LinearForm) {
        assert_eq!(form.num_params(), self.m, "form has wrong parameter count");
        self.forms.push(form);
    }

    pub fn is_satisfied_by(&self, x: &BitVec) -> bool {
        self.forms.iter().all(|f| !f.eval(x))
    }
}

/// Solution set of a [`LinearSystem`]: `particular + span(basis)`, or empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSpace {
    m: usize,
    particular: Option<BitVec>,
    basis: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl AffineSpace {
    pub fn num_params(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    pub fn particular(&self) -> Option<&BitVec> {
        self.particular.as_ref()
    }

    pub fn basis(&self) -> &[BitVec] {
        &self.basis
    }

    /// Kernel dimension `m - rank`. Defined even when the space is empty.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Pivot parameters in increasing order.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Parameters left free by elimination, in increasing order. Basis vector
    /// `t` is the solution of the homogeneous system with free parameter
    /// `free_params()[t]` set and the others cleared.
    pub fn free_params(&self) -> Vec<usize> {
        let mut free = Vec::with_capacity(self.basis.len());
        let mut p = self.pivots.iter().peekable();
        for k in 0..self.m {
            if p.peek() == Some(&&k) {
                p.next();
            } else {
                free.push(k);
            }
        }
        free
    }

    /// Point with kernel coordinates `coords` (bit `t` selects basis vector `t`).
    pub fn point(&self, coords: &BitVec) -> Option<BitVec> {
        let mut x = self.particular.clone()?;
        for t in coords.iter_ones() {
            x.xor_assign(&self.basis[t]);
        }
        Some(x)
    }

    /// All `2^d` points in reflected Gray-code order: consecutive points differ
    /// by exactly one basis vector. Yields nothing for an empty space.
    pub fn enumerate(&self, cap: usize) -> Result<GrayPoints<'_>> {
        enumerate_affine(self, cap)
    }
}

/// Gauss-Jordan elimination with the lowest-index pivot first.
pub fn eliminate(sys: &LinearSystem) -> AffineSpace {
    let m = sys.m;
    let mut rows: Vec<LinearForm> = sys
        .forms
        .iter()
        .filter(|f| !f.coeffs.is_zero() || f.constant)
        .cloned()
        .collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..m {
        let Some(found) = (top..rows.len()).find(|&r| rows[r].coeffs.get(col)) else {
            continue;
        };
        rows.swap(top, found);
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != top && row.coeffs.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        top += 1;
    }
    let inconsistent = rows[top..].iter().any(|r| r.constant);
    let mut is_pivot = vec![false; m];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis = (0..m)
        .filter(|&k| !is_pivot[k])
        .map(|f| {
            let mut v = BitVec::zeros(m);
            v.set(f, true);
            for (r, &p) in pivots.iter().enumerate() {
                if rows[r].coeffs.get(f) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect();
    let particular = (!inconsistent).then(|| {
        let mut x = BitVec::zeros(m);
        for (r, &p) in pivots.iter().enumerate() {
            x.set(p, rows[r].constant);
        }
        x
    });
    AffineSpace {
        m,
        particular,
        basis,
        pivots,
    }
}

/// Gray-code iterator over an affine space; see [`AffineSpace::enumerate`].
#[derive(Debug, Clone)]
pub struct GrayPoints<'a> {
    space: &'a AffineSpace,
    current: Option<BitVec>,
    step: u64,
    total: u64,
}

impl GrayPoints<'_> {
    /// Basis index flipped to reach step `t >= 1` from step `t - 1`.
    pub fn flip_index(t: u64) -> usize {
        t.trailing_zeros() as usize
    }
}

impl Iterator for GrayPoints<'_> {
    type Item = BitVec;

    fn next(&mut self) -> Option<BitVec> {
        if self.step >= self.total {
            return None;
        }
        let cur = self.current.as_mut()?;
        if self.step > 0 {
            cur.xor_assign(&self.space.basis[Self::flip_index(self.step)]);
        }
        self.step += 1;
        Some(cur.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.step) as usize;
        (left, Some(left))
    }
}

pub fn enumerate_affine(space: &AffineSpace, cap: usize) -> Result<GrayPoints<'_>> {
    let d = space.dimension();
    if d > cap || d >= 64 {
        return Err(Error::CapExceeded {
            what: "affine enumeration",
            dim: d,
            cap,
        });
    }
    let total = if space.is_empty() { 0 } else { 1u64 << d };
    Ok(GrayPoints {
        space,
        current: space.particular.clone(),
        step: 0,
        total,
    })
}

/// Entries of a size-`n` Steinhaus matrix as affine forms, given the first row
/// as forms over some parameter space.
///
/// Entries are computed on demand from the first row with Lucas-theorem
/// binomials, so no symbolic triangle is ever materialized.
#[derive(Debug, Clone)]
pub struct SymbolicMatrix {
    n: usize,
    m: usize,
    /// `first_row[t]` is `a_{1,t+2}`.
    first_row: Vec<LinearForm>,
}

impl SymbolicMatrix {
    /// Parameters are the first-row bits themselves: parameter `t` is `a_{1,t+2}`.
    pub fn unconstrained(n: usize) -> Self {
        Self::embedded(n, n.saturating_sub(1))
    }

    /// Like [`unconstrained`](Self::unconstrained) but inside a larger space
    /// of `m >= n - 1` parameters; the extra parameters do not occur.
    pub fn embedded(n: usize, m: usize) -> Self {
        assert!(n >= 1 && m + 1 >= n);
        SymbolicMatrix {
            n,
            m,
            first_row: (0..n - 1).map(|t| LinearForm::var(m, t)).collect(),
        }
    }

    pub fn from_first_row(first_row: Vec<LinearForm>) -> Self {
        let n = first_row.len() + 1;
        let m = first_row.first().map_or(0, LinearForm::num_params);
        assert!(first_row.iter().all(|f| f.num_params() == m));
        SymbolicMatrix { n, m, first_row }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn num_params(&self) -> usize {
        self.m
    }

    /// `a_{i,j}` as a form; symmetric, zero on the diagonal.
    pub fn entry(&self, i: usize, j: usize) -> LinearForm {
        assert!(
            i >= 1 && j >= 1 && i <= self.n && j <= self.n,
            "({i},{j}) out of range"
        );
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let mut f = LinearForm::zero(self.m);
        if i == j {
            return f;
        }
        for k in odd_binomial_indices(i - 1) {
            f.xor_assign(&self.first_row[j - k - 2]);
        }
        f
    }

    /// The concrete matrix at parameter assignment `x`.
    pub fn evaluate(&self, x: &BitVec) -> SteinhausMatrix {
        let seq = BitVec::from_bools(self.first_row.iter().map(|f| f.eval(x)));
        SteinhausMatrix::from_sequence(&BinarySequence::from_bits(seq))
    }
}

/// Shorthand for [`SymbolicMatrix::unconstrained`].
pub fn symbolic_matrix(n: usize) -> SymbolicMatrix {
    SymbolicMatrix::unconstrained(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(m: usize, vars: &[usize], c: bool) -> LinearForm {
        let mut f = LinearForm::zero(m);
        for &k in vars {
            f.xor_assign(&LinearForm::var(m, k));
        }
        f.add_constant(c);
        f
    }

    #[test]
    fn single_equation() {
        let mut sys = LinearSystem::new(2);
        sys.push(form(2, &[0], false));
        let space = eliminate(&sys);
        assert_eq!(space.dimension(), 1);
        let pts: Vec<_> = space.enumerate(8).unwrap().collect();
        assert_eq!(
            pts,
            vec![
                BitVec::from_bools([false, false]),
                BitVec::from_bools([false, true])
            ]
        );
    }

    #[test]
    fn inconsistent_system() {
        let mut sys = LinearSystem::new(2);
        sys.push(form(2, &[0, 1], false));
        sys.push(form(2, &[0, 1], true));
        let space = eliminate(&sys);
        assert!(space.is_empty());
        assert_eq!(space.enumerate(8).unwrap().count(), 0);
    }

    #[test]
    fn zero_dimensional_space_yields_particular() {
        let mut sys = LinearSystem::new(3);
        sys.push(form(3, &[0], true));
        sys.push(form(3, &[1, 2], false));
        sys.push(form(3, &[2], true));
        let space = eliminate(&sys);
        assert_eq!(space.dimension(), 0);
        let pts: Vec<_> = space.enumerate(0).unwrap().collect();
        assert_eq!(pts, vec![BitVec::from_bools([true, true, true])]);
    }

    #[test]
    fn two_dimensional_space() {
        let mut sys = LinearSystem::new(4);
        sys.push(form(4, &[0, 2], true));
        sys.push(form(4, &[1, 2, 3], false));
        let space = eliminate(&sys);
        assert_eq!(space.dimension(), 2);
        assert_eq!(space.free_params(), vec![2, 3]);
        let pts: Vec<_> = space.enumerate(2).unwrap().collect();
        assert_eq!(pts.len(), 4);
        for p in &pts {
            assert!(sys.is_satisfied_by(p));
        }
        let distinct: std::collections::HashSet<_> = pts.iter().collect();
        assert_eq!(distinct.len(), 4);
        assert!(matches!(
            space.enumerate(1),
            Err(Error::CapExceeded { dim: 2, cap: 1, .. })
        ));
    }

    #[test]
    fn symbolic_entries() {
        let s = symbolic_matrix(3);
        assert_eq!(s.entry(2, 3), form(2, &[0, 1], false));
        let s = symbolic_matrix(5);
        // a_{2,4} = a_{1,3} + a_{1,4}: parameters 1 and 2.
        assert_eq!(s.entry(2, 4), form(4, &[1, 2], false));
        assert_eq!(s.entry(4, 2), s.entry(2, 4));
        assert!(s.entry(3, 3).is_constant());
        let x = BitVec::from_bools([true, true, false, false]);
        let built = SteinhausMatrix::from_sequence(&"1100".parse().unwrap());
        for i in 1..=5 {
            for j in 1..=5 {
                assert_eq!(s.entry(i, j).eval(&x), built.at(i, j));
            }
        }
        assert_eq!(s.evaluate(&x), built);
    }

    #[test]
    fn debug_rendering() {
        assert_eq!(format!("{:?}", form(3, &[0, 2], true)), "x0 + x2 + 1");
        assert_eq!(format!("{:?}", LinearForm::zero(2)), "0");
    }
}
