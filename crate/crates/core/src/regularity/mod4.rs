//! Vertex degrees of multi-symmetric Steinhaus graphs modulo 4.
//!
//! For a multi-symmetric matrix each vertex degree is congruent to twice a
//! GF(2) combination of a few entries (modulo 4), except `deg(V_1)` and
//! `deg(V_n)` for which only the parity is pinned. Mirror vertices
//! `V_i`, `V_{n-i+1}` have equal degrees.

use crate::error::{Error, Result};
use crate::gf2::{LinearForm, SymbolicMatrix};
use crate::matrix::SteinhausMatrix;
use crate::symmetry::is_multi_symmetric;

/// `deg(V_vertex) ≡ (modulus / 2) * XOR(entries)  (mod modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceRule {
    pub vertex: usize,
    /// 2 or 4.
    pub modulus: usize,
    pub entries: Vec<(usize, usize)>,
}

impl CongruenceRule {
    fn new(vertex: usize, modulus: usize, entries: &[(usize, usize)]) -> Self {
        CongruenceRule {
            vertex,
            modulus,
            entries: entries.to_vec(),
        }
    }

    pub fn predicted_residue(&self, m: &SteinhausMatrix) -> usize {
        let bit = self
            .entries
            .iter()
            .fold(false, |acc, &(i, j)| acc ^ m.at(i, j));
        usize::from(bit) * self.modulus / 2
    }

    /// The GF(2) combination of entries as a form over the parameters of `sym`.
    pub fn form(&self, sym: &SymbolicMatrix) -> LinearForm {
        let mut f = LinearForm::zero(sym.num_params());
        for &(i, j) in &self.entries {
            f.xor_assign(&sym.entry(i, j));
        }
        f
    }
}

/// All congruences available for multi-symmetric matrices of size `n`,
/// including mirror images. Empty for `n < 4`.
pub fn congruence_rules(n: usize) -> Vec<CongruenceRule> {
    let mut base = Vec::new();
    if n >= 4 && n.is_multiple_of(2) {
        let h = n / 2;
        base.push(CongruenceRule::new(1, 2, &[(1, h + 1)]));
        base.push(CongruenceRule::new(2, 4, &[(1, h + 1)]));
        base.push(CongruenceRule::new(3, 4, &[(2, h + 1)]));
        for i in 2..=h.saturating_sub(2) {
            base.push(CongruenceRule::new(
                2 * i,
                4,
                &[(2, 2 * i + 1), (i, 2 * i + 1)],
            ));
        }
    } else if n >= 5 {
        let h = (n - 1) / 2;
        base.push(CongruenceRule::new(1, 2, &[]));
        base.push(CongruenceRule::new(2, 4, &[(1, h + 1)]));
        for i in 2..=(n - 3) / 2 {
            base.push(CongruenceRule::new(
                2 * i,
                4,
                &[
                    (i + 1, 2 * i + 1),
                    (2 * i - 1, 2 * i + 1),
                    (2 * i - 1, h + i),
                ],
            ));
        }
        for i in 1..=(n - 3) / 2 {
            base.push(CongruenceRule::new(2 * i + 1, 4, &[(2, 2 * i + 2)]));
        }
    }
    let mirrors: Vec<_> = base
        .iter()
        .filter(|r| n - r.vertex + 1 != r.vertex)
        .map(|r| CongruenceRule {
            vertex: n - r.vertex + 1,
            ..r.clone()
        })
        .collect();
    base.extend(mirrors);
    base
}

/// Direct and predicted degree residues of one matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mod4Profile {
    /// `deg(V_i) mod 4`, 0-based by vertex.
    pub direct: Vec<usize>,
    /// `(rule, predicted residue)` for every applicable congruence.
    pub predicted: Vec<(CongruenceRule, usize)>,
}

impl Mod4Profile {
    /// True when every prediction matches the direct residue.
    pub fn agrees(&self) -> bool {
        self.predicted
            .iter()
            .all(|(r, p)| self.direct[r.vertex - 1] % r.modulus == *p)
    }

    /// Vertices covered by at least one congruence.
    pub fn covered(&self) -> Vec<usize> {
        let mut v: Vec<_> = self.predicted.iter().map(|(r, _)| r.vertex).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

pub fn direct_mod4_residues(m: &SteinhausMatrix) -> Vec<usize> {
    m.degrees().residues(4)
}

pub fn mod4_profile(m: &SteinhausMatrix) -> Result<Mod4Profile> {
    if !is_multi_symmetric(m) {
        return Err(Error::NotMultiSymmetric { n: m.size() });
    }
    let direct = direct_mod4_residues(m);
    let predicted = congruence_rules(m.size())
        .into_iter()
        .map(|r| {
            let p = r.predicted_residue(m);
            (r, p)
        })
        .collect();
    Ok(Mod4Profile { direct, predicted })
}

/// `deg(V_4) ≡ 0 (mod 4)` for even `n`, `deg(V_3) ≡ 0 (mod 4)` for odd `n`,
/// on multi-symmetric matrices of size at least 5.
pub fn divisibility_remarks_check(m: &SteinhausMatrix) -> Result<bool> {
    let n = m.size();
    if n < 5 {
        return Err(Error::SizeTooSmall { n, min: 5 });
    }
    if !is_multi_symmetric(m) {
        return Err(Error::NotMultiSymmetric { n });
    }
    let v = if n.is_multiple_of(2) { 4 } else { 3 };
    Ok(m.degrees().get(v).is_multiple_of(4))
}
