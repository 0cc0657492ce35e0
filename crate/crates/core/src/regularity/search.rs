//! Search for multi-symmetric Steinhaus graphs that are regular modulo 4.
//!
//! Every vertex of a multi-symmetric graph has a known residue pattern
//! (see [`congruence_rules`]), and one vertex (`V_4` for even `n`, `V_3` for
//! odd `n`) always has degree divisible by 4. Regularity modulo 4 therefore
//! forces every residue to 0, which turns each congruence into a linear
//! equation over the multi-symmetric parameters. The solution space is only a
//! superset of the answer, so each point of it is re-checked with integer
//! degrees.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::mod4::congruence_rules;
use crate::error::{Error, Result};
use crate::gf2::{eliminate, LinearSystem};
use crate::matrix::SteinhausMatrix;
use crate::sequence::BinarySequence;
use crate::symmetry::{is_multi_symmetric, MsParametrization};

/// Default cap on the constrained dimension that will be enumerated.
pub const DEFAULT_SEARCH_CAP: usize = 24;

/// Upper bound on the constrained dimension: `ceil(n/24)` for even `n`,
/// `ceil(n/30)` for odd `n`.
pub fn dimension_bound(n: usize) -> usize {
    if n.is_multiple_of(2) {
        n.div_ceil(24)
    } else {
        n.div_ceil(30)
    }
}

/// The multi-symmetric parametrization of size `n` together with the linear
/// conditions for regularity modulo 4 expressed over its parameters.
#[derive(Debug, Clone)]
pub struct RegularMod4System {
    pub parametrization: MsParametrization,
    pub system: LinearSystem,
}

pub fn regular_mod4_system(n: usize) -> Result<RegularMod4System> {
    if n < 5 {
        return Err(Error::SizeTooSmall { n, min: 5 });
    }
    let parametrization = MsParametrization::new(n)?;
    let sym = parametrization.symbolic();
    let mut system = LinearSystem::new(parametrization.dimension());
    for rule in congruence_rules(n) {
        let f = rule.form(sym);
        if !f.is_constant() || f.constant() {
            system.push(f);
        }
    }
    Ok(RegularMod4System {
        parametrization,
        system,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub ms_dim: usize,
    pub constrained_dim: usize,
    pub bound: usize,
    pub bound_ok: bool,
    pub candidates: u64,
    #[serde(with = "sequence_strings")]
    pub survivors: Vec<BinarySequence>,
    pub elapsed_ms: u64,
    /// Set when the constrained dimension exceeded the cap and nothing was
    /// enumerated.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub capped: bool,
}

impl SearchReport {
    /// Survivors other than the zero-edge graph.
    pub fn nonzero_survivors(&self) -> impl Iterator<Item = &BinarySequence> {
        self.survivors.iter().filter(|s| !s.bits().is_zero())
    }

    pub fn only_zero_survives(&self) -> bool {
        !self.capped && self.survivors.len() == 1 && self.nonzero_survivors().next().is_none()
    }
}

mod sequence_strings {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::sequence::BinarySequence;

    pub fn serialize<S: Serializer>(v: &[BinarySequence], s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = v.iter().map(ToString::to_string).collect();
        strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BinarySequence>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings
            .iter()
            .map(|t| t.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Full search at one size. A constrained dimension above `cap` yields a
/// report with `capped` set instead of an error.
pub fn search_regular_mod4(n: usize, cap: usize) -> Result<SearchReport> {
    let start = Instant::now();
    let RegularMod4System {
        parametrization,
        system,
    } = regular_mod4_system(n)?;
    let space = eliminate(&system);
    let constrained_dim = space.dimension();
    let bound = dimension_bound(n);
    let mut report = SearchReport {
        n,
        ms_dim: parametrization.dimension(),
        constrained_dim,
        bound,
        bound_ok: constrained_dim <= bound,
        candidates: 0,
        survivors: Vec::new(),
        elapsed_ms: 0,
        capped: false,
    };
    if constrained_dim > cap {
        report.capped = true;
    } else {
        for params in space.enumerate(cap)? {
            report.candidates += 1;
            let m = parametrization.matrix(&params)?;
            if verify_candidate(&m)? {
                report.survivors.push(m.sequence());
            }
        }
        report.survivors.sort();
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn verify_candidate(m: &SteinhausMatrix) -> Result<bool> {
    if !is_multi_symmetric(m) {
        return Err(Error::Internal(format!(
            "parametrized candidate {} is not multi-symmetric",
            m.sequence()
        )));
    }
    Ok(m.degrees().is_regular_mod(4))
}

/// How [`odd_regular_theorem_check`] collects multi-symmetric regular graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMethod {
    /// Filter every multi-symmetric matrix.
    Enumeration,
    /// Filter the regular-mod-4 search survivors (a superset of the regular ones).
    Search,
}

/// True iff the zero-edge graph is the only exactly regular graph of odd
/// order `n` with a multi-symmetric matrix.
pub fn odd_regular_theorem_check(n: usize, method: CheckMethod, cap: usize) -> Result<bool> {
    assert!(n % 2 == 1, "odd_regular_theorem_check needs odd n");
    let regular: Vec<SteinhausMatrix> = match method {
        CheckMethod::Enumeration => crate::symmetry::enumerate_ms(n, cap)?
            .filter(|m| m.degrees().is_regular())
            .collect(),
        CheckMethod::Search => {
            let report = search_regular_mod4(n, cap)?;
            if report.capped {
                return Err(Error::CapExceeded {
                    what: "regular-mod-4 search",
                    dim: report.constrained_dim,
                    cap,
                });
            }
            report
                .survivors
                .iter()
                .map(SteinhausMatrix::from_sequence)
                .filter(|m| m.degrees().is_regular())
                .collect()
        }
    };
    Ok(regular.len() == 1 && regular[0].is_zero())
}

/// Evaluates the report's survivors as matrices.
pub fn survivor_matrices(report: &SearchReport) -> Vec<SteinhausMatrix> {
    report
        .survivors
        .iter()
        .map(SteinhausMatrix::from_sequence)
        .collect()
}
