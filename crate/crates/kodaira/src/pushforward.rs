//! Direct images under the cyclic cover `psi: X -> P`.
//!
//! The cover is `X = Spec (+)_{i=0}^{l-1} M^i` for
//! `M = O_P(-m) (x) pi^* N^p`, so every `psi_*` of a line bundle pulled
//! back from `P` splits into `l` line-bundle summands of the form
//! `M^i(-q E)`. Summands are recorded by the pair
//!
//! ```text
//! op_deg = -(i*m + q)   (the O_P(1)-degree)
//! n_exp  = i*p          (the pi^* N-exponent)
//! ```
//!
//! Writing `k = q l + r` with `0 <= r < l`, the ideal sheaf of the
//! thickened section pushes down as
//!
//! ```text
//! psi_* O_X(-k E~) = (+)_{i=0}^{r-1} M^i(-(q+1) E)  (+)  (+)_{i=r}^{l-1} M^i(-q E),
//! ```
//!
//! always `l` summands. An erroneous variant of this formula, namely
//! `O_P(-k E) (+) (+)_{i=1}^{l-1} M^i`, circulated before the correction;
//! [`refute_erroneous`] shows the two cannot agree by comparing exact Euler
//! characteristics of the structure sheaves of the thickenings `k E~` and
//! `k E`, which differ for every `k >= 2`.
//!
//! For the thickening itself, `psi_* O_{k E~}` is filtered with rank-1
//! graded pieces: summand `i` contributes the restrictions
//! `M^i(-s E)|_E` for `s <= q` (when `i < r`) or `s <= q - 1` (when
//! `i >= r`), in total exactly `k` pieces. Restricted summands live on
//! `E = C` and have degree `op_deg * deg_L + n_exp * deg_N`; note
//! `(M.E) = -deg_N`.

use crate::params::ConstructionParams;
use crate::picard::{self, DivClassP, PicardError};
use crate::rat;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PushforwardError {
    #[error("NonPositiveMultiple: k = {0}, expected k >= 1")]
    NonPositiveMultiple(i64),
    #[error("RankMismatch: decomposition has rank {actual}, expected {expected}")]
    RankMismatch { expected: i64, actual: i64 },
    #[error("NoContradiction: the corrected and erroneous formulas agree at k = {0}")]
    NoContradiction(i64),
    #[error(transparent)]
    Picard(#[from] PicardError),
}

/// One line-bundle summand `O_P(op_deg) (x) pi^* N^(n_exp)` on `P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PSummand {
    pub op_deg: i64,
    pub n_exp: i64,
}

impl PSummand {
    /// `M^i(-q E)`.
    pub fn m_power_twist(i: i64, q: i64, params: &ConstructionParams) -> Self {
        PSummand { op_deg: -(i * params.m() + q), n_exp: i * params.p() }
    }

    /// Numerical class on `P`: `op_deg * E + pi^*(n_exp * N)`.
    pub fn div_class(&self, params: &ConstructionParams) -> DivClassP {
        DivClassP::new(self.op_deg, rat(self.n_exp * params.deg_n()))
    }

    /// Adds `e` to the `N`-exponent (projection-formula twist by `pi^* N^e`).
    pub fn twist_n(&self, e: i64) -> Self {
        PSummand { op_deg: self.op_deg, n_exp: self.n_exp + e }
    }

    pub fn euler_char(&self, params: &ConstructionParams) -> Result<i64, PicardError> {
        picard::euler_char_p(self, params)
    }

    /// Degree of the restriction to the section `E = C`:
    /// `op_deg * deg_L + n_exp * deg_N`.
    pub fn degree_on_section(&self, params: &ConstructionParams) -> i64 {
        self.op_deg * params.deg_l() + self.n_exp * params.deg_n()
    }

    /// Compact text form, e.g. `O_P(-2) (x) pi^* N^(5)`.
    pub fn describe(&self) -> String {
        format!("O_P({}) (x) pi^* N^({})", self.op_deg, self.n_exp)
    }
}

/// Which formula produced a [`Decomposition`], and therefore how its
/// summands are to be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Summands of `psi_* O_X(-k E~)` as sheaves on `P` (corrected formula).
    Corrected,
    /// Summands of the erroneous variant, as sheaves on `P`.
    Erroneous,
    /// Rank-1 graded pieces of `psi_* O_{k E~}`, each restricted to `E = C`.
    Thickening,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub provenance: Provenance,
    pub summands: Vec<PSummand>,
}

impl Decomposition {
    /// Exact Euler characteristic of the whole decomposition. For sheaves on
    /// `P` this sums surface Riemann-Roch; for thickening pieces it sums
    /// curve Riemann-Roch `deg + 1 - g` on the section.
    pub fn chi(&self, params: &ConstructionParams) -> Result<i64, PicardError> {
        match self.provenance {
            Provenance::Corrected | Provenance::Erroneous => {
                let mut total = 0;
                for s in &self.summands {
                    total += s.euler_char(params)?;
                }
                Ok(total)
            }
            Provenance::Thickening => Ok(self
                .summands
                .iter()
                .map(|s| s.degree_on_section(params) + 1 - params.g())
                .sum()),
        }
    }

    pub fn rank(&self) -> i64 {
        self.summands.len() as i64
    }
}

/// `psi_* O_X(-k E~)` by the corrected formula. Always `l` summands,
/// ordered by ascending power `i` of `M`.
pub fn pushforward_negative(
    k: i64,
    params: &ConstructionParams,
) -> Result<Decomposition, PushforwardError> {
    if k < 1 {
        return Err(PushforwardError::NonPositiveMultiple(k));
    }
    let l = params.l();
    let (q, r) = (k.div_euclid(l), k.rem_euclid(l));
    let summands = (0..l)
        .map(|i| PSummand::m_power_twist(i, if i < r { q + 1 } else { q }, params))
        .collect::<Vec<_>>();
    debug_assert_eq!(summands.len() as i64, l);
    Ok(Decomposition { provenance: Provenance::Corrected, summands })
}

/// The erroneous variant `O_P(-k E) (+) (+)_{i=1}^{l-1} M^i`, kept around
/// as the object of refutation.
pub fn pushforward_erroneous(
    k: i64,
    params: &ConstructionParams,
) -> Result<Decomposition, PushforwardError> {
    if k < 1 {
        return Err(PushforwardError::NonPositiveMultiple(k));
    }
    let mut summands = vec![PSummand { op_deg: -k, n_exp: 0 }];
    summands.extend((1..params.l()).map(|i| PSummand::m_power_twist(i, 0, params)));
    Ok(Decomposition { provenance: Provenance::Erroneous, summands })
}

/// Graded pieces of `psi_* O_{k E~}`: exactly `k` rank-1 pieces on `E = C`,
/// ordered by ascending `(i, s)`. Summand `i` is restricted from `(q+1)E`
/// when `i < r` and from `qE` when `i >= r`.
pub fn pushforward_thickening(
    k: i64,
    params: &ConstructionParams,
) -> Result<Decomposition, PushforwardError> {
    if k < 1 {
        return Err(PushforwardError::NonPositiveMultiple(k));
    }
    let l = params.l();
    let (q, r) = (k.div_euclid(l), k.rem_euclid(l));
    let mut summands = Vec::with_capacity(k as usize);
    for i in 0..l {
        let levels = if i < r { q + 1 } else { q };
        for s in 0..levels {
            summands.push(PSummand::m_power_twist(i, s, params));
        }
    }
    let decomposition = Decomposition { provenance: Provenance::Thickening, summands };
    if decomposition.rank() != k {
        // r(q+1) + (l-r)q = ql + r = k, so this cannot happen
        return Err(PushforwardError::RankMismatch { expected: k, actual: decomposition.rank() });
    }
    Ok(decomposition)
}

/// `chi(psi_* O_X) = sum_i chi(M^i)`, used as the Riemann-Roch constant of
/// the cover.
pub fn chi_structure_cover(params: &ConstructionParams) -> Result<i64, PushforwardError> {
    let mut total = 0;
    for i in 0..params.l() {
        total += PSummand::m_power_twist(i, 0, params).euler_char(params)?;
    }
    Ok(total)
}

/// Euler-characteristic refutation of the erroneous formula at level `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefutationReport {
    pub k: i64,
    /// `chi(O_{k E~})` on the cover.
    pub chi_thickening_cover: i64,
    /// `chi(O_{k E})` on the base, which is what the erroneous formula
    /// implicitly asserts for the cover thickening.
    pub chi_thickening_base: i64,
    pub corrected: Decomposition,
    pub erroneous: Decomposition,
    pub corrected_chi_sum: i64,
    pub erroneous_chi_sum: i64,
    /// True iff the two thickening characteristics (equivalently the two
    /// decomposition sums) disagree.
    pub mismatch: bool,
}

/// Compares the corrected and erroneous decompositions of
/// `psi_* O_X(-k E~)` through exact Euler characteristics.
///
/// The two formulas coincide at `k = 1`, so refutation is only meaningful
/// for `k >= 2`; there the defect is
/// `chi(O_{kE~}) - chi(O_{kE}) = k(k-1)(g-1)(1/p - 1/(pl)) > 0`.
pub fn refute_erroneous(
    k: i64,
    params: &ConstructionParams,
) -> Result<RefutationReport, PushforwardError> {
    if k < 1 {
        return Err(PushforwardError::NonPositiveMultiple(k));
    }
    if k == 1 {
        return Err(PushforwardError::NoContradiction(1));
    }
    let corrected = pushforward_negative(k, params)?;
    let erroneous = pushforward_erroneous(k, params)?;
    let corrected_chi_sum = corrected.chi(params)?;
    let erroneous_chi_sum = erroneous.chi(params)?;
    let chi_cover = picard::euler_char_thickening(k, true, params)?;
    let chi_base = picard::euler_char_thickening(k, false, params)?;

    // both routes split chi(psi_* O_X) against a thickening
    let chi_x = chi_structure_cover(params)?;
    debug_assert_eq!(chi_x, corrected_chi_sum + chi_cover);
    debug_assert_eq!(chi_x, erroneous_chi_sum + chi_base);

    Ok(RefutationReport {
        k,
        chi_thickening_cover: chi_cover,
        chi_thickening_base: chi_base,
        corrected,
        erroneous,
        corrected_chi_sum,
        erroneous_chi_sum,
        mismatch: chi_cover != chi_base,
    })
}
