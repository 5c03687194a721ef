//! Report assembly and the stable serialization schema.
//!
//! A [`Dossier`] is the complete machine-checkable summary for one
//! parameter triple: derived invariants, one certificate per proven
//! nonvanishing twist, the nef-failure and Kollár-violation certificates,
//! and the Euler-characteristic refutation of the erroneous pushforward
//! formula. Serialization rules, kept stable under `schema_version = "1"`:
//!
//! * rationals appear as `{"num": ..., "den": ...}` in lowest terms with a
//!   positive denominator; integer-valued fields are plain JSON numbers;
//! * every dossier carries `flags.conditional_on_tango_curve = true`,
//!   because existence of the underlying curve is assumed, not proven;
//! * beyond-range scan results are namespaced under `beyond_range`, never
//!   mixed into the proven `nonvanishing` list;
//! * output is deterministic: equal inputs serialize to equal bytes.

use crate::cohomology::{
    self, scan_witnesses_z_ab, scan_witnesses_z_power, theorem_nonvan1, theorem_nonvan2,
    CohomologyError, Witness,
};
use crate::params::ConstructionParams;
use crate::pathology::{kollar_violation, nef_failure, KollarViolationCertificate, NefFailureCertificate};
use crate::picard::{self, PicardError};
use crate::pushforward::{self, PushforwardError, RefutationReport};
use crate::Rat;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DossierError {
    #[error(transparent)]
    Picard(#[from] PicardError),
    #[error(transparent)]
    Pushforward(#[from] PushforwardError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

impl DossierError {
    /// True for conditions that indicate broken internal bookkeeping rather
    /// than bad input; the CLI maps these to exit code 2.
    pub fn is_internal(&self) -> bool {
        match self {
            DossierError::Picard(PicardError::NonIntegralResult { .. }) => true,
            DossierError::Pushforward(PushforwardError::RankMismatch { .. }) => true,
            DossierError::Pushforward(PushforwardError::Picard(
                PicardError::NonIntegralResult { .. },
            )) => true,
            DossierError::Cohomology(CohomologyError::LerayObstruction { .. }) => true,
            DossierError::Cohomology(CohomologyError::Picard(
                PicardError::NonIntegralResult { .. },
            )) => true,
            _ => false,
        }
    }
}

/// Reduced fraction with positive denominator, the JSON form of [`Rat`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frac {
    pub num: i64,
    pub den: i64,
}

impl From<Rat> for Frac {
    fn from(r: Rat) -> Self {
        // Ratio keeps itself reduced with a positive denominator
        Frac { num: *r.numer(), den: *r.denom() }
    }
}

impl From<Frac> for Rat {
    fn from(f: Frac) -> Self {
        Rat::new(f.num, f.den)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsTriple {
    pub p: i64,
    pub g: i64,
    pub l: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivClassXJson {
    pub et_coeff: Frac,
    pub base_deg: Frac,
}

/// Base-curve class against the generators `N` and `K_C`, with its degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveClassJson {
    pub n_exp: Frac,
    pub k_coeff: i64,
    pub degree: Frac,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub deg_l: i64,
    pub deg_n: i64,
    pub m: i64,
    pub fiber_genus: i64,
    pub omega_x_ample: bool,
    /// `(E~.E~) = deg_N`.
    pub e_tilde_self_intersection: i64,
    pub canonical_class: DivClassXJson,
    /// The base part of `K_X` written as `n_exp * N + k_coeff * K_C`.
    pub canonical_base_class: CurveClassJson,
    /// `chi(O_X)`, computed as the sum of `chi(M^i)` over the cover
    /// decomposition.
    pub chi_structure_sheaf: i64,
    /// `(K_X.F)`, recorded without any reconciliation against the fiber
    /// genus; the fibers are singular.
    pub k_x_fiber_degree: i64,
}

/// The identity data of a designated witness whose bundle degenerates to
/// zero (`m = 1` with `b = l - 1`): the integer identity still holds
/// formally, but no section certificate follows from it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerateIdentity {
    pub index: i64,
    pub sym_deg: i64,
    pub n_exp: i64,
    pub identity_lhs: i64,
    pub identity_rhs: i64,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonvanishingEntry {
    /// `"nonvan1"` for the diagonal twists `Z^(-n)`, `"nonvan2"` for the
    /// mixed twists `Z_{a,b}^(-1)`.
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a_b: Option<[i64; 2]>,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degenerate: Option<DegenerateIdentity>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    /// Always true: no admissibility check here decides whether a Tango
    /// curve with the required `l`-th root actually exists for this genus.
    pub conditional_on_tango_curve: bool,
    pub beyond_range_scanned: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dossier {
    pub schema_version: String,
    pub params: ParamsTriple,
    pub invariants: Invariants,
    pub nonvanishing: Vec<NonvanishingEntry>,
    pub nef_failure: NefFailureCertificate,
    pub kollar: KollarViolationCertificate,
    pub refutation: RefutationReport,
    /// Scanner output outside (or in excess of) the proven ranges; labeled,
    /// never merged with the proven list.
    pub beyond_range: Vec<NonvanishingEntry>,
    pub flags: Flags,
}

fn curve_class_json(c: &picard::CurveClass, params: &ConstructionParams) -> CurveClassJson {
    CurveClassJson {
        n_exp: c.n_exp.into(),
        k_coeff: c.k_coeff,
        degree: c.degree(params).into(),
    }
}

/// Assembles the complete dossier for one triple. `beyond_range` switches on
/// the exhaustive scanner over `n <= 2l` and `a, b <= 2l`.
pub fn build_dossier(
    params: &ConstructionParams,
    beyond_range: bool,
) -> Result<Dossier, DossierError> {
    let l = params.l();
    let canonical = picard::canonical_x(params);

    let invariants = Invariants {
        deg_l: params.deg_l(),
        deg_n: params.deg_n(),
        m: params.m(),
        fiber_genus: params.fiber_genus(),
        omega_x_ample: params.omega_x_ample(),
        e_tilde_self_intersection: params.deg_n(),
        canonical_class: DivClassXJson {
            et_coeff: canonical.et_coeff.into(),
            base_deg: canonical.base_deg.into(),
        },
        canonical_base_class: curve_class_json(&picard::canonical_x_base_class(params), params),
        chi_structure_sheaf: pushforward::chi_structure_cover(params)?,
        k_x_fiber_degree: picard::k_x_fiber_degree(params),
    };

    let mut nonvanishing = Vec::new();
    for n in 1..=(l / 2) {
        let witness = theorem_nonvan1(n, params)?;
        nonvanishing.push(NonvanishingEntry {
            kind: "nonvan1".into(),
            n: Some(n),
            a_b: None,
            witness: Some(witness),
            degenerate: None,
        });
    }
    for a in 1..=(l - 1) {
        for b in 1..=(l - a) {
            let entry = match theorem_nonvan2(a, b, params) {
                Ok(witness) => NonvanishingEntry {
                    kind: "nonvan2".into(),
                    n: None,
                    a_b: Some([a, b]),
                    witness: Some(witness),
                    degenerate: None,
                },
                Err(CohomologyError::DegenerateWitness { index, sym_deg, n_exp }) => {
                    NonvanishingEntry {
                        kind: "nonvan2".into(),
                        n: None,
                        a_b: Some([a, b]),
                        witness: None,
                        degenerate: Some(DegenerateIdentity {
                            index,
                            sym_deg,
                            n_exp,
                            identity_lhs: n_exp,
                            identity_rhs: l * sym_deg,
                            note: "designated summand is the zero bundle; \
                                   nonvanishing not certified for this pair"
                                .into(),
                        }),
                    }
                }
                Err(e) => return Err(e.into()),
            };
            nonvanishing.push(entry);
        }
    }

    let beyond = if beyond_range { scan_beyond_range(params) } else { Vec::new() };

    Ok(Dossier {
        schema_version: "1".into(),
        params: ParamsTriple { p: params.p(), g: params.g(), l },
        invariants,
        nonvanishing,
        nef_failure: nef_failure(1, params),
        kollar: kollar_violation(params),
        refutation: pushforward::refute_erroneous(2, params)?,
        beyond_range: beyond,
        flags: Flags { conditional_on_tango_curve: true, beyond_range_scanned: beyond_range },
    })
}

/// Exhaustive sufficient-rule scan outside the proven statements: diagonal
/// twists up to `n = 2l` and mixed twists over the box `a, b <= 2l`, minus
/// the designated in-range witnesses already reported. Hits here would be
/// candidates, not theorems. In fact the scan comes back empty for every
/// admissible triple: outside the proven ranges the exact-match index
/// equation has no solution in `0..l`, and every candidate summand has
/// negative Euler characteristic, so neither rule fires. The scan is kept
/// as the check that the proven ranges are sharp for these two rules.
fn scan_beyond_range(params: &ConstructionParams) -> Vec<NonvanishingEntry> {
    let l = params.l();
    let mut out = Vec::new();
    for n in 1..=(2 * l) {
        let designated =
            (n <= l / 2).then(|| theorem_nonvan1(n, params).expect("in proven range"));
        for w in scan_witnesses_z_power(n, params) {
            if designated.as_ref() != Some(&w) {
                out.push(NonvanishingEntry {
                    kind: "nonvan1".into(),
                    n: Some(n),
                    a_b: None,
                    witness: Some(w),
                    degenerate: None,
                });
            }
        }
    }
    for a in 1..=(2 * l) {
        for b in 1..=(2 * l) {
            let designated = (a <= l - 1 && b <= l - a)
                .then(|| theorem_nonvan2(a, b, params))
                .and_then(Result::ok);
            for w in scan_witnesses_z_ab(a, b, params) {
                if designated.as_ref() != Some(&w) {
                    out.push(NonvanishingEntry {
                        kind: "nonvan2".into(),
                        n: None,
                        a_b: Some([a, b]),
                        witness: Some(w),
                        degenerate: None,
                    });
                }
            }
        }
    }
    out
}

impl Dossier {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("dossier serializes");
        s.push('\n');
        s
    }

    pub fn to_json_compact(&self) -> String {
        serde_json::to_string(self).expect("dossier serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Deterministic human-readable rendering.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let p = &self.params;
        let inv = &self.invariants;
        let _ = writeln!(s, "construction dossier: p = {}, g = {}, l = {}", p.p, p.g, p.l);
        let _ = writeln!(
            s,
            "(every statement is conditional on a genus-{} Tango curve in characteristic {})",
            p.g, p.p
        );
        let _ = writeln!(s);
        let _ = writeln!(s, "derived invariants");
        let _ = writeln!(
            s,
            "  deg_L = {}, deg_N = {}, m = {}, fiber genus = {}",
            inv.deg_l, inv.deg_n, inv.m, inv.fiber_genus
        );
        let _ = writeln!(s, "  omega_X ample: {}", inv.omega_x_ample);
        let _ = writeln!(s, "  (E~.E~) = {}", inv.e_tilde_self_intersection);
        let _ = writeln!(
            s,
            "  K_X = {} E~ + phi^*(degree {}); base class = {} N + {} K_C",
            frac_text(inv.canonical_class.et_coeff),
            frac_text(inv.canonical_class.base_deg),
            frac_text(inv.canonical_base_class.n_exp),
            inv.canonical_base_class.k_coeff
        );
        let _ = writeln!(s, "  chi(O_X) = {}", inv.chi_structure_sheaf);
        let _ = writeln!(s, "  (K_X.F) = {} (fibers are singular; no adjunction reconciliation attempted)", inv.k_x_fiber_degree);
        let _ = writeln!(s);
        let _ = writeln!(s, "nonvanishing certificates");
        for e in &self.nonvanishing {
            let _ = writeln!(s, "  {}", entry_text(e));
        }
        let _ = writeln!(s);
        let r = &self.refutation;
        let _ = writeln!(s, "refutation of the erroneous pushforward formula at k = {}", r.k);
        let _ = writeln!(
            s,
            "  chi(O_{{kE~}}) = {} vs chi(O_{{kE}}) = {}: {}",
            r.chi_thickening_cover,
            r.chi_thickening_base,
            if r.mismatch { "MISMATCH" } else { "no contradiction" }
        );
        let _ = writeln!(
            s,
            "  decomposition chi sums: corrected {}, erroneous {}",
            r.corrected_chi_sum, r.erroneous_chi_sum
        );
        let _ = writeln!(s);
        let nf = &self.nef_failure;
        let _ = writeln!(s, "nef failure of phi_* omega_(X/C)");
        let _ = writeln!(
            s,
            "  summand j = {}: {} has quotient pairing ({}.E) = {} < 0",
            nf.summand_index,
            nf.first_summand.describe(),
            "W",
            nf.pairing_value
        );
        let kv = &self.kollar;
        let _ = writeln!(s, "Kollar-type vanishing violation");
        let _ = writeln!(
            s,
            "  exponent identity: {} = {}; h^1(C, phi_* omega_X (x) N) >= {}",
            kv.exponent_identity_lhs, kv.exponent_identity_rhs, kv.h1_lower_bound
        );
        if self.flags.beyond_range_scanned {
            let _ = writeln!(s);
            if self.beyond_range.is_empty() {
                let _ = writeln!(
                    s,
                    "beyond-range scan: no additional twists certifiable by either \
                     section rule; the proven ranges are sharp for this tool"
                );
            } else {
                let _ = writeln!(
                    s,
                    "beyond-range scan (candidates only, not covered by the proven theorems): {} hits",
                    self.beyond_range.len()
                );
                for e in &self.beyond_range {
                    let _ = writeln!(s, "  {}", entry_text(e));
                }
            }
        }
        s
    }
}

fn frac_text(f: Frac) -> String {
    if f.den == 1 {
        f.num.to_string()
    } else {
        format!("{}/{}", f.num, f.den)
    }
}

fn entry_text(e: &NonvanishingEntry) -> String {
    let twist = match (e.n, e.a_b) {
        (Some(n), _) => format!("Z^(-{n})"),
        (_, Some([a, b])) => format!("Z_({a},{b})^(-1)"),
        _ => "?".into(),
    };
    match (&e.witness, &e.degenerate) {
        (Some(w), _) => {
            let rule = match w.rule {
                cohomology::SectionRule::ExactMatch => {
                    format!("exact match {} = {}", w.identity_lhs, w.identity_rhs)
                }
                cohomology::SectionRule::RrPositivity => {
                    format!("chi positivity (chi = {})", w.h1_lower_bound)
                }
            };
            format!(
                "H^1(X, {twist}) != 0: summand {} is {}, {}, h^1 >= {}",
                w.index,
                w.bundle().describe(),
                rule,
                w.h1_lower_bound
            )
        }
        (None, Some(d)) => format!(
            "H^1(X, {twist}): designated summand {} degenerates (formal sym_deg = {}); not certified",
            d.index, d.sym_deg
        ),
        _ => format!("H^1(X, {twist}): no certificate"),
    }
}

/// One named internal-consistency check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Replays the cross-cutting exact identities for one triple. Every check
/// is expected to pass for every admissible triple; a failure indicates an
/// internal inconsistency, not bad input.
pub fn self_check(params: &ConstructionParams) -> Result<Vec<CheckResult>, DossierError> {
    let mut out = Vec::new();
    let l = params.l();
    let chi0 = pushforward::chi_structure_cover(params)?;

    let mut chi_ok = true;
    let mut erroneous_differs = false;
    for k in 1..=100 {
        let direct = picard::euler_char_x_given_chi0(
            &picard::DivClassX::from_integers(-k, 0),
            chi0,
            params,
        )?;
        let decomposed = pushforward::pushforward_negative(k, params)?.chi(params)?;
        chi_ok &= direct == decomposed;
        let erroneous = pushforward::pushforward_erroneous(k, params)?.chi(params)?;
        erroneous_differs |= erroneous != direct;
    }
    out.push(CheckResult {
        name: "chi of psi_* O_X(-kE~) matches Riemann-Roch, k <= 100".into(),
        passed: chi_ok,
        detail: "exact equality of decomposition sum and chi(O_X) + D.(D - K_X)/2".into(),
    });
    out.push(CheckResult {
        name: "erroneous formula fails the same comparison for some k".into(),
        passed: erroneous_differs,
        detail: "guaranteed from k = 2 on".into(),
    });

    let mut split_ok = true;
    for k in 1..=100 {
        let ideal = pushforward::pushforward_negative(k, params)?.chi(params)?;
        let thick = pushforward::pushforward_thickening(k, params)?.chi(params)?;
        split_ok &= chi0 == ideal + thick;
    }
    out.push(CheckResult {
        name: "chi(psi_* O_X) splits against each thickening, k <= 100".into(),
        passed: split_ok,
        detail: "ideal-sheaf sequence bookkeeping".into(),
    });

    let mut rank_ok = true;
    for k in 1..=200 {
        rank_ok &= pushforward::pushforward_thickening(k, params)?.rank() == k;
    }
    out.push(CheckResult {
        name: "thickening decomposition has rank k, k <= 200".into(),
        passed: rank_ok,
        detail: "r(q+1) + (l-r)q = k".into(),
    });

    let mut routes_ok = true;
    let mut leray_ok = true;
    for n in 1..=(3 * l) {
        routes_ok &= cohomology::r1_phi_lower_z_neg(n, params)
            == cohomology::r1_z_neg_case_split(n, params);
        leray_ok &= cohomology::leray_h1(n, params).is_ok();
    }
    out.push(CheckResult {
        name: "summand route equals case-split route for R^1, n <= 3l".into(),
        passed: routes_ok,
        detail: "index-for-index equality of bundles".into(),
    });
    out.push(CheckResult {
        name: "Leray identification unobstructed, n <= 3l".into(),
        passed: leray_ok,
        detail: "phi_* of every negative twist vanishes".into(),
    });

    let nf = nef_failure(1, params);
    out.push(CheckResult {
        name: "nef-failure pairing equals -deg_N".into(),
        passed: nf.pairing_value == -params.deg_n(),
        detail: format!("(W.E) = {}", nf.pairing_value),
    });
    let kv = kollar_violation(params);
    out.push(CheckResult {
        name: "Kollar exponent identity equals -1".into(),
        passed: kv.exponent_identity_lhs == -1,
        detail: "l(p-m-1) + p + l - pl".into(),
    });

    let mut witnesses_ok = true;
    for n in 1..=(l / 2) {
        let (i, sym, n_exp) = cohomology::nonvan1_designated(n, params);
        witnesses_ok &= i >= n && i <= l - 1 && l * sym == n_exp && sym >= 0;
        witnesses_ok &= theorem_nonvan1(n, params).is_ok();
    }
    for a in 1..=(l - 1) {
        for b in 1..=(l - a) {
            let (i, sym, n_exp) = cohomology::nonvan2_designated(a, b, params);
            witnesses_ok &= i >= a && i <= l - 1 && l * sym == n_exp;
        }
    }
    out.push(CheckResult {
        name: "designated witnesses: index membership and integer identity".into(),
        passed: witnesses_ok,
        detail: "n <= floor(l/2); (a, b) over the proven rectangle".into(),
    });

    let demo = cohomology::regularity_contradiction(1, 1, (params.p() - 1).max(1), params)?;
    out.push(CheckResult {
        name: "proven rectangle never yields both twist coordinates positive".into(),
        passed: demo.rectangle_never_both_positive,
        detail: "compatibility with the regularity argument at k = p - 1".into(),
    });

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{enumerate_params, validate};

    #[test]
    fn flagship_dossier_shape() {
        let c = validate(5, 16, 6).unwrap();
        let d = build_dossier(&c, false).unwrap();
        assert_eq!(d.schema_version, "1");
        assert_eq!(d.invariants.chi_structure_sheaf, 55);
        assert_eq!(d.invariants.k_x_fiber_degree, 18);
        assert_eq!(d.invariants.canonical_class.et_coeff, Frac { num: 18, den: 1 });
        assert_eq!(d.invariants.canonical_base_class.n_exp, Frac { num: -19, den: 1 });

        // 3 diagonal twists and the 15 pairs of the rectangle
        let nonvan1 = d.nonvanishing.iter().filter(|e| e.kind == "nonvan1").count();
        let nonvan2 = d.nonvanishing.iter().filter(|e| e.kind == "nonvan2").count();
        assert_eq!((nonvan1, nonvan2), (3, 15));

        // exactly one degenerate pair here: (1, 5) with m = 1
        let degenerate: Vec<_> =
            d.nonvanishing.iter().filter(|e| e.degenerate.is_some()).collect();
        assert_eq!(degenerate.len(), 1);
        assert_eq!(degenerate[0].a_b, Some([1, 5]));
        assert!(degenerate[0].witness.is_none());

        assert!(d.flags.conditional_on_tango_curve);
        assert!(!d.flags.beyond_range_scanned);
        assert!(d.beyond_range.is_empty());
    }

    #[test]
    fn small_dossier_counts() {
        let c = validate(3, 7, 4).unwrap();
        let d = build_dossier(&c, false).unwrap();
        let nonvan1 = d.nonvanishing.iter().filter(|e| e.kind == "nonvan1").count();
        let nonvan2 = d.nonvanishing.iter().filter(|e| e.kind == "nonvan2").count();
        assert_eq!((nonvan1, nonvan2), (2, 6));
    }

    #[test]
    fn json_round_trip_exact() {
        for c in enumerate_params(13, 60) {
            let d = build_dossier(&c, false).unwrap();
            let parsed = Dossier::from_json(&d.to_json()).unwrap();
            assert_eq!(parsed, d);
        }
        // and with the scanner enabled
        let c = validate(5, 16, 6).unwrap();
        let d = build_dossier(&c, true).unwrap();
        let parsed = Dossier::from_json(&d.to_json()).unwrap();
        assert_eq!(parsed, d);
    }

    #[test]
    fn serialization_is_deterministic() {
        let c = validate(5, 16, 6).unwrap();
        let a = build_dossier(&c, true).unwrap().to_json();
        let b = build_dossier(&c, true).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn rationals_serialize_as_reduced_fractions() {
        let c = validate(5, 16, 6).unwrap();
        let d = build_dossier(&c, false).unwrap();
        let v: serde_json::Value = serde_json::from_str(&d.to_json()).unwrap();
        let et = &v["invariants"]["canonical_class"]["et_coeff"];
        assert_eq!(et["num"], serde_json::json!(18));
        assert_eq!(et["den"], serde_json::json!(1));
        assert!(v["flags"]["conditional_on_tango_curve"].as_bool().unwrap());
    }

    #[test]
    fn beyond_range_scan_is_empty_and_namespaced() {
        // The scan must never leak into the proven list, and it comes back
        // empty on every admissible triple: the proven ranges are sharp for
        // the two section rules.
        for c in enumerate_params(13, 60) {
            let d = build_dossier(&c, true).unwrap();
            assert!(d.flags.beyond_range_scanned);
            assert!(
                d.beyond_range.is_empty(),
                "unexpected beyond-range hit for {:?}: {:?}",
                c,
                d.beyond_range
            );
            let plain = build_dossier(&c, false).unwrap();
            assert_eq!(d.nonvanishing, plain.nonvanishing);
            assert!(!plain.flags.beyond_range_scanned);
        }
    }

    #[test]
    fn self_check_passes_everywhere_small() {
        for c in enumerate_params(7, 30) {
            let results = self_check(&c).unwrap();
            for r in &results {
                assert!(r.passed, "{} failed for {:?}", r.name, c);
            }
        }
    }

    #[test]
    fn text_rendering_mentions_the_headline_facts() {
        let c = validate(5, 16, 6).unwrap();
        let d = build_dossier(&c, false).unwrap();
        let text = d.render_text();
        assert!(text.contains("p = 5, g = 16, l = 6"));
        assert!(text.contains("MISMATCH"));
        assert!(text.contains("conditional"));
        assert!(text.contains("h^1 >= 1"));
    }
}
