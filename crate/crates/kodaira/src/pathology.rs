//! Pathologies of the construction beyond nonvanishing itself.
//!
//! The first family of results concerns the direct image of (powers of) the
//! relative dualizing sheaf under `phi: X -> C`. Through the cover and the
//! ruling,
//!
//! ```text
//! phi_* omega_{X/C}^k = (+)_{j=1}^{l} Sym^(k(p-m-1) - (j-1)m)(E) (x) N^((j-1)p - k(pl-p-l))
//! ```
//!
//! with negative symmetric powers read as zero. At `k = 1` this is the
//! classical display `(+)_{j=1}^{l} Sym^(p-jm-1)(E) (x) N^(jp+l-pl)`; for
//! `k > 1` the same projection-formula computation applies and the result is
//! labeled as derived by this tool.
//!
//! The `j = 1` summand `V = Sym^(p-m-1)(E) (x) N^(p+l-pl)` fails semi
//! positivity: the quotient line bundle `W = O_P(p-m-1) (x) pi^* N^(p+l-pl)`
//! of `pi^* V` restricts to the section `E` with degree
//!
//! ```text
//! (W.E) = (p-m-1) deg_L + (p+l-pl) deg_N = -deg_N < 0,
//! ```
//!
//! an exact consequence of `l m = p + 1`. The same identity in exponent
//! form, `l(p-m-1) + p + l - pl = -1`, chains `V ->> L^(p-m-1) (x)
//! N^(p+l-pl) = N^(-1)`, so `V (x) omega_C (x) N ->> omega_C` and
//!
//! ```text
//! h^1(C, phi_* omega_X (x) N) >= h^1(C, omega_C) = 1
//! ```
//!
//! with `N` ample: a violation of Kollár-type vanishing for `phi_* omega_X`.
//!
//! The second family is the numerology of inseparable covers used to
//! propagate counterexamples: Euler characteristics under an n-fold
//! Frobenius-style degree-`p^n` cover with branch data `L`, the coefficients
//! of `K_Y` there, and the quasi-elliptic constraint in characteristics 2
//! and 3.

use crate::cohomology::{CurveBundle, IndexedBundle};
use crate::params::ConstructionParams;
use crate::{rat, Rat};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathologyError {
    #[error("UnsupportedCharacteristic: p = {0}, the quasi-elliptic analysis covers p = 2 and p = 3")]
    UnsupportedCharacteristic(i64),
}

/// Summands of `phi_* omega_{X/C}^k`, indexed by `j = 1..=l`, zero summands
/// dropped.
pub fn pushforward_relative_dualizing(k: i64, params: &ConstructionParams) -> Vec<IndexedBundle> {
    assert!(k >= 1);
    let (p, l, m) = (params.p(), params.l(), params.m());
    (1..=l)
        .filter_map(|j| {
            let sym = k * (p - m - 1) - (j - 1) * m;
            let n_exp = (j - 1) * p - k * (p * l - p - l);
            (sym >= 0).then(|| IndexedBundle {
                index: j,
                bundle: CurveBundle::new(sym, false, n_exp),
            })
        })
        .collect()
}

/// Exact certificate that `phi_* omega_{X/C}^k` is not nef: a quotient line
/// bundle of its pullback meets the section `E` negatively.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NefFailureCertificate {
    pub k: i64,
    /// Index `j` of the summand supplying the quotient (always 1).
    pub summand_index: i64,
    /// `Sym^(k(p-m-1))(E) (x) N^(-k(pl-p-l))`, the `j = 1` summand.
    pub first_summand: CurveBundle,
    /// Where the pairing is evaluated.
    pub test_curve: String,
    /// `(W.E)`, equal to `-k * deg_N`.
    pub pairing_value: i64,
    /// False exactly at `k = 1`, where the decomposition is the classical
    /// display; higher powers are computed by the same method in this tool.
    pub derived_by_tool: bool,
}

pub fn nef_failure(k: i64, params: &ConstructionParams) -> NefFailureCertificate {
    assert!(k >= 1);
    let (p, l, m) = (params.p(), params.l(), params.m());
    let first = CurveBundle::new(k * (p - m - 1), false, -k * (p * l - p - l));
    // W = O_P(sym) (x) pi^* N^(n_exp) restricted to E
    let pairing = first.sym_deg * params.deg_l() + first.n_exp * params.deg_n();
    assert_eq!(pairing, -k * params.deg_n(), "exact consequence of l*m = p + 1");
    NefFailureCertificate {
        k,
        summand_index: 1,
        first_summand: first,
        test_curve: "section E of P".into(),
        pairing_value: pairing,
        derived_by_tool: k > 1,
    }
}

/// Exact certificate that Kollár-type vanishing fails for `phi_* omega_X`:
/// the exponent identity `l(p-m-1) + p + l - pl = -1` produces a surjection
/// onto `omega_C` after twisting by the ample `N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KollarViolationCertificate {
    /// `l(p-m-1) + p + l - pl`, always exactly `-1`.
    pub exponent_identity_lhs: i64,
    pub exponent_identity_rhs: i64,
    /// The chain of surjections behind the bound.
    pub quotient_chain: Vec<String>,
    /// `h^1(C, phi_* omega_X (x) N) >= 1`.
    pub h1_lower_bound: i64,
}

pub fn kollar_violation(params: &ConstructionParams) -> KollarViolationCertificate {
    let (p, l, m) = (params.p(), params.l(), params.m());
    let lhs = l * (p - m - 1) + p + l - p * l;
    assert_eq!(lhs, -1, "exact consequence of l*m = p + 1");
    KollarViolationCertificate {
        exponent_identity_lhs: lhs,
        exponent_identity_rhs: -1,
        quotient_chain: vec![
            format!("Sym^{}(E) (x) N^({}) ->> L^{} (x) N^({}) = N^(-1)", p - m - 1, p + l - p * l, p - m - 1, p + l - p * l),
            "phi_* omega_X (x) N = phi_* omega_{X/C} (x) omega_C (x) N ->> omega_C".into(),
            "h^1(C, omega_C) = h^0(C, O_C) = 1".into(),
        ],
        h1_lower_bound: 1,
    }
}

/// Euler characteristic of the smooth model `Y` of a degree-`p^n` purely
/// inseparable cover with branch class `L` on a surface `X`:
///
/// ```text
/// chi(O_Y) = p^n chi(O_X) + p^n(p^n - 1)/12 * ((2p^n - 1)(L.L) - 3(L.K_X))
/// ```
pub fn insep_cover_euler(p: i64, n: u32, chi_x: Rat, l2: Rat, lk: Rat) -> Rat {
    assert!(p >= 2 && n >= 1);
    let pn = rat(p.checked_pow(n).expect("p^n overflows i64"));
    pn * chi_x + pn * (pn - rat(1)) / rat(12) * ((rat(2) * pn - rat(1)) * l2 - rat(3) * lk)
}

/// Coefficients `(c_K, c_L)` in `K_Y = c_K K_X + c_L L` for the same cover:
/// `(1, 1 - p^n)`.
pub fn shepherd_barron_ky_coeffs(p: i64, n: u32) -> (i64, i64) {
    assert!(p >= 2 && n >= 1);
    let pn = p.checked_pow(n).expect("p^n overflows i64");
    (1, 1 - pn)
}

/// Solutions `(n, L.F)` with `n >= 2` of the quasi-elliptic fiber constraint
/// `-2 <= (1 - p) n (L.F)`, searched over the given box. Only meaningful in
/// characteristics 2 and 3, where quasi-elliptic fibrations exist.
///
/// For `p = 3` the constraint reads `n (L.F) <= 1`: no solutions. For
/// `p = 2` it reads `n (L.F) <= 2`: exactly `(2, 1)` in any box containing it.
pub fn quasi_elliptic_solutions(
    p: i64,
    max_n: i64,
    max_lf: i64,
) -> Result<Vec<(i64, i64)>, PathologyError> {
    if p != 2 && p != 3 {
        return Err(PathologyError::UnsupportedCharacteristic(p));
    }
    let mut out = Vec::new();
    for n in 2..=max_n {
        for lf in 1..=max_lf {
            if -2 <= (1 - p) * n * lf {
                out.push((n, lf));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{enumerate_params, validate};

    fn flagship() -> ConstructionParams {
        validate(5, 16, 6).unwrap()
    }

    fn triples(list: &[IndexedBundle]) -> Vec<(i64, i64, i64)> {
        list.iter().map(|ib| (ib.index, ib.bundle.sym_deg, ib.bundle.n_exp)).collect()
    }

    #[test]
    fn relative_dualizing_pushforward_flagship() {
        let got = pushforward_relative_dualizing(1, &flagship());
        assert_eq!(
            triples(&got),
            vec![(1, 3, -19), (2, 2, -14), (3, 1, -9), (4, 0, -4)]
        );
        assert!(got.iter().all(|ib| !ib.bundle.dualized));
    }

    #[test]
    fn relative_dualizing_pushforward_small() {
        let c = validate(3, 7, 4).unwrap();
        assert_eq!(
            triples(&pushforward_relative_dualizing(1, &c)),
            vec![(1, 1, -5), (2, 0, -2)]
        );
    }

    #[test]
    fn nef_failure_pairing_is_minus_deg_n() {
        let cert = nef_failure(1, &flagship());
        assert_eq!(cert.pairing_value, -1);
        assert_eq!(cert.summand_index, 1);
        assert!(!cert.derived_by_tool);
        assert_eq!(cert.first_summand, CurveBundle::new(3, false, -19));

        let cert = nef_failure(1, &validate(3, 7, 4).unwrap());
        assert_eq!(cert.pairing_value, -1);
    }

    #[test]
    fn nef_failure_scales_with_the_power() {
        for c in enumerate_params(13, 40) {
            for k in 1..=6 {
                let cert = nef_failure(k, &c);
                assert_eq!(cert.pairing_value, -k * c.deg_n());
                assert_eq!(cert.derived_by_tool, k > 1);
                // the j = 1 summand of the power decomposition is the source
                let first = &pushforward_relative_dualizing(k, &c)[0];
                assert_eq!(first.index, 1);
                assert_eq!(first.bundle, cert.first_summand);
            }
        }
    }

    #[test]
    fn kollar_identity_is_exact() {
        for c in enumerate_params(23, 120) {
            let cert = kollar_violation(&c);
            assert_eq!(cert.exponent_identity_lhs, -1);
            assert_eq!(cert.h1_lower_bound, 1);
        }
    }

    #[test]
    fn insep_cover_euler_examples() {
        assert_eq!(insep_cover_euler(2, 1, rat(1), rat(1), rat(1)), rat(2));
        assert_eq!(insep_cover_euler(3, 1, rat(2), rat(2), rat(0)), rat(11));
    }

    #[test]
    fn ky_coefficients() {
        assert_eq!(shepherd_barron_ky_coeffs(2, 3), (1, -7));
        assert_eq!(shepherd_barron_ky_coeffs(5, 1), (1, -4));
    }

    #[test]
    fn quasi_elliptic_constraint() {
        assert_eq!(quasi_elliptic_solutions(3, 10, 10).unwrap(), vec![]);
        assert_eq!(quasi_elliptic_solutions(2, 10, 10).unwrap(), vec![(2, 1)]);
        assert_eq!(
            quasi_elliptic_solutions(5, 10, 10),
            Err(PathologyError::UnsupportedCharacteristic(5))
        );
    }
}
