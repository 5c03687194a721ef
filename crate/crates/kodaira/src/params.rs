//! Admissible construction parameters.
//!
//! A triple `(p, g, l)` selects one instance of the construction: a smooth
//! projective curve `C` of genus `g` over an algebraically closed field of
//! characteristic `p`, carrying a Tango structure `L` of degree
//! `(2g - 2)/p`, an `l`-th root `N` of `L`, and the degree-`l` cyclic cover
//! `X` of the ruled surface `P = P(E)` attached to the extension
//! `0 -> O_C -> E -> L -> 0` classified by the Tango structure.
//!
//! Constraints:
//! * `p` prime, `g >= 2`, `l >= 2`;
//! * `p | 2g - 2`, so that `deg_L = (2g - 2)/p` is an integer;
//! * `l | deg_L`, so that `N` can have degree `deg_N = deg_L / l`;
//! * `l | p + 1`, so that `m = (p + 1)/l` is an integer. The cover is built
//!   from the inverse of `M = O_P(-m) (x) pi^* N^p`, which needs `l*m = p+1`.
//!
//! Whether a Tango curve with the required structure exists for a given
//! admissible triple is a moduli question this crate does not decide.
//! Every admissible triple is therefore reported as a candidate, and every
//! downstream certificate carries a `conditional_on_tango_curve` flag.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Validation failures for a candidate triple, in the order checked.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("NotPrime: p = {0} is not a prime number")]
    NotPrime(i64),
    #[error("GenusTooSmall: g = {0}, the construction needs g >= 2")]
    GenusTooSmall(i64),
    #[error("CharNotDividingCanonicalDegree: p = {p} does not divide 2g - 2 = {canonical_degree}")]
    CharNotDividingCanonicalDegree { p: i64, canonical_degree: i64 },
    #[error("CoverDegreeInvalid: l = {l} ({reason})")]
    CoverDegreeInvalid { l: i64, reason: String },
}

/// A validated parameter triple together with its derived degrees.
///
/// Construction goes through [`validate`]; the derived fields always satisfy
/// `p * deg_L = 2g - 2`, `l * deg_N = deg_L` and `l * m = p + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    p: i64,
    g: i64,
    l: i64,
    deg_l: i64,
    deg_n: i64,
    m: i64,
}

/// Checks a candidate triple and computes the derived invariants.
pub fn validate(p: i64, g: i64, l: i64) -> Result<ConstructionParams, ParamError> {
    if !is_prime(p) {
        return Err(ParamError::NotPrime(p));
    }
    if g < 2 {
        return Err(ParamError::GenusTooSmall(g));
    }
    let canonical_degree = 2 * g - 2;
    if canonical_degree % p != 0 {
        return Err(ParamError::CharNotDividingCanonicalDegree { p, canonical_degree });
    }
    let deg_l = canonical_degree / p;
    if l < 2 {
        return Err(ParamError::CoverDegreeInvalid {
            l,
            reason: "cover degree must be at least 2".into(),
        });
    }
    if deg_l % l != 0 {
        return Err(ParamError::CoverDegreeInvalid {
            l,
            reason: format!("l must divide deg_L = {deg_l}"),
        });
    }
    if (p + 1) % l != 0 {
        return Err(ParamError::CoverDegreeInvalid {
            l,
            reason: format!("l must divide p + 1 = {}", p + 1),
        });
    }
    Ok(ConstructionParams {
        p,
        g,
        l,
        deg_l,
        deg_n: deg_l / l,
        m: (p + 1) / l,
    })
}

impl ConstructionParams {
    /// The characteristic.
    pub fn p(&self) -> i64 {
        self.p
    }

    /// Genus of the base curve `C`.
    pub fn g(&self) -> i64 {
        self.g
    }

    /// Degree of the cyclic cover `psi: X -> P`.
    pub fn l(&self) -> i64 {
        self.l
    }

    /// `deg L = (2g - 2)/p`, the degree of the Tango structure.
    pub fn deg_l(&self) -> i64 {
        self.deg_l
    }

    /// `deg N = deg L / l`, the degree of the chosen `l`-th root of `L`.
    pub fn deg_n(&self) -> i64 {
        self.deg_n
    }

    /// `m = (p + 1)/l`, the fiber degree of the cover-defining bundle `M`.
    pub fn m(&self) -> i64 {
        self.m
    }

    /// `2g - 2`, the degree of the canonical class of `C`.
    pub fn canonical_degree(&self) -> i64 {
        2 * self.g - 2
    }

    /// Geometric genus `(l - 1)(p - 1)/2` of every closed fiber of
    /// `phi: X -> C`. Each fiber is an integral rational-looking cuspidal
    /// cover of the ruling fiber; this is the genus of its normalization as
    /// recorded in the construction.
    pub fn fiber_genus(&self) -> i64 {
        let t = (self.l - 1) * (self.p - 1);
        // l | p + 1 forces t even: p odd makes p - 1 even, and p = 2 forces
        // l = 3.
        debug_assert_eq!(t % 2, 0);
        t / 2
    }

    /// Whether `omega_X` is ample, i.e. whether `X` is minimal of general
    /// type with ample canonical class: exactly when `p >= 5` or
    /// `(p, l) = (3, 4)`.
    pub fn omega_x_ample(&self) -> bool {
        self.p >= 5 || (self.p == 3 && self.l == 4)
    }
}

/// Lists every admissible triple with `p <= max_p` and `g <= max_g`,
/// ordered lexicographically by `(p, g, l)`.
pub fn enumerate_params(max_p: i64, max_g: i64) -> Vec<ConstructionParams> {
    let mut out = Vec::new();
    for p in 2..=max_p {
        if !is_prime(p) {
            continue;
        }
        for g in 2..=max_g {
            if (2 * g - 2) % p != 0 {
                continue;
            }
            let deg_l = (2 * g - 2) / p;
            for l in 2..=(p + 1) {
                if (p + 1) % l == 0 && deg_l % l == 0 {
                    out.push(validate(p, g, l).expect("enumerated triple must validate"));
                }
            }
        }
    }
    out
}

fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
