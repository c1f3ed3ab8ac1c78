//! Discrete f-Prokhorov distances: `π_f(X,Y) = inf{t > 0 : D_{X,Y}(t) < f(t)}`
//! for a monotone increasing parameter function `f`.
//!
//! The infimum always lies in the finite candidate set
//! `T = candidate_distances(X,Y) ∪ {f⁻¹(k) : k = 0..|X₀|+|Y₀|}`, and the
//! predicate is monotone in `t`, so a binary search over sorted `T` finds it
//! in O(n² log n).
//!
//! Two forms of `f` are supported. Polynomials with nonnegative coefficients
//! and zero constant term are superadditive, which makes `π_f` a metric.
//! A constant `f ≡ k` is a query, not a metric: it yields the k-th bottleneck
//! `inf{t > 0 : D(t) < k}`, and `k = 1` is exactly the bottleneck distance.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::diagram::{GroundMetric, PersistenceDiagram};
use crate::matching::candidate_distances;
use crate::profile::profile_value;

/// The function `f` parameterizing `π_f`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamFunction {
    form: Form,
}

#[derive(Debug, Clone, PartialEq)]
enum Form {
    /// Coefficients `(c₀, c₁, ..., c_m)` of `Σ cᵢ tⁱ`; `c₀ = 0` enforced.
    Polynomial(Vec<f64>),
    Constant(u64),
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ParamFunctionError {
    #[error("the constant term of the polynomial must be zero, got {0}")]
    NonzeroConstantTerm(f64),
    #[error("polynomial coefficients must be finite and nonnegative, got {0}")]
    InvalidCoefficient(f64),
    #[error("the polynomial must have a positive coefficient: f = 0 admits no threshold")]
    IdenticallyZero,
    #[error("the constant form requires k >= 1")]
    ConstantBelowOne,
    #[error("a constant parameter function has no inverse")]
    NoInverse,
}

impl ParamFunction {
    /// Polynomial `f(t) = c₁t + c₂t² + ...` from its coefficient list
    /// `(c₀, c₁, ...)`. Requires `c₀ = 0`, all coefficients finite and
    /// nonnegative, and at least one positive; such an `f` is strictly
    /// increasing and superadditive on `[0, ∞)`.
    pub fn polynomial(coefficients: Vec<f64>) -> Result<Self, ParamFunctionError> {
        for &c in &coefficients {
            if !c.is_finite() || c < 0.0 {
                return Err(ParamFunctionError::InvalidCoefficient(c));
            }
        }
        match coefficients.first() {
            Some(&c0) if c0 != 0.0 => return Err(ParamFunctionError::NonzeroConstantTerm(c0)),
            _ => {}
        }
        if !coefficients.iter().skip(1).any(|&c| c > 0.0) {
            return Err(ParamFunctionError::IdenticallyZero);
        }
        Ok(Self {
            form: Form::Polynomial(coefficients),
        })
    }

    /// `f(t) = c·t^q` for `c > 0`, `q >= 1`.
    pub fn monomial(c: f64, q: u32) -> Result<Self, ParamFunctionError> {
        if q == 0 {
            return Err(ParamFunctionError::IdenticallyZero);
        }
        let mut coefficients = vec![0.0; q as usize + 1];
        coefficients[q as usize] = c;
        Self::polynomial(coefficients)
    }

    /// `f(t) = t`, the classical discrete Prokhorov distance.
    pub fn identity() -> Self {
        Self::polynomial(vec![0.0, 1.0]).expect("identity is a valid polynomial")
    }

    /// `f ≡ k`; query mode, not a metric.
    pub fn constant(k: u64) -> Result<Self, ParamFunctionError> {
        if k < 1 {
            return Err(ParamFunctionError::ConstantBelowOne);
        }
        Ok(Self {
            form: Form::Constant(k),
        })
    }

    /// Whether `π_f` with this `f` is a genuine metric (polynomial form).
    pub fn is_metric(&self) -> bool {
        matches!(self.form, Form::Polynomial(_))
    }

    /// # Panics
    /// If `t` is negative.
    pub fn eval(&self, t: f64) -> f64 {
        assert!(t >= 0.0, "parameter functions are defined on [0, ∞)");
        match &self.form {
            Form::Polynomial(c) => c.iter().rev().fold(0.0, |acc, &ci| acc * t + ci),
            Form::Constant(k) => *k as f64,
        }
    }

    /// The unique `t >= 0` with `f(t) = y`, to 1e-12 relative tolerance:
    /// closed form for a single monomial, bracketed bisection otherwise.
    /// The result is nudged onto the smallest float with `f(t) >= y` so that
    /// it behaves like the exact preimage under the search predicate.
    pub fn inverse(&self, y: f64) -> Result<f64, ParamFunctionError> {
        let Form::Polynomial(coefficients) = &self.form else {
            return Err(ParamFunctionError::NoInverse);
        };
        assert!(y >= 0.0, "preimages are defined for y >= 0");
        if y == 0.0 {
            return Ok(0.0);
        }
        let positive: Vec<(usize, f64)> = coefficients
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0.0)
            .map(|(q, &c)| (q, c))
            .collect();
        let mut t = if let [(q, c)] = positive[..] {
            match q {
                1 => y / c,
                2 => (y / c).sqrt(),
                _ => (y / c).powf(1.0 / q as f64),
            }
        } else {
            let mut hi = 1.0f64;
            while self.eval(hi) < y {
                hi *= 2.0;
            }
            let mut lo = 0.0f64;
            while hi - lo > 1e-13 * hi {
                let mid = 0.5 * (lo + hi);
                if self.eval(mid) < y {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            hi
        };
        for _ in 0..64 {
            if self.eval(t) >= y {
                break;
            }
            t = t.next_up();
        }
        Ok(t)
    }

    /// Whether threshold `t` with profile value `d` lies in the passing
    /// region of `inf{t > 0 : D(t) < f(t)}` when probed at candidates.
    ///
    /// For a strictly increasing polynomial the first candidate with
    /// `D(t) <= f(t)` equals the infimum (on the open interval after it `D`
    /// is constant and `f` strictly larger); for a constant `f ≡ k` the
    /// comparison must stay strict.
    pub(crate) fn admits(&self, d: usize, t: f64) -> bool {
        match &self.form {
            Form::Polynomial(_) => d as f64 <= self.eval(t),
            Form::Constant(k) => (d as u64) < *k,
        }
    }
}

impl fmt::Display for ParamFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.form {
            Form::Polynomial(c) => {
                write!(f, "poly:")?;
                for (i, ci) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{ci}")?;
                }
                Ok(())
            }
            Form::Constant(k) => write!(f, "const:{k}"),
        }
    }
}

/// Parse failures of the `poly:...` / `const:k` text syntax.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ParamParseError {
    #[error("expected poly:c0,c1,... or const:k, got {0:?}")]
    UnknownForm(String),
    #[error("malformed coefficient {0:?}")]
    MalformedCoefficient(String),
    #[error("malformed constant {0:?}")]
    MalformedConstant(String),
    #[error(transparent)]
    Invalid(#[from] ParamFunctionError),
}

impl FromStr for ParamFunction {
    type Err = ParamParseError;

    /// `poly:c0,c1,...,cm` (c0 must be 0) or `const:k` (k >= 1 integer).
    /// `poly:0,1` is the identity, `const:1` the bottleneck distance.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(list) = s.strip_prefix("poly:") {
            let coefficients = list
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<f64>()
                        .map_err(|_| ParamParseError::MalformedCoefficient(tok.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(ParamFunction::polynomial(coefficients)?)
        } else if let Some(k) = s.strip_prefix("const:") {
            let k: u64 = k
                .trim()
                .parse()
                .map_err(|_| ParamParseError::MalformedConstant(k.to_string()))?;
            Ok(ParamFunction::constant(k)?)
        } else {
            Err(ParamParseError::UnknownForm(s.to_string()))
        }
    }
}

/// The candidate set `T` of Algorithm-style search: geometric candidates
/// plus, for invertible `f`, the preimages of `0..=|X₀|+|Y₀|`.
pub(crate) fn search_candidates(
    x: &PersistenceDiagram,
    y: &PersistenceDiagram,
    f: &ParamFunction,
    metric: GroundMetric,
) -> Vec<f64> {
    let mut t = candidate_distances(x, y, metric);
    if f.is_metric() {
        let cap = x.off_diagonal().count() + y.off_diagonal().count();
        for k in 0..=cap {
            t.push(f.inverse(k as f64).expect("polynomial is invertible"));
        }
        t.sort_unstable_by(f64::total_cmp);
        t.dedup();
    }
    t
}

/// `π_f(X, Y)`: binary search for the first candidate in the passing region.
/// Returns 0 when the predicate already holds at `t = 0`.
pub fn prokhorov_distance(
    x: &PersistenceDiagram,
    y: &PersistenceDiagram,
    f: &ParamFunction,
    metric: GroundMetric,
) -> f64 {
    let candidates = search_candidates(x, y, f, metric);
    // D is nonincreasing and f nondecreasing, so the predicate is monotone:
    // once it passes it keeps passing.
    let mut lo = 0usize;
    let mut hi = candidates.len();
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        let t = candidates[mid];
        if f.admits(profile_value(x, y, t, metric), t) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    debug_assert!(
        lo < candidates.len(),
        "the predicate always passes at the largest candidate"
    );
    candidates[lo]
}

/// `inf{t > 0 : D(t) < k}`, the k-th bottleneck; `k = 1` is the bottleneck
/// distance.
///
/// # Panics
/// If `k < 1`.
pub fn kth_bottleneck(
    x: &PersistenceDiagram,
    y: &PersistenceDiagram,
    k: u64,
    metric: GroundMetric,
) -> f64 {
    let f = ParamFunction::constant(k).expect("k must be at least 1");
    prokhorov_distance(x, y, &f, metric)
}
