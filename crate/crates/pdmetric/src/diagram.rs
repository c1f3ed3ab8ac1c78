//! Persistence diagrams, ground metrics and the diagram text format.
//!
//! A diagram is a finite multiset of planar points `(birth, death)` with
//! `death >= birth`; multiplicity is encoded by repetition. The off-diagonal
//! view `X₀` keeps the points with `death > birth` strictly, and each of them
//! projects to its nearest diagonal point `((b+d)/2, (b+d)/2)`. Distances in
//! the plane are taken in an L_p norm, L_∞ by default.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A point of a persistence diagram.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanePoint {
    birth: f64,
    death: f64,
}

/// Violations of the per-point invariants.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum PointError {
    #[error("death {death} is less than birth {birth}")]
    DeathBeforeBirth { birth: f64, death: f64 },
    #[error("non-finite coordinate ({birth}, {death})")]
    NonFinite { birth: f64, death: f64 },
}

impl PlanePoint {
    /// Builds a point, rejecting non-finite coordinates and `death < birth`.
    ///
    /// Points with infinite death (essential classes) are rejected rather
    /// than silently mis-measured.
    pub fn new(birth: f64, death: f64) -> Result<Self, PointError> {
        if !birth.is_finite() || !death.is_finite() {
            return Err(PointError::NonFinite { birth, death });
        }
        if death < birth {
            return Err(PointError::DeathBeforeBirth { birth, death });
        }
        Ok(Self { birth, death })
    }

    pub fn birth(&self) -> f64 {
        self.birth
    }

    pub fn death(&self) -> f64 {
        self.death
    }

    /// Lifetime `death - birth`; zero exactly on the diagonal.
    pub fn persistence(&self) -> f64 {
        self.death - self.birth
    }

    pub fn is_off_diagonal(&self) -> bool {
        self.death > self.birth
    }

    /// The nearest diagonal point `((b+d)/2, (b+d)/2)`. Idempotent.
    pub fn diagonal_projection(&self) -> PlanePoint {
        let mid = 0.5 * (self.birth + self.death);
        PlanePoint {
            birth: mid,
            death: mid,
        }
    }

    /// Distance to the diagonal, i.e. to `diagonal_projection` under `metric`.
    pub fn diagonal_distance(&self, metric: GroundMetric) -> f64 {
        metric.distance(*self, self.diagonal_projection())
    }

    pub(crate) fn coords(&self) -> [f64; 2] {
        [self.birth, self.death]
    }
}

/// The L_p norm on the plane used for point-to-point distances.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub enum GroundMetric {
    /// `max(|Δb|, |Δd|)`, the convention under which the distance to the
    /// diagonal is `(death - birth) / 2`.
    #[default]
    LInfinity,
    /// `(|Δb|^p + |Δd|^p)^(1/p)` for a finite order `p >= 1`.
    Lp(f64),
}

fn lp_norm(a: f64, b: f64, p: f64) -> f64 {
    if p == 1.0 {
        a + b
    } else if p == 2.0 {
        a.hypot(b)
    } else {
        (a.powf(p) + b.powf(p)).powf(1.0 / p)
    }
}

/// Rejected metric orders (`p < 1` or non-finite).
#[derive(Debug, Clone, Error, PartialEq)]
#[error("ground metric order must be >= 1 or \"inf\", got {order}")]
pub struct InvalidOrder {
    pub order: f64,
}

impl GroundMetric {
    pub fn lp(order: f64) -> Result<Self, InvalidOrder> {
        if !order.is_finite() || order < 1.0 {
            return Err(InvalidOrder { order });
        }
        Ok(GroundMetric::Lp(order))
    }

    /// `‖a - b‖` under this norm; symmetric, zero iff `a == b`.
    pub fn distance(&self, a: PlanePoint, b: PlanePoint) -> f64 {
        self.distance_coords(a.coords(), b.coords())
    }

    pub(crate) fn distance_coords(&self, a: [f64; 2], b: [f64; 2]) -> f64 {
        let db = (a[0] - b[0]).abs();
        let dd = (a[1] - b[1]).abs();
        match *self {
            GroundMetric::LInfinity => db.max(dd),
            GroundMetric::Lp(p) => lp_norm(db, dd, p),
        }
    }

    /// Lower bound for the distance from `q` to any point of the axis-aligned
    /// box `[lo, hi]`; used for search pruning.
    pub(crate) fn distance_to_box(&self, q: [f64; 2], lo: [f64; 2], hi: [f64; 2]) -> f64 {
        let g0 = (lo[0] - q[0]).max(q[0] - hi[0]).max(0.0);
        let g1 = (lo[1] - q[1]).max(q[1] - hi[1]).max(0.0);
        match *self {
            GroundMetric::LInfinity => g0.max(g1),
            GroundMetric::Lp(p) => lp_norm(g0, g1, p),
        }
    }
}

impl fmt::Display for GroundMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundMetric::LInfinity => write!(f, "inf"),
            GroundMetric::Lp(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for GroundMetric {
    type Err = InvalidOrder;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "infinity" | "oo" => Ok(GroundMetric::LInfinity),
            other => {
                let order: f64 = other.parse().map_err(|_| InvalidOrder { order: f64::NAN })?;
                GroundMetric::lp(order)
            }
        }
    }
}

/// A finite multiset of plane points; repetition encodes multiplicity.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PersistenceDiagram {
    points: Vec<PlanePoint>,
}

/// Errors of the diagram text format, each tagged with a 1-based line number.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ParseError {
    #[error("line {line}: expected two coordinates, found {found}")]
    FieldCount { line: usize, found: usize },
    #[error("line {line}: malformed number {token:?}")]
    MalformedNumber { line: usize, token: String },
    #[error("line {line}: {source}")]
    InvalidPoint {
        line: usize,
        #[source]
        source: PointError,
    },
}

impl PersistenceDiagram {
    pub fn new(points: Vec<PlanePoint>) -> Self {
        Self { points }
    }

    /// Convenience constructor from `(birth, death)` pairs.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self, PointError> {
        let points = pairs
            .iter()
            .map(|&(b, d)| PlanePoint::new(b, d))
            .collect::<Result<_, _>>()?;
        Ok(Self { points })
    }

    /// Parses the diagram text format: one `birth<sep>death` pair per line,
    /// separated by whitespace or a comma; `#` starts a comment line and
    /// blank lines are ignored. Repeated lines yield repeated points.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut points = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = content
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|f| !f.is_empty())
                .collect();
            if fields.len() != 2 {
                return Err(ParseError::FieldCount {
                    line,
                    found: fields.len(),
                });
            }
            let mut coords = [0.0f64; 2];
            for (slot, token) in coords.iter_mut().zip(&fields) {
                *slot = token.parse().map_err(|_| ParseError::MalformedNumber {
                    line,
                    token: token.to_string(),
                })?;
            }
            let point = PlanePoint::new(coords[0], coords[1])
                .map_err(|source| ParseError::InvalidPoint { line, source })?;
            points.push(point);
        }
        Ok(Self { points })
    }

    /// Serializes back into the text format; `parse ∘ to_text` is the identity.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            out.push_str(&format!("{:?} {:?}\n", p.birth, p.death));
        }
        out
    }

    pub fn points(&self) -> &[PlanePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The off-diagonal view `X₀`: points with `death > birth` strictly.
    /// Points exactly on the diagonal are metrically invisible.
    pub fn off_diagonal(&self) -> impl Iterator<Item = PlanePoint> + '_ {
        self.points.iter().copied().filter(PlanePoint::is_off_diagonal)
    }

    /// The projection view `X₀′`: nearest diagonal points of `X₀`, in order.
    pub fn diagonal_projections(&self) -> impl Iterator<Item = PlanePoint> + '_ {
        self.off_diagonal().map(|p| p.diagonal_projection())
    }
}

impl FromStr for PersistenceDiagram {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}
