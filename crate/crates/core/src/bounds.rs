//! Closed-form order and degree bounds, exact values for named families, and
//! a lower bound on the neighbor-locating chromatic number of any graph.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{classify, ClassKind, FamilySpec, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("k = {k} is below the minimum {min} for this quantity")]
    KTooSmall { k: u64, min: u64 },
    #[error("maximum degree {delta} must lie in 1..={max} (k - 1)")]
    DeltaOutOfRange { delta: u64, max: u64 },
    #[error("no closed form for {0}")]
    Unsupported(String),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

fn require_k(k: u64, min: u64) -> Result<(), BoundsError> {
    if k < min {
        Err(BoundsError::KTooSmall { k, min })
    } else {
        Ok(())
    }
}

pub fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Maximum number of color-degree-1 vertices in a k-NL-coloring: `k(k-1)`.
pub fn a1(k: u64) -> Result<u64, BoundsError> {
    require_k(k, 3)?;
    Ok(k * (k - 1))
}

/// Maximum number of color-degree-2 vertices: `k(k-1)(k-2)/2`.
pub fn a2(k: u64) -> Result<u64, BoundsError> {
    require_k(k, 3)?;
    Ok(k * (k - 1) * (k - 2) / 2)
}

/// `ℓ(k) = a1(k) + a2(k) = (k³ - k²)/2`, the largest order of a graph of
/// maximum degree 2 with a k-NL-coloring.
pub fn ell(k: u64) -> Result<u64, BoundsError> {
    require_k(k, 3)?;
    Ok((k * k * k - k * k) / 2)
}

pub(crate) fn unicyclic_order(k: u64) -> u64 {
    (k * k * k + k * k - 2 * k) / 2
}

pub(crate) fn tree_order(k: u64) -> u64 {
    (k * k * k + k * k - 2 * k - 4) / 2
}

/// Order bound for a graph admitting a k-NL-coloring: `k(2^(k-1) - 1)`, or
/// `k * sum_{j=1..Δ} C(k-1, j)` when the maximum degree `Δ <= k - 1` is given.
pub fn max_order(k: u64, max_degree: Option<u64>) -> Result<u64, BoundsError> {
    require_k(k, 2)?;
    match max_degree {
        None => Ok(k * ((1u64 << (k - 1)) - 1)),
        Some(delta) => {
            if delta == 0 || delta > k - 1 {
                return Err(BoundsError::DeltaOutOfRange { delta, max: k - 1 });
            }
            Ok(k * (1..=delta).map(|j| binomial(k - 1, j)).sum::<u64>())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderClass {
    Unicyclic,
    Tree,
}

pub fn class_order_bound(k: u64, class: OrderClass) -> Result<u64, BoundsError> {
    require_k(k, 3)?;
    Ok(match class {
        OrderClass::Unicyclic => unicyclic_order(k),
        OrderClass::Tree => tree_order(k),
    })
}

/// Maximum degree of a tree with a k-NL-coloring: `(k-1)² + (k-1)/2`, floored.
pub fn tree_max_degree(k: u64) -> Result<u64, BoundsError> {
    require_k(k, 2)?;
    Ok((k - 1) * (k - 1) + (k - 1) / 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundsReport {
    pub k: u64,
    pub a1: u64,
    pub a2: u64,
    pub ell: u64,
    pub general_max_order: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_bounded_max_order: Option<u64>,
    pub unicyclic_max_order: u64,
    pub tree_max_order: u64,
    pub tree_max_degree: u64,
}

pub fn bounds_report(k: u64, max_degree: Option<u64>) -> Result<BoundsReport, BoundsError> {
    require_k(k, 3)?;
    Ok(BoundsReport {
        k,
        a1: a1(k)?,
        a2: a2(k)?,
        ell: ell(k)?,
        general_max_order: max_order(k, None)?,
        degree_bounded_max_order: max_degree.map(|d| max_order(k, Some(d))).transpose()?,
        unicyclic_max_order: class_order_bound(k, OrderClass::Unicyclic)?,
        tree_max_order: class_order_bound(k, OrderClass::Tree)?,
        tree_max_degree: tree_max_degree(k)?,
    })
}

/// Smallest `k` admitted by every order bound that applies to `g`.
pub fn chi_lower_bound(g: &Graph) -> usize {
    let n = g.n() as u64;
    if n == 1 {
        return 1;
    }
    let delta = g.max_degree() as u64;
    let class = classify(g).kind;
    let admits = |k: u64| -> bool {
        if n > max_order(k, None).unwrap_or(0) {
            return false;
        }
        if delta < k && n > max_order(k, Some(delta)).unwrap_or(0) {
            return false;
        }
        if k >= 3 {
            let class_bound = match class {
                ClassKind::Path | ClassKind::Caterpillar | ClassKind::TreeGeneral => {
                    Some(tree_order(k))
                }
                ClassKind::Unicyclic | ClassKind::Cycle => Some(unicyclic_order(k)),
                ClassKind::Other => None,
            };
            if class_bound.is_some_and(|b| n > b) {
                return false;
            }
            if delta == 2 && n > ell(k).unwrap_or(0) {
                return false;
            }
        }
        true
    };
    (2..)
        .find(|&k| admits(k))
        .expect("the general bound grows without limit") as usize
}

/// The `k >= 4` with `ℓ(k-1) < n <= ℓ(k)`, for `n >= 10`.
pub fn bracket(n: u64) -> u64 {
    debug_assert!(n >= 10);
    (4..)
        .find(|&k| n <= (k * k * k - k * k) / 2)
        .expect("ℓ is unbounded")
}

fn chi_path(n: u64) -> u64 {
    match n {
        2 => 2,
        3..=9 => 3,
        _ => bracket(n),
    }
}

fn chi_cycle(n: u64) -> u64 {
    match n {
        3 | 5 | 7 | 9 => 3,
        4 | 6 | 8 => 4,
        _ => {
            let k = bracket(n);
            if n + 1 == (k * k * k - k * k) / 2 {
                k + 1
            } else {
                k
            }
        }
    }
}

/// Exact neighbor-locating chromatic number of a named family instance.
pub fn chi_closed_form(spec: &FamilySpec) -> Result<usize, BoundsError> {
    spec.validate()?;
    let chi = match *spec {
        FamilySpec::Path(n) => chi_path(n as u64),
        FamilySpec::Cycle(n) => chi_cycle(n as u64),
        FamilySpec::Fan(n) => chi_path(n as u64 - 1) + 1,
        FamilySpec::Wheel(n) => chi_cycle(n as u64 - 1) + 1,
        FamilySpec::Star(n) => n as u64,
        FamilySpec::DoubleStar { s, .. } => s as u64 + 1,
        FamilySpec::UnicyclicU(k) | FamilySpec::CaterpillarT(k) => k as u64,
        FamilySpec::Comb(_) => return Err(BoundsError::Unsupported(spec.to_string())),
    };
    Ok(chi as usize)
}
