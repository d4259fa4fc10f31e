//! Scalar shadows of the standard intertwining operators: exponent profiles
//! over inversion sets, pole/zero orders along affine lines, and the rank-1
//! reducibility classification at the critical pairings ±1.
//!
//! No operator is ever materialized and no special function is evaluated.
//! The local zeta ratio `zeta(s)/zeta(s+1)` enters only through its order
//! profile on the rational axis: order −1 at `s = 0`, order +1 at `s = −1`,
//! order 0 elsewhere.

use crate::error::Error;
use crate::rootsys::{Rat, RootDatum, RootVec, Weight};
use crate::weyl::{self, WeylElement};
use crate::Result;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// An affine line `t -> base + t * direction` in weight space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineLine {
    pub base: Weight,
    pub direction: Weight,
}

impl AffineLine {
    /// The direction must be nonzero.
    pub fn new(base: Weight, direction: Weight) -> Result<AffineLine> {
        if direction.is_zero() {
            return Err(Error::Parse("line direction must be nonzero".into()));
        }
        if base.rank() != direction.rank() {
            return Err(Error::DimensionMismatch {
                expected: base.rank(),
                got: direction.rank(),
            });
        }
        Ok(AffineLine { base, direction })
    }

    /// The point at parameter `t`.
    pub fn at(&self, t: Rat) -> Weight {
        self.base.add(&self.direction.scale(t))
    }
}

/// One factor of the scalar product: an inversion root `gamma` with the
/// affine pairing `value + t * slope = <base + t v, gamma-check>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentEntry {
    pub root: RootVec,
    pub value: Rat,
    pub slope: Rat,
}

/// The full exponent profile of `(w, line)`: one entry per inversion root,
/// ordered by root height then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentProfile {
    pub entries: Vec<ExponentEntry>,
}

impl ExponentProfile {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self
            .entries
            .iter()
            .map(|e| {
                serde_json::json!({
                    "root": e.root.coords,
                    "value": e.value.to_string(),
                    "slope": e.slope.to_string(),
                })
            })
            .collect::<Vec<_>>())
    }
}

/// Exponent profile of the scalar attached to `w` along `line`: pairs each
/// inversion root with the value and slope of its pairing on the line.
pub fn gk_exponents(datum: &RootDatum, w: &WeylElement, line: &AffineLine) -> Result<ExponentProfile> {
    let mut entries = Vec::new();
    for gamma in weyl::inversion_set(datum, w) {
        let value = datum.pair(&line.base, &gamma.check())?;
        let slope = datum.pair(&line.direction, &gamma.check())?;
        entries.push(ExponentEntry {
            root: gamma,
            value,
            slope,
        });
    }
    Ok(ExponentProfile { entries })
}

/// Order at `t = 0` of the scalar attached to `w` along `line`: each factor
/// contributes −1 when its pairing vanishes at the base point (pole of the
/// zeta ratio) and +1 when it equals −1 there (zero of the zeta ratio).
///
/// A factor that is constantly 0 or constantly −1 along the whole line is
/// degenerate (the line lies inside a singular hyperplane) and is a typed
/// error, not an order.
pub fn c_function_order_along(
    datum: &RootDatum,
    w: &WeylElement,
    line: &AffineLine,
) -> Result<i64> {
    let profile = gk_exponents(datum, w, line)?;
    let mut order = 0i64;
    let minus_one = -Rat::one();
    for e in &profile.entries {
        let critical = e.value.is_zero() || e.value == minus_one;
        if critical && e.slope.is_zero() {
            return Err(Error::DegenerateFactor {
                root: e.root.to_string(),
                value: e.value.to_string(),
            });
        }
        if e.value.is_zero() {
            order -= 1;
        } else if e.value == minus_one {
            order += 1;
        }
    }
    Ok(order)
}

/// Same order computed for the normalized scalar (numerator and denominator
/// of each zeta ratio swapped); always the negation of the unnormalized
/// order when both are defined.
pub fn normalized_order_along(
    datum: &RootDatum,
    w: &WeylElement,
    line: &AffineLine,
) -> Result<i64> {
    c_function_order_along(datum, w, line).map(|o| -o)
}

/// Reducibility class of one inversion root at a base point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CriticalClass {
    /// Pairing +1: the rank-1 operator has a simple pole (quotient locus).
    SimplePole,
    /// Pairing −1: holomorphic but non-invertible (kernel is the rank-1
    /// special representation).
    ReducibleRegular,
    /// Any other pairing: invertible factor.
    Regular,
}

/// Classify every inversion root of `w` at the point `lambda0`.
pub fn normalized_critical_roots(
    datum: &RootDatum,
    w: &WeylElement,
    lambda0: &Weight,
) -> Result<Vec<(RootVec, CriticalClass)>> {
    let one = Rat::one();
    weyl::inversion_set(datum, w)
        .into_iter()
        .map(|gamma| {
            let v = datum.pair(lambda0, &gamma.check())?;
            let class = if v == one {
                CriticalClass::SimplePole
            } else if v == -one {
                CriticalClass::ReducibleRegular
            } else {
                CriticalClass::Regular
            };
            Ok((gamma, class))
        })
        .collect()
}

/// Deterministic battery of rational test points used by the cocycle check.
fn test_battery(rank: usize) -> Vec<Weight> {
    let mut battery = vec![Weight::new(vec![Rat::one(); rank])];
    for i in 1..=rank {
        battery.push(Weight::fundamental(rank, i));
        battery.push(Weight::fundamental(rank, i).neg());
    }
    battery.push(Weight::new(
        (0..rank).map(|i| Rat::new(1, i as i64 + 2)).collect(),
    ));
    battery.push(Weight::new(
        (0..rank)
            .map(|i| Rat::new(if i % 2 == 0 { -(i as i64) - 1 } else { i as i64 + 2 }, 1))
            .collect(),
    ));
    battery
}

fn exponent_multiset(
    datum: &RootDatum,
    w: &WeylElement,
    lambda: &Weight,
) -> Result<BTreeMap<Rat, usize>> {
    let mut out = BTreeMap::new();
    for gamma in weyl::inversion_set(datum, w) {
        let v = datum.pair(lambda, &gamma.check())?;
        *out.entry(v).or_insert(0) += 1;
    }
    Ok(out)
}

/// Multiset form of the cocycle identity for a length-additive pair: for
/// every battery point `lambda`, the exponents of `(ww', lambda)` are the
/// disjoint union of those of `(w, w'.lambda)` and `(w', lambda)`.
///
/// Errors when the lengths do not add (the identity is only asserted there).
pub fn cocycle_multiset_check(
    datum: &RootDatum,
    w: &WeylElement,
    w2: &WeylElement,
) -> Result<bool> {
    let prod = weyl::compose(w, w2)?;
    let (lw, lw2, lp) = (
        weyl::length(datum, w),
        weyl::length(datum, w2),
        weyl::length(datum, &prod),
    );
    if lp != lw + lw2 {
        return Err(Error::LengthsDoNotAdd {
            len_w: lw,
            len_w2: lw2,
            len_prod: lp,
        });
    }
    for lambda in test_battery(datum.rank) {
        let lhs = exponent_multiset(datum, &prod, &lambda)?;
        let moved = w2.apply(&lambda)?;
        let mut rhs = exponent_multiset(datum, w, &moved)?;
        for (v, c) in exponent_multiset(datum, w2, &lambda)? {
            *rhs.entry(v).or_insert(0) += c;
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
