//! Simultaneous decompositions along several simple roots: the conjugated
//! stabilizer elements `u_i = w_{alpha_i} w0^(i) w_{alpha_i}`, their pairwise
//! commutation, the `2^k` summand labels, and the Dynkin-diagram pair
//! enumeration.
//!
//! Ground truth for a configuration is always matrix commutation of the
//! `u_i`. The graph mode reproduces the published ball-condition enumeration
//! and is heuristic: it filters vertex pairs by diagram distance conditions
//! before running the same exact validation.

use crate::error::Error;
use crate::rootsys::{Mark, RootDatum, Weight};
use crate::weyl::{self, WeylElement};
use crate::Result;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// How vertex pairs are selected in [`enumerate_pairs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairMode {
    /// Closed 1-balls of the two vertices disjoint; configurations kept by
    /// exact matrix commutation.
    DirectCommutation,
    /// The published diagram-distance conditions (rank at least 5); labeled
    /// heuristic, validated by the same matrix checks afterwards.
    GraphConditions,
}

impl PairMode {
    pub fn parse(s: &str) -> Result<PairMode> {
        match s {
            "direct" | "direct-commutation" => Ok(PairMode::DirectCommutation),
            "graph" | "graph-conditions" => Ok(PairMode::GraphConditions),
            other => Err(Error::Parse(format!("unknown pair mode {other:?}"))),
        }
    }
}

/// Per-root data of a simultaneous configuration.
#[derive(Debug, Clone)]
pub struct RootPiece {
    pub alpha: usize,
    pub s_set: Vec<usize>,
    pub w0: WeylElement,
    /// `w_alpha . w0 . w_alpha`.
    pub u: WeylElement,
}

/// A simultaneous configuration for `Theta = {alpha_1, ..., alpha_k}`.
#[derive(Debug, Clone)]
pub struct MultiConfig {
    pub theta: Vec<usize>,
    pub pieces: Vec<RootPiece>,
    pub lambda0: Weight,
    /// Pairwise commutation of the `u_i` action matrices.
    pub commuting: bool,
}

impl MultiConfig {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "theta": self.theta,
            "lambda0": self.lambda0.render(),
            "commuting": self.commuting,
            "pieces": self.pieces.iter().map(|p| serde_json::json!({
                "alpha": p.alpha,
                "s_set": p.s_set,
                "w0": p.w0.to_string(),
                "u": p.u.to_string(),
            })).collect::<Vec<_>>(),
        })
    }

    /// Marked-diagram rendering: filled nodes for Theta, crosses for the
    /// union of the stabilizing sets.
    pub fn render_dynkin(&self, datum: &RootDatum) -> Result<String> {
        let mut marks: Vec<(usize, Mark)> =
            self.theta.iter().map(|&a| (a, Mark::Alpha)).collect();
        for p in &self.pieces {
            for &b in &p.s_set {
                marks.push((b, Mark::InS));
            }
        }
        datum.render_dynkin(&marks)
    }
}

/// The conjugated stabilizer element `w_alpha . w0 . w_alpha`.
pub fn u_element(datum: &RootDatum, alpha: usize, w0: &WeylElement) -> Result<WeylElement> {
    datum.validate_index(alpha)?;
    if w0.is_identity() {
        return Err(Error::IdentityW0);
    }
    let w_alpha = weyl::simple_reflection(datum, alpha)?;
    weyl::compose(&weyl::compose(&w_alpha, w0)?, &w_alpha)
}

/// Pairwise commutation of the `u_i` for a list of `(alpha_i, w0^(i))`.
pub fn commuting_check(datum: &RootDatum, entries: &[(usize, WeylElement)]) -> Result<bool> {
    if entries.len() < 2 {
        return Err(Error::TooFewEntries);
    }
    for (pos, (alpha, _)) in entries.iter().enumerate() {
        if entries[..pos].iter().any(|(a, _)| a == alpha) {
            return Err(Error::DuplicateRoot { index: *alpha });
        }
    }
    let us: Result<Vec<WeylElement>> = entries
        .iter()
        .map(|(a, w)| u_element(datum, *a, w))
        .collect();
    let us = us?;
    for i in 0..us.len() {
        for j in i + 1..us.len() {
            if !weyl::commutes(&us[i], &us[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One of the `2^k` summands: the subset `x` of positions (1-based into
/// `theta`) carrying the trivial factor, everything else the special one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandLabel {
    pub x: Vec<usize>,
    /// `(node, is_trivial)` per root of Theta, in Theta order.
    pub factors: Vec<(usize, bool)>,
    pub chi0: Weight,
    pub label: String,
}

/// Enumerate the `2^k` summand labels for `Theta` at `lambda0`; the common
/// twist is `chi0 = lambda0 - sum of rho_M(alpha_i)`.
pub fn summand_labels(
    datum: &RootDatum,
    theta: &[usize],
    lambda0: &Weight,
) -> Result<Vec<SummandLabel>> {
    for &a in theta {
        datum.validate_index(a)?;
    }
    let mut chi = lambda0.clone();
    for &a in theta {
        chi = chi.sub(&datum.rho_m(a)?);
    }
    let k = theta.len();
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u32..(1 << k) {
        let mut x = Vec::new();
        let mut factors = Vec::new();
        let mut parts = Vec::new();
        for (pos, &node) in theta.iter().enumerate() {
            let trivial = mask & (1 << pos) != 0;
            if trivial {
                x.push(pos + 1);
            }
            factors.push((node, trivial));
            parts.push(format!("{}{}", if trivial { "tr" } else { "St" }, node));
        }
        let label = if parts.is_empty() {
            format!("tr ⊗ {}", chi.render())
        } else {
            format!("{} ⊗ {}", parts.join(" ⊗ "), chi.render())
        };
        out.push(SummandLabel {
            x,
            factors,
            chi0: chi.clone(),
            label,
        });
    }
    Ok(out)
}

/// Is `{alpha} ∪ s` a connected subdiagram?
fn piece_connected(datum: &RootDatum, alpha: usize, s: &[usize]) -> bool {
    let mut nodes: Vec<usize> = s.to_vec();
    nodes.push(alpha);
    let mut reached = vec![alpha];
    let mut frontier = vec![alpha];
    while let Some(x) = frontier.pop() {
        for y in datum.neighbours(x) {
            if nodes.contains(&y) && !reached.contains(&y) {
                reached.push(y);
                frontier.push(y);
            }
        }
    }
    reached.len() == nodes.len()
}

/// All subsets of the nodes outside `excluded` that contain at least one
/// neighbour of `alpha` and form a connected subdiagram together with
/// `alpha` (the pieces of the enumeration are sub-diagrams), in
/// lexicographic order.
fn admissible_s_sets(datum: &RootDatum, alpha: usize, excluded: &[usize]) -> Vec<Vec<usize>> {
    let pool: Vec<usize> = (1..=datum.rank)
        .filter(|i| !excluded.contains(i))
        .collect();
    let mut out = Vec::new();
    for mask in 1u32..(1 << pool.len()) {
        let s: Vec<usize> = pool
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask & (1 << bit) != 0)
            .map(|(_, &node)| node)
            .collect();
        if s.iter().any(|&b| datum.are_adjacent(b, alpha)) && piece_connected(datum, alpha, &s) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Validate one root of a merged configuration: `S` must pair to zero with
/// `lambda' = w_alpha . lambda0`, the product of its reflections must
/// stabilize `lambda'` without commuting with `w_alpha`, and `lambda'` must
/// be antidominant away from the other marked root (the Levi-restricted
/// condition).
fn validate_piece(
    datum: &RootDatum,
    lambda0: &Weight,
    alpha: usize,
    s_set: &[usize],
    other: usize,
) -> Option<RootPiece> {
    let w_alpha = weyl::simple_reflection(datum, alpha).ok()?;
    let lambda_prime = w_alpha.apply(lambda0).ok()?;
    if !s_set.iter().all(|&b| lambda_prime.coords[b - 1].is_zero()) {
        return None;
    }
    let w0 = weyl::from_word(datum, s_set).ok()?;
    if w0.is_identity() || w0.apply(&lambda_prime).ok()? != lambda_prime {
        return None;
    }
    if weyl::commutes(&w0, &w_alpha).ok()? {
        return None;
    }
    for i in 1..=datum.rank {
        if i != other && lambda_prime.coords[i - 1].is_positive() {
            return None;
        }
    }
    let u = u_element(datum, alpha, &w0).ok()?;
    Some(RootPiece {
        alpha,
        s_set: s_set.to_vec(),
        w0,
        u,
    })
}

/// Merged base point for a pair: `sum over Theta of (alpha_k - omega_k)`
/// minus the fundamental weight of every remaining free node.
fn merged_lambda0(datum: &RootDatum, theta: &[usize], s_union: &[usize]) -> Result<Weight> {
    let mut lambda0 = Weight::zero(datum.rank);
    for &a in theta {
        lambda0 = lambda0
            .add(&datum.simple_root_as_weight(a)?)
            .sub(&Weight::fundamental(datum.rank, a));
    }
    for b in 1..=datum.rank {
        if !theta.contains(&b) && !s_union.contains(&b) {
            lambda0 = lambda0.sub(&Weight::fundamental(datum.rank, b));
        }
    }
    Ok(lambda0)
}

fn ball_disjoint_pairs(datum: &RootDatum) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=datum.rank {
        for j in i + 1..=datum.rank {
            if datum.ball(i, 1).is_disjoint(&datum.ball(j, 1)) {
                out.push((i, j));
            }
        }
    }
    out
}

fn graph_condition_pairs(datum: &RootDatum) -> Result<Vec<(usize, usize)>> {
    if datum.rank < 5 {
        return Err(Error::RankTooSmall {
            rank: datum.rank,
            needed: "the diagram-distance conditions assume rank at least 5",
        });
    }
    let mut out = Vec::new();
    for (i, j) in ball_disjoint_pairs(datum) {
        // Some node of the two closed 1-balls must survive removal of the
        // marked vertices and of the shared part of the closed 2-balls.
        let b1i = datum.ball(i, 1);
        let b1j = datum.ball(j, 1);
        let b2i = datum.ball(i, 2);
        let b2j = datum.ball(j, 2);
        let survivor = b1i.union(&b1j).any(|&v| {
            v != i && v != j && !(b2i.contains(&v) && b2j.contains(&v))
        });
        if survivor {
            out.push((i, j));
        }
    }
    Ok(out)
}

/// Enumerate vertex-pair configurations.
///
/// For each admissible vertex pair, every disjoint pair of stabilizing sets
/// is validated exactly; only maximal passing pairs of sets are kept. The
/// result is ordered lexicographically by `(theta, S_1, S_2)`.
pub fn enumerate_pairs(datum: &RootDatum, mode: PairMode) -> Result<Vec<MultiConfig>> {
    let pairs = match mode {
        PairMode::DirectCommutation => ball_disjoint_pairs(datum),
        PairMode::GraphConditions => graph_condition_pairs(datum)?,
    };
    let mut out = Vec::new();
    for (i, j) in pairs {
        let mut passing: Vec<(Vec<usize>, Vec<usize>, MultiConfig)> = Vec::new();
        for s1 in admissible_s_sets(datum, i, &[i, j]) {
            for s2 in admissible_s_sets(datum, j, &[i, j]) {
                if s1.iter().any(|b| s2.contains(b)) {
                    continue;
                }
                let union: Vec<usize> = s1.iter().chain(&s2).copied().collect();
                let lambda0 = merged_lambda0(datum, &[i, j], &union)?;
                let Some(p1) = validate_piece(datum, &lambda0, i, &s1, j) else {
                    continue;
                };
                let Some(p2) = validate_piece(datum, &lambda0, j, &s2, i) else {
                    continue;
                };
                if !weyl::commutes(&p1.u, &p2.u)? {
                    continue;
                }
                passing.push((
                    s1.clone(),
                    s2.clone(),
                    MultiConfig {
                        theta: vec![i, j],
                        pieces: vec![p1, p2],
                        lambda0,
                        commuting: true,
                    },
                ));
            }
        }
        let maximal: Vec<&(Vec<usize>, Vec<usize>, MultiConfig)> = passing
            .iter()
            .filter(|(a, b, _)| {
                !passing.iter().any(|(a2, b2, _)| {
                    (a2 != a || b2 != b)
                        && a.iter().all(|x| a2.contains(x))
                        && b.iter().all(|x| b2.contains(x))
                })
            })
            .collect();
        for (_, _, cfg) in maximal {
            out.push(cfg.clone());
        }
    }
    out.sort_by_key(|c| {
        (
            c.theta.clone(),
            c.pieces.iter().map(|p| p.s_set.clone()).collect::<Vec<_>>(),
        )
    });
    Ok(out)
}

/// Published diagram lists for the exceptional types, as vertex-pair
/// multiplicities (repeated pairs encode distinct maximal set choices).
/// Used for warn-level comparison only.
pub fn reference_pair_multiplicities(datum: &RootDatum) -> Option<BTreeMap<(usize, usize), usize>> {
    use crate::rootsys::Family;
    let table: &[((usize, usize), usize)] = match (datum.family, datum.rank) {
        (Family::E, 6) => &[((1, 5), 1), ((1, 6), 1), ((3, 6), 1)],
        (Family::E, 7) => &[
            ((1, 5), 1),
            ((1, 6), 2),
            ((1, 7), 2),
            ((2, 6), 1),
            ((2, 7), 1),
            ((3, 6), 2),
            ((3, 7), 2),
            ((4, 7), 1),
        ],
        (Family::E, 8) => &[
            ((1, 5), 1),
            ((1, 6), 2),
            ((1, 7), 3),
            ((1, 8), 3),
            ((2, 6), 1),
            ((2, 7), 2),
            ((2, 8), 2),
            ((3, 7), 3),
            ((3, 8), 3),
            ((4, 7), 2),
            ((4, 8), 2),
            ((5, 8), 1),
        ],
        _ => return None,
    };
    Some(table.iter().copied().collect())
}

/// Compare an enumeration against the published list; returns warnings, one
/// per disagreeing vertex pair, or an empty list on exact agreement (or when
/// no reference exists).
pub fn compare_with_reference(datum: &RootDatum, configs: &[MultiConfig]) -> Vec<String> {
    let Some(reference) = reference_pair_multiplicities(datum) else {
        return Vec::new();
    };
    let mut got: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for c in configs {
        if let [i, j] = c.theta[..] {
            *got.entry((i, j)).or_insert(0) += 1;
        }
    }
    let mut warnings = Vec::new();
    let keys: std::collections::BTreeSet<(usize, usize)> =
        reference.keys().chain(got.keys()).copied().collect();
    for key in keys {
        let want = reference.get(&key).copied().unwrap_or(0);
        let have = got.get(&key).copied().unwrap_or(0);
        if want != have {
            warnings.push(format!(
                "pair {{{},{}}}: published list has {} configuration(s), enumeration found {}",
                key.0, key.1, want, have
            ));
        }
    }
    warnings
}

/// Truth value of the eigenvalue-free part of the simultaneous statement:
/// every summand twist is `lambda0` shifted by half the marked columns.
pub fn merged_chi0(datum: &RootDatum, theta: &[usize], lambda0: &Weight) -> Result<Weight> {
    let mut chi = lambda0.clone();
    for &a in theta {
        chi = chi.sub(&datum.rho_m(a)?);
    }
    Ok(chi)
}

/// Check that the `k = 1` labels degenerate to the two-summand picture.
pub fn singleton_matches_two_summands(datum: &RootDatum, alpha: usize, lambda0: &Weight) -> Result<bool> {
    let labels = summand_labels(datum, &[alpha], lambda0)?;
    let chi = crate::decomp::chi0(datum, lambda0, alpha)?;
    Ok(labels.len() == 2
        && labels.iter().any(|l| l.x.is_empty())
        && labels.iter().any(|l| l.x == vec![1])
        && labels.iter().all(|l| l.chi0 == chi))
}
