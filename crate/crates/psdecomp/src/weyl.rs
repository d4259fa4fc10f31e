//! The Weyl group as words in simple reflections with an exact integer
//! matrix action on fundamental-weight coordinates.
//!
//! Element identity is identity of action matrices (the reflection
//! representation is faithful), so the word carried by an element is just a
//! witness, not its identity. Reduced words are recovered by descent
//! stripping; stabilizers of dominant/antidominant weights are standard
//! parabolic subgroups read off from the zero coordinates.

use crate::error::Error;
use crate::rootsys::{rat, Rat, RootDatum, RootVec, Weight};
use crate::Result;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{HashSet, VecDeque};
use std::fmt;

/// Default cap on full Weyl-group enumeration.
pub const ENUM_CAP_DEFAULT: u128 = 1_000_000;
/// Below this group order the lemma suites run exhaustively over W.
pub const EXHAUSTIVE_LEMMA_CAP: u128 = 10_000;

/// A Weyl-group element: a generator word plus its cached action matrix on
/// fundamental-weight coordinates.
#[derive(Debug, Clone)]
pub struct WeylElement {
    /// Generator indices (1-based), leftmost outermost: the rightmost
    /// generator is applied first.
    pub word: Vec<usize>,
    /// `n x n` integer matrix: `(w . lambda)_k = sum_j action[k][j] lambda_j`.
    pub action: Vec<Vec<i64>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_word(&self.word))
    }
}

/// Render a generator word in the compact `w134` style (identity: `e`).
/// Indices above 9 fall back to a bracketed comma form.
pub fn render_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    if word.iter().all(|&i| i <= 9) {
        let digits: String = word.iter().map(|i| i.to_string()).collect();
        format!("w{digits}")
    } else {
        let body = word
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("w[{body}]")
    }
}

/// Parse a digit-string word such as `134` (= `w1 w3 w4`).
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('w');
    if s.contains(',') || s.contains('[') {
        let s = s.trim_start_matches('[').trim_end_matches(']');
        return s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad generator index {p:?}")))
            })
            .collect();
    }
    s.chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as usize)
                .filter(|&d| d > 0)
                .ok_or_else(|| Error::Parse(format!("bad generator digit {c:?}")))
        })
        .collect()
}

fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let v = a[i][k];
            if v != 0 {
                for j in 0..n {
                    out[i][j] += v * b[k][j];
                }
            }
        }
    }
    out
}

/// The identity element.
pub fn identity(datum: &RootDatum) -> WeylElement {
    WeylElement {
        word: Vec::new(),
        action: identity_matrix(datum.rank),
    }
}

/// The simple reflection `s_i`: `lambda -> lambda - <lambda, alpha_i-check> alpha_i`.
pub fn simple_reflection(datum: &RootDatum, i: usize) -> Result<WeylElement> {
    datum.validate_index(i)?;
    let n = datum.rank;
    let mut m = identity_matrix(n);
    for (k, row) in m.iter_mut().enumerate() {
        row[i - 1] -= datum.cartan[k][i - 1];
    }
    Ok(WeylElement {
        word: vec![i],
        action: m,
    })
}

/// Build an element from a generator word (rightmost applied first).
pub fn from_word(datum: &RootDatum, word: &[usize]) -> Result<WeylElement> {
    let mut out = identity(datum);
    for &i in word {
        let s = simple_reflection(datum, i)?;
        out = compose(&out, &s)?;
    }
    Ok(out)
}

/// `compose(w, w')` acts as `w . w'` (`w'` applied first).
pub fn compose(w: &WeylElement, w2: &WeylElement) -> Result<WeylElement> {
    if w.action.len() != w2.action.len() {
        return Err(Error::DatumMismatch);
    }
    let mut word = w.word.clone();
    word.extend_from_slice(&w2.word);
    Ok(WeylElement {
        word,
        action: mat_mul(&w.action, &w2.action),
    })
}

/// Group inverse (generators are involutions, so the word reverses).
pub fn inverse(datum: &RootDatum, w: &WeylElement) -> WeylElement {
    let word: Vec<usize> = w.word.iter().rev().copied().collect();
    from_word(datum, &word).expect("word of an existing element is valid")
}

pub fn equals(w: &WeylElement, w2: &WeylElement) -> bool {
    w.action == w2.action
}

/// Commutation of action matrices.
pub fn commutes(w: &WeylElement, w2: &WeylElement) -> Result<bool> {
    if w.action.len() != w2.action.len() {
        return Err(Error::DatumMismatch);
    }
    Ok(mat_mul(&w.action, &w2.action) == mat_mul(&w2.action, &w.action))
}

impl WeylElement {
    pub fn is_identity(&self) -> bool {
        self.action == identity_matrix(self.action.len())
    }

    /// Apply to a weight in fundamental-weight coordinates.
    pub fn apply(&self, lambda: &Weight) -> Result<Weight> {
        let n = self.action.len();
        if lambda.rank() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: lambda.rank(),
            });
        }
        let coords = (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| Rat::from_integer(self.action[k][j]) * lambda.coords[j])
                    .sum()
            })
            .collect();
        Ok(Weight::new(coords))
    }

    /// Apply to a root, returning simple-root coordinates.
    pub fn apply_root(&self, datum: &RootDatum, root: &RootVec) -> Result<RootVec> {
        let as_weight = datum.root_as_weight(root)?;
        let image = self.apply(&as_weight)?;
        let coords_rat = datum.weight_in_root_coords(&image)?;
        let coords = coords_rat
            .iter()
            .map(|r| {
                debug_assert!(r.is_integer(), "root image must have integer coordinates");
                r.to_integer()
            })
            .collect();
        Ok(RootVec {
            coords,
            is_coroot: root.is_coroot,
        })
    }

    /// The linear form `lambda -> <w . lambda, alpha_a-check>` as a
    /// coefficient row (1-based simple index `a`).
    pub fn pairing_row(&self, a: usize) -> Vec<i64> {
        self.action[a - 1].clone()
    }
}

/// Bring a weight into the dominant chamber: returns `(lambda_dom, w)` with
/// `w . lambda = lambda_dom` and all coordinates of `lambda_dom >= 0`.
pub fn to_dominant_chamber(datum: &RootDatum, lambda: &Weight) -> Result<(Weight, WeylElement)> {
    let mut cur = lambda.clone();
    let mut w = identity(datum);
    loop {
        match cur.coords.iter().position(|c| c.is_negative()) {
            None => return Ok((cur, w)),
            Some(idx) => {
                let s = simple_reflection(datum, idx + 1)?;
                cur = s.apply(&cur)?;
                w = compose(&s, &w)?;
            }
        }
    }
}

/// Length = number of inversions.
pub fn length(datum: &RootDatum, w: &WeylElement) -> usize {
    inversion_set(datum, w).len()
}

/// `{gamma in Phi+ : w . gamma < 0}`, in the canonical positive-root order.
pub fn inversion_set(datum: &RootDatum, w: &WeylElement) -> Vec<RootVec> {
    datum
        .positive_roots
        .iter()
        .filter(|r| {
            let img = w.apply_root(datum, r).expect("same datum");
            !img.is_positive()
        })
        .cloned()
        .collect()
}

/// A reduced word for `w`, found by stripping descents.
pub fn reduced_word(datum: &RootDatum, w: &WeylElement) -> Vec<usize> {
    let mut cur = w.clone();
    let mut rev = Vec::new();
    'outer: while !cur.is_identity() {
        for i in 1..=datum.rank {
            let alpha = datum.simple_root(i).expect("valid index");
            let img = cur.apply_root(datum, &alpha).expect("same datum");
            if !img.is_positive() {
                let s = simple_reflection(datum, i).expect("valid index");
                cur = compose(&cur, &s).expect("same datum");
                rev.push(i);
                continue 'outer;
            }
        }
        unreachable!("non-identity element has a descent");
    }
    rev.reverse();
    rev
}

/// The longest element of W.
pub fn longest_element(datum: &RootDatum) -> WeylElement {
    let minus_rho = datum.rho().neg();
    let (_, w) = to_dominant_chamber(datum, &minus_rho).expect("terminates");
    let word = reduced_word(datum, &w);
    from_word(datum, &word).expect("valid word")
}

/// |W| by the standard order formulas.
pub fn weyl_order(datum: &RootDatum) -> u128 {
    use crate::rootsys::Family::*;
    let n = datum.rank as u32;
    let fact = |k: u32| -> u128 { (1..=u128::from(k)).product::<u128>().max(1) };
    match datum.family {
        A => fact(n + 1),
        B | C => 2u128.pow(n) * fact(n),
        D => 2u128.pow(n - 1) * fact(n),
        E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        F => 1_152,
        G => 12,
    }
}

/// Lazy breadth-first enumeration of W; each element exactly once.
pub struct WeylEnumeration<'a> {
    datum: &'a RootDatum,
    queue: VecDeque<(Vec<usize>, Vec<Vec<i64>>)>,
    visited: HashSet<Vec<i64>>,
}

impl<'a> Iterator for WeylEnumeration<'a> {
    type Item = WeylElement;

    fn next(&mut self) -> Option<WeylElement> {
        let (word, action) = self.queue.pop_front()?;
        for i in 1..=self.datum.rank {
            let s = simple_reflection(self.datum, i).expect("valid index");
            let next = mat_mul(&action, &s.action);
            let key = flatten(&next);
            if self.visited.insert(key) {
                let mut w = word.clone();
                w.push(i);
                self.queue.push_back((w, next));
            }
        }
        Some(WeylElement { word, action })
    }
}

fn flatten(m: &[Vec<i64>]) -> Vec<i64> {
    m.iter().flatten().copied().collect()
}

/// Enumerate W when its order does not exceed `cap`.
pub fn enumerate_weyl(datum: &RootDatum, cap: u128) -> Result<WeylEnumeration<'_>> {
    let order = weyl_order(datum);
    if order > cap {
        return Err(Error::EnumerationCap { order, cap });
    }
    let id = identity(datum);
    let mut visited = HashSet::new();
    visited.insert(flatten(&id.action));
    let mut queue = VecDeque::new();
    queue.push_back((Vec::new(), id.action));
    Ok(WeylEnumeration {
        datum,
        queue,
        visited,
    })
}

/// Enumerate the subgroup generated by `gens`, up to `cap` elements.
pub fn enumerate_subgroup(
    datum: &RootDatum,
    gens: &[WeylElement],
    cap: usize,
) -> Result<Vec<WeylElement>> {
    let id = identity(datum);
    let mut visited = HashSet::new();
    visited.insert(flatten(&id.action));
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::new();
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        for g in gens {
            let next = compose(&w, g)?;
            if visited.insert(flatten(&next.action)) {
                if out.len() >= cap {
                    return Err(Error::StabilizerCap { cap });
                }
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}

/// Description of the stabilizer of a weight.
#[derive(Debug, Clone)]
pub struct StabilizerDescription {
    /// Generators (conjugated simple reflections); every one fixes the weight.
    pub generators: Vec<WeylElement>,
    /// `c` with `c . lambda` dominant; generators are `c^-1 s_i c`.
    pub conjugator: WeylElement,
    /// Group order, when the generated parabolic is small enough to count.
    pub order: Option<u128>,
    /// For (anti)dominant weights: exactly the zero-pairing simple indices.
    pub generating_simple_set: Vec<usize>,
}

/// Stabilizer of `lambda` via the dominance algorithm: the stabilizer of a
/// dominant weight is the standard parabolic generated by the simple
/// reflections pairing to zero, and the general case conjugates into it.
pub fn stabilizer(datum: &RootDatum, lambda: &Weight) -> Result<StabilizerDescription> {
    let (simple_set, conjugator) = if lambda.is_dominant() || lambda.is_antidominant() {
        let zeros: Vec<usize> = (1..=datum.rank)
            .filter(|&i| lambda.coords[i - 1].is_zero())
            .collect();
        (zeros, identity(datum))
    } else {
        let (dom, c) = to_dominant_chamber(datum, lambda)?;
        let zeros: Vec<usize> = (1..=datum.rank)
            .filter(|&i| dom.coords[i - 1].is_zero())
            .collect();
        (zeros, c)
    };
    let c_inv = inverse(datum, &conjugator);
    let mut generators = Vec::new();
    for &i in &simple_set {
        let s = simple_reflection(datum, i)?;
        let g = compose(&compose(&c_inv, &s)?, &conjugator)?;
        debug_assert_eq!(g.apply(lambda)?, *lambda);
        generators.push(g);
    }
    let parabolic_gens: Result<Vec<WeylElement>> = simple_set
        .iter()
        .map(|&i| simple_reflection(datum, i))
        .collect();
    let order = enumerate_subgroup(datum, &parabolic_gens?, 1_000_000)
        .ok()
        .map(|v| v.len() as u128);
    Ok(StabilizerDescription {
        generators,
        conjugator,
        order,
        generating_simple_set: simple_set,
    })
}

/// One lemma's result within a [`LemmaReport`].
#[derive(Debug, Clone, Serialize)]
pub struct LemmaResult {
    pub name: String,
    pub cases: usize,
    pub counterexamples: usize,
    pub detail: Vec<String>,
}

/// Outcome of the root-system lemma property suite.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub datum: String,
    pub exhaustive: bool,
    pub elements_used: usize,
    pub seed: u64,
    pub lemmas: Vec<LemmaResult>,
}

impl LemmaReport {
    pub fn pass(&self) -> bool {
        self.lemmas.iter().all(|l| l.counterexamples == 0)
    }
}

fn random_element(datum: &RootDatum, rng: &mut ChaCha8Rng) -> WeylElement {
    let max_len = 2 * datum.positive_roots.len();
    let len = rng.gen_range(0..=max_len);
    let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=datum.rank)).collect();
    from_word(datum, &word).expect("valid word")
}

/// Property suite for four facts about root systems:
///
/// 1. if `w` commutes with `s_alpha` then `w(alpha) = ±alpha` (and the same
///    for the coroot);
/// 2. if `w` commutes with `s_alpha` then `<w s_alpha lambda, alpha-check> =
///    ±<lambda, alpha-check>` as linear forms;
/// 3. if the affine hyperplanes `{<s_alpha w s_alpha lambda, alpha-check>=1}`
///    and `{<lambda, alpha-check>=1}` coincide then `w` commutes with
///    `s_alpha`;
/// 4. an antidominant weight pairing to −1 with `alpha-check` pairs at most
///    `-(1/2)<alpha, beta-check>` with every other positive coroot.
///
/// Facts 1–3 run exhaustively over W when the group is small, otherwise over
/// seeded random words; fact 4 always uses seeded random antidominant
/// samples. Counterexamples are collected, never panicked on.
pub fn lemma_suite(datum: &RootDatum, sample_count: usize, seed: u64) -> LemmaReport {
    lemma_suite_with_cap(datum, sample_count, seed, EXHAUSTIVE_LEMMA_CAP)
}

/// [`lemma_suite`] with an explicit threshold for the exhaustive-vs-sampled
/// decision (exposed for cap overrides).
pub fn lemma_suite_with_cap(
    datum: &RootDatum,
    sample_count: usize,
    seed: u64,
    exhaustive_cap: u128,
) -> LemmaReport {
    let order = weyl_order(datum);
    let exhaustive = order <= exhaustive_cap;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let elements: Vec<WeylElement> = if exhaustive {
        enumerate_weyl(datum, exhaustive_cap)
            .expect("order checked")
            .collect()
    } else {
        (0..sample_count.max(1))
            .map(|_| random_element(datum, &mut rng))
            .collect()
    };

    let simple: Vec<(usize, WeylElement, RootVec)> = (1..=datum.rank)
        .map(|i| {
            (
                i,
                simple_reflection(datum, i).expect("valid"),
                datum.simple_root(i).expect("valid"),
            )
        })
        .collect();

    let mut l1 = LemmaResult {
        name: "commuting-reflection fixes the root line".into(),
        cases: 0,
        counterexamples: 0,
        detail: vec![],
    };
    let mut l2 = LemmaResult {
        name: "commuting-reflection pairing sign".into(),
        cases: 0,
        counterexamples: 0,
        detail: vec![],
    };
    let mut l3 = LemmaResult {
        name: "hyperplane equality forces commutation".into(),
        cases: 0,
        counterexamples: 0,
        detail: vec![],
    };

    for w in &elements {
        for (a, s_a, alpha) in &simple {
            let comm = commutes(w, s_a).expect("same datum");
            if comm {
                // Fact 1: the root and its coroot go to ±themselves.
                l1.cases += 1;
                let img = w.apply_root(datum, alpha).expect("same datum");
                let ok_root = img == *alpha || img == alpha.negated();
                let img_co = w.apply_root(datum, &alpha.check()).expect("same datum");
                let ok_coroot =
                    img_co == alpha.check() || img_co == alpha.check().negated();
                if !(ok_root && ok_coroot) {
                    l1.counterexamples += 1;
                    if l1.detail.len() < 5 {
                        l1.detail.push(format!("w={w} alpha={a}: w(alpha)={img}"));
                    }
                }

                // Fact 2: the form <w s_a lambda, alpha-check> is ±coordinate a.
                l2.cases += 1;
                let ws = compose(w, s_a).expect("same datum");
                let row = ws.pairing_row(*a);
                let mut e = vec![0i64; datum.rank];
                e[*a - 1] = 1;
                let neg: Vec<i64> = e.iter().map(|v| -v).collect();
                if row != e && row != neg {
                    l2.counterexamples += 1;
                    if l2.detail.len() < 5 {
                        l2.detail.push(format!("w={w} alpha={a}: row {row:?}"));
                    }
                }
            }

            // Fact 3: compare the form <s_a w s_a lambda, alpha-check> with
            // coordinate a; equality of the affine hyperplanes at level 1 is
            // equality of these linear forms (both constants vanish).
            let conj = compose(&compose(s_a, w).expect("same datum"), s_a).expect("same datum");
            let row = conj.pairing_row(*a);
            let mut e = vec![0i64; datum.rank];
            e[*a - 1] = 1;
            if row == e {
                l3.cases += 1;
                if !comm {
                    l3.counterexamples += 1;
                    if l3.detail.len() < 5 {
                        l3.detail.push(format!("w={w} alpha={a}"));
                    }
                }
            }
        }
    }

    // Fact 4: sampled antidominant weights with <lambda', alpha-check> = -1.
    let mut l4 = LemmaResult {
        name: "antidominant pairing bound over positive roots".into(),
        cases: 0,
        counterexamples: 0,
        detail: vec![],
    };
    let half = rat(-1, 2);
    for _ in 0..sample_count.max(1) {
        let a = rng.gen_range(1..=datum.rank);
        let mut coords = Vec::with_capacity(datum.rank);
        for i in 1..=datum.rank {
            if i == a {
                coords.push(Rat::from_integer(-1));
            } else {
                let num = rng.gen_range(0..=4i64);
                let den = rng.gen_range(1..=3i64);
                coords.push(rat(-num, den));
            }
        }
        let lambda = Weight::new(coords);
        let alpha_w = datum
            .root_as_weight(&datum.simple_root(a).expect("valid"))
            .expect("valid");
        l4.cases += 1;
        let mut bad = false;
        for beta in &datum.positive_roots {
            if beta.coords == datum.simple_root(a).expect("valid").coords {
                continue;
            }
            let lhs = datum.pair(&lambda, &beta.check()).expect("same datum");
            let rhs = half * datum.pair(&alpha_w, &beta.check()).expect("same datum");
            if lhs > rhs {
                bad = true;
                if l4.detail.len() < 5 {
                    l4.detail
                        .push(format!("lambda'={lambda} alpha={a} beta={beta}: {lhs} > {rhs}"));
                }
            }
        }
        if bad {
            l4.counterexamples += 1;
        }
    }

    LemmaReport {
        datum: datum.id(),
        exhaustive,
        elements_used: elements.len(),
        seed,
        lemmas: vec![l1, l2, l3, l4],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_datum, Family};

    fn datum(f: Family, n: usize) -> RootDatum {
        build_root_datum(f, n).unwrap()
    }

    #[test]
    fn simple_reflection_involution_and_det() {
        for (f, n) in [(Family::A, 3), (Family::G, 2), (Family::B, 3)] {
            let d = datum(f, n);
            for i in 1..=n {
                let s = simple_reflection(&d, i).unwrap();
                let sq = compose(&s, &s).unwrap();
                assert!(sq.is_identity());
            }
        }
    }

    #[test]
    fn a2_reflection_values() {
        let d = datum(Family::A, 2);
        let s1 = simple_reflection(&d, 1).unwrap();
        let w1 = Weight::fundamental(2, 1);
        assert_eq!(s1.apply(&w1).unwrap(), Weight::parse("-1,1").unwrap());
        let w2 = Weight::fundamental(2, 2);
        assert_eq!(s1.apply(&w2).unwrap(), w2);
    }

    #[test]
    fn g2_table_value() {
        let d = datum(Family::G, 2);
        let s2 = simple_reflection(&d, 2).unwrap();
        let w2 = Weight::fundamental(2, 2);
        let v = s2.apply(&w2).unwrap().neg();
        assert_eq!(v, Weight::parse("-3,1").unwrap());
    }

    #[test]
    fn commutation_by_adjacency() {
        let a3 = datum(Family::A, 3);
        let s1 = simple_reflection(&a3, 1).unwrap();
        let s2 = simple_reflection(&a3, 2).unwrap();
        let s3 = simple_reflection(&a3, 3).unwrap();
        assert!(commutes(&s1, &s3).unwrap());
        assert!(!commutes(&s1, &s2).unwrap());

        let d4 = datum(Family::D, 4);
        let w134 = from_word(&d4, &[1, 3, 4]).unwrap();
        let s2 = simple_reflection(&d4, 2).unwrap();
        assert!(!commutes(&w134, &s2).unwrap());
    }

    #[test]
    fn e6_apply_example() {
        let d = datum(Family::E, 6);
        let w4 = simple_reflection(&d, 4).unwrap();
        let lp = Weight::parse("-1,0,0,-1,0,-1").unwrap();
        assert_eq!(
            w4.apply(&lp).unwrap(),
            Weight::parse("-1,-1,-1,1,-1,-1").unwrap()
        );
    }

    #[test]
    fn d4_apply_example() {
        let d = datum(Family::D, 4);
        let w2 = simple_reflection(&d, 2).unwrap();
        let l0 = Weight::parse("-1,1,-1,-1").unwrap();
        assert_eq!(w2.apply(&l0).unwrap(), Weight::parse("0,-1,0,0").unwrap());
    }

    #[test]
    fn a2_apply_example() {
        let d = datum(Family::A, 2);
        let w1 = simple_reflection(&d, 1).unwrap();
        let l0 = Weight::parse("1,-1").unwrap();
        assert_eq!(w1.apply(&l0).unwrap(), Weight::parse("-1,0").unwrap());
    }

    #[test]
    fn dominance_algorithm() {
        let d = datum(Family::D, 4);
        let lam = Weight::parse("0,-1,0,0").unwrap();
        let (dom, w) = to_dominant_chamber(&d, &lam).unwrap();
        assert!(dom.is_dominant());
        assert_eq!(dom, Weight::parse("0,1,0,0").unwrap());
        assert_eq!(w.apply(&lam).unwrap(), dom);

        let a2 = datum(Family::A, 2);
        let lam = Weight::parse("-1,1").unwrap();
        let (dom, w) = to_dominant_chamber(&a2, &lam).unwrap();
        assert!(dom.is_dominant());
        assert_eq!(w.apply(&lam).unwrap(), dom);

        let already = Weight::parse("1,0").unwrap();
        let (dom, w) = to_dominant_chamber(&a2, &already).unwrap();
        assert_eq!(dom, already);
        assert!(w.is_identity());
    }

    #[test]
    fn stabilizer_d4_antidominant() {
        let d = datum(Family::D, 4);
        let lam = Weight::parse("0,-1,0,0").unwrap();
        let st = stabilizer(&d, &lam).unwrap();
        assert_eq!(st.generating_simple_set, vec![1, 3, 4]);
        assert_eq!(st.order, Some(8));
        // Cross-check against brute force over all 192 elements.
        let brute = enumerate_weyl(&d, 1000)
            .unwrap()
            .filter(|w| w.apply(&lam).unwrap() == lam)
            .count();
        assert_eq!(brute, 8);
    }

    #[test]
    fn stabilizer_simple_cases() {
        let a2 = datum(Family::A, 2);
        let st = stabilizer(&a2, &Weight::parse("-1,0").unwrap()).unwrap();
        assert_eq!(st.generating_simple_set, vec![2]);
        assert_eq!(st.order, Some(2));
        let st = stabilizer(&a2, &Weight::parse("-1,-2").unwrap()).unwrap();
        assert!(st.generating_simple_set.is_empty());
        assert_eq!(st.order, Some(1));
    }

    #[test]
    fn stabilizer_matches_brute_force_on_general_weights() {
        let d = datum(Family::A, 3);
        for lam in [
            Weight::parse("1,-1,0").unwrap(),
            Weight::parse("0,1,-1").unwrap(),
            Weight::parse("-1,1,-1").unwrap(),
            Weight::parse("2,0,-2").unwrap(),
        ] {
            let st = stabilizer(&d, &lam).unwrap();
            let sub = enumerate_subgroup(&d, &st.generators, 10_000).unwrap();
            let brute: Vec<WeylElement> = enumerate_weyl(&d, 1000)
                .unwrap()
                .filter(|w| w.apply(&lam).unwrap() == lam)
                .collect();
            assert_eq!(sub.len(), brute.len());
            for b in &brute {
                assert!(sub.iter().any(|s| equals(s, b)));
            }
        }
    }

    #[test]
    fn reduced_word_and_length() {
        let d = datum(Family::A, 2);
        assert_eq!(reduced_word(&d, &identity(&d)), Vec::<usize>::new());
        assert_eq!(length(&d, &identity(&d)), 0);
        let w0 = longest_element(&d);
        assert_eq!(length(&d, &w0), 3);
        let d4 = datum(Family::D, 4);
        let w0 = longest_element(&d4);
        assert_eq!(length(&d4, &w0), 12);
        // Reduced word round-trips and has minimal length.
        let rw = reduced_word(&d4, &w0);
        assert_eq!(rw.len(), 12);
        assert!(equals(&from_word(&d4, &rw).unwrap(), &w0));
    }

    #[test]
    fn inversion_sets() {
        let d = datum(Family::A, 2);
        let s1 = simple_reflection(&d, 1).unwrap();
        let inv = inversion_set(&d, &s1);
        assert_eq!(inv, vec![d.simple_root(1).unwrap()]);

        // s1 s2 (s2 applied first) inverts alpha2 and alpha1+alpha2.
        let w = from_word(&d, &[1, 2]).unwrap();
        let inv = inversion_set(&d, &w);
        let coords: Vec<Vec<i64>> = inv.iter().map(|r| r.coords.clone()).collect();
        assert_eq!(coords, vec![vec![0, 1], vec![1, 1]]);

        let w0 = longest_element(&d);
        assert_eq!(inversion_set(&d, &w0).len(), d.positive_roots.len());
    }

    #[test]
    fn length_additivity_on_inversion_sets() {
        // When lengths add, inv(ww') = inv(w') disjoint-union w'^-1 inv(w).
        for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::G, 2)] {
            let d = datum(f, n);
            let all: Vec<WeylElement> = enumerate_weyl(&d, 10_000).unwrap().collect();
            for w in &all {
                for w2 in &all {
                    let prod = compose(w, w2).unwrap();
                    if length(&d, &prod) != length(&d, w) + length(&d, w2) {
                        continue;
                    }
                    let mut expect: Vec<Vec<i64>> = inversion_set(&d, w2)
                        .iter()
                        .map(|r| r.coords.clone())
                        .collect();
                    let w2_inv = inverse(&d, w2);
                    for g in inversion_set(&d, w) {
                        expect.push(w2_inv.apply_root(&d, &g).unwrap().coords);
                    }
                    expect.sort();
                    let mut got: Vec<Vec<i64>> = inversion_set(&d, &prod)
                        .iter()
                        .map(|r| r.coords.clone())
                        .collect();
                    got.sort();
                    assert_eq!(expect, got);
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_weyl(&datum(Family::A, 2), 100).unwrap().count(), 6);
        assert_eq!(
            enumerate_weyl(&datum(Family::D, 4), 1000).unwrap().count(),
            192
        );
        assert_eq!(
            enumerate_weyl(&datum(Family::B, 3), 1000).unwrap().count(),
            48
        );
        match enumerate_weyl(&datum(Family::E, 8), ENUM_CAP_DEFAULT) {
            Err(Error::EnumerationCap { order, .. }) => assert_eq!(order, 696_729_600),
            _ => panic!("expected cap refusal"),
        }
    }

    #[test]
    fn faithfulness_on_small_types() {
        // Distinct elements have distinct matrices; counts match the formula.
        for (f, n) in [(Family::A, 3), (Family::B, 2), (Family::G, 2)] {
            let d = datum(f, n);
            let mats: HashSet<Vec<i64>> = enumerate_weyl(&d, 10_000)
                .unwrap()
                .map(|w| flatten(&w.action))
                .collect();
            assert_eq!(mats.len() as u128, weyl_order(&d));
        }
    }

    #[test]
    fn lemma_suite_small_types() {
        for (f, n) in [(Family::A, 2), (Family::D, 4)] {
            let d = datum(f, n);
            let report = lemma_suite(&d, 200, 7);
            assert!(report.exhaustive);
            assert!(report.pass(), "{report:?}");
        }
    }

    #[test]
    fn word_rendering_and_parsing() {
        assert_eq!(render_word(&[]), "e");
        assert_eq!(render_word(&[2, 3, 2]), "w232");
        assert_eq!(render_word(&[1, 10]), "w[1,10]");
        assert_eq!(parse_word("134").unwrap(), vec![1, 3, 4]);
        assert_eq!(parse_word("w232").unwrap(), vec![2, 3, 2]);
        assert_eq!(parse_word("[1,10]").unwrap(), vec![1, 10]);
        assert!(parse_word("1x").is_err());
    }
}
