//! Root systems of the finite crystallographic types A–G: Cartan matrices,
//! positive roots, coroots, fundamental weights and the pairing `<.,.>`.
//!
//! Weights are stored in the fundamental-weight basis (the coefficients
//! `s_i` of `lambda = sum s_i w_i`), roots in simple-root coordinates.
//! Conversions between the two go through the Cartan matrix only, and all
//! arithmetic is exact rational.

use crate::error::Error;
use crate::Result;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// Exact rational scalar; every pairing value in the crate is one of these.
pub type Rat = num_rational::Rational64;

/// Convenience constructor for a reduced rational.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num, den)
}

/// The simple Cartan–Killing families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A root (or coroot) in simple-root coordinates.
///
/// A coroot is tagged rather than rescaled: `is_coroot = true` means "the
/// coroot of the root with these coordinates"; the rescaling happens inside
/// [`RootDatum::pair`] via the symmetrizer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RootVec {
    pub coords: Vec<i64>,
    pub is_coroot: bool,
}

impl RootVec {
    pub fn root(coords: Vec<i64>) -> RootVec {
        RootVec {
            coords,
            is_coroot: false,
        }
    }

    /// The coroot of this root.
    pub fn check(&self) -> RootVec {
        RootVec {
            coords: self.coords.clone(),
            is_coroot: true,
        }
    }

    /// Sum of simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> RootVec {
        RootVec {
            coords: self.coords.iter().map(|c| -c).collect(),
            is_coroot: self.is_coroot,
        }
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .coords
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        if self.is_coroot {
            write!(f, "[{body}]v")
        } else {
            write!(f, "[{body}]")
        }
    }
}

/// A point of the rational weight space in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    pub coords: Vec<Rat>,
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Weight {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Weight {
        Weight {
            coords: vec![Rat::zero(); rank],
        }
    }

    /// The i-th fundamental weight (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Weight {
        let mut w = Weight::zero(rank);
        w.coords[i - 1] = Rat::from_integer(1);
        w
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: Rat) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        self.scale(Rat::from_integer(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// All coordinates `>= 0`.
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    /// All coordinates `<= 0`.
    pub fn is_antidominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_positive())
    }

    /// Parse a comma-separated list of rationals such as `1,-1/2,0`.
    pub fn parse(s: &str) -> Result<Weight> {
        let mut coords = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let r: Rat = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational {part:?}")))?;
            coords.push(r);
        }
        Ok(Weight { coords })
    }

    /// Render as the tuple notation `(s1,...,sn)`.
    pub fn render(&self) -> String {
        let body = self
            .coords
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("({body})")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Node marking for Dynkin-diagram rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mark {
    /// The distinguished simple root (rendered as a filled node).
    Alpha,
    /// A member of the stabilizing set S (rendered as a cross).
    InS,
    /// Any other node (rendered as an open node).
    Plain,
}

impl Mark {
    fn glyph(self) -> char {
        match self {
            Mark::Alpha => '●',
            Mark::InS => '×',
            Mark::Plain => '○',
        }
    }
}

/// A root system of one of the simple types, with exact Cartan data and the
/// full list of positive roots. Immutable after construction.
#[derive(Debug, Clone)]
pub struct RootDatum {
    pub family: Family,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_j, alpha_i-check>` (0-based storage).
    pub cartan: Vec<Vec<i64>>,
    /// Symmetrizer `d` with `d[i]*cartan[i][j] = d[j]*cartan[j][i]`;
    /// `d[i]` is half the squared length of `alpha_i`.
    pub symmetrizer: Vec<i64>,
    /// All positive roots, sorted by height then lexicographically.
    pub positive_roots: Vec<RootVec>,
    /// Dynkin edges `(i, j)` with `i < j`, 1-based.
    pub adjacency: Vec<(usize, usize)>,
    cartan_inv: Vec<Vec<Rat>>,
}

/// Build the root datum for a valid simple type.
///
/// Node numbering follows the standard (Bourbaki) conventions, with the
/// rank-2 double-bond case pinned so that the second simple root is the long
/// one (`<alpha_2, alpha_1-check> = -2`); golden tests hold this fixed.
pub fn build_root_datum(family: Family, rank: usize) -> Result<RootDatum> {
    let valid = match family {
        Family::A => rank >= 1,
        Family::B | Family::C => rank >= 2,
        Family::D => rank >= 4,
        Family::E => (6..=8).contains(&rank),
        Family::F => rank == 4,
        Family::G => rank == 2,
    };
    if !valid {
        return Err(Error::InvalidType {
            family: family.letter(),
            rank,
        });
    }

    let n = rank;
    let edges = dynkin_edges(family, n);
    let mut cartan = vec![vec![0i64; n]; n];
    for (i, row) in cartan.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in &edges {
        // Default single bond; special pairs overridden below.
        cartan[i - 1][j - 1] = -1;
        cartan[j - 1][i - 1] = -1;
    }
    match family {
        // B2 is realized with the same convention as C2 so that the second
        // simple root is long; for rank >= 3 the last root is short.
        Family::B if rank >= 3 => cartan[n - 1][n - 2] = -2,
        Family::B | Family::C => cartan[n - 2][n - 1] = -2,
        Family::F => cartan[2][1] = -2,
        Family::G => cartan[0][1] = -3,
        _ => {}
    }

    let symmetrizer = compute_symmetrizer(&cartan, &edges, n);
    let positive_roots = generate_positive_roots(&cartan, n)?;

    let expected = expected_positive_count(family, n);
    if positive_roots.len() != expected {
        // Internal consistency guard: orbit closure must match the standard
        // count for the type.
        return Err(Error::Parse(format!(
            "positive-root closure produced {} roots for {}{}, expected {}",
            positive_roots.len(),
            family,
            rank,
            expected
        )));
    }

    let cartan_inv = invert_rational(&cartan);

    Ok(RootDatum {
        family,
        rank,
        cartan,
        symmetrizer,
        positive_roots,
        adjacency: edges,
        cartan_inv,
    })
}

fn dynkin_edges(family: Family, n: usize) -> Vec<(usize, usize)> {
    match family {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            (1..n).map(|i| (i, i + 1)).collect()
        }
        Family::D => {
            let mut e: Vec<(usize, usize)> = (1..n - 1).map(|i| (i, i + 1)).collect();
            e.push((n - 2, n));
            e
        }
        Family::E => {
            // Chain 1-3-4-5-...-n with node 2 hanging off node 4.
            let mut e = vec![(1, 3), (3, 4), (2, 4)];
            for i in 4..n {
                e.push((i, i + 1));
            }
            e.sort();
            e
        }
    }
}

fn compute_symmetrizer(cartan: &[Vec<i64>], edges: &[(usize, usize)], n: usize) -> Vec<i64> {
    // Propagate d_j / d_i = c[i][j] / c[j][i] over the (connected) diagram,
    // then clear denominators.
    let mut d = vec![Rat::zero(); n];
    d[0] = Rat::from_integer(1);
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        for &(a, b) in edges {
            let (a, b) = (a - 1, b - 1);
            for (x, y) in [(a, b), (b, a)] {
                if x == i && d[y].is_zero() {
                    d[y] = d[x] * rat(cartan[x][y], cartan[y][x]);
                    frontier.push(y);
                }
            }
        }
    }
    let lcm = d
        .iter()
        .map(|r| *r.denom())
        .fold(1i64, num_integer_lcm);
    let ints: Vec<i64> = d.iter().map(|r| r.numer() * (lcm / r.denom())).collect();
    let gcd = ints.iter().copied().fold(0i64, num_integer_gcd);
    ints.iter().map(|v| v / gcd).collect()
}

fn num_integer_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        num_integer_gcd(b, a % b)
    }
}

fn num_integer_lcm(a: i64, b: i64) -> i64 {
    a / num_integer_gcd(a, b) * b
}

fn generate_positive_roots(cartan: &[Vec<i64>], n: usize) -> Result<Vec<RootVec>> {
    // Closure of the simple roots under all simple reflections, restricted
    // to positive vectors. s_i(b)_i = b_i - sum_j c[i][j] b_j.
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut b = vec![0i64; n];
        b[i] = 1;
        seen.insert(b.clone());
        queue.push(b);
    }
    while let Some(b) = queue.pop() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| cartan[i][j] * b[j]).sum();
            let mut image = b.clone();
            image[i] -= pairing;
            let positive = image.iter().all(|&c| c >= 0);
            if positive && !seen.contains(&image) {
                seen.insert(image.clone());
                queue.push(image);
            }
        }
    }
    let mut roots: Vec<RootVec> = seen.into_iter().map(RootVec::root).collect();
    roots.sort_by_key(|r| (r.height(), r.coords.clone()));
    Ok(roots)
}

fn expected_positive_count(family: Family, n: usize) -> usize {
    match family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

fn invert_rational(m: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .map(|row| row.iter().map(|&v| Rat::from_integer(v)).collect())
        .collect();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rat::from_integer(1)
                    } else {
                        Rat::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    inv
}

impl RootDatum {
    /// Short identifier such as `D4`.
    pub fn id(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    /// The i-th simple root as a [`RootVec`] (1-based index).
    pub fn simple_root(&self, i: usize) -> Result<RootVec> {
        self.validate_index(i)?;
        let mut coords = vec![0i64; self.rank];
        coords[i - 1] = 1;
        Ok(RootVec::root(coords))
    }

    pub fn validate_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            Err(Error::NodeIndex {
                index: i,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    /// Neighbours of node `i` in the Dynkin diagram (1-based).
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .adjacency
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        let (a, b) = (i.min(j), i.max(j));
        self.adjacency.contains(&(a, b))
    }

    /// Graph distance between two nodes in the Dynkin diagram.
    pub fn graph_distance(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 0;
        }
        let mut dist = vec![usize::MAX; self.rank + 1];
        dist[i] = 0;
        let mut frontier = vec![i];
        while let Some(x) = frontier.pop() {
            for y in self.neighbours(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    frontier.push(y);
                }
            }
        }
        dist[j]
    }

    /// Closed ball of radius `r` around node `i` in the Dynkin graph.
    pub fn ball(&self, i: usize, r: usize) -> BTreeSet<usize> {
        (1..=self.rank)
            .filter(|&j| self.graph_distance(i, j) <= r)
            .collect()
    }

    /// Half the squared length of a root, in the normalization where
    /// `(alpha_i, alpha_i) = 2 * symmetrizer[i]`.
    fn half_norm(&self, root: &RootVec) -> Rat {
        let n = self.rank;
        let mut total = Rat::zero();
        for j in 0..n {
            if root.coords[j] == 0 {
                continue;
            }
            for k in 0..n {
                if root.coords[k] != 0 {
                    total += Rat::from_integer(
                        root.coords[j] * root.coords[k] * self.symmetrizer[j] * self.cartan[j][k],
                    );
                }
            }
        }
        total / Rat::from_integer(2)
    }

    /// The pairing `<lambda, beta-check>`.
    ///
    /// `beta` must be tagged as a coroot; for a simple coroot this is just
    /// the matching coordinate of `lambda`.
    pub fn pair(&self, lambda: &Weight, beta_check: &RootVec) -> Result<Rat> {
        if lambda.rank() != self.rank || beta_check.coords.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: lambda.rank().max(beta_check.coords.len()),
            });
        }
        debug_assert!(beta_check.is_coroot, "pair expects a coroot");
        let mut num = Rat::zero();
        for j in 0..self.rank {
            if beta_check.coords[j] != 0 {
                num += Rat::from_integer(beta_check.coords[j] * self.symmetrizer[j])
                    * lambda.coords[j];
            }
        }
        Ok(num / self.half_norm(beta_check))
    }

    /// `<beta, gamma-check>` for two roots; always an integer.
    pub fn pair_roots(&self, beta: &RootVec, gamma: &RootVec) -> Result<Rat> {
        self.pair(&self.root_as_weight(beta)?, &gamma.check())
    }

    /// A root rewritten in fundamental-weight coordinates
    /// (`alpha_j = sum_i cartan[i][j] w_i`).
    pub fn root_as_weight(&self, root: &RootVec) -> Result<Weight> {
        if root.coords.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: root.coords.len(),
            });
        }
        let coords = (0..self.rank)
            .map(|i| {
                Rat::from_integer(
                    (0..self.rank)
                        .map(|j| self.cartan[i][j] * root.coords[j])
                        .sum::<i64>(),
                )
            })
            .collect();
        Ok(Weight::new(coords))
    }

    /// The i-th simple root in fundamental-weight coordinates: column i of
    /// the Cartan matrix.
    pub fn simple_root_as_weight(&self, i: usize) -> Result<Weight> {
        self.validate_index(i)?;
        let coords = (0..self.rank)
            .map(|r| Rat::from_integer(self.cartan[r][i - 1]))
            .collect();
        Ok(Weight::new(coords))
    }

    /// A weight rewritten in simple-root coordinates (rational in general).
    pub fn weight_in_root_coords(&self, w: &Weight) -> Result<Vec<Rat>> {
        if w.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: w.rank(),
            });
        }
        Ok((0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| self.cartan_inv[i][j] * w.coords[j])
                    .sum()
            })
            .collect())
    }

    /// `rho_M` for the semisimple-rank-1 Levi attached to `alpha_i`:
    /// half the simple root, as a weight.
    pub fn rho_m(&self, alpha: usize) -> Result<Weight> {
        Ok(self
            .simple_root_as_weight(alpha)?
            .scale(rat(1, 2)))
    }

    /// Half-sum of positive roots: the all-ones weight.
    pub fn rho(&self) -> Weight {
        Weight::new(vec![Rat::from_integer(1); self.rank])
    }

    /// Bond multiplicity between adjacent nodes (1, 2 or 3).
    pub fn bond_multiplicity(&self, i: usize, j: usize) -> usize {
        (self.cartan[i - 1][j - 1] * self.cartan[j - 1][i - 1]) as usize
    }

    /// Exactly one positive root maximal in the dominance order.
    pub fn highest_root(&self) -> &RootVec {
        self.positive_roots
            .last()
            .expect("nonempty positive system")
    }

    /// Canonical JSON form (family, rank, cartan, positive roots).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.family.letter().to_string(),
            "rank": self.rank,
            "cartan": self.cartan,
            "positive_roots": self.positive_roots.iter().map(|r| &r.coords).collect::<Vec<_>>(),
        })
    }

    /// ASCII rendering of the Dynkin diagram with node marks.
    ///
    /// Marks must cover exactly the nodes of the datum. Bond multiplicity is
    /// drawn as `──`, `══`, `≡≡`. The D/E branch node is drawn above the
    /// chain.
    pub fn render_dynkin(&self, marks: &[(usize, Mark)]) -> Result<String> {
        let mut node_marks = vec![Mark::Plain; self.rank];
        for &(i, m) in marks {
            if i == 0 || i > self.rank {
                return Err(Error::InvalidMark { index: i });
            }
            node_marks[i - 1] = m;
        }

        // Chain layout: the main line, plus an optional branch node drawn
        // above a chain position.
        let (chain, branch): (Vec<usize>, Option<(usize, usize)>) = match self.family {
            Family::D => {
                let chain: Vec<usize> = (1..self.rank).collect();
                (chain, Some((self.rank, self.rank - 2)))
            }
            Family::E => {
                let mut chain = vec![1usize, 3];
                chain.extend(4..=self.rank);
                (chain, Some((2, 4)))
            }
            _ => ((1..=self.rank).collect(), None),
        };

        let bond = |i: usize, j: usize| match self.bond_multiplicity(i, j) {
            1 => "──",
            2 => "══",
            _ => "≡≡",
        };

        let mut line = String::new();
        let mut labels = String::new();
        let mut cols = Vec::new(); // character column of each chain node
        for (t, &node) in chain.iter().enumerate() {
            if t > 0 {
                line.push_str(bond(chain[t - 1], node));
                labels.push_str("  ");
            }
            cols.push(line.chars().count());
            line.push(node_marks[node - 1].glyph());
            labels.push_str(&node.to_string());
            // Keep labels aligned for single-character nodes; wider labels
            // simply run on (ranks above 9 are not drawn specially).
            while labels.chars().count() < line.chars().count() {
                labels.push(' ');
            }
        }

        let mut out = String::new();
        if let Some((branch_node, attach)) = branch {
            let col = cols[chain.iter().position(|&c| c == attach).unwrap()];
            let pad: String = " ".repeat(col);
            out.push_str(&format!(
                "{pad}{} {}\n{pad}│\n",
                node_marks[branch_node - 1].glyph(),
                branch_node
            ));
        }
        out.push_str(&line);
        out.push('\n');
        out.push_str(labels.trim_end());
        out.push('\n');
        Ok(out)
    }

    /// DOT form of the marked diagram.
    pub fn render_dot(&self, marks: &[(usize, Mark)]) -> Result<String> {
        let mut node_marks = vec![Mark::Plain; self.rank];
        for &(i, m) in marks {
            if i == 0 || i > self.rank {
                return Err(Error::InvalidMark { index: i });
            }
            node_marks[i - 1] = m;
        }
        let mut out = String::from("graph dynkin {\n");
        for i in 1..=self.rank {
            let shape = match node_marks[i - 1] {
                Mark::Alpha => "style=filled fillcolor=black",
                Mark::InS => "shape=diamond",
                Mark::Plain => "shape=circle",
            };
            out.push_str(&format!("  n{i} [label=\"{i}\" {shape}];\n"));
        }
        for &(a, b) in &self.adjacency {
            out.push_str(&format!(
                "  n{a} -- n{b} [label=\"{}\"];\n",
                self.bond_multiplicity(a, b)
            ));
        }
        out.push_str("}\n");
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(f: Family, n: usize) -> RootDatum {
        build_root_datum(f, n).unwrap()
    }

    #[test]
    fn invalid_types_refused() {
        assert!(build_root_datum(Family::E, 9).is_err());
        assert!(build_root_datum(Family::D, 3).is_err());
        assert!(build_root_datum(Family::G, 3).is_err());
        assert!(build_root_datum(Family::F, 5).is_err());
        assert!(build_root_datum(Family::B, 1).is_err());
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(datum(Family::A, 2).positive_roots.len(), 3);
        assert_eq!(datum(Family::G, 2).positive_roots.len(), 6);
        assert_eq!(datum(Family::D, 4).positive_roots.len(), 12);
        assert_eq!(datum(Family::B, 3).positive_roots.len(), 9);
        assert_eq!(datum(Family::C, 3).positive_roots.len(), 9);
        assert_eq!(datum(Family::F, 4).positive_roots.len(), 24);
        assert_eq!(datum(Family::E, 6).positive_roots.len(), 36);
        assert_eq!(datum(Family::A, 1).positive_roots.len(), 1);
    }

    #[test]
    fn a2_positive_roots_explicit() {
        let d = datum(Family::A, 2);
        let coords: Vec<Vec<i64>> = d.positive_roots.iter().map(|r| r.coords.clone()).collect();
        assert!(coords.contains(&vec![1, 0]));
        assert!(coords.contains(&vec![0, 1]));
        assert!(coords.contains(&vec![1, 1]));
    }

    #[test]
    fn d4_node_2_trivalent() {
        let d = datum(Family::D, 4);
        assert_eq!(d.neighbours(2), vec![1, 3, 4]);
    }

    #[test]
    fn cartan_sign_structure() {
        for (f, n) in [
            (Family::A, 4),
            (Family::B, 3),
            (Family::C, 4),
            (Family::D, 5),
            (Family::E, 6),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            let d = datum(f, n);
            for i in 0..n {
                assert_eq!(d.cartan[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!(d.cartan[i][j] <= 0);
                        assert_eq!(d.cartan[i][j] == 0, d.cartan[j][i] == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn pinned_long_root_conventions() {
        // These three entries force the published decomposition tables to
        // reproduce exactly; see the golden table tests in the CLI crate.
        assert_eq!(datum(Family::G, 2).cartan[0][1], -3);
        assert_eq!(datum(Family::B, 2).cartan[0][1], -2);
        assert_eq!(datum(Family::C, 2).cartan[0][1], -2);
    }

    #[test]
    fn symmetrizer_symmetrizes() {
        for (f, n) in [
            (Family::B, 4),
            (Family::C, 3),
            (Family::F, 4),
            (Family::G, 2),
            (Family::E, 7),
        ] {
            let d = datum(f, n);
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(
                        d.symmetrizer[i] * d.cartan[i][j],
                        d.symmetrizer[j] * d.cartan[j][i]
                    );
                }
            }
        }
    }

    #[test]
    fn pairing_duality() {
        let d = datum(Family::A, 2);
        let w1 = Weight::fundamental(2, 1);
        let a1 = d.simple_root(1).unwrap().check();
        let a2 = d.simple_root(2).unwrap().check();
        assert_eq!(d.pair(&w1, &a1).unwrap(), rat(1, 1));
        assert_eq!(d.pair(&w1, &a2).unwrap(), rat(0, 1));
    }

    #[test]
    fn g2_pinned_pairing() {
        let d = datum(Family::G, 2);
        let alpha2 = d.root_as_weight(&d.simple_root(2).unwrap()).unwrap();
        let a1_check = d.simple_root(1).unwrap().check();
        assert_eq!(d.pair(&alpha2, &a1_check).unwrap(), rat(-3, 1));
    }

    #[test]
    fn simple_root_as_weight_columns() {
        let a2 = datum(Family::A, 2);
        assert_eq!(
            a2.simple_root_as_weight(1).unwrap(),
            Weight::parse("2,-1").unwrap()
        );
        let d4 = datum(Family::D, 4);
        assert_eq!(
            d4.simple_root_as_weight(2).unwrap(),
            Weight::parse("-1,2,-1,-1").unwrap()
        );
        let e6 = datum(Family::E, 6);
        assert_eq!(
            e6.simple_root_as_weight(4).unwrap(),
            Weight::parse("0,-1,-1,2,-1,0").unwrap()
        );
        assert!(a2.simple_root_as_weight(3).is_err());
    }

    #[test]
    fn rho_m_values() {
        let a2 = datum(Family::A, 2);
        assert_eq!(a2.rho_m(1).unwrap(), Weight::parse("1,-1/2").unwrap());
        let d4 = datum(Family::D, 4);
        assert_eq!(
            d4.rho_m(2).unwrap(),
            Weight::parse("-1/2,1,-1/2,-1/2").unwrap()
        );
        let g2 = datum(Family::G, 2);
        assert_eq!(g2.rho_m(2).unwrap(), Weight::parse("-3/2,1").unwrap());
    }

    #[test]
    fn pairing_integral_on_roots() {
        for (f, n) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::G, 2),
            (Family::D, 4),
            (Family::F, 4),
        ] {
            let d = datum(f, n);
            for b in &d.positive_roots {
                for g in &d.positive_roots {
                    let v = d.pair_roots(b, g).unwrap();
                    assert!(v.is_integer(), "{f:?}{n}: <{b},{g}-check> = {v}");
                }
            }
        }
    }

    #[test]
    fn reflection_closure() {
        // Applying any simple reflection to any root yields a root.
        for (f, n) in [(Family::B, 3), (Family::G, 2), (Family::D, 4)] {
            let d = datum(f, n);
            let all: BTreeSet<Vec<i64>> = d
                .positive_roots
                .iter()
                .flat_map(|r| [r.coords.clone(), r.negated().coords])
                .collect();
            for r in &all {
                for i in 0..n {
                    let pairing: i64 = (0..n).map(|j| d.cartan[i][j] * r[j]).sum();
                    let mut img = r.clone();
                    img[i] -= pairing;
                    assert!(all.contains(&img));
                }
            }
        }
    }

    #[test]
    fn highest_root_unique_maximum() {
        for (f, n) in [(Family::A, 3), (Family::G, 2), (Family::D, 4), (Family::F, 4)] {
            let d = datum(f, n);
            let top = d.highest_root();
            let maximal: Vec<&RootVec> = d
                .positive_roots
                .iter()
                .filter(|r| {
                    !d.positive_roots.iter().any(|s| {
                        s != *r && s.coords.iter().zip(&r.coords).all(|(a, b)| a >= b)
                    })
                })
                .collect();
            assert_eq!(maximal, vec![top]);
        }
    }

    #[test]
    fn render_dynkin_a3() {
        let d = datum(Family::A, 3);
        let s = d
            .render_dynkin(&[(1, Mark::Alpha), (2, Mark::InS)])
            .unwrap();
        assert_eq!(s, "●──×──○\n1  2  3\n");
    }

    #[test]
    fn render_dynkin_g2_triple_bond() {
        let d = datum(Family::G, 2);
        let s = d.render_dynkin(&[]).unwrap();
        assert_eq!(s, "○≡≡○\n1  2\n");
    }

    #[test]
    fn render_dynkin_e6_branch() {
        let d = datum(Family::E, 6);
        let s = d
            .render_dynkin(&[
                (4, Mark::Alpha),
                (2, Mark::InS),
                (3, Mark::InS),
                (5, Mark::InS),
            ])
            .unwrap();
        assert_eq!(s, "      × 2\n      │\n○──×──●──×──○\n1  3  4  5  6\n");
        assert!(d.render_dynkin(&[(7, Mark::Alpha)]).is_err());
    }

    #[test]
    fn json_roundtrip_shape() {
        let d = datum(Family::A, 2);
        let v = d.to_json();
        assert_eq!(v["family"], "A");
        assert_eq!(v["rank"], 2);
        assert_eq!(v["positive_roots"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn weight_parse_render() {
        let w = Weight::parse("1,-1/2,0").unwrap();
        assert_eq!(w.render(), "(1,-1/2,0)");
        assert!(Weight::parse("1,x").is_err());
    }
}
