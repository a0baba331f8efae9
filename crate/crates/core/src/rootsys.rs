//! Irreducible reduced root systems of types A–G.
//!
//! Simple roots are numbered as in Bourbaki. For E-types the Dynkin diagram
//! is
//!
//! ```text
//!         2
//!         |
//! 1 - 3 - 4 - 5 - 6 (- 7 - 8)
//! ```
//!
//! and for F4 the double bond sits between 2 and 3 with 1, 2 long. Roots are
//! integer vectors over the simple roots; the invariant form is scaled so
//! that short roots have squared length 2.
//!
//! Root indices: `0..N` are the positive roots sorted by height (ties broken
//! so that simple root `i` has index `i`), `N..2N` their negatives in the
//! same order.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{self, RatMatrix, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
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

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemType {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(RootSystemType { family, rank })
        } else {
            Err(Error::InvalidType(format!(
                "{}{rank} is not an admissible rank for family {}",
                family.letter(),
                family.letter()
            )))
        }
    }

    /// Shorthand used throughout tests and tables; panics on invalid input.
    pub fn of(name: &str) -> Self {
        name.parse().unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for RootSystemType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::InvalidType(format!("unknown root system type `{s}`"))),
        };
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::InvalidType(format!("missing or bad rank in `{s}`")))?;
        RootSystemType::new(family, rank)
    }
}

impl Serialize for RootSystemType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RootSystemType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root { coords }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Root { coords }
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root::new(self.coords.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Root {
        Root::new(self.coords.iter().map(|c| c * k).collect())
    }

    /// Digit string such as `1232` or `-0111` (coefficients are at most 6).
    pub fn compact(&self) -> String {
        let neg = self.coords.iter().any(|&c| c < 0);
        let digits: String = self
            .coords
            .iter()
            .map(|c| char::from_digit(c.unsigned_abs() as u32, 10).unwrap_or('?'))
            .collect();
        if neg {
            format!("-{digits}")
        } else {
            digits
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Long,
    Short,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub rstype: RootSystemType,
    pub rank: usize,
    /// `cartan[i][j] = <α_j, α_i^∨>`.
    pub cartan: Vec<Vec<i64>>,
    pub gram: Vec<Vec<i64>>,
    pub positive_roots: Vec<Root>,
    /// Positive roots followed by their negatives.
    pub roots: Vec<Root>,
    pub highest_root: Root,
    pub highest_short_root: Root,
    pub degrees: Vec<u32>,
    /// Row `i` is the fundamental weight `ϖ_i` over the simple roots.
    pub fundamental_weights: RatMatrix,
    pub length_class: Vec<LengthClass>,
    /// Row `i` is `α_i` in ε-coordinates (types B, C, D, F).
    pub epsilon_view: Option<RatMatrix>,
    index: HashMap<Vec<i64>, usize>,
    /// `add[a * 2N + b]` is the index of `roots[a] + roots[b]`, or `u16::MAX`.
    add: Vec<u16>,
    /// `refl[r * rank + j]` is the index of `s_j(roots[r])`.
    refl: Vec<u16>,
    norms: Vec<i64>,
}

const NONE: u16 = u16::MAX;

fn gram_matrix(t: RootSystemType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut g = vec![vec![0i64; n]; n];
    let bond = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match t.family {
        Family::A => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                bond(&mut g, i, i + 1, -1);
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                g[i][i] = 4;
            }
            g[n - 1][n - 1] = 2;
            for i in 0..n - 1 {
                bond(&mut g, i, i + 1, -2);
            }
        }
        Family::C => {
            for i in 0..n - 1 {
                g[i][i] = 2;
            }
            g[n - 1][n - 1] = 4;
            for i in 0..n - 2 {
                bond(&mut g, i, i + 1, -1);
            }
            bond(&mut g, n - 2, n - 1, -2);
        }
        Family::D => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n - 2 {
                bond(&mut g, i, i + 1, -1);
            }
            bond(&mut g, n - 3, n - 1, -1);
        }
        Family::E => {
            for i in 0..n {
                g[i][i] = 2;
            }
            bond(&mut g, 0, 2, -1);
            bond(&mut g, 1, 3, -1);
            for i in 2..n - 1 {
                bond(&mut g, i, i + 1, -1);
            }
        }
        Family::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            bond(&mut g, 0, 1, -2);
            bond(&mut g, 1, 2, -2);
            bond(&mut g, 2, 3, -1);
        }
        Family::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            bond(&mut g, 0, 1, -3);
        }
    }
    g
}

fn epsilon_matrix(t: RootSystemType) -> Option<RatMatrix> {
    let n = t.rank;
    let r = |x: i64| Rational::from_integer(x);
    let half = Rational::new(1, 2);
    let chain = |last: Vec<Rational>| -> RatMatrix {
        let mut m: RatMatrix = (0..n - 1)
            .map(|i| {
                let mut row = vec![r(0); n];
                row[i] = r(1);
                row[i + 1] = r(-1);
                row
            })
            .collect();
        m.push(last);
        m
    };
    match t.family {
        Family::B => {
            let mut last = vec![r(0); n];
            last[n - 1] = r(1);
            Some(chain(last))
        }
        Family::C => {
            let mut last = vec![r(0); n];
            last[n - 1] = r(2);
            Some(chain(last))
        }
        Family::D => {
            let mut last = vec![r(0); n];
            last[n - 2] = r(1);
            last[n - 1] = r(1);
            Some(chain(last))
        }
        Family::F => Some(vec![
            vec![r(0), r(1), r(-1), r(0)],
            vec![r(0), r(0), r(1), r(-1)],
            vec![r(0), r(0), r(0), r(1)],
            vec![half, -half, -half, -half],
        ]),
        _ => None,
    }
}

/// The degrees `d_i` of the basic invariants of `W₀`.
pub fn degrees_of(t: RootSystemType) -> Vec<u32> {
    let n = t.rank as u32;
    match t.family {
        Family::A => (2..=n + 1).collect(),
        Family::B | Family::C => (1..=n).map(|i| 2 * i).collect(),
        Family::D => {
            let mut d: Vec<u32> = (1..n).map(|i| 2 * i).collect();
            d.push(n);
            d.sort_unstable();
            d
        }
        Family::E => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Family::F => vec![2, 6, 8, 12],
        Family::G => vec![2, 6],
    }
}

/// `|X / Q|`, the determinant of the Cartan matrix.
pub fn center_order(t: RootSystemType) -> u64 {
    let g = gram_matrix(t);
    lattice::det(&cartan_from_gram(&g)) as u64
}

fn cartan_from_gram(g: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = g.len();
    (0..n)
        .map(|i| (0..n).map(|j| 2 * g[i][j] / g[i][i]).collect())
        .collect()
}

fn pairing(cartan: &[Vec<i64>], beta: &[i64], i: usize) -> i64 {
    beta.iter().zip(&cartan[i]).map(|(b, c)| b * c).sum()
}

fn sort_positive(roots: &mut [Root]) {
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.coords.cmp(&a.coords)));
}

/// Positive roots by root-string closure: `β + α_i` is a root iff
/// `q = p − <β, α_i^∨> > 0`, where `p` counts `β − α_i, β − 2α_i, …`.
fn positive_roots_by_strings(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        for r in &layer {
            known.insert(r.coords.clone());
        }
        let mut next: Vec<Root> = Vec::new();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut probe = beta.coords.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing(cartan, &beta.coords, i) > 0 {
                    let mut up = beta.coords.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(Root::new(up));
                    }
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    sort_positive(&mut all);
    all
}

/// Independent enumeration: orbit of the simple roots under simple reflections.
pub fn positive_roots_by_reflection(t: RootSystemType) -> Vec<Root> {
    let cartan = cartan_from_gram(&gram_matrix(t));
    let n = t.rank;
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut stack: Vec<Vec<i64>> = (0..n).map(|i| Root::simple(n, i).coords).collect();
    for r in &stack {
        seen.insert(r.clone());
    }
    while let Some(r) = stack.pop() {
        for j in 0..n {
            let mut s = r.clone();
            s[j] -= pairing(&cartan, &r, j);
            if seen.insert(s.clone()) {
                stack.push(s);
            }
        }
    }
    let mut pos: Vec<Root> = seen
        .into_iter()
        .map(Root::new)
        .filter(Root::is_positive)
        .collect();
    sort_positive(&mut pos);
    pos
}

impl RootSystem {
    pub fn build(t: RootSystemType) -> Result<RootSystem> {
        let t = RootSystemType::new(t.family, t.rank)?;
        let n = t.rank;
        let gram = gram_matrix(t);
        let cartan = cartan_from_gram(&gram);
        let positive_roots = positive_roots_by_strings(&cartan);
        let degrees = degrees_of(t);
        let expected: u32 = degrees.iter().map(|d| d - 1).sum();
        if positive_roots.len() != expected as usize {
            return Err(Error::Invalid(format!(
                "{t}: closure produced {} positive roots, degrees predict {expected}",
                positive_roots.len()
            )));
        }
        let npos = positive_roots.len();
        if 2 * npos >= NONE as usize {
            return Err(Error::RankCap { rank: n, cap: 0 });
        }
        let mut roots = positive_roots.clone();
        roots.extend(positive_roots.iter().map(Root::neg));
        let index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords.clone(), i))
            .collect();

        let norm = |r: &Root| -> i64 {
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += r.coords[i] * gram[i][j] * r.coords[j];
                }
            }
            s
        };
        let norms: Vec<i64> = roots.iter().map(norm).collect();
        let max_norm = *norms.iter().max().unwrap();
        let length_class = norms
            .iter()
            .map(|&v| if v == max_norm { LengthClass::Long } else { LengthClass::Short })
            .collect::<Vec<_>>();

        let total = roots.len();
        let mut add = vec![NONE; total * total];
        for a in 0..total {
            for b in 0..total {
                let s = roots[a].add(&roots[b]);
                if let Some(&k) = index.get(&s.coords) {
                    add[a * total + b] = k as u16;
                }
            }
        }
        let mut refl = vec![NONE; total * n];
        for (r, root) in roots.iter().enumerate() {
            for j in 0..n {
                let mut s = root.coords.clone();
                s[j] -= pairing(&cartan, &root.coords, j);
                refl[r * n + j] = index[&s] as u16;
            }
        }

        let highest_root = positive_roots.last().unwrap().clone();
        let highest_short_root = (0..npos)
            .rev()
            .find(|&i| norms[i] == 2)
            .map(|i| positive_roots[i].clone())
            .unwrap_or_else(|| highest_root.clone());

        let ct = lattice::transpose(&cartan);
        let fundamental_weights = lattice::inverse(&ct)
            .ok_or_else(|| Error::Invalid(format!("{t}: singular Cartan matrix")))?;

        Ok(RootSystem {
            rstype: t,
            rank: n,
            cartan,
            gram,
            positive_roots,
            roots,
            highest_root,
            highest_short_root,
            degrees,
            fundamental_weights,
            length_class,
            epsilon_view: epsilon_matrix(t),
            index,
            add,
            refl,
            norms,
        })
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(&r.coords).copied()
    }

    pub fn index_of_coords(&self, c: &[i64]) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(&r.coords)
    }

    pub fn neg_index(&self, a: usize) -> usize {
        let n = self.num_positive();
        if a < n {
            a + n
        } else {
            a - n
        }
    }

    pub fn is_positive_index(&self, a: usize) -> bool {
        a < self.num_positive()
    }

    /// Index of `roots[a] + roots[b]` if it is a root.
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        let v = self.add[a * self.roots.len() + b];
        (v != NONE).then_some(v as usize)
    }

    /// Index of `s_j(roots[r])`.
    pub fn reflect_index(&self, r: usize, j: usize) -> usize {
        self.refl[r * self.rank + j] as usize
    }

    /// `(roots[a], roots[a])` in the normalization where short roots have norm 2.
    pub fn norm(&self, a: usize) -> i64 {
        self.norms[a]
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += x[i] * self.gram[i][j] * y[j];
            }
        }
        s
    }

    /// `<β, α_i^∨>` for β given over the simple roots.
    pub fn pairing_simple(&self, beta: &[i64], i: usize) -> i64 {
        pairing(&self.cartan, beta, i)
    }

    /// `<β, α^∨>` for arbitrary root α.
    pub fn coroot_pairing(&self, beta: &[i64], alpha: &[i64]) -> i64 {
        2 * self.inner(beta, alpha) / self.inner(alpha, alpha)
    }

    /// Largest `p` with `roots[b] − p·roots[a]` a root.
    pub fn string_down(&self, a: usize, b: usize) -> i64 {
        let na = self.neg_index(a);
        let mut p = 0;
        let mut cur = b;
        while let Some(next) = self.sum_index(cur, na) {
            p += 1;
            cur = next;
        }
        p
    }

    pub fn is_long(&self, a: usize) -> bool {
        self.length_class[a] == LengthClass::Long
    }

    pub fn simple_is_short(&self, i: usize) -> bool {
        !self.rstype.family.is_simply_laced() && !self.is_long(i)
    }

    pub fn center_order(&self) -> u64 {
        lattice::det(&self.cartan) as u64
    }

    /// ε-coordinates of a root given over simple roots.
    pub fn epsilon_coords(&self, r: &Root) -> Option<Vec<Rational>> {
        let e = self.epsilon_view.as_ref()?;
        let dim = e[0].len();
        let mut out = vec![Rational::zero(); dim];
        for (i, &c) in r.coords.iter().enumerate() {
            for k in 0..dim {
                out[k] += e[i][k] * Rational::from_integer(c);
            }
        }
        Some(out)
    }

    /// Inverse of [`RootSystem::epsilon_coords`]: the root with the given
    /// ε-coordinates, if any.
    pub fn root_from_epsilon(&self, eps: &[Rational]) -> Option<Root> {
        let e = self.epsilon_view.as_ref()?;
        // Solve coords · E = eps; E is square and invertible over Q.
        let n = self.rank;
        let mut aug: Vec<Vec<Rational>> = (0..n)
            .map(|k| {
                let mut row: Vec<Rational> = (0..n).map(|i| e[i][k]).collect();
                row.push(eps[k]);
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !aug[r][col].is_zero())?;
            aug.swap(col, piv);
            let p = aug[col][col];
            for x in aug[col].iter_mut() {
                *x /= p;
            }
            for r in 0..n {
                if r != col && !aug[r][col].is_zero() {
                    let f = aug[r][col];
                    for c in 0..=n {
                        let t = aug[col][c] * f;
                        aug[r][c] -= t;
                    }
                }
            }
        }
        let mut coords = Vec::with_capacity(n);
        for row in &aug {
            let v = row[n];
            if !v.is_integer() {
                return None;
            }
            coords.push(v.to_integer());
        }
        let r = Root::new(coords);
        self.is_root(&r).then_some(r)
    }

    /// Weight given in fundamental-weight coordinates, expressed over simple roots.
    pub fn weight_to_root_coords(&self, w: &[i64]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.rank];
        for (i, &c) in w.iter().enumerate() {
            for j in 0..self.rank {
                out[j] += self.fundamental_weights[i][j] * Rational::from_integer(c);
            }
        }
        out
    }

    /// Root coordinates converted to fundamental-weight coordinates.
    pub fn root_to_weight_coords(&self, r: &[i64]) -> Vec<i64> {
        (0..self.rank).map(|i| self.pairing_simple(r, i)).collect()
    }

    pub fn structure_constants(&self, conv: SignConvention) -> StructureConstants {
        StructureConstants::compute(self, conv)
    }

    pub fn max_coefficient(&self) -> i64 {
        self.highest_root.coords.iter().copied().max().unwrap_or(0)
    }

    pub fn rational_to_i64(x: &Rational) -> Option<i64> {
        x.is_integer().then(|| x.to_integer().to_i64()).flatten()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignConvention {
    /// `N(α, β) = p + 1` on extraspecial pairs.
    Positive,
    /// `N(α, β) = −(p + 1)` on extraspecial pairs.
    Negative,
}

/// Chevalley structure constants `[e_α, e_β] = N(α, β) e_{α+β}`.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    pub convention: SignConvention,
    total: usize,
    /// Dense `2N × 2N` table; 0 where `α + β` is not a root.
    table: Vec<i32>,
}

impl StructureConstants {
    fn compute(rs: &RootSystem, conv: SignConvention) -> Self {
        let npos = rs.num_positive();
        let total = rs.num_roots();
        let sign = match conv {
            SignConvention::Positive => 1,
            SignConvention::Negative => -1,
        };
        let mut pos = vec![0i64; npos * npos];

        // Mixed-sign and negative pairs reduce to positive pairs whose sum has
        // strictly smaller height, so filling positive sums by height suffices.
        fn get(rs: &RootSystem, pos: &[i64], a: usize, b: usize) -> Rational {
            let npos = rs.num_positive();
            if rs.sum_index(a, b).is_none() {
                return Rational::zero();
            }
            let pa = a < npos;
            let pb = b < npos;
            match (pa, pb) {
                (true, true) => Rational::from_integer(pos[a * npos + b]),
                (false, false) => -get(rs, pos, rs.neg_index(a), rs.neg_index(b)),
                (false, true) => -get(rs, pos, b, a),
                (true, false) => {
                    let xi = rs.sum_index(a, b).unwrap();
                    let nxi = rs.neg_index(xi);
                    let xx = Rational::from_integer(rs.norm(xi));
                    if xi < npos {
                        // N(a,b)/(ξ,ξ) = N(b,−ξ)/(a,a), N(b,−ξ) = −N(−b,ξ)
                        let inner = -get(rs, pos, rs.neg_index(b), xi);
                        xx / Rational::from_integer(rs.norm(a)) * inner
                    } else {
                        // N(a,b)/(ξ,ξ) = N(−ξ,a)/(b,b)
                        xx / Rational::from_integer(rs.norm(b)) * get(rs, pos, nxi, a)
                    }
                }
            }
        }

        for xi in 0..npos {
            let pairs: Vec<(usize, usize)> = (0..xi)
                .filter_map(|a| {
                    let b = rs.sum_index(xi, rs.neg_index(a))?;
                    (b < npos && a < b).then_some((a, b))
                })
                .collect();
            let Some(&(g, d)) = pairs.first() else { continue };
            let p = rs.string_down(g, d);
            pos[g * npos + d] = sign * (p + 1);
            pos[d * npos + g] = -sign * (p + 1);
            let n_gd = Rational::from_integer(sign * (p + 1));
            let xx = Rational::from_integer(rs.norm(xi));
            let ng = rs.neg_index(g);
            let nd = rs.neg_index(d);
            for &(a, b) in &pairs[1..] {
                let mut acc = Rational::zero();
                if let Some(bg) = rs.sum_index(b, ng) {
                    acc += get(rs, &pos, b, ng) * get(rs, &pos, a, nd)
                        / Rational::from_integer(rs.norm(bg));
                }
                if let Some(ag) = rs.sum_index(a, ng) {
                    acc += get(rs, &pos, ng, a) * get(rs, &pos, b, nd)
                        / Rational::from_integer(rs.norm(ag));
                }
                // N(−γ,−δ) = −N(γ,δ)
                let val = -xx / (-n_gd) * acc;
                assert!(val.is_integer(), "non-integral structure constant");
                let v = val.to_integer();
                pos[a * npos + b] = v;
                pos[b * npos + a] = -v;
            }
        }

        let mut table = vec![0i32; total * total];
        for a in 0..total {
            for b in 0..total {
                if rs.sum_index(a, b).is_some() {
                    let v = get(rs, &pos, a, b);
                    assert!(v.is_integer());
                    table[a * total + b] = v.to_integer() as i32;
                }
            }
        }
        StructureConstants {
            convention: conv,
            total,
            table,
        }
    }

    /// `N(roots[a], roots[b])`, or `None` when the sum is not a root.
    pub fn get(&self, a: usize, b: usize) -> Option<i64> {
        let v = self.table[a * self.total + b];
        (v != 0).then_some(v as i64)
    }

    /// Zero when the sum is not a root.
    pub fn n(&self, a: usize, b: usize) -> i64 {
        self.table[a * self.total + b] as i64
    }

    pub fn by_root(&self, rs: &RootSystem, a: &Root, b: &Root) -> Option<i64> {
        self.get(rs.index_of(a)?, rs.index_of(b)?)
    }
}
