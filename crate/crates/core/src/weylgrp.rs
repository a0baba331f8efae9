//! Finite Weyl groups: enumeration by length, Poincaré polynomials, the
//! orders of `q` at which the Poincaré polynomial does not vanish, and counts
//! of irreducible representations.
//!
//! An element is stored as the images of the simple roots, packed one root
//! index per byte into a `u128`; this caps enumeration at rank 16 and at most
//! 255 roots, far beyond any group small enough to enumerate.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions;
use crate::rootsys::{Family, Root, RootSystem, RootSystemType};

pub const DEFAULT_ENUMERATION_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    /// Root index of `w(α_i)` for each simple root.
    pub images: Vec<usize>,
    pub length: usize,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            images: (0..rs.rank).collect(),
            length: 0,
        }
    }

    pub fn from_images(rs: &RootSystem, images: Vec<usize>) -> Self {
        let mut w = WeylElement { images, length: 0 };
        w.length = rs
            .positive_roots
            .iter()
            .filter(|r| !w.apply(rs, &r.coords).iter().all(|&c| c >= 0))
            .count();
        w
    }

    /// `s_{j_1} s_{j_2} ⋯` applied right to left.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        let mut w = Self::identity(rs);
        for &j in word {
            w = w.mul_simple(rs, j);
        }
        w
    }

    pub fn image_roots(&self, rs: &RootSystem) -> Vec<Root> {
        self.images.iter().map(|&i| rs.roots[i].clone()).collect()
    }

    /// `w(v)` for `v` over the simple roots.
    pub fn apply(&self, rs: &RootSystem, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; rs.rank];
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                for (o, x) in out.iter_mut().zip(&rs.roots[self.images[i]].coords) {
                    *o += c * x;
                }
            }
        }
        out
    }

    /// `w · s_j`.
    pub fn mul_simple(&self, rs: &RootSystem, j: usize) -> Self {
        let images: Vec<usize> = (0..rs.rank).map(|i| right_image(rs, &self.images, i, j)).collect();
        let up = rs.is_positive_index(self.images[j]);
        WeylElement {
            images,
            length: if up { self.length + 1 } else { self.length - 1 },
        }
    }

    /// `w · u`.
    pub fn compose(&self, rs: &RootSystem, u: &WeylElement) -> Self {
        let images = u
            .images
            .iter()
            .map(|&r| {
                let v = self.apply(rs, &rs.roots[r].coords);
                rs.index_of_coords(&v).expect("Weyl group permutes roots")
            })
            .collect();
        Self::from_images(rs, images)
    }

    pub fn inverse(&self, rs: &RootSystem) -> Self {
        let mut w = Self::identity(rs);
        for j in self.reduced_word(rs).into_iter().rev() {
            w = w.mul_simple(rs, j);
        }
        w
    }

    /// A reduced word `[j_1, …, j_l]` with `w = s_{j_1} ⋯ s_{j_l}`.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length);
        while w.length > 0 {
            let j = (0..rs.rank)
                .find(|&j| !rs.is_positive_index(w.images[j]))
                .expect("nonidentity element has a right descent");
            word.push(j);
            w = w.mul_simple(rs, j);
        }
        word.reverse();
        word
    }

    /// Matrix with column `i` equal to `w(α_i)` over the simple roots.
    pub fn matrix(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        (0..rs.rank)
            .map(|r| (0..rs.rank).map(|i| rs.roots[self.images[i]].coords[r]).collect())
            .collect()
    }
}

/// Root index of `(w s_j)(α_i) = w(α_i) − <α_i, α_j^∨> w(α_j)`.
fn right_image(rs: &RootSystem, images: &[usize], i: usize, j: usize) -> usize {
    if i == j {
        return rs.neg_index(images[j]);
    }
    let c = -rs.cartan[j][i];
    let mut cur = images[i];
    for _ in 0..c {
        cur = rs.sum_index(cur, images[j]).expect("root string is unbroken");
    }
    cur
}

fn pack(images: &[usize]) -> u128 {
    images
        .iter()
        .enumerate()
        .fold(0u128, |acc, (i, &r)| acc | ((r as u128) << (8 * i)))
}

fn unpack(key: u128, rank: usize) -> Vec<usize> {
    (0..rank).map(|i| ((key >> (8 * i)) & 0xff) as usize).collect()
}

fn packed_image(key: u128, i: usize) -> usize {
    ((key >> (8 * i)) & 0xff) as usize
}

fn packed_mul_simple(rs: &RootSystem, key: u128, j: usize) -> u128 {
    let mut out = 0u128;
    let gj = packed_image(key, j);
    for i in 0..rs.rank {
        let img = if i == j {
            rs.neg_index(gj)
        } else {
            let c = -rs.cartan[j][i];
            let mut cur = packed_image(key, i);
            for _ in 0..c {
                cur = rs.sum_index(cur, gj).expect("root string is unbroken");
            }
            cur
        };
        out |= (img as u128) << (8 * i);
    }
    out
}

/// `s_j g s_j`.
fn packed_conj_simple(rs: &RootSystem, key: u128, j: usize) -> u128 {
    let h = packed_mul_simple(rs, key, j);
    let mut out = 0u128;
    for i in 0..rs.rank {
        out |= (rs.reflect_index(packed_image(h, i), j) as u128) << (8 * i);
    }
    out
}

/// `|W₀| = ∏ d_i`.
pub fn group_order(t: RootSystemType) -> u128 {
    crate::rootsys::degrees_of(t).iter().map(|&d| d as u128).product()
}

/// All elements of `W₀`, sorted by packed key, with lengths.
#[derive(Debug)]
pub struct WeylGroup<'a> {
    pub rs: &'a RootSystem,
    keys: Vec<u128>,
    lengths: Vec<u16>,
    layer_sizes: Vec<u64>,
}

impl<'a> WeylGroup<'a> {
    /// Breadth-first enumeration over right multiplication by simple
    /// reflections, one length layer at a time.
    pub fn enumerate(rs: &'a RootSystem, budget: u128) -> Result<Self> {
        let order = group_order(rs.rstype);
        if order > budget {
            return Err(Error::BudgetExceeded { order, budget });
        }
        if rs.rank > 16 || rs.num_roots() > 255 {
            return Err(Error::RankCap { rank: rs.rank, cap: 16 });
        }
        let mut layer: Vec<u128> = vec![pack(&(0..rs.rank).collect::<Vec<_>>())];
        let mut keys: Vec<(u128, u16)> = Vec::with_capacity(order as usize);
        let mut layer_sizes = Vec::new();
        let mut len = 0u16;
        while !layer.is_empty() {
            layer_sizes.push(layer.len() as u64);
            keys.extend(layer.iter().map(|&k| (k, len)));
            let mut next: Vec<u128> = layer
                .par_iter()
                .flat_map_iter(|&g| {
                    (0..rs.rank)
                        .filter(move |&j| rs.is_positive_index(packed_image(g, j)))
                        .map(move |j| packed_mul_simple(rs, g, j))
                })
                .collect();
            next.par_sort_unstable();
            next.dedup();
            layer = next;
            len += 1;
        }
        keys.par_sort_unstable_by_key(|&(k, _)| k);
        let (keys, lengths) = keys.into_iter().unzip();
        Ok(WeylGroup {
            rs,
            keys,
            lengths,
            layer_sizes,
        })
    }

    pub fn order(&self) -> usize {
        self.keys.len()
    }

    /// Number of elements of each length.
    pub fn length_histogram(&self) -> &[u64] {
        &self.layer_sizes
    }

    pub fn iter(&self) -> impl Iterator<Item = WeylElement> + '_ {
        self.keys
            .iter()
            .zip(&self.lengths)
            .map(|(&k, &l)| WeylElement {
                images: unpack(k, self.rs.rank),
                length: l as usize,
            })
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.keys.binary_search(&pack(&w.images)).is_ok()
    }

    pub fn poincare(&self) -> PoincarePoly {
        PoincarePoly {
            coeffs: self.layer_sizes.clone(),
        }
    }

    /// Conjugacy classes as orbits of `g ↦ s_j g s_j`, merged by union–find.
    pub fn conjugacy_class_count(&self) -> usize {
        let n = self.keys.len();
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                let up = parent[parent[x as usize] as usize];
                parent[x as usize] = up;
                x = up;
            }
            x
        }
        for idx in 0..n {
            let g = self.keys[idx];
            for j in 0..self.rs.rank {
                let h = packed_conj_simple(self.rs, g, j);
                let hidx = self.keys.binary_search(&h).expect("conjugate lies in the group");
                let a = find(&mut parent, idx as u32);
                let b = find(&mut parent, hidx as u32);
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        (0..n as u32).filter(|&i| find(&mut parent, i) == i).count()
    }
}

/// `Σ_{w ∈ W₀} q^{l(w)}` as a coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoincarePoly {
    pub coeffs: Vec<u64>,
}

impl PoincarePoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn total(&self) -> u128 {
        self.coeffs.iter().map(|&c| c as u128).sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn as_i128(&self) -> Vec<i128> {
        self.coeffs.iter().map(|&c| c as i128).collect()
    }
}

/// Product formula `∏ (q^{d_i} − 1) / (q − 1)^n`, by exact long division.
pub fn poincare(t: RootSystemType) -> PoincarePoly {
    let degrees = crate::rootsys::degrees_of(t);
    let mut num: Vec<i128> = vec![1];
    for &d in &degrees {
        let mut factor = vec![0i128; d as usize + 1];
        factor[0] = -1;
        factor[d as usize] = 1;
        num = poly_mul(&num, &factor);
    }
    for _ in &degrees {
        let (q, r) = poly_divmod(&num, &[-1, 1]);
        assert!(r.iter().all(|&c| c == 0), "q − 1 divides q^d − 1");
        num = q;
    }
    PoincarePoly {
        coeffs: num.into_iter().map(|c| c as u64).collect(),
    }
}

pub fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut p: Vec<i128>) -> Vec<i128> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

/// Division by a monic polynomial over `Z`; coefficients low degree first.
pub fn poly_divmod(a: &[i128], monic: &[i128]) -> (Vec<i128>, Vec<i128>) {
    let a = trim(a.to_vec());
    let db = monic.len() - 1;
    assert_eq!(*monic.last().unwrap(), 1, "divisor must be monic");
    if a.len() <= db {
        return (vec![0], a);
    }
    let mut rem = a.clone();
    let mut quot = vec![0i128; a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db];
        quot[k] = c;
        if c != 0 {
            for (i, &m) in monic.iter().enumerate() {
                rem[k + i] -= c * m;
            }
        }
    }
    rem.truncate(db.max(1));
    (trim(quot), trim(rem))
}

/// The cyclotomic polynomial `Φ_m`.
pub fn cyclotomic(m: u64) -> Vec<i128> {
    let mut p = vec![0i128; m as usize + 1];
    p[0] = -1;
    p[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            let (q, r) = poly_divmod(&p, &cyclotomic(d));
            debug_assert!(r.iter().all(|&c| c == 0));
            p = q;
        }
    }
    p
}

/// Whether the Poincaré polynomial vanishes at a primitive `m`-th root of
/// unity, decided by divisibility by `Φ_m`.
pub fn poincare_vanishes(t: RootSystemType, m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let poly = poincare(t).as_i128();
    let (_, r) = poly_divmod(&poly, &cyclotomic(m));
    r.iter().all(|&c| c == 0)
}

/// The degree criterion: `m` divides some `d_i`.
pub fn divides_some_degree(t: RootSystemType, m: u64) -> bool {
    crate::rootsys::degrees_of(t).iter().any(|&d| d as u64 % m == 0)
}

/// Finite orders `2 ≤ m ≤ max d_i − 1` at which the Poincaré polynomial is
/// nonzero.
pub fn valid_orders(t: RootSystemType) -> Vec<u64> {
    let max = *crate::rootsys::degrees_of(t).iter().max().unwrap() as u64;
    (2..max).filter(|&m| !poincare_vanishes(t, m)).collect()
}

/// `|Irr(W₀)|`.
pub fn irr_count(t: RootSystemType) -> u64 {
    let n = t.rank as u32;
    let big = match t.family {
        Family::A => partitions::p(n as i64 + 1),
        Family::B | Family::C => partitions::ordered_pairs(n),
        Family::D => partitions::type_d_count(n).expect("rank >= 4"),
        Family::E => {
            return match n {
                6 => 25,
                7 => 60,
                _ => 112,
            }
        }
        Family::F => return 25,
        Family::G => return 6,
    };
    num_traits::ToPrimitive::to_u64(&big).expect("small count")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(name: &str) -> RootSystem {
        RootSystem::build(RootSystemType::of(name)).unwrap()
    }

    #[test]
    fn small_groups() {
        let rs = build("A2");
        let w = WeylGroup::enumerate(&rs, DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(w.order(), 6);
        let mut lens: Vec<usize> = w.iter().map(|e| e.length).collect();
        lens.sort();
        assert_eq!(lens, vec![0, 1, 1, 2, 2, 3]);
        let rs = build("G2");
        let w = WeylGroup::enumerate(&rs, DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(w.order(), 12);
        assert_eq!(w.iter().map(|e| e.length).max(), Some(6));
        let rs = build("F4");
        let w = WeylGroup::enumerate(&rs, DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(w.order(), 1152);
    }

    #[test]
    fn budget_is_enforced() {
        let rs = build("E8");
        match WeylGroup::enumerate(&rs, DEFAULT_ENUMERATION_BUDGET) {
            Err(Error::BudgetExceeded { order, .. }) => assert_eq!(order, 696_729_600),
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn lengths_match_inversion_counts() {
        for name in ["B3", "G2", "A3", "D4"] {
            let rs = build(name);
            let w = WeylGroup::enumerate(&rs, DEFAULT_ENUMERATION_BUDGET).unwrap();
            for e in w.iter() {
                let recomputed = WeylElement::from_images(&rs, e.images.clone());
                assert_eq!(recomputed.length, e.length);
                assert_eq!(WeylElement::from_word(&rs, &e.reduced_word(&rs)), e);
            }
        }
    }

    #[test]
    fn poincare_product_matches_histogram() {
        for name in ["A1", "A2", "A5", "B2", "B4", "C4", "D4", "D5", "G2", "F4", "E6"] {
            let t = RootSystemType::of(name);
            let rs = RootSystem::build(t).unwrap();
            let w = WeylGroup::enumerate(&rs, 100_000).unwrap();
            let p = poincare(t);
            assert_eq!(p, w.poincare(), "{name}");
            assert!(p.is_palindromic());
            assert_eq!(p.degree(), rs.num_positive());
            assert_eq!(p.total(), group_order(t));
        }
        assert_eq!(poincare(RootSystemType::of("A1")).coeffs, vec![1, 1]);
        assert_eq!(poincare(RootSystemType::of("B2")).coeffs, vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn vanishing_criteria_agree() {
        let mut types = Vec::new();
        for n in 1..=8 {
            types.push(format!("A{n}"));
        }
        for n in 2..=8 {
            types.push(format!("B{n}"));
        }
        for n in 3..=8 {
            types.push(format!("C{n}"));
        }
        for n in 4..=12 {
            types.push(format!("D{n}"));
        }
        types.extend(["E6", "E7", "E8", "F4", "G2"].map(String::from));
        for name in types {
            let t = RootSystemType::of(&name);
            for m in 2..=60 {
                assert_eq!(poincare_vanishes(t, m), divides_some_degree(t, m), "{name} m={m}");
            }
        }
    }

    #[test]
    fn valid_order_lists() {
        let v = |s: &str| valid_orders(RootSystemType::of(s));
        assert_eq!(v("E6"), vec![7, 10, 11]);
        assert_eq!(v("E7"), vec![11, 13, 15, 16, 17]);
        assert_eq!(
            v("E8"),
            vec![11, 13, 16, 17, 19, 21, 22, 23, 25, 26, 27, 28, 29]
        );
        assert_eq!(v("G2"), vec![4, 5]);
        assert_eq!(v("F4"), vec![5, 7, 9, 10, 11]);
        for n in 1..=9 {
            assert!(v(&format!("A{n}")).is_empty());
        }
        for n in 4..=12u64 {
            let expected: Vec<u64> = (n + 1..=2 * n - 3).filter(|m| m % 2 == 1).collect();
            assert_eq!(v(&format!("D{n}")), expected);
        }
        for n in 2..=8u64 {
            let expected: Vec<u64> = (n + 1..=2 * n - 1).filter(|m| m % 2 == 1).collect();
            assert_eq!(v(&format!("B{n}")), expected);
        }
        assert!(!poincare_vanishes(RootSystemType::of("G2"), 4));
        assert!(poincare_vanishes(RootSystemType::of("E7"), 9));
    }

    #[test]
    fn irr_counts_match_classes_small() {
        for name in ["A1", "A3", "A5", "B2", "B3", "B4", "C3", "D4", "D5", "G2", "F4", "E6"] {
            let t = RootSystemType::of(name);
            let rs = RootSystem::build(t).unwrap();
            let w = WeylGroup::enumerate(&rs, DEFAULT_ENUMERATION_BUDGET).unwrap();
            assert_eq!(w.conjugacy_class_count() as u64, irr_count(t), "{name}");
        }
        assert_eq!(irr_count(RootSystemType::of("B2")), 5);
    }

    proptest::proptest! {
        #[test]
        fn length_is_subadditive(a in proptest::collection::vec(0usize..6, 0..20), b in proptest::collection::vec(0usize..6, 0..20)) {
            let rs = RootSystem::build(RootSystemType::of("E6")).unwrap();
            let w = WeylElement::from_word(&rs, &a);
            let u = WeylElement::from_word(&rs, &b);
            proptest::prop_assert!(w.compose(&rs, &u).length <= w.length + u.length);
            proptest::prop_assert_eq!(w.inverse(&rs).length, w.length);
            let red = w.reduced_word(&rs);
            proptest::prop_assert_eq!(red.len(), w.length);
            proptest::prop_assert_eq!(WeylElement::from_word(&rs, &red), w);
        }
    }
}
