//! Extended affine Weyl group `W = W₀ ⋉ X` (X the weight lattice) and its
//! Iwahori–Hecke algebra over `Z[v, v⁻¹]`, `q = v²`.
//!
//! An element `(w, x)` acts on weights by `λ ↦ w(λ + x)`, so
//! `(w, x)(w', x') = (ww', x' + w'⁻¹x)`. Weights are stored in
//! fundamental-weight coordinates. Generator 0 is the affine reflection
//! `r₀ = (s_θ, −θ)` for the highest short root θ; generator `k ≥ 1` is the
//! simple reflection `s_k`.

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::rootsys::{RootSystem, RootSystemType};
use crate::weylgrp::group_order;

pub const MAX_RANK: usize = 8;
pub const MAX_FINITE_ORDER: u128 = 60_000;
pub const DEFAULT_RANK_CAP: usize = 2;
pub const FINITE_RELATION_RANK_CAP: usize = 3;

pub type Weight = [i32; MAX_RANK];

pub fn weight(v: &[i64]) -> Weight {
    let mut out = [0; MAX_RANK];
    for (o, &c) in out.iter_mut().zip(v) {
        *o = c as i32;
    }
    out
}

fn wadd(a: &Weight, b: &Weight) -> Weight {
    std::array::from_fn(|i| a[i] + b[i])
}

fn wneg(a: &Weight) -> Weight {
    std::array::from_fn(|i| -a[i])
}

fn wscale(a: &Weight, k: i32) -> Weight {
    std::array::from_fn(|i| a[i] * k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAffineElement {
    /// Index into the finite Weyl group table.
    pub w: u16,
    pub x: Weight,
}

pub struct AffineWeylGroup {
    pub rs: RootSystem,
    pub rank: usize,
    mats: Vec<Vec<i32>>,
    index: HashMap<Vec<i32>, u16>,
    inv: Vec<u16>,
    right_gen: Vec<u16>,
    inverted: Vec<u128>,
    finite_len: Vec<u32>,
    coroots: Vec<Weight>,
    theta_s: Weight,
    gens: Vec<ExtAffineElement>,
    omega: Vec<ExtAffineElement>,
}

fn matmul(a: &[i32], b: &[i32], n: usize) -> Vec<i32> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += x * b[k * n + j];
            }
        }
    }
    out
}

impl AffineWeylGroup {
    pub fn new(t: RootSystemType) -> Result<Self> {
        let order = group_order(t);
        if order > MAX_FINITE_ORDER {
            return Err(Error::BudgetExceeded {
                order,
                budget: MAX_FINITE_ORDER,
            });
        }
        let rs = RootSystem::build(t)?;
        let n = rs.rank;
        if n > MAX_RANK {
            return Err(Error::RankCap { rank: n, cap: MAX_RANK });
        }
        let npos = rs.num_positive();

        let coroot_of = |c: &[i64]| -> Weight {
            let na = rs.inner(c, c);
            let mut d = [0; MAX_RANK];
            for i in 0..n {
                d[i] = (c[i] * rs.gram[i][i] / na) as i32;
            }
            d
        };
        let coroots: Vec<Weight> = rs.positive_roots.iter().map(|r| coroot_of(&r.coords)).collect();
        let theta_s = weight(&rs.root_to_weight_coords(&rs.highest_short_root.coords));
        let theta_co = coroot_of(&rs.highest_short_root.coords);

        let reflection = |alpha: &Weight, co: &Weight| -> Vec<i32> {
            let mut m = vec![0; n * n];
            for k in 0..n {
                for l in 0..n {
                    m[k * n + l] = i32::from(k == l) - co[l] * alpha[k];
                }
            }
            m
        };
        let mut gen_mats = vec![reflection(&theta_s, &theta_co)];
        for j in 0..n {
            let mut alpha = [0; MAX_RANK];
            for (k, a) in alpha.iter_mut().enumerate().take(n) {
                *a = rs.cartan[k][j] as i32;
            }
            let mut co = [0; MAX_RANK];
            co[j] = 1;
            gen_mats.push(reflection(&alpha, &co));
        }

        let mut identity = vec![0; n * n];
        for i in 0..n {
            identity[i * n + i] = 1;
        }
        let mut mats = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0u16)]);
        let mut parent = vec![(0usize, 0usize)];
        let mut finite_len = vec![0u32];
        let mut head = 0;
        while head < mats.len() {
            for j in 1..=n {
                let m = matmul(&mats[head], &gen_mats[j], n);
                if index.contains_key(&m) {
                    continue;
                }
                index.insert(m.clone(), mats.len() as u16);
                mats.push(m);
                parent.push((head, j));
                finite_len.push(finite_len[head] + 1);
            }
            head += 1;
        }
        let mut inv = vec![0u16; mats.len()];
        for w in 1..mats.len() {
            let (p, j) = parent[w];
            inv[w] = index[&matmul(&gen_mats[j], &mats[inv[p] as usize], n)];
        }
        debug_assert_eq!(mats.len() as u128, order);

        let mut right_gen = Vec::with_capacity(mats.len() * (n + 1));
        for m in &mats {
            for g in &gen_mats {
                right_gen.push(index[&matmul(m, g, n)]);
            }
        }

        let pos_w: Vec<Weight> = rs
            .positive_roots
            .iter()
            .map(|r| weight(&rs.root_to_weight_coords(&r.coords)))
            .collect();
        let root_lookup: HashMap<Weight, usize> = rs
            .roots
            .iter()
            .enumerate()
            .map(|(i, r)| (weight(&rs.root_to_weight_coords(&r.coords)), i))
            .collect();
        let inverted = mats
            .iter()
            .map(|m| {
                let mut mask = 0u128;
                for (a, pw) in pos_w.iter().enumerate() {
                    let img = apply_mat(m, pw, n);
                    if root_lookup[&img] >= npos {
                        mask |= 1 << a;
                    }
                }
                mask
            })
            .collect();

        let mut gens = vec![ExtAffineElement {
            w: index[&gen_mats[0]],
            x: wneg(&theta_s),
        }];
        for g in &gen_mats[1..] {
            gens.push(ExtAffineElement {
                w: index[g],
                x: [0; MAX_RANK],
            });
        }

        let mut group = AffineWeylGroup {
            rs,
            rank: n,
            mats,
            index,
            inv,
            right_gen,
            inverted,
            finite_len,
            coroots,
            theta_s,
            gens,
            omega: Vec::new(),
        };
        group.omega = group.compute_omega();
        Ok(group)
    }

    pub fn rstype(&self) -> RootSystemType {
        self.rs.rstype
    }

    pub fn finite_order(&self) -> usize {
        self.mats.len()
    }

    pub fn num_generators(&self) -> usize {
        self.rank + 1
    }

    pub fn generator(&self, k: usize) -> ExtAffineElement {
        self.gens[k]
    }

    pub fn highest_short_root(&self) -> Weight {
        self.theta_s
    }

    pub fn identity(&self) -> ExtAffineElement {
        ExtAffineElement { w: 0, x: [0; MAX_RANK] }
    }

    pub fn translation(&self, x: &[i64]) -> ExtAffineElement {
        ExtAffineElement { w: 0, x: weight(x) }
    }

    pub fn finite(&self, w: u16) -> ExtAffineElement {
        ExtAffineElement { w, x: [0; MAX_RANK] }
    }

    /// Finite Weyl group element with the given reduced word (simple roots 0-based).
    pub fn finite_from_word(&self, word: &[usize]) -> u16 {
        word.iter()
            .fold(0u16, |w, &j| self.right_gen[w as usize * (self.rank + 1) + j + 1])
    }

    pub fn finite_length(&self, w: u16) -> u32 {
        self.finite_len[w as usize]
    }

    pub fn act(&self, w: u16, x: &Weight) -> Weight {
        apply_mat(&self.mats[w as usize], x, self.rank)
    }

    pub fn finite_mul(&self, a: u16, b: u16) -> u16 {
        let n = self.rank;
        self.index[&matmul(&self.mats[a as usize], &self.mats[b as usize], n)]
    }

    pub fn finite_inverse(&self, w: u16) -> u16 {
        self.inv[w as usize]
    }

    pub fn mul(&self, a: &ExtAffineElement, b: &ExtAffineElement) -> ExtAffineElement {
        let winv = self.inv[b.w as usize];
        ExtAffineElement {
            w: self.finite_mul(a.w, b.w),
            x: wadd(&b.x, &self.act(winv, &a.x)),
        }
    }

    pub fn inverse(&self, g: &ExtAffineElement) -> ExtAffineElement {
        ExtAffineElement {
            w: self.inv[g.w as usize],
            x: wneg(&self.act(g.w, &g.x)),
        }
    }

    pub fn mul_gen_right(&self, g: &ExtAffineElement, k: usize) -> ExtAffineElement {
        let r = &self.gens[k];
        ExtAffineElement {
            w: self.right_gen[g.w as usize * (self.rank + 1) + k],
            x: wadd(&r.x, &self.act(r.w, &g.x)),
        }
    }

    pub fn mul_gen_left(&self, k: usize, g: &ExtAffineElement) -> ExtAffineElement {
        self.mul(&self.gens[k], g)
    }

    /// `⟨x, α^∨⟩` for the positive root with index `a`.
    pub fn coroot_pairing(&self, x: &Weight, a: usize) -> i32 {
        let d = &self.coroots[a];
        (0..self.rank).map(|i| x[i] * d[i]).sum()
    }

    /// `Σ_{α>0, wα<0} |⟨x,α^∨⟩ + 1| + Σ_{α>0, wα>0} |⟨x,α^∨⟩|`.
    pub fn length(&self, g: &ExtAffineElement) -> u32 {
        let mask = self.inverted[g.w as usize];
        let mut l = 0u32;
        for (a, d) in self.coroots.iter().enumerate() {
            let mut p: i32 = (0..self.rank).map(|i| g.x[i] * d[i]).sum();
            if mask >> a & 1 == 1 {
                p += 1;
            }
            l += p.unsigned_abs();
        }
        l
    }

    pub fn is_dominant(&self, x: &Weight) -> bool {
        x[..self.rank].iter().all(|&c| c >= 0)
    }

    /// `g = ω · r_{word[0]} ⋯ r_{word[last]}` with `ω` of length zero and the
    /// word reduced.
    pub fn decompose(&self, g: &ExtAffineElement) -> (ExtAffineElement, Vec<usize>) {
        let mut cur = *g;
        let mut len = self.length(&cur);
        let mut rev = Vec::with_capacity(len as usize);
        while len > 0 {
            let (k, next, nl) = (0..=self.rank)
                .find_map(|k| {
                    let h = self.mul_gen_right(&cur, k);
                    let hl = self.length(&h);
                    (hl < len).then_some((k, h, hl))
                })
                .expect("positive-length element has a right descent");
            rev.push(k);
            cur = next;
            len = nl;
        }
        rev.reverse();
        (cur, rev)
    }

    pub fn from_word(&self, omega: &ExtAffineElement, word: &[usize]) -> ExtAffineElement {
        word.iter().fold(*omega, |g, &k| self.mul_gen_right(&g, k))
    }

    fn compute_omega(&self) -> Vec<ExtAffineElement> {
        let mut out = vec![self.identity()];
        for i in 0..self.rank {
            let mut x = vec![0i64; self.rank];
            x[i] = 1;
            let (om, _) = self.decompose(&self.translation(&x));
            if !out.contains(&om) {
                out.push(om);
            }
        }
        let mut i = 0;
        while i < out.len() {
            for j in 0..out.len() {
                let p = self.mul(&out[i], &out[j]);
                if !out.contains(&p) {
                    out.push(p);
                }
            }
            i += 1;
        }
        out.sort();
        out
    }

    /// Length-zero elements, isomorphic to X / Q.
    pub fn omega(&self) -> &[ExtAffineElement] {
        &self.omega
    }

    pub fn conjugate(&self, by: &ExtAffineElement, g: &ExtAffineElement) -> ExtAffineElement {
        self.mul(&self.mul(by, g), &self.inverse(by))
    }

    /// Permutation of the affine generators induced by conjugation with `ω`.
    pub fn omega_permutation(&self, om: &ExtAffineElement) -> Vec<usize> {
        (0..=self.rank)
            .map(|k| {
                let c = self.conjugate(om, &self.gens[k]);
                self.gens.iter().position(|g| *g == c).expect("Ω permutes the generators")
            })
            .collect()
    }

    /// Order of `r_i r_j`.
    pub fn braid_order(&self, i: usize, j: usize) -> u32 {
        let p = self.mul(&self.gens[i], &self.gens[j]);
        let mut cur = p;
        let mut m = 1;
        while cur != self.identity() {
            cur = self.mul(&cur, &p);
            m += 1;
            if m > 12 {
                return 0;
            }
        }
        m
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut x = [0; MAX_RANK];
        x[i] = 1;
        x
    }

    /// Simple root `α_i` in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Weight {
        weight(&(0..self.rank).map(|k| self.rs.cartan[k][i]).collect::<Vec<_>>())
    }

    /// `2ρ` in fundamental-weight coordinates.
    pub fn two_rho(&self) -> Weight {
        let mut x = [0; MAX_RANK];
        for c in x.iter_mut().take(self.rank) {
            *c = 2;
        }
        x
    }

    pub fn orbit(&self, x: &Weight) -> Vec<Weight> {
        let mut out: Vec<Weight> = (0..self.finite_order() as u16).map(|w| self.act(w, x)).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn word_string(word: &[usize]) -> String {
        word.iter().map(|k| format!("r{k}")).collect::<Vec<_>>().join(" ")
    }
}

fn apply_mat(m: &[i32], x: &Weight, n: usize) -> Weight {
    let mut out = [0; MAX_RANK];
    for i in 0..n {
        let mut s = 0;
        for j in 0..n {
            s += m[i * n + j] * x[j];
        }
        out[i] = s;
    }
    out
}

#[derive(Clone, Debug, Default)]
pub struct HeckeElement {
    terms: HashMap<ExtAffineElement, Laurent>,
}

impl PartialEq for HeckeElement {
    fn eq(&self, other: &Self) -> bool {
        let nz = |e: &HeckeElement| e.terms.values().filter(|c| !c.is_zero()).count();
        nz(self) == nz(other)
            && self
                .terms
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .all(|(g, c)| other.terms.get(g) == Some(c))
    }
}

impl Eq for HeckeElement {}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(g: ExtAffineElement) -> Self {
        let mut e = Self::zero();
        e.add_term(g, &Laurent::one());
        e
    }

    pub fn add_term(&mut self, g: ExtAffineElement, c: &Laurent) {
        self.add_scaled(g, c, 1, 0);
    }

    fn add_scaled(&mut self, g: ExtAffineElement, c: &Laurent, k: i128, shift: i32) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(g).or_default();
        e.add_scaled_shift(c, k, shift);
        if e.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn coeff(&self, g: &ExtAffineElement) -> Laurent {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExtAffineElement, &Laurent)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Laurent) -> Self {
        let mut out = Self::zero();
        for (g, x) in &self.terms {
            out.add_term(*g, &(x * c));
        }
        out
    }

    pub fn shift(&self, k: i32) -> Self {
        HeckeElement {
            terms: self.terms.iter().map(|(g, c)| (*g, c.shift(k))).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_scaled(*g, c, -1, 0);
        }
        out
    }

    /// Image under `v ↦ 1` in the group algebra.
    pub fn at_one(&self) -> HashMap<ExtAffineElement, i128> {
        self.terms
            .iter()
            .map(|(g, c)| (*g, c.at_one()))
            .filter(|(_, c)| *c != 0)
            .collect()
    }
}

pub struct HeckeAlgebra<'a> {
    pub group: &'a AffineWeylGroup,
    rank_cap: usize,
}

impl<'a> HeckeAlgebra<'a> {
    pub fn new(group: &'a AffineWeylGroup) -> Self {
        HeckeAlgebra {
            group,
            rank_cap: DEFAULT_RANK_CAP,
        }
    }

    pub fn with_rank_cap(mut self, cap: usize) -> Self {
        self.rank_cap = cap;
        self
    }

    pub fn one(&self) -> HeckeElement {
        HeckeElement::basis(self.group.identity())
    }

    pub fn t(&self, g: &ExtAffineElement) -> HeckeElement {
        HeckeElement::basis(*g)
    }

    /// `E · T_{r_k}`.
    pub fn right_gen(&self, e: &HeckeElement, k: usize) -> HeckeElement {
        let gr = self.group;
        let mut out = HeckeElement::zero();
        for (g, c) in &e.terms {
            let h = gr.mul_gen_right(g, k);
            if gr.length(&h) > gr.length(g) {
                out.add_term(h, c);
            } else {
                out.add_scaled(*g, c, 1, 2);
                out.add_scaled(*g, c, -1, 0);
                out.add_scaled(h, c, 1, 2);
            }
        }
        out
    }

    /// `E · T_{r_k}⁻¹`, with `T_r⁻¹ = q⁻¹T_r + (q⁻¹ − 1)`.
    pub fn right_gen_inv(&self, e: &HeckeElement, k: usize) -> HeckeElement {
        let gr = self.group;
        let mut out = HeckeElement::zero();
        for (g, c) in &e.terms {
            let h = gr.mul_gen_right(g, k);
            if gr.length(&h) > gr.length(g) {
                out.add_scaled(h, c, 1, -2);
                out.add_scaled(*g, c, 1, -2);
                out.add_scaled(*g, c, -1, 0);
            } else {
                out.add_term(h, c);
            }
        }
        out
    }

    pub fn left_gen(&self, k: usize, e: &HeckeElement) -> HeckeElement {
        let gr = self.group;
        let mut out = HeckeElement::zero();
        for (g, c) in &e.terms {
            let h = gr.mul_gen_left(k, g);
            if gr.length(&h) > gr.length(g) {
                out.add_term(h, c);
            } else {
                out.add_scaled(*g, c, 1, 2);
                out.add_scaled(*g, c, -1, 0);
                out.add_scaled(h, c, 1, 2);
            }
        }
        out
    }

    pub fn left_gen_inv(&self, k: usize, e: &HeckeElement) -> HeckeElement {
        let gr = self.group;
        let mut out = HeckeElement::zero();
        for (g, c) in &e.terms {
            let h = gr.mul_gen_left(k, g);
            if gr.length(&h) > gr.length(g) {
                out.add_scaled(h, c, 1, -2);
                out.add_scaled(*g, c, 1, -2);
                out.add_scaled(*g, c, -1, 0);
            } else {
                out.add_term(h, c);
            }
        }
        out
    }

    pub fn right_omega(&self, e: &HeckeElement, om: &ExtAffineElement) -> HeckeElement {
        HeckeElement {
            terms: e.terms.iter().map(|(g, c)| (self.group.mul(g, om), c.clone())).collect(),
        }
    }

    pub fn left_omega(&self, om: &ExtAffineElement, e: &HeckeElement) -> HeckeElement {
        HeckeElement {
            terms: e.terms.iter().map(|(g, c)| (self.group.mul(om, g), c.clone())).collect(),
        }
    }

    /// `E · T_g`.
    pub fn right_basis(&self, e: &HeckeElement, g: &ExtAffineElement) -> HeckeElement {
        let (om, word) = self.group.decompose(g);
        let mut cur = if om == self.group.identity() {
            e.clone()
        } else {
            self.right_omega(e, &om)
        };
        for k in word {
            cur = self.right_gen(&cur, k);
        }
        cur
    }

    /// `E · T_g⁻¹`.
    pub fn right_basis_inv(&self, e: &HeckeElement, g: &ExtAffineElement) -> HeckeElement {
        let (om, word) = self.group.decompose(g);
        let mut cur = e.clone();
        for &k in word.iter().rev() {
            cur = self.right_gen_inv(&cur, k);
        }
        if om != self.group.identity() {
            cur = self.right_omega(&cur, &self.group.inverse(&om));
        }
        cur
    }

    /// `T_g · E`.
    pub fn left_basis(&self, g: &ExtAffineElement, e: &HeckeElement) -> HeckeElement {
        let (om, word) = self.group.decompose(g);
        let mut cur = e.clone();
        for &k in word.iter().rev() {
            cur = self.left_gen(k, &cur);
        }
        if om != self.group.identity() {
            cur = self.left_omega(&om, &cur);
        }
        cur
    }

    pub fn inverse_basis(&self, g: &ExtAffineElement) -> HeckeElement {
        self.right_basis_inv(&self.one(), g)
    }

    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        if self.group.rank > self.rank_cap {
            return Err(Error::RankCap {
                rank: self.group.rank,
                cap: self.rank_cap,
            });
        }
        Ok(self.mul_unchecked(a, b))
    }

    fn mul_unchecked(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (g, c) in &b.terms {
            let part = self.right_basis(a, g);
            for (h, d) in part.terms {
                out.add_term(h, &(&d * c));
            }
        }
        out
    }

    /// `T_g T_h` when `l(gh) = l(g) + l(h)`; any rank.
    pub fn mul_length_additive(&self, g: &ExtAffineElement, h: &ExtAffineElement) -> Result<HeckeElement> {
        let gr = self.group;
        let gh = gr.mul(g, h);
        if gr.length(&gh) != gr.length(g) + gr.length(h) {
            return Err(Error::Invalid("product is not length-additive".into()));
        }
        Ok(self.t(&gh))
    }

    /// `θ_x = q^{(l(z) − l(y))/2} T_y T_z⁻¹` for `x = y − z`, `y, z` dominant.
    pub fn theta_decomposed(&self, y: &Weight, z: &Weight) -> Result<HeckeElement> {
        self.right_theta_decomposed(&self.one(), y, z)
    }

    pub fn theta(&self, x: &Weight) -> HeckeElement {
        self.right_theta(&self.one(), x)
    }

    /// `E · θ_x`.
    pub fn right_theta(&self, e: &HeckeElement, x: &Weight) -> HeckeElement {
        let (y, z) = split_dominant(x, self.group.rank);
        self.right_theta_decomposed(e, &y, &z).expect("split parts are dominant")
    }

    fn right_theta_decomposed(&self, e: &HeckeElement, y: &Weight, z: &Weight) -> Result<HeckeElement> {
        let gr = self.group;
        if !gr.is_dominant(y) || !gr.is_dominant(z) {
            return Err(Error::Domain("θ decomposition needs dominant weights".into()));
        }
        let ty = ExtAffineElement { w: 0, x: *y };
        let tz = ExtAffineElement { w: 0, x: *z };
        let shift = gr.length(&tz) as i32 - gr.length(&ty) as i32;
        let cur = self.right_basis(e, &ty);
        Ok(self.right_basis_inv(&cur, &tz).shift(shift))
    }

    /// `S_x = Σ_{y ∈ W₀x} θ_y`.
    pub fn orbit_sum(&self, x: &Weight) -> HeckeElement {
        self.group
            .orbit(x)
            .iter()
            .fold(HeckeElement::zero(), |acc, y| acc.add(&self.theta(y)))
    }
}

fn split_dominant(x: &Weight, n: usize) -> (Weight, Weight) {
    let mut y = [0; MAX_RANK];
    let mut z = [0; MAX_RANK];
    for i in 0..n {
        if x[i] >= 0 {
            y[i] = x[i];
        } else {
            z[i] = -x[i];
        }
    }
    (y, z)
}

/// Weights `x` with `Σ|x_i| ≤ radius` (`l1`) or `max|x_i| ≤ radius`.
pub fn weight_ball(rank: usize, radius: i32, l1: bool) -> Vec<Weight> {
    let mut out = vec![[0; MAX_RANK]];
    for i in 0..rank {
        let mut next = Vec::new();
        for x in &out {
            for c in -radius..=radius {
                let mut y = *x;
                y[i] = c;
                let ok = if l1 {
                    y.iter().map(|a| a.abs()).sum::<i32>() <= radius
                } else {
                    true
                };
                if ok {
                    next.push(y);
                }
            }
        }
        out = next;
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub rstype: RootSystemType,
    pub radius: i32,
    pub weights: usize,
    pub pairs: usize,
    pub multiplicative_failures: usize,
    pub commutation_failures: usize,
    pub decomposition_checks: usize,
    pub decomposition_failures: usize,
    pub central_checks: usize,
    pub central_failures: usize,
    pub reflection_checks: usize,
    pub reflection_failures: usize,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.multiplicative_failures == 0
            && self.commutation_failures == 0
            && self.decomposition_failures == 0
            && self.central_failures == 0
            && self.reflection_failures == 0
    }
}

/// Relations among the `θ_x` for `x` with `max|x_i| ≤ radius`:
/// `θ_xθ_y = θ_{x+y} = θ_yθ_x`, independence of the dominant decomposition,
/// centrality of the orbit sums `S_{ϖ_i}`, and
/// `θ_{s_r x} = q T_r⁻¹ θ_x T_r⁻¹` when `⟨x, α_r^∨⟩ = 1`.
pub fn check_theta_relations(t: RootSystemType, radius: i32) -> Result<RelationReport> {
    let group = AffineWeylGroup::new(t)?;
    let alg = HeckeAlgebra::new(&group);
    if group.rank > DEFAULT_RANK_CAP {
        return Err(Error::RankCap {
            rank: group.rank,
            cap: DEFAULT_RANK_CAP,
        });
    }
    let n = group.rank;
    let ball = weight_ball(n, radius, false);
    let thetas: HashMap<Weight, HeckeElement> = ball.iter().map(|x| (*x, alg.theta(x))).collect();
    let mut sums: HashMap<Weight, HeckeElement> = HashMap::new();
    let mut theta_of = |x: &Weight| -> HeckeElement {
        if let Some(e) = thetas.get(x) {
            return e.clone();
        }
        sums.entry(*x).or_insert_with(|| alg.theta(x)).clone()
    };

    let mut report = RelationReport {
        rstype: t,
        radius,
        weights: ball.len(),
        pairs: 0,
        multiplicative_failures: 0,
        commutation_failures: 0,
        decomposition_checks: 0,
        decomposition_failures: 0,
        central_checks: 0,
        central_failures: 0,
        reflection_checks: 0,
        reflection_failures: 0,
    };

    for (i, x) in ball.iter().enumerate() {
        for y in &ball[i..] {
            report.pairs += 1;
            let xy = alg.right_theta(&thetas[x], y);
            let yx = alg.right_theta(&thetas[y], x);
            let target = theta_of(&wadd(x, y));
            if xy != target {
                report.multiplicative_failures += 1;
            }
            if xy != yx {
                report.commutation_failures += 1;
            }
        }
    }

    let shifts = [group.two_rho(), group.fundamental_weight(0), group.fundamental_weight(n - 1)];
    for x in &ball {
        let (y, z) = split_dominant(x, n);
        for d in &shifts {
            report.decomposition_checks += 1;
            let alt = alg.theta_decomposed(&wadd(&y, d), &wadd(&z, d))?;
            if alt != thetas[x] {
                report.decomposition_failures += 1;
            }
        }
    }

    for i in 0..n {
        let s = alg.orbit_sum(&group.fundamental_weight(i));
        for k in 0..=n {
            report.central_checks += 1;
            if alg.left_gen(k, &s) != alg.right_gen(&s, k) {
                report.central_failures += 1;
            }
        }
        for om in group.omega() {
            report.central_checks += 1;
            if alg.left_omega(om, &s) != alg.right_omega(&s, om) {
                report.central_failures += 1;
            }
        }
    }

    for x in &ball {
        for r in 0..n {
            if x[r] != 1 {
                continue;
            }
            report.reflection_checks += 1;
            let sx = group.act(group.finite_from_word(&[r]), x);
            let lhs = theta_of(&sx);
            let rhs = alg
                .right_gen_inv(&alg.left_gen_inv(r + 1, &thetas[x]), r + 1)
                .shift(2);
            if lhs != rhs {
                report.reflection_failures += 1;
            }
        }
    }
    Ok(report)
}

fn random_element(group: &AffineWeylGroup, rng: &mut ChaCha8Rng, max_len: usize) -> ExtAffineElement {
    let om = group.omega()[rng.gen_range(0..group.omega().len())];
    let len = rng.gen_range(0..=max_len);
    let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=group.rank)).collect();
    group.from_word(&om, &word)
}

fn random_hecke(group: &AffineWeylGroup, rng: &mut ChaCha8Rng) -> HeckeElement {
    let mut e = HeckeElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let g = random_element(group, rng, 5);
        let c = Laurent::monomial(rng.gen_range(-3..=3), rng.gen_range(-2..=2));
        e.add_term(g, &c);
    }
    e
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraCheck {
    pub rstype: RootSystemType,
    pub triples: usize,
    pub associativity_failures: usize,
    pub specialization_checks: usize,
    pub specialization_failures: usize,
}

/// Associativity on random triples and the `q = 1` specialization to the
/// group algebra on random pairs.
pub fn check_algebra(t: RootSystemType, triples: usize, seed: u64) -> Result<AlgebraCheck> {
    let group = AffineWeylGroup::new(t)?;
    let alg = HeckeAlgebra::new(&group);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assoc = 0;
    for _ in 0..triples {
        let a = random_hecke(&group, &mut rng);
        let b = random_hecke(&group, &mut rng);
        let c = random_hecke(&group, &mut rng);
        let left = alg.mul(&alg.mul(&a, &b)?, &c)?;
        let right = alg.mul(&a, &alg.mul(&b, &c)?)?;
        if left != right {
            assoc += 1;
        }
    }
    let mut spec = 0;
    for _ in 0..triples {
        let g = random_element(&group, &mut rng, 8);
        let h = random_element(&group, &mut rng, 8);
        let p = alg.mul(&alg.t(&g), &alg.t(&h))?.at_one();
        let expect = HashMap::from([(group.mul(&g, &h), 1i128)]);
        if p != expect {
            spec += 1;
        }
    }
    Ok(AlgebraCheck {
        rstype: t,
        triples,
        associativity_failures: assoc,
        specialization_checks: triples,
        specialization_failures: spec,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FiniteRelations {
    pub rstype: RootSystemType,
    pub order: usize,
    pub trivial_relations: bool,
    pub sign_relations: bool,
    pub product_vanishes: bool,
}

/// `D = Σ T_w`, `D' = Σ (−q)^{−l(w)} T_w` over the finite Weyl group:
/// `T_r D = D T_r = qD`, `T_r D' = D' T_r = −D'`, and `D·D' = D'·D = 0`.
pub fn check_finite_idempotents(t: RootSystemType) -> Result<FiniteRelations> {
    if t.rank > FINITE_RELATION_RANK_CAP {
        return Err(Error::RankCap {
            rank: t.rank,
            cap: FINITE_RELATION_RANK_CAP,
        });
    }
    let group = AffineWeylGroup::new(t)?;
    let alg = HeckeAlgebra::new(&group).with_rank_cap(FINITE_RELATION_RANK_CAP);
    let mut d = HeckeElement::zero();
    let mut dp = HeckeElement::zero();
    for w in 0..group.finite_order() as u16 {
        let g = group.finite(w);
        let l = group.finite_length(w) as i32;
        d.add_term(g, &Laurent::one());
        let sign = if l % 2 == 0 { 1 } else { -1 };
        dp.add_term(g, &Laurent::monomial(sign, -2 * l));
    }
    let q = Laurent::q_pow(1);
    let qd = d.scale(&q);
    let mdp = dp.scale(&Laurent::constant(-1));
    let mut triv = true;
    let mut sign = true;
    for k in 1..=group.rank {
        triv &= alg.left_gen(k, &d) == qd && alg.right_gen(&d, k) == qd;
        sign &= alg.left_gen(k, &dp) == mdp && alg.right_gen(&dp, k) == mdp;
    }
    let vanish = alg.mul(&d, &dp)?.is_zero() && alg.mul(&dp, &d)?.is_zero();
    Ok(FiniteRelations {
        rstype: t,
        order: group.finite_order(),
        trivial_relations: triv,
        sign_relations: sign,
        product_vanishes: vanish,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorValue {
    /// `T_r ↦ q`.
    Q,
    /// `T_r ↦ −1`.
    MinusOne,
}

impl GeneratorValue {
    fn monomial(self) -> (i32, i32) {
        match self {
            GeneratorValue::Q => (1, 2),
            GeneratorValue::MinusOne => (-1, 0),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OneDimCharacter {
    pub rstype: RootSystemType,
    pub values: Vec<GeneratorValue>,
    /// `χ(θ_{α_i})`.
    pub theta_simple: Vec<Laurent>,
    /// `k_i` with `χ(θ_{α_i}) = q^{k_i}`.
    pub exponents: Vec<i32>,
}

/// The one-dimensional character of the affine Hecke algebra with
/// `T_{r_k} ↦ values[k]` (trivial on Ω), evaluated on `θ_{α_i}`.
pub fn one_dim_character(group: &AffineWeylGroup, values: &[GeneratorValue]) -> Result<OneDimCharacter> {
    let n = group.rank;
    if values.len() != n + 1 {
        return Err(Error::InconsistentAssignment(format!(
            "expected {} generator values, got {}",
            n + 1,
            values.len()
        )));
    }
    for i in 0..=n {
        for j in i + 1..=n {
            let m = group.braid_order(i, j);
            if m % 2 == 1 && values[i] != values[j] {
                return Err(Error::InconsistentAssignment(format!(
                    "r{i} and r{j} satisfy an odd braid relation (m = {m}) but get different values"
                )));
            }
        }
    }
    for om in group.omega() {
        let perm = group.omega_permutation(om);
        for (k, &pk) in perm.iter().enumerate() {
            if values[k] != values[pk] {
                return Err(Error::InconsistentAssignment(format!(
                    "a length-zero element maps r{k} to r{pk} but their values differ"
                )));
            }
        }
    }
    let chi_word = |g: &ExtAffineElement| -> (i32, i32) {
        let (om, word) = group.decompose(g);
        debug_assert_eq!(om, group.identity());
        word.iter().fold((1, 0), |(s, e), &k| {
            let (s2, e2) = values[k].monomial();
            (s * s2, e + e2)
        })
    };
    let z = wscale(&group.two_rho(), 2);
    let tz = ExtAffineElement { w: 0, x: z };
    let (sz, ez) = chi_word(&tz);
    let lz = group.length(&tz) as i32;
    let mut theta_simple = Vec::with_capacity(n);
    let mut exponents = Vec::with_capacity(n);
    for i in 0..n {
        let y = wadd(&group.simple_root(i), &z);
        let ty = ExtAffineElement { w: 0, x: y };
        let (sy, ey) = chi_word(&ty);
        let ly = group.length(&ty) as i32;
        let sign = sy * sz;
        let vexp = lz - ly + ey - ez;
        let val = Laurent::monomial(sign as i128, vexp);
        if sign != 1 || vexp % 2 != 0 {
            return Err(Error::Invalid(format!("χ(θ_α{}) = {val} is not a power of q", i + 1)));
        }
        exponents.push(vexp / 2);
        theta_simple.push(val);
    }
    Ok(OneDimCharacter {
        rstype: group.rstype(),
        values: values.to_vec(),
        theta_simple,
        exponents,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct WordCheck {
    pub rstype: RootSystemType,
    pub label: String,
    pub word: String,
    pub expected_length: u32,
    pub computed_length: u32,
    pub matches: bool,
}

/// In type `A_n`, the rotation `τ ∈ Ω` with `τ r_{k+1} τ⁻¹ = r_k` (indices mod n+1).
pub fn type_a_rotation(group: &AffineWeylGroup) -> Option<ExtAffineElement> {
    let n = group.rank;
    group
        .omega()
        .iter()
        .find(|om| {
            let p = group.omega_permutation(om);
            (0..=n).all(|k| p[(k + 1) % (n + 1)] == k)
        })
        .copied()
}

/// `t_{ϖ_i} = τ^{n+1−i} (r_{n+1−i} ⋯ r_n)(r_{n−i} ⋯ r_{n−1}) ⋯ (r_1 ⋯ r_i)`
/// with length `i(n+1−i)`.
pub fn type_a_word(n: usize, i: usize) -> Vec<usize> {
    let mut word = Vec::with_capacity(i * (n + 1 - i));
    for start in (1..=n + 1 - i).rev() {
        word.extend(start..start + i);
    }
    word
}

pub fn check_type_a_words(n: usize) -> Result<Vec<WordCheck>> {
    let t = RootSystemType::new(crate::rootsys::Family::A, n)?;
    let group = AffineWeylGroup::new(t)?;
    let tau = type_a_rotation(&group).ok_or_else(|| Error::Invalid("no rotation in Ω".into()))?;
    let mut out = Vec::new();
    for i in 1..=n {
        let word = type_a_word(n, i);
        let mut om = group.identity();
        for _ in 0..(n + 1 - i) {
            om = group.mul(&om, &tau);
        }
        let g = group.from_word(&om, &word);
        let target = ExtAffineElement {
            w: 0,
            x: group.fundamental_weight(i - 1),
        };
        let expected = (i * (n + 1 - i)) as u32;
        let len = group.length(&g);
        out.push(WordCheck {
            rstype: t,
            label: format!("x{i}"),
            word: format!("τ^{} {}", n + 1 - i, AffineWeylGroup::word_string(&word)),
            expected_length: expected,
            computed_length: len,
            matches: g == target && len == expected && word.len() as u32 == expected,
        });
    }
    Ok(out)
}

fn check_word(group: &AffineWeylGroup, label: &str, word: &[usize], target: &Weight) -> WordCheck {
    let g = group.from_word(&group.identity(), word);
    let t = ExtAffineElement { w: 0, x: *target };
    let len = group.length(&g);
    WordCheck {
        rstype: group.rstype(),
        label: label.into(),
        word: AffineWeylGroup::word_string(word),
        expected_length: group.length(&t),
        computed_length: len,
        matches: g == t && len as usize == word.len(),
    }
}

pub const G2_X1_WORD: [usize; 6] = [0, 1, 2, 1, 2, 1];
pub const G2_X2_WORD: [usize; 10] = [0, 1, 2, 1, 2, 0, 1, 2, 1, 2];
pub const F4_X4_WORD: [usize; 16] = [0, 4, 3, 2, 1, 3, 4, 2, 3, 2, 4, 3, 1, 2, 3, 4];

pub fn check_g2_words() -> Result<Vec<WordCheck>> {
    let group = AffineWeylGroup::new(RootSystemType::of("G2"))?;
    Ok(vec![
        check_word(&group, "x1", &G2_X1_WORD, &group.fundamental_weight(0)),
        check_word(&group, "x2", &G2_X2_WORD, &group.fundamental_weight(1)),
    ])
}

pub fn check_f4_word() -> Result<WordCheck> {
    let group = AffineWeylGroup::new(RootSystemType::of("F4"))?;
    Ok(check_word(&group, "x4", &F4_X4_WORD, &group.fundamental_weight(3)))
}

#[derive(Clone, Debug, Serialize)]
pub struct ReflectionStep {
    pub from: Vec<i32>,
    pub reflection: usize,
    pub pairing: i32,
    pub to: Vec<i32>,
    pub holds: bool,
}

/// The chain `ϖ₄ → ϖ₃−ϖ₄ → ϖ₂−ϖ₃ → ϖ₁−ϖ₂+ϖ₃` in F4, each step `x ↦ s_r x` with
/// `⟨x, α_r^∨⟩ = 1`, which expresses every `θ_{ϖ_i}` through `θ_{ϖ₄}`.
pub fn check_f4_reflection_chain() -> Result<Vec<ReflectionStep>> {
    let group = AffineWeylGroup::new(RootSystemType::of("F4"))?;
    let chain: [([i32; 4], usize, [i32; 4]); 3] = [
        ([0, 0, 0, 1], 3, [0, 0, 1, -1]),
        ([0, 0, 1, -1], 2, [0, 1, -1, 0]),
        ([0, 1, -1, 0], 1, [1, -1, 1, 0]),
    ];
    Ok(chain
        .iter()
        .map(|(from, r, to)| {
            let x = weight(&from.map(i64::from));
            let s = group.act(group.finite_from_word(&[*r]), &x);
            let pairing = x[*r];
            ReflectionStep {
                from: from.to_vec(),
                reflection: r + 1,
                pairing,
                to: to.to_vec(),
                holds: pairing == 1 && s[..4] == to[..],
            }
        })
        .collect())
}

/// `θ_{α_i} = θ_{x_i}² θ_{x_{i+1}}⁻¹ θ_{x_{i−1}}⁻¹` in type `A_n`, with each
/// `θ_{x_j} = q^{−l(x_j)/2} T_{x_j}` built from its rotation word.
pub fn check_type_a_simple_theta(n: usize) -> Result<Vec<bool>> {
    let t = RootSystemType::new(crate::rootsys::Family::A, n)?;
    let group = AffineWeylGroup::new(t)?;
    let alg = HeckeAlgebra::new(&group);
    let tau = type_a_rotation(&group).ok_or_else(|| Error::Invalid("no rotation in Ω".into()))?;
    let t_x = |i: usize| -> HeckeElement {
        if i == 0 || i == n + 1 {
            return alg.one();
        }
        let mut om = group.identity();
        for _ in 0..(n + 1 - i) {
            om = group.mul(&om, &tau);
        }
        let mut e = alg.t(&om);
        for k in type_a_word(n, i) {
            e = alg.right_gen(&e, k);
        }
        e.shift(-((i * (n + 1 - i)) as i32))
    };
    let t_x_inv = |i: usize| -> HeckeElement {
        if i == 0 || i == n + 1 {
            return alg.one();
        }
        let g = ExtAffineElement {
            w: 0,
            x: group.fundamental_weight(i - 1),
        };
        alg.inverse_basis(&g).shift((i * (n + 1 - i)) as i32)
    };
    let mut out = Vec::new();
    for i in 1..=n {
        let xi = t_x(i);
        let lhs = alg.mul_unchecked(
            &alg.mul_unchecked(&alg.mul_unchecked(&xi, &xi), &t_x_inv(i + 1)),
            &t_x_inv(i - 1),
        );
        out.push(lhs == alg.theta(&group.simple_root(i - 1)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::VecDeque;

    fn grp(s: &str) -> AffineWeylGroup {
        AffineWeylGroup::new(RootSystemType::of(s)).unwrap()
    }

    #[test]
    fn generators_have_length_one_and_are_involutions() {
        for s in ["A1", "A2", "B2", "C3", "G2", "F4", "D4"] {
            let g = grp(s);
            for k in 0..=g.rank {
                let r = g.generator(k);
                assert_eq!(g.length(&r), 1, "{s} r{k}");
                assert_eq!(g.mul(&r, &r), g.identity());
            }
            for om in g.omega() {
                assert_eq!(g.length(om), 0);
            }
            assert_eq!(g.omega().len() as u64, g.rs.center_order(), "{s}");
        }
    }

    #[test]
    fn length_formula_matches_word_metric() {
        for s in ["A2", "B2", "G2", "A3"] {
            let g = grp(s);
            let mut dist: HashMap<ExtAffineElement, u32> = HashMap::from([(g.identity(), 0)]);
            let mut queue = VecDeque::from([g.identity()]);
            while let Some(x) = queue.pop_front() {
                let d = dist[&x];
                if d == 7 {
                    continue;
                }
                for k in 0..=g.rank {
                    let y = g.mul_gen_right(&x, k);
                    if !dist.contains_key(&y) {
                        dist.insert(y, d + 1);
                        queue.push_back(y);
                    }
                }
            }
            for (x, d) in &dist {
                assert_eq!(g.length(x), *d, "{s}");
            }
        }
    }

    #[test]
    fn coxeter_matrices() {
        let a2 = grp("A2");
        assert_eq!(a2.braid_order(0, 1), 3);
        assert_eq!(a2.braid_order(0, 2), 3);
        let g2 = grp("G2");
        assert_eq!(g2.braid_order(0, 1), 3);
        assert_eq!(g2.braid_order(0, 2), 2);
        assert_eq!(g2.braid_order(1, 2), 6);
        let f4 = grp("F4");
        assert_eq!(f4.braid_order(0, 4), 3);
        assert_eq!(f4.braid_order(0, 3), 2);
        let b3 = grp("B3");
        assert_eq!(b3.braid_order(0, 1), 4);
    }

    #[test]
    fn decomposition_roundtrip() {
        let g = grp("B2");
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let x = random_element(&g, &mut rng, 12);
            let (om, word) = g.decompose(&x);
            assert_eq!(g.from_word(&om, &word), x);
            assert_eq!(word.len() as u32, g.length(&x));
        }
    }

    #[test]
    fn quadratic_relation() {
        let g = grp("A2");
        let alg = HeckeAlgebra::new(&g);
        for k in 0..=2 {
            let t = alg.t(&g.generator(k));
            let sq = alg.mul(&t, &t).unwrap();
            let q = Laurent::q_pow(1);
            let expect = t.scale(&(&q - &Laurent::one())).add(&alg.one().scale(&q));
            assert_eq!(sq, expect);
            let inv = alg.inverse_basis(&g.generator(k));
            assert_eq!(alg.mul(&t, &inv).unwrap(), alg.one());
        }
    }

    #[test]
    fn theta_of_dominant_is_normalized_basis() {
        let g = grp("G2");
        let alg = HeckeAlgebra::new(&g);
        let x = g.fundamental_weight(1);
        let th = alg.theta(&x);
        let tx = ExtAffineElement { w: 0, x };
        assert_eq!(th, HeckeElement::basis(tx).shift(-(g.length(&tx) as i32)));
        assert_eq!(g.length(&tx), 10);
    }

    #[test]
    fn theta_relations_small_rank() {
        for s in ["A2", "B2", "G2"] {
            let r = check_theta_relations(RootSystemType::of(s), 2).unwrap();
            assert!(r.holds(), "{r:?}");
            assert!(r.pairs > 50);
            assert!(r.reflection_checks > 0);
        }
    }

    #[test]
    fn algebra_axioms() {
        for s in ["A2", "B2", "G2"] {
            let r = check_algebra(RootSystemType::of(s), 100, 11).unwrap();
            assert_eq!(r.associativity_failures, 0);
            assert_eq!(r.specialization_failures, 0);
        }
    }

    #[test]
    fn rank_cap_refuses() {
        let g = grp("A3");
        let alg = HeckeAlgebra::new(&g);
        assert!(matches!(alg.mul(&alg.one(), &alg.one()), Err(Error::RankCap { .. })));
        assert!(alg.mul_length_additive(&g.generator(1), &g.generator(2)).is_ok());
        assert!(check_finite_idempotents(RootSystemType::of("A4")).is_err());
    }

    #[test]
    fn finite_idempotents() {
        for s in ["A1", "A2", "B2", "G2", "A3", "B3", "C3"] {
            let r = check_finite_idempotents(RootSystemType::of(s)).unwrap();
            assert!(r.trivial_relations && r.sign_relations && r.product_vanishes, "{s}");
        }
    }

    #[test]
    fn characters() {
        use GeneratorValue::{MinusOne as M, Q};
        let a3 = grp("A3");
        assert_eq!(one_dim_character(&a3, &[Q; 4]).unwrap().exponents, vec![1, 1, 1]);
        assert_eq!(one_dim_character(&a3, &[M; 4]).unwrap().exponents, vec![-1, -1, -1]);
        assert!(one_dim_character(&a3, &[Q, M, Q, Q]).is_err());
        let f4 = grp("F4");
        let c = one_dim_character(&f4, &[M, Q, Q, M, M]).unwrap();
        assert_eq!(c.exponents, vec![1, 1, -1, -1]);
        let g2 = grp("G2");
        assert_eq!(one_dim_character(&g2, &[Q, Q, M]).unwrap().exponents, vec![1, -1]);
        let b3 = grp("B3");
        assert_eq!(one_dim_character(&b3, &[M, Q, Q, M]).unwrap().exponents, vec![1, 1, -1]);
        assert!(one_dim_character(&b3, &[M, Q, Q, Q]).is_err());
    }

    #[test]
    fn translation_words() {
        for n in 1..=6 {
            for w in check_type_a_words(n).unwrap() {
                assert!(w.matches, "{w:?}");
            }
        }
        for w in check_g2_words().unwrap() {
            assert!(w.matches, "{w:?}");
        }
        let f = check_f4_word().unwrap();
        assert!(f.matches, "{f:?}");
        assert_eq!(f.computed_length, 16);
        assert!(check_f4_reflection_chain().unwrap().iter().all(|s| s.holds));
        let g2 = grp("G2");
        assert_eq!(g2.rs.fundamental_weights[0], vec![2.into(), 1.into()]);
        assert_eq!(g2.rs.fundamental_weights[1], vec![3.into(), 2.into()]);
    }

    #[test]
    fn type_a_simple_theta() {
        for n in 2..=3 {
            assert!(check_type_a_simple_theta(n).unwrap().iter().all(|&b| b), "A{n}");
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]
        #[test]
        fn products_follow_lengths(
            name in proptest::sample::select(vec!["A2", "B2", "G2"]),
            a in proptest::collection::vec(0usize..3, 0..6),
            b in proptest::collection::vec(0usize..3, 0..6),
        ) {
            let g = AffineWeylGroup::new(RootSystemType::of(name)).unwrap();
            let alg = HeckeAlgebra::new(&g);
            let x = g.from_word(&g.identity(), &a);
            let y = g.from_word(&g.identity(), &b);
            let xy = g.mul(&x, &y);
            let (lx, ly, lxy) = (g.length(&x), g.length(&y), g.length(&xy));
            proptest::prop_assert!(lxy <= lx + ly);
            let prod = alg.mul(&alg.t(&x), &alg.t(&y)).unwrap();
            proptest::prop_assert_eq!(prod.sub(&alg.t(&xy)).is_zero(), lxy == lx + ly);
        }
    }
}
