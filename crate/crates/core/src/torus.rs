//! Semisimple elements of the maximal torus of the simply connected group.
//!
//! A point is described by its exponents `e_i` with `α_i(s) = q^{e_i}`; this
//! is the coweight `v = Σ e_i ϖ_i^∨` written in fundamental coweight
//! coordinates. When `q` has finite order `m` the point is
//! `exp(2πi v / m)`, and two exponent vectors describe the same point iff
//! their difference lies in `m·Q^∨`, i.e. `C^{-T}(e − e') / m ∈ Z^n`.
//! When `q` is not a root of unity the point is `q^v · exp(2πi u)` and the
//! torsion part `u` is kept separately as `twist`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{self, RatMatrix, Rational};
use crate::rootsys::{Family, Root, RootSystem, RootSystemType};
use crate::weylgrp::{self, WeylElement};

/// Multiplicative order of `q`. `Finite(1)` models `q = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QOrder {
    Finite(u64),
    Infinite,
}

impl QOrder {
    /// `(q − 1) Σ q^{l(w)} ≠ 0`.
    pub fn poincare_nonvanishing(self, t: RootSystemType) -> bool {
        match self {
            QOrder::Infinite => true,
            QOrder::Finite(1) => false,
            QOrder::Finite(m) => !weylgrp::poincare_vanishes(t, m),
        }
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            QOrder::Finite(m) => Some(m),
            QOrder::Infinite => None,
        }
    }
}

impl fmt::Display for QOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QOrder::Finite(m) => write!(f, "{m}"),
            QOrder::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for QOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinite" | "infinity" | "∞" => Ok(QOrder::Infinite),
            other => other
                .parse::<u64>()
                .ok()
                .filter(|&m| m >= 1)
                .map(QOrder::Finite)
                .ok_or_else(|| Error::Invalid(format!("bad order of q: `{s}`"))),
        }
    }
}

impl Serialize for QOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QOrder {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusPoint {
    /// `e_i = <α_i, v>`: coordinates of `v` in the fundamental coweights.
    pub v: Vec<Rational>,
    /// Torsion part for infinite order, in the same coordinates; always zero
    /// for finite order, where it is folded into `v`.
    pub twist: Vec<Rational>,
    pub order: QOrder,
}

fn int(x: i64) -> Rational {
    Rational::from_integer(x)
}

fn modulo(x: Rational, m: u64) -> Rational {
    let m = int(m as i64);
    x - m * (x / m).floor()
}

impl TorusPoint {
    /// The point with `α_i(s) = q^{exps[i]}` for every simple root.
    pub fn standard(rs: &RootSystem, exps: &[Rational], order: QOrder) -> Self {
        assert_eq!(exps.len(), rs.rank);
        TorusPoint {
            v: exps.to_vec(),
            twist: vec![Rational::zero(); rs.rank],
            order,
        }
    }

    pub fn from_ints(rs: &RootSystem, exps: &[i64], order: QOrder) -> Self {
        Self::standard(rs, &exps.iter().map(|&x| int(x)).collect::<Vec<_>>(), order)
    }

    /// `α(t) = q` for every simple root.
    pub fn all_q(rs: &RootSystem, order: QOrder) -> Self {
        Self::from_ints(rs, &vec![1; rs.rank], order)
    }

    /// `α(s) = q` on short simple roots, `q^{-1}` on long simple roots.
    pub fn mixed(rs: &RootSystem, order: QOrder) -> Self {
        let exps: Vec<i64> = (0..rs.rank)
            .map(|i| if rs.simple_is_short(i) { 1 } else { -1 })
            .collect();
        Self::from_ints(rs, &exps, order)
    }

    /// Multiply by the central element `exp(2πi u)` where `u` has fundamental
    /// coweight coordinates `z` (integral for central elements).
    pub fn with_central_twist(&self, z: &[i64]) -> Self {
        let mut out = self.clone();
        match self.order {
            QOrder::Finite(m) => {
                for (e, &zi) in out.v.iter_mut().zip(z) {
                    *e += int(m as i64 * zi);
                }
            }
            QOrder::Infinite => {
                for (e, &zi) in out.twist.iter_mut().zip(z) {
                    *e += int(zi);
                }
            }
        }
        out
    }

    /// Exponent `k` with `β(s) = q^k`; reduced into `[0, m)` for finite order.
    /// `None` when `β(s)` is not a power of `q` (only possible for infinite
    /// order with a nontrivial torsion part).
    pub fn eval(&self, beta: &[i64]) -> Option<Rational> {
        let raw: Rational = beta.iter().zip(&self.v).map(|(&b, e)| int(b) * e).sum();
        match self.order {
            QOrder::Finite(m) => Some(modulo(raw, m)),
            QOrder::Infinite => {
                let tw: Rational = beta.iter().zip(&self.twist).map(|(&b, e)| int(b) * e).sum();
                tw.is_integer().then_some(raw)
            }
        }
    }

    /// Whether `β(s) = q^k`.
    pub fn has_exponent(&self, beta: &[i64], k: i64) -> bool {
        let target = match self.order {
            QOrder::Finite(m) => modulo(int(k), m),
            QOrder::Infinite => int(k),
        };
        self.eval(beta) == Some(target)
    }

    /// `s_j · s`: `e_i ↦ e_i − <α_i, α_j^∨> e_j`.
    pub fn apply_simple(&self, rs: &RootSystem, j: usize) -> Self {
        let reflect = |e: &[Rational]| -> Vec<Rational> {
            (0..rs.rank).map(|i| e[i] - int(rs.cartan[j][i]) * e[j]).collect()
        };
        TorusPoint {
            v: reflect(&self.v),
            twist: reflect(&self.twist),
            order: self.order,
        }
    }

    pub fn apply(&self, rs: &RootSystem, w: &WeylElement) -> Self {
        let mut out = self.clone();
        for j in w.reduced_word(rs).into_iter().rev() {
            out = out.apply_simple(rs, j);
        }
        out
    }

    /// A key that is equal for two points iff they are the same element of `T`.
    pub fn key(&self, rs: &RootSystem) -> PointKey {
        let cinv = cartan_inv_t(rs);
        match self.order {
            QOrder::Finite(m) => {
                let scaled: Vec<Rational> = self.v.iter().map(|e| e / int(m as i64)).collect();
                let c = lattice::rat_mat_vec(&cinv, &scaled);
                PointKey {
                    exact: Vec::new(),
                    torsion: c.iter().map(lattice::frac).collect(),
                }
            }
            QOrder::Infinite => {
                let c = lattice::rat_mat_vec(&cinv, &self.twist);
                PointKey {
                    exact: self.v.clone(),
                    torsion: c.iter().map(lattice::frac).collect(),
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointKey {
    pub exact: Vec<Rational>,
    pub torsion: Vec<Rational>,
}

/// `C^{-T}`: maps fundamental-coweight coordinates to simple-coroot coordinates.
fn cartan_inv_t(rs: &RootSystem) -> RatMatrix {
    lattice::inverse(&lattice::transpose(&rs.cartan)).expect("Cartan matrix is invertible")
}

/// Roots `β` (positive first, in index order) with `β(s) = q^k`.
pub fn roots_with_exponent(rs: &RootSystem, s: &TorusPoint, k: i64) -> Vec<Root> {
    roots_with_exponent_idx(rs, s, k)
        .into_iter()
        .map(|i| rs.roots[i].clone())
        .collect()
}

pub fn roots_with_exponent_idx(rs: &RootSystem, s: &TorusPoint, k: i64) -> Vec<usize> {
    (0..rs.num_roots())
        .filter(|&i| s.has_exponent(&rs.roots[i].coords, k))
        .collect()
}

/// Root indices of the centralizer `C_G(s)`: roots with `β(s) = 1`.
pub fn centralizer_roots(rs: &RootSystem, s: &TorusPoint) -> Vec<usize> {
    let roots = roots_with_exponent_idx(rs, s, 0);
    let set: HashSet<usize> = roots.iter().copied().collect();
    for &a in &roots {
        for &b in &roots {
            if let Some(c) = rs.sum_index(a, b) {
                assert!(set.contains(&c), "centralizer root set is not closed");
            }
        }
    }
    roots
}

/// One irreducible component of a root subsystem.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ComponentType {
    /// Cartan type such as `A1` or `B3`.
    pub kind: String,
    pub long_roots: usize,
    pub short_roots: usize,
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match (self.long_roots, self.short_roots) {
            (_, 0) => "long",
            (0, _) => "short",
            _ => "mixed",
        };
        write!(f, "{}[{}]", self.kind, tag)
    }
}

/// Isomorphism type of a closed subsystem together with how its roots sit
/// among the long and short roots of the ambient system (positive roots counted).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SubsystemSignature {
    pub components: Vec<ComponentType>,
    pub long_roots: usize,
    pub short_roots: usize,
}

impl fmt::Display for SubsystemSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("T");
        }
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Simple system of a closed subsystem given by root indices: its positive
/// roots that are not sums of two of its positive roots.
pub fn subsystem_simple_roots(rs: &RootSystem, roots: &[usize]) -> Vec<usize> {
    let pos: Vec<usize> = roots.iter().copied().filter(|&i| rs.is_positive_index(i)).collect();
    let set: HashSet<usize> = pos.iter().copied().collect();
    pos.iter()
        .copied()
        .filter(|&g| {
            !pos.iter().any(|&a| {
                let diff = rs.sum_index(g, rs.neg_index(a));
                matches!(diff, Some(d) if set.contains(&d))
            })
        })
        .collect()
}

/// Irreducible components of a subsystem: lists of its positive root indices,
/// each paired with the simple roots of the component.
pub fn subsystem_components(rs: &RootSystem, roots: &[usize]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let simple = subsystem_simple_roots(rs, roots);
    let k = simple.len();
    let mut comp: Vec<usize> = (0..k).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while c[r] != r {
            r = c[r];
        }
        c[x] = r;
        r
    }
    for a in 0..k {
        for b in a + 1..k {
            if rs.inner(&rs.roots[simple[a]].coords, &rs.roots[simple[b]].coords) != 0 {
                let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
                comp[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut label: Vec<Option<usize>> = vec![None; k];
    for a in 0..k {
        let r = find(&mut comp, a);
        let g = match label[r] {
            Some(g) => g,
            None => {
                groups.push((Vec::new(), Vec::new()));
                label[r] = Some(groups.len() - 1);
                groups.len() - 1
            }
        };
        groups[g].1.push(simple[a]);
    }
    for &b in roots.iter().filter(|&&i| rs.is_positive_index(i)) {
        let g = (0..k)
            .find(|&a| rs.inner(&rs.roots[b].coords, &rs.roots[simple[a]].coords) != 0)
            .map(|a| label[find(&mut comp, a)].unwrap())
            .expect("every root pairs nontrivially with its own component");
        groups[g].0.push(b);
    }
    groups
}

fn classify_component(rs: &RootSystem, pos: &[usize], simple: &[usize]) -> ComponentType {
    let r = simple.len();
    let n = pos.len();
    let long_roots = pos.iter().filter(|&&i| rs.is_long(i) || rs.rstype.family.is_simply_laced()).count();
    let short_roots = n - long_roots;
    let norms: BTreeSet<i64> = pos.iter().map(|&i| rs.norm(i)).collect();
    let kind = if r == 1 {
        "A1".to_string()
    } else if norms.len() == 1 {
        if n == r * (r + 1) / 2 {
            format!("A{r}")
        } else if n == r * (r - 1) && r >= 4 {
            format!("D{r}")
        } else {
            match n {
                36 => "E6".into(),
                63 => "E7".into(),
                120 => "E8".into(),
                _ => format!("?{r}:{n}"),
            }
        }
    } else {
        let short_norm = *norms.iter().next().unwrap();
        let short_simple = simple.iter().filter(|&&i| rs.norm(i) == short_norm).count();
        if r == 2 && n == 6 {
            "G2".into()
        } else if r == 4 && n == 24 {
            "F4".into()
        } else if n == r * r && short_simple == 1 {
            format!("B{r}")
        } else if n == r * r && short_simple == r - 1 {
            format!("C{r}")
        } else {
            format!("?{r}:{n}")
        }
    };
    ComponentType {
        kind,
        long_roots,
        short_roots,
    }
}

pub fn signature_of(rs: &RootSystem, roots: &[usize]) -> SubsystemSignature {
    let mut components: Vec<ComponentType> = subsystem_components(rs, roots)
        .iter()
        .map(|(pos, simple)| classify_component(rs, pos, simple))
        .collect();
    components.sort();
    let long_roots = components.iter().map(|c| c.long_roots).sum();
    let short_roots = components.iter().map(|c| c.short_roots).sum();
    SubsystemSignature {
        components,
        long_roots,
        short_roots,
    }
}

pub fn centralizer_signature(rs: &RootSystem, s: &TorusPoint) -> SubsystemSignature {
    signature_of(rs, &centralizer_roots(rs, s))
}

/// Canonical representative of the `W₀`-orbit of a point.
///
/// Finite order: the unique point of the closed fundamental alcove
/// `{x : <α_i, x> ≥ 0, <θ, x> ≤ 1}` in the orbit of `x = v/m` under
/// `W₀ ⋉ Q^∨`. Infinite order: move `v` into the dominant chamber, then take
/// the smallest torsion key over the orbit of its stabilizer.
pub fn canonical_form(rs: &RootSystem, s: &TorusPoint) -> PointKey {
    match s.order {
        QOrder::Finite(m) => {
            let mut a: Vec<Rational> = s.v.iter().map(|e| e / int(m as i64)).collect();
            let theta = &rs.highest_root.coords;
            let theta_check: Vec<i64> = (0..rs.rank)
                .map(|k| rs.coroot_pairing(&Root::simple(rs.rank, k).coords, theta))
                .collect();
            loop {
                if let Some(j) = (0..rs.rank).find(|&j| a[j] < Rational::zero()) {
                    let aj = a[j];
                    for i in 0..rs.rank {
                        a[i] -= int(rs.cartan[j][i]) * aj;
                    }
                    continue;
                }
                let h: Rational = theta.iter().zip(&a).map(|(&t, x)| int(t) * x).sum();
                if h > Rational::one() {
                    let shift = h - Rational::one();
                    for i in 0..rs.rank {
                        a[i] -= shift * int(theta_check[i]);
                    }
                    continue;
                }
                break;
            }
            PointKey {
                exact: a,
                torsion: Vec::new(),
            }
        }
        QOrder::Infinite => {
            let mut p = s.clone();
            while let Some(j) = (0..rs.rank).find(|&j| p.v[j] < Rational::zero()) {
                p = p.apply_simple(rs, j);
            }
            let fixers: Vec<usize> = (0..rs.rank).filter(|&j| p.v[j].is_zero()).collect();
            let mut seen: HashSet<PointKey> = HashSet::new();
            let mut queue = VecDeque::from([p.clone()]);
            seen.insert(p.key(rs));
            while let Some(x) = queue.pop_front() {
                for &j in &fixers {
                    let y = x.apply_simple(rs, j);
                    if seen.insert(y.key(rs)) {
                        queue.push_back(y);
                    }
                }
            }
            seen.into_iter().min().expect("orbit is nonempty")
        }
    }
}

/// Semisimple conjugacy in `G` reduces to `W₀`-conjugacy in `T`.
pub fn conjugate_in_g(rs: &RootSystem, s: &TorusPoint, t: &TorusPoint) -> Result<bool> {
    if s.order != t.order {
        return Err(Error::Invalid("points use different orders of q".into()));
    }
    Ok(canonical_form(rs, s) == canonical_form(rs, t))
}

/// Independent check: breadth-first search over the `W₀`-orbit of `s`.
pub fn conjugate_by_orbit(rs: &RootSystem, s: &TorusPoint, t: &TorusPoint, budget: usize) -> Result<bool> {
    if s.order != t.order {
        return Err(Error::Invalid("points use different orders of q".into()));
    }
    let target = t.key(rs);
    let mut seen: HashSet<PointKey> = HashSet::new();
    let start = s.key(rs);
    if start == target {
        return Ok(true);
    }
    seen.insert(start);
    let mut queue = VecDeque::from([s.clone()]);
    while let Some(x) = queue.pop_front() {
        for j in 0..rs.rank {
            let y = x.apply_simple(rs, j);
            let k = y.key(rs);
            if k == target {
                return Ok(true);
            }
            if seen.insert(k) {
                if seen.len() > budget {
                    return Err(Error::BudgetExceeded {
                        order: weylgrp::group_order(rs.rstype),
                        budget: budget as u128,
                    });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(false)
}

/// Representatives of the center `Z(G) ≅ P^∨ / Q^∨` as integer fundamental
/// coweight coordinates, starting with 0.
pub fn center_elements(rs: &RootSystem) -> Vec<Vec<i64>> {
    let cinv = cartan_inv_t(rs);
    let key = |z: &[i64]| -> Vec<Rational> {
        let zr: Vec<Rational> = z.iter().map(|&x| int(x)).collect();
        lattice::rat_mat_vec(&cinv, &zr).iter().map(lattice::frac).collect()
    };
    let zero = vec![0i64; rs.rank];
    let mut seen: HashSet<Vec<Rational>> = HashSet::from([key(&zero)]);
    let mut out = vec![zero.clone()];
    let mut queue = VecDeque::from([zero]);
    while let Some(z) = queue.pop_front() {
        for i in 0..rs.rank {
            let mut y = z.clone();
            y[i] += 1;
            if seen.insert(key(&y)) {
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out
}

/// Exponents of `ε_1, …, ε_n` at `s` for type B (the nontrivial eigenvalues
/// `q^{±k}` of the image in `SO_{2n+1}`).
pub fn so_eigenvalue_exponents(rs: &RootSystem, s: &TorusPoint) -> Option<Vec<Rational>> {
    if rs.rstype.family != Family::B {
        return None;
    }
    let n = rs.rank;
    Some((0..n).map(|j| s.v[j..].iter().copied().sum()).collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct NonConjugacyOutcome {
    pub rstype: RootSystemType,
    pub order: QOrder,
    pub conjugate: bool,
    pub decided_by: String,
    pub standard_signature: SubsystemSignature,
    pub mixed_signature: SubsystemSignature,
    pub signatures_differ: bool,
    pub standard_centralizer: Vec<Root>,
    pub mixed_centralizer: Vec<Root>,
    /// `(α exponents, ε exponents)` of the standard and mixed points, type B only.
    pub so_view: Option<(Vec<String>, Vec<String>)>,
}

/// Standard point `t` (all simple roots ↦ q) against the mixed point `s`
/// (short ↦ q, long ↦ q^{-1}).
pub fn verify_non_conjugacy(t: RootSystemType, order: QOrder) -> Result<NonConjugacyOutcome> {
    if t.family.is_simply_laced() {
        return Err(Error::Domain(format!("{t} is simply laced; no mixed point exists")));
    }
    if !order.poincare_nonvanishing(t) {
        return Err(Error::PoincareVanishes(format!("{t} at order {order}")));
    }
    let rs = RootSystem::build(t)?;
    let st = TorusPoint::all_q(&rs, order);
    let mx = TorusPoint::mixed(&rs, order);
    let conjugate = conjugate_in_g(&rs, &st, &mx)?;
    let decided_by = match order {
        QOrder::Finite(_) => "fundamental alcove canonical form",
        QOrder::Infinite => "dominant chamber and stabilizer orbit",
    }
    .to_string();
    let sc = centralizer_roots(&rs, &st);
    let mc = centralizer_roots(&rs, &mx);
    let standard_signature = signature_of(&rs, &sc);
    let mixed_signature = signature_of(&rs, &mc);
    let fmt = |v: Vec<Rational>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let so_view = so_eigenvalue_exponents(&rs, &st)
        .zip(so_eigenvalue_exponents(&rs, &mx))
        .map(|(a, b)| (fmt(a), fmt(b)));
    Ok(NonConjugacyOutcome {
        rstype: t,
        order,
        conjugate,
        decided_by,
        signatures_differ: standard_signature != mixed_signature,
        standard_signature,
        mixed_signature,
        standard_centralizer: sc.iter().map(|&i| rs.roots[i].clone()).collect(),
        mixed_centralizer: mc.iter().map(|&i| rs.roots[i].clone()).collect(),
        so_view,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CentralCharacterCount {
    pub rstype: RootSystemType,
    pub order: QOrder,
    pub center_order: usize,
    /// Pairwise non-conjugate points among the candidates.
    pub classes: usize,
    pub candidates: usize,
}

/// Counts conjugacy classes among the torus points whose central characters
/// admit one-dimensional representations: the central elements for `q = 1`,
/// otherwise `t·c` (and, when not simply laced, `s·c`) for `c` central.
pub fn count_one_dim_characters(t: RootSystemType, order: QOrder) -> Result<CentralCharacterCount> {
    let rs = RootSystem::build(t)?;
    let center = center_elements(&rs);
    let mut candidates: Vec<TorusPoint> = Vec::new();
    if order == QOrder::Finite(1) {
        let zero = TorusPoint::from_ints(&rs, &vec![0; rs.rank], order);
        candidates.extend(center.iter().map(|z| zero.with_central_twist(z)));
    } else {
        if !order.poincare_nonvanishing(t) {
            return Err(Error::PoincareVanishes(format!("{t} at order {order}")));
        }
        let st = TorusPoint::all_q(&rs, order);
        candidates.extend(center.iter().map(|z| st.with_central_twist(z)));
        if !t.family.is_simply_laced() {
            let mx = TorusPoint::mixed(&rs, order);
            candidates.extend(center.iter().map(|z| mx.with_central_twist(z)));
        }
    }
    let classes: HashSet<PointKey> = candidates.iter().map(|p| canonical_form(&rs, p)).collect();
    Ok(CentralCharacterCount {
        rstype: t,
        order,
        center_order: center.len(),
        classes: classes.len(),
        candidates: candidates.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylgrp::WeylGroup;
    use proptest::prelude::*;

    fn build(name: &str) -> RootSystem {
        RootSystem::build(RootSystemType::of(name)).unwrap()
    }

    fn r(c: &[i64]) -> Root {
        Root::new(c.to_vec())
    }

    #[test]
    fn standard_point_examples() {
        let g2 = build("G2");
        let s = TorusPoint::from_ints(&g2, &[1, -1], QOrder::Infinite);
        assert_eq!(s.eval(&[1, 1]), Some(int(0)));
        let e8 = build("E8");
        let t = TorusPoint::all_q(&e8, QOrder::Finite(11));
        assert_eq!(t.eval(&e8.highest_root.coords), Some(int(7)));
        let b2 = build("B2");
        let t = TorusPoint::all_q(&b2, QOrder::Finite(3));
        assert_eq!(t.eval(&[1, 2]), Some(int(0)));
        let zero = TorusPoint::from_ints(&b2, &[0, 0], QOrder::Infinite);
        assert!(b2.roots.iter().all(|x| zero.eval(&x.coords) == Some(int(0))));
    }

    #[test]
    fn e6_exponent_classes() {
        let e6 = build("E6");
        let t = TorusPoint::all_q(&e6, QOrder::Finite(7));
        let mut zero: Vec<Root> = roots_with_exponent(&e6, &t, 0);
        zero.sort();
        let mut expected: Vec<Root> = [
            [1, 1, 2, 2, 1, 0],
            [0, 1, 1, 2, 2, 1],
            [1, 1, 1, 2, 1, 1],
        ]
        .iter()
        .flat_map(|c| [r(c), r(c).neg()])
        .collect();
        expected.sort();
        assert_eq!(zero, expected);
        let one = roots_with_exponent(&e6, &t, 1);
        assert_eq!(one.len(), 11);
        let inf = TorusPoint::all_q(&e6, QOrder::Infinite);
        assert!(roots_with_exponent(&e6, &inf, 0).is_empty());
    }

    #[test]
    fn regular_points() {
        for name in ["A3", "B4", "C3", "D5", "E6", "F4", "G2"] {
            let rs = build(name);
            let h = *rs.degrees.iter().max().unwrap() as u64;
            // At m = h the lowest root also has exponent 1, but there the
            // Poincaré polynomial vanishes.
            let at_h = TorusPoint::all_q(&rs, QOrder::Finite(h));
            assert!(roots_with_exponent(&rs, &at_h, 1).contains(&rs.highest_root.neg()));
            assert!(!QOrder::Finite(h).poincare_nonvanishing(rs.rstype));
            for order in [QOrder::Finite(h + 1), QOrder::Finite(h + 3), QOrder::Infinite] {
                let t = TorusPoint::all_q(&rs, order);
                assert!(roots_with_exponent(&rs, &t, 0).is_empty());
                let one = roots_with_exponent(&rs, &t, 1);
                assert_eq!(one, (0..rs.rank).map(|i| Root::simple(rs.rank, i)).collect::<Vec<_>>());
                assert!(centralizer_signature(&rs, &t).components.is_empty());
            }
        }
    }

    #[test]
    fn signatures_identify_types() {
        let f4 = build("F4");
        let all: Vec<usize> = (0..f4.num_roots()).collect();
        assert_eq!(signature_of(&f4, &all).components[0].kind, "F4");
        let e8 = build("E8");
        let all: Vec<usize> = (0..e8.num_roots()).collect();
        assert_eq!(signature_of(&e8, &all).components[0].kind, "E8");
        let b4 = build("B4");
        let long: Vec<usize> = (0..b4.num_roots()).filter(|&i| b4.is_long(i)).collect();
        assert_eq!(signature_of(&b4, &long).components[0].kind, "D4");
        let c4 = build("C4");
        let long: Vec<usize> = (0..c4.num_roots()).filter(|&i| c4.is_long(i)).collect();
        let sig = signature_of(&c4, &long);
        assert_eq!(sig.components.len(), 4);
        assert!(sig.components.iter().all(|c| c.kind == "A1" && c.short_roots == 0));
        let all: Vec<usize> = (0..c4.num_roots()).collect();
        assert_eq!(signature_of(&c4, &all).components[0].kind, "C4");
        let b3 = build("B3");
        let all: Vec<usize> = (0..b3.num_roots()).collect();
        assert_eq!(signature_of(&b3, &all).components[0].kind, "B3");
    }

    #[test]
    fn b_type_centralizers() {
        for n in 2..=8usize {
            let rs = build(&format!("B{n}"));
            for i in 1..n {
                let m = n + i;
                if m % 2 == 0 {
                    continue;
                }
                let t = TorusPoint::all_q(&rs, QOrder::Finite(m as u64));
                let mut got: Vec<Root> = centralizer_roots(&rs, &t)
                    .into_iter()
                    .map(|k| rs.roots[k].clone())
                    .collect();
                got.sort();
                let mut want = Vec::new();
                let mut j = 1;
                while 2 * j < n + 2 - i {
                    let k = n + 2 - j - i;
                    let mut eps = vec![Rational::zero(); n];
                    eps[j - 1] += Rational::one();
                    eps[k - 1] += Rational::one();
                    let root = rs.root_from_epsilon(&eps).unwrap();
                    want.push(root.neg());
                    want.push(root);
                    j += 1;
                }
                want.sort();
                assert_eq!(got, want, "B{n} m={m}");
                assert!(got.iter().all(|x| rs.is_long(rs.index_of(x).unwrap())));
            }
        }
    }

    #[test]
    fn alcove_agrees_with_orbit_search() {
        for name in ["A2", "A3", "B2", "B3", "C3", "G2", "D4"] {
            let rs = build(name);
            let mut pts = Vec::new();
            for m in [1u64, 2, 3, 4, 5, 6] {
                for a in -2..=2 {
                    for b in -1..=1 {
                        let mut e = vec![0i64; rs.rank];
                        e[0] = a;
                        e[rs.rank - 1] += b;
                        pts.push(TorusPoint::from_ints(&rs, &e, QOrder::Finite(m)));
                    }
                }
            }
            for s in &pts {
                for t in pts.iter().filter(|t| t.order == s.order).take(12) {
                    let fast = conjugate_in_g(&rs, s, t).unwrap();
                    let slow = conjugate_by_orbit(&rs, s, t, 1_000_000).unwrap();
                    assert_eq!(fast, slow, "{name} {s:?} {t:?}");
                }
            }
        }
    }

    #[test]
    fn canonical_form_is_w_invariant() {
        for name in ["B3", "G2", "C3"] {
            let rs = build(name);
            let group = WeylGroup::enumerate(&rs, 100_000).unwrap();
            for order in [QOrder::Finite(7), QOrder::Infinite] {
                let s = TorusPoint::mixed(&rs, order).with_central_twist(&vec![1; rs.rank]);
                let c = canonical_form(&rs, &s);
                for w in group.iter() {
                    assert_eq!(canonical_form(&rs, &s.apply(&rs, &w)), c);
                }
            }
        }
    }

    #[test]
    fn central_twist_is_detected() {
        let c4 = build("C4");
        let m = QOrder::Finite(7);
        let s = TorusPoint::all_q(&c4, m);
        let center = center_elements(&c4);
        assert_eq!(center.len(), 2);
        let twisted = s.with_central_twist(&center[1]);
        assert_ne!(s.key(&c4), twisted.key(&c4));
        assert!(!conjugate_in_g(&c4, &s, &twisted).unwrap());
        assert!(conjugate_in_g(&c4, &s, &s).unwrap());
        for x in &c4.roots {
            assert_eq!(s.eval(&x.coords), twisted.eval(&x.coords));
        }
    }

    #[test]
    fn w0_image_is_conjugate() {
        let b2 = build("B2");
        let w0 = WeylElement::from_word(&b2, &[0, 1, 0, 1]);
        for order in [QOrder::Finite(3), QOrder::Infinite] {
            let s = TorusPoint::all_q(&b2, order);
            assert!(conjugate_in_g(&b2, &s, &s.apply(&b2, &w0)).unwrap());
        }
    }

    #[test]
    fn small_non_conjugacy_examples() {
        let out = verify_non_conjugacy(RootSystemType::of("G2"), QOrder::Finite(4)).unwrap();
        assert!(!out.conjugate && out.signatures_differ);
        assert_eq!(out.standard_centralizer, vec![r(&[3, 1]), r(&[-3, -1])]);
        assert_eq!(out.mixed_centralizer, vec![r(&[1, 1]), r(&[-1, -1])]);
        let out = verify_non_conjugacy(RootSystemType::of("B4"), QOrder::Infinite).unwrap();
        assert!(!out.conjugate);
        assert!(out.standard_signature.components.is_empty());
        assert!(!out.mixed_signature.components.is_empty());
        assert!(verify_non_conjugacy(RootSystemType::of("B3"), QOrder::Finite(6)).is_err());
    }

    #[test]
    fn central_character_counts() {
        let c = count_one_dim_characters(RootSystemType::of("B3"), QOrder::Finite(7)).unwrap();
        assert_eq!((c.center_order, c.classes), (2, 4));
        let c = count_one_dim_characters(RootSystemType::of("G2"), QOrder::Finite(7)).unwrap();
        assert_eq!(c.classes, 2);
        for name in ["A3", "D4", "E6", "B3", "C3", "G2"] {
            let t = RootSystemType::of(name);
            let c = count_one_dim_characters(t, QOrder::Finite(1)).unwrap();
            assert_eq!(c.classes as u64, crate::rootsys::center_order(t));
        }
    }

    proptest! {
        #[test]
        fn eval_is_linear(a in -3i64..4, b in -3i64..4, c in -3i64..4, d in -3i64..4, m in 2u64..15) {
            let rs = build("F4");
            let s = TorusPoint::from_ints(&rs, &[a, b, c, d], QOrder::Finite(m));
            for x in 0..rs.num_roots() {
                let nx = rs.neg_index(x);
                let ex = s.eval(&rs.roots[x].coords).unwrap();
                let enx = s.eval(&rs.roots[nx].coords).unwrap();
                prop_assert_eq!(modulo(ex + enx, m), Rational::zero());
                for y in 0..rs.num_roots() {
                    if let Some(z) = rs.sum_index(x, y) {
                        let ey = s.eval(&rs.roots[y].coords).unwrap();
                        let ez = s.eval(&rs.roots[z].coords).unwrap();
                        prop_assert_eq!(modulo(ex + ey, m), ez);
                    }
                }
            }
        }

        #[test]
        fn conjugacy_is_w_equivariant(a in -3i64..4, b in -3i64..4, c in -3i64..4, m in 2u64..9, word in proptest::collection::vec(0usize..3, 0..8)) {
            let rs = build("B3");
            let s = TorusPoint::from_ints(&rs, &[a, b, c], QOrder::Finite(m));
            let t = TorusPoint::all_q(&rs, QOrder::Finite(m));
            let w = WeylElement::from_word(&rs, &word);
            prop_assert_eq!(
                conjugate_in_g(&rs, &s, &t).unwrap(),
                conjugate_in_g(&rs, &s.apply(&rs, &w), &t.apply(&rs, &w)).unwrap()
            );
            prop_assert!(conjugate_in_g(&rs, &s, &s.apply(&rs, &w)).unwrap());
        }
    }
}
