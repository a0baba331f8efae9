//! The eigenspace `N_{q,s} = span{e_β : β(s) = q}` for the standard torus
//! point, its decomposition under `C_G(s)`, and orbit counts over finite
//! fields.
//!
//! Orbits are counted for the equivalence generated by the torus (acting
//! geometrically: two vectors with the same support are identified when all
//! monomials attached to integer relations among their weights agree) and by
//! the root subgroups `u_γ(c) = exp(c·ad e_γ)` for `γ(s) = 1` and every
//! `c ∈ F_p`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice;
use crate::rootsys::{Root, RootSystem, RootSystemType, SignConvention, StructureConstants};
use crate::torus::{roots_with_exponent_idx, QOrder, TorusPoint};

pub const DEFAULT_DIMENSION_CAP: usize = 12;
pub const DEFAULT_STATE_BUDGET: usize = 4_000_000;
pub const DEFAULT_PRIME_BOUND: u64 = 256;
pub const DEFAULT_PRIMES_NEEDED: usize = 2;

#[derive(Clone, Debug, Serialize)]
pub struct NilModule {
    pub rstype: RootSystemType,
    pub order: QOrder,
    /// Root indices with `β(s) = q`, in root index order.
    pub basis: Vec<usize>,
    /// Root indices `±γ` with `γ(s) = 1`, positive first.
    pub generators: Vec<usize>,
}

impl NilModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn non_simple_basis(&self, rs: &RootSystem) -> Vec<Root> {
        self.basis
            .iter()
            .filter(|&&b| rs.roots[b].height() != 1)
            .map(|&b| rs.roots[b].clone())
            .collect()
    }

    pub fn positive_generators(&self, rs: &RootSystem) -> Vec<Root> {
        self.generators
            .iter()
            .filter(|&&g| rs.is_positive_index(g))
            .map(|&g| rs.roots[g].clone())
            .collect()
    }
}

/// `N_{q,s}` for the standard point `α_i(s) = q`.
pub fn build_nqs(rs: &RootSystem, order: QOrder) -> Result<NilModule> {
    if !order.poincare_nonvanishing(rs.rstype) {
        return Err(Error::PoincareVanishes(format!(
            "(q−1)·Σ q^l(w) vanishes for {} at q of order {order}",
            rs.rstype
        )));
    }
    let s = TorusPoint::all_q(rs, order);
    let basis = roots_with_exponent_idx(rs, &s, 1);
    let generators = roots_with_exponent_idx(rs, &s, 0);
    for &b in &basis {
        for &g in &generators {
            if let Some(c) = rs.sum_index(b, g) {
                if !basis.contains(&c) {
                    return Err(Error::Invalid(format!(
                        "e_{} moves e_{} outside the eigenspace",
                        rs.roots[g], rs.roots[b]
                    )));
                }
            }
        }
    }
    Ok(NilModule {
        rstype: rs.rstype,
        order,
        basis,
        generators,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Submodule {
    /// Root indices, sorted.
    pub support: Vec<usize>,
}

impl Submodule {
    pub fn dim(&self) -> usize {
        self.support.len()
    }

    pub fn roots(&self, rs: &RootSystem) -> Vec<Root> {
        self.support.iter().map(|&i| rs.roots[i].clone()).collect()
    }
}

/// Connected components of the graph joining `β` and `β+γ` for generators `γ` with `N(γ,β) ≠ 0`,
/// ordered by their smallest root index.
pub fn decompose(rs: &RootSystem, nm: &NilModule, sc: &StructureConstants) -> Vec<Submodule> {
    let pos: HashMap<usize, usize> = nm.basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let mut parent: Vec<usize> = (0..nm.basis.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, &b) in nm.basis.iter().enumerate() {
        for &g in &nm.generators {
            if let Some(c) = rs.sum_index(g, b) {
                if sc.n(g, b) != 0 {
                    let j = pos[&c];
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..nm.basis.len() {
        let r = find(&mut parent, i);
        comps.entry(r).or_default().push(nm.basis[i]);
    }
    let mut out: Vec<Submodule> = comps
        .into_values()
        .map(|mut s| {
            s.sort_unstable();
            Submodule { support: s }
        })
        .collect();
    out.sort_by_key(|m| m.support[0]);
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitCount {
    pub count: u64,
    pub primes_used: Vec<u64>,
    pub per_prime: Vec<u64>,
    pub stable: bool,
}

/// Orbit count when `N_{q,s}` is spanned by the simple root vectors: the
/// torus alone acts, with representatives `e_I = Σ_{i∈I} e_{α_i}`.
pub fn orbit_count_regular(rs: &RootSystem) -> OrbitCount {
    OrbitCount {
        count: 1u64 << rs.rank,
        primes_used: Vec::new(),
        per_prime: Vec::new(),
        stable: true,
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Primes `p ≤ bound`, `p ≥ 5`, with `p ≡ 1 (mod m)` (any such prime when `q`
/// has infinite order).
pub fn admissible_primes(order: QOrder, bound: u64, needed: usize) -> Result<Vec<u64>> {
    let m = order.modulus().unwrap_or(1);
    let found: Vec<u64> = (5..=bound)
        .filter(|&p| is_prime(p) && (p - 1) % m == 0)
        .take(needed)
        .collect();
    if found.len() < needed {
        return Err(Error::NoAdmissiblePrime {
            modulus: m,
            bound,
            needed,
            found: found.len(),
        });
    }
    Ok(found)
}

#[derive(Clone, Debug)]
struct Field {
    p: u64,
    exp: Vec<u64>,
    log: Vec<u32>,
}

impl Field {
    fn new(p: u64) -> Self {
        let n = (p - 1) as usize;
        for g in 2..p {
            let mut exp = Vec::with_capacity(n);
            let mut x = 1u64;
            for _ in 0..n {
                exp.push(x);
                x = x * g % p;
            }
            let mut log = vec![u32::MAX; p as usize];
            let mut ok = true;
            for (k, &e) in exp.iter().enumerate() {
                if log[e as usize] != u32::MAX {
                    ok = false;
                    break;
                }
                log[e as usize] = k as u32;
            }
            if ok {
                return Field { p, exp, log };
            }
        }
        unreachable!("F_p has a primitive root")
    }

    fn inv(&self, x: u64) -> u64 {
        let n = self.p - 1;
        self.exp[((n - self.log[x as usize] as u64) % n) as usize]
    }
}

#[derive(Clone, Debug)]
struct SupportClasses {
    positions: Vec<usize>,
    kernel: Vec<Vec<i64>>,
    left_inv: Vec<Vec<i64>>,
    rank: usize,
    offset: usize,
}

/// Orbit structure of one chosen subspace over `F_p`.
pub struct FieldOrbits {
    field: Field,
    roots: Vec<usize>,
    pos: HashMap<usize, usize>,
    /// Per generator: `(source, target, coefficient of c^k, k)`.
    moves: Vec<Vec<(usize, usize, u64, u32)>>,
    supports: Vec<SupportClasses>,
    parent: Vec<u32>,
    pub states: usize,
    pub orbits: usize,
}

impl FieldOrbits {
    /// Orbits on `span{e_β : β ∈ roots}` (root indices closed under the
    /// generators) over `F_p`.
    pub fn compute(
        rs: &RootSystem,
        sc: &StructureConstants,
        roots: &[usize],
        generators: &[usize],
        p: u64,
        dimension_cap: usize,
        state_budget: usize,
    ) -> Result<Self> {
        let d = roots.len();
        if d > dimension_cap {
            return Err(Error::DimensionCap { dim: d, cap: dimension_cap });
        }
        let field = Field::new(p);
        let pos: HashMap<usize, usize> = roots.iter().enumerate().map(|(i, &b)| (b, i)).collect();

        let mut factorial_inv = vec![1u64; 4];
        for k in 1..4 {
            factorial_inv[k] = factorial_inv[k - 1] * field.inv(k as u64) % p;
        }
        let mut moves = Vec::new();
        for &g in generators {
            let mut list = Vec::new();
            for (j, &b) in roots.iter().enumerate() {
                let mut cur = b;
                let mut coef: i64 = 1;
                let mut k = 0u32;
                while let Some(next) = rs.sum_index(g, cur) {
                    coef *= sc.n(g, cur);
                    k += 1;
                    if coef == 0 {
                        break;
                    }
                    let Some(&t) = pos.get(&next) else {
                        return Err(Error::Invalid(format!(
                            "e_{} moves e_{} outside the chosen subspace",
                            rs.roots[g], rs.roots[b]
                        )));
                    };
                    let c = (coef.rem_euclid(p as i64) as u64) * factorial_inv[k as usize] % p;
                    list.push((j, t, c, k));
                    cur = next;
                }
            }
            if !list.is_empty() {
                moves.push(list);
            }
        }

        let m = p as usize - 1;
        let mut supports = Vec::with_capacity(1 << d);
        let mut total = 0usize;
        for mask in 0u32..(1 << d) {
            let positions: Vec<usize> = (0..d).filter(|&i| mask >> i & 1 == 1).collect();
            let mat: Vec<Vec<i64>> = positions.iter().map(|&i| rs.roots[roots[i]].coords.clone()).collect();
            let (kernel, left_inv, rank) = if positions.is_empty() {
                (Vec::new(), Vec::new(), 0)
            } else {
                let dg = lattice::diagonalize(&mat);
                let rank = dg.diag.iter().filter(|&&x| x != 0).count();
                let inv = lattice::inverse(&dg.left).expect("unimodular");
                let left_inv = inv
                    .iter()
                    .map(|row| row.iter().map(|x| x.to_integer()).collect())
                    .collect();
                (dg.left[rank..].to_vec(), left_inv, rank)
            };
            let classes = m.checked_pow(kernel.len() as u32).unwrap_or(usize::MAX);
            supports.push(SupportClasses {
                positions,
                kernel,
                left_inv,
                rank,
                offset: total,
            });
            total = total.saturating_add(classes);
            if total > state_budget {
                return Err(Error::StateBudget {
                    states: total as u64,
                    budget: state_budget as u64,
                });
            }
        }

        let mut orbits = FieldOrbits {
            field,
            roots: roots.to_vec(),
            pos,
            moves,
            supports,
            parent: (0..total as u32).collect(),
            states: total,
            orbits: 0,
        };
        orbits.close();
        Ok(orbits)
    }

    fn canonical(&self, v: &[u64]) -> usize {
        let mask = v
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .fold(0usize, |acc, (i, _)| acc | 1 << i);
        let sup = &self.supports[mask];
        let m = (self.field.p - 1) as i64;
        let logs: Vec<i64> = sup.positions.iter().map(|&i| self.field.log[v[i] as usize] as i64).collect();
        let mut idx = 0usize;
        for row in sup.kernel.iter().rev() {
            let l: i64 = row.iter().zip(&logs).map(|(a, b)| a * b).sum::<i64>().rem_euclid(m);
            idx = idx * m as usize + l as usize;
        }
        sup.offset + idx
    }

    fn representative(&self, state: usize) -> Vec<u64> {
        let mask = self.supports.partition_point(|s| s.offset <= state) - 1;
        let sup = &self.supports[mask];
        let m = (self.field.p - 1) as usize;
        let mut rest = state - sup.offset;
        let k = sup.positions.len();
        let mut y = vec![0i64; k];
        for slot in y.iter_mut().skip(sup.rank) {
            *slot = (rest % m) as i64;
            rest /= m;
        }
        let mut v = vec![0u64; self.roots.len()];
        for (r, &i) in sup.positions.iter().enumerate() {
            let a: i64 = (0..k).map(|c| sup.left_inv[r][c] * y[c]).sum();
            v[i] = self.field.exp[a.rem_euclid(m as i64) as usize];
        }
        v
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let gp = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = gp;
            x = gp;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a as u32);
        let rb = self.find(b as u32);
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }

    fn close(&mut self) {
        let p = self.field.p;
        let mut w = vec![0u64; self.roots.len()];
        let mut cpow = [1u64; 4];
        for state in 0..self.states {
            let v = self.representative(state);
            for g in 0..self.moves.len() {
                for c in 1..p {
                    cpow[1] = c;
                    cpow[2] = c * c % p;
                    cpow[3] = cpow[2] * c % p;
                    w.copy_from_slice(&v);
                    let mut moved = false;
                    for &(j, t, coef, k) in &self.moves[g] {
                        if v[j] != 0 {
                            w[t] = (w[t] + v[j] * coef % p * cpow[k as usize]) % p;
                            moved = true;
                        }
                    }
                    if moved {
                        let target = self.canonical(&w);
                        self.union(state, target);
                    }
                }
            }
        }
        self.orbits = (0..self.states).filter(|&s| self.parent[s] as usize == s).count();
    }

    /// Orbit label of a vector given as `(root index, coefficient)` pairs.
    pub fn orbit_of(&mut self, v: &[(usize, u64)]) -> Result<u32> {
        let mut w = vec![0u64; self.roots.len()];
        for &(r, c) in v {
            let &i = self
                .pos
                .get(&r)
                .ok_or_else(|| Error::Invalid("vector outside the chosen subspace".into()))?;
            w[i] = c % self.field.p;
        }
        let s = self.canonical(&w);
        Ok(self.find(s as u32))
    }
}

#[derive(Clone, Debug)]
pub struct OrbitConfig {
    pub prime_bound: u64,
    pub primes_needed: usize,
    pub primes: Option<Vec<u64>>,
    pub dimension_cap: usize,
    pub state_budget: usize,
    pub conventions: Vec<SignConvention>,
}

impl Default for OrbitConfig {
    fn default() -> Self {
        OrbitConfig {
            prime_bound: DEFAULT_PRIME_BOUND,
            primes_needed: DEFAULT_PRIMES_NEEDED,
            primes: None,
            dimension_cap: DEFAULT_DIMENSION_CAP,
            state_budget: DEFAULT_STATE_BUDGET,
            conventions: vec![SignConvention::Positive, SignConvention::Negative],
        }
    }
}

impl OrbitConfig {
    pub fn primes_for(&self, order: QOrder) -> Result<Vec<u64>> {
        match &self.primes {
            Some(ps) => {
                let m = order.modulus().unwrap_or(1);
                if let Some(&bad) = ps.iter().find(|&&p| !is_prime(p) || p < 5 || (p - 1) % m != 0) {
                    return Err(Error::Domain(format!("{bad} is not an admissible prime for order {order}")));
                }
                Ok(ps.clone())
            }
            None => admissible_primes(order, self.prime_bound, self.primes_needed),
        }
    }
}

/// Orbit count of `C_G(s)` on the sum of the given submodules, over every
/// configured prime and sign convention.
pub fn orbit_count_ff(
    rs: &RootSystem,
    nm: &NilModule,
    parts: &[&Submodule],
    cfg: &OrbitConfig,
) -> Result<OrbitCount> {
    let mut roots: Vec<usize> = parts.iter().flat_map(|m| m.support.iter().copied()).collect();
    roots.sort_unstable();
    let primes = cfg.primes_for(nm.order)?;
    let mut per_prime = Vec::new();
    for conv in &cfg.conventions {
        let sc = rs.structure_constants(*conv);
        for &p in &primes {
            let o = FieldOrbits::compute(rs, &sc, &roots, &nm.generators, p, cfg.dimension_cap, cfg.state_budget)?;
            per_prime.push(o.orbits as u64);
        }
    }
    let stable = per_prime.windows(2).all(|w| w[0] == w[1]);
    Ok(OrbitCount {
        count: per_prime[0],
        primes_used: primes,
        per_prime,
        stable,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupCount {
    pub label: String,
    pub components: Vec<usize>,
    pub dim: usize,
    pub count: Option<OrbitCount>,
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseBound {
    pub rstype: RootSystemType,
    pub order: QOrder,
    pub groups: Vec<GroupCount>,
    /// Product of the group counts when every group was counted and stable.
    #[serde(serialize_with = "big_as_string")]
    pub product: Option<BigUint>,
    pub stable: bool,
}

fn big_as_string<S: serde::Serializer>(v: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(b) => s.serialize_str(&b.to_string()),
        None => s.serialize_none(),
    }
}

/// Product of orbit counts over a grouping of the components (indices into
/// `decompose`). Components left out of `grouping` are counted alone.
pub fn case_bound(
    rs: &RootSystem,
    order: QOrder,
    grouping: &[Vec<usize>],
    cfg: &OrbitConfig,
) -> Result<CaseBound> {
    let nm = build_nqs(rs, order)?;
    let sc = rs.structure_constants(SignConvention::Positive);
    let comps = decompose(rs, &nm, &sc);
    let mut groups: Vec<Vec<usize>> = grouping.to_vec();
    for i in 0..comps.len() {
        if !groups.iter().any(|g| g.contains(&i)) {
            groups.push(vec![i]);
        }
    }
    let mut out = Vec::new();
    let mut product = Some(BigUint::from(1u32));
    let mut stable = true;
    for g in groups {
        let parts: Vec<&Submodule> = g.iter().map(|&i| &comps[i]).collect();
        let dim = parts.iter().map(|m| m.dim()).sum();
        let label = g.iter().map(|i| format!("C{}", i + 1)).collect::<Vec<_>>().join("+");
        match orbit_count_ff(rs, &nm, &parts, cfg) {
            Ok(c) => {
                stable &= c.stable;
                product = product.map(|p| p * c.count);
                out.push(GroupCount {
                    label,
                    components: g,
                    dim,
                    count: Some(c),
                    skipped: None,
                });
            }
            Err(e @ (Error::DimensionCap { .. } | Error::StateBudget { .. } | Error::NoAdmissiblePrime { .. })) => {
                product = None;
                out.push(GroupCount {
                    label,
                    components: g,
                    dim,
                    count: None,
                    skipped: Some(e.to_string()),
                });
            }
            Err(e) => return Err(e),
        }
    }
    if !stable {
        product = None;
    }
    Ok(CaseBound {
        rstype: rs.rstype,
        order,
        groups: out,
        product,
        stable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(RootSystemType::of(s)).unwrap()
    }

    fn small_cfg() -> OrbitConfig {
        OrbitConfig::default()
    }

    #[test]
    fn regular_case_is_simples() {
        for s in ["A2", "B3", "G2", "E6", "E8"] {
            let r = rs(s);
            let nm = build_nqs(&r, QOrder::Infinite).unwrap();
            assert_eq!(nm.basis, (0..r.rank).collect::<Vec<_>>());
            assert!(nm.generators.is_empty());
            let sc = r.structure_constants(SignConvention::Positive);
            let comps = decompose(&r, &nm, &sc);
            assert_eq!(comps.len(), r.rank);
            assert_eq!(orbit_count_regular(&r).count, 1 << r.rank);
            let parts: Vec<&Submodule> = comps.iter().collect();
            let c = orbit_count_ff(&r, &nm, &parts, &small_cfg()).unwrap();
            assert_eq!(c.count, 1 << r.rank, "{s}");
            assert!(c.stable);
        }
    }

    #[test]
    fn refuses_vanishing_poincare() {
        let r = rs("E6");
        assert!(matches!(build_nqs(&r, QOrder::Finite(12)), Err(Error::PoincareVanishes(_))));
        assert!(matches!(build_nqs(&r, QOrder::Finite(1)), Err(Error::PoincareVanishes(_))));
    }

    #[test]
    fn e6_order_seven() {
        let r = rs("E6");
        let nm = build_nqs(&r, QOrder::Finite(7)).unwrap();
        assert_eq!(nm.dim(), 11);
        assert_eq!(nm.positive_generators(&r).len(), 3);
        let sc = r.structure_constants(SignConvention::Positive);
        let comps = decompose(&r, &nm, &sc);
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.dim()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 4, 4]);
        let b = case_bound(&r, QOrder::Finite(7), &[], &small_cfg()).unwrap();
        let mut counts: Vec<u64> = b.groups.iter().map(|g| g.count.as_ref().unwrap().count).collect();
        counts.sort_unstable();
        assert_eq!(counts, vec![2, 2, 3, 3]);
        assert_eq!(b.product, Some(BigUint::from(36u32)));
    }

    #[test]
    fn field_counts_independent_of_prime_and_signs() {
        let r = rs("E6");
        let nm = build_nqs(&r, QOrder::Finite(7)).unwrap();
        let sc = r.structure_constants(SignConvention::Positive);
        let comps = decompose(&r, &nm, &sc);
        let big = comps.iter().find(|c| c.dim() == 4).unwrap();
        let cfg = OrbitConfig {
            primes: Some(vec![29, 43, 71]),
            ..small_cfg()
        };
        let c = orbit_count_ff(&r, &nm, &[big], &cfg).unwrap();
        assert_eq!(c.per_prime, vec![3; 6]);
        assert!(c.stable);
    }

    #[test]
    fn caps_and_primes() {
        assert_eq!(admissible_primes(QOrder::Finite(7), 100, 2).unwrap(), vec![29, 43]);
        assert_eq!(admissible_primes(QOrder::Finite(29), 256, 2).unwrap(), vec![59, 233]);
        assert!(matches!(
            admissible_primes(QOrder::Finite(29), 50, 2),
            Err(Error::NoAdmissiblePrime { .. })
        ));
        let r = rs("E8");
        let nm = build_nqs(&r, QOrder::Finite(11)).unwrap();
        let sc = r.structure_constants(SignConvention::Positive);
        let comps = decompose(&r, &nm, &sc);
        let big = comps.iter().max_by_key(|c| c.dim()).unwrap();
        let cfg = OrbitConfig {
            dimension_cap: 8,
            ..small_cfg()
        };
        assert!(matches!(
            orbit_count_ff(&r, &nm, &[big], &cfg),
            Err(Error::DimensionCap { dim: 12, cap: 8 })
        ));
    }

    #[test]
    fn line_and_plane() {
        // A₂ at m = ∞ restricted to one simple root: zero and nonzero.
        let r = rs("A2");
        let nm = build_nqs(&r, QOrder::Infinite).unwrap();
        let one = Submodule { support: vec![0] };
        assert_eq!(orbit_count_ff(&r, &nm, &[&one], &small_cfg()).unwrap().count, 2);
    }
}
