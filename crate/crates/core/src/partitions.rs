//! Integer partitions: exact counts, representation counts of classical Weyl
//! groups, the comparison bound for type D and the injection τ used to show
//! `p(n) ≤ 2p(n−2)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    pub parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    pub fn is_valid(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1]) && self.parts.iter().all(|&p| p > 0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn cache() -> &'static Mutex<Vec<BigUint>> {
    static CACHE: OnceLock<Mutex<Vec<BigUint>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![BigUint::one()]))
}

/// `p(n)` by Euler's pentagonal recurrence; `p(n) = 0` for negative `n`.
pub fn p(n: i64) -> BigUint {
    if n < 0 {
        return BigUint::zero();
    }
    let n = n as usize;
    let mut memo = cache().lock().unwrap_or_else(|e| e.into_inner());
    while memo.len() <= n {
        let m = memo.len() as i64;
        let mut acc = BigInt::zero();
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = BigInt::from(memo[(m - g1) as usize].clone());
            if g2 <= m {
                term += BigInt::from(memo[(m - g2) as usize].clone());
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
            k += 1;
        }
        memo.push(acc.to_biguint().expect("partition counts are nonnegative"));
    }
    memo[n].clone()
}

pub fn p_u64(n: i64) -> u64 {
    p(n).to_u64().expect("p(n) exceeds u64")
}

/// All partitions of `n` with every part in `min_part..=max_part`, in
/// reverse lexicographic order.
pub fn partitions_with_bounds(n: u32, min_part: u32, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: u32, lo: u32, hi: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        let mut part = hi.min(rest);
        while part >= lo && part > 0 {
            cur.push(part);
            rec(rest - part, lo, part, cur, out);
            cur.pop();
            part -= 1;
        }
    }
    rec(n, min_part.max(1), max_part, &mut cur, &mut out);
    out
}

pub fn partitions_of(n: u32) -> Vec<Partition> {
    partitions_with_bounds(n, 1, n)
}

/// Independent count by exhaustive enumeration.
pub fn p_brute(n: u32) -> u64 {
    partitions_of(n).len() as u64
}

/// Number of ordered pairs of partitions of total weight `n`
/// (`|Irr|` for types B_n and C_n).
pub fn ordered_pairs(n: u32) -> BigUint {
    (0..=n as i64).map(|i| p(i) * p(n as i64 - i)).sum()
}

/// Unordered pairs of partitions of total weight `n`, pairs of equal
/// partitions counted twice (`|Irr|` for type D_n).
pub fn type_d_count(n: u32) -> Result<BigUint> {
    if n < 4 {
        return Err(Error::Domain(format!("type D count needs n >= 4, got {n}")));
    }
    let n = n as i64;
    let mut total: BigUint = (0..(n + 1) / 2).map(|i| p(n - i) * p(i)).sum();
    if n % 2 == 0 {
        let pk = p(n / 2);
        total += &pk * (&pk + 3u32) / 2u32;
    }
    Ok(total)
}

/// `2^4·3^{(n−4)/2}` for even `n`, `2^5·3^{(n−5)/2}` for odd `n`.
pub fn type_d_bound(n: u32) -> Result<BigUint> {
    if n < 4 {
        return Err(Error::Domain(format!("type D bound needs n >= 4, got {n}")));
    }
    let (two, three) = if n % 2 == 0 { (4, (n - 4) / 2) } else { (5, (n - 5) / 2) };
    Ok(BigUint::from(1u32 << two) * BigUint::from(3u32).pow(three))
}

/// Which set a partition handed to τ is taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TauSource {
    /// A partition of `n − 1` with smallest part at least 2.
    Predecessor,
    /// A partition of `n` with smallest part at least 2.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TauBranch {
    /// Weight `n − 1`: lower the last part by one.
    LowerLast,
    /// Weight `n`, smallest part `k ≥ 4`: replace it by `k − 2` ones.
    SmallestAtLeastFour,
    /// Weight `n`, smallest part 3.
    SmallestThree,
    /// Weight `n`, smallest part 2, at least three parts, last two parts above the 2 equal.
    SmallestTwoEqual,
    /// Weight `n`, smallest part 2, at least three parts, strict drop before the last 2.
    SmallestTwoStrict,
    /// Weight `n`, exactly the two parts `a₁ 2`.
    TwoParts,
}

/// The injection τ from partitions of `n` or `n − 1` with smallest part ≥ 2
/// into partitions of `n − 2`.
pub fn tau(part: &Partition, n: u32, source: TauSource) -> Result<(Partition, TauBranch)> {
    if n < 8 {
        return Err(Error::Domain(format!("tau is defined for n >= 8, got {n}")));
    }
    if !part.is_valid() {
        return Err(Error::Domain(format!("{part} is not a partition")));
    }
    let expected = match source {
        TauSource::Predecessor => n - 1,
        TauSource::Full => n,
    };
    if part.weight() != expected {
        return Err(Error::Domain(format!("{part} does not have weight {expected}")));
    }
    let k = part.smallest().unwrap_or(0);
    if k < 2 {
        return Err(Error::Domain(format!("{part} has a part equal to 1")));
    }
    let a = &part.parts;
    let r = a.len();
    let ones = |count: u32| std::iter::repeat(1u32).take(count as usize);
    let (parts, branch): (Vec<u32>, TauBranch) = match source {
        TauSource::Predecessor => {
            let mut v = a.clone();
            v[r - 1] -= 1;
            (v, TauBranch::LowerLast)
        }
        TauSource::Full if k >= 4 => {
            let v = a[..r - 1].iter().copied().chain(ones(k - 2)).collect();
            (v, TauBranch::SmallestAtLeastFour)
        }
        TauSource::Full if k == 3 => {
            let v = a[..r - 2]
                .iter()
                .copied()
                .chain([2])
                .chain(ones(a[r - 2] - 1))
                .collect();
            (v, TauBranch::SmallestThree)
        }
        TauSource::Full if r >= 3 => {
            if a[r - 3] == a[r - 2] {
                (a[..r - 1].to_vec(), TauBranch::SmallestTwoEqual)
            } else {
                let v = a[..r - 3]
                    .iter()
                    .copied()
                    .chain([a[r - 2] + 1])
                    .chain(ones(a[r - 3] - 1))
                    .collect();
                (v, TauBranch::SmallestTwoStrict)
            }
        }
        TauSource::Full if r == 2 => {
            // (a₁ − 6) 2 2 1 1; for n = 8, 9 the first entry is 0 or 1 and the
            // multiset is re-sorted.
            let v = vec![a[0] - 6, 2, 2, 1, 1];
            (v, TauBranch::TwoParts)
        }
        TauSource::Full => {
            return Err(Error::Domain(format!("{part} lies outside the domain of tau")));
        }
    };
    let image = Partition::new(parts);
    debug_assert_eq!(image.weight(), n - 2);
    Ok((image, branch))
}

#[derive(Debug, Clone, Serialize)]
pub struct InequalityCheck {
    pub name: String,
    pub lo: u32,
    pub hi: u32,
    pub holds: bool,
    /// First `n` where the inequality fails.
    pub counterexample: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TauCheck {
    pub n: u32,
    pub domain_size: u64,
    pub injective: bool,
    pub well_defined: bool,
    /// Number of inputs handled by each branch.
    pub branch_counts: Vec<(TauBranch, u64)>,
    /// Colliding inputs, if any: `(first, second, image)`.
    pub collision: Option<(String, String, String)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PartitionReport {
    pub inequalities: Vec<InequalityCheck>,
    pub tau: Vec<TauCheck>,
}

impl PartitionReport {
    pub fn all_hold(&self) -> bool {
        self.inequalities.iter().all(|c| c.holds)
            && self.tau.iter().all(|t| t.injective && t.well_defined)
    }
}

fn check_range(name: &str, lo: u32, hi: u32, pred: impl Fn(u32) -> bool) -> InequalityCheck {
    let counterexample = (lo..=hi).find(|&n| !pred(n));
    InequalityCheck {
        name: name.to_string(),
        lo,
        hi,
        holds: counterexample.is_none(),
        counterexample,
    }
}

pub fn check_tau(n: u32) -> TauCheck {
    let mut seen: HashMap<Partition, Partition> = HashMap::new();
    let mut branch_counts: HashMap<TauBranch, u64> = HashMap::new();
    let mut collision = None;
    let mut well_defined = true;
    let mut domain_size = 0u64;
    let sources = [
        (TauSource::Predecessor, n - 1),
        (TauSource::Full, n),
    ];
    for (source, weight) in sources {
        for part in partitions_with_bounds(weight, 2, weight) {
            domain_size += 1;
            match tau(&part, n, source) {
                Ok((image, branch)) => {
                    *branch_counts.entry(branch).or_default() += 1;
                    if !image.is_valid() || image.weight() != n - 2 {
                        well_defined = false;
                    }
                    if let Some(prev) = seen.insert(image.clone(), part.clone()) {
                        if collision.is_none() {
                            collision =
                                Some((prev.to_string(), part.to_string(), image.to_string()));
                        }
                    }
                }
                Err(_) => well_defined = false,
            }
        }
    }
    let mut branch_counts: Vec<(TauBranch, u64)> = branch_counts.into_iter().collect();
    branch_counts.sort();
    TauCheck {
        n,
        domain_size,
        injective: collision.is_none(),
        well_defined,
        branch_counts,
        collision,
    }
}

/// Exact verification of every partition inequality used in the type D
/// comparison, plus exhaustive injectivity of τ for `8 ≤ n ≤ min(range_max, 60)`.
pub fn check_inequalities(range_max: u32) -> Result<PartitionReport> {
    check_inequalities_with(range_max, range_max, range_max.min(60))
}

/// As [`check_inequalities`] with separate upper ends for the `p` inequalities,
/// the type D inequalities and τ.
pub fn check_inequalities_with(p_max: u32, d_max: u32, tau_max: u32) -> Result<PartitionReport> {
    if p_max < 12 || d_max < 12 {
        return Err(Error::Domain("inequality range must reach at least 12".into()));
    }
    let pi = |n: u32| p(n as i64);
    let mut inequalities = vec![
        check_range("2^n > p(n+1)", 2, p_max, |n| BigUint::one() << n > pi(n + 1)),
        check_range("p(n) <= p(n-1) + p(n-2)", 2, p_max, |n| {
            pi(n) <= pi(n - 1) + pi(n - 2)
        }),
        check_range("p(n) <= 2 p(n-2)", 8, p_max, |n| pi(n) <= pi(n - 2) * 2u32),
        check_range("2 p(k+1) <= p(k) + p(k+2)", 1, p_max, |k| {
            pi(k + 1) * 2u32 <= pi(k) + pi(k + 2)
        }),
    ];
    let dc = |n: u32| type_d_count(n).expect("n >= 4");
    let db = |n: u32| type_d_bound(n).expect("n >= 4");
    inequalities.push(check_range("3 P(n) > P(n+2)", 11, d_max, |n| dc(n) * 3u32 > dc(n + 2)));
    inequalities.push(check_range("D(n) > P(n)", 4, d_max, |n| db(n) > dc(n)));
    let tau = (8..=tau_max).map(check_tau).collect();
    Ok(PartitionReport { inequalities, tau })
}
