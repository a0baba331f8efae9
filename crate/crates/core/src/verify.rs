//! Full verification run: every computational check, bound to claim ids.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Deserialize;

use crate::cases;
use crate::error::{Error, Result};
use crate::hecke::{self, AffineWeylGroup, GeneratorValue};
use crate::nilorbits::{self, build_nqs, decompose, orbit_count_ff, OrbitConfig, Submodule};
use crate::partitions;
use crate::report::{ClaimRecord, ClaimStatus, VerificationReport};
use crate::rootsys::{self, positive_roots_by_reflection, Family, RootSystem, RootSystemType, SignConvention};
use crate::torus::{self, QOrder};
use crate::weylgrp::{self, WeylGroup};

pub const SECTIONS: [&str; 6] = ["rootsys", "weylgrp", "partitions", "torus", "nilorbits", "hecke"];

#[derive(Clone, Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub prime_bound: u64,
    pub primes_needed: usize,
    pub dimension_cap: usize,
    pub state_budget: usize,
    /// Largest Weyl group enumerated element by element.
    pub enumeration_budget: u128,
    pub hecke_radius: i32,
    pub partition_max: u32,
    /// Section names or case ids; empty runs everything.
    pub select: Vec<String>,
    pub jobs: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            prime_bound: nilorbits::DEFAULT_PRIME_BOUND,
            primes_needed: nilorbits::DEFAULT_PRIMES_NEEDED,
            dimension_cap: nilorbits::DEFAULT_DIMENSION_CAP,
            state_budget: nilorbits::DEFAULT_STATE_BUDGET,
            enumeration_budget: 4_000_000,
            hecke_radius: 2,
            partition_max: 500,
            select: Vec::new(),
            jobs: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("prime_bound", self.prime_bound as u128),
            ("primes_needed", self.primes_needed as u128),
            ("dimension_cap", self.dimension_cap as u128),
            ("state_budget", self.state_budget as u128),
            ("enumeration_budget", self.enumeration_budget),
            ("hecke_radius", self.hecke_radius.max(0) as u128),
            ("jobs", self.jobs.unwrap_or(1) as u128),
        ];
        if let Some((name, _)) = positive.iter().find(|(_, v)| *v == 0) {
            return Err(Error::Invalid(format!("{name} must be positive")));
        }
        if self.partition_max < 200 {
            return Err(Error::Invalid("partition_max must be at least 200".into()));
        }
        let ids = cases::case_ids();
        for s in &self.select {
            if !SECTIONS.contains(&s.as_str()) && !ids.contains(s) {
                return Err(Error::Invalid(format!("unknown selection {s}")));
            }
        }
        Ok(())
    }

    pub fn orbit_config(&self) -> OrbitConfig {
        OrbitConfig {
            prime_bound: self.prime_bound,
            primes_needed: self.primes_needed,
            dimension_cap: self.dimension_cap,
            state_budget: self.state_budget,
            ..OrbitConfig::default()
        }
    }

    fn wants_section(&self, s: &str) -> bool {
        self.select.is_empty() || self.select.iter().any(|x| x == s)
    }

    fn selected_cases(&self) -> Vec<String> {
        let all = cases::case_ids();
        if self.select.is_empty() || self.wants_section("nilorbits") {
            return all;
        }
        all.into_iter().filter(|id| self.select.contains(id)).collect()
    }
}

fn types(names: &[&str]) -> Vec<RootSystemType> {
    names.iter().map(|n| RootSystemType::of(n)).collect()
}

fn ranged(f: Family, lo: usize, hi: usize) -> Vec<RootSystemType> {
    (lo..=hi).map(|n| RootSystemType::new(f, n).expect("valid rank")).collect()
}

fn catalogue() -> Vec<RootSystemType> {
    let mut v = ranged(Family::A, 1, 8);
    v.extend(ranged(Family::B, 2, 8));
    v.extend(ranged(Family::C, 3, 8));
    v.extend(ranged(Family::D, 4, 8));
    v.extend(types(&["E6", "E7", "E8", "F4", "G2"]));
    v
}

/// A failed computation becomes a failing record instead of aborting.
fn guarded(id: String, anchor: &str, r: Result<ClaimRecord>) -> ClaimRecord {
    r.unwrap_or_else(|e| ClaimRecord::new(id, anchor, "", "", ClaimStatus::Fail).with_note(e.to_string()))
}

fn rootsys_records(t: RootSystemType) -> Vec<ClaimRecord> {
    let anchor = format!("{t} root system");
    let id = |k: &str| format!("rootsys.{t}.{k}");
    let rs = match RootSystem::build(t) {
        Ok(rs) => rs,
        Err(e) => return vec![guarded(id("build"), &anchor, Err(e))],
    };
    let mut out = Vec::new();
    let h = *rs.degrees.iter().max().unwrap() as usize;
    out.push(ClaimRecord::compare(
        id("count"),
        format!("{t}: number of positive roots is rank·h/2"),
        (rs.rank * h / 2).to_string(),
        rs.num_positive().to_string(),
    ));
    let mine: BTreeSet<_> = rs.positive_roots.iter().cloned().collect();
    let other: BTreeSet<_> = positive_roots_by_reflection(t).into_iter().collect();
    out.push(ClaimRecord::check(
        id("reflection_closure"),
        format!("{t}: positive roots agree with closure under simple reflections"),
        other.len().to_string(),
        mine.len().to_string(),
        mine == other,
    ));
    let mut bad = 0usize;
    let mut checked = 0usize;
    for conv in [SignConvention::Positive, SignConvention::Negative] {
        let sc = rs.structure_constants(conv);
        let n = rs.num_roots();
        for a in 0..n {
            for b in 0..n {
                let Some(c) = rs.sum_index(a, b) else { continue };
                checked += 1;
                let p = rs.string_down(a, b);
                let nab = sc.n(a, b);
                if nab.abs() != p + 1 || sc.n(b, a) != -nab {
                    bad += 1;
                }
                // a + b + (−c) = 0: N(a,b)/|c|² = N(b,−c)/|a|².
                let mc = rs.neg_index(c);
                if nab * rs.norm(a) != sc.n(b, mc) * rs.norm(c) {
                    bad += 1;
                }
            }
        }
    }
    out.push(ClaimRecord::check(
        id("structure_constants"),
        format!("{t}: Chevalley constants have |N| = p+1, antisymmetry and the cyclic identity"),
        "0 violations",
        format!("{bad} violations in {checked} sums"),
        bad == 0,
    ));
    out
}

fn weyl_records(t: RootSystemType, budget: u128) -> Vec<ClaimRecord> {
    let id = |k: &str| format!("weylgrp.{t}.{k}");
    let mut out = Vec::new();
    let degs = rootsys::degrees_of(t);
    let order: u128 = degs.iter().map(|&d| d as u128).product();
    out.push(ClaimRecord::compare(
        id("order"),
        format!("{t}: |W| equals the product of the degrees"),
        weylgrp::group_order(t).to_string(),
        order.to_string(),
    ));
    let poly = weylgrp::poincare(t);
    out.push(ClaimRecord::check(
        id("poincare"),
        format!("{t}: Poincaré polynomial is palindromic of degree N with value |W| at 1"),
        order.to_string(),
        poly.total().to_string(),
        poly.total() == order && poly.is_palindromic(),
    ));
    let expected = expected_valid_orders(t);
    let got = weylgrp::valid_orders(t);
    let vanish_ok = (2..=60u64).all(|m| weylgrp::poincare_vanishes(t, m) == weylgrp::divides_some_degree(t, m));
    out.push(match expected {
        Some(e) => ClaimRecord::check(
            id("valid_orders"),
            format!("{t}: orders of q with nonvanishing Poincaré polynomial below the largest degree"),
            format!("{e:?}"),
            format!("{got:?}"),
            e == got && vanish_ok,
        ),
        None => ClaimRecord::info(
            id("valid_orders"),
            format!("{t}: orders of q with nonvanishing Poincaré polynomial below the largest degree"),
            format!("{got:?}"),
        ),
    });
    let irr = weylgrp::irr_count(t);
    let table = match (t.family, t.rank) {
        (Family::E, 6) | (Family::F, 4) => Some(25),
        (Family::E, 7) => Some(60),
        (Family::E, 8) => Some(112),
        (Family::G, 2) => Some(6),
        _ => None,
    };
    if let Some(v) = table {
        out.push(ClaimRecord::compare(
            id("irr_table"),
            format!("{t}: number of irreducible characters of W"),
            v.to_string(),
            irr.to_string(),
        ));
    }
    let enumerable = order <= budget
        && match t.family {
            Family::A => t.rank <= 9,
            Family::B | Family::C | Family::D => t.rank <= 7,
            _ => true,
        };
    let anchor = format!("{t}: irreducible characters equal conjugacy classes");
    out.push(if enumerable {
        let rs = RootSystem::build(t);
        let r = rs.and_then(|rs| {
            let w = WeylGroup::enumerate(&rs, budget)?;
            let hist_ok = w.poincare() == poly;
            let classes = w.conjugacy_class_count() as u64;
            Ok(ClaimRecord::check(
                id("classes"),
                anchor.as_str(),
                irr.to_string(),
                classes.to_string(),
                classes == irr && hist_ok,
            ))
        });
        guarded(id("classes"), &anchor, r)
    } else {
        ClaimRecord::skipped(id("classes"), anchor, format!("|W| = {order} is beyond the enumeration scope"))
    });
    out
}

fn expected_valid_orders(t: RootSystemType) -> Option<Vec<u64>> {
    match (t.family, t.rank) {
        (Family::E, 6) => Some(vec![7, 10, 11]),
        (Family::E, 7) => Some(vec![11, 13, 15, 16, 17]),
        (Family::E, 8) => Some(vec![11, 13, 16, 17, 19, 21, 22, 23, 25, 26, 27, 28, 29]),
        (Family::A, _) => Some(vec![]),
        (Family::D, n) => Some(((n as u64 + 1)..=(2 * n as u64 - 3)).filter(|m| m % 2 == 1).collect()),
        _ => None,
    }
}

fn weyl_section(cfg: &RunConfig) -> Vec<ClaimRecord> {
    let mut ts = ranged(Family::A, 1, 9);
    ts.extend(ranged(Family::B, 2, 7));
    ts.extend(ranged(Family::C, 3, 7));
    ts.extend(ranged(Family::D, 4, 12));
    ts.extend(types(&["E6", "E7", "E8", "F4", "G2"]));
    let per: Vec<Vec<ClaimRecord>> = ts.par_iter().map(|&t| weyl_records(t, cfg.enumeration_budget)).collect();
    per.into_iter().flatten().collect()
}

fn big_list(xs: impl Iterator<Item = BigUint>) -> String {
    let v: Vec<String> = xs.map(|x| x.to_string()).collect();
    format!("({})", v.join(","))
}

fn partition_section(cfg: &RunConfig) -> Vec<ClaimRecord> {
    let mut out = Vec::new();
    out.push(ClaimRecord::compare(
        "partitions.p_small",
        "partition numbers p(3), p(4), p(5), p(6)",
        "(3,5,7,11)",
        big_list((3..=6).map(partitions::p)),
    ));
    let brute_ok = (0..=30u32).all(|n| partitions::p(n as i64) == BigUint::from(partitions::p_brute(n)));
    out.push(ClaimRecord::check(
        "partitions.p_oracle",
        "pentagonal recurrence agrees with direct enumeration for n ≤ 30",
        "agree",
        if brute_ok { "agree" } else { "differ" },
        brute_ok,
    ));
    let dc = (4..=12).map(|n| partitions::type_d_count(n)).collect::<Result<Vec<_>>>();
    let db = (4..=12).map(|n| partitions::type_d_bound(n)).collect::<Result<Vec<_>>>();
    out.push(guarded(
        "partitions.type_d_counts".into(),
        "type D character counts for 4 ≤ n ≤ 12",
        dc.map(|v| {
            ClaimRecord::compare(
                "partitions.type_d_counts",
                "type D character counts for 4 ≤ n ≤ 12",
                "(13,18,37,55,100,150,251,376,599)",
                big_list(v.into_iter()),
            )
        }),
    ));
    out.push(guarded(
        "partitions.type_d_bounds".into(),
        "type D comparison bounds for 4 ≤ n ≤ 12",
        db.map(|v| {
            ClaimRecord::compare(
                "partitions.type_d_bounds",
                "type D comparison bounds for 4 ≤ n ≤ 12",
                "(16,32,48,96,144,288,432,864,1296)",
                big_list(v.into_iter()),
            )
        }),
    ));
    let (p_max, d_max) = (cfg.partition_max, cfg.partition_max.min(200));
    match partitions::check_inequalities_with(p_max, d_max, 60) {
        Ok(rep) => {
            for (k, c) in rep.inequalities.iter().enumerate() {
                out.push(ClaimRecord::check(
                    format!("partitions.inequality{}", k + 1),
                    format!("{} for {} ≤ n ≤ {}", c.name, c.lo, c.hi),
                    "holds",
                    match c.counterexample {
                        Some(n) => format!("fails at n = {n}"),
                        None => "holds".into(),
                    },
                    c.holds,
                ));
            }
            let bad: Vec<String> = rep
                .tau
                .iter()
                .filter(|t| !(t.injective && t.well_defined))
                .map(|t| t.n.to_string())
                .collect();
            let lo = rep.tau.first().map_or(0, |t| t.n);
            let hi = rep.tau.last().map_or(0, |t| t.n);
            out.push(ClaimRecord::check(
                "partitions.tau",
                format!("τ is well defined and injective for {lo} ≤ n ≤ {hi}"),
                "injective",
                if bad.is_empty() { "injective".to_string() } else { format!("fails at n = {}", bad.join(",")) },
                bad.is_empty(),
            ));
        }
        Err(e) => out.push(guarded("partitions.inequalities".into(), "partition inequalities", Err(e))),
    }
    out
}

fn torus_section() -> Vec<ClaimRecord> {
    let mut jobs: Vec<(RootSystemType, QOrder)> = Vec::new();
    for t in ranged(Family::B, 2, 8) {
        jobs.push((t, QOrder::Infinite));
        for m in weylgrp::valid_orders(t).into_iter().filter(|m| m % 2 == 1) {
            jobs.push((t, QOrder::Finite(m)));
        }
    }
    let f4 = RootSystemType::of("F4");
    jobs.extend([5, 7, 9, 10, 11].map(|m| (f4, QOrder::Finite(m))));
    let g2 = RootSystemType::of("G2");
    jobs.extend([4, 5].map(|m| (g2, QOrder::Finite(m))));
    let mut out: Vec<ClaimRecord> = jobs
        .par_iter()
        .map(|&(t, o)| {
            let id = format!("torus.{t}.o{o}.nonconjugate");
            let anchor = format!("{t}, q of order {o}: the standard and mixed points are not conjugate");
            let r = torus::verify_non_conjugacy(t, o).map(|x| {
                ClaimRecord::check(
                    &id,
                    anchor.as_str(),
                    "not conjugate",
                    if x.conjugate { "conjugate" } else { "not conjugate" },
                    !x.conjugate,
                )
                .with_note(format!("{}; centralizers {} vs {}", x.decided_by, x.standard_signature, x.mixed_signature))
            });
            guarded(id.clone(), &anchor, r)
        })
        .collect();

    let mut cc: Vec<(RootSystemType, QOrder, u64)> = Vec::new();
    let mut cc_types = ranged(Family::B, 2, 6);
    cc_types.extend(ranged(Family::C, 3, 6));
    cc_types.extend([f4, g2]);
    for t in cc_types {
        let z = rootsys::center_order(t);
        cc.push((t, QOrder::Finite(1), z));
        cc.push((t, QOrder::Infinite, 2 * z));
        for m in weylgrp::valid_orders(t) {
            cc.push((t, QOrder::Finite(m), 2 * z));
        }
    }
    out.extend(cc.par_iter().map(|&(t, o, want)| {
        let id = format!("torus.{t}.o{o}.central_characters");
        let anchor = format!("{t}, q of order {o}: central characters of one-dimensional representations");
        let r = torus::count_one_dim_characters(t, o)
            .map(|c| ClaimRecord::compare(&id, anchor.as_str(), want.to_string(), c.classes.to_string()));
        guarded(id.clone(), &anchor, r)
    }).collect::<Vec<_>>());
    out
}

fn regular_records(t: RootSystemType, oc: &OrbitConfig) -> ClaimRecord {
    let id = format!("nilorbits.{t}.regular");
    let anchor = format!("{t}, q of infinite order: orbits on the span of the simple root vectors");
    let r = (|| {
        let rs = RootSystem::build(t)?;
        let nm = build_nqs(&rs, QOrder::Infinite)?;
        let sc = rs.structure_constants(SignConvention::Positive);
        let comps = decompose(&rs, &nm, &sc);
        let parts: Vec<&Submodule> = comps.iter().collect();
        let c = orbit_count_ff(&rs, &nm, &parts, oc)?;
        Ok(ClaimRecord::check(
            &id,
            anchor.as_str(),
            (1u64 << t.rank).to_string(),
            c.count.to_string(),
            c.count == 1 << t.rank && c.stable && nm.basis.len() == t.rank,
        ))
    })();
    guarded(id.clone(), &anchor, r)
}

fn nilorbit_section(cfg: &RunConfig) -> Vec<ClaimRecord> {
    let oc = cfg.orbit_config();
    let mut out = Vec::new();
    if cfg.wants_section("nilorbits") {
        let mut ts = ranged(Family::A, 1, 6);
        ts.extend(types(&["B3", "C3", "D4", "E6", "E7", "E8", "F4", "G2"]));
        out.extend(ts.par_iter().map(|&t| regular_records(t, &oc)).collect::<Vec<_>>());
    }
    let ids = cfg.selected_cases();
    let per: Vec<Vec<ClaimRecord>> = ids
        .par_iter()
        .map(|id| {
            cases::verify_case(id, &oc).unwrap_or_else(|e| {
                vec![ClaimRecord::new(format!("{id}.error"), format!("case {id}"), "", "", ClaimStatus::Fail)
                    .with_note(e.to_string())]
            })
        })
        .collect();
    out.extend(per.into_iter().flatten());
    out
}

fn word_record(w: &hecke::WordCheck, id: String) -> ClaimRecord {
    ClaimRecord::check(
        id,
        format!("{}: {} = {} as an element of the extended affine Weyl group", w.rstype, w.label, w.word),
        format!("length {}", w.expected_length),
        format!("length {}", w.computed_length),
        w.matches,
    )
}

fn hecke_section(cfg: &RunConfig) -> Vec<ClaimRecord> {
    let rank2 = types(&["A2", "B2", "G2"]);
    let mut out: Vec<ClaimRecord> = rank2
        .par_iter()
        .map(|&t| {
            let id = format!("hecke.{t}.theta_relations");
            let anchor = format!("{t}: Bernstein relations on the weight ball of radius {}", cfg.hecke_radius);
            let r = hecke::check_theta_relations(t, cfg.hecke_radius).map(|r| {
                let fails = r.multiplicative_failures
                    + r.commutation_failures
                    + r.decomposition_failures
                    + r.central_failures
                    + r.reflection_failures;
                ClaimRecord::check(&id, anchor.as_str(), "0 failures", format!("{fails} failures"), fails == 0).with_note(
                    format!(
                        "{} pairs, {} decompositions, {} central, {} reflection checks",
                        r.pairs, r.decomposition_checks, r.central_checks, r.reflection_checks
                    ),
                )
            });
            guarded(id.clone(), &anchor, r)
        })
        .collect();

    for t in types(&["A2", "B2", "G2"]) {
        let id = format!("hecke.{t}.algebra");
        let anchor = format!("{t}: associativity and the q = 1 specialization");
        let r = hecke::check_algebra(t, 100, 7).map(|a| {
            let f = a.associativity_failures + a.specialization_failures;
            ClaimRecord::check(&id, anchor.as_str(), "0 failures", format!("{f} failures"), f == 0)
        });
        out.push(guarded(id.clone(), &anchor, r));
    }
    for t in types(&["A2", "B2", "G2", "A3", "B3"]) {
        let id = format!("hecke.{t}.finite_idempotents");
        let anchor = format!("{t}: eigen-relations of the trivial and sign idempotents");
        let r = hecke::check_finite_idempotents(t).map(|f| {
            let ok = f.trivial_relations && f.sign_relations && f.product_vanishes;
            ClaimRecord::check(&id, anchor.as_str(), "hold", if ok { "hold" } else { "fail" }, ok)
        });
        out.push(guarded(id.clone(), &anchor, r));
    }
    for n in 1..=6 {
        match hecke::check_type_a_words(n) {
            Ok(ws) => {
                for (i, w) in ws.iter().enumerate() {
                    out.push(word_record(w, format!("hecke.A{n}.word{}", i + 1)));
                }
            }
            Err(e) => out.push(guarded(format!("hecke.A{n}.words"), "type A words", Err(e))),
        }
    }
    match hecke::check_g2_words() {
        Ok(ws) => out.extend(ws.iter().map(|w| word_record(w, format!("hecke.G2.{}", w.label)))),
        Err(e) => out.push(guarded("hecke.G2.words".into(), "G2 words", Err(e))),
    }
    out.push(guarded(
        "hecke.F4.x4".into(),
        "F4 word",
        hecke::check_f4_word().map(|w| word_record(&w, "hecke.F4.x4".into())),
    ));
    out.push(guarded(
        "hecke.F4.reflection_chain".into(),
        "F4 reflection chain",
        hecke::check_f4_reflection_chain().map(|steps| {
            let ok = steps.iter().all(|s| s.holds);
            ClaimRecord::check(
                "hecke.F4.reflection_chain",
                "F4: chain of simple reflections between weights used for the translation word",
                format!("{} steps hold", steps.len()),
                format!("{} steps hold", steps.iter().filter(|s| s.holds).count()),
                ok,
            )
        }),
    ));
    for n in [2, 3] {
        let id = format!("hecke.A{n}.simple_theta");
        out.push(guarded(
            id.clone(),
            "type A θ of simple roots",
            hecke::check_type_a_simple_theta(n).map(|v| {
                let ok = v.iter().all(|&b| b);
                ClaimRecord::check(
                    &id,
                    format!("A{n}: θ of each simple root through the translation words"),
                    "all hold",
                    format!("{}/{} hold", v.iter().filter(|&&b| b).count(), v.len()),
                    ok,
                )
            }),
        ));
    }
    let g2 = RootSystem::build(RootSystemType::of("G2"));
    out.push(guarded(
        "hecke.G2.lattice".into(),
        "G2 fundamental weights",
        g2.map(|rs| {
            let fw: Vec<String> = rs
                .fundamental_weights
                .iter()
                .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                .collect();
            ClaimRecord::compare(
                "hecke.G2.lattice",
                "G2: x1 = 2α1+α2 and x2 = 3α1+2α2",
                "(2,1) (3,2)",
                format!("({}) ({})", fw[0], fw[1]),
            )
        }),
    ));
    use GeneratorValue::{MinusOne as M, Q};
    let mut chars: Vec<(String, Vec<GeneratorValue>, Vec<i32>)> = vec![
        ("F4".into(), vec![M, Q, Q, M, M], vec![1, 1, -1, -1]),
        ("G2".into(), vec![Q, Q, M], vec![1, -1]),
        ("B3".into(), vec![M, Q, Q, M], vec![1, 1, -1]),
    ];
    for n in 1..=4usize {
        chars.push((format!("A{n}"), vec![Q; n + 1], vec![1; n]));
        chars.push((format!("A{n}"), vec![M; n + 1], vec![-1; n]));
    }
    for (name, vals, want) in chars {
        let t = RootSystemType::of(&name);
        let label: String = vals.iter().map(|v| if *v == Q { 'q' } else { 'm' }).collect();
        let id = format!("hecke.{t}.character_{label}");
        let anchor = format!("{t}: exponents of the one-dimensional character with generator values {label}");
        let r = AffineWeylGroup::new(t).and_then(|g| hecke::one_dim_character(&g, &vals)).map(|c| {
            ClaimRecord::compare(&id, anchor.as_str(), format!("{want:?}"), format!("{:?}", c.exponents))
        });
        out.push(guarded(id.clone(), &anchor, r));
    }
    out
}

fn run(cfg: &RunConfig) -> VerificationReport {
    let mut report = VerificationReport::default();
    if cfg.wants_section("rootsys") {
        let per: Vec<Vec<ClaimRecord>> = catalogue().par_iter().map(|&t| rootsys_records(t)).collect();
        report.extend(per.into_iter().flatten());
    }
    if cfg.wants_section("weylgrp") {
        report.extend(weyl_section(cfg));
    }
    if cfg.wants_section("partitions") {
        report.extend(partition_section(cfg));
    }
    if cfg.wants_section("torus") {
        report.extend(torus_section());
    }
    report.extend(nilorbit_section(cfg));
    if cfg.wants_section("hecke") {
        report.extend(hecke_section(cfg));
    }
    report
}

/// Runs every selected check in a fixed order; the record sequence does not
/// depend on the number of threads.
pub fn verify_all(cfg: &RunConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    match cfg.jobs {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Domain(e.to_string()))?;
            Ok(pool.install(|| run(cfg)))
        }
        None => Ok(run(cfg)),
    }
}
