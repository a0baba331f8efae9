use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hecke_core::{
    cases, hecke, nilorbits, partitions, torus, verify_all, weylgrp, OrbitConfig, QOrder, RootSystem,
    RootSystemType, RunConfig, SignConvention,
};

#[derive(Parser)]
#[command(name = "hecke-verify", version)]
#[command(about = "Exact root-system computations and the full claim verification run")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots, highest root and degrees
    Roots {
        /// Type such as E8 or B4
        rstype: RootSystemType,
    },
    /// Weyl group order, Poincaré polynomial, valid orders of q, irreducible characters
    Weyl {
        rstype: RootSystemType,
        #[arg(long)]
        poincare: bool,
        #[arg(long)]
        orders: bool,
        #[arg(long)]
        irr: bool,
    },
    /// Partition counts and the inequality checks
    Partitions {
        /// Check every inequality up to N
        #[arg(long, value_name = "N")]
        check: Option<u32>,
        /// p(N)
        #[arg(long, value_name = "N")]
        p: Option<i64>,
        /// Type D count and comparison bound for rank N
        #[arg(long = "typeD", value_name = "N")]
        type_d: Option<u32>,
    },
    /// Roots of a torus point grouped by exponent
    Torus {
        rstype: RootSystemType,
        /// Order of q, a positive integer or "inf"
        #[arg(long)]
        order: QOrder,
        #[arg(long, value_enum, default_value_t = Point::Standard)]
        point: Point,
        #[arg(long)]
        show_centralizer: bool,
    },
    /// Decomposition of the q-eigenspace and finite-field orbit counts
    Orbits(OrbitArgs),
    /// Affine Hecke algebra identities
    Hecke {
        #[arg(long = "type")]
        rstype: RootSystemType,
        #[arg(long, value_enum)]
        check: HeckeCheck,
        #[arg(long, default_value_t = 2)]
        radius: i32,
    },
    /// Run every check and report each claim
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Point {
    Standard,
    Mixed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HeckeCheck {
    Theta,
    Center,
    Words,
    Ddprime,
}

#[derive(Args)]
struct OrbitArgs {
    rstype: RootSystemType,
    #[arg(long)]
    order: QOrder,
    /// Comma-separated primes, each 1 mod the order of q
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<u64>>,
    /// Count these components together (indices as listed)
    #[arg(long, value_delimiter = ',')]
    joint: Option<Vec<usize>>,
    /// Largest module dimension counted
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Case id (e.g. E8.o16) or section name; repeatable
    #[arg(long = "case", value_name = "ID")]
    cases: Vec<String>,
    /// TOML file with run settings
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    prime_bound: Option<u64>,
    #[arg(long)]
    dimension_cap: Option<usize>,
    #[arg(long)]
    state_budget: Option<usize>,
}

fn print(format: Format, value: &Value, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{value}"),
        Format::Text => print!("{}", text()),
    }
}

fn roots(format: Format, t: RootSystemType) -> anyhow::Result<()> {
    let rs = RootSystem::build(t)?;
    let line = |c: &[i64]| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let v = json!({
        "type": t,
        "positive_roots": rs.positive_roots.iter().map(|r| &r.coords).collect::<Vec<_>>(),
        "highest_root": rs.highest_root.coords,
        "degrees": rs.degrees,
    });
    print(format, &v, || {
        let mut s: String = rs.positive_roots.iter().map(|r| line(&r.coords) + "\n").collect();
        s += &format!("highest root: {}\n", line(&rs.highest_root.coords));
        s += &format!("degrees: {:?}\n", rs.degrees);
        s
    });
    Ok(())
}

fn weyl(format: Format, t: RootSystemType, poincare: bool, orders: bool, irr: bool) -> anyhow::Result<()> {
    let all = !(poincare || orders || irr);
    let degrees = hecke_core::rootsys::degrees_of(t);
    let order = weylgrp::group_order(t);
    let mut v = json!({ "type": t, "degrees": degrees, "order": order.to_string() });
    let mut text = format!("{t}: degrees {degrees:?}, |W| = {order}\n");
    if all || poincare {
        let p = weylgrp::poincare(t);
        text += &format!("poincare coefficients: {:?}\n", p.coeffs);
        v["poincare"] = json!(p.coeffs);
    }
    if all || orders {
        let o = weylgrp::valid_orders(t);
        text += &format!("valid orders of q: {o:?}\n");
        v["valid_orders"] = json!(o);
    }
    if all || irr {
        let n = weylgrp::irr_count(t);
        text += &format!("irreducible characters: {n}\n");
        v["irr"] = json!(n);
    }
    print(format, &v, || text);
    Ok(())
}

fn partitions_cmd(format: Format, check: Option<u32>, p: Option<i64>, type_d: Option<u32>) -> anyhow::Result<()> {
    if check.is_none() && p.is_none() && type_d.is_none() {
        bail!("give at least one of --check, --p, --typeD");
    }
    let mut v = json!({});
    let mut text = String::new();
    if let Some(n) = p {
        let x = partitions::p(n);
        text += &format!("p({n}) = {x}\n");
        v["p"] = json!({ "n": n, "value": x.to_string() });
    }
    if let Some(n) = type_d {
        let c = partitions::type_d_count(n)?;
        let b = partitions::type_d_bound(n)?;
        text += &format!("D{n}: count {c}, bound {b}\n");
        v["type_d"] = json!({ "n": n, "count": c.to_string(), "bound": b.to_string() });
    }
    if let Some(n) = check {
        let rep = partitions::check_inequalities(n)?;
        for c in &rep.inequalities {
            text += &format!(
                "{}: {} ≤ n ≤ {}: {}\n",
                c.name,
                c.lo,
                c.hi,
                if c.holds { "holds" } else { "fails" }
            );
        }
        let bad: Vec<u32> = rep.tau.iter().filter(|t| !t.injective || !t.well_defined).map(|t| t.n).collect();
        text += &format!("tau injective on {} ranks, failures {bad:?}\n", rep.tau.len());
        v["check"] = serde_json::to_value(&rep)?;
    }
    print(format, &v, || text);
    Ok(())
}

fn torus_cmd(format: Format, t: RootSystemType, order: QOrder, point: Point, show: bool) -> anyhow::Result<()> {
    let rs = RootSystem::build(t)?;
    let s = match point {
        Point::Standard => torus::TorusPoint::all_q(&rs, order),
        Point::Mixed => torus::TorusPoint::mixed(&rs, order),
    };
    let mut classes: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for r in &rs.roots {
        let k = s.eval(&r.coords).map_or("non-power".to_string(), |e| e.to_string());
        classes.entry(k).or_default().push(r.compact());
    }
    let mut v = json!({ "type": t, "order": order.to_string(), "exponents": classes });
    let mut text: String = classes
        .iter()
        .map(|(k, rs)| format!("q^{k}: {}\n", rs.join(" ")))
        .collect();
    if show {
        let sig = torus::centralizer_signature(&rs, &s);
        let roots: Vec<String> = torus::centralizer_roots(&rs, &s)
            .into_iter()
            .map(|i| rs.roots[i].compact())
            .collect();
        text += &format!("centralizer {sig}: {}\n", roots.join(" "));
        v["centralizer"] = json!({ "signature": sig.to_string(), "roots": roots });
    }
    print(format, &v, || text);
    Ok(())
}

fn orbits_cmd(format: Format, a: OrbitArgs) -> anyhow::Result<()> {
    let rs = RootSystem::build(a.rstype)?;
    let nm = nilorbits::build_nqs(&rs, a.order)?;
    let sc = rs.structure_constants(SignConvention::Positive);
    let comps = nilorbits::decompose(&rs, &nm, &sc);
    let cfg = OrbitConfig {
        primes: a.primes,
        dimension_cap: a.cap.unwrap_or(nilorbits::DEFAULT_DIMENSION_CAP),
        ..OrbitConfig::default()
    };
    let grouping: Vec<Vec<usize>> = a.joint.into_iter().collect();
    if let Some(&bad) = grouping.iter().flatten().find(|&&i| i >= comps.len()) {
        bail!("component {bad} does not exist ({} components)", comps.len());
    }
    let bound = nilorbits::case_bound(&rs, a.order, &grouping, &cfg)?;
    let listed: Vec<Vec<String>> = comps
        .iter()
        .map(|c| c.roots(&rs).iter().map(|r| r.compact()).collect())
        .collect();
    let claims = match a.order {
        QOrder::Finite(m) => {
            let id = cases::case_id(a.rstype, m);
            if cases::case_ids().contains(&id) {
                cases::verify_case(&id, &cfg)?
            } else {
                Vec::new()
            }
        }
        QOrder::Infinite => Vec::new(),
    };
    let v = json!({
        "type": a.rstype,
        "order": a.order.to_string(),
        "dim": nm.dim(),
        "components": listed,
        "bound": bound,
        "claims": claims,
    });
    print(format, &v, || {
        let mut s = format!("{} at order {}: dim {}\n", a.rstype, a.order, nm.dim());
        for (i, c) in listed.iter().enumerate() {
            s += &format!("  [{i}] {}\n", c.join(" "));
        }
        for g in &bound.groups {
            let n = match (&g.count, &g.skipped) {
                (Some(c), _) => format!("{} orbits (primes {:?})", c.count, c.primes_used),
                (None, Some(why)) => format!("skipped: {why}"),
                _ => "?".into(),
            };
            s += &format!("  {} (dim {}): {n}\n", g.label, g.dim);
        }
        if let Some(p) = &bound.product {
            s += &format!("  product {p}\n");
        }
        for c in &claims {
            s += &format!("  {} {}: expected {}, computed {}\n", c.status.as_str(), c.claim_id, c.expected, c.computed);
        }
        s
    });
    Ok(())
}

fn hecke_cmd(format: Format, t: RootSystemType, check: HeckeCheck, radius: i32) -> anyhow::Result<()> {
    let v = match check {
        HeckeCheck::Theta => {
            let r = hecke::check_theta_relations(t, radius)?;
            json!({ "pass": r.holds(), "report": r })
        }
        HeckeCheck::Center => {
            let r = hecke::check_theta_relations(t, radius)?;
            json!({
                "pass": r.central_failures == 0,
                "central_checks": r.central_checks,
                "central_failures": r.central_failures,
            })
        }
        HeckeCheck::Words => {
            let words = match (t.family, t.rank) {
                (hecke_core::Family::A, n) => hecke::check_type_a_words(n)?,
                (hecke_core::Family::G, 2) => hecke::check_g2_words()?,
                (hecke_core::Family::F, 4) => vec![hecke::check_f4_word()?],
                _ => bail!("no translation words are tabulated for {t}"),
            };
            json!({ "pass": words.iter().all(|w| w.matches), "words": words })
        }
        HeckeCheck::Ddprime => {
            let f = hecke::check_finite_idempotents(t)?;
            json!({ "pass": f.trivial_relations && f.sign_relations && f.product_vanishes, "report": f })
        }
    };
    print(format, &v, || serde_json::to_string_pretty(&v).unwrap_or_default() + "\n");
    Ok(())
}

fn run_config(a: &VerifyArgs) -> anyhow::Result<RunConfig> {
    let mut cfg = match &a.config {
        Some(path) => {
            let s = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            toml::from_str(&s).with_context(|| format!("parsing {}", path.display()))?
        }
        None => RunConfig::default(),
    };
    if !a.cases.is_empty() {
        cfg.select = a.cases.clone();
    }
    if let Some(j) = a.jobs {
        cfg.jobs = Some(j);
    }
    if let Some(p) = a.prime_bound {
        cfg.prime_bound = p;
    }
    if let Some(d) = a.dimension_cap {
        cfg.dimension_cap = d;
    }
    if let Some(b) = a.state_budget {
        cfg.state_budget = b;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn verify_cmd(format: Format, a: VerifyArgs) -> ExitCode {
    let cfg = match run_config(&a) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("configuration error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let report = match verify_all(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("configuration error: {e}");
            return ExitCode::from(2);
        }
    };
    match format {
        Format::Json => print!("{}", report.to_json_lines()),
        Format::Text => print!("{}", report.to_text()),
    }
    let c = report.counts();
    eprintln!(
        "{} records: {} pass, {} fail, {} informational, {} skipped",
        report.records.len(),
        c.pass,
        c.fail,
        c.informational,
        c.skipped
    );
    if c.fail == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let f = cli.format;
    let r = match cli.command {
        Command::Roots { rstype } => roots(f, rstype),
        Command::Weyl { rstype, poincare, orders, irr } => weyl(f, rstype, poincare, orders, irr),
        Command::Partitions { check, p, type_d } => partitions_cmd(f, check, p, type_d),
        Command::Torus { rstype, order, point, show_centralizer } => torus_cmd(f, rstype, order, point, show_centralizer),
        Command::Orbits(a) => orbits_cmd(f, a),
        Command::Hecke { rstype, check, radius } => hecke_cmd(f, rstype, check, radius),
        Command::Verify(a) => return verify_cmd(f, a),
    };
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
