//! `check`, `semigroup`, `vtable` and `oracle`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use cusp_floer::curves::{Derived, Relation, Row};
use cusp_floer::knotified::LinkInvariants;
use cusp_floer::oracle::{a_s_subcomplex, graded_homology, v_top_bot_half_level, ComplexFile};
use cusp_floer::{
    check, v_top_bot_composite, CompositeKnotSpec, ModelError, NumericalSemigroup, ObstructionReport,
    Verdict, Q,
};
use serde::Serialize;

use crate::config::ConfigFile;

pub const EXIT_CONSISTENT: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_OBSTRUCTED: u8 = 2;

fn print_json(value: &impl Serialize) -> Result<()> {
    outln!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

// ---------- check ----------

#[derive(Serialize)]
struct RPoint {
    k: i64,
    n: i64,
    r: i64,
}

#[derive(Serialize)]
struct DerivedEnvelope {
    #[serde(flatten)]
    derived: Derived,
    r_excerpt: Vec<RPoint>,
}

#[derive(Serialize)]
struct ReportEnvelope<'a> {
    version: &'static str,
    input: &'a ConfigFile,
    derived: DerivedEnvelope,
    report: &'a ObstructionReport,
    exit_code: u8,
}

fn relation(r: Relation) -> &'static str {
    match r {
        Relation::AtMost => "<=",
        Relation::AtLeast => ">=",
    }
}

fn render_row(row: &Row) -> String {
    let ineq = |i: &cusp_floer::curves::Inequality| {
        format!("{} {} {} {}", i.lhs, relation(i.relation), i.rhs, if i.holds { "ok" } else { "FAILS" })
    };
    let cross = match row.cross_check {
        None => "-".to_string(),
        Some(c) => format!(
            "d_top={} <= {} {}, d_bot={} >= {} {}",
            c.d_top,
            c.upper,
            if c.top_ok { "ok" } else { "fails" },
            c.d_bot,
            c.lower,
            if c.bot_ok { "ok" } else { "fails" }
        ),
    };
    format!("{:>4} {:>7} {:>7}  {:<18} {:<18} {}", row.k, row.m.to_string(), row.level, ineq(&row.inequality1), ineq(&row.inequality2), cross)
}

fn render_invariants(l: &LinkInvariants) -> String {
    format!(
        "kappa+ = {}, kappa- = {}, eta+ = {}, eta- = {}, delta1 = {}, delta2 = {}",
        l.kappa_pos, l.kappa_neg, l.eta_pos, l.eta_neg, l.delta1, l.delta2
    )
}

pub fn cmd_check(path: &Path, json: bool, allow_genus_slack: bool) -> Result<u8> {
    let file = ConfigFile::read(path)?;
    let config = file.to_config(allow_genus_slack)?;
    let report = check(&config).map_err(|e| match e {
        cusp_floer::CurveError::ConfigMismatch(msg) => anyhow::anyhow!(
            "{msg}\nhint: `cusp-floer vtable` computes V^top/V^bot for such configurations, with \
             --validate-with-oracle when the closed formula does not apply"
        ),
        other => other.into(),
    })?;
    let exit_code = match report.verdict {
        Verdict::Consistent => EXIT_CONSISTENT,
        Verdict::Obstructed => EXIT_OBSTRUCTED,
    };
    let derived = config.derived();
    if json {
        let r = config.counting_function();
        let d = config.degree;
        let r_excerpt = report
            .rows
            .iter()
            .flat_map(|row| [-1, 0, 1].map(|o| (row.k, row.k * d + o)))
            .map(|(k, n)| RPoint { k, n, r: r.eval(n) })
            .collect();
        print_json(&ReportEnvelope {
            version: env!("CARGO_PKG_VERSION"),
            input: &file,
            derived: DerivedEnvelope { derived, r_excerpt },
            report: &report,
            exit_code,
        })?;
    } else {
        outln!("degree {}, genus {}, {} cusp(s)", config.degree, config.genus, config.cusps.len());
        outln!("{}", render_invariants(&derived.links));
        outln!("rho = {}, g3 = {}, genus formula gives {}", derived.rho, derived.g3, derived.genus_from_formula);
        outln!("theorem: {:?}", report.theorem);
        outln!("{:>4} {:>7} {:>7}  {:<18} {:<18} {}", "k", "m", "level", "inequality 1", "inequality 2", "cross-check");
        for row in &report.rows {
            outln!("{}", render_row(row));
        }
        match report.verdict {
            Verdict::Consistent => outln!("verdict: consistent"),
            Verdict::Obstructed => {
                outln!("verdict: obstructed");
                for w in &report.witnesses {
                    outln!("  witness: k = {}, inequality {}: {} vs {}", w.k, w.inequality, w.lhs, w.rhs);
                }
            }
        }
        if !report.cross_check_agrees {
            outln!("warning: the V^top/V^bot cross-check disagrees with the inequalities");
        }
    }
    Ok(exit_code)
}

// ---------- semigroup ----------

#[derive(Serialize)]
struct SemigroupRow {
    k: i64,
    r: i64,
    member: bool,
}

#[derive(Serialize)]
struct SemigroupTable<'a> {
    generators: &'a [i64],
    genus: i64,
    frobenius: i64,
    rows: Vec<SemigroupRow>,
}

pub fn cmd_semigroup(gens: &[i64], upto: i64, json: bool) -> Result<u8> {
    let s = NumericalSemigroup::from_generators(gens)?;
    let r = s.counting_function();
    let rows: Vec<SemigroupRow> = (0..upto.max(0)).map(|k| SemigroupRow { k, r: r.eval(k), member: s.contains(k) }).collect();
    if json {
        print_json(&SemigroupTable { generators: s.generators(), genus: s.genus(), frobenius: s.frobenius(), rows })?;
    } else {
        outln!("semigroup generated by {:?}: genus {}, Frobenius number {}", s.generators(), s.genus(), s.frobenius());
        outln!("{:>6} {:>6}  in S", "k", "R(k)");
        for row in rows {
            outln!("{:>6} {:>6}  {}", row.k, row.r, if row.member { "*" } else { "" });
        }
    }
    Ok(EXIT_CONSISTENT)
}

// ---------- vtable ----------

pub struct VtableArgs {
    pub cusps: Vec<NumericalSemigroup>,
    pub positive: BTreeMap<i64, i64>,
    pub negative: BTreeMap<i64, i64>,
    pub genus: i64,
    pub s_min: Option<i64>,
    pub s_max: Option<i64>,
    pub validate_with_oracle: bool,
    pub export_model: Option<PathBuf>,
}

#[derive(Serialize)]
struct OracleCell {
    v_top: Q,
    v_bot: Q,
    agrees: Option<bool>,
}

#[derive(Serialize)]
struct VRow {
    s: i64,
    v: i64,
    v_top: Option<Q>,
    v_bot: Option<Q>,
    oracle: Option<OracleCell>,
}

#[derive(Serialize)]
struct VTable {
    spec: CompositeKnotSpec,
    invariants: LinkInvariants,
    rows: Vec<VRow>,
}

pub fn cmd_vtable(args: VtableArgs, json: bool) -> Result<u8> {
    let spec = CompositeKnotSpec {
        cusps: args.cusps,
        positive: args.positive,
        negative: args.negative,
        genus: args.genus,
    };
    for (&n, &c) in spec.positive.iter().chain(spec.negative.iter()) {
        if n < 1 || c < 1 {
            bail!("link entries need n >= 1 and count >= 1, got {n}:{c}");
        }
    }
    if spec.genus < 0 {
        bail!("genus must be nonnegative");
    }
    let inv = spec.invariants();
    let r = spec.counting_function();
    let reach = r.tail_offset() + inv.kappa_pos + inv.kappa_neg + spec.genus + 1;
    let (lo, hi) = (args.s_min.unwrap_or(-reach), args.s_max.unwrap_or(reach));
    let needs_model = args.validate_with_oracle || args.export_model.is_some();
    let full = if needs_model { Some(spec.full_model()?) } else { None };
    if let (Some(path), Some(model)) = (&args.export_model, &full) {
        std::fs::write(path, ComplexFile::from_model(model).to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    let mut rows = Vec::new();
    let mut mismatch = false;
    for s in lo..=hi {
        let formula = match v_top_bot_composite(&spec, s) {
            Ok(v) => Some(v),
            Err(ModelError::UnsupportedMixedCase(_)) if args.validate_with_oracle => None,
            Err(ModelError::UnsupportedMixedCase(nu)) => bail!(
                "no closed formula for a negative delta with {nu} cusps; rerun with --validate-with-oracle \
                 to compute from the chain model, or --export-model and `cusp-floer oracle`"
            ),
            Err(e) => return Err(e.into()),
        };
        let oracle = match &full {
            Some(model) if args.validate_with_oracle => {
                let (t, b) = v_top_bot_half_level(&model.complex, &model.actions, 2 * s)?;
                let agrees = formula.map(|f| f == (t, b));
                mismatch |= agrees == Some(false);
                Some(OracleCell { v_top: t, v_bot: b, agrees })
            }
            _ => None,
        };
        rows.push(VRow { s, v: r.v(s), v_top: formula.map(|f| f.0), v_bot: formula.map(|f| f.1), oracle });
    }
    if json {
        print_json(&VTable { spec, invariants: inv, rows })?;
    } else {
        outln!("{}, genus {}", render_invariants(&inv), spec.genus);
        let opt = |q: Option<Q>| q.map_or("-".to_string(), |q| q.to_string());
        out!("{:>5} {:>6} {:>8} {:>8}", "s", "V_s(K)", "V^top", "V^bot");
        if args.validate_with_oracle {
            out!(" {:>10} {:>10}  check", "oracle top", "oracle bot");
        }
        outln!("");
        for row in &rows {
            out!("{:>5} {:>6} {:>8} {:>8}", row.s, row.v, opt(row.v_top), opt(row.v_bot));
            if let Some(o) = &row.oracle {
                let flag = match o.agrees {
                    Some(true) => "validated",
                    Some(false) => "MISMATCH",
                    None => "oracle only",
                };
                out!(" {:>10} {:>10}  {}", o.v_top.to_string(), o.v_bot.to_string(), flag);
            }
            outln!("");
        }
    }
    Ok(if mismatch { EXIT_ERROR } else { EXIT_CONSISTENT })
}

// ---------- oracle ----------

#[derive(Serialize)]
struct Stats {
    free_rank: usize,
    torsion_summands: usize,
}

#[derive(Serialize)]
struct OracleRow {
    s: Q,
    v: Option<Q>,
    v_top: Option<Q>,
    v_bot: Option<Q>,
    stats: Option<Stats>,
}

#[derive(Serialize)]
struct OracleOutput {
    generators: usize,
    actions: usize,
    rows: Vec<OracleRow>,
}

/// Parses `n` or `n/2`, returning twice the value.
pub fn parse_half(text: &str) -> Result<i64, String> {
    let text = text.trim();
    let bad = || format!("expected an integer or a half-integer p/2, got {text:?}");
    match text.split_once('/') {
        None => text.parse::<i64>().map(|n| 2 * n).map_err(|_| bad()),
        Some((num, "2")) => num.trim().parse::<i64>().map_err(|_| bad()),
        Some(_) => Err(bad()),
    }
}

pub fn cmd_oracle(path: &Path, levels2: &[i64], stats: bool, json: bool) -> Result<u8> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let model = ComplexFile::parse(&text)?.to_model()?;
    let c = &model.complex;
    // Alexander levels 2·(w - z)/4 are all integral or all half-integral.
    if let Some(g) = c.gens().first() {
        let half = (g.w - g.z).rem_euclid(4) == 2;
        if let Some(&bad) = levels2.iter().find(|&&s2| (s2.rem_euclid(2) == 1) != half) {
            bail!(
                "the complex has {} Alexander levels, so s = {} is not a level of it",
                if half { "half-integral" } else { "integral" },
                Q::new(bad, 2)
            );
        }
    }
    let mut rows = Vec::new();
    for &s2 in levels2 {
        let (t, b) = v_top_bot_half_level(c, &model.actions, s2)?;
        let stats = if stats {
            let (shifted, s) = if s2 % 2 == 0 { (c.clone(), s2 / 2) } else { (c.shift(1, -1), (s2 + 1) / 2) };
            let h = graded_homology(&a_s_subcomplex(&shifted, s)?);
            Some(Stats { free_rank: h.free.len(), torsion_summands: h.torsion.len() })
        } else {
            None
        };
        let s = Q::new(s2, 2);
        rows.push(if model.actions.is_empty() {
            OracleRow { s, v: Some(t), v_top: None, v_bot: None, stats }
        } else {
            OracleRow { s, v: None, v_top: Some(t), v_bot: Some(b), stats }
        });
    }
    if json {
        print_json(&OracleOutput { generators: c.len(), actions: model.actions.len(), rows })?;
    } else {
        outln!("{} generators, {} action(s)", c.len(), model.actions.len());
        for row in rows {
            let mut line = match (row.v, row.v_top, row.v_bot) {
                (Some(v), _, _) => format!("s = {}: V_s = {v}", row.s),
                (_, Some(t), Some(b)) => format!("s = {}: V^top = {t}, V^bot = {b}", row.s),
                _ => unreachable!("one of the two shapes is always filled"),
            };
            if let Some(st) = row.stats {
                line += &format!(" (free rank {}, {} torsion summand(s))", st.free_rank, st.torsion_summands);
            }
            outln!("{line}");
        }
    }
    Ok(EXIT_CONSISTENT)
}
