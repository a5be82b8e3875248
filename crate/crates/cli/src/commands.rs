use std::collections::BTreeMap;

use anyhow::{bail, Result};
use rayon::prelude::*;
use sally_core::conjectures::{required_semigroups, scan_with, ConjectureReport};
use sally_core::fibers::{FiberChecker, Generation};
use sally_core::formulas::{
    betti_closed_sequence, cms_bound, frobenius_m, frobenius_mn, is_almost_symmetric_closed, is_symmetric_closed,
    pseudo_frobenius_m, pseudo_frobenius_mn, type_m, type_mn, Family,
};
use sally_core::hochster::{default_lambda_max, graded_betti, tail_violation};
use sally_core::sallymatrices::{claimed_generators, claimed_generators_23, claimed_generators_34};
use sally_core::{BettiTable, NumericalSemigroup, SallyParams};
use serde_json::{json, Map, Value};

use crate::report::{aligned, render_csv, render_json, Format, Report, Row};

/// Rendered output plus whether every verified row matched.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

#[derive(Debug, Clone, Copy)]
pub enum Selection {
    One { m: u32, n: Option<u32> },
    AllM,
    AllMn,
}

#[derive(Debug, Clone, Copy)]
pub enum GensSelection {
    M(u32),
    AllM,
    Family23,
    Family34,
}

pub fn targets(es: &[u32], sel: Selection) -> Result<Vec<SallyParams>> {
    let mut out = Vec::new();
    for &e in es {
        match sel {
            Selection::One { m, n: None } => out.push(SallyParams::one(e, m)?),
            Selection::One { m, n: Some(n) } => out.push(SallyParams::two(e, m, n)?),
            Selection::AllM => {
                SallyParams::one(e, 1)?;
                for m in 1..e {
                    out.push(SallyParams::one(e, m)?);
                }
            }
            Selection::AllMn => {
                SallyParams::two(e, 1, 2)?;
                for m in 1..e {
                    for n in m + 1..e {
                        out.push(SallyParams::two(e, m, n)?);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn list<T: Into<Value> + Copy>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|&x| x.into()).collect())
}

fn base_row(p: &SallyParams, s: &NumericalSemigroup) -> Row {
    let mut row = Row::new();
    row.insert("e".into(), json!(p.e()));
    row.insert("m".into(), json!(p.m()));
    row.insert("n".into(), p.n().map_or(Value::Null, |n| json!(n)));
    row.insert("generators".into(), list(s.generators()));
    row
}

pub fn invariants(params: Map<String, Value>, targets: &[SallyParams], format: Format) -> Result<Outcome> {
    let rows: Vec<Result<Row>> = targets
        .par_iter()
        .map(|p| {
            let s = p.semigroup();
            let (e, m) = (p.e(), p.m());
            let (f, t, pf) = match p.n() {
                None => (frobenius_m(e, m)?, type_m(e, m)?, pseudo_frobenius_m(e, m)?),
                Some(n) => (frobenius_mn(e, m, n)?, type_mn(e, m, n)?, pseudo_frobenius_mn(e, m, n)?),
            };
            let f_def = s.frobenius()?;
            let t_def = s.cm_type()? as u64;
            let pf_def = s.pseudo_frobenius()?;
            let sym = s.is_symmetric()?;
            let matches = f_def == f.value && t_def == t.value && pf_def == pf && sym == is_symmetric_closed(p);
            let mut row = base_row(p, &s);
            row.insert("F_def".into(), json!(f_def));
            row.insert("F_formula".into(), json!(f.value));
            row.insert("F_case".into(), json!(f.case));
            row.insert("type_def".into(), json!(t_def));
            row.insert("type_formula".into(), json!(t.value));
            row.insert("type_case".into(), json!(t.case));
            row.insert("PF".into(), list(&pf_def));
            row.insert("PF_formula".into(), list(&pf));
            row.insert("symmetric".into(), json!(sym));
            row.insert("symmetric_formula".into(), json!(is_symmetric_closed(p)));
            row.insert("almost_symmetric".into(), json!(s.is_almost_symmetric()?));
            row.insert("almost_symmetric_formula".into(), json!(is_almost_symmetric_closed(p)));
            row.insert("match".into(), json!(matches));
            Ok(row)
        })
        .collect();
    let mut report = Report::new("invariants", params);
    report.rows = rows.into_iter().collect::<Result<_>>()?;
    let ok = report.rows.iter().all(|r| r["match"] == json!(true));
    Ok(Outcome { text: report.render(format)?, ok })
}

/// Betti table with the degree columns computed in parallel.
pub fn parallel_table(s: &NumericalSemigroup, lambda_max: u64) -> BettiTable {
    let columns: Vec<(u64, Vec<u64>)> = (0..=lambda_max)
        .into_par_iter()
        .filter(|&l| s.contains_u64(l))
        .map(|l| (l, graded_betti(s, l)))
        .collect();
    BettiTable::from_columns(s.embedding_dimension(), lambda_max, columns)
}

fn graded_block(p: &SallyParams, t: &BettiTable) -> String {
    let width = t.totals().len();
    let header: Vec<String> = std::iter::once("lambda".to_string()).chain((0..width).map(|i| format!("b{i}"))).collect();
    let rows: Vec<Vec<String>> = t
        .degrees()
        .into_iter()
        .map(|l| std::iter::once(l.to_string()).chain((0..width).map(|i| t.get(i, l).to_string())).collect())
        .collect();
    format!("\n{p} graded Betti numbers\n{}", aligned(&header, &rows))
}

pub fn betti(
    params: Map<String, Value>,
    targets: &[SallyParams],
    lambda_max: Option<u64>,
    format: Format,
) -> Result<Outcome> {
    let computed: Vec<(Row, String)> = targets
        .par_iter()
        .map(|p| {
            let s = p.semigroup();
            let lmax = lambda_max.unwrap_or_else(|| default_lambda_max(&s));
            let t = parallel_table(&s, lmax);
            let family = Family::of(p);
            let closed = family.map(|f| betti_closed_sequence(f, p.e())).transpose()?;
            let totals = t.totals();
            let cm_type = s.cm_type()? as u64;
            let cms: Vec<u64> = (1..totals.len() as u64).map(|i| cms_bound(s.width(), i) as u64).collect();
            let cms_holds = totals.iter().skip(1).zip(&cms).all(|(b, c)| b <= c);
            let k_ok = t.k_polynomial_mismatch(&s).is_none();
            let tail_ok = tail_violation(&s, lmax).is_none();
            let last_is_type = totals.last().copied() == Some(cm_type);
            let symmetric = s.is_symmetric()?;
            let matches = closed.as_ref().map(|c| c.as_slice() == totals);
            let ok = matches != Some(false)
                && k_ok
                && tail_ok
                && last_is_type
                && t.is_palindromic() == symmetric
                && (family.is_none() || cms_holds);
            let mut row = base_row(p, &s);
            row.insert("lambda_max".into(), json!(lmax));
            row.insert("totals".into(), list(totals));
            row.insert("family".into(), family.map_or(Value::Null, |f| json!(f.name())));
            row.insert("closed_form".into(), closed.as_deref().map_or(Value::Null, list));
            row.insert("match".into(), matches.map_or(Value::Null, Value::Bool));
            row.insert("type".into(), json!(cm_type));
            row.insert("last_is_type".into(), json!(last_is_type));
            row.insert("symmetric".into(), json!(symmetric));
            row.insert("palindromic".into(), json!(t.is_palindromic()));
            row.insert("k_polynomial".into(), json!(k_ok));
            row.insert("tail_zero".into(), json!(tail_ok));
            row.insert("cms_bound".into(), list(&cms));
            row.insert("cms_holds".into(), json!(cms_holds));
            row.insert("ok".into(), json!(ok));
            let graded: Vec<Value> = t.entries().map(|((i, l), b)| json!([i, l, b])).collect();
            row.insert("graded".into(), Value::Array(graded));
            Ok((row, graded_block(p, &t)))
        })
        .collect::<Result<_>>()?;
    let mut report = Report::new("betti", params);
    report.table_hidden.push("graded");
    for (row, block) in computed {
        report.rows.push(row);
        report.table_appendix.push_str(&block);
    }
    let ok = report.rows.iter().all(|r| r["ok"] == json!(true));
    Ok(Outcome { text: report.render(format)?, ok })
}

pub fn verify_gens(params: Map<String, Value>, es: &[u32], sel: GensSelection, format: Format) -> Result<Outcome> {
    let mut jobs: Vec<(SallyParams, &'static str)> = Vec::new();
    for &e in es {
        match sel {
            GensSelection::M(m) => jobs.push((SallyParams::one(e, m)?, "A_m+B_m")),
            GensSelection::AllM => {
                SallyParams::one(e, 1)?;
                for m in 1..e {
                    jobs.push((SallyParams::one(e, m)?, "A_m+B_m"));
                }
            }
            GensSelection::Family23 => jobs.push((SallyParams::two(e, 2, 3)?, "A_{2,3}+B_{2,3}")),
            GensSelection::Family34 => jobs.push((SallyParams::two(e, 3, 4)?, "A_{3,4}+B_{3,4}")),
        }
    }
    let rows: Vec<Result<Row>> = jobs
        .par_iter()
        .map(|(p, matrices)| {
            let claimed = match p.n() {
                None => claimed_generators(p.e(), p.m())?,
                Some(3) => claimed_generators_23(p.e())?,
                Some(_) => claimed_generators_34(p.e())?,
            };
            let s = p.semigroup();
            let checker = FiberChecker::new(&s);
            let generation = checker.verify_generating_set(&claimed)?;
            let minimal = generation.generates() && checker.verify_minimality(&claimed)?;
            let mu: u64 = checker.first_betti().values().sum();
            let per_degree: Vec<Value> = checker
                .degree_comparison(&claimed)
                .iter()
                .map(|c| json!(format!("{}:{}/{}", c.degree, c.claimed, c.betti)))
                .collect();
            let mut row = base_row(p, &s);
            row.insert("matrices".into(), json!(matrices));
            row.insert("claimed".into(), json!(claimed.len()));
            row.insert("mu".into(), json!(mu));
            row.insert("generates".into(), json!(generation.generates()));
            row.insert(
                "witness".into(),
                match &generation {
                    Generation::Generates => Value::Null,
                    Generation::Disconnected { degree, pair } => json!(format!("{degree}: {} / {}", pair.0, pair.1)),
                },
            );
            row.insert("minimal".into(), json!(minimal));
            row.insert("per_degree".into(), Value::Array(per_degree));
            Ok(row)
        })
        .collect();
    let mut report = Report::new("verify-gens", params);
    report.rows = rows.into_iter().collect::<Result<_>>()?;
    let ok = report.rows.iter().all(|r| r["generates"] == json!(true) && r["minimal"] == json!(true));
    Ok(Outcome { text: report.render(format)?, ok })
}

/// All reports for the requested ids and multiplicities, with every needed
/// Betti sequence computed once.
pub fn scan_reports(ids: &[u32], es: &[u32], lambda_max: Option<u64>) -> Result<Vec<ConjectureReport>> {
    let mut needed: Vec<SallyParams> = Vec::new();
    for &e in es {
        for &id in ids {
            for p in required_semigroups(id, e)? {
                if !needed.contains(&p) {
                    needed.push(p);
                }
            }
        }
    }
    let totals: BTreeMap<SallyParams, Vec<u64>> = needed
        .par_iter()
        .map(|p| {
            let s = p.semigroup();
            let lmax = lambda_max.unwrap_or_else(|| default_lambda_max(&s));
            (*p, parallel_table(&s, lmax).totals().to_vec())
        })
        .collect();
    let mut out = Vec::new();
    for &e in es {
        for &id in ids {
            out.push(scan_with(id, e, |p| totals[p].clone())?);
        }
    }
    Ok(out)
}

fn case_rows(r: &ConjectureReport) -> Vec<Row> {
    r.cases
        .iter()
        .map(|c| {
            let mut row = Row::new();
            row.insert("conjecture".into(), json!(r.id));
            row.insert("e".into(), json!(r.e));
            row.insert("params".into(), json!(c.params));
            row.insert("j".into(), json!(c.j));
            row.insert("relation".into(), json!(c.relation));
            row.insert("lhs".into(), json!(c.lhs));
            row.insert("rhs".into(), json!(c.rhs));
            row.insert("verdict".into(), json!(c.verdict().as_str()));
            row
        })
        .collect()
}

fn report_row(r: &ConjectureReport) -> Row {
    let mut row = Row::new();
    row.insert("conjecture".into(), json!(r.id));
    row.insert("e".into(), json!(r.e));
    row.insert("holds".into(), json!(r.holds()));
    row.insert("fails".into(), json!(r.fails()));
    row.insert("inapplicable".into(), json!(r.inapplicable()));
    let cases = case_rows(r)
        .into_iter()
        .map(|mut c| {
            c.remove("conjecture");
            c.remove("e");
            Value::Object(c)
        })
        .collect();
    row.insert("cases".into(), Value::Array(cases));
    row
}

pub fn render_scan(params: &Map<String, Value>, reports: &[ConjectureReport], format: Format) -> Result<String> {
    match format {
        Format::Table => Ok(reports.iter().map(|r| r.to_string()).collect()),
        Format::Csv => {
            let rows: Vec<Row> = reports.iter().flat_map(case_rows).collect();
            if rows.is_empty() {
                return Ok("\"conjecture\",\"e\",\"params\",\"j\",\"relation\",\"lhs\",\"rhs\",\"verdict\"\n".into());
            }
            render_csv(&rows)
        }
        Format::Json => render_json("scan", params, &reports.iter().map(report_row).collect::<Vec<_>>()),
    }
}

pub fn scan_summary(reports: &[ConjectureReport]) -> String {
    reports
        .iter()
        .map(|r| {
            format!(
                "conjecture {} e={}: holds={} fails={} inapplicable={}\n",
                r.id,
                r.e,
                r.holds(),
                r.fails(),
                u8::from(r.inapplicable())
            )
        })
        .collect()
}

pub fn parse_conjecture(s: &str) -> Result<Vec<u32>> {
    if s == "all" {
        return Ok((1..=5).collect());
    }
    match s.parse::<u32>() {
        Ok(id @ 1..=5) => Ok(vec![id]),
        _ => bail!("conjecture must be 1, 2, 3, 4, 5 or all, got {s:?}"),
    }
}
