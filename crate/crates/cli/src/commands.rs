use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use xns9_core::cartan::verify_groups;
use xns9_core::covering::{verify_covering, BasePoint, BranchingFigure, Fiber};
use xns9_core::ecurve::{ap_table, invariants, ApRecord, WeierstrassCurve};
use xns9_core::exactalg::Extended;
use xns9_core::heegner::{class_number, matched_points, reduced_forms, IntegralPoint};
use xns9_core::param::{build_tower, fiber_checks, verify_section4};
use xns9_core::thue::{mod9_obstruction, solve_bounded_parallel, BinaryCubicForm, ThueSolution};
use xns9_core::{Check, CheckReport, Result};

use crate::output::{big, factored, rational, table, Output};
use crate::reference;

/// Discriminant of the quadratic field whose inert primes are checked mod 9.
pub const INERT_DISCRIMINANT: i64 = -3511;

pub fn groups() -> Result<Output> {
    Ok(Output::from_report(verify_groups()?))
}

fn fiber_text(f: &Fiber) -> String {
    let inner: Vec<String> = f.indices.iter().map(ToString::to_string).collect();
    format!("{}:{{{}}}", f.outer_index, inner.join(","))
}

fn figure_json(figure: &BranchingFigure) -> Value {
    let mut tree = serde_json::Map::new();
    for base in BasePoint::ALL {
        let mut per = serde_json::Map::new();
        for c in figure.coverings.iter().filter(|c| c.base == base) {
            per.insert(
                c.covering.to_string(),
                json!({ "source": c.source, "target": c.target, "fibers": c.fibers }),
            );
        }
        tree.insert(base.label().to_string(), Value::Object(per));
    }
    let curves: serde_json::Map<String, Value> =
        figure.curves.iter().map(|(name, p)| (name.to_string(), json!(p))).collect();
    json!({ "base_points": tree, "curves": curves })
}

fn figure_text(figure: &BranchingFigure) -> String {
    let mut out = String::from("branching figure (outer index:{relative indices})\n");
    for base in BasePoint::ALL {
        out += &format!("  over {}\n", base.label());
        for c in figure.coverings.iter().filter(|c| c.base == base) {
            let fibers: Vec<String> = c.fibers.iter().map(fiber_text).collect();
            out += &format!("    {} {} -> {}: {}\n", c.covering, c.source, c.target, fibers.join(" "));
        }
    }
    for (name, p) in &figure.curves {
        out += &format!(
            "  {name}: degree {}, cusp widths {:?}, e2 = {}, e3 = {}, genus {}\n",
            p.degree, p.cusp_widths, p.e2, p.e3, p.genus
        );
    }
    out
}

pub fn covering() -> Result<Output> {
    let (report, figure) = verify_covering()?;
    Ok(Output {
        text: format!("{report}\n{}", figure_text(&figure)),
        passed: report.passed(),
        json: json!({ "checks": report, "figure": figure_json(&figure) }),
    })
}

pub fn param() -> Result<Output> {
    let tower = build_tower()?;
    Ok(Output::from_reports(vec![verify_section4()?, fiber_checks(&tower)?]))
}

pub struct ThueRun {
    pub solutions: Vec<ThueSolution>,
    pub obstruction: CheckReport,
}

pub fn thue_run(targets: &[i64], bound: i64) -> Result<ThueRun> {
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let solutions = solve_bounded_parallel(&BinaryCubicForm::cusp_form(), targets, bound, workers)?;
    Ok(ThueRun { solutions, obstruction: mod9_obstruction() })
}

pub fn thue_text(run: &ThueRun) -> String {
    let rows: Vec<Vec<String>> =
        run.solutions.iter().map(|s| vec![s.m.to_string(), s.n.to_string(), s.value.to_string()]).collect();
    table(&["m", "n", "value"], &rows)
}

pub fn thue_json(run: &ThueRun) -> Value {
    json!(run.solutions)
}

pub fn point_json(p: &IntegralPoint) -> Value {
    json!({
        "m": p.m,
        "n": p.n,
        "form_value": p.form_value,
        "t": big(&p.t),
        "j": big(&p.j),
        "j_factored": factored(p.j_is_negative(), &p.j_factorization()),
        "discriminant": p.matched_discriminant,
    })
}

pub fn points_text(points: &[IntegralPoint]) -> String {
    let rows: Vec<Vec<String>> = points
        .iter()
        .map(|p| {
            vec![
                format!("({},{})", p.m, p.n),
                factored(p.j_is_negative(), &p.j_factorization()),
                p.matched_discriminant.map_or("none (non-CM)".to_string(), |d| d.to_string()),
            ]
        })
        .collect();
    table(&["integral solution (m,n)", "j-invariant", "discriminant d"], &rows)
}

pub fn points(bound: i64, digits: u32) -> Result<Output> {
    let pts = matched_points(bound, digits)?;
    Ok(Output {
        text: points_text(&pts),
        json: json!({
            "bound": bound,
            "digits": digits,
            "points": pts.iter().map(point_json).collect::<Vec<_>>(),
        }),
        passed: true,
    })
}

pub struct ApRun {
    pub curve: WeierstrassCurve,
    pub discriminant: BigInt,
    pub j: BigRational,
    pub records: Vec<ApRecord>,
    pub checks: CheckReport,
}

pub fn ap_run(pmax: u64, curve: Option<WeierstrassCurve>) -> Result<ApRun> {
    let default = curve.is_none();
    let curve = curve.unwrap_or_else(WeierstrassCurve::non_cm_curve);
    let inv = invariants(&curve)?;
    let records = ap_table(&curve, pmax, INERT_DISCRIMINANT)?;
    let mut checks = CheckReport::new("a_p table");
    let over: Vec<u64> = records.iter().filter(|r| r.good && !r.within_hasse_bound()).map(|r| r.p).collect();
    checks.push(Check::new(
        "Hasse bound",
        over.is_empty(),
        format!("|a_p| <= 2 sqrt(p) for all good p <= {pmax}; violations: {over:?}"),
    ));
    if default {
        let inert: Vec<&ApRecord> = records.iter().filter(|r| r.good && r.inert).collect();
        let bad: Vec<u64> = inert.iter().filter(|r| r.a_p.rem_euclid(9) != 0).map(|r| r.p).collect();
        checks.push(Check::new(
            "inert primes: a_p = 0 mod 9",
            bad.is_empty(),
            format!(
                "{} good primes inert in Q(sqrt({INERT_DISCRIMINANT})); exceptions: {bad:?}",
                inert.len()
            ),
        ));
    }
    Ok(ApRun { curve, discriminant: inv.discriminant, j: inv.j, records, checks })
}

pub fn ap_text(run: &ApRun) -> String {
    let good: Vec<&ApRecord> = run.records.iter().filter(|r| r.good).collect();
    let bad: Vec<String> = run.records.iter().filter(|r| !r.good).map(|r| r.p.to_string()).collect();
    let cells: Vec<(String, String)> = good.iter().map(|r| (r.p.to_string(), r.a_p.to_string())).collect();
    let widths: Vec<usize> = cells.iter().map(|(p, a)| p.len().max(a.len())).collect();
    let row = |label: &str, pick: &dyn Fn(&(String, String)) -> String| {
        let body: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{:>w$}", pick(c), w = *w)).collect();
        format!("{label:<4}| {}\n", body.join(" "))
    };
    let coeffs: Vec<String> = run.curve.coefficients().iter().map(|a| a.to_string()).collect();
    let mut out = format!("curve [a1,a2,a3,a4,a6] = [{}]\n", coeffs.join(","));
    out += &format!("discriminant = {}\nj = {}\n", run.discriminant, run.j);
    out += &row("p", &|c| c.0.clone());
    out += &row("a_p", &|c| c.1.clone());
    if !bad.is_empty() {
        out += &format!("bad primes (omitted): {}\n", bad.join(", "));
    }
    out
}

pub fn ap_json(run: &ApRun) -> Value {
    json!({
        "curve": run.curve.coefficients().iter().map(|a| big(a)).collect::<Vec<_>>(),
        "discriminant": big(&run.discriminant),
        "j": rational(&run.j),
        "records": run.records,
        "checks": run.checks,
    })
}

pub fn ap(pmax: u64, curve: Option<WeierstrassCurve>) -> Result<Output> {
    let run = ap_run(pmax, curve)?;
    Ok(Output {
        text: format!("{}\n{}", ap_text(&run), run.checks),
        json: ap_json(&run),
        passed: run.checks.passed(),
    })
}

pub fn classnum(d: i64) -> Result<Output> {
    let h = class_number(d)?;
    let forms = reduced_forms(d)?;
    Ok(Output {
        text: format!("{h}\n"),
        json: json!({ "d": d, "class_number": h, "forms": forms }),
        passed: true,
    })
}

fn extended_text(x: &Extended<BigRational>) -> String {
    match x {
        Extended::Finite(q) => q.to_string(),
        Extended::Infinity => "infinity".to_string(),
    }
}

fn extended_json(x: &Extended<BigRational>) -> Value {
    match x {
        Extended::Finite(q) => rational(q),
        Extended::Infinity => Value::Null,
    }
}

pub fn eval_t(y: &Extended<BigRational>) -> Result<Output> {
    let (t, j) = build_tower()?.eval(y);
    Ok(Output {
        text: format!("y = {}\nt = {}\nj = {}\n", extended_text(y), extended_text(&t), extended_text(&j)),
        json: json!({ "y": extended_json(y), "t": extended_json(&t), "j": extended_json(&j) }),
        passed: true,
    })
}

fn pair_set(sols: &[ThueSolution], value: i64) -> BTreeSet<(i64, i64)> {
    sols.iter().filter(|s| s.value == value).map(|s| (s.m, s.n)).collect()
}

/// Computed values against the published tables and lists.
pub fn published_comparison(thue: &ThueRun, points: &[IntegralPoint], ap: &ApRun, h: u64) -> CheckReport {
    let mut report = CheckReport::new("comparison with published values");
    for (value, expected) in [(1, &reference::UNIT_SOLUTIONS[..]), (3, &reference::THREE_SOLUTIONS[..])] {
        let got = pair_set(&thue.solutions, value);
        let want: BTreeSet<(i64, i64)> = expected.iter().copied().collect();
        report.push(Check::new(
            format!("solutions of value {value}"),
            got == want,
            format!("computed {got:?}"),
        ));
    }
    report.push(Check::new(
        "number of integral points",
        points.len() == reference::INTEGRAL_POINTS.len(),
        format!("{} computed, {} published", points.len(), reference::INTEGRAL_POINTS.len()),
    ));
    for (k, ((m, n), negative, fac, d)) in reference::INTEGRAL_POINTS.iter().enumerate() {
        let published =
            format!("({m},{n}) {} {}", factored(*negative, fac), d.map_or("none".into(), |d| d.to_string()));
        let computed = points.get(k).map(|p| {
            format!(
                "({},{}) {} {}",
                p.m,
                p.n,
                factored(p.j_is_negative(), &p.j_factorization()),
                p.matched_discriminant.map_or("none".into(), |d| d.to_string())
            )
        });
        report.push(Check::new(
            format!("integral point row {}", k + 1),
            computed.as_deref() == Some(published.as_str()),
            format!("computed {}, published {published}", computed.unwrap_or_else(|| "missing".into())),
        ));
    }
    let good: Vec<(u64, i64)> =
        ap.records.iter().filter(|r| r.good && r.p < 100).map(|r| (r.p, r.a_p)).collect();
    let mismatches: Vec<String> = reference::AP_ROW
        .iter()
        .map(|&(p, a)| (p, a, good.iter().find(|g| g.0 == p).map(|g| g.1)))
        .filter(|&(_, a, got)| got != Some(a))
        .map(|(p, a, got)| format!("p={p}: {} vs {a}", got.map_or("missing".into(), |g| g.to_string())))
        .collect();
    report.push(Check::new(
        "a_p for good p < 100",
        mismatches.is_empty() && good.len() == reference::AP_ROW.len(),
        if mismatches.is_empty() {
            format!("{} values agree", good.len())
        } else {
            format!("{} of 24 differ (computed vs published): {}", mismatches.len(), mismatches.join(", "))
        },
    ));
    report.push(Check::new(
        "h(-3511)",
        h == reference::CLASS_NUMBER_3511,
        format!("computed {h}, published {}", reference::CLASS_NUMBER_3511),
    ));
    report
}

pub struct ReportParams {
    pub bound: i64,
    pub digits: u32,
    pub pmax: u64,
}

fn join<T>(h: std::thread::ScopedJoinHandle<'_, T>) -> T {
    h.join().unwrap_or_else(|e| std::panic::resume_unwind(e))
}

/// Every verification, computed concurrently and assembled in a fixed order.
pub fn report(params: &ReportParams) -> Result<Output> {
    let ReportParams { bound, digits, pmax } = *params;
    let (groups, covering, param, thue, points, ap, h) = std::thread::scope(|s| {
        let groups = s.spawn(groups);
        let covering = s.spawn(covering);
        let param = s.spawn(param);
        let thue = s.spawn(move || thue_run(&[1, -1, 3, -3], bound));
        let points = s.spawn(move || matched_points(bound, digits));
        let ap = s.spawn(move || ap_run(pmax, None));
        let h = s.spawn(|| class_number(-3511));
        (join(groups), join(covering), join(param), join(thue), join(points), join(ap), join(h))
    });
    let (groups, covering, param, thue, points, ap, h) =
        (groups?, covering?, param?, thue?, points?, ap?, h?);
    let comparison = published_comparison(&thue, &points, &ap, h);

    let sections = [
        ("groups", &groups.passed),
        ("covering", &covering.passed),
        ("param", &param.passed),
        ("thue", &thue.obstruction.passed()),
        ("ap", &ap.checks.passed()),
        ("published", &comparison.passed()),
    ];
    let passed = sections.iter().all(|(_, p)| **p);
    let failed: Vec<&str> = sections.iter().filter(|(_, p)| !**p).map(|(n, _)| *n).collect();

    let mut text = String::new();
    text += &groups.text;
    text += "\n";
    text += &covering.text;
    text += "\n";
    text += &param.text;
    text += "\n";
    text += &format!("== solutions of m^3 - 3mn^2 + n^3 in {{1,-1,3,-3}}, |m|,|n| <= {bound} ==\n");
    text += &thue_text(&thue);
    text += "\n";
    text += &thue.obstruction.to_string();
    text += "\n";
    text += &format!("== integral points (bound {bound}, {digits} digits) ==\n");
    text += &points_text(&points);
    text += "\n";
    text += &format!("== a_p of the non-CM curve, p <= {pmax} ==\n");
    text += &ap_text(&ap);
    text += "\n";
    text += &ap.checks.to_string();
    text += "\n";
    text += &format!("== class number ==\nh(-3511) = {h}\n\n");
    text += &comparison.to_string();
    text += "\n";
    text += &if passed {
        "overall: PASS\n".to_string()
    } else {
        format!("overall: FAIL ({})\n", failed.join(", "))
    };

    let json = json!({
        "parameters": { "bound": bound, "digits": digits, "pmax": pmax },
        "groups": groups.json,
        "covering": covering.json,
        "param": param.json,
        "thue": { "solutions": thue_json(&thue), "obstruction": thue.obstruction },
        "points": points.iter().map(point_json).collect::<Vec<_>>(),
        "ap": ap_json(&ap),
        "class_number_3511": h,
        "published": comparison,
        "passed": passed,
    });
    Ok(Output { text, json, passed })
}
