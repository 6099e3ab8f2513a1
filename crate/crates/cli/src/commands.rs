//! The five subcommands.

use fracosc::fraccalc::{
    convergence_study, duality_check, hamilton_residual, j_identities_series, residual_eq2, residual_eq3, residual_eq4,
    Convergence,
};
use fracosc::oscillations::{decompose as split, e_alpha, i_alpha};
use fracosc::subordination::McPlan;
use fracosc::zeros::find_zeros;
use fracosc::{Kind, OscParams};
use serde_json::json;

use crate::args::{DecomposeArgs, Format, GridArgs, KindArg, McArgs, TableArgs, VerifyArgs, ZerosArgs};
use crate::output::{to_json, Cell, Table};
use crate::{parallel, CliError, Outcome};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_alpha(alpha: f64, lo: f64, lo_open: bool, hi: f64, hi_open: bool) -> Result<(), CliError> {
    let above = if lo_open { alpha > lo } else { alpha >= lo };
    let below = if hi_open { alpha < hi } else { alpha <= hi };
    if above && below {
        return Ok(());
    }
    let (l, r) = (if lo_open { '(' } else { '[' }, if hi_open { ')' } else { ']' });
    Err(usage(format!("--alpha must lie in {l}{lo}, {hi}{r}")))
}

fn check_positive(name: &str, x: f64) -> Result<(), CliError> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(usage(format!("{name} must be positive and finite")))
    }
}

fn time_grid(g: &GridArgs, default_t_max: f64) -> Result<Vec<f64>, CliError> {
    let t_max = g.t_max.unwrap_or(default_t_max);
    if !(g.t_min >= 0.0 && g.t_min < t_max && t_max.is_finite()) {
        return Err(usage("need 0 <= --t-min < --t-max"));
    }
    if g.n_points < 2 {
        return Err(usage("--n-points must be at least 2"));
    }
    let span = t_max - g.t_min;
    let last = (g.n_points - 1) as f64;
    Ok((0..g.n_points).map(|k| g.t_min + span * (k as f64 / last)).collect())
}

fn render(format: Format, table: &Table, meta: serde_json::Value) -> Result<String, CliError> {
    match format {
        Format::Csv => Ok(table.to_csv()),
        Format::Json => {
            let mut doc = meta;
            doc["columns"] = json!(table.columns);
            doc["rows"] = json!(table.rows);
            to_json(&doc)
        }
    }
}

fn done(document: String) -> Result<Outcome, CliError> {
    Ok(Outcome {
        document,
        success: true,
    })
}

pub fn table(a: &TableArgs) -> Result<Outcome, CliError> {
    check_alpha(a.alpha, 1.0, false, 2.0, false)?;
    check_positive("--omega", a.omega)?;
    let grid = time_grid(&a.grid, 10.0)?;
    let p = OscParams::new(a.alpha, a.omega, 1.0, 1.0)?;
    let mut t = Table::new(vec!["t", "e_alpha", "i_alpha"]);
    for &tk in &grid {
        let e = e_alpha(&p, tk)?.value;
        let i = i_alpha(&p, tk)?.value;
        t.push(vec![Cell::Num(tk), Cell::Num(e), Cell::Num(i)])?;
    }
    let meta = json!({"command": "table", "alpha": a.alpha, "omega": a.omega});
    done(render(a.out.format.unwrap_or(Format::Csv), &t, meta)?)
}

fn kinds(k: KindArg) -> Vec<Kind> {
    match k {
        KindArg::E => vec![Kind::E],
        KindArg::I => vec![Kind::I],
        KindArg::Both => vec![Kind::E, Kind::I],
    }
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::E => "e",
        Kind::I => "i",
    }
}

pub fn decompose(a: &DecomposeArgs) -> Result<Outcome, CliError> {
    check_alpha(a.alpha, 1.0, true, 2.0, true)?;
    let grid = time_grid(&a.grid, 25.0)?;
    let p = OscParams::unit(a.alpha)?;
    let kinds = kinds(a.kind);
    let with_kind = kinds.len() > 1;
    let mut columns = vec!["t", "total", "branch_cut", "residue"];
    if with_kind {
        columns.insert(0, "kind");
    }
    let mut t = Table::new(columns);
    for &kind in &kinds {
        for &tk in &grid {
            let total = match kind {
                Kind::E => e_alpha(&p, tk)?,
                Kind::I => i_alpha(&p, tk)?,
            };
            let (cut, res) = split(kind, &p, tk)?;
            let mut row = vec![
                Cell::Num(tk),
                Cell::Num(total.value),
                Cell::Num(cut.value),
                Cell::Num(res.value),
            ];
            if with_kind {
                row.insert(0, Cell::Text(kind_name(kind).to_string()));
            }
            t.push(row)?;
        }
    }
    let meta = json!({"command": "decompose", "alpha": a.alpha});
    done(render(a.out.format.unwrap_or(Format::Csv), &t, meta)?)
}

pub fn zeros(a: &ZerosArgs) -> Result<Outcome, CliError> {
    check_alpha(a.alpha, 1.0, true, 2.0, true)?;
    check_positive("--refine-tol", a.refine_tol)?;
    let kind = match a.kind {
        KindArg::E => Kind::E,
        KindArg::I => Kind::I,
        KindArg::Both => return Err(usage("--kind must be e or i")),
    };
    let r = find_zeros(kind, a.alpha, a.refine_tol)?;
    let doc = match a.out.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut t = Table::new(vec!["index", "t"]);
            for (k, &z) in r.zeros.iter().enumerate() {
                t.push(vec![Cell::Int(k as u64 + 1), Cell::Num(z)])?;
            }
            t.to_csv()
        }
        Format::Json => {
            let c = &r.certificate;
            to_json(&json!({
                "kind": kind_name(kind),
                "alpha": r.alpha,
                "count": r.count(),
                "zeros": r.zeros,
                "zero_at_origin": r.zero_at_origin,
                "scan_points": r.scan_points,
                "scan_step": r.scan_step,
                "refine_tol": r.refine_tol,
                "t_max": r.t_max,
                "certificate": {
                    "holds": c.holds(),
                    "tail_at_t_max": c.tail_at_t_max,
                    "envelope_at_t_max": c.envelope_at_t_max,
                    "tail_at_2t_max": c.tail_at_2t_max,
                    "envelope_at_2t_max": c.envelope_at_2t_max,
                },
            }))?
        }
    };
    done(doc)
}

/// One convergence line of the verification report.
fn convergence_json(c: &Convergence, band: f64) -> serde_json::Value {
    json!({
        "check": c.fine.label,
        "sup_norm_n": c.coarse.sup_norm,
        "sup_norm_2n": c.fine.sup_norm,
        "l2_norm_n": c.coarse.l2_norm,
        "l2_norm_2n": c.fine.l2_norm,
        "window_start": c.fine.window_start,
        "measured_order": c.measured_order(),
        "expected_order": c.fine.expected_order,
        "pass": c.within_band(band),
    })
}

pub fn verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    check_alpha(a.alpha, 1.0, false, 2.0, false)?;
    check_positive("--omega", a.omega)?;
    check_positive("--mass", a.mass)?;
    check_positive("--horizon", a.horizon)?;
    check_positive("--band", a.band)?;
    if a.n < 64 {
        return Err(usage("--n must be at least 64"));
    }
    let (alpha, h) = (a.alpha, a.horizon);
    let mut studies: Vec<Convergence> = Vec::new();
    studies.extend(convergence_study(a.n, |n| Ok([residual_eq2(alpha, h, n)?]))?);
    if alpha > 1.0 {
        studies.extend(convergence_study(a.n, |n| Ok([residual_eq3(Kind::E, alpha, h, n)?]))?);
    }
    if alpha == 2.0 {
        studies.extend(convergence_study(a.n, |n| Ok([residual_eq3(Kind::I, alpha, h, n)?]))?);
    }
    studies.extend(convergence_study(a.n, |n| Ok([residual_eq4(alpha, h, n)?]))?);
    studies.extend(convergence_study(a.n, |n| duality_check(alpha, a.omega, h, n))?);
    let p = OscParams::new(alpha, a.omega, a.mass, a.q0)?;
    studies.extend(convergence_study(a.n, |n| hamilton_residual(&p, h, n))?);

    let dev = j_identities_series(alpha, a.omega, h, 201)?;
    let series: Vec<(&str, f64)> = vec![("j_e_series", dev[0]), ("j_i_series", dev[1])];

    let pass = studies.iter().all(|c| c.within_band(a.band)) && series.iter().all(|&(_, d)| d <= a.series_tol);
    let doc = match a.out.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&json!({
            "alpha": alpha,
            "omega": a.omega,
            "n": a.n,
            "horizon": h,
            "band": a.band,
            "pass": pass,
            "convergence": studies.iter().map(|c| convergence_json(c, a.band)).collect::<Vec<_>>(),
            "series": series.iter().map(|&(label, d)| json!({
                "check": label, "max_deviation": d, "tol": a.series_tol, "pass": d <= a.series_tol,
            })).collect::<Vec<_>>(),
        }))?,
        Format::Csv => {
            let mut t = Table::new(vec![
                "check",
                "sup_norm_n",
                "sup_norm_2n",
                "measured_order",
                "expected_order",
                "pass",
            ]);
            for c in &studies {
                t.push(vec![
                    Cell::Text(c.fine.label.to_string()),
                    Cell::Num(c.coarse.sup_norm),
                    Cell::Num(c.fine.sup_norm),
                    Cell::Num(c.measured_order()),
                    Cell::Num(c.fine.expected_order),
                    Cell::Text(c.within_band(a.band).to_string()),
                ])?;
            }
            for &(label, d) in &series {
                t.push(vec![
                    Cell::Text(label.to_string()),
                    Cell::Num(d),
                    Cell::Num(d),
                    Cell::Text(String::new()),
                    Cell::Text(String::new()),
                    Cell::Text((d <= a.series_tol).to_string()),
                ])?;
            }
            t.to_csv()
        }
    };
    Ok(Outcome {
        document: doc,
        success: pass,
    })
}

pub fn mc(a: &McArgs, threads: usize) -> Result<Outcome, CliError> {
    check_alpha(a.alpha, 1.0, false, 2.0, true)?;
    check_positive("--omega", a.omega)?;
    if a.n_paths < fracosc::subordination::MIN_PATHS {
        return Err(usage("--n-paths must be at least 100"));
    }
    let grid = time_grid(&a.grid, 10.0)?;
    let p = OscParams::new(a.alpha, a.omega, 1.0, 1.0)?;
    let plan = McPlan::new(&p, &grid, a.n_paths, a.seed)?;
    let est = parallel::run_plan(&plan, threads);
    let mut t = Table::new(vec!["t", "a_hat", "a_std_err", "b_hat", "b_std_err"]);
    for (k, &tk) in est.t_grid.iter().enumerate() {
        t.push(vec![
            Cell::Num(tk),
            Cell::Num(est.a_hat[k]),
            Cell::Num(est.a_std_err[k]),
            Cell::Num(est.b_hat[k]),
            Cell::Num(est.b_std_err[k]),
        ])?;
    }
    let meta = json!({
        "command": "mc", "alpha": a.alpha, "omega": a.omega,
        "n_paths": a.n_paths, "seed": a.seed, "tau_step": plan.tau_step,
    });
    done(render(a.out.format.unwrap_or(Format::Csv), &t, meta)?)
}
