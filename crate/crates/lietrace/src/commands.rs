//! Computations behind each command, returning canonical JSON payloads.

use std::sync::Arc;

use lietrace_core::branch::{branch_minimize_with_cap, BranchProblem};
use lietrace_core::charring::{adjoint_character, orthogonal_roots, restrict_to_a1n, CharRing};
use lietrace_core::closedform::{
    fixed_subgroup, outer_orders, outer_reduction, short_root_min, trace_bounds, BoundSource,
    FixedSubgroup,
};
use lietrace_core::compactcert::{extremum_with_matrix, ExtremumOptions, ExtremumReport, Witness};
use lietrace_core::invder::{derivation_matrix, sigma_matrix};
use lietrace_core::poly::Poly;
use lietrace_core::rootdata::{corners, RootDatum};
use lietrace_core::su2asym::{limit_constant, su2_min, XFunction, XMethod};
use lietrace_core::Error;
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::format::{algebraic, algebraic_text, poly, rational};

pub fn datum(d: &RootDatum) -> Value {
    let form: Vec<Vec<Value>> = d
        .form_matrix()
        .iter()
        .map(|row| row.iter().map(rational).collect())
        .collect();
    let dims: Vec<String> = d.fundamental_dims().iter().map(|z| z.to_string()).collect();
    json!({
        "schema": "lietrace.datum.v1",
        "type": d.name(),
        "rank": d.rank(),
        "dim": d.dim(),
        "weyl_order": d.weyl_order().to_string(),
        "positive_roots": d.positive_roots().len(),
        "fundamental_group_order": d.fundamental_group_order(),
        "cartan": d.cartan(),
        "highest_root": d.highest_root(),
        "highest_short_root": d.highest_short_root(),
        "dual_permutation": d.dual_permutation(),
        "form": form,
        "fundamental_dims": dims,
    })
}

pub fn corner_table(d: &RootDatum, digits: u32) -> Result<Value, Error> {
    let rows: Vec<Value> = corners(d)?
        .iter()
        .map(|c| {
            let values: Vec<String> = c.values.iter().map(|v| v.render(digits)).collect();
            json!({
                "index": c.index,
                "kac": c.kac,
                "order_bound": c.order_bound,
                "point": c.point.iter().map(rational).collect::<Vec<_>>(),
                "values": values,
            })
        })
        .collect();
    Ok(json!({
        "schema": "lietrace.corners.v1",
        "type": d.name(),
        "corners": rows,
    }))
}

pub fn matrix(d: &RootDatum, sigma: bool, rank_cap: usize) -> Result<Value, Error> {
    let m = derivation_matrix(d, rank_cap)?;
    let m = if sigma { sigma_matrix(&m) } else { m };
    let entries: Vec<Vec<Value>> = m
        .entries
        .iter()
        .map(|row| row.iter().map(|p| poly(p, "f")).collect())
        .collect();
    Ok(json!({
        "schema": "lietrace.matrix.v1",
        "type": d.name(),
        "sigma": sigma,
        "entries": entries,
    }))
}

fn witness_json(rep: &ExtremumReport, w: &Witness, digits: u32) -> Value {
    let (kind, index) = match *w {
        Witness::Corner(i) => ("corner", rep.corners[i].index),
        Witness::Critical(i) => ("critical", i),
    };
    let coords = match *w {
        Witness::Corner(i) => rep.corners[i]
            .coords
            .iter()
            .map(|v| v.render(digits))
            .collect::<Vec<_>>(),
        Witness::Critical(i) => rep.critical[i]
            .point
            .coords
            .iter()
            .map(|c| algebraic_text(c, digits))
            .collect(),
    };
    json!({ "kind": kind, "index": index, "coords": coords })
}

pub fn extremum(
    d: &RootDatum,
    objective: &Poly,
    opts: &ExtremumOptions,
) -> Result<Value, Error> {
    let m = derivation_matrix(d, opts.rank_cap)?;
    let rep = extremum_with_matrix(&m, objective, opts)?;
    let digits = opts.digits;
    let corners: Vec<Value> = rep
        .corners
        .iter()
        .map(|c| {
            json!({
                "index": c.index,
                "coords": c.coords.iter().map(|v| v.render(digits)).collect::<Vec<_>>(),
                "value": algebraic(&c.value, digits),
            })
        })
        .collect();
    let critical: Vec<Value> = rep
        .critical
        .iter()
        .map(|c| {
            json!({
                "coords": c.point.coords.iter().map(|x| algebraic(x, digits)).collect::<Vec<_>>(),
                "value": algebraic(&c.value, digits),
                "is_corner": c.is_corner,
                "in_min_window": c.in_min_window,
                "in_max_window": c.in_max_window,
                "sigma_real": c.sigma_real,
                "compact": c.compact,
                "included": c.included(),
                "multiple": c.point.multiple,
            })
        })
        .collect();
    Ok(json!({
        "schema": "lietrace.extremum.v1",
        "type": d.name(),
        "objective": poly(objective, "f"),
        "window_enabled": rep.window_enabled,
        "corners": corners,
        "critical": critical,
        "minimum": {
            "value": algebraic(&rep.minimum.value, digits),
            "witness": witness_json(&rep, &rep.minimum.witness, digits),
        },
        "maximum": {
            "value": algebraic(&rep.maximum.value, digits),
            "witness": witness_json(&rep, &rep.maximum.witness, digits),
        },
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchRep {
    Adjoint,
    ShortRoot,
}

/// Restriction of the adjoint or highest-short-root character to `SL_2^n`.
pub fn branch_polynomial(d: &RootDatum, rep: BranchRep, orbit_cap: u128) -> Result<Poly, Error> {
    let arc = Arc::new(d.clone());
    let ch = match rep {
        BranchRep::Adjoint => adjoint_character(arc.clone()),
        BranchRep::ShortRoot => {
            let lambda = d.highest_short_root().ok_or_else(|| {
                Error::InvalidArgument(format!("{} has a single root length", d.name()))
            })?;
            CharRing::from_arc(arc.clone()).irreducible(lambda)?
        }
    };
    restrict_to_a1n(&ch, &orthogonal_roots(d), orbit_cap)
}

pub fn branch(
    source: &str,
    problem: &BranchProblem,
    pair_cap: usize,
    digits: u32,
) -> Result<Value, Error> {
    let m = branch_minimize_with_cap(problem, pair_cap)?;
    let pins: Vec<Value> = problem
        .pins
        .iter()
        .map(|(&i, &plus)| json!({ "var": i + 1, "value": if plus { 2 } else { -2 } }))
        .collect();
    Ok(json!({
        "schema": "lietrace.branch.v1",
        "source": source,
        "polynomial": poly(&problem.poly, "t"),
        "pins": pins,
        "value": algebraic(&m.value, digits),
        "witness": m.witness.iter().map(|x| algebraic(x, digits)).collect::<Vec<_>>(),
        "candidates": m.candidates,
    }))
}

fn source_name(s: BoundSource) -> &'static str {
    match s {
        BoundSource::MinusOne => "minus-one",
        BoundSource::Classified => "classified",
        BoundSource::Reduction => "reduction",
    }
}

fn families(max_rank: usize) -> Vec<(char, usize)> {
    let mut out = Vec::new();
    for k in ['A', 'B', 'C', 'D', 'E', 'F', 'G'] {
        for r in 1..=max_rank {
            if lietrace_core::rootdata::check_type(k, r).is_ok() {
                out.push((k, r));
            }
        }
    }
    out
}

pub fn table_simple(max_rank: usize) -> Result<Value, Error> {
    let mut rows = Vec::new();
    for (k, r) in families(max_rank) {
        for s in outer_orders(k, r)? {
            let b = trace_bounds(k, r, s)?;
            rows.push(json!({
                "type": format!("{k}{r}"),
                "s": s,
                "min": b.min,
                "max": b.max,
                "source": source_name(b.source),
            }));
        }
    }
    Ok(json!({ "schema": "lietrace.table.v1", "family": "simple", "rows": rows }))
}

pub fn table_reduction(max_rank: usize) -> Result<Value, Error> {
    let mut rows = Vec::new();
    for (k, r) in families(max_rank) {
        for s in outer_orders(k, r)? {
            if s == 1 {
                continue;
            }
            let (h, corr) = fixed_subgroup(k, r, s)?;
            let b = outer_reduction(k, r, s)?;
            let h_name = match h {
                FixedSubgroup::A1Power(m) => format!("A1^{m}"),
                FixedSubgroup::Simple(hk, hr) => format!("{hk}{hr}"),
            };
            rows.push(json!({
                "type": format!("{k}{r}"),
                "s": s,
                "subgroup": h_name,
                "correction": corr,
                "min": b.min,
                "max": b.max,
            }));
        }
    }
    Ok(json!({ "schema": "lietrace.table.v1", "family": "reduction", "rows": rows }))
}

/// Without a rank bound the rows are the four family formulas.
pub fn table_short_root(max_rank: Option<usize>) -> Result<Value, Error> {
    let rows: Vec<Value> = match max_rank {
        None => [
            ("B_n (n >= 2)", "1-2n", "2n+1"),
            ("C_n (n >= 2)", "1-n (n odd), -1-n (n even)", "2n^2-n-1"),
            ("F4", "-6", "26"),
            ("G2", "-2", "7"),
        ]
        .iter()
        .map(|(t, m, d)| json!({ "type": t, "min": m, "dim": d }))
        .collect(),
        Some(n) => {
            let mut v = Vec::new();
            for (k, r) in families(n) {
                if let Ok((min, dim)) = short_root_min(k, r) {
                    v.push(json!({
                        "type": format!("{k}{r}"),
                        "min": min.to_string(),
                        "dim": dim.to_string(),
                    }));
                }
            }
            v
        }
    };
    Ok(json!({ "schema": "lietrace.table.v1", "family": "short-root", "rows": rows }))
}

pub fn su2_table(max_degree: u32, digits: u32) -> Result<Value, Error> {
    let mut rows = Vec::new();
    for d in 1..=max_degree {
        let m = su2_min(d)?;
        let ratio = m.value.to_f64() / f64::from(d + 1);
        rows.push(json!({
            "d": d,
            "min": algebraic(&m.value, digits),
            "at": algebraic(&m.at, digits),
            "ratio": format!("{ratio:.prec$}", prec = digits as usize),
        }));
    }
    Ok(json!({ "schema": "lietrace.su2.v1", "rows": rows }))
}

pub fn su2_constant(digits: u32) -> Value {
    let (c, theta) = limit_constant();
    json!({
        "schema": "lietrace.su2-constant.v1",
        "c": format!("{c:.prec$}", prec = digits as usize),
        "theta0": format!("{theta:.prec$}", prec = digits as usize),
    })
}

pub fn xfun(d: &RootDatum, s: &[Complex64], t: &[Complex64]) -> Result<Value, Error> {
    let x = XFunction::new(d)?;
    let v = x.eval(s, t)?;
    let method = match v.method {
        XMethod::WeylSum => "weyl-sum",
        XMethod::RhoProduct => "rho-product",
        XMethod::Perturbed => "perturbed",
    };
    let c = |z: &Complex64| json!([format!("{:.12e}", z.re), format!("{:.12e}", z.im)]);
    Ok(json!({
        "schema": "lietrace.xfun.v1",
        "type": d.name(),
        "s": s.iter().map(c).collect::<Vec<_>>(),
        "t": t.iter().map(c).collect::<Vec<_>>(),
        "re": format!("{:.12e}", v.value.re),
        "im": format!("{:.12e}", v.value.im),
        "method": method,
        "error_estimate": format!("{:.3e}", v.error_estimate),
    }))
}
