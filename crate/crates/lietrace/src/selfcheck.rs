//! Fast checks run by `lietrace selfcheck`.

use lietrace_core::arith::Q;
use lietrace_core::branch::{branch_minimize, BranchProblem};
use lietrace_core::closedform::{outer_reduction, trace_bounds};
use lietrace_core::compactcert::{extremum, fundamental_objective, ExtremumOptions};
use lietrace_core::rootdata::build_root_datum;
use lietrace_core::su2asym::su2_min;

use crate::cli::{Outcome, EXIT_CHECK_FAILED, EXIT_OK};
use crate::commands::{branch_polynomial, BranchRep};

type Check = fn() -> Result<bool, String>;

fn s<E: ToString>(e: E) -> String {
    e.to_string()
}

fn g2_minimum() -> Result<bool, String> {
    let d = build_root_datum('G', 2).map_err(s)?;
    let rep = extremum(&d, &fundamental_objective(2, 1), &ExtremumOptions::default()).map_err(s)?;
    Ok(rep.minimum.value.as_rational() == Some(&Q::from_integer((-2).into())))
}

fn a1_region() -> Result<bool, String> {
    let d = build_root_datum('A', 1).map_err(s)?;
    let rep = extremum(&d, &fundamental_objective(1, 0), &ExtremumOptions::default()).map_err(s)?;
    let two = Q::from_integer(2.into());
    Ok(rep.minimum.value.as_rational() == Some(&-two.clone())
        && rep.maximum.value.as_rational() == Some(&two))
}

fn g2_branch() -> Result<bool, String> {
    let d = build_root_datum('G', 2).map_err(s)?;
    let p = branch_polynomial(&d, BranchRep::Adjoint, 1 << 20).map_err(s)?;
    let m = branch_minimize(&BranchProblem::new(p)).map_err(s)?;
    Ok(m.value.as_rational() == Some(&Q::from_integer((-2).into())))
}

fn reduction_agrees() -> Result<bool, String> {
    for (k, r) in [('A', 3), ('A', 4), ('D', 4), ('E', 6)] {
        let direct = trace_bounds(k, r, 2).map_err(s)?;
        let red = outer_reduction(k, r, 2).map_err(s)?;
        if (direct.min, direct.max) != (red.min, red.max) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn su2_odd() -> Result<bool, String> {
    for d in [1u32, 3, 5] {
        let m = su2_min(d).map_err(s)?;
        if m.value.as_rational() != Some(&Q::from_integer((-(i64::from(d) + 1)).into())) {
            return Ok(false);
        }
    }
    Ok(true)
}

const CHECKS: &[(&str, Check)] = &[
    ("A1 trace region", a1_region),
    ("G2 minimum of f2", g2_minimum),
    ("G2 adjoint branch minimum", g2_branch),
    ("outer reduction", reduction_agrees),
    ("SU(2) odd degrees", su2_odd),
];

pub fn run() -> Outcome {
    let mut stdout = String::new();
    let mut failed = 0;
    for (name, check) in CHECKS {
        match check() {
            Ok(true) => stdout.push_str(&format!("ok    {name}\n")),
            Ok(false) => {
                failed += 1;
                stdout.push_str(&format!("FAIL  {name}\n"));
            }
            Err(e) => {
                failed += 1;
                stdout.push_str(&format!("FAIL  {name}: {e}\n"));
            }
        }
    }
    Outcome {
        code: if failed == 0 { EXIT_OK } else { EXIT_CHECK_FAILED },
        stdout,
        stderr: String::new(),
    }
}
