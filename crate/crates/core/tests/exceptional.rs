use std::sync::Arc;

use lietrace_core::arith::q;
use lietrace_core::branch::{branch_minimize, BranchProblem};
use lietrace_core::charring::{
    adjoint_character, evaluate_at_point, orthogonal_roots, restrict_to_a1n, CharRing,
    DEFAULT_ORBIT_CAP,
};
use lietrace_core::compactcert::{extremum, fundamental_objective, ExtremumOptions, Witness};
use lietrace_core::poly::{parse_poly, Poly};
use lietrace_core::rootdata::{build_root_datum, corner_geometry, corners, weyl_min_trace, DEFAULT_WEYL_CAP};

fn sorted_rows(rows: &[[i64; 4]]) -> Vec<Vec<i64>> {
    let mut v: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    v.sort();
    v
}

#[test]
fn f4_corner_values() {
    let d = build_root_datum('F', 4).unwrap();
    let got: Vec<Vec<i64>> = corners(&d)
        .unwrap()
        .iter()
        .map(|c| {
            c.integer_values()
                .expect("F4 corners are integral")
                .iter()
                .map(|z| i64::try_from(z).unwrap())
                .collect()
        })
        .collect();
    let mut got = got;
    got.sort();
    let want = sorted_rows(&[
        [52, 1274, 273, 26],
        [20, 154, -15, -6],
        [0, -10, 5, -2],
        [-2, 5, 3, -1],
        [-4, -14, -7, 2],
    ]);
    assert_eq!(got, want);
}

#[test]
fn f4_minima_at_corners() {
    let d = build_root_datum('F', 4).unwrap();
    let opts = ExtremumOptions::default();
    for (i, want) in [(0, -4), (2, -15), (3, -6)] {
        let rep = extremum(&d, &fundamental_objective(4, i), &opts).unwrap();
        assert_eq!(rep.minimum.value.as_rational(), Some(&q(want)), "f{}", i + 1);
        assert!(matches!(rep.minimum.witness, Witness::Corner(_)));
    }
}

#[test]
fn e8_adjoint_at_corners() {
    let d = build_root_datum('E', 8).unwrap();
    let adj = adjoint_character(Arc::new(d.clone()));
    let mut got: Vec<i64> = (0..=8)
        .map(|i| {
            let (_, _, point) = corner_geometry(&d, i);
            let v = evaluate_at_point(&adj, &point).unwrap();
            i64::try_from(&v.as_integer().unwrap()).unwrap()
        })
        .collect();
    got.sort();
    let mut want = vec![248, -8, 24, -4, 5, -4, -2, -3, 0];
    want.sort();
    assert_eq!(got, want);
}

fn adjoint_branch(kind: char, rank: usize) -> Poly {
    let ring = CharRing::new(build_root_datum(kind, rank).unwrap());
    let roots = orthogonal_roots(ring.datum());
    assert_eq!(roots.len(), rank);
    restrict_to_a1n(&ring.adjoint(), &roots, DEFAULT_ORBIT_CAP).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn equal_up_to_permutation(a: &Poly, b: &Poly) -> bool {
    let n = a.nvars();
    a.len() == b.len() && permutations(n).iter().any(|p| a.permute_vars(p) == *b)
}

#[test]
fn branch_tables_exact() {
    let g2 = parse_poly("t1^3*t2 - 2*t1*t2 + t1^2 + t2^2 - 2", 2, "t").unwrap();
    assert_eq!(adjoint_branch('G', 2), g2);
    let f4 = parse_poly(
        "t1*t2*t3*t4 + t1^2 + t2^2 + t3^2 + t4^2 \
         + t1*t2 + t1*t3 + t1*t4 + t2*t3 + t2*t4 + t3*t4 - 4",
        4,
        "t",
    )
    .unwrap();
    assert_eq!(adjoint_branch('F', 4), f4);
}

const E7_TERMS: &str = "t1*t2*t3*t4 + t1*t2*t5*t6 + t3*t4*t5*t6 + t1*t3*t5*t7 \
    + t2*t4*t5*t7 + t2*t3*t6*t7 + t1*t4*t6*t7";

#[test]
fn branch_table_e7() {
    let squares = (1..=7).map(|i| format!("t{i}^2")).collect::<Vec<_>>().join(" + ");
    let want = parse_poly(&format!("{E7_TERMS} + {squares} - 7"), 7, "t").unwrap();
    assert!(equal_up_to_permutation(&adjoint_branch('E', 7), &want));
}

#[test]
fn branch_table_e8() {
    let squares = (1..=8).map(|i| format!("t{i}^2")).collect::<Vec<_>>().join(" + ");
    let extra = "t2*t3*t5*t8 + t1*t4*t5*t8 + t1*t3*t6*t8 + t2*t4*t6*t8 \
        + t1*t2*t7*t8 + t3*t4*t7*t8 + t5*t6*t7*t8";
    let want = parse_poly(&format!("{E7_TERMS} + {extra} + {squares} - 8"), 8, "t").unwrap();
    assert!(equal_up_to_permutation(&adjoint_branch('E', 8), &want));
}

#[test]
fn branch_minima() {
    for (kind, rank, want) in [('G', 2, -2), ('F', 4, -4)] {
        let m = branch_minimize(&BranchProblem::new(adjoint_branch(kind, rank))).unwrap();
        assert_eq!(m.value.as_rational(), Some(&q(want)), "{kind}{rank}");
    }
}

#[test]
fn weyl_trace_matches_pipeline() {
    for (kind, rank, want) in [('G', 2, -2), ('F', 4, -4), ('A', 2, -1), ('B', 2, -2)] {
        let ring = CharRing::new(build_root_datum(kind, rank).unwrap());
        let obj = ring.to_fundamental_polynomial(&ring.adjoint()).unwrap();
        let rep = extremum(ring.datum(), &obj, &ExtremumOptions::default()).unwrap();
        let w = weyl_min_trace(ring.datum(), DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(w, q(want), "{kind}{rank}");
        assert_eq!(rep.minimum.value.as_rational(), Some(&w), "{kind}{rank}");
    }
}

#[test]
fn g2_short_root_minimum() {
    let d = build_root_datum('G', 2).unwrap();
    let rep = extremum(&d, &fundamental_objective(2, 0), &ExtremumOptions::default()).unwrap();
    assert_eq!(rep.minimum.value.as_rational(), Some(&q(-2)));
    assert_eq!(rep.maximum.value.as_rational(), Some(&q(7)));
}
