use lietrace_core::arith::{q, qf, Q};
use lietrace_core::upoly::{AlgebraicReal, Interval, UPoly};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Q> {
    (-30i64..30, 1i64..8).prop_map(|(n, d)| qf(n, d))
}

fn upoly(max_len: usize) -> impl Strategy<Value = UPoly> {
    proptest::collection::vec(rat(), 1..max_len).prop_map(UPoly::new)
}

fn nonzero(max_len: usize) -> impl Strategy<Value = UPoly> {
    upoly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn sign(x: &Q) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn division_identity(a in upoly(9), b in nonzero(6)) {
        let (quo, rem) = a.div_rem(&b);
        prop_assert_eq!(quo.mul(&b).add(&rem), a);
        if !rem.is_zero() {
            prop_assert!(rem.degree() < b.degree());
        }
    }

    #[test]
    fn gcd_divides_both(a in nonzero(6), b in nonzero(6), c in nonzero(4)) {
        let (x, y) = (a.mul(&c), b.mul(&c));
        let g = x.gcd(&y);
        prop_assert!(x.rem(&g).is_zero());
        prop_assert!(y.rem(&g).is_zero());
        prop_assert!(g.degree() >= c.degree());
    }

    #[test]
    fn sign_matches_evaluation(p in upoly(9), x in rat()) {
        prop_assert_eq!(p.sign_at(&x), sign(&p.eval(&x)));
    }

    #[test]
    fn interval_encloses_values(p in upoly(8), a in rat(), w in 0i64..20, k in 0i64..=10) {
        let b = &a + qf(w, 10);
        let iv = Interval::new(a.clone(), b.clone()).eval(&p);
        let x = &a + (&b - &a) * qf(k, 10);
        let v = p.eval(&x);
        prop_assert!(iv.lo <= v && v <= iv.hi);
    }

    #[test]
    fn roots_of_products(roots in proptest::collection::btree_set(-20i64..20, 1..6), extra in 0u32..3) {
        let mut p = UPoly::constant(q(3));
        for &r in &roots {
            p = p.mul(&UPoly::linear_root(&qf(r, 2)));
        }
        // a factor without real roots and a repeated root
        p = p.mul(&UPoly::from_ints(&[1, 0, 1]).pow(extra));
        let first = *roots.iter().next().unwrap();
        p = p.mul(&UPoly::linear_root(&qf(first, 2)));
        let got = AlgebraicReal::roots_of(&p);
        let want: Vec<AlgebraicReal> = roots.iter().map(|&r| AlgebraicReal::rational(qf(r, 2))).collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn irrational_roots_isolated(n in 2i64..50) {
        prop_assume!((2..8).all(|k| k * k != n));
        let p = UPoly::from_ints(&[-n, 0, 1]);
        let rs = AlgebraicReal::roots_of(&p);
        prop_assert_eq!(rs.len(), 2);
        let s = (n as f64).sqrt();
        prop_assert!((rs[1].to_f64() - s).abs() < 1e-9);
        prop_assert!((rs[0].to_f64() + s).abs() < 1e-9);
        prop_assert!(rs[0].as_rational().is_none());
    }
}
