use std::f64::consts::PI;

use lietrace_core::arith::{q, qf};
use lietrace_core::charring::CharRing;
use lietrace_core::rootdata::{build_root_datum, RootDatum};
use lietrace_core::su2asym::{
    chebyshev_character, limit_constant, su2_min, su2_normalized, XFunction,
};
use lietrace_core::upoly::{AlgebraicReal, UPoly};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn chebyshev_zeros() {
    for d in 1..=30u32 {
        let p = chebyshev_character(d).upoly();
        let mut roots: Vec<f64> = AlgebraicReal::roots_of(&p)
            .into_iter()
            .map(|mut r| {
                r.refine_to(&qf(1, 1 << 40));
                r.to_f64()
            })
            .collect();
        roots.sort_by(f64::total_cmp);
        let mut want: Vec<f64> = (1..=d)
            .map(|k| 2.0 * (PI * f64::from(k) / f64::from(d + 1)).cos())
            .collect();
        want.sort_by(f64::total_cmp);
        assert_eq!(roots.len(), d as usize);
        for (a, b) in roots.iter().zip(&want) {
            assert!((a - b).abs() < 1e-10, "d = {d}: {a} vs {b}");
        }
    }
}

#[test]
fn odd_minima() {
    for d in (1..=21u32).step_by(2) {
        let m = su2_min(d).unwrap();
        assert_eq!(m.value.as_rational(), Some(&q(-(i64::from(d) + 1))), "d = {d}");
    }
}

#[test]
fn degree_six_exact() {
    // -(7/27)(1 + 2 sqrt 7) is the negative root of 27 x^2 + 14 x - 49
    let m = su2_min(6).unwrap();
    let target = AlgebraicReal::roots_of(&UPoly::from_ints(&[-49, 14, 27]))
        .into_iter()
        .find(|r| r.sign() < 0)
        .unwrap();
    assert_eq!(m.value, target);
    let want = -(7.0 / 27.0) * (1.0 + 2.0 * 7f64.sqrt());
    assert!((m.value.to_f64() - want).abs() < 1e-6);
    assert!((m.value.to_f64() + 1.631).abs() < 1e-3);
}

/// `chi_d(2 cos theta) = sin((d + 1) theta) / sin theta`.
fn chi_angle(d: u32, theta: f64) -> f64 {
    (f64::from(d + 1) * theta).sin() / theta.sin()
}

/// Minimum of `chi_d` on a fine grid of angles.
fn grid_min(d: u32) -> f64 {
    (1..20_000)
        .map(|k| chi_angle(d, PI * f64::from(k) / 20_000.0))
        .fold(f64::INFINITY, f64::min)
}

#[test]
fn normalized_minima() {
    let (c, _) = limit_constant();
    for d in 1..=50u32 {
        let m = su2_min(d).unwrap().value.to_f64();
        let g = grid_min(d);
        assert!(m <= g + 1e-9 && g - m < 1e-3 * f64::from(d + 1), "d = {d}");
        let ratio = m / f64::from(d + 1);
        assert!(ratio >= -1.0 - 1e-12);
        if d % 2 == 0 && d >= 20 {
            assert!(ratio <= -c + 0.02, "d = {d}: {ratio}");
        }
    }
}

#[test]
fn constant() {
    let (c, theta) = limit_constant();
    assert!((c - 0.2172).abs() < 1e-4);
    assert!((theta - 4.493).abs() < 1e-3);
    assert!((theta.tan() - theta).abs() < 1e-6);
    assert!((c + theta.sin() / theta).abs() < 1e-12);
}

#[test]
fn sin_limit() {
    let d = 200u32;
    let chi = chebyshev_character(d);
    for t in [1.0f64, 2.0, 4.0] {
        let theta = t / f64::from(d);
        let direct = chi_angle(d, theta) / f64::from(d + 1);
        assert!((direct - t.sin() / t).abs() < 1e-2, "t = {t}");
        assert!((chi.eval_f64(2.0 * theta.cos()) / f64::from(d + 1) - direct).abs() < 1e-9);
        assert!((su2_normalized(d, theta) - direct).abs() < 1e-9);
    }
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-9 * a.norm().max(b.norm()).max(1.0)
}

fn real_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| Complex64::new(rng.gen_range(0.2..1.5), 0.0)).collect()
}

fn imag_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| Complex64::new(0.0, rng.gen_range(-1.5..1.5))).collect()
}

/// Simple reflection `s_i` on a vector in fundamental-weight coordinates.
fn reflect(d: &RootDatum, x: &[Complex64], i: usize) -> Vec<Complex64> {
    let c = d.cartan();
    (0..x.len())
        .map(|j| x[j] - x[i] * c[i][j] as f64)
        .collect()
}

const X_TYPES: &[(char, usize)] = &[('A', 1), ('A', 2), ('B', 2)];

#[test]
fn x_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for &(k, n) in X_TYPES {
        let d = build_root_datum(k, n).unwrap();
        let x = XFunction::new(&d).unwrap();
        let zero = vec![Complex64::new(0.0, 0.0); n];
        assert!(close(x.eval(&zero, &zero).unwrap().value, Complex64::new(1.0, 0.0)));
        let rho: Vec<Complex64> = x.rho().iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let tiny: Vec<Complex64> = (0..n).map(|_| Complex64::new(0.0, 1e-7)).collect();
        assert!((x.eval(&rho, &tiny).unwrap().value - 1.0).norm() < 1e-9);
        for _ in 0..100 {
            let s = real_vec(&mut rng, n);
            let t = imag_vec(&mut rng, n);
            let v = x.eval(&s, &t).unwrap().value;
            assert!(close(v, x.eval(&t, &s).unwrap().value), "{k}{n} symmetry");
            let u = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let ut: Vec<Complex64> = t.iter().map(|z| z * u).collect();
            let us: Vec<Complex64> = s.iter().map(|z| z * u).collect();
            assert!(
                close(x.eval(&s, &ut).unwrap().value, x.eval(&us, &t).unwrap().value),
                "{k}{n} scaling"
            );
            let i = rng.gen_range(0..n);
            let wt = reflect(&d, &t, i);
            assert!(close(x.eval(&s, &wt).unwrap().value, v), "{k}{n} Weyl invariance");
        }
    }
}

#[test]
fn x_normalized_characters() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for &(k, n) in X_TYPES {
        let d = build_root_datum(k, n).unwrap();
        let ring = CharRing::new(d.clone());
        let x = XFunction::new(&d).unwrap();
        let rho: Vec<Complex64> = x.rho().iter().map(|&v| Complex64::new(v, 0.0)).collect();
        for _ in 0..100 {
            let lambda: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=5)).collect();
            let t: Vec<Complex64> = (0..n).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), 0.0)).collect();
            let it: Vec<Complex64> = t.iter().map(|z| z * Complex64::i()).collect();
            let weights = ring.irreducible(&lambda).unwrap().full_expansion(1 << 20).unwrap();
            let dim: i128 = weights.iter().map(|(_, m)| m).sum();
            let chi: Complex64 = weights
                .iter()
                .map(|(mu, m)| {
                    let mu: Vec<Complex64> = mu.iter().map(|&a| Complex64::new(a as f64, 0.0)).collect();
                    (x.pair(&mu, &it)).exp() * *m as f64
                })
                .sum();
            let lr: Vec<Complex64> = lambda
                .iter()
                .zip(&rho)
                .map(|(&l, r)| r + l as f64)
                .collect();
            let ratio = x.eval(&lr, &it).unwrap().value / x.eval(&rho, &it).unwrap().value;
            let lhs = chi / dim as f64;
            assert!((lhs - ratio).norm() < 1e-9, "{k}{n} lambda {lambda:?}: {lhs} vs {ratio}");
        }
    }
}
