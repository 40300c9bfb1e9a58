//! Characters of `SU(2)` as Chebyshev polynomials, their normalized minima,
//! and the limiting character
//! `X(s, t) = prod_{r > 0} (r.rho) / ((r.s)(r.t)) * sum_w sgn(w) e^{s.wt}`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::algsolve::{solve_zero_dim, values_at, AlgebraicPoint, Ideal, MonomialOrder, DEFAULT_PAIR_CAP};
use crate::arith::{to_f64, Q, Z};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rootdata::RootDatum;
use crate::upoly::{AlgebraicReal, Interval, UPoly};

/// `chi_d` as a polynomial in `t = s + 1/s`, i.e. `U_d(t/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebyshevCharacter {
    pub degree: u32,
    /// Coefficients, constant term first.
    pub coeffs: Vec<Z>,
}

impl ChebyshevCharacter {
    pub fn upoly(&self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| Q::from(c.clone())).collect())
    }

    /// Three-term recurrence; the monomial form cancels badly near `+-2`.
    pub fn eval_f64(&self, t: f64) -> f64 {
        let (mut prev, mut cur) = (0.0, 1.0);
        for _ in 0..self.degree {
            (prev, cur) = (cur, t * cur - prev);
        }
        cur
    }
}

pub fn chebyshev_character(d: u32) -> ChebyshevCharacter {
    let mut prev: Vec<Z> = vec![Z::one()];
    if d == 0 {
        return ChebyshevCharacter {
            degree: 0,
            coeffs: prev,
        };
    }
    let mut cur: Vec<Z> = vec![Z::zero(), Z::one()];
    for _ in 1..d {
        let mut next = vec![Z::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = core::mem::replace(&mut cur, next);
    }
    ChebyshevCharacter {
        degree: d,
        coeffs: cur,
    }
}

#[derive(Clone, Debug)]
pub struct Su2Minimum {
    pub degree: u32,
    pub value: AlgebraicReal,
    pub at: AlgebraicReal,
}

/// Exact minimum of `chi_d` on `[-2, 2]`.
pub fn su2_min(d: u32) -> Result<Su2Minimum> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    let chi = chebyshev_character(d);
    let two = AlgebraicReal::integer(2);
    let end = |t: i64| {
        let v = chi.upoly().eval(&crate::arith::q(t));
        (AlgebraicReal::rational(v), AlgebraicReal::integer(t))
    };
    let (mut value, mut at) = end(2);
    let (vm, tm) = end(-2);
    if vm < value {
        value = vm;
        at = tm;
    }
    if d >= 2 {
        let p = Poly::from_terms(
            1,
            chi.coeffs.iter().enumerate().map(|(i, c)| (vec![i as u32], Q::from(c.clone()))),
        );
        let ideal = Ideal::new(1, vec![p.derivative(0)], MonomialOrder::Lex);
        let u = chi.upoly();
        let width = Q::new(Z::one(), Z::one() << 40u32);
        let mut pts: Vec<(AlgebraicPoint, Interval)> = solve_zero_dim(&ideal, DEFAULT_PAIR_CAP)?
            .into_iter()
            .filter(|pt| pt.coords[0] >= two.neg() && pt.coords[0] <= two)
            .map(|pt| {
                let mut t = pt.coords[0].clone();
                t.refine_to(&width);
                let iv = t.interval().eval(&u);
                (pt, iv)
            })
            .collect();
        // exact values only where the enclosure can beat the best upper bound
        let mut best_hi = value.as_rational().cloned().unwrap();
        for (_, iv) in &pts {
            if iv.hi < best_hi {
                best_hi = iv.hi.clone();
            }
        }
        pts.retain(|(_, iv)| iv.lo <= best_hi);
        let pts: Vec<AlgebraicPoint> = pts.into_iter().map(|(pt, _)| pt).collect();
        for (pt, v) in pts.iter().zip(values_at(&pts, &p)?) {
            if v < value {
                value = v;
                at = pt.coords[0].clone();
            }
        }
    }
    Ok(Su2Minimum {
        degree: d,
        value,
        at,
    })
}

/// `theta_0`, the first positive minimizer of `sin(x)/x`, and
/// `c = -sin(theta_0)/theta_0`.
pub fn limit_constant() -> (f64, f64) {
    // tan x = x on (pi, 3pi/2), i.e. sin x - x cos x = 0
    let g = |x: f64| libm::sin(x) - x * libm::cos(x);
    let (mut a, mut b) = (core::f64::consts::PI, 1.5 * core::f64::consts::PI - 1e-9);
    while b - a > 1e-13 {
        let m = 0.5 * (a + b);
        if (g(a) < 0.0) == (g(m) < 0.0) {
            a = m;
        } else {
            b = m;
        }
    }
    let theta = 0.5 * (a + b);
    (-libm::sin(theta) / theta, theta)
}

/// `chi_d(e^{i theta}) / (d + 1) = sin((d+1) theta) / ((d+1) sin theta)`.
pub fn su2_normalized(d: u32, theta: f64) -> f64 {
    let n = (d + 1) as f64;
    let s = libm::sin(theta);
    if s.abs() < 1e-300 {
        return if d % 2 == 1 && libm::cos(theta) < 0.0 { -1.0 } else { 1.0 };
    }
    libm::sin(n * theta) / (n * s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XMethod {
    WeylSum,
    RhoProduct,
    Perturbed,
}

#[derive(Clone, Debug)]
pub struct XEvaluation {
    pub value: Complex64,
    pub method: XMethod,
    /// Spread of the perturbed evaluations; zero for the direct paths.
    pub error_estimate: f64,
}

/// Default limit on `|W|` for the alternating sum.
pub const DEFAULT_X_WEYL_CAP: u128 = 5000;

/// Evaluator for `X` on one root system. Vectors are given in the basis of
/// fundamental weights and paired with the invariant form.
#[derive(Clone, Debug)]
pub struct XFunction {
    rank: usize,
    gram: Vec<Vec<f64>>,
    roots: Vec<Vec<f64>>,
    rho: Vec<f64>,
    /// Weyl group elements as integer matrices in the weight basis, with
    /// their signs.
    weyl: Vec<(Vec<Vec<i64>>, f64)>,
    /// `prod_{r > 0} r.rho`.
    rho_product: f64,
    pub tolerance: f64,
}

impl XFunction {
    pub fn new(datum: &RootDatum) -> Result<XFunction> {
        Self::with_cap(datum, DEFAULT_X_WEYL_CAP)
    }

    pub fn with_cap(datum: &RootDatum, cap: u128) -> Result<XFunction> {
        if datum.weyl_order() > cap {
            return Err(Error::CapExceeded {
                what: "Weyl group order for the alternating sum",
                value: datum.weyl_order(),
                cap,
            });
        }
        let r = datum.rank();
        let gram: Vec<Vec<f64>> = datum
            .form_matrix()
            .iter()
            .map(|row| row.iter().map(to_f64).collect())
            .collect();
        let roots: Vec<Vec<f64>> = datum
            .positive_roots()
            .iter()
            .map(|w| w.iter().map(|&x| x as f64).collect())
            .collect();
        let rho: Vec<f64> = datum.rho().iter().map(|&x| x as f64).collect();
        let weyl = weyl_elements(datum);
        let mut f = XFunction {
            rank: r,
            gram,
            roots,
            rho,
            weyl,
            rho_product: 1.0,
            tolerance: 1e-6,
        };
        f.rho_product = f.roots.iter().map(|a| f.pair_real(a, &f.rho)).product();
        Ok(f)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rho(&self) -> Vec<f64> {
        self.rho.clone()
    }

    fn pair_real(&self, x: &[f64], y: &[f64]) -> f64 {
        let mut s = 0.0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += x[i] * self.gram[i][j] * y[j];
            }
        }
        s
    }

    pub fn pair(&self, x: &[Complex64], y: &[Complex64]) -> Complex64 {
        let mut s = Complex64::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += x[i] * self.gram[i][j] * y[j];
            }
        }
        s
    }

    fn root_pair(&self, r: &[f64], x: &[Complex64]) -> Complex64 {
        let rc: Vec<Complex64> = r.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        self.pair(&rc, x)
    }

    /// Smallest `|r.x|` over positive roots, relative to `|x|`.
    pub fn wall_distance(&self, x: &[Complex64]) -> f64 {
        let norm = libm::sqrt(x.iter().map(|z| z.norm_sqr()).sum::<f64>()).max(1e-300);
        self.roots
            .iter()
            .map(|r| self.root_pair(r, x).norm() / norm)
            .fold(f64::INFINITY, f64::min)
    }

    fn apply(&self, w: &[Vec<i64>], x: &[Complex64]) -> Vec<Complex64> {
        w.iter()
            .map(|row| row.iter().zip(x).map(|(&a, &z)| z * a as f64).sum())
            .collect()
    }

    /// The defining alternating sum; both arguments must be off the walls.
    pub fn weyl_sum(&self, s: &[Complex64], t: &[Complex64]) -> Complex64 {
        let mut sum = Complex64::zero();
        for (w, sgn) in &self.weyl {
            sum += (self.pair(s, &self.apply(w, t))).exp() * *sgn;
        }
        let mut pre = Complex64::new(self.rho_product, 0.0);
        for r in &self.roots {
            pre /= self.root_pair(r, s) * self.root_pair(r, t);
        }
        pre * sum
    }

    /// `X(rho, t) = prod_{r > 0} sinh(r.t / 2) / (r.t / 2)`.
    pub fn rho_product_formula(&self, t: &[Complex64]) -> Complex64 {
        self.roots
            .iter()
            .map(|r| sinhc(self.root_pair(r, t) * 0.5))
            .product()
    }

    /// If `x = c rho`, return `c`.
    fn rho_multiple(&self, x: &[Complex64]) -> Option<Complex64> {
        let c = x[0];
        let scale = x.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1e-300);
        x.iter().all(|z| (*z - c).norm() <= 1e-12 * scale).then_some(c)
    }

    pub fn eval(&self, s: &[Complex64], t: &[Complex64]) -> Result<XEvaluation> {
        if s.len() != self.rank || t.len() != self.rank {
            return Err(Error::InvalidArgument(format!(
                "X takes two vectors of length {}",
                self.rank
            )));
        }
        let direct = |value| XEvaluation {
            value,
            method: XMethod::RhoProduct,
            error_estimate: 0.0,
        };
        // X(c rho, t) = X(rho, c t), and symmetrically in the arguments
        if let Some(c) = self.rho_multiple(s) {
            let ct: Vec<Complex64> = t.iter().map(|z| z * c).collect();
            return Ok(direct(self.rho_product_formula(&ct)));
        }
        if let Some(c) = self.rho_multiple(t) {
            let cs: Vec<Complex64> = s.iter().map(|z| z * c).collect();
            return Ok(direct(self.rho_product_formula(&cs)));
        }
        let near_wall = 1e-4;
        if self.wall_distance(s) > near_wall && self.wall_distance(t) > near_wall {
            return Ok(XEvaluation {
                value: self.weyl_sum(s, t),
                method: XMethod::WeylSum,
                error_estimate: 0.0,
            });
        }
        self.perturbed(s, t)
    }

    /// Alternating sum at `s +- eps v, t +- eps v'` averaged over the sign
    /// and extrapolated in `eps`, for several directions `v`.
    fn perturbed(&self, s: &[Complex64], t: &[Complex64]) -> Result<XEvaluation> {
        let scale_s = s.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
        let scale_t = t.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
        let eps = 1e-3;
        let symmetric = |dir: &[f64], e: f64| -> Option<Complex64> {
            let mut acc = Complex64::zero();
            for sign in [1.0, -1.0] {
                let ps: Vec<Complex64> = s
                    .iter()
                    .zip(dir)
                    .map(|(z, d)| z + Complex64::new(sign * e * scale_s * d, 0.0))
                    .collect();
                let pt: Vec<Complex64> = t
                    .iter()
                    .zip(dir.iter().rev())
                    .map(|(z, d)| z + Complex64::new(sign * e * scale_t * d, 0.0))
                    .collect();
                if self.wall_distance(&ps) < 1e-6 || self.wall_distance(&pt) < 1e-6 {
                    return None;
                }
                acc += self.weyl_sum(&ps, &pt);
            }
            Some(acc * 0.5)
        };
        let mut vals = Vec::new();
        for k in 0..self.rank.max(2) + 1 {
            let dir: Vec<f64> = (0..self.rank)
                .map(|i| 1.0 + 0.37 * libm::sqrt((i + 2 * k + 1) as f64) + 0.11 * (k as f64))
                .collect();
            if let (Some(a), Some(b)) = (symmetric(&dir, eps), symmetric(&dir, eps / 2.0)) {
                // the symmetric average has error c eps^2
                vals.push((b * 4.0 - a) / 3.0);
            }
        }
        if vals.len() < 2 {
            return Err(Error::Conditioning(
                "no usable perturbation off the reflection walls".into(),
            ));
        }
        let mean = vals.iter().sum::<Complex64>() / vals.len() as f64;
        let spread = vals.iter().map(|v| (v - mean).norm()).fold(0.0, f64::max);
        if !mean.is_finite() || spread > self.tolerance * mean.norm().max(1.0) {
            return Err(Error::Conditioning(format!(
                "arguments are too close to a reflection wall (spread {spread:.3e})"
            )));
        }
        Ok(XEvaluation {
            value: mean,
            method: XMethod::Perturbed,
            error_estimate: spread,
        })
    }
}

/// `sinh(z) / z`, with its series near zero.
fn sinhc(z: Complex64) -> Complex64 {
    if z.norm() < 1e-4 {
        let z2 = z * z;
        Complex64::one() + z2 / 6.0 + z2 * z2 / 120.0
    } else {
        z.sinh() / z
    }
}

/// All of `W`, as matrices on weight coordinates, with `sgn(w)`.
fn weyl_elements(datum: &RootDatum) -> Vec<(Vec<Vec<i64>>, f64)> {
    let r = datum.rank();
    let cartan = datum.cartan();
    // s_i(lambda)_k = lambda_k - lambda_i C[i][k]
    let gens: Vec<Vec<Vec<i64>>> = (0..r)
        .map(|i| {
            let mut m = vec![vec![0i64; r]; r];
            for (k, row) in m.iter_mut().enumerate() {
                row[k] += 1;
                row[i] -= cartan[i][k];
            }
            m
        })
        .collect();
    let identity: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut seen = BTreeSet::new();
    seen.insert(identity.clone());
    let mut out = vec![(identity.clone(), 1.0)];
    let mut frontier = vec![(identity, 1.0)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (w, sgn) in &frontier {
            for g in &gens {
                let p = mat_mul(g, w);
                if seen.insert(p.clone()) {
                    next.push((p.clone(), -sgn));
                    out.push((p, -sgn));
                }
            }
        }
        frontier = next;
    }
    out
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}
