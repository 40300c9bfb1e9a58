//! Exact arithmetic in cyclotomic fields `Q(zeta_m)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{q, to_f64, Q, Z};
use crate::error::{Error, Result};
use crate::upoly::{AlgebraicReal, UPoly};

/// The `m`-th cyclotomic polynomial.
pub fn cyclotomic_poly(m: u64) -> UPoly {
    let mut coeffs = vec![Q::zero(); m as usize + 1];
    coeffs[0] = -Q::one();
    coeffs[m as usize] = Q::one();
    let mut p = UPoly::new(coeffs);
    for d in 1..m {
        if m % d == 0 {
            p = p.div_rem(&cyclotomic_poly(d)).0;
        }
    }
    p
}

/// Element of `Q(zeta_m)`, stored as a polynomial in `zeta` of degree
/// below `phi(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    m: u64,
    phi: UPoly,
    value: UPoly,
}

impl Cyclotomic {
    pub fn zero(m: u64) -> Self {
        Cyclotomic {
            m,
            phi: cyclotomic_poly(m),
            value: UPoly::zero(),
        }
    }

    pub fn rational(m: u64, x: Q) -> Self {
        let mut c = Cyclotomic::zero(m);
        c.value = UPoly::constant(x);
        c
    }

    /// `sum_k counts[k] zeta^k` for `k` in `0..m`.
    pub fn from_power_counts(m: u64, counts: &[Z]) -> Self {
        let mut c = Cyclotomic::zero(m);
        let raw = UPoly::new(counts.iter().map(|z| Q::from(z.clone())).collect());
        c.value = raw.rem(&c.phi);
        c
    }

    pub fn order(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[Q] {
        self.value.coeffs()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn as_rational(&self) -> Option<Q> {
        match self.value.degree() {
            None => Some(Q::zero()),
            Some(0) => Some(self.value.coeffs()[0].clone()),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<Z> {
        self.as_rational()
            .filter(|x| x.is_integer())
            .map(|x| x.to_integer())
    }

    fn check(&self, o: &Cyclotomic) {
        assert_eq!(self.m, o.m, "cyclotomic orders differ");
    }

    pub fn add(&self, o: &Cyclotomic) -> Cyclotomic {
        self.check(o);
        Cyclotomic {
            m: self.m,
            phi: self.phi.clone(),
            value: self.value.add(&o.value),
        }
    }

    pub fn mul(&self, o: &Cyclotomic) -> Cyclotomic {
        self.check(o);
        Cyclotomic {
            m: self.m,
            phi: self.phi.clone(),
            value: self.value.mul(&o.value).rem(&self.phi),
        }
    }

    pub fn scale(&self, c: &Q) -> Cyclotomic {
        Cyclotomic {
            m: self.m,
            phi: self.phi.clone(),
            value: self.value.scale(c),
        }
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Cyclotomic {
        let m = self.m as usize;
        let mut counts = vec![Q::zero(); m];
        for (k, c) in self.value.coeffs().iter().enumerate() {
            counts[(m - k % m) % m] += c;
        }
        Cyclotomic {
            m: self.m,
            phi: self.phi.clone(),
            value: UPoly::new(counts).rem(&self.phi),
        }
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    pub fn to_complex(&self) -> Complex64 {
        let z = Complex64::from_polar(1.0, 2.0 * core::f64::consts::PI / self.m as f64);
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.value.coeffs().iter().enumerate() {
            acc += z.powu(k as u32) * to_f64(c);
        }
        acc
    }

    /// Minimal polynomial over `Q` by a Krylov sequence of powers.
    pub fn min_poly(&self) -> UPoly {
        let deg = self.phi.degree().unwrap();
        let vec_of = |p: &UPoly| -> Vec<Q> {
            let mut v = p.coeffs().to_vec();
            v.resize(deg, Q::zero());
            v
        };
        // Reduced echelon rows, each tagged with its combination of powers.
        let mut basis: Vec<(Vec<Q>, Vec<Q>, usize)> = Vec::new();
        let mut pow = UPoly::constant(Q::one());
        for k in 0..=deg {
            let mut v = vec_of(&pow);
            let mut comb = vec![Q::zero(); deg + 1];
            comb[k] = Q::one();
            for (bv, bc, piv) in &basis {
                if !v[*piv].is_zero() {
                    let f = v[*piv].clone() / &bv[*piv];
                    for (x, y) in v.iter_mut().zip(bv) {
                        *x -= &f * y;
                    }
                    for (x, y) in comb.iter_mut().zip(bc) {
                        *x -= &f * y;
                    }
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                Some(piv) => basis.push((v, comb, piv)),
                None => return UPoly::new(comb).normalized(),
            }
            pow = pow.mul(&self.value).rem(&self.phi);
        }
        unreachable!("degree bounded by phi(m)")
    }

    /// Exact real value, if the element is real.
    pub fn to_real(&self) -> Result<Option<AlgebraicReal>> {
        if let Some(x) = self.as_rational() {
            return Ok(Some(AlgebraicReal::rational(x)));
        }
        if !self.is_real() {
            return Ok(None);
        }
        let approx = self.to_complex().re;
        let mp = self.min_poly();
        let roots = AlgebraicReal::roots_of(&mp);
        let mut best: Option<(f64, AlgebraicReal)> = None;
        let mut second = f64::INFINITY;
        for r in roots {
            let d = (r.to_f64() - approx).abs();
            match &best {
                Some((bd, _)) if d >= *bd => second = second.min(d),
                _ => {
                    if let Some((bd, _)) = &best {
                        second = second.min(*bd);
                    }
                    best = Some((d, r));
                }
            }
        }
        match best {
            Some((d, r)) if d < 1e-6 && second > 1e-3 => Ok(Some(r)),
            _ => Err(Error::Undecided {
                depth: 0,
                context: format!("real embedding of a cyclotomic value near {approx}"),
            }),
        }
    }
}

/// Value of a character at a torsion point.
#[derive(Clone, Debug)]
pub struct TorsionValue {
    pub exact: Cyclotomic,
    pub real: Option<AlgebraicReal>,
}

impl TorsionValue {
    pub fn new(exact: Cyclotomic) -> Result<Self> {
        let real = exact.to_real()?;
        Ok(TorsionValue { exact, real })
    }

    pub fn as_integer(&self) -> Option<Z> {
        self.exact.as_integer()
    }

    pub fn is_real(&self) -> bool {
        self.real.is_some()
    }

    pub fn to_complex(&self) -> Complex64 {
        self.exact.to_complex()
    }

    /// Display form: the exact value when rational or real, otherwise the
    /// pair (value, conjugate) rendered numerically.
    pub fn render(&self, digits: u32) -> String {
        match (&self.real, self.exact.as_rational()) {
            (_, Some(x)) => crate::arith::q_to_string(&x),
            (Some(r), None) => r.decimal(digits),
            (None, None) => {
                let z = self.to_complex();
                let d = digits as usize;
                format!("{:.d$}{:+.d$}i", z.re, z.im)
            }
        }
    }
}

/// Exponent of `zeta_m` corresponding to the pairing `x` with `m x` integral.
pub fn exponent_mod(x: &Q, m: u64) -> Option<u64> {
    let y = x * q(m as i64);
    if !y.is_integer() {
        return None;
    }
    let k = y.to_integer().to_i64()?;
    Some(k.rem_euclid(m as i64) as u64)
}
