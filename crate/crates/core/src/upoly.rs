//! Univariate polynomials over the rationals, Sturm sequences, real root
//! isolation on dyadic intervals and exact real algebraic numbers.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{denom_lcm, q, qz, Q, Z};

/// Dense univariate polynomial, coefficients from the constant term up.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct UPoly {
    coeffs: Vec<Q>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        UPoly::new(cs.iter().map(|&c| q(c)).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        UPoly::new(vec![c])
    }

    pub fn x() -> Self {
        UPoly::new(vec![Q::zero(), Q::one()])
    }

    /// `den*x - num`, whose only root is `c`.
    pub fn linear_root(c: &Q) -> Self {
        UPoly::new(vec![-qz(c.numer().clone()), qz(c.denom().clone())])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + crate::arith::to_f64(c);
        }
        acc
    }

    /// Sign of `p(x)`, computed in integers as `den^deg * p(x)`.
    pub fn sign_at(&self, x: &Q) -> i8 {
        if !self.coeffs.iter().all(Q::is_integer) {
            return self.primitive().sign_at(x);
        }
        let (n, d) = (x.numer(), x.denom());
        let mut acc = Z::zero();
        let mut dpow = Z::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c.numer() * &dpow;
            dpow *= d;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * q(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Q) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(Q::zero);
                    match o.coeffs.get(i) {
                        Some(b) => a + b,
                        None => a,
                    }
                })
                .collect(),
        )
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.scale(&-Q::one()))
    }

    /// Products are formed over the integers and reduced once at the end.
    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let (a, da) = self.int_parts();
        let (b, db) = o.int_parts();
        let mut out = vec![Z::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let den = da * db;
        UPoly::new(out.into_iter().map(|c| Q::new(c, den.clone())).collect())
    }

    /// Integer coefficients and the common denominator.
    fn int_parts(&self) -> (Vec<Z>, Z) {
        let l = denom_lcm(&self.coeffs);
        let v = self
            .coeffs
            .iter()
            .map(|c| {
                if c.denom() == &l {
                    c.numer().clone()
                } else {
                    c.numer() * (&l / c.denom())
                }
            })
            .collect();
        (v, l)
    }

    pub fn pow(&self, k: u32) -> UPoly {
        let mut acc = UPoly::constant(Q::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Polynomial composition `self(inner(x))`.
    pub fn compose(&self, inner: &UPoly) -> UPoly {
        let mut acc = UPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&UPoly::constant(c.clone()));
        }
        acc
    }

    /// Pseudo-division over the integers: `L^s a = q b + r` with `L` the
    /// leading coefficient of `b`.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let (mut r, da) = self.int_parts();
        let (b, db) = d.int_parts();
        let lead = b[dd].clone();
        let mut quo = vec![Z::zero(); r.len() - dd];
        let mut scale = Z::one();
        for k in (0..quo.len()).rev() {
            let c = r[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            if !lead.is_one() {
                for x in r.iter_mut().chain(quo.iter_mut()) {
                    if !x.is_zero() {
                        *x *= &lead;
                    }
                }
                scale *= &lead;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    r[k + j] -= &c * y;
                }
            }
            quo[k] += c;
        }
        r.truncate(dd);
        // a/da = (quo db / (scale da)) (b/db) + r / (scale da)
        let den = scale * da;
        let q_out = quo
            .into_iter()
            .map(|c| Q::new(c * &db, den.clone()))
            .collect();
        let r_out = r.into_iter().map(|c| Q::new(c, den.clone())).collect();
        (UPoly::new(q_out), UPoly::new(r_out))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.div_rem(d).1
    }

    /// Positive rational multiple with coprime integer coefficients.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let l = denom_lcm(&self.coeffs);
        let ints: Vec<Z> = self
            .coeffs
            .iter()
            .map(|c| (c * qz(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(Z::zero(), |a, b| a.gcd(b));
        UPoly::new(ints.into_iter().map(|c| qz(c / &g)).collect())
    }

    /// Primitive with positive leading coefficient.
    pub fn normalized(&self) -> UPoly {
        let p = self.primitive();
        if p.lead().is_negative() {
            p.scale(&-Q::one())
        } else {
            p
        }
    }

    /// Primitive remainder sequence over the integers.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let mut a = self.integer_coeffs();
        let mut b = o.integer_coeffs();
        if a.len() < b.len() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = primitive_z(prem(&a, &b).0);
            a = b;
            b = r;
        }
        UPoly::new(a.into_iter().map(qz).collect()).normalized()
    }

    pub fn squarefree(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.normalized();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.normalized()
    }

    pub fn integer_coeffs(&self) -> Vec<Z> {
        self.primitive().coeffs.iter().map(|c| c.to_integer()).collect()
    }

    /// Canonical Sturm sequence (members rescaled by positive constants).
    pub fn sturm(&self) -> Vec<UPoly> {
        let mut seq = vec![self.primitive(), self.derivative().primitive()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let a: Vec<Z> = seq[n - 2].coeffs.iter().map(|c| c.to_integer()).collect();
            let b: Vec<Z> = seq[n - 1].coeffs.iter().map(|c| c.to_integer()).collect();
            let (r, positive) = prem(&a, &b);
            if r.is_empty() {
                break;
            }
            let r = primitive_z(r);
            let r = if positive { r.into_iter().map(|c| -c).collect() } else { r };
            seq.push(UPoly::new(r.into_iter().map(qz).collect()));
        }
        seq
    }

    /// Upper bound (a power of two) on the absolute value of every root.
    pub fn root_bound(&self) -> Q {
        let lead = self.lead().abs();
        let mut m = Q::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let v = c.abs() / &lead;
            if v > m {
                m = v;
            }
        }
        let b = m + Q::one();
        let mut p = Q::one();
        while p <= b {
            p *= q(2);
        }
        p
    }

    /// Isolate all real roots. The polynomial must be non-zero.
    pub fn real_roots(&self) -> Vec<RootLoc> {
        self.squarefree().isolate()
    }

    /// Root isolation for a square-free polynomial.
    fn isolate(&self) -> Vec<RootLoc> {
        let p = self;
        if p.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let sturm = p.sturm();
        let b = p.root_bound();
        let lo = -b.clone();
        let mut out = Vec::new();
        let mut stack = vec![(lo.clone(), b.clone(), count_in(&sturm, &lo, &b))];
        while let Some((a, c, n)) = stack.pop() {
            if n == 0 {
                continue;
            }
            if n == 1 {
                if p.sign_at(&c) == 0 {
                    out.push(RootLoc::Exact(c));
                    continue;
                }
                if p.sign_at(&a) != 0 {
                    out.push(RootLoc::Open(a, c));
                    continue;
                }
            }
            let mid = (&a + &c) / q(2);
            let left = count_in(&sturm, &a, &mid);
            stack.push((mid.clone(), c, n - left));
            stack.push((a, mid, left));
        }
        out.sort_by(|x, y| x.lower().cmp(&y.lower()));
        out
    }
}

/// Pseudo-remainder `lead(b)^k * a mod b` of integer coefficient vectors,
/// with whether the factor `lead(b)^k` is positive.
fn prem(a: &[Z], b: &[Z]) -> (Vec<Z>, bool) {
    let mut r = a.to_vec();
    let lb = b.last().expect("non-zero divisor");
    let mut steps = 0u32;
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, c) in b.iter().enumerate() {
            r[k + j] -= &lr * c;
        }
        steps += 1;
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    (r, !lb.is_negative() || steps % 2 == 0)
}

fn primitive_z(mut v: Vec<Z>) -> Vec<Z> {
    let g = v.iter().fold(Z::zero(), |a, b| a.gcd(b));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

pub fn sign(x: &Q) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(seq: &[UPoly], x: &Q) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for p in seq {
        let s = p.sign_at(x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Number of distinct roots in the half-open interval `(a, b]`.
pub fn count_in(sturm: &[UPoly], a: &Q, b: &Q) -> usize {
    variations(sturm, a).saturating_sub(variations(sturm, b))
}

/// Location of one real root of a square-free polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootLoc {
    Exact(Q),
    /// Open interval with non-vanishing endpoints and exactly one root.
    Open(Q, Q),
}

impl RootLoc {
    pub fn lower(&self) -> Q {
        match self {
            RootLoc::Exact(x) | RootLoc::Open(x, _) => x.clone(),
        }
    }

    pub fn upper(&self) -> Q {
        match self {
            RootLoc::Exact(x) | RootLoc::Open(_, x) => x.clone(),
        }
    }

    pub fn width(&self) -> Q {
        self.upper() - self.lower()
    }

    pub fn midpoint(&self) -> Q {
        (self.lower() + self.upper()) / q(2)
    }

    /// One bisection step, keeping the root of `p` inside.
    pub fn bisect(&mut self, p: &UPoly) {
        if let RootLoc::Open(a, b) = self {
            let mid = (&*a + &*b) / q(2);
            let sm = p.sign_at(&mid);
            if sm == 0 {
                *self = RootLoc::Exact(mid);
                return;
            }
            if sm == p.sign_at(a) {
                *a = mid;
            } else {
                *b = mid;
            }
        }
    }
}

/// Closed rational interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Q,
    pub hi: Q,
}

impl Interval {
    pub fn point(x: Q) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn new(lo: Q, hi: Q) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        Interval::new(lo, hi)
    }

    pub fn scale(&self, c: &Q) -> Interval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            Interval::new(a, b)
        } else {
            Interval::new(b, a)
        }
    }

    /// Interval Horner evaluation of `p` over this interval.
    /// Runs in integers over the common denominator of `p` and the ends.
    pub fn eval(&self, p: &UPoly) -> Interval {
        if p.is_zero() {
            return Interval::point(Q::zero());
        }
        let l = denom_lcm(p.coeffs());
        let d = self.lo.denom().lcm(self.hi.denom());
        let a = (&self.lo * qz(d.clone())).to_integer();
        let b = (&self.hi * qz(d.clone())).to_integer();
        let (mut lo, mut hi) = (Z::zero(), Z::zero());
        let mut dpow = Z::one();
        for c in p.coeffs().iter().rev() {
            let c = (c * qz(l.clone())).to_integer() * &dpow;
            let prods = [&lo * &a, &lo * &b, &hi * &a, &hi * &b];
            lo = prods.iter().min().unwrap() + &c;
            hi = prods.iter().max().unwrap() + &c;
            dpow *= &d;
        }
        let scale = qz(l) * qz(dpow / &d);
        Interval::new(qz(lo) / &scale, qz(hi) / &scale)
    }
}

/// A real algebraic number: a root of a square-free integer polynomial,
/// pinned down by an isolating interval.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    poly: UPoly,
    loc: RootLoc,
}

impl AlgebraicReal {
    pub fn rational(x: Q) -> Self {
        AlgebraicReal {
            poly: UPoly::linear_root(&x),
            loc: RootLoc::Exact(x),
        }
    }

    pub fn integer(n: i64) -> Self {
        AlgebraicReal::rational(q(n))
    }

    /// `poly` need not be square-free; `loc` must isolate a root of it.
    pub fn from_root(poly: &UPoly, loc: RootLoc) -> Self {
        match loc {
            RootLoc::Exact(x) => AlgebraicReal::rational(x),
            RootLoc::Open(a, b) => {
                let p = poly.squarefree();
                // A root of a rational linear factor collapses to a rational.
                let mut r = AlgebraicReal {
                    poly: p,
                    loc: RootLoc::Open(a, b),
                };
                r.simplify();
                r
            }
        }
    }

    /// All real roots of `poly`, increasing.
    pub fn roots_of(poly: &UPoly) -> Vec<AlgebraicReal> {
        let p = poly.squarefree();
        p.isolate()
            .into_iter()
            .map(|loc| match loc {
                RootLoc::Exact(x) => AlgebraicReal::rational(x),
                loc => {
                    let mut r = AlgebraicReal { poly: p.clone(), loc };
                    r.simplify();
                    r
                }
            })
            .collect()
    }

    fn simplify(&mut self) {
        if self.poly.degree() == Some(1) {
            let c = &self.poly.coeffs()[0];
            let x = -(c / self.poly.lead());
            self.loc = RootLoc::Exact(x.clone());
            self.poly = UPoly::linear_root(&x);
            return;
        }
        // A rational root p/q of a primitive integer polynomial has q | lead,
        // so lead * x is an integer; test the integers left in the interval.
        let lead = Q::from(self.poly.integer_coeffs().last().cloned().unwrap_or_else(Z::one)).abs();
        let target = Q::new(Z::one(), Z::from(2)) / &lead;
        self.refine_to(&target);
        if let RootLoc::Open(a, b) = &self.loc {
            let lo = (a * &lead).ceil().to_integer();
            let hi = (b * &lead).floor().to_integer();
            let mut k = lo;
            while k <= hi {
                let x = Q::new(k.clone(), Z::one()) / &lead;
                if self.poly.eval(&x).is_zero() {
                    *self = AlgebraicReal::rational(x);
                    return;
                }
                k += 1;
            }
        } else if let RootLoc::Exact(x) = &self.loc {
            *self = AlgebraicReal::rational(x.clone());
        }
    }

    pub fn poly(&self) -> &UPoly {
        &self.poly
    }

    pub fn loc(&self) -> &RootLoc {
        &self.loc
    }

    pub fn as_rational(&self) -> Option<&Q> {
        match &self.loc {
            RootLoc::Exact(x) => Some(x),
            RootLoc::Open(..) => None,
        }
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.loc.lower(), self.loc.upper())
    }

    pub fn refine(&mut self) {
        self.loc.bisect(&self.poly);
    }

    /// Shrink the isolating interval below `width`.
    pub fn refine_to(&mut self, width: &Q) {
        while self.loc.width() > *width {
            self.refine();
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mut c = self.clone();
        let target = Q::new(Z::one(), Z::one() << 60usize);
        let rel = c.loc.midpoint().abs() * &target;
        c.refine_to(&core::cmp::max(rel, target));
        crate::arith::to_f64(&c.loc.midpoint())
    }

    pub fn neg(&self) -> AlgebraicReal {
        let coeffs: Vec<Q> = self
            .poly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        let loc = match &self.loc {
            RootLoc::Exact(x) => RootLoc::Exact(-x.clone()),
            RootLoc::Open(a, b) => RootLoc::Open(-b.clone(), -a.clone()),
        };
        AlgebraicReal {
            poly: UPoly::new(coeffs).normalized(),
            loc,
        }
    }

    pub fn sign(&self) -> i8 {
        match self.cmp(&AlgebraicReal::integer(0)) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    /// Decimal rendering with `digits` places after the point.
    pub fn decimal(&self, digits: u32) -> String {
        let mut c = self.clone();
        let scale = Z::from(10u32).pow(digits);
        let w = Q::new(Z::one(), &scale * Z::from(4));
        c.refine_to(&w);
        q_to_decimal(&c.loc.midpoint(), digits)
    }
}

/// Round a rational to `digits` decimal places.
pub fn q_to_decimal(x: &Q, digits: u32) -> String {
    use alloc::format;
    let scale = Z::from(10u32).pow(digits);
    let scaled = x * qz(scale.clone());
    let r = scaled.round().to_integer();
    let neg = r.is_negative();
    let a = r.abs();
    let (ip, fp) = a.div_rem(&scale);
    let sign = if neg && !a.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{ip}");
    }
    let mut f = format!("{fp}");
    while f.len() < digits as usize {
        f.insert(0, '0');
    }
    format!("{sign}{ip}.{f}")
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if let (RootLoc::Exact(x), RootLoc::Exact(y)) = (&a.loc, &b.loc) {
                return x.cmp(y);
            }
            let (al, ah) = (a.loc.lower(), a.loc.upper());
            let (bl, bh) = (b.loc.lower(), b.loc.upper());
            // Open endpoints never coincide with the root itself.
            let both_exact = a.loc_is_exact() && b.loc_is_exact();
            if ah < bl || (ah == bl && !both_exact) {
                return Ordering::Less;
            }
            if bh < al || (bh == al && !both_exact) {
                return Ordering::Greater;
            }
            // Overlapping: an equal root must be a common root of both polys.
            let g = a.poly.gcd(&b.poly);
            if g.degree().unwrap_or(0) > 0 {
                let lo = if al > bl { al.clone() } else { bl.clone() };
                let hi = if ah < bh { ah.clone() } else { bh.clone() };
                if a.contains_root_of(&g, &lo, &hi) && b.contains_root_of(&g, &lo, &hi) {
                    return Ordering::Equal;
                }
            }
            a.refine();
            b.refine();
        }
    }
}

impl AlgebraicReal {
    fn loc_is_exact(&self) -> bool {
        matches!(self.loc, RootLoc::Exact(_))
    }

    /// Does `g` (a divisor of our polynomial) vanish at our root, given the
    /// candidate window `[lo, hi]` intersecting our interval?
    fn contains_root_of(&self, g: &UPoly, lo: &Q, hi: &Q) -> bool {
        match &self.loc {
            RootLoc::Exact(x) => g.sign_at(x) == 0,
            RootLoc::Open(a, b) => {
                // Our open interval holds exactly one root of `poly`; `g`
                // divides `poly`, so any root of `g` inside is ours.
                let lo = if lo > a { lo.clone() } else { a.clone() };
                let hi = if hi < b { hi.clone() } else { b.clone() };
                if lo > hi {
                    return false;
                }
                let s = g.sturm();
                let mut n = count_in(&s, &lo, &hi);
                if g.sign_at(&lo) == 0 && lo > *a {
                    n += 1;
                }
                n > 0
            }
        }
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.loc {
            RootLoc::Exact(x) => f.write_str(&crate::arith::q_to_string(x)),
            RootLoc::Open(..) => f.write_str(&self.decimal(6)),
        }
    }
}
