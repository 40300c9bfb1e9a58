//! Zero-dimensional solving through the quotient algebra: multiplication
//! matrices, eliminants, a separating linear form and a rational univariate
//! representation, followed by real root isolation.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use super::groebner::{groebner_basis, normal_form_q, GPoly, Mono, MonomialOrder};
use super::Ideal;
use crate::arith::{q, Q};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::upoly::{count_in, AlgebraicReal, Interval, RootLoc, UPoly};

/// Default cap on bisection steps when deciding a sign.
pub const DEFAULT_REFINE_DEPTH: u32 = 4000;

/// The finite-dimensional algebra `Q[x]/I`.
pub struct Quotient {
    pub nvars: usize,
    pub order: MonomialOrder,
    pub gb: Vec<GPoly>,
    pub basis: Vec<Mono>,
    index: BTreeMap<Mono, usize>,
}

impl Quotient {
    pub fn new(nvars: usize, gb: Vec<GPoly>, order: MonomialOrder) -> Result<Quotient> {
        if gb.iter().any(|g| g.lm() == Mono::ONE) {
            return Ok(Quotient {
                nvars,
                order,
                gb,
                basis: Vec::new(),
                index: BTreeMap::new(),
            });
        }
        // staircase bounds from pure powers
        let mut bound = vec![None; nvars];
        for g in &gb {
            let m = g.lm();
            let support: Vec<usize> = (0..nvars).filter(|&i| m.0[i] > 0).collect();
            if support.len() == 1 {
                let i = support[0];
                let k = m.0[i];
                bound[i] = Some(bound[i].map_or(k, |b: u16| b.min(k)));
            }
        }
        if bound.iter().any(Option::is_none) {
            return Err(Error::NotZeroDimensional);
        }
        let bound: Vec<u16> = bound.into_iter().map(Option::unwrap).collect();
        let mut basis = Vec::new();
        let mut cur = Mono::ONE;
        'outer: loop {
            if !gb.iter().any(|g| g.lm().divides(&cur)) {
                basis.push(cur);
            }
            for i in 0..nvars {
                if cur.0[i] + 1 < bound[i] {
                    cur.0[i] += 1;
                    continue 'outer;
                }
                cur.0[i] = 0;
            }
            break;
        }
        basis.sort_by(|a, b| order.cmp(a, b));
        let index = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        Ok(Quotient {
            nvars,
            order,
            gb,
            basis,
            index,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn coords(&self, nf: &[(Mono, Q)]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        for (m, c) in nf {
            v[self.index[m]] = c.clone();
        }
        v
    }

    /// Coordinates of a polynomial in the standard-monomial basis.
    pub fn vector_of(&self, p: &Poly) -> Vec<Q> {
        let f: BTreeMap<Mono, Q> = p
            .terms()
            .map(|(e, c)| (Mono::from_exps(e), c.clone()))
            .collect();
        self.coords(&normal_form_q(&f, &self.gb, self.order))
    }

    /// Matrix of multiplication by `x_k`; column `j` is the image of basis
    /// element `j`.
    pub fn mult_matrix(&self, k: usize) -> Vec<Vec<Q>> {
        let n = self.dim();
        let mut cols = Vec::with_capacity(n);
        for b in &self.basis {
            let m = b.mul(&Mono::var(k, 1));
            let col = match self.index.get(&m) {
                Some(&i) => {
                    let mut v = vec![Q::zero(); n];
                    v[i] = Q::one();
                    v
                }
                None => {
                    let mut f = BTreeMap::new();
                    f.insert(m, Q::one());
                    self.coords(&normal_form_q(&f, &self.gb, self.order))
                }
            };
            cols.push(col);
        }
        // transpose to rows
        (0..n)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect()
    }

    /// Vector of the unit element.
    pub fn one(&self) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[self.index[&Mono::ONE]] = Q::one();
        v
    }
}

fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .map(|(a, b)| a * b)
                .sum()
        })
        .collect()
}

/// Incremental echelon form of Krylov vectors, tracking each row as a
/// combination of the powers `A^k v`.
struct Krylov {
    rows: Vec<(Vec<Q>, Vec<Q>, usize)>,
}

impl Krylov {
    /// Reduce `v` (which equals `sum comb_k A^k v0`) against the rows.
    fn reduce(&self, mut v: Vec<Q>, mut comb: Vec<Q>) -> (Vec<Q>, Vec<Q>) {
        for (bv, bc, piv) in &self.rows {
            if !v[*piv].is_zero() {
                let f = v[*piv].clone() / &bv[*piv];
                for (x, y) in v.iter_mut().zip(bv) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
                if comb.len() < bc.len() {
                    comb.resize(bc.len(), Q::zero());
                }
                for (x, y) in comb.iter_mut().zip(bc) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        (v, comb)
    }
}

/// Minimal polynomial of the operator `m` on the cyclic subspace of `v0`,
/// with the echelon data of the Krylov space.
fn krylov_min_poly(m: &[Vec<Q>], v0: &[Q]) -> (UPoly, Krylov) {
    let mut k = Krylov { rows: Vec::new() };
    let mut v = v0.to_vec();
    let mut deg = 0;
    loop {
        let mut comb = vec![Q::zero(); deg + 1];
        comb[deg] = Q::one();
        let (r, c) = k.reduce(v.clone(), comb);
        match r.iter().position(|x| !x.is_zero()) {
            Some(piv) => k.rows.push((r, c, piv)),
            None => return (UPoly::new(c), k),
        }
        v = mat_vec(m, &v);
        deg += 1;
    }
}

/// `p(m) v` by Horner's rule.
fn poly_apply(m: &[Vec<Q>], p: &UPoly, v: &[Q]) -> Vec<Q> {
    let mut acc = vec![Q::zero(); v.len()];
    for c in p.coeffs().iter().rev() {
        acc = mat_vec(m, &acc);
        if !c.is_zero() {
            for (a, x) in acc.iter_mut().zip(v) {
                if !x.is_zero() {
                    *a += c * x;
                }
            }
        }
    }
    acc
}

/// Reduced row echelon basis of a subspace, used to project onto the
/// quotient by that subspace.
struct Echelon {
    dim: usize,
    rows: Vec<(Vec<Q>, usize)>,
}

impl Echelon {
    fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new() }
    }

    fn reduce(&self, mut v: Vec<Q>) -> Vec<Q> {
        for (row, piv) in &self.rows {
            if !v[*piv].is_zero() {
                let f = v[*piv].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        v
    }

    fn insert(&mut self, v: Vec<Q>) {
        let mut v = self.reduce(v);
        let Some(piv) = v.iter().position(|x| !x.is_zero()) else {
            return;
        };
        let inv = Q::one() / &v[piv];
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (row, _) in self.rows.iter_mut() {
            if !row[piv].is_zero() {
                let f = row[piv].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        self.rows.push((v, piv));
    }

    /// Coordinates outside the pivot columns.
    fn free(&self) -> Vec<usize> {
        (0..self.dim)
            .filter(|j| !self.rows.iter().any(|(_, p)| p == j))
            .collect()
    }

    fn project(&self, v: Vec<Q>, free: &[usize]) -> Vec<Q> {
        let v = self.reduce(v);
        free.iter().map(|&j| v[j].clone()).collect()
    }
}

const PRIME: u64 = (1 << 61) - 1;

fn mul_p(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_p(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_p(acc, a);
        }
        a = mul_p(a, a);
        e >>= 1;
    }
    acc
}

fn inv_p(a: u64) -> u64 {
    pow_p(a, PRIME - 2)
}

fn reduce_p(x: &Q) -> Option<u64> {
    let p = num_bigint::BigInt::from(PRIME);
    let modp = |z: &num_bigint::BigInt| {
        let r = z % &p;
        let r = if r < num_bigint::BigInt::zero() { r + &p } else { r };
        u64::try_from(r).expect("reduced below the prime")
    };
    let d = modp(x.denom());
    (d != 0).then(|| mul_p(modp(x.numer()), inv_p(d)))
}

/// Dimension of the Krylov space of `v` under `m`, modulo a large prime.
/// `None` when a denominator vanishes modulo the prime.
fn krylov_dim_mod_p(m: &[Vec<Q>], v: &[Q]) -> Option<usize> {
    let mp: Vec<Vec<u64>> = m
        .iter()
        .map(|row| row.iter().map(reduce_p).collect::<Option<_>>())
        .collect::<Option<_>>()?;
    let mut cur: Vec<u64> = v.iter().map(reduce_p).collect::<Option<_>>()?;
    let mut rows: Vec<(Vec<u64>, usize)> = Vec::new();
    loop {
        let mut r = cur.clone();
        for (b, piv) in &rows {
            if r[*piv] != 0 {
                let f = r[*piv];
                for (x, y) in r.iter_mut().zip(b) {
                    *x = (*x + PRIME - mul_p(f, *y)) % PRIME;
                }
            }
        }
        let Some(piv) = r.iter().position(|&x| x != 0) else {
            return Some(rows.len());
        };
        let inv = inv_p(r[piv]);
        for x in r.iter_mut() {
            *x = mul_p(*x, inv);
        }
        rows.push((r, piv));
        cur = mp
            .iter()
            .map(|row| row.iter().zip(&cur).fold(0, |acc, (a, b)| (acc + mul_p(*a, *b)) % PRIME))
            .collect();
    }
}

fn lin_comb_matrix(ms: &[Vec<Vec<Q>>], cs: &[Q]) -> Vec<Vec<Q>> {
    let n = ms[0].len();
    let mut out = vec![vec![Q::zero(); n]; n];
    for (m, c) in ms.iter().zip(cs) {
        if c.is_zero() {
            continue;
        }
        for i in 0..n {
            for j in 0..n {
                if !m[i][j].is_zero() {
                    out[i][j] += &m[i][j] * c;
                }
            }
        }
    }
    out
}

/// `p(g_1(u), .., g_n(u)) mod m`.
pub fn compose_mod(p: &Poly, g: &[UPoly], m: &UPoly) -> UPoly {
    let mut powers: Vec<Vec<UPoly>> = g.iter().map(|x| vec![UPoly::constant(Q::one()), x.clone()]).collect();
    let mut acc = UPoly::zero();
    for (e, c) in p.terms() {
        let mut t = UPoly::constant(c.clone());
        for (i, &k) in e.iter().enumerate() {
            if k == 0 {
                continue;
            }
            while powers[i].len() <= k as usize {
                let next = powers[i].last().unwrap().mul(&g[i]).rem(m);
                powers[i].push(next);
            }
            t = t.mul(&powers[i][k as usize]).rem(m);
        }
        acc = acc.add(&t);
    }
    acc.rem(m)
}

/// A real point of a zero-dimensional variety, given by a rational
/// univariate representation `x_k = g_k(theta)` with `m_u(theta) = 0`.
#[derive(Clone, Debug)]
pub struct AlgebraicPoint {
    /// Square-free polynomial of the separating element.
    pub m_u: UPoly,
    pub theta: RootLoc,
    pub reps: Vec<UPoly>,
    /// Per coordinate: square-free eliminant and isolating interval.
    pub coords: Vec<AlgebraicReal>,
    /// The point has multiplicity above one in the original ideal.
    pub multiple: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: i8) -> Sign {
        match x.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

/// A residue in `Q[u]/(m_u)` with the Sturm sequence of `gcd(h, m_u)`,
/// reusable across all points sharing `m_u`.
#[derive(Clone, Debug)]
pub struct PreparedResidue {
    pub h: UPoly,
    common: Option<Vec<UPoly>>,
}

impl PreparedResidue {
    pub fn new(h: UPoly, m_u: &UPoly) -> Self {
        let common = if h.is_zero() {
            None
        } else {
            let g = h.gcd(m_u);
            (g.degree().unwrap_or(0) > 0).then(|| g.sturm())
        };
        PreparedResidue { h, common }
    }
}

impl AlgebraicPoint {
    pub fn nvars(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates as rationals, if all are rational.
    pub fn rational_coords(&self) -> Option<Vec<Q>> {
        self.coords.iter().map(|c| c.as_rational().cloned()).collect()
    }

    /// A point with rational coordinates.
    pub fn rational(x: &[Q]) -> AlgebraicPoint {
        AlgebraicPoint {
            m_u: UPoly::x(),
            theta: RootLoc::Exact(Q::zero()),
            reps: x.iter().map(|c| UPoly::constant(c.clone())).collect(),
            coords: x.iter().map(|c| AlgebraicReal::rational(c.clone())).collect(),
            multiple: false,
        }
    }

    /// `p(x)` as an element of `Q[u]/(m_u)`.
    pub fn residue(&self, p: &Poly) -> UPoly {
        compose_mod(p, &self.reps, &self.m_u)
    }

    /// Does the residue `h` vanish at this point?
    pub fn residue_is_zero(&self, h: &UPoly) -> bool {
        self.prepared_is_zero(&self.prepare(h))
    }

    /// Exact sign of a residue at this point.
    pub fn sign_of_residue(&self, h: &UPoly, max_depth: u32) -> Result<Sign> {
        self.prepared_sign(&self.prepare(h), max_depth)
    }

    fn prepare(&self, h: &UPoly) -> PreparedResidue {
        match self.theta {
            RootLoc::Exact(_) => PreparedResidue {
                h: h.clone(),
                common: None,
            },
            RootLoc::Open(..) => PreparedResidue::new(h.clone(), &self.m_u),
        }
    }

    /// As [`Self::residue_is_zero`], for a residue prepared against this
    /// point's `m_u`.
    pub fn prepared_is_zero(&self, r: &PreparedResidue) -> bool {
        if r.h.is_zero() {
            return true;
        }
        match (&self.theta, &r.common) {
            (RootLoc::Exact(t), _) => r.h.eval(t).is_zero(),
            (RootLoc::Open(..), None) => false,
            (RootLoc::Open(a, b), Some(sturm)) => count_in(sturm, a, b) > 0,
        }
    }

    pub fn prepared_sign(&self, r: &PreparedResidue, max_depth: u32) -> Result<Sign> {
        if self.prepared_is_zero(r) {
            return Ok(Sign::Zero);
        }
        let h = &r.h;
        let mut theta = self.theta.clone();
        for _ in 0..=max_depth {
            let iv = match &theta {
                RootLoc::Exact(t) => return Ok(Sign::of(crate::upoly::sign(&h.eval(t)))),
                RootLoc::Open(a, b) => Interval::new(a.clone(), b.clone()).eval(h),
            };
            if !iv.contains_zero() {
                return Ok(if iv.lo > Q::zero() {
                    Sign::Positive
                } else {
                    Sign::Negative
                });
            }
            theta.bisect(&self.m_u);
        }
        Err(Error::Undecided {
            depth: max_depth,
            context: format!("sign of a residue of degree {:?}", h.degree()),
        })
    }

    /// Exact value of `p` at this point.
    pub fn value(&self, p: &Poly) -> Result<AlgebraicReal> {
        let h = self.residue(p);
        if let RootLoc::Exact(t) = &self.theta {
            return Ok(AlgebraicReal::rational(h.eval(t)));
        }
        if h.degree().unwrap_or(0) == 0 {
            return Ok(AlgebraicReal::rational(h.coeffs().first().cloned().unwrap_or_else(Q::zero)));
        }
        let ann = annihilator(&h, &self.m_u);
        let roots = AlgebraicReal::roots_of(&ann);
        select_root(roots, &self.theta, &self.m_u, &h, DEFAULT_REFINE_DEPTH)
    }
}

/// Values of `p` at several points. Points sharing one representation
/// share the annihilator and its root isolation.
pub fn values_at(points: &[AlgebraicPoint], p: &Poly) -> Result<Vec<AlgebraicReal>> {
    let Some(first) = points.first() else {
        return Ok(Vec::new());
    };
    if points.iter().any(|x| x.m_u != first.m_u || x.reps != first.reps) {
        return points.iter().map(|x| x.value(p)).collect();
    }
    let mut terms = p.terms();
    if let (Some((e, c)), None) = (terms.next(), terms.next()) {
        if c.is_one() && e.iter().sum::<u32>() == 1 {
            let k = e.iter().position(|&x| x == 1).unwrap();
            if points.iter().all(|x| x.coords.len() == x.nvars()) {
                return Ok(points.iter().map(|x| x.coords[k].clone()).collect());
            }
        }
    }
    let h = first.residue(p);
    if h.degree().unwrap_or(0) == 0 {
        let c = h.coeffs().first().cloned().unwrap_or_else(Q::zero);
        return Ok(vec![AlgebraicReal::rational(c); points.len()]);
    }
    let mut roots: Option<Vec<AlgebraicReal>> = None;
    points
        .iter()
        .map(|x| match &x.theta {
            RootLoc::Exact(t) => Ok(AlgebraicReal::rational(h.eval(t))),
            theta => {
                let rs = roots
                    .get_or_insert_with(|| AlgebraicReal::roots_of(&annihilator(&h, &x.m_u)))
                    .clone();
                select_root(rs, theta, &x.m_u, &h, DEFAULT_REFINE_DEPTH)
            }
        })
        .collect()
}

/// Polynomial vanishing at `h(theta)` for every root `theta` of `m`.
fn annihilator(h: &UPoly, m: &UPoly) -> UPoly {
    let d = m.degree().unwrap();
    let to_vec = |p: &UPoly| {
        let mut v = p.coeffs().to_vec();
        v.resize(d, Q::zero());
        v
    };
    let mut k = Krylov { rows: Vec::new() };
    let mut pow = UPoly::constant(Q::one());
    let mut deg = 0;
    loop {
        let mut comb = vec![Q::zero(); deg + 1];
        comb[deg] = Q::one();
        let (r, c) = k.reduce(to_vec(&pow), comb);
        match r.iter().position(|x| !x.is_zero()) {
            Some(piv) => k.rows.push((r, c, piv)),
            None => return UPoly::new(c).squarefree(),
        }
        pow = pow.mul(h).rem(m);
        deg += 1;
    }
}

/// Pick the root of a candidate list equal to `h(theta)`.
fn select_root(
    mut roots: Vec<AlgebraicReal>,
    theta: &RootLoc,
    m: &UPoly,
    h: &UPoly,
    max_depth: u32,
) -> Result<AlgebraicReal> {
    let mut theta = theta.clone();
    for _ in 0..max_depth {
        let iv = match &theta {
            RootLoc::Exact(t) => Interval::point(h.eval(t)),
            RootLoc::Open(a, b) => Interval::new(a.clone(), b.clone()).eval(h),
        };
        let hits: Vec<usize> = roots
            .iter()
            .enumerate()
            .filter(|(_, r)| {
                let ri = r.interval();
                ri.lo <= iv.hi && iv.lo <= ri.hi
            })
            .map(|(i, _)| i)
            .collect();
        if hits.len() == 1 {
            return Ok(roots.swap_remove(hits[0]));
        }
        theta.bisect(m);
        for i in hits {
            roots[i].refine();
        }
    }
    Err(Error::Undecided {
        depth: max_depth,
        context: "identifying a coordinate value".into(),
    })
}

/// Certified real solutions of a zero-dimensional ideal.
pub fn solve_zero_dim(ideal: &Ideal, pair_cap: usize) -> Result<Vec<AlgebraicPoint>> {
    let n = ideal.nvars;
    if ideal.gens.iter().all(Poly::is_zero) {
        return Err(Error::NotZeroDimensional);
    }
    let order = MonomialOrder::DegRevLex;
    let gb = groebner_basis(&ideal.gens, order, pair_cap)?;
    let quo = Quotient::new(n, gb, order)?;
    if quo.dim() == 0 {
        return Ok(Vec::new());
    }
    let mults: Vec<Vec<Vec<Q>>> = (0..n).map(|k| quo.mult_matrix(k)).collect();
    let one = quo.one();
    let raw: Vec<UPoly> = mults.iter().map(|m| krylov_min_poly(m, &one).0).collect();
    let elims: Vec<UPoly> = raw.iter().map(UPoly::squarefree).collect();

    // radical: quotient by the ideal generated by the square-free
    // eliminants, which is the image of the operators e_k(M_k)
    let mut red = Echelon::new(quo.dim());
    for ((m, e), full) in mults.iter().zip(&elims).zip(&raw) {
        if full.degree() == e.degree() {
            continue;
        }
        for j in 0..quo.dim() {
            let mut v = vec![Q::zero(); quo.dim()];
            v[j] = Q::one();
            red.insert(poly_apply(m, e, &v));
        }
    }
    let free = red.free();
    let rmults: Vec<Vec<Vec<Q>>> = mults
        .iter()
        .map(|m| {
            let cols: Vec<Vec<Q>> = free
                .iter()
                .map(|&j| red.project(m.iter().map(|row| row[j].clone()).collect(), &free))
                .collect();
            (0..free.len())
                .map(|i| cols.iter().map(|c| c[i].clone()).collect())
                .collect()
        })
        .collect();
    let rone = red.project(one.clone(), &free);
    let dim = free.len();

    // separating linear form
    let mut chosen = None;
    const CANDIDATES: [i64; 15] = [0, 1, 2, -1, 3, -2, 5, -3, 7, 11, -5, 13, 17, 19, 23];
    for (ci, c) in CANDIDATES.into_iter().enumerate() {
        let cs: Vec<Q> = (0..n).map(|k| q(c.pow(k as u32))).collect();
        let cs = if c == 0 {
            let mut v = vec![Q::zero(); n];
            v[0] = Q::one();
            v
        } else {
            cs
        };
        let mu = lin_comb_matrix(&rmults, &cs);
        // the Krylov dimension can only drop modulo a prime; the last candidate is always tried exactly
        let last = ci + 1 == CANDIDATES.len();
        if !last && krylov_dim_mod_p(&mu, &rone).is_some_and(|d| d < dim) {
            continue;
        }
        let (mp, kry) = krylov_min_poly(&mu, &rone);
        if mp.degree() == Some(dim) {
            chosen = Some((cs, mp, kry));
            break;
        }
    }
    let (cs, m_u, kry) = chosen.ok_or_else(|| Error::Undecided {
        depth: 0,
        context: "no separating linear form found".into(),
    })?;
    // x_k = g_k(u): express x_k * 1 in the Krylov basis
    let reps: Vec<UPoly> = rmults
        .iter()
        .map(|m| {
            let target = mat_vec(m, &rone);
            let (r, c) = kry.reduce(target, vec![Q::zero(); dim]);
            debug_assert!(r.iter().all(Zero::is_zero));
            UPoly::new(c.into_iter().map(|x| -x).collect())
        })
        .collect();
    let m_u = m_u.normalized();

    // multiplicity in the original ideal
    let mu_full = lin_comb_matrix(&mults, &cs);
    let (m_full, _) = krylov_min_poly(&mu_full, &one);
    let repeated = m_full.gcd(&m_full.derivative());

    let mut elim_roots: Vec<Option<Vec<AlgebraicReal>>> = vec![None; n];
    let mut points = Vec::new();
    for theta in m_u.real_roots() {
        let mut coords = Vec::with_capacity(n);
        for k in 0..n {
            let c = match &theta {
                RootLoc::Exact(t) => AlgebraicReal::rational(reps[k].eval(t)),
                RootLoc::Open(..) => {
                    let h = reps[k].rem(&m_u);
                    if h.degree().unwrap_or(0) == 0 {
                        AlgebraicReal::rational(h.coeffs().first().cloned().unwrap_or_else(Q::zero))
                    } else {
                        let roots = elim_roots[k]
                            .get_or_insert_with(|| AlgebraicReal::roots_of(&elims[k]))
                            .clone();
                        select_root(roots, &theta, &m_u, &h, DEFAULT_REFINE_DEPTH)?
                    }
                }
            };
            coords.push(c);
        }
        let multiple = repeated.degree().unwrap_or(0) > 0 && {
            let probe = AlgebraicPoint {
                m_u: m_u.clone(),
                theta: theta.clone(),
                reps: reps.clone(),
                coords: Vec::new(),
                multiple: false,
            };
            probe.residue_is_zero(&repeated)
        };
        points.push(AlgebraicPoint {
            m_u: m_u.clone(),
            theta,
            reps: reps.clone(),
            coords,
            multiple,
        });
    }
    points.sort_by(|a, b| a.coords.cmp(&b.coords));
    Ok(points)
}

/// Sign of `p` at `x`.
pub fn sign_of(p: &Poly, x: &AlgebraicPoint, max_depth: u32) -> Result<Sign> {
    x.sign_of_residue(&x.residue(p), max_depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qf;
    use crate::poly::parse_poly;

    fn p(s: &str, n: usize) -> Poly {
        parse_poly(s, n, "f").unwrap()
    }

    fn ideal(gens: &[&str], n: usize) -> Ideal {
        Ideal::new(n, gens.iter().map(|g| p(g, n)).collect(), MonomialOrder::Lex)
    }

    #[test]
    fn linear_system() {
        let pts = solve_zero_dim(&ideal(&["f1 + 2", "f2 - 5"], 2), 1000).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].rational_coords().unwrap(), vec![q(-2), q(5)]);
    }

    #[test]
    fn cubic_roots() {
        let pts = solve_zero_dim(&ideal(&["27*f1^3 + 10*f1^2 - 151*f1 - 49"], 1), 1000).unwrap();
        assert_eq!(pts.len(), 3);
        assert!(pts.iter().any(|x| (x.coords[0].to_f64() + 0.323628).abs() < 1e-6));
    }

    #[test]
    fn circle_meets_hyperbola() {
        // x^2 + y^2 = 4, x y = 1: four real points
        let pts = solve_zero_dim(&ideal(&["f1^2 + f2^2 - 4", "f1*f2 - 1"], 2), 1000).unwrap();
        assert_eq!(pts.len(), 4);
        for x in &pts {
            assert_eq!(sign_of(&p("f1^2 + f2^2 - 4", 2), x, 100).unwrap(), Sign::Zero);
            assert_eq!(sign_of(&p("f1*f2 - 1", 2), x, 100).unwrap(), Sign::Zero);
            assert_eq!(sign_of(&p("f1*f2", 2), x, 100).unwrap(), Sign::Positive);
        }
    }

    #[test]
    fn multiplicity_flag_and_radical() {
        let pts = solve_zero_dim(&ideal(&["f1^2", "f2 - f1 - 1"], 2), 1000).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(pts[0].multiple);
        assert_eq!(pts[0].rational_coords().unwrap(), vec![q(0), q(1)]);
    }

    #[test]
    fn positive_dimensional_rejected() {
        assert_eq!(
            solve_zero_dim(&ideal(&["f1*f2"], 2), 1000).unwrap_err(),
            Error::NotZeroDimensional
        );
    }

    #[test]
    fn signs_at_points() {
        let x = AlgebraicPoint::rational(&[q(2)]);
        assert_eq!(sign_of(&p("f1^2 - 4", 1), &x, 10).unwrap(), Sign::Zero);
        let y = AlgebraicPoint::rational(&[qf(7, 9), qf(10, 27)]);
        assert_eq!(sign_of(&p("f2 - 7/10", 2), &y, 10).unwrap(), Sign::Negative);
        // root of 27 v^2 - 196 v - 9604 near -15.58 compared with -14
        let pts = solve_zero_dim(&ideal(&["27*f1^2 - 196*f1 - 9604"], 1), 1000).unwrap();
        let low = &pts[0];
        assert_eq!(sign_of(&p("f1 + 14", 1), low, 100).unwrap(), Sign::Negative);
        let v = low.value(&p("f1", 1)).unwrap();
        assert_eq!(v.decimal(2), "-15.58");
    }
}
