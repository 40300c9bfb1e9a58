//! The ring of W-invariant elements of the weight-lattice group ring.
//!
//! Elements are stored in the orbit-sum (monomial) basis: the coefficient
//! attached to a dominant weight is the multiplicity of every weight in its
//! orbit.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{q, Q, Z};
use crate::cyclotomic::{Cyclotomic, TorsionValue};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rootdata::{RootDatum, Weight};

/// Polynomial in the fundamental characters `f_1..f_r`.
pub type FundamentalPolynomial = Poly;

/// Polynomial in `t_1..t_n`, `t_i = s_i + 1/s_i`.
pub type BranchPolynomial = Poly;

/// Default cap on the number of weights in a full orbit expansion.
pub const DEFAULT_ORBIT_CAP: u128 = 10_000_000;

#[derive(Clone, Debug)]
pub struct CharacterElement {
    datum: Arc<RootDatum>,
    terms: BTreeMap<Weight, i128>,
}

impl PartialEq for CharacterElement {
    fn eq(&self, o: &Self) -> bool {
        self.datum.name() == o.datum.name() && self.terms == o.terms
    }
}

impl Eq for CharacterElement {}

fn weight_string(w: &[i64]) -> String {
    format!("{w:?}")
}

impl CharacterElement {
    pub fn zero(datum: Arc<RootDatum>) -> Self {
        CharacterElement {
            datum,
            terms: BTreeMap::new(),
        }
    }

    /// Build from dominant weights and multiplicities.
    pub fn from_terms(
        datum: Arc<RootDatum>,
        terms: impl IntoIterator<Item = (Weight, i128)>,
    ) -> Result<Self> {
        let mut c = CharacterElement::zero(datum);
        for (w, m) in terms {
            if w.len() != c.datum.rank() || !c.datum.is_dominant(&w) {
                return Err(Error::NotDominant(weight_string(&w)));
            }
            c.add_term(w, m);
        }
        Ok(c)
    }

    /// The orbit sum `m_lambda`.
    pub fn orbit_sum(datum: Arc<RootDatum>, lambda: &[i64]) -> Result<Self> {
        Self::from_terms(datum, [(lambda.to_vec(), 1)])
    }

    pub fn one(datum: Arc<RootDatum>) -> Self {
        let r = datum.rank();
        let mut c = CharacterElement::zero(datum);
        c.add_term(vec![0; r], 1);
        c
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn datum_arc(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i128> {
        &self.terms
    }

    pub fn multiplicity(&self, w: &[i64]) -> i128 {
        let (d, _) = self.datum.dominant(w);
        self.terms.get(&d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Weight, m: i128) {
        use alloc::collections::btree_map::Entry;
        if m == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(m);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().checked_add(m).expect("multiplicity overflow");
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn same_datum(&self, o: &Self) -> Result<()> {
        if self.datum.name() != o.datum.name() || self.datum.form_scale() != o.datum.form_scale()
        {
            return Err(Error::DatumMismatch(self.datum.name(), o.datum.name()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_datum(o)?;
        let mut c = self.clone();
        for (w, m) in &o.terms {
            c.add_term(w.clone(), *m);
        }
        Ok(c)
    }

    pub fn scale(&self, k: i128) -> Self {
        let mut c = CharacterElement::zero(self.datum.clone());
        for (w, m) in &self.terms {
            c.add_term(w.clone(), m.checked_mul(k).expect("multiplicity overflow"));
        }
        c
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(-1))
    }

    /// Number of weights in the full expansion.
    pub fn support_size(&self) -> u128 {
        self.terms.keys().map(|w| self.datum.orbit_size(w)).sum()
    }

    /// `sum mult * |orbit|`.
    pub fn dimension(&self) -> i128 {
        self.terms
            .iter()
            .map(|(w, m)| m * self.datum.orbit_size(w) as i128)
            .sum()
    }

    /// Every weight with its multiplicity.
    pub fn full_expansion(&self, cap: u128) -> Result<Vec<(Weight, i128)>> {
        let n = self.support_size();
        if n > cap {
            return Err(Error::CapExceeded {
                what: "orbit expansion",
                value: n,
                cap,
            });
        }
        let mut out = Vec::with_capacity(n as usize);
        for (w, m) in &self.terms {
            self.datum.for_each_in_orbit(w, |mu| out.push((mu.to_vec(), *m)));
        }
        Ok(out)
    }

    /// Height (pairing with `rho^vee`, scaled to an integer) of the leading
    /// dominant weight.
    fn leading(&self) -> Option<(Weight, i128)> {
        let h = height_vector(&self.datum);
        self.terms
            .iter()
            .max_by_key(|(w, _)| (dot(&h, w), (*w).clone()))
            .map(|(w, m)| (w.clone(), *m))
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Integer multiple of the functional `mu -> sum_i <mu, omega_i^vee>`.
fn height_vector(d: &RootDatum) -> Vec<i64> {
    let det = q(d.fundamental_group_order());
    d.cartan_inverse()
        .iter()
        .map(|row| {
            (row.iter().sum::<Q>() * &det)
                .to_integer()
                .to_i64()
                .unwrap()
        })
        .collect()
}

/// Integer Gram matrix of `A` on fundamental weights.
fn form_ints(d: &RootDatum) -> Vec<Vec<i64>> {
    d.form_matrix()
        .iter()
        .map(|r| r.iter().map(|x| x.to_integer().to_i64().unwrap()).collect())
        .collect()
}

fn form_eval(a: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    let mut s = 0;
    for (i, &xi) in x.iter().enumerate() {
        if xi != 0 {
            s += xi * dot(&a[i], y);
        }
    }
    s
}

/// Computation context with caches for irreducibles and monomials in the
/// fundamental characters.
pub struct CharRing {
    datum: Arc<RootDatum>,
    form: Vec<Vec<i64>>,
    orbit_cap: u128,
    irreducibles: RefCell<BTreeMap<Weight, CharacterElement>>,
    monomials: RefCell<BTreeMap<Vec<u32>, CharacterElement>>,
}

impl CharRing {
    pub fn new(datum: RootDatum) -> Self {
        Self::from_arc(Arc::new(datum))
    }

    pub fn from_arc(datum: Arc<RootDatum>) -> Self {
        CharRing {
            form: form_ints(&datum),
            datum,
            orbit_cap: DEFAULT_ORBIT_CAP,
            irreducibles: RefCell::new(BTreeMap::new()),
            monomials: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn with_orbit_cap(mut self, cap: u128) -> Self {
        self.orbit_cap = cap;
        self
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn datum_arc(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn one(&self) -> CharacterElement {
        CharacterElement::one(self.datum.clone())
    }

    /// `A(mu, nu)` as an integer.
    pub fn form(&self, mu: &[i64], nu: &[i64]) -> i64 {
        form_eval(&self.form, mu, nu)
    }

    /// Irreducible character by Freudenthal's formula.
    pub fn irreducible(&self, lambda: &[i64]) -> Result<CharacterElement> {
        let d = &self.datum;
        if lambda.len() != d.rank() || !d.is_dominant(lambda) {
            return Err(Error::NotDominant(weight_string(lambda)));
        }
        if let Some(c) = self.irreducibles.borrow().get(lambda) {
            return Ok(c.clone());
        }
        let c = self.freudenthal(lambda);
        self.irreducibles
            .borrow_mut()
            .insert(lambda.to_vec(), c.clone());
        Ok(c)
    }

    pub fn fundamental(&self, i: usize) -> CharacterElement {
        self.irreducible(&self.datum.fundamental_weight(i))
            .expect("fundamental weights are dominant")
    }

    /// Dominant weights below `lambda`, in order of increasing depth.
    pub fn dominant_weights_below(&self, lambda: &[i64]) -> Vec<Weight> {
        let d = &self.datum;
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        seen.insert(lambda.to_vec());
        let mut out = vec![lambda.to_vec()];
        let mut layer = vec![lambda.to_vec()];
        // BFS by depth: differences are sums of positive roots, and each
        // dominant weight below lambda is reached through dominant weights.
        let mut by_depth: BTreeMap<i64, Vec<Weight>> = BTreeMap::new();
        let h = height_vector(d);
        let top = dot(&h, lambda);
        while !layer.is_empty() {
            let mut next = Vec::new();
            for mu in &layer {
                for beta in d.positive_roots() {
                    let nu: Weight = mu.iter().zip(beta).map(|(a, b)| a - b).collect();
                    if d.is_dominant(&nu) && seen.insert(nu.clone()) {
                        next.push(nu);
                    }
                }
            }
            for w in &next {
                by_depth.entry(top - dot(&h, w)).or_default().push(w.clone());
            }
            layer = next;
        }
        for (_, mut ws) in by_depth {
            ws.sort();
            out.extend(ws);
        }
        out
    }

    fn freudenthal(&self, lambda: &[i64]) -> CharacterElement {
        let d = &self.datum;
        let rho = d.rho();
        let lr: Weight = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let top = self.form(&lr, &lr) as i128;
        let mut mult: BTreeMap<Weight, i128> = BTreeMap::new();
        for mu in self.dominant_weights_below(lambda) {
            if mu == lambda {
                mult.insert(mu, 1);
                continue;
            }
            let mut num: i128 = 0;
            for beta in d.positive_roots() {
                let mut nu = mu.clone();
                loop {
                    for (x, b) in nu.iter_mut().zip(beta) {
                        *x += b;
                    }
                    let m = match mult.get(&d.dominant(&nu).0) {
                        Some(&m) => m,
                        None => break,
                    };
                    num += m * self.form(&nu, beta) as i128;
                }
            }
            let mr: Weight = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
            let den = top - self.form(&mr, &mr) as i128;
            let m = 2 * num / den;
            debug_assert_eq!(2 * num % den, 0);
            if m != 0 {
                mult.insert(mu, m);
            }
        }
        CharacterElement {
            datum: d.clone(),
            terms: mult,
        }
    }

    /// Product in the invariant ring.
    pub fn multiply(&self, a: &CharacterElement, b: &CharacterElement) -> Result<CharacterElement> {
        a.same_datum(b)?;
        if a.is_zero() || b.is_zero() {
            return Ok(CharacterElement::zero(self.datum.clone()));
        }
        // Expand the factor with the smaller support.
        let (small, big) = if a.support_size() <= b.support_size() {
            (a, b)
        } else {
            (b, a)
        };
        let d = &self.datum;
        let full = small.full_expansion(self.orbit_cap)?;
        let mut acc: BTreeMap<Weight, i128> = BTreeMap::new();
        let mut buf = vec![0i64; d.rank()];
        for (nu, bm) in &big.terms {
            let nu_orbit = d.orbit_size(nu) as i128;
            for (mu, am) in &full {
                for ((x, m), n) in buf.iter_mut().zip(mu).zip(nu) {
                    *x = m + n;
                }
                let (lam, _) = d.dominant(&buf);
                let e = acc.entry(lam).or_insert(0);
                *e += am * bm * nu_orbit;
            }
        }
        let mut out = CharacterElement::zero(d.clone());
        for (lam, v) in acc {
            let s = d.orbit_size(&lam) as i128;
            debug_assert_eq!(v % s, 0);
            out.add_term(lam, v / s);
        }
        Ok(out)
    }

    /// `prod f_i^{e_i}` expanded, cached.
    pub fn fundamental_monomial(&self, e: &[u32]) -> Result<CharacterElement> {
        if let Some(c) = self.monomials.borrow().get(e) {
            return Ok(c.clone());
        }
        let c = match e.iter().position(|&x| x > 0) {
            None => self.one(),
            Some(i) => {
                let mut rest = e.to_vec();
                rest[i] -= 1;
                let r = self.fundamental_monomial(&rest)?;
                self.multiply(&r, &self.fundamental(i))?
            }
        };
        self.monomials.borrow_mut().insert(e.to_vec(), c.clone());
        Ok(c)
    }

    /// Express `c` as a polynomial in the fundamental characters.
    pub fn to_fundamental_polynomial(&self, c: &CharacterElement) -> Result<FundamentalPolynomial> {
        let r = self.rank();
        let mut rest = c.clone();
        let mut out = Poly::zero(r);
        while let Some((lam, m)) = rest.leading() {
            let e: Vec<u32> = lam.iter().map(|&x| x as u32).collect();
            let mono = self.fundamental_monomial(&e)?;
            rest = rest.sub(&mono.scale(m))?;
            out.add_term(e, Q::from(Z::from(m)));
        }
        Ok(out)
    }

    /// Expand a polynomial in the fundamental characters. Coefficients must
    /// produce integral multiplicities.
    pub fn expand(&self, p: &FundamentalPolynomial) -> Result<CharacterElement> {
        let den = crate::arith::denom_lcm(p.terms().map(|(_, c)| c));
        let mut acc = CharacterElement::zero(self.datum.clone());
        for (e, c) in p.terms() {
            let k = (c * Q::from(den.clone())).to_integer().to_i128().unwrap();
            acc = acc.add(&self.fundamental_monomial(e)?.scale(k))?;
        }
        if den != Z::from(1) {
            let d = den.to_i128().unwrap();
            let mut out = CharacterElement::zero(self.datum.clone());
            for (w, m) in acc.terms {
                if m % d != 0 {
                    return Err(Error::InvalidArgument(
                        "polynomial does not expand to an integral character".into(),
                    ));
                }
                out.add_term(w, m / d);
            }
            return Ok(out);
        }
        Ok(acc)
    }

    /// Coefficients of `c` on irreducible characters.
    pub fn decompose(&self, c: &CharacterElement) -> Result<BTreeMap<Weight, i128>> {
        let mut rest = c.clone();
        let mut out = BTreeMap::new();
        while let Some((lam, m)) = rest.leading() {
            rest = rest.sub(&self.irreducible(&lam)?.scale(m))?;
            out.insert(lam, m);
        }
        Ok(out)
    }

    /// Sum of irreducibles with the given coefficients.
    pub fn recompose(&self, parts: &BTreeMap<Weight, i128>) -> Result<CharacterElement> {
        let mut acc = CharacterElement::zero(self.datum.clone());
        for (w, m) in parts {
            acc = acc.add(&self.irreducible(w)?.scale(*m))?;
        }
        Ok(acc)
    }

    /// Is `c` a genuine character (non-negative on irreducibles)?
    pub fn is_true_character(&self, c: &CharacterElement) -> Result<bool> {
        Ok(self.decompose(c)?.values().all(|&m| m >= 0))
    }

    /// `D_A`: scales `e^mu` by `A(mu, mu)`.
    pub fn apply_da(&self, c: &CharacterElement) -> CharacterElement {
        let mut out = CharacterElement::zero(self.datum.clone());
        for (w, m) in &c.terms {
            out.add_term(w.clone(), m * self.form(w, w) as i128);
        }
        out
    }

    /// `C_A`: scales `chi_lambda` by `A(lambda + rho) - A(rho)`.
    pub fn apply_ca(&self, c: &CharacterElement) -> Result<CharacterElement> {
        let rho = self.datum.rho();
        let base = self.form(&rho, &rho) as i128;
        let parts = self
            .decompose(c)?
            .into_iter()
            .map(|(w, m)| {
                let lr: Weight = w.iter().zip(&rho).map(|(a, b)| a + b).collect();
                let ev = self.form(&lr, &lr) as i128 - base;
                (w, m * ev)
            })
            .collect();
        self.recompose(&parts)
    }

    /// The adjoint character, read off the root system.
    pub fn adjoint(&self) -> CharacterElement {
        adjoint_character(self.datum.clone())
    }
}

/// The adjoint character: every root with multiplicity one and the zero
/// weight with multiplicity equal to the rank.
pub fn adjoint_character(datum: Arc<RootDatum>) -> CharacterElement {
    let r = datum.rank();
    let mut c = CharacterElement::zero(datum.clone());
    let mut seen = BTreeSet::new();
    for beta in datum.positive_roots() {
        let (dom, _) = datum.dominant(beta);
        if seen.insert(dom.clone()) {
            c.add_term(dom, 1);
        }
    }
    c.add_term(vec![0; r], r as i128);
    c
}

/// `D_A` on an arbitrary finitely supported element of the weight ring.
pub fn apply_da_weights(datum: &RootDatum, x: &BTreeMap<Weight, i128>) -> BTreeMap<Weight, i128> {
    x.iter()
        .filter_map(|(w, m)| {
            let v = m * datum.norm(w) as i128;
            (v != 0).then(|| (w.clone(), v))
        })
        .collect()
}

/// Evaluate at `exp(2 pi i v / m)`, where `v` lists the coordinates of a
/// rational cocharacter in the basis of fundamental coweights. `m * v` must
/// pair integrally with every weight of the support.
pub fn evaluate_at_torsion(c: &CharacterElement, v: &[Q], m: u64) -> Result<TorsionValue> {
    let d = c.datum();
    // pairing of omega_k with v, times m
    let per: Vec<Q> = (0..d.rank())
        .map(|k| {
            (0..d.rank())
                .map(|i| &d.cartan_inverse()[k][i] * &v[i])
                .sum::<Q>()
                * q(m as i64)
        })
        .collect();
    let den = per.iter().fold(Z::from(1), |a, x| a.lcm(x.denom()));
    let den_i = den.to_i64().unwrap();
    let nums: Vec<i64> = per
        .iter()
        .map(|x| (x * Q::from(den.clone())).to_integer().to_i64().unwrap())
        .collect();
    let mut counts = vec![0i128; m as usize];
    for (w, mult) in c.terms() {
        let mut bad = None;
        d.for_each_in_orbit(w, |mu| {
            let t = dot(&nums, mu);
            if t % den_i != 0 {
                bad = Some(mu.to_vec());
                return;
            }
            let k = (t / den_i).rem_euclid(m as i64) as usize;
            counts[k] += mult;
        });
        if let Some(mu) = bad {
            return Err(Error::NonIntegralPairing {
                weight: weight_string(&mu),
                order: m,
            });
        }
    }
    let counts: Vec<Z> = counts.into_iter().map(Z::from).collect();
    TorsionValue::new(Cyclotomic::from_power_counts(m, &counts))
}

/// Order of the torsion point `v` on the weight lattice.
pub fn torsion_order(d: &RootDatum, v: &[Q]) -> u64 {
    (0..d.rank())
        .map(|k| {
            (0..d.rank())
                .map(|i| &d.cartan_inverse()[k][i] * &v[i])
                .sum::<Q>()
        })
        .fold(Z::from(1), |a, x| a.lcm(x.denom()))
        .to_u64()
        .unwrap()
}

/// Evaluate at the torsion point `v`, with the order read off `v`.
pub fn evaluate_at_point(c: &CharacterElement, v: &[Q]) -> Result<TorsionValue> {
    evaluate_at_torsion(c, v, torsion_order(c.datum(), v))
}

/// A maximal family of pairwise orthogonal roots, long roots searched first;
/// the result lists short roots before long ones.
pub fn orthogonal_roots(d: &RootDatum) -> Vec<Weight> {
    let theta = d.highest_root().to_vec();
    let long_len = d.b_pair(&theta, &theta);
    let mut cands: Vec<Weight> = d
        .positive_roots()
        .iter()
        .rev()
        .filter(|b| d.b_pair(b, b) == long_len)
        .cloned()
        .collect();
    cands.extend(
        d.positive_roots()
            .iter()
            .rev()
            .filter(|b| d.b_pair(b, b) != long_len)
            .cloned(),
    );
    let target = d.rank();
    let mut best: Vec<usize> = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn search(
        d: &RootDatum,
        cands: &[Weight],
        start: usize,
        cur: &mut Vec<usize>,
        best: &mut Vec<usize>,
        target: usize,
    ) -> bool {
        if cur.len() > best.len() {
            *best = cur.clone();
            if best.len() == target {
                return true;
            }
        }
        for i in start..cands.len() {
            if cur.iter().all(|&j| d.b_pair(&cands[i], &cands[j]).is_zero()) {
                cur.push(i);
                if search(d, cands, i + 1, cur, best, target) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }
    search(d, &cands, 0, &mut cur, &mut best, target);
    let mut roots: Vec<Weight> = best.into_iter().map(|i| cands[i].clone()).collect();
    roots.sort_by_key(|b| d.b_pair(b, b) == long_len);
    roots
}

/// `s^k + s^{-k}` as a polynomial in `t = s + 1/s`, for `k >= 1`.
pub fn chebyshev_sum(k: u32) -> Vec<Z> {
    // P_0 = 2, P_1 = t, P_k = t P_{k-1} - P_{k-2}
    let mut prev = vec![Z::from(2)];
    let mut cur = vec![Z::zero(), Z::from(1)];
    for _ in 1..k {
        let mut next = vec![Z::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = next;
    }
    if k == 0 {
        return vec![Z::from(1)];
    }
    cur
}

/// Restrict to the subgroup `SL2^n` attached to pairwise orthogonal roots
/// `coroots` and rewrite in `t_i = s_i + 1/s_i`.
pub fn restrict_to_a1n(
    c: &CharacterElement,
    coroots: &[Weight],
    orbit_cap: u128,
) -> Result<BranchPolynomial> {
    let d = c.datum();
    let n = coroots.len();
    let roots: BTreeSet<Weight> = d
        .positive_roots()
        .iter()
        .flat_map(|b| [b.clone(), b.iter().map(|x| -x).collect()])
        .collect();
    for (i, b) in coroots.iter().enumerate() {
        if !roots.contains(b) {
            return Err(Error::InvalidArgument(format!(
                "{} is not a root",
                weight_string(b)
            )));
        }
        for b2 in &coroots[..i] {
            if !d.b_pair(b, b2).is_zero() {
                return Err(Error::NonOrthogonalCoroots(format!(
                    "{} and {}",
                    weight_string(b2),
                    weight_string(b)
                )));
            }
        }
    }
    // <mu, beta^vee> = 2 B(mu, beta) / B(beta, beta); linear in mu.
    let pair_vecs: Vec<Vec<Q>> = coroots
        .iter()
        .map(|b| {
            (0..d.rank())
                .map(|k| d.coroot_pairing(&d.fundamental_weight(k), b))
                .collect()
        })
        .collect();
    let pair_int: Vec<Vec<i64>> = pair_vecs
        .iter()
        .map(|v| v.iter().map(|x| x.to_integer().to_i64().unwrap()).collect())
        .collect();
    let mut laurent: BTreeMap<Vec<i64>, i128> = BTreeMap::new();
    for (mu, m) in c.full_expansion(orbit_cap)? {
        let e: Vec<i64> = pair_int.iter().map(|p| dot(p, &mu)).collect();
        *laurent.entry(e).or_insert(0) += m;
    }
    laurent.retain(|_, v| *v != 0);
    let mut out = Poly::zero(n);
    for (e, m) in &laurent {
        let flipped: Vec<i64> = e.iter().map(|x| x.abs()).collect();
        if laurent.get(&flipped) != Some(m) {
            return Err(Error::NonOrthogonalCoroots(
                "restriction is not invariant under s_i -> 1/s_i".into(),
            ));
        }
        if e.iter().any(|&x| x < 0) {
            continue;
        }
        let mut term = Poly::constant(n, Q::from(Z::from(*m)));
        for (i, &k) in e.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let cs = chebyshev_sum(k as u32);
            let mut p = Poly::zero(n);
            for (deg, coef) in cs.iter().enumerate() {
                if !coef.is_zero() {
                    let mut ex = vec![0u32; n];
                    ex[i] = deg as u32;
                    p.add_term(ex, Q::from(coef.clone()));
                }
            }
            term = &term * &p;
        }
        out = &out + &term;
    }
    Ok(out)
}
