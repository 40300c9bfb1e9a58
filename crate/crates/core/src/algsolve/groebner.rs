//! Buchberger's algorithm over the integers (content-normalized), with the
//! sugar selection strategy and the Gebauer-Moeller pair criteria.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Q, Z};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Maximum number of variables supported by the Groebner engine.
pub const MAX_VARS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono(pub [u16; MAX_VARS]);

impl Mono {
    pub const ONE: Mono = Mono([0; MAX_VARS]);

    pub fn from_exps(e: &[u32]) -> Mono {
        let mut m = [0u16; MAX_VARS];
        for (x, &y) in m.iter_mut().zip(e) {
            *x = y as u16;
        }
        Mono(m)
    }

    pub fn exps(&self, n: usize) -> Vec<u32> {
        self.0[..n].iter().map(|&x| x as u32).collect()
    }

    pub fn deg(&self) -> u32 {
        self.0.iter().map(|&x| x as u32).sum()
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, o: &Mono) -> Mono {
        let mut m = self.0;
        for (x, y) in m.iter_mut().zip(&o.0) {
            *x = (*x).max(*y);
        }
        Mono(m)
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut m = self.0;
        for (x, y) in m.iter_mut().zip(&o.0) {
            *x += *y;
        }
        Mono(m)
    }

    /// `self / o`, assuming `o` divides `self`.
    pub fn div(&self, o: &Mono) -> Mono {
        let mut m = self.0;
        for (x, y) in m.iter_mut().zip(&o.0) {
            *x -= *y;
        }
        Mono(m)
    }

    pub fn coprime(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn var(i: usize, k: u16) -> Mono {
        let mut m = [0u16; MAX_VARS];
        m[i] = k;
        Mono(m)
    }
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::DegRevLex => a.deg().cmp(&b.deg()).then_with(|| {
                for i in (0..MAX_VARS).rev() {
                    if a.0[i] != b.0[i] {
                        return b.0[i].cmp(&a.0[i]);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// Polynomial with integer coefficients, terms sorted decreasingly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GPoly {
    pub terms: Vec<(Mono, Z)>,
}

impl GPoly {
    pub fn from_poly(p: &Poly, order: MonomialOrder) -> GPoly {
        let den = crate::arith::denom_lcm(p.terms().map(|(_, c)| c));
        let mut terms: Vec<(Mono, Z)> = p
            .terms()
            .map(|(e, c)| (Mono::from_exps(e), (c * Q::from(den.clone())).to_integer()))
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut g = GPoly { terms };
        g.normalize();
        g
    }

    pub fn to_poly(&self, n: usize) -> Poly {
        Poly::from_terms(
            n,
            self.terms
                .iter()
                .map(|(m, c)| (m.exps(n), Q::from(c.clone()))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> Mono {
        self.terms[0].0
    }

    pub fn lc(&self) -> &Z {
        &self.terms[0].1
    }

    /// Divide by the content and make the leading coefficient positive.
    pub fn normalize(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = Z::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c = &*c / &g;
            }
        }
    }

    /// `a * self - b * t * g`.
    fn lin_comb(&self, a: &Z, b: &Z, t: &Mono, g: &GPoly, order: MonomialOrder) -> GPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        let (f, h) = (&self.terms, &g.terms);
        while i < f.len() || j < h.len() {
            let ord = match (f.get(i), h.get(j)) {
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0.mul(t)),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push((f[i].0, a * &f[i].1));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((h[j].0.mul(t), -(b * &h[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a * &f[i].1 - b * &h[j].1;
                    if !c.is_zero() {
                        out.push((f[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        GPoly { terms: out }
    }
}

fn s_poly(f: &GPoly, g: &GPoly, order: MonomialOrder) -> GPoly {
    let l = f.lm().lcm(&g.lm());
    let gg = f.lc().gcd(g.lc());
    let a = g.lc() / &gg;
    let b = f.lc() / &gg;
    let tf = l.div(&f.lm());
    let tg = l.div(&g.lm());
    // a * tf * f - b * tg * g
    let ff = GPoly {
        terms: f.terms.iter().map(|(m, c)| (m.mul(&tf), c.clone())).collect(),
    };
    let mut s = ff.lin_comb(&a, &b, &tg, g, order);
    s.normalize();
    s
}

/// Fully reduce `f` modulo the polynomials `basis` (indices into `polys`),
/// returning a normalized integer multiple of the remainder.
pub fn reduce(f: &GPoly, polys: &[GPoly], basis: &[usize], order: MonomialOrder) -> GPoly {
    let mut p = f.clone();
    let mut pos = 0;
    let mut steps = 0usize;
    while pos < p.terms.len() {
        let m = p.terms[pos].0;
        let div = basis.iter().map(|&k| &polys[k]).find(|g| g.lm().divides(&m));
        match div {
            Some(g) => {
                let c = &p.terms[pos].1;
                let gg = c.gcd(g.lc());
                let a = g.lc() / &gg;
                let b = c / &gg;
                let t = m.div(&g.lm());
                p = p.lin_comb(&a, &b, &t, g, order);
                steps += 1;
                if steps % 8 == 0 {
                    p.normalize();
                }
            }
            None => pos += 1,
        }
    }
    p.normalize();
    p
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    sugar: u32,
}

/// A Groebner basis computation.
pub struct Buchberger {
    pub order: MonomialOrder,
    pub polys: Vec<GPoly>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    pub pair_cap: usize,
    pairs_processed: usize,
}

/// Default cap on the number of S-pairs processed.
pub const DEFAULT_PAIR_CAP: usize = 200_000;

impl Buchberger {
    pub fn new(order: MonomialOrder, pair_cap: usize) -> Self {
        Buchberger {
            order,
            polys: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            pair_cap,
            pairs_processed: 0,
        }
    }

    fn update(&mut self, h: usize) {
        let hm = self.polys[h].lm();
        let sug = |s: &Self, i: usize, l: &Mono| s.sugar[i] + l.deg() - s.polys[i].lm().deg();
        // candidate pairs (g, h)
        let mut c: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| {
                let l = self.polys[g].lm().lcm(&hm);
                let s = sug(self, g, &l).max(sug(self, h, &l));
                Pair {
                    i: g,
                    j: h,
                    lcm: l,
                    sugar: s,
                }
            })
            .collect();
        let mut d: Vec<Pair> = Vec::new();
        while let Some(p) = c.pop() {
            let coprime = self.polys[p.i].lm().coprime(&hm);
            let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                d.push(p);
            }
        }
        let e: Vec<Pair> = d
            .into_iter()
            .filter(|p| !self.polys[p.i].lm().coprime(&hm))
            .collect();
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(hm.divides(&p.lcm)
                && polys[p.i].lm().lcm(&hm) != p.lcm
                && polys[p.j].lm().lcm(&hm) != p.lcm)
        });
        self.pairs.extend(e);
        self.active.retain(|&g| !hm.divides(&polys[g].lm()));
        self.active.push(h);
    }

    fn insert(&mut self, p: GPoly, sugar: u32) {
        self.polys.push(p);
        self.sugar.push(sugar);
        let h = self.polys.len() - 1;
        self.update(h);
    }

    /// Run to completion on the given generators.
    pub fn run(&mut self, gens: Vec<GPoly>) -> Result<()> {
        let mut gens: Vec<GPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let order = self.order;
        gens.sort_by(|a, b| order.cmp(&a.lm(), &b.lm()));
        for g in gens {
            let r = reduce(&g, &self.polys, &self.active, order);
            if !r.is_zero() {
                let s = r.terms.iter().map(|(m, _)| m.deg()).max().unwrap();
                self.insert(r, s);
            }
        }
        while !self.pairs.is_empty() {
            self.pairs_processed += 1;
            if self.pairs_processed > self.pair_cap {
                return Err(Error::PairLimit(self.pair_cap));
            }
            // minimal sugar, then smallest lcm
            let k = (0..self.pairs.len())
                .min_by(|&x, &y| {
                    let (p, q) = (&self.pairs[x], &self.pairs[y]);
                    p.sugar
                        .cmp(&q.sugar)
                        .then_with(|| order.cmp(&p.lcm, &q.lcm))
                        .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
                })
                .unwrap();
            let p = self.pairs.swap_remove(k);
            let s = s_poly(&self.polys[p.i], &self.polys[p.j], order);
            let r = reduce(&s, &self.polys, &self.active, order);
            if !r.is_zero() {
                if r.lm() == Mono::ONE {
                    self.polys.push(r);
                    self.sugar.push(0);
                    self.active = vec![self.polys.len() - 1];
                    self.pairs.clear();
                    return Ok(());
                }
                self.insert(r, p.sugar);
            }
        }
        Ok(())
    }

    /// The reduced basis, sorted by increasing leading monomial.
    pub fn reduced_basis(&self) -> Vec<GPoly> {
        let order = self.order;
        let mut g: Vec<usize> = self.active.clone();
        g.sort_by(|&a, &b| order.cmp(&self.polys[a].lm(), &self.polys[b].lm()));
        let mut out: Vec<GPoly> = Vec::new();
        for (k, &i) in g.iter().enumerate() {
            let others: Vec<usize> = g.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, &x)| x).collect();
            let p = &self.polys[i];
            // Reduce the tail only; the leading term is irreducible by others.
            let tail = GPoly {
                terms: p.terms[1..].to_vec(),
            };
            let lead = GPoly {
                terms: vec![p.terms[0].clone()],
            };
            let mut r = reduce_keep_scale(&tail, &lead, &self.polys, &others, order);
            r.normalize();
            out.push(r);
        }
        out
    }
}

/// Reduce `tail` fully while scaling `lead` alongside, returning
/// `lead' + tail'`.
fn reduce_keep_scale(
    tail: &GPoly,
    lead: &GPoly,
    polys: &[GPoly],
    basis: &[usize],
    order: MonomialOrder,
) -> GPoly {
    let mut p = GPoly {
        terms: lead.terms.iter().chain(tail.terms.iter()).cloned().collect(),
    };
    let mut pos = 1;
    while pos < p.terms.len() {
        let m = p.terms[pos].0;
        match basis.iter().map(|&k| &polys[k]).find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let c = &p.terms[pos].1;
                let gg = c.gcd(g.lc());
                let a = g.lc() / &gg;
                let b = c / &gg;
                let t = m.div(&g.lm());
                p = p.lin_comb(&a, &b, &t, g, order);
            }
            None => pos += 1,
        }
    }
    p
}

/// Reduce a rational polynomial to its normal form (exact, over `Q`) modulo
/// a Groebner basis.
pub fn normal_form_q(
    f: &BTreeMap<Mono, Q>,
    basis: &[GPoly],
    order: MonomialOrder,
) -> Vec<(Mono, Q)> {
    let mut p: Vec<(Mono, Q)> = f.iter().map(|(m, c)| (*m, c.clone())).collect();
    p.sort_by(|a, b| order.cmp(&b.0, &a.0));
    let mut out = Vec::new();
    while !p.is_empty() {
        let (m, c) = p[0].clone();
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let t = m.div(&g.lm());
                let factor = c / Q::from(g.lc().clone());
                let mut next = Vec::with_capacity(p.len() + g.terms.len());
                let mut i = 1;
                let mut j = 1;
                while i < p.len() || j < g.terms.len() {
                    let ord = match (p.get(i), g.terms.get(j)) {
                        (Some(x), Some(y)) => order.cmp(&x.0, &y.0.mul(&t)),
                        (Some(_), None) => Ordering::Greater,
                        _ => Ordering::Less,
                    };
                    match ord {
                        Ordering::Greater => {
                            next.push(p[i].clone());
                            i += 1;
                        }
                        Ordering::Less => {
                            next.push((g.terms[j].0.mul(&t), -(&factor * Q::from(g.terms[j].1.clone()))));
                            j += 1;
                        }
                        Ordering::Equal => {
                            let v = &p[i].1 - &factor * Q::from(g.terms[j].1.clone());
                            if !v.is_zero() {
                                next.push((p[i].0, v));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                }
                p = next;
            }
            None => {
                out.push(p.remove(0));
            }
        }
    }
    out
}

/// Compute a reduced Groebner basis of the given polynomials.
pub fn groebner_basis(
    gens: &[Poly],
    order: MonomialOrder,
    pair_cap: usize,
) -> Result<Vec<GPoly>> {
    let mut b = Buchberger::new(order, pair_cap);
    b.run(gens.iter().map(|g| GPoly::from_poly(g, order)).collect())?;
    Ok(b.reduced_basis())
}
