//! Minimizing restricted trace polynomials `f(t_1..t_n)` over the box
//! `[-2, 2]^n`, where `t_i = s_i + 1/s_i` is the trace on the `i`-th `SL_2`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::algsolve::{solve_zero_dim, Ideal, MonomialOrder, DEFAULT_PAIR_CAP};
use crate::arith::{q, Q};
use crate::charring::BranchPolynomial;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::upoly::AlgebraicReal;

#[derive(Clone, Debug)]
pub struct BranchProblem {
    pub poly: BranchPolynomial,
    /// Variables fixed to `+2` (`true`) or `-2` (`false`).
    pub pins: BTreeMap<usize, bool>,
}

impl BranchProblem {
    pub fn new(poly: BranchPolynomial) -> Self {
        BranchProblem {
            poly,
            pins: BTreeMap::new(),
        }
    }

    pub fn with_pin(mut self, var: usize, plus: bool) -> Result<Self> {
        if var >= self.nvars() {
            return Err(Error::InvalidArgument(format!(
                "pin on t{} but the polynomial has {} variables",
                var + 1,
                self.nvars()
            )));
        }
        self.pins.insert(var, plus);
        Ok(self)
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    fn free_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|i| !self.pins.contains_key(i)).collect()
    }

    /// `f` with pinned variables substituted, in the free variables only.
    pub fn reduced(&self) -> Poly {
        let n = self.nvars();
        let free = self.free_vars();
        let subs: Vec<Poly> = (0..n)
            .map(|i| match self.pins.get(&i) {
                Some(&plus) => Poly::constant(free.len(), pin_value(plus)),
                None => Poly::var(free.len(), free.iter().position(|&j| j == i).unwrap()),
            })
            .collect();
        self.poly.compose(&subs)
    }
}

fn pin_value(plus: bool) -> Q {
    if plus {
        q(2)
    } else {
        q(-2)
    }
}

/// Generators `(t_i^2 - 4) d f / d t_i` over the unpinned variables, in
/// those variables.
pub fn branch_critical_ideal(p: &BranchProblem) -> Ideal {
    let f = p.reduced();
    let k = f.nvars();
    let gens = (0..k)
        .map(|i| {
            let t = Poly::var(k, i);
            let box_factor = &(&t * &t) - &Poly::constant(k, q(4));
            &box_factor * &f.derivative(i)
        })
        .collect();
    Ideal::new(k, gens, MonomialOrder::DegRevLex)
}

#[derive(Clone, Debug)]
pub struct BranchMinimum {
    pub value: AlgebraicReal,
    /// All `n` coordinates, pinned ones included.
    pub witness: Vec<AlgebraicReal>,
    /// Critical points examined, before the box filter.
    pub candidates: usize,
}

/// Minimum of `f` over the box. Each free variable is either interior, where
/// `d f / d t_i = 0`, or on a face `t_i = +-2`; the faces are visited one
/// at a time so every subsystem stays small.
pub fn branch_minimize(p: &BranchProblem) -> Result<BranchMinimum> {
    branch_minimize_with_cap(p, DEFAULT_PAIR_CAP)
}

pub fn branch_minimize_with_cap(p: &BranchProblem, pair_cap: usize) -> Result<BranchMinimum> {
    let free = p.free_vars();
    let k = free.len();
    let mut best: Option<(AlgebraicReal, Vec<AlgebraicReal>)> = None;
    let mut candidates = 0;
    // face code per free variable: 0 interior, 1 -> +2, 2 -> -2
    let faces = 3usize.pow(k as u32);
    for code in 0..faces {
        let mut face = p.clone();
        let mut c = code;
        for &v in &free {
            match c % 3 {
                1 => {
                    face.pins.insert(v, true);
                }
                2 => {
                    face.pins.insert(v, false);
                }
                _ => {}
            }
            c /= 3;
        }
        let f = face.reduced();
        let interior = face.free_vars();
        let mut found: Vec<(AlgebraicReal, Vec<AlgebraicReal>)> = Vec::new();
        if interior.is_empty() {
            found.push((AlgebraicReal::rational(f.constant_term()), Vec::new()));
        } else {
            let gens: Vec<Poly> = (0..f.nvars()).map(|i| f.derivative(i)).collect();
            if gens.iter().any(Poly::is_zero) {
                // f does not depend on that variable here: a pinned face
                // gives the same values
                continue;
            }
            let ideal = Ideal::new(f.nvars(), gens, MonomialOrder::DegRevLex);
            let pts = solve_zero_dim(&ideal, pair_cap)?;
            candidates += pts.len();
            for pt in pts {
                if pt.coords.iter().all(in_open_box) {
                    found.push((pt.value(&f)?, pt.coords));
                }
            }
        }
        for (value, coords) in found {
            if best.as_ref().is_some_and(|(b, _)| value >= *b) {
                continue;
            }
            let mut witness = Vec::with_capacity(p.nvars());
            let mut it = coords.into_iter();
            for i in 0..p.nvars() {
                witness.push(match face.pins.get(&i) {
                    Some(&plus) => AlgebraicReal::rational(pin_value(plus)),
                    None => it.next().unwrap(),
                });
            }
            best = Some((value, witness));
        }
    }
    let (value, witness) = best.expect("the vertex faces always give candidates");
    Ok(BranchMinimum {
        value,
        witness,
        candidates,
    })
}

fn in_open_box(t: &AlgebraicReal) -> bool {
    let two = AlgebraicReal::integer(2);
    *t > two.neg() && *t < two
}
