//! Polynomial ideals over the rationals: Groebner bases, zero-dimensional
//! solving and exact signs at real algebraic points.

pub mod groebner;
pub mod solve;

use alloc::vec::Vec;

pub use groebner::{GPoly, Mono, MonomialOrder, DEFAULT_PAIR_CAP, MAX_VARS};
pub use solve::{sign_of, solve_zero_dim, values_at, AlgebraicPoint, PreparedResidue, Quotient, Sign, DEFAULT_REFINE_DEPTH};

use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    pub nvars: usize,
    pub gens: Vec<Poly>,
    pub order: MonomialOrder,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(nvars: usize, gens: Vec<Poly>, order: MonomialOrder) -> Ideal {
        Ideal {
            nvars,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            order,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Does `p` reduce to zero modulo this ideal's generators, which must
    /// form a Groebner basis for `order`?
    pub fn reduces_to_zero(&self, p: &Poly) -> bool {
        let gb: Vec<GPoly> = self.gens.iter().map(|g| GPoly::from_poly(g, self.order)).collect();
        let idx: Vec<usize> = (0..gb.len()).collect();
        groebner::reduce(&GPoly::from_poly(p, self.order), &gb, &idx, self.order).is_zero()
    }
}

/// Reduced Groebner basis for the ideal's order. The original generators
/// are checked to reduce to zero.
pub fn groebner(ideal: &Ideal, pair_cap: usize) -> Result<Ideal> {
    if ideal.nvars > MAX_VARS {
        return Err(Error::InvalidArgument(alloc::format!(
            "at most {MAX_VARS} variables are supported"
        )));
    }
    let gb = groebner::groebner_basis(&ideal.gens, ideal.order, pair_cap)?;
    let out = Ideal {
        nvars: ideal.nvars,
        gens: gb.iter().map(|g| g.to_poly(ideal.nvars)).collect(),
        order: ideal.order,
    };
    debug_assert!(ideal.gens.iter().all(|g| out.reduces_to_zero(g)));
    Ok(out)
}
