//! Closed-form trace bounds: extreme values of `Tr Ad` on each component of
//! `Aut(G)`, of the highest-short-root trace, and the classical toral
//! formulas behind them.

use alloc::format;
use alloc::vec::Vec;

use crate::arith::{q, Q};
use crate::error::{Error, Result};
use crate::rootdata::check_type;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSource {
    /// `s` acts as `-1` on the root system, so the minimum is `-rank`.
    MinusOne,
    /// Stored classification value.
    Classified,
    /// Computed from a fixed subgroup `H` and a trace correction.
    Reduction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEntry {
    pub kind: char,
    pub rank: usize,
    /// Order of the outer class `s`.
    pub s: u32,
    pub min: i64,
    pub max: i64,
    pub source: BoundSource,
}

pub fn group_dim(kind: char, rank: usize) -> Result<i64> {
    check_type(kind, rank)?;
    let n = rank as i64;
    Ok(match kind {
        'A' => n * n + 2 * n,
        'B' | 'C' => 2 * n * n + n,
        'D' => 2 * n * n - n,
        'E' => [78, 133, 248][rank - 6],
        'F' => 52,
        _ => 14,
    })
}

/// Orders of the elements of `Out(G)`.
pub fn outer_orders(kind: char, rank: usize) -> Result<Vec<u32>> {
    check_type(kind, rank)?;
    Ok(match (kind, rank) {
        ('A', n) if n >= 2 => Vec::from([1, 2]),
        ('D', 4) => Vec::from([1, 2, 3]),
        ('D', _) | ('E', 6) => Vec::from([1, 2]),
        _ => Vec::from([1]),
    })
}

/// Does `-1` lie in the Weyl group?
pub fn minus_one_in_weyl(kind: char, rank: usize) -> bool {
    match kind {
        'A' => rank == 1,
        'D' => rank % 2 == 0,
        'E' => rank != 6,
        _ => true,
    }
}

/// Is the outer class of order `s` the one containing `-1`?
fn is_minus_one_class(kind: char, rank: usize, s: u32) -> bool {
    if minus_one_in_weyl(kind, rank) {
        s == 1
    } else {
        s == 2
    }
}

/// `(min, max)` of `Tr Ad` over the component of `Aut(G)` with outer class
/// of order `s`.
pub fn trace_bounds(kind: char, rank: usize, s: u32) -> Result<BoundEntry> {
    if !outer_orders(kind, rank)?.contains(&s) {
        return Err(Error::InvalidArgument(format!(
            "{kind}{rank} has no outer automorphism class of order {s}"
        )));
    }
    let n = rank as i64;
    let dim = group_dim(kind, rank)?;
    let entry = |min, max, source| BoundEntry {
        kind,
        rank,
        s,
        min,
        max,
        source,
    };
    if s == 1 {
        if is_minus_one_class(kind, rank, 1) {
            return Ok(entry(-n, dim, BoundSource::MinusOne));
        }
        let min = match kind {
            'A' => -1,
            'D' => 2 - n,
            _ => -3,
        };
        return Ok(entry(min, dim, BoundSource::Classified));
    }
    let max = match (kind, s) {
        ('A', _) if n % 2 == 0 => n,
        ('A', _) => n + 2,
        ('D', 3) => 7,
        ('D', _) => 2 * n * n - 5 * n + 2,
        _ => 26,
    };
    if is_minus_one_class(kind, rank, s) {
        return Ok(entry(-n, max, BoundSource::MinusOne));
    }
    // D_n with n even, s of order 2 or 3
    Ok(entry(2 - n, max, BoundSource::Classified))
}

/// The connected fixed subgroup `H` of a diagram automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedSubgroup {
    /// `A_1^m`.
    A1Power(usize),
    Simple(char, usize),
}

impl FixedSubgroup {
    pub fn rank(&self) -> usize {
        match *self {
            FixedSubgroup::A1Power(m) => m,
            FixedSubgroup::Simple(_, r) => r,
        }
    }

    /// `(min, max)` of `Tr Ad_H` on `H`.
    pub fn adjoint_range(&self) -> Result<(i64, i64)> {
        match *self {
            FixedSubgroup::A1Power(m) => Ok((-(m as i64), 3 * m as i64)),
            // D_3 = A_3
            FixedSubgroup::Simple('D', 3) => adjoint_range('A', 3),
            FixedSubgroup::Simple(k, r) => adjoint_range(k, r),
        }
    }
}

fn adjoint_range(kind: char, rank: usize) -> Result<(i64, i64)> {
    let b = trace_bounds(kind, rank, 1)?;
    Ok((b.min, b.max))
}

/// `H` and `Tr(Ad(w)|_t) - rank H` for a diagram automorphism of order `s`.
pub fn fixed_subgroup(kind: char, rank: usize, s: u32) -> Result<(FixedSubgroup, i64)> {
    check_type(kind, rank)?;
    let uncovered = || {
        Err(Error::InvalidArgument(format!(
            "no diagram automorphism of order {s} on {kind}{rank}"
        )))
    };
    match (kind, rank, s) {
        ('A', n, 2) if n >= 2 && n % 2 == 0 => {
            let m = n / 2;
            Ok((FixedSubgroup::A1Power(m), -(m as i64)))
        }
        ('A', n, 2) if n >= 3 => {
            let m = (n + 1) / 2;
            Ok((FixedSubgroup::A1Power(m), 1 - m as i64))
        }
        ('D', n, 2) => Ok((FixedSubgroup::Simple('D', n - 1), -1)),
        ('D', 4, 3) => Ok((FixedSubgroup::Simple('A', 2), -1)),
        ('E', 6, 2) => Ok((FixedSubgroup::Simple('D', 4), -2)),
        _ => uncovered(),
    }
}

/// `(min, max)` on the component of order `s != 1`, from the range of
/// `Tr Ad_H` shifted by the trace correction.
pub fn outer_reduction(kind: char, rank: usize, s: u32) -> Result<BoundEntry> {
    let (h, corr) = fixed_subgroup(kind, rank, s)?;
    let (lo, hi) = h.adjoint_range()?;
    Ok(BoundEntry {
        kind,
        rank,
        s,
        min: lo + corr,
        max: hi + corr,
        source: BoundSource::Reduction,
    })
}

/// Minimum and dimension of the highest-short-root representation.
pub fn short_root_min(kind: char, rank: usize) -> Result<(i64, i64)> {
    check_type(kind, rank)?;
    let n = rank as i64;
    match kind {
        'B' => Ok((1 - 2 * n, 2 * n + 1)),
        'C' => {
            let min = if n % 2 == 1 { 1 - n } else { -1 - n };
            Ok((min, 2 * n * n - n - 1))
        }
        'F' => Ok((-6, 26)),
        'G' => Ok((-2, 7)),
        _ => Err(Error::InvalidArgument(format!(
            "{kind}{rank} is simply laced, there is no short root"
        ))),
    }
}

/// Minimum of `sum_{i<j} t_i t_j` on `[-1, 1]^n`.
pub fn min_quadratic_box(n: usize) -> Result<Q> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let n = n as i64;
    Ok(if n % 2 == 0 {
        q(-n / 2)
    } else {
        q((1 - n) / 2)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToralRep {
    Adjoint,
    ShortRoot,
}

/// Trace on the maximal torus of a classical group in the coordinates
/// `t_i = z_i + 1/z_i`.
pub fn toral_trace(kind: char, rank: usize, rep: ToralRep, t: &[Q]) -> Result<Q> {
    check_type(kind, rank)?;
    if t.len() != rank {
        return Err(Error::InvalidArgument(format!(
            "expected {rank} coordinates, got {}",
            t.len()
        )));
    }
    let n = q(rank as i64);
    let sum: Q = t.iter().sum();
    let squares: Q = t.iter().map(|x| x * x).sum();
    // sum_{i<j} t_i t_j
    let pairs = (&sum * &sum - &squares) / q(2);
    match (kind, rep) {
        ('D', ToralRep::Adjoint) => Ok(n + pairs),
        ('C', ToralRep::Adjoint) => Ok(-n + squares + pairs),
        ('B', ToralRep::Adjoint) => Ok(n + sum + pairs),
        ('C', ToralRep::ShortRoot) => Ok(pairs + n - q(1)),
        ('B', ToralRep::ShortRoot) => Ok(q(1) + sum),
        _ => Err(Error::InvalidArgument(format!(
            "no toral formula for {kind}{rank} and {rep:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        let b = trace_bounds('A', 3, 1).unwrap();
        assert_eq!((b.min, b.max), (-1, 15));
        let b = trace_bounds('D', 5, 2).unwrap();
        assert_eq!((b.min, b.max), (-5, 27));
        let b = trace_bounds('E', 6, 2).unwrap();
        assert_eq!((b.min, b.max), (-6, 26));
        let b = trace_bounds('D', 4, 3).unwrap();
        assert_eq!((b.min, b.max), (-2, 7));
        assert!(trace_bounds('B', 3, 2).is_err());
    }

    #[test]
    fn reductions() {
        let r = outer_reduction('E', 6, 2).unwrap();
        assert_eq!((r.min, r.max), (-6, 26));
        let r = outer_reduction('D', 4, 3).unwrap();
        assert_eq!((r.min, r.max), (-2, 7));
        let r = outer_reduction('A', 5, 2).unwrap();
        assert_eq!((r.min, r.max), (-5, 7));
    }

    #[test]
    fn short_roots() {
        assert_eq!(short_root_min('B', 3).unwrap(), (-5, 7));
        assert_eq!(short_root_min('C', 4).unwrap(), (-5, 27));
        assert_eq!(short_root_min('C', 3).unwrap(), (-2, 14));
        assert_eq!(short_root_min('F', 4).unwrap(), (-6, 26));
        assert!(short_root_min('E', 6).is_err());
    }

    #[test]
    fn quadratic_box() {
        assert_eq!(min_quadratic_box(1).unwrap(), q(0));
        assert_eq!(min_quadratic_box(2).unwrap(), q(-1));
        assert_eq!(min_quadratic_box(3).unwrap(), q(-1));
    }

    #[test]
    fn toral_identity_is_dim() {
        for n in 2..7 {
            let twos = alloc::vec![q(2); n];
            for k in ['B', 'C', 'D'] {
                if k == 'D' && n < 4 {
                    continue;
                }
                let v = toral_trace(k, n, ToralRep::Adjoint, &twos).unwrap();
                assert_eq!(v, q(group_dim(k, n).unwrap()));
            }
            let minus = alloc::vec![q(-2); n];
            let v = toral_trace('B', n, ToralRep::ShortRoot, &minus).unwrap();
            assert_eq!(v, q(1 - 2 * n as i64));
        }
    }
}
