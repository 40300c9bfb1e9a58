//! Certified extrema of class functions on the compact form: corners,
//! critical loci cut out by the invariant derivations, and the
//! negative-semidefiniteness test on `M^sigma`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::algsolve::{
    solve_zero_dim, values_at, AlgebraicPoint, Ideal, MonomialOrder, PreparedResidue, Sign,
};
use crate::arith::{determinant, Q};
use crate::charring::{CharRing, FundamentalPolynomial};
use crate::cyclotomic::{Cyclotomic, TorsionValue};
use crate::error::{Error, Result};
use crate::invder::{derivation_matrix, sigma_matrix, DerivationMatrix};
use crate::poly::Poly;
use crate::rootdata::{corners, RootDatum};
use crate::upoly::{AlgebraicReal, UPoly};

#[derive(Clone, Debug)]
pub struct ExtremumOptions {
    pub digits: u32,
    pub pair_cap: usize,
    pub refine_depth: u32,
    pub rank_cap: usize,
}

impl Default for ExtremumOptions {
    fn default() -> Self {
        ExtremumOptions {
            digits: 6,
            pair_cap: crate::algsolve::DEFAULT_PAIR_CAP,
            refine_depth: crate::algsolve::DEFAULT_REFINE_DEPTH,
            rank_cap: crate::invder::DEFAULT_RANK_CAP,
        }
    }
}

/// `g_i = sum_j M[i][j] d_j(objective)`.
pub fn critical_ideal(m: &DerivationMatrix, objective: &FundamentalPolynomial) -> Ideal {
    let r = m.rank();
    let grads: Vec<Poly> = (0..r).map(|j| objective.derivative(j)).collect();
    let gens = (0..r)
        .map(|i| {
            (0..r).fold(Poly::zero(r), |acc, j| {
                &acc + &(&m.entries[i][j] * &grads[j])
            })
        })
        .collect();
    Ideal::new(r, gens, MonomialOrder::Lex)
}

/// Are the coordinates of `x` compatible with complex conjugation, i.e.
/// `f_{i*}(x) = f_i(x)` for all `i`?
pub fn sigma_reality(msigma: &DerivationMatrix, x: &AlgebraicPoint) -> bool {
    msigma
        .dual_perm
        .iter()
        .enumerate()
        .all(|(i, &j)| i == j || x.coords[i] == x.coords[j])
}

/// Determinant over `Q[u]/(m)` by cofactor expansion.
fn det_mod(a: &[Vec<UPoly>], m: &UPoly) -> UPoly {
    let n = a.len();
    match n {
        0 => UPoly::constant(Q::one()),
        1 => a[0][0].clone(),
        _ => {
            let mut acc = UPoly::zero();
            for j in 0..n {
                if a[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<UPoly>> = a[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let t = a[0][j].mul(&det_mod(&minor, m)).rem(m);
                acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            acc.rem(m)
        }
    }
}

/// Residues of `M` entries and of the principal minors of `-M^sigma`,
/// computed once for all points sharing a representation.
pub struct PointTests<'a> {
    m: &'a DerivationMatrix,
    msigma: &'a DerivationMatrix,
    m_u: UPoly,
    reps: Vec<UPoly>,
    entries: Option<Vec<PreparedResidue>>,
    minors: Option<Vec<PreparedResidue>>,
}

impl<'a> PointTests<'a> {
    pub fn new(m: &'a DerivationMatrix, msigma: &'a DerivationMatrix, x: &AlgebraicPoint) -> Self {
        PointTests {
            m,
            msigma,
            m_u: x.m_u.clone(),
            reps: x.reps.clone(),
            entries: None,
            minors: None,
        }
    }

    fn shares(&self, x: &AlgebraicPoint) -> bool {
        x.m_u == self.m_u && x.reps == self.reps
    }

    /// Does `M` vanish at `x`?
    pub fn is_corner(&mut self, x: &AlgebraicPoint) -> bool {
        if let Some(q) = x.rational_coords() {
            return vanishes_at(self.m, &q);
        }
        if !self.shares(x) {
            return PointTests::new(self.m, self.msigma, x).is_corner(x);
        }
        let (m, m_u) = (self.m, &self.m_u);
        let entries = self.entries.get_or_insert_with(|| {
            m.entries
                .iter()
                .flatten()
                .map(|p| PreparedResidue::new(x.residue(p), m_u))
                .collect()
        });
        entries.iter().all(|r| x.prepared_is_zero(r))
    }

    /// Is `M^sigma(x)` negative semidefinite? Every principal minor of
    /// `-M^sigma(x)` must be non-negative; minors are visited by size.
    pub fn is_compact(&mut self, x: &AlgebraicPoint, max_depth: u32) -> Result<bool> {
        if let Some(q) = x.rational_coords() {
            let neg: Vec<Vec<Q>> = self
                .msigma
                .eval(&q)
                .into_iter()
                .map(|row| row.into_iter().map(|v| -v).collect())
                .collect();
            return Ok(principal_subsets(self.msigma.rank()).into_iter().all(|idx| {
                let sub: Vec<Vec<Q>> = idx
                    .iter()
                    .map(|&i| idx.iter().map(|&j| neg[i][j].clone()).collect())
                    .collect();
                !determinant(&sub).is_negative()
            }));
        }
        if !self.shares(x) {
            return PointTests::new(self.m, self.msigma, x).is_compact(x, max_depth);
        }
        let (msigma, m_u) = (self.msigma, &self.m_u);
        let minors = self.minors.get_or_insert_with(|| {
            let r = msigma.rank();
            let neg: Vec<Vec<UPoly>> = msigma
                .entries
                .iter()
                .map(|row| row.iter().map(|p| x.residue(&-p)).collect())
                .collect();
            principal_subsets(r)
                .into_iter()
                .map(|idx| {
                    let sub: Vec<Vec<UPoly>> = idx
                        .iter()
                        .map(|&i| idx.iter().map(|&j| neg[i][j].clone()).collect())
                        .collect();
                    PreparedResidue::new(det_mod(&sub, m_u), m_u)
                })
                .collect()
        });
        for d in minors.iter() {
            if x.prepared_sign(d, max_depth)? == Sign::Negative {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn principal_subsets(r: usize) -> Vec<Vec<usize>> {
    let mut subsets: Vec<u32> = (1u32..(1 << r)).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    subsets
        .into_iter()
        .map(|s| (0..r).filter(|i| s & (1 << i) != 0).collect())
        .collect()
}

/// Is `M^sigma(x)` negative semidefinite?
pub fn is_compact_point(msigma: &DerivationMatrix, x: &AlgebraicPoint, max_depth: u32) -> Result<bool> {
    PointTests::new(msigma, msigma, x).is_compact(x, max_depth)
}

/// Does `M` vanish at `x`?
pub fn is_corner_point(m: &DerivationMatrix, x: &AlgebraicPoint) -> bool {
    PointTests::new(m, m, x).is_corner(x)
}

/// Rank of `M` at an algebraic point, by exact vanishing of minors.
pub fn rank_at_point(m: &DerivationMatrix, x: &AlgebraicPoint) -> usize {
    let r = m.rank();
    let vals: Vec<Vec<UPoly>> = m
        .entries
        .iter()
        .map(|row| row.iter().map(|p| x.residue(p)).collect())
        .collect();
    for k in (1..=r).rev() {
        for rows in subsets_of_size(r, k) {
            for cols in subsets_of_size(r, k) {
                let sub: Vec<Vec<UPoly>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| vals[i][j].clone()).collect())
                    .collect();
                if !x.residue_is_zero(&det_mod(&sub, &x.m_u)) {
                    return k;
                }
            }
        }
    }
    0
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|i| s & (1 << i) != 0).collect())
        .collect()
}

/// Evaluate a polynomial at cyclotomic values.
pub fn eval_cyclotomic(p: &Poly, vals: &[Cyclotomic]) -> Cyclotomic {
    let m = vals.first().map_or(1, Cyclotomic::order);
    let mut acc = Cyclotomic::zero(m);
    for (e, c) in p.terms() {
        let mut t = Cyclotomic::rational(m, c.clone());
        for (v, &k) in vals.iter().zip(e) {
            for _ in 0..k {
                t = t.mul(v);
            }
        }
        acc = acc.add(&t);
    }
    acc
}

#[derive(Clone, Debug)]
pub struct CornerEntry {
    pub index: usize,
    pub coords: Vec<TorsionValue>,
    pub value: AlgebraicReal,
}

#[derive(Clone, Debug)]
pub struct CriticalPoint {
    pub point: AlgebraicPoint,
    pub value: AlgebraicReal,
    pub is_corner: bool,
    pub in_min_window: bool,
    pub in_max_window: bool,
    pub sigma_real: Option<bool>,
    pub compact: Option<bool>,
}

impl CriticalPoint {
    /// Certified to come from the compact form.
    pub fn included(&self) -> bool {
        !self.is_corner && self.sigma_real == Some(true) && self.compact == Some(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Corner(usize),
    Critical(usize),
}

#[derive(Clone, Debug)]
pub struct Extremum {
    pub value: AlgebraicReal,
    pub witness: Witness,
}

#[derive(Clone, Debug)]
pub struct ExtremumReport {
    pub datum: String,
    pub objective: FundamentalPolynomial,
    pub window_enabled: bool,
    pub corners: Vec<CornerEntry>,
    pub critical: Vec<CriticalPoint>,
    pub minimum: Extremum,
    pub maximum: Extremum,
}

impl ExtremumReport {
    /// Coordinates of the witness of an extremum, rendered.
    pub fn witness_coords(&self, e: &Extremum, digits: u32) -> Vec<String> {
        match e.witness {
            Witness::Corner(i) => self.corners[i].coords.iter().map(|v| v.render(digits)).collect(),
            Witness::Critical(i) => self.critical[i]
                .point
                .coords
                .iter()
                .map(|c| render_real(c, digits))
                .collect(),
        }
    }
}

/// Exact rendering for rationals, decimal otherwise.
pub fn render_real(x: &AlgebraicReal, digits: u32) -> String {
    match x.as_rational() {
        Some(q) => crate::arith::q_to_string(q),
        None => x.decimal(digits),
    }
}

/// Is the objective fixed by the permutation of variables by `-w0`?
pub fn is_sigma_invariant(datum: &RootDatum, objective: &Poly) -> bool {
    objective.permute_vars(datum.dual_permutation()) == *objective
}

/// Build `M` and run the pipeline.
pub fn extremum(
    datum: &RootDatum,
    objective: &FundamentalPolynomial,
    options: &ExtremumOptions,
) -> Result<ExtremumReport> {
    let m = derivation_matrix(datum, options.rank_cap)?;
    extremum_with_matrix(&m, objective, options)
}

/// Run the pipeline with a precomputed derivation matrix.
pub fn extremum_with_matrix(
    m: &DerivationMatrix,
    objective: &FundamentalPolynomial,
    options: &ExtremumOptions,
) -> Result<ExtremumReport> {
    let datum = &m.datum;
    let r = datum.rank();
    if objective.nvars() != r {
        return Err(Error::InvalidArgument(format!(
            "objective has {} variables, {} has rank {r}",
            objective.nvars(),
            datum.name()
        )));
    }
    if !is_sigma_invariant(datum, objective) {
        return Err(Error::InvalidArgument(
            "objective is not invariant under the -w0 permutation, so it is not real on the compact form"
                .into(),
        ));
    }
    let msigma = sigma_matrix(m);

    // corners
    let mut corner_entries = Vec::new();
    for c in corners(datum)? {
        let exact: Vec<Cyclotomic> = c.values.iter().map(|v| v.exact.clone()).collect();
        let v = TorsionValue::new(eval_cyclotomic(objective, &exact))?;
        let value = v.real.clone().ok_or_else(|| {
            Error::InvalidArgument(format!("objective is not real at corner {}", c.index))
        })?;
        corner_entries.push(CornerEntry {
            index: c.index,
            coords: c.values,
            value,
        });
    }
    let (cmin, cmin_idx) = extreme_corner(&corner_entries, Ordering::Less);
    let (cmax, cmax_idx) = extreme_corner(&corner_entries, Ordering::Greater);

    // window from the trace bound of a true character
    let ring = CharRing::new(datum.clone());
    let bound = match ring.expand(objective) {
        Ok(ch) if ring.is_true_character(&ch)? => {
            Some(AlgebraicReal::integer(ch.dimension() as i64))
        }
        _ => None,
    };

    let mut critical = Vec::new();
    if !objective.is_constant() {
        let ideal = critical_ideal(m, objective);
        let points = solve_zero_dim(&ideal, options.pair_cap)?;
        let values = values_at(&points, objective)?;
        let mut tests = points.first().map(|x| PointTests::new(m, &msigma, x));
        for (point, value) in points.into_iter().zip(values) {
            let tests = tests.as_mut().expect("at least one point");
            let is_corner = tests.is_corner(&point);
            let (in_min, in_max) = match &bound {
                Some(b) => (
                    value >= b.neg() && value < cmin,
                    value > cmax && value <= *b,
                ),
                None => (true, true),
            };
            let mut cp = CriticalPoint {
                point,
                value,
                is_corner,
                in_min_window: in_min && !is_corner,
                in_max_window: in_max && !is_corner,
                sigma_real: None,
                compact: None,
            };
            if cp.in_min_window || cp.in_max_window {
                let real = sigma_reality(&msigma, &cp.point);
                cp.sigma_real = Some(real);
                if real {
                    cp.compact = Some(tests.is_compact(&cp.point, options.refine_depth)?);
                }
            }
            critical.push(cp);
        }
    }

    let mut minimum = Extremum {
        value: cmin,
        witness: Witness::Corner(cmin_idx),
    };
    let mut maximum = Extremum {
        value: cmax,
        witness: Witness::Corner(cmax_idx),
    };
    for (i, cp) in critical.iter().enumerate() {
        if !cp.included() {
            continue;
        }
        if cp.in_min_window && cp.value < minimum.value {
            minimum = Extremum {
                value: cp.value.clone(),
                witness: Witness::Critical(i),
            };
        }
        if cp.in_max_window && cp.value > maximum.value {
            maximum = Extremum {
                value: cp.value.clone(),
                witness: Witness::Critical(i),
            };
        }
    }
    Ok(ExtremumReport {
        datum: datum.name(),
        objective: objective.clone(),
        window_enabled: bound.is_some(),
        corners: corner_entries,
        critical,
        minimum,
        maximum,
    })
}

fn extreme_corner(cs: &[CornerEntry], want: Ordering) -> (AlgebraicReal, usize) {
    let mut best = 0;
    for i in 1..cs.len() {
        if cs[i].value.cmp(&cs[best].value) == want {
            best = i;
        }
    }
    (cs[best].value.clone(), best)
}

/// Objective `f_i`.
pub fn fundamental_objective(rank: usize, i: usize) -> Poly {
    Poly::var(rank, i)
}

/// `Q`-valued helper used by tests and the CLI: the `r x r` zero check at a
/// rational point.
pub fn vanishes_at(m: &DerivationMatrix, x: &[Q]) -> bool {
    m.eval(x).iter().flatten().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qf};
    use alloc::vec;
    use crate::rootdata::build_root_datum;

    #[test]
    fn a1_compactness_region() {
        let d = build_root_datum('A', 1).unwrap();
        let m = derivation_matrix(&d, 6).unwrap();
        let s = sigma_matrix(&m);
        for (t, want) in [
            (q(-3), false),
            (q(-2), true),
            (q(-1), true),
            (q(0), true),
            (q(1), true),
            (q(2), true),
            (qf(5, 2), false),
        ] {
            let x = AlgebraicPoint::rational(&[t.clone()]);
            assert_eq!(is_compact_point(&s, &x, 100).unwrap(), want, "t = {t}");
        }
    }

    #[test]
    fn g2_pipeline() {
        let d = build_root_datum('G', 2).unwrap();
        let opts = ExtremumOptions::default();
        let rep = extremum(&d, &fundamental_objective(2, 1), &opts).unwrap();
        assert_eq!(rep.minimum.value, AlgebraicReal::integer(-2));
        assert!(matches!(rep.minimum.witness, Witness::Corner(_)));
        assert_eq!(rep.maximum.value, AlgebraicReal::integer(14));
        let extra: Vec<_> = rep.critical.iter().filter(|c| !c.is_corner).collect();
        assert_eq!(extra.len(), 1);
        assert_eq!(
            extra[0].point.rational_coords().unwrap(),
            vec![qf(7, 9), qf(10, 27)]
        );
        let rep1 = extremum(&d, &fundamental_objective(2, 0), &opts).unwrap();
        assert!(rep1.critical.iter().all(|c| c.is_corner));
        assert_eq!(rep1.minimum.value, AlgebraicReal::integer(-2));
    }

    #[test]
    fn g2_extra_point_is_compact() {
        let d = build_root_datum('G', 2).unwrap();
        let m = derivation_matrix(&d, 6).unwrap();
        let s = sigma_matrix(&m);
        let x = AlgebraicPoint::rational(&[qf(7, 9), qf(10, 27)]);
        assert!(is_compact_point(&s, &x, 100).unwrap());
        assert_eq!(rank_at_point(&m, &x), 1);
        let corner = AlgebraicPoint::rational(&[q(7), q(14)]);
        assert!(is_compact_point(&s, &corner, 100).unwrap());
        assert_eq!(rank_at_point(&m, &corner), 0);
    }

    #[test]
    fn a2_adjoint_minimum() {
        let d = build_root_datum('A', 2).unwrap();
        let obj = crate::poly::parse_poly("f1*f2 - 1", 2, "f").unwrap();
        let rep = extremum(&d, &obj, &ExtremumOptions::default()).unwrap();
        assert_eq!(rep.minimum.value, AlgebraicReal::integer(-1));
        assert!(extremum(&d, &fundamental_objective(2, 0), &ExtremumOptions::default()).is_err());
    }
}
