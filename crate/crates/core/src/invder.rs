//! The invariant-derivation matrix `M` of a simple simply connected group,
//! its twist `M^sigma`, and the reductive fixtures in torus coordinates.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{rank, Q};
use crate::charring::{CharRing, CharacterElement, FundamentalPolynomial};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rootdata::RootDatum;

/// Default rank cap for building `M`.
pub const DEFAULT_RANK_CAP: usize = 6;

/// `D_A(fg) - f D_A(g) - D_A(f) g`, in the fundamental characters.
pub fn biderivation(
    ring: &CharRing,
    f: &CharacterElement,
    g: &CharacterElement,
) -> Result<FundamentalPolynomial> {
    let fg = ring.multiply(f, g)?;
    let x = ring
        .apply_da(&fg)
        .sub(&ring.multiply(f, &ring.apply_da(g))?)?
        .sub(&ring.multiply(&ring.apply_da(f), g)?)?;
    ring.to_fundamental_polynomial(&x)
}

/// The same biderivation built from the Casimir `C_A`.
pub fn biderivation_casimir(
    ring: &CharRing,
    f: &CharacterElement,
    g: &CharacterElement,
) -> Result<FundamentalPolynomial> {
    let fg = ring.multiply(f, g)?;
    let x = ring
        .apply_ca(&fg)?
        .sub(&ring.multiply(f, &ring.apply_ca(g)?)?)?
        .sub(&ring.multiply(&ring.apply_ca(f)?, g)?)?;
    ring.to_fundamental_polynomial(&x)
}

/// `M` (or `M^sigma` when `twisted`) with polynomial entries in `f_1..f_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationMatrix {
    pub datum: RootDatum,
    pub entries: Vec<Vec<FundamentalPolynomial>>,
    /// The `-w0` permutation.
    pub dual_perm: Vec<usize>,
    pub twisted: bool,
}

impl DerivationMatrix {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i][j]
    }

    pub fn eval(&self, point: &[Q]) -> Vec<Vec<Q>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|p| p.eval(point)).collect())
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// `(M^sigma)^T = sigma(M^sigma)` with `sigma` permuting variables.
    pub fn hermitian_law_holds(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| {
            (0..n).all(|j| self.entries[j][i] == self.entries[i][j].permute_vars(&self.dual_perm))
        })
    }
}

/// Build `M` with entries `M_A(f_i, f_j)`.
pub fn derivation_matrix(datum: &RootDatum, rank_cap: usize) -> Result<DerivationMatrix> {
    let r = datum.rank();
    if r > rank_cap {
        return Err(Error::CapExceeded {
            what: "rank for the derivation matrix",
            value: r as u128,
            cap: rank_cap as u128,
        });
    }
    let ring = CharRing::new(datum.clone());
    let funds: Vec<CharacterElement> = (0..r).map(|i| ring.fundamental(i)).collect();
    let mut entries = vec![vec![Poly::zero(r); r]; r];
    for i in 0..r {
        for j in i..r {
            let p = biderivation(&ring, &funds[i], &funds[j])?;
            entries[j][i] = p.clone();
            entries[i][j] = p;
        }
    }
    Ok(DerivationMatrix {
        datum: datum.clone(),
        entries,
        dual_perm: datum.dual_permutation().to_vec(),
        twisted: false,
    })
}

/// `M^sigma[i][j] = M[i*][j]`.
pub fn sigma_matrix(m: &DerivationMatrix) -> DerivationMatrix {
    let entries = (0..m.rank())
        .map(|i| m.entries[m.dual_perm[i]].clone())
        .collect();
    DerivationMatrix {
        entries,
        twisted: !m.twisted,
        ..m.clone()
    }
}

/// Rank of `M` at a rational point.
pub fn rank_at(m: &DerivationMatrix, point: &[Q]) -> usize {
    rank(&m.eval(point))
}

/// Symmetric polynomials in `z_1..z_n` rewritten in the elementary symmetric
/// polynomials `e_1..e_n` (variables of the returned polynomial).
pub fn symmetric_to_elementary(p: &Poly) -> Result<Poly> {
    let n = p.nvars();
    let elementary: Vec<Poly> = (1..=n).map(|k| elementary_symmetric(n, k)).collect();
    let mut rest = p.clone();
    let mut out = Poly::zero(n);
    while !rest.is_zero() {
        // lexicographically largest monomial
        let (lead, c) = rest
            .terms()
            .max_by(|a, b| a.0.cmp(b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "polynomial is not symmetric (leading exponent {lead:?})"
            )));
        }
        let mut ex = vec![0u32; n];
        let mut prod = Poly::constant(n, Q::one());
        for k in 0..n {
            let next = if k + 1 < n { lead[k + 1] } else { 0 };
            ex[k] = lead[k] - next;
            prod = &prod * &elementary[k].pow(ex[k]);
        }
        rest = &rest - &prod.scale(&c);
        out.add_term(ex, c);
    }
    Ok(out)
}

fn elementary_symmetric(n: usize, k: usize) -> Poly {
    let mut p = Poly::zero(n);
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut e = vec![0u32; n];
        for &i in &idx {
            e[i] = 1;
        }
        p.add_term(e, Q::one());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return p;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `M = J^T A J` for `GL_n` with `f_k = e_k(z)` and `A` the identity pairing,
/// computed in torus coordinates.
pub fn gl_matrix(n: usize) -> Result<Vec<Vec<Poly>>> {
    let f: Vec<Poly> = (1..=n).map(|k| elementary_symmetric(n, k)).collect();
    // Euler operators z_k d/dz_k
    let euler = |p: &Poly, k: usize| -> Poly {
        let mut out = Poly::zero(n);
        for (e, c) in p.terms() {
            if e[k] > 0 {
                out.add_term(e.clone(), c * crate::arith::q(e[k] as i64));
            }
        }
        out
    };
    let mut m = vec![vec![Poly::zero(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = Poly::zero(n);
            for k in 0..n {
                s = &s + &(&euler(&f[i], k) * &euler(&f[j], k));
            }
            m[i][j] = symmetric_to_elementary(&s)?;
        }
    }
    Ok(m)
}

/// Entry of `M^sigma` for `GL_2`, as `numerator / f_2^k`.
pub type Gl2Entry = (Poly, u32);

/// `M^sigma = J(sigma)^T M` for `GL_2`, where `sigma(f_1) = f_1 / f_2` and
/// `sigma(f_2) = 1 / f_2`.
pub fn gl2_sigma_matrix() -> Result<Vec<Vec<Gl2Entry>>> {
    let m = gl_matrix(2)?;
    let f1 = Poly::var(2, 0);
    let f2 = Poly::var(2, 1);
    let one = Poly::constant(2, Q::one());
    // f_2^2 * d sigma(f_i) / d f_j
    let k = [
        [f2.clone(), -&f1],
        [Poly::zero(2), -&one],
    ];
    let mut out = Vec::new();
    for row in &k {
        let mut r = Vec::new();
        for j in 0..2 {
            let num = &(&row[0] * &m[0][j]) + &(&row[1] * &m[1][j]);
            r.push(reduce_by_f2(num, 2));
        }
        out.push(r);
    }
    Ok(out)
}

fn reduce_by_f2(mut num: Poly, mut k: u32) -> Gl2Entry {
    while k > 0 && !num.is_zero() && num.terms().all(|(e, _)| e[1] > 0) {
        num = Poly::from_terms(
            2,
            num.terms().map(|(e, c)| (vec![e[0], e[1] - 1], c.clone())),
        );
        k -= 1;
    }
    if num.is_zero() {
        k = 0;
    }
    (num, k)
}

/// Is the zero matrix?
pub fn is_zero_matrix(m: &[Vec<Q>]) -> bool {
    m.iter().flatten().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qf};
    use crate::poly::parse_poly;
    use crate::rootdata::build_root_datum;

    fn fp(s: &str, n: usize) -> Poly {
        parse_poly(s, n, "f").unwrap()
    }

    #[test]
    fn a1_matrix() {
        let d = build_root_datum('A', 1).unwrap();
        let m = derivation_matrix(&d, 6).unwrap();
        assert_eq!(m.entries[0][0], fp("2*f1^2 - 8", 1));
    }

    #[test]
    fn g2_matrix_printed() {
        let d = build_root_datum('G', 2).unwrap();
        let m = derivation_matrix(&d, 6).unwrap();
        assert_eq!(m.entries[0][0], fp("4*f1^2 - 4*f2 - 16*f1 - 28", 2));
        assert_eq!(
            m.entries[0][1],
            fp("6*f1*f2 - 14*f1^2 + 14*f2 - 16*f1 + 14", 2)
        );
        assert_eq!(
            m.entries[1][1],
            fp("-12*f1^3 + 12*f2^2 + 24*f1*f2 - 20*f1^2 + 8*f2 + 44*f1 - 28", 2)
        );
        let v = m.eval(&[qf(7, 9), qf(10, 27)]);
        assert_eq!(v, vec![vec![qf(-3200, 81), q(0)], vec![q(0), q(0)]]);
        assert_eq!(rank_at(&m, &[qf(7, 9), qf(10, 27)]), 1);
        assert_eq!(sigma_matrix(&m).entries, m.entries);
    }

    #[test]
    fn a2_sigma_swaps_rows() {
        let d = build_root_datum('A', 2).unwrap();
        let m = derivation_matrix(&d, 6).unwrap();
        let s = sigma_matrix(&m);
        assert_eq!(s.entries[0], m.entries[1]);
        assert_eq!(s.entries[1], m.entries[0]);
        assert!(s.hermitian_law_holds());
    }

    #[test]
    fn casimir_path_agrees() {
        for (k, n) in [('A', 1), ('A', 2), ('G', 2), ('B', 2)] {
            let d = build_root_datum(k, n).unwrap();
            let ring = CharRing::new(d.clone());
            for i in 0..n {
                for j in 0..n {
                    let (a, b) = (ring.fundamental(i), ring.fundamental(j));
                    assert_eq!(
                        biderivation(&ring, &a, &b).unwrap(),
                        biderivation_casimir(&ring, &a, &b).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn gl2_fixture() {
        let m = gl_matrix(2).unwrap();
        assert_eq!(m[0][0], fp("f1^2 - 2*f2", 2));
        assert_eq!(m[0][1], fp("f1*f2", 2));
        assert_eq!(m[1][1], fp("2*f2^2", 2));
        let s = gl2_sigma_matrix().unwrap();
        assert_eq!(s[0][0], (fp("-2", 2), 0));
        assert_eq!(s[0][1], (fp("-f1", 2), 0));
        assert_eq!(s[1][0], (fp("-f1", 2), 1));
        assert_eq!(s[1][1], (fp("-2", 2), 0));
    }
}
