//! Root data of simple simply connected groups: Cartan matrices, positive
//! roots, the invariant form, Weyl orbits and the corners of `T/W`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{determinant, invert, q, Q, Z};
use crate::error::{Error, Result};

/// Integer coordinates in the fundamental-weight basis.
pub type Weight = Vec<i64>;

/// Immutable description of a simple simply connected type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    kind: char,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Q>>,
    /// Positive roots in the weight basis, ordered by height.
    pos_roots: Vec<Weight>,
    /// Positive roots in the simple-root basis, same order.
    pos_roots_simple: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_i) / 2` with short roots normalized to 1.
    root_len: Vec<i64>,
    highest_root_coeffs: Vec<i64>,
    fundamental_group_order: i64,
    /// Gram matrix of the normalized form on fundamental weights.
    b: Vec<Vec<Q>>,
    form_scale: i64,
    dual_perm: Vec<usize>,
    weyl_order: u128,
    center_exponent: i64,
}

/// Validate a type letter and rank.
pub fn check_type(kind: char, rank: usize) -> Result<()> {
    let bad = |reason| Err(Error::InvalidType { kind, rank, reason });
    match kind {
        'A' if rank >= 1 => Ok(()),
        'B' | 'C' if rank >= 2 => Ok(()),
        'D' if rank >= 4 => Ok(()),
        'E' if (6..=8).contains(&rank) => Ok(()),
        'F' if rank == 4 => Ok(()),
        'G' if rank == 2 => Ok(()),
        'A' | 'B' | 'C' | 'D' | 'E' | 'F' | 'G' => bad("rank out of range for this family"),
        _ => bad("type letter must be one of A..G"),
    }
}

/// Cartan matrix `C[i][j] = <alpha_i, alpha_j^vee>`, Bourbaki numbering
/// (G2 with alpha_1 short).
pub fn cartan_matrix(kind: char, rank: usize) -> Result<Vec<Vec<i64>>> {
    check_type(kind, rank)?;
    let n = rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match kind {
        'A' | 'B' | 'C' => (0..n - 1).for_each(|i| link(i, i + 1)),
        'D' => {
            (0..n - 2).for_each(|i| link(i, i + 1));
            link(n - 3, n - 1);
        }
        'E' => {
            link(0, 2);
            link(1, 3);
            (2..n - 1).for_each(|i| link(i, i + 1));
        }
        'F' => (0..3).for_each(|i| link(i, i + 1)),
        'G' => link(0, 1),
        _ => unreachable!(),
    }
    // Long row, short column carries the multiple bond.
    match kind {
        'B' => c[n - 2][n - 1] = -2,
        'C' => c[n - 1][n - 2] = -2,
        'F' => c[1][2] = -2,
        'G' => c[1][0] = -3,
        _ => {}
    }
    Ok(c)
}

fn classification_dim(kind: char, n: usize) -> usize {
    match kind {
        'A' => n * n + 2 * n,
        'B' | 'C' => 2 * n * n + n,
        'D' => 2 * n * n - n,
        'E' => [78, 133, 248][n - 6],
        'F' => 52,
        'G' => 14,
        _ => 0,
    }
}

/// Build the root datum of the simply connected group of the given type.
pub fn build_root_datum(kind: char, rank: usize) -> Result<RootDatum> {
    let kind = kind.to_ascii_uppercase();
    let cartan = cartan_matrix(kind, rank)?;
    let n = rank;
    let cq: Vec<Vec<Q>> = cartan
        .iter()
        .map(|r| r.iter().map(|&x| q(x)).collect())
        .collect();
    let cartan_inv = invert(&cq).expect("Cartan matrix is invertible");
    let det = determinant(&cq).to_integer().to_i64().unwrap();

    let root_len = symmetrizer(&cartan);
    let (pos_roots_simple, pos_roots) = positive_roots(&cartan);
    if pos_roots.len() * 2 + n != classification_dim(kind, n) {
        return Err(Error::InvalidType {
            kind,
            rank,
            reason: "root enumeration disagrees with classification",
        });
    }
    let highest_root_coeffs = pos_roots_simple.last().unwrap().clone();

    // (omega_i, omega_j) = d_i (C^-1)_{ji}
    let b = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| &cartan_inv[j][i] * q(root_len[i]))
                .collect()
        })
        .collect();

    let center_exponent = cartan_inv
        .iter()
        .flatten()
        .fold(Z::one(), |a, x| a.lcm(x.denom()))
        .to_i64()
        .unwrap();

    let weyl_order = weyl_order_of(&pos_roots_simple, &vec![true; n]);

    let mut d = RootDatum {
        kind,
        rank,
        cartan,
        cartan_inv,
        pos_roots,
        pos_roots_simple,
        root_len,
        highest_root_coeffs,
        fundamental_group_order: det,
        b,
        form_scale: 1,
        dual_perm: Vec::new(),
        weyl_order,
        center_exponent,
    };
    d.dual_perm = (0..n)
        .map(|i| {
            let neg: Weight = d.fundamental_weight(i).iter().map(|x| -x).collect();
            let dom = d.dominant(&neg).0;
            dom.iter().position(|&x| x == 1).unwrap()
        })
        .collect();
    Ok(d)
}

/// Root lengths `(alpha_i, alpha_i)/2`, normalized so short roots give 1.
fn symmetrizer(c: &[Vec<i64>]) -> Vec<i64> {
    let n = c.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    d[0] = Some(Q::one());
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                if i != j && c[i][j] != 0 && d[i].is_some() && d[j].is_none() {
                    // (alpha_i, alpha_j) = C[i][j] d_j = C[j][i] d_i
                    let dj = d[i].clone().unwrap() * q(c[j][i]) / q(c[i][j]);
                    d[j] = Some(dj);
                    changed = true;
                }
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(Option::unwrap).collect();
    let min = d.iter().min().unwrap().clone();
    d.iter().map(|x| (x / &min).to_integer().to_i64().unwrap()).collect()
}

/// Positive roots by height, via root strings.
fn positive_roots(c: &[Vec<i64>]) -> (Vec<Vec<i64>>, Vec<Weight>) {
    let n = c.len();
    let to_weight = |s: &[i64]| -> Weight {
        (0..n).map(|j| (0..n).map(|k| s[k] * c[k][j]).sum()).collect()
    };
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: BTreeSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            let w = to_weight(beta);
            for i in 0..n {
                // p = largest k with beta - k alpha_i a root
                let mut p = 0;
                let mut cur = beta.clone();
                loop {
                    cur[i] -= 1;
                    if cur[i] < 0 || !known.contains(&cur) {
                        break;
                    }
                    p += 1;
                }
                if p - w[i] > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort_by(|a, b| b.cmp(a));
        roots.extend(next.iter().cloned());
        layer = next;
    }
    let weights = roots.iter().map(|r| to_weight(r)).collect();
    (roots, weights)
}

/// Order of the parabolic subgroup generated by the simple reflections in
/// `mask`, as the product of (ht + 1)/ht over its positive roots.
fn weyl_order_of(pos_simple: &[Vec<i64>], mask: &[bool]) -> u128 {
    let mut num = Z::one();
    let mut den = Z::one();
    for r in pos_simple {
        if r.iter().zip(mask).all(|(&c, &m)| m || c == 0) {
            let h: i64 = r.iter().sum();
            num *= h + 1;
            den *= h;
        }
    }
    (num / den).to_u128().unwrap()
}

impl RootDatum {
    pub fn kind(&self) -> char {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Name such as `G2` or `E8`.
    pub fn name(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inverse(&self) -> &[Vec<Q>] {
        &self.cartan_inv
    }

    /// Simple root `alpha_i` in the weight basis.
    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.cartan[i]
    }

    /// Simple coroot `alpha_i^vee` as a functional on weights (unit vector).
    pub fn simple_coroot(&self, i: usize) -> Weight {
        self.fundamental_weight(i)
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.pos_roots
    }

    /// Positive roots in the simple-root basis.
    pub fn positive_roots_simple(&self) -> &[Vec<i64>] {
        &self.pos_roots_simple
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut w = vec![0; self.rank];
        w[i] = 1;
        w
    }

    pub fn rho(&self) -> Weight {
        vec![1; self.rank]
    }

    pub fn highest_root(&self) -> &[i64] {
        self.pos_roots.last().unwrap()
    }

    /// Highest short root, when there are two root lengths.
    pub fn highest_short_root(&self) -> Option<&[i64]> {
        let theta = self.highest_root();
        let long = self.b_pair(theta, theta);
        self.pos_roots
            .iter()
            .rev()
            .find(|b| self.b_pair(b, b) < long)
            .map(|b| b.as_slice())
    }

    pub fn highest_root_coeffs(&self) -> &[i64] {
        &self.highest_root_coeffs
    }

    pub fn fundamental_group_order(&self) -> i64 {
        self.fundamental_group_order
    }

    /// Exponent of the center `P/Q`.
    pub fn center_exponent(&self) -> i64 {
        self.center_exponent
    }

    pub fn root_lengths(&self) -> &[i64] {
        &self.root_len
    }

    pub fn is_short(&self, i: usize) -> bool {
        self.root_len[i] == 1
    }

    pub fn weyl_order(&self) -> u128 {
        self.weyl_order
    }

    pub fn dim(&self) -> usize {
        self.rank + 2 * self.pos_roots.len()
    }

    /// The permutation `i -> i*` with `-w0(omega_i) = omega_{i*}`.
    pub fn dual_permutation(&self) -> &[usize] {
        &self.dual_perm
    }

    pub fn minus_one_in_weyl(&self) -> bool {
        self.dual_perm.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Positive integer multiplier applied on top of `|P/Q| B`.
    pub fn form_scale(&self) -> i64 {
        self.form_scale
    }

    pub fn with_form_scale(&self, k: i64) -> Result<RootDatum> {
        if k <= 0 {
            return Err(Error::InvalidArgument(format!(
                "form scale must be positive, got {k}"
            )));
        }
        let mut d = self.clone();
        d.form_scale = k;
        Ok(d)
    }

    /// Gram matrix of `B` on fundamental weights (short roots of length 2).
    pub fn form_b(&self) -> &[Vec<Q>] {
        &self.b
    }

    /// Gram matrix of the invariant form `A = |P/Q| B` (times the form
    /// scale) on fundamental weights.
    pub fn form_matrix(&self) -> Vec<Vec<Q>> {
        let k = q(self.fundamental_group_order * self.form_scale);
        self.b
            .iter()
            .map(|r| r.iter().map(|x| x * &k).collect())
            .collect()
    }

    /// The matrix with `M = J^T (2A) J` for the Jacobian `J` of the
    /// fundamental characters in exponential coordinates; `(2)` for A1.
    pub fn jacobian_form(&self) -> Vec<Vec<Q>> {
        self.form_matrix()
            .into_iter()
            .map(|r| r.into_iter().map(|x| x * q(2)).collect())
            .collect()
    }

    /// `B(mu, nu)`.
    pub fn b_pair(&self, mu: &[i64], nu: &[i64]) -> Q {
        let mut s = Q::zero();
        for (i, &a) in mu.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in nu.iter().enumerate() {
                if b != 0 {
                    s += &self.b[i][j] * q(a * b);
                }
            }
        }
        s
    }

    /// `A(mu, nu)`.
    pub fn form(&self, mu: &[i64], nu: &[i64]) -> Q {
        self.b_pair(mu, nu) * q(self.fundamental_group_order * self.form_scale)
    }

    /// `A(mu, mu)` as an integer; `A` is integral on the weight lattice.
    pub fn norm(&self, mu: &[i64]) -> i64 {
        self.form(mu, mu).to_integer().to_i64().unwrap()
    }

    /// `<mu, beta^vee>` for a root `beta`.
    pub fn coroot_pairing(&self, mu: &[i64], beta: &[i64]) -> Q {
        q(2) * self.b_pair(mu, beta) / self.b_pair(beta, beta)
    }

    /// `<mu, omega_i^vee>`: the `alpha_i` coordinate of `mu`.
    pub fn fundamental_coweight_pairing(&self, mu: &[i64], i: usize) -> Q {
        mu.iter()
            .enumerate()
            .map(|(k, &m)| &self.cartan_inv[k][i] * q(m))
            .sum()
    }

    /// Height-like linear functional: pairing with `rho^vee` scaled to be
    /// integral, used to order dominant weights.
    pub fn height(&self, mu: &[i64]) -> Q {
        (0..self.rank)
            .map(|i| self.fundamental_coweight_pairing(mu, i))
            .sum()
    }

    pub fn reflect(&self, mu: &mut [i64], i: usize) {
        let c = mu[i];
        if c != 0 {
            for (m, a) in mu.iter_mut().zip(&self.cartan[i]) {
                *m -= c * a;
            }
        }
    }

    pub fn is_dominant(&self, mu: &[i64]) -> bool {
        mu.iter().all(|&x| x >= 0)
    }

    /// Dominant representative of the orbit, with the number of simple
    /// reflections used (its parity is the sign of the Weyl element for
    /// regular weights).
    pub fn dominant(&self, mu: &[i64]) -> (Weight, usize) {
        let mut w = mu.to_vec();
        let mut steps = 0;
        while let Some(i) = w.iter().position(|&x| x < 0) {
            self.reflect(&mut w, i);
            steps += 1;
        }
        (w, steps)
    }

    /// `|W_lambda|` for dominant `lambda`.
    pub fn stabilizer_order(&self, lambda: &[i64]) -> u128 {
        let mask: Vec<bool> = lambda.iter().map(|&x| x == 0).collect();
        weyl_order_of(&self.pos_roots_simple, &mask)
    }

    /// Size of the orbit of the dominant weight `lambda`.
    pub fn orbit_size(&self, lambda: &[i64]) -> u128 {
        self.weyl_order / self.stabilizer_order(lambda)
    }

    /// Visit the orbit of a dominant weight, each element once.
    pub fn for_each_in_orbit(&self, lambda: &[i64], mut f: impl FnMut(&[i64])) {
        let mut stack = vec![lambda.to_vec()];
        while let Some(mu) = stack.pop() {
            f(&mu);
            for i in 0..self.rank {
                if mu[i] > 0 {
                    let mut nu = mu.clone();
                    self.reflect(&mut nu, i);
                    // canonical parent: the first negative coordinate
                    if nu[..i].iter().all(|&x| x >= 0) {
                        stack.push(nu);
                    }
                }
            }
        }
    }

    /// Weyl dimension formula.
    pub fn weyl_dimension(&self, lambda: &[i64]) -> Z {
        let rho = self.rho();
        let lr: Weight = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let mut num = Q::one();
        for beta in &self.pos_roots {
            num *= self.b_pair(&lr, beta) / self.b_pair(&rho, beta);
        }
        num.to_integer()
    }

    /// Dimensions of the fundamental representations.
    pub fn fundamental_dims(&self) -> Vec<Z> {
        (0..self.rank)
            .map(|i| self.weyl_dimension(&self.fundamental_weight(i)))
            .collect()
    }
}

/// All weights in the orbit of `weight` (any weight, not necessarily dominant).
pub fn weyl_orbit(datum: &RootDatum, weight: &[i64]) -> BTreeSet<Weight> {
    let (dom, _) = datum.dominant(weight);
    let mut out = BTreeSet::new();
    datum.for_each_in_orbit(&dom, |mu| {
        out.insert(mu.to_vec());
    });
    out
}

/// A torsion conjugacy class at a vertex of the fundamental alcove.
#[derive(Clone, Debug)]
pub struct CornerClass {
    pub index: usize,
    pub kac: Vec<u32>,
    pub order_bound: i64,
    /// `omega_i^vee / a_i` in the basis of fundamental coweights.
    pub point: Vec<Q>,
    /// Values of `f_1..f_r`.
    pub values: Vec<crate::cyclotomic::TorsionValue>,
}

impl CornerClass {
    /// Integer values of the fundamental characters, when all are rational
    /// integers.
    pub fn integer_values(&self) -> Option<Vec<Z>> {
        self.values.iter().map(|v| v.as_integer()).collect()
    }

    /// `(m, k)` with the point equal to `k / m` in coweight coordinates.
    pub fn torsion(&self) -> (u64, Vec<i64>) {
        let m = self
            .point
            .iter()
            .fold(Z::one(), |a, x| a.lcm(x.denom()))
            .to_u64()
            .unwrap();
        let k = self
            .point
            .iter()
            .map(|x| (x * q(m as i64)).to_integer().to_i64().unwrap())
            .collect();
        (m, k)
    }
}

/// Alcove vertex geometry for class `i` (0 = identity) without values.
pub fn corner_geometry(datum: &RootDatum, i: usize) -> (Vec<u32>, i64, Vec<Q>) {
    let r = datum.rank();
    let mut kac = vec![0u32; r + 1];
    kac[i] = 1;
    let mut point = vec![Q::zero(); r];
    let order = if i == 0 {
        1
    } else {
        let a = datum.highest_root_coeffs()[i - 1];
        point[i - 1] = Q::new(Z::one(), Z::from(a));
        a * datum.center_exponent()
    };
    (kac, order, point)
}

/// The `r + 1` corners with the values of every fundamental character.
pub fn corners(datum: &RootDatum) -> Result<Vec<CornerClass>> {
    let ring = crate::charring::CharRing::new(datum.clone());
    let funds: Vec<_> = (0..datum.rank())
        .map(|i| ring.irreducible(&datum.fundamental_weight(i)))
        .collect::<Result<_>>()?;
    (0..=datum.rank())
        .map(|i| {
            let (kac, order_bound, point) = corner_geometry(datum, i);
            let values = funds
                .iter()
                .map(|f| crate::charring::evaluate_at_point(f, &point))
                .collect::<Result<_>>()?;
            Ok(CornerClass {
                index: i,
                kac,
                order_bound,
                point,
                values,
            })
        })
        .collect()
}

/// Default cap on `|W|` for exhaustive enumeration (covers E7).
pub const DEFAULT_WEYL_CAP: u128 = 3_000_000;

/// Minimum trace of a Weyl group element on the reflection representation,
/// by exhaustive enumeration of `W` as the orbit of `rho`.
pub fn weyl_min_trace(datum: &RootDatum, cap: u128) -> Result<Q> {
    if datum.weyl_order() > cap {
        return Err(Error::CapExceeded {
            what: "Weyl group order",
            value: datum.weyl_order(),
            cap,
        });
    }
    let r = datum.rank();
    let alpha: Vec<Vec<i32>> = datum
        .cartan()
        .iter()
        .map(|row| row.iter().map(|&x| x as i32).collect())
        .collect();
    // matrix of w in the weight basis, columns are images of omega_j
    let ident: Vec<Vec<i32>> = (0..r)
        .map(|i| (0..r).map(|j| i32::from(i == j)).collect())
        .collect();
    let mut best = r as i32;
    let mut stack = vec![(vec![1i64; r], ident)];
    while let Some((mu, m)) = stack.pop() {
        let tr: i32 = (0..r).map(|i| m[i][i]).sum();
        best = best.min(tr);
        for i in 0..r {
            if mu[i] > 0 {
                let mut nu = mu.clone();
                datum.reflect(&mut nu, i);
                if nu[..i].iter().all(|&x| x >= 0) {
                    // s_i x = x - x_i alpha_i
                    let mut m2 = m.clone();
                    for k in 0..r {
                        if alpha[i][k] != 0 {
                            for j in 0..r {
                                m2[k][j] -= alpha[i][k] * m[i][j];
                            }
                        }
                    }
                    stack.push((nu, m2));
                }
            }
        }
    }
    Ok(q(best as i64))
}

/// Is the matrix positive definite (all leading principal minors positive)?
pub fn is_positive_definite(m: &[Vec<Q>]) -> bool {
    (1..=m.len()).all(|k| {
        let sub: Vec<Vec<Q>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
        determinant(&sub).is_positive()
    })
}
