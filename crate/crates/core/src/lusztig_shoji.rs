//! Characters of `W_{n,r}` (`r = 1`: symmetric group, `r = 2`: hyperoctahedral
//! group), fake degrees, the matrix `Ω`, and the triangular solver for
//! `P Ξ Pᵀ = Ω`.
//!
//! For `r = 1` everything is indexed by double partitions `(λ;−)` and classes
//! with no negative cycles, so one character routine serves both cases.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use crate::double_symfunc::PolyMatrix;
use crate::error::{check_size, Error, Result};
use crate::par;
use crate::partition::{
    double_dominance_le, enumerate_double_partitions, enumerate_partitions, partition_order, sub_multisets,
    total_order, DoublePartition, Partition,
};
use crate::poly::{CycloProduct, IntPoly, RatFn, Rational};
use crate::symfunc::sn_character;

/// Conjugacy class of `W_{n,2}`: cycle type of positive and negative cycles.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WreathClass {
    pub pos: Partition,
    pub neg: Partition,
}

impl WreathClass {
    pub fn new(pos: Partition, neg: Partition) -> Self {
        WreathClass { pos, neg }
    }

    pub fn size(&self) -> usize {
        self.pos.size() + self.neg.size()
    }

    /// Centralizer order `z_ρ z_σ 2^{ℓ(ρ)+ℓ(σ)}`.
    pub fn centralizer(&self) -> u128 {
        (self.pos.z() * self.neg.z()) << (self.pos.len() + self.neg.len())
    }

    /// `det(t - w)` on the reflection representation, `Π(t^ρ_i - 1) Π(t^σ_j + 1)`.
    pub fn char_poly(&self) -> CycloProduct {
        let mut d = CycloProduct::one();
        for &p in self.pos.parts() {
            d = d.mul(&CycloProduct::t_pow_minus_one(p as u32));
        }
        for &s in self.neg.parts() {
            d = d.mul(&CycloProduct::t_pow_plus_one(s as u32));
        }
        d
    }
}

fn check_r(r: u8) -> Result<()> {
    if r == 1 || r == 2 {
        Ok(())
    } else {
        Err(Error::Invalid(format!("r must be 1 or 2, got {r}")))
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `|W_{n,r}|`.
pub fn group_order(n: usize, r: u8) -> u128 {
    if r == 2 {
        factorial(n) << n
    } else {
        factorial(n)
    }
}

/// Conjugacy classes with their sizes.
pub fn wn_classes(n: usize, r: u8) -> Result<Vec<(WreathClass, u128)>> {
    check_r(r)?;
    let order = group_order(n, r);
    let mut out = Vec::new();
    if r == 1 {
        for rho in enumerate_partitions(n) {
            let size = order / rho.z();
            out.push((WreathClass::new(rho, Partition::empty()), size));
        }
    } else {
        for k in 0..=n {
            for rho in enumerate_partitions(n - k) {
                for sigma in enumerate_partitions(k) {
                    let c = WreathClass::new(rho.clone(), sigma);
                    let size = order / c.centralizer();
                    out.push((c, size));
                }
            }
        }
    }
    Ok(out)
}

fn binomial_weight(whole: &Partition, part: &Partition) -> i64 {
    let taken: HashMap<usize, usize> = part.multiplicities().into_iter().collect();
    let mut w = 1i64;
    for (p, m) in whole.multiplicities() {
        let k = taken.get(&p).copied().unwrap_or(0);
        for i in 0..k {
            w = w * (m - i) as i64 / (i + 1) as i64;
        }
    }
    w
}

/// `χ^Λ(c)`, with `χ^Λ` induced from `χ^{λ'} ⊗ (χ^{λ''}·sign on negative cycles)`.
pub fn wn_character(lam: &DoublePartition, c: &WreathClass) -> Result<i64> {
    check_size(lam.size(), c.size())?;
    let m1 = lam.first.size();
    let mut total = 0i64;
    for (r1, r2) in sub_multisets(&c.pos) {
        if r1.size() > m1 {
            continue;
        }
        for (s1, s2) in sub_multisets(&c.neg) {
            if r1.size() + s1.size() != m1 {
                continue;
            }
            let a = sn_character(&lam.first, &r1.union(&s1))?;
            if a == 0 {
                continue;
            }
            let b = sn_character(&lam.second, &r2.union(&s2))?;
            let sign = if s2.len() % 2 == 0 { 1 } else { -1 };
            total += binomial_weight(&c.pos, &r1) * binomial_weight(&c.neg, &s1) * a * b * sign;
        }
    }
    Ok(total)
}

/// Irreducible labels: `(λ;−)` for `r = 1`, all of `𝒫_{n,2}` for `r = 2`.
pub fn irrep_labels(n: usize, r: u8) -> Result<Vec<DoublePartition>> {
    check_r(r)?;
    Ok(if r == 1 {
        enumerate_partitions(n).into_iter().map(|l| DoublePartition::new(l, Partition::empty())).collect()
    } else {
        enumerate_double_partitions(n)
    })
}

/// Full character table of `W_{n,r}`.
#[derive(Clone, Debug)]
pub struct CharTable {
    pub n: usize,
    pub r: u8,
    pub labels: Vec<DoublePartition>,
    pub classes: Vec<WreathClass>,
    pub class_sizes: Vec<u128>,
    /// `values[i][j] = χ^{labels[i]}(classes[j])`.
    pub values: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn label_index(&self, lam: &DoublePartition) -> Option<usize> {
        self.labels.iter().position(|l| l == lam)
    }

    pub fn value(&self, lam: &DoublePartition, c: &WreathClass) -> Option<i64> {
        let i = self.label_index(lam)?;
        let j = self.classes.iter().position(|x| x == c)?;
        Some(self.values[i][j])
    }

    /// Sign character: `χ^{(−;1^n)}` for `r = 2`, `χ^{(1^n)}` for `r = 1`.
    pub fn sign_label(&self) -> DoublePartition {
        if self.r == 2 {
            DoublePartition::new(Partition::empty(), Partition::column(self.n))
        } else {
            DoublePartition::new(Partition::column(self.n), Partition::empty())
        }
    }

    pub fn order(&self) -> u128 {
        group_order(self.n, self.r)
    }
}

type TableCache = Mutex<HashMap<(usize, u8), Arc<CharTable>>>;

/// Cached character table.
pub fn char_table(n: usize, r: u8) -> Result<Arc<CharTable>> {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(n, r)) {
        return Ok(t.clone());
    }
    let labels = irrep_labels(n, r)?;
    let (classes, class_sizes): (Vec<_>, Vec<_>) = wn_classes(n, r)?.into_iter().unzip();
    let values = par::map(&labels, |l| classes.iter().map(|c| wn_character(l, c).expect("sizes match")).collect());
    let t = Arc::new(CharTable { n, r, labels, classes, class_sizes, values });
    cache.lock().unwrap().insert((n, r), t.clone());
    Ok(t)
}

/// Per-class data for Molien sums: `|c|` and `D / det(t - w_c)` where `D` is
/// the lcm of all class determinants.
struct MolienData {
    sizes: Vec<i128>,
    cofactors: Vec<IntPoly>,
    /// `Π(t^{ir} - 1) / D`.
    prefactor: IntPoly,
    order: i128,
}

fn molien_data(table: &CharTable) -> Result<MolienData> {
    let dets: Vec<CycloProduct> = table.classes.iter().map(WreathClass::char_poly).collect();
    let lcm = dets.iter().fold(CycloProduct::one(), |acc, d| acc.lcm(d));
    let cofactors = dets.iter().map(|d| lcm.div(d).to_poly()).collect();
    let mut top = CycloProduct::one();
    for i in 1..=table.n {
        top = top.mul(&CycloProduct::t_pow_minus_one((i * table.r as usize) as u32));
    }
    let missing = lcm.exps.iter().any(|(d, e)| top.exps.get(d).copied().unwrap_or(0) < *e);
    if missing {
        return Err(Error::Arithmetic("class determinant does not divide the degree product".into()));
    }
    Ok(MolienData {
        sizes: table.class_sizes.iter().map(|&s| s as i128).collect(),
        cofactors,
        prefactor: top.div(&lcm).to_poly(),
        order: table.order() as i128,
    })
}

impl MolienData {
    /// `Π(t^{ir}-1)/|W| · Σ_c |c| f(c) / det(t - w_c)` for integer class values `f`.
    fn evaluate(&self, f: impl Fn(usize) -> i64) -> Result<IntPoly> {
        let mut s = IntPoly::zero();
        for (j, cof) in self.cofactors.iter().enumerate() {
            let v = f(j);
            if v != 0 {
                s += &cof.scale(self.sizes[j] * v as i128);
            }
        }
        (&self.prefactor * &s)
            .div_scalar_exact(self.order)
            .ok_or_else(|| Error::Arithmetic("Molien sum is not integral".into()))
    }
}

/// Fake degree `R(χ^Λ)` of an irreducible character.
pub fn fake_degree(lam: &DoublePartition, r: u8) -> Result<IntPoly> {
    let table = char_table(lam.size(), r)?;
    let i = table
        .label_index(lam)
        .ok_or_else(|| Error::Invalid(format!("{lam} does not label a character of W_{{{},{r}}}", lam.size())))?;
    let eps = table.label_index(&table.sign_label()).expect("sign label present");
    let m = molien_data(&table)?;
    m.evaluate(|j| table.values[eps][j] * table.values[i][j])
}

/// Number of positive roots: `n²` for `r = 2`, `n(n-1)/2` for `r = 1`.
pub fn positive_roots(n: usize, r: u8) -> usize {
    if r == 2 {
        n * n
    } else {
        n * n.saturating_sub(1) / 2
    }
}

/// `ω_{Λ,Μ} = t^N R(χ^Λ ⊗ χ^Μ ⊗ ε)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaMatrix {
    pub n: usize,
    pub r: u8,
    pub labels: Vec<DoublePartition>,
    pub entries: Vec<Vec<IntPoly>>,
}

impl OmegaMatrix {
    pub fn entry(&self, a: &DoublePartition, b: &DoublePartition) -> Option<&IntPoly> {
        let i = self.labels.iter().position(|l| l == a)?;
        let j = self.labels.iter().position(|l| l == b)?;
        Some(&self.entries[i][j])
    }

    pub fn is_symmetric(&self) -> bool {
        let m = self.labels.len();
        (0..m).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }
}

pub fn omega_matrix(n: usize, r: u8) -> Result<OmegaMatrix> {
    let table = char_table(n, r)?;
    let m = molien_data(&table)?;
    let shift = positive_roots(n, r) as i32;
    let k = table.labels.len();
    let rows: Vec<Result<Vec<IntPoly>>> = par::map_range(k, |i| {
        (0..=i).map(|j| Ok(m.evaluate(|c| table.values[i][c] * table.values[j][c])?.shift(shift))).collect()
    });
    let mut entries = vec![vec![IntPoly::zero(); k]; k];
    for (i, row) in rows.into_iter().enumerate() {
        for (j, e) in row?.into_iter().enumerate() {
            entries[j][i] = e.clone();
            entries[i][j] = e;
        }
    }
    Ok(OmegaMatrix { n, r, labels: table.labels.clone(), entries })
}

/// Solution `(P, Ξ)` of `P Ξ Pᵀ = Ω`.
#[derive(Clone, Debug)]
pub struct LsSolution {
    /// `p[Λ][Μ]`, rows and columns in the order used by the solver.
    pub p: PolyMatrix,
    pub xi: Vec<RatFn>,
}

/// Solves `P Ξ Pᵀ = Ω` with `Ξ` diagonal, `p_{ΛΜ} = 0` unless `Μ ≤ Λ`, and
/// `p_{ΛΛ} = t^{a(Λ)}`. `order` lists labels greatest first.
pub fn solve_p_lambda(
    omega: &OmegaMatrix,
    order: &[DoublePartition],
    a: impl Fn(&DoublePartition) -> usize,
) -> Result<LsSolution> {
    let m = order.len();
    if m != omega.labels.len() {
        return Err(Error::Invalid(format!("order has {m} labels, Ω has {}", omega.labels.len())));
    }
    let mut w = vec![vec![RatFn::zero(); m]; m];
    for (i, x) in order.iter().enumerate() {
        for (j, y) in order.iter().enumerate() {
            let e = omega.entry(x, y).ok_or_else(|| Error::Invalid(format!("{x} or {y} not in Ω")))?;
            w[i][j] = RatFn::from_poly(e.clone());
        }
    }
    let diag: Vec<RatFn> = order.iter().map(|l| RatFn::from_poly(IntPoly::monomial(1, a(l) as i32))).collect();
    let mut p = vec![vec![RatFn::zero(); m]; m];
    let mut xi = vec![RatFn::zero(); m];
    for i in (0..m).rev() {
        p[i][i] = diag[i].clone();
        for j in (i + 1..m).rev() {
            let mut rhs = w[i][j].clone();
            for k in j + 1..m {
                rhs -= &(&(&p[i][k] * &xi[k]) * &p[j][k]);
            }
            let val = rhs.checked_div(&(&xi[j] * &diag[j]))?;
            if !val.is_zero() && !double_dominance_le(&order[j], &order[i])? {
                return Err(Error::Inconsistent(format!(
                    "p[{},{}] = {val} but {} is not dominated by {}",
                    order[i], order[j], order[j], order[i]
                )));
            }
            p[i][j] = val;
        }
        let mut rhs = w[i][i].clone();
        for k in i + 1..m {
            rhs -= &(&(&p[i][k] * &p[i][k]) * &xi[k]);
        }
        xi[i] = rhs.checked_div(&(&diag[i] * &diag[i]))?;
        if xi[i].is_zero() {
            return Err(Error::Inconsistent(format!("zero pivot at {}", order[i])));
        }
    }
    let mut entries = vec![vec![IntPoly::zero(); m]; m];
    for i in 0..m {
        for j in i..m {
            entries[i][j] = p[i][j].to_poly().ok_or_else(|| {
                Error::Inconsistent(format!("p[{},{}] = {} is not a polynomial", order[i], order[j], p[i][j]))
            })?;
        }
    }
    Ok(LsSolution { p: PolyMatrix::new(omega.n, order.to_vec(), entries), xi })
}

impl LsSolution {
    /// `P Ξ Pᵀ - Ω`, entrywise; all zero for a valid solution.
    pub fn residual(&self, omega: &OmegaMatrix) -> Vec<Vec<RatFn>> {
        let order = &self.p.order;
        let m = order.len();
        let pr: Vec<Vec<RatFn>> =
            self.p.entries.iter().map(|row| row.iter().map(|e| RatFn::from_poly(e.clone())).collect()).collect();
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let mut s = RatFn::zero();
                        for k in 0..m {
                            s += &(&(&pr[i][k] * &self.xi[k]) * &pr[j][k]);
                        }
                        s - RatFn::from_poly(omega.entry(&order[i], &order[j]).cloned().unwrap_or_default())
                    })
                    .collect()
            })
            .collect()
    }
}

/// Modified double Kostka matrix `K̃` via `Ω` for `r = 2`, in the given order.
pub fn ls_modified_double_kostka_in(order: &[DoublePartition]) -> Result<PolyMatrix> {
    let n = order.first().map(DoublePartition::size).unwrap_or(0);
    let omega = omega_matrix(n, 2)?;
    Ok(solve_p_lambda(&omega, order, DoublePartition::a_stat)?.p)
}

pub fn ls_modified_double_kostka(n: usize) -> Result<PolyMatrix> {
    ls_modified_double_kostka_in(&total_order(n))
}

/// Recovers `K = t^{a(Μ)} K̃(1/t)` from `K̃`.
pub fn unmodify(kt: &PolyMatrix) -> PolyMatrix {
    let entries = kt
        .entries
        .iter()
        .map(|row| row.iter().zip(&kt.order).map(|(e, mu)| e.invert_variable().shift(mu.a_stat() as i32)).collect())
        .collect();
    PolyMatrix::new(kt.n, kt.order.clone(), entries)
}

/// `K` obtained from the `r = 2` solver.
pub fn ls_double_kostka(n: usize) -> Result<PolyMatrix> {
    Ok(unmodify(&ls_modified_double_kostka(n)?))
}

/// `K̃_{λμ}(t) = t^{n(μ)}K_{λμ}(1/t)` from the `r = 1` solver; rows and columns
/// in reverse lexicographic order, labelled `(λ;−)`.
pub fn ls_modified_kostka(n: usize) -> Result<PolyMatrix> {
    let omega = omega_matrix(n, 1)?;
    let order: Vec<DoublePartition> =
        partition_order(n).into_iter().map(|l| DoublePartition::new(l, Partition::empty())).collect();
    Ok(solve_p_lambda(&omega, &order, |l| l.first.n_stat())?.p)
}

/// `⟨Ind_{S_μ}^{W_n} 1, χ^Λ⟩`, with `S_μ` a Young subgroup of `S_n ⊂ W_n`.
pub fn induced_multiplicity(mu2: &Partition, lam: &DoublePartition) -> Result<i64> {
    check_size(mu2.size(), lam.size())?;
    // Sum over class tuples of the Young subgroup, weighted by 1/z.
    let mut acc: Vec<(Partition, Rational)> = vec![(Partition::empty(), Rational::from(1))];
    for &part in mu2.parts() {
        let mut next = Vec::new();
        for (rho, wgt) in &acc {
            for sub in enumerate_partitions(part) {
                next.push((rho.union(&sub), wgt / Rational::from(sub.z() as i128)));
            }
        }
        acc = next;
    }
    let mut total = Rational::zero();
    for (rho, wgt) in acc {
        let v = wn_character(lam, &WreathClass::new(rho, Partition::empty()))?;
        total += wgt * Rational::from(v as i128);
    }
    if !total.is_integer() {
        return Err(Error::Arithmetic(format!("non-integral multiplicity {total}")));
    }
    Ok(total.to_integer() as i64)
}
