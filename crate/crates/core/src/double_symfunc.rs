//! The ring of functions symmetric in two alphabets: power sums `p_Λ`, the
//! `t`-deformed scalar product, Hall–Littlewood functions `P_Λ(x; t)` by
//! Gram–Schmidt, double Kostka polynomials and their reduction and
//! specialization identities.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;

use crate::error::{check_size, Error, Result};
use crate::lincomb::LinComb;
use crate::par;
use crate::partition::{
    enumerate_double_partitions, enumerate_partitions, sub_multisets, total_order, DoublePartition, Partition,
};
use crate::poly::{CycloProduct, IntPoly, RatFn, Rational};
use crate::symfunc::{f_poly, kostka_number, kostka_table, schur_basis_product, sn_character};
use crate::tableaux::lr_coefficient;

/// Element of `Ξ^n ⊗ Q(t)` in the basis `s_Λ = s_{λ'}(x^{(1)}) s_{λ''}(x^{(2)})`.
pub type XiVector = LinComb<DoublePartition, RatFn>;
/// Element of `Ξ^n ⊗ Q` in the basis `p_Λ`.
pub type DoublePowerExpansion = LinComb<DoublePartition, Rational>;

/// A square matrix of Laurent polynomials indexed by double partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub n: usize,
    pub order: Vec<DoublePartition>,
    index: HashMap<DoublePartition, usize>,
    pub entries: Vec<Vec<IntPoly>>,
}

/// `K_{Λ,Μ}(t)` with rows and columns in a fixed total order.
pub type DoubleKostkaMatrix = PolyMatrix;

impl PolyMatrix {
    pub fn new(n: usize, order: Vec<DoublePartition>, entries: Vec<Vec<IntPoly>>) -> Self {
        let index = order.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        PolyMatrix { n, order, index, entries }
    }

    pub fn dim(&self) -> usize {
        self.order.len()
    }

    pub fn index_of(&self, d: &DoublePartition) -> Option<usize> {
        self.index.get(d).copied()
    }

    pub fn entry(&self, row: &DoublePartition, col: &DoublePartition) -> IntPoly {
        match (self.index_of(row), self.index_of(col)) {
            (Some(i), Some(j)) => self.entries[i][j].clone(),
            _ => IntPoly::zero(),
        }
    }

    /// The same matrix with rows and columns listed in `order`.
    pub fn reordered(&self, order: &[DoublePartition]) -> PolyMatrix {
        let entries = order.iter().map(|r| order.iter().map(|c| self.entry(r, c)).collect()).collect();
        PolyMatrix::new(self.n, order.to_vec(), entries)
    }

    /// Entry pairs where `self` and `other` differ, compared by label.
    pub fn differences(&self, other: &PolyMatrix) -> Vec<(DoublePartition, DoublePartition, IntPoly, IntPoly)> {
        let mut out = Vec::new();
        for r in &self.order {
            for c in &self.order {
                let (a, b) = (self.entry(r, c), other.entry(r, c));
                if a != b {
                    out.push((r.clone(), c.clone(), a, b));
                }
            }
        }
        out
    }
}

fn sub_multiset_weight(whole: &Partition, part: &Partition) -> i128 {
    let mut w = 1i128;
    let taken: BTreeMap<usize, usize> = part.multiplicities().into_iter().collect();
    for (p, m) in whole.multiplicities() {
        let k = taken.get(&p).copied().unwrap_or(0);
        w *= binomial(m, k);
    }
    w
}

fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let mut r = 1i128;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}

/// `s_Λ` in the `p_Μ` basis, using `p_r(x^{(1)}) = (p^{(1)}_r + p^{(2)}_r)/2` and
/// `p_r(x^{(2)}) = (p^{(1)}_r - p^{(2)}_r)/2`.
pub fn s_to_p_double(lam: &DoublePartition) -> DoublePowerExpansion {
    let mut out = DoublePowerExpansion::new();
    for rho in enumerate_partitions(lam.first.size()) {
        let a = sn_character(&lam.first, &rho).unwrap();
        if a == 0 {
            continue;
        }
        for sigma in enumerate_partitions(lam.second.size()) {
            let b = sn_character(&lam.second, &sigma).unwrap();
            if b == 0 {
                continue;
            }
            let base = Rational::new(
                (a * b) as i128,
                rho.z() as i128 * sigma.z() as i128 * (1i128 << (rho.len() + sigma.len())),
            );
            for (r1, r2) in sub_multisets(&rho) {
                let wr = sub_multiset_weight(&rho, &r1);
                for (s1, s2) in sub_multisets(&sigma) {
                    let ws = sub_multiset_weight(&sigma, &s1);
                    let sign = if s2.len() % 2 == 0 { 1 } else { -1 };
                    let key = DoublePartition::new(r1.union(&s1), r2.union(&s2));
                    out.add_term(key, base * Rational::from(sign * wr * ws));
                }
            }
        }
    }
    out
}

/// `⟨u, v⟩` with `⟨p_Λ, p_Μ⟩ = δ_{ΛΜ} z_Λ(t)`.
pub fn inner_product(u: &XiVector, v: &XiVector) -> Result<RatFn> {
    let deg = |x: &XiVector| x.keys().next().map(DoublePartition::size);
    if let (Some(a), Some(b)) = (deg(u), deg(v)) {
        check_size(a, b)?;
    }
    let to_p = |x: &XiVector| {
        let mut acc: BTreeMap<DoublePartition, RatFn> = BTreeMap::new();
        for (lam, c) in x.iter() {
            for (nu, e) in s_to_p_double(lam).iter() {
                let slot = acc.entry(nu.clone()).or_insert_with(RatFn::zero);
                *slot += &c.scale_rational(*e);
            }
        }
        acc
    };
    let (pu, pv) = (to_p(u), to_p(v));
    let mut total = RatFn::zero();
    for (nu, a) in &pu {
        if let Some(b) = pv.get(nu) {
            total += &(&(a * b) * &nu.z_double());
        }
    }
    Ok(total)
}

fn cyclo_z_denominator(d: &DoublePartition) -> CycloProduct {
    let mut c = CycloProduct::one();
    for &a in d.first.parts() {
        c = c.mul(&CycloProduct::one_minus_t_pow(a as u32));
    }
    for &b in d.second.parts() {
        c = c.mul(&CycloProduct::t_pow_plus_one(b as u32));
    }
    c
}

/// `⟨s_Λ, s_Μ⟩` over a common denominator: entry `(i, j)` is
/// `numer[i][j] / denom`.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub order: Vec<DoublePartition>,
    pub numer: Vec<Vec<IntPoly>>,
    pub denom: IntPoly,
}

impl GramMatrix {
    pub fn entry(&self, i: usize, j: usize) -> RatFn {
        RatFn::new(self.numer[i][j].clone(), self.denom.clone())
    }
}

/// Gram matrix of the Schur basis, rows and columns in `order`.
pub fn gram_matrix(order: &[DoublePartition]) -> GramMatrix {
    let m = order.len();
    let n = order.first().map_or(0, DoublePartition::size);
    let pbasis = enumerate_double_partitions(n);
    let pidx: HashMap<&DoublePartition, usize> = pbasis.iter().enumerate().map(|(i, d)| (d, i)).collect();
    // Integer transition matrix after clearing one common denominator.
    let expansions: Vec<DoublePowerExpansion> = par::map(order, s_to_p_double);
    let c = expansions.iter().flat_map(|e| e.iter().map(|(_, r)| *r.denom())).fold(1i128, |acc, d| acc.lcm(&d));
    let mut e = vec![vec![0i128; pbasis.len()]; m];
    for (i, ex) in expansions.iter().enumerate() {
        for (nu, r) in ex.iter() {
            e[i][pidx[nu]] = (r * Rational::from(c)).to_integer();
        }
    }
    let dens: Vec<CycloProduct> = pbasis.iter().map(cyclo_z_denominator).collect();
    let lcm = dens.iter().fold(CycloProduct::one(), |a, d| a.lcm(d));
    let weights: Vec<IntPoly> =
        pbasis.iter().zip(&dens).map(|(nu, d)| lcm.div(d).to_poly().scale(nu.z_int() as i128)).collect();
    let flat = par::map_range(m * m, |ij| {
        let (i, j) = (ij / m, ij % m);
        if j < i {
            return IntPoly::zero();
        }
        let mut acc = IntPoly::zero();
        for k in 0..pbasis.len() {
            let x = e[i][k] * e[j][k];
            if x != 0 {
                acc += &weights[k].scale(x);
            }
        }
        acc
    });
    let mut numer: Vec<Vec<IntPoly>> = flat.chunks(m.max(1)).map(|r| r.to_vec()).collect();
    numer.truncate(m);
    for i in 0..m {
        for j in 0..i {
            numer[i][j] = numer[j][i].clone();
        }
    }
    GramMatrix { order: order.to_vec(), numer, denom: lcm.to_poly().scale(c * c) }
}

/// The Hall–Littlewood functions of one size, computed in one total order.
#[derive(Clone, Debug)]
pub struct DoubleHl {
    pub n: usize,
    pub order: Vec<DoublePartition>,
    /// `K_{Λ,Μ}(t)`.
    pub kostka: PolyMatrix,
    /// Row `Λ` holds the coefficients of `P_Λ` in the Schur basis.
    pub p_in_s: PolyMatrix,
    /// `⟨P_Λ, P_Λ⟩`.
    pub norms: Vec<RatFn>,
}

impl DoubleHl {
    /// `P_Λ` as an [`XiVector`].
    pub fn hl(&self, lam: &DoublePartition) -> XiVector {
        let i = self.p_in_s.index_of(lam).expect("double partition of the right size");
        self.order.iter().zip(&self.p_in_s.entries[i]).map(|(d, c)| (d.clone(), RatFn::from_poly(c.clone()))).collect()
    }

    /// `P_Λ` with polynomial coefficients.
    pub fn hl_poly(&self, lam: &DoublePartition) -> LinComb<DoublePartition, IntPoly> {
        let i = self.p_in_s.index_of(lam).expect("double partition of the right size");
        self.order.iter().zip(&self.p_in_s.entries[i]).map(|(d, c)| (d.clone(), c.clone())).collect()
    }

    /// Rewrites a Schur-basis vector in the `P_Λ` basis via `s_Λ = Σ K_{ΛΜ} P_Μ`.
    pub fn to_hl_basis(&self, v: &LinComb<DoublePartition, IntPoly>) -> LinComb<DoublePartition, IntPoly> {
        let mut out = LinComb::new();
        for (lam, c) in v.iter() {
            let i = self.kostka.index_of(lam).expect("double partition of the right size");
            for (j, k) in self.kostka.entries[i].iter().enumerate() {
                if !k.is_zero() {
                    out.add_term(self.order[j].clone(), c * k);
                }
            }
        }
        out
    }
}

/// Gram–Schmidt along `order` (greatest first). `P_Λ = s_Λ - Σ K_{ΛΜ} P_Μ` over
/// the elements after `Λ`, with `K_{ΛΜ} = ⟨s_Λ, P_Μ⟩ / ⟨P_Μ, P_Μ⟩`, which must
/// come out in `Z[t]`.
pub fn gram_schmidt_in_order(order: &[DoublePartition]) -> Result<DoubleHl> {
    let n = order.first().map_or(0, DoublePartition::size);
    let m = order.len();
    let g = gram_matrix(order);
    let mut u: Vec<Vec<IntPoly>> = vec![Vec::new(); m];
    let mut beta: Vec<IntPoly> = vec![IntPoly::zero(); m];
    let mut kmat = vec![vec![IntPoly::zero(); m]; m];
    for i in (0..m).rev() {
        let row: Vec<Result<IntPoly>> = par::map_range(m - i - 1, |off| {
            let j = i + 1 + off;
            let mut alpha = IntPoly::zero();
            for l in j..m {
                if !u[j][l].is_zero() {
                    alpha += &(&u[j][l] * &g.numer[i][l]);
                }
            }
            if alpha.is_zero() {
                return Ok(IntPoly::zero());
            }
            alpha
                .div_exact(&beta[j])
                .ok_or_else(|| Error::Arithmetic(format!("K_{{{},{}}} is not in Z[t]", order[i], order[j])))
        });
        let mut ui = vec![IntPoly::zero(); m];
        ui[i] = IntPoly::one();
        for (off, k) in row.into_iter().enumerate() {
            let j = i + 1 + off;
            let k = k?;
            if k.is_zero() {
                continue;
            }
            for l in j..m {
                if !u[j][l].is_zero() {
                    ui[l] -= &(&k * &u[j][l]);
                }
            }
            kmat[i][j] = k;
        }
        kmat[i][i] = IntPoly::one();
        let mut b = IntPoly::zero();
        for l in i..m {
            if !ui[l].is_zero() {
                b += &(&ui[l] * &g.numer[i][l]);
            }
        }
        if b.is_zero() {
            return Err(Error::Arithmetic(format!("⟨P,P⟩ vanishes at {}", order[i])));
        }
        beta[i] = b;
        u[i] = ui;
    }
    let norms = beta.iter().map(|b| RatFn::new(b.clone(), g.denom.clone())).collect();
    Ok(DoubleHl {
        n,
        order: order.to_vec(),
        kostka: PolyMatrix::new(n, order.to_vec(), kmat),
        p_in_s: PolyMatrix::new(n, order.to_vec(), u),
        norms,
    })
}

/// Shared Hall–Littlewood data for size `n` in the default total order.
pub fn double_hl(n: usize) -> Arc<DoubleHl> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DoubleHl>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&n) {
        return v.clone();
    }
    let v = Arc::new(gram_schmidt_in_order(&total_order(n)).expect("Gram-Schmidt over the default order"));
    cache.lock().unwrap().entry(n).or_insert(v).clone()
}

/// `P_Λ(x; t)` for every `Λ` of size `n`, in the Schur basis.
pub fn gram_schmidt_hl(n: usize) -> BTreeMap<DoublePartition, XiVector> {
    let d = double_hl(n);
    d.order.iter().map(|lam| (lam.clone(), d.hl(lam))).collect()
}

/// `s_Λ = Σ_Μ K_{Λ,Μ}(t) P_Μ`.
pub fn double_kostka_matrix(n: usize) -> DoubleKostkaMatrix {
    double_hl(n).kostka.clone()
}

/// `K̃_{Λ,Μ}(t) = t^{a(Μ)} K_{Λ,Μ}(1/t)`.
pub fn modified_double_kostka(k: &DoubleKostkaMatrix) -> PolyMatrix {
    let entries = k
        .entries
        .iter()
        .map(|row| row.iter().zip(&k.order).map(|(e, mu)| e.invert_variable().shift(mu.a_stat() as i32)).collect())
        .collect();
    PolyMatrix::new(k.n, k.order.clone(), entries)
}

/// `K̃_{λμ}(t) = t^{n(μ)} K_{λμ}(1/t)`.
pub fn modified_kostka(lam: &Partition, mu: &Partition) -> IntPoly {
    kostka_table(lam.size()).entry(lam, mu).invert_variable().shift(mu.n_stat() as i32)
}

fn empty_first(p: &Partition) -> DoublePartition {
    DoublePartition::new(Partition::empty(), p.clone())
}

fn empty_second(p: &Partition) -> DoublePartition {
    DoublePartition::new(p.clone(), Partition::empty())
}

/// Counterexamples to `K_{(-;λ''),(-;μ'')}(t) = K_{λ''μ''}(t^2)` and
/// `P_{(-;λ'')}(x; t) = P_{λ''}(x^{(2)}; t^2)`.
pub fn empty_first_reduction_failures(n: usize) -> Vec<String> {
    let d = double_hl(n);
    let kt = kostka_table(n);
    let mut bad = Vec::new();
    for lam in &kt.order {
        for mu in &kt.order {
            let lhs = d.kostka.entry(&empty_first(lam), &empty_first(mu));
            let rhs = kt.entry(lam, mu).subs_power(2);
            if lhs != rhs {
                bad.push(format!("K[.{},.{}] = {lhs}, expected {rhs}", lam.notation(), mu.notation()));
            }
        }
        let lhs = d.hl_poly(&empty_first(lam));
        let rhs: LinComb<DoublePartition, IntPoly> =
            kt.hl(lam).iter().map(|(k, c)| (empty_first(k), c.subs_power(2))).collect();
        if lhs != rhs {
            bad.push(format!("P[.{}] differs from P_{}(x2; t^2)", lam.notation(), lam.notation()));
        }
    }
    bad
}

pub fn check_empty_first_reduction(n: usize) -> bool {
    empty_first_reduction_failures(n).is_empty()
}

/// Counterexamples to `K̃_{(λ';-),Μ}(t) = K̃_{λ',μ'+μ''}(t^2)` and
/// `P_ν(x^{(1)}; t^2) = Σ_{ν=μ'+μ''} t^{|μ''|} P_{(μ',μ'')}(x; t)`.
pub fn empty_second_reduction_failures(n: usize) -> Vec<String> {
    let d = double_hl(n);
    let kt = modified_double_kostka(&d.kostka);
    let table = kostka_table(n);
    let mut bad = Vec::new();
    for lam in enumerate_partitions(n) {
        let row = empty_second(&lam);
        for mu in &d.order {
            let lhs = kt.entry(&row, mu);
            let rhs = modified_kostka(&lam, &mu.first.add_partwise(&mu.second)).subs_power(2);
            if lhs != rhs {
                bad.push(format!("K~[{row},{mu}] = {lhs}, expected {rhs}"));
            }
        }
    }
    for nu in enumerate_partitions(n) {
        let lhs: LinComb<DoublePartition, IntPoly> =
            table.hl(&nu).iter().map(|(k, c)| (empty_second(k), c.subs_power(2))).collect();
        let mut rhs = LinComb::new();
        for mu in &d.order {
            if mu.first.add_partwise(&mu.second) == nu {
                rhs.add_scaled(&d.hl_poly(mu), &IntPoly::monomial(1, mu.second.size() as i32));
            }
        }
        if lhs != rhs {
            bad.push(format!("P_{}(x1; t^2) is not Σ t^|μ''| P_(μ',μ'')", nu.notation()));
        }
    }
    bad
}

pub fn check_empty_second_reduction(n: usize) -> bool {
    empty_second_reduction_failures(n).is_empty()
}

/// Monomial expansion of `P_Μ(x; 1)` under `x^{(1)} = x^{(2)} = y`.
pub fn specialize_diagonal_t1(mu: &DoublePartition) -> LinComb<Partition, Rational> {
    let d = double_hl(mu.size());
    let mut schur = LinComb::<Partition, Rational>::new();
    for (lam, c) in d.hl_poly(mu).iter() {
        let c1 = Rational::from(c.eval_rational(Rational::from(1)).expect("polynomial coefficient"));
        if c1 == Rational::from(0) {
            continue;
        }
        schur.add_scaled(&schur_basis_product(&lam.first, &lam.second), &c1);
    }
    let mut mono = LinComb::new();
    for (nu, c) in schur.iter() {
        for kappa in enumerate_partitions(nu.size()) {
            let k = kostka_number(nu, &kappa).unwrap();
            if k > 0 {
                mono.add_term(kappa, c * Rational::from(k as i128));
            }
        }
    }
    mono
}

/// Counterexamples to `m_ν(x^{(1)}) = m_ν(x^{(2)}) + Σ_{ν=μ'+μ'', μ'≠∅} P_{(μ',μ'')}(x; 1)`,
/// compared in the Schur basis at `t = 1`.
pub fn monomial_split_failures(n: usize) -> Vec<String> {
    let d = double_hl(n);
    let table = kostka_table(n);
    let at_one = |c: &IntPoly| IntPoly::constant(c.at_one());
    let mut bad = Vec::new();
    for nu in enumerate_partitions(n) {
        let m_nu = table.hl(&nu);
        let lhs: LinComb<DoublePartition, IntPoly> = m_nu.iter().map(|(k, c)| (empty_second(k), at_one(c))).collect();
        let mut rhs: LinComb<DoublePartition, IntPoly> =
            m_nu.iter().map(|(k, c)| (empty_first(k), at_one(c))).collect();
        for mu in &d.order {
            if !mu.first.is_empty() && mu.first.add_partwise(&mu.second) == nu {
                rhs = rhs.plus(&d.hl_poly(mu).map_coeffs(at_one));
            }
        }
        if lhs != rhs {
            bad.push(format!("monomial split fails for ν = {}", nu.notation()));
        }
    }
    bad
}

/// The two expressions for `K_{Λ,(-;μ'')}(t)`: through `f^{μ''}_{ν'ν''}` and
/// one-alphabet Kostka polynomials, and through `c^η_{λ'λ''}`.
pub fn double_kostka_via_hall(lam: &DoublePartition, mu2: &Partition) -> Result<(IntPoly, IntPoly)> {
    check_size(lam.size(), mu2.size())?;
    let (a, b) = (lam.first.size(), lam.second.size());
    let ta = kostka_table(a);
    let tb = kostka_table(b);
    let mut first = IntPoly::zero();
    for nu1 in enumerate_partitions(a) {
        let k1 = ta.entry(&lam.first, &nu1);
        if k1.is_zero() {
            continue;
        }
        for nu2 in enumerate_partitions(b) {
            let k2 = tb.entry(&lam.second, &nu2);
            if k2.is_zero() {
                continue;
            }
            let f = f_poly(&nu1, &nu2, mu2)?;
            first += &(&(&f * &k1) * &k2).subs_power(2);
        }
    }
    let tn = kostka_table(lam.size());
    let mut second = IntPoly::zero();
    for eta in enumerate_partitions(lam.size()) {
        let c = lr_coefficient(&lam.first, &lam.second, &eta)?;
        if c > 0 {
            second += &tn.entry(&eta, mu2).subs_power(2).scale(c as i128);
        }
    }
    Ok((first.shift(a as i32), second.shift(a as i32)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(s: &str) -> DoublePartition {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn s_to_p_examples() {
        let a = s_to_p_double(&dp("1."));
        assert_eq!(a.coeff(&dp("1.")), Rational::new(1, 2));
        assert_eq!(a.coeff(&dp(".1")), Rational::new(1, 2));
        let b = s_to_p_double(&dp(".1"));
        assert_eq!(b.coeff(&dp(".1")), Rational::new(-1, 2));
        assert_eq!(s_to_p_double(&dp(".")), DoublePowerExpansion::basis(dp(".")));
    }

    #[test]
    fn inner_product_examples() {
        let s = XiVector::basis(dp("1."));
        assert_eq!(inner_product(&s, &s).unwrap(), RatFn::new(IntPoly::one(), poly("-t^2 + 1")));
        // ⟨s_{(1;-)}, s_{(-;1)}⟩ = 1/(2(1-t)) - 1/(2(1+t)) = t/(1-t^2).
        let s2 = XiVector::basis(dp(".1"));
        assert_eq!(inner_product(&s, &s2).unwrap(), RatFn::new(poly("t"), poly("-t^2 + 1")));
        assert!(inner_product(&s, &XiVector::basis(dp("2."))).is_err());
    }

    #[test]
    fn gram_matrix_matches_direct_product() {
        for n in 1..=3 {
            let order = total_order(n);
            let g = gram_matrix(&order);
            for (i, a) in order.iter().enumerate() {
                for (j, b) in order.iter().enumerate() {
                    let direct = inner_product(&XiVector::basis(a.clone()), &XiVector::basis(b.clone())).unwrap();
                    assert_eq!(g.entry(i, j), direct, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn n1_hall_littlewood() {
        let p = gram_schmidt_hl(1);
        assert_eq!(p[&dp(".1")], XiVector::basis(dp(".1")));
        let expect: XiVector =
            [(dp("1."), RatFn::one()), (dp(".1"), RatFn::from_poly(poly("-t")))].into_iter().collect();
        assert_eq!(p[&dp("1.")], expect);
        assert_eq!(double_kostka_matrix(1).entry(&dp("1."), &dp(".1")), poly("t"));
    }

    #[test]
    fn table_one_entries() {
        let k = double_kostka_matrix(2);
        assert_eq!(k.entry(&dp("2."), &dp("1.1")), poly("t"));
        assert_eq!(k.entry(&dp("1.1"), &dp(".1^2")), poly("t^3 + t"));
        assert_eq!(k.entry(&dp("2."), &dp(".1^2")), poly("t^4"));
        assert!(k.entry(&dp("1^2."), &dp(".2")).is_zero());
        assert_eq!(double_kostka_matrix(3).entry(&dp("2.1"), &dp(".21")), poly("t^4 + t^2"));
    }

    #[test]
    fn orthogonality_full_gram() {
        for n in 1..=4 {
            let ps = gram_schmidt_hl(n);
            let keys: Vec<_> = ps.keys().cloned().collect();
            for (i, a) in keys.iter().enumerate() {
                for b in &keys[i + 1..] {
                    assert!(inner_product(&ps[a], &ps[b]).unwrap().is_zero(), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn reconstruction_round_trip() {
        for n in 0..=5 {
            let d = double_hl(n);
            for lam in &d.order {
                let mut acc = LinComb::new();
                for mu in &d.order {
                    acc.add_scaled(&d.hl_poly(mu), &d.kostka.entry(lam, mu));
                }
                assert_eq!(acc, LinComb::basis(lam.clone()));
            }
        }
    }

    #[test]
    fn modified_examples() {
        let kt = modified_double_kostka(&double_kostka_matrix(2));
        assert_eq!(kt.entry(&dp("2."), &dp(".1^2")), IntPoly::one());
        assert_eq!(kt.entry(&dp("1.1"), &dp("1.1")), poly("t"));
    }

    #[test]
    fn reductions_small() {
        for n in 0..=4 {
            assert!(check_empty_first_reduction(n), "{:?}", empty_first_reduction_failures(n));
            assert!(check_empty_second_reduction(n), "{:?}", empty_second_reduction_failures(n));
            assert!(monomial_split_failures(n).is_empty());
        }
    }

    #[test]
    fn diagonal_specialization() {
        let m = |s: &[usize]| Partition::new(s.to_vec()).unwrap();
        for n in 1..=3 {
            for mu in enumerate_double_partitions(n) {
                let got = specialize_diagonal_t1(&mu);
                if mu.first.is_empty() {
                    assert_eq!(got, LinComb::basis(mu.second.clone()));
                } else {
                    assert!(got.is_empty(), "{mu}: {got:?}");
                }
            }
        }
        assert_eq!(specialize_diagonal_t1(&dp(".21")), LinComb::basis(m(&[2, 1])));
    }

    #[test]
    fn via_hall_examples() {
        let p = |s: &[usize]| Partition::new(s.to_vec()).unwrap();
        assert_eq!(double_kostka_via_hall(&dp("1.1"), &p(&[1, 1])).unwrap(), (poly("t^3 + t"), poly("t^3 + t")));
        let (a, b) = double_kostka_via_hall(&dp("2.1"), &p(&[1, 1, 1])).unwrap();
        assert_eq!(a, poly("t^8 + t^6 + t^4"));
        assert_eq!(b, a);
        let (a, _) = double_kostka_via_hall(&dp(".21"), &p(&[1, 1, 1])).unwrap();
        assert_eq!(a, poly("t^4 + t^2"));
    }
}
