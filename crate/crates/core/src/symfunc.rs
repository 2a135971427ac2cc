//! Symmetric functions in one alphabet: characters of `S_n`, Schur to power
//! sum transition, Hall–Littlewood functions in the Schur basis, their
//! products and the classical Hall polynomials.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{check_size, Error, Result};
use crate::lincomb::LinComb;
use crate::par;
use crate::partition::{enumerate_partitions, Partition};
use crate::poly::{IntPoly, RatFn, Rational};
use crate::tableaux::{count_sst, kostka_charge, lr_coefficient, SkewShape};

/// Element of `Λ^n ⊗ Q(t)` in the Schur basis.
pub type SchurVector = LinComb<Partition, RatFn>;
/// Element of `Λ^n ⊗ Q` in the power-sum basis.
pub type PowerExpansion = LinComb<Partition, Rational>;
/// Schur-basis vector with coefficients in `Z[t, 1/t]`.
pub type SchurPoly = LinComb<Partition, IntPoly>;

thread_local! {
    static CHAR_MEMO: RefCell<HashMap<(Partition, Partition), i64>> = RefCell::new(HashMap::new());
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule on beta numbers.
pub fn sn_character(lam: &Partition, rho: &Partition) -> Result<i64> {
    check_size(lam.size(), rho.size())?;
    Ok(mn(lam, rho.parts()))
}

fn mn(lam: &Partition, rho: &[usize]) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (lam.clone(), Partition::new(rho.to_vec()).unwrap());
    if let Some(v) = CHAR_MEMO.with(|m| m.borrow().get(&key).copied()) {
        return v;
    }
    let r = rho[0];
    let k = lam.len();
    let beta: Vec<usize> = (0..k).map(|i| lam.get(i) + k - 1 - i).collect();
    let mut total = 0i64;
    for i in 0..k {
        if beta[i] < r {
            continue;
        }
        let b = beta[i] - r;
        if beta.contains(&b) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b && x < beta[i]).count();
        let mut nb = beta.clone();
        nb[i] = b;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = (0..k).map(|j| nb[j] - (k - 1 - j)).collect();
        let sub = Partition::from_unsorted(parts);
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&sub, &rho[1..]);
    }
    CHAR_MEMO.with(|m| m.borrow_mut().insert(key, total));
    total
}

/// `s_λ = Σ_ρ z_ρ^{-1} χ^λ(ρ) p_ρ`.
pub fn schur_to_power(lam: &Partition) -> PowerExpansion {
    enumerate_partitions(lam.size())
        .into_iter()
        .map(|rho| {
            let c = Rational::new(mn(lam, rho.parts()) as i128, rho.z() as i128);
            (rho, c)
        })
        .collect()
}

/// `⟨u, v⟩` with `⟨p_λ, p_μ⟩ = δ z_λ`.
pub fn power_inner(u: &PowerExpansion, v: &PowerExpansion) -> Rational {
    let mut acc = Rational::from(0);
    for (rho, a) in u.iter() {
        if let Some(b) = v.get(rho) {
            acc += a * b * Rational::from(rho.z() as i128);
        }
    }
    acc
}

/// Kostka–Foulkes polynomials of one size and the inverse matrix.
#[derive(Debug)]
pub struct KostkaTable {
    pub n: usize,
    /// Greatest first; refines dominance.
    pub order: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `k[i][j] = K_{order[i], order[j]}(t)`.
    pub k: Vec<Vec<IntPoly>>,
    /// `kinv[i][j]` is the coefficient of `s_{order[j]}` in `P_{order[i]}`.
    pub kinv: Vec<Vec<IntPoly>>,
}

impl KostkaTable {
    fn build(n: usize) -> Self {
        let order = enumerate_partitions(n);
        let m = order.len();
        let index = order.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let flat = par::map_range(m * m, |ij| {
            let (i, j) = (ij / m, ij % m);
            if j < i {
                IntPoly::zero()
            } else {
                kostka_charge(&order[i], &order[j]).expect("sizes agree")
            }
        });
        let k: Vec<Vec<IntPoly>> = flat.chunks(m).map(|r| r.to_vec()).collect();
        let kinv = unitriangular_inverse(&k);
        KostkaTable { n, order, index, k, kinv }
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn entry(&self, lam: &Partition, mu: &Partition) -> IntPoly {
        match (self.index_of(lam), self.index_of(mu)) {
            (Some(i), Some(j)) => self.k[i][j].clone(),
            _ => IntPoly::zero(),
        }
    }

    /// `P_μ` in the Schur basis.
    pub fn hl(&self, mu: &Partition) -> SchurPoly {
        let i = self.index[mu];
        self.order.iter().enumerate().map(|(j, p)| (p.clone(), self.kinv[i][j].clone())).collect()
    }

    /// Rewrites a Schur-basis vector in the `P` basis.
    pub fn to_hl_basis(&self, v: &SchurPoly) -> SchurPoly {
        let mut out = SchurPoly::new();
        for (lam, c) in v.iter() {
            let i = self.index[lam];
            for j in i..self.order.len() {
                if !self.k[i][j].is_zero() {
                    out.add_term(self.order[j].clone(), c * &self.k[i][j]);
                }
            }
        }
        out
    }
}

/// Inverse of an upper unitriangular matrix over `Z[t, 1/t]`.
pub fn unitriangular_inverse(k: &[Vec<IntPoly>]) -> Vec<Vec<IntPoly>> {
    let m = k.len();
    let mut u = vec![vec![IntPoly::zero(); m]; m];
    for i in (0..m).rev() {
        u[i][i] = IntPoly::one();
        for j in i + 1..m {
            let mut acc = IntPoly::zero();
            for l in i + 1..=j {
                if !k[i][l].is_zero() && !u[l][j].is_zero() {
                    acc += &(&k[i][l] * &u[l][j]);
                }
            }
            u[i][j] = -acc;
        }
    }
    u
}

/// Shared Kostka table for partitions of `n`.
pub fn kostka_table(n: usize) -> Arc<KostkaTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<KostkaTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(KostkaTable::build(n));
    cache.lock().unwrap().entry(n).or_insert(t).clone()
}

/// `P_μ(y; t) = Σ_λ (K^{-1})_{μλ}(t) s_λ`.
pub fn hl_in_schur(mu: &Partition) -> SchurVector {
    kostka_table(mu.size()).hl(mu).map_coeffs(|c| RatFn::from_poly(c.clone()))
}

/// `s_a s_b = Σ c^ν_{ab} s_ν`.
pub fn schur_basis_product(a: &Partition, b: &Partition) -> LinComb<Partition, Rational> {
    enumerate_partitions(a.size() + b.size())
        .into_iter()
        .map(|nu| {
            let c = lr_coefficient(a, b, &nu).expect("sizes agree");
            (nu, Rational::from(c as i128))
        })
        .collect()
}

/// Bilinear product of Schur-basis vectors with `Z[t, 1/t]` coefficients.
pub fn multiply_schur_poly(u: &SchurPoly, v: &SchurPoly) -> SchurPoly {
    let mut out = SchurPoly::new();
    for (a, x) in u.iter() {
        for (b, y) in v.iter() {
            let xy = x * y;
            for (nu, c) in schur_basis_product(a, b).iter() {
                out.add_term(nu.clone(), xy.scale(c.to_integer()));
            }
        }
    }
    out
}

/// Bilinear product of Schur-basis vectors.
pub fn multiply_schur(u: &SchurVector, v: &SchurVector) -> SchurVector {
    let mut out = SchurVector::new();
    for (a, x) in u.iter() {
        for (b, y) in v.iter() {
            let xy = x * y;
            for (nu, c) in schur_basis_product(a, b).iter() {
                out.add_term(nu.clone(), xy.scale_rational(*c));
            }
        }
    }
    out
}

type ProductCache = Mutex<HashMap<(Partition, Partition), Arc<SchurPoly>>>;

/// `P_μ P_ν` expanded in the `P` basis, i.e. `Σ_λ f^λ_{μν}(t) P_λ`.
pub fn hl_product(mu: &Partition, nu: &Partition) -> Arc<SchurPoly> {
    static CACHE: OnceLock<ProductCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (mu.clone(), nu.clone());
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return v.clone();
    }
    let pm = kostka_table(mu.size()).hl(mu);
    let pn = kostka_table(nu.size()).hl(nu);
    let prod = multiply_schur_poly(&pm, &pn);
    let v = Arc::new(kostka_table(mu.size() + nu.size()).to_hl_basis(&prod));
    cache.lock().unwrap().insert(key, v.clone());
    v
}

/// `f^λ_{μν}(t)`, the coefficient of `P_λ` in `P_μ P_ν`.
pub fn f_poly(mu: &Partition, nu: &Partition, lam: &Partition) -> Result<IntPoly> {
    check_size(mu.size() + nu.size(), lam.size())?;
    Ok(hl_product(mu, nu).coeff(lam))
}

/// `g^λ_{μν}(t) = t^{n(λ)-n(μ)-n(ν)} f^λ_{μν}(1/t)`.
pub fn g_hall(mu: &Partition, nu: &Partition, lam: &Partition) -> Result<IntPoly> {
    let f = f_poly(mu, nu, lam)?;
    let shift = lam.n_stat() as i32 - mu.n_stat() as i32 - nu.n_stat() as i32;
    let g = f.invert_variable().shift(shift);
    if !g.is_polynomial() {
        return Err(Error::Arithmetic(format!("g^{lam}_{{{mu},{nu}}} has a negative exponent: {g}")));
    }
    Ok(g)
}

/// Kostka number `K_{λμ} = |SST(λ, μ)|`.
pub fn kostka_number(lam: &Partition, mu: &Partition) -> Result<u64> {
    check_size(lam.size(), mu.size())?;
    count_sst(&SkewShape::straight(lam.clone()), mu.parts())
}

/// `s_λ = Σ_μ K_{λμ} m_μ`.
pub fn schur_to_monomial(lam: &Partition) -> LinComb<Partition, Rational> {
    enumerate_partitions(lam.size())
        .into_iter()
        .map(|mu| {
            let c = kostka_number(lam, &mu).unwrap();
            (mu, Rational::from(c as i128))
        })
        .collect()
}
