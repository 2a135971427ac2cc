//! The Hall bimodule: transition polynomials `h`, generalized Hall polynomials
//! `g`, and the structure constants `G` of the left and right actions of the
//! Hall algebra on the module with basis `𝔣u_Λ`.
//!
//! Everything is computed generically in `t` through products of
//! Hall–Littlewood functions; point counts are only used as a cross-check
//! (see [`crate::fq_oracle`]).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::double_symfunc::{double_hl, modified_kostka, PolyMatrix, XiVector};
use crate::error::{check_size, Error, Result};
use crate::lincomb::LinComb;
use crate::par;
use crate::partition::{double_dominance_le, enumerate_partitions, total_order, DoublePartition, Partition};
use crate::poly::{IntPoly, RatFn};
use crate::symfunc::{f_poly, g_hall, kostka_table, schur_basis_product, SchurPoly};

/// Element of the bimodule, in the `𝔣u_Λ` basis.
pub type MElement = LinComb<DoublePartition, IntPoly>;
/// Element of the Hall algebra, in the `𝔣u_α` basis.
pub type HElement = LinComb<Partition, IntPoly>;
/// Two-alphabet Schur expansion with `Z[t, 1/t]` coefficients.
pub type DoubleSchurPoly = LinComb<DoublePartition, IntPoly>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

fn empty_dp() -> DoublePartition {
    DoublePartition::new(Partition::empty(), Partition::empty())
}

/// `P_α(y; t²)` in the Schur basis.
fn hl_squared(alpha: &Partition) -> SchurPoly {
    kostka_table(alpha.size()).hl(alpha).map_coeffs(|c| c.subs_power(2))
}

/// Multiplies `v` by a symmetric function in the first (`Left`) or second
/// (`Right`) alphabet.
fn multiply_alphabet(u: &SchurPoly, v: &DoubleSchurPoly, side: Side) -> DoubleSchurPoly {
    let mut out = DoubleSchurPoly::new();
    for (a, x) in u.iter() {
        for (lam, y) in v.iter() {
            let xy = x * y;
            let inner = if side == Side::Left { &lam.first } else { &lam.second };
            for (nu, c) in schur_basis_product(a, inner).iter() {
                let key = if side == Side::Left {
                    DoublePartition::new(nu.clone(), lam.second.clone())
                } else {
                    DoublePartition::new(lam.first.clone(), nu.clone())
                };
                out.add_term(key, xy.scale(c.to_integer()));
            }
        }
    }
    out
}

fn require_polynomial(v: &MElement, what: &str) -> Result<()> {
    match v.iter().find(|(_, c)| !c.is_polynomial()) {
        Some((k, c)) => Err(Error::Arithmetic(format!("{what}: coefficient of {k} is {c}"))),
        None => Ok(()),
    }
}

/// `R_Ν(x; t) = P_{ν'}(x^{(1)}; t²) P_{ν''}(x^{(2)}; t²)` in the Schur basis.
pub fn r_function(nu: &DoublePartition) -> DoubleSchurPoly {
    let start = DoubleSchurPoly::basis(empty_dp());
    let v = multiply_alphabet(&hl_squared(&nu.first), &start, Side::Left);
    multiply_alphabet(&hl_squared(&nu.second), &v, Side::Right)
}

type MatrixCache = Mutex<HashMap<usize, Arc<PolyMatrix>>>;

fn cached(
    cache: &'static OnceLock<MatrixCache>,
    n: usize,
    build: impl Fn() -> Result<PolyMatrix>,
) -> Result<Arc<PolyMatrix>> {
    let cache = cache.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&n) {
        return Ok(m.clone());
    }
    let m = Arc::new(build()?);
    cache.lock().unwrap().insert(n, m.clone());
    Ok(m)
}

/// `R_Ν = Σ_Μ h^Μ_Ν(t) P_Μ`; row `Ν`, column `Μ` holds `h^Μ_Ν`.
pub fn h_transition(n: usize) -> Result<Arc<PolyMatrix>> {
    static CACHE: OnceLock<MatrixCache> = OnceLock::new();
    cached(&CACHE, n, || {
        let hl = double_hl(n);
        let order = hl.order.clone();
        let rows: Vec<Result<Vec<IntPoly>>> = par::map(&order, |nu| {
            let v = hl.to_hl_basis(&r_function(nu));
            require_polynomial(&v, &format!("R_{nu} in the P basis"))?;
            Ok(order.iter().map(|mu| v.coeff(mu)).collect())
        });
        Ok(PolyMatrix::new(n, order, rows.into_iter().collect::<Result<_>>()?))
    })
}

/// Inverts `h(t) = t^{a(Μ)-a(Ν)} g(t^{-2})`.
fn g_from_h(h: &IntPoly, mu: &DoublePartition, nu: &DoublePartition) -> Result<IntPoly> {
    let x = h.shift(nu.a_stat() as i32 - mu.a_stat() as i32).invert_variable();
    x.root_substitution(2)
        .filter(IntPoly::is_polynomial)
        .ok_or_else(|| Error::Arithmetic(format!("h^{mu}_{nu} = {h} is not of the form t^(a(M)-a(N)) g(t^-2)")))
}

/// Generalized Hall polynomial `g^Μ_Ν(t)`.
pub fn g_double(mu: &DoublePartition, nu: &DoublePartition) -> Result<IntPoly> {
    check_size(mu.size(), nu.size())?;
    let h = h_transition(mu.size())?;
    g_from_h(&h.entry(nu, mu), mu, nu)
}

/// Matrix with row `Λ`, column `Μ` equal to `g^Λ_Μ(t)`.
pub fn g_double_matrix(n: usize) -> Result<Arc<PolyMatrix>> {
    static CACHE: OnceLock<MatrixCache> = OnceLock::new();
    cached(&CACHE, n, || {
        let h = h_transition(n)?;
        let order = h.order.clone();
        let entries = order
            .iter()
            .map(|lam| order.iter().map(|mu| g_from_h(&h.entry(mu, lam), lam, mu)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix::new(n, order, entries))
    })
}

/// `P_α(x^{(1)}; t²) P_Μ(x; t) = Σ H^Λ_{α,Μ}(t) P_Λ` (left) or the product with
/// `P_α(x^{(2)}; t²)` (right).
pub fn h_structure(side: Side, alpha: &Partition, mu: &DoublePartition) -> Result<MElement> {
    let n = alpha.size() + mu.size();
    let pm = double_hl(mu.size()).hl_poly(mu);
    let prod = multiply_alphabet(&hl_squared(alpha), &pm, side);
    let v = double_hl(n).to_hl_basis(&prod);
    require_polynomial(&v, &format!("H for {alpha}, {mu}"))?;
    Ok(v)
}

pub fn h_left(alpha: &Partition, mu: &DoublePartition) -> Result<MElement> {
    h_structure(Side::Left, alpha, mu)
}

pub fn h_right(mu: &DoublePartition, alpha: &Partition) -> Result<MElement> {
    h_structure(Side::Right, alpha, mu)
}

/// `H^Λ_{α,Μ}` through the inverse transition matrix and one-alphabet `f`
/// polynomials, independently of [`h_left`].
pub fn h_left_via_transition(alpha: &Partition, mu: &DoublePartition) -> Result<MElement> {
    let m = mu.size();
    let h_small = h_transition(m)?;
    let h_inv = crate::symfunc::unitriangular_inverse(&h_small.entries);
    let h_big = h_transition(m + alpha.size())?;
    let i = h_small.index_of(mu).expect("label present");
    let mut out = MElement::new();
    for (j, nu) in h_small.order.iter().enumerate() {
        let c = &h_inv[i][j];
        if c.is_zero() {
            continue;
        }
        for xi in enumerate_partitions(alpha.size() + nu.first.size()) {
            let f = f_poly(alpha, &nu.first, &xi)?.subs_power(2);
            if f.is_zero() {
                continue;
            }
            let row = DoublePartition::new(xi, nu.second.clone());
            let cf = c * &f;
            for lam in &h_big.order {
                out.add_term(lam.clone(), &cf * &h_big.entry(&row, lam));
            }
        }
    }
    Ok(out)
}

/// `G(t²) = t^{e} H(1/t)`, which must lie in `Z[t²]`, with
/// `e = a(Λ) - a(Μ) - 2n(α)` on the left and `e = a(Λ) - a(Μ) - 2n(α) - |α|`
/// on the right. The extra `|α|` matches `Ψ(𝔣v_Μ) = t^{-a(Μ)} R_Μ(x; 1/t)`,
/// where `a(Μ)` carries `|μ''|`.
pub fn structure_exponent(side: Side, lam: &DoublePartition, mu: &DoublePartition, alpha: &Partition) -> i32 {
    let e = lam.a_stat() as i32 - mu.a_stat() as i32 - 2 * alpha.n_stat() as i32;
    match side {
        Side::Left => e,
        Side::Right => e - alpha.size() as i32,
    }
}

fn g_from_structure(
    side: Side,
    h: &IntPoly,
    lam: &DoublePartition,
    mu: &DoublePartition,
    alpha: &Partition,
) -> Result<IntPoly> {
    let e = structure_exponent(side, lam, mu, alpha);
    let x = h.invert_variable().shift(e);
    x.root_substitution(2)
        .filter(IntPoly::is_polynomial)
        .ok_or_else(|| Error::Arithmetic(format!("t^{e} H({lam}; {alpha}, {mu})(1/t) = {x} is not in Z[t^2]")))
}

type GCache = Mutex<HashMap<(Side, Partition, DoublePartition), Arc<MElement>>>;

/// `Λ ↦ G^Λ_{α,Μ}` (left) or `Λ ↦ G^Λ_{Μ,α}` (right).
pub fn g_structure(side: Side, alpha: &Partition, mu: &DoublePartition) -> Result<Arc<MElement>> {
    static CACHE: OnceLock<GCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (side, alpha.clone(), mu.clone());
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let h = h_structure(side, alpha, mu)?;
    let mut out = MElement::new();
    for (lam, c) in h.iter() {
        out.add_term(lam.clone(), g_from_structure(side, c, lam, mu, alpha)?);
    }
    let out = Arc::new(out);
    cache.lock().unwrap().insert(key, out.clone());
    Ok(out)
}

pub fn g_left(alpha: &Partition, mu: &DoublePartition) -> Result<Arc<MElement>> {
    g_structure(Side::Left, alpha, mu)
}

pub fn g_right(mu: &DoublePartition, alpha: &Partition) -> Result<Arc<MElement>> {
    g_structure(Side::Right, alpha, mu)
}

fn act(side: Side, alpha: &Partition, m: &MElement) -> Result<MElement> {
    let mut out = MElement::new();
    for (mu, c) in m.iter() {
        out.add_scaled(&*g_structure(side, alpha, mu)?, c);
    }
    Ok(out)
}

/// `𝔣u_α · m`.
pub fn left_action(alpha: &Partition, m: &MElement) -> Result<MElement> {
    act(Side::Left, alpha, m)
}

/// `m · 𝔣u_α`.
pub fn right_action(m: &MElement, alpha: &Partition) -> Result<MElement> {
    act(Side::Right, alpha, m)
}

/// `h · m` for a Hall algebra element `h`.
pub fn left_action_h(h: &HElement, m: &MElement) -> Result<MElement> {
    let mut out = MElement::new();
    for (alpha, c) in h.iter() {
        out.add_scaled(&left_action(alpha, m)?, c);
    }
    Ok(out)
}

/// `m · h` for a Hall algebra element `h`.
pub fn right_action_h(m: &MElement, h: &HElement) -> Result<MElement> {
    let mut out = MElement::new();
    for (alpha, c) in h.iter() {
        out.add_scaled(&right_action(m, alpha)?, c);
    }
    Ok(out)
}

/// `𝔣u_β 𝔣u_γ = Σ g^α_{βγ}(t) 𝔣u_α` in the Hall algebra.
pub fn hall_product(beta: &Partition, gamma: &Partition) -> Result<HElement> {
    let mut out = HElement::new();
    for alpha in enumerate_partitions(beta.size() + gamma.size()) {
        out.add_term(alpha.clone(), g_hall(beta, gamma, &alpha)?);
    }
    Ok(out)
}

/// `𝔣v_Μ = 𝔣u_{μ'} 𝔣u_0 𝔣u_{μ''}`, computed through the actions.
pub fn fv_basis(mu: &DoublePartition) -> Result<MElement> {
    let fu0 = MElement::basis(empty_dp());
    let right = right_action(&fu0, &mu.second)?;
    left_action(&mu.first, &right)
}

/// `Ψ(𝔣u_Λ) = t^{-a(Λ)} P_Λ(x; 1/t)` in the Schur basis.
pub fn psi_image(lam: &DoublePartition) -> XiVector {
    let scale = RatFn::from_poly(IntPoly::monomial(1, -(lam.a_stat() as i32)));
    double_hl(lam.size()).hl(lam).map_coeffs(|c| &c.invert_variable() * &scale)
}

/// `Ψ` extended linearly, for an element whose coefficients are evaluated at `t²`.
pub fn psi_of_squared(m: &MElement) -> XiVector {
    let mut out = XiVector::new();
    for (lam, c) in m.iter() {
        out.add_scaled(&psi_image(lam), &RatFn::from_poly(c.subs_power(2)));
    }
    out
}

/// Entries where `K̃_{Λ,Μ}` differs from the sum over `Ν` of
/// `t^{|λ''|} g^Μ_Ν(t²) K̃_{λ'ν'}(t²) K̃_{λ''ν''}(t²)`.
pub fn ah_formula_failures(n: usize) -> Result<Vec<String>> {
    let g = g_double_matrix(n)?;
    let kt = crate::double_symfunc::modified_double_kostka(&crate::double_symfunc::double_kostka_matrix(n));
    let mut bad = Vec::new();
    for lam in &kt.order {
        for mu in &kt.order {
            let mut sum = IntPoly::zero();
            for nu in &g.order {
                if nu.first.size() != lam.first.size() {
                    continue;
                }
                let gm = g.entry(mu, nu);
                if gm.is_zero() {
                    continue;
                }
                let k1 = modified_kostka(&lam.first, &nu.first);
                let k2 = modified_kostka(&lam.second, &nu.second);
                sum += &(&(&gm * &k1) * &k2).subs_power(2);
            }
            let shift = lam.a_stat() as i32 - 2 * lam.n_stat() as i32;
            let rhs = sum.shift(shift);
            let lhs = kt.entry(lam, mu);
            if lhs != rhs {
                bad.push(format!("K~[{lam},{mu}] = {lhs}, formula gives {rhs}"));
            }
        }
    }
    Ok(bad)
}

pub fn check_ah_formula(n: usize) -> bool {
    matches!(ah_formula_failures(n), Ok(v) if v.is_empty())
}

/// Unitriangularity of `(g^Λ_Μ)`: ones on the diagonal and `g^Λ_Μ = 0` unless `Λ ≤ Μ`.
pub fn freeness_failures(n: usize) -> Result<Vec<String>> {
    let g = g_double_matrix(n)?;
    let mut bad = Vec::new();
    for lam in &g.order {
        for mu in &g.order {
            let e = g.entry(lam, mu);
            if lam == mu && !e.is_one() {
                bad.push(format!("g^{lam}_{lam} = {e}"));
            } else if lam != mu && !e.is_zero() && !double_dominance_le(lam, mu)? {
                bad.push(format!("g^{lam}_{mu} = {e} but {lam} is not below {mu}"));
            }
        }
    }
    Ok(bad)
}

/// All `(α, Μ)` with `|α| + |Μ| = n` and `α` nonempty.
fn action_pairs(n: usize) -> Vec<(Partition, DoublePartition)> {
    let mut out = Vec::new();
    for k in 1..=n {
        for alpha in enumerate_partitions(k) {
            for mu in total_order(n - k) {
                out.push((alpha.clone(), mu));
            }
        }
    }
    out
}

/// Structure constants at total size `n` that fail the `Z[t²]` test or have
/// negative values at `t = 2, 3`.
pub fn parity_failures(n: usize) -> Vec<String> {
    let pairs = action_pairs(n);
    let found: Vec<Vec<String>> = par::map(&pairs, |(alpha, mu)| {
        let mut bad = Vec::new();
        for side in [Side::Left, Side::Right] {
            match g_structure(side, alpha, mu) {
                Err(e) => bad.push(format!("{side:?} {alpha} {mu}: {e}")),
                Ok(g) => {
                    for (lam, c) in g.iter() {
                        if c.eval(2) < 0 || c.eval(3) < 0 {
                            bad.push(format!("{side:?} G^{lam}_{alpha},{mu} = {c} is negative at a prime"));
                        }
                    }
                }
            }
        }
        bad
    });
    found.into_iter().flatten().collect()
}

fn basis(mu: &DoublePartition) -> MElement {
    MElement::basis(mu.clone())
}

/// The three associativity identities of the bimodule for every choice of
/// `β, γ, Μ` with `|β| + |γ| + |Μ| = n`.
pub fn associativity_failures(n: usize) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for k in 0..=n {
        for mu in total_order(n - k) {
            let m = basis(&mu);
            for kb in 0..=k {
                for beta in enumerate_partitions(kb) {
                    for gamma in enumerate_partitions(k - kb) {
                        let bg = hall_product(&beta, &gamma)?;
                        let gb = hall_product(&gamma, &beta)?;
                        let lhs = left_action_h(&bg, &m)?;
                        let rhs = left_action(&beta, &left_action(&gamma, &m)?)?;
                        if lhs != rhs {
                            bad.push(format!("(u_{beta} u_{gamma}) u_{mu} != u_{beta}(u_{gamma} u_{mu})"));
                        }
                        let lhs = right_action(&right_action(&m, &gamma)?, &beta)?;
                        let rhs = right_action_h(&m, &gb)?;
                        if lhs != rhs {
                            bad.push(format!("(u_{mu} u_{gamma}) u_{beta} != u_{mu}(u_{gamma} u_{beta})"));
                        }
                        let lhs = left_action(&beta, &right_action(&m, &gamma)?)?;
                        let rhs = right_action(&left_action(&beta, &m)?, &gamma)?;
                        if lhs != rhs {
                            bad.push(format!("u_{beta}(u_{mu} u_{gamma}) != (u_{beta} u_{mu}) u_{gamma}"));
                        }
                    }
                }
            }
        }
    }
    Ok(bad)
}

/// Columns of `(g^Λ_Μ)` against the expansion of `𝔣u_{μ'} 𝔣u_0 𝔣u_{μ''}`.
pub fn fv_failures(n: usize) -> Result<Vec<String>> {
    let g = g_double_matrix(n)?;
    let mut bad = Vec::new();
    for mu in &g.order {
        let fv = fv_basis(mu)?;
        for lam in &g.order {
            if fv.coeff(lam) != g.entry(lam, mu) {
                bad.push(format!("fv_{mu} at {lam}: {} vs g = {}", fv.coeff(lam), g.entry(lam, mu)));
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(s: &str) -> DoublePartition {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn n1_transition() {
        let h = h_transition(1).unwrap();
        assert_eq!(h.entry(&dp("1."), &dp(".1")), IntPoly::t());
        assert!(h.entry(&dp("1."), &dp("1.")).is_one());
        assert!(h.entry(&dp(".1"), &dp("1.")).is_zero());
        assert!(g_double(&dp(".1"), &dp("1.")).unwrap().is_one());
        assert!(g_double(&dp("1."), &dp(".1")).unwrap().is_zero());
    }

    #[test]
    fn transition_is_unitriangular() {
        for n in 0..=4 {
            let h = h_transition(n).unwrap();
            for nu in &h.order {
                for mu in &h.order {
                    let e = h.entry(nu, mu);
                    if nu == mu {
                        assert!(e.is_one());
                    } else if !e.is_zero() {
                        assert!(double_dominance_le(mu, nu).unwrap(), "h^{mu}_{nu} = {e}");
                    }
                }
                if nu.first.is_empty() {
                    let row: Vec<bool> = h.order.iter().map(|mu| h.entry(nu, mu).is_zero() == (mu != nu)).collect();
                    assert!(row.iter().all(|&b| b), "R_{nu} should equal P_{nu}");
                }
            }
        }
    }

    #[test]
    fn g_matches_classical_hall() {
        for n in 1..=4 {
            for mu2 in enumerate_partitions(n) {
                let mu = DoublePartition::new(Partition::empty(), mu2.clone());
                for nu in total_order(n) {
                    let want = g_hall(&nu.first, &nu.second, &mu2).unwrap();
                    assert_eq!(g_double(&mu, &nu).unwrap(), want, "{mu} {nu}");
                }
            }
        }
        assert_eq!(g_double(&dp(".1^2"), &dp("1.1")).unwrap().to_string(), "t + 1");
    }

    #[test]
    fn freeness_and_fv() {
        for n in 0..=4 {
            assert!(freeness_failures(n).unwrap().is_empty());
            assert!(fv_failures(n).unwrap().is_empty(), "{:?}", fv_failures(n));
        }
    }

    #[test]
    fn n1_structure_constants() {
        let e = Partition::empty();
        let one = part("1");
        let h = h_left(&one, &DoublePartition::new(e.clone(), e.clone())).unwrap();
        assert!(h.coeff(&dp("1.")).is_one());
        assert_eq!(h.coeff(&dp(".1")), IntPoly::t());
        let g = g_left(&one, &DoublePartition::new(e.clone(), e.clone())).unwrap();
        assert!(g.coeff(&dp("1.")).is_one() && g.coeff(&dp(".1")).is_one());
        let g = g_right(&DoublePartition::new(e.clone(), e), &one).unwrap();
        assert_eq!(*g, MElement::basis(dp(".1")));
    }

    #[test]
    fn unit_and_fu0() {
        let e = Partition::empty();
        for n in 0..=3 {
            for mu in total_order(n) {
                assert_eq!(*g_left(&e, &mu).unwrap(), MElement::basis(mu.clone()));
                assert_eq!(*g_right(&mu, &e).unwrap(), MElement::basis(mu.clone()));
            }
            for beta in enumerate_partitions(n) {
                let m = right_action(&MElement::basis(empty_dp()), &beta).unwrap();
                assert_eq!(m, MElement::basis(DoublePartition::new(Partition::empty(), beta)));
            }
        }
    }

    #[test]
    fn parity_and_polynomiality() {
        for n in 1..=4 {
            let bad = parity_failures(n);
            assert!(bad.is_empty(), "{bad:?}");
        }
    }

    #[test]
    fn left_structure_two_ways() {
        for n in 1..=3 {
            for (alpha, mu) in action_pairs(n) {
                assert_eq!(h_left(&alpha, &mu).unwrap(), h_left_via_transition(&alpha, &mu).unwrap(), "{alpha} {mu}");
            }
        }
    }

    #[test]
    fn associativity() {
        for n in 0..=4 {
            let bad = associativity_failures(n).unwrap();
            assert!(bad.is_empty(), "{bad:?}");
        }
    }

    #[test]
    fn ah_formula() {
        for n in 1..=4 {
            assert!(ah_formula_failures(n).unwrap().is_empty(), "{:?}", ah_formula_failures(n));
        }
    }

    fn psi_times(side: Side, alpha: &Partition, v: &XiVector) -> XiVector {
        let extra = if side == Side::Right { alpha.size() as i32 } else { 0 };
        let pa = hl_squared(alpha).map_coeffs(|c| c.invert_variable().shift(-2 * alpha.n_stat() as i32 - extra));
        let mut out = XiVector::new();
        for (a, x) in pa.iter() {
            for (lam, y) in v.iter() {
                let inner = if side == Side::Left { &lam.first } else { &lam.second };
                for (nu, c) in schur_basis_product(a, inner).iter() {
                    let key = if side == Side::Left {
                        DoublePartition::new(nu.clone(), lam.second.clone())
                    } else {
                        DoublePartition::new(lam.first.clone(), nu.clone())
                    };
                    out.add_term(key, &RatFn::from_poly(x.scale(c.to_integer())) * y);
                }
            }
        }
        out
    }

    #[test]
    fn psi_intertwines() {
        for n in 1..=3 {
            for (alpha, mu) in action_pairs(n) {
                let m = MElement::basis(mu.clone());
                let lhs = psi_of_squared(&left_action(&alpha, &m).unwrap());
                assert_eq!(lhs, psi_times(Side::Left, &alpha, &psi_image(&mu)), "left {alpha} {mu}");
                let lhs = psi_of_squared(&right_action(&m, &alpha).unwrap());
                assert_eq!(lhs, psi_times(Side::Right, &alpha, &psi_image(&mu)), "right {alpha} {mu}");
            }
        }
    }

    #[test]
    fn psi_of_fv() {
        for n in 1..=3 {
            for mu in total_order(n) {
                let lhs = psi_of_squared(&fv_basis(&mu).unwrap());
                let scale = RatFn::from_poly(IntPoly::monomial(1, -(mu.a_stat() as i32)));
                let rhs = r_function(&mu).map_coeffs(|c| &RatFn::from_poly(c.invert_variable()) * &scale);
                assert_eq!(lhs, rhs, "{mu}");
            }
        }
    }
}
