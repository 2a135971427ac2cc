//! Brute-force point counts over prime fields: enhanced nilpotent pairs
//! `(x, v)`, their orbit types, and the subspace varieties whose sizes the
//! Hall polynomials `g` and the bimodule constants `G` are meant to count.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_size, Error, Result};
use crate::par;
use crate::partition::{enumerate_double_partitions, DoublePartition, Partition};

/// Largest dimension and field size accepted by the subspace enumerators.
pub const MAX_N: usize = 4;
pub const MAX_Q: u32 = 5;

pub fn is_prime(q: u32) -> bool {
    q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

fn check_field(q: u32) -> Result<()> {
    if !is_prime(q) || q > 7 {
        return Err(Error::Invalid(format!("q = {q} must be a prime at most 7")));
    }
    Ok(())
}

fn check_limits(n: usize, q: u32) -> Result<()> {
    check_field(q)?;
    if n > MAX_N || q > MAX_Q {
        return Err(Error::Limit(format!(
            "subspace enumeration needs n <= {MAX_N} and q <= {MAX_Q}, got n = {n}, q = {q}"
        )));
    }
    Ok(())
}

fn inv_mod(a: u32, q: u32) -> u32 {
    let mut r = 1u64;
    let (mut b, mut e) = (a as u64 % q as u64, q as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % q as u64;
        }
        b = b * b % q as u64;
        e >>= 1;
    }
    r as u32
}

/// Row-reduces `rows` in place (reduced echelon form) and returns the pivot
/// columns; zero rows are dropped.
fn rref(rows: &mut Vec<Vec<u32>>, q: u32) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let inv = inv_mod(rows[r][c], q);
        for x in rows[r].iter_mut() {
            *x = *x * inv % q;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..width {
                    rows[i][j] = (rows[i][j] + q - f * rows[r][j] % q) % q;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

fn rank(rows: &[Vec<u32>], q: u32) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, q).len()
}

/// An `n × n` matrix over `F_q`, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    pub q: u32,
    pub n: usize,
    data: Vec<u32>,
}

impl FqMatrix {
    pub fn zero(n: usize, q: u32) -> Self {
        FqMatrix { q, n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize, q: u32) -> Self {
        let mut m = Self::zero(n, q);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>], q: u32) -> Self {
        let n = rows.len();
        let data = rows.iter().flat_map(|r| r.iter().map(|&x| x % q)).collect();
        FqMatrix { q, n, data }
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.n + j] = v % self.q;
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[u32]>::to_vec).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|j| (0..self.n).map(|i| self.get(i, j)).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, o: &FqMatrix) -> FqMatrix {
        let n = self.n;
        let mut r = Self::zero(n, self.q);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    r.data[i * n + j] = (r.data[i * n + j] + a * o.get(k, j)) % self.q;
                }
            }
        }
        r
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum::<u32>() % self.q).collect()
    }

    pub fn pow(&self, k: usize) -> FqMatrix {
        (0..k).fold(Self::identity(self.n, self.q), |acc, _| acc.mul(self))
    }

    pub fn rank(&self) -> usize {
        rank(&self.rows(), self.q)
    }

    pub fn inverse(&self) -> Option<FqMatrix> {
        let n = self.n;
        let mut aug: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                let mut row: Vec<u32> = (0..n).map(|j| self.get(i, j)).collect();
                row.extend((0..n).map(|j| u32::from(i == j)));
                row
            })
            .collect();
        let piv = rref(&mut aug, self.q);
        if piv.len() < n || piv[n - 1] >= n {
            return None;
        }
        Some(FqMatrix::from_rows(&aug.iter().map(|r| r[n..].to_vec()).collect::<Vec<_>>(), self.q))
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.n).is_zero()
    }

    /// Uniformly random invertible matrix.
    pub fn random_invertible(n: usize, q: u32, rng: &mut impl Rng) -> FqMatrix {
        loop {
            let mut m = Self::zero(n, q);
            for x in m.data.iter_mut() {
                *x = rng.gen_range(0..q);
            }
            if m.rank() == n {
                return m;
            }
        }
    }
}

/// An enhanced nilpotent pair `(x, v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EnhancedPoint {
    pub x: FqMatrix,
    pub v: Vec<u32>,
}

impl EnhancedPoint {
    /// `(g x g⁻¹, g v)`.
    pub fn conjugate(&self, g: &FqMatrix, g_inv: &FqMatrix) -> EnhancedPoint {
        EnhancedPoint { x: g.mul(&self.x).mul(g_inv), v: g.apply(&self.v) }
    }
}

/// Jordan type of a nilpotent matrix, from the ranks of its powers.
pub fn jordan_type(x: &FqMatrix) -> Result<Partition> {
    if !x.is_nilpotent() {
        return Err(Error::Invalid("matrix is not nilpotent".into()));
    }
    let mut ranks = vec![x.n];
    let mut p = FqMatrix::identity(x.n, x.q);
    while *ranks.last().unwrap() > 0 {
        p = p.mul(x);
        ranks.push(p.rank());
    }
    // Number of blocks of size at least i is rank(x^{i-1}) - rank(x^i).
    let conj: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).filter(|&d| d > 0).collect();
    Ok(Partition::from_unsorted(conj).conjugate())
}

/// A subspace in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub basis: Vec<Vec<u32>>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(vectors: Vec<Vec<u32>>, n: usize, q: u32) -> Subspace {
        let mut rows: Vec<Vec<u32>> = vectors.into_iter().filter(|v| v.iter().any(|&x| x != 0)).collect();
        if rows.is_empty() {
            return Subspace { basis: Vec::new(), pivots: Vec::new() };
        }
        debug_assert!(rows.iter().all(|r| r.len() == n));
        let pivots = rref(&mut rows, q);
        Subspace { basis: rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `u` minus its component along the subspace (in pivot coordinates).
    fn reduce(&self, u: &[u32], q: u32) -> Vec<u32> {
        let mut r = u.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let f = r[p];
            if f != 0 {
                for (x, &b) in r.iter_mut().zip(row) {
                    *x = (*x + q - f * b % q) % q;
                }
            }
        }
        r
    }

    pub fn contains(&self, u: &[u32], q: u32) -> bool {
        self.reduce(u, q).iter().all(|&x| x == 0)
    }

    pub fn is_stable(&self, x: &FqMatrix) -> bool {
        self.basis.iter().all(|w| self.contains(&x.apply(w), x.q))
    }

    fn complement(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|c| !self.pivots.contains(c)).collect()
    }
}

/// Matrix of `x|_W` in the echelon basis of `W` (which must be `x`-stable).
pub fn restrict(x: &FqMatrix, w: &Subspace) -> FqMatrix {
    let k = w.dim();
    let mut m = FqMatrix::zero(k, x.q);
    for (j, b) in w.basis.iter().enumerate() {
        let image = x.apply(b);
        for (l, &p) in w.pivots.iter().enumerate() {
            m.set(l, j, image[p]);
        }
    }
    m
}

/// Coordinates of a vector of `W` in its echelon basis.
pub fn restrict_vector(v: &[u32], w: &Subspace) -> Vec<u32> {
    w.pivots.iter().map(|&p| v[p]).collect()
}

/// Matrix of the map induced by `x` on `V/W`, in the basis given by the
/// non-pivot unit vectors.
pub fn quotient(x: &FqMatrix, w: &Subspace) -> FqMatrix {
    let comp = w.complement(x.n);
    let mut m = FqMatrix::zero(comp.len(), x.q);
    for (j, &c) in comp.iter().enumerate() {
        let mut e = vec![0; x.n];
        e[c] = 1;
        let r = w.reduce(&x.apply(&e), x.q);
        for (i, &d) in comp.iter().enumerate() {
            m.set(i, j, r[d]);
        }
    }
    m
}

pub fn quotient_vector(v: &[u32], w: &Subspace, q: u32) -> Vec<u32> {
    let r = w.reduce(v, q);
    w.complement(v.len()).into_iter().map(|c| r[c]).collect()
}

/// Basis of `E^x = {g : gx = xg}`.
pub fn commutant(x: &FqMatrix) -> Vec<FqMatrix> {
    let n = x.n;
    let q = x.q;
    // Unknown g_{ab} is column a*n+b; equation (gx - xg)_{ij} = 0.
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![0u32; n * n];
            for k in 0..n {
                row[i * n + k] = (row[i * n + k] + x.get(k, j)) % q;
                row[k * n + j] = (row[k * n + j] + q - x.get(i, k)) % q;
            }
            rows.push(row);
        }
    }
    let pivots = if rows.is_empty() { Vec::new() } else { rref(&mut rows, q) };
    let free: Vec<usize> = (0..n * n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut sol = vec![0u32; n * n];
            sol[f] = 1;
            for (row, &p) in rows.iter().zip(&pivots) {
                sol[p] = (q - row[f]) % q;
            }
            FqMatrix { q, n, data: sol }
        })
        .collect()
}

/// Orbit type `(λ'; λ'')` of `(x, v)`: with `W = E^x v`, `λ'` is the type of
/// `x|_W` and `λ''` that of `x|_{V/W}`.
pub fn enhanced_type(p: &EnhancedPoint) -> Result<DoublePartition> {
    let x = &p.x;
    let images: Vec<Vec<u32>> = commutant(x).iter().map(|g| g.apply(&p.v)).collect();
    let w = Subspace::span(images, x.n, x.q);
    Ok(DoublePartition::new(jordan_type(&restrict(x, &w))?, jordan_type(&quotient(x, &w))?))
}

/// Normal form for the orbit `Λ`: `x` with Jordan blocks of sizes
/// `λ'_i + λ''_i`, and `v` the sum over blocks of the basis vector at height
/// `λ'_i`. Checked with [`enhanced_type`] before returning.
pub fn representative(lam: &DoublePartition, q: u32) -> Result<EnhancedPoint> {
    check_field(q)?;
    let n = lam.size();
    let mut x = FqMatrix::zero(n, q);
    let mut v = vec![0u32; n];
    let rows = lam.first.len().max(lam.second.len());
    let mut offset = 0;
    for i in 0..rows {
        let (a, b) = (lam.first.get(i), lam.second.get(i));
        // Block basis e_1, ..., e_{a+b} with x e_j = e_{j-1}.
        for j in 1..a + b {
            x.set(offset + j - 1, offset + j, 1);
        }
        if a > 0 {
            v[offset + a - 1] = 1;
        }
        offset += a + b;
    }
    let point = EnhancedPoint { x, v };
    let got = enhanced_type(&point)?;
    if got != *lam {
        return Err(Error::Inconsistent(format!("normal form for {lam} has type {got}")));
    }
    Ok(point)
}

/// Random conjugates `g·(x, v)` of the normal form, from a fixed seed.
pub fn sampled_representatives(lam: &DoublePartition, q: u32, count: usize, seed: u64) -> Result<Vec<EnhancedPoint>> {
    let base = representative(lam, q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![base.clone()];
    while out.len() < count {
        let g = FqMatrix::random_invertible(lam.size(), q, &mut rng);
        let g_inv = g.inverse().expect("invertible");
        out.push(base.conjugate(&g, &g_inv));
    }
    Ok(out)
}

/// All subspaces of `F_q^n`, as reduced echelon bases.
pub fn all_subspaces(n: usize, q: u32) -> Result<Vec<Subspace>> {
    check_limits(n, q)?;
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in choose(n, k) {
            // Free entries: row r, columns after pivots[r] that are not pivots.
            let slots: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| ((pivots[r] + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
                .collect();
            let total = (q as usize).pow(slots.len() as u32);
            for code in 0..total {
                let mut basis = vec![vec![0u32; n]; k];
                for (r, &p) in pivots.iter().enumerate() {
                    basis[r][p] = 1;
                }
                let mut c = code;
                for &(r, col) in &slots {
                    basis[r][col] = (c % q as usize) as u32;
                    c /= q as usize;
                }
                out.push(Subspace { basis, pivots: pivots.clone() });
            }
        }
    }
    Ok(out)
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn x_stable_subspaces(p: &EnhancedPoint) -> Result<Vec<Subspace>> {
    Ok(all_subspaces(p.x.n, p.x.q)?.into_iter().filter(|w| w.is_stable(&p.x)).collect())
}

fn histogram<K: Ord>(keys: Vec<Option<K>>) -> BTreeMap<K, u64> {
    let mut h = BTreeMap::new();
    for k in keys.into_iter().flatten() {
        *h.entry(k).or_insert(0) += 1;
    }
    h
}

/// For the point `(x, v)`: the number of `x`-stable `W ∋ v` with `x|_W` of
/// type `ν'` and `x|_{V/W}` of type `ν''`, for every `Ν = (ν'; ν'')`.
pub fn g_variety_counts(p: &EnhancedPoint) -> Result<BTreeMap<DoublePartition, u64>> {
    let subs = x_stable_subspaces(p)?;
    let keys: Vec<Result<Option<DoublePartition>>> = par::map(&subs, |w| {
        if !w.contains(&p.v, p.x.q) {
            return Ok(None);
        }
        Ok(Some(DoublePartition::new(jordan_type(&restrict(&p.x, w))?, jordan_type(&quotient(&p.x, w))?)))
    });
    Ok(histogram(keys.into_iter().collect::<Result<_>>()?))
}

/// `|𝔊^Μ_Ν(F_q)|` at the normal form of `Μ`.
pub fn count_g_variety(mu: &DoublePartition, nu: &DoublePartition, q: u32) -> Result<u64> {
    check_size(mu.size(), nu.size())?;
    let p = representative(mu, q)?;
    Ok(g_variety_counts(&p)?.get(nu).copied().unwrap_or(0))
}

/// Left side, for a point of type `Λ`: counts of `x`-stable `W` keyed by
/// `(type of x|_W, enhanced type of (x|_{V/W}, v mod W))`.
/// Right side: `W ∋ v`, keyed by `(type of x|_{V/W}, enhanced type of (x|_W, v))`.
pub fn bimodule_counts(p: &EnhancedPoint, left: bool) -> Result<BTreeMap<(Partition, DoublePartition), u64>> {
    let q = p.x.q;
    let subs = x_stable_subspaces(p)?;
    let keys: Vec<Result<Option<(Partition, DoublePartition)>>> = par::map(&subs, |w| {
        if left {
            let sub = jordan_type(&restrict(&p.x, w))?;
            let quo = EnhancedPoint { x: quotient(&p.x, w), v: quotient_vector(&p.v, w, q) };
            Ok(Some((sub, enhanced_type(&quo)?)))
        } else {
            if !w.contains(&p.v, q) {
                return Ok(None);
            }
            let sub = EnhancedPoint { x: restrict(&p.x, w), v: restrict_vector(&p.v, w) };
            Ok(Some((jordan_type(&quotient(&p.x, w))?, enhanced_type(&sub)?)))
        }
    });
    Ok(histogram(keys.into_iter().collect::<Result<_>>()?))
}

/// `G^Λ_{α,Μ}(q)` (left) or `G^Λ_{Μ,α}(q)` (right) by counting at the normal form of `Λ`.
pub fn count_bimodule_varieties(
    lam: &DoublePartition,
    alpha: &Partition,
    mu: &DoublePartition,
    q: u32,
    left: bool,
) -> Result<u64> {
    check_size(lam.size(), alpha.size() + mu.size())?;
    let p = representative(lam, q)?;
    Ok(bimodule_counts(&p, left)?.get(&(alpha.clone(), mu.clone())).copied().unwrap_or(0))
}

/// Orbits of `GL_n(F_q)` on nilpotent pairs.
#[derive(Clone, Debug)]
pub struct Census {
    pub pairs: u64,
    pub orbits: usize,
    /// Number of pairs of each enhanced type.
    pub by_type: BTreeMap<DoublePartition, u64>,
    /// Whether every orbit has a single enhanced type.
    pub type_constant_on_orbits: bool,
}

fn primitive_root(q: u32) -> u32 {
    (1..q).find(|&g| (1..q - 1).all(|k| (g as u64).pow(k) % q as u64 != 1)).unwrap_or(1)
}

/// Exhaustive orbit census by union-find over a generating set of `GL_n(F_q)`.
pub fn orbit_census(n: usize, q: u32) -> Result<Census> {
    check_field(q)?;
    if n > 3 || q > 3 {
        return Err(Error::Limit(format!("orbit census needs n <= 3 and q <= 3, got n = {n}, q = {q}")));
    }
    let entries = n * n;
    let nilpotent: Vec<FqMatrix> = (0..(q as usize).pow(entries as u32))
        .filter_map(|mut code| {
            let mut m = FqMatrix::zero(n, q);
            for x in m.data.iter_mut() {
                *x = (code % q as usize) as u32;
                code /= q as usize;
            }
            m.is_nilpotent().then_some(m)
        })
        .collect();
    let x_index: HashMap<FqMatrix, usize> = nilpotent.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let vcount = (q as usize).pow(n as u32);
    let decode_v = |mut code: usize| -> Vec<u32> {
        (0..n)
            .map(|_| {
                let d = (code % q as usize) as u32;
                code /= q as usize;
                d
            })
            .collect()
    };
    let encode_v = |v: &[u32]| v.iter().rev().fold(0usize, |acc, &d| acc * q as usize + d as usize);
    let total = nilpotent.len() * vcount;
    let mut gens = Vec::new();
    if n > 0 {
        let mut d = FqMatrix::identity(n, q);
        d.set(0, 0, primitive_root(q));
        gens.push(d);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let mut t = FqMatrix::identity(n, q);
                    t.set(i, j, 1);
                    gens.push(t);
                }
            }
        }
    }
    let gens: Vec<(FqMatrix, FqMatrix)> =
        gens.into_iter().map(|g| (g.inverse().expect("invertible"), g)).map(|(gi, g)| (g, gi)).collect();
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut a: usize) -> usize {
        while parent[a] != a {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        a
    }
    for (xi, x) in nilpotent.iter().enumerate() {
        for (g, gi) in &gens {
            let y = g.mul(x).mul(gi);
            let yi = x_index[&y];
            for vc in 0..vcount {
                let w = g.apply(&decode_v(vc));
                let a = find(&mut parent, xi * vcount + vc);
                let b = find(&mut parent, yi * vcount + encode_v(&w));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let types: Vec<Result<DoublePartition>> = par::map_range(total, |idx| {
        enhanced_type(&EnhancedPoint { x: nilpotent[idx / vcount].clone(), v: decode_v(idx % vcount) })
    });
    let types: Vec<DoublePartition> = types.into_iter().collect::<Result<_>>()?;
    let mut orbit_type: HashMap<usize, DoublePartition> = HashMap::new();
    let mut constant = true;
    let mut by_type = BTreeMap::new();
    for (idx, t) in types.into_iter().enumerate() {
        let root = find(&mut parent, idx);
        match orbit_type.get(&root) {
            Some(prev) if *prev != t => constant = false,
            Some(_) => {}
            None => {
                orbit_type.insert(root, t.clone());
            }
        }
        *by_type.entry(t).or_insert(0u64) += 1;
    }
    Ok(Census { pairs: total as u64, orbits: orbit_type.len(), by_type, type_constant_on_orbits: constant })
}

/// Labels of all orbits of size `n`.
pub fn orbit_labels(n: usize) -> Vec<DoublePartition> {
    enumerate_double_partitions(n)
}
