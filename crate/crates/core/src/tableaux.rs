//! Semistandard tableaux on straight and skew shapes, reading words, charge,
//! jeu de taquin, and the tableau formulas for Kostka and double Kostka
//! polynomials.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use crate::error::{check_size, Error, Result};
use crate::partition::{weak_compositions, DoublePartition, Partition};
use crate::poly::IntPoly;

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Invalid(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape { outer: shape, inner: Partition::empty() }
    }

    pub fn cells(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }
}

/// A filling of a skew shape; `rows[i]` holds the entries of row `i` of the
/// skew diagram from left to right (inner cells excluded).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Builds a tableau and checks it is semistandard.
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    /// A straight-shape tableau given by its rows.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        Self::new(SkewShape::straight(shape), rows)
    }

    fn validate(&self) -> Result<()> {
        let k = self.shape.outer.len();
        if self.rows.len() != k {
            return Err(Error::Invalid("row count does not match shape".into()));
        }
        for i in 0..k {
            if self.rows[i].len() != self.shape.outer.get(i) - self.shape.inner.get(i) {
                return Err(Error::Invalid(format!("row {i} has the wrong length")));
            }
            if self.rows[i].contains(&0) {
                return Err(Error::Invalid("entries must be positive".into()));
            }
            if self.rows[i].windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Invalid(format!("row {i} is not weakly increasing")));
            }
        }
        for i in 1..k {
            for c in self.shape.inner.get(i)..self.shape.outer.get(i) {
                if let (Some(up), Some(here)) = (self.at(i - 1, c), self.at(i, c)) {
                    if up >= here {
                        return Err(Error::Invalid(format!("column {c} is not strictly increasing")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at row `i`, absolute column `c`; `None` for inner or absent cells.
    pub fn at(&self, i: usize, c: usize) -> Option<u32> {
        let lo = self.shape.inner.get(i);
        if c < lo {
            return None;
        }
        self.rows.get(i).and_then(|r| r.get(c - lo)).copied()
    }

    /// Multiplicity of each letter `1..=max`.
    pub fn weight(&self) -> Vec<usize> {
        letter_counts(self.rows.iter().flatten().copied())
    }

    /// The word read right to left in each row, rows from top to bottom.
    pub fn word(&self) -> Word {
        Word(self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            let pad = "  ".repeat(self.shape.inner.get(i));
            let body: Vec<String> = r.iter().map(u32::to_string).collect();
            writeln!(f, "{pad}{}", body.join(" "))?;
        }
        Ok(())
    }
}

/// A pair `(T+, T-)` of semistandard tableaux.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiTableau {
    pub plus: Tableau,
    pub minus: Tableau,
}

impl BiTableau {
    /// `w(T) = w(T+) w(T-)`.
    pub fn word(&self) -> Word {
        let mut w = self.plus.word();
        w.0.extend(self.minus.word().0);
        w
    }

    /// The same filling placed on `skew_embed(Λ)`.
    pub fn to_skew(&self) -> Result<Tableau> {
        let lam = DoublePartition::new(self.plus.shape.outer.clone(), self.minus.shape.outer.clone());
        let mut rows = self.plus.rows.clone();
        rows.extend(self.minus.rows.iter().cloned());
        Tableau::new(skew_embed(&lam), rows)
    }
}

/// A word over the positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u32>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

fn letter_counts<I: Iterator<Item = u32>>(it: I) -> Vec<usize> {
    let mut counts: Vec<usize> = Vec::new();
    for x in it {
        let x = x as usize;
        if counts.len() < x {
            counts.resize(x, 0);
        }
        counts[x - 1] += 1;
    }
    counts
}

/// The skew diagram of a double partition: `ξ_i = λ'_i + a` for `i ≤ k'`,
/// `ξ_{k'+i} = λ''_i`, `θ = (a^{k'})`, where `a = λ''_1`.
pub fn skew_embed(lam: &DoublePartition) -> SkewShape {
    let a = lam.second.get(0);
    let k1 = lam.first.len();
    let mut outer: Vec<usize> = lam.first.parts().iter().map(|p| p + a).collect();
    outer.extend_from_slice(lam.second.parts());
    SkewShape {
        outer: Partition::new(outer).expect("embedded shape is a partition"),
        inner: Partition::from_unsorted(vec![a; k1]),
    }
}

/// All semistandard tableaux of the given shape whose weight is the
/// composition `weight` (letter `i+1` occurs `weight[i]` times).
pub fn enumerate_sst(shape: &SkewShape, weight: &[usize]) -> Result<Vec<Tableau>> {
    check_size(weight.iter().sum(), shape.cells())?;
    let k = shape.outer.len();
    let outer: Vec<usize> = (0..k).map(|i| shape.outer.get(i)).collect();
    let start: Vec<usize> = (0..k).map(|i| shape.inner.get(i)).collect();
    let mut grid: Vec<Vec<u32>> = (0..k).map(|i| vec![0; outer[i]]).collect();
    let mut out = Vec::new();
    strips(&outer, &start, weight, 0, &mut grid, &mut |g| {
        let rows = (0..k).map(|i| g[i][start[i]..].to_vec()).collect();
        out.push(Tableau { shape: shape.clone(), rows });
    });
    Ok(out)
}

/// Number of semistandard tableaux, without materializing them.
pub fn count_sst(shape: &SkewShape, weight: &[usize]) -> Result<u64> {
    check_size(weight.iter().sum(), shape.cells())?;
    let k = shape.outer.len();
    let outer: Vec<usize> = (0..k).map(|i| shape.outer.get(i)).collect();
    let start: Vec<usize> = (0..k).map(|i| shape.inner.get(i)).collect();
    let mut grid: Vec<Vec<u32>> = (0..k).map(|i| vec![0; outer[i]]).collect();
    let mut n = 0u64;
    strips(&outer, &start, weight, 0, &mut grid, &mut |_| n += 1);
    Ok(n)
}

/// Adds one horizontal strip per letter, recursing over letters.
fn strips(
    outer: &[usize],
    cur: &[usize],
    weight: &[usize],
    letter: usize,
    grid: &mut Vec<Vec<u32>>,
    emit: &mut dyn FnMut(&Vec<Vec<u32>>),
) {
    if letter == weight.len() {
        if cur == outer {
            emit(grid);
        }
        return;
    }
    let mut next = cur.to_vec();
    strip_rows(outer, cur, weight[letter], 0, &mut next, &mut |nx: &[usize]| {
        for i in 0..nx.len() {
            for c in cur[i]..nx[i] {
                grid[i][c] = letter as u32 + 1;
            }
        }
        strips(outer, nx, weight, letter + 1, grid, emit);
    });
}

fn strip_rows(
    outer: &[usize],
    cur: &[usize],
    left: usize,
    row: usize,
    next: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if row == cur.len() {
        if left == 0 {
            f(next);
        }
        return;
    }
    let cap = if row == 0 { outer[0] } else { outer[row].min(cur[row - 1]) };
    let room = cap.saturating_sub(cur[row]);
    for add in 0..=room.min(left) {
        next[row] = cur[row] + add;
        strip_rows(outer, cur, left - add, row + 1, next, f);
    }
    next[row] = cur[row];
}

/// Every prefix contains at least as many `i` as `i+1`, for all `i`.
pub fn is_lattice(w: &Word) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &x in &w.0 {
        let x = x as usize;
        if counts.len() < x {
            counts.resize(x, 0);
        }
        counts[x - 1] += 1;
        if x > 1 && counts[x - 1] > counts[x - 2] {
            return false;
        }
    }
    true
}

/// The charge of a word in reading order right to left, top to bottom.
///
/// The word is reversed into the usual left-to-right, bottom-to-top reading
/// order, then decomposed into standard subwords: starting from the right end
/// and moving left cyclically, pick `1, 2, 3, ...`; the index of `r+1` is
/// that of `r`, plus one if the search wrapped around. The charge is the sum
/// of all indices.
pub fn charge(w: &Word) -> Result<usize> {
    let counts = letter_counts(w.0.iter().copied());
    if counts.windows(2).any(|c| c[0] < c[1]) {
        return Err(Error::Invalid(format!("weight {counts:?} of `{w}` is not a partition")));
    }
    let u: Vec<u32> = w.0.iter().rev().copied().collect();
    let len = u.len();
    let mut used = vec![false; len];
    let mut remaining = counts.clone();
    let mut total = 0;
    while remaining.first().is_some_and(|&c| c > 0) {
        let r = remaining.iter().take_while(|&&c| c > 0).count();
        let mut pos = len;
        let mut index = 0;
        for letter in 1..=r as u32 {
            let mut found = None;
            for p in (0..pos).rev() {
                if !used[p] && u[p] == letter {
                    found = Some(p);
                    break;
                }
            }
            if found.is_none() {
                for p in (pos..len).rev() {
                    if !used[p] && u[p] == letter {
                        found = Some(p);
                        break;
                    }
                }
                if letter > 1 {
                    index += 1;
                }
            }
            let p = found.expect("letter present by weight bookkeeping");
            used[p] = true;
            total += index;
            pos = p;
        }
        for c in remaining.iter_mut().take(r) {
            *c -= 1;
        }
    }
    Ok(total)
}

/// Jeu de taquin rectification of a skew tableau to straight shape.
pub fn rectify(t: &Tableau) -> Tableau {
    let k = t.shape.outer.len();
    let mut grid: Vec<Vec<Option<u32>>> = (0..k)
        .map(|i| {
            let lo = t.shape.inner.get(i);
            (0..lo).map(|_| None).chain(t.rows[i].iter().map(|&x| Some(x))).collect()
        })
        .collect();
    // Slide into inner corners, always from the lowest row with an inner cell.
    while let Some(r) = (0..grid.len()).rev().find(|&i| grid[i].first() == Some(&None)) {
        let c = grid[r].iter().position(Option::is_some).unwrap_or(grid[r].len()) - 1;
        let (mut i, mut j) = (r, c);
        loop {
            let below = grid.get(i + 1).and_then(|row| row.get(j)).copied().flatten();
            let right = grid[i].get(j + 1).copied().flatten();
            let take_below = match (below, right) {
                (None, None) => break,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some(b), Some(rt)) => b <= rt,
            };
            if take_below {
                grid[i][j] = below;
                i += 1;
            } else {
                grid[i][j] = right;
                j += 1;
            }
        }
        grid[i].truncate(j);
        while grid.last().is_some_and(Vec::is_empty) {
            grid.pop();
        }
    }
    let rows: Vec<Vec<u32>> = grid.into_iter().map(|r| r.into_iter().map(|x| x.unwrap()).collect()).collect();
    let shape = Partition::new(rows.iter().map(Vec::len).collect()).expect("rectified shape is a partition");
    Tableau { shape: SkewShape::straight(shape), rows }
}

type LrCache = Mutex<HashMap<(Partition, Partition, Partition), u64>>;

fn lr_cache() -> &'static LrCache {
    static CACHE: std::sync::OnceLock<LrCache> = std::sync::OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `c^ν_{λ'λ''}` as the number of tableaux on `skew_embed((λ';λ''))` of
/// weight `ν` whose word is a lattice word.
pub fn lr_coefficient(a: &Partition, b: &Partition, nu: &Partition) -> Result<u64> {
    check_size(a.size() + b.size(), nu.size())?;
    let key = (a.clone(), b.clone(), nu.clone());
    if let Some(&v) = lr_cache().lock().unwrap().get(&key) {
        return Ok(v);
    }
    if !nu.contains(a) || !nu.contains(b) {
        lr_cache().lock().unwrap().insert(key, 0);
        return Ok(0);
    }
    let shape = skew_embed(&DoublePartition::new(a.clone(), b.clone()));
    let v = enumerate_sst(&shape, nu.parts())?.iter().filter(|t| is_lattice(&t.word())).count() as u64;
    lr_cache().lock().unwrap().insert(key, v);
    Ok(v)
}

/// `K_{λμ}(t) = Σ_{S ∈ SST(λ, μ)} t^{c(S)}`.
pub fn kostka_charge(lam: &Partition, mu: &Partition) -> Result<IntPoly> {
    check_size(lam.size(), mu.size())?;
    let ts = enumerate_sst(&SkewShape::straight(lam.clone()), mu.parts())?;
    let mut terms = Vec::with_capacity(ts.len());
    for t in &ts {
        terms.push((charge(&t.word())? as i32, 1));
    }
    Ok(IntPoly::from_terms(terms))
}

/// `K_{Λ,(-;μ'')}(t) = t^{|λ'|} Σ_T t^{2 c(T)}` over `T ∈ SST(Λ, μ'')`, with the
/// charge taken after rectification.
pub fn double_kostka_charge(lam: &DoublePartition, mu2: &Partition) -> Result<IntPoly> {
    check_size(lam.size(), mu2.size())?;
    let ts = enumerate_sst(&skew_embed(lam), mu2.parts())?;
    let mut terms = Vec::with_capacity(ts.len());
    for t in &ts {
        let c = charge(&rectify(t).word())?;
        terms.push((2 * c as i32, 1));
    }
    Ok(IntPoly::from_terms(terms).shift(lam.first.size() as i32))
}

/// `|SST(Λ, μ'')|` summed over splittings `α + β = μ''` of the weight with
/// `|α| = |λ'|`, as products of straight-shape counts.
pub fn count_bisst(lam: &DoublePartition, mu2: &Partition) -> Result<u64> {
    check_size(lam.size(), mu2.size())?;
    let pi = mu2.parts();
    let k = pi.len();
    let mut total = 0;
    for alpha in weak_compositions(lam.first.size(), k) {
        if alpha.iter().zip(pi).any(|(a, p)| a > p) {
            continue;
        }
        let beta: Vec<usize> = alpha.iter().zip(pi).map(|(a, p)| p - a).collect();
        let x = count_sst(&SkewShape::straight(lam.first.clone()), &alpha)?;
        if x == 0 {
            continue;
        }
        total += x * count_sst(&SkewShape::straight(lam.second.clone()), &beta)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn poly(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    /// Row insertion of the left-to-right, bottom-to-top reading word; an
    /// independent route to the rectification.
    fn rsk_insert(word: &[u32]) -> Vec<Vec<u32>> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for &x in word {
            let mut x = x;
            let mut r = 0;
            loop {
                if r == rows.len() {
                    rows.push(vec![x]);
                    break;
                }
                match rows[r].iter().position(|&y| y > x) {
                    Some(pos) => {
                        std::mem::swap(&mut rows[r][pos], &mut x);
                        r += 1;
                    }
                    None => {
                        rows[r].push(x);
                        break;
                    }
                }
            }
        }
        rows
    }

    fn standard_tableaux_count(lam: &Partition) -> u64 {
        count_sst(&SkewShape::straight(lam.clone()), &vec![1; lam.size()]).unwrap()
    }

    #[test]
    fn sst_counts() {
        let s = SkewShape::straight(p(&[2, 1]));
        assert_eq!(enumerate_sst(&s, &[1, 1, 1]).unwrap().len(), 2);
        assert_eq!(enumerate_sst(&SkewShape::straight(p(&[3])), &[3]).unwrap().len(), 1);
        let row = SkewShape::straight(p(&[2]));
        assert_eq!(count_sst(&row, &[1, 1]).unwrap(), count_sst(&row, &[1, 1]).unwrap());
        assert_eq!(
            count_sst(&SkewShape::straight(p(&[3, 2])), &[2, 1, 2]).unwrap(),
            count_sst(&SkewShape::straight(p(&[3, 2])), &[2, 2, 1]).unwrap()
        );
        assert!(enumerate_sst(&s, &[1, 1]).is_err());
    }

    #[test]
    fn embedding_examples() {
        let e = skew_embed(&"1.1".parse().unwrap());
        assert_eq!((e.outer, e.inner), (p(&[2, 1]), p(&[1])));
        let e = skew_embed(&"21.".parse().unwrap());
        assert_eq!((e.outer, e.inner), (p(&[2, 1]), Partition::empty()));
        let e = skew_embed(&"2.2".parse().unwrap());
        assert_eq!((e.outer, e.inner), (p(&[4, 2]), p(&[2])));
    }

    #[test]
    fn words_and_lattice() {
        let b = BiTableau {
            plus: Tableau::from_rows(vec![vec![1]]).unwrap(),
            minus: Tableau::from_rows(vec![vec![2]]).unwrap(),
        };
        assert_eq!(b.word().to_string(), "12");
        assert_eq!(Tableau::from_rows(vec![vec![1, 1, 2]]).unwrap().word().to_string(), "211");
        assert_eq!(Tableau::from_rows(vec![]).unwrap().word(), Word::default());
        assert!(is_lattice(&Word(vec![1, 1, 2, 2])));
        assert!(!is_lattice(&Word(vec![2, 1])));
        assert!(is_lattice(&Word(vec![])));
        assert_eq!(b.to_skew().unwrap().word(), b.word());
    }

    #[test]
    fn charge_examples() {
        assert_eq!(charge(&Word(vec![1, 1, 1])).unwrap(), 0);
        assert_eq!(charge(&Word(vec![2, 1])).unwrap(), 1);
        assert_eq!(charge(&Word(vec![1, 2])).unwrap(), 0);
        assert!(charge(&Word(vec![2, 2, 1])).is_err());
    }

    #[test]
    fn rectify_examples() {
        let straight = Tableau::from_rows(vec![vec![1, 2], vec![2]]).unwrap();
        assert_eq!(rectify(&straight), straight);
        let shape = skew_embed(&"1.1".parse().unwrap());
        let t = Tableau::new(shape.clone(), vec![vec![1], vec![2]]).unwrap();
        assert_eq!(rectify(&t).rows(), &[vec![1], vec![2]]);
        let t = Tableau::new(shape, vec![vec![2], vec![1]]).unwrap();
        assert_eq!(rectify(&t).rows(), &[vec![1, 2]]);
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &Partition::empty(), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(), 2);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])), Err(Error::SizeMismatch(2, 3)));
    }

    /// Pieri: `s_λ h_m` has `s_ν` with coefficient one exactly when `ν/λ` is a
    /// horizontal strip; `s_λ e_m` likewise with vertical strips.
    #[test]
    fn lr_matches_pieri() {
        for n in 1..=6 {
            for m in 1..=n {
                for lam in crate::partition::enumerate_partitions(n - m) {
                    for nu in crate::partition::enumerate_partitions(n) {
                        let horiz = nu.contains(&lam) && (0..nu.len()).all(|i| i == 0 || nu.get(i) <= lam.get(i - 1));
                        assert_eq!(lr_coefficient(&lam, &Partition::row(m), &nu).unwrap(), horiz as u64);
                        let (nc, lc) = (nu.conjugate(), lam.conjugate());
                        let vert = nc.contains(&lc) && (0..nc.len()).all(|i| i == 0 || nc.get(i) <= lc.get(i - 1));
                        assert_eq!(lr_coefficient(&lam, &Partition::column(m), &nu).unwrap(), vert as u64);
                    }
                }
            }
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_charge(&p(&[2, 1]), &p(&[2, 1])).unwrap(), IntPoly::one());
        assert_eq!(kostka_charge(&p(&[2]), &p(&[1, 1])).unwrap(), poly("t"));
        assert_eq!(kostka_charge(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), poly("t^2 + t"));
        assert_eq!(kostka_charge(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), IntPoly::zero());
        assert_eq!(kostka_charge(&p(&[3, 1]), &p(&[1, 1, 1, 1])).unwrap(), poly("t^5 + t^4 + t^3"));
    }

    #[test]
    fn kostka_degree_and_dominance() {
        for n in 1..=6 {
            let ps = crate::partition::enumerate_partitions(n);
            for lam in &ps {
                for mu in &ps {
                    let k = kostka_charge(lam, mu).unwrap();
                    if mu.dominated_by(lam).unwrap() {
                        assert_eq!(k.degree(), Some((mu.n_stat() - lam.n_stat()) as i32));
                        assert_eq!(k.leading_coeff(), 1);
                        assert!(k.has_nonnegative_coeffs());
                    } else {
                        assert!(k.is_zero());
                    }
                    // Value at t = 1 counts tableaux.
                    let cnt = count_sst(&SkewShape::straight(lam.clone()), mu.parts()).unwrap();
                    assert_eq!(k.at_one(), cnt as i128);
                }
                // K_{λ,1^n}(1) is the number of standard tableaux.
                assert_eq!(
                    kostka_charge(lam, &Partition::column(n)).unwrap().at_one(),
                    standard_tableaux_count(lam) as i128
                );
            }
        }
    }

    #[test]
    fn double_kostka_examples() {
        let dk = |l: &str, m: &[usize]| double_kostka_charge(&l.parse().unwrap(), &p(m)).unwrap();
        assert_eq!(dk("1.1", &[1, 1]), poly("t^3 + t"));
        assert_eq!(dk("1.2", &[3]), poly("t"));
        assert_eq!(dk(".21", &[2, 1]), IntPoly::one());
        assert_eq!(dk("2.1", &[1, 1, 1]), poly("t^8 + t^6 + t^4"));
        let cb = |l: &str, m: &[usize]| count_bisst(&l.parse().unwrap(), &p(m)).unwrap();
        assert_eq!(cb("1.1", &[1, 1]), 2);
        assert_eq!(cb(".21", &[2, 1]), 1);
        assert_eq!(cb("2.", &[1, 1]), 1);
    }

    /// Σ_ν c^ν_{λ'λ''} |SST(ν, π)| = |SST(Λ, π)|, all double partitions of n ≤ 5.
    #[test]
    fn lr_bijection_counts() {
        for n in 0..=5 {
            for lam in crate::partition::enumerate_double_partitions(n) {
                for pi in crate::partition::enumerate_partitions(n) {
                    let lhs: u64 = crate::partition::enumerate_partitions(n)
                        .iter()
                        .map(|nu| {
                            lr_coefficient(&lam.first, &lam.second, nu).unwrap()
                                * count_sst(&SkewShape::straight(nu.clone()), pi.parts()).unwrap()
                        })
                        .sum();
                    assert_eq!(lhs, count_sst(&skew_embed(&lam), pi.parts()).unwrap());
                    assert_eq!(lhs, count_bisst(&lam, &pi).unwrap());
                    assert_eq!(double_kostka_charge(&lam, &pi).unwrap().at_one(), lhs as i128);
                }
            }
        }
    }

    fn arb_double(max: usize) -> impl Strategy<Value = DoublePartition> {
        (1..=max).prop_flat_map(|n| {
            let all = crate::partition::enumerate_double_partitions(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn rectify_agrees_with_insertion(lam in arb_double(6), seed in 0usize..1000) {
            let n = lam.size();
            let weights = crate::partition::enumerate_partitions(n);
            let mu = &weights[seed % weights.len()];
            let ts = enumerate_sst(&skew_embed(&lam), mu.parts()).unwrap();
            if !ts.is_empty() {
                let t = &ts[seed % ts.len()];
                let r = rectify(t);
                let mut reading: Vec<u32> = t.word().0;
                reading.reverse();
                prop_assert_eq!(r.rows().to_vec(), rsk_insert(&reading));
                prop_assert_eq!(r.weight(), t.weight());
                prop_assert!(Tableau::new(r.shape().clone(), r.rows().to_vec()).is_ok());
                prop_assert_eq!(charge(&r.word()).unwrap(), charge(&t.word()).unwrap());
            }
        }

        #[test]
        fn sst_count_is_symmetric_in_weight(lam in arb_double(6), perm in 0usize..720) {
            let n = lam.size();
            let mu: Vec<usize> = crate::partition::enumerate_partitions(n)[perm % crate::partition::enumerate_partitions(n).len()].parts().to_vec();
            let mut shuffled = mu.clone();
            let k = shuffled.len();
            let mut x = perm;
            for i in (1..k).rev() {
                shuffled.swap(i, x % (i + 1));
                x /= i + 1;
            }
            let shape = skew_embed(&lam);
            prop_assert_eq!(count_sst(&shape, &mu).unwrap(), count_sst(&shape, &shuffled).unwrap());
        }
    }
}
