//! Matrices over `Rat`, `QPoly`, and `QRatFunc`, with exact rank, kernels,
//! minors, determinants, and Monte Carlo generic rank for polynomial
//! matrices.

use crate::poly::QPoly;
use crate::rat::Rat;
use crate::ratfunc::QRatFunc;
use crate::vars::VarId;
use crate::CoreError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use std::collections::HashMap;

// ---------------------------------------------------------------------------
// MatQ: rational matrices
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatQ {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl MatQ {
    pub fn zero(rows: usize, cols: usize) -> Self {
        MatQ {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        MatQ {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::rat::rat(v)).collect())
                .collect(),
        )
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> MatQ {
        let mut out = MatQ::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &MatQ) -> MatQ {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = MatQ::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        let v = out[(r, c)].clone() + a.clone() * b.clone();
                        out[(r, c)] = v;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a.clone() * b.clone())
                    .fold(Rat::zero(), |s, t| s + t)
            })
            .collect()
    }

    /// Exact rank via integer fraction-free elimination (Bareiss) after
    /// clearing denominators per row.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let lcm = self
                    .row(r)
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                self.row(r)
                    .iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect();
        bareiss_rank(&mut m)
    }

    /// Reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut piv = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = Rat::one() / self[(r, c)].clone();
            for j in 0..self.cols {
                let v = self[(r, j)].clone() * inv.clone();
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in 0..self.cols {
                        let v = self[(i, j)].clone() - f.clone() * self[(r, j)].clone();
                        self[(i, j)] = v;
                    }
                }
            }
            piv.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        piv
    }

    /// Basis of the right kernel; size = cols - rank.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let piv = m.rref();
        let pivset: std::collections::HashSet<usize> = piv.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivset.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Rat::zero(); self.cols];
                v[fc] = Rat::one();
                for (ri, &pc) in piv.iter().enumerate() {
                    v[pc] = -m[(ri, fc)].clone();
                }
                v
            })
            .collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn inverse(&self) -> Result<MatQ, CoreError> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = MatQ::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Rat::one();
        }
        let piv = aug.rref();
        if piv.len() < n || piv.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(CoreError::Singular);
        }
        let mut out = MatQ::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                out[(r, c)] = aug[(r, n + c)].clone();
            }
        }
        Ok(out)
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det *= m[(c, c)].clone();
            let inv = Rat::one() / m[(c, c)].clone();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() * inv.clone();
                for j in c..n {
                    let v = m[(i, j)].clone() - f.clone() * m[(c, j)].clone();
                    m[(i, j)] = v;
                }
            }
        }
        det
    }
}

impl std::ops::Index<(usize, usize)> for MatQ {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for MatQ {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }
}

fn bareiss_rank(m: &mut Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = &t / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

// ---------------------------------------------------------------------------
// MatPoly: matrices of polynomials
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatPoly {
    pub rows: usize,
    pub cols: usize,
    data: Vec<QPoly>,
}

impl MatPoly {
    pub fn zero(rows: usize, cols: usize) -> Self {
        MatPoly {
            rows,
            cols,
            data: vec![QPoly::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<QPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        MatPoly {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = QPoly::one();
        }
        m
    }

    pub fn mul(&self, other: &MatPoly) -> MatPoly {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = MatPoly::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self[(r, k)].is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    if !other[(k, c)].is_zero() {
                        let v = &out[(r, c)] + &(&self[(r, k)] * &other[(k, c)]);
                        out[(r, c)] = v;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> MatPoly {
        let mut out = MatPoly::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn eval(&self, f: &impl Fn(VarId) -> Rat) -> MatQ {
        let mut out = MatQ::zero(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].eval(f);
            }
        }
        out
    }

    pub fn substitute(&self, map: &HashMap<VarId, QPoly>) -> MatPoly {
        let mut out = MatPoly::zero(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].substitute(map);
            }
        }
        out
    }

    /// Determinant by fraction-free elimination with exact division.
    pub fn det(&self) -> QPoly {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return QPoly::one();
        }
        let mut m: Vec<Vec<QPoly>> = (0..n).map(|r| (0..n).map(|c| self[(r, c)].clone()).collect()).collect();
        let mut prev = QPoly::one();
        let mut sign = false;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return QPoly::zero();
            };
            if p != c {
                m.swap(c, p);
                sign = !sign;
            }
            for i in c + 1..n {
                for j in c + 1..n {
                    let t = &(&m[c][c] * &m[i][j]) - &(&m[i][c] * &m[c][j]);
                    m[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
                }
                m[i][c] = QPoly::zero();
            }
            prev = m[c][c].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign {
            -&d
        } else {
            d
        }
    }

    /// Exact rank over the fraction field of the polynomial ring
    /// (deterministic, used as the symbolic fallback for small matrices).
    pub fn rank_over_fraction_field(&self) -> usize {
        let mut m: Vec<Vec<QPoly>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self[(r, c)].clone()).collect())
            .collect();
        let rows = self.rows;
        let cols = self.cols;
        let mut prev = QPoly::one();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            for i in r + 1..rows {
                for j in c + 1..cols {
                    let t = &(&m[r][c] * &m[i][j]) - &(&m[i][c] * &m[r][j]);
                    m[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
                }
                m[i][c] = QPoly::zero();
            }
            prev = m[r][c].clone();
            r += 1;
            if r == rows {
                break;
            }
        }
        r
    }

    /// All k-by-k minors in lexicographic (row subset, col subset) order.
    pub fn minors(&self, k: usize) -> MinorIter<'_> {
        assert!(k <= self.rows.min(self.cols), "k exceeds matrix size");
        MinorIter {
            mat: self,
            k,
            rows: Combos::new(self.rows, k),
            cur_rows: None,
            cols: Combos::new(self.cols, k),
        }
    }

    pub fn to_ratfunc(&self) -> MatRF {
        let mut out = MatRF::zero(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = QRatFunc::from_poly(self[(r, c)].clone());
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for MatPoly {
    type Output = QPoly;
    fn index(&self, (r, c): (usize, usize)) -> &QPoly {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for MatPoly {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut QPoly {
        &mut self.data[r * self.cols + c]
    }
}

/// Lexicographic k-subset generator.
pub struct Combos {
    n: usize,
    k: usize,
    cur: Option<Vec<usize>>,
}

impl Combos {
    pub fn new(n: usize, k: usize) -> Self {
        let cur = if k <= n { Some((0..k).collect()) } else { None };
        Combos { n, k, cur }
    }
}

impl Iterator for Combos {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.cur.clone()?;
        // advance
        let mut next = cur.clone();
        let mut i = self.k;
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            if next[i] + 1 <= self.n - (self.k - i) {
                next[i] += 1;
                for j in i + 1..self.k {
                    next[j] = next[j - 1] + 1;
                }
                self.cur = Some(next);
                break;
            }
        }
        Some(cur)
    }
}

pub struct MinorIter<'a> {
    mat: &'a MatPoly,
    k: usize,
    rows: Combos,
    cur_rows: Option<Vec<usize>>,
    cols: Combos,
}

impl Iterator for MinorIter<'_> {
    type Item = QPoly;
    fn next(&mut self) -> Option<QPoly> {
        loop {
            if self.cur_rows.is_none() {
                self.cur_rows = self.rows.next();
                self.cur_rows.as_ref()?;
                self.cols = Combos::new(self.mat.cols, self.k);
            }
            if let Some(cs) = self.cols.next() {
                let rs = self.cur_rows.as_ref().unwrap();
                let sub = MatPoly::from_rows(
                    rs.iter()
                        .map(|&r| cs.iter().map(|&c| self.mat[(r, c)].clone()).collect())
                        .collect(),
                );
                return Some(sub.det());
            }
            self.cur_rows = None;
        }
    }
}

/// Result of a Monte Carlo generic-rank computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericRank {
    pub rank: usize,
    pub samples: Vec<usize>,
    /// false when repeated samples disagreed (result is the maximum seen)
    pub agreed: bool,
}

/// Rank of `m` over the fraction field, estimated by evaluating all variables
/// at independent uniform integers in [-100, 100], repeated `k` times; the
/// maximum is returned and disagreement between samples is flagged.
pub fn generic_rank(m: &MatPoly, rng: &mut impl Rng, k: usize) -> GenericRank {
    let mut samples = Vec::with_capacity(k);
    // collect all variables first so each sample is one coherent point
    let mut vars: Vec<VarId> = Vec::new();
    for r in 0..m.rows {
        for c in 0..m.cols {
            vars.extend(m[(r, c)].vars());
        }
    }
    vars.sort_unstable();
    vars.dedup();
    for _ in 0..k.max(1) {
        let vals: HashMap<VarId, Rat> = vars
            .iter()
            .map(|&v| (v, crate::rat::rat(rng.gen_range(-100..=100))))
            .collect();
        let eval = m.eval(&|v| vals[&v].clone());
        samples.push(eval.rank());
    }
    let rank = *samples.iter().max().unwrap();
    let agreed = samples.iter().all(|&s| s == rank);
    GenericRank {
        rank,
        samples,
        agreed,
    }
}

// ---------------------------------------------------------------------------
// MatRF: matrices of rational functions
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatRF {
    pub rows: usize,
    pub cols: usize,
    data: Vec<QRatFunc>,
}

impl MatRF {
    pub fn zero(rows: usize, cols: usize) -> Self {
        MatRF {
            rows,
            cols,
            data: vec![QRatFunc::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = QRatFunc::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<QRatFunc>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        MatRF {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn transpose(&self) -> MatRF {
        let mut out = MatRF::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &MatRF) -> MatRF {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = MatRF::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self[(r, k)].is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    if !other[(k, c)].is_zero() {
                        let v = &out[(r, c)] + &(&self[(r, k)] * &other[(k, c)]);
                        out[(r, c)] = v;
                    }
                }
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// Row-reduce and return pivot columns (field elimination).
    pub fn rref(&mut self) -> Vec<usize> {
        let mut piv = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            // pick the smallest nonzero entry to slow coefficient growth
            let p = (r..self.rows)
                .filter(|&i| !self[(i, c)].is_zero())
                .min_by_key(|&i| self[(i, c)].size());
            let Some(p) = p else { continue };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("nonzero pivot");
            for j in 0..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in 0..self.cols {
                        let v = &self[(i, j)] - &(&f * &self[(r, j)]);
                        self[(i, j)] = v;
                    }
                }
            }
            piv.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        piv
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    pub fn inverse(&self) -> Result<MatRF, CoreError> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = MatRF::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = QRatFunc::one();
        }
        let piv = aug.rref();
        if piv.len() < n || piv.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(CoreError::Singular);
        }
        let mut out = MatRF::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                out[(r, c)] = aug[(r, n + c)].clone();
            }
        }
        Ok(out)
    }

    pub fn det(&self) -> QRatFunc {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return QRatFunc::one();
        }
        let mut m = self.clone();
        let mut det = QRatFunc::one();
        for c in 0..n {
            let p = (c..n)
                .filter(|&i| !m[(i, c)].is_zero())
                .min_by_key(|&i| m[(i, c)].size());
            let Some(p) = p else { return QRatFunc::zero() };
            if p != c {
                m.swap_rows(c, p);
                det = -&det;
            }
            det = &det * &m[(c, c)].clone();
            let inv = m[(c, c)].inv().unwrap();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    let v = &m[(i, j)] - &(&f * &m[(c, j)]);
                    m[(i, j)] = v;
                }
            }
        }
        det
    }
}

impl std::ops::Index<(usize, usize)> for MatRF {
    type Output = QRatFunc;
    fn index(&self, (r, c): (usize, usize)) -> &QRatFunc {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for MatRF {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut QRatFunc {
        &mut self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::vars::VarRegistry;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rank_basics() {
        assert_eq!(MatQ::identity(5).rank(), 5);
        assert_eq!(MatQ::zero(3, 4).rank(), 0);
        // B_r evaluated at (t1,t2,c3) = (1,2,0) is [[0,-1],[0,0]] with rank 1
        let b = MatQ::from_int_rows(&[vec![0, -1], vec![0, 0]]);
        assert_eq!(b.rank(), 1);
    }

    #[test]
    fn kernel_basics() {
        assert!(MatQ::identity(4).kernel_basis().is_empty());
        let m = MatQ::from_int_rows(&[vec![1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![rat(-1), rat(1)]);
        assert!(m
            .mul_vec(&k[0])
            .iter()
            .all(|x| x.is_zero()));
    }

    #[test]
    fn generic_rank_examples() {
        let reg = VarRegistry::new();
        let x = QPoly::var(reg.intern("x"));
        let y = QPoly::var(reg.intern("y"));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // column [x, x^2]: rank 1
        let m = MatPoly::from_rows(vec![vec![x.clone()], vec![&x * &x]]);
        assert_eq!(generic_rank(&m, &mut rng, 3).rank, 1);
        // diag(x, y): rank 2
        let m2 = MatPoly::from_rows(vec![
            vec![x.clone(), QPoly::zero()],
            vec![QPoly::zero(), y.clone()],
        ]);
        assert_eq!(generic_rank(&m2, &mut rng, 3).rank, 2);
        // symbolic fallback agrees
        assert_eq!(m.rank_over_fraction_field(), 1);
        assert_eq!(m2.rank_over_fraction_field(), 2);
    }

    #[test]
    fn minors_examples() {
        let reg = VarRegistry::new();
        let a = QPoly::var(reg.intern("a"));
        let b = QPoly::var(reg.intern("b"));
        let c = QPoly::var(reg.intern("c"));
        let d = QPoly::var(reg.intern("d"));
        let m = MatPoly::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]);
        let m2: Vec<QPoly> = m.minors(2).collect();
        assert_eq!(m2.len(), 1);
        assert_eq!(m2[0], &(&a * &d) - &(&b * &c));
        let m1: Vec<QPoly> = m.minors(1).collect();
        assert_eq!(m1, vec![a, b, c, d]);
        // count = C(rows,k) * C(cols,k)
        let m3 = MatPoly::zero(4, 3);
        assert_eq!(m3.minors(2).count(), 6 * 3);
    }

    #[test]
    fn matrf_inverse_round_trip() {
        let reg = VarRegistry::new();
        let t = QRatFunc::from_poly(QPoly::var(reg.intern("t1")));
        let one = QRatFunc::one();
        let m = MatRF::from_rows(vec![
            vec![t.clone(), one.clone()],
            vec![one.clone(), t.clone()],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), MatRF::identity(2));
    }
}
