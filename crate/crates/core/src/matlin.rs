// SPDX-License-Identifier: Apache-2.0

//! Dense exact linear algebra over a [`Field`].
//!
//! Everything here is exact: equality tests are field equality, never a
//! tolerance. Matrices are row-major.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ffield::{Field, Poly};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Copy + Eq + Default> Matrix<E> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![E::default(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<E>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows"));
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> E {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[E] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn map<T: Copy + Eq + Default>(&self, f: impl Fn(E) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&e| f(e)).collect(),
        }
    }

    /// Copy of the `r × c` sub-matrix with top-left corner `(i0, j0)`.
    pub fn block(&self, i0: usize, j0: usize, r: usize, c: usize) -> Self {
        Self::from_fn(r, c, |i, j| self.get(i0 + i, j0 + j))
    }

    pub fn set_block(&mut self, i0: usize, j0: usize, m: &Self) {
        for i in 0..m.rows {
            for j in 0..m.cols {
                self.set(i0 + i, j0 + j, m.get(i, j));
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }
}

impl<E: Copy + Eq + Ord + Default + core::fmt::Debug> Matrix<E> {
    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { f.one() } else { f.zero() })
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|&e| f.is_zero(e))
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: E) -> Self {
        self.map(|a| f.mul(a, c))
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimensions");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                let orow = other.row(k);
                let base = i * out.cols;
                for (j, &b) in orow.iter().enumerate() {
                    out.data[base + j] = f.add(out.data[base + j], f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// Square-and-multiply; `pow(0)` is the identity.
    pub fn pow<F: Field<Elem = E>>(&self, f: &F, e: &BigUint) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(f, self.rows);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(f, &acc);
            if e.bit(i) {
                acc = acc.mul(f, self);
            }
        }
        acc
    }

    pub fn pow_u64<F: Field<Elem = E>>(&self, f: &F, e: u64) -> Self {
        self.pow(f, &BigUint::from(e))
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref<F: Field<Elem = E>>(&self, f: &F) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                m.set(r, j, f.mul(m.get(r, j), inv));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if f.is_zero(factor) {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank<F: Field<Elem = E>>(&self, f: &F) -> usize {
        self.rref(f).1.len()
    }

    /// Rank and a kernel basis, one vector per non-pivot column in increasing
    /// column order, each with a 1 at its free column.
    pub fn rank_kernel<F: Field<Elem = E>>(&self, f: &F) -> (usize, Vec<Vec<E>>) {
        let (r, pivots) = self.rref(f);
        let mut kernel = Vec::new();
        let mut pi = 0;
        for free in 0..self.cols {
            if pi < pivots.len() && pivots[pi] == free {
                pi += 1;
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, free));
            }
            kernel.push(v);
        }
        (pivots.len(), kernel)
    }

    pub fn determinant<F: Field<Elem = E>>(&self, f: &F) -> E {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = m.rows;
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !f.is_zero(m.get(i, c))) else {
                return f.zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = f.neg(det);
            }
            let piv = m.get(c, c);
            det = f.mul(det, piv);
            let inv = f.inv(piv).expect("pivot is nonzero");
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), inv);
                if f.is_zero(factor) {
                    continue;
                }
                for j in c..n {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Result<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Self::identity(f, n));
        let (r, pivots) = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        Ok(r.block(0, n, n, n))
    }

    /// Solves `self · X = rhs` for `self` of full column rank. `None` when
    /// the system is inconsistent.
    pub fn solve_full_column_rank<F: Field<Elem = E>>(&self, f: &F, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows);
        let r = self.cols;
        let mut aug = Self::zeros(self.rows, r + rhs.cols);
        aug.set_block(0, 0, self);
        aug.set_block(0, r, rhs);
        let (red, pivots) = aug.rref(f);
        debug_assert!(pivots.iter().take(r).copied().eq(0..r), "full column rank");
        if pivots.len() > r {
            return None;
        }
        Some(red.block(0, r, r, rhs.cols))
    }

    /// Characteristic polynomial `det(xI − self)`, via reduction to upper
    /// Hessenberg form by similarity transforms.
    pub fn char_poly<F: Field<Elem = E>>(&self, f: &F) -> Poly<E> {
        assert!(self.is_square());
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !f.is_zero(h.get(i, m - 1))) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                h.swap_cols(i, m);
            }
            let t_inv = f.inv(h.get(m, m - 1)).expect("pivot is nonzero");
            for i in m + 1..n {
                let u = f.mul(h.get(i, m - 1), t_inv);
                if f.is_zero(u) {
                    continue;
                }
                for j in 0..n {
                    let v = f.sub(h.get(i, j), f.mul(u, h.get(m, j)));
                    h.set(i, j, v);
                }
                for j in 0..n {
                    let v = f.add(h.get(j, m), f.mul(u, h.get(j, i)));
                    h.set(j, m, v);
                }
            }
        }
        // p_k = char poly of the leading k×k block
        let x = Poly::x(f);
        let mut p: Vec<Poly<E>> = vec![Poly::one(f)];
        for m in 1..=n {
            let lin = x.sub(f, &Poly::constant(h.get(m - 1, m - 1)));
            let mut pm = lin.mul(f, &p[m - 1]);
            let mut t = f.one();
            for i in 1..m {
                t = f.mul(t, h.get(m - i, m - i - 1));
                let c = f.mul(t, h.get(m - i - 1, m - 1));
                pm = pm.sub(f, &p[m - i - 1].scale(f, c));
            }
            p.push(pm);
        }
        p.pop().expect("n + 1 entries")
    }

    /// Evaluates a polynomial at this matrix (Horner).
    pub fn eval_poly<F: Field<Elem = E>>(&self, f: &F, p: &Poly<E>) -> Self {
        let n = self.rows;
        let id = Self::identity(f, n);
        p.coeffs()
            .iter()
            .rev()
            .fold(Self::zeros(n, n), |acc, &c| acc.mul(f, self).add(f, &id.scale(f, c)))
    }

    /// Eigenvector for `lambda`: the first reduced-echelon kernel vector of
    /// `self − λI`, scaled so its first nonzero entry is 1.
    pub fn eigenvector<F: Field<Elem = E>>(&self, f: &F, lambda: E) -> Result<Vec<E>> {
        let n = self.rows;
        let shifted = self.sub(f, &Self::identity(f, n).scale(f, lambda));
        let (_, kernel) = shifted.rank_kernel(f);
        let v = kernel.into_iter().next().ok_or(Error::NotAnEigenvalue)?;
        let lead = v.iter().copied().find(|&c| !f.is_zero(c)).expect("kernel vector is nonzero");
        let inv = f.inv(lead)?;
        Ok(v.into_iter().map(|c| f.mul(c, inv)).collect())
    }
}

/// Fitting decomposition of a square matrix `B`: the index `k` at which the
/// ranks of `B^k` stabilise, and `B` restricted to the image of `B^k`, where
/// it acts invertibly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FittingSplit<E> {
    pub index: usize,
    /// `n × r`, columns spanning `im(B^k)`.
    pub basis: Matrix<E>,
    /// `r × r` matrix of `B` on that basis.
    pub core: Matrix<E>,
}

impl<E> FittingSplit<E> {
    pub fn core_dim(&self) -> usize {
        self.core.rows
    }

    pub fn is_nilpotent(&self) -> bool {
        self.core.rows == 0
    }
}

pub fn fitting_split<F: Field>(f: &F, b: &Matrix<F::Elem>) -> FittingSplit<F::Elem> {
    assert!(b.is_square());
    let n = b.rows();
    let mut power = Matrix::identity(f, n);
    let mut rank = n;
    let mut k = 0;
    loop {
        let next = power.mul(f, b);
        let next_rank = next.rank(f);
        if next_rank == rank {
            break;
        }
        power = next;
        rank = next_rank;
        k += 1;
    }
    let (_, pivots) = power.rref(f);
    let basis = power.select_columns(&pivots);
    let image = b.mul(f, &basis);
    let core = basis
        .solve_full_column_rank(f, &image)
        .expect("image of B^k is B-invariant");
    FittingSplit {
        index: k,
        basis,
        core,
    }
}

/// Matrix of `t` on the core subspace of `split`; errors when `t` does not
/// map that subspace into itself.
pub fn restrict<F: Field>(
    f: &F,
    t: &Matrix<F::Elem>,
    split: &FittingSplit<F::Elem>,
) -> Result<Matrix<F::Elem>> {
    if t.rows() != split.basis.rows() || !t.is_square() {
        return Err(Error::DimensionMismatch("restrict: matrix size differs from split"));
    }
    let image = t.mul(f, &split.basis);
    split
        .basis
        .solve_full_column_rank(f, &image)
        .ok_or(Error::SubspaceNotInvariant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{FqField, Gf7, PolyF7, F7};
    use proptest::prelude::*;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type M = Matrix<F7>;

    fn m(rows: &[&[i64]]) -> M {
        let r: Vec<Vec<F7>> = rows.iter().map(|r| r.iter().map(|&v| F7::from_i64(v)).collect()).collect();
        M::from_rows(&r).unwrap()
    }

    fn random(n: usize, rng: &mut ChaCha8Rng) -> M {
        M::from_fn(n, n, |_, _| Gf7.random(rng))
    }

    fn companion(p: &PolyF7) -> M {
        let n = p.degree().unwrap();
        M::from_fn(n, n, |i, j| {
            if j == n - 1 {
                -p.coeff(i)
            } else if i == j + 1 {
                F7::ONE
            } else {
                F7::ZERO
            }
        })
    }

    #[test]
    fn rank_kernel_examples() {
        let (r, k) = M::identity(&Gf7, 5).rank_kernel(&Gf7);
        assert_eq!((r, k.len()), (5, 0));
        let (r, k) = M::zeros(3, 3).rank_kernel(&Gf7);
        assert_eq!((r, k.len()), (0, 3));
        let (r, k) = m(&[&[0, 1], &[0, 0]]).rank_kernel(&Gf7);
        assert_eq!(r, 1);
        assert_eq!(k, vec![vec![F7::ONE, F7::ZERO]]);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for n in 1..10 {
            // low-rank product
            let a = M::from_fn(n, n / 2 + 1, |_, _| Gf7.random(&mut rng));
            let b = M::from_fn(n / 2 + 1, n, |_, _| Gf7.random(&mut rng));
            let c = a.mul(&Gf7, &b);
            let (r, k) = c.rank_kernel(&Gf7);
            assert_eq!(r + k.len(), n);
            for v in &k {
                assert!(c.mul_vec(&Gf7, v).iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(M::identity(&Gf7, 2).char_poly(&Gf7), PolyF7::from_u8s(&[1, 5, 1]));
        assert_eq!(m(&[&[2, 0], &[0, 3]]).char_poly(&Gf7), PolyF7::from_u8s(&[6, 2, 1]));
        let g = PolyF7::from_u8s(&[1, 1, 0, 1]);
        assert_eq!(companion(&g).char_poly(&Gf7), g);
        assert_eq!(M::zeros(0, 0).char_poly(&Gf7), PolyF7::one(&Gf7));
    }

    /// det(λI − B) over F49 at 19 distinct points determines a polynomial of
    /// degree ≤ 18, independently of the Hessenberg route.
    #[test]
    fn char_poly_matches_determinant_evaluation() {
        let f49 = FqField::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for n in [1usize, 2, 5, 9, 18] {
            let b = random(n, &mut rng);
            let p = b.char_poly(&Gf7).embed(&f49);
            let lifted = b.map(|x| f49.embed(x));
            let points: Vec<_> = (0..49u64)
                .map(|k| f49.from_coeffs(&[F7::new(k % 7), F7::new(k / 7)]).unwrap())
                .take(n + 1)
                .collect();
            for &lam in &points {
                let shifted = Matrix::identity(&f49, n).scale(&f49, lam).sub(&f49, &lifted);
                assert_eq!(shifted.determinant(&f49), p.eval(&f49, lam));
            }
        }
    }

    #[test]
    fn cayley_hamilton_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for i in 0..100 {
            let n = 1 + i % 18;
            let b = random(n, &mut rng);
            let p = b.char_poly(&Gf7);
            assert_eq!(p.degree(), Some(n));
            assert!(p.is_monic(&Gf7));
            assert!(b.eval_poly(&Gf7, &p).is_zero(&Gf7), "n = {n}");
        }
    }

    #[test]
    fn eigenvector_examples() {
        let v = M::identity(&Gf7, 3).eigenvector(&Gf7, F7::ONE).unwrap();
        assert_eq!(v, vec![F7::ONE, F7::ZERO, F7::ZERO]);
        let v = m(&[&[2, 0], &[0, 3]]).eigenvector(&Gf7, F7::new(3)).unwrap();
        assert_eq!(v, vec![F7::ZERO, F7::ONE]);
        assert_eq!(
            m(&[&[2, 0], &[0, 3]]).eigenvector(&Gf7, F7::new(4)),
            Err(Error::NotAnEigenvalue)
        );
    }

    #[test]
    fn eigenvector_in_extension() {
        // x^2 + 1 is irreducible over F7 and is the canonical degree-2 modulus
        let g = PolyF7::from_u8s(&[1, 0, 1]);
        let f49 = FqField::new(2).unwrap();
        let b = companion(&g).map(|x| f49.embed(x));
        for lam in g.embed(&f49).roots(&f49, 0) {
            let v = b.eigenvector(&f49, lam).unwrap();
            let bv = b.mul_vec(&f49, &v);
            let lv: Vec<_> = v.iter().map(|&c| f49.mul(c, lam)).collect();
            assert_eq!(bv, lv);
        }
    }

    #[test]
    fn inverse_and_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in 1..8 {
            let b = random(n, &mut rng);
            match b.inverse(&Gf7) {
                Ok(inv) => {
                    assert!(!b.determinant(&Gf7).is_zero());
                    assert_eq!(b.mul(&Gf7, &inv), M::identity(&Gf7, n));
                }
                Err(_) => assert!(b.determinant(&Gf7).is_zero()),
            }
        }
    }

    #[test]
    fn fitting_examples() {
        let inv = m(&[&[1, 2], &[3, 4]]);
        let s = fitting_split(&Gf7, &inv);
        assert_eq!(s.index, 0);
        assert_eq!(s.core, inv);

        let nil = m(&[&[0, 1], &[0, 0]]);
        let s = fitting_split(&Gf7, &nil);
        assert_eq!(s.index, 2);
        assert_eq!(s.core_dim(), 0);
        assert!(s.is_nilpotent());

        let mixed = m(&[&[1, 2, 0, 0], &[3, 4, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]);
        let s = fitting_split(&Gf7, &mixed);
        assert_eq!(s.index, 2);
        assert_eq!(s.core_dim(), 2);
        assert!(!s.core.determinant(&Gf7).is_zero());
    }

    #[test]
    fn restrict_examples() {
        let b = m(&[&[1, 2, 0, 5], &[3, 4, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]);
        let s = fitting_split(&Gf7, &b);
        assert_eq!(restrict(&Gf7, &b, &s).unwrap(), s.core);
        assert_eq!(
            restrict(&Gf7, &M::identity(&Gf7, 4), &s).unwrap(),
            M::identity(&Gf7, s.core_dim())
        );
        let b2 = b.mul(&Gf7, &b);
        assert_eq!(restrict(&Gf7, &b2, &s).unwrap(), s.core.mul(&Gf7, &s.core));
        // a matrix that moves the core off itself
        let swap = m(&[&[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1]]);
        assert_eq!(restrict(&Gf7, &swap, &s), Err(Error::SubspaceNotInvariant));
    }

    fn singularish(n: usize, rng: &mut ChaCha8Rng) -> M {
        // a random matrix with a few zeroed columns, conjugated to spread them out
        let mut b = random(n, rng);
        for j in 0..n / 3 {
            for i in 0..n {
                b.set(i, j, F7::ZERO);
            }
        }
        b.set(0, n - 1, F7::ZERO);
        b
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn fitting_invariants(seed in any::<u64>(), n in 1usize..12, e in 0u64..200) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let b = singularish(n, &mut rng);
            let s = fitting_split(&Gf7, &b);
            prop_assert!(s.index <= n);
            prop_assert!(!s.core.determinant(&Gf7).is_zero() || s.is_nilpotent());
            let rk = b.pow_u64(&Gf7, s.index as u64).rank(&Gf7);
            prop_assert_eq!(rk, s.core_dim());
            for extra in 1..4u64 {
                prop_assert_eq!(b.pow_u64(&Gf7, s.index as u64 + extra).rank(&Gf7), rk);
            }
            let be = b.pow_u64(&Gf7, e);
            prop_assert_eq!(restrict(&Gf7, &be, &s).unwrap(), s.core.pow_u64(&Gf7, e));
        }
    }

    #[test]
    fn pow_matches_repeated_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let b = random(6, &mut rng);
        let mut acc = M::identity(&Gf7, 6);
        for e in 0..20u64 {
            assert_eq!(b.pow_u64(&Gf7, e), acc);
            acc = acc.mul(&Gf7, &b);
        }
    }
}
