//! Dense exact linear algebra: rank, right kernels, span membership.
//!
//! All routines reduce to a reduced row echelon form computed with the
//! deterministic rule "first nonzero entry in column order". Over the
//! rationals the reduction is fraction-free on integer rows and only divides
//! once at the end; over prime fields it is ordinary Gauss-Jordan.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};

/// Row-major dense matrix over a field.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has length {} but matrix has {cols} columns",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: n,
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: &F, len: usize, columns: &[Vec<F::Elem>]) -> Result<Self> {
        let mut m = Self::zeros(field, len, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != len {
                return Err(Error::Shape(format!(
                    "column {j} has length {} but expected {len}",
                    col.len()
                )));
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn from_ints(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_int(x)).collect())
            .collect();
        Self::from_rows(field, cols, data).expect("rectangular literal")
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: F::Elem) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F::Elem>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    fn check_field(&self, other: &F) -> Result<()> {
        if self.field != *other {
            return Err(Error::FieldMismatch(
                self.field.spec().to_string(),
                other.spec().to_string(),
            ));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        self.check_field(&other.field)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), &f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect())
    }

    pub fn add(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        self.check_field(&other.field)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape("matrix sum of different shapes".into()));
        }
        let f = &self.field;
        Ok(Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f.add(a, b))
                .collect(),
        })
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        self.check_field(&other.field)?;
        if self.cols != other.cols {
            return Err(Error::Shape("vstack of different widths".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reorders columns: column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Matrix<F> {
        let mut out = Self::zeros(&self.field, self.rows, perm.len());
        for i in 0..self.rows {
            for (j, &src) in perm.iter().enumerate() {
                out.set(i, j, self.get(i, src).clone());
            }
        }
        out
    }

    pub fn map_field<G: Field>(&self, to: &G) -> Result<Matrix<G>> {
        let data = self
            .data
            .iter()
            .map(|x| crate::field::transfer(&self.field, to, x))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            field: to.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

/// Reduced row echelon form of a matrix: nonzero rows only, each with a unit
/// pivot that is the only nonzero entry of its column.
#[derive(Debug, Clone, PartialEq)]
pub struct Echelon<F: Field> {
    pub rref: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Columns of the right null space, one per free column, in column order.
    pub fn kernel_columns(&self) -> Vec<Vec<F::Elem>> {
        let f = self.rref.field();
        let n = self.rref.cols();
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..n)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); n];
                v[free] = f.one();
                for (r, &p) in self.pivots.iter().enumerate() {
                    v[p] = f.neg(self.rref.get(r, free));
                }
                v
            })
            .collect()
    }
}

/// Ordinary Gauss-Jordan elimination to reduced row echelon form.
pub fn gauss_jordan<F: Field>(m: &Matrix<F>) -> Echelon<F> {
    let f = m.field().clone();
    let cols = m.cols();
    let mut rows: Vec<Vec<F::Elem>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]).expect("nonzero pivot");
        for x in rows[r].iter_mut().skip(c) {
            *x = f.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for j in c..cols {
                if !f.is_zero(&pivot_row[j]) {
                    row[j] = f.sub(&row[j], &f.mul(&factor, &pivot_row[j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon {
        rref: Matrix::from_rows(&f, cols, rows).expect("rectangular"),
        pivots,
    }
}

/// Fraction-free Gauss-Jordan elimination over the rationals.
///
/// Each row is first scaled to integers. The integer elimination keeps every
/// entry equal to a minor of the scaled matrix, so the division by the
/// previous pivot is exact. Rationals appear only in the final normalisation.
pub fn fraction_free_rref(m: &Matrix<Rationals>) -> Echelon<Rationals> {
    let cols = m.cols();
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|i| integer_row(m.row(i)))
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        let piv = pivot_row[c].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let a = row[c].clone();
            for j in 0..cols {
                let t = &piv * &row[j] - &a * &pivot_row[j];
                let (q, rem) = t.div_rem(&prev);
                debug_assert!(rem.is_zero(), "fraction-free division must be exact");
                row[j] = q;
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    let out: Vec<Vec<BigRational>> = rows
        .into_iter()
        .zip(&pivots)
        .map(|(row, &c)| {
            let d = row[c].clone();
            row.into_iter()
                .map(|x| BigRational::new(x, d.clone()))
                .collect()
        })
        .collect();
    Echelon {
        rref: Matrix::from_rows(&Rationals, cols, out).expect("rectangular"),
        pivots,
    }
}

fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

pub fn echelon<F: Field>(m: &Matrix<F>) -> Echelon<F> {
    m.field().eliminate(m)
}

/// Exact rank over the matrix's field.
pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    echelon(m).rank()
}

/// Matrix whose columns form a basis of the right null space of `m`.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let e = echelon(m);
    let cols = e.kernel_columns();
    assert_eq!(
        m.cols(),
        e.rank() + cols.len(),
        "rank-nullity violated in kernel computation"
    );
    Matrix::from_columns(m.field(), m.cols(), &cols).expect("kernel columns have matrix width")
}

/// Coefficients `c` with `basis * c = v`, or `None` when `v` is outside the
/// column span. Free coordinates are set to zero.
pub fn in_span<F: Field>(basis: &Matrix<F>, v: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
    if v.len() != basis.rows() {
        return Err(Error::Shape(format!(
            "vector of length {} against basis columns of length {}",
            v.len(),
            basis.rows()
        )));
    }
    let f = basis.field();
    let k = basis.cols();
    let mut aug = Matrix::zeros(f, basis.rows(), k + 1);
    for (i, x) in v.iter().enumerate() {
        for j in 0..k {
            aug.set(i, j, basis.get(i, j).clone());
        }
        aug.set(i, k, x.clone());
    }
    let e = echelon(&aug);
    if e.pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut coeffs = vec![f.zero(); k];
    for (r, &p) in e.pivots.iter().enumerate() {
        coeffs[p] = e.rref.get(r, k).clone();
    }
    Ok(Some(coeffs))
}

/// Subspace membership for a whole family of vectors: `true` iff every column
/// of `vectors` lies in the column span of `basis`.
pub fn contains_all<F: Field>(basis: &Matrix<F>, vectors: &Matrix<F>) -> Result<bool> {
    if basis.field() != vectors.field() {
        return Err(Error::FieldMismatch(
            basis.field().spec().to_string(),
            vectors.field().spec().to_string(),
        ));
    }
    for v in vectors.columns() {
        if in_span(basis, &v)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use proptest::prelude::*;

    fn q() -> Rationals {
        Rationals
    }

    #[test]
    fn rank_examples() {
        let f = q();
        assert_eq!(rank(&Matrix::identity(&f, 2)), 2);
        assert_eq!(rank(&Matrix::zeros(&f, 1, 3)), 0);
        assert_eq!(rank(&Matrix::from_ints(&f, &[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        let f = q();
        assert_eq!(kernel_basis(&Matrix::zeros(&f, 1, 3)).cols(), 3);
        assert_eq!(kernel_basis(&Matrix::identity(&f, 2)).cols(), 0);
        let m = Matrix::from_ints(&f, &[&[1, 1, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).unwrap().is_zero());
    }

    #[test]
    fn span_examples() {
        let f = q();
        let std = Matrix::identity(&f, 2);
        let c = in_span(&std, &[f.from_int(1), f.from_int(1)]).unwrap();
        assert_eq!(c, Some(vec![f.from_int(1), f.from_int(1)]));

        let e2 = Matrix::from_columns(&f, 2, &[vec![f.from_int(0), f.from_int(1)]]).unwrap();
        assert_eq!(in_span(&e2, &[f.from_int(1), f.from_int(0)]).unwrap(), None);

        let b = Matrix::from_ints(&f, &[&[2, 1], &[-1, 0], &[5, 1]]);
        let v: Vec<_> = b
            .column(0)
            .iter()
            .map(|x| f.mul(x, &f.from_int(3)))
            .collect();
        assert_eq!(
            in_span(&b, &v).unwrap(),
            Some(vec![f.from_int(3), f.from_int(0)])
        );
        assert!(matches!(
            in_span(&b, &[f.from_int(1)]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn field_mismatch_is_reported() {
        let a = Matrix::identity(&PrimeField::new(7).unwrap(), 2);
        let b = Matrix::identity(&PrimeField::new(11).unwrap(), 2);
        assert!(matches!(a.mul(&b), Err(Error::FieldMismatch(_, _))));
        assert!(matches!(
            contains_all(&a, &b),
            Err(Error::FieldMismatch(_, _))
        ));
    }

    #[test]
    fn fraction_free_matches_plain_gauss_jordan() {
        let f = q();
        let m = Matrix::from_ints(
            &f,
            &[
                &[0, 2, 4, 1, 3],
                &[0, 1, 2, 0, 1],
                &[3, 0, 1, 1, 0],
                &[3, 2, 5, 2, 3],
                &[6, 1, 4, 2, 1],
            ],
        );
        assert_eq!(fraction_free_rref(&m), gauss_jordan(&m));
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..7, 1usize..7)
            .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..5, c), r))
    }

    fn to_matrix<F: Field>(f: &F, rows: &[Vec<i64>]) -> Matrix<F> {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        Matrix::from_ints(f, &refs)
    }

    /// Low-rank inputs: product of two thin random factors.
    fn low_rank() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..6, 1usize..4).prop_flat_map(|(r, c, k)| {
            (
                prop::collection::vec(prop::collection::vec(-3i64..4, k), r),
                prop::collection::vec(prop::collection::vec(-3i64..4, c), k),
            )
                .prop_map(|(a, b)| {
                    a.iter()
                        .map(|ar| {
                            (0..b[0].len())
                                .map(|j| ar.iter().zip(&b).map(|(x, br)| x * br[j]).sum())
                                .collect()
                        })
                        .collect()
                })
        })
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(rows in small_matrix()) {
            let m = to_matrix(&q(), &rows);
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
            let p = to_matrix(&PrimeField::new(65537).unwrap(), &rows);
            prop_assert_eq!(rank(&p), rank(&p.transpose()));
        }

        #[test]
        fn kernel_is_annihilated(rows in low_rank()) {
            let m = to_matrix(&q(), &rows);
            let k = kernel_basis(&m);
            prop_assert_eq!(k.cols() + rank(&m), m.cols());
            prop_assert!(m.mul(&k).unwrap().is_zero());
            prop_assert_eq!(fraction_free_rref(&m), gauss_jordan(&m));
        }

        // Rank is at most 3 and entries are at most 27, so every relevant minor
        // is below the Hadamard bound (27 * sqrt 3)^3 < p.
        #[test]
        fn rationals_agree_with_large_prime(rows in low_rank()) {
            let fp = PrimeField::new(4294967291).unwrap();
            let mq = to_matrix(&q(), &rows);
            let mp = to_matrix(&fp, &rows);
            prop_assert_eq!(rank(&mq), rank(&mp));
            let kq = kernel_basis(&mq).map_field(&fp).unwrap();
            prop_assert_eq!(kq, kernel_basis(&mp));
        }

        #[test]
        fn span_membership_recovers_combinations(rows in small_matrix(), coeffs in prop::collection::vec(-5i64..6, 6)) {
            let f = q();
            let b = to_matrix(&f, &rows);
            let c: Vec<_> = (0..b.cols()).map(|j| f.from_int(coeffs[j])).collect();
            let v = b.mul_vec(&c).unwrap();
            let found = in_span(&b, &v).unwrap().expect("combination lies in span");
            prop_assert_eq!(b.mul_vec(&found).unwrap(), v);
        }
    }
}
