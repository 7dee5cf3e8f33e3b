//! Homogeneous polynomials and graded slices of the polynomial ring.
//!
//! The degree-`k` slice of `k[x_0, ..., x_N]` is identified with coordinate
//! vectors in the monomial basis returned by [`monomial_basis`], ordered
//! graded-lexicographically with `x_0 < x_1 < ... < x_N`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{transfer, Field};
use crate::linalg::{self, Matrix};

/// Exponent vector of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n_vars: usize) -> Self {
        Monomial(vec![0; n_vars])
    }

    pub fn var(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    /// Total degree first, then lexicographic from the largest variable down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Dimension of the degree-`k` slice in `n_vars` variables.
pub fn slice_dim(n_vars: usize, k: usize) -> usize {
    binomial(k + n_vars - 1, n_vars - 1)
}

/// All degree-`k` monomials in ascending graded-lex order.
pub fn monomial_basis(n_vars: usize, k: usize) -> Vec<Monomial> {
    assert!(n_vars >= 1, "need at least one variable");
    let mut out = Vec::with_capacity(slice_dim(n_vars, k));
    let mut current = vec![0u32; n_vars];
    fill(&mut out, &mut current, 0, k as u32);
    out.sort();
    out
}

fn fill(out: &mut Vec<Monomial>, cur: &mut [u32], i: usize, left: u32) {
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(Monomial(cur.to_vec()));
        return;
    }
    for e in 0..=left {
        cur[i] = e;
        fill(out, cur, i + 1, left - e);
    }
    cur[i] = 0;
}

/// Monomial basis of one slice together with its inverse index.
#[derive(Debug, Clone)]
pub struct SliceBasis {
    pub n_vars: usize,
    pub degree: usize,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl SliceBasis {
    pub fn new(n_vars: usize, degree: usize) -> Self {
        let monomials = monomial_basis(n_vars, degree);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        SliceBasis {
            n_vars,
            degree,
            monomials,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// A homogeneous form. The zero form keeps a nominal degree.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousPoly<F: Field> {
    field: F,
    n_vars: usize,
    degree: usize,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> HomogeneousPoly<F> {
    pub fn zero(field: &F, n_vars: usize, degree: usize) -> Self {
        HomogeneousPoly {
            field: field.clone(),
            n_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &F, n_vars: usize, c: F::Elem) -> Self {
        Self::from_terms(field, n_vars, 0, vec![(Monomial::one(n_vars), c)])
            .expect("constant is homogeneous")
    }

    pub fn one(field: &F, n_vars: usize) -> Self {
        Self::constant(field, n_vars, field.one())
    }

    pub fn var(field: &F, n_vars: usize, i: usize) -> Self {
        Self::monomial(field, Monomial::var(n_vars, i))
    }

    pub fn monomial(field: &F, m: Monomial) -> Self {
        let (n, d) = (m.n_vars(), m.degree());
        Self::from_terms(field, n, d, vec![(m, field.one())]).expect("monomial is homogeneous")
    }

    /// Collects terms, summing repeats and dropping zeros.
    pub fn from_terms(
        field: &F,
        n_vars: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Monomial, F::Elem)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (m, c) in terms {
            if m.n_vars() != n_vars {
                return Err(Error::Shape(format!(
                    "monomial {m} has {} variables, expected {n_vars}",
                    m.n_vars()
                )));
            }
            if m.degree() != degree {
                return Err(Error::Degree(format!(
                    "term {m} has degree {} but the form is declared of degree {degree}",
                    m.degree()
                )));
            }
            let e = map.entry(m).or_insert_with(|| field.zero());
            *e = field.add(e, &c);
        }
        map.retain(|_, c| !field.is_zero(c));
        Ok(HomogeneousPoly {
            field: field.clone(),
            n_vars,
            degree,
            terms: map,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn n_vars(&self) -> usize {
        self.n_vars
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn terms(&self) -> &BTreeMap<Monomial, F::Elem> {
        &self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.spec().to_string(),
                other.field.spec().to_string(),
            ));
        }
        if self.n_vars != other.n_vars {
            return Err(Error::Shape(format!(
                "forms in {} and {} variables",
                self.n_vars, other.n_vars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::Degree(format!(
                "cannot add forms of degree {} and {}",
                self.degree, other.degree
            )));
        }
        let degree = if self.is_zero() {
            other.degree
        } else {
            self.degree
        };
        let terms = self
            .terms
            .iter()
            .chain(other.terms.iter())
            .map(|(m, c)| (m.clone(), c.clone()));
        Self::from_terms(&self.field, self.n_vars, degree, terms)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&self.field.neg(&self.field.one())))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        let terms = self.terms.iter().map(|(m, x)| (m.clone(), f.mul(x, c)));
        Self::from_terms(f, self.n_vars, self.degree, terms).expect("scaling keeps homogeneity")
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let f = &self.field;
        let mut map: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = map.entry(ma.mul(mb)).or_insert_with(|| f.zero());
                *e = f.add(e, &f.mul(ca, cb));
            }
        }
        map.retain(|_, c| !f.is_zero(c));
        Ok(HomogeneousPoly {
            field: f.clone(),
            n_vars: self.n_vars,
            degree: self.degree + other.degree,
            terms: map,
        })
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(&self.field, self.n_vars);
        for _ in 0..e {
            acc = acc.multiply(self).expect("same ring");
        }
        acc
    }

    /// Formal partial derivative in `x_var`; the derivative of a constant is
    /// the zero form of nominal degree 0.
    pub fn partial(&self, var: usize) -> Self {
        assert!(var < self.n_vars, "variable index out of range");
        let f = &self.field;
        let degree = self.degree.saturating_sub(1);
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.0[var];
            (e > 0).then(|| {
                let mut ex = m.0.clone();
                ex[var] -= 1;
                (Monomial(ex), f.mul(c, &f.from_int(e as i64)))
            })
        });
        Self::from_terms(f, self.n_vars, degree, terms).expect("derivative is homogeneous")
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.n_vars).map(|j| self.partial(j)).collect()
    }

    /// Applies the vector field `sum_j coeffs[j] * d/dx_j`, coefficients being
    /// forms of a common degree.
    pub fn apply_vector_field(&self, coeffs: &[HomogeneousPoly<F>]) -> Result<Self> {
        if coeffs.len() != self.n_vars {
            return Err(Error::Shape(
                "vector field has wrong number of components".into(),
            ));
        }
        let shift = coeffs.first().map_or(0, |c| c.degree);
        let degree = (self.degree + shift).saturating_sub(1);
        let mut acc = Self::zero(&self.field, self.n_vars, degree);
        for (j, a) in coeffs.iter().enumerate() {
            let term = a.multiply(&self.partial(j))?;
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.n_vars {
            return Err(Error::Shape(format!(
                "point has {} coordinates, expected {}",
                point.len(),
                self.n_vars
            )));
        }
        let f = &self.field;
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = f.mul(&t, x);
                }
            }
            acc = f.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Substitutes `x_i -> images[i]` (forms of a common degree `e`); the
    /// result has degree `e * deg`.
    pub fn substitute(&self, images: &[HomogeneousPoly<F>]) -> Result<Self> {
        if images.len() != self.n_vars {
            return Err(Error::Shape("substitution has wrong arity".into()));
        }
        let e = images.first().map_or(0, |p| p.degree);
        let n = images.first().map_or(self.n_vars, |p| p.n_vars);
        let mut acc = Self::zero(&self.field, n, e * self.degree);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&self.field, n, c.clone());
            for (img, &k) in images.iter().zip(&m.0) {
                for _ in 0..k {
                    t = t.multiply(img)?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// Coordinates in the monomial basis of the form's degree.
    pub fn to_vector(&self, basis: &SliceBasis) -> Result<Vec<F::Elem>> {
        if basis.n_vars != self.n_vars || (basis.degree != self.degree && !self.is_zero()) {
            return Err(Error::Degree(format!(
                "form of degree {} against slice of degree {}",
                self.degree, basis.degree
            )));
        }
        let mut v = vec![self.field.zero(); basis.dim()];
        for (m, c) in &self.terms {
            v[basis.index_of(m).expect("monomial in slice")] = c.clone();
        }
        Ok(v)
    }

    pub fn from_vector(field: &F, basis: &SliceBasis, v: &[F::Elem]) -> Self {
        let terms = basis.monomials.iter().cloned().zip(v.iter().cloned());
        Self::from_terms(field, basis.n_vars, basis.degree, terms).expect("slice vector")
    }

    pub fn map_field<G: Field>(&self, to: &G) -> Result<HomogeneousPoly<G>> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.clone(), transfer(&self.field, to, c)?)))
            .collect::<Result<Vec<_>>>()?;
        HomogeneousPoly::from_terms(to, self.n_vars, self.degree, terms)
    }
}

impl<F: Field> fmt::Display for HomogeneousPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let s = self.field.format(c);
            let (neg, abs) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// A linear subspace of one graded slice, stored as independent columns in
/// monomial coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedSubspace<F: Field> {
    pub n_vars: usize,
    pub degree: usize,
    pub basis: Matrix<F>,
}

impl<F: Field> GradedSubspace<F> {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn full(field: &F, n_vars: usize, degree: usize) -> Self {
        GradedSubspace {
            n_vars,
            degree,
            basis: Matrix::identity(field, slice_dim(n_vars, degree)),
        }
    }

    /// Span of the given coordinate vectors (not necessarily independent).
    pub fn from_vectors(field: &F, n_vars: usize, degree: usize, vectors: &[Vec<F::Elem>]) -> Self {
        let dim = slice_dim(n_vars, degree);
        let m = Matrix::from_rows(field, dim, vectors.to_vec()).expect("slice vectors");
        let e = linalg::echelon(&m);
        GradedSubspace {
            n_vars,
            degree,
            basis: e.rref.transpose(),
        }
    }

    pub fn contains(&self, p: &HomogeneousPoly<F>) -> Result<bool> {
        let v = p.to_vector(&SliceBasis::new(self.n_vars, self.degree))?;
        Ok(linalg::in_span(&self.basis, &v)?.is_some())
    }

    pub fn contains_subspace(&self, other: &GradedSubspace<F>) -> Result<bool> {
        linalg::contains_all(&self.basis, &other.basis)
    }

    pub fn polys(&self) -> Vec<HomogeneousPoly<F>> {
        let sb = SliceBasis::new(self.n_vars, self.degree);
        self.basis
            .columns()
            .iter()
            .map(|c| HomogeneousPoly::from_vector(self.basis.field(), &sb, c))
            .collect()
    }
}

/// Linear span of forms of one degree.
pub fn span<F: Field>(
    field: &F,
    n_vars: usize,
    degree: usize,
    polys: &[HomogeneousPoly<F>],
) -> Result<GradedSubspace<F>> {
    let sb = SliceBasis::new(n_vars, degree);
    let vectors = polys
        .iter()
        .map(|p| {
            if p.n_vars() != n_vars {
                return Err(Error::Shape("form in the wrong number of variables".into()));
            }
            p.to_vector(&sb)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedSubspace::from_vectors(
        field, n_vars, degree, &vectors,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn xyz() -> [HomogeneousPoly<Rationals>; 3] {
        [0, 1, 2].map(|i| HomogeneousPoly::var(&Rationals, 3, i))
    }

    fn fermat(d: u32) -> HomogeneousPoly<Rationals> {
        let terms = (0..3).map(|i| {
            let mut e = vec![0; 3];
            e[i] = d;
            (Monomial::new(e), Rationals.one())
        });
        HomogeneousPoly::from_terms(&Rationals, 3, d as usize, terms).unwrap()
    }

    #[test]
    fn basis_counts_and_order() {
        assert_eq!(monomial_basis(3, 2).len(), 6);
        assert_eq!(monomial_basis(4, 1).len(), 4);
        assert_eq!(monomial_basis(3, 0).len(), 1);
        let b: Vec<String> = monomial_basis(3, 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(b, ["x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x2^2"]);
        assert_eq!(slice_dim(3, 7), 36);
        assert_eq!(slice_dim(4, 5), 56);
    }

    #[test]
    fn multiplication_examples() {
        let [x, y, _] = xyz();
        assert_eq!(x.multiply(&y).unwrap().to_string(), "x0*x1");
        assert_eq!(x.multiply(&x.pow(3)).unwrap(), x.pow(4));
        let s = x.add(&y).unwrap();
        assert_eq!(s.multiply(&s).unwrap().to_string(), "x1^2 + 2*x0*x1 + x0^2");
        let other = HomogeneousPoly::var(&Rationals, 2, 0);
        assert!(matches!(x.multiply(&other), Err(Error::Shape(_))));
    }

    #[test]
    fn partial_examples() {
        let f = fermat(4);
        assert_eq!(
            f.partial(0),
            fermat_term(0, 3).scale(&Rationals.from_int(4))
        );
        assert_eq!(
            f.partial(1),
            fermat_term(1, 3).scale(&Rationals.from_int(4))
        );
        let c = HomogeneousPoly::constant(&Rationals, 3, Rationals.from_int(5));
        assert!(c.partial(2).is_zero());
    }

    fn fermat_term(i: usize, d: u32) -> HomogeneousPoly<Rationals> {
        let mut e = vec![0; 3];
        e[i] = d;
        HomogeneousPoly::monomial(&Rationals, Monomial::new(e))
    }

    #[test]
    fn evaluation_examples() {
        let q = Rationals;
        let f = fermat(4);
        assert_eq!(f.evaluate(&[q.zero(), q.zero(), q.one()]).unwrap(), q.one());
        assert!(q.is_zero(&f.evaluate(&[q.zero(), q.zero(), q.zero()]).unwrap()));
        let [x, y, _] = xyz();
        let xy = x.multiply(&y).unwrap();
        let pt = [q.from_int(2), q.from_int(3), q.from_int(1)];
        assert_eq!(xy.evaluate(&pt).unwrap(), q.from_int(6));
    }

    #[test]
    fn span_examples() {
        let q = Rationals;
        let cubes: Vec<_> = (0..3).map(|i| fermat_term(i, 3)).collect();
        assert_eq!(span(&q, 3, 3, &cubes).unwrap().dim(), 3);
        let x2 = fermat_term(0, 2);
        assert_eq!(
            span(&q, 3, 2, &[x2.clone(), x2.scale(&q.from_int(2))])
                .unwrap()
                .dim(),
            1
        );
        assert_eq!(span(&q, 3, 2, &[]).unwrap().dim(), 0);
        assert!(matches!(span(&q, 3, 3, &[x2]), Err(Error::Degree(_))));
    }

    #[test]
    fn display_round_trip_shape() {
        let [x, y, z] = xyz();
        let p = x
            .multiply(&y)
            .unwrap()
            .scale(&Rationals.from_int(-3))
            .add(&z.pow(2))
            .unwrap();
        assert_eq!(p.to_string(), "x2^2 - 3*x0*x1");
    }

    pub(crate) fn random_form<F: Field>(
        f: &F,
        n: usize,
        d: usize,
        rng: &mut ChaCha8Rng,
    ) -> HomogeneousPoly<F> {
        let terms: Vec<_> = monomial_basis(n, d)
            .into_iter()
            .map(|m| (m, f.random(rng)))
            .collect();
        HomogeneousPoly::from_terms(f, n, d, terms).unwrap()
    }

    proptest! {
        #[test]
        fn ring_laws(seed in any::<u64>(), n in 2usize..5, da in 0usize..4, db in 0usize..4, dc in 0usize..3) {
            let f = PrimeField::new(65537).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_form(&f, n, da, &mut rng);
            let b = random_form(&f, n, db, &mut rng);
            let c = random_form(&f, n, dc, &mut rng);
            prop_assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
            prop_assert_eq!(
                a.multiply(&b).unwrap().multiply(&c).unwrap(),
                a.multiply(&b.multiply(&c).unwrap()).unwrap()
            );
            for j in 0..n {
                let lhs = a.multiply(&b).unwrap().partial(j);
                let rhs = a.partial(j).multiply(&b).unwrap()
                    .add(&a.multiply(&b.partial(j)).unwrap()).unwrap();
                prop_assert_eq!(lhs.terms(), rhs.terms());
            }
        }

        #[test]
        fn euler_identity(seed in any::<u64>(), n in 2usize..5, d in 1usize..7) {
            let f = Rationals;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = random_form(&f, n, d, &mut rng);
            let coords: Vec<_> = (0..n).map(|i| HomogeneousPoly::var(&f, n, i)).collect();
            let euler = p.apply_vector_field(&coords).unwrap();
            prop_assert_eq!(euler, p.scale(&f.from_int(d as i64)));
        }

        #[test]
        fn vector_coordinates_round_trip(seed in any::<u64>(), n in 1usize..5, d in 0usize..5) {
            let f = PrimeField::new(101).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = random_form(&f, n, d, &mut rng);
            let sb = SliceBasis::new(n, d);
            prop_assert_eq!(HomogeneousPoly::from_vector(&f, &sb, &p.to_vector(&sb).unwrap()), p);
        }
    }
}
