//! Jacobian ideals and their graded quotients.
//!
//! For a system `(F_1, ..., F_r)` the Jacobian ideal `J` is generated by all
//! first partials `dF_i/dx_j`. Each slice `(J)_k` is computed as the span of
//! every monomial multiple of every partial landing in degree `k`; the
//! quotient `R_k` is represented by the lexicographically first monomials
//! that complete `(J)_k` to the full slice.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::linalg::{self, Matrix};
use crate::poly::{slice_dim, GradedSubspace, HomogeneousPoly, Monomial, SliceBasis};

/// Defining forms of a complete intersection `V(F_1, ..., F_r)` in `P^N`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolySystem<F: Field> {
    field: F,
    n_vars: usize,
    forms: Vec<HomogeneousPoly<F>>,
}

impl<F: Field> PolySystem<F> {
    pub fn new(forms: Vec<HomogeneousPoly<F>>) -> Result<Self> {
        let first = forms
            .first()
            .ok_or_else(|| Error::Shape("a system needs at least one form".into()))?;
        let field = first.field().clone();
        let n_vars = first.n_vars();
        if n_vars < 3 {
            return Err(Error::Shape(format!(
                "ambient P^{} too small; need N >= 2",
                n_vars.saturating_sub(1)
            )));
        }
        for (i, f) in forms.iter().enumerate() {
            if f.field() != &field {
                return Err(Error::FieldMismatch(
                    field.spec().to_string(),
                    f.field().spec().to_string(),
                ));
            }
            if f.n_vars() != n_vars {
                return Err(Error::Shape(format!("form {i} lives in a different ring")));
            }
            if f.degree() < 2 {
                return Err(Error::Degree(format!(
                    "form {i} has degree {}; defining forms need degree >= 2",
                    f.degree()
                )));
            }
            if f.is_zero() {
                return Err(Error::Degree(format!("form {i} is zero")));
            }
        }
        Ok(PolySystem {
            field,
            n_vars,
            forms,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn n_vars(&self) -> usize {
        self.n_vars
    }
    /// Projective dimension `N`.
    pub fn ambient_dim(&self) -> usize {
        self.n_vars - 1
    }
    pub fn forms(&self) -> &[HomogeneousPoly<F>] {
        &self.forms
    }
    pub fn len(&self) -> usize {
        self.forms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }
    pub fn degrees(&self) -> Vec<usize> {
        self.forms.iter().map(|f| f.degree()).collect()
    }

    /// `sum d_i - N - 1`, the degree of the forms `H` whose residues give
    /// the top holomorphic forms.
    pub fn canonical_degree(&self) -> i64 {
        self.degrees().iter().sum::<usize>() as i64 - self.n_vars as i64
    }

    pub fn map_field<G: Field>(&self, to: &G) -> Result<PolySystem<G>> {
        PolySystem::new(
            self.forms
                .iter()
                .map(|f| f.map_field(to))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Refuses characteristics at or below a defining degree: there the
    /// Euler identity or the partials themselves can degenerate.
    pub fn check_characteristic(&self) -> Result<()> {
        let p = self.field.characteristic();
        if p == 0 {
            return Ok(());
        }
        for d in self.degrees() {
            if p as usize <= d {
                let why = if d % p as usize == 0 {
                    format!("characteristic {p} divides degree {d}")
                } else {
                    format!("characteristic {p} does not exceed degree {d}")
                };
                return Err(Error::CharacteristicConflict(why));
            }
        }
        Ok(())
    }
}

/// Everything known about one degree of the Jacobian ring.
#[derive(Debug)]
struct Slice<F: Field> {
    ideal: GradedSubspace<F>,
    /// Echelon rows of `(J)_k`, each with a unit pivot at its last nonzero
    /// column; no other row touches that column.
    reducer: Vec<(usize, Vec<F::Elem>)>,
    complement: Vec<usize>,
}

impl<F: Field> Slice<F> {
    fn build(field: &F, n_vars: usize, k: usize, generators: &[HomogeneousPoly<F>]) -> Self {
        let sb = SliceBasis::new(n_vars, k);
        let dim = sb.dim();
        let mut rows = Vec::new();
        for g in generators {
            if g.degree() > k {
                continue;
            }
            for m in crate::poly::monomial_basis(n_vars, k - g.degree()) {
                let p = g
                    .multiply(&HomogeneousPoly::monomial(field, m))
                    .expect("generators share the ring");
                rows.push(p.to_vector(&sb).expect("product lands in slice"));
            }
        }
        let m = Matrix::from_rows(field, dim, rows).expect("slice rows");
        // Echelon form in reversed column order puts pivots on the latest
        // monomials, leaving the earliest ones as the quotient basis.
        let rev: Vec<usize> = (0..dim).rev().collect();
        let e = linalg::echelon(&m.permute_columns(&rev));
        let mut is_pivot = vec![false; dim];
        let mut reducer = Vec::with_capacity(e.rank());
        for (r, &pc) in e.pivots.iter().enumerate() {
            let pivot = dim - 1 - pc;
            is_pivot[pivot] = true;
            let mut row = vec![field.zero(); dim];
            for (j, x) in e.rref.row(r).iter().enumerate() {
                row[dim - 1 - j] = x.clone();
            }
            reducer.push((pivot, row));
        }
        let complement = (0..dim).filter(|&i| !is_pivot[i]).collect();
        let basis = Matrix::from_columns(
            field,
            dim,
            &reducer.iter().map(|(_, r)| r.clone()).collect::<Vec<_>>(),
        )
        .expect("ideal basis");
        Slice {
            ideal: GradedSubspace {
                n_vars,
                degree: k,
                basis,
            },
            reducer,
            complement,
        }
    }

    /// Normal form of a slice vector: coordinates on the complement monomials.
    fn reduce(&self, field: &F, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        for (p, row) in &self.reducer {
            let c = v[*p].clone();
            if field.is_zero(&c) {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                if !field.is_zero(y) {
                    *x = field.sub(x, &field.mul(&c, y));
                }
            }
        }
        self.complement.iter().map(|&i| v[i].clone()).collect()
    }
}

type SliceCell<F> = Arc<OnceLock<Arc<Slice<F>>>>;

/// A system together with lazily computed slices of its Jacobian ring.
///
/// Slices are computed at most once per degree; concurrent requests for the
/// same degree block on a single computation.
#[derive(Debug)]
pub struct JacobianModel<F: Field> {
    system: PolySystem<F>,
    generators: Vec<HomogeneousPoly<F>>,
    slices: Mutex<HashMap<usize, SliceCell<F>>>,
}

/// Matrix of `H -> H*Q` from `R_a` to `R_b` in complement bases.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicationMap<F: Field> {
    pub source: usize,
    pub target: usize,
    pub matrix: Matrix<F>,
}

impl<F: Field> MultiplicationMap<F> {
    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SocleReport {
    pub hilbert: Vec<usize>,
    pub scanned_up_to: usize,
    pub non_artinian_up_to_bound: bool,
    pub sigma_observed: Option<usize>,
    pub top_dimension: Option<usize>,
    pub gorenstein_shaped: bool,
    pub symmetric: bool,
    pub pairing_perfect: BTreeMap<usize, bool>,
    /// `sum (d_i - 1) - 1`, the closed-form socle degree quoted for
    /// complete intersections.
    pub sigma_formula: i64,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlpFailure {
    pub form: String,
    pub source: usize,
    pub power: usize,
    pub rank: usize,
    pub expected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlpReport {
    pub pass: bool,
    pub sigma: usize,
    pub forms_tested: Vec<String>,
    pub passing_form: Option<String>,
    pub maps_checked: usize,
    pub failures: Vec<SlpFailure>,
    pub rational_recheck: Option<bool>,
    pub warnings: Vec<String>,
}

impl<F: Field> JacobianModel<F> {
    /// Builds the model and checks the Euler identity `F_i in (J)_{d_i}`.
    pub fn new(system: PolySystem<F>) -> Result<Self> {
        system.check_characteristic()?;
        let generators = system
            .forms()
            .iter()
            .flat_map(|f| f.gradient())
            .filter(|g| !g.is_zero())
            .collect();
        let model = JacobianModel {
            system,
            generators,
            slices: Mutex::new(HashMap::new()),
        };
        for (i, f) in model.system.forms().iter().enumerate() {
            if !model.ideal_piece(f.degree()).contains(f)? {
                return Err(Error::InternalInconsistency(format!(
                    "form {i} is not in its own Jacobian ideal"
                )));
            }
        }
        Ok(model)
    }

    pub fn system(&self) -> &PolySystem<F> {
        &self.system
    }

    pub fn field(&self) -> &F {
        self.system.field()
    }

    pub fn n_vars(&self) -> usize {
        self.system.n_vars()
    }

    fn slice(&self, k: usize) -> Arc<Slice<F>> {
        let cell = {
            let mut map = self.slices.lock().expect("slice cache poisoned");
            map.entry(k).or_default().clone()
        };
        cell.get_or_init(|| {
            Arc::new(Slice::build(
                self.field(),
                self.n_vars(),
                k,
                &self.generators,
            ))
        })
        .clone()
    }

    /// `(J)_k`.
    pub fn ideal_piece(&self, k: usize) -> GradedSubspace<F> {
        self.slice(k).ideal.clone()
    }

    /// `h_k = dim R_k`.
    pub fn hilbert_value(&self, k: usize) -> usize {
        self.slice(k).complement.len()
    }

    pub fn hilbert_function(&self, up_to: usize) -> Vec<usize> {
        (0..=up_to).map(|k| self.hilbert_value(k)).collect()
    }

    /// Monomials forming the chosen basis of `R_k`.
    pub fn complement_basis(&self, k: usize) -> Vec<Monomial> {
        let sb = SliceBasis::new(self.n_vars(), k);
        self.slice(k)
            .complement
            .iter()
            .map(|&i| sb.monomials[i].clone())
            .collect()
    }

    /// Coordinates of the class of `p` in `R_{deg p}`.
    pub fn reduce(&self, p: &HomogeneousPoly<F>) -> Result<Vec<F::Elem>> {
        let k = p.degree();
        let v = p.to_vector(&SliceBasis::new(self.n_vars(), k))?;
        Ok(self.slice(k).reduce(self.field(), v))
    }

    /// Normal form of a raw slice vector in degree `k`.
    pub fn reduce_vector(&self, k: usize, v: Vec<F::Elem>) -> Vec<F::Elem> {
        self.slice(k).reduce(self.field(), v)
    }

    pub fn in_ideal(&self, p: &HomogeneousPoly<F>) -> Result<bool> {
        Ok(self.reduce(p)?.iter().all(|x| self.field().is_zero(x)))
    }

    /// Matrix of multiplication by `q` from `R_a` to `R_{a + deg q}`.
    pub fn mult_map(&self, q: &HomogeneousPoly<F>, a: usize) -> Result<MultiplicationMap<F>> {
        if q.n_vars() != self.n_vars() {
            return Err(Error::Shape("multiplier lives in a different ring".into()));
        }
        let b = a + q.degree();
        let f = self.field();
        let columns = self
            .complement_basis(a)
            .into_iter()
            .map(|m| self.reduce(&HomogeneousPoly::monomial(f, m).multiply(q)?))
            .collect::<Result<Vec<_>>>()?;
        let rows = self.hilbert_value(b);
        Ok(MultiplicationMap {
            source: a,
            target: b,
            matrix: Matrix::from_columns(f, rows, &columns)?,
        })
    }

    pub fn socle_report(&self, k_max: usize) -> Result<SocleReport> {
        let hilbert = self.hilbert_function(k_max);
        let sigma_formula = self
            .system
            .degrees()
            .iter()
            .map(|&d| d as i64 - 1)
            .sum::<i64>()
            - 1;
        let mut notes = Vec::new();
        let non_artinian = hilbert[k_max] != 0;
        if non_artinian {
            notes.push(format!(
                "Hilbert function does not vanish by degree {k_max}; quotient not Artinian within the scanned range"
            ));
            return Ok(SocleReport {
                hilbert,
                scanned_up_to: k_max,
                non_artinian_up_to_bound: true,
                sigma_observed: None,
                top_dimension: None,
                gorenstein_shaped: false,
                symmetric: false,
                pairing_perfect: BTreeMap::new(),
                sigma_formula,
                notes,
            });
        }
        let sigma = hilbert.iter().rposition(|&h| h > 0).unwrap_or(0);
        let symmetric = (0..=sigma).all(|a| hilbert[a] == hilbert[sigma - a]);
        let top = hilbert[sigma];
        let gorenstein_shaped = top == 1;
        let mut pairing_perfect = BTreeMap::new();
        if gorenstein_shaped {
            let f = self.field();
            for a in 0..=sigma {
                let left = self.complement_basis(a);
                let right = self.complement_basis(sigma - a);
                let mut gram = Matrix::zeros(f, left.len(), right.len());
                for (i, u) in left.iter().enumerate() {
                    for (j, w) in right.iter().enumerate() {
                        let prod = HomogeneousPoly::monomial(f, u.mul(w));
                        gram.set(i, j, self.reduce(&prod)?[0].clone());
                    }
                }
                let r = linalg::rank(&gram);
                pairing_perfect.insert(a, r == left.len() && r == right.len());
            }
        } else {
            notes.push(format!(
                "top degree {sigma} has dimension {top}; not Gorenstein-shaped, pairing skipped"
            ));
        }
        if sigma as i64 != sigma_formula {
            notes.push(format!(
                "observed socle degree {sigma} differs from sum(d_i - 1) - 1 = {sigma_formula}"
            ));
        }
        Ok(SocleReport {
            hilbert,
            scanned_up_to: k_max,
            non_artinian_up_to_bound: false,
            sigma_observed: Some(sigma),
            top_dimension: Some(top),
            gorenstein_shaped,
            symmetric,
            pairing_perfect,
            sigma_formula,
            notes,
        })
    }

    /// Scans for a socle degree, doubling the bound until the quotient
    /// vanishes or `limit` is reached.
    pub fn find_socle(&self, limit: usize) -> Result<SocleReport> {
        let mut bound = self.system.degrees().iter().map(|&d| d - 1).sum::<usize>() * 2 + 2;
        loop {
            let bound_now = bound.min(limit);
            let rep = self.socle_report(bound_now)?;
            if !rep.non_artinian_up_to_bound || bound_now == limit {
                return Ok(rep);
            }
            bound *= 2;
        }
    }

    /// Checks every map `l^m : R_a -> R_{a+m}` (`m >= 1`, `a + m <= sigma`)
    /// for maximal rank, for each given linear form.
    pub fn slp_check_forms(&self, forms: &[HomogeneousPoly<F>]) -> Result<SlpReport> {
        let socle = self.find_socle(64)?;
        let sigma = socle.sigma_observed.ok_or_else(|| {
            Error::InternalInconsistency("strong Lefschetz check needs an Artinian quotient".into())
        })?;
        let h = &socle.hilbert;
        let mut warnings = Vec::new();
        let p = self.field().characteristic();
        if p != 0 && p < 100 {
            warnings.push(format!(
                "field of size {p} is too small for meaningful random sampling"
            ));
        }
        let mut failures = Vec::new();
        let mut passing_form = None;
        let mut maps_checked = 0;
        for l in forms {
            if l.degree() != 1 || l.n_vars() != self.n_vars() {
                return Err(Error::Degree(
                    "Lefschetz element must be a linear form".into(),
                ));
            }
            let mut ok = true;
            for m in 1..=sigma {
                let lm = l.pow(m);
                for a in 0..=(sigma - m) {
                    let rank = self.mult_map(&lm, a)?.rank();
                    let expected = h[a].min(h[a + m]);
                    maps_checked += 1;
                    if rank != expected {
                        ok = false;
                        failures.push(SlpFailure {
                            form: l.to_string(),
                            source: a,
                            power: m,
                            rank,
                            expected,
                        });
                    }
                }
            }
            if ok && passing_form.is_none() {
                passing_form = Some(l.to_string());
            }
        }
        let pass = passing_form.is_some();
        let rational_recheck = if !pass && p != 0 {
            Some(self.recheck_over_rationals(forms)?)
        } else {
            None
        };
        Ok(SlpReport {
            pass,
            sigma,
            forms_tested: forms.iter().map(|l| l.to_string()).collect(),
            passing_form,
            maps_checked,
            failures,
            rational_recheck,
            warnings,
        })
    }

    fn recheck_over_rationals(&self, forms: &[HomogeneousPoly<F>]) -> Result<bool> {
        let lifted = JacobianModel::new(self.system.map_field(&Rationals)?)?;
        let lforms = forms
            .iter()
            .map(|l| l.map_field(&Rationals))
            .collect::<Result<Vec<_>>>()?;
        Ok(lifted.slp_check_forms(&lforms)?.pass)
    }

    /// Strong Lefschetz check with `trials` random linear forms drawn from a
    /// seeded generator.
    pub fn slp_check(&self, trials: usize, seed: u64) -> Result<SlpReport> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let forms: Vec<_> = (0..trials.max(1))
            .map(|_| crate::generate::random_form(self.field(), self.n_vars(), 1, &mut rng))
            .collect();
        self.slp_check_forms(&forms)
    }

    /// Consistency check `dim (J)_k + h_k = dim S_k`.
    pub fn dimension_identity_holds(&self, k: usize) -> bool {
        self.ideal_piece(k).dim() + self.hilbert_value(k) == slice_dim(self.n_vars(), k)
    }
}

/// Coefficients of `prod_i (1 + t + ... + t^{e_i - 1})` up to `t^up_to`: the
/// Hilbert series of a quotient by a regular sequence of forms of degrees `e_i`.
pub fn regular_sequence_series(degrees: &[usize], up_to: usize) -> Vec<usize> {
    let mut acc = vec![0usize; up_to + 1];
    acc[0] = 1;
    for &e in degrees {
        let mut next = vec![0usize; up_to + 1];
        for (i, &c) in acc.iter().enumerate() {
            for j in 0..e {
                if i + j <= up_to {
                    next[i + j] += c;
                }
            }
        }
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::generate;

    fn fermat<F: Field>(f: &F, d: usize) -> HomogeneousPoly<F> {
        generate::fermat(f, 3, d)
    }

    fn model<F: Field>(p: HomogeneousPoly<F>) -> JacobianModel<F> {
        JacobianModel::new(PolySystem::new(vec![p]).unwrap()).unwrap()
    }

    #[test]
    fn series_oracle() {
        assert_eq!(
            regular_sequence_series(&[3, 3, 3], 7),
            vec![1, 3, 6, 7, 6, 3, 1, 0]
        );
        assert_eq!(regular_sequence_series(&[2, 2, 2], 4), vec![1, 3, 3, 1, 0]);
    }

    #[test]
    fn fermat_quartic_ideal_pieces() {
        let m = model(fermat(&Rationals, 4));
        assert_eq!(m.ideal_piece(3).dim(), 3);
        assert_eq!(m.ideal_piece(4).dim(), 9);
        assert_eq!(m.ideal_piece(2).dim(), 0);
        assert_eq!(m.ideal_piece(0).dim(), 0);
        for k in 0..9 {
            assert!(m.dimension_identity_holds(k));
        }
    }

    #[test]
    fn fermat_quartic_hilbert() {
        let m = model(fermat(&Rationals, 4));
        assert_eq!(m.hilbert_function(7), vec![1, 3, 6, 7, 6, 3, 1, 0]);
    }

    #[test]
    fn random_quintic_hilbert() {
        let f = PrimeField::new(65537).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = model(generate::random_form(&f, 3, 5, &mut rng));
        assert_eq!(
            m.hilbert_function(9),
            regular_sequence_series(&[4, 4, 4], 9)
        );
    }

    #[test]
    fn socle_reports() {
        let r = model(fermat(&Rationals, 4)).socle_report(8).unwrap();
        assert_eq!(r.sigma_observed, Some(6));
        assert!(r.symmetric && r.gorenstein_shaped);
        assert_eq!(r.pairing_perfect.get(&3), Some(&true));
        assert_eq!(r.sigma_formula, 2);
        assert!(!r.notes.is_empty());

        let r = model(fermat(&Rationals, 3)).socle_report(5).unwrap();
        assert_eq!(r.hilbert[..4], [1, 3, 3, 1]);
        assert_eq!(r.sigma_observed, Some(3));
        assert!(r.symmetric);

        let r = model(fermat(&Rationals, 4)).socle_report(4).unwrap();
        assert!(r.non_artinian_up_to_bound);
        assert_eq!(r.sigma_observed, None);
    }

    #[test]
    fn non_gorenstein_top_is_flagged() {
        // Nodal cubic: the quotient never vanishes (Tjurina number 1).
        let q = Rationals;
        let f = crate::cli::parse_poly(&q, 3, "x1^2*x2 - x0^3 - x0^2*x2").unwrap();
        let r = model(f).socle_report(6).unwrap();
        assert!(r.non_artinian_up_to_bound);
        assert_eq!(r.hilbert[6], 1);
    }

    #[test]
    fn multiplication_map_examples() {
        let q = Rationals;
        let f = fermat(&q, 4);
        let m = model(f.clone());
        for a in 0..4 {
            assert!(m.mult_map(&f, a).unwrap().matrix.is_zero());
            let id = m.mult_map(&HomogeneousPoly::one(&q, 3), a).unwrap();
            assert_eq!(id.matrix, Matrix::identity(&q, m.hilbert_value(a)));
        }
        let l = generate::sum_of_variables(&q, 3);
        let mm = m.mult_map(&l, 2).unwrap();
        assert_eq!((mm.matrix.rows(), mm.matrix.cols()), (7, 6));
        assert_eq!(mm.rank(), 6);
    }

    #[test]
    fn multiplication_is_linear_in_the_multiplier() {
        let f = PrimeField::new(65537).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = model(generate::random_form(&f, 3, 4, &mut rng));
        for _ in 0..5 {
            let q1 = generate::random_form(&f, 3, 2, &mut rng);
            let q2 = generate::random_form(&f, 3, 2, &mut rng);
            let lhs = m.mult_map(&q1.add(&q2).unwrap(), 2).unwrap().matrix;
            let rhs = m
                .mult_map(&q1, 2)
                .unwrap()
                .matrix
                .add(&m.mult_map(&q2, 2).unwrap().matrix)
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn slp_examples() {
        let q = Rationals;
        let m = model(fermat(&q, 4));
        let r = m
            .slp_check_forms(&[generate::sum_of_variables(&q, 3)])
            .unwrap();
        assert!(r.pass, "{:?}", r.failures);
        assert!(r.failures.is_empty());

        let f = PrimeField::new(65537).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = model(generate::random_form(&f, 3, 5, &mut rng))
            .slp_check(2, 9)
            .unwrap();
        assert!(r.pass);
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn characteristic_guard() {
        let f2 = PrimeField::new(2).unwrap();
        let sys = PolySystem::new(vec![fermat(&f2, 4)]).unwrap();
        assert!(matches!(
            JacobianModel::new(sys),
            Err(Error::CharacteristicConflict(_))
        ));
        let f3 = PrimeField::new(3).unwrap();
        let sys = PolySystem::new(vec![fermat(&f3, 4)]).unwrap();
        assert!(matches!(
            JacobianModel::new(sys),
            Err(Error::CharacteristicConflict(_))
        ));
    }

    #[test]
    fn system_validation() {
        let q = Rationals;
        assert!(PolySystem::<Rationals>::new(vec![]).is_err());
        let line = HomogeneousPoly::var(&q, 3, 0);
        assert!(matches!(PolySystem::new(vec![line]), Err(Error::Degree(_))));
        let conic = generate::fermat(&q, 2, 2);
        assert!(matches!(PolySystem::new(vec![conic]), Err(Error::Shape(_))));
    }

    #[test]
    fn concurrent_slice_requests_agree() {
        let f = PrimeField::new(65537).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let m = model(generate::random_form(&f, 3, 5, &mut rng));
        let results: Vec<Vec<usize>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..4).map(|_| s.spawn(|| m.hilbert_function(10))).collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert!(results.windows(2).all(|w| w[0] == w[1]));
    }
}
