//! Standard and seeded random inputs: Fermat forms, random forms, curves
//! with prescribed nodes, vector fields and coordinate changes.

use rand::Rng;

use crate::field::Field;
use crate::poly::{monomial_basis, HomogeneousPoly, Monomial};

pub fn random_form<F: Field, R: Rng + ?Sized>(
    field: &F,
    n_vars: usize,
    degree: usize,
    rng: &mut R,
) -> HomogeneousPoly<F> {
    let terms: Vec<_> = monomial_basis(n_vars, degree)
        .into_iter()
        .map(|m| (m, field.random(rng)))
        .collect();
    HomogeneousPoly::from_terms(field, n_vars, degree, terms).expect("basis monomials")
}

/// `x_0^d + ... + x_N^d`.
pub fn fermat<F: Field>(field: &F, n_vars: usize, degree: usize) -> HomogeneousPoly<F> {
    let terms = (0..n_vars).map(|i| {
        let mut e = vec![0; n_vars];
        e[i] = degree as u32;
        (Monomial::new(e), field.one())
    });
    HomogeneousPoly::from_terms(field, n_vars, degree, terms).expect("fermat terms")
}

/// `x_0 + ... + x_N`.
pub fn sum_of_variables<F: Field>(field: &F, n_vars: usize) -> HomogeneousPoly<F> {
    fermat(field, n_vars, 1)
}

/// Random form of degree `d` singular at every coordinate point
/// `e_i` for `i` in `points`: the monomials `x_i^d` and `x_i^{d-1} x_j`
/// are omitted, so `F` and its gradient vanish there.
pub fn random_form_singular_at<F: Field, R: Rng + ?Sized>(
    field: &F,
    n_vars: usize,
    degree: usize,
    points: &[usize],
    rng: &mut R,
) -> HomogeneousPoly<F> {
    let terms: Vec<_> = monomial_basis(n_vars, degree)
        .into_iter()
        .filter(|m| {
            !points
                .iter()
                .any(|&i| m.exponents()[i] as usize + 1 >= degree)
        })
        .map(|m| (m, field.random(rng)))
        .collect();
    HomogeneousPoly::from_terms(field, n_vars, degree, terms).expect("basis monomials")
}

/// Vector field `sum_j a_j d/dx_j` with random linear coefficients.
pub fn random_vector_field<F: Field, R: Rng + ?Sized>(
    field: &F,
    n_vars: usize,
    rng: &mut R,
) -> Vec<HomogeneousPoly<F>> {
    (0..n_vars)
        .map(|_| random_form(field, n_vars, 1, rng))
        .collect()
}

/// Basis vector field `x_i d/dx_j` as coefficient list.
pub fn basis_vector_field<F: Field>(
    field: &F,
    n_vars: usize,
    i: usize,
    j: usize,
) -> Vec<HomogeneousPoly<F>> {
    (0..n_vars)
        .map(|k| {
            if k == j {
                HomogeneousPoly::var(field, n_vars, i)
            } else {
                HomogeneousPoly::zero(field, n_vars, 1)
            }
        })
        .collect()
}

/// Random invertible linear substitution `x_i -> sum_j g_ij x_j`, returned
/// as the images of the variables.
pub fn random_linear_change<F: Field, R: Rng + ?Sized>(
    field: &F,
    n_vars: usize,
    rng: &mut R,
) -> Vec<HomogeneousPoly<F>> {
    loop {
        let images: Vec<_> = (0..n_vars)
            .map(|_| random_form(field, n_vars, 1, rng))
            .collect();
        let rows: Vec<Vec<F::Elem>> = images
            .iter()
            .map(|p| {
                (0..n_vars)
                    .map(|j| p.coefficient(&Monomial::var(n_vars, j)))
                    .collect()
            })
            .collect();
        let m = crate::linalg::Matrix::from_rows(field, n_vars, rows).expect("square");
        if crate::linalg::rank(&m) == n_vars {
            return images;
        }
    }
}
