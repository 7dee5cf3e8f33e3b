//! Exact rank, kernel and span membership over the rationals and F_p. A
//! matrix whose rank drops modulo 7 shows why prime-field answers are only
//! proxies for characteristic zero.

use ivhs::linalg::{echelon, in_span, kernel_basis, rank, Matrix};
use ivhs::{Field, PrimeField, Rationals};

pub fn run_example() -> String {
    let rows: &[&[i64]] = &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 16]];
    let q = Matrix::from_ints(&Rationals, rows);
    let f7 = Matrix::from_ints(&PrimeField::new(7).unwrap(), rows);
    let det_rank = (rank(&q), rank(&f7));
    assert_eq!(det_rank, (3, 2));

    let sing = Matrix::from_ints(&Rationals, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    let kernel = kernel_basis(&sing);
    assert!(sing.mul(&kernel).unwrap().is_zero());
    let target = sing.mul_vec(&[
        Rationals.from_int(1),
        Rationals.from_int(1),
        Rationals.from_int(1),
    ]);
    let cols = sing.clone();
    let coeffs = in_span(&cols, &target.unwrap()).unwrap();
    format!(
        "rank over Q {} and over F_7 {}\nkernel of the singular matrix: {} column(s), pivots {:?}\nspan membership coefficients: {:?}",
        det_rank.0,
        det_rank.1,
        kernel.cols(),
        echelon(&sing).pivots,
        coeffs.map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>())
    )
}

fn main() {
    println!("{}", run_example());
}
