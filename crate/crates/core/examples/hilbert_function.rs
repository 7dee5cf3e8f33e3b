//! Hilbert function of the Jacobian ring of the Fermat quartic, compared with
//! the series of a regular sequence of three cubics.

use ivhs::generate;
use ivhs::jacobian::{regular_sequence_series, JacobianModel, PolySystem};
use ivhs::Rationals;

pub fn run_example() -> String {
    let f = generate::fermat(&Rationals, 3, 4);
    let model = JacobianModel::new(PolySystem::new(vec![f]).unwrap()).unwrap();
    let h = model.hilbert_function(7);
    assert_eq!(h, regular_sequence_series(&[3, 3, 3], 7));
    let basis: Vec<String> = model
        .complement_basis(6)
        .iter()
        .map(|m| m.to_string())
        .collect();
    format!("h = {h:?}\nR_6 spanned by {}", basis.join(", "))
}

fn main() {
    println!("{}", run_example());
}
