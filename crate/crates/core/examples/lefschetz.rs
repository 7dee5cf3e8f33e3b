//! Strong Lefschetz check: every map l^m : R_a -> R_{a+m} has maximal rank,
//! for l = x0 + x1 + x2 on the Fermat quartic and for seeded random l.

use ivhs::generate;
use ivhs::jacobian::{JacobianModel, PolySystem};
use ivhs::PrimeField;

pub fn run_example() -> String {
    let field = PrimeField::new(ivhs::DEFAULT_PRIME).unwrap();
    let model =
        JacobianModel::new(PolySystem::new(vec![generate::fermat(&field, 3, 4)]).unwrap()).unwrap();
    let fixed = model
        .slp_check_forms(&[generate::sum_of_variables(&field, 3)])
        .unwrap();
    let random = model.slp_check(3, 7).unwrap();
    assert!(fixed.pass && random.pass);
    format!(
        "x0+x1+x2: {} maps, pass = {}\nrandom: {} maps, first passing form {:?}",
        fixed.maps_checked, fixed.pass, random.maps_checked, random.passing_form
    )
}

fn main() {
    println!("{}", run_example());
}
