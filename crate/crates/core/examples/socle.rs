//! Socle degree, symmetry and the socle pairing of a random quintic's
//! Jacobian ring over F_65537.

use ivhs::generate;
use ivhs::jacobian::{JacobianModel, PolySystem};
use ivhs::PrimeField;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> String {
    let field = PrimeField::new(ivhs::DEFAULT_PRIME).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let f = generate::random_form(&field, 3, 5, &mut rng);
    let model = JacobianModel::new(PolySystem::new(vec![f]).unwrap()).unwrap();
    let rep = model.find_socle(32).unwrap();
    assert_eq!(rep.sigma_observed, Some(9));
    assert!(rep.symmetric && rep.pairing_perfect.values().all(|&ok| ok));
    format!(
        "sigma = {:?}, h = {:?}, symmetric = {}, notes = {:?}",
        rep.sigma_observed, rep.hilbert, rep.symmetric, rep.notes
    )
}

fn main() {
    println!("{}", run_example());
}
