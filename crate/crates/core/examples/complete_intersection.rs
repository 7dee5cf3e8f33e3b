//! A (2,3) complete intersection in P^3. With the Jacobian ideal generated by
//! the partials of both forms, the quadric's partials already contain every
//! linear form, so the target slice of the period map vanishes and every
//! deformation lies in its kernel.

use ivhs::generate;
use ivhs::jacobian::{JacobianModel, PolySystem};
use ivhs::singularities::WeightedScheme;
use ivhs::torelli::{torelli_verdict_checked, Domain};
use ivhs::PrimeField;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> String {
    let field = PrimeField::new(ivhs::DEFAULT_PRIME).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let system = PolySystem::new(vec![
        generate::random_form(&field, 4, 2, &mut rng),
        generate::random_form(&field, 4, 3, &mut rng),
    ])
    .unwrap();
    let model = JacobianModel::new(system.clone()).unwrap();
    let hilbert = model.hilbert_function(6);
    let r = torelli_verdict_checked(&model, &WeightedScheme::empty(system), Domain::Full).unwrap();
    assert_eq!((r.dim_def, r.dim_trivial), (30, 21));
    assert_eq!(r.geometric_genus, Some(4));
    format!(
        "h = {hilbert:?}\ndef {} trivial {} kernel {} moduli {} genus {:?}\nverdict {} (rational recheck {:?})",
        r.dim_def,
        r.dim_trivial,
        r.dim_kernel,
        r.moduli,
        r.geometric_genus,
        r.verdict,
        r.rational_recheck
    )
}

fn main() {
    println!("{}", run_example());
}
