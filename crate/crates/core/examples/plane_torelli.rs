//! Infinitesimal Torelli for a quintic with one node: the period-map kernel
//! on equisingular deformations is exactly the trivial directions.

use ivhs::generate;
use ivhs::jacobian::{JacobianModel, PolySystem};
use ivhs::singularities::{verify_singular, Flavor, SingType, SingularPoint, WeightedScheme};
use ivhs::torelli::{torelli_verdict_checked, Domain, Verdict};
use ivhs::PrimeField;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> String {
    let field = PrimeField::new(ivhs::DEFAULT_PRIME).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = generate::random_form_singular_at(&field, 3, 5, &[2], &mut rng);
    let check = verify_singular(&f, &[0, 0, 1], &SingType::A1).unwrap();
    assert!(check.consistent);

    let node = SingularPoint::new(&field, vec![0, 0, 1], SingType::A1).unwrap();
    let system = PolySystem::new(vec![f]).unwrap();
    let model = JacobianModel::new(system.clone()).unwrap();
    let z = WeightedScheme::new(system, vec![node], Flavor::Equisingular);
    let mut lines = Vec::new();
    for domain in [Domain::Full, Domain::Adjoint] {
        let r = torelli_verdict_checked(&model, &z, domain).unwrap();
        assert_eq!(r.verdict, Verdict::InjectiveModTrivial);
        lines.push(format!(
            "{domain}: def {} trivial {} kernel {} test forms {} genus {:?} verdict {}",
            r.dim_def, r.dim_trivial, r.dim_kernel, r.domain_dim, r.geometric_genus, r.verdict
        ));
    }
    lines.join("\n")
}

fn main() {
    println!("{}", run_example());
}
