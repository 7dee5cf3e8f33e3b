//! Conditions imposed by points: four collinear points fail to impose
//! independent conditions on conics, and equisingular conditions of a cusp.

use ivhs::cli::parse_poly;
use ivhs::singularities::{
    equisingular_conditions, h1_defect, point_conditions, sections_of_ideal, SingType,
    SingularPoint,
};
use ivhs::{Field, Rationals};

pub fn run_example() -> String {
    let q = Rationals;
    let pts: Vec<Vec<_>> = (0..4)
        .map(|t| vec![q.from_int(t), q.from_int(2 * t + 1), q.one()])
        .collect();
    let cond = point_conditions(&q, 3, &pts, 2).unwrap();
    let conics = sections_of_ideal(&cond, 3, 2).unwrap();
    let defect = h1_defect(&cond, pts.len()).unwrap();
    assert_eq!((conics.dim(), defect), (3, 1));

    let cusp = parse_poly(&q, 3, "x1^2 x2 - x0^3").unwrap();
    let p = SingularPoint::new(&q, vec![q.zero(), q.zero(), q.one()], SingType::A2).unwrap();
    let es = equisingular_conditions(&cusp, &[p], 3).unwrap();
    let cubics = sections_of_ideal(&es, 3, 3).unwrap();
    format!(
        "conics through 4 collinear points: dim {}, h1 defect {defect}\ncubics with the cusp's Tjurina conditions: dim {} (rank {})",
        conics.dim(),
        cubics.dim(),
        es.rank()
    )
}

fn main() {
    println!("{}", run_example());
}
