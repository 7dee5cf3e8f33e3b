//! Geometric genus of singular plane quartics and the adjoint canonical
//! forms: for one node they are the lines through it.

use ivhs::cli::parse_poly;
use ivhs::singularities::{
    adjoint_conditions, geometric_genus, sections_of_ideal, verify_singular, DegreeData, SingType,
    SingularPoint,
};
use ivhs::{Field, Rationals};

pub fn run_example() -> String {
    let q = Rationals;
    let f = parse_poly(
        &q,
        3,
        "x0 x1 x2^2 + x0^3 x2 + x1^3 x2 + x0^4 - x1^4 + 2 x0^2 x1^2",
    )
    .unwrap();
    let coords = vec![q.zero(), q.zero(), q.one()];
    assert!(
        verify_singular(&f, &coords, &SingType::A1)
            .unwrap()
            .consistent
    );
    let node = vec![SingularPoint::new(&q, coords, SingType::A1).unwrap()];

    let g = geometric_genus(&DegreeData::Plane(4), &node).unwrap();
    let cond = adjoint_conditions(&q, 3, &node, 1).unwrap();
    let adjoint = sections_of_ideal(&cond, 3, 1).unwrap();
    assert_eq!(adjoint.dim() as i64, g);
    let forms: Vec<String> = adjoint.polys().iter().map(|p| p.to_string()).collect();

    let mixed = parse_poly(&q, 3, "x0^2 x1^2 + x1^2 x2^2 + x0 x2^3").unwrap();
    let pts = vec![
        SingularPoint::new(&q, vec![q.zero(), q.one(), q.zero()], SingType::A1).unwrap(),
        SingularPoint::new(&q, vec![q.one(), q.zero(), q.zero()], SingType::A2).unwrap(),
    ];
    for p in &pts {
        assert!(
            verify_singular(&mixed, &p.coords, &p.sing_type)
                .unwrap()
                .consistent
        );
    }
    let g_mixed = geometric_genus(&DegreeData::Plane(4), &pts).unwrap();
    format!(
        "one-node quartic: g = {g}, adjoint canonical forms {}\nnode + cusp quartic: g = {g_mixed}",
        forms.join(", ")
    )
}

fn main() {
    println!("{}", run_example());
}
