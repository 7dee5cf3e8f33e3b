//! Acceptance gate: ten criteria, one PASS/FAIL line each. Runs with its own
//! harness so every criterion reports even when an earlier one fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ivhs::field::{Field, PrimeField, Rationals};
use ivhs::generate;
use ivhs::jacobian::{regular_sequence_series, JacobianModel, PolySystem};
use ivhs::linalg::{self, in_span};
use ivhs::poly::HomogeneousPoly;
use ivhs::singularities::{
    adjoint_conditions, geometric_genus, h1_defect, point_conditions, sections_of_ideal,
    verify_singular, DegreeData, Flavor, SingType, SingularPoint, WeightedScheme,
};
use ivhs::torelli::{
    deformation_space, period_kernel, torelli_verdict_checked, Domain, TorelliReport, TupleLayout,
    Verdict,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fp() -> PrimeField {
    PrimeField::new(ivhs::DEFAULT_PRIME).unwrap()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn hilbert_oracle<F: Field>(field: &F, d: usize) -> Result<(), String> {
    let model =
        JacobianModel::new(PolySystem::new(vec![generate::fermat(field, 3, d)]).map_err(err)?)
            .map_err(err)?;
    let up_to = 3 * (d - 2) + 2;
    let got = model.hilbert_function(up_to);
    let want = regular_sequence_series(&[d - 1; 3], up_to);
    ensure(
        got == want,
        format!("d={d} over {}: {got:?} != {want:?}", field.spec()),
    )
}

fn criterion_1() -> Outcome {
    for d in 3..=5 {
        hilbert_oracle(&Rationals, d)?;
        hilbert_oracle(&fp(), d)?;
    }
    Ok("Fermat d=3,4,5 over Q and F_65537 match the series".into())
}

fn criterion_2() -> Outcome {
    let mut notes = Vec::new();
    for d in 3..=5 {
        let model =
            JacobianModel::new(PolySystem::new(vec![generate::fermat(&Rationals, 3, d)]).unwrap())
                .map_err(err)?;
        let rep = model.socle_report(3 * (d - 2) + 2).map_err(err)?;
        let sigma = 3 * (d - 2);
        ensure(
            rep.sigma_observed == Some(sigma),
            format!("d={d}: sigma {:?}", rep.sigma_observed),
        )?;
        ensure(
            rep.top_dimension == Some(1),
            format!("d={d}: h_sigma {:?}", rep.top_dimension),
        )?;
        ensure(
            rep.symmetric,
            format!("d={d}: Hilbert function not symmetric"),
        )?;
        ensure(
            (0..=sigma).all(|a| rep.pairing_perfect.get(&a) == Some(&true)),
            format!("d={d}: pairing {:?}", rep.pairing_perfect),
        )?;
        ensure(
            rep.sigma_formula == d as i64 - 2 && !rep.notes.is_empty(),
            format!("d={d}: formula value {} not flagged", rep.sigma_formula),
        )?;
        notes.push(format!(
            "d={d}: sigma {sigma} vs formula {}",
            rep.sigma_formula
        ));
    }
    Ok(notes.join("; "))
}

fn criterion_3() -> Outcome {
    let f = fp();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0;
    for case in 0..100 {
        let n_vars = if case % 2 == 0 { 3 } else { 4 };
        let d = 3 + case % 4;
        let form = generate::random_form(&f, n_vars, d, &mut rng);
        let euler = (0..n_vars)
            .map(|j| {
                HomogeneousPoly::var(&f, n_vars, j)
                    .multiply(&form.partial(j))
                    .unwrap()
            })
            .try_fold(HomogeneousPoly::zero(&f, n_vars, d), |acc, t| acc.add(&t))
            .map_err(err)?;
        ensure(
            euler == form.scale(&f.from_int(d as i64)),
            format!("case {case}: Euler identity"),
        )?;

        let system = PolySystem::new(vec![form.clone()]).map_err(err)?;
        let model = JacobianModel::new(system.clone()).map_err(err)?;
        for a in 0..=2 {
            ensure(
                model.mult_map(&form, a).map_err(err)?.matrix.is_zero(),
                format!("case {case}: multiplication by F nonzero on R_{a}"),
            )?;
        }
        let z = WeightedScheme::empty(system.clone());
        let def = deformation_space(&system, &z).map_err(err)?;
        let kernel = period_kernel(&model, &z, Domain::Full).map_err(err)?;
        let layout = TupleLayout::of(&system);
        for _ in 0..20 {
            let v = generate::random_vector_field(&f, n_vars, &mut rng);
            let g = vec![form.apply_vector_field(&v).map_err(err)?];
            let vec = layout.to_vector(&g).map_err(err)?;
            ensure(
                in_span(&def.basis, &vec).map_err(err)?.is_some(),
                format!("case {case}: v(F) outside the deformation space"),
            )?;
            ensure(
                in_span(&kernel.basis, &vec).map_err(err)?.is_some(),
                format!("case {case}: v(F) outside the period kernel"),
            )?;
            checked += 1;
        }
    }
    Ok(format!("100 forms, {checked} vector fields"))
}

/// Random quintic over F_65537 with a node at (0:0:1), drawn from `seed`.
fn nodal_quintic(
    seed: u64,
) -> Result<(JacobianModel<PrimeField>, WeightedScheme<PrimeField>), String> {
    let f = fp();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let form = generate::random_form_singular_at(&f, 3, 5, &[2], &mut rng);
    let check = verify_singular(&form, &[0, 0, 1], &SingType::A1).map_err(err)?;
    ensure(check.consistent, "the node is not an ordinary double point")?;
    let node = SingularPoint::new(&f, vec![0, 0, 1], SingType::A1).map_err(err)?;
    let system = PolySystem::new(vec![form]).map_err(err)?;
    let model = JacobianModel::new(system.clone()).map_err(err)?;
    Ok((
        model,
        WeightedScheme::new(system, vec![node], Flavor::Equisingular),
    ))
}

fn plane_torelli_report(seed: u64) -> Result<TorelliReport, String> {
    let (model, z) = nodal_quintic(seed)?;
    torelli_verdict_checked(&model, &z, Domain::Full).map_err(err)
}

fn criterion_4() -> Outcome {
    let r = plane_torelli_report(4)?;
    let recheck = r
        .rational_recheck
        .map(|v| format!(" (rational recheck: {v})"))
        .unwrap_or_default();
    ensure(
        r.verdict == Verdict::InjectiveModTrivial,
        format!("verdict {}{recheck}", r.verdict),
    )?;
    ensure(
        r.dim_kernel == 9 && r.dim_trivial == 9,
        format!("dim_kernel {} dim_trivial {}", r.dim_kernel, r.dim_trivial),
    )?;
    ensure(
        r.h1_defect == Some(0),
        format!("h1_defect {:?}", r.h1_defect),
    )?;
    Ok(format!(
        "dim_def {} dim_kernel {} dim_trivial {} h1_defect 0",
        r.dim_def, r.dim_kernel, r.dim_trivial
    ))
}

fn criterion_5() -> Outcome {
    let q = Rationals;
    let form = generate::fermat(&q, 3, 4);
    let system = PolySystem::new(vec![form.clone()]).unwrap();
    let model = JacobianModel::new(system.clone()).map_err(err)?;
    let kernel =
        period_kernel(&model, &WeightedScheme::empty(system.clone()), Domain::Full).map_err(err)?;
    let ideal = model.ideal_piece(4);
    ensure(kernel.dim() == 9, format!("kernel dim {}", kernel.dim()))?;
    ensure(
        linalg::contains_all(&ideal.basis, &kernel.basis).map_err(err)?
            && linalg::contains_all(&kernel.basis, &ideal.basis).map_err(err)?,
        "kernel differs from (J_F)_4",
    )?;
    let layout = TupleLayout::of(&system);
    let euler = layout.to_vector(&[form]).map_err(err)?;
    ensure(
        in_span(&kernel.basis, &euler).map_err(err)?.is_some(),
        "Euler line outside the kernel",
    )?;
    let modulo_euler = kernel.dim() - 1;
    ensure(modulo_euler == 8, format!("{modulo_euler} != dim sl_3"))?;
    Ok("kernel = (J_F)_4, dim 9, 8 modulo the Euler line".into())
}

/// Random (2,3) complete intersection in P^3 over F_65537 from `seed`.
fn ci_report(seed: u64) -> Result<TorelliReport, String> {
    let f = fp();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let system = PolySystem::new(vec![
        generate::random_form(&f, 4, 2, &mut rng),
        generate::random_form(&f, 4, 3, &mut rng),
    ])
    .map_err(err)?;
    let model = JacobianModel::new(system.clone()).map_err(err)?;
    torelli_verdict_checked(&model, &WeightedScheme::empty(system), Domain::Full).map_err(err)
}

fn criterion_6() -> Outcome {
    let r = ci_report(6)?;
    let g = r.geometric_genus.ok_or("no genus")?;
    let summary = format!(
        "dim_def {} dim_trivial {} dim_kernel {} verdict {} moduli {} g {g} target quotient dim {}",
        r.dim_def, r.dim_trivial, r.dim_kernel, r.verdict, r.moduli, r.target_quotient_dim
    );
    ensure(r.dim_def == 30, summary.clone())?;
    ensure(r.dim_trivial == 21, summary.clone())?;
    ensure(r.dim_kernel == 21, summary.clone())?;
    ensure(r.verdict == Verdict::InjectiveModTrivial, summary.clone())?;
    ensure(
        g == 4 && r.moduli == 9 && r.moduli == 3 * g - 3,
        summary.clone(),
    )?;
    Ok(summary)
}

fn criterion_7() -> Outcome {
    let f = fp();
    for d in 3..=5 {
        let model = JacobianModel::new(PolySystem::new(vec![generate::fermat(&f, 3, d)]).unwrap())
            .map_err(err)?;
        let l = generate::sum_of_variables(&f, 3);
        let rep = model.slp_check_forms(&[l]).map_err(err)?;
        ensure(
            rep.pass && rep.failures.is_empty(),
            format!("Fermat d={d}: {:?}", rep.failures),
        )?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut maps = 0;
    for i in 0..5 {
        let form = generate::random_form(&f, 3, 5, &mut rng);
        let model = JacobianModel::new(PolySystem::new(vec![form]).unwrap()).map_err(err)?;
        let rep = model.slp_check(1, rng.gen()).map_err(err)?;
        ensure(
            rep.pass && rep.failures.is_empty(),
            format!("random quintic {i}: {:?}", rep.failures),
        )?;
        maps += rep.maps_checked;
    }
    Ok(format!(
        "Fermat d=3,4,5 and 5 random quintics; {maps} random-quintic maps at full rank"
    ))
}

fn criterion_8() -> Outcome {
    let q = Rationals;
    let parse = |s: &str| ivhs::cli::parse_poly(&q, 3, s).unwrap();
    let point = |c: [i64; 3], t: SingType| {
        SingularPoint::new(&q, c.map(|x| q.from_int(x)).to_vec(), t).unwrap()
    };
    let verified =
        |f: &HomogeneousPoly<Rationals>, pts: &[SingularPoint<Rationals>]| -> Result<(), String> {
            for p in pts {
                let c = verify_singular(f, &p.coords, &p.sing_type).map_err(err)?;
                ensure(
                    c.consistent,
                    format!("{} is not of type {}", p.describe(&q), p.sing_type),
                )?;
            }
            Ok(())
        };
    let genus =
        |d: usize, pts: &[SingularPoint<Rationals>]| geometric_genus(&DegreeData::Plane(d), pts);

    let cubic = parse("x1^2 x2 - x0^3 - x0^2 x2");
    let node = vec![point([0, 0, 1], SingType::A1)];
    verified(&cubic, &node)?;
    ensure(genus(3, &node) == Ok(0), "nodal cubic")?;

    let three = parse("x0^2 x1^2 + x1^2 x2^2 + x0^2 x2^2 + x0^2 x1 x2 + x0 x1^2 x2 + x0 x1 x2^2");
    let nodes = vec![
        point([1, 0, 0], SingType::A1),
        point([0, 1, 0], SingType::A1),
        point([0, 0, 1], SingType::A1),
    ];
    verified(&three, &nodes)?;
    ensure(genus(4, &nodes) == Ok(0), "three-node quartic")?;

    let mixed = parse("x0^2 x1^2 + x1^2 x2^2 + x0 x2^3");
    let pts = vec![
        point([0, 1, 0], SingType::A1),
        point([1, 0, 0], SingType::A2),
    ];
    verified(&mixed, &pts)?;
    ensure(genus(4, &pts) == Ok(1), "node and cusp quartic")?;

    ensure(genus(5, &[]) == Ok(6), "smooth quintic")?;

    let quartic = parse("x0 x1 x2^2 + x0^3 x2 + x1^3 x2 + x0^4 - x1^4 + 2 x0^2 x1^2");
    let node = vec![point([0, 0, 1], SingType::A1)];
    verified(&quartic, &node)?;
    let g = genus(4, &node).map_err(err)?;
    let adjoint =
        sections_of_ideal(&adjoint_conditions(&q, 3, &node, 1).map_err(err)?, 3, 1).map_err(err)?;
    ensure(
        adjoint.dim() == 2 && g == 2,
        format!("adjoint sections {} vs genus {g}", adjoint.dim()),
    )?;
    Ok("genera 0, 0, 1, 6; one-node quartic adjoint sections 2 = g".into())
}

fn criterion_9() -> Outcome {
    let q = Rationals;
    let pts: Vec<Vec<_>> = (0..4)
        .map(|t| vec![q.from_int(t), q.from_int(2 * t + 1), q.one()])
        .collect();
    let cond = point_conditions(&q, 3, &pts, 2).map_err(err)?;
    ensure(cond.rank() == 3, format!("rank {}", cond.rank()))?;
    let defect = h1_defect(&cond, 4).map_err(err)?;
    ensure(defect == 1, format!("collinear defect {defect}"))?;
    let one = point_conditions(&q, 3, &pts[..1], 1).map_err(err)?;
    let defect = h1_defect(&one, 1).map_err(err)?;
    ensure(defect == 0, format!("single point defect {defect}"))?;
    Ok("four collinear points on conics: rank 3, defect 1; one point on lines: defect 0".into())
}

fn criterion_10() -> Outcome {
    let json = |r: &TorelliReport| serde_json::to_string_pretty(r).unwrap();
    let plane = (
        json(&plane_torelli_report(4)?),
        json(&plane_torelli_report(4)?),
    );
    ensure(plane.0 == plane.1, "plane Torelli reports differ")?;
    let ci = (json(&ci_report(6)?), json(&ci_report(6)?));
    ensure(ci.0 == ci.1, "complete intersection reports differ")?;
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    for name in ["one_node_quintic", "ci_2_3"] {
        let text = std::fs::read_to_string(dir.join(format!("{name}.toml"))).unwrap();
        let config =
            ivhs::cli::parse_config(&text, Some(ivhs::cli::Command::Torelli)).map_err(err)?;
        let a = ivhs::cli::emit(&ivhs::cli::run(&config), ivhs::cli::OutputFormat::Json);
        let b = ivhs::cli::emit(&ivhs::cli::run(&config), ivhs::cli::OutputFormat::Json);
        ensure(a == b, format!("{name}: CLI reports differ"))?;
    }
    Ok("byte-identical reports for repeated seeded runs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("hilbert oracle", criterion_1),
        ("gorenstein shape", criterion_2),
        ("euler and trivial kernel", criterion_3),
        ("plane torelli, one-node quintic", criterion_4),
        ("plane kernel identity", criterion_5),
        ("complete intersection torelli (2,3)", criterion_6),
        ("strong lefschetz", criterion_7),
        ("genus and adjoint duality", criterion_8),
        ("h1 machinery", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} [{secs:.2}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} [{secs:.2}s]: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
