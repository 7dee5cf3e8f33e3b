//! Command dispatch: builds the core objects from a configuration and
//! collects each command's results into a report.

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::jacobian::{regular_sequence_series, JacobianModel, PolySystem};
use crate::poly::{slice_dim, span, GradedSubspace, HomogeneousPoly};
use crate::singularities::{
    self, adjoint_conditions, geometric_genus, h1_defect, point_conditions, sections_of_ideal,
    system_equisingular_conditions, verify_singular_system, DegreeData, Flavor, SingType,
    SingularPoint, WeightedScheme,
};
use crate::torelli::{torelli_verdict_checked, Domain};

use super::cache::Cache;
use super::config::{Command, PointSpec, RunConfig, ScalarText, SectionFlavor};
use super::parse::{parse_operator, parse_poly_with_degree, parse_scalar};
use super::report::{Report, ReportError, TOOL, VERSION};

/// SHA-256 over the sorted-key JSON of everything that influences results.
pub fn input_hash(config: &RunConfig) -> String {
    let value = serde_json::to_value(config).expect("configs serialize");
    let canonical = serde_json::to_string(&value).expect("values serialize");
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

/// Runs one command without consulting any cache.
pub fn run(config: &RunConfig) -> Report {
    let results = match config.field {
        FieldSpec::Rationals => dispatch(&Rationals, config),
        FieldSpec::PrimeField { characteristic } => {
            PrimeField::new(characteristic).and_then(|f| dispatch(&f, config))
        }
    };
    let (results, error) = match results {
        Ok(v) => (Some(v), None),
        Err(e) => (None, Some(ReportError::from(&e))),
    };
    Report {
        tool: TOOL.into(),
        version: VERSION.into(),
        command: config.command.name().into(),
        field: config.field.to_string(),
        input_hash: input_hash(config),
        seed: config.seed(),
        assumptions: config.options.assumptions.clone().unwrap_or_default(),
        results,
        error,
        cached: false,
    }
}

/// Runs one command through `cache`. A failed cache write is not an error;
/// the report is still returned.
pub fn run_cached(config: &RunConfig, cache: Option<&Cache>) -> Report {
    let Some(cache) = cache else {
        return run(config);
    };
    if let Some(hit) = cache.load(&input_hash(config)) {
        return hit;
    }
    let report = run(config);
    let _ = cache.store(&report);
    report
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("results serialize")
}

fn build_system<F: Field>(field: &F, config: &RunConfig) -> Result<PolySystem<F>> {
    let forms = config
        .system
        .iter()
        .map(|s| parse_poly_with_degree(field, config.n_vars(), &s.poly, s.degree))
        .collect::<Result<Vec<_>>>()?;
    PolySystem::new(forms)
}

fn build_coords<F: Field>(field: &F, coords: &[ScalarText]) -> Result<Vec<F::Elem>> {
    coords
        .iter()
        .map(|c| parse_scalar(field, &c.as_text()))
        .collect()
}

fn build_point<F: Field>(field: &F, n_vars: usize, spec: &PointSpec) -> Result<SingularPoint<F>> {
    let coords = build_coords(field, &spec.coords)?;
    let ops = |texts: &Option<Vec<String>>| -> Result<Option<Vec<_>>> {
        texts
            .as_ref()
            .map(|ts| {
                ts.iter()
                    .map(|t| parse_operator(field, n_vars, t))
                    .collect()
            })
            .transpose()
    };
    let conditions = ops(&spec.conditions)?;
    let adjoint = ops(&spec.adjoint_conditions)?;
    let mut point = match SingType::parse(&spec.sing_type) {
        SingType::User(name) => {
            let conditions = conditions.ok_or_else(|| Error::MissingConditions(name.clone()))?;
            let delta = spec.delta.ok_or_else(|| {
                Error::Config(format!("singular point of type {name} needs `delta`"))
            })?;
            return SingularPoint::user(field, coords, &name, delta, conditions, adjoint);
        }
        t => SingularPoint::new(field, coords, t)?,
    };
    if let Some(d) = spec.delta {
        if d != point.delta {
            return Err(Error::Config(format!(
                "delta {d} contradicts type {} (delta {})",
                point.sing_type, point.delta
            )));
        }
    }
    if let Some(c) = conditions {
        point.tjurina = c.len();
        point.conditions = Some(c);
    }
    point.adjoint_conditions = adjoint;
    Ok(point)
}

fn build_points<F: Field>(field: &F, config: &RunConfig) -> Result<Vec<SingularPoint<F>>> {
    config
        .singular_points
        .iter()
        .map(|p| build_point(field, config.n_vars(), p))
        .collect()
}

/// Verifies every point against the system and returns the per-point checks.
fn check_points<F: Field>(system: &PolySystem<F>, points: &[SingularPoint<F>]) -> Result<Value> {
    let mut out = Vec::new();
    for p in points {
        let check = verify_singular_system(system, &p.coords, &p.sing_type)?;
        out.push(json!({
            "point": p.describe(system.field()),
            "type": p.sing_type.to_string(),
            "delta": p.delta,
            "tjurina": p.tjurina,
            "is_singular": check.is_singular,
            "hessian_rank": check.hessian_rank,
            "consistent": check.consistent,
        }));
    }
    Ok(Value::Array(out))
}

fn polys_text<F: Field>(ps: &[HomogeneousPoly<F>]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

/// One past the socle degree `n_vars * (d - 2)` of a single form of the
/// largest degree.
fn default_bound<F: Field>(system: &PolySystem<F>) -> usize {
    let d = system.degrees().into_iter().max().unwrap_or(2);
    system.n_vars() * (d - 2) + 1
}

fn dispatch<F: Field>(field: &F, config: &RunConfig) -> Result<Value> {
    let n_vars = config.n_vars();
    let opts = &config.options;
    if config.command == Command::IdealSections {
        return ideal_sections(field, config);
    }
    let system = build_system(field, config)?;
    let points = build_points(field, config)?;
    match config.command {
        Command::Hilbert => {
            let model = JacobianModel::new(system.clone())?;
            let up_to = opts.up_to.unwrap_or_else(|| default_bound(&system));
            let hilbert = model.hilbert_function(up_to);
            let identity = (0..=up_to).all(|k| model.dimension_identity_holds(k));
            let mut out = json!({
                "up_to": up_to,
                "hilbert": hilbert,
                "dimension_identity": identity,
            });
            if system.len() == 1 {
                let d = system.degrees()[0];
                let series = regular_sequence_series(&vec![d - 1; n_vars], up_to);
                out["regular_sequence_series"] = to_value(&series);
                out["matches_series"] = json!(series == hilbert);
            }
            Ok(out)
        }
        Command::Socle => {
            let model = JacobianModel::new(system.clone())?;
            let report = match opts.k_max {
                Some(k) => model.socle_report(k)?,
                None => model.find_socle(64)?,
            };
            Ok(to_value(&report))
        }
        Command::Slp => {
            let model = JacobianModel::new(system)?;
            let report = match &opts.lefschetz {
                Some(ls) => {
                    let forms = ls
                        .iter()
                        .map(|t| parse_poly_with_degree(field, n_vars, t, 1))
                        .collect::<Result<Vec<_>>>()?;
                    model.slp_check_forms(&forms)?
                }
                None => model.slp_check(opts.trials.unwrap_or(3), config.seed())?,
            };
            Ok(to_value(&report))
        }
        Command::Genus => genus(&system, &points),
        Command::Torelli => {
            let checks = check_points(&system, &points)?;
            let model = JacobianModel::new(system.clone())?;
            let z = WeightedScheme::new(system, points, Flavor::Equisingular);
            let domain = opts.domain.unwrap_or(Domain::Full);
            let mut out = to_value(&torelli_verdict_checked(&model, &z, domain)?);
            out["point_checks"] = checks;
            Ok(out)
        }
        Command::IdealSections => unreachable!("handled above"),
    }
}

/// The degree-`a` piece of the ideal generated by the system's forms.
fn system_ideal_piece<F: Field>(system: &PolySystem<F>, a: usize) -> Result<GradedSubspace<F>> {
    let field = system.field();
    let n = system.n_vars();
    let mut gens = Vec::new();
    for f in system.forms() {
        if f.degree() <= a {
            for m in crate::poly::monomial_basis(n, a - f.degree()) {
                gens.push(f.multiply(&HomogeneousPoly::monomial(field, m))?);
            }
        }
    }
    span(field, n, a, &gens)
}

fn genus<F: Field>(system: &PolySystem<F>, points: &[SingularPoint<F>]) -> Result<Value> {
    let data = DegreeData::of_system(system).ok_or_else(|| {
        Error::Config("genus needs a curve: one plane form or N-1 forms in P^N".into())
    })?;
    let checks = check_points(system, points)?;
    let p_a = data.arithmetic_genus();
    let g = geometric_genus(&data, points)?;
    let field = system.field();
    let n = system.n_vars();
    let a = system.canonical_degree();
    let mut out = json!({
        "curve": to_value(&data),
        "arithmetic_genus": p_a,
        "delta_total": points.iter().map(|p| p.delta).sum::<usize>(),
        "geometric_genus": g,
        "canonical_degree": a,
        "point_checks": checks,
    });
    if a >= 0 {
        let a = a as usize;
        let ideal = system_ideal_piece(system, a)?;
        let full = slice_dim(n, a) - ideal.dim();
        let cond = adjoint_conditions(field, n, points, a)?;
        let adjoint = sections_of_ideal(&cond, n, a)?;
        let mut both = adjoint.basis.columns();
        both.extend(ideal.basis.columns());
        let sum = GradedSubspace::from_vectors(field, n, a, &both);
        let adjoint_mod_ideal = sum.dim() - ideal.dim();
        let z = WeightedScheme::new(system.clone(), points.to_vec(), Flavor::Adjoint);
        out["canonical_forms_full"] = json!(full);
        out["canonical_forms_adjoint"] = json!(adjoint_mod_ideal);
        out["adjoint_h1_defect"] = json!(h1_defect(&cond, z.length())?);
        out["adjoint_matches_genus"] = json!(adjoint_mod_ideal as i64 == g);
    }
    Ok(out)
}

fn ideal_sections<F: Field>(field: &F, config: &RunConfig) -> Result<Value> {
    let n = config.n_vars();
    let k = config.options.degree.expect("validated");
    let flavor = config
        .options
        .flavor
        .unwrap_or(if config.singular_points.is_empty() {
            SectionFlavor::Points
        } else {
            SectionFlavor::Equisingular
        });
    let (cond, length) = match flavor {
        SectionFlavor::Points => {
            let pts = config
                .points
                .iter()
                .map(|p| build_coords(field, p))
                .collect::<Result<Vec<_>>>()?;
            (point_conditions(field, n, &pts, k)?, pts.len())
        }
        SectionFlavor::Adjoint => {
            let pts = build_points(field, config)?;
            let length = pts
                .iter()
                .map(|p| {
                    p.adjoint_conditions
                        .as_ref()
                        .map_or(p.delta.min(1), Vec::len)
                })
                .sum();
            (adjoint_conditions(field, n, &pts, k)?, length)
        }
        SectionFlavor::Equisingular => {
            if config.system.is_empty() {
                return Err(Error::Config(
                    "equisingular sections need the `system` the points lie on".into(),
                ));
            }
            let system = build_system(field, config)?;
            let pts = build_points(field, config)?;
            let z = WeightedScheme::new(system.clone(), pts.clone(), Flavor::Equisingular);
            (
                system_equisingular_conditions(&system, &pts, k)?,
                z.length(),
            )
        }
    };
    let sections = sections_of_ideal(&cond, n, k)?;
    Ok(json!({
        "degree": k,
        "flavor": to_value(&flavor),
        "slice_dim": slice_dim(n, k),
        "scheme_length": length,
        "conditions": cond.row_count(),
        "rank": cond.rank(),
        "sections_dim": sections.dim(),
        "h1_defect": h1_defect(&cond, length)?,
        "sections": polys_text(&sections.polys()),
        "convention": singularities::EQUISINGULAR_CONVENTION,
    }))
}
