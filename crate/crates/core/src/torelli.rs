//! Deformation spaces, trivial directions and the infinitesimal period map.
//!
//! A first-order deformation of `(F_1, ..., F_r)` is a tuple `(G_1, ..., G_r)`
//! with `deg G_i = d_i`, stored as one coordinate vector in
//! `S_{d_1} + ... + S_{d_r}`. Its period image is multiplication by
//! `Q = sum_i G_i prod_{j != i} F_j` from the forms `H` of degree
//! `a = sum d_i - N - 1` into the Jacobian ring in degree `a + sum d_i`. The
//! kernel consists of the tuples with `H * Q in J` for every test form `H`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::generate;
use crate::jacobian::{JacobianModel, PolySystem};
use crate::linalg::{self, Matrix};
use crate::poly::{monomial_basis, slice_dim, GradedSubspace, HomogeneousPoly, SliceBasis};
use crate::singularities::{
    self, adjoint_conditions, geometric_genus, h1_defect, sections_of_ideal, DegreeData, Flavor,
    SingularPoint, WeightedScheme,
};

/// Test forms used for the period map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Domain {
    /// Every form of the canonical degree.
    Full,
    /// Only forms satisfying the adjoint conditions.
    Adjoint,
}

impl Domain {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Domain::Full),
            "adjoint" => Ok(Domain::Adjoint),
            other => Err(Error::Config(format!("unknown domain `{other}`"))),
        }
    }
}

impl std::fmt::Display for Domain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Domain::Full => "full",
            Domain::Adjoint => "adjoint",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    InjectiveModTrivial,
    Violated,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::InjectiveModTrivial => "injective-mod-trivial",
            Verdict::Violated => "violated",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Layout of the direct sum `S_{d_1} + ... + S_{d_r}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleLayout {
    pub n_vars: usize,
    pub degrees: Vec<usize>,
    pub offsets: Vec<usize>,
    pub total: usize,
}

impl TupleLayout {
    pub fn new(n_vars: usize, degrees: &[usize]) -> Self {
        let mut offsets = Vec::with_capacity(degrees.len());
        let mut total = 0;
        for &d in degrees {
            offsets.push(total);
            total += slice_dim(n_vars, d);
        }
        TupleLayout {
            n_vars,
            degrees: degrees.to_vec(),
            offsets,
            total,
        }
    }

    pub fn of<F: Field>(system: &PolySystem<F>) -> Self {
        Self::new(system.n_vars(), &system.degrees())
    }

    pub fn to_vector<F: Field>(&self, tuple: &[HomogeneousPoly<F>]) -> Result<Vec<F::Elem>> {
        if tuple.len() != self.degrees.len() {
            return Err(Error::Shape(format!(
                "tuple of length {} for {} equations",
                tuple.len(),
                self.degrees.len()
            )));
        }
        let mut v = Vec::with_capacity(self.total);
        for (g, &d) in tuple.iter().zip(&self.degrees) {
            v.extend(g.to_vector(&SliceBasis::new(self.n_vars, d))?);
        }
        Ok(v)
    }

    pub fn to_tuple<F: Field>(&self, field: &F, v: &[F::Elem]) -> Vec<HomogeneousPoly<F>> {
        self.degrees
            .iter()
            .zip(&self.offsets)
            .map(|(&d, &o)| {
                let sb = SliceBasis::new(self.n_vars, d);
                HomogeneousPoly::from_vector(field, &sb, &v[o..o + sb.dim()])
            })
            .collect()
    }
}

/// Equisingular first-order deformations, one section space per equation.
#[derive(Debug, Clone, PartialEq)]
pub struct DeformationSpace<F: Field> {
    pub slots: Vec<GradedSubspace<F>>,
    pub layout: TupleLayout,
    /// Block-diagonal basis in tuple coordinates.
    pub basis: Matrix<F>,
}

impl<F: Field> DeformationSpace<F> {
    pub fn total_dim(&self) -> usize {
        self.basis.cols()
    }
}

pub fn deformation_space<F: Field>(
    system: &PolySystem<F>,
    z: &WeightedScheme<F>,
) -> Result<DeformationSpace<F>> {
    let field = system.field();
    let layout = TupleLayout::of(system);
    let z = z.with_flavor(Flavor::Equisingular);
    let slots = system
        .degrees()
        .iter()
        .map(|&d| sections_of_ideal(&z.conditions(d)?, system.n_vars(), d))
        .collect::<Result<Vec<_>>>()?;
    let total: usize = slots.iter().map(|s| s.dim()).sum();
    let mut basis = Matrix::zeros(field, layout.total, total);
    let mut col = 0;
    for (slot, &off) in slots.iter().zip(&layout.offsets) {
        for j in 0..slot.dim() {
            for i in 0..slot.ambient_dim() {
                basis.set(off + i, col, slot.basis.get(i, j).clone());
            }
            col += 1;
        }
    }
    Ok(DeformationSpace {
        slots,
        layout,
        basis,
    })
}

/// Deformations induced by ambient vector fields and by changes of the
/// ideal's generators.
#[derive(Debug, Clone, PartialEq)]
pub struct TrivialSpace<F: Field> {
    pub layout: TupleLayout,
    pub vector_field_generators: usize,
    pub ideal_change_generators: usize,
    pub generators: Vec<Vec<F::Elem>>,
    pub basis: Matrix<F>,
}

impl<F: Field> TrivialSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

/// Tuple `(v(F_1), ..., v(F_r))` for a vector field given by its coefficients.
pub fn vector_field_tuple<F: Field>(
    system: &PolySystem<F>,
    v: &[HomogeneousPoly<F>],
) -> Result<Vec<HomogeneousPoly<F>>> {
    system
        .forms()
        .iter()
        .map(|f| f.apply_vector_field(v))
        .collect()
}

pub fn trivial_space<F: Field>(system: &PolySystem<F>) -> Result<TrivialSpace<F>> {
    let field = system.field();
    let n = system.n_vars();
    let layout = TupleLayout::of(system);
    let mut generators = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = generate::basis_vector_field(field, n, i, j);
            generators.push(layout.to_vector(&vector_field_tuple(system, &v)?)?);
        }
    }
    let vector_field_generators = generators.len();
    let forms = system.forms();
    for (i, fi) in forms.iter().enumerate() {
        for fj in forms {
            if fi.degree() < fj.degree() {
                continue;
            }
            for h in monomial_basis(n, fi.degree() - fj.degree()) {
                let mut tuple: Vec<_> = forms
                    .iter()
                    .map(|f| HomogeneousPoly::zero(field, n, f.degree()))
                    .collect();
                tuple[i] = HomogeneousPoly::monomial(field, h).multiply(fj)?;
                generators.push(layout.to_vector(&tuple)?);
            }
        }
    }
    let ideal_change_generators = generators.len() - vector_field_generators;
    let m = Matrix::from_rows(field, layout.total, generators.clone())?;
    let basis = linalg::echelon(&m).rref.transpose();
    Ok(TrivialSpace {
        layout,
        vector_field_generators,
        ideal_change_generators,
        generators,
        basis,
    })
}

/// `Q = sum_i G_i prod_{j != i} F_j`.
pub fn q_of<F: Field>(
    system: &PolySystem<F>,
    g: &[HomogeneousPoly<F>],
) -> Result<HomogeneousPoly<F>> {
    let forms = system.forms();
    if g.len() != forms.len() {
        return Err(Error::Shape(format!(
            "tuple of length {} for {} equations",
            g.len(),
            forms.len()
        )));
    }
    let total: usize = system.degrees().iter().sum();
    let mut q = HomogeneousPoly::zero(system.field(), system.n_vars(), total);
    for (i, gi) in g.iter().enumerate() {
        if gi.degree() != forms[i].degree() && !gi.is_zero() {
            return Err(Error::Shape(format!(
                "G_{i} has degree {} but F_{i} has degree {}",
                gi.degree(),
                forms[i].degree()
            )));
        }
        let mut term = gi.clone();
        for (j, fj) in forms.iter().enumerate() {
            if j != i {
                term = term.multiply(fj)?;
            }
        }
        if term.is_zero() {
            continue;
        }
        q = q.add(&term)?;
    }
    Ok(q)
}

/// Test forms `H` spanning the domain of the period map.
pub fn domain_forms<F: Field>(
    system: &PolySystem<F>,
    points: &[SingularPoint<F>],
    domain: Domain,
) -> Result<Vec<HomogeneousPoly<F>>> {
    let a = system.canonical_degree();
    if a < 0 {
        return Ok(Vec::new());
    }
    let a = a as usize;
    let field = system.field();
    let n = system.n_vars();
    match domain {
        Domain::Full => Ok(monomial_basis(n, a)
            .into_iter()
            .map(|m| HomogeneousPoly::monomial(field, m))
            .collect()),
        Domain::Adjoint => {
            let cond = adjoint_conditions(field, n, points, a)?;
            Ok(sections_of_ideal(&cond, n, a)?.polys())
        }
    }
}

/// Kernel of the period map inside the deformation space.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodKernel<F: Field> {
    pub deformation: DeformationSpace<F>,
    pub domain_degree: i64,
    pub target_degree: i64,
    pub domain_dim: usize,
    pub target_quotient_dim: usize,
    /// Kernel basis as columns in tuple coordinates.
    pub basis: Matrix<F>,
}

impl<F: Field> PeriodKernel<F> {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn tuples(&self) -> Vec<Vec<HomogeneousPoly<F>>> {
        let f = self.basis.field();
        self.basis
            .columns()
            .iter()
            .map(|c| self.deformation.layout.to_tuple(f, c))
            .collect()
    }
}

/// Columns of the linear system in `G`: for each deformation basis tuple,
/// the stacked normal forms of `H_s * Q(G)` over all test forms.
fn period_matrix<F: Field>(
    model: &JacobianModel<F>,
    def: &DeformationSpace<F>,
    tests: &[HomogeneousPoly<F>],
) -> Result<Matrix<F>> {
    let system = model.system();
    let field = system.field();
    let sum_d: usize = system.degrees().iter().sum();
    let a = tests.first().map_or(0, |h| h.degree());
    let hb = model.hilbert_value(a + sum_d);
    let mut columns = Vec::with_capacity(def.total_dim());
    for t in 0..def.total_dim() {
        let g = def.layout.to_tuple(field, &def.basis.column(t));
        let q = q_of(system, &g)?;
        let mut col = Vec::with_capacity(tests.len() * hb);
        for h in tests {
            col.extend(model.reduce(&h.multiply(&q)?)?);
        }
        columns.push(col);
    }
    Matrix::from_columns(field, tests.len() * hb, &columns)
}

pub fn period_kernel<F: Field>(
    model: &JacobianModel<F>,
    z: &WeightedScheme<F>,
    domain: Domain,
) -> Result<PeriodKernel<F>> {
    let system = model.system();
    let def = deformation_space(system, z)?;
    let tests = domain_forms(system, &z.points, domain)?;
    let a = system.canonical_degree();
    let sum_d: usize = system.degrees().iter().sum();
    let b = a + sum_d as i64;
    if tests.is_empty() {
        return Ok(PeriodKernel {
            basis: def.basis.clone(),
            deformation: def,
            domain_degree: a,
            target_degree: b,
            domain_dim: 0,
            target_quotient_dim: 0,
        });
    }
    let m = period_matrix(model, &def, &tests)?;
    let coeffs = linalg::kernel_basis(&m);
    let basis = def.basis.mul(&coeffs)?;
    Ok(PeriodKernel {
        domain_dim: tests.len(),
        target_quotient_dim: model.hilbert_value(b as usize),
        deformation: def,
        domain_degree: a,
        target_degree: b,
        basis,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorelliReport {
    pub n_equations: usize,
    pub ambient_dim: usize,
    pub degrees: Vec<usize>,
    pub domain_used: Domain,
    pub domain_degree: i64,
    pub target_degree: i64,
    pub domain_dim: usize,
    pub target_quotient_dim: usize,
    pub dim_def: usize,
    pub dim_trivial: usize,
    pub dim_kernel: usize,
    pub trivial_in_kernel: bool,
    pub kernel_in_trivial: bool,
    pub verdict: Verdict,
    pub reason: Option<String>,
    pub witness: Option<Vec<String>>,
    /// `dim_def - dim_trivial`: expected number of moduli.
    pub moduli: i64,
    /// `dim_kernel - dim_trivial`.
    pub unexplained_kernel: i64,
    pub geometric_genus: Option<i64>,
    pub h1_defect: Option<usize>,
    pub scheme_length: usize,
    pub singular_points: usize,
    pub convention: String,
    pub rational_recheck: Option<Verdict>,
}

pub fn torelli_verdict<F: Field>(
    model: &JacobianModel<F>,
    z: &WeightedScheme<F>,
    domain: Domain,
) -> Result<TorelliReport> {
    let system = model.system();
    let field = system.field();
    let kernel = period_kernel(model, z, domain)?;
    let trivial = trivial_space(system)?;

    let kernel_in_trivial = linalg::contains_all(&trivial.basis, &kernel.basis)?;
    let trivial_in_kernel = linalg::contains_all(&kernel.basis, &trivial.basis)?;
    let witness = if kernel_in_trivial {
        None
    } else {
        let cols = kernel.basis.columns();
        let mut found = None;
        for c in cols {
            if linalg::in_span(&trivial.basis, &c)?.is_none() {
                found = Some(
                    kernel
                        .deformation
                        .layout
                        .to_tuple(field, &c)
                        .iter()
                        .map(|p| p.to_string())
                        .collect(),
                );
                break;
            }
        }
        found
    };

    let (verdict, reason) = if kernel.domain_dim == 0 {
        (
            Verdict::Inconclusive,
            Some("no test forms: the canonical-degree domain is empty".to_string()),
        )
    } else if kernel_in_trivial {
        (Verdict::InjectiveModTrivial, None)
    } else {
        (Verdict::Violated, None)
    };

    let equisingular = z.with_flavor(Flavor::Equisingular);
    let h1 = if kernel.domain_degree >= 0 {
        let cond = equisingular.conditions(kernel.domain_degree as usize)?;
        Some(h1_defect(&cond, equisingular.length())?)
    } else {
        None
    };
    let genus = match DegreeData::of_system(system) {
        Some(data) => Some(geometric_genus(&data, &z.points)?),
        None => None,
    };
    let dim_def = kernel.deformation.total_dim();
    Ok(TorelliReport {
        n_equations: system.len(),
        ambient_dim: system.ambient_dim(),
        degrees: system.degrees(),
        domain_used: domain,
        domain_degree: kernel.domain_degree,
        target_degree: kernel.target_degree,
        domain_dim: kernel.domain_dim,
        target_quotient_dim: kernel.target_quotient_dim,
        dim_def,
        dim_trivial: trivial.dim(),
        dim_kernel: kernel.dim(),
        trivial_in_kernel,
        kernel_in_trivial,
        verdict,
        reason,
        witness,
        moduli: dim_def as i64 - trivial.dim() as i64,
        unexplained_kernel: kernel.dim() as i64 - trivial.dim() as i64,
        geometric_genus: genus,
        h1_defect: h1,
        scheme_length: equisingular.length(),
        singular_points: z.points.len(),
        convention: singularities::EQUISINGULAR_CONVENTION.to_string(),
        rational_recheck: None,
    })
}

/// Lifts a system and its points to the rationals.
pub fn lift_to_rationals<F: Field>(z: &WeightedScheme<F>) -> Result<WeightedScheme<Rationals>> {
    let q = Rationals;
    let system = z.system.map_field(&q)?;
    let points = z
        .points
        .iter()
        .map(|p| {
            let coords = p
                .coords
                .iter()
                .map(|x| crate::field::transfer(z.system.field(), &q, x))
                .collect::<Result<Vec<_>>>()?;
            let lift_ops = |ops: &Option<Vec<singularities::DiffOp<F>>>| -> Result<_> {
                ops.as_ref()
                    .map(|ops| {
                        ops.iter()
                            .map(|op| {
                                Ok(singularities::DiffOp {
                                    terms: op
                                        .terms
                                        .iter()
                                        .map(|(m, c)| {
                                            Ok((
                                                m.clone(),
                                                crate::field::transfer(z.system.field(), &q, c)?,
                                            ))
                                        })
                                        .collect::<Result<Vec<_>>>()?,
                                })
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .transpose()
            };
            Ok(SingularPoint {
                coords,
                sing_type: p.sing_type.clone(),
                delta: p.delta,
                tjurina: p.tjurina,
                conditions: lift_ops(&p.conditions)?,
                adjoint_conditions: lift_ops(&p.adjoint_conditions)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightedScheme::new(system, points, z.flavor))
}

/// [`torelli_verdict`], re-run over the rationals when a prime-field
/// computation reports a violation. The lifted system uses the canonical
/// integer representatives of the coefficients, so the singular points
/// must still be singular over the rationals for the recheck to apply.
pub fn torelli_verdict_checked<F: Field>(
    model: &JacobianModel<F>,
    z: &WeightedScheme<F>,
    domain: Domain,
) -> Result<TorelliReport> {
    let mut report = torelli_verdict(model, z, domain)?;
    if report.verdict == Verdict::Violated && model.field().characteristic() != 0 {
        let lifted = lift_to_rationals(z)?;
        let recheck = JacobianModel::new(lifted.system.clone())
            .and_then(|m| torelli_verdict(&m, &lifted, domain));
        report.rational_recheck = Some(match recheck {
            Ok(r) => r.verdict,
            Err(_) => Verdict::Inconclusive,
        });
    }
    Ok(report)
}
