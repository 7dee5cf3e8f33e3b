//! Singular points, the linear conditions they impose on forms, and the
//! derived section spaces, `h^1` defects and geometric genera.
//!
//! Equisingular conditions are Tjurina-ideal membership at each point. For
//! a node (A1) that is vanishing at the point. For a cusp (A2) it is
//! vanishing plus vanishing of the derivative along the kernel of the local
//! Hessian, i.e. along the cusp's tangent line. Other singularity types must
//! bring their own conditions as constant-coefficient differential operators
//! evaluated at the point.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::jacobian::PolySystem;
use crate::linalg::{self, Matrix};
use crate::poly::{GradedSubspace, HomogeneousPoly, Monomial, SliceBasis};

/// Label attached to every equisingular report.
pub const EQUISINGULAR_CONVENTION: &str =
    "equisingular conditions = Tjurina ideal membership at each singular point";

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SingType {
    A1,
    A2,
    User(String),
}

impl SingType {
    pub fn parse(s: &str) -> SingType {
        match s.trim() {
            "A1" | "a1" | "node" => SingType::A1,
            "A2" | "a2" | "cusp" => SingType::A2,
            other => SingType::User(other.to_string()),
        }
    }
}

impl std::fmt::Display for SingType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SingType::A1 => write!(f, "A1"),
            SingType::A2 => write!(f, "A2"),
            SingType::User(s) => write!(f, "{s}"),
        }
    }
}

/// Constant-coefficient differential operator `sum c_a d^a`, applied to a
/// form and then evaluated at a point.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffOp<F: Field> {
    pub terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> DiffOp<F> {
    pub fn evaluation(n_vars: usize, field: &F) -> Self {
        DiffOp {
            terms: vec![(Monomial::one(n_vars), field.one())],
        }
    }

    pub fn directional(n_vars: usize, dir: &[F::Elem]) -> Self {
        DiffOp {
            terms: (0..n_vars)
                .map(|j| (Monomial::var(n_vars, j), dir[j].clone()))
                .collect(),
        }
    }

    /// Value of the functional on the monomial `m` at `point`.
    fn apply_monomial(&self, field: &F, m: &Monomial, point: &[F::Elem]) -> F::Elem {
        let mut acc = field.zero();
        for (alpha, c) in &self.terms {
            let mut coeff = c.clone();
            let mut ok = true;
            let mut value = field.one();
            for ((&e, &a), x) in m.exponents().iter().zip(alpha.exponents()).zip(point) {
                if a > e {
                    ok = false;
                    break;
                }
                for t in 0..a {
                    coeff = field.mul(&coeff, &field.from_int((e - t) as i64));
                }
                for _ in 0..(e - a) {
                    value = field.mul(&value, x);
                }
            }
            if ok {
                acc = field.add(&acc, &field.mul(&coeff, &value));
            }
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SingularPoint<F: Field> {
    pub coords: Vec<F::Elem>,
    pub sing_type: SingType,
    pub delta: usize,
    pub tjurina: usize,
    /// Explicit equisingular conditions (required for user types).
    pub conditions: Option<Vec<DiffOp<F>>>,
    /// Explicit adjoint conditions (required for user types with delta > 1).
    pub adjoint_conditions: Option<Vec<DiffOp<F>>>,
}

impl<F: Field> SingularPoint<F> {
    /// Built-in A1/A2 point with the tabulated invariants.
    pub fn new(field: &F, coords: Vec<F::Elem>, sing_type: SingType) -> Result<Self> {
        let (delta, tjurina) = match &sing_type {
            SingType::A1 => (1, 1),
            SingType::A2 => (1, 2),
            SingType::User(name) => return Err(Error::MissingConditions(name.clone())),
        };
        Ok(SingularPoint {
            coords: normalize_point(field, &coords)?,
            sing_type,
            delta,
            tjurina,
            conditions: None,
            adjoint_conditions: None,
        })
    }

    pub fn user(
        field: &F,
        coords: Vec<F::Elem>,
        name: &str,
        delta: usize,
        conditions: Vec<DiffOp<F>>,
        adjoint_conditions: Option<Vec<DiffOp<F>>>,
    ) -> Result<Self> {
        Ok(SingularPoint {
            coords: normalize_point(field, &coords)?,
            sing_type: SingType::User(name.to_string()),
            delta,
            tjurina: conditions.len(),
            conditions: Some(conditions),
            adjoint_conditions,
        })
    }

    pub fn describe(&self, field: &F) -> String {
        let c: Vec<String> = self.coords.iter().map(|x| field.format(x)).collect();
        format!("({})", c.join(":"))
    }
}

/// Scales a projective point so its last nonzero coordinate is 1.
pub fn normalize_point<F: Field>(field: &F, coords: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let last = coords
        .iter()
        .rposition(|x| !field.is_zero(x))
        .ok_or_else(|| Error::Shape("the zero vector is not a projective point".into()))?;
    let inv = field.inv(&coords[last]).expect("nonzero");
    Ok(coords.iter().map(|x| field.mul(x, &inv)).collect())
}

fn chart_index<F: Field>(field: &F, p: &[F::Elem]) -> usize {
    p.iter()
        .rposition(|x| !field.is_zero(x))
        .expect("normalized point")
}

/// Hessian of `F` on the affine chart through `p`, rows and columns indexed
/// by the non-chart variables.
fn affine_hessian<F: Field>(f: &HomogeneousPoly<F>, p: &[F::Elem]) -> Result<Matrix<F>> {
    let field = f.field();
    let c = chart_index(field, p);
    let vars: Vec<usize> = (0..f.n_vars()).filter(|&j| j != c).collect();
    let mut h = Matrix::zeros(field, vars.len(), vars.len());
    for (a, &i) in vars.iter().enumerate() {
        let fi = f.partial(i);
        for (b, &j) in vars.iter().enumerate() {
            h.set(a, b, fi.partial(j).evaluate(p)?);
        }
    }
    Ok(h)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularityCheck {
    pub is_singular: bool,
    pub hessian_rank: Option<usize>,
    pub consistent: bool,
}

/// Checks that `p` is a singular point of the hypersurface `F = 0` and that
/// the local Hessian rank matches the claimed type (A1: full rank, A2:
/// corank one). Full A_k recognition is not attempted.
pub fn verify_singular<F: Field>(
    f: &HomogeneousPoly<F>,
    p: &[F::Elem],
    claimed: &SingType,
) -> Result<SingularityCheck> {
    let field = f.field();
    let p = normalize_point(field, p)?;
    let on_curve = field.is_zero(&f.evaluate(&p)?);
    let grad_zero = f
        .gradient()
        .iter()
        .map(|g| g.evaluate(&p))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|x| field.is_zero(x));
    if !(on_curve && grad_zero) {
        return Err(Error::NotSingular(describe(field, &p)));
    }
    let rank = linalg::rank(&affine_hessian(f, &p)?);
    let n = f.n_vars() - 1;
    let consistent = match claimed {
        SingType::A1 => rank == n,
        SingType::A2 => rank + 1 == n,
        SingType::User(_) => true,
    };
    Ok(SingularityCheck {
        is_singular: true,
        hessian_rank: Some(rank),
        consistent,
    })
}

/// Singularity check for a complete intersection: every `F_i` vanishes at
/// `p` and the Jacobian matrix there drops rank.
pub fn verify_singular_system<F: Field>(
    system: &PolySystem<F>,
    p: &[F::Elem],
    claimed: &SingType,
) -> Result<SingularityCheck> {
    if system.len() == 1 {
        return verify_singular(&system.forms()[0], p, claimed);
    }
    let field = system.field();
    let p = normalize_point(field, p)?;
    let mut rows = Vec::new();
    for f in system.forms() {
        if !field.is_zero(&f.evaluate(&p)?) {
            return Err(Error::NotSingular(describe(field, &p)));
        }
        rows.push(
            f.gradient()
                .iter()
                .map(|g| g.evaluate(&p))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let jac = Matrix::from_rows(field, system.n_vars(), rows)?;
    if linalg::rank(&jac) == system.len() {
        return Err(Error::NotSingular(describe(field, &p)));
    }
    Ok(SingularityCheck {
        is_singular: true,
        hessian_rank: None,
        consistent: !matches!(claimed, SingType::A2),
    })
}

fn describe<F: Field>(field: &F, p: &[F::Elem]) -> String {
    let c: Vec<String> = p.iter().map(|x| field.format(x)).collect();
    format!("({})", c.join(":"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    Equisingular,
    Adjoint,
}

/// Linear functionals on the degree-`k` slice, one per row, in monomial
/// coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionMatrix<F: Field> {
    pub degree: usize,
    pub rows: Matrix<F>,
}

impl<F: Field> ConditionMatrix<F> {
    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows)
    }

    pub fn row_count(&self) -> usize {
        self.rows.rows()
    }

    /// Values of every functional on the form `g`.
    pub fn apply(&self, g: &HomogeneousPoly<F>) -> Result<Vec<F::Elem>> {
        let sb = SliceBasis::new(g.n_vars(), self.degree);
        self.rows.mul_vec(&g.to_vector(&sb)?)
    }

    pub fn annihilates(&self, g: &HomogeneousPoly<F>) -> Result<bool> {
        let f = self.rows.field();
        Ok(self.apply(g)?.iter().all(|x| f.is_zero(x)))
    }
}

fn operator_rows<F: Field>(
    field: &F,
    n_vars: usize,
    k: usize,
    ops: &[(Vec<F::Elem>, DiffOp<F>)],
) -> Result<ConditionMatrix<F>> {
    let sb = SliceBasis::new(n_vars, k);
    let rows = ops
        .iter()
        .map(|(p, op)| {
            sb.monomials
                .iter()
                .map(|m| op.apply_monomial(field, m, p))
                .collect()
        })
        .collect();
    Ok(ConditionMatrix {
        degree: k,
        rows: Matrix::from_rows(field, sb.dim(), rows)?,
    })
}

/// Direction spanning the kernel of the local Hessian at a cusp, lifted to
/// homogeneous coordinates with a zero in the chart coordinate.
fn cusp_direction<F: Field>(f: &HomogeneousPoly<F>, p: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let field = f.field();
    let h = affine_hessian(f, p)?;
    let ker = linalg::kernel_basis(&h);
    if ker.cols() != 1 {
        return Err(Error::DegenerateFrame(format!(
            "local Hessian at {} has corank {}, expected 1 for A2",
            describe(field, p),
            ker.cols()
        )));
    }
    let c = chart_index(field, p);
    let k = ker.column(0);
    let mut dir = Vec::with_capacity(f.n_vars());
    let mut it = k.into_iter();
    for j in 0..f.n_vars() {
        dir.push(if j == c {
            field.zero()
        } else {
            it.next().expect("kernel length")
        });
    }
    Ok(dir)
}

/// Equisingular (Tjurina-type) conditions on degree-`k` forms imposed by the
/// singular points of the hypersurface `F`. Points are verified first.
pub fn equisingular_conditions<F: Field>(
    f: &HomogeneousPoly<F>,
    pts: &[SingularPoint<F>],
    k: usize,
) -> Result<ConditionMatrix<F>> {
    let field = f.field();
    let n = f.n_vars();
    let mut ops = Vec::new();
    for pt in pts {
        verify_singular(f, &pt.coords, &pt.sing_type)?;
        match &pt.sing_type {
            SingType::A1 => ops.push((pt.coords.clone(), DiffOp::evaluation(n, field))),
            SingType::A2 => {
                let dir = cusp_direction(f, &pt.coords)?;
                ops.push((pt.coords.clone(), DiffOp::evaluation(n, field)));
                ops.push((pt.coords.clone(), DiffOp::directional(n, &dir)));
            }
            SingType::User(name) => {
                let conds = pt
                    .conditions
                    .as_ref()
                    .ok_or_else(|| Error::MissingConditions(name.clone()))?;
                ops.extend(conds.iter().map(|c| (pt.coords.clone(), c.clone())));
            }
        }
    }
    operator_rows(field, n, k, &ops)
}

/// Equisingular conditions for a complete intersection, imposed on each
/// slot of degree `k`. With one form this is [`equisingular_conditions`];
/// with several, nodes impose evaluation and other types need explicit
/// conditions.
pub fn system_equisingular_conditions<F: Field>(
    system: &PolySystem<F>,
    pts: &[SingularPoint<F>],
    k: usize,
) -> Result<ConditionMatrix<F>> {
    if system.len() == 1 {
        return equisingular_conditions(&system.forms()[0], pts, k);
    }
    let field = system.field();
    let n = system.n_vars();
    let mut ops = Vec::new();
    for pt in pts {
        verify_singular_system(system, &pt.coords, &pt.sing_type)?;
        match (&pt.sing_type, &pt.conditions) {
            (_, Some(conds)) => ops.extend(conds.iter().map(|c| (pt.coords.clone(), c.clone()))),
            (SingType::A1, None) => ops.push((pt.coords.clone(), DiffOp::evaluation(n, field))),
            (t, None) => return Err(Error::MissingConditions(t.to_string())),
        }
    }
    operator_rows(field, n, k, &ops)
}

/// Adjoint conditions on degree-`k` forms: one evaluation per point for
/// delta-one singularities (A1, A2), explicit operators otherwise.
pub fn adjoint_conditions<F: Field>(
    field: &F,
    n_vars: usize,
    pts: &[SingularPoint<F>],
    k: usize,
) -> Result<ConditionMatrix<F>> {
    let mut ops = Vec::new();
    for pt in pts {
        match (&pt.adjoint_conditions, pt.delta) {
            (Some(conds), _) => ops.extend(conds.iter().map(|c| (pt.coords.clone(), c.clone()))),
            (None, 0) => {}
            (None, 1) => ops.push((pt.coords.clone(), DiffOp::evaluation(n_vars, field))),
            (None, _) => return Err(Error::MissingConditions(pt.sing_type.to_string())),
        }
    }
    operator_rows(field, n_vars, k, &ops)
}

/// Conditions imposed by plain reduced points (one evaluation each).
pub fn point_conditions<F: Field>(
    field: &F,
    n_vars: usize,
    points: &[Vec<F::Elem>],
    k: usize,
) -> Result<ConditionMatrix<F>> {
    let ops = points
        .iter()
        .map(|p| {
            Ok((
                normalize_point(field, p)?,
                DiffOp::evaluation(n_vars, field),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    operator_rows(field, n_vars, k, &ops)
}

/// A finite set of singular points read through one flavor of conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedScheme<F: Field> {
    pub system: PolySystem<F>,
    pub points: Vec<SingularPoint<F>>,
    pub flavor: Flavor,
}

impl<F: Field> WeightedScheme<F> {
    pub fn new(system: PolySystem<F>, points: Vec<SingularPoint<F>>, flavor: Flavor) -> Self {
        WeightedScheme {
            system,
            points,
            flavor,
        }
    }

    pub fn empty(system: PolySystem<F>) -> Self {
        Self::new(system, Vec::new(), Flavor::Equisingular)
    }

    pub fn conditions(&self, k: usize) -> Result<ConditionMatrix<F>> {
        match self.flavor {
            Flavor::Equisingular => system_equisingular_conditions(&self.system, &self.points, k),
            Flavor::Adjoint => {
                adjoint_conditions(self.system.field(), self.system.n_vars(), &self.points, k)
            }
        }
    }

    /// Intended length of the scheme: total Tjurina number, or the number of
    /// adjoint conditions.
    pub fn length(&self) -> usize {
        match self.flavor {
            Flavor::Equisingular => self.points.iter().map(|p| p.tjurina).sum(),
            Flavor::Adjoint => self
                .points
                .iter()
                .map(|p| match &p.adjoint_conditions {
                    Some(c) => c.len(),
                    None => p.delta.min(1),
                })
                .sum(),
        }
    }

    pub fn with_flavor(&self, flavor: Flavor) -> Self {
        Self::new(self.system.clone(), self.points.clone(), flavor)
    }
}

/// Forms of degree `k` satisfying every condition.
pub fn sections_of_ideal<F: Field>(
    cond: &ConditionMatrix<F>,
    n_vars: usize,
    k: usize,
) -> Result<GradedSubspace<F>> {
    if cond.degree != k {
        return Err(Error::Degree(format!(
            "conditions built in degree {} used in degree {k}",
            cond.degree
        )));
    }
    Ok(GradedSubspace {
        n_vars,
        degree: k,
        basis: linalg::kernel_basis(&cond.rows),
    })
}

/// `h^1(I_Z(k)) = deg Z - rank` of the conditions imposed in degree `k`.
pub fn h1_defect<F: Field>(cond: &ConditionMatrix<F>, deg_z: usize) -> Result<usize> {
    let r = cond.rank();
    deg_z.checked_sub(r).ok_or_else(|| {
        Error::InternalInconsistency(format!(
            "conditions have rank {r}, exceeding the scheme length {deg_z}"
        ))
    })
}

/// Degree data of a curve whose genus is requested.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DegreeData {
    Plane(usize),
    /// Complete intersection curve in `P^N` with `N - 1` forms.
    CompleteIntersection {
        degrees: Vec<usize>,
        ambient: usize,
    },
}

impl DegreeData {
    pub fn arithmetic_genus(&self) -> i64 {
        match self {
            DegreeData::Plane(d) => {
                let d = *d as i64;
                (d - 1) * (d - 2) / 2
            }
            DegreeData::CompleteIntersection { degrees, ambient } => {
                let prod: i64 = degrees.iter().map(|&d| d as i64).product();
                let sum: i64 = degrees.iter().map(|&d| d as i64).sum();
                prod * (sum - *ambient as i64 - 1) / 2 + 1
            }
        }
    }

    /// Degree data of a curve system, if it is a curve.
    pub fn of_system<F: Field>(system: &PolySystem<F>) -> Option<Self> {
        let n = system.ambient_dim();
        match (system.len(), n) {
            (1, 2) => Some(DegreeData::Plane(system.degrees()[0])),
            (r, n) if r + 1 == n => Some(DegreeData::CompleteIntersection {
                degrees: system.degrees(),
                ambient: n,
            }),
            _ => None,
        }
    }
}

/// `g = p_a - sum delta_p`.
pub fn geometric_genus<F: Field>(data: &DegreeData, pts: &[SingularPoint<F>]) -> Result<i64> {
    let g = data.arithmetic_genus() - pts.iter().map(|p| p.delta as i64).sum::<i64>();
    if g < 0 {
        return Err(Error::GenusNegative(g));
    }
    Ok(g)
}
