//! Ternary algebras twisted by two linear maps, their associativity laws,
//! morphisms and the twisting construction.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tensor4, Vector};
use crate::report::{LawReport, Residual};

/// `μ(e_r, e_s, e_t) = Σ_l mu[l][r][s][t] e_l` together with the twisting maps
/// `α1`, `α2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryAlgebra {
    mu: Tensor4,
    alpha1: Matrix,
    alpha2: Matrix,
}

/// Which re-association law to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AssocMode {
    /// The three twisted re-associations agree.
    Total,
    /// The three twisted re-associations sum to zero.
    Partial,
    /// The first and third re-associations agree.
    Weak,
}

impl AssocMode {
    pub const ALL: [AssocMode; 3] = [AssocMode::Total, AssocMode::Partial, AssocMode::Weak];

    pub fn name(self) -> &'static str {
        match self {
            AssocMode::Total => "total",
            AssocMode::Partial => "partial",
            AssocMode::Weak => "weak",
        }
    }
}

pub(crate) fn check_cube(t: &Tensor4, what: &str) -> Result<usize> {
    let [n, a, b, c] = t.dims();
    if a != n || b != n || c != n {
        return Err(Error::ShapeMismatch(format!(
            "{what} tensor must be cubical, got extents {:?}",
            t.dims()
        )));
    }
    Ok(n)
}

pub(crate) fn check_square(m: &Matrix, n: usize, d: u32, what: &str) -> Result<()> {
    if m.dim() != n {
        return Err(Error::ShapeMismatch(format!(
            "{what} has extent {}, expected {n}",
            m.dim()
        )));
    }
    if m.radicand() != d {
        return Err(Error::RadicandMismatch(d, m.radicand()));
    }
    Ok(())
}

impl TernaryAlgebra {
    pub fn new(mu: Tensor4, alpha1: Matrix, alpha2: Matrix) -> Result<Self> {
        let n = check_cube(&mu, "product")?;
        check_square(&alpha1, n, mu.radicand(), "alpha1")?;
        check_square(&alpha2, n, mu.radicand(), "alpha2")?;
        Ok(TernaryAlgebra { mu, alpha1, alpha2 })
    }

    /// Untwisted algebra: both twisting maps are the identity.
    pub fn classical(mu: Tensor4) -> Result<Self> {
        let n = check_cube(&mu, "product")?;
        let id = Matrix::identity(n, mu.radicand());
        Self::new(mu, id.clone(), id)
    }

    /// Zero product with identity twists.
    pub fn zero(n: usize, d: u32) -> Self {
        Self::classical(Tensor4::cube(n, d)).expect("cubical")
    }

    pub fn dim(&self) -> usize {
        self.alpha1.dim()
    }

    pub fn radicand(&self) -> u32 {
        self.mu.radicand()
    }

    pub fn mu(&self) -> &Tensor4 {
        &self.mu
    }

    pub fn alpha1(&self) -> &Matrix {
        &self.alpha1
    }

    pub fn alpha2(&self) -> &Matrix {
        &self.alpha2
    }

    pub fn alpha(&self, i: usize) -> &Matrix {
        match i {
            1 => &self.alpha1,
            2 => &self.alpha2,
            _ => panic!("twisting maps are numbered 1 and 2"),
        }
    }

    pub fn is_classical(&self) -> bool {
        self.alpha1.is_identity() && self.alpha2.is_identity()
    }

    pub fn with_twists(&self, alpha1: Matrix, alpha2: Matrix) -> Result<Self> {
        Self::new(self.mu.clone(), alpha1, alpha2)
    }

    pub fn with_product(&self, mu: Tensor4) -> Result<Self> {
        Self::new(mu, self.alpha1.clone(), self.alpha2.clone())
    }

    /// `μ(e_i, e_j, e_k)` for 0-based basis indices.
    pub fn product(&self, i: usize, j: usize, k: usize) -> Vector {
        self.mu.eval_basis(i, j, k)
    }

    pub fn evaluate_mu(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        self.mu.eval(x, y, z)
    }

    pub fn basis(&self, k: usize) -> Vector {
        Vector::basis(self.dim(), k, self.radicand())
    }
}

/// Trilinear extension of the structure tensor.
pub fn evaluate_mu(a: &TernaryAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
    a.evaluate_mu(x, y, z)
}

/// Five-argument composite stored tuple-major: position
/// `((((x1*n + x2)*n + x3)*n + x4)*n + x5)*n + l` holds the coefficient of `e_l`.
struct Composite {
    n: usize,
    data: Vec<crate::scalar::QuadScalar>,
}

impl Composite {
    fn tuples(&self) -> usize {
        self.n.pow(5)
    }

    fn at(&self, tuple: usize) -> &[crate::scalar::QuadScalar] {
        &self.data[tuple * self.n..(tuple + 1) * self.n]
    }
}

/// Plugs `inner` into input slot `slot` (0, 1 or 2) of `outer`.
fn substitute(outer: &Tensor4, slot: usize, inner: &Tensor4) -> Composite {
    let n = outer.dims()[0];
    let d = outer.radicand();
    let mut rows: Vec<Vec<([usize; 3], &crate::scalar::QuadScalar)>> = vec![Vec::new(); n];
    for ([m, u, v, w], x) in inner.support() {
        rows[m].push(([u, v, w], x));
    }
    let mut data = vec![crate::scalar::QuadScalar::zero(d); n.pow(6)];
    for ([l, a, b, c], x) in outer.support() {
        let outer_idx = [a, b, c];
        for (uvw, y) in &rows[outer_idx[slot]] {
            let mut args = [0usize; 5];
            let mut p = 0;
            for (s, &o) in outer_idx.iter().enumerate() {
                if s == slot {
                    args[p..p + 3].copy_from_slice(uvw);
                    p += 3;
                } else {
                    args[p] = o;
                    p += 1;
                }
            }
            let pos = args.iter().fold(0, |acc, &i| acc * n + i) * n + l;
            data[pos].add_mul(x, y);
        }
    }
    Composite { n, data }
}

/// Base-`n` digits of a tuple index, 1-based.
pub(crate) fn tuple_indices(mut t: usize, n: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for i in (0..len).rev() {
        out[i] = t % n + 1;
        t /= n;
    }
    out
}

/// The three twisted re-associations of a five-argument product:
/// `μ(μ(x1,x2,x3), α1 x4, α2 x5)`, `μ(α1 x1, μ(x2,x3,x4), α2 x5)` and
/// `μ(α1 x1, α2 x2, μ(x3,x4,x5))`.
fn reassociations(a: &TernaryAlgebra) -> [Composite; 3] {
    let (a1, a2) = (a.alpha1(), a.alpha2());
    let mu = a.mu();
    let u1 = mu.precompose([None, Some(a1), Some(a2)]).expect("shapes");
    let u2 = mu.precompose([Some(a1), None, Some(a2)]).expect("shapes");
    let u3 = mu.precompose([Some(a1), Some(a2), None]).expect("shapes");
    let (p1, (p2, p3)) = rayon::join(
        || substitute(&u1, 0, mu),
        || rayon::join(|| substitute(&u2, 1, mu), || substitute(&u3, 2, mu)),
    );
    [p1, p2, p3]
}

fn residual_vector(
    n: usize,
    d: u32,
    f: impl Fn(usize) -> crate::scalar::QuadScalar,
) -> Residual {
    Residual::Vector(Vector::from_entries((0..n).map(f).collect(), d).expect("radicand"))
}

/// Checks the selected associativity law on all `dim^5` basis tuples.
///
/// Total mode reports the two equalities separately as `assoc.total:12` and
/// `assoc.total:23`.
pub fn check_hom_associativity(a: &TernaryAlgebra, mode: AssocMode) -> LawReport {
    let n = a.dim();
    let d = a.radicand();
    let mut report = LawReport::new(format!("assoc.{}", mode.name()));
    let [p1, p2, p3] = reassociations(a);
    let diff = |report: &mut LawReport, name: &str, x: &Composite, y: &Composite| {
        for t in 0..x.tuples() {
            let (u, v) = (x.at(t), y.at(t));
            if u != v {
                let r = residual_vector(n, d, |l| &u[l] - &v[l]);
                report.check(name, tuple_indices(t, n, 5), r);
            }
        }
    };
    match mode {
        AssocMode::Total => {
            report.declare("assoc.total:12", "qt1");
            report.declare("assoc.total:23", "qt1");
            diff(&mut report, "assoc.total:12", &p1, &p2);
            diff(&mut report, "assoc.total:23", &p2, &p3);
        }
        AssocMode::Weak => {
            report.declare("assoc.weak", "weak");
            diff(&mut report, "assoc.weak", &p1, &p3);
        }
        AssocMode::Partial => {
            report.declare("assoc.partial", "qp1");
            for t in 0..p1.tuples() {
                let (u, v, w) = (p1.at(t), p2.at(t), p3.at(t));
                if u.iter().chain(v).chain(w).all(|x| x.is_zero()) {
                    continue;
                }
                let r = residual_vector(n, d, |l| &(&u[l] + &v[l]) + &w[l]);
                report.check("assoc.partial", tuple_indices(t, n, 5), r);
            }
        }
    }
    report
}

/// Compares two trilinear maps on all basis triples.
pub(crate) fn compare_trilinear(report: &mut LawReport, name: &str, x: &Tensor4, y: &Tensor4) {
    let [_, a, b, c] = x.dims();
    for i in 0..a {
        for j in 0..b {
            for k in 0..c {
                let u = x.eval_basis(i, j, k);
                let v = y.eval_basis(i, j, k);
                if u != v {
                    report.check(
                        name,
                        vec![i + 1, j + 1, k + 1],
                        Residual::Vector(u.sub(&v).expect("same shape")),
                    );
                }
            }
        }
    }
}

/// Compares two linear maps column by column.
pub(crate) fn compare_maps(report: &mut LawReport, name: &str, f: &Matrix, g: &Matrix) {
    for j in 0..f.dim() {
        let u = f.column(j);
        let v = g.column(j);
        if u != v {
            report.check(name, vec![j + 1], Residual::Vector(u.sub(&v).expect("same shape")));
        }
    }
}

/// `α_i ∘ μ = μ ∘ α_i^{⊗3}` for `i = 1, 2`.
pub fn check_multiplicative(a: &TernaryAlgebra) -> LawReport {
    let mut report = LawReport::new("multiplicative");
    for i in 1..=2 {
        let name = format!("multiplicative.alpha{i}");
        report.declare(&name, "multiplicative");
        let al = a.alpha(i);
        let left = a.mu().map_output(al).expect("shapes");
        let right = a.mu().precompose([Some(al), Some(al), Some(al)]).expect("shapes");
        compare_trilinear(&mut report, &name, &left, &right);
    }
    report
}

/// Outcome of a morphism check; an isomorphism is an invertible morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    pub report: LawReport,
    pub invertible: bool,
}

impl MorphismReport {
    pub fn is_morphism(&self) -> bool {
        self.report.passed()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.report.passed() && self.invertible
    }
}

fn morphism_dims(f: &Matrix, n1: usize, n2: usize) -> Result<()> {
    if f.dim() != n1 || n1 != n2 {
        return Err(Error::DimensionMismatch {
            expected: n1,
            found: if f.dim() != n1 { f.dim() } else { n2 },
        });
    }
    Ok(())
}

/// `f(μ(x,y,z)) = μ'(fx, fy, fz)` on basis triples and `f ∘ α_i = α'_i ∘ f`.
pub fn check_algebra_morphism(
    f: &Matrix,
    a: &TernaryAlgebra,
    b: &TernaryAlgebra,
) -> Result<MorphismReport> {
    morphism_dims(f, a.dim(), b.dim())?;
    for d in [a.radicand(), b.radicand()] {
        if d != f.radicand() {
            return Err(Error::RadicandMismatch(f.radicand(), d));
        }
    }
    let mut report = LawReport::new("morphism");
    report.declare("morphism.product", "morphism");
    let left = a.mu().map_output(f)?;
    let right = b.mu().precompose([Some(f), Some(f), Some(f)])?;
    compare_trilinear(&mut report, "morphism.product", &left, &right);
    for i in 1..=2 {
        let name = format!("morphism.alpha{i}");
        report.declare(&name, "morphism");
        compare_maps(&mut report, &name, &f.compose(a.alpha(i))?, &b.alpha(i).compose(f)?);
    }
    Ok(MorphismReport {
        report,
        invertible: f.is_invertible(),
    })
}

/// Twists a classical algebra by an endomorphism `ρ`: product `ρ ∘ μ`, both
/// twisting maps `ρ`.
pub fn yau_twist(a: &TernaryAlgebra, rho: &Matrix) -> Result<TernaryAlgebra> {
    if rho.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: rho.dim(),
        });
    }
    let untwisted = TernaryAlgebra::classical(a.mu().clone())?;
    let m = check_algebra_morphism(rho, &untwisted, &untwisted)?;
    if let Some(v) = m.report.violations_of("morphism.product").next() {
        let t = &v.indices;
        return Err(Error::NotEndomorphism {
            triple: [t[0], t[1], t[2]],
        });
    }
    if !a.is_classical() {
        return Err(Error::PreconditionNotClassical);
    }
    TernaryAlgebra::new(a.mu().map_output(rho)?, rho.clone(), rho.clone())
}

/// Matrices of `z ↦ μ(x,y,z)`, `z ↦ μ(z,x,y)` and `z ↦ μ(x,z,y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationOperators {
    pub left: Matrix,
    pub right: Matrix,
    pub middle: Matrix,
}

pub fn multiplication_operators(
    a: &TernaryAlgebra,
    x: &Vector,
    y: &Vector,
) -> Result<MultiplicationOperators> {
    let n = a.dim();
    let mut l = Vec::with_capacity(n);
    let mut r = Vec::with_capacity(n);
    let mut m = Vec::with_capacity(n);
    for j in 0..n {
        let e = a.basis(j);
        l.push(a.evaluate_mu(x, y, &e)?);
        r.push(a.evaluate_mu(&e, x, y)?);
        m.push(a.evaluate_mu(x, &e, y)?);
    }
    let zero = || Matrix::zeros(0, a.radicand());
    let build = |cols: Vec<Vector>| {
        if cols.is_empty() {
            Ok(zero())
        } else {
            Matrix::from_columns(&cols)
        }
    };
    Ok(MultiplicationOperators {
        left: build(l)?,
        right: build(r)?,
        middle: build(m)?,
    })
}
