//! Hom-associative ternary infinitesimal bialgebras.
//!
//! The compatibility law is checked in element form on basis triples:
//!
//! ```text
//! Δμ(x,y,z) = (L(α1x, α2y) ⊗ α1 ⊗ α2)Δz + (α1 ⊗ M(α1x, α2z) ⊗ α2)Δy
//!           + (α1 ⊗ α2 ⊗ R(α1y, α2z))Δx
//! ```
//!
//! Two further encodings are kept as cross-checks: the composition form with
//! the exchange operator, and the structure-constant identity evaluated as
//! written.

use rayon::prelude::*;

use crate::algebra::{
    check_algebra_morphism, check_hom_associativity, multiplication_operators, AssocMode,
    TernaryAlgebra,
};
use crate::coalgebra::{check_coalgebra_morphism, check_hom_coassociativity, TernaryCoalgebra};
use crate::duality::{dualize_algebra, dualize_coalgebra};
use crate::error::{Error, Result};
use crate::linalg::{tensor3_map, Matrix, Tensor3, Vector};
use crate::report::{LawReport, Residual};
use crate::scalar::QuadScalar;

/// `(A, μ, Δ, α1, α2)`: an algebra and a coalgebra on one space sharing both
/// twisting maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryBialgebra {
    alg: TernaryAlgebra,
    coalg: TernaryCoalgebra,
}

impl TernaryBialgebra {
    pub fn new(alg: TernaryAlgebra, coalg: TernaryCoalgebra) -> Result<Self> {
        if alg.dim() != coalg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: coalg.dim(),
            });
        }
        if alg.radicand() != coalg.radicand() {
            return Err(Error::RadicandMismatch(alg.radicand(), coalg.radicand()));
        }
        if alg.alpha1() != coalg.alpha1() || alg.alpha2() != coalg.alpha2() {
            return Err(Error::ShapeMismatch(
                "algebra and coalgebra must share their twisting maps".into(),
            ));
        }
        Ok(TernaryBialgebra { alg, coalg })
    }

    pub fn alg(&self) -> &TernaryAlgebra {
        &self.alg
    }

    pub fn coalg(&self) -> &TernaryCoalgebra {
        &self.coalg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn radicand(&self) -> u32 {
        self.alg.radicand()
    }

    pub fn alpha1(&self) -> &Matrix {
        self.alg.alpha1()
    }

    pub fn alpha2(&self) -> &Matrix {
        self.alg.alpha2()
    }
}

/// The flip `a⊗b ↦ b⊗a` on `A⊗A`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExchangeOp;

impl ExchangeOp {
    /// Image of the basis pair `e_i⊗e_j`.
    pub fn apply(self, pair: (usize, usize)) -> (usize, usize) {
        (pair.1, pair.0)
    }

    /// Matrix on `A⊗A` in the basis `e_i⊗e_j ↦ i*n + j`.
    pub fn matrix(self, n: usize, d: u32) -> Matrix {
        let mut m = Matrix::zeros(n * n, d);
        for i in 0..n {
            for j in 0..n {
                let (a, b) = self.apply((i, j));
                m.set(a * n + b, i * n + j, QuadScalar::one(d));
            }
        }
        m
    }
}

/// `Δ(μ(e_i, e_j, e_k))`.
fn lhs(b: &TernaryBialgebra, i: usize, j: usize, k: usize) -> Tensor3 {
    b.coalg.evaluate_delta(&b.alg.product(i, j, k)).expect("shapes")
}

/// Right-hand side of the element form on a basis triple.
fn element_rhs(b: &TernaryBialgebra, i: usize, j: usize, k: usize) -> Tensor3 {
    let (a1, a2) = (b.alpha1(), b.alpha2());
    let (x, y, z) = (b.alg.basis(i), b.alg.basis(j), b.alg.basis(k));
    let ap = |m: &Matrix, v: &Vector| m.apply(v).expect("shapes");
    let ops = |u: &Vector, v: &Vector| multiplication_operators(&b.alg, u, v).expect("shapes");
    let l = ops(&ap(a1, &x), &ap(a2, &y)).left;
    let m = ops(&ap(a1, &x), &ap(a2, &z)).middle;
    let r = ops(&ap(a1, &y), &ap(a2, &z)).right;
    let mut t = tensor3_map(&l, a1, a2, &b.coalg.coproduct(k)).expect("shapes");
    t.add_assign(&tensor3_map(a1, &m, a2, &b.coalg.coproduct(j)).expect("shapes"));
    t.add_assign(&tensor3_map(a1, a2, &r, &b.coalg.coproduct(i)).expect("shapes"));
    t
}

fn compare_on_triples(
    b: &TernaryBialgebra,
    law: &str,
    tag: &str,
    rhs: impl Fn(usize, usize, usize) -> Tensor3 + Sync,
) -> LawReport {
    let n = b.dim();
    let mut report = LawReport::new(law);
    report.declare(law, tag);
    let residuals: Vec<(Vec<usize>, Tensor3)> = (0..n * n * n)
        .into_par_iter()
        .map(|t| {
            let (i, j, k) = (t / (n * n), t / n % n, t % n);
            let r = lhs(b, i, j, k).sub(&rhs(i, j, k)).expect("shapes");
            (vec![i + 1, j + 1, k + 1], r)
        })
        .collect();
    for (idx, r) in residuals {
        report.check(law, idx, Residual::Tensor(r));
    }
    report
}

/// Checks the compatibility law on every basis triple; a violation carries
/// the triple and the full tensor residual `LHS − RHS`.
pub fn check_compatibility(b: &TernaryBialgebra) -> LawReport {
    compare_on_triples(b, "compat", "cp1", |i, j, k| element_rhs(b, i, j, k))
}

/// Dense element of `A^{⊗5}`, row-major in the five slots.
struct Dense5 {
    n: usize,
    data: Vec<QuadScalar>,
}

impl Dense5 {
    fn pos(&self, idx: [usize; 5]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * self.n + i)
    }

    fn unpos(&self, mut p: usize) -> [usize; 5] {
        let mut out = [0; 5];
        for s in (0..5).rev() {
            out[s] = p % self.n;
            p /= self.n;
        }
        out
    }

    /// Applies σ to the slot pair `(a, b)`.
    fn exchange(&self, (a, b): (usize, usize)) -> Dense5 {
        let mut data = self.data.clone();
        for p in 0..self.data.len() {
            let mut idx = self.unpos(p);
            let (u, v) = ExchangeOp.apply((idx[a], idx[b]));
            idx[a] = u;
            idx[b] = v;
            data[self.pos(idx)] = self.data[p].clone();
        }
        Dense5 { n: self.n, data }
    }
}

/// `(f ⊗ g ⊗ h)(e_i⊗e_j⊗e_k)` with `Δ` in position `at` and `α1`, `α2` on the
/// other two arguments, in that order.
fn spread(b: &TernaryBialgebra, at: usize, args: [usize; 3]) -> Dense5 {
    let n = b.dim();
    let d = b.radicand();
    let mut twist = [b.alpha1(), b.alpha2()].into_iter();
    let mut pieces: Vec<Vec<(Vec<usize>, QuadScalar)>> = Vec::new();
    for (s, &e) in args.iter().enumerate() {
        if s == at {
            let t = b.coalg.coproduct(e);
            pieces.push(t.support().map(|((r, s, u), x)| (vec![r, s, u], x.clone())).collect());
        } else {
            let v = twist.next().expect("two twists").column(e);
            pieces.push(v.support().map(|(r, x)| (vec![r], x.clone())).collect());
        }
    }
    let mut out = Dense5 {
        n,
        data: vec![QuadScalar::zero(d); n.pow(5)],
    };
    for (i0, x0) in &pieces[0] {
        for (i1, x1) in &pieces[1] {
            let c = x0 * x1;
            for (i2, x2) in &pieces[2] {
                let idx: Vec<usize> = i0.iter().chain(i1).chain(i2).copied().collect();
                let p = out.pos(idx.try_into().expect("five slots"));
                out.data[p].add_mul(&c, x2);
            }
        }
    }
    out
}

/// `(f ⊗ g ⊗ h)` applied to a five-fold tensor, with `μ` consuming slots
/// `at..at+3` and `α1`, `α2` on the remaining two slots in order.
fn contract(b: &TernaryBialgebra, at: usize, t: &Dense5) -> Tensor3 {
    let n = b.dim();
    let a = [b.alpha1(), b.alpha2()];
    let mut out = Tensor3::zeros(n, b.radicand());
    for (p, x) in t.data.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let idx = t.unpos(p);
        let mut factors: Vec<Vector> = Vec::with_capacity(3);
        let mut s = 0;
        let mut k = 0;
        while s < 5 {
            if s == at {
                factors.push(b.alg.product(idx[s], idx[s + 1], idx[s + 2]));
                s += 3;
            } else {
                factors.push(a[k].column(idx[s]));
                k += 1;
                s += 1;
            }
        }
        let pure = Tensor3::pure(&factors[0], &factors[1], &factors[2]).expect("shapes");
        for ((r, s, u), y) in pure.support() {
            out.entry_mut(r, s, u).add_mul(x, y);
        }
    }
    out
}

/// The composition form, with the exchange operator in the middle term acting
/// on the listed slot pairs (0-based).
fn sigma_rhs(b: &TernaryBialgebra, flips: &[(usize, usize)], args: [usize; 3]) -> Tensor3 {
    let mut t = contract(b, 0, &spread(b, 2, args));
    let mut middle = spread(b, 1, args);
    for &f in flips {
        middle = middle.exchange(f);
    }
    t.add_assign(&contract(b, 1, &middle));
    t.add_assign(&contract(b, 2, &spread(b, 0, args)));
    t
}

/// The composition form of the compatibility law,
///
/// ```text
/// Δμ = (μ⊗α1⊗α2)(α1⊗α2⊗Δ) + (α1⊗μ⊗α2)(σ⊗id⊗σ)(α1⊗Δ⊗α2) + (α1⊗α2⊗μ)(Δ⊗α1⊗α2)
/// ```
///
/// evaluated literally on five-fold tensors. `σ⊗id⊗σ` flips slots 1, 2 and
/// slots 4, 5.
pub fn check_compatibility_sigma_form(b: &TernaryBialgebra) -> LawReport {
    check_compatibility_sigma_form_with(b, &[(0, 1), (3, 4)])
}

/// As [`check_compatibility_sigma_form`] with other slot pairs for the
/// exchange operator; pairs are 0-based.
pub fn check_compatibility_sigma_form_with(
    b: &TernaryBialgebra,
    flips: &[(usize, usize)],
) -> LawReport {
    assert!(flips.iter().all(|&(x, y)| x < 5 && y < 5), "slots are 0..5");
    compare_on_triples(b, "compat.sigma", "ihatb", |i, j, k| sigma_rhs(b, flips, [i, j, k]))
}

/// Associativity, coassociativity (both in `mode`) and compatibility.
pub fn check_bialgebra(b: &TernaryBialgebra, mode: AssocMode) -> LawReport {
    let (assoc, (coassoc, compat)) = rayon::join(
        || check_hom_associativity(&b.alg, mode),
        || {
            rayon::join(
                || check_hom_coassociativity(&b.coalg, mode),
                || check_compatibility(b),
            )
        },
    );
    let mut report = LawReport::new(format!("bialgebra.{}", mode.name()));
    report.absorb(assoc);
    report.absorb(coassoc);
    report.absorb(compat);
    report
}

/// `(A, ±μ, ±Δ, α1, α2)`.
pub fn sign_variant(b: &TernaryBialgebra, flip_mu: bool, flip_delta: bool) -> TernaryBialgebra {
    let mut out = b.clone();
    if flip_mu {
        out.alg = out.alg.with_product(out.alg.mu().neg()).expect("same shape");
    }
    if flip_delta {
        out.coalg = TernaryCoalgebra::new(
            out.coalg.delta().neg(),
            out.coalg.alpha1().clone(),
            out.coalg.alpha2().clone(),
        )
        .expect("same shape");
    }
    out
}

/// `(A*, Δ*, μ*, α1*, α2*)`.
pub fn dualize_bialgebra(b: &TernaryBialgebra) -> TernaryBialgebra {
    TernaryBialgebra::new(dualize_coalgebra(&b.coalg), dualize_algebra(&b.alg))
        .expect("transposed twists are shared")
}

/// Checks that `f` is an invertible algebra and coalgebra morphism.
///
/// A singular `f` fails `equivalence.invertible`; the violation carries a
/// nonzero kernel vector.
pub fn check_bialgebra_equivalence(
    f: &Matrix,
    b1: &TernaryBialgebra,
    b2: &TernaryBialgebra,
) -> Result<LawReport> {
    let alg = check_algebra_morphism(f, &b1.alg, &b2.alg)?;
    let coalg = check_coalgebra_morphism(f, &b1.coalg, &b2.coalg)?;
    let mut report = LawReport::new("equivalence");
    report.absorb(alg.report);
    report.absorb(coalg.report);
    report.declare("equivalence.invertible", "equivalence");
    if let Some(v) = f.kernel_vector() {
        let first = v.support().next().map_or(1, |(i, _)| i + 1);
        report.check("equivalence.invertible", vec![first], Residual::Vector(v));
    }
    Ok(report)
}

/// Evaluates the structure-constant form of the compatibility law exactly as
/// it is usually displayed:
///
/// ```text
/// Σ_l [ a_k^{rst} c^l_{pqr} y^{1i}_p y^{2j}_q y^{1s}_u y^{2t}_v
///     + a_j^{rst} c^u_{psq} y^{1i}_p y^{2k}_q y^{1r}_l y^{2t}_v
///     + a_i^{rst} c^v_{tpq} y^{1j}_p y^{2k}_q y^{1r}_l y^{2s}_u
///     − a_l^{rst} c^l_{ijk} ] = 0
/// ```
///
/// for all free `(i, j, k, r, s, t, p, q, u, v)`, where `a` are coproduct
/// constants, `c` product constants and `y^{qj}_k` the coefficient of `e_k`
/// in `α_q(e_j)`. Several indices play both a free and a summed role in this
/// display, so its verdict need not match [`check_compatibility`].
pub fn compatibility_identity_check(b: &TernaryBialgebra) -> LawReport {
    let n = b.dim();
    let d = b.radicand();
    let a = |l: usize, r: usize, s: usize, t: usize| b.coalg.delta().get(l, r, s, t);
    let c = |l: usize, i: usize, j: usize, k: usize| b.alg.mu().get(l, i, j, k);
    let y = |q: usize, j: usize, k: usize| b.alg.alpha(q).get(k, j);
    let law = "compat.identity";
    let mut report = LawReport::new(law);
    report.declare(law, "cp4");
    let outer = n.pow(6);
    let found: Vec<Vec<(Vec<usize>, QuadScalar)>> = (0..outer)
        .into_par_iter()
        .map(|t| {
            let head = crate::algebra::tuple_indices(t, n.max(1), 6);
            let [i, j, k, r, s, tt] = [0, 1, 2, 3, 4, 5].map(|x| head[x] - 1);
            let mut hits = Vec::new();
            for rest in 0..n.pow(4) {
                let tail = crate::algebra::tuple_indices(rest, n.max(1), 4);
                let [p, q, u, v] = [0, 1, 2, 3].map(|x| tail[x] - 1);
                let mut sum = QuadScalar::zero(d);
                for l in 0..n {
                    let t1 = &(&(&(a(k, r, s, tt) * c(l, p, q, r)) * y(1, i, p)) * y(2, j, q))
                        * &(y(1, s, u) * y(2, tt, v));
                    let t2 = &(&(&(a(j, r, s, tt) * c(u, p, s, q)) * y(1, i, p)) * y(2, k, q))
                        * &(y(1, r, l) * y(2, tt, v));
                    let t3 = &(&(&(a(i, r, s, tt) * c(v, tt, p, q)) * y(1, j, p)) * y(2, k, q))
                        * &(y(1, r, l) * y(2, s, u));
                    sum += &t1;
                    sum += &t2;
                    sum += &t3;
                    sum -= &(a(l, r, s, tt) * c(l, i, j, k));
                }
                if !sum.is_zero() {
                    let mut idx = head.clone();
                    idx.extend(tail);
                    hits.push((idx, sum));
                }
            }
            hits
        })
        .collect();
    for (idx, r) in found.into_iter().flatten() {
        report.check(law, idx, Residual::Scalar(r));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::Tensor4;

    const D: u32 = 5;

    fn with_delta(b: &TernaryBialgebra, delta: Tensor4) -> TernaryBialgebra {
        let c = TernaryCoalgebra::new(delta, b.alpha1().clone(), b.alpha2().clone()).unwrap();
        TernaryBialgebra::new(b.alg().clone(), c).unwrap()
    }

    #[test]
    fn fixtures_are_compatible() {
        for b in [fixtures::pb2(), fixtures::eq2()] {
            assert!(check_compatibility(&b).passed());
            assert!(check_compatibility_sigma_form(&b).passed());
        }
    }

    #[test]
    fn trivial_coproduct_is_compatible() {
        let b = with_delta(&fixtures::pb2(), Tensor4::cube(2, D));
        assert!(check_compatibility(&b).passed());
        assert!(check_compatibility_sigma_form(&b).passed());
        assert!(compatibility_identity_check(&b).passed());
    }

    #[test]
    fn changed_coproduct_fails_at_first_triple() {
        let mut delta = fixtures::pb2().coalg().delta().clone();
        delta.set(1, 0, 0, 0, QuadScalar::one(D));
        let b = with_delta(&fixtures::pb2(), delta);
        let r = check_compatibility(&b);
        assert!(!r.passed());
        let v = r.first_violation().unwrap();
        assert_eq!(v.indices, vec![1, 1, 1]);
        let e1 = Vector::basis(2, 0, D);
        assert_eq!(v.residual, Residual::Tensor(Tensor3::pure(&e1, &e1, &e1).unwrap()));
    }

    /// `e1` is a twisted unit of the TB2 product, so at `(e1, e1, e1)` the
    /// law reads `Δ(e1) = 3 ρ⊗ρ⊗ρ Δ(e1)`, which forces `Δ(e1) = 0`.
    #[test]
    fn tb2_fails_only_compatibility() {
        let b = fixtures::tb2();
        let r = check_bialgebra(&b, AssocMode::Total);
        assert!(!r.passed());
        assert_eq!(r.failing_laws(), vec!["compat"]);
        let d1 = b.coalg().coproduct(0);
        let rho = fixtures::rho1();
        let image = tensor3_map(&rho, &rho, &rho, &d1).unwrap();
        let mut expected = d1.clone();
        for _ in 0..3 {
            expected = expected.sub(&image).unwrap();
        }
        let v = r.violations_of("compat").next().unwrap();
        assert_eq!(v.indices, vec![1, 1, 1]);
        assert_eq!(v.residual, Residual::Tensor(expected));
        let sigma = check_compatibility_sigma_form(&b);
        assert_eq!(sigma.violations.len(), check_compatibility(&b).violations.len());
    }

    #[test]
    fn exchange_is_an_involution() {
        let s = ExchangeOp.matrix(3, D);
        assert!(s.compose(&s).unwrap().is_identity());
        assert!(!s.is_identity());
        assert_eq!(ExchangeOp.apply((0, 2)), (2, 0));
    }

    #[test]
    fn bialgebra_verdicts() {
        assert!(check_bialgebra(&fixtures::pb2(), AssocMode::Partial).passed());
        for (fm, fd) in [(false, false), (true, false), (false, true), (true, true)] {
            let s = sign_variant(&fixtures::pb2(), fm, fd);
            assert!(check_bialgebra(&s, AssocMode::Partial).passed());
        }
        assert_eq!(sign_variant(&fixtures::pb2(), false, false), fixtures::pb2());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dualize_bialgebra(&fixtures::pb2()), fixtures::eq2());
        let tb2 = fixtures::tb2();
        let dual = dualize_bialgebra(&tb2);
        assert_eq!(dual.alg().mu(), tb2.coalg().delta());
        assert_eq!(dual.coalg().delta(), tb2.alg().mu());
        assert_eq!(dualize_bialgebra(&dual), tb2);
    }

    #[test]
    fn equivalences() {
        let sw = fixtures::swap();
        assert!(check_bialgebra_equivalence(&sw, &fixtures::eq1(), &fixtures::eq2())
            .unwrap()
            .passed());
        let id = Matrix::identity(2, D);
        assert!(check_bialgebra_equivalence(&id, &fixtures::tb2(), &fixtures::tb2())
            .unwrap()
            .passed());
        assert!(!check_bialgebra_equivalence(&sw, &fixtures::pb2(), &fixtures::pb2())
            .unwrap()
            .passed());
        let r = check_bialgebra_equivalence(
            &Matrix::zeros(2, D),
            &TernaryBialgebra::new(TernaryAlgebra::zero(2, D), TernaryCoalgebra::zero(2, D))
                .unwrap(),
            &TernaryBialgebra::new(TernaryAlgebra::zero(2, D), TernaryCoalgebra::zero(2, D))
                .unwrap(),
        )
        .unwrap();
        assert!(!r.passed());
        assert_eq!(r.failing_laws(), vec!["equivalence.invertible"]);
        assert!(matches!(
            check_bialgebra_equivalence(&Matrix::identity(3, D), &fixtures::pb2(), &fixtures::pb2()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn mismatched_twists_rejected() {
        let b = fixtures::pb2();
        let c = fixtures::tb2().coalg().clone();
        assert!(TernaryBialgebra::new(b.alg().clone(), c).is_err());
    }
}
