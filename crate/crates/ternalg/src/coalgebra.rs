//! Ternary coalgebras twisted by two linear maps.
//!
//! Coassociativity is checked at the level of maps: the composites
//! `(Δ⊗α1⊗α2)∘Δ`, `(α1⊗Δ⊗α2)∘Δ` and `(α1⊗α2⊗Δ)∘Δ` are expanded into dense
//! five-fold tensors for each basis vector. The index-level identities are
//! kept separately, evaluated exactly as printed, as a cross-check.

use rayon::prelude::*;

use crate::algebra::{check_cube, check_square, compare_maps, AssocMode};
use crate::error::{Error, Result};
use crate::linalg::{tensor3_map, Matrix, Tensor3, Tensor4, Vector};
use crate::report::{LawReport, Residual};
use crate::scalar::QuadScalar;

/// `Δ(e_l) = Σ delta[l][r][s][t] e_r⊗e_s⊗e_t` together with `α1`, `α2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryCoalgebra {
    delta: Tensor4,
    alpha1: Matrix,
    alpha2: Matrix,
}

/// Coassociativity variants mirror the associativity ones.
pub type CoassocMode = AssocMode;

impl TernaryCoalgebra {
    pub fn new(delta: Tensor4, alpha1: Matrix, alpha2: Matrix) -> Result<Self> {
        let n = check_cube(&delta, "coproduct")?;
        check_square(&alpha1, n, delta.radicand(), "alpha1")?;
        check_square(&alpha2, n, delta.radicand(), "alpha2")?;
        Ok(TernaryCoalgebra {
            delta,
            alpha1,
            alpha2,
        })
    }

    pub fn classical(delta: Tensor4) -> Result<Self> {
        let n = check_cube(&delta, "coproduct")?;
        let id = Matrix::identity(n, delta.radicand());
        Self::new(delta, id.clone(), id)
    }

    pub fn zero(n: usize, d: u32) -> Self {
        Self::classical(Tensor4::cube(n, d)).expect("cubical")
    }

    pub fn dim(&self) -> usize {
        self.alpha1.dim()
    }

    pub fn radicand(&self) -> u32 {
        self.delta.radicand()
    }

    pub fn delta(&self) -> &Tensor4 {
        &self.delta
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

    pub fn with_twists(&self, alpha1: Matrix, alpha2: Matrix) -> Result<Self> {
        Self::new(self.delta.clone(), alpha1, alpha2)
    }

    /// `Δ(e_l)` for a 0-based index.
    pub fn coproduct(&self, l: usize) -> Tensor3 {
        let n = self.dim();
        let mut t = Tensor3::zeros(n, self.radicand());
        for r in 0..n {
            for s in 0..n {
                for u in 0..n {
                    *t.entry_mut(r, s, u) = self.delta.get(l, r, s, u).clone();
                }
            }
        }
        t
    }

    pub fn evaluate_delta(&self, x: &Vector) -> Result<Tensor3> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        if x.radicand() != self.radicand() {
            return Err(Error::RadicandMismatch(self.radicand(), x.radicand()));
        }
        let n = self.dim();
        let mut t = Tensor3::zeros(n, self.radicand());
        for (l, c) in x.support() {
            for r in 0..n {
                for s in 0..n {
                    for u in 0..n {
                        t.entry_mut(r, s, u).add_mul(c, self.delta.get(l, r, s, u));
                    }
                }
            }
        }
        Ok(t)
    }
}

pub fn evaluate_delta(c: &TernaryCoalgebra, x: &Vector) -> Result<Tensor3> {
    c.evaluate_delta(x)
}

/// Dense element of `A^{⊗5}`, local to the coassociativity checker.
struct Tensor5 {
    n: usize,
    data: Vec<QuadScalar>,
}

/// Sparse factor of a pure five-fold tensor.
enum Factor<'a> {
    Vec(&'a Vector),
    Ten(&'a Tensor3),
}

impl Factor<'_> {
    fn terms(&self) -> Vec<(Vec<usize>, QuadScalar)> {
        match self {
            Factor::Vec(v) => v.support().map(|(i, x)| (vec![i], x.clone())).collect(),
            Factor::Ten(t) => t
                .support()
                .map(|((r, s, u), x)| (vec![r, s, u], x.clone()))
                .collect(),
        }
    }
}

impl Tensor5 {
    fn zeros(n: usize, d: u32) -> Self {
        Tensor5 {
            n,
            data: vec![QuadScalar::zero(d); n.pow(5)],
        }
    }

    /// `self += c · (f1 ⊗ f2 ⊗ f3)`.
    fn add_pure(&mut self, c: &QuadScalar, factors: [Factor<'_>; 3]) {
        let [a, b, z] = factors.map(|f| f.terms());
        for (ia, xa) in &a {
            let ca = c * xa;
            for (ib, xb) in &b {
                let cab = &ca * xb;
                for (iz, xz) in &z {
                    let pos = ia
                        .iter()
                        .chain(ib)
                        .chain(iz)
                        .fold(0, |acc, &i| acc * self.n + i);
                    self.data[pos].add_mul(&cab, xz);
                }
            }
        }
    }
}

fn five_indices(l: usize, mut pos: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; 6];
    out[0] = l + 1;
    for i in (1..6).rev() {
        out[i] = pos % n + 1;
        pos /= n;
    }
    out
}

/// The three composites `(Δ⊗α1⊗α2)Δ(e_l)`, `(α1⊗Δ⊗α2)Δ(e_l)`, `(α1⊗α2⊗Δ)Δ(e_l)`.
fn composites(c: &TernaryCoalgebra, l: usize) -> [Tensor5; 3] {
    let n = c.dim();
    let d = c.radicand();
    let deltas: Vec<Tensor3> = (0..n).map(|r| c.coproduct(r)).collect();
    let a1: Vec<Vector> = (0..n).map(|r| c.alpha1().column(r)).collect();
    let a2: Vec<Vector> = (0..n).map(|r| c.alpha2().column(r)).collect();
    let mut out = [Tensor5::zeros(n, d), Tensor5::zeros(n, d), Tensor5::zeros(n, d)];
    for ((r, s, t), x) in deltas[l].support() {
        out[0].add_pure(x, [Factor::Ten(&deltas[r]), Factor::Vec(&a1[s]), Factor::Vec(&a2[t])]);
        out[1].add_pure(x, [Factor::Vec(&a1[r]), Factor::Ten(&deltas[s]), Factor::Vec(&a2[t])]);
        out[2].add_pure(x, [Factor::Vec(&a1[r]), Factor::Vec(&a2[s]), Factor::Ten(&deltas[t])]);
    }
    out
}

/// Checks the selected coassociativity law; violations are keyed by
/// `(l, i, j, k, q, p)`: the basis vector `e_l` and the coefficient position
/// `e_i⊗e_j⊗e_k⊗e_q⊗e_p`.
pub fn check_hom_coassociativity(c: &TernaryCoalgebra, mode: CoassocMode) -> LawReport {
    let n = c.dim();
    let mut report = LawReport::new(format!("coassoc.{}", mode.name()));
    let laws: &[(&str, &str)] = match mode {
        AssocMode::Total => &[("coassoc.total:12", "thctc"), ("coassoc.total:23", "thctc")],
        AssocMode::Partial => &[("coassoc.partial", "phctc")],
        AssocMode::Weak => &[("coassoc.weak", "wthctc")],
    };
    for (name, tag) in laws {
        report.declare(*name, *tag);
    }
    let per_vector: Vec<Vec<(usize, &str, QuadScalar)>> = (0..n)
        .into_par_iter()
        .map(|l| {
            let [p1, p2, p3] = composites(c, l);
            let mut found = Vec::new();
            for pos in 0..n.pow(5) {
                let (u, v, w) = (&p1.data[pos], &p2.data[pos], &p3.data[pos]);
                match mode {
                    AssocMode::Total => {
                        if u != v {
                            found.push((pos, laws[0].0, u - v));
                        }
                        if v != w {
                            found.push((pos, laws[1].0, v - w));
                        }
                    }
                    AssocMode::Partial => {
                        let s = &(u + v) + w;
                        if !s.is_zero() {
                            found.push((pos, laws[0].0, s));
                        }
                    }
                    AssocMode::Weak => {
                        if u != w {
                            found.push((pos, laws[0].0, u - w));
                        }
                    }
                }
            }
            found
        })
        .collect();
    for (name, _) in laws {
        for (l, found) in per_vector.iter().enumerate() {
            for (pos, law, r) in found {
                if law == name {
                    report.check(law, five_indices(l, *pos, n), Residual::Scalar(r.clone()));
                }
            }
        }
    }
    report
}

/// `α_i^{⊗3} ∘ Δ = Δ ∘ α_i` on every basis vector, `i = 1, 2`.
pub fn check_comultiplicative(c: &TernaryCoalgebra) -> LawReport {
    let mut report = LawReport::new("comultiplicative");
    for i in 1..=2 {
        let name = format!("comultiplicative.alpha{i}");
        report.declare(&name, "comultiplicative");
        let al = c.alpha(i);
        for l in 0..c.dim() {
            let left = tensor3_map(al, al, al, &c.coproduct(l)).expect("shapes");
            let right = c.evaluate_delta(&al.column(l)).expect("shapes");
            report.check(&name, vec![l + 1], Residual::Tensor(left.sub(&right).expect("shapes")));
        }
    }
    report
}

/// Evaluates the printed structure-constant identities verbatim.
///
/// With `c^l_{rst}` the coproduct constants and `y^{ij}_k` the coefficient of
/// `e_k` in `α_i(e_j)`, the three sums over `r` alone are
///
/// ```text
/// S1 = Σ_r c^l_{rst} c^r_{ijk} y^{1s}_q y^{2t}_p
/// S2 = Σ_r c^l_{rst} c^s_{jkq} y^{1r}_i y^{2t}_p
/// S3 = Σ_r c^l_{rst} c^t_{kqp} y^{1r}_i y^{2s}_j
/// ```
///
/// for every choice of the free indices `(i, j, k, s, t, l, p, q)`. Partial
/// asks `S1 + S2 + S3 = 0`, Total `S1 = S2 = S3`, Weak `S1 = S3`. Since `s`
/// and `t` stay free, this is in general stronger than the map-level law;
/// callers compare the two verdicts rather than assume they agree.
pub fn structure_identity_check(c: &TernaryCoalgebra, mode: CoassocMode) -> LawReport {
    let n = c.dim();
    let k_ = |l: usize, r: usize, s: usize, t: usize| c.delta().get(l, r, s, t);
    let y = |i: usize, j: usize, k: usize| c.alpha(i).get(k, j);
    let mut report = LawReport::new(format!("structure.{}", mode.name()));
    let laws: &[(&str, &str)] = match mode {
        AssocMode::Partial => &[("structure.partial", "q2")],
        AssocMode::Total => &[("structure.total:12", "q3"), ("structure.total:23", "q3")],
        AssocMode::Weak => &[("structure.weak", "q4")],
    };
    for (name, tag) in laws {
        report.declare(*name, *tag);
    }
    let d = c.radicand();
    let mut found: Vec<Vec<(Vec<usize>, QuadScalar)>> = vec![Vec::new(); laws.len()];
    let idx = |t: usize| crate::algebra::tuple_indices(t, n.max(1), 8);
    for tuple in 0..n.pow(8) {
        let v = idx(tuple);
        let [i, j, k, s, t, l, p, q] = [v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]].map(|x| x - 1);
        let mut s1 = QuadScalar::zero(d);
        let mut s2 = QuadScalar::zero(d);
        let mut s3 = QuadScalar::zero(d);
        for r in 0..n {
            let head = k_(l, r, s, t);
            if head.is_zero() {
                continue;
            }
            s1.add_mul(head, &(&(k_(r, i, j, k) * y(1, s, q)) * y(2, t, p)));
            s2.add_mul(head, &(&(k_(s, j, k, q) * y(1, r, i)) * y(2, t, p)));
            s3.add_mul(head, &(&(k_(t, k, q, p) * y(1, r, i)) * y(2, s, j)));
        }
        match mode {
            AssocMode::Partial => {
                let sum = &(&s1 + &s2) + &s3;
                if !sum.is_zero() {
                    found[0].push((v, sum));
                }
            }
            AssocMode::Total => {
                if s1 != s2 {
                    found[0].push((v.clone(), &s1 - &s2));
                }
                if s2 != s3 {
                    found[1].push((v, &s2 - &s3));
                }
            }
            AssocMode::Weak => {
                if s1 != s3 {
                    found[0].push((v, &s1 - &s3));
                }
            }
        }
    }
    for ((name, _), hits) in laws.iter().zip(found) {
        for (v, r) in hits {
            report.check(name, v, Residual::Scalar(r));
        }
    }
    report
}

/// Outcome of a coalgebra morphism check.
pub type ComorphismReport = crate::algebra::MorphismReport;

/// `(f⊗f⊗f)(Δ1(e)) = Δ2(f(e))` on basis vectors and `f ∘ α_i = α'_i ∘ f`.
pub fn check_coalgebra_morphism(
    f: &Matrix,
    c1: &TernaryCoalgebra,
    c2: &TernaryCoalgebra,
) -> Result<ComorphismReport> {
    if f.dim() != c1.dim() || c1.dim() != c2.dim() {
        return Err(Error::DimensionMismatch {
            expected: c1.dim(),
            found: if f.dim() != c1.dim() { f.dim() } else { c2.dim() },
        });
    }
    for d in [c1.radicand(), c2.radicand()] {
        if d != f.radicand() {
            return Err(Error::RadicandMismatch(f.radicand(), d));
        }
    }
    let mut report = LawReport::new("comorphism");
    report.declare("comorphism.coproduct", "comorphism");
    for l in 0..c1.dim() {
        let left = tensor3_map(f, f, f, &c1.coproduct(l))?;
        let right = c2.evaluate_delta(&f.column(l))?;
        report.check(
            "comorphism.coproduct",
            vec![l + 1],
            Residual::Tensor(left.sub(&right)?),
        );
    }
    for i in 1..=2 {
        let name = format!("comorphism.alpha{i}");
        report.declare(&name, "comorphism");
        compare_maps(&mut report, &name, &f.compose(c1.alpha(i))?, &c2.alpha(i).compose(f)?);
    }
    Ok(ComorphismReport {
        report,
        invertible: f.is_invertible(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const D: u32 = 5;

    #[test]
    fn evaluates_coproducts() {
        let c = fixtures::pb2().coalg().clone();
        let e1 = Vector::basis(2, 0, D);
        let e2 = Vector::basis(2, 1, D);
        assert_eq!(c.evaluate_delta(&e1).unwrap(), Tensor3::pure(&e2, &e2, &e2).unwrap());
        assert!(c.evaluate_delta(&e2).unwrap().is_zero());
        assert!(c.evaluate_delta(&Vector::zeros(2, D)).unwrap().is_zero());
    }

    #[test]
    fn fixture_coassociativity() {
        assert!(check_hom_coassociativity(fixtures::pb2().coalg(), AssocMode::Partial).passed());
        assert!(check_hom_coassociativity(fixtures::tb2().coalg(), AssocMode::Total).passed());
        for mode in AssocMode::ALL {
            assert!(check_hom_coassociativity(&TernaryCoalgebra::zero(3, D), mode).passed());
            assert!(structure_identity_check(&TernaryCoalgebra::zero(3, D), mode).passed());
        }
        assert!(structure_identity_check(fixtures::pb2().coalg(), AssocMode::Partial).passed());
    }

    #[test]
    fn comultiplicativity() {
        let dual = crate::duality::dualize_algebra(&fixtures::t2h1());
        assert!(check_comultiplicative(&dual).passed());
        assert!(check_comultiplicative(&TernaryCoalgebra::classical(fixtures::tb2().coalg().delta().clone()).unwrap()).passed());
        let swap = Matrix::from_int_rows(&[&[0, 1], &[1, 0]], D);
        let pb2 = fixtures::pb2().coalg().clone();
        let bad = pb2.with_twists(swap, pb2.alpha2().clone()).unwrap();
        assert_eq!(check_comultiplicative(&bad).failing_laws(), vec!["comultiplicative.alpha1"]);
    }

    #[test]
    fn comorphisms() {
        let pb2 = fixtures::pb2().coalg().clone();
        let id = Matrix::identity(2, D);
        assert!(check_coalgebra_morphism(&id, &pb2, &pb2).unwrap().is_isomorphism());
        let swap = Matrix::from_int_rows(&[&[0, 1], &[1, 0]], D);
        let r = check_coalgebra_morphism(&swap, fixtures::eq1().coalg(), fixtures::eq2().coalg()).unwrap();
        assert!(r.is_isomorphism(), "{}", r.report);
        let r = check_coalgebra_morphism(&swap, &pb2, &pb2).unwrap();
        assert!(r.report.violations_of("comorphism.coproduct").any(|v| v.indices == vec![1]));
    }
}
