//! Bihom-modules, left/middle/right actions of a ternary algebra on them, the
//! compatibility conditions between actions and product, and the semidirect
//! product on `A ⊕ V`.

use crate::algebra::{check_multiplicative, TernaryAlgebra};
use crate::conditions::{act, mu, tw, vars, Condition, Ctx, Expr, Op, Shape, Side};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tensor4};
use crate::report::LawReport;

/// A space `V` with two designated linear maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BihomModule {
    beta1: Matrix,
    beta2: Matrix,
}

impl BihomModule {
    pub fn new(beta1: Matrix, beta2: Matrix) -> Result<Self> {
        if beta1.dim() != beta2.dim() {
            return Err(Error::DimensionMismatch {
                expected: beta1.dim(),
                found: beta2.dim(),
            });
        }
        if beta1.radicand() != beta2.radicand() {
            return Err(Error::RadicandMismatch(beta1.radicand(), beta2.radicand()));
        }
        Ok(BihomModule { beta1, beta2 })
    }

    pub fn identity(n: usize, d: u32) -> Self {
        let id = Matrix::identity(n, d);
        BihomModule {
            beta1: id.clone(),
            beta2: id,
        }
    }

    pub fn dim(&self) -> usize {
        self.beta1.dim()
    }

    pub fn radicand(&self) -> u32 {
        self.beta1.radicand()
    }

    pub fn beta1(&self) -> &Matrix {
        &self.beta1
    }

    pub fn beta2(&self) -> &Matrix {
        &self.beta2
    }
}

/// Uncurried actions: `left[v][a][a][v]` with `L(x,y)v`, `middle[v][a][v][a]`
/// with `M(x,y)v` stored at the argument order `(x, v, y)`, and
/// `right[v][v][a][a]` with `R(x,y)v` stored at `(v, x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrimoduleActions {
    left: Tensor4,
    middle: Tensor4,
    right: Tensor4,
}

impl TrimoduleActions {
    pub fn new(left: Tensor4, middle: Tensor4, right: Tensor4) -> Result<Self> {
        let [v, a, _, _] = left.dims();
        let expect = [
            (&left, [v, a, a, v], "left"),
            (&middle, [v, a, v, a], "middle"),
            (&right, [v, v, a, a], "right"),
        ];
        for (t, dims, what) in expect {
            if t.dims() != dims {
                return Err(Error::ShapeMismatch(format!(
                    "{what} action has extents {:?}, expected {dims:?}",
                    t.dims()
                )));
            }
            if t.radicand() != left.radicand() {
                return Err(Error::RadicandMismatch(left.radicand(), t.radicand()));
            }
        }
        Ok(TrimoduleActions {
            left,
            middle,
            right,
        })
    }

    pub fn zero(dim_a: usize, dim_v: usize, d: u32) -> Self {
        let (a, v) = (dim_a, dim_v);
        TrimoduleActions {
            left: Tensor4::zeros([v, a, a, v], d),
            middle: Tensor4::zeros([v, a, v, a], d),
            right: Tensor4::zeros([v, v, a, a], d),
        }
    }

    pub fn left(&self) -> &Tensor4 {
        &self.left
    }

    pub fn middle(&self) -> &Tensor4 {
        &self.middle
    }

    pub fn right(&self) -> &Tensor4 {
        &self.right
    }

    pub fn dim_a(&self) -> usize {
        self.left.dims()[1]
    }

    pub fn dim_v(&self) -> usize {
        self.left.dims()[0]
    }

    pub fn radicand(&self) -> u32 {
        self.left.radicand()
    }

    pub fn with_left(&self, left: Tensor4) -> Result<Self> {
        Self::new(left, self.middle.clone(), self.right.clone())
    }

    pub fn with_middle(&self, middle: Tensor4) -> Result<Self> {
        Self::new(self.left.clone(), middle, self.right.clone())
    }

    pub fn with_right(&self, right: Tensor4) -> Result<Self> {
        Self::new(self.left.clone(), self.middle.clone(), right)
    }

    pub(crate) fn fits(&self, dim_a: usize, dim_v: usize, d: u32) -> Result<()> {
        if self.dim_a() != dim_a || self.dim_v() != dim_v {
            return Err(Error::ShapeMismatch(format!(
                "actions are for dim {} on dim_v {}, expected {dim_a} on {dim_v}",
                self.dim_a(),
                self.dim_v()
            )));
        }
        if self.radicand() != d {
            return Err(Error::RadicandMismatch(d, self.radicand()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionMode {
    Total,
    Partial,
}

impl ActionMode {
    pub const ALL: [ActionMode; 2] = [ActionMode::Total, ActionMode::Partial];

    pub fn name(self) -> &'static str {
        match self {
            ActionMode::Total => "total",
            ActionMode::Partial => "partial",
        }
    }

    pub(crate) fn prefix(self) -> &'static str {
        match self {
            ActionMode::Total => "tr",
            ActionMode::Partial => "pr",
        }
    }

    pub(crate) fn shape(self) -> Shape {
        match self {
            ActionMode::Total => Shape::Chain,
            ActionMode::Partial => Shape::Sum,
        }
    }
}

impl From<ActionMode> for crate::algebra::AssocMode {
    fn from(m: ActionMode) -> Self {
        match m {
            ActionMode::Total => crate::algebra::AssocMode::Total,
            ActionMode::Partial => crate::algebra::AssocMode::Partial,
        }
    }
}

/// `Quasi` checks only the five re-association conditions; `Full` adds the
/// middle-action braiding and the intertwining with the module maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrimoduleLevel {
    Quasi,
    Full,
}

/// The five conditions coming from re-associating a product with exactly one
/// module argument. Variables are listed in argument order.
fn quasi_conditions(mode: ActionMode) -> Vec<Condition> {
    use Op::{L, M, R};
    use Side::{A, B};
    let p = mode.prefix();
    let shape = mode.shape();
    let a1 = |e: Expr| tw(A, 1, e);
    let a2 = |e: Expr| tw(A, 2, e);
    let b1 = |e: Expr| tw(B, 1, e);
    let b2 = |e: Expr| tw(B, 2, e);
    let m = |x: Expr, y: Expr, z: Expr| mu(A, x, y, z);
    let on = |op: Op, x: Expr, y: Expr, v: Expr| act(A, op, x, y, v);
    let mut out = Vec::new();
    let mut push = |n: usize, sides: &[Side], exprs: Vec<Expr>| {
        let name = format!("trimodule.{p}{n}");
        out.push(Condition::new(name, format!("{p}{n}"), sides, shape, exprs));
    };

    let [a, b, c, d, v] = vars();
    push(1, &[A, A, A, A, B], vec![
        on(L, a1(a.clone()), a2(b.clone()), on(L, c.clone(), d.clone(), v.clone())),
        on(L, m(a.clone(), b.clone(), c.clone()), a1(d.clone()), b2(v.clone())),
        on(L, a1(a), m(b, c, d), b2(v)),
    ]);

    let [v, a, b, c, d] = vars();
    push(2, &[B, A, A, A, A], vec![
        on(R, a1(c.clone()), a2(d.clone()), on(R, a.clone(), b.clone(), v.clone())),
        on(R, a2(a.clone()), m(b.clone(), c.clone(), d.clone()), b1(v.clone())),
        on(R, m(a, b, c), a2(d), b1(v)),
    ]);

    let [a, b, c, v, d] = vars();
    push(4, &[A, A, A, B, A], vec![
        on(M, a1(a.clone()), a2(d.clone()), on(L, b.clone(), c.clone(), v.clone())),
        on(L, a1(a.clone()), a2(b.clone()), on(M, c.clone(), d.clone(), v.clone())),
        on(M, m(a, b, c), a2(d), b1(v)),
    ]);

    let [a, v, b, c, d] = vars();
    push(5, &[A, B, A, A, A], vec![
        on(M, a1(a.clone()), a2(d.clone()), on(R, b.clone(), c.clone(), v.clone())),
        on(R, a1(c.clone()), a2(d.clone()), on(M, a.clone(), b.clone(), v.clone())),
        on(M, a1(a), m(b, c, d), b2(v)),
    ]);

    let [a, b, v, c, d] = vars();
    push(6, &[A, A, B, A, A], vec![
        on(R, a1(c.clone()), a2(d.clone()), on(L, a.clone(), b.clone(), v.clone())),
        on(L, a1(a.clone()), a2(b.clone()), on(R, c.clone(), d.clone(), v.clone())),
        on(M, a1(a), a2(d), on(M, b, c, v)),
    ]);
    out
}

/// Braiding of three middle actions with twisted arguments, for the algebra
/// on side `s` acting on the other side, with module map `i`.
pub(crate) fn braiding(s: Side, i: usize, name: String, tag: String) -> Condition {
    let o = s.other();
    let a1 = |e: Expr| tw(s, 1, e);
    let a2 = |e: Expr| tw(s, 2, e);
    let mid = |x: Expr, y: Expr, v: Expr| act(s, Op::M, x, y, v);
    let [a, b, c, x, y, z, v] = vars();
    let lhs = mid(
        a1(a.clone()),
        a2(z.clone()),
        mid(
            a1(b.clone()),
            a2(y.clone()),
            mid(a1(c.clone()), a2(x.clone()), tw(o, i, v.clone())),
        ),
    );
    let rhs = mid(
        mu(s, a1(a), a1(b), a1(c)),
        mu(s, a2(x), a2(y), a2(z)),
        tw(o, i, v),
    );
    Condition::new(name, tag, &[s, s, s, s, s, s, o], Shape::Chain, vec![lhs, rhs])
}

/// `β_i(Op(x,y)v) = Op(α1 x, α2 y) β_i v` for the algebra on side `s`.
pub(crate) fn intertwining(s: Side, op: Op, i: usize, name: String, tag: String) -> Condition {
    let o = s.other();
    let [x, y, v] = vars();
    let lhs = tw(o, i, act(s, op, x.clone(), y.clone(), v.clone()));
    let rhs = act(s, op, tw(s, 1, x), tw(s, 2, y), tw(o, i, v));
    Condition::new(name, tag, &[s, s, o], Shape::Chain, vec![lhs, rhs])
}

fn full_conditions(mode: ActionMode) -> Vec<Condition> {
    let p = mode.prefix();
    let mut out = vec![
        braiding(Side::A, 1, format!("trimodule.{p}3"), format!("{p}3")),
        braiding(Side::A, 2, format!("trimodule.{p}3.2"), format!("{p}3.2")),
    ];
    for (n, op) in [(7, Op::L), (8, Op::M), (9, Op::R)] {
        for i in 1..=2 {
            out.push(intertwining(
                Side::A,
                op,
                i,
                format!("trimodule.{p}{n}.{i}"),
                format!("{p}{n}"),
            ));
        }
    }
    out
}

/// Checks the action conditions on all basis tuples. Each condition is a
/// separately named sub-law; in total mode three-term chains are split into
/// `:12` and `:23`.
pub fn check_trimodule(
    a: &TernaryAlgebra,
    v: &BihomModule,
    act: &TrimoduleActions,
    mode: ActionMode,
    level: TrimoduleLevel,
) -> Result<LawReport> {
    if v.radicand() != a.radicand() {
        return Err(Error::RadicandMismatch(a.radicand(), v.radicand()));
    }
    act.fits(a.dim(), v.dim(), a.radicand())?;
    let mut conds = quasi_conditions(mode);
    if level == TrimoduleLevel::Full {
        conds.extend(full_conditions(mode));
    }
    let ctx = Ctx {
        dims: [a.dim(), v.dim()],
        d: a.radicand(),
        mu: [Some(a.mu()), None],
        twists: [[a.alpha1(), a.alpha2()], [v.beta1(), v.beta2()]],
        acts: [Some(act), None],
    };
    Ok(ctx.check(&format!("trimodule.{}", mode.name()), &conds))
}

/// Which multiplications of the algebra act on its own underlying space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegularKind {
    LeftOnly,
    RightOnly,
    Lmr,
}

/// The algebra acting on itself through its left, middle and right
/// multiplications, with module maps equal to the twists.
pub fn regular_actions(
    a: &TernaryAlgebra,
    which: RegularKind,
) -> Result<(BihomModule, TrimoduleActions)> {
    if !check_multiplicative(a).passed() {
        return Err(Error::NotMultiplicative);
    }
    let n = a.dim();
    let zero = TrimoduleActions::zero(n, n, a.radicand());
    // with the stored argument orders all three actions read off the product
    let mu = a.mu().clone();
    let act = match which {
        RegularKind::LeftOnly => zero.with_left(mu)?,
        RegularKind::RightOnly => zero.with_right(mu)?,
        RegularKind::Lmr => TrimoduleActions::new(mu.clone(), mu.clone(), mu)?,
    };
    let module = BihomModule::new(a.alpha1().clone(), a.alpha2().clone())?;
    Ok((module, act))
}

/// The algebra on `A ⊕ V` with product
/// `μ(x,y,z) + L(x,y)c + M(x,z)b + R(y,z)a` and twists `α_i ⊕ β_i`.
/// Basis order: `e_1..e_n` of `A`, then the basis of `V`.
pub fn semidirect_product(
    a: &TernaryAlgebra,
    v: &BihomModule,
    act: &TrimoduleActions,
) -> Result<TernaryAlgebra> {
    if v.radicand() != a.radicand() {
        return Err(Error::RadicandMismatch(a.radicand(), v.radicand()));
    }
    act.fits(a.dim(), v.dim(), a.radicand())?;
    let n = a.dim();
    let mut tau = Tensor4::cube(n + v.dim(), a.radicand());
    for ([o, x, y, z], c) in a.mu().support() {
        tau.set(o, x, y, z, c.clone());
    }
    for ([o, x, y, c], s) in act.left().support() {
        tau.set(n + o, x, y, n + c, s.clone());
    }
    for ([o, x, b, z], s) in act.middle().support() {
        tau.set(n + o, x, n + b, z, s.clone());
    }
    for ([o, w, y, z], s) in act.right().support() {
        tau.set(n + o, n + w, y, z, s.clone());
    }
    TernaryAlgebra::new(
        tau,
        a.alpha1().direct_sum(v.beta1())?,
        a.alpha2().direct_sum(v.beta2())?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_hom_associativity, AssocMode};
    use crate::fixtures;
    use crate::scalar::QuadScalar;

    const D: u32 = 5;

    #[test]
    fn regular_actions_of_twisted_t2() {
        let a = fixtures::t2h1();
        for kind in [RegularKind::LeftOnly, RegularKind::RightOnly, RegularKind::Lmr] {
            let (v, act) = regular_actions(&a, kind).unwrap();
            let r = check_trimodule(&a, &v, &act, ActionMode::Total, TrimoduleLevel::Quasi).unwrap();
            assert!(r.passed(), "{kind:?}: {r}");
        }
        let (_, act) = regular_actions(&a, RegularKind::Lmr).unwrap();
        assert!(act.left().get(0, 0, 0, 0).is_one());
    }

    #[test]
    fn regular_actions_need_multiplicativity() {
        let swap = Matrix::from_int_rows(&[&[0, 1], &[1, 0]], D);
        let bad = fixtures::p2().with_twists(swap, Matrix::identity(2, D)).unwrap();
        assert_eq!(
            regular_actions(&bad, RegularKind::Lmr).unwrap_err(),
            Error::NotMultiplicative
        );
        let (_, act) = regular_actions(&fixtures::p2(), RegularKind::LeftOnly).unwrap();
        assert!(act.middle().is_zero() && act.right().is_zero());
    }

    #[test]
    fn zero_actions_pass_everything() {
        let a = fixtures::t2h1();
        let v = BihomModule::new(fixtures::rho1(), fixtures::rho2()).unwrap();
        let act = TrimoduleActions::zero(2, 2, D);
        for mode in ActionMode::ALL {
            let r = check_trimodule(&a, &v, &act, mode, TrimoduleLevel::Full).unwrap();
            assert!(r.passed());
            assert!(r.has_law(&format!("trimodule.{}3.2", mode.prefix())));
        }
    }

    #[test]
    fn perturbed_left_action_names_a_condition() {
        let a = fixtures::t2h1();
        let (v, act) = regular_actions(&a, RegularKind::Lmr).unwrap();
        let mut left = act.left().clone();
        *left.entry_mut(0, 0, 0, 0) += &QuadScalar::one(D);
        let act = act.with_left(left).unwrap();
        let r = check_trimodule(&a, &v, &act, ActionMode::Total, TrimoduleLevel::Quasi).unwrap();
        assert!(!r.passed());
        assert!(r.failing_laws().iter().all(|l| l.starts_with("trimodule.tr")));
        let sd = semidirect_product(&a, &v, &act).unwrap();
        assert!(!check_hom_associativity(&sd, AssocMode::Total).passed());
    }

    #[test]
    fn semidirect_of_regular_actions() {
        let a = fixtures::t2h1();
        let (v, act) = regular_actions(&a, RegularKind::Lmr).unwrap();
        let sd = semidirect_product(&a, &v, &act).unwrap();
        assert_eq!(sd.dim(), 4);
        assert!(check_hom_associativity(&sd, AssocMode::Total).passed());
    }

    #[test]
    fn shape_errors() {
        let a = fixtures::t2h1();
        let v = BihomModule::identity(3, D);
        let act = TrimoduleActions::zero(2, 2, D);
        assert!(check_trimodule(&a, &v, &act, ActionMode::Total, TrimoduleLevel::Quasi).is_err());
        assert!(TrimoduleActions::new(
            Tensor4::zeros([1, 2, 2, 1], D),
            Tensor4::zeros([1, 2, 2, 1], D),
            Tensor4::zeros([1, 1, 2, 2], D)
        )
        .is_err());
    }
}
