//! Two ternary algebras acting on each other, the conditions that make
//! `A ⊕ B` a hom-associative algebra, and that bicrossed product itself.

use crate::algebra::{check_hom_associativity, TernaryAlgebra};
use crate::conditions::{act, mu, tw, vars, Condition, Ctx, Expr, Op, Side};
use crate::error::{Error, Result};
use crate::linalg::Tensor4;
use crate::report::LawReport;
use crate::trimodule::{
    braiding, check_trimodule, intertwining, ActionMode, BihomModule, TrimoduleActions,
    TrimoduleLevel,
};

/// `act_a`: `A` acting on `B` (module maps: the twists of `B`).
/// `act_b`: `B` acting on `A` (module maps: the twists of `A`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairData {
    a: TernaryAlgebra,
    b: TernaryAlgebra,
    act_a: TrimoduleActions,
    act_b: TrimoduleActions,
}

impl MatchedPairData {
    pub fn new(
        a: TernaryAlgebra,
        b: TernaryAlgebra,
        act_a: TrimoduleActions,
        act_b: TrimoduleActions,
    ) -> Result<Self> {
        if a.radicand() != b.radicand() {
            return Err(Error::RadicandMismatch(a.radicand(), b.radicand()));
        }
        act_a.fits(a.dim(), b.dim(), a.radicand())?;
        act_b.fits(b.dim(), a.dim(), a.radicand())?;
        Ok(MatchedPairData { a, b, act_a, act_b })
    }

    pub fn a(&self) -> &TernaryAlgebra {
        &self.a
    }

    pub fn b(&self) -> &TernaryAlgebra {
        &self.b
    }

    pub fn act_a(&self) -> &TrimoduleActions {
        &self.act_a
    }

    pub fn act_b(&self) -> &TrimoduleActions {
        &self.act_b
    }

    /// `B` with the twists of `B`, the space `A` acts on.
    pub fn module_b(&self) -> BihomModule {
        BihomModule::new(self.b.alpha1().clone(), self.b.alpha2().clone()).expect("square")
    }

    /// `A` with the twists of `A`, the space `B` acts on.
    pub fn module_a(&self) -> BihomModule {
        BihomModule::new(self.a.alpha1().clone(), self.a.alpha2().clone()).expect("square")
    }
}

/// The twenty cross conditions, one per placement of arguments from both
/// algebras among the five slots with at least two from each. Variables are
/// listed in slot order; `x, y, z` range over `A` and `a, b, c` over `B`.
fn cross_conditions(mode: ActionMode) -> Vec<Condition> {
    use Op::{L, M, R};
    use Side::{A, B};
    let p = mode.prefix();
    let shape = mode.shape();
    let a1 = |e: &Expr| tw(A, 1, e);
    let a2 = |e: &Expr| tw(A, 2, e);
    let b1 = |e: &Expr| tw(B, 1, e);
    let b2 = |e: &Expr| tw(B, 2, e);
    let mut out = Vec::new();
    let mut push = |k: usize, sides: &[Side], exprs: Vec<Expr>| {
        out.push(Condition::new(
            format!("matchedpair.mp{}", k - 6),
            format!("{p}{k}"),
            sides,
            shape,
            exprs,
        ));
    };

    let [a, b, x, y, z] = &vars();
    push(7, &[B, B, A, A, A], vec![
        mu(A, act(B, L, a, b, x), a1(y), a2(z)),
        act(B, L, b1(a), act(A, R, x, y, b), a2(z)),
        act(B, L, b1(a), b2(b), mu(A, x, y, z)),
    ]);
    let [a, x, b, y, z] = &vars();
    push(8, &[B, A, B, A, A], vec![
        mu(A, act(B, M, a, b, x), a1(y), a2(z)),
        act(B, L, b1(a), act(A, M, x, y, b), a2(z)),
        act(B, M, b1(a), act(A, R, y, z, b), a2(x)),
    ]);
    let [x, a, b, y, z] = &vars();
    push(9, &[A, B, B, A, A], vec![
        mu(A, act(B, R, a, b, x), a1(y), a2(z)),
        mu(A, a1(x), act(B, L, a, b, y), a2(z)),
        act(B, R, b2(a), act(A, R, y, z, b), a1(x)),
    ]);
    let [x, y, a, b, z] = &vars();
    push(10, &[A, A, B, B, A], vec![
        act(B, L, act(A, L, x, y, a), b1(b), a2(z)),
        mu(A, a1(x), act(B, R, a, b, y), a2(z)),
        mu(A, a1(x), a2(y), act(B, L, a, b, z)),
    ]);
    let [x, a, y, b, z] = &vars();
    push(11, &[A, B, A, B, A], vec![
        act(B, L, act(A, M, x, y, a), b1(b), a2(z)),
        mu(A, a1(x), act(B, M, a, b, y), a2(z)),
        act(B, R, b2(a), act(A, M, y, z, b), a1(x)),
    ]);
    let [a, x, y, b, z] = &vars();
    push(12, &[B, A, A, B, A], vec![
        act(B, L, act(A, R, x, y, a), b1(b), a2(z)),
        act(B, L, b1(a), act(A, L, x, y, b), a2(z)),
        act(B, M, b1(a), act(A, M, y, z, b), a2(x)),
    ]);
    let [x, y, a, z, b] = &vars();
    push(13, &[A, A, B, A, B], vec![
        act(B, M, act(A, L, x, y, a), b2(b), a1(z)),
        act(B, R, act(A, M, y, z, a), b2(b), a1(x)),
        mu(A, a1(x), a2(y), act(B, M, a, b, z)),
    ]);
    let [x, a, y, z, b] = &vars();
    push(14, &[A, B, A, A, B], vec![
        act(B, M, act(A, M, x, y, a), b2(b), a1(z)),
        act(B, R, act(A, R, y, z, a), b2(b), a1(x)),
        act(B, R, b2(a), act(A, L, y, z, b), a1(x)),
    ]);
    let [a, x, y, z, b] = &vars();
    push(15, &[B, A, A, A, B], vec![
        act(B, M, act(A, R, x, y, a), b2(b), a1(z)),
        act(B, M, b1(a), b2(b), mu(A, x, y, z)),
        act(B, M, b1(a), act(A, L, y, z, b), a2(x)),
    ]);
    let [x, y, z, a, b] = &vars();
    push(16, &[A, A, A, B, B], vec![
        act(B, R, b1(a), b2(b), mu(A, x, y, z)),
        act(B, R, act(A, L, y, z, a), b2(b), a1(x)),
        mu(A, a1(x), a2(y), act(B, R, a, b, z)),
    ]);
    let [x, y, a, b, c] = &vars();
    push(17, &[A, A, B, B, B], vec![
        mu(B, act(A, L, x, y, a), b1(b), b2(c)),
        act(A, L, a1(x), act(B, R, a, b, y), b2(c)),
        act(A, L, a1(x), a2(y), mu(B, a, b, c)),
    ]);
    let [x, a, y, b, c] = &vars();
    push(18, &[A, B, A, B, B], vec![
        mu(B, act(A, M, x, y, a), b1(b), b2(c)),
        act(A, L, a1(x), act(B, M, a, b, y), b2(c)),
        act(A, M, a1(x), act(B, R, b, c, y), b2(a)),
    ]);
    let [a, x, y, b, c] = &vars();
    push(19, &[B, A, A, B, B], vec![
        mu(B, act(A, R, x, y, a), b1(b), b2(c)),
        mu(B, b1(a), act(A, L, x, y, b), b2(c)),
        act(A, R, a2(x), act(B, R, b, c, y), b1(a)),
    ]);
    let [a, b, x, y, c] = &vars();
    push(20, &[B, B, A, A, B], vec![
        act(A, L, act(B, L, a, b, x), a1(y), b2(c)),
        mu(B, b1(a), act(A, R, x, y, b), b2(c)),
        mu(B, b1(a), b2(b), act(A, L, x, y, c)),
    ]);
    let [a, x, b, y, c] = &vars();
    push(21, &[B, A, B, A, B], vec![
        act(A, L, act(B, M, a, b, x), a1(y), b2(c)),
        mu(B, b1(a), act(A, M, x, y, b), b2(c)),
        act(A, R, a2(x), act(B, M, b, c, y), b1(a)),
    ]);
    let [x, a, b, y, c] = &vars();
    push(22, &[A, B, B, A, B], vec![
        act(A, L, act(B, R, a, b, x), a1(y), b2(c)),
        act(A, L, a1(x), act(B, L, a, b, y), b2(c)),
        act(A, M, a1(x), act(B, M, b, c, y), b2(a)),
    ]);
    let [a, b, x, c, y] = &vars();
    push(23, &[B, B, A, B, A], vec![
        act(A, M, act(B, L, a, b, x), a2(y), b1(c)),
        act(A, R, act(B, M, b, c, x), a2(y), b1(a)),
        mu(B, b1(a), b2(b), act(A, M, x, y, c)),
    ]);
    let [a, x, b, c, y] = &vars();
    push(24, &[B, A, B, B, A], vec![
        act(A, M, act(B, M, a, b, x), a2(y), b1(c)),
        act(A, R, act(B, R, b, c, x), a2(y), b1(a)),
        act(A, R, a2(x), act(B, L, b, c, y), b1(a)),
    ]);
    let [x, a, b, c, y] = &vars();
    push(25, &[A, B, B, B, A], vec![
        act(A, M, act(B, R, a, b, x), a2(y), b1(c)),
        act(A, M, a1(x), a2(y), mu(B, a, b, c)),
        act(A, M, a1(x), act(B, L, b, c, y), b2(a)),
    ]);
    let [a, b, c, x, y] = &vars();
    push(26, &[B, B, B, A, A], vec![
        act(A, R, a1(x), a2(y), mu(B, a, b, c)),
        act(A, R, act(B, L, b, c, x), a2(y), b1(a)),
        mu(B, b1(a), b2(b), act(A, R, x, y, c)),
    ]);
    out
}

/// Braiding and intertwining for both actions: `mp21`, `mp23`–`mp25` concern
/// `A` acting on `B`, `mp22`, `mp26`–`mp28` concern `B` acting on `A`.
fn full_pair_conditions(mode: ActionMode) -> Vec<Condition> {
    let p = mode.prefix();
    let mut out = Vec::new();
    for (k, side) in [(27, Side::A), (28, Side::B)] {
        for i in 1..=2 {
            let name = format!("matchedpair.mp{}.{i}", k - 6);
            out.push(braiding(side, i, name, format!("{p}{k}")));
        }
    }
    let ops = [Op::L, Op::M, Op::R];
    for (k0, side) in [(29, Side::A), (32, Side::B)] {
        for (j, op) in ops.into_iter().enumerate() {
            let k = k0 + j;
            for i in 1..=2 {
                let name = format!("matchedpair.mp{}.{i}", k - 6);
                out.push(intertwining(side, op, i, name, format!("{p}{k}")));
            }
        }
    }
    out
}

/// Checks the hypotheses (both algebras hom-associative, both actions quasi
/// trimodules; reported under `prereq.`) and then the cross conditions. With
/// `full`, the braiding and intertwining conditions of both actions are added.
pub fn check_matched_pair(mp: &MatchedPairData, mode: ActionMode, full: bool) -> LawReport {
    let mut report = LawReport::new(format!("matchedpair.{}", mode.name()));
    let (a, b) = (&mp.a, &mp.b);
    report.absorb(check_hom_associativity(a, mode.into()).prefixed("prereq.A."));
    report.absorb(check_hom_associativity(b, mode.into()).prefixed("prereq.B."));
    let quasi = |alg: &TernaryAlgebra, v: &BihomModule, act: &TrimoduleActions| {
        check_trimodule(alg, v, act, mode, TrimoduleLevel::Quasi).expect("validated shapes")
    };
    report.absorb(quasi(a, &mp.module_b(), &mp.act_a).prefixed("prereq.actA."));
    report.absorb(quasi(b, &mp.module_a(), &mp.act_b).prefixed("prereq.actB."));

    let mut conds = cross_conditions(mode);
    if full {
        conds.extend(full_pair_conditions(mode));
    }
    let ctx = Ctx {
        dims: [a.dim(), b.dim()],
        d: a.radicand(),
        mu: [Some(a.mu()), Some(b.mu())],
        twists: [[a.alpha1(), a.alpha2()], [b.alpha1(), b.alpha2()]],
        acts: [Some(&mp.act_a), Some(&mp.act_b)],
    };
    report.absorb(ctx.check("", &conds));
    report
}

/// The algebra on `A ⊕ B` (basis of `A` first) with product
///
/// ```text
/// τ(x+a, y+b, z+c) = μA(x,y,z) + L_B(a,b)z + M_B(a,c)y + R_B(b,c)x
///                  + μB(a,b,c) + L_A(x,y)c + M_A(x,z)b + R_A(y,z)a
/// ```
///
/// and twists `α_i ⊕ β_i`.
pub fn bicrossed_product(mp: &MatchedPairData) -> Result<TernaryAlgebra> {
    let (n, m) = (mp.a.dim(), mp.b.dim());
    let mut tau = Tensor4::cube(n + m, mp.a.radicand());
    // each block lands at the offsets given by which space each slot lives in;
    // the stored argument orders of the actions already follow slot order
    let blocks: [(&Tensor4, [usize; 4]); 8] = [
        (mp.a.mu(), [0, 0, 0, 0]),
        (mp.b.mu(), [n, n, n, n]),
        (mp.act_a.left(), [n, 0, 0, n]),
        (mp.act_a.middle(), [n, 0, n, 0]),
        (mp.act_a.right(), [n, n, 0, 0]),
        (mp.act_b.left(), [0, n, n, 0]),
        (mp.act_b.middle(), [0, n, 0, n]),
        (mp.act_b.right(), [0, 0, n, n]),
    ];
    for (t, [o0, i0, j0, k0]) in blocks {
        for ([o, i, j, k], x) in t.support() {
            tau.set(o0 + o, i0 + i, j0 + j, k0 + k, x.clone());
        }
    }
    TernaryAlgebra::new(
        tau,
        mp.a.alpha1().direct_sum(mp.b.alpha1())?,
        mp.a.alpha2().direct_sum(mp.b.alpha2())?,
    )
}
