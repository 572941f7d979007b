//! A small expression language for the action compatibility conditions.
//!
//! Every condition is a list of expressions in variables that range over the
//! basis of one of two spaces. Side `A` is the acting algebra; side `B` is
//! either the module (trimodule conditions) or the second algebra (matched
//! pairs). Evaluation is exact and happens on every basis tuple.

use rayon::prelude::*;

use crate::linalg::{Matrix, Tensor4, Vector};
use crate::report::{LawReport, Residual};
use crate::trimodule::TrimoduleActions;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    A,
    B,
}

impl Side {
    fn idx(self) -> usize {
        match self {
            Side::A => 0,
            Side::B => 1,
        }
    }

    pub(crate) fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Op {
    L,
    M,
    R,
}

#[derive(Clone, Debug)]
pub(crate) enum Expr {
    Var(usize),
    /// Twisting map `i` of the given side.
    Twist(Side, usize, Box<Expr>),
    Mu(Side, Box<[Expr; 3]>),
    /// `Op(x, y)(v)` where the algebra on `Side` acts on the other space.
    Act(Side, Op, Box<[Expr; 3]>),
}

/// How the expressions of a condition are combined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Shape {
    /// Consecutive expressions are equal.
    Chain,
    /// Expressions sum to zero.
    Sum,
}

#[derive(Clone, Debug)]
pub(crate) struct Condition {
    pub name: String,
    pub tag: String,
    pub vars: Vec<Side>,
    pub shape: Shape,
    pub exprs: Vec<Expr>,
}

impl Condition {
    pub(crate) fn new(
        name: impl Into<String>,
        tag: impl Into<String>,
        vars: &[Side],
        shape: Shape,
        exprs: Vec<Expr>,
    ) -> Self {
        Condition {
            name: name.into(),
            tag: tag.into(),
            vars: vars.to_vec(),
            shape,
            exprs,
        }
    }

    /// Sub-law names: a three-term chain splits into `:12` and `:23`.
    fn parts(&self) -> Vec<(String, usize, usize)> {
        match (self.shape, self.exprs.len()) {
            (Shape::Chain, 3) => vec![
                (format!("{}:12", self.name), 0, 1),
                (format!("{}:23", self.name), 1, 2),
            ],
            (Shape::Chain, 2) => vec![(self.name.clone(), 0, 1)],
            (Shape::Sum, _) => vec![(self.name.clone(), 0, 0)],
            _ => unreachable!("chains have two or three terms"),
        }
    }
}

pub(crate) fn var(i: usize) -> Expr {
    Expr::Var(i)
}

pub(crate) fn vars<const N: usize>() -> [Expr; N] {
    std::array::from_fn(var)
}

impl From<&Expr> for Expr {
    fn from(e: &Expr) -> Self {
        e.clone()
    }
}

pub(crate) fn tw(side: Side, i: usize, e: impl Into<Expr>) -> Expr {
    Expr::Twist(side, i, Box::new(e.into()))
}

pub(crate) fn mu(side: Side, x: impl Into<Expr>, y: impl Into<Expr>, z: impl Into<Expr>) -> Expr {
    Expr::Mu(side, Box::new([x.into(), y.into(), z.into()]))
}

pub(crate) fn act(
    side: Side,
    op: Op,
    x: impl Into<Expr>,
    y: impl Into<Expr>,
    v: impl Into<Expr>,
) -> Expr {
    Expr::Act(side, op, Box::new([x.into(), y.into(), v.into()]))
}

/// Structure maps the expressions are evaluated against.
pub(crate) struct Ctx<'a> {
    pub dims: [usize; 2],
    pub d: u32,
    pub mu: [Option<&'a Tensor4>; 2],
    pub twists: [[&'a Matrix; 2]; 2],
    pub acts: [Option<&'a TrimoduleActions>; 2],
}

impl Ctx<'_> {
    fn eval(&self, e: &Expr, vars: &[Side], tuple: &[usize]) -> Vector {
        match e {
            Expr::Var(i) => Vector::basis(self.dims[vars[*i].idx()], tuple[*i], self.d),
            Expr::Twist(s, i, x) => {
                let v = self.eval(x, vars, tuple);
                self.twists[s.idx()][*i - 1].apply(&v).expect("shapes")
            }
            Expr::Mu(s, args) => {
                let [x, y, z] = args.as_ref().each_ref().map(|a| self.eval(a, vars, tuple));
                let mu = self.mu[s.idx()].expect("product available");
                mu.eval(&x, &y, &z).expect("shapes")
            }
            Expr::Act(s, op, args) => {
                let [x, y, v] = args.as_ref().each_ref().map(|a| self.eval(a, vars, tuple));
                let act = self.acts[s.idx()].expect("actions available");
                match op {
                    Op::L => act.left().eval(&x, &y, &v),
                    Op::M => act.middle().eval(&x, &v, &y),
                    Op::R => act.right().eval(&v, &x, &y),
                }
                .expect("shapes")
            }
        }
    }

    fn check_one(&self, c: &Condition) -> LawReport {
        let mut report = LawReport::new(c.name.clone());
        let parts = c.parts();
        for (name, _, _) in &parts {
            report.declare(name, &c.tag);
        }
        let radices: Vec<usize> = c.vars.iter().map(|s| self.dims[s.idx()]).collect();
        let count: usize = radices.iter().product();
        for t in 0..count {
            let tuple = mixed_digits(t, &radices);
            let values: Vec<Vector> = c.exprs.iter().map(|e| self.eval(e, &c.vars, &tuple)).collect();
            let indices: Vec<usize> = tuple.iter().map(|i| i + 1).collect();
            for (name, i, j) in &parts {
                let r = match c.shape {
                    Shape::Chain => values[*i].sub(&values[*j]).expect("same side"),
                    Shape::Sum => values[1..]
                        .iter()
                        .fold(values[0].clone(), |acc, v| acc.add(v).expect("same side")),
                };
                report.check(name, indices.clone(), Residual::Vector(r));
            }
        }
        report
    }

    /// Evaluates every condition on all basis tuples; sub-laws keep the order
    /// of `conds`.
    pub(crate) fn check(&self, law: &str, conds: &[Condition]) -> LawReport {
        let parts: Vec<LawReport> = conds.par_iter().map(|c| self.check_one(c)).collect();
        let mut report = LawReport::new(law);
        for p in parts {
            report.absorb(p);
        }
        report
    }
}

fn mixed_digits(mut t: usize, radices: &[usize]) -> Vec<usize> {
    let mut out = vec![0; radices.len()];
    for i in (0..radices.len()).rev() {
        out[i] = t % radices[i];
        t /= radices[i];
    }
    out
}
