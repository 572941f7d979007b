//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ternalg::*;

pub const D: u32 = 5;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An entry of {−1, 0, 1}, nonzero with probability `density`.
pub fn coeff(r: &mut ChaCha8Rng, density: f64) -> QuadScalar {
    if r.gen_bool(density) {
        QuadScalar::from_int(if r.gen_bool(0.5) { 1 } else { -1 }, D)
    } else {
        QuadScalar::zero(D)
    }
}

pub fn tensor(r: &mut ChaCha8Rng, dims: [usize; 4], density: f64) -> Tensor4 {
    let mut t = Tensor4::zeros(dims, D);
    for o in 0..dims[0] {
        for i in 0..dims[1] {
            for j in 0..dims[2] {
                for k in 0..dims[3] {
                    t.set(o, i, j, k, coeff(r, density));
                }
            }
        }
    }
    t
}

pub fn matrix(r: &mut ChaCha8Rng, n: usize, density: f64) -> Matrix {
    let mut m = Matrix::zeros(n, D);
    for k in 0..n {
        for j in 0..n {
            m.set(k, j, coeff(r, density));
        }
    }
    m
}

/// A twisting map: identity, a scalar multiple of it, or a random matrix.
pub fn twist(r: &mut ChaCha8Rng, n: usize) -> Matrix {
    match r.gen_range(0..4) {
        0 => Matrix::identity(n, D),
        1 => Matrix::identity(n, D).scale(&QuadScalar::from_int(-1, D)),
        2 => Matrix::zeros(n, D),
        _ => matrix(r, n, 0.5),
    }
}

/// Sparse products pass some laws often enough for both verdicts to occur.
pub fn algebra(r: &mut ChaCha8Rng, n: usize) -> TernaryAlgebra {
    let density = [0.05, 0.15, 0.4][r.gen_range(0..3)];
    let mu = tensor(r, [n; 4], density);
    let (a1, a2) = (twist(r, n), twist(r, n));
    TernaryAlgebra::new(mu, a1, a2).unwrap()
}

pub fn coalgebra(r: &mut ChaCha8Rng, n: usize) -> TernaryCoalgebra {
    dualize_algebra(&algebra(r, n))
}

pub fn bialgebra(r: &mut ChaCha8Rng, n: usize) -> TernaryBialgebra {
    let a = algebra(r, n);
    let density = [0.05, 0.15, 0.4][r.gen_range(0..3)];
    let delta = tensor(r, [n; 4], density);
    let c = TernaryCoalgebra::new(delta, a.alpha1().clone(), a.alpha2().clone()).unwrap();
    TernaryBialgebra::new(a, c).unwrap()
}

pub fn actions(r: &mut ChaCha8Rng, dim_a: usize, dim_v: usize, density: f64) -> TrimoduleActions {
    let (a, v) = (dim_a, dim_v);
    TrimoduleActions::new(
        tensor(r, [v, a, a, v], density),
        tensor(r, [v, a, v, a], density),
        tensor(r, [v, v, a, a], density),
    )
    .unwrap()
}

pub fn module(r: &mut ChaCha8Rng, n: usize) -> BihomModule {
    BihomModule::new(twist(r, n), twist(r, n)).unwrap()
}

pub fn dim(r: &mut ChaCha8Rng, max: usize) -> usize {
    r.gen_range(1..=max)
}

pub fn gen_bool(r: &mut ChaCha8Rng, p: f64) -> bool {
    r.gen_bool(p)
}

pub fn pick<T: Clone>(r: &mut ChaCha8Rng, xs: &[T]) -> T {
    xs[r.gen_range(0..xs.len())].clone()
}

/// A random invertible matrix with entries in {−1, 0, 1}.
pub fn invertible(r: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let m = matrix(r, n, 0.6);
        if m.is_invertible() {
            return m;
        }
    }
}

/// The structure carried along `f`: `μ' = f∘μ∘(f⁻¹)^{⊗3}`,
/// `Δ' = f^{⊗3}∘Δ∘f⁻¹`, `α' = f α f⁻¹`. Then `f` is an equivalence.
pub fn transport(b: &TernaryBialgebra, f: &Matrix) -> TernaryBialgebra {
    let g = f.inverse().unwrap();
    let conj = |a: &Matrix| f.compose(a).unwrap().compose(&g).unwrap();
    let (a1, a2) = (conj(b.alpha1()), conj(b.alpha2()));
    let mu = b.alg().mu().precompose([Some(&g), Some(&g), Some(&g)]).unwrap();
    let mu = mu.map_output(f).unwrap();
    let ft = f.transpose();
    let delta = b.coalg().delta().precompose([Some(&ft), Some(&ft), Some(&ft)]).unwrap();
    let delta = delta.map_output(&g.transpose()).unwrap();
    TernaryBialgebra::new(
        TernaryAlgebra::new(mu, a1.clone(), a2.clone()).unwrap(),
        TernaryCoalgebra::new(delta, a1, a2).unwrap(),
    )
    .unwrap()
}

pub fn vector(r: &mut ChaCha8Rng, n: usize) -> Vector {
    let xs: Vec<i64> = (0..n).map(|_| r.gen_range(-3..=3)).collect();
    Vector::from_ints(&xs, D)
}

/// Algebras that pass `mode` with the given dimension, drawn by rejection.
pub fn passing_algebra(r: &mut ChaCha8Rng, n: usize, mode: AssocMode) -> TernaryAlgebra {
    loop {
        let a = algebra(r, n);
        if check_hom_associativity(&a, mode).passed() {
            return a;
        }
    }
}

/// `μ' = f∘μ∘(f⁻¹)^{⊗3}` with conjugated twists; `f` is then an isomorphism.
pub fn transport_algebra(a: &TernaryAlgebra, f: &Matrix) -> TernaryAlgebra {
    let g = f.inverse().unwrap();
    let conj = |m: &Matrix| f.compose(m).unwrap().compose(&g).unwrap();
    let mu = a.mu().precompose([Some(&g), Some(&g), Some(&g)]).unwrap();
    TernaryAlgebra::new(mu.map_output(f).unwrap(), conj(a.alpha1()), conj(a.alpha2())).unwrap()
}

/// `Δ' = f^{⊗3}∘Δ∘f⁻¹` with conjugated twists.
pub fn transport_coalgebra(c: &TernaryCoalgebra, f: &Matrix) -> TernaryCoalgebra {
    let g = f.inverse().unwrap();
    let conj = |m: &Matrix| f.compose(m).unwrap().compose(&g).unwrap();
    let ft = f.transpose();
    let delta = c.delta().precompose([Some(&ft), Some(&ft), Some(&ft)]).unwrap();
    let delta = delta.map_output(&g.transpose()).unwrap();
    TernaryCoalgebra::new(delta, conj(c.alpha1()), conj(c.alpha2())).unwrap()
}

/// Nonzero coalgebras satisfying `mode`: duals of the algebra fixtures and
/// the fixture coproducts.
pub fn valid_coalgebras(mode: CoassocMode) -> Vec<TernaryCoalgebra> {
    let algebras = [
        fixtures::t2(),
        fixtures::t2h1(),
        fixtures::t2h2(),
        fixtures::p2(),
        fixtures::p2h(),
    ];
    let mut out: Vec<TernaryCoalgebra> = algebras.iter().map(dualize_algebra).collect();
    out.extend([fixtures::pb2(), fixtures::eq2(), fixtures::tb2()].map(|b| b.coalg().clone()));
    out.retain(|c| check_hom_coassociativity(c, mode).passed());
    out
}

/// Half plain random coalgebras of dimension ≤ 3, half random changes of
/// basis of a valid nonzero coalgebra.
pub fn coalgebra_sample(r: &mut ChaCha8Rng, mode: CoassocMode, count: usize) -> Vec<TernaryCoalgebra> {
    let valid = valid_coalgebras(mode);
    (0..count)
        .map(|i| {
            if i % 2 == 0 {
                let n = dim(r, 3);
                coalgebra(r, n)
            } else {
                let c = pick(r, &valid);
                let f = invertible(r, c.dim());
                transport_coalgebra(&c, &f)
            }
        })
        .collect()
}

/// The map-level coassociativity law written out in structure constants, with
/// every repeated index summed:
/// `Σ_{r,s,t} c^l_{rst} (c^r_{ijk} y^{1s}_q y^{2t}_p, y^{1r}_i c^s_{jkq} y^{2t}_p, y^{1r}_i y^{2s}_j c^t_{kqp})`.
pub fn summed_identity(c: &TernaryCoalgebra, mode: CoassocMode) -> bool {
    let n = c.dim();
    let k = |l, r, s, t| c.delta().get(l, r, s, t).clone();
    let y = |i: usize, j: usize, q: usize| c.alpha(i).get(q, j).clone();
    let zero = QuadScalar::zero(D);
    for idx in 0..n.pow(6) {
        let mut v = [0usize; 6];
        let mut t = idx;
        for x in v.iter_mut().rev() {
            *x = t % n;
            t /= n;
        }
        let [l, i, j, kk, q, p] = v;
        let mut s = [zero.clone(), zero.clone(), zero.clone()];
        for r in 0..n {
            for s_ in 0..n {
                for t_ in 0..n {
                    let head = k(l, r, s_, t_);
                    if head.is_zero() {
                        continue;
                    }
                    s[0] += &(&head * &(&(&k(r, i, j, kk) * &y(1, s_, q)) * &y(2, t_, p)));
                    s[1] += &(&head * &(&(&y(1, r, i) * &k(s_, j, kk, q)) * &y(2, t_, p)));
                    s[2] += &(&head * &(&(&y(1, r, i) * &y(2, s_, j)) * &k(t_, kk, q, p)));
                }
            }
        }
        let ok = match mode {
            AssocMode::Total => s[0] == s[1] && s[1] == s[2],
            AssocMode::Weak => s[0] == s[2],
            AssocMode::Partial => (&(&s[0] + &s[1]) + &s[2]).is_zero(),
        };
        if !ok {
            return false;
        }
    }
    true
}

/// The three twisted re-associations evaluated directly on vectors.
pub fn reassociate(a: &TernaryAlgebra, x: &[Vector; 5]) -> [Vector; 3] {
    let m = |p: &Vector, q: &Vector, r: &Vector| a.evaluate_mu(p, q, r).unwrap();
    let t1 = |v: &Vector| a.alpha1().apply(v).unwrap();
    let t2 = |v: &Vector| a.alpha2().apply(v).unwrap();
    [
        m(&m(&x[0], &x[1], &x[2]), &t1(&x[3]), &t2(&x[4])),
        m(&t1(&x[0]), &m(&x[1], &x[2], &x[3]), &t2(&x[4])),
        m(&t1(&x[0]), &t2(&x[1]), &m(&x[2], &x[3], &x[4])),
    ]
}

pub fn holds(mode: AssocMode, [p, q, r]: &[Vector; 3]) -> bool {
    match mode {
        AssocMode::Total => p == q && q == r,
        AssocMode::Weak => p == r,
        AssocMode::Partial => p.add(q).unwrap().add(r).unwrap().is_zero(),
    }
}

/// Vector-level oracles for the algebra and coalgebra laws, on `samples`
/// random arguments.
pub fn laws_hold_on_vectors(r: &mut ChaCha8Rng, a: &TernaryAlgebra, mode: AssocMode, samples: usize) -> bool {
    let n = a.dim();
    (0..samples).all(|_| {
        let xs: [Vector; 5] = std::array::from_fn(|_| vector(r, n));
        let twists_commute = [a.alpha1(), a.alpha2()].iter().all(|t| {
            let lhs = t.apply(&a.evaluate_mu(&xs[0], &xs[1], &xs[2]).unwrap()).unwrap();
            let moved: Vec<Vector> = xs[..3].iter().map(|x| t.apply(x).unwrap()).collect();
            lhs == a.evaluate_mu(&moved[0], &moved[1], &moved[2]).unwrap()
        });
        twists_commute && holds(mode, &reassociate(a, &xs))
    })
}

pub fn colaws_hold_on_vectors(r: &mut ChaCha8Rng, c: &TernaryCoalgebra, mode: AssocMode, samples: usize) -> bool {
    let n = c.dim();
    let comult = (0..samples).all(|_| {
        let x = vector(r, n);
        [c.alpha1(), c.alpha2()].iter().all(|t| {
            let lhs = tensor3_map(t, t, t, &c.evaluate_delta(&x).unwrap()).unwrap();
            lhs == c.evaluate_delta(&t.apply(&x).unwrap()).unwrap()
        })
    });
    comult && summed_identity(c, mode)
}
