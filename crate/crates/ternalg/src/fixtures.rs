//! The worked two-dimensional examples, over ℚ(√5).
//!
//! Tables are written with 1-based basis labels, as they are usually printed.

use crate::algebra::TernaryAlgebra;
use crate::coalgebra::TernaryCoalgebra;
use crate::infinitesimal_bialgebra::TernaryBialgebra;
use crate::linalg::{Matrix, Tensor4};
use crate::scalar::QuadScalar;

pub const RADICAND: u32 = 5;
const D: u32 = RADICAND;

/// Tensor from `(out, [i, j, k], coefficient)` triples, 1-based.
fn sparse(entries: &[(usize, [usize; 3], QuadScalar)]) -> Tensor4 {
    let mut t = Tensor4::cube(2, D);
    for (o, [i, j, k], x) in entries {
        t.set(o - 1, i - 1, j - 1, k - 1, x.clone());
    }
    t
}

/// Tensor from integer images `μ(e_i, e_j, e_k) = a e1 + b e2`.
fn table(images: &[([usize; 3], [i64; 2])]) -> Tensor4 {
    let mut entries = Vec::new();
    for (ijk, ab) in images {
        for (o, c) in ab.iter().enumerate() {
            if *c != 0 {
                entries.push((o + 1, *ijk, QuadScalar::from_int(*c, D)));
            }
        }
    }
    sparse(&entries)
}

fn int_matrix(rows: [[i64; 2]; 2]) -> Matrix {
    Matrix::from_int_rows(&[&rows[0], &rows[1]], D)
}

/// Matrix with entries `x / √5`.
fn over_sqrt5(rows: [[i64; 2]; 2]) -> Matrix {
    let row = |r: [i64; 2]| r.iter().map(|&x| QuadScalar::quad(0, x, 5, D)).collect();
    Matrix::from_rows(vec![row(rows[0]), row(rows[1])], D).expect("2x2")
}

/// Three-index patterns grouped by the number of `2`s.
const ONE_TWO: [[usize; 3]; 3] = [[1, 1, 2], [1, 2, 1], [2, 1, 1]];
const TWO_TWOS: [[usize; 3]; 3] = [[1, 2, 2], [2, 1, 2], [2, 2, 1]];

/// `μ(e1, e1, e1) = e2`, all other products zero, identity twists.
pub fn p2() -> TernaryAlgebra {
    TernaryAlgebra::classical(table(&[([1, 1, 1], [0, 1])])).expect("valid")
}

/// The endomorphisms of [`p2`]: `e1 ↦ a e1 + b e2`, `e2 ↦ a³ e2`.
pub fn p2_endomorphism(a: i64, b: i64) -> Matrix {
    int_matrix([[a, 0], [b, a * a * a]])
}

/// [`p2`] twisted by `p2_endomorphism(2, 3)`.
pub fn p2h() -> TernaryAlgebra {
    crate::algebra::yau_twist(&p2(), &p2_endomorphism(2, 3)).expect("endomorphism")
}

fn t2_table() -> Tensor4 {
    let mut images = vec![([1, 1, 1], [1, 0]), ([2, 2, 2], [1, 2])];
    images.extend(ONE_TWO.iter().map(|&ijk| (ijk, [0, 1])));
    images.extend(TWO_TWOS.iter().map(|&ijk| (ijk, [1, 1])));
    table(&images)
}

/// The totally associative two-dimensional algebra with identity twists.
pub fn t2() -> TernaryAlgebra {
    TernaryAlgebra::classical(t2_table()).expect("valid")
}

/// `ρ1`: `e1 ↦ e1`, `e2 ↦ e1 − e2`.
pub fn rho1() -> Matrix {
    int_matrix([[1, 1], [0, -1]])
}

/// `ρ2`: `e1 ↦ (e1 − 2e2)/√5`, `e2 ↦ (3e1 − e2)/√5`.
pub fn rho2() -> Matrix {
    over_sqrt5([[1, 3], [-2, -1]])
}

/// The six automorphisms of [`t2`], in the order they are listed.
pub fn t2_automorphisms() -> Vec<Matrix> {
    vec![
        int_matrix([[1, 0], [0, 1]]),
        int_matrix([[-1, 0], [0, -1]]),
        int_matrix([[-1, -1], [0, 1]]),
        over_sqrt5([[-1, -3], [2, 1]]),
        int_matrix([[1, 1], [0, -1]]),
        over_sqrt5([[1, 3], [-2, -1]]),
    ]
}

fn t2h1_table() -> Tensor4 {
    let mut images = vec![([1, 1, 1], [1, 0]), ([2, 2, 2], [3, -2])];
    images.extend(ONE_TWO.iter().map(|&ijk| (ijk, [1, -1])));
    images.extend(TWO_TWOS.iter().map(|&ijk| (ijk, [2, -1])));
    table(&images)
}

/// `(T, μ̃1, ρ1)`, written out coefficient by coefficient.
pub fn t2h1() -> TernaryAlgebra {
    TernaryAlgebra::new(t2h1_table(), rho1(), rho1()).expect("valid")
}

/// `(T, μ̃2, ρ2)`, written out coefficient by coefficient.
pub fn t2h2() -> TernaryAlgebra {
    let image = |ijk: [usize; 3], a: i64, b: i64| {
        [
            (1, ijk, QuadScalar::quad(0, a, 5, D)),
            (2, ijk, QuadScalar::quad(0, b, 5, D)),
        ]
    };
    let mut entries = Vec::new();
    entries.extend(image([1, 1, 1], 1, -2));
    entries.extend(image([2, 2, 2], 7, -4));
    for ijk in ONE_TWO {
        entries.extend(image(ijk, 3, -1));
    }
    for ijk in TWO_TWOS {
        entries.extend(image(ijk, 4, -3));
    }
    TernaryAlgebra::new(sparse(&entries), rho2(), rho2()).expect("valid")
}

/// `e1 ↔ e2`.
pub fn swap() -> Matrix {
    int_matrix([[0, 1], [1, 0]])
}

fn bialgebra(mu: Tensor4, delta: Tensor4, rho: Matrix) -> TernaryBialgebra {
    let alg = TernaryAlgebra::new(mu, rho.clone(), rho.clone()).expect("valid");
    let coalg = TernaryCoalgebra::new(delta, rho.clone(), rho).expect("valid");
    TernaryBialgebra::new(alg, coalg).expect("shared twists")
}

/// Partially hom-associative: the [`p2`] product, `Δ(e1) = e2⊗e2⊗e2`,
/// `Δ(e2) = 0`, `ρ: e1 ↦ e1 + e2, e2 ↦ e2`.
pub fn pb2() -> TernaryBialgebra {
    eq1()
}

/// Totally hom-associative: the [`t2h1`] product, the same constants as
/// coproduct, twisted by [`rho1`].
pub fn tb2() -> TernaryBialgebra {
    bialgebra(t2h1_table(), t2h1_table(), rho1())
}

/// First member of the equivalent pair; the same data as [`pb2`].
pub fn eq1() -> TernaryBialgebra {
    bialgebra(
        table(&[([1, 1, 1], [0, 1])]),
        sparse(&[(1, [2, 2, 2], QuadScalar::one(D))]),
        int_matrix([[1, 0], [1, 1]]),
    )
}

/// Second member: `μ(e2, e2, e2) = e1`, `Δ(e2) = e1⊗e1⊗e1`,
/// `ρ': e1 ↦ e1, e2 ↦ e1 + e2`.
pub fn eq2() -> TernaryBialgebra {
    bialgebra(
        table(&[([2, 2, 2], [1, 0])]),
        sparse(&[(2, [1, 1, 1], QuadScalar::one(D))]),
        int_matrix([[1, 1], [0, 1]]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Vector;

    #[test]
    fn tables_read_as_printed() {
        assert_eq!(p2().product(0, 0, 0), Vector::basis(2, 1, D));
        assert_eq!(t2().product(1, 1, 1), Vector::from_ints(&[1, 2], D));
        assert_eq!(t2().product(1, 0, 1), Vector::from_ints(&[1, 1], D));
        assert_eq!(t2h1().product(1, 1, 0), Vector::from_ints(&[2, -1], D));
        let v = t2h2().product(0, 0, 0);
        assert_eq!(v.get(1), &QuadScalar::quad(0, -2, 5, D));
        assert_eq!(rho1().column(1), Vector::from_ints(&[1, -1], D));
        assert_eq!(p2h().product(0, 0, 0), Vector::from_ints(&[0, 8], D));
    }

    #[test]
    fn tb2_coproduct_lists() {
        let c = tb2().coalg().coproduct(0);
        assert_eq!(c.get(1, 1, 1), &QuadScalar::from_int(3, D));
        assert_eq!(c.get(0, 1, 1), &QuadScalar::from_int(2, D));
        let c2 = tb2().coalg().coproduct(1);
        assert_eq!(c2.get(1, 1, 1), &QuadScalar::from_int(-2, D));
        assert!(c2.get(0, 0, 0).is_zero());
    }
}
