//! Dualization with respect to the dual basis `e*_1, ..., e*_n`.
//!
//! The structure tensor is reused as is: the product constants of an algebra
//! are the coproduct constants of its dual and vice versa. Linear maps dualize
//! to their transposes.

use crate::algebra::TernaryAlgebra;
use crate::coalgebra::TernaryCoalgebra;
use crate::linalg::Matrix;

pub fn dualize_linear_map(f: &Matrix) -> Matrix {
    f.transpose()
}

/// `μ*(e*_l) = Σ c^l_{rst} e*_r ⊗ e*_s ⊗ e*_t` with twists `α_i*`.
pub fn dualize_algebra(a: &TernaryAlgebra) -> TernaryCoalgebra {
    TernaryCoalgebra::new(
        a.mu().clone(),
        dualize_linear_map(a.alpha1()),
        dualize_linear_map(a.alpha2()),
    )
    .expect("shape preserved")
}

/// `Δ*(e*_r, e*_s, e*_t) = Σ c^l_{rst} e*_l` with twists `α_i*`.
pub fn dualize_coalgebra(c: &TernaryCoalgebra) -> TernaryAlgebra {
    TernaryAlgebra::new(
        c.delta().clone(),
        dualize_linear_map(c.alpha1()),
        dualize_linear_map(c.alpha2()),
    )
    .expect("shape preserved")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::{Tensor3, Vector};

    const D: u32 = 5;

    #[test]
    fn dual_of_twisted_p2() {
        let c = dualize_algebra(&fixtures::p2h());
        let e1 = Vector::basis(2, 0, D);
        let eight = Vector::from_ints(&[8, 0], D);
        assert_eq!(c.coproduct(1), Tensor3::pure(&eight, &e1, &e1).unwrap());
        assert!(c.coproduct(0).is_zero());
        assert_eq!(c.alpha1().column(0), Vector::from_ints(&[2, 0], D));
        assert_eq!(c.alpha1().column(1), Vector::from_ints(&[3, 8], D));
        assert_eq!(c.alpha1(), c.alpha2());
    }

    #[test]
    fn dual_of_t2h1_coefficients() {
        let c = dualize_algebra(&fixtures::t2h1());
        assert_eq!(c.coproduct(0).get(1, 1, 1), &crate::QuadScalar::from_int(3, D));
        assert_eq!(c.coproduct(1).get(1, 1, 1), &crate::QuadScalar::from_int(-2, D));
        assert_eq!(c.alpha1().column(0), Vector::from_ints(&[1, 1], D));
        assert_eq!(c.alpha1().column(1), Vector::from_ints(&[0, -1], D));
    }

    #[test]
    fn dual_of_pb2_coalgebra() {
        let a = dualize_coalgebra(fixtures::pb2().coalg());
        assert_eq!(a.product(1, 1, 1), Vector::basis(2, 0, D));
        let nonzero = (0..2)
            .flat_map(|i| (0..2).flat_map(move |j| (0..2).map(move |k| (i, j, k))))
            .filter(|&(i, j, k)| !a.product(i, j, k).is_zero())
            .count();
        assert_eq!(nonzero, 1);
    }

    #[test]
    fn round_trips_and_zero() {
        let a = fixtures::t2h1();
        assert_eq!(dualize_coalgebra(&dualize_algebra(&a)), a);
        let z = TernaryAlgebra::zero(2, D);
        assert_eq!(dualize_algebra(&z), TernaryCoalgebra::zero(2, D));
        assert_eq!(dualize_coalgebra(&TernaryCoalgebra::zero(2, D)), z);
        let id = Matrix::identity(3, D);
        assert_eq!(dualize_linear_map(&id), id);
        let rho = fixtures::p2_endomorphism(2, 3);
        let rho_star = dualize_linear_map(&rho);
        assert_eq!(rho_star.column(0), Vector::from_ints(&[2, 0], D));
        assert_eq!(rho_star.column(1), Vector::from_ints(&[3, 8], D));
    }
}
