//! Fixtures shared by the benchmarks.

use afdim_core::FiniteRing;

/// `F_2[x, y] / (x, y)^3`, order 64, AF-dimension 3.
pub fn cubic_plane() -> FiniteRing {
    let basis = [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2]].map(|m| m.to_vec());
    FiniteRing::monomial_algebra(2, &basis).expect("valid monomial basis")
}

/// `Z/8 x Z/3 x F_2[x]/(x^2)`, a non-local product of order 96.
pub fn mixed_product() -> FiniteRing {
    let dual = FiniteRing::monomial_algebra(2, &[vec![0], vec![1]]).expect("valid monomial basis");
    let parts = [
        FiniteRing::zmod(8).unwrap(),
        FiniteRing::zmod(3).unwrap(),
        dual,
    ];
    FiniteRing::direct_product(&parts).expect("small product")
}
