//! Shared fixtures for the crate's unit tests: the two worked (4, 2, 5)
//! schemes and a deliberately broken variant.

use crate::algebra::{FieldSpec, Matrix};
use crate::construct::build_ed_matrix;
use crate::scheme::{make_scheme, Scheme};

/// The binary ED scheme for (n=4, alpha=2, M=5).
pub fn ed_scheme() -> Scheme {
    make_scheme(build_ed_matrix(5, 8).unwrap(), 4, 2).unwrap()
}

/// The systematic [8,5] MDS generator over GF(11).
pub fn mds_matrix() -> Matrix {
    Matrix::from_rows(
        FieldSpec::new(11).unwrap(),
        &[
            vec![1, 0, 0, 0, 0, 1, 5, 4],
            vec![0, 1, 0, 0, 0, 6, 9, 7],
            vec![0, 0, 1, 0, 0, 10, 1, 5],
            vec![0, 0, 0, 1, 0, 5, 4, 2],
            vec![0, 0, 0, 0, 1, 1, 4, 5],
        ],
    )
    .unwrap()
}

/// The MDS scheme for (n=4, alpha=2, M=5) with the contiguous partition.
pub fn mds_scheme() -> Scheme {
    make_scheme(mds_matrix(), 4, 2).unwrap()
}

/// The MDS scheme with columns interleaved so each of the first three nodes
/// holds one data symbol and one coded symbol, and the last node holds two
/// data symbols.
pub fn permuted_mds_scheme() -> Scheme {
    let g = mds_matrix().select_columns(&[0, 5, 1, 6, 2, 7, 3, 4]);
    make_scheme(g, 4, 2).unwrap()
}

/// The (4, 2, 5) scheme over GF(11) expressed in the coordinates of the five
/// symbols held by its first two-and-a-half nodes, so nodes 1 and 2 store
/// plain coordinates while nodes 3 and 4 store dense combinations.
pub fn transformed_mds_scheme() -> Scheme {
    let g = Matrix::from_rows(
        FieldSpec::new(11).unwrap(),
        &[
            vec![1, 0, 0, 0, 0, 1, 9, 9],
            vec![0, 1, 0, 0, 0, 2, 3, 8],
            vec![0, 0, 1, 0, 0, 2, 8, 9],
            vec![0, 0, 0, 1, 0, 9, 2, 1],
            vec![0, 0, 0, 0, 1, 9, 1, 7],
        ],
    )
    .unwrap();
    make_scheme(g, 4, 2).unwrap()
}

/// A full-rank (4, 2, 5) scheme over GF(2) with a duplicated column, so two
/// adjacent nodes share a dependent vector and validation must fail.
pub fn deficient_scheme() -> Scheme {
    let g = Matrix::from_rows(
        FieldSpec::gf2(),
        &[
            vec![1, 0, 0, 0, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 0, 1, 0],
            vec![0, 0, 1, 0, 0, 0, 0, 1],
            vec![0, 0, 0, 1, 0, 0, 0, 1],
            vec![0, 0, 0, 0, 1, 1, 1, 1],
        ],
    )
    .unwrap();
    make_scheme(g, 4, 2).unwrap()
}

/// The same scheme with its node partition rotated by `offset` nodes.
pub fn rotate_scheme(s: &Scheme, offset: usize) -> Scheme {
    let cols = s.window_columns(1 + offset, s.node_count());
    let g = s.generator().select_columns(&cols);
    make_scheme(g, s.node_count(), s.alpha()).unwrap()
}
