//! Generator-matrix constructions and their brute-force verifiers.
//!
//! Two routes produce ring-storage generator matrices: the binary ED matrix
//! derived from a Euclidean division chain, and systematic MDS matrices
//! (deterministic Cauchy form, or a seeded greedy column search). The
//! `check_*` functions verify the relevant independence properties
//! exhaustively and are kept independent of the builders.

use itertools::Itertools;
use thiserror::Error;

use crate::algebra::{AlgebraError, FieldSpec, Matrix};
use crate::rng::Lcg;

/// Exhaustive checks refuse instances with more than this many column
/// subsets rather than running unbounded.
pub const SUBSET_GUARD: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("bad arguments: {0}")]
    BadArguments(&'static str),
    #[error("shape error: {0}")]
    ShapeError(&'static str),
    #[error("field with {p} elements is too small (needs {needed})")]
    FieldTooSmall { p: u64, needed: u64 },
    #[error("instance too large: {subsets} column subsets exceed the {SUBSET_GUARD} guard")]
    InstanceTooLarge { subsets: u128 },
    #[error("greedy column search did not terminate within {draws} draws")]
    NonTermination { draws: u64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The quotient/remainder chain of repeated Euclidean division,
/// M_{i-1} = P_i * M_i + M_{i+1}, terminating at remainder zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidChain {
    lengths: Vec<u64>,
    quotients: Vec<u64>,
}

impl EuclidChain {
    /// The block sizes M_0 > M_1 > ... > M_k.
    pub fn lengths(&self) -> &[u64] {
        &self.lengths
    }

    /// The quotients P_1 ... P_k.
    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    /// Number of division steps k.
    pub fn steps(&self) -> usize {
        self.quotients.len()
    }

    /// The final length M_k, which equals gcd(M_0, M_1).
    pub fn gcd(&self) -> u64 {
        *self.lengths.last().expect("chain has at least two lengths")
    }
}

/// Runs Euclidean division from (m0, m1) down to remainder zero.
pub fn euclid_chain(m0: u64, m1: u64) -> Result<EuclidChain, ConstructError> {
    if m1 == 0 || m1 >= m0 {
        return Err(ConstructError::BadArguments("requires 0 < m1 < m0"));
    }
    let mut lengths = vec![m0, m1];
    let mut quotients = Vec::new();
    let (mut a, mut b) = (m0, m1);
    loop {
        quotients.push(a / b);
        let r = a % b;
        if r == 0 {
            break;
        }
        lengths.push(r);
        (a, b) = (b, r);
    }
    Ok(EuclidChain { lengths, quotients })
}

/// Builds the m1 x m0 ED matrix over GF(2).
///
/// Level i of the chain contributes P_i side-by-side copies of the identity
/// I_{M_i}; the remainder block is the transpose of the next level's matrix,
/// bottoming out at [I_{M_k} ... I_{M_k}].
pub fn build_ed_matrix(m1: u64, m0: u64) -> Result<Matrix, ConstructError> {
    let chain = euclid_chain(m0, m1)?;
    Ok(ed_level(&chain, 1))
}

fn ed_level(chain: &EuclidChain, level: usize) -> Matrix {
    let gf2 = FieldSpec::gf2();
    let size = chain.lengths[level] as usize;
    let copies = chain.quotients[level - 1] as usize;
    let identity = Matrix::identity(gf2, size);
    let mut out = identity.clone();
    for _ in 1..copies {
        out = out.hstack(&identity).expect("same field and height");
    }
    if level < chain.steps() {
        let rest = ed_level(chain, level + 1).transpose();
        out = out.hstack(&rest).expect("same field and height");
    }
    out
}

/// True iff every cyclic window of `rows` adjacent columns has full rank.
pub fn check_weak_column_mds(a: &Matrix) -> Result<bool, ConstructError> {
    if a.rows() > a.cols() {
        return Err(ConstructError::ShapeError(
            "weak-column check needs rows <= cols",
        ));
    }
    for start in 0..a.cols() {
        let window = a.cyclic_window(start, a.rows())?;
        if window.rank() != a.rows() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every cyclic window of `cols` adjacent rows has full rank.
/// Equivalent to the weak-column check on the transpose.
pub fn check_weak_row_mds(a: &Matrix) -> Result<bool, ConstructError> {
    if a.rows() <= a.cols() {
        return Err(ConstructError::ShapeError(
            "weak-row check needs rows > cols",
        ));
    }
    check_weak_column_mds(&a.transpose())
}

/// True iff every set of `rows` columns is linearly independent.
pub fn check_full_mds(a: &Matrix) -> Result<bool, ConstructError> {
    if a.rows() > a.cols() {
        return Err(ConstructError::ShapeError(
            "full MDS check needs rows <= cols",
        ));
    }
    let subsets = binomial(a.cols() as u64, a.rows() as u64);
    if subsets > SUBSET_GUARD {
        return Err(ConstructError::InstanceTooLarge { subsets });
    }
    for subset in (0..a.cols()).combinations(a.rows()) {
        if a.select_columns(&subset).rank() != a.rows() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Systematic MDS generator `[I_m | C]` with C the Cauchy matrix
/// `C[i][j] = 1 / (a_i - b_j)`, `a_i = i`, `b_j = m + j`. Every square
/// submatrix of a Cauchy matrix is invertible, so every m columns are
/// independent.
pub fn build_cauchy_mds(
    m: u64,
    n_cols: u64,
    field: FieldSpec,
) -> Result<Matrix, ConstructError> {
    if m == 0 || m > n_cols {
        return Err(ConstructError::BadArguments("requires 0 < m <= n_cols"));
    }
    if field.prime() < n_cols {
        return Err(ConstructError::FieldTooSmall {
            p: field.prime(),
            needed: n_cols,
        });
    }
    let m = m as usize;
    let n_cols = n_cols as usize;
    let mut out = Matrix::identity(field, m);
    if n_cols == m {
        return Ok(out);
    }
    let mut parity = Matrix::zero(field, m, n_cols - m);
    for i in 0..m {
        for j in 0..n_cols - m {
            let a = field.element(i as u64);
            let b = field.element((m + j) as u64);
            let diff = a.sub(&b)?;
            parity.set(i, j, diff.inv()?.value());
        }
    }
    out = out.hstack(&parity)?;
    Ok(out)
}

/// Seeded greedy MDS column search: the first m columns are the identity;
/// each further column is drawn from the seeded stream and accepted iff it
/// lies outside the span of every (m-1)-subset of the columns chosen so far.
pub fn greedy_mds_columns(
    m: u64,
    n_cols: u64,
    field: FieldSpec,
    seed: u64,
) -> Result<Matrix, ConstructError> {
    if m == 0 || m > n_cols {
        return Err(ConstructError::BadArguments("requires 0 < m <= n_cols"));
    }
    let subsets = binomial(n_cols, m);
    if subsets > SUBSET_GUARD {
        return Err(ConstructError::InstanceTooLarge { subsets });
    }
    // An [n_cols, m] MDS code needs at least n_cols - m + 1 field elements
    // when 2 <= m < n_cols; refusing below that is definite. Between this
    // bound and the sufficiency bound binomial(n_cols-1, m-1), the draw may
    // still succeed and is cut off by the retry budget otherwise.
    if m >= 2 && m < n_cols && field.prime() < n_cols - m + 1 {
        return Err(ConstructError::FieldTooSmall {
            p: field.prime(),
            needed: n_cols - m + 1,
        });
    }
    let m = m as usize;
    let n_cols = n_cols as usize;
    let mut columns: Vec<Vec<u64>> = (0..m)
        .map(|i| {
            let mut col = vec![0u64; m];
            col[i] = 1;
            col
        })
        .collect();
    let mut rng = Lcg::new(seed);
    let budget = 10 * field.prime() * n_cols as u64;
    let mut draws = 0u64;
    while columns.len() < n_cols {
        if draws >= budget {
            return Err(ConstructError::NonTermination { draws });
        }
        let candidate = rng.vector_mod(field.prime(), m);
        draws += 1;
        if accepts_candidate(field, &columns, &candidate) {
            columns.push(candidate);
        }
    }
    Ok(Matrix::from_columns(field, &columns)?)
}

/// True iff `candidate` is outside the span of every (m-1)-subset of the
/// existing columns. For m = 1 this reduces to "candidate is nonzero".
fn accepts_candidate(field: FieldSpec, columns: &[Vec<u64>], candidate: &[u64]) -> bool {
    let m = candidate.len();
    if candidate.iter().all(|&v| v == 0) {
        return false;
    }
    if m == 1 {
        return true;
    }
    for subset in (0..columns.len()).combinations(m - 1) {
        let mut cols: Vec<Vec<u64>> = subset.iter().map(|&i| columns[i].clone()).collect();
        cols.push(candidate.to_vec());
        let trial = Matrix::from_columns(field, &cols).expect("well-formed columns");
        if trial.rank() != m {
            return false;
        }
    }
    true
}

/// Binomial coefficient with saturation, for guard checks only.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
        if acc > SUBSET_GUARD * SUBSET_GUARD {
            return u128::MAX;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn euclid_chain_examples() {
        let c = euclid_chain(8, 5).unwrap();
        assert_eq!(c.lengths(), &[8, 5, 3, 2, 1]);
        assert_eq!(c.quotients(), &[1, 1, 1, 2]);

        let c = euclid_chain(6, 3).unwrap();
        assert_eq!(c.lengths(), &[6, 3]);
        assert_eq!(c.quotients(), &[2]);

        let c = euclid_chain(10, 4).unwrap();
        assert_eq!(c.lengths(), &[10, 4, 2]);
        assert_eq!(c.quotients(), &[2, 2]);
    }

    #[test]
    fn euclid_chain_rejects_bad_arguments() {
        assert!(euclid_chain(5, 5).is_err());
        assert!(euclid_chain(5, 0).is_err());
        assert!(euclid_chain(5, 8).is_err());
    }

    #[test]
    fn euclid_chain_ends_at_gcd_and_satisfies_recurrence() {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        for m0 in 2..30u64 {
            for m1 in 1..m0 {
                let chain = euclid_chain(m0, m1).unwrap();
                assert_eq!(chain.gcd(), gcd(m0, m1));
                let (m, p) = (chain.lengths(), chain.quotients());
                assert_eq!(m.len(), p.len() + 1);
                for i in 0..p.len() {
                    let remainder = m.get(i + 2).copied().unwrap_or(0);
                    assert_eq!(m[i], p[i] * m[i + 1] + remainder, "({m0},{m1}) step {i}");
                    if i + 2 < m.len() {
                        assert!(m[i + 2] < m[i + 1]);
                    }
                }
            }
        }
    }

    #[test]
    fn ed_5x8_matches_expected_block_structure() {
        let g = build_ed_matrix(5, 8).unwrap();
        let expected = Matrix::from_rows(
            FieldSpec::gf2(),
            &[
                vec![1, 0, 0, 0, 0, 1, 0, 0],
                vec![0, 1, 0, 0, 0, 0, 1, 0],
                vec![0, 0, 1, 0, 0, 0, 0, 1],
                vec![0, 0, 0, 1, 0, 1, 0, 1],
                vec![0, 0, 0, 0, 1, 0, 1, 1],
            ],
        )
        .unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn ed_exact_division_degenerates_to_repeated_identities() {
        let g = build_ed_matrix(3, 6).unwrap();
        let i3 = Matrix::identity(FieldSpec::gf2(), 3);
        assert_eq!(g, i3.hstack(&i3).unwrap());
    }

    #[test]
    fn ed_2x5_hand_applied_recursion() {
        let g = build_ed_matrix(2, 5).unwrap();
        let expected = Matrix::from_rows(
            FieldSpec::gf2(),
            &[vec![1, 0, 1, 0, 1], vec![0, 1, 0, 1, 1]],
        )
        .unwrap();
        assert_eq!(g, expected);
        assert!(check_weak_column_mds(&g).unwrap());
    }

    #[test]
    fn weak_column_mds_examples() {
        let i2 = Matrix::identity(gf(2), 2);
        let repeated = i2.hstack(&i2).unwrap();
        assert!(check_weak_column_mds(&repeated).unwrap());

        let ed = build_ed_matrix(5, 8).unwrap();
        assert!(check_weak_column_mds(&ed).unwrap());

        // two equal adjacent columns make a rank-deficient window
        let bad = Matrix::from_rows(gf(5), &[vec![1, 1, 0, 2], vec![2, 2, 1, 0]]).unwrap();
        assert!(!check_weak_column_mds(&bad).unwrap());

        let tall = Matrix::zero(gf(2), 3, 2);
        assert!(matches!(
            check_weak_column_mds(&tall),
            Err(ConstructError::ShapeError(_))
        ));
    }

    #[test]
    fn weak_row_mds_examples() {
        let i2 = Matrix::identity(gf(2), 2);
        let repeated = i2.hstack(&i2).unwrap();
        assert!(check_weak_row_mds(&repeated.transpose()).unwrap());

        // the 5x3 remainder block of the 5x8 ED matrix
        let ed = build_ed_matrix(5, 8).unwrap();
        let g1 = ed.select_columns(&[5, 6, 7]);
        assert!(check_weak_row_mds(&g1).unwrap());

        let zero_col = Matrix::zero(gf(3), 3, 1);
        assert!(!check_weak_row_mds(&zero_col).unwrap());

        let wide = Matrix::zero(gf(2), 2, 3);
        assert!(matches!(
            check_weak_row_mds(&wide),
            Err(ConstructError::ShapeError(_))
        ));
    }

    #[test]
    fn remainder_block_row_property_implies_whole_matrix_column_property() {
        // [repeated identities | G1]: weak-row MDS of G1 goes hand in hand
        // with weak-column MDS of the whole matrix.
        for m0 in 2..=16u64 {
            for m1 in 1..m0 {
                let g = build_ed_matrix(m1, m0).unwrap();
                let chain = euclid_chain(m0, m1).unwrap();
                if chain.steps() > 1 {
                    let first = (g.cols() - chain.lengths()[2] as usize)..g.cols();
                    let g1 = g.select_columns(&first.collect::<Vec<_>>());
                    assert!(check_weak_row_mds(&g1).unwrap(), "({m1},{m0}) remainder");
                }
                assert!(check_weak_column_mds(&g).unwrap(), "({m1},{m0}) whole");
            }
        }
    }

    #[test]
    fn cauchy_2x4_gf5_is_full_mds() {
        let g = build_cauchy_mds(2, 4, gf(5)).unwrap();
        // parity entries are 1/(i - (2+j)) in GF(5)
        let f = gf(5);
        for i in 0..2u64 {
            for j in 0..2u64 {
                let diff = f.sub(i % 5, (2 + j) % 5);
                assert_eq!(g.at(i as usize, 2 + j as usize), f.inv(diff).unwrap());
            }
        }
        assert!(check_full_mds(&g).unwrap());
    }

    #[test]
    fn cauchy_without_parity_is_identity() {
        let g = build_cauchy_mds(3, 3, gf(7)).unwrap();
        assert_eq!(g, Matrix::identity(gf(7), 3));
    }

    #[test]
    fn cauchy_5x8_gf11_is_full_mds() {
        let g = build_cauchy_mds(5, 8, gf(11)).unwrap();
        assert!(check_full_mds(&g).unwrap());
    }

    #[test]
    fn cauchy_rejects_small_fields() {
        assert!(matches!(
            build_cauchy_mds(2, 6, gf(5)),
            Err(ConstructError::FieldTooSmall { .. })
        ));
    }

    #[test]
    fn full_mds_examples() {
        let mds = Matrix::from_rows(
            gf(11),
            &[
                vec![1, 0, 0, 0, 0, 1, 5, 4],
                vec![0, 1, 0, 0, 0, 6, 9, 7],
                vec![0, 0, 1, 0, 0, 10, 1, 5],
                vec![0, 0, 0, 1, 0, 5, 4, 2],
                vec![0, 0, 0, 0, 1, 1, 4, 5],
            ],
        )
        .unwrap();
        assert!(check_full_mds(&mds).unwrap());

        let i2 = Matrix::identity(gf(2), 2);
        assert!(!check_full_mds(&i2.hstack(&i2).unwrap()).unwrap());
        assert!(check_full_mds(&Matrix::identity(gf(7), 4)).unwrap());
    }

    #[test]
    fn full_mds_implies_weak_column_mds() {
        for g in [
            build_cauchy_mds(3, 7, gf(7)).unwrap(),
            build_cauchy_mds(5, 8, gf(11)).unwrap(),
            build_cauchy_mds(4, 9, gf(11)).unwrap(),
        ] {
            assert!(check_full_mds(&g).unwrap());
            assert!(check_weak_column_mds(&g).unwrap());
        }
    }

    #[test]
    fn greedy_identity_when_no_free_columns() {
        let g = greedy_mds_columns(2, 2, gf(3), 99).unwrap();
        assert_eq!(g, Matrix::identity(gf(3), 2));
    }

    #[test]
    fn greedy_single_row_gives_nonzero_columns() {
        let g = greedy_mds_columns(1, 3, gf(5), 7).unwrap();
        for c in 0..3 {
            assert_ne!(g.at(0, c), 0);
        }
        assert!(check_full_mds(&g).unwrap());
    }

    #[test]
    fn greedy_is_deterministic_per_seed() {
        let a = greedy_mds_columns(3, 6, gf(29), 5).unwrap();
        let b = greedy_mds_columns(3, 6, gf(29), 5).unwrap();
        assert_eq!(a, b);
        assert!(check_full_mds(&a).unwrap());
    }

    #[test]
    fn greedy_above_sufficiency_bound_is_full_mds() {
        // binomial(7, 2) = 21, so GF(23) satisfies the sufficiency bound
        let g = greedy_mds_columns(3, 8, gf(23), 1).unwrap();
        assert!(check_full_mds(&g).unwrap());
    }

    #[test]
    fn greedy_can_succeed_below_the_sufficiency_bound() {
        // binomial(7, 4) = 35 exceeds 11, yet GF(11) admits an [8, 5] code
        // and the seeded draw finds one within its budget
        let g = greedy_mds_columns(5, 8, gf(11), 1).unwrap();
        assert!(check_full_mds(&g).unwrap());
    }

    #[test]
    fn greedy_rejects_impossible_fields() {
        // an [8, 2] MDS code needs at least 7 field elements
        assert!(matches!(
            greedy_mds_columns(2, 8, gf(5), 0),
            Err(ConstructError::FieldTooSmall { .. })
        ));
    }

    #[test]
    fn binomial_guard_values() {
        assert_eq!(binomial(8, 5), 56);
        assert_eq!(binomial(7, 4), 35);
        assert_eq!(binomial(9, 3), 84);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }
}
