//! Equitable partitions and divisor matrices.
//!
//! A partition (V_1, ..., V_k) is equitable when d_ij = |N(v) n V_j| is the
//! same for every v in V_i. The divisor matrix is the Laplacian quotient:
//! b_ij = -d_ij off the diagonal and row sums are zero; its eigenvalues are
//! Laplacian eigenvalues of the host graph.

use num_bigint::BigInt;

use crate::exact::{IntMatrix, IntPolynomial};
use crate::graph::Graph;

use super::{laplacian_charpoly, SpectraError};

/// A validated equitable partition with its block-degree matrix d_ij.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquitablePartition {
    blocks: Vec<Vec<usize>>,
    dmatrix: IntMatrix,
}

impl EquitablePartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// d_ij = common number of neighbors in block j for vertices of block i.
    pub fn dmatrix(&self) -> &IntMatrix {
        &self.dmatrix
    }
}

/// The Laplacian quotient of an equitable partition. Rows sum to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorMatrix {
    matrix: IntMatrix,
}

impl DivisorMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn charpoly(&self) -> IntPolynomial {
        self.matrix.charpoly().expect("divisor matrix is square")
    }
}

impl From<&EquitablePartition> for DivisorMatrix {
    /// b_ij = -d_ij for i != j, b_ii = sum_s d_is - d_ii.
    fn from(p: &EquitablePartition) -> Self {
        let k = p.block_count();
        let d = p.dmatrix();
        let matrix = IntMatrix::from_fn(k, k, |i, j| {
            if i == j {
                let row_sum: BigInt = (0..k).map(|s| d.get(i, s).clone()).sum();
                row_sum - d.get(i, i)
            } else {
                -d.get(i, j)
            }
        });
        debug_assert!((0..k).all(|i| {
            let sum: BigInt = (0..k).map(|j| matrix.get(i, j).clone()).sum();
            sum == BigInt::ZERO
        }));
        DivisorMatrix { matrix }
    }
}

/// Checks that `blocks` partitions V(G) and that every vertex of block i has
/// the same number of neighbors in block j, for all i, j. On failure reports
/// the violating vertex and block.
pub fn verify_equitable(g: &Graph, blocks: &[Vec<usize>]) -> Result<EquitablePartition, SpectraError> {
    let n = g.order();
    let mut block_of = vec![usize::MAX; n];
    for (i, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(SpectraError::NotAPartition {
                reason: format!("block {i} is empty"),
            });
        }
        for &v in block {
            if v >= n {
                return Err(SpectraError::NotAPartition {
                    reason: format!("vertex {v} out of range"),
                });
            }
            if block_of[v] != usize::MAX {
                return Err(SpectraError::NotAPartition {
                    reason: format!("vertex {v} appears twice"),
                });
            }
            block_of[v] = i;
        }
    }
    if let Some(v) = (0..n).find(|&v| block_of[v] == usize::MAX) {
        return Err(SpectraError::NotAPartition {
            reason: format!("vertex {v} is uncovered"),
        });
    }

    let k = blocks.len();
    let mut dmatrix = IntMatrix::zero(k, k);
    for (i, block) in blocks.iter().enumerate() {
        let mut expected: Option<Vec<usize>> = None;
        for &v in block {
            let mut counts = vec![0usize; k];
            for &w in g.neighbors(v) {
                counts[block_of[w]] += 1;
            }
            match &expected {
                None => {
                    for (j, &c) in counts.iter().enumerate() {
                        dmatrix.set(i, j, BigInt::from(c));
                    }
                    expected = Some(counts);
                }
                Some(e) => {
                    if let Some(j) = (0..k).find(|&j| counts[j] != e[j]) {
                        return Err(SpectraError::NotEquitable {
                            vertex: v,
                            block: j,
                            got: counts[j],
                            expected: e[j],
                        });
                    }
                }
            }
        }
    }
    Ok(EquitablePartition {
        blocks: blocks.to_vec(),
        dmatrix,
    })
}

/// Lemma check: every eigenvalue of the divisor matrix is a Laplacian
/// eigenvalue of g. Tested as exact divisibility of the squarefree part of
/// the divisor characteristic polynomial into the Laplacian characteristic
/// polynomial, which is equivalent to root containment.
pub fn divisor_contained(g: &Graph, p: &EquitablePartition) -> bool {
    let divisor = DivisorMatrix::from(p).charpoly();
    let squarefree = divisor.squarefree_part();
    laplacian_charpoly(g).div_exact(&squarefree).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::laplacian;

    #[test]
    fn singleton_partition_gives_adjacency_dmatrix_and_laplacian_divisor() {
        let g = Graph::path(3).unwrap();
        let blocks: Vec<Vec<usize>> = (0..3).map(|v| vec![v]).collect();
        let p = verify_equitable(&g, &blocks).unwrap();
        // d-matrix = adjacency matrix
        assert_eq!(
            p.dmatrix(),
            &IntMatrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]])
        );
        let div = DivisorMatrix::from(&p);
        assert_eq!(div.matrix(), &laplacian(&g));
        assert!(divisor_contained(&g, &p));
    }

    #[test]
    fn one_block_partition_of_regular_graph() {
        let c5 = Graph::cycle(5).unwrap();
        let p = verify_equitable(&c5, &[(0..5).collect()]).unwrap();
        assert_eq!(p.dmatrix().get(0, 0), &BigInt::from(2));
        let div = DivisorMatrix::from(&p);
        assert_eq!(div.matrix().get(0, 0), &BigInt::ZERO);
        assert!(divisor_contained(&c5, &p));
    }

    #[test]
    fn non_equitable_partition_identifies_violation() {
        // P_3 split {ends}, {center}: equitable. Split {0,1},{2}: not.
        let g = Graph::path(3).unwrap();
        assert!(verify_equitable(&g, &[vec![0, 2], vec![1]]).is_ok());
        let err = verify_equitable(&g, &[vec![0, 1], vec![2]]).unwrap_err();
        assert!(matches!(err, SpectraError::NotEquitable { .. }));
    }

    #[test]
    fn partition_validation_errors() {
        let g = Graph::path(3).unwrap();
        assert!(matches!(
            verify_equitable(&g, &[vec![0, 1]]).unwrap_err(),
            SpectraError::NotAPartition { .. }
        ));
        assert!(matches!(
            verify_equitable(&g, &[vec![0, 1, 2], vec![1]]).unwrap_err(),
            SpectraError::NotAPartition { .. }
        ));
        assert!(matches!(
            verify_equitable(&g, &[vec![0, 1, 2, 5]]).unwrap_err(),
            SpectraError::NotAPartition { .. }
        ));
    }

    #[test]
    fn star_partition_divisor_eigenvalues_contained() {
        // K_{1,3}: hub vs leaves is equitable
        let g = Graph::star(3);
        let p = verify_equitable(&g, &[vec![0], vec![1, 2, 3]]).unwrap();
        assert_eq!(
            p.dmatrix(),
            &IntMatrix::from_i64_rows(&[&[0, 3], &[1, 0]])
        );
        let div = DivisorMatrix::from(&p);
        // divisor charpoly x^2-4x = x(x-4); both roots are eigenvalues
        assert_eq!(div.charpoly().factored(), "x(x-4)");
        assert!(divisor_contained(&g, &p));
    }
}
