//! Eccentricity matrices, indicator graphs and irreducibility.
//!
//! The eccentricity matrix keeps a distance entry `d(u, v)` exactly when it
//! equals `min(e(u), e(v))` — the largest distances of each row and column —
//! and zeroes everything else.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, EccentricityProfile, Graph};

/// Dense symmetric matrix with arbitrary-precision integer entries.
///
/// Symmetry is enforced at construction. Entries are stored row-major;
/// values are kept exact so they can feed the characteristic-polynomial
/// pipeline without conversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSymMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntSymMatrix {
    pub fn zeros(order: usize) -> Self {
        IntSymMatrix {
            order,
            entries: vec![BigInt::zero(); order * order],
        }
    }

    /// Builds from full rows, checking squareness and symmetry.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let order = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("row has {} entries, expected {order}", row.len()),
                });
            }
        }
        let entries: Vec<BigInt> = rows.into_iter().flatten().collect();
        let m = IntSymMatrix { order, entries };
        for i in 0..order {
            for j in i + 1..order {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::Parse {
                        line: i + 1,
                        msg: format!("matrix is not symmetric at ({i}, {j})"),
                    });
                }
            }
        }
        Ok(m)
    }

    /// Convenience constructor from machine integers (test fixtures).
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.order + j] = value.clone();
        self.entries[j * self.order + i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Largest entry, or zero for an empty matrix.
    pub fn max_entry(&self) -> BigInt {
        self.entries.iter().max().cloned().unwrap_or_default()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.to_f64().unwrap_or(f64::MAX).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    /// Row-major `f64` copy for the floating-point eigensolver.
    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.entries
            .iter()
            .map(|e| e.to_f64().expect("entry representable as f64"))
            .collect()
    }

    /// Indicator graph: vertex set `0..order`, with an edge `uv` exactly
    /// where the off-diagonal entry is nonzero. May be disconnected.
    pub fn indicator_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.order {
            for v in u + 1..self.order {
                if !self.get(u, v).is_zero() {
                    edges.push((u, v));
                }
            }
        }
        Graph::build(self.order, &edges).expect("indicator edges are in range")
    }

    /// A symmetric nonnegative matrix is irreducible exactly when its
    /// indicator graph is connected. Defined only for order > 1.
    pub fn is_irreducible(&self) -> Result<bool> {
        if self.order <= 1 {
            return Err(Error::OrderOne);
        }
        Ok(self.indicator_graph().is_connected())
    }

    /// Principal submatrix on the given index set. Indices are sorted and
    /// deduplicated, so the original relative order is preserved.
    pub fn principal_submatrix(&self, rows: &[usize]) -> Result<IntSymMatrix> {
        let mut idx = rows.to_vec();
        idx.sort_unstable();
        idx.dedup();
        for &i in &idx {
            if i >= self.order {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    order: self.order,
                });
            }
        }
        let k = idx.len();
        let mut sub = IntSymMatrix::zeros(k);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                sub.entries[a * k + b] = self.get(i, j).clone();
            }
        }
        Ok(sub)
    }

    /// Parses the matrix text format: a header line `m <order>` followed by
    /// `order` rows of whitespace-separated integers.
    pub fn parse(text: &str) -> Result<IntSymMatrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (lineno, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty matrix file".into(),
        })?;
        let order = header
            .strip_prefix("m ")
            .or_else(|| header.strip_prefix("m\t"))
            .ok_or_else(|| Error::Parse {
                line: lineno,
                msg: "expected header `m <order>`".into(),
            })?
            .trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse {
                line: lineno,
                msg: format!("bad order: {e}"),
            })?;
        let mut rows = Vec::with_capacity(order);
        for _ in 0..order {
            let (lineno, line) = lines.next().ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("expected {order} rows, found {}", rows.len()),
            })?;
            let row: Vec<BigInt> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<BigInt>().map_err(|e| Error::Parse {
                        line: lineno,
                        msg: format!("bad integer `{tok}`: {e}"),
                    })
                })
                .collect::<Result<_>>()?;
            if row.len() != order {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("row has {} entries, expected {order}", row.len()),
                });
            }
            rows.push(row);
        }
        if let Some((lineno, _)) = lines.next() {
            return Err(Error::Parse {
                line: lineno,
                msg: "unexpected trailing content".into(),
            });
        }
        IntSymMatrix::from_rows(rows)
    }

    /// Serializes to the matrix text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "m {}", self.order);
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order).map(|j| self.get(i, j).to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    /// True when every entry is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }
}

/// Builds the eccentricity matrix from distances and eccentricities of the
/// same graph: entry `(u, v)` is `d(u, v)` when that equals
/// `min(e(u), e(v))`, and zero otherwise.
pub fn eccentricity_matrix(d: &DistanceMatrix, profile: &EccentricityProfile) -> IntSymMatrix {
    let n = d.order();
    let mut m = IntSymMatrix::zeros(n);
    for u in 0..n {
        for v in u + 1..n {
            let duv = d.get(u, v);
            if duv == profile.ecc(u).min(profile.ecc(v)) {
                m.set(u, v, BigInt::from(duv));
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn ecc_of(g: &Graph) -> IntSymMatrix {
        let d = DistanceMatrix::all_pairs(g).unwrap();
        let p = d.eccentricity_profile();
        eccentricity_matrix(&d, &p)
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn k2_eccentricity_matrix() {
        let g = Graph::build(2, &[(0, 1)]).unwrap();
        assert_eq!(ecc_of(&g), IntSymMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap());
    }

    #[test]
    fn p3_eccentricity_matrix_keeps_all_distances() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        // Hand evaluation over the three pairs: e = (2, 1, 2); every
        // distance attains min(e(u), e(v)).
        let expected =
            IntSymMatrix::from_i64_rows(&[vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]).unwrap();
        assert_eq!(ecc_of(&g), expected);
    }

    #[test]
    fn c4_indicator_graph_is_two_disjoint_edges() {
        let e = ecc_of(&cycle(4));
        let gamma = e.indicator_graph();
        assert_eq!(gamma.edges(), vec![(0, 2), (1, 3)]);
        assert!(!gamma.is_connected());
        assert_eq!(e.is_irreducible().unwrap(), false);
    }

    #[test]
    fn path_eccentricity_matrices_are_irreducible() {
        for n in 2..=8 {
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            let g = Graph::build(n, &edges).unwrap();
            assert!(ecc_of(&g).is_irreducible().unwrap(), "path on {n} vertices");
        }
    }

    #[test]
    fn irreducibility_needs_order_above_one() {
        let m = IntSymMatrix::zeros(1);
        assert!(matches!(m.is_irreducible(), Err(Error::OrderOne)));
    }

    #[test]
    fn principal_submatrix_on_everything_is_identity_operation() {
        let g = cycle(5);
        let e = ecc_of(&g);
        let all: Vec<usize> = (0..5).collect();
        assert_eq!(e.principal_submatrix(&all).unwrap(), e);
    }

    #[test]
    fn principal_submatrix_index_out_of_range() {
        let e = IntSymMatrix::zeros(3);
        assert!(matches!(
            e.principal_submatrix(&[0, 7]),
            Err(Error::IndexOutOfRange { index: 7, order: 3 })
        ));
    }

    #[test]
    fn matrix_text_round_trips() {
        let m = IntSymMatrix::from_i64_rows(&[
            vec![0, 2, 3],
            vec![2, 0, 1],
            vec![3, 1, 0],
        ])
        .unwrap();
        assert_eq!(IntSymMatrix::parse(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn parse_rejects_asymmetric_input() {
        let err = IntSymMatrix::parse("m 2\n0 1\n2 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn every_row_of_an_eccentricity_matrix_has_a_nonzero_entry() {
        for g in [cycle(5), cycle(6), Graph::build(4, &[(0, 1), (1, 2), (1, 3)]).unwrap()] {
            let e = ecc_of(&g);
            for u in 0..e.order() {
                assert!((0..e.order()).any(|v| !e.get(u, v).is_zero()));
            }
        }
    }
}
