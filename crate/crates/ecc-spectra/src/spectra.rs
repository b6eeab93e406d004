//! Floating-point symmetric eigensolver: spectra, spectral radius, numeric
//! inertia and interlacing checks.
//!
//! The solver is cyclic Jacobi. Each rotation annihilates one off-diagonal
//! entry; sweeps repeat until the off-diagonal Frobenius mass drops below
//! `tol * ||A||_F`.

use crate::eccmat::IntSymMatrix;
use crate::error::{Error, Result};
use crate::exact::InertiaTriple;

/// Default relative tolerance for the off-diagonal mass.
pub const DEFAULT_EIG_TOL: f64 = 1e-12;

/// Hard cap on Jacobi sweeps before reporting failure.
pub const MAX_SWEEPS: usize = 100;

/// Real eigenvalues sorted in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn from_sorted(eigenvalues: Vec<f64>) -> Self {
        debug_assert!(eigenvalues.windows(2).all(|w| w[0] >= w[1]));
        Spectrum { eigenvalues }
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Largest modulus over the eigenvalues (0 for an empty spectrum). For
    /// an irreducible nonnegative symmetric matrix this is attained by the
    /// largest eigenvalue.
    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues
            .iter()
            .map(|x| x.abs())
            .fold(0.0, f64::max)
    }

    /// Frobenius norm of the underlying matrix, recovered as the 2-norm of
    /// the eigenvalues.
    pub fn frobenius_norm(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// Groups eigenvalues into clusters whose members differ by at most
    /// `tol`, returning `(representative, multiplicity)` pairs in descending
    /// order. Display-level grouping only; exact multiplicities come from
    /// the characteristic polynomial.
    pub fn clustered(&self, tol: f64) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &x in &self.eigenvalues {
            match out.last_mut() {
                Some((rep, count)) if (*rep - x).abs() <= tol => *count += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }
}

/// Eigenvalues of a symmetric integer matrix by cyclic Jacobi rotations.
///
/// Stops when the off-diagonal Frobenius norm falls below `tol * ||A||_F`;
/// fails with `NoConvergence` if that does not happen within the sweep cap.
pub fn symmetric_eigenvalues(a: &IntSymMatrix, tol: f64) -> Result<Spectrum> {
    let n = a.order();
    if n == 0 {
        return Ok(Spectrum::from_sorted(Vec::new()));
    }
    let mut m = a.to_f64_vec();
    let norm = a.frobenius_norm();
    if norm == 0.0 {
        return Ok(Spectrum::from_sorted(vec![0.0; n]));
    }
    let threshold = tol * norm;
    let off_norm = |m: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                s += 2.0 * m[p * n + q] * m[p * n + q];
            }
        }
        s.sqrt()
    };
    for _ in 0..MAX_SWEEPS {
        if off_norm(&m) < threshold {
            return Ok(collect_sorted(&m, n));
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                // Rotation angle that zeroes the (p, q) entry.
                let theta = (m[q * n + q] - m[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let s = if theta >= 0.0 { 1.0 } else { -1.0 };
                    s / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = m[r * n + p];
                    let arq = m[r * n + q];
                    let new_rp = arp - s * (arq + tau * arp);
                    let new_rq = arq + s * (arp - tau * arq);
                    m[r * n + p] = new_rp;
                    m[p * n + r] = new_rp;
                    m[r * n + q] = new_rq;
                    m[q * n + r] = new_rq;
                }
                m[p * n + p] -= t * apq;
                m[q * n + q] += t * apq;
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
            }
        }
    }
    if off_norm(&m) < threshold {
        Ok(collect_sorted(&m, n))
    } else {
        Err(Error::NoConvergence)
    }
}

fn collect_sorted(m: &[f64], n: usize) -> Spectrum {
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| m[i * n + i]).collect();
    eigenvalues.sort_by(|a, b| b.total_cmp(a));
    Spectrum::from_sorted(eigenvalues)
}

/// Zero tolerance used to classify floating eigenvalues:
/// `1e-7 * max(1, ||A||_F)`.
pub fn default_zero_tol(a: &IntSymMatrix) -> f64 {
    1e-7 * a.frobenius_norm().max(1.0)
}

/// Counts eigenvalues above, below and within `zero_tol` of zero.
pub fn inertia_float(s: &Spectrum, zero_tol: f64) -> InertiaTriple {
    let mut triple = InertiaTriple::new(0, 0, 0);
    for &x in s.values() {
        if x > zero_tol {
            triple.n_plus += 1;
        } else if x < -zero_tol {
            triple.n_minus += 1;
        } else {
            triple.n_zero += 1;
        }
    }
    triple
}

/// Cauchy interlacing test: with `full` eigenvalues `l_1 >= ... >= l_n` and
/// `sub` eigenvalues `m_1 >= ... >= m_m`, checks
/// `l_i >= m_i >= l_{n-m+i}` up to a slack of `1e-9 * ||A||_F`.
pub fn interlaces(sub: &Spectrum, full: &Spectrum) -> bool {
    let n = full.len();
    let m = sub.len();
    if m > n {
        return false;
    }
    let slack = 1e-9 * full.frobenius_norm();
    for i in 0..m {
        let upper = full.values()[i];
        let lower = full.values()[n - m + i];
        let mu = sub.values()[i];
        if mu > upper + slack || mu < lower - slack {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eccmat::eccentricity_matrix;
    use crate::graph::{DistanceMatrix, Graph};

    fn ecc_of(g: &Graph) -> IntSymMatrix {
        let d = DistanceMatrix::all_pairs(g).unwrap();
        let p = d.eccentricity_profile();
        eccentricity_matrix(&d, &p)
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn k3_spectrum() {
        let s = symmetric_eigenvalues(&ecc_of(&complete(3)), DEFAULT_EIG_TOL).unwrap();
        let expected = [2.0, -1.0, -1.0];
        for (a, b) in s.values().iter().zip(expected) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn k2_spectral_radius_and_inertia() {
        let e = ecc_of(&complete(2));
        let s = symmetric_eigenvalues(&e, DEFAULT_EIG_TOL).unwrap();
        assert!((s.spectral_radius() - 1.0).abs() < 1e-14);
        assert_eq!(
            inertia_float(&s, default_zero_tol(&e)),
            InertiaTriple::new(1, 1, 0)
        );
    }

    #[test]
    fn zero_matrix_converges_immediately() {
        let s = symmetric_eigenvalues(&IntSymMatrix::zeros(4), DEFAULT_EIG_TOL).unwrap();
        assert_eq!(s.values(), &[0.0; 4]);
    }

    #[test]
    fn eigenvalue_sum_matches_zero_trace() {
        let e = ecc_of(&complete(7));
        let s = symmetric_eigenvalues(&e, DEFAULT_EIG_TOL).unwrap();
        assert!(s.trace().abs() < 1e-9 * e.frobenius_norm());
    }

    #[test]
    fn identical_spectra_interlace() {
        let s = Spectrum::from_sorted(vec![3.0, 1.0, -2.0]);
        assert!(interlaces(&s, &s));
    }

    #[test]
    fn interlacing_rejects_out_of_band_submatrix_spectrum() {
        let sub = Spectrum::from_sorted(vec![100.0]);
        let full = Spectrum::from_sorted(vec![1.0, -1.0]);
        assert!(!interlaces(&sub, &full));
    }

    #[test]
    fn principal_submatrix_spectra_interlace() {
        let e = ecc_of(&complete(6));
        let full = symmetric_eigenvalues(&e, DEFAULT_EIG_TOL).unwrap();
        let sub_m = e.principal_submatrix(&[0, 2, 4]).unwrap();
        let sub = symmetric_eigenvalues(&sub_m, DEFAULT_EIG_TOL).unwrap();
        assert!(interlaces(&sub, &full));
    }

    #[test]
    fn clusters_group_near_equal_values() {
        let s = Spectrum::from_sorted(vec![2.0 + 1e-9, 2.0, -1.0]);
        assert_eq!(s.clustered(1e-6).len(), 2);
        assert_eq!(s.clustered(0.0).len(), 3);
    }
}
