//! Exact characteristic polynomials, rank, inertia and spectral-symmetry
//! decisions over arbitrary-precision integers.
//!
//! The characteristic polynomial is computed with the Berkowitz algorithm:
//! division-free, so every intermediate value stays an integer. Inertia is
//! then read off the coefficients with Descartes' rule of signs, which is
//! exact here because symmetric matrices have all-real spectra.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::eccmat::IntSymMatrix;
use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`; the leading coefficient of a
/// nonzero polynomial is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds from ascending coefficients, trimming leading zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Ascending coefficient slice.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }

    /// Same polynomial with a positive leading coefficient. Printed
    /// characteristic polynomials sometimes carry a global sign; comparisons
    /// against them go through this normalization.
    pub fn sign_normalized(&self) -> IntPolynomial {
        if self.leading().is_negative() {
            IntPolynomial {
                coeffs: self.coeffs.iter().map(|c| -c).collect(),
            }
        } else {
            self.clone()
        }
    }

    /// Multiplicity of the root 0: index of the lowest nonzero coefficient.
    pub fn zero_root_multiplicity(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial"))
    }

    /// The polynomial divided by `x^{multiplicity of root 0}`.
    pub fn reduced(&self) -> Result<IntPolynomial> {
        let shift = self.zero_root_multiplicity()?;
        Ok(IntPolynomial {
            coeffs: self.coeffs[shift..].to_vec(),
        })
    }

    /// Human-readable rendering like `x^4 - 216*x^2 + 320`.
    pub fn display_expanded(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = match (i, mag == BigInt::one()) {
                (0, _) => mag.to_string(),
                (1, true) => "x".into(),
                (1, false) => format!("{mag}*x"),
                (_, true) => format!("x^{i}"),
                (_, false) => format!("{mag}*x^{i}"),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{term}")
                } else {
                    term
                });
            } else {
                parts.push(format!("{} {term}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }
}

/// Counts of positive, negative and zero eigenvalues of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InertiaTriple {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl InertiaTriple {
    pub fn new(n_plus: usize, n_minus: usize, n_zero: usize) -> Self {
        InertiaTriple {
            n_plus,
            n_minus,
            n_zero,
        }
    }

    pub fn rank(&self) -> usize {
        self.n_plus + self.n_minus
    }

    pub fn order(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }
}

impl std::fmt::Display for InertiaTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_minus, self.n_zero)
    }
}

/// Exact monic characteristic polynomial `det(xI - A)` via the Berkowitz
/// algorithm.
///
/// The polynomial of the leading principal `k x k` submatrix is obtained
/// from the `(k-1) x (k-1)` one by a Toeplitz matrix-vector product whose
/// first column is `1, -a_kk, -R S, -R M S, -R M^2 S, ...`, with `M` the
/// previous principal submatrix, `R` the new row and `S` the new column.
/// No divisions occur, so all arithmetic stays in the integers; the cost is
/// O(n^4) ring operations.
pub fn char_poly(a: &IntSymMatrix) -> IntPolynomial {
    let n = a.order();
    // Descending coefficients of the current principal submatrix's
    // characteristic polynomial; starts as the constant polynomial 1.
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for k in 1..=n {
        let last = k - 1;
        // Toeplitz column t[0..=k].
        let mut t: Vec<BigInt> = Vec::with_capacity(k + 1);
        t.push(BigInt::one());
        t.push(-a.get(last, last).clone());
        // v starts as the new column S and is repeatedly multiplied by M.
        let mut v: Vec<BigInt> = (0..last).map(|i| a.get(i, last).clone()).collect();
        for step in 2..=k {
            if step > 2 {
                let w: Vec<BigInt> = (0..last)
                    .map(|i| (0..last).map(|j| a.get(i, j) * &v[j]).sum())
                    .collect();
                v = w;
            }
            let rv: BigInt = (0..last).map(|j| a.get(last, j) * &v[j]).sum();
            t.push(-rv);
        }
        let mut next = vec![BigInt::zero(); k + 1];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, cj) in c.iter().enumerate() {
                if i >= j && i - j <= k {
                    *slot += &t[i - j] * cj;
                }
            }
        }
        c = next;
    }
    c.reverse();
    IntPolynomial::from_coeffs(c)
}

/// Exact determinant by Bareiss fraction-free elimination. Independent of
/// the Berkowitz path, so the two can cross-check each other.
pub fn determinant_bareiss(a: &IntSymMatrix) -> BigInt {
    let n = a.order();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j).clone()).collect())
        .collect();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by construction
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Sum `E_k(A)` of all principal minors of size `k`, by direct enumeration
/// with Bareiss determinants. Intended for small `k`; enumeration over all
/// index subsets makes it a convenient independent oracle for the
/// characteristic-polynomial coefficients on small matrices.
pub fn principal_minor_sum(a: &IntSymMatrix, k: usize) -> Result<BigInt> {
    let n = a.order();
    if k == 0 || k > n {
        return Err(Error::SizeOutOfRange { size: k, order: n });
    }
    let mut sum = BigInt::zero();
    for subset in (0..n).combinations(k) {
        let sub = a.principal_submatrix(&subset)?;
        sum += determinant_bareiss(&sub);
    }
    Ok(sum)
}

/// Exact inertia from a characteristic polynomial with all-real roots.
///
/// The zero count is the multiplicity of the root 0; the positive count is
/// the number of sign variations among the remaining coefficients, which
/// Descartes' rule makes exact under the all-real-roots premise.
pub fn inertia_exact(p: &IntPolynomial) -> Result<InertiaTriple> {
    let n_zero = p.zero_root_multiplicity()?;
    let reduced = p.reduced()?;
    let mut n_plus = 0usize;
    let mut last_sign = 0i8;
    for c in reduced.coeffs().iter().rev() {
        if c.is_zero() {
            continue;
        }
        let s = if c.is_negative() { -1 } else { 1 };
        if last_sign != 0 && s != last_sign {
            n_plus += 1;
        }
        last_sign = s;
    }
    let degree = p.degree();
    Ok(InertiaTriple::new(n_plus, degree - n_zero - n_plus, n_zero))
}

/// Rank of the matrix behind the polynomial: degree minus the multiplicity
/// of the root 0.
pub fn rank_exact(p: &IntPolynomial) -> Result<usize> {
    Ok(p.degree() - p.zero_root_multiplicity()?)
}

/// True iff the root multiset is symmetric about the origin, i.e. after
/// factoring out the zero roots only even-degree terms remain.
pub fn is_spectrum_symmetric_exact(p: &IntPolynomial) -> Result<bool> {
    let reduced = p.reduced()?;
    Ok(reduced
        .coeffs()
        .iter()
        .enumerate()
        .all(|(i, c)| c.is_zero() || (reduced.degree() - i) % 2 == 0))
}

/// Looks for two consecutive nonzero coefficients in the reduced polynomial
/// written as `x^m + c_1 x^{m-1} + ... + c_m`.
///
/// Returns the first pair of indices `(i, i+1)` with `c_i != 0` and
/// `c_{i+1} != 0`, or `None`. A present witness forces an asymmetric root
/// multiset, because one of the two monomials has odd degree.
pub fn asymmetry_witness(p: &IntPolynomial) -> Option<(usize, usize)> {
    if p.is_zero() {
        return None;
    }
    let reduced = p.reduced().expect("nonzero polynomial");
    let m = reduced.degree();
    let c = |i: usize| reduced.coeff(m - i);
    (1..m).find(|&i| !c(i).is_zero() && !c(i + 1).is_zero()).map(|i| (i, i + 1))
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
    fn char_poly_of_scalar() {
        let m = IntSymMatrix::from_i64_rows(&[vec![7]]).unwrap();
        assert_eq!(char_poly(&m), IntPolynomial::from_i64_coeffs(&[-7, 1]));
    }

    #[test]
    fn char_poly_of_k2_adjacency() {
        let m = IntSymMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        // x^2 - 1
        assert_eq!(char_poly(&m), IntPolynomial::from_i64_coeffs(&[-1, 0, 1]));
    }

    #[test]
    fn char_poly_constant_term_matches_determinant() {
        // det(xI - A) at x = 0 equals (-1)^n det(A); Bareiss is the
        // independent route.
        let m = IntSymMatrix::from_i64_rows(&[
            vec![2, -1, 0, 3],
            vec![-1, 5, 4, 0],
            vec![0, 4, -2, 1],
            vec![3, 0, 1, 0],
        ])
        .unwrap();
        let p = char_poly(&m);
        let det = determinant_bareiss(&m);
        let sign = if m.order() % 2 == 0 { 1 } else { -1 };
        assert_eq!(p.coeff(0), det * BigInt::from(sign));
    }

    #[test]
    fn minor_sums_match_char_poly_coefficients() {
        let m = IntSymMatrix::from_i64_rows(&[
            vec![1, 2, 0, -3],
            vec![2, 0, 5, 1],
            vec![0, 5, -4, 2],
            vec![-3, 1, 2, 2],
        ])
        .unwrap();
        let n = m.order();
        let p = char_poly(&m);
        for k in 1..=n {
            let ek = principal_minor_sum(&m, k).unwrap();
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(p.coeff(n - k), ek * BigInt::from(sign), "k = {k}");
        }
    }

    #[test]
    fn minor_sum_rejects_bad_sizes() {
        let m = IntSymMatrix::zeros(3);
        assert!(matches!(
            principal_minor_sum(&m, 0),
            Err(Error::SizeOutOfRange { .. })
        ));
        assert!(matches!(
            principal_minor_sum(&m, 4),
            Err(Error::SizeOutOfRange { .. })
        ));
    }

    #[test]
    fn e1_of_eccentricity_matrices_is_zero() {
        let e = ecc_of(&complete(5));
        assert_eq!(principal_minor_sum(&e, 1).unwrap(), BigInt::zero());
    }

    #[test]
    fn inertia_of_complete_graph_matrices() {
        for n in 2..=6 {
            let p = char_poly(&ecc_of(&complete(n)));
            assert_eq!(
                inertia_exact(&p).unwrap(),
                InertiaTriple::new(1, n - 1, 0),
                "K_{n}"
            );
            assert_eq!(rank_exact(&p).unwrap(), n);
        }
    }

    #[test]
    fn inertia_rejects_zero_polynomial() {
        assert!(matches!(
            inertia_exact(&IntPolynomial::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn symmetry_of_even_polynomial() {
        // x^7 (x^4 - 216 x^2 + 320)
        let p = IntPolynomial::from_i64_coeffs(&[0, 0, 0, 0, 0, 0, 0, 320, 0, -216, 0, 1]);
        assert!(is_spectrum_symmetric_exact(&p).unwrap());
        assert_eq!(asymmetry_witness(&p), None);
        assert_eq!(inertia_exact(&p).unwrap(), InertiaTriple::new(2, 2, 7));
    }

    #[test]
    fn witness_on_consecutive_nonzero_coefficients() {
        // x^7 (x^4 - 199 x^2 - 360 x + 720): c_2 = -199, c_3 = -360.
        let p = IntPolynomial::from_i64_coeffs(&[0, 0, 0, 0, 0, 0, 0, 720, -360, -199, 0, 1]);
        assert!(!is_spectrum_symmetric_exact(&p).unwrap());
        assert_eq!(asymmetry_witness(&p), Some((2, 3)));
        assert_eq!(inertia_exact(&p).unwrap(), InertiaTriple::new(2, 2, 7));
    }

    #[test]
    fn sign_normalization_flips_negative_leading() {
        let p = IntPolynomial::from_i64_coeffs(&[2, 0, -1]);
        assert_eq!(
            p.sign_normalized(),
            IntPolynomial::from_i64_coeffs(&[-2, 0, 1])
        );
    }

    #[test]
    fn display_renders_signs_and_powers() {
        let p = IntPolynomial::from_i64_coeffs(&[320, 0, -216, 0, 1]);
        assert_eq!(p.display_expanded(), "x^4 - 216*x^2 + 320");
    }
}
