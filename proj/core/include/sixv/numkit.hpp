#pragma once

// Dense complex linear algebra and polynomial helpers shared by every module.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace sixv {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr cplx kI{0.0, 1.0};

/// Default cap on matrix dimension (2^8).
inline constexpr Eigen::Index kMaxDimension = 256;

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Kronecker product of a list of factors, left to right.
CMatrix kron_all(std::span<const CMatrix> factors);

/// Spectral norm (largest singular value).
double op_norm(const CMatrix& m);

bool all_finite(const CMatrix& m);

struct EigenTriple {
  cplx value;
  CVector right;
  CVector left;  // row eigenvector stored as a column: left^T m = value left^T
};

/// Eigen-decomposition of a general square complex matrix. Triples are sorted
/// lexicographically by (real, imag) of the eigenvalue; left vectors are
/// scaled so that left^T right = 1 and right vectors have unit norm.
///
/// Throws NonConvergence if the QR iteration fails and DegenerateSpectrum if
/// left and right spectra cannot be paired unambiguously.
std::vector<EigenTriple> eig_general(const CMatrix& m, Eigen::Index max_dim = kMaxDimension);

/// Polynomial c_0 + c_1 x + ... + c_d x^d.
class CPoly {
 public:
  CPoly() = default;
  explicit CPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Monic polynomial with the given roots.
  static CPoly from_roots(std::span<const cplx> roots);

  const std::vector<cplx>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  double max_abs_coeff() const;

  cplx operator()(cplx x) const;
  CPoly derivative() const;

  /// Drops leading coefficients with |c| <= rel_tol * max|c|.
  CPoly trimmed(double rel_tol = 0.0) const;

  friend CPoly operator*(const CPoly& p, const CPoly& q);
  friend CPoly operator-(const CPoly& p, const CPoly& q);

 private:
  std::vector<cplx> coeffs_;
};

struct Sample {
  cplx x;
  cplx y;
};

/// Degree-`degree` interpolant through the samples (least squares when more
/// than degree+1 samples are supplied). Throws SingularSystem when the
/// Vandermonde condition number exceeds `max_condition`.
CPoly fit_poly(std::span<const Sample> samples, int degree, double max_condition = 1e12);

/// `count` points spread as roots of unity on the circle |x| = radius.
std::vector<cplx> circle_nodes(int count, double radius, double phase = 0.1);

/// Roots of p via companion-matrix eigenvalues, polished by Newton steps.
/// Throws DegreeZero for constant input.
std::vector<cplx> poly_roots(const CPoly& p);

}  // namespace sixv
