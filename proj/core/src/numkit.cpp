#include "sixv/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "sixv/error.hpp"

namespace sixv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::PoleEncountered: return "PoleEncountered";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::ReconstructionFailure: return "ReconstructionFailure";
    case ErrorCode::K0Undefined: return "K0Undefined";
    case ErrorCode::GenericityExhausted: return "GenericityExhausted";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix kron_all(std::span<const CMatrix> factors) {
  if (factors.empty()) return CMatrix::Identity(1, 1);
  CMatrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

double op_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

bool all_finite(const CMatrix& m) { return m.allFinite(); }

namespace {

bool lex_less(cplx a, cplx b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

std::vector<EigenTriple> eig_general(const CMatrix& m, Eigen::Index max_dim) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::InvalidArgument, "eig_general requires a square matrix");
  }
  if (m.rows() > max_dim) {
    throw Error(ErrorCode::InvalidArgument, "matrix dimension exceeds the configured cap");
  }
  const Eigen::Index n = m.rows();
  if (n == 0) return {};

  Eigen::ComplexEigenSolver<CMatrix> right_solver(m);
  Eigen::ComplexEigenSolver<CMatrix> left_solver(m.transpose());
  if (right_solver.info() != Eigen::Success || left_solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NonConvergence, "complex Schur iteration did not converge");
  }
  const CVector& rvals = right_solver.eigenvalues();
  const CVector& lvals = left_solver.eigenvalues();
  const CMatrix& rvecs = right_solver.eigenvectors();
  const CMatrix& lvecs = left_solver.eigenvectors();

  double scale = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, std::abs(rvals(i)));
  const double match_tol = 1e-8 * scale;

  // Eigenvalues closer than match_tol form a cluster; clusters get their left
  // vectors from the inverse of the right eigenvector matrix instead.
  std::vector<int> cluster_size(n, 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j && std::abs(rvals(i) - rvals(j)) < match_tol) ++cluster_size[i];
    }
  }
  const bool any_cluster = std::any_of(cluster_size.begin(), cluster_size.end(),
                                       [](int s) { return s > 1; });
  CMatrix rinv;
  if (any_cluster) {
    Eigen::FullPivLU<CMatrix> lu(rvecs);
    if (!lu.isInvertible()) {
      throw Error(ErrorCode::DegenerateSpectrum, "matrix is not diagonalizable");
    }
    rinv = lu.inverse();
  }

  std::vector<EigenTriple> out;
  out.reserve(n);
  std::vector<bool> claimed(n, false);
  for (Eigen::Index i = 0; i < n; ++i) {
    EigenTriple t;
    t.value = rvals(i);
    t.right = rvecs.col(i).normalized();
    if (cluster_size[i] > 1) {
      t.left = rinv.row(i).transpose();
    } else {
      Eigen::Index best = -1;
      double best_dist = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        const double d = std::abs(lvals(j) - rvals(i));
        if (best < 0 || d < best_dist) {
          best = j;
          best_dist = d;
        }
      }
      if (best_dist > match_tol || claimed[best]) {
        throw Error(ErrorCode::DegenerateSpectrum, "left/right spectra cannot be paired");
      }
      claimed[best] = true;
      t.left = lvecs.col(best);
    }
    const cplx overlap = t.left.transpose() * t.right;
    if (std::abs(overlap) < 1e-14 * t.left.norm()) {
      throw Error(ErrorCode::DegenerateSpectrum, "vanishing left/right overlap");
    }
    t.left /= overlap;
    out.push_back(std::move(t));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const EigenTriple& a, const EigenTriple& b) { return lex_less(a.value, b.value); });
  return out;
}

CPoly CPoly::from_roots(std::span<const cplx> roots) {
  std::vector<cplx> c{1.0};
  for (const cplx r : roots) {
    std::vector<cplx> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return CPoly(std::move(c));
}

double CPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const cplx c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

cplx CPoly::operator()(cplx x) const {
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CPoly CPoly::derivative() const {
  if (coeffs_.size() <= 1) return CPoly({0.0});
  std::vector<cplx> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return CPoly(std::move(d));
}

CPoly CPoly::trimmed(double rel_tol) const {
  const double cut = rel_tol * max_abs_coeff();
  std::vector<cplx> c = coeffs_;
  while (c.size() > 1 && std::abs(c.back()) <= cut) c.pop_back();
  return CPoly(std::move(c));
}

CPoly operator*(const CPoly& p, const CPoly& q) {
  if (p.coeffs_.empty() || q.coeffs_.empty()) return CPoly();
  std::vector<cplx> c(p.coeffs_.size() + q.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return CPoly(std::move(c));
}

CPoly operator-(const CPoly& p, const CPoly& q) {
  std::vector<cplx> c(std::max(p.coeffs_.size(), q.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] -= q.coeffs_[i];
  return CPoly(std::move(c));
}

CPoly fit_poly(std::span<const Sample> samples, int degree, double max_condition) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative polynomial degree");
  const auto n = static_cast<Eigen::Index>(samples.size());
  const Eigen::Index cols = degree + 1;
  if (n < cols) throw Error(ErrorCode::InvalidArgument, "fit_poly needs at least degree+1 samples");

  CMatrix vander(n, cols);
  CVector rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    cplx pw = 1.0;
    for (Eigen::Index k = 0; k < cols; ++k) {
      vander(i, k) = pw;
      pw *= samples[i].x;
    }
    rhs(i) = samples[i].y;
  }
  Eigen::JacobiSVD<CMatrix> svd(vander, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  if (!(smin > 0.0) || sv(0) / smin > max_condition) {
    throw Error(ErrorCode::SingularSystem, "Vandermonde system is ill-conditioned");
  }
  const CVector c = svd.solve(rhs);
  return CPoly(std::vector<cplx>(c.data(), c.data() + c.size()));
}

std::vector<cplx> circle_nodes(int count, double radius, double phase) {
  std::vector<cplx> xs(count);
  for (int k = 0; k < count; ++k) {
    xs[k] = std::polar(radius, 2.0 * std::numbers::pi * k / count + phase);
  }
  return xs;
}

std::vector<cplx> poly_roots(const CPoly& p) {
  const CPoly q = p.trimmed(1e-15);
  const int d = q.degree();
  if (d < 1) throw Error(ErrorCode::DegreeZero, "polynomial has no roots");

  const auto& c = q.coeffs();
  const cplx lead = c.back();
  CMatrix companion = CMatrix::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[i] / lead;

  Eigen::ComplexEigenSolver<CMatrix> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NonConvergence, "companion eigenvalues did not converge");
  }
  const CPoly dq = q.derivative();
  std::vector<cplx> roots(d);
  for (int i = 0; i < d; ++i) {
    cplx r = solver.eigenvalues()(i);
    // Newton polish; keep a step only if it lowers |p(r)|.
    for (int it = 0; it < 3; ++it) {
      const cplx f = q(r);
      const cplx df = dq(r);
      if (df == cplx(0.0)) break;
      const cplx cand = r - f / df;
      if (std::abs(q(cand)) < std::abs(f)) {
        r = cand;
      } else {
        break;
      }
    }
    roots[i] = r;
  }
  return roots;
}

}  // namespace sixv
