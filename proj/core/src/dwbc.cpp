#include "sixv/dwbc.hpp"

#include <cmath>
#include <string>

#include "sixv/error.hpp"
#include "sixv/vertex_core.hpp"

namespace sixv {

cplx z_partial(std::span<const cplx> lambdas, const ModelParams& p) {
  CVector v = highest_weight(p.L);
  for (auto it = lambdas.rbegin(); it != lambdas.rend(); ++it) v = monodromy(*it, p).b_op * v;
  return v(v.size() - 1);
}

cplx z_bproduct(const SpectralPoint& point, const ModelParams& p) {
  if (static_cast<int>(point.lambdas.size()) != p.L) {
    throw Error(ErrorCode::InvalidArgument, "z_bproduct needs exactly L spectral parameters");
  }
  return z_partial(point.lambdas, p);
}

cplx z_izergin(const SpectralPoint& point, const ModelParams& p, double eps) {
  const int L = p.L;
  const auto& lam = point.lambdas;
  if (static_cast<int>(lam.size()) != L) {
    throw Error(ErrorCode::InvalidArgument, "z_izergin needs exactly L spectral parameters");
  }
  cplx numer = 1.0;
  CMatrix m(L, L);
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      const cplx ab = weight_a(lam[i] - p.mu[j], p.gamma) * weight_b(lam[i] - p.mu[j]);
      if (std::abs(ab) < eps * eps) {
        throw Error(ErrorCode::SingularDenominator, "a*b vanishes in the determinant entries");
      }
      numer *= ab;
      m(i, j) = weight_c(p.gamma) / ab;
    }
  }
  cplx denom = 1.0;
  for (int i = 0; i < L; ++i) {
    for (int j = i + 1; j < L; ++j) {
      const cplx bl = weight_b(lam[i] - lam[j]);
      const cplx bm = weight_b(p.mu[j] - p.mu[i]);
      if (std::abs(bl) < eps || std::abs(bm) < eps) {
        throw Error(ErrorCode::SingularDenominator, "coinciding spectral parameters or inhomogeneities");
      }
      denom *= bl * bm;
    }
  }
  return kIzerginConvention * numer / denom * m.determinant();
}

CheckReport check_highest_weight(const SpectralPoint& point, const ModelParams& p,
                                 std::span<const cplx> extra, double tol) {
  CheckReport report;
  CVector v = highest_weight(p.L);
  for (auto it = point.lambdas.rbegin(); it != point.lambdas.rend(); ++it) {
    v = monodromy(*it, p).b_op * v;
  }
  const cplx coeff = v(v.size() - 1);
  const double total = v.norm();
  CVector off = v;
  off(off.size() - 1) = 0.0;
  report.add(make_record("highest_weight_parallel", "high", off.norm() / std::max(total, 1e-300), tol));

  const cplx z = z_bproduct(point, p);
  report.add(make_record("highest_weight_coefficient", "high",
                         std::abs(coeff - z) / std::max(std::abs(z), 1e-300), tol));

  if (!extra.empty()) {
    CVector w = v;
    double scale = v.norm();
    for (const cplx l : extra) {
      const CMatrix b = monodromy(l, p).b_op;
      scale *= op_norm(b);
      w = b * w;
    }
    report.add(make_record("b_product_beyond_L_vanishes", "high", w.norm() / std::max(scale, 1e-300), tol));
  }
  return report;
}

}  // namespace sixv
