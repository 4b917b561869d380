#pragma once

// Partition function of the six-vertex model with domain wall boundaries.

#include <span>
#include <vector>

#include "sixv/numkit.hpp"
#include "sixv/params.hpp"
#include "sixv/report.hpp"

namespace sixv {

/// Spectral parameters lambda_1..lambda_n of one DWBC evaluation.
struct SpectralPoint {
  std::vector<cplx> lambdas;
};

/// <0bar| B(l_1) ... B(l_L) |0>. Requires lambdas.size() == L.
cplx z_bproduct(const SpectralPoint& point, const ModelParams& p);

/// <0bar| B(l_1) ... B(l_n) |0> for any n (vanishes unless n == L).
cplx z_partial(std::span<const cplx> lambdas, const ModelParams& p);

/// Overall convention factor between the determinant formula and the
/// B-product definition (calibrated at L = 1, 2; see tests).
inline constexpr double kIzerginConvention = 1.0;

/// Izergin-type determinant:
///   prod_{i,j} a(l_i - m_j) b(l_i - m_j)
///   / (prod_{i<j} b(l_i - l_j) b(m_j - m_i)) * det[ c / (a(l_i - m_j) b(l_i - m_j)) ].
/// Throws SingularDenominator if a difference sinh falls below eps.
cplx z_izergin(const SpectralPoint& point, const ModelParams& p, double eps = kDefaultEpsGen);

/// [X^{1,L}] |0> = Z |0bar>: off-|0bar> weight and the coefficient against
/// z_bproduct, plus the vanishing of L+1 B-operators on |0>.
CheckReport check_highest_weight(const SpectralPoint& point, const ModelParams& p,
                                 std::span<const cplx> extra = {}, double tol = 1e-10);

}  // namespace sixv
