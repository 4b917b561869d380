#pragma once

// Checks at anisotropy gamma = i pi k / l, where e^{2 l gamma} = 1 and the
// ordered product of l B-operators with spectral shifts gamma vanishes.

#include <span>
#include <vector>

#include "sixv/numkit.hpp"
#include "sixv/params.hpp"
#include "sixv/report.hpp"
#include "sixv/spectrum.hpp"
#include "sixv/zeros.hpp"

namespace sixv {

struct RootOfUnitySpec {
  int k = 1;
  int l = 2;

  cplx gamma() const;
  /// l >= 5 lies outside the cases worked out analytically.
  bool conjectural() const { return l >= 5; }
};

/// Throws InvalidArgument unless l >= 2 and gcd(k, l) = 1.
RootOfUnitySpec make_root_of_unity(int k, int l);

/// |e^{2 l gamma} - 1|.
double root_condition_residual(const RootOfUnitySpec& spec);

/// ||prod_{k<l} B(lambda - k gamma)|| / prod_k ||B(lambda - k gamma)||.
CheckReport check_truncation(const RootOfUnitySpec& spec, cplx lambda, const ModelParams& p, double tol = 1e-9);

/// Lambda(l) Lambda(l - gamma) = prod sinh(l - mu)^2 - prod sinh(l - mu + gamma) sinh(l - mu - gamma),
/// together with the same right-hand side written as M_1^{(1)}(l, l - gamma).
CheckReport check_inversion_l2(const EigenState& state, const RootOfUnitySpec& spec, const ModelParams& p,
                               Sampler& sampler, int probes = 10, double tol = 1e-8);

/// Per zero w_i: (lhs - rhs) / max(|lhs|, |rhs|) with
///   lhs = prod_k sinh(w_i - mu_k + g) sinh(w_i - mu_k - g) / (sinh(w_i - mu_k + 2g) sinh(w_i - mu_k)),
///   rhs = -prod_{j=1}^{L-1} sinh(w_j - w_i + g) / sinh(w_j - w_i - g).
/// The rhs product includes j = i.
std::vector<double> bethe_residual(const SpectralData& data, const ModelParams& p);

/// Same as bethe_residual with the j = i factor left out of the product.
std::vector<double> bethe_residual_excluding_self(const SpectralData& data, const ModelParams& p);

/// Records for the zero equations at the given root of unity. For l = 2 the
/// simpler forms (product = 1, and the coth form when gamma = i pi/2 mod i pi)
/// are added. Records for l >= 5 carry conjecture evidence.
CheckReport check_bethe(const SpectralData& data, const RootOfUnitySpec& spec, const ModelParams& p,
                        double tol = 1e-6);

/// Q(lambda) of the l = 4 relation.
cplx q_function(cplx lambda, const ModelParams& p);

/// l = 4: the four-term eigenvalue relation, Q(l + gamma) = Q(l), the signed
/// form Q(l + gamma) = (-1)^{L+1} Q(l), and Lambda(w - g)/Lambda(w + g) form
/// of the zero equations.
CheckReport check_l4_relation(const SpectralData& data, const RootOfUnitySpec& spec, const ModelParams& p,
                              Sampler& sampler, int probes = 10, double tol = 1e-8);

/// l = 3: the explicit three-term relation, its coefficient form (evaluated
/// as a contour mean around the removable pole), and the vanishing middle
/// term at lambda = w_i + gamma.
CheckReport check_l3_relation(const SpectralData& data, const RootOfUnitySpec& spec, const ModelParams& p,
                              Sampler& sampler, int probes = 10, double tol = 1e-8);

/// The eigenvalue expansion over l variables lambda_j = lambda - j gamma,
/// which must vanish since l B-operators at these points annihilate |0>.
CheckReport check_truncated_relation(const EigenState& state, const RootOfUnitySpec& spec, cplx lambda,
                                     const ModelParams& p, double tol = 1e-8);

}  // namespace sixv
