#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "sixv/numkit.hpp"

namespace sixv {

inline constexpr double kDefaultEpsGen = 1e-4;

struct ModelParams {
  int L = 1;
  cplx gamma{0.5, 0.3};
  std::vector<cplx> mu;
  std::uint64_t seed = 0;

  Eigen::Index dim() const { return Eigen::Index{1} << L; }
};

/// |sinh(mu_i - mu_j)| and |sinh(mu_i - mu_j +- gamma)| all above eps.
bool is_generic(const ModelParams& p, double eps = kDefaultEpsGen);

/// Throws InvalidArgument if mu has the wrong length or L is out of [1, 8].
void validate(const ModelParams& p);

/// True when the spectral parameters are mutually generic and generic with
/// respect to the inhomogeneities: none of sinh(x - y), sinh(x - y +- gamma)
/// for x != y in lambdas, nor sinh(x - mu_k), sinh(x - mu_k + gamma), falls
/// below eps.
bool is_generic_point(std::span<const cplx> lambdas, const ModelParams& p,
                      double eps = kDefaultEpsGen);

/// Deterministic source of complex parameters drawn uniformly from the
/// rectangle [-1, 1] + i[-1, 1].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  cplx uniform();
  std::vector<cplx> uniform(int n);

  /// Random model with genericity filter (at most max_tries redraws).
  ModelParams model(int L, cplx gamma, double eps = kDefaultEpsGen, int max_tries = 1000);

  /// n spectral parameters passing is_generic_point for p, plus any extra
  /// points in `avoid` that the draw must also stay away from.
  std::vector<cplx> point(int n, const ModelParams& p, std::span<const cplx> avoid = {},
                          double eps = kDefaultEpsGen, int max_tries = 1000);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace sixv
