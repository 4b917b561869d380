#include "sixv/params.hpp"

#include <cmath>
#include <string>

#include "sixv/error.hpp"

namespace sixv {

bool is_generic(const ModelParams& p, double eps) {
  for (std::size_t i = 0; i < p.mu.size(); ++i) {
    for (std::size_t j = 0; j < p.mu.size(); ++j) {
      if (i == j) continue;
      const cplx d = p.mu[i] - p.mu[j];
      if (std::abs(std::sinh(d)) <= eps) return false;
      if (std::abs(std::sinh(d + p.gamma)) <= eps) return false;
      if (std::abs(std::sinh(d - p.gamma)) <= eps) return false;
    }
  }
  return true;
}

void validate(const ModelParams& p) {
  if (p.L < 1 || p.L > 8) {
    throw Error(ErrorCode::InvalidArgument, "lattice size must lie in [1, 8], got " + std::to_string(p.L));
  }
  if (static_cast<int>(p.mu.size()) != p.L) {
    throw Error(ErrorCode::InvalidArgument, "expected one inhomogeneity per site");
  }
}

bool is_generic_point(std::span<const cplx> lambdas, const ModelParams& p, double eps) {
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
      if (i == j) continue;
      const cplx d = lambdas[i] - lambdas[j];
      if (std::abs(std::sinh(d)) <= eps || std::abs(std::sinh(d + p.gamma)) <= eps) return false;
    }
    for (const cplx m : p.mu) {
      const cplx d = lambdas[i] - m;
      if (std::abs(std::sinh(d)) <= eps || std::abs(std::sinh(d + p.gamma)) <= eps) return false;
    }
  }
  return true;
}

cplx Sampler::uniform() {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng_);
  const double im = u(rng_);
  return {re, im};
}

std::vector<cplx> Sampler::uniform(int n) {
  std::vector<cplx> v(n);
  for (auto& x : v) x = uniform();
  return v;
}

ModelParams Sampler::model(int L, cplx gamma, double eps, int max_tries) {
  ModelParams p;
  p.L = L;
  p.gamma = gamma;
  for (int t = 0; t < max_tries; ++t) {
    p.mu = uniform(L);
    if (is_generic(p, eps)) return p;
  }
  throw Error(ErrorCode::GenericityExhausted, "could not draw generic inhomogeneities");
}

std::vector<cplx> Sampler::point(int n, const ModelParams& p, std::span<const cplx> avoid, double eps,
                                 int max_tries) {
  for (int t = 0; t < max_tries; ++t) {
    std::vector<cplx> v = uniform(n);
    if (!is_generic_point(v, p, eps)) continue;
    bool ok = true;
    for (const cplx x : v) {
      for (const cplx y : avoid) {
        const cplx d = x - y;
        if (std::abs(std::sinh(d)) <= eps || std::abs(std::sinh(d + p.gamma)) <= eps ||
            std::abs(std::sinh(d - p.gamma)) <= eps) {
          ok = false;
        }
      }
    }
    if (ok) return v;
  }
  throw Error(ErrorCode::GenericityExhausted, "could not draw a generic spectral point");
}

}  // namespace sixv
