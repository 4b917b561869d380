#include "sixv/spectrum.hpp"

#include <cmath>

#include "sixv/error.hpp"
#include "sixv/vertex_core.hpp"

namespace sixv {

bool EigenState::has_k0(double eps) const { return std::abs(f0()) >= eps * left.norm(); }

cplx EigenState::k0(double eps) const {
  if (!has_k0(eps)) throw Error(ErrorCode::K0Undefined, "eigenstate has vanishing overlap with |0>");
  return f0bar() / f0();
}

cplx eigenvalue_at(const EigenState& s, cplx lambda, const ModelParams& p) {
  return s.left.transpose() * transfer(lambda, p) * s.right;
}

TransferSpectrum::TransferSpectrum(ModelParams params, Sampler& sampler, SpectrumOptions opts)
    : params_(std::move(params)) {
  validate(params_);
  for (int attempt = 0; attempt < opts.max_redraws; ++attempt) {
    sample_point_ = sampler.point(1, params_).front();
    const CMatrix t = transfer(sample_point_, params_);
    std::vector<EigenTriple> triples;
    try {
      triples = eig_general(t);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DegenerateSpectrum) continue;
      throw;
    }
    double spacing = INFINITY;
    for (std::size_t i = 0; i < triples.size(); ++i) {
      for (std::size_t j = i + 1; j < triples.size(); ++j) {
        spacing = std::min(spacing, std::abs(triples[i].value - triples[j].value));
      }
    }
    if (spacing < opts.min_spacing) continue;

    const double tnorm = t.norm();
    states_.clear();
    for (std::size_t i = 0; i < triples.size(); ++i) {
      EigenState s;
      s.index = static_cast<int>(i);
      s.sample_value = triples[i].value;
      s.right = triples[i].right;
      s.left = triples[i].left;
      s.right_residual = (t * s.right - s.sample_value * s.right).norm() / (tnorm * s.right.norm());
      s.left_residual = (t.transpose() * s.left - s.sample_value * s.left).norm() / (tnorm * s.left.norm());
      states_.push_back(std::move(s));
    }
    return;
  }
  throw Error(ErrorCode::DegenerateSpectrum, "transfer matrix spectrum is degenerate at every sample point");
}

cplx TransferSpectrum::eigenvalue(const EigenState& s, cplx lambda) const {
  return eigenvalue_at(s, lambda, params_);
}

std::vector<cplx> TransferSpectrum::eigenvalues(cplx lambda) const {
  const CMatrix t = transfer(lambda, params_);
  std::vector<cplx> out;
  out.reserve(states_.size());
  for (const auto& s : states_) out.push_back(s.left.transpose() * t * s.right);
  return out;
}

}  // namespace sixv
