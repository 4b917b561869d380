#pragma once

#include <vector>

#include "sixv/numkit.hpp"
#include "sixv/params.hpp"

namespace sixv {

/// One eigenstate of the twisted transfer matrix. `left` is the left
/// eigenvector stored as a column (left^T T = Lambda left^T), normalised so
/// that left^T right = 1. Overlaps use the bilinear pairing, no conjugation.
struct EigenState {
  int index = 0;
  cplx sample_value;  // eigenvalue of T(lambda*)
  CVector right;
  CVector left;
  double right_residual = 0.0;
  double left_residual = 0.0;

  cplx f0() const { return left(0); }                     // <Psi|0>
  cplx f0bar() const { return left(left.size() - 1); }    // <Psi|0bar>

  bool has_k0(double eps = kDefaultEpsGen) const;
  /// f0bar / f0; throws K0Undefined when |f0| < eps * ||left||.
  cplx k0(double eps = kDefaultEpsGen) const;
};

struct SpectrumOptions {
  double min_spacing = 1e-6;
  int max_redraws = 50;
};

/// Eigenstates of T computed once at a random generic sample point lambda*.
/// Because the family commutes, Lambda(lambda) for any other lambda is
/// <Psi_left| T(lambda) |Psi_right>.
class TransferSpectrum {
 public:
  TransferSpectrum(ModelParams params, Sampler& sampler, SpectrumOptions opts = {});

  const ModelParams& params() const { return params_; }
  const std::vector<EigenState>& states() const { return states_; }
  cplx sample_point() const { return sample_point_; }

  cplx eigenvalue(const EigenState& s, cplx lambda) const;
  /// Lambda(lambda) for every state from a single T(lambda).
  std::vector<cplx> eigenvalues(cplx lambda) const;

 private:
  ModelParams params_;
  cplx sample_point_;
  std::vector<EigenState> states_;
};

/// Lambda(lambda) for a single state without a TransferSpectrum.
cplx eigenvalue_at(const EigenState& s, cplx lambda, const ModelParams& p);

}  // namespace sixv
