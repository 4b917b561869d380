#pragma once

// Zeroes of transfer-matrix eigenvalues and the constraints they satisfy
// together with the partition function.

#include <optional>
#include <span>
#include <vector>

#include "sixv/numkit.hpp"
#include "sixv/params.hpp"
#include "sixv/report.hpp"
#include "sixv/spectrum.hpp"

namespace sixv {

/// Lambda(l) = Lambda(0) prod_j sinh(w_j - l) / sinh(w_j).
struct SpectralData {
  EigenState state;
  cplx lambda0_value;
  std::vector<cplx> zeros;
  std::optional<cplx> k0;
  double reconstruction_residual = 0.0;
};

/// Fits Lambda(l) e^{(L-1)l} as a polynomial in x = e^{2l}, takes its roots
/// and maps them back with w = log(x)/2 on the principal branch. The product
/// form is then compared with the eigenvalue at `probes` random points.
/// Throws ReconstructionFailure above `tol`, DegenerateSpectrum when two
/// zeros coincide mod i*pi.
SpectralData extract_zeros(const EigenState& state, const ModelParams& p, Sampler& sampler,
                           int probes = 10, double tol = 1e-7);

/// Lambda evaluated through its zeros.
cplx product_form(const SpectralData& data, cplx lambda);

/// |Lambda(w_j)| relative to the largest |Lambda| on the fitting circle.
CheckReport check_zero_values(const SpectralData& data, const ModelParams& p, double tol = 1e-7);

/// The ratio Z(l0, w) k0 / V(l0, w) at each l0. Even L uses V^{(L)} over all
/// indices; odd L uses V^{(L-1)} over indices 1..L-1 and divides by Lambda(l0).
std::vector<cplx> lz01_ratios(const SpectralData& data, std::span<const cplx> lambda0s, const ModelParams& p);

/// Emits "lz01_constancy" (spread of the ratio over the l0 draws), for even L
/// "lz01_even_sign" against (-1)^{L/2}, and "lz01_unit" against 1.
CheckReport check_lz01(const SpectralData& data, std::span<const cplx> lambda0s, const ModelParams& p,
                       double tol = 1e-6);

/// F = V^{(L)} for even L, V^{(L-1)}_{1..L-1} prod_j b(l0 - w_j) for odd L.
cplx build_F(cplx lambda0, const SpectralData& data, const ModelParams& p);

/// Z(l0, w) and F(l0, w) times e^{(L-1) l0} as polynomials in x0 = e^{2 l0}.
struct ZFPolynomials {
  CPoly z;
  CPoly f;
  double z_fit_residual = 0.0;
  double f_fit_residual = 0.0;
};
ZFPolynomials fit_zf(const SpectralData& data, const ModelParams& p);

/// Matches zeros of Z(., w) and F(., w) by minimal-cost bijection and reports
/// the largest |log(x_Z / x_F)|, plus the polynomial fit residuals.
CheckReport check_zero_coincidence(const SpectralData& data, const ModelParams& p, double tol = 1e-6);

/// Coefficients of P = Z F' - F Z' in x0, normalised by |z| |f| of the fitted
/// coefficient vectors. Length max([L] + 1, 2L - 3).
std::vector<cplx> wronskian_coeffs(const SpectralData& data, const ModelParams& p);

/// Vanishing of the Wronskian coefficients, and their growth when any single
/// w_j is moved by `shift` (residual = threshold / weakest growth, tol 1).
CheckReport check_wronskian(const SpectralData& data, const ModelParams& p, double tol = 1e-6,
                            double shift = 1e-2, double sharp_threshold = 1e-3);

/// Repeats the product-form and ratio checks with every w_j moved by i*pi.
CheckReport check_branch_shift(const SpectralData& data, std::span<const cplx> lambda0s,
                               const ModelParams& p, double tol = 1e-6);

}  // namespace sixv
