#include "sixv/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "sixv/dwbc.hpp"
#include "sixv/error.hpp"
#include "sixv/functional.hpp"
#include "sixv/vertex_core.hpp"

namespace sixv {

namespace {

constexpr double kCircleRadius = 1.3;
constexpr double kCirclePhase = 0.1;

cplx strip_factor(cplx lambda, int L) { return std::exp(static_cast<double>(L - 1) * lambda); }

cplx to_lambda(cplx x) { return 0.5 * std::log(x); }

std::string describe(const SpectralData& data, const ModelParams& p) {
  std::string s = "L=" + std::to_string(p.L) + " state=" + std::to_string(data.state.index);
  char buf[64];
  std::snprintf(buf, sizeof buf, " gamma=%.17g,%.17g", p.gamma.real(), p.gamma.imag());
  s += buf;
  for (const cplx m : p.mu) {
    std::snprintf(buf, sizeof buf, " mu=%.17g,%.17g", m.real(), m.imag());
    s += buf;
  }
  for (const cplx w : data.zeros) {
    std::snprintf(buf, sizeof buf, " w=%.17g,%.17g", w.real(), w.imag());
    s += buf;
  }
  return s;
}

CheckRecord tagged(CheckRecord r, const SpectralData& data) {
  r.eigenstate = data.state.index;
  return r;
}

VarVector with_zeros(cplx lambda0, std::span<const cplx> zeros) {
  std::vector<cplx> v{lambda0};
  v.insert(v.end(), zeros.begin(), zeros.end());
  return VarVector(std::move(v));
}

cplx v_all(const VarVector& vars, int first, const ModelParams& p) {
  std::vector<int> idx(vars.size() - static_cast<std::size_t>(first));
  std::iota(idx.begin(), idx.end(), first);
  return v_coeff(idx, vars, p);
}

cplx ratio_with(std::span<const cplx> zeros, cplx k0, cplx lambda0, const EigenState& state,
                const ModelParams& p) {
  const VarVector vars = with_zeros(lambda0, zeros);
  const cplx z = z_partial(vars.values(), p);
  if (p.L % 2 == 0) return z * k0 / v_all(vars, 0, p);
  return z * k0 / v_all(vars, 1, p) / eigenvalue_at(state, lambda0, p);
}

cplx build_F_with(cplx lambda0, std::span<const cplx> zeros, const ModelParams& p) {
  const VarVector vars = with_zeros(lambda0, zeros);
  if (p.L % 2 == 0) return v_all(vars, 0, p);
  cplx f = v_all(vars, 1, p);
  for (const cplx w : zeros) f *= weight_b(lambda0 - w);
  return f;
}

double held_out_residual(const CPoly& poly, const std::vector<Sample>& check) {
  double err = 0.0;
  double scale = 0.0;
  for (const auto& s : check) {
    err = std::max(err, std::abs(poly(s.x) - s.y));
    scale = std::max(scale, std::abs(s.y));
  }
  return scale > 0 ? err / scale : err;
}

std::vector<cplx> wronskian_from(const ZFPolynomials& zf, int L) {
  const CPoly pw = zf.z * zf.f.derivative() - zf.f * zf.z.derivative();
  double nz = 0.0;
  double nf = 0.0;
  for (const cplx c : zf.z.coeffs()) nz += std::norm(c);
  for (const cplx c : zf.f.coeffs()) nf += std::norm(c);
  const double scale = std::sqrt(nz * nf);
  const std::size_t count = static_cast<std::size_t>(std::max(even_floor(L) + 1, 2 * L - 3));
  std::vector<cplx> out(count, cplx{0.0});
  for (std::size_t k = 0; k < std::min(count, pw.size()); ++k) {
    out[k] = scale > 0 ? pw.coeffs()[k] / scale : pw.coeffs()[k];
  }
  return out;
}

ZFPolynomials fit_zf_with(std::span<const cplx> zeros, const ModelParams& p) {
  const int L = p.L;
  const auto nodes = circle_nodes(2 * L, kCircleRadius, kCirclePhase);
  const auto held = circle_nodes(L + 1, 0.9, 0.37);
  std::vector<Sample> zs, fs, zc, fc;
  for (const cplx x : nodes) {
    const cplx l0 = to_lambda(x);
    const cplx s = strip_factor(l0, L);
    zs.push_back({x, z_partial(with_zeros(l0, zeros).values(), p) * s});
    fs.push_back({x, build_F_with(l0, zeros, p) * s});
  }
  for (const cplx x : held) {
    const cplx l0 = to_lambda(x);
    const cplx s = strip_factor(l0, L);
    zc.push_back({x, z_partial(with_zeros(l0, zeros).values(), p) * s});
    fc.push_back({x, build_F_with(l0, zeros, p) * s});
  }
  ZFPolynomials out;
  out.z = fit_poly(zs, L - 1);
  out.f = fit_poly(fs, L - 1);
  out.z_fit_residual = held_out_residual(out.z, zc);
  out.f_fit_residual = held_out_residual(out.f, fc);
  return out;
}

void require_zeros(const ModelParams& p) {
  if (p.L < 2) throw Error(ErrorCode::InvalidArgument, "zero constraints need L >= 2");
}

cplx require_k0(const SpectralData& data) {
  if (!data.k0) throw Error(ErrorCode::K0Undefined, "state has vanishing overlap with |0>");
  return *data.k0;
}

}  // namespace

SpectralData extract_zeros(const EigenState& state, const ModelParams& p, Sampler& sampler, int probes,
                           double tol) {
  const int L = p.L;
  SpectralData data;
  data.state = state;
  data.lambda0_value = eigenvalue_at(state, 0.0, p);
  if (state.has_k0()) data.k0 = state.k0();

  if (L >= 2) {
    std::vector<Sample> samples;
    for (const cplx x : circle_nodes(2 * L, kCircleRadius, kCirclePhase)) {
      const cplx l = to_lambda(x);
      samples.push_back({x, eigenvalue_at(state, l, p) * strip_factor(l, L)});
    }
    const CPoly poly = fit_poly(samples, L - 1);
    if (std::abs(poly.coeffs().back()) <= 1e-12 * poly.max_abs_coeff()) {
      throw Error(ErrorCode::ReconstructionFailure, "eigenvalue polynomial has lower degree than L-1");
    }
    for (const cplx x : poly_roots(poly)) data.zeros.push_back(to_lambda(x));
    for (std::size_t i = 0; i < data.zeros.size(); ++i) {
      for (std::size_t j = i + 1; j < data.zeros.size(); ++j) {
        if (std::abs(std::sinh(data.zeros[i] - data.zeros[j])) < kDefaultEpsGen) {
          throw Error(ErrorCode::DegenerateSpectrum, "eigenvalue zeros coincide");
        }
      }
    }
  }

  double worst = 0.0;
  for (int k = 0; k < probes; ++k) {
    const cplx l = sampler.uniform();
    const cplx direct = eigenvalue_at(state, l, p);
    const double scale = std::max(std::abs(direct), std::numeric_limits<double>::min());
    worst = std::max(worst, std::abs(direct - product_form(data, l)) / scale);
  }
  data.reconstruction_residual = worst;
  if (!(worst < tol)) throw Error(ErrorCode::ReconstructionFailure, "product form does not reproduce the eigenvalue");
  return data;
}

cplx product_form(const SpectralData& data, cplx lambda) {
  cplx v = data.lambda0_value;
  for (const cplx w : data.zeros) v *= std::sinh(w - lambda) / std::sinh(w);
  return v;
}

CheckReport check_zero_values(const SpectralData& data, const ModelParams& p, double tol) {
  double scale = 0.0;
  for (const cplx x : circle_nodes(2 * p.L, kCircleRadius, kCirclePhase)) {
    scale = std::max(scale, std::abs(eigenvalue_at(data.state, to_lambda(x), p)));
  }
  double worst = 0.0;
  for (const cplx w : data.zeros) worst = std::max(worst, std::abs(eigenvalue_at(data.state, w, p)));
  CheckReport report;
  report.add(tagged(make_record("eigenvalue_at_zeros", "wj", scale > 0 ? worst / scale : worst, tol,
                                describe(data, p)),
                    data));
  report.add(tagged(make_record("product_form", "wj", data.reconstruction_residual, tol, describe(data, p)), data));
  return report;
}

std::vector<cplx> lz01_ratios(const SpectralData& data, std::span<const cplx> lambda0s, const ModelParams& p) {
  require_zeros(p);
  const cplx k0 = require_k0(data);
  std::vector<cplx> out;
  for (const cplx l0 : lambda0s) out.push_back(ratio_with(data.zeros, k0, l0, data.state, p));
  return out;
}

CheckReport check_lz01(const SpectralData& data, std::span<const cplx> lambda0s, const ModelParams& p, double tol) {
  if (lambda0s.size() < 2) throw Error(ErrorCode::InvalidArgument, "constancy needs several lambda_0 draws");
  const auto ratios = lz01_ratios(data, lambda0s, p);
  const std::string params = describe(data, p);

  double spread = 0.0;
  for (const cplx r : ratios) spread = std::max(spread, std::abs(r - ratios.front()));
  spread /= std::max(std::abs(ratios.front()), std::numeric_limits<double>::min());

  CheckReport report;
  report.add(tagged(make_record("lz01_constancy", "LZ01", spread, tol, params), data));
  if (p.L % 2 == 0) {
    const double sign = (p.L / 2) % 2 == 0 ? 1.0 : -1.0;
    double dev = 0.0;
    for (const cplx r : ratios) dev = std::max(dev, std::abs(r - sign));
    report.add(tagged(make_record("lz01_even_sign", "LZ01", dev, tol, params), data));
  }
  double unit = 0.0;
  for (const cplx r : ratios) unit = std::max(unit, std::abs(r - 1.0));
  report.add(tagged(make_record("lz01_unit", "LZ01", unit, tol, params), data));
  return report;
}

cplx build_F(cplx lambda0, const SpectralData& data, const ModelParams& p) {
  require_zeros(p);
  return build_F_with(lambda0, data.zeros, p);
}

ZFPolynomials fit_zf(const SpectralData& data, const ModelParams& p) {
  require_zeros(p);
  return fit_zf_with(data.zeros, p);
}

CheckReport check_zero_coincidence(const SpectralData& data, const ModelParams& p, double tol) {
  const ZFPolynomials zf = fit_zf(data, p);
  const auto rz = poly_roots(zf.z);
  const auto rf = poly_roots(zf.f);
  if (rz.size() != rf.size()) {
    throw Error(ErrorCode::ReconstructionFailure, "Z and F have different numbers of zeros");
  }

  std::vector<std::size_t> perm(rf.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best_cost = std::numeric_limits<double>::infinity();
  double best_max = 0.0;
  do {
    double cost = 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < rz.size(); ++i) {
      const double d = std::abs(std::log(rz[i] / rf[perm[i]]));
      cost += d;
      worst = std::max(worst, d);
    }
    if (cost < best_cost) {
      best_cost = cost;
      best_max = worst;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  const std::string params = describe(data, p);
  const std::string anchor = p.L % 2 == 0 ? "BAeven" : "BAodd";
  CheckReport report;
  report.add(tagged(make_record("zero_coincidence", anchor, best_max, tol, params), data));
  report.add(tagged(make_record("z_polynomial_fit", anchor, zf.z_fit_residual, 1e-8, params), data));
  report.add(tagged(make_record("f_polynomial_fit", "FF", zf.f_fit_residual, 1e-8, params), data));
  return report;
}

std::vector<cplx> wronskian_coeffs(const SpectralData& data, const ModelParams& p) {
  return wronskian_from(fit_zf(data, p), p.L);
}

CheckReport check_wronskian(const SpectralData& data, const ModelParams& p, double tol, double shift,
                            double sharp_threshold) {
  const std::string params = describe(data, p);
  auto largest = [](const std::vector<cplx>& c) {
    double m = 0.0;
    for (const cplx x : c) m = std::max(m, std::abs(x));
    return m;
  };
  CheckReport report;
  report.add(tagged(make_record("wronskian_vanishes", "CK", largest(wronskian_coeffs(data, p)), tol, params), data));

  double weakest = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < data.zeros.size(); ++j) {
    std::vector<cplx> moved = data.zeros;
    moved[j] += shift;
    weakest = std::min(weakest, largest(wronskian_from(fit_zf_with(moved, p), p.L)));
  }
  report.add(tagged(make_record("wronskian_sharpness", "CK", sharp_threshold / std::max(weakest, 1e-300), 1.0,
                                params),
                    data));
  return report;
}

CheckReport check_branch_shift(const SpectralData& data, std::span<const cplx> lambda0s, const ModelParams& p,
                               double tol) {
  require_zeros(p);
  const cplx k0 = require_k0(data);
  SpectralData shifted = data;
  for (cplx& w : shifted.zeros) w += cplx{0.0, std::numbers::pi};

  double worst = 0.0;
  for (const cplx l0 : lambda0s) {
    const cplx a = ratio_with(data.zeros, k0, l0, data.state, p);
    const cplx b = ratio_with(shifted.zeros, k0, l0, data.state, p);
    worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), std::numeric_limits<double>::min()));
    const cplx pa = product_form(data, l0);
    const cplx pb = product_form(shifted, l0);
    worst = std::max(worst, std::abs(pa - pb) / std::max(std::abs(pa), std::numeric_limits<double>::min()));
  }
  CheckReport report;
  report.add(tagged(make_record("branch_shift", "wj", worst, tol, describe(data, p)), data));
  return report;
}

}  // namespace sixv
