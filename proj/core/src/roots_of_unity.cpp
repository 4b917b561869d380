#include "sixv/roots_of_unity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "sixv/error.hpp"
#include "sixv/functional.hpp"
#include "sixv/vertex_core.hpp"

namespace sixv {

namespace {

// prod_k sinh(x - mu_k + s)
cplx sprod(cplx x, cplx s, const ModelParams& p) {
  cplx r = 1.0;
  for (const cplx m : p.mu) r *= std::sinh(x - m + s);
  return r;
}

std::string describe(const RootOfUnitySpec& spec, const ModelParams& p) {
  std::string s = "L=" + std::to_string(p.L) + " k=" + std::to_string(spec.k) + " l=" + std::to_string(spec.l);
  char buf[64];
  for (const cplx m : p.mu) {
    std::snprintf(buf, sizeof buf, " mu=%.17g,%.17g", m.real(), m.imag());
    s += buf;
  }
  return s;
}

std::string describe(const SpectralData& data, const RootOfUnitySpec& spec, const ModelParams& p) {
  return describe(spec, p) + " state=" + std::to_string(data.state.index);
}

void require_l(const RootOfUnitySpec& spec, int l) {
  if (spec.l != l) throw Error(ErrorCode::InvalidArgument, "check requires l = " + std::to_string(l));
}

void require_gamma(const RootOfUnitySpec& spec, const ModelParams& p) {
  if (std::abs(p.gamma - spec.gamma()) > 1e-14) {
    throw Error(ErrorCode::InvalidArgument, "model anisotropy differs from the root of unity");
  }
}

CheckRecord tagged(CheckRecord r, int state) {
  r.eigenstate = state;
  return r;
}

double relative_gap(cplx lhs, cplx rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale > 0 ? std::abs(lhs - rhs) / scale : 0.0;
}

cplx bethe_lhs(cplx w, const ModelParams& p) {
  const cplx g = p.gamma;
  cplx r = 1.0;
  for (const cplx m : p.mu) {
    const cplx den = std::sinh(w - m + 2.0 * g) * std::sinh(w - m);
    if (std::abs(den) < kDefaultEpsGen) throw Error(ErrorCode::PoleEncountered, "zero sits on an inhomogeneity pole");
    r *= std::sinh(w - m + g) * std::sinh(w - m - g) / den;
  }
  return r;
}

std::vector<double> bethe_impl(const SpectralData& data, const ModelParams& p, bool include_self) {
  const cplx g = p.gamma;
  std::vector<double> out;
  for (std::size_t i = 0; i < data.zeros.size(); ++i) {
    const cplx wi = data.zeros[i];
    cplx rhs = -1.0;
    for (std::size_t j = 0; j < data.zeros.size(); ++j) {
      if (j == i && !include_self) continue;
      const cplx den = std::sinh(data.zeros[j] - wi - g);
      if (std::abs(den) < kDefaultEpsGen) throw Error(ErrorCode::PoleEncountered, "zeros differ by gamma");
      rhs *= std::sinh(data.zeros[j] - wi + g) / den;
    }
    out.push_back(relative_gap(bethe_lhs(wi, p), rhs));
  }
  return out;
}

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (const double x : v) m = std::max(m, x);
  return m;
}

// Right-hand sides of the l = 3 relation in explicit form.
cplx rs3_rhs(cplx l, const EigenState& s, const ModelParams& p) {
  const cplx g = p.gamma;
  return -eigenvalue_at(s, l, p) * sprod(l, 0.0, p) * sprod(l, -2.0 * g, p) +
         eigenvalue_at(s, l - g, p) * 2.0 * std::cosh(g) * sprod(l, 0.0, p) * sprod(l, -g, p) -
         eigenvalue_at(s, l - 2.0 * g, p) * sprod(l, g, p) * sprod(l, -g, p);
}

// Coefficient form on arbitrary (l0, l1, l2).
cplx r3_rhs_at(const VarVector& v, const EigenState& s, const ModelParams& p) {
  return eigenvalue_at(s, v[0], p) * (m_coeff(1, v.slice(1, 2), p, 0.0) + n_coeff(2, 1, v, p, 0.0)) +
         eigenvalue_at(s, v[1], p) * m_coeff(2, v, p, 0.0) + eigenvalue_at(s, v[2], p) * m_coeff(1, v, p, 0.0);
}

// Mean of the coefficient form over a small circle in the displacement of
// (l1, l2) along a fixed direction; equals the value at the removable pole.
cplx r3_rhs_regularised(cplx l, const EigenState& s, const ModelParams& p) {
  constexpr int kNodes = 16;
  constexpr double kRadius = 0.05;
  const cplx g = p.gamma;
  cplx sum = 0.0;
  for (int n = 0; n < kNodes; ++n) {
    const cplx eps = std::polar(kRadius, 2.0 * std::numbers::pi * (n + 0.5) / kNodes);
    sum += r3_rhs_at(VarVector{l, l - g + eps, l - 2.0 * g - 0.7 * eps}, s, p);
  }
  return sum / static_cast<double>(kNodes);
}

std::vector<cplx> l4ex_terms(cplx l, const EigenState& s, const ModelParams& p) {
  const cplx g = p.gamma;
  const cplx L0 = eigenvalue_at(s, l, p);
  const cplx L1 = eigenvalue_at(s, l - g, p);
  const cplx L2 = eigenvalue_at(s, l - 2.0 * g, p);
  const cplx L3 = eigenvalue_at(s, l - 3.0 * g, p);
  const cplx r = std::sinh(3.0 * g) / std::sinh(g);
  return {L0 * L1 * L2 * L3,
          -L1 * L2 * r * sprod(l, 0.0, p) * sprod(l, -2.0 * g, p),
          L2 * L3 * sprod(l, g, p) * sprod(l, -g, p),
          L0 * L1 * sprod(l, -g, p) * sprod(l, -3.0 * g, p),
          L0 * L3 * sprod(l, 0.0, p) * sprod(l, -2.0 * g, p),
          -q_function(l, p)};
}

}  // namespace

cplx RootOfUnitySpec::gamma() const { return cplx{0.0, std::numbers::pi * k / l}; }

RootOfUnitySpec make_root_of_unity(int k, int l) {
  if (l < 2) throw Error(ErrorCode::InvalidArgument, "root of unity order must be at least 2");
  if (std::gcd(k, l) != 1) throw Error(ErrorCode::InvalidArgument, "k and l must be coprime");
  return RootOfUnitySpec{k, l};
}

double root_condition_residual(const RootOfUnitySpec& spec) {
  return std::abs(std::exp(2.0 * spec.l * spec.gamma()) - 1.0);
}

CheckReport check_truncation(const RootOfUnitySpec& spec, cplx lambda, const ModelParams& p, double tol) {
  require_gamma(spec, p);
  CMatrix prod = CMatrix::Identity(p.dim(), p.dim());
  double scale = 1.0;
  for (int k = 0; k < spec.l; ++k) {
    const CMatrix b = monodromy(lambda - static_cast<double>(k) * p.gamma, p).b_op;
    prod = prod * b;
    scale *= op_norm(b);
  }
  CheckReport report;
  report.add(make_record("truncation_l" + std::to_string(spec.l), "rou", scale > 0 ? op_norm(prod) / scale : 0.0, tol,
                         describe(spec, p)));
  return report;
}

CheckReport check_inversion_l2(const EigenState& state, const RootOfUnitySpec& spec, const ModelParams& p,
                               Sampler& sampler, int probes, double tol) {
  require_l(spec, 2);
  require_gamma(spec, p);
  const cplx g = p.gamma;
  double eig = 0.0;
  double coeff = 0.0;
  for (int n = 0; n < probes; ++n) {
    const cplx l = sampler.uniform();
    const cplx rhs = sprod(l, 0.0, p) * sprod(l, 0.0, p) - sprod(l, g, p) * sprod(l, -g, p);
    eig = std::max(eig, relative_gap(eigenvalue_at(state, l, p) * eigenvalue_at(state, l - g, p), rhs));
    coeff = std::max(coeff, relative_gap(m_coeff(1, VarVector{l, l - g}, p), rhs));
  }
  CheckReport report;
  report.add(tagged(make_record("inversion_l2", "r2", eig, tol, describe(spec, p)), state.index));
  report.add(tagged(make_record("inversion_l2_coefficient", "r2", coeff, tol, describe(spec, p)), state.index));
  return report;
}

std::vector<double> bethe_residual(const SpectralData& data, const ModelParams& p) {
  return bethe_impl(data, p, true);
}

std::vector<double> bethe_residual_excluding_self(const SpectralData& data, const ModelParams& p) {
  return bethe_impl(data, p, false);
}

CheckReport check_bethe(const SpectralData& data, const RootOfUnitySpec& spec, const ModelParams& p, double tol) {
  require_gamma(spec, p);
  const std::string params = describe(data, spec, p);
  CheckReport report;
  report.add(tagged(make_record("bethe_l" + std::to_string(spec.l), "BAl3", max_of(bethe_residual(data, p)), tol,
                                params, spec.conjectural()),
                    data.state.index));
  if (spec.l == 2) {
    const cplx g = p.gamma;
    double plain = 0.0;
    double coth = 0.0;
    for (const cplx w : data.zeros) {
      const cplx s0 = sprod(w, 0.0, p);
      plain = std::max(plain, relative_gap(sprod(w, g, p) * sprod(w, -g, p) / (s0 * s0), 1.0));
      cplx c = 1.0;
      for (const cplx m : p.mu) c *= std::pow(std::cosh(w - m) / std::sinh(w - m), 2);
      coth = std::max(coth, relative_gap(c, 1.0));
    }
    report.add(tagged(make_record("bethe_l2_product", "BAl2", plain, tol, params), data.state.index));
    report.add(tagged(make_record("bethe_free_fermion", "free", coth, tol, params), data.state.index));
  }
  return report;
}

cplx q_function(cplx l, const ModelParams& p) {
  const cplx g = p.gamma;
  cplx t1 = 1.0, t2 = 1.0, t3 = 1.0;
  for (const cplx m : p.mu) {
    const cplx x = l - m;
    const cplx s0 = std::sinh(x);
    const cplx s2 = std::sinh(x - 2.0 * g);
    const cplx s1 = std::sinh(x - g);
    t1 *= s0 * s0 * s2 * s2;
    t2 *= std::sinh(x + g) * std::sinh(x - 3.0 * g) * s1 * s1;
    t3 *= s0 * s2 * s1 * s1;
  }
  return std::sinh(3.0 * g) / std::sinh(g) * t1 - t2 - 2.0 * std::cosh(2.0 * g) * t3;
}

CheckReport check_l4_relation(const SpectralData& data, const RootOfUnitySpec& spec, const ModelParams& p,
                              Sampler& sampler, int probes, double tol) {
  require_l(spec, 4);
  require_gamma(spec, p);
  const cplx g = p.gamma;
  const std::string params = describe(data, spec, p);
  double rel = 0.0;
  double periodic = 0.0;
  double signed_periodic = 0.0;
  const double sign = p.L % 2 == 1 ? 1.0 : -1.0;
  for (int n = 0; n < probes; ++n) {
    const cplx l = sampler.uniform();
    rel = std::max(rel, relative_residual(l4ex_terms(l, data.state, p)));
    const cplx q0 = q_function(l, p);
    const cplx q1 = q_function(l + g, p);
    periodic = std::max(periodic, std::abs(q1 - q0) / std::abs(q0));
    signed_periodic = std::max(signed_periodic, std::abs(q1 - sign * q0) / std::abs(q0));
  }
  double ba4 = 0.0;
  for (const cplx w : data.zeros) {
    const cplx rhs = -eigenvalue_at(data.state, w - g, p) / eigenvalue_at(data.state, w + g, p);
    ba4 = std::max(ba4, relative_gap(bethe_lhs(w, p), rhs));
  }
  CheckReport report;
  const int s = data.state.index;
  report.add(tagged(make_record("l4_relation", "l4ex", rel, tol, params), s));
  report.add(tagged(make_record("q_periodicity", "QQ", periodic, 1e-9, params), s));
  report.add(tagged(make_record("q_signed_periodicity", "QQ", signed_periodic, 1e-9, params), s));
  report.add(tagged(make_record("bethe_l4_ratio", "BAl4", ba4, 1e-6, params), s));
  return report;
}

CheckReport check_l3_relation(const SpectralData& data, const RootOfUnitySpec& spec, const ModelParams& p,
                              Sampler& sampler, int probes, double tol) {
  require_l(spec, 3);
  require_gamma(spec, p);
  const cplx g = p.gamma;
  const EigenState& st = data.state;
  const std::string params = describe(data, spec, p);
  double rel = 0.0;
  double agree = 0.0;
  for (int n = 0; n < probes; ++n) {
    const cplx l = sampler.uniform();
    const cplx lhs = eigenvalue_at(st, l, p) * eigenvalue_at(st, l - g, p) * eigenvalue_at(st, l - 2.0 * g, p);
    const cplx rhs = rs3_rhs(l, st, p);
    rel = std::max(rel, relative_gap(lhs, rhs));
    agree = std::max(agree, relative_gap(r3_rhs_regularised(l, st, p), rhs));
  }
  double middle = 0.0;
  for (const cplx w : data.zeros) {
    const cplx l = w + g;
    const cplx mid = eigenvalue_at(st, l - g, p) * 2.0 * std::cosh(g) * sprod(l, 0.0, p) * sprod(l, -g, p);
    const double scale = std::max({std::abs(eigenvalue_at(st, l, p) * sprod(l, 0.0, p) * sprod(l, -2.0 * g, p)),
                                   std::abs(eigenvalue_at(st, l - 2.0 * g, p) * sprod(l, g, p) * sprod(l, -g, p)),
                                   std::abs(mid)});
    middle = std::max(middle, scale > 0 ? std::abs(mid) / scale : 0.0);
  }
  CheckReport report;
  report.add(tagged(make_record("l3_relation", "rs3", rel, tol, params), st.index));
  report.add(tagged(make_record("l3_coefficient_form", "r3", agree, 1e-10, params), st.index));
  report.add(tagged(make_record("l3_middle_term", "rs3", middle, 1e-7, params), st.index));
  return report;
}

CheckReport check_truncated_relation(const EigenState& state, const RootOfUnitySpec& spec, cplx lambda,
                                     const ModelParams& p, double tol) {
  require_gamma(spec, p);
  std::vector<cplx> vars;
  std::vector<cplx> lam;
  for (int j = 0; j < spec.l; ++j) {
    vars.push_back(lambda - static_cast<double>(j) * p.gamma);
    lam.push_back(eigenvalue_at(state, vars.back(), p));
  }
  const auto terms = theorem_terms(VarVector(vars), lam, p);
  CheckReport report;
  report.add(tagged(make_record("truncated_relation_l" + std::to_string(spec.l), "lgen", relative_residual(terms),
                                tol, describe(spec, p)),
                    state.index));
  return report;
}

}  // namespace sixv
