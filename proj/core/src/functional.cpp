#include "sixv/functional.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "sixv/dwbc.hpp"
#include "sixv/error.hpp"
#include "sixv/vertex_core.hpp"

namespace sixv {

namespace {

cplx checked_b(cplx x, double eps) {
  const cplx b = weight_b(x);
  if (std::abs(b) < eps) throw Error(ErrorCode::PoleEncountered, "b(x) vanishes in a coefficient denominator");
  return b;
}

cplx checked_a(cplx x, cplx gamma, double eps) {
  const cplx a = weight_a(x, gamma);
  if (std::abs(a) < eps) throw Error(ErrorCode::PoleEncountered, "a(x) vanishes in a coefficient denominator");
  return a;
}

// a(x)/b(x)
cplx ab_ratio(cplx x, cplx gamma, double eps) { return weight_a(x, gamma) / checked_b(x, eps); }

std::string describe(const VarVector& vars, const ModelParams& p) {
  std::string s = "L=" + std::to_string(p.L);
  char buf[64];
  std::snprintf(buf, sizeof buf, " gamma=%.17g,%.17g", p.gamma.real(), p.gamma.imag());
  s += buf;
  s += " mu=";
  for (const cplx m : p.mu) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g;", m.real(), m.imag());
    s += buf;
  }
  s += " vars=";
  for (const cplx v : vars.values()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g;", v.real(), v.imag());
    s += buf;
  }
  return s;
}

// F over the given arguments, zero outside [0, L].
cplx f_or_zero(const VarVector& args, const EigenState& state, const ModelParams& p) {
  if (static_cast<int>(args.size()) > p.L) return 0.0;
  return f_n(args.values(), state, p);
}


}  // namespace

VarVector VarVector::slice(int i, int j) const {
  std::vector<cplx> out;
  for (int k = i; k <= j; ++k) out.push_back((*this)[k]);
  return VarVector(std::move(out));
}

VarVector VarVector::without(std::initializer_list<int> positions) const {
  return without(std::span<const int>(positions.begin(), positions.size()));
}

VarVector VarVector::without(std::span<const int> positions) const {
  std::vector<cplx> out;
  for (int k = 0; k < static_cast<int>(values_.size()); ++k) {
    if (std::find(positions.begin(), positions.end(), k) == positions.end()) out.push_back(values_[k]);
  }
  return VarVector(std::move(out));
}

cplx site_product_a(cplx x, const ModelParams& p) {
  cplx r = 1.0;
  for (const cplx m : p.mu) r *= weight_a(x - m, p.gamma);
  return r;
}

cplx site_product_b(cplx x, const ModelParams& p) {
  cplx r = 1.0;
  for (const cplx m : p.mu) r *= weight_b(x - m);
  return r;
}

cplx gamma_coeff(int i, int j, int k, const VarVector& vars, const ModelParams& p, double eps) {
  const cplx g = p.gamma;
  const cplx lk = vars[k];
  const cplx lj = vars[j];
  cplx r = weight_c(g) / checked_b(lk - lj, eps);
  for (int m = 1; m <= vars.order(); ++m) {
    if (m == i) continue;
    const cplx x = vars[m];
    r *= ab_ratio(lk - x, g, eps) * ab_ratio(x - lj, g, eps);
  }
  return r;
}

cplx omega_coeff(int i, int j, const VarVector& vars, const ModelParams& p, double eps) {
  const cplx g = p.gamma;
  const cplx c = weight_c(g);
  const cplx l0 = vars[0];
  const cplx li = vars[i];
  const cplx lj = vars[j];
  cplx r = c / checked_a(lj - l0, g, eps) * c / checked_a(l0 - li, g, eps) * ab_ratio(lj - li, g, eps);
  for (int m = 0; m <= vars.order(); ++m) {
    if (m == i || m == j) continue;
    const cplx x = vars[m];
    r *= ab_ratio(lj - x, g, eps) * ab_ratio(x - li, g, eps);
  }
  return r;
}

cplx m_coeff(int i, const VarVector& vars, const ModelParams& p, double eps) {
  const cplx l0 = vars[0];
  const cplx li = vars[i];
  return gamma_coeff(i, 0, i, vars, p, eps) * site_product_a(l0, p) * site_product_b(li, p) +
         gamma_coeff(i, i, 0, vars, p, eps) * site_product_a(li, p) * site_product_b(l0, p);
}

cplx n_coeff(int j, int i, const VarVector& vars, const ModelParams& p, double eps) {
  const cplx li = vars[i];
  const cplx lj = vars[j];
  return omega_coeff(i, j, vars, p, eps) * site_product_a(li, p) * site_product_b(lj, p) +
         omega_coeff(j, i, vars, p, eps) * site_product_a(lj, p) * site_product_b(li, p);
}

cplx v_coeff(std::span<const int> indices, const VarVector& vars, const ModelParams& p, double eps) {
  const int two_m = static_cast<int>(indices.size());
  if (two_m % 2 != 0) throw Error(ErrorCode::InvalidArgument, "V needs an even number of indices");
  if (!std::is_sorted(indices.begin(), indices.end())) {
    throw Error(ErrorCode::InvalidArgument, "V indices must be ascending");
  }
  const int m = two_m / 2;
  if (m == 0) return 1.0;

  const cplx g = p.gamma;
  const cplx c = weight_c(g);
  std::vector<cplx> rest;
  for (int k = 0; k < static_cast<int>(vars.size()); ++k) {
    if (std::find(indices.begin(), indices.end(), k) == indices.end()) rest.push_back(vars[k]);
  }

  // Subsets J of size m enumerated by a selection mask over `indices`.
  std::vector<bool> pick(static_cast<std::size_t>(two_m), false);
  std::fill(pick.begin(), pick.begin() + m, true);
  cplx total = 0.0;
  do {
    std::vector<cplx> jv;
    std::vector<int> korder;
    for (int t = 0; t < two_m; ++t) {
      if (pick[t]) {
        jv.push_back(vars[indices[t]]);
      } else {
        korder.push_back(indices[t]);
      }
    }

    cplx pj = 1.0;
    for (const cplx lj : jv) {
      pj *= site_product_a(lj, p);
      for (const cplx x : rest) pj *= ab_ratio(x - lj, g, eps);
    }

    do {
      std::vector<cplx> kv;
      for (const int k : korder) kv.push_back(vars[k]);
      cplx pk = 1.0;
      for (int l = 0; l < m; ++l) {
        pk *= site_product_b(kv[l], p) * c / checked_b(jv[l] - kv[l], eps);
        for (const cplx x : rest) pk *= ab_ratio(kv[l] - x, g, eps);
      }
      for (int r = 0; r < m; ++r) {
        for (int s = r + 1; s < m; ++s) {
          pk *= ab_ratio(kv[r] - kv[s], g, eps) * ab_ratio(kv[r] - jv[s], g, eps) *
                std::sinh(kv[s] - jv[r] + 2.0 * g) / checked_b(kv[s] - jv[r], eps);
        }
      }
      total += pj * pk;
    } while (std::next_permutation(korder.begin(), korder.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

std::vector<cplx> theorem_terms(const VarVector& vars, std::span<const cplx> lambda_values,
                                const ModelParams& p, double eps) {
  const int n = static_cast<int>(vars.size());
  if (static_cast<int>(lambda_values.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "one eigenvalue per variable is required");
  }
  std::vector<cplx> terms;
  for (int two_m = 0; two_m <= even_floor(n); two_m += 2) {
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + two_m, true);
    do {
      std::vector<int> idx;
      cplx lam_prod = 1.0;
      for (int k = 0; k < n; ++k) {
        if (pick[k]) {
          idx.push_back(k);
        } else {
          lam_prod *= lambda_values[k];
        }
      }
      terms.push_back(v_coeff(idx, vars, p, eps) * lam_prod);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return terms;
}

cplx theorem_rhs(const VarVector& vars, std::span<const cplx> lambda_values, const ModelParams& p,
                 double eps) {
  const auto terms = theorem_terms(vars, lambda_values, p, eps);
  return std::accumulate(terms.begin(), terms.end(), cplx{0.0});
}

cplx f_n(std::span<const cplx> lambdas, const EigenState& state, const ModelParams& p) {
  CVector v = highest_weight(p.L);
  for (auto it = lambdas.rbegin(); it != lambdas.rend(); ++it) v = monodromy(*it, p).b_op * v;
  return state.left.transpose() * v;
}

double relative_residual(std::span<const cplx> terms) {
  cplx sum = 0.0;
  double scale = 0.0;
  for (const cplx t : terms) {
    sum += t;
    scale = std::max(scale, std::abs(t));
  }
  if (scale == 0.0) return 0.0;
  return std::abs(sum) / scale;
}

CheckReport check_tphi(const VarVector& vars, const ModelParams& p, double tol) {
  const int n = vars.order();
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "tphi needs at least lambda_0");
  const std::string params = describe(vars, p);
  const auto all = vars.values();

  std::vector<CMatrix> terms;
  const MonodromyBlocks m0 = monodromy(vars[0], p);
  terms.push_back(transfer(vars[0], p) * b_product(all.subspan(1), p));
  terms.push_back(-b_product(all, p));
  for (int i = 1; i <= n; ++i) {
    const MonodromyBlocks mi = monodromy(vars[i], p);
    const VarVector xi = vars.slice(1, n).without({i - 1});
    terms.push_back(-b_product(xi.values(), p) * (gamma_coeff(i, 0, i, vars, p) * m0.a_op * mi.d_op +
                                                gamma_coeff(i, i, 0, vars, p) * mi.a_op * m0.d_op));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const MonodromyBlocks mi = monodromy(vars[i], p);
      const MonodromyBlocks mj = monodromy(vars[j], p);
      const VarVector xij = vars.without({i, j});
      terms.push_back(-b_product(xij.values(), p) * (omega_coeff(i, j, vars, p) * mi.a_op * mj.d_op +
                                                   omega_coeff(j, i, vars, p) * mj.a_op * mi.d_op));
    }
  }

  const CVector e0 = highest_weight(p.L);
  CVector vec_sum = CVector::Zero(p.dim());
  CMatrix op_sum = CMatrix::Zero(p.dim(), p.dim());
  double vec_scale = 0.0;
  double op_scale = 0.0;
  for (const CMatrix& t : terms) {
    const CVector tv = t * e0;
    vec_sum += tv;
    op_sum += t;
    vec_scale = std::max(vec_scale, tv.norm());
    op_scale = std::max(op_scale, op_norm(t));
  }

  CheckReport report;
  report.add(make_record("tphi", "tphi", vec_scale > 0 ? vec_sum.norm() / vec_scale : 0.0, tol, params));
  report.add(make_record("tphi_full_operator", "tphi", op_scale > 0 ? op_norm(op_sum) / op_scale : 0.0,
                         tol, params));
  return report;
}

CheckReport check_fl(int n, const EigenState& state, const VarVector& vars, const ModelParams& p, double tol) {
  if (n < 0 || n > p.L + 1) throw Error(ErrorCode::InvalidArgument, "FL level must lie in [0, L+1]");
  if (vars.order() != n) throw Error(ErrorCode::InvalidArgument, "FL level n needs lambda_0..lambda_n");

  std::vector<cplx> terms;
  const VarVector x1n = vars.slice(1, n);
  terms.push_back(eigenvalue_at(state, vars[0], p) * f_or_zero(x1n, state, p));
  terms.push_back(-f_or_zero(vars, state, p));
  if (n >= 1) {
    for (int i = 1; i <= n; ++i) {
      terms.push_back(-m_coeff(i, vars, p) * f_or_zero(x1n.without({i - 1}), state, p));
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        terms.push_back(-n_coeff(j, i, vars, p) * f_or_zero(vars.without({i, j}), state, p));
      }
    }
  }
  CheckReport report;
  CheckRecord r = make_record("FL_n" + std::to_string(n), "FL", relative_residual(terms), tol, describe(vars, p));
  r.eigenstate = state.index;
  report.add(std::move(r));
  return report;
}

CheckReport check_small_systems(const EigenState& state, const VarVector& vars, const ModelParams& p,
                                double tol) {
  const int L = p.L;
  if (L != 2 && L != 3) throw Error(ErrorCode::InvalidArgument, "explicit systems exist for L = 2, 3 only");
  if (static_cast<int>(vars.size()) != L + 2) {
    throw Error(ErrorCode::InvalidArgument, "explicit systems need lambda_0..lambda_{L+1}");
  }
  const std::string params = describe(vars, p);
  const std::string tag = L == 2 ? "L2" : "L3";
  const cplx f0bar = state.f0bar();

  // F_m with F_L written as Z * F0bar and F_{>L} dropped.
  auto F = [&](const VarVector& args) -> cplx {
    const int m = static_cast<int>(args.size());
    if (m > L) return 0.0;
    if (m == L) return z_partial(args.values(), p) * f0bar;
    return f_n(args.values(), state, p);
  };

  CheckReport report;
  for (int n = 0; n <= L + 1; ++n) {
    const VarVector v = vars.slice(0, n);
    const VarVector x1n = v.slice(1, n);
    std::vector<cplx> terms{eigenvalue_at(state, v[0], p) * F(x1n), -F(v)};
    for (int i = 1; i <= n; ++i) terms.push_back(-m_coeff(i, v, p) * F(x1n.without({i - 1})));
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) terms.push_back(-n_coeff(j, i, v, p) * F(v.without({i, j})));
    }
    CheckRecord r = make_record(tag + "_eq" + std::to_string(n), tag, relative_residual(terms), tol, params);
    r.eigenstate = state.index;
    report.add(std::move(r));
  }

  if (!state.has_k0()) return report;
  const cplx k0 = state.k0();
  std::vector<cplx> lam;
  for (const cplx x : vars.values()) lam.push_back(eigenvalue_at(state, x, p));
  const std::string ltag = L == 2 ? "LL2" : "LL3";

  std::vector<cplx> first;
  std::vector<cplx> second;
  if (L == 2) {
    const VarVector v01 = vars.slice(0, 1);
    const VarVector v02 = vars.slice(0, 2);
    first = {lam[0] * lam[1], -z_partial(v01.values(), p) * k0, -m_coeff(1, v01, p)};
    second = {lam[0] * z_partial(vars.slice(1, 2).values(), p) * k0, -lam[0] * n_coeff(2, 1, v02, p),
              -m_coeff(1, v02, p) * lam[2], -m_coeff(2, v02, p) * lam[1]};
  } else {
    const VarVector v02 = vars.slice(0, 2);
    const VarVector v12 = vars.slice(1, 2);
    first = {lam[0] * lam[1] * lam[2],
             -z_partial(v02.values(), p) * k0,
             -lam[0] * m_coeff(1, v12, p),
             -lam[0] * n_coeff(2, 1, v02, p),
             -lam[1] * m_coeff(2, v02, p),
             -lam[2] * m_coeff(1, v02, p)};
    const VarVector v03 = vars.slice(0, 3);
    const VarVector x13 = vars.slice(1, 3);
    second = {lam[0] * z_partial(x13.values(), p) * k0};
    for (int i = 1; i <= 3; ++i) {
      cplx prod = 1.0;
      for (int k = 1; k <= 3; ++k) {
        if (k != i) prod *= lam[k];
      }
      const cplx mi = m_coeff(i, v03, p);
      second.push_back(-mi * prod);
      second.push_back(mi * m_coeff(1, x13.without({i - 1}), p));
    }
    for (int i = 1; i <= 3; ++i) {
      for (int j = i + 1; j <= 3; ++j) {
        cplx prod = lam[0];
        for (int k = 1; k <= 3; ++k) {
          if (k != i && k != j) prod *= lam[k];
        }
        const cplx nji = n_coeff(j, i, v03, p);
        second.push_back(-nji * prod);
        second.push_back(nji * m_coeff(1, v03.without({i, j}), p));
      }
    }
  }
  CheckRecord r1 = make_record(ltag + "_first", ltag, relative_residual(first), tol, params);
  CheckRecord r2 = make_record(ltag + "_second", ltag, relative_residual(second), tol, params);
  r1.eigenstate = state.index;
  r2.eigenstate = state.index;
  report.add(std::move(r1));
  report.add(std::move(r2));
  return report;
}

CheckReport check_theorem(const EigenState& state, const VarVector& vars, const ModelParams& p, double tol) {
  if (static_cast<int>(vars.size()) != p.L) {
    throw Error(ErrorCode::InvalidArgument, "the relation needs lambda_0..lambda_{L-1}");
  }
  const cplx k0 = state.k0();
  std::vector<cplx> lam;
  for (const cplx x : vars.values()) lam.push_back(eigenvalue_at(state, x, p));
  std::vector<cplx> terms = theorem_terms(vars, lam, p);
  terms.push_back(-z_partial(vars.values(), p) * k0);
  CheckReport report;
  CheckRecord r = make_record("theorem", "Lgen", relative_residual(terms), tol, describe(vars, p));
  r.eigenstate = state.index;
  report.add(std::move(r));
  return report;
}

CheckReport check_k0_closed_form(const EigenState& state, const ModelParams& p, double tol) {
  if (p.L != 2) throw Error(ErrorCode::InvalidArgument, "the closed form for k0 holds at L = 2");
  const cplx k0 = state.k0();
  const cplx m1 = p.mu[0];
  const cplx m2 = p.mu[1];
  const cplx c = weight_c(p.gamma);
  const cplx denom = c * c * weight_a(m1 - m2, p.gamma) * weight_a(m2 - m1, p.gamma);
  if (std::abs(denom) < kDefaultEpsGen) throw Error(ErrorCode::SingularDenominator, "a(mu_1 - mu_2) vanishes");
  const cplx closed = eigenvalue_at(state, m1, p) * eigenvalue_at(state, m2, p) / denom;
  const double scale = std::max(std::abs(k0), std::abs(closed));
  CheckReport report;
  CheckRecord r = make_record("k0_closed_form", "LL2", scale > 0 ? std::abs(k0 - closed) / scale : 0.0, tol,
                              describe(VarVector{}, p));
  r.eigenstate = state.index;
  report.add(std::move(r));
  return report;
}

CheckReport check_appendix(const VarVector& vars, const ModelParams& p, double tol) {
  const int L = p.L;
  if (L < 2 || L > 4) throw Error(ErrorCode::InvalidArgument, "appendix identities exist for L = 2..4");
  if (static_cast<int>(vars.size()) != L) throw Error(ErrorCode::InvalidArgument, "need lambda_0..lambda_{L-1}");
  const std::string params = describe(vars, p);
  CheckReport report;

  auto V = [&](std::initializer_list<int> idx) {
    std::vector<int> v(idx);
    std::sort(v.begin(), v.end());
    return v_coeff(v, vars, p);
  };
  auto add = [&](const std::string& name, const std::string& anchor, std::vector<cplx> terms) {
    report.add(make_record(name, anchor, relative_residual(terms), tol, params));
  };

  if (L == 2) {
    add("V10_L2", "ZB2", {V({1, 0}), m_coeff(1, vars, p)});
    return report;
  }
  if (L == 3) {
    const VarVector x12 = vars.slice(1, 2);
    add("V10", "cnd", {V({1, 0}), m_coeff(1, vars, p)});
    add("V20", "cnd", {V({2, 0}), m_coeff(2, vars, p)});
    add("V21", "cnd", {V({2, 1}), m_coeff(1, x12, p), n_coeff(2, 1, vars, p)});
    return report;
  }

  const VarVector x13 = vars.slice(1, 3);
  const VarVector x23 = vars.slice(2, 3);
  add("V30", "cnd1", {V({3, 0}), m_coeff(3, vars, p)});
  add("V20", "cnd1", {V({2, 0}), m_coeff(2, vars, p)});
  add("V10", "cnd1", {V({1, 0}), m_coeff(1, vars, p)});
  add("V32", "cnd1", {V({3, 2}), m_coeff(1, x23, p), n_coeff(2, 1, x13, p), n_coeff(3, 2, vars, p)});
  add("V31", "cnd1", {V({3, 1}), m_coeff(2, x13, p), n_coeff(3, 1, vars, p)});
  add("V21", "cnd1", {V({2, 1}), m_coeff(1, x13, p), n_coeff(2, 1, vars, p)});

  std::vector<cplx> quartic{V({3, 2, 1, 0})};
  for (int i = 1; i <= 3; ++i) quartic.push_back(-m_coeff(i, vars, p) * m_coeff(1, x13.without({i - 1}), p));
  quartic.push_back(-n_coeff(2, 1, vars, p) * m_coeff(1, vars.without({1, 2}), p));
  quartic.push_back(-n_coeff(3, 1, vars, p) * m_coeff(1, vars.without({1, 3}), p));
  quartic.push_back(-n_coeff(3, 2, vars, p) * m_coeff(1, vars.without({2, 3}), p));
  add("V3210", "cnd2", std::move(quartic));
  return report;
}

}  // namespace sixv
