#include "sixv/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include "sixv/dwbc.hpp"
#include "sixv/error.hpp"
#include "sixv/functional.hpp"
#include "sixv/spectrum.hpp"
#include "sixv/vertex_core.hpp"
#include "sixv/zeros.hpp"

#ifndef SIXV_VERSION
#define SIXV_VERSION "0.0.0"
#endif

namespace sixv {

namespace {

constexpr std::pair<Suite, std::string_view> kSuiteNames[] = {
    {Suite::Structural, "structural"}, {Suite::Dwbc, "dwbc"},   {Suite::Functional, "functional"},
    {Suite::Theorem, "theorem"},       {Suite::Zeros, "zeros"}, {Suite::Rou, "rou"},
};

std::string fmt_c(cplx z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g", z.real(), z.imag());
  return buf;
}

std::string model_text(const ModelParams& p) {
  std::string s = "L=" + std::to_string(p.L) + " gamma=" + fmt_c(p.gamma);
  for (const cplx m : p.mu) s += " mu=" + fmt_c(m);
  return s;
}

CheckRecord error_record(std::string_view scope, const std::exception& e, const std::string& params,
                         std::optional<int> state = std::nullopt) {
  std::string name = std::string(scope) + "_error";
  if (const auto* err = dynamic_cast<const Error*>(&e)) name += ":" + std::string(to_string(err->code()));
  CheckRecord r = make_record(name, "none", std::numeric_limits<double>::quiet_NaN(), 0.0, params + " what=" + e.what());
  r.eigenstate = state;
  return r;
}

// Runs `body`, turning any exception into a failed record.
void guarded(CheckReport& report, std::string_view scope, const std::string& params,
             const std::function<void()>& body, std::optional<int> state = std::nullopt) {
  try {
    body();
  } catch (const std::exception& e) {
    report.add(error_record(scope, e, params, state));
  }
}

class SuiteRunner {
 public:
  SuiteRunner(const RunConfig& cfg, ModelParams p) : cfg_(cfg), p_(std::move(p)), sampler_(cfg.seed ^ 0x9e3779b97f4a7c15ULL) {}

  RunResult execute() {
    for (const Suite s : all_suites()) {
      if (std::find(cfg_.suites.begin(), cfg_.suites.end(), s) == cfg_.suites.end()) continue;
      switch (s) {
        case Suite::Structural: structural(); break;
        case Suite::Dwbc: dwbc(); break;
        case Suite::Functional: functional(); break;
        case Suite::Theorem: theorem(); break;
        case Suite::Zeros: zeros(); break;
        case Suite::Rou: rou(); break;
      }
    }
    apply_tolerance_overrides(result_.report, cfg_.tol_overrides);
    result_.exit_code = result_.report.passed() ? 0 : 1;
    return std::move(result_);
  }

 private:
  void add(CheckRecord r) { result_.report.add(std::move(r)); }
  void add(const CheckReport& r) { result_.report.append(r); }
  CheckReport& report() { return result_.report; }

  const TransferSpectrum& spectrum() {
    if (!spectrum_) spectrum_.emplace(p_, sampler_);
    return *spectrum_;
  }

  std::vector<const EigenState*> states_with_k0(std::string_view scope) {
    std::vector<const EigenState*> out;
    for (const auto& s : spectrum().states()) {
      if (s.has_k0()) {
        out.push_back(&s);
      } else {
        result_.notes.push_back(std::string(scope) + ": state " + std::to_string(s.index) +
                                " excluded (vanishing overlap with |0>, k0 undefined)");
      }
    }
    return out;
  }

  void structural() {
    const std::string mt = model_text(p_);
    const bool homogeneous =
        std::all_of(p_.mu.begin(), p_.mu.end(), [](cplx m) { return m == cplx{0.0}; }) && p_.L >= 2;
    for (int d = 0; d < cfg_.draws; ++d) {
      guarded(report(), "structural", mt, [&] {
        const auto pt = sampler_.point(2, p_);
        const std::string params = mt + " l1=" + fmt_c(pt[0]) + " l2=" + fmt_c(pt[1]);
        add(make_record("yang_baxter", "yba", ybe_residual(pt[0], pt[1], p_.gamma), 1e-12, params));
        add(make_record("twist_symmetry", "tmat", twist_symmetry_residual(pt[0], p_.gamma), 1e-12, params));
        add(make_record("unitarity", "rmat", unitarity_residual(pt[0], p_.gamma), 1e-12, params));
        add(make_record("rll", "yba", rll_residual(pt[0], pt[1], p_), 1e-9, params));
        add(make_record("commuting_transfer", "tmat", commuting_residual(pt[0], pt[1], p_), 1e-9, params));
        add(make_record("commuting_b", "abcd", b_commuting_residual(pt[0], pt[1], p_), 1e-9, params));
        add(make_record("transfer_blocks", "tmat", transfer_block_residual(pt[0], p_), 1e-12, params));
        add(make_record("action", "action", action_residual(pt[0], p_), 1e-9, params));
        if (homogeneous) {
          add(make_record("hamiltonian_commutes", "ham", hamiltonian_commutator_residual(pt[0], p_), 1e-9, params));
        }
      });
    }
    if (homogeneous) {
      guarded(report(), "structural", mt, [&] {
        add(make_record("log_derivative", "ham", fit_log_derivative(p_).residual, 1e-6, mt));
      });
    }
  }

  void dwbc() {
    const std::string mt = model_text(p_);
    const bool distinct_mu = is_generic(p_);
    if (!distinct_mu) result_.notes.push_back("dwbc: determinant comparison skipped, inhomogeneities coincide");
    for (int d = 0; d < cfg_.draws; ++d) {
      guarded(report(), "dwbc", mt, [&] {
        const SpectralPoint pt{sampler_.point(p_.L + 1, p_)};
        const SpectralPoint head{std::vector<cplx>(pt.lambdas.begin(), pt.lambdas.end() - 1)};
        std::string params = mt;
        for (const cplx l : head.lambdas) params += " l=" + fmt_c(l);
        if (distinct_mu) {
          const cplx zb = z_bproduct(head, p_);
          const cplx zi = z_izergin(head, p_);
          const double scale = std::max(std::abs(zb), std::abs(zi));
          add(make_record("izergin_agreement", "pf", scale > 0 ? std::abs(zb - zi) / scale : 0.0, 1e-9, params));
        }
        const std::vector<cplx> extra{pt.lambdas.back()};
        add(check_highest_weight(head, p_, extra));
      });
    }
  }

  void functional() {
    const std::string mt = model_text(p_);
    for (int d = 0; d < cfg_.draws; ++d) {
      guarded(report(), "functional", mt, [&] {
        const VarVector vars(sampler_.point(p_.L + 2, p_));
        for (int n = 0; n <= p_.L + 1; ++n) add(check_tphi(vars.slice(0, n), p_));
        if (p_.L >= 2 && p_.L <= 4) add(check_appendix(vars.slice(0, p_.L - 1), p_));
      });
    }
    guarded(report(), "functional", mt, [&] {
      const auto states = states_with_k0("functional");
      const VarVector vars(sampler_.point(p_.L + 2, p_));
      for (const EigenState* s : states) {
        guarded(report(), "functional", mt, [&] {
          for (int n = 0; n <= p_.L + 1; ++n) add(check_fl(n, *s, vars.slice(0, n), p_));
          if (p_.L == 2 || p_.L == 3) add(check_small_systems(*s, vars, p_));
        }, s->index);
      }
    });
  }

  void theorem() {
    const std::string mt = model_text(p_);
    guarded(report(), "theorem", mt, [&] {
      const auto states = states_with_k0("theorem");
      for (int d = 0; d < cfg_.draws; ++d) {
        const VarVector vars(sampler_.point(p_.L, p_));
        for (const EigenState* s : states) {
          guarded(report(), "theorem", mt, [&] { add(check_theorem(*s, vars, p_)); }, s->index);
        }
      }
      if (p_.L == 2) {
        for (const EigenState* s : states) {
          guarded(report(), "theorem", mt, [&] { add(check_k0_closed_form(*s, p_)); }, s->index);
        }
      }
    });
  }

  void zeros() {
    const std::string mt = model_text(p_);
    if (p_.L < 2) {
      result_.notes.push_back("zeros: skipped, L = 1 has no zeros");
      return;
    }
    guarded(report(), "zeros", mt, [&] {
      const auto states = states_with_k0("zeros");
      bool branch_done = false;
      for (const EigenState* s : states) {
        guarded(report(), "zeros", mt, [&] {
          const SpectralData data = extract_zeros(*s, p_, sampler_);
          add(check_zero_values(data, p_));
          const auto l0s = sampler_.point(std::max(5, cfg_.draws), p_, data.zeros);
          add(check_lz01(data, l0s, p_));
          add(check_zero_coincidence(data, p_));
          add(check_wronskian(data, p_));
          if (!branch_done) {
            add(check_branch_shift(data, l0s, p_));
            branch_done = true;
          }
        }, s->index);
      }
    });
  }

  void rou() {
    const std::string mt = model_text(p_);
    const RootOfUnitySpec spec = *cfg_.root;
    for (int d = 0; d < cfg_.draws; ++d) {
      guarded(report(), "rou", mt, [&] { add(check_truncation(spec, sampler_.point(1, p_)[0], p_)); });
    }
    guarded(report(), "rou", mt, [&] {
      const cplx lam = sampler_.point(1, p_)[0];
      for (const auto& s : spectrum().states()) {
        guarded(report(), "rou", mt, [&] {
          add(check_truncated_relation(s, spec, lam, p_));
          if (spec.l == 2) add(check_inversion_l2(s, spec, p_, sampler_));
          if (p_.L < 2) return;
          const SpectralData data = extract_zeros(s, p_, sampler_);
          add(check_bethe(data, spec, p_));
          if (spec.l == 3) add(check_l3_relation(data, spec, p_, sampler_));
          if (spec.l == 4) add(check_l4_relation(data, spec, p_, sampler_));
        }, s.index);
      }
    });
  }

  const RunConfig& cfg_;
  ModelParams p_;
  Sampler sampler_;
  std::optional<TransferSpectrum> spectrum_;
  RunResult result_;
};

}  // namespace

std::string_view to_string(Suite s) {
  for (const auto& [suite, name] : kSuiteNames) {
    if (suite == s) return name;
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  for (const auto& [suite, n] : kSuiteNames) {
    if (n == name) return suite;
  }
  throw Error(ErrorCode::ConfigError, "unknown suite '" + std::string(name) + "'");
}

std::vector<Suite> all_suites() {
  std::vector<Suite> out;
  for (const auto& entry : kSuiteNames) out.push_back(entry.first);
  return out;
}

std::vector<Suite> default_suites(bool with_root) {
  std::vector<Suite> out = all_suites();
  if (!with_root) std::erase(out, Suite::Rou);
  return out;
}

void validate_config(const RunConfig& cfg) {
  if (cfg.L < 1 || cfg.L > 8) throw Error(ErrorCode::ConfigError, "size must lie in [1, 8]");
  if (cfg.draws < 1) throw Error(ErrorCode::ConfigError, "draws must be positive");
  if (cfg.suites.empty()) throw Error(ErrorCode::ConfigError, "no suite selected");
  if (cfg.root) {
    try {
      make_root_of_unity(cfg.root->k, cfg.root->l);
    } catch (const Error& e) {
      throw Error(ErrorCode::ConfigError, e.what());
    }
  } else {
    if (!std::isfinite(cfg.gamma.real()) || !std::isfinite(cfg.gamma.imag())) {
      throw Error(ErrorCode::ConfigError, "gamma must be finite");
    }
    if (std::abs(std::sinh(cfg.gamma)) < kDefaultEpsGen) throw Error(ErrorCode::ConfigError, "sinh(gamma) vanishes");
    if (std::find(cfg.suites.begin(), cfg.suites.end(), Suite::Rou) != cfg.suites.end()) {
      throw Error(ErrorCode::ConfigError, "the rou suite needs --root-of-unity");
    }
  }
  if (cfg.mu_mode == MuMode::Explicit && static_cast<int>(cfg.mu_values.size()) != cfg.L) {
    throw Error(ErrorCode::ConfigError, "explicit inhomogeneities must have exactly L entries");
  }
  for (const auto& [name, tol] : cfg.tol_overrides) {
    if (!(tol > 0.0)) throw Error(ErrorCode::ConfigError, "tolerance for '" + name + "' must be positive");
  }
}

std::string config_text(const RunConfig& cfg) {
  std::ostringstream os;
  os << "L=" << cfg.L;
  if (cfg.root) {
    os << ";root=" << cfg.root->k << "/" << cfg.root->l;
  } else {
    os << ";gamma=" << fmt_c(cfg.gamma);
  }
  os << ";mu=";
  switch (cfg.mu_mode) {
    case MuMode::Zero: os << "zero"; break;
    case MuMode::Random: os << "random"; break;
    case MuMode::Explicit:
      for (const cplx m : cfg.mu_values) os << fmt_c(m) << "|";
      break;
  }
  os << ";seed=" << cfg.seed << ";suites=";
  for (const Suite s : cfg.suites) os << to_string(s) << ",";
  os << ";draws=" << cfg.draws << ";tol=";
  for (const auto& [name, tol] : cfg.tol_overrides) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", tol);
    os << name << ":" << buf << ",";
  }
  return os.str();
}

ModelParams sample_params(const RunConfig& cfg) {
  validate_config(cfg);
  const cplx gamma = cfg.root ? cfg.root->gamma() : cfg.gamma;
  Sampler sampler(cfg.seed);
  switch (cfg.mu_mode) {
    case MuMode::Random: return sampler.model(cfg.L, gamma);
    case MuMode::Zero: return ModelParams{cfg.L, gamma, std::vector<cplx>(static_cast<std::size_t>(cfg.L)), cfg.seed};
    case MuMode::Explicit: {
      ModelParams p{cfg.L, gamma, cfg.mu_values, cfg.seed};
      if (!is_generic(p)) throw Error(ErrorCode::ConfigError, "explicit inhomogeneities are not generic");
      return p;
    }
  }
  throw Error(ErrorCode::ConfigError, "unknown inhomogeneity mode");
}

void apply_tolerance_overrides(CheckReport& report, const std::map<std::string, double>& overrides) {
  for (auto& r : report.records) {
    for (const auto& [key, tol] : overrides) {
      const bool prefix = !key.empty() && key.back() == '*';
      const bool hit = prefix ? r.name.starts_with(key.substr(0, key.size() - 1)) : r.name == key;
      if (!hit) continue;
      r.tolerance = tol;
      if (r.verdict != Verdict::ConjectureEvidence) r.verdict = r.residual < tol ? Verdict::Pass : Verdict::Fail;
    }
  }
}

RunResult run(const RunConfig& cfg) {
  const ModelParams p = sample_params(cfg);
  return SuiteRunner(cfg, p).execute();
}

std::string render_report(const RunConfig& cfg, const RunResult& result) {
  std::string out = "# sixv-verify version=" + std::string(version()) + " config_digest=" + hex_digest(config_text(cfg)) + "\n";
  for (const auto& note : result.notes) out += "# note: " + note + "\n";
  for (const auto& r : result.report.records) out += format_record(r) + "\n";
  return out;
}

std::string_view version() { return SIXV_VERSION; }

}  // namespace sixv
