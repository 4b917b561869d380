#pragma once

// Coefficients of the functional hierarchy obeyed by the scalar products
// F_n = <Psi| B(l_1)...B(l_n) |0>, and the relation expressing the DWBC
// partition function through the transfer matrix eigenvalues.

#include <span>
#include <vector>

#include "sixv/numkit.hpp"
#include "sixv/params.hpp"
#include "sixv/report.hpp"
#include "sixv/spectrum.hpp"

namespace sixv {

/// Ordered spectral variables (lambda_0, lambda_1, ...). Order matters: the
/// coefficient functions below are not symmetric in their arguments.
class VarVector {
 public:
  VarVector() = default;
  explicit VarVector(std::vector<cplx> values) : values_(std::move(values)) {}
  VarVector(std::initializer_list<cplx> values) : values_(values) {}

  std::size_t size() const { return values_.size(); }
  /// n for a vector lambda_0..lambda_n.
  int order() const { return static_cast<int>(values_.size()) - 1; }
  cplx operator[](int k) const { return values_.at(static_cast<std::size_t>(k)); }
  std::span<const cplx> values() const { return values_; }

  /// (lambda_i, ..., lambda_j), inclusive.
  VarVector slice(int i, int j) const;
  /// Drops the entries at the given positions.
  VarVector without(std::initializer_list<int> positions) const;
  VarVector without(std::span<const int> positions) const;

 private:
  std::vector<cplx> values_;
};

/// prod_k a(x - mu_k) and prod_k b(x - mu_k).
cplx site_product_a(cplx x, const ModelParams& p);
cplx site_product_b(cplx x, const ModelParams& p);

/// Gamma^i_{j,k}: c(l_k - l_j)/b(l_k - l_j) times the product over
/// lambda in X^{1,n} \ {lambda_i} of a(l_k - l)/b(l_k - l) * a(l - l_j)/b(l - l_j).
cplx gamma_coeff(int i, int j, int k, const VarVector& vars, const ModelParams& p,
                 double eps = kDefaultEpsGen);

/// Omega_{i,j}, with its product over X^{0,n} \ {lambda_i, lambda_j}.
cplx omega_coeff(int i, int j, const VarVector& vars, const ModelParams& p,
                 double eps = kDefaultEpsGen);

/// M_i^{(n)}(vars) with n = vars.order().
cplx m_coeff(int i, const VarVector& vars, const ModelParams& p, double eps = kDefaultEpsGen);

/// N_{j,i}^{(n)}(vars) with n = vars.order().
cplx n_coeff(int j, int i, const VarVector& vars, const ModelParams& p, double eps = kDefaultEpsGen);

/// V^{(2m)}_{i_2m,...,i_1}(vars) for ascending indices i_1 < ... < i_2m
/// drawn from 0..vars.size()-1. The empty index set gives 1.
cplx v_coeff(std::span<const int> indices, const VarVector& vars, const ModelParams& p,
             double eps = kDefaultEpsGen);

/// Even floor: [x] = x for even x, x - 1 for odd x.
inline int even_floor(int x) { return x - (x % 2); }

/// All terms V^{(2m)} * prod_{k not in I} Lambda_k of the eigenvalue side of
/// the partition-function relation, for vars.size() variables.
std::vector<cplx> theorem_terms(const VarVector& vars, std::span<const cplx> lambda_values,
                                const ModelParams& p, double eps = kDefaultEpsGen);

/// Sum of theorem_terms.
cplx theorem_rhs(const VarVector& vars, std::span<const cplx> lambda_values, const ModelParams& p,
                 double eps = kDefaultEpsGen);

/// F_n(l_1..l_n) = <Psi_left| B(l_1)...B(l_n) |0>; F_0 = <Psi_left|0>.
cplx f_n(std::span<const cplx> lambdas, const EigenState& state, const ModelParams& p);

/// Operator relation for T(l_0)[X^{1,n}], n = vars.order(). Emits two records:
/// "tphi" applied to the highest-weight vector |0>, where the terms dropped
/// by normal ordering vanish, and "tphi_full_operator" on the whole space.
CheckReport check_tphi(const VarVector& vars, const ModelParams& p, double tol = 1e-9);

/// One level n of the functional hierarchy (vars = lambda_0..lambda_n).
/// F terms outside [0, L] are replaced by 0.
CheckReport check_fl(int n, const EigenState& state, const VarVector& vars, const ModelParams& p,
                     double tol = 1e-8);

/// The explicit systems written out for L = 2 and L = 3, with F_L replaced by
/// Z * F0bar, followed by the two eliminated relations between Lambda, Z, k0.
/// vars must hold lambda_0..lambda_{L+1}.
CheckReport check_small_systems(const EigenState& state, const VarVector& vars, const ModelParams& p,
                                double tol = 1e-8);

/// Z(X^{0,L-1}) k0 against the eigenvalue expansion, vars = lambda_0..lambda_{L-1}.
/// Throws K0Undefined when the state has no k0.
CheckReport check_theorem(const EigenState& state, const VarVector& vars, const ModelParams& p,
                          double tol = 1e-8);

/// L = 2 only: k0 = Lambda(mu_1)Lambda(mu_2) / (c^2 a(mu_1 - mu_2) a(mu_2 - mu_1)).
CheckReport check_k0_closed_form(const EigenState& state, const ModelParams& p, double tol = 1e-8);

/// V/M/N identities for L = 2, 3 and 4 (the L = 4 quartic identity uses the
/// X^{0,3}_{1,3} argument for its N_{3,1} term).
CheckReport check_appendix(const VarVector& vars, const ModelParams& p, double tol = 1e-9);

/// Largest-term relative residual |sum terms| / max |term|.
double relative_residual(std::span<const cplx> terms);

}  // namespace sixv
