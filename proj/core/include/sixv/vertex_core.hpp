#pragma once

// Six-vertex weights, R-matrix, twisted monodromy and transfer matrices.
//
// Quantum space ordering: site 1 is the most significant tensor factor, so
// |0> = (1,0)^{(x)L} is basis vector 0 and |0bar> = (0,1)^{(x)L} is the last.
// Auxiliary-space operators are laid out as V_A (x) V_Q.

#include <span>

#include "sixv/numkit.hpp"
#include "sixv/params.hpp"

namespace sixv {

struct Weights {
  cplx a;
  cplx b;
  cplx c;
};

/// a = sinh(lambda + gamma), b = sinh(lambda), c = sinh(gamma).
Weights weights(cplx lambda, cplx gamma);

inline cplx weight_a(cplx x, cplx gamma) { return std::sinh(x + gamma); }
inline cplx weight_b(cplx x) { return std::sinh(x); }
inline cplx weight_c(cplx gamma) { return std::sinh(gamma); }

/// 4x4 R-matrix on V_1 (x) V_2.
CMatrix r_matrix(cplx lambda, cplx gamma);

/// Boundary twist G = sigma^x.
CMatrix twist_matrix();

CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

/// sigma acting on site `site` (1-based) of an L-site chain.
CMatrix site_operator(const CMatrix& sigma, int site, int L);

CVector highest_weight(int L);  // |0>
CVector lowest_weight(int L);   // |0bar>

struct MonodromyBlocks {
  CMatrix a_op;
  CMatrix b_op;
  CMatrix c_op;
  CMatrix d_op;

  /// Full monodromy on V_A (x) V_Q.
  CMatrix assembled() const;
};

/// Ordered product R_{A1}(lambda - mu_1) ... R_{AL}(lambda - mu_L).
MonodromyBlocks monodromy(cplx lambda, const ModelParams& p);

/// Tr_A[G T_A(lambda)], computed as an explicit partial trace.
CMatrix transfer(cplx lambda, const ModelParams& p);

/// Anti-periodic XXZ Hamiltonian; requires L >= 2 and mu = 0.
CMatrix hamiltonian(const ModelParams& p);

/// Product B(l_1) B(l_2) ... B(l_n), left to right. Empty product is I.
CMatrix b_product(std::span<const cplx> lambdas, const ModelParams& p);

// Structural residuals. All are relative to the natural scale noted.

/// ||R12(l-m) R13(l) R23(m) - R23(m) R13(l) R12(l-m)|| / ||R12 R13 R23||.
double ybe_residual(cplx lambda, cplx mu, cplx gamma);

/// ||[R(lambda), G (x) G]||.
double twist_symmetry_residual(cplx lambda, cplx gamma);

/// ||R(l)R(-l) - a(l)a(-l) I|| / |a(l)a(-l)|.
double unitarity_residual(cplx lambda, cplx gamma);

/// RLL relation on V_1 (x) V_2 (x) V_Q, relative to the LHS norm.
double rll_residual(cplx l1, cplx l2, const ModelParams& p);

/// ||[T(l1), T(l2)]|| / (||T(l1)|| ||T(l2)||).
double commuting_residual(cplx l1, cplx l2, const ModelParams& p);

/// ||[B(l1), B(l2)]|| / (||B(l1)|| ||B(l2)||).
double b_commuting_residual(cplx l1, cplx l2, const ModelParams& p);

/// ||T(lambda) - (B + C)|| / ||T||.
double transfer_block_residual(cplx lambda, const ModelParams& p);

/// Largest of the six highest/lowest-weight action residuals: eigenvalue ones
/// relative to the product scale, annihilation ones relative to the operator.
double action_residual(cplx lambda, const ModelParams& p);

/// ||[H, T(lambda)]|| / (||H|| ||T||) in the homogeneous model.
double hamiltonian_commutator_residual(cplx lambda, const ModelParams& p);

struct LogDerivativeFit {
  cplx alpha;
  cplx beta;
  double residual;  // ||T'(0) T(0)^{-1} - alpha H - beta I|| / ||T'(0) T(0)^{-1}||
};

/// Fits T'(0) T(0)^{-1} = alpha H + beta I with a central difference of step h.
LogDerivativeFit fit_log_derivative(const ModelParams& p, double h = 1e-5);

}  // namespace sixv
