#include "sixv/vertex_core.hpp"

#include <array>
#include <cmath>

#include "sixv/error.hpp"

namespace sixv {

namespace {

double rel(double num, double den) { return den > 0.0 ? num / den : num; }

// R_{A j} split as a 2x2 auxiliary matrix of 2x2 site operators:
// block(alpha, beta)(s, t) = R(2 alpha + s, 2 beta + t).
std::array<CMatrix, 4> r_blocks(cplx lambda, cplx gamma) {
  const CMatrix r = r_matrix(lambda, gamma);
  std::array<CMatrix, 4> blocks;
  for (int alpha = 0; alpha < 2; ++alpha) {
    for (int beta = 0; beta < 2; ++beta) {
      blocks[2 * alpha + beta] = r.block(2 * alpha, 2 * beta, 2, 2);
    }
  }
  return blocks;
}

// Embeds a 4x4 operator acting on factors (i, j) of three 2-dim spaces.
CMatrix embed_pair(const CMatrix& r, int i, int j) {
  CMatrix out = CMatrix::Zero(8, 8);
  for (int row = 0; row < 8; ++row) {
    for (int col = 0; col < 8; ++col) {
      std::array<int, 3> rb{(row >> 2) & 1, (row >> 1) & 1, row & 1};
      std::array<int, 3> cb{(col >> 2) & 1, (col >> 1) & 1, col & 1};
      const int k = 3 - i - j;
      if (rb[k] != cb[k]) continue;
      out(row, col) = r(2 * rb[i] + rb[j], 2 * cb[i] + cb[j]);
    }
  }
  return out;
}

}  // namespace

Weights weights(cplx lambda, cplx gamma) {
  return {std::sinh(lambda + gamma), std::sinh(lambda), std::sinh(gamma)};
}

CMatrix r_matrix(cplx lambda, cplx gamma) {
  const auto [a, b, c] = weights(lambda, gamma);
  CMatrix r = CMatrix::Zero(4, 4);
  r(0, 0) = a;
  r(1, 1) = b;
  r(1, 2) = c;
  r(2, 1) = c;
  r(2, 2) = b;
  r(3, 3) = a;
  return r;
}

CMatrix twist_matrix() { return pauli_x(); }

CMatrix pauli_x() {
  CMatrix s = CMatrix::Zero(2, 2);
  s(0, 1) = 1.0;
  s(1, 0) = 1.0;
  return s;
}

CMatrix pauli_y() {
  CMatrix s = CMatrix::Zero(2, 2);
  s(0, 1) = -kI;
  s(1, 0) = kI;
  return s;
}

CMatrix pauli_z() {
  CMatrix s = CMatrix::Zero(2, 2);
  s(0, 0) = 1.0;
  s(1, 1) = -1.0;
  return s;
}

CMatrix site_operator(const CMatrix& sigma, int site, int L) {
  const Eigen::Index left = Eigen::Index{1} << (site - 1);
  const Eigen::Index right = Eigen::Index{1} << (L - site);
  return kron(kron(CMatrix::Identity(left, left), sigma), CMatrix::Identity(right, right));
}

CVector highest_weight(int L) {
  CVector v = CVector::Zero(Eigen::Index{1} << L);
  v(0) = 1.0;
  return v;
}

CVector lowest_weight(int L) {
  CVector v = CVector::Zero(Eigen::Index{1} << L);
  v(v.size() - 1) = 1.0;
  return v;
}

CMatrix MonodromyBlocks::assembled() const {
  const Eigen::Index n = a_op.rows();
  CMatrix m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = a_op;
  m.topRightCorner(n, n) = b_op;
  m.bottomLeftCorner(n, n) = c_op;
  m.bottomRightCorner(n, n) = d_op;
  return m;
}

MonodromyBlocks monodromy(cplx lambda, const ModelParams& p) {
  validate(p);
  // Start from the identity on V_A with a trivial (1-dim) quantum space and
  // append one site per step: T_new(alpha, beta) = sum_g T(alpha, g) (x) r(g, beta).
  std::array<CMatrix, 4> t{CMatrix::Identity(1, 1), CMatrix::Zero(1, 1), CMatrix::Zero(1, 1),
                           CMatrix::Identity(1, 1)};
  for (int j = 0; j < p.L; ++j) {
    const auto r = r_blocks(lambda - p.mu[j], p.gamma);
    std::array<CMatrix, 4> next;
    for (int alpha = 0; alpha < 2; ++alpha) {
      for (int beta = 0; beta < 2; ++beta) {
        next[2 * alpha + beta] =
            kron(t[2 * alpha + 0], r[0 + beta]) + kron(t[2 * alpha + 1], r[2 + beta]);
      }
    }
    t = std::move(next);
  }
  return {std::move(t[0]), std::move(t[1]), std::move(t[2]), std::move(t[3])};
}

CMatrix transfer(cplx lambda, const ModelParams& p) {
  const CMatrix full = monodromy(lambda, p).assembled();
  const Eigen::Index n = p.dim();
  const CMatrix twisted = kron(twist_matrix(), CMatrix::Identity(n, n)) * full;
  return twisted.topLeftCorner(n, n) + twisted.bottomRightCorner(n, n);
}

CMatrix hamiltonian(const ModelParams& p) {
  validate(p);
  if (p.L < 2) throw Error(ErrorCode::InvalidArgument, "hamiltonian needs L >= 2");
  for (const cplx m : p.mu) {
    if (m != cplx(0.0)) throw Error(ErrorCode::InvalidArgument, "hamiltonian is defined at mu = 0");
  }
  const int L = p.L;
  const cplx delta = std::cosh(p.gamma);
  CMatrix h = CMatrix::Zero(p.dim(), p.dim());
  for (int i = 1; i <= L; ++i) {
    const int next = i == L ? 1 : i + 1;
    // sigma^y_{L+1} = -sigma^y_1, sigma^z_{L+1} = -sigma^z_1.
    const double flip = i == L ? -1.0 : 1.0;
    h += site_operator(pauli_x(), i, L) * site_operator(pauli_x(), next, L);
    h += flip * site_operator(pauli_y(), i, L) * site_operator(pauli_y(), next, L);
    h += flip * delta * site_operator(pauli_z(), i, L) * site_operator(pauli_z(), next, L);
  }
  return h;
}

CMatrix b_product(std::span<const cplx> lambdas, const ModelParams& p) {
  CMatrix out = CMatrix::Identity(p.dim(), p.dim());
  for (const cplx l : lambdas) out = out * monodromy(l, p).b_op;
  return out;
}

double ybe_residual(cplx lambda, cplx mu, cplx gamma) {
  const CMatrix r12 = embed_pair(r_matrix(lambda - mu, gamma), 0, 1);
  const CMatrix r13 = embed_pair(r_matrix(lambda, gamma), 0, 2);
  const CMatrix r23 = embed_pair(r_matrix(mu, gamma), 1, 2);
  const CMatrix lhs = r12 * r13 * r23;
  const CMatrix rhs = r23 * r13 * r12;
  return rel((lhs - rhs).norm(), lhs.norm());
}

double twist_symmetry_residual(cplx lambda, cplx gamma) {
  const CMatrix r = r_matrix(lambda, gamma);
  const CMatrix gg = kron(twist_matrix(), twist_matrix());
  return (r * gg - gg * r).norm();
}

double unitarity_residual(cplx lambda, cplx gamma) {
  const CMatrix prod = r_matrix(lambda, gamma) * r_matrix(-lambda, gamma);
  const cplx s = weight_a(lambda, gamma) * weight_a(-lambda, gamma);
  return rel((prod - s * CMatrix::Identity(4, 4)).norm(), std::abs(s));
}

double rll_residual(cplx l1, cplx l2, const ModelParams& p) {
  const Eigen::Index n = p.dim();
  const CMatrix id2 = CMatrix::Identity(2, 2);
  const CMatrix idq = CMatrix::Identity(n, n);
  const auto m1 = monodromy(l1, p);
  const auto m2 = monodromy(l2, p);
  const std::array<const CMatrix*, 4> b1{&m1.a_op, &m1.b_op, &m1.c_op, &m1.d_op};
  const std::array<const CMatrix*, 4> b2{&m2.a_op, &m2.b_op, &m2.c_op, &m2.d_op};

  CMatrix t1 = CMatrix::Zero(4 * n, 4 * n);
  CMatrix t2 = CMatrix::Zero(4 * n, 4 * n);
  for (int alpha = 0; alpha < 2; ++alpha) {
    for (int beta = 0; beta < 2; ++beta) {
      CMatrix e = CMatrix::Zero(2, 2);
      e(alpha, beta) = 1.0;
      t1 += kron(kron(e, id2), *b1[2 * alpha + beta]);
      t2 += kron(kron(id2, e), *b2[2 * alpha + beta]);
    }
  }
  const CMatrix r12 = kron(r_matrix(l1 - l2, p.gamma), idq);
  const CMatrix lhs = r12 * t1 * t2;
  const CMatrix rhs = t2 * t1 * r12;
  return rel((lhs - rhs).norm(), lhs.norm());
}

double commuting_residual(cplx l1, cplx l2, const ModelParams& p) {
  const CMatrix t1 = transfer(l1, p);
  const CMatrix t2 = transfer(l2, p);
  return rel((t1 * t2 - t2 * t1).norm(), t1.norm() * t2.norm());
}

double b_commuting_residual(cplx l1, cplx l2, const ModelParams& p) {
  const CMatrix b1 = monodromy(l1, p).b_op;
  const CMatrix b2 = monodromy(l2, p).b_op;
  return rel((b1 * b2 - b2 * b1).norm(), b1.norm() * b2.norm());
}

double transfer_block_residual(cplx lambda, const ModelParams& p) {
  const auto m = monodromy(lambda, p);
  const CMatrix t = transfer(lambda, p);
  return rel((t - (m.b_op + m.c_op)).norm(), t.norm());
}

double action_residual(cplx lambda, const ModelParams& p) {
  const auto m = monodromy(lambda, p);
  const CVector up = highest_weight(p.L);
  const CVector down = lowest_weight(p.L);
  cplx prod_a = 1.0;
  cplx prod_b = 1.0;
  for (const cplx mu : p.mu) {
    prod_a *= weight_a(lambda - mu, p.gamma);
    prod_b *= weight_b(lambda - mu);
  }
  const double eig_scale = std::max({std::abs(prod_a), std::abs(prod_b), 1e-300});
  const std::array<double, 6> res{
      (m.a_op * up - prod_a * up).norm() / eig_scale,
      (m.d_op * up - prod_b * up).norm() / eig_scale,
      (m.a_op * down - prod_b * down).norm() / eig_scale,
      (m.d_op * down - prod_a * down).norm() / eig_scale,
      rel((m.b_op * down).norm(), m.b_op.norm()),
      rel((m.c_op * up).norm(), m.c_op.norm()),
  };
  double worst = 0.0;
  for (const double r : res) worst = std::max(worst, r);
  return worst;
}

double hamiltonian_commutator_residual(cplx lambda, const ModelParams& p) {
  const CMatrix h = hamiltonian(p);
  const CMatrix t = transfer(lambda, p);
  return rel((h * t - t * h).norm(), h.norm() * t.norm());
}

LogDerivativeFit fit_log_derivative(const ModelParams& p, double h) {
  const CMatrix ham = hamiltonian(p);
  const CMatrix t0 = transfer(0.0, p);
  const CMatrix tp = (transfer(cplx(h), p) - transfer(cplx(-h), p)) / (2.0 * h);
  const CMatrix target = tp * t0.partialPivLu().inverse();

  const Eigen::Index n2 = target.size();
  CMatrix design(n2, 2);
  design.col(0) = ham.reshaped();
  design.col(1) = CMatrix::Identity(p.dim(), p.dim()).reshaped();
  const CVector coef = design.colPivHouseholderQr().solve(CVector(target.reshaped()));
  const CMatrix fitted = coef(0) * ham + coef(1) * CMatrix::Identity(p.dim(), p.dim());
  return {coef(0), coef(1), rel((target - fitted).norm(), target.norm())};
}

}  // namespace sixv
