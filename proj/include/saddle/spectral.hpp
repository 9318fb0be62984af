#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "saddle/problems.hpp"

namespace saddle {

/// Roots of mu^2 - (1 + beta - alpha lambda) mu + beta = 0, the characteristic
/// polynomial of the 2x2 heavy-ball block [[1 + beta - alpha lambda, -beta], [1, 0]].
/// mu_hi has the larger magnitude; a complex pair puts the root with
/// nonnegative imaginary part in mu_hi.
struct EigenPair {
  std::complex<double> mu_hi;
  std::complex<double> mu_lo;
  bool is_real = true;
  double lambda = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

enum class BlockClass { Stable, Unit, Unstable };

std::string to_string(BlockClass c);

EigenPair block_eigenvalues(double lambda, double alpha, double beta);

/// Stable: both roots inside the unit circle. Unit: one root equal to 1
/// (lambda == 0). Unstable: one root outside the unit circle.
BlockClass classify_block(const EigenPair& pair);

struct ParamCheck {
  bool ok = false;
  std::vector<std::string> violations;
  explicit operator bool() const { return ok; }
};

/// 0 < alpha < 4 / lambda1 and max(-1 + alpha lambda1 / 2, 0) < beta < 1.
/// When lambda1 <= 0 there is no positive curvature and only alpha > 0,
/// 0 < beta < 1 are required.
ParamCheck param_conditions(double alpha, double beta, double lambda1);

struct SpectrumClassification {
  int stable_dim = 0;    // eigenvalues of DG with magnitude <= 1
  int unstable_dim = 0;  // eigenvalues of DG with magnitude > 1
  std::vector<EigenPair> blocks;
  std::vector<BlockClass> classes;
  /// (v_i, v_i / mu_hi) for every negative eigenvalue, in spectrum order.
  std::vector<Vector> unstable_eigenvectors;
};

/// Spectral structure of DG at the critical point 0 of a quadratic.
/// Throws PreconditionError naming the violated inequality.
SpectrumClassification classify_saddle_map(const QuadraticProblem& problem, double alpha,
                                           double beta);

using PointPair = std::pair<Vector, Vector>;

/// G(z1, z2) = (z1 - alpha grad f(z1) + beta (z1 - z2), z1).
PointPair apply_G(const QuadraticProblem& problem, double alpha, double beta, const Vector& z1,
                  const Vector& z2);

/// G^{-1}(y1, y2) = (y2, (y2 - y1 - alpha grad f(y2)) / beta + y2). Throws
/// DomainError when beta == 0.
PointPair invert_G(const QuadraticProblem& problem, double alpha, double beta, const Vector& y1,
                   const Vector& y2);

/// Dense 2n x 2n Jacobian [[(1+beta) I - alpha H, -beta I], [I, 0]].
Matrix jacobian_matrix(const QuadraticProblem& problem, double alpha, double beta);

/// DG * (w1, w2) without forming the matrix.
Vector apply_jacobian(const QuadraticProblem& problem, double alpha, double beta, const Vector& w);

/// (v, v / mu_hi) for lambda < 0. Throws DomainError when lambda >= 0.
Vector unstable_eigenvector(double lambda, double alpha, double beta, const Vector& v);

}  // namespace saddle
