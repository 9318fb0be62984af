#include "saddle/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "saddle/errors.hpp"

namespace saddle {

std::string to_string(BlockClass c) {
  switch (c) {
    case BlockClass::Stable: return "stable";
    case BlockClass::Unit: return "unit";
    case BlockClass::Unstable: return "unstable";
  }
  return "unknown";
}

EigenPair block_eigenvalues(double lambda, double alpha, double beta) {
  EigenPair pair;
  pair.lambda = lambda;
  pair.alpha = alpha;
  pair.beta = beta;
  const double s = 1.0 + beta - alpha * lambda;
  const double al = alpha * lambda;
  // (1+beta-alpha lambda)^2 - 4 beta, expanded so the lambda < 0 case is a
  // sum of nonnegative terms.
  const double disc = (1.0 - beta) * (1.0 - beta) - 2.0 * al * (1.0 + beta) + al * al;
  if (disc >= 0.0) {
    const double r = std::sqrt(disc);
    const double q = 0.5 * (s + std::copysign(r, s));
    double a = q;
    double b = q != 0.0 ? beta / q : 0.5 * (s - std::copysign(r, s));
    if (std::abs(b) > std::abs(a)) std::swap(a, b);
    pair.mu_hi = a;
    pair.mu_lo = b;
    pair.is_real = true;
  } else {
    const double im = 0.5 * std::sqrt(-disc);
    pair.mu_hi = {0.5 * s, im};
    pair.mu_lo = {0.5 * s, -im};
    pair.is_real = false;
  }
  return pair;
}

BlockClass classify_block(const EigenPair& pair) {
  if (std::abs(pair.mu_hi) > 1.0) return BlockClass::Unstable;
  if (pair.lambda == 0.0) return BlockClass::Unit;
  return BlockClass::Stable;
}

ParamCheck param_conditions(double alpha, double beta, double lambda1) {
  ParamCheck check;
  auto fail = [&](const std::string& what, double lhs, double rhs) {
    std::ostringstream msg;
    msg << what << " (" << lhs << " vs " << rhs << ")";
    check.violations.push_back(msg.str());
  };
  if (!(alpha > 0.0)) fail("alpha > 0", alpha, 0.0);
  if (lambda1 > 0.0 && !(alpha < 4.0 / lambda1)) fail("alpha < 4/lambda1", alpha, 4.0 / lambda1);
  const double lower = lambda1 > 0.0 ? std::max(-1.0 + alpha * lambda1 / 2.0, 0.0) : 0.0;
  if (!(beta > lower)) fail("beta > max(-1 + alpha*lambda1/2, 0)", beta, lower);
  if (!(beta < 1.0)) fail("beta < 1", beta, 1.0);
  check.ok = check.violations.empty();
  return check;
}

SpectrumClassification classify_saddle_map(const QuadraticProblem& problem, double alpha,
                                           double beta) {
  const double lambda1 = problem.eigenvalue(0);
  const ParamCheck check = param_conditions(alpha, beta, lambda1);
  if (!check) {
    std::string msg = "parameter conditions violated:";
    for (const auto& v : check.violations) msg += " " + v + ";";
    throw PreconditionError(msg);
  }
  SpectrumClassification out;
  const int n = problem.dim();
  for (int i = 0; i < n; ++i) {
    const EigenPair pair = block_eigenvalues(problem.eigenvalue(i), alpha, beta);
    const BlockClass cls = classify_block(pair);
    if (pair.lambda == 0.0 && pair.mu_hi == pair.mu_lo) {
      throw std::logic_error("zero-curvature block has a repeated root; beta must be < 1");
    }
    out.blocks.push_back(pair);
    out.classes.push_back(cls);
    if (cls == BlockClass::Unstable) {
      ++out.unstable_dim;
      ++out.stable_dim;
      out.unstable_eigenvectors.push_back(
          unstable_eigenvector(pair.lambda, alpha, beta, problem.eigenvector(i)));
    } else {
      out.stable_dim += 2;
    }
  }
  return out;
}

PointPair apply_G(const QuadraticProblem& problem, double alpha, double beta, const Vector& z1,
                  const Vector& z2) {
  if (z1.size() != z2.size()) throw DomainError("apply_G: z1 and z2 differ in dimension");
  Vector first = z1 - alpha * problem.gradient(z1) + beta * (z1 - z2);
  return {std::move(first), z1};
}

PointPair invert_G(const QuadraticProblem& problem, double alpha, double beta, const Vector& y1,
                   const Vector& y2) {
  if (beta == 0.0) throw DomainError("invert_G: the heavy-ball map is not invertible at beta = 0");
  if (y1.size() != y2.size()) throw DomainError("invert_G: y1 and y2 differ in dimension");
  Vector second = (y2 - y1 - alpha * problem.gradient(y2)) / beta + y2;
  return {y2, std::move(second)};
}

Matrix jacobian_matrix(const QuadraticProblem& problem, double alpha, double beta) {
  const int n = problem.dim();
  const Vector& lam = problem.eigenvalues();
  const Matrix V = problem.basis();
  const Matrix H = V * lam.asDiagonal() * V.transpose();
  Matrix dg = Matrix::Zero(2 * n, 2 * n);
  dg.topLeftCorner(n, n) = (1.0 + beta) * Matrix::Identity(n, n) - alpha * H;
  dg.topRightCorner(n, n) = -beta * Matrix::Identity(n, n);
  dg.bottomLeftCorner(n, n) = Matrix::Identity(n, n);
  return dg;
}

Vector apply_jacobian(const QuadraticProblem& problem, double alpha, double beta, const Vector& w) {
  const int n = problem.dim();
  if (w.size() != 2 * n) throw DomainError("apply_jacobian: vector must have length 2n");
  const Vector w1 = w.head(n);
  const Vector w2 = w.tail(n);
  Vector out(2 * n);
  out.head(n) = (1.0 + beta) * w1 - alpha * problem.hessian_apply(w1) - beta * w2;
  out.tail(n) = w1;
  return out;
}

Vector unstable_eigenvector(double lambda, double alpha, double beta, const Vector& v) {
  if (!(lambda < 0.0)) throw DomainError("unstable_eigenvector requires lambda < 0");
  const EigenPair pair = block_eigenvalues(lambda, alpha, beta);
  const double mu = pair.mu_hi.real();
  const auto n = v.size();
  Vector w(2 * n);
  w.head(n) = v;
  w.tail(n) = v / mu;
  return w;
}

}  // namespace saddle
