#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace saddle {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// f(x) = 1/2 x^T V diag(lambda) V^T x with lambda sorted nonincreasing.
/// When no basis is stored V is the identity and every operation works
/// componentwise.
class QuadraticProblem {
 public:
  /// Throws DomainError if the eigenvalues are empty or not sorted nonincreasing.
  explicit QuadraticProblem(std::vector<double> eigenvalues);
  /// Throws DomainError if basis is not n x n orthogonal to 1e-10.
  QuadraticProblem(std::vector<double> eigenvalues, Matrix basis);

  int dim() const { return static_cast<int>(eigenvalues_.size()); }
  const Vector& eigenvalues() const { return eigenvalues_; }
  double eigenvalue(int i) const { return eigenvalues_[i]; }
  bool has_basis() const { return basis_.has_value(); }
  /// Orthogonal eigenvector matrix; identity when the problem is diagonal.
  Matrix basis() const;
  /// Column i of the basis (e_i for diagonal problems).
  Vector eigenvector(int i) const;
  int negative_count() const { return negative_count_; }
  /// max(lambda_1, -lambda_n).
  double lipschitz() const { return lipschitz_; }

  double value(const Vector& x) const;
  Vector gradient(const Vector& x) const;
  /// H x. Same as gradient; kept separate for readability at call sites
  /// that apply the Hessian to a direction.
  Vector hessian_apply(const Vector& x) const { return gradient(x); }

  /// V^T x: coordinates in the eigenbasis.
  Vector to_eigen_coords(const Vector& x) const;
  Vector from_eigen_coords(const Vector& z) const;

  /// Norm of the orthogonal projection of x onto the span of the
  /// eigenvectors with strictly negative eigenvalue.
  double negative_projection_norm(const Vector& x) const;

  std::optional<std::uint64_t> seed() const { return seed_; }
  std::optional<std::uint64_t> basis_seed() const { return basis_seed_; }
  QuadraticProblem with_provenance(std::optional<std::uint64_t> seed,
                                   std::optional<std::uint64_t> basis_seed) const;

 private:
  Vector eigenvalues_;
  std::optional<Matrix> basis_;
  int negative_count_ = 0;
  double lipschitz_ = 0.0;
  std::optional<std::uint64_t> seed_;
  std::optional<std::uint64_t> basis_seed_;

  void check_dim(const Vector& x) const;
};

/// Function value and gradient at a point.
struct Evaluation {
  double value;
  Vector gradient;
};

/// Smooth objective interface used by the optimizers.
class GradientOracle {
 public:
  virtual ~GradientOracle() = default;
  virtual int dim() const = 0;
  virtual Evaluation evaluate(const Vector& x) const = 0;
  virtual Vector gradient(const Vector& x) const { return evaluate(x).gradient; }
  virtual double value(const Vector& x) const { return evaluate(x).value; }
};

class QuadraticOracle final : public GradientOracle {
 public:
  explicit QuadraticOracle(QuadraticProblem problem) : problem_(std::move(problem)) {}
  int dim() const override { return problem_.dim(); }
  Evaluation evaluate(const Vector& x) const override;
  Vector gradient(const Vector& x) const override { return problem_.gradient(x); }
  double value(const Vector& x) const override { return problem_.value(x); }
  const QuadraticProblem& problem() const { return problem_; }

 private:
  QuadraticProblem problem_;
};

/// Wraps an arbitrary value/gradient callable.
class FunctionOracle final : public GradientOracle {
 public:
  using Fn = std::function<Evaluation(const Vector&)>;
  FunctionOracle(int dim, Fn fn) : dim_(dim), fn_(std::move(fn)) {}
  int dim() const override { return dim_; }
  Evaluation evaluate(const Vector& x) const override;

 private:
  int dim_;
  Fn fn_;
};

/// f(x) = 1/2 (x1^2 - delta x2^2). Requires 0 < delta < 1.
QuadraticProblem toy_problem(double delta);

/// n - p eigenvalues i.i.d. U[0,1] and p eigenvalues i.i.d. U[-2 delta, -delta],
/// sorted nonincreasing, diagonal. Requires 1 <= p < n and delta > 0.
QuadraticProblem random_problem(int n, int p, double delta, std::uint64_t seed);

/// Same spectrum as random_problem(n, p, delta, seed) expressed in a random
/// orthogonal basis: Q from the QR factorization of a Gaussian matrix drawn
/// from basis_seed.
QuadraticProblem random_rotated_problem(int n, int p, double delta, std::uint64_t seed,
                                        std::uint64_t basis_seed);

/// n - 1 eigenvalues i.i.d. U[0,1] plus a single eigenvalue fixed at -delta.
QuadraticProblem single_negative_problem(int n, double delta, std::uint64_t seed);

/// Orthogonal n x n matrix from a seeded Gaussian QR factorization.
Matrix random_orthogonal(int n, std::uint64_t seed);

/// grad f(x); throws DomainError when dim(x) != n.
Vector gradient(const QuadraticProblem& problem, const Vector& x);

}  // namespace saddle
