#include "saddle/problems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>

#include "saddle/errors.hpp"
#include "saddle/rng.hpp"

namespace saddle {

namespace {

Vector to_vector(const std::vector<double>& values) {
  return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

void validate_spectrum(const std::vector<double>& eigenvalues) {
  if (eigenvalues.empty()) throw DomainError("quadratic problem needs at least one eigenvalue");
  for (double v : eigenvalues) {
    if (!std::isfinite(v)) throw DomainError("eigenvalues must be finite");
  }
  if (!std::is_sorted(eigenvalues.begin(), eigenvalues.end(), std::greater<>())) {
    throw DomainError("eigenvalues must be sorted nonincreasing");
  }
}

std::vector<double> sample_spectrum(Rng& rng, int n, int p, double delta) {
  std::vector<double> eigs;
  eigs.reserve(static_cast<std::size_t>(n));
  // The nonnegative block is redrawn until its maximum is at least delta so
  // the positive side of the spectrum is never degenerate relative to the
  // negative side. The floor is dropped when delta >= 1 (unreachable).
  const double floor = delta < 1.0 ? delta : 0.0;
  do {
    eigs.clear();
    for (int i = 0; i < n - p; ++i) eigs.push_back(rng.uniform());
  } while (*std::max_element(eigs.begin(), eigs.end()) < floor);
  for (int i = 0; i < p; ++i) eigs.push_back(rng.uniform(-2.0 * delta, -delta));
  std::sort(eigs.begin(), eigs.end(), std::greater<>());
  return eigs;
}

}  // namespace

QuadraticProblem::QuadraticProblem(std::vector<double> eigenvalues) {
  validate_spectrum(eigenvalues);
  eigenvalues_ = to_vector(eigenvalues);
  negative_count_ = static_cast<int>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                                   [](double v) { return v < 0.0; }));
  lipschitz_ = std::max(eigenvalues.front(), -eigenvalues.back());
  lipschitz_ = std::max(lipschitz_, 0.0);
}

QuadraticProblem::QuadraticProblem(std::vector<double> eigenvalues, Matrix basis)
    : QuadraticProblem(std::move(eigenvalues)) {
  const auto n = static_cast<Eigen::Index>(dim());
  if (basis.rows() != n || basis.cols() != n) {
    throw DomainError("basis must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  const double err = (basis.transpose() * basis - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (err > 1e-10) {
    std::ostringstream msg;
    msg << "basis is not orthogonal: max |V^T V - I| = " << err;
    throw DomainError(msg.str());
  }
  basis_ = std::move(basis);
}

Matrix QuadraticProblem::basis() const {
  if (basis_) return *basis_;
  return Matrix::Identity(dim(), dim());
}

Vector QuadraticProblem::eigenvector(int i) const {
  if (i < 0 || i >= dim()) throw DomainError("eigenvector index out of range");
  if (basis_) return basis_->col(i);
  return Vector::Unit(dim(), i);
}

void QuadraticProblem::check_dim(const Vector& x) const {
  if (x.size() != dim()) {
    throw DomainError("dimension mismatch: problem has n=" + std::to_string(dim()) +
                      ", point has " + std::to_string(x.size()));
  }
}

Vector QuadraticProblem::to_eigen_coords(const Vector& x) const {
  check_dim(x);
  if (basis_) return basis_->transpose() * x;
  return x;
}

Vector QuadraticProblem::from_eigen_coords(const Vector& z) const {
  check_dim(z);
  if (basis_) return *basis_ * z;
  return z;
}

double QuadraticProblem::value(const Vector& x) const {
  const Vector z = to_eigen_coords(x);
  return 0.5 * z.dot(eigenvalues_.cwiseProduct(z));
}

Vector QuadraticProblem::gradient(const Vector& x) const {
  check_dim(x);
  if (!basis_) return eigenvalues_.cwiseProduct(x);
  return *basis_ * eigenvalues_.cwiseProduct(basis_->transpose() * x);
}

double QuadraticProblem::negative_projection_norm(const Vector& x) const {
  const Vector z = to_eigen_coords(x);
  // Negative eigenvalues occupy the tail of the sorted spectrum.
  return z.tail(negative_count_).norm();
}

QuadraticProblem QuadraticProblem::with_provenance(std::optional<std::uint64_t> seed,
                                                   std::optional<std::uint64_t> basis_seed) const {
  QuadraticProblem copy = *this;
  copy.seed_ = seed;
  copy.basis_seed_ = basis_seed;
  return copy;
}

Evaluation QuadraticOracle::evaluate(const Vector& x) const {
  return {problem_.value(x), problem_.gradient(x)};
}

Evaluation FunctionOracle::evaluate(const Vector& x) const {
  if (x.size() != dim_) throw DomainError("dimension mismatch in oracle evaluation");
  return fn_(x);
}

QuadraticProblem toy_problem(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("toy problem requires 0 < delta < 1");
  return QuadraticProblem({1.0, -delta});
}

QuadraticProblem random_problem(int n, int p, double delta, std::uint64_t seed) {
  if (p < 1 || p >= n) throw DomainError("random problem requires 1 <= p < n");
  if (!(delta > 0.0)) throw DomainError("random problem requires delta > 0");
  Rng rng(seed);
  return QuadraticProblem(sample_spectrum(rng, n, p, delta)).with_provenance(seed, std::nullopt);
}

Matrix random_orthogonal(int n, std::uint64_t seed) {
  if (n < 1) throw DomainError("orthogonal matrix dimension must be positive");
  Rng rng(seed);
  Matrix gauss(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) gauss(i, j) = rng.normal();
  Eigen::HouseholderQR<Matrix> qr(gauss);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  // Fix column signs so Q is the unique factor with positive diag(R).
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

QuadraticProblem random_rotated_problem(int n, int p, double delta, std::uint64_t seed,
                                        std::uint64_t basis_seed) {
  const QuadraticProblem diag = random_problem(n, p, delta, seed);
  std::vector<double> eigs(diag.eigenvalues().begin(), diag.eigenvalues().end());
  return QuadraticProblem(std::move(eigs), random_orthogonal(n, basis_seed))
      .with_provenance(seed, basis_seed);
}

QuadraticProblem single_negative_problem(int n, double delta, std::uint64_t seed) {
  if (n < 2) throw DomainError("single negative problem requires n >= 2");
  if (!(delta > 0.0)) throw DomainError("single negative problem requires delta > 0");
  Rng rng(seed);
  std::vector<double> eigs;
  for (int i = 0; i < n - 1; ++i) eigs.push_back(rng.uniform());
  std::sort(eigs.begin(), eigs.end(), std::greater<>());
  eigs.push_back(-delta);
  return QuadraticProblem(std::move(eigs)).with_provenance(seed, std::nullopt);
}

Vector gradient(const QuadraticProblem& problem, const Vector& x) { return problem.gradient(x); }

}  // namespace saddle
