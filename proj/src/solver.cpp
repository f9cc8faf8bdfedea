#include "cuspcert/solver.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <random>

namespace cuspcert {

std::array<std::complex<double>, 3> log_triple(std::complex<double> z) {
  std::complex<double> one(1.0, 0.0);
  return {std::log(z), std::log(one / (one - z)), std::log(one - one / z)};
}

std::vector<std::array<std::complex<double>, 3>> ShapeAssignment::log_branches() const {
  std::vector<std::array<std::complex<double>, 3>> out;
  out.reserve(shapes.size());
  for (auto z : shapes) out.push_back(log_triple(z));
  return out;
}

std::complex<double> row_value(const std::vector<long long>& row, long long target,
                               const std::vector<std::complex<double>>& shapes) {
  std::complex<double> acc(0.0, 0.0);
  for (size_t j = 0; j < shapes.size(); ++j) {
    auto t = log_triple(shapes[j]);
    acc += static_cast<double>(row[3 * j]) * t[0] +
           static_cast<double>(row[3 * j + 1]) * t[1] +
           static_cast<double>(row[3 * j + 2]) * t[2];
  }
  return acc - std::complex<double>(0.0, static_cast<double>(target) * M_PI);
}

double residual(const GluingSystem& sys, const std::vector<std::complex<double>>& shapes) {
  if (static_cast<int>(shapes.size()) != sys.n)
    throw SolveError("shape count " + std::to_string(shapes.size()) +
                     " does not match system width " + std::to_string(sys.n));
  for (auto z : shapes)
    if (z == std::complex<double>(0.0) || z == std::complex<double>(1.0))
      throw SolveError("logarithm pole: shape at 0 or 1");
  double worst = 0.0;
  for (size_t i = 0; i < sys.rows.size(); ++i)
    worst = std::max(worst, std::abs(row_value(sys.rows[i], sys.targets[i], shapes)));
  return worst;
}

namespace {

struct Attempt {
  bool ok = false;
  std::string reason;
  std::vector<std::complex<double>> z;
  double res = 0.0;
  int iters = 0;
  std::vector<double> history;
};

Attempt newton(const GluingSystem& sys, std::vector<std::complex<double>> z,
               const SolveOptions& opts) {
  Attempt at;
  int n = sys.n;
  int m = static_cast<int>(sys.rows.size());
  Eigen::MatrixXcd J(m, n);
  Eigen::VectorXcd F(m);
  for (int it = 0; it < opts.max_iterations; ++it) {
    for (auto& zj : z) {
      if (!std::isfinite(zj.real()) || !std::isfinite(zj.imag()) ||
          std::abs(zj) < 1e-8 || std::abs(zj - 1.0) < 1e-8 || std::abs(zj) > 1e8) {
        at.reason = "shape degenerated (near 0, 1, or infinity)";
        return at;
      }
    }
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
      F(i) = row_value(sys.rows[i], sys.targets[i], z);
      worst = std::max(worst, std::abs(F(i)));
    }
    at.history.push_back(worst);
    if (worst < opts.tol) {
      at.ok = true;
      at.z = std::move(z);
      at.res = worst;
      at.iters = it;
      return at;
    }
    for (int i = 0; i < m; ++i) {
      const auto& row = sys.rows[i];
      for (int j = 0; j < n; ++j) {
        std::complex<double> zj = z[j];
        J(i, j) = static_cast<double>(row[3 * j]) / zj +
                  static_cast<double>(row[3 * j + 1]) / (1.0 - zj) +
                  static_cast<double>(row[3 * j + 2]) / (zj * (zj - 1.0));
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv(0) <= 0.0 || sv(sv.size() - 1) < 1e-14 * sv(0)) {
      at.reason = "Jacobian numerically rank-deficient";
      return at;
    }
    Eigen::VectorXcd dz = svd.solve(-F);
    double step = 0.0;
    for (int j = 0; j < n; ++j) step = std::max(step, std::abs(dz(j)));
    if (step > 2.0) dz *= 2.0 / step;
    for (int j = 0; j < n; ++j) z[j] += dz(j);
  }
  at.reason = "no convergence within " + std::to_string(opts.max_iterations) + " iterations";
  return at;
}

SolveResult finish(Attempt at, int restarts) {
  SolveResult r;
  r.assignment.shapes = std::move(at.z);
  r.residual = at.res;
  r.iterations = at.iters;
  r.restarts = restarts;
  r.residual_history = std::move(at.history);
  r.geometric = true;
  for (auto z : r.assignment.shapes)
    if (!(z.imag() > 0.0)) r.geometric = false;
  return r;
}

SolveResult run_ladder(const GluingSystem& sys,
                       const std::vector<std::complex<double>>* init,
                       const SolveOptions& opts) {
  if (sys.n < 1 || sys.rows.empty())
    throw SolveError("degenerate system: no equations or no unknowns");
  if (init && static_cast<int>(init->size()) != sys.n)
    throw SolveError("initial guess width does not match system");

  int restarts = 0;
  std::string reason;
  if (init) {
    Attempt at = newton(sys, *init, opts);
    if (at.ok) return finish(std::move(at), restarts);
    reason = at.reason;
    ++restarts;
  }
  std::vector<std::complex<double>> guess(sys.n, std::complex<double>(0.5, std::sqrt(3.0) / 2.0));
  Attempt at = newton(sys, guess, opts);
  if (at.ok) return finish(std::move(at), restarts);
  reason = at.reason;
  ++restarts;

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int k = 0; k < opts.retries; ++k) {
    for (int j = 0; j < sys.n; ++j) {
      double re = 0.2 + 1.6 * uni(rng);
      double im = 0.1 + 1.9 * uni(rng);
      guess[j] = {re, im};
    }
    at = newton(sys, guess, opts);
    if (at.ok) return finish(std::move(at), restarts);
    reason = at.reason;
    ++restarts;
  }
  throw SolveError("solver failed after " + std::to_string(restarts) +
                   " attempts; last attempt: " + reason);
}

}  // namespace

SolveResult solve(const GluingSystem& sys, const SolveOptions& opts) {
  return run_ladder(sys, nullptr, opts);
}

SolveResult solve(const GluingSystem& sys, const std::vector<std::complex<double>>& init,
                  const SolveOptions& opts) {
  return run_ladder(sys, &init, opts);
}

}  // namespace cuspcert
