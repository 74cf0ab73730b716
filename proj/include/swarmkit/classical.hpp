#pragma once

#include <cstddef>
#include <functional>
#include <string_view>

#include <Eigen/Dense>

namespace swarmkit::classical {

enum class NewtonStatus { converged, derivative_vanished, max_iterations, diverged };

std::string_view to_string(NewtonStatus status);

/// Result of a Newton iteration. `iterations` counts updates, starting at 1
/// for the first; `residual` is |p(x)| (root finding) or the gradient norm
/// (optimization) at `value`.
template <class T>
struct NewtonOutcome {
    NewtonStatus status = NewtonStatus::max_iterations;
    T value{};
    std::size_t iterations = 0;
    double residual = 0.0;
};

using ScalarFn = std::function<double(double)>;
using GradientFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using HessianFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

/// Scalar derivatives below this magnitude stop the iteration.
inline constexpr double kSingularDerivative = 1e-12;
/// Hessians whose 2-norm condition number exceeds this are treated as singular.
inline constexpr double kMaxHessianCondition = 1e12;
/// Iterates beyond this magnitude are reported as diverged.
inline constexpr double kDivergenceBound = 1e12;

/// x <- x - p(x)/p'(x) until |p(x)| <= tol.
NewtonOutcome<double> newton_root(const ScalarFn& p, const ScalarFn& dp, double x0, double tol,
                                  std::size_t max_iter);

/// Stationary point of f: x <- x - f'(x)/f''(x) until |f'(x)| <= tol.
NewtonOutcome<double> newton_opt_1d(const ScalarFn& df, const ScalarFn& d2f, double x0,
                                    double tol, std::size_t max_iter);

/// Vector Newton step: solves H(x) s = grad f(x), x <- x - s, until
/// ||grad f(x)||_2 <= tol.
NewtonOutcome<Eigen::VectorXd> newton_opt_nd(const GradientFn& grad, const HessianFn& hessian,
                                             const Eigen::VectorXd& x0, double tol,
                                             std::size_t max_iter);

}  // namespace swarmkit::classical
