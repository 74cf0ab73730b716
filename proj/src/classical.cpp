#include "swarmkit/classical.hpp"

#include <cmath>

#include "swarmkit/core.hpp"

namespace swarmkit::classical {

namespace {

void check_arguments(double tol, std::size_t max_iter) {
    if (!(tol > 0.0)) throw ConfigError("newton: tol must be positive");
    if (max_iter < 1) throw ConfigError("newton: max_iter must be at least 1");
}

// Shared scalar loop: drives `residual_fn` to zero using `slope_fn`.
NewtonOutcome<double> scalar_newton(const ScalarFn& residual_fn, const ScalarFn& slope_fn,
                                    double x0, double tol, std::size_t max_iter) {
    check_arguments(tol, max_iter);
    NewtonOutcome<double> out;
    double x = x0;
    double residual = residual_fn(x);
    out.value = x;
    out.residual = std::abs(residual);
    if (out.residual <= tol) {
        out.status = NewtonStatus::converged;
        return out;
    }
    for (std::size_t it = 1; it <= max_iter; ++it) {
        const double slope = slope_fn(x);
        if (!(std::abs(slope) >= kSingularDerivative)) {
            out.status = NewtonStatus::derivative_vanished;
            return out;
        }
        x -= residual / slope;
        residual = residual_fn(x);
        out.value = x;
        out.iterations = it;
        out.residual = std::abs(residual);
        if (!std::isfinite(x) || std::abs(x) > kDivergenceBound) {
            out.status = NewtonStatus::diverged;
            return out;
        }
        if (out.residual <= tol) {
            out.status = NewtonStatus::converged;
            return out;
        }
    }
    out.status = NewtonStatus::max_iterations;
    return out;
}

}  // namespace

std::string_view to_string(NewtonStatus status) {
    switch (status) {
        case NewtonStatus::converged: return "converged";
        case NewtonStatus::derivative_vanished: return "derivative_vanished";
        case NewtonStatus::max_iterations: return "max_iterations";
        case NewtonStatus::diverged: return "diverged";
    }
    return "unknown";
}

NewtonOutcome<double> newton_root(const ScalarFn& p, const ScalarFn& dp, double x0, double tol,
                                  std::size_t max_iter) {
    return scalar_newton(p, dp, x0, tol, max_iter);
}

NewtonOutcome<double> newton_opt_1d(const ScalarFn& df, const ScalarFn& d2f, double x0,
                                    double tol, std::size_t max_iter) {
    return scalar_newton(df, d2f, x0, tol, max_iter);
}

NewtonOutcome<Eigen::VectorXd> newton_opt_nd(const GradientFn& grad, const HessianFn& hessian,
                                             const Eigen::VectorXd& x0, double tol,
                                             std::size_t max_iter) {
    check_arguments(tol, max_iter);
    NewtonOutcome<Eigen::VectorXd> out;
    Eigen::VectorXd x = x0;
    Eigen::VectorXd g = grad(x);
    out.value = x;
    out.residual = g.norm();
    if (out.residual <= tol) {
        out.status = NewtonStatus::converged;
        return out;
    }
    for (std::size_t it = 1; it <= max_iter; ++it) {
        const Eigen::MatrixXd h = hessian(x);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        const double smax = sv(0);
        const double smin = sv(sv.size() - 1);
        if (!(smin > 0.0) || smax / smin > kMaxHessianCondition) {
            out.status = NewtonStatus::derivative_vanished;
            return out;
        }
        x -= svd.solve(g);
        g = grad(x);
        out.value = x;
        out.iterations = it;
        out.residual = g.norm();
        if (!x.allFinite() || x.cwiseAbs().maxCoeff() > kDivergenceBound) {
            out.status = NewtonStatus::diverged;
            return out;
        }
        if (out.residual <= tol) {
            out.status = NewtonStatus::converged;
            return out;
        }
    }
    out.status = NewtonStatus::max_iterations;
    return out;
}

}  // namespace swarmkit::classical
