#include "swarmkit/benchmarks.hpp"

#include <cmath>
#include <numbers>

namespace swarmkit::benchmarks {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

Problem make(std::string name, SearchSpace space, Objective f, GradientFn g, Vector argmin) {
    const double value = f(argmin);
    return Problem{std::move(name), std::move(space), std::move(f),
                   KnownOptimum{std::move(argmin), value}, std::move(g)};
}

}  // namespace

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double rastrigin(std::span<const double> x) {
    double s = 10.0 * static_cast<double>(x.size());
    for (double v : x) s += v * v - 10.0 * std::cos(kTwoPi * v);
    return s;
}

double rosenbrock(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double ackley(std::span<const double> x) {
    const double d = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(kTwoPi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / d)) - std::exp(cs / d) + 20.0 +
           std::numbers::e;
}

Vector sphere_gradient(std::span<const double> x) {
    Vector g(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) g[k] = 2.0 * x[k];
    return g;
}

Vector rastrigin_gradient(std::span<const double> x) {
    Vector g(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        g[k] = 2.0 * x[k] + 10.0 * kTwoPi * std::sin(kTwoPi * x[k]);
    }
    return g;
}

Vector rosenbrock_gradient(std::span<const double> x) {
    Vector g(x.size(), 0.0);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        g[i] += -400.0 * x[i] * a - 2.0 * (1.0 - x[i]);
        g[i + 1] += 200.0 * a;
    }
    return g;
}

Vector ackley_gradient(std::span<const double> x) {
    const double d = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(kTwoPi * v);
    }
    const double r = std::sqrt(sq / d);
    const double radial = r > 0.0 ? 4.0 * std::exp(-0.2 * r) / (d * r) : 0.0;
    const double wave = kTwoPi * std::exp(cs / d) / d;
    Vector g(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        g[k] = radial * x[k] + wave * std::sin(kTwoPi * x[k]);
    }
    return g;
}

Eigen::MatrixXd sphere_hessian(std::span<const double> x) {
    const auto n = static_cast<Eigen::Index>(x.size());
    return 2.0 * Eigen::MatrixXd::Identity(n, n);
}

Eigen::MatrixXd rosenbrock_hessian(std::span<const double> x) {
    const auto n = static_cast<Eigen::Index>(x.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        const double xi = x[static_cast<std::size_t>(i)];
        const double xn = x[static_cast<std::size_t>(i + 1)];
        h(i, i) += 1200.0 * xi * xi - 400.0 * xn + 2.0;
        h(i, i + 1) += -400.0 * xi;
        h(i + 1, i) += -400.0 * xi;
        h(i + 1, i + 1) += 200.0;
    }
    return h;
}

std::vector<std::string> names() {
    return {"sphere", "rosenbrock", "rastrigin", "ackley", "two_mode"};
}

Problem two_mode(Vector c1, Vector c2, SearchSpace space) {
    if (c1.size() != space.dimension() || c2.size() != space.dimension())
        throw ConfigError("two_mode: center dimension does not match the search space");
    if (!space.contains(c1) || !space.contains(c2))
        throw ConfigError("two_mode: centers must lie inside the search space");
    if (c1 == c2) throw ConfigError("two_mode: centers must be distinct");

    auto f = [c1, c2](std::span<const double> x) {
        return std::min(squared_distance(x, c1), squared_distance(x, c2));
    };
    auto g = [c1, c2](std::span<const double> x) {
        const Vector& c = squared_distance(x, c1) <= squared_distance(x, c2) ? c1 : c2;
        Vector grad(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) grad[k] = 2.0 * (x[k] - c[k]);
        return grad;
    };
    Vector argmin = c1;
    return make("two_mode", std::move(space), f, g, std::move(argmin));
}

Problem lookup(std::string_view name, std::size_t dimension) {
    if (dimension < 1) throw ConfigError("benchmark dimension must be at least 1");
    if (name == "sphere") {
        return make("sphere", SearchSpace::cube(dimension, -5.12, 5.12), sphere, sphere_gradient,
                    Vector(dimension, 0.0));
    }
    if (name == "rastrigin") {
        return make("rastrigin", SearchSpace::cube(dimension, -5.12, 5.12), rastrigin,
                    rastrigin_gradient, Vector(dimension, 0.0));
    }
    if (name == "rosenbrock") {
        if (dimension < 2) throw ConfigError("rosenbrock needs dimension >= 2");
        return make("rosenbrock", SearchSpace::cube(dimension, -5.0, 10.0), rosenbrock,
                    rosenbrock_gradient, Vector(dimension, 1.0));
    }
    if (name == "ackley") {
        return make("ackley", SearchSpace::cube(dimension, -32.768, 32.768), ackley,
                    ackley_gradient, Vector(dimension, 0.0));
    }
    if (name == "two_mode") {
        return two_mode(Vector(dimension, -2.5), Vector(dimension, 2.5),
                        SearchSpace::cube(dimension, -5.0, 5.0));
    }
    std::string msg = "unknown problem '" + std::string(name) + "'; available:";
    for (const auto& n : names()) msg += " " + n;
    throw ConfigError(msg);
}

}  // namespace swarmkit::benchmarks
