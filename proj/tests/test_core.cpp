#include <doctest.h>

#include <cmath>
#include <limits>
#include <set>

#include "swarmkit/core.hpp"
#include "swarmkit/rng.hpp"

using namespace swarmkit;

namespace {

Problem quadratic(std::size_t dim) {
    return Problem{"quad", SearchSpace::cube(dim, -5.0, 5.0),
                   [](std::span<const double> x) {
                       double s = 0.0;
                       for (double v : x) s += v * v;
                       return s;
                   },
                   std::nullopt, {}};
}

}  // namespace

TEST_CASE("search space validation") {
    CHECK_THROWS_AS(SearchSpace({}, {}), ConfigError);
    CHECK_THROWS_AS(SearchSpace({0.0}, {0.0}), ConfigError);
    CHECK_THROWS_AS(SearchSpace({1.0}, {0.0}), ConfigError);
    CHECK_THROWS_AS(SearchSpace({0.0, 0.0}, {1.0}), ConfigError);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(SearchSpace({nan}, {1.0}), ConfigError);

    const auto box = SearchSpace({-1.0, 0.0}, {1.0, 4.0});
    CHECK(box.dimension() == 2);
    CHECK(box.width(1) == 4.0);
    CHECK(box.mean_width() == doctest::Approx(3.0));
    CHECK(box.contains(Vector{0.0, 4.0}));
    CHECK_FALSE(box.contains(Vector{0.0, 4.5}));
}

TEST_CASE("clamp examples") {
    const auto box = SearchSpace::cube(2, -5.0, 5.0);
    CHECK(clamp_to_bounds({7.0, -9.0}, box) == Vector{5.0, -5.0});
    CHECK(clamp_to_bounds({1.0, -2.0}, box) == Vector{1.0, -2.0});

    RngStream rng(3);
    for (int i = 0; i < 200; ++i) {
        Vector x{rng.uniform(-50.0, 50.0), rng.uniform(-50.0, 50.0)};
        const Vector once = clamp_to_bounds(x, box);
        CHECK(box.contains(once));
        CHECK(clamp_to_bounds(once, box) == once);
    }
}

TEST_CASE("point from unit draws") {
    CHECK(point_from_unit(SearchSpace::cube(1, 0.0, 1.0), Vector{0.5}) == Vector{0.5});
    CHECK(point_from_unit(SearchSpace::cube(1, -5.0, 5.0), Vector{0.0}) == Vector{-5.0});
    CHECK(point_from_unit(SearchSpace::cube(1, 2.0, 4.0), Vector{0.25}) == Vector{2.5});
}

TEST_CASE("random position uses one uniform per coordinate") {
    const auto box = SearchSpace({-1.0, 10.0, 0.0}, {1.0, 20.0, 0.5});
    RngStream a(11), b(11);
    const Vector x = random_position(box, a);
    Vector r(3);
    for (double& v : r) v = b.uniform();
    CHECK(x == point_from_unit(box, r));
    CHECK(a.next_u64() == b.next_u64());
    CHECK(box.contains(x));
}

TEST_CASE("evaluation counting and non-finite values") {
    auto problem = quadratic(2);
    Evaluator ev(problem);
    CHECK(ev(Vector{1.0, 2.0}) == 5.0);
    CHECK(ev(Vector{0.0, 0.0}) == 0.0);
    CHECK(ev.count() == 2);

    problem.objective = [](std::span<const double> x) { return std::log(x[0]); };
    std::size_t counter = 0;
    try {
        evaluate(problem, Vector{-1.0, 0.0}, counter);
        FAIL("expected EvaluationError");
    } catch (const EvaluationError& e) {
        CHECK(e.position() == Vector{-1.0, 0.0});
        CHECK(std::isnan(e.raw_value()));
    }
    CHECK_THROWS_AS(evaluate(problem, Vector{0.0, 0.0}, counter), EvaluationError);
}

TEST_CASE("argmin and update_best break ties toward the lowest index") {
    const std::vector<double> f{3.0, 1.0, 1.0, 2.0};
    CHECK(argmin(f) == 1);

    Population<> pop;
    pop.agents.resize(4);
    for (std::size_t i = 0; i < 4; ++i) pop.agents[i].fitness = f[i];
    pop.best_index = 3;
    CHECK(pop.update_best());
    CHECK(pop.best_index == 1);
    CHECK_FALSE(pop.update_best());
    pop.agents[0].fitness = 1.0;
    CHECK(pop.update_best());
    CHECK(pop.best_index == 0);
}

TEST_CASE("initial population") {
    const auto problem = quadratic(3);
    Evaluator ev(problem);
    RngStream rng(5);
    const auto pop = initial_population(10, ev, rng);
    CHECK(pop.size() == 10);
    CHECK(ev.count() == 10);
    for (const auto& a : pop.agents) {
        CHECK(problem.space.contains(a.position));
        CHECK(a.fitness == problem.objective(a.position));
        CHECK(pop.best().fitness <= a.fitness);
    }
}

TEST_CASE("budget validation") {
    CHECK_THROWS_AS(Budget{}.validate(), ConfigError);
    CHECK_NOTHROW(Budget{0, std::nullopt}.validate());
    CHECK_NOTHROW(Budget{std::nullopt, 100}.validate());
}

TEST_CASE("rng streams") {
    RngStream a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    CHECK(RngStream(42).next_u64() != c.next_u64());

    RngStream u(1);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double x = u.uniform();
        CHECK_UNARY(x >= 0.0 && x < 1.0);
        sum += x;
    }
    CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));

    RngStream g(2);
    double m = 0.0, m2 = 0.0;
    constexpr int kN = 200000;
    for (int i = 0; i < kN; ++i) {
        const double z = g.normal();
        m += z;
        m2 += z * z;
    }
    CHECK(std::abs(m / kN) < 0.01);
    CHECK(m2 / kN == doctest::Approx(1.0).epsilon(0.02));

    RngStream idx(9);
    std::vector<int> counts(7, 0);
    for (int i = 0; i < 70000; ++i) ++counts[idx.uniform_index(7)];
    for (int c7 : counts) CHECK(std::abs(c7 - 10000) < 500);

    RngStream p(4);
    const auto perm = p.permutation(20);
    CHECK(std::set<std::size_t>(perm.begin(), perm.end()).size() == 20);
}

TEST_CASE("normal consumes two raw draws") {
    RngStream a(8), b(8);
    a.normal();
    b.next_u64();
    b.next_u64();
    CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("hash and mixer are fixed functions") {
    // FNV-1a reference values.
    CHECK(fnv1a64("") == 0xCBF29CE484222325ULL);
    CHECK(fnv1a64("a") == 0xAF63DC4C8601EC8CULL);
    // SplitMix64 with state 0: first output.
    CHECK(RngStream(0).next_u64() == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("same_outcome ignores wall time only") {
    RunResult a;
    a.best_position = {1.0};
    a.best_fitness = 2.0;
    a.trace = {3.0, 2.0};
    a.evaluations = 5;
    a.wall_time = 1.0;
    RunResult b = a;
    b.wall_time = 9.0;
    CHECK(same_outcome(a, b));
    b.trace.back() = std::nextafter(2.0, 3.0);
    CHECK_FALSE(same_outcome(a, b));
}
