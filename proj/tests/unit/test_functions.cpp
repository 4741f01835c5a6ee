#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <metaopt/error.hpp>
#include <metaopt/functions.hpp>

#include "../support/function_oracles.hpp"

using namespace metaopt;
namespace oracle = metaopt::testing::oracle;

namespace {

std::vector<double> random_point(const ObjectiveFunction& f, int d, std::mt19937_64& gen) {
    std::vector<double> x(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        const auto [lo, hi] = f.suggested_bounds(j);
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        x[static_cast<std::size_t>(j)] = lo + (hi - lo) * u;
    }
    return x;
}

} // namespace

TEST_CASE("the catalog holds at least twenty entries") {
    CHECK(builtin_catalog().size() >= 20);
}

TEST_CASE("catalog names are unique, case-insensitively") {
    BenchmarkCatalog catalog;
    ObjectiveFunction f;
    f.name = "Example";
    f.arity = 1;
    f.eval = [](std::span<const double> x) { return x[0]; };
    f.suggested_bounds = [](int) { return std::pair{0.0, 1.0}; };
    catalog.add(f);
    f.name = "EXAMPLE";
    CHECK_THROWS_AS(catalog.add(f), Error);
    CHECK(catalog.size() == 1);
}

TEST_CASE("every catalog function matches its direct-formula oracle") {
    std::mt19937_64 gen(20240811);
    std::size_t count = 0;
    const oracle::Entry* entries = oracle::all_entries(count);
    for (std::size_t e = 0; e < count; ++e) {
        const ObjectiveFunction& f = builtin_catalog().lookup(entries[e].name);
        std::vector<int> dims;
        if (entries[e].fixed_dimension > 0)
            dims.push_back(entries[e].fixed_dimension);
        else
            dims = {2, 5};
        for (int d : dims) {
            if (!f.accepts_dimension(d)) continue;
            for (int trial = 0; trial < 100; ++trial) {
                const std::vector<double> x = random_point(f, d, gen);
                const double got = f(x);
                const double want = entries[e].fn(x);
                const double tol = 1e-9 * std::max(1.0, std::fabs(want));
                CHECK_MESSAGE(std::fabs(got - want) <= tol,
                              (std::string(entries[e].name) + " disagrees with its oracle"));
            }
        }
    }
}

TEST_CASE("known optima evaluate to their recorded values") {
    for (const std::string& name : builtin_catalog().names()) {
        const ObjectiveFunction& f = builtin_catalog().lookup(name);
        for (int d : {1, 2, 5}) {
            if (!f.accepts_dimension(d) || !f.optimum) continue;
            const auto opt = f.optimum(d);
            if (!opt) continue;
            CHECK_MESSAGE(std::fabs(f(opt->position) - opt->value) < 1e-12,
                          (name + " optimum mismatch at d=" + std::to_string(d)));
        }
    }
}

TEST_CASE("evaluations are pure") {
    std::mt19937_64 gen(7);
    for (const char* name : {"rastrigin", "ackley", "griewank", "michalewicz"}) {
        const ObjectiveFunction& f = builtin_catalog().lookup(name);
        for (int point = 0; point < 4; ++point) {
            const std::vector<double> x = random_point(f, 4, gen);
            const double first = f(x);
            for (int i = 0; i < 250; ++i) CHECK(f(x) == first);
        }
    }
}

TEST_CASE("my_function reproduces its worked examples") {
    const ObjectiveFunction& f = builtin_catalog().lookup("my_function");
    CHECK(f(std::vector<double>{0.0, 0.0}) == 1.0);
    CHECK(f(std::vector<double>{3.0, 4.0}) == 26.0);
    CHECK(f(std::vector<double>{-10.0, 10.0}) == 201.0);
    CHECK_THROWS_AS(f(std::vector<double>{1.0}), Error);
    CHECK_THROWS_AS(f(std::vector<double>{1.0, 2.0, 3.0}), Error);
}

TEST_CASE("fixed-arity functions reject other dimensions") {
    const ObjectiveFunction& f = builtin_catalog().lookup("booth");
    CHECK_THROWS_AS(f(std::vector<double>{1.0, 2.0, 3.0}), Error);
    const ObjectiveFunction& r = builtin_catalog().lookup("rosenbrock");
    CHECK_THROWS_AS(r(std::vector<double>{1.0}), Error); // needs at least two variables
}

TEST_CASE("lookup is case-insensitive and suggests near matches") {
    CHECK(builtin_catalog().lookup("SPHERE").name == "sphere");
    CHECK(builtin_catalog().lookup("Sphere").name == "sphere");
    CHECK(builtin_catalog().find("nonexistent_xyz") == nullptr);
    try {
        builtin_catalog().lookup("speher");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("sphere") != std::string::npos);
    }
}

TEST_CASE("rosenbrock agrees with a hand evaluation at (1.2, 1.2)") {
    const ObjectiveFunction& f = builtin_catalog().lookup("rosenbrock");
    const std::vector<double> x{1.2, 1.2};
    CHECK(f(x) == doctest::Approx(oracle::rosenbrock(x)).epsilon(1e-12));
    // 100 (1.2 - 1.44)^2 + 0.2^2
    CHECK(f(x) == doctest::Approx(5.8).epsilon(1e-12));
}
