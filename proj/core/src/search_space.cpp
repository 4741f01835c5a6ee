#include "metaopt/search_space.hpp"

#include <cmath>
#include <sstream>

#include "metaopt/error.hpp"

namespace metaopt {
namespace {

bool needs_velocity(Technique t) {
    return t == Technique::PSO || t == Technique::AIWPSO || t == Technique::BA;
}

bool needs_personal_best(Technique t) {
    return t == Technique::PSO || t == Technique::AIWPSO;
}

} // namespace

SearchSpace create_search_space(int m, int n, Technique technique) {
    if (m < 1) throw Error("create_search_space: population size must be >= 1, got " + std::to_string(m));
    if (n < 1) throw Error("create_search_space: dimension must be >= 1, got " + std::to_string(n));

    SearchSpace s;
    s.technique = technique;
    s.m = m;
    s.n = n;
    s.params = default_params(technique);
    s.agents.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        Agent a(n);
        if (needs_velocity(technique)) a.velocity.assign(static_cast<std::size_t>(n), 0.0);
        if (needs_personal_best(technique)) a.best_x.assign(static_cast<std::size_t>(n), 0.0);
        s.agents.push_back(std::move(a));
    }
    s.best_position.assign(static_cast<std::size_t>(n), 0.0);
    return s;
}

void set_bounds(SearchSpace& s, std::span<const double> lower, std::span<const double> upper) {
    if (static_cast<int>(lower.size()) != s.n || static_cast<int>(upper.size()) != s.n)
        throw Error("set_bounds: expected " + std::to_string(s.n) + " bounds per side");
    s.lower.assign(lower.begin(), lower.end());
    s.upper.assign(upper.begin(), upper.end());
}

void set_bounds(SearchSpace& s, double lower, double upper) {
    s.lower.assign(static_cast<std::size_t>(s.n), lower);
    s.upper.assign(static_cast<std::size_t>(s.n), upper);
}

void initialize_search_space(SearchSpace& s, Rng& rng) {
    if (static_cast<int>(s.lower.size()) != s.n || static_cast<int>(s.upper.size()) != s.n)
        throw Error("initialize_search_space: bounds are unset");

    for (auto& a : s.agents) {
        for (int j = 0; j < s.n; ++j) {
            a.x[static_cast<std::size_t>(j)] = rng.uniform(s.lower[static_cast<std::size_t>(j)],
                                                           s.upper[static_cast<std::size_t>(j)]);
        }
        if (s.integer_valued) clamp_to_bounds(a, s);
        a.fit = worst_fitness();
        if (!a.velocity.empty()) a.velocity.assign(a.velocity.size(), 0.0);
        if (!a.best_x.empty()) {
            a.best_x = a.x;
            a.best_fit = worst_fitness();
        }
        if (s.technique == Technique::BA) {
            const auto& p = std::get<BaParams>(s.params);
            a.loudness = p.loudness;
            a.pulse_rate = 0.0; // ramps toward p.pulse_rate over the run
        }
        a.trials = 0;
        a.tensor.reset();
    }
    s.best = 0;
    s.best_fitness = worst_fitness();
    s.best_tensor.reset();
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < issues.size(); ++i) {
        if (i) out << "; ";
        out << issues[i];
    }
    return out.str();
}

ValidationReport check_search_space(const SearchSpace& s) {
    ValidationReport report;
    auto fail = [&](const std::string& msg) { report.issues.push_back(msg); };

    if (s.m < 1) fail("population size must be >= 1");
    if (s.n < 1) fail("dimension must be >= 1");
    // iterations == 0 is a valid zero-budget run: the result is the best of
    // the initial population.
    if (s.iterations < 0) fail("iteration budget must be >= 0");
    if (static_cast<int>(s.agents.size()) != s.m)
        fail("agent count does not match population size");
    if (static_cast<int>(s.lower.size()) != s.n || static_cast<int>(s.upper.size()) != s.n) {
        fail("bounds are unset or sized differently from the dimension");
    } else {
        for (int j = 0; j < s.n; ++j) {
            const double lb = s.lower[static_cast<std::size_t>(j)];
            const double ub = s.upper[static_cast<std::size_t>(j)];
            if (!(lb < ub))
                fail("variable " + std::to_string(j) + ": lower bound " + std::to_string(lb) +
                     " must be strictly below upper bound " + std::to_string(ub));
            if (!std::isfinite(lb) || !std::isfinite(ub))
                fail("variable " + std::to_string(j) + ": bounds must be finite");
        }
    }
    if (technique_of(s.params) != s.technique)
        fail("parameter pack does not match the space's technique");
    for (auto& issue : parameter_issues(s.params, s.m)) fail(issue);
    return report;
}

double evaluate_agent(Agent& a, const ObjectiveFunction& f) {
    const double value = f(a.x);
    a.fit = std::isfinite(value) ? value : worst_fitness();
    return a.fit;
}

void clamp_to_bounds(Agent& a, const SearchSpace& s) {
    for (int j = 0; j < s.n; ++j) {
        double v = a.x[static_cast<std::size_t>(j)];
        if (s.integer_valued) v = std::round(v);
        const double lb = s.lower[static_cast<std::size_t>(j)];
        const double ub = s.upper[static_cast<std::size_t>(j)];
        if (v < lb) v = lb;
        if (v > ub) v = ub;
        a.x[static_cast<std::size_t>(j)] = v;
    }
}

void update_global_best(SearchSpace& s) {
    for (int i = 0; i < s.m; ++i) {
        const Agent& a = s.agents[static_cast<std::size_t>(i)];
        if (a.fit < s.best_fitness) {
            s.best_fitness = a.fit;
            s.best = i;
            s.best_position = a.x;
            if (a.tensor) s.best_tensor = a.tensor;
        }
    }
}

} // namespace metaopt
