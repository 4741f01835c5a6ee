#include "metaopt/hypercomplex.hpp"

#include <cmath>
#include <sstream>

#include "metaopt/error.hpp"

namespace metaopt {
namespace {

constexpr Technique kRoster[] = {
    Technique::PSO, Technique::AIWPSO, Technique::BA, Technique::FPA,
    Technique::FA,  Technique::CS,     Technique::BH, Technique::ABC,
    Technique::HS,  Technique::IHS,    Technique::PSFHS,
};

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

std::vector<double> span_all(std::span<const double> coefficients, const SearchSpace& proto,
                             int k) {
    std::vector<double> x(static_cast<std::size_t>(proto.n));
    for (int j = 0; j < proto.n; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        x[ju] = span_to_real(coefficients.subspan(static_cast<std::size_t>(j) * k,
                                                  static_cast<std::size_t>(k)),
                             proto.lower[ju], proto.upper[ju]);
        if (proto.integer_valued) {
            x[ju] = std::round(x[ju]);
            if (x[ju] < proto.lower[ju]) x[ju] = proto.lower[ju];
            if (x[ju] > proto.upper[ju]) x[ju] = proto.upper[ju];
        }
    }
    return x;
}

Tensor reshape(std::span<const double> coefficients, int n, int k) {
    Tensor t(n, k);
    for (std::size_t i = 0; i < coefficients.size(); ++i) t.data[i] = coefficients[i];
    return t;
}

} // namespace

double span_to_real(std::span<const double> coefficients, double lb, double ub) {
    double squared = 0.0;
    for (double c : coefficients) {
        const double v = clamp01(c);
        squared += v * v;
    }
    const double ratio = std::sqrt(squared) / std::sqrt(static_cast<double>(coefficients.size()));
    return lb + (ub - lb) * ratio;
}

void init_tensor(SearchSpace& s, const ObjectiveFunction& f, int k, Rng& rng) {
    if (k < 1) throw Error("init_tensor: hypercomplex dimension must be >= 1, got " + std::to_string(k));
    if (static_cast<int>(s.lower.size()) != s.n || static_cast<int>(s.upper.size()) != s.n)
        throw Error("init_tensor: bounds are unset");

    for (auto& a : s.agents) {
        Tensor t(s.n, k);
        for (double& c : t.data) c = rng.uniform();
        for (int j = 0; j < s.n; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            a.x[ju] = span_to_real(t.row(j), s.lower[ju], s.upper[ju]);
        }
        a.tensor = std::move(t);
        evaluate_agent(a, f);
    }
    s.best_fitness = worst_fitness();
    update_global_best(s);
}

std::span<const Technique> lifting_roster() { return kRoster; }

bool supports_lifting(Technique t) {
    for (Technique candidate : kRoster)
        if (candidate == t) return true;
    return false;
}

RunResult lift(const SearchSpace& proto, const ObjectiveFunction& f, int k, std::uint64_t seed,
               const IterationObserver& observer) {
    if (!supports_lifting(proto.technique)) {
        std::ostringstream msg;
        msg << "lift: technique '" << technique_name(proto.technique)
            << "' has no hypercomplex form; supported:";
        for (Technique t : kRoster) msg << " " << technique_name(t);
        throw Error(msg.str());
    }
    if (k < 1) throw Error("lift: hypercomplex dimension must be >= 1, got " + std::to_string(k));
    if (!f.accepts_dimension(proto.n))
        throw Error("lift: objective '" + f.name + "' expects dimension " +
                    f.arity_description() + ", space has " + std::to_string(proto.n));

    // The coefficient-space problem: n*k variables boxed to [0,1], same
    // population, budget and parameters; fitness comes from the spanned
    // real position.
    SearchSpace inner = create_search_space(proto.m, proto.n * k, proto.technique);
    inner.iterations = proto.iterations;
    inner.params = proto.params;
    set_bounds(inner, 0.0, 1.0);

    ObjectiveFunction spanned;
    spanned.name = f.name;
    spanned.arity = proto.n * k;
    spanned.eval = [&proto, &f, k](std::span<const double> coefficients) {
        return f.eval(span_all(coefficients, proto, k));
    };

    RunResult result = optimize(std::move(inner), spanned, seed, observer);
    result.best_tensor = reshape(result.best_position, proto.n, k);
    result.best_position = span_all(result.best_position, proto, k);
    return result;
}

} // namespace metaopt
