#include "metaopt/functions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "metaopt/error.hpp"

namespace metaopt {
namespace {

using std::numbers::e;
using std::numbers::pi;

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

int edit_distance(std::string_view a, std::string_view b) {
    std::vector<int> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = static_cast<int>(i);
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

std::pair<double, double> interval(double lo, double hi) { return {lo, hi}; }

ObjectiveFunction make(std::string name, int arity, int min_arity,
                       std::function<double(std::span<const double>)> eval,
                       std::function<std::optional<Optimum>(int)> optimum, double lo, double hi) {
    ObjectiveFunction f;
    f.name = std::move(name);
    f.arity = arity;
    f.min_arity = min_arity;
    f.eval = std::move(eval);
    f.optimum = std::move(optimum);
    f.suggested_bounds = [lo, hi](int) { return interval(lo, hi); };
    return f;
}

std::optional<Optimum> at_origin(int d, double value) {
    return Optimum{std::vector<double>(static_cast<std::size_t>(d), 0.0), value};
}

std::optional<Optimum> constant_point(int d, double coordinate, double per_dim_value) {
    return Optimum{std::vector<double>(static_cast<std::size_t>(d), coordinate),
                   per_dim_value * d};
}

BenchmarkCatalog build_catalog() {
    BenchmarkCatalog c;
    const int any = ObjectiveFunction::kAnyArity;

    // sphere: f(x) = sum x_i^2, min 0 at the origin
    c.add(make(
        "sphere", any, 1,
        [](std::span<const double> x) {
            double s = 0.0;
            for (double v : x) s += v * v;
            return s;
        },
        [](int d) { return at_origin(d, 0.0); }, -5.12, 5.12));

    // rastrigin: f(x) = 10 d + sum (x_i^2 - 10 cos(2 pi x_i)), min 0 at the origin
    c.add(make(
        "rastrigin", any, 1,
        [](std::span<const double> x) {
            double s = 10.0 * static_cast<double>(x.size());
            for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v);
            return s;
        },
        [](int d) { return at_origin(d, 0.0); }, -5.12, 5.12));

    // rosenbrock: f(x) = sum_{i<d-1} [100 (x_{i+1} - x_i^2)^2 + (1 - x_i)^2], min 0 at (1,...,1)
    c.add(make(
        "rosenbrock", any, 2,
        [](std::span<const double> x) {
            double s = 0.0;
            for (std::size_t i = 0; i + 1 < x.size(); ++i) {
                const double a = x[i + 1] - x[i] * x[i];
                const double b = 1.0 - x[i];
                s += 100.0 * a * a + b * b;
            }
            return s;
        },
        [](int d) { return constant_point(d, 1.0, 0.0); }, -2.048, 2.048));

    // ackley: f(x) = -20 exp(-0.2 sqrt(mean x_i^2)) - exp(mean cos(2 pi x_i)) + 20 + e
    c.add(make(
        "ackley", any, 1,
        [](std::span<const double> x) {
            const double d = static_cast<double>(x.size());
            double sq = 0.0, cs = 0.0;
            for (double v : x) {
                sq += v * v;
                cs += std::cos(2.0 * pi * v);
            }
            return -20.0 * std::exp(-0.2 * std::sqrt(sq / d)) - std::exp(cs / d) + 20.0 + e;
        },
        [](int d) { return at_origin(d, 0.0); }, -32.768, 32.768));

    // griewank: f(x) = sum x_i^2 / 4000 - prod cos(x_i / sqrt(i)) + 1, i 1-based
    c.add(make(
        "griewank", any, 1,
        [](std::span<const double> x) {
            double s = 0.0, p = 1.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                s += x[i] * x[i] / 4000.0;
                p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
            }
            return s - p + 1.0;
        },
        [](int d) { return at_origin(d, 0.0); }, -600.0, 600.0));

    // schwefel 2.26: f(x) = 418.9828872724337 d - sum x_i sin(sqrt(|x_i|)),
    // min ~0 at x_i = 420.96874635998205
    c.add(make(
        "schwefel_226", any, 1,
        [](std::span<const double> x) {
            double s = 418.9828872724337 * static_cast<double>(x.size());
            for (double v : x) s -= v * std::sin(std::sqrt(std::fabs(v)));
            return s;
        },
        [](int d) { return constant_point(d, 420.96874635998205, 0.0); }, -500.0, 500.0));

    // levy: w_i = 1 + (x_i - 1)/4,
    // f = sin^2(pi w_1) + sum_{i<d} (w_i-1)^2 [1 + 10 sin^2(pi w_i + 1)]
    //     + (w_d-1)^2 [1 + sin^2(2 pi w_d)], min 0 at (1,...,1)
    c.add(make(
        "levy", any, 1,
        [](std::span<const double> x) {
            auto w = [&](std::size_t i) { return 1.0 + (x[i] - 1.0) / 4.0; };
            const std::size_t d = x.size();
            double s = std::sin(pi * w(0)) * std::sin(pi * w(0));
            for (std::size_t i = 0; i + 1 < d; ++i) {
                const double wi = w(i);
                const double t = std::sin(pi * wi + 1.0);
                s += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * t * t);
            }
            const double wd = w(d - 1);
            const double t = std::sin(2.0 * pi * wd);
            s += (wd - 1.0) * (wd - 1.0) * (1.0 + t * t);
            return s;
        },
        [](int d) { return constant_point(d, 1.0, 0.0); }, -10.0, 10.0));

    // zakharov: f(x) = sum x_i^2 + (sum 0.5 i x_i)^2 + (sum 0.5 i x_i)^4, i 1-based
    c.add(make(
        "zakharov", any, 1,
        [](std::span<const double> x) {
            double sq = 0.0, lin = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                sq += x[i] * x[i];
                lin += 0.5 * static_cast<double>(i + 1) * x[i];
            }
            return sq + lin * lin + lin * lin * lin * lin;
        },
        [](int d) { return at_origin(d, 0.0); }, -5.0, 10.0));

    // styblinski-tang: f(x) = 0.5 sum (x_i^4 - 16 x_i^2 + 5 x_i),
    // min -39.16616570377141546 d at x_i = -2.903534027771177
    c.add(make(
        "styblinski_tang", any, 1,
        [](std::span<const double> x) {
            double s = 0.0;
            for (double v : x) s += v * v * v * v - 16.0 * v * v + 5.0 * v;
            return 0.5 * s;
        },
        [](int d) { return constant_point(d, -2.903534027771177, -39.16616570377141546); },
        -5.0, 5.0));

    // sum of squares: f(x) = sum i x_i^2, i 1-based, min 0 at the origin
    c.add(make(
        "sum_squares", any, 1,
        [](std::span<const double> x) {
            double s = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i)
                s += static_cast<double>(i + 1) * x[i] * x[i];
            return s;
        },
        [](int d) { return at_origin(d, 0.0); }, -10.0, 10.0));

    // dixon-price: f(x) = (x_1 - 1)^2 + sum_{i=2..d} i (2 x_i^2 - x_{i-1})^2,
    // min 0 at x_i = 2^(-(2^i - 2) / 2^i)
    c.add(make(
        "dixon_price", any, 2,
        [](std::span<const double> x) {
            double s = (x[0] - 1.0) * (x[0] - 1.0);
            for (std::size_t i = 1; i < x.size(); ++i) {
                const double t = 2.0 * x[i] * x[i] - x[i - 1];
                s += static_cast<double>(i + 1) * t * t;
            }
            return s;
        },
        [](int d) {
            Optimum o;
            o.value = 0.0;
            for (int i = 1; i <= d; ++i) {
                const double p = std::pow(2.0, static_cast<double>(i));
                o.position.push_back(std::pow(2.0, -(p - 2.0) / p));
            }
            return std::optional<Optimum>(std::move(o));
        },
        -10.0, 10.0));

    // michalewicz (steepness 10): f(x) = -sum sin(x_i) sin^20(i x_i^2 / pi), i 1-based;
    // the two-dimensional optimum is -1.8013034100985525
    c.add(make(
        "michalewicz", any, 1,
        [](std::span<const double> x) {
            double s = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                const double t = std::sin(static_cast<double>(i + 1) * x[i] * x[i] / pi);
                s -= std::sin(x[i]) * std::pow(t, 20.0);
            }
            return s;
        },
        [](int d) -> std::optional<Optimum> {
            if (d != 2) return std::nullopt;
            return Optimum{{2.2029055201726093, 1.5707963267948966}, -1.8013034100985525};
        },
        0.0, pi));

    // booth: f(x, y) = (x + 2y - 7)^2 + (2x + y - 5)^2, min 0 at (1, 3)
    c.add(make(
        "booth", 2, 2,
        [](std::span<const double> x) {
            const double a = x[0] + 2.0 * x[1] - 7.0;
            const double b = 2.0 * x[0] + x[1] - 5.0;
            return a * a + b * b;
        },
        [](int) { return std::optional<Optimum>(Optimum{{1.0, 3.0}, 0.0}); }, -10.0, 10.0));

    // beale: f(x, y) = (1.5 - x + xy)^2 + (2.25 - x + xy^2)^2 + (2.625 - x + xy^3)^2,
    // min 0 at (3, 0.5)
    c.add(make(
        "beale", 2, 2,
        [](std::span<const double> x) {
            const double a = 1.5 - x[0] + x[0] * x[1];
            const double b = 2.25 - x[0] + x[0] * x[1] * x[1];
            const double d = 2.625 - x[0] + x[0] * x[1] * x[1] * x[1];
            return a * a + b * b + d * d;
        },
        [](int) { return std::optional<Optimum>(Optimum{{3.0, 0.5}, 0.0}); }, -4.5, 4.5));

    // matyas: f(x, y) = 0.26 (x^2 + y^2) - 0.48 xy, min 0 at the origin
    c.add(make(
        "matyas", 2, 2,
        [](std::span<const double> x) {
            return 0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1];
        },
        [](int) { return std::optional<Optimum>(Optimum{{0.0, 0.0}, 0.0}); }, -10.0, 10.0));

    // himmelblau: f(x, y) = (x^2 + y - 11)^2 + (x + y^2 - 7)^2; four global minima
    // at value 0, (3, 2) being the canonical one
    c.add(make(
        "himmelblau", 2, 2,
        [](std::span<const double> x) {
            const double a = x[0] * x[0] + x[1] - 11.0;
            const double b = x[0] + x[1] * x[1] - 7.0;
            return a * a + b * b;
        },
        [](int) { return std::optional<Optimum>(Optimum{{3.0, 2.0}, 0.0}); }, -5.0, 5.0));

    // easom: f(x, y) = -cos(x) cos(y) exp(-((x - pi)^2 + (y - pi)^2)), min -1 at (pi, pi)
    c.add(make(
        "easom", 2, 2,
        [](std::span<const double> x) {
            const double dx = x[0] - pi;
            const double dy = x[1] - pi;
            return -std::cos(x[0]) * std::cos(x[1]) * std::exp(-(dx * dx + dy * dy));
        },
        [](int) { return std::optional<Optimum>(Optimum{{pi, pi}, -1.0}); }, -100.0, 100.0));

    // branin: f(x, y) = (y - 5.1 x^2 / (4 pi^2) + 5 x / pi - 6)^2
    //                   + 10 (1 - 1/(8 pi)) cos(x) + 10, min 0.3978873577297383
    {
        ObjectiveFunction f;
        f.name = "branin";
        f.arity = 2;
        f.min_arity = 2;
        f.eval = [](std::span<const double> x) {
            const double b = 5.1 / (4.0 * pi * pi);
            const double c2 = 5.0 / pi;
            const double t = 1.0 / (8.0 * pi);
            const double a = x[1] - b * x[0] * x[0] + c2 * x[0] - 6.0;
            return a * a + 10.0 * (1.0 - t) * std::cos(x[0]) + 10.0;
        };
        f.optimum = [](int) {
            return std::optional<Optimum>(Optimum{{pi, 2.275}, 0.3978873577297383});
        };
        f.suggested_bounds = [](int j) { return j == 0 ? interval(-5.0, 10.0) : interval(0.0, 15.0); };
        c.add(std::move(f));
    }

    // goldstein-price, min 3 at (0, -1)
    c.add(make(
        "goldstein_price", 2, 2,
        [](std::span<const double> v) {
            const double x = v[0], y = v[1];
            const double a = x + y + 1.0;
            const double b = 19.0 - 14.0 * x + 3.0 * x * x - 14.0 * y + 6.0 * x * y + 3.0 * y * y;
            const double c2 = 2.0 * x - 3.0 * y;
            const double d = 18.0 - 32.0 * x + 12.0 * x * x + 48.0 * y - 36.0 * x * y + 27.0 * y * y;
            return (1.0 + a * a * b) * (30.0 + c2 * c2 * d);
        },
        [](int) { return std::optional<Optimum>(Optimum{{0.0, -1.0}, 3.0}); }, -2.0, 2.0));

    // six-hump camel: f(x, y) = (4 - 2.1 x^2 + x^4/3) x^2 + xy + (-4 + 4 y^2) y^2,
    // min -1.0316284534898774
    {
        ObjectiveFunction f;
        f.name = "six_hump_camel";
        f.arity = 2;
        f.min_arity = 2;
        f.eval = [](std::span<const double> v) {
            const double x = v[0], y = v[1];
            return (4.0 - 2.1 * x * x + x * x * x * x / 3.0) * x * x + x * y +
                   (-4.0 + 4.0 * y * y) * y * y;
        };
        f.optimum = [](int) {
            return std::optional<Optimum>(
                Optimum{{0.08984201310031806, -0.7126564030207396}, -1.0316284534898774});
        };
        f.suggested_bounds = [](int j) { return j == 0 ? interval(-3.0, 3.0) : interval(-2.0, 2.0); };
        c.add(std::move(f));
    }

    // my_function: f(x, y) = x^2 + y^2 + 1, min 1 at the origin
    c.add(make(
        "my_function", 2, 2,
        [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1] + 1.0; },
        [](int) { return std::optional<Optimum>(Optimum{{0.0, 0.0}, 1.0}); }, -10.0, 10.0));

    return c;
}

} // namespace

void BenchmarkCatalog::add(ObjectiveFunction f) {
    const std::string key = to_lower(f.name);
    if (entries_.contains(key))
        throw Error("catalog already contains a function named '" + f.name + "'");
    entries_.emplace(key, std::move(f));
}

const ObjectiveFunction* BenchmarkCatalog::find(std::string_view name) const {
    const auto it = entries_.find(to_lower(name));
    return it == entries_.end() ? nullptr : &it->second;
}

const ObjectiveFunction& BenchmarkCatalog::lookup(std::string_view name) const {
    if (const ObjectiveFunction* f = find(name)) return *f;

    const std::string key = to_lower(name);
    std::vector<std::pair<int, std::string>> ranked;
    for (const auto& [entry_key, f] : entries_)
        ranked.emplace_back(edit_distance(key, entry_key), f.name);
    std::sort(ranked.begin(), ranked.end());

    std::ostringstream msg;
    msg << "unknown function '" << name << "'";
    std::string sep = "; did you mean ";
    for (std::size_t i = 0; i < ranked.size() && i < 3; ++i) {
        if (ranked[i].first <= 3) {
            msg << sep << "'" << ranked[i].second << "'";
            sep = ", ";
        }
    }
    msg << "?";
    throw Error(msg.str());
}

std::vector<std::string> BenchmarkCatalog::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [key, f] : entries_) out.push_back(f.name);
    return out;
}

const BenchmarkCatalog& builtin_catalog() {
    static const BenchmarkCatalog catalog = build_catalog();
    return catalog;
}

} // namespace metaopt
