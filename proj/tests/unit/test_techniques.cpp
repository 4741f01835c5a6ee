#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include <metaopt/functions.hpp>
#include <metaopt/run.hpp>
#include <metaopt/steps.hpp>

#include "../support/test_space.hpp"

using namespace metaopt;

namespace {

const ObjectiveFunction& sphere() { return builtin_catalog().lookup("sphere"); }
const ObjectiveFunction& my_function() { return builtin_catalog().lookup("my_function"); }

/// Drives steps directly, keeping the run-level plumbing (evaluator, rng,
/// state) in one place.
struct Harness {
    SearchSpace space;
    Evaluator eval;
    Rng rng;
    TechniqueState state;
    int iteration = 0;

    Harness(SearchSpace s, const ObjectiveFunction& f, std::uint64_t seed)
        : space(std::move(s)), eval(f), rng(seed), state(init_technique_state(space)) {}

    void step() {
        StepContext ctx{space, eval, rng, state, iteration++};
        technique_step(space.technique, ctx);
        update_global_best(space);
    }
};

/// Fully evaluated space with every agent placed explicitly.
SearchSpace pinned_space(Technique t, const std::vector<std::vector<double>>& positions,
                         double lo, double hi, const ObjectiveFunction& f, int iterations = 100) {
    SearchSpace s = create_search_space(static_cast<int>(positions.size()),
                                        static_cast<int>(positions[0].size()), t);
    s.iterations = iterations;
    set_bounds(s, lo, hi);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        Agent& a = s.agents[i];
        a.x = positions[i];
        evaluate_agent(a, f);
        if (!a.best_x.empty()) {
            a.best_x = a.x;
            a.best_fit = a.fit;
        }
    }
    update_global_best(s);
    return s;
}

double population_min(const SearchSpace& s) {
    double best = worst_fitness();
    for (const auto& a : s.agents) best = std::min(best, a.fit);
    return best;
}

} // namespace

TEST_CASE("pso: a particle at the optimum with zero velocity is a fixed point") {
    SearchSpace s = pinned_space(Technique::PSO, {{0.0, 0.0}}, -5.0, 5.0, sphere());
    Harness h(std::move(s), sphere(), 1);
    h.step();
    CHECK(h.space.agents[0].x == std::vector<double>{0.0, 0.0});
    CHECK(h.space.agents[0].velocity == std::vector<double>{0.0, 0.0});
}

TEST_CASE("pso: positions stay inside the bounds") {
    Rng init(3);
    SearchSpace s = testing::evaluated_space(Technique::PSO, 10, 2, -5.12, 5.12, sphere(), init);
    Harness h(std::move(s), sphere(), 4);
    for (int i = 0; i < 20; ++i) {
        h.step();
        CHECK(testing::within_bounds(h.space));
    }
}

TEST_CASE("aiwpso: the inertia weight hits its endpoints") {
    AiwpsoParams params;
    params.w_min = 0.3;
    params.w_max = 0.9;

    SUBCASE("zero success rate gives w_min") {
        // Everyone sits at the optimum: no personal best can improve.
        SearchSpace s = pinned_space(Technique::AIWPSO, {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
                                     -5.0, 5.0, sphere());
        s.params = params;
        Harness h(std::move(s), sphere(), 7);
        h.step();
        CHECK(h.state.inertia == 0.3);
    }
    SUBCASE("full success rate gives w_max") {
        Rng init(9);
        SearchSpace s =
            testing::evaluated_space(Technique::AIWPSO, 5, 2, -5.12, 5.12, sphere(), init);
        s.params = params;
        for (auto& a : s.agents) a.best_fit = 1e18; // any evaluation improves
        Harness h(std::move(s), sphere(), 8);
        h.step();
        CHECK(h.state.inertia == 0.9);
    }
}

TEST_CASE("ba: loudness never rises and the pulse rate never falls") {
    Rng init(11);
    SearchSpace s = testing::evaluated_space(Technique::BA, 8, 2, -5.12, 5.12, sphere(), init);
    Harness h(std::move(s), sphere(), 12);
    std::vector<double> loudness, pulse;
    for (const auto& a : h.space.agents) {
        loudness.push_back(a.loudness);
        pulse.push_back(a.pulse_rate);
    }
    for (int t = 0; t < 50; ++t) {
        h.step();
        for (int i = 0; i < h.space.m; ++i) {
            const Agent& a = h.space.agents[static_cast<std::size_t>(i)];
            CHECK(a.loudness <= loudness[static_cast<std::size_t>(i)]);
            CHECK(a.pulse_rate >= pulse[static_cast<std::size_t>(i)]);
            loudness[static_cast<std::size_t>(i)] = a.loudness;
            pulse[static_cast<std::size_t>(i)] = a.pulse_rate;
        }
    }
}

TEST_CASE("fpa: both switch-probability endpoints keep the population in bounds") {
    for (double p : {1.0, 0.0}) {
        Rng init(21);
        SearchSpace s = testing::evaluated_space(Technique::FPA, 10, 2, -5.12, 5.12, sphere(), init);
        s.params = FpaParams{p, 1.5};
        Harness h(std::move(s), sphere(), 22);
        for (int t = 0; t < 15; ++t) {
            h.step();
            CHECK(testing::within_bounds(h.space));
        }
    }
}

TEST_CASE("fa: with no randomization the dimmer firefly moves straight at the brighter") {
    SearchSpace s = pinned_space(Technique::FA, {{1.0, 1.0}, {0.0, 0.0}}, -5.0, 5.0, sphere());
    s.params = FaParams{0.0, 1.0, 1.0};
    Harness h(std::move(s), sphere(), 31);
    h.step();
    // Brighter firefly holds still; the dimmer lands at x + e^(-2) (0 - x).
    CHECK(h.space.agents[1].x == std::vector<double>{0.0, 0.0});
    const double expected = 1.0 - std::exp(-2.0);
    CHECK(h.space.agents[0].x[0] == doctest::Approx(expected).epsilon(1e-12));
    CHECK(h.space.agents[0].x[1] == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("fa: infinite absorption leaves only the randomization term") {
    SUBCASE("alpha zero freezes the swarm") {
        SearchSpace s = pinned_space(Technique::FA, {{1.0, 1.0}, {0.0, 0.0}}, -5.0, 5.0, sphere());
        s.params = FaParams{0.0, 1.0, 1e15};
        Harness h(std::move(s), sphere(), 32);
        h.step();
        CHECK(h.space.agents[0].x == std::vector<double>{1.0, 1.0});
    }
    SUBCASE("moves are bounded by the randomization scale") {
        SearchSpace s = pinned_space(Technique::FA, {{1.0, 1.0}, {0.0, 0.0}}, -5.0, 5.0, sphere());
        s.params = FaParams{0.3, 1.0, 1e15};
        Harness h(std::move(s), sphere(), 33);
        h.step();
        // One attraction event, attraction weight 0: |dx| <= alpha * 0.5 * range.
        const double cap = 0.3 * 0.5 * 10.0;
        CHECK(std::fabs(h.space.agents[0].x[0] - 1.0) <= cap);
        CHECK(std::fabs(h.space.agents[0].x[1] - 1.0) <= cap);
    }
}

TEST_CASE("cs: abandonment gate endpoints") {
    SUBCASE("pa = 0 never resamples, so per-nest fitness is monotone") {
        Rng init(41);
        SearchSpace s = testing::evaluated_space(Technique::CS, 8, 2, -5.12, 5.12, sphere(), init);
        s.params = CsParams{0.0, 0.01, 1.5};
        Harness h(std::move(s), sphere(), 42);
        std::vector<double> fits;
        for (const auto& a : h.space.agents) fits.push_back(a.fit);
        for (int t = 0; t < 20; ++t) {
            h.step();
            for (int i = 0; i < h.space.m; ++i) {
                CHECK(h.space.agents[static_cast<std::size_t>(i)].fit <= fits[static_cast<std::size_t>(i)]);
                fits[static_cast<std::size_t>(i)] = h.space.agents[static_cast<std::size_t>(i)].fit;
            }
        }
    }
    SUBCASE("pa = 1 resamples every non-best nest and preserves the best") {
        Rng init(43);
        SearchSpace s = testing::evaluated_space(Technique::CS, 6, 2, -5.12, 5.12, sphere(), init);
        s.params = CsParams{1.0, 0.01, 1.5};
        int best = 0;
        for (int i = 1; i < s.m; ++i) {
            if (s.agents[static_cast<std::size_t>(i)].fit < s.agents[static_cast<std::size_t>(best)].fit)
                best = i;
        }
        const std::vector<std::vector<double>> before = [&] {
            std::vector<std::vector<double>> p;
            for (const auto& a : s.agents) p.push_back(a.x);
            return p;
        }();
        Harness h(std::move(s), sphere(), 44);
        h.step();
        for (int i = 0; i < h.space.m; ++i) {
            if (i == best)
                CHECK(h.space.agents[static_cast<std::size_t>(i)].x == before[static_cast<std::size_t>(i)]);
            else
                CHECK(h.space.agents[static_cast<std::size_t>(i)].x != before[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("bh: the black hole never moves and capture re-initializes") {
    SUBCASE("stars drift coordinate-wise toward the hole when the radius is zero") {
        // Sphere fitness 0 at the hole makes the event horizon vanish.
        SearchSpace s = pinned_space(Technique::BH, {{0.0, 0.0}, {3.0, -4.0}, {-2.0, 2.0}},
                                     -1000.0, 1000.0, sphere());
        const auto before1 = s.agents[1].x;
        const auto before2 = s.agents[2].x;
        Harness h(std::move(s), sphere(), 51);
        h.step();
        CHECK(h.space.agents[0].x == std::vector<double>{0.0, 0.0});
        for (int j = 0; j < 2; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            CHECK(std::fabs(h.space.agents[1].x[ju]) <= std::fabs(before1[ju]));
            CHECK(std::fabs(h.space.agents[2].x[ju]) <= std::fabs(before2[ju]));
        }
    }
    SUBCASE("a star inside the event horizon is re-drawn uniformly") {
        // my_function keeps the hole's fitness at 1, so R = 1 / (1 + 1.01) ~ 0.5
        // while the star starts 0.1 away and can only drift closer.
        SearchSpace s =
            pinned_space(Technique::BH, {{0.0, 0.0}, {0.1, 0.0}}, -1000.0, 1000.0, my_function());
        Harness h(std::move(s), my_function(), 52);
        h.step();
        CHECK(h.space.agents[0].x == std::vector<double>{0.0, 0.0});
        const double dist = std::hypot(h.space.agents[1].x[0], h.space.agents[1].x[1]);
        CHECK(dist > 1.0);
        CHECK(testing::within_bounds(h.space));
    }
}

TEST_CASE("mbo: rotation bookkeeping") {
    MboFormation f;
    f.leader = 0;
    f.left = {1, 3};
    f.right = {2, 4};

    mbo_rotate(f);
    CHECK(f.leader == 1);
    CHECK(f.left == std::vector<int>{3, 0});
    CHECK(f.right == std::vector<int>{2, 4});

    mbo_rotate(f);
    CHECK(f.leader == 2);
    CHECK(f.right == std::vector<int>{4, 1});
    CHECK(f.left == std::vector<int>{3, 0});
}

TEST_CASE("mbo: the leader rotates to a tail after the configured period") {
    Rng init(61);
    SearchSpace s = testing::evaluated_space(Technique::MBO, 6, 2, -5.12, 5.12, sphere(), init);
    s.params = MboParams{3, 1, 4};
    Harness h(std::move(s), sphere(), 62);
    const int first_leader = h.state.formation.leader;
    for (int t = 0; t < 3; ++t) {
        h.step();
        CHECK(h.state.formation.leader == first_leader);
    }
    h.step(); // fourth iteration triggers the rotation
    CHECK(h.state.formation.leader != first_leader);
    CHECK(h.state.formation.left.back() == first_leader);
}

TEST_CASE("abc: trial counters follow the improvement rule") {
    SUBCASE("a stalled population increments one trial per visit") {
        // Every source at the optimum: no candidate can improve, and with all
        // sources equal every candidate equals its source.
        SearchSpace s = pinned_space(Technique::ABC, {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
                                     -5.0, 5.0, sphere());
        Harness h(std::move(s), sphere(), 71);
        h.step();
        int total = 0;
        for (const auto& a : h.space.agents) {
            CHECK(a.trials >= 1);
            total += a.trials;
        }
        CHECK(total == 2 * h.space.m); // employed visits + onlooker visits
    }
    SUBCASE("a source over the limit is abandoned by its scout") {
        SearchSpace s = pinned_space(Technique::ABC, {{0.0, 0.0}, {1.0, 1.0}, {5.0, 5.0}, {2.0, 2.0}},
                                     -5.12, 5.12, sphere());
        s.params = AbcParams{10};
        s.agents[2].trials = 11;
        Harness h(std::move(s), sphere(), 72);
        h.step();
        CHECK(h.space.agents[2].x != std::vector<double>{5.0, 5.0});
        CHECK(h.space.agents[2].trials <= h.space.m);
        CHECK(testing::within_bounds(h.space));
    }
}

TEST_CASE("abc: onlooker selection probabilities form a distribution") {
    const std::vector<double> fits{3.0, -1.0, 0.5, 100.0, 0.0};
    const std::vector<double> probs = abc_selection_probabilities(fits);
    double total = 0.0;
    for (double p : probs) {
        CHECK(p >= 0.0);
        total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    // The negative (best) fitness gets the largest share.
    CHECK(probs[1] > probs[0]);
    CHECK(probs[1] > probs[3]);
}

TEST_CASE("wca: stream allocation sums to the stream count") {
    CHECK(wca_stream_allocation(std::vector<double>{0.0, 1.0, 2.0}, 10) ==
          std::vector<int>{7, 3, 0});

    Rng rng(81);
    for (int trial = 0; trial < 200; ++trial) {
        const int leaders = rng.uniform_int(1, 6);
        const int streams = rng.uniform_int(0, 40);
        std::vector<double> fits;
        double f = rng.uniform(-10.0, 10.0);
        for (int i = 0; i < leaders; ++i) {
            fits.push_back(f);
            if (rng.uniform() < 0.3) continue; // keep some exact ties
            f += rng.uniform(0.0, 3.0);
        }
        const std::vector<int> alloc = wca_stream_allocation(fits, streams);
        CHECK(static_cast<int>(alloc.size()) == leaders);
        int total = 0;
        for (int v : alloc) {
            CHECK(v >= 0);
            total += v;
        }
        CHECK(total == streams);
    }
}

TEST_CASE("wca: a river inside d_max of the sea evaporates and rains") {
    SearchSpace s = pinned_space(Technique::WCA,
                                 {{0.0, 0.0}, {0.1, 0.0}, {100.0, 100.0}, {-200.0, 200.0}},
                                 -1000.0, 1000.0, sphere());
    s.params = WcaParams{2, 0.5};
    Harness h(std::move(s), sphere(), 91);
    const double dmax_before = h.state.wca_dmax;
    h.step();
    CHECK(h.space.agents[0].x == std::vector<double>{0.0, 0.0}); // the sea holds still
    const double dist = std::hypot(h.space.agents[1].x[0], h.space.agents[1].x[1]);
    CHECK(dist > 1.0); // re-drawn uniformly, far from the sea
    CHECK(h.state.wca_dmax < dmax_before);
    CHECK(testing::within_bounds(h.space));
}

TEST_CASE("hs: improvisation endpoints") {
    SUBCASE("hmcr = 1, par = 0 draws every coordinate from memory") {
        SearchSpace s = pinned_space(Technique::HS, {{1.0, 10.0}, {2.0, 20.0}, {3.0, 30.0}},
                                     -100.0, 100.0, sphere());
        s.params = HsParams{1.0, 0.0, 0.1};
        s.agents[2].fit = 1e12; // guarantee the worst slot is replaced
        Harness h(std::move(s), sphere(), 101);
        h.step();
        const Agent& replaced = h.space.agents[2];
        CHECK((replaced.x[0] == 1.0 || replaced.x[0] == 2.0 || replaced.x[0] == 3.0));
        CHECK((replaced.x[1] == 10.0 || replaced.x[1] == 20.0 || replaced.x[1] == 30.0));
        CHECK(h.space.agents[0].x == std::vector<double>{1.0, 10.0});
        CHECK(h.space.agents[1].x == std::vector<double>{2.0, 20.0});
    }
    SUBCASE("hmcr = 0 improvises entirely at random inside the bounds") {
        SearchSpace s = pinned_space(Technique::HS, {{1.0, 10.0}, {2.0, 20.0}, {3.0, 30.0}},
                                     40.0, 60.0, sphere());
        s.params = HsParams{0.0, 0.5, 0.1};
        s.agents[2].fit = 1e12;
        Harness h(std::move(s), sphere(), 102);
        h.step();
        const Agent& replaced = h.space.agents[2];
        for (double v : replaced.x) {
            CHECK(v >= 40.0);
            CHECK(v <= 60.0);
        }
    }
    SUBCASE("a harmony replaces the worst slot only when strictly better") {
        SearchSpace s = pinned_space(Technique::HS, {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
                                     -10.0, 10.0, my_function());
        Harness h(std::move(s), my_function(), 103);
        for (int t = 0; t < 10; ++t) h.step();
        for (const auto& a : h.space.agents) {
            CHECK(a.x == std::vector<double>{0.0, 0.0});
            CHECK(a.fit == 1.0);
        }
    }
}

TEST_CASE("ihs: pitch rate and bandwidth schedules hit their endpoints") {
    IhsParams p;
    p.par_min = 0.2;
    p.par_max = 0.8;
    p.bw_min = 1e-3;
    p.bw_max = 2.0;
    const int total = 40;
    CHECK(ihs_pitch_rate(p, 0, total) == 0.2);
    CHECK(ihs_pitch_rate(p, total - 1, total) == 0.8);
    CHECK(ihs_bandwidth(p, 0, total) == 2.0);
    CHECK(ihs_bandwidth(p, total - 1, total) == doctest::Approx(1e-3).epsilon(1e-12));
    for (int t = 1; t + 1 < total; ++t) {
        CHECK(ihs_pitch_rate(p, t, total) >= ihs_pitch_rate(p, t - 1, total));
        // Exponential decay: consecutive ratios are constant.
        const double r1 = ihs_bandwidth(p, t, total) / ihs_bandwidth(p, t - 1, total);
        const double r2 = ihs_bandwidth(p, t + 1, total) / ihs_bandwidth(p, t, total);
        CHECK(r1 == doctest::Approx(r2).epsilon(1e-9));
    }
    CHECK(ihs_pitch_rate(p, 0, 1) == 0.2); // single-iteration budget degenerates to the start
}

TEST_CASE("psfhs: rates derive exactly from the operation memory") {
    using Op = HsOperation;
    // 5 slots x 3 variables, written row-major.
    const std::vector<Op> otm = {
        Op::Memory, Op::Random, Op::Pitch,  // slot 0
        Op::Memory, Op::Random, Op::Pitch,  // slot 1
        Op::Pitch,  Op::Random, Op::Memory, // slot 2
        Op::Random, Op::Random, Op::Memory, // slot 3
        Op::Random, Op::Random, Op::Memory, // slot 4
    };
    const PsfhsRates rates = psfhs_rates(otm, 5, 3);
    // Column 0: M, M, P, R, R -> hmcr 3/5, par 1/3.
    CHECK(rates.hmcr[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(rates.par[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    // Column 1: all random; the pitch rate sits at its 1/m floor.
    CHECK(rates.hmcr[1] == 0.0);
    CHECK(rates.par[1] == doctest::Approx(0.2).epsilon(1e-15));
    // Column 2: P, P, M, M, M -> hmcr 1, par 2/5.
    CHECK(rates.hmcr[2] == 1.0);
    CHECK(rates.par[2] == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("psfhs: after the rehearsal the adapted rates match the memory") {
    Rng init(111);
    SearchSpace s = testing::evaluated_space(Technique::PSFHS, 4, 3, -5.12, 5.12, sphere(), init);
    Harness h(std::move(s), sphere(), 112);
    for (int t = 0; t < h.space.m + 3; ++t) {
        h.step();
        for (int j = 0; j < h.space.n; ++j) {
            CHECK(h.state.hmcr[static_cast<std::size_t>(j)] >= 0.0);
            CHECK(h.state.hmcr[static_cast<std::size_t>(j)] <= 1.0);
            CHECK(h.state.par[static_cast<std::size_t>(j)] >= 0.0);
            CHECK(h.state.par[static_cast<std::size_t>(j)] <= 1.0);
        }
        if (t + 1 >= h.space.m) {
            const PsfhsRates expected = psfhs_rates(h.state.operation_memory, h.space.m, h.space.n);
            CHECK(h.state.hmcr == expected.hmcr);
            CHECK(h.state.par == expected.par);
        }
    }
}

TEST_CASE("elitism: cs, bh and the harmony family never lose the best solution") {
    const ObjectiveFunction& rastrigin = builtin_catalog().lookup("rastrigin");
    for (Technique t : {Technique::CS, Technique::BH, Technique::HS, Technique::IHS,
                        Technique::PSFHS}) {
        Rng init(121 + static_cast<int>(t));
        SearchSpace s = testing::evaluated_space(t, 10, 2, -5.12, 5.12, rastrigin, init, 30);
        Harness h(std::move(s), rastrigin, 131 + static_cast<int>(t));
        double best = population_min(h.space);
        for (int step = 0; step < 30; ++step) {
            h.step();
            const double now = population_min(h.space);
            CHECK(now <= best);
            best = now;
        }
    }
}

TEST_CASE("every technique performs its documented evaluation count per iteration") {
    for (Technique t : kAllTechniques) {
        Rng init(141 + static_cast<int>(t));
        SearchSpace s = testing::evaluated_space(t, 7, 2, -5.12, 5.12, sphere(), init, 50);
        if (t == Technique::MBO) s.params = MboParams{4, 1, 5};
        if (t == Technique::WCA) s.params = WcaParams{3, 0.05};
        const long long expected = evaluations_per_iteration(s);
        Harness h(std::move(s), sphere(), 151 + static_cast<int>(t));
        for (int step = 0; step < 5; ++step) {
            const long long before = h.eval.count();
            h.step();
            CHECK_MESSAGE(h.eval.count() - before == expected,
                          "technique ", technique_name(t), " step ", step);
        }
    }
}

TEST_CASE("every technique keeps the population in bounds across functions") {
    const char* names[] = {"sphere", "rastrigin", "rosenbrock"};
    for (Technique t : kAllTechniques) {
        for (const char* name : names) {
            const ObjectiveFunction& f = builtin_catalog().lookup(name);
            const auto [lo, hi] = f.suggested_bounds(0);
            Rng init(161);
            SearchSpace s = testing::evaluated_space(t, 8, 2, lo, hi, f, init, 25);
            Harness h(std::move(s), f, 171 + static_cast<int>(t));
            for (int step = 0; step < 25; ++step) {
                h.step();
                CHECK(testing::within_bounds(h.space));
            }
        }
    }
}
