#ifndef METAOPT_AGENT_HPP
#define METAOPT_AGENT_HPP

#include <optional>
#include <span>
#include <vector>

#include "metaopt/objective.hpp"

namespace metaopt {

/// Dense row-major matrix holding an agent's hypercomplex coefficients: one
/// row of k coefficients per decision variable.
struct Tensor {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Tensor() = default;
    Tensor(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
    std::span<double> row(int r) { return {data.data() + static_cast<std::size_t>(r) * cols,
                                           static_cast<std::size_t>(cols)}; }
    std::span<const double> row(int r) const {
        return {data.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)};
    }

    bool operator==(const Tensor&) const = default;
};

/// One candidate solution. The trailing members are per-technique state and
/// are only allocated or meaningful for the technique the owning search space
/// was created for (velocity and personal best for the PSO family, velocity
/// and loudness/pulse for BA, the trial counter for ABC). The tensor is
/// present only in hypercomplex runs.
struct Agent {
    int n = 0;
    std::vector<double> x;
    double fit = worst_fitness();

    std::vector<double> velocity;
    std::vector<double> best_x;
    double best_fit = worst_fitness();
    double loudness = 1.0;
    double pulse_rate = 0.0;
    int trials = 0;

    std::optional<Tensor> tensor;

    Agent() = default;
    explicit Agent(int dimensions) : n(dimensions), x(static_cast<std::size_t>(dimensions), 0.0) {}
};

} // namespace metaopt

#endif
