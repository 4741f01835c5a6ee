#ifndef METAOPT_TOOLS_HARNESS_HPP
#define METAOPT_TOOLS_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <metaopt/run.hpp>
#include <metaopt/search_space.hpp>

namespace metaopt::tools {

/// Flag mistakes (bad seed spec, empty lists); mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(const std::string& name); // throws UsageError

/// "5", "1,2,9" and "1..25" (mixable: "1..3,7"); must be non-empty.
std::vector<std::uint64_t> parse_seeds(const std::string& spec);

/// One technique/function/seed execution.
struct RunRecord {
    std::string technique;
    std::string function;
    std::optional<int> k; ///< hypercomplex dimension; empty for real runs
    std::uint64_t seed = 0;
    RunResult result;
    std::string trace_file;
};

/// Aggregate over the seeds of one technique/function pair.
struct SummaryRow {
    std::string technique;
    std::string function;
    std::optional<int> k;
    int seeds = 0;
    double best = 0.0;
    double median = 0.0;
    double worst = 0.0;
    double mean_evaluations = 0.0;
    double mean_elapsed_seconds = 0.0;
};

/// One unit of sweep/run work: a configured space plus the identifiers the
/// artifacts are tagged with.
struct Job {
    SearchSpace space;
    const ObjectiveFunction* function = nullptr;
    std::string technique_name;
    std::optional<int> k;
    std::uint64_t seed = 0;
};

/// Executes jobs (in parallel across runs when jobs > 1; each run itself is
/// sequential and seed-deterministic) and returns records in job order.
std::vector<RunRecord> execute_jobs(std::vector<Job> jobs, int parallel_jobs);

/// Aggregates records into summary rows, grouped by (technique, function, k)
/// in first-appearance order.
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records);

/// Writes all artifacts for a finished batch: one trace CSV per record
/// (iteration,gfit; one row per iteration), a per-run table ("runs") and the
/// summary table. Every file is written to a temporary name and renamed, and
/// nothing is written until all runs have succeeded. Returns the number of
/// files written.
int write_artifacts(const std::filesystem::path& out_dir, std::vector<RunRecord>& records,
                    const std::vector<SummaryRow>& summary, OutputFormat format,
                    bool write_runs_table);

} // namespace metaopt::tools

#endif
