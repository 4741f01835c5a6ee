#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include <metaopt/error.hpp>
#include <metaopt/hypercomplex.hpp>

namespace metaopt::tools {
namespace {

std::uint64_t parse_u64(const std::string& token) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw UsageError("invalid seed '" + token + "'");
    return value;
}

std::string format_double(double v) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
    return std::string(buffer, ptr);
}

void atomic_write(const std::filesystem::path& path, const std::string& contents) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + tmp.string() + "'");
        out << contents;
        if (!out) throw Error("failed writing '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

std::string k_label(const std::optional<int>& k) {
    return k ? std::to_string(*k) : std::string("real");
}

std::string trace_name(const RunRecord& r) {
    std::string name = r.technique + "_" + r.function;
    if (r.k) name += "_k" + std::to_string(*r.k);
    name += "_seed" + std::to_string(r.seed) + ".csv";
    return name;
}

nlohmann::ordered_json summary_json(const SummaryRow& row) {
    nlohmann::ordered_json j;
    j["technique"] = row.technique;
    j["function"] = row.function;
    j["k"] = row.k ? nlohmann::ordered_json(*row.k) : nlohmann::ordered_json("real");
    j["seeds"] = row.seeds;
    j["best"] = row.best;
    j["median"] = row.median;
    j["worst"] = row.worst;
    j["mean_evaluations"] = row.mean_evaluations;
    j["mean_elapsed_seconds"] = row.mean_elapsed_seconds;
    return j;
}

nlohmann::ordered_json run_json(const RunRecord& r) {
    nlohmann::ordered_json j;
    j["technique"] = r.technique;
    j["function"] = r.function;
    j["k"] = r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json("real");
    j["seed"] = r.seed;
    j["final_fitness"] = r.result.best_fitness;
    j["evaluations"] = r.result.evaluations;
    j["elapsed_seconds"] = r.result.elapsed_seconds;
    j["trace_file"] = r.trace_file;
    return j;
}

} // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw UsageError("unknown format '" + name + "' (expected csv or json)");
}

std::vector<std::uint64_t> parse_seeds(const std::string& spec) {
    std::vector<std::uint64_t> seeds;
    std::stringstream in(spec);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty()) continue;
        const std::size_t dots = part.find("..");
        if (dots == std::string::npos) {
            seeds.push_back(parse_u64(part));
        } else {
            const std::uint64_t from = parse_u64(part.substr(0, dots));
            const std::uint64_t to = parse_u64(part.substr(dots + 2));
            if (to < from) throw UsageError("descending seed range '" + part + "'");
            if (to - from >= 100000) throw UsageError("seed range '" + part + "' is too large");
            for (std::uint64_t s = from; s <= to; ++s) seeds.push_back(s);
        }
    }
    if (seeds.empty()) throw UsageError("seed list is empty");
    return seeds;
}

std::vector<RunRecord> execute_jobs(std::vector<Job> jobs, int parallel_jobs) {
    std::vector<RunRecord> records(jobs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t index = next.fetch_add(1);
            if (index >= jobs.size() || failed.load()) return;
            Job& job = jobs[index];
            try {
                RunRecord record;
                record.technique = job.technique_name;
                record.function = job.function->name;
                record.k = job.k;
                record.seed = job.seed;
                record.result = job.k ? lift(job.space, *job.function, *job.k, job.seed)
                                      : optimize(job.space, *job.function, job.seed);
                records[index] = std::move(record);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true)) first_error = e.what();
                return;
            }
        }
    };

    const int thread_count = std::max(1, std::min<int>(parallel_jobs, static_cast<int>(jobs.size())));
    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(thread_count));
        for (int i = 0; i < thread_count; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (failed.load()) throw Error("run failed: " + first_error);
    return records;
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records) {
    std::vector<SummaryRow> rows;
    std::vector<std::vector<const RunRecord*>> groups;
    for (const RunRecord& r : records) {
        bool placed = false;
        for (std::size_t g = 0; g < rows.size(); ++g) {
            if (rows[g].technique == r.technique && rows[g].function == r.function &&
                rows[g].k == r.k) {
                groups[g].push_back(&r);
                placed = true;
                break;
            }
        }
        if (!placed) {
            SummaryRow row;
            row.technique = r.technique;
            row.function = r.function;
            row.k = r.k;
            rows.push_back(row);
            groups.push_back({&r});
        }
    }
    for (std::size_t g = 0; g < rows.size(); ++g) {
        std::vector<double> finals;
        double eval_sum = 0.0, elapsed_sum = 0.0;
        for (const RunRecord* r : groups[g]) {
            finals.push_back(r->result.best_fitness);
            eval_sum += static_cast<double>(r->result.evaluations);
            elapsed_sum += r->result.elapsed_seconds;
        }
        std::sort(finals.begin(), finals.end());
        const std::size_t n = finals.size();
        rows[g].seeds = static_cast<int>(n);
        rows[g].best = finals.front();
        rows[g].worst = finals.back();
        rows[g].median = n % 2 ? finals[n / 2] : 0.5 * (finals[n / 2 - 1] + finals[n / 2]);
        rows[g].mean_evaluations = eval_sum / static_cast<double>(n);
        rows[g].mean_elapsed_seconds = elapsed_sum / static_cast<double>(n);
    }
    return rows;
}

int write_artifacts(const std::filesystem::path& out_dir, std::vector<RunRecord>& records,
                    const std::vector<SummaryRow>& summary, OutputFormat format,
                    bool write_runs_table) {
    std::filesystem::create_directories(out_dir);
    int files = 0;

    for (RunRecord& r : records) {
        r.trace_file = trace_name(r);
        std::string csv = "iteration,gfit\n";
        for (std::size_t i = 0; i < r.result.trace.size(); ++i) {
            csv += std::to_string(i + 1);
            csv += ',';
            csv += format_double(r.result.trace[i]);
            csv += '\n';
        }
        atomic_write(out_dir / r.trace_file, csv);
        ++files;
    }

    const char* extension = format == OutputFormat::Csv ? ".csv" : ".json";
    if (write_runs_table) {
        std::string contents;
        if (format == OutputFormat::Json) {
            nlohmann::ordered_json all = nlohmann::ordered_json::array();
            for (const RunRecord& r : records) all.push_back(run_json(r));
            contents = all.dump(2) + "\n";
        } else {
            contents = "technique,function,k,seed,final_fitness,evaluations,elapsed_seconds,"
                       "trace_file\n";
            for (const RunRecord& r : records) {
                contents += r.technique + ',' + r.function + ',' + k_label(r.k) + ',' +
                            std::to_string(r.seed) + ',' + format_double(r.result.best_fitness) +
                            ',' + std::to_string(r.result.evaluations) + ',' +
                            format_double(r.result.elapsed_seconds) + ',' + r.trace_file + '\n';
            }
        }
        atomic_write(out_dir / (std::string("runs") + extension), contents);
        ++files;
    }

    std::string contents;
    if (format == OutputFormat::Json) {
        nlohmann::ordered_json all = nlohmann::ordered_json::array();
        for (const SummaryRow& row : summary) all.push_back(summary_json(row));
        contents = all.dump(2) + "\n";
    } else {
        contents = "technique,function,k,seeds,best,median,worst,mean_evaluations,"
                   "mean_elapsed_seconds\n";
        for (const SummaryRow& row : summary) {
            contents += row.technique + ',' + row.function + ',' + k_label(row.k) + ',' +
                        std::to_string(row.seeds) + ',' + format_double(row.best) + ',' +
                        format_double(row.median) + ',' + format_double(row.worst) + ',' +
                        format_double(row.mean_evaluations) + ',' +
                        format_double(row.mean_elapsed_seconds) + '\n';
        }
    }
    atomic_write(out_dir / (std::string("summary") + extension), contents);
    return files + 1;
}

} // namespace metaopt::tools
