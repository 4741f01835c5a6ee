// Command-line harness: run one technique on one function from a model file,
// sweep techniques x functions x seeds, or list what is available.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <metaopt/error.hpp>
#include <metaopt/functions.hpp>
#include <metaopt/hypercomplex.hpp>
#include <metaopt/model_file.hpp>

#include "harness.hpp"

namespace {

using namespace metaopt;
using namespace metaopt::tools;

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitRuntime = 4;

Technique resolve_technique(const std::string& name) {
    if (const auto t = technique_from_name(name)) return *t;
    std::ostringstream msg;
    msg << "unknown technique '" << name << "'; available:";
    for (Technique t : kAllTechniques) msg << " " << technique_name(t);
    throw Error(msg.str());
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void validate_space_or_throw(const SearchSpace& s) {
    const ValidationReport report = check_search_space(s);
    if (!report) throw Error("invalid configuration: " + report.to_string());
}

struct RunOptions {
    std::string model_path;
    std::string technique;
    std::string function;
    std::string seeds = "1";
    int hypercomplex_k = 0; // 0 = plain real run
    std::string out_dir = "metaopt-out";
    std::string format = "json";
    int jobs = 0;
};

int cmd_run(const RunOptions& opt) {
    const Technique technique = resolve_technique(opt.technique);
    const ObjectiveFunction& function = builtin_catalog().lookup(opt.function);
    const std::vector<std::uint64_t> seeds = parse_seeds(opt.seeds);
    const OutputFormat format = parse_format(opt.format);

    const ModelFile mf = read_model_file(opt.model_path, technique);
    SearchSpace proto = make_search_space(mf);
    validate_space_or_throw(proto);

    std::optional<int> k;
    if (opt.hypercomplex_k > 0) {
        if (!supports_lifting(technique))
            throw Error("technique '" + std::string(technique_name(technique)) +
                        "' has no hypercomplex form");
        k = opt.hypercomplex_k;
    }
    if (!function.accepts_dimension(proto.n))
        throw Error("objective '" + function.name + "' expects dimension " +
                    function.arity_description() + ", model file declares " +
                    std::to_string(proto.n));

    std::vector<Job> jobs;
    jobs.reserve(seeds.size());
    for (std::uint64_t seed : seeds)
        jobs.push_back(Job{proto, &function, std::string(technique_name(technique)), k, seed});

    const int parallel = opt.jobs > 0 ? opt.jobs
                                      : static_cast<int>(std::thread::hardware_concurrency());
    std::vector<RunRecord> records = execute_jobs(std::move(jobs), parallel);
    const std::vector<SummaryRow> summary = summarize(records);
    const int files = write_artifacts(opt.out_dir, records, summary, format, false);
    std::printf("wrote %d files to %s (median final fitness %g)\n", files, opt.out_dir.c_str(),
                summary.front().median);
    return 0;
}

struct SweepOptions {
    std::string techniques;
    std::string functions;
    std::string seeds = "1..5";
    int agents = 20;
    int dim = 2;
    int iterations = 100;
    int hypercomplex_k = 0;
    std::string out_dir = "metaopt-out";
    std::string format = "json";
    int jobs = 0;
};

int cmd_sweep(const SweepOptions& opt) {
    std::vector<std::string> technique_names = split_list(opt.techniques);
    if (opt.techniques == "all") {
        technique_names.clear();
        for (Technique t : kAllTechniques) technique_names.emplace_back(technique_name(t));
    }
    if (technique_names.empty()) throw UsageError("technique list is empty");
    const std::vector<std::string> function_names = split_list(opt.functions);
    if (function_names.empty()) throw UsageError("function list is empty");
    const std::vector<std::uint64_t> seeds = parse_seeds(opt.seeds);
    const OutputFormat format = parse_format(opt.format);
    if (opt.agents < 1 || opt.dim < 1 || opt.iterations < 0)
        throw UsageError("agents/dim must be >= 1 and iterations >= 0");

    // Resolve every name and validate every combination before any run.
    std::vector<Technique> techniques;
    for (const std::string& name : technique_names) techniques.push_back(resolve_technique(name));
    std::vector<const ObjectiveFunction*> functions;
    for (const std::string& name : function_names)
        functions.push_back(&builtin_catalog().lookup(name));

    std::optional<int> k;
    if (opt.hypercomplex_k > 0) k = opt.hypercomplex_k;

    std::vector<Job> jobs;
    for (Technique t : techniques) {
        if (k && !supports_lifting(t))
            throw Error("technique '" + std::string(technique_name(t)) +
                        "' has no hypercomplex form");
        for (const ObjectiveFunction* f : functions) {
            if (!f->accepts_dimension(opt.dim))
                throw Error("objective '" + f->name + "' expects dimension " +
                            f->arity_description() + ", sweep uses " + std::to_string(opt.dim));
            SearchSpace proto = create_search_space(opt.agents, opt.dim, t);
            proto.iterations = opt.iterations;
            std::vector<double> lower, upper;
            for (int j = 0; j < opt.dim; ++j) {
                const auto [lo, hi] = f->suggested_bounds(j);
                lower.push_back(lo);
                upper.push_back(hi);
            }
            set_bounds(proto, lower, upper);
            validate_space_or_throw(proto);
            for (std::uint64_t seed : seeds)
                jobs.push_back(Job{proto, f, std::string(technique_name(t)), k, seed});
        }
    }

    const int parallel = opt.jobs > 0 ? opt.jobs
                                      : static_cast<int>(std::thread::hardware_concurrency());
    std::vector<RunRecord> records = execute_jobs(std::move(jobs), parallel);
    const std::vector<SummaryRow> summary = summarize(records);
    const int files = write_artifacts(opt.out_dir, records, summary, format, true);
    std::printf("wrote %d files to %s (%zu runs, %zu summary rows)\n", files, opt.out_dir.c_str(),
                records.size(), summary.size());
    return 0;
}

std::string schema_description(Technique t) {
    std::string out;
    const std::vector<LineSpec> schema = schema_for(t);
    for (std::size_t i = 0; i < schema.size(); ++i) {
        if (i) out += " | ";
        for (std::size_t f = 0; f < schema[i].fields.size(); ++f) {
            if (f) out += ' ';
            out += '<' + schema[i].fields[f].name + '>';
        }
        if (schema[i].per_variable) out += " (one line per variable)";
    }
    return out;
}

int cmd_list() {
    std::printf("techniques (%zu):\n", kAllTechniques.size());
    for (Technique t : kAllTechniques) {
        std::printf("  %-8s %-14s model file: %s\n", technique_name(t).data(),
                    supports_lifting(t) ? "[hypercomplex]" : "", schema_description(t).c_str());
    }
    std::printf("\nfunctions (%zu):\n", builtin_catalog().size());
    for (const std::string& name : builtin_catalog().names()) {
        const ObjectiveFunction& f = builtin_catalog().lookup(name);
        const auto [lo, hi] = f.suggested_bounds(0);
        std::string optimum = "optimum unknown";
        const int probe = f.arity == ObjectiveFunction::kAnyArity ? std::max(2, f.min_arity)
                                                                  : f.arity;
        if (f.optimum) {
            if (const auto opt = f.optimum(probe)) optimum = "min " + std::to_string(opt->value);
        }
        std::printf("  %-16s d %-4s bounds [%g, %g]  %s\n", f.name.c_str(),
                    f.arity_description().c_str(), lo, hi, optimum.c_str());
    }
    std::printf("\nhypercomplex lifting (--hypercomplex-k) is available for:");
    for (Technique t : lifting_roster()) std::printf(" %s", technique_name(t).data());
    std::printf("\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"metaopt: nature-inspired black-box minimization harness"};
    app.require_subcommand(1);

    RunOptions run_options;
    CLI::App* run = app.add_subcommand("run", "run one technique on one function from a model file");
    run->add_option("--model", run_options.model_path, "model file path")->required();
    run->add_option("--technique", run_options.technique, "technique id (see 'list')")->required();
    run->add_option("--function", run_options.function, "objective name (see 'list')")->required();
    run->add_option("--seeds", run_options.seeds, "seed list or range, e.g. 5 or 1..25 (default 1)");
    run->add_option("--hypercomplex-k", run_options.hypercomplex_k,
                    "coefficients per variable (quaternion 4, octonion 8)")
        ->check(CLI::Range(1, 1 << 16));
    run->add_option("--out", run_options.out_dir, "output directory (default metaopt-out)");
    run->add_option("--format", run_options.format, "summary format: csv or json (default json)");
    run->add_option("--jobs", run_options.jobs, "parallel runs (default: cores)");

    SweepOptions sweep_options;
    CLI::App* sweep = app.add_subcommand("sweep", "cross techniques x functions x seeds");
    sweep->add_option("--techniques", sweep_options.techniques,
                      "comma-separated technique ids, or 'all'")->required();
    sweep->add_option("--functions", sweep_options.functions, "comma-separated objective names")
        ->required();
    sweep->add_option("--seeds", sweep_options.seeds, "seed list or range (default 1..5)");
    sweep->add_option("--agents", sweep_options.agents, "population size (default 20)");
    sweep->add_option("--dim", sweep_options.dim, "decision variables (default 2)");
    sweep->add_option("--iterations", sweep_options.iterations, "iteration budget (default 100)");
    sweep->add_option("--hypercomplex-k", sweep_options.hypercomplex_k,
                      "lift every technique with k coefficients per variable")
        ->check(CLI::Range(1, 1 << 16));
    sweep->add_option("--out", sweep_options.out_dir, "output directory (default metaopt-out)");
    sweep->add_option("--format", sweep_options.format,
                      "summary format: csv or json (default json)");
    sweep->add_option("--jobs", sweep_options.jobs, "parallel runs (default: cores)");

    CLI::App* list = app.add_subcommand("list", "print techniques, schemas and functions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (run->parsed()) return cmd_run(run_options);
        if (sweep->parsed()) return cmd_sweep(sweep_options);
        if (list->parsed()) return cmd_list();
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
