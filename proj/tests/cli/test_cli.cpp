// End-to-end tests for the command-line harness: each case invokes the built
// binary in a scratch directory and inspects exit codes and artifacts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_root() {
    static const fs::path root = [] {
        fs::path p = fs::temp_directory_path() /
                     ("metaopt_cli_test_" + std::to_string(::getpid()));
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return root;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

CliResult run_cli(const std::string& args) {
    const fs::path out_file = scratch_root() / "stdout.txt";
    const fs::path err_file = scratch_root() / "stderr.txt";
    const std::string command = std::string(METAOPT_CLI_PATH) + " " + args + " >" +
                                out_file.string() + " 2>" + err_file.string();
    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    return result;
}

fs::path write_pso_model() {
    const fs::path path = scratch_root() / "pso_model.txt";
    std::ofstream out(path);
    out << "10 2 100 #<n_particles> <dimension> <max_iterations>\n"
           "1.7 1.7 #<c1> <c2>\n"
           "0.7 0.0 0.0 #<w> <w_min> <w_max>\n"
           "-10 10 #<LB> <UB> x[0]\n"
           "-10 10 #<LB> <UB> x[1]\n";
    return path;
}

fs::path write_hs_model() {
    const fs::path path = scratch_root() / "hs_model.txt";
    std::ofstream out(path);
    out << "10 2 400\n0.9 0.3 0.1 #<HMCR> <PAR> <rho>\n-5.12 5.12\n-5.12 5.12\n";
    return path;
}

std::vector<double> trace_column(const fs::path& file, std::size_t* rows = nullptr) {
    std::ifstream in(file);
    std::string line;
    std::getline(in, line); // header
    REQUIRE(line == "iteration,gfit");
    std::vector<double> gfit;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        gfit.push_back(std::stod(line.substr(comma + 1)));
    }
    if (rows) *rows = gfit.size();
    return gfit;
}

json without_timing(json value) {
    for (auto& row : value) {
        row.erase("mean_elapsed_seconds");
        row.erase("elapsed_seconds");
    }
    return value;
}

} // namespace

TEST_CASE("run produces per-seed traces and a consistent summary") {
    const fs::path model = write_pso_model();
    const fs::path out_dir = scratch_root() / "run_out";
    const CliResult r = run_cli("run --model " + model.string() +
                                " --function my_function --technique pso --seeds 1..25 --out " +
                                out_dir.string());
    CAPTURE(r.err);
    REQUIRE(r.exit_code == 0);

    std::vector<fs::path> traces;
    for (const auto& entry : fs::directory_iterator(out_dir)) {
        if (entry.path().filename().string().rfind("pso_my_function_seed", 0) == 0)
            traces.push_back(entry.path());
    }
    CHECK(traces.size() == 25);

    std::vector<double> finals;
    for (const fs::path& trace : traces) {
        std::size_t rows = 0;
        const std::vector<double> gfit = trace_column(trace, &rows);
        CHECK(rows == 100); // one row per iteration
        for (std::size_t i = 1; i < gfit.size(); ++i) CHECK(gfit[i] <= gfit[i - 1]);
        finals.push_back(gfit.back());
    }

    const json summary = json::parse(slurp(out_dir / "summary.json"));
    REQUIRE(summary.size() == 1);
    const json& row = summary[0];
    CHECK(row["technique"] == "pso");
    CHECK(row["function"] == "my_function");
    CHECK(row["k"] == "real");
    CHECK(row["seeds"] == 25);

    std::sort(finals.begin(), finals.end());
    CHECK(row["best"].get<double>() == finals.front());
    CHECK(row["worst"].get<double>() == finals.back());
    CHECK(row["median"].get<double>() == finals[12]); // odd count: the middle element

    CHECK(row["median"].get<double>() <= 1.01); // optimum of my_function is 1
}

TEST_CASE("a failing run leaves the output directory untouched") {
    const fs::path model = write_pso_model();
    const fs::path out_dir = scratch_root() / "never_created";
    const CliResult r = run_cli("run --model " + model.string() +
                                " --function speher --technique pso --out " + out_dir.string());
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("sphere") != std::string::npos); // suggestion for the typo
    CHECK_FALSE(fs::exists(out_dir));
}

TEST_CASE("unusable flags exit with the usage code") {
    const fs::path model = write_pso_model();
    CHECK(run_cli("run --model " + model.string() +
                  " --function sphere --technique pso --seeds nope").exit_code == 2);
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);
    CHECK(run_cli("sweep --techniques= --functions sphere").exit_code == 2);
    CHECK(run_cli("run --model " + model.string() +
                  " --function sphere --technique pso --hypercomplex-k 0").exit_code == 2);
}

TEST_CASE("a malformed model file is a validation failure") {
    const fs::path bad = scratch_root() / "bad_model.txt";
    std::ofstream(bad) << "10 2\n1.7 1.7\n";
    const CliResult r = run_cli("run --model " + bad.string() +
                                " --function sphere --technique pso");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("line") != std::string::npos);
}

TEST_CASE("hypercomplex runs tag their artifacts with k") {
    const fs::path model = write_hs_model();
    const fs::path out_dir = scratch_root() / "lifted_out";
    const CliResult r = run_cli("run --model " + model.string() +
                                " --function sphere --technique hs --seeds 1..3"
                                " --hypercomplex-k 4 --out " + out_dir.string());
    CAPTURE(r.err);
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(out_dir / "hs_sphere_k4_seed1.csv"));
    CHECK(fs::exists(out_dir / "hs_sphere_k4_seed3.csv"));
    const json summary = json::parse(slurp(out_dir / "summary.json"));
    CHECK(summary[0]["k"] == 4);

    // Lifting MBO must fail fast.
    const fs::path mbo_model = scratch_root() / "mbo_model.txt";
    std::ofstream(mbo_model) << "6 2 50\n3 1 10 #<k> <x> <leader_period>\n-5 5\n-5 5\n";
    const CliResult rejected = run_cli("run --model " + mbo_model.string() +
                                       " --function sphere --technique mbo --hypercomplex-k 4");
    CHECK(rejected.exit_code == 3);
}

TEST_CASE("sweep crosses techniques x functions x seeds") {
    const fs::path out_dir = scratch_root() / "sweep_out";
    const CliResult r = run_cli("sweep --techniques all --functions sphere --seeds 1..5"
                                " --agents 10 --iterations 30 --out " + out_dir.string());
    CAPTURE(r.err);
    REQUIRE(r.exit_code == 0);

    const json runs = json::parse(slurp(out_dir / "runs.json"));
    CHECK(runs.size() == 13 * 5); // 65 rows, one per run
    std::set<std::string> techniques;
    for (const auto& row : runs) {
        techniques.insert(row["technique"].get<std::string>());
        const std::vector<double> gfit =
            trace_column(out_dir / row["trace_file"].get<std::string>());
        CHECK(gfit.size() == 30);
        for (std::size_t i = 1; i < gfit.size(); ++i) CHECK(gfit[i] <= gfit[i - 1]);
    }
    CHECK(techniques.size() == 13);

    const json summary = json::parse(slurp(out_dir / "summary.json"));
    CHECK(summary.size() == 13);
    for (const auto& row : summary) {
        CHECK(row["seeds"] == 5);
        CHECK(row["best"].get<double>() <= row["median"].get<double>());
        CHECK(row["median"].get<double>() <= row["worst"].get<double>());
    }
}

TEST_CASE("sweep reruns are identical apart from timing columns") {
    const fs::path a = scratch_root() / "repeat_a";
    const fs::path b = scratch_root() / "repeat_b";
    const std::string args = "sweep --techniques pso,hs,cs --functions sphere,rastrigin"
                             " --seeds 1..3 --agents 8 --iterations 20 --jobs 4 --out ";
    REQUIRE(run_cli(args + a.string()).exit_code == 0);
    REQUIRE(run_cli(args + b.string()).exit_code == 0);

    CHECK(without_timing(json::parse(slurp(a / "summary.json"))) ==
          without_timing(json::parse(slurp(b / "summary.json"))));
    CHECK(without_timing(json::parse(slurp(a / "runs.json"))) ==
          without_timing(json::parse(slurp(b / "runs.json"))));
    // Trace files are byte-identical.
    CHECK(slurp(a / "pso_sphere_seed1.csv") == slurp(b / "pso_sphere_seed1.csv"));
    CHECK(slurp(a / "hs_rastrigin_seed3.csv") == slurp(b / "hs_rastrigin_seed3.csv"));
}

TEST_CASE("csv format mirrors the summary fields") {
    const fs::path model = write_hs_model();
    const fs::path out_dir = scratch_root() / "csv_out";
    REQUIRE(run_cli("run --model " + model.string() +
                    " --function sphere --technique hs --seeds 1..4 --format csv --out " +
                    out_dir.string()).exit_code == 0);
    const std::string csv = slurp(out_dir / "summary.csv");
    CHECK(csv.rfind("technique,function,k,seeds,best,median,worst,mean_evaluations,"
                    "mean_elapsed_seconds\n", 0) == 0);
    CHECK(csv.find("hs,sphere,real,4,") != std::string::npos);
}

TEST_CASE("list names every technique, schema and function") {
    const CliResult r = run_cli("list");
    REQUIRE(r.exit_code == 0);
    for (const char* name : {"pso", "aiwpso", "ba", "fpa", "fa", "cs", "bh", "mbo", "abc", "wca",
                             "hs", "ihs", "psfhs"})
        CHECK(r.out.find(name) != std::string::npos);
    CHECK(r.out.find("sphere") != std::string::npos);
    CHECK(r.out.find("5.12") != std::string::npos);
    CHECK(r.out.find("<HMCR> <PAR> <rho>") != std::string::npos);
    CHECK(r.out.find("[hypercomplex]") != std::string::npos);
    // MBO and WCA are the two techniques without a hypercomplex form.
    const auto lifting_line = r.out.substr(r.out.find("hypercomplex lifting"));
    CHECK(lifting_line.find("mbo") == std::string::npos);
    CHECK(lifting_line.find("wca") == std::string::npos);
}
