// The committed example model files are the format's reference: one file per
// technique, each of which must parse, validate and round-trip.

#include <doctest.h>

#include <filesystem>
#include <string>

#include <metaopt/model_file.hpp>

using namespace metaopt;

TEST_CASE("every committed example model file parses and validates") {
    const std::filesystem::path dir = METAOPT_MODELS_DIR;
    for (Technique t : kAllTechniques) {
        const std::filesystem::path path = dir / (std::string(technique_name(t)) + ".txt");
        REQUIRE_MESSAGE(std::filesystem::exists(path), path.string());
        const ModelFile mf = read_model_file(path, t);
        CHECK(mf.technique == t);
        CHECK(mf.m >= 1);
        CHECK(mf.n == 2);
        CHECK(mf.iterations >= 1);
        CHECK(parse_model_file(write_model_file(mf), t) == mf);
        const SearchSpace s = make_search_space(mf);
        CHECK_MESSAGE(check_search_space(s).ok(),
                      (std::string(technique_name(t)) + ": " + check_search_space(s).to_string()));
    }
}
