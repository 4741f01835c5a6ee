#ifndef METAOPT_MODEL_FILE_HPP
#define METAOPT_MODEL_FILE_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metaopt/error.hpp"
#include "metaopt/search_space.hpp"
#include "metaopt/technique.hpp"

namespace metaopt {

// A model file is the plain-text configuration for one technique:
// whitespace-separated numeric fields, everything from '#' to the end of a
// line ignored, blank lines skipped, LF or CRLF endings. The first content
// line is always "<m> <n> <iterations>", followed by the technique's
// parameter lines in the order given by schema_for, and finally one
// "<LB> <UB>" line per decision variable.

/// Parsed model-file contents.
struct ModelFile {
    Technique technique = Technique::PSO;
    int m = 0;
    int n = 0;
    int iterations = 0;
    TechniqueParams params;
    std::vector<std::pair<double, double>> bounds; ///< n (LB, UB) pairs

    bool operator==(const ModelFile&) const = default;
};

/// One numeric field of a model-file line. Integer fields reject decimal
/// notation; real fields accept either.
struct FieldSpec {
    std::string name;
    bool is_integer = false;
};

/// One content line. per_variable marks the trailing bounds line, which
/// repeats n times.
struct LineSpec {
    std::vector<FieldSpec> fields;
    bool per_variable = false;
};

/// The technique's full line layout, header and bounds lines included. This
/// is the single source of truth driving the parser, the writer and the CLI
/// schema listing.
std::vector<LineSpec> schema_for(Technique technique);

/// Parses model-file text. Errors (wrong field count, non-numeric or
/// non-integral tokens, missing bounds lines, LB >= UB, trailing content)
/// raise ParseError carrying the 1-based input line number.
ModelFile parse_model_file(std::string_view text, Technique technique);

/// Reads and parses a model file from disk.
ModelFile read_model_file(const std::filesystem::path& path, Technique technique);

/// Renders the canonical layout with trailing field-name comments. Numbers
/// are written in shortest round-trip form, so parse(write(mf)) == mf for
/// every valid ModelFile.
std::string write_model_file(const ModelFile& mf);

/// Builds a ready-to-run space from parsed contents (bounds, budget and
/// parameters applied).
SearchSpace make_search_space(const ModelFile& mf);

} // namespace metaopt

#endif
