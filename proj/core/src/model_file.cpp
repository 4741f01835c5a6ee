#include "metaopt/model_file.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace metaopt {
namespace {

LineSpec header_line() {
    return {{{"m", true}, {"n", true}, {"iterations", true}}, false};
}

LineSpec bounds_line() { return {{{"LB", false}, {"UB", false}}, true}; }

LineSpec reals(std::initializer_list<const char*> names) {
    LineSpec line;
    for (const char* name : names) line.fields.push_back({name, false});
    return line;
}

LineSpec integers(std::initializer_list<const char*> names) {
    LineSpec line;
    for (const char* name : names) line.fields.push_back({name, true});
    return line;
}

// Parameter lines only (header and bounds are shared by every technique).
std::vector<LineSpec> parameter_lines(Technique t) {
    switch (t) {
    case Technique::PSO:
    case Technique::AIWPSO:
        return {reals({"c1", "c2"}), reals({"w", "w_min", "w_max"})};
    case Technique::BA:
        return {reals({"f_min", "f_max"}), reals({"A", "r", "alpha", "gamma"})};
    case Technique::FPA:
        return {reals({"p", "beta"})};
    case Technique::FA:
        return {reals({"alpha", "beta0", "gamma"})};
    case Technique::CS:
        return {reals({"p_a", "alpha", "beta"})};
    case Technique::BH:
        return {};
    case Technique::MBO:
        return {integers({"k", "x", "leader_period"})};
    case Technique::ABC:
        return {integers({"limit"})};
    case Technique::WCA: {
        LineSpec line;
        line.fields.push_back({"n_sr", true});
        line.fields.push_back({"d_max", false});
        return {line};
    }
    case Technique::HS:
        return {reals({"HMCR", "PAR", "rho"})};
    case Technique::IHS:
        return {reals({"HMCR"}), reals({"PAR_min", "PAR_max"}), reals({"rho_min", "rho_max"})};
    case Technique::PSFHS:
        return {};
    }
    return {};
}

TechniqueParams pack_params(Technique t, const std::vector<std::vector<double>>& v) {
    switch (t) {
    case Technique::PSO:
        return PsoParams{v[0][0], v[0][1], v[1][0], v[1][1], v[1][2]};
    case Technique::AIWPSO:
        return AiwpsoParams{v[0][0], v[0][1], v[1][0], v[1][1], v[1][2]};
    case Technique::BA:
        return BaParams{v[0][0], v[0][1], v[1][0], v[1][1], v[1][2], v[1][3]};
    case Technique::FPA:
        return FpaParams{v[0][0], v[0][1]};
    case Technique::FA:
        return FaParams{v[0][0], v[0][1], v[0][2]};
    case Technique::CS:
        return CsParams{v[0][0], v[0][1], v[0][2]};
    case Technique::BH:
        return BhParams{};
    case Technique::MBO:
        return MboParams{static_cast<int>(v[0][0]), static_cast<int>(v[0][1]),
                         static_cast<int>(v[0][2])};
    case Technique::ABC:
        return AbcParams{static_cast<int>(v[0][0])};
    case Technique::WCA:
        return WcaParams{static_cast<int>(v[0][0]), v[0][1]};
    case Technique::HS:
        return HsParams{v[0][0], v[0][1], v[0][2]};
    case Technique::IHS:
        return IhsParams{v[0][0], v[1][0], v[1][1], v[2][0], v[2][1]};
    case Technique::PSFHS:
        return PsfhsParams{};
    }
    return PsoParams{};
}

std::vector<std::vector<double>> unpack_params(const ModelFile& mf) {
    switch (mf.technique) {
    case Technique::PSO: {
        const auto& p = std::get<PsoParams>(mf.params);
        return {{p.c1, p.c2}, {p.w, p.w_min, p.w_max}};
    }
    case Technique::AIWPSO: {
        const auto& p = std::get<AiwpsoParams>(mf.params);
        return {{p.c1, p.c2}, {p.w, p.w_min, p.w_max}};
    }
    case Technique::BA: {
        const auto& p = std::get<BaParams>(mf.params);
        return {{p.f_min, p.f_max}, {p.loudness, p.pulse_rate, p.alpha, p.gamma}};
    }
    case Technique::FPA: {
        const auto& p = std::get<FpaParams>(mf.params);
        return {{p.p, p.beta}};
    }
    case Technique::FA: {
        const auto& p = std::get<FaParams>(mf.params);
        return {{p.alpha, p.beta0, p.gamma}};
    }
    case Technique::CS: {
        const auto& p = std::get<CsParams>(mf.params);
        return {{p.pa, p.alpha, p.beta}};
    }
    case Technique::BH:
        return {};
    case Technique::MBO: {
        const auto& p = std::get<MboParams>(mf.params);
        return {{static_cast<double>(p.neighbors), static_cast<double>(p.shared),
                 static_cast<double>(p.leader_period)}};
    }
    case Technique::ABC: {
        const auto& p = std::get<AbcParams>(mf.params);
        return {{static_cast<double>(p.limit)}};
    }
    case Technique::WCA: {
        const auto& p = std::get<WcaParams>(mf.params);
        return {{static_cast<double>(p.n_sr), p.d_max}};
    }
    case Technique::HS: {
        const auto& p = std::get<HsParams>(mf.params);
        return {{p.hmcr, p.par, p.bandwidth}};
    }
    case Technique::IHS: {
        const auto& p = std::get<IhsParams>(mf.params);
        return {{p.hmcr}, {p.par_min, p.par_max}, {p.bw_min, p.bw_max}};
    }
    case Technique::PSFHS:
        return {};
    }
    return {};
}

struct Record {
    int line = 0; ///< 1-based line number in the original text
    std::vector<std::string> tokens;
};

std::vector<Record> tokenize(std::string_view text) {
    std::vector<Record> records;
    int line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        Record record{line_number, {}};
        std::istringstream words{std::string(line)};
        std::string token;
        while (words >> token) record.tokens.push_back(token);
        if (!record.tokens.empty()) records.push_back(std::move(record));

        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return records;
}

double parse_field(const std::string& token, const FieldSpec& field, int line) {
    if (field.is_integer) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError(line, "field <" + field.name + "> must be an integer, got '" +
                                       token + "'");
        return static_cast<double>(value);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "field <" + field.name + "> must be numeric, got '" + token + "'");
    if (!std::isfinite(value))
        throw ParseError(line, "field <" + field.name + "> must be finite, got '" + token + "'");
    return value;
}

std::string line_shape(const LineSpec& spec) {
    std::string out;
    for (const auto& field : spec.fields) out += "<" + field.name + "> ";
    if (!out.empty()) out.pop_back();
    return out;
}

std::vector<double> parse_record(const Record& record, const LineSpec& spec) {
    if (record.tokens.size() != spec.fields.size())
        throw ParseError(record.line, "expected " + std::to_string(spec.fields.size()) +
                                          " fields (" + line_shape(spec) + "), got " +
                                          std::to_string(record.tokens.size()));
    std::vector<double> values;
    values.reserve(spec.fields.size());
    for (std::size_t i = 0; i < spec.fields.size(); ++i)
        values.push_back(parse_field(record.tokens[i], spec.fields[i], record.line));
    return values;
}

void format_number(std::string& out, double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    assert(ec == std::errc{});
    out.append(buffer, ptr);
}

} // namespace

std::vector<LineSpec> schema_for(Technique technique) {
    std::vector<LineSpec> schema{header_line()};
    for (auto& line : parameter_lines(technique)) schema.push_back(std::move(line));
    schema.push_back(bounds_line());
    return schema;
}

ModelFile parse_model_file(std::string_view text, Technique technique) {
    const std::vector<Record> records = tokenize(text);
    const std::vector<LineSpec> params_schema = parameter_lines(technique);
    std::size_t next = 0;

    auto take = [&](const LineSpec& spec, const char* what) -> std::vector<double> {
        if (next >= records.size())
            throw ParseError(0, std::string("unexpected end of input: missing ") + what + " line (" +
                                    line_shape(spec) + ")");
        return parse_record(records[next++], spec);
    };

    ModelFile mf;
    mf.technique = technique;

    const LineSpec header = header_line();
    const int header_record = next < records.size() ? records[next].line : 0;
    const std::vector<double> sizes = take(header, "header");
    mf.m = static_cast<int>(sizes[0]);
    mf.n = static_cast<int>(sizes[1]);
    mf.iterations = static_cast<int>(sizes[2]);
    if (mf.m < 1) throw ParseError(header_record, "<m> must be >= 1, got " + std::to_string(mf.m));
    if (mf.n < 1) throw ParseError(header_record, "<n> must be >= 1, got " + std::to_string(mf.n));
    if (mf.iterations < 1)
        throw ParseError(header_record, "<iterations> must be >= 1, got " + std::to_string(mf.iterations));

    std::vector<std::vector<double>> values;
    values.reserve(params_schema.size());
    for (const LineSpec& spec : params_schema) values.push_back(take(spec, "parameter"));
    mf.params = pack_params(technique, values);

    const LineSpec bounds = bounds_line();
    for (int j = 0; j < mf.n; ++j) {
        const int line = next < records.size() ? records[next].line : 0;
        const std::vector<double> pair = take(bounds, "bounds");
        if (!(pair[0] < pair[1]))
            throw ParseError(line, "variable " + std::to_string(j) +
                                       ": <LB> must be strictly below <UB>");
        mf.bounds.emplace_back(pair[0], pair[1]);
    }

    if (next < records.size())
        throw ParseError(records[next].line, "unexpected content after the last bounds line");
    return mf;
}

ModelFile read_model_file(const std::filesystem::path& path, Technique technique) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open model file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_model_file(buffer.str(), technique);
}

std::string write_model_file(const ModelFile& mf) {
    std::string out;
    auto emit = [&out](const std::vector<double>& values, const LineSpec& spec,
                       const std::string& suffix) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out += ' ';
            if (spec.fields[i].is_integer)
                out += std::to_string(static_cast<long long>(values[i]));
            else
                format_number(out, values[i]);
        }
        out += " #" ;
        for (std::size_t i = 0; i < spec.fields.size(); ++i) {
            if (i) out += ' ';
            out += "<" + spec.fields[i].name + ">";
        }
        out += suffix;
        out += '\n';
    };

    emit({static_cast<double>(mf.m), static_cast<double>(mf.n),
          static_cast<double>(mf.iterations)},
         header_line(), "");

    const std::vector<LineSpec> params_schema = parameter_lines(mf.technique);
    const std::vector<std::vector<double>> values = unpack_params(mf);
    for (std::size_t i = 0; i < params_schema.size(); ++i)
        emit(values[i], params_schema[i], "");

    const LineSpec bounds = bounds_line();
    for (int j = 0; j < mf.n; ++j)
        emit({mf.bounds[static_cast<std::size_t>(j)].first,
              mf.bounds[static_cast<std::size_t>(j)].second},
             bounds, " x[" + std::to_string(j) + "]");
    return out;
}

SearchSpace make_search_space(const ModelFile& mf) {
    SearchSpace s = create_search_space(mf.m, mf.n, mf.technique);
    s.iterations = mf.iterations;
    s.params = mf.params;
    std::vector<double> lower, upper;
    lower.reserve(mf.bounds.size());
    upper.reserve(mf.bounds.size());
    for (const auto& [lb, ub] : mf.bounds) {
        lower.push_back(lb);
        upper.push_back(ub);
    }
    set_bounds(s, lower, upper);
    return s;
}

} // namespace metaopt
