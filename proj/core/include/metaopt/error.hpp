#ifndef METAOPT_ERROR_HPP
#define METAOPT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace metaopt {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the model-file parser; carries the 1-based line number of the
/// offending input line (0 when the error is not tied to a specific line,
/// e.g. truncated input).
class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace metaopt

#endif
