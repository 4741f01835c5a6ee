#ifndef METAOPT_FUNCTIONS_HPP
#define METAOPT_FUNCTIONS_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "metaopt/objective.hpp"

namespace metaopt {

/// Name-keyed registry of objective functions. Lookup is case-insensitive
/// and an unknown name raises an Error listing the nearest matches.
class BenchmarkCatalog {
public:
    /// Registers a function; the (case-folded) name must be unused.
    void add(ObjectiveFunction f);

    /// Returns the function or throws Error with spelling suggestions.
    const ObjectiveFunction& lookup(std::string_view name) const;

    /// Returns nullptr instead of throwing.
    const ObjectiveFunction* find(std::string_view name) const;

    /// Registered names, sorted.
    std::vector<std::string> names() const;

    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::string, ObjectiveFunction> entries_; // keyed by lower-cased name
};

/// The built-in catalog: classic test functions spanning unimodal,
/// multimodal, separable and non-separable problems, each with its
/// conventional bounds and (where known) optimum.
const BenchmarkCatalog& builtin_catalog();

} // namespace metaopt

#endif
