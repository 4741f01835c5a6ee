#include "metaopt/objective.hpp"

#include "metaopt/error.hpp"

namespace metaopt {

double ObjectiveFunction::operator()(std::span<const double> x) const {
    if (!accepts_dimension(static_cast<int>(x.size())))
        throw Error("objective '" + name + "' expects dimension " + arity_description() +
                    ", got " + std::to_string(x.size()));
    return eval(x);
}

std::string ObjectiveFunction::arity_description() const {
    if (arity == kAnyArity)
        return min_arity > 1 ? ">=" + std::to_string(min_arity) : ">=1";
    return std::to_string(arity);
}

} // namespace metaopt
