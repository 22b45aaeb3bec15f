#include "obstacle1d/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace obstacle1d {

void validate(const ProblemSpec& spec) {
    if (!std::isfinite(spec.f) || !std::isfinite(spec.phi))
        throw std::invalid_argument("problem data must be finite");
    if (!(spec.phi < 0.0))
        throw std::invalid_argument("obstacle phi must be negative");
}

void validate_for_benchmark(const ProblemSpec& spec) {
    validate(spec);
    if (!(spec.f <= 0.0))
        throw std::invalid_argument("benchmark solution requires f <= 0");
}

}  // namespace obstacle1d
