#pragma once

namespace obstacle1d {

// Obstacle problem on (0,1): minimize J(v) = 1/2 ∫(v')^2 - ∫ f v over
// K = { v in H^1_0 : v >= phi }, with constant load f and constant
// obstacle phi < 0 (so K is nonempty and contains 0).
struct ProblemSpec {
    double f = 0.0;
    double phi = -1.0;
};

// Throws std::invalid_argument unless phi < 0 and both fields are finite.
void validate(const ProblemSpec& spec);

// Additionally requires f <= 0; the closed-form solution below assumes a
// downward load. Throws std::invalid_argument otherwise.
void validate_for_benchmark(const ProblemSpec& spec);

}  // namespace obstacle1d
