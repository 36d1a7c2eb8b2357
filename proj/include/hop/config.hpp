#pragma once

#include <stdexcept>

namespace hop {

// Session-wide resource caps.  The exact algorithms never need these for
// correctness; they bound runaway intermediate expressions and turn them
// into clean errors instead of memory exhaustion.
struct Config {
    int max_jet = 6;    // highest jet order u^i_(s) allowed to appear
    int max_delta = 8;  // highest delta-derivative order in distributions
    long max_terms = 2000000; // monomial budget per polynomial
};

Config& config();

struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hop
