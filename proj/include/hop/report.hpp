#pragma once

#include <string>
#include <vector>

#include "hop/grinberg.hpp"
#include "hop/schouten.hpp"

namespace hop {

// One residual component of a check: where it lives, what it is, and
// whether it vanishes.
struct ReportComponent {
    std::vector<int> indices;
    std::string coefficient; // slot label, e.g. "d^2" or "G4"
    std::string residual;    // printed expression (empty when zero)
    bool zero = false;
};

struct Report {
    std::string check;
    std::string case_name;
    std::vector<ReportComponent> components;
    bool pass = false; // every component zero
    unsigned seed = 0;
    long elapsed_ms = 0;
};

// Collect the nonzero (and optionally zero) coefficients of a residual
// object into components; recompute `pass`.
void add_components(Report& rep, const BiOperator& r, bool keep_zero = false);
void add_components(Report& rep, const TriOperator& r, bool keep_zero = false);
void add_components(Report& rep, const std::vector<GrinbergResidual>& r);
void add_line(Report& rep, const std::string& label, bool ok);
void finish(Report& rep);

std::string to_json(const Report& rep);
std::string to_text(const Report& rep);

} // namespace hop
