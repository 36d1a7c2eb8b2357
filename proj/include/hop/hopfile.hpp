#pragma once

#include <optional>
#include <string>

#include "hop/bivector.hpp"
#include "hop/parse.hpp"
#include "hop/schouten.hpp"
#include "hop/transform.hpp"

namespace hop {

// In-memory form of a `.hop` problem file.
//
//   n = 2
//   func p(u2);
//   func E(u3) rule exp;
//
//   metric:
//   g[1][1] = 1
//   b:
//   b[1][2][2] = -1/u1
//   deform1:
//   A[2][1] = p
//   vfield:
//   X[2] = p * u2_x
//   map: v1 = u1; v2 = u2;
//
// `#` starts a comment; `;` separates statements like a newline; a section
// header is one of metric / b / deform1 / deform2 / vfield / map / inv
// followed by `:` (entries may continue on the same line).  Header
// statements (`n = ...`, `func ...`) come before the first section.
// Unset tensor entries are zero.  Slots symmetric in trailing indices
// (D, and N of the second-order block) are given with ascending indices
// only and mirrored on load.
struct ProblemFile {
    int n = 0;
    SymbolTable symbols;
    std::vector<FuncDecl> func_order; // declaration order, for printing

    std::optional<HydroOp> hydro;
    std::optional<DeformBivector> deform1;
    std::optional<DeformBivector> deform2;
    std::optional<VectorField> vfield;
    std::optional<CoordChange> change;
};

// Parse errors carry a 1-based line number in the message.
ProblemFile parse_problem(const std::string& text, bool allow_complex = true);
ProblemFile read_problem(const std::string& path, bool allow_complex = true);

// Canonical text form; parse_problem(print_problem(pf)) reproduces pf.
std::string print_problem(const ProblemFile& pf);

} // namespace hop
