#pragma once

#include "hop/bivector.hpp"

namespace hop {

// one residual of the flatness/Jacobi system for a (g,b) pair
struct GrinbergResidual {
    std::string condition;    // "G1".."G5"
    std::vector<int> indices; // the free indices of the violated equation
    DiffExpr value;
};

// residuals of all five conditions; empty iff (g,b) is Hamiltonian
std::vector<GrinbergResidual> grinberg_residuals(const HydroOp& op,
                                                 bool keep_zero = false);

bool grinberg_holds(const HydroOp& op);

} // namespace hop
