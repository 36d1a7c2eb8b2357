#pragma once

#include <map>
#include <optional>

#include "hop/atom.hpp"

namespace hop {

// total x-derivative (chain rule through all atoms, quotient rule)
DiffExpr total_x(const DiffExpr& e);
DiffExpr total_x(const DiffExpr& e, int times);

// partial derivative with respect to the jet variable u^component_(order)
DiffExpr partial_jet(const DiffExpr& e, int component, int order);

// highest jet order occurring anywhere in e (0 if none)
int max_jet_order(const DiffExpr& e);

// grading with deg u^i_(k) = k, deg f(u) = 0; nullopt when inhomogeneous
std::optional<int> homogeneous_degree(const DiffExpr& e);

// evaluation of all atoms at deterministic pseudo-random rational values;
// retries on vanishing denominators, throws after `retries` attempts
Scalar eval_random(const DiffExpr& e, unsigned seed, int retries = 32);

// substitution u^c -> exprs[c] for order-0 jets; higher jets get the induced
// total derivatives, formal functions follow their dependencies
DiffExpr substitute(const DiffExpr& e, const std::map<int, DiffExpr>& exprs);

// rewrite cos^2 -> 1 - sin^2 for every trig pair (canonical trig form)
DiffExpr trig_reduce(const DiffExpr& e);

DiffExpr jet(int component, int order = 0);
DiffExpr func(const std::string& name, std::vector<int> deps,
              FuncRule rule = FuncRule::plain);
DiffExpr func_d(const std::string& name, std::vector<int> deps,
                const std::vector<int>& diff_by, FuncRule rule = FuncRule::plain);

} // namespace hop
