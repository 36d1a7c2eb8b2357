#pragma once

#include "hop/bivector.hpp"

namespace hop {

// Invertible change of the dependent variables.  `fwd[i-1]` is the i-th new
// coordinate as an expression in the old fields; `inv[i-1]` the i-th old
// coordinate in the new fields.  Both use the same jet names u1..un, read in
// their respective charts.
struct CoordChange {
    int n = 0;
    std::vector<DiffExpr> fwd;
    std::vector<DiffExpr> inv;

    explicit CoordChange(int n_) : n(n_), fwd(n_), inv(n_) {}
};

// re-express an old-chart expression in the new chart
DiffExpr to_new(const CoordChange& ch, const DiffExpr& e);
// re-express a new-chart expression in the old chart
DiffExpr to_old(const CoordChange& ch, const DiffExpr& e);

using Matrix = std::vector<std::vector<DiffExpr>>;

// J^i_a = d(new^i)/d(old^a), re-expressed in the new chart
Matrix jacobian(const CoordChange& ch);
// K^a_s = d(old^a)/d(new^s), directly in the new chart
Matrix inv_jacobian(const CoordChange& ch);
// J K == id; throws if the declared inverse is not one
void check_consistent(const CoordChange& ch);

// metric pushforward J g J^t in the new chart
Tensor push_metric(const HydroOp& op, const CoordChange& ch);
// full symbol transformation: tensorial part plus the J g (J^t)_x correction
Tensor push_b(const HydroOp& op, const CoordChange& ch);
HydroOp push_hydro(const HydroOp& op, const CoordChange& ch);

// the non-tensorial summand of the b rule, as a (2,1)-symbol N^{lr}_s
Tensor nontensorial_part(const HydroOp& op, const CoordChange& ch);

// admissible: the pushed metric has the same entries as the original
bool is_admissible(const HydroOp& op, const CoordChange& ch);
// restricted admissible: additionally b transforms as a tensor
bool is_restricted_admissible(const HydroOp& op, const CoordChange& ch);

// kernel pushforward P~^{ij}_{x,y} = J^i_a(x) P^{ab}_{x,y} J^j_b(y),
// re-expressed in the new chart
BiOperator push_bivector(const BiOperator& p, const CoordChange& ch);

} // namespace hop
