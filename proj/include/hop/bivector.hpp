#pragma once

#include <array>
#include <functional>

#include "hop/delta.hpp"

namespace hop {

// dense tensor with 1-based indices, all in 1..n
struct Tensor {
    int n = 0, rank = 0;
    std::vector<DiffExpr> v;

    Tensor() = default;
    Tensor(int n_, int rank_);

    DiffExpr& at(std::initializer_list<int> idx);
    const DiffExpr& at(std::initializer_list<int> idx) const;

    template <typename... I> DiffExpr& operator()(I... i) { return at({i...}); }
    template <typename... I> const DiffExpr& operator()(I... i) const {
        return at({i...});
    }
};

// hydrodynamic-type operator g^{ij} d_x + b^{ij}_k u^k_x
struct HydroOp {
    int n = 0;
    Tensor g; // (i,j)
    Tensor b; // (i,j,k)

    explicit HydroOp(int n_) : n(n_), g(n_, 2), b(n_, 3) {}
};

// Homogeneous deformation bivector of degree 1 or 2.
//   degree 1:  A d^2 + B_k u^k_x d + C_k u^k_xx + D_{rk} u^r_x u^k_x
//   degree 2:  A d^3 + B_k u^k_x d^2 + (C_k u^k_xx + D_{rk} u^r_x u^k_x) d
//              + L_k u^k_xxx + M_{kr} u^k_xx u^r_x + N_{srk} u^s_x u^r_x u^k_x
// (for degree 2 the slots A..D play the roles usually written E, F, G, H;
// D and the u_x-cubed tensor N are stored tilde-symmetrised)
struct DeformBivector {
    int n = 0;
    int degree = 1;
    Tensor A; // (i,j)
    Tensor B; // (i,j,k)
    Tensor C; // (i,j,k)
    Tensor D; // (i,j,r,k), symmetric in (r,k)
    Tensor L; // (i,j,k)          degree 2 only
    Tensor M; // (i,j,k,r)        degree 2 only
    Tensor N; // (i,j,s,r,k), fully symmetric in (s,r,k)

    DeformBivector(int n_, int degree_);
};

// matrix of bivector components in the delta basis
struct BiOperator {
    int n = 0;
    std::vector<BiDist> comp;

    explicit BiOperator(int n_) : n(n_), comp(n_ * n_) {}
    BiDist& at(int i, int j) { return comp[(i - 1) * n + (j - 1)]; }
    const BiDist& at(int i, int j) const { return comp[(i - 1) * n + (j - 1)]; }
};

BiOperator to_bidist(const HydroOp& op);
BiOperator to_bidist(const DeformBivector& p);

// P^{ij} + flip(P^{ji}) componentwise; zero iff the bivector is skew
BiOperator skew_defect(const BiOperator& p);
bool is_zero(const BiOperator& p);

// residuals of the closed-form skew conditions; all zero iff skew
std::vector<DiffExpr> skew_conditions_closed(const DeformBivector& p);

// number of coefficient functions before / after imposing skew-symmetry
long coefficient_count(int n, int degree);
long free_coefficient_count(int n, int degree);

// a generic skew bivector: every free slot is an independent formal function
// of all n fields named <prefix><slot indices>, dependent slots filled from
// the closed-form conditions
DeformBivector generic_skew(int n, int degree, const std::string& prefix);

// same completion applied to caller-supplied free slots: set the entries with
// i < j (and the other free positions), then call this to fill the rest
void complete_skew(DeformBivector& p);

// extract the tensors from a matrix display: entry (i,j) lists the
// coefficients of d^0..d^(degree+1); throws if the display does not reassemble
DeformBivector from_matrix(
    int n, int degree,
    const std::function<DiffExpr(int i, int j, int dpow)>& entry);

BiOperator operator+(const BiOperator& a, const BiOperator& b);
BiOperator operator-(const BiOperator& a, const BiOperator& b);
BiOperator operator*(const BiOperator& a, const Scalar& c);

} // namespace hop
