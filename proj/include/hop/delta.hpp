#pragma once

#include <map>

#include "hop/calc.hpp"

namespace hop {

// One component of a bivector: Σ_m A_m(x) δ^(m)(x−y), all jets at x.
struct BiDist {
    std::map<int, DiffExpr> coeffs;

    bool is_zero() const;
    BiDist& add(int order, const DiffExpr& c);
    bool operator==(const BiDist& o) const;
};

BiDist operator+(const BiDist& a, const BiDist& b);
BiDist operator-(const BiDist& a, const BiDist& b);
BiDist operator-(const BiDist& a);
BiDist operator*(const BiDist& a, const DiffExpr& f); // coefficient at x

// f evaluated at y times δ^(s)(x−y), normalized to x-canonical form:
// f(y) δ^(s) = Σ_m C(s,m) (d_x^m f)(x) δ^(s−m)
BiDist mul_at_y(const DiffExpr& f, int s);
BiDist mul_at_y(const DiffExpr& f, const BiDist& d);

// the same distribution rewritten with coefficients at the second point;
// inverse of re-normalising each coefficient through mul_at_y
BiDist to_second_point(const BiDist& d);

// x-canonical form of the transposed kernel P_{y,x}
BiDist flip(const BiDist& d);

BiDist dx(const BiDist& d);  // derivative in the first argument
BiDist dy(const BiDist& d);  // derivative in the second argument

// One component of a trivector: Σ B_{mn}(x) δ^(m)(x−y) δ^(n)(x−z).
struct TriDist {
    std::map<std::pair<int, int>, DiffExpr> coeffs;

    bool is_zero() const;
    TriDist& add(int m, int n, const DiffExpr& c);
};

TriDist operator+(const TriDist& a, const TriDist& b);
TriDist operator-(const TriDist& a, const TriDist& b);

// Evaluation points of the three-point calculus.
enum class Pt { X, Y, Z };

// One raw product  coeff(at) · δ^(o1)(a1−b1) · δ^(o2)(a2−b2)  as produced by
// the bracket before normalization.
struct RawTri {
    DiffExpr coeff;
    Pt at;
    int o1; Pt a1, b1;
    int o2; Pt a2, b2;
};

// normalize a raw product to the canonical TriDist basis
TriDist normalize(const RawTri& t);

// exact pairing of a BiDist against a polynomial test function in y:
// ∫ d(x,y) φ(y) dy evaluated at random arguments — oracle for the δ algebra
Scalar pair_with_test(const BiDist& d, const DiffExpr& phi_of_x, unsigned seed);

} // namespace hop
