#pragma once

#include "hop/poly.hpp"

namespace hop {

// Exact rational function in the atoms: num/den, gcd-reduced, with the
// denominator's leading coefficient normalised to 1.  den is never zero.
struct DiffExpr {
    Poly num;
    Poly den{Scalar(1)};

    DiffExpr() = default;
    DiffExpr(long v) : num(Scalar(v)) {}
    DiffExpr(Scalar c) : num(Poly(std::move(c))) {}
    DiffExpr(Poly n, Poly d);
    static DiffExpr from_poly(Poly p) {
        DiffExpr e;
        e.num = std::move(p);
        return e;
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_constant() const { return num.is_constant() && den.is_constant(); }
    Scalar constant_value() const { return num.constant_value() / den.constant_value(); }

    bool operator==(const DiffExpr& o) const { return num == o.num && den == o.den; }
    bool operator!=(const DiffExpr& o) const { return !(*this == o); }
};

DiffExpr operator+(const DiffExpr& a, const DiffExpr& b);
DiffExpr operator-(const DiffExpr& a, const DiffExpr& b);
DiffExpr operator-(const DiffExpr& a);
DiffExpr operator*(const DiffExpr& a, const DiffExpr& b);
DiffExpr operator/(const DiffExpr& a, const DiffExpr& b);
DiffExpr expr_pow(const DiffExpr& a, int e);
DiffExpr expr_inv(const DiffExpr& a);

int expr_cmp(const DiffExpr& a, const DiffExpr& b);

} // namespace hop
