#pragma once

#include "hop/bivector.hpp"

namespace hop {

// trivector components T^{ijk}_{x,y,z}
struct TriOperator {
    int n = 0;
    std::vector<TriDist> comp;

    explicit TriOperator(int n_) : n(n_), comp(n_ * n_ * n_) {}
    TriDist& at(int i, int j, int k) {
        return comp[((i - 1) * n + (j - 1)) * n + (k - 1)];
    }
    const TriDist& at(int i, int j, int k) const {
        return comp[((i - 1) * n + (j - 1)) * n + (k - 1)];
    }
    bool is_zero() const {
        for (auto& c : comp)
            if (!c.is_zero()) return false;
        return true;
    }
};

struct VectorField {
    int n = 0;
    std::vector<DiffExpr> xi; // xi[i-1]

    explicit VectorField(int n_) : n(n_), xi(n_) {}
    DiffExpr& at(int i) { return xi[i - 1]; }
    const DiffExpr& at(int i) const { return xi[i - 1]; }
};

// the twelve-term Schouten bracket [P,Q]^{ijk}_{x,y,z}
TriOperator schouten(const BiOperator& P, const BiOperator& Q);

// [P,P]; zero iff P satisfies the Jacobi identity
TriOperator jacobi_defect(const BiOperator& P);

// 2[P0,P2] + [P1,P1] — the order-2 condition of a deformation series
TriOperator order2_residual(const BiOperator& P0, const BiOperator& P1,
                            const BiOperator& P2);

BiOperator lie_derivative(const VectorField& xi, const BiOperator& P);

TriOperator operator+(const TriOperator& a, const TriOperator& b);
TriOperator operator-(const TriOperator& a, const TriOperator& b);
TriOperator operator*(const TriOperator& a, const Scalar& c);

} // namespace hop
