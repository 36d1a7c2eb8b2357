#include <doctest.h>

#include "hop/grinberg.hpp"
#include "hop/schouten.hpp"

using namespace hop;

namespace {

HydroOp diag_dx(int n, int rank) {
    HydroOp op(n);
    for (int i = 1; i <= rank; ++i) op.g(i, i) = DiffExpr(1);
    return op;
}

HydroOp nonconstant_2c() {
    // d_x in the (1,1) slot, off-diagonal -u2_x/u1
    HydroOp op(2);
    op.g(1, 1) = DiffExpr(1);
    op.b(1, 2, 2) = DiffExpr(-1) / jet(1);
    op.b(2, 1, 2) = DiffExpr(1) / jet(1);
    return op;
}

} // namespace

TEST_CASE("Jacobi identity holds for the canonical operators") {
    for (int n : {2, 3})
        for (int rank = 0; rank <= n; ++rank) {
            HydroOp op = diag_dx(n, rank);
            CHECK(is_zero(skew_defect(to_bidist(op))));
            CHECK(jacobi_defect(to_bidist(op)).is_zero());
            CHECK(grinberg_holds(op));
        }
    HydroOp op = nonconstant_2c();
    CHECK(jacobi_defect(to_bidist(op)).is_zero());
    CHECK(grinberg_holds(op));
}

TEST_CASE("constant-b counterexample fails Jacobi and G4 in the same way") {
    HydroOp op(2);
    op.g(1, 1) = DiffExpr(1);
    op.b(1, 2, 2) = DiffExpr(3);
    op.b(2, 1, 2) = DiffExpr(-3); // keeps the operator skew
    CHECK(is_zero(skew_defect(to_bidist(op))));

    auto residuals = grinberg_residuals(op);
    CHECK(!residuals.empty());
    bool found = false;
    for (auto& r : residuals)
        if (r.condition == "G4" && r.indices == std::vector<int>{1, 2, 1, 2}) {
            CHECK(r.value == DiffExpr(-9)); // -c^2 with c = 3
            found = true;
        }
    CHECK(found);
    CHECK(!jacobi_defect(to_bidist(op)).is_zero());
}

TEST_CASE("Grinberg residuals and Jacobi defect agree on verdicts") {
    // a family interpolating good and bad operators
    for (int bad = 0; bad <= 1; ++bad) {
        HydroOp op = nonconstant_2c();
        if (bad) op.b(2, 1, 2) = DiffExpr(1) / (jet(1) * jet(1));
        bool g = grinberg_holds(op);
        bool skew = is_zero(skew_defect(to_bidist(op)));
        bool j = jacobi_defect(to_bidist(op)).is_zero();
        CHECK(g == (skew && j));
    }
}

TEST_CASE("bracket is symmetric and bilinear on canonical structures") {
    BiOperator a = to_bidist(diag_dx(2, 1));
    BiOperator b = to_bidist(nonconstant_2c());
    TriOperator ab = schouten(a, b);
    TriOperator ba = schouten(b, a);
    CHECK((ab - ba).is_zero());
    // [a+b, a+b] = [a,a] + 2[a,b] + [b,b]
    TriOperator lhs = jacobi_defect(a + b);
    TriOperator rhs = jacobi_defect(a) + ab * Scalar(2) + jacobi_defect(b);
    CHECK((lhs - rhs).is_zero());
}

TEST_CASE("Lie derivative of a Poisson structure stays compatible") {
    // P Poisson, any evolutionary xi of degree 1:
    // Lie_xi [P,P] = 0 forces [Lie_xi P, P] = 0, and Lie_xi P remains skew
    BiOperator P = to_bidist(diag_dx(2, 1));
    VectorField xi(2);
    xi.at(1) = func("v11", {1, 2}) * jet(1, 1) + func("v12", {1, 2}) * jet(2, 1);
    xi.at(2) = func("v21", {1, 2}) * jet(1, 1) + func("v22", {1, 2}) * jet(2, 1);
    BiOperator lp = lie_derivative(xi, P);
    CHECK(is_zero(skew_defect(lp)));
    CHECK(schouten(lp, P).is_zero());
}

TEST_CASE("Lie derivative reproduces a hand expansion") {
    // xi = (0, a(u1) u2_x) against diag(d_x, d_x)
    BiOperator P = to_bidist(diag_dx(2, 2));
    VectorField xi(2);
    DiffExpr a = func("a", {1});
    DiffExpr ap = func_d("a", {1}, {1});
    xi.at(2) = a * jet(2, 1);
    BiOperator lp = lie_derivative(xi, P);

    BiDist e22;
    e22.add(1, 2 * total_x(a));
    e22.add(0, total_x(total_x(a)));
    CHECK(lp.at(2, 2) == e22);

    BiDist e12;
    e12.add(1, -ap * jet(2, 1));
    e12.add(0, -total_x(ap * jet(2, 1)));
    CHECK(lp.at(1, 2) == e12);

    BiDist e21;
    e21.add(1, -ap * jet(2, 1));
    CHECK(lp.at(2, 1) == e21);
    CHECK(lp.at(1, 1).is_zero());

    // a Hamiltonian characteristic d_x(A(u2)) in the second slot acts
    // trivially on diag(d_x, d_x)
    VectorField ham(2);
    ham.at(2) = func("A", {2}) * jet(2, 1); // = d_x of a primitive of A
    BiOperator hp = lie_derivative(ham, P);
    CHECK(is_zero(hp));
}
