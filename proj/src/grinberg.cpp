#include "hop/grinberg.hpp"

namespace hop {

std::vector<GrinbergResidual> grinberg_residuals(const HydroOp& op,
                                                 bool keep_zero) {
    std::vector<GrinbergResidual> out;
    const int n = op.n;
    auto d = [](const DiffExpr& e, int k) { return partial_jet(e, k, 0); };
    auto emit = [&](const char* cond, std::vector<int> idx, DiffExpr v) {
        if (keep_zero || !v.is_zero())
            out.push_back({cond, std::move(idx), std::move(v)});
    };

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            emit("G1", {i, j}, op.g(i, j) - op.g(j, i));
            for (int k = 1; k <= n; ++k)
                emit("G2", {i, j, k},
                     d(op.g(i, j), k) - op.b(i, j, k) - op.b(j, i, k));
        }

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                DiffExpr v;
                for (int t = 1; t <= n; ++t)
                    v = v + op.g(t, k) * op.b(j, i, t) -
                        op.g(t, j) * op.b(k, i, t);
                emit("G3", {i, j, k}, std::move(v));
            }

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int r = 1; r <= n; ++r) {
                    DiffExpr v;
                    for (int t = 1; t <= n; ++t)
                        v = v + op.b(i, j, t) * op.b(t, k, r) -
                            op.b(i, k, t) * op.b(t, j, r) -
                            op.g(t, i) * (d(op.b(j, k, r), t) -
                                          partial_jet(op.b(j, k, t), r, 0));
                    emit("G4", {i, j, k, r}, std::move(v));
                }

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int q = 1; q <= n; ++q)
                    for (int r = 1; r <= n; ++r) {
                        DiffExpr v;
                        int cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
                        for (auto& c : cyc)
                            for (int t = 1; t <= n; ++t)
                                v = v +
                                    (d(op.b(c[0], c[1], t), q) -
                                     d(op.b(c[0], c[1], q), t)) *
                                        op.b(t, c[2], r) +
                                    (d(op.b(c[0], c[1], t), r) -
                                     d(op.b(c[0], c[1], r), t)) *
                                        op.b(t, c[2], q);
                        emit("G5", {i, j, k, q, r}, std::move(v));
                    }
    return out;
}

bool grinberg_holds(const HydroOp& op) {
    return grinberg_residuals(op).empty();
}

} // namespace hop
