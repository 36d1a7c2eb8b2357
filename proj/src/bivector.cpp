#include "hop/bivector.hpp"

#include <stdexcept>

namespace hop {

Tensor::Tensor(int n_, int rank_) : n(n_), rank(rank_) {
    size_t sz = 1;
    for (int k = 0; k < rank; ++k) sz *= n;
    v.resize(sz);
}

DiffExpr& Tensor::at(std::initializer_list<int> idx) {
    return const_cast<DiffExpr&>(std::as_const(*this).at(idx));
}

const DiffExpr& Tensor::at(std::initializer_list<int> idx) const {
    if ((int)idx.size() != rank) throw std::logic_error("Tensor: rank mismatch");
    size_t off = 0;
    for (int i : idx) {
        if (i < 1 || i > n) throw std::out_of_range("Tensor: index out of range");
        off = off * n + (i - 1);
    }
    return v[off];
}

DeformBivector::DeformBivector(int n_, int degree_) : n(n_), degree(degree_) {
    if (degree != 1 && degree != 2)
        throw std::invalid_argument("DeformBivector: degree must be 1 or 2");
    A = Tensor(n, 2);
    B = Tensor(n, 3);
    C = Tensor(n, 3);
    D = Tensor(n, 4);
    if (degree == 2) {
        L = Tensor(n, 3);
        M = Tensor(n, 4);
        N = Tensor(n, 5);
    }
}

BiOperator to_bidist(const HydroOp& op) {
    BiOperator r(op.n);
    for (int i = 1; i <= op.n; ++i)
        for (int j = 1; j <= op.n; ++j) {
            BiDist& d = r.at(i, j);
            d.add(1, op.g(i, j));
            for (int k = 1; k <= op.n; ++k) d.add(0, op.b(i, j, k) * jet(k, 1));
        }
    return r;
}

BiOperator to_bidist(const DeformBivector& p) {
    BiOperator r(p.n);
    int top = p.degree + 1;
    for (int i = 1; i <= p.n; ++i)
        for (int j = 1; j <= p.n; ++j) {
            BiDist& d = r.at(i, j);
            d.add(top, p.A(i, j));
            for (int k = 1; k <= p.n; ++k) {
                d.add(top - 1, p.B(i, j, k) * jet(k, 1));
                d.add(top - 2, p.C(i, j, k) * jet(k, 2));
                for (int s = 1; s <= p.n; ++s)
                    d.add(top - 2, p.D(i, j, s, k) * jet(s, 1) * jet(k, 1));
            }
            if (p.degree == 2)
                for (int k = 1; k <= p.n; ++k) {
                    d.add(0, p.L(i, j, k) * jet(k, 3));
                    for (int s = 1; s <= p.n; ++s) {
                        d.add(0, p.M(i, j, k, s) * jet(k, 2) * jet(s, 1));
                        for (int t = 1; t <= p.n; ++t)
                            d.add(0, p.N(i, j, k, s, t) * jet(k, 1) * jet(s, 1) *
                                         jet(t, 1));
                    }
                }
        }
    return r;
}

BiOperator skew_defect(const BiOperator& p) {
    BiOperator r(p.n);
    for (int i = 1; i <= p.n; ++i)
        for (int j = 1; j <= p.n; ++j)
            r.at(i, j) = p.at(i, j) + flip(p.at(j, i));
    return r;
}

bool is_zero(const BiOperator& p) {
    for (auto& c : p.comp)
        if (!c.is_zero()) return false;
    return true;
}

BiOperator operator+(const BiOperator& a, const BiOperator& b) {
    BiOperator r(a.n);
    for (size_t k = 0; k < r.comp.size(); ++k) r.comp[k] = a.comp[k] + b.comp[k];
    return r;
}

BiOperator operator-(const BiOperator& a, const BiOperator& b) {
    BiOperator r(a.n);
    for (size_t k = 0; k < r.comp.size(); ++k) r.comp[k] = a.comp[k] - b.comp[k];
    return r;
}

BiOperator operator*(const BiOperator& a, const Scalar& c) {
    BiOperator r(a.n);
    DiffExpr f(c);
    for (size_t k = 0; k < r.comp.size(); ++k) r.comp[k] = a.comp[k] * f;
    return r;
}

namespace {

DiffExpr d0(const DiffExpr& e, int k) { return partial_jet(e, k, 0); }

} // namespace

std::vector<DiffExpr> skew_conditions_closed(const DeformBivector& p) {
    std::vector<DiffExpr> out;
    int n = p.n;
    if (p.degree == 1) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                out.push_back(p.A(i, j) + p.A(j, i));
                for (int k = 1; k <= n; ++k) {
                    out.push_back(p.B(i, j, k) + 2 * d0(p.A(j, i), k) - p.B(j, i, k));
                    out.push_back(p.C(i, j, k) + d0(p.A(j, i), k) - p.B(j, i, k) +
                                  p.C(j, i, k));
                    for (int r = 1; r <= k; ++r)
                        out.push_back(p.D(i, j, r, k) + d0(d0(p.A(j, i), k), r) -
                                      (d0(p.B(j, i, k), r) + d0(p.B(j, i, r), k)) /
                                          DiffExpr(2) +
                                      p.D(j, i, r, k));
                }
            }
        return out;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            out.push_back(p.A(i, j) - p.A(j, i));
            for (int k = 1; k <= n; ++k) {
                out.push_back(p.B(i, j, k) - 3 * d0(p.A(j, i), k) + p.B(j, i, k));
                out.push_back(p.C(i, j, k) - 3 * d0(p.A(j, i), k) +
                              2 * p.B(j, i, k) - p.C(j, i, k));
                out.push_back(p.L(i, j, k) - d0(p.A(j, i), k) + p.B(j, i, k) -
                              p.C(j, i, k) + p.L(j, i, k));
                for (int r = 1; r <= n; ++r) {
                    if (r <= k)
                        out.push_back(p.D(i, j, r, k) -
                                      3 * d0(d0(p.A(j, i), k), r) +
                                      d0(p.B(j, i, k), r) + d0(p.B(j, i, r), k) -
                                      p.D(j, i, r, k));
                    // first lower index of M is the u_xx slot
                    out.push_back(p.M(i, j, r, k) - 3 * d0(d0(p.A(j, i), k), r) +
                                  2 * d0(p.B(j, i, r), k) + d0(p.B(j, i, k), r) -
                                  d0(p.C(j, i, r), k) - 2 * p.D(j, i, r, k) +
                                  p.M(j, i, r, k));
                    for (int s = 1; s <= r; ++s)
                        if (r <= k)
                            out.push_back(
                                p.N(i, j, s, r, k) -
                                d0(d0(d0(p.A(j, i), k), r), s) +
                                (d0(d0(p.B(j, i, k), r), s) +
                                 d0(d0(p.B(j, i, s), k), r) +
                                 d0(d0(p.B(j, i, r), s), k)) /
                                    DiffExpr(3) -
                                (d0(p.D(j, i, r, k), s) + d0(p.D(j, i, k, s), r) +
                                 d0(p.D(j, i, s, r), k)) /
                                    DiffExpr(3) +
                                p.N(j, i, s, r, k));
                }
            }
        }
    return out;
}

long coefficient_count(int n, int degree) {
    long nn = n;
    if (degree == 1) return nn * nn * (nn * nn + 5 * nn + 2) / 2;
    if (degree == 2) return nn * nn * (nn + 2) * (nn * nn + 10 * nn + 3) / 6;
    throw std::invalid_argument("coefficient_count: degree must be 1 or 2");
}

long free_coefficient_count(int n, int degree) {
    long nn = n;
    long pairs = nn * (nn - 1) / 2;     // i < j
    long wpairs = nn * (nn + 1) / 2;    // i <= j
    long sym2 = nn * (nn + 1) / 2;      // symmetric (r,k)
    long sym3 = nn * (nn + 1) * (nn + 2) / 6;
    if (degree == 1) return pairs + wpairs * nn + pairs * nn + sym2 * pairs;
    if (degree == 2)
        return wpairs + pairs * nn + wpairs * nn + sym2 * wpairs + pairs * nn +
               pairs * nn * nn + sym3 * pairs;
    throw std::invalid_argument("free_coefficient_count: degree must be 1 or 2");
}

void complete_skew(DeformBivector& p) {
    int n = p.n;
    auto pd = [&](const DiffExpr& e, int k) { return d0(e, k); };
    if (p.degree == 1) {
        for (int i = 1; i <= n; ++i) {
            p.A(i, i) = DiffExpr();
            for (int k = 1; k <= n; ++k) {
                p.C(i, i, k) = p.B(i, i, k) / DiffExpr(2);
                for (int r = 1; r <= k; ++r) {
                    DiffExpr d = (pd(p.B(i, i, k), r) + pd(p.B(i, i, r), k)) /
                                 DiffExpr(4);
                    p.D(i, i, r, k) = d;
                    p.D(i, i, k, r) = d;
                }
            }
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                p.A(j, i) = -p.A(i, j);
                for (int k = 1; k <= n; ++k) {
                    p.B(j, i, k) = -2 * pd(p.A(i, j), k) + p.B(i, j, k);
                    p.C(j, i, k) =
                        -pd(p.A(i, j), k) + p.B(i, j, k) - p.C(i, j, k);
                    for (int r = 1; r <= k; ++r) {
                        DiffExpr d = -pd(pd(p.A(i, j), k), r) +
                                     (pd(p.B(i, j, k), r) + pd(p.B(i, j, r), k)) /
                                         DiffExpr(2) -
                                     p.D(i, j, r, k);
                        p.D(j, i, r, k) = d;
                        p.D(j, i, k, r) = d;
                        // keep the free slot symmetric too
                        p.D(i, j, k, r) = p.D(i, j, r, k);
                    }
                }
            }
        return;
    }
    // degree 2; A..D play the roles E, F, G, Htilde
    for (int i = 1; i <= n; ++i) {
        for (int k = 1; k <= n; ++k) {
            p.B(i, i, k) = DiffExpr(Scalar(Rat(3, 2))) * pd(p.A(i, i), k);
            p.L(i, i, k) =
                (pd(p.A(i, i), k) - p.B(i, i, k) + p.C(i, i, k)) / DiffExpr(2);
        }
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            if (j > i) p.A(j, i) = p.A(i, j);
            for (int k = 1; k <= n; ++k) {
                if (j > i) {
                    p.B(j, i, k) = 3 * pd(p.A(i, j), k) - p.B(i, j, k);
                    p.C(j, i, k) = 3 * pd(p.A(i, j), k) - 2 * p.B(i, j, k) +
                                   p.C(i, j, k);
                    p.L(j, i, k) = pd(p.A(i, j), k) - p.B(i, j, k) +
                                   p.C(i, j, k) - p.L(i, j, k);
                }
                for (int r = 1; r <= k; ++r) {
                    if (j > i) {
                        p.D(i, j, k, r) = p.D(i, j, r, k);
                        DiffExpr d = 3 * pd(pd(p.A(i, j), k), r) -
                                     pd(p.B(i, j, k), r) - pd(p.B(i, j, r), k) +
                                     p.D(i, j, r, k);
                        p.D(j, i, r, k) = d;
                        p.D(j, i, k, r) = d;
                    } else {
                        p.D(i, i, k, r) = p.D(i, i, r, k);
                    }
                }
            }
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) {
                    DiffExpr rhs = 3 * pd(pd(p.A(i, j), b), a) -
                                   2 * pd(p.B(i, j, a), b) - pd(p.B(i, j, b), a) +
                                   pd(p.C(i, j, a), b) + 2 * p.D(i, j, a, b);
                    if (j > i) p.M(j, i, a, b) = rhs - p.M(i, j, a, b);
                    else p.M(i, i, a, b) = rhs / DiffExpr(2);
                }
            for (int s = 1; s <= n; ++s)
                for (int r = s; r <= n; ++r)
                    for (int k = r; k <= n; ++k) {
                        DiffExpr rhs =
                            pd(pd(pd(p.A(i, j), k), r), s) -
                            (pd(pd(p.B(i, j, k), r), s) +
                             pd(pd(p.B(i, j, s), k), r) +
                             pd(pd(p.B(i, j, r), s), k)) /
                                DiffExpr(3) +
                            (pd(p.D(i, j, r, k), s) + pd(p.D(i, j, k, s), r) +
                             pd(p.D(i, j, s, r), k)) /
                                DiffExpr(3);
                        int perm[6][3] = {{s, r, k}, {s, k, r}, {r, s, k},
                                          {r, k, s}, {k, s, r}, {k, r, s}};
                        if (j > i) {
                            DiffExpr d = rhs - p.N(i, j, s, r, k);
                            for (auto& q : perm) {
                                p.N(j, i, q[0], q[1], q[2]) = d;
                                p.N(i, j, q[0], q[1], q[2]) = p.N(i, j, s, r, k);
                            }
                        } else {
                            DiffExpr d = rhs / DiffExpr(2);
                            for (auto& q : perm) p.N(i, i, q[0], q[1], q[2]) = d;
                        }
                    }
        }
}

DeformBivector generic_skew(int n, int degree, const std::string& prefix) {
    DeformBivector p(n, degree);
    std::vector<int> all;
    for (int k = 1; k <= n; ++k) all.push_back(k);
    auto fresh = [&](const std::string& slot) {
        return func(prefix + slot, all);
    };
    auto tag = [](std::initializer_list<int> idx) {
        std::string s;
        for (int i : idx) s += std::to_string(i);
        return s;
    };
    if (degree == 1) {
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    if (j > i) {
                        if (k == 1) p.A(i, j) = fresh("A" + tag({i, j}));
                        p.C(i, j, k) = fresh("C" + tag({i, j, k}));
                        for (int r = 1; r <= k; ++r) {
                            p.D(i, j, r, k) = fresh("D" + tag({i, j, r, k}));
                            p.D(i, j, k, r) = p.D(i, j, r, k);
                        }
                    }
                    p.B(i, j, k) = fresh("B" + tag({i, j, k}));
                }
        complete_skew(p);
        return p;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            p.A(i, j) = fresh("E" + tag({i, j}));
            for (int k = 1; k <= n; ++k) {
                if (j > i) {
                    p.B(i, j, k) = fresh("F" + tag({i, j, k}));
                    p.L(i, j, k) = fresh("L" + tag({i, j, k}));
                    for (int r = 1; r <= n; ++r)
                        p.M(i, j, k, r) = fresh("M" + tag({i, j, k, r}));
                }
                p.C(i, j, k) = fresh("G" + tag({i, j, k}));
                for (int r = 1; r <= k; ++r) {
                    p.D(i, j, r, k) = fresh("H" + tag({i, j, r, k}));
                    p.D(i, j, k, r) = p.D(i, j, r, k);
                }
            }
            if (j > i)
                for (int s = 1; s <= n; ++s)
                    for (int r = s; r <= n; ++r)
                        for (int k = r; k <= n; ++k) {
                            DiffExpr f = fresh("N" + tag({i, j, s, r, k}));
                            int perm[6][3] = {{s, r, k}, {s, k, r}, {r, s, k},
                                              {r, k, s}, {k, s, r}, {k, r, s}};
                            for (auto& q : perm)
                                p.N(i, j, q[0], q[1], q[2]) = f;
                        }
        }
    complete_skew(p);
    return p;
}

DeformBivector from_matrix(
    int n, int degree,
    const std::function<DiffExpr(int i, int j, int dpow)>& entry) {
    DeformBivector p(n, degree);
    int top = degree + 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            p.A(i, j) = entry(i, j, top);
            DiffExpr c1 = entry(i, j, top - 1);
            DiffExpr c0 = entry(i, j, top - 2);
            for (int k = 1; k <= n; ++k) {
                p.B(i, j, k) = partial_jet(c1, k, 1);
                p.C(i, j, k) = partial_jet(c0, k, 2);
                for (int r = 1; r <= n; ++r) {
                    DiffExpr d =
                        partial_jet(partial_jet(c0, r, 1), k, 1) / DiffExpr(2);
                    p.D(i, j, r, k) = d;
                }
            }
            if (degree == 2) {
                DiffExpr d0e = entry(i, j, 0);
                for (int k = 1; k <= n; ++k) {
                    p.L(i, j, k) = partial_jet(d0e, k, 3);
                    for (int r = 1; r <= n; ++r) {
                        p.M(i, j, k, r) =
                            partial_jet(partial_jet(d0e, k, 2), r, 1);
                        for (int s = 1; s <= n; ++s)
                            p.N(i, j, k, r, s) =
                                partial_jet(
                                    partial_jet(partial_jet(d0e, k, 1), r, 1),
                                    s, 1) /
                                DiffExpr(6);
                    }
                }
            }
        }
    // the display must reassemble exactly
    BiOperator rebuilt = to_bidist(p);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            BiDist d;
            for (int m = 0; m <= top; ++m) d.add(m, entry(i, j, m));
            if (!(rebuilt.at(i, j) - d).is_zero())
                throw std::invalid_argument(
                    "from_matrix: entry is not a homogeneous bivector display");
        }
    return p;
}

} // namespace hop
