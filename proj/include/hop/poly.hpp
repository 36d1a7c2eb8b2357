#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hop/scalar.hpp"

namespace hop {

using AtomId = std::uint32_t;

// total order on interned atoms (see atom.cpp); smaller sorts first
int atom_cmp(AtomId a, AtomId b);

// Power product of atoms, factors sorted by atom_cmp, exponents > 0.
struct Monomial {
    std::vector<std::pair<AtomId, int>> factors;

    int total_degree() const {
        int d = 0;
        for (auto& [a, e] : factors) d += e;
        return d;
    }
    int exponent_of(AtomId a) const {
        for (auto& [b, e] : factors)
            if (b == a) return e;
        return 0;
    }
    bool empty() const { return factors.empty(); }
};

// graded-lex: higher total degree first, then lexicographic on factors
int monomial_cmp(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
// a / b; requires b | a
Monomial monomial_div(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& b, const Monomial& a);
Monomial monomial_gcd(const Monomial& a, const Monomial& b);

// Exact multivariate polynomial: terms sorted descending by monomial_cmp,
// no zero coefficients.  The empty term list is the zero polynomial.
struct Poly {
    std::vector<std::pair<Monomial, Scalar>> terms;

    Poly() = default;
    explicit Poly(Scalar c) {
        if (!c.is_zero()) terms.push_back({Monomial{}, std::move(c)});
    }
    static Poly atom(AtomId a) {
        Poly p;
        p.terms.push_back({Monomial{{{a, 1}}}, Scalar(1)});
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms[0].first.empty());
    }
    bool is_one() const {
        return terms.size() == 1 && terms[0].first.empty() && terms[0].second.is_one();
    }
    Scalar constant_value() const {
        return terms.empty() ? Scalar() : terms[0].second;
    }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Scalar& c);
Poly poly_pow(const Poly& a, int e);

// division with remainder by the leading term; exact quotient or nullopt
bool poly_divide_exact(const Poly& a, const Poly& b, Poly* quotient);

// gcd, monic-normalised on its leading coefficient
Poly poly_gcd(Poly a, Poly b);

// every atom occurring in p, deduplicated
std::vector<AtomId> poly_atoms(const Poly& p);

// d p / d atom (formal, chain rules handled one level up)
Poly poly_partial_atom(const Poly& p, AtomId a);

// arbitrary but deterministic total order (for use as map keys)
int poly_cmp(const Poly& a, const Poly& b);

} // namespace hop
