#pragma once

#include <optional>

#include "hop/schouten.hpp"
#include "hop/transform.hpp"

namespace hop {

// A named operator from the built-in library: either a hydrodynamic
// structure (order 0) or a deformation term attached to a base structure.
struct CatalogEntry {
    std::string name;
    int n = 0;
    int order = 0;        // 0: undeformed operator, k: k-th order term
    std::string base;     // order > 0: name of the structure being deformed
    std::string note;
    BiOperator op;

    CatalogEntry() : op(1) {}
};

std::vector<std::string> catalog_names();
bool catalog_has(const std::string& name);
CatalogEntry catalog_entry(const std::string& name);

// metric/b form of an order-0 entry
std::optional<HydroOp> catalog_hydro(const std::string& name);

// the first-order partner an order-2 term is paired with in its series
std::optional<BiOperator> catalog_partner(const std::string& name);

// distinct formal-function symbols appearing in an entry
std::vector<std::string> catalog_parameters(const std::string& name);

struct CheckLine {
    std::string label;
    bool pass = false;
};

struct CheckReport {
    std::vector<CheckLine> lines;

    void add(const std::string& label, bool ok) { lines.push_back({label, ok}); }
    void merge(const CheckReport& o) {
        lines.insert(lines.end(), o.lines.begin(), o.lines.end());
    }
    bool pass() const {
        for (auto& l : lines)
            if (!l.pass) return false;
        return !lines.empty();
    }
};

// per-entry suite: order 0 -> skew + Jacobi + metric/b flatness conditions;
// order 1 -> skew + [P0,P1] = 0; order 2 -> skew + 2[P0,P2] + [P1,P1] = 0
CheckReport verify_entry(const std::string& name);
CheckReport verify_all_entries();

// the vector-field eliminations that cut each general solution down to the
// reduced families stored in the catalog
CheckReport verify_reductions();

// coordinate-change identifications between catalog structures, and the
// parameter-transport rules of the deformation families
CheckReport verify_equivalences();

// tensor extraction from a homogeneous bivector in the delta basis
DeformBivector extract_deform(const BiOperator& p, int degree);

// parametrized builders behind the catalog entries, exposed so callers can
// instantiate a family at arbitrary coefficient expressions
BiOperator build_def1_p1(const DiffExpr& p, const DiffExpr& q,
                         const DiffExpr& r);
BiOperator build_def1_p1_general(const DiffExpr& A, const DiffExpr& B112,
                                 const DiffExpr& B212, const DiffExpr& p,
                                 const DiffExpr& q, const DiffExpr& r);
BiOperator build_def1_p2(const DiffExpr& e, const DiffExpr& g,
                         const DiffExpr& h, const DiffExpr& l,
                         const DiffExpr& m, const DiffExpr& n,
                         const DiffExpr& p, const DiffExpr& q);
// the rejected reading of the order-2 d-coefficient (quadratic and
// second-derivative slots exchanged); fails the skew-symmetry test
BiOperator build_def1_p2_swapped(const DiffExpr& e, const DiffExpr& g,
                                 const DiffExpr& h, const DiffExpr& l,
                                 const DiffExpr& m, const DiffExpr& n,
                                 const DiffExpr& p, const DiffExpr& q);
BiOperator build_def2_p1(const DiffExpr& r, const DiffExpr& s);
BiOperator build_def2_p1_general(const DiffExpr& A, const DiffExpr& B112,
                                 const DiffExpr& B212, const DiffExpr& r,
                                 const DiffExpr& s);
BiOperator build_def2_p2(const DiffExpr& r, const DiffExpr& s,
                         const DiffExpr& p);
BiOperator build_def3_p1(const DiffExpr& a, const DiffExpr& r,
                         const DiffExpr& s, const DiffExpr& b112,
                         const DiffExpr& b212, const DiffExpr& b221);
BiOperator build_def5_p1(const DiffExpr& b, const DiffExpr& c21,
                         const DiffExpr& c31, const DiffExpr& c32,
                         const DiffExpr& e21, const DiffExpr& e31,
                         const DiffExpr& e32);

} // namespace hop
