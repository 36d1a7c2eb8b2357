#include "hop/report.hpp"

#include <sstream>

#include <json.hpp>

#include "hop/parse.hpp"

namespace hop {

void finish(Report& rep) {
    rep.pass = true;
    for (const auto& c : rep.components)
        if (!c.zero) rep.pass = false;
}

void add_components(Report& rep, const BiOperator& r, bool keep_zero) {
    for (int i = 1; i <= r.n; ++i)
        for (int j = 1; j <= r.n; ++j)
            for (const auto& [m, c] : r.at(i, j).coeffs) {
                bool zero = c.is_zero();
                if (zero && !keep_zero) continue;
                rep.components.push_back(
                    {{i, j}, "d^" + std::to_string(m),
                     zero ? "" : print_expr(c), zero});
            }
    finish(rep);
}

void add_components(Report& rep, const TriOperator& r, bool keep_zero) {
    for (int i = 1; i <= r.n; ++i)
        for (int j = 1; j <= r.n; ++j)
            for (int k = 1; k <= r.n; ++k)
                for (const auto& [mn, c] : r.at(i, j, k).coeffs) {
                    bool zero = c.is_zero();
                    if (zero && !keep_zero) continue;
                    rep.components.push_back(
                        {{i, j, k},
                         "dy^" + std::to_string(mn.first) + " dz^" +
                             std::to_string(mn.second),
                         zero ? "" : print_expr(c), zero});
                }
    finish(rep);
}

void add_components(Report& rep, const std::vector<GrinbergResidual>& r) {
    for (const auto& g : r) {
        bool zero = g.value.is_zero();
        rep.components.push_back(
            {g.indices, g.condition, zero ? "" : print_expr(g.value), zero});
    }
    finish(rep);
}

void add_line(Report& rep, const std::string& label, bool ok) {
    rep.components.push_back({{}, label, "", ok});
    finish(rep);
}

std::string to_json(const Report& rep) {
    nlohmann::ordered_json j;
    j["check"] = rep.check;
    j["case"] = rep.case_name;
    j["components"] = nlohmann::ordered_json::array();
    for (const auto& c : rep.components)
        j["components"].push_back({{"indices", c.indices},
                                   {"coefficient", c.coefficient},
                                   {"residual", c.residual},
                                   {"zero", c.zero}});
    j["pass"] = rep.pass;
    j["seed"] = rep.seed;
    j["elapsed_ms"] = rep.elapsed_ms;
    return j.dump(2) + "\n";
}

std::string to_text(const Report& rep) {
    std::ostringstream os;
    os << rep.check;
    if (!rep.case_name.empty()) os << " " << rep.case_name;
    os << ": " << (rep.pass ? "pass" : "FAIL") << "  (" << rep.elapsed_ms
       << " ms)\n";
    for (const auto& c : rep.components) {
        if (c.zero && c.residual.empty()) continue;
        os << "  ";
        if (!c.indices.empty()) {
            os << "(";
            for (size_t k = 0; k < c.indices.size(); ++k)
                os << (k ? "," : "") << c.indices[k];
            os << ") ";
        }
        os << c.coefficient;
        if (!c.residual.empty()) os << ": " << c.residual;
        os << "\n";
    }
    return os.str();
}

} // namespace hop
