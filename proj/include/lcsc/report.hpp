#pragma once

#include "lcsc/catalog.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace lcsc {

LCSC_DEFINE_ERROR(GridMismatch);

struct CellDiff {
    Theory theory = Theory::deRham;
    int h = 0;
    Scalar k;
    std::size_t expected_dim = 0, actual_dim = 0;
    bool span_ok = true;

    std::string describe() const {
        std::string s = theory_name(theory) + " h=" + std::to_string(h) + " k=" + to_string(k);
        if (expected_dim != actual_dim) s += ": dim " + std::to_string(actual_dim) + ", expected " + std::to_string(expected_dim);
        if (!span_ok) s += ": representatives span a different class space";
        return s;
    }
};

struct DiffReport {
    std::vector<CellDiff> diffs;
    std::size_t cells_compared = 0;

    bool empty() const noexcept { return diffs.empty(); }
};

/// forms represent exactly the classes of g: closed, independent modulo the denominator, and spanning.
inline bool span_matches(const CohomologyGroup& g, const std::vector<Form>& forms) {
    Subspace s = form_span(g.m, g.h, forms);
    if (s.dim() != forms.size() || !g.numerator.contains(s)) return false;
    return sum(s, g.denominator) == g.numerator && s.dim() == g.dim();
}

/// Cell-level comparison over the golden grid.
inline DiffReport golden_diff(const CohomologyTable& computed, const GoldenTable& golden) {
    if (computed.dimension != golden.dimension) throw GridMismatch("tables of different dimension");
    DiffReport r;
    for (Theory t : golden.theories)
        for (int h = 0; h <= golden.dimension; ++h)
            for (const auto& k : golden.weights) {
                if (!computed.has(t, h, k))
                    throw GridMismatch("computed table lacks " + theory_name(t) + " h=" + std::to_string(h) + " k=" + to_string(k));
                const auto& g = computed.at(t, h, k);
                CellDiff d{t, h, k, golden.dim(t, h, k), g.dim(), true};
                if (const GoldenCell* cell = golden.find(t, h, k); cell && cell->span) d.span_ok = span_matches(g, *cell->span);
                ++r.cells_compared;
                if (d.expected_dim != d.actual_dim || !d.span_ok) r.diffs.push_back(d);
            }
    return r;
}

inline std::string format_diff(const DiffReport& r) {
    std::ostringstream os;
    os << r.cells_compared << " cells compared, " << r.diffs.size() << " differ\n";
    for (const auto& d : r.diffs) os << "  " << d.describe() << "\n";
    return os.str();
}

/// theory,h,k,dim rows in grid order.
inline std::string to_csv(const CohomologyTable& t) {
    std::ostringstream os;
    os << "theory,h,k,dim\n";
    for (Theory th : t.theories)
        for (int h = 0; h <= t.dimension; ++h)
            for (const auto& k : t.weights) os << theory_name(th) << "," << h << "," << k.get_str() << "," << t.dim(th, h, k) << "\n";
    return os.str();
}

inline nlohmann::json form_to_json(const Form& f) {
    auto out = nlohmann::json::array();
    for (const auto& [idx, c] : f.terms()) {
        std::string mono = "e";
        for (int i : idx.indices()) mono += std::to_string(i);
        if (idx.indices().empty()) mono = "1";
        out.push_back({mono, c.get_str()});
    }
    return out;
}

inline Form form_from_json(const nlohmann::json& j, int m, int h) {
    Form f(m, h);
    for (const auto& term : j) {
        std::string mono = term.at(0).get<std::string>();
        Scalar c = parse_scalar(term.at(1).get<std::string>());
        f += mono == "1" ? Form::constant(m, c) : c * parse_form(mono, m);
    }
    return f;
}

inline nlohmann::json to_json(const CohomologyTable& t) {
    nlohmann::json j;
    j["name"] = t.name;
    j["dimension"] = t.dimension;
    j["triple"] = t.triple_source;
    j["weights"] = nlohmann::json::array();
    for (const auto& k : t.weights) j["weights"].push_back(k.get_str());
    j["theories"] = nlohmann::json::array();
    for (Theory th : t.theories) j["theories"].push_back(theory_name(th));
    j["cells"] = nlohmann::json::array();
    for (Theory th : t.theories)
        for (int h = 0; h <= t.dimension; ++h)
            for (const auto& k : t.weights) {
                const auto& g = t.at(th, h, k);
                nlohmann::json reps = nlohmann::json::array();
                for (const auto& f : g.basis()) reps.push_back(form_to_json(f));
                j["cells"].push_back({{"theory", theory_name(th)}, {"h", h}, {"k", k.get_str()}, {"dim", g.dim()}, {"representatives", reps}});
            }
    return j;
}

inline nlohmann::json to_json(const GoldenTable& g) {
    nlohmann::json j;
    j["name"] = g.name;
    j["dimension"] = g.dimension;
    j["weights"] = nlohmann::json::array();
    for (const auto& k : g.weights) j["weights"].push_back(k.get_str());
    j["theories"] = nlohmann::json::array();
    for (Theory th : g.theories) j["theories"].push_back(theory_name(th));
    j["cells"] = nlohmann::json::array();
    for (const auto& c : g.cells) {
        nlohmann::json cell{{"theory", theory_name(c.theory)}, {"h", c.h}, {"k", c.k.get_str()}, {"dim", c.dim}};
        if (c.span) {
            cell["representatives"] = nlohmann::json::array();
            for (const auto& f : *c.span) cell["representatives"].push_back(form_to_json(f));
        }
        j["cells"].push_back(cell);
    }
    return j;
}

/// Reads the export schema; cells with dim 0 may be omitted, representatives are optional.
inline GoldenTable golden_from_json(const nlohmann::json& j) {
    try {
        GoldenTable g;
        g.name = j.value("name", "");
        g.dimension = j.at("dimension").get<int>();
        for (const auto& k : j.at("weights")) g.weights.push_back(parse_scalar(k.is_string() ? k.get<std::string>() : std::to_string(k.get<long>())));
        for (const auto& t : j.at("theories")) g.theories.push_back(parse_theory(t.get<std::string>()));
        for (const auto& c : j.at("cells")) {
            GoldenCell cell;
            cell.theory = parse_theory(c.at("theory").get<std::string>());
            cell.h = c.at("h").get<int>();
            const auto& k = c.at("k");
            cell.k = parse_scalar(k.is_string() ? k.get<std::string>() : std::to_string(k.get<long>()));
            cell.dim = c.at("dim").get<std::size_t>();
            if (c.contains("representatives")) {
                std::vector<Form> forms;
                for (const auto& f : c["representatives"]) forms.push_back(form_from_json(f, g.dimension, cell.h));
                cell.span = forms;
            }
            if (cell.dim != 0 || cell.span) g.cells.push_back(std::move(cell));
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("golden table: ") + e.what(), 0);
    }
}

/// Golden table of the same grid built from a computed table (dimensions and representatives).
inline GoldenTable as_golden(const CohomologyTable& t) { return golden_from_json(to_json(t)); }

}  // namespace lcsc
