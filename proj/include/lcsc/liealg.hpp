#pragma once

#include "lcsc/exterior.hpp"
#include "lcsc/symplectic.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lcsc {

LCSC_DEFINE_ERROR(SchemaError);
LCSC_DEFINE_ERROR(JacobiFailure);

/// Lie algebra given by the differentials de^k of the dual basis.
///
/// With [e_i, e_j] = Σ_k c^k_ij e_k, the Chevalley–Eilenberg convention is
/// de^k = −Σ_{i<j} c^k_ij e^{ij}.
class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(std::vector<Form> de) : de_(std::move(de)) {
        int m = dimension();
        for (const auto& f : de_)
            if (f.dimension() != m || f.degree() != 2) throw DimensionMismatch("each de^k must be a 2-form in dimension m");
    }

    static LieAlgebra abelian(int m) { return LieAlgebra(std::vector<Form>(static_cast<std::size_t>(m), Form(m, 2))); }

    int dimension() const noexcept { return static_cast<int>(de_.size()); }
    const std::vector<Form>& differentials() const noexcept { return de_; }
    const Form& de(int k) const { return de_.at(static_cast<std::size_t>(k - 1)); }

    /// c^k_ij (1-based), read off de^k.
    Scalar structure_constant(int k, int i, int j) const {
        if (i == j) return 0;
        Scalar c = de(k).coefficient(MultiIndex((1u << (i - 1)) | (1u << (j - 1))));
        return i < j ? Scalar(-c) : c;
    }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.de_ == b.de_; }

private:
    std::vector<Form> de_;
};

/// d on e^{i1…ih}: Σ_p (−1)^{p−1} e^{i1}∧…∧de^{ip}∧…∧e^{ih}.
inline Form ce_apply(const LieAlgebra& g, const Form& a) {
    int m = g.dimension();
    Form out(m, a.degree() + 1);
    if (a.degree() + 1 > m) return out;
    for (const auto& [I, c] : a.terms()) {
        auto idx = I.indices();
        for (std::size_t p = 0; p < idx.size(); ++p) {
            std::vector<int> before(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(p));
            std::vector<int> after(idx.begin() + static_cast<std::ptrdiff_t>(p) + 1, idx.end());
            Form term = wedge(wedge(Form::monomial(m, before), g.de(idx[p])), Form::monomial(m, after));
            out += ((p % 2) ? Scalar(-c) : c) * term;
        }
    }
    return out;
}

inline GradedOperator ce_differential(const LieAlgebra& g) {
    return GradedOperator::from_monomials(g.dimension(), 1, [&](const Form& e) { return ce_apply(g, e); });
}

/// d∘d = 0 on every generator.
inline bool check_jacobi(const LieAlgebra& g) {
    for (const auto& f : g.differentials())
        if (!ce_apply(g, f).is_zero()) return false;
    return true;
}

/// trace(ad_{e_i}) = Σ_k c^k_ik.
inline Scalar ad_trace(const LieAlgebra& g, int i) {
    Scalar t = 0;
    for (int k = 1; k <= g.dimension(); ++k) t += g.structure_constant(k, i, k);
    return t;
}

inline bool is_unimodular(const LieAlgebra& g) {
    for (int i = 1; i <= g.dimension(); ++i)
        if (sgn(ad_trace(g, i)) != 0) return false;
    return true;
}

/// Parses Salamon notation "(0,0,12,0)", "(14,-24,-12,0)", "(0,1/2*15+c*16,…)".
/// A slot is "0" or a signed sum of terms "[p/q*]ij" with single-digit indices.
inline LieAlgebra parse_salamon(const std::string& s, int m) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && s[i] == ' ') ++i;
    };
    auto digit = [&](std::size_t at) { return at < s.size() && std::isdigit(static_cast<unsigned char>(s[at])); };
    skip();
    if (i >= s.size() || s[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<Form> de;
    while (true) {
        Form slot(m, 2);
        skip();
        bool first = true;
        bool zero_slot = false;
        while (true) {
            skip();
            if (i >= s.size()) throw ParseError("unterminated structure equations", i);
            if (s[i] == ',' || s[i] == ')') {
                if (first) throw ParseError("empty slot", i);
                break;
            }
            Scalar sign = 1;
            if (s[i] == '+' || s[i] == '-') {
                sign = s[i] == '-' ? -1 : 1;
                ++i;
                skip();
            } else if (!first) {
                throw ParseError("expected '+', '-', ',' or ')'", i);
            }
            std::size_t start = i;
            while (digit(i) || (i < s.size() && s[i] == '/')) ++i;
            std::string tok = s.substr(start, i - start);
            skip();
            Scalar coef = 1;
            if (i < s.size() && s[i] == '*') {
                if (tok.empty()) throw ParseError("missing coefficient before '*'", i);
                coef = parse_scalar(tok);
                ++i;
                skip();
                start = i;
                while (digit(i)) ++i;
                tok = s.substr(start, i - start);
            }
            if (tok == "0" && first) {
                zero_slot = true;
                first = false;
                continue;
            }
            if (zero_slot) throw ParseError("'0' cannot be combined with other terms", start);
            if (tok.size() != 2 || tok.find('/') != std::string::npos) throw ParseError("expected an index pair like '12'", start);
            int a = tok[0] - '0', b = tok[1] - '0';
            for (int x : {a, b})
                if (x < 1 || x > m) throw IndexOutOfRange("index " + std::to_string(x) + " outside 1.." + std::to_string(m));
            if (a == b) throw ParseError("repeated index in '" + tok + "'", start);
            slot += Form::monomial(m, {a, b}, sign * coef);
            first = false;
        }
        de.push_back(std::move(slot));
        if (s[i] == ')') {
            ++i;
            break;
        }
        ++i;
    }
    skip();
    if (i != s.size()) throw ParseError("trailing characters", i);
    if (static_cast<int>(de.size()) != m)
        throw ParseError("expected " + std::to_string(m) + " slots, got " + std::to_string(de.size()), 0);
    return LieAlgebra(std::move(de));
}

/// Inverse of parse_salamon (requires m <= 9).
inline std::string pretty_print(const LieAlgebra& g) {
    if (g.dimension() > 9) throw IndexOutOfRange("Salamon notation needs m <= 9");
    std::string out = "(";
    for (int k = 1; k <= g.dimension(); ++k) {
        if (k > 1) out += ",";
        const Form& f = g.de(k);
        if (f.is_zero()) {
            out += "0";
            continue;
        }
        bool first = true;
        for (const auto& [I, c] : f.terms()) {
            Scalar a = abs(c);
            out += sgn(c) < 0 ? "-" : (first ? "" : "+");
            if (a != 1) out += a.get_str() + "*";
            out += I.to_string(g.dimension());
            first = false;
        }
    }
    return out + ")";
}

/// A loaded algebra with optional geometric data.
struct AlgebraBundle {
    std::string name;
    LieAlgebra algebra;
    std::optional<Form> omega;
    std::optional<Form> theta;
    std::optional<AlmostComplexStructure> j;
    std::optional<Metric> metric;
};

namespace detail {

inline Scalar json_scalar(const nlohmann::json& v, const std::string& where) {
    try {
        if (v.is_string()) return parse_scalar(v.get<std::string>());
        if (v.is_number_integer()) return Scalar(v.get<long>());
    } catch (const ParseError& e) {
        throw SchemaError(where + ": " + e.what());
    }
    throw SchemaError(where + ": expected a rational string \"p/q\" or an integer");
}

inline int json_index(const nlohmann::json& v, int m, const std::string& where) {
    if (!v.is_number_integer()) throw SchemaError(where + ": index must be an integer");
    int i = v.get<int>();
    if (i < 1 || i > m) throw SchemaError(where + ": index " + std::to_string(i) + " outside 1.." + std::to_string(m));
    return i;
}

inline Matrix json_matrix(const nlohmann::json& v, int m, const std::string& where) {
    if (!v.is_array() || static_cast<int>(v.size()) != m) throw SchemaError(where + ": expected " + std::to_string(m) + " rows");
    Matrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        const auto& row = v[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != m) throw SchemaError(where + ": row " + std::to_string(r + 1) + " has wrong length");
        for (int c = 0; c < m; ++c)
            a(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = json_scalar(row[static_cast<std::size_t>(c)], where);
    }
    return a;
}

/// A 2-form from [[i,j,"p/q"],…] or from a string like "e12+e34".
inline Form json_two_form(const nlohmann::json& v, int m, const std::string& where) {
    if (v.is_string()) {
        try {
            return parse_form(v.get<std::string>(), m, 2);
        } catch (const Error& e) {
            throw SchemaError(where + ": " + e.what());
        }
    }
    if (!v.is_array()) throw SchemaError(where + ": expected a list of [i, j, \"p/q\"]");
    Matrix w(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    std::vector<std::vector<bool>> set(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m)));
    for (const auto& e : v) {
        if (!e.is_array() || e.size() != 3) throw SchemaError(where + ": entries must be [i, j, \"p/q\"]");
        auto i = static_cast<std::size_t>(json_index(e[0], m, where) - 1);
        auto j = static_cast<std::size_t>(json_index(e[1], m, where) - 1);
        Scalar c = json_scalar(e[2], where);
        if (i == j) {
            if (sgn(c) != 0) throw SchemaError(where + ": nonzero diagonal entry, matrix is not skew");
            continue;
        }
        if ((set[i][j] && w(i, j) != c) || (set[j][i] && w(j, i) != -c))
            throw SchemaError(where + ": conflicting entries, matrix is not skew");
        w(i, j) = c;
        w(j, i) = -c;
        set[i][j] = set[j][i] = true;
    }
    return two_form_from_matrix(w);
}

inline Form json_one_form(const nlohmann::json& v, int m, const std::string& where) {
    if (v.is_string()) {
        try {
            return parse_form(v.get<std::string>(), m, 1);
        } catch (const Error& e) {
            throw SchemaError(where + ": " + e.what());
        }
    }
    if (!v.is_array()) throw SchemaError(where + ": expected a list of [i, \"p/q\"]");
    Form f(m, 1);
    for (const auto& e : v) {
        if (!e.is_array() || e.size() != 2) throw SchemaError(where + ": entries must be [i, \"p/q\"]");
        f += Form::monomial(m, {json_index(e[0], m, where)}, json_scalar(e[1], where));
    }
    return f;
}

}  // namespace detail

/// Loads and validates a bundle. "structure" is a Salamon string or a list
/// [[k, i, j, "p/q"], …] meaning de^k += (p/q)·e^i∧e^j.
inline AlgebraBundle load_algebra(const nlohmann::json& doc) {
    using namespace detail;
    if (!doc.is_object()) throw SchemaError("document must be a JSON object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw SchemaError("missing integer field 'dim'");
    int m = doc["dim"].get<int>();
    if (m < 0 || m > kMaxDimension) throw SchemaError("dim " + std::to_string(m) + " outside 0.." + std::to_string(kMaxDimension));
    if (!doc.contains("structure")) throw SchemaError("missing field 'structure'");

    AlgebraBundle b;
    b.name = doc.value("name", std::string("unnamed"));
    const auto& st = doc["structure"];
    if (st.is_string()) {
        try {
            b.algebra = parse_salamon(st.get<std::string>(), m);
        } catch (const Error& e) {
            throw SchemaError(std::string("structure: ") + e.what());
        }
    } else if (st.is_array()) {
        std::vector<Form> de(static_cast<std::size_t>(m), Form(m, 2));
        for (const auto& e : st) {
            if (!e.is_array() || e.size() != 4) throw SchemaError("structure: entries must be [k, i, j, \"p/q\"]");
            int k = json_index(e[0], m, "structure"), i = json_index(e[1], m, "structure"), j = json_index(e[2], m, "structure");
            if (i == j) throw SchemaError("structure: repeated index in e^" + std::to_string(i) + "∧e^" + std::to_string(j));
            de[static_cast<std::size_t>(k - 1)] += Form::monomial(m, {i, j}, json_scalar(e[3], "structure"));
        }
        b.algebra = LieAlgebra(std::move(de));
    } else {
        throw SchemaError("structure: expected a Salamon string or a list");
    }
    if (!check_jacobi(b.algebra)) {
        std::string bad;
        for (int k = 1; k <= m; ++k)
            if (!ce_apply(b.algebra, b.algebra.de(k)).is_zero()) bad += (bad.empty() ? "" : ", ") + ("d(de^" + std::to_string(k) + ") = " + ce_apply(b.algebra, b.algebra.de(k)).to_string());
        throw JacobiFailure(b.name + ": d∘d ≠ 0: " + bad);
    }
    if (doc.contains("omega")) b.omega = json_two_form(doc["omega"], m, "omega");
    if (doc.contains("theta")) b.theta = json_one_form(doc["theta"], m, "theta");
    try {
        if (doc.contains("J")) b.j = AlmostComplexStructure(json_matrix(doc["J"], m, "J"));
        if (doc.contains("metric")) b.metric = Metric(json_matrix(doc["metric"], m, "metric"));
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(e.what());
    }
    return b;
}

}  // namespace lcsc
