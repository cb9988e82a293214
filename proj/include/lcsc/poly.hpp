#pragma once

#include "lcsc/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lcsc {

/// Dense univariate polynomial; coeffs[i] multiplies x^i. Trailing zeros are trimmed.
template <typename R>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<R> low_to_high) : c_(low_to_high) { trim(); }
    explicit Poly(std::vector<R> low_to_high) : c_(std::move(low_to_high)) { trim(); }
    Poly(const R& constant) : c_{constant} { trim(); }  // NOLINT(google-explicit-constructor)

    static Poly x() { return Poly(std::vector<R>{R(0), R(1)}); }
    static Poly monomial(std::size_t deg, const R& c = R(1)) {
        std::vector<R> v(deg + 1, R(0));
        v[deg] = c;
        return Poly(std::move(v));
    }

    /// −1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<R>& coeffs() const noexcept { return c_; }
    R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
    R lead() const { return c_.empty() ? R(0) : c_.back(); }

    template <typename V>
    V eval(const V& at) const {
        V acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + V(*it);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<R> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * R(static_cast<long>(i));
        return Poly(std::move(d));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly() - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; R must be a field.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly q, r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            R f = r.lead() / b.lead();
            Poly t = monomial(static_cast<std::size_t>(r.degree() - b.degree()), f);
            q += t;
            r -= t * b;
        }
        return {q, r};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        std::vector<R> v = c_;
        R l = lead();
        for (auto& x : v) x /= l;
        return Poly(std::move(v));
    }

    /// "x^3+4*x+1" style, highest degree first; "x^3+4x+1" when star is false.
    std::string to_string(const std::string& var = "x", bool star = true) const {
        if (c_.empty()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const R& a = c_[static_cast<std::size_t>(i)];
            if (a == R(0)) continue;
            bool neg = a < R(0);
            R mag = neg ? R(-a) : a;
            s += neg ? "-" : (s.empty() ? "" : "+");
            bool unit = mag == R(1);
            if (i == 0 || !unit) s += to_str(mag);
            if (i > 0) {
                if (!unit && star) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    static std::string to_str(const R& x) { return x.get_str(); }
    void trim() {
        while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
    }
    std::vector<R> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Scalar>;

template <typename R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<Scalar> v;
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return RatPoly(std::move(v));
}

/// Integer polynomial with the same roots (denominators cleared, content removed, positive lead).
inline IntPoly primitive_part(const RatPoly& p) {
    if (p.is_zero()) return {};
    Integer l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
    std::vector<Integer> v;
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Scalar t = c * l;
        v.push_back(t.get_num());
        g = gcd(g, t.get_num());
    }
    if (p.lead() < 0) g = -g;
    for (auto& x : v) x /= g;
    return IntPoly(std::move(v));
}

/// Positive divisors of |n| (n ≠ 0), by trial division.
inline std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

struct RationalRootSplit {
    std::vector<Scalar> roots;  // distinct, ascending
    RatPoly rest;               // monic, no rational roots
};

/// Splits off all rational roots (rational root theorem on the primitive part).
inline RationalRootSplit rational_root_factorization(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
    RationalRootSplit out;
    RatPoly rest = p.monic();
    auto strip = [&](const Scalar& r) {
        RatPoly lin({-r, Scalar(1)});
        bool found = false;
        while (rest.degree() > 0 && sgn(rest.eval(r)) == 0) {
            rest = divmod(rest, lin).first;
            found = true;
        }
        if (found) out.roots.push_back(r);
    };
    strip(0);
    if (rest.degree() > 0) {
        IntPoly z = primitive_part(rest);
        auto ps = positive_divisors(z.coeff(0));
        auto qs = positive_divisors(z.lead());
        std::set<Scalar> cands;
        for (const auto& a : ps)
            for (const auto& b : qs) {
                cands.insert(rational(a, b));
                cands.insert(-rational(a, b));
            }
        for (const auto& r : cands) strip(r);
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.rest = rest;
    return out;
}

/// Parses "x^4-x-1", "3*x^2 + 2x - 5", "-x"; integer coefficients.
inline IntPoly parse_int_poly(const std::string& text, char var = 'x') {
    std::vector<Integer> coeffs;
    auto add = [&](std::size_t deg, const Integer& c) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Integer(0));
        coeffs[deg] += c;
    };
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    skip();
    if (i == text.size()) throw ParseError("empty polynomial", 0);
    bool first = true;
    while (true) {
        skip();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw ParseError("expected '+' or '-'", i);
        }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        Integer c = 1;
        bool have_coef = i > start;
        if (have_coef) c = Integer(text.substr(start, i - start));
        skip();
        if (i < text.size() && text[i] == '*') {
            if (!have_coef) throw ParseError("'*' without coefficient", i);
            ++i;
            skip();
        }
        std::size_t deg = 0;
        if (i < text.size() && text[i] == var) {
            ++i;
            deg = 1;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                std::size_t s = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (s == i) throw ParseError("expected exponent", i);
                deg = std::stoul(text.substr(s, i - s));
            }
        } else if (!have_coef) {
            throw ParseError("expected coefficient or '" + std::string(1, var) + "'", i);
        }
        add(deg, sign * c);
        first = false;
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace lcsc
