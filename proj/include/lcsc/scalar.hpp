#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcsc {

/// Exact rational scalar. GMP keeps it canonical (gcd 1, positive denominator).
using Scalar = mpq_class;
using Integer = mpz_class;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define LCSC_DEFINE_ERROR(Name)                                                \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}  \
    }

LCSC_DEFINE_ERROR(IndexOutOfRange);
LCSC_DEFINE_ERROR(DimensionMismatch);
LCSC_DEFINE_ERROR(DegenerateForm);
LCSC_DEFINE_ERROR(NotPositiveDefinite);
LCSC_DEFINE_ERROR(IrrationalVolume);
LCSC_DEFINE_ERROR(SingularMatrix);

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error("ParseError at " + std::to_string(position) + ": " + what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// p/q in canonical form (mpq_class(p, q) alone does not reduce).
inline Scalar rational(const Integer& p, const Integer& q) {
    if (q == 0) throw std::domain_error("zero denominator");
    Scalar r(p, q);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Scalar& q) { return q.get_str(); }

/// Parses "p", "-p", "p/q". Throws ParseError.
inline Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw ParseError("empty rational", 0);
    std::size_t start = (s[0] == '-') ? 1 : 0;
    bool slash = false;
    for (std::size_t i = start; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (slash || i == start || i + 1 == s.size()) throw ParseError("malformed rational '" + s + "'", i);
            slash = true;
        } else if (c < '0' || c > '9') {
            throw ParseError("malformed rational '" + s + "'", i);
        }
    }
    if (start == s.size()) throw ParseError("malformed rational '" + s + "'", start);
    Scalar q;
    if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'", 0);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 0);
    q.canonicalize();
    return q;
}

inline int sign(const Scalar& q) { return sgn(q); }

}  // namespace lcsc
