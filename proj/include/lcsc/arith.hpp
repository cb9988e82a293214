#pragma once

#include "lcsc/poly.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace lcsc {

LCSC_DEFINE_ERROR(DeterminantNotOne);
LCSC_DEFINE_ERROR(NotSquarefree);
LCSC_DEFINE_ERROR(WrongRootPattern);
LCSC_DEFINE_ERROR(LeadingCoefficientVanishes);
LCSC_DEFINE_ERROR(SearchExhausted);
LCSC_DEFINE_ERROR(CertificateNotApplicable);
LCSC_DEFINE_ERROR(InvalidInput);

using IntMatrix3 = std::array<std::array<Integer, 3>, 3>;

inline Integer det3(const IntMatrix3& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

/// x³ − a x² + b x − 1 with a = trace and b = sum of principal 2-minors.
inline IntPoly char_poly_3(const IntMatrix3& m) {
    Integer d = det3(m);
    if (d != 1) throw DeterminantNotOne("det A = " + d.get_str());
    Integer a = m[0][0] + m[1][1] + m[2][2];
    Integer b = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1];
    return IntPoly({Integer(-1), b, Integer(-a), Integer(1)});
}

/// Companion matrix of a monic cubic x³ + c2 x² + c1 x + c0.
inline IntMatrix3 companion3(const IntPoly& p) {
    if (p.degree() != 3 || p.lead() != 1) throw InvalidInput("companion3 needs a monic cubic");
    IntMatrix3 c{};
    c[1][0] = 1;
    c[2][1] = 1;
    c[0][2] = -p.coeff(0);
    c[1][2] = -p.coeff(1);
    c[2][2] = -p.coeff(2);
    return c;
}

inline bool is_squarefree(const IntPoly& p) {
    RatPoly q = to_rational(p);
    return gcd(q, q.derivative()).degree() == 0;
}

namespace detail {

/// Sign of p at x, or at ∓∞ when x is nullopt.
inline int sign_at(const RatPoly& p, const std::optional<Scalar>& x, bool plus_infinity) {
    if (p.is_zero()) return 0;
    if (x) return sgn(p.eval(*x));
    int s = sgn(p.lead());
    return (plus_infinity || p.degree() % 2 == 0) ? s : -s;
}

inline std::vector<RatPoly> sturm_chain(const IntPoly& p) {
    std::vector<RatPoly> chain{to_rational(p), to_rational(p).derivative()};
    while (!chain.back().is_zero()) {
        RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

inline int variations(const std::vector<RatPoly>& chain, const std::optional<Scalar>& x, bool plus_infinity) {
    int v = 0, last = 0;
    for (const auto& q : chain) {
        int s = sign_at(q, x, plus_infinity);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace detail

/// Distinct real roots in (lo, hi]; nullopt bounds mean ∓∞.
inline int sturm_count(const IntPoly& p, const std::optional<Scalar>& lo = std::nullopt, const std::optional<Scalar>& hi = std::nullopt) {
    if (p.degree() < 1) return 0;
    if (!is_squarefree(p)) throw NotSquarefree(p.to_string() + " has a repeated factor");
    auto chain = detail::sturm_chain(p);
    return detail::variations(chain, lo, false) - detail::variations(chain, hi, true);
}

/// Δ = 18abcd − 4b³d + b²c² − 4ac³ − 27a²d² for a x³ + b x² + c x + d.
inline Integer discriminant_cubic(const IntPoly& p) {
    if (p.degree() != 3) throw InvalidInput("discriminant_cubic needs a cubic");
    Integer a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
}

enum class CubicRootPattern { three_real, one_real_pair_complex };

struct CubicClassification {
    CubicRootPattern pattern = CubicRootPattern::three_real;
    Integer discriminant;
    int real_roots_above_one = 0;
};

inline CubicClassification classify_cubic_roots(const IntPoly& p) {
    if (p.degree() != 3) throw InvalidInput("classify_cubic_roots needs a cubic");
    if (!is_squarefree(p)) throw NotSquarefree(p.to_string() + " has a repeated root");
    CubicClassification c;
    c.discriminant = discriminant_cubic(p);
    int real = sturm_count(p);
    c.pattern = real == 3 ? CubicRootPattern::three_real : CubicRootPattern::one_real_pair_complex;
    if ((c.discriminant > 0) != (real == 3)) throw Error("discriminant sign and Sturm count disagree");
    c.real_roots_above_one = sturm_count(p, Scalar(1), std::nullopt);
    return c;
}

inline std::string pattern_name(CubicRootPattern p) {
    return p == CubicRootPattern::three_real ? "three_real" : "one_real_pair_complex";
}

/// β^m = x_m β² + y_m β + z_m for a root β of x³ − a x² + b x − 1.
struct PowerBasisRecurrence {
    Integer a, b;
    int m = 3;
    Integer x, y, z;

    static PowerBasisRecurrence start(const Integer& a, const Integer& b) { return {a, b, 3, a, -b, 1}; }

    void step() {
        Integer nx = a * x + y, ny = z - b * x, nz = x;
        x = std::move(nx);
        y = std::move(ny);
        z = std::move(nz);
        ++m;
    }
};

/// First m ≤ n with x_m = y_m = 0, continuing from r.
inline std::optional<int> first_vanishing(PowerBasisRecurrence r, int n) {
    for (; r.m <= n; r.step())
        if (r.x == 0 && r.y == 0) return r.m;
    return std::nullopt;
}

namespace detail {

inline IntPoly inoue_cubic(const Integer& a, const Integer& b) { return IntPoly({Integer(-1), b, Integer(-a), Integer(1)}); }

inline void require_s0_pattern(const Integer& a, const Integer& b) {
    IntPoly p = inoue_cubic(a, b);
    if (!is_squarefree(p)) throw WrongRootPattern(p.to_string() + " has a repeated root");
    auto c = classify_cubic_roots(p);
    if (c.pattern != CubicRootPattern::one_real_pair_complex || c.real_roots_above_one != 1)
        throw WrongRootPattern(p.to_string() + " does not have one real root α > 1 and a non-real pair");
}

}  // namespace detail

/// First 3 ≤ m ≤ n with β^m real. With α > 1 irrational, β^m real forces x_m = y_m = 0.
inline std::optional<int> inoue_reality_test(const Integer& a, const Integer& b, int n) {
    detail::require_s0_pattern(a, b);
    return first_vanishing(PowerBasisRecurrence::start(a, b), n);
}

struct GorbatsevichReport {
    Integer a, b;
    int bound = 0;
    std::optional<int> rational_angle_m;  // set when β^m is real for some m ≤ bound
    double alpha = 0;                     // real eigenvalue
    double log_alpha = 0;
    double s = 0;  // argument of β; eigenvalues of Z are lg α and −lg α/2 ± i s

    bool mostow_holds_up_to_bound() const noexcept { return !rational_angle_m.has_value(); }
    std::string verdict() const {
        return rational_angle_m ? "RationalAngleFound(" + std::to_string(*rational_angle_m) + ")"
                                : "MostowHolds_UpToBound(" + std::to_string(bound) + ")";
    }
};

namespace detail {

/// Real root of x³ − a x² + b x − 1 above 1, by bisection on the Sturm bracket.
inline double real_root_above_one(const Integer& a, const Integer& b) {
    RatPoly p = to_rational(inoue_cubic(a, b));
    Scalar lo = 1, hi = 2;
    while (sgn(p.eval(hi)) <= 0) hi *= 2;
    for (int i = 0; i < 80; ++i) {
        Scalar mid = (lo + hi) / 2;
        (sgn(p.eval(mid)) > 0 ? hi : lo) = mid;
    }
    return Scalar((lo + hi) / 2).get_d();
}

inline GorbatsevichReport gorbatsevich_report(const Integer& a, const Integer& b, int n, std::optional<int> m) {
    GorbatsevichReport r{a, b, n, m};
    r.alpha = real_root_above_one(a, b);
    r.log_alpha = std::log(r.alpha);
    double re = (a.get_d() - r.alpha) / 2;
    double im = std::sqrt(std::max(0.0, 1 / r.alpha - re * re));
    r.s = std::atan2(im, re);
    return r;
}

}  // namespace detail

/// Bounded form of the reduction: no β = α^{−1/2} e^{iqπ} with q of denominator ≤ n.
inline GorbatsevichReport gorbatsevich_s0_check(const IntMatrix3& m, int n) {
    IntPoly p = char_poly_3(m);
    Integer a = -p.coeff(2), b = p.coeff(1);
    return detail::gorbatsevich_report(a, b, n, inoue_reality_test(a, b, n));
}

/// Same verdict driven by an explicit recurrence state; for constructed test data.
inline GorbatsevichReport gorbatsevich_from_recurrence(const PowerBasisRecurrence& r, int n) {
    detail::require_s0_pattern(r.a, r.b);
    return detail::gorbatsevich_report(r.a, r.b, n, first_vanishing(r, n));
}

/// Arithmetic over F_p on coefficient vectors (low to high, trimmed).
namespace fp {

using Poly = std::vector<long>;

inline long mod(long x, long p) {
    x %= p;
    return x < 0 ? x + p : x;
}

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long inverse(long x, long p) {
    long r = 1, e = p - 2, b = mod(x, p);
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline Poly reduce(const IntPoly& f, long p) {
    Poly a;
    for (const auto& c : f.coeffs()) {
        Integer r = c % p;
        a.push_back(mod(r.get_si(), p));
    }
    trim(a);
    return a;
}

inline Poly sub(Poly a, const Poly& b, long p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
    trim(a);
    return a;
}

inline Poly mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, long p) {
    if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    long inv = inverse(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        long f = a.back() * inv % p;
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = mod(a[i + shift] - f * b[i], p);
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline Poly monic(Poly a, long p) {
    if (a.empty()) return a;
    long inv = inverse(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

inline Poly gcd(Poly a, Poly b, long p) {
    while (!b.empty()) {
        Poly r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

inline Poly derivative(const Poly& a, long p) {
    Poly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(static_cast<long>(i) % p * a[i] % p);
    trim(d);
    return d;
}

inline Poly powmod(Poly base, Integer e, const Poly& m, long p) {
    Poly r{1};
    base = divmod(base, m, p).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = divmod(mul(r, base, p), m, p).second;
        base = divmod(mul(base, base, p), m, p).second;
        e >>= 1;
    }
    return r;
}

inline bool is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

/// Squarefree decomposition: pairs (factor, multiplicity) of a monic polynomial.
inline std::vector<std::pair<Poly, int>> squarefree(const Poly& f, long p) {
    std::vector<std::pair<Poly, int>> out;
    Poly c = gcd(f, derivative(f, p), p);
    Poly w = divmod(f, c, p).first;
    int i = 1;
    while (!is_one(w) && !w.empty()) {
        Poly y = gcd(w, c, p);
        Poly fac = divmod(w, y, p).first;
        if (fac.size() > 1) out.push_back({monic(fac, p), i});
        w = y;
        c = divmod(c, y, p).first;
        ++i;
    }
    if (c.size() > 1) {
        // c is a polynomial in x^p: take the p-th root coefficientwise
        Poly root;
        for (std::size_t j = 0; j < c.size(); j += static_cast<std::size_t>(p)) root.push_back(c[j]);
        for (auto& [g, k] : squarefree(monic(root, p), p)) out.push_back({g, k * static_cast<int>(p)});
    }
    return out;
}

/// Degrees of the irreducible factors of a squarefree monic polynomial.
inline std::vector<int> distinct_degree(Poly g, long p) {
    std::vector<int> degs;
    Poly x{0, 1};
    Poly h = x;
    for (int d = 1; static_cast<int>(g.size()) - 1 >= 2 * d; ++d) {
        h = powmod(h, Integer(p), g, p);
        Poly fac = gcd(g, sub(h, x, p), p);
        if (fac.size() > 1) {
            for (std::size_t t = 0; t < (fac.size() - 1) / static_cast<std::size_t>(d); ++t) degs.push_back(d);
            g = divmod(g, fac, p).first;
            h = divmod(h, g, p).second;
        }
    }
    if (g.size() > 1) degs.push_back(static_cast<int>(g.size()) - 1);
    return degs;
}

/// Monic polynomials of degree d in a fixed order (by base-p encoding of the lower coefficients).
inline Poly nth_monic(int d, long index, long p) {
    Poly a(static_cast<std::size_t>(d) + 1, 0);
    a[static_cast<std::size_t>(d)] = 1;
    for (int i = 0; i < d; ++i) {
        a[static_cast<std::size_t>(i)] = index % p;
        index /= p;
    }
    return a;
}

inline IntPoly lift(const Poly& a) {
    std::vector<Integer> v;
    for (long c : a) v.emplace_back(c);
    return IntPoly(std::move(v));
}

}  // namespace fp

struct FactorPattern {
    long prime = 2;
    std::vector<int> degrees;  // ascending, with multiplicity
};

inline FactorPattern factor_pattern(const IntPoly& f, long p) {
    if (p < 2) throw InvalidInput("modulus must be prime");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw InvalidInput(std::to_string(p) + " is not prime");
    fp::Poly a = fp::reduce(f, p);
    if (f.degree() < 0 || static_cast<int>(a.size()) - 1 != f.degree())
        throw LeadingCoefficientVanishes("leading coefficient of " + f.to_string() + " vanishes mod " + std::to_string(p));
    FactorPattern out{p, {}};
    for (const auto& [g, k] : fp::squarefree(fp::monic(a, p), p))
        for (int d : fp::distinct_degree(g, p))
            for (int t = 0; t < k; ++t) out.degrees.push_back(d);
    std::sort(out.degrees.begin(), out.degrees.end());
    return out;
}

inline std::string format_pattern(const FactorPattern& fp) {
    std::string s = "{";
    for (std::size_t i = 0; i < fp.degrees.size(); ++i) s += (i ? "," : "") + std::to_string(fp.degrees[i]);
    return s + "}";
}

namespace detail {

/// First monic irreducible of degree d mod p in the fixed enumeration order, skipping `avoid`.
inline fp::Poly first_irreducible(int d, long p, const std::vector<fp::Poly>& avoid = {}) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
        fp::Poly a = fp::nth_monic(d, idx, p);
        if (std::find(avoid.begin(), avoid.end(), a) != avoid.end()) continue;
        auto pat = factor_pattern(fp::lift(a), p);
        if (pat.degrees == std::vector<int>{d}) return a;
    }
    throw Error("no irreducible polynomial found");
}

inline bool mod5_pattern_ok(const std::vector<int>& degs, int n) {
    if (n % 2 == 1) {
        std::vector<int> want{2, n - 2};
        std::sort(want.begin(), want.end());
        return degs == want;
    }
    if (degs.size() != 3 || std::count(degs.begin(), degs.end(), 2) < 1) return false;
    std::vector<int> rest = degs;
    rest.erase(std::find(rest.begin(), rest.end(), 2));
    return rest[0] % 2 == 1 && rest[1] % 2 == 1;
}

}  // namespace detail

struct VdwCertificate {
    FactorPattern mod2, mod3, mod5;
    int real_roots = 0;
    bool verified = false;
};

struct VdwResult {
    int n = 0, s = 0;
    IntPoly f1, f2, f3, g, f;  // f = −15f1 + 10f2 + 6f3 + 30g
    VdwCertificate certificate;
    std::size_t candidates_tried = 0;
    int radius = 0;  // box in which g was found
};

/// Re-derives every leg of the certificate from f alone.
inline VdwCertificate verify_vdw(const IntPoly& f, int n, int s) {
    VdwCertificate c{factor_pattern(f, 2), factor_pattern(f, 3), factor_pattern(f, 5), 0, false};
    c.real_roots = is_squarefree(f) ? sturm_count(f) : -1;
    std::vector<int> want3{1, n - 1};
    std::sort(want3.begin(), want3.end());
    c.verified = f.degree() == n && f.lead() == 1 && c.mod2.degrees == std::vector<int>{n} && c.mod3.degrees == want3 &&
                 detail::mod5_pattern_ok(c.mod5.degrees, n) && c.real_roots == s;
    return c;
}

/// Monic f of degree n = s + 2, irreducible mod 2, with patterns {1,n−1} mod 3 and {2,n−2} or {2,odd,odd} mod 5,
/// and exactly s real roots. The search walks g over [−radius, radius]^n around a target with the right root count,
/// widening the box one step at a time up to max_radius.
inline VdwResult vdw_polynomial(int n, int s, unsigned seed = 0, int radius = 3, int max_radius = 4) {
    if (n < 3 || n != s + 2) throw InvalidInput("need n = s + 2 ≥ 3");
    if (radius < 0 || max_radius < radius) throw InvalidInput("need 0 ≤ radius ≤ max_radius");
    VdwResult r;
    r.n = n;
    r.s = s;
    r.f1 = fp::lift(detail::first_irreducible(n, 2));
    fp::Poly x{0, 1};
    r.f2 = fp::lift(fp::mul(x, detail::first_irreducible(n - 1, 3), 3));
    fp::Poly q5 = detail::first_irreducible(2, 5);
    fp::Poly f3;
    if (n % 2 == 1) {
        f3 = fp::mul(q5, detail::first_irreducible(n - 2, 5, {q5}), 5);
    } else {
        fp::Poly lin = x;
        fp::Poly other = detail::first_irreducible(n - 3, 5, {lin, q5});
        f3 = fp::mul(fp::mul(q5, lin, 5), other, 5);
    }
    r.f3 = fp::lift(f3);
    IntPoly base = IntPoly(Integer(-15)) * r.f1 + IntPoly(Integer(10)) * r.f2 + IntPoly(Integer(6)) * r.f3;

    // target (x² + R²) ∏ (x − R·(i − (s+1)/2)) has s real roots and one non-real pair
    const long R = 10;
    RatPoly target({Scalar(R * R), Scalar(0), Scalar(1)});
    for (int i = 1; i <= s; ++i) target = target * RatPoly({-rational(R * (2 * i - s - 1), 2), Scalar(1)});
    std::vector<Integer> center(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Scalar c = (target.coeff(static_cast<std::size_t>(i)) - Scalar(base.coeff(static_cast<std::size_t>(i)))) / 30;
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
        center[static_cast<std::size_t>(i)] = (c - Scalar(fl) >= Scalar(1, 2)) ? Integer(fl + 1) : fl;
    }

    // boxes [−r, r]^n for r = radius..max_radius; each larger box only visits its new shell
    for (int rad = radius; rad <= max_radius; ++rad) {
        std::vector<int> offsets{0};
        for (int t = 1; t <= rad; ++t) {
            offsets.push_back(t);
            offsets.push_back(-t);
        }
        if (seed != 0) std::shuffle(offsets.begin(), offsets.end(), std::mt19937(seed));
        std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
        while (true) {
            bool on_shell = rad == radius;
            std::vector<Integer> gc(static_cast<std::size_t>(n));
            for (std::size_t i = 0; i < gc.size(); ++i) {
                gc[i] = center[i] + offsets[digit[i]];
                on_shell = on_shell || std::abs(offsets[digit[i]]) == rad;
            }
            if (on_shell) {
                IntPoly g(gc);
                IntPoly f = base + IntPoly(Integer(30)) * g;
                ++r.candidates_tried;
                if (is_squarefree(f) && sturm_count(f) == s) {
                    r.g = g;
                    r.f = f;
                    r.radius = rad;
                    r.certificate = verify_vdw(f, n, s);
                    if (!r.certificate.verified) throw Error("vdw certificate failed re-verification");
                    return r;
                }
            }
            std::size_t i = 0;
            while (i < digit.size() && ++digit[i] == offsets.size()) digit[i++] = 0;
            if (i == digit.size()) break;
        }
    }
    throw SearchExhausted("no g in [−" + std::to_string(max_radius) + "," + std::to_string(max_radius) + "]^" + std::to_string(n) +
                          " around the target gives " + std::to_string(s) + " real roots");
}

struct Depressed {
    Integer p, q, r;
    bool rescaled = false;  // true when 256 f(x/4) was used to keep coefficients integral
};

/// x⁴ + px² + qx + r from a monic integer quartic. When the cubic coefficient is not divisible by 4 the quartic
/// 256 f(x/4) (roots scaled by 4, same splitting field) is depressed instead.
inline Depressed depress_quartic(const IntPoly& f) {
    if (f.degree() != 4 || f.lead() != 1) throw InvalidInput("need a monic quartic");
    Integer a3 = f.coeff(3), a2 = f.coeff(2), a1 = f.coeff(1), a0 = f.coeff(0);
    Depressed d;
    if (a3 % 4 != 0) {
        a0 *= 256;
        a1 *= 64;
        a2 *= 16;
        a3 *= 4;
        d.rescaled = true;
    }
    Integer t = a3 / 4;  // x → x − t
    d.p = a2 - 6 * t * t;
    d.q = a1 - 2 * t * a2 + 8 * t * t * t;
    d.r = a0 - t * a1 + t * t * a2 - 3 * t * t * t * t;
    return d;
}

/// y³ − 2p y² + (p² − 4r) y + q².
inline IntPoly resolvent_cubic(const IntPoly& f) {
    Depressed d = depress_quartic(f);
    return IntPoly({Integer(d.q * d.q), Integer(d.p * d.p - 4 * d.r), Integer(-2 * d.p), Integer(1)});
}

inline bool is_perfect_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

struct S4Certificate {
    long quartic_prime = 0;  // quartic irreducible mod this prime
    IntPoly resolvent;
    long resolvent_prime = 0;  // resolvent irreducible mod this prime
    Integer discriminant;      // of the resolvent, equal to that of the quartic
};

inline S4Certificate galois_s4_certificate(const IntPoly& f, long prime_bound = 100) {
    if (f.degree() != 4 || f.lead() != 1) throw InvalidInput("need a monic quartic");
    std::vector<long> primes;
    for (long p = 2; p <= prime_bound; ++p) {
        bool prime = true;
        for (long d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
        if (prime) primes.push_back(p);
    }
    S4Certificate c;
    for (long p : primes)
        if (factor_pattern(f, p).degrees == std::vector<int>{4}) {
            c.quartic_prime = p;
            break;
        }
    if (!c.quartic_prime) throw CertificateNotApplicable("no prime ≤ " + std::to_string(prime_bound) + " witnesses irreducibility of " + f.to_string());
    c.resolvent = resolvent_cubic(f);
    if (!rational_root_factorization(to_rational(c.resolvent)).roots.empty())
        throw CertificateNotApplicable("resolvent " + c.resolvent.to_string() + " has a rational root");
    for (long p : primes)
        if (factor_pattern(c.resolvent, p).degrees == std::vector<int>{3}) {
            c.resolvent_prime = p;
            break;
        }
    if (!c.resolvent_prime) throw CertificateNotApplicable("no prime witnesses irreducibility of the resolvent");
    c.discriminant = discriminant_cubic(c.resolvent);
    if (is_perfect_square(c.discriminant)) throw CertificateNotApplicable("discriminant " + c.discriminant.get_str() + " is a square");
    return c;
}

}  // namespace lcsc
