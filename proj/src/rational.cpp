#include "lexchoice/rational.hpp"

#include "lexchoice/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <sstream>

namespace lexchoice {

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw ParseError("", "expected rational 'p' or 'p/q', got '" + std::string(text) + "'");
    };
    std::string_view s = text;
    if (s.empty()) return fail();
    std::string_view num = s, den;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (den.empty()) return fail();
    }
    auto is_integer = [](std::string_view t, bool sign_ok) {
        if (t.empty()) return false;
        size_t i = 0;
        if (sign_ok && (t[0] == '+' || t[0] == '-')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!is_integer(num, true)) return fail();
    Integer p(std::string(num));
    if (den.empty()) return Rational(p);
    if (!is_integer(den, false)) return fail();
    Integer q(std::string(den));
    if (q == 0) return fail();
    return Rational(p, q);
}

std::string to_string(const RatVector& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: lengths differ");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const RatVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

RatVector add(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("add: lengths differ");
    RatVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVector sub(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("sub: lengths differ");
    RatVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVector scaled(const RatVector& v, const Rational& s) {
    RatVector r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
    return r;
}

RatVector canonical_scale(const RatVector& v, bool allow_sign_flip) {
    Integer denom_lcm = 1, numer_gcd = 0;
    for (const auto& x : v) {
        if (x == 0) continue;
        denom_lcm = lcm(denom_lcm, denominator(x));
        numer_gcd = gcd(numer_gcd, abs(numerator(x)));
    }
    if (numer_gcd == 0) return v;  // zero vector stays put
    Rational factor(denom_lcm, numer_gcd);
    RatVector r = scaled(v, factor);
    if (allow_sign_flip) {
        for (const auto& x : r) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : r) y = -y;
            break;
        }
    }
    return r;
}

bool lex_less(const RatVector& a, const RatVector& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

}  // namespace lexchoice
