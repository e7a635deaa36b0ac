#include "ilcp/rational.hpp"

#include <cctype>
#include <sstream>

namespace ilcp {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

Integer pow10(std::size_t k) {
    Integer p = 1;
    for (std::size_t i = 0; i < k; ++i) p *= 10;
    return p;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty rational literal");

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(s.begin());
    }
    if (s.empty()) throw ParseError("sign without digits in rational literal '" + text + "'");

    Rational value;
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction '" + text + "'");
        Integer d(den);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        value = Rational(Integer(num), d);
    } else {
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            if (!all_digits(s)) throw ParseError("malformed rational literal '" + text + "'");
            value = Rational(Integer(s));
        } else {
            std::string whole = s.substr(0, dot);
            std::string frac = s.substr(dot + 1);
            if (whole.empty()) whole = "0";
            if (frac.empty()) frac = "0";
            if (!all_digits(whole) || !all_digits(frac))
                throw ParseError("malformed decimal literal '" + text + "'");
            Integer scale = pow10(frac.size());
            value = Rational(Integer(whole) * scale + Integer(frac), scale);
        }
    }
    return negative ? Rational(-value) : value;
}

std::string rat_string(const Rational& x) {
    std::ostringstream os;
    os << numerator(x);
    if (denominator(x) != 1) os << '/' << denominator(x);
    return os.str();
}

std::string decimal_string(const Rational& x, int significant) {
    if (x == 0) return "0";
    if (significant < 1) significant = 1;
    Rational a = abs(x);

    // Decimal exponent e with 10^e <= a < 10^(e+1).
    int e = 0;
    Rational t = a;
    while (t >= 10) { t /= 10; ++e; }
    while (t < 1) { t *= 10; --e; }

    // Round a / 10^(e+1-significant) half up to an integer of `significant` digits.
    int shift = significant - 1 - e;
    Rational scaled = a;
    if (shift >= 0)
        scaled *= Rational(pow10(static_cast<std::size_t>(shift)));
    else
        scaled /= Rational(pow10(static_cast<std::size_t>(-shift)));
    Integer digits = Integer((numerator(scaled) * 2 + denominator(scaled)) / (denominator(scaled) * 2));
    std::ostringstream ds;
    ds << digits;
    std::string d = ds.str();
    if (static_cast<int>(d.size()) > significant) {  // 999.. rounded up a digit
        d.pop_back();
        ++e;
    }

    std::string out;
    if (e >= significant - 1) {
        // Integral value; pad with zeros.
        out = d + std::string(static_cast<std::size_t>(e - significant + 1), '0');
    } else if (e >= 0) {
        out = d.substr(0, static_cast<std::size_t>(e + 1)) + "." + d.substr(static_cast<std::size_t>(e + 1));
    } else {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + d;
    }
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return sign(x) < 0 ? "-" + out : out;
}

Integer floor_int(const Rational& x) {
    Integer q = numerator(x) / denominator(x);
    if (x < 0 && Rational(q) != x) --q;
    return q;
}

Integer round_half_up(const Rational& x) {
    if (x >= 0) return Integer((numerator(x) * 2 + denominator(x)) / (denominator(x) * 2));
    Rational m = -x;
    return -Integer((numerator(m) * 2 + denominator(m)) / (denominator(m) * 2));
}

bool vec_eq(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool vec_le(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InvariantError("vec_le: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool vec_lt(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InvariantError("vec_lt: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] >= b[i]) return false;
    return true;
}

bool vec_nonneg(const RatVec& a) {
    for (const auto& x : a)
        if (x < 0) return false;
    return true;
}

bool lex_less(const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return a.size() < b.size();
}

std::string vec_string(const RatVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_string(v[i]);
    }
    return out + ")";
}

}  // namespace ilcp
