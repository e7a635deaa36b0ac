#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace ilcp {

/// Exact arbitrary-precision rational; the sole scalar type used by the
/// set computations. Floating point never enters any geometric predicate.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RatVec = std::vector<Rational>;

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, int line = -1, int column = -1)
        : std::runtime_error(msg), line(line), column(column) {}
    int line;
    int column;
};

class DimensionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline int sign(const Rational& x) { return x.sign(); }

/// Parses "p/q", integer, or plain decimal literals ("-0.25") exactly.
/// Exponents are not accepted; decimals convert to exact fractions.
Rational parse_rational(const std::string& text);

/// "p/q" when the denominator is not 1, plain integer otherwise.
std::string rat_string(const Rational& x);

/// Deterministic decimal rendering with at most `significant` digits,
/// round-half-up, trailing zeros stripped. Display only.
std::string decimal_string(const Rational& x, int significant = 6);

Integer floor_int(const Rational& x);          // largest integer <= x
Integer round_half_up(const Rational& x);      // ties away from zero

bool vec_eq(const RatVec& a, const RatVec& b);
bool vec_le(const RatVec& a, const RatVec& b);   // componentwise <=
bool vec_lt(const RatVec& a, const RatVec& b);   // componentwise <
bool vec_nonneg(const RatVec& a);
bool lex_less(const RatVec& a, const RatVec& b);
std::string vec_string(const RatVec& v);

}  // namespace ilcp
