#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "vanhom/rational.hpp"

namespace vanhom {

/// One monomial coefficient * T^exponent of a Puiseux series.
struct Term {
    Rational exponent;
    Rational coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Truncated real Puiseux series in the indeterminate T, ordered so that T
/// is positive and smaller than every positive rational.
///
/// Terms are sorted by strictly increasing exponent, carry nonzero
/// coefficients, and all lie below `precision()`. A finite precision p means
/// the series is only known modulo O(T^p); an infinite precision means the
/// series is exact. Decisions that need an unknown leading term throw
/// IndeterminateAtPrecision.
class PuiseuxSeries {
public:
    /// Exact zero.
    PuiseuxSeries() = default;
    PuiseuxSeries(std::vector<Term> terms, ExtRational precision);

    static PuiseuxSeries constant(const Rational& c) { return monomial(c, Rational(0)); }
    static PuiseuxSeries monomial(const Rational& coefficient, const Rational& exponent);
    /// The indeterminate raised to `exponent`.
    static PuiseuxSeries t_power(const Rational& exponent) { return monomial(Rational(1), exponent); }

    /// Parses the textual series grammar, e.g. "1 - 1*T^4", "3/2*T^(1/2) + O(T^5)".
    static PuiseuxSeries parse(std::string_view text);
    /// Canonical text; parse(str()) reproduces the value exactly.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] const ExtRational& precision() const { return precision_; }
    [[nodiscard]] bool is_exact() const { return precision_.is_infinite(); }
    [[nodiscard]] bool is_exact_zero() const { return terms_.empty() && is_exact(); }

    /// Smallest exponent; +inf for the exact zero.
    [[nodiscard]] ExtRational valuation() const;
    /// Valuation if known, otherwise the precision (which bounds it below).
    [[nodiscard]] ExtRational valuation_lower_bound() const;
    /// -1, 0 or 1.
    [[nodiscard]] int sign() const;

    /// Drops every term at or beyond `cap` and lowers the precision to it.
    [[nodiscard]] PuiseuxSeries truncated(const ExtRational& cap) const;

    PuiseuxSeries operator-() const;
    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
    PuiseuxSeries& operator+=(const PuiseuxSeries& o) { return *this = *this + o; }
    PuiseuxSeries& operator-=(const PuiseuxSeries& o) { return *this = *this - o; }
    PuiseuxSeries& operator*=(const PuiseuxSeries& o) { return *this = *this * o; }

    /// Representational equality (same terms and same precision).
    friend bool operator==(const PuiseuxSeries&, const PuiseuxSeries&) = default;

    friend std::ostream& operator<<(std::ostream& os, const PuiseuxSeries& s) { return os << s.str(); }

private:
    std::vector<Term> terms_;
    ExtRational precision_;
};

/// Order of the field; throws IndeterminateAtPrecision when a - b has no
/// known nonzero term but finite precision.
std::strong_ordering compare(const PuiseuxSeries& a, const PuiseuxSeries& b);

/// Principal convex subgroup of the Puiseux field, cut at T^threshold.
///
/// Non-strict: { x : |x| <= N T^q for some integer N } = { val x >= q }.
/// Strict:     { x : val x > q }.
struct Velocity {
    Rational threshold;
    bool strict = false;

    /// "T^q" or ">T^q".
    static Velocity parse(std::string_view text);
    [[nodiscard]] std::string str() const;

    /// Membership of a collapse rate (the valuation of a width).
    [[nodiscard]] bool contains_rate(const ExtRational& rate) const;
    /// Throws IndeterminateAtPrecision if the valuation of x is unknown.
    [[nodiscard]] bool contains(const PuiseuxSeries& x) const;

    friend bool operator==(const Velocity&, const Velocity&) = default;
};

std::string format_exponent(const Rational& e);

}  // namespace vanhom
