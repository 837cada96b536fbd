#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vanhom {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (backed by GMP).
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    /// Accepts "a" or "a/b" with b > 0 after sign normalisation.
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] std::string str() const { return value_.get_str(); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

Rational abs(const Rational& r);

/// A rational or +infinity.
class ExtRational {
public:
    ExtRational() = default;  // +infinity
    ExtRational(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
    ExtRational(long value) : value_(Rational(value)) {}       // NOLINT(google-explicit-constructor)

    static ExtRational infinity() { return {}; }
    /// "inf" or a rational literal.
    static ExtRational parse(std::string_view text);

    [[nodiscard]] bool is_infinite() const { return !value_.has_value(); }
    [[nodiscard]] bool is_finite() const { return value_.has_value(); }
    /// Precondition: finite.
    [[nodiscard]] const Rational& value() const;

    [[nodiscard]] std::string str() const { return value_ ? value_->str() : "inf"; }

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
    friend ExtRational operator-(const ExtRational& a, const Rational& b);
    friend bool operator==(const ExtRational& a, const ExtRational& b) = default;
    friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

    friend std::ostream& operator<<(std::ostream& os, const ExtRational& r) { return os << r.str(); }

private:
    std::optional<Rational> value_;
};

ExtRational min(const ExtRational& a, const ExtRational& b);
ExtRational max(const ExtRational& a, const ExtRational& b);

}  // namespace vanhom
