#include "vanhom/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "vanhom/errors.hpp"

namespace vanhom {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text)) throw ParseError("invalid rational '" + std::string(text) + "'");
        return Rational(mpq_class(parse_integer(text)));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("invalid rational '" + std::string(text) + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(parse_integer(num), d));
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

ExtRational ExtRational::parse(std::string_view text) {
    if (text == "inf" || text == "+inf" || text == "infinity") return infinity();
    return {Rational::parse(text)};
}

const Rational& ExtRational::value() const {
    if (!value_) throw std::logic_error("value() of infinite ExtRational");
    return *value_;
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() || b.is_infinite()) return ExtRational::infinity();
    return {*a.value_ + *b.value_};
}

ExtRational operator-(const ExtRational& a, const Rational& b) {
    if (a.is_infinite()) return a;
    return {*a.value_ - b};
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    if (a.is_infinite()) return std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    return *a.value_ <=> *b.value_;
}

ExtRational min(const ExtRational& a, const ExtRational& b) { return b < a ? b : a; }
ExtRational max(const ExtRational& a, const ExtRational& b) { return a < b ? b : a; }

}  // namespace vanhom
