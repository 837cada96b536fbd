#include "vanhom/puiseux.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "vanhom/errors.hpp"

namespace vanhom {

PuiseuxSeries::PuiseuxSeries(std::vector<Term> terms, ExtRational precision) : precision_(std::move(precision)) {
    std::map<Rational, Rational> merged;
    for (auto& t : terms) merged[t.exponent] += t.coefficient;
    for (auto& [e, c] : merged) {
        if (c.is_zero() || ExtRational(e) >= precision_) continue;
        terms_.push_back({e, c});
    }
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& coefficient, const Rational& exponent) {
    return PuiseuxSeries({{exponent, coefficient}}, ExtRational::infinity());
}

ExtRational PuiseuxSeries::valuation() const {
    if (!terms_.empty()) return terms_.front().exponent;
    if (is_exact()) return ExtRational::infinity();
    throw IndeterminateAtPrecision("valuation of O(T^" + precision_.str() + ") is not determined");
}

ExtRational PuiseuxSeries::valuation_lower_bound() const {
    if (!terms_.empty()) return terms_.front().exponent;
    return precision_;
}

int PuiseuxSeries::sign() const {
    if (!terms_.empty()) return terms_.front().coefficient.sign();
    if (is_exact()) return 0;
    throw IndeterminateAtPrecision("sign of O(T^" + precision_.str() + ") is not determined");
}

PuiseuxSeries PuiseuxSeries::truncated(const ExtRational& cap) const {
    return PuiseuxSeries(terms_, min(precision_, cap));
}

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries out = *this;
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    std::vector<Term> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return PuiseuxSeries(std::move(all), min(a.precision_, b.precision_));
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    const ExtRational precision =
        min(a.precision_ + b.valuation_lower_bound(), b.precision_ + a.valuation_lower_bound());
    std::vector<Term> all;
    all.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) all.push_back({x.exponent + y.exponent, x.coefficient * y.coefficient});
    }
    return PuiseuxSeries(std::move(all), precision);
}

std::strong_ordering compare(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    const int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string format_exponent(const Rational& e) {
    if (e.is_integer()) return e.str();
    return "(" + e.str() + ")";
}

namespace {

std::string format_monomial(const Rational& coefficient, const Rational& exponent) {
    if (exponent.is_zero()) return coefficient.str();
    std::string power = "T";
    if (exponent != Rational(1)) power += "^" + format_exponent(exponent);
    if (coefficient == Rational(1)) return power;
    if (coefficient == Rational(-1)) return "-" + power;
    return coefficient.str() + "*" + power;
}

class SeriesParser {
public:
    explicit SeriesParser(std::string_view text) : text_(text) {}

    PuiseuxSeries parse() {
        std::vector<Term> terms;
        std::optional<Rational> precision;
        bool first = true;
        skip_ws();
        while (true) {
            int sign = 1;
            if (peek('+')) {
                ++pos_;
            } else if (peek('-')) {
                ++pos_;
                sign = -1;
            } else if (!first) {
                break;
            }
            skip_ws();
            if (peek('O')) {
                ++pos_;
                expect('(');
                skip_ws();
                precision = parse_power();
                expect(')');
                skip_ws();
                if (pos_ != text_.size()) fail("O-term must come last");
                break;
            }
            Term t = parse_term();
            if (sign < 0) t.coefficient = -t.coefficient;
            for (const auto& prev : terms) {
                if (prev.exponent == t.exponent) fail("duplicate exponent " + t.exponent.str());
            }
            terms.push_back(std::move(t));
            first = false;
            skip_ws();
            if (pos_ == text_.size()) break;
        }
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        if (first && !precision) fail("empty series");
        return PuiseuxSeries(std::move(terms), precision ? ExtRational(*precision) : ExtRational::infinity());
    }

private:
    Term parse_term() {
        skip_ws();
        if (peek('T')) return {parse_power(), Rational(1)};
        Rational coefficient = parse_coefficient();
        skip_ws();
        if (!peek('*')) return {Rational(0), coefficient};
        ++pos_;
        skip_ws();
        if (!peek('T')) fail("expected 'T' after '*'");
        return {parse_power(), coefficient};
    }

    Rational parse_power() {
        expect('T');
        skip_ws();
        if (!peek('^')) return Rational(1);
        ++pos_;
        return parse_exponent();
    }

    Rational parse_exponent() {
        skip_ws();
        if (!peek('(')) return Rational(mpq_class(parse_integer(true)));
        ++pos_;
        const mpz_class num = parse_integer(true);
        skip_ws();
        mpz_class den = 1;
        if (peek('/')) {
            ++pos_;
            den = parse_integer(false);
        }
        expect(')');
        if (den == 0) fail("zero denominator in exponent");
        return Rational(mpq_class(num, den));
    }

    Rational parse_coefficient() {
        const mpz_class num = parse_integer(false);
        skip_ws();
        if (!peek('/')) return Rational(mpq_class(num));
        ++pos_;
        const mpz_class den = parse_integer(false);
        if (den == 0) fail("zero denominator in coefficient");
        return Rational(mpq_class(num, den));
    }

    mpz_class parse_integer(bool allow_sign) {
        skip_ws();
        std::string digits;
        if (allow_sign && (peek('-') || peek('+'))) {
            if (text_[pos_] == '-') digits.push_back('-');
            ++pos_;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits.push_back(text_[pos_++]);
        if (pos_ == start) fail("expected integer");
        return mpz_class(digits, 10);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("series '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

PuiseuxSeries PuiseuxSeries::parse(std::string_view text) { return SeriesParser(text).parse(); }

std::string PuiseuxSeries::str() const {
    std::string out;
    for (const auto& t : terms_) {
        if (out.empty()) {
            out = format_monomial(t.coefficient, t.exponent);
        } else if (t.coefficient.sign() < 0) {
            out += " - " + format_monomial(-t.coefficient, t.exponent);
        } else {
            out += " + " + format_monomial(t.coefficient, t.exponent);
        }
    }
    if (precision_.is_finite()) {
        const std::string big_o = "O(T^" + format_exponent(precision_.value()) + ")";
        out = out.empty() ? big_o : out + " + " + big_o;
    }
    return out.empty() ? "0" : out;
}

Velocity Velocity::parse(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    std::string_view rest = compact;
    Velocity v;
    if (!rest.empty() && rest.front() == '>') {
        v.strict = true;
        rest.remove_prefix(1);
    }
    if (rest == "T") {
        v.threshold = Rational(1);
        return v;
    }
    if (rest.size() < 3 || rest.substr(0, 2) != "T^") throw ParseError("invalid velocity '" + std::string(text) + "'");
    rest.remove_prefix(2);
    if (rest.front() == '(') {
        if (rest.back() != ')') throw ParseError("invalid velocity '" + std::string(text) + "'");
        rest = rest.substr(1, rest.size() - 2);
    } else if (rest.find('/') != std::string_view::npos) {
        throw ParseError("fractional velocity exponent must be parenthesised: '" + std::string(text) + "'");
    }
    v.threshold = Rational::parse(rest);
    return v;
}

std::string Velocity::str() const { return (strict ? ">T^" : "T^") + format_exponent(threshold); }

bool Velocity::contains_rate(const ExtRational& rate) const {
    if (rate.is_infinite()) return true;
    return strict ? rate.value() > threshold : rate.value() >= threshold;
}

bool Velocity::contains(const PuiseuxSeries& x) const { return contains_rate(x.valuation()); }

}  // namespace vanhom
