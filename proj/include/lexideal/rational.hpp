#ifndef LEXIDEAL_RATIONAL_HPP
#define LEXIDEAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstddef>
#include <ostream>
#include <string>

#include "error.hpp"

namespace lexideal {

// Arbitrary-precision rational scalar. The backing type keeps every value
// in lowest terms with a positive denominator, so equality is structural.
//
// Scalars are self-describing: a.zero() / a.one() return constants of the
// same field as `a`. For rationals this is trivial, but generic code written
// against this interface also works for runtime-parameterized fields.
class Rational {
public:
    using backend = boost::multiprecision::cpp_rational;
    using integer = boost::multiprecision::cpp_int;

    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(long long num, long long den) {
        if (den == 0)
            throw ValidationError("rational with zero denominator");
        if (den < 0) { // the backend requires a positive denominator
            num = -num;
            den = -den;
        }
        v_ = backend(integer(num), integer(den));
    }
    explicit Rational(backend v) : v_(std::move(v)) {}

    // Accepts an optionally signed integer or fraction: "-3", "41/6", "+2/-4".
    // The result is reduced; anything else (floats, exponents, junk) is rejected.
    static Rational parse(const std::string& text) {
        std::string s = detail_trim(text);
        if (s.empty())
            throw ParseError("empty scalar");
        std::size_t slash = s.find('/');
        if (slash != std::string::npos && s.find('/', slash + 1) != std::string::npos)
            throw ParseError("malformed rational '" + text + "'");
        std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
        std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
        integer n = detail_parse_int(num, text);
        integer d = detail_parse_int(den, text);
        if (d == 0)
            throw ParseError("zero denominator in '" + text + "'");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        return Rational(backend(n, d));
    }

    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    bool is_zero() const { return v_.is_zero(); }

    Rational operator-() const { return Rational(backend(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw ValidationError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    bool negative() const { return v_ < 0; }

    // "p" when the denominator is 1, otherwise "p/q" with q > 0.
    std::string str() const { return v_.str(); }

    const backend& value() const { return v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    static std::string detail_trim(const std::string& s) {
        std::size_t b = s.find_first_not_of(" \t\r\n");
        if (b == std::string::npos)
            return "";
        std::size_t e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    }

    static integer detail_parse_int(const std::string& s, const std::string& whole) {
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-'))
            ++i;
        if (i == s.size())
            throw ParseError("malformed scalar '" + whole + "'");
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw ParseError("malformed scalar '" + whole + "'");
        return integer(s[0] == '+' ? s.substr(1) : s);
    }

    backend v_;
};

} // namespace lexideal

#endif // LEXIDEAL_RATIONAL_HPP
