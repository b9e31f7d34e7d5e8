#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace elsurf {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
/// There is no floating point anywhere in this library; every coefficient
/// that appears in a model computation is a Rational.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}           // NOLINT: implicit by design
    Rational(long long n) : value_(n) {}     // NOLINT
    Rational(const Integer& n) : value_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(int num, int den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "p/q" or "p". Throws InputError on malformed input or q = 0.
    static Rational parse(std::string_view text);

    Integer numerator() const { return boost::multiprecision::numerator(value_); }
    Integer denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    boost::multiprecision::cpp_rational value_;

    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
};

}  // namespace elsurf
