#include "elsurf/rational.hpp"

#include <ostream>

#include "elsurf/errors.hpp"

namespace elsurf {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) {
        throw InputError("rational with zero denominator");
    }
    // cpp_rational's (num, den) constructor requires a positive denominator.
    value_ = boost::multiprecision::cpp_rational(num);
    value_ /= boost::multiprecision::cpp_rational(den);
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> Integer {
        if (s.empty()) throw InputError("empty integer in rational literal");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw InputError("sign without digits in rational literal");
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw InputError("malformed rational literal: '" + std::string(s) + "'");
            }
        }
        return Integer(std::string(s));
    };

    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text), Integer(1));
    }
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den.is_zero()) {
        throw InputError("zero denominator in rational literal: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero rational");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

}  // namespace elsurf
