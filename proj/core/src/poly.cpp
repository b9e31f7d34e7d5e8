#include "elsurf/poly.hpp"

#include <algorithm>

#include "elsurf/errors.hpp"

namespace elsurf {

namespace {

// Integer sqrt enclosure: returns i with i^2 <= n < (i+1)^2.
Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

// Encloses sqrt(p/q) (p, q > 0) in a rational interval of width 2^-128-ish.
std::pair<Rational, Rational> sqrt_enclosure(const Rational& x) {
    const Integer p = x.numerator();
    const Integer q = x.denominator();
    const int bits = 128;
    Integer scaled = (p * q) << (2 * bits);
    Integer i = isqrt(scaled);
    Integer denom = q << bits;
    return {Rational(i, denom), Rational(i + 1, denom)};
}

bool is_perfect_square(const Rational& x, Rational& root) {
    if (x.sign() < 0) return false;
    Integer pn = isqrt(x.numerator());
    Integer pd = isqrt(x.denominator());
    if (pn * pn != x.numerator() || pd * pd != x.denominator()) return false;
    root = Rational(pn, pd);
    return true;
}

std::string term_str(const Rational& c, int power, const std::string& var, bool leading) {
    std::string out;
    Rational a = c.abs();
    if (!leading) out += (c.sign() < 0) ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    if (power == 0) {
        out += a.str();
    } else {
        if (a != Rational(1)) out += a.str() + "*";
        out += var;
        if (power > 1) out += "^" + std::to_string(power);
    }
    return out;
}

}  // namespace

Poly::Poly(Rational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::linear(Rational b, Rational a) { return Poly(std::vector<Rational>{std::move(b), std::move(a)}); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw InputError("polynomial is not constant: " + str());
    return coeff(0);
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

std::vector<PolyRoot> Poly::roots() const {
    if (is_zero()) throw InputError("zero polynomial has no isolated roots");
    if (degree() == 0) return {};
    if (degree() == 1) {
        PolyRoot r;
        r.value = -coeff(0) / coeff(1);
        r.lo = r.hi = r.value;
        return {r};
    }
    if (degree() == 2) {
        const Rational a = coeff(2), b = coeff(1), c = coeff(0);
        const Rational disc = b * b - Rational(4) * a * c;
        if (disc.sign() < 0) return {};
        Rational sq;
        if (is_perfect_square(disc, sq)) {
            PolyRoot r1, r2;
            r1.value = (-b - sq) / (Rational(2) * a);
            r2.value = (-b + sq) / (Rational(2) * a);
            r1.lo = r1.hi = r1.value;
            r2.lo = r2.hi = r2.value;
            if (r1.value == r2.value) return {r1};
            if (r1.value > r2.value) std::swap(r1, r2);
            return {r1, r2};
        }
        auto [slo, shi] = sqrt_enclosure(disc);
        const Rational two_a = Rational(2) * a;
        auto make = [&](int sgn) {
            PolyRoot r;
            Rational e1 = (-b + Rational(sgn) * slo) / two_a;
            Rational e2 = (-b + Rational(sgn) * shi) / two_a;
            r.lo = std::min(e1, e2);
            r.hi = std::max(e1, e2);
            r.value = (r.lo + r.hi) / Rational(2);
            r.exact = false;
            return r;
        };
        PolyRoot rm = make(-1), rp = make(+1);
        if (rm.value > rp.value) std::swap(rm, rp);
        return {rm, rp};
    }
    throw InputError("root isolation only implemented up to degree 2, got degree " +
                     std::to_string(degree()));
}

std::vector<PolyRoot> Poly::roots_in(const Rational& lo, const Rational& hi) const {
    std::vector<PolyRoot> out;
    for (auto& r : roots())
        if (r.value > lo && r.value < hi) out.push_back(r);
    return out;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (int i = degree(); i >= 0; --i) {
        if (coeff(i).is_zero()) continue;
        out += term_str(coeff(i), i, var, leading);
        leading = false;
    }
    return out;
}

std::string Poly::factored_str(const std::string& var) const {
    if (degree() < 2) return str(var);
    auto rs = roots();
    bool all_exact = rs.size() == 2 || (rs.size() == 1);
    for (auto& r : rs) all_exact = all_exact && r.exact;
    if (!all_exact || rs.empty()) return str(var);

    // c*(q1*x - p1)*(q2*x - p2) with integer-coefficient factors.
    Rational scale = coeff(2);
    std::vector<Rational> factor_roots;
    factor_roots.push_back(rs.back().value);  // descending: smallest leading coeff first
    factor_roots.push_back(rs.front().value);
    std::string out;
    for (auto& r : factor_roots) {
        Integer p = r.numerator(), q = r.denominator();
        scale /= Rational(q);
        Poly f = Poly::linear(Rational(Integer(-p)), Rational(q));
        if (!out.empty()) out += "*";
        out += "(" + f.str(var) + ")";
    }
    std::string prefix;
    if (scale == Rational(-1)) prefix = "-";
    else if (scale != Rational(1)) prefix = scale.str() + "*";
    return prefix + out;
}

}  // namespace elsurf
