#pragma once

#include <map>
#include <string>
#include <vector>

#include "elsurf/rational.hpp"

namespace elsurf {

/// Formal Q-linear combination of named divisor classes.
struct DivisorClass {
    std::map<std::string, Rational> coeff;

    Rational coefficient(const std::string& label) const {
        auto it = coeff.find(label);
        return it == coeff.end() ? Rational(0) : it->second;
    }

    DivisorClass& add(const std::string& label, const Rational& c) {
        auto& slot = coeff[label];
        slot += c;
        if (slot.is_zero()) coeff.erase(label);
        return *this;
    }

    DivisorClass& operator+=(const DivisorClass& o) {
        for (auto& [l, c] : o.coeff) add(l, c);
        return *this;
    }

    DivisorClass& operator*=(const Rational& s);

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator*(DivisorClass a, const Rational& s) { return a *= s; }
    friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.coeff == b.coeff;
    }
};

/// Symmetric pairing on a finite labelled basis, with exact rational entries.
class IntersectionForm {
public:
    /// Throws InputError if labels repeat or the matrix is not symmetric of
    /// the right size.
    IntersectionForm(std::vector<std::string> labels,
                     std::vector<std::vector<Rational>> matrix);

    const std::vector<std::string>& labels() const { return labels_; }
    int size() const { return static_cast<int>(labels_.size()); }
    bool has(const std::string& label) const { return index_.count(label) != 0; }

    /// Pairing of two basis elements. Throws InputError on unknown labels.
    const Rational& pairing(const std::string& a, const std::string& b) const;

    /// Bilinear extension to formal combinations. Labels absent from the
    /// basis must not appear; that throws.
    Rational pair(const DivisorClass& u, const DivisorClass& v) const;

    /// Restriction to a sublist of the basis labels.
    IntersectionForm restrict(const std::vector<std::string>& sub) const;

    /// Sylvester's criterion via leading principal minors: negative definite
    /// iff the k-th minor has sign (-1)^k for every k >= 1.
    bool is_negative_definite() const;

    /// Solves M c = -rhs where M is this form's matrix. This is the linear
    /// system behind pulling back a divisor across a contraction: the
    /// returned coefficients on the contracted components make the corrected
    /// class pair to zero with each of them. Throws InternalError if M is
    /// singular (it never is on a contractible set).
    std::map<std::string, Rational> solve_contraction_coefficients(
        const std::map<std::string, Rational>& rhs) const;

private:
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<std::vector<Rational>> m_;

    int at(const std::string& label) const;  // throws InputError
};

/// Exact Gaussian elimination with partial (nonzero) pivoting.
/// Returns false if the matrix is singular, true with the solution in x.
bool gaussian_solve(std::vector<std::vector<Rational>> a,
                    std::vector<Rational> b,
                    std::vector<Rational>& x);

}  // namespace elsurf
