#include "elsurf/lattice.hpp"

#include "elsurf/errors.hpp"

namespace elsurf {

DivisorClass& DivisorClass::operator*=(const Rational& s) {
    if (s.is_zero()) {
        coeff.clear();
        return *this;
    }
    for (auto& [l, c] : coeff) c *= s;
    return *this;
}

IntersectionForm::IntersectionForm(std::vector<std::string> labels,
                                   std::vector<std::vector<Rational>> matrix)
    : labels_(std::move(labels)), m_(std::move(matrix)) {
    const std::size_t n = labels_.size();
    if (m_.size() != n) throw InputError("intersection matrix row count does not match basis");
    for (std::size_t i = 0; i < n; ++i) {
        if (m_[i].size() != n) throw InputError("intersection matrix is not square");
        for (std::size_t j = 0; j < i; ++j) {
            if (m_[i][j] != m_[j][i]) throw InputError("intersection matrix is not symmetric");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!index_.emplace(labels_[i], static_cast<int>(i)).second) {
            throw InputError("duplicate basis label '" + labels_[i] + "'");
        }
    }
}

int IntersectionForm::at(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw InputError("unknown basis label '" + label + "'");
    return it->second;
}

const Rational& IntersectionForm::pairing(const std::string& a, const std::string& b) const {
    return m_[static_cast<std::size_t>(at(a))][static_cast<std::size_t>(at(b))];
}

Rational IntersectionForm::pair(const DivisorClass& u, const DivisorClass& v) const {
    Rational acc(0);
    for (auto& [la, ca] : u.coeff) {
        const auto& row = m_[static_cast<std::size_t>(at(la))];
        for (auto& [lb, cb] : v.coeff) {
            acc += ca * cb * row[static_cast<std::size_t>(at(lb))];
        }
    }
    return acc;
}

IntersectionForm IntersectionForm::restrict(const std::vector<std::string>& sub) const {
    std::vector<std::vector<Rational>> mat(sub.size(), std::vector<Rational>(sub.size()));
    for (std::size_t i = 0; i < sub.size(); ++i) {
        for (std::size_t j = 0; j < sub.size(); ++j) {
            mat[i][j] = pairing(sub[i], sub[j]);
        }
    }
    return IntersectionForm(sub, std::move(mat));
}

bool IntersectionForm::is_negative_definite() const {
    // Leading principal minors by exact elimination, sign tracked as we go.
    const int n = size();
    std::vector<std::vector<Rational>> a = m_;
    Rational det(1);
    for (int k = 0; k < n; ++k) {
        // Minor of order k+1 needs a nonzero pivot at (k, k) after
        // eliminating below-diagonal entries in earlier columns; a zero
        // pivot means the minor vanishes, so not definite.
        int piv = -1;
        for (int r = k; r < n; ++r) {
            if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv == -1) return false;
        if (piv != k) {
            // A row swap inside the trailing block would break the leading-
            // minor bookkeeping; a zero diagonal pivot with the symmetric
            // structure already rules out definiteness.
            return false;
        }
        const Rational& p = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        det *= p;
        // Minor_{k+1} = product of the first k+1 pivots; check the sign flip.
        const int want = (k % 2 == 0) ? -1 : +1;
        if (det.sign() != want) return false;
        for (int r = k + 1; r < n; ++r) {
            Rational f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] / p;
            if (f.is_zero()) continue;
            for (int c = k; c < n; ++c) {
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
            }
        }
    }
    return true;
}

std::map<std::string, Rational> IntersectionForm::solve_contraction_coefficients(
    const std::map<std::string, Rational>& rhs) const {
    const std::size_t n = static_cast<std::size_t>(size());
    std::vector<Rational> b(n);
    for (auto& [label, value] : rhs) {
        b[static_cast<std::size_t>(at(label))] = -value;
    }
    std::vector<Rational> x;
    if (!gaussian_solve(m_, std::move(b), x)) {
        throw InternalError("singular intersection matrix in contraction solve");
    }
    std::map<std::string, Rational> out;
    for (std::size_t i = 0; i < n; ++i) out[labels_[i]] = x[i];
    return out;
}

bool gaussian_solve(std::vector<std::vector<Rational>> a,
                    std::vector<Rational> b,
                    std::vector<Rational>& x) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = col; r < n; ++r) {
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv == n) return false;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
        x[i] = acc / a[i][i];
    }
    return true;
}

}  // namespace elsurf
