#include "circdiam/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace circdiam {

PrimitiveVector::PrimitiveVector(ZVector components) : components_(std::move(components)) {
    Integer g = 0;
    for (const auto& z : components_) g = gcd(g, z);
    if (g == 0) throw std::invalid_argument("primitive vector must be nonzero");
    if (g != 1) throw std::invalid_argument("primitive vector components must be coprime");
}

PrimitiveVector PrimitiveVector::negated() const {
    ZVector out(components_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -components_[i];
    return PrimitiveVector(std::move(out));
}

QVector PrimitiveVector::to_rational() const { return circdiam::to_rational(components_); }

int PrimitiveVector::leading_sign() const {
    for (const auto& z : components_)
        if (sgn(z) != 0) return sgn(z);
    return 0;
}

bool operator<(const PrimitiveVector& a, const PrimitiveVector& b) {
    return std::lexicographical_compare(a.components_.begin(), a.components_.end(), b.components_.begin(),
                                        b.components_.end(),
                                        [](const Integer& x, const Integer& y) { return cmp(x, y) < 0; });
}

std::string to_string(const PrimitiveVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

namespace {

ZVector integral_row(std::span<const Rational> row) {
    Integer den = 1;
    for (const auto& q : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    ZVector out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) out[j] = row[j].get_num() * (den / row[j].get_den());
    return out;
}

}  // namespace

Echelon echelon_form(const QMatrix& m) {
    const std::size_t nrows = m.rows(), ncols = m.cols();
    std::vector<ZVector> a;
    a.reserve(nrows);
    for (std::size_t i = 0; i < nrows; ++i) a.push_back(integral_row(m.row(i)));

    Echelon e;
    e.cols = ncols;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && sgn(a[p][c]) == 0) ++p;
        if (p == nrows) continue;
        std::swap(a[r], a[p]);
        const Integer& piv = a[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j) {
                Integer t = piv * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        e.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    e.rows = std::move(a);
    return e;
}

std::size_t rank(const QMatrix& m) { return echelon_form(m).rank(); }

namespace {

// Back-substitution on an echelon form with the given values for free columns.
QVector back_substitute(const Echelon& e, QVector x) {
    for (std::size_t k = e.rank(); k-- > 0;) {
        const auto& row = e.rows[k];
        const std::size_t pc = e.pivots[k];
        Rational acc = 0;
        for (std::size_t j = pc + 1; j < e.cols; ++j)
            if (sgn(row[j]) != 0) acc += row[j] * x[j];
        x[pc] = -acc / row[pc];
    }
    return x;
}

}  // namespace

std::vector<QVector> nullspace_basis(const QMatrix& m) {
    const Echelon e = echelon_form(m);
    std::vector<bool> is_pivot(e.cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < e.cols; ++f) {
        if (is_pivot[f]) continue;
        QVector x(e.cols);
        x[f] = 1;
        basis.push_back(back_substitute(e, std::move(x)));
    }
    return basis;
}

std::optional<PrimitiveVector> kernel_line(const QMatrix& m) {
    if (m.cols() == 0) return std::nullopt;
    auto basis = nullspace_basis(m);
    if (basis.size() != 1) return std::nullopt;
    return primitive_normalize(basis.front());
}

std::optional<QVector> solve_square(const QMatrix& m, std::span<const Rational> rhs) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("solve_square needs a square matrix");
    if (rhs.size() != n) throw std::invalid_argument("right-hand side length mismatch");
    QMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = rhs[i];
    }
    const Echelon e = echelon_form(aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    QVector x(n);
    for (std::size_t k = n; k-- > 0;) {
        const auto& row = e.rows[k];
        Rational acc = Rational(row[n]);
        for (std::size_t j = k + 1; j < n; ++j) acc -= row[j] * x[j];
        x[k] = acc / row[k];
    }
    return x;
}

PrimitiveVector primitive_direction(std::span<const Rational> v) {
    ZVector z = integral_row(v);
    Integer g = 0;
    for (const auto& c : z) g = gcd(g, c);
    if (g == 0) throw std::invalid_argument("cannot normalize the zero vector");
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return PrimitiveVector(std::move(z));
}

PrimitiveVector primitive_normalize(std::span<const Rational> v) {
    PrimitiveVector p = primitive_direction(v);
    return p.leading_sign() < 0 ? p.negated() : p;
}

}  // namespace circdiam
