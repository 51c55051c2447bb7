#include "circdiam/polyhedron.hpp"

#include <utility>

namespace circdiam {

std::string facet_label(const FacetSet& facets) {
    bool single_digit = true;
    for (int f : facets) single_digit = single_digit && f < 10;
    std::string out = "V";
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (i && !single_digit) out += "-";
        out += std::to_string(facets[i]);
    }
    return out;
}

HPolyhedron::HPolyhedron(QMatrix eq_matrix, QVector eq_rhs, QMatrix ineq_matrix, QVector ineq_rhs)
    : dim_(ineq_matrix.cols()),
      eq_matrix_(std::move(eq_matrix)),
      eq_rhs_(std::move(eq_rhs)),
      ineq_matrix_(std::move(ineq_matrix)),
      ineq_rhs_(std::move(ineq_rhs)) {
    if (ineq_matrix_.rows() == 0) throw std::invalid_argument("polyhedron needs at least one inequality");
    if (dim_ == 0) throw std::invalid_argument("polyhedron dimension must be positive");
    if (eq_matrix_.rows() == 0) eq_matrix_ = QMatrix(0, dim_);
    if (eq_matrix_.cols() != dim_) throw std::invalid_argument("equality matrix column count differs from dim");
    if (eq_rhs_.size() != eq_matrix_.rows()) throw std::invalid_argument("equality rhs length mismatch");
    if (ineq_rhs_.size() != ineq_matrix_.rows()) throw std::invalid_argument("inequality rhs length mismatch");
}

HPolyhedron::HPolyhedron(QMatrix ineq_matrix, QVector ineq_rhs)
    : HPolyhedron(QMatrix(0, ineq_matrix.cols()), {}, std::move(ineq_matrix), std::move(ineq_rhs)) {}

QVector HPolyhedron::residuals(std::span<const Rational> x) const {
    if (x.size() != dim_) throw std::invalid_argument("point dimension does not match polyhedron");
    QVector r = ineq_matrix_.multiply(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= ineq_rhs_[i];
    return r;
}

bool HPolyhedron::contains(std::span<const Rational> x) const {
    if (x.size() != dim_) throw std::invalid_argument("point dimension does not match polyhedron");
    const QVector e = eq_matrix_.multiply(x);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != eq_rhs_[i]) return false;
    for (const auto& r : residuals(x))
        if (sgn(r) < 0) return false;
    return true;
}

FacetSet HPolyhedron::tight_rows(std::span<const Rational> x) const {
    if (!contains(x)) throw InfeasiblePoint("point " + to_string(QVector(x.begin(), x.end())) + " is not in the polyhedron");
    FacetSet out;
    const QVector r = residuals(x);
    for (std::size_t i = 0; i < r.size(); ++i)
        if (sgn(r[i]) == 0) out.push_back(static_cast<int>(i) + 1);
    return out;
}

QMatrix HPolyhedron::active_system(const FacetSet& facets) const {
    QMatrix m = eq_matrix_;
    for (int f : facets) m.append_row(ineq_matrix_.row(static_cast<std::size_t>(f - 1)));
    return m;
}

}  // namespace circdiam
