#ifndef CIRCDIAM_POLYHEDRON_HPP
#define CIRCDIAM_POLYHEDRON_HPP

#include "circdiam/matrix.hpp"
#include "circdiam/rational.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace circdiam {

/// 1-based inequality row indices, sorted ascending. Matches facet labels
/// such as V5678.
using FacetSet = std::vector<int>;

std::string facet_label(const FacetSet& facets);

/// P = { x : A_eq x = b_eq, A_ineq x >= b_ineq }.
class HPolyhedron {
public:
    HPolyhedron(QMatrix eq_matrix, QVector eq_rhs, QMatrix ineq_matrix, QVector ineq_rhs);
    HPolyhedron(QMatrix ineq_matrix, QVector ineq_rhs);

    std::size_t dim() const { return dim_; }
    std::size_t num_equalities() const { return eq_matrix_.rows(); }
    std::size_t num_inequalities() const { return ineq_matrix_.rows(); }

    const QMatrix& eq_matrix() const { return eq_matrix_; }
    const QVector& eq_rhs() const { return eq_rhs_; }
    const QMatrix& ineq_matrix() const { return ineq_matrix_; }
    const QVector& ineq_rhs() const { return ineq_rhs_; }

    /// A_ineq x - b_ineq.
    QVector residuals(std::span<const Rational> x) const;
    bool contains(std::span<const Rational> x) const;
    /// Inequality rows with zero residual. Throws InfeasiblePoint if x is not in P.
    FacetSet tight_rows(std::span<const Rational> x) const;

    // Rows of A_eq followed by the given 1-based inequality rows.
    QMatrix active_system(const FacetSet& facets) const;

    friend bool operator==(const HPolyhedron&, const HPolyhedron&) = default;

private:
    std::size_t dim_;
    QMatrix eq_matrix_;
    QVector eq_rhs_;
    QMatrix ineq_matrix_;
    QVector ineq_rhs_;
};

class InfeasiblePoint : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace circdiam

#endif
