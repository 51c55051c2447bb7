#ifndef CIRCDIAM_LINALG_HPP
#define CIRCDIAM_LINALG_HPP

#include "circdiam/matrix.hpp"
#include "circdiam/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace circdiam {

/// Integer vector with coprime components, not all zero.
///
/// Construction goes through primitive_normalize / primitive_direction, which
/// establish the invariant; the raw constructor validates it.
class PrimitiveVector {
public:
    explicit PrimitiveVector(ZVector components);

    const ZVector& components() const { return components_; }
    std::size_t size() const { return components_.size(); }
    const Integer& operator[](std::size_t i) const { return components_[i]; }

    PrimitiveVector negated() const;
    QVector to_rational() const;
    // Sign of the first nonzero component.
    int leading_sign() const;

    friend bool operator==(const PrimitiveVector&, const PrimitiveVector&) = default;
    friend bool operator<(const PrimitiveVector& a, const PrimitiveVector& b);

private:
    ZVector components_;
};

std::string to_string(const PrimitiveVector& v);

/// Fraction-free (Bareiss) row echelon form of a rational matrix. Rows are
/// first scaled to integers; all later arithmetic is integral with exact
/// divisions by the previous pivot.
struct Echelon {
    std::vector<ZVector> rows;         // nonzero echelon rows, rank of them
    std::vector<std::size_t> pivots;   // pivot column of each row
    std::size_t cols = 0;

    std::size_t rank() const { return pivots.size(); }
};

Echelon echelon_form(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Basis of ker(M), one vector per free column.
std::vector<QVector> nullspace_basis(const QMatrix& m);

/// Primitive generator of ker(M) when rank(M) = cols - 1, first nonzero
/// component positive. nullopt for every other rank.
std::optional<PrimitiveVector> kernel_line(const QMatrix& m);

/// Unique solution of the square system, nullopt when singular.
std::optional<QVector> solve_square(const QMatrix& m, std::span<const Rational> rhs);

/// Coprime integer vector parallel to v with its first nonzero component
/// positive. Throws std::invalid_argument on the zero vector.
PrimitiveVector primitive_normalize(std::span<const Rational> v);

/// Coprime integer vector positively parallel to v (sign preserved).
PrimitiveVector primitive_direction(std::span<const Rational> v);

}  // namespace circdiam

#endif
