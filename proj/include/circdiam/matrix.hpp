#ifndef CIRCDIAM_MATRIX_HPP
#define CIRCDIAM_MATRIX_HPP

#include "circdiam/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace circdiam {

/// Dense rational matrix, row-major. Element access is bounds-checked.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
    static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c);
    const Rational& operator()(std::size_t r, std::size_t c) const;

    std::span<const Rational> row(std::size_t r) const;
    QVector row_vector(std::size_t r) const;

    // Rows picked by 0-based index, in the given order.
    QMatrix select_rows(std::span<const std::size_t> indices) const;
    // Vertical concatenation; column counts must agree.
    QMatrix stacked(const QMatrix& below) const;
    void append_row(std::span<const Rational> values);

    QVector multiply(std::span<const Rational> x) const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace circdiam

#endif
