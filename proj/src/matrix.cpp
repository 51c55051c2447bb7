#include "circdiam/matrix.hpp"

#include <stdexcept>
#include <string>

namespace circdiam {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
    QMatrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Rational& QMatrix::operator()(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
    return data_[r * cols_ + c];
}

const Rational& QMatrix::operator()(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
    return data_[r * cols_ + c];
}

std::span<const Rational> QMatrix::row(std::size_t r) const {
    if (r >= rows_) throw std::out_of_range("matrix row out of range");
    return {data_.data() + r * cols_, cols_};
}

QVector QMatrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

QMatrix QMatrix::select_rows(std::span<const std::size_t> indices) const {
    QMatrix m(0, cols_);
    for (auto i : indices) m.append_row(row(i));
    return m;
}

QMatrix QMatrix::stacked(const QMatrix& below) const {
    if (below.cols_ != cols_ && !(rows_ == 0 && cols_ == 0))
        throw std::invalid_argument("column count mismatch when stacking");
    QMatrix m = *this;
    m.cols_ = below.cols_;
    m.data_.insert(m.data_.end(), below.data_.begin(), below.data_.end());
    m.rows_ += below.rows_;
    return m;
}

void QMatrix::append_row(std::span<const Rational> values) {
    if (values.size() != cols_) throw std::invalid_argument("row width does not match column count");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

QVector QMatrix::multiply(std::span<const Rational> x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    QVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc += data_[r * cols_ + c] * x[c];
        out[r] = acc;
    }
    return out;
}

}  // namespace circdiam
