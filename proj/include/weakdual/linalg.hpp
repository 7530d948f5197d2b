#pragma once

#include "weakdual/rational.hpp"

#include <optional>
#include <vector>

namespace weakdual {

// Dense row-major rational matrix.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<QVector>& rows);
    static QMatrix from_columns(const std::vector<QVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QVector row(std::size_t i) const;
    QVector column(std::size_t j) const;

    QMatrix transpose() const;
    QVector apply(const QVector& v) const;
    QMatrix operator*(const QMatrix& other) const;
    bool operator==(const QMatrix& other) const;

    bool is_integral() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

Rational determinant(QMatrix m);
std::size_t rank(QMatrix m);
// Throws DomainError when singular.
QMatrix inverse(const QMatrix& m);
// Unique solution of m x = b for square invertible m, nullopt when singular.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

}  // namespace weakdual
