#include "weakdual/linalg.hpp"

#include <utility>

namespace weakdual {

QMatrix QMatrix::identity(std::size_t n)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows)
{
    if (rows.empty()) return {};
    QMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols) { return from_rows(cols).transpose(); }

QVector QMatrix::row(std::size_t i) const
{
    return QVector(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

QVector QMatrix::column(std::size_t j) const
{
    QVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

QMatrix QMatrix::transpose() const
{
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QVector QMatrix::apply(const QVector& v) const
{
    if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
    QVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const
{
    if (cols_ != o.rows_) throw DimensionError("matrix product size mismatch");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
        }
    return r;
}

bool QMatrix::operator==(const QMatrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool QMatrix::is_integral() const
{
    for (const auto& x : data_)
        if (!is_integer(x)) return false;
    return true;
}

namespace {

// Reduces m to row echelon form in place, returning the pivot columns and the
// determinant sign/scale bookkeeping through det (only meaningful when square).
std::vector<std::size_t> eliminate(QMatrix& m, Rational* det)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    if (det) *det = 1;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
            if (det) *det = -*det;
        }
        const Rational piv = m(r, c);
        if (det) *det *= piv;
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) / piv;
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Rational determinant(QMatrix m)
{
    if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
    Rational det;
    auto piv = eliminate(m, &det);
    return piv.size() == m.rows() ? det : Rational(0);
}

std::size_t rank(QMatrix m) { return eliminate(m, nullptr).size(); }

std::optional<QVector> solve(const QMatrix& m, const QVector& b)
{
    const std::size_t n = m.rows();
    if (m.cols() != n || b.size() != n) throw DimensionError("solve expects a square system");
    QMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    auto piv = eliminate(aug, nullptr);
    if (piv.size() < n || piv.back() >= n) return std::nullopt;
    QVector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational s = aug(ii, n);
        for (std::size_t j = ii + 1; j < n; ++j) s -= aug(ii, j) * x[j];
        x[ii] = s / aug(ii, ii);
    }
    return x;
}

QMatrix inverse(const QMatrix& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DimensionError("inverse of a non-square matrix");
    QMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        QVector e(n);
        e[j] = 1;
        auto x = solve(m, e);
        if (!x) throw DomainError("matrix is singular");
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*x)[i];
    }
    return inv;
}

}  // namespace weakdual
