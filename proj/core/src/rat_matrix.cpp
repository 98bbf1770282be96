#include "pants/exact/rat_matrix.hpp"

#include <ostream>
#include <utility>

#include "pants/errors.hpp"

namespace pants::exact {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw DimensionError("entry count does not match rows*cols");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged initializer rows");
        e_.insert(e_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    RatMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

std::vector<Rational> RatMatrix::col(std::size_t j) const {
    std::vector<Rational> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<Rational> RatMatrix::row(std::size_t i) const {
    return {e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_};
}

bool RatMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool RatMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix add shape mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sub shape mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix mul shape mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

RatMatrix operator*(const Rational& s, RatMatrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s;
    return m;
}

RatMatrix RatMatrix::hcat(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hcat row mismatch");
    RatMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

RatMatrix RatMatrix::vcat(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("vcat column mismatch");
    RatMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

std::vector<Rational> operator*(const RatMatrix& m, const std::vector<Rational>& x) {
    if (m.cols() != x.size()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<Rational> y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
    return y;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << "]";
}

}  // namespace pants::exact
