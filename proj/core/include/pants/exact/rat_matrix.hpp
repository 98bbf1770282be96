#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "pants/exact/rational.hpp"

namespace pants::exact {

/// Dense row-major matrix of exact rationals. Everything in scope is small
/// (at most ~30x30), so no attempt at sparsity or blocking.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const { return e_; }

    RatMatrix transpose() const;
    RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    std::vector<Rational> col(std::size_t j) const;
    std::vector<Rational> row(std::size_t i) const;

    bool is_zero() const;
    bool is_identity() const;

    void swap_rows(std::size_t a, std::size_t b);

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rational& s, RatMatrix m);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

    /// [a | b], matching row counts.
    static RatMatrix hcat(const RatMatrix& a, const RatMatrix& b);
    /// [a; b], matching column counts.
    static RatMatrix vcat(const RatMatrix& a, const RatMatrix& b);

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

std::vector<Rational> operator*(const RatMatrix& m, const std::vector<Rational>& x);
std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace pants::exact
