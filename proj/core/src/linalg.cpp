#include "pants/exact/linalg.hpp"

#include <gmpxx.h>

#include "pants/errors.hpp"

namespace pants::exact {

RrefResult rref(const RatMatrix& m) {
    RrefResult out;
    out.r = m;
    RatMatrix& r = out.r;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < r.rows() && r(piv, col).is_zero()) ++piv;
        if (piv == r.rows()) continue;
        r.swap_rows(lead, piv);
        Rational inv = r(lead, col).reciprocal();
        for (std::size_t j = col; j < r.cols(); ++j) r(lead, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r(i, col).is_zero()) continue;
            Rational f = r(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= f * r(lead, j);
        }
        out.pivots.push_back(col);
        ++lead;
    }
    out.rank = out.pivots.size();
    return out;
}

Rational det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquareError("det of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    // Clear denominators row by row so Bareiss runs over integers.
    std::vector<mpz_class> a(n * n);
    mpz_class row_scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).num() * (l / m(i, j).den());
        row_scale_product *= l;
    }

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    mpz_class d = a[(n - 1) * n + (n - 1)];
    if (sign < 0) d = -d;
    return Rational(d, row_scale_product);
}

RatMatrix invert(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquareError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RrefResult rr = rref(RatMatrix::hcat(m, RatMatrix::identity(n)));
    // the identity block keeps the full rank at n; singularity shows up as a
    // pivot escaping into the augmented columns
    if (!rr.pivots.empty() && rr.pivots.back() >= n) throw SingularError("matrix is singular");
    if (rr.rank < n) throw SingularError("matrix is singular");
    return rr.r.block(0, n, n, n);
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(m.cols());
        x[f] = 1;
        for (std::size_t p = 0; p < rr.pivots.size(); ++p) x[rr.pivots[p]] = -rr.r(p, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw DimensionError("solve: rhs length mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RrefResult rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols());
    for (std::size_t p = 0; p < rr.pivots.size(); ++p) x[rr.pivots[p]] = rr.r(p, m.cols());
    return x;
}

}  // namespace pants::exact
