#include "rdnet/integer_kernel.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace rdnet {
namespace {

// Exact rational scalar on 64-bit integers. The matrices seen here are
// stoichiometric (entries of magnitude a few units, a handful of rows), so
// 64 bits leave plenty of headroom; overflow still traps via checks.

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::overflow_error("rational division by zero");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    bool is_zero() const { return num == 0; }
};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in rational arithmetic");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in rational arithmetic");
    return r;
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

Rational operator-(const Rational& a, const Rational& b) {
    const std::int64_t n =
        checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den));
    return Rational(n, checked_mul(a.den, b.den));
}

Rational operator/(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
}

using RationalMatrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan elimination to reduced row echelon form. Returns pivot
// column indices. Pivot selection is first nonzero in column order, which
// keeps the result deterministic.
std::vector<Index> rref(RationalMatrix& M) {
    std::vector<Index> pivots;
    if (M.empty()) return pivots;
    const Index rows = static_cast<Index>(M.size());
    const Index cols = static_cast<Index>(M[0].size());
    Index row = 0;
    for (Index col = 0; col < cols && row < rows; ++col) {
        Index sel = -1;
        for (Index r = row; r < rows; ++r) {
            if (!M[r][col].is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(M[sel], M[row]);
        const Rational inv_pivot = Rational(1) / M[row][col];
        for (Index c = col; c < cols; ++c) M[row][c] = M[row][c] * inv_pivot;
        for (Index r = 0; r < rows; ++r) {
            if (r == row || M[r][col].is_zero()) continue;
            const Rational factor = M[r][col];
            for (Index c = col; c < cols; ++c)
                M[r][c] = M[r][c] - factor * M[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

RationalMatrix to_rational(const IntMatrix& A) {
    RationalMatrix M(A.rows(), std::vector<Rational>(A.cols()));
    for (Index i = 0; i < A.rows(); ++i)
        for (Index j = 0; j < A.cols(); ++j) M[i][j] = Rational(A(i, j));
    return M;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace

std::vector<IntVector> integer_kernel_basis(const IntMatrix& A) {
    const Index n = A.cols();
    if (n == 0) return {};
    if (A.rows() == 0) {
        // Every coordinate is free: standard basis.
        std::vector<IntVector> basis;
        for (Index j = 0; j < n; ++j) {
            IntVector e = IntVector::Zero(n);
            e(j) = 1;
            basis.push_back(e);
        }
        return basis;
    }

    RationalMatrix M = to_rational(A);
    const std::vector<Index> pivots = rref(M);

    std::vector<bool> is_pivot(n, false);
    for (Index p : pivots) is_pivot[p] = true;

    std::vector<IntVector> basis;
    for (Index free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        // Kernel vector: free coordinate 1, pivot coordinates read off RREF.
        std::vector<Rational> v(n, Rational(0));
        v[free] = Rational(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = Rational(0) - M[k][free];

        std::int64_t scale = 1;
        for (const Rational& q : v) scale = lcm64(scale, q.den);
        IntVector w(n);
        for (Index j = 0; j < n; ++j)
            w(j) = static_cast<int>(checked_mul(v[j].num, scale / v[j].den));

        std::int64_t g = 0;
        for (Index j = 0; j < n; ++j) g = std::gcd(g, static_cast<std::int64_t>(std::abs(w(j))));
        if (g > 1) w /= static_cast<int>(g);
        for (Index j = 0; j < n; ++j) {
            if (w(j) != 0) {
                if (w(j) < 0) w = -w;
                break;
            }
        }
        basis.push_back(std::move(w));
    }
    return basis;
}

std::vector<Index> pivot_columns(const IntMatrix& A) {
    if (A.rows() == 0 || A.cols() == 0) return {};
    RationalMatrix M = to_rational(A);
    return rref(M);
}

Index integer_rank(const IntMatrix& A) {
    return static_cast<Index>(pivot_columns(A).size());
}

}  // namespace rdnet
