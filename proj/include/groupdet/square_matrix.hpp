#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace groupdet {

/// Dense row-major square matrix over an arbitrary (possibly noncommutative) ring.
///
/// Products keep the left-to-right order of entries, so the same template
/// serves RG (noncommutative) and RH / R (commutative) coefficients.
template <class Scalar>
bool is_zero_entry(const Scalar& x) {
    if constexpr (requires { x.is_zero(); }) {
        return x.is_zero();
    } else {
        return x == Scalar(0);
    }
}

template <class Scalar>
class SquareMatrix {
public:
    SquareMatrix() = default;
    SquareMatrix(std::size_t n, const Scalar& fill) : n_(n), data_(n * n, fill) {}

    std::size_t size() const { return n_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    const std::vector<Scalar>& data() const { return data_; }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

private:
    std::size_t n_ = 0;
    std::vector<Scalar> data_;
};

template <class Scalar, class Fn>
auto map_entries(const SquareMatrix<Scalar>& m, Fn&& fn) {
    using Out = decltype(fn(m(0, 0)));
    SquareMatrix<Out> out(m.size(), fn(m(0, 0)));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = fn(m(i, j));
    }
    return out;
}

template <class Scalar>
SquareMatrix<Scalar> multiply(const SquareMatrix<Scalar>& a, const SquareMatrix<Scalar>& b, const Scalar& zero) {
    if (a.size() != b.size()) throw std::invalid_argument("multiply: size mismatch");
    const std::size_t n = a.size();
    SquareMatrix<Scalar> out(n, zero);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
        }
    }
    return out;
}

/// Leibniz expansion, sum over all n! permutations. Division-free; intended
/// as the reference oracle for small n. Entries must commute.
template <class Scalar>
Scalar determinant_leibniz(const SquareMatrix<Scalar>& m, const Scalar& zero, const Scalar& one) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Scalar total = zero;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        }
        Scalar term = one;
        for (std::size_t col = 0; col < n; ++col) term = term * m(perm[col], col);
        if (inversions % 2) {
            total -= term;
        } else {
            total += term;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Column-by-column Laplace expansion with the partial minors memoized by the
/// bitmask of rows already used: O(2^n * n) ring products, no division.
/// Entries must commute.
template <class Scalar>
Scalar determinant_minor_expansion(const SquareMatrix<Scalar>& m, const Scalar& zero, const Scalar& one) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    if (n > 24) throw std::invalid_argument("determinant_minor_expansion: matrix too large");
    // partial[mask] = signed sum over injective assignments of the rows in mask
    // to the first popcount(mask) columns.
    std::vector<Scalar> partial(std::size_t{1} << n, zero);
    std::vector<char> live(std::size_t{1} << n, 0);
    partial[0] = one;
    live[0] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<Scalar> next(std::size_t{1} << n, zero);
        std::vector<char> next_live(std::size_t{1} << n, 0);
        for (std::size_t mask = 0; mask < partial.size(); ++mask) {
            if (!live[mask] || is_zero_entry(partial[mask])) continue;
            for (std::size_t row = 0; row < n; ++row) {
                if ((mask & (std::size_t{1} << row)) || is_zero_entry(m(row, col))) continue;
                // Rows already placed that exceed `row` each add one inversion.
                const int above = std::popcount(mask >> (row + 1));
                const std::size_t target = mask | (std::size_t{1} << row);
                Scalar term = partial[mask] * m(row, col);
                if (above % 2) {
                    next[target] -= term;
                } else {
                    next[target] += term;
                }
                next_live[target] = 1;
            }
        }
        partial = std::move(next);
        live = std::move(next_live);
    }
    return live.back() ? partial.back() : zero;
}

// Matrix with row `skip_row` and column `skip_col` removed.
template <class Scalar>
SquareMatrix<Scalar> minor_matrix(const SquareMatrix<Scalar>& m, std::size_t skip_row, std::size_t skip_col) {
    const std::size_t n = m.size();
    SquareMatrix<Scalar> out(n - 1, m(0, 0));
    for (std::size_t i = 0, oi = 0; i < n; ++i) {
        if (i == skip_row) continue;
        for (std::size_t j = 0, oj = 0; j < n; ++j) {
            if (j == skip_col) continue;
            out(oi, oj++) = m(i, j);
        }
        ++oi;
    }
    return out;
}

}  // namespace groupdet
