// Independent reference implementations used only to cross-check the
// library. They deliberately take different routes from the production code.
#pragma once

#include "hopfmorita/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using hm::Gauss;
using hm::Matrix;
using hm::Rational;
using hm::Vec;

// Leibniz determinant; fine for n <= 6.
inline Gauss det_leibniz(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Gauss total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Gauss term(1);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
        if (inversions % 2) term = -term;
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Sum of k x k principal minors, by subset enumeration.
inline Gauss principal_minor_sum(const Matrix& m, std::size_t k) {
    const std::size_t n = m.rows();
    Gauss total;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        Matrix sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(idx[a], idx[b]);
        total += k == 0 ? Gauss(1) : det_leibniz(sub);
    }
    return total;
}

// Hermitian PSD test by symmetric elimination: a zero pivot forces a zero
// row, a negative pivot refutes.
inline bool psd_by_elimination(Matrix m) {
    const std::size_t n = m.rows();
    if (m != m.adjoint()) return false;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && !m(i, i).is_zero()) {
                p = i;
                break;
            }
        if (p == n) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && !m(i, j).is_zero()) return false;
            return true;
        }
        if (sgn(m(p, p).re()) < 0) return false;
        done[p] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || m(i, p).is_zero()) continue;
            Gauss f = m(i, p) / m(p, p);
            for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(p, j);
        }
        for (std::size_t j = 0; j < n; ++j)
            if (!done[j]) m(p, j) = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i]) m(i, p) = 0;
    }
    return true;
}

// Deterministic small Gaussian rationals.
struct Sampler {
    std::mt19937_64 rng;
    explicit Sampler(std::uint64_t seed) : rng(seed) {}
    long small(long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Gauss scalar(long range = 3) {
        Rational re(small(-range, range), small(1, 3));
        Rational im(small(-range, range), small(1, 3));
        return {re, im};
    }
    Vec vec(std::size_t n, long range = 3) {
        Vec v(n);
        for (auto& z : v) z = scalar(range);
        return v;
    }
    Matrix matrix(std::size_t r, std::size_t c, long range = 3) {
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = scalar(range);
        return m;
    }
};

}  // namespace oracle
