#pragma once

#include <random>

#include "k3cone/linalg.hpp"

// Small deterministic generators shared by the property tests.

namespace k3cone::testing {

inline Int rand_int(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return Int(dist(rng));
}

inline IntVec rand_vec(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
    IntVec v(n);
    for (auto& x : v) x = rand_int(rng, lo, hi);
    return v;
}

inline IntMat rand_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rand_int(rng, lo, hi);
    return m;
}

// Product of random shears, swaps and sign flips: unimodular by construction.
inline IntMat rand_unimodular(std::mt19937_64& rng, std::size_t n, int ops = 6) {
    IntMat m = IntMat::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> shear(-2, 2);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int t = 0; t < ops; ++t) {
        std::size_t i = idx(rng), j = idx(rng);
        switch (kind(rng)) {
            case 0: { // row_i += c * row_j
                if (i == j) break;
                Int c = shear(rng);
                for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
                break;
            }
            case 1: // swap rows
                if (i != j)
                    for (std::size_t k = 0; k < n; ++k) std::swap(m(i, k), m(j, k));
                break;
            default: // flip a sign
                for (std::size_t k = 0; k < n; ++k) m(i, k) = -m(i, k);
        }
    }
    return m;
}

} // namespace k3cone::testing
