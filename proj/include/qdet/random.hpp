#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qdet/matrix.hpp"

// Seeded generators for reproducible corpora. Coefficients are p/q with
// p in [-9, 9] and q in [-9, 9] \ {0}.

namespace qdet {

class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational() {
        const int p = integer(-9, 9);
        int q = 0;
        while (q == 0) q = integer(-9, 9);
        Rational r{mpz_class(p), mpz_class(q)};
        r.canonicalize();
        return r;
    }

    ExactQuaternion quaternion() { return {rational(), rational(), rational(), rational()}; }

    ExactQuaternion nonzero_quaternion() {
        ExactQuaternion q;
        while (q.is_zero()) q = quaternion();
        return q;
    }

    ExactMatrix matrix(int rows, int cols) {
        return ExactMatrix::generate(rows, cols, [&](int, int) { return quaternion(); });
    }

    std::vector<ExactQuaternion> vector(int n) {
        std::vector<ExactQuaternion> v;
        for (int k = 0; k < n; ++k) v.push_back(quaternion());
        return v;
    }

    // Real diagonal, random upper triangle, lower triangle its conjugate.
    ExactMatrix hermitian(int n) {
        std::vector<ExactQuaternion> data(static_cast<std::size_t>(n) * n);
        auto at = [&](int i, int j) -> ExactQuaternion& { return data[static_cast<std::size_t>(i - 1) * n + j - 1]; };
        for (int i = 1; i <= n; ++i) {
            at(i, i) = ExactQuaternion(rational());
            for (int j = i + 1; j <= n; ++j) {
                at(i, j) = quaternion();
                at(j, i) = conj(at(i, j));
            }
        }
        return ExactMatrix(n, n, std::move(data));
    }

    // Column `col` is sum_{k != col} a_{.k} b_k for random quaternions b_k.
    ExactMatrix right_dependent(int n, int col) {
        const ExactMatrix base = matrix(n, n);
        std::vector<ExactQuaternion> combo(n);
        for (int k = 1; k <= n; ++k) {
            if (k == col) continue;
            const ExactQuaternion b = quaternion();
            for (int r = 1; r <= n; ++r) combo[r - 1] += base(r, k) * b;
        }
        return replace_column(base, col, combo);
    }

    // Hermitian with a zero (1, 1) entry and a nonzero entry below it. With
    // `minus_two`, every other diagonal entry is -2 so that each single repair
    // P_1i(a_1i) yields a zero pivot.
    ExactMatrix zero_pivot_hermitian(int n, bool minus_two) {
        ExactMatrix h = hermitian(n);
        std::vector<ExactQuaternion> data(h.entries().begin(), h.entries().end());
        auto at = [&](int i, int j) -> ExactQuaternion& { return data[static_cast<std::size_t>(i - 1) * n + j - 1]; };
        at(1, 1) = ExactQuaternion();
        if (n >= 2 && at(2, 1).is_zero()) {
            at(2, 1) = nonzero_quaternion();
            at(1, 2) = conj(at(2, 1));
        }
        if (minus_two)
            for (int i = 2; i <= n; ++i) at(i, i) = ExactQuaternion(-2);
        return ExactMatrix(n, n, std::move(data));
    }

    std::mt19937_64& engine() noexcept { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace qdet
