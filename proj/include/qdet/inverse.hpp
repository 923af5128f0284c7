#pragma once

#include <string>
#include <vector>

#include "qdet/det.hpp"

namespace qdet {

// P_ij(b) = I + b E_ij (i != j). Left-multiplying by it adds b * (row j) to row i.
template <class T>
QMatrix<T> elementary_unimodular(int n, int i, int j, const Quaternion<T>& b) {
    if (n < 2) throw DimensionError("elementary unimodular matrices need n >= 2");
    if (i < 1 || i > n || j < 1 || j > n) throw IndexError("elementary unimodular index out of range");
    if (i == j) throw IndexError("elementary unimodular matrix needs i != j");
    return QMatrix<T>::generate(n, n, [&](int r, int c) {
        if (r == c) return Quaternion<T>(1);
        return (r == i && c == j) ? b : Quaternion<T>();
    });
}

// Inverse of a nonsingular Hermitian matrix from its cofactor tables:
// (A^{-1})_{ji} = R_ij / det A, and independently L_ij / det A. Both tables
// must give the same matrix.
template <class T>
QMatrix<T> hermitian_inverse(const QMatrix<T>& a, const DetOptions& opts = {}) {
    const T det = hermitian_det(a, opts);
    if (ScalarTraits<T>::near_zero(det))
        throw SingularError("Hermitian matrix is singular (det = 0)", to_string(det));
    const int n = a.rows();
    const auto from_right = QMatrix<T>::generate(
        n, n, [&](int r, int c) { return right_cofactor(a, c, r, DetMethod::direct, opts).divided_by(det); });
    const auto from_left = QMatrix<T>::generate(
        n, n, [&](int r, int c) { return left_cofactor(a, c, r, DetMethod::direct, opts).divided_by(det); });
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            if (!detail::approx_equal(from_right(r, c), from_left(r, c)))
                throw ConsistencyError("right- and left-cofactor inverses differ");
    return from_right;
}

template <class T>
struct GeneralInverse {
    QMatrix<T> inverse;
    T ddet;
    DoubleCofactorTable<T> cofactors;
};

// Inverse of any square A with ddet A != 0 through the double cofactors:
//   (A^{-1})_{ji} = L_ij / ddet A     (left inverse (A*A)^{-1} A*)
//   (A^{-1})_{ji} = R_ij / ddet A     (right inverse A* (AA*)^{-1})
// Throws SingularError carrying the zero ddet when A is not invertible.
template <class T>
GeneralInverse<T> general_inverse_report(const QMatrix<T>& a, const DetOptions& opts = {}) {
    a.require_square("general_inverse");
    const T dd = ddet(a, opts);
    if (ScalarTraits<T>::near_zero(dd)) throw SingularError("matrix is singular (ddet = 0)", to_string(dd));
    DoubleCofactorTable<T> table = double_cofactors(a, opts);
    const int n = a.rows();
    const auto left_inv =
        QMatrix<T>::generate(n, n, [&](int r, int c) { return table.left(c, r).divided_by(dd); });
    const auto right_inv =
        QMatrix<T>::generate(n, n, [&](int r, int c) { return table.right(c, r).divided_by(dd); });
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            if (!detail::approx_equal(left_inv(r, c), right_inv(r, c)))
                throw ConsistencyError("left and right double-cofactor inverses differ");
    return {left_inv, dd, std::move(table)};
}

template <class T>
QMatrix<T> general_inverse(const QMatrix<T>& a, const DetOptions& opts = {}) {
    return general_inverse_report(a, opts).inverse;
}

enum class DiagStepKind { pivot_repair, eliminate };

template <class T>
struct DiagStep {
    DiagStepKind kind;
    int i;  // P_ij(b) was applied as A -> P A P*
    int j;
    Quaternion<T> b;
    int multiplier = 1;     // pivot_repair: c in P_1i(c * a_1i)
    T repaired_pivot{};     // pivot_repair: resulting (k, k) entry
};

template <class T>
struct DiagonalizationResult {
    QMatrix<T> U;
    std::vector<T> mu;
    std::vector<DiagStep<T>> steps;
};

namespace detail {

// Working copy for the congruence A -> P A P*, with P = P_ij(b):
// row i += b * row j, then column i += column j * conj(b).
template <class T>
void apply_congruence(std::vector<std::vector<Quaternion<T>>>& w, int i, int j, const Quaternion<T>& b) {
    const std::size_t n = w.size();
    const std::size_t ri = i - 1, rj = j - 1;
    for (std::size_t c = 0; c < n; ++c) w[ri][c] += b * w[rj][c];
    const Quaternion<T> bc = conj(b);
    for (std::size_t r = 0; r < n; ++r) w[r][ri] += w[r][rj] * bc;
}

// U -> P_ij(b) U
template <class T>
void apply_left(std::vector<std::vector<Quaternion<T>>>& u, int i, int j, const Quaternion<T>& b) {
    for (std::size_t c = 0; c < u.size(); ++c) u[i - 1][c] += b * u[j - 1][c];
}

}  // namespace detail

/// Congruence-diagonalises a Hermitian matrix with elementary unimodular
/// matrices: U A U* = diag(mu), U a product of P_ij(b) factors, and the
/// product of the mu equals det A.
///
/// Pivot k is taken from the current (k, k) entry. When it is zero but some
/// entry below it is not, the pivot is repaired with P_ki(c * w_ki), which
/// makes the (k, k) entry n(w_ki) * c * (2 + c * w_ii). Candidates i are tried
/// in increasing order with c = 1; if all of them vanish (w_ii = -2), the first
/// candidate is retried with c = 2, 3, ... The remaining column entries are
/// then cleared with P_ik(-w_ik / mu_k). An all-zero column gives mu_k = 0.
template <class T>
DiagonalizationResult<T> unimodular_diagonalize(const QMatrix<T>& a) {
    detail::require_hermitian(a, "unimodular_diagonalize");
    using Q = Quaternion<T>;
    using Tr = ScalarTraits<T>;
    const int n = a.rows();

    std::vector<std::vector<Q>> w(n), u(n);
    for (int r = 1; r <= n; ++r) {
        w[r - 1] = a.row(r);
        u[r - 1].assign(n, Q());
        u[r - 1][r - 1] = Q(1);
    }

    DiagonalizationResult<T> out{QMatrix<T>::identity(n), {}, {}};
    auto at = [&](int r, int c) -> const Q& { return w[r - 1][c - 1]; };

    for (int k = 1; k <= n; ++k) {
        if (at(k, k).is_zero()) {
            std::vector<int> candidates;
            for (int i = k + 1; i <= n; ++i)
                if (!at(i, k).is_zero()) candidates.push_back(i);
            if (candidates.empty()) {
                out.mu.push_back(T(0));
                continue;
            }
            auto repaired = [&](int i, int c) {
                return T(norm(at(i, k)) * T(c) * (T(2) + T(c) * at(i, i).w()));
            };
            int chosen = 0, multiplier = 1;
            for (int i : candidates) {
                if (!Tr::is_zero(repaired(i, 1))) {
                    chosen = i;
                    break;
                }
            }
            if (chosen == 0) {
                chosen = candidates.front();
                multiplier = 2;
                while (Tr::is_zero(repaired(chosen, multiplier))) ++multiplier;
            }
            const Q b = at(k, chosen).scaled(T(multiplier));
            detail::apply_congruence(w, k, chosen, b);
            detail::apply_left(u, k, chosen, b);
            out.steps.push_back({DiagStepKind::pivot_repair, k, chosen, b, multiplier, at(k, k).w()});
        }

        const T pivot = at(k, k).w();
        if constexpr (!Tr::exact) {
            if (Tr::magnitude(pivot) < Tr::tolerance)
                throw NumericalError("pivot below 1e-9 in float diagonalization; use the exact backend");
        }
        out.mu.push_back(pivot);
        for (int i = k + 1; i <= n; ++i) {
            if (at(i, k).is_zero()) continue;
            const Q b = (-at(i, k)).divided_by(pivot);
            detail::apply_congruence(w, i, k, b);
            detail::apply_left(u, i, k, b);
            out.steps.push_back({DiagStepKind::eliminate, i, k, b, 1, T(0)});
        }
    }

    out.U = QMatrix<T>::from_rows(u);
    return out;
}

}  // namespace qdet
