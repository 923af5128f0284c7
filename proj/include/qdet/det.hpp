#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qdet/error.hpp"
#include "qdet/matrix.hpp"
#include "qdet/perm.hpp"

// Row and column determinants of quaternion matrices.
//
// rdet_i A sums, over every permutation s of {1..n}, the signed product
//   (-1)^(n-r) a_{i s(i)} a_{s(i) s^2(i)} ... (one factor per cycle step)
// where the cycles are taken in left-ordered form opened by i. cdet_j A is the
// mirror image: right-ordered cycles closed by j, factors read right to left.
// Neither is a determinant in the commutative sense; rdet_i depends on i for
// general A. For Hermitian A all 2n of them coincide and are real, which is
// what hermitian_det and ddet rely on.

namespace qdet {

struct DetOptions {
    int max_enum = kDefaultMaxEnum;
    // hermitian_det: verify all n row and n column determinants agree.
    bool paranoid = false;
};

enum class DetMethod { direct, cofactor, moore };

inline const char* to_string(DetMethod m) {
    switch (m) {
        case DetMethod::direct: return "direct";
        case DetMethod::cofactor: return "cofactor";
        case DetMethod::moore: return "moore";
    }
    return "?";
}

template <class T>
struct DetValue {
    Quaternion<T> value;
    DetMethod method = DetMethod::direct;
    int anchor = 1;  // row for rdet/moore, column for cdet
};

/// Left and right double cofactors of a square A: left(i, j) is the
/// coefficient of a_ij in the column expansion of ddet A, right(i, j) the
/// coefficient in the row expansion.
template <class T>
struct DoubleCofactorTable {
    int n = 0;
    QMatrix<T> left;
    QMatrix<T> right;
};

namespace detail {

template <class T>
bool approx_equal(const Quaternion<T>& a, const Quaternion<T>& b) {
    if constexpr (ScalarTraits<T>::exact) {
        return a == b;
    } else {
        const double scale = std::max({1.0, std::fabs(a.w()), std::fabs(a.x()), std::fabs(a.y()), std::fabs(a.z())});
        const Quaternion<T> d = a - b;
        const double tol = ScalarTraits<T>::tolerance * scale;
        return std::fabs(d.w()) <= tol && std::fabs(d.x()) <= tol && std::fabs(d.y()) <= tol &&
               std::fabs(d.z()) <= tol;
    }
}

template <class T>
void require_hermitian(const QMatrix<T>& a, const char* what) {
    a.require_square(what);
    if (!is_hermitian(a)) throw NotHermitianError(std::string(what) + " requires a Hermitian matrix");
}

template <class T>
void accumulate(Quaternion<T>& sum, const Quaternion<T>& term, int sign) {
    if (sign > 0)
        sum += term;
    else
        sum -= term;
}

// A^{ii}_{.j}(a_{.i}): column j replaced by column i, then row and column i removed.
template <class T>
QMatrix<T> column_substituted_minor(const QMatrix<T>& a, int i, int j) {
    return delete_row_col(replace_column(a, j, a.col(i)), i, i);
}

// A^{jj}_{i.}(a_{j.}): row i replaced by row j, then row and column j removed.
template <class T>
QMatrix<T> row_substituted_minor(const QMatrix<T>& a, int i, int j) {
    return delete_row_col(replace_row(a, i, a.row(j)), j, j);
}

// Index of original label `k` after removing label `removed`.
inline int shifted(int k, int removed) { return k > removed ? k - 1 : k; }

}  // namespace detail

// i-th row determinant by direct enumeration of S_n. Each monomial is
// multiplied strictly left to right in left-ordered cycle order.
template <class T>
Quaternion<T> rdet(const QMatrix<T>& a, int i, const DetOptions& opts = {}) {
    a.require_square("rdet");
    a.check_row(i);
    Quaternion<T> sum;
    for_each_permutation(
        a.rows(),
        [&](const Permutation& sigma) {
            const CyclePermutation cp = left_ordered(sigma, i);
            Quaternion<T> prod(1);
            for (const auto& c : cp.cycles) {
                const std::size_t len = c.size();
                for (std::size_t k = 0; k < len; ++k) prod = prod * a(c[k], c[(k + 1) % len]);
            }
            detail::accumulate(sum, prod, cp.sign());
        },
        opts.max_enum);
    return sum;
}

// j-th column determinant by direct enumeration. The written cycle
// (c1 ... cl) contributes a_{cl c1} a_{c1 c2} ... a_{c(l-1) cl}; the
// monomial is assembled from its rightmost factor leftwards.
template <class T>
Quaternion<T> cdet(const QMatrix<T>& a, int j, const DetOptions& opts = {}) {
    a.require_square("cdet");
    a.check_col(j);
    Quaternion<T> sum;
    for_each_permutation(
        a.rows(),
        [&](const Permutation& tau) {
            const CyclePermutation cp = right_ordered(tau, j);
            Quaternion<T> prod(1);
            for (auto cyc = cp.cycles.rbegin(); cyc != cp.cycles.rend(); ++cyc) {
                const auto& c = *cyc;
                const std::size_t len = c.size();
                for (std::size_t m = len - 1; m >= 1; --m) prod = a(c[m - 1], c[m]) * prod;
                prod = a(c[len - 1], c[0]) * prod;
            }
            detail::accumulate(sum, prod, cp.sign());
        },
        opts.max_enum);
    return sum;
}

template <class T>
Quaternion<T> rdet_cofactor(const QMatrix<T>& a, int i, const DetOptions& opts = {});
template <class T>
Quaternion<T> cdet_cofactor(const QMatrix<T>& a, int j, const DetOptions& opts = {});

// Right ij-th cofactor R_ij, so that rdet_i A = sum_j a_ij R_ij:
//   R_ij = -rdet_j A^{ii}_{.j}(a_{.i})   for i != j
//   R_ii =  rdet_k A^{ii},  k = min({1..n} \ {i})
// The inner determinant is evaluated with `method` (direct or cofactor).
template <class T>
Quaternion<T> right_cofactor(const QMatrix<T>& a, int i, int j, DetMethod method = DetMethod::direct,
                             const DetOptions& opts = {}) {
    a.require_square("right_cofactor");
    a.check_row(i);
    a.check_col(j);
    if (a.rows() == 1) return Quaternion<T>(1);
    auto inner = [&](const QMatrix<T>& m, int anchor) {
        return method == DetMethod::cofactor ? rdet_cofactor(m, anchor, opts) : rdet(m, anchor, opts);
    };
    if (i == j) return inner(delete_row_col(a, i, i), 1);  // min of the rest is 1 after re-indexing
    return -inner(detail::column_substituted_minor(a, i, j), detail::shifted(j, i));
}

// Left ij-th cofactor L_ij, so that cdet_j A = sum_i L_ij a_ij:
//   L_ij = -cdet_i A^{jj}_{i.}(a_{j.})   for i != j
//   L_jj =  cdet_k A^{jj},  k = min({1..n} \ {j})
template <class T>
Quaternion<T> left_cofactor(const QMatrix<T>& a, int i, int j, DetMethod method = DetMethod::direct,
                            const DetOptions& opts = {}) {
    a.require_square("left_cofactor");
    a.check_row(i);
    a.check_col(j);
    if (a.rows() == 1) return Quaternion<T>(1);
    auto inner = [&](const QMatrix<T>& m, int anchor) {
        return method == DetMethod::cofactor ? cdet_cofactor(m, anchor, opts) : cdet(m, anchor, opts);
    };
    if (i == j) return inner(delete_row_col(a, j, j), 1);
    return -inner(detail::row_substituted_minor(a, i, j), detail::shifted(i, j));
}

// rdet_i by recursive expansion along row i.
template <class T>
Quaternion<T> rdet_cofactor(const QMatrix<T>& a, int i, const DetOptions& opts) {
    a.require_square("rdet_cofactor");
    a.check_row(i);
    check_enumeration_size(a.rows(), opts.max_enum);
    if (a.rows() == 1) return a(1, 1);
    Quaternion<T> sum;
    for (int j = 1; j <= a.cols(); ++j) sum += a(i, j) * right_cofactor(a, i, j, DetMethod::cofactor, opts);
    return sum;
}

// cdet_j by recursive expansion along column j.
template <class T>
Quaternion<T> cdet_cofactor(const QMatrix<T>& a, int j, const DetOptions& opts) {
    a.require_square("cdet_cofactor");
    a.check_col(j);
    check_enumeration_size(a.rows(), opts.max_enum);
    if (a.rows() == 1) return a(1, 1);
    Quaternion<T> sum;
    for (int i = 1; i <= a.rows(); ++i) sum += left_cofactor(a, i, j, DetMethod::cofactor, opts) * a(i, j);
    return sum;
}

namespace detail {

// Moore recursion on A(r -> c): column c takes column r, then row and column
// r go. `labels` carries the original index of each surviving row/column.
// The expansion row follows the cycle being built (row c after choosing
// a_rc); once a cycle closes, the next one opens at the largest remaining label.
template <class T>
Quaternion<T> moore_recursive(const QMatrix<T>& m, const std::vector<int>& labels, int row_label) {
    const int n = m.rows();
    if (n == 1) return m(1, 1);
    const int r = static_cast<int>(std::find(labels.begin(), labels.end(), row_label) - labels.begin()) + 1;

    std::vector<int> rest = labels;
    rest.erase(rest.begin() + (r - 1));

    Quaternion<T> sum;
    for (int c = 1; c <= n; ++c) {
        if (m(r, c).is_zero()) continue;
        if (c == r) {
            const int next = *std::max_element(rest.begin(), rest.end());
            sum += m(r, r) * moore_recursive(delete_row_col(m, r, r), rest, next);
        } else {
            sum -= m(r, c) * moore_recursive(column_substituted_minor(m, r, c), rest, labels[c - 1]);
        }
    }
    return sum;
}

}  // namespace detail

// Moore determinant of a Hermitian matrix, expanded along row 1 with
// eps = +1 on the diagonal pick and -1 elsewhere.
template <class T>
Quaternion<T> moore_det(const QMatrix<T>& a, const DetOptions& opts = {}) {
    detail::require_hermitian(a, "moore_det");
    check_enumeration_size(a.rows(), opts.max_enum);
    std::vector<int> labels(a.rows());
    for (int k = 0; k < a.rows(); ++k) labels[k] = k + 1;
    return detail::moore_recursive(a, labels, 1);
}

// Determinant of a Hermitian matrix: rdet_1 A, checked to be real. In
// paranoid mode every rdet_i and cdet_j is evaluated and must agree.
template <class T>
T hermitian_det(const QMatrix<T>& a, const DetOptions& opts = {}) {
    detail::require_hermitian(a, "hermitian_det");
    const Quaternion<T> v = rdet(a, 1, opts);
    if (!v.is_near_real())
        throw ConsistencyError("row determinant of a Hermitian matrix has a nonzero imaginary part: " + to_literal(v));
    if (opts.paranoid) {
        for (int k = 1; k <= a.rows(); ++k) {
            if (!detail::approx_equal(rdet(a, k, opts), v) || !detail::approx_equal(cdet(a, k, opts), v))
                throw ConsistencyError("anchored determinants of a Hermitian matrix disagree at index " +
                                       std::to_string(k));
        }
    }
    return v.w();
}

// ddet A = det(A*A); equals det(AA*), never negative.
template <class T>
T ddet(const QMatrix<T>& a, const DetOptions& opts = {}) {
    a.require_square("ddet");
    return hermitian_det(corresponding_hermitian(a, Side::left), opts);
}

//   left(i, j)  = cdet_j (A*A)_{.j}(i-th column of A*)
//   right(i, j) = rdet_i (AA*)_{i.}(j-th row of A*)
template <class T>
DoubleCofactorTable<T> double_cofactors(const QMatrix<T>& a, const DetOptions& opts = {}) {
    a.require_square("double_cofactors");
    check_enumeration_size(a.rows(), opts.max_enum);
    const int n = a.rows();
    const QMatrix<T> adj = conj_transpose(a);
    const QMatrix<T> left_herm = adj * a;
    const QMatrix<T> right_herm = a * adj;
    return {n,
            QMatrix<T>::generate(n, n, [&](int i, int j) { return cdet(replace_column(left_herm, j, adj.col(i)), j, opts); }),
            QMatrix<T>::generate(n, n, [&](int i, int j) { return rdet(replace_row(right_herm, i, adj.row(j)), i, opts); })};
}

template <class T>
DetValue<T> row_determinant(const QMatrix<T>& a, int i, DetMethod method, const DetOptions& opts = {}) {
    switch (method) {
        case DetMethod::direct: return {rdet(a, i, opts), method, i};
        case DetMethod::cofactor: return {rdet_cofactor(a, i, opts), method, i};
        case DetMethod::moore:
            if (i != 1) throw IndexError("the Moore determinant is expanded along row 1 only");
            return {moore_det(a, opts), method, 1};
    }
    throw Error("unknown determinant method");
}

template <class T>
DetValue<T> column_determinant(const QMatrix<T>& a, int j, DetMethod method, const DetOptions& opts = {}) {
    switch (method) {
        case DetMethod::direct: return {cdet(a, j, opts), method, j};
        case DetMethod::cofactor: return {cdet_cofactor(a, j, opts), method, j};
        case DetMethod::moore: throw Error("the Moore determinant has no column form");
    }
    throw Error("unknown determinant method");
}

}  // namespace qdet
