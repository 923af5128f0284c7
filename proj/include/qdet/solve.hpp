#pragma once

#include <vector>

#include "qdet/det.hpp"

namespace qdet {

template <class T>
struct SolveReport {
    std::vector<Quaternion<T>> solution;
    T ddet;                                   // det^2 on the Hermitian fast path
    T denominator;                            // ddet, or det on the fast path
    std::vector<Quaternion<T>> numerators;    // solution[k] = numerators[k] / denominator
    Side side = Side::right;
    bool hermitian_fast_path = false;
};

namespace detail {

template <class T>
void require_system(const QMatrix<T>& a, std::size_t rhs_len, const char* what) {
    a.require_square(what);
    if (static_cast<int>(rhs_len) != a.rows())
        throw DimensionError(std::string(what) + ": right-hand side has length " + std::to_string(rhs_len) +
                             ", expected " + std::to_string(a.rows()));
}

template <class T>
SolveReport<T> finish(std::vector<Quaternion<T>> numerators, const T& ddet_value, const T& denominator, Side side,
                      bool fast) {
    SolveReport<T> r{{}, ddet_value, denominator, std::move(numerators), side, fast};
    r.solution.reserve(r.numerators.size());
    for (const auto& q : r.numerators) r.solution.push_back(q.divided_by(denominator));
    return r;
}

}  // namespace detail

// A x = y:  x_j = cdet_j (A*A)_{.j}(f) / ddet A,  f = A* y.
template <class T>
SolveReport<T> solve_right(const QMatrix<T>& a, const std::vector<Quaternion<T>>& y, const DetOptions& opts = {}) {
    detail::require_system(a, y.size(), "solve_right");
    const T dd = ddet(a, opts);
    if (ScalarTraits<T>::near_zero(dd)) throw SingularError("right system is singular (ddet = 0)", to_string(dd));
    const QMatrix<T> adj = conj_transpose(a);
    const QMatrix<T> h = adj * a;
    const std::vector<Quaternion<T>> f = (adj * QMatrix<T>::column_vector(y)).col(1);
    std::vector<Quaternion<T>> num;
    for (int j = 1; j <= a.cols(); ++j) num.push_back(cdet(replace_column(h, j, f), j, opts));
    return detail::finish(std::move(num), dd, dd, Side::right, false);
}

// x A = y:  x_i = rdet_i (AA*)_{i.}(z) / ddet A,  z = y A*.
template <class T>
SolveReport<T> solve_left(const QMatrix<T>& a, const std::vector<Quaternion<T>>& y, const DetOptions& opts = {}) {
    detail::require_system(a, y.size(), "solve_left");
    const T dd = ddet(a, opts);
    if (ScalarTraits<T>::near_zero(dd)) throw SingularError("left system is singular (ddet = 0)", to_string(dd));
    const QMatrix<T> adj = conj_transpose(a);
    const QMatrix<T> h = a * adj;
    const std::vector<Quaternion<T>> z = (QMatrix<T>::row_vector(y) * adj).row(1);
    std::vector<Quaternion<T>> num;
    for (int i = 1; i <= a.rows(); ++i) num.push_back(rdet(replace_row(h, i, z), i, opts));
    return detail::finish(std::move(num), dd, dd, Side::left, false);
}

// Hermitian A x = y:  x_j = cdet_j A_{.j}(y) / det A.
template <class T>
SolveReport<T> solve_right_hermitian(const QMatrix<T>& a, const std::vector<Quaternion<T>>& y,
                                     const DetOptions& opts = {}) {
    detail::require_system(a, y.size(), "solve_right_hermitian");
    const T det = hermitian_det(a, opts);
    if (ScalarTraits<T>::near_zero(det)) throw SingularError("Hermitian system is singular (det = 0)", to_string(det));
    std::vector<Quaternion<T>> num;
    for (int j = 1; j <= a.cols(); ++j) num.push_back(cdet(replace_column(a, j, y), j, opts));
    return detail::finish(std::move(num), T(det * det), det, Side::right, true);
}

// Hermitian x A = y:  x_i = rdet_i A_{i.}(y) / det A.
template <class T>
SolveReport<T> solve_left_hermitian(const QMatrix<T>& a, const std::vector<Quaternion<T>>& y,
                                    const DetOptions& opts = {}) {
    detail::require_system(a, y.size(), "solve_left_hermitian");
    const T det = hermitian_det(a, opts);
    if (ScalarTraits<T>::near_zero(det)) throw SingularError("Hermitian system is singular (det = 0)", to_string(det));
    std::vector<Quaternion<T>> num;
    for (int i = 1; i <= a.rows(); ++i) num.push_back(rdet(replace_row(a, i, y), i, opts));
    return detail::finish(std::move(num), T(det * det), det, Side::left, true);
}

template <class T>
SolveReport<T> solve(const QMatrix<T>& a, const std::vector<Quaternion<T>>& y, Side side,
                     const DetOptions& opts = {}) {
    return side == Side::right ? solve_right(a, y, opts) : solve_left(a, y, opts);
}

}  // namespace qdet
