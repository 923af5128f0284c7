#include "qdet/oracle.hpp"

#include <utility>

namespace qdet {

std::string to_string(const GaussianRational& z) {
    if (sgn(z.im) == 0) return to_string(z.re);
    std::string im = to_string(Rational(abs(z.im)));
    if (im == "1") im.clear();
    if (sgn(z.re) == 0) return (sgn(z.im) < 0 ? "-" : "") + im + "i";
    return to_string(z.re) + (sgn(z.im) < 0 ? "-" : "+") + im + "i";
}

CMatrix::CMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw DimensionError("complex matrix dimensions must be positive");
    data_.resize(static_cast<std::size_t>(rows) * cols);
}

std::size_t CMatrix::index(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw IndexError("complex matrix index out of range");
    return static_cast<std::size_t>(i - 1) * cols_ + (j - 1);
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("complex matrix shape mismatch");
    CMatrix out(a.rows(), b.cols());
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= b.cols(); ++j) {
            GaussianRational s;
            for (int k = 1; k <= a.cols(); ++k) s = s + a(i, k) * b(k, j);
            out(i, j) = s;
        }
    return out;
}

CMatrix conj_transpose(const CMatrix& m) {
    CMatrix out(m.cols(), m.rows());
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j) out(j, i) = conj(m(i, j));
    return out;
}

CMatrix complex_embed(const ExactMatrix& a) {
    CMatrix out(2 * a.rows(), 2 * a.cols());
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j) {
            const ExactQuaternion& q = a(i, j);
            const int r = 2 * i - 1, c = 2 * j - 1;
            out(r, c) = {q.w(), q.x()};
            out(r, c + 1) = {q.y(), q.z()};
            out(r + 1, c) = {Rational(-q.y()), q.z()};
            out(r + 1, c + 1) = {q.w(), Rational(-q.x())};
        }
    return out;
}

GaussianRational complex_det(const CMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("complex_det needs a square matrix");
    const int n = m.rows();
    CMatrix w = m;
    GaussianRational prev(1);
    bool negate = false;
    for (int k = 1; k < n; ++k) {
        if (w(k, k).is_zero()) {
            int p = k + 1;
            while (p <= n && w(p, k).is_zero()) ++p;
            if (p > n) return {};
            for (int c = 1; c <= n; ++c) std::swap(w(k, c), w(p, c));
            negate = !negate;
        }
        for (int i = k + 1; i <= n; ++i) {
            for (int j = k + 1; j <= n; ++j) w(i, j) = (w(k, k) * w(i, j) - w(i, k) * w(k, j)) / prev;
            w(i, k) = {};
        }
        prev = w(k, k);
    }
    return negate ? -w(n, n) : w(n, n);
}

namespace {

using Rows = std::vector<std::vector<ExactQuaternion>>;

// Reduces the left n x n block of `rows` to I; fails on a missing pivot.
void gauss_jordan(Rows& rows, int n) {
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && rows[p][k].is_zero()) ++p;
        if (p == n)
            throw SingularError("no nonzero pivot in column " + std::to_string(k + 1), "elimination");
        std::swap(rows[k], rows[p]);
        const ExactQuaternion inv = inverse(rows[k][k]);
        for (auto& e : rows[k]) e = inv * e;
        for (int i = 0; i < n; ++i) {
            if (i == k || rows[i][k].is_zero()) continue;
            const ExactQuaternion f = rows[i][k];
            for (std::size_t c = 0; c < rows[i].size(); ++c) rows[i][c] -= f * rows[k][c];
        }
    }
}

}  // namespace

std::vector<ExactQuaternion> gauss_solve_right(const ExactMatrix& a, const std::vector<ExactQuaternion>& y) {
    a.require_square("gauss_solve_right");
    const int n = a.rows();
    if (static_cast<int>(y.size()) != n) throw DimensionError("right-hand side length mismatch");
    Rows rows(n);
    for (int i = 1; i <= n; ++i) {
        rows[i - 1] = a.row(i);
        rows[i - 1].push_back(y[i - 1]);
    }
    gauss_jordan(rows, n);
    std::vector<ExactQuaternion> x;
    for (const auto& r : rows) x.push_back(r.back());
    return x;
}

std::vector<ExactQuaternion> gauss_solve_left(const ExactMatrix& a, const std::vector<ExactQuaternion>& y) {
    std::vector<ExactQuaternion> yc;
    for (const auto& q : y) yc.push_back(conj(q));
    std::vector<ExactQuaternion> x = gauss_solve_right(conj_transpose(a), yc);
    for (auto& q : x) q = conj(q);
    return x;
}

ExactMatrix gauss_inverse(const ExactMatrix& a) {
    a.require_square("gauss_inverse");
    const int n = a.rows();
    Rows rows(n);
    for (int i = 1; i <= n; ++i) {
        rows[i - 1] = a.row(i);
        for (int j = 1; j <= n; ++j) rows[i - 1].push_back(i == j ? ExactQuaternion(1) : ExactQuaternion());
    }
    gauss_jordan(rows, n);
    for (auto& r : rows) r.erase(r.begin(), r.begin() + n);
    return ExactMatrix::from_rows(rows);
}

}  // namespace qdet
