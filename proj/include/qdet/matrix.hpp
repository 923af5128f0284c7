#pragma once

#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qdet/error.hpp"
#include "qdet/quaternion.hpp"

namespace qdet {

enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

/// Dense m x n quaternion matrix, stored row-major.
///
/// Every public index is 1-based: `A(1, 1)` is the top-left entry. Matrices are
/// values; the structural edits below return fresh matrices and never touch
/// their argument.
template <class T>
class QMatrix {
public:
    using Entry = Quaternion<T>;

    QMatrix(int rows, int cols) : QMatrix(rows, cols, std::vector<Entry>(checked_size(rows, cols))) {}

    QMatrix(int rows, int cols, std::vector<Entry> entries) : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != checked_size(rows, cols)) {
            throw DimensionError("entry count " + std::to_string(data_.size()) + " does not match " +
                                 std::to_string(rows) + "x" + std::to_string(cols));
        }
    }

    QMatrix(std::initializer_list<std::initializer_list<Entry>> rows) {
        std::vector<std::vector<Entry>> r;
        for (const auto& row : rows) r.emplace_back(row);
        *this = from_rows(r);
    }

    static QMatrix from_rows(const std::vector<std::vector<Entry>>& rows) {
        if (rows.empty()) throw DimensionError("matrix needs at least one row");
        const auto cols = rows.front().size();
        std::vector<Entry> data;
        data.reserve(rows.size() * cols);
        for (const auto& row : rows) {
            if (row.size() != cols) throw DimensionError("ragged rows");
            data.insert(data.end(), row.begin(), row.end());
        }
        return QMatrix(static_cast<int>(rows.size()), static_cast<int>(cols), std::move(data));
    }

    // Builds entry (i, j) from f(i, j), 1-based.
    template <class F>
    static QMatrix generate(int rows, int cols, F&& f) {
        std::vector<Entry> data;
        data.reserve(checked_size(rows, cols));
        for (int i = 1; i <= rows; ++i)
            for (int j = 1; j <= cols; ++j) data.push_back(f(i, j));
        return QMatrix(rows, cols, std::move(data));
    }

    static QMatrix identity(int n) {
        return generate(n, n, [](int i, int j) { return i == j ? Entry(1) : Entry(); });
    }

    static QMatrix diagonal(const std::vector<Entry>& d) {
        const int n = static_cast<int>(d.size());
        return generate(n, n, [&](int i, int j) { return i == j ? d[i - 1] : Entry(); });
    }

    static QMatrix column_vector(const std::vector<Entry>& v) {
        return QMatrix(static_cast<int>(v.size()), 1, v);
    }

    static QMatrix row_vector(const std::vector<Entry>& v) {
        return QMatrix(1, static_cast<int>(v.size()), v);
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Entry& operator()(int i, int j) const {
        check_row(i);
        check_col(j);
        return data_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
    }

    std::span<const Entry> entries() const noexcept { return data_; }

    std::vector<Entry> row(int i) const {
        check_row(i);
        auto first = data_.begin() + static_cast<std::ptrdiff_t>(i - 1) * cols_;
        return {first, first + cols_};
    }

    std::vector<Entry> col(int j) const {
        check_col(j);
        std::vector<Entry> out;
        out.reserve(rows_);
        for (int i = 1; i <= rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }

    void check_row(int i) const {
        if (i < 1 || i > rows_)
            throw IndexError("row index " + std::to_string(i) + " outside 1.." + std::to_string(rows_));
    }

    void check_col(int j) const {
        if (j < 1 || j > cols_)
            throw IndexError("column index " + std::to_string(j) + " outside 1.." + std::to_string(cols_));
    }

    void require_square(const char* what) const {
        if (!is_square())
            throw DimensionError(std::string(what) + " needs a square matrix, got " + std::to_string(rows_) + "x" +
                                 std::to_string(cols_));
    }

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

private:
    QMatrix() = default;

    static std::size_t checked_size(int rows, int cols) {
        if (rows < 1 || cols < 1)
            throw DimensionError("matrix dimensions must be positive, got " + std::to_string(rows) + "x" +
                                 std::to_string(cols));
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Entry> data_;
};

using ExactMatrix = QMatrix<Rational>;
using FloatMatrix = QMatrix<double>;

template <class T>
QMatrix<T> operator*(const QMatrix<T>& a, const QMatrix<T>& b) {
    if (a.cols() != b.rows())
        throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    return QMatrix<T>::generate(a.rows(), b.cols(), [&](int i, int j) {
        Quaternion<T> s;
        for (int k = 1; k <= a.cols(); ++k) s += a(i, k) * b(k, j);
        return s;
    });
}

template <class T>
QMatrix<T> matmul(const QMatrix<T>& a, const QMatrix<T>& b) {
    return a * b;
}

template <class T>
QMatrix<T> operator+(const QMatrix<T>& a, const QMatrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shape mismatch in matrix sum");
    return QMatrix<T>::generate(a.rows(), a.cols(), [&](int i, int j) { return a(i, j) + b(i, j); });
}

template <class T>
QMatrix<T> operator-(const QMatrix<T>& a, const QMatrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shape mismatch in matrix difference");
    return QMatrix<T>::generate(a.rows(), a.cols(), [&](int i, int j) { return a(i, j) - b(i, j); });
}

// A*: (A*)_ij = conj(a_ji).
template <class T>
QMatrix<T> conj_transpose(const QMatrix<T>& a) {
    return QMatrix<T>::generate(a.cols(), a.rows(), [&](int i, int j) { return conj(a(j, i)); });
}

// a_ij = conj(a_ji) for all i, j. Exact on the Rational backend; the float
// backend compares componentwise within ScalarTraits<double>::tolerance.
template <class T>
bool is_hermitian(const QMatrix<T>& a) {
    a.require_square("is_hermitian");
    for (int i = 1; i <= a.rows(); ++i) {
        for (int j = i; j <= a.cols(); ++j) {
            const Quaternion<T> d = a(i, j) - conj(a(j, i));
            using Tr = ScalarTraits<T>;
            if (!(Tr::near_zero(d.w()) && Tr::near_zero(d.x()) && Tr::near_zero(d.y()) && Tr::near_zero(d.z())))
                return false;
        }
    }
    return true;
}

// A_{.j}(b): column j replaced by b.
template <class T>
QMatrix<T> replace_column(const QMatrix<T>& a, int j, const std::vector<Quaternion<T>>& b) {
    a.check_col(j);
    if (static_cast<int>(b.size()) != a.rows())
        throw DimensionError("replacement column has length " + std::to_string(b.size()) + ", expected " +
                             std::to_string(a.rows()));
    return QMatrix<T>::generate(a.rows(), a.cols(), [&](int r, int c) { return c == j ? b[r - 1] : a(r, c); });
}

// A_{i.}(b): row i replaced by b.
template <class T>
QMatrix<T> replace_row(const QMatrix<T>& a, int i, const std::vector<Quaternion<T>>& b) {
    a.check_row(i);
    if (static_cast<int>(b.size()) != a.cols())
        throw DimensionError("replacement row has length " + std::to_string(b.size()) + ", expected " +
                             std::to_string(a.cols()));
    return QMatrix<T>::generate(a.rows(), a.cols(), [&](int r, int c) { return r == i ? b[c - 1] : a(r, c); });
}

// A^{ij}: row i and column j removed.
template <class T>
QMatrix<T> delete_row_col(const QMatrix<T>& a, int i, int j) {
    a.check_row(i);
    a.check_col(j);
    if (a.rows() < 2 || a.cols() < 2) throw DimensionError("cannot delete a row and column of a 1-wide matrix");
    return QMatrix<T>::generate(a.rows() - 1, a.cols() - 1,
                                [&](int r, int c) { return a(r < i ? r : r + 1, c < j ? c : c + 1); });
}

// Left: A*A (n x n). Right: AA* (m x m).
template <class T>
QMatrix<T> corresponding_hermitian(const QMatrix<T>& a, Side side) {
    return side == Side::left ? conj_transpose(a) * a : a * conj_transpose(a);
}

template <class T>
QMatrix<T> scaled(const QMatrix<T>& a, const T& s) {
    return QMatrix<T>::generate(a.rows(), a.cols(), [&](int i, int j) { return a(i, j).scaled(s); });
}

// Left scalar multiple of a row vector: b * v.
template <class T>
std::vector<Quaternion<T>> left_multiply(const Quaternion<T>& b, const std::vector<Quaternion<T>>& v) {
    std::vector<Quaternion<T>> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(b * q);
    return out;
}

// Right scalar multiple of a column vector: v * b.
template <class T>
std::vector<Quaternion<T>> right_multiply(const std::vector<Quaternion<T>>& v, const Quaternion<T>& b) {
    std::vector<Quaternion<T>> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(q * b);
    return out;
}

template <class T>
std::vector<Quaternion<T>> add(const std::vector<Quaternion<T>>& u, const std::vector<Quaternion<T>>& v) {
    if (u.size() != v.size()) throw DimensionError("vector length mismatch");
    std::vector<Quaternion<T>> out;
    out.reserve(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) out.push_back(u[k] + v[k]);
    return out;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const QMatrix<T>& a) {
    os << '[';
    for (int i = 1; i <= a.rows(); ++i) {
        os << (i > 1 ? ", [" : "[");
        for (int j = 1; j <= a.cols(); ++j) os << (j > 1 ? ", " : "") << a(i, j);
        os << ']';
    }
    return os << ']';
}

template <class U>
QMatrix<U> convert(const ExactMatrix& a) {
    return QMatrix<U>::generate(a.rows(), a.cols(), [&](int i, int j) { return convert<U>(a(i, j)); });
}

}  // namespace qdet
