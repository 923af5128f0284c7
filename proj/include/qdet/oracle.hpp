#pragma once

#include <string>
#include <vector>

#include "qdet/matrix.hpp"

// Verification paths that share no code with the determinant module.

namespace qdet {

// re + im*i in Q(i).
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re + b.re), Rational(a.im + b.im)};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re - b.re), Rational(a.im - b.im)};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {Rational(-a.re), Rational(-a.im)}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        const Rational d = b.re * b.re + b.im * b.im;
        if (sgn(d) == 0) throw ZeroDivisionError("division by zero in Q(i)");
        return {Rational((a.re * b.re + a.im * b.im) / d), Rational((a.im * b.re - a.re * b.im) / d)};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, Rational(-z.im)}; }

std::string to_string(const GaussianRational& z);

// Dense complex matrix, 1-based like QMatrix.
class CMatrix {
public:
    CMatrix(int rows, int cols);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    GaussianRational& operator()(int i, int j) { return data_[index(i, j)]; }
    const GaussianRational& operator()(int i, int j) const { return data_[index(i, j)]; }

    friend bool operator==(const CMatrix& a, const CMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t index(int i, int j) const;

    int rows_;
    int cols_;
    std::vector<GaussianRational> data_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix conj_transpose(const CMatrix& m);

// q = w + xi + yj + zk  ->  [[w+xi, y+zi], [-y+zi, w-xi]], blocks tiled in entry order.
CMatrix complex_embed(const ExactMatrix& a);

// Fraction-free (Bareiss) determinant over Q(i); row swaps flip the sign.
GaussianRational complex_det(const CMatrix& m);

// Gauss-Jordan elimination over H: rows are scaled by left multiplication with
// pivot inverses; the pivot is the first row with a nonzero entry in the column.
std::vector<ExactQuaternion> gauss_solve_right(const ExactMatrix& a, const std::vector<ExactQuaternion>& y);

// x A = y, solved as (A* x* = y*)*.
std::vector<ExactQuaternion> gauss_solve_left(const ExactMatrix& a, const std::vector<ExactQuaternion>& y);

ExactMatrix gauss_inverse(const ExactMatrix& a);

}  // namespace qdet
