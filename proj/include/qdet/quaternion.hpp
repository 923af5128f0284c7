#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "qdet/error.hpp"
#include "qdet/rational.hpp"

namespace qdet {

/// Hamilton quaternion w + x*i + y*j + z*k with components in the scalar T
/// (Rational for the exact backend, double for the approximate one).
///
/// Values are immutable once built; every operation returns a new value.
template <class T>
class Quaternion {
public:
    using Scalar = T;

    Quaternion() : w_(0), x_(0), y_(0), z_(0) {}
    Quaternion(T w) : w_(std::move(w)), x_(0), y_(0), z_(0) {}  // NOLINT: reals embed implicitly
    Quaternion(T w, T x, T y, T z) : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}
    Quaternion(int w) : Quaternion(T(w)) {}  // NOLINT

    static Quaternion unit_i() { return {T(0), T(1), T(0), T(0)}; }
    static Quaternion unit_j() { return {T(0), T(0), T(1), T(0)}; }
    static Quaternion unit_k() { return {T(0), T(0), T(0), T(1)}; }

    const T& w() const noexcept { return w_; }
    const T& x() const noexcept { return x_; }
    const T& y() const noexcept { return y_; }
    const T& z() const noexcept { return z_; }

    // Exact componentwise zero test.
    bool is_zero() const {
        using Tr = ScalarTraits<T>;
        return Tr::is_zero(w_) && Tr::is_zero(x_) && Tr::is_zero(y_) && Tr::is_zero(z_);
    }

    bool is_real() const {
        using Tr = ScalarTraits<T>;
        return Tr::is_zero(x_) && Tr::is_zero(y_) && Tr::is_zero(z_);
    }

    // Imaginary part vanishes up to the backend tolerance (exact for Rational).
    bool is_near_real() const {
        using Tr = ScalarTraits<T>;
        return Tr::near_zero(x_) && Tr::near_zero(y_) && Tr::near_zero(z_);
    }

    Quaternion operator-() const { return {T(-w_), T(-x_), T(-y_), T(-z_)}; }

    friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
        return {T(p.w_ + q.w_), T(p.x_ + q.x_), T(p.y_ + q.y_), T(p.z_ + q.z_)};
    }

    friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
        return {T(p.w_ - q.w_), T(p.x_ - q.x_), T(p.y_ - q.y_), T(p.z_ - q.z_)};
    }

    // Hamilton product; i*j = k, j*i = -k.
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {T(p.w_ * q.w_ - p.x_ * q.x_ - p.y_ * q.y_ - p.z_ * q.z_),
                T(p.w_ * q.x_ + p.x_ * q.w_ + p.y_ * q.z_ - p.z_ * q.y_),
                T(p.w_ * q.y_ - p.x_ * q.z_ + p.y_ * q.w_ + p.z_ * q.x_),
                T(p.w_ * q.z_ + p.x_ * q.y_ - p.y_ * q.x_ + p.z_ * q.w_)};
    }

    Quaternion& operator+=(const Quaternion& q) { return *this = *this + q; }
    Quaternion& operator-=(const Quaternion& q) { return *this = *this - q; }
    Quaternion& operator*=(const Quaternion& q) { return *this = *this * q; }

    // Multiplication and division by a real scalar commute with everything.
    Quaternion scaled(const T& s) const { return {T(w_ * s), T(x_ * s), T(y_ * s), T(z_ * s)}; }

    Quaternion divided_by(const T& s) const {
        if (ScalarTraits<T>::is_zero(s)) throw ZeroDivisionError("division of a quaternion by zero");
        return {T(w_ / s), T(x_ / s), T(y_ / s), T(z_ / s)};
    }

    friend bool operator==(const Quaternion& p, const Quaternion& q) {
        return p.w_ == q.w_ && p.x_ == q.x_ && p.y_ == q.y_ && p.z_ == q.z_;
    }
    friend bool operator!=(const Quaternion& p, const Quaternion& q) { return !(p == q); }

private:
    T w_, x_, y_, z_;
};

using ExactQuaternion = Quaternion<Rational>;
using FloatQuaternion = Quaternion<double>;

template <class T>
Quaternion<T> conj(const Quaternion<T>& q) {
    return {q.w(), T(-q.x()), T(-q.y()), T(-q.z())};
}

template <class T>
T norm(const Quaternion<T>& q) {
    return T(q.w() * q.w() + q.x() * q.x() + q.y() * q.y() + q.z() * q.z());
}

// t(q) = q + conj(q) = 2w.
template <class T>
T trace(const Quaternion<T>& q) {
    return T(2 * q.w());
}

template <class T>
Quaternion<T> inverse(const Quaternion<T>& q) {
    if (q.is_zero()) throw ZeroDivisionError("inverse of the zero quaternion");
    return conj(q).divided_by(norm(q));
}

template <class U>
Quaternion<U> convert(const ExactQuaternion& q) {
    using Tr = ScalarTraits<U>;
    return {Tr::from_rational(q.w()), Tr::from_rational(q.x()), Tr::from_rational(q.y()),
            Tr::from_rational(q.z())};
}

// Literal grammar: signed terms over the units {"", i, j, k} with rational
// coefficients ("1/2-3i+j-7/4k"). A unit may appear at most once; a missing
// coefficient means 1. Decimal coefficients ("0.25k") are read exactly.
ExactQuaternion parse_quaternion(std::string_view text);

std::string to_literal(const ExactQuaternion& q);
std::string to_literal(const FloatQuaternion& q);

template <class T>
std::ostream& operator<<(std::ostream& os, const Quaternion<T>& q) {
    return os << to_literal(q);
}

}  // namespace qdet
