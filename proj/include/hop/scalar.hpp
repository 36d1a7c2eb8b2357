#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hop {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact scalar: rational with an optional Gaussian part (i^2 = -1).
struct Scalar {
    Rat re;
    Rat im;

    Scalar() = default;
    Scalar(long v) : re(v) {}
    Scalar(Rat r) : re(std::move(r)) {}
    Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return Scalar(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar operator+(const Scalar& o) const { return Scalar(re + o.re, im + o.im); }
    Scalar operator-(const Scalar& o) const { return Scalar(re - o.re, im - o.im); }
    Scalar operator*(const Scalar& o) const {
        return Scalar(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Scalar operator/(const Scalar& o) const {
        Rat n = o.re * o.re + o.im * o.im;
        if (n == 0) throw std::domain_error("scalar division by zero");
        return Scalar((re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n);
    }
    Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
    Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // arbitrary total order, used only for canonical sorting
    bool operator<(const Scalar& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }

    Scalar inv() const { return Scalar(Rat(1)) / *this; }

    std::string str() const;
};

Scalar binomial(int n, int k);

} // namespace hop
