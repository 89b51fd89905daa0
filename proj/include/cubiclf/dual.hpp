#pragma once

#include <cmath>
#include <complex>

namespace cubiclf {

// First-order dual number over complex<double>: carries d/ds alongside the
// value, so evaluating an analytic expression at Dual::seed(s) yields the
// exact term-wise derivative of that expression.
struct Dual {
    std::complex<double> v{0.0, 0.0};
    std::complex<double> d{0.0, 0.0};

    Dual() = default;
    Dual(std::complex<double> value) : v(value) {}
    Dual(std::complex<double> value, std::complex<double> deriv) : v(value), d(deriv) {}
    Dual(double value) : v(value) {}

    static Dual seed(std::complex<double> s) { return {s, {1.0, 0.0}}; }

    Dual operator-() const { return {-v, -d}; }
    friend Dual operator+(const Dual& x, const Dual& y) { return {x.v + y.v, x.d + y.d}; }
    friend Dual operator-(const Dual& x, const Dual& y) { return {x.v - y.v, x.d - y.d}; }
    friend Dual operator*(const Dual& x, const Dual& y) {
        return {x.v * y.v, x.v * y.d + x.d * y.v};
    }
    friend Dual operator/(const Dual& x, const Dual& y) {
        std::complex<double> q = x.v / y.v;
        return {q, (x.d - q * y.d) / y.v};
    }
    Dual& operator+=(const Dual& o) { return *this = *this + o; }
    Dual& operator-=(const Dual& o) { return *this = *this - o; }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }
    Dual& operator/=(const Dual& o) { return *this = *this / o; }
};

inline Dual exp(const Dual& x) {
    std::complex<double> e = std::exp(x.v);
    return {e, e * x.d};
}
inline Dual log(const Dual& x) { return {std::log(x.v), x.d / x.v}; }
inline Dual sin(const Dual& x) { return {std::sin(x.v), std::cos(x.v) * x.d}; }
inline Dual pow(const Dual& x, const Dual& y) { return exp(y * log(x)); }
inline double abs_v(const Dual& x) { return std::abs(x.v); }

inline std::complex<double> value_of(const Dual& x) { return x.v; }
inline std::complex<double> value_of(const std::complex<double>& x) { return x; }
inline double abs_v(const std::complex<double>& x) { return std::abs(x); }

}  // namespace cubiclf
