#include <cmath>
#include <numbers>

#include "cubiclf/kernels.hpp"

namespace cubiclf::kernels {

namespace {

struct Neumaier {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

}  // namespace

ClassSums cis_class_sum_scalar(const double* phase, const std::uint8_t* cls, std::size_t n) {
    Neumaier re[3], im[3];
    for (std::size_t i = 0; i < n; ++i) {
        double t = phase[i] - std::floor(phase[i]);
        double ang = 2.0 * std::numbers::pi * t;
        re[cls[i]].add(std::cos(ang));
        im[cls[i]].add(std::sin(ang));
    }
    ClassSums out;
    for (int k = 0; k < 3; ++k) out.s[k] = {re[k].value(), im[k].value()};
    return out;
}

std::complex<double> exp_dot_scalar(const std::complex<double>* coeff, const double* logn,
                                    std::size_t n, std::complex<double> s) {
    Neumaier re, im;
    for (std::size_t i = 0; i < n; ++i) {
        double mag = std::exp(-s.real() * logn[i]);
        double ang = -s.imag() * logn[i];
        std::complex<double> term =
            coeff[i] * std::complex<double>(mag * std::cos(ang), mag * std::sin(ang));
        re.add(term.real());
        im.add(term.imag());
    }
    return {re.value(), im.value()};
}

std::complex<double> compensated_sum_scalar(const std::complex<double>* v, std::size_t n) {
    Neumaier re, im;
    for (std::size_t i = 0; i < n; ++i) {
        re.add(v[i].real());
        im.add(v[i].imag());
    }
    return {re.value(), im.value()};
}

}  // namespace cubiclf::kernels
