#ifndef KAWA_TEST_ORACLES_HPP
#define KAWA_TEST_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "kawa/fourier.hpp"

namespace kawa::oracle
{

// 20-point Gauss-Legendre on [a, b], composite over `pieces` panels.
inline double gauss(const std::function<double(double)>& f, double a, double b, int pieces = 16)
{
    static const std::array<double, 10> x = {0.0765265211334973, 0.2277858511416451, 0.3737060887154195,
                                             0.5108670019508271, 0.6360536807265150, 0.7463319064601508,
                                             0.8391169718222188, 0.9122344282513259, 0.9639719272779138,
                                             0.9931285991850949};
    static const std::array<double, 10> w = {0.1527533871307258, 0.1491729864726037, 0.1420961093183820,
                                             0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
                                             0.0832767415767048, 0.0626720483341091, 0.0406014298003869,
                                             0.0176140071391521};
    double total = 0.0;
    const double h = (b - a) / pieces;
    for (int p = 0; p < pieces; ++p) {
        const double lo = a + p * h, c = lo + 0.5 * h, r = 0.5 * h;
        double s = 0.0;
        for (int i = 0; i < 10; ++i)
            s += w[i] * (f(c - r * x[i]) + f(c + r * x[i]));
        total += r * s;
    }
    return total;
}

// Integral over [a, b] split at the given interior kinks.
inline double gauss_split(const std::function<double(double)>& f, double a, double b, std::vector<double> kinks,
                          int pieces = 16)
{
    kinks.push_back(a);
    kinks.push_back(b);
    std::sort(kinks.begin(), kinks.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < kinks.size(); ++i) {
        const double lo = std::max(a, kinks[i]), hi = std::min(b, kinks[i + 1]);
        if (hi > lo)
            total += gauss(f, lo, hi, pieces);
    }
    return total;
}

// Function value of a stored sequence at x (either parity).
inline double eval(const FSeq& u, double x)
{
    double s = u.parity() == Parity::even ? u[0] : 0.0;
    for (int n = 1; n <= u.max_index(); ++n) {
        const double t = M_PI * n * x / u.d();
        s += 2.0 * u[n] * (u.parity() == Parity::even ? std::cos(t) : std::sin(t));
    }
    return s;
}

// Stored coefficients of f on (-d, d) by the periodic trapezoid rule with M points.
inline FSeq coefficients(const std::function<double(double)>& f, double d, Parity parity, int max_index, int M)
{
    std::vector<double> c(static_cast<std::size_t>(max_index) + 1, 0.0);
    for (int j = 0; j < M; ++j) {
        const double x = -d + 2.0 * d * j / M;
        const double fx = f(x);
        for (int n = 0; n <= max_index; ++n) {
            const double t = M_PI * n * x / d;
            c[n] += fx * (parity == Parity::even ? std::cos(t) : std::sin(t));
        }
    }
    for (auto& v : c)
        v /= M;
    if (parity == Parity::odd)
        c[0] = 0.0;
    return FSeq(d, parity, std::move(c));
}

// Inverse Fourier transform of 1 / (1 + l1 w^2 + l2 w^4) at x.
inline double kernel_by_quadrature(double l1, double l2, double x)
{
    const auto f = [&](double w) { return std::cos(w * x) / (1.0 + w * w * (l1 + l2 * w * w)); };
    // the integrand decays like w^-4; the tail beyond W is below 1 / (3 l2 W^3)
    const double W = 4000.0;
    return gauss(f, 0.0, W, 40000) / M_PI;
}

} // namespace kawa::oracle

#endif
