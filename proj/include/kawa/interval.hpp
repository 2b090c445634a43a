#ifndef KAWA_INTERVAL_HPP
#define KAWA_INTERVAL_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "kawa/errors.hpp"

namespace kawa
{

// Directed rounding without touching the FPU mode. Every operation is done in
// round-to-nearest; an error-free transformation (TwoSum, FMA residual) tells
// on which side of the exact value the rounded result fell, and the result is
// moved one representable number outward only when it fell on the wrong side.
// Near the underflow range the residual is not exact and both sides step.
namespace rnd
{

inline constexpr double inf = std::numeric_limits<double>::infinity();
inline constexpr double dmax = std::numeric_limits<double>::max();
inline constexpr double tiny = 0x1p-900;

inline double next_up(double x)
{
    if (std::isnan(x) || x == inf)
        return x;
    if (x == 0.0)
        return std::numeric_limits<double>::denorm_min();
    if (x == -inf)
        return -dmax;
    auto bits = std::bit_cast<std::uint64_t>(x);
    bits = x > 0 ? bits + 1 : bits - 1;
    return std::bit_cast<double>(bits);
}

inline double next_down(double x) { return -next_up(-x); }

inline double add_down(double a, double b)
{
    const double s = a + b;
    if (!std::isfinite(s))
        return (s == inf && std::isfinite(a) && std::isfinite(b)) ? dmax : s;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return err < 0 ? next_down(s) : s;
}

inline double add_up(double a, double b)
{
    const double s = a + b;
    if (!std::isfinite(s))
        return (s == -inf && std::isfinite(a) && std::isfinite(b)) ? -dmax : s;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return err > 0 ? next_up(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

inline double mul_down(double a, double b)
{
    if (a == 0.0 || b == 0.0)
        return 0.0;
    const double p = a * b;
    if (!std::isfinite(p))
        return (p == inf && std::isfinite(a) && std::isfinite(b)) ? dmax : p;
    if (std::fabs(p) < tiny)
        return next_down(p);
    return std::fma(a, b, -p) < 0 ? next_down(p) : p;
}

inline double mul_up(double a, double b)
{
    if (a == 0.0 || b == 0.0)
        return 0.0;
    const double p = a * b;
    if (!std::isfinite(p))
        return (p == -inf && std::isfinite(a) && std::isfinite(b)) ? -dmax : p;
    if (std::fabs(p) < tiny)
        return next_up(p);
    return std::fma(a, b, -p) > 0 ? next_up(p) : p;
}

inline double div_down(double a, double b)
{
    if (a == 0.0)
        return 0.0;
    const double q = a / b;
    if (!std::isfinite(q))
        return (q == inf && std::isfinite(a)) ? dmax : q;
    if (!std::isfinite(a) || !std::isfinite(b))
        return next_down(q);
    if (std::fabs(q) < tiny || std::fabs(a) < tiny)
        return next_down(q);
    const double r = std::fma(-q, b, a);
    return (r != 0 && ((r < 0) != (b < 0))) ? next_down(q) : q;
}

inline double div_up(double a, double b)
{
    if (a == 0.0)
        return 0.0;
    const double q = a / b;
    if (!std::isfinite(q))
        return (q == -inf && std::isfinite(a)) ? -dmax : q;
    if (!std::isfinite(a) || !std::isfinite(b))
        return next_up(q);
    if (std::fabs(q) < tiny || std::fabs(a) < tiny)
        return next_up(q);
    const double r = std::fma(-q, b, a);
    return (r != 0 && ((r < 0) == (b < 0))) ? next_up(q) : q;
}

inline double sqrt_down(double x)
{
    if (x == 0.0 || x == inf)
        return x;
    const double s = std::sqrt(x);
    if (x < tiny)
        return std::max(0.0, next_down(s));
    return std::fma(-s, s, x) < 0 ? next_down(s) : s;
}

inline double sqrt_up(double x)
{
    if (x == 0.0 || x == inf)
        return x;
    const double s = std::sqrt(x);
    if (x < tiny)
        return next_up(s);
    return std::fma(-s, s, x) > 0 ? next_up(s) : s;
}

// libm results are trusted to 2 ulp and widened by that much.
inline double widen_down(double y) { return next_down(next_down(y)); }
inline double widen_up(double y) { return next_up(next_up(y)); }

} // namespace rnd

class Interval
{
public:
    constexpr Interval() = default;
    Interval(double x) : lo_(x), hi_(x) // NOLINT: implicit point promotion
    {
        if (std::isnan(x))
            throw DomainError("NaN interval endpoint");
    }
    Interval(double lo, double hi) : lo_(lo), hi_(hi)
    {
        if (std::isnan(lo) || std::isnan(hi) || lo > hi)
            throw DomainError("invalid interval endpoints");
    }

    // Skips validation; for kernels whose endpoints are correct by construction.
    static Interval raw(double lo, double hi)
    {
        Interval r;
        r.lo_ = lo;
        r.hi_ = hi;
        return r;
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double mid() const
    {
        if (lo_ == -hi_)
            return 0.0;
        return 0.5 * lo_ + 0.5 * hi_;
    }
    double width_up() const { return rnd::sub_up(hi_, lo_); }
    double rad_up() const
    {
        const double m = mid();
        return std::max(rnd::sub_up(hi_, m), rnd::sub_up(m, lo_));
    }
    double mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }
    double mig() const
    {
        if (lo_ <= 0 && hi_ >= 0)
            return 0.0;
        return std::min(std::fabs(lo_), std::fabs(hi_));
    }
    bool contains(double x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool is_point() const { return lo_ == hi_; }

    Interval& operator+=(const Interval& o);
    Interval& operator-=(const Interval& o);
    Interval& operator*=(const Interval& o);
    Interval& operator/=(const Interval& o);

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

inline Interval operator-(const Interval& a) { return Interval::raw(-a.hi(), -a.lo()); }

inline Interval operator+(const Interval& a, const Interval& b)
{
    return Interval::raw(rnd::add_down(a.lo(), b.lo()), rnd::add_up(a.hi(), b.hi()));
}

inline Interval operator-(const Interval& a, const Interval& b)
{
    return Interval::raw(rnd::sub_down(a.lo(), b.hi()), rnd::sub_up(a.hi(), b.lo()));
}

inline Interval operator*(const Interval& a, const Interval& b)
{
    using namespace rnd;
    const double al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
    if (al >= 0) {
        if (bl >= 0)
            return Interval::raw(mul_down(al, bl), mul_up(ah, bh));
        if (bh <= 0)
            return Interval::raw(mul_down(ah, bl), mul_up(al, bh));
        return Interval::raw(mul_down(ah, bl), mul_up(ah, bh));
    }
    if (ah <= 0) {
        if (bl >= 0)
            return Interval::raw(mul_down(al, bh), mul_up(ah, bl));
        if (bh <= 0)
            return Interval::raw(mul_down(ah, bh), mul_up(al, bl));
        return Interval::raw(mul_down(al, bh), mul_up(al, bl));
    }
    if (bl >= 0)
        return Interval::raw(mul_down(al, bh), mul_up(ah, bh));
    if (bh <= 0)
        return Interval::raw(mul_down(ah, bl), mul_up(al, bl));
    return Interval::raw(std::min(mul_down(al, bh), mul_down(ah, bl)),
                         std::max(mul_up(al, bl), mul_up(ah, bh)));
}

inline Interval operator/(const Interval& a, const Interval& b)
{
    using namespace rnd;
    const double al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
    if (bl <= 0 && bh >= 0)
        throw DivisionByZeroInterval("divisor interval contains zero");
    if (bl > 0) {
        if (al >= 0)
            return Interval::raw(div_down(al, bh), div_up(ah, bl));
        if (ah <= 0)
            return Interval::raw(div_down(al, bl), div_up(ah, bh));
        return Interval::raw(div_down(al, bl), div_up(ah, bl));
    }
    if (al >= 0)
        return Interval::raw(div_down(ah, bh), div_up(al, bl));
    if (ah <= 0)
        return Interval::raw(div_down(ah, bl), div_up(al, bh));
    return Interval::raw(div_down(ah, bh), div_up(al, bh));
}

inline Interval& Interval::operator+=(const Interval& o) { return *this = *this + o; }
inline Interval& Interval::operator-=(const Interval& o) { return *this = *this - o; }
inline Interval& Interval::operator*=(const Interval& o) { return *this = *this * o; }
inline Interval& Interval::operator/=(const Interval& o) { return *this = *this / o; }

// Product with a point, the hot path of float-times-interval matrix products.
inline Interval mul(double a, const Interval& b)
{
    using namespace rnd;
    if (a >= 0)
        return Interval::raw(mul_down(a, b.lo()), mul_up(a, b.hi()));
    return Interval::raw(mul_down(a, b.hi()), mul_up(a, b.lo()));
}

inline Interval hull(const Interval& a, const Interval& b)
{
    return Interval::raw(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

inline Interval sqr(const Interval& a)
{
    const double m = a.mig(), M = a.mag();
    return Interval::raw(rnd::mul_down(m, m), rnd::mul_up(M, M));
}

Interval sqrt(const Interval& a);
Interval exp(const Interval& a);
Interval cosh(const Interval& a);
Interval sinh(const Interval& a);
Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval abs(const Interval& a);
Interval pow(const Interval& a, int n);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);

// Enclosure of pi.
Interval pi();

// "[lo,hi]" with lo rounded down and hi rounded up to 17 significant digits.
std::string to_string(const Interval& a);
// "[lo,hi]" in C99 hexadecimal-float notation, exact.
std::string to_hex(const Interval& a);
Interval from_hex(const std::string& s);
// Encloses the real number written in decimal; a point when exactly representable.
Interval parse_decimal(const std::string& s);
std::string decimal_down(double x);
std::string decimal_up(double x);

} // namespace kawa

#endif
