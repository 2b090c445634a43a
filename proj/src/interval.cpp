#include "kawa/interval.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace kawa
{

namespace
{

constexpr double pi_lo = 0x1.921fb54442d18p+1;
constexpr double pi_hi = 0x1.921fb54442d19p+1;

double exp_down(double x)
{
    if (x == 0.0)
        return 1.0;
    return std::max(0.0, rnd::widen_down(std::exp(x)));
}

double exp_up(double x)
{
    if (x == 0.0)
        return 1.0;
    return rnd::widen_up(std::exp(x));
}

Interval exp_point(double x) { return Interval::raw(exp_down(x), exp_up(x)); }

// The argument is too large for a useful trigonometric enclosure.
bool trig_hopeless(const Interval& a)
{
    return !std::isfinite(a.lo()) || !std::isfinite(a.hi()) || a.mag() > 0x1p40 ||
           rnd::sub_up(a.hi(), a.lo()) >= 2 * pi_lo;
}

// Whether some point (k + shift) * pi, k integer, may lie inside a.
// Returns +1 / -1 according to the parity of such k; 0 if none; 2 if both.
int crossings(const Interval& a, double shift)
{
    const Interval p = pi();
    const double klo = std::floor(a.lo() / pi_hi - shift) - 1;
    const double khi = std::ceil(a.hi() / pi_lo - shift) + 1;
    bool even = false, odd = false;
    for (double k = klo; k <= khi; k += 1.0) {
        const Interval x = Interval(k + shift) * p;
        if (x.hi() >= a.lo() && x.lo() <= a.hi()) {
            if (std::fmod(std::fabs(k), 2.0) == 0.0)
                even = true;
            else
                odd = true;
        }
    }
    if (even && odd)
        return 2;
    return even ? 1 : (odd ? -1 : 0);
}

Interval clamp_unit(double lo, double hi)
{
    return Interval::raw(std::max(-1.0, lo), std::min(1.0, hi));
}

Interval trig(const Interval& a, double (*f)(double), double shift)
{
    if (trig_hopeless(a))
        return Interval::raw(-1.0, 1.0);
    const double f1 = f(a.lo()), f2 = f(a.hi());
    double lo = rnd::widen_down(std::min(f1, f2));
    double hi = rnd::widen_up(std::max(f1, f2));
    const int c = crossings(a, shift);
    if (c == 1 || c == 2)
        hi = 1.0;
    if (c == -1 || c == 2)
        lo = -1.0;
    return clamp_unit(lo, hi);
}

struct Decimal
{
    bool neg = false;
    std::string digits; // no leading zeros, at least one digit
    long exp10 = 0;     // value is d1.d2d3... times 10^exp10
};

Decimal exact_decimal(double x)
{
    static thread_local char buf[1200];
    std::snprintf(buf, sizeof buf, "%.790e", x);
    Decimal d;
    const char* p = buf;
    if (*p == '-') {
        d.neg = true;
        ++p;
    }
    for (; *p && *p != 'e'; ++p)
        if (*p != '.')
            d.digits.push_back(*p);
    d.exp10 = std::strtol(p + 1, nullptr, 10);
    while (d.digits.size() > 1 && d.digits.back() == '0')
        d.digits.pop_back();
    return d;
}

std::string round_decimal(double x, bool up)
{
    if (x == 0.0)
        return "0";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    Decimal d = exact_decimal(x);
    constexpr std::size_t keep = 17;
    bool inexact = false;
    if (d.digits.size() > keep) {
        inexact = d.digits.find_first_not_of('0', keep) != std::string::npos;
        d.digits.resize(keep);
    }
    // Truncation moves toward zero; away from zero is needed for an upper bound
    // of a positive number or a lower bound of a negative one.
    if (inexact && (up != d.neg)) {
        int i = static_cast<int>(d.digits.size()) - 1;
        while (i >= 0 && d.digits[i] == '9') {
            d.digits[i] = '0';
            --i;
        }
        if (i < 0) {
            d.digits.insert(d.digits.begin(), '1');
            d.digits.pop_back();
            ++d.exp10;
        } else {
            ++d.digits[i];
        }
    }
    while (d.digits.size() > 1 && d.digits.back() == '0')
        d.digits.pop_back();
    std::string out = d.neg ? "-" : "";
    out += d.digits[0];
    if (d.digits.size() > 1) {
        out += '.';
        out.append(d.digits, 1);
    }
    out += 'e';
    out += std::to_string(d.exp10);
    return out;
}

std::string hex(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", x);
    return buf;
}

// Parses "[a,b]" into its two fields.
std::pair<std::string, std::string> split_pair(const std::string& s)
{
    const auto l = s.find('['), c = s.find(','), r = s.find(']');
    if (l == std::string::npos || c == std::string::npos || r == std::string::npos || !(l < c && c < r))
        throw DomainError("malformed interval string: " + s);
    return {s.substr(l + 1, c - l - 1), s.substr(c + 1, r - c - 1)};
}

double parse_double(const std::string& s)
{
    const char* b = s.c_str();
    while (*b == ' ')
        ++b;
    char* end = nullptr;
    const double x = std::strtod(b, &end);
    if (end == b)
        throw DomainError("malformed number: " + s);
    return x;
}

// Normalized digit string and exponent of a decimal literal, for exactness checks.
Decimal normalize_literal(const std::string& s)
{
    Decimal d;
    std::size_t i = 0;
    while (i < s.size() && s[i] == ' ')
        ++i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        d.neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    long point = -1;
    for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
        if (s[i] == '.')
            point = static_cast<long>(digits.size());
        else
            digits.push_back(s[i]);
    }
    long e = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E'))
        e = std::strtol(s.c_str() + i + 1, nullptr, 10);
    if (point < 0)
        point = static_cast<long>(digits.size());
    const auto first = digits.find_first_not_of('0');
    if (first == std::string::npos) {
        d.digits = "0";
        return d;
    }
    d.digits = digits.substr(first);
    d.exp10 = point - static_cast<long>(first) - 1 + e;
    while (d.digits.size() > 1 && d.digits.back() == '0')
        d.digits.pop_back();
    return d;
}

} // namespace

Interval pi() { return Interval::raw(pi_lo, pi_hi); }

Interval sqrt(const Interval& a)
{
    if (a.lo() < 0)
        throw DomainError("sqrt of an interval with negative part");
    return Interval::raw(rnd::sqrt_down(a.lo()), rnd::sqrt_up(a.hi()));
}

Interval exp(const Interval& a) { return Interval::raw(exp_down(a.lo()), exp_up(a.hi())); }

Interval cosh(const Interval& a)
{
    auto c = [](double x) {
        const Interval e = exp_point(x);
        return (e + exp_point(-x)) * Interval(0.5);
    };
    const double lo = std::max(1.0, c(a.mig()).lo());
    return Interval::raw(lo, std::max(lo, c(a.mag()).hi()));
}

Interval sinh(const Interval& a)
{
    auto s = [](double x) { return (exp_point(x) - exp_point(-x)) * Interval(0.5); };
    double lo = s(a.lo()).lo(), hi = s(a.hi()).hi();
    // sinh has the sign of its argument.
    if (a.lo() >= 0)
        lo = std::max(lo, 0.0);
    if (a.hi() <= 0)
        hi = std::min(hi, 0.0);
    return Interval::raw(lo, hi);
}

Interval cos(const Interval& a)
{
    return trig(a, [](double x) { return std::cos(x); }, 0.0);
}

Interval sin(const Interval& a)
{
    return trig(a, [](double x) { return std::sin(x); }, 0.5);
}

Interval abs(const Interval& a) { return Interval::raw(a.mig(), a.mag()); }

Interval pow(const Interval& a, int n)
{
    if (n < 0)
        return Interval(1.0) / pow(a, -n);
    if (n == 0)
        return Interval(1.0);
    auto point_pow = [n](double x) {
        Interval r(1.0), b(x);
        for (int k = n; k > 0; k >>= 1) {
            if (k & 1)
                r = r * b;
            b = b * b;
        }
        return r;
    };
    if (n % 2 == 1)
        return Interval::raw(point_pow(a.lo()).lo(), point_pow(a.hi()).hi());
    return Interval::raw(point_pow(a.mig()).lo(), point_pow(a.mag()).hi());
}

Interval max(const Interval& a, const Interval& b)
{
    return Interval::raw(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval min(const Interval& a, const Interval& b)
{
    return Interval::raw(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

std::string decimal_down(double x) { return round_decimal(x, false); }
std::string decimal_up(double x) { return round_decimal(x, true); }

std::string to_string(const Interval& a)
{
    return "[" + decimal_down(a.lo()) + "," + decimal_up(a.hi()) + "]";
}

std::string to_hex(const Interval& a) { return "[" + hex(a.lo()) + "," + hex(a.hi()) + "]"; }

Interval from_hex(const std::string& s)
{
    const auto [l, h] = split_pair(s);
    return Interval(parse_double(l), parse_double(h));
}

Interval parse_decimal(const std::string& s)
{
    const double x = parse_double(s);
    if (!std::isfinite(x))
        throw DomainError("non-finite decimal: " + s);
    const Decimal lit = normalize_literal(s);
    const Decimal bin = exact_decimal(x);
    if (x == 0.0 ? lit.digits == "0" : (lit.digits == bin.digits && lit.exp10 == bin.exp10))
        return Interval(x);
    return Interval(rnd::next_down(x), rnd::next_up(x));
}

} // namespace kawa
