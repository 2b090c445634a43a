#include "kawa/fourier.hpp"

#include <cmath>

namespace kawa
{

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parity_from_string(const std::string& s)
{
    if (s == "even")
        return Parity::even;
    if (s == "odd")
        return Parity::odd;
    throw DomainError("unknown parity: " + s);
}

template <class T>
FourierSeq<T>::FourierSeq(double d, Parity parity, std::vector<T> coeffs)
    : d_(d), parity_(parity), c_(std::move(coeffs))
{
    if (!(d > 0))
        throw DomainError("half-width must be positive");
    if (c_.empty())
        c_.push_back(T(0.0));
    if (parity_ == Parity::odd)
        c_[0] = T(0.0);
}

template <class T>
FourierSeq<T> FourierSeq<T>::zeros(double d, Parity parity, int max_index)
{
    return FourierSeq(d, parity, std::vector<T>(static_cast<std::size_t>(max_index) + 1, T(0.0)));
}

template <class T>
T FourierSeq<T>::at(int n) const
{
    const int k = n < 0 ? -n : n;
    if (k > max_index())
        return T(0.0);
    if (n < 0 && parity_ == Parity::odd)
        return -c_[k];
    return c_[k];
}

template class FourierSeq<double>;
template class FourierSeq<Interval>;

ISeq to_interval(const FSeq& u)
{
    std::vector<Interval> c(u.coeffs().begin(), u.coeffs().end());
    return ISeq(u.d(), u.parity(), std::move(c));
}

FSeq mid(const ISeq& u)
{
    std::vector<double> c;
    c.reserve(u.size());
    for (const auto& x : u.coeffs())
        c.push_back(x.mid());
    return FSeq(u.d(), u.parity(), std::move(c));
}

namespace
{

void check_domain(double a, double b)
{
    if (a != b)
        throw DomainMismatch("sequences live on different domains");
}

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Interval& x) { return x.lo() == 0.0 && x.hi() == 0.0; }

// Real two-sided representations multiply with an extra sign when both are odd.
template <class T>
T conv_entry(const FourierSeq<T>& u, const FourierSeq<T>& v, int n)
{
    const double sv = v.parity() == Parity::even ? 1.0 : -1.0;
    T acc = v.parity() == Parity::even ? u.at(n) * v[0] : T(0.0);
    for (int m = 1; m <= v.max_index(); ++m) {
        if (is_zero(v[m]))
            continue;
        const T a = u.at(n - m);
        const T b = u.at(n + m);
        acc += v[m] * (sv > 0 ? a + b : a - b);
    }
    if (u.parity() == Parity::odd && v.parity() == Parity::odd)
        acc = -acc;
    return acc;
}

} // namespace

template <class T>
FourierSeq<T> conv(const FourierSeq<T>& u, const FourierSeq<T>& v)
{
    check_domain(u.d(), v.d());
    const Parity p = u.parity() * v.parity();
    const int nmax = u.max_index() + v.max_index();
    std::vector<T> c(static_cast<std::size_t>(nmax) + 1, T(0.0));
#pragma omp parallel for schedule(dynamic, 8)
    for (int n = first_index(p); n <= nmax; ++n)
        c[n] = conv_entry(u, v, n);
    return FourierSeq<T>(u.d(), p, std::move(c));
}

template <class T>
FourierSeq<T> conv_serial(const FourierSeq<T>& u, const FourierSeq<T>& v)
{
    check_domain(u.d(), v.d());
    const Parity p = u.parity() * v.parity();
    const int nmax = u.max_index() + v.max_index();
    std::vector<T> c(static_cast<std::size_t>(nmax) + 1, T(0.0));
    for (int n = first_index(p); n <= nmax; ++n)
        c[n] = conv_entry(u, v, n);
    return FourierSeq<T>(u.d(), p, std::move(c));
}

template FSeq conv(const FSeq&, const FSeq&);
template ISeq conv(const ISeq&, const ISeq&);
template FSeq conv_serial(const FSeq&, const FSeq&);
template ISeq conv_serial(const ISeq&, const ISeq&);

template <class T>
FourierSeq<T> operator+(const FourierSeq<T>& u, const FourierSeq<T>& v)
{
    check_domain(u.d(), v.d());
    if (u.parity() != v.parity())
        throw DomainMismatch("adding sequences of different parity");
    const int n = std::max(u.max_index(), v.max_index());
    std::vector<T> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[k] = u.at(k) + v.at(k);
    return FourierSeq<T>(u.d(), u.parity(), std::move(c));
}

template <class T>
FourierSeq<T> operator-(const FourierSeq<T>& u, const FourierSeq<T>& v)
{
    check_domain(u.d(), v.d());
    if (u.parity() != v.parity())
        throw DomainMismatch("subtracting sequences of different parity");
    const int n = std::max(u.max_index(), v.max_index());
    std::vector<T> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[k] = u.at(k) - v.at(k);
    return FourierSeq<T>(u.d(), u.parity(), std::move(c));
}

template <class T>
FourierSeq<T> scale(const T& a, const FourierSeq<T>& u)
{
    std::vector<T> c(u.coeffs());
    for (auto& x : c)
        x = a * x;
    return FourierSeq<T>(u.d(), u.parity(), std::move(c));
}

template FSeq operator+(const FSeq&, const FSeq&);
template ISeq operator+(const ISeq&, const ISeq&);
template FSeq operator-(const FSeq&, const FSeq&);
template ISeq operator-(const ISeq&, const ISeq&);
template FSeq scale(const double&, const FSeq&);
template ISeq scale(const Interval&, const ISeq&);

Interval norm_l1(const ISeq& u)
{
    double lo = 0.0, hi = 0.0;
    for (int n = 0; n <= u.max_index(); ++n) {
        const Interval a = abs(u[n]) * Interval(fold_weight(n));
        lo = rnd::add_down(lo, a.lo());
        hi = rnd::add_up(hi, a.hi());
    }
    return Interval::raw(lo, hi);
}

Interval inner(const ISeq& u, const ISeq& v)
{
    check_domain(u.d(), v.d());
    if (u.parity() != v.parity())
        throw DomainMismatch("inner product of sequences of different parity");
    double lo = 0.0, hi = 0.0;
    const int n = std::min(u.max_index(), v.max_index());
    for (int k = 0; k <= n; ++k) {
        const Interval a = u[k] * v[k] * Interval(fold_weight(k));
        lo = rnd::add_down(lo, a.lo());
        hi = rnd::add_up(hi, a.hi());
    }
    return Interval::raw(lo, hi);
}

Interval norm_l2(const ISeq& u)
{
    double lo = 0.0, hi = 0.0;
    for (int n = 0; n <= u.max_index(); ++n) {
        const Interval a = sqr(u[n]) * Interval(fold_weight(n));
        lo = rnd::add_down(lo, a.lo());
        hi = rnd::add_up(hi, a.hi());
    }
    return sqrt(Interval::raw(std::max(lo, 0.0), hi));
}

double norm_l1(const FSeq& u)
{
    double s = 0.0;
    for (int n = 0; n <= u.max_index(); ++n)
        s += fold_weight(n) * std::fabs(u[n]);
    return s;
}

double inner(const FSeq& u, const FSeq& v)
{
    double s = 0.0;
    const int n = std::min(u.max_index(), v.max_index());
    for (int k = 0; k <= n; ++k)
        s += fold_weight(k) * u[k] * v[k];
    return s;
}

double norm_l2(const FSeq& u) { return std::sqrt(inner(u, u)); }

Interval DiagSymbol::at(int n, double d) const { return eval(Interval(n) / Interval(2.0 * d)); }

std::vector<Interval> DiagSymbol::table(int max_index, double d) const
{
    std::vector<Interval> t;
    t.reserve(static_cast<std::size_t>(max_index) + 1);
    for (int n = 0; n <= max_index; ++n)
        t.push_back(at(n, d));
    return t;
}

Interval norm_l(const ISeq& u, const DiagSymbol& l) { return norm_l2(apply_diag(l, u)); }

ISeq apply_diag(const std::vector<Interval>& values, const ISeq& u, bool invert)
{
    if (static_cast<int>(values.size()) <= u.max_index())
        throw DomainMismatch("symbol table shorter than the sequence");
    std::vector<Interval> c(u.coeffs());
    for (int n = first_index(u.parity()); n <= u.max_index(); ++n) {
        if (invert) {
            if (values[n].contains(0.0))
                throw SymbolSingular("symbol value contains zero at index " + std::to_string(n));
            c[n] = c[n] / values[n];
        } else {
            c[n] = c[n] * values[n];
        }
    }
    return ISeq(u.d(), u.parity(), std::move(c));
}

ISeq apply_diag(const DiagSymbol& sym, const ISeq& u, bool invert)
{
    return apply_diag(sym.table(u.max_index(), u.d()), u, invert);
}

template <class T>
FourierSeq<T> project(const FourierSeq<T>& u, int n, Window which)
{
    std::vector<T> c(u.coeffs());
    for (int k = 0; k <= u.max_index(); ++k) {
        const bool in = k <= n;
        if (in != (which == Window::inside))
            c[k] = T(0.0);
    }
    return FourierSeq<T>(u.d(), u.parity(), std::move(c));
}

template <class T>
FourierSeq<T> truncate(const FourierSeq<T>& u, int n)
{
    std::vector<T> c(static_cast<std::size_t>(n) + 1, T(0.0));
    for (int k = 0; k <= std::min(n, u.max_index()); ++k)
        c[k] = u[k];
    return FourierSeq<T>(u.d(), u.parity(), std::move(c));
}

template FSeq project(const FSeq&, int, Window);
template ISeq project(const ISeq&, int, Window);
template FSeq truncate(const FSeq&, int);
template ISeq truncate(const ISeq&, int);

std::vector<double> sample(const FSeq& u, const std::vector<double>& xs)
{
    std::vector<double> out;
    out.reserve(xs.size());
    const double w = M_PI / u.d();
    for (double x : xs) {
        double s = u.parity() == Parity::even ? u[0] : 0.0;
        for (int n = 1; n <= u.max_index(); ++n)
            s += 2.0 * u[n] * (u.parity() == Parity::even ? std::cos(w * n * x) : std::sin(w * n * x));
        out.push_back(s);
    }
    return out;
}

ISeq SeqOperator::apply(const ISeq& u) const
{
    const int f = first_index(u.parity());
    const int dim = N + 1 - f;
    if (block.rows() != dim || block.cols() != dim)
        throw DomainMismatch("operator block does not match its window");
    std::vector<Interval> x(dim);
    for (int k = 0; k < dim; ++k)
        x[k] = u.at(k + f);
    const auto y = kernels::matvec(block, x);
    std::vector<Interval> c(static_cast<std::size_t>(std::max(N, u.max_index())) + 1, Interval(0.0));
    for (int k = 0; k < dim; ++k)
        c[k + f] = y[k];
    for (int n = N + 1; n <= u.max_index(); ++n)
        c[n] = tail.at(n, u.d()) * u[n];
    return ISeq(u.d(), u.parity(), std::move(c));
}

} // namespace kawa
