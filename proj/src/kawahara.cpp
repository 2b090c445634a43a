#include "kawa/kawahara.hpp"

#include <cmath>

#include "kawa/errors.hpp"

namespace kawa
{

Interval Symbol::at_w(const Interval& w) const
{
    const Interval w2 = sqr(w);
    return Interval(1.0) + w2 * (lam1 + lam2 * w2);
}

Interval Symbol::at(int n, double d) const { return at_w(pi() * Interval(n) / Interval(d)); }

std::vector<Interval> Symbol::table(int max_index, double d) const
{
    std::vector<Interval> t;
    t.reserve(static_cast<std::size_t>(max_index) + 1);
    for (int n = 0; n <= max_index; ++n)
        t.push_back(at(n, d));
    return t;
}

DiagSymbol Symbol::diag() const
{
    const Symbol s = *this;
    return DiagSymbol{"l", [s](const Interval& xi) { return s.at_w(Interval(2.0) * pi() * xi); }};
}

Symbol Symbol::shifted(const Interval& nu) const
{
    const Interval den = Interval(1.0) - nu;
    if (!(den.lo() > 0.0))
        throw NuOutOfRange("shifted symbol needs 1 - nu > 0");
    return {lam1 / den, lam2 / den};
}

bool Symbol::certified_at_least_one() const { return lam1.lo() >= 0.0 && lam2.lo() > 0.0; }

Interval Symbol::tail_inv(int N, double d) const
{
    if (!(lam2.lo() > 0.0))
        throw NotVerified("symbol tail needs a positive quartic coefficient");
    const Interval w = pi() * Interval(N + 1) / Interval(d);
    if (lam1.lo() < 0.0) {
        // l'(w) = 2 w (lam1 + 2 lam2 w^2) > 0 once w^2 > -lam1 / (2 lam2)
        const Interval stationary = -lam1 / (Interval(2.0) * lam2);
        if (!(sqr(w).lo() > stationary.hi()))
            throw NotVerified("tail index does not clear the stationary point of l");
    }
    const Interval l = at_w(w);
    if (!(l.lo() > 0.0))
        throw SymbolSingular("symbol not positive at the tail index");
    return Interval(1.0) / l;
}

KernelConstants kernel_constants(const Symbol& l)
{
    const Interval disc = Interval(4.0) * l.lam2 - sqr(l.lam1);
    if (!(disc.lo() > 0.0) || !(l.lam2.lo() > 0.0))
        throw ParamsOutOfRange("symbol roots are not a complex quadruple");
    const Interval w1 = -l.lam1 / (Interval(2.0) * l.lam2);
    const Interval w2 = sqrt(disc) / (Interval(4.0) * l.lam2);
    const Interval a = sqrt((sqrt(sqr(w1) + Interval(4.0) * sqr(w2)) - w1) / Interval(2.0));
    const Interval b = w2 / a;
    const Interval C0 = (a + b) / (Interval(4.0) * l.lam2 * a * b * (sqr(a) + sqr(b)));
    return {a, b, C0};
}

Interval kernel_f0(const KernelConstants& k, const Interval& lam2, const Interval& x)
{
    const Interval ax = abs(x);
    const Interval num = k.a * sin(k.b * ax) + k.b * cos(k.b * x);
    return exp(-k.a * ax) * num / (Interval(4.0) * lam2 * k.a * k.b * (sqr(k.a) + sqr(k.b)));
}

Interval kappa_continuous(const Symbol& l, const Interval& lam3)
{
    if (!l.certified_at_least_one())
        throw NotVerified("continuous kappa bound needs lam1 >= 0");
    const Interval q = sqrt(sqrt(l.lam2));
    return lam3 * sqrt(Interval(3.0) / (Interval(8.0) * sqrt(Interval(2.0)) * q));
}

Interval sum_inv_l_squared(const Symbol& l, double d)
{
    if (!l.certified_at_least_one())
        throw NotVerified("lattice sum bound needs lam1 >= 0");
    const int M = 10000;
    double lo = 0.0, hi = 0.0;
    for (int n = M; n >= 1; --n) {
        const Interval t = Interval(1.0) / sqr(l.at(n, d));
        lo = rnd::add_down(lo, t.lo());
        hi = rnd::add_up(hi, t.hi());
    }
    // sum_{n > M} l(n)^-2 <= (d/pi)^8 / (7 lam2^2 M^7), both signs of n
    const Interval dp = Interval(d) / pi();
    const Interval tail = Interval(2.0) * pow(dp, 8) / (Interval(7.0) * sqr(l.lam2) * pow(Interval(M), 7));
    return Interval(1.0) + Interval(2.0) * Interval::raw(lo, hi) + Interval(0.0, tail.hi());
}

Interval kappa_discrete(const Symbol& l, const Interval& lam3, double d)
{
    return lam3 * sqrt(sum_inv_l_squared(l, d) / Interval(2.0 * d));
}

KawaharaParams make_params(const Interval& T, const Interval& c)
{
    KawaharaParams p;
    p.T = T;
    p.c = c;
    const Interval third = Interval(1.0) / Interval(3.0);
    const Interval t_max = (Interval(-10.0) + sqrt(Interval(480.0))) / Interval(30.0);
    if (!(T.lo() > third.hi()) || !(T.hi() <= t_max.lo()))
        throw ParamsOutOfRange("T outside (1/3, (-10+sqrt 480)/30]");
    p.aT = (Interval(1.0) - Interval(3.0) * T) / Interval(6.0);
    p.bT = (Interval(19.0) - Interval(30.0) * T - Interval(45.0) * sqr(T)) / Interval(360.0);
    if (!(p.bT.lo() > 0.0))
        throw ParamsOutOfRange("b(T) not certified positive");
    const Interval c_max = Interval(1.0) - sqr(p.aT) / (Interval(4.0) * p.bT);
    if (!(c.hi() <= c_max.lo()))
        throw ParamsOutOfRange("c exceeds 1 - a(T)^2 / (4 b(T))");
    const Interval one_minus_c = Interval(1.0) - c;
    if (!(one_minus_c.lo() > 0.0))
        throw ParamsOutOfRange("c must be below 1");

    p.lambda1 = -p.aT / one_minus_c;
    p.lambda2 = p.bT / one_minus_c;
    p.lambda3 = Interval(3.0) / (Interval(4.0) * one_minus_c);
    if (!(p.lambda1.lo() > 0.0 && p.lambda2.lo() > 0.0 && p.lambda3.lo() > 0.0))
        throw ParamsOutOfRange("lambda coefficients not certified positive");

    const KernelConstants k = kernel_constants(p.l());
    p.a_decay = k.a;
    p.b_osc = k.b;
    p.C0 = k.C0;
    p.kappa = kappa_continuous(p.l(), p.lambda3);
    return p;
}

KawaharaParams make_params(const Interval& T, const Interval& c, double d)
{
    KawaharaParams p = make_params(T, c);
    p.d = d;
    p.kappa = max(p.kappa, kappa_discrete(p.l(), p.lambda3, d));
    // a single number that dominates both conditions
    p.kappa = Interval(p.kappa.hi());
    return p;
}

ISeq residual_F(const ISeq& u, const KawaharaParams& p, const ISeq& psi)
{
    const ISeq lu = apply_diag(p.l().table(u.max_index(), u.d()), u);
    const ISeq quad = scale(p.lambda3, conv(u, u));
    return lu + quad - psi;
}

FSeq residual_F(const FSeq& u, const KawaharaParams& p, const FSeq& psi)
{
    const double l1 = p.lambda1.mid(), l2 = p.lambda2.mid(), l3 = p.lambda3.mid();
    std::vector<double> c(u.coeffs());
    for (int n = 0; n <= u.max_index(); ++n) {
        const double w2 = std::pow(M_PI * n / u.d(), 2);
        c[n] *= 1.0 + w2 * (l1 + l2 * w2);
    }
    const FSeq lu(u.d(), u.parity(), std::move(c));
    return lu + scale(l3, conv(u, u)) - psi;
}

ISeq cosh_weight_series(const Interval& a, double d, int n_needed)
{
    if (!(a.lo() > 0.0))
        throw DomainError("cosh weight needs a > 0");
    const Interval dd(d);
    const Interval num = Interval(2.0) * a * sinh(Interval(2.0) * a * dd) / dd;
    std::vector<Interval> c;
    c.reserve(static_cast<std::size_t>(n_needed) + 1);
    for (int n = 0; n <= n_needed; ++n) {
        const Interval w = pi() * Interval(n) / dd;
        Interval e = num / (Interval(4.0) * sqr(a) + sqr(w));
        c.push_back(n % 2 == 0 ? e : -e);
    }
    return ISeq(d, Parity::even, std::move(c));
}

Interval geometry_Cd(const Interval& a, double d)
{
    const Interval ad = a * Interval(d);
    if (!(ad.lo() > 0.0))
        throw DomainError("geometry constant needs a d > 0");
    const Interval t2 = Interval(4.0) * exp(-ad) / (a * (Interval(1.0) - exp(Interval(-1.5) * ad)));
    const Interval t3 = Interval(2.0) / (a * (Interval(1.0) - exp(Interval(-2.0) * ad)));
    return Interval(4.0 * d) + t2 + t3;
}

namespace
{

// int_{-d}^{d} e^{-a|y-x|} e^{-a|y-z-2dn|} dy
Interval overlap_d(const Interval& a, double d, int n, const Interval& x, const Interval& z)
{
    const Interval dd(d);
    const Interval half = Interval(1.0) / (Interval(2.0) * a);
    if (n == 0) {
        const Interval s = abs(z - x);
        return (s + Interval(1.0) / a) * exp(-a * s) - exp(Interval(-2.0) * a * dd) * half * (exp(-a * (x + z)) + exp(a * (x + z)));
    }
    const int sg = n > 0 ? 1 : -1;
    const Interval shift = Interval(2.0) * dd * Interval(n);
    const Interval first = (dd - Interval(sg) * x + half) * exp(-a * abs(shift + z - x));
    const Interval second = exp(-a * abs(Interval(2.0) * dd * Interval(n + sg) + z + x)) * half;
    return first - second;
}

} // namespace

Interval appendix_integral(const Interval& a, double d, int n, const Interval& x, const Interval& z, Overlap which)
{
    if (!(a.lo() > 0.0) || !(d > 0.0))
        throw DomainError("overlap integrals need a, d > 0");
    switch (which) {
    case Overlap::exponential_d:
        return overlap_d(a, d, n, x, z);
    case Overlap::exponential_dn:
        return overlap_d(a, d, n, -z, -x);
    case Overlap::exponential_inf: {
        const Interval s = abs(x - (z + Interval(2.0 * d) * Interval(n)));
        return (s + Interval(1.0) / a) * exp(-a * s);
    }
    }
    throw DomainError("unknown overlap integral");
}

SechSeed sech_seed(const KawaharaParams& p)
{
    return {-1.5 / p.lambda3.mid(), 0.5 / std::sqrt(p.lambda1.mid())};
}

} // namespace kawa
