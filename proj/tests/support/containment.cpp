#include "containment.hpp"

#include <cmath>
#include <functional>
#include <random>

#include <mpfr.h>

#include "kawa/interval.hpp"

namespace kawa::oracle
{

namespace
{

class Mp
{
public:
    explicit Mp(mpfr_prec_t prec = 2200) { mpfr_init2(v_, prec); }
    ~Mp() { mpfr_clear(v_); }
    Mp(const Mp&) = delete;
    Mp& operator=(const Mp&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

bool inside(mpfr_ptr v, const Interval& r)
{
    return mpfr_cmp_d(v, r.lo()) >= 0 && mpfr_cmp_d(v, r.hi()) <= 0;
}

struct Gen
{
    std::mt19937_64 rng;

    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
    double wide()
    {
        const double m = uniform(1.0, 2.0);
        const int e = std::uniform_int_distribution<int>(-60, 60)(rng);
        return (rng() & 1 ? -1.0 : 1.0) * std::ldexp(m, e);
    }
    Interval around(double x)
    {
        switch (rng() % 3) {
        case 0:
            return Interval(x);
        case 1: {
            const double w = std::fabs(x) * std::ldexp(1.0, -std::uniform_int_distribution<int>(10, 50)(rng));
            return Interval(x - w, x + w);
        }
        default:
            return Interval(std::nextafter(x, -INFINITY), std::nextafter(x, INFINITY));
        }
    }
    double pick(const Interval& a)
    {
        switch (rng() % 3) {
        case 0:
            return a.lo();
        case 1:
            return a.hi();
        default:
            return std::clamp(uniform(a.lo(), a.hi()), a.lo(), a.hi());
        }
    }
};

using Unary = std::function<int(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>;

long unary_trials(Gen& g, long trials, const std::function<Interval(const Interval&)>& f, const Unary& mf,
                  const std::function<double(Gen&)>& draw)
{
    long bad = 0;
    Mp x(256), y(256);
    for (long t = 0; t < trials; ++t) {
        const Interval a = g.around(draw(g));
        const Interval r = f(a);
        const double p = g.pick(a);
        mpfr_set_d(x.get(), p, MPFR_RNDN);
        mf(y.get(), x.get(), MPFR_RNDN);
        if (!inside(y.get(), r))
            ++bad;
    }
    return bad;
}

long binary_trials(Gen& g, long trials, const std::function<Interval(const Interval&, const Interval&)>& f,
                   int (*mf)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t), bool nonzero_b)
{
    long bad = 0;
    Mp x, y, z;
    for (long t = 0; t < trials; ++t) {
        const Interval a = g.around(g.wide());
        Interval b = g.around(g.wide());
        if (nonzero_b && b.contains(0.0))
            b = Interval(1.5);
        const Interval r = f(a, b);
        mpfr_set_d(x.get(), g.pick(a), MPFR_RNDN);
        mpfr_set_d(y.get(), g.pick(b), MPFR_RNDN);
        mf(z.get(), x.get(), y.get(), MPFR_RNDN);
        if (!inside(z.get(), r))
            ++bad;
    }
    return bad;
}

} // namespace

const std::vector<std::string>& containment_ops()
{
    static const std::vector<std::string> ops = {"add", "sub", "mul", "div", "sqr",  "sqrt", "exp",
                                                 "sinh", "cosh", "sin", "cos", "abs", "pow"};
    return ops;
}

ContainmentResult check_containment(const std::string& op, long trials, std::uint64_t seed)
{
    Gen g{std::mt19937_64(seed)};
    ContainmentResult res{op, trials, 0};
    const auto wide = [](Gen& gg) { return gg.wide(); };
    const auto positive = [](Gen& gg) { return std::fabs(gg.wide()); };
    const auto moderate = [](Gen& gg) {
        if (gg.rng() % 2)
            return gg.uniform(-700.0, 700.0);
        return (gg.rng() % 2 ? -1.0 : 1.0) * std::ldexp(gg.uniform(1.0, 2.0), static_cast<int>(gg.rng() % 70) - 60);
    };
    const auto trig = [](Gen& gg) { return gg.rng() % 2 ? gg.uniform(-10.0, 10.0) : gg.uniform(-1e5, 1e5); };

    if (op == "add")
        res.violations = binary_trials(g, trials, [](auto& a, auto& b) { return a + b; }, mpfr_add, false);
    else if (op == "sub")
        res.violations = binary_trials(g, trials, [](auto& a, auto& b) { return a - b; }, mpfr_sub, false);
    else if (op == "mul")
        res.violations = binary_trials(g, trials, [](auto& a, auto& b) { return a * b; }, mpfr_mul, false);
    else if (op == "div")
        res.violations = binary_trials(g, trials, [](auto& a, auto& b) { return a / b; }, mpfr_div, true);
    else if (op == "sqr")
        res.violations = unary_trials(g, trials, [](auto& a) { return sqr(a); }, mpfr_sqr, wide);
    else if (op == "sqrt")
        res.violations = unary_trials(g, trials, [](auto& a) { return sqrt(a); }, mpfr_sqrt, positive);
    else if (op == "exp")
        res.violations = unary_trials(g, trials, [](auto& a) { return exp(a); }, mpfr_exp, moderate);
    else if (op == "sinh")
        res.violations = unary_trials(g, trials, [](auto& a) { return sinh(a); }, mpfr_sinh, moderate);
    else if (op == "cosh")
        res.violations = unary_trials(g, trials, [](auto& a) { return cosh(a); }, mpfr_cosh, moderate);
    else if (op == "sin")
        res.violations = unary_trials(g, trials, [](auto& a) { return sin(a); }, mpfr_sin, trig);
    else if (op == "cos")
        res.violations = unary_trials(g, trials, [](auto& a) { return cos(a); }, mpfr_cos, trig);
    else if (op == "abs")
        res.violations = unary_trials(g, trials, [](auto& a) { return abs(a); }, mpfr_abs, wide);
    else if (op == "pow") {
        Mp x(256), y(256);
        for (long t = 0; t < trials; ++t) {
            const int n = static_cast<int>(g.rng() % 8);
            const Interval a = g.around(g.uniform(-30.0, 30.0));
            const Interval r = pow(a, n);
            mpfr_set_d(x.get(), g.pick(a), MPFR_RNDN);
            mpfr_pow_si(y.get(), x.get(), n, MPFR_RNDN);
            if (!inside(y.get(), r))
                ++res.violations;
        }
    } else {
        res.violations = trials; // unknown op counts as failure
    }
    return res;
}

} // namespace kawa::oracle
