#include <doctest.h>

#include <cmath>
#include <random>

#include "kawa/interval.hpp"
#include "support/containment.hpp"

using namespace kawa;

TEST_CASE("interval arithmetic examples")
{
    const Interval s = Interval(1.0, 2.0) + Interval(3.0, 4.0);
    CHECK(s.lo() == 4.0);
    CHECK(s.hi() == 6.0);
    const Interval m = Interval(-1.0, 1.0) * Interval(-1.0, 1.0);
    CHECK(m.contains(Interval(-1.0, 1.0)));
    CHECK_THROWS_AS(Interval(1.0) / Interval(0.0, 1.0), DivisionByZeroInterval);
    CHECK_THROWS_AS(Interval(2.0, 1.0), DomainError);
    CHECK_THROWS_AS(Interval(NAN), DomainError);
}

TEST_CASE("elementary function examples")
{
    const Interval e = exp(Interval(0.0));
    CHECK(e.contains(1.0));
    CHECK(e.hi() <= rnd::next_up(rnd::next_up(e.lo())));
    CHECK(cosh(Interval(0.0)).contains(1.0));
    CHECK(sqrt(Interval(4.0, 9.0)).contains(Interval(2.0, 3.0)));
    CHECK(sin(Interval(-10.0, 10.0)).contains(Interval(-1.0, 1.0)));
    CHECK(pow(Interval(-2.0, 1.0), 2).contains(Interval(0.0, 4.0)));
    CHECK(pow(Interval(-2.0, 1.0), 2).lo() == 0.0);
    CHECK(pi().contains(M_PI));
    CHECK(pi().hi() == rnd::next_up(pi().lo()));
    CHECK_THROWS(sqrt(Interval(-1.0, 1.0)));
}

TEST_CASE("directed rounding brackets the exact sum and product")
{
    // 1 + 2^-60 is not representable; the two roundings must straddle it
    const double a = 1.0, b = 0x1p-60;
    CHECK(rnd::add_down(a, b) == 1.0);
    CHECK(rnd::add_up(a, b) == rnd::next_up(1.0));
    const double x = 1.0 + 0x1p-30;
    // x^2 = 1 + 2^-29 + 2^-60
    CHECK(rnd::mul_down(x, x) == 1.0 + 0x1p-29);
    CHECK(rnd::mul_up(x, x) == rnd::next_up(1.0 + 0x1p-29));
    CHECK(rnd::div_down(1.0, 3.0) < rnd::div_up(1.0, 3.0));
    CHECK(rnd::sqrt_down(2.0) < rnd::sqrt_up(2.0));
    CHECK(rnd::add_up(rnd::dmax, rnd::dmax) == rnd::inf);
    CHECK(rnd::add_down(rnd::dmax, rnd::dmax) == rnd::dmax);
}

TEST_CASE("exact operations stay points")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> small(-1000, 1000);
    for (int t = 0; t < 1000; ++t) {
        const double a = small(rng), b = small(rng);
        CHECK((Interval(a) + Interval(b)).is_point());
        CHECK((Interval(a) * Interval(b)).is_point());
    }
}

TEST_CASE("hex and decimal round trips")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int t = 0; t < 200; ++t) {
        double lo = u(rng), hi = u(rng);
        if (lo > hi)
            std::swap(lo, hi);
        const Interval a(lo, hi);
        const Interval b = from_hex(to_hex(a));
        CHECK(b.lo() == a.lo());
        CHECK(b.hi() == a.hi());
        CHECK(std::stod(decimal_down(lo)) <= lo);
        CHECK(std::stod(decimal_up(hi)) >= hi);
    }
    const Interval p = parse_decimal("0.35");
    CHECK(p.contains(0.35));
    CHECK(!p.is_point());
    CHECK(parse_decimal("0.5").is_point());
}

TEST_CASE("randomized containment against MPFR")
{
    for (const auto& op : oracle::containment_ops()) {
        const auto r = oracle::check_containment(op, 10000, 1234);
        INFO("op = " << op);
        CHECK(r.violations == 0);
    }
}
