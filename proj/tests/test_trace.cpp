#include <doctest.h>

#include <random>

#include "kawa/kawahara.hpp"
#include "kawa/trace.hpp"

using namespace kawa;

namespace
{

const KawaharaParams& params()
{
    static const KawaharaParams p = make_params(parse_decimal("0.35"), parse_decimal("0.9"));
    return p;
}

bool all_contain_zero(const std::vector<Interval>& g)
{
    for (const auto& x : g)
        if (!x.contains(0.0))
            return false;
    return true;
}

ISeq random_iseq(std::mt19937_64& rng, double d, Parity par, int N)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Interval> c(static_cast<std::size_t>(N) + 1, Interval(0.0));
    for (int n = first_index(par); n <= N; ++n)
        c[n] = Interval(u(rng) / (1.0 + n));
    return ISeq(d, par, std::move(c));
}

} // namespace

TEST_CASE("retained trace orders")
{
    const double d = 10.0;
    const auto lv = params().l().table(30, d);
    const TraceSetup e = build_trace(30, 4, d, Parity::even, lv);
    CHECK(e.orders == std::vector<int>{0, 2});
    CHECK(e.dropped == std::vector<int>{1, 3});
    const TraceSetup o = build_trace(30, 4, d, Parity::odd, lv);
    CHECK(o.orders == std::vector<int>{1, 3});

    const TraceSetup k1 = build_trace(30, 1, d, Parity::even, lv);
    const ISeq d0(d, Parity::even, {Interval(1.0)});
    const auto g = apply_trace(k1, d0);
    REQUIRE(g.size() == 1);
    CHECK(g[0].contains(1.0));
    CHECK_THROWS_AS(build_trace(1, 4, d, Parity::even, lv), WindowTooSmall);
}

TEST_CASE("trace-free trigonometric polynomials are fixed")
{
    const double d = 10.0;
    const int N = 30;
    const auto lv = params().l().table(N, d);
    // (1 + cos(pi x / d))^2 and sin(pi x / d) (1 + cos(pi x / d))^2 vanish to order 4 at x = d
    const ISeq ue(d, Parity::even, {Interval(1.5), Interval(1.0), Interval(0.25)});
    const ISeq uo(d, Parity::odd, {Interval(0.0), Interval(0.625), Interval(0.5), Interval(0.125)});
    for (const ISeq& u : {ue, uo}) {
        const TraceSetup s = build_trace(N, 4, d, u.parity(), lv);
        CHECK(all_contain_zero(apply_trace(s, u)));
        const ISeq p = project_trace_free(u, s);
        for (int n = 0; n <= N; ++n)
            CHECK(p.at(n).contains(u.at(n)));
    }
}

TEST_CASE("projection of the constant")
{
    const double d = 10.0;
    const int N = 40;
    const TraceSetup s = build_trace(N, 4, d, Parity::even, params().l().table(N, d));
    const ISeq d0(d, Parity::even, {Interval(1.0)});
    const ISeq p = project_trace_free(d0, s);
    CHECK(!p[0].contains(1.0));
    CHECK(all_contain_zero(apply_trace(s, p)));
}

TEST_CASE("projection outputs are trace-free and stable under reapplication")
{
    std::mt19937_64 rng(8);
    const double d = 20.0;
    const int N = 60;
    const auto lv = params().l().table(N, d);
    for (Parity par : {Parity::even, Parity::odd}) {
        const TraceSetup s = build_trace(N, 4, d, par, lv);
        for (int t = 0; t < 20; ++t) {
            const ISeq u = random_iseq(rng, d, par, N);
            const ISeq p = project_trace_free(u, s);
            CHECK(all_contain_zero(apply_trace(s, p)));
            const ISeq pp = project_trace_free(p, s);
            for (int n = 0; n <= N; ++n)
                CHECK(pp[n].contains(p[n]));
        }
    }
}

TEST_CASE("projection domain checks")
{
    const double d = 10.0;
    const TraceSetup s = build_trace(20, 4, d, Parity::even, params().l().table(20, d));
    CHECK_THROWS_AS(project_trace_free(ISeq::zeros(d, Parity::odd, 5), s), DomainMismatch);
    CHECK_THROWS_AS(project_trace_free(ISeq::zeros(d, Parity::even, 25), s), DomainMismatch);
}
