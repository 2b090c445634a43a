#include "kawa/stability.hpp"

#include "kawa/approx.hpp"
#include "kawa/errors.hpp"
#include "kawa/trace.hpp"

namespace kawa
{

Interval bound_C1(const Interval& C, const Interval& kappa, const Interval& r0)
{
    const Interval q = Interval(2.0) * kappa * C * r0;
    if (!(q.hi() < 1.0))
        throw NeumannFails("2 kappa C r0 >= 1");
    return C / (Interval(1.0) - q);
}

Interval bound_C1(const ProofCertificate& soliton)
{
    if (!soliton.proven())
        throw NotVerified("C1 needs a proven soliton");
    return bound_C1(soliton.inverse_norm_bound, soliton.params.kappa, soliton.r0);
}

bool spectral_conditions(const std::vector<EigenCertificate>& eigs, const ExclusionReport& rep, std::string* why)
{
    auto fail = [&](const char* m) {
        if (why)
            *why = m;
        return false;
    };
    if (eigs.size() != 3)
        return fail("three eigencouples required");
    for (const auto& e : eigs)
        if (!e.proven() || !e.simple)
            return fail("eigencouple not proven simple");
    if (!(eigs[0].nu.hi() < 0.0))
        return fail("nu_1 not certified negative");
    if (!eigs[1].nu.contains(0.0))
        return fail("zero not in the nu_2 enclosure");
    if (!(eigs[2].nu.lo() > 0.0))
        return fail("nu_3 not certified positive");
    if (!rep.complete)
        return fail("exclusion sweep incomplete");
    return true;
}

StabilityReport albert_from_candidate(const ISeq& u0, const KawaharaParams& p, const Interval& C, const Interval& r0,
                                      const ISeq& V)
{
    StabilityReport rep;
    rep.V = V;
    rep.C1 = bound_C1(C, p.kappa, r0);
    const Interval sq = sqrt(Interval(2.0 * u0.d()));
    const auto lv = p.l().table(V.max_index(), u0.d());
    const ISeq LV = apply_diag(lv, V);
    const ISeq AV = LV + scale(Interval(2.0) * p.lambda3, conv(u0, V));
    rep.residual = norm_l2(u0 - AV);
    rep.eps = rep.C1 * sq * rep.residual + Interval(2.0) * sq * p.kappa * rep.C1 * r0 * norm_l2(LV);
    const Interval nu0 = norm_l2(u0);
    rep.main_term = Interval(2.0 * u0.d()) * inner(u0, V);
    rep.tau = rep.main_term + rep.eps * sq * nu0 + Interval(2.0) * rep.C1 * (sq * nu0 + r0) * r0;
    return rep;
}

StabilityReport albert_check(const ISeq& u0, const KawaharaParams& p, const ProofCertificate& soliton,
                             const std::vector<EigenCertificate>& eigs, const ExclusionReport& rep, int trace_order)
{
    if (!soliton.proven())
        throw NotVerified("stability needs a proven soliton");
    std::string why;
    const bool spectral = spectral_conditions(eigs, rep, &why);

    const int n0 = u0.max_index();
    const FSeq um = mid(u0);
    const FSeq v0 = solve_linearized(um, p, n0, um);
    const TraceSetup ts = build_trace(n0, trace_order, u0.d(), Parity::even, p.l().table(n0, u0.d()));
    const ISeq V = project_trace_free(to_interval(v0), ts);

    StabilityReport out = albert_from_candidate(u0, p, soliton.inverse_norm_bound, soliton.r0, V);
    out.spectral_ok = spectral;
    if (!spectral)
        out.reason = why;
    else if (!(out.tau.hi() < 0.0))
        out.reason = "tau not certified negative";
    else
        out.verdict = Verdict::stable;
    return out;
}

} // namespace kawa
