#include "kawa/contraction.hpp"

#include <cmath>

namespace kawa
{

Interval radii_polynomial(const BoundSet& b, const Interval& r)
{
    return Interval(0.5) * b.Z2_coeff * sqr(r) - (Interval(1.0) - b.Z1 - b.Zu) * r + b.Y0;
}

ProofCertificate check_contraction(const BoundSet& b)
{
    ProofCertificate cert;
    cert.bounds = b;
    const Interval gap = Interval(1.0) - b.Z1 - b.Zu;
    if (!(gap.lo() > 0.0)) {
        cert.reason = "Z1+Zu >= 1";
        return cert;
    }
    cert.inverse_norm_bound = b.normB / gap;

    const Interval disc = sqr(gap) - Interval(2.0) * b.Z2_coeff * b.Y0;
    if (!(disc.lo() > 0.0)) {
        cert.reason = "discriminant not positive";
        return cert;
    }
    const Interval sq = sqrt(disc);
    // smaller root (gap - sq) / Z2 written as 2 Y0 / (gap + sq) to avoid cancellation
    const Interval small = Interval(2.0) * b.Y0 / (gap + sq);
    const Interval large = (gap + sq) / b.Z2_coeff;
    // one ulp first; the interval re-evaluation can need a little more room.
    // A root at zero is moved off the subnormal range, where products lose their sign.
    const double base = std::max(small.hi(), rnd::tiny);
    double r0 = rnd::next_up(base);
    for (double grow : {1e-14, 1e-12, 1e-10, 1e-8}) {
        if (radii_polynomial(b, Interval(r0)).hi() < 0.0)
            break;
        r0 = rnd::mul_up(base, 1.0 + grow);
    }
    if (!(radii_polynomial(b, Interval(r0)).hi() < 0.0)) {
        cert.reason = "polynomial not negative at r0";
        return cert;
    }
    cert.r0 = Interval(r0);
    cert.r_max = Interval(large.lo());
    cert.status = ProofStatus::proven;
    return cert;
}

PeriodicResult check_periodic(const ProofCertificate& cert, const KawaharaParams& p, double d)
{
    PeriodicResult out;
    if (!cert.proven()) {
        out.reason = "soliton proof not closed";
        return out;
    }
    const Symbol l = p.l();
    const Interval kd = kappa_discrete(l, p.lambda3, d);
    const Interval kc = kappa_continuous(l, p.lambda3);
    if (!(p.kappa.lo() >= kd.hi()) || !(p.kappa.lo() >= kc.hi())) {
        out.status = PeriodicStatus::failed;
        out.reason = "kappa discrete condition";
        return out;
    }
    const Interval omega = sqrt(Interval(2.0 * d));
    BoundSet s = cert.bounds;
    s.Y0 = cert.bounds.Y0 / omega;
    s.Z2_coeff = cert.bounds.Z2_coeff * omega;
    const Interval rt = cert.r0 / omega;
    if (!(radii_polynomial(s, rt).hi() < 0.0)) {
        out.status = PeriodicStatus::failed;
        out.reason = "scaled polynomial not negative";
        return out;
    }
    out.status = PeriodicStatus::proven;
    out.r_tilde = Interval(rt.hi());
    return out;
}

} // namespace kawa
