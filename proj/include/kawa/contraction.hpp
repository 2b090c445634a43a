#ifndef KAWA_CONTRACTION_HPP
#define KAWA_CONTRACTION_HPP

#include <map>
#include <string>

#include "kawa/bounds.hpp"
#include "kawa/kawahara.hpp"

namespace kawa
{

enum class ProofStatus
{
    proven,
    failed
};

enum class PeriodicStatus
{
    proven,
    not_checked,
    failed
};

struct PeriodicResult
{
    PeriodicStatus status = PeriodicStatus::not_checked;
    Interval r_tilde;
    std::string reason;
};

struct ProofCertificate
{
    KawaharaParams params;
    BoundSet bounds;
    Interval r0, r_max;
    Interval inverse_norm_bound;
    ProofStatus status = ProofStatus::failed;
    std::string reason;
    PeriodicResult periodic;
    std::map<std::string, std::string> input_hashes;

    bool proven() const { return status == ProofStatus::proven; }
};

// 1/2 Z2 r^2 - (1 - Z1 - Zu) r + Y0.
Interval radii_polynomial(const BoundSet& b, const Interval& r);

ProofCertificate check_contraction(const BoundSet& b);
PeriodicResult check_periodic(const ProofCertificate& cert, const KawaharaParams& p, double d);

} // namespace kawa

#endif
