#ifndef KAWA_STABILITY_HPP
#define KAWA_STABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "kawa/contraction.hpp"
#include "kawa/eigen.hpp"

namespace kawa
{

enum class Verdict
{
    stable,
    inconclusive
};

struct StabilityReport
{
    Interval C1;
    ISeq V;
    Interval residual;  // ||U0 - (L + DG(U0)) V||_2
    Interval eps;
    Interval main_term; // 2d sum (U0)_n V_n
    Interval tau;
    bool spectral_ok = false; // (P1)-(P3)
    std::string reason;
    Verdict verdict = Verdict::inconclusive;
};

// C / (1 - 2 kappa C r0); throws NeumannFails.
Interval bound_C1(const Interval& C, const Interval& kappa, const Interval& r0);
Interval bound_C1(const ProofCertificate& soliton);

// Checks the spectral conditions: nu_1 < 0 simple, the zero eigenvalue simple,
// and no other eigenvalue below nu_3 (from the sweep).
bool spectral_conditions(const std::vector<EigenCertificate>& eigs, const ExclusionReport& rep, std::string* why);

StabilityReport albert_check(const ISeq& u0, const KawaharaParams& p, const ProofCertificate& soliton,
                             const std::vector<EigenCertificate>& eigs, const ExclusionReport& rep,
                             int trace_order = 4);

// tau and eps from already computed pieces; exposed for sensitivity tests.
StabilityReport albert_from_candidate(const ISeq& u0, const KawaharaParams& p, const Interval& C, const Interval& r0,
                                      const ISeq& V);

} // namespace kawa

#endif
