#ifndef KAWA_PIPELINE_HPP
#define KAWA_PIPELINE_HPP

#include <string>
#include <vector>

#include "kawa/approx.hpp"
#include "kawa/contraction.hpp"
#include "kawa/eigen.hpp"
#include "kawa/stability.hpp"

namespace kawa
{

struct RunConfig
{
    std::string T = "0.35";
    std::string c = "0.9";
    double d = 50.0;
    int N = 120;
    int N0 = 300;
    int k_trace = 4;
    int N_eig = 240;
    int newton_max_iter = 30;
    double newton_tol = 1e-13;
    SweepConfig sweep;
    std::string out_dir = "out";
    std::string stage_dir = "out/stages";

    void validate() const; // throws ConfigError
};

RunConfig load_config(const std::string& path);
RunConfig config_from_text(const std::string& text);
// Output locations are left out unless asked for; they do not affect any result.
std::string config_to_text(const RunConfig& cfg, bool with_output = false);

KawaharaParams params_of(const RunConfig& cfg);

struct ProveStage
{
    KawaharaParams p;
    ISeq u0;
    ProofCertificate cert;
};

NewtonResult run_approx(const RunConfig& cfg);
// Trace-projects the Newton output and runs the soliton proof plus the periodic corollary.
ProveStage run_prove(const RunConfig& cfg, const FSeq& u_tilde);
std::vector<EigenCertificate> run_eigs(const RunConfig& cfg, const ProveStage& ps);
ExclusionReport run_exclude(const RunConfig& cfg, const ProveStage& ps, const std::vector<EigenCertificate>& eigs);
StabilityReport run_stability(const RunConfig& cfg, const ProveStage& ps, const std::vector<EigenCertificate>& eigs,
                              const ExclusionReport& rep);

struct ZuDecayRow
{
    double d;
    Interval Zu1;
};

// Zu1 at each d for the profile u0 held fixed and zero-extended; u0 must live on
// a half-width no larger than every entry of ds.
std::vector<ZuDecayRow> zu_decay_table(const ISeq& u0, const KawaharaParams& p, const std::vector<double>& ds);
// Zu1 against d for the trace-projected profile computed on the smallest box of
// ds (N0 scaled with the box), then held fixed.
std::vector<ZuDecayRow> zu_decay_study(const RunConfig& cfg, const std::vector<double>& ds);
// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace kawa

#endif
