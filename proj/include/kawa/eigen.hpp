#ifndef KAWA_EIGEN_HPP
#define KAWA_EIGEN_HPP

#include <string>
#include <vector>

#include "kawa/approx.hpp"
#include "kawa/bounds.hpp"
#include "kawa/contraction.hpp"

namespace kawa
{

// Eigencouple problem for L + DG(u~) on one parity, in the coordinates
// W = sqrt(2d) V where sequence norms equal function norms, with the shifted
// weight l_k = (l - nu_k) / (1 - nu_k).
struct EigenProblem
{
    int k = 0;
    Parity parity = Parity::even;
    double nu_approx = 0.0;
    Interval one_minus_nu; // 1 - nu_k
    Symbol symbol;         // l_k
    Interval lam3_k;       // lam3 / (1 - nu_k)
    Interval kappa_k;      // kappa / (1 - nu_k)
    ISeq W0;               // ||W0||_{l_k} = 1 up to rounding
    ISeq phi;              // L_k W0
    Interval eta;          // (W0, W0)_{l_k}
    ISeq u0;
    Interval r0;
    int N = 0;
};

EigenProblem build_augmented(int k, const ApproxEig& approx, const ISeq& u0, const KawaharaParams& p,
                             const ProofCertificate& soliton, int N, int trace_order = 4);

// Bordered system of D F-bar(x0) L-bar^{-1}.
LinearSystem eigen_system(const EigenProblem& ep);
// Symmetric bordered operator used to isolate nu_k (row and column swapped).
LinearSystem isolation_system(const EigenProblem& ep);

struct EigenBounds
{
    Interval Y0, Z1N, Z1_tail, Zu, passage, Z1, Z2, normB;
    BoundSet as_bound_set() const;
};

EigenBounds eigen_bounds(const EigenProblem& ep, const Eigen::MatrixXd& pib);
// First component of F-bar at (nu_k, W0) minus eta; contains zero.
Interval augmented_first_residual(const EigenProblem& ep);

struct EigenCertificate
{
    int k = 0;
    Parity parity = Parity::even;
    double nu_approx = 0.0;
    Interval nu;     // nu_k +- R
    Interval radius; // R
    Interval isolation; // rho: nu is the only eigenvalue of this parity within nu_k +- rho
    bool simple = false;
    EigenBounds bounds;
    ProofStatus status = ProofStatus::failed;
    std::string reason;

    bool proven() const { return status == ProofStatus::proven; }
};

EigenCertificate prove_eigencouple(const EigenProblem& ep, double slack = 0.9);

struct SweepConfig
{
    int N_sweep = 80;
    double slack = 0.9;
    int max_steps = 10000;
    double min_step = 1e-10;
};

struct SweepStep
{
    Interval nu_star;
    Interval C;
    Interval covered;
};

struct GapReport
{
    Parity parity = Parity::even;
    std::string label;
    double from = 0.0, to = 0.0;
    std::vector<SweepStep> steps;
    bool complete = false;
};

struct ExclusionReport
{
    Interval threshold; // no eigenvalue at or below this value
    std::vector<GapReport> gaps;
    int total_steps = 0;
    bool complete = false;
};

// Certified resolvent bound at one nu* together with the covered interval.
SweepStep sweep_step(const ISeq& u0, const KawaharaParams& p, const Interval& r0, Parity parity, double nu_star,
                     const SweepConfig& cfg);
// Largest value below which ||DG(u~)||_2 < 1 - nu rules out eigenvalues.
Interval left_threshold(const ISeq& u0, const KawaharaParams& p, const Interval& r0);
// Covers [from, to] left to right; throws SweepStalled.
GapReport sweep_gap(const ISeq& u0, const KawaharaParams& p, const Interval& r0, Parity parity, double from, double to,
                    const SweepConfig& cfg);

// eigs must hold the proven couples 1..3 in order (nu_2 odd, nu_1 and nu_3 even).
ExclusionReport exclusion_sweep(const ISeq& u0, const KawaharaParams& p, const ProofCertificate& soliton,
                                const std::vector<EigenCertificate>& eigs, const SweepConfig& cfg = {});

} // namespace kawa

#endif
