#ifndef KAWA_KAWAHARA_HPP
#define KAWA_KAWAHARA_HPP

#include <vector>

#include "kawa/fourier.hpp"
#include "kawa/interval.hpp"

namespace kawa
{

// l(xi) = 1 + lam1 (2 pi xi)^2 + lam2 (2 pi xi)^4. Shifted symbols
// (l - nu) / (1 - nu) keep this form with both coefficients divided by 1 - nu.
struct Symbol
{
    Interval lam1;
    Interval lam2;

    // Value at w = 2 pi xi.
    Interval at_w(const Interval& w) const;
    Interval at(int n, double d) const;
    std::vector<Interval> table(int max_index, double d) const;
    DiagSymbol diag() const;
    Symbol shifted(const Interval& nu) const;
    // Certified inf over xi of l; throws unless lam1, lam2 make l >= 1 everywhere.
    bool certified_at_least_one() const;
    // max_{|n| > N} 1/l(n/2d), after certifying l increases beyond (N+1)/2d.
    Interval tail_inv(int N, double d) const;
};

struct KernelConstants
{
    Interval a; // decay rate of the inverse transform of 1/l
    Interval b; // oscillation frequency
    Interval C0;
};

KernelConstants kernel_constants(const Symbol& l);
// Inverse Fourier transform of 1/l, closed form.
Interval kernel_f0(const KernelConstants& k, const Interval& lam2, const Interval& x);

struct KawaharaParams
{
    Interval T, c;
    Interval aT, bT;
    Interval lambda1, lambda2, lambda3;
    Interval a_decay, b_osc, C0;
    Interval kappa;
    double d = 0.0; // attached domain half-width, 0 when none

    Symbol l() const { return {lambda1, lambda2}; }
};

KawaharaParams make_params(const Interval& T, const Interval& c);
KawaharaParams make_params(const Interval& T, const Interval& c, double d);

// lam3 ||1/l||_2 bound and its periodic-lattice analogue.
Interval kappa_continuous(const Symbol& l, const Interval& lam3);
Interval sum_inv_l_squared(const Symbol& l, double d);
Interval kappa_discrete(const Symbol& l, const Interval& lam3, double d);

// L U + lam3 U*U - psi.
ISeq residual_F(const ISeq& u, const KawaharaParams& p, const ISeq& psi);
FSeq residual_F(const FSeq& u, const KawaharaParams& p, const FSeq& psi);

// Fourier coefficients of cosh(2 a x) on (-d, d), indices 0..n_needed.
ISeq cosh_weight_series(const Interval& a, double d, int n_needed);
Interval geometry_Cd(const Interval& a, double d);

enum class Overlap
{
    exponential_d,
    exponential_dn,
    exponential_inf
};

// Overlap integrals of two exponential kernels; the test oracle for geometry_Cd.
Interval appendix_integral(const Interval& a, double d, int n, const Interval& x, const Interval& z, Overlap which);

// (A, beta) of A sech^2(beta x), the soliton of u + lam3 u^2 - lam1 u'' = 0.
struct SechSeed
{
    double amplitude;
    double beta;
};
SechSeed sech_seed(const KawaharaParams& p);

} // namespace kawa

#endif
