#ifndef KAWA_APPROX_HPP
#define KAWA_APPROX_HPP

#include <vector>

#include <Eigen/Dense>

#include "kawa/fourier.hpp"
#include "kawa/kawahara.hpp"

namespace kawa
{

// Float-only numerics. Nothing here is rigorous; every output is checked
// a posteriori by the interval stages.

struct NewtonConfig
{
    int N0 = 300;
    double d = 50.0;
    int max_iter = 30;
    double residual_tol = 1e-13;
};

struct NewtonResult
{
    FSeq u;
    std::vector<double> residuals; // two-sided l2 norm of the truncated residual per iterate
    int iterations = 0;
    bool trivial = false; // converged to the zero solution
};

// Fourier coefficients of A sech^2(beta x) on (-d, d) by the periodic trapezoid rule.
FSeq sech_seed_coeffs(const KawaharaParams& p, int N0, double d);

NewtonResult newton_solve(const KawaharaParams& p, const NewtonConfig& cfg);
NewtonResult newton_solve(const KawaharaParams& p, const NewtonConfig& cfg, const FSeq& seed);

// Matrix of w -> v * w on stored coordinates, v even. Rows and columns run
// over first_index(parity)..max_row / ..max_col.
Eigen::MatrixXd mult_matrix(const FSeq& v, Parity parity, int max_row, int max_col);
IMatrix mult_matrix(const ISeq& v, Parity parity, int max_row, int max_col);

// Symbol values on stored indices, midpoint coefficients.
std::vector<double> symbol_values(const Symbol& l, int max_index, double d);

// pi^N (I + DG(U0) L^{-1}) pi^N on the window, as a float matrix.
Eigen::MatrixXd truncated_operator(const FSeq& u0, const KawaharaParams& p, int N, Parity parity = Parity::even);
// B = [pi^N (I + DG(U0) L^{-1}) pi^N]^{-1} - pi^N.
Eigen::MatrixXd build_B(const FSeq& u0, const KawaharaParams& p, int N);

struct ApproxEig
{
    double nu;
    FSeq v; // unit two-sided l2 norm
};

// Lowest eigenpairs of pi^N (L + DG(U0)) pi^N over the requested parities.
std::vector<ApproxEig> approx_eigs(const FSeq& u0, const KawaharaParams& p, int N, int count = 3,
                                   const std::vector<Parity>& parities = {Parity::even, Parity::odd});

// Float solve of (L + DG(U0)) v = rhs on the N window (used for the stability test function).
FSeq solve_linearized(const FSeq& u0, const KawaharaParams& p, int N, const FSeq& rhs);

// Diagonal weights sqrt(fold_weight) that make the folded operators symmetric.
Eigen::VectorXd fold_sqrt_weights(Parity parity, int max_index);

} // namespace kawa

#endif
