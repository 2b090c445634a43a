#ifndef KAWA_BOUNDS_HPP
#define KAWA_BOUNDS_HPP

#include <optional>

#include <Eigen/Dense>

#include "kawa/fourier.hpp"
#include "kawa/imatrix.hpp"
#include "kawa/kawahara.hpp"

namespace kawa
{

// Finite description of D F L^{-1} = I + v * L^{-1} on one parity, optionally
// bordered by one scalar unknown:
//
//   [ corner   (., row)_2 ]
//   [ col      I + v * L^{-1} ]
//
// row and col live inside the N window. v is even with finite support.
struct LinearSystem
{
    Parity parity = Parity::even;
    int N = 0;
    double d = 1.0;
    Symbol symbol;
    ISeq v; // multiplier of DG(U0) (2 lam3 U0, rescaled as needed)
    bool bordered = false;
    Interval corner;
    ISeq row;
    ISeq col;

    int border() const { return bordered ? 1 : 0; }
    int window_dim() const { return border() + N + 1 - first_index(parity); }
};

// Midpoint matrix of the truncated system on the window.
Eigen::MatrixXd float_system(const LinearSystem& s);
// Float inverse of float_system; throws SingularTruncation.
Eigen::MatrixXd approximate_inverse(const LinearSystem& s);

struct DefectBounds
{
    Interval Z1N, Z1_tail, Z1;
    Interval normB; // max{1, ||pi^N + B||_2}
    Interval Zu1, Zu2, Zu;
    Interval a_decay, C0;
};

// ||I - A D F|| pieces for A = diag(1, L^{-1}) (I + B), with pib the window
// matrix of pi^N + B (a float matrix, the border row/column included).
DefectBounds defect_bounds(const LinearSystem& s, const Eigen::MatrixXd& pib);

// ||[pib (r_scalar, pi^N r); pi_N r]|| in the two-sided weighted norm.
Interval apply_inverse_norm(const LinearSystem& s, const Eigen::MatrixXd& pib, const Interval& r_scalar, const ISeq& r);

// Conjugation by the folded weights, so plain spectral norms are two-sided
// l2 operator norms. Coordinates are the stored indices from first_index, with
// `border` leading scalar coordinates of weight one.
IMatrix to_orthonormal(const IMatrix& m, Parity parity, int border, int row_first = -1, int col_first = -1);

// Upper bound on (v, v * E) where E encloses cosh(2 a x); only indices up to
// the support of v are formed.
Interval cosh_inner(const ISeq& v, const Interval& a);

struct ZuParts
{
    Interval Zu1, Zu2;
};
ZuParts zu_parts(const ISeq& v, const Symbol& l, double d);

struct BoundSet
{
    Interval Y0, Z1N, Z1_tail, Z1, Zu1, Zu2, Zu, Z2_coeff, normB;
    int N = 0, N0 = 0;
    double d = 0.0;
};

LinearSystem soliton_system(const ISeq& u0, const KawaharaParams& p, int N);

Interval bound_Y0(const ISeq& u0, const Eigen::MatrixXd& pib, const KawaharaParams& p, const ISeq& psi, int N);
struct Z1Parts
{
    Interval Z1N, Z1_tail, Z1;
};
Z1Parts bound_Z1(const ISeq& u0, const Eigen::MatrixXd& pib, const KawaharaParams& p, int N);
struct ZuBound
{
    Interval Zu1, Zu2, Zu;
};
ZuBound bound_Zu(const ISeq& u0, const Eigen::MatrixXd& pib, const KawaharaParams& p, double d);
Interval bound_Z2(const KawaharaParams& p, const Eigen::MatrixXd& pib);
// max{1, ||pi^N + B||_2} for B given on even stored coordinates.
Interval norm_B(const Eigen::MatrixXd& B);
Interval norm_pib(const Eigen::MatrixXd& pib, Parity parity, int border = 0);

// All soliton bounds in one pass (shares the defect computation).
BoundSet compute_bounds(const ISeq& u0, const Eigen::MatrixXd& pib, const KawaharaParams& p, int N);

} // namespace kawa

#endif
