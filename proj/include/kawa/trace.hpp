#ifndef KAWA_TRACE_HPP
#define KAWA_TRACE_HPP

#include <vector>

#include "kawa/fourier.hpp"
#include "kawa/imatrix.hpp"

namespace kawa
{

// Boundary traces of derivatives 0..k-1 at x = d, as linear functionals on the
// stored coefficients 0..N (or 1..N for odd sequences). Row j evaluates
// sum_p u_p (pi p / d)^j (-1)^p over the full two-sided window up to a
// constant factor; rows that vanish identically for the parity are dropped.
struct TraceSetup
{
    int N = 0;
    int k = 0;
    double d = 1.0;
    Parity parity = Parity::even;
    std::vector<int> orders;  // retained derivative orders j
    std::vector<int> dropped; // orders that vanish for this parity
    IMatrix gamma;            // rows: retained orders, scaled; cols: stored indices
    IMatrix m;                // adjoint of gamma in the two-sided inner product
    std::vector<Interval> dinv_diag; // the weight D = diag(1/l)
    std::vector<double> row_scale;   // row j was divided by this
    IMatrix gram;                    // gamma D m
    Eigen::MatrixXd gram_inverse;    // float approximate inverse of gram
};

TraceSetup build_trace(int N, int k, double d, Parity parity, const std::vector<Interval>& l_values);

// Gamma applied to u, in the scaled rows of the setup.
std::vector<Interval> apply_trace(const TraceSetup& s, const ISeq& u);

ISeq project_trace_free(const ISeq& u, const TraceSetup& s);

} // namespace kawa

#endif
