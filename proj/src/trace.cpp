#include "kawa/trace.hpp"

#include <cmath>

namespace kawa
{

TraceSetup build_trace(int N, int k, double d, Parity parity, const std::vector<Interval>& l_values)
{
    if (2 * N + 1 <= k)
        throw WindowTooSmall("trace window needs 2N+1 > k");
    if (static_cast<int>(l_values.size()) <= N)
        throw DomainMismatch("symbol table shorter than the trace window");

    TraceSetup s;
    s.N = N;
    s.k = k;
    s.d = d;
    s.parity = parity;
    const int want = parity == Parity::even ? 0 : 1;
    for (int j = 0; j < k; ++j)
        (j % 2 == want ? s.orders : s.dropped).push_back(j);

    const int f = first_index(parity);
    const int cols = N + 1 - f;
    const int r = static_cast<int>(s.orders.size());
    s.gamma = IMatrix(r, cols);
    s.m = IMatrix(cols, r);
    for (int row = 0; row < r; ++row) {
        const int j = s.orders[row];
        const double scale = j == 0 ? 1.0 : std::pow(M_PI * N / d, j);
        s.row_scale.push_back(scale);
        for (int c = 0; c < cols; ++c) {
            const int p = c + f;
            const Interval w = pi() * Interval(p) / Interval(d);
            Interval g = pow(w, j) / Interval(scale);
            if (p % 2 == 1)
                g = -g;
            s.m(c, row) = g;
            s.gamma(row, c) = g * Interval(fold_weight(p));
        }
    }
    s.dinv_diag.resize(cols);
    for (int c = 0; c < cols; ++c)
        s.dinv_diag[c] = Interval(1.0) / l_values[c + f];

    IMatrix dm(cols, r);
    for (int c = 0; c < cols; ++c)
        for (int row = 0; row < r; ++row)
            dm(c, row) = s.dinv_diag[c] * s.m(c, row);
    s.gram = kernels::matmul(s.gamma, dm);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(s.gram.mid());
    if (!lu.isInvertible())
        throw NotVerified("trace Gram matrix is numerically singular");
    s.gram_inverse = lu.inverse();
    return s;
}

std::vector<Interval> apply_trace(const TraceSetup& s, const ISeq& u)
{
    const int f = first_index(s.parity);
    std::vector<Interval> x(s.N + 1 - f);
    for (int c = 0; c < static_cast<int>(x.size()); ++c)
        x[c] = u.at(c + f);
    return kernels::matvec(s.gamma, x);
}

ISeq project_trace_free(const ISeq& u, const TraceSetup& s)
{
    if (u.parity() != s.parity || u.d() != s.d)
        throw DomainMismatch("sequence does not match the trace setup");
    if (u.max_index() > s.N)
        throw DomainMismatch("trace projection needs the sequence inside its window");
    const auto g = apply_trace(s, u);
    IMatrix rhs(static_cast<int>(g.size()), 1);
    for (int i = 0; i < rhs.rows(); ++i)
        rhs(i, 0) = g[i];
    const IMatrix y = verified_solve(s.gram, rhs, s.gram_inverse);

    const int f = first_index(s.parity);
    std::vector<Interval> c(static_cast<std::size_t>(s.N) + 1, Interval(0.0));
    for (int col = 0; col < s.m.rows(); ++col) {
        Interval corr(0.0);
        for (int row = 0; row < s.m.cols(); ++row)
            corr += s.m(col, row) * y(row, 0);
        c[col + f] = u.at(col + f) - s.dinv_diag[col] * corr;
    }
    return ISeq(u.d(), u.parity(), std::move(c));
}

} // namespace kawa
