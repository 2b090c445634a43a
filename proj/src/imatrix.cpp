#include "kawa/imatrix.hpp"

#include <cmath>
#include <string>

namespace kawa
{

IMatrix IMatrix::identity(int n)
{
    IMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = Interval(1.0);
    return m;
}

IMatrix IMatrix::from_float(const Eigen::MatrixXd& f)
{
    IMatrix m(static_cast<int>(f.rows()), static_cast<int>(f.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m(i, j) = Interval(f(i, j));
    return m;
}

Eigen::MatrixXd IMatrix::mid() const
{
    Eigen::MatrixXd f(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            f(i, j) = (*this)(i, j).mid();
    return f;
}

IMatrix IMatrix::transpose() const
{
    IMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IMatrix IMatrix::block(int r0, int c0, int nr, int nc) const
{
    IMatrix b(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

IMatrix operator+(const IMatrix& a, const IMatrix& b)
{
    IMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j) + b(i, j);
    return c;
}

IMatrix operator-(const IMatrix& a, const IMatrix& b)
{
    IMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j) - b(i, j);
    return c;
}

namespace kernels
{

namespace
{

void check_dims(int ac, int br)
{
    if (ac != br)
        throw DomainMismatch("matrix product dimension mismatch: " + std::to_string(ac) + " vs " +
                             std::to_string(br));
}

inline void row_times(const Interval* arow, const IMatrix& bt, int k, Interval* out, int ncols)
{
    for (int j = 0; j < ncols; ++j) {
        const Interval* brow = bt.row(j);
        double lo = 0.0, hi = 0.0;
        for (int t = 0; t < k; ++t) {
            const Interval p = arow[t] * brow[t];
            lo = rnd::add_down(lo, p.lo());
            hi = rnd::add_up(hi, p.hi());
        }
        out[j] = Interval::raw(lo, hi);
    }
}

inline void frow_times(const double* arow, const IMatrix& bt, int k, Interval* out, int ncols)
{
    for (int j = 0; j < ncols; ++j) {
        const Interval* brow = bt.row(j);
        double lo = 0.0, hi = 0.0;
        for (int t = 0; t < k; ++t) {
            if (arow[t] == 0.0)
                continue;
            const Interval p = mul(arow[t], brow[t]);
            lo = rnd::add_down(lo, p.lo());
            hi = rnd::add_up(hi, p.hi());
        }
        out[j] = Interval::raw(lo, hi);
    }
}

} // namespace

IMatrix matmul(const IMatrix& a, const IMatrix& b)
{
    check_dims(a.cols(), b.rows());
    const IMatrix bt = b.transpose();
    IMatrix c(a.rows(), b.cols());
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < a.rows(); ++i)
        row_times(a.row(i), bt, a.cols(), &c(i, 0), b.cols());
    return c;
}

IMatrix matmul_serial(const IMatrix& a, const IMatrix& b)
{
    check_dims(a.cols(), b.rows());
    const IMatrix bt = b.transpose();
    IMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        row_times(a.row(i), bt, a.cols(), &c(i, 0), b.cols());
    return c;
}

IMatrix matmul(const Eigen::MatrixXd& a, const IMatrix& b)
{
    check_dims(static_cast<int>(a.cols()), b.rows());
    if (b.cols() == 0 || a.rows() == 0)
        return IMatrix(static_cast<int>(a.rows()), b.cols());
    const IMatrix bt = b.transpose();
    const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> ar = a;
    IMatrix c(static_cast<int>(a.rows()), b.cols());
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < c.rows(); ++i)
        frow_times(ar.data() + static_cast<std::size_t>(i) * ar.cols(), bt, static_cast<int>(a.cols()), &c(i, 0),
                   b.cols());
    return c;
}

IMatrix matmul_serial(const Eigen::MatrixXd& a, const IMatrix& b)
{
    check_dims(static_cast<int>(a.cols()), b.rows());
    if (b.cols() == 0 || a.rows() == 0)
        return IMatrix(static_cast<int>(a.rows()), b.cols());
    const IMatrix bt = b.transpose();
    const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> ar = a;
    IMatrix c(static_cast<int>(a.rows()), b.cols());
    for (int i = 0; i < c.rows(); ++i)
        frow_times(ar.data() + static_cast<std::size_t>(i) * ar.cols(), bt, static_cast<int>(a.cols()), &c(i, 0),
                   b.cols());
    return c;
}

IMatrix matmul(const IMatrix& a, const Eigen::MatrixXd& b) { return matmul(a, IMatrix::from_float(b)); }

std::vector<Interval> matvec(const IMatrix& a, const std::vector<Interval>& x)
{
    check_dims(a.cols(), static_cast<int>(x.size()));
    std::vector<Interval> y(a.rows());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < a.rows(); ++i) {
        const Interval* r = a.row(i);
        double lo = 0.0, hi = 0.0;
        for (int t = 0; t < a.cols(); ++t) {
            const Interval p = r[t] * x[t];
            lo = rnd::add_down(lo, p.lo());
            hi = rnd::add_up(hi, p.hi());
        }
        y[i] = Interval::raw(lo, hi);
    }
    return y;
}

} // namespace kernels

double norm_inf_up(const IMatrix& m)
{
    double best = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols(); ++j)
            s = rnd::add_up(s, m(i, j).mag());
        best = std::max(best, s);
    }
    return best;
}

double norm_one_up(const IMatrix& m)
{
    double best = 0.0;
    for (int j = 0; j < m.cols(); ++j) {
        double s = 0.0;
        for (int i = 0; i < m.rows(); ++i)
            s = rnd::add_up(s, m(i, j).mag());
        best = std::max(best, s);
    }
    return best;
}

double frobenius_up(const IMatrix& m)
{
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const double a = m(i, j).mag();
            s = rnd::add_up(s, rnd::mul_up(a, a));
        }
    return rnd::sqrt_up(s);
}

IMatrix verified_solve(const IMatrix& m, const IMatrix& rhs, const Eigen::MatrixXd& r)
{
    const int n = m.rows();
    if (m.cols() != n || rhs.rows() != n || r.rows() != n || r.cols() != n)
        throw DomainMismatch("verified_solve: dimension mismatch");
    const IMatrix e = IMatrix::identity(n) - kernels::matmul(r, m);
    const double en = norm_inf_up(e);
    if (!(en < 1.0))
        throw NotVerified("verified_solve: ||I - RM||_inf = " + std::to_string(en) + " is not < 1");
    const double denom = rnd::sub_down(1.0, en);

    const Eigen::MatrixXd mm = m.mid();
    const Eigen::MatrixXd bm = rhs.mid();
    Eigen::MatrixXd xt = r * bm;
    xt += r * (bm - mm * xt);

    const IMatrix res = rhs - kernels::matmul(m, xt);
    const IMatrix z = kernels::matmul(r, res);

    std::vector<double> row_mag(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            row_mag[i] = rnd::add_up(row_mag[i], e(i, j).mag());

    IMatrix x(n, rhs.cols());
    for (int c = 0; c < rhs.cols(); ++c) {
        double zn = 0.0;
        for (int i = 0; i < n; ++i)
            zn = std::max(zn, z(i, c).mag());
        const double delta = rnd::div_up(zn, denom);
        for (int i = 0; i < n; ++i) {
            const double spread = rnd::mul_up(row_mag[i], delta);
            x(i, c) = Interval(xt(i, c)) + z(i, c) + Interval(-spread, spread);
        }
    }
    return x;
}

IMatrix verified_solve(const IMatrix& m, const IMatrix& rhs)
{
    const Eigen::MatrixXd mm = m.mid();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(mm);
    if (!lu.isInvertible())
        throw NotVerified("verified_solve: midpoint matrix is numerically singular");
    return verified_solve(m, rhs, lu.inverse());
}

namespace
{

// sqrt applied `times` times to mant * 2^e, rounded up, returned as a double.
double iterated_sqrt_up(double mant, long e, int times)
{
    for (int t = 0; t < times; ++t) {
        if (e % 2 != 0) {
            mant *= 2.0;
            e -= 1;
        }
        mant = rnd::sqrt_up(mant);
        e /= 2;
    }
    const double r = std::ldexp(mant, static_cast<int>(e));
    return r == 0.0 ? std::numeric_limits<double>::denorm_min() : rnd::next_up(r);
}

// Exact unless the result is subnormal, in which case it is moved outward.
Interval scale2(const Interval& x, int f)
{
    double lo = std::ldexp(x.lo(), f), hi = std::ldexp(x.hi(), f);
    if (std::ldexp(lo, -f) != x.lo())
        lo = rnd::next_down(lo);
    if (std::ldexp(hi, -f) != x.hi())
        hi = rnd::next_up(hi);
    return Interval::raw(lo, hi);
}

} // namespace

Interval op_norm2_upper(const IMatrix& m, int squarings)
{
    if (m.rows() == 0 || m.cols() == 0)
        return Interval(0.0);

    double lower = 0.0;
    for (int j = 0; j < m.cols(); ++j) {
        double s = 0.0;
        for (int i = 0; i < m.rows(); ++i) {
            const double a = m(i, j).mig();
            s = rnd::add_down(s, rnd::mul_down(a, a));
        }
        lower = std::max(lower, rnd::sqrt_down(s));
    }

    double upper = std::min(rnd::sqrt_up(rnd::mul_up(norm_one_up(m), norm_inf_up(m))), frobenius_up(m));
    if (upper == 0.0)
        return Interval(0.0);

    if (squarings > 0) {
        // ||M||_2^(2k) = ||G^k||_2 <= ||G^k||_inf for the symmetric G = M^T M,
        // with k = 2^squarings; powers are rescaled by exact powers of two.
        const IMatrix mt = m.transpose();
        IMatrix g = m.rows() <= m.cols() ? kernels::matmul(m, mt) : kernels::matmul(mt, m);
        long e = 0;
        auto rescale = [&](IMatrix& a) {
            const double nrm = norm_inf_up(a);
            if (nrm == 0.0 || !std::isfinite(nrm))
                return;
            int f = 0;
            std::frexp(nrm, &f);
            for (int i = 0; i < a.rows(); ++i)
                for (int j = 0; j < a.cols(); ++j)
                    a(i, j) = scale2(a(i, j), -f);
            e += f;
        };
        rescale(g);
        bool ok = true;
        for (int s = 0; s < squarings && ok; ++s) {
            g = kernels::matmul(g, g);
            e *= 2;
            rescale(g);
            ok = std::isfinite(norm_inf_up(g));
        }
        const double gn = norm_inf_up(g);
        if (ok && gn > 0.0 && std::isfinite(gn))
            upper = std::min(upper, iterated_sqrt_up(gn, e, squarings + 1));
        else if (ok && gn == 0.0)
            upper = std::min(upper, 0.0);
    }
    return Interval(std::min(lower, upper), upper);
}

} // namespace kawa
