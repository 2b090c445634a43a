#include <doctest.h>

#include <random>

#include <gmpxx.h>

#include "kawa/imatrix.hpp"

using namespace kawa;

namespace
{

IMatrix random_box(int r, int c, std::mt19937_64& rng, double width)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    IMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            const double x = u(rng);
            m(i, j) = Interval(x - width, x + width);
        }
    return m;
}

bool same_bits(const IMatrix& a, const IMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j).lo() != b(i, j).lo() || a(i, j).hi() != b(i, j).hi())
                return false;
    return true;
}

// Gaussian elimination in exact rationals.
std::vector<mpq_class> rational_solve(const Eigen::MatrixXd& m, const Eigen::VectorXd& b)
{
    const int n = static_cast<int>(m.rows());
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            a[i][j] = m(i, j);
        a[i][n] = b[i];
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (a[p][c] == 0)
            ++p;
        std::swap(a[p], a[c]);
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            const mpq_class f = a[r][c] / a[c][c];
            for (int j = c; j <= n; ++j)
                a[r][j] -= f * a[c][j];
        }
    }
    std::vector<mpq_class> x(n);
    for (int i = 0; i < n; ++i)
        x[i] = a[i][n] / a[i][i];
    return x;
}

} // namespace

TEST_CASE("parallel matmul is bit-identical to the serial reference")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 5; ++t) {
        const IMatrix a = random_box(37, 23, rng, 1e-9);
        const IMatrix b = random_box(23, 41, rng, 1e-12);
        CHECK(same_bits(kernels::matmul(a, b), kernels::matmul_serial(a, b)));
        const Eigen::MatrixXd f = Eigen::MatrixXd::Random(19, 23);
        CHECK(same_bits(kernels::matmul(f, b), kernels::matmul_serial(f, b)));
    }
}

TEST_CASE("matmul encloses the float product of midpoints")
{
    std::mt19937_64 rng(5);
    const IMatrix a = random_box(8, 6, rng, 0.0);
    const IMatrix b = random_box(6, 7, rng, 0.0);
    const IMatrix c = kernels::matmul(a, b);
    const Eigen::MatrixXd am = a.mid(), bm = b.mid();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 7; ++j) {
            mpq_class exact = 0;
            for (int k = 0; k < 6; ++k)
                exact += mpq_class(am(i, k)) * mpq_class(bm(k, j));
            CHECK(mpq_class(c(i, j).lo()) <= exact);
            CHECK(exact <= mpq_class(c(i, j).hi()));
        }
}

TEST_CASE("verified_solve")
{
    SUBCASE("identity")
    {
        IMatrix rhs(3, 1);
        rhs(0, 0) = Interval(1.0);
        const IMatrix x = verified_solve(IMatrix::identity(3), rhs);
        CHECK(x(0, 0).contains(1.0));
        CHECK(x(1, 0).contains(0.0));
        CHECK(x(2, 0).contains(0.0));
    }
    SUBCASE("random systems against exact rational elimination")
    {
        std::mt19937_64 rng(17);
        for (int t = 0; t < 20; ++t) {
            Eigen::MatrixXd m = Eigen::MatrixXd::Random(5, 5) + 4.0 * Eigen::MatrixXd::Identity(5, 5);
            Eigen::VectorXd b = Eigen::VectorXd::Random(5);
            IMatrix rhs(5, 1);
            for (int i = 0; i < 5; ++i)
                rhs(i, 0) = Interval(b[i]);
            const IMatrix x = verified_solve(IMatrix::from_float(m), rhs);
            const auto exact = rational_solve(m, b);
            for (int i = 0; i < 5; ++i) {
                CHECK(mpq_class(x(i, 0).lo()) <= exact[i]);
                CHECK(exact[i] <= mpq_class(x(i, 0).hi()));
                CHECK(x(i, 0).width_up() < 1e-12);
            }
        }
    }
    SUBCASE("singular matrix")
    {
        Eigen::MatrixXd m(3, 3);
        m << 1, 2, 3, 1, 2, 3, 0, 1, 1;
        IMatrix rhs(3, 1);
        rhs(0, 0) = Interval(1.0);
        CHECK_THROWS_AS(verified_solve(IMatrix::from_float(m), rhs), NotVerified);
    }
}

TEST_CASE("op_norm2_upper")
{
    const Interval z = op_norm2_upper(IMatrix(4, 4));
    CHECK(z.lo() == 0.0);
    CHECK(z.hi() == 0.0);
    const Interval one = op_norm2_upper(IMatrix::identity(3));
    CHECK(one.hi() >= 1.0);
    CHECK(one.hi() <= 1.0 + 1e-12);
    for (int t = 0; t < 10; ++t) {
        const Eigen::MatrixXd m = Eigen::MatrixXd::Random(10, 10);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
        const double smax = svd.singularValues()[0];
        const Interval n = op_norm2_upper(IMatrix::from_float(m));
        CHECK(n.hi() >= smax);
        CHECK(n.hi() <= smax * 1.05);
        CHECK(n.lo() <= smax);
    }
}

TEST_CASE("induced norms bound the float norms")
{
    const Eigen::MatrixXd m = Eigen::MatrixXd::Random(6, 9);
    const IMatrix im = IMatrix::from_float(m);
    CHECK(norm_inf_up(im) >= m.cwiseAbs().rowwise().sum().maxCoeff());
    CHECK(norm_one_up(im) >= m.cwiseAbs().colwise().sum().maxCoeff());
    CHECK(frobenius_up(im) >= m.norm());
}
