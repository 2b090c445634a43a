#include "kawa/approx.hpp"

#include <algorithm>
#include <cmath>

#include "kawa/errors.hpp"

namespace kawa
{

namespace
{

template <class T>
T mult_entry(const FourierSeq<T>& v, Parity parity, int n, int m)
{
    if (parity == Parity::even)
        return m == 0 ? v.at(n) : v.at(n - m) + v.at(n + m);
    return v.at(n - m) - v.at(n + m);
}

double two_sided_l2(const Eigen::VectorXd& r, Parity parity)
{
    const int f = first_index(parity);
    double s = 0.0;
    for (int i = 0; i < r.size(); ++i)
        s += fold_weight(i + f) * r[i] * r[i];
    return std::sqrt(s);
}

} // namespace

Eigen::MatrixXd mult_matrix(const FSeq& v, Parity parity, int max_row, int max_col)
{
    const int f = first_index(parity);
    Eigen::MatrixXd m(max_row + 1 - f, max_col + 1 - f);
    for (int n = f; n <= max_row; ++n)
        for (int k = f; k <= max_col; ++k)
            m(n - f, k - f) = mult_entry(v, parity, n, k);
    return m;
}

IMatrix mult_matrix(const ISeq& v, Parity parity, int max_row, int max_col)
{
    const int f = first_index(parity);
    IMatrix m(max_row + 1 - f, max_col + 1 - f);
#pragma omp parallel for schedule(static)
    for (int n = f; n <= max_row; ++n)
        for (int k = f; k <= max_col; ++k)
            m(n - f, k - f) = mult_entry(v, parity, n, k);
    return m;
}

std::vector<double> symbol_values(const Symbol& l, int max_index, double d)
{
    const double l1 = l.lam1.mid(), l2 = l.lam2.mid();
    std::vector<double> out(static_cast<std::size_t>(max_index) + 1);
    for (int n = 0; n <= max_index; ++n) {
        const double w2 = std::pow(M_PI * n / d, 2);
        out[n] = 1.0 + w2 * (l1 + l2 * w2);
    }
    return out;
}

Eigen::VectorXd fold_sqrt_weights(Parity parity, int max_index)
{
    const int f = first_index(parity);
    Eigen::VectorXd w(max_index + 1 - f);
    for (int n = f; n <= max_index; ++n)
        w[n - f] = std::sqrt(static_cast<double>(fold_weight(n)));
    return w;
}

FSeq sech_seed_coeffs(const KawaharaParams& p, int N0, double d)
{
    const SechSeed s = sech_seed(p);
    const int M = 1 << 14;
    std::vector<double> f(M), xs(M);
    for (int j = 0; j < M; ++j) {
        xs[j] = -d + 2.0 * d * j / M;
        const double ch = std::cosh(s.beta * xs[j]);
        f[j] = s.amplitude / (ch * ch);
    }
    std::vector<double> c(static_cast<std::size_t>(N0) + 1);
    for (int n = 0; n <= N0; ++n) {
        double acc = 0.0;
        for (int j = 0; j < M; ++j)
            acc += f[j] * std::cos(M_PI * n * xs[j] / d);
        c[n] = acc / M;
    }
    return FSeq(d, Parity::even, std::move(c));
}

NewtonResult newton_solve(const KawaharaParams& p, const NewtonConfig& cfg)
{
    return newton_solve(p, cfg, sech_seed_coeffs(p, cfg.N0, cfg.d));
}

NewtonResult newton_solve(const KawaharaParams& p, const NewtonConfig& cfg, const FSeq& seed)
{
    if (cfg.max_iter < 1 || !(cfg.residual_tol > 0))
        throw ConfigError("newton needs max_iter >= 1 and a positive tolerance");
    const int N0 = cfg.N0;
    const auto lv = symbol_values(p.l(), N0, cfg.d);
    const double l3 = p.lambda3.mid();
    const FSeq zero = FSeq::zeros(cfg.d, Parity::even, 0);

    NewtonResult res;
    FSeq u = truncate(FSeq(cfg.d, Parity::even, seed.coeffs()), N0);
    for (int it = 0; it <= cfg.max_iter; ++it) {
        const FSeq r = truncate(residual_F(u, p, zero), N0);
        Eigen::VectorXd rv = Eigen::Map<const Eigen::VectorXd>(r.coeffs().data(), N0 + 1);
        const double nr = two_sided_l2(rv, Parity::even);
        res.residuals.push_back(nr);
        res.iterations = it;
        if (nr <= cfg.residual_tol) {
            res.u = u;
            res.trivial = norm_l1(u) == 0.0;
            return res;
        }
        if (it == cfg.max_iter)
            break;
        Eigen::MatrixXd J = 2.0 * l3 * mult_matrix(u, Parity::even, N0, N0);
        for (int n = 0; n <= N0; ++n)
            J(n, n) += lv[n];
        const Eigen::VectorXd step = J.partialPivLu().solve(rv);
        std::vector<double> c(u.coeffs());
        for (int n = 0; n <= N0; ++n)
            c[n] -= step[n];
        u = FSeq(cfg.d, Parity::even, std::move(c));
    }
    std::string hist;
    for (double r : res.residuals)
        hist += " " + std::to_string(r);
    throw NoConvergence("newton did not reach the residual tolerance; history:" + hist);
}

Eigen::MatrixXd truncated_operator(const FSeq& u0, const KawaharaParams& p, int N, Parity parity)
{
    const int f = first_index(parity);
    const auto lv = symbol_values(p.l(), N, u0.d());
    Eigen::MatrixXd m = 2.0 * p.lambda3.mid() * mult_matrix(u0, parity, N, N);
    for (int k = f; k <= N; ++k)
        m.col(k - f) /= lv[k];
    m += Eigen::MatrixXd::Identity(m.rows(), m.cols());
    return m;
}

Eigen::MatrixXd build_B(const FSeq& u0, const KawaharaParams& p, int N)
{
    if (N < 1)
        throw WindowTooSmall("build_B needs N >= 1");
    const Eigen::MatrixXd m = truncated_operator(u0, p, N);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    if (!lu.isInvertible())
        throw SingularTruncation("truncated operator is singular in floating point");
    return lu.inverse() - Eigen::MatrixXd::Identity(m.rows(), m.cols());
}

std::vector<ApproxEig> approx_eigs(const FSeq& u0, const KawaharaParams& p, int N, int count,
                                   const std::vector<Parity>& parities)
{
    const auto lv = symbol_values(p.l(), N, u0.d());
    std::vector<ApproxEig> all;
    for (Parity par : parities) {
        const int f = first_index(par);
        Eigen::MatrixXd m = 2.0 * p.lambda3.mid() * mult_matrix(u0, par, N, N);
        for (int k = f; k <= N; ++k)
            m(k - f, k - f) += lv[k];
        const Eigen::VectorXd s = fold_sqrt_weights(par, N);
        const Eigen::MatrixXd sym = s.asDiagonal() * m * s.cwiseInverse().asDiagonal();
        if ((sym - sym.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, sym.cwiseAbs().maxCoeff()))
            throw NotVerified("folded linearization is not symmetric");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (sym + sym.transpose()));
        for (int j = 0; j < std::min<int>(count, static_cast<int>(es.eigenvalues().size())); ++j) {
            Eigen::VectorXd y = es.eigenvectors().col(j);
            Eigen::Index big;
            y.cwiseAbs().maxCoeff(&big);
            if (y[big] < 0)
                y = -y;
            std::vector<double> c(static_cast<std::size_t>(N) + 1, 0.0);
            for (int k = f; k <= N; ++k)
                c[k] = y[k - f] / s[k - f];
            all.push_back({es.eigenvalues()[j], FSeq(u0.d(), par, std::move(c))});
        }
    }
    std::stable_sort(all.begin(), all.end(), [](const ApproxEig& a, const ApproxEig& b) { return a.nu < b.nu; });
    if (static_cast<int>(all.size()) > count)
        all.resize(count);
    return all;
}

FSeq solve_linearized(const FSeq& u0, const KawaharaParams& p, int N, const FSeq& rhs)
{
    const auto lv = symbol_values(p.l(), N, u0.d());
    Eigen::MatrixXd m = 2.0 * p.lambda3.mid() * mult_matrix(u0, rhs.parity(), N, N);
    const int f = first_index(rhs.parity());
    for (int k = f; k <= N; ++k)
        m(k - f, k - f) += lv[k];
    Eigen::VectorXd b(N + 1 - f);
    for (int k = f; k <= N; ++k)
        b[k - f] = rhs.at(k);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
    Eigen::VectorXd x = lu.solve(b);
    // one step of iterative refinement
    x += lu.solve(b - m * x);
    std::vector<double> c(static_cast<std::size_t>(N) + 1, 0.0);
    for (int k = f; k <= N; ++k)
        c[k] = x[k - f];
    return FSeq(u0.d(), rhs.parity(), std::move(c));
}

} // namespace kawa
