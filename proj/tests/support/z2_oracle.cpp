#include "z2_oracle.hpp"

#include <cmath>
#include <random>

#include "kawa/eigen.hpp"

namespace kawa::oracle
{

namespace
{

struct Toy
{
    Parity parity;
    double d;
    int N;
    double nu_k;
    double l1, l2, l3; // midpoint coefficients of l
    std::vector<double> u0; // even, stored
    std::vector<double> phi;
    double eta;
};

double lk(const Toy& t, int n)
{
    const double w2 = std::pow(M_PI * n / t.d, 2);
    return (1.0 + w2 * (t.l1 + t.l2 * w2) - t.nu_k) / (1.0 - t.nu_k);
}

// (nu, W) -> (F1, F2) with F2 on stored indices 0..N + support of u0.
std::vector<double> augmented_map(const Toy& t, double nu, const std::vector<double>& W)
{
    const int M = t.N + static_cast<int>(t.u0.size()) - 1;
    const int f = first_index(t.parity);
    auto w_at = [&](int n) {
        const int a = std::abs(n);
        if (a > t.N)
            return 0.0;
        const double s = (t.parity == Parity::odd && n < 0) ? -1.0 : 1.0;
        return s * W[a];
    };
    auto u_at = [&](int n) {
        const int a = std::abs(n);
        return a < static_cast<int>(t.u0.size()) ? t.u0[a] : 0.0;
    };
    std::vector<double> out(static_cast<std::size_t>(M) + 2, 0.0);
    double f1 = -t.eta;
    for (int n = f; n <= t.N; ++n)
        f1 += fold_weight(n) * t.phi[n] * lk(t, n) * W[n];
    out[0] = f1;
    const double v_scale = 2.0 * t.l3 / (1.0 - t.nu_k);
    const double mu = (nu - t.nu_k) / (1.0 - t.nu_k);
    for (int n = f; n <= M; ++n) {
        double conv = 0.0;
        for (int m = -M; m <= M; ++m)
            conv += u_at(n - m) * w_at(m);
        out[n + 1] = lk(t, n) * w_at(n) + v_scale * conv - mu * w_at(n);
    }
    return out;
}

} // namespace

std::vector<Z2Trial> z2_trials(int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const KawaharaParams p = make_params(parse_decimal("0.35"), parse_decimal("0.9"));
    std::vector<Z2Trial> out;
    for (int trial = 0; trial < count; ++trial) {
        Toy t;
        t.parity = trial % 2 ? Parity::odd : Parity::even;
        t.d = 3.0 + 5.0 * (0.5 + 0.5 * u(rng));
        t.N = 5;
        t.nu_k = -1.5 + 2.4 * (0.5 + 0.5 * u(rng));
        t.l1 = p.lambda1.mid();
        t.l2 = p.lambda2.mid();
        t.l3 = p.lambda3.mid();
        t.u0 = {0.1 * u(rng), 0.05 * u(rng), 0.02 * u(rng)};
        const int f = first_index(t.parity);

        std::vector<double> w0(t.N + 1, 0.0);
        double nrm = 0.0;
        for (int n = f; n <= t.N; ++n) {
            w0[n] = u(rng) / (1.0 + n * n);
            nrm += fold_weight(n) * std::pow(lk(t, n) * w0[n], 2);
        }
        for (auto& x : w0)
            x /= std::sqrt(nrm);
        t.phi.assign(t.N + 1, 0.0);
        t.eta = 0.0;
        for (int n = f; n <= t.N; ++n) {
            t.phi[n] = lk(t, n) * w0[n];
            t.eta += fold_weight(n) * t.phi[n] * t.phi[n];
        }

        EigenProblem ep;
        ep.k = 1;
        ep.parity = t.parity;
        ep.nu_approx = t.nu_k;
        ep.one_minus_nu = Interval(1.0) - Interval(t.nu_k);
        ep.symbol = p.l().shifted(Interval(t.nu_k));
        ep.lam3_k = p.lambda3 / ep.one_minus_nu;
        ep.kappa_k = p.kappa / ep.one_minus_nu;
        std::vector<Interval> wi(w0.begin(), w0.end());
        ep.W0 = ISeq(t.d, t.parity, wi);
        ep.phi = apply_diag(ep.symbol.table(t.N, t.d), ep.W0);
        ep.eta = inner(ep.phi, ep.phi);
        ep.u0 = ISeq(t.d, Parity::even, {Interval(t.u0[0]), Interval(t.u0[1]), Interval(t.u0[2])});
        ep.r0 = Interval(0.0);
        ep.N = t.N;
        const Eigen::MatrixXd pib = approximate_inverse(eigen_system(ep));
        const EigenBounds eb = eigen_bounds(ep, pib);

        // base point near the approximate couple and a random direction
        const double nu = t.nu_k + 1e-3 * u(rng);
        std::vector<double> W(w0), dW(t.N + 1, 0.0);
        double hw = 0.0;
        for (int n = f; n <= t.N; ++n) {
            W[n] += 1e-3 * u(rng);
            dW[n] = u(rng) / (1.0 + n * n);
            hw += fold_weight(n) * std::pow(lk(t, n) * dW[n], 2);
        }
        const double dnu = std::sqrt(hw) * (0.5 + 0.5 * u(rng)) * (u(rng) < 0 ? -1.0 : 1.0);
        const double h2 = dnu * dnu + hw;

        const double eps = 1e-2;
        std::vector<double> Wp(W), Wm(W);
        for (int n = f; n <= t.N; ++n) {
            Wp[n] += eps * dW[n];
            Wm[n] -= eps * dW[n];
        }
        const auto Fp = augmented_map(t, nu + eps * dnu, Wp);
        const auto F0 = augmented_map(t, nu, W);
        const auto Fm = augmented_map(t, nu - eps * dnu, Wm);

        // A = diag(1, L^{-1}) (pi^N + B) on the window; D^2 F lives in the window
        const int b = 1 + t.N + 1 - f;
        Eigen::VectorXd y(b);
        y[0] = (Fp[0] - 2.0 * F0[0] + Fm[0]) / (eps * eps);
        for (int n = f; n <= t.N; ++n)
            y[1 + n - f] = (Fp[n + 1] - 2.0 * F0[n + 1] + Fm[n + 1]) / (eps * eps);
        const Eigen::VectorXd z = pib * y;
        double meas = z[0] * z[0];
        for (int n = f; n <= t.N; ++n)
            meas += fold_weight(n) * z[1 + n - f] * z[1 + n - f];
        out.push_back({std::sqrt(meas) / h2, eb.Z2.hi()});
    }
    return out;
}

} // namespace kawa::oracle
