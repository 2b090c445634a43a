#include "kawa/eigen.hpp"

#include <cmath>

#include "kawa/errors.hpp"
#include "kawa/trace.hpp"

namespace kawa
{

EigenProblem build_augmented(int k, const ApproxEig& approx, const ISeq& u0, const KawaharaParams& p,
                             const ProofCertificate& soliton, int N, int trace_order)
{
    if (!soliton.proven())
        throw NotVerified("eigencouples need a proven soliton");
    const double nu = approx.nu;
    const Interval one_minus = Interval(1.0) - Interval(nu);
    if (!(one_minus.lo() > 0.0))
        throw NuOutOfRange("1 - nu is not positive");
    const Symbol lk = p.l().shifted(Interval(nu));
    if (!lk.certified_at_least_one())
        throw NuOutOfRange("shifted symbol is not certified >= 1");

    const double d = u0.d();
    const Parity par = approx.v.parity();
    const auto lv = lk.table(N, d);

    // normalize in floating point first so the interval data stay narrow
    double nrm = 0.0;
    for (int n = first_index(par); n <= std::min(N, approx.v.max_index()); ++n)
        nrm += fold_weight(n) * std::pow(lv[n].mid() * approx.v[n], 2);
    nrm = std::sqrt(2.0 * d * nrm);
    std::vector<double> c(static_cast<std::size_t>(N) + 1, 0.0);
    for (int n = first_index(par); n <= std::min(N, approx.v.max_index()); ++n)
        c[n] = approx.v[n] / nrm;
    const TraceSetup ts = build_trace(N, trace_order, d, par, lv);
    const ISeq v = project_trace_free(to_interval(FSeq(d, par, std::move(c))), ts);

    EigenProblem ep;
    ep.k = k;
    ep.parity = par;
    ep.nu_approx = nu;
    ep.one_minus_nu = one_minus;
    ep.symbol = lk;
    ep.lam3_k = p.lambda3 / one_minus;
    ep.kappa_k = p.kappa / one_minus;
    ep.W0 = scale(sqrt(Interval(2.0 * d)), v);
    ep.phi = apply_diag(lv, ep.W0);
    ep.eta = inner(ep.phi, ep.phi);
    ep.u0 = u0;
    ep.r0 = soliton.r0;
    ep.N = N;
    return ep;
}

LinearSystem eigen_system(const EigenProblem& ep)
{
    LinearSystem s;
    s.parity = ep.parity;
    s.N = ep.N;
    s.d = ep.u0.d();
    s.symbol = ep.symbol;
    s.v = scale(Interval(2.0) * ep.lam3_k, ep.u0);
    s.bordered = true;
    s.corner = Interval(0.0);
    s.row = scale(Interval(-1.0), ep.phi);
    s.col = scale(Interval(-1.0) / ep.one_minus_nu, ep.W0);
    return s;
}

LinearSystem isolation_system(const EigenProblem& ep)
{
    LinearSystem s = eigen_system(ep);
    s.row = scale(Interval(-1.0), ep.W0);
    s.col = scale(Interval(-1.0), ep.phi);
    return s;
}

BoundSet EigenBounds::as_bound_set() const
{
    BoundSet b;
    b.Y0 = Y0;
    b.Z1N = Z1N;
    b.Z1_tail = Z1_tail;
    // Z1 already carries Zu and the passage term
    b.Z1 = Z1;
    b.Zu = Interval(0.0);
    b.Z2_coeff = Z2;
    b.normB = normB;
    return b;
}

Interval augmented_first_residual(const EigenProblem& ep)
{
    return ep.eta - inner(ep.phi, apply_diag(ep.symbol.table(ep.W0.max_index(), ep.u0.d()), ep.W0));
}

EigenBounds eigen_bounds(const EigenProblem& ep, const Eigen::MatrixXd& pib)
{
    const LinearSystem s = eigen_system(ep);
    const DefectBounds db = defect_bounds(s, pib);
    const ISeq F = ep.phi + conv(s.v, ep.W0);

    EigenBounds out;
    out.normB = db.normB;
    out.passage = db.normB * Interval(2.0) * ep.kappa_k * ep.r0;
    out.Y0 = apply_inverse_norm(s, pib, Interval(0.0), F) + out.passage * sqrt(ep.eta);
    out.Z1N = db.Z1N;
    out.Z1_tail = db.Z1_tail;
    out.Zu = db.Zu;
    out.Z1 = db.Z1 + db.Zu + out.passage;
    out.Z2 = Interval(2.0) * db.normB / ep.one_minus_nu;
    return out;
}

EigenCertificate prove_eigencouple(const EigenProblem& ep, double slack)
{
    EigenCertificate cert;
    cert.k = ep.k;
    cert.parity = ep.parity;
    cert.nu_approx = ep.nu_approx;

    const Eigen::MatrixXd pib = approximate_inverse(eigen_system(ep));
    cert.bounds = eigen_bounds(ep, pib);
    const BoundSet bs = cert.bounds.as_bound_set();
    const ProofCertificate pc = check_contraction(bs);
    if (!pc.proven()) {
        cert.reason = pc.reason;
        return cert;
    }
    cert.radius = pc.r0;
    cert.nu = Interval(ep.nu_approx) + Interval::raw(-pc.r0.hi(), pc.r0.hi());
    if (ep.k == 2 && !cert.nu.contains(0.0)) {
        cert.reason = "nu_2 enclosure misses 0";
        return cert;
    }

    const LinearSystem iso = isolation_system(ep);
    const Eigen::MatrixXd pib_iso = approximate_inverse(iso);
    const DefectBounds db = defect_bounds(iso, pib_iso);
    const Interval z = db.Z1 + db.Zu + db.normB * Interval(2.0) * ep.kappa_k * ep.r0;
    if (!(z.hi() < 1.0)) {
        cert.reason = "isolation operator not certified invertible";
        return cert;
    }
    const Interval cb = db.normB / (Interval(1.0) - z);
    const Interval rho = Interval(slack) * ep.one_minus_nu / cb;
    cert.isolation = Interval(rho.lo());
    if (!(rho.lo() > pc.r0.hi())) {
        cert.reason = "isolation radius does not exceed the contraction radius";
        return cert;
    }
    cert.simple = true;
    cert.status = ProofStatus::proven;
    return cert;
}

Interval left_threshold(const ISeq& u0, const KawaharaParams& p, const Interval& r0)
{
    const Interval t = Interval(1.0) - Interval(2.0) * (p.lambda3 * norm_l1(u0) + p.kappa * r0);
    return Interval(rnd::next_down(t.lo()));
}

SweepStep sweep_step(const ISeq& u0, const KawaharaParams& p, const Interval& r0, Parity parity, double nu_star,
                     const SweepConfig& cfg)
{
    const Interval nu(nu_star);
    const Interval one_minus = Interval(1.0) - nu;
    LinearSystem s;
    s.parity = parity;
    s.N = cfg.N_sweep;
    s.d = u0.d();
    s.symbol = p.l().shifted(nu);
    s.v = scale(Interval(2.0) * p.lambda3 / one_minus, u0);
    const Eigen::MatrixXd pib = approximate_inverse(s);
    const DefectBounds db = defect_bounds(s, pib);
    const Interval gap = Interval(1.0) - db.Z1 - db.Zu;
    if (!(gap.lo() > 0.0))
        throw NotVerified("Z1 + Zu >= 1 at nu* = " + std::to_string(nu_star));
    const Interval c0 = db.normB / gap;
    const Interval pert = c0 * Interval(2.0) * p.kappa * r0 / one_minus;
    if (!(pert.hi() < 1.0))
        throw NotVerified("passage term breaks the Neumann bound at nu* = " + std::to_string(nu_star));
    const Interval C = c0 / (Interval(1.0) - pert);
    const double rad = (Interval(cfg.slack) * one_minus / C).lo();

    SweepStep st;
    st.nu_star = nu;
    st.C = C;
    st.covered = Interval::raw(rnd::sub_up(nu_star, rad), rnd::add_down(nu_star, rad));
    return st;
}

GapReport sweep_gap(const ISeq& u0, const KawaharaParams& p, const Interval& r0, Parity parity, double from, double to,
                    const SweepConfig& cfg)
{
    GapReport g;
    g.parity = parity;
    g.from = from;
    g.to = to;
    double nu = from;
    while (true) {
        if (static_cast<int>(g.steps.size()) >= cfg.max_steps)
            throw SweepStalled("step budget exhausted at nu* = " + std::to_string(nu));
        SweepStep st;
        try {
            st = sweep_step(u0, p, r0, parity, nu, cfg);
        } catch (const NotVerified& e) {
            throw SweepStalled(std::string("sweep stuck: ") + e.what());
        }
        const double reach = st.covered.hi();
        g.steps.push_back(st);
        if (reach >= to)
            break;
        if (!(reach - nu > cfg.min_step))
            throw SweepStalled("step size underflow at nu* = " + std::to_string(nu));
        nu = reach;
    }
    g.complete = true;
    return g;
}

ExclusionReport exclusion_sweep(const ISeq& u0, const KawaharaParams& p, const ProofCertificate& soliton,
                                const std::vector<EigenCertificate>& eigs, const SweepConfig& cfg)
{
    if (eigs.size() != 3)
        throw DomainMismatch("exclusion sweep needs three eigencouples");
    for (const auto& e : eigs)
        if (!e.proven())
            throw NotVerified("exclusion sweep needs proven eigencouples");
    if (eigs[0].parity != Parity::even || eigs[1].parity != Parity::odd || eigs[2].parity != Parity::even)
        throw DomainMismatch("expected parities even, odd, even for nu_1, nu_2, nu_3");

    const Interval r0 = soliton.r0;
    ExclusionReport rep;
    rep.threshold = left_threshold(u0, p, r0);
    const double thr = rep.threshold.hi();
    auto left_of = [](const EigenCertificate& e) { return rnd::sub_up(e.nu_approx, e.isolation.lo()); };
    auto right_of = [](const EigenCertificate& e) { return rnd::add_down(e.nu_approx, e.isolation.lo()); };

    struct Job
    {
        Parity parity;
        std::string label;
        double from, to;
    };
    const std::vector<Job> jobs = {
        {Parity::even, "(-inf, nu1)", thr, left_of(eigs[0])},
        {Parity::even, "(nu1, nu3)", right_of(eigs[0]), left_of(eigs[2])},
        {Parity::odd, "(-inf, nu2)", thr, left_of(eigs[1])},
        {Parity::odd, "(nu2, nu3]", right_of(eigs[1]), eigs[2].nu.hi()},
    };
    for (const Job& j : jobs) {
        GapReport g;
        if (j.from >= j.to) {
            // the isolation interval already reaches past the other end
            g.parity = j.parity;
            g.from = j.from;
            g.to = j.to;
            g.complete = true;
        } else {
            g = sweep_gap(u0, p, r0, j.parity, j.from, j.to, cfg);
        }
        g.label = j.label;
        rep.total_steps += static_cast<int>(g.steps.size());
        rep.gaps.push_back(std::move(g));
    }
    rep.complete = true;
    return rep;
}

} // namespace kawa
