#include "kawa/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kawa/errors.hpp"
#include "kawa/trace.hpp"

namespace kawa
{

using nlohmann::json;

void RunConfig::validate() const
{
    if (N < 1 || N0 < 1 || N_eig < 1 || k_trace < 1 || newton_max_iter < 1 || sweep.N_sweep < 1 || sweep.max_steps < 1)
        throw ConfigError("all counts must be positive");
    if (N > N0)
        throw ConfigError("N must not exceed N0");
    if (!(d > 0.0))
        throw ConfigError("d must be positive");
    if (!(newton_tol > 0.0))
        throw ConfigError("newton tolerance must be positive");
    if (!(sweep.slack > 0.0 && sweep.slack < 1.0))
        throw ConfigError("sweep slack must lie in (0, 1)");
}

RunConfig config_from_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse: ") + e.what());
    }
    RunConfig c;
    try {
        // T and c stay decimal strings so they are enclosed exactly
        c.T = j.value("T", c.T);
        c.c = j.value("c", c.c);
        c.d = j.value("d", c.d);
        c.N = j.value("N", c.N);
        c.N0 = j.value("N0", c.N0);
        c.k_trace = j.value("k_trace", c.k_trace);
        c.N_eig = j.value("N_eig", c.N_eig);
        if (j.contains("newton")) {
            c.newton_max_iter = j["newton"].value("max_iter", c.newton_max_iter);
            c.newton_tol = j["newton"].value("tol", c.newton_tol);
        }
        if (j.contains("sweep")) {
            c.sweep.N_sweep = j["sweep"].value("N_sweep", c.sweep.N_sweep);
            c.sweep.slack = j["sweep"].value("slack", c.sweep.slack);
            c.sweep.max_steps = j["sweep"].value("max_steps", c.sweep.max_steps);
            c.sweep.min_step = j["sweep"].value("min_step", c.sweep.min_step);
        }
        if (j.contains("output")) {
            c.out_dir = j["output"].value("out", c.out_dir);
            c.stage_dir = j["output"].value("stage_artifacts", c.stage_dir);
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field: ") + e.what());
    }
    c.validate();
    return c;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_text(ss.str());
}

std::string config_to_text(const RunConfig& c, bool with_output)
{
    json j;
    j["T"] = c.T;
    j["c"] = c.c;
    j["d"] = c.d;
    j["N"] = c.N;
    j["N0"] = c.N0;
    j["k_trace"] = c.k_trace;
    j["N_eig"] = c.N_eig;
    j["newton"] = {{"max_iter", c.newton_max_iter}, {"tol", c.newton_tol}};
    j["sweep"] = {{"N_sweep", c.sweep.N_sweep},
                  {"slack", c.sweep.slack},
                  {"max_steps", c.sweep.max_steps},
                  {"min_step", c.sweep.min_step}};
    if (with_output)
        j["output"] = {{"out", c.out_dir}, {"stage_artifacts", c.stage_dir}};
    return j.dump(2);
}

KawaharaParams params_of(const RunConfig& cfg)
{
    return make_params(parse_decimal(cfg.T), parse_decimal(cfg.c), cfg.d);
}

NewtonResult run_approx(const RunConfig& cfg)
{
    NewtonConfig nc;
    nc.N0 = cfg.N0;
    nc.d = cfg.d;
    nc.max_iter = cfg.newton_max_iter;
    nc.residual_tol = cfg.newton_tol;
    NewtonResult r = newton_solve(params_of(cfg), nc);
    if (r.trivial)
        throw NoConvergence("newton converged to the zero solution");
    return r;
}

ProveStage run_prove(const RunConfig& cfg, const FSeq& u_tilde)
{
    ProveStage ps;
    ps.p = params_of(cfg);
    const int n0 = u_tilde.max_index();
    const TraceSetup ts = build_trace(n0, cfg.k_trace, cfg.d, Parity::even, ps.p.l().table(n0, cfg.d));
    ps.u0 = project_trace_free(to_interval(u_tilde), ts);
    const Eigen::MatrixXd pib = approximate_inverse(soliton_system(ps.u0, ps.p, cfg.N));
    const BoundSet b = compute_bounds(ps.u0, pib, ps.p, cfg.N);
    ps.cert = check_contraction(b);
    ps.cert.params = ps.p;
    ps.cert.periodic = check_periodic(ps.cert, ps.p, cfg.d);
    return ps;
}

std::vector<EigenCertificate> run_eigs(const RunConfig& cfg, const ProveStage& ps)
{
    if (!ps.cert.proven())
        throw NotVerified("eigencouples need a proven soliton");
    const auto approx = approx_eigs(mid(ps.u0), ps.p, cfg.N_eig, 3);
    std::vector<EigenCertificate> out(approx.size());
    for (std::size_t k = 0; k < approx.size(); ++k) {
        const EigenProblem ep = build_augmented(static_cast<int>(k) + 1, approx[k], ps.u0, ps.p, ps.cert, cfg.N_eig,
                                                cfg.k_trace);
        out[k] = prove_eigencouple(ep, cfg.sweep.slack);
    }
    return out;
}

ExclusionReport run_exclude(const RunConfig& cfg, const ProveStage& ps, const std::vector<EigenCertificate>& eigs)
{
    return exclusion_sweep(ps.u0, ps.p, ps.cert, eigs, cfg.sweep);
}

StabilityReport run_stability(const RunConfig& cfg, const ProveStage& ps, const std::vector<EigenCertificate>& eigs,
                              const ExclusionReport& rep)
{
    return albert_check(ps.u0, ps.p, ps.cert, eigs, rep, cfg.k_trace);
}

std::vector<ZuDecayRow> zu_decay_table(const ISeq& u0, const KawaharaParams& p, const std::vector<double>& ds)
{
    const Symbol l = p.l();
    const KernelConstants k = kernel_constants(l);
    const ISeq v = scale(Interval(2.0) * p.lambda3, u0);
    // 2d (V, V*E) is the integral of v^2 cosh(2ax); it does not change when
    // the profile is zero-extended to a larger box
    const Interval integral = Interval(2.0 * u0.d()) * cosh_inner(v, k.a);
    std::vector<ZuDecayRow> rows;
    for (double d : ds) {
        if (d < u0.d())
            throw DomainMismatch("zu_decay_table needs d at least the profile half-width");
        const Interval zu1_sq = sqr(k.C0) * exp(Interval(-2.0) * k.a * Interval(d)) / k.a * integral;
        rows.push_back({d, sqrt(zu1_sq)});
    }
    return rows;
}

std::vector<ZuDecayRow> zu_decay_study(const RunConfig& cfg, const std::vector<double>& ds)
{
    if (ds.empty())
        throw DomainMismatch("zu_decay_study needs at least one d");
    RunConfig small = cfg;
    small.d = *std::min_element(ds.begin(), ds.end());
    small.N0 = static_cast<int>(std::lround(cfg.N0 * small.d / cfg.d));
    small.N = std::min(small.N, small.N0);
    const NewtonResult nr = run_approx(small);
    const KawaharaParams p = params_of(small);
    const TraceSetup ts = build_trace(small.N0, small.k_trace, small.d, Parity::even, p.l().table(small.N0, small.d));
    return zu_decay_table(project_trace_free(to_interval(nr.u), ts), p, ds);
}

double ls_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace kawa
