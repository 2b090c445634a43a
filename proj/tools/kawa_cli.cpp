#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "kawa/certificate.hpp"
#include "kawa/errors.hpp"
#include "kawa/pipeline.hpp"

using namespace kawa;
using io::json;

namespace
{

enum Exit
{
    exit_ok = 0,
    exit_not_proven = 1,
    exit_config = 2,
    exit_missing = 3,
    exit_no_convergence = 4,
    exit_sweep_stalled = 5,
    exit_neumann = 6,
    exit_nu_range = 7,
    exit_verification = 8,
    exit_internal = 9
};

struct Ctx
{
    RunConfig cfg;
    std::string config_text;
    bool verbose = false;

    std::string stage(const std::string& name) const { return cfg.stage_dir + "/" + name + ".json"; }
    void log(const std::string& m) const
    {
        if (verbose)
            std::cerr << "[kawa] " << m << "\n";
    }
};

struct Loaded
{
    json doc;
    std::string hash;
};

Loaded load(const std::string& path)
{
    const std::string text = io::read_file(path);
    try {
        return {json::parse(text), io::sha256_hex(text)};
    } catch (const json::exception& e) {
        throw MissingArtifact("unreadable artifact " + path + ": " + e.what());
    }
}

std::string write_stage(const Ctx& c, const std::string& name, const json& j)
{
    const std::string text = io::dump(j);
    io::atomic_write(c.stage(name), text);
    c.log("wrote " + c.stage(name));
    return io::sha256_hex(text);
}

std::string config_hash(const Ctx& c) { return io::sha256_hex(config_to_text(c.cfg)); }

ProveStage prove_stage_from(const Ctx& c, const json& j)
{
    ProveStage ps;
    ps.p = params_of(c.cfg);
    ps.u0 = io::iseq_from_json(j.at("u0"));
    ps.cert = io::proof_from_json(j.at("certificate"), ps.p);
    return ps;
}

std::vector<EigenCertificate> eigs_from(const json& j)
{
    std::vector<EigenCertificate> out;
    for (const auto& e : j.at("eigs"))
        out.push_back(io::eigen_from_json(e));
    return out;
}

int cmd_approx(const Ctx& c)
{
    const NewtonResult r = run_approx(c.cfg);
    c.log("newton converged in " + std::to_string(r.iterations) + " iterations");
    json j;
    j["stage"] = "approx";
    j["T"] = c.cfg.T;
    j["c"] = c.cfg.c;
    j["d"] = c.cfg.d;
    j["N0"] = c.cfg.N0;
    j["iterations"] = r.iterations;
    j["residuals"] = r.residuals;
    j["u_tilde"] = io::to_json(r.u);
    j["input_hashes"] = {{"config", config_hash(c)}};
    write_stage(c, "approx", j);
    return exit_ok;
}

int cmd_prove(const Ctx& c)
{
    const Loaded a = load(c.stage("approx"));
    ProveStage ps = run_prove(c.cfg, io::fseq_from_json(a.doc.at("u_tilde")));
    ps.cert.input_hashes = {{"config", config_hash(c)}, {"approx", a.hash}};
    c.log("soliton: " + io::to_string(ps.cert.status) + " r0 = " + to_string(ps.cert.r0));
    json j;
    j["stage"] = "prove";
    j["k_trace"] = c.cfg.k_trace;
    j["u0"] = io::to_json(ps.u0);
    j["certificate"] = io::to_json(ps.cert);
    write_stage(c, "prove", j);
    return ps.cert.proven() && ps.cert.periodic.status == PeriodicStatus::proven ? exit_ok : exit_not_proven;
}

int cmd_eigs(const Ctx& c)
{
    const Loaded pr = load(c.stage("prove"));
    const ProveStage ps = prove_stage_from(c, pr.doc);
    const auto eigs = run_eigs(c.cfg, ps);
    json arr = json::array();
    bool ok = eigs.size() == 3;
    for (const auto& e : eigs) {
        c.log("nu_" + std::to_string(e.k) + ": " + io::to_string(e.status) + " " + to_string(e.nu));
        arr.push_back(io::to_json(e));
        ok = ok && e.proven();
    }
    json j;
    j["stage"] = "eigs";
    j["N_eig"] = c.cfg.N_eig;
    j["eigs"] = arr;
    j["input_hashes"] = {{"config", config_hash(c)}, {"prove", pr.hash}};
    write_stage(c, "eigs", j);
    return ok ? exit_ok : exit_not_proven;
}

int cmd_exclude(const Ctx& c)
{
    const Loaded pr = load(c.stage("prove"));
    const Loaded ei = load(c.stage("eigs"));
    const ProveStage ps = prove_stage_from(c, pr.doc);
    const ExclusionReport rep = run_exclude(c.cfg, ps, eigs_from(ei.doc));
    c.log("exclusion: " + std::to_string(rep.total_steps) + " steps");
    json j = io::to_json(rep);
    j["stage"] = "exclude";
    j["input_hashes"] = {{"config", config_hash(c)}, {"prove", pr.hash}, {"eigs", ei.hash}};
    write_stage(c, "exclude", j);
    return rep.complete ? exit_ok : exit_not_proven;
}

int cmd_stability(const Ctx& c)
{
    const Loaded pr = load(c.stage("prove"));
    const Loaded ei = load(c.stage("eigs"));
    const Loaded ex = load(c.stage("exclude"));
    const ProveStage ps = prove_stage_from(c, pr.doc);
    const StabilityReport r = run_stability(c.cfg, ps, eigs_from(ei.doc), io::exclusion_from_json(ex.doc));
    c.log("stability: " + io::to_string(r.verdict) + " tau = " + to_string(r.tau));
    json j = io::to_json(r);
    j["stage"] = "stability";
    j["input_hashes"] = {{"config", config_hash(c)}, {"prove", pr.hash}, {"eigs", ei.hash}, {"exclude", ex.hash}};
    write_stage(c, "stability", j);
    return r.verdict == Verdict::stable ? exit_ok : exit_not_proven;
}

std::string utc_now()
{
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

int cmd_certify(const Ctx& c)
{
    json doc;
    json hashes;
    hashes["config"] = config_hash(c);
    for (const char* name : {"approx", "prove", "eigs", "exclude", "stability"}) {
        const Loaded l = load(c.stage(name));
        hashes[name] = l.hash;
        doc[name] = l.doc;
    }
    doc["config"] = json::parse(config_to_text(c.cfg));
    doc["input_hashes"] = hashes;
    doc["created"] = utc_now();

    const bool proven = doc["prove"]["certificate"]["status"] == "Proven" &&
                        doc["prove"]["certificate"]["periodic"]["status"] == "Proven";
    bool eig_ok = true;
    for (const auto& e : doc["eigs"]["eigs"])
        eig_ok = eig_ok && e["status"] == "Proven";
    const bool all = proven && eig_ok && doc["exclude"]["complete"].get<bool>() &&
                     doc["stability"]["verdict"] == "Stable";
    doc["status"] = all ? "Proven" : "Failed";
    doc["content_hash"] = io::content_hash(doc);
    const std::string path = c.cfg.out_dir + "/certificate.json";
    io::atomic_write(path, io::dump(doc));
    c.log("wrote " + path);
    return all ? exit_ok : exit_not_proven;
}

int cmd_export_plot(const Ctx& c)
{
    const Loaded pr = load(c.stage("prove"));
    const ProveStage ps = prove_stage_from(c, pr.doc);
    const FSeq um = mid(ps.u0);
    const int M = 2048;
    std::vector<double> xs(M);
    for (int i = 0; i < M; ++i)
        xs[i] = -c.cfg.d + 2.0 * c.cfg.d * i / M;
    const auto ys = sample(um, xs);
    std::ostringstream csv;
    csv.precision(17);
    csv << "x,u0\n";
    for (int i = 0; i < M; ++i)
        csv << xs[i] << "," << ys[i] << "\n";
    io::atomic_write(c.cfg.out_dir + "/u0.csv", csv.str());

    // Zu against d for the profile computed on the smallest box
    const auto rows = zu_decay_study(c.cfg, {30.0, 40.0, 50.0, 60.0});
    std::ostringstream zt;
    zt.precision(17);
    zt << "d,Zu1_upper,log_Zu1\n";
    for (const auto& r : rows)
        zt << r.d << "," << r.Zu1.hi() << "," << std::log(r.Zu1.hi()) << "\n";
    io::atomic_write(c.cfg.out_dir + "/zu_vs_d.csv", zt.str());
    c.log("wrote u0.csv and zu_vs_d.csv in " + c.cfg.out_dir);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Validated numerics for Kawahara solitary waves"};
    app.require_subcommand(1);
    std::string config_path, out_dir, stage_dir;
    int jobs = 0;
    bool verbose = false;
    app.add_option("--config", config_path, "JSON run configuration");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--stage-artifacts", stage_dir, "directory of per-stage JSON artifacts");
    app.add_option("--jobs", jobs, "OpenMP threads")->check(CLI::NonNegativeNumber);
    app.add_flag("--verbose", verbose, "progress on stderr");

    std::map<std::string, int (*)(const Ctx&)> cmds = {
        {"approx", cmd_approx},   {"prove", cmd_prove},         {"eigs", cmd_eigs},
        {"exclude", cmd_exclude}, {"stability", cmd_stability}, {"certify", cmd_certify},
        {"export-plot", cmd_export_plot}};
    for (const auto& [name, fn] : cmds)
        app.add_subcommand(name, name + " stage")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        Ctx c;
        c.verbose = verbose;
        if (!config_path.empty())
            c.cfg = load_config(config_path);
        if (!out_dir.empty()) {
            c.cfg.out_dir = out_dir;
            if (stage_dir.empty())
                c.cfg.stage_dir = out_dir + "/stages";
        }
        if (!stage_dir.empty())
            c.cfg.stage_dir = stage_dir;
        c.cfg.validate();
        if (jobs > 0)
            omp_set_num_threads(jobs);
        const std::string name = app.get_subcommands().front()->get_name();
        const auto t0 = std::chrono::steady_clock::now();
        const int rc = cmds.at(name)(c);
        c.log(name + " finished in " +
              std::to_string(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()) + " s");
        return rc;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const MissingArtifact& e) {
        std::cerr << e.what() << "\n";
        return exit_missing;
    } catch (const NoConvergence& e) {
        std::cerr << "no convergence: " << e.what() << "\n";
        return exit_no_convergence;
    } catch (const SweepStalled& e) {
        std::cerr << "sweep stalled: " << e.what() << "\n";
        return exit_sweep_stalled;
    } catch (const NeumannFails& e) {
        std::cerr << "neumann bound fails: " << e.what() << "\n";
        return exit_neumann;
    } catch (const NuOutOfRange& e) {
        std::cerr << "nu out of range: " << e.what() << "\n";
        return exit_nu_range;
    } catch (const Error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return exit_verification;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}
