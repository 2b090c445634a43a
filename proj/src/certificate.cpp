#include "kawa/certificate.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "kawa/errors.hpp"

namespace kawa::io
{

json to_json(const Interval& a)
{
    return {{"dec", {decimal_down(a.lo()), decimal_up(a.hi())}}, {"hex", to_hex(a)}};
}

Interval interval_from_json(const json& j)
{
    return from_hex(j.at("hex").get<std::string>());
}

std::string hex_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", x);
    return buf;
}

double parse_hex_double(const std::string& s)
{
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw DomainError("bad hex double: " + s);
    return x;
}

json to_json(const FSeq& u)
{
    json c = json::array();
    for (double x : u.coeffs())
        c.push_back(hex_double(x));
    return {{"d", u.d()}, {"parity", to_string(u.parity())}, {"coeffs", c}};
}

FSeq fseq_from_json(const json& j)
{
    std::vector<double> c;
    for (const auto& x : j.at("coeffs"))
        c.push_back(parse_hex_double(x.get<std::string>()));
    return FSeq(j.at("d").get<double>(), parity_from_string(j.at("parity").get<std::string>()), std::move(c));
}

json to_json(const ISeq& u)
{
    json c = json::array();
    for (const Interval& x : u.coeffs())
        c.push_back(to_hex(x));
    return {{"d", u.d()}, {"parity", to_string(u.parity())}, {"coeffs", c}};
}

ISeq iseq_from_json(const json& j)
{
    std::vector<Interval> c;
    for (const auto& x : j.at("coeffs"))
        c.push_back(from_hex(x.get<std::string>()));
    return ISeq(j.at("d").get<double>(), parity_from_string(j.at("parity").get<std::string>()), std::move(c));
}

json to_json(const BoundSet& b)
{
    return {{"Y0", to_json(b.Y0)},     {"Z1N", to_json(b.Z1N)}, {"Z1_tail", to_json(b.Z1_tail)},
            {"Z1", to_json(b.Z1)},     {"Zu1", to_json(b.Zu1)}, {"Zu2", to_json(b.Zu2)},
            {"Zu", to_json(b.Zu)},     {"Z2", to_json(b.Z2_coeff)}, {"normB", to_json(b.normB)},
            {"N", b.N},                {"N0", b.N0},            {"d", b.d}};
}

BoundSet bounds_from_json(const json& j)
{
    BoundSet b;
    b.Y0 = interval_from_json(j.at("Y0"));
    b.Z1N = interval_from_json(j.at("Z1N"));
    b.Z1_tail = interval_from_json(j.at("Z1_tail"));
    b.Z1 = interval_from_json(j.at("Z1"));
    b.Zu1 = interval_from_json(j.at("Zu1"));
    b.Zu2 = interval_from_json(j.at("Zu2"));
    b.Zu = interval_from_json(j.at("Zu"));
    b.Z2_coeff = interval_from_json(j.at("Z2"));
    b.normB = interval_from_json(j.at("normB"));
    b.N = j.at("N").get<int>();
    b.N0 = j.at("N0").get<int>();
    b.d = j.at("d").get<double>();
    return b;
}

std::string to_string(ProofStatus s) { return s == ProofStatus::proven ? "Proven" : "Failed"; }

std::string to_string(PeriodicStatus s)
{
    switch (s) {
    case PeriodicStatus::proven:
        return "Proven";
    case PeriodicStatus::failed:
        return "Failed";
    default:
        return "NotChecked";
    }
}

std::string to_string(Verdict v) { return v == Verdict::stable ? "Stable" : "Inconclusive"; }

namespace
{

ProofStatus proof_status(const std::string& s) { return s == "Proven" ? ProofStatus::proven : ProofStatus::failed; }

json params_json(const KawaharaParams& p)
{
    return {{"T", to_json(p.T)},           {"c", to_json(p.c)},
            {"lambda1", to_json(p.lambda1)}, {"lambda2", to_json(p.lambda2)},
            {"lambda3", to_json(p.lambda3)}, {"a", to_json(p.a_decay)},
            {"C0", to_json(p.C0)},           {"kappa", to_json(p.kappa)}};
}

} // namespace

json to_json(const ProofCertificate& c)
{
    json j;
    j["params"] = params_json(c.params);
    j["d"] = c.bounds.d;
    j["N"] = c.bounds.N;
    j["N0"] = c.bounds.N0;
    j["bounds"] = to_json(c.bounds);
    j["r0"] = to_json(c.r0);
    j["r_max"] = to_json(c.r_max);
    j["inverse_norm"] = to_json(c.inverse_norm_bound);
    j["status"] = to_string(c.status);
    j["reason"] = c.reason;
    j["periodic"] = {{"status", to_string(c.periodic.status)},
                     {"r_tilde", to_json(c.periodic.r_tilde)},
                     {"reason", c.periodic.reason}};
    j["input_hashes"] = c.input_hashes;
    return j;
}

ProofCertificate proof_from_json(const json& j, const KawaharaParams& p)
{
    ProofCertificate c;
    c.params = p;
    c.bounds = bounds_from_json(j.at("bounds"));
    c.r0 = interval_from_json(j.at("r0"));
    c.r_max = interval_from_json(j.at("r_max"));
    c.inverse_norm_bound = interval_from_json(j.at("inverse_norm"));
    c.status = proof_status(j.at("status").get<std::string>());
    c.reason = j.value("reason", "");
    const auto& per = j.at("periodic");
    const std::string ps = per.at("status").get<std::string>();
    c.periodic.status = ps == "Proven" ? PeriodicStatus::proven
                        : ps == "Failed" ? PeriodicStatus::failed
                                         : PeriodicStatus::not_checked;
    c.periodic.r_tilde = interval_from_json(per.at("r_tilde"));
    c.periodic.reason = per.value("reason", "");
    c.input_hashes = j.value("input_hashes", std::map<std::string, std::string>{});
    return c;
}

json to_json(const EigenCertificate& c)
{
    const EigenBounds& b = c.bounds;
    return {{"k", c.k},
            {"parity", to_string(c.parity)},
            {"nu_approx", hex_double(c.nu_approx)},
            {"nu", to_json(c.nu)},
            {"radius", to_json(c.radius)},
            {"isolation", to_json(c.isolation)},
            {"simple", c.simple},
            {"status", to_string(c.status)},
            {"reason", c.reason},
            {"bounds",
             {{"Y0", to_json(b.Y0)},
              {"Z1N", to_json(b.Z1N)},
              {"Z1_tail", to_json(b.Z1_tail)},
              {"Zu", to_json(b.Zu)},
              {"passage", to_json(b.passage)},
              {"Z1", to_json(b.Z1)},
              {"Z2", to_json(b.Z2)},
              {"normB", to_json(b.normB)}}}};
}

EigenCertificate eigen_from_json(const json& j)
{
    EigenCertificate c;
    c.k = j.at("k").get<int>();
    c.parity = parity_from_string(j.at("parity").get<std::string>());
    c.nu_approx = parse_hex_double(j.at("nu_approx").get<std::string>());
    c.nu = interval_from_json(j.at("nu"));
    c.radius = interval_from_json(j.at("radius"));
    c.isolation = interval_from_json(j.at("isolation"));
    c.simple = j.at("simple").get<bool>();
    c.status = proof_status(j.at("status").get<std::string>());
    c.reason = j.value("reason", "");
    const auto& b = j.at("bounds");
    c.bounds.Y0 = interval_from_json(b.at("Y0"));
    c.bounds.Z1N = interval_from_json(b.at("Z1N"));
    c.bounds.Z1_tail = interval_from_json(b.at("Z1_tail"));
    c.bounds.Zu = interval_from_json(b.at("Zu"));
    c.bounds.passage = interval_from_json(b.at("passage"));
    c.bounds.Z1 = interval_from_json(b.at("Z1"));
    c.bounds.Z2 = interval_from_json(b.at("Z2"));
    c.bounds.normB = interval_from_json(b.at("normB"));
    return c;
}

json to_json(const ExclusionReport& r)
{
    json gaps = json::array();
    for (const auto& g : r.gaps) {
        json steps = json::array();
        for (const auto& s : g.steps)
            steps.push_back({{"nu_star", to_json(s.nu_star)}, {"C", to_json(s.C)}, {"covered", to_json(s.covered)}});
        gaps.push_back({{"parity", to_string(g.parity)},
                        {"label", g.label},
                        {"from", hex_double(g.from)},
                        {"to", hex_double(g.to)},
                        {"complete", g.complete},
                        {"steps", steps}});
    }
    return {{"threshold", to_json(r.threshold)},
            {"gaps", gaps},
            {"total_steps", r.total_steps},
            {"complete", r.complete}};
}

ExclusionReport exclusion_from_json(const json& j)
{
    ExclusionReport r;
    r.threshold = interval_from_json(j.at("threshold"));
    r.total_steps = j.at("total_steps").get<int>();
    r.complete = j.at("complete").get<bool>();
    for (const auto& gj : j.at("gaps")) {
        GapReport g;
        g.parity = parity_from_string(gj.at("parity").get<std::string>());
        g.label = gj.at("label").get<std::string>();
        g.from = parse_hex_double(gj.at("from").get<std::string>());
        g.to = parse_hex_double(gj.at("to").get<std::string>());
        g.complete = gj.at("complete").get<bool>();
        for (const auto& sj : gj.at("steps"))
            g.steps.push_back({interval_from_json(sj.at("nu_star")), interval_from_json(sj.at("C")),
                               interval_from_json(sj.at("covered"))});
        r.gaps.push_back(std::move(g));
    }
    return r;
}

json to_json(const StabilityReport& r)
{
    return {{"C1", to_json(r.C1)},
            {"residual", to_json(r.residual)},
            {"eps", to_json(r.eps)},
            {"main_term", to_json(r.main_term)},
            {"tau", to_json(r.tau)},
            {"spectral_conditions", r.spectral_ok},
            {"verdict", to_string(r.verdict)},
            {"reason", r.reason},
            {"V", to_json(r.V)}};
}

std::string sha256_hex(const std::string& bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 failed");
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += digits[md[i] >> 4];
        out += digits[md[i] & 15];
    }
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void atomic_write(const std::string& path, const std::string& content)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path())
        fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out)
            throw Error("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw MissingArtifact("missing artifact " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string content_hash(const json& j)
{
    json copy = j;
    copy.erase("created");
    return sha256_hex(dump(copy));
}

} // namespace kawa::io
