#ifndef KAWA_CERTIFICATE_HPP
#define KAWA_CERTIFICATE_HPP

#include <string>

#include <json.hpp>

#include "kawa/contraction.hpp"
#include "kawa/eigen.hpp"
#include "kawa/stability.hpp"

namespace kawa::io
{

using nlohmann::json;

// Intervals are written as {"dec": [lo, hi], "hex": "[lo,hi]"}; the hex form is
// exact and is the one read back.
json to_json(const Interval& a);
Interval interval_from_json(const json& j);

std::string hex_double(double x);
double parse_hex_double(const std::string& s);

json to_json(const FSeq& u);
FSeq fseq_from_json(const json& j);
json to_json(const ISeq& u);
ISeq iseq_from_json(const json& j);

json to_json(const BoundSet& b);
BoundSet bounds_from_json(const json& j);

json to_json(const ProofCertificate& c);
ProofCertificate proof_from_json(const json& j, const KawaharaParams& p);

json to_json(const EigenCertificate& c);
EigenCertificate eigen_from_json(const json& j);

json to_json(const ExclusionReport& r);
ExclusionReport exclusion_from_json(const json& j);

json to_json(const StabilityReport& r);

std::string to_string(ProofStatus s);
std::string to_string(PeriodicStatus s);
std::string to_string(Verdict v);

std::string sha256_hex(const std::string& bytes);
// Stable text form used for both files and hashes.
std::string dump(const json& j);
// Writes path.tmp and renames it over path.
void atomic_write(const std::string& path, const std::string& content);
// Throws MissingArtifact.
std::string read_file(const std::string& path);

// Hash of a document with the "created" field removed.
std::string content_hash(const json& j);

} // namespace kawa::io

#endif
