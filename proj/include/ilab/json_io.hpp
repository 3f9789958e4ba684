#ifndef ILAB_JSON_IO_HPP
#define ILAB_JSON_IO_HPP

#include <json.hpp>

#include "ilab/intersective.hpp"
#include "ilab/preset.hpp"

namespace ilab {

using Json = nlohmann::json;

Json to_json(const FactoredInt& f);
Json to_json(const Progression& p);
Json to_json(const GateCertificate& cert, const std::string& param = "t");
Json to_json(const SpecializationCertificate& cert);
Json to_json(const GaloisVerdict& v);
Json to_json(const CoverDatum& c);
Json to_json(const CompatibilityReport& r);
Json to_json(const EvidenceTable& t);
Json to_json(const IntersectiveCandidate& c);

/// Top-level run report: command, inputs, seeds, results.  Replaying the
/// inputs with the same seed reproduces identical output (the timestamp and
/// wall_ms fields excepted).
struct RunReport {
    std::string command;
    Json inputs;
    uint64_t seed = kDefaultSeed;
    unsigned threads = 0;
    Json results;
    long wall_ms = 0;
    std::string timestamp;
};

Json to_json(const RunReport& r);

/// The shipped report schema (also written to schemas/report.schema.json).
const std::string& report_schema_text();

/// Structural validation against the subset of JSON Schema the shipped
/// schema uses: type, properties, required, items, enum.
bool validate_against_schema(const Json& doc, const Json& schema, std::string* error = nullptr);
bool validate_report(const Json& report, std::string* error = nullptr);

}  // namespace ilab

#endif
