#pragma once

#include "prym/elliptic.hpp"
#include "prym/frobenius.hpp"
#include "prym/galois_cert.hpp"
#include "prym/perm_groups.hpp"
#include "prym/prym_census.hpp"

#include <json.hpp>

#include <complex>
#include <exception>
#include <string>

namespace prym {

using Json = nlohmann::json;

inline constexpr int kReportSchema = 1;

/// Evidence-grade numbers are tagged: {"approx": "<12 significant digits>"}.
Json approx(double value);
Json approx(std::complex<double> value);

Json to_json(const RatPoly& f);
Json to_json(const IntPoly& f);
Json to_json(const GaloisCertificate& cert);
Json to_json(const PrymPartition& part);
Json to_json(const LemmaKeyReport& report);
Json to_json(const FrobeniusData& data);
Json to_json(const HomZeroCertificate& cert);
Json to_json(const JRecord& record, const CmScreen& screen);
Json to_json(const RationalityEvidence& evidence);
Json to_json(const ShrinkageReport& report);
Json to_json(const CensusReport& report);

/// Wraps a payload as {"schema": 1, "command": ..., "result": ...}.
Json envelope(const std::string& command, Json result);

Json error_json(const std::exception& e);

/// Byte-stable serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& doc);

/// Markdown view of a report document, derived from the JSON alone.
std::string render_markdown(const Json& doc);

} // namespace prym
