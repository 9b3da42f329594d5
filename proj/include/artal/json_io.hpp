#pragma once

#include <json.hpp>

#include "artal/census.hpp"
#include "artal/invariants.hpp"
#include "artal/zariski.hpp"

namespace artal {

using Json = nlohmann::ordered_json;

Json to_json(const Cyclotomic& c);  // ["p/q", "r/s"]: rational part, omega part
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

Json to_json(const ProjectivePoint& p);  // three normalized coordinates
ProjectivePoint point_from_json(const nlohmann::json& j);

Json to_json(const ProjectiveLine& l);

Json to_json(const SingularRecord& rec);
SingularRecord record_from_json(const nlohmann::json& j);

std::string encoding_to_string(const CanonicalEncoding& enc);
CanonicalEncoding encoding_from_string(const std::string& s);

Json to_json(const ArrangementType& t);
ArrangementType arrangement_type_from_json(const nlohmann::json& j);

Json to_json(const CensusRow& row);

Json to_json(const InvariantProfile& profile);

Json to_json(const ZariskiCertificate& cert);

/// Throws std::invalid_argument on structurally malformed certificates;
/// semantic failures are left to verify_certificate.
ZariskiCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace artal
