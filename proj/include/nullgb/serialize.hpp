#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "nullgb/applications.hpp"
#include "nullgb/vanishing.hpp"

namespace nullgb {

using Json = nlohmann::ordered_json;

/// Parses JSON, also accepting unquoted object keys such as `{S: [[0,1]]}`.
Json parse_lenient_json(std::string_view text);

Scalar scalar_from_json(const RingSpec& ring, const Json& j);
Json scalar_to_json(const RingSpec& ring, const Scalar& x);
std::vector<Scalar> set_from_json(const RingSpec& ring, const Json& j);

/// `{ring?, axes: [{S: [...], psi: {elem: mult} | [mult...]}]}` or the short form
/// `{ring?, S: [[...], ...], psi?: [...]}`. The ring key, when present, overrides `ring`.
MultisetGrid grid_from_json(const RingSpec& ring, const Json& j);
/// As grid_from_json plus `E: [[...], ...]`.
PuncturedGrid punctured_grid_from_json(const RingSpec& ring, const Json& j);
Json grid_to_json(const MultisetGrid& grid);
Json punctured_grid_to_json(const PuncturedGrid& pgrid);

/// `{ring?, S: [[...]], B: {"(a1,...)": [[e1,...], ...]}}`.
VanishingSpec vanishing_spec_from_json(const RingSpec& ring, const Json& j);
Json vanishing_spec_to_json(const VanishingSpec& spec);
Json cert_report_to_json(const CertReport& r);

/// `{pgrid, planes: [{poly, degree}], t}`.
CoverInstance cover_instance_from_json(const RingSpec& ring, const Json& j);
Json cover_report_to_json(const RingSpec& ring, const CoverReport& r);

Json outcome_to_json(const Poly& f, const MonicFamily& family, const ReductionOutcome& out);
Json certificate_to_json(const Certificate& cert);
Json degree_report_to_json(const RingSpec& ring, const DegreeReport& d);
Json punctured_report_to_json(const PuncturedReport& r);
Json alon_furedi_to_json(const AlonFurediReport& r);

struct VerifyResult {
  bool witnesses = false;  // every generator is monic with the stated theta
  OutcomeChecks checks;
  bool ok() const { return witnesses && checks.all(); }
};

/// Re-checks a serialized certificate using only what it contains.
VerifyResult verify_certificate(const Json& cert);

}  // namespace nullgb
