#pragma once

#include <json.hpp>

#include "monoirr/closed_forms.hpp"
#include "monoirr/monomial.hpp"
#include "monoirr/screening.hpp"
#include "monoirr/solutions.hpp"

namespace monoirr {

using Json = nlohmann::json;

// Objects use nlohmann's default std::map storage, so keys come out sorted
// and dump() is canonical.

Json to_json(const SolutionTuple& t);
Json to_json(const ReductionCertificate& c);
Json to_json(const MonomialReport& r);
Json to_json(const ClassificationVerdict& v, bool with_witnesses);
Json to_json(const GenericWitness& w);
Json to_json(const ScreenReport& r);
Json to_json(const DensityReport& d);
Json to_json(const FamilyParams& p);
Json to_json(const ClosedFormMismatch& m);
Json to_json(const FamilyReport& r);

/// Strict reader: exactly the six certificate keys, all integers.
/// Throws InvalidArgument otherwise.
ReductionCertificate certificate_from_json(const Json& j);

}  // namespace monoirr
