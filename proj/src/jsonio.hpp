#pragma once

#include <json.hpp>

#include "autgroup.hpp"
#include "existence.hpp"
#include "ideals.hpp"
#include "maps.hpp"
#include "verify.hpp"

namespace psell {

using Json = nlohmann::json;

// All indices in JSON payloads are 1-based and refer to the user's
// coordinate order; rationals are strings "num/den", complex values are
// {"re": "...", "im": "..."} pairs.

Json grat_to_json(const GRat& v);
GRat grat_from_json(const Json& j);

std::vector<unsigned> exponents_from_json(const Json& j, const std::string& what);

Json pattern_to_json(const AdmissiblePattern& pat);
AdmissiblePattern pattern_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json grat_vector_to_json(const std::vector<GRat>& v);
std::vector<GRat> grat_vector_from_json(const Json& j);

Json map_to_json(const ClassifiedMap& h);
ClassifiedMap map_from_json(const Json& j);

Json candidate_to_json(const CandidateMap& cand);
CandidateMap candidate_from_json(const Json& j);

Json aut_to_json(const CanonicalAut& t);
CanonicalAut aut_from_json(const Json& j);
AutElement element_from_json(const ExponentSignature& target, const Json& j);

Json certificate_to_json(const InfeasibilityCertificate& cert);
InfeasibilityCertificate certificate_from_json(const Json& j);

Json existence_to_json(const ExistenceResult& res);
Json report_to_json(const ResidualReport& rep);
Json multiplicity_to_json(const MultiplicityResult& mr);

}  // namespace psell
