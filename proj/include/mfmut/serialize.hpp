#pragma once

#include <json.hpp>

#include "mfmut/combinat.hpp"
#include "mfmut/mutation.hpp"
#include "mfmut/polytope.hpp"
#include "mfmut/toric.hpp"
#include "mfmut/weightmat.hpp"

namespace mfmut {

using Json = nlohmann::ordered_json;

/// Integers are emitted in the "p/q" encoding.
Json rat_json(const Rat& r);
Json rat_json(const Int& z);
Json rat_json(long long v);
Rat rat_from_json(const Json& j);

Json to_json(const MatchingField& f);
MatchingField field_from_json(const Json& j);

Json to_json(const WeightMatrix& m);
WeightMatrix weights_from_json(const Json& j);

Json to_json(const PlueckerWeightVector& w);

Json to_json(const VPolytope& p);
VPolytope polytope_from_json(const Json& j);

Json to_json(const PPolynomial& p);
PPolynomial poly_from_json(const Json& j);

Json to_json(const MutationStep& s);
Json to_json(const StepReport& r);
Json step_log(const std::vector<MutationStep>& steps, const std::vector<StepReport>& reports);

Json to_json(const InclusionReport& r);
Json to_json(const DegenCertificate& c);

}  // namespace mfmut
