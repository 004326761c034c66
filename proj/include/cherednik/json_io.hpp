#pragma once

#include <json.hpp>

#include "cherednik/dunkl.hpp"
#include "cherednik/root_system.hpp"
#include "cherednik/singular_locus.hpp"
#include "cherednik/subsystems.hpp"
#include "cherednik/trig_locus.hpp"

namespace cherednik {

using Json = nlohmann::ordered_json;

Json to_json(const RootSystem& rs);
Json to_json(const DynkinDiagram& dd);
Json to_json(const SubsystemEmbedding& e);
Json to_json(const RhsCondition& c);
Json to_json(const LineFamily& f);
Json to_json(const SingularLocus& locus);
Json to_json(const CanonicalLine& line);
Json to_json(const RationalPolynomial& p);
/// {reducible, witness: {stratum, family_source, l}}; the rational
/// decision reports the type itself as the stratum.
Json to_json(const CartanType& t, const Decision& d);
Json to_json(const TrigDecision& d);

CanonicalLine canonical_line_from_json(const Json& j);
RationalPolynomial polynomial_from_json(const Json& j, int nvars);
RhsCondition condition_from_json(const Json& j);
LineFamily family_from_json(const Json& j);

}  // namespace cherednik
