#pragma once

#include <json.hpp>

#include "prym/configuration.hpp"
#include "prym/prym_map.hpp"
#include "prym/torsion.hpp"

namespace prym {

// Insertion-ordered JSON keeps the CLI output deterministic.
using Json = nlohmann::ordered_json;

// All numbers are explicit [re, im] pairs; the point at infinity is "inf".
Json to_json(const Complex& z);
Json to_json(const ProjPoint& p);
Json to_json(const MarkedConfiguration& cfg);
Json to_json(const NormalizedConfiguration& cfg);
Json to_json(const PolarizedPeriodMatrix& P);
Json to_json(const KleinSubgroup& g);
Json to_json(const IsogenyKernelReport& k);
Json to_json(const PrymResult& r);
Json to_json(const VerificationReport& r);

// Parsers throw std::invalid_argument on schema violations.
Complex complex_from_json(const Json& j);
ProjPoint point_from_json(const Json& j);
MarkedConfiguration configuration_from_json(const Json& j);
NormalizedConfiguration normalized_from_json(const Json& j);
PolarizedPeriodMatrix period_matrix_from_json(const Json& j);

}  // namespace prym
