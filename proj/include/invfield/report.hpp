#pragma once

#include <string>

#include "json.hpp"

#include "invfield/mixing.hpp"
#include "invfield/stats.hpp"

namespace invfield {

using Json = nlohmann::ordered_json;

Json to_json(const SU2Element& g);
Json to_json(const GroupElement& g);
Json to_json(const MixingReport& r);
Json to_json(const OrbitReport& r);
Json to_json(const S3ExactReport& r);
/// {test, statistic, p_value, n, alpha_decisions, seed}
Json to_json(const TestReport& r);
Json to_json(const CovarianceEstimate& est);

/// Formats an alpha level as it appears in alpha_decisions ("0.05", ...).
std::string alpha_key(double alpha);

}  // namespace invfield
