#pragma once

#include <json.hpp>

#include "tmac/sdp/certificate.hpp"

namespace tmac::sdp {

nlohmann::ordered_json to_json(const SdpProblem& p);
nlohmann::ordered_json to_json(const SdpSolution& s);
nlohmann::ordered_json to_json(const TensorReport& t);

/// Problem, solution and (optionally) the tensor check in one document.
nlohmann::ordered_json dump(const SdpProblem& p, const SdpSolution& s, const TensorReport* t = nullptr);

}  // namespace tmac::sdp
