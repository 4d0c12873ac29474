#pragma once

#include <nlohmann/json_fwd.hpp>

#include "goeritz/matrix.hpp"
#include "goeritz/obstruction.hpp"
#include "goeritz/sp_element.hpp"
#include "goeritz/sweeps.hpp"

// JSON shapes used by the CLI:
//   SpElement: {"omega":+-1,"k":..,"ell":..,"m":..,"n":..,"delta":+-1,"p":..}
//   matrices:  nested arrays of integers (decimal strings when oversized)
//   report:    {"conditions": [...], "families": [...], "certificate": ...,
//               "verdict": "..."}

namespace goeritz {

nlohmann::json to_json(const Int& v);
nlohmann::json to_json(const Mat2& m);
nlohmann::json to_json(const Mat4& m);
nlohmann::json to_json(const SpElement& e);
nlohmann::json to_json(const ObstructionReport& r);
nlohmann::json to_json(const VerificationReport& r);

SpElement sp_element_from_json(const nlohmann::json& j);

}  // namespace goeritz
