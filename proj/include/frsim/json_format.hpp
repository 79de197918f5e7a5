#pragma once

#include <string>

#include "json.hpp"

namespace frsim {

// Like json::dump(2), but every floating-point number is written with exactly
// six decimals (non-finite values become null) so reports diff cleanly.
std::string format_json(const nlohmann::ordered_json& value);

}  // namespace frsim
