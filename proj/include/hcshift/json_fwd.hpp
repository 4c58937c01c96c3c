#pragma once

#include "json.hpp"

namespace hcshift {

// ordered_json keeps object key order stable, which the CLI relies on for
// byte-identical reports.
using Json = nlohmann::ordered_json;

}  // namespace hcshift
