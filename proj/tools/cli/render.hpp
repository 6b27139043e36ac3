#pragma once

#include <iosfwd>

#include "graphcvx/graphcvx.hpp"
#include "json.hpp"

namespace graphcvx::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json };

// Finite values as numbers, +inf as the string "inf".
Json value_json(double value);

// {claim, instance, checked, hypothesis_fired, verdict, witness?}
Json claim_json(const ClaimReport& report);

// Text mode is rendered from the same document, one "key: value" per line,
// so both modes always carry the same verdicts.
void print(std::ostream& out, const Json& report, Format format);

}  // namespace graphcvx::cli
