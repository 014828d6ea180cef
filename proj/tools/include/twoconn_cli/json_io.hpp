#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "twoconn/formulas.hpp"
#include "twoconn/mc.hpp"
#include "twoconn/models.hpp"
#include "twoconn/numeric.hpp"

namespace twoconn::cli {

using Json = nlohmann::ordered_json;

/// Shortest decimal string that round-trips the double.
std::string decimal(double value);
std::string decimal(std::int64_t value);

Json to_json(const ModelParams& p);
Json to_json(const CountEstimate& e);
Json to_json(const Estimate& e);
Json to_json(const XyzSummary& s, bool per_sample);
Json to_json(const KernelShapeSummary& s);
Json to_json(const TypicalityReport& r);

}  // namespace twoconn::cli
